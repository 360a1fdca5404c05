//! Defining sets, the derived binary linear codes, and their weight
//! distributions.
//!
//! A defining set D = {g_1, ..., g_n} of nonzero vectors in F_2^m yields the
//! code {(u.g_1, ..., u.g_n) : u in F_2^m}. Weight distributions are computed
//! along two independent routes: exhaustive enumeration of the 2^m messages
//! (collapsed by the 2^(m-k) repetition factor) and, per codeword, the
//! character-sum identity wt(c_u) = (|D| - H_1(u) + H_2(u)) / 2 when D is the
//! difference of two nested complexes.

use std::collections::HashMap;

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::gf2::{mask_rank, BitString, BitVector, Gf2Matrix};
use crate::simplicial::SimplicialComplex;

/// Hard cap on code length: codeword strings stay desk-sized.
pub const MAX_CODE_LENGTH: usize = 1 << 16;

/// Table cap for the meet-in-the-middle column search.
const COLUMN_SEARCH_CAP: u128 = 1 << 22;

/// How the defining set was produced.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Provenance {
    /// Members of the complex on `a` that are not members of the complex on
    /// `b` (with supp(b) strictly inside supp(a); `b` may be zero).
    Difference { a: BitVector, b: BitVector },
    /// Nonzero members of the union of the complexes on two disjoint faces.
    Union { a: BitVector, b: BitVector },
    /// Nonzero members of the union over the coordinate pairs {2i-1, 2i}.
    Partition,
    /// Anything else (file input, hand-built sets).
    Custom,
}

impl Provenance {
    pub fn label(&self) -> &'static str {
        match self {
            Provenance::Difference { .. } => "difference",
            Provenance::Union { .. } => "union",
            Provenance::Partition => "partition",
            Provenance::Custom => "custom",
        }
    }
}

/// Canonically ordered list of distinct nonzero vectors of F_2^m; the
/// columns of the construction matrix, ascending by integer value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DefiningSet {
    m: usize,
    vectors: Vec<BitVector>,
    provenance: Provenance,
}

impl DefiningSet {
    /// Validates and canonicalizes an arbitrary vector list.
    pub fn new(m: usize, vectors: Vec<BitVector>) -> Result<Self> {
        Self::from_parts(m, vectors, Provenance::Custom)
    }

    fn from_parts(m: usize, mut vectors: Vec<BitVector>, provenance: Provenance) -> Result<Self> {
        if m == 0 || m > crate::gf2::MAX_AMBIENT_DIM {
            return Err(Error::DimensionOutOfRange(m));
        }
        if vectors.is_empty() {
            return Err(Error::EmptyDefiningSet);
        }
        if vectors.len() > MAX_CODE_LENGTH {
            return Err(Error::LengthCapExceeded {
                n: vectors.len() as u128,
                cap: MAX_CODE_LENGTH,
            });
        }
        for v in &vectors {
            if v.dim() != m {
                return Err(Error::DimensionMismatch { left: m, right: v.dim() });
            }
            if v.is_zero() {
                return Err(Error::ZeroVectorInSet);
            }
        }
        vectors.sort();
        if let Some(w) = vectors.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateVector(w[0].to_string()));
        }
        Ok(Self { m, vectors, provenance })
    }

    /// Defining set of the members of the complex on `a` outside the complex
    /// on `b`. Requires supp(b) strictly inside supp(a); `b` may be zero, in
    /// which case only the zero vector is removed. Size 2^|a| - 2^|b|.
    pub fn difference(a: BitVector, b: BitVector) -> Result<Self> {
        let m = a.dim();
        if b.dim() != m {
            return Err(Error::DimensionMismatch { left: m, right: b.dim() });
        }
        if a.is_zero() || !b.is_subset_of(&a) || a == b {
            return Err(Error::NotStrictlyContained { a: a.to_string(), b: b.to_string() });
        }
        let expected = (1u128 << a.weight()) - (1u128 << b.weight());
        if expected > MAX_CODE_LENGTH as u128 {
            return Err(Error::LengthCapExceeded { n: expected, cap: MAX_CODE_LENGTH });
        }
        let vectors: Vec<BitVector> = submasks(a.bits())
            .filter(|&s| s & !b.bits() != 0)
            .map(|s| BitVector::new(m, s).expect("submask within dimension"))
            .collect();
        debug_assert_eq!(vectors.len() as u128, expected);
        Self::from_parts(m, vectors, Provenance::Difference { a, b })
    }

    /// Defining set of the nonzero members of the union of the complexes on
    /// two disjoint faces with 0 < |b| < |a|. Size 2^|a| + 2^|b| - 2.
    pub fn union(a: BitVector, b: BitVector) -> Result<Self> {
        let m = a.dim();
        if b.dim() != m {
            return Err(Error::DimensionMismatch { left: m, right: b.dim() });
        }
        if b.is_zero() || b.weight() >= a.weight() {
            return Err(Error::FaceSizeOrder { a: a.weight(), b: b.weight() });
        }
        if !a.is_disjoint_from(&b) {
            return Err(Error::OverlappingFaces { overlap: a.intersection(&b).to_string() });
        }
        let expected = (1u128 << a.weight()) + (1u128 << b.weight()) - 2;
        if expected > MAX_CODE_LENGTH as u128 {
            return Err(Error::LengthCapExceeded { n: expected, cap: MAX_CODE_LENGTH });
        }
        let vectors: Vec<BitVector> = submasks(a.bits())
            .chain(submasks(b.bits()))
            .filter(|&s| s != 0)
            .map(|s| BitVector::new(m, s).expect("submask within dimension"))
            .collect();
        debug_assert_eq!(vectors.len() as u128, expected);
        Self::from_parts(m, vectors, Provenance::Union { a, b })
    }

    /// Defining set over the coordinate-pair partition {2i-1, 2i} of an even
    /// dimension m: three nonzero vectors per pair, 3m/2 in total.
    pub fn pair_partition(m: usize) -> Result<Self> {
        if m == 0 || m > crate::gf2::MAX_AMBIENT_DIM {
            return Err(Error::DimensionOutOfRange(m));
        }
        if m % 2 != 0 {
            return Err(Error::OddDimension(m));
        }
        let mut vectors = Vec::with_capacity(3 * m / 2);
        for block in 0..m / 2 {
            let base = 2 * block;
            for pattern in 1u64..=3 {
                vectors.push(BitVector::new(m, pattern << base).expect("pattern within dimension"));
            }
        }
        Self::from_parts(m, vectors, Provenance::Partition)
    }

    pub fn dim(&self) -> usize {
        self.m
    }

    /// Code length n.
    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        false // a defining set is never empty by construction
    }

    pub fn vectors(&self) -> &[BitVector] {
        &self.vectors
    }

    pub fn provenance(&self) -> &Provenance {
        &self.provenance
    }

    /// The codeword (u.g_1, ..., u.g_n).
    pub fn encode(&self, u: &BitVector) -> BitString {
        assert_eq!(u.dim(), self.m, "encode: dimension mismatch");
        BitString::from_fn(self.vectors.len(), |j| u.dot(&self.vectors[j]))
    }

    /// Builds the linear code: the full m x n construction matrix plus a
    /// reduced generator basis.
    pub fn build(&self) -> LinearCode {
        let full = Gf2Matrix::from_bitvector_columns(self.m, &self.vectors);
        let basis = full.row_basis();
        let k = basis.len();
        LinearCode {
            n: self.vectors.len(),
            k,
            gen: Gf2Matrix::from_rows(self.vectors.len(), basis),
            full: Some(full),
        }
    }

    /// Exhaustive weight distribution over all 2^m messages.
    ///
    /// Returns the raw message profile (how many messages hit each weight;
    /// totals 2^m) and the code's weight distribution after dividing every
    /// count by the repetition factor 2^(m-k). A non-exact division signals a
    /// rank inconsistency and is reported as an error.
    pub fn weight_distribution(&self, budget: &Budget) -> Result<(Vec<u64>, WeightDistribution)> {
        let m = self.m;
        let n = self.vectors.len();
        if m > budget.max_message_dim {
            return Err(Error::MessageSpaceBudget { m, max: budget.max_message_dim });
        }
        if m >= 64 {
            return Err(Error::MessageSpaceBudget { m, max: 63 });
        }
        let work = (1u128 << m) * n as u128;
        if work > budget.max_work {
            return Err(Error::WorkBudget { need: work, max: budget.max_work });
        }

        let masks: Vec<u64> = self.vectors.iter().map(BitVector::bits).collect();
        let total = 1u64 << m;
        let chunk = 1u64 << 12;
        let chunks = total.div_ceil(chunk);
        let histograms: Vec<Vec<u64>> = (0..chunks)
            .into_par_iter()
            .map(|c| {
                let lo = c * chunk;
                let hi = (lo + chunk).min(total);
                let mut hist = vec![0u64; n + 1];
                for u in lo..hi {
                    let mut weight = 0usize;
                    for &g in &masks {
                        weight += ((u & g).count_ones() & 1) as usize;
                    }
                    hist[weight] += 1;
                }
                hist
            })
            .collect();
        let mut profile = vec![0u64; n + 1];
        for hist in histograms {
            for (acc, v) in profile.iter_mut().zip(hist) {
                *acc += v;
            }
        }
        debug_assert_eq!(profile.iter().sum::<u64>(), total);

        let k = mask_rank(masks);
        let divisor = 1u64 << (m - k);
        let mut counts = vec![0u64; n + 1];
        for (weight, (&raw, out)) in profile.iter().zip(counts.iter_mut()).enumerate() {
            if raw % divisor != 0 {
                return Err(Error::NonIntegralFrequency { weight, count: raw, divisor });
            }
            *out = raw / divisor;
        }
        Ok((profile, WeightDistribution::new(counts)?))
    }

    /// Serializes to the defining-set text format.
    pub fn to_text(&self) -> String {
        let mut out = String::with_capacity((self.m + 1) * (self.vectors.len() + 1));
        out.push_str(&format!("m={}\n", self.m));
        for v in &self.vectors {
            out.push_str(&v.to_string());
            out.push('\n');
        }
        out
    }

    /// Parses the defining-set text format: `#` starts a comment, the first
    /// significant line is `m=<int>`, then one vector per m-character 0/1
    /// line (leftmost character = coordinate 1). Vectors are re-sorted to
    /// canonical order.
    pub fn from_text(text: &str) -> Result<Self> {
        let mut m: Option<usize> = None;
        let mut vectors: Vec<BitVector> = Vec::new();
        let mut first_line: HashMap<u64, usize> = HashMap::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            match m {
                None => {
                    let Some(value) = line.strip_prefix("m=") else {
                        return Err(Error::Parse {
                            line: line_no,
                            msg: format!("expected `m=<int>` header, got {line:?}"),
                        });
                    };
                    let parsed: usize = value.trim().parse().map_err(|_| Error::Parse {
                        line: line_no,
                        msg: format!("invalid dimension {value:?}"),
                    })?;
                    if parsed == 0 || parsed > crate::gf2::MAX_AMBIENT_DIM {
                        return Err(Error::Parse {
                            line: line_no,
                            msg: format!("dimension must be in 1..=64, got {parsed}"),
                        });
                    }
                    m = Some(parsed);
                }
                Some(m) => {
                    if line.len() != m {
                        return Err(Error::Parse {
                            line: line_no,
                            msg: format!("expected {m} characters, got {}", line.len()),
                        });
                    }
                    let v = BitVector::parse(line).map_err(|e| Error::Parse {
                        line: line_no,
                        msg: e.to_string(),
                    })?;
                    if v.is_zero() {
                        return Err(Error::Parse {
                            line: line_no,
                            msg: "zero vector is not allowed in a defining set".to_string(),
                        });
                    }
                    if let Some(&first) = first_line.get(&v.bits()) {
                        return Err(Error::Parse {
                            line: line_no,
                            msg: format!("duplicate vector {v} (first seen on line {first})"),
                        });
                    }
                    first_line.insert(v.bits(), line_no);
                    vectors.push(v);
                }
            }
        }
        let Some(m) = m else {
            return Err(Error::Parse { line: 0, msg: "missing `m=<int>` header".to_string() });
        };
        Self::from_parts(m, vectors, Provenance::Custom)
    }
}

fn submasks(mask: u64) -> impl Iterator<Item = u64> {
    let mut current = mask;
    let mut done = false;
    std::iter::from_fn(move || {
        if done {
            return None;
        }
        let out = current;
        if current == 0 {
            done = true;
        } else {
            current = (current - 1) & mask;
        }
        Some(out)
    })
}

/// Codeword weight of the message `u` for the defining set D = inner \ outer
/// (outer a subcomplex of inner), computed from character sums alone:
/// (|D| - H_inner(u) + H_outer(u)) / 2. Defined for nonzero `u` only; the
/// zero message trivially has weight zero and is rejected.
pub fn weight_by_char_sums(
    inner: &SimplicialComplex,
    outer: &SimplicialComplex,
    u: &BitVector,
) -> Result<u64> {
    if inner.dim() != outer.dim() {
        return Err(Error::DimensionMismatch { left: inner.dim(), right: outer.dim() });
    }
    if u.dim() != inner.dim() {
        return Err(Error::DimensionMismatch { left: inner.dim(), right: u.dim() });
    }
    if u.is_zero() {
        return Err(Error::ZeroMessage);
    }
    if !outer.is_subcomplex_of(inner) {
        return Err(Error::BadParameters(
            "second complex is not contained in the first".to_string(),
        ));
    }
    let len = inner.size()? as i128 - outer.size()? as i128;
    let doubled = len - inner.char_sum(u)? + outer.char_sum(u)?;
    assert!(doubled >= 0 && doubled % 2 == 0, "character-sum weight must be a nonnegative integer");
    Ok((doubled / 2) as u64)
}

/// Binary linear code: a reduced generator basis plus, for codes obtained
/// from a defining set, the full m x n construction matrix.
#[derive(Clone, Debug)]
pub struct LinearCode {
    n: usize,
    k: usize,
    gen: Gf2Matrix,
    full: Option<Gf2Matrix>,
}

impl LinearCode {
    pub fn from_defining_set(set: &DefiningSet) -> Self {
        set.build()
    }

    /// Code spanned by the rows of an arbitrary matrix; rows are reduced to
    /// an independent basis.
    pub fn from_generator(matrix: &Gf2Matrix) -> Self {
        let basis = matrix.row_basis();
        let k = basis.len();
        Self { n: matrix.col_count(), k, gen: Gf2Matrix::from_rows(matrix.col_count(), basis), full: None }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Reduced generator matrix with k independent rows.
    pub fn generator(&self) -> &Gf2Matrix {
        &self.gen
    }

    /// The m x n construction matrix, when the code came from a defining set.
    pub fn full_matrix(&self) -> Option<&Gf2Matrix> {
        self.full.as_ref()
    }

    /// The dual code, generated by a deterministic nullspace basis of the
    /// generator. A full-dimension code yields the zero dual (k = 0).
    pub fn dual(&self) -> LinearCode {
        let basis = self.gen.nullspace_basis();
        let k = basis.len();
        debug_assert_eq!(k, self.n - self.k);
        Self { n: self.n, k, gen: Gf2Matrix::from_rows(self.n, basis), full: None }
    }

    /// Weight distribution by enumerating the 2^k codewords of the row span.
    pub fn weight_distribution(&self, budget: &Budget) -> Result<WeightDistribution> {
        WeightDistribution::new(self.span_histogram(budget)?)
    }

    /// Minimum nonzero codeword weight by full span enumeration.
    pub fn min_distance(&self, budget: &Budget) -> Result<u64> {
        if self.k == 0 {
            return Err(Error::ZeroCode);
        }
        let hist = self.span_histogram(budget)?;
        let d = hist
            .iter()
            .enumerate()
            .skip(1)
            .find(|(_, &c)| c > 0)
            .map(|(w, _)| w as u64)
            .expect("independent generator rows span a nonzero codeword");
        Ok(d)
    }

    fn span_histogram(&self, budget: &Budget) -> Result<Vec<u64>> {
        let k = self.k;
        let n = self.n;
        if k > budget.max_span_dim {
            return Err(Error::SpanBudget { k, max: budget.max_span_dim });
        }
        if k >= 64 {
            return Err(Error::SpanBudget { k, max: 63 });
        }
        let words = n.div_ceil(64).max(1) as u128;
        let work = (1u128 << k) * words;
        if work > budget.max_work {
            return Err(Error::WorkBudget { need: work, max: budget.max_work });
        }

        let total = 1u64 << k;
        let chunk = 1u64 << 13;
        let chunks = total.div_ceil(chunk);
        let histograms: Vec<Vec<u64>> = (0..chunks)
            .into_par_iter()
            .map(|c| {
                let lo = c * chunk;
                let hi = (lo + chunk).min(total);
                let mut hist = vec![0u64; n + 1];
                // Gray-code walk: state(c) = codeword of gray(c); the bit
                // flipped between gray(c-1) and gray(c) is trailing_zeros(c).
                let mut acc = self.combine(lo ^ (lo >> 1));
                hist[acc.count_ones()] += 1;
                for c in lo + 1..hi {
                    acc.xor_assign(self.gen.row(c.trailing_zeros() as usize));
                    hist[acc.count_ones()] += 1;
                }
                hist
            })
            .collect();
        let mut out = vec![0u64; n + 1];
        for hist in histograms {
            for (acc, v) in out.iter_mut().zip(hist) {
                *acc += v;
            }
        }
        Ok(out)
    }

    /// XOR of the generator rows selected by `mask`.
    fn combine(&self, mask: u64) -> BitString {
        let mut acc = BitString::zeros(self.n);
        let mut bits = mask;
        while bits != 0 {
            let i = bits.trailing_zeros() as usize;
            acc.xor_assign(self.gen.row(i));
            bits &= bits - 1;
        }
        acc
    }

    /// Minimum distance of the dual code.
    ///
    /// The generator of this code is a parity-check matrix of the dual, so
    /// the dual distance is the smallest number of linearly dependent
    /// generator columns. Dependencies of size up to `w_max` are searched
    /// combinatorially (meet in the middle, ascending size); if none is
    /// found, a full enumeration of the dual span is used when its dimension
    /// fits the budget, otherwise `Exceeds(w_max)` is returned.
    pub fn dual_min_distance(&self, w_max: usize, budget: &Budget) -> Result<DualDistance> {
        if self.k == self.n {
            return Err(Error::ZeroDual);
        }
        let columns: Vec<BitString> = (0..self.n).map(|j| self.gen.column(j)).collect();
        let mut searched_all = true;
        for w in 1..=w_max.min(self.n) {
            match dependent_columns_of_size(&columns, w) {
                Ok(true) => return Ok(DualDistance::Exact(w as u64)),
                Ok(false) => {}
                Err(_) => {
                    searched_all = false;
                    break;
                }
            }
        }
        let dual_dim = self.n - self.k;
        if dual_dim <= 24.min(budget.max_span_dim) {
            return self.dual().min_distance(budget).map(DualDistance::Exact);
        }
        if searched_all {
            Ok(DualDistance::Exceeds(w_max as u64))
        } else {
            Err(Error::SearchBudget { need: combinations(self.n, w_max / 2), cap: COLUMN_SEARCH_CAP })
        }
    }
}

/// Whether some `w` of the given columns XOR to zero.
///
/// Splits w into left/right halves and matches XOR values, requiring every
/// left index to precede every right index so each dependency is found once
/// and the two sides are disjoint.
fn dependent_columns_of_size(columns: &[BitString], w: usize) -> Result<bool> {
    let n = columns.len();
    match w {
        0 => return Ok(false),
        1 => return Ok(columns.iter().any(BitString::is_zero)),
        2 => {
            let mut seen: HashMap<&BitString, ()> = HashMap::with_capacity(n);
            for c in columns {
                if seen.insert(c, ()).is_some() {
                    return Ok(true);
                }
            }
            return Ok(false);
        }
        _ => {}
    }
    let left = w / 2;
    let right = w - left;
    let table = combinations(n, left) + combinations(n, right);
    if table > COLUMN_SEARCH_CAP {
        return Err(Error::SearchBudget { need: table, cap: COLUMN_SEARCH_CAP });
    }
    // XOR of each left-sized combination -> smallest achievable max index.
    let mut by_xor: HashMap<BitString, usize> = HashMap::new();
    for_each_combination(columns, left, &mut |indices, xor| {
        let max_index = *indices.last().expect("combination is nonempty");
        by_xor
            .entry(xor.clone())
            .and_modify(|m| *m = (*m).min(max_index))
            .or_insert(max_index);
        false
    });
    let mut found = false;
    for_each_combination(columns, right, &mut |indices, xor| {
        let min_index = indices[0];
        if let Some(&left_max) = by_xor.get(xor) {
            if left_max < min_index {
                found = true;
                return true;
            }
        }
        false
    });
    Ok(found)
}

/// Visits every size-`t` index combination with the XOR of its columns.
/// The callback returns true to stop early.
fn for_each_combination(
    columns: &[BitString],
    t: usize,
    visit: &mut impl FnMut(&[usize], &BitString) -> bool,
) {
    let n = columns.len();
    if t == 0 || t > n {
        return;
    }
    let width = columns[0].len();
    let mut indices = Vec::with_capacity(t);
    let mut stack: Vec<BitString> = Vec::with_capacity(t + 1);
    stack.push(BitString::zeros(width));
    fn recurse(
        columns: &[BitString],
        t: usize,
        start: usize,
        indices: &mut Vec<usize>,
        stack: &mut Vec<BitString>,
        visit: &mut impl FnMut(&[usize], &BitString) -> bool,
    ) -> bool {
        if indices.len() == t {
            let xor = stack.last().expect("stack holds running xor");
            return visit(indices, xor);
        }
        let remaining = t - indices.len();
        for i in start..=columns.len() - remaining {
            indices.push(i);
            let mut next = stack.last().expect("stack holds running xor").clone();
            next.xor_assign(&columns[i]);
            stack.push(next);
            if recurse(columns, t, i + 1, indices, stack, visit) {
                return true;
            }
            stack.pop();
            indices.pop();
        }
        false
    }
    recurse(columns, t, 0, &mut indices, &mut stack, visit);
}

fn combinations(n: usize, t: usize) -> u128 {
    if t > n {
        return 0;
    }
    let mut acc: u128 = 1;
    for i in 0..t {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

/// Minimum distance of the dual code, as an exact value or a lower-bound
/// witness when the search stopped at `w_max`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DualDistance {
    Exact(u64),
    /// No dependency of size <= the stored bound exists.
    Exceeds(u64),
}

impl DualDistance {
    pub fn exact(&self) -> Option<u64> {
        match self {
            DualDistance::Exact(d) => Some(*d),
            DualDistance::Exceeds(_) => None,
        }
    }
}

impl Serialize for DualDistance {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        match self {
            DualDistance::Exact(d) => serializer.serialize_u64(*d),
            DualDistance::Exceeds(w) => {
                let mut map = serializer.serialize_map(Some(1))?;
                map.serialize_entry("exceeds", w)?;
                map.end()
            }
        }
    }
}

/// Weight distribution (A_0, ..., A_n) with A_0 = 1 and sum 2^k.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightDistribution {
    counts: Vec<u64>,
}

impl WeightDistribution {
    pub fn new(counts: Vec<u64>) -> Result<Self> {
        if counts.is_empty() || counts[0] != 1 {
            return Err(Error::BadParameters(
                "weight distribution must start with A_0 = 1".to_string(),
            ));
        }
        let total: u64 = counts.iter().sum();
        if !total.is_power_of_two() {
            return Err(Error::BadParameters(format!(
                "weight distribution total {total} is not a power of two"
            )));
        }
        Ok(Self { counts })
    }

    /// Builds a length-n distribution from sparse (weight, count) pairs;
    /// A_0 = 1 is implied.
    pub fn from_pairs(n: usize, pairs: &[(u64, u64)]) -> Result<Self> {
        let mut counts = vec![0u64; n + 1];
        counts[0] = 1;
        for &(w, c) in pairs {
            if w == 0 || w as usize > n {
                return Err(Error::BadParameters(format!("weight {w} outside 1..={n}")));
            }
            counts[w as usize] += c;
        }
        Self::new(counts)
    }

    /// Code length n.
    pub fn n(&self) -> usize {
        self.counts.len() - 1
    }

    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    pub fn count(&self, weight: usize) -> u64 {
        self.counts.get(weight).copied().unwrap_or(0)
    }

    /// Number of codewords, always a power of two.
    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }

    /// Code dimension k with 2^k codewords.
    pub fn dimension(&self) -> u32 {
        self.total().trailing_zeros()
    }

    /// Smallest weight with a nonzero count, i.e. the minimum distance;
    /// `None` for the zero code.
    pub fn min_nonzero_weight(&self) -> Option<u64> {
        self.counts.iter().enumerate().skip(1).find(|(_, &c)| c > 0).map(|(w, _)| w as u64)
    }

    /// Number of distinct nonzero weights.
    pub fn t_weight(&self) -> usize {
        self.counts.iter().skip(1).filter(|&&c| c > 0).count()
    }

    /// Sparse (weight, count) pairs, ascending, including (0, 1).
    pub fn pairs(&self) -> Vec<(u64, u64)> {
        self.counts
            .iter()
            .enumerate()
            .filter(|(_, &c)| c > 0)
            .map(|(w, &c)| (w as u64, c))
            .collect()
    }

    /// Weight distribution of the dual code via the MacWilliams transform
    /// with binary Krawtchouk coefficients. Exact integer arithmetic;
    /// supported for n <= 32.
    pub fn macwilliams_dual(&self) -> Result<WeightDistribution> {
        let n = self.n();
        if n > 32 {
            return Err(Error::BadParameters(format!(
                "MacWilliams transform supported for n <= 32, got {n}"
            )));
        }
        let size = self.total() as i128;
        let binom = pascal(n);
        let mut dual = vec![0u64; n + 1];
        for (j, out) in dual.iter_mut().enumerate() {
            let mut sum: i128 = 0;
            for (i, &a) in self.counts.iter().enumerate() {
                if a == 0 {
                    continue;
                }
                let mut kraw: i128 = 0;
                for t in 0..=j.min(i) {
                    if j - t > n - i {
                        continue;
                    }
                    let term = binom[i][t] * binom[n - i][j - t];
                    if t & 1 == 1 {
                        kraw -= term;
                    } else {
                        kraw += term;
                    }
                }
                sum += a as i128 * kraw;
            }
            if sum < 0 || sum % size != 0 {
                return Err(Error::BadParameters(format!(
                    "MacWilliams transform is not integral at weight {j}"
                )));
            }
            *out = (sum / size) as u64;
        }
        WeightDistribution::new(dual)
    }
}

impl std::fmt::Display for WeightDistribution {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut first = true;
        for (w, c) in self.pairs() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match (w, c) {
                (0, _) => write!(f, "{c}")?,
                (1, 1) => write!(f, "z")?,
                (1, _) => write!(f, "{c}z")?,
                (_, 1) => write!(f, "z^{w}")?,
                _ => write!(f, "{c}z^{w}")?,
            }
        }
        Ok(())
    }
}

fn pascal(n: usize) -> Vec<Vec<i128>> {
    let mut table = vec![vec![0i128; n + 1]; n + 1];
    for (i, row) in table.iter_mut().enumerate() {
        row[0] = 1;
        for j in 1..=i {
            row[j] = 1;
            for _ in 0..0 {}
        }
    }
    for i in 1..=n {
        for j in 1..=i {
            table[i][j] = table[i - 1][j - 1] + table[i - 1][j];
        }
    }
    table
}
