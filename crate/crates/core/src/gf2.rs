//! Bit-packed vectors and dense matrices over GF(2).
//!
//! Ambient vectors of F_2^m (m <= 64) live in a single machine word and are
//! identified with subsets of {1, ..., m} through their support. Codewords
//! and matrix rows, whose length can reach 2^16, use a growable bit string
//! with the same operations. All operations are pure and deterministic:
//! elimination picks pivot columns left to right and swaps rows top down, so
//! ranks and nullspace bases are reproducible.

use std::fmt;

use crate::error::{Error, Result};

/// Largest ambient dimension: one vector fits one machine word.
pub const MAX_AMBIENT_DIM: usize = 64;

/// Element of F_2^m, doubling as a subset of {1, ..., m}: coordinate i
/// corresponds to bit position i-1.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitVector {
    bits: u64,
    m: usize,
}

impl BitVector {
    pub fn new(m: usize, bits: u64) -> Result<Self> {
        if m == 0 || m > MAX_AMBIENT_DIM {
            return Err(Error::DimensionOutOfRange(m));
        }
        if bits & !mask_for(m) != 0 {
            return Err(Error::BitsOutsideDimension { m });
        }
        Ok(Self { bits, m })
    }

    pub fn zero(m: usize) -> Self {
        assert!(m >= 1 && m <= MAX_AMBIENT_DIM, "dimension {m} out of range");
        Self { bits: 0, m }
    }

    pub fn all_ones(m: usize) -> Self {
        assert!(m >= 1 && m <= MAX_AMBIENT_DIM, "dimension {m} out of range");
        Self { bits: mask_for(m), m }
    }

    /// Vector with the given 1-based support coordinates set.
    pub fn from_support(m: usize, coords: &[usize]) -> Result<Self> {
        if m == 0 || m > MAX_AMBIENT_DIM {
            return Err(Error::DimensionOutOfRange(m));
        }
        let mut bits = 0u64;
        for &c in coords {
            if c == 0 || c > m {
                return Err(Error::CoordinateOutOfRange { coord: c, m });
            }
            let bit = 1u64 << (c - 1);
            if bits & bit != 0 {
                return Err(Error::DuplicateCoordinate(c));
            }
            bits |= bit;
        }
        Ok(Self { bits, m })
    }

    /// Parses a 0/1 string; leftmost character is coordinate 1.
    pub fn parse(s: &str) -> Result<Self> {
        let m = s.len();
        if m == 0 || m > MAX_AMBIENT_DIM {
            return Err(Error::DimensionOutOfRange(m));
        }
        let mut bits = 0u64;
        for (i, ch) in s.chars().enumerate() {
            match ch {
                '1' => bits |= 1u64 << i,
                '0' => {}
                other => {
                    return Err(Error::BadParameters(format!(
                        "expected '0' or '1', got {other:?}"
                    )))
                }
            }
        }
        Ok(Self { bits, m })
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn dim(&self) -> usize {
        self.m
    }

    /// Hamming weight.
    pub fn weight(&self) -> u32 {
        self.bits.count_ones()
    }

    pub fn is_zero(&self) -> bool {
        self.bits == 0
    }

    /// Euclidean inner product over GF(2): parity of the support overlap.
    pub fn dot(&self, other: &Self) -> bool {
        assert_eq!(self.m, other.m, "dot: dimension mismatch");
        (self.bits & other.bits).count_ones() & 1 == 1
    }

    /// 1-based support coordinates, ascending.
    pub fn support(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.weight() as usize);
        let mut bits = self.bits;
        while bits != 0 {
            out.push(bits.trailing_zeros() as usize + 1);
            bits &= bits - 1;
        }
        out
    }

    pub fn is_subset_of(&self, other: &Self) -> bool {
        assert_eq!(self.m, other.m, "is_subset_of: dimension mismatch");
        self.bits & !other.bits == 0
    }

    pub fn is_disjoint_from(&self, other: &Self) -> bool {
        assert_eq!(self.m, other.m, "is_disjoint_from: dimension mismatch");
        self.bits & other.bits == 0
    }

    pub fn intersection(&self, other: &Self) -> Self {
        assert_eq!(self.m, other.m, "intersection: dimension mismatch");
        Self { bits: self.bits & other.bits, m: self.m }
    }
}

impl fmt::Display for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.m {
            write!(f, "{}", (self.bits >> i) & 1)?;
        }
        Ok(())
    }
}

impl fmt::Debug for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitVector({}, m={})", self, self.m)
    }
}

fn mask_for(m: usize) -> u64 {
    u64::MAX >> (64 - m)
}

/// Growable bit string for codewords and matrix rows (length up to 2^16 in
/// practice; the type itself has no hard cap).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitString {
    len: usize,
    words: Vec<u64>,
}

impl BitString {
    pub fn zeros(len: usize) -> Self {
        Self { len, words: vec![0; len.div_ceil(64)] }
    }

    pub fn from_fn(len: usize, mut f: impl FnMut(usize) -> bool) -> Self {
        let mut s = Self::zeros(len);
        for i in 0..len {
            if f(i) {
                s.words[i / 64] |= 1u64 << (i % 64);
            }
        }
        s
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.len, "bit index {i} out of range (len={})", self.len);
        (self.words[i / 64] >> (i % 64)) & 1 == 1
    }

    pub fn set(&mut self, i: usize, value: bool) {
        assert!(i < self.len, "bit index {i} out of range (len={})", self.len);
        let w = i / 64;
        let b = 1u64 << (i % 64);
        if value {
            self.words[w] |= b;
        } else {
            self.words[w] &= !b;
        }
    }

    pub fn xor_assign(&mut self, other: &Self) {
        assert_eq!(self.len, other.len, "xor_assign: length mismatch");
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn first_one(&self) -> Option<usize> {
        for (i, &w) in self.words.iter().enumerate() {
            if w != 0 {
                return Some(i * 64 + w.trailing_zeros() as usize);
            }
        }
        None
    }

    /// Parity of the AND with another string (inner product over GF(2)).
    pub fn dot(&self, other: &Self) -> bool {
        assert_eq!(self.len, other.len, "dot: length mismatch");
        let mut acc = 0u32;
        for (a, b) in self.words.iter().zip(&other.words) {
            acc ^= (a & b).count_ones();
        }
        acc & 1 == 1
    }

    /// Indices of set bits, ascending.
    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut bits = w;
            std::iter::from_fn(move || {
                if bits == 0 {
                    return None;
                }
                let i = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(wi * 64 + i)
            })
        })
    }
}

impl fmt::Display for BitString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len {
            write!(f, "{}", u8::from(self.get(i)))?;
        }
        Ok(())
    }
}

impl fmt::Debug for BitString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitString({}, len={})", self, self.len)
    }
}

/// Dense row-major matrix over GF(2).
#[derive(Clone, PartialEq, Eq)]
pub struct Gf2Matrix {
    cols: usize,
    rows: Vec<BitString>,
}

impl Gf2Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { cols, rows: (0..rows).map(|_| BitString::zeros(cols)).collect() }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.rows[i].set(i, true);
        }
        m
    }

    pub fn from_rows(cols: usize, rows: Vec<BitString>) -> Self {
        for r in &rows {
            assert_eq!(r.len(), cols, "row length does not match column count");
        }
        Self { cols, rows }
    }

    /// m x n matrix whose j-th column is the j-th vector.
    pub fn from_bitvector_columns(m: usize, columns: &[BitVector]) -> Self {
        for c in columns {
            assert_eq!(c.dim(), m, "column dimension mismatch");
        }
        let rows = (0..m)
            .map(|i| BitString::from_fn(columns.len(), |j| (columns[j].bits() >> i) & 1 == 1))
            .collect();
        Self { cols: columns.len(), rows }
    }

    pub fn row_count(&self) -> usize {
        self.rows.len()
    }

    pub fn col_count(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &BitString {
        &self.rows[i]
    }

    pub fn rows(&self) -> &[BitString] {
        &self.rows
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.rows[i].get(j)
    }

    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        self.rows[i].set(j, value);
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(BitString::is_zero)
    }

    pub fn column(&self, j: usize) -> BitString {
        BitString::from_fn(self.rows.len(), |i| self.get(i, j))
    }

    pub fn transpose(&self) -> Self {
        let rows = (0..self.cols).map(|j| self.column(j)).collect();
        Self { cols: self.rows.len(), rows }
    }

    /// Row rank by Gaussian elimination; the matrix is not modified.
    pub fn rank(&self) -> usize {
        let mut rows = self.rows.clone();
        reduce(&mut rows, self.cols).len()
    }

    /// The product M * M^T: entry (i, j) is the inner product of rows i and j.
    pub fn mul_transpose(&self) -> Gf2Matrix {
        let r = self.rows.len();
        let mut out = Gf2Matrix::zeros(r, r);
        for i in 0..r {
            for j in i..r {
                let v = self.rows[i].dot(&self.rows[j]);
                out.set(i, j, v);
                out.set(j, i, v);
            }
        }
        out
    }

    /// Deterministic basis of the right nullspace {x : Mx = 0}.
    ///
    /// The basis has cols - rank(M) elements, one per free column in
    /// ascending order.
    pub fn nullspace_basis(&self) -> Vec<BitString> {
        let mut rows = self.rows.clone();
        let pivots = reduce(&mut rows, self.cols);
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut basis = Vec::with_capacity(self.cols - pivots.len());
        for free in 0..self.cols {
            if is_pivot[free] {
                continue;
            }
            let mut x = BitString::zeros(self.cols);
            x.set(free, true);
            for (r, &p) in pivots.iter().enumerate() {
                if rows[r].get(free) {
                    x.set(p, true);
                }
            }
            basis.push(x);
        }
        basis
    }

    /// Independent rows spanning the same row space, in reduced row echelon
    /// form.
    pub fn row_basis(&self) -> Vec<BitString> {
        let mut rows = self.rows.clone();
        let pivots = reduce(&mut rows, self.cols);
        rows.truncate(pivots.len());
        rows
    }

    /// M * x for a column vector x.
    pub fn apply(&self, x: &BitString) -> BitString {
        assert_eq!(x.len(), self.cols, "apply: length mismatch");
        BitString::from_fn(self.rows.len(), |i| self.rows[i].dot(x))
    }
}

impl fmt::Debug for Gf2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Gf2Matrix({}x{}):", self.rows.len(), self.cols)?;
        for r in &self.rows {
            writeln!(f, "  {r}")?;
        }
        Ok(())
    }
}

/// In-place reduced row echelon form. Pivot columns are chosen left to
/// right, candidate rows top down. Returns the pivot column of each of the
/// first rank(M) rows.
fn reduce(rows: &mut [BitString], cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut next = 0;
    for col in 0..cols {
        let Some(p) = (next..rows.len()).find(|&i| rows[i].get(col)) else {
            continue;
        };
        rows.swap(next, p);
        let pivot_row = rows[next].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != next && row.get(col) {
                row.xor_assign(&pivot_row);
            }
        }
        pivots.push(col);
        next += 1;
        if next == rows.len() {
            break;
        }
    }
    pivots
}

/// Rank of the span of a set of word-sized vectors.
pub fn mask_rank(masks: impl IntoIterator<Item = u64>) -> usize {
    let mut basis = [0u64; 64];
    let mut rank = 0;
    for mut v in masks {
        while v != 0 {
            let h = 63 - v.leading_zeros() as usize;
            if basis[h] == 0 {
                basis[h] = v;
                rank += 1;
                break;
            }
            v ^= basis[h];
        }
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn bv(s: &str) -> BitVector {
        BitVector::parse(s).unwrap()
    }

    #[test]
    fn weight_examples() {
        assert_eq!(bv("000").weight(), 0);
        assert_eq!(bv("110").weight(), 2);
        assert_eq!(BitVector::all_ones(5).weight(), 5);
    }

    #[test]
    fn dot_examples() {
        assert!(bv("110").dot(&bv("011")));
        assert!(!bv("110").dot(&BitVector::zero(3)));
        assert!(!bv("101").dot(&bv("101")));
    }

    #[test]
    fn support_round_trip() {
        let v = bv("10110");
        assert_eq!(v.support(), vec![1, 3, 4]);
        assert_eq!(BitVector::from_support(5, &v.support()).unwrap(), v);
    }

    #[test]
    fn from_support_rejects_bad_coords() {
        assert!(matches!(
            BitVector::from_support(3, &[4]),
            Err(crate::Error::CoordinateOutOfRange { coord: 4, m: 3 })
        ));
        assert!(matches!(
            BitVector::from_support(3, &[2, 2]),
            Err(crate::Error::DuplicateCoordinate(2))
        ));
    }

    #[test]
    fn dimension_bounds() {
        assert!(BitVector::new(0, 0).is_err());
        assert!(BitVector::new(65, 0).is_err());
        assert!(BitVector::new(64, u64::MAX).is_ok());
        assert!(BitVector::new(3, 0b1000).is_err());
    }

    #[test]
    fn rank_examples() {
        assert_eq!(Gf2Matrix::identity(3).rank(), 3);
        assert_eq!(Gf2Matrix::zeros(4, 5).rank(), 0);
    }

    // Columns of the full cube minus zero on three coordinates; the Gram
    // matrix vanishes because every overlap count is even.
    #[test]
    fn gram_of_full_three_face_is_zero() {
        let cols: Vec<BitVector> =
            (1..8).map(|b| BitVector::new(3, b).unwrap()).collect();
        let g = Gf2Matrix::from_bitvector_columns(3, &cols);
        assert_eq!(g.rank(), 3);
        let gram = g.mul_transpose();
        assert!(gram.is_zero());
        assert_eq!(gram.rank(), 0);
    }

    #[test]
    fn mul_transpose_examples() {
        let id = Gf2Matrix::identity(4);
        assert_eq!(id.mul_transpose(), id);

        let row = Gf2Matrix::from_rows(6, vec![BitString::from_fn(6, |_| true)]);
        let gram = row.mul_transpose();
        assert_eq!(gram.row_count(), 1);
        assert!(gram.is_zero());
    }

    // Pair-partition construction on four coordinates: the Gram matrix is
    // block diagonal with antidiagonal 2x2 blocks [[0,1],[1,0]] (each pair
    // of coordinates overlaps in exactly one column), so its rank is m.
    #[test]
    fn gram_of_pair_partition_matrix() {
        let cols: Vec<BitVector> = [1u64, 2, 3, 4, 8, 12]
            .iter()
            .map(|&b| BitVector::new(4, b).unwrap())
            .collect();
        let g = Gf2Matrix::from_bitvector_columns(4, &cols);
        let gram = g.mul_transpose();
        let mut expected = Gf2Matrix::zeros(4, 4);
        expected.set(0, 1, true);
        expected.set(1, 0, true);
        expected.set(2, 3, true);
        expected.set(3, 2, true);
        assert_eq!(gram, expected);
        assert_eq!(gram.rank(), 4);
    }

    #[test]
    fn nullspace_examples() {
        assert!(Gf2Matrix::identity(3).nullspace_basis().is_empty());

        let m = Gf2Matrix::from_rows(2, vec![BitString::from_fn(2, |_| true)]);
        let basis = m.nullspace_basis();
        assert_eq!(basis.len(), 1);
        assert_eq!(basis[0].to_string(), "11");
    }

    // Generator of the length-7 one-weight code on three message bits; its
    // nullspace is four-dimensional (the dual has dimension 7 - 3).
    #[test]
    fn nullspace_of_simplex_generator() {
        let cols: Vec<BitVector> =
            (1..8).map(|b| BitVector::new(3, b).unwrap()).collect();
        let g = Gf2Matrix::from_bitvector_columns(3, &cols);
        let basis = g.nullspace_basis();
        assert_eq!(basis.len(), 4);
        for x in &basis {
            assert!(g.apply(x).is_zero());
        }
    }

    #[test]
    fn row_basis_is_independent() {
        let rows = vec![
            BitString::from_fn(3, |i| i < 2),  // 110
            BitString::from_fn(3, |i| i > 0),  // 011
            BitString::from_fn(3, |i| i != 1), // 101 = 110 + 011
        ];
        let m = Gf2Matrix::from_rows(3, rows);
        assert_eq!(m.rank(), 2);
        assert_eq!(m.row_basis().len(), 2);
    }

    #[test]
    fn mask_rank_matches_matrix_rank() {
        assert_eq!(mask_rank([1, 2, 3]), 2);
        assert_eq!(mask_rank([0, 0]), 0);
        assert_eq!(mask_rank([5, 6, 3]), 3);
    }

    fn small_matrix() -> impl Strategy<Value = Gf2Matrix> {
        (1usize..=6, 1usize..=6).prop_flat_map(|(r, c)| {
            proptest::collection::vec(proptest::bits::u64::between(0, c), r).prop_map(
                move |rows| {
                    Gf2Matrix::from_rows(
                        c,
                        rows.into_iter()
                            .map(|bits| BitString::from_fn(c, |i| (bits >> i) & 1 == 1))
                            .collect(),
                    )
                },
            )
        })
    }

    proptest! {
        #[test]
        fn rank_equals_transpose_rank(m in small_matrix()) {
            prop_assert_eq!(m.rank(), m.transpose().rank());
        }

        #[test]
        fn nullspace_dimension_and_membership(m in small_matrix()) {
            let basis = m.nullspace_basis();
            prop_assert_eq!(basis.len() + m.rank(), m.col_count());
            for x in &basis {
                prop_assert!(m.apply(x).is_zero());
            }
        }

        #[test]
        fn mul_transpose_is_symmetric(m in small_matrix()) {
            let g = m.mul_transpose();
            prop_assert_eq!(g.clone().transpose(), g);
        }
    }
}
