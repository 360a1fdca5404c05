//! Simplicial complexes of F_2^m and their generating functions.
//!
//! A complex is stored intensionally through its antichain of maximal faces;
//! membership and counting never materialize the full member set unless an
//! enumeration is explicitly requested. The generating function of a complex
//! is evaluated by inclusion-exclusion over nonempty subsets S of the maximal
//! faces, where each subset contributes (-1)^(|S|+1) * prod_{i in /\S}(1+x_i).

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::gf2::BitVector;

/// Cap on the number of maximal faces: inclusion-exclusion walks all 2^|F|
/// nonempty subsets.
pub const MAX_MAXIMAL_FACES: usize = 20;

/// Work cap for expanding a generating polynomial term by term.
const POLY_WORK_CAP: u128 = 1 << 24;

/// Indicator that the supports of `u` and `x` are disjoint.
pub fn chi(u: &BitVector, x: &BitVector) -> bool {
    u.is_disjoint_from(x)
}

/// Downward-closed subset of F_2^m, represented by its maximal faces.
///
/// The empty complex (no members at all) is representable and distinct from
/// the complex whose only member is the zero vector.
#[derive(Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    m: usize,
    maximal: Vec<BitVector>,
}

impl SimplicialComplex {
    /// Builds the complex generated by `gens`: duplicates and dominated
    /// generators are dropped so that `maximal` is an antichain.
    pub fn from_maximal(m: usize, gens: &[BitVector]) -> Result<Self> {
        if m == 0 || m > crate::gf2::MAX_AMBIENT_DIM {
            return Err(Error::DimensionOutOfRange(m));
        }
        for g in gens {
            if g.dim() != m {
                return Err(Error::DimensionMismatch { left: m, right: g.dim() });
            }
        }
        let mut maximal: Vec<BitVector> = gens.to_vec();
        maximal.sort();
        maximal.dedup();
        let kept: Vec<BitVector> = maximal
            .iter()
            .filter(|g| !maximal.iter().any(|h| h != *g && g.is_subset_of(h)))
            .copied()
            .collect();
        Ok(Self { m, maximal: kept })
    }

    /// The complex with no members.
    pub fn empty(m: usize) -> Self {
        assert!(m >= 1 && m <= crate::gf2::MAX_AMBIENT_DIM);
        Self { m, maximal: Vec::new() }
    }

    /// The complex whose only member is the zero vector.
    pub fn zero_complex(m: usize) -> Self {
        Self { m, maximal: vec![BitVector::zero(m)] }
    }

    /// The complex generated by a single face.
    pub fn single_face(face: BitVector) -> Self {
        Self { m: face.dim(), maximal: vec![face] }
    }

    pub fn dim(&self) -> usize {
        self.m
    }

    pub fn maximal(&self) -> &[BitVector] {
        &self.maximal
    }

    pub fn is_empty_complex(&self) -> bool {
        self.maximal.is_empty()
    }

    /// Membership test against the generators.
    pub fn contains(&self, v: &BitVector) -> bool {
        assert_eq!(v.dim(), self.m, "contains: dimension mismatch");
        self.maximal.iter().any(|f| v.is_subset_of(f))
    }

    /// True when every member of `self` is a member of `other`.
    pub fn is_subcomplex_of(&self, other: &Self) -> bool {
        assert_eq!(self.m, other.m, "is_subcomplex_of: dimension mismatch");
        self.maximal.iter().all(|f| other.contains(f))
    }

    /// All members, sorted ascending by integer value of the bitmask.
    pub fn members(&self, budget: &Budget) -> Result<Vec<BitVector>> {
        let work: u128 = self.maximal.iter().map(|f| 1u128 << f.weight()).sum();
        if work > budget.max_set_size as u128 {
            return Err(Error::EnumerationCapExceeded {
                need: work,
                cap: budget.max_set_size as u128,
            });
        }
        let mut seen = BTreeSet::new();
        for f in &self.maximal {
            for sub in submasks(f.bits()) {
                seen.insert(sub);
            }
        }
        Ok(seen
            .into_iter()
            .map(|bits| BitVector::new(self.m, bits).expect("submask within dimension"))
            .collect())
    }

    /// Number of members, by inclusion-exclusion over the maximal faces.
    pub fn size(&self) -> Result<u128> {
        let total = self.char_sum(&BitVector::zero(self.m))?;
        debug_assert!(total >= 0);
        Ok(total as u128)
    }

    /// The character sum sum_{d in complex} (-1)^(u . d), evaluated without
    /// enumerating members: each nonempty subset S of the maximal faces
    /// contributes (-1)^(|S|+1) * 2^|/\S| when supp(u) misses /\S and zero
    /// otherwise. This is the generating function at ((-1)^u_1, ..., (-1)^u_m).
    pub fn char_sum(&self, u: &BitVector) -> Result<i128> {
        assert_eq!(u.dim(), self.m, "char_sum: dimension mismatch");
        self.check_face_count()?;
        let f = self.maximal.len();
        let mut acc: i128 = 0;
        for s in 1u32..(1u32 << f) {
            let mut isect = u64::MAX;
            let mut idx = s;
            while idx != 0 {
                let i = idx.trailing_zeros() as usize;
                isect &= self.maximal[i].bits();
                idx &= idx - 1;
            }
            if u.bits() & isect != 0 {
                continue;
            }
            let term = 1i128 << isect.count_ones();
            if s.count_ones() & 1 == 1 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        Ok(acc)
    }

    /// The generating polynomial of the complex, expanded by
    /// inclusion-exclusion. Signed contributions cancel so that the result
    /// has coefficient 1 exactly on member supports.
    pub fn generating_polynomial(&self, budget: &Budget) -> Result<MultilinearPoly> {
        self.check_face_count()?;
        let count = self.size()?;
        if count > budget.max_set_size as u128 {
            return Err(Error::EnumerationCapExceeded {
                need: count,
                cap: budget.max_set_size as u128,
            });
        }
        let f = self.maximal.len();
        let mut work: u128 = 0;
        let mut poly = MultilinearPoly::new(self.m);
        for s in 1u32..(1u32 << f) {
            let mut isect = u64::MAX;
            let mut idx = s;
            while idx != 0 {
                let i = idx.trailing_zeros() as usize;
                isect &= self.maximal[i].bits();
                idx &= idx - 1;
            }
            work += 1u128 << isect.count_ones();
            if work > POLY_WORK_CAP {
                return Err(Error::EnumerationCapExceeded { need: work, cap: POLY_WORK_CAP });
            }
            let sign: i64 = if s.count_ones() & 1 == 1 { 1 } else { -1 };
            for sub in submasks(isect) {
                poly.add_term(sub, sign);
            }
        }
        Ok(poly)
    }

    fn check_face_count(&self) -> Result<()> {
        if self.maximal.len() > MAX_MAXIMAL_FACES {
            return Err(Error::TooManyMaximalFaces {
                count: self.maximal.len(),
                cap: MAX_MAXIMAL_FACES,
            });
        }
        Ok(())
    }
}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SimplicialComplex(m={}, maximal=[", self.m)?;
        for (i, g) in self.maximal.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, "])")
    }
}

/// All submasks of `mask`, including zero and the mask itself.
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

/// Multilinear polynomial in m variables with integer coefficients; a term
/// is keyed by its variable-set bitmask.
#[derive(Clone, PartialEq, Eq)]
pub struct MultilinearPoly {
    m: usize,
    terms: BTreeMap<u64, i64>,
}

impl MultilinearPoly {
    pub fn new(m: usize) -> Self {
        Self { m, terms: BTreeMap::new() }
    }

    pub fn from_terms(m: usize, terms: &[(u64, i64)]) -> Result<Self> {
        let mut poly = Self::new(m);
        for &(mask, coeff) in terms {
            BitVector::new(m, mask)?;
            poly.add_term(mask, coeff);
        }
        Ok(poly)
    }

    pub fn add_term(&mut self, mask: u64, delta: i64) {
        let entry = self.terms.entry(mask).or_insert(0);
        *entry += delta;
        if *entry == 0 {
            self.terms.remove(&mask);
        }
    }

    pub fn coefficient(&self, mask: u64) -> i64 {
        self.terms.get(&mask).copied().unwrap_or(0)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (u64, i64)> + '_ {
        self.terms.iter().map(|(&m, &c)| (m, c))
    }

    /// Evaluation at x_i = (-1)^(u_i).
    pub fn eval_at_signs(&self, u: &BitVector) -> i128 {
        assert_eq!(u.dim(), self.m, "eval_at_signs: dimension mismatch");
        self.terms
            .iter()
            .map(|(&mask, &c)| {
                if (mask & u.bits()).count_ones() & 1 == 1 {
                    -(c as i128)
                } else {
                    c as i128
                }
            })
            .sum()
    }
}

impl fmt::Display for MultilinearPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut ordered: Vec<(u64, i64)> = self.terms().collect();
        ordered.sort_by_key(|&(mask, _)| (mask.count_ones(), mask));
        for (i, (mask, coeff)) in ordered.iter().enumerate() {
            if i > 0 {
                write!(f, " {} ", if *coeff < 0 { "-" } else { "+" })?;
            } else if *coeff < 0 {
                write!(f, "-")?;
            }
            let mag = coeff.unsigned_abs();
            if mag != 1 || *mask == 0 {
                write!(f, "{mag}")?;
            }
            let mut bits = *mask;
            while bits != 0 {
                write!(f, "x{}", bits.trailing_zeros() + 1)?;
                bits &= bits - 1;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MultilinearPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultilinearPoly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn bv(s: &str) -> BitVector {
        BitVector::parse(s).unwrap()
    }

    fn two_face_complex() -> SimplicialComplex {
        SimplicialComplex::from_maximal(3, &[bv("110"), bv("011")]).unwrap()
    }

    #[test]
    fn from_maximal_single_face() {
        let c = SimplicialComplex::single_face(bv("110"));
        let members = c.members(&Budget::default()).unwrap();
        let bits: Vec<u64> = members.iter().map(BitVector::bits).collect();
        assert_eq!(bits, vec![0b000, 0b001, 0b010, 0b011]);
    }

    #[test]
    fn from_maximal_drops_dominated_generator() {
        let c = SimplicialComplex::from_maximal(3, &[bv("100"), bv("110")]).unwrap();
        assert_eq!(c.maximal(), &[bv("110")]);
    }

    #[test]
    fn from_maximal_two_faces() {
        let c = two_face_complex();
        assert_eq!(c.maximal().len(), 2);
        assert_eq!(c.size().unwrap(), 6);
    }

    #[test]
    fn contains_examples() {
        let c = two_face_complex();
        assert!(!c.contains(&bv("101")));
        assert!(c.contains(&BitVector::zero(3)));
        assert!(SimplicialComplex::single_face(bv("110")).contains(&bv("010")));
    }

    #[test]
    fn members_full_cube() {
        let c = SimplicialComplex::single_face(bv("111"));
        assert_eq!(c.members(&Budget::default()).unwrap().len(), 8);
    }

    #[test]
    fn members_two_faces() {
        let got: Vec<u64> = two_face_complex()
            .members(&Budget::default())
            .unwrap()
            .iter()
            .map(BitVector::bits)
            .collect();
        assert_eq!(got, vec![0b000, 0b001, 0b010, 0b011, 0b100, 0b110]);
    }

    // All weight-<=2 vectors of F_2^3 form a complex with seven members.
    #[test]
    fn members_weight_two_down_set() {
        let c = SimplicialComplex::from_maximal(3, &[bv("110"), bv("101"), bv("011")]).unwrap();
        assert_eq!(c.members(&Budget::default()).unwrap().len(), 7);
        assert_eq!(c.size().unwrap(), 7);
    }

    #[test]
    fn size_examples() {
        assert_eq!(SimplicialComplex::single_face(bv("1111")).size().unwrap(), 16);
        let a = SimplicialComplex::from_maximal(5, &[bv("11000"), bv("00111")]).unwrap();
        assert_eq!(a.size().unwrap(), 4 + 8 - 1);
    }

    #[test]
    fn chi_examples() {
        assert!(chi(&BitVector::zero(3), &bv("110")));
        assert!(!chi(&bv("100"), &bv("110")));
        assert!(chi(&bv("001"), &bv("110")));
    }

    #[test]
    fn generating_polynomial_two_faces() {
        let poly = two_face_complex().generating_polynomial(&Budget::default()).unwrap();
        let expected = MultilinearPoly::from_terms(
            3,
            &[(0b000, 1), (0b001, 1), (0b010, 1), (0b100, 1), (0b011, 1), (0b110, 1)],
        )
        .unwrap();
        assert_eq!(poly, expected);
        assert_eq!(poly.to_string(), "1 + x1 + x2 + x3 + x1x2 + x2x3");
    }

    #[test]
    fn generating_polynomial_degenerate_complexes() {
        let empty = SimplicialComplex::empty(3);
        assert!(empty.generating_polynomial(&Budget::default()).unwrap().is_zero());
        assert_eq!(empty.size().unwrap(), 0);

        let zero = SimplicialComplex::zero_complex(3);
        let poly = zero.generating_polynomial(&Budget::default()).unwrap();
        assert_eq!(poly, MultilinearPoly::from_terms(3, &[(0, 1)]).unwrap());
    }

    #[test]
    fn generating_polynomial_single_face_product() {
        let poly = SimplicialComplex::single_face(bv("11"))
            .generating_polynomial(&Budget::default())
            .unwrap();
        let expected =
            MultilinearPoly::from_terms(2, &[(0b00, 1), (0b01, 1), (0b10, 1), (0b11, 1)]).unwrap();
        assert_eq!(poly, expected);
    }

    #[test]
    fn char_sum_single_face_closed_form() {
        let face = bv("0110");
        let c = SimplicialComplex::single_face(face);
        for u_bits in 0..16u64 {
            let u = BitVector::new(4, u_bits).unwrap();
            let expected = if chi(&u, &face) { 1i128 << face.weight() } else { 0 };
            assert_eq!(c.char_sum(&u).unwrap(), expected);
        }
    }

    #[test]
    fn char_sum_two_face_values() {
        let c = two_face_complex();
        assert_eq!(c.char_sum(&BitVector::zero(3)).unwrap(), 6);
        assert_eq!(c.char_sum(&bv("100")).unwrap(), 2);
    }

    #[test]
    fn face_count_cap_enforced() {
        let gens: Vec<BitVector> =
            (1..=21).map(|c| BitVector::from_support(21, &[c]).unwrap()).collect();
        let c = SimplicialComplex::from_maximal(21, &gens).unwrap();
        assert!(matches!(
            c.char_sum(&BitVector::zero(21)),
            Err(Error::TooManyMaximalFaces { count: 21, .. })
        ));
    }

    fn direct_char_sum(c: &SimplicialComplex, u: &BitVector) -> i128 {
        c.members(&Budget::default())
            .unwrap()
            .iter()
            .map(|d| if d.dot(u) { -1i128 } else { 1 })
            .sum()
    }

    fn arb_complex() -> impl Strategy<Value = (SimplicialComplex, usize)> {
        (1usize..=10).prop_flat_map(|m| {
            proptest::collection::vec(proptest::bits::u64::between(0, m), 1..=4).prop_map(
                move |gens| {
                    let gens: Vec<BitVector> =
                        gens.into_iter().map(|b| BitVector::new(m, b).unwrap()).collect();
                    (SimplicialComplex::from_maximal(m, &gens).unwrap(), m)
                },
            )
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        // Inclusion-exclusion evaluation equals the direct character sum at
        // every point of F_2^m.
        #[test]
        fn char_sum_matches_direct_sum((c, m) in arb_complex()) {
            for u_bits in 0..(1u64 << m) {
                let u = BitVector::new(m, u_bits).unwrap();
                prop_assert_eq!(c.char_sum(&u).unwrap(), direct_char_sum(&c, &u));
            }
        }

        // Polynomial coefficients are exactly the membership indicator.
        #[test]
        fn polynomial_is_membership_indicator((c, m) in arb_complex()) {
            let poly = c.generating_polynomial(&Budget::default()).unwrap();
            for bits in 0..(1u64 << m.min(8)) {
                let v = BitVector::new(m, bits).unwrap();
                let expected = i64::from(c.contains(&v));
                prop_assert_eq!(poly.coefficient(bits), expected);
            }
        }

        // Counting by inclusion-exclusion agrees with enumeration, and the
        // all-ones evaluation point recovers the size.
        #[test]
        fn size_matches_enumeration((c, m) in arb_complex()) {
            let members = c.members(&Budget::default()).unwrap();
            prop_assert_eq!(c.size().unwrap(), members.len() as u128);
            prop_assert_eq!(
                c.char_sum(&BitVector::zero(m)).unwrap(),
                members.len() as i128
            );
        }

        // The stored generators always form an antichain, and generator-based
        // membership agrees with the enumerated member list.
        #[test]
        fn antichain_and_membership_agree((c, m) in arb_complex()) {
            for f in c.maximal() {
                for g in c.maximal() {
                    if f != g {
                        prop_assert!(!f.is_subset_of(g));
                    }
                }
            }
            let members: std::collections::BTreeSet<u64> = c
                .members(&Budget::default())
                .unwrap()
                .iter()
                .map(BitVector::bits)
                .collect();
            for bits in 0..(1u64 << m.min(8)) {
                let v = BitVector::new(m, bits).unwrap();
                prop_assert_eq!(c.contains(&v), members.contains(&bits));
            }
        }

        // eval_at_signs on the expanded polynomial agrees with the
        // inclusion-exclusion evaluation.
        #[test]
        fn polynomial_evaluation_agrees((c, m) in arb_complex()) {
            let poly = c.generating_polynomial(&Budget::default()).unwrap();
            for u_bits in 0..(1u64 << m.min(8)) {
                let u = BitVector::new(m, u_bits).unwrap();
                prop_assert_eq!(poly.eval_at_signs(&u), c.char_sum(&u).unwrap());
            }
        }
    }
}
