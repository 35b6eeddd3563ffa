//! Topes of the hypercube graph `H(t,2)`, the distinguished symmetric
//! `2t`-cycle, and the decomposition of a tope in the cycle basis.
//!
//! A tope is a sign vector in `{1,-1}^t`. The cycle `R` is
//!
//! ```text
//! R^0 = (1, ..., 1)
//! R^s = R^0 with coordinates 1..=s negated,   1 <= s <= t-1
//! R^(k+t) = -R^k,                             0 <= k <= t-1
//! ```
//!
//! and `(R^0, ..., R^(t-1))` is a basis of `R^t`. Every tope `T` has a unique
//! coordinate vector `x` in `{-1,0,1}^t` with `T = sum_i x_i R^(i-1)`.
//! Coordinate `e` of that equation reads
//! `T(e) = sum_{i<=e} x_i - sum_{i>e} x_i`, so consecutive differences give
//! `x_(e+1) = (T(e+1) - T(e)) / 2` and `x_1` follows from the last row.
//!
//! Ground-set elements are 1-based everywhere in the public API.

use std::fmt;

use crate::error::{Error, Result};

/// Largest supported ground-set size; topes are stored as `u64` masks.
pub const MAX_T: u32 = 64;

/// Size `t` of the ground set `E_t = {1, ..., t}`, with `3 <= t <= 64`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GroundSize(u32);

impl GroundSize {
    pub fn new(t: u32) -> Result<Self> {
        if !(3..=MAX_T).contains(&t) {
            return Err(Error::Range {
                what: "ground-set size t",
                value: t as i64,
                lo: 3,
                hi: MAX_T as i64,
            });
        }
        Ok(GroundSize(t))
    }

    pub fn get(self) -> u32 {
        self.0
    }

    pub fn as_usize(self) -> usize {
        self.0 as usize
    }

    /// Mask with the low `t` bits set.
    pub(crate) fn full_mask(self) -> u64 {
        if self.0 == 64 {
            u64::MAX
        } else {
            (1u64 << self.0) - 1
        }
    }
}

impl fmt::Display for GroundSize {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A subset of `{1, ..., 64}`, stored with bit `e-1` set for element `e`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SubsetMask(u64);

impl SubsetMask {
    pub const EMPTY: SubsetMask = SubsetMask(0);

    /// Builds a subset from 1-based elements.
    pub fn from_elements<I: IntoIterator<Item = usize>>(elements: I) -> Result<Self> {
        let mut bits = 0u64;
        for e in elements {
            if !(1..=MAX_T as usize).contains(&e) {
                return Err(Error::Range {
                    what: "ground-set element",
                    value: e as i64,
                    lo: 1,
                    hi: MAX_T as i64,
                });
            }
            bits |= 1u64 << (e - 1);
        }
        Ok(SubsetMask(bits))
    }

    /// The whole ground set `[t]`.
    pub fn full(t: GroundSize) -> Self {
        SubsetMask(t.full_mask())
    }

    /// The interval `[lo, hi]` (1-based, inclusive). Empty when `lo > hi`.
    pub fn interval(lo: usize, hi: usize) -> Result<Self> {
        if lo > hi {
            return Ok(SubsetMask::EMPTY);
        }
        SubsetMask::from_elements(lo..=hi)
    }

    pub fn from_bits(bits: u64) -> Self {
        SubsetMask(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn contains(self, e: usize) -> bool {
        (1..=64).contains(&e) && self.0 & (1u64 << (e - 1)) != 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: SubsetMask) -> SubsetMask {
        SubsetMask(self.0 | other.0)
    }

    pub fn intersection(self, other: SubsetMask) -> SubsetMask {
        SubsetMask(self.0 & other.0)
    }

    pub fn difference(self, other: SubsetMask) -> SubsetMask {
        SubsetMask(self.0 & !other.0)
    }

    pub fn is_disjoint(self, other: SubsetMask) -> bool {
        self.0 & other.0 == 0
    }

    pub fn is_subset(self, other: SubsetMask) -> bool {
        self.0 & !other.0 == 0
    }

    /// Ascending 1-based elements.
    pub fn elements(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                return None;
            }
            let e = bits.trailing_zeros() as usize + 1;
            bits &= bits - 1;
            Some(e)
        })
    }

    /// Errors unless every element lies in `[t]`.
    pub fn check_within(self, t: GroundSize) -> Result<()> {
        let outside = self.0 & !t.full_mask();
        if outside != 0 {
            return Err(Error::Range {
                what: "subset element",
                value: outside.trailing_zeros() as i64 + 1,
                lo: 1,
                hi: t.get() as i64,
            });
        }
        Ok(())
    }

    /// `A ∩ {1, t}`.
    pub fn boundary(self, t: GroundSize) -> SubsetMask {
        let ends = (1u64) | (1u64 << (t.get() - 1));
        SubsetMask(self.0 & ends)
    }
}

impl fmt::Display for SubsetMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, e) in self.elements().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str("}")
    }
}

/// A vertex of `H(t,2)`: a sign vector of length `t`.
///
/// Stored as the mask of its negative part.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Tope {
    t: GroundSize,
    neg: u64,
}

impl Tope {
    /// The positive tope `T^(+) = (1, ..., 1)`.
    pub fn positive(t: GroundSize) -> Self {
        Tope { t, neg: 0 }
    }

    /// The negative tope `T^(-) = (-1, ..., -1)`.
    pub fn negative(t: GroundSize) -> Self {
        Tope {
            t,
            neg: t.full_mask(),
        }
    }

    /// Builds a tope from explicit `±1` entries.
    pub fn from_signs(signs: &[i8]) -> Result<Self> {
        let t = GroundSize::new(signs.len() as u32)?;
        let mut neg = 0u64;
        for (i, &s) in signs.iter().enumerate() {
            match s {
                1 => {}
                -1 => neg |= 1u64 << i,
                other => {
                    return Err(Error::Range {
                        what: "tope entry",
                        value: other as i64,
                        lo: -1,
                        hi: 1,
                    })
                }
            }
        }
        Ok(Tope { t, neg })
    }

    pub(crate) fn from_neg_bits(t: GroundSize, neg: u64) -> Self {
        Tope {
            t,
            neg: neg & t.full_mask(),
        }
    }

    pub fn ground_size(&self) -> GroundSize {
        self.t
    }

    pub fn len(&self) -> usize {
        self.t.as_usize()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Entry `T(e)` for 1-based `e`.
    pub fn sign(&self, e: usize) -> i8 {
        assert!((1..=self.len()).contains(&e), "element {e} outside [1, {}]", self.t);
        if self.neg & (1u64 << (e - 1)) != 0 {
            -1
        } else {
            1
        }
    }

    pub fn signs(&self) -> Vec<i8> {
        (1..=self.len()).map(|e| self.sign(e)).collect()
    }

    pub fn negate(&self) -> Tope {
        Tope {
            t: self.t,
            neg: !self.neg & self.t.full_mask(),
        }
    }

    pub fn negative_bits(&self) -> u64 {
        self.neg
    }
}

impl fmt::Display for Tope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_vector(f, self.signs().into_iter())
    }
}

fn write_vector(f: &mut fmt::Formatter<'_>, it: impl Iterator<Item = i8>) -> fmt::Result {
    f.write_str("(")?;
    for (i, v) in it.enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{v}")?;
    }
    f.write_str(")")
}

/// Coordinates of a tope in the basis `(R^0, ..., R^(t-1))`.
///
/// Entries lie in `{-1, 0, 1}` and the support has odd size.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DecompVector {
    coords: Vec<i8>,
}

impl DecompVector {
    pub fn new(coords: Vec<i8>) -> Result<Self> {
        if let Some((i, &v)) = coords.iter().enumerate().find(|(_, v)| !(-1..=1).contains(*v)) {
            return Err(Error::InvalidDecomposition(format!(
                "coordinate {} is {v}, expected -1, 0 or 1",
                i + 1
            )));
        }
        let support = coords.iter().filter(|&&v| v != 0).count();
        if support % 2 == 0 {
            return Err(Error::InvalidDecomposition(format!(
                "support size {support} is even"
            )));
        }
        Ok(DecompVector { coords })
    }

    /// `sigma(s)`: the `s`-th standard basis vector (1-based).
    pub fn sigma(s: usize, t: GroundSize) -> Self {
        assert!((1..=t.as_usize()).contains(&s));
        let mut coords = vec![0; t.as_usize()];
        coords[s - 1] = 1;
        DecompVector { coords }
    }

    pub fn coords(&self) -> &[i8] {
        &self.coords
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    /// `x_i` for 1-based `i`.
    pub fn get(&self, i: usize) -> i8 {
        self.coords[i - 1]
    }

    pub fn support_size(&self) -> usize {
        self.coords.iter().filter(|&&v| v != 0).count()
    }

    /// `||x||^2`.
    pub fn norm_sq(&self) -> i64 {
        self.coords.iter().map(|&v| (v as i64) * (v as i64)).sum()
    }

    pub fn dot(&self, other: &DecompVector) -> Result<i64> {
        if self.len() != other.len() {
            return Err(Error::Dimension {
                left: self.len(),
                right: other.len(),
            });
        }
        Ok(self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(&a, &b)| a as i64 * b as i64)
            .sum())
    }
}

impl fmt::Display for DecompVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_vector(f, self.coords.iter().copied())
    }
}

/// A maximal run `[lo, hi]` of consecutive elements of a subset.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IntervalRun {
    pub lo: usize,
    pub hi: usize,
}

impl IntervalRun {
    pub fn len(&self) -> usize {
        self.hi - self.lo + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

/// One signed cycle vertex `coefficient * R^cycle_index`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct QTerm {
    pub coefficient: i8,
    pub cycle_index: usize,
}

impl QTerm {
    /// The signed vertex as a cycle index in `0..2t` (`-R^k = R^(k+t)`).
    pub fn as_cycle_vertex(&self, t: GroundSize) -> usize {
        if self.coefficient > 0 {
            self.cycle_index
        } else {
            self.cycle_index + t.as_usize()
        }
    }
}

impl fmt::Display for QTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = if self.coefficient > 0 { '+' } else { '-' };
        write!(f, "{sign}R{}", self.cycle_index)
    }
}

/// The inclusion-minimal set `Q(T, R)` of signed cycle vertices summing to a
/// tope.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QSet {
    pub terms: Vec<QTerm>,
}

impl QSet {
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
}

impl fmt::Display for QSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, term) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{term}")?;
        }
        Ok(())
    }
}

/// Vertex `R^k` of the distinguished cycle, `0 <= k <= 2t-1`.
pub fn cycle_vertex(t: GroundSize, k: usize) -> Result<Tope> {
    let n = t.as_usize();
    if k >= 2 * n {
        return Err(Error::Range {
            what: "cycle index k",
            value: k as i64,
            lo: 0,
            hi: 2 * n as i64 - 1,
        });
    }
    let (s, flip) = if k < n { (k, false) } else { (k - n, true) };
    // R^s negates [s]: the low s bits.
    let base = Tope::from_neg_bits(t, (1u64 << s) - 1);
    Ok(if flip { base.negate() } else { base })
}

/// The tope `_{-A}T^(+)` whose negative part is `A`.
pub fn tope_from_negative_set(t: GroundSize, a: SubsetMask) -> Result<Tope> {
    a.check_within(t)?;
    Ok(Tope::from_neg_bits(t, a.bits()))
}

/// `T^- = {e : T(e) = -1}`.
pub fn negative_part(tope: &Tope) -> SubsetMask {
    SubsetMask(tope.neg)
}

/// The unique `x` with `T = sum_i x_i R^(i-1)`.
pub fn decompose(tope: &Tope) -> DecompVector {
    let n = tope.len();
    let mut coords = vec![0i8; n];
    for (e, c) in coords.iter_mut().enumerate().skip(1) {
        // 0-based slot e holds x_(e+1) = (T(e+1) - T(e)) / 2.
        *c = (tope.sign(e + 1) - tope.sign(e)) / 2;
    }
    let tail: i8 = coords[1..].iter().sum();
    coords[0] = tope.sign(n) - tail;
    DecompVector { coords }
}

/// `sum_i x_i R^(i-1)`, which must be a tope.
pub fn recompose(x: &DecompVector, t: GroundSize) -> Result<Tope> {
    if x.len() != t.as_usize() {
        return Err(Error::Dimension {
            left: x.len(),
            right: t.as_usize(),
        });
    }
    // Re-validate: the fields are private but a vector of the right shape may
    // still come from another ground size.
    let x = DecompVector::new(x.coords.clone())?;
    // T(e) = prefix(e) - (total - prefix(e)).
    let total: i64 = x.coords.iter().map(|&v| v as i64).sum();
    let mut prefix = 0i64;
    let mut neg = 0u64;
    for (i, &v) in x.coords.iter().enumerate() {
        prefix += v as i64;
        match 2 * prefix - total {
            1 => {}
            -1 => neg |= 1u64 << i,
            other => {
                return Err(Error::InvalidDecomposition(format!(
                    "coordinate {} of the sum is {other}",
                    i + 1
                )))
            }
        }
    }
    Ok(Tope::from_neg_bits(t, neg))
}

/// `Q(T, R)`: the pairs `(x_i, i-1)` for nonzero `x_i`.
pub fn q_set(tope: &Tope) -> QSet {
    let x = decompose(tope);
    QSet {
        terms: x
            .coords
            .iter()
            .enumerate()
            .filter(|(_, &v)| v != 0)
            .map(|(i, &v)| QTerm {
                coefficient: v,
                cycle_index: i,
            })
            .collect(),
    }
}

/// `|Q(T, R)|`, computed from sign changes without building `x`.
///
/// `x_(e+1)` is nonzero exactly where `T` changes sign between `e` and
/// `e+1`, and `x_1 = (T(1) + T(t)) / 2` is nonzero exactly when the two ends
/// agree.
pub fn q_size(tope: &Tope) -> usize {
    q_size_bits(tope.t, tope.neg)
}

#[inline]
pub(crate) fn q_size_bits(t: GroundSize, neg: u64) -> usize {
    let n = t.get();
    let inner = if n == 64 { u64::MAX >> 1 } else { (1u64 << (n - 1)) - 1 };
    let changes = ((neg ^ (neg >> 1)) & inner).count_ones() as usize;
    let first = neg & 1;
    let last = (neg >> (n - 1)) & 1;
    changes + usize::from(first == last)
}

/// `S(T1, T2) = {e : T1(e) = -T2(e)}`.
pub fn separation_set(a: &Tope, b: &Tope) -> Result<SubsetMask> {
    if a.len() != b.len() {
        return Err(Error::Dimension {
            left: a.len(),
            right: b.len(),
        });
    }
    Ok(SubsetMask(a.neg ^ b.neg))
}

/// Maximal runs of consecutive elements of `a`, ascending.
pub fn interval_runs(a: SubsetMask, t: GroundSize) -> Result<Vec<IntervalRun>> {
    a.check_within(t)?;
    let mut runs = Vec::new();
    let mut bits = a.bits();
    while bits != 0 {
        let lo = bits.trailing_zeros() as usize;
        let len = (bits >> lo).trailing_ones() as usize;
        runs.push(IntervalRun {
            lo: lo + 1,
            hi: lo + len,
        });
        if lo + len >= 64 {
            break;
        }
        bits &= !(((1u64 << len) - 1) << lo);
    }
    Ok(runs)
}

/// `rho(A)`: the number of maximal runs of `a`.
pub fn rho(a: SubsetMask) -> usize {
    let bits = a.bits();
    // A run starts wherever a member has no member directly below it.
    (bits & !(bits << 1)).count_ones() as usize
}

/// `|Q(_{-A}T^(+), R)|` predicted from the run structure of `A`:
/// `2 rho(A) + 1` when `A` avoids both ends of `[t]`, `2 rho(A) - 1`
/// otherwise.
pub fn predicted_q_size(a: SubsetMask, t: GroundSize) -> Result<usize> {
    a.check_within(t)?;
    let r = rho(a);
    Ok(if a.boundary(t).is_empty() {
        2 * r + 1
    } else {
        2 * r - 1
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gs(t: u32) -> GroundSize {
        GroundSize::new(t).unwrap()
    }

    fn set(elems: &[usize]) -> SubsetMask {
        SubsetMask::from_elements(elems.iter().copied()).unwrap()
    }

    fn from_neg(t: u32, elems: &[usize]) -> Tope {
        tope_from_negative_set(gs(t), set(elems)).unwrap()
    }

    #[test]
    fn ground_size_bounds() {
        assert!(GroundSize::new(2).is_err());
        assert!(GroundSize::new(3).is_ok());
        assert!(GroundSize::new(64).is_ok());
        assert!(GroundSize::new(65).is_err());
    }

    #[test]
    fn cycle_vertex_examples() {
        let t = gs(3);
        assert_eq!(cycle_vertex(t, 0).unwrap().signs(), vec![1, 1, 1]);
        assert_eq!(cycle_vertex(t, 2).unwrap().signs(), vec![-1, -1, 1]);
        assert_eq!(cycle_vertex(t, 4).unwrap().signs(), vec![1, -1, -1]);
        assert!(matches!(cycle_vertex(t, 6), Err(Error::Range { .. })));
    }

    #[test]
    fn cycle_is_a_cycle() {
        for n in [3u32, 4, 7, 64] {
            let t = gs(n);
            let len = 2 * n as usize;
            for k in 0..len {
                let a = cycle_vertex(t, k).unwrap();
                let b = cycle_vertex(t, (k + 1) % len).unwrap();
                assert_eq!(separation_set(&a, &b).unwrap().len(), 1, "t={n} k={k}");
            }
        }
    }

    #[test]
    fn negative_set_examples() {
        assert_eq!(from_neg(4, &[]).signs(), vec![1, 1, 1, 1]);
        assert_eq!(from_neg(4, &[1, 2, 3, 4]).signs(), vec![-1, -1, -1, -1]);
        assert_eq!(from_neg(5, &[2, 4]).signs(), vec![1, -1, 1, -1, 1]);
        assert!(tope_from_negative_set(gs(4), set(&[5])).is_err());
    }

    #[test]
    fn negative_part_examples() {
        let t = Tope::from_signs(&[1, 1, 1]).unwrap();
        assert_eq!(negative_part(&t), SubsetMask::EMPTY);
        let t = Tope::from_signs(&[-1, 1, -1]).unwrap();
        assert_eq!(negative_part(&t), set(&[1, 3]));
        let t = Tope::from_signs(&[-1, -1, -1, -1]).unwrap();
        assert_eq!(negative_part(&t), set(&[1, 2, 3, 4]));
    }

    #[test]
    fn decompose_examples() {
        assert_eq!(decompose(&Tope::positive(gs(5))).coords(), &[1, 0, 0, 0, 0]);
        assert_eq!(decompose(&Tope::negative(gs(4))).coords(), &[-1, 0, 0, 0]);
        assert_eq!(decompose(&from_neg(5, &[2])).coords(), &[1, -1, 1, 0, 0]);
        assert_eq!(decompose(&from_neg(5, &[1, 2, 4])).coords(), &[0, 0, 1, -1, 1]);
    }

    #[test]
    fn recompose_examples() {
        let t = gs(5);
        let x = DecompVector::new(vec![1, 0, 0, 0, 0]).unwrap();
        assert_eq!(recompose(&x, t).unwrap(), Tope::positive(t));
        let x = DecompVector::new(vec![1, -1, 1, 0, 0]).unwrap();
        assert_eq!(recompose(&x, t).unwrap().signs(), vec![1, -1, 1, 1, 1]);
        let x = DecompVector::new(vec![0, 1, 0, 0, 0]).unwrap();
        assert_eq!(recompose(&x, t).unwrap().signs(), vec![-1, 1, 1, 1, 1]);
    }

    #[test]
    fn recompose_rejects_non_topes() {
        let t = gs(3);
        // R^0 + R^1 + R^2 = (-1, 1, 3).
        let x = DecompVector::new(vec![1, 1, 1]).unwrap();
        assert!(matches!(recompose(&x, t), Err(Error::InvalidDecomposition(_))));
        assert!(DecompVector::new(vec![1, 1, 0]).is_err());
        assert!(DecompVector::new(vec![2, 0, 0]).is_err());
        let x = DecompVector::new(vec![1, 0, 0, 0]).unwrap();
        assert!(matches!(recompose(&x, t), Err(Error::Dimension { .. })));
    }

    #[test]
    fn q_examples() {
        assert_eq!(q_size(&Tope::positive(gs(7))), 1);
        assert_eq!(q_size(&Tope::negative(gs(7))), 1);
        assert_eq!(q_size(&from_neg(5, &[2])), 3);
        assert_eq!(q_size(&from_neg(5, &[1])), 1);
        let q = q_set(&from_neg(5, &[2]));
        assert_eq!(q.to_string(), "+R0 -R1 +R2");
    }

    #[test]
    fn separation_examples() {
        let t = gs(4);
        let sep = separation_set(&Tope::positive(t), &Tope::negative(t)).unwrap();
        assert_eq!(sep, set(&[1, 2, 3, 4]));
        let a = Tope::from_signs(&[1, 1, -1, 1]).unwrap();
        let b = Tope::from_signs(&[1, -1, -1, -1]).unwrap();
        assert_eq!(separation_set(&a, &b).unwrap(), set(&[2, 4]));
        assert_eq!(separation_set(&a, &a).unwrap(), SubsetMask::EMPTY);
        let c = Tope::positive(gs(5));
        assert!(matches!(separation_set(&a, &c), Err(Error::Dimension { .. })));
    }

    #[test]
    fn interval_examples() {
        let runs = interval_runs(set(&[2, 3, 5, 6, 9]), gs(10)).unwrap();
        assert_eq!(
            runs,
            vec![
                IntervalRun { lo: 2, hi: 3 },
                IntervalRun { lo: 5, hi: 6 },
                IntervalRun { lo: 9, hi: 9 }
            ]
        );
        assert_eq!(rho(set(&[2, 3, 5, 6, 9])), 3);
        assert!(interval_runs(SubsetMask::EMPTY, gs(4)).unwrap().is_empty());
        assert_eq!(rho(SubsetMask::EMPTY), 0);
        let full = SubsetMask::full(gs(64));
        assert_eq!(interval_runs(full, gs(64)).unwrap(), vec![IntervalRun { lo: 1, hi: 64 }]);
        assert_eq!(rho(full), 1);
    }

    #[test]
    fn predicted_examples() {
        assert_eq!(predicted_q_size(set(&[2]), gs(5)).unwrap(), 3);
        assert_eq!(predicted_q_size(set(&[1]), gs(5)).unwrap(), 1);
        assert_eq!(predicted_q_size(set(&[1, 5]), gs(5)).unwrap(), 3);
        assert_eq!(predicted_q_size(SubsetMask::EMPTY, gs(5)).unwrap(), 1);
    }

    #[test]
    fn display_formats() {
        assert_eq!(set(&[2, 4]).to_string(), "{2,4}");
        assert_eq!(from_neg(3, &[2]).to_string(), "(1,-1,1)");
        assert_eq!(decompose(&from_neg(3, &[2])).to_string(), "(1,-1,1)");
    }
}
