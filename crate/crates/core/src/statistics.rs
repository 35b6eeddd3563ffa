//! Counting statistics for topes and for ordered pairs of disjoint subsets.
//!
//! The pair family for ground size `t` consists of ordered pairs `(A, B)` of
//! disjoint subsets with `0 < |A| = j'`, `0 < |B| = j''` and `j' + j'' < t`,
//! labelled by `ℓ' = |Q(_{-A}T^(+))|`, `ℓ'' = |Q(_{-B}T^(+))|` and
//! `ℓ = |Q(_{-(A∪B)}T^(+))|`. The pairs split into nine classes by how `A`
//! and `B` meet the ends `{1, t}` (see [`BoundaryCase`]), and each class has
//! three evaluations here:
//!
//! * [`count_pairs_case`]: the binomial closed form for the class;
//! * [`count_pairs_case_structural`]: (number of Smirnov words) × (three
//!   composition counts), following the run-length encoding of
//!   [`crate::smirnov::encode_pair`];
//! * [`brute_force_pairs`]: exhaustive enumeration of all `3^t` colorings.
//!
//! The first two are built from the same Smirnov closed forms and always
//! agree with each other. Both match the enumeration up to `t = 6`; from
//! `t = 7` on they undercount wherever the Smirnov closed forms do.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::thread;

use crate::arith::{self, Count};
use crate::error::{Error, Result};
use crate::hypercube::{q_size_bits, GroundSize, SubsetMask};
use crate::smirnov::{composition_count, smirnov_count_closed, Letter, LetterCounts};

/// Default cap on `t` for the `3^t` pair enumeration.
pub const DEFAULT_PAIR_CAP: u32 = 14;
/// Default cap on `t` for the `2^t` tope enumeration.
pub const DEFAULT_TOPE_CAP: u32 = 20;

/// Number of topes with `|Q(T, R)| = ell`: `2 C(t, ell)` for odd
/// `1 <= ell <= t`.
pub fn count_topes_with_qsize(t: GroundSize, ell: u32) -> Result<Count> {
    if ell.is_multiple_of(2) || ell > t.get() {
        return Err(Error::Domain(format!(
            "ell must be odd with 1 <= ell <= t = {t}, got {ell}"
        )));
    }
    arith::mul(2, arith::binomial(t.get() as i64, ell as i64)?)
}

/// Number of topes with `|T^-| = j` and `|Q(T, R)| = ell`, for
/// `1 <= j <= t-1`:
///
/// ```text
/// C(j-1, h) C(t-j, h) + C(t-j-1, h) C(j, h),   h = (ell-1)/2,
/// ```
///
/// and zero when `j < h` or `j > t - h`.
pub fn count_topes_with_negpart_and_qsize(t: GroundSize, j: u32, ell: u32) -> Result<Count> {
    let n = t.get() as i64;
    if j < 1 || j as i64 > n - 1 {
        return Err(Error::Domain(format!("j must lie in [1, {}], got {j}", n - 1)));
    }
    if ell.is_multiple_of(2) {
        return Err(Error::Domain(format!("ell must be odd and positive, got {ell}")));
    }
    let j = j as i64;
    let h = (ell as i64 - 1) / 2;
    if j < h || j > n - h {
        return Ok(0);
    }
    let c = arith::binomial;
    arith::add(
        arith::mul(c(j - 1, h)?, c(n - j, h)?)?,
        arith::mul(c(n - j - 1, h)?, c(j, h)?)?,
    )
}

/// The nine ways an ordered pair of disjoint sets can meet `{1, t}`.
///
/// The pair is `(A ∩ {1,t}, B ∩ {1,t})`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BoundaryCase {
    /// `(∅, ∅)`
    I,
    /// `({1,t}, ∅)`
    II,
    /// `(∅, {t})`
    III,
    /// `({1}, ∅)`
    IV,
    /// `({1}, {t})`
    V,
    /// `(∅, {1,t})`
    VI,
    /// `({t}, ∅)`
    VII,
    /// `(∅, {1})`
    VIII,
    /// `({t}, {1})`
    IX,
}

impl BoundaryCase {
    pub const ALL: [BoundaryCase; 9] = [
        BoundaryCase::I,
        BoundaryCase::II,
        BoundaryCase::III,
        BoundaryCase::IV,
        BoundaryCase::V,
        BoundaryCase::VI,
        BoundaryCase::VII,
        BoundaryCase::VIII,
        BoundaryCase::IX,
    ];

    /// Lower-case Roman numeral.
    pub fn roman(self) -> &'static str {
        match self {
            BoundaryCase::I => "i",
            BoundaryCase::II => "ii",
            BoundaryCase::III => "iii",
            BoundaryCase::IV => "iv",
            BoundaryCase::V => "v",
            BoundaryCase::VI => "vi",
            BoundaryCase::VII => "vii",
            BoundaryCase::VIII => "viii",
            BoundaryCase::IX => "ix",
        }
    }

    /// Classifies from `(1 ∈ A, t ∈ A, 1 ∈ B, t ∈ B)`; `None` if an end lies
    /// in both sets.
    fn from_ends(a1: bool, at: bool, b1: bool, bt: bool) -> Option<Self> {
        use BoundaryCase::*;
        Some(match (a1, at, b1, bt) {
            (false, false, false, false) => I,
            (true, true, false, false) => II,
            (false, false, false, true) => III,
            (true, false, false, false) => IV,
            (true, false, false, true) => V,
            (false, false, true, true) => VI,
            (false, true, false, false) => VII,
            (false, false, true, false) => VIII,
            (false, true, true, false) => IX,
            _ => return None,
        })
    }

    /// First and last letter of the run-length word of a pair in this class.
    pub fn endpoints(self) -> (Letter, Letter) {
        use BoundaryCase::*;
        use Letter::*;
        match self {
            I => (Theta, Theta),
            II => (Alpha, Alpha),
            III => (Theta, Beta),
            IV => (Alpha, Theta),
            V => (Alpha, Beta),
            VI => (Beta, Beta),
            VII => (Theta, Alpha),
            VIII => (Beta, Theta),
            IX => (Beta, Alpha),
        }
    }

    /// Letter multiplicities `(n_θ, n_α, n_β)` of the run-length word, i.e.
    /// the numbers of runs of the complement, of `A` and of `B`.
    ///
    /// A block whose letter is at an end of the word has `(ℓ+1)/2` runs,
    /// otherwise `(ℓ-1)/2`, with `ℓ` the matching parameter of the query.
    #[allow(clippy::manual_div_ceil)]
    pub fn word_counts(self, q: &PairQuery) -> LetterCounts {
        let (start, end) = self.endpoints();
        let runs = |letter: Letter, ell: u32| {
            if start == letter || end == letter {
                (ell + 1) / 2
            } else {
                (ell - 1) / 2
            }
        };
        LetterCounts::new(
            runs(Letter::Theta, q.ell),
            runs(Letter::Alpha, q.ell_prime),
            runs(Letter::Beta, q.ell_double_prime),
        )
    }
}

impl fmt::Display for BoundaryCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.roman())
    }
}

impl FromStr for BoundaryCase {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        BoundaryCase::ALL
            .into_iter()
            .find(|c| c.roman() == s.to_ascii_lowercase())
            .ok_or_else(|| Error::Domain(format!("unknown case {s:?}; expected i..ix")))
    }
}

/// Classifies a disjoint pair by `(A ∩ {1,t}, B ∩ {1,t})`.
pub fn boundary_case_of(a: SubsetMask, b: SubsetMask, t: GroundSize) -> Result<BoundaryCase> {
    a.check_within(t)?;
    b.check_within(t)?;
    if !a.is_disjoint(b) {
        return Err(Error::Domain(format!("{a} and {b} are not disjoint")));
    }
    let n = t.as_usize();
    Ok(BoundaryCase::from_ends(a.contains(1), a.contains(n), b.contains(1), b.contains(n))
        .expect("disjoint sets give one of the nine patterns"))
}

/// Parameters `(t, j', j'', ℓ', ℓ'', ℓ)` of a pair-count query.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PairQuery {
    pub t: GroundSize,
    pub j_prime: u32,
    pub j_double_prime: u32,
    pub ell_prime: u32,
    pub ell_double_prime: u32,
    pub ell: u32,
}

impl PairQuery {
    pub fn new(
        t: GroundSize,
        j_prime: u32,
        j_double_prime: u32,
        ell_prime: u32,
        ell_double_prime: u32,
        ell: u32,
    ) -> Result<Self> {
        let n = t.get();
        if j_prime == 0 || j_double_prime == 0 || j_prime + j_double_prime >= n {
            return Err(Error::Domain(format!(
                "need 0 < j', 0 < j'' and j' + j'' < t; got j' = {j_prime}, j'' = {j_double_prime}, t = {n}"
            )));
        }
        for (name, v) in [("ell'", ell_prime), ("ell''", ell_double_prime), ("ell", ell)] {
            if v % 2 == 0 {
                return Err(Error::Domain(format!("{name} must be odd and positive, got {v}")));
            }
        }
        Ok(PairQuery {
            t,
            j_prime,
            j_double_prime,
            ell_prime,
            ell_double_prime,
            ell,
        })
    }
}

/// Which of the two displayed shapes a case uses.
#[derive(Clone, Copy)]
enum Shape {
    /// Word starts and ends with the same letter.
    Closed,
    /// Word starts and ends with different letters.
    Open,
}

struct CaseForm {
    /// Offsets `(a, b, c)` in `C(t-J-1, (ℓ-a)/2) C(j'-1, (ℓ'-b)/2) C(j''-1, (ℓ''-c)/2)`.
    offsets: [i64; 3],
    shape: Shape,
    /// `m`: the top of the first binomial in the bracket.
    m: i64,
    /// `d`: the signed combination of `ℓ, ℓ', ℓ''` in the bracket.
    d: i64,
}

fn case_form(q: &PairQuery, case: BoundaryCase) -> Result<CaseForm> {
    use BoundaryCase::*;
    let (l, lp, lpp) = (q.ell as i64, q.ell_prime as i64, q.ell_double_prime as i64);
    let h = |x: i64| arith::exact_div(x - 1, 2);
    let form = |offsets, shape, m, d| CaseForm { offsets, shape, m, d };
    Ok(match case {
        I => form([1, 3, 3], Shape::Closed, h(l)?, l + lp - lpp),
        II => form([3, 1, 3], Shape::Closed, h(lp)?, l + lp - lpp),
        III => form([1, 3, 1], Shape::Open, h(l)?, l + lpp - lp),
        IV => form([1, 1, 3], Shape::Open, h(lp)?, l + lp - lpp),
        V => form([3, 1, 1], Shape::Open, h(lp)?, lp + lpp - l),
        VI => form([3, 3, 1], Shape::Closed, h(lpp)?, l + lpp - lp),
        VII => form([1, 1, 3], Shape::Open, h(l)?, l + lp - lpp),
        VIII => form([1, 3, 1], Shape::Open, h(lpp)?, l + lpp - lp),
        IX => form([3, 1, 1], Shape::Open, h(lpp)?, lp + lpp - l),
    })
}

/// Closed-form number of family pairs in `case` with the query's
/// parameters, evaluated with `C(a, b) = 0` outside `0 <= b <= a`.
///
/// With `J = j' + j''`, `S = ℓ + ℓ' + ℓ''` and the per-case `m`, `d`:
///
/// ```text
/// prefactor = C(t-J-1, (ℓ-a)/2) C(j'-1, (ℓ'-b)/2) C(j''-1, (ℓ''-c)/2)
///
/// equal endpoints, (S-1)/2 odd:   C(m, (d-1)/4) C((S-7)/4, m-1)
/// equal endpoints, (S-1)/2 even:  (d+1)/2 C(m, (d+1)/4) C((S-9)/4, m-1)
/// distinct endpoints, (S+1)/2 odd:  (d+3)/2 C(m, (d+1)/4) C((S-5)/4, m)
/// distinct endpoints, (S+1)/2 even: C(m, (d-1)/4) C((S-3)/4, m)
///                                   + (d+3)/2 C(m, (d+3)/4) C((S-7)/4, m)
/// ```
///
/// Every quotient above is checked to be exact.
pub fn count_pairs_case(q: &PairQuery, case: BoundaryCase) -> Result<Count> {
    let f = case_form(q, case)?;
    let (l, lp, lpp) = (q.ell as i64, q.ell_prime as i64, q.ell_double_prime as i64);
    let (t, jp, jpp) = (q.t.get() as i64, q.j_prime as i64, q.j_double_prime as i64);
    let c = arith::binomial_signed;
    let q2 = |x: i64| arith::exact_div(x, 2);
    let q4 = |x: i64| arith::exact_div(x, 4);
    let [a, b, cc] = f.offsets;

    let pre = arith::mul_signed(
        arith::mul_signed(c(t - jp - jpp - 1, q2(l - a)?)?, c(jp - 1, q2(lp - b)?)?)?,
        c(jpp - 1, q2(lpp - cc)?)?,
    )?;
    let s = l + lp + lpp;
    let (m, d) = (f.m, f.d);
    let bracket = match f.shape {
        Shape::Closed => {
            if q2(s - 1)? % 2 != 0 {
                arith::mul_signed(c(m, q4(d - 1)?)?, c(q4(s - 7)?, m - 1)?)?
            } else {
                let p = arith::mul_signed(c(m, q4(d + 1)?)?, c(q4(s - 9)?, m - 1)?)?;
                arith::mul_signed(q2(d + 1)? as i128, p)?
            }
        }
        Shape::Open => {
            if q2(s + 1)? % 2 != 0 {
                let p = arith::mul_signed(c(m, q4(d + 1)?)?, c(q4(s - 5)?, m)?)?;
                arith::mul_signed(q2(d + 3)? as i128, p)?
            } else {
                let first = arith::mul_signed(c(m, q4(d - 1)?)?, c(q4(s - 3)?, m)?)?;
                let p = arith::mul_signed(c(m, q4(d + 3)?)?, c(q4(s - 7)?, m)?)?;
                arith::add_signed(first, arith::mul_signed(q2(d + 3)? as i128, p)?)?
            }
        }
    };
    arith::to_count(arith::mul_signed(pre, bracket)?)
}

/// Number of family pairs in `case` as
/// `T(start, end; n_θ, n_α, n_β) · c(n_θ; t-j'-j'') · c(n_α; j') · c(n_β; j'')`,
/// with `T` from [`smirnov_count_closed`].
pub fn count_pairs_case_structural(q: &PairQuery, case: BoundaryCase) -> Result<Count> {
    structural_with(q, case, smirnov_count_closed)
}

/// The structural product with a caller-supplied Smirnov counter.
pub fn structural_with<F>(q: &PairQuery, case: BoundaryCase, smirnov: F) -> Result<Count>
where
    F: Fn(Letter, Letter, LetterCounts) -> Result<Count>,
{
    let (start, end) = case.endpoints();
    let n = case.word_counts(q);
    let rest = q.t.get() as i64 - q.j_prime as i64 - q.j_double_prime as i64;
    let comps = arith::mul(
        arith::mul(
            composition_count(n.theta as i64, rest)?,
            composition_count(n.alpha as i64, q.j_prime as i64)?,
        )?,
        composition_count(n.beta as i64, q.j_double_prime as i64)?,
    )?;
    if comps == 0 {
        return Ok(0);
    }
    arith::mul(smirnov(start, end, n)?, comps)
}

/// Closed-form count summed over the nine classes.
pub fn count_pairs_total(q: &PairQuery) -> Result<Count> {
    BoundaryCase::ALL
        .into_iter()
        .try_fold(0, |acc, case| arith::add(acc, count_pairs_case(q, case)?))
}

/// Size of the family slice with `|A| = j'`, `|B| = j''`:
/// `C(t, j') C(t-j', j'')`.
pub fn family_size(t: GroundSize, j_prime: u32, j_double_prime: u32) -> Result<Count> {
    let n = t.get() as i64;
    arith::mul(
        arith::binomial(n, j_prime as i64)?,
        arith::binomial(n - j_prime as i64, j_double_prime as i64)?,
    )
}

/// Key of one cell of the brute-force pair table.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PairKey {
    pub j_prime: u32,
    pub j_double_prime: u32,
    pub ell_prime: u32,
    pub ell_double_prime: u32,
    pub ell: u32,
    pub case: BoundaryCase,
}

pub type PairTally = BTreeMap<PairKey, Count>;
pub type TopeTally = BTreeMap<(u32, u32), Count>;

/// Options for the exhaustive enumerators.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumerationOptions {
    /// Largest `t` accepted.
    pub cap: u32,
    /// Worker threads; the index space is split into contiguous chunks and
    /// the partial tallies are summed, so the result does not depend on it.
    pub threads: usize,
}

impl EnumerationOptions {
    pub fn pairs() -> Self {
        EnumerationOptions {
            cap: DEFAULT_PAIR_CAP,
            threads: 1,
        }
    }

    pub fn topes() -> Self {
        EnumerationOptions {
            cap: DEFAULT_TOPE_CAP,
            threads: 1,
        }
    }

    pub fn with_threads(mut self, threads: usize) -> Self {
        self.threads = threads.max(1);
        self
    }

    pub fn with_cap(mut self, cap: u32) -> Self {
        self.cap = cap;
        self
    }

    fn check(&self, t: GroundSize, what: &'static str) -> Result<()> {
        if t.get() > self.cap {
            return Err(Error::ResourceLimit {
                what,
                requested: t.as_usize(),
                cap: self.cap as usize,
            });
        }
        Ok(())
    }
}

/// Splits `0..len` into `threads` contiguous chunks, tallies each on its own
/// thread and merges by addition.
fn parallel_tally<K, F>(len: u64, threads: usize, visit: F) -> Result<BTreeMap<K, Count>>
where
    K: Ord + Send,
    F: Fn(u64, &mut BTreeMap<K, Count>) + Sync,
{
    let threads = threads.max(1) as u64;
    let chunk = len.div_ceil(threads);
    let partials: Vec<BTreeMap<K, Count>> = thread::scope(|scope| {
        let handles: Vec<_> = (0..threads)
            .map(|w| {
                let visit = &visit;
                scope.spawn(move || {
                    let mut local = BTreeMap::new();
                    let lo = (w * chunk).min(len);
                    let hi = ((w + 1) * chunk).min(len);
                    for idx in lo..hi {
                        visit(idx, &mut local);
                    }
                    local
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("enumeration worker panicked"))
            .collect()
    });
    let mut merged = BTreeMap::new();
    for part in partials {
        for (k, v) in part {
            let slot = merged.entry(k).or_insert(0);
            *slot = arith::add(*slot, v)?;
        }
    }
    Ok(merged)
}

/// Exhaustive tally of family pairs by `(j', j'', ℓ', ℓ'', ℓ, case)`.
///
/// Each element of `[t]` gets a base-3 digit (0: complement, 1: `A`,
/// 2: `B`), element 1 being the least significant.
pub fn brute_force_pairs(t: GroundSize) -> Result<PairTally> {
    brute_force_pairs_with(t, EnumerationOptions::pairs())
}

pub fn brute_force_pairs_with(t: GroundSize, opts: EnumerationOptions) -> Result<PairTally> {
    opts.check(t, "t for the 3^t pair enumeration")?;
    let n = t.get();
    let total = 3u64.pow(n);
    parallel_tally(total, opts.threads, |code, tally| {
        let (mut a, mut b) = (0u64, 0u64);
        let mut rest = code;
        for e in 0..n {
            match rest % 3 {
                1 => a |= 1 << e,
                2 => b |= 1 << e,
                _ => {}
            }
            rest /= 3;
        }
        let (jp, jpp) = (a.count_ones(), b.count_ones());
        if jp == 0 || jpp == 0 || jp + jpp >= n {
            return;
        }
        let last = n - 1;
        let case = BoundaryCase::from_ends(
            a & 1 != 0,
            a >> last & 1 != 0,
            b & 1 != 0,
            b >> last & 1 != 0,
        )
        .expect("disjoint by construction");
        let key = PairKey {
            j_prime: jp,
            j_double_prime: jpp,
            ell_prime: q_size_bits(t, a) as u32,
            ell_double_prime: q_size_bits(t, b) as u32,
            ell: q_size_bits(t, a | b) as u32,
            case,
        };
        *tally.entry(key).or_insert(0) += 1;
    })
}

/// Exhaustive tally of topes by `(|T^-|, |Q(T, R)|)`.
pub fn brute_force_topes(t: GroundSize) -> Result<TopeTally> {
    brute_force_topes_with(t, EnumerationOptions::topes())
}

pub fn brute_force_topes_with(t: GroundSize, opts: EnumerationOptions) -> Result<TopeTally> {
    opts.check(t, "t for the 2^t tope enumeration")?;
    parallel_tally(1u64 << t.get(), opts.threads, |neg, tally| {
        let key = (neg.count_ones(), q_size_bits(t, neg) as u32);
        *tally.entry(key).or_insert(0) += 1;
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use BoundaryCase::*;

    fn gs(t: u32) -> GroundSize {
        GroundSize::new(t).unwrap()
    }

    fn set(elems: &[usize]) -> SubsetMask {
        SubsetMask::from_elements(elems.iter().copied()).unwrap()
    }

    fn query(t: u32, jp: u32, jpp: u32, lp: u32, lpp: u32, l: u32) -> PairQuery {
        PairQuery::new(gs(t), jp, jpp, lp, lpp, l).unwrap()
    }

    #[test]
    fn tope_count_examples() {
        assert_eq!(count_topes_with_qsize(gs(4), 3).unwrap(), 8);
        assert_eq!(count_topes_with_qsize(gs(3), 1).unwrap(), 6);
        for n in 3..=20u32 {
            let sum: u128 = (1..=n)
                .step_by(2)
                .map(|ell| count_topes_with_qsize(gs(n), ell).unwrap())
                .sum();
            assert_eq!(sum, 1u128 << n);
        }
        assert!(count_topes_with_qsize(gs(4), 2).is_err());
        assert!(count_topes_with_qsize(gs(4), 5).is_err());
    }

    #[test]
    fn negpart_count_examples() {
        assert_eq!(count_topes_with_negpart_and_qsize(gs(4), 2, 3).unwrap(), 4);
        assert_eq!(count_topes_with_negpart_and_qsize(gs(5), 1, 5).unwrap(), 0);
        for n in 3..=16u32 {
            for j in 1..n {
                for ell in (1..=n + 2).step_by(2) {
                    assert_eq!(
                        count_topes_with_negpart_and_qsize(gs(n), j, ell).unwrap(),
                        count_topes_with_negpart_and_qsize(gs(n), n - j, ell).unwrap()
                    );
                }
            }
        }
        assert!(count_topes_with_negpart_and_qsize(gs(5), 0, 1).is_err());
        assert!(count_topes_with_negpart_and_qsize(gs(5), 5, 1).is_err());
        assert!(count_topes_with_negpart_and_qsize(gs(5), 2, 2).is_err());
    }

    #[test]
    fn boundary_case_examples() {
        assert_eq!(boundary_case_of(set(&[2]), set(&[4]), gs(5)).unwrap(), I);
        assert_eq!(boundary_case_of(set(&[1]), set(&[4]), gs(4)).unwrap(), V);
        assert_eq!(boundary_case_of(set(&[4]), set(&[1]), gs(4)).unwrap(), IX);
        assert!(boundary_case_of(set(&[1, 2]), set(&[2]), gs(4)).is_err());
    }

    #[test]
    fn case_parsing() {
        for case in BoundaryCase::ALL {
            assert_eq!(case.roman().parse::<BoundaryCase>().unwrap(), case);
        }
        assert_eq!("IV".parse::<BoundaryCase>().unwrap(), IV);
        assert!("x".parse::<BoundaryCase>().is_err());
    }

    #[test]
    fn query_validation() {
        assert!(PairQuery::new(gs(5), 0, 1, 1, 1, 1).is_err());
        assert!(PairQuery::new(gs(5), 2, 3, 1, 1, 1).is_err());
        assert!(PairQuery::new(gs(5), 1, 1, 2, 1, 1).is_err());
        assert!(PairQuery::new(gs(5), 1, 1, 1, 1, 0).is_err());
    }

    #[test]
    fn pair_count_examples() {
        assert_eq!(count_pairs_case(&query(5, 1, 1, 3, 3, 5), I).unwrap(), 2);
        assert_eq!(count_pairs_case(&query(5, 1, 1, 3, 3, 3), I).unwrap(), 4);
        assert_eq!(count_pairs_case(&query(4, 1, 1, 1, 1, 3), V).unwrap(), 1);

        assert_eq!(count_pairs_case_structural(&query(5, 1, 1, 3, 3, 5), I).unwrap(), 2);
        assert_eq!(count_pairs_case_structural(&query(4, 1, 1, 1, 1, 3), V).unwrap(), 1);
        // ℓ'' = 1 under case I leaves no β-runs for a nonempty B.
        assert_eq!(count_pairs_case_structural(&query(6, 1, 2, 3, 1, 3), I).unwrap(), 0);

        assert_eq!(count_pairs_total(&query(5, 1, 1, 3, 3, 5)).unwrap(), 2);
        assert_eq!(count_pairs_total(&query(4, 1, 1, 1, 1, 3)).unwrap(), 2);
    }

    #[test]
    fn impossible_boundary_parameters_count_zero() {
        // A ⊇ {1,t} forces ρ(A) >= 2 for A ≠ [t], hence ℓ' >= 3.
        for n in 4..=10u32 {
            for jp in 2..n - 1 {
                let q = query(n, jp, 1, 1, 3, 3);
                assert_eq!(count_pairs_case(&q, II).unwrap(), 0);
            }
        }
    }

    #[test]
    #[allow(clippy::manual_div_ceil)]
    fn word_counts_match_the_table() {
        let q = query(12, 3, 3, 5, 7, 9);
        let expect = |th: u32, al: u32, be: u32| LetterCounts::new(th, al, be);
        let (l, lp, lpp) = (9, 5, 7);
        let table = [
            (I, expect((l + 1) / 2, (lp - 1) / 2, (lpp - 1) / 2)),
            (II, expect((l - 1) / 2, (lp + 1) / 2, (lpp - 1) / 2)),
            (III, expect((l + 1) / 2, (lp - 1) / 2, (lpp + 1) / 2)),
            (IV, expect((l + 1) / 2, (lp + 1) / 2, (lpp - 1) / 2)),
            (V, expect((l - 1) / 2, (lp + 1) / 2, (lpp + 1) / 2)),
            (VI, expect((l - 1) / 2, (lp - 1) / 2, (lpp + 1) / 2)),
            (VII, expect((l + 1) / 2, (lp + 1) / 2, (lpp - 1) / 2)),
            (VIII, expect((l + 1) / 2, (lp - 1) / 2, (lpp + 1) / 2)),
            (IX, expect((l - 1) / 2, (lp + 1) / 2, (lpp + 1) / 2)),
        ];
        for (case, counts) in table {
            assert_eq!(case.word_counts(&q), counts, "{case}");
        }
    }

    #[test]
    fn brute_force_pair_examples() {
        let t5 = brute_force_pairs(gs(5)).unwrap();
        let key = |jp, jpp, lp, lpp, l, case| PairKey {
            j_prime: jp,
            j_double_prime: jpp,
            ell_prime: lp,
            ell_double_prime: lpp,
            ell: l,
            case,
        };
        assert_eq!(t5[&key(1, 1, 3, 3, 5, I)], 2);
        let t4 = brute_force_pairs(gs(4)).unwrap();
        assert_eq!(t4[&key(1, 1, 1, 1, 3, V)], 1);
        // t = 3: only j' = j'' = 1, giving C(3,1) C(2,1) = 6 pairs.
        let t3 = brute_force_pairs(gs(3)).unwrap();
        assert_eq!(t3.values().sum::<u128>(), 6);
    }

    #[test]
    fn brute_force_tope_examples() {
        let t3 = brute_force_topes(gs(3)).unwrap();
        assert_eq!(t3.values().sum::<u128>(), 8);
        let t4 = brute_force_topes(gs(4)).unwrap();
        assert_eq!(t4[&(2, 3)], 4);
        let marginal: u128 = t4.iter().filter(|((_, l), _)| *l == 3).map(|(_, v)| v).sum();
        assert_eq!(marginal, 8);
    }

    #[test]
    fn thread_count_does_not_change_tallies() {
        let one = brute_force_pairs(gs(8)).unwrap();
        for threads in [2, 3, 7] {
            let opts = EnumerationOptions::pairs().with_threads(threads);
            assert_eq!(brute_force_pairs_with(gs(8), opts).unwrap(), one);
        }
        let one = brute_force_topes(gs(10)).unwrap();
        let opts = EnumerationOptions::topes().with_threads(5);
        assert_eq!(brute_force_topes_with(gs(10), opts).unwrap(), one);
    }

    #[test]
    fn caps_are_enforced() {
        assert!(matches!(brute_force_pairs(gs(15)), Err(Error::ResourceLimit { .. })));
        assert!(matches!(brute_force_topes(gs(21)), Err(Error::ResourceLimit { .. })));
        let opts = EnumerationOptions::pairs().with_cap(2);
        assert!(brute_force_pairs_with(gs(3), opts).is_err());
    }
}
