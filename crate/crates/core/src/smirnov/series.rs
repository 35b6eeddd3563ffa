//! Truncated power series in `u, v, w` with exact integer coefficients, and
//! the generating functions of Smirnov words that start with `θ`.
//!
//! With `u, v, w` marking `θ, α, β` and `D = uv + uw + vw + 2uvw`, the
//! series counting words that start with `θ` and end with a given letter are
//!
//! ```text
//! f_θ = u (1 - vw) / (1 - D)
//! f_α = u v (1 + w) / (1 - D)
//! f_β = u w (1 + v) / (1 - D)
//! ```
//!
//! and `[u^k v^i w^j] f_s` is the number of such words with `k` letters `θ`,
//! `i` letters `α` and `j` letters `β`.

use crate::arith;
use crate::arith::Count;
use crate::error::{Error, Result};

use super::Letter;

/// Default cap on the total degree accepted by [`gf_coefficient`].
pub const DEFAULT_SERIES_CAP: usize = 16;

/// A trivariate series truncated above total degree `cap`.
///
/// Coefficients are stored densely in a `(cap+1)^3` cube; entries whose
/// total degree exceeds `cap` are kept at zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    cap: usize,
    coeffs: Vec<i128>,
}

impl TruncatedSeries {
    pub fn zero(cap: usize) -> Self {
        let side = cap + 1;
        TruncatedSeries {
            cap,
            coeffs: vec![0; side * side * side],
        }
    }

    pub fn one(cap: usize) -> Self {
        Self::monomial(1, [0, 0, 0], cap)
    }

    /// `coefficient * u^a v^b w^c` (zero if the degree exceeds `cap`).
    pub fn monomial(coefficient: i128, exps: [usize; 3], cap: usize) -> Self {
        let mut s = Self::zero(cap);
        if exps.iter().sum::<usize>() <= cap {
            let i = s.index(exps);
            s.coeffs[i] = coefficient;
        }
        s
    }

    /// Builds a polynomial from `(coefficient, [a, b, c])` terms.
    pub fn polynomial(terms: &[(i128, [usize; 3])], cap: usize) -> Result<Self> {
        let mut s = Self::zero(cap);
        for &(coef, exps) in terms {
            s = s.add(&Self::monomial(coef, exps, cap))?;
        }
        Ok(s)
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    fn index(&self, [a, b, c]: [usize; 3]) -> usize {
        let side = self.cap + 1;
        (a * side + b) * side + c
    }

    /// `[u^a v^b w^c]`, zero above the cap.
    pub fn coeff(&self, exps: [usize; 3]) -> i128 {
        if exps.iter().sum::<usize>() > self.cap {
            return 0;
        }
        self.coeffs[self.index(exps)]
    }

    /// Nonzero terms in `(a, b, c)` order.
    pub fn terms(&self) -> impl Iterator<Item = ([usize; 3], i128)> + '_ {
        let cap = self.cap;
        (0..=cap).flat_map(move |a| {
            (0..=cap - a).flat_map(move |b| {
                (0..=cap - a - b).filter_map(move |c| {
                    let v = self.coeff([a, b, c]);
                    (v != 0).then_some(([a, b, c], v))
                })
            })
        })
    }

    fn check_cap(&self, other: &Self) -> Result<()> {
        if self.cap != other.cap {
            return Err(Error::Dimension {
                left: self.cap,
                right: other.cap,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_cap(other)?;
        let mut out = self.clone();
        for (o, &v) in out.coeffs.iter_mut().zip(&other.coeffs) {
            *o = arith::add_signed(*o, v)?;
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_cap(other)?;
        let mut out = self.clone();
        for (o, &v) in out.coeffs.iter_mut().zip(&other.coeffs) {
            *o = o.checked_sub(v).ok_or(Error::Overflow("series difference"))?;
        }
        Ok(out)
    }

    /// Product truncated at the common cap.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_cap(other)?;
        let mut out = Self::zero(self.cap);
        let rhs: Vec<_> = other.terms().collect();
        for (e1, c1) in self.terms() {
            let d1: usize = e1.iter().sum();
            for &(e2, c2) in &rhs {
                if d1 + e2.iter().sum::<usize>() > self.cap {
                    continue;
                }
                let i = out.index([e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2]]);
                out.coeffs[i] = arith::add_signed(out.coeffs[i], arith::mul_signed(c1, c2)?)?;
            }
        }
        Ok(out)
    }

    /// `1 / (1 - self)`, for a series with zero constant term.
    ///
    /// Solves `G = 1 + self · G` degree by degree: the degree-`n` part of
    /// `self · G` only involves parts of `G` of degree below `n`.
    pub fn geometric(&self) -> Result<Self> {
        if self.coeff([0, 0, 0]) != 0 {
            return Err(Error::Domain(
                "geometric expansion needs a zero constant term".into(),
            ));
        }
        let cap = self.cap;
        let steps: Vec<_> = self.terms().collect();
        let mut g = Self::one(cap);
        for degree in 1..=cap {
            for a in 0..=degree {
                for b in 0..=degree - a {
                    let c = degree - a - b;
                    let mut acc = 0i128;
                    for &([da, db, dc], coef) in &steps {
                        if da <= a && db <= b && dc <= c {
                            let prev = g.coeff([a - da, b - db, c - dc]);
                            acc = arith::add_signed(acc, arith::mul_signed(coef, prev)?)?;
                        }
                    }
                    let i = g.index([a, b, c]);
                    g.coeffs[i] = acc;
                }
            }
        }
        Ok(g)
    }
}

/// The three generating functions `f_θ, f_α, f_β`, expanded to a common
/// total degree.
#[derive(Debug, Clone)]
pub struct GfTable {
    cap: usize,
    series: [TruncatedSeries; 3],
}

impl GfTable {
    pub fn new(cap: usize) -> Result<Self> {
        let poly = |terms: &[(i128, [usize; 3])]| TruncatedSeries::polynomial(terms, cap);
        let denominator = poly(&[
            (1, [1, 1, 0]),
            (1, [1, 0, 1]),
            (1, [0, 1, 1]),
            (2, [1, 1, 1]),
        ])?;
        let g = denominator.geometric()?;
        let f_theta = poly(&[(1, [1, 0, 0]), (-1, [1, 1, 1])])?.mul(&g)?;
        let f_alpha = poly(&[(1, [1, 1, 0]), (1, [1, 1, 1])])?.mul(&g)?;
        let f_beta = poly(&[(1, [1, 0, 1]), (1, [1, 1, 1])])?.mul(&g)?;
        Ok(GfTable {
            cap,
            series: [f_theta, f_alpha, f_beta],
        })
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn series(&self, end: Letter) -> &TruncatedSeries {
        &self.series[end.index()]
    }

    /// `[u^k v^i w^j] f_end`.
    pub fn coefficient(&self, end: Letter, k: usize, i: usize, j: usize) -> Result<Count> {
        let total = k + i + j;
        if total > self.cap {
            return Err(Error::ResourceLimit {
                what: "series degree",
                requested: total,
                cap: self.cap,
            });
        }
        arith::to_count(self.series(end).coeff([k, i, j]))
    }
}

/// `[u^k v^i w^j] f_end`, expanded up to [`DEFAULT_SERIES_CAP`].
///
/// ```
/// use symcycle::smirnov::{gf_coefficient, Letter};
/// assert_eq!(gf_coefficient(Letter::Theta, 1, 0, 0).unwrap(), 1);
/// assert_eq!(gf_coefficient(Letter::Alpha, 1, 1, 0).unwrap(), 1);
/// ```
pub fn gf_coefficient(end: Letter, k: usize, i: usize, j: usize) -> Result<Count> {
    let total = k + i + j;
    if total > DEFAULT_SERIES_CAP {
        return Err(Error::ResourceLimit {
            what: "series degree",
            requested: total,
            cap: DEFAULT_SERIES_CAP,
        });
    }
    GfTable::new(total)?.coefficient(end, k, i, j)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::smirnov::{smirnov_count_dp, LetterCounts};
    use Letter::*;

    #[test]
    fn examples() {
        assert_eq!(gf_coefficient(Theta, 1, 0, 0).unwrap(), 1);
        assert_eq!(gf_coefficient(Alpha, 1, 1, 0).unwrap(), 1);
        assert_eq!(
            gf_coefficient(Beta, 2, 1, 1).unwrap(),
            smirnov_count_dp(Theta, Beta, LetterCounts::new(2, 1, 1)).unwrap()
        );
        assert_eq!(gf_coefficient(Theta, 3, 2, 2).unwrap(), 8);
    }

    #[test]
    fn cap_is_enforced() {
        assert!(matches!(
            gf_coefficient(Theta, 9, 4, 4),
            Err(Error::ResourceLimit { requested: 17, cap: 16, .. })
        ));
        let table = GfTable::new(4).unwrap();
        assert!(table.coefficient(Theta, 3, 1, 1).is_err());
    }

    #[test]
    fn geometric_inverts_one_minus() {
        let cap = 8;
        let d = TruncatedSeries::polynomial(&[(1, [1, 0, 0]), (-2, [0, 1, 1])], cap).unwrap();
        let g = d.geometric().unwrap();
        let one_minus = TruncatedSeries::one(cap).sub(&d).unwrap();
        assert_eq!(one_minus.mul(&g).unwrap(), TruncatedSeries::one(cap));
        assert!(TruncatedSeries::one(cap).geometric().is_err());
    }

    #[test]
    fn first_terms_of_f_theta() {
        // f_θ = u + u^2(v + w) + ...: θ, θαθ, θβθ.
        let table = GfTable::new(3).unwrap();
        let f = table.series(Theta);
        let terms: Vec<_> = f.terms().collect();
        assert_eq!(terms, vec![([1, 0, 0], 1), ([2, 0, 1], 1), ([2, 1, 0], 1)]);
    }

    #[test]
    fn agrees_with_dp() {
        let table = GfTable::new(12).unwrap();
        for total in 0..=12u32 {
            for n in LetterCounts::with_total(total) {
                for end in Letter::ALL {
                    let (k, i, j) = (n.theta as usize, n.alpha as usize, n.beta as usize);
                    assert_eq!(
                        table.coefficient(end, k, i, j).unwrap(),
                        smirnov_count_dp(Theta, end, n).unwrap(),
                        "{end} {n}"
                    );
                }
            }
        }
    }
}
