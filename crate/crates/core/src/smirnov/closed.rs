//! Single-product binomial closed forms for `T(s', s''; n_θ, n_α, n_β)`.
//!
//! Two forms are written out: one for words starting and ending with `θ`,
//! and one for words starting with `θ` and ending with `β`. Every other
//! endpoint pair is reduced to these by renaming letters: the start letter
//! becomes `θ`, a distinct end letter becomes `β`, and the remaining letter
//! becomes `α` (for equal endpoints the two other letters keep their
//! `θ, α, β` order). The `(α,α)`, `(α,θ)` and `(α,β)` forms are exactly
//! these renamings.
//!
//! # Accuracy
//!
//! The forms are reproduced as stated. They agree with exhaustive counting
//! for every word length up to 6, but they are not exact beyond that:
//! for example `T(θ,θ;3,2,2)` evaluates to 4 while there are 8 such words
//! (`θαβθαβθ`, `θβαθβαθ`, ...). The gap grows with the length; the
//! verification suites report it rather than hide it.
//!
//! # Degenerate inputs
//!
//! When a binomial in the selected branch receives a negative upper
//! argument (single-letter words, very short words), the form is outside
//! its range of validity and [`smirnov_count_closed`] answers with the
//! dynamic programme instead.

use crate::arith::{self, Count};
use crate::error::Result;

use super::{smirnov_count_dp, Letter, LetterCounts};

/// Outcome of evaluating one closed form.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClosedEval {
    pub value: i128,
    /// Some binomial had a negative upper argument.
    pub degenerate: bool,
}

/// Binomial evaluator that remembers whether it left the standard domain.
struct Binoms {
    degenerate: bool,
}

impl Binoms {
    fn new() -> Self {
        Binoms { degenerate: false }
    }

    fn c(&mut self, a: i64, b: i64) -> Result<i128> {
        if a < 0 {
            self.degenerate = true;
        }
        arith::binomial_signed(a, b)
    }
}

fn half(x: i64) -> Result<i64> {
    arith::exact_div(x, 2)
}

/// Closed form for `T(θ, θ; k, i, j)`.
///
/// ```text
/// k+i+j odd:  C(k-1, (k+i-j-1)/2) · C((k+i+j-3)/2, k-2)
/// k+i+j even: (k+i-j) · C(k-1, (k+i-j)/2) · C((k+i+j)/2 - 2, k-2)
/// ```
pub fn theta_theta(k: i64, i: i64, j: i64) -> Result<ClosedEval> {
    let mut b = Binoms::new();
    let s = k + i + j;
    let value = if s % 2 != 0 {
        arith::mul_signed(b.c(k - 1, half(k + i - j - 1)?)?, b.c(half(s - 3)?, k - 2)?)?
    } else {
        let lin = (k + i - j) as i128;
        let p = arith::mul_signed(b.c(k - 1, half(k + i - j)?)?, b.c(half(s)? - 2, k - 2)?)?;
        arith::mul_signed(lin, p)?
    };
    Ok(ClosedEval {
        value,
        degenerate: b.degenerate,
    })
}

/// Closed form for `T(θ, β; k, i, j)`.
///
/// ```text
/// k+i+j odd:  (k+j-i) · C(k-1, (k+j-i-1)/2) · C((k+i+j-3)/2, k-1)
/// k+i+j even: C(k-1, (k+j-i)/2 - 1) · C((k+i+j)/2 - 1, k-1)
///             + (k+j-i) · C(k-1, (k+j-i)/2) · C((k+i+j)/2 - 2, k-1)
/// ```
pub fn theta_beta(k: i64, i: i64, j: i64) -> Result<ClosedEval> {
    let mut b = Binoms::new();
    let s = k + i + j;
    let lin = (k + j - i) as i128;
    let value = if s % 2 != 0 {
        let p = arith::mul_signed(b.c(k - 1, half(k + j - i - 1)?)?, b.c(half(s - 3)?, k - 1)?)?;
        arith::mul_signed(lin, p)?
    } else {
        let first = arith::mul_signed(b.c(k - 1, half(k + j - i)? - 1)?, b.c(half(s)? - 1, k - 1)?)?;
        let p = arith::mul_signed(b.c(k - 1, half(k + j - i)?)?, b.c(half(s)? - 2, k - 1)?)?;
        arith::add_signed(first, arith::mul_signed(lin, p)?)?
    };
    Ok(ClosedEval {
        value,
        degenerate: b.degenerate,
    })
}

/// Renames letters so that `start` becomes `θ` and a distinct `end`
/// becomes `β`; returns the renamed counts as `(k, i, j)`.
fn canonical_arguments(start: Letter, end: Letter, counts: LetterCounts) -> (i64, i64, i64) {
    let n = |l: Letter| counts.get(l) as i64;
    if start == end {
        let mut others = Letter::ALL.into_iter().filter(|&l| l != start);
        let (x, y) = (others.next().unwrap(), others.next().unwrap());
        (n(start), n(x), n(y))
    } else {
        let other = Letter::ALL
            .into_iter()
            .find(|&l| l != start && l != end)
            .unwrap();
        (n(start), n(other), n(end))
    }
}

/// Evaluates the closed form for `(start, end)` without any fallback.
pub fn closed_form_raw(start: Letter, end: Letter, counts: LetterCounts) -> Result<ClosedEval> {
    let (k, i, j) = canonical_arguments(start, end, counts);
    if start == end {
        theta_theta(k, i, j)
    } else {
        theta_beta(k, i, j)
    }
}

/// Closed-form count of Smirnov words with the given endpoints and
/// multiplicities; degenerate inputs are answered by
/// [`smirnov_count_dp`].
///
/// Exact for words of length at most 6; see the module documentation for
/// longer words.
pub fn smirnov_count_closed(start: Letter, end: Letter, counts: LetterCounts) -> Result<Count> {
    let eval = closed_form_raw(start, end, counts)?;
    if eval.degenerate {
        return smirnov_count_dp(start, end, counts);
    }
    arith::to_count(eval.value)
}
