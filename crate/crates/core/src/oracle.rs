//! Slow exhaustive searches used as ground truth in tests and in the
//! verification suites.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::hypercube::{q_set, DecompVector, GroundSize, Tope};

/// Largest `t` for [`decompositions_by_search`] (`3^t` candidate vectors).
pub const SEARCH_CAP: u32 = 12;
/// Largest `t` for [`minimal_summing_sets`] (`4^t` vertex subsets).
pub const MINIMALITY_CAP: u32 = 7;

fn check_cap(t: GroundSize, cap: u32, what: &'static str) -> Result<()> {
    if t.get() > cap {
        return Err(Error::ResourceLimit {
            what,
            requested: t.as_usize(),
            cap: cap as usize,
        });
    }
    Ok(())
}

/// Signs `±1` of `x` read as a sum vector, or `None` if some coordinate is
/// not `±1`.
fn tope_bits(sum: &[i64]) -> Option<u64> {
    let mut neg = 0u64;
    for (i, &v) in sum.iter().enumerate() {
        match v {
            1 => {}
            -1 => neg |= 1 << i,
            _ => return None,
        }
    }
    Some(neg)
}

/// Every `x ∈ {-1,0,1}^t` with `sum_i x_i R^(i-1)` a tope, grouped by the
/// negative part of that tope.
///
/// Each group should hold exactly one vector; the suites check that.
pub fn decompositions_by_search(t: GroundSize) -> Result<BTreeMap<u64, Vec<Vec<i8>>>> {
    check_cap(t, SEARCH_CAP, "t for the decomposition search")?;
    let n = t.as_usize();
    let mut out: BTreeMap<u64, Vec<Vec<i8>>> = BTreeMap::new();
    let mut x = vec![0i8; n];
    let mut sum = vec![0i64; n];
    for code in 0..3u64.pow(n as u32) {
        let mut rest = code;
        for v in x.iter_mut() {
            *v = (rest % 3) as i8 - 1;
            rest /= 3;
        }
        // Coordinate e of R^(i-1) is -1 for e < i, +1 otherwise.
        for (e, s) in sum.iter_mut().enumerate() {
            *s = x
                .iter()
                .enumerate()
                .map(|(i, &v)| if e < i { -(v as i64) } else { v as i64 })
                .sum();
        }
        if let Some(neg) = tope_bits(&sum) {
            out.entry(neg).or_default().push(x.clone());
        }
    }
    Ok(out)
}

/// Sign vectors of the `2t` cycle vertices `R^0, ..., R^(2t-1)`.
fn cycle_vectors(t: GroundSize) -> Vec<Vec<i64>> {
    let n = t.as_usize();
    (0..2 * n)
        .map(|k| {
            let (s, sign) = if k < n { (k, 1) } else { (k - n, -1) };
            (0..n).map(|e| if e < s { -sign } else { sign }).collect()
        })
        .collect()
}

/// For every tope, the inclusion-minimal subsets of the `2t` signed cycle
/// vertices that sum to it. Subsets are bitmasks over cycle indices
/// `0..2t`.
pub fn minimal_summing_sets(t: GroundSize) -> Result<BTreeMap<u64, Vec<u64>>> {
    check_cap(t, MINIMALITY_CAP, "t for the minimal summing-set search")?;
    let n = t.as_usize();
    let vertices = cycle_vectors(t);
    let mut summing: BTreeMap<u64, Vec<u64>> = BTreeMap::new();
    let mut sum = vec![0i64; n];
    for subset in 1u64..1 << (2 * n) {
        sum.iter_mut().for_each(|s| *s = 0);
        for (k, v) in vertices.iter().enumerate() {
            if subset >> k & 1 == 1 {
                sum.iter_mut().zip(v).for_each(|(s, &c)| *s += c);
            }
        }
        if let Some(neg) = tope_bits(&sum) {
            summing.entry(neg).or_default().push(subset);
        }
    }
    Ok(summing
        .into_iter()
        .map(|(neg, sets)| {
            let minimal = sets
                .iter()
                .copied()
                .filter(|&s| !sets.iter().any(|&o| o != s && o & s == o))
                .collect();
            (neg, minimal)
        })
        .collect())
}

/// `Q(T, R)` as a bitmask over cycle indices `0..2t`.
pub fn q_set_vertex_mask(tope: &Tope) -> u64 {
    let t = tope.ground_size();
    q_set(tope)
        .terms
        .iter()
        .fold(0, |m, term| m | 1 << term.as_cycle_vertex(t))
}

/// `sum_i x_i R^(i-1)` computed coordinate by coordinate, with no tope
/// check.
pub fn raw_sum(x: &DecompVector) -> Vec<i64> {
    let n = x.len();
    (0..n)
        .map(|e| {
            x.coords()
                .iter()
                .enumerate()
                .map(|(i, &v)| if e < i { -(v as i64) } else { v as i64 })
                .sum()
        })
        .collect()
}
