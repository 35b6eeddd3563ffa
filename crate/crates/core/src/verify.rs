//! Exhaustive verification suites comparing every formula in the crate with
//! an independent enumeration.
//!
//! Each suite runs for `t = 3..=t_max` and tallies pass/fail counts per
//! check, keeping the first [`MAX_COUNTEREXAMPLES`] failures verbatim.

use std::fmt;
use std::str::FromStr;

use crate::arith::{self, Count};
use crate::error::{Error, Result};
use crate::hypercube::{
    decompose, predicted_q_size, q_set, q_size, recompose, tope_from_negative_set, DecompVector,
    GroundSize, SubsetMask,
};
use crate::identities::{norm_of_disjoint_union, x_closed_form, x_of_disjoint_union, x_superset_delta};
use crate::oracle;
use crate::smirnov::{
    decode_pair, encode_pair, smirnov_count_closed, smirnov_count_dp, smirnov_enumerate, GfTable,
    Letter, LetterCounts, DEFAULT_ENUMERATION_CAP,
};
use crate::statistics::{
    brute_force_pairs_with, brute_force_topes_with, count_pairs_case, count_pairs_case_structural,
    count_topes_with_negpart_and_qsize, count_topes_with_qsize, family_size, structural_with,
    BoundaryCase, EnumerationOptions, PairKey, PairQuery,
};

pub const MAX_COUNTEREXAMPLES: usize = 10;
/// Default cap for suites enumerating `2^t` topes.
pub const TOPE_SUITE_CAP: u32 = 16;
/// Default cap for suites enumerating `3^t` pairs (and for word lengths).
pub const PAIR_SUITE_CAP: u32 = 14;

/// Largest `t` for the `3^t` decomposition search inside the decomp suite.
const SEARCH_T: u32 = 10;
/// Largest `t` for the minimal summing-set search.
const MINIMALITY_T: u32 = 5;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Suite {
    Decomp,
    Identities,
    Smirnov,
    Pairs,
    All,
}

impl Suite {
    pub const SINGLE: [Suite; 4] = [Suite::Decomp, Suite::Identities, Suite::Smirnov, Suite::Pairs];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Decomp => "decomp",
            Suite::Identities => "identities",
            Suite::Smirnov => "smirnov",
            Suite::Pairs => "pairs",
            Suite::All => "all",
        }
    }

    fn cap(self) -> u32 {
        match self {
            Suite::Decomp => TOPE_SUITE_CAP,
            _ => PAIR_SUITE_CAP,
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::SINGLE
            .into_iter()
            .chain([Suite::All])
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Domain(format!("unknown suite {s:?}")))
    }
}

/// Pass/fail tally for one named check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub passed: u64,
    pub failed: u64,
    pub counterexamples: Vec<String>,
}

impl Check {
    fn new(name: &'static str) -> Self {
        Check {
            name,
            passed: 0,
            failed: 0,
            counterexamples: Vec::new(),
        }
    }

    fn record(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        if ok {
            self.passed += 1;
        } else {
            self.failed += 1;
            if self.counterexamples.len() < MAX_COUNTEREXAMPLES {
                self.counterexamples.push(describe());
            }
        }
    }

    pub fn ok(&self) -> bool {
        self.failed == 0
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteReport {
    pub suite: Suite,
    pub t_max: u32,
    pub checks: Vec<Check>,
    /// Informational lines, e.g. per-case tallies.
    pub notes: Vec<String>,
}

impl SuiteReport {
    fn new(suite: Suite, t_max: u32, names: &[&'static str]) -> Self {
        SuiteReport {
            suite,
            t_max,
            checks: names.iter().map(|&n| Check::new(n)).collect(),
            notes: Vec::new(),
        }
    }

    fn check(&mut self, name: &'static str) -> &mut Check {
        self.checks
            .iter_mut()
            .find(|c| c.name == name)
            .expect("check names are fixed per suite")
    }

    pub fn ok(&self) -> bool {
        self.checks.iter().all(Check::ok)
    }

    pub fn passed(&self) -> u64 {
        self.checks.iter().map(|c| c.passed).sum()
    }

    pub fn failed(&self) -> u64 {
        self.checks.iter().map(|c| c.failed).sum()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyOptions {
    pub threads: usize,
    /// Skip the default enumeration caps.
    pub unsafe_cap: bool,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            threads: 1,
            unsafe_cap: false,
        }
    }
}

/// Runs `suite` (or all four for [`Suite::All`]) for `t = 3..=t_max`.
///
/// Caps are checked before any work starts.
pub fn run(suite: Suite, t_max: u32, opts: VerifyOptions) -> Result<Vec<SuiteReport>> {
    let suites: Vec<Suite> = if suite == Suite::All {
        Suite::SINGLE.to_vec()
    } else {
        vec![suite]
    };
    let cap = suites.iter().map(|s| s.cap()).min().expect("at least one suite");
    if !opts.unsafe_cap && t_max > cap {
        return Err(Error::ResourceLimit {
            what: "t_max",
            requested: t_max as usize,
            cap: cap as usize,
        });
    }
    GroundSize::new(t_max)?;
    suites
        .into_iter()
        .map(|s| match s {
            Suite::Decomp => decomp_suite(t_max, opts),
            Suite::Identities => identities_suite(t_max),
            Suite::Smirnov => smirnov_suite(t_max),
            Suite::Pairs => pairs_suite(t_max, opts),
            Suite::All => unreachable!(),
        })
        .collect()
}

fn ground_sizes(t_max: u32) -> impl Iterator<Item = GroundSize> {
    (3..=t_max).map(|n| GroundSize::new(n).expect("3 <= t <= 64"))
}

fn decomp_suite(t_max: u32, opts: VerifyOptions) -> Result<SuiteReport> {
    let mut r = SuiteReport::new(
        Suite::Decomp,
        t_max,
        &[
            "round trip",
            "valid vector",
            "support = norm",
            "q_size agreement",
            "unique by search",
            "Q minimal and unique",
            "tope marginal 2 C(t,l)",
            "tope (j,l) formula",
            "j <-> t-j symmetry",
        ],
    );
    for t in ground_sizes(t_max) {
        let n = t.get();
        for neg in 0..1u64 << n {
            let a = SubsetMask::from_bits(neg);
            let tope = tope_from_negative_set(t, a)?;
            let x = decompose(&tope);
            let back = recompose(&x, t);
            r.check("round trip").record(back.as_ref() == Ok(&tope), || {
                format!("t={n} T={tope}: recompose gives {back:?}")
            });
            let valid = DecompVector::new(x.coords().to_vec()).is_ok();
            r.check("valid vector")
                .record(valid, || format!("t={n} T={tope}: x={x}"));
            r.check("support = norm").record(x.support_size() as i64 == x.norm_sq(), || {
                format!("t={n} T={tope}: support {} norm {}", x.support_size(), x.norm_sq())
            });
            let (fast, listed, predicted) = (q_size(&tope), q_set(&tope).len(), predicted_q_size(a, t)?);
            r.check("q_size agreement").record(fast == listed && fast == predicted, || {
                format!("t={n} T={tope}: fast {fast} listed {listed} predicted {predicted}")
            });
        }
        if n <= SEARCH_T {
            for (neg, xs) in oracle::decompositions_by_search(t)? {
                let tope = tope_from_negative_set(t, SubsetMask::from_bits(neg))?;
                let ok = xs.len() == 1 && xs[0] == decompose(&tope).coords();
                r.check("unique by search")
                    .record(ok, || format!("t={n} T={tope}: search found {xs:?}"));
            }
        }
        if n <= MINIMALITY_T {
            for (neg, sets) in oracle::minimal_summing_sets(t)? {
                let tope = tope_from_negative_set(t, SubsetMask::from_bits(neg))?;
                let ok = sets == [oracle::q_set_vertex_mask(&tope)];
                r.check("Q minimal and unique").record(ok, || {
                    format!("t={n} T={tope}: minimal vertex sets {sets:?}")
                });
            }
        }

        let tally = brute_force_topes_with(
            t,
            EnumerationOptions::topes()
                .with_cap(if opts.unsafe_cap { 64 } else { TOPE_SUITE_CAP })
                .with_threads(opts.threads),
        )?;
        let get = |j: u32, ell: u32| tally.get(&(j, ell)).copied().unwrap_or(0);
        for ell in (1..=n).step_by(2) {
            let marginal: Count = (0..=n).map(|j| get(j, ell)).sum();
            let formula = count_topes_with_qsize(t, ell)?;
            r.check("tope marginal 2 C(t,l)").record(marginal == formula, || {
                format!("t={n} l={ell}: enumerated {marginal} formula {formula}")
            });
        }
        for j in 1..n {
            for ell in (1..=n + 2).step_by(2) {
                let formula = count_topes_with_negpart_and_qsize(t, j, ell)?;
                let brute = get(j, ell);
                r.check("tope (j,l) formula").record(formula == brute, || {
                    format!("t={n} j={j} l={ell}: enumerated {brute} formula {formula}")
                });
                let mirror = count_topes_with_negpart_and_qsize(t, n - j, ell)?;
                r.check("j <-> t-j symmetry")
                    .record(mirror == formula && get(n - j, ell) == brute, || {
                        format!("t={n} j={j} l={ell}: {formula} vs {mirror}")
                    });
            }
        }
    }
    Ok(r)
}

fn identities_suite(t_max: u32) -> Result<SuiteReport> {
    let mut r = SuiteReport::new(
        Suite::Identities,
        t_max,
        &["union identity", "norm identity", "closed form x(A)", "superset update"],
    );
    for t in ground_sizes(t_max) {
        let n = t.get();
        let xs: Vec<DecompVector> = (0..1u64 << n)
            .map(|neg| Ok(decompose(&tope_from_negative_set(t, SubsetMask::from_bits(neg))?)))
            .collect::<Result<_>>()?;
        for (neg, x) in xs.iter().enumerate() {
            let a = SubsetMask::from_bits(neg as u64);
            let closed = x_closed_form(a, t);
            r.check("closed form x(A)").record(closed.as_ref() == Ok(x), || {
                format!("t={n} A={a}: closed {closed:?} direct {x}")
            });
        }
        // Base-3 digits: 0 outside both sets, 1 in the first, 2 in the second.
        // Read as (A, B) disjoint and as (A, C) with A = first, C = first ∪ second.
        for code in 0..3u64.pow(n) {
            let (mut p, mut q) = (0u64, 0u64);
            let mut rest = code;
            for e in 0..n {
                match rest % 3 {
                    1 => p |= 1 << e,
                    2 => q |= 1 << e,
                    _ => {}
                }
                rest /= 3;
            }
            let (xp, xq, xu) = (&xs[p as usize], &xs[q as usize], &xs[(p | q) as usize]);
            let (a, b) = (SubsetMask::from_bits(p), SubsetMask::from_bits(q));

            let union = x_of_disjoint_union(xp, xq);
            r.check("union identity").record(union.as_ref() == Ok(xu), || {
                format!("t={n} A={a} B={b}: identity {union:?} direct {xu}")
            });
            let norm = norm_of_disjoint_union(xp, xq)?;
            r.check("norm identity").record(norm == xu.norm_sq(), || {
                format!("t={n} A={a} B={b}: identity {norm} direct {}", xu.norm_sq())
            });
            let c = a.union(b);
            let delta = x_superset_delta(xp, a, c, t);
            r.check("superset update").record(delta.as_ref() == Ok(xu), || {
                format!("t={n} A={a} C={c}: update {delta:?} direct {xu}")
            });
        }
    }
    Ok(r)
}

fn smirnov_suite(t_max: u32) -> Result<SuiteReport> {
    let mut r = SuiteReport::new(
        Suite::Smirnov,
        t_max,
        &["closed = dp", "enumeration = dp", "gf = dp"],
    );
    let max_total = t_max.min(DEFAULT_ENUMERATION_CAP as u32);
    let gf = GfTable::new(max_total as usize)?;
    for total in 0..=max_total {
        for counts in LetterCounts::with_total(total) {
            let words = smirnov_enumerate(counts)?;
            for start in Letter::ALL {
                for end in Letter::ALL {
                    let dp = smirnov_count_dp(start, end, counts)?;
                    let closed = smirnov_count_closed(start, end, counts)?;
                    r.check("closed = dp").record(closed == dp, || {
                        format!("T({},{};{counts}): closed {closed} dp {dp}", start.name(), end.name())
                    });
                    let listed = words
                        .iter()
                        .filter(|w| w.first() == start && w.last() == end)
                        .count() as Count;
                    r.check("enumeration = dp").record(listed == dp, || {
                        format!("T({},{};{counts}): enumerated {listed} dp {dp}", start.name(), end.name())
                    });
                }
            }
            for end in Letter::ALL {
                let dp = smirnov_count_dp(Letter::Theta, end, counts)?;
                let [k, i, j] = counts.as_array().map(|v| v as usize);
                let coef = gf.coefficient(end, k, i, j)?;
                r.check("gf = dp").record(coef == dp, || {
                    format!("[u^{k} v^{i} w^{j}] f_{}: {coef} dp {dp}", end.name())
                });
            }
        }
    }
    Ok(r)
}

fn key_label(t: u32, k: &PairKey) -> String {
    format!(
        "t={t} j'={} j''={} l'={} l''={} l={} case={}",
        k.j_prime, k.j_double_prime, k.ell_prime, k.ell_double_prime, k.ell, k.case
    )
}

fn pairs_suite(t_max: u32, opts: VerifyOptions) -> Result<SuiteReport> {
    let mut r = SuiteReport::new(
        Suite::Pairs,
        t_max,
        &[
            "closed = brute",
            "structural = brute",
            "closed = structural",
            "no phantom counts",
            "marginal law",
            "exact structural = brute",
            "bijection round trip",
        ],
    );
    let exact = |s: Letter, e: Letter, n: LetterCounts| smirnov_count_dp(s, e, n);
    for t in ground_sizes(t_max) {
        let n = t.get();
        let tally = brute_force_pairs_with(
            t,
            EnumerationOptions::pairs()
                .with_cap(if opts.unsafe_cap { 64 } else { PAIR_SUITE_CAP })
                .with_threads(opts.threads),
        )?;
        let mut per_case = [0 as Count; 9];
        for (k, &v) in &tally {
            per_case[k.case as usize] += v;
        }
        let listing: Vec<String> = BoundaryCase::ALL
            .iter()
            .map(|c| format!("{c}={}", per_case[*c as usize]))
            .collect();
        r.notes.push(format!("t={n} brute-force pairs per case: {}", listing.join(" ")));

        for jp in 1..n {
            for jpp in 1..n - jp {
                let mut marginal: Count = 0;
                for lp in (1..=n).step_by(2) {
                    for lpp in (1..=n).step_by(2) {
                        for l in (1..=n).step_by(2) {
                            let q = PairQuery::new(t, jp, jpp, lp, lpp, l)?;
                            for case in BoundaryCase::ALL {
                                let key = PairKey {
                                    j_prime: jp,
                                    j_double_prime: jpp,
                                    ell_prime: lp,
                                    ell_double_prime: lpp,
                                    ell: l,
                                    case,
                                };
                                let brute = tally.get(&key).copied();
                                let b = brute.unwrap_or(0);
                                let closed = count_pairs_case(&q, case)?;
                                let structural = count_pairs_case_structural(&q, case)?;
                                let exact_structural = structural_with(&q, case, exact)?;
                                marginal = arith::add(marginal, closed)?;
                                let label = || key_label(n, &key);
                                r.check("closed = brute").record(closed == b, || {
                                    format!("{}: closed {closed} brute {b}", label())
                                });
                                r.check("structural = brute").record(structural == b, || {
                                    format!("{}: structural {structural} brute {b}", label())
                                });
                                r.check("closed = structural").record(closed == structural, || {
                                    format!("{}: closed {closed} structural {structural}", label())
                                });
                                r.check("no phantom counts")
                                    .record(closed == 0 || brute.is_some(), || {
                                        format!("{}: closed {closed} with no enumerated pair", label())
                                    });
                                r.check("exact structural = brute")
                                    .record(exact_structural == b, || {
                                        format!("{}: exact structural {exact_structural} brute {b}", label())
                                    });
                            }
                        }
                    }
                }
                let family = family_size(t, jp, jpp)?;
                r.check("marginal law").record(marginal == family, || {
                    format!("t={n} j'={jp} j''={jpp}: closed-form sum {marginal} family size {family}")
                });
            }
        }

        for code in 0..3u64.pow(n) {
            let (mut p, mut q) = (0u64, 0u64);
            let mut rest = code;
            for e in 0..n {
                match rest % 3 {
                    1 => p |= 1 << e,
                    2 => q |= 1 << e,
                    _ => {}
                }
                rest /= 3;
            }
            let (jp, jpp) = (p.count_ones(), q.count_ones());
            if jp == 0 || jpp == 0 || jp + jpp >= n {
                continue;
            }
            let (a, b) = (SubsetMask::from_bits(p), SubsetMask::from_bits(q));
            let (word, comps) = encode_pair(a, b, t)?;
            let back = decode_pair(&word, &comps, t);
            r.check("bijection round trip").record(back == Ok((a, b)), || {
                format!("t={n} A={a} B={b}: word {word} decodes to {back:?}")
            });
        }
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_runs_pass() {
        for report in run(Suite::All, 6, VerifyOptions::default()).unwrap() {
            assert!(report.ok(), "{:?}", report);
            assert!(report.passed() > 0);
        }
    }

    #[test]
    fn pairs_at_seven_report_the_closed_form_gap() {
        let report = run(Suite::Pairs, 7, VerifyOptions::default()).unwrap().remove(0);
        let failed: Vec<_> = report.checks.iter().filter(|c| !c.ok()).map(|c| c.name).collect();
        assert_eq!(
            failed,
            vec!["closed = brute", "structural = brute", "marginal law"]
        );
        let closed = &report.checks[0];
        assert_eq!(closed.failed, 3);
        assert!(closed
            .counterexamples
            .contains(&"t=7 j'=2 j''=2 l'=5 l''=5 l=5 case=i: closed 4 brute 8".to_string()));
    }

    #[test]
    fn caps_and_ranges() {
        assert!(matches!(
            run(Suite::All, 99, VerifyOptions::default()),
            Err(Error::ResourceLimit { .. })
        ));
        assert!(matches!(
            run(Suite::Pairs, 15, VerifyOptions::default()),
            Err(Error::ResourceLimit { .. })
        ));
        assert!(matches!(
            run(Suite::Decomp, 17, VerifyOptions::default()),
            Err(Error::ResourceLimit { .. })
        ));
        assert!(run(Suite::Decomp, 2, VerifyOptions::default()).is_err());
    }

    #[test]
    fn suite_names_parse() {
        for s in Suite::SINGLE.into_iter().chain([Suite::All]) {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("bogus".parse::<Suite>().is_err());
    }
}
