//! Cross-check suites comparing `stiefel` against an [`Oracles`]
//! implementation over every valid id up to a bound on `n`.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use stiefel::classes::{char_class_report, dual_top_index, p1_coefficient};
use stiefel::cohomology::{
    charrank_of_canonical_bundle, cutoff_j, cutoff_j_window, cutoff_n, presentation,
};
use stiefel::invariants::{full_report, parallelizable, ucharrank};
use stiefel::{binom_parity, geometric_inverse_coefficient, Family, ManifoldId, TruncatedGF2Poly};

use crate::{naive_mul, DualityCheck, OracleError, Oracles};

/// Failures kept per suite; the count is tracked separately.
const MAX_LISTED_FAILURES: usize = 20;
const RANDOM_UNITS_PER_TRUNCATION: usize = 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Suite {
    Parity,
    Inverse,
    Basis,
    Duality,
    Consistency,
}

impl Suite {
    pub const ALL: [Suite; 5] = [
        Suite::Parity,
        Suite::Inverse,
        Suite::Basis,
        Suite::Duality,
        Suite::Consistency,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Parity => "parity",
            Suite::Inverse => "inverse",
            Suite::Basis => "basis",
            Suite::Duality => "duality",
            Suite::Consistency => "consistency",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| {
                format!(
                    "unknown suite `{s}` (expected parity, inverse, basis, duality or consistency)"
                )
            })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteOutcome {
    pub suite: Suite,
    pub cases: u64,
    /// Cases the oracle declined because of its size ceiling.
    pub skipped: u64,
    pub failure_count: u64,
    /// The first few failure descriptions.
    pub failures: Vec<String>,
}

impl SuiteOutcome {
    fn new(suite: Suite) -> Self {
        SuiteOutcome {
            suite,
            cases: 0,
            skipped: 0,
            failure_count: 0,
            failures: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.fail(describe());
        }
    }

    fn fail(&mut self, message: String) {
        self.failure_count += 1;
        if self.failures.len() < MAX_LISTED_FAILURES {
            self.failures.push(message);
        }
    }

    pub fn passed(&self) -> bool {
        self.failure_count == 0
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyReport {
    pub max_n: u32,
    pub outcomes: Vec<SuiteOutcome>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.outcomes.iter().all(SuiteOutcome::passed)
    }

    pub fn total_cases(&self) -> u64 {
        self.outcomes.iter().map(|o| o.cases).sum()
    }

    /// True when nothing was actually checked.
    pub fn is_vacuous(&self) -> bool {
        self.total_cases() == 0
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for o in &self.outcomes {
            let verdict = if o.passed() { "PASS" } else { "FAIL" };
            write!(f, "{verdict} {:<12} {} cases", o.suite.name(), o.cases)?;
            if o.skipped > 0 {
                write!(f, ", {} skipped (oracle limit)", o.skipped)?;
            }
            if o.failure_count > 0 {
                write!(f, ", {} failures", o.failure_count)?;
            }
            writeln!(f)?;
            for msg in &o.failures {
                writeln!(f, "    {msg}")?;
            }
        }
        let summary = if !self.passed() {
            "verification FAILED"
        } else if self.is_vacuous() {
            "verification passed vacuously (0 cases)"
        } else {
            "verification passed"
        };
        writeln!(
            f,
            "{summary}: {} cases up to n = {}",
            self.total_cases(),
            self.max_n
        )
    }
}

/// Runs `suites` (in the given order, duplicates ignored) up to `max_n`.
pub fn run<O: Oracles + ?Sized>(oracles: &O, max_n: u32, suites: &[Suite]) -> VerifyReport {
    let mut selected: Vec<Suite> = Vec::new();
    for s in suites {
        if !selected.contains(s) {
            selected.push(*s);
        }
    }
    let outcomes = selected
        .into_iter()
        .map(|suite| match suite {
            Suite::Parity => parity_suite(oracles, max_n),
            Suite::Inverse => inverse_suite(oracles, max_n),
            Suite::Basis => basis_suite(oracles, max_n),
            Suite::Duality => duality_suite(oracles, max_n),
            Suite::Consistency => consistency_suite(oracles, max_n),
        })
        .collect();
    VerifyReport { max_n, outcomes }
}

fn all_ids(max_n: u32) -> impl Iterator<Item = ManifoldId> {
    Family::ALL
        .into_iter()
        .flat_map(move |f| ManifoldId::enumerate(f, max_n))
}

fn sw_ids(max_n: u32) -> impl Iterator<Item = ManifoldId> {
    [Family::PV, Family::Y]
        .into_iter()
        .flat_map(move |f| ManifoldId::enumerate(f, max_n))
}

fn oracle_odd<O: Oracles + ?Sized>(
    oracles: &O,
    out: &mut SuiteOutcome,
    n: u64,
    r: u64,
) -> Option<bool> {
    match oracles.pascal_parity(n, r) {
        Ok(p) => Some(p.is_odd()),
        Err(e) => {
            out.cases += 1;
            out.fail(format!("oracle parity of binom({n},{r}): {e}"));
            None
        }
    }
}

fn parity_suite<O: Oracles + ?Sized>(oracles: &O, max_n: u32) -> SuiteOutcome {
    let mut out = SuiteOutcome::new(Suite::Parity);
    if max_n == 0 {
        return out;
    }
    for n in 0..=u64::from(max_n) {
        for r in 0..=n + 1 {
            let Some(expected) = oracle_odd(oracles, &mut out, n, r) else {
                continue;
            };
            let got = binom_parity(n, r).is_odd();
            out.check(got == expected, || {
                format!(
                    "binom({n},{r}): Lucas says {}, triangle says {}",
                    parity(got),
                    parity(expected)
                )
            });
        }
    }
    out
}

fn parity(odd: bool) -> &'static str {
    if odd {
        "odd"
    } else {
        "even"
    }
}

fn random_unit(rng: &mut ChaCha8Rng, t: usize) -> TruncatedGF2Poly {
    TruncatedGF2Poly::from_exponents(
        std::iter::once(0).chain((1..t).filter(|_| rng.gen_bool(0.5))),
        t,
    )
}

fn inverse_suite<O: Oracles + ?Sized>(oracles: &O, max_n: u32) -> SuiteOutcome {
    let mut out = SuiteOutcome::new(Suite::Inverse);
    for id in sw_ids(max_n) {
        let report = match char_class_report(id) {
            Ok(r) => r,
            Err(e) => {
                out.cases += 1;
                out.fail(format!("{id}: {e}"));
                continue;
            }
        };
        let w = &report.total_sw;
        let wbar = &report.inverse_sw;
        let naive = oracles.naive_inverse(w);
        let closed_form_ok = (0..wbar.truncation())
            .all(|j| wbar.coeff(j) == geometric_inverse_coefficient(id.nk(), j as u64).is_odd());
        out.check(
            naive.as_ref() == Ok(wbar)
                && naive_mul(w, wbar) == TruncatedGF2Poly::one(w.truncation())
                && closed_form_ok,
            || format!("{id}: w = {w}, w̄ = {wbar}, naive inverse {naive:?}, closed form agrees: {closed_form_ok}"),
        );
    }
    for t in 1..=max_n as usize {
        let mut rng = ChaCha8Rng::seed_from_u64(t as u64);
        for _ in 0..RANDOM_UNITS_PER_TRUNCATION {
            let a = random_unit(&mut rng, t);
            let fast = a.inverse();
            let naive = oracles.naive_inverse(&a);
            let ok = match (&fast, &naive) {
                (Ok(f), Ok(s)) => f == s && naive_mul(&a, f) == TruncatedGF2Poly::one(t),
                _ => false,
            };
            out.check(ok, || {
                format!("inverse of {a:?}: Newton {fast:?}, naive {naive:?}")
            });
        }
    }
    out
}

fn basis_suite<O: Oracles + ?Sized>(oracles: &O, max_n: u32) -> SuiteOutcome {
    let mut out = SuiteOutcome::new(Suite::Basis);
    for id in all_ids(max_n) {
        let p = match presentation(id) {
            Ok(p) => p,
            Err(e) => {
                out.cases += 1;
                out.fail(format!("{id}: {e}"));
                continue;
            }
        };
        match oracles.basis_histogram(&p) {
            Ok(hist) => {
                let betti = p.betti_numbers();
                out.check(betti.as_ref() == Ok(&hist), || {
                    format!("{id}: enumerated histogram {hist:?} vs Betti numbers {betti:?}")
                });
            }
            Err(OracleError::LimitExceeded { .. }) => out.skipped += 1,
            Err(e) => {
                out.cases += 1;
                out.fail(format!("{id}: {e}"));
            }
        }
    }
    out
}

fn duality_suite<O: Oracles + ?Sized>(oracles: &O, max_n: u32) -> SuiteOutcome {
    let mut out = SuiteOutcome::new(Suite::Duality);
    for id in all_ids(max_n) {
        match presentation(id) {
            Ok(p) => {
                let oracle = oracles.check_duality(&p);
                let own = p.check_invariants();
                out.check(oracle == DualityCheck::Pass && own.is_ok(), || {
                    format!("{id}: oracle {oracle:?}, presentation check {own:?}")
                });
            }
            Err(e) => {
                out.cases += 1;
                out.fail(format!("{id}: {e}"));
            }
        }
    }
    out
}

fn in_theorem_range(codim: u32) -> bool {
    matches!(codim, 5 | 6) || codim >= 9
}

fn consistency_suite<O: Oracles + ?Sized>(oracles: &O, max_n: u32) -> SuiteOutcome {
    let mut out = SuiteOutcome::new(Suite::Consistency);

    for id in ManifoldId::enumerate(Family::PV, max_n) {
        let (n, k) = (id.n(), id.k());
        if !in_theorem_range(n - k) {
            continue;
        }
        let Some(odd) = oracle_odd(oracles, &mut out, n.into(), (k - 1).into()) else {
            continue;
        };
        let cutoff_hit = cutoff_n(n, k) == n - k + 1;
        let charrank = presentation(id).and_then(|p| charrank_of_canonical_bundle(&p));
        let verdict = ucharrank(id);
        let ok = match (&charrank, &verdict) {
            (Ok(c), Ok(v)) => {
                odd == cutoff_hit && odd == (*c == u64::from(n - k)) && v.value() == Some(c)
            }
            _ => false,
        };
        out.check(ok, || {
            format!("{id}: binom(n,k-1) {}, N = n-k+1: {cutoff_hit}, charrank {charrank:?}, ucharrank {verdict:?}", parity(odd))
        });
    }

    for id in ManifoldId::enumerate(Family::Y, max_n) {
        let (n, k) = (id.n(), id.k());
        let Some(odd) = oracle_odd(oracles, &mut out, n.into(), (2 * k - 1).into()) else {
            continue;
        };
        let j = cutoff_j(n, k);
        let p = presentation(id);
        let bottom_excluded = j.as_ref().is_ok_and(|&j| 2 * j - 1 == n - 2 * k);
        let charrank = p
            .as_ref()
            .map_err(Clone::clone)
            .and_then(charrank_of_canonical_bundle);
        let charrank_at_codim = charrank.as_ref().is_ok_and(|&c| c == u64::from(n - 2 * k));
        let window_ok = cutoff_j_window(n, k).count() as u32 == k;
        let pullback_ok = p.as_ref().is_ok_and(|p| {
            let mut degrees = p.exterior_degrees();
            degrees.extend(p.polynomial.map(|x| x.excluded.degree));
            degrees.sort_unstable();
            degrees == ((n - 2 * k)..n).map(u64::from).collect::<Vec<_>>()
        });
        let verdict_ok = !in_theorem_range(n - 2 * k)
            || matches!((&ucharrank(id), &charrank), (Ok(v), Ok(c)) if v.value() == Some(c));
        out.check(
            odd == bottom_excluded && odd == charrank_at_codim && window_ok && pullback_ok && verdict_ok,
            || {
                format!(
                    "{id}: binom(n,2k-1) {}, J = {j:?}, charrank {charrank:?}, window ok {window_ok}, pullback ok {pullback_ok}, ucharrank ok {verdict_ok}",
                    parity(odd)
                )
            },
        );

        if n >= 2 * k + 4 {
            let p1 = p1_coefficient(id);
            let expected = i64::from(k) * (i64::from(n) - 2 * i64::from(k) - 2);
            let verdict = parallelizable(id);
            out.check(
                p1 == Ok(expected)
                    && expected > 0
                    && verdict
                        .as_ref()
                        .is_ok_and(|v| v.is_determined() && v.value() == Some(&false)),
                || format!("{id}: p1 {p1:?} (expected {expected}), parallelizable {verdict:?}"),
            );
        }
    }

    for id in all_ids(max_n) {
        let Ok(report) = full_report(id) else {
            out.cases += 1;
            out.fail(format!("{id}: full report failed: {:?}", full_report(id)));
            continue;
        };
        if let Some(skew) = report.skew_embed_lower_bound {
            let m = dual_top_index(id);
            out.check(
                skew > 2 * report.dim && m.is_ok_and(|m| (skew == 2 * report.dim + 1) == (m == 0)),
                || format!("{id}: skew bound {skew} vs dim {}", report.dim),
            );
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::BruteForce;

    #[test]
    fn parsing_suites() {
        assert_eq!("Parity".parse::<Suite>().unwrap(), Suite::Parity);
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn zero_is_vacuous() {
        let report = run(&BruteForce::new(8, 1 << 10), 0, &Suite::ALL);
        assert!(report.passed());
        assert!(report.is_vacuous());
        assert!(report.to_string().contains("vacuously"));
    }

    #[test]
    fn small_run_passes() {
        let report = run(&BruteForce::new(64, 1 << 16), 16, &Suite::ALL);
        assert!(report.passed(), "{report}");
        assert!(report.outcomes.iter().all(|o| o.cases > 0), "{report}");
    }

    #[test]
    fn duplicate_suites_run_once() {
        let report = run(
            &BruteForce::new(64, 1 << 16),
            4,
            &[Suite::Parity, Suite::Parity],
        );
        assert_eq!(report.outcomes.len(), 1);
    }

    #[test]
    fn oracle_limits_are_failures_not_silence() {
        let report = run(&BruteForce::new(4, 1 << 16), 8, &[Suite::Parity]);
        assert!(!report.passed());
    }
}
