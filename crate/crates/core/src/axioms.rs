//! Property harness for the four integral axioms.
//!
//! Additivity, homogeneity and monotonicity are exact rational identities and
//! inequalities checked on sampled elements. Continuity is a Π₂ statement and
//! cannot be tested universally, so the harness checks witnesses: callers
//! supply chains that are decreasing with pointwise infimum 0 by
//! construction, and the harness verifies that the integral values descend to
//! exact zero (finite check) or below the configured tolerance.

use num::Zero;

use crate::rat::{self, rat, Rat};
use crate::riesz::{DaniellIntegral, RieszElement};

/// A certified decreasing chain `f_1 ≥ f_2 ≥ … ≥ 0` with pointwise infimum 0,
/// given as a total generator over indices n ≥ 1.
pub struct Chain<E> {
    label: String,
    gen: Box<dyn Fn(u64) -> E>,
}

impl<E> Chain<E> {
    pub fn new(label: impl Into<String>, gen: impl Fn(u64) -> E + 'static) -> Self {
        Chain {
            label: label.into(),
            gen: Box::new(gen),
        }
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn member(&self, n: u64) -> E {
        (self.gen)(n)
    }
}

/// Outcome of one axiom's checks.
#[derive(Debug, Clone)]
pub struct AxiomCheck {
    pub passed: bool,
    pub checks: usize,
    pub counterexample: Option<String>,
}

impl AxiomCheck {
    fn pass(checks: usize) -> Self {
        AxiomCheck {
            passed: true,
            checks,
            counterexample: None,
        }
    }

    fn fail(checks: usize, witness: String) -> Self {
        AxiomCheck {
            passed: false,
            checks,
            counterexample: Some(witness),
        }
    }
}

#[derive(Debug, Clone)]
pub struct AxiomReport {
    pub integral: String,
    pub additivity: AxiomCheck,
    pub homogeneity: AxiomCheck,
    pub monotonicity: AxiomCheck,
    /// |I(f)| ≤ I(|f|), derived from monotonicity applied to f and −f.
    pub derived_abs_bound: AxiomCheck,
    pub continuity: AxiomCheck,
}

impl AxiomReport {
    pub fn all_passed(&self) -> bool {
        self.additivity.passed
            && self.homogeneity.passed
            && self.monotonicity.passed
            && self.derived_abs_bound.passed
            && self.continuity.passed
    }
}

/// The sampler ran dry before the requested number of trials; carries the
/// partial report computed on whatever was available.
#[derive(Debug, Clone)]
pub struct InsufficientSamples {
    pub partial: AxiomReport,
    pub drawn: usize,
    pub requested: usize,
}

impl std::fmt::Display for InsufficientSamples {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "insufficient samples: sampler produced {} of {} requested elements",
            self.drawn, self.requested
        )
    }
}

impl std::error::Error for InsufficientSamples {}

#[derive(Debug, Clone)]
pub struct HarnessConfig {
    /// Element pairs / chains to examine.
    pub trials: usize,
    /// Scalars used for the homogeneity checks.
    pub scalars: Vec<Rat>,
    /// Number of chain members probed. Indices advance geometrically
    /// (1, 2, 4, …): the values are monotone, so a subsequence reaching the
    /// tolerance settles the infimum, and doubling reaches deep indices in
    /// few probes.
    pub chain_probes: u32,
    /// Continuity passes once a chain's integral value is ≤ this (or exactly 0).
    pub chain_tolerance: Rat,
}

impl Default for HarnessConfig {
    fn default() -> Self {
        HarnessConfig {
            trials: 32,
            scalars: vec![
                rat(0, 1),
                rat(1, 1),
                rat(-1, 1),
                rat(1, 2),
                rat(2, 1),
                rat(-3, 5),
            ],
            chain_probes: 32,
            chain_tolerance: rat(1, 1_000_000),
        }
    }
}

/// Checks axioms (i)–(iv) for `integral` on elements drawn from `sampler` and
/// chains drawn from `chains`. Exhaustion of the sampler short of
/// `cfg.trials` elements is an error carrying the partial report.
pub fn check_integral_axioms<I: DaniellIntegral>(
    sampler: &mut dyn FnMut() -> Option<I::Element>,
    integral: &I,
    chains: &mut dyn FnMut() -> Option<Chain<I::Element>>,
    cfg: &HarnessConfig,
) -> Result<AxiomReport, InsufficientSamples> {
    let requested = cfg.trials.max(2) * 2;
    let mut elems: Vec<I::Element> = Vec::with_capacity(requested);
    while elems.len() < requested {
        match sampler() {
            Some(e) => elems.push(e),
            None => break,
        }
    }
    let exhausted = elems.len() < requested;

    let report = AxiomReport {
        integral: integral.descriptor(),
        additivity: check_additivity(integral, &elems),
        homogeneity: check_homogeneity(integral, &elems, &cfg.scalars),
        monotonicity: check_monotonicity(integral, &elems, false),
        derived_abs_bound: check_monotonicity(integral, &elems, true),
        continuity: check_continuity(integral, chains, cfg),
    };
    if exhausted {
        return Err(InsufficientSamples {
            partial: report,
            drawn: elems.len(),
            requested,
        });
    }
    Ok(report)
}

fn check_additivity<I: DaniellIntegral>(integral: &I, elems: &[I::Element]) -> AxiomCheck {
    let mut checks = 0;
    for pair in elems.chunks_exact(2) {
        let (f, g) = (&pair[0], &pair[1]);
        let lhs = match f.try_add(g).and_then(|s| integral.integrate(&s)) {
            Ok(v) => v,
            Err(e) => return AxiomCheck::fail(checks, format!("integrate(f+g) failed: {e}")),
        };
        let rhs = match (integral.integrate(f), integral.integrate(g)) {
            (Ok(a), Ok(b)) => a + b,
            _ => return AxiomCheck::fail(checks, "integrate failed on a sampled element".into()),
        };
        checks += 1;
        if lhs != rhs {
            return AxiomCheck::fail(
                checks,
                format!("I(f+g) = {lhs} but I(f)+I(g) = {rhs} for f={f:?}, g={g:?}"),
            );
        }
    }
    AxiomCheck::pass(checks)
}

fn check_homogeneity<I: DaniellIntegral>(
    integral: &I,
    elems: &[I::Element],
    scalars: &[Rat],
) -> AxiomCheck {
    let mut checks = 0;
    for f in elems {
        let base = match integral.integrate(f) {
            Ok(v) => v,
            Err(e) => return AxiomCheck::fail(checks, format!("integrate failed: {e}")),
        };
        for r in scalars {
            let lhs = match integral.integrate(&f.scale(r)) {
                Ok(v) => v,
                Err(e) => return AxiomCheck::fail(checks, format!("integrate(rf) failed: {e}")),
            };
            checks += 1;
            if lhs != r * &base {
                return AxiomCheck::fail(
                    checks,
                    format!("I({r}·f) = {lhs} but {r}·I(f) = {} for f={f:?}", r * &base),
                );
            }
        }
    }
    AxiomCheck::pass(checks)
}

/// With `two_sided = false`: the literal axiom I(f) ≤ I(|f|), checked on each
/// sample and its negation. With `two_sided = true`: |I(f)| ≤ I(|f|).
fn check_monotonicity<I: DaniellIntegral>(
    integral: &I,
    elems: &[I::Element],
    two_sided: bool,
) -> AxiomCheck {
    let mut checks = 0;
    for f in elems {
        let candidates = if two_sided {
            vec![f.clone()]
        } else {
            vec![f.clone(), f.neg()]
        };
        for cand in candidates {
            let val = match integral.integrate(&cand) {
                Ok(v) => v,
                Err(e) => return AxiomCheck::fail(checks, format!("integrate failed: {e}")),
            };
            let abs_val = match integral.integrate(&cand.abs()) {
                Ok(v) => v,
                Err(e) => return AxiomCheck::fail(checks, format!("integrate(|f|) failed: {e}")),
            };
            checks += 1;
            let lhs = if two_sided { rat::abs(&val) } else { val.clone() };
            if lhs > abs_val {
                let claim = if two_sided { "|I(f)|" } else { "I(f)" };
                return AxiomCheck::fail(
                    checks,
                    format!("{claim} = {lhs} > I(|f|) = {abs_val} for f={cand:?}"),
                );
            }
        }
    }
    AxiomCheck::pass(checks)
}

fn check_continuity<I: DaniellIntegral>(
    integral: &I,
    chains: &mut dyn FnMut() -> Option<Chain<I::Element>>,
    cfg: &HarnessConfig,
) -> AxiomCheck {
    let mut checks = 0;
    for _ in 0..cfg.trials {
        let Some(chain) = chains() else { break };
        checks += 1;
        let mut prev: Option<(I::Element, Rat)> = None;
        let mut reached = false;
        let mut last_value = None;
        let mut index: u64 = 1;
        for _ in 0..cfg.chain_probes {
            let n = index;
            let f = chain.member(n);
            if !f.is_nonnegative() {
                return AxiomCheck::fail(
                    checks,
                    format!("chain '{}' member {n} is not ≥ 0", chain.label()),
                );
            }
            let v = match integral.integrate(&f) {
                Ok(v) => v,
                Err(e) => return AxiomCheck::fail(checks, format!("integrate failed: {e}")),
            };
            if let Some((pf, pv)) = &prev {
                match f.try_pointwise_leq(pf) {
                    Ok(true) => {}
                    _ => {
                        return AxiomCheck::fail(
                            checks,
                            format!("chain '{}' is not decreasing at step {n}", chain.label()),
                        )
                    }
                }
                if &v > pv {
                    return AxiomCheck::fail(
                        checks,
                        format!(
                            "chain '{}' integral values increase at step {n}: {pv} → {v}",
                            chain.label()
                        ),
                    );
                }
            }
            let done = v.is_zero() || v <= cfg.chain_tolerance;
            last_value = Some(v.clone());
            prev = Some((f, v));
            if done {
                reached = true;
                break;
            }
            index = match index.checked_mul(2) {
                Some(next) => next,
                None => break,
            };
        }
        if !reached {
            return AxiomCheck::fail(
                checks,
                format!(
                    "chain '{}' stayed at {} after {} probes (tolerance {})",
                    chain.label(),
                    last_value.map(|v| v.to_string()).unwrap_or_default(),
                    cfg.chain_probes,
                    cfg.chain_tolerance
                ),
            );
        }
    }
    AxiomCheck::pass(checks)
}
