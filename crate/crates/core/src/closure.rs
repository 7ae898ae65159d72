//! Certificate calculus for the dominated-convergence closure.
//!
//! The closure of a set under dominated pointwise limits is built in a chain
//! `U_1 ⊂ U_2 ⊂ …` where each stage adds limits of sequences dominated by a
//! member of the previous stage. Those stages are proper classes of
//! functions; what is computable is *membership certificates*: a
//! [`WitnessTree`] is either a concrete element or a limit node carrying a
//! dominator certificate and a lazily generated member sequence. Evaluation
//! and integration of a certificate iterate its sequence under a Cauchy
//! criterion, except where a constructor attached exactness metadata — a
//! stationarity hint (step-function sequences stabilize exactly) or an
//! a-priori rate against the dominator (the partition approximants converge
//! like 1/n) — in which case the result carries a proved error bound instead
//! of a heuristic one. A certificate that fails its own domination contract
//! or fails to converge raises an error carrying the observed trajectory;
//! a failed proof is loud, never a best-effort value.

use std::rc::Rc;

use num::{One, Signed, Zero};

use crate::error::Error;
use crate::rat::{self, rat, Rat};
use crate::riesz::{AlgebraElement, DaniellIntegral, PointwiseEval, RieszElement};
use crate::step::{lemma1_sequence, lemma1_stationarity_index, StepFunction1D};
use crate::tensor::{flatten, lemma6_approximation, lemma6_dominator, GridFunction, TensorElement};

/// A-priori convergence rate of a limit node, relative to its dominator:
/// `|limit − member_n| ≤ (coefficient/n)·dominator` pointwise. Integrating
/// against a monotone integral preserves the bound, which is what lets the
/// evaluator jump straight to a level meeting the caller tolerance.
#[derive(Debug, Clone)]
pub enum ConvergenceRate {
    InverseLevel { coefficient: Rat },
}

/// Membership certificate: a leaf (concrete element) or a dominated-limit
/// node. Sequences are total pure functions of the index n ≥ 1; members must
/// satisfy `|member| ≤ dominator` pointwise, checked lazily at evaluation
/// sites.
pub enum WitnessTree<E> {
    Leaf(E),
    Limit(LimitNode<E>),
}

pub struct LimitNode<E> {
    pub label: String,
    dominator: Box<WitnessTree<E>>,
    sequence: Rc<dyn Fn(u64) -> WitnessTree<E>>,
    /// Index from which the sequence is exactly stationary; evaluation at the
    /// hint returns an exact value (verified against the next member).
    pub stationarity_hint: Option<u64>,
    pub rate: Option<ConvergenceRate>,
}

impl<E> Clone for WitnessTree<E>
where
    E: Clone,
{
    fn clone(&self) -> Self {
        match self {
            WitnessTree::Leaf(e) => WitnessTree::Leaf(e.clone()),
            WitnessTree::Limit(n) => WitnessTree::Limit(LimitNode {
                label: n.label.clone(),
                dominator: n.dominator.clone(),
                sequence: Rc::clone(&n.sequence),
                stationarity_hint: n.stationarity_hint,
                rate: n.rate.clone(),
            }),
        }
    }
}

impl<E: std::fmt::Debug> std::fmt::Debug for WitnessTree<E> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            WitnessTree::Leaf(e) => f.debug_tuple("Leaf").field(e).finish(),
            WitnessTree::Limit(n) => f
                .debug_struct("Limit")
                .field("label", &n.label)
                .field("dominator", &n.dominator)
                .field("stationarity_hint", &n.stationarity_hint)
                .field("rate", &n.rate)
                .finish_non_exhaustive(),
        }
    }
}

impl<E> WitnessTree<E> {
    pub fn leaf(e: E) -> Self {
        WitnessTree::Leaf(e)
    }

    pub fn limit(
        label: impl Into<String>,
        dominator: WitnessTree<E>,
        sequence: impl Fn(u64) -> WitnessTree<E> + 'static,
        stationarity_hint: Option<u64>,
        rate: Option<ConvergenceRate>,
    ) -> Self {
        WitnessTree::Limit(LimitNode {
            label: label.into(),
            dominator: Box::new(dominator),
            sequence: Rc::new(sequence),
            stationarity_hint,
            rate,
        })
    }

    pub fn dominator(&self) -> Option<&WitnessTree<E>> {
        match self {
            WitnessTree::Leaf(_) => None,
            WitnessTree::Limit(n) => Some(&n.dominator),
        }
    }

    pub fn member(&self, n: u64) -> Option<WitnessTree<E>> {
        match self {
            WitnessTree::Leaf(_) => None,
            WitnessTree::Limit(node) => Some((node.sequence)(n)),
        }
    }
}

/// Nesting depth of limit nodes: a leaf certifies membership at stage 1, a
/// limit node at one stage above its deepest constituent. Sequences are lazy,
/// so the sequence part is probed at the first two indices (constructors in
/// this crate build depth-homogeneous sequences) together with the
/// stationarity hint when present.
pub fn chain_depth<E>(w: &WitnessTree<E>) -> u32 {
    match w {
        WitnessTree::Leaf(_) => 1,
        WitnessTree::Limit(node) => {
            let mut deepest = chain_depth(&node.dominator);
            let mut probes = vec![1u64, 2];
            if let Some(h) = node.stationarity_hint {
                probes.push(h);
            }
            for n in probes {
                deepest = deepest.max(chain_depth(&(node.sequence)(n)));
            }
            1 + deepest
        }
    }
}

/// An approximate value with its certificate: `|true − value| ≤ error_bound`,
/// where `exact` marks bounds proved to be zero (leaves and verified
/// stationary sequences). For the plain Cauchy path the bound is the observed
/// gap — a heuristic certificate, reported as such.
#[derive(Debug, Clone, PartialEq)]
pub struct Approx {
    pub value: Rat,
    pub error_bound: Rat,
    pub exact: bool,
}

impl Approx {
    fn exact(value: Rat) -> Self {
        Approx {
            value,
            error_bound: Rat::zero(),
            exact: true,
        }
    }
}

/// Pointwise evaluation of a certificate at `point`.
pub fn evaluate<E>(
    w: &WitnessTree<E>,
    point: &E::Point,
    tolerance: &Rat,
    max_steps: u32,
) -> Result<Approx, Error>
where
    E: RieszElement + PointwiseEval,
{
    let point = point.clone();
    eval_tree(w, &move |e: &E| e.value_at(&point), tolerance, max_steps)
}

/// The unique extension of `integral` evaluated on a certificate: leaves
/// integrate elementarily, limit nodes pass to the limit of member integrals
/// (dominated convergence justifies the exchange; the domination itself is
/// re-checked at integral level on every measured member).
pub fn extended_integral<I>(
    integral: &I,
    w: &WitnessTree<I::Element>,
    tolerance: &Rat,
    max_steps: u32,
) -> Result<Approx, Error>
where
    I: DaniellIntegral,
{
    eval_tree(w, &|e: &I::Element| integral.integrate(e), tolerance, max_steps)
}

/// Shared limit engine: `measure` is either pointwise evaluation or an
/// elementary integral; both are linear and monotone, which is all the
/// domination and rate arguments need.
fn eval_tree<E, F>(
    w: &WitnessTree<E>,
    measure: &F,
    tolerance: &Rat,
    max_steps: u32,
) -> Result<Approx, Error>
where
    E: RieszElement,
    F: Fn(&E) -> Result<Rat, Error>,
{
    if !tolerance.is_positive() {
        if let WitnessTree::Limit(node) = w {
            if node.stationarity_hint.is_none() {
                return Err(Error::InvalidBound(
                    "tolerance must be positive unless the certificate is stationary".into(),
                ));
            }
        }
    }
    match w {
        WitnessTree::Leaf(e) => Ok(Approx::exact(measure(e)?)),
        WitnessTree::Limit(node) => {
            let dom = eval_tree(&node.dominator, measure, tolerance, max_steps)?;
            let dom_upper = &dom.value + &dom.error_bound;
            let check_domination = |n: u64, v: &Approx| -> Result<(), Error> {
                if rat::abs(&v.value) > &dom_upper + &v.error_bound {
                    return Err(Error::InvalidCertificate(format!(
                        "'{}': member {n} measures to {} beyond its dominator bound {}",
                        node.label, v.value, dom_upper
                    )));
                }
                Ok(())
            };

            if let Some(hint) = node.stationarity_hint {
                let v = eval_tree(&(node.sequence)(hint), measure, tolerance, max_steps)?;
                check_domination(hint, &v)?;
                let next = eval_tree(&(node.sequence)(hint + 1), measure, tolerance, max_steps)?;
                if v.exact && next.exact && v.value != next.value {
                    return Err(Error::InvalidCertificate(format!(
                        "'{}': sequence not stationary at hinted index {hint}: {} then {}",
                        node.label, v.value, next.value
                    )));
                }
                return Ok(v);
            }

            if let Some(ConvergenceRate::InverseLevel { coefficient }) = &node.rate {
                // |limit − member_n| ≤ (c/n)·dominator, so jump to the first
                // level n with (c/n)·dom ≤ tolerance.
                let n = if dom_upper.is_positive() && coefficient.is_positive() {
                    rat::ceil_level(&(coefficient * &dom_upper / tolerance), 1)?
                } else {
                    1
                };
                let v = eval_tree(&(node.sequence)(n), measure, tolerance, max_steps)?;
                check_domination(n, &v)?;
                let rate_bound = if dom_upper.is_positive() {
                    coefficient / rat::int_u64(n) * &dom_upper
                } else {
                    Rat::zero()
                };
                return Ok(Approx {
                    value: v.value,
                    error_bound: &v.error_bound + rate_bound,
                    exact: false,
                });
            }

            // Plain Cauchy detection on successive members.
            let mut trajectory: Vec<Rat> = Vec::new();
            let mut prev: Option<Approx> = None;
            let steps = max_steps.max(2);
            for n in 1..=steps {
                let v = eval_tree(&(node.sequence)(u64::from(n)), measure, tolerance, max_steps)?;
                check_domination(u64::from(n), &v)?;
                trajectory.push(v.value.clone());
                if let Some(p) = prev {
                    let gap = rat::abs(&(&v.value - &p.value));
                    if &gap <= tolerance {
                        return Ok(Approx {
                            error_bound: gap + &v.error_bound,
                            value: v.value,
                            exact: false,
                        });
                    }
                }
                prev = Some(v);
            }
            Err(Error::ConvergenceFailure {
                steps,
                trajectory,
            })
        }
    }
}

/// Promotes a leaf to a one-stage-deeper certificate via the constant
/// sequence dominated by |element|.
pub fn promote_leaf<E>(e: &E) -> WitnessTree<E>
where
    E: RieszElement + 'static,
{
    let member = e.clone();
    WitnessTree::limit(
        "constant",
        WitnessTree::leaf(e.abs()),
        move |_| WitnessTree::leaf(member.clone()),
        Some(1),
        None,
    )
}

/// Constant-sequence certificate for a leaf under an explicit dominator.
/// When both sides are concrete the domination is checked globally right
/// here; grid and step carriers decide pointwise order exactly.
pub fn constant_certificate<E>(f: &E, dominator: &E) -> Result<WitnessTree<E>, Error>
where
    E: RieszElement + 'static,
{
    if !f.abs().try_pointwise_leq(dominator)? {
        return Err(Error::InvalidBound(
            "constant certificate: |f| is not dominated by the given element".into(),
        ));
    }
    let member = f.clone();
    Ok(WitnessTree::limit(
        "constant",
        WitnessTree::leaf(dominator.clone()),
        move |_| WitnessTree::leaf(member.clone()),
        Some(1),
        None,
    ))
}

/// Sum of certificates: leaves add directly, limit nodes add dominators and
/// add sequences memberwise. The result is again a valid certificate — this
/// is the vector-space structure of the closure stages.
pub fn tree_add<E>(a: &WitnessTree<E>, b: &WitnessTree<E>) -> Result<WitnessTree<E>, Error>
where
    E: RieszElement + 'static,
{
    match (a, b) {
        (WitnessTree::Leaf(x), WitnessTree::Leaf(y)) => Ok(WitnessTree::leaf(x.try_add(y)?)),
        (WitnessTree::Leaf(_), WitnessTree::Limit(_)) => tree_add(&promote_leaf_of(a), b),
        (WitnessTree::Limit(_), WitnessTree::Leaf(_)) => tree_add(a, &promote_leaf_of(b)),
        (WitnessTree::Limit(na), WitnessTree::Limit(nb)) => {
            let dominator = tree_add(&na.dominator, &nb.dominator)?;
            let sa = Rc::clone(&na.sequence);
            let sb = Rc::clone(&nb.sequence);
            let label = format!("({})+({})", na.label, nb.label);
            let hint = match (na.stationarity_hint, nb.stationarity_hint) {
                (Some(x), Some(y)) => Some(x.max(y)),
                _ => None,
            };
            let rate = match (&na.rate, &nb.rate) {
                (
                    Some(ConvergenceRate::InverseLevel { coefficient: ca }),
                    Some(ConvergenceRate::InverseLevel { coefficient: cb }),
                ) => Some(ConvergenceRate::InverseLevel {
                    // |sum_limit − sum_n| ≤ (ca/n)·domA + (cb/n)·domB
                    //                     ≤ (max(ca,cb)/n)·(domA + domB)
                    coefficient: rat::max(ca, cb),
                }),
                _ => None,
            };
            Ok(WitnessTree::limit(
                label,
                dominator,
                move |n| {
                    tree_add(&sa(n), &sb(n))
                        .expect("certificate sequences live in the space their dominators added in")
                },
                hint,
                rate,
            ))
        }
    }
}

fn promote_leaf_of<E>(w: &WitnessTree<E>) -> WitnessTree<E>
where
    E: RieszElement + 'static,
{
    match w {
        WitnessTree::Leaf(e) => promote_leaf(e),
        WitnessTree::Limit(_) => w.clone(),
    }
}

/// Scalar multiple of a certificate.
pub fn tree_scale<E>(r: &Rat, w: &WitnessTree<E>) -> WitnessTree<E>
where
    E: RieszElement + 'static,
{
    match w {
        WitnessTree::Leaf(e) => WitnessTree::leaf(e.scale(r)),
        WitnessTree::Limit(node) => {
            let dominator = tree_scale(&rat::abs(r), &node.dominator);
            let seq = Rc::clone(&node.sequence);
            let r = r.clone();
            let rc = r.clone();
            let rate = node.rate.as_ref().map(
                |ConvergenceRate::InverseLevel { coefficient }| ConvergenceRate::InverseLevel {
                    // dominator was scaled by |r| as well, so the relative
                    // coefficient is unchanged.
                    coefficient: coefficient.clone(),
                },
            );
            WitnessTree::limit(
                format!("{}·({})", r, node.label),
                dominator,
                move |n| tree_scale(&rc, &seq(n)),
                node.stationarity_hint,
                rate,
            )
        }
    }
}

/// Certificate for `f·1_{U(g)}` as the stationary limit of `inf(f, n|g|)`
/// (split into positive and negative parts for signed `f`). Step functions
/// stabilize exactly, so the node carries a stationarity hint and evaluates
/// exactly.
pub fn lemma1_certificate(
    f: &StepFunction1D,
    g: &StepFunction1D,
) -> Result<WitnessTree<StepFunction1D>, Error> {
    fn nonnegative_part_certificate(
        f: StepFunction1D,
        g: StepFunction1D,
    ) -> WitnessTree<StepFunction1D> {
        let hint = lemma1_stationarity_index(&f, &g);
        let dominator = WitnessTree::leaf(f.clone());
        let label = "lemma1".to_string();
        WitnessTree::limit(
            label,
            dominator,
            move |n| {
                WitnessTree::leaf(
                    lemma1_sequence(&f, &g, n).expect("f ≥ 0 by construction and n ≥ 1"),
                )
            },
            Some(hint),
            None,
        )
    }
    if f.is_nonnegative() {
        return Ok(nonnegative_part_certificate(f.clone(), g.clone()));
    }
    let pos = nonnegative_part_certificate(f.pos_part(), g.clone());
    let neg = nonnegative_part_certificate(f.neg_part(), g.clone());
    tree_add(&pos, &tree_scale(&-Rat::one(), &neg))
}

/// Certificate that |flatten(t)| lies one stage above the tensor product:
/// members are the flattened |f_n| of the level-n partition approximation,
/// the dominator is k·(g⊗h), and the error bound (2k/n)·(g⊗h) becomes the
/// rate 2/n relative to that dominator. With the rate attached, an extended
/// integral at tolerance ε jumps directly to n ≥ 2k·I(g⊗h)/ε.
pub fn lemma6_abs_certificate(t: &TensorElement) -> WitnessTree<GridFunction> {
    let dom = lemma6_dominator(t);
    let k = rat::int(t.k() as i64);
    let gh = flatten(&TensorElement::simple(dom.g, dom.h));
    let dominator = WitnessTree::leaf(gh.scale(&k));
    let t = t.clone();
    WitnessTree::limit(
        "lemma6-abs",
        dominator,
        move |n| {
            let approx = lemma6_approximation(&t, n).expect("levels from the engine are ≥ 1");
            WitnessTree::leaf(flatten(&approx.abs_approximant))
        },
        None,
        Some(ConvergenceRate::InverseLevel {
            coefficient: rat(2, 1),
        }),
    )
}

/// Exact coefficients of the n-th √-approximation polynomial, built by the
/// recursion p₁ = 0, p_{n+1}(t) = (t − p_n²(t))/2 + p_n(t). The degree
/// doubles per step; use [`sqrt_recursion_values`] when only values are
/// needed at larger n.
#[derive(Debug, Clone, PartialEq)]
pub struct SqrtPolynomial {
    pub n: u32,
    /// coefficients[i] is the coefficient of tⁱ.
    pub coefficients: Vec<Rat>,
}

impl SqrtPolynomial {
    pub fn eval(&self, t: &Rat) -> Rat {
        // Horner
        let mut acc = Rat::zero();
        for c in self.coefficients.iter().rev() {
            acc = acc * t + c;
        }
        acc
    }
}

pub fn sqrt_polynomial(n: u32) -> Result<SqrtPolynomial, Error> {
    if n < 1 {
        return Err(Error::InvalidLevel("polynomial index must be ≥ 1".into()));
    }
    let mut coeffs = vec![Rat::zero()];
    for _ in 1..n {
        coeffs = sqrt_step_coeffs(&coeffs);
    }
    Ok(SqrtPolynomial {
        n,
        coefficients: coeffs,
    })
}

fn sqrt_step_coeffs(p: &[Rat]) -> Vec<Rat> {
    // next = p + (t − p²)/2
    let mut sq = vec![Rat::zero(); 2 * (p.len() - 1) + 1];
    for (i, a) in p.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        for (j, b) in p.iter().enumerate() {
            if !b.is_zero() {
                sq[i + j] += a * b;
            }
        }
    }
    let half = rat(1, 2);
    let mut next = vec![Rat::zero(); sq.len().max(2)];
    for (i, a) in p.iter().enumerate() {
        next[i] += a;
    }
    next[1] += &half;
    for (i, s) in sq.iter().enumerate() {
        next[i] -= s * &half;
    }
    while next.len() > 1 && next.last().is_some_and(Rat::is_zero) {
        next.pop();
    }
    next
}

/// Values p₁(t), …, p_max(t) by the value recursion — no coefficient blowup,
/// just one exact squaring per step.
pub fn sqrt_recursion_values(t: &Rat, n_max: u64) -> Vec<Rat> {
    let half = rat(1, 2);
    let mut out = Vec::with_capacity(n_max as usize);
    let mut v = Rat::zero();
    for _ in 0..n_max {
        out.push(v.clone());
        v = (t - &v * &v) * &half + v;
    }
    out
}

/// p_n(t) alone.
pub fn sqrt_recursion_value(t: &Rat, n: u64) -> Rat {
    sqrt_recursion_values(t, n).pop().unwrap_or_else(Rat::zero)
}

// ---------------------------------------------------------------------------
// Deep √-recursion checks on dyadic rationals
// ---------------------------------------------------------------------------
//
// At depth 20 the values p_n(t) carry denominators of ~2^(2^20): one more
// doubling per step. Plain `Rat` arithmetic reduces after every operation,
// and reducing a million-bit odd numerator against a power-of-two denominator
// degenerates into a quadratic binary-gcd walk. The grid points of interest
// are dyadic (denominator a power of two), so the recursion is run on an
// explicit `numerator × 2^-exponent` pair instead: one big squaring per step,
// shifts and compares for everything else, no reduction anywhere.

/// log₂ of the denominator when it is a power of two.
fn dyadic_exponent(r: &Rat) -> Option<u64> {
    let den = r.denom();
    if den.is_zero() || den.is_negative() {
        return None;
    }
    let bits = den.bits();
    if den == &(num::BigInt::from(1) << (bits - 1) as usize) {
        Some(bits - 1)
    } else {
        None
    }
}

fn require_dyadic(t: &Rat) -> Result<(num::BigInt, u64), Error> {
    match dyadic_exponent(t) {
        Some(e) => Ok((t.numer().clone(), e)),
        None => Err(Error::MalformedInput(format!(
            "deep √-recursion checks need a dyadic rational, got denominator {}",
            t.denom()
        ))),
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SqrtChainChecks {
    /// 0 ≤ p_n(t) for all checked n.
    pub nonnegative: bool,
    /// p_n(t) ≤ p_{n+1}(t) for n ≤ depth.
    pub monotone: bool,
    /// p_n(t)² ≤ t for all checked n.
    pub dominated: bool,
}

impl SqrtChainChecks {
    pub fn all_hold(&self) -> bool {
        self.nonnegative && self.monotone && self.dominated
    }
}

/// Exact chain checks 0 ≤ p_n(t) ≤ p_{n+1}(t) and p_n(t)² ≤ t for
/// n = 1, …, depth, for dyadic t ∈ [0, 1].
pub fn sqrt_chain_checks_dyadic(t: &Rat, depth: u64) -> Result<SqrtChainChecks, Error> {
    let (a, k) = require_dyadic(t)?;
    if a.is_negative() {
        return Err(Error::MalformedInput("the recursion needs t ≥ 0".into()));
    }
    let mut checks = SqrtChainChecks {
        nonnegative: true,
        monotone: true,
        dominated: true,
    };
    // p_n(t) = p / 2^e, starting at p₁ = 0 with e = k so the step below
    // stays integral.
    let mut p = num::BigInt::from(0);
    let mut e: u64 = k;
    for _ in 1..=depth {
        let p_sq = &p * &p;
        if p.is_negative() {
            checks.nonnegative = false;
        }
        // p² ≤ t  ⟺  p² ≤ a·2^(2e−k)
        if p_sq > (&a << (2 * e - k) as usize) {
            checks.dominated = false;
        }
        // step: p' = a·2^(2e−k) − p² + p·2^(e+1),  e' = 2e + 1
        let next_p = (&a << (2 * e - k) as usize) - &p_sq + (&p << (e + 1) as usize);
        let next_e = 2 * e + 1;
        // p/2^e ≤ p'/2^e'  ⟺  p·2^(e'−e) ≤ p'
        if (&p << (next_e - e) as usize) > next_p {
            checks.monotone = false;
        }
        p = next_p;
        e = next_e;
    }
    Ok(checks)
}

/// Exact check `|p_depth(t²) − |t|| ≤ bound` for dyadic t, together with the
/// achieved deviation rounded down to millionths for reporting.
pub fn sqrt_envelope_deviation_dyadic(
    t: &Rat,
    depth: u64,
    bound: &Rat,
) -> Result<(bool, Rat), Error> {
    let (c_raw, k) = require_dyadic(t)?;
    let c = if c_raw.is_negative() { -c_raw } else { c_raw };
    // run the recursion at s = t² = c²/2^(2k)
    let a = &c * &c;
    let sk = 2 * k;
    let mut p = num::BigInt::from(0);
    let mut e: u64 = sk;
    for _ in 1..depth {
        let p_sq = &p * &p;
        p = (&a << (2 * e - sk) as usize) - p_sq + (&p << (e + 1) as usize);
        e = 2 * e + 1;
    }
    // deviation |p/2^e − c/2^k| = |p − c·2^(e−k)| / 2^e
    let dev_num = {
        let d = &p - (&c << (e - k) as usize);
        if d.is_negative() {
            -d
        } else {
            d
        }
    };
    // dev ≤ bound (= bn/bd)  ⟺  dev_num·bd ≤ bn·2^e
    let within = &dev_num * bound.denom() <= (bound.numer() << e as usize);
    let millionths = (&dev_num * num::BigInt::from(1_000_000)) >> e as usize;
    let approx = Rat::new(millionths, 1_000_000.into());
    Ok((within, approx))
}

/// Certificate that |f| is a dominated limit of algebra elements: members
/// are λ·p_n(f²/λ²), dominated by λ·(support unit). Requires |f| ≤ λ
/// pointwise (checked exactly on the representation). No closed-form rate is
/// attached — convergence is quadratic near |f| = λ but only O(1/n) in
/// general — so evaluation uses the Cauchy path.
pub fn abs_certificate<E>(f: &E, lambda: &Rat) -> Result<WitnessTree<E>, Error>
where
    E: AlgebraElement + 'static,
{
    if !lambda.is_positive() {
        return Err(Error::InvalidBound(format!(
            "bound λ = {lambda} must be positive"
        )));
    }
    let unit = f.scaled_support_unit(lambda);
    if !f.abs().try_pointwise_leq(&unit)? {
        return Err(Error::InvalidBound(format!(
            "λ = {lambda} does not dominate |f|"
        )));
    }
    let lambda_sq = lambda * lambda;
    let lambda = lambda.clone();
    let f = f.clone();
    Ok(WitnessTree::limit(
        "sqrt-abs",
        WitnessTree::leaf(unit),
        move |n| {
            let member = f.map_values(&|v| {
                let s = (v * v) / &lambda_sq;
                &lambda * sqrt_recursion_value(&s, n)
            });
            WitnessTree::leaf(member)
        },
        None,
        None,
    ))
}
