//! Exact rational functions on a finite index set.
//!
//! This is the brute-force oracle world: every question about it (spans,
//! dominators, integrals) is decidable by finite exact computation, so the
//! step-function and grid machinery can be cross-checked against it. The
//! dominated-pointwise-limit operator `P` degenerates here — pointwise
//! convergence on a finite set is stationary-in-the-limit — which is exactly
//! what makes membership decidable: `f` lies in `P(span m)` iff `f` is in the
//! span and a dominator `f₀ ≥ |f|` exists in the span, an exact linear
//! feasibility question.

use num::{One, Signed, Zero};

use crate::error::Error;
use crate::feasibility::{self, Constraint};
use crate::rat::{rat, Rat};
use crate::riesz::{AlgebraElement, DaniellIntegral, PointwiseEval, RieszElement};

/// A function on `{0, …, n−1}` with exact rational values.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct FiniteFunction {
    values: Vec<Rat>,
}

impl FiniteFunction {
    pub fn new(values: Vec<Rat>) -> Result<Self, Error> {
        if values.is_empty() {
            return Err(Error::MalformedInput(
                "finite domain must have at least one point".into(),
            ));
        }
        Ok(FiniteFunction { values })
    }

    pub fn from_ints(values: &[i64]) -> Self {
        FiniteFunction {
            values: values.iter().map(|&v| Rat::from_integer(v.into())).collect(),
        }
    }

    pub fn zeros(len: usize) -> Self {
        FiniteFunction {
            values: vec![Rat::zero(); len.max(1)],
        }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn values(&self) -> &[Rat] {
        &self.values
    }

    fn check_len(&self, other: &Self) -> Result<(), Error> {
        if self.len() != other.len() {
            return Err(Error::DomainMismatch(format!(
                "finite domains of size {} and {}",
                self.len(),
                other.len()
            )));
        }
        Ok(())
    }
}

impl RieszElement for FiniteFunction {
    fn try_add(&self, other: &Self) -> Result<Self, Error> {
        self.check_len(other)?;
        Ok(FiniteFunction {
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    fn scale(&self, r: &Rat) -> Self {
        FiniteFunction {
            values: self.values.iter().map(|v| v * r).collect(),
        }
    }

    fn abs(&self) -> Self {
        FiniteFunction {
            values: self.values.iter().map(crate::rat::abs).collect(),
        }
    }

    fn try_pointwise_leq(&self, other: &Self) -> Result<bool, Error> {
        self.check_len(other)?;
        Ok(self.values.iter().zip(&other.values).all(|(a, b)| a <= b))
    }

    fn zero_like(&self) -> Self {
        FiniteFunction::zeros(self.len())
    }
}

impl PointwiseEval for FiniteFunction {
    type Point = usize;

    fn value_at(&self, p: &usize) -> Result<Rat, Error> {
        self.values
            .get(*p)
            .cloned()
            .ok_or_else(|| Error::DomainMismatch(format!("index {p} on a {}-point domain", self.len())))
    }
}

impl AlgebraElement for FiniteFunction {
    fn map_values(&self, f: &dyn Fn(&Rat) -> Rat) -> Self {
        FiniteFunction {
            values: self.values.iter().map(f).collect(),
        }
    }
}

/// The weighted sum `f ↦ Σ wᵢ·f(i)`. Nonnegative weights make all four
/// integral axioms hold; continuity is automatic on a finite domain.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightedIntegral {
    weights: Vec<Rat>,
}

impl WeightedIntegral {
    pub fn new(weights: Vec<Rat>) -> Result<Self, Error> {
        if weights.is_empty() {
            return Err(Error::MalformedInput("empty weight vector".into()));
        }
        if let Some(w) = weights.iter().find(|w| w.is_negative()) {
            return Err(Error::MalformedInput(format!(
                "negative weight {w} — use fixture_unchecked for counterexample fixtures"
            )));
        }
        Ok(WeightedIntegral { weights })
    }

    /// Bypasses the nonnegativity check. Exists only so the axiom harness can
    /// be pointed at a broken "integral" and shown to catch it.
    pub fn fixture_unchecked(weights: Vec<Rat>) -> Self {
        WeightedIntegral { weights }
    }

    pub fn weights(&self) -> &[Rat] {
        &self.weights
    }

    pub fn domain_size(&self) -> usize {
        self.weights.len()
    }
}

impl DaniellIntegral for WeightedIntegral {
    type Element = FiniteFunction;

    fn integrate(&self, f: &FiniteFunction) -> Result<Rat, Error> {
        if f.len() != self.weights.len() {
            return Err(Error::DomainMismatch(format!(
                "integral over {} points applied to a {}-point function",
                self.weights.len(),
                f.len()
            )));
        }
        Ok(self
            .weights
            .iter()
            .zip(f.values())
            .map(|(w, v)| w * v)
            .fold(Rat::zero(), |acc, t| acc + t))
    }

    fn descriptor(&self) -> String {
        let ws: Vec<String> = self.weights.iter().map(crate::rat::format_rat).collect();
        format!("weighted[{}]", ws.join(","))
    }
}

/// A linearly independent family spanning a subspace of the n-point function
/// space.
#[derive(Debug, Clone)]
pub struct SubspaceBasis {
    domain_size: usize,
    basis: Vec<FiniteFunction>,
}

impl SubspaceBasis {
    pub fn new(domain_size: usize, basis: Vec<FiniteFunction>) -> Result<Self, Error> {
        if domain_size == 0 {
            return Err(Error::MalformedInput("empty domain".into()));
        }
        for b in &basis {
            if b.len() != domain_size {
                return Err(Error::DomainMismatch(format!(
                    "basis vector of length {} on a {domain_size}-point domain",
                    b.len()
                )));
            }
        }
        let rows: Vec<Vec<Rat>> = basis.iter().map(|b| b.values().to_vec()).collect();
        if rank(rows) != basis.len() {
            return Err(Error::MalformedInput(
                "basis vectors are linearly dependent".into(),
            ));
        }
        Ok(SubspaceBasis { domain_size, basis })
    }

    pub fn domain_size(&self) -> usize {
        self.domain_size
    }

    pub fn vectors(&self) -> &[FiniteFunction] {
        &self.basis
    }

    /// Σ coeffs[j]·basis[j].
    pub fn combine(&self, coeffs: &[Rat]) -> Result<FiniteFunction, Error> {
        if coeffs.len() != self.basis.len() {
            return Err(Error::DomainMismatch(format!(
                "{} coefficients against a basis of {}",
                coeffs.len(),
                self.basis.len()
            )));
        }
        let mut acc = FiniteFunction::zeros(self.domain_size);
        for (c, b) in coeffs.iter().zip(&self.basis) {
            acc = acc.try_add(&b.scale(c))?;
        }
        Ok(acc)
    }

    /// Coordinates of `f` in this basis, or `None` when `f` is outside the
    /// span.
    pub fn coordinates(&self, f: &FiniteFunction) -> Option<Vec<Rat>> {
        solve_exact(&self.basis, f)
    }
}

/// Certificate that `f ∈ P(span m)`: coordinates of `f` itself plus the
/// coordinates of a dominator `f₀` in the same basis with `f₀ ≥ |f|`
/// pointwise. Stored as coefficients so the witness can be re-checked by
/// independent reconstruction.
#[derive(Debug, Clone, PartialEq)]
pub struct DominatorWitness {
    pub coefficients: Vec<Rat>,
    pub dominator_coefficients: Vec<Rat>,
}

/// Decides `f ∈ P(span m)` over the finite domain.
///
/// On a finite set pointwise limits leave no room to escape a closed
/// subspace, so membership reduces to: `f` in the span, and the system
/// `{f₀ ∈ span m, f₀(z) ≥ |f(z)| ∀z}` feasible. The latter is decided by
/// exact Fourier–Motzkin elimination; infeasibility is the `None` return,
/// not an error.
pub fn p_closure_membership(
    m: &SubspaceBasis,
    f: &FiniteFunction,
) -> Result<Option<DominatorWitness>, Error> {
    if f.len() != m.domain_size() {
        return Err(Error::DomainMismatch(format!(
            "{}-point function against a {}-point subspace",
            f.len(),
            m.domain_size()
        )));
    }
    let coefficients = match m.coordinates(f) {
        Some(c) => c,
        None => return Ok(None),
    };
    // One inequality per domain point: Σ_j c_j·m_j(z) ≥ |f(z)|.
    let abs_f = f.abs();
    let constraints: Vec<Constraint> = (0..m.domain_size())
        .map(|z| {
            let coeffs: Vec<Rat> = m.vectors().iter().map(|b| b.values()[z].clone()).collect();
            Constraint::new(coeffs, abs_f.values()[z].clone())
        })
        .collect();
    let dominator_coefficients = match feasibility::find_feasible(m.vectors().len(), &constraints) {
        Some(c) => c,
        None => return Ok(None),
    };
    debug_assert!({
        let dom = m.combine(&dominator_coefficients)?;
        abs_f.try_pointwise_leq(&dom)?
    });
    Ok(Some(DominatorWitness {
        coefficients,
        dominator_coefficients,
    }))
}

/// Samples the Riesz closure of `span m` by closing the basis under `+`,
/// rational scaling and `|·|` for `depth` rounds, truncated to `budget`
/// distinct elements. Every returned element is in the closure by
/// construction.
pub fn riesz_closure_samples(m: &SubspaceBasis, depth: u32, budget: usize) -> Vec<FiniteFunction> {
    let scalars = [rat(-1, 1), rat(1, 2), rat(2, 1)];
    let mut corpus: Vec<FiniteFunction> = Vec::new();
    let mut seen = std::collections::BTreeSet::new();
    let push = |corpus: &mut Vec<FiniteFunction>,
                    seen: &mut std::collections::BTreeSet<FiniteFunction>,
                    e: FiniteFunction| {
        if corpus.len() < budget && seen.insert(e.clone()) {
            corpus.push(e);
        }
    };
    for b in m.vectors() {
        push(&mut corpus, &mut seen, b.clone());
        for s in &scalars {
            push(&mut corpus, &mut seen, b.scale(s));
        }
    }
    for _ in 0..depth {
        let frontier = corpus.clone();
        for e in &frontier {
            push(&mut corpus, &mut seen, e.abs());
            for s in &scalars {
                push(&mut corpus, &mut seen, e.scale(s));
            }
        }
        for i in 0..frontier.len() {
            for j in i..frontier.len() {
                if let Ok(sum) = frontier[i].try_add(&frontier[j]) {
                    push(&mut corpus, &mut seen, sum);
                }
            }
        }
        if corpus.len() >= budget {
            break;
        }
    }
    corpus
}

/// Decreasing chain `f_n = (1/n)·𝟙` with pointwise infimum 0; the integral
/// values shrink like 1/n without ever hitting exact zero.
pub fn scaled_ones_chain(len: usize) -> crate::axioms::Chain<FiniteFunction> {
    crate::axioms::Chain::new("(1/n)*ones", move |n| FiniteFunction {
        values: vec![Rat::new(1.into(), n.into()); len],
    })
}

/// Decreasing chain that empties its support one point per step and reaches
/// the exact zero function at n = len+1.
pub fn truncating_chain(len: usize) -> crate::axioms::Chain<FiniteFunction> {
    crate::axioms::Chain::new("tail indicator", move |n| {
        let values: Vec<Rat> = (0..len)
            .map(|i| {
                if (i as u64) + 1 >= n {
                    Rat::one()
                } else {
                    Rat::zero()
                }
            })
            .collect();
        FiniteFunction { values }
    })
}

/// Rank of a rational matrix by Gaussian elimination.
fn rank(mut rows: Vec<Vec<Rat>>) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let cols = rows[0].len();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let pivot = rows[r][c].clone();
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let factor = &rows[i][c] / &pivot;
                for j in c..cols {
                    let t = &rows[r][j] * &factor;
                    rows[i][j] = &rows[i][j] - t;
                }
            }
        }
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    r
}

/// Solves Σ c_j·basis_j = f exactly, `None` when inconsistent. The basis is
/// independent, so a consistent system has a unique solution.
fn solve_exact(basis: &[FiniteFunction], f: &FiniteFunction) -> Option<Vec<Rat>> {
    let n = f.len();
    let d = basis.len();
    if d == 0 {
        return if f.values().iter().all(|v| v.is_zero()) {
            Some(Vec::new())
        } else {
            None
        };
    }
    // Augmented system rows indexed by domain point: [basis_0(z) … basis_{d-1}(z) | f(z)].
    let mut rows: Vec<Vec<Rat>> = (0..n)
        .map(|z| {
            let mut row: Vec<Rat> = basis.iter().map(|b| b.values()[z].clone()).collect();
            row.push(f.values()[z].clone());
            row
        })
        .collect();
    let mut pivot_cols: Vec<usize> = Vec::new();
    let mut r = 0;
    for c in 0..d {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let pivot = rows[r][c].clone();
        for j in c..=d {
            rows[r][j] = &rows[r][j] / &pivot;
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let factor = rows[i][c].clone();
                for j in c..=d {
                    let t = &rows[r][j] * &factor;
                    rows[i][j] = &rows[i][j] - t;
                }
            }
        }
        pivot_cols.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    // Inconsistent when a zero row has nonzero rhs.
    for row in rows.iter().skip(r) {
        if row[..d].iter().all(|v| v.is_zero()) && !row[d].is_zero() {
            return None;
        }
    }
    if pivot_cols.len() < d {
        // Independence makes this unreachable, but stay defensive for the
        // d > n case, which new() rejects anyway.
        return None;
    }
    let mut coeffs = vec![Rat::zero(); d];
    for (row_idx, &c) in pivot_cols.iter().enumerate() {
        coeffs[c] = rows[row_idx][d].clone();
    }
    Some(coeffs)
}
