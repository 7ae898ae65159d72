//! Exact linear feasibility by Fourier–Motzkin elimination.
//!
//! Decides whether a system `A·x ≥ b` of rational inequalities has a solution
//! and, when it does, extracts one by back-substitution through the
//! elimination stack. Variables are eliminated in ascending index order; the
//! systems this crate produces are tiny (≤ 8 constraints, ≤ 4 variables), so
//! no pivoting heuristics are needed and the doubly-exponential worst case is
//! irrelevant.

use num::{Signed, Zero};

use crate::rat::Rat;

/// One inequality `Σ coeffs[j]·x_j ≥ rhs`.
#[derive(Debug, Clone)]
pub struct Constraint {
    pub coeffs: Vec<Rat>,
    pub rhs: Rat,
}

impl Constraint {
    pub fn new(coeffs: Vec<Rat>, rhs: Rat) -> Self {
        Constraint { coeffs, rhs }
    }

    fn is_constant(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// A constant row `0 ≥ rhs` is violated when rhs > 0.
    fn constant_violated(&self) -> bool {
        self.is_constant() && self.rhs.is_positive()
    }
}

/// Searches for any `x` with `A·x ≥ b`. Returns `None` when the system is
/// infeasible.
pub fn find_feasible(vars: usize, constraints: &[Constraint]) -> Option<Vec<Rat>> {
    debug_assert!(constraints.iter().all(|c| c.coeffs.len() == vars));

    // Forward pass: eliminate x_0, x_1, ... keeping each stage's rows for
    // back-substitution.
    let mut stages: Vec<Vec<Constraint>> = Vec::with_capacity(vars);
    let mut current: Vec<Constraint> = constraints.to_vec();
    for var in 0..vars {
        if current.iter().any(Constraint::constant_violated) {
            return None;
        }
        stages.push(current.clone());
        current = eliminate(&current, var);
    }
    if current.iter().any(Constraint::constant_violated) {
        return None;
    }

    // Backward pass: choose each variable inside its [lower, upper] window.
    let mut solution = vec![Rat::zero(); vars];
    for var in (0..vars).rev() {
        let (lower, upper) = bounds_at(&stages[var], var, &solution);
        if let (Some(lo), Some(hi)) = (&lower, &upper) {
            debug_assert!(lo <= hi, "elimination left an empty window");
        }
        solution[var] = match (lower, upper) {
            (Some(lo), _) => lo,
            (None, Some(hi)) => hi,
            (None, None) => Rat::zero(),
        };
    }
    debug_assert!(satisfies(constraints, &solution));
    Some(solution)
}

/// True when `x` satisfies every constraint; exposed so witnesses can be
/// re-checked independently of the solver.
pub fn satisfies(constraints: &[Constraint], x: &[Rat]) -> bool {
    constraints.iter().all(|c| {
        let lhs: Rat = c
            .coeffs
            .iter()
            .zip(x)
            .map(|(a, v)| a * v)
            .fold(Rat::zero(), |acc, t| acc + t);
        lhs >= c.rhs
    })
}

/// One elimination step. Rows are split by the sign of the coefficient on
/// `var`; each (lower, upper) pair combines into a row without `var`:
/// from `aL·x_v ≥ bL − rL` (aL > 0) and `aU·x_v ≥ bU − rU` (aU < 0) we get
/// `Σ_j (aL·aU_j − aU·aL_j)·x_j ≥ aL·bU − aU·bL` over the remaining j.
fn eliminate(rows: &[Constraint], var: usize) -> Vec<Constraint> {
    let mut lower: Vec<&Constraint> = Vec::new();
    let mut upper: Vec<&Constraint> = Vec::new();
    let mut out: Vec<Constraint> = Vec::new();
    for row in rows {
        let a = &row.coeffs[var];
        if a.is_zero() {
            out.push(row.clone());
        } else if a.is_positive() {
            lower.push(row);
        } else {
            upper.push(row);
        }
    }
    for l in &lower {
        for u in &upper {
            let al = &l.coeffs[var];
            let au = &u.coeffs[var];
            let mut coeffs = vec![Rat::zero(); l.coeffs.len()];
            for (j, c) in coeffs.iter_mut().enumerate() {
                if j == var {
                    continue;
                }
                *c = al * &u.coeffs[j] - au * &l.coeffs[j];
            }
            let rhs = al * &u.rhs - au * &l.rhs;
            out.push(Constraint::new(coeffs, rhs));
        }
    }
    out
}

/// Tightest numeric window for `var` given values of later variables.
fn bounds_at(rows: &[Constraint], var: usize, solution: &[Rat]) -> (Option<Rat>, Option<Rat>) {
    let mut lower: Option<Rat> = None;
    let mut upper: Option<Rat> = None;
    for row in rows {
        let a = &row.coeffs[var];
        if a.is_zero() {
            continue;
        }
        let mut rest = Rat::zero();
        for j in var + 1..row.coeffs.len() {
            rest += &row.coeffs[j] * &solution[j];
        }
        let bound = (&row.rhs - rest) / a;
        if a.is_positive() {
            lower = Some(match lower {
                Some(lo) if lo >= bound => lo,
                _ => bound,
            });
        } else {
            upper = Some(match upper {
                Some(hi) if hi <= bound => hi,
                _ => bound,
            });
        }
    }
    (lower, upper)
}
