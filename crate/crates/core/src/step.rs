//! 1-D step functions on half-open rational intervals.
//!
//! A `StepFunction1D` is piecewise constant on `[b_j, b_{j+1})` cells and zero
//! outside `[b_0, b_m)`. Half-open cells keep pointwise sums and products
//! inside the class with no boundary double counting, and the canonical form
//! (strictly increasing breakpoints, no adjacent equal plateaus, no zero
//! plateaus at either end) is unique, so exact identities reduce to
//! structural equality.

use num::{One, Signed, Zero};

use crate::axioms::Chain;
use crate::error::Error;
use crate::rat::{self, rat, Rat};
use crate::riesz::{AlgebraElement, DaniellIntegral, PointwiseEval, RieszElement};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct StepFunction1D {
    breakpoints: Vec<Rat>,
    values: Vec<Rat>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PointwiseOp {
    Add,
    Sup,
    Inf,
    Mul,
}

impl PointwiseOp {
    pub(crate) fn apply(self, a: &Rat, b: &Rat) -> Rat {
        match self {
            PointwiseOp::Add => a + b,
            PointwiseOp::Sup => rat::max(a, b),
            PointwiseOp::Inf => rat::min(a, b),
            PointwiseOp::Mul => a * b,
        }
    }
}

impl StepFunction1D {
    /// The zero function: empty breakpoint list.
    pub fn zero() -> Self {
        StepFunction1D {
            breakpoints: Vec::new(),
            values: Vec::new(),
        }
    }

    /// Canonicalizes a raw breakpoint/value table. Breakpoints must be
    /// nondecreasing; zero-width cells are dropped, equal neighbours merged,
    /// zero plateaus trimmed from both ends.
    pub fn new(breakpoints: Vec<Rat>, values: Vec<Rat>) -> Result<Self, Error> {
        if breakpoints.is_empty() && values.is_empty() {
            return Ok(StepFunction1D::zero());
        }
        if breakpoints.len() != values.len() + 1 {
            return Err(Error::MalformedInput(format!(
                "{} breakpoints require {} plateau values, got {}",
                breakpoints.len(),
                breakpoints.len().saturating_sub(1),
                values.len()
            )));
        }
        for w in breakpoints.windows(2) {
            if w[0] > w[1] {
                return Err(Error::MalformedInput(format!(
                    "breakpoints decrease: {} > {}",
                    w[0], w[1]
                )));
            }
        }
        // Contiguous nonempty cells, merging equal neighbours as they come.
        let mut cells: Vec<(Rat, Rat, Rat)> = Vec::new(); // (start, end, value)
        for (i, v) in values.into_iter().enumerate() {
            let (start, end) = (&breakpoints[i], &breakpoints[i + 1]);
            if start == end {
                continue;
            }
            match cells.last_mut() {
                Some((_, last_end, last_val)) if last_end == start && *last_val == v => {
                    *last_end = end.clone();
                }
                _ => cells.push((start.clone(), end.clone(), v)),
            }
        }
        while cells.first().is_some_and(|(_, _, v)| v.is_zero()) {
            cells.remove(0);
        }
        while cells.last().is_some_and(|(_, _, v)| v.is_zero()) {
            cells.pop();
        }
        if cells.is_empty() {
            return Ok(StepFunction1D::zero());
        }
        let mut bp = Vec::with_capacity(cells.len() + 1);
        let mut vals = Vec::with_capacity(cells.len());
        bp.push(cells[0].0.clone());
        for (_, end, v) in cells {
            bp.push(end);
            vals.push(v);
        }
        Ok(StepFunction1D {
            breakpoints: bp,
            values: vals,
        })
    }

    /// `c·1_{[a,b)}`.
    pub fn indicator(a: Rat, b: Rat, value: Rat) -> Result<Self, Error> {
        StepFunction1D::new(vec![a, b], vec![value])
    }

    pub fn breakpoints(&self) -> &[Rat] {
        &self.breakpoints
    }

    pub fn plateau_values(&self) -> &[Rat] {
        &self.values
    }

    pub fn is_zero(&self) -> bool {
        self.values.is_empty()
    }

    /// Exact value at `x`; zero outside the support interval.
    pub fn eval(&self, x: &Rat) -> Rat {
        if self.breakpoints.is_empty() {
            return Rat::zero();
        }
        if x < &self.breakpoints[0] || x >= self.breakpoints.last().unwrap() {
            return Rat::zero();
        }
        // binary search for the cell with b_j <= x < b_{j+1}
        let j = match self.breakpoints.binary_search(x) {
            Ok(i) => i,
            Err(i) => i - 1,
        };
        self.values[j].clone()
    }

    /// Pointwise combination on the common refinement of both partitions.
    pub fn combine(&self, other: &Self, op: PointwiseOp) -> Self {
        let grid = refinement(&self.breakpoints, &other.breakpoints);
        if grid.len() < 2 {
            return StepFunction1D::zero();
        }
        let values: Vec<Rat> = grid
            .windows(2)
            .map(|w| op.apply(&self.eval(&w[0]), &other.eval(&w[0])))
            .collect();
        StepFunction1D::new(grid, values).expect("refinement grid is increasing")
    }

    pub fn add(&self, other: &Self) -> Self {
        self.combine(other, PointwiseOp::Add)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-Rat::one()))
    }

    pub fn sup(&self, other: &Self) -> Self {
        self.combine(other, PointwiseOp::Sup)
    }

    pub fn inf(&self, other: &Self) -> Self {
        self.combine(other, PointwiseOp::Inf)
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.combine(other, PointwiseOp::Mul)
    }

    /// `max(f, 0)` pointwise.
    pub fn pos_part(&self) -> Self {
        self.map_values(&|v| rat::max(v, &Rat::zero()))
    }

    /// `max(−f, 0)` pointwise.
    pub fn neg_part(&self) -> Self {
        self.map_values(&|v| rat::max(&-v.clone(), &Rat::zero()))
    }

    /// `1` on `{f ≠ 0}`, else `0`.
    pub fn support_indicator(&self) -> Self {
        self.map_values(&|v| if v.is_zero() { Rat::zero() } else { Rat::one() })
    }

    /// Largest plateau value (0 for the zero function, which has an implicit
    /// zero plateau everywhere).
    pub fn max_value(&self) -> Rat {
        self.values
            .iter()
            .fold(Rat::zero(), |acc, v| rat::max(&acc, v))
    }
}

impl RieszElement for StepFunction1D {
    fn try_add(&self, other: &Self) -> Result<Self, Error> {
        Ok(self.add(other))
    }

    fn scale(&self, r: &Rat) -> Self {
        if r.is_zero() {
            return StepFunction1D::zero();
        }
        StepFunction1D::new(
            self.breakpoints.clone(),
            self.values.iter().map(|v| v * r).collect(),
        )
        .expect("scaling preserves the breakpoint grid")
    }

    fn abs(&self) -> Self {
        self.map_values(&|v| rat::abs(v))
    }

    fn try_pointwise_leq(&self, other: &Self) -> Result<bool, Error> {
        let grid = refinement(&self.breakpoints, &other.breakpoints);
        Ok(grid
            .windows(2)
            .all(|w| self.eval(&w[0]) <= other.eval(&w[0])))
    }

    fn zero_like(&self) -> Self {
        StepFunction1D::zero()
    }
}

impl PointwiseEval for StepFunction1D {
    type Point = Rat;

    fn value_at(&self, p: &Rat) -> Result<Rat, Error> {
        Ok(self.eval(p))
    }
}

impl AlgebraElement for StepFunction1D {
    /// Applies `f` to every plateau value and re-canonicalizes. The map must
    /// fix 0, otherwise it would not act pointwise on the implicit zero tail.
    fn map_values(&self, f: &dyn Fn(&Rat) -> Rat) -> Self {
        StepFunction1D::new(
            self.breakpoints.clone(),
            self.values.iter().map(f).collect(),
        )
        .expect("mapping preserves the breakpoint grid")
    }
}

/// Sorted union of two breakpoint lists.
pub(crate) fn refinement(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    let mut grid: Vec<Rat> = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let next = match (a.get(i), b.get(j)) {
            (Some(x), Some(y)) => {
                if x <= y {
                    i += 1;
                    if x == y {
                        j += 1;
                    }
                    x.clone()
                } else {
                    j += 1;
                    y.clone()
                }
            }
            (Some(x), None) => {
                i += 1;
                x.clone()
            }
            (None, Some(y)) => {
                j += 1;
                y.clone()
            }
            (None, None) => unreachable!(),
        };
        grid.push(next);
    }
    grid
}

/// Sorted union of many breakpoint lists.
pub(crate) fn refinement_all<'a>(lists: impl IntoIterator<Item = &'a [Rat]>) -> Vec<Rat> {
    let mut grid: Vec<Rat> = Vec::new();
    for l in lists {
        grid = refinement(&grid, l);
    }
    grid
}

/// A nondecreasing piecewise-linear distribution given by its density table:
/// slope `s_j ≥ 0` on `[b_j, b_{j+1})`, zero outside. Interval weights are
/// exact rationals (slope × length); point masses are out of scope, the
/// finite-domain instantiation covers those.
#[derive(Debug, Clone, PartialEq)]
pub struct StieltjesDistribution {
    density: StepFunction1D,
}

impl StieltjesDistribution {
    pub fn new(breakpoints: Vec<Rat>, slopes: Vec<Rat>) -> Result<Self, Error> {
        if let Some(s) = slopes.iter().find(|s| s.is_negative()) {
            return Err(Error::MalformedInput(format!(
                "negative Stieltjes slope {s}: distribution must be nondecreasing"
            )));
        }
        Ok(StieltjesDistribution {
            density: StepFunction1D::new(breakpoints, slopes)?,
        })
    }

    pub fn density(&self) -> &StepFunction1D {
        &self.density
    }

    /// μ([a, b)) = ∫_a^b density.
    pub fn interval_weight(&self, a: &Rat, b: &Rat) -> Rat {
        if a >= b || self.density.is_zero() {
            return Rat::zero();
        }
        let mut total = Rat::zero();
        let bp = &self.density.breakpoints;
        for (j, slope) in self.density.values.iter().enumerate() {
            let lo = rat::max(a, &bp[j]);
            let hi = rat::min(b, &bp[j + 1]);
            if lo < hi {
                total += slope * (hi - lo);
            }
        }
        total
    }
}

/// A concrete elementary integral on the step-function space: interval
/// length (Lebesgue) or a Stieltjes weight table.
#[derive(Debug, Clone, PartialEq)]
pub enum ElementaryIntegral1D {
    Lebesgue,
    Stieltjes(StieltjesDistribution),
}

impl ElementaryIntegral1D {
    pub fn stieltjes(breakpoints: Vec<Rat>, slopes: Vec<Rat>) -> Result<Self, Error> {
        Ok(ElementaryIntegral1D::Stieltjes(StieltjesDistribution::new(
            breakpoints,
            slopes,
        )?))
    }

    /// μ([a, b)).
    pub fn interval_weight(&self, a: &Rat, b: &Rat) -> Rat {
        match self {
            ElementaryIntegral1D::Lebesgue => {
                if a >= b {
                    Rat::zero()
                } else {
                    b - a
                }
            }
            ElementaryIntegral1D::Stieltjes(d) => d.interval_weight(a, b),
        }
    }
}

impl DaniellIntegral for ElementaryIntegral1D {
    type Element = StepFunction1D;

    fn integrate(&self, f: &StepFunction1D) -> Result<Rat, Error> {
        let mut total = Rat::zero();
        for (j, v) in f.values.iter().enumerate() {
            if !v.is_zero() {
                total += v * self.interval_weight(&f.breakpoints[j], &f.breakpoints[j + 1]);
            }
        }
        Ok(total)
    }

    fn descriptor(&self) -> String {
        match self {
            ElementaryIntegral1D::Lebesgue => "lebesgue".into(),
            ElementaryIntegral1D::Stieltjes(d) => {
                let bp: Vec<String> = d.density.breakpoints.iter().map(rat::format_rat).collect();
                let sl: Vec<String> = d.density.values.iter().map(rat::format_rat).collect();
                format!("stieltjes[bp={};slopes={}]", bp.join(","), sl.join(","))
            }
        }
    }
}

/// `f·1_{U(g)}` where `U(g) = {g ≠ 0}`: the limit the sequence below
/// stabilizes to. Defined for arbitrary `f` (positive and negative parts
/// restrict the same way).
pub fn lemma1_closed_form(f: &StepFunction1D, g: &StepFunction1D) -> StepFunction1D {
    f.mul(&g.support_indicator())
}

/// The n-th member `f_n = inf(f, n·|g|)` of the approximating sequence.
/// Requires `f ≥ 0`; split general `f` into positive and negative parts.
pub fn lemma1_sequence(
    f: &StepFunction1D,
    g: &StepFunction1D,
    n: u64,
) -> Result<StepFunction1D, Error> {
    if n < 1 {
        return Err(Error::InvalidLevel("sequence index must be ≥ 1".into()));
    }
    if !f.is_nonnegative() {
        return Err(Error::MalformedInput(
            "lemma1_sequence requires f ≥ 0; split into positive and negative parts".into(),
        ));
    }
    Ok(f.inf(&g.abs().scale(&rat::int_u64(n))))
}

/// Smallest index from which the sequence is stationary:
/// `⌈ max f / min nonzero |g| ⌉` over the overlap where `f > 0` and `g ≠ 0`,
/// and 1 when there is no such overlap. For step functions the sequence
/// reaches the closed form exactly at this index.
pub fn lemma1_stationarity_index(f: &StepFunction1D, g: &StepFunction1D) -> u64 {
    let grid = refinement(&f.breakpoints, &g.breakpoints);
    let mut worst: Option<Rat> = None;
    for w in grid.windows(2) {
        let fv = f.eval(&w[0]);
        let gv = g.eval(&w[0]);
        if fv.is_positive() && !gv.is_zero() {
            let ratio = fv / rat::abs(&gv);
            worst = Some(match worst {
                Some(cur) if cur >= ratio => cur,
                _ => ratio,
            });
        }
    }
    match worst {
        Some(r) => crate::rat::ceil_level(&r, 1).unwrap_or(u64::MAX),
        None => 1,
    }
}

/// Chain `f_n = 1_{[0, 1/n)}`: Lebesgue integral values 1/n never reach exact
/// zero, exercising the tolerance path of the continuity check.
pub fn shrinking_indicator_chain() -> Chain<StepFunction1D> {
    Chain::new("1_[0,1/n)", |n| {
        StepFunction1D::indicator(rat(0, 1), Rat::new(1.into(), n.into()), Rat::one())
            .expect("valid interval")
    })
}

/// Chain that scales a plateau down to exact zero at n = 4, exercising the
/// finite-detection path.
pub fn vanishing_plateau_chain() -> Chain<StepFunction1D> {
    Chain::new("max(0,4-n)*1_[0,1)", |n| {
        let c = rat::int(4i64.saturating_sub(i64::try_from(n).unwrap_or(i64::MAX)).max(0));
        StepFunction1D::indicator(rat(0, 1), rat(1, 1), c).expect("valid interval")
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::int;
    use crate::riesz::derive_lattice_ops;
    use proptest::prelude::*;

    fn step(bp: &[(i64, i64)], vals: &[(i64, i64)]) -> StepFunction1D {
        StepFunction1D::new(
            bp.iter().map(|&(n, d)| rat(n, d)).collect(),
            vals.iter().map(|&(n, d)| rat(n, d)).collect(),
        )
        .unwrap()
    }

    fn unit(a: i64, b: i64) -> StepFunction1D {
        StepFunction1D::indicator(int(a), int(b), int(1)).unwrap()
    }

    #[test]
    fn canonicalize_merges_equal_plateaus() {
        let f = step(&[(0, 1), (1, 1), (2, 1)], &[(1, 1), (1, 1)]);
        assert_eq!(f, unit(0, 2));
    }

    #[test]
    fn canonicalize_normalizes_zero() {
        let f = step(&[(0, 1), (1, 1), (2, 1)], &[(0, 1), (0, 1)]);
        assert_eq!(f, StepFunction1D::zero());
        assert!(f.is_zero());
    }

    #[test]
    fn canonicalize_keeps_canonical_input() {
        let f = step(&[(0, 1), (1, 1), (2, 1)], &[(1, 1), (2, 1)]);
        assert_eq!(f.breakpoints(), &[int(0), int(1), int(2)]);
        assert_eq!(f.plateau_values(), &[int(1), int(2)]);
    }

    #[test]
    fn canonicalize_trims_zero_ends_and_drops_empty_cells() {
        let f = step(
            &[(-1, 1), (0, 1), (0, 1), (1, 1), (2, 1)],
            &[(0, 1), (5, 1), (1, 1), (0, 1)],
        );
        assert_eq!(f.breakpoints(), &[int(0), int(1)]);
        assert_eq!(f.plateau_values(), &[int(1)]);
    }

    #[test]
    fn canonicalize_rejects_decreasing_breakpoints() {
        assert!(StepFunction1D::new(vec![int(1), int(0)], vec![int(1)]).is_err());
    }

    #[test]
    fn combine_examples() {
        assert_eq!(unit(0, 1).add(&unit(1, 2)), unit(0, 2));
        let neg = step(&[(0, 1), (1, 1)], &[(-1, 1)]);
        assert_eq!(neg.abs(), unit(0, 1));
        assert_eq!(unit(0, 2).mul(&unit(1, 3)), unit(1, 2));
    }

    #[test]
    fn sup_inf_examples() {
        let (sup, inf) = derive_lattice_ops(&unit(0, 1), &unit(1, 2)).unwrap();
        assert_eq!(sup, unit(0, 2));
        assert_eq!(inf, StepFunction1D::zero());
    }

    #[test]
    fn interior_zero_plateaus_survive() {
        let f = unit(0, 1).add(&unit(2, 3));
        assert_eq!(f.breakpoints(), &[int(0), int(1), int(2), int(3)]);
        assert_eq!(f.plateau_values(), &[int(1), int(0), int(1)]);
        assert_eq!(f.eval(&rat(3, 2)), int(0));
    }

    #[test]
    fn lebesgue_integral_examples() {
        let leb = ElementaryIntegral1D::Lebesgue;
        assert_eq!(leb.integrate(&unit(0, 1)).unwrap(), int(1));
        assert_eq!(
            leb.integrate(&unit(0, 3).scale(&int(2))).unwrap(),
            int(6)
        );
        let f = step(&[(0, 1), (1, 2), (7, 3)], &[(3, 4), (-2, 5)]);
        assert_eq!(leb.integrate(&f.sub(&f)).unwrap(), int(0));
    }

    #[test]
    fn stieltjes_integral_weights_cells_by_the_density() {
        // density 1/2 on [0,1), 2 on [1,3)
        let st =
            ElementaryIntegral1D::stieltjes(vec![int(0), int(1), int(3)], vec![rat(1, 2), int(2)])
                .unwrap();
        assert_eq!(st.integrate(&unit(0, 1)).unwrap(), rat(1, 2));
        assert_eq!(st.integrate(&unit(0, 2)).unwrap(), rat(5, 2));
        // outside the density support the measure vanishes
        assert_eq!(st.integrate(&unit(4, 9)).unwrap(), int(0));
        assert!(ElementaryIntegral1D::stieltjes(vec![int(0), int(1)], vec![int(-1)]).is_err());
    }

    #[test]
    fn lemma1_overlap_example() {
        let f = unit(0, 2);
        let g = unit(1, 3);
        assert_eq!(lemma1_closed_form(&f, &g), unit(1, 2));
        assert_eq!(lemma1_sequence(&f, &g, 1).unwrap(), unit(1, 2));
        assert_eq!(lemma1_stationarity_index(&f, &g), 1);
    }

    #[test]
    fn lemma1_zero_divisor() {
        let f = unit(0, 2);
        let g = StepFunction1D::zero();
        assert_eq!(lemma1_closed_form(&f, &g), StepFunction1D::zero());
        for n in [1u64, 3, 9] {
            assert_eq!(lemma1_sequence(&f, &g, n).unwrap(), StepFunction1D::zero());
        }
    }

    #[test]
    fn lemma1_slow_stationarity() {
        // f = 2 on [0,1), g = 1/3 on [0,1): f_3 = inf(2, 1) = 1, stationary at 6.
        let f = unit(0, 1).scale(&int(2));
        let g = unit(0, 1).scale(&rat(1, 3));
        assert_eq!(lemma1_sequence(&f, &g, 3).unwrap(), unit(0, 1));
        assert_eq!(lemma1_stationarity_index(&f, &g), 6);
        assert_eq!(lemma1_sequence(&f, &g, 6).unwrap(), f);
        assert_eq!(lemma1_closed_form(&f, &g), f);
    }

    #[test]
    fn lemma1_rejects_signed_f() {
        let f = step(&[(0, 1), (1, 1)], &[(-1, 1)]);
        assert!(lemma1_sequence(&f, &unit(0, 1), 1).is_err());
    }

    prop_compose! {
        fn arb_rat()(num in -8i64..=8, den in 1i64..=8) -> Rat {
            rat(num, den)
        }
    }

    prop_compose! {
        fn arb_step()(raw in prop::collection::vec((-8i64..=8, 1i64..=8), 0..7), vals in prop::collection::vec((-8i64..=8, 1i64..=8), 6)) -> StepFunction1D {
            let mut bps: Vec<Rat> = raw.iter().map(|&(n, d)| rat(n, d)).collect();
            bps.sort();
            bps.dedup();
            if bps.len() < 2 {
                return StepFunction1D::zero();
            }
            let values: Vec<Rat> = vals.iter().take(bps.len() - 1).map(|&(n, d)| rat(n, d)).collect();
            StepFunction1D::new(bps, values).unwrap()
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn combine_agrees_with_pointwise_evaluation(f in arb_step(), g in arb_step(), xs in prop::collection::vec((-10i64..=10, 1i64..=9), 24)) {
            for op in [PointwiseOp::Add, PointwiseOp::Sup, PointwiseOp::Inf, PointwiseOp::Mul] {
                let combined = f.combine(&g, op);
                for &(n, d) in &xs {
                    let x = rat(n, d);
                    prop_assert_eq!(combined.eval(&x), op.apply(&f.eval(&x), &g.eval(&x)));
                }
            }
        }

        #[test]
        fn canonical_form_is_stable(f in arb_step()) {
            let rebuilt = StepFunction1D::new(f.breakpoints().to_vec(), f.plateau_values().to_vec()).unwrap();
            prop_assert_eq!(&rebuilt, &f);
            // canonical invariants
            for w in f.breakpoints().windows(2) {
                prop_assert!(w[0] < w[1]);
            }
            for w in f.plateau_values().windows(2) {
                prop_assert!(w[0] != w[1], "adjacent equal plateaus");
            }
            if let (Some(first), Some(last)) = (f.plateau_values().first(), f.plateau_values().last()) {
                prop_assert!(!first.is_zero() && !last.is_zero());
            }
        }

        #[test]
        fn lemma1_sequence_is_monotone_and_stationary(f0 in arb_step(), g in arb_step()) {
            let f = f0.abs();
            let closed = lemma1_closed_form(&f, &g);
            let nstar = lemma1_stationarity_index(&f, &g);
            prop_assume!(nstar < 1000);
            let mut prev: Option<StepFunction1D> = None;
            for n in 1..=nstar {
                let fnth = lemma1_sequence(&f, &g, n).unwrap();
                prop_assert!(fnth.try_pointwise_leq(&closed).unwrap());
                if let Some(p) = prev {
                    prop_assert!(p.try_pointwise_leq(&fnth).unwrap());
                }
                prev = Some(fnth);
            }
            prop_assert_eq!(prev.unwrap(), closed);
        }
    }
}
