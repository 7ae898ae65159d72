//! Sections, partial integrals and the product integral.
//!
//! For a grid function f, the section f^x is the 1-D step function obtained
//! by freezing the x coordinate, the partial integral Kf is x ↦ K(f^x), and
//! the product integral is I(f) = J(Kf). Both iterated orders are always
//! computed through independently coded paths and compared; since all
//! arithmetic is exact rational, any discrepancy is an arithmetic bug and is
//! reported as a hard error rather than tolerated.

use num::Zero;

use crate::error::Error;
use crate::rat::Rat;
use crate::riesz::DaniellIntegral;
use crate::step::{ElementaryIntegral1D, StepFunction1D};
use crate::tensor::{flatten, GridFunction, TensorElement};

/// Which axis a 1-D operation acts along.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axis {
    X,
    Y,
}

/// The section of `f` at the fixed coordinate `at` on `axis`: freezing x
/// gives a step function of y and vice versa. Points outside the support
/// rectangle give the zero function.
pub fn section(f: &GridFunction, axis: Axis, at: &Rat) -> StepFunction1D {
    let (frozen_breaks, remaining_breaks) = match axis {
        Axis::X => (f.x_breakpoints(), f.y_breakpoints()),
        Axis::Y => (f.y_breakpoints(), f.x_breakpoints()),
    };
    if frozen_breaks.len() < 2
        || at < &frozen_breaks[0]
        || at >= frozen_breaks.last().unwrap()
    {
        return StepFunction1D::zero();
    }
    let values: Vec<Rat> = remaining_breaks
        .windows(2)
        .map(|w| match axis {
            Axis::X => f.eval(at, &w[0]),
            Axis::Y => f.eval(&w[0], at),
        })
        .collect();
    StepFunction1D::new(remaining_breaks.to_vec(), values).expect("grid breakpoints are increasing")
}

/// Integrates out `integrate_out`, leaving a step function of the other
/// variable: `partial_integral(K, f, Y)` is the map x ↦ K(f^x). Computed
/// exactly as the matrix–vector product of cell values with 1-D cell
/// weights; the result is elementary again, which is the membership content
/// of the iterated-integral domain.
pub fn partial_integral(
    k: &ElementaryIntegral1D,
    f: &GridFunction,
    integrate_out: Axis,
) -> StepFunction1D {
    if f.is_zero() {
        return StepFunction1D::zero();
    }
    match integrate_out {
        Axis::Y => {
            let weights: Vec<Rat> = f
                .y_breakpoints()
                .windows(2)
                .map(|w| k.interval_weight(&w[0], &w[1]))
                .collect();
            let values: Vec<Rat> = f
                .cell_values()
                .iter()
                .map(|row| dot(row, &weights))
                .collect();
            StepFunction1D::new(f.x_breakpoints().to_vec(), values)
                .expect("grid breakpoints are increasing")
        }
        Axis::X => {
            let weights: Vec<Rat> = f
                .x_breakpoints()
                .windows(2)
                .map(|w| k.interval_weight(&w[0], &w[1]))
                .collect();
            let cols = f.y_breakpoints().len() - 1;
            let values: Vec<Rat> = (0..cols)
                .map(|j| {
                    f.cell_values()
                        .iter()
                        .zip(&weights)
                        .map(|(row, w)| &row[j] * w)
                        .fold(Rat::zero(), |acc, t| acc + t)
                })
                .collect();
            StepFunction1D::new(f.y_breakpoints().to_vec(), values)
                .expect("grid breakpoints are increasing")
        }
    }
}

fn dot(a: &[Rat], b: &[Rat]) -> Rat {
    a.iter()
        .zip(b)
        .map(|(x, y)| x * y)
        .fold(Rat::zero(), |acc, t| acc + t)
}

/// The product integral I = J⊗K on grid functions.
#[derive(Debug, Clone)]
pub struct ProductIntegral {
    pub j: ElementaryIntegral1D,
    pub k: ElementaryIntegral1D,
}

impl ProductIntegral {
    pub fn new(j: ElementaryIntegral1D, k: ElementaryIntegral1D) -> Self {
        ProductIntegral { j, k }
    }

    /// Row-first order J(Kf): integrate y away per row, then integrate the
    /// resulting step function of x.
    pub fn evaluate_row_first(&self, f: &GridFunction) -> Rat {
        let kf = partial_integral(&self.k, f, Axis::Y);
        self.j.integrate(&kf).expect("step integrals are total")
    }

    /// Column-first order K(Jf), coded independently of the row-first path:
    /// a direct double sum over columns of x-weighted column totals.
    pub fn evaluate_column_first(&self, f: &GridFunction) -> Rat {
        if f.is_zero() {
            return Rat::zero();
        }
        let x_weights: Vec<Rat> = f
            .x_breakpoints()
            .windows(2)
            .map(|w| self.j.interval_weight(&w[0], &w[1]))
            .collect();
        let mut total = Rat::zero();
        for j in 0..f.y_breakpoints().len() - 1 {
            let mut column_total = Rat::zero();
            for (row, w) in f.cell_values().iter().zip(&x_weights) {
                column_total += &row[j] * w;
            }
            let yw = self
                .k
                .interval_weight(&f.y_breakpoints()[j], &f.y_breakpoints()[j + 1]);
            total += column_total * yw;
        }
        total
    }

    /// I(f), with the reversed order verified internally. The two orders are
    /// exact rational evaluations of the same double sum, so a mismatch can
    /// only mean an arithmetic bug.
    pub fn evaluate(&self, f: &GridFunction) -> Result<Rat, Error> {
        let row_first = self.evaluate_row_first(f);
        let column_first = self.evaluate_column_first(f);
        if row_first != column_first {
            return Err(Error::OrderDiscrepancy(format!(
                "J(Kf) = {row_first} but K(Jf) = {column_first}"
            )));
        }
        Ok(row_first)
    }
}

impl DaniellIntegral for ProductIntegral {
    type Element = GridFunction;

    fn integrate(&self, f: &GridFunction) -> Result<Rat, Error> {
        self.evaluate(f)
    }

    fn descriptor(&self) -> String {
        format!("product[{} ⊗ {}]", self.j.descriptor(), self.k.descriptor())
    }
}

/// `I(f⊗g) − J(f)·K(g)`; exactly zero by the product identity.
pub fn theorem1_residual(
    j: &ElementaryIntegral1D,
    k: &ElementaryIntegral1D,
    f: &StepFunction1D,
    g: &StepFunction1D,
) -> Result<Rat, Error> {
    let product = ProductIntegral::new(j.clone(), k.clone());
    let lhs = product.evaluate(&flatten(&TensorElement::simple(f.clone(), g.clone())))?;
    let rhs = j.integrate(f)? * k.integrate(g)?;
    Ok(lhs - rhs)
}

/// Finite-domain counterparts: products of weighted-sum integrals over index
/// sets, with the value matrix standing in for the grid.
pub mod finite {
    use num::Zero;

    use crate::error::Error;
    use crate::finite::{FiniteFunction, WeightedIntegral};
    use crate::rat::Rat;
    use crate::riesz::DaniellIntegral;

    /// Formal sum of pairs of finite functions. Unlike the step world the
    /// domains are sized, so mixed instantiations are a real error here.
    #[derive(Debug, Clone, PartialEq)]
    pub struct FiniteTensor {
        terms: Vec<(FiniteFunction, FiniteFunction)>,
    }

    impl FiniteTensor {
        pub fn new(terms: Vec<(FiniteFunction, FiniteFunction)>) -> Self {
            FiniteTensor { terms }
        }

        pub fn simple(f: FiniteFunction, g: FiniteFunction) -> Self {
            FiniteTensor {
                terms: vec![(f, g)],
            }
        }

        pub fn terms(&self) -> &[(FiniteFunction, FiniteFunction)] {
            &self.terms
        }
    }

    /// Value matrix over the product index set.
    #[derive(Debug, Clone, PartialEq)]
    pub struct FiniteGrid {
        values: Vec<Vec<Rat>>,
    }

    impl FiniteGrid {
        pub fn new(values: Vec<Vec<Rat>>) -> Result<Self, Error> {
            if values.is_empty() || values[0].is_empty() {
                return Err(Error::MalformedInput("empty product domain".into()));
            }
            let cols = values[0].len();
            if values.iter().any(|r| r.len() != cols) {
                return Err(Error::MalformedInput("ragged value matrix".into()));
            }
            Ok(FiniteGrid { values })
        }

        pub fn rows(&self) -> usize {
            self.values.len()
        }

        pub fn cols(&self) -> usize {
            self.values[0].len()
        }

        pub fn values(&self) -> &[Vec<Rat>] {
            &self.values
        }
    }

    /// Σᵢ fᵢ(x)·gᵢ(y) as a matrix; fails when term domains disagree.
    pub fn flatten(t: &FiniteTensor) -> Result<FiniteGrid, Error> {
        let Some((f0, g0)) = t.terms().first() else {
            return Err(Error::MalformedInput(
                "cannot flatten an empty finite tensor without domain sizes".into(),
            ));
        };
        let (rows, cols) = (f0.len(), g0.len());
        let mut values = vec![vec![Rat::zero(); cols]; rows];
        for (f, g) in t.terms() {
            if f.len() != rows || g.len() != cols {
                return Err(Error::DomainMismatch(format!(
                    "tensor terms over {}×{} and {}×{} index sets",
                    rows,
                    cols,
                    f.len(),
                    g.len()
                )));
            }
            for (i, fv) in f.values().iter().enumerate() {
                for (j, gv) in g.values().iter().enumerate() {
                    values[i][j] += fv * gv;
                }
            }
        }
        FiniteGrid::new(values)
    }

    /// I(m) = J(Km) with the reversed order K(Jm) verified, as in the grid
    /// case.
    pub fn product_integral(
        j: &WeightedIntegral,
        k: &WeightedIntegral,
        m: &FiniteGrid,
    ) -> Result<Rat, Error> {
        if m.rows() != j.domain_size() || m.cols() != k.domain_size() {
            return Err(Error::DomainMismatch(format!(
                "{}×{} matrix against integrals over {} and {} points",
                m.rows(),
                m.cols(),
                j.domain_size(),
                k.domain_size()
            )));
        }
        // Row-first: J applied to the vector of K-row-integrals.
        let row_first = {
            let kf: Vec<Rat> = m
                .values()
                .iter()
                .map(|row| {
                    row.iter()
                        .zip(k.weights())
                        .map(|(v, w)| v * w)
                        .fold(Rat::zero(), |acc, t| acc + t)
                })
                .collect();
            kf.iter()
                .zip(j.weights())
                .map(|(v, w)| v * w)
                .fold(Rat::zero(), |acc, t| acc + t)
        };
        // Column-first: independent double sum in the other nesting order.
        let column_first = {
            let mut total = Rat::zero();
            for col in 0..m.cols() {
                let mut jf = Rat::zero();
                for (row, jw) in m.values().iter().zip(j.weights()) {
                    jf += &row[col] * jw;
                }
                total += jf * &k.weights()[col];
            }
            total
        };
        if row_first != column_first {
            return Err(Error::OrderDiscrepancy(format!(
                "J(Km) = {row_first} but K(Jm) = {column_first}"
            )));
        }
        Ok(row_first)
    }

    /// `I(f⊗g) − J(f)·K(g)` over finite domains; exactly zero.
    pub fn theorem1_residual(
        j: &WeightedIntegral,
        k: &WeightedIntegral,
        f: &FiniteFunction,
        g: &FiniteFunction,
    ) -> Result<Rat, Error> {
        let m = flatten(&FiniteTensor::simple(f.clone(), g.clone()))?;
        let lhs = product_integral(j, k, &m)?;
        let rhs = j.integrate(f)? * k.integrate(g)?;
        Ok(lhs - rhs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finite::{FiniteFunction, WeightedIntegral};
    use crate::rat::{int, rat};
    use crate::riesz::RieszElement;

    fn unit(a: i64, b: i64) -> StepFunction1D {
        StepFunction1D::indicator(int(a), int(b), int(1)).unwrap()
    }

    fn leb() -> ElementaryIntegral1D {
        ElementaryIntegral1D::Lebesgue
    }

    #[test]
    fn section_examples() {
        let square = flatten(&TensorElement::simple(unit(0, 1), unit(0, 1)));
        assert_eq!(section(&square, Axis::X, &rat(1, 2)), unit(0, 1));
        assert_eq!(section(&square, Axis::X, &int(5)), StepFunction1D::zero());

        let two_cells = flatten(&TensorElement::new(vec![
            (unit(0, 2), unit(0, 1)),
            (unit(1, 2), unit(0, 1)),
        ]));
        assert_eq!(
            section(&two_cells, Axis::X, &rat(3, 2)),
            unit(0, 1).scale(&int(2))
        );
    }

    #[test]
    fn partial_integral_examples() {
        // f = 1 on [0,1)×[0,2): Kf = 2·1_[0,1)
        let f = flatten(&TensorElement::simple(unit(0, 1), unit(0, 2)));
        assert_eq!(
            partial_integral(&leb(), &f, Axis::Y),
            unit(0, 1).scale(&int(2))
        );
        assert_eq!(
            partial_integral(&leb(), &GridFunction::zero(), Axis::Y),
            StepFunction1D::zero()
        );

        // rows [0,1),[1,2) with values 1,2 on y-cell [0,1)
        let f = flatten(&TensorElement::new(vec![
            (unit(0, 1), unit(0, 1)),
            (unit(1, 2).scale(&int(2)), unit(0, 1)),
        ]));
        let kf = partial_integral(&leb(), &f, Axis::Y);
        assert_eq!(kf, unit(0, 1).add(&unit(1, 2).scale(&int(2))));
    }

    #[test]
    fn product_integral_examples() {
        let p = ProductIntegral::new(leb(), leb());
        let f = flatten(&TensorElement::simple(unit(0, 1), unit(0, 2)));
        assert_eq!(p.evaluate(&f).unwrap(), int(2));
        assert_eq!(p.evaluate(&GridFunction::zero()).unwrap(), int(0));

        let f = flatten(&TensorElement::new(vec![
            (unit(0, 1), unit(0, 1)),
            (unit(1, 2).scale(&int(2)), unit(0, 1)),
        ]));
        assert_eq!(p.evaluate(&f).unwrap(), int(3));
        assert_eq!(p.evaluate_row_first(&f), p.evaluate_column_first(&f));
    }

    #[test]
    fn theorem1_residual_is_zero_for_steps() {
        let f = unit(0, 2).scale(&rat(3, 4)).sub(&unit(1, 3));
        let g = unit(0, 1).add(&unit(2, 4).scale(&rat(-5, 2)));
        assert_eq!(theorem1_residual(&leb(), &leb(), &f, &g).unwrap(), int(0));

        let st = ElementaryIntegral1D::stieltjes(
            vec![int(0), int(1), int(3)],
            vec![rat(1, 2), int(2)],
        )
        .unwrap();
        assert_eq!(theorem1_residual(&leb(), &st, &f, &g).unwrap(), int(0));
        assert_eq!(theorem1_residual(&st, &st, &f, &g).unwrap(), int(0));
        assert_eq!(
            theorem1_residual(&leb(), &st, &StepFunction1D::zero(), &g).unwrap(),
            int(0)
        );
    }

    #[test]
    fn finite_product_example() {
        // f=(1,2), weights (1,1): J(f)=3; g=(1,1), weights (2,3): K(g)=5.
        let j = WeightedIntegral::new(vec![int(1), int(1)]).unwrap();
        let k = WeightedIntegral::new(vec![int(2), int(3)]).unwrap();
        let f = FiniteFunction::from_ints(&[1, 2]);
        let g = FiniteFunction::from_ints(&[1, 1]);
        let m = finite::flatten(&finite::FiniteTensor::simple(f.clone(), g.clone())).unwrap();
        assert_eq!(finite::product_integral(&j, &k, &m).unwrap(), int(15));
        assert_eq!(finite::theorem1_residual(&j, &k, &f, &g).unwrap(), int(0));
    }

    #[test]
    fn finite_flatten_rejects_mixed_domains() {
        let t = finite::FiniteTensor::new(vec![
            (
                FiniteFunction::from_ints(&[1, 2]),
                FiniteFunction::from_ints(&[1]),
            ),
            (
                FiniteFunction::from_ints(&[1, 2, 3]),
                FiniteFunction::from_ints(&[1]),
            ),
        ]);
        assert!(matches!(
            finite::flatten(&t),
            Err(Error::DomainMismatch(_))
        ));
    }

    #[test]
    fn monotonicity_of_product_integral() {
        let p = ProductIntegral::new(leb(), leb());
        let f = flatten(&TensorElement::new(vec![
            (unit(0, 2).scale(&rat(1, 2)), unit(0, 1)),
            (unit(1, 3), unit(0, 2)),
        ]))
        .abs();
        assert!(p.evaluate(&f).unwrap() >= int(0));
    }
}
