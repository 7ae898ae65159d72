//! Scenario files: declarations of spaces, integrals, functions and tensors,
//! the suites to run over them, and run parameters.
//!
//! Files are JSON with every rational as an exact `"p/q"` string; decimal
//! literals are rejected at parse time. Raw serde structs keep the strings,
//! and [`ScenarioFile::resolve`] converts to exact values with field-path
//! diagnostics, checking that every cross-reference resolves.

use serde::{Deserialize, Serialize};

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::finite::WeightedIntegral;
use crate::rat::{self, parse_rat, Rat};
use crate::step::{ElementaryIntegral1D, StepFunction1D};
use crate::tensor::TensorElement;

/// Parse/validation failure with the offending field path.
#[derive(Debug, Clone)]
pub struct ScenarioError {
    pub path: String,
    pub message: String,
}

impl std::fmt::Display for ScenarioError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}: {}", self.path, self.message)
    }
}

impl std::error::Error for ScenarioError {}

fn err(path: impl Into<String>, message: impl std::fmt::Display) -> ScenarioError {
    ScenarioError {
        path: path.into(),
        message: message.to_string(),
    }
}

// ---------------------------------------------------------------------------
// Raw (serialized) form
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Serialize, Deserialize, Default)]
pub struct ScenarioFile {
    pub name: String,
    #[serde(default)]
    pub seed: u64,
    #[serde(default)]
    pub finite_spaces: Vec<FiniteSpaceDecl>,
    #[serde(default)]
    pub step_integrals: Vec<StepIntegralDecl>,
    #[serde(default)]
    pub step_functions: Vec<StepFunctionDecl>,
    #[serde(default)]
    pub tensors: Vec<TensorDecl>,
    #[serde(default)]
    pub suites: Vec<String>,
    #[serde(default)]
    pub parameters: ParametersDecl,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FiniteSpaceDecl {
    pub name: String,
    pub weights: Vec<String>,
    /// Admit negative weights (counterexample fixtures only).
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub allow_negative: bool,
    /// Axiom this fixture is expected to violate; the axioms suite passes
    /// when the harness detects the violation.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expect_axiom_violation: Option<String>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct StepIntegralDecl {
    pub name: String,
    /// "lebesgue" or "stieltjes".
    pub mode: String,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub breakpoints: Vec<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub slopes: Vec<String>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct StepFunctionDecl {
    pub name: String,
    pub breakpoints: Vec<String>,
    pub values: Vec<String>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TensorDecl {
    pub name: String,
    /// Names of declared step integrals used as the (J, K) pair.
    pub x_integral: String,
    pub y_integral: String,
    /// Terms reference declared step functions by name.
    pub terms: Vec<TensorTermDecl>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TensorTermDecl {
    pub x: String,
    pub y: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ParametersDecl {
    #[serde(default = "default_levels")]
    pub levels: Vec<u64>,
    #[serde(default = "default_tolerance")]
    pub tolerance: String,
    #[serde(default = "default_max_steps")]
    pub max_steps: u32,
    #[serde(default = "default_trials")]
    pub trials: usize,
    #[serde(default = "default_corpus_depth")]
    pub corpus_depth: u32,
    #[serde(default = "default_corpus_budget")]
    pub corpus_budget: usize,
    #[serde(default = "default_sqrt_depth")]
    pub sqrt_depth: u32,
}

fn default_levels() -> Vec<u64> {
    vec![1, 2, 4, 8, 16, 32, 64]
}
fn default_tolerance() -> String {
    "1/1000000".into()
}
fn default_max_steps() -> u32 {
    64
}
fn default_trials() -> usize {
    50
}
fn default_corpus_depth() -> u32 {
    3
}
fn default_corpus_budget() -> usize {
    120
}
fn default_sqrt_depth() -> u32 {
    20
}

impl Default for ParametersDecl {
    fn default() -> Self {
        ParametersDecl {
            levels: default_levels(),
            tolerance: default_tolerance(),
            max_steps: default_max_steps(),
            trials: default_trials(),
            corpus_depth: default_corpus_depth(),
            corpus_budget: default_corpus_budget(),
            sqrt_depth: default_sqrt_depth(),
        }
    }
}

// ---------------------------------------------------------------------------
// Resolved form
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Suite {
    Axioms,
    Product,
    Fubini,
    Lemma1,
    Lemma6,
    Closure,
    Sqrt,
}

impl Suite {
    pub const ALL: [Suite; 7] = [
        Suite::Axioms,
        Suite::Product,
        Suite::Fubini,
        Suite::Lemma1,
        Suite::Lemma6,
        Suite::Closure,
        Suite::Sqrt,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Suite::Axioms => "axioms",
            Suite::Product => "product",
            Suite::Fubini => "fubini",
            Suite::Lemma1 => "lemma1",
            Suite::Lemma6 => "lemma6",
            Suite::Closure => "closure",
            Suite::Sqrt => "sqrt",
        }
    }
}

impl std::str::FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Suite::ALL
            .iter()
            .find(|v| v.name() == s)
            .copied()
            .ok_or_else(|| {
                let known: Vec<&str> = Suite::ALL.iter().map(|s| s.name()).collect();
                format!("unknown suite {s:?}; known suites: {}", known.join(", "))
            })
    }
}

#[derive(Debug, Clone)]
pub struct FiniteSpace {
    pub name: String,
    pub integral: WeightedIntegral,
    pub expect_axiom_violation: Option<String>,
}

#[derive(Debug, Clone)]
pub struct NamedStepIntegral {
    pub name: String,
    pub integral: ElementaryIntegral1D,
}

#[derive(Debug, Clone)]
pub struct NamedStepFunction {
    pub name: String,
    pub function: StepFunction1D,
}

#[derive(Debug, Clone)]
pub struct NamedTensor {
    pub name: String,
    pub tensor: TensorElement,
    /// Indices into the resolved step-integral list.
    pub x_integral: usize,
    pub y_integral: usize,
}

#[derive(Debug, Clone)]
pub struct Parameters {
    pub levels: Vec<u64>,
    pub tolerance: Rat,
    pub max_steps: u32,
    pub trials: usize,
    pub corpus_depth: u32,
    pub corpus_budget: usize,
    pub sqrt_depth: u32,
}

#[derive(Debug, Clone)]
pub struct Scenario {
    pub name: String,
    pub seed: u64,
    pub finite_spaces: Vec<FiniteSpace>,
    pub step_integrals: Vec<NamedStepIntegral>,
    pub step_functions: Vec<NamedStepFunction>,
    pub tensors: Vec<NamedTensor>,
    pub suites: Vec<Suite>,
    pub params: Parameters,
}

fn parse_rats(path: &str, raw: &[String]) -> Result<Vec<Rat>, ScenarioError> {
    raw.iter()
        .enumerate()
        .map(|(i, s)| parse_rat(s).map_err(|e| err(format!("{path}[{i}]"), e)))
        .collect()
}

impl ScenarioFile {
    pub fn resolve(&self) -> Result<Scenario, ScenarioError> {
        let mut finite_spaces = Vec::new();
        let mut names = std::collections::BTreeSet::new();
        for (i, d) in self.finite_spaces.iter().enumerate() {
            let path = format!("finite_spaces[{i}]");
            if !names.insert(format!("finite:{}", d.name)) {
                return Err(err(format!("{path}.name"), "duplicate name"));
            }
            let weights = parse_rats(&format!("{path}.weights"), &d.weights)?;
            let integral = if d.allow_negative {
                WeightedIntegral::fixture_unchecked(weights)
            } else {
                WeightedIntegral::new(weights).map_err(|e| err(format!("{path}.weights"), e))?
            };
            finite_spaces.push(FiniteSpace {
                name: d.name.clone(),
                integral,
                expect_axiom_violation: d.expect_axiom_violation.clone(),
            });
        }

        let mut step_integrals = Vec::new();
        for (i, d) in self.step_integrals.iter().enumerate() {
            let path = format!("step_integrals[{i}]");
            if !names.insert(format!("integral:{}", d.name)) {
                return Err(err(format!("{path}.name"), "duplicate name"));
            }
            let integral = match d.mode.as_str() {
                "lebesgue" => ElementaryIntegral1D::Lebesgue,
                "stieltjes" => {
                    let bp = parse_rats(&format!("{path}.breakpoints"), &d.breakpoints)?;
                    let slopes = parse_rats(&format!("{path}.slopes"), &d.slopes)?;
                    ElementaryIntegral1D::stieltjes(bp, slopes).map_err(|e| err(&path, e))?
                }
                other => {
                    return Err(err(
                        format!("{path}.mode"),
                        format!("unknown mode {other:?}; expected \"lebesgue\" or \"stieltjes\""),
                    ))
                }
            };
            step_integrals.push(NamedStepIntegral {
                name: d.name.clone(),
                integral,
            });
        }

        let mut step_functions = Vec::new();
        for (i, d) in self.step_functions.iter().enumerate() {
            let path = format!("step_functions[{i}]");
            if !names.insert(format!("step:{}", d.name)) {
                return Err(err(format!("{path}.name"), "duplicate name"));
            }
            let bp = parse_rats(&format!("{path}.breakpoints"), &d.breakpoints)?;
            let values = parse_rats(&format!("{path}.values"), &d.values)?;
            let function = StepFunction1D::new(bp, values).map_err(|e| err(&path, e))?;
            step_functions.push(NamedStepFunction {
                name: d.name.clone(),
                function,
            });
        }

        let integral_index = |name: &str, path: String| -> Result<usize, ScenarioError> {
            step_integrals
                .iter()
                .position(|n| n.name == name)
                .ok_or_else(|| err(path, format!("unknown step integral {name:?}")))
        };
        let function_by_name = |name: &str, path: String| -> Result<StepFunction1D, ScenarioError> {
            step_functions
                .iter()
                .find(|n| n.name == name)
                .map(|n| n.function.clone())
                .ok_or_else(|| err(path, format!("unknown step function {name:?}")))
        };

        let mut tensors = Vec::new();
        for (i, d) in self.tensors.iter().enumerate() {
            let path = format!("tensors[{i}]");
            if !names.insert(format!("tensor:{}", d.name)) {
                return Err(err(format!("{path}.name"), "duplicate name"));
            }
            let x_integral = integral_index(&d.x_integral, format!("{path}.x_integral"))?;
            let y_integral = integral_index(&d.y_integral, format!("{path}.y_integral"))?;
            let mut terms = Vec::new();
            for (j, t) in d.terms.iter().enumerate() {
                let x = function_by_name(&t.x, format!("{path}.terms[{j}].x"))?;
                let y = function_by_name(&t.y, format!("{path}.terms[{j}].y"))?;
                terms.push((x, y));
            }
            tensors.push(NamedTensor {
                name: d.name.clone(),
                tensor: TensorElement::new(terms),
                x_integral,
                y_integral,
            });
        }

        let mut suites = Vec::new();
        for (i, s) in self.suites.iter().enumerate() {
            let suite: Suite = s
                .parse()
                .map_err(|e: String| err(format!("suites[{i}]"), e))?;
            if !suites.contains(&suite) {
                suites.push(suite);
            }
        }

        let tolerance = parse_rat(&self.parameters.tolerance)
            .map_err(|e| err("parameters.tolerance", e))?;
        if tolerance <= rat::zero() {
            return Err(err("parameters.tolerance", "tolerance must be positive"));
        }
        if self.parameters.levels.iter().any(|&n| n < 1) {
            return Err(err("parameters.levels", "levels must be ≥ 1"));
        }

        Ok(Scenario {
            name: self.name.clone(),
            seed: self.seed,
            finite_spaces,
            step_integrals,
            step_functions,
            tensors,
            suites,
            params: Parameters {
                levels: self.parameters.levels.clone(),
                tolerance,
                max_steps: self.parameters.max_steps,
                trials: self.parameters.trials,
                corpus_depth: self.parameters.corpus_depth,
                corpus_budget: self.parameters.corpus_budget,
                sqrt_depth: self.parameters.sqrt_depth,
            },
        })
    }
}

/// Parses and validates a scenario from JSON text.
pub fn parse_scenario(text: &str) -> Result<Scenario, ScenarioError> {
    let file: ScenarioFile = serde_json::from_str(text)
        .map_err(|e| err(format!("line {}, column {}", e.line(), e.column()), e))?;
    file.resolve()
}

// ---------------------------------------------------------------------------
// Deterministic generators
// ---------------------------------------------------------------------------

/// Seeded random builders shared by `generate` and the test suites.
pub mod gen {
    use super::*;

    pub fn rng(seed: u64) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(seed)
    }

    /// A rational with |numerator| ≤ `max_num` and denominator ≤ `max_den`.
    pub fn random_rat(rng: &mut ChaCha8Rng, max_num: i64, max_den: i64) -> Rat {
        let num = rng.gen_range(-max_num..=max_num);
        let den = rng.gen_range(1..=max_den);
        rat::rat(num, den)
    }

    fn random_breakpoints(rng: &mut ChaCha8Rng, cells: usize) -> Vec<Rat> {
        let mut bps = std::collections::BTreeSet::new();
        while bps.len() < cells + 1 {
            bps.insert(random_rat(rng, 8, 8));
        }
        bps.into_iter().collect()
    }

    /// A canonical step function with at most `max_plateaus` plateaus and
    /// values with |num| ≤ 8, den ≤ 8.
    pub fn random_step(rng: &mut ChaCha8Rng, max_plateaus: usize) -> StepFunction1D {
        let cells = rng.gen_range(1..=max_plateaus.max(1));
        let bps = random_breakpoints(rng, cells);
        let values: Vec<Rat> = (0..cells).map(|_| random_rat(rng, 8, 8)).collect();
        StepFunction1D::new(bps, values).expect("generated breakpoints are increasing")
    }

    pub fn random_nonneg_step(rng: &mut ChaCha8Rng, max_plateaus: usize) -> StepFunction1D {
        use crate::riesz::RieszElement;
        random_step(rng, max_plateaus).abs()
    }

    /// A tensor with k terms, each factor ≤ 4 plateaus.
    pub fn random_tensor(rng: &mut ChaCha8Rng, k: usize) -> TensorElement {
        let terms = (0..k)
            .map(|_| (random_step(rng, 4), random_step(rng, 4)))
            .collect();
        TensorElement::new(terms)
    }

    /// A Stieltjes integral with nonnegative rational slopes.
    pub fn random_stieltjes(rng: &mut ChaCha8Rng) -> ElementaryIntegral1D {
        let cells = rng.gen_range(1..=3);
        let bps = random_breakpoints(rng, cells);
        let slopes: Vec<Rat> = (0..cells)
            .map(|_| {
                let num = rng.gen_range(0..=8);
                let den = rng.gen_range(1..=8);
                rat::rat(num, den)
            })
            .collect();
        ElementaryIntegral1D::stieltjes(bps, slopes).expect("slopes are nonnegative")
    }

    /// Nonnegative weight vector.
    pub fn random_weights(rng: &mut ChaCha8Rng, len: usize) -> Vec<Rat> {
        (0..len)
            .map(|_| {
                let num = rng.gen_range(0..=8);
                let den = rng.gen_range(1..=4);
                rat::rat(num, den)
            })
            .collect()
    }

    /// Random finite function with entries |num| ≤ `max_num`, den ≤ `max_den`.
    pub fn random_finite(
        rng: &mut ChaCha8Rng,
        len: usize,
        max_num: i64,
        max_den: i64,
    ) -> crate::finite::FiniteFunction {
        crate::finite::FiniteFunction::new((0..len).map(|_| random_rat(rng, max_num, max_den)).collect())
            .expect("len ≥ 1")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GenerateKind {
    RandomSteps,
    RandomFinite,
    PaperDemos,
}

impl std::str::FromStr for GenerateKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "random-steps" => Ok(GenerateKind::RandomSteps),
            "random-finite" => Ok(GenerateKind::RandomFinite),
            "paper-demos" => Ok(GenerateKind::PaperDemos),
            other => Err(format!(
                "unknown kind {other:?}; expected random-steps, random-finite or paper-demos"
            )),
        }
    }
}

fn rat_strings(rs: &[Rat]) -> Vec<String> {
    rs.iter().map(rat::format_rat).collect()
}

fn step_decl(name: &str, f: &StepFunction1D) -> StepFunctionDecl {
    StepFunctionDecl {
        name: name.into(),
        breakpoints: rat_strings(f.breakpoints()),
        values: rat_strings(f.plateau_values()),
    }
}

/// Deterministic scenario emission; the same kind/seed/size always produces
/// byte-identical files.
pub fn generate_scenario(kind: GenerateKind, seed: u64, size: u32) -> ScenarioFile {
    match kind {
        GenerateKind::PaperDemos => paper_demos(seed),
        GenerateKind::RandomSteps => random_steps_scenario(seed, size),
        GenerateKind::RandomFinite => random_finite_scenario(seed, size),
    }
}

fn random_steps_scenario(seed: u64, size: u32) -> ScenarioFile {
    let mut rng = gen::rng(seed);
    let mut file = ScenarioFile {
        name: format!("random-steps-{seed}"),
        seed,
        ..Default::default()
    };
    if size == 0 {
        return file;
    }
    file.step_integrals.push(StepIntegralDecl {
        name: "leb".into(),
        mode: "lebesgue".into(),
        breakpoints: vec![],
        slopes: vec![],
    });
    if let ElementaryIntegral1D::Stieltjes(d) = gen::random_stieltjes(&mut rng) {
        file.step_integrals.push(StepIntegralDecl {
            name: "st".into(),
            mode: "stieltjes".into(),
            breakpoints: rat_strings(d.density().breakpoints()),
            slopes: rat_strings(d.density().plateau_values()),
        });
    }
    for i in 0..size {
        let f = gen::random_step(&mut rng, 6);
        file.step_functions.push(step_decl(&format!("f{i}"), &f));
    }
    let tensor_count = (size / 2).max(1);
    for i in 0..tensor_count {
        let k = (i % 3) as usize + 1;
        let mut terms = Vec::new();
        for j in 0..k {
            let pick = |rng: &mut ChaCha8Rng| format!("f{}", rng.gen_range(0..size));
            let _ = j;
            terms.push(TensorTermDecl {
                x: pick(&mut rng),
                y: pick(&mut rng),
            });
        }
        file.tensors.push(TensorDecl {
            name: format!("t{i}"),
            x_integral: "leb".into(),
            y_integral: if i % 2 == 0 { "leb" } else { "st" }.into(),
            terms,
        });
    }
    file.suites = vec![
        "product".into(),
        "fubini".into(),
        "lemma1".into(),
        "lemma6".into(),
    ];
    file
}

fn random_finite_scenario(seed: u64, size: u32) -> ScenarioFile {
    let mut rng = gen::rng(seed);
    let mut file = ScenarioFile {
        name: format!("random-finite-{seed}"),
        seed,
        ..Default::default()
    };
    if size == 0 {
        return file;
    }
    for i in 0..size {
        let len = rng.gen_range(2..=3);
        file.finite_spaces.push(FiniteSpaceDecl {
            name: format!("w{i}"),
            weights: rat_strings(&gen::random_weights(&mut rng, len)),
            allow_negative: false,
            expect_axiom_violation: None,
        });
    }
    file.suites = vec!["axioms".into(), "product".into(), "closure".into()];
    file
}

/// The worked fixtures: every identity and bound exercised on the concrete
/// functions used throughout this crate's documentation and tests.
fn paper_demos(seed: u64) -> ScenarioFile {
    use crate::rat::{int, rat as q};

    let unit01 = StepFunction1D::indicator(int(0), int(1), int(1)).unwrap();
    let unit12 = StepFunction1D::indicator(int(1), int(2), int(1)).unwrap();
    let unit02 = StepFunction1D::indicator(int(0), int(2), int(1)).unwrap();
    let unit13 = StepFunction1D::indicator(int(1), int(3), int(1)).unwrap();
    let two03 = StepFunction1D::indicator(int(0), int(3), int(2)).unwrap();
    let two01 = StepFunction1D::indicator(int(0), int(1), int(2)).unwrap();
    let third01 = StepFunction1D::indicator(int(0), int(1), q(1, 3)).unwrap();
    let sign = unit01.sub(&unit12);

    ScenarioFile {
        name: "paper-demos".into(),
        seed,
        finite_spaces: vec![
            FiniteSpaceDecl {
                name: "w11".into(),
                weights: vec!["1/1".into(), "1/1".into()],
                allow_negative: false,
                expect_axiom_violation: None,
            },
            FiniteSpaceDecl {
                name: "w12".into(),
                weights: vec!["1/1".into(), "2/1".into()],
                allow_negative: false,
                expect_axiom_violation: None,
            },
            FiniteSpaceDecl {
                name: "w23".into(),
                weights: vec!["2/1".into(), "3/1".into()],
                allow_negative: false,
                expect_axiom_violation: None,
            },
            FiniteSpaceDecl {
                name: "neg-fixture".into(),
                weights: vec!["1/1".into(), "-1/1".into()],
                allow_negative: true,
                expect_axiom_violation: Some("monotonicity".into()),
            },
        ],
        step_integrals: vec![
            StepIntegralDecl {
                name: "leb".into(),
                mode: "lebesgue".into(),
                breakpoints: vec![],
                slopes: vec![],
            },
            StepIntegralDecl {
                name: "st".into(),
                mode: "stieltjes".into(),
                breakpoints: vec!["0/1".into(), "1/1".into(), "3/1".into()],
                slopes: vec!["1/2".into(), "2/1".into()],
            },
        ],
        step_functions: vec![
            step_decl("unit01", &unit01),
            step_decl("unit12", &unit12),
            step_decl("unit02", &unit02),
            step_decl("unit13", &unit13),
            step_decl("two03", &two03),
            step_decl("two01", &two01),
            step_decl("third01", &third01),
            step_decl("sign", &sign),
        ],
        tensors: vec![
            TensorDecl {
                name: "unit-square".into(),
                x_integral: "leb".into(),
                y_integral: "leb".into(),
                terms: vec![TensorTermDecl {
                    x: "unit01".into(),
                    y: "unit01".into(),
                }],
            },
            TensorDecl {
                name: "strips".into(),
                x_integral: "leb".into(),
                y_integral: "leb".into(),
                terms: vec![
                    TensorTermDecl {
                        x: "unit02".into(),
                        y: "unit01".into(),
                    },
                    TensorTermDecl {
                        x: "unit13".into(),
                        y: "unit01".into(),
                    },
                ],
            },
            TensorDecl {
                name: "sign-strip".into(),
                x_integral: "leb".into(),
                y_integral: "leb".into(),
                terms: vec![TensorTermDecl {
                    x: "sign".into(),
                    y: "unit01".into(),
                }],
            },
            TensorDecl {
                name: "off-lattice".into(),
                x_integral: "leb".into(),
                y_integral: "st".into(),
                terms: vec![
                    TensorTermDecl {
                        x: "unit01".into(),
                        y: "unit01".into(),
                    },
                    TensorTermDecl {
                        x: "two01".into(),
                        y: "unit13".into(),
                    },
                ],
            },
        ],
        suites: Suite::ALL.iter().map(|s| s.name().to_string()).collect(),
        parameters: ParametersDecl::default(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn paper_demos_resolves() {
        let file = generate_scenario(GenerateKind::PaperDemos, 42, 0);
        let sc = file.resolve().unwrap();
        assert_eq!(sc.suites.len(), 7);
        assert_eq!(sc.tensors.len(), 4);
        assert_eq!(sc.finite_spaces.len(), 4);
    }

    #[test]
    fn generation_is_deterministic() {
        for kind in [
            GenerateKind::RandomSteps,
            GenerateKind::RandomFinite,
            GenerateKind::PaperDemos,
        ] {
            let a = serde_json::to_string_pretty(&generate_scenario(kind, 7, 6)).unwrap();
            let b = serde_json::to_string_pretty(&generate_scenario(kind, 7, 6)).unwrap();
            assert_eq!(a, b);
        }
    }

    #[test]
    fn size_zero_is_minimal_but_valid() {
        let file = generate_scenario(GenerateKind::RandomSteps, 3, 0);
        let sc = file.resolve().unwrap();
        assert!(sc.suites.is_empty());
        assert!(sc.tensors.is_empty());
    }

    #[test]
    fn random_scenarios_resolve() {
        for seed in [0u64, 1, 99] {
            generate_scenario(GenerateKind::RandomSteps, seed, 8)
                .resolve()
                .unwrap();
            generate_scenario(GenerateKind::RandomFinite, seed, 5)
                .resolve()
                .unwrap();
        }
    }

    #[test]
    fn unresolved_references_are_reported_with_paths() {
        let mut file = generate_scenario(GenerateKind::PaperDemos, 1, 0);
        file.tensors[0].terms[0].x = "nonexistent".into();
        let e = file.resolve().unwrap_err();
        assert_eq!(e.path, "tensors[0].terms[0].x");

        let mut file = generate_scenario(GenerateKind::PaperDemos, 1, 0);
        file.tensors[1].y_integral = "nope".into();
        let e = file.resolve().unwrap_err();
        assert_eq!(e.path, "tensors[1].y_integral");
    }

    #[test]
    fn decimal_rationals_are_rejected() {
        let mut file = generate_scenario(GenerateKind::PaperDemos, 1, 0);
        file.step_functions[0].values[0] = "0.5".into();
        let e = file.resolve().unwrap_err();
        assert!(e.path.starts_with("step_functions[0].values"));
    }

    #[test]
    fn unknown_suite_is_rejected() {
        let mut file = generate_scenario(GenerateKind::PaperDemos, 1, 0);
        file.suites.push("bogus".into());
        let e = file.resolve().unwrap_err();
        assert_eq!(e.path, "suites[7]");
    }

    #[test]
    fn parse_scenario_reports_json_errors_with_location() {
        let e = parse_scenario("{ not json").unwrap_err();
        assert!(e.path.contains("line"));
    }
}
