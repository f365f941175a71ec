//! Bundled catalog of real Lie algebras of dimension ≤ 4: exact structure
//! constants with parameter ranges, alias names, invariant metadata and the
//! canonical eigenvalue template of each solvable class, plus the parametric
//! series of arbitrary dimension.

pub mod expr;
pub mod family;

use expr::{eval_constraint, eval_expr, Env, ExprError};
use lieclass_core::scalar::{parse_q, Q};
use lieclass_core::{StructureConstants, TensorError};
use num::Zero;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::path::Path;
use std::sync::OnceLock;
use thiserror::Error;

/// Environment variable naming an alternative catalog data file.
pub const CATALOG_ENV: &str = "LIECLASS_CATALOG";

const BUNDLED_JSON: &str = include_str!("data/catalog.json");

#[derive(Debug, Error)]
pub enum CatalogError {
    #[error("unknown class or alias `{0}`")]
    UnknownClass(String),
    #[error("class `{class}`: missing parameter `{name}`")]
    MissingParam { class: String, name: String },
    #[error("class `{class}`: unexpected parameter `{name}`")]
    UnexpectedParam { class: String, name: String },
    #[error("class `{class}`: expected {expected} parameter value(s), got {got}")]
    WrongParamCount {
        class: String,
        expected: usize,
        got: usize,
    },
    #[error("class `{class}`: parameter `{name}` = {value} is outside its admissible range")]
    ParamOutOfRange {
        class: String,
        name: String,
        value: String,
    },
    #[error("class `{class}`: constraint `{constraint}` is violated")]
    ConstraintViolated { class: String, constraint: String },
    #[error("family `{family}`: {reason}")]
    Family { family: String, reason: String },
    #[error(transparent)]
    Expr(#[from] ExprError),
    #[error("catalog data error: {0}")]
    Data(String),
    #[error(transparent)]
    Tensor(#[from] TensorError),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

/// Which canonical codimension-1 ideal the class presents: abelian,
/// nilpotent with one-dimensional derived algebra, or pure scaling.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub enum IdealClass {
    I,
    II,
    V,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ParamSpec {
    pub name: String,
    pub min: Option<String>,
    pub max: Option<String>,
    #[serde(default)]
    pub min_open: bool,
    #[serde(default)]
    pub max_open: bool,
    #[serde(default)]
    pub exclude: Vec<String>,
}

impl ParamSpec {
    fn admits(&self, v: &Q) -> Result<bool, CatalogError> {
        if let Some(m) = &self.min {
            let m = parse_q(m).map_err(|e| CatalogError::Data(e.to_string()))?;
            if v < &m || (self.min_open && v == &m) {
                return Ok(false);
            }
        }
        if let Some(m) = &self.max {
            let m = parse_q(m).map_err(|e| CatalogError::Data(e.to_string()))?;
            if v > &m || (self.max_open && v == &m) {
                return Ok(false);
            }
        }
        for x in &self.exclude {
            let x = parse_q(x).map_err(|e| CatalogError::Data(e.to_string()))?;
            if v == &x {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BracketSpec {
    pub i: usize,
    pub j: usize,
    /// [e_i, e_j] = Σ coeff·e_k as (k, coefficient expression) pairs.
    pub terms: Vec<(usize, String)>,
}

/// Unimodularity of a class: unconditional, impossible, or cut out of the
/// parameter space by one equation.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum UnimodularRule {
    Fixed(String),
    When { when: String },
}

impl UnimodularRule {
    pub fn holds(&self, env: &Env) -> Result<bool, CatalogError> {
        match self {
            UnimodularRule::Fixed(s) if s == "always" => Ok(true),
            UnimodularRule::Fixed(s) if s == "never" => Ok(false),
            UnimodularRule::Fixed(s) => Err(CatalogError::Data(format!(
                "bad unimodular tag `{s}`"
            ))),
            UnimodularRule::When { when } => Ok(eval_constraint(when, env)?),
        }
    }
}

fn one() -> usize {
    1
}

/// One entry of the eigenvalue template: either a real eigenvalue or a
/// complex-conjugate pair, with expressions in the class parameters.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum TemplateBlock {
    Real {
        eig: String,
        #[serde(default = "one")]
        size: usize,
    },
    Pair {
        re: String,
        im: String,
        #[serde(default = "one")]
        size: usize,
    },
}

/// Evaluated template entry.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TemplateEig {
    Real { value: Q, size: usize },
    Pair { re: Q, im: Q, size: usize },
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct AlgebraClass {
    pub id: String,
    pub dim: usize,
    #[serde(default)]
    pub aliases: Vec<String>,
    #[serde(default)]
    pub params: Vec<ParamSpec>,
    #[serde(default)]
    pub constraints: Vec<String>,
    pub brackets: Vec<BracketSpec>,
    pub bianchi: Option<String>,
    pub petrov: Option<String>,
    pub selfdual: bool,
    pub unimodular: UnimodularRule,
    pub decomposable: bool,
    pub ideal_class: Option<IdealClass>,
    /// Canonical restricted-adjoint eigenvalue data, if the class is
    /// determined by one (solvable classes only).
    pub njnf: Option<Vec<TemplateBlock>>,
}

impl AlgebraClass {
    pub fn param_names(&self) -> Vec<&str> {
        self.params.iter().map(|p| p.name.as_str()).collect()
    }

    /// Check that the bindings exactly cover the declared parameters and lie
    /// in the admissible region.
    pub fn check_params(&self, env: &Env) -> Result<(), CatalogError> {
        for p in &self.params {
            let v = env.get(&p.name).ok_or_else(|| CatalogError::MissingParam {
                class: self.id.clone(),
                name: p.name.clone(),
            })?;
            if !p.admits(v)? {
                return Err(CatalogError::ParamOutOfRange {
                    class: self.id.clone(),
                    name: p.name.clone(),
                    value: lieclass_core::format_q(v),
                });
            }
        }
        for name in env.keys() {
            if !self.params.iter().any(|p| &p.name == name) {
                return Err(CatalogError::UnexpectedParam {
                    class: self.id.clone(),
                    name: name.clone(),
                });
            }
        }
        for c in &self.constraints {
            if !eval_constraint(c, env)? {
                return Err(CatalogError::ConstraintViolated {
                    class: self.id.clone(),
                    constraint: c.clone(),
                });
            }
        }
        Ok(())
    }

    /// Structure constants for the given parameter values.
    pub fn instantiate(&self, env: &Env) -> Result<StructureConstants, CatalogError> {
        self.check_params(env)?;
        let mut sc = StructureConstants::new(self.dim)?;
        for b in &self.brackets {
            for (k, coeff) in &b.terms {
                let c = eval_expr(coeff, env)?;
                if !c.is_zero() {
                    sc.set(b.i, b.j, *k, c)?;
                }
            }
        }
        Ok(sc)
    }

    pub fn is_unimodular_for(&self, env: &Env) -> Result<bool, CatalogError> {
        self.check_params(env)?;
        self.unimodular.holds(env)
    }

    /// Evaluate the eigenvalue template at the given parameters.
    pub fn njnf_eigs(&self, env: &Env) -> Result<Option<Vec<TemplateEig>>, CatalogError> {
        let Some(blocks) = &self.njnf else {
            return Ok(None);
        };
        let mut out = Vec::with_capacity(blocks.len());
        for b in blocks {
            out.push(match b {
                TemplateBlock::Real { eig, size } => TemplateEig::Real {
                    value: eval_expr(eig, env)?,
                    size: *size,
                },
                TemplateBlock::Pair { re, im, size } => TemplateEig::Pair {
                    re: eval_expr(re, env)?,
                    im: eval_expr(im, env)?,
                    size: *size,
                },
            });
        }
        Ok(Some(out))
    }

    /// Number of free parameters; with `unimodular_only` set, the dimension
    /// of the unimodular slice of the parameter space.
    pub fn parameter_dimension(&self, unimodular_only: bool) -> usize {
        let base = self.params.len();
        if !unimodular_only {
            return base;
        }
        match &self.unimodular {
            UnimodularRule::Fixed(s) if s == "always" => base,
            UnimodularRule::Fixed(_) => 0,
            UnimodularRule::When { .. } => base.saturating_sub(1),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FixedAlias {
    pub name: String,
    pub target: String,
    #[serde(default)]
    pub params: BTreeMap<String, String>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Catalog {
    pub classes: Vec<AlgebraClass>,
    #[serde(default)]
    pub fixed_aliases: Vec<FixedAlias>,
}

/// A resolved class name: the class plus any parameter values the alias
/// pins down.
#[derive(Debug, Clone)]
pub struct Resolution<'a> {
    pub class: &'a AlgebraClass,
    pub fixed: Env,
}

/// A concrete catalog member: class id, parameter values, tensor.
#[derive(Debug, Clone)]
pub struct Instance {
    pub class_id: String,
    pub params: Env,
    pub tensor: StructureConstants,
}

impl Catalog {
    pub fn from_json(src: &str) -> Result<Catalog, CatalogError> {
        let cat: Catalog = serde_json::from_str(src)?;
        cat.validate()?;
        Ok(cat)
    }

    pub fn from_path(path: &Path) -> Result<Catalog, CatalogError> {
        Catalog::from_json(&std::fs::read_to_string(path)?)
    }

    /// The compiled-in catalog.
    pub fn bundled() -> &'static Catalog {
        static CAT: OnceLock<Catalog> = OnceLock::new();
        CAT.get_or_init(|| {
            Catalog::from_json(BUNDLED_JSON).expect("bundled catalog data is valid")
        })
    }

    /// Load a catalog: an explicit path wins, then the `LIECLASS_CATALOG`
    /// environment variable, then the compiled-in data.
    pub fn load(override_path: Option<&Path>) -> Result<Catalog, CatalogError> {
        if let Some(p) = override_path {
            return Catalog::from_path(p);
        }
        if let Ok(p) = std::env::var(CATALOG_ENV) {
            if !p.is_empty() {
                return Catalog::from_path(Path::new(&p));
            }
        }
        Ok(Catalog::bundled().clone())
    }

    fn validate(&self) -> Result<(), CatalogError> {
        let mut seen: Vec<&str> = Vec::new();
        let mut names: Vec<&str> = Vec::new();
        for c in &self.classes {
            names.push(&c.id);
            names.extend(c.aliases.iter().map(|a| a.as_str()));
        }
        names.extend(self.fixed_aliases.iter().map(|a| a.name.as_str()));
        for n in names {
            if seen.contains(&n) {
                return Err(CatalogError::Data(format!("duplicate name `{n}`")));
            }
            seen.push(n);
        }
        for c in &self.classes {
            if c.dim == 0 || c.dim > lieclass_core::tensor::MAX_DIM {
                return Err(CatalogError::Data(format!(
                    "class `{}` has unsupported dimension {}",
                    c.id, c.dim
                )));
            }
            for b in &c.brackets {
                let ok = b.i >= 1
                    && b.j <= c.dim
                    && b.i < b.j
                    && b.terms.iter().all(|(k, _)| *k >= 1 && *k <= c.dim);
                if !ok {
                    return Err(CatalogError::Data(format!(
                        "class `{}` has a bracket outside its dimension",
                        c.id
                    )));
                }
            }
            c.unimodular.holds(&dummy_env(c)).map(|_| ())?;
        }
        for a in &self.fixed_aliases {
            if !self.classes.iter().any(|c| c.id == a.target) {
                return Err(CatalogError::Data(format!(
                    "alias `{}` targets unknown class `{}`",
                    a.name, a.target
                )));
            }
        }
        Ok(())
    }

    pub fn classes(&self) -> &[AlgebraClass] {
        &self.classes
    }

    pub fn get(&self, id: &str) -> Option<&AlgebraClass> {
        self.classes.iter().find(|c| c.id == id)
    }

    /// Resolve a class id or alias, including aliases that fix parameters.
    pub fn resolve(&self, name: &str) -> Option<Resolution<'_>> {
        if let Some(c) = self
            .classes
            .iter()
            .find(|c| c.id == name || c.aliases.iter().any(|a| a == name))
        {
            return Some(Resolution {
                class: c,
                fixed: Env::new(),
            });
        }
        let fa = self.fixed_aliases.iter().find(|a| a.name == name)?;
        let class = self.get(&fa.target)?;
        let fixed = fa
            .params
            .iter()
            .filter_map(|(k, v)| parse_q(v).ok().map(|q| (k.clone(), q)))
            .collect();
        Some(Resolution { class, fixed })
    }

    /// Instantiate by name with positional values for the parameters an
    /// alias did not already fix, in declaration order.
    pub fn instantiate(&self, name: &str, values: &[Q]) -> Result<Instance, CatalogError> {
        let res = self
            .resolve(name)
            .ok_or_else(|| CatalogError::UnknownClass(name.to_string()))?;
        let mut env = res.fixed.clone();
        let free: Vec<&ParamSpec> = res
            .class
            .params
            .iter()
            .filter(|p| !env.contains_key(&p.name))
            .collect();
        if free.len() != values.len() {
            return Err(CatalogError::WrongParamCount {
                class: res.class.id.clone(),
                expected: free.len(),
                got: values.len(),
            });
        }
        for (p, v) in free.iter().zip(values) {
            env.insert(p.name.clone(), v.clone());
        }
        self.finish(res.class, env)
    }

    /// Instantiate by name with named parameter values (alias-fixed values
    /// are merged in and must not be contradicted).
    pub fn instantiate_named(&self, name: &str, values: &Env) -> Result<Instance, CatalogError> {
        let res = self
            .resolve(name)
            .ok_or_else(|| CatalogError::UnknownClass(name.to_string()))?;
        let mut env = res.fixed.clone();
        for (k, v) in values {
            env.insert(k.clone(), v.clone());
        }
        self.finish(res.class, env)
    }

    fn finish(&self, class: &AlgebraClass, env: Env) -> Result<Instance, CatalogError> {
        let tensor = class.instantiate(&env)?;
        debug_assert!(tensor.is_valid());
        Ok(Instance {
            class_id: class.id.clone(),
            params: env,
            tensor,
        })
    }
}

/// Interior sample of the parameter region, used only to type-check
/// constraint expressions at load time.
fn dummy_env(c: &AlgebraClass) -> Env {
    c.params
        .iter()
        .map(|p| (p.name.clone(), lieclass_core::qr(1, 2)))
        .collect()
}

pub use family::family;
