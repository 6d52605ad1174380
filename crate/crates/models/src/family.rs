use std::fmt;
use std::sync::Arc;

use group_engine::{Action, ExplicitAction, ObjectModel, Perm, DEFAULT_GROUP_BUDGET};

use crate::{CosetSpace, Johnson, Line4, Line5, Matchings, ModelError, QuasiJohnson, UniformPartitions};

/// A built-in Gelfand pair family or a user-supplied subgroup.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Family {
    Johnson { n: usize, k: usize },
    QuasiJohnson { n: usize, k: usize },
    Line3 { n: usize, k: usize },
    Line4 { n: usize, k: usize },
    Line5 { n: usize, k: usize },
    Uniform2 { k: usize },
    PerfectMatchings { k: usize },
    QuasiPerfectMatchings { k: usize },
    Coset { name: String, degree: usize, generators: Vec<Perm> },
}

/// Selector strings accepted by [`Family::from_selector`].
pub const SELECTORS: &[&str] = &["johnson", "quasi-johnson", "line3", "line4", "line5", "uniform2", "pm", "qpm"];

/// An explicit action together with its canonical coclique, when known.
#[derive(Clone)]
pub struct BuiltFamily {
    pub family: Family,
    pub action: Arc<dyn Action>,
    pub canonical_coclique: Option<Vec<usize>>,
}

fn need(v: Option<usize>, flag: &str, sel: &str) -> Result<usize, ModelError> {
    v.ok_or_else(|| ModelError::Parameter(format!("family {sel} needs --{flag}")))
}

fn explicit<M: ObjectModel + 'static>(
    family: &Family,
    model: M,
    max_domain: usize,
    canonical: impl Fn(&M, &M::Point) -> bool,
) -> Result<BuiltFamily, ModelError> {
    let a = ExplicitAction::new(model, max_domain)?;
    let s = (0..a.len()).filter(|&x| canonical(a.model(), a.point(x))).collect();
    Ok(BuiltFamily { family: family.clone(), action: Arc::new(a), canonical_coclique: Some(s) })
}

impl Family {
    pub fn from_selector(sel: &str, n: Option<usize>, k: Option<usize>) -> Result<Family, ModelError> {
        let f = match sel {
            "johnson" => Family::Johnson { n: need(n, "n", sel)?, k: need(k, "k", sel)? },
            "quasi-johnson" => Family::QuasiJohnson { n: need(n, "n", sel)?, k: need(k, "k", sel)? },
            "line3" => Family::Line3 { n: need(n, "n", sel)?, k: need(k, "k", sel)? },
            "line4" => Family::Line4 { n: need(n, "n", sel)?, k: need(k, "k", sel)? },
            "line5" => Family::Line5 { n: need(n, "n", sel)?, k: need(k, "k", sel)? },
            "uniform2" => Family::Uniform2 { k: need(k, "k", sel)? },
            "pm" => Family::PerfectMatchings { k: need(k, "k", sel)? },
            "qpm" => Family::QuasiPerfectMatchings { k: need(k, "k", sel)? },
            _ => {
                return Err(ModelError::Parameter(format!(
                    "unknown family {sel:?}; expected one of {}",
                    SELECTORS.join(", ")
                )))
            }
        };
        if let (Some(n), Family::Uniform2 { k } | Family::PerfectMatchings { k }) = (n, &f) {
            if n != 2 * k {
                return Err(ModelError::Parameter(format!("family {sel} acts on 2k = {} points, got --n {n}", 2 * k)));
            }
        }
        if let (Some(n), Family::QuasiPerfectMatchings { k }) = (n, &f) {
            if n != 2 * k + 1 {
                return Err(ModelError::Parameter(format!("family {sel} acts on 2k+1 = {} points, got --n {n}", 2 * k + 1)));
            }
        }
        f.validate()?;
        Ok(f)
    }

    /// Checks the parameter exclusions without building the domain.
    pub fn validate(&self) -> Result<(), ModelError> {
        match *self {
            Family::Johnson { n, k } => Johnson::new(n, k).map(drop),
            Family::QuasiJohnson { n, k } => QuasiJohnson::line2(n, k).map(drop),
            Family::Line3 { n, k } => QuasiJohnson::line3(n, k).map(drop),
            Family::Line4 { n, k } => Line4::new(n, k).map(drop),
            Family::Line5 { n, k } => Line5::new(n, k).map(drop),
            Family::Uniform2 { k } => UniformPartitions::new(k).map(drop),
            Family::PerfectMatchings { k } => Matchings::perfect(k).map(drop),
            Family::QuasiPerfectMatchings { k } => Matchings::quasi_perfect(k).map(drop),
            Family::Coset { degree, ref generators, .. } => {
                if degree == 0 || degree > sym_core::MAX_N {
                    return Err(ModelError::Parameter(format!("degree must be in 1..={}", sym_core::MAX_N)));
                }
                match generators.iter().find(|g| g.degree() != degree) {
                    Some(g) => Err(ModelError::Parameter(format!("generator {g} has degree {} not {degree}", g.degree()))),
                    None => Ok(()),
                }
            }
        }
    }

    pub fn degree(&self) -> usize {
        match *self {
            Family::Johnson { n, .. }
            | Family::QuasiJohnson { n, .. }
            | Family::Line3 { n, .. }
            | Family::Line4 { n, .. }
            | Family::Line5 { n, .. } => n,
            Family::Uniform2 { k } | Family::PerfectMatchings { k } => 2 * k,
            Family::QuasiPerfectMatchings { k } => 2 * k + 1,
            Family::Coset { degree, .. } => degree,
        }
    }

    pub fn build(&self, max_domain: usize) -> Result<BuiltFamily, ModelError> {
        self.validate()?;
        match *self {
            Family::Johnson { n, k } => explicit(self, Johnson::new(n, k)?, max_domain, Johnson::in_canonical_coclique),
            Family::QuasiJohnson { n, k } => {
                explicit(self, QuasiJohnson::line2(n, k)?, max_domain, QuasiJohnson::in_canonical_coclique)
            }
            Family::Line3 { n, k } => explicit(self, QuasiJohnson::line3(n, k)?, max_domain, QuasiJohnson::in_canonical_coclique),
            Family::Line4 { n, k } => explicit(self, Line4::new(n, k)?, max_domain, Line4::in_canonical_coclique),
            Family::Line5 { n, k } => explicit(self, Line5::new(n, k)?, max_domain, Line5::in_canonical_coclique),
            Family::Uniform2 { k } => {
                explicit(self, UniformPartitions::new(k)?, max_domain, UniformPartitions::in_canonical_coclique)
            }
            Family::PerfectMatchings { k } => explicit(self, Matchings::perfect(k)?, max_domain, Matchings::in_canonical_coclique),
            Family::QuasiPerfectMatchings { k } => {
                explicit(self, Matchings::quasi_perfect(k)?, max_domain, Matchings::in_canonical_coclique)
            }
            Family::Coset { ref name, degree, ref generators } => {
                let space = CosetSpace::new(name, degree, generators.clone(), DEFAULT_GROUP_BUDGET)?;
                let a = ExplicitAction::new(space, max_domain)?;
                Ok(BuiltFamily { family: self.clone(), action: Arc::new(a), canonical_coclique: None })
            }
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Johnson { n, k } => write!(f, "johnson(n={n}, k={k})"),
            Family::QuasiJohnson { n, k } => write!(f, "quasi-johnson(n={n}, k={k})"),
            Family::Line3 { n, k } => write!(f, "line3(n={n}, k={k})"),
            Family::Line4 { n, k } => write!(f, "line4(n={n}, k={k})"),
            Family::Line5 { n, k } => write!(f, "line5(n={n}, k={k})"),
            Family::Uniform2 { k } => write!(f, "uniform2(k={k})"),
            Family::PerfectMatchings { k } => write!(f, "pm(k={k})"),
            Family::QuasiPerfectMatchings { k } => write!(f, "qpm(k={k})"),
            Family::Coset { name, degree, .. } => write!(f, "cosets({name}, n={degree})"),
        }
    }
}
