//! End-to-end verification of a theorem's conclusion on a concrete
//! colored family: exact hypothesis check, checker condition, and a
//! certified transversal search per color.

use serde::{Deserialize, Serialize};

use crate::checkers::{run_checker, TheoremReport, TheoremSpec};
use crate::error::{Error, Result};

use super::search::find_flat_transversal;
use super::{
    check_all_representatives_semintersecting, check_heterochromatic, ColoredFamily,
    FlatCandidate,
};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TransversalWitness {
    pub color: usize,
    pub flat: FlatCandidate,
}

/// Outcome of [`verify_theorem_on_instance`]. A missing transversal with
/// `search_exhausted = true` means the budgeted search gave up; it never
/// claims a counterexample.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InstanceReport {
    /// Which hypothesis was tested: "heterochromatic" or "semintersecting".
    pub hypothesis: String,
    pub hypothesis_ok: bool,
    pub condition: TheoremReport,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub transversal: Option<TransversalWitness>,
    pub search_exhausted: bool,
    pub notes: String,
}

struct ExpectedShape {
    dim: usize,
    counts: Vec<usize>,
    rhos: Vec<usize>,
    semi: bool,
}

fn expected_shape(spec: &TheoremSpec) -> Result<ExpectedShape> {
    let shape = match spec {
        TheoremSpec::ColorfulTrans { d, m, rho, k } => {
            let colors = (*d as usize).saturating_sub(*m as usize) + 1;
            ExpectedShape {
                dim: *d as usize,
                counts: vec![(*rho + *k + 1) as usize; colors],
                rhos: vec![*rho as usize; colors],
                semi: false,
            }
        }
        TheoremSpec::ColorfulTransMulti { d, specs, .. }
        | TheoremSpec::ComplexTrans { d, specs, .. } => ExpectedShape {
            dim: *d as usize,
            counts: specs.iter().map(|s| s.count as usize).collect(),
            rhos: specs.iter().map(|s| s.rho as usize).collect(),
            semi: false,
        },
        TheoremSpec::SemiTrans { d, specs, .. } => ExpectedShape {
            dim: *d as usize,
            counts: specs.iter().map(|s| s.count as usize).collect(),
            rhos: specs.iter().map(|s| s.rho as usize).collect(),
            semi: true,
        },
        TheoremSpec::IneqCorollary { d, k, rhos } => ExpectedShape {
            dim: *d as usize,
            counts: rhos.iter().map(|&r| (r + k + 1) as usize).collect(),
            rhos: rhos.iter().map(|&r| r as usize).collect(),
            semi: false,
        },
        TheoremSpec::SemiIneq { d, k, rhos } => ExpectedShape {
            dim: *d as usize,
            counts: rhos.iter().map(|&r| (r + k + 1) as usize).collect(),
            rhos: rhos.iter().map(|&r| r as usize).collect(),
            semi: true,
        },
        TheoremSpec::LsTrans { n, rho } => {
            if *n < 2 || *rho < 1 {
                return Err(Error::BadInput(
                    "ls_trans instance needs n >= 2 and rho >= 1".into(),
                ));
            }
            ExpectedShape {
                dim: (*n + *rho) as usize,
                counts: vec![(*rho + 2) as usize; *n as usize],
                rhos: vec![*rho as usize; *n as usize],
                semi: false,
            }
        }
        TheoremSpec::SemiLs { n, rho } => {
            if *n < 3 || *rho < 2 {
                return Err(Error::BadInput(
                    "semi_ls instance needs n >= 3 and rho >= 2".into(),
                ));
            }
            ExpectedShape {
                dim: (*n + *rho - 1) as usize,
                counts: vec![(*rho + 2) as usize; *n as usize],
                rhos: vec![*rho as usize; *n as usize],
                semi: true,
            }
        }
        TheoremSpec::LinearMap { eta, d } => {
            let l = eta.len() as u32;
            if eta.iter().any(|&n| n < l) {
                return Err(Error::BadInput("eta entries must be at least l".into()));
            }
            ExpectedShape {
                dim: *d as usize,
                counts: eta.iter().map(|&n| n as usize).collect(),
                rhos: eta.iter().map(|&n| (n - l) as usize).collect(),
                semi: false,
            }
        }
    };
    Ok(shape)
}

/// Verifies the hypothesis exactly, evaluates the theorem's condition,
/// and searches each color for a certified ρ_i-transversal (first hit
/// wins). The search runs only when both the hypothesis and the
/// condition hold.
pub fn verify_theorem_on_instance(
    fam: &ColoredFamily,
    spec: &TheoremSpec,
    budget: u64,
) -> Result<InstanceReport> {
    let shape = expected_shape(spec)?;
    if fam.dim() != shape.dim {
        return Err(Error::DimensionMismatch {
            expected: shape.dim,
            got: fam.dim(),
        });
    }
    if fam.num_colors() != shape.counts.len() {
        return Err(Error::BadInput(format!(
            "family has {} colors, theorem expects {}",
            fam.num_colors(),
            shape.counts.len()
        )));
    }
    for (c, (&want, class)) in shape.counts.iter().zip(fam.colors()).enumerate() {
        if class.len() != want {
            return Err(Error::BadInput(format!(
                "color {c} has {} sets, theorem expects {want}",
                class.len()
            )));
        }
    }
    if shape.rhos.iter().any(|&r| r >= shape.dim) {
        return Err(Error::OutOfRange {
            what: "per-color transversal dimension",
            value: *shape.rhos.iter().max().expect("nonempty") as i64,
            min: 0,
            max: shape.dim as i64 - 1,
        });
    }

    let (hypothesis, hypothesis_ok) = if shape.semi {
        (
            "semintersecting".to_string(),
            check_all_representatives_semintersecting(fam)?,
        )
    } else {
        ("heterochromatic".to_string(), check_heterochromatic(fam)?)
    };

    let condition = run_checker(spec)?;

    let mut transversal = None;
    let mut notes = String::new();
    if !hypothesis_ok {
        notes = format!("hypothesis ({hypothesis}) fails; search skipped");
    } else if !condition.applies {
        notes = "cohomological/arithmetic condition does not apply; search skipped".to_string();
    } else {
        for (color, class) in fam.colors().iter().enumerate() {
            if let Some(flat) = find_flat_transversal(class, shape.rhos[color], budget)? {
                transversal = Some(TransversalWitness { color, flat });
                break;
            }
        }
        if transversal.is_none() {
            notes = "search exhausted within budget; no conclusion".to_string();
        }
    }
    let search_exhausted = hypothesis_ok && condition.applies && transversal.is_none();
    if let Some(w) = &transversal {
        notes = format!(
            "certified {}-transversal for color {}",
            w.flat.dim_flat(),
            w.color
        );
    }
    Ok(InstanceReport {
        hypothesis,
        hypothesis_ok,
        condition,
        transversal,
        search_exhausted,
        notes,
    })
}
