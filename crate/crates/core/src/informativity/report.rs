//! Serializable mirrors of the decision and analysis results. Every exact
//! number is written as a string `"p/q"` or `"p"`.

use serde::{Deserialize, Serialize};

use super::{DecisionPath, InformativityReport, NegativeWitness, Verdict};
use crate::analysis::{
    AnalysisVerdict, EigenCertificate, EigenMode, EigenOutcome, EigenWitness, LinIterResult, OracleChain,
    Property, VerdictStatus,
};
use crate::cone::PolyCone;
use crate::exactnum::{format_rational, AlgebraicPoint, Rational, UniPoly};
use crate::linalg::{Mat, Subspace};

fn vec_json(v: &[Rational]) -> Vec<String> {
    v.iter().map(format_rational).collect()
}

pub fn mat_json(m: &Mat) -> Vec<Vec<String>> {
    m.row_vecs().iter().map(|r| vec_json(r)).collect()
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SubspaceJson {
    pub dim: usize,
    pub basis: Vec<Vec<String>>,
}

pub fn subspace_json(s: &Subspace) -> SubspaceJson {
    SubspaceJson {
        dim: s.dim(),
        basis: s.vectors().iter().map(|v| vec_json(v)).collect(),
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct IterationJson {
    pub subspace: SubspaceJson,
    pub steps_to_stabilize: usize,
    pub chain_dims: Vec<usize>,
}

pub fn linear_iteration_json(r: &LinIterResult) -> IterationJson {
    IterationJson {
        subspace: subspace_json(&r.subspace),
        steps_to_stabilize: r.steps_to_stabilize,
        chain_dims: r.chain.iter().map(Subspace::dim).collect(),
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ConeJson {
    pub full: bool,
    pub generators: Vec<Vec<String>>,
    pub inequalities: Vec<Vec<String>>,
}

pub fn cone_json(c: &PolyCone) -> ConeJson {
    ConeJson {
        full: c.is_full(),
        generators: c.canonical_generators().iter().map(|v| vec_json(v)).collect(),
        inequalities: c.canonical_inequalities().iter().map(|v| vec_json(v)).collect(),
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PolyJson {
    pub text: String,
    /// Lowest degree first.
    pub coefficients: Vec<String>,
}

fn poly_json(p: &UniPoly) -> PolyJson {
    PolyJson {
        text: p.to_string(),
        coefficients: vec_json(p.coeffs()),
    }
}

/// A rational `value`, or the unique root of `polynomial` in `interval`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PointJson {
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub value: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub polynomial: Option<PolyJson>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub interval: Option<[String; 2]>,
    pub approx: f64,
}

pub fn point_json(p: &AlgebraicPoint) -> PointJson {
    match p {
        AlgebraicPoint::Rational(r) => PointJson {
            value: Some(format_rational(r)),
            polynomial: None,
            interval: None,
            approx: p.approx(),
        },
        AlgebraicPoint::Algebraic { defining, lo, hi } => PointJson {
            value: None,
            polynomial: Some(poly_json(defining)),
            interval: Some([format_rational(lo), format_rational(hi)]),
            approx: p.approx(),
        },
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TestedJson {
    pub lambda: PointJson,
    pub full: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum WitnessJson {
    /// `xi` is exact; for an irrational `lambda` its entries are polynomials
    /// in `lambda`.
    Eigenpair {
        lambda: PointJson,
        #[serde(skip_serializing_if = "Option::is_none", default)]
        xi: Option<Vec<String>>,
        #[serde(skip_serializing_if = "Option::is_none", default)]
        xi_polynomials: Option<Vec<PolyJson>>,
    },
    UnreachableDirection { xi: Vec<String> },
}

fn eigen_witness_json(w: &EigenWitness) -> WitnessJson {
    match w {
        EigenWitness::Rational { lambda, xi } => WitnessJson::Eigenpair {
            lambda: point_json(&AlgebraicPoint::rational(lambda.clone())),
            xi: Some(vec_json(xi)),
            xi_polynomials: None,
        },
        EigenWitness::Algebraic { lambda, xi } => WitnessJson::Eigenpair {
            lambda: point_json(lambda),
            xi: None,
            xi_polynomials: Some(xi.iter().map(poly_json).collect()),
        },
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EigenJson {
    pub mode: EigenMode,
    pub outcome: EigenOutcome,
    pub critical_points: Vec<PointJson>,
    pub tested_points: Vec<TestedJson>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<WitnessJson>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub note: Option<String>,
}

impl From<&EigenCertificate> for EigenJson {
    fn from(c: &EigenCertificate) -> Self {
        EigenJson {
            mode: c.mode,
            outcome: c.outcome,
            critical_points: c.critical_points.iter().map(point_json).collect(),
            tested_points: c
                .tested_points
                .iter()
                .map(|t| TestedJson {
                    lambda: point_json(&t.lambda),
                    full: t.full,
                })
                .collect(),
            witness: c.witness.as_ref().map(eigen_witness_json),
            note: c.note.clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ChainJson {
    pub stabilized: bool,
    /// First step at which the set is all of `R^n`.
    pub full_at: Option<usize>,
    pub chain: Vec<ConeJson>,
}

fn chain_json(c: &OracleChain) -> ChainJson {
    ChainJson {
        stabilized: c.stabilized,
        full_at: c.first_full(),
        chain: c.chain.iter().map(cone_json).collect(),
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MatricesJson {
    #[serde(rename = "X")]
    pub x: Vec<Vec<String>>,
    #[serde(rename = "Y")]
    pub y: Vec<Vec<String>>,
    #[serde(rename = "Z")]
    pub z: Vec<Vec<String>>,
    #[serde(rename = "W")]
    pub w: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DomainHypothesisJson {
    pub holds: bool,
    pub sum: ConeJson,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ImageHypothesisJson {
    pub holds: bool,
    pub r_plus_full: bool,
    pub image_sum_full: bool,
    pub sum: ConeJson,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SubspacesJson {
    pub r_plus: IterationJson,
    pub r_minus: IterationJson,
    pub n_plus: IterationJson,
    pub n_minus: IterationJson,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct InformativityJson {
    pub property: Property,
    pub verdict: Verdict,
    pub path: DecisionPath,
    pub n: usize,
    pub matrices: MatricesJson,
    pub assumption_13: DomainHypothesisJson,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub assumption_14: Option<ImageHypothesisJson>,
    pub subspaces: SubspacesJson,
    pub eigen: EigenJson,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub oracle: Option<ChainJson>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<WitnessJson>,
}

impl From<&InformativityReport> for InformativityJson {
    fn from(r: &InformativityReport) -> Self {
        let m = &r.matrices;
        InformativityJson {
            property: r.property,
            verdict: r.verdict,
            path: r.path,
            n: r.n,
            matrices: MatricesJson {
                x: mat_json(&m.x),
                y: mat_json(&m.y),
                z: mat_json(&m.z),
                w: mat_json(&m.w),
            },
            assumption_13: DomainHypothesisJson {
                holds: r.assumption_13.holds,
                sum: cone_json(&r.assumption_13.sum),
            },
            assumption_14: r.assumption_14.as_ref().map(|a| ImageHypothesisJson {
                holds: a.holds,
                r_plus_full: a.r_plus_full,
                image_sum_full: a.image_sum_full,
                sum: cone_json(&a.sum),
            }),
            subspaces: SubspacesJson {
                r_plus: linear_iteration_json(&r.subspaces.r_plus),
                r_minus: linear_iteration_json(&r.subspaces.r_minus),
                n_plus: linear_iteration_json(&r.subspaces.n_plus),
                n_minus: linear_iteration_json(&r.subspaces.n_minus),
            },
            eigen: (&r.eigen).into(),
            oracle: r.oracle.as_ref().map(|o| chain_json(&o.chain)),
            witness: r.witness.as_ref().map(|w| match w {
                NegativeWitness::Eigenpair(e) => eigen_witness_json(e),
                NegativeWitness::UnreachableDirection(xi) => {
                    WitnessJson::UnreachableDirection { xi: vec_json(xi) }
                }
            }),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DomainAssumptionJson {
    pub holds: bool,
    pub domain: ConeJson,
    pub r_minus: IterationJson,
    pub sum: ConeJson,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ImageAssumptionJson {
    pub holds: bool,
    pub r_plus: IterationJson,
    pub n_minus: IterationJson,
    pub image: ConeJson,
    pub sum: ConeJson,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct OracleJson {
    pub q_max: usize,
    pub reach: ChainJson,
    pub nullc: ChainJson,
    pub feasible: ChainJson,
    pub null_minus_reach_full: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AnalysisJson {
    pub property: Property,
    pub status: VerdictStatus,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub reason: Option<String>,
    pub assumption_13: DomainAssumptionJson,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub assumption_14: Option<ImageAssumptionJson>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub r_plus_full: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub eigen: Option<EigenJson>,
    pub oracle: OracleJson,
}

impl From<&AnalysisVerdict> for AnalysisJson {
    fn from(v: &AnalysisVerdict) -> Self {
        let a13 = &v.assumption_13;
        AnalysisJson {
            property: v.property,
            status: v.status,
            reason: v.reason.clone(),
            assumption_13: DomainAssumptionJson {
                holds: a13.holds,
                domain: cone_json(&a13.domain),
                r_minus: linear_iteration_json(&a13.r_minus),
                sum: cone_json(&a13.sum),
            },
            assumption_14: v.assumption_14.as_ref().map(|a| ImageAssumptionJson {
                holds: a.holds,
                r_plus: linear_iteration_json(&a.r_plus),
                n_minus: linear_iteration_json(&a.n_minus),
                image: cone_json(&a.image),
                sum: cone_json(&a.sum),
            }),
            r_plus_full: v.r_plus_full,
            eigen: v.eigen.as_ref().map(Into::into),
            oracle: OracleJson {
                q_max: v.oracle.q_max,
                reach: chain_json(&v.oracle.reach.chain),
                nullc: chain_json(&v.oracle.nullc),
                feasible: chain_json(&v.oracle.feasible),
                null_minus_reach_full: v.oracle.null_minus_reach_full,
            },
        }
    }
}
