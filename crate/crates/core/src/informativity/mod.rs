//! Informativity of exact data: does every process consistent with the
//! measurements have the property?

mod report;

pub use report::{
    cone_json, linear_iteration_json, mat_json, point_json, subspace_json, AnalysisJson, ChainJson,
    ConeJson, EigenJson, InformativityJson, IterationJson, PointJson, PolyJson, SubspaceJson,
    WitnessJson,
};

use crate::analysis::{
    default_q_max, eigen_free, linproc_backward_iterate, linproc_forward_iterate, oracle_reach,
    Composition, EigenCertificate, EigenMode, EigenOutcome, EigenWitness, LinIterResult, Property,
    ReachOracle,
};
use crate::cone::PolyCone;
use crate::error::{check_dim, Result};
use crate::exactnum::Rational;
use crate::linalg::Mat;
use crate::process::{ConvexProcess, DataSet};
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    Informative,
    NotInformative,
    InconclusiveAssumptions,
    Indeterminate,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum DecisionPath {
    Theorem,
    OracleFallback,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecideOptions {
    /// Try the finite-horizon reachability oracle when the hypothesis fails.
    pub fallback: bool,
    /// Oracle horizon; `None` means `2n`.
    pub q_max: Option<usize>,
}

impl Default for DecideOptions {
    fn default() -> Self {
        DecideOptions {
            fallback: true,
            q_max: None,
        }
    }
}

/// Evidence that a consistent process lacks the property.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NegativeWitness {
    /// `xi != 0` with `xi^T (Y - lambda X) <= 0`: an eigenpair of `H_D^-`.
    Eigenpair(EigenWitness),
    /// `xi != 0` orthogonal to `(Y X^-1)^n {0}`: no process in the data
    /// class reaches beyond `xi^perp`.
    UnreachableDirection(Vec<Rational>),
}

/// The closed-form data matrices of `H_D`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DataMatrices {
    pub x: Mat,
    pub y: Mat,
    /// `graph H_D = { (x, y) : Z x >= W y }`
    pub z: Mat,
    pub w: Mat,
}

/// The four subspace iterations of the minimal and maximal linear parts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DataSubspaces {
    /// `(Y X^-1)^n {0}`
    pub r_plus: LinIterResult,
    /// `(W^-1 Z)^n {0}`
    pub r_minus: LinIterResult,
    /// `(X Y^-1)^n {0}`
    pub n_plus: LinIterResult,
    /// `(Z^-1 W)^n {0}`
    pub n_minus: LinIterResult,
}

/// `X R_+^T + (W^-1 Z)^n {0} = R^n`
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DomainHypothesis {
    pub holds: bool,
    pub sum: PolyCone,
}

/// `(Y X^-1)^n {0} = Y R_+^T + (Z^-1 W)^n {0} = R^n`
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ImageHypothesis {
    pub holds: bool,
    pub r_plus_full: bool,
    pub image_sum_full: bool,
    pub sum: PolyCone,
}

#[derive(Clone, Debug)]
pub struct InformativityReport {
    pub property: Property,
    pub verdict: Verdict,
    pub path: DecisionPath,
    pub n: usize,
    pub matrices: DataMatrices,
    pub assumption_13: DomainHypothesis,
    pub assumption_14: Option<ImageHypothesis>,
    pub subspaces: DataSubspaces,
    pub eigen: EigenCertificate,
    pub oracle: Option<ReachOracle>,
    pub witness: Option<NegativeWitness>,
}

struct Prepared {
    n: usize,
    matrices: DataMatrices,
    subspaces: DataSubspaces,
    a13: DomainHypothesis,
    process: ConvexProcess,
}

fn prepare(d: &DataSet) -> Result<Prepared> {
    d.require_nonempty()?;
    let n = d.n();
    let process = ConvexProcess::from_data(d);
    let (x, y) = (d.x_matrix(), d.y_matrix());
    let (z, w) = process.z_w();
    let subspaces = DataSubspaces {
        r_plus: linproc_forward_iterate(&x, &y, Composition::PreimageThenImage, n)?,
        r_minus: linproc_forward_iterate(&w, &z, Composition::ImageThenPreimage, n)?,
        n_plus: linproc_backward_iterate(&x, &y, Composition::PreimageThenImage, n)?,
        n_minus: linproc_backward_iterate(&w, &z, Composition::ImageThenPreimage, n)?,
    };
    let sum = PolyCone::from_matrix_columns(&x).sum_subspace(&subspaces.r_minus.subspace)?;
    let a13 = DomainHypothesis {
        holds: sum.is_full(),
        sum,
    };
    Ok(Prepared {
        n,
        matrices: DataMatrices { x, y, z, w },
        subspaces,
        a13,
        process,
    })
}

/// Reachability informativity: decided exactly when
/// `X R_+^T + (W^-1 Z)^n {0} = R^n`; otherwise, if enabled, by checking
/// whether `H_D` itself reaches `R^n` within the oracle horizon (every
/// trajectory of `H_D` is one of every consistent process).
pub fn decide_reachability(d: &DataSet, opts: &DecideOptions) -> Result<InformativityReport> {
    let p = prepare(d)?;
    let eigen = eigen_free(&p.matrices.x, &p.matrices.y, EigenMode::NonNegative)?;
    let mut oracle = None;
    let mut witness = None;
    let (verdict, path) = if p.a13.holds {
        let v = if !p.subspaces.r_plus.is_full() {
            let xi = p.subspaces.r_plus.subspace.orthogonal_complement().vectors()[0].clone();
            witness = Some(NegativeWitness::UnreachableDirection(xi));
            Verdict::NotInformative
        } else {
            eigen_verdict(&eigen, &mut witness)
        };
        (v, DecisionPath::Theorem)
    } else if opts.fallback {
        let q_max = opts.q_max.unwrap_or_else(|| default_q_max(p.n));
        let o = oracle_reach(&p.process, q_max);
        let v = if o.reached_full {
            Verdict::Informative
        } else {
            Verdict::InconclusiveAssumptions
        };
        oracle = Some(o);
        (v, DecisionPath::OracleFallback)
    } else {
        (Verdict::InconclusiveAssumptions, DecisionPath::Theorem)
    };
    Ok(InformativityReport {
        property: Property::Reachability,
        verdict,
        path,
        n: p.n,
        matrices: p.matrices,
        assumption_13: p.a13,
        assumption_14: None,
        subspaces: p.subspaces,
        eigen,
        oracle,
        witness,
    })
}

/// Null-controllability informativity, decided only under both standing
/// hypotheses; there is no fallback.
pub fn decide_nullcontrollability(d: &DataSet, _opts: &DecideOptions) -> Result<InformativityReport> {
    let p = prepare(d)?;
    let eigen = eigen_free(&p.matrices.x, &p.matrices.y, EigenMode::Positive)?;
    let sum = PolyCone::from_matrix_columns(&p.matrices.y).sum_subspace(&p.subspaces.n_minus.subspace)?;
    let r_plus_full = p.subspaces.r_plus.is_full();
    let image_sum_full = sum.is_full();
    let a14 = ImageHypothesis {
        holds: r_plus_full && image_sum_full,
        r_plus_full,
        image_sum_full,
        sum,
    };
    let mut witness = None;
    let verdict = if p.a13.holds && a14.holds {
        eigen_verdict(&eigen, &mut witness)
    } else {
        Verdict::InconclusiveAssumptions
    };
    Ok(InformativityReport {
        property: Property::NullControllability,
        verdict,
        path: DecisionPath::Theorem,
        n: p.n,
        matrices: p.matrices,
        assumption_13: p.a13,
        assumption_14: Some(a14),
        subspaces: p.subspaces,
        eigen,
        oracle: None,
        witness,
    })
}

fn eigen_verdict(eigen: &EigenCertificate, witness: &mut Option<NegativeWitness>) -> Verdict {
    match eigen.outcome {
        EigenOutcome::Free => Verdict::Informative,
        EigenOutcome::Witness => {
            *witness = eigen.witness.clone().map(NegativeWitness::Eigenpair);
            Verdict::NotInformative
        }
        EigenOutcome::Indeterminate => Verdict::Indeterminate,
    }
}

/// Every measured pair lies in `graph h`.
pub fn consistency_check(d: &DataSet, h: &ConvexProcess) -> Result<bool> {
    check_dim("consistency_check", d.n(), h.state_dim())?;
    for (x, y) in d.pairs() {
        if !h.contains_pair(x, y)? {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests;
