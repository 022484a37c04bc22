use super::assumptions::{check_assumption_13, check_assumption_14, DomainAssumption, ImageAssumption};
use super::eigen::{eigen_free, EigenCertificate, EigenMode, EigenOutcome};
use super::oracle::{oracle_feasible, oracle_nullc, oracle_reach, OracleChain, ReachOracle};
use crate::process::ConvexProcess;
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Property {
    Reachability,
    NullControllability,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum VerdictStatus {
    Holds,
    Fails,
    AssumptionsNotMet,
    Indeterminate,
}

/// Chains computed straight from the graph, attached as evidence only.
#[derive(Clone, Debug)]
pub struct OracleEvidence {
    pub q_max: usize,
    pub reach: ReachOracle,
    pub nullc: OracleChain,
    pub feasible: OracleChain,
    /// `N - R = R^n` on the last computed chain elements. Both chains
    /// under-approximate, so `false` here proves nothing.
    pub null_minus_reach_full: bool,
}

impl OracleEvidence {
    pub fn compute(h: &ConvexProcess, q_max: usize) -> Self {
        let reach = oracle_reach(h, q_max);
        let nullc = oracle_nullc(h, q_max);
        let feasible = oracle_feasible(h, q_max);
        let null_minus_reach_full = nullc
            .last()
            .sum(&reach.chain.last().negated())
            .expect("ambient n")
            .is_full();
        OracleEvidence {
            q_max,
            reach,
            nullc,
            feasible,
            null_minus_reach_full,
        }
    }
}

#[derive(Clone, Debug)]
pub struct AnalysisVerdict {
    pub property: Property,
    pub status: VerdictStatus,
    pub assumption_13: DomainAssumption,
    pub assumption_14: Option<ImageAssumption>,
    /// `R_+ = R^n`, only meaningful for reachability.
    pub r_plus_full: Option<bool>,
    pub eigen: Option<EigenCertificate>,
    /// Why the status is not `Holds`.
    pub reason: Option<String>,
    pub oracle: OracleEvidence,
}

fn eigen_status(cert: &EigenCertificate) -> VerdictStatus {
    match cert.outcome {
        EigenOutcome::Free => VerdictStatus::Holds,
        EigenOutcome::Witness => VerdictStatus::Fails,
        EigenOutcome::Indeterminate => VerdictStatus::Indeterminate,
    }
}

/// Default oracle horizon `2n`.
pub fn default_q_max(n: usize) -> usize {
    (2 * n).max(1)
}

pub fn reachability_verdict(h: &ConvexProcess) -> AnalysisVerdict {
    reachability_verdict_with(h, default_q_max(h.state_dim()))
}

/// Reachability holds iff `R_+ = R^n` and the negative dual has no
/// nonnegative eigenvalue, provided `dom H + R_- = R^n`.
pub fn reachability_verdict_with(h: &ConvexProcess, q_max: usize) -> AnalysisVerdict {
    let a13 = check_assumption_13(h);
    let a14 = check_assumption_14(h);
    let r_plus_full = a14.r_plus.is_full();
    let (x, y) = h.x_y();
    let eigen = eigen_free(&x, &y, EigenMode::NonNegative).expect("X and Y share a shape");
    let (status, reason) = if !a13.holds {
        (
            VerdictStatus::AssumptionsNotMet,
            Some("dom H + R_- is not R^n".to_string()),
        )
    } else if !r_plus_full {
        (VerdictStatus::Fails, Some("R_+ is not R^n".to_string()))
    } else {
        match eigen_status(&eigen) {
            VerdictStatus::Holds => (VerdictStatus::Holds, None),
            VerdictStatus::Fails => (
                VerdictStatus::Fails,
                Some("H^- has a nonnegative eigenvalue".to_string()),
            ),
            s => (s, eigen.note.clone()),
        }
    };
    AnalysisVerdict {
        property: Property::Reachability,
        status,
        assumption_13: a13,
        assumption_14: None,
        r_plus_full: Some(r_plus_full),
        eigen: Some(eigen),
        reason,
        oracle: OracleEvidence::compute(h, q_max),
    }
}

pub fn nullcontrollability_verdict(h: &ConvexProcess) -> AnalysisVerdict {
    nullcontrollability_verdict_with(h, default_q_max(h.state_dim()))
}

/// Under `dom H + R_- = R^n` and `R_+ = im H + N_- = R^n`, null
/// controllability holds iff the negative dual has no positive eigenvalue.
pub fn nullcontrollability_verdict_with(h: &ConvexProcess, q_max: usize) -> AnalysisVerdict {
    let a13 = check_assumption_13(h);
    let a14 = check_assumption_14(h);
    let (x, y) = h.x_y();
    let eigen = eigen_free(&x, &y, EigenMode::Positive).expect("X and Y share a shape");
    let (status, reason) = if !a13.holds {
        (
            VerdictStatus::AssumptionsNotMet,
            Some("dom H + R_- is not R^n".to_string()),
        )
    } else if !a14.holds {
        (
            VerdictStatus::AssumptionsNotMet,
            Some("R_+ = im H + N_- = R^n does not hold".to_string()),
        )
    } else {
        match eigen_status(&eigen) {
            VerdictStatus::Holds => (VerdictStatus::Holds, None),
            VerdictStatus::Fails => (
                VerdictStatus::Fails,
                Some("H^- has a positive eigenvalue".to_string()),
            ),
            s => (s, eigen.note.clone()),
        }
    };
    AnalysisVerdict {
        property: Property::NullControllability,
        status,
        assumption_13: a13,
        assumption_14: Some(a14),
        r_plus_full: None,
        eigen: Some(eigen),
        reason,
        oracle: OracleEvidence::compute(h, q_max),
    }
}
