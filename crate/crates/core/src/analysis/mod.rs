//! Reachable, null-controllable and feasible sets, the standing
//! assumptions, eigenvalue certificates for the dual process, and verdicts.

mod assumptions;
mod eigen;
mod linproc;
mod oracle;
mod verdict;

pub use assumptions::{check_assumption_13, check_assumption_14, DomainAssumption, ImageAssumption};
pub use eigen::{eigen_free, EigenCertificate, EigenMode, EigenOutcome, EigenWitness, TestedPoint};
pub use linproc::{
    feasible_subspace, linproc_backward_iterate, linproc_forward_iterate, null_controllable_subspace,
    reachable_subspace, Composition, LinIterResult,
};
pub use oracle::{oracle_feasible, oracle_nullc, oracle_reach, OracleChain, ReachOracle};
pub use verdict::{
    default_q_max, nullcontrollability_verdict, nullcontrollability_verdict_with, reachability_verdict,
    reachability_verdict_with, AnalysisVerdict, OracleEvidence, Property, VerdictStatus,
};
