//! Finite-horizon chains computed directly on the graph cone.

use crate::cone::PolyCone;
use crate::process::ConvexProcess;

/// `chain[q]` is the set after `q` steps.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleChain {
    pub chain: Vec<PolyCone>,
    /// The chain reached a fixed point, so its last element is the limit.
    pub stabilized: bool,
}

impl OracleChain {
    pub fn last(&self) -> &PolyCone {
        self.chain.last().expect("chains start with q = 0")
    }

    /// First `q` whose set is all of `R^n`.
    pub fn first_full(&self) -> Option<usize> {
        self.chain.iter().position(PolyCone::is_full)
    }
}

/// States reachable from the origin in `q` steps.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReachOracle {
    pub chain: OracleChain,
    pub reached_full: bool,
}

fn run(start: PolyCone, q_max: usize, step: impl Fn(&PolyCone) -> PolyCone) -> OracleChain {
    let mut chain = vec![start];
    for _ in 0..q_max {
        let next = step(chain.last().expect("nonempty"));
        if next == *chain.last().expect("nonempty") {
            return OracleChain {
                chain,
                stabilized: true,
            };
        }
        chain.push(next);
    }
    OracleChain {
        chain,
        stabilized: false,
    }
}

/// `R_0 = {0}`, `R_q = H(R_{q-1})`.
pub fn oracle_reach(h: &ConvexProcess, q_max: usize) -> ReachOracle {
    let n = h.state_dim();
    let chain = run(PolyCone::zero(n), q_max, |s| h.apply(s).expect("ambient n"));
    let reached_full = chain.last().is_full();
    ReachOracle {
        chain,
        reached_full,
    }
}

/// `N_0 = {0}`, `N_q = H^-1(N_{q-1})`: states steered to the origin in
/// `q` steps.
pub fn oracle_nullc(h: &ConvexProcess, q_max: usize) -> OracleChain {
    let n = h.state_dim();
    let inv = h.inverse();
    run(PolyCone::zero(n), q_max, |s| inv.apply(s).expect("ambient n"))
}

/// `D_0 = R^n`, `D_q = { x : H(x) meets D_{q-1} }`. A fixed point `D` is
/// certified feasible: every point of `D` has a successor in `D`.
pub fn oracle_feasible(h: &ConvexProcess, q_max: usize) -> OracleChain {
    let n = h.state_dim();
    let inv = h.inverse();
    run(PolyCone::full(n), q_max, |s| inv.apply(s).expect("ambient n"))
}
