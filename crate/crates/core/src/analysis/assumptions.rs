use super::linproc::{null_controllable_subspace, reachable_subspace, LinIterResult};
use crate::cone::PolyCone;
use crate::process::ConvexProcess;

/// `dom H + R_- = R^n`
#[derive(Clone, Debug)]
pub struct DomainAssumption {
    pub holds: bool,
    pub domain: PolyCone,
    pub r_minus: LinIterResult,
    pub sum: PolyCone,
}

/// `R_+ = im H + N_- = R^n`
#[derive(Clone, Debug)]
pub struct ImageAssumption {
    pub holds: bool,
    pub r_plus: LinIterResult,
    pub n_minus: LinIterResult,
    pub image: PolyCone,
    pub sum: PolyCone,
}

pub fn check_assumption_13(h: &ConvexProcess) -> DomainAssumption {
    let domain = h.domain();
    let r_minus = reachable_subspace(&h.minimal_linear());
    let sum = domain
        .sum_subspace(&r_minus.subspace)
        .expect("both live in R^n");
    DomainAssumption {
        holds: sum.is_full(),
        domain,
        r_minus,
        sum,
    }
}

pub fn check_assumption_14(h: &ConvexProcess) -> ImageAssumption {
    let image = h.image_set();
    let r_plus = reachable_subspace(&h.maximal_linear());
    let n_minus = null_controllable_subspace(&h.minimal_linear());
    let sum = image
        .sum_subspace(&n_minus.subspace)
        .expect("both live in R^n");
    ImageAssumption {
        holds: r_plus.is_full() && sum.is_full(),
        r_plus,
        n_minus,
        image,
        sum,
    }
}
