use crate::error::{check_dim, Error, Result};
use crate::linalg::{map_image, preimage, Mat, Subspace};
use crate::process::LinearProcess;

/// Order of the two steps of a matrix-pair map `S -> Q(P^-1 S)` or
/// `S -> P^-1(Q S)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Composition {
    /// `S -> Q (P^-1 S)`, e.g. `Y X^-1` with `P = X`, `Q = Y`.
    PreimageThenImage,
    /// `S -> P^-1 (Q S)`, e.g. `W^-1 Z` with `P = W`, `Q = Z`.
    ImageThenPreimage,
}

/// A monotone subspace chain and its limit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinIterResult {
    pub subspace: Subspace,
    /// Index of the first chain element equal to the limit.
    pub steps_to_stabilize: usize,
    /// Strictly monotone prefix of the chain, ending at `subspace`.
    pub chain: Vec<Subspace>,
}

impl LinIterResult {
    pub fn is_full(&self) -> bool {
        self.subspace.is_full()
    }
}

fn iterate(
    start: Subspace,
    limit: usize,
    mut step: impl FnMut(&Subspace) -> Result<Subspace>,
) -> Result<LinIterResult> {
    let mut chain = vec![start];
    // Each strict step changes the dimension, so `limit + 1` steps always
    // suffice; the final comparison detects the fixed point.
    for _ in 0..=limit {
        let cur = chain.last().expect("nonempty");
        let next = step(cur)?;
        if next == *cur {
            let steps = chain.len() - 1;
            return Ok(LinIterResult {
                subspace: next,
                steps_to_stabilize: steps,
                chain,
            });
        }
        chain.push(next);
    }
    Err(Error::InvalidInput(
        "subspace iteration failed to stabilize".to_string(),
    ))
}

/// Iterates the forward map from `{0}` in `R^n` until it stabilizes.
pub fn linproc_forward_iterate(
    p: &Mat,
    q: &Mat,
    variant: Composition,
    n: usize,
) -> Result<LinIterResult> {
    match variant {
        Composition::PreimageThenImage => {
            check_dim("forward iterate (P rows)", n, p.rows())?;
            check_dim("forward iterate (Q rows)", n, q.rows())?;
            check_dim("forward iterate (P, Q columns)", p.cols(), q.cols())?;
            iterate(Subspace::trivial(n), n, |s| map_image(q, &preimage(p, s)?))
        }
        Composition::ImageThenPreimage => {
            check_dim("forward iterate (P columns)", n, p.cols())?;
            check_dim("forward iterate (Q columns)", n, q.cols())?;
            check_dim("forward iterate (P, Q rows)", p.rows(), q.rows())?;
            iterate(Subspace::trivial(n), n, |s| preimage(p, &map_image(q, s)?))
        }
    }
}

/// The same iteration with the roles of `P` and `Q` exchanged, so that
/// `(X, Y)` gives `X Y^-1` and `(W, Z)` gives `Z^-1 W`.
pub fn linproc_backward_iterate(
    p: &Mat,
    q: &Mat,
    variant: Composition,
    n: usize,
) -> Result<LinIterResult> {
    linproc_forward_iterate(q, p, variant, n)
}

/// `R(L) = L^n(0)`
pub fn reachable_subspace(l: &LinearProcess) -> LinIterResult {
    let n = l.state_dim();
    iterate(Subspace::trivial(n), n, |s| l.apply(s)).expect("dimensions agree")
}

/// `N(L) = L^-n(0)`
pub fn null_controllable_subspace(l: &LinearProcess) -> LinIterResult {
    reachable_subspace(&l.inverse())
}

/// `F(L) = L^-n(R^n)`; the chain here is decreasing and starts at `R^n`.
pub fn feasible_subspace(l: &LinearProcess) -> LinIterResult {
    let n = l.state_dim();
    let inv = l.inverse();
    iterate(Subspace::full(n), n, |s| inv.apply(s)).expect("dimensions agree")
}
