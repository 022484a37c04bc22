//! Incremental double description: generators of `{ x : A x >= 0 }`.
//!
//! The lineality space is carried as an explicit basis. A halfspace that
//! cuts the current lineality space turns one lineality direction into a
//! ray; any other halfspace is inserted by the usual positive/negative ray
//! pairing, where two rays are combined only when adjacent (the processed
//! constraints tight at both have rank `n - dim(lineality) - 2`).

use std::cmp::Ordering;

use num_traits::{Signed, Zero};

use crate::exactnum::{dot, is_zero_vec, primitive, Rational};
use crate::linalg::{Mat, Subspace};

struct Ray {
    v: Vec<Rational>,
    /// `tight[i]` iff processed constraint `i` vanishes at `v`.
    tight: Vec<bool>,
}

/// Order used for every generator / inequality list: sparsest first, then
/// lexicographically descending.
pub(crate) fn canonical_cmp(a: &[Rational], b: &[Rational]) -> Ordering {
    let nnz = |v: &[Rational]| v.iter().filter(|x| !x.is_zero()).count();
    nnz(a).cmp(&nnz(b)).then_with(|| b.cmp(a))
}

/// Primitive, nonzero, deduplicated and canonically ordered.
pub(crate) fn normalize(vectors: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let mut out: Vec<Vec<Rational>> = vectors
        .iter()
        .filter(|v| !is_zero_vec(v))
        .map(|v| primitive(v))
        .collect();
    out.sort_by(|a, b| canonical_cmp(a, b));
    out.dedup();
    out
}

/// Minimal generating set of `{ x in R^n : a . x >= 0 for all rows a }`:
/// one ray per extreme ray modulo the lineality space (projected onto its
/// orthogonal complement) plus `+-` each canonical lineality basis vector.
pub(crate) fn halfspaces_to_generators(n: usize, rows: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let m = rows.len();
    let mut lineality: Vec<Vec<Rational>> = Mat::identity(n).row_vecs();
    let mut rays: Vec<Ray> = Vec::new();

    for (idx, a) in rows.iter().enumerate() {
        if is_zero_vec(a) {
            for r in &mut rays {
                r.tight[idx] = true;
            }
            continue;
        }
        if let Some(pos) = lineality.iter().position(|l| !dot(a, l).is_zero()) {
            let mut l0 = lineality.remove(pos);
            let mut al0 = dot(a, &l0);
            if al0.is_negative() {
                l0 = l0.iter().map(|x| -x).collect();
                al0 = -al0;
            }
            for l in &mut lineality {
                let f = dot(a, l) / &al0;
                if !f.is_zero() {
                    for (x, y) in l.iter_mut().zip(&l0) {
                        *x -= &f * y;
                    }
                }
            }
            for r in &mut rays {
                let f = dot(a, &r.v) / &al0;
                if !f.is_zero() {
                    for (x, y) in r.v.iter_mut().zip(&l0) {
                        *x -= &f * y;
                    }
                    r.v = primitive(&r.v);
                }
                r.tight[idx] = true;
            }
            let mut tight = vec![false; m];
            // Earlier constraints vanish on the whole lineality space.
            for t in tight.iter_mut().take(idx) {
                *t = true;
            }
            rays.push(Ray {
                v: primitive(&l0),
                tight,
            });
            continue;
        }

        let values: Vec<Rational> = rays.iter().map(|r| dot(a, &r.v)).collect();
        let target_rank = (n - lineality.len()) as isize - 2;
        let mut next: Vec<Ray> = Vec::new();
        let (mut pos, mut neg) = (Vec::new(), Vec::new());
        for (i, val) in values.iter().enumerate() {
            if val.is_positive() {
                pos.push(i);
            } else if val.is_negative() {
                neg.push(i);
            }
        }
        if target_rank >= 0 {
            for &p in &pos {
                for &q in &neg {
                    let common: Vec<usize> = (0..idx)
                        .filter(|&i| rays[p].tight[i] && rays[q].tight[i])
                        .collect();
                    if (common.len() as isize) < target_rank {
                        continue;
                    }
                    let sub: Vec<Vec<Rational>> = common.iter().map(|&i| rows[i].clone()).collect();
                    let rank = if sub.is_empty() {
                        0
                    } else {
                        Mat::from_rows(n, sub).expect("row length n").rank()
                    };
                    if rank as isize != target_rank {
                        continue;
                    }
                    let ap = &values[p];
                    let aq = &values[q];
                    let v: Vec<Rational> = rays[q]
                        .v
                        .iter()
                        .zip(&rays[p].v)
                        .map(|(rq, rp)| ap * rq - aq * rp)
                        .collect();
                    let mut tight: Vec<bool> = (0..m)
                        .map(|i| i < idx && rays[p].tight[i] && rays[q].tight[i])
                        .collect();
                    tight[idx] = true;
                    next.push(Ray {
                        v: primitive(&v),
                        tight,
                    });
                }
            }
        }
        let mut kept: Vec<Ray> = Vec::new();
        for (i, mut r) in rays.into_iter().enumerate() {
            if values[i].is_negative() {
                continue;
            }
            if values[i].is_zero() {
                r.tight[idx] = true;
            }
            kept.push(r);
        }
        kept.extend(next);
        rays = kept;
    }

    let lin = Subspace::span(n, &lineality).expect("vectors of length n");
    let mut out: Vec<Vec<Rational>> = rays
        .iter()
        .map(|r| primitive(&lin.project_out(&r.v)))
        .filter(|v| !is_zero_vec(v))
        .collect();
    for b in lin.vectors() {
        out.push(b.clone());
        out.push(b.iter().map(|x| -x).collect());
    }
    normalize(&out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::int;

    fn v(xs: &[i64]) -> Vec<Rational> {
        xs.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn orthant() {
        let g = halfspaces_to_generators(2, &[v(&[1, 0]), v(&[0, 1])]);
        assert_eq!(g, vec![v(&[1, 0]), v(&[0, 1])]);
    }

    #[test]
    fn no_constraints_is_everything() {
        let g = halfspaces_to_generators(2, &[]);
        assert_eq!(g, vec![v(&[1, 0]), v(&[0, 1]), v(&[0, -1]), v(&[-1, 0])]);
    }

    #[test]
    fn opposing_constraints_give_zero_cone() {
        let g = halfspaces_to_generators(1, &[v(&[1]), v(&[-1])]);
        assert!(g.is_empty());
    }

    #[test]
    fn square_pyramid_has_four_rays() {
        // x3 >= |x1|, x3 >= |x2|
        let rows = [v(&[1, 0, 1]), v(&[-1, 0, 1]), v(&[0, 1, 1]), v(&[0, -1, 1])];
        let g = halfspaces_to_generators(3, &rows);
        assert_eq!(g.len(), 4);
        for r in [v(&[1, 1, 1]), v(&[1, -1, 1]), v(&[-1, 1, 1]), v(&[-1, -1, 1])] {
            assert!(g.contains(&r), "{r:?}");
        }
    }

    #[test]
    fn halfplane_keeps_line() {
        let g = halfspaces_to_generators(2, &[v(&[1, 1])]);
        assert_eq!(g, vec![v(&[1, 1]), v(&[1, -1]), v(&[-1, 1])]);
    }
}
