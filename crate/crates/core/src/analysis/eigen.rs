//! Certified search for `lambda` in a half-line and `xi != 0` with
//! `xi^T (Y - lambda X) <= 0`.
//!
//! The columns of `M(lambda) = Y - lambda X` positively span `R^n` exactly
//! when no such `xi` exists. On an open interval free of roots of the
//! `n x n` minors of `M`, every minor keeps its sign, so the chirotope of
//! the columns and hence fullness of their cone is constant there. The
//! failure set is closed, so testing every critical point plus one point in
//! each gap decides the whole half-line.

use std::collections::HashMap;

use itertools::Itertools;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::cone::{PolarSign, PolyCone};
use crate::error::{check_dim, Error, Result};
use crate::exactnum::{isolate_real_roots, sign_at, sort_points, AlgebraicPoint, Rational, Sign, UniPoly};
use crate::linalg::Mat;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EigenMode {
    /// `lambda >= 0`
    NonNegative,
    /// `lambda > 0`
    Positive,
}

impl EigenMode {
    fn admits(self, p: &AlgebraicPoint) -> Result<bool> {
        let zero = AlgebraicPoint::rational(Rational::zero());
        let ord = p.cmp_exact(&zero)?;
        Ok(match self {
            EigenMode::NonNegative => ord.is_ge(),
            EigenMode::Positive => ord.is_gt(),
        })
    }

    /// Where a witness is reported when `M(lambda)` is rank deficient for
    /// every `lambda`.
    fn default_point(self) -> Rational {
        match self {
            EigenMode::NonNegative => Rational::zero(),
            EigenMode::Positive => Rational::one(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum EigenOutcome {
    Free,
    Witness,
    Indeterminate,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TestedPoint {
    pub lambda: AlgebraicPoint,
    /// Whether the columns of `M(lambda)` positively span `R^n`.
    pub full: bool,
}

/// A nonzero `xi` with `xi^T (Y - lambda X) <= 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EigenWitness {
    Rational { lambda: Rational, xi: Vec<Rational> },
    /// `xi` is a vector of polynomials to be evaluated at `lambda`.
    Algebraic { lambda: AlgebraicPoint, xi: Vec<UniPoly> },
}

impl EigenWitness {
    pub fn lambda(&self) -> AlgebraicPoint {
        match self {
            EigenWitness::Rational { lambda, .. } => AlgebraicPoint::rational(lambda.clone()),
            EigenWitness::Algebraic { lambda, .. } => lambda.clone(),
        }
    }

    /// Re-checks the witness from scratch against `X`, `Y` and the range of
    /// `mode`.
    pub fn verify(&self, x: &Mat, y: &Mat, mode: EigenMode) -> Result<bool> {
        check_dim("EigenWitness::verify (rows)", x.rows(), y.rows())?;
        check_dim("EigenWitness::verify (cols)", x.cols(), y.cols())?;
        if !mode.admits(&self.lambda())? {
            return Ok(false);
        }
        match self {
            EigenWitness::Rational { lambda, xi } => {
                check_dim("EigenWitness::verify (xi)", x.rows(), xi.len())?;
                if xi.iter().all(Zero::is_zero) {
                    return Ok(false);
                }
                Ok((0..x.cols()).all(|t| {
                    let s: Rational = (0..x.rows())
                        .map(|i| &xi[i] * (&y[(i, t)] - lambda * &x[(i, t)]))
                        .sum();
                    !s.is_positive()
                }))
            }
            EigenWitness::Algebraic { lambda, xi } => {
                check_dim("EigenWitness::verify (xi)", x.rows(), xi.len())?;
                let mut nonzero = false;
                for p in xi {
                    if sign_at(p, lambda)? != Sign::Zero {
                        nonzero = true;
                        break;
                    }
                }
                if !nonzero {
                    return Ok(false);
                }
                for t in 0..x.cols() {
                    let mut acc = UniPoly::zero();
                    for (i, p) in xi.iter().enumerate() {
                        let entry = UniPoly::new(vec![y[(i, t)].clone(), -x[(i, t)].clone()]);
                        acc = &acc + &(p * &entry);
                    }
                    if sign_at(&acc, lambda)? == Sign::Positive {
                        return Ok(false);
                    }
                }
                Ok(true)
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EigenCertificate {
    pub mode: EigenMode,
    pub outcome: EigenOutcome,
    /// Roots in range of the nonzero maximal minors, ascending.
    pub critical_points: Vec<AlgebraicPoint>,
    /// Ascending; critical points interleaved with one point per gap.
    pub tested_points: Vec<TestedPoint>,
    pub witness: Option<EigenWitness>,
    pub note: Option<String>,
}

impl EigenCertificate {
    pub fn is_free(&self) -> bool {
        self.outcome == EigenOutcome::Free
    }
}

/// `Y - lambda X` restricted to chosen rows and columns, optionally with a
/// unit column appended.
struct Pencil<'a> {
    x: &'a Mat,
    y: &'a Mat,
}

impl Pencil<'_> {
    fn at(&self, lambda: &Rational) -> Mat {
        let mut m = self.y.clone();
        for i in 0..m.rows() {
            for j in 0..m.cols() {
                m[(i, j)] -= lambda * &self.x[(i, j)];
            }
        }
        m
    }

    /// Determinant as a polynomial in `lambda`, by interpolation through
    /// `k + 1` integer nodes (the degree is at most `k`).
    fn det_poly(&self, rows: &[usize], cols: &[usize], unit: Option<usize>) -> UniPoly {
        let k = rows.len();
        debug_assert_eq!(k, cols.len() + usize::from(unit.is_some()));
        let nodes: Vec<Rational> = (0..=k as i64).map(|v| Rational::from_integer(v.into())).collect();
        let values: Vec<Rational> = nodes
            .iter()
            .map(|l| {
                let mut m = Mat::zeros(k, k);
                for (a, &r) in rows.iter().enumerate() {
                    for (b, &c) in cols.iter().enumerate() {
                        m[(a, b)] = &self.y[(r, c)] - l * &self.x[(r, c)];
                    }
                    if let Some(u) = unit {
                        if u == r {
                            m[(a, k - 1)] = Rational::one();
                        }
                    }
                }
                m.det()
            })
            .collect();
        UniPoly::interpolate(&nodes, &values)
    }
}

/// Maximal minors keyed by their sorted column subsets.
struct Minors {
    list: Vec<(Vec<usize>, UniPoly)>,
    index: HashMap<Vec<usize>, usize>,
}

impl Minors {
    fn signs_at(&self, lambda: &AlgebraicPoint) -> Result<Vec<Sign>> {
        self.list.iter().map(|(_, p)| sign_at(p, lambda)).collect()
    }

    /// Sign of `det[B | e]` with `e` appended after the sorted columns `b`.
    fn cocircuit_sign(&self, signs: &[Sign], b: &[usize], e: usize) -> Sign {
        let mut s: Vec<usize> = b.to_vec();
        let pos = s.partition_point(|&c| c < e);
        s.insert(pos, e);
        let sign = signs[self.index[&s]];
        if (b.len() - pos) % 2 == 1 {
            sign.flip()
        } else {
            sign
        }
    }
}

fn build_minors(p: &Pencil<'_>, n: usize, t: usize) -> Minors {
    let rows: Vec<usize> = (0..n).collect();
    let subsets: Vec<Vec<usize>> = (0..t).combinations(n).collect();
    let list: Vec<(Vec<usize>, UniPoly)> = subsets
        .into_par_iter()
        .map(|s| {
            let d = p.det_poly(&rows, &s, None);
            (s, d)
        })
        .collect();
    let index = list.iter().enumerate().map(|(i, (s, _))| (s.clone(), i)).collect();
    Minors { list, index }
}

/// Either "full" or the first `(n-1)`-subset whose hyperplane has every
/// column weakly on one side (`None` inside means rank deficiency).
enum Chirotope {
    Full,
    OneSided(Option<(Vec<usize>, Sign)>),
}

fn chirotope_test(minors: &Minors, signs: &[Sign], n: usize, t: usize) -> Chirotope {
    if signs.iter().all(|s| *s == Sign::Zero) {
        return Chirotope::OneSided(None);
    }
    for b in (0..t).combinations(n - 1) {
        let (mut pos, mut neg) = (false, false);
        for e in (0..t).filter(|e| !b.contains(e)) {
            match minors.cocircuit_sign(signs, &b, e) {
                Sign::Positive => pos = true,
                Sign::Negative => neg = true,
                Sign::Zero => {}
            }
        }
        if pos != neg {
            let side = if pos { Sign::Positive } else { Sign::Negative };
            return Chirotope::OneSided(Some((b, side)));
        }
    }
    Chirotope::Full
}

fn test_point(
    p: &Pencil<'_>,
    minors: &Minors,
    lambda: &AlgebraicPoint,
    n: usize,
    t: usize,
) -> Result<bool> {
    match lambda.as_rational() {
        Some(r) => Ok(PolyCone::from_matrix_columns(&p.at(r)).is_full()),
        None => {
            let signs = minors.signs_at(lambda)?;
            Ok(matches!(chirotope_test(minors, &signs, n, t), Chirotope::Full))
        }
    }
}

fn rational_witness(p: &Pencil<'_>, lambda: &Rational) -> EigenWitness {
    let cone = PolyCone::from_matrix_columns(&p.at(lambda));
    let xi = cone
        .polar(PolarSign::Negative)
        .canonical_generators()
        .into_iter()
        .next()
        .expect("a cone that is not full has a nonzero polar");
    EigenWitness::Rational {
        lambda: lambda.clone(),
        xi,
    }
}

fn algebraic_witness(
    p: &Pencil<'_>,
    minors: &Minors,
    lambda: &AlgebraicPoint,
    n: usize,
    t: usize,
) -> Result<EigenWitness> {
    let all_rows: Vec<usize> = (0..n).collect();
    let signs = minors.signs_at(lambda)?;
    let xi = match chirotope_test(minors, &signs, n, t) {
        Chirotope::Full => unreachable!("witness requested at a full point"),
        Chirotope::OneSided(Some((b, side))) => {
            // xi_i = det[B | e_i], so xi . v = det[B | v].
            let xi: Vec<UniPoly> = (0..n).map(|i| p.det_poly(&all_rows, &b, Some(i))).collect();
            if side == Sign::Positive {
                xi.iter().map(|q| -q).collect()
            } else {
                xi
            }
        }
        Chirotope::OneSided(None) => {
            // Rank r < n at lambda: extend a nonzero r x r minor by one row;
            // the cofactors along an extra column annihilate every column.
            let mut found = None;
            'search: for r in (0..n).rev() {
                for rows in (0..n).combinations(r) {
                    for cols in (0..t).combinations(r) {
                        if sign_at(&p.det_poly(&rows, &cols, None), lambda)? != Sign::Zero {
                            found = Some((rows, cols));
                            break 'search;
                        }
                    }
                }
            }
            let (rows, cols) = found.expect("the empty minor is 1");
            let extra = (0..n).find(|i| !rows.contains(i)).expect("r < n");
            let mut ext = rows.clone();
            ext.insert(ext.partition_point(|&i| i < extra), extra);
            (0..n)
                .map(|i| {
                    if ext.contains(&i) {
                        p.det_poly(&ext, &cols, Some(i))
                    } else {
                        UniPoly::zero()
                    }
                })
                .collect()
        }
    };
    Ok(EigenWitness::Algebraic {
        lambda: lambda.clone(),
        xi,
    })
}

/// Candidate points in ascending order: left end, critical points, gap
/// midpoints and one point past the last critical point.
fn candidates(critical: &[AlgebraicPoint], mode: EigenMode) -> Result<Vec<AlgebraicPoint>> {
    let zero = AlgebraicPoint::rational(Rational::zero());
    let mut out = Vec::new();
    match (mode, critical.first()) {
        (EigenMode::NonNegative, Some(c)) if c.as_rational().is_some_and(Zero::is_zero) => {}
        (EigenMode::NonNegative, _) => out.push(zero.clone()),
        (EigenMode::Positive, Some(c)) => {
            out.push(AlgebraicPoint::rational(zero.rational_between(c)?))
        }
        (EigenMode::Positive, None) => {}
    }
    for (i, c) in critical.iter().enumerate() {
        out.push(c.clone());
        if let Some(next) = critical.get(i + 1) {
            out.push(AlgebraicPoint::rational(c.rational_between(next)?));
        }
    }
    let beyond = match critical.last() {
        Some(c) => {
            let (_, hi) = c.bounds();
            hi.floor() + Rational::one()
        }
        None => Rational::one(),
    };
    out.push(AlgebraicPoint::rational(beyond));
    Ok(out)
}

/// Decides whether some `lambda` in range admits `xi != 0` with
/// `xi^T (Y - lambda X) <= 0`.
pub fn eigen_free(x: &Mat, y: &Mat, mode: EigenMode) -> Result<EigenCertificate> {
    check_dim("eigen_free (rows)", x.rows(), y.rows())?;
    check_dim("eigen_free (cols)", x.cols(), y.cols())?;
    match eigen_free_inner(x, y, mode) {
        Err(Error::RefinementCap(cap)) => Ok(EigenCertificate {
            mode,
            outcome: EigenOutcome::Indeterminate,
            critical_points: Vec::new(),
            tested_points: Vec::new(),
            witness: None,
            note: Some(format!("root refinement exceeded {cap} bisection steps")),
        }),
        other => other,
    }
}

fn eigen_free_inner(x: &Mat, y: &Mat, mode: EigenMode) -> Result<EigenCertificate> {
    let (n, t) = (x.rows(), x.cols());
    let pencil = Pencil { x, y };
    let minors = build_minors(&pencil, n, t);

    if minors.list.iter().all(|(_, p)| p.is_zero()) {
        let lambda = mode.default_point();
        return Ok(EigenCertificate {
            mode,
            outcome: EigenOutcome::Witness,
            critical_points: Vec::new(),
            tested_points: vec![TestedPoint {
                lambda: AlgebraicPoint::rational(lambda.clone()),
                full: false,
            }],
            witness: Some(rational_witness(&pencil, &lambda)),
            note: Some("rank of Y - lambda X is below n for every lambda".to_string()),
        });
    }

    let mut critical = Vec::new();
    for (_, p) in minors.list.iter().filter(|(_, p)| !p.is_zero()) {
        for r in isolate_real_roots(p, &Rational::zero())? {
            if mode.admits(&r)? {
                critical.push(r);
            }
        }
    }
    sort_points(&mut critical)?;

    let points = candidates(&critical, mode)?;
    let results: Vec<Result<bool>> = points
        .par_iter()
        .map(|c| test_point(&pencil, &minors, c, n, t))
        .collect();
    let mut tested = Vec::with_capacity(points.len());
    for (lambda, full) in points.into_iter().zip(results) {
        tested.push(TestedPoint {
            lambda,
            full: full?,
        });
    }

    let witness = match tested.iter().find(|tp| !tp.full) {
        None => None,
        Some(tp) => Some(match tp.lambda.as_rational() {
            Some(r) => rational_witness(&pencil, r),
            None => algebraic_witness(&pencil, &minors, &tp.lambda, n, t)?,
        }),
    };
    Ok(EigenCertificate {
        mode,
        outcome: if witness.is_some() {
            EigenOutcome::Witness
        } else {
            EigenOutcome::Free
        },
        critical_points: critical,
        tested_points: tested,
        witness,
        note: None,
    })
}
