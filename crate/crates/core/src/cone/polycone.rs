use std::fmt;
use std::sync::OnceLock;

use num_traits::{Signed, Zero};

use super::dd::{halfspaces_to_generators, normalize};
use crate::error::{check_dim, Result};
use crate::exactnum::{dot, format_rational, Rational};
use crate::linalg::{kernel, Mat, Subspace};

/// Which description a cone was built from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Origin {
    Generators,
    Inequalities,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PolarSign {
    /// `{ y : <x, y> <= 0 for all x in C }`
    Negative,
    /// `{ y : <x, y> >= 0 for all x in C }`
    Positive,
}

/// A polyhedral convex cone in `R^n`, described by generators (the cone is
/// their conic hull) and/or homogeneous inequalities `a . x >= 0`.
///
/// Only the description the cone was built from is stored eagerly; the other
/// is computed by double description on first use and cached. An empty
/// generator list is `{0}`, an empty inequality list is `R^n`.
#[derive(Clone)]
pub struct PolyCone {
    ambient: usize,
    origin: Origin,
    generators: OnceLock<Vec<Vec<Rational>>>,
    inequalities: OnceLock<Vec<Vec<Rational>>>,
}

/// Both descriptions of one cone, in canonical form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConeRepPair {
    /// Columns are generators.
    pub vrep: Mat,
    /// Rows are inequality normals.
    pub hrep: Mat,
}

impl PolyCone {
    pub fn from_generators(ambient: usize, generators: &[Vec<Rational>]) -> Result<Self> {
        for g in generators {
            check_dim("PolyCone::from_generators", ambient, g.len())?;
        }
        Ok(Self::from_parts(ambient, Origin::Generators, normalize(generators)))
    }

    pub fn from_inequalities(ambient: usize, rows: &[Vec<Rational>]) -> Result<Self> {
        for r in rows {
            check_dim("PolyCone::from_inequalities", ambient, r.len())?;
        }
        Ok(Self::from_parts(ambient, Origin::Inequalities, normalize(rows)))
    }

    /// Cone generated by the columns of `m`, i.e. `m R_+^cols`.
    pub fn from_matrix_columns(m: &Mat) -> Self {
        Self::from_parts(m.rows(), Origin::Generators, normalize(&m.col_vecs()))
    }

    pub fn from_subspace(s: &Subspace) -> Self {
        let mut gens = Vec::with_capacity(2 * s.dim());
        for v in s.vectors() {
            gens.push(v.clone());
            gens.push(v.iter().map(|x| -x).collect());
        }
        Self::from_parts(s.ambient(), Origin::Generators, normalize(&gens))
    }

    pub fn zero(ambient: usize) -> Self {
        Self::from_parts(ambient, Origin::Generators, Vec::new())
    }

    pub fn full(ambient: usize) -> Self {
        Self::from_parts(ambient, Origin::Inequalities, Vec::new())
    }

    /// The nonnegative orthant.
    pub fn orthant(ambient: usize) -> Self {
        Self::from_parts(ambient, Origin::Inequalities, Mat::identity(ambient).row_vecs())
    }

    fn from_parts(ambient: usize, origin: Origin, vectors: Vec<Vec<Rational>>) -> Self {
        let cone = PolyCone {
            ambient,
            origin,
            generators: OnceLock::new(),
            inequalities: OnceLock::new(),
        };
        let cell = match origin {
            Origin::Generators => &cone.generators,
            Origin::Inequalities => &cone.inequalities,
        };
        let _ = cell.set(vectors);
        cone
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    /// Generators (computed and cached if the cone came from inequalities).
    pub fn generators(&self) -> &[Vec<Rational>] {
        self.generators.get_or_init(|| {
            let rows = self.inequalities.get().expect("one description is always present");
            halfspaces_to_generators(self.ambient, rows)
        })
    }

    /// Inequality normals (computed and cached if the cone came from
    /// generators). The derived list generates the positive polar cone.
    pub fn inequalities(&self) -> &[Vec<Rational>] {
        self.inequalities.get_or_init(|| {
            let gens = self.generators.get().expect("one description is always present");
            halfspaces_to_generators(self.ambient, gens)
        })
    }

    pub fn generator_matrix(&self) -> Mat {
        Mat::from_cols(self.ambient, self.generators()).expect("generators have ambient length")
    }

    pub fn inequality_matrix(&self) -> Mat {
        Mat::from_rows(self.ambient, self.inequalities().to_vec())
            .expect("inequalities have ambient length")
    }

    /// Minimal generators, independent of how the cone was described.
    pub fn canonical_generators(&self) -> Vec<Vec<Rational>> {
        match self.origin {
            Origin::Inequalities => self.generators().to_vec(),
            Origin::Generators => halfspaces_to_generators(self.ambient, self.inequalities()),
        }
    }

    /// Minimal inequalities, independent of how the cone was described.
    pub fn canonical_inequalities(&self) -> Vec<Vec<Rational>> {
        match self.origin {
            Origin::Generators => self.inequalities().to_vec(),
            Origin::Inequalities => halfspaces_to_generators(self.ambient, self.generators()),
        }
    }

    /// The same set with both descriptions minimal and canonically ordered.
    pub fn canonical(&self) -> PolyCone {
        let gens = self.canonical_generators();
        let ineqs = self.canonical_inequalities();
        let cone = Self::from_parts(self.ambient, Origin::Generators, gens);
        let _ = cone.inequalities.set(ineqs);
        cone
    }

    pub fn vrep_to_hrep(&self) -> ConeRepPair {
        let c = self.canonical();
        ConeRepPair {
            vrep: c.generator_matrix(),
            hrep: c.inequality_matrix(),
        }
    }

    pub fn hrep_to_vrep(&self) -> ConeRepPair {
        self.vrep_to_hrep()
    }

    pub fn member(&self, v: &[Rational]) -> Result<bool> {
        check_dim("PolyCone::member", self.ambient, v.len())?;
        Ok(self
            .inequalities()
            .iter()
            .all(|a| !dot(a, v).is_negative()))
    }

    pub fn polar(&self, sign: PolarSign) -> PolyCone {
        // Prefer whichever description is already available.
        let negate = |vs: &[Vec<Rational>]| -> Vec<Vec<Rational>> {
            vs.iter().map(|v| v.iter().map(|x| -x).collect()).collect()
        };
        if let Some(gens) = self.generators.get() {
            let rows = match sign {
                PolarSign::Negative => negate(gens),
                PolarSign::Positive => gens.clone(),
            };
            Self::from_parts(self.ambient, Origin::Inequalities, normalize(&rows))
        } else {
            // C = {x : A x >= 0} = cone(rows of A)^+, so C^+ = cone(rows).
            let rows = self.inequalities();
            let gens = match sign {
                PolarSign::Negative => negate(rows),
                PolarSign::Positive => rows.to_vec(),
            };
            Self::from_parts(self.ambient, Origin::Generators, normalize(&gens))
        }
    }

    pub fn intersect(&self, other: &PolyCone) -> Result<PolyCone> {
        check_dim("PolyCone::intersect", self.ambient, other.ambient)?;
        let mut rows = self.inequalities().to_vec();
        rows.extend(other.inequalities().iter().cloned());
        Ok(Self::from_parts(self.ambient, Origin::Inequalities, normalize(&rows)))
    }

    /// Minkowski sum.
    pub fn sum(&self, other: &PolyCone) -> Result<PolyCone> {
        check_dim("PolyCone::sum", self.ambient, other.ambient)?;
        let mut gens = self.generators().to_vec();
        gens.extend(other.generators().iter().cloned());
        Ok(Self::from_parts(self.ambient, Origin::Generators, normalize(&gens)))
    }

    pub fn sum_subspace(&self, s: &Subspace) -> Result<PolyCone> {
        self.sum(&PolyCone::from_subspace(s))
    }

    pub fn negated(&self) -> PolyCone {
        let m = Mat::identity(self.ambient).neg();
        linear_image(&m, self).expect("square map")
    }

    /// Largest subspace contained in the cone.
    pub fn lineality(&self) -> Subspace {
        let rows = self.inequalities();
        if rows.is_empty() {
            return Subspace::full(self.ambient);
        }
        kernel(&Mat::from_rows(self.ambient, rows.to_vec()).expect("row length"))
    }

    /// Smallest subspace containing the cone.
    pub fn linear_span(&self) -> Subspace {
        Subspace::span(self.ambient, self.generators()).expect("generator length")
    }

    pub fn is_full(&self) -> bool {
        self.inequalities().iter().all(|r| r.iter().all(Zero::is_zero))
    }

    pub fn is_zero(&self) -> bool {
        self.generators().is_empty()
    }

    /// `other` is a subset of `self`.
    pub fn contains(&self, other: &PolyCone) -> Result<bool> {
        check_dim("PolyCone::contains", self.ambient, other.ambient)?;
        for g in other.generators() {
            if !self.member(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Set equality decided by mutual containment.
    pub fn set_eq(&self, other: &PolyCone) -> Result<bool> {
        Ok(self.contains(other)? && other.contains(self)?)
    }

    /// A point in the relative interior (sum of the generators).
    pub fn interior_point(&self) -> Vec<Rational> {
        let mut acc = vec![Rational::zero(); self.ambient];
        for g in self.generators() {
            for (a, x) in acc.iter_mut().zip(g) {
                *a += x;
            }
        }
        acc
    }
}

/// `m C`
pub fn linear_image(m: &Mat, c: &PolyCone) -> Result<PolyCone> {
    check_dim("linear_image", m.cols(), c.ambient())?;
    let gens: Vec<Vec<Rational>> = c
        .generators()
        .iter()
        .map(|g| m.mul_vec(g))
        .collect::<Result<_>>()?;
    Ok(PolyCone::from_parts(m.rows(), Origin::Generators, normalize(&gens)))
}

/// `{ x : m x in C }`
pub fn linear_preimage(m: &Mat, c: &PolyCone) -> Result<PolyCone> {
    check_dim("linear_preimage", m.rows(), c.ambient())?;
    let mt = m.transpose();
    let rows: Vec<Vec<Rational>> = c
        .inequalities()
        .iter()
        .map(|a| mt.mul_vec(a))
        .collect::<Result<_>>()?;
    Ok(PolyCone::from_parts(m.cols(), Origin::Inequalities, normalize(&rows)))
}

/// Set equality, decided on canonical generators.
impl PartialEq for PolyCone {
    fn eq(&self, other: &Self) -> bool {
        self.ambient == other.ambient && self.canonical_generators() == other.canonical_generators()
    }
}

impl Eq for PolyCone {}

impl fmt::Debug for PolyCone {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PolyCone")
            .field("ambient", &self.ambient)
            .field("generators", &self.generators.get().map(|g| fmt_vectors(g)))
            .field("inequalities", &self.inequalities.get().map(|g| fmt_vectors(g)))
            .finish()
    }
}

impl fmt::Display for PolyCone {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_full() {
            return write!(f, "R^{}", self.ambient);
        }
        write!(f, "cone{{{}}}", fmt_vectors(&self.canonical_generators()))
    }
}

pub(crate) fn fmt_vectors(vs: &[Vec<Rational>]) -> String {
    vs.iter()
        .map(|v| {
            let e: Vec<String> = v.iter().map(format_rational).collect();
            format!("({})", e.join(", "))
        })
        .collect::<Vec<_>>()
        .join(", ")
}
