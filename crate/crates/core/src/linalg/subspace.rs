use std::fmt;

use num_traits::Zero;

use super::mat::Mat;
use crate::error::{check_dim, Result};
use crate::exactnum::{format_rational, is_zero_vec, primitive, Rational};

/// A linear subspace of `R^n` kept in a canonical basis: the nonzero rows
/// of the reduced row-echelon form of any spanning set, each rescaled to a
/// primitive integer vector. Two subspaces are equal iff their canonical
/// bases are identical, so `PartialEq` is set equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<Vec<Rational>>,
}

impl Subspace {
    pub fn trivial(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Self::from_rref_rows(ambient, &Mat::identity(ambient))
    }

    /// Span of the given vectors, each of length `ambient`.
    pub fn span(ambient: usize, vectors: &[Vec<Rational>]) -> Result<Self> {
        let m = Mat::from_rows(ambient, vectors.to_vec())?;
        Ok(Self::from_rref_rows(ambient, &m))
    }

    fn from_rref_rows(ambient: usize, rows: &Mat) -> Self {
        let r = rows.rref();
        let basis = (0..r.rank).map(|i| primitive(r.reduced.row(i))).collect();
        Subspace { ambient, basis }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Canonical basis vectors.
    pub fn vectors(&self) -> &[Vec<Rational>] {
        &self.basis
    }

    /// Canonical basis as the columns of an `ambient x dim` matrix.
    pub fn basis(&self) -> Mat {
        Mat::from_cols(self.ambient, &self.basis).expect("basis vectors have ambient length")
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    pub fn is_trivial(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn contains(&self, v: &[Rational]) -> Result<bool> {
        check_dim("Subspace::contains", self.ambient, v.len())?;
        if is_zero_vec(v) {
            return Ok(true);
        }
        let mut rows = self.basis.clone();
        rows.push(v.to_vec());
        Ok(Mat::from_rows(self.ambient, rows)?.rank() == self.dim())
    }

    pub fn contains_subspace(&self, other: &Subspace) -> Result<bool> {
        check_dim("Subspace::contains_subspace", self.ambient, other.ambient)?;
        for v in &other.basis {
            if !self.contains(v)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `{ v : <v, s> = 0 for all s in self }`
    pub fn orthogonal_complement(&self) -> Subspace {
        if self.basis.is_empty() {
            return Subspace::full(self.ambient);
        }
        kernel(&Mat::from_rows(self.ambient, self.basis.clone()).expect("consistent basis"))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        check_dim("Subspace::sum", self.ambient, other.ambient)?;
        let mut rows = self.basis.clone();
        rows.extend(other.basis.iter().cloned());
        Subspace::span(self.ambient, &rows)
    }

    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        check_dim("Subspace::intersect", self.ambient, other.ambient)?;
        let mut duals = self.orthogonal_complement().basis;
        duals.extend(other.orthogonal_complement().basis);
        if duals.is_empty() {
            return Ok(Subspace::full(self.ambient));
        }
        Ok(kernel(&Mat::from_rows(self.ambient, duals)?))
    }

    /// Orthogonal projection of `v` onto the complement of `self`.
    pub fn project_out(&self, v: &[Rational]) -> Vec<Rational> {
        if self.basis.is_empty() {
            return v.to_vec();
        }
        let b = self.basis();
        let bt = b.transpose();
        let gram = &bt * &b;
        let rhs = bt.mul_vec(v).expect("dimensions checked");
        let coeffs = gram.solve(&rhs).expect("basis is independent");
        let along = b.mul_vec(&coeffs).expect("dimensions checked");
        v.iter().zip(along).map(|(a, b)| a - b).collect()
    }
}

impl fmt::Display for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_full() {
            return write!(f, "R^{}", self.ambient);
        }
        let vs: Vec<String> = self
            .basis
            .iter()
            .map(|v| {
                let e: Vec<String> = v.iter().map(format_rational).collect();
                format!("({})", e.join(", "))
            })
            .collect();
        write!(f, "span{{{}}}", vs.join(", "))
    }
}

/// `{ v : m v = 0 }`
pub fn kernel(m: &Mat) -> Subspace {
    let n = m.cols();
    let r = m.rref();
    let mut vectors = Vec::new();
    for free in (0..n).filter(|c| !r.pivots.contains(c)) {
        let mut v = vec![Rational::zero(); n];
        v[free] = Rational::from_integer(1.into());
        for (row, &p) in r.pivots.iter().enumerate() {
            v[p] = -r.reduced[(row, free)].clone();
        }
        vectors.push(v);
    }
    Subspace::span(n, &vectors).expect("kernel vectors have column length")
}

/// Column span of `m`.
pub fn image(m: &Mat) -> Subspace {
    Subspace::from_rref_rows(m.rows(), &m.transpose())
}

/// `{ v : m v in s }`
pub fn preimage(m: &Mat, s: &Subspace) -> Result<Subspace> {
    check_dim("preimage", m.rows(), s.ambient())?;
    let comp = s.orthogonal_complement();
    if comp.is_trivial() {
        return Ok(Subspace::full(m.cols()));
    }
    let c = Mat::from_rows(m.rows(), comp.vectors().to_vec())?;
    Ok(kernel(&c.matmul(m)?))
}

/// `m s`
pub fn map_image(m: &Mat, s: &Subspace) -> Result<Subspace> {
    check_dim("map_image", m.cols(), s.ambient())?;
    let imgs: Vec<Vec<Rational>> = s
        .vectors()
        .iter()
        .map(|v| m.mul_vec(v))
        .collect::<Result<_>>()?;
    Subspace::span(m.rows(), &imgs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::int;

    fn v(xs: &[i64]) -> Vec<Rational> {
        xs.iter().map(|&x| int(x)).collect()
    }

    fn x3() -> Mat {
        Mat::from_i64(&[&[0, 1, 0, 0], &[0, 0, 1, -1]])
    }

    fn y3() -> Mat {
        Mat::from_i64(&[&[1, 0, 0, -1], &[0, 1, -1, 0]])
    }

    #[test]
    fn kernel_examples() {
        let w = Mat::from_i64(&[&[0, 0], &[0, 1]]);
        assert_eq!(kernel(&w), Subspace::span(2, &[v(&[1, 0])]).unwrap());
        assert!(kernel(&Mat::identity(3)).is_trivial());
        let k = kernel(&x3());
        assert_eq!(
            k,
            Subspace::span(4, &[v(&[1, 0, 0, 0]), v(&[0, 0, 1, 1])]).unwrap()
        );
        for b in k.vectors() {
            assert!(is_zero_vec(&x3().mul_vec(b).unwrap()));
        }
    }

    #[test]
    fn image_examples() {
        assert!(image(&Mat::zeros(3, 2)).is_trivial());
        assert_eq!(
            image(&Mat::from_i64(&[&[1], &[1]])),
            Subspace::span(2, &[v(&[1, 1])]).unwrap()
        );
        let stacked = x3().vstack(&y3()).unwrap();
        assert_eq!(image(&stacked).dim(), 4);
    }

    #[test]
    fn preimage_examples() {
        let s = Subspace::span(2, &[v(&[1, 1])]).unwrap();
        assert_eq!(preimage(&Mat::identity(2), &s).unwrap(), s);
        let w = Mat::from_i64(&[&[0, 0], &[0, 1]]);
        assert_eq!(
            preimage(&w, &s).unwrap(),
            Subspace::span(2, &[v(&[1, 0])]).unwrap()
        );
        let m = Mat::from_i64(&[&[1, 2, 3]]);
        assert!(preimage(&m, &Subspace::full(1)).unwrap().is_full());
        assert!(preimage(&m, &Subspace::full(2)).is_err());
    }

    #[test]
    fn map_image_examples() {
        assert!(map_image(&y3(), &Subspace::trivial(4)).unwrap().is_trivial());
        let k = kernel(&x3());
        let img = map_image(&y3(), &k).unwrap();
        assert!(img.is_full());
        assert_eq!(img, Subspace::span(2, &[v(&[1, 0]), v(&[-1, -1])]).unwrap());
        let s = Subspace::span(3, &[v(&[1, 2, 3])]).unwrap();
        assert_eq!(map_image(&Mat::identity(3), &s).unwrap(), s);
    }

    #[test]
    fn lattice_examples() {
        let e1 = Subspace::span(2, &[v(&[1, 0])]).unwrap();
        let e2 = Subspace::span(2, &[v(&[0, 1])]).unwrap();
        assert_eq!(e1.sum(&Subspace::trivial(2)).unwrap(), e1);
        assert!(e1.sum(&e2).unwrap().is_full());
        assert_eq!(e1.sum(&e1).unwrap(), e1);
        assert_eq!(e1.intersect(&Subspace::full(2)).unwrap(), e1);
        assert!(e1.intersect(&e2).unwrap().is_trivial());
        assert_eq!(e1.intersect(&e1).unwrap(), e1);
        assert!(Subspace::full(3).is_full());
        assert!(!Subspace::trivial(1).is_full());
        assert!(Subspace::span(2, &[v(&[1, 0]), v(&[-1, -1])]).unwrap().is_full());
        assert!(e1.sum(&Subspace::trivial(3)).is_err());
    }

    #[test]
    fn projection_removes_component() {
        let l = Subspace::span(3, &[v(&[1, 1, 0])]).unwrap();
        let p = l.project_out(&v(&[2, 0, 5]));
        assert_eq!(p, v(&[1, -1, 5]));
    }
}
