//! Convex processes represented by their graph cones in `R^n x R^n`.
//!
//! Coordinates of the graph are ordered `(x, y)` with the current state `x`
//! first and the successor `y` second.

mod data;
mod linear;

pub use data::{DataSet, Pair};
pub use linear::LinearProcess;

use crate::cone::{linear_image, PolarSign, PolyCone};
use crate::error::{check_dim, Result};
use crate::exactnum::Rational;
use crate::linalg::Mat;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Block {
    First,
    Second,
}

/// `[I 0]` or `[0 I]`, an `n x 2n` matrix.
pub(crate) fn block_projection(n: usize, block: Block) -> Mat {
    let mut m = Mat::zeros(n, 2 * n);
    let off = match block {
        Block::First => 0,
        Block::Second => n,
    };
    for i in 0..n {
        m[(i, off + i)] = num_traits::one();
    }
    m
}

/// `[[0, I], [-I, 0]]`: maps `(a, b)` to `(b, -a)`.
pub(crate) fn rotation(n: usize) -> Mat {
    let mut m = Mat::zeros(2 * n, 2 * n);
    for i in 0..n {
        m[(i, n + i)] = num_traits::one();
        m[(n + i, i)] = -Rational::from_integer(1.into());
    }
    m
}

/// `[[0, I], [I, 0]]`: maps `(a, b)` to `(b, a)`.
pub(crate) fn swap_blocks(n: usize) -> Mat {
    let mut m = Mat::zeros(2 * n, 2 * n);
    for i in 0..n {
        m[(i, n + i)] = num_traits::one();
        m[(n + i, i)] = num_traits::one();
    }
    m
}

/// A set-valued map `H: R^n => R^n` with a polyhedral convex cone as graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConvexProcess {
    n: usize,
    graph: PolyCone,
}

impl ConvexProcess {
    pub fn new(n: usize, graph: PolyCone) -> Result<Self> {
        check_dim("ConvexProcess::new", 2 * n, graph.ambient())?;
        Ok(ConvexProcess { n, graph })
    }

    /// Graph spanned by the given `(x, y)` vectors of length `2n`.
    pub fn from_generators(n: usize, generators: &[Vec<Rational>]) -> Result<Self> {
        Self::new(n, PolyCone::from_generators(2 * n, generators)?)
    }

    /// The most powerful unfalsified process: graph = cone of the data.
    pub fn from_data(d: &DataSet) -> Self {
        let graph = PolyCone::from_generators(2 * d.n(), &d.stacked())
            .expect("data vectors have length 2n");
        ConvexProcess { n: d.n(), graph }
    }

    /// `H(x) = { A x + B u : (x, u) in C }`.
    pub fn from_constrained_linear(a: &Mat, b: &Mat, c: &PolyCone) -> Result<Self> {
        let n = a.rows();
        check_dim("from_constrained_linear (A square)", n, a.cols())?;
        check_dim("from_constrained_linear (B rows)", n, b.rows())?;
        let m = b.cols();
        check_dim("from_constrained_linear (C ambient)", n + m, c.ambient())?;
        // (x, u) -> (x, A x + B u)
        let top = Mat::identity(n).hstack(&Mat::zeros(n, m))?;
        let bottom = a.hstack(b)?;
        let map = top.vstack(&bottom)?;
        Self::new(n, linear_image(&map, c)?)
    }

    pub fn zero(n: usize) -> Self {
        ConvexProcess {
            n,
            graph: PolyCone::zero(2 * n),
        }
    }

    pub fn full(n: usize) -> Self {
        ConvexProcess {
            n,
            graph: PolyCone::full(2 * n),
        }
    }

    pub fn state_dim(&self) -> usize {
        self.n
    }

    pub fn graph(&self) -> &PolyCone {
        &self.graph
    }

    pub fn domain(&self) -> PolyCone {
        linear_image(&block_projection(self.n, Block::First), &self.graph).expect("projection")
    }

    pub fn image_set(&self) -> PolyCone {
        linear_image(&block_projection(self.n, Block::Second), &self.graph).expect("projection")
    }

    /// `p in H^-(q)` iff `<p, x> >= <q, y>` on the graph; the graph of
    /// `H^-` is `rotation * (graph H)^-`, stored as pairs `(q, p)`.
    pub fn negative_dual(&self) -> ConvexProcess {
        self.rotated_polar(PolarSign::Negative)
    }

    /// `p in H^+(q)` iff `<p, x> <= <q, y>` on the graph.
    pub fn positive_dual(&self) -> ConvexProcess {
        self.rotated_polar(PolarSign::Positive)
    }

    fn rotated_polar(&self, sign: PolarSign) -> ConvexProcess {
        let polar = self.graph.polar(sign);
        let graph = linear_image(&rotation(self.n), &polar).expect("square map");
        ConvexProcess { n: self.n, graph }
    }

    pub fn inverse(&self) -> ConvexProcess {
        let graph = linear_image(&swap_blocks(self.n), &self.graph).expect("square map");
        ConvexProcess { n: self.n, graph }
    }

    /// `H(S) = [0 I] (graph H  cap  (S x R^n))`. Points with `H(x)` empty
    /// simply contribute nothing.
    pub fn apply(&self, s: &PolyCone) -> Result<PolyCone> {
        check_dim("ConvexProcess::apply", self.n, s.ambient())?;
        let zeros = vec![num_traits::zero(); self.n];
        let rows: Vec<Vec<Rational>> = s
            .inequalities()
            .iter()
            .map(|a| a.iter().chain(&zeros).cloned().collect())
            .collect();
        let s_times_r = PolyCone::from_inequalities(2 * self.n, &rows)?;
        let meet = self.graph.intersect(&s_times_r)?;
        linear_image(&block_projection(self.n, Block::Second), &meet)
    }

    /// `graph L_- = lin(graph H)`
    pub fn minimal_linear(&self) -> LinearProcess {
        LinearProcess::new(self.n, self.graph.lineality()).expect("ambient 2n")
    }

    /// `graph L_+ = span(graph H)`
    pub fn maximal_linear(&self) -> LinearProcess {
        LinearProcess::new(self.n, self.graph.linear_span()).expect("ambient 2n")
    }

    /// `(X, Y)` whose stacked columns generate the graph.
    pub fn x_y(&self) -> (Mat, Mat) {
        let g = self.graph.generator_matrix();
        let all: Vec<usize> = (0..g.cols()).collect();
        let top: Vec<usize> = (0..self.n).collect();
        let bottom: Vec<usize> = (self.n..2 * self.n).collect();
        (g.select(&top, &all), g.select(&bottom, &all))
    }

    /// `(Z, W)` with `graph H = { (x, y) : Z x - W y >= 0 }`, from the rows
    /// `[Z -W]` of the inequality description.
    pub fn z_w(&self) -> (Mat, Mat) {
        let h = self.graph.inequality_matrix();
        let rows: Vec<usize> = (0..h.rows()).collect();
        let left: Vec<usize> = (0..self.n).collect();
        let right: Vec<usize> = (self.n..2 * self.n).collect();
        (h.select(&rows, &left), h.select(&rows, &right).neg())
    }

    pub fn contains_pair(&self, x: &[Rational], y: &[Rational]) -> Result<bool> {
        check_dim("ConvexProcess::contains_pair (x)", self.n, x.len())?;
        check_dim("ConvexProcess::contains_pair (y)", self.n, y.len())?;
        let v: Vec<Rational> = x.iter().chain(y).cloned().collect();
        self.graph.member(&v)
    }
}
