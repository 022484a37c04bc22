use crate::error::{check_dim, Result};
use crate::linalg::{map_image, Mat, Subspace};

use super::{block_projection, rotation, swap_blocks, Block};

/// A set-valued map whose graph is a subspace of `R^n x R^n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinearProcess {
    n: usize,
    graph: Subspace,
}

impl LinearProcess {
    pub fn new(n: usize, graph: Subspace) -> Result<Self> {
        check_dim("LinearProcess::new", 2 * n, graph.ambient())?;
        Ok(LinearProcess { n, graph })
    }

    /// Graph `{ (x, A x) }` of a square matrix.
    pub fn from_map(a: &Mat) -> Result<Self> {
        check_dim("LinearProcess::from_map", a.rows(), a.cols())?;
        let n = a.rows();
        let vecs: Vec<_> = (0..n)
            .map(|j| {
                let mut e = Mat::identity(n).col(j);
                e.extend(a.col(j));
                e
            })
            .collect();
        Self::new(n, Subspace::span(2 * n, &vecs)?)
    }

    pub fn state_dim(&self) -> usize {
        self.n
    }

    pub fn graph(&self) -> &Subspace {
        &self.graph
    }

    /// `L(S) = [0 I] (graph L  cap  (S x R^n))`
    pub fn apply(&self, s: &Subspace) -> Result<Subspace> {
        check_dim("LinearProcess::apply", self.n, s.ambient())?;
        let mut vecs: Vec<_> = s
            .vectors()
            .iter()
            .map(|v| {
                let mut w = v.clone();
                w.extend(std::iter::repeat_n(num_traits::zero(), self.n));
                w
            })
            .collect();
        for j in 0..self.n {
            let mut e = vec![num_traits::zero(); 2 * self.n];
            e[self.n + j] = num_traits::one();
            vecs.push(e);
        }
        let s_times_r = Subspace::span(2 * self.n, &vecs)?;
        let meet = self.graph.intersect(&s_times_r)?;
        map_image(&block_projection(self.n, Block::Second), &meet)
    }

    pub fn inverse(&self) -> LinearProcess {
        let g = map_image(&swap_blocks(self.n), &self.graph).expect("square map");
        LinearProcess {
            n: self.n,
            graph: g,
        }
    }

    /// The dual linear process `L^perp`, whose graph is the rotated
    /// orthogonal complement of `graph L`.
    pub fn orthogonal_dual(&self) -> LinearProcess {
        let g = map_image(&rotation(self.n), &self.graph.orthogonal_complement())
            .expect("square map");
        LinearProcess {
            n: self.n,
            graph: g,
        }
    }

    pub fn domain(&self) -> Subspace {
        map_image(&block_projection(self.n, Block::First), &self.graph).expect("projection")
    }

    pub fn image_space(&self) -> Subspace {
        map_image(&block_projection(self.n, Block::Second), &self.graph).expect("projection")
    }
}
