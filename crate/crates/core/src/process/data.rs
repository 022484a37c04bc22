use crate::error::{check_dim, Error, Result};
use crate::exactnum::{is_zero_vec, Rational};
use crate::linalg::Mat;

/// One measured transition `x -> y`.
pub type Pair = (Vec<Rational>, Vec<Rational>);

/// A finite set of measured state transitions. Exact duplicates and the
/// pair `(0, 0)` are dropped on construction; first-seen order is kept.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DataSet {
    n: usize,
    pairs: Vec<Pair>,
}

impl DataSet {
    pub fn new(n: usize) -> Self {
        DataSet {
            n,
            pairs: Vec::new(),
        }
    }

    pub fn from_pairs(n: usize, pairs: impl IntoIterator<Item = Pair>) -> Result<Self> {
        let mut d = DataSet::new(n);
        for (x, y) in pairs {
            d.push(x, y)?;
        }
        Ok(d)
    }

    /// A trajectory `x_0, ..., x_q` contributes the `q` pairs `(x_k, x_{k+1})`.
    pub fn from_trajectories(n: usize, trajectories: &[Vec<Vec<Rational>>]) -> Result<Self> {
        let mut d = DataSet::new(n);
        for t in trajectories {
            d.push_trajectory(t)?;
        }
        Ok(d)
    }

    pub fn push(&mut self, x: Vec<Rational>, y: Vec<Rational>) -> Result<()> {
        check_dim("DataSet::push (x)", self.n, x.len())?;
        check_dim("DataSet::push (y)", self.n, y.len())?;
        if is_zero_vec(&x) && is_zero_vec(&y) {
            return Ok(());
        }
        if !self.pairs.iter().any(|(a, b)| *a == x && *b == y) {
            self.pairs.push((x, y));
        }
        Ok(())
    }

    pub fn push_trajectory(&mut self, states: &[Vec<Rational>]) -> Result<()> {
        if states.len() == 1 {
            check_dim("DataSet::push_trajectory", self.n, states[0].len())?;
        }
        for w in states.windows(2) {
            self.push(w[0].clone(), w[1].clone())?;
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of distinct nonzero pairs (`T`).
    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn pairs(&self) -> &[Pair] {
        &self.pairs
    }

    /// `n x T` matrix of the `x_t`.
    pub fn x_matrix(&self) -> Mat {
        let cols: Vec<Vec<Rational>> = self.pairs.iter().map(|(x, _)| x.clone()).collect();
        Mat::from_cols(self.n, &cols).expect("checked on push")
    }

    /// `n x T` matrix of the `y_t`.
    pub fn y_matrix(&self) -> Mat {
        let cols: Vec<Vec<Rational>> = self.pairs.iter().map(|(_, y)| y.clone()).collect();
        Mat::from_cols(self.n, &cols).expect("checked on push")
    }

    /// Columns `(x_t, y_t)` in `R^{2n}`.
    pub fn stacked(&self) -> Vec<Vec<Rational>> {
        self.pairs
            .iter()
            .map(|(x, y)| x.iter().chain(y).cloned().collect())
            .collect()
    }

    pub(crate) fn require_nonempty(&self) -> Result<()> {
        if self.is_empty() {
            Err(Error::InvalidInput(
                "data set has no nonzero measurements".to_string(),
            ))
        } else {
            Ok(())
        }
    }
}
