use nalgebra::DMatrix;

use crate::error::{Result, RookError};
use crate::reps::RookLabel;
use crate::rook::{factorize, k_subsets, OrderedKSubset, PartialPermutation};
use crate::symmetric::{seminormal_rep, GroupRep};

/// The tensor-up representation `ρ̄` of `R_n` induced from `ρ_λ` on `S_k`.
///
/// On the groupoid basis, `ρ̄(⌊s⌋)` vanishes unless `rk s = k`, in which case it
/// is `E_{ran s, dom s} ⊗ ρ_λ(y)` with `y = p_{ran→[k]} s p_{[k]→dom} ∈ S_k`.
/// Rows and columns are grouped into `C(n,k)` cells of size `f^λ`, one per
/// `k`-subset in colex order.
#[derive(Clone, Debug)]
pub struct SteinRep {
    label: RookLabel,
    group: GroupRep,
    subsets: Vec<OrderedKSubset>,
}

impl SteinRep {
    pub fn new(label: &RookLabel) -> Self {
        Self {
            label: label.clone(),
            group: seminormal_rep(label.lambda()),
            subsets: k_subsets(label.n(), label.k()),
        }
    }

    pub fn label(&self) -> &RookLabel {
        &self.label
    }

    pub fn group(&self) -> &GroupRep {
        &self.group
    }

    /// The `k`-subsets indexing the cells, colex order.
    pub fn subsets(&self) -> &[OrderedKSubset] {
        &self.subsets
    }

    /// Size `f^λ` of one cell.
    pub fn cell_dim(&self) -> usize {
        self.group.dim()
    }

    pub fn dim(&self) -> usize {
        self.subsets.len() * self.cell_dim()
    }

    /// Top-left offset of cell `(A, B)`.
    pub fn cell_offset(&self, a: &OrderedKSubset, b: &OrderedKSubset) -> (usize, usize) {
        let d = self.cell_dim();
        (a.colex_index() * d, b.colex_index() * d)
    }

    fn check(&self, s: &PartialPermutation) -> Result<()> {
        if s.n() != self.label.n() {
            return Err(RookError::Dimension(format!("{s} is not in R_{}", self.label.n())));
        }
        Ok(())
    }

    /// `ρ̄(⌊s⌋)`.
    pub fn eval_groupoid(&self, s: &PartialPermutation) -> Result<DMatrix<f64>> {
        self.check(s)?;
        let mut out = DMatrix::zeros(self.dim(), self.dim());
        self.add_groupoid(s, &mut out);
        Ok(out)
    }

    /// `ρ̄(s) = Σ_{t ≤ s} ρ̄(⌊t⌋)`.
    pub fn eval_semigroup(&self, s: &PartialPermutation) -> Result<DMatrix<f64>> {
        self.check(s)?;
        let mut out = DMatrix::zeros(self.dim(), self.dim());
        for t in s.restrictions() {
            self.add_groupoid(&t, &mut out);
        }
        Ok(out)
    }

    fn add_groupoid(&self, s: &PartialPermutation, out: &mut DMatrix<f64>) {
        if s.rank() != self.label.k() {
            return;
        }
        let f = factorize(s);
        let (r, c) = self.cell_offset(&f.ran, &f.dom);
        let d = self.cell_dim();
        let block = self.group.eval(&f.y).expect("factor lies in S_k");
        let mut view = out.view_mut((r, c), (d, d));
        view += block;
    }
}
