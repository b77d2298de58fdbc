use nalgebra::DMatrix;

use crate::error::{Result, RookError};
use crate::reps::RookLabel;
use crate::rook::{generator_word, Generator, PartialPermutation};
use crate::sparse::SparseMatrix;
use crate::symmetric::{index_of, n_standard_tableaux, transposition_action, StandardTableau};

/// The chain-adapted representation `ρ^λ` of `R_n` on `n`-standard tableaux
/// of shape `λ`, in generalized last-letter order.
///
/// `R_n` is generated by `t_2, …, t_n` and `[n]`, where `[n] v_L` is `v_L`
/// if `n ∉ L` and `0` otherwise. Restricted to `R_{n-1}` (elements fixing
/// `n`) it is block diagonal with blocks given by [`branch_rn`].
#[derive(Clone, Debug)]
pub struct HalversonRep {
    label: RookLabel,
    basis: Vec<StandardTableau>,
    transpositions: Vec<SparseMatrix>,
    link: SparseMatrix,
}

impl HalversonRep {
    pub fn new(label: &RookLabel) -> Self {
        let n = label.n();
        let basis = n_standard_tableaux(label.lambda(), n);
        let index = index_of(&basis);
        let transpositions = (2..=n)
            .map(|i| transposition_action(&basis, &index, i))
            .collect();
        let link = SparseMatrix::from_triplets(
            basis.len(),
            basis
                .iter()
                .enumerate()
                .filter(|(_, t)| !t.contains(n))
                .map(|(i, _)| (i, i, 1.0)),
        );
        Self {
            label: label.clone(),
            basis,
            transpositions,
            link,
        }
    }

    pub fn label(&self) -> &RookLabel {
        &self.label
    }

    pub fn n(&self) -> usize {
        self.label.n()
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[StandardTableau] {
        &self.basis
    }

    /// `ρ(t_j)`, `2 ≤ j ≤ n`.
    pub fn transposition(&self, j: usize) -> &SparseMatrix {
        &self.transpositions[j - 2]
    }

    /// `ρ([n])`.
    pub fn link(&self) -> &SparseMatrix {
        &self.link
    }

    /// `ρ(σ)` multiplied out along a generator word. A link `[m]` with
    /// `m < n` is expanded as `t_{m+1} ⋯ t_n [n] t_n ⋯ t_{m+1}`.
    pub fn eval(&self, sigma: &PartialPermutation) -> Result<DMatrix<f64>> {
        let n = self.n();
        if sigma.n() != n {
            return Err(RookError::Dimension(format!(
                "{sigma} is not in R_{n}"
            )));
        }
        let mut m = DMatrix::identity(self.dim(), self.dim());
        for g in generator_word(sigma).iter().rev() {
            match *g {
                Generator::Transposition(j) => m = self.transposition(j).left_mul_real(&m),
                Generator::Link(l) => {
                    for j in (l + 1)..=n {
                        m = self.transposition(j).left_mul_real(&m);
                    }
                    m = self.link.left_mul_real(&m);
                    for j in ((l + 1)..=n).rev() {
                        m = self.transposition(j).left_mul_real(&m);
                    }
                }
            }
        }
        Ok(m)
    }
}

/// Summands of `ρ^λ` restricted to `R_{n-1}`, in block order: `λ` itself
/// when `|λ| < n`, then `λ` minus each corner from top to bottom.
pub fn branch_rn(label: &RookLabel) -> Result<Vec<RookLabel>> {
    let n = label.n();
    if n == 0 {
        return Err(RookError::InvalidArgument("R_0 has no proper restriction".into()));
    }
    let lambda = label.lambda();
    let mut out = Vec::new();
    if lambda.weight() < n {
        out.push(RookLabel::new(lambda.clone(), n - 1)?);
    }
    for row in lambda.corners() {
        out.push(RookLabel::new(lambda.remove_corner(row), n - 1)?);
    }
    Ok(out)
}
