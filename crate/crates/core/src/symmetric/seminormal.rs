use nalgebra::DMatrix;

use crate::error::{Result, RookError};
use crate::rook::{generator_word, Generator, PartialPermutation};
use crate::sparse::SparseMatrix;
use crate::symmetric::{index_of, standard_tableaux, transposition_action, Partition, StandardTableau};

/// Young's seminormal representation `ρ_λ` of `S_k`, `λ ⊢ k`, on standard
/// tableaux in last-letter order.
#[derive(Clone, Debug)]
pub struct GroupRep {
    label: Partition,
    basis: Vec<StandardTableau>,
    generators: Vec<SparseMatrix>,
}

/// Builds `ρ_λ` from the images of `t_2, …, t_k`.
pub fn seminormal_rep(label: &Partition) -> GroupRep {
    let k = label.weight();
    let basis = standard_tableaux(label);
    let index = index_of(&basis);
    let generators = (2..=k)
        .map(|i| transposition_action(&basis, &index, i))
        .collect();
    GroupRep {
        label: label.clone(),
        basis,
        generators,
    }
}

/// Summands of `ρ_λ` restricted to `S_{k-1}`, in block order.
pub fn restrict_sn(rep: &GroupRep) -> Vec<Partition> {
    rep.label
        .corners()
        .into_iter()
        .map(|r| rep.label.remove_corner(r))
        .collect()
}

impl GroupRep {
    pub fn label(&self) -> &Partition {
        &self.label
    }

    pub fn k(&self) -> usize {
        self.label.weight()
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[StandardTableau] {
        &self.basis
    }

    /// `ρ(t_j)`, `2 ≤ j ≤ k`.
    pub fn generator(&self, j: usize) -> &SparseMatrix {
        &self.generators[j - 2]
    }

    /// `ρ(σ)` for a permutation `σ ∈ S_k`, multiplied out along a word in the `t_j`.
    pub fn eval(&self, sigma: &PartialPermutation) -> Result<DMatrix<f64>> {
        if sigma.n() != self.k() || !sigma.is_total() {
            return Err(RookError::InvalidArgument(format!(
                "{sigma} is not a permutation of {} points",
                self.k()
            )));
        }
        let mut m = DMatrix::identity(self.dim(), self.dim());
        for g in generator_word(sigma).iter().rev() {
            match *g {
                Generator::Transposition(j) => m = self.generator(j).left_mul_real(&m),
                Generator::Link(_) => unreachable!("permutations factor into transpositions"),
            }
        }
        Ok(m)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rook::{factorial, permutations, transposition};
    use crate::symmetric::partitions_of;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts).unwrap()
    }

    fn close(a: &DMatrix<f64>, b: &DMatrix<f64>) -> bool {
        (a - b).amax() < 1e-10
    }

    #[test]
    fn one_dimensional_reps() {
        assert_eq!(seminormal_rep(&p(&[2])).generator(2).to_dense()[(0, 0)], 1.0);
        assert_eq!(seminormal_rep(&p(&[1, 1])).generator(2).to_dense()[(0, 0)], -1.0);
    }

    #[test]
    fn two_one_has_the_expected_coefficients() {
        let rho = seminormal_rep(&p(&[2, 1]));
        assert_eq!(rho.dim(), 2);
        let t3 = rho.generator(3).to_dense();
        // basis: [1 3 / 2], [1 2 / 3]; contents of 3 are 1 and -1, of 2 are -1 and 1
        assert!((t3[(0, 0)] - 0.5).abs() < 1e-15);
        assert!((t3[(1, 0)] - 1.5).abs() < 1e-15);
        assert!((t3[(1, 1)] + 0.5).abs() < 1e-15);
        assert!((t3[(0, 1)] - 0.5).abs() < 1e-15);
    }

    #[test]
    fn sum_of_squared_dimensions() {
        for k in 0..=7 {
            let total: usize = partitions_of(k)
                .iter()
                .map(|l| seminormal_rep(l).dim().pow(2))
                .sum();
            assert_eq!(total as u64, factorial(k));
        }
    }

    #[test]
    fn coxeter_relations_and_sparsity() {
        for k in 2..=6 {
            for l in partitions_of(k) {
                let rho = seminormal_rep(&l);
                let id = DMatrix::identity(rho.dim(), rho.dim());
                let g: Vec<DMatrix<f64>> = (2..=k).map(|j| rho.generator(j).to_dense()).collect();
                for (a, ga) in g.iter().enumerate() {
                    assert!(close(&(ga * ga), &id), "{l} t_{} not an involution", a + 2);
                    assert!(rho.generator(a + 2).max_row_nnz() <= 2);
                    assert!(rho.generator(a + 2).max_col_nnz() <= 2);
                    for (b, gb) in g.iter().enumerate() {
                        if a.abs_diff(b) >= 2 {
                            assert!(close(&(ga * gb), &(gb * ga)));
                        } else if b == a + 1 {
                            assert!(close(&(ga * gb * ga), &(gb * ga * gb)));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn homomorphism_on_s4() {
        for l in partitions_of(4) {
            let rho = seminormal_rep(&l);
            for s in permutations(4) {
                for t in permutations(4) {
                    let lhs = rho.eval(&(s * t)).unwrap();
                    let rhs = rho.eval(&s).unwrap() * rho.eval(&t).unwrap();
                    assert!(close(&lhs, &rhs));
                }
            }
        }
    }

    #[test]
    fn restriction_is_literally_block_diagonal() {
        for k in 2..=5 {
            for l in partitions_of(k) {
                let rho = seminormal_rep(&l);
                let parts: Vec<GroupRep> = restrict_sn(&rho).iter().map(seminormal_rep).collect();
                assert_eq!(parts.iter().map(GroupRep::dim).sum::<usize>(), rho.dim());
                for w in permutations(k - 1) {
                    let big = rho.eval(&w.extend_fixed(k)).unwrap();
                    let blocks: Vec<DMatrix<f64>> =
                        parts.iter().map(|r| r.eval(&w).unwrap()).collect();
                    let refs: Vec<&DMatrix<f64>> = blocks.iter().collect();
                    assert!(close(&big, &crate::sparse::block_diag(&refs)), "{l} at {w}");
                }
            }
        }
        assert_eq!(restrict_sn(&seminormal_rep(&p(&[2, 1]))), vec![p(&[1, 1]), p(&[2])]);
        assert_eq!(restrict_sn(&seminormal_rep(&p(&[4]))), vec![p(&[3])]);
        assert_eq!(restrict_sn(&seminormal_rep(&p(&[1, 1, 1]))), vec![p(&[1, 1])]);
    }

    #[test]
    fn rejects_non_permutations() {
        let rho = seminormal_rep(&p(&[2, 1]));
        assert!(rho.eval(&transposition(4, 2)).is_err());
        assert!(rho.eval(&PartialPermutation::zero(3)).is_err());
    }
}
