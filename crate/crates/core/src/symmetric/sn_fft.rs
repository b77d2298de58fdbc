//! Clausen's FFT on `S_k` through the coset decomposition
//! `S_m = ⊔_i T_i S_{m-1}` with `T_i = t_{i+1} ⋯ t_m`.

use std::collections::{BTreeMap, HashMap};

use nalgebra::DMatrix;
use num_complex::Complex64;
use rayon::prelude::*;

use crate::error::{Result, RookError};
use crate::fft::OpCounter;
use crate::rook::{factorial, left_coset_rep, PartialPermutation};
use crate::sparse::block_diag;
use crate::symmetric::{partitions_of, restrict_sn, seminormal_rep, GroupRep, Partition};

/// Fourier coefficients on `S_k`, one block per partition in [`partitions_of`] order.
pub type SnBlocks = Vec<DMatrix<Complex64>>;

/// Blocks paired with their partitions.
pub type LabelledSnBlocks = Vec<(Partition, DMatrix<Complex64>)>;

/// `S_m` in coset order: element `(i-1)·(m-1)! + j` is `T_i · s_j`, where
/// `s_j` is element `j` of `S_{m-1}` (fixing `m`) in the same order.
pub fn coset_order(m: usize) -> Vec<PartialPermutation> {
    if m == 0 {
        return vec![PartialPermutation::identity(0)];
    }
    let lower: Vec<PartialPermutation> = coset_order(m - 1)
        .into_iter()
        .map(|s| s.extend_fixed(m))
        .collect();
    (1..=m)
        .flat_map(|i| {
            let t = left_coset_rep(m, m, i);
            lower.iter().map(move |s| t * *s)
        })
        .collect()
}

#[derive(Clone, Debug)]
struct Level {
    reps: Vec<GroupRep>,
    /// For each `λ ⊢ m`, the indices (into level `m-1`) of its restriction blocks.
    branches: Vec<Vec<usize>>,
}

/// A reusable plan for transforms on `S_k`: representation tables for every
/// level of the chain and the coset ordering of `S_k`.
#[derive(Clone, Debug)]
pub struct SnFft {
    k: usize,
    levels: Vec<Level>,
    elements: Vec<PartialPermutation>,
    index: HashMap<PartialPermutation, usize>,
}

impl SnFft {
    pub fn new(k: usize) -> Self {
        let mut levels: Vec<Level> = Vec::with_capacity(k + 1);
        for m in 0..=k {
            let reps: Vec<GroupRep> = partitions_of(m).iter().map(seminormal_rep).collect();
            let branches = if m == 0 {
                vec![Vec::new()]
            } else {
                let below: HashMap<&Partition, usize> = levels[m - 1]
                    .reps
                    .iter()
                    .enumerate()
                    .map(|(i, r)| (r.label(), i))
                    .collect();
                reps.iter()
                    .map(|r| restrict_sn(r).iter().map(|mu| below[mu]).collect())
                    .collect()
            };
            levels.push(Level { reps, branches });
        }
        let elements = coset_order(k);
        let index = elements.iter().enumerate().map(|(i, s)| (*s, i)).collect();
        Self {
            k,
            levels,
            elements,
            index,
        }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn labels(&self) -> Vec<&Partition> {
        self.levels[self.k].reps.iter().map(GroupRep::label).collect()
    }

    pub fn reps(&self) -> &[GroupRep] {
        &self.levels[self.k].reps
    }

    /// `S_k` in the order expected by [`transform`](Self::transform).
    pub fn elements(&self) -> &[PartialPermutation] {
        &self.elements
    }

    pub fn index_of(&self, sigma: &PartialPermutation) -> Option<usize> {
        self.index.get(sigma).copied()
    }

    /// `f̂(λ) = Σ_σ f(σ) ρ_λ(σ)` for `f` given in coset order.
    pub fn transform(&self, f: &[Complex64], ops: &mut OpCounter) -> SnBlocks {
        assert_eq!(f.len(), self.elements.len(), "function length must be k!");
        self.transform_level(self.k, f, ops)
    }

    fn transform_level(&self, m: usize, f: &[Complex64], ops: &mut OpCounter) -> SnBlocks {
        if m <= 1 {
            return vec![DMatrix::from_element(1, 1, f[0])];
        }
        let chunk = f.len() / m;
        let level = &self.levels[m];
        let terms: Vec<(SnBlocks, OpCounter)> = (1..=m)
            .into_par_iter()
            .map(|i| {
                let mut local = OpCounter::default();
                let sub = self.transform_level(m - 1, &f[(i - 1) * chunk..i * chunk], &mut local);
                let blocks = level
                    .reps
                    .iter()
                    .zip(&level.branches)
                    .map(|(rep, branch)| {
                        let parts: Vec<&DMatrix<Complex64>> = branch.iter().map(|&b| &sub[b]).collect();
                        let mut acc = block_diag(&parts);
                        // ρ(T_i) = ρ(t_{i+1}) ⋯ ρ(t_m), applied right to left
                        for j in ((i + 1)..=m).rev() {
                            acc = rep.generator(j).left_mul(&acc, &mut local);
                        }
                        acc
                    })
                    .collect();
                (blocks, local)
            })
            .collect();
        let mut out: Option<SnBlocks> = None;
        for (blocks, local) in terms {
            *ops += local;
            match out.as_mut() {
                None => out = Some(blocks),
                Some(acc) => {
                    for (a, b) in acc.iter_mut().zip(blocks) {
                        ops.add((b.nrows() * b.ncols()) as u64);
                        *a += b;
                    }
                }
            }
        }
        out.expect("m ≥ 2 terms")
    }

    /// Inverse transform, returning values in coset order.
    ///
    /// Uses `ĝ_i(μ) = (1/(m·d_μ)) Σ_{λ ⊃ μ} d_λ [ρ_λ(T_i)⁻¹ f̂(λ)]_{μμ}` for
    /// `g_i(s) = f(T_i s)`, which follows from Fourier inversion on both levels.
    pub fn inverse(&self, blocks: &[DMatrix<Complex64>]) -> Result<Vec<Complex64>> {
        self.check_blocks(blocks)?;
        Ok(self.inverse_level(self.k, blocks))
    }

    fn check_blocks(&self, blocks: &[DMatrix<Complex64>]) -> Result<()> {
        let reps = self.reps();
        if blocks.len() != reps.len() {
            return Err(RookError::Dimension(format!(
                "expected {} blocks for S_{}, got {}",
                reps.len(),
                self.k,
                blocks.len()
            )));
        }
        for (rep, b) in reps.iter().zip(blocks) {
            if b.nrows() != rep.dim() || b.ncols() != rep.dim() {
                return Err(RookError::Dimension(format!(
                    "block {} must be {}x{}, got {}x{}",
                    rep.label(),
                    rep.dim(),
                    rep.dim(),
                    b.nrows(),
                    b.ncols()
                )));
            }
        }
        Ok(())
    }

    fn inverse_level(&self, m: usize, blocks: &[DMatrix<Complex64>]) -> Vec<Complex64> {
        if m <= 1 {
            return vec![blocks[0][(0, 0)]];
        }
        let level = &self.levels[m];
        let below = &self.levels[m - 1];
        let parts: Vec<Vec<Complex64>> = (1..=m)
            .into_par_iter()
            .map(|i| {
                let mut ops = OpCounter::default();
                let mut sub: SnBlocks = below
                    .reps
                    .iter()
                    .map(|r| DMatrix::zeros(r.dim(), r.dim()))
                    .collect();
                for ((rep, branch), fhat) in level.reps.iter().zip(&level.branches).zip(blocks) {
                    // ρ(T_i)⁻¹ = ρ(t_m) ⋯ ρ(t_{i+1})
                    let mut a = fhat.clone();
                    for j in (i + 1)..=m {
                        a = rep.generator(j).left_mul(&a, &mut ops);
                    }
                    let weight = rep.dim() as f64;
                    let mut off = 0;
                    for &mu in branch {
                        let d = below.reps[mu].dim();
                        sub[mu] += a.view((off, off), (d, d)) * Complex64::new(weight, 0.0);
                        off += d;
                    }
                }
                for (mu, s) in sub.iter_mut().enumerate() {
                    let scale = 1.0 / (m as f64 * below.reps[mu].dim() as f64);
                    *s *= Complex64::new(scale, 0.0);
                }
                self.inverse_level(m - 1, &sub)
            })
            .collect();
        parts.concat()
    }
}

/// The defining sum `Σ_σ f(σ) ρ_λ(σ)`, one dense evaluation per permutation.
pub fn sn_naive(plan: &SnFft, f: &[Complex64]) -> SnBlocks {
    let mut out: SnBlocks = plan
        .reps()
        .iter()
        .map(|r| DMatrix::zeros(r.dim(), r.dim()))
        .collect();
    for (sigma, &value) in plan.elements().iter().zip(f) {
        if value == Complex64::new(0.0, 0.0) {
            continue;
        }
        for (block, rep) in out.iter_mut().zip(plan.reps()) {
            let m = rep.eval(sigma).expect("plan elements are permutations of k");
            *block += m.map(|x| Complex64::new(x, 0.0)) * value;
        }
    }
    out
}

/// Transforms a function on `S_k` given as a map (absent entries are zero).
pub fn sn_fft(
    f: &BTreeMap<PartialPermutation, Complex64>,
    k: usize,
) -> Result<(LabelledSnBlocks, OpCounter)> {
    let plan = SnFft::new(k);
    let mut values = vec![Complex64::new(0.0, 0.0); plan.elements().len()];
    for (sigma, v) in f {
        let i = plan.index_of(sigma).ok_or_else(|| {
            RookError::InvalidArgument(format!("{sigma} is not a permutation of {k} points"))
        })?;
        values[i] = *v;
    }
    let mut ops = OpCounter::default();
    let blocks = plan.transform(&values, &mut ops);
    let labelled = plan.labels().into_iter().cloned().zip(blocks).collect();
    Ok((labelled, ops))
}

/// Inverse of [`sn_fft`]; blocks must cover every `λ ⊢ k` in [`partitions_of`] order.
pub fn sn_ifft(
    blocks: &[(Partition, DMatrix<Complex64>)],
    k: usize,
) -> Result<BTreeMap<PartialPermutation, Complex64>> {
    let plan = SnFft::new(k);
    let labels = plan.labels();
    if blocks.len() != labels.len() || blocks.iter().zip(&labels).any(|((l, _), e)| l != *e) {
        return Err(RookError::Dimension(format!(
            "blocks must be labelled by the partitions of {k} in order"
        )));
    }
    let mats: Vec<DMatrix<Complex64>> = blocks.iter().map(|(_, m)| m.clone()).collect();
    let values = plan.inverse(&mats)?;
    Ok(plan.elements().iter().copied().zip(values).collect())
}

/// Clausen's bound `(2/3)k(k+1)²k!` on the multiply-adds of [`SnFft::transform`],
/// rounded down (operation counts are integers).
pub fn clausen_bound(k: usize) -> u64 {
    2 * (k * (k + 1) * (k + 1)) as u64 * factorial(k) / 3
}
