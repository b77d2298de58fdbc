use std::collections::HashMap;
use std::sync::OnceLock;

use nalgebra::DMatrix;
use num_complex::Complex64;
use rayon::prelude::*;

use crate::algebra::{to_groupoid_counted, AlgebraElement, Basis};
use crate::error::{Result, RookError};
use crate::fft::{Family, FourierCoefficients, OpCounter};
use crate::reps::{branch_rn, labels, HalversonRep, RookLabel, SteinRep};
use crate::rook::{
    embed_through, factorial, k_subsets, left_coset_rep, link, mobius, right_coset_rep,
    Enumeration, OrderedKSubset, PartialPermutation,
};
use crate::sparse::block_diag;
use crate::symmetric::SnFft;

/// Cached dense images are kept for `n` up to this size.
const IMAGE_CACHE_MAX_N: usize = 5;

/// Transforms on `R_n` sharing one set of representation tables.
///
/// Tables for each family are built on first use and are immutable
/// afterwards, so a plan can be shared across threads.
pub struct RookFourier {
    n: usize,
    labels: Vec<RookLabel>,
    enumeration: OnceLock<Enumeration>,
    stein: OnceLock<SteinTables>,
    chain: OnceLock<Vec<ChainLevel>>,
    stein_images: OnceLock<Vec<Vec<DMatrix<f64>>>>,
    halverson_images: OnceLock<Vec<Vec<DMatrix<f64>>>>,
}

struct SteinTables {
    reps: Vec<SteinRep>,
    /// Plans for `S_0, …, S_n`.
    sn: Vec<SnFft>,
    subsets: Vec<Vec<OrderedKSubset>>,
}

/// One level `R_m` of the chain together with the bijections that split a
/// function on `R_m` into `2m` functions on `R_{m-1}`.
struct ChainLevel {
    enumeration: Enumeration,
    reps: Vec<HalversonRep>,
    /// Block order of each label restricted to `R_{m-1}`, as indices into the level below.
    branches: Vec<Vec<usize>>,
    /// `type1[i-1][j]`: index of `T_i · s_j`.
    type1: Vec<Vec<usize>>,
    /// `type2[i-1][j]`: index of `s_j · T^i`, absent when `m-1 ∈ dom s_j`.
    type2: Vec<Vec<Option<usize>>>,
    /// `type3[j]`: index of `[m] · s_j`.
    type3: Vec<usize>,
}

impl ChainLevel {
    fn new(m: usize, below: Option<&ChainLevel>) -> Self {
        let enumeration = Enumeration::new(m);
        let level_labels = labels(m);
        let reps: Vec<HalversonRep> = level_labels.iter().map(HalversonRep::new).collect();
        let mut out = Self {
            enumeration,
            reps,
            branches: Vec::new(),
            type1: Vec::new(),
            type2: Vec::new(),
            type3: Vec::new(),
        };
        let Some(below) = below else {
            return out;
        };
        let below_index: HashMap<&RookLabel, usize> = below
            .reps
            .iter()
            .enumerate()
            .map(|(i, r)| (r.label(), i))
            .collect();
        out.branches = level_labels
            .iter()
            .map(|l| {
                branch_rn(l)
                    .expect("m ≥ 1")
                    .iter()
                    .map(|mu| below_index[mu])
                    .collect()
            })
            .collect();
        let idx = |s: PartialPermutation| out.enumeration.index_of(&s).expect("element of R_m");
        let lifted: Vec<PartialPermutation> = below
            .enumeration
            .elements()
            .iter()
            .map(|s| s.extend_fixed(m))
            .collect();
        let type1 = (1..=m)
            .map(|i| {
                let t = left_coset_rep(m, m, i);
                lifted.iter().map(|s| idx(t * *s)).collect()
            })
            .collect();
        let type2 = (1..m)
            .map(|i| {
                let t = right_coset_rep(m, m, i);
                lifted
                    .iter()
                    .map(|s| (s.apply(m - 1).is_none()).then(|| idx(*s * t)))
                    .collect()
            })
            .collect();
        let cut = link(m, m);
        let type3 = lifted.iter().map(|s| idx(cut * *s)).collect();
        out.type1 = type1;
        out.type2 = type2;
        out.type3 = type3;
        out
    }
}

enum Piece {
    Left(usize),
    Right(usize),
    Link,
}

fn zero_blocks(labels: &[RookLabel]) -> Vec<DMatrix<Complex64>> {
    labels
        .iter()
        .map(|l| DMatrix::zeros(l.dim(), l.dim()))
        .collect()
}

fn real_to_complex(m: &DMatrix<f64>) -> DMatrix<Complex64> {
    m.map(|x| Complex64::new(x, 0.0))
}

impl RookFourier {
    pub fn new(n: usize) -> Self {
        Self {
            n,
            labels: labels(n),
            enumeration: OnceLock::new(),
            stein: OnceLock::new(),
            chain: OnceLock::new(),
            stein_images: OnceLock::new(),
            halverson_images: OnceLock::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn labels(&self) -> &[RookLabel] {
        &self.labels
    }

    fn enumeration(&self) -> &Enumeration {
        self.enumeration.get_or_init(|| Enumeration::new(self.n))
    }

    fn stein_tables(&self) -> &SteinTables {
        self.stein.get_or_init(|| SteinTables {
            reps: self.labels.iter().map(SteinRep::new).collect(),
            sn: (0..=self.n).map(SnFft::new).collect(),
            subsets: (0..=self.n).map(|k| k_subsets(self.n, k)).collect(),
        })
    }

    fn chain(&self) -> &[ChainLevel] {
        self.chain.get_or_init(|| {
            let mut levels: Vec<ChainLevel> = Vec::with_capacity(self.n + 1);
            for m in 0..=self.n {
                let level = ChainLevel::new(m, levels.last());
                levels.push(level);
            }
            levels
        })
    }

    pub fn stein_reps(&self) -> &[SteinRep] {
        &self.stein_tables().reps
    }

    pub fn halverson_reps(&self) -> &[HalversonRep] {
        &self.chain()[self.n].reps
    }

    /// `ρ(s)` for every label, in semigroup terms for the tableau family and
    /// groupoid terms (`ρ(⌊s⌋)`) for the tensor-up family.
    pub fn images(&self, family: Family, s: &PartialPermutation) -> Vec<DMatrix<f64>> {
        if self.n <= IMAGE_CACHE_MAX_N {
            let i = self.enumeration().index_of(s).expect("element of R_n");
            return self.image_table(family)[i].clone();
        }
        self.compute_images(family, s)
    }

    fn compute_images(&self, family: Family, s: &PartialPermutation) -> Vec<DMatrix<f64>> {
        match family {
            Family::Stein => self
                .stein_reps()
                .iter()
                .map(|r| r.eval_groupoid(s).expect("element of R_n"))
                .collect(),
            Family::Halverson => self
                .halverson_reps()
                .iter()
                .map(|r| r.eval(s).expect("element of R_n"))
                .collect(),
        }
    }

    fn image_table(&self, family: Family) -> &Vec<Vec<DMatrix<f64>>> {
        let cell = match family {
            Family::Stein => &self.stein_images,
            Family::Halverson => &self.halverson_images,
        };
        cell.get_or_init(|| {
            self.enumeration()
                .elements()
                .par_iter()
                .map(|s| self.compute_images(family, s))
                .collect()
        })
    }

    fn check_n(&self, f: &AlgebraElement) -> Result<()> {
        if f.n() != self.n {
            return Err(RookError::Dimension(format!(
                "plan is for R_{}, input is on R_{}",
                self.n,
                f.n()
            )));
        }
        Ok(())
    }

    /// `Σ f(s) ρ(s)` (tableau family, semigroup basis) or `Σ f(s) ρ(⌊s⌋)`
    /// (tensor-up family, groupoid basis). Each stored term costs `Σ_λ d_λ² = |R_n|`.
    pub fn naive(&self, f: &AlgebraElement, family: Family) -> Result<FourierCoefficients> {
        self.check_n(f)?;
        let basis = match family {
            Family::Stein => Basis::Groupoid,
            Family::Halverson => Basis::Semigroup,
        };
        f.require(basis, &format!("the naive {family} transform"))?;
        let mut blocks = zero_blocks(&self.labels);
        let mut ops = OpCounter::default();
        for (s, c) in f.terms() {
            for (block, img) in blocks.iter_mut().zip(self.images(family, s)) {
                *block += real_to_complex(&img) * *c;
                ops.add((img.nrows() * img.ncols()) as u64);
            }
        }
        self.finish(family, blocks, ops)
    }

    fn finish(
        &self,
        family: Family,
        blocks: Vec<DMatrix<Complex64>>,
        ops: OpCounter,
    ) -> Result<FourierCoefficients> {
        FourierCoefficients::new(
            self.n,
            family,
            self.labels.iter().cloned().zip(blocks).collect(),
            ops,
        )
    }

    /// Block FFT on a groupoid-basis function: cell `(A, B)` of the rank-`k`
    /// blocks is the `S_k` transform of `y ↦ f(p_{[k]→A} y p_{B→[k]})`.
    pub fn stein_fft(&self, f: &AlgebraElement) -> Result<FourierCoefficients> {
        self.check_n(f)?;
        f.require(Basis::Groupoid, "stein_fft")?;
        let tables = self.stein_tables();
        let mut blocks = zero_blocks(&self.labels);
        let mut ops = OpCounter::default();
        let mut first_label = 0;
        for k in 0..=self.n {
            let plan = &tables.sn[k];
            let subsets = &tables.subsets[k];
            let n_labels = plan.reps().len();
            let cells: Vec<(usize, usize)> = (0..subsets.len())
                .flat_map(|a| (0..subsets.len()).map(move |b| (a, b)))
                .collect();
            let results: Vec<_> = cells
                .par_iter()
                .filter_map(|&(a, b)| {
                    let values: Vec<Complex64> = plan
                        .elements()
                        .iter()
                        .map(|y| f.get(&embed_through(&subsets[a], y, &subsets[b])))
                        .collect();
                    if values.iter().all(|v| *v == Complex64::new(0.0, 0.0)) {
                        return None;
                    }
                    let mut local = OpCounter::default();
                    let hat = plan.transform(&values, &mut local);
                    Some((a, b, hat, local))
                })
                .collect();
            for (a, b, hat, local) in results {
                ops += local;
                for (offset, cell) in hat.into_iter().enumerate() {
                    let d = cell.nrows();
                    blocks[first_label + offset]
                        .view_mut((a * d, b * d), (d, d))
                        .copy_from(&cell);
                }
            }
            first_label += n_labels;
        }
        self.finish(Family::Stein, blocks, ops)
    }

    /// Zeta transform to the groupoid basis followed by [`stein_fft`](Self::stein_fft);
    /// the reported count includes both stages.
    pub fn stein_fft_semigroup(&self, f: &AlgebraElement) -> Result<FourierCoefficients> {
        self.check_n(f)?;
        f.require(Basis::Semigroup, "stein_fft_semigroup")?;
        let mut zeta_ops = OpCounter::default();
        let g = to_groupoid_counted(f, &mut zeta_ops)?;
        let mut out = self.stein_fft(&g)?;
        out.ops += zeta_ops;
        Ok(out)
    }

    /// Chain FFT on a semigroup-basis function. With `s` running over `R_{m-1}`
    /// (fixing `m`), every element of `R_m` is exactly one of `T_i s`,
    /// `s T^i` (`m-1 ∉ dom s`) or `[m] s`, so
    /// `f̂(ρ) = Σ_i ρ(T_i) f̂_{T_i}|_{R_{m-1}} + Σ_i f̂^{T^i}|_{R_{m-1}} ρ(T^i) + ρ([m]) f̂_{[m]}|_{R_{m-1}}`,
    /// each restricted transform being block diagonal in the level below.
    pub fn recursive_fft(&self, f: &AlgebraElement) -> Result<FourierCoefficients> {
        self.check_n(f)?;
        f.require(Basis::Semigroup, "recursive_fft")?;
        let chain = self.chain();
        let top = &chain[self.n].enumeration;
        let mut values = vec![Complex64::new(0.0, 0.0); top.len()];
        for (s, c) in f.terms() {
            values[top.index_of(s).expect("element of R_n")] = *c;
        }
        let mut ops = OpCounter::default();
        let blocks = self.recurse(self.n, &values, &mut ops);
        self.finish(Family::Halverson, blocks, ops)
    }

    fn recurse(&self, m: usize, values: &[Complex64], ops: &mut OpCounter) -> Vec<DMatrix<Complex64>> {
        let level = &self.chain()[m];
        if m <= 2 {
            return self.chain_base(level, values, ops);
        }
        let zero = Complex64::new(0.0, 0.0);
        let mut pieces: Vec<(Piece, Vec<Complex64>)> = Vec::with_capacity(2 * m);
        for (i, map) in level.type1.iter().enumerate() {
            pieces.push((Piece::Left(i + 1), map.iter().map(|&x| values[x]).collect()));
        }
        for (i, map) in level.type2.iter().enumerate() {
            let sub = map.iter().map(|x| x.map_or(zero, |x| values[x])).collect();
            pieces.push((Piece::Right(i + 1), sub));
        }
        pieces.push((Piece::Link, level.type3.iter().map(|&x| values[x]).collect()));

        let terms: Vec<(Vec<DMatrix<Complex64>>, OpCounter)> = pieces
            .into_par_iter()
            .filter(|(_, sub)| sub.iter().any(|v| *v != zero))
            .map(|(piece, sub)| {
                let mut local = OpCounter::default();
                let lower = self.recurse(m - 1, &sub, &mut local);
                let blocks = level
                    .reps
                    .iter()
                    .zip(&level.branches)
                    .map(|(rep, branch)| {
                        let parts: Vec<&DMatrix<Complex64>> = branch.iter().map(|&b| &lower[b]).collect();
                        let mut acc = block_diag(&parts);
                        match piece {
                            // ρ(T_i) = ρ(t_{i+1}) ⋯ ρ(t_m)
                            Piece::Left(i) => {
                                for j in ((i + 1)..=m).rev() {
                                    acc = rep.transposition(j).left_mul(&acc, &mut local);
                                }
                            }
                            // ρ(T^i) = ρ(t_m) ⋯ ρ(t_{i+1})
                            Piece::Right(i) => {
                                for j in ((i + 1)..=m).rev() {
                                    acc = rep.transposition(j).right_mul(&acc, &mut local);
                                }
                            }
                            Piece::Link => acc = rep.link().left_mul(&acc, &mut local),
                        }
                        acc
                    })
                    .collect();
                (blocks, local)
            })
            .collect();

        let mut out: Option<Vec<DMatrix<Complex64>>> = None;
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
        out.unwrap_or_else(|| {
            level
                .reps
                .iter()
                .map(|r| DMatrix::zeros(r.dim(), r.dim()))
                .collect()
        })
    }

    fn chain_base(&self, level: &ChainLevel, values: &[Complex64], ops: &mut OpCounter) -> Vec<DMatrix<Complex64>> {
        let mut blocks: Vec<DMatrix<Complex64>> = level
            .reps
            .iter()
            .map(|r| DMatrix::zeros(r.dim(), r.dim()))
            .collect();
        for (s, c) in level.enumeration.elements().iter().zip(values) {
            if *c == Complex64::new(0.0, 0.0) {
                continue;
            }
            for (block, rep) in blocks.iter_mut().zip(&level.reps) {
                let img = rep.eval(s).expect("element of R_m");
                *block += real_to_complex(&img) * *c;
                ops.add((img.nrows() * img.ncols()) as u64);
            }
        }
        blocks
    }

    /// Fourier inversion: the groupoid coefficient of `⌊x⌋`, `rk x = k`, is
    /// `(1/k!) Σ_{λ ⊢ k} f^λ tr(F̂(λ) ρ(⌊x⁻¹⌋))`.
    pub fn invert(&self, coeffs: &FourierCoefficients) -> Result<AlgebraElement> {
        if coeffs.n() != self.n {
            return Err(RookError::Dimension(format!(
                "plan is for R_{}, coefficients are on R_{}",
                self.n,
                coeffs.n()
            )));
        }
        match coeffs.family() {
            Family::Stein => self.invert_stein(coeffs),
            Family::Halverson => self.invert_halverson(coeffs),
        }
    }

    /// Cell `(ran x, dom x)` of the rank-`k` blocks is an `S_k` transform, so
    /// each cell is inverted with the `S_k` inverse FFT.
    fn invert_stein(&self, coeffs: &FourierCoefficients) -> Result<AlgebraElement> {
        let tables = self.stein_tables();
        let mut out = AlgebraElement::zero(self.n, Basis::Groupoid);
        let mut first_label = 0;
        for k in 0..=self.n {
            let plan = &tables.sn[k];
            let subsets = &tables.subsets[k];
            let n_labels = plan.reps().len();
            let group_blocks = &coeffs.blocks()[first_label..first_label + n_labels];
            let cells: Vec<(usize, usize)> = (0..subsets.len())
                .flat_map(|a| (0..subsets.len()).map(move |b| (a, b)))
                .collect();
            let results: Vec<Result<(usize, usize, Vec<Complex64>)>> = cells
                .par_iter()
                .map(|&(a, b)| {
                    let cell: Vec<DMatrix<Complex64>> = group_blocks
                        .iter()
                        .zip(plan.reps())
                        .map(|((_, m), rep)| {
                            let d = rep.dim();
                            m.view((a * d, b * d), (d, d)).into_owned()
                        })
                        .collect();
                    Ok((a, b, plan.inverse(&cell)?))
                })
                .collect();
            for r in results {
                let (a, b, values) = r?;
                for (y, v) in plan.elements().iter().zip(values) {
                    out.add_term_unchecked(embed_through(&subsets[a], y, &subsets[b]), v);
                }
            }
            first_label += n_labels;
        }
        Ok(out.normalize())
    }

    fn invert_halverson(&self, coeffs: &FourierCoefficients) -> Result<AlgebraElement> {
        let elements = self.enumeration().elements();
        let values: Vec<Complex64> = elements
            .par_iter()
            .map(|x| {
                let k = x.rank();
                let xinv = x.inverse();
                // ρ(⌊x⁻¹⌋) = Σ_{t ≤ x⁻¹} μ(t, x⁻¹) ρ(t), nonzero only on weight-k labels
                let mut sum = Complex64::new(0.0, 0.0);
                let weight_k: Vec<usize> = (0..self.labels.len())
                    .filter(|&i| self.labels[i].k() == k)
                    .collect();
                let mut groupoid: Vec<DMatrix<f64>> = weight_k
                    .iter()
                    .map(|&i| DMatrix::zeros(self.labels[i].dim(), self.labels[i].dim()))
                    .collect();
                for t in xinv.restrictions() {
                    let sign = mobius(&t, &xinv) as f64;
                    let imgs = self.images(Family::Halverson, &t);
                    for (acc, &i) in groupoid.iter_mut().zip(&weight_k) {
                        *acc += &imgs[i] * sign;
                    }
                }
                for (g, &i) in groupoid.iter().zip(&weight_k) {
                    let (label, block) = &coeffs.blocks()[i];
                    let f_lambda = label.lambda().hook_dimension() as f64;
                    sum += (block * real_to_complex(g)).trace() * f_lambda;
                }
                sum / factorial(k) as f64
            })
            .collect();
        let mut out = AlgebraElement::zero(self.n, Basis::Groupoid);
        for (x, v) in elements.iter().zip(values) {
            out.add_term_unchecked(*x, v);
        }
        Ok(out.normalize())
    }
}

/// One-shot [`RookFourier::naive`].
pub fn naive_transform(f: &AlgebraElement, family: Family) -> Result<FourierCoefficients> {
    RookFourier::new(f.n()).naive(f, family)
}

/// One-shot [`RookFourier::stein_fft`].
pub fn stein_fft(f: &AlgebraElement) -> Result<FourierCoefficients> {
    RookFourier::new(f.n()).stein_fft(f)
}

/// One-shot [`RookFourier::stein_fft_semigroup`].
pub fn stein_fft_semigroup(f: &AlgebraElement) -> Result<FourierCoefficients> {
    RookFourier::new(f.n()).stein_fft_semigroup(f)
}

/// One-shot [`RookFourier::recursive_fft`].
pub fn recursive_fft(f: &AlgebraElement) -> Result<FourierCoefficients> {
    RookFourier::new(f.n()).recursive_fft(f)
}

/// One-shot [`RookFourier::invert`].
pub fn fourier_invert(coeffs: &FourierCoefficients) -> Result<AlgebraElement> {
    RookFourier::new(coeffs.n()).invert(coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{convolve, to_groupoid};
    use crate::fft::{recursive_bound, stein_bound, stein_semigroup_bound};
    use crate::rook::{enumerate, split_type, SplitType};
    use crate::symmetric::Partition;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    const TOL: f64 = 1e-9;

    fn random(n: usize, basis: Basis, seed: u64) -> AlgebraElement {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        AlgebraElement::from_terms(
            n,
            basis,
            enumerate(n)
                .into_iter()
                .map(|s| (s, Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))))
                .collect::<Vec<_>>(),
        )
        .unwrap()
    }

    fn label(parts: &[usize], n: usize) -> RookLabel {
        RookLabel::new(Partition::new(parts).unwrap(), n).unwrap()
    }

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    #[test]
    fn small_naive_examples() {
        let id = AlgebraElement::point(PartialPermutation::identity(3), Basis::Semigroup);
        let hat = naive_transform(&id, Family::Halverson).unwrap();
        for (_, m) in hat.blocks() {
            assert_eq!(*m, DMatrix::identity(m.nrows(), m.nrows()));
        }

        let floor_id = AlgebraElement::point(PartialPermutation::identity(1), Basis::Groupoid);
        let hat = naive_transform(&floor_id, Family::Stein).unwrap();
        assert_eq!(hat.block(&label(&[1], 1)).unwrap()[(0, 0)], c(1.0));
        assert_eq!(hat.block(&label(&[], 1)).unwrap()[(0, 0)], c(0.0));

        let ones = AlgebraElement::from_terms(1, Basis::Semigroup, enumerate(1).into_iter().map(|s| (s, c(1.0)))).unwrap();
        let hat = naive_transform(&ones, Family::Halverson).unwrap();
        assert_eq!(hat.block(&label(&[], 1)).unwrap()[(0, 0)], c(2.0));
        assert_eq!(hat.block(&label(&[1], 1)).unwrap()[(0, 0)], c(1.0));
        assert_eq!(hat.ops.multiply_adds, 2 * 2);

        assert!(naive_transform(&ones, Family::Stein).is_err());
    }

    #[test]
    fn stein_point_mass_lands_in_one_cell() {
        let s = PartialPermutation::from_pairs(2, &[(2, 1)]).unwrap();
        let hat = stein_fft(&AlgebraElement::point(s, Basis::Groupoid)).unwrap();
        for (l, m) in hat.blocks() {
            for i in 0..m.nrows() {
                for j in 0..m.ncols() {
                    let expected = if *l == label(&[1], 2) && (i, j) == (0, 1) { 1.0 } else { 0.0 };
                    assert_eq!(m[(i, j)], c(expected));
                }
            }
        }
    }

    #[test]
    fn stein_semigroup_identity_on_r1() {
        let id = AlgebraElement::point(PartialPermutation::identity(1), Basis::Semigroup);
        let hat = stein_fft_semigroup(&id).unwrap();
        assert_eq!(hat.block(&label(&[], 1)).unwrap()[(0, 0)], c(1.0));
        assert_eq!(hat.block(&label(&[1], 1)).unwrap()[(0, 0)], c(1.0));
        let zero = stein_fft_semigroup(&AlgebraElement::zero(3, Basis::Semigroup)).unwrap();
        assert_eq!(zero, FourierCoefficients::zeros(3, Family::Stein));
    }

    #[test]
    fn rank_filter() {
        let mut f = AlgebraElement::zero(3, Basis::Groupoid);
        for s in enumerate(3).into_iter().filter(|s| s.rank() == 2) {
            f.add_term(s, c(s.images().flatten().sum::<usize>() as f64)).unwrap();
        }
        let hat = stein_fft(&f).unwrap();
        for (l, m) in hat.blocks() {
            if l.k() != 2 {
                assert!(m.iter().all(|z| z.norm() == 0.0));
            }
        }
    }

    #[test]
    fn fast_transforms_match_the_oracle() {
        for n in 0..=4 {
            let plan = RookFourier::new(n);
            for seed in 0..3 {
                let g = random(n, Basis::Groupoid, seed);
                let naive = plan.naive(&g, Family::Stein).unwrap();
                let fast = plan.stein_fft(&g).unwrap();
                assert!(fast.approx_eq(&naive, TOL), "stein n={n}");
                assert_eq!(naive.ops.multiply_adds, g.support_len() as u64 * crate::rook::size(n));
                assert!(fast.ops.multiply_adds <= stein_bound(n));

                let s = random(n, Basis::Semigroup, 100 + seed);
                let naive = plan.naive(&s, Family::Halverson).unwrap();
                let fast = plan.recursive_fft(&s).unwrap();
                assert!(fast.approx_eq(&naive, TOL), "recursive n={n}");
                assert!(fast.ops.multiply_adds <= recursive_bound(n), "n={n}: {:?}", fast.ops);

                let via = plan.stein_fft_semigroup(&s).unwrap();
                let oracle = plan.naive(&to_groupoid(&s).unwrap(), Family::Stein).unwrap();
                assert!(via.approx_eq(&oracle, TOL));
                assert!(via.ops.multiply_adds <= stein_semigroup_bound(n));
            }
        }
    }

    #[test]
    fn wrong_basis_is_rejected() {
        let plan = RookFourier::new(2);
        assert!(plan.recursive_fft(&random(2, Basis::Groupoid, 0)).is_err());
        assert!(plan.stein_fft(&random(2, Basis::Semigroup, 0)).is_err());
        assert!(plan.stein_fft(&random(3, Basis::Groupoid, 0)).is_err());
    }

    #[test]
    fn subproblem_sizes_follow_the_split() {
        let plan = RookFourier::new(3);
        let level = &plan.chain()[3];
        let total: usize = level.type1.iter().map(Vec::len).sum::<usize>()
            + level.type2.iter().flatten().filter(|x| x.is_some()).count()
            + level.type3.len();
        assert_eq!(total, 34);
        let all = enumerate(3);
        let count = |t| all.iter().filter(|s| split_type(s) == t).count();
        assert_eq!(level.type1.iter().map(Vec::len).sum::<usize>(), count(SplitType::Type1));
        assert_eq!(level.type2.iter().flatten().filter(|x| x.is_some()).count(), count(SplitType::Type2));
        assert_eq!(level.type3.len(), count(SplitType::Type3));
    }

    #[test]
    fn convolution_theorem_both_pairings() {
        for n in 0..=3 {
            let plan = RookFourier::new(n);
            let (f, g) = (random(n, Basis::Groupoid, 1), random(n, Basis::Groupoid, 2));
            let lhs = plan.stein_fft(&convolve(&f, &g).unwrap()).unwrap();
            let rhs = plan.stein_fft(&f).unwrap().mul(&plan.stein_fft(&g).unwrap()).unwrap();
            assert!(lhs.approx_eq(&rhs, TOL));

            let (f, g) = (random(n, Basis::Semigroup, 3), random(n, Basis::Semigroup, 4));
            let lhs = plan.recursive_fft(&convolve(&f, &g).unwrap()).unwrap();
            let rhs = plan.recursive_fft(&f).unwrap().mul(&plan.recursive_fft(&g).unwrap()).unwrap();
            assert!(lhs.approx_eq(&rhs, TOL));
        }
    }

    #[test]
    fn inversion_round_trips() {
        for n in 0..=3 {
            let plan = RookFourier::new(n);
            for s in enumerate(n) {
                let f = AlgebraElement::point(s, Basis::Groupoid);
                let back = plan.invert(&plan.stein_fft(&f).unwrap()).unwrap();
                assert!(back.approx_eq(&f, TOL), "{s}");
            }
            let g = random(n, Basis::Semigroup, 9);
            let back = plan.invert(&plan.recursive_fft(&g).unwrap()).unwrap();
            assert!(back.approx_eq(&to_groupoid(&g).unwrap(), TOL));
        }
        let zero_map = AlgebraElement::point(PartialPermutation::zero(2), Basis::Groupoid);
        assert_eq!(fourier_invert(&stein_fft(&zero_map).unwrap()).unwrap(), zero_map);
    }

    #[test]
    fn transforms_of_basis_vectors_are_independent() {
        for n in 0..=3 {
            let plan = RookFourier::new(n);
            let elems = enumerate(n);
            for family in [Family::Stein, Family::Halverson] {
                let basis = if family == Family::Stein { Basis::Groupoid } else { Basis::Semigroup };
                let size = elems.len();
                let mut m = DMatrix::<f64>::zeros(size, size);
                for (col, s) in elems.iter().enumerate() {
                    let hat = plan.naive(&AlgebraElement::point(*s, basis), family).unwrap();
                    let flat: Vec<f64> = hat.blocks().iter().flat_map(|(_, b)| b.iter().map(|z| z.re)).collect();
                    assert_eq!(flat.len(), size);
                    m.set_column(col, &nalgebra::DVector::from_vec(flat));
                }
                assert_eq!(m.rank(1e-9), size, "{family} n={n}");
            }
        }
    }
}
