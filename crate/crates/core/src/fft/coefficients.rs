use nalgebra::DMatrix;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Result, RookError};
use crate::fft::{Family, OpCounter};
use crate::reps::{labels, RookLabel};
use crate::rook::k_subsets;
use crate::symmetric::Partition;

/// One matrix per irreducible representation, for every label of `R_n`
/// (zero blocks included), in [`labels`] order.
#[derive(Clone, Debug, PartialEq)]
pub struct FourierCoefficients {
    n: usize,
    family: Family,
    blocks: Vec<(RookLabel, DMatrix<Complex64>)>,
    pub ops: OpCounter,
}

/// An operation bound attached to a transform result.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundCheck {
    pub bound: u64,
    pub within_bound: bool,
}

impl BoundCheck {
    pub fn new(ops: OpCounter, bound: u64) -> Self {
        Self {
            bound,
            within_bound: ops.multiply_adds <= bound,
        }
    }
}

impl FourierCoefficients {
    /// Validates that `blocks` covers every label of `R_n` in order with matching sizes.
    pub fn new(
        n: usize,
        family: Family,
        blocks: Vec<(RookLabel, DMatrix<Complex64>)>,
        ops: OpCounter,
    ) -> Result<Self> {
        let expected = labels(n);
        if blocks.len() != expected.len() {
            return Err(RookError::Dimension(format!(
                "R_{n} has {} irreducible labels, got {} blocks",
                expected.len(),
                blocks.len()
            )));
        }
        for ((label, m), want) in blocks.iter().zip(&expected) {
            if label != want {
                return Err(RookError::Dimension(format!(
                    "expected block {want:?}, found {label:?}"
                )));
            }
            if m.nrows() != label.dim() || m.ncols() != label.dim() {
                return Err(RookError::Dimension(format!(
                    "block {label:?} must be {d}x{d}, got {}x{}",
                    m.nrows(),
                    m.ncols(),
                    d = label.dim()
                )));
            }
        }
        Ok(Self {
            n,
            family,
            blocks,
            ops,
        })
    }

    /// All-zero coefficients.
    pub fn zeros(n: usize, family: Family) -> Self {
        let blocks = labels(n)
            .into_iter()
            .map(|l| {
                let d = l.dim();
                (l, DMatrix::zeros(d, d))
            })
            .collect();
        Self {
            n,
            family,
            blocks,
            ops: OpCounter::default(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn blocks(&self) -> &[(RookLabel, DMatrix<Complex64>)] {
        &self.blocks
    }

    pub fn labels(&self) -> impl Iterator<Item = &RookLabel> {
        self.blocks.iter().map(|(l, _)| l)
    }

    pub fn block(&self, label: &RookLabel) -> Option<&DMatrix<Complex64>> {
        self.blocks.iter().find(|(l, _)| l == label).map(|(_, m)| m)
    }

    pub fn block_mut(&mut self, label: &RookLabel) -> Option<&mut DMatrix<Complex64>> {
        self.blocks
            .iter_mut()
            .find(|(l, _)| l == label)
            .map(|(_, m)| m)
    }

    /// Keeps the block for `label` and zeros every other one.
    pub fn isolate(&self, label: &RookLabel) -> Result<Self> {
        if self.block(label).is_none() {
            return Err(RookError::InvalidArgument(format!(
                "no label {label:?} for R_{}",
                self.n
            )));
        }
        let mut out = self.clone();
        for (l, m) in out.blocks.iter_mut() {
            if l != label {
                m.fill(Complex64::new(0.0, 0.0));
            }
        }
        Ok(out)
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.n != other.n || self.family != other.family {
            return Err(RookError::Consistency(format!(
                "cannot combine {} coefficients on R_{} with {} coefficients on R_{}",
                self.family, self.n, other.family, other.n
            )));
        }
        Ok(())
    }

    /// Largest entrywise modulus of the difference.
    pub fn max_abs_diff(&self, other: &Self) -> Result<f64> {
        self.check_same(other)?;
        Ok(self
            .blocks
            .iter()
            .zip(&other.blocks)
            .map(|((_, a), (_, b))| (a - b).iter().map(|z| z.norm()).fold(0.0, f64::max))
            .fold(0.0, f64::max))
    }

    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        self.max_abs_diff(other).is_ok_and(|d| d <= tol)
    }

    /// Blockwise matrix product, the image of the algebra product.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let blocks = self
            .blocks
            .iter()
            .zip(&other.blocks)
            .map(|((l, a), (_, b))| (l.clone(), a * b))
            .collect();
        Ok(Self {
            n: self.n,
            family: self.family,
            blocks,
            ops: OpCounter::default(),
        })
    }
}

#[derive(Clone, Copy, Serialize, Deserialize)]
struct ComplexJson {
    re: f64,
    im: f64,
}

#[derive(Serialize, Deserialize)]
struct BlockJson {
    lambda: Vec<usize>,
    k: usize,
    dim: usize,
    rows: Vec<Vec<ComplexJson>>,
}

#[derive(Serialize, Deserialize)]
struct CellJson {
    #[serde(rename = "A")]
    a: Vec<usize>,
    #[serde(rename = "B")]
    b: Vec<usize>,
    lambda: Vec<usize>,
    matrix: Vec<Vec<ComplexJson>>,
}

#[derive(Serialize, Deserialize)]
struct CoefficientsJson {
    n: usize,
    family: Family,
    blocks: Vec<BlockJson>,
    ops: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    cells: Option<Vec<CellJson>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    bound: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    within_bound: Option<bool>,
}

fn rows_of(m: &DMatrix<Complex64>) -> Vec<Vec<ComplexJson>> {
    (0..m.nrows())
        .map(|i| {
            (0..m.ncols())
                .map(|j| ComplexJson {
                    re: m[(i, j)].re,
                    im: m[(i, j)].im,
                })
                .collect()
        })
        .collect()
}

impl FourierCoefficients {
    /// `{n, family, blocks: [{lambda, k, dim, rows}], ops}`. With `cells`, Stein
    /// coefficients also list every `(A, B)` cell separately; `bound` adds the
    /// bound and whether `ops` respects it.
    pub fn to_json(&self, cells: bool, bound: Option<BoundCheck>) -> String {
        let blocks = self
            .blocks
            .iter()
            .map(|(l, m)| BlockJson {
                lambda: l.lambda().parts().to_vec(),
                k: l.k(),
                dim: l.dim(),
                rows: rows_of(m),
            })
            .collect();
        let cells = (cells && self.family == Family::Stein).then(|| self.stein_cells());
        let doc = CoefficientsJson {
            n: self.n,
            family: self.family,
            blocks,
            ops: self.ops.multiply_adds,
            cells,
            bound: bound.map(|b| b.bound),
            within_bound: bound.map(|b| b.within_bound),
        };
        serde_json::to_string_pretty(&doc).expect("plain data serializes")
    }

    fn stein_cells(&self) -> Vec<CellJson> {
        let mut out = Vec::new();
        for (l, m) in &self.blocks {
            let subsets = k_subsets(self.n, l.k());
            let d = l.dim() / subsets.len();
            for a in &subsets {
                for b in &subsets {
                    let cell = m
                        .view((a.colex_index() * d, b.colex_index() * d), (d, d))
                        .into_owned();
                    out.push(CellJson {
                        a: a.elements(),
                        b: b.elements(),
                        lambda: l.lambda().parts().to_vec(),
                        matrix: rows_of(&cell),
                    });
                }
            }
        }
        out
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let doc: CoefficientsJson = serde_json::from_str(text)?;
        let mut blocks = Vec::with_capacity(doc.blocks.len());
        for b in doc.blocks {
            let label = RookLabel::new(Partition::new(&b.lambda)?, doc.n)?;
            if b.rows.len() != b.dim || b.rows.iter().any(|r| r.len() != b.dim) {
                return Err(RookError::Dimension(format!(
                    "block {label:?} rows do not form a {d}x{d} matrix",
                    d = b.dim
                )));
            }
            let m = DMatrix::from_fn(b.dim, b.dim, |i, j| {
                Complex64::new(b.rows[i][j].re, b.rows[i][j].im)
            });
            blocks.push((label, m));
        }
        Self::new(
            doc.n,
            doc.family,
            blocks,
            OpCounter {
                multiply_adds: doc.ops,
            },
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_round_trip_with_cells() {
        let mut f = FourierCoefficients::zeros(2, Family::Stein);
        let l = labels(2)[1].clone();
        f.block_mut(&l).unwrap()[(0, 1)] = Complex64::new(1.5, -2.0);
        f.ops.add(17);
        let text = f.to_json(true, Some(BoundCheck::new(f.ops, 20)));
        assert!(text.contains("\"A\""));
        assert!(text.contains("\"within_bound\": true"));
        let back = FourierCoefficients::from_json(&text).unwrap();
        assert_eq!(back, f);
    }

    #[test]
    fn rejects_incomplete_or_misshapen_blocks() {
        let f = FourierCoefficients::zeros(2, Family::Halverson);
        let mut blocks = f.blocks().to_vec();
        blocks.pop();
        assert!(FourierCoefficients::new(2, Family::Halverson, blocks.clone(), OpCounter::default()).is_err());
        let l = labels(2)[3].clone();
        blocks.push((l, DMatrix::zeros(2, 2)));
        assert!(FourierCoefficients::new(2, Family::Halverson, blocks, OpCounter::default()).is_err());
    }
}
