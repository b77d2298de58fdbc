use std::collections::HashMap;
use std::fmt;

use crate::sparse::SparseMatrix;
use crate::symmetric::Partition;

/// A filling of a Young diagram by distinct positive integers.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct StandardTableau {
    shape: Partition,
    rows: Vec<Vec<usize>>,
}

impl StandardTableau {
    /// Builds a tableau from its rows; `None` if rows or columns fail to increase
    /// or an entry repeats.
    pub fn from_rows(rows: Vec<Vec<usize>>) -> Option<Self> {
        let lens: Vec<usize> = rows.iter().map(Vec::len).collect();
        let shape = Partition::new(&lens).ok()?;
        let t = Self { shape, rows };
        let mut entries = t.entries();
        entries.sort_unstable();
        if entries.windows(2).any(|w| w[0] == w[1]) || entries.first() == Some(&0) {
            return None;
        }
        t.is_standard().then_some(t)
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn entries(&self) -> Vec<usize> {
        self.rows.iter().flatten().copied().collect()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.position(x).is_some()
    }

    /// `(row, col)` of entry `x`, 0-based.
    pub fn position(&self, x: usize) -> Option<(usize, usize)> {
        self.rows.iter().enumerate().find_map(|(r, row)| {
            row.iter().position(|&v| v == x).map(|c| (r, c))
        })
    }

    /// Content `col − row` of the box holding `x`.
    pub fn content(&self, x: usize) -> Option<i64> {
        self.position(x).map(|(r, c)| c as i64 - r as i64)
    }

    pub fn is_standard(&self) -> bool {
        for (r, row) in self.rows.iter().enumerate() {
            if row.windows(2).any(|w| w[0] >= w[1]) {
                return false;
            }
            if r > 0 {
                let above = &self.rows[r - 1];
                if row.iter().zip(above).any(|(b, a)| a >= b) {
                    return false;
                }
            }
        }
        true
    }

    /// Swaps the labels `i-1` and `i` wherever they occur.
    pub fn swap_adjacent(&self, i: usize) -> Self {
        let rows = self
            .rows
            .iter()
            .map(|row| {
                row.iter()
                    .map(|&v| {
                        if v == i - 1 {
                            i
                        } else if v == i {
                            i - 1
                        } else {
                            v
                        }
                    })
                    .collect()
            })
            .collect();
        Self {
            shape: self.shape.clone(),
            rows,
        }
    }

    fn place(&self, row: usize, x: usize) -> Self {
        let mut rows = self.rows.clone();
        if row == rows.len() {
            rows.push(Vec::new());
        }
        rows[row].push(x);
        let lens: Vec<usize> = rows.iter().map(Vec::len).collect();
        Self {
            shape: Partition::new(&lens).expect("placing in a corner keeps the shape"),
            rows,
        }
    }
}

impl fmt::Debug for StandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| r.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" "))
            .collect();
        write!(f, "[{}]", rows.join(" / "))
    }
}

/// `n`-standard tableaux of `shape` (entries from `{1, …, n}`, each at most
/// once) in generalized last-letter order: tableaux without `n` first, then
/// those with `n` in each corner from top to bottom, each group ordered the
/// same way one level down. For `shape ⊢ n` this is the usual last-letter order.
pub fn n_standard_tableaux(shape: &Partition, n: usize) -> Vec<StandardTableau> {
    if shape.weight() > n {
        return Vec::new();
    }
    if n == 0 {
        return vec![StandardTableau {
            shape: Partition::empty(),
            rows: Vec::new(),
        }];
    }
    let mut out = n_standard_tableaux(shape, n - 1);
    for row in shape.corners() {
        let smaller = shape.remove_corner(row);
        out.extend(
            n_standard_tableaux(&smaller, n - 1)
                .into_iter()
                .map(|t| t.place(row, n)),
        );
    }
    out
}

/// Standard tableaux of `shape` using exactly `{1, …, |shape|}`, last-letter order.
pub fn standard_tableaux(shape: &Partition) -> Vec<StandardTableau> {
    n_standard_tableaux(shape, shape.weight())
}

/// Image of `t_i = (i-1, i)` on the span of `basis`, columns indexed by `basis`:
///
/// - both `i-1, i ∈ L`: `t_i v_L = r⁻¹ v_L + (1 + r⁻¹) v_{t_i L}` with
///   `r = ct(L(i)) − ct(L(i-1))`, the second term dropped when `t_i L` is not standard;
/// - exactly one of them in `L`: `t_i v_L = v_{t_i L}`;
/// - neither: `t_i v_L = v_L`.
pub fn transposition_action(
    basis: &[StandardTableau],
    index: &HashMap<StandardTableau, usize>,
    i: usize,
) -> SparseMatrix {
    let mut triplets = Vec::new();
    for (col, t) in basis.iter().enumerate() {
        match (t.content(i - 1), t.content(i)) {
            (Some(c_prev), Some(c_cur)) => {
                let r = (c_cur - c_prev) as f64;
                triplets.push((col, col, 1.0 / r));
                let swapped = t.swap_adjacent(i);
                if swapped.is_standard() {
                    let row = index[&swapped];
                    triplets.push((row, col, 1.0 + 1.0 / r));
                }
            }
            (None, None) => triplets.push((col, col, 1.0)),
            _ => {
                let row = index[&t.swap_adjacent(i)];
                triplets.push((row, col, 1.0));
            }
        }
    }
    SparseMatrix::from_triplets(basis.len(), triplets)
}

pub(crate) fn index_of(basis: &[StandardTableau]) -> HashMap<StandardTableau, usize> {
    basis.iter().enumerate().map(|(i, t)| (t.clone(), i)).collect()
}
