//! Exact rational matrices: fraction-free rank and determinant, pattern
//! checks, and the plain-text matrix format.
//!
//! Rank and determinant clear denominators row by row and then run Bareiss
//! fraction-free elimination over the integers, pivoting on the first
//! nonzero entry of the remaining submatrix (searching rows and columns), so
//! every intermediate value stays an exact integer.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::graph::Graph;

/// Errors raised while constructing or parsing matrices.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MatrixError {
    #[error("matrix must have positive dimensions")]
    EmptyMatrix,
    #[error("row {row} has {found} entries, expected {expected}")]
    RaggedRow {
        row: usize,
        found: usize,
        expected: usize,
    },
    #[error("row {row}, column {col}: unparseable entry `{token}`")]
    BadEntry {
        row: usize,
        col: usize,
        token: String,
    },
}

/// A dense matrix of exact rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigRational>,
}

impl RationalMatrix {
    /// A zero matrix of the given positive dimensions.
    pub fn zero(rows: usize, cols: usize) -> Result<RationalMatrix, MatrixError> {
        if rows == 0 || cols == 0 {
            return Err(MatrixError::EmptyMatrix);
        }
        Ok(RationalMatrix {
            rows,
            cols,
            data: vec![BigRational::zero(); rows * cols],
        })
    }

    /// Builds a matrix from rows, which must be nonempty and rectangular.
    pub fn from_rows(rows: Vec<Vec<BigRational>>) -> Result<RationalMatrix, MatrixError> {
        if rows.is_empty() || rows[0].is_empty() {
            return Err(MatrixError::EmptyMatrix);
        }
        let cols = rows[0].len();
        for (i, row) in rows.iter().enumerate() {
            if row.len() != cols {
                return Err(MatrixError::RaggedRow {
                    row: i + 1,
                    found: row.len(),
                    expected: cols,
                });
            }
        }
        Ok(RationalMatrix {
            rows: rows.len(),
            cols,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigRational {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: BigRational) {
        self.data[i * self.cols + j] = value;
    }

    /// Clears denominators row by row, returning integer rows; scaling a row
    /// by a positive integer changes neither the rank nor the zero pattern.
    fn integer_rows(&self) -> Vec<Vec<BigInt>> {
        let mut out = Vec::with_capacity(self.rows);
        for i in 0..self.rows {
            let mut lcm = BigInt::one();
            for j in 0..self.cols {
                lcm = lcm.lcm(self.get(i, j).denom());
            }
            out.push(
                (0..self.cols)
                    .map(|j| {
                        let e = self.get(i, j);
                        e.numer() * (&lcm / e.denom())
                    })
                    .collect(),
            );
        }
        out
    }

    /// Exact rank via fraction-free Bareiss elimination.
    pub fn rank(&self) -> usize {
        bareiss(self.integer_rows()).0
    }

    /// Exact determinant of a square matrix.
    ///
    /// # Panics
    /// Panics if the matrix is not square.
    pub fn det(&self) -> BigRational {
        assert_eq!(self.rows, self.cols, "determinant needs a square matrix");
        let mut scale = BigInt::one();
        let mut int_rows = Vec::with_capacity(self.rows);
        for i in 0..self.rows {
            let mut lcm = BigInt::one();
            for j in 0..self.cols {
                lcm = lcm.lcm(self.get(i, j).denom());
            }
            scale *= &lcm;
            int_rows.push(
                (0..self.cols)
                    .map(|j| {
                        let e = self.get(i, j);
                        e.numer() * (&lcm / e.denom())
                    })
                    .collect::<Vec<_>>(),
            );
        }
        let n = self.rows;
        let (rank, last_pivot, sign) = bareiss(int_rows);
        if rank < n {
            return BigRational::zero();
        }
        let det = if sign { -last_pivot } else { last_pivot };
        BigRational::new(det, scale)
    }

    /// True when the matrix is symmetric, square of order `g.n()`, and its
    /// off-diagonal support is exactly the edge set of `g` (the diagonal is
    /// unconstrained).
    pub fn pattern_matches(&self, g: &Graph) -> bool {
        if self.rows != g.n() || self.cols != g.n() {
            return false;
        }
        for i in 0..self.rows {
            for j in (i + 1)..self.cols {
                if self.get(i, j) != self.get(j, i) {
                    return false;
                }
                if self.get(i, j).is_zero() == g.has_edge(i, j) {
                    return false;
                }
            }
        }
        true
    }
}

/// Bareiss elimination over integer rows.  Returns `(rank, last_pivot,
/// sign_flipped)` where `last_pivot` is the final pivot value (the
/// determinant of the permuted matrix when elimination completes on a square
/// input) and `sign_flipped` records whether the row/column swaps changed the
/// determinant's sign.
fn bareiss(mut m: Vec<Vec<BigInt>>) -> (usize, BigInt, bool) {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut prev = BigInt::one();
    let mut sign = false;
    let mut r = 0;
    while r < rows.min(cols) {
        let mut pivot = None;
        'search: for (i, row) in m.iter().enumerate().skip(r) {
            for (j, value) in row.iter().enumerate().skip(r) {
                if !value.is_zero() {
                    pivot = Some((i, j));
                    break 'search;
                }
            }
        }
        let Some((pi, pj)) = pivot else {
            break;
        };
        if pi != r {
            m.swap(r, pi);
            sign = !sign;
        }
        if pj != r {
            for row in m.iter_mut() {
                row.swap(r, pj);
            }
            sign = !sign;
        }
        for i in (r + 1)..rows {
            for j in (r + 1)..cols {
                let t = &m[r][r] * &m[i][j] - &m[i][r] * &m[r][j];
                m[i][j] = t / &prev;
            }
            m[i][r] = BigInt::zero();
        }
        prev = m[r][r].clone();
        r += 1;
    }
    (r, prev, sign)
}

/// Exact rank of a small integer matrix in machine arithmetic: Bareiss over
/// `i128` with overflow checks, falling back to big integers when a product
/// would overflow.  Agrees with [`RationalMatrix::rank`] on all inputs.
pub fn rank_of_int_matrix(entries: &[Vec<i64>]) -> usize {
    let rows = entries.len();
    let cols = if rows == 0 { 0 } else { entries[0].len() };
    let mut m: Vec<Vec<i128>> = entries
        .iter()
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .collect();
    let mut prev: i128 = 1;
    let mut r = 0;
    while r < rows.min(cols) {
        let mut pivot = None;
        'search: for (i, row) in m.iter().enumerate().skip(r) {
            for (j, &value) in row.iter().enumerate().skip(r) {
                if value != 0 {
                    pivot = Some((i, j));
                    break 'search;
                }
            }
        }
        let Some((pi, pj)) = pivot else {
            break;
        };
        m.swap(r, pi);
        if pj != r {
            for row in m.iter_mut() {
                row.swap(r, pj);
            }
        }
        for i in (r + 1)..rows {
            for j in (r + 1)..cols {
                let prod = match m[r][r]
                    .checked_mul(m[i][j])
                    .zip(m[i][r].checked_mul(m[r][j]))
                    .and_then(|(a, b)| a.checked_sub(b))
                {
                    Some(t) => t,
                    None => return rank_of_int_matrix_big(entries),
                };
                m[i][j] = prod / prev;
            }
            m[i][r] = 0;
        }
        prev = m[r][r];
        r += 1;
    }
    r
}

fn rank_of_int_matrix_big(entries: &[Vec<i64>]) -> usize {
    let m: Vec<Vec<BigInt>> = entries
        .iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    bareiss(m).0
}

/// The diagonally dominant full-rank witness for a graph: entry 1 on every
/// edge and `deg(i) + 1` on the diagonal.  Gershgorin's circle theorem makes
/// it nonsingular, so it certifies `mr(G) <= n` trivially and exercises the
/// pattern checks.
pub fn full_rank_witness(g: &Graph) -> RationalMatrix {
    let n = g.n();
    let mut m = RationalMatrix::zero(n.max(1), n.max(1)).expect("positive dims");
    for i in 0..n {
        m.set(i, i, BigRational::from_integer(BigInt::from(g.degree(i) as i64 + 1)));
    }
    for &(u, v) in g.edges() {
        m.set(u, v, BigRational::one());
        m.set(v, u, BigRational::one());
    }
    m
}

/// Parses the plain-text matrix format: one row per line, entries separated
/// by whitespace, each an integer or a fraction `p/q`.
pub fn parse_matrix(text: &str) -> Result<RationalMatrix, MatrixError> {
    let mut rows: Vec<Vec<BigRational>> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        let mut row = Vec::new();
        for (col, token) in line.split_whitespace().enumerate() {
            let value = BigRational::from_str(token).map_err(|_| MatrixError::BadEntry {
                row: idx + 1,
                col: col + 1,
                token: token.to_string(),
            })?;
            row.push(value);
        }
        if let Some(first) = rows.first() {
            if row.len() != first.len() {
                return Err(MatrixError::RaggedRow {
                    row: idx + 1,
                    found: row.len(),
                    expected: first.len(),
                });
            }
        }
        rows.push(row);
    }
    RationalMatrix::from_rows(rows)
}

impl fmt::Display for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    fn int_matrix(rows: &[&[i64]]) -> RationalMatrix {
        RationalMatrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| rat(x, 1)).collect())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn rank_basics() {
        assert_eq!(int_matrix(&[&[0]]).rank(), 0);
        assert_eq!(int_matrix(&[&[5]]).rank(), 1);
        assert_eq!(int_matrix(&[&[1, 2], &[2, 4]]).rank(), 1);
        assert_eq!(int_matrix(&[&[1, 0], &[0, 1]]).rank(), 2);
        assert_eq!(int_matrix(&[&[0, 0, 0], &[0, 0, 0]]).rank(), 0);
        // Rank 2: rows 1 and 3 are independent, row 2 = row 1 doubled.
        assert_eq!(
            int_matrix(&[&[1, 2, 3], &[2, 4, 6], &[0, 1, 1]]).rank(),
            2
        );
    }

    #[test]
    fn rank_handles_rationals() {
        let m = RationalMatrix::from_rows(vec![
            vec![rat(1, 2), rat(1, 3)],
            vec![rat(1, 6), rat(1, 9)],
        ])
        .unwrap();
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn det_known_values() {
        assert_eq!(int_matrix(&[&[3]]).det(), rat(3, 1));
        assert_eq!(int_matrix(&[&[1, 2], &[3, 4]]).det(), rat(-2, 1));
        assert_eq!(
            int_matrix(&[&[2, 1, 0], &[1, 3, 1], &[0, 1, 2]]).det(),
            rat(8, 1)
        );
        let m = RationalMatrix::from_rows(vec![
            vec![rat(1, 2), rat(0, 1)],
            vec![rat(0, 1), rat(2, 3)],
        ])
        .unwrap();
        assert_eq!(m.det(), rat(1, 3));
        // Determinant zero through a column swap path.
        assert_eq!(int_matrix(&[&[0, 0], &[0, 1]]).det(), rat(0, 1));
        assert_eq!(int_matrix(&[&[0, 1], &[1, 0]]).det(), rat(-1, 1));
    }

    #[test]
    fn full_rank_witness_for_path_three() {
        let g = Graph::path(3);
        let w = full_rank_witness(&g);
        assert_eq!(w, int_matrix(&[&[2, 1, 0], &[1, 3, 1], &[0, 1, 2]]));
        assert_eq!(w.rank(), 3);
        assert!(w.pattern_matches(&g));
    }

    #[test]
    fn pattern_checks() {
        let g = Graph::path(4);
        let w = int_matrix(&[
            &[0, 1, 0, 0],
            &[1, 0, 1, 0],
            &[0, 1, 1, 1],
            &[0, 0, 1, 1],
        ]);
        assert!(w.pattern_matches(&g));
        assert_eq!(w.rank(), 3);
        // Zero where an edge demands nonzero.
        let bad = int_matrix(&[
            &[0, 0, 0, 0],
            &[0, 0, 1, 0],
            &[0, 1, 1, 1],
            &[0, 0, 1, 1],
        ]);
        assert!(!bad.pattern_matches(&g));
        // Nonzero on a non-edge.
        let bad = int_matrix(&[
            &[0, 1, 5, 0],
            &[1, 0, 1, 0],
            &[5, 1, 1, 1],
            &[0, 0, 1, 1],
        ]);
        assert!(!bad.pattern_matches(&g));
        // Asymmetric.
        let bad = int_matrix(&[
            &[0, 1, 0, 0],
            &[2, 0, 1, 0],
            &[0, 1, 1, 1],
            &[0, 0, 1, 1],
        ]);
        assert!(!bad.pattern_matches(&g));
        // Wrong size.
        assert!(!int_matrix(&[&[1]]).pattern_matches(&g));
    }

    #[test]
    fn parse_and_render_round_trip() {
        let text = "-22928/4129 4 0\n4 -2 -3\n0 -3 -1\n";
        let m = parse_matrix(text).unwrap();
        assert_eq!(m.get(0, 0), &rat(-22928, 4129));
        assert_eq!(m.to_string(), text);
    }

    #[test]
    fn parse_errors() {
        assert_eq!(parse_matrix(""), Err(MatrixError::EmptyMatrix));
        assert_eq!(
            parse_matrix("1 2\n3\n"),
            Err(MatrixError::RaggedRow {
                row: 2,
                found: 1,
                expected: 2
            })
        );
        assert_eq!(
            parse_matrix("1 x\n"),
            Err(MatrixError::BadEntry {
                row: 1,
                col: 2,
                token: "x".into()
            })
        );
    }

    #[test]
    fn int_rank_fast_path_matches_exact() {
        let entries = vec![vec![1i64, 2, 3], vec![2, 4, 6], vec![0, 1, 1]];
        assert_eq!(rank_of_int_matrix(&entries), 2);
    }

    proptest! {
        #[test]
        fn rank_bounded_and_scale_invariant(
            rows in 1usize..5,
            cols in 1usize..5,
            seed in proptest::collection::vec(-9i64..=9, 25),
            scale_num in 1i64..5,
        ) {
            let m = RationalMatrix::from_rows(
                (0..rows)
                    .map(|i| (0..cols).map(|j| rat(seed[i * cols + j], 1)).collect())
                    .collect(),
            )
            .unwrap();
            let r = m.rank();
            prop_assert!(r <= rows.min(cols));
            // Scaling every entry by a nonzero rational preserves rank.
            let scaled = RationalMatrix::from_rows(
                (0..rows)
                    .map(|i| {
                        (0..cols)
                            .map(|j| m.get(i, j) * rat(scale_num, 3))
                            .collect()
                    })
                    .collect(),
            )
            .unwrap();
            prop_assert_eq!(scaled.rank(), r);
        }

        #[test]
        fn machine_rank_agrees_with_exact_rank(
            rows in 1usize..5,
            cols in 1usize..5,
            seed in proptest::collection::vec(-50i64..=50, 25),
        ) {
            let entries: Vec<Vec<i64>> = (0..rows)
                .map(|i| (0..cols).map(|j| seed[i * cols + j]).collect())
                .collect();
            let m = RationalMatrix::from_rows(
                entries
                    .iter()
                    .map(|r| r.iter().map(|&x| rat(x, 1)).collect())
                    .collect(),
            )
            .unwrap();
            prop_assert_eq!(rank_of_int_matrix(&entries), m.rank());
        }

        #[test]
        fn det_zero_iff_rank_deficient(
            n in 1usize..4,
            seed in proptest::collection::vec(-9i64..=9, 9),
        ) {
            let m = RationalMatrix::from_rows(
                (0..n)
                    .map(|i| (0..n).map(|j| rat(seed[i * n + j], 1)).collect())
                    .collect(),
            )
            .unwrap();
            prop_assert_eq!(m.det().is_zero(), m.rank() < n);
        }
    }
}
