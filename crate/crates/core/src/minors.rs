//! Symbolic pattern matrices and exact minor enumeration.
//!
//! For a graph G on n vertices, the symbolic matrix A*(G) has independent
//! diagonal entries `x_i`, the entry `y_e` in positions (u, v) and (v, u)
//! for each edge e = {u, v}, and structural zeros elsewhere.  Real symmetric
//! matrices whose off-diagonal support is exactly E(G) are precisely the
//! evaluations of A*(G) at points with every `y_e` nonzero.
//!
//! A k-minor is the determinant of a k x k submatrix selected by a row set
//! and a column set.  Ranks below k are characterized by the vanishing of
//! every k-minor, so each level contributes the system "all k-minors are
//! zero" plus one Rabinowitsch generator `y_e * yh_e - 1` per edge to force
//! the off-diagonal support.

use std::collections::{HashMap, HashSet};
use std::fmt;

use itertools::Itertools;

use crate::graph::Graph;
use crate::groebner::PolySystem;
use crate::poly::{Monomial, MonomialOrder, Polynomial, Variable};

/// Exact binomial coefficient in u128 (never overflows for n <= 62).
pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc
            .checked_mul((n - i) as u128)
            .expect("binomial fits in u128");
        acc /= (i + 1) as u128;
    }
    acc
}

/// The symbolic matrix A*(G) of a graph.
#[derive(Debug, Clone)]
pub struct SymbolicMatrix {
    n: usize,
    order: MonomialOrder,
    entries: Vec<Vec<Option<Variable>>>,
}

impl SymbolicMatrix {
    pub fn new(graph: &Graph, order: MonomialOrder) -> SymbolicMatrix {
        let n = graph.n();
        assert!(n <= 64, "symbolic matrices support at most 64 vertices");
        let mut entries = vec![vec![None; n]; n];
        for (i, row) in entries.iter_mut().enumerate() {
            row[i] = Some(Variable::Diag(i as u32));
        }
        for (e, &(u, v)) in graph.edges().iter().enumerate() {
            entries[u][v] = Some(Variable::Edge(e as u32));
            entries[v][u] = Some(Variable::Edge(e as u32));
        }
        SymbolicMatrix { n, order, entries }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    /// The variable at position (i, j), or `None` for a structural zero.
    pub fn entry(&self, i: usize, j: usize) -> Option<Variable> {
        self.entries[i][j]
    }

    fn entry_poly(&self, i: usize, j: usize) -> Polynomial {
        match self.entries[i][j] {
            Some(v) => Polynomial::variable(self.order, v),
            None => Polynomial::zero(self.order),
        }
    }

    /// The exact determinant of the submatrix on `rows` x `cols` (both
    /// strictly increasing index lists of equal length).
    pub fn minor(&self, rows: &[usize], cols: &[usize]) -> Polynomial {
        let mut memo = HashMap::new();
        self.minor_memo(rows, cols, &mut memo)
    }

    /// Cofactor expansion along the line with the most structural zeros,
    /// memoized on (row set, column set); symmetry of A* gives
    /// det A*[I, J] = det A*[J, I], so keys are stored unordered.
    fn minor_memo(
        &self,
        rows: &[usize],
        cols: &[usize],
        memo: &mut HashMap<(u64, u64), Polynomial>,
    ) -> Polynomial {
        debug_assert_eq!(rows.len(), cols.len());
        debug_assert!(rows.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(cols.windows(2).all(|w| w[0] < w[1]));
        if rows.is_empty() {
            return Polynomial::one(self.order);
        }
        if rows.len() == 1 {
            return self.entry_poly(rows[0], cols[0]);
        }
        let rmask: u64 = rows.iter().fold(0, |m, &i| m | (1 << i));
        let cmask: u64 = cols.iter().fold(0, |m, &j| m | (1 << j));
        let key = (rmask.min(cmask), rmask.max(cmask));
        if let Some(p) = memo.get(&key) {
            return p.clone();
        }
        // Pick the row or column with the most structural zeros; ties keep
        // the earliest candidate, rows before columns.
        let mut best_is_row = true;
        let mut best_pos = 0usize;
        let mut best_zeros = 0usize;
        let mut first = true;
        for (pi, &i) in rows.iter().enumerate() {
            let zeros = cols.iter().filter(|&&j| self.entries[i][j].is_none()).count();
            if first || zeros > best_zeros {
                best_is_row = true;
                best_pos = pi;
                best_zeros = zeros;
                first = false;
            }
        }
        for (pj, &j) in cols.iter().enumerate() {
            let zeros = rows.iter().filter(|&&i| self.entries[i][j].is_none()).count();
            if zeros > best_zeros {
                best_is_row = false;
                best_pos = pj;
                best_zeros = zeros;
            }
        }
        let mut det = Polynomial::zero(self.order);
        if best_is_row {
            let i = rows[best_pos];
            let sub_rows: Vec<usize> = rows
                .iter()
                .copied()
                .filter(|&r| r != i)
                .collect();
            for (pc, &j) in cols.iter().enumerate() {
                let Some(v) = self.entries[i][j] else {
                    continue;
                };
                let sub_cols: Vec<usize> =
                    cols.iter().copied().filter(|&c| c != j).collect();
                let sub = self.minor_memo(&sub_rows, &sub_cols, memo);
                let sign = if (best_pos + pc).is_multiple_of(2) { 1 } else { -1 };
                let term = sub.mul_term(
                    &num_rational::BigRational::from_integer(sign.into()),
                    &Monomial::var(v),
                );
                det = det.add(&term).expect("orders match");
            }
        } else {
            let j = cols[best_pos];
            let sub_cols: Vec<usize> = cols
                .iter()
                .copied()
                .filter(|&c| c != j)
                .collect();
            for (pr, &i) in rows.iter().enumerate() {
                let Some(v) = self.entries[i][j] else {
                    continue;
                };
                let sub_rows: Vec<usize> =
                    rows.iter().copied().filter(|&r| r != i).collect();
                let sub = self.minor_memo(&sub_rows, &sub_cols, memo);
                let sign = if (pr + best_pos).is_multiple_of(2) { 1 } else { -1 };
                let term = sub.mul_term(
                    &num_rational::BigRational::from_integer(sign.into()),
                    &Monomial::var(v),
                );
                det = det.add(&term).expect("orders match");
            }
        }
        memo.insert(key, det.clone());
        det
    }
}

impl fmt::Display for SymbolicMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.n {
            let row: Vec<String> = (0..self.n)
                .map(|j| match self.entries[i][j] {
                    Some(v) => v.to_string(),
                    None => "0".to_string(),
                })
                .collect();
            writeln!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}

/// All k-minors of A*(G), summarized: the total ordered count C(n,k)^2 and
/// the distinct nonzero minors up to sign, normalized and canonically
/// sorted.  Identically zero minors impose no constraint and are dropped.
#[derive(Debug, Clone)]
pub struct MinorLevel {
    pub k: usize,
    pub all_count: u128,
    pub distinct: Vec<Polynomial>,
}

/// Enumerates the k-minors of A*(G).  Unordered submatrix pairs are
/// evaluated once (det A*[I, J] = det A*[J, I]); the count still reflects
/// all ordered pairs.
pub fn enumerate_minors(graph: &Graph, k: usize, order: MonomialOrder) -> MinorLevel {
    let n = graph.n();
    let all_count = binomial(n as u64, k as u64).pow(2);
    if k > n {
        return MinorLevel {
            k,
            all_count,
            distinct: Vec::new(),
        };
    }
    let matrix = SymbolicMatrix::new(graph, order);
    let combos: Vec<Vec<usize>> = (0..n).combinations(k).collect();
    let mut memo = HashMap::new();
    let mut seen: HashSet<Polynomial> = HashSet::new();
    let mut distinct = Vec::new();
    for (a, rows) in combos.iter().enumerate() {
        for cols in &combos[a..] {
            let det = matrix.minor_memo(rows, cols, &mut memo);
            if det.is_zero() {
                continue;
            }
            let normalized = det.normalize().expect("nonzero");
            if seen.insert(normalized.clone()) {
                distinct.push(normalized);
            }
        }
    }
    distinct.sort_unstable_by(|a, b| a.canonical_cmp(b));
    MinorLevel {
        k,
        all_count,
        distinct,
    }
}

/// The level-k solvability system: every distinct k-minor, plus one
/// Rabinowitsch generator `y_e * yh_e - 1` per edge forcing that edge's
/// variable to be nonzero.
pub fn rabinowitsch_system(graph: &Graph, level: &MinorLevel, order: MonomialOrder) -> PolySystem {
    let mut gens = level.distinct.clone();
    for e in 0..graph.edge_count() {
        let y = Polynomial::variable(order, Variable::Edge(e as u32));
        let yh = Polynomial::variable(order, Variable::EdgeInv(e as u32));
        let product = y.mul(&yh).expect("orders match");
        gens.push(
            product
                .sub(&Polynomial::one(order))
                .expect("orders match"),
        );
    }
    PolySystem::new(order, gens).expect("orders match")
}
