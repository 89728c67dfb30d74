//! Simple undirected graphs: parsing, connectivity, zero forcing, trees.
//!
//! Vertices are `0..n`.  Edges are stored sorted as `(i, j)` with `i < j`,
//! which fixes the edge indexing used by the symbolic pattern matrices.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

/// Errors raised while parsing or validating graphs.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("empty graph6 input")]
    EmptyInput,
    #[error("graph6 orders above 62 are not supported (byte offset {offset})")]
    UnsupportedOrder { offset: usize },
    #[error("invalid graph6 byte 0x{byte:02x} at offset {offset}")]
    InvalidByte { byte: u8, offset: usize },
    #[error("graph6 bit stream truncated: expected {expected} data bytes, found {found}")]
    Truncated { expected: usize, found: usize },
    #[error("trailing graph6 data at offset {offset}")]
    TrailingData { offset: usize },
    #[error("line {line}: expected `u v`, found {found} tokens")]
    BadTokenCount { line: usize, found: usize },
    #[error("line {line}: unparseable vertex label `{token}`")]
    BadLabel { line: usize, token: String },
    #[error("line {line}: negative vertex label `{token}`")]
    NegativeLabel { line: usize, token: String },
    #[error("line {line}: self-loop at vertex {vertex}")]
    SelfLoop { line: usize, vertex: usize },
    #[error("line {line}: malformed header `{text}` (expected `n=<count>`)")]
    BadHeader { line: usize, text: String },
    #[error("line {line}: header must precede all edges")]
    HeaderAfterEdges { line: usize },
    #[error("line {line}: vertex label {label} exceeds declared n={n}")]
    LabelOutOfRange { line: usize, label: usize, n: usize },
    #[error("edge ({u}, {v}) out of range for n={n}")]
    EdgeOutOfRange { u: usize, v: usize, n: usize },
    #[error("graph is not a tree: {reason}")]
    NotATree { reason: String },
}

/// An undirected simple graph with vertex set `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    /// Builds a graph from an edge list; edges are normalized to `i < j`,
    /// deduplicated, and sorted.  Self-loops and out-of-range endpoints are
    /// rejected.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        let mut set = BTreeSet::new();
        for &(u, v) in edges {
            if u == v {
                return Err(GraphError::SelfLoop { line: 0, vertex: u });
            }
            if u >= n || v >= n {
                return Err(GraphError::EdgeOutOfRange { u, v, n });
            }
            set.insert((u.min(v), u.max(v)));
        }
        Ok(Graph {
            n,
            edges: set.into_iter().collect(),
        })
    }

    /// Number of vertices.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Edges sorted ascending, each as `(i, j)` with `i < j`.  The position of
    /// an edge in this slice is its edge index.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Number of edges.
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        if u == v {
            return false;
        }
        self.edges.binary_search(&(u.min(v), u.max(v))).is_ok()
    }

    /// Index of edge `{u, v}` in the sorted edge list, if present.
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        if u == v {
            return None;
        }
        self.edges.binary_search(&(u.min(v), u.max(v))).ok()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges
            .iter()
            .filter(|&&(a, b)| a == v || b == v)
            .count()
    }

    /// Adjacency lists, each sorted ascending.
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        adj
    }

    /// The path on `n` vertices `0 - 1 - ... - (n-1)`.
    pub fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::new(n, &edges).expect("path edges are valid")
    }

    /// The complete graph on `n` vertices.
    pub fn complete(n: usize) -> Graph {
        let mut edges = Vec::new();
        for j in 1..n {
            for i in 0..j {
                edges.push((i, j));
            }
        }
        Graph::new(n, &edges).expect("complete graph edges are valid")
    }

    /// The cycle on `n >= 3` vertices.
    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "cycle needs at least 3 vertices");
        let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        edges.push((0, n - 1));
        Graph::new(n, &edges).expect("cycle edges are valid")
    }

    /// The edgeless graph on `n` vertices.
    pub fn edgeless(n: usize) -> Graph {
        Graph::new(n, &[]).expect("edgeless graph is valid")
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, m={})", self.n, self.edges.len())
    }
}

/// Upper-triangle bit positions in graph6 column-major order:
/// `(0,1), (0,2), (1,2), (0,3), ...`.
fn graph6_pairs(n: usize) -> Vec<(usize, usize)> {
    let mut pairs = Vec::with_capacity(n * (n.saturating_sub(1)) / 2);
    for j in 1..n {
        for i in 0..j {
            pairs.push((i, j));
        }
    }
    pairs
}

/// Parses a graph6 string (orders 0..=62).  Leading/trailing whitespace and
/// the optional `>>graph6<<` header are accepted.  Errors name the byte
/// offset of the offending byte in the original input.
pub fn parse_graph6(text: &str) -> Result<Graph, GraphError> {
    let start_ws = text.len() - text.trim_start().len();
    let body = text.trim();
    let (body, base) = match body.strip_prefix(">>graph6<<") {
        Some(rest) => (rest, start_ws + ">>graph6<<".len()),
        None => (body, start_ws),
    };
    let bytes = body.as_bytes();
    if bytes.is_empty() {
        return Err(GraphError::EmptyInput);
    }
    let head = bytes[0];
    if head == 126 {
        return Err(GraphError::UnsupportedOrder { offset: base });
    }
    if !(63..=125).contains(&head) {
        return Err(GraphError::InvalidByte {
            byte: head,
            offset: base,
        });
    }
    let n = (head - 63) as usize;
    let nbits = n * n.saturating_sub(1) / 2;
    let nchars = nbits.div_ceil(6);
    let data = &bytes[1..];
    for (idx, &b) in data.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(GraphError::InvalidByte {
                byte: b,
                offset: base + 1 + idx,
            });
        }
    }
    if data.len() < nchars {
        return Err(GraphError::Truncated {
            expected: nchars,
            found: data.len(),
        });
    }
    if data.len() > nchars {
        return Err(GraphError::TrailingData {
            offset: base + 1 + nchars,
        });
    }
    let pairs = graph6_pairs(n);
    let mut edges = Vec::new();
    for (idx, &b) in data.iter().enumerate() {
        let v = b - 63;
        for bit in 0..6 {
            let pos = idx * 6 + bit;
            if pos < nbits && (v >> (5 - bit)) & 1 == 1 {
                edges.push(pairs[pos]);
            }
        }
    }
    Graph::new(n, &edges)
}

/// Encodes a graph (order <= 62) as a graph6 string.
pub fn to_graph6(g: &Graph) -> Result<String, GraphError> {
    if g.n() > 62 {
        return Err(GraphError::UnsupportedOrder { offset: 0 });
    }
    let n = g.n();
    let mut out = vec![63 + n as u8];
    let pairs = graph6_pairs(n);
    let nbits = pairs.len();
    let nchars = nbits.div_ceil(6);
    for c in 0..nchars {
        let mut v = 0u8;
        for bit in 0..6 {
            let pos = c * 6 + bit;
            if pos < nbits {
                let (i, j) = pairs[pos];
                if g.has_edge(i, j) {
                    v |= 1 << (5 - bit);
                }
            }
        }
        out.push(v + 63);
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are printable ASCII"))
}

/// Parses the edge-list format: one `u v` pair per line, `#` comments,
/// blank lines ignored, optional leading header `n=<count>`.  Without a
/// header, `n` is one more than the largest label seen (0 for empty input).
pub fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
    let mut declared: Option<usize> = None;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut max_label: Option<usize> = None;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let body = raw.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        if let Some(after_n) = body.strip_prefix('n') {
            if !edges.is_empty() {
                return Err(GraphError::HeaderAfterEdges { line });
            }
            if declared.is_some() {
                return Err(GraphError::BadHeader {
                    line,
                    text: body.to_string(),
                });
            }
            let rest = after_n.trim_start();
            let value = rest.strip_prefix('=').map(str::trim).and_then(|v| {
                if v.is_empty() {
                    None
                } else {
                    v.parse::<usize>().ok()
                }
            });
            match value {
                Some(v) => {
                    declared = Some(v);
                    continue;
                }
                None => {
                    return Err(GraphError::BadHeader {
                        line,
                        text: body.to_string(),
                    })
                }
            }
        }
        let tokens: Vec<&str> = body.split_whitespace().collect();
        if tokens.len() != 2 {
            return Err(GraphError::BadTokenCount {
                line,
                found: tokens.len(),
            });
        }
        let mut pair = [0usize; 2];
        for (slot, token) in pair.iter_mut().zip(&tokens) {
            if token.starts_with('-') {
                return Err(GraphError::NegativeLabel {
                    line,
                    token: token.to_string(),
                });
            }
            *slot = token.parse::<usize>().map_err(|_| GraphError::BadLabel {
                line,
                token: token.to_string(),
            })?;
        }
        let (u, v) = (pair[0], pair[1]);
        if u == v {
            return Err(GraphError::SelfLoop { line, vertex: u });
        }
        if let Some(n) = declared {
            if u >= n || v >= n {
                return Err(GraphError::LabelOutOfRange {
                    line,
                    label: u.max(v),
                    n,
                });
            }
        }
        max_label = Some(max_label.map_or(u.max(v), |m| m.max(u.max(v))));
        edges.push((u, v));
    }
    let n = declared.unwrap_or_else(|| max_label.map_or(0, |m| m + 1));
    Graph::new(n, &edges)
}

/// A connected component together with its embedding into the parent graph:
/// `vertices[new_label] = original_label`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Component {
    pub graph: Graph,
    pub vertices: Vec<usize>,
}

/// Connected components, ordered by their smallest original vertex; inside a
/// component the relabeling preserves the original vertex order.
pub fn connected_components(g: &Graph) -> Vec<Component> {
    let adj = g.adjacency();
    let mut seen = vec![false; g.n()];
    let mut out = Vec::new();
    for start in 0..g.n() {
        if seen[start] {
            continue;
        }
        let mut stack = vec![start];
        seen[start] = true;
        let mut members = Vec::new();
        while let Some(v) = stack.pop() {
            members.push(v);
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        members.sort_unstable();
        let index_of = |v: usize| members.binary_search(&v).expect("member present");
        let mut edges = Vec::new();
        for &(u, v) in g.edges() {
            if members.binary_search(&u).is_ok() && members.binary_search(&v).is_ok() {
                edges.push((index_of(u), index_of(v)));
            }
        }
        out.push(Component {
            graph: Graph::new(members.len(), &edges).expect("component edges valid"),
            vertices: members,
        });
    }
    out
}

fn forcing_closure(n: usize, adj: &[u64], mut blue: u64) -> u64 {
    loop {
        let mut changed = false;
        for (u, &neighbors) in adj.iter().enumerate().take(n) {
            if blue >> u & 1 == 1 {
                let white = neighbors & !blue;
                if white != 0 && white & (white - 1) == 0 {
                    blue |= white;
                    changed = true;
                }
            }
        }
        if !changed {
            return blue;
        }
    }
}

/// Zero forcing number `Z(G)`: the smallest size of a blue vertex set whose
/// forcing closure colors the whole graph (a blue vertex with exactly one
/// white neighbor forces it blue).  Exhaustive over subsets in ascending
/// size, lexicographic within a size; requires `n <= 64`.
pub fn zero_forcing_number(g: &Graph) -> usize {
    use itertools::Itertools;
    let n = g.n();
    assert!(n <= 64, "zero forcing search limited to n <= 64");
    if n == 0 {
        return 0;
    }
    let mut adj = vec![0u64; n];
    for &(u, v) in g.edges() {
        adj[u] |= 1 << v;
        adj[v] |= 1 << u;
    }
    let full = if n == 64 { !0 } else { (1u64 << n) - 1 };
    for size in 0..=n {
        for subset in (0..n).combinations(size) {
            let mask = subset.iter().fold(0u64, |m, &v| m | 1 << v);
            if forcing_closure(n, &adj, mask) == full {
                return size;
            }
        }
    }
    unreachable!("the full vertex set always forces itself")
}

/// Minimum rank of a tree in closed form: `n` minus the minimum number of
/// vertex-disjoint induced paths covering the tree.  The path cover number is
/// computed by a leaf-up pass rooted at vertex 0 with children visited in
/// label order: a vertex with no extendable child starts a path, one
/// extendable child extends it, and two or more join a pair of paths.
pub fn tree_minimum_rank(g: &Graph) -> Result<usize, GraphError> {
    let n = g.n();
    if n == 0 {
        return Err(GraphError::NotATree {
            reason: "no vertices".into(),
        });
    }
    let comps = connected_components(g);
    if comps.len() != 1 {
        return Err(GraphError::NotATree {
            reason: format!("{} connected components", comps.len()),
        });
    }
    if g.edge_count() != n - 1 {
        return Err(GraphError::NotATree {
            reason: format!("{} edges on {} vertices", g.edge_count(), n),
        });
    }
    Ok(n - path_cover_number(g))
}

/// Minimum number of vertex-disjoint paths covering a tree (see
/// [`tree_minimum_rank`]); callers must pass a tree.
pub fn path_cover_number(tree: &Graph) -> usize {
    let n = tree.n();
    let adj = tree.adjacency();
    let mut parent = vec![usize::MAX; n];
    let mut order = Vec::with_capacity(n);
    let mut stack = vec![0usize];
    let mut visited = vec![false; n];
    visited[0] = true;
    while let Some(v) = stack.pop() {
        order.push(v);
        // Reverse so the smaller-labeled child is processed first.
        for &w in adj[v].iter().rev() {
            if !visited[w] {
                visited[w] = true;
                parent[w] = v;
                stack.push(w);
            }
        }
    }
    let mut open = vec![false; n];
    let mut paths = 0usize;
    for &v in order.iter().rev() {
        let extendable = adj[v]
            .iter()
            .filter(|&&c| parent[c] == v && open[c])
            .count();
        match extendable {
            0 => {
                paths += 1;
                open[v] = true;
            }
            1 => open[v] = true,
            _ => paths -= 1,
        }
    }
    paths
}
