//! Simple undirected graphs, rooted path products, and the `A_tau` family.
//!
//! Vertices are labelled `1..=n`. Edges are kept as sorted `(i, j)` pairs
//! with `i < j`, so two graphs are equal exactly when their edge sets are.

use std::fmt;

use num_traits::{One, Zero};
use thiserror::Error;

use crate::linalg::{kronecker, ExactMatrix};
use crate::rational::{self, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} is outside 1..={n}")]
    InvalidVertex { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("a graph needs at least one vertex")]
    EmptyVertexSet,
    #[error("path order must be at least 1, got {0}")]
    InvalidOrder(usize),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    /// Builds a graph from 1-based pairs; duplicates and reversed pairs collapse.
    pub fn from_edges(
        n: usize,
        pairs: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::EmptyVertexSet);
        }
        let mut edges = Vec::new();
        for (i, j) in pairs {
            for v in [i, j] {
                if v == 0 || v > n {
                    return Err(GraphError::InvalidVertex { vertex: v, n });
                }
            }
            if i == j {
                return Err(GraphError::SelfLoop(i));
            }
            edges.push((i.min(j), i.max(j)));
        }
        edges.sort_unstable();
        edges.dedup();
        Ok(Self { n, edges })
    }

    pub fn empty(n: usize) -> Self {
        Self::from_edges(n, []).expect("n > 0")
    }

    pub fn complete(n: usize) -> Self {
        Self::from_edges(n, (1..=n).flat_map(|j| (1..j).map(move |i| (i, j)))).expect("valid")
    }

    pub fn path(n: usize) -> Self {
        Self::from_edges(n, (1..n).map(|i| (i, i + 1))).expect("valid")
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least 3 vertices");
        Self::from_edges(n, (1..=n).map(|i| (i, i % n + 1))).expect("valid")
    }

    /// `K_{1,k}` with the centre at vertex 1.
    pub fn star(k: usize) -> Self {
        Self::from_edges(k + 1, (2..=k + 1).map(|j| (1, j))).expect("valid")
    }

    /// Triangle 1-2-3 with a pendant vertex 4 attached to 3.
    pub fn paw() -> Self {
        Self::from_edges(4, [(1, 2), (2, 3), (1, 3), (3, 4)]).expect("valid")
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.edges.binary_search(&(i.min(j), i.max(j))).is_ok()
    }

    /// Degrees indexed by vertex - 1.
    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for &(i, j) in &self.edges {
            deg[i - 1] += 1;
            deg[j - 1] += 1;
        }
        deg
    }

    pub fn degree(&self, v: usize) -> usize {
        self.degrees()[v - 1]
    }

    /// `G o P_m`, with vertex `(level j, base vertex i)` at `(j-1)*n + i`.
    ///
    /// Level 1 is the copy of `G` itself (the path roots); consecutive levels
    /// are joined by the ladder edges `{(j-1)n+i, jn+i}`.
    pub fn rooted_product_path(&self, m: usize) -> Result<Self, GraphError> {
        if m == 0 {
            return Err(GraphError::InvalidOrder(m));
        }
        let n = self.n;
        let ladder = (1..m).flat_map(|j| (1..=n).map(move |i| ((j - 1) * n + i, j * n + i)));
        Self::from_edges(n * m, self.edges.iter().copied().chain(ladder))
    }

    /// `A + tau*D`.
    pub fn a_tau(&self, tau: &Rational) -> ExactMatrix {
        let mut out = ExactMatrix::zeros(self.n, self.n);
        for &(i, j) in &self.edges {
            out.set(i - 1, j - 1, Rational::one());
            out.set(j - 1, i - 1, Rational::one());
        }
        if !tau.is_zero() {
            for (v, d) in self.degrees().into_iter().enumerate() {
                out.set(v, v, tau * rational::int(d as i64));
            }
        }
        out
    }

    pub fn adjacency(&self) -> ExactMatrix {
        self.a_tau(&Rational::zero())
    }

    pub fn signless_laplacian(&self) -> ExactMatrix {
        self.a_tau(&Rational::one())
    }

    /// Upper triangle as one `0`/`1` character per pair `(i, j)`, `i < j`,
    /// row-major.
    pub fn to_upper_triangle(&self) -> String {
        let mut out = String::with_capacity(self.n * (self.n - 1) / 2);
        for i in 1..=self.n {
            for j in i + 1..=self.n {
                out.push(if self.has_edge(i, j) { '1' } else { '0' });
            }
        }
        out
    }

    pub fn from_upper_triangle(n: usize, bits: &str) -> Result<Self, GraphError> {
        let expected = n * n.saturating_sub(1) / 2;
        if bits.len() != expected {
            return Err(GraphError::Parse {
                line: 1,
                message: format!("expected {expected} upper-triangle digits for n = {n}, got {}", bits.len()),
            });
        }
        let mut pairs = Vec::new();
        let mut chars = bits.chars();
        for i in 1..=n {
            for j in i + 1..=n {
                match chars.next() {
                    Some('1') => pairs.push((i, j)),
                    Some('0') => {}
                    other => {
                        return Err(GraphError::Parse {
                            line: 1,
                            message: format!("unexpected character {other:?} in upper triangle"),
                        })
                    }
                }
            }
        }
        Self::from_edges(n, pairs)
    }

    /// Compact one-line form `"n bits"` used in corpus files and reports.
    pub fn encode(&self) -> String {
        format!("{} {}", self.n, self.to_upper_triangle())
    }

    pub fn decode(line: &str) -> Result<Self, GraphError> {
        let mut parts = line.split_whitespace();
        let n = parts
            .next()
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| GraphError::Parse { line: 1, message: format!("bad graph line `{line}`") })?;
        let bits = parts.next().unwrap_or("");
        if parts.next().is_some() {
            return Err(GraphError::Parse { line: 1, message: format!("trailing data in `{line}`") });
        }
        Self::from_upper_triangle(n, bits)
    }

    /// FNV-1a over the compact encoding, as 16 hex digits.
    pub fn digest(&self) -> String {
        let mut h: u64 = 0xcbf2_9ce4_8422_2325;
        for b in self.encode().bytes() {
            h ^= u64::from(b);
            h = h.wrapping_mul(0x0000_0100_0000_01b3);
        }
        format!("{h:016x}")
    }

    /// Edge-list text: first line `n`, then one `i j` per line.
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{}\n", self.n);
        for (i, j) in &self.edges {
            out.push_str(&format!("{i} {j}\n"));
        }
        out
    }

    pub fn parse_edge_list(text: &str) -> Result<Self, GraphError> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(k, l)| (k + 1, l.split('#').next().unwrap_or("").trim()))
            .filter(|(_, l)| !l.is_empty());
        let (first, header) = lines.next().ok_or(GraphError::Parse {
            line: 1,
            message: "missing vertex count".into(),
        })?;
        let n: usize = header.parse().map_err(|_| GraphError::Parse {
            line: first,
            message: format!("bad vertex count `{header}`"),
        })?;
        let mut pairs = Vec::new();
        for (line, l) in lines {
            let nums: Vec<usize> = l
                .split_whitespace()
                .map(str::parse)
                .collect::<Result<_, _>>()
                .map_err(|_| GraphError::Parse { line, message: format!("bad edge `{l}`") })?;
            let [i, j] = nums[..] else {
                return Err(GraphError::Parse { line, message: format!("expected `i j`, got `{l}`") });
            };
            pairs.push((i, j));
        }
        Self::from_edges(n, pairs)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges)
    }
}

/// `A_tau(P_m) (x) I_n + D_1 (x) A_tau(G)` with `D_1 = diag(1, 0, ..., 0)`.
pub fn kron_assemble_a_tau_product(g: &Graph, m: usize, tau: &Rational) -> Result<ExactMatrix, GraphError> {
    if m == 0 {
        return Err(GraphError::InvalidOrder(m));
    }
    let path = Graph::path(m).a_tau(tau);
    let mut d1 = ExactMatrix::zeros(m, m);
    d1.set(0, 0, Rational::one());
    let lhs = kronecker(&path, &ExactMatrix::identity(g.order()));
    let rhs = kronecker(&d1, &g.a_tau(tau));
    Ok(lhs.add(&rhs).expect("both terms are mn x mn"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};
    use proptest::prelude::*;

    #[test]
    fn edge_list_construction() {
        let c4 = Graph::from_edges(4, [(1, 2), (2, 3), (3, 4), (4, 1)]).unwrap();
        assert_eq!(c4.edge_count(), 4);
        assert_eq!(c4, Graph::cycle(4));
        let p3 = Graph::from_edges(3, [(1, 2), (2, 1), (2, 3)]).unwrap();
        assert_eq!(p3.edge_count(), 2);
        assert_eq!(p3, Graph::path(3));
        assert_eq!(Graph::from_edges(2, [(1, 1)]), Err(GraphError::SelfLoop(1)));
        assert_eq!(
            Graph::from_edges(2, [(1, 3)]),
            Err(GraphError::InvalidVertex { vertex: 3, n: 2 })
        );
        assert_eq!(
            Graph::from_edges(2, [(0, 1)]),
            Err(GraphError::InvalidVertex { vertex: 0, n: 2 })
        );
        assert_eq!(Graph::from_edges(0, []), Err(GraphError::EmptyVertexSet));
    }

    #[test]
    fn rooted_product_counts() {
        let c4p3 = Graph::cycle(4).rooted_product_path(3).unwrap();
        assert_eq!(c4p3.order(), 12);
        assert_eq!(c4p3.edge_count(), 12);
        let g = Graph::paw();
        assert_eq!(g.rooted_product_path(1).unwrap(), g);
        assert_eq!(g.rooted_product_path(0), Err(GraphError::InvalidOrder(0)));
    }

    #[test]
    fn p2_times_p2_is_p4() {
        let p = Graph::path(2).rooted_product_path(2).unwrap();
        let mut degs = p.degrees();
        degs.sort_unstable();
        assert_eq!(degs, vec![1, 1, 2, 2]);
        // 3 - 1 - 2 - 4
        assert_eq!(p.edges(), &[(1, 2), (1, 3), (2, 4)]);
    }

    #[test]
    fn a_tau_examples() {
        assert_eq!(
            Graph::path(3).a_tau(&int(1)),
            ExactMatrix::from_i64_rows(&[&[1, 1, 0], &[1, 2, 1], &[0, 1, 1]])
        );
        let a = Graph::paw().adjacency();
        assert!((0..4).all(|i| a.get(i, i).is_zero()));
        let half = Graph::cycle(4).a_tau(&ratio(1, 2));
        let expected = ExactMatrix::from_i64_rows(&[&[1, 1, 0, 1], &[1, 1, 1, 0], &[0, 1, 1, 1], &[1, 0, 1, 1]]);
        assert_eq!(half, expected);
    }

    #[test]
    fn kron_assembly_examples() {
        let g = Graph::paw();
        assert_eq!(kron_assemble_a_tau_product(&g, 1, &ratio(2, 3)).unwrap(), g.a_tau(&ratio(2, 3)));
        let c4 = Graph::cycle(4);
        assert_eq!(
            kron_assemble_a_tau_product(&c4, 3, &int(1)).unwrap(),
            c4.rooted_product_path(3).unwrap().a_tau(&int(1))
        );
        let blocks = ExactMatrix::from_i64_rows(&[&[0, 1, 1, 0], &[1, 0, 0, 1], &[1, 0, 0, 0], &[0, 1, 0, 0]]);
        assert_eq!(kron_assemble_a_tau_product(&Graph::path(2), 2, &int(0)).unwrap(), blocks);
    }

    #[test]
    fn text_formats() {
        let g = Graph::paw();
        assert_eq!(Graph::parse_edge_list(&g.to_edge_list()).unwrap(), g);
        assert_eq!(g.to_upper_triangle(), "110101");
        assert_eq!(Graph::decode(&g.encode()).unwrap(), g);
        assert_eq!(Graph::decode("1").unwrap(), Graph::empty(1));
        assert!(Graph::decode("3 10").is_err());
        assert!(Graph::decode("3 1x0").is_err());
        let parsed = Graph::parse_edge_list("# triangle\n3\n1 2\n2 3 # comment\n\n3 1\n").unwrap();
        assert_eq!(parsed, Graph::complete(3));
        assert!(matches!(Graph::parse_edge_list("3\n1 2 3\n"), Err(GraphError::Parse { line: 2, .. })));
        assert!(matches!(Graph::parse_edge_list("x\n"), Err(GraphError::Parse { line: 1, .. })));
        assert!(matches!(Graph::parse_edge_list(""), Err(GraphError::Parse { .. })));
    }

    #[test]
    fn digest_is_stable() {
        assert_eq!(Graph::paw().digest(), Graph::paw().digest());
        assert_ne!(Graph::paw().digest(), Graph::star(3).digest());
        assert_eq!(Graph::paw().digest().len(), 16);
    }

    fn arb_graph() -> impl Strategy<Value = Graph> {
        (1usize..=6).prop_flat_map(|n| {
            proptest::collection::vec(proptest::bool::ANY, n * (n - 1) / 2).prop_map(move |bits| {
                let s: String = bits.iter().map(|&b| if b { '1' } else { '0' }).collect();
                Graph::from_upper_triangle(n, &s).unwrap()
            })
        })
    }

    fn arb_tau() -> impl Strategy<Value = Rational> {
        (-5i64..=5, 1i64..=4).prop_map(|(p, q)| ratio(p, q))
    }

    proptest! {
        #[test]
        fn kron_assembly_matches_direct(g in arb_graph(), m in 1usize..=5, tau in arb_tau()) {
            let direct = g.rooted_product_path(m).unwrap().a_tau(&tau);
            prop_assert_eq!(kron_assemble_a_tau_product(&g, m, &tau).unwrap(), direct);
        }

        #[test]
        fn a_tau_is_symmetric_01(g in arb_graph(), tau in arb_tau()) {
            let a = g.a_tau(&tau);
            prop_assert!(a.is_symmetric());
            for i in 0..g.order() {
                for j in 0..g.order() {
                    if i != j {
                        prop_assert!(a.get(i, j).is_zero() || a.get(i, j).is_one());
                    }
                }
            }
        }

        #[test]
        fn rooted_product_degrees(g in arb_graph(), m in 2usize..=5) {
            let n = g.order();
            let p = g.rooted_product_path(m).unwrap();
            prop_assert_eq!(p.edge_count(), g.edge_count() + n * (m - 1));
            let base = g.degrees();
            let deg = p.degrees();
            for i in 0..n {
                prop_assert_eq!(deg[i], base[i] + 1);
                for level in 1..m - 1 {
                    prop_assert_eq!(deg[level * n + i], 2);
                }
                prop_assert_eq!(deg[(m - 1) * n + i], 1);
            }
        }
    }
}
