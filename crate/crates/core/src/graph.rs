//! Simple undirected graphs and all-pairs distances.

use std::collections::VecDeque;
use std::fmt::Write as _;

use drgq_exact::{int, SymmetricRationalMatrix};

use crate::{Error, Result};

/// Simple undirected graph on `0..n` with sorted neighbor lists.
///
/// Connectivity is not required here: local graphs are often disconnected.
/// Distance computations reject disconnected graphs.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
}

impl Graph {
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidGraph(format!("edge ({u}, {v}) out of range for {n} vertices")));
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("loop at vertex {u}")));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for (u, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if list.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::InvalidGraph(format!("repeated edge at vertex {u}")));
            }
        }
        Ok(Self { adj })
    }

    /// Graph on `0..n` with `u ~ v` whenever `adjacent(u, v)` for `u < v`.
    pub fn from_predicate(n: usize, mut adjacent: impl FnMut(usize, usize) -> bool) -> Self {
        let mut adj = vec![Vec::new(); n];
        for u in 0..n {
            for v in u + 1..n {
                if adjacent(u, v) {
                    adj[u].push(v);
                    adj[v].push(u);
                }
            }
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Self { adj }
    }

    /// Parses the edge-list format: an `"n m"` header, then `m` lines `"u v"`.
    pub fn parse_edge_list(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'));
        let pair = |line: &str| -> Result<(usize, usize)> {
            let mut it = line.split_whitespace().map(str::parse::<usize>);
            match (it.next(), it.next(), it.next()) {
                (Some(Ok(a)), Some(Ok(b)), None) => Ok((a, b)),
                _ => Err(Error::Syntax(format!("expected two integers, found {line:?}"))),
            }
        };
        let (n, m) = pair(lines.next().ok_or_else(|| Error::Syntax("empty edge list".into()))?)?;
        let edges = lines.map(pair).collect::<Result<Vec<_>>>()?;
        if edges.len() != m {
            return Err(Error::Syntax(format!("header declares {m} edges, found {}", edges.len())));
        }
        Self::from_edges(n, edges)
    }

    pub fn to_edge_list(&self) -> String {
        let edges = self.edges();
        let mut out = format!("{} {}\n", self.order(), edges.len());
        for (u, v) in edges {
            let _ = writeln!(out, "{u} {v}");
        }
        out
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn is_adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.order())
            .flat_map(|u| self.adj[u].iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
            .collect()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn regular_degree(&self) -> Option<usize> {
        let d = self.adj.first().map_or(0, Vec::len);
        self.adj.iter().all(|l| l.len() == d).then_some(d)
    }

    pub fn is_connected(&self) -> bool {
        self.order() == 0 || self.bfs(0).iter().all(Option::is_some)
    }

    pub fn is_complete(&self) -> bool {
        self.regular_degree() == Some(self.order().saturating_sub(1))
    }

    fn bfs(&self, source: usize) -> Vec<Option<u32>> {
        let mut dist = vec![None; self.order()];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap_or(0);
            for &v in &self.adj[u] {
                if dist[v].is_none() {
                    dist[v] = Some(du + 1);
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    pub fn induced_subgraph(&self, vertices: &[usize]) -> Graph {
        Graph::from_predicate(vertices.len(), |i, j| self.is_adjacent(vertices[i], vertices[j]))
    }

    pub fn adjacency_matrix(&self) -> SymmetricRationalMatrix {
        SymmetricRationalMatrix::from_fn(self.order(), |i, j| int(i64::from(self.is_adjacent(i, j))))
    }

    pub fn distances(&self) -> Result<DistanceMatrix> {
        DistanceMatrix::of(self)
    }
}

/// Exact shortest-path distances.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<u32>,
}

impl DistanceMatrix {
    pub fn of(g: &Graph) -> Result<Self> {
        let n = g.order();
        let mut d = Vec::with_capacity(n * n);
        for x in 0..n {
            for dist in g.bfs(x) {
                d.push(dist.ok_or(Error::Disconnected)?);
            }
        }
        Ok(Self { n, d })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn get(&self, x: usize, y: usize) -> u32 {
        self.d[x * self.n + y]
    }

    pub fn diameter(&self) -> usize {
        self.d.iter().copied().max().unwrap_or(0) as usize
    }

    pub fn row(&self, x: usize) -> &[u32] {
        &self.d[x * self.n..(x + 1) * self.n]
    }
}
