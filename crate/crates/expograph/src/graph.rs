//! Immutable simple undirected graphs with dense 0-based vertex ids.
//!
//! Adjacency is stored as strictly increasing neighbor lists. Structured
//! vertex labels (tuples, bit strings) live in an optional side table so
//! every algorithm runs on plain integers.

use std::collections::VecDeque;
use std::fmt::Write as _;
use std::io::{BufRead, Write};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const UNREACHABLE: u32 = u32::MAX;

/// Immutable simple undirected graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<u32>>,
    labels: Option<Vec<String>>,
}

impl Graph {
    /// Builds a graph from an edge list, deduplicating and sorting neighbor
    /// lists. Self-loops are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            if u >= n {
                return Err(Error::InvalidVertex(u, n));
            }
            if v >= n {
                return Err(Error::InvalidVertex(v, n));
            }
            if u == v {
                return Err(Error::InvalidParameter(format!("self-loop at vertex {u}")));
            }
            adj[u].push(v as u32);
            adj[v].push(u as u32);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        Ok(Graph { adj, labels: None })
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Graph {
        assert_eq!(labels.len(), self.order());
        self.labels = Some(labels);
        self
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.adj.iter().map(|l| l.len()).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[u32] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(|l| l.len()).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(|l| l.len()).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&(v as u32)).is_ok()
    }

    pub fn label(&self, v: usize) -> Option<&str> {
        self.labels.as_ref().map(|l| l[v].as_str())
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, list)| {
            list.iter()
                .filter(move |&&v| u < v as usize)
                .map(move |&v| (u, v as usize))
        })
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.order()
    }

    /// Checks the representation invariants: symmetry, sortedness, no loops.
    pub fn validate(&self) -> Result<()> {
        let n = self.order();
        for (u, list) in self.adj.iter().enumerate() {
            if !list.windows(2).all(|w| w[0] < w[1]) {
                return Err(Error::InvalidParameter(format!(
                    "neighbor list of {u} is not strictly increasing"
                )));
            }
            for &v in list {
                let v = v as usize;
                if v >= n {
                    return Err(Error::InvalidVertex(v, n));
                }
                if v == u {
                    return Err(Error::InvalidParameter(format!("self-loop at vertex {u}")));
                }
                if !self.has_edge(v, u) {
                    return Err(Error::InvalidParameter(format!(
                        "asymmetric adjacency: {u} -> {v} but not {v} -> {u}"
                    )));
                }
            }
        }
        Ok(())
    }

    /// BFS distances from `src`; unreachable vertices get [`UNREACHABLE`].
    /// Neighbors are explored in increasing id order, so shortest paths
    /// reported elsewhere are deterministic.
    pub fn bfs_distances(&self, src: usize) -> Vec<u32> {
        let mut dist = vec![UNREACHABLE; self.order()];
        dist[src] = 0;
        let mut queue = VecDeque::new();
        queue.push_back(src);
        while let Some(u) = queue.pop_front() {
            let du = dist[u];
            for &v in &self.adj[u] {
                let v = v as usize;
                if dist[v] == UNREACHABLE {
                    dist[v] = du + 1;
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    pub fn distance(&self, u: usize, v: usize) -> Result<Option<usize>> {
        let n = self.order();
        if u >= n {
            return Err(Error::InvalidVertex(u, n));
        }
        if v >= n {
            return Err(Error::InvalidVertex(v, n));
        }
        let d = self.bfs_distances(u)[v];
        Ok((d != UNREACHABLE).then_some(d as usize))
    }

    /// Deterministic shortest path from `u` to `v` (BFS parent tracing with
    /// increasing-id tie-breaking). `None` when unreachable.
    pub fn shortest_path(&self, u: usize, v: usize) -> Option<Vec<usize>> {
        let dist = self.bfs_distances(u);
        if dist[v] == UNREACHABLE {
            return None;
        }
        let mut path = vec![v];
        let mut cur = v;
        while cur != u {
            // smallest-id predecessor on a shortest path
            let prev = self.adj[cur]
                .iter()
                .map(|&w| w as usize)
                .find(|&w| dist[w] + 1 == dist[cur])
                .expect("bfs predecessor");
            path.push(prev);
            cur = prev;
        }
        path.reverse();
        Some(path)
    }

    pub fn is_connected(&self) -> bool {
        if self.order() == 0 {
            return true;
        }
        self.bfs_distances(0).iter().all(|&d| d != UNREACHABLE)
    }

    pub fn eccentricity(&self, src: usize) -> Result<usize> {
        let dist = self.bfs_distances(src);
        let mut ecc = 0;
        for &d in &dist {
            if d == UNREACHABLE {
                return Err(Error::Disconnected);
            }
            ecc = ecc.max(d as usize);
        }
        Ok(ecc)
    }

    /// Exact diameter via all-source BFS, fanned out per source.
    pub fn diameter(&self) -> Result<usize> {
        if self.order() == 0 {
            return Ok(0);
        }
        if !self.is_connected() {
            return Err(Error::Disconnected);
        }
        let diam = (0..self.order())
            .into_par_iter()
            .map(|s| {
                self.bfs_distances(s)
                    .into_iter()
                    .max()
                    .unwrap_or(0) as usize
            })
            .max()
            .unwrap_or(0);
        Ok(diam)
    }

    /// The n-th power: same vertices, edge uv iff 1 <= dist(u,v) <= n.
    pub fn power_graph(&self, n: usize) -> Result<Graph> {
        if n == 0 {
            return Err(Error::InvalidParameter("power exponent must be >= 1".into()));
        }
        if !self.is_connected() {
            return Err(Error::Disconnected);
        }
        let mut edges = Vec::new();
        for u in self.vertices() {
            let dist = self.bfs_distances(u);
            for v in u + 1..self.order() {
                let d = dist[v] as usize;
                if d >= 1 && d <= n {
                    edges.push((u, v));
                }
            }
        }
        Graph::from_edges(self.order(), edges)
    }

    /// Contracts each listed block into a single vertex; uncovered vertices
    /// stay as singletons. Loops and parallel edges collapse. Block ids come
    /// first in input order, then the remaining singletons in increasing id
    /// order.
    pub fn contract(&self, blocks: &[Vec<usize>]) -> Result<Graph> {
        let n = self.order();
        let mut block_of = vec![usize::MAX; n];
        for (b, block) in blocks.iter().enumerate() {
            if block.is_empty() {
                return Err(Error::InvalidParameter("empty contraction block".into()));
            }
            for &v in block {
                if v >= n {
                    return Err(Error::InvalidVertex(v, n));
                }
                if block_of[v] != usize::MAX {
                    return Err(Error::InvalidParameter(format!(
                        "vertex {v} appears in more than one block"
                    )));
                }
                block_of[v] = b;
            }
        }
        let mut next = blocks.len();
        for v in 0..n {
            if block_of[v] == usize::MAX {
                block_of[v] = next;
                next += 1;
            }
        }
        let edges = self
            .edges()
            .filter_map(|(u, v)| {
                let (a, b) = (block_of[u], block_of[v]);
                (a != b).then(|| (a.min(b), a.max(b)))
            })
            .collect::<Vec<_>>();
        Graph::from_edges(next, edges)
    }

    /// Induced subgraph on `s`, relabeled 0..|s|-1; returns the back-mapping
    /// from new ids to original ids.
    pub fn induced_subgraph(&self, s: &[usize]) -> Result<(Graph, Vec<usize>)> {
        if s.is_empty() {
            return Err(Error::InvalidParameter("empty induced vertex set".into()));
        }
        let n = self.order();
        let mut back = s.to_vec();
        back.sort_unstable();
        back.dedup();
        let mut new_id = vec![usize::MAX; n];
        for (i, &v) in back.iter().enumerate() {
            if v >= n {
                return Err(Error::InvalidVertex(v, n));
            }
            new_id[v] = i;
        }
        let mut edges = Vec::new();
        for (i, &v) in back.iter().enumerate() {
            for &w in self.neighbors(v) {
                let w = w as usize;
                if new_id[w] != usize::MAX && v < w {
                    edges.push((i, new_id[w]));
                }
            }
        }
        let g = Graph::from_edges(back.len(), edges)?;
        Ok((g, back))
    }

    /// Edge-list text format: '#' comments, a "n m" header, then m lines
    /// "u v" with u < v.
    pub fn read_edge_list<R: BufRead>(reader: R) -> Result<Graph> {
        let mut header: Option<(usize, usize)> = None;
        let mut edges = Vec::new();
        for line in reader.lines() {
            let line = line?;
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut it = line.split_whitespace();
            let a: usize = it
                .next()
                .and_then(|t| t.parse().ok())
                .ok_or_else(|| Error::Parse(format!("bad line: {line:?}")))?;
            let b: usize = it
                .next()
                .and_then(|t| t.parse().ok())
                .ok_or_else(|| Error::Parse(format!("bad line: {line:?}")))?;
            if it.next().is_some() {
                return Err(Error::Parse(format!("trailing tokens on line: {line:?}")));
            }
            match header {
                None => header = Some((a, b)),
                Some((n, _)) => {
                    if a >= b {
                        return Err(Error::Parse(format!("edge must satisfy u < v: {line:?}")));
                    }
                    if b >= n {
                        return Err(Error::Parse(format!("vertex {b} out of range 0..{n}")));
                    }
                    edges.push((a, b));
                }
            }
        }
        let (n, m) = header.ok_or_else(|| Error::Parse("missing header line".into()))?;
        if edges.len() != m {
            return Err(Error::Parse(format!(
                "header declares {m} edges, found {}",
                edges.len()
            )));
        }
        let g = Graph::from_edges(n, edges)?;
        if g.size() != m {
            return Err(Error::Parse("duplicate edges in input".into()));
        }
        Ok(g)
    }

    pub fn write_edge_list<W: Write>(&self, mut writer: W) -> Result<()> {
        writeln!(writer, "{} {}", self.order(), self.size())?;
        for (u, v) in self.edges() {
            writeln!(writer, "{u} {v}")?;
        }
        Ok(())
    }

    pub fn to_edge_list_string(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "{} {}", self.order(), self.size());
        for (u, v) in self.edges() {
            let _ = writeln!(s, "{u} {v}");
        }
        s
    }
}

/// Anything a walk can be checked against: a materialized [`Graph`] or an
/// implicit adjacency oracle such as an exponential-graph codec.
pub trait Host {
    fn host_order(&self) -> usize;
    fn host_adjacent(&self, u: usize, v: usize) -> bool;
}

impl Host for Graph {
    fn host_order(&self) -> usize {
        self.order()
    }
    fn host_adjacent(&self, u: usize, v: usize) -> bool {
        self.has_edge(u, v)
    }
}

/// Per-step edge annotation in a walk.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum StepKind {
    Plain,
    HEdge,
    /// G-edge changing coordinate `dim` (0-based).
    GEdge { dim: usize },
}

/// A walk, path or cycle as a vertex-id sequence with per-step annotations.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WalkSpec {
    pub vertices: Vec<usize>,
    pub kinds: Vec<StepKind>,
    pub closed: bool,
}

impl WalkSpec {
    pub fn open(vertices: Vec<usize>, kinds: Vec<StepKind>) -> WalkSpec {
        assert_eq!(kinds.len() + 1, vertices.len());
        WalkSpec {
            vertices,
            kinds,
            closed: false,
        }
    }

    pub fn closed(vertices: Vec<usize>, kinds: Vec<StepKind>) -> WalkSpec {
        assert_eq!(kinds.len() + 1, vertices.len());
        assert_eq!(vertices.first(), vertices.last());
        WalkSpec {
            vertices,
            kinds,
            closed: true,
        }
    }

    pub fn len(&self) -> usize {
        self.kinds.len()
    }

    pub fn is_empty(&self) -> bool {
        self.kinds.is_empty()
    }

    /// Structural check against a host: consecutive vertices adjacent,
    /// closed walks wrap, paths repeat no vertex.
    pub fn validate_walk<H: Host>(&self, host: &H) -> Result<()> {
        if self.vertices.is_empty() {
            return Err(Error::MalformedCertificate("empty vertex sequence".into()));
        }
        if self.kinds.len() + 1 != self.vertices.len() {
            return Err(Error::MalformedCertificate(
                "kinds length must be vertices length - 1".into(),
            ));
        }
        let n = host.host_order();
        for &v in &self.vertices {
            if v >= n {
                return Err(Error::InvalidVertex(v, n));
            }
        }
        if self.closed && self.vertices.first() != self.vertices.last() {
            return Err(Error::MalformedCertificate(
                "closed walk must end where it starts".into(),
            ));
        }
        for w in self.vertices.windows(2) {
            if !host.host_adjacent(w[0], w[1]) {
                return Err(Error::MalformedCertificate(format!(
                    "{} and {} are not adjacent in the host",
                    w[0], w[1]
                )));
            }
        }
        Ok(())
    }

    /// True when no vertex repeats (ignoring the closing repeat of a cycle).
    pub fn is_path(&self) -> bool {
        let end = if self.closed {
            self.vertices.len() - 1
        } else {
            self.vertices.len()
        };
        let mut seen = std::collections::HashSet::new();
        self.vertices[..end].iter().all(|&v| seen.insert(v))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;

    #[test]
    fn cycle_distance_antipodal() {
        let c8 = generators::cycle(8).unwrap();
        assert_eq!(c8.distance(0, 4).unwrap(), Some(4));
    }

    #[test]
    fn complete_distance() {
        let k5 = generators::complete(5).unwrap();
        assert_eq!(k5.distance(1, 3).unwrap(), Some(1));
    }

    #[test]
    fn diameter_hypercube() {
        let q4 = generators::hypercube(4).unwrap();
        assert_eq!(q4.diameter().unwrap(), 4);
    }

    #[test]
    fn diameter_rejects_disconnected() {
        let g = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert!(matches!(g.diameter(), Err(Error::Disconnected)));
    }

    #[test]
    fn power_of_path_is_complete() {
        let p4 = generators::path(4).unwrap();
        let g = p4.power_graph(3).unwrap();
        assert_eq!(g.size(), 6);
        assert_eq!(g.min_degree(), 3);
    }

    #[test]
    fn power_of_c5_squared_is_complete() {
        let c5 = generators::cycle(5).unwrap();
        let g = c5.power_graph(2).unwrap();
        assert_eq!((g.order(), g.size()), (5, 10));
    }

    #[test]
    fn power_of_c6_squared_is_4_regular() {
        let c6 = generators::cycle(6).unwrap();
        let g = c6.power_graph(2).unwrap();
        // oracle: brute distance table of C6
        for u in 0..6 {
            for v in 0..6 {
                if u != v {
                    let d = c6.distance(u, v).unwrap().unwrap();
                    assert_eq!(g.has_edge(u, v), d <= 2);
                }
            }
        }
        assert_eq!(g.min_degree(), 4);
        assert_eq!(g.max_degree(), 4);
    }

    #[test]
    fn contract_c4_pair_gives_triangle() {
        let c4 = generators::cycle(4).unwrap();
        let t = c4.contract(&[vec![0, 1]]).unwrap();
        assert_eq!((t.order(), t.size()), (3, 3));
    }

    #[test]
    fn contract_everything_gives_k1() {
        let k4 = generators::complete(4).unwrap();
        let t = k4.contract(&[vec![0, 1, 2, 3]]).unwrap();
        assert_eq!((t.order(), t.size()), (1, 0));
    }

    #[test]
    fn contract_rejects_overlap() {
        let c4 = generators::cycle(4).unwrap();
        assert!(c4.contract(&[vec![0, 1], vec![1, 2]]).is_err());
    }

    #[test]
    fn induced_subgraphs() {
        let k5 = generators::complete(5).unwrap();
        let (k3, back) = k5.induced_subgraph(&[0, 1, 2]).unwrap();
        assert_eq!((k3.order(), k3.size()), (3, 3));
        assert_eq!(back, vec![0, 1, 2]);

        let c6 = generators::cycle(6).unwrap();
        let (p3, _) = c6.induced_subgraph(&[0, 1, 2]).unwrap();
        assert_eq!((p3.order(), p3.size()), (3, 2));
    }

    #[test]
    fn edge_list_round_trip() {
        let g = generators::cycle(5).unwrap();
        let text = g.to_edge_list_string();
        let h = Graph::read_edge_list(text.as_bytes()).unwrap();
        assert_eq!(g, h);
    }

    #[test]
    fn edge_list_rejects_bad_input() {
        assert!(Graph::read_edge_list("3 1\n2 1\n".as_bytes()).is_err()); // u >= v
        assert!(Graph::read_edge_list("3 2\n0 1\n".as_bytes()).is_err()); // count mismatch
        assert!(Graph::read_edge_list("3 1\n0 5\n".as_bytes()).is_err()); // range
    }

    #[test]
    fn shortest_path_deterministic() {
        let c8 = generators::cycle(8).unwrap();
        let p = c8.shortest_path(0, 4).unwrap();
        assert_eq!(p.len(), 5);
        assert_eq!(p[0], 0);
        assert_eq!(p[4], 4);
    }
}
