//! The exponential operation G^H, Cartesian products/powers, and the codec
//! tying them together.
//!
//! A vertex of G^H is a pair of a q-tuple (u_1,...,u_q) over V(G) and a
//! position j in V(H). Ids pack the tuple as a base-p number (u_1 least
//! significant) times q plus the position, so the position digit is a single
//! modulus and a G-edge neighbor differs by one digit stride. Dimensions are
//! 0-based in code; printed labels use the 1-based w_j convention.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, Host};

/// Materialization caps. Structures whose order or size would exceed these
/// are only available through the implicit codec oracle or formula stats.
#[derive(Clone, Copy, Debug)]
pub struct Budget {
    pub max_vertices: u64,
    pub max_edges: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_vertices: 2_000_000,
            max_edges: 20_000_000,
        }
    }
}

impl Budget {
    pub fn check_vertices(&self, what: &'static str, needed: u128) -> Result<()> {
        if needed > self.max_vertices as u128 {
            return Err(Error::BudgetExceeded {
                what,
                needed: needed.to_string(),
                cap: self.max_vertices,
            });
        }
        Ok(())
    }

    pub fn check_edges(&self, what: &'static str, needed: u128) -> Result<()> {
        if needed > self.max_edges as u128 {
            return Err(Error::BudgetExceeded {
                what,
                needed: needed.to_string(),
                cap: self.max_edges,
            });
        }
        Ok(())
    }
}

/// Edge classification in G^H.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ExpoEdgeKind {
    HEdge,
    GEdge { dim: usize },
}

/// The vertex codec of G^H: id <-> ((u_1,...,u_q), j).
///
/// Immutable and shareable; all accessors are pure functions of the codec and
/// never materialize the graph.
#[derive(Clone, Debug)]
pub struct ExpoSpace {
    base: Graph,
    exponent: Graph,
    p: usize,
    q: usize,
    /// stride of tuple digit i in id units: p^i * q
    strides: Vec<usize>,
    order: usize,
}

impl ExpoSpace {
    pub fn new(base: Graph, exponent: Graph) -> Result<Self> {
        let p = base.order();
        let q = exponent.order();
        let mut strides = Vec::with_capacity(q);
        let mut s: usize = q;
        for _ in 0..q {
            strides.push(s);
            s = s.checked_mul(p).ok_or_else(|| {
                Error::InvalidParameter("exponential order exceeds usize".into())
            })?;
        }
        // after the loop s = p^q * q, the total id range
        Ok(ExpoSpace {
            base,
            exponent,
            p,
            q,
            strides,
            order: s,
        })
    }

    pub fn base(&self) -> &Graph {
        &self.base
    }

    pub fn exponent(&self) -> &Graph {
        &self.exponent
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn q(&self) -> usize {
        self.q
    }

    /// Total id range p^q * q.
    pub fn order(&self) -> usize {
        self.order
    }

    /// Id stride of tuple digit i: p^i * q.
    pub fn digit_stride(&self, i: usize) -> usize {
        self.strides[i]
    }

    fn check_id(&self, x: usize) -> Result<()> {
        if x >= self.order {
            return Err(Error::InvalidVertex(x, self.order));
        }
        Ok(())
    }

    /// The exponent position sigma(x), 0-based.
    pub fn sigma(&self, x: usize) -> usize {
        x % self.q
    }

    /// The full tuple rho(x) = (u_1,...,u_q).
    pub fn rho(&self, x: usize) -> Vec<usize> {
        let mut t = x / self.q;
        let mut tuple = Vec::with_capacity(self.q);
        for _ in 0..self.q {
            tuple.push(t % self.p);
            t /= self.p;
        }
        tuple
    }

    /// Tuple digit rho_i(x), 0-based position i.
    pub fn rho_i(&self, x: usize, i: usize) -> usize {
        (x / self.strides[i]) % self.p
    }

    pub fn encode(&self, tuple: &[usize], j: usize) -> Result<usize> {
        if tuple.len() != self.q {
            return Err(Error::InvalidParameter(format!(
                "tuple length {} != q = {}",
                tuple.len(),
                self.q
            )));
        }
        if j >= self.q {
            return Err(Error::InvalidVertex(j, self.q));
        }
        let mut t: usize = 0;
        for (i, &d) in tuple.iter().enumerate().rev() {
            if d >= self.p {
                return Err(Error::InvalidVertex(d, self.p));
            }
            t = t * self.p + d;
            let _ = i;
        }
        Ok(t * self.q + j)
    }

    pub fn decode(&self, x: usize) -> Result<(Vec<usize>, usize)> {
        self.check_id(x)?;
        Ok((self.rho(x), self.sigma(x)))
    }

    /// Human-readable label "(u_1,...,u_q;w_j)" with 1-based j.
    pub fn label(&self, x: usize) -> String {
        let (tuple, j) = (self.rho(x), self.sigma(x));
        let parts: Vec<String> = tuple.iter().map(|d| d.to_string()).collect();
        format!("({};w{})", parts.join(","), j + 1)
    }

    /// All neighbors of `x` with their edge kinds, sorted by id. Pure codec
    /// arithmetic — works far beyond the materialization budget.
    pub fn neighbors(&self, x: usize) -> Result<Vec<(usize, ExpoEdgeKind)>> {
        self.check_id(x)?;
        let j = self.sigma(x);
        let u_j = self.rho_i(x, j);
        let stride = self.strides[j];
        let mut out = Vec::new();
        for &v in self.base.neighbors(u_j) {
            let v = v as usize;
            let y = if v >= u_j {
                x + (v - u_j) * stride
            } else {
                x - (u_j - v) * stride
            };
            out.push((y, ExpoEdgeKind::GEdge { dim: j }));
        }
        let t_base = x - j; // tuple * q
        for &j2 in self.exponent.neighbors(j) {
            out.push((t_base + j2 as usize, ExpoEdgeKind::HEdge));
        }
        out.sort_unstable_by_key(|&(y, _)| y);
        Ok(out)
    }

    /// Adjacency test straight from the codec.
    pub fn adjacent(&self, x: usize, y: usize) -> bool {
        if x == y || x >= self.order || y >= self.order {
            return false;
        }
        let (tx, ty) = (x / self.q, y / self.q);
        if tx == ty {
            return self.exponent.has_edge(self.sigma(x), self.sigma(y));
        }
        let j = self.sigma(x);
        if j != self.sigma(y) {
            return false;
        }
        // tuples must differ exactly in digit j, by a base edge
        let (a, b) = (self.rho_i(x, j), self.rho_i(y, j));
        if a == b || !self.base.has_edge(a, b) {
            return false;
        }
        // zero out digit j on both sides; the remainders must agree
        x - a * self.strides[j] == y - b * self.strides[j]
    }

    /// Exact edge count p^{q-1} (q|E(G)| + p|E(H)|), as u128.
    pub fn size_formula(&self) -> u128 {
        let p = self.p as u128;
        let q = self.q as u128;
        let inner = q * self.base.size() as u128 + p * self.exponent.size() as u128;
        p.pow(self.q as u32 - 1) * inner
    }

    /// Materialize the adjacency structure, respecting `budget`. Labels are
    /// attached for orders up to 100k.
    pub fn materialize(&self, budget: &Budget) -> Result<Graph> {
        budget.check_vertices("exponential graph", self.order as u128)?;
        budget.check_edges("exponential graph", self.size_formula())?;
        let mut edges = Vec::with_capacity(self.size_formula() as usize);
        for x in 0..self.order {
            for (y, _) in self.neighbors(x)? {
                if x < y {
                    edges.push((x, y));
                }
            }
        }
        let g = Graph::from_edges(self.order, edges)?;
        if self.order <= 100_000 {
            Ok(g.with_labels((0..self.order).map(|x| self.label(x)).collect()))
        } else {
            Ok(g)
        }
    }
}

impl Host for ExpoSpace {
    fn host_order(&self) -> usize {
        self.order
    }

    fn host_adjacent(&self, u: usize, v: usize) -> bool {
        self.adjacent(u, v)
    }
}

/// Construct G^H with the default budget.
pub fn exponential(g: &Graph, h: &Graph) -> Result<(Graph, ExpoSpace)> {
    exponential_with_budget(g, h, &Budget::default())
}

pub fn exponential_with_budget(g: &Graph, h: &Graph, budget: &Budget) -> Result<(Graph, ExpoSpace)> {
    let space = ExpoSpace::new(g.clone(), h.clone())?;
    let graph = space.materialize(budget)?;
    Ok((graph, space))
}

/// Cartesian product: (a,b) ~ (a',b) for aa' in E(G), (a,b) ~ (a,b') for
/// bb' in E(H). Ids are a + |V(G)|*b.
pub fn cartesian_product(g: &Graph, h: &Graph) -> Result<Graph> {
    cartesian_product_with_budget(g, h, &Budget::default())
}

pub fn cartesian_product_with_budget(g: &Graph, h: &Graph, budget: &Budget) -> Result<Graph> {
    let p = g.order();
    let q = h.order();
    let order = (p as u128) * (q as u128);
    budget.check_vertices("cartesian product", order)?;
    let size = (q as u128) * g.size() as u128 + (p as u128) * h.size() as u128;
    budget.check_edges("cartesian product", size)?;
    let mut edges = Vec::with_capacity(size as usize);
    for b in 0..q {
        for (a1, a2) in g.edges() {
            edges.push((a1 + p * b, a2 + p * b));
        }
    }
    for (b1, b2) in h.edges() {
        for a in 0..p {
            edges.push((a + p * b1, a + p * b2));
        }
    }
    Graph::from_edges(p * q, edges)
}

/// Cartesian power G^[n]: vertices are n-tuples packed base-p with the first
/// coordinate least significant, matching the G^H tuple codec.
pub fn cartesian_power(g: &Graph, n: usize) -> Result<Graph> {
    cartesian_power_with_budget(g, n, &Budget::default())
}

pub fn cartesian_power_with_budget(g: &Graph, n: usize, budget: &Budget) -> Result<Graph> {
    if n < 1 {
        return Err(Error::InvalidParameter("cartesian power needs n >= 1".into()));
    }
    let p = g.order();
    let order = (p as u128).checked_pow(n as u32).ok_or_else(|| {
        Error::InvalidParameter("cartesian power order exceeds u128".into())
    })?;
    budget.check_vertices("cartesian power", order)?;
    let size = (n as u128) * (p as u128).pow(n as u32 - 1) * g.size() as u128;
    budget.check_edges("cartesian power", size)?;
    let order = order as usize;
    let mut edges = Vec::with_capacity(size as usize);
    let mut stride = 1usize;
    for _ in 0..n {
        for t in 0..order {
            let digit = (t / stride) % p;
            for &v in g.neighbors(digit) {
                let v = v as usize;
                if v > digit {
                    edges.push((t, t + (v - digit) * stride));
                }
            }
        }
        stride *= p;
    }
    Graph::from_edges(order, edges)
}

/// Contract every fiber H_u of a materialized G^H to a point, yielding a
/// graph literally equal (same ids) to `cartesian_power(G, q)`.
pub fn contract_to_base(space: &ExpoSpace, gh: &Graph) -> Result<Graph> {
    if gh.order() != space.order() {
        return Err(Error::Precondition(format!(
            "graph order {} does not match codec order {}",
            gh.order(),
            space.order()
        )));
    }
    let q = space.q();
    let tuples = space.order() / q;
    let blocks: Vec<Vec<usize>> = (0..tuples)
        .map(|t| (t * q..(t + 1) * q).collect())
        .collect();
    gh.contract(&blocks)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;

    fn battery() -> Vec<(&'static str, Graph, Graph)> {
        vec![
            ("K2^K2", generators::complete(2).unwrap(), generators::complete(2).unwrap()),
            ("C8^K2", generators::cycle(8).unwrap(), generators::complete(2).unwrap()),
            ("K3^P3", generators::complete(3).unwrap(), generators::path(3).unwrap()),
            ("K4^K3", generators::complete(4).unwrap(), generators::complete(3).unwrap()),
            ("C4^P3", generators::cycle(4).unwrap(), generators::path(3).unwrap()),
            ("Q3^K2", generators::hypercube(3).unwrap(), generators::complete(2).unwrap()),
            ("K3^K1", generators::complete(3).unwrap(), generators::complete(1).unwrap()),
            ("K1^C5", generators::complete(1).unwrap(), generators::cycle(5).unwrap()),
        ]
    }

    #[test]
    fn k2_k2_is_c8() {
        let (g, space) = exponential(
            &generators::complete(2).unwrap(),
            &generators::complete(2).unwrap(),
        )
        .unwrap();
        assert_eq!(g.order(), 8);
        assert_eq!(g.size(), 8);
        assert!(g.is_connected());
        assert!(g.vertices().all(|v| g.degree(v) == 2));
        assert_eq!(g.diameter().unwrap(), 4);
        assert_eq!(space.order(), 8);
    }

    #[test]
    fn order_size_degree_formulas() {
        for (name, base, expo) in battery() {
            let (g, space) = exponential(&base, &expo).unwrap();
            let p = base.order();
            let q = expo.order();
            assert_eq!(g.order(), p.pow(q as u32) * q, "{name} order");
            assert_eq!(g.size() as u128, space.size_formula(), "{name} size");
            assert_eq!(
                g.min_degree(),
                base.min_degree() + expo.min_degree(),
                "{name} min degree"
            );
            assert_eq!(
                g.max_degree(),
                base.max_degree() + expo.max_degree(),
                "{name} max degree"
            );
        }
    }

    #[test]
    fn c8_k2_order() {
        let (g, _) = exponential(
            &generators::cycle(8).unwrap(),
            &generators::complete(2).unwrap(),
        )
        .unwrap();
        assert_eq!(g.order(), 128);
        assert!(g.vertices().all(|v| g.degree(v) == 3));
    }

    #[test]
    fn codec_round_trip_exhaustive() {
        for (name, base, expo) in battery() {
            let space = ExpoSpace::new(base, expo).unwrap();
            for x in 0..space.order() {
                let (tuple, j) = space.decode(x).unwrap();
                assert_eq!(space.encode(&tuple, j).unwrap(), x, "{name} id {x}");
                for (i, &d) in tuple.iter().enumerate() {
                    assert_eq!(space.rho_i(x, i), d, "{name} id {x} digit {i}");
                }
            }
        }
    }

    #[test]
    fn neighbors_match_materialization() {
        for (name, base, expo) in battery() {
            let (g, space) = exponential(&base, &expo).unwrap();
            for x in g.vertices() {
                let from_codec: Vec<usize> =
                    space.neighbors(x).unwrap().iter().map(|&(y, _)| y).collect();
                let from_graph: Vec<usize> =
                    g.neighbors(x).iter().map(|&y| y as usize).collect();
                assert_eq!(from_codec, from_graph, "{name} vertex {x}");
                for y in g.vertices() {
                    assert_eq!(
                        space.adjacent(x, y),
                        g.has_edge(x, y),
                        "{name} pair ({x},{y})"
                    );
                }
            }
        }
    }

    #[test]
    fn edge_kinds_satisfy_invariants() {
        let base = generators::cycle(4).unwrap();
        let expo = generators::path(3).unwrap();
        let space = ExpoSpace::new(base.clone(), expo.clone()).unwrap();
        for x in 0..space.order() {
            for (y, kind) in space.neighbors(x).unwrap() {
                match kind {
                    ExpoEdgeKind::HEdge => {
                        assert_eq!(space.rho(x), space.rho(y));
                        assert!(expo.has_edge(space.sigma(x), space.sigma(y)));
                    }
                    ExpoEdgeKind::GEdge { dim } => {
                        assert_eq!(space.sigma(x), dim);
                        assert_eq!(space.sigma(y), dim);
                        let (tx, ty) = (space.rho(x), space.rho(y));
                        let diffs: Vec<usize> =
                            (0..space.q()).filter(|&i| tx[i] != ty[i]).collect();
                        assert_eq!(diffs, vec![dim]);
                        assert!(base.has_edge(tx[dim], ty[dim]));
                    }
                }
            }
        }
    }

    #[test]
    fn degree_law_k3_p3() {
        // at the center of P3 the H-degree is 2, so deg = 2 + 2
        let base = generators::complete(3).unwrap();
        let expo = generators::path(3).unwrap();
        let space = ExpoSpace::new(base, expo).unwrap();
        let x = space.encode(&[0, 1, 2], 1).unwrap();
        assert_eq!(space.neighbors(x).unwrap().len(), 4);
        let y = space.encode(&[0, 1, 2], 0).unwrap();
        assert_eq!(space.neighbors(y).unwrap().len(), 3);
    }

    #[test]
    fn k1_cases() {
        // G^{K1} is G itself under the codec (q = 1, ids coincide)
        let g = generators::complete(3).unwrap();
        let (gh, _) = exponential(&g, &generators::complete(1).unwrap()).unwrap();
        assert_eq!(gh.to_edge_list_string(), g.to_edge_list_string());
        // K1^H is H itself
        let h = generators::cycle(5).unwrap();
        let (kh, _) = exponential(&generators::complete(1).unwrap(), &h).unwrap();
        assert_eq!(kh.to_edge_list_string(), h.to_edge_list_string());
    }

    #[test]
    fn cartesian_power_k2_3_is_q3() {
        let q3 = generators::hypercube(3).unwrap();
        let pw = cartesian_power(&generators::complete(2).unwrap(), 3).unwrap();
        assert_eq!(pw.to_edge_list_string(), q3.to_edge_list_string());
    }

    #[test]
    fn cartesian_power_c8_2() {
        let g = cartesian_power(&generators::cycle(8).unwrap(), 2).unwrap();
        assert_eq!(g.order(), 64);
        assert!(g.vertices().all(|v| g.degree(v) == 4));
    }

    #[test]
    fn cartesian_product_identity() {
        let h = generators::cycle(6).unwrap();
        let g = cartesian_product(&generators::complete(1).unwrap(), &h).unwrap();
        assert_eq!(g.to_edge_list_string(), h.to_edge_list_string());
    }

    #[test]
    fn cartesian_product_matches_power() {
        let c4 = generators::cycle(4).unwrap();
        let prod = cartesian_product(&c4, &c4).unwrap();
        let pow = cartesian_power(&c4, 2).unwrap();
        assert_eq!(prod.to_edge_list_string(), pow.to_edge_list_string());
    }

    #[test]
    fn contraction_gives_cartesian_power() {
        for (base, expo) in [
            (generators::cycle(8).unwrap(), generators::complete(2).unwrap()),
            (generators::complete(2).unwrap(), generators::complete(2).unwrap()),
            (generators::complete(3).unwrap(), generators::complete(1).unwrap()),
            (generators::complete(3).unwrap(), generators::path(3).unwrap()),
        ] {
            let (gh, space) = exponential(&base, &expo).unwrap();
            let contracted = contract_to_base(&space, &gh).unwrap();
            let power = cartesian_power(&base, expo.order()).unwrap();
            assert_eq!(contracted.to_edge_list_string(), power.to_edge_list_string());
        }
    }

    #[test]
    fn contract_k2_k2_is_c4() {
        let (gh, space) = exponential(
            &generators::complete(2).unwrap(),
            &generators::complete(2).unwrap(),
        )
        .unwrap();
        let c = contract_to_base(&space, &gh).unwrap();
        assert_eq!(c.order(), 4);
        assert!(c.vertices().all(|v| c.degree(v) == 2));
    }

    #[test]
    fn budget_is_enforced() {
        let tight = Budget {
            max_vertices: 100,
            max_edges: 1000,
        };
        let err = exponential_with_budget(
            &generators::complete(4).unwrap(),
            &generators::cycle(4).unwrap(),
            &tight,
        )
        .unwrap_err();
        assert!(matches!(err, Error::BudgetExceeded { .. }));
        // the codec oracle still works past the budget
        let space = ExpoSpace::new(
            generators::complete(4).unwrap(),
            generators::cycle(4).unwrap(),
        )
        .unwrap();
        assert_eq!(space.order(), 1024);
        assert_eq!(space.neighbors(0).unwrap().len(), 5);
    }

    #[test]
    fn labels_follow_notation() {
        let space = ExpoSpace::new(
            generators::complete(3).unwrap(),
            generators::path(2).unwrap(),
        )
        .unwrap();
        let x = space.encode(&[2, 1], 0).unwrap();
        assert_eq!(space.label(x), "(2,1;w1)");
    }
}
