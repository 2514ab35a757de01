//! Exact connectivity and edge-connectivity, super-edge-connectivity
//! verdicts, and constructive witness cuts for exponential graphs.
//!
//! Everything reduces to unit-capacity max-flow (Dinic). κ uses the classic
//! split-vertex schedule: one sweep from a minimum-degree vertex to its
//! non-neighbors plus a sweep over non-adjacent neighbor pairs. λ fixes one
//! source against all other sinks. The restricted edge connectivity λ′ fixes
//! one edge e0 = ab and takes the minimum over (i) e0 contracted against
//! every vertex-disjoint edge and (ii) every disjoint pair (e, f) with a ∈ e
//! and b ∈ f: a minimum non-trivial cut either leaves e0 inside one side
//! (case i) or splits it, in which case each side is connected and contains
//! an edge through its e0-endpoint (case ii).

use serde::Serialize;

use crate::error::{Error, Result};
use crate::expo::ExpoSpace;
use crate::graph::Graph;

const KAPPA_BUDGET: usize = 5000;
const LAMBDA_PRIME_BUDGET: usize = 2000;

// ---------------------------------------------------------------------------
// Dinic max-flow on small integer capacities

struct FlowNet {
    to: Vec<u32>,
    cap: Vec<i32>,
    adj: Vec<Vec<u32>>,
}

impl FlowNet {
    fn new(n: usize) -> FlowNet {
        FlowNet {
            to: Vec::new(),
            cap: Vec::new(),
            adj: vec![Vec::new(); n],
        }
    }

    fn add(&mut self, u: usize, v: usize, cap: i32) {
        let id = self.to.len() as u32;
        self.to.push(v as u32);
        self.cap.push(cap);
        self.to.push(u as u32);
        self.cap.push(0);
        self.adj[u].push(id);
        self.adj[v].push(id + 1);
    }

    fn bfs_levels(&self, s: usize, t: usize) -> Option<Vec<i32>> {
        let mut level = vec![-1; self.adj.len()];
        level[s] = 0;
        let mut queue = std::collections::VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &id in &self.adj[u] {
                let v = self.to[id as usize] as usize;
                if self.cap[id as usize] > 0 && level[v] < 0 {
                    level[v] = level[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        (level[t] >= 0).then_some(level)
    }

    fn dfs(&mut self, u: usize, t: usize, pushed: i32, level: &[i32], it: &mut [usize]) -> i32 {
        if u == t {
            return pushed;
        }
        while it[u] < self.adj[u].len() {
            let id = self.adj[u][it[u]] as usize;
            let v = self.to[id] as usize;
            if self.cap[id] > 0 && level[v] == level[u] + 1 {
                let got = self.dfs(v, t, pushed.min(self.cap[id]), level, it);
                if got > 0 {
                    self.cap[id] -= got;
                    self.cap[id ^ 1] += got;
                    return got;
                }
            }
            it[u] += 1;
        }
        0
    }

    /// Max-flow value, stopping early once `limit` is reached.
    fn max_flow(&mut self, s: usize, t: usize, limit: i32) -> i32 {
        let mut flow = 0;
        while flow < limit {
            let Some(level) = self.bfs_levels(s, t) else {
                break;
            };
            let mut it = vec![0usize; self.adj.len()];
            loop {
                let got = self.dfs(s, t, limit - flow, &level, &mut it);
                if got == 0 {
                    break;
                }
                flow += got;
                if flow >= limit {
                    break;
                }
            }
        }
        flow
    }

    /// Residual-reachable side of the final cut.
    fn reachable(&self, s: usize) -> Vec<bool> {
        let mut seen = vec![false; self.adj.len()];
        seen[s] = true;
        let mut queue = std::collections::VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &id in &self.adj[u] {
                let v = self.to[id as usize] as usize;
                if self.cap[id as usize] > 0 && !seen[v] {
                    seen[v] = true;
                    queue.push_back(v);
                }
            }
        }
        seen
    }
}

// ---------------------------------------------------------------------------
// Witness types

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CutKind {
    Vertex,
    Edge,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum CutElement {
    Vertex(usize),
    Edge([usize; 2]),
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct CutWitness {
    pub kind: CutKind,
    pub elements: Vec<CutElement>,
    pub component_sizes: Vec<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SuperLambdaVerdict {
    Yes,
    No,
    UndefinedSmallCase,
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ConnectivityReport {
    pub kappa: usize,
    pub lambda: usize,
    pub delta: usize,
    pub maximally_connected: bool,
    pub super_lambda: SuperLambdaVerdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<CutWitness>,
}

// ---------------------------------------------------------------------------
// Vertex and edge connectivity

fn check_order(g: &Graph, what: &'static str, cap: usize) -> Result<()> {
    if g.order() < 2 {
        return Err(Error::Precondition(format!(
            "{what} needs at least 2 vertices"
        )));
    }
    if g.order() > cap {
        return Err(Error::BudgetExceeded {
            what,
            needed: g.order().to_string(),
            cap: cap as u64,
        });
    }
    Ok(())
}

fn is_complete(g: &Graph) -> bool {
    let n = g.order();
    g.size() == n * (n - 1) / 2
}

/// Max-flow between s and t in the split-vertex network: internal vertices
/// cost 1 to pass through, so the value is the minimum s-t vertex cut.
fn vertex_flow(g: &Graph, s: usize, t: usize, limit: usize) -> usize {
    let n = g.order();
    let inf = n as i32;
    let mut net = FlowNet::new(2 * n);
    for v in g.vertices() {
        // v_in = 2v, v_out = 2v+1
        net.add(2 * v, 2 * v + 1, 1);
    }
    for (u, v) in g.edges() {
        net.add(2 * u + 1, 2 * v, inf);
        net.add(2 * v + 1, 2 * u, inf);
    }
    net.max_flow(2 * s + 1, 2 * t, limit as i32) as usize
}

pub fn vertex_connectivity(g: &Graph) -> Result<usize> {
    check_order(g, "vertex connectivity", KAPPA_BUDGET)?;
    if !g.is_connected() {
        return Ok(0);
    }
    let n = g.order();
    if is_complete(g) {
        return Ok(n - 1);
    }
    let v = g.vertices().min_by_key(|&x| g.degree(x)).unwrap();
    let mut best = g.min_degree();
    for u in g.vertices() {
        if u != v && !g.has_edge(u, v) {
            best = best.min(vertex_flow(g, v, u, best));
        }
    }
    let nb = g.neighbors(v);
    for (i, &a) in nb.iter().enumerate() {
        for &b in &nb[i + 1..] {
            let (a, b) = (a as usize, b as usize);
            if !g.has_edge(a, b) {
                best = best.min(vertex_flow(g, a, b, best));
            }
        }
    }
    Ok(best)
}

fn edge_net(g: &Graph, extra: usize) -> FlowNet {
    let mut net = FlowNet::new(g.order() + extra);
    for (u, v) in g.edges() {
        net.add(u, v, 1);
        net.add(v, u, 1);
    }
    net
}

pub fn edge_connectivity(g: &Graph) -> Result<usize> {
    check_order(g, "edge connectivity", KAPPA_BUDGET)?;
    if !g.is_connected() {
        return Ok(0);
    }
    let mut best = g.min_degree();
    for t in 1..g.order() {
        let mut net = edge_net(g, 0);
        best = best.min(net.max_flow(0, t, best as i32) as usize);
    }
    Ok(best)
}

// ---------------------------------------------------------------------------
// Restricted edge connectivity and super-λ

fn edge_cut_witness(g: &Graph, side: &[bool]) -> CutWitness {
    let elements: Vec<CutElement> = g
        .edges()
        .filter(|&(u, v)| side[u] != side[v])
        .map(|(u, v)| CutElement::Edge([u, v]))
        .collect();
    let a = side.iter().take(g.order()).filter(|&&s| s).count();
    let mut sizes = vec![a, g.order() - a];
    sizes.sort_unstable();
    CutWitness {
        kind: CutKind::Edge,
        elements,
        component_sizes: sizes,
    }
}

/// Minimum edge cut separating the (contracted) edge `e` from `f`.
fn pair_cut(g: &Graph, e: (usize, usize), f: (usize, usize), limit: usize) -> (usize, FlowNet) {
    let n = g.order();
    let inf = (2 * g.size() + 2) as i32;
    let mut net = edge_net(g, 2);
    let (s, t) = (n, n + 1);
    net.add(s, e.0, inf);
    net.add(s, e.1, inf);
    net.add(f.0, t, inf);
    net.add(f.1, t, inf);
    let flow = net.max_flow(s, t, limit as i32) as usize;
    (flow, net)
}

/// Exact restricted edge connectivity λ′ with a minimum non-trivial cut, or
/// `None` when no two vertex-disjoint edges exist.
pub fn restricted_edge_connectivity(g: &Graph) -> Result<Option<(usize, CutWitness)>> {
    check_order(g, "restricted edge connectivity", LAMBDA_PRIME_BUDGET)?;
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let disjoint =
        |e: (usize, usize), f: (usize, usize)| e.0 != f.0 && e.0 != f.1 && e.1 != f.0 && e.1 != f.1;
    let e0 = edges[0];
    if !edges.iter().any(|&f| disjoint(e0, f)) {
        // e0 meets every edge; check the remaining pairs exhaustively (such
        // graphs are tiny: triangles and stars)
        let any = edges
            .iter()
            .enumerate()
            .any(|(i, &e)| edges[i + 1..].iter().any(|&f| disjoint(e, f)));
        if !any {
            return Ok(None);
        }
    }
    let mut best = g.size() + 1; // above any possible cut, safe as an i32 limit
    let mut witness = None;
    let consider = |g: &Graph, e, f, best: &mut usize, witness: &mut Option<CutWitness>| {
        let (flow, net) = pair_cut(g, e, f, *best);
        if flow < *best {
            *best = flow;
            *witness = Some(edge_cut_witness(g, &net.reachable(g.order())));
        }
    };
    for &f in &edges {
        if disjoint(e0, f) {
            consider(g, e0, f, &mut best, &mut witness);
        }
    }
    let incident = |x: usize| edges.iter().copied().filter(move |&(u, v)| u == x || v == x);
    for e in incident(e0.0) {
        for f in incident(e0.1) {
            if disjoint(e, f) {
                consider(g, e, f, &mut best, &mut witness);
            }
        }
    }
    match witness {
        Some(w) => Ok(Some((best, w))),
        // e0 had a disjoint partner, so candidates were considered
        None => Err(Error::Precondition(
            "no non-trivial cut found despite disjoint edges".into(),
        )),
    }
}

/// Super edge-connectivity verdict: yes iff λ′ > λ, i.e. every minimum edge
/// cut isolates a vertex. Graphs without two vertex-disjoint edges have no
/// non-trivial cut at all and are vacuously super-λ.
pub fn is_super_edge_connected(g: &Graph) -> Result<(SuperLambdaVerdict, Option<CutWitness>)> {
    check_order(g, "super edge-connectivity", LAMBDA_PRIME_BUDGET)?;
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let lambda = edge_connectivity(g)?;
    match restricted_edge_connectivity(g)? {
        None => Ok((SuperLambdaVerdict::UndefinedSmallCase, None)),
        Some((lp, _)) if lp > lambda => Ok((SuperLambdaVerdict::Yes, None)),
        Some((_, w)) => Ok((SuperLambdaVerdict::No, Some(w))),
    }
}

pub fn connectivity_report(g: &Graph) -> Result<ConnectivityReport> {
    let kappa = vertex_connectivity(g)?;
    let lambda = edge_connectivity(g)?;
    let delta = g.min_degree();
    let (super_lambda, witness) = is_super_edge_connected(g)?;
    Ok(ConnectivityReport {
        kappa,
        lambda,
        delta,
        maximally_connected: kappa == delta,
        super_lambda,
        witness,
    })
}

// ---------------------------------------------------------------------------
// The exponential-graph theorems

/// The two-clause super-edge-connectivity condition for G^H:
/// (δ(G) ≥ 2 or H not complete) and (δ(H) ≥ 2 or G not complete).
pub fn super_edge_predicate(g: &Graph, h: &Graph) -> Result<bool> {
    if g.order() < 2 || h.order() < 2 {
        return Err(Error::Precondition(
            "super-edge-connectivity predicate needs both factors non-trivial".into(),
        ));
    }
    Ok((g.min_degree() >= 2 || !is_complete(h)) && (h.min_degree() >= 2 || !is_complete(g)))
}

/// Minimum edge cut of G^H that does not isolate a vertex, for the cases
/// where the predicate fails. F1 (δ(G) = 1, H complete) takes the q G-edges
/// leaving a constant-tuple fiber of a degree-1 base vertex; F2 (G complete,
/// δ(H) = 1) takes the p H-edges tied to a degree-1 exponent vertex across
/// one base coordinate line.
pub fn counterexample_cut(space: &ExpoSpace) -> Result<CutWitness> {
    let g = space.base();
    let h = space.exponent();
    let (p, q) = (space.p(), space.q());
    if super_edge_predicate(g, h)? {
        return Err(Error::Precondition(
            "no counterexample cut: the exponential graph is super edge-connected".into(),
        ));
    }
    if g.min_degree() == 1 && is_complete(h) {
        // F1: fiber of the constant tuple (a,...,a) for a degree-1 vertex a
        let a = g.vertices().find(|&v| g.degree(v) == 1).unwrap();
        let tuple = vec![a; q];
        let mut elements = Vec::with_capacity(q);
        for j in 0..q {
            let x = space.encode(&tuple, j)?;
            let b = g.neighbors(a)[0] as usize;
            let y = if b >= a {
                x + (b - a) * space.digit_stride(j)
            } else {
                x - (a - b) * space.digit_stride(j)
            };
            elements.push(CutElement::Edge([x.min(y), x.max(y)]));
        }
        return Ok(CutWitness {
            kind: CutKind::Edge,
            elements,
            component_sizes: vec![q, space.order() - q],
        });
    }
    // F2: degree-1 exponent vertex w1 with unique neighbor w2; the side is
    // the coordinate-w1 line through the zero tuple at position w1
    let w1 = h.vertices().find(|&v| h.degree(v) == 1).unwrap();
    let w2 = h.neighbors(w1)[0] as usize;
    let mut elements = Vec::with_capacity(p);
    for u in 0..p {
        let mut tuple = vec![0usize; q];
        tuple[w1] = u;
        let x = space.encode(&tuple, w1)?;
        let y = space.encode(&tuple, w2)?;
        elements.push(CutElement::Edge([x.min(y), x.max(y)]));
    }
    Ok(CutWitness {
        kind: CutKind::Edge,
        elements,
        component_sizes: vec![p, space.order() - p],
    })
}

/// Check an edge-cut witness against a materialized host: removal must
/// disconnect the graph into components matching the recorded sizes, none of
/// size 1.
pub fn verify_edge_cut(g: &Graph, w: &CutWitness) -> Result<()> {
    if w.kind != CutKind::Edge {
        return Err(Error::MalformedCertificate("expected an edge cut".into()));
    }
    let removed: std::collections::HashSet<(usize, usize)> = w
        .elements
        .iter()
        .map(|e| match e {
            CutElement::Edge([u, v]) => Ok((*u.min(v), *u.max(v))),
            CutElement::Vertex(_) => {
                Err(Error::MalformedCertificate("vertex element in edge cut".into()))
            }
        })
        .collect::<Result<_>>()?;
    for &(u, v) in &removed {
        if !g.has_edge(u, v) {
            return Err(Error::MalformedCertificate(format!(
                "cut edge ({u},{v}) not present in the host"
            )));
        }
    }
    let kept: Vec<(usize, usize)> = g.edges().filter(|e| !removed.contains(e)).collect();
    let rest = Graph::from_edges(g.order(), kept)?;
    // component sizes via repeated BFS
    let mut seen = vec![false; g.order()];
    let mut sizes = Vec::new();
    for s in rest.vertices() {
        if seen[s] {
            continue;
        }
        let mut size = 0;
        let mut queue = std::collections::VecDeque::from([s]);
        seen[s] = true;
        while let Some(u) = queue.pop_front() {
            size += 1;
            for &v in rest.neighbors(u) {
                if !seen[v as usize] {
                    seen[v as usize] = true;
                    queue.push_back(v as usize);
                }
            }
        }
        sizes.push(size);
    }
    sizes.sort_unstable();
    if sizes.len() < 2 {
        return Err(Error::MalformedCertificate(
            "cut removal does not disconnect the host".into(),
        ));
    }
    if sizes[0] < 2 {
        return Err(Error::MalformedCertificate(
            "cut isolates a vertex".into(),
        ));
    }
    let mut expected = w.component_sizes.clone();
    expected.sort_unstable();
    if sizes != expected {
        return Err(Error::MalformedCertificate(format!(
            "component sizes {sizes:?} do not match witness {expected:?}"
        )));
    }
    Ok(())
}

/// κ(G^H) = δ(G) + δ(H), cross-checked by max-flow on the materialized graph.
pub fn verify_maxcon_theorem(space: &ExpoSpace, gh: &Graph) -> Result<bool> {
    let claimed = space.base().min_degree() + space.exponent().min_degree();
    Ok(vertex_connectivity(gh)? == claimed)
}

/// Super-edge-connectivity iff-theorem: predicate on the factors agrees with
/// the λ′ verdict on the materialized graph.
pub fn verify_supered_theorem(space: &ExpoSpace, gh: &Graph) -> Result<bool> {
    let predicate = super_edge_predicate(space.base(), space.exponent())?;
    let (verdict, _) = is_super_edge_connected(gh)?;
    Ok(match verdict {
        SuperLambdaVerdict::Yes | SuperLambdaVerdict::UndefinedSmallCase => predicate,
        SuperLambdaVerdict::No => !predicate,
    })
}

/// Špacapan's Cartesian-product connectivity formula, used as an independent
/// oracle: κ(G□H) = min{κ(G)|V(H)|, κ(H)|V(G)|, δ(G)+δ(H)}.
pub fn spacapan_formula(g: &Graph, h: &Graph) -> Result<usize> {
    let kg = vertex_connectivity(g)?;
    let kh = vertex_connectivity(h)?;
    Ok((kg * h.order())
        .min(kh * g.order())
        .min(g.min_degree() + h.min_degree()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expo;
    use crate::generators;

    #[test]
    fn hypercube_connectivity() {
        let q3 = generators::hypercube(3).unwrap();
        assert_eq!(vertex_connectivity(&q3).unwrap(), 3);
        assert_eq!(edge_connectivity(&q3).unwrap(), 3);
    }

    #[test]
    fn classic_small_cases() {
        assert_eq!(vertex_connectivity(&generators::complete(5).unwrap()).unwrap(), 4);
        assert_eq!(vertex_connectivity(&generators::cycle(7).unwrap()).unwrap(), 2);
        assert_eq!(vertex_connectivity(&generators::path(5).unwrap()).unwrap(), 1);
        assert_eq!(edge_connectivity(&generators::path(5).unwrap()).unwrap(), 1);
        // two triangles sharing a vertex: κ = 1, λ = 2
        let bowtie = Graph::from_edges(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]).unwrap();
        assert_eq!(vertex_connectivity(&bowtie).unwrap(), 1);
        assert_eq!(edge_connectivity(&bowtie).unwrap(), 2);
        // disconnected
        let two = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(vertex_connectivity(&two).unwrap(), 0);
        assert_eq!(edge_connectivity(&two).unwrap(), 0);
    }

    #[test]
    fn kappa_lambda_delta_chain() {
        let battery = [
            generators::cycle(6).unwrap(),
            generators::complete(4).unwrap(),
            generators::path(4).unwrap(),
            generators::hypercube(4).unwrap(),
            generators::de_bruijn(2, 3).unwrap(),
            generators::kautz(2, 2).unwrap(),
            generators::mobius_cube(3).unwrap(),
        ];
        for g in &battery {
            let k = vertex_connectivity(g).unwrap();
            let l = edge_connectivity(g).unwrap();
            assert!(k <= l && l <= g.min_degree(), "order {}", g.order());
        }
    }

    #[test]
    fn expo_kappa_formula() {
        let c8 = generators::cycle(8).unwrap();
        let k2 = generators::complete(2).unwrap();
        let (gh, _) = expo::exponential(&c8, &k2).unwrap();
        assert_eq!(vertex_connectivity(&gh).unwrap(), 3); // δ(C8)+δ(K2)
    }

    #[test]
    fn expo_kappa_formula_debruijn() {
        let k4 = generators::complete(4).unwrap();
        let b22 = generators::de_bruijn(2, 2).unwrap();
        let (gh, _) = expo::exponential(&k4, &b22).unwrap();
        assert_eq!(gh.order(), 1024);
        assert_eq!(vertex_connectivity(&gh).unwrap(), 5); // 3 + 2
    }

    #[test]
    fn cartesian_power_corollary() {
        // κ(G^[n]) = n·δ(G)
        for (g, n) in [
            (generators::cycle(5).unwrap(), 2),
            (generators::path(3).unwrap(), 2),
            (generators::complete(4).unwrap(), 2),
            (generators::complete(2).unwrap(), 3),
        ] {
            let power = expo::cartesian_power(&g, n).unwrap();
            assert_eq!(
                vertex_connectivity(&power).unwrap(),
                n * g.min_degree(),
                "base order {} power {n}",
                g.order()
            );
        }
    }

    #[test]
    fn cycle_is_not_super_lambda() {
        let c8 = generators::cycle(8).unwrap();
        let (verdict, witness) = is_super_edge_connected(&c8).unwrap();
        assert_eq!(verdict, SuperLambdaVerdict::No);
        let w = witness.unwrap();
        assert_eq!(w.elements.len(), 2);
        assert!(w.component_sizes.iter().all(|&s| s >= 2));
        verify_edge_cut(&c8, &w).unwrap();
    }

    #[test]
    fn small_cases_are_vacuously_super_lambda() {
        for g in [
            generators::complete(3).unwrap(),
            generators::complete(2).unwrap(),
            generators::path(3).unwrap(),                       // a 2-star
            Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap(), // 3-star
        ] {
            let (verdict, witness) = is_super_edge_connected(&g).unwrap();
            assert_eq!(verdict, SuperLambdaVerdict::UndefinedSmallCase);
            assert!(witness.is_none());
        }
    }

    #[test]
    fn omega3_is_super_lambda() {
        let (gh, _) = expo::exponential(
            &generators::cycle(8).unwrap(),
            &generators::complete(2).unwrap(),
        )
        .unwrap();
        let (verdict, _) = is_super_edge_connected(&gh).unwrap();
        assert_eq!(verdict, SuperLambdaVerdict::Yes);
    }

    #[test]
    fn k3_k2_is_not_super_lambda() {
        let (gh, _) = expo::exponential(
            &generators::complete(3).unwrap(),
            &generators::complete(2).unwrap(),
        )
        .unwrap();
        let (verdict, witness) = is_super_edge_connected(&gh).unwrap();
        assert_eq!(verdict, SuperLambdaVerdict::No);
        verify_edge_cut(&gh, &witness.unwrap()).unwrap();
    }

    #[test]
    fn predicate_examples() {
        let k2 = generators::complete(2).unwrap();
        let k3 = generators::complete(3).unwrap();
        let c8 = generators::cycle(8).unwrap();
        let p3 = generators::path(3).unwrap();
        assert!(!super_edge_predicate(&k2, &k2).unwrap());
        assert!(super_edge_predicate(&c8, &k2).unwrap());
        assert!(!super_edge_predicate(&k3, &p3).unwrap());
    }

    #[test]
    fn witness_cut_f1() {
        // K2^K2 = C8: two G-edges cut off one fiber (a K2) from the rest
        let space = ExpoSpace::new(
            generators::complete(2).unwrap(),
            generators::complete(2).unwrap(),
        )
        .unwrap();
        let w = counterexample_cut(&space).unwrap();
        assert_eq!(w.elements.len(), 2);
        assert_eq!(w.component_sizes, vec![2, 6]);
        let gh = space.materialize(&expo::Budget::default()).unwrap();
        verify_edge_cut(&gh, &w).unwrap();
    }

    #[test]
    fn witness_cut_f2_k3_p3() {
        let space = ExpoSpace::new(
            generators::complete(3).unwrap(),
            generators::path(3).unwrap(),
        )
        .unwrap();
        let w = counterexample_cut(&space).unwrap();
        assert_eq!(w.elements.len(), 3);
        assert_eq!(w.component_sizes, vec![3, 78]);
        let gh = space.materialize(&expo::Budget::default()).unwrap();
        verify_edge_cut(&gh, &w).unwrap();
    }

    #[test]
    fn witness_cut_f2_size_is_min_degree() {
        let space = ExpoSpace::new(
            generators::complete(4).unwrap(),
            generators::complete(2).unwrap(),
        )
        .unwrap();
        let w = counterexample_cut(&space).unwrap();
        let gh = space.materialize(&expo::Budget::default()).unwrap();
        assert_eq!(w.elements.len(), gh.min_degree()); // |F2| = p = δ(G^H)
        verify_edge_cut(&gh, &w).unwrap();
    }

    #[test]
    fn supered_iff_battery() {
        let pairs = [
            (generators::complete(2).unwrap(), generators::complete(2).unwrap()),
            (generators::cycle(8).unwrap(), generators::complete(2).unwrap()),
            (generators::complete(3).unwrap(), generators::complete(2).unwrap()),
            (generators::complete(3).unwrap(), generators::path(3).unwrap()),
            (generators::complete(4).unwrap(), generators::complete(3).unwrap()),
            (generators::cycle(4).unwrap(), generators::cycle(4).unwrap()),
            (generators::cycle(4).unwrap(), generators::path(3).unwrap()),
            (generators::path(3).unwrap(), generators::complete(3).unwrap()),
            (generators::complete(2).unwrap(), generators::path(3).unwrap()),
            (generators::hypercube(2).unwrap(), generators::complete(2).unwrap()),
            (generators::complete(2).unwrap(), generators::cycle(4).unwrap()),
            (generators::de_bruijn(2, 2).unwrap(), generators::complete(2).unwrap()),
        ];
        for (g, h) in &pairs {
            let (gh, space) = expo::exponential(g, h).unwrap();
            assert!(
                verify_maxcon_theorem(&space, &gh).unwrap(),
                "kappa formula for {}^{}",
                g.order(),
                h.order()
            );
            assert!(
                verify_supered_theorem(&space, &gh).unwrap(),
                "super-lambda iff for {}^{}",
                g.order(),
                h.order()
            );
        }
    }

    #[test]
    fn c4_c4_lambda_prime_exceeds_lambda() {
        let c4 = generators::cycle(4).unwrap();
        let (gh, space) = expo::exponential(&c4, &c4).unwrap();
        assert_eq!(gh.order(), 1024);
        assert!(super_edge_predicate(space.base(), space.exponent()).unwrap());
        assert_eq!(edge_connectivity(&gh).unwrap(), 4);
        let (lp, w) = restricted_edge_connectivity(&gh).unwrap().unwrap();
        assert!(lp > 4, "lambda' = {lp}");
        assert!(w.component_sizes.iter().all(|&s| s >= 2));
    }

    #[test]
    fn spacapan_oracle() {
        let pairs = [
            (generators::complete(3).unwrap(), generators::complete(3).unwrap()),
            (generators::cycle(4).unwrap(), generators::complete(2).unwrap()),
            (generators::path(3).unwrap(), generators::cycle(5).unwrap()),
            (generators::hypercube(3).unwrap(), generators::complete(2).unwrap()),
            (generators::complete(4).unwrap(), generators::path(3).unwrap()),
            (generators::cycle(5).unwrap(), generators::cycle(4).unwrap()),
            (generators::complete(2).unwrap(), generators::complete(2).unwrap()),
            (generators::path(4).unwrap(), generators::path(4).unwrap()),
            (generators::complete(5).unwrap(), generators::cycle(4).unwrap()),
            (generators::de_bruijn(2, 2).unwrap(), generators::path(3).unwrap()),
            (generators::kautz(2, 1).unwrap(), generators::hypercube(2).unwrap()),
        ];
        for (g, h) in &pairs {
            let prod = expo::cartesian_product(g, h).unwrap();
            assert_eq!(
                vertex_connectivity(&prod).unwrap(),
                spacapan_formula(g, h).unwrap(),
                "pair ({}, {})",
                g.order(),
                h.order()
            );
        }
    }

    #[test]
    fn report_shape() {
        let q3 = generators::hypercube(3).unwrap();
        let r = connectivity_report(&q3).unwrap();
        assert_eq!((r.kappa, r.lambda, r.delta), (3, 3, 3));
        assert!(r.maximally_connected);
        assert_eq!(r.super_lambda, SuperLambdaVerdict::Yes);
        let json = serde_json::to_value(&r).unwrap();
        assert_eq!(json["superLambda"], "yes");
    }
}
