//! Hamiltonian-distance/diameter machinery and routing in exponential graphs.
//!
//! dist(u,v;S) is the length of a shortest walk from u to v visiting every
//! vertex of S, and diam*(H) is its maximum over all ordered pairs including
//! u = v. Exact values come from a Held-Karp-style subset DP over the metric
//! closure of S ∪ {u,v}: since walks may repeat vertices, every optimal walk
//! decomposes into shortest paths between consecutive first-visits, so the DP
//! over visit orders is sound.

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::expo::{exponential_with_budget, Budget, ExpoSpace};
use crate::graph::{Graph, StepKind, WalkSpec, UNREACHABLE};
use crate::ham_search;

/// Largest required-set size handled by the exact subset DP.
pub const DEFAULT_DP_LIMIT: usize = 15;

fn check_connected(h: &Graph) -> Result<()> {
    if !h.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(())
}

fn dist_or_err(dist: &[u32], v: usize) -> Result<usize> {
    if dist[v] == UNREACHABLE {
        Err(Error::Disconnected)
    } else {
        Ok(dist[v] as usize)
    }
}

/// Exact dist(u,v;S) with a covering-walk witness.
pub fn ham_distance(h: &Graph, u: usize, v: usize, s: &[usize]) -> Result<(usize, WalkSpec)> {
    ham_distance_limited(h, u, v, s, DEFAULT_DP_LIMIT)
}

pub fn ham_distance_limited(
    h: &Graph,
    u: usize,
    v: usize,
    s: &[usize],
    limit: usize,
) -> Result<(usize, WalkSpec)> {
    let n = h.order();
    for &x in s.iter().chain([&u, &v]) {
        if x >= n {
            return Err(Error::InvalidVertex(x, n));
        }
    }
    check_connected(h)?;
    // interior required vertices: S with the fixed endpoints removed
    let interior: Vec<usize> = s
        .iter()
        .copied()
        .collect::<BTreeSet<_>>()
        .into_iter()
        .filter(|&x| x != u && x != v)
        .collect();
    if interior.len() > limit {
        return Err(Error::LimitExceeded {
            what: "ham-distance subset DP",
            size: interior.len(),
            limit,
        });
    }
    let m = interior.len();
    if m == 0 {
        let len = h.distance(u, v)?.ok_or(Error::Disconnected)?;
        let path = h.shortest_path(u, v).ok_or(Error::Disconnected)?;
        let kinds = vec![StepKind::Plain; len];
        return Ok((len, WalkSpec::open(path, kinds)));
    }
    // metric closure restricted to {u} ∪ interior ∪ {v}
    let from_u = h.bfs_distances(u);
    let from_r: Vec<Vec<u32>> = interior.iter().map(|&r| h.bfs_distances(r)).collect();
    let full = (1usize << m) - 1;
    let mut dp = vec![usize::MAX; (full + 1) * m];
    let mut parent = vec![usize::MAX; (full + 1) * m];
    for i in 0..m {
        dp[(1 << i) * m + i] = dist_or_err(&from_u, interior[i])?;
    }
    for mask in 1..=full {
        for i in 0..m {
            let cur = dp[mask * m + i];
            if cur == usize::MAX || mask & (1 << i) == 0 {
                continue;
            }
            for j in 0..m {
                if mask & (1 << j) != 0 {
                    continue;
                }
                let cand = cur + dist_or_err(&from_r[i], interior[j])?;
                let slot = (mask | (1 << j)) * m + j;
                // lexicographically smallest predecessor on ties for
                // deterministic witnesses
                if cand < dp[slot] || (cand == dp[slot] && i < parent[slot]) {
                    dp[slot] = cand;
                    parent[slot] = i;
                }
            }
        }
    }
    let mut best = usize::MAX;
    let mut best_last = usize::MAX;
    for i in 0..m {
        let tail = dist_or_err(&from_r[i], v)?;
        let cand = dp[full * m + i].saturating_add(tail);
        if cand < best || (cand == best && i < best_last) {
            best = cand;
            best_last = i;
        }
    }
    // reconstruct the visit order, then stitch shortest paths
    let mut order_rev = vec![best_last];
    let mut mask = full;
    let mut last = best_last;
    while mask != 1 << last {
        let prev = parent[mask * m + last];
        mask ^= 1 << last;
        last = prev;
        order_rev.push(last);
    }
    order_rev.reverse();
    let mut vertices = vec![u];
    let mut prev = u;
    for &idx in &order_rev {
        let seg = h.shortest_path(prev, interior[idx]).ok_or(Error::Disconnected)?;
        vertices.extend_from_slice(&seg[1..]);
        prev = interior[idx];
    }
    let seg = h.shortest_path(prev, v).ok_or(Error::Disconnected)?;
    vertices.extend_from_slice(&seg[1..]);
    debug_assert_eq!(vertices.len() - 1, best);
    let kinds = vec![StepKind::Plain; vertices.len() - 1];
    Ok((best, WalkSpec::open(vertices, kinds)))
}

/// dist(u,·;V(H)) for all targets at once (including the closed u=u case),
/// via a single per-source subset DP.
fn ham_distances_from(h: &Graph, u: usize, dists: &[Vec<u32>]) -> Result<Vec<usize>> {
    let n = h.order();
    if n == 1 {
        return Ok(vec![0]);
    }
    let others: Vec<usize> = (0..n).filter(|&x| x != u).collect();
    let m = others.len();
    let full = (1usize << m) - 1;
    let mut dp = vec![usize::MAX; (full + 1) * m];
    for i in 0..m {
        dp[(1 << i) * m + i] = dist_or_err(&dists[u], others[i])?;
    }
    for mask in 1..=full {
        for i in 0..m {
            let cur = dp[mask * m + i];
            if cur == usize::MAX || mask & (1 << i) == 0 {
                continue;
            }
            for j in 0..m {
                if mask & (1 << j) != 0 {
                    continue;
                }
                let cand = cur + dist_or_err(&dists[others[i]], others[j])?;
                let slot = (mask | (1 << j)) * m + j;
                if cand < dp[slot] {
                    dp[slot] = cand;
                }
            }
        }
    }
    let mut out = vec![0usize; n];
    let mut closed = usize::MAX;
    for i in 0..m {
        // dp[full][i] already forces a full covering order ending at
        // others[i], which is exactly dist(u, others[i]; V)
        out[others[i]] = dp[full * m + i];
        closed = closed.min(dp[full * m + i] + dist_or_err(&dists[others[i]], u)?);
    }
    out[u] = closed;
    Ok(out)
}

/// Exact diam*(H) = max over ordered pairs (u,v), including u = v, of
/// dist(u,v;V(H)).
pub fn ham_diameter(h: &Graph) -> Result<usize> {
    ham_diameter_limited(h, DEFAULT_DP_LIMIT)
}

pub fn ham_diameter_limited(h: &Graph, limit: usize) -> Result<usize> {
    check_connected(h)?;
    let n = h.order();
    if n > limit {
        return Err(Error::LimitExceeded {
            what: "ham-diameter subset DP",
            size: n,
            limit,
        });
    }
    if n == 1 {
        return Ok(0);
    }
    let dists: Vec<Vec<u32>> = (0..n).map(|s| h.bfs_distances(s)).collect();
    let per_source: Vec<usize> = (0..n)
        .into_par_iter()
        .map(|u| {
            ham_distances_from(h, u, &dists).map(|row| row.into_iter().max().unwrap_or(0))
        })
        .collect::<Result<_>>()?;
    Ok(per_source.into_iter().max().unwrap_or(0))
}

/// Constructive covering walk from u to v of length 2|V| − dist(u,v) − 2
/// (or 2|V| − 2 when u = v): walk the shortest u-v path, contract it, span
/// the rest with a BFS forest and splice doubled detours into each subtree.
pub fn ham_walk_upper(h: &Graph, u: usize, v: usize) -> Result<(usize, WalkSpec)> {
    let n = h.order();
    if u >= n {
        return Err(Error::InvalidVertex(u, n));
    }
    if v >= n {
        return Err(Error::InvalidVertex(v, n));
    }
    check_connected(h)?;
    let path = if u == v {
        vec![u]
    } else {
        h.shortest_path(u, v).ok_or(Error::Disconnected)?
    };
    let on_path: Vec<bool> = {
        let mut b = vec![false; n];
        for &p in &path {
            b[p] = true;
        }
        b
    };
    // BFS forest rooted at the path; children recorded in discovery order
    let mut parent = vec![usize::MAX; n];
    let mut children: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut queue: std::collections::VecDeque<usize> = path.iter().copied().collect();
    let mut seen = on_path.clone();
    while let Some(w) = queue.pop_front() {
        for &x in h.neighbors(w) {
            let x = x as usize;
            if !seen[x] {
                seen[x] = true;
                parent[x] = w;
                children[w].push(x);
                queue.push_back(x);
            }
        }
    }
    let mut vertices = Vec::with_capacity(2 * n);
    fn descend(w: usize, children: &[Vec<usize>], vertices: &mut Vec<usize>) {
        for &c in &children[w] {
            vertices.push(c);
            descend(c, children, vertices);
            vertices.push(w);
        }
    }
    vertices.push(path[0]);
    for (i, &p) in path.iter().enumerate() {
        if i > 0 {
            vertices.push(p);
        }
        descend(p, &children, &mut vertices);
    }
    let len = vertices.len() - 1;
    debug_assert_eq!(len, path.len() - 1 + 2 * (n - path.len()));
    let kinds = vec![StepKind::Plain; len];
    let walk = if u == v && len > 0 {
        WalkSpec::closed(vertices, kinds)
    } else {
        WalkSpec::open(vertices, kinds)
    };
    Ok((len, walk))
}

/// Constructive upper bound on diam*(H): 2|V| − 2, witnessed by the closed
/// doubled-spanning-tree walk (the u = v case of [`ham_walk_upper`], which
/// maximizes the constructive length 2|V| − dist(u,v) − 2 over all pairs).
pub fn ham_diameter_upper(h: &Graph) -> Result<(usize, WalkSpec)> {
    check_connected(h)?;
    ham_walk_upper(h, 0, 0)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DiamMode {
    /// diam(G)·|V(H)| + diam*(H)
    Formula,
    /// all-source BFS on the materialized graph
    Bfs,
}

pub fn expo_diameter(g: &Graph, h: &Graph, mode: DiamMode) -> Result<usize> {
    expo_diameter_with_budget(g, h, mode, &Budget::default())
}

pub fn expo_diameter_with_budget(
    g: &Graph,
    h: &Graph,
    mode: DiamMode,
    budget: &Budget,
) -> Result<usize> {
    match mode {
        DiamMode::Formula => {
            let dg = g.diameter()?;
            Ok(dg * h.order() + ham_diameter(h)?)
        }
        DiamMode::Bfs => {
            let (gh, _) = exponential_with_budget(g, h, budget)?;
            gh.diameter()
        }
    }
}

/// General sandwich (diam(G)+1)·|V(H)| ≤ diam(G^H) ≤ (diam(G)+2)·|V(H)| − 2.
pub fn diameter_bounds(g: &Graph, h: &Graph) -> Result<(usize, usize)> {
    check_connected(h)?;
    let d = g.diameter()?;
    let q = h.order();
    Ok(((d + 1) * q, (d + 2) * q - 2))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ExponentCase {
    Tree,
    HamiltonianConnected,
    Hamiltonian,
    General,
}

#[derive(Clone, Debug, Serialize)]
pub struct DiameterCase {
    pub case: ExponentCase,
    pub lower: usize,
    pub upper: usize,
    /// present when the case pins the diameter exactly
    pub exact: Option<usize>,
}

/// Specialize the diameter sandwich by classifying the exponent: trees and
/// Hamiltonian-connected exponents give exact values, Hamiltonian exponents
/// sharpen the upper bound, anything else keeps the general sandwich.
/// Classification falls back to `General` when the exponent is too large for
/// the brute-force Hamiltonicity checks.
pub fn corollary_cases(g: &Graph, h: &Graph) -> Result<DiameterCase> {
    let (lower, upper) = diameter_bounds(g, h)?;
    let d = g.diameter()?;
    let q = h.order();
    if h.size() == q - 1 {
        // connected with |V|-1 edges: a tree, diam* = 2q-2 exactly
        let exact = (d + 2) * q - 2;
        return Ok(DiameterCase {
            case: ExponentCase::Tree,
            lower: exact,
            upper: exact,
            exact: Some(exact),
        });
    }
    match ham_search::is_hamiltonian_connected(h) {
        Ok(true) => {
            let exact = (d + 1) * q;
            return Ok(DiameterCase {
                case: ExponentCase::HamiltonianConnected,
                lower: exact,
                upper: exact,
                exact: Some(exact),
            });
        }
        Ok(false) => {}
        Err(Error::LimitExceeded { .. }) => {
            return Ok(DiameterCase {
                case: ExponentCase::General,
                lower,
                upper,
                exact: None,
            })
        }
        Err(e) => return Err(e),
    }
    match ham_search::is_hamiltonian(h) {
        Ok(true) => {
            let ham_upper = (d + 1) * q + h.diameter()? - 1;
            Ok(DiameterCase {
                case: ExponentCase::Hamiltonian,
                lower,
                upper: upper.min(ham_upper),
                exact: None,
            })
        }
        Ok(false) => Ok(DiameterCase {
            case: ExponentCase::General,
            lower,
            upper,
            exact: None,
        }),
        Err(Error::LimitExceeded { .. }) => Ok(DiameterCase {
            case: ExponentCase::General,
            lower,
            upper,
            exact: None,
        }),
        Err(e) => Err(e),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RouteMode {
    /// optimal: exact covering walk of the differing dimensions
    Exact,
    /// follow a fixed Hamiltonian cycle of the exponent until all differing
    /// dimensions are visited, then shortcut to the target position
    HamCycle,
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct RouteSegment {
    pub kind: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dim: Option<usize>,
    pub vertices: Vec<usize>,
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct RoutePlan {
    pub segments: Vec<RouteSegment>,
    pub walk: WalkSpec,
    pub length: usize,
}

/// Route from x to y in G^H without materializing the graph: find a walk W_D
/// in the exponent covering every differing dimension, then follow it,
/// splicing in a base-graph path the first time each differing dimension is
/// visited.
pub fn route(space: &ExpoSpace, x: usize, y: usize, mode: RouteMode) -> Result<RoutePlan> {
    let order = space.order();
    if x >= order {
        return Err(Error::InvalidVertex(x, order));
    }
    if y >= order {
        return Err(Error::InvalidVertex(y, order));
    }
    let g = space.base();
    let h = space.exponent();
    check_connected(g)?;
    check_connected(h)?;
    let (tx, ty) = (space.rho(x), space.rho(y));
    let d_set: Vec<usize> = (0..space.q()).filter(|&i| tx[i] != ty[i]).collect();
    let (sx, sy) = (space.sigma(x), space.sigma(y));

    // step 1-2: the covering walk W_D in the exponent
    let h_walk: Vec<usize> = match mode {
        RouteMode::Exact => ham_distance(h, sx, sy, &d_set)?.1.vertices,
        RouteMode::HamCycle => {
            let cyc = ham_search::hamiltonian_cycle(h)?.ok_or_else(|| {
                Error::Precondition("exponent is not Hamiltonian".into())
            })?;
            let start = cyc.iter().position(|&w| w == sx).unwrap();
            let mut remaining: BTreeSet<usize> = d_set.iter().copied().collect();
            remaining.remove(&sx);
            let mut walk = vec![sx];
            let mut pos = start;
            while !remaining.is_empty() {
                pos += 1;
                let w = cyc[pos % (cyc.len() - 1)];
                remaining.remove(&w);
                walk.push(w);
            }
            let tail = h.shortest_path(*walk.last().unwrap(), sy).ok_or(Error::Disconnected)?;
            walk.extend_from_slice(&tail[1..]);
            walk
        }
    };

    // steps 3-4: follow W_D through H-edges, inserting a dimension-j G-path
    // at the first visit of each differing dimension j
    let mut segments = Vec::new();
    let mut vertices = vec![x];
    let mut kinds = Vec::new();
    let mut remaining: BTreeSet<usize> = d_set.iter().copied().collect();
    let mut cur = x;
    let mut h_seg = vec![cur];
    let flush_h = |h_seg: &mut Vec<usize>, segments: &mut Vec<RouteSegment>| {
        if h_seg.len() > 1 {
            segments.push(RouteSegment {
                kind: "h_path".into(),
                dim: None,
                vertices: std::mem::replace(h_seg, Vec::new()),
            });
        } else {
            h_seg.clear();
        }
    };
    for (step, &w) in h_walk.iter().enumerate() {
        if step > 0 {
            // H-edge: same tuple, new position
            cur = cur - space.sigma(cur) + w;
            vertices.push(cur);
            kinds.push(StepKind::HEdge);
            h_seg.push(cur);
        }
        if remaining.remove(&w) {
            flush_h(&mut h_seg, &mut segments);
            let gp = g.shortest_path(tx[w], ty[w]).ok_or(Error::Disconnected)?;
            let mut seg_vertices = vec![cur];
            for pair in gp.windows(2) {
                let (a, b) = (pair[0], pair[1]);
                let stride = space.digit_stride(w);
                cur = if b >= a {
                    cur + (b - a) * stride
                } else {
                    cur - (a - b) * stride
                };
                vertices.push(cur);
                kinds.push(StepKind::GEdge { dim: w });
                seg_vertices.push(cur);
            }
            segments.push(RouteSegment {
                kind: "g_path".into(),
                dim: Some(w),
                vertices: seg_vertices,
            });
            h_seg = vec![cur];
        }
    }
    flush_h(&mut h_seg, &mut segments);
    debug_assert_eq!(cur, y);
    let length = kinds.len();
    Ok(RoutePlan {
        segments,
        walk: WalkSpec::open(vertices, kinds),
        length,
    })
}
