//! Constructive Hamiltonian machinery for exponential graphs: explicit
//! Hamiltonian cycles in G^{K₂}, dimension-alternating Hamiltonian cycles in
//! Cartesian powers G^[n], lifting through Hamiltonian-connected exponents to
//! Hamiltonian cycles of G^H, edge-disjoint Hamiltonian cycle pairs and
//! completely independent spanning tree pairs in G^{Kₙ}, plus verifiers.
//!
//! All constructions operate on the Hamiltonian cycle of the base graph that
//! the caller supplies, so positions along that cycle act as Z_p coordinates
//! and every product edge used is a base-cycle edge.

use std::collections::{HashMap, HashSet, VecDeque};

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::expo::{Budget, ExpoSpace};
use crate::graph::{Graph, Host, StepKind, WalkSpec};
use crate::ham_search;

/// Search cap for per-pair Hamiltonian path searches in the exponent graph.
const LIFT_PATH_LIMIT: usize = 24;

/// Seed for the sampled path-disjointness spot check in [`verify_cist`].
const CIST_SAMPLE_SEED: u64 = 0xC157;

/// Number of sampled vertex pairs when the host is too large for the
/// exhaustive path-disjointness check.
const CIST_SAMPLE_PAIRS: usize = 50;

/// Hosts up to this order get the exhaustive all-pairs CIST path check.
const CIST_EXHAUSTIVE_LIMIT: usize = 200;

/// A Hamiltonian cycle certificate: a closed walk that visits every host
/// vertex exactly once, with per-step edge annotations.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct HamCycleCert {
    /// Human-readable description of the host the certificate lives on.
    pub host: String,
    /// Order of the host.
    pub order: usize,
    /// The closed walk.
    pub cycle: WalkSpec,
}

/// A pair of spanning trees claimed to be completely independent: edge-disjoint
/// spanning trees such that no vertex has degree greater than one in both.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CistPair {
    /// Human-readable description of the host.
    pub host: String,
    /// Order of the host.
    pub order: usize,
    /// Edge set of the first spanning tree.
    pub t1: Vec<[usize; 2]>,
    /// Edge set of the second spanning tree.
    pub t2: Vec<[usize; 2]>,
}

fn expo_host_string(p: usize, q: usize) -> String {
    format!("exponential graph, base order {p}, exponent order {q}")
}

/// Checks that `hc` lists the vertices of a Hamiltonian cycle of `g` in order.
fn check_ham_cycle_of(g: &Graph, hc: &[usize]) -> Result<()> {
    let p = g.order();
    if p < 3 {
        return Err(Error::Precondition(format!(
            "a Hamiltonian cycle needs order at least 3, got {p}"
        )));
    }
    if hc.len() != p {
        return Err(Error::Precondition(format!(
            "Hamiltonian cycle must list all {p} vertices, got {}",
            hc.len()
        )));
    }
    let mut seen = vec![false; p];
    for &v in hc {
        if v >= p {
            return Err(Error::InvalidVertex(v, p));
        }
        if seen[v] {
            return Err(Error::Precondition(format!(
                "Hamiltonian cycle repeats vertex {v}"
            )));
        }
        seen[v] = true;
    }
    for i in 0..p {
        let u = hc[i];
        let v = hc[(i + 1) % p];
        if !g.has_edge(u, v) {
            return Err(Error::Precondition(format!(
                "Hamiltonian cycle step {u}-{v} is not an edge"
            )));
        }
    }
    Ok(())
}

fn require_even_order(p: usize) -> Result<()> {
    if p % 2 != 0 {
        return Err(Error::Precondition(format!(
            "construction requires even base order, got {p}"
        )));
    }
    Ok(())
}

fn pow_checked(p: usize, n: usize) -> Result<usize> {
    let mut acc: u128 = 1;
    for _ in 0..n {
        acc = acc.checked_mul(p as u128).ok_or(Error::BudgetExceeded {
            what: "product construction",
            needed: format!("{p}^{n} vertices"),
            cap: Budget::default().max_vertices,
        })?;
    }
    Budget::default().check_vertices("product construction", acc)?;
    Ok(acc as usize)
}

// ---------------------------------------------------------------------------
// Hamiltonian cycle in G^{K₂}
// ---------------------------------------------------------------------------

/// Explicit Hamiltonian cycle in G^{K₂} from a Hamiltonian cycle of G.
///
/// Writing positions on the base cycle modulo p, the cycle interleaves full
/// dimension-1 sweeps at exponent vertex w₁ (first coordinate descending)
/// with full dimension-2 sweeps at w₂ (second coordinate ascending), joined
/// by exponent edges.  The construction imposes no parity condition on p.
pub fn ham_cycle_gk2(g: &Graph, hc: &[usize]) -> Result<HamCycleCert> {
    check_ham_cycle_of(g, hc)?;
    let p = g.order();
    Budget::default().check_vertices("G^K2 cycle", 2 * (p as u128) * (p as u128))?;
    let md = |x: i64| x.rem_euclid(p as i64) as usize;
    // Vertex (x, y; w_{j+1}) of G^{K₂}, with x, y positions along the base cycle.
    let enc = |x: usize, y: usize, j: usize| (hc[x] + p * hc[y]) * 2 + j;
    let mut verts = Vec::with_capacity(2 * p * p + 1);
    let mut kinds = Vec::with_capacity(2 * p * p);
    for l in 0..p as i64 {
        let b = md(-l) as i64;
        // Dimension-1 sweep at w₁: first coordinate l, l-1, ..., l+1 (mod p).
        for i in 0..p as i64 {
            verts.push(enc(md(l - i), b as usize, 0));
            kinds.push(if i < p as i64 - 1 {
                StepKind::GEdge { dim: 0 }
            } else {
                StepKind::HEdge
            });
        }
        // Dimension-2 sweep at w₂: second coordinate b, b+1, ..., b-1 (mod p).
        for i in 0..p as i64 {
            verts.push(enc(md(l + 1), md(b + i), 1));
            kinds.push(if i < p as i64 - 1 {
                StepKind::GEdge { dim: 1 }
            } else {
                StepKind::HEdge
            });
        }
    }
    verts.push(verts[0]);
    Ok(HamCycleCert {
        host: expo_host_string(p, 2),
        order: 2 * p * p,
        cycle: WalkSpec::closed(verts, kinds),
    })
}

// ---------------------------------------------------------------------------
// Torus cycle toolkit (coordinates are positions along the base cycle)
// ---------------------------------------------------------------------------

/// Boustrophedon Hamiltonian cycle of the m×m torus grid (m even): rows of
/// alternating +1 moves in both coordinates, stitched by single backward
/// moves in the second coordinate.  No two consecutive edges share a
/// dimension, and every dimension-2 edge is adjacent only to dimension-1
/// edges.
fn bous_pairs(m: usize) -> Vec<(usize, usize)> {
    debug_assert!(m >= 2 && m % 2 == 0);
    let md = |x: i64| x.rem_euclid(m as i64) as usize;
    let mut seq = Vec::with_capacity(m * m);
    let mut t0: i64 = 0;
    for _ in 0..m / 2 {
        seq.push((0, md(t0)));
        for i in 1..m as i64 {
            seq.push((i as usize, md(t0 + i - 1)));
            seq.push((i as usize, md(t0 + i)));
        }
        seq.push((0, md(t0 - 1)));
        t0 -= 2;
    }
    seq
}

/// The reversed-move boustrophedon: same row structure with every move
/// direction negated, stitched by single forward moves.  Edge-disjoint from
/// [`bous_pairs`] on the same torus.
fn bous_pairs_rev(m: usize) -> Vec<(usize, usize)> {
    debug_assert!(m >= 2 && m % 2 == 0);
    let md = |x: i64| x.rem_euclid(m as i64) as usize;
    let mut seq = Vec::with_capacity(m * m);
    let mut t0: i64 = 0;
    for _ in 0..m / 2 {
        seq.push((0, md(t0)));
        for i in 1..m as i64 {
            seq.push((m - i as usize, md(t0 - i + 1)));
            seq.push((m - i as usize, md(t0 - i)));
        }
        seq.push((0, md(t0 + 1)));
        t0 += 2;
    }
    seq
}

/// Lifts a Hamiltonian cycle of the k-dimensional torus (given as a vertex-id
/// sequence with implicit closing edge from last to first) to a Hamiltonian
/// cycle of the (k+1)-dimensional torus with p layers (p even): layers carry
/// the cycle-minus-closing-edge path alternately forward and backward, joined
/// by single moves in the new dimension.
fn lift_once(seq: &[u32], layer_stride: u32, p: usize) -> Vec<u32> {
    debug_assert!(p % 2 == 0);
    let mut out = Vec::with_capacity(seq.len() * p);
    for layer in 0..p {
        let add = layer as u32 * layer_stride;
        if layer % 2 == 0 {
            out.extend(seq.iter().map(|&v| v + add));
        } else {
            out.extend(seq.iter().rev().map(|&v| v + add));
        }
    }
    out
}

/// The digit (0-based dimension) in which two torus ids differ; they must
/// differ in exactly one digit.
fn diff_digit(mut a: u32, mut b: u32, p: usize, n: usize) -> usize {
    let p = p as u32;
    let mut dim = usize::MAX;
    for i in 0..n {
        if a % p != b % p {
            debug_assert!(dim == usize::MAX, "ids differ in more than one digit");
            dim = i;
        }
        a /= p;
        b /= p;
    }
    debug_assert!(dim != usize::MAX, "ids are equal");
    dim
}

/// Maps a torus cycle (coordinates are base-cycle positions) to a closed
/// WalkSpec over cartesian-power vertex ids with actual base-graph digits.
fn torus_walk_to_walkspec(seq: &[u32], hc: &[usize], p: usize, n: usize) -> WalkSpec {
    let cart = |v: u32| -> usize {
        let mut v = v as usize;
        let mut id = 0usize;
        let mut stride = 1usize;
        for _ in 0..n {
            id += hc[v % p] * stride;
            v /= p;
            stride *= p;
        }
        id
    };
    let l = seq.len();
    let mut verts = Vec::with_capacity(l + 1);
    let mut kinds = Vec::with_capacity(l);
    for k in 0..l {
        verts.push(cart(seq[k]));
        kinds.push(StepKind::GEdge {
            dim: diff_digit(seq[k], seq[(k + 1) % l], p, n),
        });
    }
    verts.push(verts[0]);
    WalkSpec::closed(verts, kinds)
}

/// Rotates a cycle sequence so that the implicit closing edge (last, first)
/// avoids both vertices in `avoid`.
fn rotate_avoiding(seq: &mut Vec<u32>, avoid: [u32; 2]) {
    let l = seq.len();
    for i in 0..l {
        let a = seq[i];
        let b = seq[(i + 1) % l];
        if a != avoid[0] && a != avoid[1] && b != avoid[0] && b != avoid[1] {
            seq.rotate_left((i + 1) % l);
            return;
        }
    }
    unreachable!("cycle has an edge avoiding two given vertices");
}

// ---------------------------------------------------------------------------
// Dimension-alternating Hamiltonian cycles of G^[n]
// ---------------------------------------------------------------------------

/// Hamiltonian cycle of the Cartesian power G^[n] in which no two consecutive
/// edges share a dimension; moreover every edge of dimension ≥ 2 is adjacent
/// only to dimension-1 edges.  Requires |V(G)| even and n ≥ 2; only edges of
/// the supplied Hamiltonian cycle are used.
pub fn cp_ham_cycle(g: &Graph, hc: &[usize], n: usize) -> Result<WalkSpec> {
    check_ham_cycle_of(g, hc)?;
    let p = g.order();
    require_even_order(p)?;
    if n < 2 {
        return Err(Error::InvalidParameter(format!(
            "cartesian power exponent must be at least 2, got {n}"
        )));
    }
    pow_checked(p, n)?;
    let mut seq: Vec<u32> = bous_pairs(p)
        .into_iter()
        .map(|(a, b)| (a + p * b) as u32)
        .collect();
    for k in 2..n {
        seq = lift_once(&seq, (p as u32).pow(k as u32), p);
    }
    Ok(torus_walk_to_walkspec(&seq, hc, p, n))
}

/// Two edge-disjoint Hamiltonian cycles of G^[n], each with no two
/// consecutive edges sharing a dimension.  The second cycle is the
/// reversed-move boustrophedon; for G ≅ C_p and n = 2 the two edge sets
/// partition the edges of the host.  Requires |V(G)| even ≥ 4 and n ≥ 2.
pub fn cp_ham_cycle_pair(g: &Graph, hc: &[usize], n: usize) -> Result<(WalkSpec, WalkSpec)> {
    check_ham_cycle_of(g, hc)?;
    let p = g.order();
    require_even_order(p)?;
    if p < 4 {
        return Err(Error::Precondition(format!(
            "paired construction requires base order at least 4, got {p}"
        )));
    }
    if n < 2 {
        return Err(Error::InvalidParameter(format!(
            "cartesian power exponent must be at least 2, got {n}"
        )));
    }
    pow_checked(p, n)?;
    let to_id = |(a, b): (usize, usize)| (a + p * b) as u32;
    let mut s1: Vec<u32> = bous_pairs(p).into_iter().map(to_id).collect();
    let mut s2: Vec<u32> = bous_pairs_rev(p).into_iter().map(to_id).collect();
    if n >= 3 {
        // Lift the second cycle through the Hamiltonian path between
        // (p-1, p-1) and (p-1, 0), so the layer-joining columns of the two
        // lifts are disjoint at every level.
        let start = s2
            .iter()
            .position(|&v| v == to_id((p - 1, p - 1)))
            .expect("reversed boustrophedon visits every vertex");
        s2.rotate_left(start);
        debug_assert_eq!(*s2.last().unwrap(), to_id((p - 1, 0)));
    }
    for k in 2..n {
        let stride = (p as u32).pow(k as u32);
        s1 = lift_once(&s1, stride, p);
        s2 = lift_once(&s2, stride, p);
    }
    Ok((
        torus_walk_to_walkspec(&s1, hc, p, n),
        torus_walk_to_walkspec(&s2, hc, p, n),
    ))
}

// ---------------------------------------------------------------------------
// Strengthened pair: pointwise dimension-disjoint Hamiltonian cycles
// ---------------------------------------------------------------------------

/// Two edge-disjoint Hamiltonian cycles of the n-dimensional torus Z_p^n
/// (p even ≥ 4, n ≥ 4) such that at **every** vertex the two dimensions used
/// by the first cycle and the two used by the second are four distinct
/// values.  This is the property needed to pick four distinct contact
/// vertices per Kₙ fiber; the plain boustrophedon pair does not have it
/// (both of its cycles pass through almost every vertex in dimensions 1
/// and 2).
///
/// Base case n = 4: view Z_p^4 as T × T with T = Z_p², and let A (the
/// boustrophedon) and B (its reversed-move companion) be the two
/// edge-disjoint Hamiltonian cycles of T.  The first cycle is the
/// boustrophedon over the p²×p² position torus of (A on coordinates 1-2,
/// B on coordinates 3-4); the second over (B on coordinates 1-2, A shifted
/// by one position on coordinates 3-4).  Positions along A and B have the
/// same parity as the coordinate sum, and the one-step shift of the second
/// factor puts the two cycles in opposite parity classes, so the dimension
/// each cycle uses at a vertex differs within both coordinate groups at
/// every vertex, including the stitch columns (both patterns flip on the
/// same column because A and the unshifted B share their start vertex).
///
/// Induction n → n+1: lift each cycle by removing one edge and stacking the
/// resulting path through p layers.  The removed edges are chosen with four
/// distinct endpoints, so at the layer-joining columns one cycle uses a
/// fresh dimension plus one of its old dimensions while the other keeps
/// both old dimensions; disjointness is inherited.
fn strong_pair(p: usize, n: usize) -> Result<(Vec<u32>, Vec<u32>)> {
    debug_assert!(p >= 4 && p % 2 == 0 && n >= 4);
    pow_checked(p, n)?;
    let m = p * p;
    let lo = |(a, b): (usize, usize)| (a + p * b) as u32;
    let a_lo: Vec<u32> = bous_pairs(p).into_iter().map(lo).collect();
    let b_lo: Vec<u32> = bous_pairs_rev(p).into_iter().map(lo).collect();
    let a_hi: Vec<u32> = a_lo.iter().map(|&v| v * m as u32).collect();
    let b_hi: Vec<u32> = b_lo.iter().map(|&v| v * m as u32).collect();
    let a_hi_shift: Vec<u32> = (0..m).map(|i| a_hi[(i + 1) % m]).collect();
    let pattern = bous_pairs(m);
    let mut s1: Vec<u32> = pattern.iter().map(|&(s, t)| a_lo[s] + b_hi[t]).collect();
    let mut s2: Vec<u32> = pattern
        .iter()
        .map(|&(s, t)| b_lo[s] + a_hi_shift[t])
        .collect();
    if n > 4 {
        let avoid = [s1[0], *s1.last().unwrap()];
        rotate_avoiding(&mut s2, avoid);
    }
    for k in 4..n {
        let stride = (p as u32).pow(k as u32);
        s1 = lift_once(&s1, stride, p);
        s2 = lift_once(&s2, stride, p);
    }
    check_strong_pair(&s1, &s2, p, n);
    Ok((s1, s2))
}

/// For each torus vertex, the dimensions of the incoming and outgoing cycle
/// edges, indexed by torus id.
fn inout_dims(seq: &[u32], p: usize, n: usize) -> (Vec<u8>, Vec<u8>) {
    let l = seq.len();
    let mut din = vec![u8::MAX; l];
    let mut dout = vec![u8::MAX; l];
    for k in 0..l {
        let d = diff_digit(seq[k], seq[(k + 1) % l], p, n) as u8;
        dout[seq[k] as usize] = d;
        din[seq[(k + 1) % l] as usize] = d;
    }
    (din, dout)
}

/// Asserts the invariants of [`strong_pair`]: both sequences are Hamiltonian
/// cycles of the torus moving ±1 in one coordinate per step, their edge sets
/// are disjoint, and at every vertex the four incident cycle-edge dimensions
/// are distinct.
fn check_strong_pair(s1: &[u32], s2: &[u32], p: usize, n: usize) {
    let total = s1.len();
    assert_eq!(s2.len(), total);
    for seq in [s1, s2] {
        let mut seen = vec![false; total];
        for (k, &v) in seq.iter().enumerate() {
            assert!(!seen[v as usize], "cycle repeats a vertex");
            seen[v as usize] = true;
            let w = seq[(k + 1) % total];
            let d = diff_digit(v, w, p, n);
            let pu = p as u32;
            let stride = pu.pow(d as u32);
            let (dv, dw) = (v / stride % pu, w / stride % pu);
            assert!(
                (dv + 1) % pu == dw || (dw + 1) % pu == dv,
                "cycle step is not a unit torus move"
            );
        }
    }
    let mut edges: HashSet<(u32, u32)> = HashSet::with_capacity(2 * total);
    for seq in [s1, s2] {
        for k in 0..total {
            let (a, b) = (seq[k], seq[(k + 1) % total]);
            let e = (a.min(b), a.max(b));
            assert!(edges.insert(e), "cycles share an edge");
        }
    }
    let (in1, out1) = inout_dims(s1, p, n);
    let (in2, out2) = inout_dims(s2, p, n);
    for u in 0..total {
        let ds = [in1[u], out1[u], in2[u], out2[u]];
        for i in 0..4 {
            for j in i + 1..4 {
                assert!(
                    ds[i] != ds[j],
                    "contact dimensions collide at torus vertex {u}: {ds:?}"
                );
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Lifting through a Hamiltonian-connected exponent
// ---------------------------------------------------------------------------

/// Hamiltonian cycle of G^H from a dimension-alternating Hamiltonian cycle of
/// G^[q] (q = |V(H)|): each fiber H_u is entered and left through G-edges of
/// two distinct dimensions, and a Hamiltonian path of H between those two
/// exponent vertices is spliced in.  The required paths are found by bounded
/// exact search (at most q² endpoint pairs, cached); if H has no Hamiltonian
/// path between some required pair, or is too large to search, an error is
/// returned.
pub fn lift_ham_cycle(space: &ExpoSpace, cp_cycle: &WalkSpec) -> Result<HamCycleCert> {
    let p = space.p();
    let q = space.q();
    if q < 2 {
        return Err(Error::Precondition(
            "exponent must have at least 2 vertices to alternate dimensions".into(),
        ));
    }
    let tuples = pow_checked(p, q)?;
    Budget::default().check_vertices("lifted Hamiltonian cycle", (tuples as u128) * q as u128)?;
    if !cp_cycle.closed {
        return Err(Error::MalformedCertificate(
            "product cycle must be closed".into(),
        ));
    }
    if cp_cycle.len() != tuples || !cp_cycle.is_path() {
        return Err(Error::Precondition(format!(
            "product cycle must visit all {tuples} tuples exactly once"
        )));
    }
    let g = space.base();
    let verts = &cp_cycle.vertices[..tuples];
    // Per-step dimension, checking each step is a one-digit move along a
    // base-graph edge.
    let mut dims = Vec::with_capacity(tuples);
    for k in 0..tuples {
        let (a, b) = (verts[k], verts[(k + 1) % tuples]);
        let (mut x, mut y) = (a, b);
        let mut dim = usize::MAX;
        for i in 0..q {
            let (dx, dy) = (x % p, y % p);
            if dx != dy {
                if dim != usize::MAX || !g.has_edge(dx, dy) {
                    return Err(Error::Precondition(format!(
                        "step {a}-{b} is not a single base-edge move"
                    )));
                }
                dim = i;
            }
            x /= p;
            y /= p;
        }
        if dim == usize::MAX {
            return Err(Error::Precondition(format!("step {a}-{a} repeats a tuple")));
        }
        dims.push(dim);
    }
    let h = space.exponent();
    let mut cache: HashMap<(usize, usize), Vec<usize>> = HashMap::new();
    let mut out_verts = Vec::with_capacity(tuples * q + 1);
    let mut out_kinds = Vec::with_capacity(tuples * q);
    for k in 0..tuples {
        let u = verts[k];
        let din = dims[(k + tuples - 1) % tuples];
        let dout = dims[k];
        if din == dout {
            return Err(Error::Precondition(format!(
                "product cycle uses dimension {din} twice in a row at tuple {u}"
            )));
        }
        let path = match cache.get(&(din, dout)) {
            Some(p) => p,
            None => {
                let found = ham_search::hamiltonian_path_between_limited(h, din, dout, LIFT_PATH_LIMIT)?
                    .ok_or_else(|| {
                        Error::Precondition(format!(
                            "exponent has no Hamiltonian path between {din} and {dout}"
                        ))
                    })?;
                cache.entry((din, dout)).or_insert(found)
            }
        };
        for (i, &w) in path.iter().enumerate() {
            out_verts.push(u * q + w);
            out_kinds.push(if i < q - 1 {
                StepKind::HEdge
            } else {
                StepKind::GEdge { dim: dout }
            });
        }
    }
    out_verts.push(out_verts[0]);
    Ok(HamCycleCert {
        host: expo_host_string(p, q),
        order: tuples * q,
        cycle: WalkSpec::closed(out_verts, out_kinds),
    })
}

// ---------------------------------------------------------------------------
// Edge-disjoint Hamiltonian cycles and CISTs in G^{Kₙ}
// ---------------------------------------------------------------------------

/// The zigzag Hamiltonian path (0, 1, n-1, 2, n-2, …, ⌈n/2⌉) of Kₙ.  It uses
/// each circular difference class exactly once, so it and its rotation by one
/// are edge-disjoint.
fn zigzag_path(n: usize) -> Vec<usize> {
    let mut out = Vec::with_capacity(n);
    out.push(0);
    let (mut lo, mut hi) = (1usize, n - 1);
    let mut take_lo = true;
    while out.len() < n {
        if take_lo {
            out.push(lo);
            lo += 1;
        } else {
            out.push(hi);
            hi -= 1;
        }
        take_lo = !take_lo;
    }
    out
}

fn path_edge_set(path: &[usize]) -> HashSet<(usize, usize)> {
    path.windows(2)
        .map(|w| (w[0].min(w[1]), w[0].max(w[1])))
        .collect()
}

/// Relabeling of Kₙ mapping the canonical endpoint pairs of the two zigzag
/// paths onto the four contact vertices: 0 ↦ x₁, ⌈n/2⌉ ↦ y₁, 1 ↦ x₂,
/// ⌈n/2⌉+1 ↦ y₂, remaining vertices in ascending order.
fn contact_perm(n: usize, x1: usize, y1: usize, x2: usize, y2: usize) -> Vec<usize> {
    let c1 = n.div_ceil(2);
    let mut perm = vec![usize::MAX; n];
    perm[0] = x1;
    perm[c1] = y1;
    perm[1] = x2;
    perm[c1 + 1] = y2;
    let mut used = vec![false; n];
    for &t in &[x1, y1, x2, y2] {
        used[t] = true;
    }
    let mut next = 0usize;
    for slot in perm.iter_mut() {
        if *slot == usize::MAX {
            while used[next] {
                next += 1;
            }
            *slot = next;
            used[next] = true;
        }
    }
    perm
}

struct GknScaffold {
    p: usize,
    n: usize,
    total: usize,
    s1: Vec<u32>,
    s2: Vec<u32>,
    in1: Vec<u8>,
    out1: Vec<u8>,
    in2: Vec<u8>,
    out2: Vec<u8>,
    /// Torus id → cartesian-power id with actual base-graph digits.
    cart: Vec<usize>,
    path1: Vec<usize>,
    path2: Vec<usize>,
}

fn gkn_scaffold(g: &Graph, hc: &[usize], n: usize) -> Result<GknScaffold> {
    check_ham_cycle_of(g, hc)?;
    let p = g.order();
    require_even_order(p)?;
    if p < 4 {
        return Err(Error::Precondition(format!(
            "construction requires base order at least 4, got {p}"
        )));
    }
    if n < 4 {
        return Err(Error::InvalidParameter(format!(
            "exponent clique must have at least 4 vertices, got {n}"
        )));
    }
    let total = pow_checked(p, n)?;
    Budget::default().check_vertices("G^Kn construction", total as u128 * n as u128)?;
    let (s1, s2) = strong_pair(p, n)?;
    let (in1, out1) = inout_dims(&s1, p, n);
    let (in2, out2) = inout_dims(&s2, p, n);
    let mut cart = vec![0usize; total];
    for (u, slot) in cart.iter_mut().enumerate() {
        let mut v = u;
        let mut id = 0usize;
        let mut stride = 1usize;
        for _ in 0..n {
            id += hc[v % p] * stride;
            v /= p;
            stride *= p;
        }
        *slot = id;
    }
    let path1 = zigzag_path(n);
    let path2: Vec<usize> = path1.iter().map(|&v| (v + 1) % n).collect();
    assert!(
        path_edge_set(&path1).is_disjoint(&path_edge_set(&path2)),
        "zigzag paths must be edge-disjoint"
    );
    Ok(GknScaffold {
        p,
        n,
        total,
        s1,
        s2,
        in1,
        out1,
        in2,
        out2,
        cart,
        path1,
        path2,
    })
}

impl GknScaffold {
    fn perm_at(&self, u: usize) -> Vec<usize> {
        contact_perm(
            self.n,
            self.in1[u] as usize,
            self.out1[u] as usize,
            self.in2[u] as usize,
            self.out2[u] as usize,
        )
    }

    /// Assembles one G^{Kₙ} Hamiltonian cycle: follow the torus cycle and
    /// splice the relabeled zigzag path through each clique fiber.
    fn assemble_cycle(&self, which: usize) -> WalkSpec {
        let (seq, path) = if which == 1 {
            (&self.s1, &self.path1)
        } else {
            (&self.s2, &self.path2)
        };
        let n = self.n;
        let mut verts = Vec::with_capacity(self.total * n + 1);
        let mut kinds = Vec::with_capacity(self.total * n);
        for k in 0..self.total {
            let u = seq[k] as usize;
            let perm = self.perm_at(u);
            let dout = if which == 1 { self.out1[u] } else { self.out2[u] } as usize;
            for (i, &s) in path.iter().enumerate() {
                verts.push(self.cart[u] * n + perm[s]);
                kinds.push(if i < n - 1 {
                    StepKind::HEdge
                } else {
                    StepKind::GEdge { dim: dout }
                });
            }
        }
        verts.push(verts[0]);
        WalkSpec::closed(verts, kinds)
    }
}

/// Two edge-disjoint Hamiltonian cycles of G^{Kₙ} (p even ≥ 4, n ≥ 4),
/// built from the strengthened cycle pair on G^[n] and the two edge-disjoint
/// zigzag Hamiltonian paths of Kₙ, relabeled per clique fiber to join the
/// four distinct contact vertices.  Disjointness of the relabeled path pair
/// and of the contact dimensions is asserted, not assumed.
pub fn edhc_gkn(g: &Graph, hc: &[usize], n: usize) -> Result<(HamCycleCert, HamCycleCert)> {
    let sc = gkn_scaffold(g, hc, n)?;
    let host = expo_host_string(sc.p, n);
    let order = sc.total * n;
    let c1 = HamCycleCert {
        host: host.clone(),
        order,
        cycle: sc.assemble_cycle(1),
    };
    let c2 = HamCycleCert {
        host,
        order,
        cycle: sc.assemble_cycle(2),
    };
    Ok((c1, c2))
}

/// Two completely independent spanning trees of G^{Kₙ} (p even ≥ 4, n ≥ 4):
/// per clique fiber, one tree stars at the first cycle's in-contact x₁ plus
/// {x₁y₁, x₁x₂, y₁y₂} and the other stars at x₂ plus {x₂y₂, x₂y₁, y₂x₁};
/// globally each tree adds the G-edges of its torus cycle minus the edge of
/// the traversal-first fiber.
pub fn cist_gkn(g: &Graph, hc: &[usize], n: usize) -> Result<CistPair> {
    let sc = gkn_scaffold(g, hc, n)?;
    let fv = |u: usize, d: usize| sc.cart[u] * n + d;
    let mut t1: Vec<[usize; 2]> = Vec::with_capacity(sc.total * n - 1);
    let mut t2: Vec<[usize; 2]> = Vec::with_capacity(sc.total * n - 1);
    for u in 0..sc.total {
        let perm = sc.perm_at(u);
        let (x1, y1) = (sc.in1[u] as usize, sc.out1[u] as usize);
        let (x2, y2) = (sc.in2[u] as usize, sc.out2[u] as usize);
        let c1 = n.div_ceil(2);
        for (s, &z) in perm.iter().enumerate() {
            // Interior vertices are the images of the non-endpoint slots.
            if s == 0 || s == 1 || s == c1 || s == c1 + 1 {
                continue;
            }
            t1.push([fv(u, x1), fv(u, z)]);
            t2.push([fv(u, x2), fv(u, z)]);
        }
        t1.push([fv(u, x1), fv(u, y1)]);
        t1.push([fv(u, x1), fv(u, x2)]);
        t1.push([fv(u, y1), fv(u, y2)]);
        t2.push([fv(u, x2), fv(u, y2)]);
        t2.push([fv(u, x2), fv(u, y1)]);
        t2.push([fv(u, y2), fv(u, x1)]);
    }
    for (seq, out, tree) in [(&sc.s1, &sc.out1, &mut t1), (&sc.s2, &sc.out2, &mut t2)] {
        // Skip the first traversal edge of each cycle so the G-edges form a
        // spanning path over the fibers instead of a cycle.
        for k in 1..sc.total {
            let u = seq[k] as usize;
            let v = seq[(k + 1) % sc.total] as usize;
            let d = out[u] as usize;
            tree.push([fv(u, d), fv(v, d)]);
        }
    }
    Ok(CistPair {
        host: expo_host_string(sc.p, n),
        order: sc.total * n,
        t1,
        t2,
    })
}

// ---------------------------------------------------------------------------
// Verifiers
// ---------------------------------------------------------------------------

/// Verifies a Hamiltonian cycle certificate against a host oracle.
///
/// Structural problems (open walk, wrong kinds length, out-of-range vertices,
/// non-adjacent steps) are reported as [`Error::MalformedCertificate`]-style
/// errors; a well-formed closed walk that fails to visit every host vertex
/// exactly once yields `Ok(false)`.
pub fn verify_ham_cycle<H: Host>(host: &H, cert: &HamCycleCert) -> Result<bool> {
    if !cert.cycle.closed {
        return Err(Error::MalformedCertificate(
            "Hamiltonian cycle certificate must be a closed walk".into(),
        ));
    }
    cert.cycle.validate_walk(host)?;
    Ok(cert.cycle.len() == host.host_order() && cert.cycle.is_path())
}

fn cycle_edge_set(cert: &HamCycleCert) -> Result<HashSet<(usize, usize)>> {
    if cert.cycle.vertices.len() < 2 || cert.cycle.kinds.len() + 1 != cert.cycle.vertices.len() {
        return Err(Error::MalformedCertificate(
            "walk must have one step annotation per edge".into(),
        ));
    }
    Ok(cert
        .cycle
        .vertices
        .windows(2)
        .map(|w| (w[0].min(w[1]), w[0].max(w[1])))
        .collect())
}

/// True when the two certificates' cycles share no edge.
pub fn verify_edge_disjoint(a: &HamCycleCert, b: &HamCycleCert) -> Result<bool> {
    let ea = cycle_edge_set(a)?;
    let eb = cycle_edge_set(b)?;
    Ok(ea.is_disjoint(&eb))
}

fn tree_adjacency(n: usize, edges: &[[usize; 2]]) -> Vec<Vec<usize>> {
    let mut adj = vec![Vec::new(); n];
    for e in edges {
        adj[e[0]].push(e[1]);
        adj[e[1]].push(e[0]);
    }
    adj
}

/// The unique tree path from `u` to `v` (inclusive), via BFS.
fn tree_path(adj: &[Vec<usize>], u: usize, v: usize) -> Vec<usize> {
    let mut parent = vec![usize::MAX; adj.len()];
    let mut queue = VecDeque::new();
    parent[u] = u;
    queue.push_back(u);
    while let Some(x) = queue.pop_front() {
        if x == v {
            break;
        }
        for &y in &adj[x] {
            if parent[y] == usize::MAX {
                parent[y] = x;
                queue.push_back(y);
            }
        }
    }
    let mut path = vec![v];
    let mut cur = v;
    while cur != u {
        cur = parent[cur];
        path.push(cur);
    }
    path.reverse();
    path
}

fn paths_independent(p1: &[usize], p2: &[usize]) -> bool {
    let (u, v) = (p1[0], *p1.last().unwrap());
    let inner1: HashSet<usize> = p1.iter().copied().filter(|&x| x != u && x != v).collect();
    if p2
        .iter()
        .any(|&x| x != u && x != v && inner1.contains(&x))
    {
        return false;
    }
    let e1: HashSet<(usize, usize)> = p1
        .windows(2)
        .map(|w| (w[0].min(w[1]), w[0].max(w[1])))
        .collect();
    !p2.windows(2)
        .any(|w| e1.contains(&(w[0].min(w[1]), w[0].max(w[1]))))
}

/// Verifies a completely-independent-spanning-tree pair against a host:
/// both edge sets are spanning trees of the host, edge-disjoint, no vertex
/// has degree > 1 in both, and tree paths between vertex pairs are internally
/// disjoint (checked exhaustively on hosts of order ≤ 200, otherwise on 50
/// deterministically sampled pairs).
pub fn verify_cist<H: Host>(host: &H, pair: &CistPair) -> Result<bool> {
    verify_cist_seeded(host, pair, CIST_SAMPLE_SEED)
}

/// [`verify_cist`] with an explicit seed for the sampled path-independence
/// checks on large hosts.
pub fn verify_cist_seeded<H: Host>(host: &H, pair: &CistPair, seed: u64) -> Result<bool> {
    let n = host.host_order();
    for edges in [&pair.t1, &pair.t2] {
        for e in edges.iter() {
            for &v in e {
                if v >= n {
                    return Err(Error::InvalidVertex(v, n));
                }
            }
            if e[0] == e[1] || !host.host_adjacent(e[0], e[1]) {
                return Err(Error::MalformedCertificate(format!(
                    "{}-{} is not a host edge",
                    e[0], e[1]
                )));
            }
        }
    }
    // Spanning-tree check: n-1 edges, connected, no repeats.
    let mut adjs = Vec::new();
    for edges in [&pair.t1, &pair.t2] {
        if edges.len() != n.saturating_sub(1) {
            return Ok(false);
        }
        let set: HashSet<(usize, usize)> = edges
            .iter()
            .map(|e| (e[0].min(e[1]), e[0].max(e[1])))
            .collect();
        if set.len() != edges.len() {
            return Ok(false);
        }
        let adj = tree_adjacency(n, edges);
        let mut seen = vec![false; n];
        let mut queue = VecDeque::from([0usize]);
        seen[0] = true;
        let mut count = 1;
        while let Some(x) = queue.pop_front() {
            for &y in &adj[x] {
                if !seen[y] {
                    seen[y] = true;
                    count += 1;
                    queue.push_back(y);
                }
            }
        }
        if count != n {
            return Ok(false);
        }
        adjs.push(adj);
    }
    // Edge-disjointness.
    let s1: HashSet<(usize, usize)> = pair
        .t1
        .iter()
        .map(|e| (e[0].min(e[1]), e[0].max(e[1])))
        .collect();
    if pair
        .t2
        .iter()
        .any(|e| s1.contains(&(e[0].min(e[1]), e[0].max(e[1]))))
    {
        return Ok(false);
    }
    // Degree characterization: at most one tree branches at any vertex.
    for v in 0..n {
        if adjs[0][v].len() > 1 && adjs[1][v].len() > 1 {
            return Ok(false);
        }
    }
    // Literal path independence.
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    if n <= CIST_EXHAUSTIVE_LIMIT {
        for u in 0..n {
            for v in u + 1..n {
                pairs.push((u, v));
            }
        }
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        while pairs.len() < CIST_SAMPLE_PAIRS {
            let u = rng.gen_range(0..n);
            let v = rng.gen_range(0..n);
            if u != v {
                pairs.push((u.min(v), u.max(v)));
            }
        }
    }
    for (u, v) in pairs {
        let p1 = tree_path(&adjs[0], u, v);
        let p2 = tree_path(&adjs[1], u, v);
        if !paths_independent(&p1, &p2) {
            return Ok(false);
        }
    }
    Ok(true)
}
