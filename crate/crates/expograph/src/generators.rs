//! Canonical constructions of the base/exponent families: complete graphs,
//! cycles, paths, hypercubes, de Bruijn and Kautz networks, Möbius cubes,
//! and the DCell order recurrence used for comparison tables.
//!
//! Tuple-valued vertices are mapped to dense ids in lexicographic order so
//! edge lists are reproducible byte-for-byte.

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};
use crate::graph::Graph;

pub fn complete(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(Error::InvalidParameter("complete graph needs n >= 1".into()));
    }
    let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
    Graph::from_edges(n, edges)
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidParameter("cycle needs n >= 3".into()));
    }
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
}

pub fn path(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(Error::InvalidParameter("path needs n >= 1".into()));
    }
    Graph::from_edges(n, (0..n.saturating_sub(1)).map(|i| (i, i + 1)))
}

/// Hypercube Q_k: vertices are k-bit strings, edges at Hamming distance 1.
pub fn hypercube(k: usize) -> Result<Graph> {
    if k < 1 || k > 24 {
        return Err(Error::InvalidParameter("hypercube needs 1 <= k <= 24".into()));
    }
    let n = 1usize << k;
    let edges = (0..n).flat_map(|u| (0..k).map(move |b| (u, u ^ (1 << b))).filter(move |&(u, v)| u < v));
    let labels = (0..n).map(|v| format!("{v:0k$b}")).collect();
    Ok(Graph::from_edges(n, edges)?.with_labels(labels))
}

fn tuple_label(t: &[usize]) -> String {
    let parts: Vec<String> = t.iter().map(|d| d.to_string()).collect();
    format!("({})", parts.join(","))
}

/// De Bruijn network B(d,k) as a simple undirected graph: vertices are
/// k-tuples over {0..d-1}, (v1..vk) adjacent to (v2..vk,a) with loops
/// discarded and parallel shift-edges merged.
pub fn de_bruijn(d: usize, k: usize) -> Result<Graph> {
    if d < 2 || k < 1 {
        return Err(Error::InvalidParameter("de Bruijn needs d >= 2, k >= 1".into()));
    }
    let n = d.checked_pow(k as u32).ok_or_else(|| {
        Error::InvalidParameter("de Bruijn order overflows".into())
    })?;
    // tuple (v1,...,vk) read as a base-d number with v1 most significant
    let mut edges = Vec::new();
    for u in 0..n {
        for a in 0..d {
            let v = (u % (n / d)) * d + a; // left shift, append a
            if u != v {
                edges.push((u.min(v), u.max(v)));
            }
        }
    }
    let labels = (0..n)
        .map(|mut v| {
            let mut t = vec![0usize; k];
            for i in (0..k).rev() {
                t[i] = v % d;
                v /= d;
            }
            tuple_label(&t)
        })
        .collect();
    Ok(Graph::from_edges(n, edges)?.with_labels(labels))
}

/// Kautz network K(d,k): k-tuples over {0..d} with no two consecutive
/// symbols equal, adjacency by shifting.
pub fn kautz(d: usize, k: usize) -> Result<Graph> {
    if d < 2 || k < 1 {
        return Err(Error::InvalidParameter("Kautz needs d >= 2, k >= 1".into()));
    }
    // enumerate legal tuples in lexicographic order
    let mut tuples: Vec<Vec<usize>> = vec![vec![]];
    for _ in 0..k {
        let mut next = Vec::new();
        for t in &tuples {
            for s in 0..=d {
                if t.last() != Some(&s) {
                    let mut t2 = t.clone();
                    t2.push(s);
                    next.push(t2);
                }
            }
        }
        tuples = next;
    }
    let index: std::collections::HashMap<&[usize], usize> = tuples
        .iter()
        .enumerate()
        .map(|(i, t)| (t.as_slice(), i))
        .collect();
    let mut edges = Vec::new();
    for (u, t) in tuples.iter().enumerate() {
        for a in 0..=d {
            if t[k - 1] == a {
                continue;
            }
            let mut shifted: Vec<usize> = t[1..].to_vec();
            shifted.push(a);
            let v = index[shifted.as_slice()];
            if u != v {
                edges.push((u.min(v), u.max(v)));
            }
        }
    }
    let labels = tuples.iter().map(|t| tuple_label(t)).collect();
    Ok(Graph::from_edges(tuples.len(), edges)?.with_labels(labels))
}

/// 0-type Möbius cube MQ_k on k-bit strings x_1..x_k (x_1 most significant).
/// Neighbor i flips bit i when x_{i-1} = 0 (with x_0 taken as 0) and flips
/// bits i..k when x_{i-1} = 1.
pub fn mobius_cube(k: usize) -> Result<Graph> {
    if k < 1 || k > 24 {
        return Err(Error::InvalidParameter("Möbius cube needs 1 <= k <= 24".into()));
    }
    let n = 1usize << k;
    let bit = |v: usize, i: usize| (v >> (k - i)) & 1; // x_i, 1-based from MSB
    let mut edges = Vec::new();
    for u in 0..n {
        for i in 1..=k {
            let prev = if i == 1 { 0 } else { bit(u, i - 1) };
            let v = if prev == 0 {
                u ^ (1 << (k - i))
            } else {
                // flip bits i..k: a suffix mask of length k-i+1
                u ^ ((1 << (k - i + 1)) - 1)
            };
            if u < v {
                edges.push((u, v));
            } else {
                edges.push((v, u));
            }
        }
    }
    let labels = (0..n).map(|v| format!("{v:0k$b}")).collect();
    Ok(Graph::from_edges(n, edges)?.with_labels(labels))
}

/// DCell order recurrence: t_{0,n} = n, t_{k,n} = t_{k-1,n}(t_{k-1,n}+1).
pub fn dcell_order(k: usize, n: usize) -> Result<BigUint> {
    if n < 2 {
        return Err(Error::InvalidParameter("DCell needs n >= 2".into()));
    }
    let mut t = BigUint::from(n);
    for _ in 0..k {
        let t1 = &t + BigUint::one();
        t *= t1;
    }
    Ok(t)
}

/// Diameter bound for the DCell network: 2^{k+1} - 1.
pub fn dcell_diam_bound(k: usize) -> BigUint {
    (BigUint::one() << (k + 1)) - BigUint::one()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ham_search;

    fn degree_histogram(g: &Graph) -> std::collections::BTreeMap<usize, usize> {
        let mut h = std::collections::BTreeMap::new();
        for v in g.vertices() {
            *h.entry(g.degree(v)).or_insert(0) += 1;
        }
        h
    }

    #[test]
    fn basic_families() {
        let q3 = hypercube(3).unwrap();
        assert_eq!((q3.order(), q3.size()), (8, 12));
        assert_eq!((q3.min_degree(), q3.max_degree()), (3, 3));
        let k1 = complete(1).unwrap();
        assert_eq!((k1.order(), k1.size()), (1, 0));
    }

    #[test]
    fn de_bruijn_2_3() {
        let b = de_bruijn(2, 3).unwrap();
        assert_eq!(b.order(), 8);
        assert_eq!(b.diameter().unwrap(), 3);
        // constant tuples (0,0,0) and (1,1,1) have degree 2d-2 = 2
        assert_eq!(b.degree(0), 2);
        assert_eq!(b.degree(7), 2);
        assert_eq!(b.label(0), Some("(0,0,0)"));
    }

    #[test]
    fn de_bruijn_3_2() {
        let b = de_bruijn(3, 2).unwrap();
        assert_eq!(b.order(), 9);
        // for 2-tuples the in/out shift neighbors of (v1,v2) always share
        // (v2,v1), so the maximum degree is 2d-1 rather than 2d
        assert_eq!(b.max_degree(), 5);
    }

    #[test]
    fn de_bruijn_degree_formulas() {
        for d in 2..=4usize {
            for k in 1..=4usize {
                if d.pow(k as u32) > 4096 {
                    continue;
                }
                let b = de_bruijn(d, k).unwrap();
                b.validate().unwrap();
                assert_eq!(b.order(), d.pow(k as u32));
                let expected_max = match k {
                    1 => d - 1, // B(d,1) is K_d
                    2 => 2 * d - 1,
                    _ => 2 * d,
                };
                assert_eq!(b.max_degree(), expected_max, "B({d},{k}) max degree");
                if k > 1 {
                    assert_eq!(b.min_degree(), 2 * d - 2, "B({d},{k}) min degree");
                    assert_eq!(b.diameter().unwrap(), k, "B({d},{k}) diameter");
                    let constant_tuples =
                        b.vertices().filter(|&v| b.degree(v) == 2 * d - 2).count();
                    assert_eq!(constant_tuples, d, "B({d},{k}) constant tuples");
                }
            }
        }
    }

    #[test]
    fn kautz_basics() {
        let k = kautz(2, 3).unwrap();
        assert_eq!(k.order(), 12);
        assert_eq!(k.diameter().unwrap(), 3);
        let k21 = kautz(2, 1).unwrap();
        assert_eq!((k21.order(), k21.size()), (3, 3)); // K3
    }

    #[test]
    fn kautz_formulas() {
        for d in 2..=4usize {
            for k in 1..=4usize {
                let order = d.pow(k as u32) + d.pow(k as u32 - 1);
                if order > 4096 {
                    continue;
                }
                let g = kautz(d, k).unwrap();
                g.validate().unwrap();
                assert_eq!(g.order(), order, "K({d},{k}) order");
                if k > 1 {
                    assert_eq!(g.min_degree(), 2 * d - 1, "K({d},{k}) min degree");
                    let expected_max = if k == 2 { 2 * d - 1 } else { 2 * d };
                    assert_eq!(g.max_degree(), expected_max, "K({d},{k}) max degree");
                    assert_eq!(g.diameter().unwrap(), k, "K({d},{k}) diameter");
                }
            }
        }
    }

    #[test]
    fn mobius_cubes() {
        let m1 = mobius_cube(1).unwrap();
        assert_eq!((m1.order(), m1.size()), (2, 1)); // K2
        let m3 = mobius_cube(3).unwrap();
        assert_eq!(m3.order(), 8);
        assert_eq!((m3.min_degree(), m3.max_degree()), (3, 3));
        assert_eq!(m3.diameter().unwrap(), 2); // ceil((3+1)/2)
        assert!(ham_search::is_hamiltonian_connected(&m3).unwrap());
        let m4 = mobius_cube(4).unwrap();
        assert_eq!(m4.order(), 16);
        assert_eq!((m4.min_degree(), m4.max_degree()), (4, 4));
        assert_eq!(m4.diameter().unwrap(), 3);
        assert!(ham_search::is_hamiltonian_connected_limited(&m4, 16).unwrap());
    }

    #[test]
    fn de_bruijn_degree_classes() {
        let b = de_bruijn(3, 3).unwrap();
        let h = degree_histogram(&b);
        // d constant tuples of degree 2d-2, d(d-1) alternating tuples of 2d-1
        assert_eq!(h.get(&4), Some(&3));
        assert_eq!(h.get(&5), Some(&6));
    }

    #[test]
    fn dcell_recurrence() {
        assert_eq!(dcell_order(3, 2).unwrap(), BigUint::from(1806u32));
        assert_eq!(dcell_order(0, 4).unwrap(), BigUint::from(4u32));
        assert_eq!(
            dcell_order(5, 2).unwrap(),
            "10650056950806".parse::<BigUint>().unwrap()
        );
        assert_eq!(dcell_diam_bound(3), BigUint::from(15u32));
    }
}
