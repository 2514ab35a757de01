//! Brute-force Hamiltonian cycle/path search for small graphs.
//!
//! Backtracking over adjacency bitsets with the first vertex anchored.
//! Intended for hosts up to [`DEFAULT_BRUTE_LIMIT`] vertices; larger inputs
//! error with [`Error::LimitExceeded`] so callers can skip rather than hang.

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const DEFAULT_BRUTE_LIMIT: usize = 14;

fn bitsets(g: &Graph) -> Vec<u64> {
    g.vertices()
        .map(|u| {
            g.neighbors(u)
                .iter()
                .fold(0u64, |acc, &v| acc | (1u64 << v))
        })
        .collect()
}

fn check_limit(g: &Graph, what: &'static str, limit: usize) -> Result<()> {
    if g.order() > limit.min(63) {
        return Err(Error::LimitExceeded {
            what,
            size: g.order(),
            limit,
        });
    }
    Ok(())
}

fn extend_path(
    adj: &[u64],
    path: &mut Vec<usize>,
    visited: u64,
    full: u64,
    target: Option<usize>,
) -> bool {
    let last = *path.last().unwrap();
    if visited == full {
        return match target {
            Some(t) => last == t,
            None => adj[last] & 1 != 0, // close the cycle back to vertex 0
        };
    }
    // cheap prune: any unvisited vertex with no unvisited neighbor (and not
    // the current endpoint/target) makes completion impossible
    let mut rest = full & !visited;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        let free = adj[v] & !visited;
        if free == 0 && adj[v] & (1 << last) == 0 {
            return false;
        }
    }
    let mut cand = adj[last] & !visited;
    while cand != 0 {
        let v = cand.trailing_zeros() as usize;
        cand &= cand - 1;
        if let Some(t) = target {
            // keep the target for last
            if v == t && visited | (1 << v) != full {
                continue;
            }
        }
        path.push(v);
        if extend_path(adj, path, visited | (1 << v), full, target) {
            return true;
        }
        path.pop();
    }
    false
}

/// A Hamiltonian cycle as a closed vertex sequence (first vertex repeated at
/// the end), or `None`.
pub fn hamiltonian_cycle_limited(g: &Graph, limit: usize) -> Result<Option<Vec<usize>>> {
    check_limit(g, "hamiltonian cycle search", limit)?;
    let n = g.order();
    if n < 3 {
        return Ok(None);
    }
    let adj = bitsets(g);
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut path = vec![0usize];
    if extend_path(&adj, &mut path, 1, full, None) {
        path.push(0);
        Ok(Some(path))
    } else {
        Ok(None)
    }
}

pub fn hamiltonian_cycle(g: &Graph) -> Result<Option<Vec<usize>>> {
    hamiltonian_cycle_limited(g, DEFAULT_BRUTE_LIMIT)
}

/// A Hamiltonian path from `u` to `v`, or `None`.
pub fn hamiltonian_path_between(g: &Graph, u: usize, v: usize) -> Result<Option<Vec<usize>>> {
    hamiltonian_path_between_limited(g, u, v, DEFAULT_BRUTE_LIMIT)
}

pub fn hamiltonian_path_between_limited(
    g: &Graph,
    u: usize,
    v: usize,
    limit: usize,
) -> Result<Option<Vec<usize>>> {
    check_limit(g, "hamiltonian path search", limit)?;
    let n = g.order();
    if u >= n {
        return Err(Error::InvalidVertex(u, n));
    }
    if v >= n {
        return Err(Error::InvalidVertex(v, n));
    }
    if u == v {
        return Ok((n == 1).then(|| vec![u]));
    }
    let adj = bitsets(g);
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut path = vec![u];
    if extend_path(&adj, &mut path, 1 << u, full, Some(v)) {
        Ok(Some(path))
    } else {
        Ok(None)
    }
}

pub fn is_hamiltonian(g: &Graph) -> Result<bool> {
    is_hamiltonian_limited(g, DEFAULT_BRUTE_LIMIT)
}

pub fn is_hamiltonian_limited(g: &Graph, limit: usize) -> Result<bool> {
    Ok(hamiltonian_cycle_limited(g, limit)?.is_some())
}

/// Hamiltonian-connected: a Hamiltonian path between every unordered pair.
pub fn is_hamiltonian_connected(g: &Graph) -> Result<bool> {
    is_hamiltonian_connected_limited(g, DEFAULT_BRUTE_LIMIT)
}

pub fn is_hamiltonian_connected_limited(g: &Graph, limit: usize) -> Result<bool> {
    check_limit(g, "hamiltonian connectivity check", limit)?;
    let n = g.order();
    if n == 1 {
        return Ok(true);
    }
    for u in 0..n {
        for v in u + 1..n {
            if hamiltonian_path_between_limited(g, u, v, limit)?.is_none() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
