//! Iterated exponential families Ω(G,k) = Ω(G,k−1)^G and Ψ(G,k) = G^{Ψ(G,k−1)}.
//!
//! Instances are materialized while they fit the budget; past that the
//! recurrences keep running on big-integer (or, for Ψ, symbolic power-of-two)
//! order and diameter stats, so even Ψ₆ — whose order does not fit any
//! machine integer — gets an honest description.

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::expo::{Budget, ExpoSpace};
use crate::graph::Graph;
use crate::metrics;

/// Largest bit length kept as an exact big integer.
const EXACT_BITS: u64 = 1 << 20;

/// A possibly-astronomical positive integer: exact value when representable,
/// the exponent when the value is a power of two, and always a short display
/// form ("2048", "2^2059", "2^(2^2059+2059)", ...).
#[derive(Clone, Debug)]
pub struct BigOrder {
    pub exact: Option<BigUint>,
    /// exponent of 2 when the value is a known power of two
    pub log2: Option<BigUint>,
    pub display: String,
    pub log2_display: Option<String>,
}

impl Serialize for BigOrder {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("BigOrder", 4)?;
        s.serialize_field("exact", &self.exact.as_ref().map(|x| x.to_string()))?;
        s.serialize_field("log2", &self.log2.as_ref().map(|x| x.to_string()))?;
        s.serialize_field("display", &self.display)?;
        s.serialize_field("log2Display", &self.log2_display)?;
        s.end()
    }
}

/// Short rendering: plain decimal up to 64 bits, "2^a" for powers of two,
/// "2^a+r" for small offsets from a power of two, full decimal up to 1000
/// bits, magnitude estimate beyond.
fn render(x: &BigUint) -> String {
    if x.bits() <= 64 {
        return x.to_string();
    }
    let a = x.bits() - 1;
    let top = BigUint::one() << a;
    let rest = x - &top;
    if rest.bits() <= 64 {
        if rest.is_zero() {
            return format!("2^{a}");
        }
        return format!("2^{a}+{rest}");
    }
    if x.bits() <= 1000 {
        x.to_string()
    } else {
        format!("~2^{a}")
    }
}

fn log2_of(x: &BigUint) -> Option<u64> {
    (x.count_ones() == 1).then(|| x.trailing_zeros().unwrap())
}

impl BigOrder {
    pub fn from_exact(x: BigUint) -> BigOrder {
        let log2 = log2_of(&x).map(BigUint::from);
        BigOrder {
            display: render(&x),
            log2_display: log2.as_ref().map(render),
            exact: Some(x),
            log2,
        }
    }

    fn symbolic_pow2(log2: Option<BigUint>, log2_display: String) -> BigOrder {
        BigOrder {
            exact: None,
            display: if log2_display.chars().all(|c| c.is_ascii_digit()) {
                format!("2^{log2_display}")
            } else {
                format!("2^({log2_display})")
            },
            log2,
            log2_display: Some(log2_display),
        }
    }

    fn symbolic(display: String) -> BigOrder {
        BigOrder {
            exact: None,
            log2: None,
            display,
            log2_display: None,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct DiameterInfo {
    /// exact diameter when the recurrence stays exact
    pub exact: Option<BigOrder>,
    /// always-valid upper bound
    pub upper: BigOrder,
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct IteratedStats {
    pub k: usize,
    pub order: BigOrder,
    pub min_degree: usize,
    pub max_degree: usize,
    /// claimed connectivity k·δ(G)
    pub connectivity: usize,
    pub diameter: DiameterInfo,
}

pub struct IteratedResult {
    /// materialized graph, while within budget
    pub graph: Option<Graph>,
    /// codec chain of the expansion steps that were materialized
    pub spaces: Vec<ExpoSpace>,
    pub stats: IteratedStats,
}

/// diam*(G) when exactly computable, else the constructive bound 2|V|−2,
/// with an exactness flag.
fn diam_star_or_upper(g: &Graph) -> Result<(usize, bool)> {
    match metrics::ham_diameter(g) {
        Ok(d) => Ok((d, true)),
        Err(Error::LimitExceeded { .. }) => Ok((2 * g.order() - 2, false)),
        Err(e) => Err(e),
    }
}

pub fn omega(g: &Graph, k: usize) -> Result<IteratedResult> {
    omega_with_budget(g, k, &Budget::default())
}

/// Ω(G,k): order n^{(n^k−1)/(n−1)}, diameter via
/// diam(Ω_k) = diam(Ω_{k−1})·n + diam*(G).
pub fn omega_with_budget(g: &Graph, k: usize, budget: &Budget) -> Result<IteratedResult> {
    if k < 1 {
        return Err(Error::InvalidParameter("iteration depth k must be >= 1".into()));
    }
    if !g.is_connected() || g.order() < 2 {
        return Err(Error::Precondition(
            "iterated exponentials need a connected graph of order >= 2".into(),
        ));
    }
    let n = g.order();
    let big_n = BigUint::from(n);
    let (ds, ds_exact) = diam_star_or_upper(g)?;
    let diam_g = g.diameter()?;

    let mut cur: Option<Graph> = Some(g.clone());
    let mut spaces = Vec::new();
    // order exponent E_k in order = n^{E_k}; E_1 = 1, E_k = E_{k-1}·n + 1
    let mut exp = BigUint::one();
    let mut diam = BigUint::from(diam_g);
    for _ in 1..k {
        if let Some(prev) = cur.take() {
            match ExpoSpace::new(prev, g.clone()).and_then(|s| Ok((s.materialize(budget)?, s))) {
                Ok((graph, space)) => {
                    spaces.push(space);
                    cur = Some(graph);
                }
                Err(Error::BudgetExceeded { .. }) | Err(Error::InvalidParameter(_)) => {}
                Err(e) => return Err(e),
            }
        }
        exp = exp * &big_n + BigUint::one();
        diam = diam * &big_n + BigUint::from(ds);
    }
    let ceil_log2_n = 64 - ((n - 1) as u64).leading_zeros() as u64;
    let order = match u64::try_from(&exp) {
        Ok(e) if e.saturating_mul(ceil_log2_n) < EXACT_BITS => {
            BigOrder::from_exact(big_n.pow(e as u32))
        }
        _ => BigOrder::symbolic(format!("{n}^{}", render(&exp))),
    };
    let diam_big = BigOrder::from_exact(diam);
    Ok(IteratedResult {
        graph: cur,
        spaces,
        stats: IteratedStats {
            k,
            order,
            min_degree: k * g.min_degree(),
            max_degree: k * g.max_degree(),
            connectivity: k * g.min_degree(),
            diameter: DiameterInfo {
                exact: ds_exact.then(|| diam_big.clone()),
                upper: diam_big,
            },
        },
    })
}

pub fn psi(g: &Graph, k: usize) -> Result<IteratedResult> {
    psi_with_budget(g, k, &Budget::default())
}

/// Ψ(G,k): order n^{o_{k−1}}·o_{k−1} where o is the previous order, diameter
/// bounded by (diam(G)+2)·o_{k−1} − 2 (exact diam(G)·o_{k−1} + diam*(Ψ_{k−1})
/// while diam* of the previous level is still computable).
pub fn psi_with_budget(g: &Graph, k: usize, budget: &Budget) -> Result<IteratedResult> {
    if k < 1 {
        return Err(Error::InvalidParameter("iteration depth k must be >= 1".into()));
    }
    if !g.is_connected() || g.order() < 2 {
        return Err(Error::Precondition(
            "iterated exponentials need a connected graph of order >= 2".into(),
        ));
    }
    let n = g.order();
    let big_n = BigUint::from(n);
    let n_log2 = log2_of(&big_n); // Some(s) when n = 2^s
    let diam_g = g.diameter()?;

    let mut cur: Option<Graph> = Some(g.clone());
    let mut spaces = Vec::new();
    let mut order = BigOrder::from_exact(big_n.clone());
    let mut diam_exact: Option<BigUint> = Some(BigUint::from(diam_g));
    let mut diam_upper = BigOrder::from_exact(BigUint::from(diam_g));
    for _ in 1..k {
        // exact diameter needs diam*(Ψ_{k-1}), which needs the previous level
        // materialized and small enough for the subset DP
        diam_exact = match (&cur, &order.exact) {
            (Some(prev), Some(o)) if prev.order() <= metrics::DEFAULT_DP_LIMIT => {
                Some(BigUint::from(diam_g) * o + BigUint::from(metrics::ham_diameter(prev)?))
            }
            _ => None,
        };
        diam_upper = match &order.exact {
            Some(o) => {
                let u = BigUint::from(diam_g + 2) * o - 2u32;
                if u.bits() <= 64 {
                    BigOrder::from_exact(u)
                } else {
                    BigOrder {
                        display: format!("{}*{}-2", diam_g + 2, order.display),
                        log2_display: None,
                        log2: None,
                        exact: Some(u),
                    }
                }
            }
            None => BigOrder::symbolic(format!("{}*{}-2", diam_g + 2, order.display)),
        };
        // next order n^{o}·o
        let small_exp = order
            .exact
            .as_ref()
            .and_then(|o| u64::try_from(o).ok())
            .filter(|e| e.saturating_mul(big_n.bits()) < EXACT_BITS);
        let next_order = match (small_exp, &order.exact) {
            (Some(e), Some(o)) => BigOrder::from_exact(big_n.pow(e as u32) * o),
            _ => match (n_log2, &order.log2, &order.log2_display) {
                // n = 2^s and o = 2^L: next = 2^{s·o + L}
                (Some(s), Some(l), Some(ld)) => {
                    let log2 = order
                        .exact
                        .as_ref()
                        .map(|o| BigUint::from(s) * o + l)
                        .filter(|x| x.bits() <= EXACT_BITS);
                    let coef = if s == 1 {
                        order.display.clone()
                    } else {
                        format!("{s}*{}", order.display)
                    };
                    let log2_display = match &log2 {
                        Some(x) => render(x),
                        None => format!("{coef}+{ld}"),
                    };
                    BigOrder::symbolic_pow2(log2, log2_display)
                }
                _ => BigOrder::symbolic(format!("{n}^({0})*{0}", order.display)),
            },
        };
        if let Some(prev) = cur.take() {
            match ExpoSpace::new(g.clone(), prev).and_then(|s| Ok((s.materialize(budget)?, s))) {
                Ok((graph, space)) => {
                    spaces.push(space);
                    cur = Some(graph);
                }
                Err(Error::BudgetExceeded { .. }) | Err(Error::InvalidParameter(_)) => {}
                Err(e) => return Err(e),
            }
        }
        order = next_order;
    }
    Ok(IteratedResult {
        graph: cur,
        spaces,
        stats: IteratedStats {
            k,
            order,
            min_degree: k * g.min_degree(),
            max_degree: k * g.max_degree(),
            connectivity: k * g.min_degree(),
            diameter: DiameterInfo {
                exact: diam_exact.map(BigOrder::from_exact),
                upper: diam_upper,
            },
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;

    fn exact(stats: &IteratedStats) -> BigUint {
        stats.order.exact.clone().expect("exact order")
    }

    #[test]
    fn omega_cube_small() {
        let k2 = generators::complete(2).unwrap();
        let r1 = omega(&k2, 1).unwrap();
        assert_eq!(exact(&r1.stats), BigUint::from(2u32));
        assert_eq!(r1.graph.as_ref().unwrap().order(), 2);

        let r2 = omega(&k2, 2).unwrap();
        let g2 = r2.graph.as_ref().unwrap();
        assert_eq!(g2.order(), 8);
        assert!(g2.vertices().all(|v| g2.degree(v) == 2)); // C8
        assert_eq!(g2.diameter().unwrap(), 4);

        let r3 = omega(&k2, 3).unwrap();
        let g3 = r3.graph.as_ref().unwrap();
        assert_eq!(g3.order(), 128);
        assert!(g3.vertices().all(|v| g3.degree(v) == 3));
        assert_eq!(g3.diameter().unwrap(), 10);
        assert_eq!(
            r3.stats.diameter.exact.as_ref().unwrap().exact,
            Some(BigUint::from(10u32))
        );
        assert_eq!(r3.stats.min_degree, 3);
        assert_eq!(r3.spaces.len(), 2);
    }

    #[test]
    fn omega_cube_table_values() {
        let k2 = generators::complete(2).unwrap();
        let cases: [(usize, &str, u64); 4] = [
            (4, "32768", 22),
            (5, "2147483648", 46),
            (6, "9223372036854775808", 94),
            (7, "2^127", 190),
        ];
        for (k, order, diam) in cases {
            let r = omega(&k2, k).unwrap();
            assert_eq!(r.stats.order.display, order, "k = {k}");
            assert_eq!(
                r.stats.diameter.exact.as_ref().unwrap().exact,
                Some(BigUint::from(diam)),
                "k = {k}"
            );
            assert_eq!(r.stats.min_degree, k);
            assert_eq!(r.stats.connectivity, k);
            // order formula 2^{2^k - 1}
            assert_eq!(
                r.stats.order.log2,
                Some((BigUint::one() << k) - BigUint::one())
            );
            if k >= 5 {
                assert!(r.graph.is_none(), "k = {k} must not materialize");
            }
        }
    }

    #[test]
    fn omega_k3_materialized_diameter_matches() {
        let k3 = generators::complete(3).unwrap();
        let r = omega(&k3, 2).unwrap();
        let g = r.graph.as_ref().unwrap();
        assert_eq!(g.order(), 81);
        assert_eq!(g.diameter().unwrap(), 6); // 1·3 + diam*(K3) = 3 + 3
        assert_eq!(
            r.stats.diameter.exact.as_ref().unwrap().exact,
            Some(BigUint::from(6u32))
        );
        assert_eq!(r.stats.order.display, "81"); // 3^{(3^2-1)/2}
    }

    #[test]
    fn psi_small_levels() {
        let k2 = generators::complete(2).unwrap();
        let r2 = psi(&k2, 2).unwrap();
        assert_eq!(exact(&r2.stats), BigUint::from(8u32)); // K2^K2 = C8
        assert_eq!(r2.graph.as_ref().unwrap().diameter().unwrap(), 4);

        let r3 = psi(&k2, 3).unwrap();
        assert_eq!(exact(&r3.stats), BigUint::from(2048u32));
        let g3 = r3.graph.as_ref().unwrap();
        assert_eq!(g3.order(), 2048);
        assert!(g3.vertices().all(|v| g3.degree(v) == 3));
        // the tabulated diameter 22 is the upper bound; the true value is 18
        assert_eq!(r3.stats.diameter.upper.exact, Some(BigUint::from(22u32)));
        assert_eq!(
            r3.stats.diameter.exact.as_ref().unwrap().exact,
            Some(BigUint::from(18u32))
        );
        assert_eq!(g3.diameter().unwrap(), 18);
    }

    #[test]
    fn psi_symbolic_levels() {
        let k2 = generators::complete(2).unwrap();
        let r4 = psi(&k2, 4).unwrap();
        assert!(r4.graph.is_none());
        assert_eq!(r4.stats.order.display, "2^2059");
        assert_eq!(r4.stats.order.log2, Some(BigUint::from(2059u32)));
        let o4 = r4.stats.order.exact.clone().unwrap();
        assert_eq!(o4, BigUint::one() << 2059);
        assert_eq!(r4.stats.diameter.upper.exact, Some(BigUint::from(6142u32)));
        assert!(r4.stats.diameter.exact.is_none());

        let r5 = psi(&k2, 5).unwrap();
        assert_eq!(r5.stats.order.display, "2^(2^2059+2059)");
        assert_eq!(
            r5.stats.order.log2,
            Some((BigUint::one() << 2059) + BigUint::from(2059u32))
        );
        assert!(r5.stats.order.exact.is_none());
        assert_eq!(r5.stats.diameter.upper.display, "3*2^2059-2");
        assert_eq!(r5.stats.min_degree, 5);

        let r6 = psi(&k2, 6).unwrap();
        assert_eq!(
            r6.stats.order.display,
            "2^(2^(2^2059+2059)+2^2059+2059)"
        );
        assert_eq!(r6.stats.diameter.upper.display, "3*2^(2^2059+2059)-2");
    }

    #[test]
    fn psi_non_power_of_two_base() {
        let k3 = generators::complete(3).unwrap();
        let r2 = psi(&k3, 2).unwrap();
        assert_eq!(exact(&r2.stats), BigUint::from(81u32)); // 3^3·3
        let r3 = psi(&k3, 3).unwrap();
        assert_eq!(exact(&r3.stats), BigUint::from(3u32).pow(81) * 81u32);
        let r4 = psi(&k3, 4).unwrap();
        assert!(r4.stats.order.display.starts_with("3^("));
    }

    #[test]
    fn big_order_serializes_as_strings() {
        let k2 = generators::complete(2).unwrap();
        let r = psi(&k2, 4).unwrap();
        let json = serde_json::to_value(&r.stats).unwrap();
        assert_eq!(json["order"]["display"], "2^2059");
        assert_eq!(json["order"]["log2"], "2059");
        assert_eq!(json["diameter"]["upper"]["exact"], "6142");
    }
}
