//! Exact independent-set counts (Fibonacci / Merrifield-Simmons index).
//!
//! Closed forms for paths, cycles, ladders and prisms are evaluated through
//! their integer recurrences. Everything else goes through
//! [`count_independent_sets`], a memoized vertex-elimination counter.

use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::forbiddance::{decompose, ComponentKind};
use crate::graph::Graph;

/// Largest generic component handled by the exact counter.
pub const GENERIC_COMPONENT_CAP: usize = 40;

/// `F_n` with `F_0 = 0, F_1 = F_2 = 1`.
pub fn fibonacci(n: u32) -> BigUint {
    let (mut a, mut b) = (BigUint::zero(), BigUint::one());
    for _ in 0..n {
        let c = &a + &b;
        a = b;
        b = c;
    }
    a
}

/// `L_n` with `L_0 = 2, L_1 = 1`.
pub fn lucas(n: u32) -> BigUint {
    let (mut a, mut b) = (BigUint::from(2u32), BigUint::one());
    for _ in 0..n {
        let c = &a + &b;
        a = b;
        b = c;
    }
    a
}

/// `i(P_n) = F_(n+2)`; the empty path gives 1.
pub fn index_path(n: u32) -> BigUint {
    fibonacci(n + 2)
}

/// `i(C_n) = L_n` for `n >= 2`; `C_1` is a looped vertex with index 1 and
/// `C_0` is empty.
pub fn index_cycle(n: u32) -> BigUint {
    match n {
        0 | 1 => BigUint::one(),
        _ => lucas(n),
    }
}

/// Second-order recurrence `x_n = 2 x_(n-1) + x_(n-2)` from `(x_0, x_1)`.
fn pell_like(x0: BigUint, x1: BigUint, n: u32) -> BigUint {
    let (mut a, mut b) = (x0, x1);
    for _ in 0..n {
        let c = &b + &b + &a;
        a = b;
        b = c;
    }
    a
}

/// `i(P_n [] P_2)`: `a_0 = 1, a_1 = 3, a_n = 2 a_(n-1) + a_(n-2)`.
pub fn index_ladder(n: u32) -> BigUint {
    pell_like(BigUint::one(), BigUint::from(3u32), n)
}

/// Companion Pell numbers `Q_n = (1 + sqrt 2)^n + (1 - sqrt 2)^n`.
pub fn companion_pell(n: u32) -> BigUint {
    pell_like(BigUint::from(2u32), BigUint::from(2u32), n)
}

/// Pell numbers `P_n` with `(1 + sqrt 2)^n = (Q_n + 2 P_n sqrt 2) / 2`.
pub fn pell(n: u32) -> BigUint {
    pell_like(BigUint::zero(), BigUint::one(), n)
}

/// `i(C_n [] P_2) = Q_n + (-1)^n`. Also right for the degenerate
/// `n = 1` (two looped vertices, index 1) and `n = 2` (a 4-cycle, index 7).
pub fn index_prism(n: u32) -> BigUint {
    if n == 0 {
        return BigUint::one();
    }
    let q = companion_pell(n);
    if n % 2 == 0 {
        q + 1u32
    } else {
        q - 1u32
    }
}

/// Whether `phi^m < n`, decided exactly via `phi^m = (L_m + F_m sqrt 5) / 2`.
pub fn phi_power_below(m: u32, n: u64) -> bool {
    let lhs = BigUint::from(2 * n);
    let l = lucas(m);
    if lhs <= l {
        return false;
    }
    let gap = lhs - l;
    let f = fibonacci(m);
    // F_m sqrt 5 < gap
    BigUint::from(5u32) * &f * &f < &gap * &gap
}

// ============================================================================
// Generic counter
// ============================================================================

/// Counts independent sets of a loop-free graph given by neighbourhood masks
/// (at most 64 vertices), via `i(G) = i(G - v) + i(G - N[v])` on a
/// maximum-degree vertex, splitting into components as they appear.
pub fn count_independent_sets(adj: &[u64]) -> u128 {
    assert!(adj.len() <= 64);
    let all = if adj.len() == 64 {
        u64::MAX
    } else {
        (1u64 << adj.len()) - 1
    };
    let mut memo = HashMap::new();
    count_within(adj, all, &mut memo)
}

fn component_of(adj: &[u64], set: u64) -> u64 {
    let start = set & set.wrapping_neg();
    let mut comp = start;
    let mut frontier = start;
    while frontier != 0 {
        let mut next = 0;
        let mut rest = frontier;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            next |= adj[v];
        }
        next &= set & !comp;
        comp |= next;
        frontier = next;
    }
    comp
}

fn count_within(adj: &[u64], set: u64, memo: &mut HashMap<u64, u128>) -> u128 {
    if set == 0 {
        return 1;
    }
    if let Some(&v) = memo.get(&set) {
        return v;
    }
    let comp = component_of(adj, set);
    let result = if comp != set {
        count_within(adj, comp, memo) * count_within(adj, set & !comp, memo)
    } else {
        let mut best = 0usize;
        let mut best_deg = 0u32;
        let mut rest = set;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let d = (adj[v] & set).count_ones();
            if d > best_deg || (best_deg == 0 && d == 0) {
                best = v;
                best_deg = d;
            }
        }
        if best_deg == 0 {
            // set is a single isolated vertex here
            1u128 << set.count_ones()
        } else {
            let without = set & !(1u64 << best);
            count_within(adj, without, memo) + count_within(adj, without & !adj[best], memo)
        }
    };
    memo.insert(set, result);
    result
}

/// Exact index of a graph: looped vertices are dropped, then the product of
/// the component indices is taken.
pub fn fib_index_exact(graph: &Graph) -> Result<BigUint> {
    let dec = decompose(graph);
    let mut total = BigUint::one();
    for comp in dec.components() {
        total *= component_index(graph, &comp.kind)?;
    }
    Ok(total)
}

/// Index of one classified component.
pub fn component_index(graph: &Graph, kind: &ComponentKind) -> Result<BigUint> {
    Ok(match kind {
        ComponentKind::Path(m) => index_path(*m as u32),
        ComponentKind::Cycle(n) => index_cycle(*n as u32),
        ComponentKind::Ladder(m) => index_ladder(*m as u32),
        ComponentKind::Prism(n) => index_prism(*n as u32),
        ComponentKind::LoopedPair | ComponentKind::Looped => BigUint::one(),
        ComponentKind::Generic(vertices) => {
            if vertices.len() > GENERIC_COMPONENT_CAP {
                return Err(Error::ComponentTooLarge {
                    size: vertices.len(),
                    cap: GENERIC_COMPONENT_CAP,
                });
            }
            let sub = graph.induced(vertices);
            BigUint::from(count_independent_sets(&sub.adjacency_masks()))
        }
    })
}

/// Outcome of [`regular_bound_check`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RegularBound {
    pub degree: usize,
    pub vertices: usize,
    #[serde(serialize_with = "crate::serde_decimal")]
    pub index: BigUint,
    /// `i(G)^(2d) <= (2^(d+1) - 1)^N`.
    pub holds: bool,
}

/// Checks `i(G) <= (2^(d+1) - 1)^(N / 2d)` for a simple `d`-regular graph,
/// in integers by raising both sides to the power `2d`.
pub fn regular_bound_check(graph: &Graph) -> Result<RegularBound> {
    if graph.has_loops() {
        return Err(Error::HasLoops);
    }
    let degree = graph
        .regular_degree()
        .ok_or_else(|| Error::NotRegular("vertex degrees differ".into()))?;
    if degree == 0 {
        return Err(Error::NotRegular("degree 0 has no bound".into()));
    }
    let vertices = graph.vertex_count();
    let index = fib_index_exact(graph)?;
    let lhs = index.pow(2 * degree as u32);
    let base = (BigUint::one() << (degree + 1)) - 1u32;
    let rhs = base.pow(vertices as u32);
    Ok(RegularBound {
        degree,
        vertices,
        index,
        holds: lhs <= rhs,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute(g: &Graph) -> u64 {
        let n = g.vertex_count();
        (0..1u64 << n)
            .filter(|&s| {
                (0..n).all(|u| {
                    s >> u & 1 == 0
                        || (!g.has_loop(u) && g.neighbors(u).iter().all(|&v| s >> v & 1 == 0))
                })
            })
            .count() as u64
    }

    #[test]
    fn sequences() {
        assert_eq!(lucas(0), 2u32.into());
        assert_eq!(lucas(2), 3u32.into());
        assert_eq!(lucas(3), 4u32.into());
        assert_eq!(lucas(4), 7u32.into());
        assert_eq!(lucas(8), 47u32.into());
        assert_eq!(lucas(9), 76u32.into());
        assert_eq!(fibonacci(7), 13u32.into());
        assert_eq!(fibonacci(1), 1u32.into());
    }

    #[test]
    fn closed_form_spot_values() {
        assert_eq!(index_path(0), 1u32.into());
        assert_eq!(index_path(1), 2u32.into());
        assert_eq!(index_path(2), 3u32.into());
        assert_eq!(index_path(5), 13u32.into());
        assert_eq!(index_cycle(1), 1u32.into());
        assert_eq!(index_cycle(4), 7u32.into());
        assert_eq!(index_cycle(8), 47u32.into());
        assert_eq!(index_ladder(1), 3u32.into());
        assert_eq!(index_ladder(2), 7u32.into());
        assert_eq!(index_ladder(3), 17u32.into());
        assert_eq!(index_prism(3), 13u32.into());
        assert_eq!(index_prism(4), 35u32.into());
        assert_eq!(index_prism(5), 81u32.into());
        assert_eq!(index_prism(1), 1u32.into());
        assert_eq!(index_prism(2), 7u32.into());
    }

    #[test]
    fn closed_forms_match_brute_force() {
        for n in 0..=12 {
            assert_eq!(index_path(n), brute(&Graph::path(n as usize)).into());
        }
        for n in 3..=12 {
            assert_eq!(index_cycle(n), brute(&Graph::cycle(n as usize)).into());
        }
        for n in 1..=6 {
            assert_eq!(index_ladder(n), brute(&Graph::ladder(n as usize)).into());
        }
        for n in 3..=6 {
            assert_eq!(index_prism(n), brute(&Graph::prism(n as usize)).into());
        }
    }

    #[test]
    fn generic_counter_matches_brute_force() {
        let k33 = Graph::from_edges(
            6,
            &[(0, 3), (0, 4), (0, 5), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5)],
        );
        assert_eq!(count_independent_sets(&k33.adjacency_masks()), 15);
        let petersen = Graph::from_edges(
            10,
            &[
                (0, 1), (1, 2), (2, 3), (3, 4), (4, 0),
                (0, 5), (1, 6), (2, 7), (3, 8), (4, 9),
                (5, 7), (7, 9), (9, 6), (6, 8), (8, 5),
            ],
        );
        assert_eq!(
            count_independent_sets(&petersen.adjacency_masks()) as u64,
            brute(&petersen)
        );
        assert_eq!(count_independent_sets(&Graph::empty(7).adjacency_masks()), 128);
        assert_eq!(count_independent_sets(&[]), 1);
    }

    #[test]
    fn exact_index_handles_loops_and_unions() {
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (1, 1)]);
        // vertex 1 is unusable: {0} and {2,3} remain
        assert_eq!(fib_index_exact(&g).unwrap(), (2u32 * 3).into());
        let u = Graph::prism(3).disjoint_union(&Graph::cycle(5));
        assert_eq!(fib_index_exact(&u).unwrap(), (13u32 * 11).into());
        assert_eq!(fib_index_exact(&Graph::empty(9)).unwrap(), 512u32.into());
    }

    #[test]
    fn oversized_generic_component_is_refused() {
        // a 4-regular circulant on 45 vertices is connected and generic
        let n = 45;
        let edges: Vec<_> = (0..n)
            .flat_map(|i| [(i, (i + 1) % n), (i, (i + 2) % n)])
            .collect();
        let g = Graph::from_edges(n, &edges);
        assert!(matches!(
            fib_index_exact(&g),
            Err(Error::ComponentTooLarge { size: 45, .. })
        ));
    }

    #[test]
    fn regular_bounds() {
        let r = regular_bound_check(&Graph::prism(3)).unwrap();
        assert_eq!((r.degree, r.vertices), (3, 6));
        assert_eq!(r.index, 13u32.into());
        assert!(r.holds);
        let r = regular_bound_check(&Graph::cycle(4)).unwrap();
        assert!(r.holds);
        assert!(matches!(
            regular_bound_check(&Graph::path(3)),
            Err(Error::NotRegular(_))
        ));
        assert_eq!(regular_bound_check(&Graph::cycle(1)), Err(Error::HasLoops));
        assert!(regular_bound_check(&Graph::empty(3)).is_err());
    }

    #[test]
    fn phi_power_comparisons() {
        // phi^2 ~ 2.618, phi^3 ~ 4.236
        assert!(phi_power_below(2, 3));
        assert!(!phi_power_below(3, 4));
        assert!(phi_power_below(3, 5));
        assert!(!phi_power_below(0, 1));
        assert!(phi_power_below(0, 2));
    }
}
