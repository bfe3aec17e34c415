//! Forbiddance graphs: vertices are group elements, with `x ~ y` whenever
//! `x - y` is a forbidden difference or `x + y` a forbidden sum. Subsets
//! avoiding every forbidden value are exactly the independent sets.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use serde::Serialize;

use crate::group::{GroupElement, GroupSpec};
use crate::graph::{find_isomorphism, Graph};

/// Extension steps allowed per isomorphism witness before falling back to
/// [`ComponentKind::Generic`].
const WITNESS_BUDGET: usize = 1 << 22;

/// Forbidden differences (stored closed under negation) and forbidden sums.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ForbiddanceSpec {
    diffs: Vec<GroupElement>,
    sums: Vec<GroupElement>,
}

impl ForbiddanceSpec {
    pub fn new(group: &GroupSpec, diffs: &[GroupElement], sums: &[GroupElement]) -> Self {
        let mut d: Vec<GroupElement> = diffs
            .iter()
            .flat_map(|&x| [x, group.neg(x)])
            .collect();
        d.sort_unstable();
        d.dedup();
        let mut s = sums.to_vec();
        s.sort_unstable();
        s.dedup();
        ForbiddanceSpec { diffs: d, sums: s }
    }

    /// `+-D`.
    pub fn diffs(&self) -> &[GroupElement] {
        &self.diffs
    }

    pub fn sums(&self) -> &[GroupElement] {
        &self.sums
    }
}

/// The forbiddance graph of `spec`. A zero forbidden difference loops every
/// vertex, leaving only the empty set.
pub fn build_graph(group: &GroupSpec, spec: &ForbiddanceSpec) -> Graph {
    let n = group.order();
    let mut g = Graph::empty(n);
    let zero_forbidden = spec.diffs.contains(&GroupElement::ZERO);
    for x in group.elements() {
        if zero_forbidden {
            g.add_edge(x.0, x.0);
        }
        for &d in &spec.diffs {
            if d != GroupElement::ZERO {
                let y = group.add(x, d);
                g.add_edge(x.0, y.0);
            }
        }
        for &s in &spec.sums {
            let y = group.sub(s, x);
            g.add_edge(x.0, y.0);
        }
    }
    g.normalize();
    g
}

// ============================================================================
// Decomposition
// ============================================================================

/// Shape of one connected component.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(tag = "kind", content = "size")]
pub enum ComponentKind {
    /// `P_m`; covers the degenerate ladder `P_1 [] P_2 = P_2`.
    Path(usize),
    /// `C_n`; covers the degenerate ladder `P_2 [] P_2 = C_4`.
    Cycle(usize),
    /// `P_m [] P_2` for `m >= 3`.
    Ladder(usize),
    /// `C_n [] P_2` for `n >= 3`.
    Prism(usize),
    /// Two adjacent vertices, both looped, with no other neighbours.
    LoopedPair,
    /// A looped vertex outside any looped pair; removed before counting.
    Looped,
    /// Anything else, by vertex list.
    Generic(Vec<usize>),
}

impl ComponentKind {
    /// Number of group elements the component covers.
    pub fn size(&self) -> usize {
        match self {
            ComponentKind::Path(m) | ComponentKind::Cycle(m) => *m,
            ComponentKind::Ladder(m) | ComponentKind::Prism(m) => 2 * m,
            ComponentKind::LoopedPair => 2,
            ComponentKind::Looped => 1,
            ComponentKind::Generic(v) => v.len(),
        }
    }

    /// Rung count if the component is `P_m [] P_2` for some `m >= 1`.
    pub fn ladder_rungs(&self) -> Option<usize> {
        match self {
            ComponentKind::Path(2) => Some(1),
            ComponentKind::Cycle(4) => Some(2),
            ComponentKind::Ladder(m) => Some(*m),
            _ => None,
        }
    }

    pub fn is_prism(&self) -> bool {
        matches!(self, ComponentKind::Prism(_))
    }
}

impl fmt::Display for ComponentKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ComponentKind::Path(m) => write!(f, "P_{m}"),
            ComponentKind::Cycle(n) => write!(f, "C_{n}"),
            ComponentKind::Ladder(m) => write!(f, "P_{m}[]P_2"),
            ComponentKind::Prism(n) => write!(f, "C_{n}[]P_2"),
            ComponentKind::LoopedPair => write!(f, "looped-pair"),
            ComponentKind::Looped => write!(f, "looped"),
            ComponentKind::Generic(v) => write!(f, "generic({} vertices)", v.len()),
        }
    }
}

/// One classified component with its vertices (group element indices).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Component {
    pub kind: ComponentKind,
    pub vertices: Vec<usize>,
}

/// Classified components of a forbiddance graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    components: Vec<Component>,
}

impl Decomposition {
    /// Components ordered by smallest vertex.
    pub fn components(&self) -> &[Component] {
        &self.components
    }

    /// `(kind, multiplicity)` pairs in first-appearance order. Generic
    /// components are listed individually.
    pub fn summary(&self) -> Vec<(ComponentKind, usize)> {
        let mut out: Vec<(ComponentKind, usize)> = Vec::new();
        for c in &self.components {
            match out.iter_mut().find(|(k, _)| *k == c.kind) {
                Some((_, m)) => *m += 1,
                None => out.push((c.kind.clone(), 1)),
            }
        }
        out
    }

    /// Multiplicity per kind, keyed in kind order.
    pub fn counts(&self) -> BTreeMap<ComponentKind, usize> {
        let mut out = BTreeMap::new();
        for c in &self.components {
            *out.entry(c.kind.clone()).or_insert(0) += 1;
        }
        out
    }

    /// `n_P`.
    pub fn prism_count(&self) -> usize {
        self.components.iter().filter(|c| c.kind.is_prism()).count()
    }

    /// `n_L`, counting every `P_m [] P_2` including `P_2` and `C_4`.
    pub fn ladder_count(&self) -> usize {
        self.components
            .iter()
            .filter(|c| c.kind.ladder_rungs().is_some())
            .count()
    }

    /// Vertices deleted for carrying a loop.
    pub fn looped_vertices(&self) -> usize {
        self.components
            .iter()
            .filter(|c| matches!(c.kind, ComponentKind::Looped | ComponentKind::LoopedPair))
            .map(|c| c.vertices.len())
            .sum()
    }

    pub fn covered_vertices(&self) -> usize {
        self.components.iter().map(|c| c.kind.size()).sum()
    }

    pub fn has_generic(&self) -> bool {
        self.components
            .iter()
            .any(|c| matches!(c.kind, ComponentKind::Generic(_)))
    }

    pub fn report(&self, index: Option<&BigUint>) -> DecompositionReport {
        DecompositionReport {
            components: self
                .summary()
                .into_iter()
                .map(|(kind, multiplicity)| KindCount {
                    kind: kind.to_string(),
                    multiplicity,
                })
                .collect(),
            prisms: self.prism_count(),
            ladders: self.ladder_count(),
            looped_vertices: self.looped_vertices(),
            index: index.map(|i| i.to_string()),
        }
    }
}

/// JSON form of a decomposition.
#[derive(Debug, Clone, Serialize)]
pub struct DecompositionReport {
    pub components: Vec<KindCount>,
    pub prisms: usize,
    pub ladders: usize,
    pub looped_vertices: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub index: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct KindCount {
    pub kind: String,
    pub multiplicity: usize,
}

/// Splits off looped vertices, then classifies each remaining component and
/// confirms the shape with an isomorphism witness.
pub fn decompose(graph: &Graph) -> Decomposition {
    let mut components = Vec::new();

    for comp in graph.components() {
        let looped: Vec<usize> = comp.iter().copied().filter(|&v| graph.has_loop(v)).collect();
        if looped.len() == 2 && comp.len() == 2 {
            components.push(Component {
                kind: ComponentKind::LoopedPair,
                vertices: comp,
            });
            continue;
        }
        for v in looped {
            components.push(Component {
                kind: ComponentKind::Looped,
                vertices: vec![v],
            });
        }
    }
    for comp in graph.components_where(|v| !graph.has_loop(v)) {
        let sub = graph.induced(&comp);
        components.push(Component {
            kind: classify(&sub, &comp),
            vertices: comp,
        });
    }
    components.sort_by_key(|c| c.vertices[0]);
    Decomposition { components }
}

/// Names a connected loop-free component.
fn classify(sub: &Graph, vertices: &[usize]) -> ComponentKind {
    let n = sub.vertex_count();
    let e = sub.edge_count();
    let max_deg = (0..n).map(|v| sub.degree(v)).max().unwrap_or(0);
    let generic = || ComponentKind::Generic(vertices.to_vec());

    let candidate = if n == 1 {
        return ComponentKind::Path(1);
    } else if max_deg <= 2 && e + 1 == n {
        Some((ComponentKind::Path(n), Graph::path(n), false))
    } else if max_deg <= 2 && e == n {
        Some((ComponentKind::Cycle(n), Graph::cycle(n), true))
    } else if max_deg == 3 && n % 2 == 0 && n >= 6 {
        let m = n / 2;
        if e == 3 * m {
            Some((ComponentKind::Prism(m), Graph::prism(m), true))
        } else if e == 3 * m - 2 {
            Some((ComponentKind::Ladder(m), Graph::ladder(m), false))
        } else {
            None
        }
    } else {
        None
    };

    match candidate {
        Some((kind, pattern, transitive)) => {
            match find_isomorphism(&pattern, sub, transitive, WITNESS_BUDGET) {
                Some(_) => kind,
                None => generic(),
            }
        }
        None => generic(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fib::fib_index_exact;

    fn g(s: &str) -> GroupSpec {
        s.parse().unwrap()
    }

    fn spec(grp: &GroupSpec, d: &[usize], s: &[usize]) -> ForbiddanceSpec {
        let el = |v: &[usize]| v.iter().map(|&i| GroupElement(i)).collect::<Vec<_>>();
        ForbiddanceSpec::new(grp, &el(d), &el(s))
    }

    #[test]
    fn figure_one_graph() {
        let z8 = g("8");
        let graph = build_graph(&z8, &spec(&z8, &[1], &[4]));
        let mut expected: Vec<(usize, usize)> = (0..8).map(|i| (i, (i + 1) % 8)).collect();
        expected.extend([(0, 4), (1, 3), (5, 7), (2, 2), (6, 6)]);
        assert_eq!(graph, Graph::from_edges(8, &expected));
        assert_eq!(fib_index_exact(&graph).unwrap(), 17u32.into());
    }

    #[test]
    fn single_difference_is_cycles() {
        let z8 = g("8");
        let graph = build_graph(&z8, &spec(&z8, &[1], &[]));
        assert_eq!(graph, Graph::cycle(8));
        let dec = decompose(&build_graph(&g("9"), &spec(&g("9"), &[3], &[])));
        assert_eq!(dec.summary(), vec![(ComponentKind::Cycle(3), 3)]);
        let dec = decompose(&build_graph(&z8, &spec(&z8, &[4], &[])));
        assert_eq!(dec.summary(), vec![(ComponentKind::Path(2), 4)]);
    }

    #[test]
    fn empty_spec_is_edgeless() {
        let grp = g("3,2");
        let graph = build_graph(&grp, &spec(&grp, &[], &[]));
        assert_eq!(graph, Graph::empty(6));
        assert_eq!(decompose(&graph).summary(), vec![(ComponentKind::Path(1), 6)]);
    }

    #[test]
    fn prism_and_ladder_in_z9() {
        let z9 = g("9");
        let graph = build_graph(&z9, &spec(&z9, &[3], &[0]));
        let dec = decompose(&graph);
        assert_eq!(dec.prism_count(), 1);
        assert_eq!(dec.ladder_count(), 1);
        assert_eq!(dec.looped_vertices(), 1);
        assert_eq!(2 * dec.prism_count() + dec.ladder_count(), 9 / 3);
        assert_eq!(dec.covered_vertices(), 9);
        assert_eq!(fib_index_exact(&graph).unwrap(), 39u32.into());
    }

    #[test]
    fn two_order_two_differences_give_four_cycles() {
        let grp = g("2,4");
        let d1 = grp.from_digits(&[1, 0]).unwrap().0;
        let d2 = grp.from_digits(&[1, 2]).unwrap().0;
        let dec = decompose(&build_graph(&grp, &spec(&grp, &[d1, d2], &[])));
        assert_eq!(dec.summary(), vec![(ComponentKind::Cycle(4), 2)]);
    }

    #[test]
    fn zero_difference_loops_everything() {
        let z5 = g("5");
        let graph = build_graph(&z5, &spec(&z5, &[0], &[]));
        assert_eq!(graph.loop_vertices().len(), 5);
        assert_eq!(fib_index_exact(&graph).unwrap(), 1u32.into());
    }

    #[test]
    fn looped_pairs() {
        // 2x = 2 at x = 1, 5 and 5 - 1 = 4, so {1, 5} is a looped pair
        let z8 = g("8");
        let dec = decompose(&build_graph(&z8, &spec(&z8, &[4], &[2])));
        let counts = dec.counts();
        assert_eq!(counts.get(&ComponentKind::LoopedPair), Some(&1));
        assert_eq!(dec.covered_vertices(), 8);
    }

    #[test]
    fn generic_fallback() {
        let z9 = g("9");
        let dec = decompose(&build_graph(&z9, &spec(&z9, &[1, 2], &[])));
        assert!(dec.has_generic());
        assert_eq!(dec.covered_vertices(), 9);
    }

    #[test]
    fn report_serializes() {
        let z9 = g("9");
        let graph = build_graph(&z9, &spec(&z9, &[3], &[0]));
        let dec = decompose(&graph);
        let idx = fib_index_exact(&graph).unwrap();
        let json = serde_json::to_string(&dec.report(Some(&idx))).unwrap();
        assert!(json.contains("\"prisms\":1"));
        assert!(json.contains("\"index\":\"39\""));
    }
}
