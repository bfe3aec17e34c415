//! Named property sweeps. Every check compares a structural or counting
//! claim against an independent brute-force route and reports how many cases
//! it covered plus the first counterexample, if any.
//!
//! Group-indexed checks sweep every factor multiset with `|G| <= max_order`;
//! the ones that scan all subsets stop at [`SumDiffTable::MAX_ORDER`].
//! Closed-form checks have fixed ranges.

use std::fmt::Write as _;

use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::bounds;
use crate::enumerate::{count_dd, count_mstd, ScanConfig, SumDiffTable};
use crate::error::{Error, Result};
use crate::family::groups_in_range;
use crate::fib::{self, count_independent_sets, fib_index_exact, regular_bound_check};
use crate::forbiddance::{build_graph, decompose, ComponentKind, ForbiddanceSpec};
use crate::graph::Graph;
use crate::group::{GroupElement, GroupSpec, TieRule};
use crate::interval::Interval;
use crate::sumset::{self, integer_mstd_check, minimal_lift_multiplier, IntegerSet, SubsetMask};

/// Every check name, in the order `run_all` executes them.
pub const CHECK_NAMES: &[&str] = &[
    "half-set",
    "rank",
    "sumset-oracle",
    "containment",
    "union-upper",
    "union-lower",
    "bijection",
    "cycles",
    "even-lemmas",
    "odd-lemmas",
    "prism-ladder",
    "appendix",
    "kahn-zhao",
    "sandwich",
    "upper-choice",
    "even-ratio",
    "lucas",
    "ladder-cap",
    "odd-bracket",
    "conway",
    "figure",
    "lift",
    "threads",
];

/// One line of the verification ledger.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckOutcome {
    pub name: String,
    pub passed: bool,
    pub cases: u64,
    pub detail: String,
}

#[derive(Debug, Clone)]
pub struct VerifyConfig {
    pub max_order: usize,
    pub scan: ScanConfig,
    pub seed: u64,
    /// Precision for interval checks.
    pub bits: u32,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            max_order: 14,
            scan: ScanConfig::default(),
            seed: 0x5eed,
            bits: 256,
        }
    }
}

/// Runs one named check.
pub fn run(name: &str, cfg: &VerifyConfig) -> Result<CheckOutcome> {
    let n = cfg.max_order;
    let scan_max = n.min(SumDiffTable::MAX_ORDER);
    match name {
        "half-set" => Ok(half_sets(n)),
        "rank" => Ok(ranks(n)),
        "sumset-oracle" => sumset_oracle(n.min(12), n, 200, cfg.seed),
        "containment" => containment(scan_max),
        "union-upper" => union_upper(scan_max, &cfg.scan),
        "union-lower" => union_lower(scan_max, &cfg.scan),
        "bijection" => bijection(scan_max),
        "cycles" => cycles(scan_max, n),
        "even-lemmas" => even_lemmas(scan_max),
        "odd-lemmas" => odd_lemmas(scan_max),
        "prism-ladder" => Ok(prism_ladder(n)),
        "appendix" => appendix(18, 12, cfg.seed),
        "kahn-zhao" => kahn_zhao(18, n),
        "sandwich" => sandwich(&groups_in_range(2, scan_max), &cfg.scan, cfg.bits),
        "upper-choice" => upper_choice(n),
        "even-ratio" => even_ratio(&groups_in_range(2, scan_max), &cfg.scan),
        "lucas" => Ok(lucas(200)),
        "ladder-cap" => Ok(ladder_cap(99)),
        "odd-bracket" => odd_bracket(n, cfg.bits),
        "conway" => Ok(conway()),
        "figure" => figure(),
        "lift" => lift(scan_max, 4, 64, cfg.seed),
        "threads" => {
            let groups: Vec<GroupSpec> = groups_in_range(1, scan_max).into_iter().rev().take(10).collect();
            threads(&groups, &[1, 2, 0])
        }
        other => Err(Error::InvalidArgument(format!(
            "unknown check `{other}`; known: {}",
            CHECK_NAMES.join(", ")
        ))),
    }
}

/// Runs the named checks (all of them when `only` is empty).
pub fn run_all(cfg: &VerifyConfig, only: &[String]) -> Result<Vec<CheckOutcome>> {
    let names: Vec<&str> = if only.is_empty() {
        CHECK_NAMES.to_vec()
    } else {
        only.iter().map(String::as_str).collect()
    };
    names.into_iter().map(|name| run(name, cfg)).collect()
}

// ----------------------------------------------------------------------------
// Bookkeeping
// ----------------------------------------------------------------------------

struct Tally {
    name: &'static str,
    cases: u64,
    failures: u64,
    first: Option<String>,
}

impl Tally {
    fn new(name: &'static str) -> Self {
        Tally {
            name,
            cases: 0,
            failures: 0,
            first: None,
        }
    }

    fn record(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures += 1;
            if self.first.is_none() {
                self.first = Some(what());
            }
        }
    }

    fn merge(&mut self, other: Tally) {
        self.cases += other.cases;
        self.failures += other.failures;
        if self.first.is_none() {
            self.first = other.first;
        }
    }

    fn finish(self, scope: impl Into<String>) -> CheckOutcome {
        let scope = scope.into();
        let detail = match &self.first {
            None => format!("{} cases; {scope}", self.cases),
            Some(first) => format!("{}/{} failed; first: {first}; {scope}", self.failures, self.cases),
        };
        CheckOutcome {
            name: self.name.to_string(),
            passed: self.failures == 0,
            cases: self.cases,
            detail,
        }
    }
}

fn els(v: &[usize]) -> Vec<GroupElement> {
    v.iter().map(|&i| GroupElement(i)).collect()
}

fn nonzero(group: &GroupSpec) -> impl Iterator<Item = GroupElement> + '_ {
    group.elements().skip(1)
}

fn seven_quarter_exact(n: usize) -> BigUint {
    BigUint::from(7u32).pow((n / 4) as u32)
}

// ----------------------------------------------------------------------------
// Group arithmetic
// ----------------------------------------------------------------------------

/// Half-set sizes and transversal property, Lagrange, order-two counts.
pub fn half_sets(max_order: usize) -> CheckOutcome {
    let mut t = Tally::new("half-set");
    for group in groups_in_range(1, max_order) {
        let n = group.order();
        let k = group.order_two_count();
        let orders = group.order_table();
        t.record(orders.iter().all(|&o| n % o == 0), || format!("{group}: order not dividing |G|"));
        let twos = orders.iter().filter(|&&o| o == 2).count();
        t.record(twos == k, || format!("{group}: {twos} order-2 elements, k = {k}"));
        for rule in [TieRule::LowerIndex, TieRule::HigherIndex] {
            let half = group.half_set_with(rule);
            t.record(half.len() == (n - 1 + k) / 2, || {
                format!("{group}: |G'| = {}, expected {}", half.len(), (n - 1 + k) / 2)
            });
            let mut hit = vec![0u8; n];
            for &d in &half {
                hit[d.0] += 1;
                let m = group.neg(d);
                if m != d {
                    hit[m.0] += 1;
                }
            }
            t.record(hit[0] == 0 && hit[1..].iter().all(|&h| h == 1), || {
                format!("{group}: half-set is not a transversal of {{d, -d}}")
            });
        }
    }
    t.finish(format!("groups |G| <= {max_order}"))
}

/// `|{g : ord g < t}| < t^(rank + 1)` against a direct count.
pub fn ranks(max_order: usize) -> CheckOutcome {
    let mut t = Tally::new("rank");
    for group in groups_in_range(1, max_order) {
        let orders = group.order_table();
        for thr in 1..=group.order() {
            let brute = orders.iter().filter(|&&o| o < thr).count();
            let (count, holds) = group.count_order_below(thr);
            t.record(count == brute && holds, || {
                format!("{group}, t = {thr}: count {count} (direct {brute}), bound holds = {holds}")
            });
        }
    }
    t.finish(format!("groups |G| <= {max_order}, all t <= |G|"))
}

// ----------------------------------------------------------------------------
// Sumsets
// ----------------------------------------------------------------------------

fn naive_sum_diff(group: &GroupSpec, a: &SubsetMask) -> (SubsetMask, SubsetMask) {
    let n = group.order();
    let mut sums = SubsetMask::empty(n);
    let mut diffs = SubsetMask::empty(n);
    for x in a.iter() {
        for y in a.iter() {
            sums.insert(group.add(GroupElement(x), GroupElement(y)).0);
            diffs.insert(group.sub(GroupElement(x), GroupElement(y)).0);
        }
    }
    (sums, diffs)
}

fn sumset_case(t: &mut Tally, group: &GroupSpec, a: &SubsetMask) {
    let (ns, nd) = naive_sum_diff(group, a);
    let s = sumset::sumset(group, a);
    let d = sumset::diffset(group, a);
    t.record(s == ns && d == nd, || format!("{group}, A = {}: fast and naive disagree", a.to_literal()));
    let closed = d.iter().all(|x| d.contains(group.neg(GroupElement(x)).0));
    let sizes = a.is_empty() || (s.count() >= a.count() && d.count() >= a.count());
    t.record(closed && sizes, || {
        format!("{group}, A = {}: A-A not symmetric or smaller than A", a.to_literal())
    });
}

/// Fast sumsets against a double loop: exhaustively up to `exhaustive_max`,
/// then `samples` seeded random subsets per group up to `random_max`.
pub fn sumset_oracle(exhaustive_max: usize, random_max: usize, samples: usize, seed: u64) -> Result<CheckOutcome> {
    let mut t = Tally::new("sumset-oracle");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for group in groups_in_range(1, random_max.max(exhaustive_max)) {
        let n = group.order();
        if n <= exhaustive_max {
            for bits in 0..1u64 << n {
                sumset_case(&mut t, &group, &SubsetMask::from_u64(n, bits));
            }
        } else {
            for _ in 0..samples {
                let a = SubsetMask::from_indices(n, (0..n).filter(|_| rng.gen_bool(0.5)))?;
                sumset_case(&mut t, &group, &a);
            }
        }
    }
    Ok(t.finish(format!(
        "all subsets for |G| <= {exhaustive_max}, {samples} random (seed {seed}) up to {random_max}"
    )))
}

// ----------------------------------------------------------------------------
// Counting identities
// ----------------------------------------------------------------------------

/// Every `A` with `A - A != G` and `A + A = G` is MSTD, and every MSTD set
/// has `A - A != G`.
pub fn containment(max_order: usize) -> Result<CheckOutcome> {
    let mut t = Tally::new("containment");
    for group in groups_in_range(1, max_order) {
        let table = SumDiffTable::build(&group)?;
        let full = (1u128 << group.order()) - 1;
        let full = full as u64;
        let (mut left, mut mstd, mut bad) = (0u64, 0u64, None);
        for a in 0..table.len() as u64 {
            let (s, d) = (table.sumset(a), table.diffset(a));
            let is_mstd = s.count_ones() > d.count_ones();
            let in_left = d != full && s == full;
            left += in_left as u64;
            mstd += is_mstd as u64;
            if (in_left && !is_mstd) || (is_mstd && d == full) {
                bad.get_or_insert(a);
            }
        }
        t.record(bad.is_none() && left <= mstd, || {
            let a = SubsetMask::from_u64(group.order(), bad.unwrap_or(0));
            format!("{group}, A = {}", a.to_literal())
        });
    }
    Ok(t.finish(format!("groups |G| <= {max_order}")))
}

/// `|MSTD(G)| <= sum over G' of |{A : d not in A - A}|`.
pub fn union_upper(max_order: usize, scan: &ScanConfig) -> Result<CheckOutcome> {
    let mut t = Tally::new("union-upper");
    for group in groups_in_range(2, max_order) {
        let table = SumDiffTable::build(&group)?;
        let mstd = count_mstd(&group, scan)?.mstd_count;
        let bound: u64 = group.half_set().iter().map(|&d| table.count_avoiding(&[d], &[])).sum();
        t.record(mstd <= BigUint::from(bound), || format!("{group}: {mstd} > {bound}"));
    }
    Ok(t.finish(format!("groups 2 <= |G| <= {max_order}")))
}

/// The assembled inclusion-exclusion lower bound, and its `|D_d|` step.
pub fn union_lower(max_order: usize, scan: &ScanConfig) -> Result<CheckOutcome> {
    let mut t = Tally::new("union-lower");
    for group in groups_in_range(2, max_order) {
        let table = SumDiffTable::build(&group)?;
        let mstd = count_mstd(&group, scan)?.mstd_count;
        let half = group.half_set();
        let mut total: i128 = 0;
        for &d in &half {
            let single = table.count_avoiding(&[d], &[]) as i128;
            let with_sums: i128 = group
                .elements()
                .map(|s| table.count_avoiding(&[d], &[s]) as i128)
                .sum();
            let dd = count_dd(&group, d, scan)?;
            let step = single - with_sums;
            t.record(step <= 0 || BigUint::from(step as u128) <= dd, || {
                format!("{group}, d = {}: |D_d| = {dd} < {step}", d.0)
            });
            total += step;
        }
        for (i, &d1) in half.iter().enumerate() {
            for &d2 in &half[i + 1..] {
                total -= table.count_avoiding(&[d1, d2], &[]) as i128;
            }
        }
        t.record(total <= 0 || BigUint::from(total as u128) <= mstd, || {
            format!("{group}: |MSTD| = {mstd} < {total}")
        });
    }
    Ok(t.finish(format!("groups 2 <= |G| <= {max_order}, unordered pairs")))
}

/// Independent sets of the forbiddance graph against direct avoidance counts,
/// for every `|D| <= 2`, `|S| <= 1`.
pub fn bijection(max_order: usize) -> Result<CheckOutcome> {
    let mut t = Tally::new("bijection");
    for group in groups_in_range(1, max_order) {
        let table = SumDiffTable::build(&group)?;
        let n = group.order();
        let mut specs: Vec<(Vec<usize>, Vec<usize>)> = Vec::new();
        let mut diff_sets: Vec<Vec<usize>> = vec![vec![]];
        for a in 0..n {
            diff_sets.push(vec![a]);
            for b in a + 1..n {
                diff_sets.push(vec![a, b]);
            }
        }
        for d in &diff_sets {
            specs.push((d.clone(), vec![]));
            for s in 0..n {
                specs.push((d.clone(), vec![s]));
            }
        }
        let sub = specs
            .par_iter()
            .map(|(d, s)| {
                let mut sub = Tally::new("bijection");
                let (d, s) = (els(d), els(s));
                let graph = build_graph(&group, &ForbiddanceSpec::new(&group, &d, &s));
                let direct = table.count_avoiding(&d, &s);
                match fib_index_exact(&graph) {
                    Ok(index) => sub.record(index == BigUint::from(direct), || {
                        format!("{group}, D = {d:?}, S = {s:?}: index {index}, direct {direct}")
                    }),
                    Err(e) => sub.record(false, || format!("{group}, D = {d:?}, S = {s:?}: {e}")),
                }
                sub
            })
            .reduce(
                || Tally::new("bijection"),
                |mut a, b| {
                    a.merge(b);
                    a
                },
            );
        t.merge(sub);
    }
    Ok(t.finish(format!("groups |G| <= {max_order}, |D| <= 2, |S| <= 1")))
}

/// One difference of order `l`: `L_l^(|G|/l)` sets (direct count up to
/// `count_max`) and `|G|/l` cycles (structure up to `shape_max`).
pub fn cycles(count_max: usize, shape_max: usize) -> Result<CheckOutcome> {
    let mut t = Tally::new("cycles");
    for group in groups_in_range(2, count_max.max(shape_max)) {
        let n = group.order();
        let table = if n <= count_max {
            Some(SumDiffTable::build(&group)?)
        } else {
            None
        };
        for d in nonzero(&group) {
            let l = group.element_order(d);
            let expect = fib::lucas(l as u32).pow((n / l) as u32);
            if let Some(table) = &table {
                let direct = table.count_avoiding(&[d], &[]);
                t.record(BigUint::from(direct) == expect, || {
                    format!("{group}, d = {}: {direct} != L_{l}^{}", d.0, n / l)
                });
            }
            if n <= shape_max {
                let dec = decompose(&build_graph(&group, &ForbiddanceSpec::new(&group, &[d], &[])));
                let kind = if l == 2 {
                    ComponentKind::Path(2)
                } else {
                    ComponentKind::Cycle(l)
                };
                t.record(dec.summary() == vec![(kind.clone(), n / l)], || {
                    format!("{group}, d = {}: {:?}, expected {} x {kind}", d.0, dec.summary(), n / l)
                });
            }
        }
    }
    Ok(t.finish(format!(
        "counts for |G| <= {count_max}, shapes for |G| <= {shape_max}"
    )))
}

/// Even-order caps and shapes for one or two forbidden differences.
pub fn even_lemmas(max_order: usize) -> Result<CheckOutcome> {
    let mut t = Tally::new("even-lemmas");
    for group in groups_in_range(2, max_order) {
        if !group.is_even() {
            continue;
        }
        let n = group.order();
        let k = group.order_two_count();
        let table = SumDiffTable::build(&group)?;
        let orders = group.order_table();
        for d in nonzero(&group) {
            if orders[d.0] > 2 {
                let c = BigUint::from(table.count_avoiding(&[d], &[]));
                t.record(bounds::within_seven_quarter(&c, n), || {
                    format!("{group}, d = {}: {c} > 7^({n}/4)", d.0)
                });
                continue;
            }
            for s in group.elements() {
                let c = BigUint::from(table.count_avoiding(&[d], &[s]));
                t.record(bounds::within_even_one_sum_cap(&c, n, k), || {
                    format!("{group}, d = {}, s = {}: {c} over the one-sum cap", d.0, s.0)
                });
                let dec = decompose(&build_graph(&group, &ForbiddanceSpec::new(&group, &[d], &[s])));
                let mut paths = 0;
                let shapes_ok = dec.components().iter().all(|c| match c.kind {
                    ComponentKind::Cycle(4) | ComponentKind::LoopedPair | ComponentKind::Looped => true,
                    ComponentKind::Path(2) => {
                        paths += 1;
                        true
                    }
                    _ => false,
                });
                t.record(shapes_ok && 2 * paths <= k + 1, || {
                    format!("{group}, d = {}, s = {}: {:?}", d.0, s.0, dec.summary())
                });
            }
        }
        for d1 in nonzero(&group) {
            for d2 in nonzero(&group).filter(|&x| x > d1) {
                let c = BigUint::from(table.count_avoiding(&[d1, d2], &[]));
                if orders[d1.0] == 2 && orders[d2.0] == 2 {
                    t.record(c == seven_quarter_exact(n) && n % 4 == 0, || {
                        format!("{group}, d = {}, {}: {c} != 7^({n}/4)", d1.0, d2.0)
                    });
                    let dec = decompose(&build_graph(&group, &ForbiddanceSpec::new(&group, &[d1, d2], &[])));
                    t.record(dec.summary() == vec![(ComponentKind::Cycle(4), n / 4)], || {
                        format!("{group}, d = {}, {}: {:?}", d1.0, d2.0, dec.summary())
                    });
                } else {
                    t.record(bounds::within_seven_quarter(&c, n), || {
                        format!("{group}, d = {}, {}: {c} > 7^({n}/4)", d1.0, d2.0)
                    });
                }
            }
        }
    }
    Ok(t.finish(format!("even groups |G| <= {max_order}")))
}

fn generic_pair(group: &GroupSpec, d1: GroupElement, d2: GroupElement) -> bool {
    d1 != d2
        && d1 != group.neg(d2)
        && group.double(d1) != GroupElement::ZERO
        && group.double(d2) != GroupElement::ZERO
}

/// Odd-order caps `< 15^(|G|/6)` and `<= 31^(|G|/8)`, plus 4-regularity of
/// the two-difference graphs.
pub fn odd_lemmas(max_order: usize) -> Result<CheckOutcome> {
    let mut t = Tally::new("odd-lemmas");
    for group in groups_in_range(3, max_order) {
        if group.is_even() {
            continue;
        }
        let n = group.order();
        let table = SumDiffTable::build(&group)?;
        for d in nonzero(&group) {
            for s in group.elements() {
                let c = BigUint::from(table.count_avoiding(&[d], &[s]));
                t.record(bounds::below_fifteen_sixth(&c, n), || {
                    format!("{group}, d = {}, s = {}: {c} >= 15^({n}/6)", d.0, s.0)
                });
            }
        }
        for d1 in nonzero(&group) {
            for d2 in nonzero(&group).filter(|&x| x > d1 && generic_pair(&group, d1, x)) {
                let c = BigUint::from(table.count_avoiding(&[d1, d2], &[]));
                t.record(bounds::within_thirty_one_eighth(&c, n), || {
                    format!("{group}, d = {}, {}: {c} > 31^({n}/8)", d1.0, d2.0)
                });
                let graph = build_graph(&group, &ForbiddanceSpec::new(&group, &[d1, d2], &[]));
                t.record(!graph.has_loops() && graph.regular_degree() == Some(4), || {
                    format!("{group}, d = {}, {}: not simple 4-regular", d1.0, d2.0)
                });
            }
        }
    }
    Ok(t.finish(format!("odd groups |G| <= {max_order}")))
}

/// One odd-order difference and one sum: only prisms and ladders remain after
/// deleting looped vertices, `2 n_P + n_L = |G|/l`, and each ladder carries at
/// most one looped vertex.
pub fn prism_ladder(max_order: usize) -> CheckOutcome {
    let mut t = Tally::new("prism-ladder");
    for group in groups_in_range(3, max_order) {
        if group.is_even() {
            continue;
        }
        let n = group.order();
        for d in nonzero(&group) {
            let l = group.element_order(d);
            for s in group.elements() {
                let graph = build_graph(&group, &ForbiddanceSpec::new(&group, &[d], &[s]));
                let dec = decompose(&graph);
                let rungs = (l - 1) / 2;
                let shapes_ok = dec.components().iter().all(|c| match &c.kind {
                    ComponentKind::Prism(m) => *m == l,
                    ComponentKind::Looped => true,
                    kind => kind.ladder_rungs() == Some(rungs),
                });
                let balance = 2 * dec.prism_count() + dec.ladder_count() == n / l;
                let loops_ok = dec.looped_vertices() <= n / l;
                t.record(shapes_ok && balance && loops_ok, || {
                    format!("{group}, d = {}, s = {}: {:?}", d.0, s.0, dec.summary())
                });
            }
        }
    }
    t.finish(format!("odd groups |G| <= {max_order}"))
}

// ----------------------------------------------------------------------------
// Closed forms
// ----------------------------------------------------------------------------

fn generic_count(g: &Graph) -> BigUint {
    BigUint::from(count_independent_sets(&g.adjacency_masks()))
}

/// Closed-form indices against the generic counter, spot values, the ladder
/// closed form in high precision and multiplicativity over random unions.
pub fn appendix(path_max: usize, ladder_max: usize, seed: u64) -> Result<CheckOutcome> {
    let mut t = Tally::new("appendix");
    for n in 0..=path_max {
        let c = generic_count(&Graph::path(n));
        t.record(fib::index_path(n as u32) == c, || format!("P_{n}: generic {c}"));
    }
    for n in 3..=path_max {
        let c = generic_count(&Graph::cycle(n));
        t.record(fib::index_cycle(n as u32) == c, || format!("C_{n}: generic {c}"));
    }
    for n in 0..=ladder_max {
        let c = generic_count(&Graph::ladder(n));
        t.record(fib::index_ladder(n as u32) == c, || format!("P_{n}[]P_2: generic {c}"));
    }
    for n in 3..=ladder_max {
        let c = generic_count(&Graph::prism(n));
        t.record(fib::index_prism(n as u32) == c, || format!("C_{n}[]P_2: generic {c}"));
    }
    for (name, value, expect) in [
        ("P_2", fib::index_path(2), 3u32),
        ("C_4", fib::index_cycle(4), 7),
        ("C_3[]P_2", fib::index_prism(3), 13),
        ("P_3[]P_2", fib::index_ladder(3), 17),
    ] {
        t.record(value == BigUint::from(expect), || format!("{name} = {value}, expected {expect}"));
    }

    // 2 a_n = (1 + sqrt 2)^(n+1) + (1 - sqrt 2)^(n+1)
    let bits = 256;
    let root2 = Interval::sqrt_rational(&num_rational::BigRational::from_integer(2.into()), bits);
    let one = Interval::from_int(1, bits);
    let (up, down) = (one.add(&root2), one.sub(&root2));
    for n in 0..=50u32 {
        let closed = up.pow(n + 1).add(&down.pow(n + 1));
        let exact = Interval::from_int(num_bigint::BigInt::from(fib::index_ladder(n)) * 2, bits);
        let err = closed.sub(&exact);
        let tol = exact.lower() / num_rational::BigRational::from_integer(1_000_000_000.into());
        t.record(err.upper() <= tol && -err.lower() <= tol, || {
            format!("ladder closed form off at n = {n}")
        });
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..50 {
        let mut union = Graph::empty(0);
        let mut product = BigUint::from(1u32);
        let mut parts = String::new();
        for _ in 0..rng.gen_range(1..=4) {
            let m = rng.gen_range(3..=6);
            let (g, v) = match rng.gen_range(0..4) {
                0 => (Graph::path(m), fib::index_path(m as u32)),
                1 => (Graph::cycle(m), fib::index_cycle(m as u32)),
                2 => (Graph::ladder(m), fib::index_ladder(m as u32)),
                _ => (Graph::prism(m), fib::index_prism(m as u32)),
            };
            let _ = write!(parts, "{} ", g.vertex_count());
            union = union.disjoint_union(&g);
            product *= v;
        }
        let index = fib_index_exact(&union)?;
        t.record(index == product, || format!("union of sizes {parts}: {index} != {product}"));
    }
    Ok(t.finish(format!(
        "paths/cycles n <= {path_max}, ladders/prisms n <= {ladder_max}, 50 unions (seed {seed})"
    )))
}

/// Regular-graph bound on prisms `3..=prism_max` and on every simple
/// 4-regular two-difference Cayley graph with `|G| <= max_order`.
pub fn kahn_zhao(prism_max: usize, max_order: usize) -> Result<CheckOutcome> {
    let mut t = Tally::new("kahn-zhao");
    for n in 3..=prism_max {
        let r = regular_bound_check(&Graph::prism(n))?;
        t.record(r.holds, || format!("C_{n}[]P_2: index {}", r.index));
    }
    for group in groups_in_range(5, max_order) {
        for d1 in nonzero(&group) {
            for d2 in nonzero(&group).filter(|&x| x > d1 && generic_pair(&group, d1, x)) {
                let graph = build_graph(&group, &ForbiddanceSpec::new(&group, &[d1, d2], &[]));
                let r = regular_bound_check(&graph)?;
                t.record(r.holds && r.degree == 4, || {
                    format!("{group}, d = {}, {}: degree {}, index {}", d1.0, d2.0, r.degree, r.index)
                });
            }
        }
    }
    Ok(t.finish(format!("prisms n <= {prism_max}, Cayley graphs |G| <= {max_order}")))
}

// ----------------------------------------------------------------------------
// Bounds
// ----------------------------------------------------------------------------

/// `lower <= |MSTD(G)| <= upper` for each listed group.
pub fn sandwich(groups: &[GroupSpec], scan: &ScanConfig, bits: u32) -> Result<CheckOutcome> {
    let mut t = Tally::new("sandwich");
    for group in groups {
        let count = count_mstd(group, scan)?.mstd_count;
        let upper = bounds::upper_bound(group)?;
        let lower = bounds::lower_bound(group, bits)?;
        t.record(count <= upper && lower.admits(&count), || {
            format!("{group}: count {count}, upper {upper}, lower {}", lower.floor())
        });
    }
    Ok(t.finish(format!("{} groups", groups.len())))
}

/// `|MSTD(G)| <= upper` only, for groups beyond the full sandwich range.
pub fn upper_only(groups: &[GroupSpec], scan: &ScanConfig) -> Result<CheckOutcome> {
    let mut t = Tally::new("sandwich");
    for group in groups {
        let count = count_mstd(group, scan)?.mstd_count;
        let upper = bounds::upper_bound(group)?;
        t.record(count <= upper, || format!("{group}: count {count} > upper {upper}"));
    }
    Ok(t.finish(format!("upper bound on {} groups", groups.len())))
}

/// The upper bound does not depend on the half-set representative rule.
pub fn upper_choice(max_order: usize) -> Result<CheckOutcome> {
    let mut t = Tally::new("upper-choice");
    for group in groups_in_range(2, max_order) {
        let a = bounds::upper_bound_with(&group, TieRule::LowerIndex)?;
        let b = bounds::upper_bound_with(&group, TieRule::HigherIndex)?;
        t.record(a == b, || format!("{group}: {a} != {b}"));
    }
    Ok(t.finish(format!("groups 2 <= |G| <= {max_order}")))
}

/// `|MSTD(G)| - k 3^(|G|/2) <= |G| 7^(|G|/4)` for the even groups listed.
pub fn even_ratio(groups: &[GroupSpec], scan: &ScanConfig) -> Result<CheckOutcome> {
    let mut t = Tally::new("even-ratio");
    for group in groups.iter().filter(|g| g.is_even()) {
        let count = count_mstd(group, scan)?.mstd_count;
        let ok = bounds::within_even_ratio_cap(group, &count)?;
        t.record(ok, || format!("{group}: count {count} above the ratio cap"));
    }
    Ok(t.finish(format!("even groups among {}", groups.len())))
}

pub fn lucas(limit: u32) -> CheckOutcome {
    let mut t = Tally::new("lucas");
    let m = bounds::lucas_root_monotonic(limit);
    t.record(m.even_decreasing, || "even roots not decreasing".into());
    t.record(m.odd_increasing, || "odd roots not increasing".into());
    t.record(m.dominance, || "L_4^(1/4) does not dominate".into());
    t.finish(format!("n <= {limit}"))
}

/// Ladder cap for odd `l` and the matching prism cap `i(C_l [] P_2)^6 < 15^(2l)`.
pub fn ladder_cap(max_l: u32) -> CheckOutcome {
    let mut t = Tally::new("ladder-cap");
    for l in (3..=max_l).step_by(2) {
        t.record(bounds::ladder_cap_holds(l), || format!("ladder cap fails at l = {l}"));
    }
    for l in 3..=max_l {
        let lhs = fib::index_prism(l).pow(6);
        let rhs = BigUint::from(15u32).pow(2 * l);
        t.record(lhs < rhs, || format!("prism cap fails at l = {l}"));
    }
    t.finish(format!("l <= {max_l}"))
}

/// Odd-sum bracket and termwise Bernoulli bound at `bits` of precision.
pub fn odd_bracket(max_order: usize, bits: u32) -> Result<CheckOutcome> {
    let mut t = Tally::new("odd-bracket");
    for group in groups_in_range(3, max_order) {
        if group.is_even() {
            continue;
        }
        let b = bounds::odd_sum_bracket(&group, bits)?;
        t.record(b.holds && b.bernoulli_holds, || {
            format!(
                "{group}: sum ~ {} outside [{}, {}] or Bernoulli step fails",
                b.sum.to_decimal(6),
                b.lower,
                b.upper
            )
        });
    }
    Ok(t.finish(format!("odd groups |G| <= {max_order}, {bits} bits")))
}

// ----------------------------------------------------------------------------
// Examples and lifts
// ----------------------------------------------------------------------------

pub fn conway() -> CheckOutcome {
    let mut t = Tally::new("conway");
    let r = integer_mstd_check(&IntegerSet::new([0, 2, 3, 4, 7, 11, 12, 14]));
    t.record(r.is_mstd && r.sums == 26 && r.differences == 25, || {
        format!("got ({}, {}, {})", r.is_mstd, r.sums, r.differences)
    });
    t.finish("{0,2,3,4,7,11,12,14}")
}

/// `Z/8` with forbidden difference 1 and forbidden sum 4, by graph and by scan.
pub fn figure() -> Result<CheckOutcome> {
    let mut t = Tally::new("figure");
    let group = GroupSpec::cyclic(8)?;
    let (d, s) = (els(&[1]), els(&[4]));
    let index = fib_index_exact(&build_graph(&group, &ForbiddanceSpec::new(&group, &d, &s)))?;
    let direct = SumDiffTable::build(&group)?.count_avoiding(&d, &s);
    t.record(index == BigUint::from(17u32) && direct == 17, || {
        format!("index {index}, direct {direct}")
    });
    Ok(t.finish("Z/8, D = {1}, S = {4}"))
}

/// For each cyclic `Z/n`, `n <= max_order`, lifts up to `per_group` seeded
/// MSTD sets and records the smallest `k <= max_k` giving an integer MSTD set.
pub fn lift(max_order: usize, per_group: usize, max_k: usize, seed: u64) -> Result<CheckOutcome> {
    let mut t = Tally::new("lift");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut found = Vec::new();
    for n in 2..=max_order {
        let group = GroupSpec::cyclic(n)?;
        let table = SumDiffTable::build(&group)?;
        let mstd: Vec<u64> = (0..table.len() as u64)
            .filter(|&a| table.sumset(a).count_ones() > table.diffset(a).count_ones())
            .collect();
        for _ in 0..per_group.min(mstd.len()) {
            let a = SubsetMask::from_u64(n, mstd[rng.gen_range(0..mstd.len())]);
            let k0 = minimal_lift_multiplier(n, &a, max_k)?;
            t.record(k0.is_some(), || format!("Z/{n}, A = {}: no k <= {max_k}", a.to_literal()));
            if let Some(k0) = k0 {
                found.push(format!("Z/{n} {} k0={k0}", a.to_literal()));
            }
        }
    }
    let sample = found.first().cloned().unwrap_or_else(|| "no MSTD sets in range".into());
    Ok(t.finish(format!("cyclic n <= {max_order}, seed {seed}; e.g. {sample}")))
}

/// `count_mstd` is identical for every thread count (`0` means all cores).
pub fn threads(groups: &[GroupSpec], counts: &[usize]) -> Result<CheckOutcome> {
    let mut t = Tally::new("threads");
    for group in groups {
        let mut seen: Option<BigUint> = None;
        for &threads in counts {
            let c = count_mstd(group, &ScanConfig::with_threads(threads))?.mstd_count;
            let same = seen.as_ref().is_none_or(|s| *s == c);
            t.record(same, || format!("{group}: {c} at {threads} threads"));
            seen.get_or_insert(c);
        }
    }
    Ok(t.finish(format!("{} groups, threads {counts:?}", groups.len())))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small() -> VerifyConfig {
        VerifyConfig {
            max_order: 9,
            ..Default::default()
        }
    }

    #[test]
    fn every_check_passes_at_small_order() {
        for outcome in run_all(&small(), &[]).unwrap() {
            assert!(outcome.passed, "{}: {}", outcome.name, outcome.detail);
            // no cyclic group below Z/12 has an MSTD set
            if outcome.name != "lift" {
                assert!(outcome.cases > 0, "{} ran no cases", outcome.name);
            }
        }
    }

    #[test]
    fn lifts_from_z12() {
        let o = lift(12, 3, 64, 7).unwrap();
        assert!(o.passed, "{}", o.detail);
        assert_eq!(o.cases, 3);
    }

    #[test]
    fn unknown_check_is_an_error() {
        assert!(matches!(run("nope", &small()), Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn failures_report_first_counterexample() {
        let mut t = Tally::new("demo");
        t.record(true, || unreachable!());
        t.record(false, || "first".into());
        t.record(false, || "second".into());
        let o = t.finish("scope");
        assert!(!o.passed);
        assert_eq!(o.cases, 3);
        assert_eq!(o.detail, "2/3 failed; first: first; scope");
    }
}
