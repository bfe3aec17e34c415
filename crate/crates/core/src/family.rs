//! Sweeps over groups: every multiset of cyclic factors with a given product.
//!
//! Deduplication is by factor multiset only. `4,2` and `2,4` collapse, but
//! isomorphic presentations such as `6` and `3,2` are both kept.

use crate::group::GroupSpec;

/// Non-increasing factor lists `a_1 >= a_2 >= ... >= 2` with product `n`.
pub fn factorizations(n: usize) -> Vec<Vec<usize>> {
    fn rec(rest: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 1 {
            out.push(prefix.clone());
            return;
        }
        for a in (2..=max.min(rest)).rev() {
            if rest % a == 0 {
                prefix.push(a);
                rec(rest / a, a, prefix, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    if n == 1 {
        out.push(Vec::new());
    } else if n > 1 {
        rec(n, n, &mut Vec::new(), &mut out);
    }
    out
}

/// All groups of order exactly `n`, one per factor multiset.
pub fn groups_of_order(n: usize) -> Vec<GroupSpec> {
    factorizations(n)
        .into_iter()
        .filter_map(|f| GroupSpec::new(f).ok())
        .collect()
}

/// All groups with `min <= |G| <= max`, sorted by order then presentation.
pub fn groups_in_range(min: usize, max: usize) -> Vec<GroupSpec> {
    (min.max(1)..=max).flat_map(groups_of_order).collect()
}

/// Named families used by the table harness.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    /// `Z/n` for even `n` in range.
    CyclicEven,
    /// `Z/n` for odd `n` in range.
    CyclicOdd,
    /// `Z/n` for every `n` in range.
    Cyclic,
    /// `Z/n x Z/2` for `n` in range (so `|G| = 2n`).
    CyclicTimesTwo,
    /// Every factor multiset with product in range.
    All,
}

impl Family {
    pub fn parse(s: &str) -> Option<Family> {
        match s {
            "cyclic-even" => Some(Family::CyclicEven),
            "cyclic-odd" => Some(Family::CyclicOdd),
            "cyclic" => Some(Family::Cyclic),
            "Zn-x-Z2" | "zn-x-z2" => Some(Family::CyclicTimesTwo),
            "all" => Some(Family::All),
            _ => None,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Family::CyclicEven => "cyclic-even",
            Family::CyclicOdd => "cyclic-odd",
            Family::Cyclic => "cyclic",
            Family::CyclicTimesTwo => "Zn-x-Z2",
            Family::All => "all",
        }
    }

    /// Members with parameter in `[min, max]`.
    pub fn members(self, min: usize, max: usize) -> Vec<GroupSpec> {
        let lo = min.max(2);
        match self {
            Family::CyclicEven => (lo..=max)
                .filter(|n| n % 2 == 0)
                .filter_map(|n| GroupSpec::cyclic(n).ok())
                .collect(),
            Family::CyclicOdd => (lo..=max)
                .filter(|n| n % 2 == 1)
                .filter_map(|n| GroupSpec::cyclic(n).ok())
                .collect(),
            Family::Cyclic => (lo..=max).filter_map(|n| GroupSpec::cyclic(n).ok()).collect(),
            Family::CyclicTimesTwo => (lo..=max)
                .filter_map(|n| GroupSpec::new(vec![n, 2]).ok())
                .collect(),
            Family::All => groups_in_range(lo, max),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factorizations_of_small_orders() {
        assert_eq!(factorizations(1), vec![Vec::<usize>::new()]);
        assert_eq!(factorizations(7), vec![vec![7]]);
        assert_eq!(
            factorizations(12),
            vec![vec![12], vec![6, 2], vec![4, 3], vec![3, 2, 2]]
        );
        assert_eq!(factorizations(16).len(), 5);
    }

    #[test]
    fn products_match() {
        for g in groups_in_range(1, 40) {
            assert_eq!(g.factors().iter().product::<usize>(), g.order());
        }
    }

    #[test]
    fn families() {
        let names: Vec<String> = Family::CyclicTimesTwo
            .members(4, 6)
            .iter()
            .map(|g| g.to_string())
            .collect();
        assert_eq!(names, ["4,2", "5,2", "6,2"]);
        assert_eq!(Family::CyclicOdd.members(9, 13).len(), 3);
        assert_eq!(Family::parse("Zn-x-Z2"), Some(Family::CyclicTimesTwo));
        assert_eq!(Family::parse("nope"), None);
    }
}
