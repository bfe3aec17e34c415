//! Finite abelian groups presented as products of cyclic factors.
//!
//! Elements are indexed mixed-radix over the factor list as given, with the
//! first factor as the least significant digit:
//! `index = e_1 + a_1 * (e_2 + a_2 * (e_3 + ...))`.
//! No normal-form reduction happens, so `12,2` and `2,12` index differently.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest group order for which element tables are built.
pub const MAX_GROUP_ORDER: usize = 1 << 20;

/// An element of a [`GroupSpec`], identified by its canonical index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct GroupElement(pub usize);

impl GroupElement {
    pub const ZERO: GroupElement = GroupElement(0);

    #[inline]
    pub fn index(self) -> usize {
        self.0
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// `Z/a_1 x ... x Z/a_r`. The trivial group has no factors.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GroupSpec {
    factors: Vec<usize>,
    strides: Vec<usize>,
    order: usize,
}

/// Which representative of `{d, -d}` a half-set keeps.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum TieRule {
    /// Keep `d` iff `index(d) <= index(-d)`.
    #[default]
    LowerIndex,
    /// Keep `d` iff `index(d) >= index(-d)`.
    HigherIndex,
}

/// Cutoff for [`GroupSpec::small_order_set`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum OrderThreshold {
    /// Orders strictly below this value.
    Value(f64),
    /// Orders strictly below `log_phi |G|`, decided in exact arithmetic.
    LogPhiOfOrder,
}

impl GroupSpec {
    /// Builds a group from cyclic orders, each at least 2. An empty list is the
    /// trivial group.
    pub fn new(factors: Vec<usize>) -> Result<Self> {
        let input = factors
            .iter()
            .map(|a| a.to_string())
            .collect::<Vec<_>>()
            .join(",");
        let mut order: usize = 1;
        for &a in &factors {
            if a < 2 {
                return Err(Error::GroupParse {
                    input,
                    reason: format!("cyclic factor {a} is smaller than 2"),
                });
            }
            order = order
                .checked_mul(a)
                .filter(|&o| o <= MAX_GROUP_ORDER)
                .ok_or(Error::GroupTooLarge {
                    order: order.saturating_mul(a),
                    max: MAX_GROUP_ORDER,
                })?;
        }
        let mut strides = Vec::with_capacity(factors.len());
        let mut stride = 1;
        for &a in &factors {
            strides.push(stride);
            stride *= a;
        }
        Ok(GroupSpec {
            factors,
            strides,
            order,
        })
    }

    pub fn cyclic(n: usize) -> Result<Self> {
        if n == 1 {
            Self::new(Vec::new())
        } else {
            Self::new(vec![n])
        }
    }

    pub fn trivial() -> Self {
        Self::new(Vec::new()).expect("trivial group")
    }

    pub fn factors(&self) -> &[usize] {
        &self.factors
    }

    /// `|G|`.
    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    /// Number of cyclic factors in this presentation.
    pub fn factor_count(&self) -> usize {
        self.factors.len()
    }

    /// Minimal number of cyclic factors over all presentations: the largest
    /// count of factors sharing a common prime divisor.
    pub fn rank(&self) -> usize {
        let mut primes: Vec<usize> = Vec::new();
        for &a in &self.factors {
            let mut m = a;
            let mut p = 2;
            while p * p <= m {
                if m % p == 0 {
                    primes.push(p);
                    while m % p == 0 {
                        m /= p;
                    }
                }
                p += 1;
            }
            if m > 1 {
                primes.push(m);
            }
        }
        primes.sort_unstable();
        primes.dedup();
        primes
            .iter()
            .map(|&p| self.factors.iter().filter(|&&a| a % p == 0).count())
            .max()
            .unwrap_or(0)
    }

    pub fn is_even(&self) -> bool {
        self.order % 2 == 0
    }

    pub fn elements(&self) -> impl Iterator<Item = GroupElement> + '_ {
        (0..self.order).map(GroupElement)
    }

    pub fn element(&self, index: usize) -> Result<GroupElement> {
        if index < self.order {
            Ok(GroupElement(index))
        } else {
            Err(Error::ElementOutOfRange {
                index,
                order: self.order,
            })
        }
    }

    /// Coordinates `(e_1, ..., e_r)` of an element.
    pub fn digits(&self, g: GroupElement) -> Vec<usize> {
        self.factors
            .iter()
            .zip(&self.strides)
            .map(|(&a, &s)| (g.0 / s) % a)
            .collect()
    }

    pub fn from_digits(&self, digits: &[usize]) -> Result<GroupElement> {
        if digits.len() != self.factors.len() {
            return Err(Error::InvalidArgument(format!(
                "expected {} coordinates, got {}",
                self.factors.len(),
                digits.len()
            )));
        }
        let mut index = 0;
        for ((&e, &a), &s) in digits.iter().zip(&self.factors).zip(&self.strides) {
            if e >= a {
                return Err(Error::InvalidArgument(format!(
                    "coordinate {e} out of range for Z/{a}"
                )));
            }
            index += e * s;
        }
        Ok(GroupElement(index))
    }

    #[inline]
    pub fn add(&self, x: GroupElement, y: GroupElement) -> GroupElement {
        let mut index = 0;
        for (&a, &s) in self.factors.iter().zip(&self.strides) {
            let e = ((x.0 / s) % a + (y.0 / s) % a) % a;
            index += e * s;
        }
        GroupElement(index)
    }

    #[inline]
    pub fn neg(&self, x: GroupElement) -> GroupElement {
        let mut index = 0;
        for (&a, &s) in self.factors.iter().zip(&self.strides) {
            let e = (x.0 / s) % a;
            index += ((a - e) % a) * s;
        }
        GroupElement(index)
    }

    #[inline]
    pub fn sub(&self, x: GroupElement, y: GroupElement) -> GroupElement {
        self.add(x, self.neg(y))
    }

    #[inline]
    pub fn double(&self, x: GroupElement) -> GroupElement {
        self.add(x, x)
    }

    /// `m * x`.
    pub fn scale(&self, m: usize, x: GroupElement) -> GroupElement {
        let mut index = 0;
        for (&a, &s) in self.factors.iter().zip(&self.strides) {
            let e = ((x.0 / s) % a) * (m % a) % a;
            index += e * s;
        }
        GroupElement(index)
    }

    /// Smallest `m >= 1` with `m * g = 0`.
    pub fn element_order(&self, g: GroupElement) -> usize {
        self.factors
            .iter()
            .zip(&self.strides)
            .map(|(&a, &s)| a / a.gcd(&((g.0 / s) % a)))
            .fold(1, |acc, o| acc.lcm(&o))
    }

    /// Orders of all elements, indexed by element.
    pub fn order_table(&self) -> Vec<usize> {
        self.elements().map(|g| self.element_order(g)).collect()
    }

    /// `exponent(G)`: the lcm of the factors.
    pub fn exponent(&self) -> usize {
        self.factors.iter().fold(1, |acc, a| acc.lcm(a))
    }

    /// Number of elements of order exactly 2: `2^(#even factors) - 1`.
    pub fn order_two_count(&self) -> usize {
        let even = self.factors.iter().filter(|&&a| a % 2 == 0).count();
        (1usize << even) - 1
    }

    /// A transversal of `{d, -d}` over nonzero elements, chosen by `rule`.
    pub fn half_set_with(&self, rule: TieRule) -> Vec<GroupElement> {
        self.elements()
            .skip(1)
            .filter(|&d| {
                let n = self.neg(d);
                match rule {
                    TieRule::LowerIndex => d <= n,
                    TieRule::HigherIndex => d >= n,
                }
            })
            .collect()
    }

    /// The canonical half-set `G'` (lower index wins).
    pub fn half_set(&self) -> Vec<GroupElement> {
        self.half_set_with(TieRule::LowerIndex)
    }

    /// All elements whose order is strictly below the threshold.
    pub fn small_order_set(&self, threshold: OrderThreshold) -> Vec<GroupElement> {
        let n = self.order as u64;
        self.elements()
            .filter(|&g| {
                let ord = self.element_order(g);
                match threshold {
                    OrderThreshold::Value(t) => (ord as f64) < t,
                    OrderThreshold::LogPhiOfOrder => crate::fib::phi_power_below(ord as u32, n),
                }
            })
            .collect()
    }

    /// `|{g : ord(g) < t}|` and whether it is below `t^(rank + 1)`.
    pub fn count_order_below(&self, t: usize) -> (usize, bool) {
        let count = self
            .elements()
            .filter(|&g| self.element_order(g) < t)
            .count();
        let bound = num_bigint::BigUint::from(t).pow(self.rank() as u32 + 1);
        (count, num_bigint::BigUint::from(count) < bound)
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self.factors.iter().map(|a| a.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl FromStr for GroupSpec {
    type Err = Error;

    /// Parses `"8"`, `"12,2"`, or `"1"` for the trivial group.
    fn from_str(s: &str) -> Result<Self> {
        let err = |reason: String| Error::GroupParse {
            input: s.to_string(),
            reason,
        };
        let trimmed = s.trim();
        if trimmed.is_empty() {
            return Err(err("empty group spec".into()));
        }
        let factors = trimmed
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map_err(|e| err(format!("`{}`: {e}", p.trim())))
            })
            .collect::<Result<Vec<_>>>()?;
        if factors == [1] {
            return Ok(GroupSpec::trivial());
        }
        GroupSpec::new(factors).map_err(|e| match e {
            Error::GroupParse { reason, .. } => err(reason),
            other => other,
        })
    }
}

impl Serialize for GroupSpec {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for GroupSpec {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(s: &str) -> GroupSpec {
        s.parse().unwrap()
    }

    #[test]
    fn parse_and_display_round_trip() {
        for s in ["8", "12,2", "1", "2,2,2", "3,9"] {
            assert_eq!(g(s).to_string(), s);
        }
        assert_eq!(g(" 12 , 2 ").to_string(), "12,2");
        assert!("".parse::<GroupSpec>().is_err());
        assert!("0".parse::<GroupSpec>().is_err());
        assert!("1,2".parse::<GroupSpec>().is_err());
        assert!("x".parse::<GroupSpec>().is_err());
        assert!(matches!(
            "2048,1024".parse::<GroupSpec>(),
            Err(Error::GroupTooLarge { .. })
        ));
    }

    #[test]
    fn mixed_radix_indexing() {
        let grp = g("3,4");
        assert_eq!(grp.order(), 12);
        for x in grp.elements() {
            assert_eq!(grp.from_digits(&grp.digits(x)).unwrap(), x);
        }
        assert_eq!(grp.digits(GroupElement(7)), vec![1, 2]);
    }

    #[test]
    fn element_orders() {
        assert_eq!(g("12").element_order(GroupElement(8)), 3);
        assert_eq!(g("8").element_order(GroupElement(1)), 8);
        assert_eq!(g("8").element_order(GroupElement::ZERO), 1);
        assert_eq!(GroupSpec::trivial().element_order(GroupElement::ZERO), 1);
        // (1, 1) in Z/2 x Z/3 has order 6
        let grp = g("2,3");
        let x = grp.from_digits(&[1, 1]).unwrap();
        assert_eq!(grp.element_order(x), 6);
    }

    #[test]
    fn order_two_counts() {
        assert_eq!(g("12").order_two_count(), 1);
        assert_eq!(g("9").order_two_count(), 0);
        assert_eq!(g("6,2").order_two_count(), 3);
        assert_eq!(g("2,2,2").order_two_count(), 7);
    }

    #[test]
    fn half_sets() {
        let idx = |v: Vec<GroupElement>| v.into_iter().map(|e| e.0).collect::<Vec<_>>();
        assert_eq!(idx(g("8").half_set()), vec![1, 2, 3, 4]);
        assert_eq!(idx(g("2").half_set()), vec![1]);
        assert_eq!(idx(g("5").half_set()), vec![1, 2]);
        assert_eq!(idx(g("8").half_set_with(TieRule::HigherIndex)), vec![4, 5, 6, 7]);
        assert!(GroupSpec::trivial().half_set().is_empty());
    }

    #[test]
    fn small_order_sets() {
        let idx = |v: Vec<GroupElement>| v.into_iter().map(|e| e.0).collect::<Vec<_>>();
        assert_eq!(idx(g("9").small_order_set(OrderThreshold::Value(3.0))), vec![0]);
        assert_eq!(idx(g("9").small_order_set(OrderThreshold::Value(4.0))), vec![0, 3, 6]);
        assert_eq!(idx(g("3").small_order_set(OrderThreshold::LogPhiOfOrder)), vec![0]);
        // log_phi 81 ~ 9.13: orders 1, 3, 9 qualify in Z/81
        let e = g("81").small_order_set(OrderThreshold::LogPhiOfOrder);
        assert_eq!(e.len(), 9);
    }

    #[test]
    fn order_below_counts() {
        assert_eq!(g("12").count_order_below(3), (2, true));
        assert_eq!(g("2,2").count_order_below(3), (4, true));
        assert_eq!(g("7").count_order_below(1), (0, true));
    }

    #[test]
    fn ranks() {
        assert_eq!(g("12,2").rank(), 2);
        assert_eq!(g("3,4").rank(), 1);
        assert_eq!(g("6,10,15").rank(), 2);
        assert_eq!(GroupSpec::trivial().rank(), 0);
    }

    #[test]
    fn small_group_invariants() {
        for grp in crate::family::groups_in_range(1, 64) {
            let n = grp.order();
            let k = grp.order_two_count();
            assert_eq!(grp.half_set().len(), (n - 1 + k) / 2, "{grp}");
            let orders = grp.order_table();
            assert_eq!(orders.iter().filter(|&&o| o == 2).count(), k, "{grp}");
            for (i, &o) in orders.iter().enumerate() {
                assert_eq!(n % o, 0);
                assert_eq!(grp.scale(o, GroupElement(i)), GroupElement::ZERO);
                assert_eq!(o, grp.element_order(grp.neg(GroupElement(i))));
            }
            for t in 1..=n {
                assert!(grp.count_order_below(t).1, "{grp} t={t}");
            }
        }
    }
}
