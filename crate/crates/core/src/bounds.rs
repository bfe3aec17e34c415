//! Upper, lower and asymptotic expressions for `|MSTD(G)|`.
//!
//! Integral exponents are evaluated exactly. Fractional powers are either
//! compared through cross-powers (`x^(a/b) <= y` iff `x^a <= y^b`) or enclosed
//! with [`Interval`] and rounded in the direction that keeps the inequality
//! valid.

use num_bigint::{BigInt, BigUint, Sign};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::fib::{companion_pell, index_ladder, lucas, pell};
use crate::group::{GroupElement, GroupSpec, OrderThreshold, TieRule};
use crate::interval::{biguint_rational, rational_to_decimal, Interval};

fn int(n: &BigUint) -> BigInt {
    BigInt::from_biguint(Sign::Plus, n.clone())
}

fn big(n: usize) -> BigUint {
    BigUint::from(n)
}

/// Default working precision: `max(2 |G|, 128)` bits.
pub fn default_precision(group: &GroupSpec) -> u32 {
    (2 * group.order()).max(128) as u32
}

// ============================================================================
// Cross-power comparisons
// ============================================================================

/// `value <= base^(num/den)`, exactly.
pub fn le_fractional_power(value: &BigUint, base: u64, num: u32, den: u32) -> bool {
    value.pow(den) <= BigUint::from(base).pow(num)
}

/// `value < base^(num/den)`, exactly.
pub fn lt_fractional_power(value: &BigUint, base: u64, num: u32, den: u32) -> bool {
    value.pow(den) < BigUint::from(base).pow(num)
}

/// `value <= 7^(n/4)`.
pub fn within_seven_quarter(value: &BigUint, n: usize) -> bool {
    le_fractional_power(value, 7, n as u32, 4)
}

/// `value <= 3^((k+1)/2) * 7^(n/4)`, via fourth powers.
pub fn within_even_one_sum_cap(value: &BigUint, n: usize, k: usize) -> bool {
    value.pow(4) <= BigUint::from(3u32).pow(2 * (k as u32 + 1)) * BigUint::from(7u32).pow(n as u32)
}

/// `value < 15^(n/6)`.
pub fn below_fifteen_sixth(value: &BigUint, n: usize) -> bool {
    lt_fractional_power(value, 15, n as u32, 6)
}

/// `value <= 31^(n/8)`.
pub fn within_thirty_one_eighth(value: &BigUint, n: usize) -> bool {
    le_fractional_power(value, 31, n as u32, 8)
}

/// `i(P_((l-1)/2) [] P_2)^2 < (1 + sqrt 2)^l` for odd `l >= 3`, exactly, using
/// `(1 + sqrt 2)^l = (Q_l + 2 P_l sqrt 2) / 2`.
pub fn ladder_cap_holds(l: u32) -> bool {
    let a = index_ladder((l - 1) / 2);
    let lhs = int(&(&a * &a * 2u32)) - int(&companion_pell(l));
    if !lhs.is_positive() {
        return true;
    }
    let p = int(&pell(l));
    &lhs * &lhs < p.clone() * p * 8
}

// ============================================================================
// Upper bound
// ============================================================================

/// `sum_{d in half} L_ord(d)^(|G| / ord(d))`.
pub fn lucas_power_sum(group: &GroupSpec, half: &[GroupElement]) -> BigUint {
    let n = group.order();
    half.iter()
        .map(|&d| {
            let ord = group.element_order(d);
            lucas(ord as u32).pow((n / ord) as u32)
        })
        .sum()
}

/// The union upper bound, using the half-set chosen by `rule`.
pub fn upper_bound_with(group: &GroupSpec, rule: TieRule) -> Result<BigUint> {
    if group.order() < 2 {
        return Err(Error::GroupTooSmall {
            min: 2,
            order: group.order(),
        });
    }
    Ok(lucas_power_sum(group, &group.half_set_with(rule)))
}

/// `sum_{d in G'} L_ord(d)^(|G| / ord(d))`.
pub fn upper_bound(group: &GroupSpec) -> Result<BigUint> {
    upper_bound_with(group, TieRule::LowerIndex)
}

// ============================================================================
// Lower bounds
// ============================================================================

/// A real bound value. `value` is exact when `exact`, otherwise it was
/// rounded in the direction that preserves the bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundValue {
    pub value: BigRational,
    pub exact: bool,
    pub bits: Option<u32>,
}

impl BoundValue {
    /// Largest integer `<= value`. Still a lower bound for an integer count.
    pub fn floor(&self) -> BigInt {
        self.value.floor().to_integer()
    }

    pub fn is_negative(&self) -> bool {
        self.value.is_negative()
    }

    pub fn to_f64(&self) -> f64 {
        self.value.to_f64().unwrap_or(f64::NAN)
    }

    /// `value <= count`.
    pub fn admits(&self, count: &BigUint) -> bool {
        self.value <= biguint_rational(count)
    }
}

fn even_parts(group: &GroupSpec) -> Result<(usize, usize)> {
    let n = group.order();
    if n % 2 != 0 {
        return Err(Error::WrongParity {
            expected: "even",
            order: n,
        });
    }
    let k = group.order_two_count();
    Ok((n, k))
}

/// `(7/9)^(n/4)`, exact when `4 | n`, otherwise rounded up.
fn seven_ninths_power_up(n: usize, bits: u32) -> (BigRational, bool) {
    let base = BigRational::new(7.into(), 9.into());
    if n % 4 == 0 {
        return (base.pow((n / 4) as i32), true);
    }
    let enc = Interval::pow_ratio(&base, n as u32, 4, bits);
    let exact = enc.lower() == enc.upper();
    (enc.upper(), exact)
}

/// `k 3^(n/2) (1 - (n 3^((k+1)/2) + n^2/k) (7/9)^(n/4))` for even `|G|`.
pub fn lower_bound_even(group: &GroupSpec, bits: u32) -> Result<BoundValue> {
    let (n, k) = even_parts(group)?;
    let (r, exact) = seven_ninths_power_up(n, bits);
    let lead = BigRational::from_integer(int(&(big(k) * BigUint::from(3u32).pow((n / 2) as u32))));
    let three = BigUint::from(3u32).pow(((k + 1) / 2) as u32);
    let coeff = BigRational::from_integer(int(&(big(n) * three)))
        + BigRational::new(BigInt::from(n * n), BigInt::from(k));
    let value = &lead * (BigRational::one() - coeff * r);
    Ok(BoundValue {
        value,
        exact,
        bits: (!exact).then_some(bits),
    })
}

/// `sum_{G'} L^.. - |G|^2 15^(|G|/6) - |G|^2 31^(|G|/8)` for odd `|G|`, with
/// both subtracted powers rounded up.
pub fn lower_bound_odd(group: &GroupSpec, bits: u32) -> Result<BoundValue> {
    let n = group.order();
    if n % 2 == 0 {
        return Err(Error::WrongParity {
            expected: "odd",
            order: n,
        });
    }
    let sum = biguint_rational(&lucas_power_sum(group, &group.half_set()));
    let fifteen = Interval::pow_ratio(&BigRational::from_integer(15.into()), n as u32, 6, bits);
    let thirty_one = Interval::pow_ratio(&BigRational::from_integer(31.into()), n as u32, 8, bits);
    let exact = fifteen.lower() == fifteen.upper() && thirty_one.lower() == thirty_one.upper();
    let sq = BigRational::from_integer(BigInt::from(n * n));
    let value = sum - &sq * fifteen.upper() - &sq * thirty_one.upper();
    Ok(BoundValue {
        value,
        exact,
        bits: (!exact).then_some(bits),
    })
}

/// The lower bound matching the parity of `|G|`.
pub fn lower_bound(group: &GroupSpec, bits: u32) -> Result<BoundValue> {
    if group.is_even() {
        lower_bound_even(group, bits)
    } else {
        lower_bound_odd(group, bits)
    }
}

// ============================================================================
// Asymptotics and ratios
// ============================================================================

/// Leading term: `k 3^(|G|/2)` (even) or `|G| phi^|G| / 2` (odd).
pub fn asymptotic(group: &GroupSpec, bits: u32) -> Result<Interval> {
    let n = group.order();
    if n == 0 || n == 1 {
        return Err(Error::GroupTooSmall { min: 2, order: n });
    }
    if group.is_even() {
        let k = group.order_two_count();
        Ok(Interval::from_int(
            int(&(big(k) * BigUint::from(3u32).pow((n / 2) as u32))),
            bits,
        ))
    } else {
        Ok(Interval::phi(bits)
            .pow(n as u32)
            .scale(&BigInt::from(n))
            .half())
    }
}

/// `value / (k 3^(n/2)) <= 1 + (n/k) (7/9)^(n/4)`, decided exactly. Both
/// sides times `k 3^(n/2)` reduce to `value - k 3^(n/2) <= n 7^(n/4)`.
pub fn within_even_ratio_cap(group: &GroupSpec, value: &BigUint) -> Result<bool> {
    let (n, k) = even_parts(group)?;
    let lead = big(k) * BigUint::from(3u32).pow((n / 2) as u32);
    if *value <= lead {
        return Ok(true);
    }
    let excess = value - lead;
    if n % 4 == 0 {
        Ok(excess <= big(n) * BigUint::from(7u32).pow((n / 4) as u32))
    } else {
        Ok(&excess * &excess <= big(n * n) * BigUint::from(7u32).pow((n / 2) as u32))
    }
}

/// Actual ratio and guaranteed cap for the even-case upper bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EvenRatio {
    /// `upper_bound(G) / (k 3^(|G|/2))`.
    pub actual: BigRational,
    /// `1 + (|G|/k)(7/9)^(|G|/4)`, rounded up when irrational.
    pub cap: BigRational,
    pub cap_exact: bool,
    /// Decided exactly, independent of the rounding in `cap`.
    pub holds: bool,
}

pub fn even_upper_ratio(group: &GroupSpec, bits: u32) -> Result<EvenRatio> {
    let (n, k) = even_parts(group)?;
    let upper = upper_bound(group)?;
    let lead = big(k) * BigUint::from(3u32).pow((n / 2) as u32);
    let (r, cap_exact) = seven_ninths_power_up(n, bits);
    let cap = BigRational::one() + BigRational::new(BigInt::from(n), BigInt::from(k)) * r;
    Ok(EvenRatio {
        actual: BigRational::new(int(&upper), int(&lead)),
        cap,
        cap_exact,
        holds: within_even_ratio_cap(group, &upper)?,
    })
}

/// Whether `k / |G| < 1 - log_3(7) / 2`, i.e. `7^|G| < 9^(|G| - k)`.
pub fn even_density_condition(group: &GroupSpec) -> bool {
    let n = group.order();
    let k = group.order_two_count();
    n > k && BigUint::from(7u32).pow(n as u32) < BigUint::from(9u32).pow((n - k) as u32)
}

// ============================================================================
// Lucas roots
// ============================================================================

/// Outcome of [`lucas_root_monotonic`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LucasMonotonicity {
    pub limit: u32,
    /// `L_(2j)^(1/2j)` strictly decreasing over the range.
    pub even_decreasing: bool,
    /// `L_(2j-1)^(1/(2j-1))` strictly increasing over the range.
    pub odd_increasing: bool,
    /// `L_2^(1/2) > L_4^(1/4) >= L_m^(1/m)` for all `2 < m <= limit`.
    pub dominance: bool,
}

impl LucasMonotonicity {
    pub fn holds(&self) -> bool {
        self.even_decreasing && self.odd_increasing && self.dominance
    }
}

/// Checks the Lucas root orderings through `limit` with exact cross-powers.
pub fn lucas_root_monotonic(limit: u32) -> LucasMonotonicity {
    let l: Vec<BigUint> = (0..=limit + 2).map(lucas).collect();
    // x^(1/a) vs y^(1/b) compares x^b with y^a
    let cmp = |a: u32, b: u32| l[a as usize].pow(b).cmp(&l[b as usize].pow(a));
    let even_decreasing = (2..=limit)
        .step_by(2)
        .take_while(|m| m + 2 <= limit)
        .all(|m| cmp(m, m + 2).is_gt());
    let odd_increasing = (1..=limit)
        .step_by(2)
        .take_while(|m| m + 2 <= limit)
        .all(|m| cmp(m, m + 2).is_lt());
    let dominance = limit < 4
        || (cmp(2, 4).is_gt() && (3..=limit).all(|m| !cmp(4, m).is_lt()));
    LucasMonotonicity {
        limit,
        even_decreasing,
        odd_increasing,
        dominance,
    }
}

// ============================================================================
// Odd-case sum bracket
// ============================================================================

/// Outcome of [`odd_sum_bracket`].
#[derive(Debug, Clone)]
pub struct OddBracket {
    /// Enclosure of `sum_{d in G} (1 - phi^(-2 ord d))^(|G| / ord d)`.
    pub sum: Interval,
    /// `|G| - |E(G)| - 1`.
    pub lower: i64,
    /// `|G|`.
    pub upper: usize,
    pub small_order: usize,
    /// Both bracket inequalities certified by the enclosure.
    pub holds: bool,
    /// `1 - (1 - phi^(-2k))^(n/k) <= min(1, (n/k) phi^(-2k))` for every order `k`.
    pub bernoulli_holds: bool,
}

/// Evaluates the odd-case sum over `G` at `bits` of precision and checks its
/// bracket and the termwise Bernoulli bound.
pub fn odd_sum_bracket(group: &GroupSpec, bits: u32) -> Result<OddBracket> {
    let n = group.order();
    if n % 2 == 0 {
        return Err(Error::WrongParity {
            expected: "odd",
            order: n,
        });
    }
    if n < 3 {
        return Err(Error::GroupTooSmall { min: 3, order: n });
    }
    let mut by_order: std::collections::BTreeMap<usize, usize> = Default::default();
    for o in group.order_table() {
        *by_order.entry(o).or_insert(0) += 1;
    }
    let one = Interval::from_int(1, bits);
    let inv_phi = Interval::phi(bits).sub(&one);
    let mut sum = Interval::from_int(0, bits);
    let mut bernoulli_holds = true;
    for (&ord, &count) in &by_order {
        let x = inv_phi.pow(2 * ord as u32);
        let e = n / ord;
        let term = one.sub(&x).pow(e as u32);
        sum = sum.add(&term.scale(&BigInt::from(count)));
        if e > 1 {
            let lhs = one.sub(&term);
            let rhs = one.min(&x.scale(&BigInt::from(e)));
            bernoulli_holds &= lhs.certainly_le(&rhs);
        }
        // e == 1: both sides equal phi^(-2k) identically
    }
    let small_order = group.small_order_set(OrderThreshold::LogPhiOfOrder).len();
    let lower = n as i64 - small_order as i64 - 1;
    let holds = sum.certainly_ge_rational(&BigRational::from_integer(lower.into()))
        && sum.certainly_le_rational(&BigRational::from_integer(n.into()));
    Ok(OddBracket {
        sum,
        lower,
        upper: n,
        small_order,
        holds,
        bernoulli_holds,
    })
}

// ============================================================================
// Reports
// ============================================================================

/// Hypothesis diagnostics; reported, never enforced.
#[derive(Debug, Clone, Serialize)]
pub struct HypothesisFlags {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub order_two_density: Option<f64>,
    /// `k/|G| < 1 - log_3(7)/2 = 0.114...`
    #[serde(skip_serializing_if = "Option::is_none")]
    pub even_density_ok: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub small_order_count: Option<usize>,
    /// `|E(G)| / |G|`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub small_order_fraction: Option<f64>,
}

/// One report row for a group.
#[derive(Debug, Clone, Serialize)]
pub struct BoundReport {
    pub group: GroupSpec,
    pub order: usize,
    pub parity: &'static str,
    pub k: usize,
    pub upper: String,
    /// Floor of the lower bound (still a valid lower bound for the count).
    pub lower: String,
    pub lower_exact: bool,
    /// The lower bound is negative, hence vacuous.
    pub lower_vacuous: bool,
    pub asymptotic: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exact: Option<String>,
    /// `exact / asymptotic`, when the exact count is known.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ratio: Option<f64>,
    /// Even case: `1 + (|G|/k)(7/9)^(|G|/4)` (rounded up).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ratio_cap: Option<f64>,
    /// `lower <= exact <= upper`, when the exact count is known.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sandwich: Option<bool>,
    pub hypothesis: HypothesisFlags,
    pub precision_bits: u32,
}

/// Assembles a [`BoundReport`], optionally against a known exact count.
pub fn bound_report(group: &GroupSpec, bits: u32, exact: Option<&BigUint>) -> Result<BoundReport> {
    let n = group.order();
    let k = group.order_two_count();
    let upper = upper_bound(group)?;
    let lower = lower_bound(group, bits)?;
    let asym = asymptotic(group, bits)?;
    let (ratio_cap, hypothesis) = if group.is_even() {
        let r = even_upper_ratio(group, bits)?;
        (
            r.cap.to_f64(),
            HypothesisFlags {
                order_two_density: Some(k as f64 / n as f64),
                even_density_ok: Some(even_density_condition(group)),
                small_order_count: None,
                small_order_fraction: None,
            },
        )
    } else {
        let e = group.small_order_set(OrderThreshold::LogPhiOfOrder).len();
        (
            None,
            HypothesisFlags {
                order_two_density: None,
                even_density_ok: None,
                small_order_count: Some(e),
                small_order_fraction: Some(e as f64 / n as f64),
            },
        )
    };
    let ratio = exact.map(|c| {
        let mid = (asym.lower() + asym.upper()) / BigRational::from_integer(2.into());
        (biguint_rational(c) / mid).to_f64().unwrap_or(f64::NAN)
    });
    let sandwich = exact.map(|c| lower.admits(c) && *c <= upper);
    let digits = if group.is_even() { 0 } else { 6 };
    Ok(BoundReport {
        group: group.clone(),
        order: n,
        parity: if group.is_even() { "even" } else { "odd" },
        k,
        upper: upper.to_string(),
        lower: lower.floor().to_string(),
        lower_exact: lower.exact,
        lower_vacuous: lower.is_negative(),
        asymptotic: asym.to_decimal(digits),
        exact: exact.map(|c| c.to_string()),
        ratio,
        ratio_cap,
        sandwich,
        hypothesis,
        precision_bits: bits,
    })
}

/// `ceil(x)` helper used when reporting rational caps as integers.
pub fn ceil_rational(x: &BigRational) -> BigInt {
    x.ceil().to_integer()
}

/// Renders a rational with `digits` decimals (truncated toward zero).
pub fn format_rational(x: &BigRational, digits: usize) -> String {
    rational_to_decimal(x, digits)
}
