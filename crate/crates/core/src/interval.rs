//! Fixed-point interval arithmetic on big integers.
//!
//! An [`Interval`] at scale `p` encloses a real `x` as
//! `lo / 2^p <= x <= hi / 2^p`. Every operation rounds `lo` toward negative
//! infinity and `hi` toward positive infinity, so enclosures stay valid.

use std::cmp::Ordering;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Interval {
    lo: BigInt,
    hi: BigInt,
    bits: u32,
}

fn pow2(bits: u32) -> BigInt {
    BigInt::one() << bits
}

fn floor_shr(x: &BigInt, bits: u32) -> BigInt {
    x.div_floor(&pow2(bits))
}

fn ceil_shr(x: &BigInt, bits: u32) -> BigInt {
    -((-x).div_floor(&pow2(bits)))
}

/// `ceil(r^(1/k))` for `r >= 0`.
fn ceil_root(r: &BigUint, k: u32) -> BigUint {
    let f = r.nth_root(k);
    if f.pow(k) == *r {
        f
    } else {
        f + 1u32
    }
}

impl Interval {
    /// The exact integer `n`.
    pub fn from_int(n: impl Into<BigInt>, bits: u32) -> Self {
        let v = n.into() << bits;
        Interval {
            lo: v.clone(),
            hi: v,
            bits,
        }
    }

    /// Tightest enclosure of a rational.
    pub fn from_rational(r: &BigRational, bits: u32) -> Self {
        let scaled_num = r.numer() << bits;
        let den = r.denom();
        let lo = scaled_num.div_floor(den);
        let hi = -((-&scaled_num).div_floor(den));
        Interval { lo, hi, bits }
    }

    /// Enclosure of `sqrt(r)` for a rational `r >= 0`.
    pub fn sqrt_rational(r: &BigRational, bits: u32) -> Self {
        Self::root_rational(r, 2, bits)
    }

    /// Enclosure of `r^(1/k)` for a rational `r >= 0` and `k >= 1`.
    pub fn root_rational(r: &BigRational, k: u32, bits: u32) -> Self {
        assert!(!r.is_negative() && k >= 1);
        // r^(1/k) * 2^bits = (r * 2^(k bits))^(1/k)
        let scaled = r.numer() << (k as usize * bits as usize);
        let den = r.denom();
        let lo_arg = scaled.div_floor(den).to_biguint().unwrap_or_default();
        let hi_arg = (-((-&scaled).div_floor(den)))
            .to_biguint()
            .unwrap_or_default();
        Interval {
            lo: BigInt::from(lo_arg.nth_root(k)),
            hi: BigInt::from(ceil_root(&hi_arg, k)),
            bits,
        }
    }

    /// Enclosure of `r^(p/q)` for a rational `r >= 0`.
    pub fn pow_ratio(r: &BigRational, p: u32, q: u32, bits: u32) -> Self {
        let g = p.gcd(&q).max(1);
        let (p, q) = (p / g, q / g);
        let powered = BigRational::new(r.numer().pow(p), r.denom().pow(p));
        if q == 1 {
            Self::from_rational(&powered, bits)
        } else {
            Self::root_rational(&powered, q, bits)
        }
    }

    /// Enclosure of the golden ratio `(1 + sqrt 5) / 2`.
    pub fn phi(bits: u32) -> Self {
        // one guard bit absorbs the halving
        let s = Self::sqrt_rational(&BigRational::from_integer(5.into()), bits + 1);
        let one = pow2(bits + 1);
        Interval {
            lo: floor_shr(&(s.lo + &one), 2),
            hi: ceil_shr(&(s.hi + &one), 2),
            bits,
        }
    }

    pub fn bits(&self) -> u32 {
        self.bits
    }

    pub fn lower(&self) -> BigRational {
        BigRational::new(self.lo.clone(), pow2(self.bits))
    }

    pub fn upper(&self) -> BigRational {
        BigRational::new(self.hi.clone(), pow2(self.bits))
    }

    pub fn midpoint_f64(&self) -> f64 {
        let mid = BigRational::new(&self.lo + &self.hi, pow2(self.bits + 1));
        mid.to_f64().unwrap_or(f64::NAN)
    }

    pub fn width(&self) -> BigRational {
        BigRational::new(&self.hi - &self.lo, pow2(self.bits))
    }

    fn check(&self, other: &Interval) {
        assert_eq!(self.bits, other.bits, "interval scales differ");
    }

    pub fn add(&self, other: &Interval) -> Interval {
        self.check(other);
        Interval {
            lo: &self.lo + &other.lo,
            hi: &self.hi + &other.hi,
            bits: self.bits,
        }
    }

    pub fn sub(&self, other: &Interval) -> Interval {
        self.check(other);
        Interval {
            lo: &self.lo - &other.hi,
            hi: &self.hi - &other.lo,
            bits: self.bits,
        }
    }

    pub fn neg(&self) -> Interval {
        Interval {
            lo: -&self.hi,
            hi: -&self.lo,
            bits: self.bits,
        }
    }

    pub fn mul(&self, other: &Interval) -> Interval {
        self.check(other);
        let products = [
            &self.lo * &other.lo,
            &self.lo * &other.hi,
            &self.hi * &other.lo,
            &self.hi * &other.hi,
        ];
        let min = products.iter().min().unwrap();
        let max = products.iter().max().unwrap();
        Interval {
            lo: floor_shr(min, self.bits),
            hi: ceil_shr(max, self.bits),
            bits: self.bits,
        }
    }

    /// Multiplication by an exact integer.
    pub fn scale(&self, k: &BigInt) -> Interval {
        let (a, b) = (&self.lo * k, &self.hi * k);
        let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
        Interval {
            lo,
            hi,
            bits: self.bits,
        }
    }

    /// Halves exactly (the denominator absorbs it by rounding outward).
    pub fn half(&self) -> Interval {
        Interval {
            lo: floor_shr(&self.lo, 1),
            hi: ceil_shr(&self.hi, 1),
            bits: self.bits,
        }
    }

    pub fn pow(&self, mut e: u32) -> Interval {
        let mut base = self.clone();
        let mut acc = Interval::from_int(1, self.bits);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Interval minimum of two enclosures.
    pub fn min(&self, other: &Interval) -> Interval {
        self.check(other);
        Interval {
            lo: (&self.lo).min(&other.lo).clone(),
            hi: (&self.hi).min(&other.hi).clone(),
            bits: self.bits,
        }
    }

    /// `Some(ordering)` when the enclosures decide the comparison.
    pub fn compare(&self, other: &Interval) -> Option<Ordering> {
        self.check(other);
        if self.hi < other.lo {
            Some(Ordering::Less)
        } else if self.lo > other.hi {
            Some(Ordering::Greater)
        } else if self.lo == self.hi && self == other {
            Some(Ordering::Equal)
        } else {
            None
        }
    }

    /// Provably `<= other`.
    pub fn certainly_le(&self, other: &Interval) -> bool {
        self.check(other);
        self.hi <= other.lo
    }

    pub fn certainly_le_rational(&self, r: &BigRational) -> bool {
        self.upper() <= *r
    }

    pub fn certainly_ge_rational(&self, r: &BigRational) -> bool {
        self.lower() >= *r
    }

    /// Decimal rendering of the midpoint with `digits` fractional digits.
    pub fn to_decimal(&self, digits: usize) -> String {
        let mid = BigRational::new(&self.lo + &self.hi, pow2(self.bits + 1));
        rational_to_decimal(&mid, digits)
    }
}

/// Decimal rendering of a rational, truncated toward zero.
pub fn rational_to_decimal(r: &BigRational, digits: usize) -> String {
    let sign = if r.is_negative() { "-" } else { "" };
    let abs = r.abs();
    let scale = BigInt::from(10u32).pow(digits as u32);
    let scaled = (abs.numer() * &scale) / abs.denom();
    let (int, frac) = scaled.div_rem(&scale);
    if digits == 0 {
        return format!("{sign}{int}");
    }
    let frac = frac.magnitude().to_string();
    format!("{sign}{int}.{}{frac}", "0".repeat(digits - frac.len()))
}

pub(crate) fn biguint_rational(n: &BigUint) -> BigRational {
    BigRational::from_integer(BigInt::from_biguint(Sign::Plus, n.clone()))
}
