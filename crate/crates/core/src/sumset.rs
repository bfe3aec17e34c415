//! Subsets of a group as bit vectors, and sumsets / difference sets computed
//! as unions of translated copies.
//!
//! Translation by an element is a per-factor block rotation of the bit
//! vector. Groups with `|G| <= 64` use [`SmallGroup`], which packs a subset
//! into one `u64` and precomputes the rotation masks for every element.

use std::fmt;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::group::{GroupElement, GroupSpec};

// ============================================================================
// SubsetMask
// ============================================================================

/// A subset of a group, bit `i` set iff element `i` is a member.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SubsetMask {
    words: Vec<u64>,
    len: usize,
}

impl SubsetMask {
    pub fn empty(len: usize) -> Self {
        SubsetMask {
            words: vec![0; len.div_ceil(64)],
            len,
        }
    }

    pub fn full(len: usize) -> Self {
        let mut m = Self::empty(len);
        for i in 0..len {
            m.insert(i);
        }
        m
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(len: usize, indices: I) -> Result<Self> {
        let mut m = Self::empty(len);
        for i in indices {
            if i >= len {
                return Err(Error::ElementOutOfRange {
                    index: i,
                    order: len,
                });
            }
            m.insert(i);
        }
        Ok(m)
    }

    /// Packs the low `len` bits of `bits` (requires `len <= 64`).
    pub fn from_u64(len: usize, bits: u64) -> Self {
        assert!(len <= 64);
        let mut m = Self::empty(len);
        if len > 0 {
            m.words[0] = bits & low_bits(len);
        }
        m
    }

    pub fn to_u64(&self) -> Option<u64> {
        match self.words.len() {
            0 => Some(0),
            1 => Some(self.words[0]),
            _ => None,
        }
    }

    /// Number of group elements this mask ranges over.
    #[inline]
    pub fn universe(&self) -> usize {
        self.len
    }

    #[inline]
    pub fn contains(&self, i: usize) -> bool {
        i < self.len && self.words[i / 64] >> (i % 64) & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, i: usize) {
        self.words[i / 64] |= 1 << (i % 64);
    }

    pub fn remove(&mut self, i: usize) {
        self.words[i / 64] &= !(1 << (i % 64));
    }

    /// `|A|`.
    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn is_full(&self) -> bool {
        self.count() == self.len
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut rest = w;
            std::iter::from_fn(move || {
                if rest == 0 {
                    None
                } else {
                    let b = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    Some(wi * 64 + b)
                }
            })
        })
    }

    pub fn union_with(&mut self, other: &SubsetMask) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn intersects(&self, other: &SubsetMask) -> bool {
        self.words.iter().zip(&other.words).any(|(a, b)| a & b != 0)
    }

    /// `{i, j, ...}` with indices in increasing order.
    pub fn to_literal(&self) -> String {
        format!("{{{}}}", self.iter().join(","))
    }

    /// Parses `{0,2,3}` for a group of the given order.
    pub fn parse_literal(len: usize, s: &str) -> Result<Self> {
        let err = |reason: String| Error::SubsetParse {
            input: s.to_string(),
            reason,
        };
        let inner = s
            .trim()
            .strip_prefix('{')
            .and_then(|r| r.strip_suffix('}'))
            .ok_or_else(|| err("expected braces".into()))?;
        let mut m = Self::empty(len);
        if inner.trim().is_empty() {
            return Ok(m);
        }
        for part in inner.split(',') {
            let i: usize = part
                .trim()
                .parse()
                .map_err(|e| err(format!("`{}`: {e}", part.trim())))?;
            if i >= len {
                return Err(err(format!("index {i} out of range for |G| = {len}")));
            }
            m.insert(i);
        }
        Ok(m)
    }
}

impl fmt::Debug for SubsetMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SubsetMask({})", self.to_literal())
    }
}

#[inline]
fn low_bits(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

// ============================================================================
// SmallGroup: one-word subsets
// ============================================================================

#[derive(Debug, Clone, Copy)]
struct Rotation {
    /// Bits whose digit stays below `a - c` move up by `up`.
    low: u64,
    /// The remaining bits of this factor wrap around, moving down by `down`.
    high: u64,
    up: u32,
    down: u32,
}

/// Precomputed translation tables for groups with `|G| <= 64`.
#[derive(Debug, Clone)]
pub struct SmallGroup {
    group: GroupSpec,
    full: u64,
    neg: Vec<u8>,
    // rotations for element g live in rot[start[g]..start[g + 1]]
    rot: Vec<Rotation>,
    start: Vec<usize>,
    add: Vec<u8>,
}

impl SmallGroup {
    pub const MAX_ORDER: usize = 64;

    pub fn new(group: &GroupSpec) -> Result<Self> {
        let n = group.order();
        if n > Self::MAX_ORDER {
            return Err(Error::GroupTooLarge {
                order: n,
                max: Self::MAX_ORDER,
            });
        }
        let factors = group.factors();
        let mut stride = 1usize;
        // table[i][c] for factor i, shift c
        let mut table: Vec<Vec<Rotation>> = Vec::with_capacity(factors.len());
        for &a in factors {
            let mut per_shift = Vec::with_capacity(a);
            for c in 0..a {
                let mut low = 0u64;
                let mut high = 0u64;
                for x in 0..n {
                    let digit = (x / stride) % a;
                    if digit < a - c {
                        low |= 1 << x;
                    } else {
                        high |= 1 << x;
                    }
                }
                per_shift.push(Rotation {
                    low,
                    high,
                    up: (c * stride) as u32,
                    down: ((a - c) * stride) as u32,
                });
            }
            table.push(per_shift);
            stride *= a;
        }
        let mut rot = Vec::new();
        let mut start = Vec::with_capacity(n + 1);
        for g in group.elements() {
            start.push(rot.len());
            for (i, c) in group.digits(g).into_iter().enumerate() {
                if c != 0 {
                    rot.push(table[i][c]);
                }
            }
        }
        start.push(rot.len());
        let neg = group.elements().map(|g| group.neg(g).0 as u8).collect();
        let mut add = vec![0u8; n * n];
        for x in group.elements() {
            for y in group.elements() {
                add[x.0 * n + y.0] = group.add(x, y).0 as u8;
            }
        }
        Ok(SmallGroup {
            group: group.clone(),
            full: low_bits(n),
            neg,
            rot,
            start,
            add,
        })
    }

    pub fn group(&self) -> &GroupSpec {
        &self.group
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.group.order()
    }

    /// Mask with every element set.
    #[inline]
    pub fn full(&self) -> u64 {
        self.full
    }

    #[inline]
    pub fn neg(&self, g: usize) -> usize {
        self.neg[g] as usize
    }

    #[inline]
    pub fn add(&self, x: usize, y: usize) -> usize {
        self.add[x * self.order() + y] as usize
    }

    /// `A + g`.
    #[inline]
    pub fn translate(&self, mut bits: u64, g: usize) -> u64 {
        for r in &self.rot[self.start[g]..self.start[g + 1]] {
            bits = ((bits & r.low) << r.up) | ((bits & r.high) >> r.down);
        }
        bits
    }

    /// `A + A` as the union of `A + a` over `a` in `A`.
    #[inline]
    pub fn sumset(&self, bits: u64) -> u64 {
        let mut acc = 0;
        let mut rest = bits;
        while rest != 0 {
            let a = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            acc |= self.translate(bits, a);
            if acc == self.full {
                break;
            }
        }
        acc
    }

    /// `A - A` as the union of `A - a` over `a` in `A`.
    #[inline]
    pub fn diffset(&self, bits: u64) -> u64 {
        let mut acc = 0;
        let mut rest = bits;
        while rest != 0 {
            let a = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            acc |= self.translate(bits, self.neg(a));
            if acc == self.full {
                break;
            }
        }
        acc
    }

    /// `|A + A| > |A - A|`, stopping as soon as the answer is settled.
    #[inline]
    pub fn is_mstd(&self, bits: u64) -> bool {
        if bits == 0 {
            return false;
        }
        let diff = self.diffset(bits);
        if diff == self.full {
            return false;
        }
        let target = diff.count_ones();
        let mut acc = 0u64;
        let mut rest = bits;
        while rest != 0 {
            let a = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            acc |= self.translate(bits, a);
            if acc.count_ones() > target {
                return true;
            }
        }
        false
    }

    /// Whether `d` is in `A - A`, i.e. `A` meets `A + d`.
    #[inline]
    pub fn has_difference(&self, bits: u64, d: usize) -> bool {
        if d == 0 {
            bits != 0
        } else {
            bits & self.translate(bits, d) != 0
        }
    }

    /// Whether `s` is in `A + A`.
    #[inline]
    pub fn has_sum(&self, bits: u64, s: usize) -> bool {
        let row = &self.add[s * self.order()..(s + 1) * self.order()];
        let mut rest = bits;
        while rest != 0 {
            let a = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            // s - a
            if bits >> row[self.neg(a)] & 1 == 1 {
                return true;
            }
        }
        false
    }
}

// ============================================================================
// General sumsets
// ============================================================================

/// Copies `len` bits from `src[src_off..]` into `dst[dst_off..]` (OR-ing in).
fn or_bits(src: &[u64], src_off: usize, dst: &mut [u64], dst_off: usize, len: usize) {
    let mut done = 0;
    while done < len {
        let take = (len - done).min(64 - (dst_off + done) % 64).min(64);
        let s = src_off + done;
        let word = s / 64;
        let shift = s % 64;
        let mut chunk = src[word] >> shift;
        if shift != 0 && shift + take > 64 {
            chunk |= src[word + 1] << (64 - shift);
        }
        chunk &= low_bits(take);
        let d = dst_off + done;
        dst[d / 64] |= chunk << (d % 64);
        done += take;
    }
}

/// `A + g` for masks of any size.
pub fn translate(group: &GroupSpec, a: &SubsetMask, g: GroupElement) -> SubsetMask {
    let n = group.order();
    let mut cur = a.words.clone();
    let mut stride = 1;
    for (&f, c) in group.factors().iter().zip(group.digits(g)) {
        if c != 0 {
            let block = stride * f;
            let keep = (f - c) * stride;
            let wrap = c * stride;
            let mut next = vec![0u64; cur.len()];
            for base in (0..n).step_by(block) {
                or_bits(&cur, base, &mut next, base + wrap, keep);
                or_bits(&cur, base + keep, &mut next, base, wrap);
            }
            cur = next;
        }
        stride *= f;
    }
    SubsetMask { words: cur, len: n }
}

/// `A + A`.
pub fn sumset(group: &GroupSpec, a: &SubsetMask) -> SubsetMask {
    if let (Ok(small), Some(bits)) = (SmallGroup::new(group), a.to_u64()) {
        return SubsetMask::from_u64(group.order(), small.sumset(bits));
    }
    let mut acc = SubsetMask::empty(group.order());
    for x in a.iter() {
        acc.union_with(&translate(group, a, GroupElement(x)));
        if acc.is_full() {
            break;
        }
    }
    acc
}

/// `A - A`.
pub fn diffset(group: &GroupSpec, a: &SubsetMask) -> SubsetMask {
    if let (Ok(small), Some(bits)) = (SmallGroup::new(group), a.to_u64()) {
        return SubsetMask::from_u64(group.order(), small.diffset(bits));
    }
    let mut acc = SubsetMask::empty(group.order());
    for x in a.iter() {
        acc.union_with(&translate(group, a, group.neg(GroupElement(x))));
        if acc.is_full() {
            break;
        }
    }
    acc
}

/// `|A + A| > |A - A|`.
pub fn is_mstd(group: &GroupSpec, a: &SubsetMask) -> bool {
    sumset(group, a).count() > diffset(group, a).count()
}

// ============================================================================
// Integer sets and lifts
// ============================================================================

/// A finite set of integers, sorted and deduplicated.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct IntegerSet(Vec<i64>);

impl IntegerSet {
    pub fn new<I: IntoIterator<Item = i64>>(values: I) -> Self {
        let mut v: Vec<i64> = values.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        IntegerSet(v)
    }

    pub fn as_slice(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `S + S`, merging the sorted translates `S + s`.
    pub fn sumset(&self) -> IntegerSet {
        let merged = self
            .0
            .iter()
            .map(|&s| self.0.iter().map(move |&x| x + s))
            .kmerge()
            .dedup()
            .collect();
        IntegerSet(merged)
    }

    /// `S - S`, merging the sorted translates `S - s`.
    pub fn diffset(&self) -> IntegerSet {
        let merged = self
            .0
            .iter()
            .map(|&s| self.0.iter().map(move |&x| x - s))
            .kmerge()
            .dedup()
            .collect();
        IntegerSet(merged)
    }
}

impl fmt::Display for IntegerSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.0.iter().join(","))
    }
}

/// Result of [`integer_mstd_check`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IntegerMstd {
    pub is_mstd: bool,
    pub sums: usize,
    pub differences: usize,
}

pub fn integer_mstd_check(s: &IntegerSet) -> IntegerMstd {
    let sums = s.sumset().len();
    let differences = s.diffset().len();
    IntegerMstd {
        is_mstd: sums > differences,
        sums,
        differences,
    }
}

/// `{x in Z : x mod n in A, 0 <= x < k n}` for `A` a subset of `Z/n`.
pub fn lift_cyclic(n: usize, a: &SubsetMask, k: usize) -> Result<IntegerSet> {
    if k == 0 {
        return Err(Error::ZeroMultiplier);
    }
    if a.universe() != n {
        return Err(Error::InvalidArgument(format!(
            "subset ranges over {} elements, expected {n}",
            a.universe()
        )));
    }
    Ok(IntegerSet::new((0..k).flat_map(|block| {
        a.iter().map(move |r| (block * n + r) as i64)
    })))
}

/// Smallest base `m` for which `psi` is injective on sums and differences of
/// the lifted box `[0, k a_1) x ... x [0, k a_r)`.
pub fn min_lift_base(group: &GroupSpec, k: usize) -> u64 {
    let widest = group.factors().iter().copied().max().unwrap_or(1) as u64;
    // coordinate sums/differences span 2(k a - 1) + 1 values
    2 * (k as u64 * widest - 1) + 1
}

/// Default lift base `2 k max(a_i) + 1`.
pub fn default_lift_base(group: &GroupSpec, k: usize) -> u64 {
    let widest = group.factors().iter().copied().max().unwrap_or(1) as u64;
    2 * k as u64 * widest + 1
}

/// Lifts `A` to the box `[0, k a_1) x ... x [0, k a_r)` by congruence, then
/// maps each point through `psi(x) = sum x_i m^(i-1)`.
pub fn lift_general(group: &GroupSpec, a: &SubsetMask, k: usize, m: u64) -> Result<IntegerSet> {
    if k == 0 {
        return Err(Error::ZeroMultiplier);
    }
    let min = min_lift_base(group, k);
    if m < min {
        return Err(Error::BaseTooSmall { base: m, min });
    }
    let factors = group.factors();
    let mut out = Vec::new();
    for x in a.iter() {
        let digits = group.digits(GroupElement(x));
        // every choice of block offset per coordinate
        let mut offsets = vec![0usize; factors.len()];
        loop {
            let mut value: i64 = 0;
            let mut place: i64 = 1;
            for i in 0..factors.len() {
                let coord = digits[i] + offsets[i] * factors[i];
                value += coord as i64 * place;
                place *= m as i64;
            }
            out.push(value);
            let mut i = 0;
            while i < offsets.len() {
                offsets[i] += 1;
                if offsets[i] < k {
                    break;
                }
                offsets[i] = 0;
                i += 1;
            }
            if i == offsets.len() {
                break;
            }
        }
    }
    Ok(IntegerSet::new(out))
}

/// Smallest `k <= max_k` at which the cyclic lift of `A` is an integer MSTD set.
pub fn minimal_lift_multiplier(n: usize, a: &SubsetMask, max_k: usize) -> Result<Option<usize>> {
    for k in 1..=max_k {
        if integer_mstd_check(&lift_cyclic(n, a, k)?).is_mstd {
            return Ok(Some(k));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn g(s: &str) -> GroupSpec {
        s.parse().unwrap()
    }

    fn mask(grp: &GroupSpec, idx: &[usize]) -> SubsetMask {
        SubsetMask::from_indices(grp.order(), idx.iter().copied()).unwrap()
    }

    fn naive(grp: &GroupSpec, a: &SubsetMask, diff: bool) -> SubsetMask {
        let mut out = SubsetMask::empty(grp.order());
        for x in a.iter() {
            for y in a.iter() {
                let (x, y) = (GroupElement(x), GroupElement(y));
                let z = if diff { grp.sub(x, y) } else { grp.add(x, y) };
                out.insert(z.0);
            }
        }
        out
    }

    #[test]
    fn sumset_examples() {
        let z5 = g("5");
        assert_eq!(sumset(&z5, &mask(&z5, &[0, 1])).to_literal(), "{0,1,2}");
        assert_eq!(diffset(&z5, &mask(&z5, &[0, 1])).to_literal(), "{0,1,4}");
        let z8 = g("8");
        assert_eq!(sumset(&z8, &mask(&z8, &[0, 4])).to_literal(), "{0,4}");
        assert_eq!(diffset(&z8, &mask(&z8, &[0, 4])).to_literal(), "{0,4}");
        assert!(sumset(&z8, &SubsetMask::empty(8)).is_empty());
        assert!(diffset(&z8, &SubsetMask::empty(8)).is_empty());
    }

    #[test]
    fn mstd_predicate_examples() {
        let z5 = g("5");
        assert!(!is_mstd(&z5, &SubsetMask::empty(5)));
        assert!(!is_mstd(&z5, &mask(&z5, &[3])));
        assert!(!is_mstd(&z5, &mask(&z5, &[0, 1])));
    }

    #[test]
    fn literal_round_trip() {
        let m = SubsetMask::parse_literal(8, "{0, 2,3}").unwrap();
        assert_eq!(m.to_literal(), "{0,2,3}");
        assert_eq!(SubsetMask::parse_literal(8, "{}").unwrap().count(), 0);
        assert!(SubsetMask::parse_literal(8, "{8}").is_err());
        assert!(SubsetMask::parse_literal(8, "0,1").is_err());
    }

    #[test]
    fn exhaustive_agreement_with_naive_oracle() {
        for grp in crate::family::groups_in_range(1, 12) {
            let small = SmallGroup::new(&grp).unwrap();
            for bits in 0..(1u64 << grp.order()) {
                let a = SubsetMask::from_u64(grp.order(), bits);
                let s = naive(&grp, &a, false);
                let d = naive(&grp, &a, true);
                assert_eq!(small.sumset(bits), s.to_u64().unwrap(), "{grp} {bits:b}");
                assert_eq!(small.diffset(bits), d.to_u64().unwrap(), "{grp} {bits:b}");
                assert_eq!(translate(&grp, &a, GroupElement(0)), a);
                assert_eq!(small.is_mstd(bits), s.count() > d.count());
            }
        }
    }

    #[test]
    fn large_groups_use_word_rotation() {
        // |G| = 150 exercises the multi-word path on a product group.
        let grp = g("10,3,5");
        let a = mask(&grp, &[0, 1, 7, 33, 64, 65, 100, 149]);
        assert_eq!(sumset(&grp, &a), naive(&grp, &a, false));
        assert_eq!(diffset(&grp, &a), naive(&grp, &a, true));
        for x in [1usize, 10, 31, 63, 64, 130] {
            let t = translate(&grp, &a, GroupElement(x));
            let expect =
                SubsetMask::from_indices(150, a.iter().map(|y| grp.add(GroupElement(y), GroupElement(x)).0))
                    .unwrap();
            assert_eq!(t, expect);
        }
    }

    #[test]
    fn has_difference_and_sum() {
        let grp = g("4,3");
        let small = SmallGroup::new(&grp).unwrap();
        for bits in 0..(1u64 << 12) {
            let d = small.diffset(bits);
            let s = small.sumset(bits);
            for x in 0..12 {
                assert_eq!(small.has_difference(bits, x), d >> x & 1 == 1);
                assert_eq!(small.has_sum(bits, x), s >> x & 1 == 1);
            }
        }
    }

    #[test]
    fn integer_sets() {
        let conway = IntegerSet::new([0, 2, 3, 4, 7, 11, 12, 14]);
        let r = integer_mstd_check(&conway);
        assert_eq!((r.is_mstd, r.sums, r.differences), (true, 26, 25));
        let r = integer_mstd_check(&IntegerSet::new([0]));
        assert_eq!((r.is_mstd, r.sums, r.differences), (false, 1, 1));
        let r = integer_mstd_check(&IntegerSet::new([0, 1]));
        assert_eq!((r.is_mstd, r.sums, r.differences), (false, 3, 3));
    }

    #[test]
    fn cyclic_lifts() {
        let a = SubsetMask::from_indices(3, [1, 2]).unwrap();
        assert_eq!(lift_cyclic(3, &a, 2).unwrap().as_slice(), &[1, 2, 4, 5]);
        assert!(lift_cyclic(5, &SubsetMask::empty(5), 4).unwrap().is_empty());
        let a = SubsetMask::from_indices(8, [0]).unwrap();
        assert_eq!(lift_cyclic(8, &a, 3).unwrap().as_slice(), &[0, 8, 16]);
        assert_eq!(lift_cyclic(8, &a, 0), Err(Error::ZeroMultiplier));
    }

    #[test]
    fn general_lifts() {
        let z3 = g("3");
        let a = mask(&z3, &[1]);
        assert_eq!(lift_general(&z3, &a, 2, 100).unwrap().as_slice(), &[1, 4]);
        let v4 = g("2,2");
        let a = mask(&v4, &[3]);
        assert_eq!(lift_general(&v4, &a, 1, 10).unwrap().as_slice(), &[11]);
        assert!(matches!(
            lift_general(&v4, &a, 3, 5),
            Err(Error::BaseTooSmall { base: 5, min: 11 })
        ));
    }

    proptest! {
        #[test]
        fn diffset_symmetric_and_large(bits in any::<u64>(), which in 0usize..8) {
            let groups = ["32", "16,2", "4,4,2", "5,5", "30", "3,3,3", "7,4", "2,2,2,2,2"];
            let grp = g(groups[which]);
            let small = SmallGroup::new(&grp).unwrap();
            let a = bits & small.full();
            let d = small.diffset(a);
            for x in 0..grp.order() {
                prop_assert_eq!(d >> x & 1, d >> small.neg(x) & 1);
            }
            prop_assert_eq!(d & 1 == 1, a != 0);
            if a != 0 {
                prop_assert!(d.count_ones() >= a.count_ones());
                prop_assert!(small.sumset(a).count_ones() >= a.count_ones());
            }
        }

        #[test]
        fn random_agreement_up_to_64(bits in any::<u64>(), which in 0usize..5) {
            let groups = ["64", "8,8", "16,4", "2,2,2,2,2,2", "7,9"];
            let grp = g(groups[which]);
            let a = SubsetMask::from_u64(grp.order(), bits);
            prop_assert_eq!(sumset(&grp, &a), naive(&grp, &a, false));
            prop_assert_eq!(diffset(&grp, &a), naive(&grp, &a, true));
        }
    }
}
