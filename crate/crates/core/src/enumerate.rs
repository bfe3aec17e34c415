//! Exhaustive scans over all `2^|G|` subsets.
//!
//! The subset space is cut into fixed contiguous chunks; workers sum their
//! chunk counts and the integer reduction makes every result independent of
//! scheduling and thread count.

use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::{GroupElement, GroupSpec};
use crate::sumset::SmallGroup;

/// Default cap for MSTD counts and avoidance counts.
pub const COUNT_CAP: usize = 28;
/// Default cap for histograms.
pub const HISTOGRAM_CAP: usize = 24;
/// Hard ceiling: subsets must fit a `u64` mask with room for the range end.
const HARD_CAP: usize = 40;

const CHUNK_BITS: u32 = 14;

/// Rough subsets-per-second for one core, used for refusal estimates.
const SUBSETS_PER_SEC: f64 = 5.0e7;

/// Knobs shared by all scans.
#[derive(Debug, Clone)]
pub struct ScanConfig {
    /// Worker threads; `0` means all available cores.
    pub threads: usize,
    pub count_cap: usize,
    pub histogram_cap: usize,
    /// Print progress to stderr at this interval.
    pub progress: Option<Duration>,
}

impl Default for ScanConfig {
    fn default() -> Self {
        ScanConfig {
            threads: 0,
            count_cap: COUNT_CAP,
            histogram_cap: HISTOGRAM_CAP,
            progress: None,
        }
    }
}

impl ScanConfig {
    pub fn with_threads(threads: usize) -> Self {
        ScanConfig {
            threads,
            ..Default::default()
        }
    }

    /// Threads a scan will actually use.
    pub fn effective_threads(&self) -> usize {
        if self.threads == 0 {
            std::thread::available_parallelism()
                .map(|n| n.get())
                .unwrap_or(1)
        } else {
            self.threads
        }
    }

    fn check_cap(&self, order: usize, cap: usize) -> Result<()> {
        let cap = cap.min(HARD_CAP);
        if order > cap {
            let estimated_secs =
                2f64.powi(order as i32) / SUBSETS_PER_SEC / self.effective_threads() as f64;
            return Err(Error::CapExceeded {
                order,
                cap,
                estimated_secs,
            });
        }
        Ok(())
    }

    fn pool(&self) -> Result<rayon::ThreadPool> {
        rayon::ThreadPoolBuilder::new()
            .num_threads(self.effective_threads())
            .build()
            .map_err(|e| Error::ThreadPool(e.to_string()))
    }
}

/// Runs `per_chunk` over every chunk of `[0, 2^n)` and folds with `combine`.
fn scan<T, F, C>(cfg: &ScanConfig, n: usize, label: &str, identity: T, per_chunk: F, combine: C) -> Result<T>
where
    T: Send + Sync + Clone,
    F: Fn(u64, u64) -> T + Sync,
    C: Fn(T, T) -> T + Sync + Send,
{
    let total: u64 = 1 << n;
    let chunk: u64 = 1 << CHUNK_BITS.min(n as u32);
    let chunks = total / chunk;
    let done = AtomicU64::new(0);
    let finished = AtomicBool::new(false);
    let pool = cfg.pool()?;
    let start = Instant::now();

    let result = std::thread::scope(|scope| {
        if let Some(every) = cfg.progress {
            let (done, finished) = (&done, &finished);
            scope.spawn(move || {
                let tick = every.min(Duration::from_millis(50));
                let mut last = Instant::now();
                while !finished.load(Ordering::Relaxed) {
                    std::thread::sleep(tick);
                    if last.elapsed() >= every {
                        last = Instant::now();
                        let d = done.load(Ordering::Relaxed);
                        eprintln!(
                            "[{label}] {:.1}% ({d}/{chunks} chunks, {:.1}s)",
                            100.0 * d as f64 / chunks as f64,
                            start.elapsed().as_secs_f64()
                        );
                    }
                }
            });
        }
        let out = pool.install(|| {
            (0..chunks)
                .into_par_iter()
                .map(|c| {
                    let v = per_chunk(c * chunk, (c + 1) * chunk);
                    done.fetch_add(1, Ordering::Relaxed);
                    v
                })
                .reduce(|| identity.clone(), &combine)
        });
        finished.store(true, Ordering::Relaxed);
        out
    });
    Ok(result)
}

fn count_where<P>(cfg: &ScanConfig, n: usize, label: &str, pred: P) -> Result<u64>
where
    P: Fn(u64) -> bool + Sync,
{
    scan(
        cfg,
        n,
        label,
        0u64,
        |lo, hi| (lo..hi).filter(|&m| pred(m)).count() as u64,
        |a, b| a + b,
    )
}

// ============================================================================
// MSTD counts
// ============================================================================

/// Result of [`count_mstd`].
#[derive(Debug, Clone, Serialize)]
pub struct EnumerationResult {
    pub group: GroupSpec,
    #[serde(serialize_with = "crate::serde_decimal")]
    pub total_subsets: BigUint,
    #[serde(rename = "count", serialize_with = "crate::serde_decimal")]
    pub mstd_count: BigUint,
    #[serde(rename = "wall_time_secs", serialize_with = "serialize_secs")]
    pub elapsed: Duration,
    pub thread_count: usize,
}

fn serialize_secs<S: serde::Serializer>(d: &Duration, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_f64(d.as_secs_f64())
}

/// `|MSTD(G)|` by exhaustive scan.
pub fn count_mstd(group: &GroupSpec, cfg: &ScanConfig) -> Result<EnumerationResult> {
    let n = group.order();
    cfg.check_cap(n, cfg.count_cap)?;
    let small = SmallGroup::new(group)?;
    let start = Instant::now();
    let count = count_where(cfg, n, "count", |m| small.is_mstd(m))?;
    Ok(EnumerationResult {
        group: group.clone(),
        total_subsets: BigUint::from(1u32) << n,
        mstd_count: count.into(),
        elapsed: start.elapsed(),
        thread_count: cfg.effective_threads(),
    })
}

/// `|{A : (A - A) misses +-D and (A + A) misses S}|`.
pub fn count_avoiding(
    group: &GroupSpec,
    diffs: &[GroupElement],
    sums: &[GroupElement],
    cfg: &ScanConfig,
) -> Result<BigUint> {
    let n = group.order();
    cfg.check_cap(n, cfg.count_cap)?;
    let small = SmallGroup::new(group)?;
    let d: Vec<usize> = diffs.iter().map(|x| x.0).collect();
    let s: Vec<usize> = sums.iter().map(|x| x.0).collect();
    let count = count_where(cfg, n, "avoid", |m| {
        d.iter().all(|&x| !small.has_difference(m, x)) && s.iter().all(|&x| !small.has_sum(m, x))
    })?;
    Ok(count.into())
}

/// `|D_d| = |{A : d not in A - A, A + A = G}|`.
pub fn count_dd(group: &GroupSpec, d: GroupElement, cfg: &ScanConfig) -> Result<BigUint> {
    if d == GroupElement::ZERO {
        return Err(Error::ZeroDifference);
    }
    let n = group.order();
    cfg.check_cap(n, cfg.count_cap)?;
    let small = SmallGroup::new(group)?;
    let full = small.full();
    let count = count_where(cfg, n, "D_d", |m| {
        !small.has_difference(m, d.0) && small.sumset(m) == full
    })?;
    Ok(count.into())
}

/// `|{A : A - A != G, A + A = G}|`, the left end of the containment chain.
pub fn count_full_sums_missing_difference(group: &GroupSpec, cfg: &ScanConfig) -> Result<BigUint> {
    let n = group.order();
    cfg.check_cap(n, cfg.count_cap)?;
    let small = SmallGroup::new(group)?;
    let full = small.full();
    let count = count_where(cfg, n, "chain", |m| {
        small.diffset(m) != full && small.sumset(m) == full
    })?;
    Ok(count.into())
}

/// `|{A : A - A != G}|`, the right end of the containment chain.
pub fn count_missing_difference(group: &GroupSpec, cfg: &ScanConfig) -> Result<BigUint> {
    let n = group.order();
    cfg.check_cap(n, cfg.count_cap)?;
    let small = SmallGroup::new(group)?;
    let full = small.full();
    let count = count_where(cfg, n, "chain", |m| small.diffset(m) != full)?;
    Ok(count.into())
}

// ============================================================================
// Histograms and tables
// ============================================================================

/// `H[s][d]` = number of `A` with `|A + A| = |G| - s` and `|A - A| = |G| - d`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MissingHistogram {
    pub group: GroupSpec,
    pub counts: Vec<Vec<u64>>,
}

impl MissingHistogram {
    pub fn get(&self, missing_sums: usize, missing_diffs: usize) -> u64 {
        self.counts[missing_sums][missing_diffs]
    }

    pub fn total(&self) -> BigUint {
        self.counts.iter().flatten().map(|&c| BigUint::from(c)).sum()
    }

    /// `sum_{s < d} H[s][d]`, which is `|MSTD(G)|`.
    pub fn mstd_total(&self) -> BigUint {
        let mut total = BigUint::from(0u32);
        for (s, row) in self.counts.iter().enumerate() {
            for &c in &row[s + 1..] {
                total += c;
            }
        }
        total
    }

    /// Nonzero cells as `(missing_sums, missing_diffs, count)`.
    pub fn nonzero(&self) -> Vec<(usize, usize, u64)> {
        let mut out = Vec::new();
        for (s, row) in self.counts.iter().enumerate() {
            for (d, &c) in row.iter().enumerate() {
                if c != 0 {
                    out.push((s, d, c));
                }
            }
        }
        out
    }
}

pub fn missing_histogram(group: &GroupSpec, cfg: &ScanConfig) -> Result<MissingHistogram> {
    let n = group.order();
    cfg.check_cap(n, cfg.histogram_cap)?;
    let small = SmallGroup::new(group)?;
    let width = n + 1;
    let flat = scan(
        cfg,
        n,
        "histogram",
        vec![0u64; width * width],
        |lo, hi| {
            let mut h = vec![0u64; width * width];
            for m in lo..hi {
                let s = n - small.sumset(m).count_ones() as usize;
                let d = n - small.diffset(m).count_ones() as usize;
                h[s * width + d] += 1;
            }
            h
        },
        |mut a, b| {
            for (x, y) in a.iter_mut().zip(b) {
                *x += y;
            }
            a
        },
    )?;
    Ok(MissingHistogram {
        group: group.clone(),
        counts: flat.chunks(width).map(|r| r.to_vec()).collect(),
    })
}

/// Sum and difference masks of every subset, for answering many avoidance
/// queries on one group.
#[derive(Debug, Clone)]
pub struct SumDiffTable {
    small: SmallGroup,
    sums: Vec<u64>,
    diffs: Vec<u64>,
}

impl SumDiffTable {
    /// Largest group the table is built for (`2^22` entries).
    pub const MAX_ORDER: usize = 22;

    pub fn build(group: &GroupSpec) -> Result<Self> {
        let n = group.order();
        if n > Self::MAX_ORDER {
            return Err(Error::GroupTooLarge {
                order: n,
                max: Self::MAX_ORDER,
            });
        }
        let small = SmallGroup::new(group)?;
        let (sums, diffs): (Vec<u64>, Vec<u64>) = (0..1u64 << n)
            .into_par_iter()
            .map(|m| (small.sumset(m), small.diffset(m)))
            .unzip();
        Ok(SumDiffTable { small, sums, diffs })
    }

    pub fn group(&self) -> &GroupSpec {
        self.small.group()
    }

    /// Brute-force avoidance count against precomputed masks.
    pub fn count_avoiding(&self, diffs: &[GroupElement], sums: &[GroupElement]) -> u64 {
        let group = self.small.group();
        let dmask = diffs
            .iter()
            .fold(0u64, |m, &d| m | 1 << d.0 | 1 << group.neg(d).0);
        let smask = sums.iter().fold(0u64, |m, &s| m | 1 << s.0);
        self.sums
            .iter()
            .zip(&self.diffs)
            .filter(|&(&s, &d)| d & dmask == 0 && s & smask == 0)
            .count() as u64
    }

    pub fn sumset(&self, subset: u64) -> u64 {
        self.sums[subset as usize]
    }

    pub fn diffset(&self, subset: u64) -> u64 {
        self.diffs[subset as usize]
    }

    pub fn len(&self) -> usize {
        self.sums.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sums.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(s: &str) -> GroupSpec {
        s.parse().unwrap()
    }

    fn el(v: &[usize]) -> Vec<GroupElement> {
        v.iter().map(|&i| GroupElement(i)).collect()
    }

    fn cfg() -> ScanConfig {
        ScanConfig::with_threads(2)
    }

    /// Direct double-loop oracle, independent of the translation tables.
    fn naive_mstd(grp: &GroupSpec) -> u64 {
        let n = grp.order();
        (0..1u64 << n)
            .filter(|&m| {
                let mut s = 0u64;
                let mut d = 0u64;
                for x in 0..n {
                    for y in 0..n {
                        if m >> x & 1 == 1 && m >> y & 1 == 1 {
                            let (x, y) = (GroupElement(x), GroupElement(y));
                            s |= 1 << grp.add(x, y).0;
                            d |= 1 << grp.sub(x, y).0;
                        }
                    }
                }
                s.count_ones() > d.count_ones()
            })
            .count() as u64
    }

    #[test]
    fn trivial_counts() {
        let r = count_mstd(&GroupSpec::trivial(), &cfg()).unwrap();
        assert_eq!(r.mstd_count, 0u32.into());
        assert_eq!(r.total_subsets, 2u32.into());
        assert_eq!(count_mstd(&g("2"), &cfg()).unwrap().mstd_count, 0u32.into());
    }

    #[test]
    fn counts_match_naive_oracle() {
        for grp in crate::family::groups_in_range(1, 10) {
            let r = count_mstd(&grp, &cfg()).unwrap();
            assert_eq!(r.mstd_count, naive_mstd(&grp).into(), "{grp}");
        }
    }

    #[test]
    fn z8_count_is_below_upper_bound() {
        let c = count_mstd(&g("8"), &cfg()).unwrap().mstd_count;
        assert!(c <= 224u32.into());
    }

    #[test]
    fn avoidance_examples() {
        let z8 = g("8");
        assert_eq!(count_avoiding(&z8, &el(&[1]), &[], &cfg()).unwrap(), 47u32.into());
        assert_eq!(count_avoiding(&z8, &el(&[4]), &[], &cfg()).unwrap(), 81u32.into());
        assert_eq!(count_avoiding(&z8, &el(&[1]), &el(&[4]), &cfg()).unwrap(), 17u32.into());
        assert_eq!(count_avoiding(&z8, &el(&[0]), &[], &cfg()).unwrap(), 1u32.into());
        let table = SumDiffTable::build(&z8).unwrap();
        assert_eq!(table.count_avoiding(&el(&[1]), &el(&[4])), 17);
        assert_eq!(table.count_avoiding(&el(&[0]), &[]), 1);
    }

    #[test]
    fn dd_counts() {
        assert_eq!(count_dd(&g("2"), GroupElement(1), &cfg()).unwrap(), 0u32.into());
        assert_eq!(count_dd(&g("8"), GroupElement(0), &cfg()), Err(Error::ZeroDifference));
        let z8 = g("8");
        for d in 1..8 {
            let dd = count_dd(&z8, GroupElement(d), &cfg()).unwrap();
            let avoid = count_avoiding(&z8, &el(&[d]), &[], &cfg()).unwrap();
            assert!(dd <= avoid);
        }
        // |D_4| >= |{4 not in A-A}| - sum_s |{4 not in A-A, s not in A+A}|
        let d4 = count_dd(&z8, GroupElement(4), &cfg()).unwrap();
        let base = count_avoiding(&z8, &el(&[4]), &[], &cfg()).unwrap();
        let minus: BigUint = (0..8)
            .map(|s| count_avoiding(&z8, &el(&[4]), &el(&[s]), &cfg()).unwrap())
            .sum();
        assert!(BigUint::from(0u32) + &d4 + &minus >= base);
    }

    #[test]
    fn histograms() {
        let h = missing_histogram(&GroupSpec::trivial(), &cfg()).unwrap();
        assert_eq!(h.counts, vec![vec![1, 0], vec![0, 1]]);
        let z8 = g("8");
        let h = missing_histogram(&z8, &cfg()).unwrap();
        assert_eq!(h.total(), 256u32.into());
        assert_eq!(h.mstd_total(), count_mstd(&z8, &cfg()).unwrap().mstd_count);
    }

    #[test]
    fn cap_refusal() {
        let err = count_mstd(&g("40"), &cfg()).unwrap_err();
        assert!(matches!(err, Error::CapExceeded { order: 40, cap: 28, .. }));
        let cfg = ScanConfig {
            histogram_cap: 10,
            ..cfg()
        };
        assert!(missing_histogram(&g("12"), &cfg).is_err());
    }

    #[test]
    fn thread_count_independence() {
        let grp = g("6,2");
        let a = count_mstd(&grp, &ScanConfig::with_threads(1)).unwrap();
        let b = count_mstd(&grp, &ScanConfig::with_threads(3)).unwrap();
        let c = count_mstd(&grp, &ScanConfig::with_threads(0)).unwrap();
        assert_eq!(a.mstd_count, b.mstd_count);
        assert_eq!(a.mstd_count, c.mstd_count);
    }

    #[test]
    fn record_serializes_counts_as_strings() {
        let r = count_mstd(&g("8"), &cfg()).unwrap();
        let json = serde_json::to_value(&r).unwrap();
        assert_eq!(json["group"], "8");
        assert!(json["count"].is_string());
        assert_eq!(json["thread_count"], 2);
    }
}
