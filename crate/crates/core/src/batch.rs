//! Batch helpers: ball enumeration over the weight lattice, the verification
//! report, and a data-parallel map with a sequential fallback.

use std::collections::BTreeMap;
use std::fmt;

#[cfg(feature = "parallel")]
use rayon::prelude::*;
use serde::Serialize;

use crate::root_data::RootSystem;
use crate::weight::Weight;

/// All weights with `ell(tau_lambda) <= radius`, in a deterministic order
/// (increasing translation length, then coordinates).
pub fn ball(rs: &RootSystem, radius: i64) -> Vec<Weight> {
    let n = rs.rank;
    let mut out: Vec<(i64, Weight)> = Vec::new();
    // Each coordinate of lambda is one of the coroot pairings, so the box
    // [-radius, radius]^n covers the ball.
    let mut coords = vec![-radius; n];
    'outer: loop {
        let w = Weight(coords.clone());
        let len = rs.translation_length(&w);
        if len <= radius {
            out.push((len, w));
        }
        let mut i = 0;
        loop {
            if i == n {
                break 'outer;
            }
            coords[i] += 1;
            if coords[i] <= radius {
                break;
            }
            coords[i] = -radius;
            i += 1;
        }
    }
    out.sort();
    out.into_iter().map(|(_, w)| w).collect()
}

/// Map over items, preserving order. Runs on the rayon pool when the
/// `parallel` feature is enabled.
#[cfg(feature = "parallel")]
pub fn map_items<I: Sync, T: Send>(items: &[I], f: impl Fn(&I) -> T + Sync + Send) -> Vec<T> {
    items.par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub fn map_items<I: Sync, T: Send>(items: &[I], f: impl Fn(&I) -> T + Sync + Send) -> Vec<T> {
    map_items_sequential(items, f)
}

/// Always-sequential variant, kept callable for benchmarking both paths.
pub fn map_items_sequential<I: Sync, T: Send>(
    items: &[I],
    f: impl Fn(&I) -> T + Sync + Send,
) -> Vec<T> {
    items.iter().map(f).collect()
}

#[derive(Clone, Copy, Debug, Default, Serialize)]
pub struct CheckCount {
    pub passed: usize,
    pub failed: usize,
}

/// Aggregated result of the invariant suite over a ball.
#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    #[serde(rename = "type")]
    pub cartan_type: String,
    pub radius: i64,
    pub lambdas: usize,
    pub pairs: usize,
    pub checks: BTreeMap<String, CheckCount>,
    /// Flagged but non-failing observations (e.g. pairs with n = 0).
    pub notes: Vec<String>,
    pub failures: Vec<String>,
    pub pass: bool,
}

impl VerifyReport {
    pub fn record(&mut self, name: &str, pass: bool) {
        let c = self.checks.entry(name.to_string()).or_default();
        if pass {
            c.passed += 1;
        } else {
            c.failed += 1;
            self.pass = false;
        }
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "verify {} radius {}: {} weights, {} pairs",
            self.cartan_type, self.radius, self.lambdas, self.pairs
        )?;
        for (name, c) in &self.checks {
            writeln!(f, "  {name}: {} passed, {} failed", c.passed, c.failed)?;
        }
        for note in &self.notes {
            writeln!(f, "  note: {note}")?;
        }
        for failure in &self.failures {
            writeln!(f, "  FAIL: {failure}")?;
        }
        write!(f, "{}", if self.pass { "PASS" } else { "FAIL" })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(name: &str) -> RootSystem {
        RootSystem::build(name.parse().unwrap()).unwrap()
    }

    #[test]
    fn a1_balls() {
        let r = rs("A1");
        let b = ball(&r, 0);
        assert_eq!(b, vec![Weight(vec![0])]);
        let b = ball(&r, 2);
        assert_eq!(b.len(), 5); // 0, +-1, +-2
        assert_eq!(b[0], Weight(vec![0]));
    }

    #[test]
    fn g2_radius_six_ball() {
        let r = rs("G2");
        let b = ball(&r, 6);
        assert!(b.contains(&Weight(vec![0, 0])));
        assert!(b.contains(&Weight(vec![1, 0])));
        assert!(b.contains(&Weight(vec![-1, 0])));
        // The long fundamental weight is further out.
        assert!(!b.contains(&Weight(vec![0, 1])));
        assert!(b.iter().all(|w| r.translation_length(w) <= 6));
    }

    #[test]
    fn map_orders_agree() {
        let items: Vec<i64> = (0..100).collect();
        let f = |x: &i64| x * x;
        assert_eq!(map_items(&items, f), map_items_sequential(&items, f));
    }
}
