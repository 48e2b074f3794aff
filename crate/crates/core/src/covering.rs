//! Covering numbers by closed `l∞` cubes of side `eps` (diameter
//! convention): exact values and full profiles in 1D, certified
//! packing/greedy intervals in higher dimension, and a small brute-force
//! oracle for cross-checking.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::pointset::{linf_dist, PointSet, DIST_SLACK};

/// One piece of a covering profile: `M(eps) = count` for
/// `eps in [eps_min, eps_max)`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ProfilePiece {
    pub count: usize,
    pub eps_min: f64,
    pub eps_max: f64,
}

/// The full step function `eps -> M(eps, Z)` of a 1D set. Pieces tile
/// `(0, inf)`; counts strictly decrease; the first piece has count `|Z|`
/// and the last has count 1 with unbounded `eps_max`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CoveringProfile {
    pub pieces: Vec<ProfilePiece>,
}

impl CoveringProfile {
    /// Evaluates the step function at `eps > 0`.
    pub fn count_at(&self, eps: f64) -> usize {
        for piece in &self.pieces {
            if eps >= piece.eps_min && eps < piece.eps_max {
                return piece.count;
            }
        }
        1
    }

    /// CSV rows `count,eps_min,eps_max` (the last `eps_max` prints as `inf`).
    pub fn to_csv(&self) -> String {
        let mut out = String::from("count,eps_min,eps_max\n");
        for p in &self.pieces {
            out.push_str(&format!("{},{},{}\n", p.count, p.eps_min, p.eps_max));
        }
        out
    }
}

/// Certified two-sided bound on `M(eps, Z)`: `m_lo` from a packing,
/// `m_hi` from a constructed cover. In 1D both equal the exact value.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CoveringInterval {
    pub m_lo: usize,
    pub m_hi: usize,
    pub eps: f64,
}

/// Exact minimal number of closed intervals of length `eps` covering a 1D
/// set, by the left-to-right greedy sweep (optimal in 1D).
pub fn covering_number_1d(z: &PointSet, eps: f64) -> Result<usize> {
    if !(eps > 0.0) {
        return Err(Error::invalid(format!("eps must be positive, got {eps}")));
    }
    let xs = z.sorted_coords_1d()?;
    Ok(sweep_count(&xs, eps))
}

fn sweep_count(sorted: &[f64], eps: f64) -> usize {
    let mut count = 0usize;
    let mut i = 0usize;
    while i < sorted.len() {
        let anchor = sorted[i];
        count += 1;
        while i < sorted.len() && sorted[i] - anchor <= eps + DIST_SLACK {
            i += 1;
        }
    }
    count
}

/// Exact covering profile of a 1D set. The breakpoint of the piece with
/// count `k` is the 1D `k`-center optimum; breakpoints are found among the
/// pairwise coordinate differences.
pub fn covering_profile_1d(z: &PointSet) -> Result<CoveringProfile> {
    let xs = z.sorted_coords_1d()?;
    let mut thresholds: Vec<f64> = Vec::new();
    for i in 0..xs.len() {
        for j in (i + 1)..xs.len() {
            thresholds.push(xs[j] - xs[i]);
        }
    }
    thresholds.sort_by(|a, b| a.partial_cmp(b).unwrap());
    thresholds.dedup();

    let mut pieces = Vec::new();
    let mut cur_count = xs.len();
    let mut cur_min = 0.0f64;
    for &t in &thresholds {
        let c = sweep_count(&xs, t);
        if c < cur_count {
            pieces.push(ProfilePiece {
                count: cur_count,
                eps_min: cur_min,
                eps_max: t,
            });
            cur_count = c;
            cur_min = t;
        }
    }
    pieces.push(ProfilePiece {
        count: cur_count,
        eps_min: cur_min,
        eps_max: f64::INFINITY,
    });
    Ok(CoveringProfile { pieces })
}

/// Size of a maximal greedy subset with pairwise `l∞` distance `> eps`,
/// scanning points in lexicographic order. No cube of side `eps` can
/// contain two such points, so the result is a lower bound on `M(eps, Z)`.
pub fn packing_number(z: &PointSet, eps: f64) -> Result<usize> {
    if !(eps > 0.0) {
        return Err(Error::invalid(format!("eps must be positive, got {eps}")));
    }
    let order = lexicographic_order(z);
    let pts = z.points();
    let mut chosen: Vec<usize> = Vec::new();
    for &i in &order {
        if chosen
            .iter()
            .all(|&j| linf_dist(&pts[i], &pts[j]) > eps + DIST_SLACK)
        {
            chosen.push(i);
        }
    }
    Ok(chosen.len())
}

/// Certified interval for `M(eps, Z)` in any dimension: the upper side
/// comes from a greedy cover anchoring a cube at the lexicographically
/// smallest uncovered point, the lower side from `packing_number`.
pub fn covering_bounds_nd(z: &PointSet, eps: f64) -> Result<CoveringInterval> {
    if !(eps > 0.0) {
        return Err(Error::invalid(format!("eps must be positive, got {eps}")));
    }
    let m_hi = greedy_cover_count(z, eps);
    let m_lo = packing_number(z, eps)?;
    debug_assert!(m_lo <= m_hi);
    Ok(CoveringInterval { m_lo, m_hi, eps })
}

fn lexicographic_order(z: &PointSet) -> Vec<usize> {
    let pts = z.points();
    let mut order: Vec<usize> = (0..pts.len()).collect();
    order.sort_by(|&a, &b| {
        pts[a]
            .iter()
            .zip(&pts[b])
            .find_map(|(x, y)| x.partial_cmp(y).filter(|o| o.is_ne()))
            .unwrap_or(std::cmp::Ordering::Equal)
    });
    order
}

/// Greedy cover: open a group at the lexicographically smallest uncovered
/// point, then absorb (in lexicographic order) every uncovered point that
/// keeps the group's per-axis spread within `eps`. Each group fits in one
/// cube of side `eps` anchored at the group's componentwise minimum, so
/// the group count is a valid upper bound on `M(eps, Z)`. In 1D this is
/// exactly the optimal left-to-right sweep.
pub(crate) fn greedy_cover_count(z: &PointSet, eps: f64) -> usize {
    let pts = z.points();
    let order = lexicographic_order(z);
    let mut covered = vec![false; pts.len()];
    let mut count = 0usize;
    for &i in &order {
        if covered[i] {
            continue;
        }
        count += 1;
        let mut lo = pts[i].clone();
        let mut hi = pts[i].clone();
        covered[i] = true;
        for &j in &order {
            if covered[j] {
                continue;
            }
            let fits = pts[j]
                .iter()
                .zip(lo.iter().zip(&hi))
                .all(|(x, (l, h))| x.max(*h) - x.min(*l) <= eps + DIST_SLACK);
            if fits {
                for a in 0..lo.len() {
                    lo[a] = lo[a].min(pts[j][a]);
                    hi[a] = hi[a].max(pts[j][a]);
                }
                covered[j] = true;
            }
        }
    }
    count
}

/// Work cap for the exact branch-and-bound cover oracle.
const BRUTE_MAX_POINTS: usize = 12;

/// Exact minimal cube cover by exhaustive branch and bound. Test oracle
/// only: restricted to `|Z| <= 12`; any dimension, intended for dims 1-2.
///
/// A cover by side-`eps` cubes is equivalent to a partition into groups of
/// per-axis spread `<= eps`, which is what the search enumerates.
pub fn covering_number_bruteforce(z: &PointSet, eps: f64) -> Result<usize> {
    if !(eps > 0.0) {
        return Err(Error::invalid(format!("eps must be positive, got {eps}")));
    }
    if z.len() > BRUTE_MAX_POINTS {
        return Err(Error::TooLarge(format!(
            "brute-force cover oracle is capped at {BRUTE_MAX_POINTS} points, got {}",
            z.len()
        )));
    }
    let bounds = covering_bounds_nd(z, eps)?;
    if bounds.m_lo == bounds.m_hi {
        return Ok(bounds.m_lo);
    }
    let pts = z.points();
    for k in bounds.m_lo..bounds.m_hi {
        let mut groups: Vec<(Vec<f64>, Vec<f64>)> = Vec::new(); // per-group (min, max)
        if assign(pts, 0, k, eps, &mut groups) {
            return Ok(k);
        }
    }
    Ok(bounds.m_hi)
}

fn assign(
    pts: &[Vec<f64>],
    i: usize,
    k: usize,
    eps: f64,
    groups: &mut Vec<(Vec<f64>, Vec<f64>)>,
) -> bool {
    if i == pts.len() {
        return true;
    }
    let p = &pts[i];
    for g in 0..groups.len() {
        let fits = groups[g]
            .0
            .iter()
            .zip(&groups[g].1)
            .zip(p)
            .all(|((lo, hi), x)| x.max(*hi) - x.min(*lo) <= eps + DIST_SLACK);
        if fits {
            let saved = groups[g].clone();
            for a in 0..p.len() {
                groups[g].0[a] = groups[g].0[a].min(p[a]);
                groups[g].1[a] = groups[g].1[a].max(p[a]);
            }
            if assign(pts, i + 1, k, eps, groups) {
                return true;
            }
            groups[g] = saved;
        }
    }
    if groups.len() < k {
        groups.push((p.clone(), p.clone()));
        if assign(pts, i + 1, k, eps, groups) {
            return true;
        }
        groups.pop();
    }
    false
}
