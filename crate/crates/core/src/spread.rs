//! Spanning-tree spread machinery: minimal spanning trees and their
//! beta-weights, exact and greedy max-min dispersion, the spread sandwich,
//! the zeta tail sum, and the spread-based positivity criteria for the
//! metric span.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::pointset::{min_pairwise_distance, Metric, PointSet};
use crate::span::{dispersion_value, VitushkinModel};

/// Spanning tree over point indices with its metric tag. Edge list is
/// deterministic: greedy edge selection with lexicographic tie-breaking.
#[derive(Debug, Clone, Serialize)]
pub struct SpanningTree {
    pub edges: Vec<(usize, usize, f64)>,
    pub metric: Metric,
}

impl SpanningTree {
    pub fn total_weight(&self) -> f64 {
        self.edges.iter().map(|e| e.2).sum()
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn root(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn unite(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.root(a), self.root(b));
        if ra == rb {
            return false;
        }
        self.parent[ra] = rb;
        true
    }
}

/// Minimal spanning tree by sorted greedy edge insertion.
pub fn mst(z: &PointSet, metric: Metric) -> Result<SpanningTree> {
    if z.len() < 2 {
        return Err(Error::InsufficientPoints {
            needed: 2,
            got: z.len(),
        });
    }
    let pts = z.points();
    let mut edges = Vec::with_capacity(pts.len() * (pts.len() - 1) / 2);
    for i in 0..pts.len() {
        for j in (i + 1)..pts.len() {
            edges.push((metric.dist(&pts[i], &pts[j]), i, j));
        }
    }
    edges.sort_by(|a, b| {
        a.0.partial_cmp(&b.0)
            .unwrap()
            .then(a.1.cmp(&b.1))
            .then(a.2.cmp(&b.2))
    });
    let mut uf = UnionFind::new(pts.len());
    let mut tree = Vec::with_capacity(pts.len() - 1);
    for (d, i, j) in edges {
        if uf.unite(i, j) {
            tree.push((i, j, d));
            if tree.len() == pts.len() - 1 {
                break;
            }
        }
    }
    Ok(SpanningTree { edges: tree, metric })
}

/// `sum d^beta` over the edges of a 1-minimal tree. Valid for every
/// `beta > 0`: the tree depends only on the ordering of edge lengths.
pub fn beta_weight(tree: &SpanningTree, beta: f64) -> Result<f64> {
    if !(beta > 0.0) {
        return Err(Error::invalid(format!("beta must be positive, got {beta}")));
    }
    Ok(tree.edges.iter().map(|e| e.2.powf(beta)).sum())
}

/// MST beta-weight of a subset of points by dense Prim growth: same value
/// as the greedy edge tree (all minimal trees share their weight
/// multiset), linear memory.
fn prim_beta_weight(pts: &[&[f64]], metric: Metric, beta: f64) -> f64 {
    let n = pts.len();
    if n < 2 {
        return 0.0;
    }
    let mut in_tree = vec![false; n];
    let mut best = vec![f64::INFINITY; n];
    in_tree[0] = true;
    for j in 1..n {
        best[j] = metric.dist(pts[0], pts[j]);
    }
    let mut total = 0.0;
    for _ in 1..n {
        let mut pick = usize::MAX;
        let mut pick_d = f64::INFINITY;
        for j in 0..n {
            if !in_tree[j] && best[j] < pick_d {
                pick_d = best[j];
                pick = j;
            }
        }
        total += pick_d.powf(beta);
        in_tree[pick] = true;
        for j in 0..n {
            if !in_tree[j] {
                let d = metric.dist(pts[pick], pts[j]);
                if d < best[j] {
                    best[j] = d;
                }
            }
        }
    }
    total
}

// ---------------------------------------------------------------------------
// Max-min dispersion
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EtaMode {
    Exact,
    Greedy,
}

/// Size caps for the exact dispersion search.
const ETA_EXACT_MAX_POINTS: usize = 25;
const ETA_EXACT_MAX_P: usize = 10;

fn eta_exact_feasible(n: usize, p: usize) -> bool {
    n <= 12 || (n <= ETA_EXACT_MAX_POINTS && p <= ETA_EXACT_MAX_P)
}

/// Largest achievable minimum pairwise distance among `p` points of `Z`,
/// as a `(lo, hi)` pair. Exact mode (branch and bound over the candidate
/// distances) has `lo == hi`; greedy mode returns the farthest-point value
/// `g` and its approximation guarantee `2g`.
pub fn eta(z: &PointSet, p: usize, mode: EtaMode) -> Result<(f64, f64)> {
    eta_with_metric(z, p, mode, Metric::Linf)
}

pub fn eta_with_metric(z: &PointSet, p: usize, mode: EtaMode, metric: Metric) -> Result<(f64, f64)> {
    if p < 2 || p > z.len() {
        return Err(Error::invalid(format!(
            "subset size must lie in [2, {}], got {p}",
            z.len()
        )));
    }
    match mode {
        EtaMode::Exact => {
            if p == z.len() {
                // only one subset: its dispersion is the minimal distance
                let v = match metric {
                    Metric::Linf => min_pairwise_distance(z)?,
                    Metric::Euclidean => all_pairs(z, metric)
                        .into_iter()
                        .fold(f64::INFINITY, f64::min),
                };
                return Ok((v, v));
            }
            if !eta_exact_feasible(z.len(), p) {
                return Err(Error::TooLarge(format!(
                    "exact dispersion is capped at {ETA_EXACT_MAX_POINTS} points / subsets of {ETA_EXACT_MAX_P}",
                )));
            }
            let v = exact_dispersion(z, p, metric);
            Ok((v, v))
        }
        EtaMode::Greedy => {
            let order = farthest_point_ordering(z, metric);
            let g = order.prefix_value(p);
            Ok((g, 2.0 * g))
        }
    }
}

fn all_pairs(z: &PointSet, metric: Metric) -> Vec<f64> {
    let pts = z.points();
    let mut out = Vec::with_capacity(pts.len() * (pts.len() - 1) / 2);
    for i in 0..pts.len() {
        for j in (i + 1)..pts.len() {
            out.push(metric.dist(&pts[i], &pts[j]));
        }
    }
    out
}

/// Exact max-min dispersion: binary search over candidate distances with a
/// bitmask feasibility search.
fn exact_dispersion(z: &PointSet, p: usize, metric: Metric) -> f64 {
    let n = z.len();
    let pts = z.points();
    let mut dist = vec![vec![0.0f64; n]; n];
    for i in 0..n {
        for j in (i + 1)..n {
            let d = metric.dist(&pts[i], &pts[j]);
            dist[i][j] = d;
            dist[j][i] = d;
        }
    }
    let mut candidates = all_pairs(z, metric);
    candidates.sort_by(|a, b| a.partial_cmp(b).unwrap());
    candidates.dedup();

    let feasible = |delta: f64| -> bool {
        // adjacency: allowed to co-select iff distance >= delta
        let masks: Vec<u64> = (0..n)
            .map(|i| {
                let mut m = 0u64;
                for j in 0..n {
                    if j != i && dist[i][j] >= delta {
                        m |= 1 << j;
                    }
                }
                m
            })
            .collect();
        fn dfs(start: usize, chosen: usize, allowed: u64, p: usize, n: usize, masks: &[u64]) -> bool {
            if chosen == p {
                return true;
            }
            let remaining = (allowed >> start) << start;
            if chosen + (remaining.count_ones() as usize) < p {
                return false;
            }
            for i in start..n {
                if allowed & (1 << i) != 0 {
                    let rest = allowed & masks[i];
                    if chosen + 1 + rest.count_ones() as usize >= p
                        && dfs(i + 1, chosen + 1, rest, p, n, masks)
                    {
                        return true;
                    }
                }
            }
            false
        }
        dfs(0, 0, (1u64 << n) - 1, p, n, &masks)
    };

    // binary search for the largest feasible candidate
    let (mut lo, mut hi) = (0usize, candidates.len() - 1);
    debug_assert!(feasible(candidates[0]));
    if feasible(candidates[hi]) {
        return candidates[hi];
    }
    while hi - lo > 1 {
        let mid = (lo + hi) / 2;
        if feasible(candidates[mid]) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    candidates[lo]
}

/// Farthest-point traversal starting from the extreme pair, with the
/// dispersion value of every prefix.
struct FarthestOrdering {
    /// `values[k]` is the min pairwise distance of the first `k + 2`
    /// points of the ordering.
    values: Vec<f64>,
    order: Vec<usize>,
}

impl FarthestOrdering {
    fn prefix_value(&self, p: usize) -> f64 {
        self.values[p - 2]
    }
}

fn farthest_point_ordering(z: &PointSet, metric: Metric) -> FarthestOrdering {
    let pts = z.points();
    let n = pts.len();
    // extreme pair, lexicographic tie-break via scan order
    let (mut a, mut b, mut diam) = (0usize, 1usize, -1.0f64);
    for i in 0..n {
        for j in (i + 1)..n {
            let d = metric.dist(&pts[i], &pts[j]);
            if d > diam {
                diam = d;
                a = i;
                b = j;
            }
        }
    }
    let mut order = vec![a, b];
    let mut values = vec![diam];
    let mut min_dist: Vec<f64> = (0..n)
        .map(|i| metric.dist(&pts[i], &pts[a]).min(metric.dist(&pts[i], &pts[b])))
        .collect();
    let mut used = vec![false; n];
    used[a] = true;
    used[b] = true;
    let mut current = diam;
    for _ in 2..n {
        let mut pick = usize::MAX;
        let mut pick_d = -1.0;
        for i in 0..n {
            if !used[i] && min_dist[i] > pick_d {
                pick_d = min_dist[i];
                pick = i;
            }
        }
        used[pick] = true;
        order.push(pick);
        current = current.min(pick_d);
        values.push(current);
        for i in 0..n {
            if !used[i] {
                let d = metric.dist(&pts[i], &pts[pick]);
                if d < min_dist[i] {
                    min_dist[i] = d;
                }
            }
        }
    }
    FarthestOrdering { values, order }
}

// ---------------------------------------------------------------------------
// Beta-spread
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpreadMode {
    Exact,
    Heuristic,
}

/// Exact subset maximization is limited to this many points.
pub const SPREAD_EXACT_MAX_POINTS: usize = 12;

/// Spread report: `v_lo <= V_beta(Z) <= v_hi`, the beta-weight of the full
/// tree, and the per-size dispersion table that produced the upper side.
#[derive(Debug, Clone, Serialize)]
pub struct SpreadReport {
    pub beta: f64,
    pub rho_full: f64,
    pub v_lo: f64,
    pub v_hi: f64,
    /// rows `(p, eta_lo, eta_hi)`
    pub eta_table: Vec<(usize, f64, f64)>,
    pub exact: bool,
}

impl SpreadReport {
    pub fn eta_table_csv(&self) -> String {
        let mut out = String::from("p,eta_lo,eta_hi\n");
        for (p, lo, hi) in &self.eta_table {
            out.push_str(&format!("{p},{lo},{hi}\n"));
        }
        out
    }
}

/// The beta-spread `V_beta(Z)`: sup over subsets of the beta-weight of
/// their minimal spanning tree. Exact mode enumerates every subset
/// (subsets matter: for `beta > 1` adding points can lower the weight);
/// heuristic mode reports one-sided bounds from farthest-point prefixes
/// and the dispersion sandwich.
pub fn beta_spread(z: &PointSet, beta: f64, mode: SpreadMode) -> Result<SpreadReport> {
    beta_spread_with_metric(z, beta, mode, Metric::Linf)
}

pub fn beta_spread_with_metric(
    z: &PointSet,
    beta: f64,
    mode: SpreadMode,
    metric: Metric,
) -> Result<SpreadReport> {
    if !(beta > 0.0) {
        return Err(Error::invalid(format!("beta must be positive, got {beta}")));
    }
    if z.len() < 2 {
        return Err(Error::InsufficientPoints {
            needed: 2,
            got: z.len(),
        });
    }
    let pts = z.points();
    let full_refs: Vec<&[f64]> = pts.iter().map(|p| p.as_slice()).collect();
    let rho_full = prim_beta_weight(&full_refs, metric, beta);

    let exact = matches!(mode, SpreadMode::Exact) && z.len() <= SPREAD_EXACT_MAX_POINTS;
    if exact {
        let n = z.len();
        let mut best = 0.0f64;
        for mask in 1u32..(1u32 << n) {
            if mask.count_ones() < 2 {
                continue;
            }
            let subset: Vec<&[f64]> = (0..n)
                .filter(|i| mask & (1 << i) != 0)
                .map(|i| pts[i].as_slice())
                .collect();
            best = best.max(prim_beta_weight(&subset, metric, beta));
        }
        let mut eta_table = Vec::new();
        for p in 2..=n {
            let (lo, hi) = eta_with_metric(z, p, EtaMode::Exact, metric)?;
            eta_table.push((p, lo, hi));
        }
        return Ok(SpreadReport {
            beta,
            rho_full,
            v_lo: best,
            v_hi: best,
            eta_table,
            exact: true,
        });
    }

    // Heuristic: lower side from farthest-point prefixes and the full set,
    // upper side from the dispersion sandwich.
    let ordering = farthest_point_ordering(z, metric);
    let n = z.len();
    let prefix_sizes: Vec<usize> = if n <= 512 {
        (2..=n).collect()
    } else {
        let mut sizes = Vec::new();
        let mut m = 2usize;
        while m < n {
            sizes.push(m);
            m *= 2;
        }
        sizes.push(n);
        sizes
    };
    let mut v_lo = rho_full;
    for &m in &prefix_sizes {
        let subset: Vec<&[f64]> = ordering.order[..m].iter().map(|&i| pts[i].as_slice()).collect();
        v_lo = v_lo.max(prim_beta_weight(&subset, metric, beta));
    }
    let mut v_hi = 0.0;
    let mut eta_table = Vec::new();
    for p in 2..=n {
        let g = ordering.prefix_value(p);
        let hi = 2.0 * g;
        v_hi += hi.powf(beta);
        eta_table.push((p, g, hi));
    }
    v_hi = v_hi.max(v_lo);
    Ok(SpreadReport {
        beta,
        rho_full,
        v_lo,
        v_hi,
        eta_table,
        exact: false,
    })
}

/// Both sides of the dispersion sandwich, checked with exact values:
/// `sup_p (p-1) eta(p)^beta <= V_beta(Z) <= sum_j eta(j)^beta`.
#[derive(Debug, Clone, Serialize)]
pub struct SandwichReport {
    pub lower: f64,
    pub spread: f64,
    pub upper: f64,
    pub pass: bool,
}

pub fn sandwich_check(z: &PointSet, beta: f64, p_max: usize) -> Result<SandwichReport> {
    if z.len() > SPREAD_EXACT_MAX_POINTS {
        return Err(Error::TooLarge(format!(
            "sandwich check requires exact sizes (<= {SPREAD_EXACT_MAX_POINTS} points)"
        )));
    }
    let spread = beta_spread(z, beta, SpreadMode::Exact)?.v_lo;
    let mut lower: f64 = 0.0;
    let mut upper = 0.0;
    for p in 2..=z.len() {
        let (lo, _) = eta(z, p, EtaMode::Exact)?;
        if p <= p_max {
            lower = lower.max((p as f64 - 1.0) * lo.powf(beta));
        }
        upper += lo.powf(beta);
    }
    let tol = 1e-9 * (1.0 + spread.abs());
    Ok(SandwichReport {
        lower,
        spread,
        upper,
        pass: lower <= spread + tol && spread <= upper + tol,
    })
}

// ---------------------------------------------------------------------------
// Zeta and the positivity criteria
// ---------------------------------------------------------------------------

/// Tail-sum cap for the zeta evaluation.
const ZETA_MAX_TERMS: usize = 10_000_000;

/// `zeta(x) = sum p^-x` for `x > 1`: partial sum plus the integral tail
/// correction, absolute error within `tol` (up to the term cap).
pub fn zeta(x: f64, tol: f64) -> Result<f64> {
    if !(x > 1.0) {
        return Err(Error::Divergent(format!("zeta requires x > 1, got {x}")));
    }
    if !(tol > 0.0) {
        return Err(Error::invalid("tolerance must be positive"));
    }
    let n_target = tol.powf(-1.0 / (x - 1.0)).ceil();
    let n = if n_target.is_finite() {
        (n_target as usize).clamp(8, ZETA_MAX_TERMS)
    } else {
        ZETA_MAX_TERMS
    };
    // ascending magnitudes for accurate accumulation
    let mut sum = 0.0f64;
    for p in (1..=n).rev() {
        sum += (p as f64).powf(-x);
    }
    let tail = (n as f64).powf(1.0 - x) / (x - 1.0);
    Ok(sum + tail)
}

#[derive(Debug, Clone, Serialize)]
pub enum SpreadVerdict {
    PositiveCertified { v_lo: f64, threshold: f64 },
    Inconclusive { v_lo: f64, threshold: f64 },
}

impl SpreadVerdict {
    pub fn is_positive(&self) -> bool {
        matches!(self, SpreadVerdict::PositiveCertified { .. })
    }
}

/// One-sided positivity criterion for the metric span from the
/// beta-spread: certifies `omega_d(Z) > 0` when the certified spread lower
/// bound exceeds `cprime^(beta/(n-1)) * zeta(beta/(n-1))`. Requires
/// `n - 1 < beta <= n` and dimension at least 2; an inconclusive verdict
/// is not a negative certificate.
pub fn beta_spread_certificate(
    z: &PointSet,
    beta: f64,
    cprime: f64,
) -> Result<SpreadVerdict> {
    let n = z.dim();
    if n < 2 {
        return Err(Error::NotApplicable(
            "spread certificate needs dimension at least 2".into(),
        ));
    }
    let nm1 = (n - 1) as f64;
    if !(beta > nm1 && beta <= n as f64) {
        return Err(Error::invalid(format!(
            "beta must lie in (n-1, n] = ({nm1}, {n}], got {beta}"
        )));
    }
    if !(cprime > 0.0) {
        return Err(Error::invalid("model constant must be positive"));
    }
    let exponent = beta / nm1;
    let threshold = cprime.powf(exponent) * zeta(exponent, 1e-9)?;
    let mode = if z.len() <= SPREAD_EXACT_MAX_POINTS {
        SpreadMode::Exact
    } else {
        SpreadMode::Heuristic
    };
    let v_lo = beta_spread(z, beta, mode)?.v_lo;
    if v_lo > threshold {
        Ok(SpreadVerdict::PositiveCertified { v_lo, threshold })
    } else {
        Ok(SpreadVerdict::Inconclusive { v_lo, threshold })
    }
}

/// Span lower bound from `p`-point dispersion: `eta^n (p - M_d(eta))`
/// clamped at zero, evaluated at the certified lower dispersion value
/// (sound: the model decreases and `eta^n` increases in `eta`). The
/// `simplified` flag replaces the model by its one-term majorant
/// `C' (1/eta)^(n-1)`.
pub fn dispersion_span_bound(
    z: &PointSet,
    degree: usize,
    p: usize,
    model: &VitushkinModel,
    simplified: bool,
) -> Result<f64> {
    if model.dim() != z.dim() || model.degree() != degree {
        return Err(Error::invalid(
            "model does not match the point set dimension and degree".to_string(),
        ));
    }
    if p < 2 || p > z.len() {
        return Err(Error::invalid(format!(
            "subset size must lie in [2, {}], got {p}",
            z.len()
        )));
    }
    let eta_lo = if p == z.len() {
        min_pairwise_distance(z)?
    } else if eta_exact_feasible(z.len(), p) {
        eta(z, p, EtaMode::Exact)?.0
    } else {
        eta(z, p, EtaMode::Greedy)?.0
    };
    let n = z.dim();
    if simplified {
        let c = model.prime_constant();
        let v = eta_lo.powi(n as i32) * (p as f64 - c * eta_lo.powf(1.0 - n as f64));
        Ok(v.max(0.0))
    } else {
        Ok(dispersion_value(p, n, model, eta_lo))
    }
}
