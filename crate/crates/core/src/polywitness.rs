//! Ground truth and falsification: degree-definiteness of a point set,
//! the exact Remez span via an inner linear program at every probe point,
//! the Lagrange/Lebesgue cross-oracle, subset interpolation bounds,
//! sub-level set measure in 1D, and a seeded random-polynomial falsifier.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::pointset::PointSet;
use crate::poly::{basis_dimension, basis_row, Polynomial};
use crate::simplex::{self, LpOutcome};

/// Default rank tolerance for the definiteness test, relative to the
/// largest diagonal of the pivoted factorization.
pub const DEFAULT_RANK_TOL: f64 = 1e-9;

/// Default probe resolutions per axis.
pub const DEFAULT_RESOLUTION_1D: usize = 513;
pub const DEFAULT_RESOLUTION_2D: usize = 65;

pub fn default_resolution(dim: usize) -> usize {
    if dim == 1 {
        DEFAULT_RESOLUTION_1D
    } else {
        DEFAULT_RESOLUTION_2D
    }
}

/// Exact-oracle value of the Remez span over a probe grid: a certified
/// lower bound on the true span, converging from below as the grid
/// refines. The witness satisfies `|witness| <= 1` on `Z` and
/// `|witness(probe)| = value`.
#[derive(Debug, Clone)]
pub struct RemezEstimate {
    pub value: f64,
    pub probe: Vec<f64>,
    pub witness: Polynomial,
    pub probe_grid: usize,
    pub definite: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct DefinitenessReport {
    pub definite: bool,
    pub rank: usize,
    pub required: usize,
    /// Ratio of the smallest retained diagonal to the largest; a
    /// conditioning warning when barely above the tolerance.
    pub smallest_ratio: f64,
}

// ---------------------------------------------------------------------------
// Definiteness (numerical rank of the evaluation matrix)
// ---------------------------------------------------------------------------

/// Diagonal magnitudes of a Householder QR factorization with column
/// pivoting of `mat` (rows x cols, rows >= 1), in elimination order.
fn pivoted_qr_diagonal(mut mat: Vec<Vec<f64>>, cols: usize) -> Vec<f64> {
    let rows = mat.len();
    let steps = cols.min(rows);
    let mut diag = Vec::with_capacity(steps);
    let mut col_order: Vec<usize> = (0..cols).collect();
    for k in 0..steps {
        // pivot: column with the largest remaining norm
        let mut best = k;
        let mut best_norm = -1.0f64;
        for (ci, &c) in col_order.iter().enumerate().skip(k) {
            let norm: f64 = (k..rows).map(|r| mat[r][c] * mat[r][c]).sum();
            if norm > best_norm {
                best_norm = norm;
                best = ci;
            }
        }
        col_order.swap(k, best);
        let c = col_order[k];
        let norm = best_norm.sqrt();
        diag.push(norm);
        if norm == 0.0 {
            continue;
        }
        // Householder vector for column c on rows k..
        let alpha = if mat[k][c] >= 0.0 { -norm } else { norm };
        let mut v: Vec<f64> = (k..rows).map(|r| mat[r][c]).collect();
        v[0] -= alpha;
        let vnorm2: f64 = v.iter().map(|x| x * x).sum();
        if vnorm2 == 0.0 {
            continue;
        }
        for &cc in &col_order[k..] {
            let dot: f64 = (k..rows).map(|r| mat[r][cc] * v[r - k]).sum();
            let scale = 2.0 * dot / vnorm2;
            for r in k..rows {
                mat[r][cc] -= scale * v[r - k];
            }
        }
    }
    diag
}

pub fn definiteness_report(z: &PointSet, degree: usize, tol: f64) -> DefinitenessReport {
    let required = basis_dimension(z.dim(), degree);
    if z.len() < required {
        return DefinitenessReport {
            definite: false,
            rank: 0,
            required,
            smallest_ratio: 0.0,
        };
    }
    let mat: Vec<Vec<f64>> = z
        .points()
        .iter()
        .map(|p| basis_row(z.dim(), degree, z.bounding_box(), p))
        .collect();
    let diag = pivoted_qr_diagonal(mat, required);
    let largest = diag.first().copied().unwrap_or(0.0);
    if largest == 0.0 {
        return DefinitenessReport {
            definite: false,
            rank: 0,
            required,
            smallest_ratio: 0.0,
        };
    }
    let rank = diag.iter().take_while(|d| **d > tol * largest).count();
    DefinitenessReport {
        definite: rank == required,
        rank,
        required,
        smallest_ratio: diag.last().copied().unwrap_or(0.0) / largest,
    }
}

/// True iff the evaluation matrix of `Z` in the degree-`d` basis has full
/// numerical rank, i.e. no nonzero polynomial of degree `d` vanishes on
/// `Z`.
pub fn is_d_definite(z: &PointSet, degree: usize, tol: f64) -> bool {
    definiteness_report(z, degree, tol).definite
}

// ---------------------------------------------------------------------------
// The inner linear program and the exact span oracle
// ---------------------------------------------------------------------------

/// Shared data for repeated LP solves against one point set.
struct LpContext {
    dim: usize,
    degree: usize,
    /// `a[r][j]`: row r of the dual equality system, columns are the
    /// split positive/negative weights of the points.
    a: Vec<Vec<f64>>,
    costs: Vec<f64>,
}

impl LpContext {
    fn build(z: &PointSet, degree: usize) -> Self {
        let n_basis = basis_dimension(z.dim(), degree);
        let p = z.len();
        let point_rows: Vec<Vec<f64>> = z
            .points()
            .iter()
            .map(|pt| basis_row(z.dim(), degree, z.bounding_box(), pt))
            .collect();
        let mut a = vec![vec![0.0; 2 * p]; n_basis];
        for (j, row) in point_rows.iter().enumerate() {
            for r in 0..n_basis {
                a[r][j] = row[r];
                a[r][j + p] = -row[r];
            }
        }
        LpContext {
            dim: z.dim(),
            degree,
            a,
            costs: vec![1.0; 2 * p],
        }
    }

    /// Max of `P(x*)` over polynomials with `|P| <= 1` on the points,
    /// solved through the dual: the minimal l1 representation of the
    /// evaluation functional at `x*` by the point functionals. Returns
    /// the optimum and the witness coefficients.
    fn value_at(&self, bbox: &crate::pointset::BoundingBox, xstar: &[f64]) -> Result<(f64, Vec<f64>)> {
        let rhs = basis_row(self.dim, self.degree, bbox, xstar);
        match simplex::solve(&self.a, &rhs, &self.costs) {
            LpOutcome::Optimal(sol) => Ok((sol.objective, sol.multipliers)),
            LpOutcome::Infeasible | LpOutcome::Unbounded => Err(Error::IndefiniteSet(
                "evaluation functional is not representable; the set does not norm the degree"
                    .into(),
            )),
            LpOutcome::IterationLimit => Err(Error::invalid(
                "simplex iteration limit reached".to_string(),
            )),
        }
    }
}

/// Largest value a degree-`d` polynomial bounded by 1 on `Z` can take at
/// `xstar`, with the achieving coefficient vector.
pub fn lp_value_at(z: &PointSet, degree: usize, xstar: &[f64]) -> Result<(f64, Vec<f64>)> {
    if xstar.len() != z.dim() {
        return Err(Error::DimensionMismatch {
            expected: z.dim(),
            got: xstar.len(),
        });
    }
    let report = definiteness_report(z, degree, DEFAULT_RANK_TOL);
    if !report.definite {
        return Err(Error::IndefiniteSet(format!(
            "rank {} of {} required",
            report.rank, report.required
        )));
    }
    LpContext::build(z, degree).value_at(z.bounding_box(), xstar)
}

/// Equispaced tensor probe grid with `resolution` nodes per axis,
/// endpoints included (so box corners are always probed).
pub fn probe_grid(
    bbox: &crate::pointset::BoundingBox,
    resolution: usize,
) -> Result<Vec<Vec<f64>>> {
    if resolution < 2 {
        return Err(Error::invalid("probe resolution must be at least 2"));
    }
    let n = bbox.dim();
    let axes: Vec<Vec<f64>> = (0..n)
        .map(|a| {
            (0..resolution)
                .map(|k| {
                    if k == resolution - 1 {
                        bbox.hi[a]
                    } else {
                        bbox.lo[a] + (bbox.hi[a] - bbox.lo[a]) * k as f64 / (resolution - 1) as f64
                    }
                })
                .collect()
        })
        .collect();
    let mut out = Vec::with_capacity(resolution.pow(n as u32));
    let mut idx = vec![0usize; n];
    loop {
        out.push((0..n).map(|a| axes[a][idx[a]]).collect::<Vec<f64>>());
        let mut a = n;
        loop {
            if a == 0 {
                return Ok(out);
            }
            a -= 1;
            idx[a] += 1;
            if idx[a] < resolution {
                break;
            }
            idx[a] = 0;
        }
    }
}

/// Exact-oracle Remez span of `Z`: the max of [`lp_value_at`] over the
/// probe grid. A certified lower bound on the true span; the resolution
/// is part of the report. Ties break toward the lowest probe index.
pub fn exact_remez_span(z: &PointSet, degree: usize, resolution: usize) -> Result<RemezEstimate> {
    let report = definiteness_report(z, degree, DEFAULT_RANK_TOL);
    if !report.definite {
        return Err(Error::IndefiniteSet(format!(
            "rank {} of {} required; the span is infinite",
            report.rank, report.required
        )));
    }
    let ctx = LpContext::build(z, degree);
    let probes = probe_grid(z.bounding_box(), resolution)?;
    let mut best_value = f64::NEG_INFINITY;
    let mut best_probe = 0usize;
    let mut best_coeffs: Vec<f64> = Vec::new();
    for (i, probe) in probes.iter().enumerate() {
        let (value, coeffs) = ctx.value_at(z.bounding_box(), probe)?;
        if value > best_value {
            best_value = value;
            best_probe = i;
            best_coeffs = coeffs;
        }
    }
    let witness = Polynomial::new(
        z.dim(),
        degree,
        z.bounding_box().clone(),
        best_coeffs,
    )?;
    Ok(RemezEstimate {
        value: best_value,
        probe: probes[best_probe].clone(),
        witness,
        probe_grid: resolution,
        definite: true,
    })
}

// ---------------------------------------------------------------------------
// Lagrange/Lebesgue cross-oracle
// ---------------------------------------------------------------------------

/// Max over the probe grid of `sum_i |l_i(x)|` for the Lagrange basis of a
/// 1D set of exactly `d+1` points. Independent of the LP machinery.
pub fn lebesgue_oracle(z: &PointSet, degree: usize, resolution: usize) -> Result<f64> {
    if z.dim() != 1 {
        return Err(Error::DimensionMismatch {
            expected: 1,
            got: z.dim(),
        });
    }
    if z.len() != degree + 1 {
        return Err(Error::invalid(format!(
            "need exactly {} nodes for degree {degree}, got {}",
            degree + 1,
            z.len()
        )));
    }
    let nodes = z.sorted_coords_1d()?;
    let probes = probe_grid(z.bounding_box(), resolution)?;
    let mut best = 0.0f64;
    for probe in &probes {
        let x = probe[0];
        let mut sum = 0.0;
        for i in 0..nodes.len() {
            let mut li = 1.0;
            for j in 0..nodes.len() {
                if j != i {
                    li *= (x - nodes[j]) / (nodes[i] - nodes[j]);
                }
            }
            sum += li.abs();
        }
        best = best.max(sum);
    }
    Ok(best)
}

// ---------------------------------------------------------------------------
// Subset interpolation (Favard) bounds
// ---------------------------------------------------------------------------

/// `sum_i 1 / |prod_{j != i} (x_i - x_j)|` over a set of distinct reals.
pub fn favard_subset_value(points: &[f64]) -> Result<f64> {
    if points.len() < 2 {
        return Err(Error::invalid("need at least two interpolation nodes"));
    }
    for i in 0..points.len() {
        for j in (i + 1)..points.len() {
            if points[i] == points[j] {
                return Err(Error::invalid(format!(
                    "coincident nodes at value {}",
                    points[i]
                )));
            }
        }
    }
    let mut sum = 0.0;
    for i in 0..points.len() {
        let mut prod = 1.0f64;
        for j in 0..points.len() {
            if j != i {
                prod *= points[i] - points[j];
            }
        }
        sum += prod.abs().recip();
    }
    Ok(sum)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum FavardMode {
    Exact,
    Heuristic,
}

#[derive(Debug, Clone, Serialize)]
pub struct FavardReport {
    pub value: f64,
    pub mode: FavardMode,
    pub subset: Vec<f64>,
}

/// Cap on the number of subsets the exact mode may enumerate.
pub const FAVARD_EXACT_CAP: usize = 200_000;

fn binomial(n: usize, k: usize) -> Option<usize> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc = 1usize;
    for i in 0..k {
        acc = acc.checked_mul(n - i)?;
        acc /= i + 1;
    }
    Some(acc)
}

/// Interpolation upper bound on the span: the minimum of
/// [`favard_subset_value`] over `(d+1)`-point subsets. Exact mode
/// enumerates all subsets up to a size cap; heuristic mode scans sliding
/// windows of consecutive sorted points plus a farthest-point subset,
/// still a valid upper bound on the infimum.
pub fn favard_bound(z: &PointSet, degree: usize, mode: FavardMode) -> Result<FavardReport> {
    let xs = z.sorted_coords_1d()?;
    let k = degree + 1;
    if xs.len() < k {
        return Err(Error::NotApplicable(format!(
            "need at least {k} points for degree {degree}, got {}",
            xs.len()
        )));
    }
    let exact_feasible = matches!(binomial(xs.len(), k), Some(c) if c <= FAVARD_EXACT_CAP);
    let mode = match mode {
        FavardMode::Exact if exact_feasible => FavardMode::Exact,
        _ => FavardMode::Heuristic,
    };
    let mut best = f64::INFINITY;
    let mut best_subset: Vec<f64> = Vec::new();
    let mut consider = |subset: &[f64]| -> Result<()> {
        let v = favard_subset_value(subset)?;
        if v < best {
            best = v;
            best_subset = subset.to_vec();
        }
        Ok(())
    };
    match mode {
        FavardMode::Exact => {
            let mut choose = (0..k).collect::<Vec<usize>>();
            loop {
                let subset: Vec<f64> = choose.iter().map(|&i| xs[i]).collect();
                consider(&subset)?;
                // next combination
                let mut i = k;
                loop {
                    if i == 0 {
                        return Ok(FavardReport {
                            value: best,
                            mode,
                            subset: best_subset,
                        });
                    }
                    i -= 1;
                    if choose[i] < xs.len() - (k - i) {
                        choose[i] += 1;
                        for j in (i + 1)..k {
                            choose[j] = choose[j - 1] + 1;
                        }
                        break;
                    }
                }
            }
        }
        FavardMode::Heuristic => {
            for w in xs.windows(k) {
                consider(w)?;
            }
            let spread = farthest_point_subset_1d(&xs, k);
            consider(&spread)?;
            Ok(FavardReport {
                value: best,
                mode,
                subset: best_subset,
            })
        }
    }
}

/// Greedy max-dispersion subset of sorted 1D values: the extreme pair,
/// then repeated farthest insertion.
fn farthest_point_subset_1d(xs: &[f64], k: usize) -> Vec<f64> {
    let mut chosen = vec![xs[0], *xs.last().unwrap()];
    while chosen.len() < k {
        let mut best_x = xs[0];
        let mut best_d = -1.0;
        for &x in xs {
            let d = chosen
                .iter()
                .map(|&c| (x - c).abs())
                .fold(f64::INFINITY, f64::min);
            if d > best_d {
                best_d = d;
                best_x = x;
            }
        }
        chosen.push(best_x);
    }
    chosen.sort_by(|a, b| a.partial_cmp(b).unwrap());
    chosen.truncate(k);
    chosen
}

// ---------------------------------------------------------------------------
// Sub-level measure in 1D
// ---------------------------------------------------------------------------

/// Lebesgue measure of `{x in box : |P(x)| <= rho}` for a 1D polynomial,
/// by sign-change bracketing of `|P| - rho` on a dense grid with bisection
/// refinement of every crossing.
pub fn sublevel_measure_1d(p: &Polynomial, rho: f64) -> Result<f64> {
    if p.dim() != 1 {
        return Err(Error::DimensionMismatch {
            expected: 1,
            got: p.dim(),
        });
    }
    if !(rho > 0.0) {
        return Err(Error::invalid(format!("rho must be positive, got {rho}")));
    }
    let (lo, hi) = (p.bounding_box().lo[0], p.bounding_box().hi[0]);
    let g = |x: f64| p.eval(&[x]).expect("1d eval") .abs() - rho;
    let cells = (4 * p.degree().max(1) * 64).max(256);
    let mut breaks = vec![lo];
    let mut prev_x = lo;
    let mut prev_v = g(lo);
    for t in 1..=cells {
        let x = lo + (hi - lo) * t as f64 / cells as f64;
        let v = g(x);
        if v == 0.0 {
            // grid point exactly on the boundary
            breaks.push(x);
        } else if prev_v != 0.0 && prev_v * v < 0.0 {
            let (mut xl, mut xr) = (prev_x, x);
            let mut fl = prev_v;
            while xr - xl > 1e-12 {
                let mid = 0.5 * (xl + xr);
                let fm = g(mid);
                if fm == 0.0 {
                    xl = mid;
                    xr = mid;
                    break;
                }
                if fl * fm < 0.0 {
                    xr = mid;
                } else {
                    xl = mid;
                    fl = fm;
                }
            }
            breaks.push(0.5 * (xl + xr));
        }
        prev_x = x;
        prev_v = v;
    }
    breaks.push(hi);
    let mut measure = 0.0;
    for w in breaks.windows(2) {
        let mid = 0.5 * (w[0] + w[1]);
        if g(mid) <= 0.0 {
            measure += w[1] - w[0];
        }
    }
    Ok(measure)
}

// ---------------------------------------------------------------------------
// Random-polynomial falsifier
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Serialize)]
pub struct Violation {
    pub trial: u64,
    pub ratio: f64,
    pub coeffs: Vec<f64>,
}

#[derive(Debug, Clone, Serialize)]
pub struct FalsifyReport {
    pub trials: u64,
    pub seed: u64,
    pub bound: f64,
    pub max_ratio: f64,
    pub worst_trial: u64,
    pub violations: Vec<Violation>,
}

impl FalsifyReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Standard normal sample by Box-Muller from the uniform source.
fn normal_sample(rng: &mut ChaCha8Rng) -> f64 {
    let u1: f64 = rng.random::<f64>().max(f64::MIN_POSITIVE);
    let u2: f64 = rng.random();
    (-2.0 * u1.ln()).sqrt() * (2.0 * std::f64::consts::PI * u2).cos()
}

/// Samples random coefficient vectors, normalizes each polynomial by its
/// exact max over `Z`, and checks that the max over the probe grid never
/// exceeds `bound` (with a small slack). Any violation is reported with
/// full reproduction data; it signals an implementation bug rather than a
/// failure of the underlying inequality.
pub fn falsify(
    z: &PointSet,
    degree: usize,
    bound: f64,
    trials: u64,
    seed: u64,
    resolution: usize,
) -> Result<FalsifyReport> {
    let report = definiteness_report(z, degree, DEFAULT_RANK_TOL);
    if !report.definite {
        return Err(Error::IndefiniteSet(format!(
            "rank {} of {} required",
            report.rank, report.required
        )));
    }
    let n_basis = basis_dimension(z.dim(), degree);
    let point_rows: Vec<Vec<f64>> = z
        .points()
        .iter()
        .map(|p| basis_row(z.dim(), degree, z.bounding_box(), p))
        .collect();
    let probes = probe_grid(z.bounding_box(), resolution)?;
    let probe_rows: Vec<Vec<f64>> = probes
        .iter()
        .map(|p| basis_row(z.dim(), degree, z.bounding_box(), p))
        .collect();

    let mut max_ratio = 0.0f64;
    let mut worst_trial = 0u64;
    let mut violations = Vec::new();
    for trial in 0..trials {
        let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(trial.wrapping_mul(0x9E3779B97F4A7C15)));
        let coeffs: Vec<f64> = (0..n_basis).map(|_| normal_sample(&mut rng)).collect();
        let max_on_z = point_rows
            .iter()
            .map(|row| dot(row, &coeffs).abs())
            .fold(0.0f64, f64::max);
        if max_on_z == 0.0 {
            continue;
        }
        let max_on_grid = probe_rows
            .iter()
            .map(|row| dot(row, &coeffs).abs())
            .fold(0.0f64, f64::max);
        let ratio = max_on_grid / max_on_z;
        if ratio > max_ratio {
            max_ratio = ratio;
            worst_trial = trial;
        }
        if ratio > bound + 1e-6 {
            violations.push(Violation {
                trial,
                ratio,
                coeffs,
            });
        }
    }
    Ok(FalsifyReport {
        trials,
        seed,
        bound,
        max_ratio,
        worst_trial,
        violations,
    })
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// JSON form of a span estimate, with the witness inlined.
pub fn remez_estimate_to_json(est: &RemezEstimate) -> String {
    #[derive(Serialize)]
    struct Form<'a> {
        value: f64,
        probe: &'a [f64],
        probe_grid: usize,
        definite: bool,
        witness: serde_json::Value,
    }
    let witness: serde_json::Value =
        serde_json::from_str(&crate::poly::polynomial_to_json(&est.witness))
            .expect("witness json");
    serde_json::to_string_pretty(&Form {
        value: est.value,
        probe: &est.probe,
        probe_grid: est.probe_grid,
        definite: est.definite,
        witness,
    })
    .expect("estimate json")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pointset::{make_grid_1d, make_power_set, BoundingBox};

    fn set_1d(xs: &[f64]) -> PointSet {
        PointSet::new(
            1,
            BoundingBox::symmetric_unit(1),
            xs.iter().map(|&x| vec![x]).collect(),
        )
        .unwrap()
    }

    #[test]
    fn definiteness_basic_cases() {
        // d+1 distinct points norm degree d
        let z = set_1d(&[-1.0, 0.0, 1.0]);
        assert!(is_d_definite(&z, 2, DEFAULT_RANK_TOL));
        // d points do not
        assert!(!is_d_definite(&z, 3, DEFAULT_RANK_TOL));

        // three collinear points in the plane lie on a degree-1 zero set
        let z = PointSet::new(
            2,
            BoundingBox::symmetric_unit(2),
            vec![vec![-0.5, -0.5], vec![0.0, 0.0], vec![0.5, 0.5]],
        )
        .unwrap();
        assert!(!is_d_definite(&z, 1, DEFAULT_RANK_TOL));

        // perturbing one point off the line restores full rank
        let z = PointSet::new(
            2,
            BoundingBox::symmetric_unit(2),
            vec![vec![-0.5, -0.5], vec![0.0, 0.4], vec![0.5, 0.5]],
        )
        .unwrap();
        assert!(is_d_definite(&z, 1, DEFAULT_RANK_TOL));
    }

    #[test]
    fn lp_at_member_point_is_one() {
        let z = set_1d(&[-1.0, 0.0, 1.0]);
        let (v, _) = lp_value_at(&z, 2, &[0.0]).unwrap();
        assert!((v - 1.0).abs() < 1e-9);
    }

    #[test]
    fn lp_matches_lebesgue_function() {
        let z = set_1d(&[-1.0, 0.0, 1.0]);
        let (v, coeffs) = lp_value_at(&z, 2, &[0.5]).unwrap();
        assert!((v - 1.25).abs() < 1e-9);
        let (v2, _) = lp_value_at(&z, 2, &[-0.5]).unwrap();
        assert!((v2 - 1.25).abs() < 1e-9);

        // witness feasibility on Z and optimality at the probe
        let w = Polynomial::new(1, 2, z.bounding_box().clone(), coeffs).unwrap();
        for p in z.points() {
            assert!(w.eval(p).unwrap().abs() <= 1.0 + 1e-9);
        }
        assert!((w.eval(&[0.5]).unwrap().abs() - 1.25).abs() < 1e-9);
    }

    #[test]
    fn exact_span_canonical_value() {
        let z = set_1d(&[-1.0, 0.0, 1.0]);
        let est = exact_remez_span(&z, 2, 513).unwrap();
        assert!((est.value - 1.25).abs() < 1e-9);
        assert!((est.probe[0].abs() - 0.5).abs() < 1e-12);
        assert!(est.definite);
        assert_eq!(est.probe_grid, 513);
    }

    #[test]
    fn exact_span_indefinite_set_is_rejected() {
        let z = set_1d(&[-1.0, 1.0]);
        assert!(matches!(
            exact_remez_span(&z, 2, 65),
            Err(Error::IndefiniteSet(_))
        ));
    }

    #[test]
    fn span_decreases_toward_one_for_dense_grids() {
        let mut prev = f64::INFINITY;
        for s in [11usize, 31, 101] {
            let g = make_grid_1d(s).unwrap();
            let est = exact_remez_span(&g, 3, 257).unwrap();
            assert!(est.value >= 1.0 - 1e-12);
            assert!(est.value < prev + 1e-12);
            prev = est.value;
        }
        assert!(prev < 1.2);
    }

    #[test]
    fn dense_grid_span_is_one_within_a_thousandth() {
        let g = make_grid_1d(512).unwrap();
        let est = exact_remez_span(&g, 3, 513).unwrap();
        assert!(est.value >= 1.0 - 1e-12);
        assert!(est.value <= 1.0 + 1e-3, "{}", est.value);
    }

    #[test]
    fn span_monotone_under_inclusion() {
        let big = make_power_set(1.0, 20).unwrap();
        let small = make_power_set(1.0, 6).unwrap();
        let a = exact_remez_span(&big, 2, 257).unwrap().value;
        let b = exact_remez_span(&small, 2, 257).unwrap().value;
        assert!(a <= b + 1e-6);
    }

    #[test]
    fn power_set_span_within_hand_bound() {
        let z = make_power_set(1.0, 50).unwrap();
        let est = exact_remez_span(&z, 2, 257).unwrap();
        assert!(est.value >= 1.0);
        assert!(est.value <= 65.0);
    }

    #[test]
    fn lebesgue_examples() {
        let z = set_1d(&[-1.0, 0.0, 1.0]);
        let v = lebesgue_oracle(&z, 2, 513).unwrap();
        assert!((v - 1.25).abs() < 1e-9);

        let z = set_1d(&[-1.0, 1.0]);
        let v = lebesgue_oracle(&z, 1, 513).unwrap();
        assert!((v - 1.0).abs() < 1e-12);

        // Chebyshev nodes for degree 4 give a small constant
        let nodes: Vec<f64> = (0..5)
            .map(|j| (std::f64::consts::PI * (2.0 * j as f64 + 1.0) / 10.0).cos())
            .collect();
        let z = set_1d(&nodes);
        let v = lebesgue_oracle(&z, 4, 513).unwrap();
        assert!(v > 1.0 && v < 2.0, "{v}");

        assert!(lebesgue_oracle(&set_1d(&[0.0, 0.5, 1.0]), 3, 65).is_err());
    }

    #[test]
    fn lebesgue_agrees_with_lp_for_interpolation_sets() {
        let z = set_1d(&[-0.9, -0.2, 0.4, 0.8]);
        let lp = exact_remez_span(&z, 3, 129).unwrap().value;
        let leb = lebesgue_oracle(&z, 3, 129).unwrap();
        assert!((lp - leb).abs() < 1e-7, "{lp} vs {leb}");
    }

    #[test]
    fn favard_hand_values() {
        let v = favard_subset_value(&[-1.0, 0.0, 1.0]).unwrap();
        assert_eq!(v, 2.0);
        let v = favard_subset_value(&[1.0, 0.5, 1.0 / 3.0]).unwrap();
        assert!((v - 24.0).abs() < 1e-9);
        let v = favard_subset_value(&[-0.25, 0.25]).unwrap();
        assert!((v - 4.0).abs() < 1e-12);
        assert!(favard_subset_value(&[0.5, 0.5]).is_err());
    }

    #[test]
    fn favard_bound_on_truncated_power_set() {
        let z = make_power_set(1.0, 3).unwrap();
        let r = favard_bound(&z, 2, FavardMode::Exact).unwrap();
        assert!((r.value - 24.0).abs() < 1e-9);
        assert_eq!(r.mode, FavardMode::Exact);

        // not-applicable below d+1 points
        assert!(favard_bound(&z, 3, FavardMode::Exact).is_err());
    }

    #[test]
    fn favard_heuristic_forced_above_cap() {
        let z = make_grid_1d(60).unwrap();
        let r = favard_bound(&z, 4, FavardMode::Exact).unwrap();
        // C(60, 5) is far above the cap
        assert_eq!(r.mode, FavardMode::Heuristic);
        assert!(r.value > 0.0);
    }

    #[test]
    fn sublevel_measure_examples() {
        // constant zero polynomial: the whole box
        let p = Polynomial::new(1, 1, BoundingBox::symmetric_unit(1), vec![0.0, 0.0]).unwrap();
        assert!((sublevel_measure_1d(&p, 1.0).unwrap() - 2.0).abs() < 1e-9);

        // T_4 stays within [-1, 1] on the box
        let mut coeffs = vec![0.0; 5];
        coeffs[4] = 1.0;
        let p = Polynomial::new(1, 4, BoundingBox::symmetric_unit(1), coeffs).unwrap();
        assert!((sublevel_measure_1d(&p, 1.0).unwrap() - 2.0).abs() < 1e-9);

        // 2x on [-1,1]: measure of {|2x| <= 1} is 1
        let p = Polynomial::new(1, 1, BoundingBox::symmetric_unit(1), vec![0.0, 2.0]).unwrap();
        assert!((sublevel_measure_1d(&p, 1.0).unwrap() - 1.0).abs() < 1e-9);
    }

    #[test]
    fn falsifier_respects_lp_value_and_catches_bad_bounds() {
        let z = set_1d(&[-1.0, 0.0, 1.0]);
        let est = exact_remez_span(&z, 2, 513).unwrap();
        let ok = falsify(&z, 2, est.value + 1e-6, 2000, 7, 513).unwrap();
        assert!(ok.passed(), "max ratio {}", ok.max_ratio);
        assert!(ok.max_ratio <= est.value + 1e-6);

        // negative control: bound 1 must be violated
        let bad = falsify(&z, 2, 1.0, 2000, 7, 513).unwrap();
        assert!(!bad.passed());
        assert!(bad.max_ratio > 1.0 + 1e-6);
    }

    #[test]
    fn falsifier_is_deterministic() {
        let z = make_grid_1d(7).unwrap();
        let a = falsify(&z, 2, 100.0, 500, 42, 129).unwrap();
        let b = falsify(&z, 2, 100.0, 500, 42, 129).unwrap();
        assert_eq!(a.max_ratio, b.max_ratio);
        assert_eq!(a.worst_trial, b.worst_trial);
    }
}
