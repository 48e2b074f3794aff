//! The covering-number growth model for polynomial sub-level sets, the
//! metric d-span of a point set (exact in 1D, certified interval in
//! higher dimension), minimum-distance lower bounds, and the analytic
//! lower-bound evaluators driven by user-supplied measure/covering
//! constants.

use serde::Serialize;

use crate::covering::{covering_profile_1d, greedy_cover_count, packing_number};
use crate::error::{Error, Result};
use crate::pointset::{min_pairwise_distance, PointSet};

/// Bisection target width for critical-point and radius searches.
const ROOT_TOL: f64 = 1e-12;

/// Degree-(n-1) polynomial in `1/eps` bounding the cube covering number of
/// any degree-d sub-level set, up to the volume term. Built-in coefficient
/// tables exist for dimensions 1 and 2; higher dimensions take a
/// user-supplied table of dimensional constants.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VitushkinModel {
    dim: usize,
    degree: usize,
    coeffs: Vec<f64>,
}

impl VitushkinModel {
    /// Built-in models: `[d]` in 1D and `[(2d-1)^2, 8d]` in 2D.
    pub fn builtin(dim: usize, degree: usize) -> Result<Self> {
        if degree < 1 {
            return Err(Error::invalid("degree must be at least 1"));
        }
        let d = degree as f64;
        let coeffs = match dim {
            0 => return Err(Error::invalid("dimension must be at least 1")),
            1 => vec![d],
            2 => vec![(2.0 * d - 1.0) * (2.0 * d - 1.0), 8.0 * d],
            _ => {
                return Err(Error::NotApplicable(format!(
                    "no built-in coefficients for dimension {dim}; supply a constants table"
                )))
            }
        };
        Ok(VitushkinModel { dim, degree, coeffs })
    }

    /// Model from a table of dimensional constants `c[i]`, with
    /// `C_i = c[i] * (2d)^(n-i)`.
    pub fn from_prime_constants(dim: usize, degree: usize, primes: &[f64]) -> Result<Self> {
        if degree < 1 {
            return Err(Error::invalid("degree must be at least 1"));
        }
        if dim == 0 {
            return Err(Error::invalid("dimension must be at least 1"));
        }
        if primes.len() != dim {
            return Err(Error::invalid(format!(
                "expected {dim} constants, got {}",
                primes.len()
            )));
        }
        if primes.iter().any(|c| !(c.is_finite() && *c >= 0.0)) {
            return Err(Error::invalid("constants must be finite and nonnegative"));
        }
        let two_d = 2.0 * degree as f64;
        let coeffs = primes
            .iter()
            .enumerate()
            .map(|(i, c)| c * two_d.powi((dim - i) as i32))
            .collect();
        Ok(VitushkinModel { dim, degree, coeffs })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Coefficients `C_0 .. C_{n-1}` of the powers of `1/eps`.
    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn leading_coeff(&self) -> f64 {
        *self.coeffs.last().unwrap()
    }

    /// `sum_i C_i`, which bounds the model by `C' (1/eps)^(n-1)` for
    /// `eps <= 1`.
    pub fn prime_constant(&self) -> f64 {
        self.coeffs.iter().sum()
    }

    /// Evaluates the model at `eps > 0` by Horner in `1/eps`.
    pub fn eval(&self, eps: f64) -> Result<f64> {
        if !(eps > 0.0) {
            return Err(Error::invalid(format!("eps must be positive, got {eps}")));
        }
        let u = 1.0 / eps;
        let mut acc = 0.0;
        for c in self.coeffs.iter().rev() {
            acc = acc * u + c;
        }
        Ok(acc)
    }
}

/// Free-function form of [`VitushkinModel::eval`].
pub fn vitushkin_eval(model: &VitushkinModel, eps: f64) -> Result<f64> {
    model.eval(eps)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum SpanMode {
    Exact,
    Interval,
}

/// The metric d-span as an exact value or certified interval, together
/// with the `eps` at (or approaching) which the supremum is realized.
/// `attained` is false when the supremum is only a one-sided limit.
#[derive(Debug, Clone, Serialize)]
pub struct SpanResult {
    pub mode: SpanMode,
    pub omega_lo: f64,
    pub omega_hi: f64,
    pub witness_eps: f64,
    pub attained: bool,
}

impl SpanResult {
    fn zero(mode: SpanMode) -> Self {
        SpanResult {
            mode,
            omega_lo: 0.0,
            omega_hi: 0.0,
            witness_eps: 0.0,
            attained: false,
        }
    }
}

/// Exact 1D span `sup_eps eps * (M(eps, Z) - d)`, computed piecewise on
/// the covering profile. Returns zero when `|Z| <= d`; the supremum is
/// otherwise realized as a left limit at a profile breakpoint, reported
/// with `attained = false`.
pub fn omega_1d(z: &PointSet, degree: usize) -> Result<SpanResult> {
    if degree < 1 {
        return Err(Error::invalid("degree must be at least 1"));
    }
    if z.dim() != 1 {
        return Err(Error::DimensionMismatch {
            expected: 1,
            got: z.dim(),
        });
    }
    if z.len() <= degree {
        return Ok(SpanResult::zero(SpanMode::Exact));
    }
    let profile = covering_profile_1d(z)?;
    let d = degree as f64;
    let mut best = 0.0f64;
    let mut witness = 0.0f64;
    for piece in &profile.pieces {
        if piece.count > degree && piece.eps_max.is_finite() {
            let v = piece.eps_max * (piece.count as f64 - d);
            if v > best {
                best = v;
                witness = piece.eps_max;
            }
        }
    }
    Ok(SpanResult {
        mode: SpanMode::Exact,
        omega_lo: best,
        omega_hi: best,
        witness_eps: witness,
        attained: false,
    })
}

/// One evaluation point of the span objective, used for CSV export.
#[derive(Debug, Clone, Serialize)]
pub struct CurveRow {
    pub eps: f64,
    pub m_lo: usize,
    pub m_hi: usize,
    pub model_value: f64,
    pub f_lo: f64,
    pub f_hi: f64,
}

/// Certified interval for the span in any dimension:
/// `sup_eps eps^n (M(eps, Z) - M_d(eps))`, with the covering number
/// replaced by its packing lower bound (for `omega_lo`) and greedy cover
/// upper bound (for `omega_hi`), both clamped at zero. In 1D this
/// collapses to the exact [`omega_1d`].
pub fn omega_nd(z: &PointSet, degree: usize, model: &VitushkinModel) -> Result<SpanResult> {
    if model.dim() != z.dim() {
        return Err(Error::DimensionMismatch {
            expected: z.dim(),
            got: model.dim(),
        });
    }
    if model.degree() != degree {
        return Err(Error::invalid(format!(
            "model degree {} does not match requested degree {degree}",
            model.degree()
        )));
    }
    if z.dim() == 1 {
        return omega_1d(z, degree);
    }

    let n = z.dim();
    let mut lo = BestValue::new();
    let mut best_hi = f64::NEG_INFINITY;

    // Seed: for eps below the minimal pairwise distance the covering number
    // is exactly |Z|, so the limit value at eps0 is a valid lower bound.
    if z.len() >= 2 {
        let eps0 = min_pairwise_distance(z)?;
        let v = objective(z.len(), n, model, eps0);
        lo.consider(v, eps0, false);
        best_hi = best_hi.max(v);
    }

    let thresholds = axis_difference_thresholds(z);
    let cap = 4.0 * z.bounding_box().diameter().max(1.0);

    let mut boundaries = vec![0.0f64];
    boundaries.extend_from_slice(&thresholds);
    for (idx, &a) in boundaries.iter().enumerate() {
        let b = boundaries.get(idx + 1).copied().unwrap_or(f64::INFINITY);
        let eval_eps = if a > 0.0 {
            a
        } else if b.is_finite() {
            0.5 * b
        } else {
            1.0
        };
        let pack = packing_number(z, eval_eps)?;
        let cover = greedy_cover_count(z, eval_eps);

        // Degenerate user tables can make the objective grow without bound
        // on the last piece.
        if !b.is_finite() && cover as f64 > model.coeffs()[0] {
            return Ok(SpanResult {
                mode: SpanMode::Interval,
                omega_lo: if pack as f64 > model.coeffs()[0] {
                    f64::INFINITY
                } else {
                    lo.value.max(0.0)
                },
                omega_hi: f64::INFINITY,
                witness_eps: f64::INFINITY,
                attained: false,
            });
        }

        let b_eff = if b.is_finite() { b } else { cap.max(2.0 * a) };
        // attained value at the left endpoint
        if a > 0.0 {
            lo.consider(objective(pack, n, model, a), a, true);
            best_hi = best_hi.max(objective(cover, n, model, a));
        }
        // left limit at the right endpoint (counts stay valid on [a, b))
        lo.consider(objective(pack, n, model, b_eff), b_eff, false);
        best_hi = best_hi.max(objective(cover, n, model, b_eff));
        // interior critical points of the per-piece polynomial
        for &k in &[pack, cover] {
            for root in critical_points(k, n, model, a.max(1e-9 * b_eff), b_eff) {
                let v = objective(k, n, model, root);
                if k == pack {
                    lo.consider(v, root, true);
                }
                if k == cover {
                    best_hi = best_hi.max(v);
                }
            }
        }
    }

    let omega_lo = lo.value.max(0.0);
    let omega_hi = best_hi.max(0.0).max(omega_lo);
    Ok(SpanResult {
        mode: SpanMode::Interval,
        omega_lo,
        omega_hi,
        witness_eps: if omega_lo > 0.0 { lo.eps } else { 0.0 },
        attained: if omega_lo > 0.0 { lo.attained } else { false },
    })
}

struct BestValue {
    value: f64,
    eps: f64,
    attained: bool,
}

impl BestValue {
    fn new() -> Self {
        BestValue {
            value: f64::NEG_INFINITY,
            eps: 0.0,
            attained: false,
        }
    }

    fn consider(&mut self, v: f64, eps: f64, attained: bool) {
        if v > self.value {
            self.value = v;
            self.eps = eps;
            self.attained = attained;
        }
    }
}

/// `eps^n (k - M_d(eps))`.
fn objective(count: usize, n: usize, model: &VitushkinModel, eps: f64) -> f64 {
    eps.powi(n as i32) * (count as f64 - model.eval(eps).expect("eps > 0"))
}

fn axis_difference_thresholds(z: &PointSet) -> Vec<f64> {
    let pts = z.points();
    let mut out = Vec::new();
    for i in 0..pts.len() {
        for j in (i + 1)..pts.len() {
            for a in 0..z.dim() {
                let d = (pts[i][a] - pts[j][a]).abs();
                if d > 0.0 {
                    out.push(d);
                }
            }
        }
    }
    out.sort_by(|a, b| a.partial_cmp(b).unwrap());
    out.dedup();
    out
}

/// Roots of the derivative of `g(eps) = k eps^n - sum_i C_i eps^(n-i)`
/// inside `(a, b)`, located by bisection on sign changes of `g'`.
fn critical_points(k: usize, n: usize, model: &VitushkinModel, a: f64, b: f64) -> Vec<f64> {
    if !(b > a) || a <= 0.0 {
        return Vec::new();
    }
    let deriv = |eps: f64| -> f64 {
        let nf = n as f64;
        let mut v = nf * k as f64 * eps.powi(n as i32 - 1);
        for (i, c) in model.coeffs().iter().enumerate() {
            let p = n - i; // g carries C_i eps^(n-i)
            v -= p as f64 * c * eps.powi(p as i32 - 1);
        }
        v
    };
    let samples = 64usize;
    let mut roots = Vec::new();
    let mut prev_x = a;
    let mut prev_s = deriv(a);
    for t in 1..=samples {
        let x = a + (b - a) * t as f64 / samples as f64;
        let s = deriv(x);
        if prev_s == 0.0 {
            roots.push(prev_x);
        } else if prev_s * s < 0.0 {
            let (mut xl, mut xr) = (prev_x, x);
            let mut fl = prev_s;
            while xr - xl > ROOT_TOL {
                let mid = 0.5 * (xl + xr);
                let fm = deriv(mid);
                if fm == 0.0 {
                    xl = mid;
                    break;
                }
                if fl * fm < 0.0 {
                    xr = mid;
                } else {
                    xl = mid;
                    fl = fm;
                }
            }
            roots.push(0.5 * (xl + xr));
        }
        prev_x = x;
        prev_s = s;
    }
    roots
}

/// Positivity of the span with a certified witness: true iff some
/// candidate `eps` has a packing count exceeding the model.
pub fn omega_positive(
    z: &PointSet,
    degree: usize,
    model: &VitushkinModel,
) -> Result<(bool, Option<f64>)> {
    check_model(z, degree, model)?;
    // Minimum-distance certificate first: just below eps0 every point
    // needs its own cube.
    if z.len() >= 2 {
        let eps0 = min_pairwise_distance(z)?;
        let probe = eps0 * (1.0 - 1e-9) - 2.0 * crate::pointset::DIST_SLACK;
        if probe > 0.0 && z.len() as f64 > model.eval(probe)? {
            return Ok((true, Some(probe)));
        }
    }
    for eps in axis_difference_thresholds(z) {
        if packing_number(z, eps)? as f64 > model.eval(eps)? {
            return Ok((true, Some(eps)));
        }
    }
    Ok((false, None))
}

/// `max(0, eps0^n (p - M_d(eps0)))` with `eps0` the minimal pairwise
/// distance; never exceeds the certified `omega_lo`.
pub fn omega_min_distance_bound(
    z: &PointSet,
    degree: usize,
    model: &VitushkinModel,
) -> Result<f64> {
    check_model(z, degree, model)?;
    if z.len() < 2 {
        return Err(Error::InsufficientPoints {
            needed: 2,
            got: z.len(),
        });
    }
    let eps0 = min_pairwise_distance(z)?;
    Ok(dispersion_value(z.len(), z.dim(), model, eps0))
}

/// `max(0, eta^n (p - M_d(eta)))`, the shared form of the minimum-distance
/// and dispersion lower bounds.
pub(crate) fn dispersion_value(p: usize, dim: usize, model: &VitushkinModel, eta: f64) -> f64 {
    let v = eta.powi(dim as i32) * (p as f64 - model.eval(eta).expect("eta > 0"));
    v.max(0.0)
}

fn check_model(z: &PointSet, degree: usize, model: &VitushkinModel) -> Result<()> {
    if model.dim() != z.dim() {
        return Err(Error::DimensionMismatch {
            expected: z.dim(),
            got: model.dim(),
        });
    }
    if model.degree() != degree {
        return Err(Error::invalid(format!(
            "model degree {} does not match requested degree {degree}",
            model.degree()
        )));
    }
    Ok(())
}

/// Samples the span objective at every candidate scale, for plotting.
/// In 1D both sides use the exact covering number.
pub fn span_curve(z: &PointSet, degree: usize, model: &VitushkinModel) -> Result<Vec<CurveRow>> {
    check_model(z, degree, model)?;
    let n = z.dim();
    let mut rows = Vec::new();
    let mut epsilons = axis_difference_thresholds(z);
    if let Some(&last) = epsilons.last() {
        epsilons.push(1.5 * last);
    }
    for eps in epsilons {
        let (m_lo, m_hi) = if n == 1 {
            let exact = crate::covering::covering_number_1d(z, eps)?;
            (exact, exact)
        } else {
            (packing_number(z, eps)?, greedy_cover_count(z, eps))
        };
        rows.push(CurveRow {
            eps,
            m_lo,
            m_hi,
            model_value: model.eval(eps)?,
            f_lo: objective(m_lo, n, model, eps),
            f_hi: objective(m_hi, n, model, eps),
        });
    }
    Ok(rows)
}

// ---------------------------------------------------------------------------
// Analytic lower bounds from user-supplied measure/covering constants
// ---------------------------------------------------------------------------

/// A span lower bound together with the scale `eps_hat` at which it was
/// certified.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct AnalyticBound {
    pub omega_lower: f64,
    pub eps_hat: f64,
}

/// Largest `eps` below which the model's leading term dominates the rest
/// within a factor two: `M_d(eps') <= 2 C_{n-1} (1/eps')^(n-1)` for all
/// `eps' <= eps`. Infinite when the head vanishes.
pub fn leading_term_radius(model: &VitushkinModel) -> Result<f64> {
    if model.dim() < 2 {
        return Err(Error::NotApplicable(
            "leading-term radius needs dimension at least 2".into(),
        ));
    }
    let head = &model.coeffs()[..model.dim() - 1];
    dominance_radius(head, model.leading_coeff())
}

/// Largest `eps` with `sum_i head[i] u^i <= lead u^(n-1)` for all
/// `u >= 1/eps` (u = 1/eps'). Used with `lead = C_{n-1}` for the factor-2
/// radius and `lead = (Q - C_{n-1})` for its generalization.
fn dominance_radius(head: &[f64], lead: f64) -> Result<f64> {
    if !(lead > 0.0) {
        return Err(Error::invalid("leading coefficient must be positive"));
    }
    let h = |u: f64| -> f64 {
        let mut v = lead * u.powi(head.len() as i32);
        let mut pw = 1.0;
        for c in head {
            v -= c * pw;
            pw *= u;
        }
        v
    };
    if head.iter().all(|c| *c == 0.0) {
        return Ok(f64::INFINITY);
    }
    // Cauchy-style bound on the largest root of h.
    let max_head = head.iter().cloned().fold(0.0f64, f64::max);
    let u_hi = 2.0 * (1.0 + max_head / lead) * (head.len() as f64 + 1.0);
    debug_assert!(h(u_hi) > 0.0);
    // Scan downward for the largest sign change.
    let samples = 4096usize;
    let mut upper = u_hi;
    let mut found = None;
    for t in 1..=samples {
        let u = u_hi * (1.0 - t as f64 / samples as f64);
        if u <= 0.0 {
            break;
        }
        if h(u) < 0.0 {
            found = Some((u, upper));
            break;
        }
        upper = u;
    }
    let (mut lo, mut hi) = match found {
        Some(pair) => pair,
        None => return Ok(f64::INFINITY), // h >= 0 down to u ~ 0
    };
    while hi - lo > ROOT_TOL * hi.max(1.0) {
        let mid = 0.5 * (lo + hi);
        if h(mid) < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(1.0 / hi)
}

/// Span lower bound from a positive fractal measure at exponent
/// `s = n-1+sigma`: `omega >= eps_hat^(1-sigma) * H / 4`, with `eps_hat`
/// the minimum of the rescaled injectivity radius, the leading-term
/// radius and the measure-driven scale.
pub fn hausdorff_measure_bound(
    model: &VitushkinModel,
    s: f64,
    measure: f64,
    injectivity_alpha: f64,
) -> Result<AnalyticBound> {
    let n = model.dim();
    let sigma = s - (n as f64 - 1.0);
    if !(sigma > 0.0) {
        return Err(Error::invalid(format!(
            "exponent must exceed n-1 (sigma > 0), got s = {s} in dimension {n}"
        )));
    }
    if !(measure > 0.0 && injectivity_alpha > 0.0) {
        return Err(Error::invalid("measure and injectivity radius must be positive"));
    }
    let alpha_hat = injectivity_alpha / (n as f64).sqrt();
    let eps1 = leading_term_radius(model)?;
    let eps2 = (measure / (8.0 * model.leading_coeff() * (n as f64).powf(0.5 * s)))
        .powf(1.0 / sigma);
    let eps_hat = alpha_hat.min(eps1).min(eps2);
    Ok(AnalyticBound {
        omega_lower: 0.25 * eps_hat.powf(1.0 - sigma) * measure,
        eps_hat,
    })
}

/// Span lower bound from covering-number growth `M(eps, Z) >= C_s (1/eps)^s`
/// below the injectivity scale, `s = n-1+sigma > n-1`. The growth-driven
/// scale is `(C_s / C_{n-1})^(1/s)`.
pub fn covering_growth_bound(
    model: &VitushkinModel,
    s: f64,
    c_s: f64,
    injectivity_eps: f64,
) -> Result<AnalyticBound> {
    covering_growth_bound_scaled(model, s, c_s, injectivity_eps, 1.0)
}

/// Variant with an adjustable factor on the leading coefficient in the
/// growth-driven scale: `(C_s / (lead_scale * C_{n-1}))^(1/s)`. A factor
/// of 8 reproduces the more conservative measure-driven scale.
pub fn covering_growth_bound_scaled(
    model: &VitushkinModel,
    s: f64,
    c_s: f64,
    injectivity_eps: f64,
    lead_scale: f64,
) -> Result<AnalyticBound> {
    let n = model.dim();
    let sigma = s - (n as f64 - 1.0);
    if !(sigma > 0.0) {
        return Err(Error::invalid(format!(
            "exponent must exceed n-1 (sigma > 0), got s = {s} in dimension {n}"
        )));
    }
    if !(c_s > 0.0 && injectivity_eps > 0.0) {
        return Err(Error::invalid("growth constant and injectivity radius must be positive"));
    }
    if !(lead_scale > 0.0) {
        return Err(Error::invalid("scale factor must be positive"));
    }
    let eps1 = leading_term_radius(model)?;
    let eps2 = (c_s / (lead_scale * model.leading_coeff())).powf(1.0 / s);
    let eps_hat = injectivity_eps.min(eps1).min(eps2);
    Ok(AnalyticBound {
        omega_lower: 0.25 * eps_hat.powf(1.0 - sigma) * c_s,
        eps_hat,
    })
}

/// Span lower bound at the critical exponent `s = n-1`: requires the
/// growth constant to exceed the model's leading coefficient.
pub fn critical_growth_bound(
    model: &VitushkinModel,
    c: f64,
    injectivity_eps: f64,
) -> Result<AnalyticBound> {
    let lead = model.leading_coeff();
    if !(c > lead) {
        return Err(Error::NotApplicable(format!(
            "growth constant {c} does not exceed the leading model coefficient {lead}"
        )));
    }
    if !(injectivity_eps > 0.0) {
        return Err(Error::invalid("injectivity radius must be positive"));
    }
    if model.dim() < 2 {
        return Err(Error::NotApplicable(
            "critical-exponent bound needs dimension at least 2".into(),
        ));
    }
    let head = &model.coeffs()[..model.dim() - 1];
    let eps1 = dominance_radius(head, 0.5 * (c - lead))?;
    let eps_hat = injectivity_eps.min(eps1);
    Ok(AnalyticBound {
        omega_lower: 0.5 * eps_hat * (c - lead),
        eps_hat,
    })
}

/// Critical-exponent bound driven by a codimension-one measure: valid
/// when `H > 2 sqrt(n^(n-1)) C_{n-1}`.
pub fn critical_growth_bound_from_measure(
    model: &VitushkinModel,
    measure: f64,
    injectivity_alpha: f64,
) -> Result<AnalyticBound> {
    let n = model.dim() as f64;
    let scale = 2.0 * n.powf(0.5 * (n - 1.0));
    let c = measure / scale;
    if !(c > model.leading_coeff()) {
        return Err(Error::NotApplicable(format!(
            "measure {measure} is not large enough (needs > {})",
            scale * model.leading_coeff()
        )));
    }
    critical_growth_bound(model, c, injectivity_alpha / n.sqrt())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pointset::{
        make_geometric_set, make_grid_1d, make_grid_nd, make_power_set, BoundingBox,
    };

    #[test]
    fn model_builtins() {
        let m = VitushkinModel::builtin(1, 5).unwrap();
        assert_eq!(m.coeffs(), &[5.0]);
        assert_eq!(m.eval(0.01).unwrap(), 5.0);

        let m = VitushkinModel::builtin(2, 3).unwrap();
        assert_eq!(m.coeffs(), &[25.0, 24.0]);
        assert!((m.eval(0.1).unwrap() - 265.0).abs() < 1e-12);

        let m = VitushkinModel::builtin(2, 1).unwrap();
        assert!((m.eval(1.0).unwrap() - 9.0).abs() < 1e-12);

        assert!(VitushkinModel::builtin(3, 2).is_err());
        assert!(m.eval(0.0).is_err());
    }

    #[test]
    fn model_from_table() {
        // c = [1, 1, 1], n = 3, d = 2: C_i = (2d)^(3-i) = 64, 16, 4
        let m = VitushkinModel::from_prime_constants(3, 2, &[1.0, 1.0, 1.0]).unwrap();
        assert_eq!(m.coeffs(), &[64.0, 16.0, 4.0]);
        assert!(VitushkinModel::from_prime_constants(3, 2, &[1.0]).is_err());
        assert!(VitushkinModel::from_prime_constants(3, 2, &[1.0, -1.0, 0.0]).is_err());
    }

    #[test]
    fn model_nonincreasing_in_eps() {
        let m = VitushkinModel::builtin(2, 4).unwrap();
        let mut prev = f64::INFINITY;
        for eps in [0.01, 0.1, 0.5, 1.0, 3.0] {
            let v = m.eval(eps).unwrap();
            assert!(v <= prev);
            prev = v;
        }
    }

    #[test]
    fn omega_grid_closed_form() {
        let g = make_grid_1d(11).unwrap();
        let r = omega_1d(&g, 3).unwrap();
        assert!((r.omega_lo - 1.6).abs() < 1e-12);
        assert!((r.witness_eps - 0.2).abs() < 1e-12);
        assert!(!r.attained);
        assert_eq!(r.mode, SpanMode::Exact);
    }

    #[test]
    fn omega_zero_for_small_sets() {
        let g = make_grid_1d(3).unwrap();
        for d in 3..6 {
            let r = omega_1d(&g, d).unwrap();
            assert_eq!(r.omega_lo, 0.0);
        }
    }

    #[test]
    fn omega_power_set_range() {
        let z = make_power_set(1.0, 200).unwrap();
        let r = omega_1d(&z, 2).unwrap();
        assert!(r.omega_lo >= 1.0 / 16.0, "omega = {}", r.omega_lo);
        assert!(r.omega_lo <= 1.0, "omega = {}", r.omega_lo);
    }

    #[test]
    fn omega_brute_force_grid_agreement() {
        // independent oracle: dense eps sweep refined at profile breakpoints
        for (z, d) in [
            (make_grid_1d(9).unwrap(), 2usize),
            (make_power_set(1.0, 25).unwrap(), 3),
            (make_geometric_set(0.6, 12).unwrap(), 2),
        ] {
            let exact = omega_1d(&z, d).unwrap().omega_lo;
            let profile = covering_profile_1d(&z).unwrap();
            let mut brute = 0.0f64;
            let mut consider = |eps: f64| {
                if eps > 0.0 {
                    let m = crate::covering::covering_number_1d(&z, eps).unwrap();
                    brute = brute.max(eps * (m as f64 - d as f64));
                }
            };
            for piece in &profile.pieces {
                let hi = if piece.eps_max.is_finite() {
                    piece.eps_max
                } else {
                    piece.eps_min + 1.0
                };
                for t in 0..200 {
                    consider(piece.eps_min + (hi - piece.eps_min) * t as f64 / 200.0);
                }
                consider(hi - 1e-9);
                consider(hi - 1e-12);
            }
            assert!(
                (exact - brute).abs() < 1e-6,
                "exact {exact} vs brute {brute}"
            );
            assert!(exact + 1e-12 >= brute);
        }
    }

    #[test]
    fn omega_monotone_in_degree_and_set() {
        let z = make_power_set(1.0, 60).unwrap();
        let mut prev = f64::INFINITY;
        for d in 1..6 {
            let v = omega_1d(&z, d).unwrap().omega_lo;
            assert!(v <= prev);
            prev = v;
        }
        let small = make_power_set(1.0, 30).unwrap();
        for d in 1..5 {
            assert!(
                omega_1d(&small, d).unwrap().omega_lo
                    <= omega_1d(&z, d).unwrap().omega_lo + 1e-12
            );
        }
    }

    #[test]
    fn omega_volume_domination_trend() {
        // span of the full grid approaches the box length
        let mut prev = 0.0;
        for s in [11usize, 21, 41] {
            let g = make_grid_1d(s).unwrap();
            let v = omega_1d(&g, 2).unwrap().omega_lo;
            assert!(v > prev);
            prev = v;
        }
        assert!(prev > 1.89); // 2(41-2)/40 = 1.95
    }

    #[test]
    fn omega_nd_collapses_in_1d() {
        let z = make_power_set(1.0, 30).unwrap();
        let m = VitushkinModel::builtin(1, 2).unwrap();
        let a = omega_1d(&z, 2).unwrap();
        let b = omega_nd(&z, 2, &m).unwrap();
        assert_eq!(a.omega_lo, b.omega_lo);
        assert_eq!(b.omega_lo, b.omega_hi);
    }

    #[test]
    fn omega_nd_dim3_with_table_model() {
        let m = VitushkinModel::from_prime_constants(3, 2, &[1.0, 1.0, 1.0]).unwrap();
        let g = make_grid_nd(3, 3).unwrap();
        let r = omega_nd(&g, 2, &m).unwrap();
        // 27 points never beat the constant term 64
        assert_eq!(r.omega_lo, 0.0);
        assert!(r.omega_hi >= r.omega_lo);
        let (pos, _) = omega_positive(&g, 2, &m).unwrap();
        assert!(!pos);

        // a tiny constant table makes the same grid certifiably positive
        let m = VitushkinModel::from_prime_constants(3, 2, &[0.01, 0.01, 0.01]).unwrap();
        let (pos, w) = omega_positive(&g, 2, &m).unwrap();
        assert!(pos);
        let w = w.unwrap();
        assert!(packing_number(&g, w).unwrap() as f64 > m.eval(w).unwrap());
        let r = omega_nd(&g, 2, &m).unwrap();
        assert!(r.omega_lo > 0.0);
        assert!(r.omega_hi >= r.omega_lo);
    }

    #[test]
    fn omega_nd_zero_when_below_constant_term() {
        // 9 points never exceed the constant term 25 of the d=3 model
        let g = make_grid_nd(2, 3).unwrap();
        let m = VitushkinModel::builtin(2, 3).unwrap();
        let r = omega_nd(&g, 3, &m).unwrap();
        assert_eq!(r.omega_lo, 0.0);
        assert_eq!(r.omega_hi, 0.0);
        let (pos, _) = omega_positive(&g, 3, &m).unwrap();
        assert!(!pos);
    }

    #[test]
    fn omega_nd_positive_on_dense_grid() {
        let g = make_grid_nd(2, 41).unwrap();
        let m = VitushkinModel::builtin(2, 1).unwrap();
        let r = omega_nd(&g, 1, &m).unwrap();
        assert!(r.omega_lo > 0.0);
        assert!(r.omega_hi >= r.omega_lo);
        let (pos, witness) = omega_positive(&g, 1, &m).unwrap();
        assert!(pos);
        let w = witness.unwrap();
        assert!(packing_number(&g, w).unwrap() as f64 > m.eval(w).unwrap());
    }

    #[test]
    fn positivity_examples_1d() {
        let m2 = VitushkinModel::builtin(1, 2).unwrap();
        let z = make_grid_1d(3).unwrap(); // |Z| = d + 1 = 3
        let (pos, _) = omega_positive(&z, 2, &m2).unwrap();
        assert!(pos);

        let m3 = VitushkinModel::builtin(1, 3).unwrap();
        let (pos, w) = omega_positive(&z, 3, &m3).unwrap();
        assert!(!pos);
        assert!(w.is_none());
    }

    #[test]
    fn min_distance_bound_examples() {
        // 1D: p = 3, d = 2, eps0 = 0.3
        let z = PointSet::new(
            1,
            BoundingBox::symmetric_unit(1),
            vec![vec![0.0], vec![0.3], vec![0.9]],
        )
        .unwrap();
        let m = VitushkinModel::builtin(1, 2).unwrap();
        let v = omega_min_distance_bound(&z, 2, &m).unwrap();
        assert!((v - 0.3).abs() < 1e-15);

        // clamped at zero when p <= model value
        let m5 = VitushkinModel::builtin(1, 5).unwrap();
        assert_eq!(omega_min_distance_bound(&z, 5, &m5).unwrap(), 0.0);

        // grid: coincides with the exact span
        let g = make_grid_1d(11).unwrap();
        let m3 = VitushkinModel::builtin(1, 3).unwrap();
        let v = omega_min_distance_bound(&g, 3, &m3).unwrap();
        let exact = omega_1d(&g, 3).unwrap().omega_lo;
        assert_eq!(v, exact);
    }

    #[test]
    fn min_distance_bound_below_omega_lo() {
        let m = VitushkinModel::builtin(2, 1).unwrap();
        for s in [5usize, 11, 21] {
            let g = make_grid_nd(2, s).unwrap();
            let lo = omega_nd(&g, 1, &m).unwrap().omega_lo;
            let md = omega_min_distance_bound(&g, 1, &m).unwrap();
            assert!(md <= lo + 1e-12, "s={s}: {md} vs {lo}");
        }
    }

    #[test]
    fn leading_term_radius_examples() {
        let m = VitushkinModel::builtin(2, 3).unwrap();
        let r = leading_term_radius(&m).unwrap();
        assert!((r - 0.96).abs() < 1e-9, "{r}");

        let m = VitushkinModel::builtin(2, 1).unwrap();
        let r = leading_term_radius(&m).unwrap();
        assert!((r - 8.0).abs() < 1e-8, "{r}");

        let m1 = VitushkinModel::builtin(1, 3).unwrap();
        assert!(leading_term_radius(&m1).is_err());

        // trend in d: the radius stays bounded and positive
        let mut prev = f64::INFINITY;
        for d in 2..40 {
            let m = VitushkinModel::builtin(2, d).unwrap();
            let r = leading_term_radius(&m).unwrap();
            assert!(r > 0.0 && r <= prev);
            prev = r;
        }
        assert!(prev < 1.0);
    }

    #[test]
    fn hausdorff_bound_example() {
        let m = VitushkinModel::builtin(2, 3).unwrap();
        let s = 1.5;
        let alpha0 = std::f64::consts::SQRT_2 * 0.5;
        let b = hausdorff_measure_bound(&m, s, 1.0, alpha0).unwrap();
        let eps2 = (1.0 / (192.0 * 2f64.powf(0.75))).powi(2);
        assert!((b.eps_hat - eps2).abs() < 1e-15, "{} vs {eps2}", b.eps_hat);
        assert!((b.omega_lower - 0.25 * eps2.sqrt()).abs() < 1e-15);

        // bound goes to zero continuously with the measure
        let mut prev = b.omega_lower;
        for h in [0.5, 0.1, 0.01, 1e-4] {
            let v = hausdorff_measure_bound(&m, s, h, alpha0).unwrap().omega_lower;
            assert!(v < prev && v > 0.0);
            prev = v;
        }

        // in the measure-driven regime the bound scales as H^(1/sigma)
        let b1 = hausdorff_measure_bound(&m, s, 1e-3, 10.0).unwrap();
        let b2 = hausdorff_measure_bound(&m, s, 2e-3, 10.0).unwrap();
        let ratio = b2.omega_lower / b1.omega_lower;
        assert!((ratio - 2f64.powf(1.0 / 0.5)).abs() < 1e-9);

        assert!(hausdorff_measure_bound(&m, 1.0, 1.0, 1.0).is_err());
    }

    #[test]
    fn covering_growth_bound_example() {
        let m = VitushkinModel::builtin(2, 3).unwrap();
        let b = covering_growth_bound(&m, 1.5, 1.0, 0.5).unwrap();
        let eps2 = 24f64.powf(-2.0 / 3.0);
        assert!((b.eps_hat - eps2).abs() < 1e-12);
        assert!((b.omega_lower - 0.25 * eps2.sqrt()).abs() < 1e-12);
        assert!((b.omega_lower - 0.0867).abs() < 1e-4);

        // sigma = 1 (s = n) removes the eps_hat factor
        let b = covering_growth_bound(&m, 2.0, 1e-6, 0.5).unwrap();
        assert!((b.omega_lower - 0.25e-6).abs() < 1e-18);

        // a larger leading scale can only shrink the certified scale
        let loose = covering_growth_bound_scaled(&m, 1.5, 1.0, 0.5, 8.0).unwrap();
        let tight = covering_growth_bound(&m, 1.5, 1.0, 0.5).unwrap();
        assert!(loose.eps_hat <= tight.eps_hat);
        assert!(loose.omega_lower <= tight.omega_lower);

        // bound vanishes with the constant
        let mut prev = f64::INFINITY;
        for c in [1.0, 0.1, 1e-3] {
            let v = covering_growth_bound(&m, 1.5, c, 0.5).unwrap().omega_lower;
            assert!(v < prev);
            prev = v;
        }
    }

    #[test]
    fn critical_growth_bound_example() {
        let m = VitushkinModel::builtin(2, 3).unwrap();
        let b = critical_growth_bound(&m, 48.0, 1.0).unwrap();
        assert!((b.eps_hat - 0.48).abs() < 1e-9, "{}", b.eps_hat);
        assert!((b.omega_lower - 5.76).abs() < 1e-8);

        // bound goes to zero as C approaches the leading coefficient
        let mut prev = b.omega_lower;
        for c in [30.0, 25.0, 24.1] {
            let v = critical_growth_bound(&m, c, 1.0).unwrap().omega_lower;
            assert!(v < prev);
            prev = v;
        }
        assert!(critical_growth_bound(&m, 24.0, 1.0).is_err());

        // measure-driven wrapper: C = H / (2 sqrt(n^(n-1)))
        let h = 48.0 * 2.0 * 2f64.sqrt();
        let b2 = critical_growth_bound_from_measure(&m, h, 2f64.sqrt()).unwrap();
        assert!((b2.omega_lower - 5.76).abs() < 1e-8);
        assert!(critical_growth_bound_from_measure(&m, 1.0, 1.0).is_err());
    }
}
