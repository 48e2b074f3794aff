//! Chebyshev polynomials and the closed-form Remez bound factors: the
//! classical single-interval factor, the Brudnyi–Ganzburg measure-ratio
//! factor, the span-based bound chain and the grid product bound.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::pointset::PointSet;
use crate::span::{omega_1d, omega_nd, SpanResult, VitushkinModel};

/// Which bound produced a report.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum BoundSource {
    Classical1d,
    MeasureRatio,
    SpanChain,
    GridProduct,
}

/// Normalization of the measure ratio fed to the Chebyshev factor.
///
/// `BoxVolume` divides the span by the explicit box volume, which
/// reproduces the classical grid bound on `[-1,1]`. `Raw` feeds the span
/// in directly (the unit-volume-cube reading); it is exposed for
/// reproduction of the printed tail asymptotics.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum LambdaNorm {
    BoxVolume,
    Raw,
}

/// A Chebyshev bound factor together with the data that produced it.
///
/// `factor >= 1` always; when the factor overflows `f64` the `log_factor`
/// field carries `ln(factor)` and `factor` is `inf`.
#[derive(Debug, Clone, Serialize)]
pub struct BoundReport {
    pub dim: usize,
    pub degree: usize,
    pub lambda: f64,
    pub factor: f64,
    pub log_factor: Option<f64>,
    pub source: BoundSource,
    pub omega_used: Option<f64>,
}

/// Argument above which `T_d` is evaluated in log space to avoid overflow.
const LOG_SPACE_THRESHOLD: f64 = 700.0;

/// `T_d(x)`: cosine form for `|x| <= 1`, hyperbolic form outside (stable,
/// no cancellation).
pub fn chebyshev_eval(d: usize, x: f64) -> f64 {
    let n = d as f64;
    if x.abs() <= 1.0 {
        (n * x.acos()).cos()
    } else if x > 1.0 {
        (n * x.acosh()).cosh()
    } else {
        let sign = if d % 2 == 0 { 1.0 } else { -1.0 };
        sign * (n * (-x).acosh()).cosh()
    }
}

/// `ln T_d(x)` for `x >= 1`, valid far beyond the overflow range of
/// `chebyshev_eval`.
pub fn chebyshev_log_eval(d: usize, x: f64) -> f64 {
    assert!(x >= 1.0, "log form requires x >= 1");
    let t = d as f64 * x.acosh();
    // cosh(t) = e^t (1 + e^{-2t}) / 2
    t + (1.0 + (-2.0 * t).exp()).ln() - std::f64::consts::LN_2
}

fn factor_from_argument(dim: usize, degree: usize, lambda: f64, arg: f64) -> BoundReport {
    let t = degree as f64 * arg.max(1.0).acosh();
    let (factor, log_factor) = if t > LOG_SPACE_THRESHOLD {
        (f64::INFINITY, Some(chebyshev_log_eval(degree, arg)))
    } else {
        (chebyshev_eval(degree, arg.max(1.0)), None)
    };
    BoundReport {
        dim,
        degree,
        lambda,
        factor,
        log_factor,
        source: BoundSource::MeasureRatio,
        omega_used: None,
    }
}

/// Measure-ratio factor `T_d((1 + (1-lambda)^{1/n}) / (1 - (1-lambda)^{1/n}))`
/// bounding the sup over a box through the sup over a subset of measure
/// ratio `lambda`.
pub fn brudnyi_ganzburg_factor(dim: usize, degree: usize, lambda: f64) -> Result<BoundReport> {
    if dim == 0 {
        return Err(Error::invalid("dimension must be at least 1"));
    }
    if !(lambda > 0.0 && lambda <= 1.0) {
        return Err(Error::invalid(format!(
            "measure ratio must lie in (0,1], got {lambda}"
        )));
    }
    // one_minus_w = 1 - (1-lambda)^{1/n}, computed without cancellation
    let one_minus_w = -f64::exp_m1(f64::ln_1p(-lambda) / dim as f64);
    let arg = if one_minus_w <= 0.0 {
        f64::INFINITY
    } else {
        (2.0 - one_minus_w) / one_minus_w
    };
    Ok(factor_from_argument(dim, degree, lambda, arg))
}

/// Classical 1D factor `T_d((4-mu)/mu)` for a subset of measure `mu` in
/// `[-1,1]`. Identical to `brudnyi_ganzburg_factor(1, d, mu/2)`.
pub fn remez_factor_1d(mu: f64, degree: usize) -> Result<BoundReport> {
    if !(mu > 0.0 && mu <= 2.0) {
        return Err(Error::invalid(format!(
            "measure must lie in (0,2], got {mu}"
        )));
    }
    let mut report = brudnyi_ganzburg_factor(1, degree, 0.5 * mu)?;
    report.source = BoundSource::Classical1d;
    Ok(report)
}

/// The span-based bound chain: span of `Z`, measure ratio
/// `lambda = min(1, omega / vol(box))`, then the measure-ratio factor.
/// Requires a certified positive span.
pub fn remez_span_bound(z: &PointSet, degree: usize, model: &VitushkinModel) -> Result<BoundReport> {
    remez_span_bound_with(z, degree, model, LambdaNorm::BoxVolume)
}

pub fn remez_span_bound_with(
    z: &PointSet,
    degree: usize,
    model: &VitushkinModel,
    norm: LambdaNorm,
) -> Result<BoundReport> {
    let span = span_for(z, degree, model)?;
    report_from_span(z, degree, &span, norm)
}

/// Builds the bound report from an already-computed span result.
pub fn report_from_span(
    z: &PointSet,
    degree: usize,
    span: &SpanResult,
    norm: LambdaNorm,
) -> Result<BoundReport> {
    let omega = span.omega_lo;
    if !(omega > 0.0) {
        return Err(Error::NotApplicable(
            "span lower bound is zero; no finite factor follows from it".into(),
        ));
    }
    let lambda = match norm {
        LambdaNorm::BoxVolume => (omega / z.bounding_box().volume()).min(1.0),
        LambdaNorm::Raw => omega.min(1.0),
    };
    let mut report = brudnyi_ganzburg_factor(z.dim(), degree, lambda)?;
    report.source = BoundSource::SpanChain;
    report.omega_used = Some(omega);
    Ok(report)
}

fn span_for(z: &PointSet, degree: usize, model: &VitushkinModel) -> Result<SpanResult> {
    if z.dim() == 1 {
        omega_1d(z, degree)
    } else {
        omega_nd(z, degree, model)
    }
}

/// Product bound for the n-fold grid: the 1D grid factor raised to the
/// n-th power. Requires `s > d`.
pub fn grid_product_bound(n: usize, s: usize, degree: usize) -> Result<f64> {
    if s <= degree {
        return Err(Error::NotApplicable(format!(
            "grid bound needs s > d, got s = {s}, d = {degree}"
        )));
    }
    let grid = crate::pointset::make_grid_1d(s)?;
    let model = VitushkinModel::builtin(1, degree)?;
    let report = remez_span_bound(&grid, degree, &model)?;
    Ok(report.factor.powi(n as i32))
}
