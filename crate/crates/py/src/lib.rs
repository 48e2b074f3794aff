//! Python bindings: point sets, covering numbers, metric spans, the
//! Chebyshev bound chain, the exact span oracle and the spread machinery.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use dspan::error::Error;
use dspan::pointset::{self, BoundingBox, Metric};
use dspan::poly::Polynomial;
use dspan::polywitness as pw;
use dspan::remez;
use dspan::span::{self, VitushkinModel};
use dspan::spread;

fn py_err(e: Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// A finite point set in an axis-aligned box.
#[pyclass(name = "PointSet")]
struct PyPointSet {
    inner: pointset::PointSet,
}

#[pymethods]
impl PyPointSet {
    #[new]
    fn new(dim: usize, lo: Vec<f64>, hi: Vec<f64>, points: Vec<Vec<f64>>) -> PyResult<Self> {
        let bbox = BoundingBox::new(lo, hi).map_err(py_err)?;
        Ok(PyPointSet {
            inner: pointset::PointSet::new(dim, bbox, points).map_err(py_err)?,
        })
    }

    #[staticmethod]
    fn grid_1d(s: usize) -> PyResult<Self> {
        Ok(PyPointSet {
            inner: pointset::make_grid_1d(s).map_err(py_err)?,
        })
    }

    #[staticmethod]
    fn grid_nd(n: usize, s: usize) -> PyResult<Self> {
        Ok(PyPointSet {
            inner: pointset::make_grid_nd(n, s).map_err(py_err)?,
        })
    }

    #[staticmethod]
    fn power_set(r: f64, k: usize) -> PyResult<Self> {
        Ok(PyPointSet {
            inner: pointset::make_power_set(r, k).map_err(py_err)?,
        })
    }

    #[staticmethod]
    fn geometric_set(q: f64, k: usize) -> PyResult<Self> {
        Ok(PyPointSet {
            inner: pointset::make_geometric_set(q, k).map_err(py_err)?,
        })
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        Ok(PyPointSet {
            inner: pointset::pointset_from_json(text).map_err(py_err)?,
        })
    }

    #[staticmethod]
    fn load(path: &str) -> PyResult<Self> {
        Ok(PyPointSet {
            inner: pointset::load_pointset(path).map_err(py_err)?,
        })
    }

    fn save(&self, path: &str) -> PyResult<()> {
        pointset::save_pointset(&self.inner, path).map_err(py_err)
    }

    fn to_json(&self) -> String {
        pointset::pointset_to_json(&self.inner)
    }

    #[getter]
    fn dim(&self) -> usize {
        self.inner.dim()
    }

    fn __len__(&self) -> usize {
        self.inner.len()
    }

    fn points(&self) -> Vec<Vec<f64>> {
        self.inner.points().to_vec()
    }

    fn box_lo(&self) -> Vec<f64> {
        self.inner.bounding_box().lo.clone()
    }

    fn box_hi(&self) -> Vec<f64> {
        self.inner.bounding_box().hi.clone()
    }

    fn min_pairwise_distance(&self) -> PyResult<f64> {
        pointset::min_pairwise_distance(&self.inner).map_err(py_err)
    }

    fn dense_subset(&self, eps: f64) -> PyResult<Self> {
        Ok(PyPointSet {
            inner: pointset::dense_subset(&self.inner, eps).map_err(py_err)?,
        })
    }

    fn __repr__(&self) -> String {
        format!(
            "PointSet(dim={}, points={})",
            self.inner.dim(),
            self.inner.len()
        )
    }
}

fn model_for(z: &pointset::PointSet, d: usize) -> PyResult<VitushkinModel> {
    VitushkinModel::builtin(z.dim(), d).map_err(py_err)
}

// --- covering ---------------------------------------------------------

#[pyfunction]
fn covering_number_1d(z: &PyPointSet, eps: f64) -> PyResult<usize> {
    dspan::covering::covering_number_1d(&z.inner, eps).map_err(py_err)
}

/// Profile pieces as `(count, eps_min, eps_max)` tuples; the last
/// `eps_max` is infinite.
#[pyfunction]
fn covering_profile_1d(z: &PyPointSet) -> PyResult<Vec<(usize, f64, f64)>> {
    let prof = dspan::covering::covering_profile_1d(&z.inner).map_err(py_err)?;
    Ok(prof
        .pieces
        .iter()
        .map(|p| (p.count, p.eps_min, p.eps_max))
        .collect())
}

/// Certified `(m_lo, m_hi)` bounds on the covering number at `eps`.
#[pyfunction]
fn covering_bounds(z: &PyPointSet, eps: f64) -> PyResult<(usize, usize)> {
    let b = dspan::covering::covering_bounds_nd(&z.inner, eps).map_err(py_err)?;
    Ok((b.m_lo, b.m_hi))
}

#[pyfunction]
fn packing_number(z: &PyPointSet, eps: f64) -> PyResult<usize> {
    dspan::covering::packing_number(&z.inner, eps).map_err(py_err)
}

// --- span --------------------------------------------------------------

/// Metric span as `(omega_lo, omega_hi, witness_eps, attained)`.
#[pyfunction]
fn omega(z: &PyPointSet, d: usize) -> PyResult<(f64, f64, f64, bool)> {
    let r = if z.inner.dim() == 1 {
        span::omega_1d(&z.inner, d).map_err(py_err)?
    } else {
        let model = model_for(&z.inner, d)?;
        span::omega_nd(&z.inner, d, &model).map_err(py_err)?
    };
    Ok((r.omega_lo, r.omega_hi, r.witness_eps, r.attained))
}

#[pyfunction]
fn omega_positive(z: &PyPointSet, d: usize) -> PyResult<(bool, Option<f64>)> {
    let model = model_for(&z.inner, d)?;
    span::omega_positive(&z.inner, d, &model).map_err(py_err)
}

#[pyfunction]
fn omega_min_distance_bound(z: &PyPointSet, d: usize) -> PyResult<f64> {
    let model = model_for(&z.inner, d)?;
    span::omega_min_distance_bound(&z.inner, d, &model).map_err(py_err)
}

/// Covering-growth model value at `eps` (built-in coefficients,
/// dimensions 1 and 2).
#[pyfunction]
fn vitushkin_eval(dim: usize, d: usize, eps: f64) -> PyResult<f64> {
    VitushkinModel::builtin(dim, d)
        .and_then(|m| m.eval(eps))
        .map_err(py_err)
}

// --- bounds ------------------------------------------------------------

#[pyfunction]
fn chebyshev(d: usize, x: f64) -> f64 {
    remez::chebyshev_eval(d, x)
}

#[pyfunction]
fn remez_factor_1d(mu: f64, d: usize) -> PyResult<f64> {
    Ok(remez::remez_factor_1d(mu, d).map_err(py_err)?.factor)
}

#[pyfunction]
fn brudnyi_ganzburg_factor(dim: usize, d: usize, lam: f64) -> PyResult<f64> {
    Ok(remez::brudnyi_ganzburg_factor(dim, d, lam)
        .map_err(py_err)?
        .factor)
}

/// Span-based bound chain: returns `(omega, lambda, factor)`.
#[pyfunction]
fn span_bound(z: &PyPointSet, d: usize) -> PyResult<(f64, f64, f64)> {
    let model = model_for(&z.inner, d)?;
    let r = remez::remez_span_bound(&z.inner, d, &model).map_err(py_err)?;
    Ok((r.omega_used.unwrap_or(0.0), r.lambda, r.factor))
}

#[pyfunction]
fn grid_product_bound(n: usize, s: usize, d: usize) -> PyResult<f64> {
    remez::grid_product_bound(n, s, d).map_err(py_err)
}

// --- exact oracle ------------------------------------------------------

#[pyfunction]
fn is_d_definite(z: &PyPointSet, d: usize) -> bool {
    pw::is_d_definite(&z.inner, d, pw::DEFAULT_RANK_TOL)
}

/// Exact-oracle span: `(value, probe, resolution)`.
#[pyfunction]
#[pyo3(signature = (z, d, resolution=None))]
fn exact_remez_span(
    z: &PyPointSet,
    d: usize,
    resolution: Option<usize>,
) -> PyResult<(f64, Vec<f64>, usize)> {
    let resolution = resolution.unwrap_or_else(|| pw::default_resolution(z.inner.dim()));
    let est = pw::exact_remez_span(&z.inner, d, resolution).map_err(py_err)?;
    Ok((est.value, est.probe, est.probe_grid))
}

#[pyfunction]
#[pyo3(signature = (z, d, resolution=None))]
fn lebesgue_oracle(z: &PyPointSet, d: usize, resolution: Option<usize>) -> PyResult<f64> {
    let resolution = resolution.unwrap_or_else(|| pw::default_resolution(z.inner.dim()));
    pw::lebesgue_oracle(&z.inner, d, resolution).map_err(py_err)
}

#[pyfunction]
fn favard_subset_value(points: Vec<f64>) -> PyResult<f64> {
    pw::favard_subset_value(&points).map_err(py_err)
}

/// Interpolation bound: `(value, exact_mode)`.
#[pyfunction]
#[pyo3(signature = (z, d, exact=true))]
fn favard_bound(z: &PyPointSet, d: usize, exact: bool) -> PyResult<(f64, bool)> {
    let mode = if exact {
        pw::FavardMode::Exact
    } else {
        pw::FavardMode::Heuristic
    };
    let r = pw::favard_bound(&z.inner, d, mode).map_err(py_err)?;
    Ok((r.value, matches!(r.mode, pw::FavardMode::Exact)))
}

/// Measure of `{x in [lo, hi] : |P(x)| <= rho}` for a polynomial given by
/// its coefficients in the rescaled Chebyshev basis.
#[pyfunction]
fn sublevel_measure_1d(coeffs: Vec<f64>, lo: f64, hi: f64, rho: f64) -> PyResult<f64> {
    let degree = coeffs.len().saturating_sub(1);
    let bbox = BoundingBox::new(vec![lo], vec![hi]).map_err(py_err)?;
    let p = Polynomial::new(1, degree, bbox, coeffs).map_err(py_err)?;
    pw::sublevel_measure_1d(&p, rho).map_err(py_err)
}

/// Falsifier run: `(passed, max_ratio, violations)`.
#[pyfunction]
#[pyo3(signature = (z, d, bound, trials=10_000, seed=0, resolution=None))]
fn falsify(
    z: &PyPointSet,
    d: usize,
    bound: f64,
    trials: u64,
    seed: u64,
    resolution: Option<usize>,
) -> PyResult<(bool, f64, usize)> {
    let resolution = resolution.unwrap_or_else(|| pw::default_resolution(z.inner.dim()));
    let r = pw::falsify(&z.inner, d, bound, trials, seed, resolution).map_err(py_err)?;
    Ok((r.passed(), r.max_ratio, r.violations.len()))
}

// --- spread ------------------------------------------------------------

/// Total 1-weight of the minimal spanning tree.
#[pyfunction]
fn mst_weight(z: &PyPointSet) -> PyResult<f64> {
    Ok(spread::mst(&z.inner, Metric::Linf).map_err(py_err)?.total_weight())
}

/// Beta-spread bounds `(v_lo, v_hi, exact_mode)`.
#[pyfunction]
fn beta_spread(z: &PyPointSet, beta: f64) -> PyResult<(f64, f64, bool)> {
    let mode = if z.inner.len() <= spread::SPREAD_EXACT_MAX_POINTS {
        spread::SpreadMode::Exact
    } else {
        spread::SpreadMode::Heuristic
    };
    let r = spread::beta_spread(&z.inner, beta, mode).map_err(py_err)?;
    Ok((r.v_lo, r.v_hi, r.exact))
}

/// Max-min dispersion bounds `(eta_lo, eta_hi)` for `p` points.
#[pyfunction]
#[pyo3(signature = (z, p, exact=true))]
fn eta(z: &PyPointSet, p: usize, exact: bool) -> PyResult<(f64, f64)> {
    let mode = if exact {
        spread::EtaMode::Exact
    } else {
        spread::EtaMode::Greedy
    };
    spread::eta(&z.inner, p, mode).map_err(py_err)
}

#[pyfunction]
#[pyo3(signature = (x, tol=1e-10))]
fn zeta(x: f64, tol: f64) -> PyResult<f64> {
    spread::zeta(x, tol).map_err(py_err)
}

/// Spread positivity certificate: `(certified, v_lo, threshold)`.
#[pyfunction]
fn spread_certificate(z: &PyPointSet, d: usize, beta: f64) -> PyResult<(bool, f64, f64)> {
    let model = model_for(&z.inner, d)?;
    let v = spread::beta_spread_certificate(&z.inner, beta, model.prime_constant())
        .map_err(py_err)?;
    Ok(match v {
        spread::SpreadVerdict::PositiveCertified { v_lo, threshold } => (true, v_lo, threshold),
        spread::SpreadVerdict::Inconclusive { v_lo, threshold } => (false, v_lo, threshold),
    })
}

#[pymodule]
fn dspan_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyPointSet>()?;
    m.add_function(wrap_pyfunction!(covering_number_1d, m)?)?;
    m.add_function(wrap_pyfunction!(covering_profile_1d, m)?)?;
    m.add_function(wrap_pyfunction!(covering_bounds, m)?)?;
    m.add_function(wrap_pyfunction!(packing_number, m)?)?;
    m.add_function(wrap_pyfunction!(omega, m)?)?;
    m.add_function(wrap_pyfunction!(omega_positive, m)?)?;
    m.add_function(wrap_pyfunction!(omega_min_distance_bound, m)?)?;
    m.add_function(wrap_pyfunction!(vitushkin_eval, m)?)?;
    m.add_function(wrap_pyfunction!(chebyshev, m)?)?;
    m.add_function(wrap_pyfunction!(remez_factor_1d, m)?)?;
    m.add_function(wrap_pyfunction!(brudnyi_ganzburg_factor, m)?)?;
    m.add_function(wrap_pyfunction!(span_bound, m)?)?;
    m.add_function(wrap_pyfunction!(grid_product_bound, m)?)?;
    m.add_function(wrap_pyfunction!(is_d_definite, m)?)?;
    m.add_function(wrap_pyfunction!(exact_remez_span, m)?)?;
    m.add_function(wrap_pyfunction!(lebesgue_oracle, m)?)?;
    m.add_function(wrap_pyfunction!(favard_subset_value, m)?)?;
    m.add_function(wrap_pyfunction!(favard_bound, m)?)?;
    m.add_function(wrap_pyfunction!(sublevel_measure_1d, m)?)?;
    m.add_function(wrap_pyfunction!(falsify, m)?)?;
    m.add_function(wrap_pyfunction!(mst_weight, m)?)?;
    m.add_function(wrap_pyfunction!(beta_spread, m)?)?;
    m.add_function(wrap_pyfunction!(eta, m)?)?;
    m.add_function(wrap_pyfunction!(zeta, m)?)?;
    m.add_function(wrap_pyfunction!(spread_certificate, m)?)?;
    m.add("__version__", env!("CARGO_PKG_VERSION"))?;
    Ok(())
}
