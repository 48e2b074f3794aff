//! Multivariate polynomials on a box in the tensor Chebyshev basis with
//! total-degree truncation, plus JSON import/export.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::pointset::BoundingBox;

/// Enumerates all multi-indices of arity `dim` and total degree `<= degree`
/// in graded lexicographic order. The position of an index in this list is
/// its coefficient slot.
pub fn multi_indices(dim: usize, degree: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = vec![0usize; dim];
    for total in 0..=degree {
        emit(dim, total, 0, &mut cur, &mut out);
    }
    out
}

fn emit(dim: usize, remaining: usize, axis: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if axis == dim - 1 {
        cur[axis] = remaining;
        out.push(cur.clone());
        return;
    }
    for k in (0..=remaining).rev() {
        cur[axis] = k;
        emit(dim, remaining - k, axis + 1, cur, out);
    }
}

/// `C(dim + degree, dim)`, the number of coefficient slots.
pub fn basis_dimension(dim: usize, degree: usize) -> usize {
    let mut num = 1usize;
    let mut den = 1usize;
    for i in 1..=dim {
        num *= degree + i;
        den *= i;
    }
    num / den
}

/// A polynomial of bounded total degree in the tensor Chebyshev basis
/// rescaled to its box. Coefficients are dense over the graded-lex basis
/// enumeration.
#[derive(Debug, Clone)]
pub struct Polynomial {
    dim: usize,
    degree: usize,
    bbox: BoundingBox,
    coeffs: Vec<f64>,
    indices: Vec<Vec<usize>>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim
            && self.degree == other.degree
            && self.bbox == other.bbox
            && self.coeffs == other.coeffs
    }
}

impl Polynomial {
    pub fn new(dim: usize, degree: usize, bbox: BoundingBox, coeffs: Vec<f64>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::invalid("dimension must be at least 1"));
        }
        if bbox.dim() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                got: bbox.dim(),
            });
        }
        let want = basis_dimension(dim, degree);
        if coeffs.len() != want {
            return Err(Error::invalid(format!(
                "expected {want} coefficients for dim {dim} degree {degree}, got {}",
                coeffs.len()
            )));
        }
        let indices = multi_indices(dim, degree);
        Ok(Polynomial { dim, degree, bbox, coeffs, indices })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn bounding_box(&self) -> &BoundingBox {
        &self.bbox
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    /// Maps a box coordinate to the reference interval `[-1, 1]`.
    fn reference(&self, axis: usize, x: f64) -> f64 {
        let (lo, hi) = (self.bbox.lo[axis], self.bbox.hi[axis]);
        (2.0 * x - lo - hi) / (hi - lo)
    }

    /// Stable evaluation: per-axis Chebyshev value tables by the three-term
    /// recurrence, then a dot product with the coefficients.
    pub fn eval(&self, x: &[f64]) -> Result<f64> {
        if x.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: x.len(),
            });
        }
        let tables = self.axis_tables(x);
        let mut acc = 0.0;
        for (slot, idx) in self.indices.iter().enumerate() {
            let c = self.coeffs[slot];
            if c == 0.0 {
                continue;
            }
            let mut basis = 1.0;
            for (a, &k) in idx.iter().enumerate() {
                basis *= tables[a][k];
            }
            acc += c * basis;
        }
        Ok(acc)
    }

    fn axis_tables(&self, x: &[f64]) -> Vec<Vec<f64>> {
        (0..self.dim)
            .map(|a| chebyshev_table(self.reference(a, x[a]), self.degree))
            .collect()
    }
}

/// Values `T_0(t) .. T_deg(t)` by the three-term recurrence.
pub fn chebyshev_table(t: f64, degree: usize) -> Vec<f64> {
    let mut vals = Vec::with_capacity(degree + 1);
    vals.push(1.0);
    if degree >= 1 {
        vals.push(t);
    }
    for _ in 2..=degree {
        let next = 2.0 * t * vals[vals.len() - 1] - vals[vals.len() - 2];
        vals.push(next);
    }
    vals
}

/// Evaluates the basis vector `(B_alpha(x))` for all multi-indices in
/// graded-lex order.
pub fn basis_row(dim: usize, degree: usize, bbox: &BoundingBox, x: &[f64]) -> Vec<f64> {
    let tables: Vec<Vec<f64>> = (0..dim)
        .map(|a| {
            let t = (2.0 * x[a] - bbox.lo[a] - bbox.hi[a]) / (bbox.hi[a] - bbox.lo[a]);
            chebyshev_table(t, degree)
        })
        .collect();
    multi_indices(dim, degree)
        .iter()
        .map(|idx| idx.iter().enumerate().map(|(a, &k)| tables[a][k]).product())
        .collect()
}

// ---------------------------------------------------------------------------
// JSON form
// ---------------------------------------------------------------------------

#[derive(Serialize, Deserialize)]
struct SparseCoeff {
    idx: Vec<usize>,
    c: f64,
}

#[derive(Serialize, Deserialize)]
struct PolynomialJson {
    dim: usize,
    degree: usize,
    basis: String,
    #[serde(rename = "box")]
    bbox: BoundingBox,
    coeffs: Vec<SparseCoeff>,
}

pub fn polynomial_to_json(p: &Polynomial) -> String {
    let indices = multi_indices(p.dim(), p.degree());
    let coeffs = indices
        .iter()
        .zip(p.coeffs())
        .filter(|(_, c)| **c != 0.0)
        .map(|(idx, c)| SparseCoeff { idx: idx.clone(), c: *c })
        .collect();
    let form = PolynomialJson {
        dim: p.dim(),
        degree: p.degree(),
        basis: "chebyshev-box".to_string(),
        bbox: p.bounding_box().clone(),
        coeffs,
    };
    serde_json::to_string_pretty(&form).expect("polynomial serialization cannot fail")
}

pub fn polynomial_from_json(text: &str) -> Result<Polynomial> {
    let form: PolynomialJson =
        serde_json::from_str(text).map_err(|e| Error::parse("json", e.to_string()))?;
    if form.basis != "chebyshev-box" {
        return Err(Error::parse("basis", format!("unsupported basis {:?}", form.basis)));
    }
    let indices = multi_indices(form.dim, form.degree);
    let mut dense = vec![0.0; indices.len()];
    for (i, sc) in form.coeffs.iter().enumerate() {
        let slot = indices
            .iter()
            .position(|idx| idx == &sc.idx)
            .ok_or_else(|| {
                Error::parse(
                    format!("coeffs[{i}]"),
                    format!("index {:?} outside dim {} degree {}", sc.idx, form.dim, form.degree),
                )
            })?;
        dense[slot] = sc.c;
    }
    Polynomial::new(form.dim, form.degree, form.bbox, dense)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn unit_box(dim: usize) -> BoundingBox {
        BoundingBox::symmetric_unit(dim)
    }

    #[test]
    fn index_enumeration() {
        let idx = multi_indices(1, 3);
        assert_eq!(idx, vec![vec![0], vec![1], vec![2], vec![3]]);
        let idx = multi_indices(2, 2);
        assert_eq!(idx.len(), basis_dimension(2, 2));
        assert_eq!(idx[0], vec![0, 0]);
        assert!(idx.contains(&vec![1, 1]));
        assert_eq!(basis_dimension(2, 3), 10);
        assert_eq!(basis_dimension(3, 2), 10);
    }

    #[test]
    fn eval_constant_and_basis_elements() {
        let p = Polynomial::new(2, 1, unit_box(2), vec![1.0, 0.0, 0.0]).unwrap();
        assert_eq!(p.eval(&[0.3, -0.7]).unwrap(), 1.0);

        // T_3 on [-1,1] at 0.5 is 4 * 0.125 - 1.5 = -1
        let mut coeffs = vec![0.0; 4];
        coeffs[3] = 1.0;
        let p = Polynomial::new(1, 3, unit_box(1), coeffs).unwrap();
        assert!((p.eval(&[0.5]).unwrap() + 1.0).abs() < 1e-14);

        // tensor T_1 x T_1 at (0.5, 0.5)
        let indices = multi_indices(2, 2);
        let mut coeffs = vec![0.0; indices.len()];
        let slot = indices.iter().position(|i| i == &vec![1, 1]).unwrap();
        coeffs[slot] = 1.0;
        let p = Polynomial::new(2, 2, unit_box(2), coeffs).unwrap();
        assert!((p.eval(&[0.5, 0.5]).unwrap() - 0.25).abs() < 1e-14);
    }

    #[test]
    fn eval_respects_box_rescaling() {
        // T_1 on box [0, 2] is x - 1
        let b = BoundingBox::new(vec![0.0], vec![2.0]).unwrap();
        let p = Polynomial::new(1, 1, b, vec![0.0, 1.0]).unwrap();
        assert!((p.eval(&[0.0]).unwrap() + 1.0).abs() < 1e-15);
        assert!((p.eval(&[2.0]).unwrap() - 1.0).abs() < 1e-15);
        assert!((p.eval(&[1.5]).unwrap() - 0.5).abs() < 1e-15);
    }

    #[test]
    fn eval_matches_direct_sum_high_degree() {
        // relative accuracy of the recurrence tables at degree 30
        let d = 30usize;
        let coeffs: Vec<f64> = (0..=d).map(|k| ((k * 7 + 3) % 11) as f64 - 5.0).collect();
        let p = Polynomial::new(1, d, unit_box(1), coeffs.clone()).unwrap();
        for &x in &[-0.95f64, -0.5, 0.0, 0.33, 0.875, 1.0] {
            let direct: f64 = coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| c * (k as f64 * x.acos()).cos())
                .sum();
            let v = p.eval(&[x]).unwrap();
            assert!(
                (v - direct).abs() <= 1e-12 * direct.abs().max(1.0),
                "x={x}: {v} vs {direct}"
            );
        }
    }

    #[test]
    fn eval_rejects_wrong_arity() {
        let p = Polynomial::new(2, 1, unit_box(2), vec![0.0, 0.0, 1.0]).unwrap();
        assert!(p.eval(&[0.0]).is_err());
    }

    #[test]
    fn json_round_trip() {
        let indices = multi_indices(2, 3);
        let mut coeffs = vec![0.0; indices.len()];
        coeffs[0] = 0.5;
        coeffs[4] = -1.25;
        coeffs[9] = 3.0;
        let p = Polynomial::new(2, 3, unit_box(2), coeffs).unwrap();
        let text = polynomial_to_json(&p);
        let back = polynomial_from_json(&text).unwrap();
        assert_eq!(p, back);
    }

    #[test]
    fn json_rejects_bad_index() {
        let text = r#"{"dim":1,"degree":2,"basis":"chebyshev-box",
            "box":{"lo":[-1],"hi":[1]},"coeffs":[{"idx":[5],"c":1.0}]}"#;
        assert!(polynomial_from_json(text).is_err());
    }
}
