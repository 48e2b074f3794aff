//! Finite point sets in an axis-aligned box, their canonical generators,
//! file IO and elementary metric queries.
//!
//! The ambient metric is `l∞` throughout; Euclidean distance is offered as
//! an option only where a caller explicitly asks for it (see the spread
//! module).

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Absolute slack used in threshold comparisons ("fits in a cube of side
/// eps") so that covering profiles are stable under rounding.
pub const DIST_SLACK: f64 = 1e-12;

/// Hard cap on generated set sizes (`make_grid_nd` and friends).
pub const MAX_GENERATED_POINTS: usize = 4_000_000;

/// Distance used for pairwise point comparisons.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Metric {
    Linf,
    Euclidean,
}

impl Metric {
    pub fn dist(&self, a: &[f64], b: &[f64]) -> f64 {
        match self {
            Metric::Linf => linf_dist(a, b),
            Metric::Euclidean => a
                .iter()
                .zip(b)
                .map(|(x, y)| (x - y) * (x - y))
                .sum::<f64>()
                .sqrt(),
        }
    }
}

/// `l∞` distance between two points of equal arity.
pub fn linf_dist(a: &[f64], b: &[f64]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y).abs())
        .fold(0.0, f64::max)
}

/// Axis-aligned box with strictly positive side lengths.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundingBox {
    pub lo: Vec<f64>,
    pub hi: Vec<f64>,
}

impl BoundingBox {
    pub fn new(lo: Vec<f64>, hi: Vec<f64>) -> Result<Self> {
        if lo.len() != hi.len() || lo.is_empty() {
            return Err(Error::invalid("box bounds must be non-empty and of equal arity"));
        }
        for (i, (l, h)) in lo.iter().zip(&hi).enumerate() {
            if !(l.is_finite() && h.is_finite() && l < h) {
                return Err(Error::invalid(format!(
                    "box must satisfy lo < hi in every coordinate (axis {i}: {l} .. {h})"
                )));
            }
        }
        Ok(BoundingBox { lo, hi })
    }

    /// The symmetric cube `[-1,1]^n`.
    pub fn symmetric_unit(dim: usize) -> Self {
        BoundingBox {
            lo: vec![-1.0; dim],
            hi: vec![1.0; dim],
        }
    }

    pub fn dim(&self) -> usize {
        self.lo.len()
    }

    pub fn volume(&self) -> f64 {
        self.lo.iter().zip(&self.hi).map(|(l, h)| h - l).product()
    }

    /// Side length of the longest axis (`l∞` diameter of the box).
    pub fn diameter(&self) -> f64 {
        self.lo
            .iter()
            .zip(&self.hi)
            .map(|(l, h)| h - l)
            .fold(0.0, f64::max)
    }

    pub fn contains(&self, p: &[f64]) -> bool {
        p.len() == self.dim()
            && p.iter()
                .zip(self.lo.iter().zip(&self.hi))
                .all(|(x, (l, h))| *x >= *l && *x <= *h)
    }

    /// All `2^n` corner points, in lexicographic order.
    pub fn corners(&self) -> Vec<Vec<f64>> {
        let n = self.dim();
        let mut out = Vec::with_capacity(1 << n);
        for mask in 0..(1usize << n) {
            let mut p = Vec::with_capacity(n);
            for i in 0..n {
                p.push(if mask >> i & 1 == 0 { self.lo[i] } else { self.hi[i] });
            }
            out.push(p);
        }
        out
    }
}

/// A finite set of pairwise-distinct points inside an axis-aligned box.
///
/// The box is the domain over which suprema of polynomials are taken; it is
/// carried explicitly and never assumed to have unit volume.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PointSet {
    dim: usize,
    #[serde(rename = "box")]
    bbox: BoundingBox,
    points: Vec<Vec<f64>>,
}

impl PointSet {
    /// Builds a set after checking every invariant: arity, containment in
    /// the box and pairwise distinctness.
    pub fn new(dim: usize, bbox: BoundingBox, points: Vec<Vec<f64>>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::invalid("dimension must be at least 1"));
        }
        if bbox.dim() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                got: bbox.dim(),
            });
        }
        if points.is_empty() {
            return Err(Error::invalid("a point set must contain at least one point"));
        }
        for (i, p) in points.iter().enumerate() {
            if p.len() != dim {
                return Err(Error::parse(
                    format!("point {i}"),
                    format!("arity {} does not match dimension {dim}", p.len()),
                ));
            }
            if p.iter().any(|x| !x.is_finite()) {
                return Err(Error::parse(format!("point {i}"), "non-finite coordinate"));
            }
            if !bbox.contains(p) {
                return Err(Error::parse(
                    format!("point {i}"),
                    "point lies outside the box",
                ));
            }
        }
        for i in 0..points.len() {
            for j in (i + 1)..points.len() {
                if points[i] == points[j] {
                    return Err(Error::parse(
                        format!("point {j}"),
                        format!("duplicate of point {i}"),
                    ));
                }
            }
        }
        Ok(PointSet { dim, bbox, points })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[Vec<f64>] {
        &self.points
    }

    pub fn point(&self, i: usize) -> &[f64] {
        &self.points[i]
    }

    pub fn bounding_box(&self) -> &BoundingBox {
        &self.bbox
    }

    /// Coordinates of a 1D set, sorted ascending.
    pub fn sorted_coords_1d(&self) -> Result<Vec<f64>> {
        if self.dim != 1 {
            return Err(Error::DimensionMismatch {
                expected: 1,
                got: self.dim,
            });
        }
        let mut xs: Vec<f64> = self.points.iter().map(|p| p[0]).collect();
        xs.sort_by(|a, b| a.partial_cmp(b).unwrap());
        Ok(xs)
    }

    /// Replaces the box, revalidating containment.
    pub fn with_box(self, bbox: BoundingBox) -> Result<Self> {
        PointSet::new(self.dim, bbox, self.points)
    }
}

/// Regular grid of `s` points on `[-1, 1]`, endpoints exactly `±1`.
///
/// Nodes are computed as `-1 + 2(i-1)/(s-1)` rather than by cumulative
/// addition, so repeated calls are bit-identical and free of drift.
pub fn make_grid_1d(s: usize) -> Result<PointSet> {
    if s < 2 {
        return Err(Error::invalid(format!("grid needs s >= 2, got {s}")));
    }
    let mut pts = Vec::with_capacity(s);
    for i in 0..s {
        let x = if i == 0 {
            -1.0
        } else if i == s - 1 {
            1.0
        } else {
            -1.0 + 2.0 * i as f64 / (s - 1) as f64
        };
        pts.push(vec![x]);
    }
    PointSet::new(1, BoundingBox::symmetric_unit(1), pts)
}

/// Cartesian product of `make_grid_1d(s)` with itself `n` times:
/// `s^n` points in `[-1,1]^n`.
pub fn make_grid_nd(n: usize, s: usize) -> Result<PointSet> {
    if n < 1 {
        return Err(Error::invalid("dimension must be at least 1"));
    }
    if s < 2 {
        return Err(Error::invalid(format!("grid needs s >= 2, got {s}")));
    }
    let total = (s as u128).checked_pow(n as u32).ok_or_else(|| {
        Error::TooLarge(format!("grid of {s}^{n} points overflows"))
    })?;
    if total > MAX_GENERATED_POINTS as u128 {
        return Err(Error::TooLarge(format!(
            "grid of {s}^{n} = {total} points exceeds the cap of {MAX_GENERATED_POINTS}"
        )));
    }
    let axis: Vec<f64> = make_grid_1d(s)?.points().iter().map(|p| p[0]).collect();
    let mut pts = Vec::with_capacity(total as usize);
    let mut idx = vec![0usize; n];
    loop {
        pts.push(idx.iter().map(|&k| axis[k]).collect::<Vec<f64>>());
        // odometer increment
        let mut axis_i = n;
        loop {
            if axis_i == 0 {
                return PointSet::new(n, BoundingBox::symmetric_unit(n), pts);
            }
            axis_i -= 1;
            idx[axis_i] += 1;
            if idx[axis_i] < s {
                break;
            }
            idx[axis_i] = 0;
        }
    }
}

/// Truncated power-law set `{1/k^r : k = 1..K}` with box `[-1,1]`.
pub fn make_power_set(r: f64, k_max: usize) -> Result<PointSet> {
    if !(r > 0.0) {
        return Err(Error::invalid(format!("exponent must be positive, got {r}")));
    }
    if k_max < 1 {
        return Err(Error::invalid("truncation K must be at least 1"));
    }
    if k_max > MAX_GENERATED_POINTS {
        return Err(Error::TooLarge(format!("K = {k_max} exceeds the cap")));
    }
    let pts = (1..=k_max)
        .map(|k| vec![(k as f64).powf(-r)])
        .collect::<Vec<_>>();
    PointSet::new(1, BoundingBox::symmetric_unit(1), pts)
}

/// Truncated geometric set `{q^m : m = 0..K-1}` with box `[-1,1]`.
pub fn make_geometric_set(q: f64, k_max: usize) -> Result<PointSet> {
    if !(q > 0.0 && q < 1.0) {
        return Err(Error::invalid(format!("ratio must lie in (0,1), got {q}")));
    }
    if k_max < 1 {
        return Err(Error::invalid("truncation K must be at least 1"));
    }
    if k_max > MAX_GENERATED_POINTS {
        return Err(Error::TooLarge(format!("K = {k_max} exceeds the cap")));
    }
    let pts = (0..k_max)
        .map(|m| vec![q.powi(m as i32)])
        .collect::<Vec<_>>();
    PointSet::new(1, BoundingBox::symmetric_unit(1), pts)
}

/// Minimal `l∞` distance between distinct points of `Z`; strictly positive
/// by the distinctness invariant.
pub fn min_pairwise_distance(z: &PointSet) -> Result<f64> {
    if z.len() < 2 {
        return Err(Error::InsufficientPoints {
            needed: 2,
            got: z.len(),
        });
    }
    let pts = z.points();
    let mut best = f64::INFINITY;
    for i in 0..pts.len() {
        for j in (i + 1)..pts.len() {
            let d = linf_dist(&pts[i], &pts[j]);
            if d < best {
                best = d;
            }
        }
    }
    Ok(best)
}

/// Greedy representative subset: one point of `Z` per cube of a greedy
/// cover of `Z` by cubes of side `eps/2`. Every point of `Z` lies within
/// `l∞` distance `eps/2` of some returned point, and the result is a
/// subset of `Z`.
pub fn dense_subset(z: &PointSet, eps: f64) -> Result<PointSet> {
    if !(eps > 0.0) {
        return Err(Error::invalid(format!("eps must be positive, got {eps}")));
    }
    let radius = 0.5 * eps;
    let mut reps: Vec<Vec<f64>> = Vec::new();
    for p in z.points() {
        if !reps.iter().any(|r| linf_dist(r, p) <= radius + DIST_SLACK) {
            reps.push(p.clone());
        }
    }
    PointSet::new(z.dim(), z.bounding_box().clone(), reps)
}

// ---------------------------------------------------------------------------
// File IO
// ---------------------------------------------------------------------------

#[derive(Deserialize)]
struct RawPointSet {
    dim: usize,
    #[serde(rename = "box")]
    bbox: BoundingBox,
    points: Vec<Vec<f64>>,
}

impl<'de> Deserialize<'de> for PointSet {
    fn deserialize<D>(deserializer: D) -> std::result::Result<Self, D::Error>
    where
        D: serde::Deserializer<'de>,
    {
        let raw = RawPointSet::deserialize(deserializer)?;
        PointSet::new(raw.dim, raw.bbox, raw.points).map_err(serde::de::Error::custom)
    }
}

/// Parses a point set from JSON text (schema: `{"dim", "box": {"lo", "hi"},
/// "points"}`).
pub fn pointset_from_json(text: &str) -> Result<PointSet> {
    serde_json::from_str(text).map_err(|e| Error::parse("json", e.to_string()))
}

pub fn pointset_to_json(z: &PointSet) -> String {
    serde_json::to_string_pretty(z).expect("point set serialization cannot fail")
}

/// Parses CSV: one point per row, comma separated. The box defaults to
/// `[-1,1]^n` unless a `# box lo.. hi..` directive (n lows then n highs)
/// precedes the data.
pub fn pointset_from_csv(text: &str) -> Result<PointSet> {
    let mut box_spec: Option<Vec<f64>> = None;
    let mut rows: Vec<Vec<f64>> = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix('#') {
            let rest = rest.trim();
            if let Some(vals) = rest.strip_prefix("box") {
                let nums: std::result::Result<Vec<f64>, _> = vals
                    .split_whitespace()
                    .map(|t| t.parse::<f64>())
                    .collect();
                box_spec = Some(nums.map_err(|e| {
                    Error::parse(format!("line {}", lineno + 1), e.to_string())
                })?);
            }
            continue;
        }
        let row: std::result::Result<Vec<f64>, _> = line
            .split(',')
            .map(|t| t.trim().parse::<f64>())
            .collect();
        rows.push(row.map_err(|e| Error::parse(format!("line {}", lineno + 1), e.to_string()))?);
    }
    if rows.is_empty() {
        return Err(Error::parse("csv", "no data rows"));
    }
    let dim = rows[0].len();
    let bbox = match box_spec {
        Some(vals) => {
            if vals.len() != 2 * dim {
                return Err(Error::parse(
                    "box directive",
                    format!("expected {} numbers, got {}", 2 * dim, vals.len()),
                ));
            }
            BoundingBox::new(vals[..dim].to_vec(), vals[dim..].to_vec())?
        }
        None => BoundingBox::symmetric_unit(dim),
    };
    PointSet::new(dim, bbox, rows)
}

pub fn load_pointset(path: impl AsRef<Path>) -> Result<PointSet> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path)?;
    match path.extension().and_then(|e| e.to_str()) {
        Some("csv") => pointset_from_csv(&text),
        _ => pointset_from_json(&text),
    }
}

pub fn save_pointset(z: &PointSet, path: impl AsRef<Path>) -> Result<()> {
    std::fs::write(path, pointset_to_json(z))?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_1d_small() {
        let g = make_grid_1d(2).unwrap();
        assert_eq!(g.points(), &[vec![-1.0], vec![1.0]]);
        let g = make_grid_1d(3).unwrap();
        assert_eq!(g.points(), &[vec![-1.0], vec![0.0], vec![1.0]]);
    }

    #[test]
    fn grid_1d_spacing() {
        let g = make_grid_1d(11).unwrap();
        assert_eq!(g.len(), 11);
        let xs = g.sorted_coords_1d().unwrap();
        for w in xs.windows(2) {
            assert!((w[1] - w[0] - 0.2).abs() < 1e-15);
        }
        assert_eq!(xs[0], -1.0);
        assert_eq!(xs[10], 1.0);
    }

    #[test]
    fn grid_1d_rejects_degenerate() {
        assert!(matches!(make_grid_1d(1), Err(Error::InvalidParameter(_))));
    }

    #[test]
    fn grid_nd_product_structure() {
        let g = make_grid_nd(1, 3).unwrap();
        assert_eq!(g.points(), make_grid_1d(3).unwrap().points());

        let g = make_grid_nd(2, 3).unwrap();
        assert_eq!(g.len(), 9);
        assert!(g.points().contains(&vec![0.0, 0.0]));
        assert!(g.points().contains(&vec![-1.0, 1.0]));
        assert!(g.points().contains(&vec![1.0, 1.0]));

        let g = make_grid_nd(2, 11).unwrap();
        assert_eq!(g.len(), 121);
    }

    #[test]
    fn grid_nd_cap() {
        assert!(matches!(make_grid_nd(10, 100), Err(Error::TooLarge(_))));
    }

    #[test]
    fn power_set_values() {
        let z = make_power_set(1.0, 3).unwrap();
        assert_eq!(z.points(), &[vec![1.0], vec![0.5], vec![1.0 / 3.0]]);
        let z = make_power_set(2.0, 2).unwrap();
        assert_eq!(z.points(), &[vec![1.0], vec![0.25]]);
        let z = make_power_set(1.0, 1).unwrap();
        assert_eq!(z.points(), &[vec![1.0]]);
        assert_eq!(z.bounding_box(), &BoundingBox::symmetric_unit(1));
    }

    #[test]
    fn geometric_set_values() {
        let z = make_geometric_set(0.5, 3).unwrap();
        assert_eq!(z.points(), &[vec![1.0], vec![0.5], vec![0.25]]);
        let z = make_geometric_set(0.9, 1).unwrap();
        assert_eq!(z.points(), &[vec![1.0]]);
        let z = make_geometric_set(0.5, 4).unwrap();
        assert_eq!(z.points()[3], vec![0.125]);
        assert!(make_geometric_set(1.0, 3).is_err());
        assert!(make_geometric_set(0.0, 3).is_err());
    }

    #[test]
    fn generators_are_deterministic() {
        assert_eq!(make_grid_1d(17).unwrap(), make_grid_1d(17).unwrap());
        assert_eq!(
            make_power_set(1.5, 40).unwrap(),
            make_power_set(1.5, 40).unwrap()
        );
        assert_eq!(
            make_geometric_set(0.7, 25).unwrap(),
            make_geometric_set(0.7, 25).unwrap()
        );
    }

    #[test]
    fn min_distance_examples() {
        let g = make_grid_1d(11).unwrap();
        let d = min_pairwise_distance(&g).unwrap();
        assert!((d - 0.2).abs() <= f64::EPSILON);

        let z = PointSet::new(
            2,
            BoundingBox::symmetric_unit(2),
            vec![vec![0.0, 0.0], vec![0.3, 0.1]],
        )
        .unwrap();
        assert_eq!(min_pairwise_distance(&z).unwrap(), 0.3);

        let z = make_geometric_set(0.5, 3).unwrap();
        assert!((min_pairwise_distance(&z).unwrap() - 0.25).abs() < 1e-15);

        let single = make_power_set(1.0, 1).unwrap();
        assert!(matches!(
            min_pairwise_distance(&single),
            Err(Error::InsufficientPoints { .. })
        ));
    }

    #[test]
    fn grid_min_distance_matches_spacing() {
        // node rounding makes adjacent differences drift by a couple of
        // ulps of the node magnitude, never more
        for s in [3usize, 7, 11, 21, 41, 81] {
            let g = make_grid_1d(s).unwrap();
            let d = min_pairwise_distance(&g).unwrap();
            let expect = 2.0 / (s - 1) as f64;
            assert!(
                (d - expect).abs() <= 4.0 * f64::EPSILON,
                "s={s}: {d} vs {expect}"
            );
        }
    }

    #[test]
    fn dense_subset_covers() {
        let g = make_grid_1d(11).unwrap();
        let sub = dense_subset(&g, 0.4).unwrap();
        assert!(sub.len() <= 6);
        for p in g.points() {
            assert!(sub
                .points()
                .iter()
                .any(|r| linf_dist(r, p) <= 0.2 + DIST_SLACK));
        }
        // subset relation
        for p in sub.points() {
            assert!(g.points().contains(p));
        }

        // eps larger than the box diameter collapses to one representative
        let sub = dense_subset(&g, 5.0).unwrap();
        assert_eq!(sub.len(), 1);

        let single = make_power_set(1.0, 1).unwrap();
        let sub = dense_subset(&single, 0.1).unwrap();
        assert_eq!(sub.points(), single.points());
    }

    #[test]
    fn json_round_trip_is_exact() {
        let z = PointSet::new(
            2,
            BoundingBox::new(vec![-1.0, 0.0], vec![1.0, 2.0]).unwrap(),
            vec![
                vec![0.1234567890123456, 1.0],
                vec![-0.9999999999999999, 1.9999999999999998],
                vec![1.0 / 3.0, 2.0 / 3.0],
            ],
        )
        .unwrap();
        let text = pointset_to_json(&z);
        let back = pointset_from_json(&text).unwrap();
        assert_eq!(z, back);
        // and byte-stable across a second round trip
        assert_eq!(text, pointset_to_json(&back));
    }

    #[test]
    fn json_rejects_duplicates_and_outliers() {
        let dup = r#"{"dim":1,"box":{"lo":[-1],"hi":[1]},"points":[[0.5],[0.5]]}"#;
        assert!(pointset_from_json(dup).is_err());
        let out = r#"{"dim":1,"box":{"lo":[-1],"hi":[1]},"points":[[2.0]]}"#;
        assert!(pointset_from_json(out).is_err());
        let arity = r#"{"dim":2,"box":{"lo":[-1,-1],"hi":[1,1]},"points":[[0.0]]}"#;
        assert!(pointset_from_json(arity).is_err());
    }

    #[test]
    fn csv_ingestion() {
        let z = pointset_from_csv("0.1, 0.2\n0.3, 0.4\n").unwrap();
        assert_eq!(z.dim(), 2);
        assert_eq!(z.bounding_box(), &BoundingBox::symmetric_unit(2));

        let z = pointset_from_csv("# box 0 0 2 2\n0.5, 0.5\n1.5, 1.5\n").unwrap();
        assert_eq!(z.bounding_box().lo, vec![0.0, 0.0]);
        assert_eq!(z.bounding_box().hi, vec![2.0, 2.0]);

        assert!(pointset_from_csv("1.0, nope\n").is_err());
        assert!(pointset_from_csv("").is_err());
    }

    #[test]
    fn load_dispatches_on_extension() {
        let dir = std::env::temp_dir().join("dspan-pointset-tests");
        std::fs::create_dir_all(&dir).unwrap();

        let csv_path = dir.join("two_col.csv");
        std::fs::write(&csv_path, "0.25, -0.5\n-0.75, 0.5\n0.0, 0.0\n").unwrap();
        let z = load_pointset(&csv_path).unwrap();
        assert_eq!(z.dim(), 2);
        assert_eq!(z.len(), 3);

        let json_path = dir.join("roundtrip.json");
        save_pointset(&z, &json_path).unwrap();
        assert_eq!(load_pointset(&json_path).unwrap(), z);
    }

    #[test]
    fn box_corners() {
        let b = BoundingBox::new(vec![0.0, 0.0], vec![1.0, 2.0]).unwrap();
        assert_eq!(b.volume(), 2.0);
        let corners = b.corners();
        assert_eq!(corners.len(), 4);
        assert!(corners.contains(&vec![0.0, 2.0]));
        assert!(corners.contains(&vec![1.0, 0.0]));
    }
}
