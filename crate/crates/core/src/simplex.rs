//! Dense two-phase simplex for small standard-form programs
//! `min c.x  s.t.  A x = b, x >= 0`, with Bland's rule for anti-cycling
//! and recovery of the row multipliers. Problem sizes here are a few
//! hundred columns at most, so no factorization machinery is needed.

const TOL: f64 = 1e-9;
const MAX_ITERS: usize = 200_000;

#[derive(Debug)]
pub enum LpOutcome {
    Optimal(LpSolution),
    Infeasible,
    Unbounded,
    IterationLimit,
}

#[derive(Debug)]
pub struct LpSolution {
    pub objective: f64,
    #[allow(dead_code)] // read by the feasibility checks in tests
    pub x: Vec<f64>,
    /// Simplex multipliers of the equality rows, in the caller's row order
    /// and sign convention.
    pub multipliers: Vec<f64>,
}

struct Tableau {
    rows: usize,
    ncols: usize, // structural columns
    tab: Vec<Vec<f64>>,
    rhs: Vec<f64>,
    basis: Vec<usize>,
    active: Vec<bool>,
}

impl Tableau {
    fn total_cols(&self) -> usize {
        self.ncols + self.rows
    }

    fn pivot(&mut self, prow: usize, pcol: usize) {
        let piv = self.tab[prow][pcol];
        let inv = 1.0 / piv;
        for v in self.tab[prow].iter_mut() {
            *v *= inv;
        }
        self.rhs[prow] *= inv;
        for r in 0..self.rows {
            if r == prow {
                continue;
            }
            let factor = self.tab[r][pcol];
            if factor == 0.0 {
                continue;
            }
            for c in 0..self.total_cols() {
                let delta = factor * self.tab[prow][c];
                self.tab[r][c] -= delta;
            }
            self.tab[r][pcol] = 0.0;
            self.rhs[r] -= factor * self.rhs[prow];
        }
        self.basis[prow] = pcol;
    }

    /// Runs simplex iterations on the maintained reduced-cost row.
    /// `allowed` filters which columns may enter. Entering column by
    /// Dantzig's rule, switching to Bland's rule while the objective
    /// stalls so that degenerate bases cannot cycle.
    fn iterate(
        &mut self,
        costrow: &mut [f64],
        objval: &mut f64,
        allowed: impl Fn(usize) -> bool,
    ) -> Result<(), LpOutcome> {
        let mut stall = 0usize;
        for _ in 0..MAX_ITERS {
            let bland = stall >= 40;
            let mut entering = None;
            if bland {
                for j in 0..self.total_cols() {
                    if allowed(j) && costrow[j] < -TOL {
                        entering = Some(j);
                        break;
                    }
                }
            } else {
                let mut best = -TOL;
                for j in 0..self.total_cols() {
                    if allowed(j) && costrow[j] < best {
                        best = costrow[j];
                        entering = Some(j);
                    }
                }
            }
            let Some(j) = entering else {
                return Ok(());
            };
            // Ratio test; ties broken by smallest basic variable index.
            let mut best: Option<(f64, usize, usize)> = None; // (ratio, basis idx, row)
            for r in 0..self.rows {
                if !self.active[r] {
                    continue;
                }
                let a = self.tab[r][j];
                if a > TOL {
                    let ratio = self.rhs[r] / a;
                    let key = (ratio, self.basis[r]);
                    let better = match best {
                        None => true,
                        Some((br, bb, _)) => {
                            key.0 < br - 1e-15 || ((key.0 - br).abs() <= 1e-15 && key.1 < bb)
                        }
                    };
                    if better {
                        best = Some((ratio, self.basis[r], r));
                    }
                }
            }
            let Some((_, _, prow)) = best else {
                return Err(LpOutcome::Unbounded);
            };
            // Update the cost row before the tableau row is rescaled:
            // the objective moves by (reduced cost) * (entering value).
            let factor = costrow[j];
            let piv = self.tab[prow][j];
            for c in 0..self.total_cols() {
                costrow[c] -= factor * self.tab[prow][c] / piv;
            }
            costrow[j] = 0.0;
            let step = factor * self.rhs[prow] / piv;
            *objval += step;
            if step < -1e-13 * (1.0 + objval.abs()) {
                stall = 0;
            } else {
                stall += 1;
            }
            self.pivot(prow, j);
        }
        Err(LpOutcome::IterationLimit)
    }
}

/// Solves `min c.x : A x = b, x >= 0` and reports the optimum, a solution
/// vector and the row multipliers.
pub fn solve(a: &[Vec<f64>], b: &[f64], c: &[f64]) -> LpOutcome {
    let rows = a.len();
    let ncols = c.len();
    debug_assert!(a.iter().all(|row| row.len() == ncols));
    debug_assert_eq!(b.len(), rows);

    // Normalize rows to nonnegative rhs; artificial columns form an
    // identity in the normalized system.
    let mut sigma = vec![1.0f64; rows];
    let mut tab = Vec::with_capacity(rows);
    let mut rhs = Vec::with_capacity(rows);
    for r in 0..rows {
        let s = if b[r] < 0.0 { -1.0 } else { 1.0 };
        sigma[r] = s;
        let mut row: Vec<f64> = a[r].iter().map(|v| s * v).collect();
        row.extend((0..rows).map(|k| if k == r { 1.0 } else { 0.0 }));
        tab.push(row);
        rhs.push(s * b[r]);
    }
    let mut t = Tableau {
        rows,
        ncols,
        tab,
        rhs,
        basis: (ncols..ncols + rows).collect(),
        active: vec![true; rows],
    };

    // Phase 1: minimize the sum of artificials.
    let mut costrow = vec![0.0f64; t.total_cols()];
    for j in 0..ncols {
        costrow[j] = -(0..rows).map(|r| t.tab[r][j]).sum::<f64>();
    }
    let mut objval: f64 = t.rhs.iter().sum();
    if let Err(out) = t.iterate(&mut costrow, &mut objval, |_| true) {
        return out;
    }
    if objval > 1e-7 {
        return LpOutcome::Infeasible;
    }
    // Drive remaining basic artificials out or deactivate redundant rows.
    for r in 0..rows {
        if t.basis[r] >= ncols {
            let pcol = (0..ncols).find(|&j| t.tab[r][j].abs() > TOL);
            match pcol {
                Some(j) => t.pivot(r, j),
                None => t.active[r] = false,
            }
        }
    }

    // Phase 2: the real objective, artificials barred from entering.
    let mut costrow = vec![0.0f64; t.total_cols()];
    costrow[..ncols].copy_from_slice(c);
    let mut objval = 0.0;
    for r in 0..rows {
        let bi = t.basis[r];
        if bi < ncols && c[bi] != 0.0 {
            let cb = c[bi];
            for j in 0..t.total_cols() {
                costrow[j] -= cb * t.tab[r][j];
            }
            objval += cb * t.rhs[r];
        }
    }
    for j in 0..ncols {
        if t.basis.contains(&j) {
            costrow[j] = 0.0;
        }
    }
    let ncols_cap = ncols;
    if let Err(out) = t.iterate(&mut costrow, &mut objval, |j| j < ncols_cap) {
        return out;
    }

    let mut x = vec![0.0f64; ncols];
    for r in 0..rows {
        if t.active[r] && t.basis[r] < ncols {
            x[t.basis[r]] = t.rhs[r];
        }
    }
    // Multipliers by a fresh solve of B^T y = c_B on the original data,
    // immune to drift accumulated in the tableau. Basic artificial
    // columns are unit vectors with zero cost.
    let mut bt = vec![vec![0.0f64; rows]; rows];
    let mut cb = vec![0.0f64; rows];
    for (slot, &bv) in t.basis.iter().enumerate() {
        if bv < ncols {
            for r in 0..rows {
                bt[slot][r] = sigma[r] * a[r][bv];
            }
            cb[slot] = c[bv];
        } else {
            bt[slot][bv - ncols] = 1.0;
            cb[slot] = 0.0;
        }
    }
    let y_norm = solve_dense(&mut bt, &mut cb);
    let multipliers = (0..rows).map(|r| sigma[r] * y_norm[r]).collect();
    LpOutcome::Optimal(LpSolution {
        objective: objval,
        x,
        multipliers,
    })
}

/// Gaussian elimination with partial pivoting; consumes its inputs.
fn solve_dense(m: &mut [Vec<f64>], rhs: &mut [f64]) -> Vec<f64> {
    let n = rhs.len();
    for k in 0..n {
        let piv = (k..n)
            .max_by(|&a, &b| m[a][k].abs().partial_cmp(&m[b][k].abs()).unwrap())
            .unwrap();
        m.swap(k, piv);
        rhs.swap(k, piv);
        let d = m[k][k];
        if d.abs() < 1e-300 {
            continue;
        }
        for r in (k + 1)..n {
            let f = m[r][k] / d;
            if f == 0.0 {
                continue;
            }
            for c in k..n {
                m[r][c] -= f * m[k][c];
            }
            rhs[r] -= f * rhs[k];
        }
    }
    let mut x = vec![0.0f64; n];
    for k in (0..n).rev() {
        let mut acc = rhs[k];
        for c in (k + 1)..n {
            acc -= m[k][c] * x[c];
        }
        x[k] = if m[k][k].abs() < 1e-300 { 0.0 } else { acc / m[k][k] };
    }
    x
}

#[cfg(test)]
mod tests {
    use super::*;

    fn expect_optimal(out: LpOutcome) -> LpSolution {
        match out {
            LpOutcome::Optimal(s) => s,
            other => panic!("expected optimal, got {other:?}"),
        }
    }

    fn check_primal_feasible(a: &[Vec<f64>], b: &[f64], x: &[f64]) {
        for (row, bi) in a.iter().zip(b) {
            let lhs: f64 = row.iter().zip(x).map(|(r, v)| r * v).sum();
            assert!((lhs - bi).abs() < 1e-9, "row violated: {lhs} vs {bi}");
        }
        assert!(x.iter().all(|v| *v >= -1e-9));
    }

    #[test]
    fn tiny_equality_program() {
        // min x0 + x1  s.t.  x0 + x1 = 1 -> objective 1
        let a = vec![vec![1.0, 1.0]];
        let s = expect_optimal(solve(&a, &[1.0], &[1.0, 1.0]));
        assert!((s.objective - 1.0).abs() < 1e-12);
        check_primal_feasible(&a, &[1.0], &s.x);
    }

    #[test]
    fn weighted_objective_picks_cheap_column() {
        // min 3 x0 + x1 : x0 + x1 = 2 -> x1 = 2
        let a = vec![vec![1.0, 1.0]];
        let s = expect_optimal(solve(&a, &[2.0], &[3.0, 1.0]));
        assert!((s.objective - 2.0).abs() < 1e-12);
        assert!((s.x[1] - 2.0).abs() < 1e-12);
    }

    #[test]
    fn negative_rhs_rows() {
        // min x0 + x1 : -x0 + x1 = -1  -> x0 = 1
        let a = vec![vec![-1.0, 1.0]];
        let s = expect_optimal(solve(&a, &[-1.0], &[1.0, 1.0]));
        assert!((s.objective - 1.0).abs() < 1e-12);
        assert!((s.x[0] - 1.0).abs() < 1e-12);
        check_primal_feasible(&a, &[-1.0], &s.x);
    }

    #[test]
    fn infeasible_detected() {
        // x0 = 1 and x0 = 2 cannot both hold
        let a = vec![vec![1.0], vec![1.0]];
        assert!(matches!(
            solve(&a, &[1.0, 2.0], &[1.0]),
            LpOutcome::Infeasible
        ));
    }

    #[test]
    fn unbounded_detected() {
        // min -x0 : x0 - x1 = 0 lets both grow without bound
        let a = vec![vec![1.0, -1.0]];
        assert!(matches!(
            solve(&a, &[0.0], &[-1.0, 0.0]),
            LpOutcome::Unbounded
        ));
    }

    #[test]
    fn redundant_row_is_tolerated() {
        // duplicated constraint
        let a = vec![vec![1.0, 1.0], vec![1.0, 1.0]];
        let s = expect_optimal(solve(&a, &[1.0, 1.0], &[1.0, 2.0]));
        assert!((s.objective - 1.0).abs() < 1e-12);
    }

    #[test]
    fn multipliers_certify_the_optimum() {
        // min sum of |y| representation: multipliers solve the dual
        // max y.b with |row dot y| <= cost; here check y.b == objective.
        let a = vec![vec![1.0, -1.0, 0.5], vec![0.0, 1.0, 1.0]];
        let b = [0.25, 0.75];
        let c = [1.0, 1.0, 1.0];
        let s = expect_optimal(solve(&a, &b, &c));
        let dual_val: f64 = s.multipliers.iter().zip(&b).map(|(y, bi)| y * bi).sum();
        assert!((dual_val - s.objective).abs() < 1e-9);
        // dual feasibility: |A^T y| <= c columnwise
        for j in 0..3 {
            let col: f64 = (0..2).map(|r| a[r][j] * s.multipliers[r]).sum();
            assert!(col <= c[j] + 1e-9);
        }
    }
}
