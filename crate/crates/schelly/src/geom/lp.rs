//! Exact linear feasibility over the rationals.
//!
//! Phase-1 simplex with Bland's rule on equality systems with
//! non-negative variables. All arithmetic is exact; verdicts at touching
//! boundaries are reliable, which the semintersecting checks depend on.

use num::{BigRational, Signed, Zero};

use crate::error::{Error, Result};

pub type Rat = BigRational;

/// An equality system `A x = b`, `x ≥ 0`, to be tested for feasibility.
pub struct Feasibility {
    n_vars: usize,
    rows: Vec<(Vec<Rat>, Rat)>,
}

impl Feasibility {
    pub fn new(n_vars: usize) -> Self {
        Feasibility {
            n_vars,
            rows: Vec::new(),
        }
    }

    pub fn add_eq(&mut self, coeffs: Vec<Rat>, rhs: Rat) -> Result<()> {
        if coeffs.len() != self.n_vars {
            return Err(Error::DimensionMismatch {
                expected: self.n_vars,
                got: coeffs.len(),
            });
        }
        self.rows.push((coeffs, rhs));
        Ok(())
    }

    /// Returns a feasible point, or None when the system is infeasible.
    #[allow(clippy::needless_range_loop)]
    pub fn solve(&self) -> Option<Vec<Rat>> {
        let n = self.n_vars;
        let m = self.rows.len();
        if m == 0 {
            return Some(vec![Rat::zero(); n]);
        }

        // working copies with b >= 0
        let mut a: Vec<Vec<Rat>> = Vec::with_capacity(m);
        let mut b: Vec<Rat> = Vec::with_capacity(m);
        for (coeffs, rhs) in &self.rows {
            if rhs.is_negative() {
                a.push(coeffs.iter().map(|c| -c).collect());
                b.push(-rhs);
            } else {
                a.push(coeffs.clone());
                b.push(rhs.clone());
            }
        }

        // phase-1 objective: minimize the sum of artificials; with the
        // artificial basis the reduced cost of column j is the column sum
        let mut cost: Vec<Rat> = (0..n)
            .map(|j| a.iter().map(|row| &row[j]).sum())
            .collect();
        let mut obj: Rat = b.iter().sum();
        // basis[i] = variable of row i; artificials are n..n+m
        let mut basis: Vec<usize> = (n..n + m).collect();

        // Bland: entering = smallest original column with positive reduced cost
        while let Some(enter) = (0..n).find(|&j| cost[j].is_positive()) {
            // ratio test; ties broken by smallest basis variable (Bland)
            let mut leave: Option<usize> = None;
            let mut best: Option<Rat> = None;
            for i in 0..m {
                if a[i][enter].is_positive() {
                    let ratio = &b[i] / &a[i][enter];
                    let better = match &best {
                        None => true,
                        Some(r) => {
                            ratio < *r
                                || (ratio == *r
                                    && basis[i] < basis[leave.expect("best set with leave")])
                        }
                    };
                    if better {
                        best = Some(ratio);
                        leave = Some(i);
                    }
                }
            }
            let Some(r) = leave else {
                // a positive reduced cost with no blocking row cannot occur
                // in phase 1 (the objective is bounded below by zero)
                debug_assert!(false, "unbounded phase-1 direction");
                return None;
            };

            // pivot on (r, enter)
            let pivot = a[r][enter].clone();
            for x in a[r].iter_mut() {
                *x = &*x / &pivot;
            }
            b[r] = &b[r] / &pivot;
            for i in 0..m {
                if i != r && !a[i][enter].is_zero() {
                    let f = a[i][enter].clone();
                    for j in 0..n {
                        let delta = &f * &a[r][j];
                        a[i][j] = &a[i][j] - &delta;
                    }
                    let delta = &f * &b[r];
                    b[i] = &b[i] - &delta;
                }
            }
            if !cost[enter].is_zero() {
                let f = cost[enter].clone();
                for j in 0..n {
                    let delta = &f * &a[r][j];
                    cost[j] = &cost[j] - &delta;
                }
                let delta = &f * &b[r];
                obj = &obj - &delta;
            }
            basis[r] = enter;
        }

        if !obj.is_zero() {
            return None;
        }
        let mut x = vec![Rat::zero(); n];
        for i in 0..m {
            if basis[i] < n {
                x[basis[i]] = b[i].clone();
            }
        }
        Some(x)
    }
}
