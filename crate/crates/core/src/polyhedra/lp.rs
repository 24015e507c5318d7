//! Dense two-phase simplex over exact rationals with Bland's pivoting rule.

use num_traits::{Signed, Zero};

use super::Rational;
use crate::error::{check_len, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sense {
    Le,
    Ge,
    Eq,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    Minimize,
    Maximize,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Constraint {
    pub coeffs: Vec<Rational>,
    pub sense: Sense,
    pub rhs: Rational,
}

/// `opt objective . x` subject to the constraints and `x >= lower_bounds`.
#[derive(Clone, Debug, PartialEq)]
pub struct LinearProgram {
    pub direction: Direction,
    pub objective: Vec<Rational>,
    pub constraints: Vec<Constraint>,
    pub lower_bounds: Vec<Rational>,
}

impl LinearProgram {
    /// A program with `x >= 0` and no constraints yet.
    pub fn new(direction: Direction, objective: Vec<Rational>) -> Self {
        let n = objective.len();
        LinearProgram {
            direction,
            objective,
            constraints: Vec::new(),
            lower_bounds: vec![Rational::zero(); n],
        }
    }

    pub fn num_vars(&self) -> usize {
        self.objective.len()
    }

    pub fn add_constraint(&mut self, coeffs: Vec<Rational>, sense: Sense, rhs: Rational) {
        self.constraints.push(Constraint { coeffs, sense, rhs });
    }

    fn validate(&self) -> Result<()> {
        let n = self.num_vars();
        check_len(n, self.lower_bounds.len())?;
        for c in &self.constraints {
            check_len(n, c.coeffs.len())?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct LpSolution {
    pub value: Rational,
    pub x: Vec<Rational>,
}

#[derive(Clone, Debug, PartialEq)]
pub enum LpOutcome {
    Optimal(LpSolution),
    Unbounded,
    Infeasible,
}

impl LpOutcome {
    pub fn optimal(self) -> Option<LpSolution> {
        match self {
            LpOutcome::Optimal(s) => Some(s),
            _ => None,
        }
    }
}

struct Tableau {
    rows: Vec<Vec<Rational>>,
    basis: Vec<usize>,
    ncols: usize,
}

impl Tableau {
    fn pivot(&mut self, r: usize, c: usize) {
        let mut prow = std::mem::take(&mut self.rows[r]);
        let p = prow[c].clone();
        for x in prow.iter_mut() {
            if !x.is_zero() {
                *x /= &p;
            }
        }
        for (i, row) in self.rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, y) in row.iter_mut().zip(&prow) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
        }
        self.rows[r] = prow;
        self.basis[r] = c;
    }

    /// Minimizes `cost . x` over the allowed columns. `false` means unbounded.
    fn optimize(&mut self, cost: &[Rational], allowed: &[bool]) -> bool {
        let m = self.rows.len();
        loop {
            let mut is_basic = vec![false; self.ncols];
            for &b in &self.basis {
                is_basic[b] = true;
            }
            // Bland: smallest index with negative reduced cost enters.
            let entering = (0..self.ncols).find(|&j| {
                if !allowed[j] || is_basic[j] {
                    return false;
                }
                let mut rc = cost[j].clone();
                for i in 0..m {
                    let a = &self.rows[i][j];
                    if !a.is_zero() && !cost[self.basis[i]].is_zero() {
                        rc -= &cost[self.basis[i]] * a;
                    }
                }
                rc.is_negative()
            });
            let Some(j) = entering else {
                return true;
            };
            let mut leave: Option<(usize, Rational)> = None;
            for i in 0..m {
                let a = &self.rows[i][j];
                if a.is_positive() {
                    let ratio = &self.rows[i][self.ncols] / a;
                    let better = match &leave {
                        None => true,
                        Some((r, best)) => ratio < *best || (ratio == *best && self.basis[i] < self.basis[*r]),
                    };
                    if better {
                        leave = Some((i, ratio));
                    }
                }
            }
            let Some((r, _)) = leave else {
                return false;
            };
            self.pivot(r, j);
        }
    }

    fn value(&self, cost: &[Rational]) -> Rational {
        self.basis
            .iter()
            .zip(&self.rows)
            .fold(Rational::zero(), |acc, (&b, row)| acc + &cost[b] * &row[self.ncols])
    }
}

/// Solves `lp` exactly. Deterministic: the same program always yields the
/// same basic optimal solution.
pub fn solve_lp_exact(lp: &LinearProgram) -> Result<LpOutcome> {
    lp.validate()?;
    let n = lp.num_vars();
    let m = lp.constraints.len();

    // Shift x = lb + x' and make every right-hand side non-negative.
    let mut norm: Vec<(Vec<Rational>, Sense, Rational)> = Vec::with_capacity(m);
    for c in &lp.constraints {
        let shift: Rational = c.coeffs.iter().zip(&lp.lower_bounds).map(|(a, l)| a * l).sum();
        let mut rhs = &c.rhs - shift;
        let mut coeffs = c.coeffs.clone();
        let mut sense = c.sense;
        if rhs.is_negative() {
            rhs = -rhs;
            coeffs.iter_mut().for_each(|a| *a = -a.clone());
            sense = match sense {
                Sense::Le => Sense::Ge,
                Sense::Ge => Sense::Le,
                Sense::Eq => Sense::Eq,
            };
        }
        norm.push((coeffs, sense, rhs));
    }

    let n_slack = norm.iter().filter(|r| r.1 != Sense::Eq).count();
    let n_art = norm.iter().filter(|r| r.1 != Sense::Le).count();
    let ncols = n + n_slack + n_art;
    let art_start = n + n_slack;

    let mut rows = Vec::with_capacity(m);
    let mut basis = Vec::with_capacity(m);
    let (mut s, mut a) = (n, art_start);
    for (coeffs, sense, rhs) in norm {
        let mut row = vec![Rational::zero(); ncols + 1];
        for (j, v) in coeffs.into_iter().enumerate() {
            row[j] = v;
        }
        row[ncols] = rhs;
        match sense {
            Sense::Le => {
                row[s] = Rational::from_integer(1.into());
                basis.push(s);
                s += 1;
            }
            Sense::Ge => {
                row[s] = Rational::from_integer((-1).into());
                s += 1;
                row[a] = Rational::from_integer(1.into());
                basis.push(a);
                a += 1;
            }
            Sense::Eq => {
                row[a] = Rational::from_integer(1.into());
                basis.push(a);
                a += 1;
            }
        }
        rows.push(row);
    }
    let mut t = Tableau { rows, basis, ncols };

    if n_art > 0 {
        let mut cost = vec![Rational::zero(); ncols];
        for c in cost.iter_mut().skip(art_start) {
            *c = Rational::from_integer(1.into());
        }
        let allowed = vec![true; ncols];
        t.optimize(&cost, &allowed);
        if t.value(&cost).is_positive() {
            return Ok(LpOutcome::Infeasible);
        }
        // Drive zero-level artificials out of the basis; drop redundant rows.
        let mut r = 0;
        while r < t.rows.len() {
            if t.basis[r] >= art_start {
                match (0..art_start).find(|&j| !t.rows[r][j].is_zero()) {
                    Some(j) => {
                        t.pivot(r, j);
                        r += 1;
                    }
                    None => {
                        t.rows.remove(r);
                        t.basis.remove(r);
                    }
                }
            } else {
                r += 1;
            }
        }
    }

    let mut cost = vec![Rational::zero(); ncols];
    for (j, c) in lp.objective.iter().enumerate() {
        cost[j] = match lp.direction {
            Direction::Minimize => c.clone(),
            Direction::Maximize => -c.clone(),
        };
    }
    let allowed: Vec<bool> = (0..ncols).map(|j| j < art_start).collect();
    if !t.optimize(&cost, &allowed) {
        return Ok(LpOutcome::Unbounded);
    }
    let mut x = lp.lower_bounds.clone();
    for (row, &b) in t.rows.iter().zip(&t.basis) {
        if b < n {
            x[b] += &row[ncols];
        }
    }
    let value = lp.objective.iter().zip(&x).map(|(c, v)| c * v).sum();
    Ok(LpOutcome::Optimal(LpSolution { value, x }))
}
