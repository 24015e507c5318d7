//! Integer covering and packing programs by branch-and-bound on the exact
//! LP relaxation.

use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use super::lp::{solve_lp_exact, Direction, LinearProgram, LpOutcome, Sense};
use super::{int, Rational};
use crate::clutter::Clutter;
use crate::error::{check_len, check_limit, Result};

/// Size limit (vertices and edges) for the integer programs.
pub const ILP_LIMIT: usize = 256;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegerSolution {
    pub value: u64,
    pub x: Vec<u64>,
}

/// `min <w, x>` over `x in N^n` with `xA >= 1`.
pub fn solve_covering_ilp(c: &Clutter, w: &[u32]) -> Result<IntegerSolution> {
    check_len(c.n(), w.len())?;
    check_limit("covering ILP vertices", c.n(), ILP_LIMIT)?;
    check_limit("covering ILP edges", c.q(), ILP_LIMIT)?;
    let mut lp = LinearProgram::new(Direction::Minimize, w.iter().map(|&x| int(x as i64)).collect());
    for e in c.edges() {
        let row = (0..c.n()).map(|i| int(e.contains(i) as i64)).collect();
        lp.add_constraint(row, Sense::Ge, int(1));
    }
    Ok(branch_and_bound(lp).expect("covering program is feasible and bounded"))
}

/// `max <y, 1>` over `y in N^q` with `Ay <= w`.
pub fn solve_packing_ilp(c: &Clutter, w: &[u32]) -> Result<IntegerSolution> {
    check_len(c.n(), w.len())?;
    check_limit("packing ILP vertices", c.n(), ILP_LIMIT)?;
    check_limit("packing ILP edges", c.q(), ILP_LIMIT)?;
    let mut lp = LinearProgram::new(Direction::Maximize, vec![int(1); c.q()]);
    for (i, &wi) in w.iter().enumerate() {
        let row = c.edges().iter().map(|e| int(e.contains(i) as i64)).collect();
        lp.add_constraint(row, Sense::Le, int(wi as i64));
    }
    Ok(branch_and_bound(lp).expect("packing program is feasible and bounded"))
}

/// Pure integer program with integral objective. Branches on the smallest
/// fractional index, down branch first.
fn branch_and_bound(lp: LinearProgram) -> Option<IntegerSolution> {
    debug_assert!(lp.objective.iter().all(|c| c.is_integer()));
    let mut best: Option<(Rational, Vec<Rational>)> = None;
    let mut stack = vec![lp];
    while let Some(node) = stack.pop() {
        let sol = match solve_lp_exact(&node).expect("well-formed program") {
            LpOutcome::Optimal(s) => s,
            LpOutcome::Infeasible => continue,
            LpOutcome::Unbounded => panic!("integer program relaxation is unbounded"),
        };
        if let Some((bv, _)) = &best {
            let prune = match node.direction {
                Direction::Minimize => sol.value.ceil() >= *bv,
                Direction::Maximize => sol.value.floor() <= *bv,
            };
            if prune {
                continue;
            }
        }
        match sol.x.iter().position(|v| !v.is_integer()) {
            None => best = Some((sol.value, sol.x)),
            Some(j) => {
                let v = &sol.x[j];
                let mut up = node.clone();
                up.lower_bounds[j] = v.ceil();
                let mut down = node;
                let mut row = vec![Rational::zero(); down.num_vars()];
                row[j] = int(1);
                down.add_constraint(row, Sense::Le, v.floor());
                // LIFO: push `up` first so `down` is explored first.
                stack.push(up);
                stack.push(down);
            }
        }
    }
    best.map(|(v, x)| IntegerSolution {
        value: to_u64(&v),
        x: x.iter().map(to_u64).collect(),
    })
}

fn to_u64(r: &Rational) -> u64 {
    debug_assert!(r.is_integer());
    let (q, _) = r.numer().div_rem(r.denom());
    q.to_u64().expect("non-negative integer value")
}

#[cfg(test)]
pub(crate) mod oracle {
    use crate::clutter::Clutter;

    /// Exhaustive `min <w,x>` over `x in {0,1}^n` covering every edge.
    pub fn brute_covering(c: &Clutter, w: &[u32]) -> u64 {
        (0u32..1 << c.n())
            .filter(|m| c.edges().iter().all(|e| e.iter().any(|i| m >> i & 1 == 1)))
            .map(|m| (0..c.n()).filter(|i| m >> i & 1 == 1).map(|i| w[i] as u64).sum())
            .min()
            .unwrap_or(0)
    }

    /// Exhaustive `max <y,1>` over `y in {0..=max w}^q` with `Ay <= w`.
    pub fn brute_packing(c: &Clutter, w: &[u32]) -> u64 {
        let q = c.q();
        let top = w.iter().copied().max().unwrap_or(0) as usize + 1;
        let total = top.pow(q as u32);
        let mut best = 0;
        for code in 0..total {
            let mut y = vec![0u32; q];
            let mut x = code;
            for v in y.iter_mut() {
                *v = (x % top) as u32;
                x /= top;
            }
            let ok = (0..c.n()).all(|i| {
                c.edges().iter().zip(&y).filter(|(e, _)| e.contains(i)).map(|(_, &v)| v).sum::<u32>() <= w[i]
            });
            if ok {
                best = best.max(y.iter().map(|&v| v as u64).sum());
            }
        }
        best
    }
}
