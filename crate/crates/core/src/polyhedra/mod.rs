//! Exact LP/ILP and the set covering polyhedron `Q(A)`.

pub mod ilp;
pub mod lp;
pub mod mfmc;
pub mod vertices;

use num_bigint::BigInt;
use num_rational::BigRational;

pub use ilp::{solve_covering_ilp, solve_packing_ilp, IntegerSolution};
pub use lp::{solve_lp_exact, Constraint, Direction, LinearProgram, LpOutcome, LpSolution, Sense};
pub use mfmc::{max_packing, mfmc_bounded, MfmcVerdict};
pub use vertices::{enumerate_q_vertices, is_ideal_clutter, IdealVerdict, PolyhedronVertexSet};

use crate::clutter::Clutter;
use crate::error::{check_len, Result};

pub type Rational = BigRational;

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

pub fn ratio(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// Renders `p/q`, or `p` for integers.
pub fn format_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// `min { <w,x> : x >= 0, xA >= 1 }`.
pub fn fractional_cover_value(c: &Clutter, w: &[u32]) -> Result<Rational> {
    check_len(c.n(), w.len())?;
    let mut lp = LinearProgram::new(Direction::Minimize, w.iter().map(|&x| int(x as i64)).collect());
    for e in c.edges() {
        lp.add_constraint((0..c.n()).map(|i| int(e.contains(i) as i64)).collect(), Sense::Ge, int(1));
    }
    Ok(solve_lp_exact(&lp)?.optimal().map(|s| s.value).unwrap_or_else(|| int(0)))
}

/// `max { <y,1> : y >= 0, Ay <= w }`.
pub fn fractional_packing_value(c: &Clutter, w: &[u32]) -> Result<Rational> {
    check_len(c.n(), w.len())?;
    let mut lp = LinearProgram::new(Direction::Maximize, vec![int(1); c.q()]);
    for (i, &wi) in w.iter().enumerate() {
        lp.add_constraint(c.edges().iter().map(|e| int(e.contains(i) as i64)).collect(), Sense::Le, int(wi as i64));
    }
    Ok(solve_lp_exact(&lp)?.optimal().expect("packing LP is feasible and bounded").value)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::covering::{covering_number, matching_number};

    #[test]
    fn duality_and_sandwich() {
        let cases = [
            Clutter::from_index_edges(3, &[&[0, 1], &[1, 2], &[0, 2]]).unwrap(),
            Clutter::from_index_edges(5, &[&[0, 1], &[1, 2], &[2, 3], &[3, 4], &[0, 4]]).unwrap(),
            Clutter::from_index_edges(4, &[&[0, 1, 2], &[2, 3], &[0, 3]]).unwrap(),
        ];
        for c in &cases {
            for w in [vec![1; c.n()], (0..c.n() as u32).map(|i| i % 3).collect()] {
                let primal = fractional_cover_value(c, &w).unwrap();
                let dual = fractional_packing_value(c, &w).unwrap();
                assert_eq!(primal, dual);
                let pack = solve_packing_ilp(c, &w).unwrap().value;
                let cover = solve_covering_ilp(c, &w).unwrap().value;
                assert!(int(pack as i64) <= dual && primal <= int(cover as i64));
            }
            let lp = fractional_cover_value(c, &vec![1; c.n()]).unwrap();
            assert!(int(matching_number(c) as i64) <= lp && lp <= int(covering_number(c) as i64));
        }
        assert_eq!(fractional_cover_value(&cases[0], &[1, 1, 1]).unwrap(), ratio(3, 2));
        let e = Clutter::from_index_edges(2, &[&[0, 1]]).unwrap();
        assert_eq!(fractional_cover_value(&e, &[3, 3]).unwrap(), int(3));
    }

    #[test]
    fn rational_formatting() {
        assert_eq!(format_rational(&ratio(1, 2)), "1/2");
        assert_eq!(format_rational(&ratio(4, 2)), "2");
        assert_eq!(format_rational(&ratio(-3, 6)), "-1/2");
    }
}
