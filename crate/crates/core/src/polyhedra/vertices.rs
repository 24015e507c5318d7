//! Vertices of the set covering polyhedron `Q(A) = {x >= 0 : xA >= 1}`.

use std::collections::BTreeSet;

use itertools::Itertools;
use num_traits::{One, Signed, Zero};

use super::{int, Rational};
use crate::clutter::{Clutter, VertexSet};
use crate::covering::minimal_vertex_covers;
use crate::error::{check_limit, Result};

/// Default vertex limit for [`enumerate_q_vertices`].
pub const DEFAULT_VERTEX_LIMIT: usize = 12;

/// Cap on the number of candidate bases examined.
pub const MAX_BASES: usize = 20_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyhedronVertexSet {
    pub vertices: Vec<Vec<Rational>>,
}

impl PolyhedronVertexSet {
    pub fn is_integral(v: &[Rational]) -> bool {
        v.iter().all(|x| x.is_integer())
    }

    pub fn integrality(&self) -> Vec<bool> {
        self.vertices.iter().map(|v| Self::is_integral(v)).collect()
    }

    pub fn fractional(&self) -> impl Iterator<Item = &Vec<Rational>> {
        self.vertices.iter().filter(|v| !Self::is_integral(v))
    }
}

/// All vertices of `Q(A)`, sorted lexicographically.
///
/// A vertex has some zero coordinates `Z` and is the unique solution of
/// `|S|` tight edge constraints restricted to the support `S = V \ Z`, so
/// every zero set and every choice of `|S|` edges is tried.
pub fn enumerate_q_vertices(c: &Clutter, limit: usize) -> Result<PolyhedronVertexSet> {
    let n = c.n();
    check_limit("Q(A) vertex enumeration", n, limit)?;
    let q = c.q();
    let bases: u128 = (0..=n).map(|k| binom(n, k) * binom(q, k)).sum();
    check_limit("Q(A) candidate bases", bases.min(usize::MAX as u128) as usize, MAX_BASES)?;

    let mut found: BTreeSet<Vec<Rational>> = BTreeSet::new();
    for support_bits in 0u128..(1u128 << n) {
        let support = VertexSet::from_bits(support_bits);
        let cols = support.to_vec();
        let k = cols.len();
        for rows in (0..q).combinations(k) {
            let m: Vec<Vec<Rational>> = rows
                .iter()
                .map(|&j| cols.iter().map(|&i| int(c.edges()[j].contains(i) as i64)).collect())
                .collect();
            let Some(sol) = solve_square(m, vec![Rational::one(); k]) else {
                continue;
            };
            let mut x = vec![Rational::zero(); n];
            for (&i, v) in cols.iter().zip(sol) {
                x[i] = v;
            }
            if is_feasible(c, &x) {
                found.insert(x);
            }
        }
    }
    Ok(PolyhedronVertexSet { vertices: found.into_iter().collect() })
}

pub(crate) fn is_feasible(c: &Clutter, x: &[Rational]) -> bool {
    x.iter().all(|v| !v.is_negative())
        && c.edges().iter().all(|e| e.iter().map(|i| &x[i]).sum::<Rational>() >= Rational::one())
}

fn binom(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

/// Gaussian elimination; `None` when singular.
pub(crate) fn solve_square(mut m: Vec<Vec<Rational>>, mut b: Vec<Rational>) -> Option<Vec<Rational>> {
    let k = m.len();
    for col in 0..k {
        let piv = (col..k).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, piv);
        b.swap(col, piv);
        let p = m[col][col].clone();
        for x in m[col].iter_mut() {
            *x /= &p;
        }
        b[col] /= &p;
        for r in 0..k {
            if r != col && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                let (pivot_row, bc) = (m[col].clone(), b[col].clone());
                for (x, y) in m[r].iter_mut().zip(&pivot_row) {
                    *x -= &f * y;
                }
                b[r] -= &f * &bc;
            }
        }
    }
    Some(b)
}

/// Verdict for [`is_ideal_clutter`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealVerdict {
    pub ideal: bool,
    /// First fractional vertex in lexicographic order.
    pub witness: Option<Vec<Rational>>,
    /// Integral vertices coincide with the minimal-cover characteristic vectors.
    pub covers_match: bool,
    pub vertices: PolyhedronVertexSet,
}

/// Whether `Q(A)` is integral.
pub fn is_ideal_clutter(c: &Clutter, limit: usize) -> Result<IdealVerdict> {
    let vertices = enumerate_q_vertices(c, limit)?;
    let integral: BTreeSet<Vec<Rational>> =
        vertices.vertices.iter().filter(|v| PolyhedronVertexSet::is_integral(v)).cloned().collect();
    let covers: BTreeSet<Vec<Rational>> = minimal_vertex_covers(c)
        .covers()
        .iter()
        .map(|s| (0..c.n()).map(|i| int(s.contains(i) as i64)).collect())
        .collect();
    let covers_match = integral == covers;
    debug_assert!(covers_match, "integral vertices of Q(A) must be the minimal covers");
    let witness = vertices.fractional().next().cloned();
    Ok(IdealVerdict { ideal: witness.is_none(), witness, covers_match, vertices })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyhedra::ratio;
    use crate::transform::parallelization;

    fn v(xs: &[i64]) -> Vec<Rational> {
        xs.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn single_edge_vertices() {
        let e = Clutter::from_index_edges(2, &[&[0, 1]]).unwrap();
        let vs = enumerate_q_vertices(&e, DEFAULT_VERTEX_LIMIT).unwrap();
        assert_eq!(vs.vertices, vec![v(&[0, 1]), v(&[1, 0])]);
        assert!(is_ideal_clutter(&e, DEFAULT_VERTEX_LIMIT).unwrap().ideal);
    }

    #[test]
    fn triangle_vertices() {
        let t = Clutter::from_index_edges(3, &[&[0, 1], &[1, 2], &[0, 2]]).unwrap();
        let vs = enumerate_q_vertices(&t, DEFAULT_VERTEX_LIMIT).unwrap();
        let half = vec![ratio(1, 2); 3];
        assert!(vs.vertices.contains(&half));
        for cov in [v(&[1, 1, 0]), v(&[1, 0, 1]), v(&[0, 1, 1])] {
            assert!(vs.vertices.contains(&cov));
        }
        assert_eq!(vs.vertices.len(), 4);
        let verdict = is_ideal_clutter(&t, DEFAULT_VERTEX_LIMIT).unwrap();
        assert!(!verdict.ideal);
        assert_eq!(verdict.witness, Some(half));
        assert!(verdict.covers_match);
    }

    #[test]
    fn k33_is_ideal() {
        let e = Clutter::from_index_edges(2, &[&[0, 1]]).unwrap();
        let k33 = parallelization(&e, &[3, 3]).unwrap();
        let verdict = is_ideal_clutter(&k33, DEFAULT_VERTEX_LIMIT).unwrap();
        assert!(verdict.ideal);
        assert_eq!(verdict.vertices.vertices.len(), 2);
    }

    #[test]
    fn every_vertex_is_a_basic_feasible_point() {
        let c = Clutter::from_index_edges(5, &[&[0, 1], &[1, 2], &[2, 3], &[3, 4], &[0, 4]]).unwrap();
        let vs = enumerate_q_vertices(&c, DEFAULT_VERTEX_LIMIT).unwrap();
        for x in &vs.vertices {
            assert!(is_feasible(&c, x));
            // tight rows: zero coordinates and edges summing to 1
            let mut tight: Vec<Vec<Rational>> = Vec::new();
            for i in 0..c.n() {
                if x[i].is_zero() {
                    let mut r = vec![int(0); c.n()];
                    r[i] = int(1);
                    tight.push(r);
                }
            }
            for e in c.edges() {
                if e.iter().map(|i| &x[i]).sum::<Rational>() == int(1) {
                    tight.push((0..c.n()).map(|i| int(e.contains(i) as i64)).collect());
                }
            }
            assert_eq!(rank(tight), c.n(), "{x:?}");
        }
        assert!(vs.vertices.contains(&vec![ratio(1, 2); 5]));
    }

    fn rank(mut m: Vec<Vec<Rational>>) -> usize {
        let cols = m.first().map_or(0, |r| r.len());
        let mut r = 0;
        for c in 0..cols {
            let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else { continue };
            m.swap(r, p);
            for i in r + 1..m.len() {
                let f = &m[i][c] / &m[r][c];
                let pr = m[r].clone();
                for (x, y) in m[i].iter_mut().zip(&pr) {
                    *x -= &f * y;
                }
            }
            r += 1;
        }
        r
    }

    #[test]
    fn limit_is_enforced() {
        let big = Clutter::from_index_edges(13, &[&(0..13).collect::<Vec<_>>()]).unwrap();
        assert!(enumerate_q_vertices(&big, DEFAULT_VERTEX_LIMIT).is_err());
    }
}
