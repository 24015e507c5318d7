//! Hilbert basis of the Rees cone by a placing triangulation, lattice points
//! of the fundamental parallelepipeds, and an irreducibility sieve.

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};

use super::intmat::{adjugate, det, gcd, normal};
use super::membership::in_power;
use super::{rees_cone, ReesCone, ReesLimits};
use crate::clutter::{Clutter, ExponentVector};
use crate::error::{check_limit, Result};

/// The minimal generating set of `Z^{n+1} ∩ R_+ A'`, sorted by degree and
/// then lexicographically.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertBasis {
    pub elements: Vec<Vec<i64>>,
    /// Primitive inward normals of the cone's facets.
    pub facets: Vec<Vec<i128>>,
    pub simplices: usize,
}

impl HilbertBasis {
    pub fn contains_point(&self, x: &[i64]) -> bool {
        in_cone(&self.facets, x)
    }
}

fn dot(a: &[i128], x: &[i64]) -> i128 {
    a.iter().zip(x).map(|(&u, &v)| u * v as i128).sum()
}

fn in_cone(facets: &[Vec<i128>], x: &[i64]) -> bool {
    facets.iter().all(|f| dot(f, x) >= 0)
}

fn primitive(v: Vec<i128>) -> Vec<i128> {
    let g = v.iter().fold(0, |a, &b| gcd(a, b));
    if g <= 1 {
        v
    } else {
        v.into_iter().map(|x| x / g).collect()
    }
}

struct Triangulation {
    simplices: Vec<Vec<usize>>,
    facets: Vec<Vec<i128>>,
}

/// Placing triangulation: start from `e_1..e_n` and the first edge, then
/// place each further generator over every boundary facet it strictly sees.
fn triangulate(cone: &ReesCone) -> Triangulation {
    let (n, q) = (cone.n(), cone.q());
    let g = cone.generators();
    let oriented = |facet: &[usize], opposite: usize| -> Vec<i128> {
        let vs: Vec<&[i64]> = facet.iter().map(|&i| g[i].as_slice()).collect();
        let nrm = normal(&vs);
        if dot(&nrm, &g[opposite]) < 0 {
            nrm.into_iter().map(|x| -x).collect()
        } else {
            nrm
        }
    };

    let mut first: Vec<usize> = (q..q + n).collect();
    first.insert(0, 0);
    let mut boundary: HashMap<Vec<usize>, Vec<i128>> = HashMap::new();
    for k in 0..first.len() {
        let mut f = first.clone();
        let opp = f.remove(k);
        let nrm = oriented(&f, opp);
        boundary.insert(f, nrm);
    }
    let mut simplices = vec![first];

    for p in 1..q {
        let mut visible: Vec<Vec<usize>> =
            boundary.iter().filter(|(_, nrm)| dot(nrm, &g[p]) < 0).map(|(f, _)| f.clone()).collect();
        visible.sort();
        let mut fresh: HashMap<Vec<usize>, Vec<i128>> = HashMap::new();
        for f in visible {
            boundary.remove(&f);
            for k in 0..f.len() {
                let mut ridge = f.clone();
                let opp = ridge.remove(k);
                ridge.push(p);
                ridge.sort();
                if fresh.remove(&ridge).is_none() {
                    let nrm = oriented(&ridge, opp);
                    fresh.insert(ridge, nrm);
                }
            }
            let mut s = f;
            s.push(p);
            s.sort();
            simplices.push(s);
        }
        boundary.extend(fresh);
    }

    let facets: BTreeSet<Vec<i128>> = boundary.into_values().map(primitive).collect();
    Triangulation { simplices, facets: facets.into_iter().collect() }
}

/// Nonzero lattice points `sum lambda_i g_i`, `0 <= lambda_i < 1`, found by
/// walking the group `Z^d / G Z^d` from the images of the unit vectors.
fn parallelepiped_points(g: &[Vec<i64>], simplex: &[usize]) -> Vec<Vec<i64>> {
    let d = simplex.len();
    let m: Vec<Vec<i128>> = (0..d).map(|r| simplex.iter().map(|&j| g[j][r] as i128).collect()).collect();
    let det_m = det(m.clone());
    debug_assert!(det_m != 0);
    let vol = det_m.abs();
    if vol == 1 {
        return Vec::new();
    }
    let adj = adjugate(&m);
    let sign = det_m.signum();
    let steps: Vec<Vec<i128>> =
        (0..d).map(|k| (0..d).map(|i| (sign * adj[i][k]).rem_euclid(vol)).collect()).collect();
    let zero = vec![0i128; d];
    let mut seen: HashSet<Vec<i128>> = HashSet::from([zero.clone()]);
    let mut queue = VecDeque::from([zero]);
    let mut out = Vec::new();
    while let Some(cur) = queue.pop_front() {
        for s in &steps {
            let next: Vec<i128> = cur.iter().zip(s).map(|(a, b)| (a + b) % vol).collect();
            if seen.insert(next.clone()) {
                let point: Vec<i64> = (0..d)
                    .map(|r| {
                        let num: i128 = next.iter().zip(simplex).map(|(&l, &j)| l * g[j][r] as i128).sum();
                        debug_assert_eq!(num % vol, 0);
                        (num / vol) as i64
                    })
                    .collect();
                out.push(point);
                queue.push_back(next);
            }
        }
    }
    out
}

pub fn hilbert_basis(cone: &ReesCone, limits: ReesLimits) -> Result<HilbertBasis> {
    check_limit("Hilbert basis vertices", cone.n(), limits.max_vertices)?;
    check_limit("Hilbert basis edges", cone.q(), limits.max_edges)?;
    let g = cone.generators();
    if cone.q() == 0 {
        let n = cone.n();
        let mut facets: Vec<Vec<i128>> = (0..n)
            .map(|i| (0..=n).map(|j| (i == j) as i128).collect())
            .collect();
        // degree coordinate pinned to zero
        let mut up = vec![0; n + 1];
        up[n] = 1;
        facets.push(up.iter().map(|x| -x).collect());
        facets.push(up);
        let mut elements = g.to_vec();
        sort_basis(&mut elements);
        return Ok(HilbertBasis { elements, facets, simplices: 0 });
    }

    let tri = triangulate(cone);
    let mut candidates: BTreeSet<Vec<i64>> = g.iter().cloned().collect();
    for s in &tri.simplices {
        candidates.extend(parallelepiped_points(g, s));
    }
    let mut ordered: Vec<Vec<i64>> = candidates.into_iter().collect();
    ordered.sort_by_key(|x| x.iter().sum::<i64>());

    // A reducible x splits as h + z with h irreducible and h <= x, so it
    // suffices to test against basis elements accepted so far.
    let mut basis: Vec<Vec<i64>> = Vec::new();
    for x in ordered {
        let reducible = basis.iter().any(|h| {
            h.iter().zip(&x).all(|(a, b)| a <= b) && {
                let diff: Vec<i64> = x.iter().zip(h).map(|(a, b)| a - b).collect();
                in_cone(&tri.facets, &diff)
            }
        });
        if !reducible {
            basis.push(x);
        }
    }
    sort_basis(&mut basis);
    Ok(HilbertBasis { elements: basis, facets: tri.facets, simplices: tri.simplices.len() })
}

fn sort_basis(v: &mut [Vec<i64>]) {
    v.sort_by(|a, b| (a.last(), a).cmp(&(b.last(), b)));
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalVerdict {
    pub normal: bool,
    /// `(a, b)` with `x^a t^b` in the integral closure of `I^b` but not in `I^b`.
    pub witness: Option<(ExponentVector, u32)>,
    pub basis: HilbertBasis,
}

/// Normal iff every Hilbert basis element lies in the semigroup `N A'`. The
/// witness is the first offending basis element.
pub fn is_normal(c: &Clutter, limits: ReesLimits) -> Result<NormalVerdict> {
    let basis = hilbert_basis(&rees_cone(c), limits)?;
    let n = c.n();
    let witness = basis
        .elements
        .iter()
        .map(|h| {
            let a: Vec<u32> = h[..n].iter().map(|&x| x as u32).collect();
            (ExponentVector(a), h[n] as u32)
        })
        .find(|(a, b)| !in_power(c.edges(), a, *b));
    Ok(NormalVerdict { normal: witness.is_none(), witness, basis })
}
