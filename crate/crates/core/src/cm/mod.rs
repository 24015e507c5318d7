//! Cohen–Macaulay test for `R/I(C)` through the independence complex.

mod homology;

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

pub use homology::{reduced_homology, Field, HomologyProfile, MAX_FACES};

use crate::clutter::{Clutter, VertexSet};
use crate::covering::minimal_vertex_covers;
use crate::error::{check_limit, Result};

/// Default vertex limit for [`independence_complex`] and [`is_cohen_macaulay`].
pub const DEFAULT_CM_LIMIT: usize = 16;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    n: usize,
    facets: Vec<VertexSet>,
}

impl SimplicialComplex {
    /// Keeps the inclusion-maximal sets as facets.
    pub fn new(n: usize, sets: Vec<VertexSet>) -> Self {
        let mut facets: Vec<VertexSet> = sets
            .iter()
            .copied()
            .filter(|s| !sets.iter().any(|t| t != s && s.is_subset(*t)))
            .collect();
        facets.sort();
        facets.dedup();
        SimplicialComplex { n, facets }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn facets(&self) -> &[VertexSet] {
        &self.facets
    }

    pub fn dim(&self) -> i32 {
        self.facets.iter().map(|f| f.len() as i32).max().unwrap_or(0) - 1
    }

    pub fn is_pure(&self) -> bool {
        self.facets.windows(2).all(|p| p[0].len() == p[1].len())
    }

    pub fn contains_face(&self, f: VertexSet) -> bool {
        self.facets.iter().any(|g| f.is_subset(*g))
    }

    /// `{ G \ F : F ⊆ G facet }`.
    pub fn link(&self, f: VertexSet) -> SimplicialComplex {
        let sets = self.facets.iter().filter(|g| f.is_subset(**g)).map(|g| g.difference(f)).collect();
        SimplicialComplex::new(self.n, sets)
    }

    /// A vertex lying in every facet makes the complex a cone.
    pub fn cone_vertex(&self) -> Option<usize> {
        let common = self.facets.iter().fold(VertexSet::full(self.n), |a, &g| a.intersection(g));
        if self.facets.is_empty() {
            None
        } else {
            common.first()
        }
    }

    /// Connected components of the underlying graph.
    pub fn components(&self) -> usize {
        let mut comps: Vec<VertexSet> = Vec::new();
        for &g in &self.facets {
            let (touching, rest): (Vec<VertexSet>, Vec<VertexSet>) = comps.into_iter().partition(|c| c.intersects(g));
            comps = rest;
            comps.push(touching.into_iter().fold(g, |a, b| a.union(b)));
        }
        comps.len()
    }

    /// All faces grouped by size (index 0 holds the empty face), each group
    /// in lexicographic order.
    pub fn faces_by_size(&self, limit: usize) -> Result<Vec<Vec<VertexSet>>> {
        let mut seen: HashSet<VertexSet> = HashSet::new();
        for &g in &self.facets {
            check_limit("simplicial complex faces", 1usize.checked_shl(g.len() as u32).unwrap_or(usize::MAX), limit)?;
            let members = g.to_vec();
            for mask in 0u64..1 << members.len() {
                let f: VertexSet =
                    members.iter().enumerate().filter(|(b, _)| mask >> b & 1 == 1).map(|(_, &v)| v).collect();
                seen.insert(f);
            }
            check_limit("simplicial complex faces", seen.len(), limit)?;
        }
        let top = self.facets.iter().map(|f| f.len()).max().unwrap_or(0);
        let mut out = vec![Vec::new(); top + 1];
        for f in seen {
            out[f.len()].push(f);
        }
        out.iter_mut().for_each(|v| v.sort_unstable());
        Ok(out)
    }
}

/// Faces are the vertex sets containing no edge; the facets are the
/// complements of the minimal vertex covers.
pub fn independence_complex(c: &Clutter, limit: usize) -> Result<SimplicialComplex> {
    check_limit("independence complex vertices", c.n(), limit)?;
    let all = VertexSet::full(c.n());
    let facets = minimal_vertex_covers(c).covers().iter().map(|cv| all.difference(*cv)).collect();
    Ok(SimplicialComplex::new(c.n(), facets))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum CmWitness {
    /// Two minimal vertex covers of different sizes.
    Mixed { covers: [Vec<String>; 2] },
    /// `H~_dim(lk face) = betti != 0` below the dimension of the link.
    Link { face: Vec<String>, dim: i32, betti: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CmVerdict {
    pub cm: bool,
    pub field: Field,
    pub witness: Option<CmWitness>,
    /// Links whose homology was computed (cones are skipped).
    pub links_checked: usize,
}

/// Reisner's criterion: every link `lk F` has vanishing reduced homology
/// below its dimension. Faces are scanned by size, then lexicographically.
pub fn is_cohen_macaulay(c: &Clutter, field: Field, limit: usize) -> Result<CmVerdict> {
    check_limit("Cohen-Macaulay check vertices", c.n(), limit)?;
    let covers = minimal_vertex_covers(c);
    let names = |s: VertexSet| s.iter().map(|i| c.label(i).to_string()).collect::<Vec<_>>();
    if !covers.is_unmixed() {
        let small = covers.covers().iter().min_by_key(|s| (s.len(), **s)).copied().expect("covers exist");
        let large = covers.covers().iter().copied().find(|s| s.len() != small.len()).expect("mixed sizes");
        let witness = CmWitness::Mixed { covers: [names(small), names(large)] };
        return Ok(CmVerdict { cm: false, field, witness: Some(witness), links_checked: 0 });
    }
    let complex = independence_complex(c, limit)?;
    let faces = complex.faces_by_size(MAX_FACES)?;
    let mut links_checked = 0;
    for f in faces.iter().flatten() {
        let link = complex.link(*f);
        if link.cone_vertex().is_some() {
            continue;
        }
        let d = link.dim();
        if d <= 0 {
            // only H~_{-1} lies below, and it vanishes for a non-void complex of dimension >= 0
            continue;
        }
        links_checked += 1;
        if d == 1 {
            // a pure graph: only H~_0 lies below, and it counts extra components
            let extra = link.components() - 1;
            if extra != 0 {
                let witness = CmWitness::Link { face: names(*f), dim: 0, betti: extra };
                return Ok(CmVerdict { cm: false, field, witness: Some(witness), links_checked });
            }
            continue;
        }
        let h = reduced_homology(&link, field)?;
        if let Some(k) = (-1..d).find(|&k| h.reduced(k) != 0) {
            let witness = CmWitness::Link { face: names(*f), dim: k, betti: h.reduced(k) };
            return Ok(CmVerdict { cm: false, field, witness: Some(witness), links_checked });
        }
    }
    Ok(CmVerdict { cm: true, field, witness: None, links_checked })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::transform::graft;

    fn c(n: usize, e: &[&[usize]]) -> Clutter {
        Clutter::from_index_edges(n, e).unwrap()
    }

    fn sets(v: &[&[usize]]) -> Vec<VertexSet> {
        v.iter().map(|s| VertexSet::from_indices(s.iter().copied())).collect()
    }

    #[test]
    fn independence_complex_examples() {
        let e = c(2, &[&[0, 1]]);
        assert_eq!(independence_complex(&e, DEFAULT_CM_LIMIT).unwrap().facets(), sets(&[&[0], &[1]]).as_slice());
        let t = c(3, &[&[0, 1], &[1, 2], &[0, 2]]);
        assert_eq!(independence_complex(&t, DEFAULT_CM_LIMIT).unwrap().facets(), sets(&[&[0], &[1], &[2]]).as_slice());
        // path y11 - x1 - x2 - y21 with vertex order x1 x2 y11 y21
        let p = graft(&e).unwrap();
        let ic = independence_complex(&p, DEFAULT_CM_LIMIT).unwrap();
        assert_eq!(ic.facets(), sets(&[&[0, 3], &[1, 2], &[2, 3]]).as_slice());
        let named: Vec<String> = ic.facets().iter().map(|f| p.render_set(*f)).collect();
        assert_eq!(named, ["x1,y2_1", "x2,y1_1", "y1_1,y2_1"]);
    }

    #[test]
    fn c5_complex_is_a_circle() {
        let c5 = c(5, &[&[0, 1], &[1, 2], &[2, 3], &[3, 4], &[0, 4]]);
        let ic = independence_complex(&c5, DEFAULT_CM_LIMIT).unwrap();
        assert_eq!(ic.facets().len(), 5);
        assert_eq!(reduced_homology(&ic, Field::Q).unwrap().betti, vec![0, 0, 1]);
        // the top class of a connected circle does not obstruct
        assert!(is_cohen_macaulay(&c5, Field::Q, DEFAULT_CM_LIMIT).unwrap().cm);
    }

    #[test]
    fn cm_examples() {
        assert!(is_cohen_macaulay(&c(2, &[&[0, 1]]), Field::Q, DEFAULT_CM_LIMIT).unwrap().cm);
        assert!(is_cohen_macaulay(&c(3, &[&[0, 1], &[1, 2], &[0, 2]]), Field::Q, DEFAULT_CM_LIMIT).unwrap().cm);
        let c4 = c(4, &[&[0, 1], &[1, 2], &[2, 3], &[0, 3]]);
        let v = is_cohen_macaulay(&c4, Field::Q, DEFAULT_CM_LIMIT).unwrap();
        assert!(!v.cm);
        assert_eq!(v.witness, Some(CmWitness::Link { face: vec![], dim: 0, betti: 1 }));
    }

    #[test]
    fn mixed_covers_are_rejected_first() {
        let star = c(4, &[&[0, 1], &[0, 2], &[0, 3]]);
        let v = is_cohen_macaulay(&star, Field::Q, DEFAULT_CM_LIMIT).unwrap();
        assert!(!v.cm);
        assert_eq!(
            v.witness,
            Some(CmWitness::Mixed { covers: [vec!["x1".to_string()], vec!["x2".into(), "x3".into(), "x4".into()]] })
        );
    }

    #[test]
    fn grafts_are_cm_over_both_fields() {
        let cases = [
            c(4, &[&[0, 1], &[1, 2], &[2, 3], &[0, 3]]),
            c(5, &[&[0, 1], &[1, 2], &[2, 3], &[3, 4], &[0, 4]]),
            c(5, &[&[0, 1, 2], &[2, 3, 4], &[0, 3, 4]]),
        ];
        for cl in &cases {
            let g = graft(cl).unwrap();
            for field in [Field::Q, Field::F2] {
                let v = is_cohen_macaulay(&g, field, DEFAULT_CM_LIMIT).unwrap();
                assert!(v.cm, "{cl:?} {field}");
            }
        }
    }

    #[test]
    fn positive_verdicts_are_unmixed_and_links_match_definition() {
        let c5 = c(5, &[&[0, 1], &[1, 2], &[2, 3], &[3, 4], &[0, 4]]);
        let ic = independence_complex(&c5, DEFAULT_CM_LIMIT).unwrap();
        assert!(ic.is_pure());
        let f = VertexSet::singleton(0);
        let link = ic.link(f);
        // faces G with G ∩ F = ∅ and G ∪ F independent
        assert_eq!(link.facets(), sets(&[&[2], &[3]]).as_slice());
        assert!(ic.contains_face(VertexSet::from_indices([0, 2])));
        assert!(!ic.contains_face(VertexSet::from_indices([0, 1])));
    }
}
