//! Exhaustive enumeration of small clutters.

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::clutter::{Clutter, VertexSet};
use crate::error::{Error, Result};

/// Largest ground set for d-uniform enumeration.
pub const MAX_UNIFORM_N: usize = 6;
/// Largest ground set when edges of every size are allowed.
pub const MAX_GENERAL_N: usize = 5;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CorpusSpec {
    /// Size of the ground set `x1..xn`; vertices left in no edge are dropped.
    pub n: usize,
    /// Edge size; `None` allows every size.
    pub d: Option<usize>,
    pub q_max: Option<usize>,
    pub iso_reject: bool,
}

impl CorpusSpec {
    pub fn uniform(n: usize, d: usize) -> Self {
        CorpusSpec { n, d: Some(d), q_max: None, iso_reject: false }
    }

    pub fn with_iso_reject(mut self) -> Self {
        self.iso_reject = true;
        self
    }
}

/// Every nonempty antichain on `{x1..xn}` (of d-sets when `d` is given)
/// with at most `q_max` edges, one per isomorphism class when requested.
/// Output is sorted by vertex count, edge count, then edges.
pub fn enumerate_clutters(spec: &CorpusSpec) -> Result<Vec<Clutter>> {
    let n = spec.n;
    let limit = if spec.d.is_some() { MAX_UNIFORM_N } else { MAX_GENERAL_N };
    if n > limit {
        return Err(Error::TooLarge { what: "corpus ground set", size: n, limit });
    }
    if n == 0 || spec.d.is_some_and(|d| d == 0 || d > n) {
        return Ok(Vec::new());
    }
    let candidates: Vec<u32> = match spec.d {
        Some(d) => (0..n).combinations(d).map(|s| s.iter().fold(0, |m, &i| m | 1 << i)).collect(),
        None => (1u32..1 << n).sorted_by_key(|m| (m.count_ones(), m.reverse_bits())).collect(),
    };
    let q_max = spec.q_max.unwrap_or(usize::MAX);
    let perms: Vec<Vec<usize>> = if spec.iso_reject { (0..n).permutations(n).collect() } else { Vec::new() };

    let mut found: Vec<Vec<u32>> = Vec::new();
    let mut chosen: Vec<u32> = Vec::new();
    grow(&candidates, 0, &mut chosen, q_max, &mut |edges| {
        if !spec.iso_reject || is_canonical(edges, &perms) {
            found.push(edges.to_vec());
        }
    });

    let labels: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
    let mut out: Vec<Clutter> = found
        .into_iter()
        .map(|edges| {
            let sets = edges.iter().map(|&m| VertexSet::from_bits(m as u128)).collect();
            Clutter::from_family(&labels, sets).expect("antichain of nonempty sets")
        })
        .collect();
    out.sort_by_key(sort_key);
    Ok(out)
}

fn sort_key(c: &Clutter) -> (usize, usize, Vec<Vec<usize>>) {
    (c.n(), c.q(), c.edges().iter().map(|e| e.to_vec()).collect())
}

fn grow(cands: &[u32], from: usize, chosen: &mut Vec<u32>, q_max: usize, emit: &mut impl FnMut(&[u32])) {
    if !chosen.is_empty() {
        emit(chosen);
    }
    if chosen.len() == q_max {
        return;
    }
    for k in from..cands.len() {
        let m = cands[k];
        if chosen.iter().all(|&e| e & m != e && e & m != m) {
            chosen.push(m);
            grow(cands, k + 1, chosen, q_max, emit);
            chosen.pop();
        }
    }
}

fn encode(edges: &[u32]) -> Vec<u32> {
    let mut v = edges.to_vec();
    v.sort_unstable();
    v
}

fn permute(m: u32, p: &[usize]) -> u32 {
    p.iter().enumerate().filter(|&(i, _)| m >> i & 1 == 1).fold(0, |acc, (_, &j)| acc | 1 << j)
}

/// Kept iff no vertex permutation gives a smaller sorted edge encoding.
fn is_canonical(edges: &[u32], perms: &[Vec<usize>]) -> bool {
    let own = encode(edges);
    perms.iter().all(|p| {
        let img: Vec<u32> = edges.iter().map(|&m| permute(m, p)).collect();
        encode(&img) >= own
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn count(n: usize, d: Option<usize>, iso: bool) -> usize {
        enumerate_clutters(&CorpusSpec { n, d, q_max: None, iso_reject: iso }).unwrap().len()
    }

    /// Independent reference: filter every family of candidate sets.
    fn brute_count(n: usize, d: Option<usize>) -> usize {
        let cands: Vec<u32> = (1u32..1 << n).filter(|m| d.is_none_or(|d| m.count_ones() as usize == d)).collect();
        (1u64..1 << cands.len())
            .filter(|fam| {
                let sets: Vec<u32> = (0..cands.len()).filter(|&j| fam >> j & 1 == 1).map(|j| cands[j]).collect();
                sets.iter().all(|&a| sets.iter().all(|&b| a == b || a & b != a))
            })
            .count()
    }

    #[test]
    fn closed_form_counts() {
        assert_eq!(count(2, Some(2), false), 1);
        assert_eq!(count(3, Some(2), false), 7);
        assert_eq!(count(3, Some(2), true), 3);
        assert_eq!(count(2, None, false), 4);
        assert_eq!(count(3, None, false), 18);
        // Dedekind number M(4) = 168, minus the empty family and {∅}
        assert_eq!(count(4, None, false), 166);
    }

    #[test]
    fn matches_brute_force_for_n4() {
        for d in [None, Some(1), Some(2), Some(3)] {
            assert_eq!(count(4, d, false), brute_count(4, d), "{d:?}");
        }
    }

    #[test]
    fn isomorphism_classes() {
        // graphs without isolated vertices on at most 4 vertices: 1 + 2 + 7
        assert_eq!(count(4, Some(2), true), 10);
        let reps = enumerate_clutters(&CorpusSpec::uniform(3, 2).with_iso_reject()).unwrap();
        let qs: Vec<usize> = reps.iter().map(|c| c.q()).collect();
        assert_eq!(qs, [1, 2, 3]);
        assert_eq!(reps[0].to_text(), "v: x1 x2\ne: x1 x2\n");
    }

    #[test]
    fn q_max_and_limits() {
        let spec = CorpusSpec { n: 3, d: Some(2), q_max: Some(1), iso_reject: false };
        assert_eq!(enumerate_clutters(&spec).unwrap().len(), 3);
        assert!(enumerate_clutters(&CorpusSpec { n: 6, d: None, q_max: None, iso_reject: false }).is_err());
        assert!(enumerate_clutters(&CorpusSpec::uniform(3, 4)).unwrap().is_empty());
    }

    #[test]
    fn deterministic() {
        let spec = CorpusSpec::uniform(4, 2);
        let a: Vec<String> = enumerate_clutters(&spec).unwrap().iter().map(|c| c.compact()).collect();
        let b: Vec<String> = enumerate_clutters(&spec).unwrap().iter().map(|c| c.compact()).collect();
        assert_eq!(a, b);
    }
}
