//! Bounded max-flow min-cut certification.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use super::ilp::solve_packing_ilp;
use crate::clutter::{advance_box, Clutter, VertexSet};
use crate::covering::minimal_vertex_covers;
use crate::error::{check_len, check_limit, Result};

/// Cap on the number of weight vectors `(W+1)^n` examined.
pub const MAX_BOXES: usize = 1 << 22;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MfmcVerdict {
    /// Every `w in {0..W}^n` satisfies `alpha_0(C^w) = beta_1(C^w)`. Not a proof of MFMC.
    CertifiedUpTo(u32),
    Counterexample { w: Vec<u32>, alpha0: u64, packing: u64 },
}

impl MfmcVerdict {
    pub fn is_certified(&self) -> bool {
        matches!(self, MfmcVerdict::CertifiedUpTo(_))
    }
}

/// `max { <y,1> : y in N^q, Ay <= w }` by a memoized search over residual
/// weights: the lowest vertex with positive weight that still lies in a
/// usable edge is either used by some edge through it or retired.
pub fn max_packing(c: &Clutter, w: &[u32]) -> Result<u64> {
    check_len(c.n(), w.len())?;
    Ok(Packer::new(c).best(w.to_vec(), u64::MAX))
}

struct Packer<'a> {
    edges: &'a [VertexSet],
    memo: HashMap<Vec<u32>, u64>,
}

impl<'a> Packer<'a> {
    fn new(c: &'a Clutter) -> Self {
        Packer { edges: c.edges(), memo: HashMap::new() }
    }

    /// Maximum packing under `w`, or any value `>= target` once one is found.
    fn best(&mut self, w: Vec<u32>, target: u64) -> u64 {
        if let Some(&v) = self.memo.get(&w) {
            return v;
        }
        let usable = |e: &VertexSet| e.iter().all(|i| w[i] > 0);
        let Some(v) = self
            .edges
            .iter()
            .filter(|e| usable(e))
            .map(|e| e.first().expect("edges are non-empty"))
            .min()
        else {
            return 0;
        };
        let mut best = 0;
        for e in self.edges.iter().filter(|e| e.contains(v) && usable(e)) {
            let mut r = w.clone();
            for i in e.iter() {
                r[i] -= 1;
            }
            best = best.max(1 + self.best(r, target.saturating_sub(1)));
            if best >= target {
                return best;
            }
        }
        let mut r = w.clone();
        r[v] = 0;
        best = best.max(self.best(r, target));
        self.memo.insert(w, best);
        best
    }

    /// Whether some packing reaches `target`.
    fn reaches(&mut self, w: &[u32], target: u64) -> bool {
        target == 0 || self.best(w.to_vec(), target) >= target
    }
}

/// Checks `alpha_0(C^w) = beta_1(C^w)` for every `w in {0..W}^n` in
/// lexicographic order. By weak duality the packing side never exceeds the
/// cover side, so each box only asks whether a packing reaches the minimum
/// cover weight; the packing ILP is solved only for a counterexample.
pub fn mfmc_bounded(c: &Clutter, max_w: u32) -> Result<MfmcVerdict> {
    let n = c.n();
    let boxes = (max_w as usize + 1).checked_pow(n as u32).unwrap_or(usize::MAX);
    check_limit("MFMC weight box", boxes, MAX_BOXES)?;
    let covers = minimal_vertex_covers(c);
    let mut packer = Packer::new(c);
    let mut w = vec![0u32; n];
    loop {
        let alpha = covers.min_weight(&w);
        if !packer.reaches(&w, alpha) {
            let packing = solve_packing_ilp(c, &w)?.value;
            debug_assert!(packing < alpha);
            return Ok(MfmcVerdict::Counterexample { w, alpha0: alpha, packing });
        }
        if !advance_box(&mut w, max_w) {
            return Ok(MfmcVerdict::CertifiedUpTo(max_w));
        }
    }
}
