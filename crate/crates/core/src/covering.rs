//! Vertex covers, matchings, the König and packing properties.

use std::collections::{HashMap, HashSet};

use serde::{Deserialize, Serialize};

use crate::clutter::{minimalize, Clutter, VertexSet};
use crate::error::{check_len, check_limit, Result};

/// Default vertex limit for [`has_packing_property`] (`3^n` assignments).
pub const DEFAULT_PP_LIMIT: usize = 14;

/// The minimal vertex covers of a clutter, in canonical order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverFamily {
    covers: Vec<VertexSet>,
}

impl CoverFamily {
    pub fn covers(&self) -> &[VertexSet] {
        &self.covers
    }

    pub fn len(&self) -> usize {
        self.covers.len()
    }

    pub fn is_empty(&self) -> bool {
        self.covers.is_empty()
    }

    /// Minimum of `sum_{i in C} w_i` over the covers.
    pub fn min_weight(&self, w: &[u32]) -> u64 {
        self.covers
            .iter()
            .map(|c| c.iter().map(|i| w[i] as u64).sum::<u64>())
            .min()
            .unwrap_or(0)
    }

    /// Whether all covers have the same size.
    pub fn is_unmixed(&self) -> bool {
        self.covers.windows(2).all(|p| p[0].len() == p[1].len())
    }
}

/// All minimal vertex covers. Branches on the first uncovered edge; a vertex
/// tried in an earlier branch is excluded from later ones, so every cover
/// is produced once. Non-minimal leaves are filtered out.
pub fn minimal_vertex_covers(c: &Clutter) -> CoverFamily {
    CoverFamily { covers: minimal_covers_of(c.edges()) }
}

pub(crate) fn minimal_covers_of(edges: &[VertexSet]) -> Vec<VertexSet> {
    fn go(edges: &[VertexSet], chosen: VertexSet, excluded: VertexSet, out: &mut Vec<VertexSet>) {
        let Some(&e) = edges.iter().find(|e| !e.intersects(chosen)) else {
            out.push(chosen);
            return;
        };
        let mut excl = excluded;
        for v in e.difference(excluded).iter() {
            go(edges, chosen.with(v), excl, out);
            excl.insert(v);
        }
    }
    let mut out = Vec::new();
    go(edges, VertexSet::EMPTY, VertexSet::EMPTY, &mut out);
    let mut covers: Vec<VertexSet> = out.into_iter().filter(|&c| is_minimal_cover(edges, c)).collect();
    covers.sort();
    covers.dedup();
    covers
}

fn is_minimal_cover(edges: &[VertexSet], cover: VertexSet) -> bool {
    cover
        .iter()
        .all(|v| edges.iter().any(|e| e.intersection(cover) == VertexSet::singleton(v)))
}

/// `alpha_0`: size of a smallest vertex cover.
pub fn covering_number(c: &Clutter) -> usize {
    covering_number_of(c.edges())
}

pub(crate) fn covering_number_of(edges: &[VertexSet]) -> usize {
    fn disjoint_uncovered(edges: &[VertexSet], chosen: VertexSet) -> usize {
        let mut used = VertexSet::EMPTY;
        let mut k = 0;
        for &e in edges {
            if !e.intersects(chosen) && !e.intersects(used) {
                used = used.union(e);
                k += 1;
            }
        }
        k
    }
    fn go(edges: &[VertexSet], chosen: VertexSet, excluded: VertexSet, best: &mut usize) {
        let size = chosen.len();
        let Some(&e) = edges.iter().find(|e| !e.intersects(chosen)) else {
            *best = (*best).min(size);
            return;
        };
        if size + disjoint_uncovered(edges, chosen) >= *best {
            return;
        }
        let mut excl = excluded;
        for v in e.difference(excluded).iter() {
            go(edges, chosen.with(v), excl, best);
            excl.insert(v);
        }
    }
    if edges.is_empty() {
        return 0;
    }
    // Union of all edges is a cover.
    let mut best = edges.iter().fold(VertexSet::EMPTY, |a, &e| a.union(e)).len();
    go(edges, VertexSet::EMPTY, VertexSet::EMPTY, &mut best);
    best
}

/// `beta_1`: maximum number of pairwise disjoint edges.
pub fn matching_number(c: &Clutter) -> usize {
    matching_number_of(c.edges())
}

pub(crate) fn matching_number_of(edges: &[VertexSet]) -> usize {
    fn go(edges: &[VertexSet], blocked: VertexSet, count: usize, best: &mut usize) {
        let avail: Vec<VertexSet> = edges.iter().copied().filter(|e| !e.intersects(blocked)).collect();
        if avail.is_empty() {
            *best = (*best).max(count);
            return;
        }
        let support = avail.iter().fold(VertexSet::EMPTY, |a, &e| a.union(e));
        let min_size = avail.iter().map(|e| e.len()).min().unwrap_or(1).max(1);
        if count + (support.len() / min_size).min(avail.len()) <= *best {
            return;
        }
        let v = support.first().expect("non-empty support");
        for &e in avail.iter().filter(|e| e.contains(v)) {
            go(&avail, blocked.union(e), count + 1, best);
        }
        go(&avail, blocked.with(v), count, best);
    }
    let mut used = VertexSet::EMPTY;
    let mut best = 0;
    for &e in edges {
        if !e.intersects(used) {
            used = used.union(e);
            best += 1;
        }
    }
    go(edges, VertexSet::EMPTY, 0, &mut best);
    best
}

/// Whether `alpha_0 = beta_1`.
pub fn has_konig(c: &Clutter) -> bool {
    konig_of(c.edges())
}

pub(crate) fn konig_of(edges: &[VertexSet]) -> bool {
    covering_number_of(edges) == matching_number_of(edges)
}

/// `min { sum_{x_i in C} w_i : C minimal vertex cover }`, which equals
/// `alpha_0(C^w)`.
pub fn weighted_cover_number(c: &Clutter, w: &[u32]) -> Result<u64> {
    check_len(c.n(), w.len())?;
    Ok(minimal_vertex_covers(c).min_weight(w))
}

/// A minor failing the König property.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinorWitness {
    pub deleted: Vec<String>,
    pub contracted: Vec<String>,
    pub alpha0: usize,
    pub beta1: usize,
    pub minor: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PackingVerdict {
    pub holds: bool,
    pub witness: Option<MinorWitness>,
    /// Distinct (depth, minor) states visited.
    pub states: usize,
}

/// Checks König on every minor.
///
/// Assignments `{keep, delete, contract}^n` are explored depth first in
/// lexicographic order, so the reported witness is the lexicographically
/// first failing assignment. A subtree is skipped when the same partial
/// minor was already reached at the same depth, and a vertex lying in no
/// remaining edge only takes the `keep` branch (the other two give the same
/// minor). Assignments producing the unit ideal are not minors.
pub fn has_packing_property(c: &Clutter, limit: usize) -> Result<PackingVerdict> {
    check_limit("packing property check", c.n(), limit)?;
    let mut search = PpSearch {
        n: c.n(),
        visited: HashSet::new(),
        konig: HashMap::new(),
    };
    let mut edges = c.edges().to_vec();
    edges.sort();
    let hit = search.go(0, edges, VertexSet::EMPTY, VertexSet::EMPTY);
    let witness = hit.map(|(del, con, edges)| {
        let minor = crate::transform::minor(c, del, con).expect("witness is a proper minor");
        debug_assert_eq!(minor.edges().len(), edges.len());
        MinorWitness {
            deleted: del.iter().map(|i| c.label(i).to_string()).collect(),
            contracted: con.iter().map(|i| c.label(i).to_string()).collect(),
            alpha0: covering_number(&minor),
            beta1: matching_number(&minor),
            minor: minor.compact(),
        }
    });
    Ok(PackingVerdict { holds: witness.is_none(), witness, states: search.visited.len() })
}

struct PpSearch {
    n: usize,
    visited: HashSet<(usize, Vec<u128>)>,
    konig: HashMap<Vec<u128>, bool>,
}

impl PpSearch {
    fn go(
        &mut self,
        k: usize,
        edges: Vec<VertexSet>,
        del: VertexSet,
        con: VertexSet,
    ) -> Option<(VertexSet, VertexSet, Vec<VertexSet>)> {
        let key: Vec<u128> = edges.iter().map(|e| e.bits()).collect();
        if !self.visited.insert((k, key.clone())) {
            return None;
        }
        if k == self.n {
            let ok = *self.konig.entry(key).or_insert_with(|| konig_of(&edges));
            return (!ok).then_some((del, con, edges));
        }
        let touches = edges.iter().any(|e| e.contains(k));
        if !touches {
            return self.go(k + 1, edges, del, con);
        }
        if let Some(hit) = self.go(k + 1, edges.clone(), del, con) {
            return Some(hit);
        }
        let deleted: Vec<VertexSet> = edges.iter().copied().filter(|e| !e.contains(k)).collect();
        if let Some(hit) = self.go(k + 1, deleted, del.with(k), con) {
            return Some(hit);
        }
        let shrunk: Vec<VertexSet> = edges.iter().map(|e| e.without(k)).collect();
        if shrunk.iter().any(|e| e.is_empty()) {
            return None;
        }
        self.go(k + 1, minimalize(shrunk), del, con.with(k))
    }
}
