//! Structural operations: minors, duplication, parallelization, grafting and
//! whisker edges.

use std::collections::HashSet;

use crate::clutter::{Clutter, VertexSet, MAX_VERTICES};
use crate::error::{check_len, check_limit, Error, Result};

/// Upper bound on the number of edges a parallelization may produce.
pub const MAX_PARALLEL_EDGES: usize = 1 << 20;

/// Returns `d` when every edge has exactly `d` vertices. The empty clutter
/// is reported as not uniform.
pub fn is_uniform(c: &Clutter) -> Option<usize> {
    let d = c.edges().first()?.len();
    c.edges().iter().all(|e| e.len() == d).then_some(d)
}

/// Minor obtained by setting the `deleted` variables to 0 and the
/// `contracted` variables to 1, then keeping the minimal surviving sets.
pub fn minor(c: &Clutter, deleted: VertexSet, contracted: VertexSet) -> Result<Clutter> {
    if let Some(i) = deleted.intersection(contracted).first() {
        return Err(Error::OverlappingMinor(c.label(i).to_string()));
    }
    let full = c.vertex_set();
    if !deleted.union(contracted).is_subset(full) {
        return Err(Error::InvalidArgument("minor refers to a vertex out of range".into()));
    }
    let sets = c
        .edges()
        .iter()
        .filter(|e| !e.intersects(deleted))
        .map(|e| e.difference(contracted))
        .collect();
    Clutter::from_family(c.labels(), sets)
}

/// Label-based front end for [`minor`].
pub fn minor_by_labels<S: AsRef<str>>(c: &Clutter, deleted: &[S], contracted: &[S]) -> Result<Clutter> {
    minor(c, c.indices_of(deleted)?, c.indices_of(contracted)?)
}

fn fresh_label(base: String, used: &mut HashSet<String>) -> String {
    let mut l = base;
    while used.contains(&l) {
        l.push('\'');
    }
    used.insert(l.clone());
    l
}

fn copy_label(label: &str, j: u32) -> String {
    if j == 1 {
        label.to_string()
    } else {
        format!("{label}#{j}")
    }
}

/// Adds a copy `x#k` of vertex `v` (first free `k >= 2`) and one copy of
/// every edge through `v`.
pub fn duplicate(c: &Clutter, v: usize) -> Result<Clutter> {
    if v >= c.n() {
        return Err(Error::UnknownVertex(format!("#{v}")));
    }
    if c.degree(v) == 0 {
        return Err(Error::IsolatedVertex(c.label(v).to_string()));
    }
    check_limit("vertex count", c.n() + 1, MAX_VERTICES)?;
    let mut used: HashSet<String> = c.labels().iter().cloned().collect();
    let mut k = 2;
    while used.contains(&copy_label(c.label(v), k)) {
        k += 1;
    }
    let new_label = fresh_label(copy_label(c.label(v), k), &mut used);
    let mut labels = c.labels().to_vec();
    labels.push(new_label);
    let new = c.n();
    let mut edges = c.edges().to_vec();
    edges.extend(c.edges().iter().filter(|e| e.contains(v)).map(|e| e.without(v).with(new)));
    Clutter::new(labels, edges)
}

/// The parallelization `C^w`: vertex `x_i` is deleted when `w_i = 0` and
/// otherwise replaced by the copies `x_i, x_i#2, .., x_i#w_i`.
pub fn parallelization(c: &Clutter, w: &[u32]) -> Result<Clutter> {
    check_len(c.n(), w.len())?;
    let total: usize = w.iter().map(|&x| x as usize).sum();
    check_limit("parallelized vertex count", total, MAX_VERTICES)?;

    let mut used: HashSet<String> = c.labels().iter().cloned().collect();
    let mut labels = Vec::with_capacity(total);
    let mut first_copy = vec![0usize; c.n()];
    for (i, &wi) in w.iter().enumerate() {
        first_copy[i] = labels.len();
        for j in 1..=wi {
            if j == 1 {
                labels.push(c.label(i).to_string());
            } else {
                labels.push(fresh_label(copy_label(c.label(i), j), &mut used));
            }
        }
    }

    let surviving: Vec<VertexSet> = c
        .edges()
        .iter()
        .copied()
        .filter(|e| e.iter().all(|i| w[i] >= 1))
        .collect();
    let count: usize = surviving
        .iter()
        .map(|e| e.iter().map(|i| w[i] as usize).product::<usize>())
        .sum();
    check_limit("parallelized edge count", count, MAX_PARALLEL_EDGES)?;

    let mut sets = Vec::with_capacity(count);
    for e in surviving {
        let verts = e.to_vec();
        let mut choice = vec![0u32; verts.len()];
        'odometer: loop {
            sets.push(
                verts
                    .iter()
                    .zip(&choice)
                    .map(|(&i, &j)| first_copy[i] + j as usize)
                    .collect::<VertexSet>(),
            );
            for k in (0..verts.len()).rev() {
                choice[k] += 1;
                if choice[k] < w[verts[k]] {
                    continue 'odometer;
                }
                choice[k] = 0;
            }
            break;
        }
    }
    Clutter::from_family(&labels, sets)
}

/// Grafting of a `d`-uniform clutter: every vertex `x_i` receives a new
/// edge `{x_i, y_i_1, .., y_i_(d-1)}` on fresh vertices.
pub fn graft(c: &Clutter) -> Result<Clutter> {
    let d = is_uniform(c).ok_or(Error::NotUniform)?;
    check_limit("grafted vertex count", c.n() * d, MAX_VERTICES)?;
    let mut used: HashSet<String> = c.labels().iter().cloned().collect();
    let mut labels = c.labels().to_vec();
    let mut sets = c.edges().to_vec();
    for i in 0..c.n() {
        let mut e = VertexSet::singleton(i);
        for j in 1..d {
            e.insert(labels.len());
            labels.push(fresh_label(format!("y{}_{}", i + 1, j), &mut used));
        }
        sets.push(e);
    }
    Clutter::from_family(&labels, sets)
}

/// Adds fresh vertices `z1..zl` and the edge `{x_v, z1, .., zl}`.
///
/// If `{x_v}` is already an edge the new edge is not minimal; the ideal is
/// unchanged and so is the returned clutter.
pub fn adjoin_whisker_edge(c: &Clutter, v: usize, len: usize) -> Result<Clutter> {
    if v >= c.n() {
        return Err(Error::UnknownVertex(format!("#{v}")));
    }
    if len == 0 {
        return Err(Error::InvalidArgument("whisker length must be positive".into()));
    }
    check_limit("vertex count", c.n() + len, MAX_VERTICES)?;
    if c.edges().contains(&VertexSet::singleton(v)) {
        return Ok(c.clone());
    }
    let mut used: HashSet<String> = c.labels().iter().cloned().collect();
    let mut labels = c.labels().to_vec();
    let mut e = VertexSet::singleton(v);
    for k in 1..=len {
        e.insert(labels.len());
        labels.push(fresh_label(format!("z{k}"), &mut used));
    }
    let mut edges = c.edges().to_vec();
    edges.push(e);
    Clutter::new(labels, edges)
}
