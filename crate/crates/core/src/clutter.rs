//! Clutter representation, the text format and the incidence matrix.
//!
//! A clutter is stored as an ordered list of vertex labels plus a list of
//! edges. Edges are bit sets over vertex indices, kept in canonical order:
//! each edge is read as its sorted index list and the edge list is sorted
//! lexicographically. All downstream output relies on that order.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{check_limit, Error, Result};

/// Hard cap on the number of vertices a [`Clutter`] can carry.
pub const MAX_VERTICES: usize = 128;

/// A set of vertex indices, `i < MAX_VERTICES`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct VertexSet(u128);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn from_bits(bits: u128) -> Self {
        VertexSet(bits)
    }

    pub fn bits(self) -> u128 {
        self.0
    }

    pub fn singleton(i: usize) -> Self {
        VertexSet(1u128 << i)
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(it: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for i in it {
            s.insert(i);
        }
        s
    }

    /// `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        if n >= 128 {
            VertexSet(u128::MAX)
        } else {
            VertexSet((1u128 << n) - 1)
        }
    }

    pub fn insert(&mut self, i: usize) {
        self.0 |= 1u128 << i;
    }

    pub fn remove(&mut self, i: usize) {
        self.0 &= !(1u128 << i);
    }

    pub fn with(self, i: usize) -> Self {
        VertexSet(self.0 | (1u128 << i))
    }

    pub fn without(self, i: usize) -> Self {
        VertexSet(self.0 & !(1u128 << i))
    }

    pub fn contains(self, i: usize) -> bool {
        i < 128 && self.0 >> i & 1 == 1
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn intersects(self, other: VertexSet) -> bool {
        self.0 & other.0 != 0
    }

    pub fn union(self, other: VertexSet) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: VertexSet) -> Self {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: VertexSet) -> Self {
        VertexSet(self.0 & !other.0)
    }

    /// Smallest element, if any.
    pub fn first(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    pub fn iter(self) -> VertexSetIter {
        VertexSetIter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

pub struct VertexSetIter(u128);

impl Iterator for VertexSetIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        VertexSet::from_indices(iter)
    }
}

/// Lexicographic order of the sorted index lists; a proper prefix sorts first.
impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        let diff = self.0 ^ other.0;
        if diff == 0 {
            return Ordering::Equal;
        }
        let p = diff.trailing_zeros();
        let self_has = self.0 >> p & 1 == 1;
        let lacking = if self_has { other.0 } else { self.0 };
        // The set lacking p is a prefix of the other one iff it has nothing beyond p.
        let holder_smaller = lacking >> p != 0;
        if self_has == holder_smaller {
            Ordering::Less
        } else {
            Ordering::Greater
        }
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Non-negative integer vector indexed by the vertices of a clutter.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ExponentVector(pub Vec<u32>);

impl ExponentVector {
    pub fn zeros(n: usize) -> Self {
        ExponentVector(vec![0; n])
    }

    pub fn ones(n: usize) -> Self {
        ExponentVector(vec![1; n])
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    /// Product notation skipping zero exponents, with `t^b` appended when a
    /// Rees degree is given.
    pub fn monomial(&self, labels: &[String], t_degree: Option<u32>) -> String {
        let mut s = labels
            .iter()
            .zip(&self.0)
            .filter(|(_, &a)| a > 0)
            .map(|(l, &a)| if a == 1 { l.clone() } else { format!("{l}^{a}") })
            .collect::<Vec<_>>()
            .join("*");
        if s.is_empty() {
            s.push('1');
        }
        if let Some(b) = t_degree {
            s.push_str(&format!(" t^{b}"));
        }
        s
    }
}

impl std::ops::Deref for ExponentVector {
    type Target = [u32];

    fn deref(&self) -> &[u32] {
        &self.0
    }
}

impl From<Vec<u32>> for ExponentVector {
    fn from(v: Vec<u32>) -> Self {
        ExponentVector(v)
    }
}

/// The `n x q` 0/1 matrix whose columns are the characteristic vectors of the edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IncidenceMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<u8>,
}

impl IncidenceMatrix {
    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> u8 {
        self.entries[i * self.cols + j]
    }

    pub fn column(&self, j: usize) -> Vec<u8> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn row_sums(&self) -> Vec<usize> {
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j) as usize).sum())
            .collect()
    }

    pub fn column_sums(&self) -> Vec<usize> {
        (0..self.cols)
            .map(|j| (0..self.rows).map(|i| self.get(i, j) as usize).sum())
            .collect()
    }
}

/// A clutter on labelled vertices.
///
/// Vertices that lie in no edge are allowed (they are reported by
/// [`Clutter::isolated_vertices`]); transformations that can strand
/// vertices drop them from their output.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Clutter {
    labels: Vec<String>,
    edges: Vec<VertexSet>,
}

impl Clutter {
    /// Builds a clutter, validating the antichain condition. Edges are sorted
    /// into canonical order.
    pub fn new(labels: Vec<String>, mut edges: Vec<VertexSet>) -> Result<Self> {
        check_limit("vertex count", labels.len(), MAX_VERTICES)?;
        let mut seen = HashMap::new();
        for l in &labels {
            if l.is_empty() || l.chars().any(char::is_whitespace) {
                return Err(Error::InvalidArgument(format!("bad vertex label {l:?}")));
            }
            if seen.insert(l.as_str(), ()).is_some() {
                return Err(Error::InvalidArgument(format!("duplicate vertex label `{l}`")));
            }
        }
        let full = VertexSet::full(labels.len());
        for e in &edges {
            if e.is_empty() {
                return Err(Error::EmptyEdge);
            }
            if !e.is_subset(full) {
                return Err(Error::InvalidArgument("edge refers to a vertex out of range".into()));
            }
        }
        edges.sort();
        let render = |e: VertexSet| render_edge(&labels, e);
        for w in edges.windows(2) {
            if w[0] == w[1] {
                return Err(Error::DuplicateEdge(render(w[0])));
            }
        }
        for (i, &a) in edges.iter().enumerate() {
            for &b in &edges[i + 1..] {
                if a.is_subset(b) {
                    return Err(Error::Antichain { smaller: render(a), larger: render(b) });
                }
                if b.is_subset(a) {
                    return Err(Error::Antichain { smaller: render(b), larger: render(a) });
                }
            }
        }
        Ok(Clutter { labels, edges })
    }

    /// Clutter on `x1..xn` with edges given by 0-based index lists.
    pub fn from_index_edges(n: usize, edges: &[&[usize]]) -> Result<Self> {
        let labels = (1..=n).map(|i| format!("x{i}")).collect();
        let edges = edges.iter().map(|e| VertexSet::from_indices(e.iter().copied())).collect();
        Clutter::new(labels, edges)
    }

    /// The clutter of minimal members of `sets`, with stranded vertices
    /// dropped. An empty member means the family generates the unit ideal.
    pub(crate) fn from_family(labels: &[String], sets: Vec<VertexSet>) -> Result<Self> {
        if sets.iter().any(|s| s.is_empty()) {
            return Err(Error::UnitIdeal);
        }
        let minimal = minimalize(sets);
        let (kept_labels, edges) = restrict_to_support(labels, &minimal);
        Clutter::new(kept_labels, edges)
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn q(&self) -> usize {
        self.edges.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn edges(&self) -> &[VertexSet] {
        &self.edges
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| Error::UnknownVertex(label.to_string()))
    }

    pub fn indices_of<S: AsRef<str>>(&self, labels: &[S]) -> Result<VertexSet> {
        labels.iter().map(|l| self.index_of(l.as_ref())).collect::<Result<VertexSet>>()
    }

    /// Union of all edges.
    pub fn support(&self) -> VertexSet {
        self.edges.iter().fold(VertexSet::EMPTY, |acc, &e| acc.union(e))
    }

    pub fn isolated_vertices(&self) -> Vec<usize> {
        self.vertex_set().difference(self.support()).to_vec()
    }

    /// Drops vertices lying in no edge; returns the dropped labels.
    pub fn without_isolated(&self) -> (Clutter, Vec<String>) {
        let dropped = self
            .isolated_vertices()
            .into_iter()
            .map(|i| self.labels[i].clone())
            .collect();
        let (labels, edges) = restrict_to_support(&self.labels, &self.edges);
        (Clutter { labels, edges }, dropped)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|e| e.contains(v)).count()
    }

    pub fn characteristic_vector(&self, j: usize) -> Vec<u32> {
        let e = self.edges[j];
        (0..self.n()).map(|i| e.contains(i) as u32).collect()
    }

    pub fn incidence_matrix(&self) -> IncidenceMatrix {
        let (rows, cols) = (self.n(), self.q());
        let mut entries = vec![0u8; rows * cols];
        for (j, e) in self.edges.iter().enumerate() {
            for i in e.iter() {
                entries[i * cols + j] = 1;
            }
        }
        IncidenceMatrix { rows, cols, entries }
    }

    pub fn edge_labels(&self, e: VertexSet) -> Vec<&str> {
        e.iter().map(|i| self.labels[i].as_str()).collect()
    }

    pub fn render_set(&self, e: VertexSet) -> String {
        render_edge(&self.labels, e)
    }

    /// Edges as sets of labels, independent of vertex order.
    pub fn labelled_edges(&self) -> std::collections::BTreeSet<std::collections::BTreeSet<String>> {
        self.edges
            .iter()
            .map(|&e| e.iter().map(|i| self.labels[i].clone()).collect())
            .collect()
    }

    /// Canonical text form (see [`parse_clutter`]).
    pub fn to_text(&self) -> String {
        let mut s = String::from("v:");
        for l in &self.labels {
            s.push(' ');
            s.push_str(l);
        }
        s.push('\n');
        for &e in &self.edges {
            s.push_str("e:");
            for i in e.iter() {
                s.push(' ');
                s.push_str(&self.labels[i]);
            }
            s.push('\n');
        }
        s
    }

    /// One-line form used in CSV rows and logs.
    pub fn compact(&self) -> String {
        self.to_text().trim_end().replace('\n', "; ")
    }
}

impl fmt::Display for Clutter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl fmt::Debug for Clutter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Clutter({})", self.compact())
    }
}

fn render_edge(labels: &[String], e: VertexSet) -> String {
    e.iter().map(|i| labels[i].as_str()).collect::<Vec<_>>().join(",")
}

/// Steps `a` to the next vector of `{0..top}^n` in lexicographic order
/// (last coordinate fastest). Returns `false` after the last one.
pub fn advance_box(a: &mut [u32], top: u32) -> bool {
    for k in (0..a.len()).rev() {
        if a[k] < top {
            a[k] += 1;
            return true;
        }
        a[k] = 0;
    }
    false
}

/// Keeps the inclusion-minimal members, deduplicated, in canonical order.
pub fn minimalize(mut sets: Vec<VertexSet>) -> Vec<VertexSet> {
    sets.sort_by_key(|s| (s.len(), *s));
    sets.dedup();
    let mut out: Vec<VertexSet> = Vec::with_capacity(sets.len());
    for s in sets {
        if !out.iter().any(|m| m.is_subset(s)) {
            out.push(s);
        }
    }
    out.sort();
    out
}

/// Renumbers `sets` onto the vertices they actually use, keeping label order.
fn restrict_to_support(labels: &[String], sets: &[VertexSet]) -> (Vec<String>, Vec<VertexSet>) {
    let support = sets.iter().fold(VertexSet::EMPTY, |a, &s| a.union(s));
    let mut map = vec![usize::MAX; labels.len()];
    let mut kept = Vec::new();
    for i in support.iter() {
        map[i] = kept.len();
        kept.push(labels[i].clone());
    }
    let edges = sets
        .iter()
        .map(|s| s.iter().map(|i| map[i]).collect())
        .collect();
    (kept, edges)
}

/// Parses the clutter text format and drops vertices that lie in no edge.
///
/// ```text
/// # optional comments
/// v: x1 x2 x3
/// e: x1 x2
/// e: x2 x3
/// ```
pub fn parse_clutter(text: &str) -> Result<Clutter> {
    parse_clutter_detailed(text).map(|(c, _)| c)
}

/// Like [`parse_clutter`], also returning the labels of dropped vertices.
pub fn parse_clutter_detailed(text: &str) -> Result<(Clutter, Vec<String>)> {
    let raw = parse_raw(text)?;
    Ok(raw.without_isolated())
}

/// Parses without dropping isolated vertices.
pub fn parse_raw(text: &str) -> Result<Clutter> {
    let mut labels: Option<Vec<String>> = None;
    let mut index: HashMap<String, usize> = HashMap::new();
    let mut edges: Vec<(VertexSet, usize)> = Vec::new();
    let syntax = |line: usize, column: usize, message: String| Error::Syntax { line, column, message };

    for (ln, line) in text.lines().enumerate() {
        let line_no = ln + 1;
        let trimmed = line.trim_start();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let indent = line.len() - trimmed.len();
        let Some((tag, rest)) = trimmed.split_once(':') else {
            return Err(syntax(line_no, indent + 1, "expected `v:` or `e:`".into()));
        };
        let body_offset = indent + tag.len() + 1;
        let tokens = tokens_with_columns(rest, body_offset);
        match tag.trim() {
            "v" => {
                if labels.is_some() {
                    return Err(syntax(line_no, indent + 1, "second `v:` line".into()));
                }
                let mut ls = Vec::new();
                for (col, tok) in tokens {
                    if index.insert(tok.to_string(), ls.len()).is_some() {
                        return Err(syntax(line_no, col, format!("duplicate vertex `{tok}`")));
                    }
                    ls.push(tok.to_string());
                }
                if ls.len() > MAX_VERTICES {
                    return Err(Error::TooLarge { what: "vertex count", size: ls.len(), limit: MAX_VERTICES });
                }
                labels = Some(ls);
            }
            "e" => {
                if labels.is_none() {
                    return Err(syntax(line_no, indent + 1, "`e:` before `v:`".into()));
                }
                if tokens.is_empty() {
                    return Err(syntax(line_no, body_offset + 1, "empty edge".into()));
                }
                let mut e = VertexSet::EMPTY;
                for (col, tok) in tokens {
                    let Some(&i) = index.get(tok) else {
                        return Err(syntax(line_no, col, format!("unknown vertex `{tok}`")));
                    };
                    if e.contains(i) {
                        return Err(syntax(line_no, col, format!("vertex `{tok}` repeated in edge")));
                    }
                    e.insert(i);
                }
                edges.push((e, line_no));
            }
            other => {
                return Err(syntax(line_no, indent + 1, format!("unknown line tag `{other}`")));
            }
        }
    }
    let labels = labels.ok_or_else(|| syntax(1, 1, "missing `v:` line".into()))?;
    Clutter::new(labels, edges.into_iter().map(|(e, _)| e).collect())
}

fn tokens_with_columns(s: &str, offset: usize) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in s.char_indices() {
        if ch.is_whitespace() {
            if let Some(st) = start.take() {
                out.push((offset + st + 1, &s[st..i]));
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(st) = start {
        out.push((offset + st + 1, &s[st..]));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn vertex_set_order_is_lexicographic_on_sorted_lists() {
        let a = VertexSet::from_indices([0, 1]);
        let b = VertexSet::from_indices([0, 2]);
        let c = VertexSet::from_indices([1, 2]);
        let d = VertexSet::from_indices([0]);
        let e = VertexSet::from_indices([0, 1, 5]);
        let mut v = vec![c, e, b, a, d];
        v.sort();
        assert_eq!(v, vec![d, a, e, b, c]);
    }

    #[test]
    fn parse_single_edge() {
        let c = parse_clutter("v: x1 x2\ne: x1 x2").unwrap();
        assert_eq!(c.n(), 2);
        assert_eq!(c.q(), 1);
        assert_eq!(c.edge_labels(c.edges()[0]), vec!["x1", "x2"]);
    }

    #[test]
    fn parse_triangle_canonical_order() {
        let c = parse_clutter("# triangle\nv: x1 x2 x3\ne: x1 x2\ne: x2 x3\ne: x1 x3\n").unwrap();
        assert_eq!(c.to_text(), "v: x1 x2 x3\ne: x1 x2\ne: x1 x3\ne: x2 x3\n");
    }

    #[test]
    fn parse_rejects_comparable_edges() {
        let err = parse_clutter("v: x1 x2\ne: x1\ne: x1 x2").unwrap_err();
        assert_eq!(err, Error::Antichain { smaller: "x1".into(), larger: "x1,x2".into() });
    }

    #[test]
    fn parse_rejects_duplicates_and_syntax() {
        assert_eq!(
            parse_clutter("v: a b\ne: a b\ne: b a").unwrap_err(),
            Error::DuplicateEdge("a,b".into())
        );
        match parse_clutter("v: a b\ne: a c").unwrap_err() {
            Error::Syntax { line, column, .. } => assert_eq!((line, column), (2, 6)),
            e => panic!("{e:?}"),
        }
        assert!(matches!(parse_clutter("e: a").unwrap_err(), Error::Syntax { line: 1, .. }));
        assert!(matches!(parse_clutter("v: a\nx: a").unwrap_err(), Error::Syntax { line: 2, .. }));
        assert!(matches!(parse_clutter("v: a\ne:").unwrap_err(), Error::Syntax { line: 2, .. }));
    }

    #[test]
    fn parse_drops_isolated_vertices() {
        let (c, dropped) = parse_clutter_detailed("v: a b c\ne: a c").unwrap();
        assert_eq!(c.labels(), &["a".to_string(), "c".to_string()]);
        assert_eq!(dropped, vec!["b".to_string()]);
        let raw = parse_raw("v: a b c\ne: a c").unwrap();
        assert_eq!(raw.isolated_vertices(), vec![1]);
    }

    #[test]
    fn incidence_matrix_columns_are_characteristic_vectors() {
        let e = Clutter::from_index_edges(2, &[&[0, 1]]).unwrap();
        let m = e.incidence_matrix();
        assert_eq!((m.rows(), m.cols()), (2, 1));
        assert_eq!(m.column(0), vec![1, 1]);

        let tri = Clutter::from_index_edges(3, &[&[0, 1], &[1, 2], &[0, 2]]).unwrap();
        assert_eq!(tri.incidence_matrix().column_sums(), vec![2, 2, 2]);
    }

    #[test]
    fn minimalize_keeps_minimal_sets() {
        let s = |v: &[usize]| VertexSet::from_indices(v.iter().copied());
        let out = minimalize(vec![s(&[0, 1]), s(&[1]), s(&[0]), s(&[1])]);
        assert_eq!(out, vec![s(&[0]), s(&[1])]);
    }
}
