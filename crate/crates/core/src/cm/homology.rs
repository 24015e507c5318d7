//! Reduced simplicial homology by sparse elimination of boundary matrices.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use super::SimplicialComplex;
use crate::clutter::VertexSet;
use crate::error::Result;

/// Cap on the total number of faces of a complex whose homology is computed.
pub const MAX_FACES: usize = 1 << 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Field {
    Q,
    F2,
}

impl std::str::FromStr for Field {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "q" | "Q" => Ok(Field::Q),
            "f2" | "F2" => Ok(Field::F2),
            _ => Err(format!("unknown field '{s}' (expected q or f2)")),
        }
    }
}

impl std::fmt::Display for Field {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Field::Q => "q",
            Field::F2 => "f2",
        })
    }
}

/// Reduced Betti numbers; `betti[k + 1]` is the rank of `H~_k` for
/// `k = -1..=dim`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomologyProfile {
    pub field: Field,
    pub betti: Vec<usize>,
}

impl HomologyProfile {
    /// Rank of `H~_k`.
    pub fn reduced(&self, k: i32) -> usize {
        usize::try_from(k + 1).ok().and_then(|i| self.betti.get(i).copied()).unwrap_or(0)
    }

    /// `sum_k (-1)^k betti_k`, starting at `k = -1`.
    pub fn euler_characteristic(&self) -> i64 {
        self.betti
            .iter()
            .enumerate()
            .map(|(i, &b)| if i % 2 == 1 { b as i64 } else { -(b as i64) })
            .sum()
    }
}

pub fn reduced_homology(complex: &SimplicialComplex, field: Field) -> Result<HomologyProfile> {
    let faces = complex.faces_by_size(MAX_FACES)?;
    let top = faces.len();
    let index: Vec<HashMap<VertexSet, usize>> =
        faces.iter().map(|fs| fs.iter().enumerate().map(|(i, &f)| (f, i)).collect()).collect();
    // ranks[s] = rank of the boundary from size-s faces to size-(s-1) faces
    let mut ranks = vec![0usize; top + 1];
    for s in 1..top {
        let rows: Vec<Vec<(usize, i8)>> = faces[s]
            .iter()
            .map(|&f| {
                let mut row: Vec<(usize, i8)> = f
                    .iter()
                    .enumerate()
                    .map(|(pos, v)| (index[s - 1][&f.without(v)], if pos % 2 == 0 { 1 } else { -1 }))
                    .collect();
                row.sort_unstable_by_key(|e| e.0);
                row
            })
            .collect();
        ranks[s] = match field {
            Field::F2 => rank_f2(&rows),
            Field::Q => rank_q(&rows),
        };
    }
    let betti = (0..top).map(|s| faces[s].len() - ranks[s] - ranks[s + 1]).collect();
    Ok(HomologyProfile { field, betti })
}

fn rank_f2(rows: &[Vec<(usize, i8)>]) -> usize {
    let mut pivots: HashMap<usize, Vec<usize>> = HashMap::new();
    for r in rows {
        let mut row: Vec<usize> = r.iter().map(|e| e.0).collect();
        while let Some(&lead) = row.first() {
            let Some(p) = pivots.get(&lead) else {
                pivots.insert(lead, row);
                break;
            };
            row = xor(&row, p);
        }
    }
    pivots.len()
}

fn xor(a: &[usize], b: &[usize]) -> Vec<usize> {
    let (mut i, mut j) = (0, 0);
    let mut out = Vec::with_capacity(a.len() + b.len());
    while i < a.len() || j < b.len() {
        match (a.get(i), b.get(j)) {
            (Some(x), Some(y)) if x == y => {
                i += 1;
                j += 1;
            }
            (Some(x), Some(y)) if x < y => {
                out.push(*x);
                i += 1;
            }
            (Some(_), Some(y)) => {
                out.push(*y);
                j += 1;
            }
            (Some(x), None) => {
                out.push(*x);
                i += 1;
            }
            (None, Some(y)) => {
                out.push(*y);
                j += 1;
            }
            (None, None) => unreachable!(),
        }
    }
    out
}

/// Integer coefficients for fraction-free elimination; `None` on overflow.
trait Coeff: Clone + PartialEq + Sized {
    fn from_i8(v: i8) -> Self;
    fn is_zero(&self) -> bool;
    fn mul_sub(a: &Self, x: &Self, b: &Self, y: &Self) -> Option<Self>;
    fn gcd(&self, other: &Self) -> Self;
    fn div_exact(&self, d: &Self) -> Self;
    fn is_unit(&self) -> bool;
}

impl Coeff for i128 {
    fn from_i8(v: i8) -> Self {
        v as i128
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn mul_sub(a: &Self, x: &Self, b: &Self, y: &Self) -> Option<Self> {
        a.checked_mul(*x)?.checked_sub(b.checked_mul(*y)?)
    }
    fn gcd(&self, other: &Self) -> Self {
        Integer::gcd(self, other)
    }
    fn div_exact(&self, d: &Self) -> Self {
        self / d
    }
    fn is_unit(&self) -> bool {
        self.abs() == 1
    }
}

impl Coeff for BigInt {
    fn from_i8(v: i8) -> Self {
        BigInt::from(v)
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn mul_sub(a: &Self, x: &Self, b: &Self, y: &Self) -> Option<Self> {
        Some(a * x - b * y)
    }
    fn gcd(&self, other: &Self) -> Self {
        Integer::gcd(self, other)
    }
    fn div_exact(&self, d: &Self) -> Self {
        self / d
    }
    fn is_unit(&self) -> bool {
        self.abs() == BigInt::from(1)
    }
}

fn rank_q(rows: &[Vec<(usize, i8)>]) -> usize {
    rank_exact::<i128>(rows).unwrap_or_else(|| rank_exact::<BigInt>(rows).expect("big integers do not overflow"))
}

fn rank_exact<T: Coeff>(rows: &[Vec<(usize, i8)>]) -> Option<usize> {
    let mut pivots: HashMap<usize, Vec<(usize, T)>> = HashMap::new();
    for r in rows {
        let mut row: Vec<(usize, T)> = r.iter().map(|&(c, v)| (c, T::from_i8(v))).collect();
        while let Some((lead, _)) = row.first() {
            let Some(p) = pivots.get(lead) else {
                let lead = *lead;
                pivots.insert(lead, row);
                break;
            };
            row = eliminate(&row, p)?;
        }
    }
    Some(pivots.len())
}

/// `p_lead * row - row_lead * p`, divided by the content.
fn eliminate<T: Coeff>(row: &[(usize, T)], p: &[(usize, T)]) -> Option<Vec<(usize, T)>> {
    let a = &p[0].1;
    let b = &row[0].1;
    let zero = T::from_i8(0);
    let (mut i, mut j) = (1, 1);
    let mut out: Vec<(usize, T)> = Vec::with_capacity(row.len() + p.len());
    while i < row.len() || j < p.len() {
        let (col, x, y) = match (row.get(i), p.get(j)) {
            (Some(r), Some(q)) if r.0 == q.0 => {
                i += 1;
                j += 1;
                (r.0, &r.1, &q.1)
            }
            (Some(r), Some(q)) if r.0 < q.0 => {
                i += 1;
                (r.0, &r.1, &zero)
            }
            (Some(_), Some(q)) | (None, Some(q)) => {
                j += 1;
                (q.0, &zero, &q.1)
            }
            (Some(r), None) => {
                i += 1;
                (r.0, &r.1, &zero)
            }
            (None, None) => unreachable!(),
        };
        let v = T::mul_sub(a, x, b, y)?;
        if !v.is_zero() {
            out.push((col, v));
        }
    }
    let g = out.iter().fold(zero, |g, (_, v)| g.gcd(v));
    if !g.is_zero() && !g.is_unit() {
        for e in out.iter_mut() {
            e.1 = e.1.div_exact(&g);
        }
    }
    Some(out)
}
