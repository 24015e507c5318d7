//! Membership of a monomial `x^a` in `I^i`, `I^(i)` and the integral closure
//! of `I^i`.

use std::collections::HashSet;

use crate::clutter::{Clutter, VertexSet};
use crate::covering::minimal_vertex_covers;
use crate::error::{check_len, Result};
use crate::polyhedra::{fractional_packing_value, int};

/// `x^a in I^i`: `a` dominates a sum of `i` edge vectors.
pub fn power_membership(c: &Clutter, a: &[u32], i: u32) -> Result<bool> {
    check_len(c.n(), a.len())?;
    Ok(in_power(c.edges(), a, i))
}

pub(crate) fn in_power(edges: &[VertexSet], a: &[u32], i: u32) -> bool {
    struct Search<'a> {
        edges: &'a [VertexSet],
        min_size: u64,
        dead: HashSet<(Vec<u32>, u32, usize)>,
    }
    impl Search<'_> {
        // multisets drawn from edges[j..], nondecreasing index
        fn go(&mut self, a: &mut Vec<u32>, i: u32, j: usize) -> bool {
            if i == 0 {
                return true;
            }
            let total: u64 = a.iter().map(|&x| x as u64).sum();
            if total < i as u64 * self.min_size {
                return false;
            }
            let key = (a.clone(), i, j);
            if self.dead.contains(&key) {
                return false;
            }
            for k in j..self.edges.len() {
                let e = self.edges[k];
                if e.iter().all(|v| a[v] > 0) {
                    e.iter().for_each(|v| a[v] -= 1);
                    let ok = self.go(a, i - 1, k);
                    e.iter().for_each(|v| a[v] += 1);
                    if ok {
                        return true;
                    }
                }
            }
            self.dead.insert(key);
            false
        }
    }
    if i == 0 {
        return true;
    }
    let min_size = edges.iter().map(|e| e.len() as u64).min().unwrap_or(0);
    if edges.is_empty() {
        return false;
    }
    let mut s = Search { edges, min_size, dead: HashSet::new() };
    s.go(&mut a.to_vec(), i, 0)
}

/// `x^a in I^(i)`: every minimal vertex cover `C` has `sum_{x_j in C} a_j >= i`.
pub fn symbolic_power_membership(c: &Clutter, a: &[u32], i: u32) -> Result<bool> {
    check_len(c.n(), a.len())?;
    Ok(in_symbolic(minimal_vertex_covers(c).covers(), a, i))
}

pub(crate) fn in_symbolic(covers: &[VertexSet], a: &[u32], i: u32) -> bool {
    covers.iter().all(|cv| cv.iter().map(|j| a[j] as u64).sum::<u64>() >= i as u64)
}

/// `x^a` in the integral closure of `I^i`: `a in i conv(v_1..v_q) + R_+^n`,
/// equivalently `max { <y,1> : y >= 0, Ay <= a } >= i`.
pub fn integral_closure_membership(c: &Clutter, a: &[u32], i: u32) -> Result<bool> {
    check_len(c.n(), a.len())?;
    if i == 0 {
        return Ok(true);
    }
    Ok(fractional_packing_value(c, a)? >= int(i as i64))
}

#[cfg(test)]
pub(crate) mod oracle {
    use itertools::Itertools;

    use crate::clutter::VertexSet;

    /// Tries every multiset of `i` edges.
    pub fn brute_power(n: usize, edges: &[VertexSet], a: &[u32], i: u32) -> bool {
        if i == 0 {
            return true;
        }
        (0..edges.len()).combinations_with_replacement(i as usize).any(|pick| {
            let mut s = vec![0u32; n];
            for j in pick {
                edges[j].iter().for_each(|v| s[v] += 1);
            }
            s.iter().zip(a).all(|(x, y)| x <= y)
        })
    }

    /// Checks every vertex cover (minimal or not) of the `2^n` subsets.
    pub fn brute_symbolic(n: usize, edges: &[VertexSet], a: &[u32], i: u32) -> bool {
        (0u128..1 << n)
            .map(VertexSet::from_bits)
            .filter(|s| edges.iter().all(|e| e.intersects(*s)))
            .all(|s| s.iter().map(|j| a[j]).sum::<u32>() >= i)
    }
}
