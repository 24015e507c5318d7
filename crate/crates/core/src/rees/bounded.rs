//! Power-bounded checks of `I^i = closure(I^i)` and `I^i = I^(i)`.

use serde::{Deserialize, Serialize};

use super::membership::{in_power, in_symbolic};
use crate::clutter::{advance_box, Clutter, ExponentVector};
use crate::covering::minimal_vertex_covers;
use crate::error::{check_limit, Result};
use crate::polyhedra::{fractional_packing_value, int};

/// Cap on `sum_{i<=k} (i+1)^n` candidate exponent vectors.
pub const MAX_BOX_POINTS: usize = 1 << 22;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundedVerdict {
    CertifiedUpTo(u32),
    Counterexample { a: ExponentVector, i: u32 },
}

impl BoundedVerdict {
    pub fn is_certified(&self) -> bool {
        matches!(self, BoundedVerdict::CertifiedUpTo(_))
    }
}

/// Scans `i = 1..=k` and `a in {0..i}^n` lexicographically for `x^a` in the
/// larger ideal but not in `I^i`. Since `I^i` is closed upwards, the first
/// failure is automatically a minimal generator of the larger ideal.
fn scan(c: &Clutter, k: u32, mut larger: impl FnMut(&[u32], u32) -> bool) -> Result<BoundedVerdict> {
    let n = c.n();
    let total = (1..=k as usize).try_fold(0usize, |acc, i| (i + 1).checked_pow(n as u32).and_then(|p| acc.checked_add(p)));
    check_limit("power-bounded exponent box", total.unwrap_or(usize::MAX), MAX_BOX_POINTS)?;
    for i in 1..=k {
        let mut a = vec![0u32; n];
        loop {
            if !in_power(c.edges(), &a, i) && larger(&a, i) {
                return Ok(BoundedVerdict::Counterexample { a: ExponentVector(a), i });
            }
            if !advance_box(&mut a, i) {
                break;
            }
        }
    }
    Ok(BoundedVerdict::CertifiedUpTo(k))
}

/// `I^i = closure(I^i)` for `i <= k`.
pub fn is_normal_bounded(c: &Clutter, k: u32) -> Result<BoundedVerdict> {
    scan(c, k, |a, i| {
        fractional_packing_value(c, a).expect("dimensions match") >= int(i as i64)
    })
}

/// `I^i = I^(i)` for `i <= k`.
pub fn is_ntf_bounded(c: &Clutter, k: u32) -> Result<BoundedVerdict> {
    let covers = minimal_vertex_covers(c);
    scan(c, k, |a, i| in_symbolic(covers.covers(), a, i))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rees::{is_normal, ReesLimits};

    fn c(n: usize, e: &[&[usize]]) -> Clutter {
        Clutter::from_index_edges(n, e).unwrap()
    }

    fn cx(a: &[u32], i: u32) -> BoundedVerdict {
        BoundedVerdict::Counterexample { a: ExponentVector(a.to_vec()), i }
    }

    #[test]
    fn normal_bounded_examples() {
        assert_eq!(is_normal_bounded(&c(2, &[&[0, 1]]), 3).unwrap(), BoundedVerdict::CertifiedUpTo(3));
        let tt = c(6, &[&[0, 1], &[1, 2], &[0, 2], &[3, 4], &[4, 5], &[3, 5]]);
        assert_eq!(is_normal_bounded(&tt, 3).unwrap(), cx(&[1; 6], 3));
        let c4 = c(4, &[&[0, 1], &[1, 2], &[2, 3], &[0, 3]]);
        assert_eq!(is_normal_bounded(&c4, 3).unwrap(), BoundedVerdict::CertifiedUpTo(3));
    }

    #[test]
    fn ntf_bounded_examples() {
        let t = c(3, &[&[0, 1], &[1, 2], &[0, 2]]);
        assert_eq!(is_ntf_bounded(&t, 2).unwrap(), cx(&[1, 1, 1], 2));
        assert_eq!(is_ntf_bounded(&c(2, &[&[0, 1]]), 4).unwrap(), BoundedVerdict::CertifiedUpTo(4));
        let c4 = c(4, &[&[0, 1], &[1, 2], &[2, 3], &[0, 3]]);
        assert_eq!(is_ntf_bounded(&c4, 3).unwrap(), BoundedVerdict::CertifiedUpTo(3));
    }

    #[test]
    fn bounded_agrees_with_exact_normality() {
        let cases = [
            c(3, &[&[0, 1], &[1, 2], &[0, 2]]),
            c(5, &[&[0, 1], &[1, 2], &[2, 3], &[3, 4], &[0, 4]]),
            c(4, &[&[0, 1, 2], &[1, 2, 3], &[0, 3]]),
            c(5, &[&[0, 1, 2], &[0, 3, 4], &[1, 3], &[2, 4]]),
        ];
        for cl in &cases {
            let exact = is_normal(cl, ReesLimits::default()).unwrap();
            let bounded = is_normal_bounded(cl, 3).unwrap();
            if exact.normal {
                assert!(bounded.is_certified(), "{cl:?}");
            } else {
                let (_, b) = exact.witness.unwrap();
                assert_eq!(bounded.is_certified(), b > 3, "{cl:?}");
            }
        }
    }
}
