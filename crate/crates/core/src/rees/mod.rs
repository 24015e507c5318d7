//! Rees algebra of an edge ideal: the Rees cone, its Hilbert basis, and
//! membership in ordinary powers, symbolic powers and integral closures.

mod bounded;
mod hilbert;
mod intmat;
mod membership;

pub use bounded::{is_normal_bounded, is_ntf_bounded, BoundedVerdict, MAX_BOX_POINTS};
pub use hilbert::{hilbert_basis, is_normal, HilbertBasis, NormalVerdict};
pub use membership::{integral_closure_membership, power_membership, symbolic_power_membership};

use crate::clutter::Clutter;

/// Size limits for Hilbert basis computations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ReesLimits {
    pub max_vertices: usize,
    pub max_edges: usize,
}

impl Default for ReesLimits {
    fn default() -> Self {
        ReesLimits { max_vertices: 8, max_edges: 12 }
    }
}

/// The generators `(v_1,1),...,(v_q,1), e_1,...,e_n` in `Z^{n+1}`; the last
/// coordinate is the degree in `t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReesCone {
    n: usize,
    q: usize,
    generators: Vec<Vec<i64>>,
}

impl ReesCone {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn generators(&self) -> &[Vec<i64>] {
        &self.generators
    }

    pub fn dim(&self) -> usize {
        self.n + 1
    }
}

pub fn rees_cone(c: &Clutter) -> ReesCone {
    let n = c.n();
    let mut generators = Vec::with_capacity(c.q() + n);
    for e in c.edges() {
        let mut g: Vec<i64> = (0..n).map(|i| e.contains(i) as i64).collect();
        g.push(1);
        generators.push(g);
    }
    for i in 0..n {
        let mut g = vec![0; n + 1];
        g[i] = 1;
        generators.push(g);
    }
    ReesCone { n, q: c.q(), generators }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cone_generators() {
        let e = Clutter::from_index_edges(2, &[&[0, 1]]).unwrap();
        assert_eq!(rees_cone(&e).generators(), &[vec![1, 1, 1], vec![1, 0, 0], vec![0, 1, 0]]);
        let t = Clutter::from_index_edges(3, &[&[0, 1], &[1, 2], &[0, 2]]).unwrap();
        let cone = rees_cone(&t);
        assert_eq!(cone.generators().len(), 6);
        assert_eq!(cone.dim(), 4);
        let empty = Clutter::new(vec!["a".into(), "b".into()], vec![]).unwrap();
        assert_eq!(rees_cone(&empty).generators(), &[vec![1, 0, 0], vec![0, 1, 0]]);
    }
}
