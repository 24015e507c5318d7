use std::collections::BTreeSet;

use proptest::prelude::*;

use clutterlab::covering::{covering_number, matching_number, weighted_cover_number};
use clutterlab::harness::{check_clutter, emit_report, read_report, CheckOptions, Prop, ReportFormat};
use clutterlab::polyhedra::{fractional_cover_value, fractional_packing_value, int, solve_covering_ilp};
use clutterlab::rees::{integral_closure_membership, power_membership, symbolic_power_membership};
use clutterlab::transform::{graft, is_uniform, minor, minor_by_labels, parallelization};
use clutterlab::{parse_clutter, Clutter, VertexSet};

fn clutter_from_masks(n: usize, raw: Vec<u32>) -> Option<Clutter> {
    let sets: BTreeSet<u32> = raw.into_iter().map(|m| m & ((1 << n) - 1)).filter(|&m| m != 0).collect();
    let minimal: Vec<u32> = sets.iter().copied().filter(|&s| !sets.iter().any(|&t| t != s && t & s == t)).collect();
    let used = minimal.iter().fold(0, |a, &m| a | m);
    let keep: Vec<usize> = (0..n).filter(|i| used >> i & 1 == 1).collect();
    let edges: Vec<Vec<usize>> = minimal
        .iter()
        .map(|&m| keep.iter().enumerate().filter(|(_, &v)| m >> v & 1 == 1).map(|(k, _)| k).collect())
        .collect();
    let refs: Vec<&[usize]> = edges.iter().map(|e| e.as_slice()).collect();
    Clutter::from_index_edges(keep.len(), &refs).ok().filter(|c| c.q() > 0)
}

fn clutter() -> impl Strategy<Value = Clutter> {
    (1usize..=5)
        .prop_flat_map(|n| (Just(n), prop::collection::vec(1u32..32, 1..7)))
        .prop_filter_map("empty family", |(n, raw)| clutter_from_masks(n, raw))
}

fn with_weights(top: u32) -> impl Strategy<Value = (Clutter, Vec<u32>)> {
    clutter().prop_flat_map(move |c| {
        let n = c.n();
        (Just(c), prop::collection::vec(0..=top, n))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn text_round_trip(c in clutter()) {
        prop_assert_eq!(parse_clutter(&c.to_text()).unwrap(), c);
    }

    #[test]
    fn duality_sandwich(c in clutter()) {
        let ones = vec![1; c.n()];
        let lp_cover = fractional_cover_value(&c, &ones).unwrap();
        let lp_pack = fractional_packing_value(&c, &ones).unwrap();
        prop_assert_eq!(&lp_cover, &lp_pack);
        prop_assert!(int(matching_number(&c) as i64) <= lp_pack);
        prop_assert!(lp_cover <= int(covering_number(&c) as i64));
    }

    #[test]
    fn minors_are_monotone(c in clutter(), v in 0usize..5) {
        let v = v % c.n();
        if let Ok(d) = minor(&c, VertexSet::singleton(v), VertexSet::EMPTY) {
            prop_assert!(matching_number(&d) <= matching_number(&c));
            prop_assert!(covering_number(&d) <= covering_number(&c));
        }
        // contraction moves both numbers up
        if let Ok(k) = minor(&c, VertexSet::EMPTY, VertexSet::singleton(v)) {
            prop_assert!(covering_number(&k) >= covering_number(&c));
            prop_assert!(matching_number(&k) >= matching_number(&c));
        }
    }

    #[test]
    fn minors_compose(c in clutter(), a in 0u32..243, b in 0u32..243) {
        // base-3 digits: 0 keep, 1 delete, 2 contract
        let split = |code: u32| {
            let (mut d, mut k) = (Vec::new(), Vec::new());
            let mut x = code;
            for i in 0..c.n() {
                match x % 3 {
                    1 => d.push(c.label(i).to_string()),
                    2 => k.push(c.label(i).to_string()),
                    _ => {}
                }
                x /= 3;
            }
            (d, k)
        };
        let (d1, k1) = split(a);
        let (d2, k2) = split(b);
        let Ok(first) = minor_by_labels(&c, &d1, &k1) else { return Ok(()) };
        let present = |ls: &[String]| ls.iter().filter(|l| first.index_of(l).is_ok()).cloned().collect::<Vec<_>>();
        let (d2, k2): (Vec<String>, Vec<String>) = (
            present(&d2).into_iter().filter(|l| !k1.contains(l) && !d1.contains(l)).collect(),
            present(&k2).into_iter().filter(|l| !k1.contains(l) && !d1.contains(l)).collect(),
        );
        let Ok(seq) = minor_by_labels(&first, &d2, &k2) else { return Ok(()) };
        let all_d: Vec<String> = d1.iter().chain(&d2).cloned().collect();
        let all_k: Vec<String> = k1.iter().chain(&k2).cloned().collect();
        let sim = minor_by_labels(&c, &all_d, &all_k).unwrap();
        prop_assert_eq!(seq.compact(), sim.compact());
    }

    #[test]
    fn parallelization_edge_count((c, w) in with_weights(3)) {
        let cw = parallelization(&c, &w).unwrap();
        let expected: usize = c
            .edges()
            .iter()
            .map(|e| e.iter().map(|i| w[i] as usize).product::<usize>())
            .sum();
        prop_assert_eq!(cw.q(), expected);
    }

    #[test]
    fn cover_weight_matches_ilp((c, w) in with_weights(3)) {
        prop_assert_eq!(weighted_cover_number(&c, &w).unwrap(), solve_covering_ilp(&c, &w).unwrap().value);
    }

    #[test]
    fn power_closure_symbolic_chain((c, a) in with_weights(3), i in 0u32..=3) {
        let p = power_membership(&c, &a, i).unwrap();
        let cl = integral_closure_membership(&c, &a, i).unwrap();
        let s = symbolic_power_membership(&c, &a, i).unwrap();
        prop_assert!(!p || cl);
        prop_assert!(!cl || s);
    }

    #[test]
    fn graft_recovers_clutter(c in clutter()) {
        if is_uniform(&c).is_some() {
            let g = graft(&c).unwrap();
            let fresh: Vec<String> = g.labels().iter().filter(|l| c.index_of(l).is_err()).cloned().collect();
            prop_assert_eq!(minor_by_labels(&g, &fresh, &[] as &[String]).unwrap(), c);
        }
    }

    #[test]
    fn report_round_trip(c in clutter()) {
        let opts = CheckOptions { props: vec![Prop::Covers, Prop::Konig, Prop::Pp, Prop::Ideal], ..CheckOptions::default() };
        let r = check_clutter(&c, &[], &opts).unwrap();
        let bytes = emit_report(std::slice::from_ref(&r), ReportFormat::Json).unwrap();
        prop_assert_eq!(read_report(&bytes).unwrap().reports, vec![r]);
    }
}
