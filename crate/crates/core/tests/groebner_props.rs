mod common;

use bei_core::families::{whiskered_star, StarParams};
use bei_core::groebner::{
    buchberger_oracle, enumerate_admissible_paths, initial_ideal, max_induced_matching,
    paper_matching, verify_induced_matching, Monomial, MonomialIdeal,
};
use bei_core::regularity::regularity_bei;
use bei_core::{Graph, PrimeField};
use proptest::prelude::*;
use rand::SeedableRng;

/// `u_π x_i y_j` written out variable by variable.
fn monomial_by_hand(n: usize, path: &[usize]) -> Monomial {
    let (i, j) = (path[0], *path.last().unwrap());
    let x = |v: usize| 1u128 << (v - 1);
    let y = |v: usize| 1u128 << (n + v - 1);
    let mut m = x(i) | y(j);
    for &v in &path[1..path.len() - 1] {
        m |= if v > j { x(v) } else { y(v) };
    }
    m
}

fn minimal(mut ms: Vec<Monomial>) -> Vec<Monomial> {
    ms.sort();
    ms.dedup();
    let mut out: Vec<Monomial> = ms
        .iter()
        .copied()
        .filter(|&m| !ms.iter().any(|&o| o != m && o & !m == 0))
        .collect();
    out.sort();
    out
}

fn brute_matching_bound(ideal: &MonomialIdeal) -> usize {
    let gens = ideal.generators();
    fn go(
        gens: &[Monomial],
        all: &[Monomial],
        from: usize,
        chosen: &mut Vec<Monomial>,
        best: &mut usize,
    ) {
        let union = chosen.iter().fold(0, |a, &e| a | e);
        if all.iter().filter(|&&g| g & !union == 0).count() == chosen.len() {
            *best = (*best).max(chosen.iter().map(|e| e.count_ones() as usize - 1).sum());
        }
        for k in from..gens.len() {
            if gens[k] & union == 0 {
                chosen.push(gens[k]);
                go(gens, all, k + 1, chosen, best);
                chosen.pop();
            }
        }
    }
    let mut best = 0;
    go(gens, gens, 0, &mut Vec::new(), &mut best);
    best
}

#[test]
fn small_matching_examples() {
    let p3 = initial_ideal(&Graph::path(3)).unwrap();
    assert!(verify_induced_matching(&p3, p3.generators()).unwrap());
    assert_eq!(max_induced_matching(&p3).unwrap().bound, 2);
    let k3 = initial_ideal(&Graph::complete(3)).unwrap();
    let m = [k3.x(1) | k3.y(2), k3.x(2) | k3.y(3)];
    assert!(!verify_induced_matching(&k3, &m).unwrap());
    assert!(verify_induced_matching(&k3, &[k3.x(1) | k3.y(3) | k3.x(2)]).is_err());
}

#[test]
fn explicit_matching_beyond_the_exact_range() {
    for (m, n, r) in [(4, 4, 4), (5, 4, 4), (5, 5, 5)] {
        let p = StarParams::new(m, n, r).groebner();
        let ideal = initial_ideal(&whiskered_star(&p).unwrap()).unwrap();
        let matching = paper_matching(&p).unwrap();
        assert!(
            verify_induced_matching(&ideal, &matching).unwrap(),
            "({m},{n},{r})"
        );
        let bound: usize = matching.iter().map(|e| e.count_ones() as usize - 1).sum();
        assert_eq!(bound, 2 * r - 1);
        match max_induced_matching(&ideal) {
            Ok(best) => assert!(best.bound >= 2 * r - 1),
            Err(e) => assert!(matches!(e, bei_core::Error::CapExceeded { .. }), "{e}"),
        }
    }
    assert!(paper_matching(&StarParams::new(3, 3, 3)).is_err());
}

#[test]
fn regularity_ignores_the_labeling() {
    for (m, n, r) in [
        (2, 2, 2),
        (3, 2, 2),
        (2, 3, 2),
        (3, 3, 2),
        (4, 2, 2),
        (4, 4, 2),
        (3, 3, 3),
    ] {
        let p = StarParams::new(m, n, r);
        let a = regularity_bei(&whiskered_star(&p).unwrap(), PrimeField::GF2)
            .unwrap()
            .reg;
        let b = regularity_bei(&whiskered_star(&p.groebner()).unwrap(), PrimeField::GF2)
            .unwrap()
            .reg;
        assert_eq!(a, b, "({m},{n},{r})");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(150))]

    #[test]
    fn paths_match_definition(g in common::arb_graph(7)) {
        let got: Vec<Vec<usize>> = enumerate_admissible_paths(&g).into_iter().map(|p| p.vertices).collect();
        let mut sorted = got.clone();
        sorted.sort();
        prop_assert_eq!(sorted, common::brute_admissible_paths(&g));
        for p in enumerate_admissible_paths(&g) {
            prop_assert!(p.is_admissible_in(&g));
        }
    }

    #[test]
    fn generators_come_from_paths(g in common::arb_graph(8)) {
        let n = g.n();
        let ideal = initial_ideal(&g).unwrap();
        let expected = minimal(common::brute_admissible_paths(&g).iter().map(|p| monomial_by_hand(n, p)).collect());
        let mut got = ideal.generators().to_vec();
        got.sort();
        prop_assert_eq!(got, expected);
        for &m in ideal.generators() {
            let xs: Vec<usize> = (1..=n).filter(|&v| m & ideal.x(v) != 0).collect();
            let ys: Vec<usize> = (1..=n).filter(|&v| m & ideal.y(v) != 0).collect();
            let (i, j) = (xs[0], *ys.last().unwrap());
            prop_assert!(i < j);
            prop_assert!(xs[1..].iter().all(|&v| v > j));
            prop_assert!(ys[..ys.len() - 1].iter().all(|&v| v < i));
            prop_assert!(xs.iter().all(|v| !ys.contains(v)));
        }
    }

    #[test]
    fn closed_form_matches_buchberger(seed in any::<u64>(), n in 2usize..=6) {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let g = common::shuffle(&common::random_piece(&mut rng, n), &mut rng);
        let closed = initial_ideal(&g).unwrap();
        prop_assert_eq!(&buchberger_oracle(&g, PrimeField::GF32003).unwrap(), &closed);
        prop_assert_eq!(&buchberger_oracle(&g, PrimeField::GF2).unwrap(), &closed);
    }

    #[test]
    fn matching_search_is_exact(g in common::arb_graph(6)) {
        let ideal = initial_ideal(&g).unwrap();
        let found = max_induced_matching(&ideal).unwrap();
        prop_assert!(verify_induced_matching(&ideal, &found.edges).unwrap());
        let weight: usize = found.edges.iter().map(|e| e.count_ones() as usize - 1).sum();
        prop_assert_eq!(weight, found.bound);
        prop_assert_eq!(found.bound, brute_matching_bound(&ideal));
    }

    #[test]
    fn matching_bounds_regularity(g in common::arb_graph(8)) {
        let ideal = initial_ideal(&g).unwrap();
        let bound = max_induced_matching(&ideal).unwrap().bound;
        prop_assert!(bound <= regularity_bei(&g, PrimeField::GF2).unwrap().reg);
    }

    #[test]
    fn regularity_survives_relabeling(g in common::arb_graph(8), seed in any::<u64>()) {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let h = common::shuffle(&g, &mut rng);
        prop_assert_eq!(
            regularity_bei(&g, PrimeField::GF2).unwrap().reg,
            regularity_bei(&h, PrimeField::GF2).unwrap().reg
        );
    }
}
