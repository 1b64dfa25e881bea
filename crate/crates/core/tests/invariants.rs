//! Property tests for the structural invariants: randomized inputs, exact
//! identities. Complexes are drawn from the corpus; chains and polynomials
//! are built from raw index/coefficient vectors reduced modulo the available
//! ranges, which keeps the strategies simple and shrinkable.

use std::collections::BTreeSet;

use proptest::prelude::*;

use gds_core::corpus;
use gds_core::gauge::gauge_map;
use gds_core::homology::{homology_solve, HomologyWitness};
use gds_core::phase::{decompose, PhasePolynomial};
use gds_core::subdivide::{
    barycentric, canonical_image, primed_chain, prism_chain, transport_through_cascade,
};
use gds_core::{Chain, Simplex, SimplicialComplex, Vertex};

const POOL: [&str; 4] = ["s2tet", "s2", "rp2", "t2"];

fn pool_complex(idx: usize) -> SimplicialComplex {
    corpus::load(POOL[idx % POOL.len()]).unwrap()
}

/// A chain of the given dimension with support selected by `picks`, each
/// entry an (index into the k-simplices, coefficient) pair.
fn chain_from_picks(
    complex: &SimplicialComplex,
    dim: i64,
    modulus: u32,
    picks: &[(usize, i64)],
) -> Chain {
    let simplices = complex.k_simplices(dim);
    let mut c = Chain::zero(dim, modulus);
    if simplices.is_empty() {
        return c;
    }
    for &(i, coeff) in picks {
        c.add_term(simplices[i % simplices.len()].clone(), coeff).unwrap();
    }
    c
}

fn poly_from_masks(m: u32, masks: &[u8]) -> PhasePolynomial {
    let mut p = PhasePolynomial::zero(m).unwrap();
    for &mask in masks {
        let ids: Vec<u32> = (0..8).filter(|i| mask >> i & 1 == 1).map(|i| i + 1).collect();
        p.add_coeff(Simplex::from_ids(&ids).unwrap(), 1);
    }
    p
}

fn down_set(mask: u8) -> BTreeSet<Vertex> {
    (0..8).filter(|i| mask >> i & 1 == 1).map(|i| Vertex::base(i + 1)).collect()
}

proptest! {
    #[test]
    fn boundary_squares_to_zero(
        idx in 0usize..POOL.len(),
        dim_pick in 0i64..=2,
        modulus in prop::sample::select(vec![0u32, 2, 5]),
        picks in prop::collection::vec((any::<usize>(), -3i64..=3), 0..12),
    ) {
        let complex = pool_complex(idx);
        let dim = dim_pick.min(complex.dim());
        let c = chain_from_picks(&complex, dim, modulus, &picks);
        prop_assert!(c.boundary().boundary().is_zero());
    }

    #[test]
    fn euler_characteristic_is_additive(
        idx in 0usize..POOL.len(),
        facet_picks_a in prop::collection::vec(any::<usize>(), 0..8),
        facet_picks_b in prop::collection::vec(any::<usize>(), 0..8),
    ) {
        let complex = pool_complex(idx);
        let facets: Vec<&Simplex> = complex.k_simplices(complex.dim());
        let build = |list: Vec<Simplex>| -> SimplicialComplex {
            if list.is_empty() {
                SimplicialComplex::empty()
            } else {
                SimplicialComplex::from_facets(&list).unwrap()
            }
        };
        let select = |picks: &[usize]| -> SimplicialComplex {
            build(picks.iter().map(|&i| facets[i % facets.len()].clone()).collect())
        };
        let a = select(&facet_picks_a);
        let b = select(&facet_picks_b);
        let union = build(a.simplices().chain(b.simplices()).cloned().collect());
        let meet = build(a.simplices().filter(|s| b.contains(s)).cloned().collect());
        prop_assert_eq!(
            a.euler_characteristic() + b.euler_characteristic(),
            union.euler_characteristic() + meet.euler_characteristic()
        );
    }

    #[test]
    fn evaluate_is_additive(
        m in 1u32..=4,
        masks_p in prop::collection::vec(any::<u8>(), 0..10),
        masks_q in prop::collection::vec(any::<u8>(), 0..10),
        point in any::<u8>(),
    ) {
        let p = poly_from_masks(m, &masks_p);
        let q = poly_from_masks(m, &masks_q);
        let down = down_set(point);
        let sum = p.add(&q).unwrap().evaluate(&down);
        prop_assert_eq!(sum, (p.evaluate(&down) + q.evaluate(&down)) % (1 << m));
    }

    #[test]
    fn flip_substitution_is_an_involution(
        m in 1u32..=4,
        masks in prop::collection::vec(any::<u8>(), 0..10),
    ) {
        let p = poly_from_masks(m, &masks);
        prop_assert_eq!(p.flip_substitute().flip_substitute(), p);
    }

    #[test]
    fn decompose_recompose_round_trip(
        masks in prop::collection::vec(any::<u8>(), 0..12),
    ) {
        let p = poly_from_masks(1, &masks);
        let desc = decompose(&p).unwrap();
        prop_assert_eq!(desc.recompose().unwrap(), p);
    }

    #[test]
    fn prism_identity(
        idx in 0usize..POOL.len(),
        dim_pick in 0i64..=2,
        picks in prop::collection::vec((any::<usize>(), -3i64..=3), 0..10),
    ) {
        let complex = pool_complex(idx);
        let dim = dim_pick.min(complex.dim());
        let c = chain_from_picks(&complex, dim, 0, &picks);
        let lhs = prism_chain(&c).boundary().add(&prism_chain(&c.boundary())).unwrap();
        let rhs = c.sub(&primed_chain(&c)).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn boundaries_solve_as_trivial_with_exact_witness(
        idx in 0usize..POOL.len(),
        dim_pick in 1i64..=2,
        picks in prop::collection::vec((any::<usize>(), 0i64..=1), 0..10),
    ) {
        let complex = pool_complex(idx);
        let dim = dim_pick.min(complex.dim());
        let filler = chain_from_picks(&complex, dim, 2, &picks);
        let cycle = filler.boundary();
        match homology_solve(&complex, &cycle).unwrap() {
            HomologyWitness::Trivial { witness } => {
                prop_assert_eq!(witness.boundary().mod2(), cycle);
            }
            HomologyWitness::Nontrivial { .. } => {
                prop_assert!(false, "a boundary reported as essential");
            }
        }
    }

    #[test]
    fn gauge_map_is_global_flip_invariant(
        idx in 0usize..POOL.len(),
        mask in any::<u8>(),
    ) {
        let complex = pool_complex(idx);
        let verts: Vec<Vertex> = complex.vertices().into_iter().cloned().collect();
        let inside: BTreeSet<Vertex> = verts
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, v)| v.clone())
            .collect();
        let outside: BTreeSet<Vertex> =
            verts.iter().filter(|v| !inside.contains(*v)).cloned().collect();
        prop_assert_eq!(gauge_map(&complex, &inside), gauge_map(&complex, &outside));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn cascade_transport_matches_canonical_image(
        dim_pick in 0i64..=2,
        picks in prop::collection::vec((any::<usize>(), 0i64..=1), 0..8),
    ) {
        let complex = pool_complex(0);
        let bary = barycentric(&complex).unwrap();
        let c = chain_from_picks(&complex, dim_pick, 2, &picks);
        let via_moves = transport_through_cascade(&complex, &c).unwrap();
        prop_assert_eq!(via_moves, canonical_image(&c, &bary).unwrap());
    }
}
