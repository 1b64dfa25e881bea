//! The acceptance gate: one test per criterion, each printing a single
//! `ACCEPTANCE <n> <name>: PASS` line when its exact checks hold (run with
//! `--nocapture` to see the lines). Every check is an exact identity or a
//! frozen oracle; there are no tolerances.

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use gds_core::certify::{certify_cochain_equals_gds, certify_rg_pass, certify_wotr, certify_wtr};
use gds_core::cochain::{non_coboundary_search, verify_half_delta, GroupCochain};
use gds_core::corpus;
use gds_core::gauge::{dual_amplitude, gauge_map, gauged_state_amplitude, verify_ocdual};
use gds_core::phase::{decompose, gds_disentangler, PhasePolynomial};
use gds_core::subdivide::{barycentric, halperin_toledo_chain, sphere_chi, sw_class};
use gds_core::{Simplex, SimplicialComplex, Vertex};

const MANIFOLDS: [&str; 6] = ["s2", "s2tet", "s3", "rp2", "t2", "cp2"];

fn load(name: &str) -> SimplicialComplex {
    corpus::load(name).unwrap()
}

fn vertices_of(c: &SimplicialComplex) -> Vec<Vertex> {
    c.vertices().into_iter().cloned().collect()
}

fn down_set(verts: &[Vertex], mask: u32) -> BTreeSet<Vertex> {
    verts.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, v)| v.clone()).collect()
}

#[test]
fn acceptance_01_halperin_toledo_boundary_identity() {
    for name in ["s2", "rp2", "t2", "s3", "cp2"] {
        let b = barycentric(&load(name)).unwrap();
        let d = b.base.dim();
        for k in 1..=d {
            let lhs = halperin_toledo_chain(&b, k).unwrap().boundary();
            let rhs = halperin_toledo_chain(&b, k - 1).unwrap().scale(sphere_chi(d - k));
            assert_eq!(lhs, rhs, "{name}: dC_{k} = chi(S^{})*C_{}", d - k, k - 1);
        }
    }
    println!("ACCEPTANCE 1 halperin-toledo integral boundary identity: PASS");
}

#[test]
fn acceptance_02_flip_commutator_is_euler_constant() {
    for name in MANIFOLDS {
        let c = load(name);
        let comm = gds_disentangler(&c, 1).unwrap().flip_commutator();
        let expected = c.euler_characteristic().rem_euclid(2) as u32;
        assert_eq!(
            comm.constant_value(),
            Some(expected),
            "{name}: commutator must be the constant pi*chi"
        );
    }
    println!("ACCEPTANCE 2 flip commutator equals pi*chi(L): PASS");
}

#[test]
fn acceptance_03_cochain_circuit_equals_gds() {
    for name in MANIFOLDS {
        let b = barycentric(&load(name)).unwrap();
        let cert = certify_cochain_equals_gds(&b).unwrap();
        assert!(cert.verdict, "{name}:\n{cert}");
    }
    // negative control: a complex with boundary fails the link-parity gate
    let b = barycentric(&load("tri")).unwrap();
    assert!(!certify_cochain_equals_gds(&b).unwrap().verdict);
    println!("ACCEPTANCE 3 omega-circuits on flag chains equal the disentangler: PASS");
}

fn random_poly(rng: &mut ChaCha8Rng) -> PhasePolynomial {
    let n = rng.gen_range(1..=12u32);
    let monomials = rng.gen_range(1..=18u32);
    let mut p = PhasePolynomial::zero(1).unwrap();
    for _ in 0..monomials {
        let mask: u32 = rng.gen_range(0..(1u32 << n));
        let ids: Vec<u32> = (0..n).filter(|i| mask >> i & 1 == 1).map(|i| i + 1).collect();
        p.add_coeff(Simplex::from_ids(&ids).unwrap(), 1);
    }
    p
}

#[test]
fn acceptance_04_decomposition_soundness() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x6d5);
    for trial in 0..1000 {
        let p = random_poly(&mut rng);
        let q = p.add(&p.flip_substitute()).unwrap();
        assert!(q.flip_commutator().is_zero());
        let desc = decompose(&q).unwrap();
        let report = desc.closedness();
        assert!(
            report.closed_reduced.iter().all(|&b| b),
            "trial {trial}: symmetrized polynomial must decompose into closed chains"
        );
        assert_eq!(desc.recompose().unwrap(), q, "trial {trial}: exact round-trip");
    }
    for trial in 0..1000 {
        let mut p = random_poly(&mut rng);
        while p.flip_commutator().is_zero() {
            p = random_poly(&mut rng);
        }
        let desc = decompose(&p).unwrap();
        assert_eq!(desc.recompose().unwrap(), p, "trial {trial}: exact round-trip");
        let report = desc.closedness();
        assert!(
            !report.closed_reduced.iter().all(|&b| b),
            "trial {trial}: a non-symmetric polynomial must expose an open boundary"
        );
    }
    println!("ACCEPTANCE 4 decomposition soundness on 2x1000 random polynomials: PASS");
}

#[test]
fn acceptance_05_exhaustive_amplitude_oracle() {
    let mut complexes: Vec<(String, SimplicialComplex)> = corpus::ENTRIES
        .iter()
        .map(|e| (e.name.to_string(), corpus::load(e.name).unwrap()))
        .collect();
    complexes.push(("bary(s2tet)".into(), barycentric(&load("s2tet")).unwrap().derived));
    complexes.push(("bary(tri)".into(), barycentric(&load("tri")).unwrap().derived));
    for (name, c) in &complexes {
        let verts = vertices_of(c);
        assert!(verts.len() <= 16, "{name}: oracle is exhaustive");
        let p = gds_disentangler(c, 1).unwrap();
        for mask in 0..(1u32 << verts.len()) {
            let down = down_set(&verts, mask);
            let parity = p.evaluate(&down);
            let amp = dual_amplitude(c, &down);
            assert_eq!(amp == -1, parity == 1, "{name}: mask {mask:b}");
        }
    }
    println!(
        "ACCEPTANCE 5 evaluate tables match (-1)^chi amplitudes on {} complexes: PASS",
        complexes.len()
    );
}

#[test]
fn acceptance_06_gauged_amplitudes_on_boundary_4_simplex() {
    let c = load("s3");
    let verts = vertices_of(&c);
    assert_eq!(verts.len(), 5);
    let mut images = BTreeSet::new();
    for mask in 0..32u32 {
        let down = down_set(&verts, mask);
        let z = gauge_map(&c, &down);
        // sign i^{chi(E)}: the dual surface of any nonzero coboundary here
        // is a 2-sphere (chi = 2), so the empty field gets +2 and every
        // other trivial-sector field gets -2
        let expected = if z.is_empty() { 2 } else { -2 };
        assert_eq!(gauged_state_amplitude(&c, &z), expected, "mask {mask:05b}");
        images.insert(z);
    }
    assert_eq!(images.len(), 16, "global flip pairs the 32 spin configurations");
    println!("ACCEPTANCE 6 gauged amplitudes on the 3-sphere have sign i^chi(E): PASS");
}

#[test]
fn acceptance_07_ocdual_exhaustive() {
    let oct = verify_ocdual(&load("s2")).unwrap();
    assert!(oct.passes);
    assert_eq!((oct.configurations, oct.checks), (64, 384));
    let tet = verify_ocdual(&load("s2tet")).unwrap();
    assert!(tet.passes);
    assert_eq!((tet.configurations, tet.checks), (16, 64));
    println!("ACCEPTANCE 7 local Euler deletion identity, exhaustively: PASS");
}

#[test]
fn acceptance_08_certificate_reductions() {
    for name in MANIFOLDS {
        let b = barycentric(&load(name)).unwrap();
        let cert = certify_wtr(&b).unwrap();
        assert!(cert.verdict, "{name} wtr:\n{cert}");
    }

    let cert = certify_wotr(&barycentric(&load("s3")).unwrap()).unwrap();
    assert!(cert.verdict, "{cert}");
    let residual = cert.sections.iter().find(|s| s.label == "residual").unwrap();
    assert_eq!(residual.body, "residual: identity\n");

    let cert = certify_wotr(&barycentric(&load("cp2")).unwrap()).unwrap();
    assert!(cert.verdict, "{cert}");
    let residual = cert.sections.iter().find(|s| s.label == "residual").unwrap();
    assert!(residual.body.contains("even layer product V_0 V_2 V_4: true"));
    for k in [0, 2, 4] {
        assert!(residual.body.contains(&format!("V_{k}: nontrivial class")));
    }
    println!("ACCEPTANCE 8 wtr on all manifolds; wotr: S3 to identity, CP2 to V_0 V_2 V_4: PASS");
}

#[test]
fn acceptance_09_stiefel_whitney_pattern() {
    for name in MANIFOLDS {
        let entry = corpus::get(name).unwrap();
        let b = barycentric(&load(name)).unwrap();
        for (k, &expected) in entry.sw_nontrivial.iter().enumerate() {
            let (_, witness) = sw_class(&b, k as i64).unwrap();
            assert_eq!(
                !witness.is_trivial(),
                expected,
                "{name}: class of C_{k} vs recorded metadata"
            );
        }
    }
    println!("ACCEPTANCE 9 stiefel-whitney class pattern matches metadata: PASS");
}

#[test]
fn acceptance_10_group_cochain_identities() {
    for k in 0..=6 {
        let w = GroupCochain::omega(k);
        assert!(w.is_cocycle(), "delta omega_{k} = 0");
        assert!(w.is_homogeneous(), "omega_{k} homogeneous");
    }
    for k in 0..=2 {
        let check = verify_half_delta(k).unwrap();
        assert!(check.passes, "halving at even degree {}", 2 * k);
        assert_eq!(check.inputs, 1 << (2 * k + 3), "exhaustive over all tuples");
    }
    for k in 0..=3 {
        assert!(!non_coboundary_search(k).unwrap().preimage_found);
    }
    println!("ACCEPTANCE 10 group-cochain identities (cocycle, homogeneity, halving): PASS");
}

#[test]
fn acceptance_11_rg_pass_lands_on_barycentric() {
    for name in ["rp2", "s3"] {
        let cert = certify_rg_pass(&load(name)).unwrap();
        assert!(cert.verdict, "{name}:\n{cert}");
        let moves = cert.sections.iter().find(|s| s.label == "moves").unwrap();
        assert_eq!(moves.body.lines().count(), 25, "{name}: move count");
        assert!(moves.body.lines().all(|l| l.ends_with("flip-symmetric: true")));
        let final_state = cert.sections.iter().find(|s| s.label == "final state").unwrap();
        assert!(final_state.body.contains("equals barycentric subdivision: true"));
    }
    println!("ACCEPTANCE 11 refinement pass reaches the barycentric subdivision: PASS");
}
