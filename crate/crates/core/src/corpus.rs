//! The built-in test corpus: small named triangulations with frozen
//! invariants.
//!
//! Six closed manifolds (two 2-spheres, the 3-sphere, the projective plane,
//! the torus, the complex projective plane) plus two deliberately broken
//! complexes for exercising failure paths. The recorded metadata (Euler
//! characteristic, mod-2 Betti numbers, Stiefel–Whitney pattern) is
//! re-derived by the library in tests, so the table is an oracle, not a
//! cache.

use crate::fileio::parse_complex;
use crate::simplex::SimplicialComplex;
use crate::{Error, Result};

#[derive(Debug, Clone)]
pub struct CorpusEntry {
    pub name: &'static str,
    pub title: &'static str,
    /// Facet file contents (the same text format `fileio::parse_complex`
    /// reads from disk).
    pub facets: &'static str,
    pub dim: i64,
    pub euler: i64,
    pub betti: &'static [usize],
    pub is_manifold: bool,
    /// Expected nontriviality of the mod-2 flag class C_k for k = 0..=dim
    /// (empty for the non-manifolds, where the classes are not defined).
    pub sw_nontrivial: &'static [bool],
}

pub const ENTRIES: &[CorpusEntry] = &[
    CorpusEntry {
        name: "s2",
        title: "octahedron 2-sphere",
        facets: include_str!("../data/s2.facets"),
        dim: 2,
        euler: 2,
        betti: &[1, 0, 1],
        is_manifold: true,
        sw_nontrivial: &[false, false, true],
    },
    CorpusEntry {
        name: "s2tet",
        title: "tetrahedron boundary 2-sphere",
        facets: include_str!("../data/s2tet.facets"),
        dim: 2,
        euler: 2,
        betti: &[1, 0, 1],
        is_manifold: true,
        sw_nontrivial: &[false, false, true],
    },
    CorpusEntry {
        name: "s3",
        title: "4-simplex boundary 3-sphere",
        facets: include_str!("../data/s3.facets"),
        dim: 3,
        euler: 0,
        betti: &[1, 0, 0, 1],
        is_manifold: true,
        sw_nontrivial: &[false, false, false, true],
    },
    CorpusEntry {
        name: "rp2",
        title: "6-vertex projective plane",
        facets: include_str!("../data/rp2.facets"),
        dim: 2,
        euler: 1,
        betti: &[1, 1, 1],
        is_manifold: true,
        sw_nontrivial: &[true, true, true],
    },
    CorpusEntry {
        name: "t2",
        title: "7-vertex torus",
        facets: include_str!("../data/t2.facets"),
        dim: 2,
        euler: 0,
        betti: &[1, 2, 1],
        is_manifold: true,
        sw_nontrivial: &[false, false, true],
    },
    CorpusEntry {
        name: "cp2",
        title: "9-vertex complex projective plane",
        facets: include_str!("../data/cp2.facets"),
        dim: 4,
        euler: 3,
        betti: &[1, 0, 1, 0, 1],
        is_manifold: true,
        sw_nontrivial: &[true, false, true, false, true],
    },
    CorpusEntry {
        name: "fan3",
        title: "three triangles on a shared edge (non-manifold)",
        facets: include_str!("../data/fan3.facets"),
        dim: 2,
        euler: 1,
        betti: &[1, 0, 0],
        is_manifold: false,
        sw_nontrivial: &[],
    },
    CorpusEntry {
        name: "tri",
        title: "single solid triangle (boundary, so link checks fail)",
        facets: include_str!("../data/tri.facets"),
        dim: 2,
        euler: 1,
        betti: &[1, 0, 0],
        is_manifold: false,
        sw_nontrivial: &[],
    },
];

pub fn get(name: &str) -> Result<&'static CorpusEntry> {
    ENTRIES
        .iter()
        .find(|e| e.name == name)
        .ok_or_else(|| Error::NotFound(format!("no corpus entry named {name:?}")))
}

pub fn load(name: &str) -> Result<SimplicialComplex> {
    parse_complex(get(name)?.facets)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::homology::betti_z2;

    #[test]
    fn metadata_rederives() {
        for entry in ENTRIES {
            let c = load(entry.name).unwrap();
            assert_eq!(c.dim(), entry.dim, "{}: dimension", entry.name);
            assert_eq!(c.euler_characteristic(), entry.euler, "{}: euler", entry.name);
            assert_eq!(betti_z2(&c), entry.betti, "{}: betti", entry.name);
            assert!(c.is_connected(), "{}: connected", entry.name);
        }
    }

    #[test]
    fn manifold_flags_rederive() {
        for entry in ENTRIES {
            let c = load(entry.name).unwrap();
            assert_eq!(
                c.manifold_check().passes,
                entry.is_manifold,
                "{}: manifold check",
                entry.name
            );
        }
    }

    #[test]
    fn frozen_face_counts() {
        assert_eq!(load("s2").unwrap().f_vector(), vec![6, 12, 8]);
        assert_eq!(load("s2tet").unwrap().f_vector(), vec![4, 6, 4]);
        assert_eq!(load("s3").unwrap().f_vector(), vec![5, 10, 10, 5]);
        assert_eq!(load("rp2").unwrap().f_vector(), vec![6, 15, 10]);
        assert_eq!(load("t2").unwrap().f_vector(), vec![7, 21, 14]);
        assert_eq!(load("cp2").unwrap().f_vector(), vec![9, 36, 84, 90, 36]);
        assert_eq!(load("fan3").unwrap().f_vector(), vec![5, 7, 3]);
        assert_eq!(load("tri").unwrap().f_vector(), vec![3, 3, 1]);
    }

    #[test]
    fn unknown_name_errors() {
        assert!(get("klein").is_err());
    }
}
