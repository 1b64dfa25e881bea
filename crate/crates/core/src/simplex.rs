//! Abstract simplicial complexes over canonical vertex labels.
//!
//! Vertices come in three flavors: base vertices (plain integer ids),
//! barycenters (labeled by the base simplex they subdivide, so derived
//! complexes get reproducible names), and primed copies (a disjoint second
//! copy of the vertex set, used by the prism operator).
//!
//! The total order on vertices is the one that makes both conventions below
//! hold at once, and it is the only orientation data in the crate:
//! simplices are stored sorted, and "increasing order" is the orientation.
//! - barycenters compare by (cardinality, lexicographic id sequence), so the
//!   vertices of any flag σ₀ ⊂ ⋯ ⊂ σ_k are automatically increasing;
//! - primed vertices sort before unprimed ones, so prism simplices
//!   (v₀′, …, v_j′, v_j, …, v_k) are written sorted.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;
use crate::Result;

/// A vertex label: a nonempty sorted sequence of base ids plus a prime count.
///
/// `seq.len() == 1` is a base vertex; longer sequences are barycenters of the
/// base simplex with those ids. The barycenter of a single vertex is
/// identified with that vertex, so the representation is canonical.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Vertex {
    primes: u8,
    seq: Vec<u32>,
}

impl Vertex {
    /// Base vertex with a plain integer id.
    pub fn base(id: u32) -> Self {
        Vertex { primes: 0, seq: vec![id] }
    }

    /// Barycenter of the base simplex with the given ids (sorted, distinct).
    /// A singleton collapses to the base vertex itself.
    pub fn barycenter(ids: &[u32]) -> Result<Self> {
        let mut seq = ids.to_vec();
        seq.sort_unstable();
        seq.dedup();
        if seq.is_empty() {
            return Err(Error::MalformedInput("barycenter of an empty id set".into()));
        }
        if seq.len() != ids.len() {
            return Err(Error::MalformedInput(format!("duplicate id in barycenter label {ids:?}")));
        }
        Ok(Vertex { primes: 0, seq })
    }

    /// The primed copy of this vertex (one more apostrophe).
    pub fn primed(&self) -> Self {
        Vertex { primes: self.primes + 1, seq: self.seq.clone() }
    }

    /// Strip one prime; `None` if unprimed.
    pub fn unprimed(&self) -> Option<Self> {
        self.primes.checked_sub(1).map(|p| Vertex { primes: p, seq: self.seq.clone() })
    }

    /// True for unprimed single-id vertices.
    pub fn is_base(&self) -> bool {
        self.primes == 0 && self.seq.len() == 1
    }

    pub fn prime_count(&self) -> u8 {
        self.primes
    }

    /// The base-id sequence labeling this vertex.
    pub fn ids(&self) -> &[u32] {
        &self.seq
    }

    /// The base simplex this vertex is the barycenter of (itself for base
    /// vertices). Only meaningful for unprimed vertices.
    pub fn base_simplex(&self) -> Simplex {
        Simplex::from_ids(&self.seq).expect("vertex label is sorted and distinct")
    }
}

impl Ord for Vertex {
    fn cmp(&self, other: &Self) -> Ordering {
        // More primes first (the primed copy precedes the original), then the
        // face-relation key (cardinality, then id sequence).
        other
            .primes
            .cmp(&self.primes)
            .then_with(|| self.seq.len().cmp(&other.seq.len()))
            .then_with(|| self.seq.cmp(&other.seq))
    }
}

impl PartialOrd for Vertex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.seq.len() == 1 {
            write!(f, "{}", self.seq[0])?;
        } else {
            let inner: Vec<String> = self.seq.iter().map(|id| format!("v{id}")).collect();
            write!(f, "({})", inner.join("."))?;
        }
        for _ in 0..self.primes {
            write!(f, "'")?;
        }
        Ok(())
    }
}

impl std::str::FromStr for Vertex {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut body = s.trim();
        let mut primes = 0u8;
        while let Some(stripped) = body.strip_suffix('\'') {
            primes += 1;
            body = stripped;
        }
        let seq = if let Some(inner) = body.strip_prefix('(').and_then(|b| b.strip_suffix(')')) {
            inner
                .split('.')
                .map(|tok| {
                    tok.strip_prefix('v')
                        .unwrap_or(tok)
                        .parse::<u32>()
                        .map_err(|_| Error::Parse(format!("bad vertex token {s:?}")))
                })
                .collect::<Result<Vec<u32>>>()?
        } else {
            vec![body
                .parse::<u32>()
                .map_err(|_| Error::Parse(format!("bad vertex token {s:?}")))?]
        };
        let mut v = Vertex { primes: 0, seq: Vec::new() };
        v.seq = {
            let mut sorted = seq.clone();
            sorted.sort_unstable();
            sorted.dedup();
            if sorted.len() != seq.len() || sorted.is_empty() {
                return Err(Error::Parse(format!("bad vertex token {s:?}")));
            }
            sorted
        };
        v.primes = primes;
        Ok(v)
    }
}

impl Serialize for Vertex {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Vertex {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A simplex: a strictly increasing vertex sequence. The empty simplex is the
/// formal (−1)-dimensional generator used by the reduced boundary convention,
/// and doubles as the constant monomial of phase polynomials.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Simplex(Vec<Vertex>);

impl Simplex {
    /// Build from vertices; sorts and rejects duplicates.
    pub fn new(mut vertices: Vec<Vertex>) -> Result<Self> {
        vertices.sort();
        if vertices.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::MalformedInput(format!(
                "duplicate vertex in simplex {:?}",
                vertices.iter().map(|v| v.to_string()).collect::<Vec<_>>()
            )));
        }
        Ok(Simplex(vertices))
    }

    /// Simplex on base vertex ids.
    pub fn from_ids(ids: &[u32]) -> Result<Self> {
        Self::new(ids.iter().map(|&i| Vertex::base(i)).collect())
    }

    pub fn empty() -> Self {
        Simplex(Vec::new())
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Geometric dimension; −1 for the empty simplex.
    pub fn dim(&self) -> i64 {
        self.0.len() as i64 - 1
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.0
    }

    pub fn contains(&self, v: &Vertex) -> bool {
        self.0.binary_search(v).is_ok()
    }

    pub fn is_face_of(&self, other: &Simplex) -> bool {
        self.0.iter().all(|v| other.contains(v))
    }

    /// The face omitting the vertex at position `j` (boundary convention:
    /// this face carries sign (−1)^j).
    pub fn face_omitting(&self, j: usize) -> Simplex {
        let mut v = self.0.clone();
        v.remove(j);
        Simplex(v)
    }

    /// All nonempty subsets (the face closure including the simplex itself).
    pub fn nonempty_subsets(&self) -> Vec<Simplex> {
        let n = self.0.len();
        let mut out = Vec::with_capacity((1usize << n) - 1);
        for mask in 1u32..(1 << n) {
            let verts: Vec<Vertex> =
                (0..n).filter(|i| mask & (1 << i) != 0).map(|i| self.0[i].clone()).collect();
            out.push(Simplex(verts));
        }
        out
    }

    /// Union with a disjoint simplex; errors on overlap.
    pub fn join(&self, other: &Simplex) -> Result<Simplex> {
        let mut v = self.0.clone();
        v.extend(other.0.iter().cloned());
        Simplex::new(v)
    }

    /// Set difference (vertices of self not in other).
    pub fn minus(&self, other: &Simplex) -> Simplex {
        Simplex(self.0.iter().filter(|v| !other.contains(v)).cloned().collect())
    }

    /// Insert one vertex; errors if already present.
    pub fn with_vertex(&self, v: Vertex) -> Result<Simplex> {
        let mut verts = self.0.clone();
        verts.push(v);
        Simplex::new(verts)
    }

    /// True if every vertex is an unprimed base vertex.
    pub fn all_base(&self) -> bool {
        self.0.iter().all(Vertex::is_base)
    }
}

impl fmt::Display for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, ".");
        }
        let toks: Vec<String> = self.0.iter().map(|v| v.to_string()).collect();
        write!(f, "{}", toks.join(" "))
    }
}

impl Serialize for Simplex {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Simplex {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        crate::fileio::parse_simplex(&s).map_err(serde::de::Error::custom)
    }
}

/// A finite abstract simplicial complex, closed under taking faces.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SimplicialComplex {
    simplices: BTreeSet<Simplex>,
}

impl SimplicialComplex {
    pub fn empty() -> Self {
        Self::default()
    }

    /// Face closure of the given facets. Errors on an empty facet list or an
    /// empty facet; duplicate vertices are rejected by `Simplex::new`.
    pub fn from_facets(facets: &[Simplex]) -> Result<Self> {
        if facets.is_empty() {
            return Err(Error::MalformedInput("facet list is empty".into()));
        }
        let mut simplices = BTreeSet::new();
        for f in facets {
            if f.is_empty() {
                return Err(Error::MalformedInput("empty facet".into()));
            }
            for s in f.nonempty_subsets() {
                simplices.insert(s);
            }
        }
        Ok(SimplicialComplex { simplices })
    }

    /// Face closure of facets given as base vertex id lists.
    pub fn from_id_facets(facets: &[Vec<u32>]) -> Result<Self> {
        let simp: Vec<Simplex> =
            facets.iter().map(|f| Simplex::from_ids(f)).collect::<Result<_>>()?;
        Self::from_facets(&simp)
    }

    /// Top dimension; −1 for the empty complex.
    pub fn dim(&self) -> i64 {
        self.simplices.iter().map(|s| s.dim()).max().unwrap_or(-1)
    }

    pub fn is_empty(&self) -> bool {
        self.simplices.is_empty()
    }

    pub fn simplex_count(&self) -> usize {
        self.simplices.len()
    }

    pub fn contains(&self, s: &Simplex) -> bool {
        self.simplices.contains(s)
    }

    pub fn simplices(&self) -> impl Iterator<Item = &Simplex> {
        self.simplices.iter()
    }

    /// All simplices of dimension `k`, in canonical order.
    pub fn k_simplices(&self, k: i64) -> Vec<&Simplex> {
        self.simplices.iter().filter(|s| s.dim() == k).collect()
    }

    pub fn vertices(&self) -> Vec<&Vertex> {
        self.k_simplices(0).into_iter().map(|s| &s.vertices()[0]).collect()
    }

    pub fn vertex_set(&self) -> BTreeSet<Vertex> {
        self.k_simplices(0).into_iter().map(|s| s.vertices()[0].clone()).collect()
    }

    /// Face counts by dimension, `f[k] = #k-simplices`.
    pub fn f_vector(&self) -> Vec<usize> {
        let d = self.dim();
        if d < 0 {
            return Vec::new();
        }
        let mut f = vec![0usize; (d + 1) as usize];
        for s in &self.simplices {
            f[s.dim() as usize] += 1;
        }
        f
    }

    /// Alternating sum of face counts; 0 for the empty complex.
    pub fn euler_characteristic(&self) -> i64 {
        let mut chi = 0i64;
        for s in &self.simplices {
            chi += if s.dim() % 2 == 0 { 1 } else { -1 };
        }
        chi
    }

    /// Maximal simplices, in canonical order. Face closure makes this cheap:
    /// a simplex is maximal iff it is not a codimension-1 face of anything.
    pub fn facets(&self) -> Vec<&Simplex> {
        let mut non_maximal: BTreeSet<Simplex> = BTreeSet::new();
        for s in &self.simplices {
            for j in 0..s.len() {
                if s.len() >= 2 {
                    non_maximal.insert(s.face_omitting(j));
                }
            }
        }
        self.simplices.iter().filter(|s| !non_maximal.contains(s)).collect()
    }

    /// Simplices containing `sigma` (its open star), including `sigma`.
    pub fn star(&self, sigma: &Simplex) -> Vec<&Simplex> {
        self.simplices.iter().filter(|s| sigma.is_face_of(s)).collect()
    }

    /// The link of `sigma`: all τ disjoint from σ with τ ∪ σ in the complex.
    /// Errors if `sigma` is not a simplex of the complex.
    pub fn link(&self, sigma: &Simplex) -> Result<SimplicialComplex> {
        if !self.contains(sigma) {
            return Err(Error::NotFound(format!("simplex {sigma} not in complex")));
        }
        let mut simplices = BTreeSet::new();
        for s in self.star(sigma) {
            let tau = s.minus(sigma);
            if !tau.is_empty() {
                simplices.insert(tau);
            }
        }
        Ok(SimplicialComplex { simplices })
    }

    /// The full subcomplex on a vertex subset. Errors on unknown vertices.
    pub fn induced_subcomplex(&self, verts: &BTreeSet<Vertex>) -> Result<SimplicialComplex> {
        let all = self.vertex_set();
        if let Some(v) = verts.iter().find(|v| !all.contains(*v)) {
            return Err(Error::MalformedInput(format!("unknown vertex id {v}")));
        }
        let simplices = self
            .simplices
            .iter()
            .filter(|s| s.vertices().iter().all(|v| verts.contains(v)))
            .cloned()
            .collect();
        Ok(SimplicialComplex { simplices })
    }

    /// Euler characteristic of the induced subcomplex, without building it.
    /// Assumes `verts` ⊆ vertex set (extra labels simply match nothing).
    pub fn induced_euler(&self, verts: &BTreeSet<Vertex>) -> i64 {
        let mut chi = 0i64;
        for s in &self.simplices {
            if s.vertices().iter().all(|v| verts.contains(v)) {
                chi += if s.dim() % 2 == 0 { 1 } else { -1 };
            }
        }
        chi
    }

    /// Connectivity of the vertex-edge graph (true for ≤ 1 vertex).
    pub fn is_connected(&self) -> bool {
        self.connected_components().len() <= 1
    }

    /// Vertex sets of the connected components of the 1-skeleton.
    pub fn connected_components(&self) -> Vec<BTreeSet<Vertex>> {
        let verts: Vec<Vertex> = self.vertex_set().into_iter().collect();
        let index: BTreeMap<&Vertex, usize> =
            verts.iter().enumerate().map(|(i, v)| (v, i)).collect();
        let mut parent: Vec<usize> = (0..verts.len()).collect();
        fn find(parent: &mut [usize], i: usize) -> usize {
            let mut root = i;
            while parent[root] != root {
                root = parent[root];
            }
            let mut cur = i;
            while parent[cur] != root {
                let next = parent[cur];
                parent[cur] = root;
                cur = next;
            }
            root
        }
        for e in self.k_simplices(1) {
            let a = index[&e.vertices()[0]];
            let b = index[&e.vertices()[1]];
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            if ra != rb {
                parent[ra] = rb;
            }
        }
        let mut comps: BTreeMap<usize, BTreeSet<Vertex>> = BTreeMap::new();
        for (i, v) in verts.iter().enumerate() {
            comps.entry(find(&mut parent, i)).or_default().insert(v.clone());
        }
        comps.into_values().collect()
    }
}
