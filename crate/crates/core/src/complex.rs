//! Finite abstract simplicial complexes in canonical form.
//!
//! A [`SimplicialComplex`] is a finite set of non-empty vertex sets closed
//! under taking non-empty subsets. Simplices are kept in canonical order
//! (by dimension, then lexicographically), and every complex carries an
//! index from each simplex to the simplices containing it, built once at
//! construction. Complexes are immutable after construction.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Opaque vertex label.
pub type Vertex = u32;

/// A non-empty, strictly increasing sequence of vertices.
///
/// Ordering is canonical: lower dimension first, then lexicographic.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vertex>", into = "Vec<Vertex>")]
pub struct Simplex(Vec<Vertex>);

impl Simplex {
    /// Builds a simplex from arbitrary vertices; they are sorted.
    /// Fails on an empty input or repeated vertices.
    pub fn new(vertices: impl IntoIterator<Item = Vertex>) -> Result<Self> {
        let mut v: Vec<Vertex> = vertices.into_iter().collect();
        if v.is_empty() {
            return Err(Error::invalid("empty vertex set"));
        }
        v.sort_unstable();
        if v.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::invalid(format!("repeated vertex in {v:?}")));
        }
        Ok(Simplex(v))
    }

    /// Caller guarantees `v` is non-empty and strictly increasing.
    pub(crate) fn from_sorted(v: Vec<Vertex>) -> Self {
        debug_assert!(!v.is_empty() && v.windows(2).all(|w| w[0] < w[1]));
        Simplex(v)
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// Always false; simplices are non-empty.
    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn dim(&self) -> usize {
        self.0.len() - 1
    }

    pub fn contains_vertex(&self, v: Vertex) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    /// `self ⊆ other`.
    pub fn is_face_of(&self, other: &Simplex) -> bool {
        if self.0.len() > other.0.len() {
            return false;
        }
        let mut it = other.0.iter();
        self.0.iter().all(|v| it.by_ref().any(|w| w == v))
    }

    pub fn intersection(&self, other: &Simplex) -> Vec<Vertex> {
        self.0
            .iter()
            .copied()
            .filter(|v| other.contains_vertex(*v))
            .collect()
    }

    /// Vertices of `self` not in `other`.
    pub fn difference(&self, other: &Simplex) -> Vec<Vertex> {
        self.0
            .iter()
            .copied()
            .filter(|v| !other.contains_vertex(*v))
            .collect()
    }

    /// All non-empty subsets, including `self`.
    pub fn faces(&self) -> impl Iterator<Item = Simplex> + '_ {
        let n = self.0.len();
        (1u64..(1u64 << n)).map(move |mask| {
            Simplex(
                (0..n)
                    .filter(|i| mask & (1 << i) != 0)
                    .map(|i| self.0[i])
                    .collect(),
            )
        })
    }

    /// Dash-joined label, stable across runs; used as DOT node names.
    pub fn key(&self) -> String {
        let parts: Vec<String> = self.0.iter().map(|v| v.to_string()).collect();
        parts.join("-")
    }
}

impl Ord for Simplex {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Simplex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl TryFrom<Vec<Vertex>> for Simplex {
    type Error = Error;
    fn try_from(v: Vec<Vertex>) -> Result<Self> {
        Simplex::new(v)
    }
}

impl From<Simplex> for Vec<Vertex> {
    fn from(s: Simplex) -> Self {
        s.0
    }
}

/// Simplex counts per dimension together with the Euler characteristic.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FVector {
    pub counts: Vec<usize>,
    pub euler: i64,
}

impl fmt::Display for FVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.counts.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Which stratum of a complex of dimension `q` to list.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Stratum {
    /// Dimension `q`.
    Facets,
    /// Dimension `q - 1`.
    Walls,
    /// Dimension `q - 2`.
    Bones,
}

impl Stratum {
    pub fn codim(self) -> usize {
        match self {
            Stratum::Facets => 0,
            Stratum::Walls => 1,
            Stratum::Bones => 2,
        }
    }

    pub fn from_codim(codim: usize) -> Result<Self> {
        match codim {
            0 => Ok(Stratum::Facets),
            1 => Ok(Stratum::Walls),
            2 => Ok(Stratum::Bones),
            _ => Err(Error::invalid(format!(
                "codimension {codim} is not 0, 1 or 2"
            ))),
        }
    }
}

#[derive(Clone)]
pub struct SimplicialComplex {
    simplices: Vec<Simplex>,
    index: HashMap<Simplex, usize>,
    /// For each simplex, ascending indices of every simplex containing it
    /// (itself included).
    supersets: Vec<Vec<usize>>,
    /// `offsets[k]..offsets[k + 1]` is the range of dimension-`k` simplices.
    offsets: Vec<usize>,
}

impl PartialEq for SimplicialComplex {
    fn eq(&self, other: &Self) -> bool {
        self.simplices == other.simplices
    }
}

impl Eq for SimplicialComplex {}

impl std::hash::Hash for SimplicialComplex {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.simplices.hash(state);
    }
}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.simplices.iter()).finish()
    }
}

impl Default for SimplicialComplex {
    fn default() -> Self {
        Self::empty()
    }
}

impl SimplicialComplex {
    /// The empty complex, i.e. the (-1)-sphere.
    pub fn empty() -> Self {
        Self::from_canonical(Vec::new())
    }

    /// Closes a collection of vertex sets under non-empty subsets.
    pub fn generate<I, S>(sets: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: IntoIterator<Item = Vertex>,
    {
        let mut all = BTreeSet::new();
        for set in sets {
            let s = Simplex::new(set)?;
            if all.contains(&s) {
                continue;
            }
            all.extend(s.faces());
        }
        Ok(Self::from_canonical(all.into_iter().collect()))
    }

    /// Builds a complex from simplices that must already be closed under
    /// subsets. Fails if they are not.
    pub fn from_closed(simplices: impl IntoIterator<Item = Simplex>) -> Result<Self> {
        let set: BTreeSet<Simplex> = simplices.into_iter().collect();
        for s in &set {
            if s.len() > 1 {
                for i in 0..s.len() {
                    let mut v = s.0.clone();
                    v.remove(i);
                    let face = Simplex(v);
                    if !set.contains(&face) {
                        return Err(Error::invalid(format!(
                            "not closed: {s} present but its face {face} is missing"
                        )));
                    }
                }
            }
        }
        Ok(Self::from_canonical(set.into_iter().collect()))
    }

    /// `simplices` must be sorted canonically, duplicate-free and closed.
    pub(crate) fn from_canonical(simplices: Vec<Simplex>) -> Self {
        debug_assert!(simplices.windows(2).all(|w| w[0] < w[1]));
        let index: HashMap<Simplex, usize> = simplices
            .iter()
            .enumerate()
            .map(|(i, s)| (s.clone(), i))
            .collect();
        let mut supersets = vec![Vec::new(); simplices.len()];
        for (i, s) in simplices.iter().enumerate() {
            for face in s.faces() {
                let j = index[&face];
                supersets[j].push(i);
            }
        }
        let top = simplices.last().map_or(0, |s| s.len());
        let mut offsets = vec![0; top + 1];
        for s in &simplices {
            offsets[s.len()] += 1;
        }
        // prefix sums; offsets[k] becomes the start of dimension k
        let mut acc = 0;
        let mut starts = Vec::with_capacity(top + 1);
        for &c in offsets.iter().skip(1) {
            starts.push(acc);
            acc += c;
        }
        starts.push(acc);
        SimplicialComplex {
            simplices,
            index,
            supersets,
            offsets: starts,
        }
    }

    pub fn simplices(&self) -> &[Simplex] {
        &self.simplices
    }

    pub fn len(&self) -> usize {
        self.simplices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.simplices.is_empty()
    }

    /// Dimension of the complex; -1 for the empty complex.
    pub fn dim(&self) -> isize {
        self.offsets.len() as isize - 2
    }

    pub fn contains(&self, s: &Simplex) -> bool {
        self.index.contains_key(s)
    }

    pub fn index_of(&self, s: &Simplex) -> Option<usize> {
        self.index.get(s).copied()
    }

    pub(crate) fn require(&self, s: &Simplex) -> Result<usize> {
        self.index_of(s)
            .ok_or_else(|| Error::invalid(format!("{s} is not a simplex of the complex")))
    }

    pub fn simplex(&self, idx: usize) -> &Simplex {
        &self.simplices[idx]
    }

    /// Simplices of dimension `k` in canonical order.
    pub fn of_dim(&self, k: usize) -> &[Simplex] {
        if k + 1 >= self.offsets.len() {
            return &[];
        }
        &self.simplices[self.offsets[k]..self.offsets[k + 1]]
    }

    pub(crate) fn dim_range(&self, k: usize) -> std::ops::Range<usize> {
        if k + 1 >= self.offsets.len() {
            return 0..0;
        }
        self.offsets[k]..self.offsets[k + 1]
    }

    pub fn vertices(&self) -> Vec<Vertex> {
        self.of_dim(0).iter().map(|s| s.0[0]).collect()
    }

    /// Indices of all simplices containing simplex `idx`, itself included.
    pub(crate) fn superset_indices(&self, idx: usize) -> &[usize] {
        &self.supersets[idx]
    }

    /// Simplices of dimension `q - codim`, where `q` is the complex
    /// dimension. Empty when that dimension is negative.
    pub fn strata(&self, stratum: Stratum) -> &[Simplex] {
        let q = self.dim();
        let k = q - stratum.codim() as isize;
        if k < 0 {
            return &[];
        }
        self.of_dim(k as usize)
    }

    pub fn facets(&self) -> &[Simplex] {
        self.strata(Stratum::Facets)
    }

    pub fn walls(&self) -> &[Simplex] {
        self.strata(Stratum::Walls)
    }

    pub fn bones(&self) -> &[Simplex] {
        self.strata(Stratum::Bones)
    }

    /// Simplices not contained in any other simplex.
    pub fn maximal_simplices(&self) -> impl Iterator<Item = &Simplex> + '_ {
        self.simplices
            .iter()
            .enumerate()
            .filter(|(i, _)| self.supersets[*i].len() == 1)
            .map(|(_, s)| s)
    }

    /// All maximal simplices share the top dimension.
    pub fn is_pure(&self) -> bool {
        let q = self.dim();
        self.maximal_simplices().all(|s| s.dim() as isize == q)
    }

    pub fn f_vector(&self) -> FVector {
        let q = self.dim();
        let counts: Vec<usize> = (0..=q).map(|k| self.of_dim(k as usize).len()).collect();
        let euler = counts
            .iter()
            .enumerate()
            .map(|(k, &c)| if k % 2 == 0 { c as i64 } else { -(c as i64) })
            .sum();
        FVector { counts, euler }
    }

    pub fn euler(&self) -> i64 {
        self.f_vector().euler
    }

    /// `U(x)`: every simplex containing `x`.
    pub fn open_star(&self, x: &Simplex) -> Result<Vec<&Simplex>> {
        let i = self.require(x)?;
        Ok(self.supersets[i]
            .iter()
            .map(|&j| &self.simplices[j])
            .collect())
    }

    /// `U(x)` without `x` itself.
    pub fn stable_star(&self, x: &Simplex) -> Result<Vec<&Simplex>> {
        let i = self.require(x)?;
        Ok(self.supersets[i]
            .iter()
            .filter(|&&j| j != i)
            .map(|&j| &self.simplices[j])
            .collect())
    }

    /// Simplices of dimension `dim(x) + 1` containing `x`.
    pub fn cofacets(&self, x: &Simplex) -> Result<Vec<&Simplex>> {
        let i = self.require(x)?;
        Ok(self
            .cofacet_indices(i)
            .map(|j| &self.simplices[j])
            .collect())
    }

    pub(crate) fn cofacet_indices(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        let n = self.simplices[i].len() + 1;
        self.supersets[i]
            .iter()
            .copied()
            .filter(move |&j| self.simplices[j].len() == n)
    }

    /// `S(x)`: the closure of `U(x)` minus `U(x)`.
    pub fn unit_sphere(&self, x: &Simplex) -> Result<SimplicialComplex> {
        let i = self.require(x)?;
        Ok(self.unit_sphere_at(i))
    }

    pub(crate) fn unit_sphere_at(&self, i: usize) -> SimplicialComplex {
        let x = &self.simplices[i];
        let mut out = BTreeSet::new();
        for &j in &self.supersets[i] {
            for face in self.simplices[j].faces() {
                if !x.is_face_of(&face) {
                    out.insert(face);
                }
            }
        }
        Self::from_canonical(out.into_iter().collect())
    }

    /// Vertices `v` such that `wall ∪ {v}` is a facet.
    pub fn mirror(&self, wall: &Simplex) -> Result<Vec<Vertex>> {
        let i = self.require(wall)?;
        if wall.dim() as isize != self.dim() - 1 {
            return Err(Error::invalid(format!(
                "{wall} has dimension {} but walls have dimension {}",
                wall.dim(),
                self.dim() - 1
            )));
        }
        Ok(self
            .cofacet_indices(i)
            .map(|j| self.simplices[j].difference(wall)[0])
            .collect())
    }

    /// `G \ U(x)`. The result is checked to be closed under subsets.
    pub fn complement_of_star(&self, x: &Simplex) -> Result<SimplicialComplex> {
        let i = self.require(x)?;
        let rest = self.complement_at(i);
        for s in rest.simplices() {
            if s.len() > 1 {
                for j in 0..s.len() {
                    let mut v = s.0.clone();
                    v.remove(j);
                    if !rest.contains(&Simplex(v)) {
                        return Err(Error::Internal(format!(
                            "complement of the star of {x} is not closed at {s}"
                        )));
                    }
                }
            }
        }
        Ok(rest)
    }

    pub(crate) fn complement_at(&self, i: usize) -> SimplicialComplex {
        let x = &self.simplices[i];
        Self::from_canonical(
            self.simplices
                .iter()
                .filter(|s| !x.is_face_of(s))
                .cloned()
                .collect(),
        )
    }

    /// The subcomplex generated by a subset of this complex's simplices.
    pub fn closure_of<'a>(simplices: impl IntoIterator<Item = &'a Simplex>) -> SimplicialComplex {
        let mut all = BTreeSet::new();
        for s in simplices {
            if !all.contains(s) {
                all.extend(s.faces());
            }
        }
        Self::from_canonical(all.into_iter().collect())
    }

    /// Barycentric refinement: the complex of chains under strict
    /// inclusion. Simplex number `i` (canonical order) becomes vertex `i + 1`.
    pub fn barycentric(&self) -> SimplicialComplex {
        // chains[i]: every chain whose top element is simplex i, as sorted labels
        let mut chains: Vec<Vec<Vec<Vertex>>> = Vec::with_capacity(self.len());
        for (i, s) in self.simplices.iter().enumerate() {
            let label = i as Vertex + 1;
            let mut mine = vec![vec![label]];
            for face in s.faces() {
                if face.len() == s.len() {
                    continue;
                }
                let j = self.index[&face];
                for ch in &chains[j] {
                    let mut c = ch.clone();
                    c.push(label);
                    mine.push(c);
                }
            }
            chains.push(mine);
        }
        let mut all: Vec<Simplex> = chains
            .into_iter()
            .flatten()
            .map(Simplex::from_sorted)
            .collect();
        all.sort_unstable();
        Self::from_canonical(all)
    }

    /// `depth`-fold barycentric refinement.
    pub fn barycentric_n(&self, depth: usize) -> SimplicialComplex {
        let mut c = self.clone();
        for _ in 0..depth {
            c = c.barycentric();
        }
        c
    }

    /// Vertices are simplices (labelled by canonical index + 1); edges join
    /// simplices when one strictly contains the other.
    pub fn comparability_graph(&self) -> Graph {
        let mut edges = Vec::new();
        for (i, sup) in self.supersets.iter().enumerate() {
            for &j in sup {
                if j != i {
                    edges.push((i as Vertex + 1, j as Vertex + 1));
                }
            }
        }
        Graph::from_parts_unchecked(1..=self.len() as Vertex, edges)
    }

    /// Vertices are facets (labelled by canonical index + 1); edges join
    /// facets meeting in a wall. Requires a pure complex.
    pub fn dual_graph(&self) -> Result<Graph> {
        if !self.is_pure() {
            return Err(Error::invalid("dual graph requires a pure complex"));
        }
        if self.is_empty() {
            return Ok(Graph::default());
        }
        let q = self.dim() as usize;
        let facets = self.dim_range(q);
        let mut edges = Vec::new();
        if q > 0 {
            for w in self.dim_range(q - 1) {
                let cof: Vec<usize> = self.cofacet_indices(w).collect();
                for a in 0..cof.len() {
                    for b in a + 1..cof.len() {
                        edges.push((cof[a] as Vertex + 1, cof[b] as Vertex + 1));
                    }
                }
            }
        }
        Ok(Graph::from_parts_unchecked(
            facets.map(|i| i as Vertex + 1),
            edges,
        ))
    }

    /// The simplex carrying a label produced by [`Self::comparability_graph`],
    /// [`Self::dual_graph`] or [`Self::barycentric`].
    pub fn simplex_by_label(&self, label: Vertex) -> Option<&Simplex> {
        (label as usize)
            .checked_sub(1)
            .and_then(|i| self.simplices.get(i))
    }

    /// Vertex degree in the 1-skeleton.
    pub fn degree(&self, v: Vertex) -> Result<usize> {
        let s = Simplex::from_sorted(vec![v]);
        let i = self.require(&s)?;
        Ok(self.cofacet_indices(i).count())
    }

    /// Neighbours of `v` in the 1-skeleton, ascending.
    pub fn neighbors(&self, v: Vertex) -> Result<Vec<Vertex>> {
        let s = Simplex::from_sorted(vec![v]);
        let i = self.require(&s)?;
        Ok(self
            .cofacet_indices(i)
            .map(|j| self.simplices[j].difference(&s)[0])
            .collect())
    }

    pub fn one_skeleton(&self) -> Graph {
        let edges = self
            .of_dim(1)
            .iter()
            .map(|e| (e.0[0], e.0[1]))
            .collect::<Vec<_>>();
        Graph::from_parts_unchecked(self.vertices(), edges)
    }

    /// Facet lists suitable for the facets-json file format.
    pub fn maximal_vertex_sets(&self) -> Vec<Vec<Vertex>> {
        self.maximal_simplices().map(|s| s.0.clone()).collect()
    }
}

/// The complex of all cliques of a simple graph.
pub fn whitney(g: &Graph) -> SimplicialComplex {
    let adj = g.adjacency();
    let mut out = Vec::new();
    fn extend(
        clique: &mut Vec<Vertex>,
        cand: &[Vertex],
        adj: &HashMap<Vertex, BTreeSet<Vertex>>,
        out: &mut Vec<Simplex>,
    ) {
        out.push(Simplex::from_sorted(clique.clone()));
        for (k, &u) in cand.iter().enumerate() {
            let next: Vec<Vertex> = cand[k + 1..]
                .iter()
                .copied()
                .filter(|w| adj[&u].contains(w))
                .collect();
            clique.push(u);
            extend(clique, &next, adj, out);
            clique.pop();
        }
    }
    for v in g.vertices() {
        let cand: Vec<Vertex> = adj[&v].range(v + 1..).copied().collect();
        extend(&mut vec![v], &cand, &adj, &mut out);
    }
    out.sort_unstable();
    SimplicialComplex::from_canonical(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(v: &[Vertex]) -> Simplex {
        Simplex::new(v.iter().copied()).unwrap()
    }

    fn gen(sets: &[&[Vertex]]) -> SimplicialComplex {
        SimplicialComplex::generate(sets.iter().map(|x| x.iter().copied())).unwrap()
    }

    fn octahedron() -> SimplicialComplex {
        let g = Graph::complete_multipartite(&[2, 2, 2]);
        whitney(&g)
    }

    #[test]
    fn closure_of_two_edges() {
        let c = gen(&[&[1, 2], &[2, 3]]);
        let expect = [s(&[1]), s(&[2]), s(&[3]), s(&[1, 2]), s(&[2, 3])];
        assert_eq!(c.simplices(), &expect[..]);
        assert_eq!(gen(&[&[1]]).simplices(), &[s(&[1])]);
    }

    #[test]
    fn closure_rejects_empty_set() {
        let r = SimplicialComplex::generate(vec![vec![1u32, 2], vec![]]);
        assert!(matches!(r, Err(Error::InvalidInput(_))));
    }

    #[test]
    fn whitney_small_graphs() {
        let k3 = Graph::complete(3);
        assert_eq!(whitney(&k3).f_vector().counts, vec![3, 3, 1]);
        let c4 = Graph::cycle(4);
        assert_eq!(whitney(&c4).f_vector().counts, vec![4, 4]);
        let oct = octahedron().f_vector();
        assert_eq!(oct.counts, vec![6, 12, 8]);
        assert_eq!(oct.euler, 2);
    }

    #[test]
    fn strata_by_codimension() {
        let oct = octahedron();
        assert_eq!(oct.facets().len(), 8);
        let path = gen(&[&[1, 2], &[2, 3], &[3, 4]]);
        assert_eq!(path.walls(), &[s(&[1]), s(&[2]), s(&[3]), s(&[4])]);
        assert!(path.bones().is_empty());
        assert!(SimplicialComplex::empty().facets().is_empty());
    }

    #[test]
    fn stars_and_unit_spheres() {
        let oct = octahedron();
        let sphere = oct.unit_sphere(&s(&[1])).unwrap();
        assert_eq!(sphere.f_vector().counts, vec![4, 4]);
        for v in sphere.vertices() {
            assert_eq!(sphere.degree(v).unwrap(), 2);
        }
        // a facet's unit sphere is its boundary
        let t = oct.facets()[0].clone();
        let b = oct.unit_sphere(&t).unwrap();
        assert_eq!(b.f_vector().counts, vec![3, 3]);
        // octahedron edge {1,3}: cofacet apexes 5 and 6, link is 1-5-3-6
        let e = s(&[1, 3]);
        let mut apexes = oct.mirror(&e).unwrap();
        apexes.sort();
        assert_eq!(apexes, vec![5, 6]);
        let us = oct.unit_sphere(&e).unwrap();
        let expect = gen(&[&[1, 5], &[5, 3], &[3, 6], &[6, 1]]);
        assert_eq!(us, expect);
        assert_eq!(oct.open_star(&e).unwrap().len(), 3);
        assert_eq!(oct.stable_star(&e).unwrap().len(), 2);
        assert!(oct.unit_sphere(&s(&[1, 2])).is_err());
    }

    #[test]
    fn mirror_counts() {
        let oct = octahedron();
        for w in oct.walls() {
            assert_eq!(oct.mirror(w).unwrap().len(), 2);
        }
        let path = gen(&[&[1, 2], &[2, 3], &[3, 4]]);
        assert_eq!(path.mirror(&s(&[1])).unwrap(), vec![2]);
        let tet = whitney(&Graph::complete(4));
        for w in tet.walls() {
            assert_eq!(tet.mirror(w).unwrap().len(), 1);
        }
        assert!(tet.mirror(&s(&[1])).is_err());
    }

    #[test]
    fn complement_of_stars() {
        let oct = octahedron();
        let rest = oct.complement_of_star(&s(&[1])).unwrap();
        let f = rest.f_vector();
        assert_eq!(f.counts, vec![5, 8, 4]);
        assert_eq!(f.euler, 1);
        let pt = gen(&[&[1]]);
        assert!(pt.complement_of_star(&s(&[1])).unwrap().is_empty());
        let k3 = whitney(&Graph::complete(3));
        assert_eq!(k3.complement_of_star(&s(&[1])).unwrap(), gen(&[&[2, 3]]));
    }

    #[test]
    fn barycentric_counts() {
        let edge = gen(&[&[1, 2]]);
        assert_eq!(edge.barycentric().f_vector().counts, vec![3, 2]);
        let oct = octahedron();
        let b = oct.barycentric();
        assert_eq!(b.f_vector().counts, vec![26, 72, 48]);
        assert_eq!(b, whitney(&oct.comparability_graph()));
    }

    #[test]
    fn dual_graphs() {
        let d = octahedron().dual_graph().unwrap();
        assert_eq!(d.vertex_count(), 8);
        assert_eq!(d.edge_count(), 12);
        assert!(d.vertices().all(|v| d.degree(v) == 3));
        assert!(d.is_triangle_free());
        let path = gen(&[&[1, 2], &[2, 3], &[3, 4]]);
        let pd = path.dual_graph().unwrap();
        assert_eq!((pd.vertex_count(), pd.edge_count()), (3, 2));
        let mixed = gen(&[&[1, 2, 3], &[3, 4]]);
        assert!(mixed.dual_graph().is_err());
    }

    #[test]
    fn euler_two_ways() {
        let oct = octahedron().barycentric();
        let direct: i64 = oct
            .simplices()
            .iter()
            .map(|s| if s.dim() % 2 == 0 { 1 } else { -1 })
            .sum();
        assert_eq!(direct, oct.euler());
    }

    #[test]
    fn from_closed_validates() {
        assert!(SimplicialComplex::from_closed(vec![s(&[1, 2]), s(&[1])]).is_err());
        assert!(SimplicialComplex::from_closed(vec![s(&[1, 2]), s(&[1]), s(&[2])]).is_ok());
    }
}
