//! Bone rings, local geodesic sheets and sectional curvature.
//!
//! A bone is a simplex of codimension 2. In a manifold the facets hinging
//! on a bone form a cycle of length `m`; its link is a cycle on `m` ring
//! vertices. Ordering a ring facet as `(bone..., r, s)` and stepping it
//! once with the geodesic flow drops the leading bone vertex `x0`; the two
//! ring neighbours of that facet then cut out petal bones
//! `(bone \ {x0}) ∪ {r}`. The petal number of a petal bone is its own ring
//! length, and the sectional curvature of the bone is
//!
//! ```text
//! K = (2 - m)/6 + (2/3) Σ 1/p_k
//! ```
//!
//! over the `m` petal bones. [`sectional_curvature`] evaluates it as a sum
//! over ring facets driven by the flow; [`closed_form_curvature`] evaluates
//! the formula from the link cycle directly. The two must agree.
//!
//! The value depends on which bone vertex leads the ordering. Only the
//! leading vertex matters.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use rayon::prelude::*;
use serde::Serialize;

use crate::complex::{Simplex, SimplicialComplex, Vertex};
use crate::curvature::partition_curvature;
use crate::error::{Error, Result};
use crate::flow::{Frame, GeodesicFlow};
use crate::graph::Graph;
use crate::rational::{self, Rational};

/// The facets hinging on a bone, in cyclic order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoneRing {
    pub bone: Simplex,
    pub m: usize,
    /// Facets in dual-graph cyclic order.
    pub ring: Vec<Simplex>,
    /// Link vertices in cyclic order; `ring[i] = bone ∪ {link[i], link[i+1]}`.
    pub link: Vec<Vertex>,
}

fn check_bone(c: &SimplicialComplex, bone: &Simplex) -> Result<()> {
    let q = c.dim();
    if q < 2 {
        return Err(Error::invalid(
            "bones need a complex of dimension at least 2",
        ));
    }
    c.require(bone)?;
    if bone.dim() as isize != q - 2 {
        return Err(Error::invalid(format!(
            "{bone} has dimension {} but bones have dimension {}",
            bone.dim(),
            q - 2
        )));
    }
    Ok(())
}

fn check_ordering(bone: &Simplex, ordering: &[Vertex]) -> Result<()> {
    let sorted = Simplex::new(ordering.iter().copied())?;
    if &sorted != bone {
        return Err(Error::invalid(format!(
            "ordering {ordering:?} is not a permutation of {bone}"
        )));
    }
    Ok(())
}

/// Facets containing `bone`, in canonical order.
fn hinge_facets(c: &SimplicialComplex, bone: &Simplex) -> Vec<Simplex> {
    let i = c.index_of(bone).unwrap();
    let n = bone.len() + 2;
    c.superset_indices(i)
        .iter()
        .map(|&j| c.simplex(j))
        .filter(|s| s.len() == n)
        .cloned()
        .collect()
}

pub fn bone_ring(c: &SimplicialComplex, bone: &Simplex) -> Result<BoneRing> {
    check_bone(c, bone)?;
    let facets = hinge_facets(c, bone);
    let mut adj: BTreeMap<Vertex, Vec<Vertex>> = BTreeMap::new();
    for f in &facets {
        let rs = f.difference(bone);
        adj.entry(rs[0]).or_default().push(rs[1]);
        adj.entry(rs[1]).or_default().push(rs[0]);
    }
    let broken = || Error::NonManifoldAtBone(bone.clone());
    if facets.len() < 3 || adj.values().any(|n| n.len() != 2) {
        return Err(broken());
    }
    let stable = c.stable_star(bone)?.len();
    if stable != 2 * facets.len() {
        return Err(broken());
    }
    let start = *adj.keys().next().unwrap();
    let mut link = vec![start];
    let mut prev = start;
    let mut cur = *adj[&start].iter().min().unwrap();
    while cur != start {
        link.push(cur);
        let next = adj[&cur].iter().copied().find(|&v| v != prev).unwrap();
        prev = cur;
        cur = next;
        if link.len() > adj.len() {
            return Err(broken());
        }
    }
    if link.len() != adj.len() {
        return Err(broken());
    }
    let m = link.len();
    let ring = (0..m)
        .map(|i| {
            let mut v = bone.vertices().to_vec();
            v.extend([link[i], link[(i + 1) % m]]);
            Simplex::new(v).unwrap()
        })
        .collect();
    Ok(BoneRing {
        bone: bone.clone(),
        m,
        ring,
        link,
    })
}

/// One local disk: the ring facets of a bone plus the stars of its petal
/// bones.
#[derive(Clone, Debug)]
pub struct SheetPatch {
    pub bone: Simplex,
    pub ordering: Vec<Vertex>,
    /// Frame through which the growth reached this patch.
    pub frame: Frame,
    /// Petal bones in order of discovery.
    pub petals: Vec<Simplex>,
    /// `|S⁺(petal)| / 2` for each petal.
    pub petal_numbers: Vec<Rational>,
    pub facets: BTreeSet<Simplex>,
    /// For each petal, the ring facet through which it was discovered.
    discovered_via: Vec<Simplex>,
}

impl SheetPatch {
    /// Induced subgraph of the dual graph on the patch facets; vertices
    /// carry dual-graph labels.
    pub fn dual_subgraph(&self, c: &SimplicialComplex) -> Result<Graph> {
        induced_dual(c, &self.facets)
    }

    /// Petal numbers as integers (they are, on manifolds).
    pub fn petal_partition(&self) -> Vec<usize> {
        self.petal_numbers
            .iter()
            .map(|p| p.to_integer().try_into().unwrap_or(0))
            .collect()
    }
}

fn induced_dual(c: &SimplicialComplex, facets: &BTreeSet<Simplex>) -> Result<Graph> {
    let dual = c.dual_graph()?;
    let keep: BTreeSet<Vertex> = facets
        .iter()
        .map(|f| c.index_of(f).unwrap() as Vertex + 1)
        .collect();
    Ok(dual.induced(&keep))
}

/// Ring facet `y` ordered `(ordering..., r, s)` with `r < s`.
fn ordered_ring_frame(y: &Simplex, bone: &Simplex, ordering: &[Vertex]) -> Frame {
    let mut v = ordering.to_vec();
    v.extend(y.difference(bone));
    Frame::new(v).unwrap()
}

struct PetalHit {
    via: Simplex,
    petal: Simplex,
}

/// The flow-driven petal discovery shared by the curvature sum and the
/// local disk: two hits per ring facet.
fn petal_hits(
    flow: &GeodesicFlow<'_>,
    bone: &Simplex,
    ordering: &[Vertex],
) -> Result<Vec<PetalHit>> {
    let c = flow.complex();
    let ring = hinge_facets(c, bone);
    let mut hits = Vec::with_capacity(2 * ring.len());
    for y in &ring {
        let frame = ordered_ring_frame(y, bone, ordering);
        let z = flow.step(&frame)?.facet();
        let neighbours: Vec<&Simplex> = ring
            .iter()
            .filter(|a| a.intersection(y).len() == bone.len() + 1)
            .collect();
        if neighbours.len() != 2 {
            return Err(Error::NonManifoldAtBone(bone.clone()));
        }
        for a in neighbours {
            let yz = Simplex::new(y.intersection(&z)).unwrap();
            let petal = Simplex::new(yz.intersection(a))
                .map_err(|_| Error::NonManifoldAtBone(bone.clone()))?;
            hits.push(PetalHit {
                via: y.clone(),
                petal,
            });
        }
    }
    Ok(hits)
}

fn half_stable(c: &SimplicialComplex, s: &Simplex) -> Result<Rational> {
    Ok(rational::ratio(c.stable_star(s)?.len() as i64, 2))
}

pub fn local_disk(
    c: &SimplicialComplex,
    bone: &Simplex,
    ordering: &[Vertex],
) -> Result<SheetPatch> {
    let flow = GeodesicFlow::new(c)?;
    local_disk_with(&flow, bone, ordering)
}

fn local_disk_with(
    flow: &GeodesicFlow<'_>,
    bone: &Simplex,
    ordering: &[Vertex],
) -> Result<SheetPatch> {
    let c = flow.complex();
    let ring = bone_ring(c, bone)?;
    check_ordering(bone, ordering)?;
    let hits = petal_hits(flow, bone, ordering)?;
    let mut facets: BTreeSet<Simplex> = ring.ring.iter().cloned().collect();
    let mut petals = Vec::new();
    let mut via = Vec::new();
    let mut numbers = Vec::new();
    let top = bone.len() + 2;
    for hit in hits {
        if petals.contains(&hit.petal) {
            continue;
        }
        for s in c.stable_star(&hit.petal)? {
            if s.len() == top {
                facets.insert(s.clone());
            }
        }
        numbers.push(half_stable(c, &hit.petal)?);
        petals.push(hit.petal);
        via.push(hit.via);
    }
    let first = &ring.ring[0];
    Ok(SheetPatch {
        bone: bone.clone(),
        ordering: ordering.to_vec(),
        frame: ordered_ring_frame(first, bone, ordering),
        petals,
        petal_numbers: numbers,
        facets,
        discovered_via: via,
    })
}

/// Sum over ring facets of `1/(3 l₁) + 1/(3 l₂)` plus `(2 - m)/6`, where
/// `l₁, l₂` are the half stable-star sizes of the two petal bones cut out
/// by stepping the ordered facet.
pub fn sectional_curvature(
    c: &SimplicialComplex,
    bone: &Simplex,
    ordering: &[Vertex],
) -> Result<Rational> {
    let flow = GeodesicFlow::new(c)?;
    sectional_curvature_with(&flow, bone, ordering)
}

pub(crate) fn sectional_curvature_with(
    flow: &GeodesicFlow<'_>,
    bone: &Simplex,
    ordering: &[Vertex],
) -> Result<Rational> {
    let c = flow.complex();
    check_bone(c, bone)?;
    check_ordering(bone, ordering)?;
    let hits = petal_hits(flow, bone, ordering)?;
    let m = (hits.len() / 2) as i64;
    let mut sum = rational::ratio(2 - m, 6);
    for hit in &hits {
        let l = half_stable(c, &hit.petal)?;
        sum += (rational::int(3) * l).recip();
    }
    Ok(sum)
}

/// Petal numbers read off the link cycle: for each ring vertex `r`, the
/// number of facets containing `(bone \ {ordering[0]}) ∪ {r}`.
pub fn petal_numbers(
    c: &SimplicialComplex,
    bone: &Simplex,
    ordering: &[Vertex],
) -> Result<Vec<usize>> {
    let ring = bone_ring(c, bone)?;
    check_ordering(bone, ordering)?;
    let lead = ordering[0];
    ring.link
        .iter()
        .map(|&r| {
            let mut v: Vec<Vertex> = bone
                .vertices()
                .iter()
                .copied()
                .filter(|&x| x != lead)
                .collect();
            v.push(r);
            let petal = Simplex::new(v)?;
            let i = c.require(&petal)?;
            let top = bone.len() + 2;
            Ok(c.superset_indices(i)
                .iter()
                .filter(|&&j| c.simplex(j).len() == top)
                .count())
        })
        .collect()
}

/// `(2 - m)/6 + (2/3) Σ 1/p_k` over the petal numbers from the link.
pub fn closed_form_curvature(
    c: &SimplicialComplex,
    bone: &Simplex,
    ordering: &[Vertex],
) -> Result<Rational> {
    Ok(partition_curvature(&petal_numbers(c, bone, ordering)?))
}

/// Curvature under every ordering of the bone's vertices.
pub fn curvature_by_ordering(
    c: &SimplicialComplex,
    bone: &Simplex,
) -> Result<BTreeMap<Vec<Vertex>, Rational>> {
    let flow = GeodesicFlow::new(c)?;
    let mut out = BTreeMap::new();
    for ord in permutations(bone.vertices()) {
        let k = sectional_curvature_with(&flow, bone, &ord)?;
        out.insert(ord, k);
    }
    Ok(out)
}

fn permutations(v: &[Vertex]) -> Vec<Vec<Vertex>> {
    if v.len() <= 1 {
        return vec![v.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..v.len() {
        let mut rest = v.to_vec();
        let head = rest.remove(i);
        for mut tail in permutations(&rest) {
            tail.insert(0, head);
            out.push(tail);
        }
    }
    out
}

#[derive(Clone, Debug, Serialize)]
pub struct SpectrumEntry {
    #[serde(serialize_with = "rational::serialize")]
    pub value: Rational,
    pub count: usize,
}

/// Sectional curvature of every bone, with the bones' own (sorted)
/// orderings.
#[derive(Clone, Debug, Serialize)]
pub struct SectionalSpectrum {
    pub schema: &'static str,
    pub spectrum: Vec<SpectrumEntry>,
    #[serde(serialize_with = "rational::serialize")]
    pub total: Rational,
    pub euler: i64,
    #[serde(skip)]
    pub per_bone: Vec<(Simplex, Rational)>,
}

impl SectionalSpectrum {
    pub fn values(&self) -> BTreeSet<Rational> {
        self.spectrum.iter().map(|e| e.value.clone()).collect()
    }

    /// `total - euler`. Zero on closed 2-manifolds; not in general for
    /// higher dimensions.
    pub fn gauss_bonnet_gap(&self) -> Rational {
        &self.total - rational::int(self.euler)
    }
}

pub fn sectional_spectrum(c: &SimplicialComplex) -> Result<SectionalSpectrum> {
    if c.dim() < 2 {
        return Err(Error::invalid(
            "sectional curvature needs dimension at least 2",
        ));
    }
    let flow = GeodesicFlow::new(c)?;
    let per_bone: Vec<(Simplex, Rational)> = c
        .bones()
        .par_iter()
        .map(|b| sectional_curvature_with(&flow, b, b.vertices()).map(|k| (b.clone(), k)))
        .collect::<Result<_>>()?;
    let mut counts: BTreeMap<Rational, usize> = BTreeMap::new();
    let mut total = rational::zero();
    for (_, k) in &per_bone {
        *counts.entry(k.clone()).or_default() += 1;
        total += k;
    }
    Ok(SectionalSpectrum {
        schema: crate::io::SCHEMA,
        spectrum: counts
            .into_iter()
            .map(|(value, count)| SpectrumEntry { value, count })
            .collect(),
        total,
        euler: c.euler(),
        per_bone,
    })
}

/// Union of local disks grown outward from a bone.
#[derive(Clone, Debug)]
pub struct Sheet {
    pub patches: Vec<SheetPatch>,
    /// Growth ran out of frontier before hitting the patch limit.
    pub closed: bool,
    /// Facet → number of patches containing it.
    pub facet_multiset: BTreeMap<Simplex, usize>,
}

impl Sheet {
    pub fn bones(&self) -> BTreeSet<&Simplex> {
        self.patches.iter().map(|p| &p.bone).collect()
    }

    pub fn facets(&self) -> BTreeSet<Simplex> {
        self.facet_multiset.keys().cloned().collect()
    }

    pub fn dual_subgraph(&self, c: &SimplicialComplex) -> Result<Graph> {
        induced_dual(c, &self.facets())
    }

    pub fn to_dot(&self, c: &SimplicialComplex) -> Result<String> {
        let g = self.dual_subgraph(c)?;
        Ok(g.to_dot("sheet", |v| c.simplex_by_label(v).unwrap().key()))
    }
}

/// Breadth-first growth. Each petal bone not yet visited seeds a new local
/// disk; its ordering lists the vertices it shares with the bone it was
/// found from first (in inherited order), then its remaining vertex.
pub fn grow_sheet(
    c: &SimplicialComplex,
    bone: &Simplex,
    ordering: &[Vertex],
    max_patches: usize,
) -> Result<Sheet> {
    let flow = GeodesicFlow::new(c)?;
    let mut visited: BTreeSet<Simplex> = BTreeSet::from([bone.clone()]);
    let mut queue: VecDeque<(Simplex, Vec<Vertex>, Option<Frame>)> =
        VecDeque::from([(bone.clone(), ordering.to_vec(), None)]);
    let mut patches: Vec<SheetPatch> = Vec::new();
    while !queue.is_empty() && patches.len() < max_patches {
        let (b, ord, via) = queue.pop_front().unwrap();
        let mut patch = local_disk_with(&flow, &b, &ord)?;
        if let Some(frame) = via {
            patch.frame = frame;
        }
        for (petal, y) in patch.petals.iter().zip(&patch.discovered_via) {
            if visited.insert(petal.clone()) {
                let mut next: Vec<Vertex> = ord
                    .iter()
                    .copied()
                    .filter(|v| petal.contains_vertex(*v))
                    .collect();
                next.extend(
                    petal
                        .vertices()
                        .iter()
                        .copied()
                        .filter(|v| !b.contains_vertex(*v)),
                );
                let frame = ordered_ring_frame(y, &b, &ord);
                queue.push_back((petal.clone(), next, Some(frame)));
            }
        }
        patches.push(patch);
    }
    let mut multiset = BTreeMap::new();
    for p in &patches {
        for f in &p.facets {
            *multiset.entry(f.clone()).or_default() += 1;
        }
    }
    Ok(Sheet {
        closed: queue.is_empty(),
        patches,
        facet_multiset: multiset,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::catalog_complex;
    use crate::rational::ratio;

    fn s(v: &[Vertex]) -> Simplex {
        Simplex::new(v.iter().copied()).unwrap()
    }

    #[test]
    fn rings_of_small_spheres() {
        let ico = catalog_complex("icosahedron").unwrap();
        let r = bone_ring(&ico, &s(&[1])).unwrap();
        assert_eq!(r.m, 5);
        assert_eq!(r.link, vec![2, 3, 4, 5, 6]);
        let oct = catalog_complex("octahedron").unwrap();
        assert_eq!(bone_ring(&oct, &s(&[1])).unwrap().m, 4);
    }

    #[test]
    fn ring_errors() {
        let tet = catalog_complex("simplex3").unwrap();
        assert!(matches!(
            bone_ring(&tet, &s(&[1, 2])),
            Err(Error::NonManifoldAtBone(_))
        ));
        let oct = catalog_complex("octahedron").unwrap();
        assert!(bone_ring(&oct, &s(&[1, 3])).is_err());
        let path = catalog_complex("path3").unwrap();
        assert!(bone_ring(&path, &s(&[1])).is_err());
    }

    #[test]
    fn icosahedron_local_disk() {
        let ico = catalog_complex("icosahedron").unwrap();
        let d = local_disk(&ico, &s(&[1]), &[1]).unwrap();
        assert_eq!(d.petal_partition(), vec![5; 5]);
        // closed star of 1 plus the stars of its five neighbours
        let mut expect = BTreeSet::new();
        for v in [1, 2, 3, 4, 5, 6] {
            for t in ico.of_dim(2) {
                if t.contains_vertex(v) {
                    expect.insert(t.clone());
                }
            }
        }
        assert_eq!(d.facets, expect);
        assert!(d.dual_subgraph(&ico).unwrap().is_connected());
    }

    #[test]
    fn small_sphere_curvatures() {
        let ico = catalog_complex("icosahedron").unwrap();
        assert_eq!(
            sectional_curvature(&ico, &s(&[1]), &[1]).unwrap(),
            ratio(1, 6)
        );
        let oct = catalog_complex("octahedron").unwrap();
        assert_eq!(
            sectional_curvature(&oct, &s(&[1]), &[1]).unwrap(),
            ratio(1, 3)
        );
        assert_eq!(
            closed_form_curvature(&oct, &s(&[1]), &[1]).unwrap(),
            ratio(1, 3)
        );
    }

    #[test]
    fn ordering_must_match_bone() {
        let rp3 = catalog_complex("rp3").unwrap();
        assert!(sectional_curvature(&rp3, &s(&[1, 2]), &[1, 3]).is_err());
        assert!(sectional_curvature(&rp3, &s(&[1, 2, 3]), &[1, 2, 3]).is_err());
    }

    #[test]
    fn spectrum_of_octahedron_refinement() {
        let b = catalog_complex("octahedron@1").unwrap();
        let sp = sectional_spectrum(&b).unwrap();
        let counts: Vec<(Rational, usize)> = sp
            .spectrum
            .iter()
            .map(|e| (e.value.clone(), e.count))
            .collect();
        assert_eq!(
            counts,
            vec![(ratio(1, 18), 12), (ratio(1, 12), 8), (ratio(1, 9), 6)]
        );
        assert_eq!(sp.total, rational::int(2));
        assert_eq!(sp.gauss_bonnet_gap(), rational::zero());
    }

    #[test]
    fn grow_on_surfaces_covers_everything() {
        let ico = catalog_complex("icosahedron").unwrap();
        let sheet = grow_sheet(&ico, &s(&[1]), &[1], 100).unwrap();
        assert!(sheet.closed);
        assert_eq!(sheet.patches.len(), 12);
        assert_eq!(sheet.facets().len(), 20);
        let one = grow_sheet(&ico, &s(&[1]), &[1], 1).unwrap();
        assert!(!one.closed);
        assert_eq!(one.patches.len(), 1);
        assert_eq!(
            one.facets(),
            local_disk(&ico, &s(&[1]), &[1]).unwrap().facets
        );
    }

    #[test]
    fn permutations_enumerate() {
        assert_eq!(permutations(&[1, 2, 3]).len(), 6);
        assert_eq!(permutations(&[7]), vec![vec![7]]);
    }
}
