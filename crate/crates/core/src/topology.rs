//! Recursive recognition of contractible complexes, spheres and manifolds,
//! plus the wall census that decides whether the geodesic flow is defined.
//!
//! The definitions are inductive:
//!
//! * the one-point complex is contractible; otherwise a complex is
//!   contractible when some vertex `x` has both `S(x)` and `G \ U(x)`
//!   contractible;
//! * the empty complex is the (-1)-sphere; a `d`-sphere is a `d`-manifold
//!   with some vertex `x` for which `G \ U(x)` is contractible;
//! * a `q`-manifold is a non-empty pure `q`-dimensional complex in which
//!   every unit sphere is a `(q-1)`-sphere.
//!
//! Recognition is exponential in the worst case. Results are memoised on a
//! relabelled copy of the complex (vertices sorted by a local degree
//! profile), so isomorphic links met repeatedly during recursion are decided
//! once. A size ceiling turns runaway inputs into [`Error::TooLarge`].

use std::collections::{BTreeMap, HashMap};
use std::sync::RwLock;

use serde::Serialize;

use crate::complex::{Simplex, SimplicialComplex, Vertex};
use crate::error::{Error, Result};

/// Default ceiling on the number of simplices handed to recognition.
pub const DEFAULT_SIZE_LIMIT: usize = 50_000;

/// Which unit spheres [`Recognizer::is_manifold`] inspects.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum LinkCheck {
    /// Every simplex, as the definition reads.
    #[default]
    AllSimplices,
    /// Vertices only. Heuristic: higher links are not verified.
    VerticesOnly,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "dim", rename_all = "snake_case")]
pub enum VerdictKind {
    Contractible,
    Sphere(isize),
    Manifold(usize),
    /// Geodesic-ready with boundary walls; a census-level label only.
    ManifoldWithBoundary(usize),
    GeodesicReady,
    None,
    Undecided,
}

#[derive(Clone, Debug, Serialize)]
pub struct TopologyVerdict {
    pub kind: VerdictKind,
    pub witness: Option<Vertex>,
    /// Cofacet count per wall.
    pub wall_census: Vec<(Simplex, usize)>,
}

impl TopologyVerdict {
    pub fn boundary_walls(&self) -> usize {
        self.wall_census.iter().filter(|(_, n)| *n == 1).count()
    }
}

/// Memoising recogniser. Safe to share across threads.
pub struct Recognizer {
    limit: usize,
    links: LinkCheck,
    contractible: RwLock<HashMap<SimplicialComplex, bool>>,
    spheres: RwLock<HashMap<(SimplicialComplex, isize), bool>>,
}

impl Default for Recognizer {
    fn default() -> Self {
        Self::new(DEFAULT_SIZE_LIMIT, LinkCheck::AllSimplices)
    }
}

impl Recognizer {
    pub fn new(limit: usize, links: LinkCheck) -> Self {
        Recognizer {
            limit,
            links,
            contractible: RwLock::new(HashMap::new()),
            spheres: RwLock::new(HashMap::new()),
        }
    }

    pub fn link_check(&self) -> LinkCheck {
        self.links
    }

    fn guard(&self, c: &SimplicialComplex) -> Result<()> {
        if c.len() > self.limit {
            return Err(Error::TooLarge {
                simplices: c.len(),
                limit: self.limit,
            });
        }
        Ok(())
    }

    pub fn is_contractible(&self, c: &SimplicialComplex) -> Result<bool> {
        self.guard(c)?;
        if c.is_empty() {
            return Ok(false);
        }
        if c.len() == 1 {
            return Ok(true);
        }
        if c.euler() != 1 {
            return Ok(false);
        }
        if cone_apex(c).is_some() {
            return Ok(true);
        }
        let key = canonical_relabel(c);
        if let Some(&hit) = self.contractible.read().unwrap().get(&key) {
            return Ok(hit);
        }
        let verdict = self.search_witness(&key)?.is_some();
        self.contractible.write().unwrap().insert(key, verdict);
        Ok(verdict)
    }

    /// First vertex (canonical order) whose unit sphere and star
    /// complement are both contractible. `None` for the one-point complex
    /// and for non-contractible complexes.
    pub fn contractibility_witness(&self, c: &SimplicialComplex) -> Result<Option<Vertex>> {
        self.guard(c)?;
        if c.len() <= 1 {
            return Ok(None);
        }
        self.search_witness(c)
    }

    fn search_witness(&self, c: &SimplicialComplex) -> Result<Option<Vertex>> {
        for i in c.dim_range(0) {
            let sphere = c.unit_sphere_at(i);
            if !self.is_contractible(&sphere)? {
                continue;
            }
            if self.is_contractible(&c.complement_at(i))? {
                return Ok(Some(c.simplex(i).vertices()[0]));
            }
        }
        Ok(None)
    }

    pub fn is_sphere(&self, c: &SimplicialComplex, d: isize) -> Result<bool> {
        if d < -1 {
            return Ok(false);
        }
        if d == -1 {
            return Ok(c.is_empty());
        }
        self.guard(c)?;
        if c.is_empty() || c.dim() != d {
            return Ok(false);
        }
        let expected_euler = if d % 2 == 0 { 2 } else { 0 };
        if c.euler() != expected_euler {
            return Ok(false);
        }
        let key = (canonical_relabel(c), d);
        if let Some(&hit) = self.spheres.read().unwrap().get(&key) {
            return Ok(hit);
        }
        let verdict =
            self.is_manifold(&key.0, d as usize)? && self.sphere_witness(&key.0)?.is_some();
        self.spheres.write().unwrap().insert(key, verdict);
        Ok(verdict)
    }

    fn sphere_witness(&self, c: &SimplicialComplex) -> Result<Option<Vertex>> {
        for i in c.dim_range(0) {
            if self.is_contractible(&c.complement_at(i))? {
                return Ok(Some(c.simplex(i).vertices()[0]));
            }
        }
        Ok(None)
    }

    pub fn is_manifold(&self, c: &SimplicialComplex, q: usize) -> Result<bool> {
        self.guard(c)?;
        if c.is_empty() || c.dim() != q as isize || !c.is_pure() {
            return Ok(false);
        }
        let range = match self.links {
            LinkCheck::AllSimplices => 0..c.len(),
            LinkCheck::VerticesOnly => c.dim_range(0),
        };
        for i in range {
            if !self.is_sphere(&c.unit_sphere_at(i), q as isize - 1)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Simplices whose unit sphere is not a `(q-1)`-sphere.
    pub fn bad_links(&self, c: &SimplicialComplex, q: usize) -> Result<Vec<Simplex>> {
        let mut bad = Vec::new();
        for i in 0..c.len() {
            if !self.is_sphere(&c.unit_sphere_at(i), q as isize - 1)? {
                bad.push(c.simplex(i).clone());
            }
        }
        Ok(bad)
    }

    /// Most specific verdict among sphere, manifold, contractible,
    /// geodesic-ready. Recognition overflow yields `Undecided`.
    pub fn classify(&self, c: &SimplicialComplex) -> TopologyVerdict {
        let readiness = geodesic_readiness(c);
        let census = readiness.wall_census.clone();
        let q = c.dim();
        let attempt = || -> Result<TopologyVerdict> {
            if q >= 0 && self.is_manifold(c, q as usize)? {
                let witness = self.sphere_witness(c)?;
                let kind = if self.is_sphere(c, q)? {
                    VerdictKind::Sphere(q)
                } else {
                    VerdictKind::Manifold(q as usize)
                };
                return Ok(TopologyVerdict {
                    kind,
                    witness,
                    wall_census: census.clone(),
                });
            }
            if q < 0 && self.is_sphere(c, -1)? {
                return Ok(TopologyVerdict {
                    kind: VerdictKind::Sphere(-1),
                    witness: None,
                    wall_census: census.clone(),
                });
            }
            if self.is_contractible(c)? {
                return Ok(TopologyVerdict {
                    kind: VerdictKind::Contractible,
                    witness: self.contractibility_witness(c)?,
                    wall_census: census.clone(),
                });
            }
            Ok(readiness.clone())
        };
        match attempt() {
            Ok(v) => v,
            Err(_) => TopologyVerdict {
                kind: VerdictKind::Undecided,
                witness: None,
                wall_census: census,
            },
        }
    }
}

/// A vertex lying in every maximal simplex, if any. Cones are contractible.
fn cone_apex(c: &SimplicialComplex) -> Option<Vertex> {
    let maximal: Vec<&Simplex> = c.maximal_simplices().collect();
    let first = maximal.first()?;
    first
        .vertices()
        .iter()
        .copied()
        .find(|&v| maximal.iter().all(|m| m.contains_vertex(v)))
}

/// Relabels vertices `1..=n` in order of (star profile, neighbour degree
/// profile, old label). The result is isomorphic to `c`.
pub fn canonical_relabel(c: &SimplicialComplex) -> SimplicialComplex {
    let top = (c.dim() + 1).max(0) as usize;
    let verts = c.dim_range(0);
    let mut star_profile: HashMap<Vertex, Vec<usize>> = HashMap::new();
    for i in verts.clone() {
        let mut counts = vec![0usize; top];
        for &j in c.superset_indices(i) {
            counts[c.simplex(j).dim()] += 1;
        }
        star_profile.insert(c.simplex(i).vertices()[0], counts);
    }
    let mut order: Vec<(Vec<usize>, Vec<usize>, Vertex)> = Vec::with_capacity(verts.len());
    for i in verts {
        let v = c.simplex(i).vertices()[0];
        let mut nbr: Vec<usize> = c
            .cofacet_indices(i)
            .map(|j| {
                let w = c
                    .simplex(j)
                    .vertices()
                    .iter()
                    .copied()
                    .find(|&w| w != v)
                    .unwrap();
                star_profile[&w].get(1).copied().unwrap_or(0)
            })
            .collect();
        nbr.sort_unstable();
        order.push((star_profile[&v].clone(), nbr, v));
    }
    order.sort();
    let relabel: HashMap<Vertex, Vertex> = order
        .iter()
        .enumerate()
        .map(|(k, (_, _, v))| (*v, k as Vertex + 1))
        .collect();
    let mut simplices: Vec<Simplex> = c
        .simplices()
        .iter()
        .map(|s| {
            let mut v: Vec<Vertex> = s.vertices().iter().map(|x| relabel[x]).collect();
            v.sort_unstable();
            Simplex::from_sorted(v)
        })
        .collect();
    simplices.sort_unstable();
    SimplicialComplex::from_canonical(simplices)
}

/// The flow is defined when the complex is pure and every wall has one or
/// two cofacets. Boundary walls are those with one.
///
/// For a 0-dimensional complex the only wall is the empty set, whose
/// cofacets are all the vertices; it is reported under no simplex.
pub fn geodesic_readiness(c: &SimplicialComplex) -> TopologyVerdict {
    let q = c.dim();
    let mut census = Vec::new();
    let ready = if q < 0 || !c.is_pure() {
        false
    } else if q == 0 {
        let n = c.len();
        n == 1 || n == 2
    } else {
        let mut ok = true;
        for w in c.dim_range(q as usize - 1) {
            let n = c.cofacet_indices(w).count();
            ok &= n == 1 || n == 2;
            census.push((c.simplex(w).clone(), n));
        }
        ok
    };
    TopologyVerdict {
        kind: if ready {
            VerdictKind::GeodesicReady
        } else {
            VerdictKind::None
        },
        witness: None,
        wall_census: census,
    }
}

/// JSON shape emitted by the `check` subcommand.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub pure: bool,
    pub dimension: isize,
    pub manifold: bool,
    pub sphere: bool,
    pub geodesic_ready: bool,
    pub boundary_walls: usize,
}

pub fn check(c: &SimplicialComplex, r: &Recognizer) -> Result<CheckReport> {
    let readiness = geodesic_readiness(c);
    let q = c.dim();
    let manifold = q >= 0 && r.is_manifold(c, q as usize)?;
    let sphere = r.is_sphere(c, q)?;
    Ok(CheckReport {
        pure: c.is_pure(),
        dimension: q,
        manifold,
        sphere,
        geodesic_ready: readiness.kind == VerdictKind::GeodesicReady,
        boundary_walls: readiness.boundary_walls(),
    })
}

/// Wall census as a map, convenient for lookups.
pub fn wall_census_map(c: &SimplicialComplex) -> BTreeMap<Simplex, usize> {
    geodesic_readiness(c).wall_census.into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::whitney;
    use crate::graph::Graph;

    fn gen(sets: &[&[Vertex]]) -> SimplicialComplex {
        SimplicialComplex::generate(sets.iter().map(|x| x.iter().copied())).unwrap()
    }

    fn octahedron() -> SimplicialComplex {
        whitney(&Graph::complete_multipartite(&[2, 2, 2]))
    }

    #[test]
    fn contractible_basics() {
        let r = Recognizer::default();
        assert!(r.is_contractible(&gen(&[&[1]])).unwrap());
        assert!(r.is_contractible(&whitney(&Graph::complete(4))).unwrap());
        assert!(!r.is_contractible(&whitney(&Graph::cycle(4))).unwrap());
        assert!(!r.is_contractible(&SimplicialComplex::empty()).unwrap());
        assert!(r
            .is_contractible(&gen(&[&[1, 2], &[2, 3], &[3, 4]]))
            .unwrap());
        // two points
        assert!(!r.is_contractible(&gen(&[&[1], &[2]])).unwrap());
    }

    #[test]
    fn witness_satisfies_definition() {
        let r = Recognizer::default();
        let disk = octahedron()
            .complement_of_star(&Simplex::new([1]).unwrap())
            .unwrap();
        let w = r
            .contractibility_witness(&disk)
            .unwrap()
            .expect("disk is contractible");
        let x = Simplex::new([w]).unwrap();
        assert!(r.is_contractible(&disk.unit_sphere(&x).unwrap()).unwrap());
        assert!(r
            .is_contractible(&disk.complement_of_star(&x).unwrap())
            .unwrap());
    }

    #[test]
    fn spheres() {
        let r = Recognizer::default();
        assert!(r.is_sphere(&SimplicialComplex::empty(), -1).unwrap());
        assert!(r.is_sphere(&octahedron(), 2).unwrap());
        assert!(!r.is_sphere(&whitney(&Graph::complete(3)), 2).unwrap());
        assert!(r.is_sphere(&gen(&[&[1], &[2]]), 0).unwrap());
        for n in 4..9 {
            assert!(r.is_sphere(&whitney(&Graph::cycle(n)), 1).unwrap(), "C{n}");
        }
        // triangle boundary: its edges are not a Whitney complex of C3 but
        // the recursive definition still accepts it as a 1-sphere
        assert!(r.is_sphere(&gen(&[&[1, 2], &[2, 3], &[1, 3]]), 1).unwrap());
    }

    #[test]
    fn manifolds() {
        let r = Recognizer::default();
        assert!(r.is_manifold(&octahedron(), 2).unwrap());
        assert!(!r
            .is_manifold(&gen(&[&[1, 2], &[2, 3], &[3, 4]]), 1)
            .unwrap());
        assert!(!r.is_manifold(&octahedron(), 1).unwrap());
        // two octahedra glued at a vertex: vertex link is two circles
        let pinched = gen(&[
            &[1, 3, 5],
            &[1, 3, 6],
            &[1, 4, 5],
            &[1, 4, 6],
            &[2, 3, 5],
            &[2, 3, 6],
            &[2, 4, 5],
            &[2, 4, 6],
            &[1, 13, 15],
            &[1, 13, 16],
            &[1, 14, 15],
            &[1, 14, 16],
            &[12, 13, 15],
            &[12, 13, 16],
            &[12, 14, 15],
            &[12, 14, 16],
        ]);
        assert!(!r.is_manifold(&pinched, 2).unwrap());
        assert_eq!(
            r.bad_links(&pinched, 2).unwrap(),
            vec![Simplex::new([1]).unwrap()]
        );
    }

    #[test]
    fn size_ceiling() {
        let r = Recognizer::new(10, LinkCheck::AllSimplices);
        assert!(matches!(
            r.is_manifold(&octahedron(), 2),
            Err(Error::TooLarge {
                simplices: 26,
                limit: 10
            })
        ));
        assert_eq!(r.classify(&octahedron()).kind, VerdictKind::Undecided);
    }

    #[test]
    fn readiness() {
        let v = geodesic_readiness(&octahedron());
        assert_eq!(v.kind, VerdictKind::GeodesicReady);
        assert!(v.wall_census.iter().all(|(_, n)| *n == 2));

        let path = gen(&[&[1, 2], &[2, 3], &[3, 4]]);
        let v = geodesic_readiness(&path);
        assert_eq!(v.kind, VerdictKind::GeodesicReady);
        let boundary: Vec<_> = v
            .wall_census
            .iter()
            .filter(|(_, n)| *n == 1)
            .map(|(w, _)| w.clone())
            .collect();
        assert_eq!(
            boundary,
            vec![Simplex::new([1]).unwrap(), Simplex::new([4]).unwrap()]
        );

        let book = gen(&[&[1, 2, 3], &[1, 2, 4], &[1, 2, 5]]);
        let v = geodesic_readiness(&book);
        assert_eq!(v.kind, VerdictKind::None);
        assert_eq!(wall_census_map(&book)[&Simplex::new([1, 2]).unwrap()], 3);

        assert_eq!(
            geodesic_readiness(&gen(&[&[1, 2, 3], &[3, 4]])).kind,
            VerdictKind::None
        );
        assert_eq!(
            geodesic_readiness(&gen(&[&[1]])).kind,
            VerdictKind::GeodesicReady
        );
    }

    #[test]
    fn classify_kinds() {
        let r = Recognizer::default();
        assert_eq!(r.classify(&octahedron()).kind, VerdictKind::Sphere(2));
        assert_eq!(
            r.classify(&whitney(&Graph::complete(3))).kind,
            VerdictKind::Contractible
        );
        assert_eq!(
            r.classify(&SimplicialComplex::empty()).kind,
            VerdictKind::Sphere(-1)
        );
    }

    #[test]
    fn relabel_is_isomorphic() {
        let c = gen(&[&[10, 20, 30], &[20, 30, 40]]);
        let k = canonical_relabel(&c);
        assert_eq!(k.f_vector(), c.f_vector());
        assert_eq!(k.vertices(), vec![1, 2, 3, 4]);
    }
}
