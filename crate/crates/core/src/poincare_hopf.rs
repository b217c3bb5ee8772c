//! Pushing simplex energies to vertices.
//!
//! Every simplex `x` carries the energy `ω(x) = (-1)^dim(x)`; these add up
//! to the Euler characteristic. An [`EnergyRule`] sends each simplex to a
//! facet containing it and then to a vertex of that facet. Summing the
//! energies arriving at each vertex gives an integer divisor whose total is
//! again the Euler characteristic. The chosen vertex need not lie in the
//! simplex itself, only in the chosen facet.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fmt::Write as _;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::complex::{Simplex, SimplicialComplex, Vertex};
use crate::error::{Error, Result};

/// How a rule was produced.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Provenance {
    MinFunctions,
    Random { seed: u64 },
}

/// Per simplex (canonical index): the chosen facet and the chosen vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnergyRule {
    facet: Vec<usize>,
    vertex: Vec<Vertex>,
    pub provenance: Provenance,
}

impl EnergyRule {
    pub fn facet_of<'c>(&self, c: &'c SimplicialComplex, x: &Simplex) -> Result<&'c Simplex> {
        Ok(c.simplex(self.facet[c.require(x)?]))
    }

    pub fn vertex_of(&self, c: &SimplicialComplex, x: &Simplex) -> Result<Vertex> {
        Ok(self.vertex[c.require(x)?])
    }

    /// Checks that every chosen facet contains its simplex and every chosen
    /// vertex lies in the chosen facet.
    pub fn validate(&self, c: &SimplicialComplex) -> Result<()> {
        if self.facet.len() != c.len() || self.vertex.len() != c.len() {
            return Err(Error::invalid("rule was built for a different complex"));
        }
        let q = c.dim();
        for (i, x) in c.simplices().iter().enumerate() {
            let f = c.simplex(self.facet[i]);
            if f.dim() as isize != q || !x.is_face_of(f) || !f.contains_vertex(self.vertex[i]) {
                return Err(Error::Verification(format!("rule is inconsistent at {x}")));
            }
        }
        Ok(())
    }
}

fn require_pure(c: &SimplicialComplex) -> Result<()> {
    if c.is_empty() || !c.is_pure() {
        return Err(Error::invalid("energy rules need a non-empty pure complex"));
    }
    Ok(())
}

fn containing_facets(c: &SimplicialComplex, i: usize) -> Vec<usize> {
    let q = c.dim() as usize;
    let mut out: Vec<usize> = c
        .superset_indices(i)
        .iter()
        .copied()
        .filter(|&j| c.simplex(j).dim() == q)
        .collect();
    if c.simplex(i).dim() == q {
        out.push(i);
    }
    out
}

fn arg_min<T: Copy>(items: impl Iterator<Item = T>, key: impl Fn(T) -> f64) -> T {
    items
        .min_by(|a, b| key(*a).total_cmp(&key(*b)))
        .expect("non-empty choice")
}

fn check_injective<K: Ord + std::fmt::Debug>(name: &str, values: &BTreeMap<K, f64>) -> Result<()> {
    let mut seen = HashSet::new();
    for v in values.values() {
        if !v.is_finite() || !seen.insert(v.to_bits()) {
            return Err(Error::invalid(format!(
                "{name} must take distinct finite values"
            )));
        }
    }
    Ok(())
}

/// Each simplex goes to the containing facet with the smallest `g`, then to
/// that facet's vertex with the smallest `f`.
pub fn min_rule(
    c: &SimplicialComplex,
    f: &BTreeMap<Vertex, f64>,
    g: &BTreeMap<Simplex, f64>,
) -> Result<EnergyRule> {
    require_pure(c)?;
    check_injective("f", f)?;
    check_injective("g", g)?;
    for v in c.vertices() {
        if !f.contains_key(&v) {
            return Err(Error::invalid(format!("f has no value at vertex {v}")));
        }
    }
    for x in c.facets() {
        if !g.contains_key(x) {
            return Err(Error::invalid(format!("g has no value at facet {x}")));
        }
    }
    let mut facet = Vec::with_capacity(c.len());
    let mut vertex = Vec::with_capacity(c.len());
    for i in 0..c.len() {
        let fi = arg_min(containing_facets(c, i).into_iter(), |j| g[c.simplex(j)]);
        facet.push(fi);
        vertex.push(arg_min(c.simplex(fi).vertices().iter().copied(), |v| f[&v]));
    }
    Ok(EnergyRule {
        facet,
        vertex,
        provenance: Provenance::MinFunctions,
    })
}

/// Random injective `f` on vertices and `g` on facets: shuffled ranks.
pub fn seeded_functions(
    c: &SimplicialComplex,
    seed: u64,
) -> (BTreeMap<Vertex, f64>, BTreeMap<Simplex, f64>) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let vs = c.vertices();
    let mut ranks: Vec<usize> = (0..vs.len()).collect();
    ranks.shuffle(&mut rng);
    let f = vs
        .into_iter()
        .zip(ranks)
        .map(|(v, r)| (v, r as f64))
        .collect();
    let fs = c.facets();
    let mut ranks: Vec<usize> = (0..fs.len()).collect();
    ranks.shuffle(&mut rng);
    let g = fs
        .iter()
        .cloned()
        .zip(ranks)
        .map(|(x, r)| (x, r as f64))
        .collect();
    (f, g)
}

/// Uniform choices from ChaCha8 streams keyed by canonical index: stream
/// `2i` picks the facet for simplex `i`, stream `2j + 1` picks the vertex
/// of facet `j`. The vertex is a function of the facet alone.
pub fn random_rule(c: &SimplicialComplex, seed: u64) -> Result<EnergyRule> {
    require_pure(c)?;
    let stream = |s: u64| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(s);
        rng
    };
    let mut to_vertex = BTreeMap::new();
    for x in c.facets() {
        let j = c.index_of(x).unwrap();
        let vs = x.vertices();
        to_vertex.insert(j, vs[stream(2 * j as u64 + 1).random_range(0..vs.len())]);
    }
    let mut facet = Vec::with_capacity(c.len());
    let mut vertex = Vec::with_capacity(c.len());
    for i in 0..c.len() {
        let options = containing_facets(c, i);
        let fi = options[stream(2 * i as u64).random_range(0..options.len())];
        facet.push(fi);
        vertex.push(to_vertex[&fi]);
    }
    Ok(EnergyRule {
        facet,
        vertex,
        provenance: Provenance::Random { seed },
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Divisor {
    pub schema: &'static str,
    pub divisor: BTreeMap<Vertex, i64>,
    pub total: i64,
    pub euler: i64,
}

pub fn energy(x: &Simplex) -> i64 {
    if x.dim().is_multiple_of(2) {
        1
    } else {
        -1
    }
}

pub fn push_energy(c: &SimplicialComplex, rule: &EnergyRule) -> Result<Divisor> {
    rule.validate(c)?;
    let mut divisor: BTreeMap<Vertex, i64> = c.vertices().into_iter().map(|v| (v, 0)).collect();
    for (i, x) in c.simplices().iter().enumerate() {
        *divisor.get_mut(&rule.vertex[i]).unwrap() += energy(x);
    }
    let total = divisor.values().sum();
    Ok(Divisor {
        schema: crate::io::SCHEMA,
        divisor,
        total,
        euler: c.euler(),
    })
}

/// The rule restricted to vertices: a map `V → V`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SelfMap {
    pub map: BTreeMap<Vertex, Vertex>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Census {
    pub vertices: usize,
    pub fixed_points: usize,
    /// Cycle lengths, ascending.
    pub cycles: Vec<usize>,
    /// Vertices not on a cycle.
    pub tree_vertices: usize,
}

pub fn vertex_self_map(c: &SimplicialComplex, rule: &EnergyRule) -> Result<SelfMap> {
    rule.validate(c)?;
    let map = c
        .vertices()
        .into_iter()
        .map(|v| {
            (
                v,
                rule.vertex[c.index_of(&Simplex::from_sorted(vec![v])).unwrap()],
            )
        })
        .collect();
    Ok(SelfMap { map })
}

impl SelfMap {
    pub fn census(&self) -> Census {
        let mut on_cycle: BTreeSet<Vertex> = BTreeSet::new();
        let mut cycles = Vec::new();
        let mut done: BTreeSet<Vertex> = BTreeSet::new();
        for &start in self.map.keys() {
            let mut path = Vec::new();
            let mut seen_here = BTreeMap::new();
            let mut v = start;
            while !done.contains(&v) && !seen_here.contains_key(&v) {
                seen_here.insert(v, path.len());
                path.push(v);
                v = self.map[&v];
            }
            if let Some(&k) = seen_here.get(&v) {
                cycles.push(path.len() - k);
                on_cycle.extend(&path[k..]);
            }
            done.extend(path);
        }
        cycles.sort_unstable();
        Census {
            vertices: self.map.len(),
            fixed_points: cycles.iter().filter(|&&l| l == 1).count(),
            tree_vertices: self.map.len() - on_cycle.len(),
            cycles,
        }
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph selfmap {\n");
        for (a, b) in &self.map {
            writeln!(out, "  {a} -> {b};").unwrap();
        }
        out.push_str("}\n");
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::catalog_complex;
    use crate::graph::Graph;
    use crate::whitney;

    fn s(v: &[Vertex]) -> Simplex {
        Simplex::new(v.iter().copied()).unwrap()
    }

    #[test]
    fn single_facet() {
        let k3 = whitney(&Graph::complete(3));
        let f = BTreeMap::from([(1, 1.0), (2, 2.0), (3, 3.0)]);
        let g = BTreeMap::from([(s(&[1, 2, 3]), 0.5)]);
        let r = min_rule(&k3, &f, &g).unwrap();
        let d = push_energy(&k3, &r).unwrap();
        assert_eq!(d.divisor, BTreeMap::from([(1, 1), (2, 0), (3, 0)]));
        let m = vertex_self_map(&k3, &r).unwrap();
        assert!(m.map.values().all(|&v| v == 1));
        let census = m.census();
        assert_eq!((census.fixed_points, census.tree_vertices), (1, 2));
    }

    #[test]
    fn path_min_rule() {
        let p = catalog_complex("path3").unwrap();
        let f = BTreeMap::from([(1, 1.0), (2, 2.0), (3, 3.0), (4, 4.0)]);
        let g = BTreeMap::from([(s(&[1, 2]), 1.0), (s(&[2, 3]), 2.0), (s(&[3, 4]), 3.0)]);
        let r = min_rule(&p, &f, &g).unwrap();
        let to_one: Vec<String> = p
            .simplices()
            .iter()
            .filter(|x| r.vertex_of(&p, x).unwrap() == 1)
            .map(|x| x.to_string())
            .collect();
        assert_eq!(to_one, ["{1}", "{2}", "{1,2}"]);
        let d = push_energy(&p, &r).unwrap();
        assert_eq!(
            d.divisor.values().copied().collect::<Vec<_>>(),
            [1, 0, 0, 0]
        );
        let bad = BTreeMap::from([(1, 1.0), (2, 1.0), (3, 3.0), (4, 4.0)]);
        assert!(min_rule(&p, &bad, &g).is_err());
    }

    #[test]
    fn random_rules_conserve() {
        for name in ["octahedron", "rp3", "path3"] {
            let c = catalog_complex(name).unwrap();
            for seed in 0..20 {
                let r = random_rule(&c, seed).unwrap();
                let d = push_energy(&c, &r).unwrap();
                assert_eq!(d.total, c.euler(), "{name} {seed}");
                assert_eq!(r, random_rule(&c, seed).unwrap());
                let (f, g) = seeded_functions(&c, seed);
                let d = push_energy(&c, &min_rule(&c, &f, &g).unwrap()).unwrap();
                assert_eq!(d.total, c.euler());
            }
        }
    }

    #[test]
    fn non_pure_rejected() {
        let c = SimplicialComplex::generate([vec![1, 2, 3], vec![3, 4]]).unwrap();
        assert!(random_rule(&c, 1).is_err());
    }

    #[test]
    fn census_counts_cycles() {
        let m = SelfMap {
            map: BTreeMap::from([(1, 2), (2, 1), (3, 3), (4, 3), (5, 4)]),
        };
        let c = m.census();
        assert_eq!(c.cycles, vec![1, 2]);
        assert_eq!(c.fixed_points, 1);
        assert_eq!(c.tree_vertices, 2);
        assert!(m.to_dot().contains("5 -> 4;"));
    }
}
