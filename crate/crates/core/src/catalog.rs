//! Built-in complexes.
//!
//! Fixed entries are loaded from the JSON files under `data/`, which are
//! compiled into the crate. `rp2` (a 15-vertex edge list) and `rp3` (a
//! 40-facet list) are stored verbatim. The icosahedron and the four Catalan
//! solids whose skeletons are 2-manifolds were generated by [`derive`] (see
//! the `derive_catalog_data` example) and are checked against `data/SHA256SUMS`.
//!
//! Parametric entries: `cycle<n>` (n ≥ 4), `simplex<q>`. Any name may take a
//! refinement suffix `@k` for the `k`-fold barycentric refinement, e.g.
//! `octahedron@2`.
//!
//! The Catalan entries are named by solid. Their positions in the usual
//! alphabetical listing of Archimedean duals are 3 (disdyakis dodecahedron),
//! 4 (disdyakis triacontahedron), 7 (pentakis dodecahedron) and 10
//! (tetrakis hexahedron).

use serde::Serialize;

use crate::complex::{whitney, FVector, SimplicialComplex};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::io::{parse_complex, Format};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Construction {
    WhitneyOfGraph,
    FacetList,
    Circulant { n: u32, jumps: Vec<u32> },
    CompleteMultipartite { parts: Vec<u32> },
    RefinementOf { entry: String, depth: usize },
}

#[derive(Clone, Debug, Serialize)]
pub struct CatalogEntry {
    pub name: String,
    pub construction: Construction,
    pub f_vector: Vec<usize>,
    pub euler: i64,
    /// Dimension when the entry is a closed manifold.
    pub manifold_dim: Option<usize>,
}

struct Fixed {
    name: &'static str,
    f_vector: &'static [usize],
    manifold_dim: Option<usize>,
}

const FIXED: &[Fixed] = &[
    Fixed {
        name: "point",
        f_vector: &[1],
        manifold_dim: Some(0),
    },
    Fixed {
        name: "path3",
        f_vector: &[4, 3],
        manifold_dim: None,
    },
    Fixed {
        name: "triangle-boundary",
        f_vector: &[3, 3],
        manifold_dim: Some(1),
    },
    Fixed {
        name: "octahedron",
        f_vector: &[6, 12, 8],
        manifold_dim: Some(2),
    },
    Fixed {
        name: "icosahedron",
        f_vector: &[12, 30, 20],
        manifold_dim: Some(2),
    },
    Fixed {
        name: "rp2",
        f_vector: &[15, 42, 28],
        manifold_dim: Some(2),
    },
    Fixed {
        name: "rp3",
        f_vector: &[11, 51, 80, 40],
        manifold_dim: Some(3),
    },
    Fixed {
        name: "torus13",
        f_vector: &[13, 39, 26],
        manifold_dim: Some(2),
    },
    Fixed {
        name: "tetrakis-hexahedron",
        f_vector: &[14, 36, 24],
        manifold_dim: Some(2),
    },
    Fixed {
        name: "pentakis-dodecahedron",
        f_vector: &[32, 90, 60],
        manifold_dim: Some(2),
    },
    Fixed {
        name: "disdyakis-dodecahedron",
        f_vector: &[26, 72, 48],
        manifold_dim: Some(2),
    },
    Fixed {
        name: "disdyakis-triacontahedron",
        f_vector: &[62, 180, 120],
        manifold_dim: Some(2),
    },
];

/// The four Catalan solids whose Whitney complexes are 2-manifolds.
pub const CATALAN: [&str; 4] = [
    "disdyakis-dodecahedron",
    "disdyakis-triacontahedron",
    "pentakis-dodecahedron",
    "tetrakis-hexahedron",
];

/// Quadratic residues mod 13.
pub const TORUS13_JUMPS: [u32; 6] = [1, 3, 4, 9, 10, 12];

fn data_file(name: &str) -> Option<(&'static str, Format)> {
    Some(match name {
        "rp2" => (include_str!("../data/rp2.json"), Format::GraphJson),
        "rp3" => (include_str!("../data/rp3.json"), Format::FacetsJson),
        "icosahedron" => (include_str!("../data/icosahedron.json"), Format::GraphJson),
        "tetrakis-hexahedron" => (
            include_str!("../data/tetrakis-hexahedron.json"),
            Format::FacetsJson,
        ),
        "pentakis-dodecahedron" => (
            include_str!("../data/pentakis-dodecahedron.json"),
            Format::FacetsJson,
        ),
        "disdyakis-dodecahedron" => (
            include_str!("../data/disdyakis-dodecahedron.json"),
            Format::FacetsJson,
        ),
        "disdyakis-triacontahedron" => (
            include_str!("../data/disdyakis-triacontahedron.json"),
            Format::FacetsJson,
        ),
        _ => return None,
    })
}

fn construction_of(name: &str) -> Construction {
    match name {
        "octahedron" => Construction::CompleteMultipartite {
            parts: vec![2, 2, 2],
        },
        "torus13" => Construction::Circulant {
            n: 13,
            jumps: TORUS13_JUMPS.to_vec(),
        },
        "rp2" | "icosahedron" => Construction::WhitneyOfGraph,
        _ => Construction::FacetList,
    }
}

fn gen(sets: &[&[u32]]) -> SimplicialComplex {
    SimplicialComplex::generate(sets.iter().map(|s| s.iter().copied())).expect("static facets")
}

fn build_fixed(name: &str) -> Option<SimplicialComplex> {
    if let Some((text, format)) = data_file(name) {
        return Some(
            parse_complex(text, format, &format!("data/{name}.json")).expect("bundled data parses"),
        );
    }
    Some(match name {
        "point" => gen(&[&[1]]),
        "path3" => gen(&[&[1, 2], &[2, 3], &[3, 4]]),
        "triangle-boundary" => gen(&[&[1, 2], &[2, 3], &[1, 3]]),
        "octahedron" => whitney(&Graph::complete_multipartite(&[2, 2, 2])),
        "torus13" => whitney(&Graph::circulant(13, &TORUS13_JUMPS)),
        _ => return None,
    })
}

fn parse_param(name: &str, prefix: &str) -> Option<u32> {
    let rest = name.strip_prefix(prefix)?;
    let rest = rest
        .strip_prefix('(')
        .and_then(|r| r.strip_suffix(')'))
        .unwrap_or(rest);
    rest.parse().ok()
}

fn build_base(name: &str) -> Result<SimplicialComplex> {
    if let Some(c) = build_fixed(name) {
        return Ok(c);
    }
    if let Some(n) = parse_param(name, "cycle") {
        if n < 4 {
            return Err(Error::invalid(format!(
                "cycle needs at least 4 vertices, got {n}"
            )));
        }
        return Ok(whitney(&Graph::cycle(n)));
    }
    if let Some(q) = parse_param(name, "simplex") {
        return Ok(whitney(&Graph::complete(q + 1)));
    }
    Err(Error::UnknownCatalog {
        name: name.to_string(),
        available: available_names(),
    })
}

fn split_refinement(name: &str) -> Result<(&str, usize)> {
    match name.split_once('@') {
        None => Ok((name, 0)),
        Some((base, k)) => {
            let k = k
                .parse()
                .map_err(|_| Error::invalid(format!("bad refinement depth in {name:?}")))?;
            Ok((base, k))
        }
    }
}

/// Looks up a catalog complex by name.
pub fn catalog_complex(name: &str) -> Result<SimplicialComplex> {
    let (base, depth) = split_refinement(name)?;
    Ok(build_base(base)?.barycentric_n(depth))
}

pub fn available_names() -> Vec<String> {
    let mut names: Vec<String> = FIXED.iter().map(|f| f.name.to_string()).collect();
    names.push("cycle<n>".into());
    names.push("simplex<q>".into());
    names
}

/// Stirling numbers of the second kind, `S(n, k)`.
fn stirling2(n: usize, k: usize) -> usize {
    let mut row = vec![0usize; k + 1];
    row[0] = 1;
    for _ in 0..n {
        for j in (1..=k).rev() {
            row[j] = j * row[j] + row[j - 1];
        }
        row[0] = 0;
    }
    row[k]
}

/// f-vector of the barycentric refinement, from the f-vector alone: a chain
/// of `k + 1` faces topped by a `j`-simplex is an ordered partition of its
/// `j + 1` vertices into `k + 1` blocks.
pub fn refined_f_vector(f: &[usize]) -> Vec<usize> {
    (0..f.len())
        .map(|k| {
            let fact: usize = (1..=k + 1).product();
            (k..f.len())
                .map(|j| f[j] * fact * stirling2(j + 1, k + 1))
                .sum()
        })
        .collect()
}

fn euler_of(f: &[usize]) -> i64 {
    f.iter()
        .enumerate()
        .map(|(k, &c)| if k % 2 == 0 { c as i64 } else { -(c as i64) })
        .sum()
}

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Entry metadata, including the expected invariants.
pub fn entry(name: &str) -> Result<CatalogEntry> {
    let (base, depth) = split_refinement(name)?;
    let (mut f, construction, manifold_dim) =
        if let Some(fx) = FIXED.iter().find(|f| f.name == base) {
            (fx.f_vector.to_vec(), construction_of(base), fx.manifold_dim)
        } else if let Some(n) = parse_param(base, "cycle").filter(|&n| n >= 4) {
            (
                vec![n as usize, n as usize],
                Construction::WhitneyOfGraph,
                Some(1),
            )
        } else if let Some(q) = parse_param(base, "simplex") {
            let q = q as usize;
            let f = (0..=q).map(|k| binomial(q + 1, k + 1)).collect();
            let dim = (q == 0).then_some(0);
            (
                f,
                Construction::CompleteMultipartite {
                    parts: vec![1; q + 1],
                },
                dim,
            )
        } else {
            return Err(Error::UnknownCatalog {
                name: name.to_string(),
                available: available_names(),
            });
        };
    for _ in 0..depth {
        f = refined_f_vector(&f);
    }
    let construction = if depth > 0 {
        Construction::RefinementOf {
            entry: base.to_string(),
            depth,
        }
    } else {
        construction
    };
    Ok(CatalogEntry {
        name: name.to_string(),
        construction,
        euler: euler_of(&f),
        f_vector: f,
        manifold_dim,
    })
}

/// Metadata for every fixed entry.
pub fn entries() -> Vec<CatalogEntry> {
    FIXED.iter().map(|f| entry(f.name).unwrap()).collect()
}

/// Compares a loaded complex with the expected invariants.
pub fn verify_entry(e: &CatalogEntry, c: &SimplicialComplex) -> Result<FVector> {
    let f = c.f_vector();
    if f.counts != e.f_vector || f.euler != e.euler {
        return Err(Error::Verification(format!(
            "{}: expected f-vector {:?} (euler {}), got {} (euler {})",
            e.name, e.f_vector, e.euler, f, f.euler
        )));
    }
    Ok(f)
}

/// Generation of the bundled polyhedron files from combinatorial tables.
pub mod derive {
    use std::fmt::Write as _;

    use super::*;
    use crate::complex::Vertex;

    /// Icosahedron on `1..=12`: a top vertex, an upper and a lower
    /// pentagon, a bottom vertex.
    pub fn icosahedron_graph() -> Graph {
        let top = 1;
        let bottom = 12;
        let upper = |i: u32| 2 + i % 5;
        let lower = |i: u32| 7 + i % 5;
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((top, upper(i)));
            edges.push((upper(i), upper(i + 1)));
            edges.push((upper(i), lower(i)));
            edges.push((upper(i), lower(i + 1)));
            edges.push((lower(i), lower(i + 1)));
            edges.push((lower(i), bottom));
        }
        Graph::from_edges(edges).expect("icosahedron edges are simple")
    }

    /// Pyramids over the faces of the polar dual of a triangulated
    /// 2-sphere. Keeps the sphere's vertices as apexes, adds one vertex per
    /// triangle (numbered after the existing vertices, in canonical
    /// triangle order), and for each edge `{v, w}` with triangles `s`, `t`
    /// emits `{v, s, t}` and `{w, s, t}`.
    ///
    /// Octahedron gives the tetrakis hexahedron, icosahedron the pentakis
    /// dodecahedron.
    pub fn kis_dual(sphere: &SimplicialComplex) -> SimplicialComplex {
        let n = sphere.vertices().into_iter().max().unwrap_or(0);
        let tri_start = sphere.dim_range(2).start;
        let label = |idx: usize| n + (idx - tri_start) as Vertex + 1;
        let mut facets = Vec::new();
        for e in sphere.of_dim(1) {
            let i = sphere.index_of(e).unwrap();
            let tris: Vec<Vertex> = sphere.cofacet_indices(i).map(label).collect();
            assert_eq!(tris.len(), 2, "edge {e} is not interior");
            for &v in e.vertices() {
                facets.push(vec![v, tris[0], tris[1]]);
            }
        }
        SimplicialComplex::generate(facets).unwrap()
    }

    pub fn render_facets(name: &str, c: &SimplicialComplex) -> String {
        let mut out = format!("{{\"name\":\"{name}\",\n \"facets\":[\n");
        let facets = c.maximal_vertex_sets();
        for (i, f) in facets.iter().enumerate() {
            let parts: Vec<String> = f.iter().map(|v| v.to_string()).collect();
            let sep = if i + 1 < facets.len() { "," } else { "" };
            let _ = writeln!(out, "  [{}]{sep}", parts.join(","));
        }
        out.push_str(" ]}\n");
        out
    }

    pub fn render_graph(name: &str, g: &Graph) -> String {
        let verts: Vec<String> = g.vertices().map(|v| v.to_string()).collect();
        let mut out = format!(
            "{{\"name\":\"{name}\",\n \"vertices\":[{}],\n \"edges\":[\n",
            verts.join(",")
        );
        let edges: Vec<_> = g.edges().collect();
        for (i, (a, b)) in edges.iter().enumerate() {
            let sep = if i + 1 < edges.len() { "," } else { "" };
            let _ = writeln!(out, "  [{a},{b}]{sep}");
        }
        out.push_str(" ]}\n");
        out
    }

    /// `(file name, contents)` for every generated data file.
    pub fn data_files() -> Vec<(String, String)> {
        let ico_graph = icosahedron_graph();
        let ico = whitney(&ico_graph);
        let oct = whitney(&Graph::complete_multipartite(&[2, 2, 2]));
        let solids = [
            ("tetrakis-hexahedron", kis_dual(&oct)),
            ("pentakis-dodecahedron", kis_dual(&ico)),
            ("disdyakis-dodecahedron", oct.barycentric()),
            ("disdyakis-triacontahedron", ico.barycentric()),
        ];
        let mut files = vec![(
            "icosahedron.json".to_string(),
            render_graph("icosahedron", &ico_graph),
        )];
        for (name, c) in solids {
            files.push((format!("{name}.json"), render_facets(name, &c)));
        }
        files
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::topology::Recognizer;

    #[test]
    fn every_fixed_entry_matches_its_invariants() {
        for e in entries() {
            let c = catalog_complex(&e.name).unwrap();
            verify_entry(&e, &c).unwrap();
        }
    }

    #[test]
    fn parametric_entries() {
        let c = catalog_complex("cycle(5)").unwrap();
        assert_eq!(c.f_vector().counts, vec![5, 5]);
        assert_eq!(catalog_complex("cycle7").unwrap().len(), 14);
        assert!(catalog_complex("cycle3").is_err());
        let s = catalog_complex("simplex3").unwrap();
        verify_entry(&entry("simplex3").unwrap(), &s).unwrap();
        let r = catalog_complex("octahedron@2").unwrap();
        verify_entry(&entry("octahedron@2").unwrap(), &r).unwrap();
        assert_eq!(entry("rp3@1").unwrap().f_vector, vec![182, 1142, 1920, 960]);
    }

    #[test]
    fn unknown_name_lists_alternatives() {
        match catalog_complex("klein") {
            Err(Error::UnknownCatalog { available, .. }) => {
                assert!(available.contains(&"rp3".to_string()))
            }
            other => panic!("{other:?}"),
        }
        assert!(catalog_complex("octahedron@x").is_err());
    }

    #[test]
    fn refined_f_vector_matches_enumeration() {
        for name in ["octahedron", "rp3", "simplex4", "path3"] {
            let c = catalog_complex(name).unwrap();
            assert_eq!(
                refined_f_vector(&c.f_vector().counts),
                c.barycentric().f_vector().counts,
                "{name}"
            );
        }
    }

    #[test]
    fn bundled_files_match_derivation() {
        for (file, text) in derive::data_files() {
            let name = file.trim_end_matches(".json");
            let (bundled, _) = data_file(name).unwrap();
            assert_eq!(bundled, text, "{file} differs from its derivation");
        }
    }

    #[test]
    fn manifold_entries_are_manifolds() {
        let r = Recognizer::default();
        for e in entries() {
            if let Some(q) = e.manifold_dim {
                let c = catalog_complex(&e.name).unwrap();
                assert!(r.is_manifold(&c, q).unwrap(), "{}", e.name);
            }
        }
        assert!(!r
            .is_manifold(&catalog_complex("path3").unwrap(), 1)
            .unwrap());
    }
}
