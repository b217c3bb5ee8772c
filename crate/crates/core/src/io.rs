//! Complex and graph file formats.
//!
//! * facets-json: `{"name": "...", "facets": [[1,2,3], ...]}`; the closure
//!   is taken on load.
//! * graph-json: `{"vertices": [1,2,...], "edges": [[1,2], ...]}`; the
//!   Whitney complex is taken on load. `vertices` may be omitted.

use std::path::Path;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::complex::{whitney, SimplicialComplex, Vertex};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Version tag carried by every JSON report.
pub const SCHEMA: &str = "diskgeo/1";

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    #[default]
    FacetsJson,
    GraphJson,
}

impl FromStr for Format {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "facets-json" => Ok(Format::FacetsJson),
            "graph-json" => Ok(Format::GraphJson),
            other => Err(Error::invalid(format!("unknown format {other:?}"))),
        }
    }
}

#[derive(Debug, Serialize, Deserialize)]
pub struct ComplexFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub facets: Vec<Vec<i64>>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct GraphFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(default)]
    pub vertices: Vec<i64>,
    pub edges: Vec<[i64; 2]>,
}

fn parse_err(source: &str, detail: impl Into<String>) -> Error {
    Error::Parse {
        source_name: source.to_string(),
        detail: detail.into(),
    }
}

fn json_err(source: &str, e: serde_json::Error) -> Error {
    parse_err(
        source,
        format!("line {} column {}: {e}", e.line(), e.column()),
    )
}

fn vertex(source: &str, field: &str, v: i64) -> Result<Vertex> {
    if v <= 0 || v > Vertex::MAX as i64 {
        return Err(parse_err(
            source,
            format!("{field}: vertex labels must be positive integers, got {v}"),
        ));
    }
    Ok(v as Vertex)
}

/// Parses file contents; `source` names the input in error messages.
pub fn parse_complex(text: &str, format: Format, source: &str) -> Result<SimplicialComplex> {
    match format {
        Format::FacetsJson => {
            let file: ComplexFile = serde_json::from_str(text).map_err(|e| json_err(source, e))?;
            let mut sets = Vec::with_capacity(file.facets.len());
            for (i, facet) in file.facets.iter().enumerate() {
                if facet.is_empty() {
                    return Err(parse_err(source, format!("facets[{i}] is empty")));
                }
                let set = facet
                    .iter()
                    .enumerate()
                    .map(|(j, &v)| vertex(source, &format!("facets[{i}][{j}]"), v))
                    .collect::<Result<Vec<_>>>()?;
                sets.push(set);
            }
            SimplicialComplex::generate(sets).map_err(|e| parse_err(source, e.to_string()))
        }
        Format::GraphJson => Ok(whitney(&parse_graph(text, source)?)),
    }
}

pub fn parse_graph(text: &str, source: &str) -> Result<Graph> {
    let file: GraphFile = serde_json::from_str(text).map_err(|e| json_err(source, e))?;
    let mut vertices = file
        .vertices
        .iter()
        .enumerate()
        .map(|(i, &v)| vertex(source, &format!("vertices[{i}]"), v))
        .collect::<Result<Vec<_>>>()?;
    let mut edges = Vec::with_capacity(file.edges.len());
    for (i, [a, b]) in file.edges.iter().enumerate() {
        let a = vertex(source, &format!("edges[{i}][0]"), *a)?;
        let b = vertex(source, &format!("edges[{i}][1]"), *b)?;
        edges.push((a, b));
    }
    vertices.extend(edges.iter().flat_map(|&(a, b)| [a, b]));
    Graph::new(vertices, edges).map_err(|e| parse_err(source, e.to_string()))
}

pub fn load_complex(path: impl AsRef<Path>, format: Format) -> Result<SimplicialComplex> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path)?;
    parse_complex(&text, format, &path.display().to_string())
}

/// CSV text with a header row.
pub fn csv_table<I, R>(header: &[&str], rows: I) -> String
where
    I: IntoIterator<Item = R>,
    R: IntoIterator,
    R::Item: AsRef<[u8]>,
{
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("writing to memory");
    for row in rows {
        w.write_record(row).expect("writing to memory");
    }
    String::from_utf8(w.into_inner().expect("writing to memory")).expect("utf-8 fields")
}

/// facets-json text listing the maximal simplices.
pub fn complex_to_json(c: &SimplicialComplex, name: &str) -> String {
    let file = ComplexFile {
        name: Some(name.to_string()),
        facets: c
            .maximal_vertex_sets()
            .into_iter()
            .map(|s| s.into_iter().map(i64::from).collect())
            .collect(),
    };
    serde_json::to_string(&file).expect("complex serialises")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn facets_json() {
        let c =
            parse_complex(r#"{"facets":[[1,2],[2,3],[3,4]]}"#, Format::FacetsJson, "t").unwrap();
        assert_eq!(c.f_vector().counts, vec![4, 3]);
        let text = complex_to_json(&c, "path3");
        let again = parse_complex(&text, Format::FacetsJson, "t").unwrap();
        assert_eq!(again, c);
    }

    #[test]
    fn graph_json_without_vertices() {
        let c = parse_complex(r#"{"edges":[[1,2],[2,3],[1,3]]}"#, Format::GraphJson, "t").unwrap();
        assert_eq!(c.f_vector().counts, vec![3, 3, 1]);
        let c = parse_complex(
            r#"{"vertices":[1,2,3,9],"edges":[[1,2]]}"#,
            Format::GraphJson,
            "t",
        )
        .unwrap();
        assert_eq!(c.vertices(), vec![1, 2, 3, 9]);
    }

    #[test]
    fn structured_errors() {
        let e =
            parse_complex("{\"facets\":\n[[1,2],[]]}", Format::FacetsJson, "f.json").unwrap_err();
        assert_eq!(e.to_string(), "f.json: facets[1] is empty");
        let e =
            parse_complex("{\"facets\":\n[[1,2.5]]}", Format::FacetsJson, "f.json").unwrap_err();
        assert!(e.to_string().contains("line 2"), "{e}");
        let e = parse_complex(r#"{"facets":[[1,0]]}"#, Format::FacetsJson, "f.json").unwrap_err();
        assert!(e.to_string().contains("facets[0][1]"), "{e}");
        let e = parse_complex(r#"{"facets":[[1,1]]}"#, Format::FacetsJson, "f.json").unwrap_err();
        assert!(matches!(e, Error::Parse { .. }));
        let e = parse_complex(r#"{"edges":[[1,1]]}"#, Format::GraphJson, "g.json").unwrap_err();
        assert!(e.to_string().contains("loop"), "{e}");
        assert!(parse_complex("nope", Format::FacetsJson, "x").is_err());
    }
}
