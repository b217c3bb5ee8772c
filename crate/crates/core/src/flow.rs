//! The geodesic flow: a permutation of the frame bundle of ordered facets.
//!
//! A frame `(x0, x1, ..., xq)` steps to `(x1, ..., xq, x0')` where `x0'` is
//! the vertex opposite `x0` across the wall `{x1, ..., xq}`. When that wall
//! lies on the boundary there is no opposite vertex and the frame rotates
//! in place, `(x1, ..., xq, x0)`, which turns the flow into a billiard.
//! The step is a bijection on any pure complex whose walls have one or two
//! cofacets.

use std::collections::BTreeMap;
use std::fmt;
use std::fmt::Write as _;

use serde::Serialize;

use crate::complex::{FVector, Simplex, SimplicialComplex, Vertex};
use crate::error::{Error, Result};
use crate::topology::{geodesic_readiness, VerdictKind};

/// A totally ordered facet. `x0` is the base point; `(x0, xj)` are the
/// basis edges.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Frame(Vec<Vertex>);

impl Frame {
    pub fn new(order: impl IntoIterator<Item = Vertex>) -> Result<Self> {
        let order: Vec<Vertex> = order.into_iter().collect();
        let s = Simplex::new(order.iter().copied())?;
        debug_assert_eq!(s.len(), order.len());
        Ok(Frame(order))
    }

    pub fn order(&self) -> &[Vertex] {
        &self.0
    }

    pub fn base_point(&self) -> Vertex {
        self.0[0]
    }

    pub fn basis_edges(&self) -> Vec<(Vertex, Vertex)> {
        self.0[1..].iter().map(|&x| (self.0[0], x)).collect()
    }

    pub fn facet(&self) -> Simplex {
        Simplex::from_sorted({
            let mut v = self.0.clone();
            v.sort_unstable();
            v
        })
    }
}

impl fmt::Display for Frame {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|v| v.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl fmt::Debug for Frame {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A cycle of the flow.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Orbit {
    pub frames: Vec<Frame>,
    /// Whether some step along the cycle was a boundary self-rotation.
    pub boundary_touching: bool,
}

impl Orbit {
    pub fn period(&self) -> usize {
        self.frames.len()
    }
}

/// Geodesic flow on a geodesic-ready complex.
#[derive(Clone, Copy)]
pub struct GeodesicFlow<'a> {
    complex: &'a SimplicialComplex,
    q: usize,
    frames_per_facet: usize,
}

impl<'a> GeodesicFlow<'a> {
    /// Fails unless the complex is pure and every wall has one or two
    /// cofacets.
    pub fn new(complex: &'a SimplicialComplex) -> Result<Self> {
        if complex.is_empty() {
            return Err(Error::invalid("the empty complex has no frames"));
        }
        if !complex.is_pure() {
            return Err(Error::invalid("geodesic flow needs a pure complex"));
        }
        let verdict = geodesic_readiness(complex);
        if verdict.kind != VerdictKind::GeodesicReady {
            let (wall, cofacets) = verdict
                .wall_census
                .iter()
                .find(|(_, n)| *n > 2)
                .map(|(w, n)| (w.to_string(), *n))
                .unwrap_or_else(|| ("{}".into(), complex.len()));
            return Err(Error::NotGeodesicReady { wall, cofacets });
        }
        let q = complex.dim() as usize;
        Ok(GeodesicFlow {
            complex,
            q,
            frames_per_facet: factorial(q + 1),
        })
    }

    pub fn complex(&self) -> &'a SimplicialComplex {
        self.complex
    }

    pub fn dim(&self) -> usize {
        self.q
    }

    /// `f_q · (q+1)!`.
    pub fn bundle_size(&self) -> usize {
        self.complex.facets().len() * self.frames_per_facet
    }

    fn check_frame(&self, f: &Frame) -> Result<()> {
        if f.0.len() != self.q + 1 || !self.complex.contains(&f.facet()) {
            return Err(Error::invalid(format!("{f} is not an ordered facet")));
        }
        Ok(())
    }

    /// Vertices across the wall spanned by `wall` (any order), other than
    /// `exclude`.
    fn opposite(&self, wall: &[Vertex], exclude: Vertex) -> Vec<Vertex> {
        if wall.is_empty() {
            return self
                .complex
                .vertices()
                .into_iter()
                .filter(|&v| v != exclude)
                .collect();
        }
        let mut w = wall.to_vec();
        w.sort_unstable();
        let w = Simplex::from_sorted(w);
        let i = self
            .complex
            .index_of(&w)
            .expect("walls of a frame are in the complex");
        self.complex
            .cofacet_indices(i)
            .map(|j| self.complex.simplex(j).difference(&w)[0])
            .filter(|&v| v != exclude)
            .collect()
    }

    /// One step of the flow, with a flag telling whether it self-rotated.
    pub fn step_with_flag(&self, f: &Frame) -> Result<(Frame, bool)> {
        self.check_frame(f)?;
        Ok(self.step_raw(f))
    }

    fn step_raw(&self, f: &Frame) -> (Frame, bool) {
        let head = f.0[0];
        let tail = &f.0[1..];
        let opp = self.opposite(tail, head);
        let mut next = tail.to_vec();
        let rotated = opp.is_empty();
        next.push(if rotated { head } else { opp[0] });
        (Frame(next), rotated)
    }

    pub fn step(&self, f: &Frame) -> Result<Frame> {
        self.step_with_flag(f).map(|(g, _)| g)
    }

    /// `T⁻¹`: prepend the vertex opposite the last one across the leading
    /// wall, or the last vertex itself at a boundary wall.
    pub fn step_inverse(&self, f: &Frame) -> Result<Frame> {
        self.check_frame(f)?;
        Ok(self.step_inverse_raw(f))
    }

    fn step_inverse_raw(&self, f: &Frame) -> Frame {
        let last = *f.0.last().unwrap();
        let lead = &f.0[..self.q];
        let opp = self.opposite(lead, last);
        let mut prev = Vec::with_capacity(self.q + 1);
        prev.push(if opp.is_empty() { last } else { opp[0] });
        prev.extend_from_slice(lead);
        Frame(prev)
    }

    /// The ordered wall `(x1, ..., xq)` crossed when leaving `f`.
    pub fn wall_map(&self, f: &Frame) -> Result<Vec<Vertex>> {
        self.check_frame(f)?;
        Ok(f.0[1..].to_vec())
    }

    pub fn orbit(&self, start: &Frame) -> Result<Orbit> {
        self.check_frame(start)?;
        Ok(self.orbit_raw(start))
    }

    fn orbit_raw(&self, start: &Frame) -> Orbit {
        let cap = self.bundle_size();
        let mut frames = vec![start.clone()];
        let mut boundary = false;
        let mut cur = start.clone();
        loop {
            let (next, rotated) = self.step_raw(&cur);
            boundary |= rotated;
            if &next == start {
                break;
            }
            assert!(
                frames.len() < cap,
                "orbit exceeded the bundle size; step is not a bijection"
            );
            frames.push(next.clone());
            cur = next;
        }
        Orbit {
            frames,
            boundary_touching: boundary,
        }
    }

    /// Dense index of a frame: facet rank times `(q+1)!` plus the rank of
    /// the ordering among the permutations of the facet.
    pub fn frame_index(&self, f: &Frame) -> Result<usize> {
        self.check_frame(f)?;
        let facet = f.facet();
        let start = self.complex.dim_range(self.q).start;
        let rank = self.complex.index_of(&facet).unwrap() - start;
        let positions: Vec<usize> =
            f.0.iter()
                .map(|v| facet.vertices().binary_search(v).unwrap())
                .collect();
        Ok(rank * self.frames_per_facet + permutation_rank(&positions))
    }

    pub fn frame_at(&self, index: usize) -> Frame {
        let facet = &self.complex.facets()[index / self.frames_per_facet];
        let perm = permutation_unrank(index % self.frames_per_facet, self.q + 1);
        Frame(perm.into_iter().map(|p| facet.vertices()[p]).collect())
    }

    /// Every frame, facets in canonical order, orderings lexicographic.
    pub fn frames(&self) -> impl Iterator<Item = Frame> + '_ {
        (0..self.bundle_size()).map(|i| self.frame_at(i))
    }

    /// The permutation `T` on frame indices.
    pub fn permutation(&self) -> Vec<usize> {
        (0..self.bundle_size())
            .map(|i| {
                let (next, _) = self.step_raw(&self.frame_at(i));
                self.frame_index(&next).unwrap()
            })
            .collect()
    }

    /// Cycles of the flow, streamed in order of their lowest frame index.
    pub fn orbit_partition(&self) -> OrbitPartition<'_, 'a> {
        OrbitPartition {
            flow: self,
            visited: vec![false; self.bundle_size()],
            next: 0,
        }
    }

    /// Period and boundary flag of every cycle, plus the ergodicity flag.
    pub fn flow_report(&self) -> FlowReport {
        let cycles: Vec<CycleSummary> = self
            .orbit_partition()
            .map(|o| CycleSummary {
                period: o.period(),
                boundary: o.boundary_touching,
            })
            .collect();
        FlowReport {
            schema: crate::io::SCHEMA,
            bundle_size: self.bundle_size(),
            ergodic: cycles.len() == 1,
            cycles,
        }
    }

    /// Explicit involutions `A`, `B` on the doubled bundle with `T = B∘A`.
    ///
    /// Index `i < N` is frame `i` tagged open, `N + i` the same frame
    /// tagged closed. `A` sends open `x` to closed `T(x)` and closed `y` to
    /// open `T⁻¹(y)`; `B` swaps tags.
    pub fn involution_factorization(&self) -> InvolutionFactorization {
        let n = self.bundle_size();
        let mut a = vec![0; 2 * n];
        for i in 0..n {
            let f = self.frame_at(i);
            let (fwd, _) = self.step_raw(&f);
            a[i] = n + self.frame_index(&fwd).unwrap();
            let back = self.step_inverse_raw(&f);
            a[n + i] = self.frame_index(&back).unwrap();
        }
        let b = (0..2 * n)
            .map(|i| if i < n { i + n } else { i - n })
            .collect();
        InvolutionFactorization { bundle: n, a, b }
    }

    /// Closure of the facets an orbit visits.
    pub fn orbit_complex(&self, orbit: &Orbit) -> (SimplicialComplex, FVector) {
        let facets: Vec<Simplex> = orbit.frames.iter().map(Frame::facet).collect();
        let c = SimplicialComplex::closure_of(facets.iter());
        let f = c.f_vector();
        (c, f)
    }

    /// The orbit projected to facets, as a DOT digraph. Nodes are facets
    /// annotated with their visit counts; edges are the steps, numbered.
    pub fn orbit_dot(&self, orbit: &Orbit) -> String {
        let facets: Vec<Simplex> = orbit.frames.iter().map(Frame::facet).collect();
        let mut visits: BTreeMap<&Simplex, usize> = BTreeMap::new();
        for f in &facets {
            *visits.entry(f).or_default() += 1;
        }
        let mut out = String::from("digraph \"orbit\" {\n");
        for (f, n) in &visits {
            let _ = writeln!(out, "  \"{}\" [label=\"{} x{}\"];", f.key(), f.key(), n);
        }
        for (k, f) in facets.iter().enumerate() {
            let g = &facets[(k + 1) % facets.len()];
            let _ = writeln!(
                out,
                "  \"{}\" -> \"{}\" [label=\"{}\"];",
                f.key(),
                g.key(),
                k + 1
            );
        }
        out.push_str("}\n");
        out
    }
}

pub struct OrbitPartition<'f, 'a> {
    flow: &'f GeodesicFlow<'a>,
    visited: Vec<bool>,
    next: usize,
}

impl Iterator for OrbitPartition<'_, '_> {
    type Item = Orbit;

    fn next(&mut self) -> Option<Orbit> {
        while self.next < self.visited.len() && self.visited[self.next] {
            self.next += 1;
        }
        if self.next >= self.visited.len() {
            return None;
        }
        let orbit = self.flow.orbit_raw(&self.flow.frame_at(self.next));
        for f in &orbit.frames {
            let i = self.flow.frame_index(f).unwrap();
            debug_assert!(!self.visited[i]);
            self.visited[i] = true;
        }
        Some(orbit)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CycleSummary {
    pub period: usize,
    pub boundary: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FlowReport {
    pub schema: &'static str,
    pub bundle_size: usize,
    pub cycles: Vec<CycleSummary>,
    pub ergodic: bool,
}

impl FlowReport {
    /// Period → number of cycles with that period.
    pub fn period_histogram(&self) -> BTreeMap<usize, usize> {
        let mut h = BTreeMap::new();
        for c in &self.cycles {
            *h.entry(c.period).or_default() += 1;
        }
        h
    }
}

pub struct InvolutionFactorization {
    pub bundle: usize,
    pub a: Vec<usize>,
    pub b: Vec<usize>,
}

impl InvolutionFactorization {
    /// Checks `A² = B² = id` and that `B∘A` restricted to open tags is `T`.
    pub fn verify(&self, flow: &GeodesicFlow<'_>) -> Result<()> {
        let n = self.bundle;
        for i in 0..2 * n {
            if self.a[self.a[i]] != i {
                return Err(Error::Verification(format!("A∘A moves {i}")));
            }
            if self.b[self.b[i]] != i {
                return Err(Error::Verification(format!("B∘B moves {i}")));
            }
        }
        let t = flow.permutation();
        for (i, &ti) in t.iter().enumerate() {
            if self.b[self.a[i]] != ti {
                return Err(Error::Verification(format!(
                    "B∘A differs from T at frame {i}"
                )));
            }
            // T⁻¹ = A∘B on the open sector
            if t[self.a[self.b[i]]] != i {
                return Err(Error::Verification(format!("A∘B is not T⁻¹ at frame {i}")));
            }
        }
        Ok(())
    }
}

pub(crate) fn factorial(n: usize) -> usize {
    (1..=n).product()
}

/// Lexicographic rank of a permutation of `0..n`.
fn permutation_rank(p: &[usize]) -> usize {
    let n = p.len();
    let mut rank = 0;
    for i in 0..n {
        let smaller = p[i + 1..].iter().filter(|&&x| x < p[i]).count();
        rank += smaller * factorial(n - 1 - i);
    }
    rank
}

fn permutation_unrank(mut rank: usize, n: usize) -> Vec<usize> {
    let mut pool: Vec<usize> = (0..n).collect();
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let f = factorial(n - 1 - i);
        out.push(pool.remove(rank / f));
        rank %= f;
    }
    out
}
