//! Curvature of 2-manifolds and of abstract partitions.
//!
//! For a vertex `v` of a triangulated surface with degree `d(v)`,
//!
//! ```text
//! K(v) = (2 - d(v))/6 + (2/3) Σ_{w ∈ S(v)} 1/d(w)
//! ```
//!
//! and the values add up to the Euler characteristic. The same expression
//! evaluated on any list of positive integers is the partition curvature;
//! [`partition_scan`] and [`threshold_verify`] explore which unit-sphere
//! degree sums force positive curvature.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::complex::{Simplex, SimplicialComplex, Vertex};
use crate::error::{Error, Result};
use crate::rational::{self, int, ratio, Rational};
use crate::sheets::{bone_ring, SpectrumEntry};

/// Parts sorted descending.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() || parts.contains(&0) {
            return Err(Error::invalid(
                "a partition needs at least one part, all positive",
            ));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition(parts))
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn m(&self) -> usize {
        self.0.len()
    }

    pub fn n(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn curvature(&self) -> Rational {
        partition_curvature(&self.0)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(s)
    }
}

/// `(2 - m)/6 + (2/3) Σ 1/p_k`. Order of the parts is irrelevant.
pub fn partition_curvature(parts: &[usize]) -> Rational {
    let m = parts.len() as i64;
    let mut sum = rational::zero();
    for &p in parts {
        sum += ratio(1, p as i64);
    }
    ratio(2 - m, 6) + ratio(2, 3) * sum
}

fn require_surface(c: &SimplicialComplex) -> Result<()> {
    if c.dim() != 2 || !c.is_pure() {
        return Err(Error::invalid("expected a pure 2-dimensional complex"));
    }
    Ok(())
}

/// Degree of `v` after checking that its link is a circle.
fn manifold_degree(c: &SimplicialComplex, v: Vertex) -> Result<usize> {
    let ring = bone_ring(c, &Simplex::new([v])?).map_err(|e| match e {
        Error::NonManifoldAtBone(_) => {
            Error::invalid(format!("the link of vertex {v} is not a circle"))
        }
        other => other,
    })?;
    Ok(ring.m)
}

/// Degrees of the neighbours of `v`, in ascending neighbour order.
pub fn neighbor_degrees(c: &SimplicialComplex, v: Vertex) -> Result<Vec<usize>> {
    require_surface(c)?;
    manifold_degree(c, v)?;
    c.neighbors(v)?.into_iter().map(|w| c.degree(w)).collect()
}

pub fn vertex_curvature_2m(c: &SimplicialComplex, v: Vertex) -> Result<Rational> {
    let d = neighbor_degrees(c, v)?;
    Ok(partition_curvature(&d))
}

/// `Σ_{w ∈ S(v)} d(w)`.
pub fn sphere_degree(c: &SimplicialComplex, v: Vertex) -> Result<usize> {
    Ok(neighbor_degrees(c, v)?.iter().sum())
}

/// `-1/2 + 1/d(a) + 1/d(b) + 1/d(c)` for a triangle `{a,b,c}`.
pub fn ih_triangle_curvature(c: &SimplicialComplex, t: &Simplex) -> Result<Rational> {
    require_surface(c)?;
    c.require(t)?;
    if t.len() != 3 {
        return Err(Error::invalid(format!("{t} is not a triangle")));
    }
    let mut k = ratio(-1, 2);
    for &v in t.vertices() {
        k += ratio(1, manifold_degree(c, v)? as i64);
    }
    Ok(k)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum FirstOrder {
    Eberhard,
    Levitt,
}

/// Eberhard: `1 - d(v)/6` (surfaces only). Levitt:
/// `Σ_{k ≥ -1} (-1)^{k+1} f_k(S(v))/(k+2)` with `f_{-1} = 1`, defined on
/// any complex; on surfaces the two agree.
pub fn first_order_curvature(
    c: &SimplicialComplex,
    v: Vertex,
    kind: FirstOrder,
) -> Result<Rational> {
    match kind {
        FirstOrder::Eberhard => {
            require_surface(c)?;
            let d = manifold_degree(c, v)?;
            Ok(int(1) - ratio(d as i64, 6))
        }
        FirstOrder::Levitt => {
            let s = c.unit_sphere(&Simplex::new([v])?)?;
            let mut k = int(1);
            for (i, &f) in s.f_vector().counts.iter().enumerate() {
                let sign = if i % 2 == 0 { -1 } else { 1 };
                k += ratio(sign * f as i64, i as i64 + 2);
            }
            Ok(k)
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SiteValue {
    pub site: String,
    #[serde(serialize_with = "rational::serialize")]
    pub value: Rational,
}

/// Per-site curvature values with their exact total.
#[derive(Clone, Debug, Serialize)]
pub struct CurvatureReport {
    pub schema: &'static str,
    pub kind: &'static str,
    pub values: Vec<SiteValue>,
    pub spectrum: Vec<SpectrumEntry>,
    #[serde(serialize_with = "rational::serialize")]
    pub total: Rational,
    pub euler: i64,
}

impl CurvatureReport {
    fn new(kind: &'static str, values: Vec<SiteValue>, euler: i64) -> Self {
        let mut counts: BTreeMap<Rational, usize> = BTreeMap::new();
        let mut total = rational::zero();
        for sv in &values {
            *counts.entry(sv.value.clone()).or_default() += 1;
            total += &sv.value;
        }
        CurvatureReport {
            schema: crate::io::SCHEMA,
            kind,
            values,
            spectrum: counts
                .into_iter()
                .map(|(value, count)| SpectrumEntry { value, count })
                .collect(),
            total,
            euler,
        }
    }

    pub fn value_set(&self) -> BTreeSet<Rational> {
        self.spectrum.iter().map(|e| e.value.clone()).collect()
    }

    pub fn all_positive(&self) -> bool {
        self.values.iter().all(|v| v.value > rational::zero())
    }

    pub fn to_csv(&self) -> String {
        crate::io::csv_table(
            &["site", "value", "decimal"],
            self.values.iter().map(|v| {
                [
                    v.site.clone(),
                    rational::to_pq(&v.value),
                    rational::to_decimal(&v.value).to_string(),
                ]
            }),
        )
    }

    fn check_total(self) -> Result<Self> {
        if self.total != int(self.euler) {
            return Err(Error::Verification(format!(
                "{} curvature total {} differs from euler characteristic {}",
                self.kind,
                rational::to_pq(&self.total),
                self.euler
            )));
        }
        Ok(self)
    }
}

fn per_vertex(
    c: &SimplicialComplex,
    f: impl Fn(Vertex) -> Result<Rational> + Sync,
) -> Result<Vec<SiteValue>> {
    c.vertices()
        .par_iter()
        .map(|&v| {
            f(v).map(|value| SiteValue {
                site: v.to_string(),
                value,
            })
        })
        .collect()
}

/// Second-order curvature of every vertex; fails unless the total equals
/// the Euler characteristic.
pub fn gauss_bonnet_2m(c: &SimplicialComplex) -> Result<CurvatureReport> {
    require_surface(c)?;
    let values = per_vertex(c, |v| vertex_curvature_2m(c, v))?;
    CurvatureReport::new("vertex", values, c.euler()).check_total()
}

pub fn triangle_report(c: &SimplicialComplex) -> Result<CurvatureReport> {
    require_surface(c)?;
    let values = c
        .of_dim(2)
        .par_iter()
        .map(|t| {
            ih_triangle_curvature(c, t).map(|value| SiteValue {
                site: t.key(),
                value,
            })
        })
        .collect::<Result<_>>()?;
    CurvatureReport::new("triangle", values, c.euler()).check_total()
}

/// First-order curvature at every vertex. Levitt totals equal the Euler
/// characteristic on every complex; this is checked.
pub fn first_order_report(c: &SimplicialComplex, kind: FirstOrder) -> Result<CurvatureReport> {
    let values = per_vertex(c, |v| first_order_curvature(c, v, kind))?;
    let name = match kind {
        FirstOrder::Eberhard => "eberhard",
        FirstOrder::Levitt => "levitt",
    };
    CurvatureReport::new(name, values, c.euler()).check_total()
}

/// Optional restrictions on the scanned partitions.
#[derive(Clone, Debug, Default)]
pub struct ScanFilter {
    /// Smallest allowed part; never below 4.
    pub min_part: Option<usize>,
    pub exclude_parts: Vec<usize>,
}

/// Partitions of `n` into more than 3 parts, each part at least 4 (and
/// passing the filter), largest parts first, with their curvature.
pub fn partition_scan(n: usize, filter: &ScanFilter) -> Vec<(Partition, Rational)> {
    let lo = filter.min_part.unwrap_or(4).max(4);
    let mut out = Vec::new();
    let mut cur = Vec::new();
    descend(n, n, lo, &filter.exclude_parts, &mut cur, &mut out);
    out.into_iter()
        .map(|p| {
            let k = partition_curvature(&p);
            (Partition(p), k)
        })
        .collect()
}

fn descend(
    rest: usize,
    max: usize,
    lo: usize,
    exclude: &[usize],
    cur: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if rest == 0 {
        if cur.len() > 3 {
            out.push(cur.clone());
        }
        return;
    }
    for p in (lo..=max.min(rest)).rev() {
        if exclude.contains(&p) || (rest - p != 0 && rest - p < lo) {
            continue;
        }
        cur.push(p);
        descend(rest - p, p, lo, exclude, cur, out);
        cur.pop();
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ScanRow {
    pub n: usize,
    pub count: usize,
    #[serde(serialize_with = "serialize_opt")]
    pub min: Option<Rational>,
    pub zeros: Vec<Partition>,
    pub negatives: Vec<NegativeCase>,
}

#[derive(Clone, Debug, Serialize)]
pub struct NegativeCase {
    pub partition: Partition,
    #[serde(serialize_with = "rational::serialize")]
    pub value: Rational,
}

fn serialize_opt<S: Serializer>(
    r: &Option<Rational>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    match r {
        Some(r) => rational::serialize(r, s),
        None => s.serialize_none(),
    }
}

pub fn scan_row(n: usize, filter: &ScanFilter) -> ScanRow {
    let scan = partition_scan(n, filter);
    let zero = rational::zero();
    ScanRow {
        n,
        count: scan.len(),
        min: scan.iter().map(|(_, k)| k.clone()).min(),
        zeros: scan
            .iter()
            .filter(|(_, k)| *k == zero)
            .map(|(p, _)| p.clone())
            .collect(),
        negatives: scan
            .iter()
            .filter(|(_, k)| *k < zero)
            .map(|(p, k)| NegativeCase {
                partition: p.clone(),
                value: k.clone(),
            })
            .collect(),
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct ThresholdReport {
    pub schema: &'static str,
    pub n_max: usize,
    pub rows: Vec<ScanRow>,
    pub checks: Vec<Check>,
}

impl ThresholdReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

/// Largest `n` at which the family identities are re-derived.
pub const FAMILY_SAMPLE_MAX: usize = 10_000;

/// Scans every `n` from 16 to `n_max` and checks the degree-31 threshold:
/// positive curvature up to 31, a single flat case (8,8,8,8) at 32, four
/// negative cases at 33. Also checks the families `(n-12,4,4,4)` and
/// all-fives against their closed forms.
pub fn threshold_verify(n_max: usize) -> Result<ThresholdReport> {
    if n_max < 33 {
        return Err(Error::invalid("threshold verification needs n_max >= 33"));
    }
    let filter = ScanFilter::default();
    let rows: Vec<ScanRow> = (16..=n_max)
        .into_par_iter()
        .map(|n| scan_row(n, &filter))
        .collect();
    let row = |n: usize| &rows[n - 16];
    let zero = rational::zero();
    let mut checks = Vec::new();

    let bad: Vec<usize> = rows
        .iter()
        .filter(|r| r.n <= 31 && r.min.as_ref().is_some_and(|m| *m <= zero))
        .map(|r| r.n)
        .collect();
    checks.push(Check {
        name: "positive up to 31".into(),
        pass: bad.is_empty(),
        detail: format!("non-positive minimum at n = {bad:?}"),
    });

    let r32 = row(32);
    let flat = vec![Partition(vec![8, 8, 8, 8])];
    checks.push(Check {
        name: "n=32 flat case".into(),
        pass: r32.zeros == flat && r32.negatives.is_empty(),
        detail: format!(
            "zeros {:?}, {} negatives",
            r32.zeros.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
            r32.negatives.len()
        ),
    });

    let expected33: BTreeMap<Partition, Rational> = [
        (vec![10, 9, 7, 7], ratio(-2, 945)),
        (vec![10, 8, 8, 7], ratio(-1, 210)),
        (vec![9, 9, 8, 7], ratio(-5, 756)),
        (vec![9, 8, 8, 8], ratio(-1, 108)),
    ]
    .into_iter()
    .map(|(p, k)| (Partition(p), k))
    .collect();
    let got33: BTreeMap<Partition, Rational> = row(33)
        .negatives
        .iter()
        .map(|c| (c.partition.clone(), c.value.clone()))
        .collect();
    checks.push(Check {
        name: "n=33 negative cases".into(),
        pass: got33 == expected33,
        detail: got33
            .iter()
            .map(|(p, k)| format!("{p}:{}", rational::to_pq(k)))
            .collect::<Vec<_>>()
            .join(" "),
    });

    let family = (16..=FAMILY_SAMPLE_MAX).into_par_iter().find_first(|&n| {
        let k = partition_curvature(&[n - 12, 4, 4, 4]);
        k != ratio(1, 6) + ratio(2, 3 * (n as i64 - 12)) || k <= zero
    });
    checks.push(Check {
        name: "(n-12,4,4,4) family".into(),
        pass: family.is_none(),
        detail: format!("checked n = 16..={FAMILY_SAMPLE_MAX}, first failure {family:?}"),
    });

    let fives = (1..=FAMILY_SAMPLE_MAX / 5)
        .into_par_iter()
        .find_first(|&m| {
            let k = partition_curvature(&vec![5; m]);
            k != ratio(1, 3) - ratio(m as i64, 30) || ((k < zero) != (m > 10))
        });
    checks.push(Check {
        name: "all-fives family".into(),
        pass: fives.is_none(),
        detail: format!(
            "checked m = 1..={}, first failure {fives:?}",
            FAMILY_SAMPLE_MAX / 5
        ),
    });

    Ok(ThresholdReport {
        schema: crate::io::SCHEMA,
        n_max,
        rows,
        checks,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::catalog_complex;

    fn p(v: &[usize]) -> Rational {
        partition_curvature(v)
    }

    #[test]
    fn partition_values() {
        assert_eq!(p(&[5, 5, 5, 4, 4]), ratio(7, 30));
        assert_eq!(p(&[8, 8, 8, 8]), zero());
        assert_eq!(p(&[10, 9, 7, 7]), ratio(-2, 945));
        for m in 1..12 {
            assert_eq!(p(&vec![4; m]), ratio(1, 3));
        }
        assert_eq!(p(&[6, 6, 6, 6, 6]), ratio(1, 18));
        assert_eq!(Partition::new(vec![4, 9, 5]).unwrap().parts(), &[9, 5, 4]);
        assert!(Partition::new(vec![]).is_err());
    }

    fn zero() -> Rational {
        rational::zero()
    }

    #[test]
    fn vertex_values() {
        let ico = catalog_complex("icosahedron").unwrap();
        assert_eq!(vertex_curvature_2m(&ico, 1).unwrap(), ratio(1, 6));
        assert_eq!(sphere_degree(&ico, 1).unwrap(), 25);
        let oct = catalog_complex("octahedron").unwrap();
        assert_eq!(vertex_curvature_2m(&oct, 1).unwrap(), ratio(1, 3));
        assert_eq!(sphere_degree(&oct, 1).unwrap(), 16);
        let torus = catalog_complex("torus13").unwrap();
        assert_eq!(vertex_curvature_2m(&torus, 1).unwrap(), zero());
    }

    #[test]
    fn non_surfaces_rejected() {
        let tet = catalog_complex("simplex3").unwrap();
        assert!(vertex_curvature_2m(&tet, 1).is_err());
        let path = catalog_complex("path3").unwrap();
        assert!(gauss_bonnet_2m(&path).is_err());
    }

    #[test]
    fn triangle_values() {
        let ico = catalog_complex("icosahedron").unwrap();
        let t = ico.of_dim(2)[0].clone();
        assert_eq!(ih_triangle_curvature(&ico, &t).unwrap(), ratio(1, 10));
        let r = triangle_report(&ico).unwrap();
        assert_eq!(r.total, int(2));
    }

    #[test]
    fn first_order_values() {
        let ico = catalog_complex("icosahedron").unwrap();
        let oct = catalog_complex("octahedron").unwrap();
        for kind in [FirstOrder::Eberhard, FirstOrder::Levitt] {
            assert_eq!(first_order_curvature(&ico, 1, kind).unwrap(), ratio(1, 6));
            assert_eq!(first_order_curvature(&oct, 1, kind).unwrap(), ratio(1, 3));
        }
        // Levitt also works off surfaces: the tip of a path has curvature 1/2.
        let path = catalog_complex("path3").unwrap();
        assert_eq!(
            first_order_curvature(&path, 1, FirstOrder::Levitt).unwrap(),
            ratio(1, 2)
        );
        assert_eq!(
            first_order_report(&path, FirstOrder::Levitt).unwrap().total,
            int(1)
        );
    }

    #[test]
    fn gauss_bonnet_on_surfaces() {
        for (name, chi) in [
            ("icosahedron", 2),
            ("torus13", 0),
            ("rp2", 1),
            ("octahedron", 2),
        ] {
            let c = catalog_complex(name).unwrap();
            let r = gauss_bonnet_2m(&c).unwrap();
            assert_eq!(r.total, int(chi), "{name}");
        }
        let ico = gauss_bonnet_2m(&catalog_complex("icosahedron").unwrap()).unwrap();
        assert_eq!(ico.value_set(), BTreeSet::from([ratio(1, 6)]));
        assert!(ico
            .to_csv()
            .starts_with("site,value,decimal\n1,1/6,0.166666666667\n"));
    }

    #[test]
    fn scans() {
        let s16 = partition_scan(16, &ScanFilter::default());
        assert_eq!(s16.len(), 1);
        assert_eq!(s16[0].0.parts(), &[4, 4, 4, 4]);
        let s24: Vec<String> = partition_scan(24, &ScanFilter::default())
            .iter()
            .map(|(p, _)| p.to_string())
            .collect();
        assert_eq!(
            s24,
            [
                "(12,4,4,4)",
                "(11,5,4,4)",
                "(10,6,4,4)",
                "(10,5,5,4)",
                "(9,7,4,4)",
                "(9,6,5,4)",
                "(9,5,5,5)",
                "(8,8,4,4)",
                "(8,7,5,4)",
                "(8,6,6,4)",
                "(8,6,5,5)",
                "(8,4,4,4,4)",
                "(7,7,6,4)",
                "(7,7,5,5)",
                "(7,6,6,5)",
                "(7,5,4,4,4)",
                "(6,6,6,6)",
                "(6,6,4,4,4)",
                "(6,5,5,4,4)",
                "(5,5,5,5,4)",
                "(4,4,4,4,4,4)",
            ]
        );
        let no_fives = ScanFilter {
            min_part: Some(6),
            exclude_parts: vec![7],
        };
        for (p, _) in partition_scan(40, &no_fives) {
            assert!(p.parts().iter().all(|&x| x >= 6 && x != 7), "{p}");
        }
    }

    #[test]
    fn threshold() {
        let r = threshold_verify(40).unwrap();
        assert!(r.passed(), "{:?}", r.checks);
        assert!(threshold_verify(20).is_err());
    }
}
