//! Sectional curvature spectra of bones, before and after refinement.

use diskgeo::catalog::catalog_complex;
use diskgeo::rational::to_pq;
use diskgeo::sheets::{curvature_by_ordering, sectional_spectrum};
use diskgeo::Simplex;

fn main() -> diskgeo::Result<()> {
    for name in [
        "octahedron",
        "octahedron@1",
        "octahedron@2",
        "torus13@2",
        "rp3",
        "rp3@1",
    ] {
        let c = catalog_complex(name)?;
        let sp = sectional_spectrum(&c)?;
        let values: Vec<String> = sp
            .spectrum
            .iter()
            .map(|e| format!("{}x{}", to_pq(&e.value), e.count))
            .collect();
        println!(
            "{name:13} {}  total {} chi {}",
            values.join(" "),
            to_pq(&sp.total),
            sp.euler
        );
    }

    // In dimension 3 the value depends on which bone vertex leads.
    let rp3 = catalog_complex("rp3")?;
    for (ord, k) in curvature_by_ordering(&rp3, &Simplex::new([1, 2])?)? {
        println!("ordering {ord:?}: {}", to_pq(&k));
    }
    Ok(())
}
