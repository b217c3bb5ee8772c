//! Second-order Gauss-Bonnet on triangulated surfaces.

use diskgeo::catalog::{catalog_complex, CATALAN};
use diskgeo::curvature::{first_order_report, gauss_bonnet_2m, triangle_report, FirstOrder};
use diskgeo::rational::to_pq;

fn main() -> diskgeo::Result<()> {
    let mut names = vec!["octahedron", "icosahedron", "rp2", "torus13"];
    names.extend(CATALAN);
    for name in names {
        let c = catalog_complex(name)?;
        let vertex = gauss_bonnet_2m(&c)?;
        let triangle = triangle_report(&c)?;
        let eberhard = first_order_report(&c, FirstOrder::Eberhard)?;
        let values: Vec<String> = vertex.value_set().iter().map(to_pq).collect();
        println!(
            "{name:26} chi {:2}  vertex {} triangle {} eberhard {}  values {{{}}}",
            c.euler(),
            to_pq(&vertex.total),
            to_pq(&triangle.total),
            to_pq(&eberhard.total),
            values.join(", ")
        );
    }
    Ok(())
}
