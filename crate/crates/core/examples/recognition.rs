//! Recognising contractible complexes, spheres and manifolds.

use diskgeo::catalog::catalog_complex;
use diskgeo::topology::{check, Recognizer};

fn main() -> diskgeo::Result<()> {
    let r = Recognizer::default();
    for name in [
        "point",
        "path3",
        "octahedron",
        "rp2",
        "rp3",
        "torus13",
        "simplex3",
    ] {
        let c = catalog_complex(name)?;
        let v = r.classify(&c);
        let report = check(&c, &r)?;
        println!(
            "{name:10} {:?}  manifold={} sphere={} geodesic-ready={}",
            v.kind, report.manifold, report.sphere, report.geodesic_ready
        );
    }
    Ok(())
}
