//! The geodesic flow as a permutation of ordered facets, with billiard
//! reflection at boundary walls.

use diskgeo::catalog::catalog_complex;
use diskgeo::flow::{Frame, GeodesicFlow};

fn main() -> diskgeo::Result<()> {
    let path = catalog_complex("path3")?;
    let flow = GeodesicFlow::new(&path)?;
    let orbit = flow.orbit(&Frame::new([1, 2])?)?;
    let frames: Vec<String> = orbit.frames.iter().map(|f| f.to_string()).collect();
    println!(
        "path orbit: {} (period {})",
        frames.join(" -> "),
        orbit.period()
    );

    for name in ["triangle-boundary", "octahedron", "rp3", "simplex3"] {
        let c = catalog_complex(name)?;
        let flow = GeodesicFlow::new(&c)?;
        let report = flow.flow_report();
        println!(
            "{name}: bundle {} frames, {} cycles, periods {:?}, ergodic {}",
            report.bundle_size,
            report.cycles.len(),
            report.period_histogram(),
            report.ergodic
        );
        flow.involution_factorization().verify(&flow)?;
    }
    Ok(())
}
