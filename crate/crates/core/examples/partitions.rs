//! Partition curvature and the degree-31 threshold.

use diskgeo::curvature::{partition_curvature, partition_scan, threshold_verify, ScanFilter};
use diskgeo::rational::to_pq;

fn main() -> diskgeo::Result<()> {
    println!(
        "K(5,5,5,4,4) = {}",
        to_pq(&partition_curvature(&[5, 5, 5, 4, 4]))
    );
    println!(
        "K(8,8,8,8) = {}",
        to_pq(&partition_curvature(&[8, 8, 8, 8]))
    );

    for (p, k) in partition_scan(33, &ScanFilter::default()) {
        if k < diskgeo::rational::zero() {
            println!("n=33 negative: {p} -> {}", to_pq(&k));
        }
    }

    // Only degrees at least 6: no curvature is positive beyond the flat case.
    let sixes = ScanFilter {
        min_part: Some(6),
        exclude_parts: vec![],
    };
    let scan = partition_scan(30, &sixes);
    println!("n=30, parts >= 6: {} partitions", scan.len());

    let report = threshold_verify(45)?;
    for c in &report.checks {
        println!(
            "{:5} {}: {}",
            if c.pass { "PASS" } else { "FAIL" },
            c.name,
            c.detail
        );
    }
    Ok(())
}
