use std::path::Path;

use diskgeo::catalog::derive;
use sha2::{Digest, Sha256};

fn data_dir() -> &'static Path {
    Path::new(concat!(env!("CARGO_MANIFEST_DIR"), "/data"))
}

#[test]
fn checksums_match_files() {
    let sums = std::fs::read_to_string(data_dir().join("SHA256SUMS")).unwrap();
    let mut n = 0;
    for line in sums.lines() {
        let (hex, name) = line.split_once("  ").unwrap();
        let bytes = std::fs::read(data_dir().join(name)).unwrap();
        let got: String = Sha256::digest(&bytes)
            .iter()
            .map(|b| format!("{b:02x}"))
            .collect();
        assert_eq!(got, hex, "{name}");
        n += 1;
    }
    assert_eq!(n, 7);
}

#[test]
fn derived_files_are_current() {
    for (name, text) in derive::data_files() {
        let on_disk = std::fs::read_to_string(data_dir().join(&name)).unwrap();
        assert_eq!(
            on_disk, text,
            "{name} is stale; rerun the derive_catalog_data example"
        );
    }
}
