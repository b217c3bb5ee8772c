//! Regenerates the polyhedron files under `data/` and their checksums.
//!
//! ```bash
//! cargo run -p diskgeo --example derive_catalog_data
//! ```

use std::fmt::Write as _;
use std::path::Path;

use diskgeo::catalog::derive;
use sha2::{Digest, Sha256};

fn main() -> std::io::Result<()> {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("data");
    let mut sums = String::new();
    let mut files = derive::data_files();
    for verbatim in ["rp2.json", "rp3.json"] {
        files.push((
            verbatim.to_string(),
            std::fs::read_to_string(dir.join(verbatim))?,
        ));
    }
    files.sort();
    for (name, text) in &files {
        std::fs::write(dir.join(name), text)?;
        let digest = Sha256::digest(text.as_bytes());
        let hex: String = digest.iter().map(|b| format!("{b:02x}")).collect();
        let _ = writeln!(sums, "{hex}  {name}");
        println!("wrote data/{name}");
    }
    std::fs::write(dir.join("SHA256SUMS"), sums)?;
    println!("wrote data/SHA256SUMS");
    Ok(())
}
