//! The built-in complexes and their expected invariants.

use diskgeo::catalog::{catalog_complex, entries, verify_entry};

fn main() -> diskgeo::Result<()> {
    for e in entries() {
        let c = catalog_complex(&e.name)?;
        let f = verify_entry(&e, &c)?;
        println!("{:28} f = {:?} chi = {}", e.name, f.counts, f.euler);
    }
    let c = catalog_complex("cycle7@2")?;
    println!("cycle7@2 f = {:?}", c.f_vector().counts);
    Ok(())
}
