//! Local disks around bones and sheets grown from them.

use diskgeo::catalog::catalog_complex;
use diskgeo::sheets::{bone_ring, grow_sheet, local_disk};
use diskgeo::Simplex;

fn main() -> diskgeo::Result<()> {
    let rp3 = catalog_complex("rp3")?;
    let bone = Simplex::new([1, 2])?;
    let ring = bone_ring(&rp3, &bone)?;
    println!(
        "bone {bone}: ring of {} facets, link {:?}",
        ring.m, ring.link
    );

    let disk = local_disk(&rp3, &bone, &[1, 2])?;
    let petals: Vec<String> = disk.petals.iter().map(|p| p.to_string()).collect();
    println!(
        "petals {} with numbers {:?}",
        petals.join(" "),
        disk.petal_partition()
    );
    println!("local disk: {} facets", disk.facets.len());

    let sheet = grow_sheet(&rp3, &bone, &[1, 2], 100)?;
    println!(
        "grown sheet: {} patches, closed {}, {} distinct facets",
        sheet.patches.len(),
        sheet.closed,
        sheet.facets().len()
    );
    print!("{}", sheet.to_dot(&rp3)?);
    Ok(())
}
