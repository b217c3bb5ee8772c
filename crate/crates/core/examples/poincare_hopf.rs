//! Pushing simplex energies to vertices: Poincare-Hopf divisors.

use diskgeo::catalog::catalog_complex;
use diskgeo::poincare_hopf::{
    min_rule, push_energy, random_rule, seeded_functions, vertex_self_map,
};

fn main() -> diskgeo::Result<()> {
    for name in ["octahedron@1", "icosahedron@1", "rp3"] {
        let c = catalog_complex(name)?;
        let (f, g) = seeded_functions(&c, 1);
        let d = push_energy(&c, &min_rule(&c, &f, &g)?)?;
        let nonzero = d.divisor.values().filter(|&&i| i != 0).count();
        println!(
            "{name}: min-rule total {} (chi {}), {nonzero} non-zero indices",
            d.total, d.euler
        );
    }

    let oct = catalog_complex("octahedron")?;
    let rule = random_rule(&oct, 42)?;
    println!("octahedron divisor {:?}", push_energy(&oct, &rule)?.divisor);
    let map = vertex_self_map(&oct, &rule)?;
    println!("self-map census {:?}", map.census());
    print!("{}", map.to_dot());
    Ok(())
}
