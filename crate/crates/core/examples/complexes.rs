//! Building complexes: closures, Whitney complexes, stars, spheres and
//! barycentric refinement.

use diskgeo::{whitney, Graph, Simplex, SimplicialComplex};

fn main() -> diskgeo::Result<()> {
    let path = SimplicialComplex::generate([vec![1, 2], vec![2, 3], vec![3, 4]])?;
    println!(
        "path: f = {:?}, chi = {}",
        path.f_vector().counts,
        path.euler()
    );

    let oct = whitney(&Graph::complete_multipartite(&[2, 2, 2]));
    println!(
        "octahedron: f = {:?}, chi = {}",
        oct.f_vector().counts,
        oct.euler()
    );

    let edge = Simplex::new([1, 3])?;
    let star: Vec<String> = oct
        .open_star(&edge)?
        .iter()
        .map(|s| s.to_string())
        .collect();
    println!("U({edge}) = {}", star.join(" "));
    let link = oct.unit_sphere(&edge)?;
    println!("S({edge}) has f = {:?}", link.f_vector().counts);

    let comp = oct.complement_of_star(&edge)?;
    println!(
        "complement of U({edge}): f = {:?}, chi = {}",
        comp.f_vector().counts,
        comp.euler()
    );

    let b = oct.barycentric();
    println!("barycentric refinement: f = {:?}", b.f_vector().counts);
    let dual = oct.dual_graph()?;
    println!(
        "dual graph: {} vertices, {} edges",
        dual.vertex_count(),
        dual.edge_count()
    );
    Ok(())
}
