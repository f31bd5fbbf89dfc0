//! Applies the duality twice to the octahedron partition with E_1 = {e1}.
//! Here 0 is a vertex of nabla_1, so it must be left out of E'_1.

use nefdual::{corpus, run_full_duality, NefPartition, Point, Space};

fn main() -> nefdual::Result<()> {
    let delta = corpus::get("octahedron_3d").unwrap().polytope();
    let e1 = delta
        .vertex_index(&Point::from_ints(&[1, 0, 0], Space::M))
        .unwrap();
    let rest: Vec<usize> = (0..6).filter(|&i| i != e1).collect();
    let np = NefPartition::validate(&delta, &[vec![e1], rest])?;

    let once = run_full_duality(&np)?;
    println!(
        "nabla_1 = {:?}",
        np.nabla_parts()[0]
            .vertices()
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
    );
    println!("nabla has {} vertices", once.nabla.vertices().len());
    let twice = run_full_duality(&once.dual)?;

    let coords = |v: &[Point]| v.iter().map(|p| p.coords().to_vec()).collect::<Vec<_>>();
    println!(
        "back to Delta: {}",
        coords(twice.nabla.vertices()) == coords(np.delta().vertices())
    );
    println!(
        "same parts:    {}",
        twice.dual.part_family() == np.part_family()
    );
    println!(
        "all checks:    {}",
        once.checks.all_passed() && twice.checks.all_passed()
    );
    Ok(())
}
