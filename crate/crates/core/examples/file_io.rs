//! Reads a polytope file, validates a partition given in file order and
//! writes the dual polytope back in the same format.

use nefdual::io::{parse_partition_spec, parse_points, write_polytope};
use nefdual::{run_full_duality, NefPartition, Polytope, Space};

const INPUT: &str = "\
# hexagon, vertices in file order
2 6
1 0
0 1
-1 0
0 -1
1 1
-1 -1
";

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let points = parse_points(INPUT, Space::M)?;
    let delta = Polytope::hull(&points)?;

    let spec = "0,3;1,4;2,5";
    let parts: Vec<Vec<usize>> = parse_partition_spec(spec, points.len())?
        .into_iter()
        .map(|p| {
            p.into_iter()
                .map(|i| delta.vertex_index(&points[i]).expect("row is a vertex"))
                .collect()
        })
        .collect();
    let res = run_full_duality(&NefPartition::validate(&delta, &parts)?)?;

    print!("{}", write_polytope(&res.nabla));
    let back = Polytope::hull(&parse_points(&write_polytope(&delta), Space::M)?)?;
    assert_eq!(back, delta);
    Ok(())
}
