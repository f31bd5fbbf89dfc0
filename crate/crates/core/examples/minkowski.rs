//! Minkowski sums. The last one rebuilds the 3-cube from the two support
//! polytopes of the octahedron partition with E_1 = {e1}.

use nefdual::{io, Point, Polytope, Space};

fn main() -> nefdual::Result<()> {
    let m = |c: &[i64]| Point::from_ints(c, Space::M);

    let x = Polytope::hull(&[m(&[-1, 0]), m(&[1, 0])])?;
    let y = Polytope::hull(&[m(&[0, -1]), m(&[0, 1])])?;
    print!(
        "segment + segment\n{}",
        io::write_polytope(&x.minkowski_sum(&y)?)
    );

    let triangle = Polytope::hull(&[m(&[1, 0]), m(&[0, 1]), m(&[-1, -1])])?;
    let flipped = Polytope::hull(&[m(&[-1, 0]), m(&[0, -1]), m(&[1, 1])])?;
    print!(
        "triangle + its negative\n{}",
        io::write_polytope(&triangle.minkowski_sum(&flipped)?)
    );

    let seg = Polytope::hull(&[m(&[-1, 0, 0]), m(&[0, 0, 0])])?;
    let mut corners = Vec::new();
    for a in [0, 1] {
        for b in [-1, 1] {
            for c in [-1, 1] {
                corners.push(m(&[a, b, c]));
            }
        }
    }
    let slab = Polytope::hull(&corners)?;
    print!(
        "segment + box\n{}",
        io::write_polytope(&seg.minkowski_sum(&slab)?)
    );
    Ok(())
}
