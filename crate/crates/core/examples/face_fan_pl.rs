//! Piecewise-linear functions on a face fan: linear pieces, convexity,
//! integrality and the support polytope.

use nefdual::rational::int;
use nefdual::{face_fan, PlFunction, Point, Polytope, Space};

fn report(name: &str, f: &PlFunction) {
    println!("{name}");
    for (c, u) in f.functionals().iter().enumerate() {
        println!("  cone {c}: piece {u}");
    }
    println!("  convex {}, integral {}", f.is_convex(), f.is_integral());
    if let Some((vertex, cone)) = f.convexity_violation() {
        println!("  vertex {vertex} lies below the piece of cone {cone}");
    }
}

fn main() -> nefdual::Result<()> {
    let m = |c: &[i64]| Point::from_ints(c, Space::M);
    let cross = Polytope::hull(&[m(&[1, 0]), m(&[0, 1]), m(&[-1, 0]), m(&[0, -1])])?;
    let fan = face_fan(&cross)?;

    // Vertex order is canonical: (-1,0), (0,-1), (0,1), (1,0).
    let abs_x = PlFunction::from_vertex_values(&fan, vec![int(1), int(0), int(0), int(1)])?;
    report("|x|", &abs_x);
    println!(
        "  support polytope: {:?}",
        abs_x
            .support_polytope()?
            .vertices()
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
    );

    let neg_abs_y = PlFunction::from_vertex_values(&fan, vec![int(0), int(-1), int(-1), int(0)])?;
    report("-|y|", &neg_abs_y);

    let abs_y = PlFunction::from_vertex_values(&fan, vec![int(0), int(1), int(1), int(0)])?;
    let sum = abs_x.try_add(&abs_y)?;
    report("|x| + |y|", &sum);
    println!(
        "  value at (3/2,-1/2): {}",
        sum.evaluate(&Point::new(
            vec![int(3) / int(2), int(-1) / int(2)],
            Space::M
        ))?
    );
    Ok(())
}
