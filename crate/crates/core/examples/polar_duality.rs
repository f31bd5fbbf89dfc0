//! Polar duals of a few lattice polytopes, including one whose polar has
//! rational vertices.

use nefdual::{Point, Polytope, Space};

fn show(name: &str, p: &Polytope) -> nefdual::Result<()> {
    let polar = p.polar_dual()?;
    println!("{name}");
    println!("  vertices: {}", list(p.vertices()));
    println!("  polar:    {}", list(polar.vertices()));
    for f in polar.facets() {
        println!("  facet of polar: {f}");
    }
    assert_eq!(polar.polar_dual()?, *p);
    Ok(())
}

fn list(v: &[Point]) -> String {
    v.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

fn main() -> nefdual::Result<()> {
    let m = |c: &[i64]| Point::from_ints(c, Space::M);
    let triangle = Polytope::hull(&[m(&[1, 0]), m(&[0, 1]), m(&[-1, -1])])?;
    show("triangle", &triangle)?;

    let cube: Vec<Point> = (0..8)
        .map(|b: i64| m(&[2 * (b & 1) - 1, (b & 2) - 1, (b & 4) / 2 - 1]))
        .collect();
    show("cube", &Polytope::hull(&cube)?)?;

    let lopsided = Polytope::hull(&[m(&[2, 0]), m(&[0, 1]), m(&[-1, 0]), m(&[0, -1])])?;
    show("lopsided quadrilateral", &lopsided)
}
