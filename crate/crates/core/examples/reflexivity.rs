//! Decides reflexivity and reports why a polytope fails.

use nefdual::{corpus, Point, Polytope, Space};

fn main() -> nefdual::Result<()> {
    for e in corpus::entries() {
        println!("{:<18} reflexive: {}", e.name, e.polytope().is_reflexive());
    }

    let m = |c: &[i64]| Point::from_ints(c, Space::M);
    let square = Polytope::hull(&[m(&[2, 2]), m(&[2, -2]), m(&[-2, 2]), m(&[-2, -2])])?;
    let off_center = Polytope::hull(&[m(&[0, 0]), m(&[1, 0]), m(&[0, 1])])?;
    for (name, p) in [("[-2,2]^2", square), ("corner triangle", off_center)] {
        match p.reflexivity_failure() {
            Some(why) => println!("{name:<18} not reflexive: {why}"),
            None => println!("{name:<18} reflexive"),
        }
    }
    Ok(())
}
