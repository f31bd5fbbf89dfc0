//! Validates candidate partitions of the square's vertices and the
//! cross-polytope's vertices, printing each verdict.

use nefdual::{corpus, Error, NefPartition};

fn main() {
    for (name, candidates) in [
        (
            "cross_2d",
            &[
                &[&[0usize, 3][..], &[1, 2]][..],
                &[&[0, 1], &[2, 3]],
                &[&[0], &[1, 2], &[3]],
            ][..],
        ),
        (
            "square_2d",
            &[&[&[0usize][..], &[1, 2, 3]][..], &[&[0, 3], &[1, 2]]],
        ),
    ] {
        let delta = corpus::get(name).unwrap().polytope();
        println!(
            "{name}: {}",
            delta
                .vertices()
                .iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(" ")
        );
        for parts in candidates {
            let parts: Vec<Vec<usize>> = parts.iter().map(|p| p.to_vec()).collect();
            match NefPartition::validate(&delta, &parts) {
                Ok(np) => println!(
                    "  {parts:?}: valid, nabla_i sizes {:?}",
                    np.nabla_parts()
                        .iter()
                        .map(|n| n.vertices().len())
                        .collect::<Vec<_>>()
                ),
                Err(Error::Rejected(why)) => println!("  {parts:?}: {why}"),
                Err(e) => println!("  {parts:?}: error {e}"),
            }
        }
    }
}
