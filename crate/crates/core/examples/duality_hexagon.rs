//! The diagonal bipartition of the square cross-polytope. Its dual lives on
//! the hexagon conv{±(1,0), ±(0,1), ±(1,1)} with three vertices per part.

use nefdual::{corpus, run_full_duality, NefPartition};

fn main() -> nefdual::Result<()> {
    let entry = corpus::get("cross_2d").unwrap();
    let delta = entry.polytope();
    // canonical order (-1,0), (0,-1), (0,1), (1,0)
    let np = NefPartition::validate(&delta, &[vec![2, 3], vec![0, 1]])?;
    let res = run_full_duality(&np)?;

    for (i, (d, n)) in np.delta_parts().iter().zip(np.nabla_parts()).enumerate() {
        println!(
            "Delta_{i} = conv{:?}",
            d.vertices()
                .iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
        );
        println!(
            "nabla_{i} = conv{:?}",
            n.vertices()
                .iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
        );
    }
    println!(
        "nabla = conv{:?}",
        res.nabla
            .vertices()
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
    );
    for (i, part) in res.dual.parts().iter().enumerate() {
        let pts: Vec<String> = part
            .iter()
            .map(|&k| res.nabla.vertices()[k].to_string())
            .collect();
        println!("E'_{i} = {pts:?}");
    }
    for (name, c) in res.checks.iter() {
        println!("{name:<10} {}", if c.passed { "pass" } else { "FAIL" });
    }
    Ok(())
}
