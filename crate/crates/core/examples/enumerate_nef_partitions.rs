//! Enumerates the nef-partitions of every bundled polytope for r = 2 and 3
//! and runs the full duality check on each.
//!
//! cargo run --release --example enumerate_nef_partitions [name]

use std::time::Instant;

use nefdual::{corpus, enumerate_nef_partitions, io, run_full_duality};

fn main() -> nefdual::Result<()> {
    let only = std::env::args().nth(1);
    for entry in corpus::entries() {
        if only.as_deref().is_some_and(|n| n != entry.name) {
            continue;
        }
        let delta = entry.polytope();
        for r in 2..=3 {
            let start = Instant::now();
            let found = enumerate_nef_partitions(&delta, r)?;
            let mut all_ok = true;
            for np in &found {
                all_ok &= run_full_duality(np)?.checks.all_passed();
            }
            println!(
                "{:<18} r={r}  {:>3} nef-partitions  checks {}  ({:.2?})",
                entry.name,
                found.len(),
                if all_ok { "pass" } else { "FAIL" },
                start.elapsed()
            );
            for np in found.iter().take(4) {
                println!("    {}", io::format_partition_spec(&np.canonical_parts()));
            }
        }
    }
    Ok(())
}
