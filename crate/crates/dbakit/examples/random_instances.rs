//! Seeded random instance generation: contexts, topologies and full CTS.

use dbakit::concept::{build_proto_dba, DEFAULT_CANDIDATE_CAP};
use dbakit::dba::classify_dba;
use dbakit::random::{random_context, random_cts};

fn main() -> dbakit::Result<()> {
    let a = random_context(42, 3, 3, 0.5);
    let b = random_context(42, 3, 3, 0.5);
    println!("seed 42 twice gives identical contexts: {}", a == b);
    println!(
        "seed 43 differs: {}",
        random_context(43, 3, 3, 0.5) != a
    );

    for seed in 0..4u64 {
        let ctx = random_context(seed, 4, 4, 0.5);
        let alg = build_proto_dba(&ctx, DEFAULT_CANDIDATE_CAP)?;
        println!(
            "seed {seed}: {} incidences, {} oo-protoconcepts, {:?}",
            ctx.incidence_count(),
            alg.dba.len(),
            classify_dba(&alg.dba)
        );
    }

    let cts = random_cts(7, 4, 3);
    println!(
        "random CTS (seed 7): {} object opens, {} attribute opens, CTSCR={}",
        cts.object_topology().opens().len(),
        cts.attribute_topology().opens().len(),
        cts.is_ctscr()
    );
    Ok(())
}
