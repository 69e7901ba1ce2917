//! Contexts on topological spaces: continuity of the relation and its
//! converse, clopen pair algebras and Stone contexts.

use dbakit::dba::classify_dba;
use dbakit::samples;
use dbakit::topology::{
    build_clopen_proto_dba, build_clopen_semi_dba, enumerate_clopen_oo_semiconcepts,
    lower_semicontinuous_pointwise, Cts,
};

fn main() -> dbakit::Result<()> {
    // the two-block CTS: a semiconcept survives the clopen restriction only
    // if both components respect the partition
    let cts = samples::five_object_cts();
    println!(
        "two-block CTS: relation continuous={} converse continuous={} (CTSCR: {})",
        cts.is_relation_continuous(),
        cts.is_converse_continuous(),
        cts.is_ctscr()
    );
    let semis = enumerate_clopen_oo_semiconcepts(&cts);
    println!("clopen oo-semiconcepts: {}", semis.len());
    for p in &semis {
        println!(
            "  ({:?}, {:?})",
            p.extent.iter().map(|g| &cts.context().objects()[g]).collect::<Vec<_>>(),
            p.intent.iter().map(|m| &cts.context().attributes()[m]).collect::<Vec<_>>()
        );
    }

    // open-set route vs pointwise neighbourhood route on a failing instance
    let bad = samples::semicontinuity_counterexample();
    println!(
        "counterexample: open-set lower semicontinuity={} pointwise={}",
        bad.is_lower_semicontinuous(),
        lower_semicontinuous_pointwise(&bad)
    );

    // a discrete CTS is a Stone context and its clopen algebras classify as
    // the theory says
    let stone = Cts::discrete(samples::five_object_context());
    println!("discrete five-object CTS is a Stone context: {}", stone.is_stone_context());
    let proto = build_clopen_proto_dba(&stone)?;
    let semi = build_clopen_semi_dba(&stone)?;
    println!(
        "clopen protoconcepts: {} ({:?}), clopen semiconcepts: {} ({:?})",
        proto.dba.len(),
        classify_dba(&proto.dba),
        semi.dba.len(),
        classify_dba(&semi.dba)
    );
    Ok(())
}
