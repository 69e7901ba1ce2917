//! Filters, ideals, the primary spectrum and the standard context.

use dbakit::concept::{build_semi_dba, DEFAULT_CANDIDATE_CAP};
use dbakit::dba::{from_boolean, BooleanTables};
use dbakit::filters::{
    generate_filter, primary_spectrum, separate_filter_ideal, standard_complement,
    standard_context, CarrierSubset,
};
use dbakit::samples;
use dbakit::BitSet;

fn main() -> dbakit::Result<()> {
    let square = from_boolean(&BooleanTables::power_set(2))?;
    let f = generate_filter(&square, &BitSet::singleton(4, 1))?;
    println!("filter generated by an atom: {:?}", f.members);

    let spectrum = primary_spectrum(&square)?;
    println!(
        "power set of 2 atoms: {} primary filters, {} primary ideals",
        spectrum.filters.len(),
        spectrum.ideals.len()
    );
    println!("locus of top across the filters: {:?}", spectrum.filter_locus(square.top()));

    // the prime ideal theorem witnessed by exhaustive search
    let top_only = CarrierSubset::filter(BitSet::singleton(4, square.top()));
    let bot_only = CarrierSubset::ideal(BitSet::singleton(4, square.bot()));
    let (g, j) = separate_filter_ideal(&square, &top_only, &bot_only)?;
    println!("disjoint primary witnesses: {:?} / {:?}", g.members, j.members);

    let ctx = samples::questionnaire_context();
    let semi = build_semi_dba(&ctx, DEFAULT_CANDIDATE_CAP)?;
    let delta = standard_context(&semi.dba)?;
    let nabla = standard_complement(&semi.dba)?;
    println!(
        "standard context of the semiconcept algebra: {} x {} (complement shares the sides: {})",
        delta.object_count(),
        delta.attribute_count(),
        nabla.object_count() == delta.object_count()
    );
    println!("first filter label: {}", delta.objects()[0]);
    Ok(())
}
