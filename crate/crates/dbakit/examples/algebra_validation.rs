//! Materializing pair families as finite double Boolean algebras, sweeping
//! the axiom system, and classifying the result.

use dbakit::concept::{build_proto_dba, build_semi_dba, DEFAULT_CANDIDATE_CAP};
use dbakit::dba::{
    boolean_reducts, classify_dba, from_boolean, to_boolean, validate_dba, BooleanTables,
};
use dbakit::samples;

fn main() -> dbakit::Result<()> {
    let ctx = samples::questionnaire_context();

    let proto = build_proto_dba(&ctx, DEFAULT_CANDIDATE_CAP)?;
    let semi = build_semi_dba(&ctx, DEFAULT_CANDIDATE_CAP)?;
    println!(
        "protoconcept algebra: {} elements, semiconcept algebra: {}",
        proto.dba.len(),
        semi.dba.len()
    );
    println!("proto classifies {:?}", classify_dba(&proto.dba));
    println!("semi  classifies {:?}", classify_dba(&semi.dba));

    let (meet_side, join_side) = boolean_reducts(&proto.dba)?;
    println!(
        "meet reduct: {} elements, {} atoms; join reduct: {} elements, {} coatoms",
        meet_side.members.len(),
        meet_side.atoms.len(),
        join_side.members.len(),
        join_side.coatoms.len()
    );

    // a full axiom sweep on a small instance, then one corrupted entry
    let small = samples::small_context(3, 3, 7);
    let alg = build_proto_dba(&small, DEFAULT_CANDIDATE_CAP)?;
    let report = validate_dba(&alg.dba);
    println!("small protoconcept algebra valid: {}", report.is_valid());

    let boolean = from_boolean(&BooleanTables::power_set(2))?;
    println!("power set of 2 atoms classifies {:?}", classify_dba(&boolean));
    println!(
        "round trip back to Boolean tables: {}",
        to_boolean(&boolean).is_some()
    );
    println!(
        "the questionnaire protoconcept algebra is not Boolean: {}",
        to_boolean(&proto.dba).is_none()
    );
    Ok(())
}
