//! Realizing a dBa inside the clopen protoconcept algebra of its primary
//! spectrum: the verdict ladder, the classical realization and the finite
//! atom/coatom form.

use dbakit::concept::{build_proto_dba, build_semi_dba, DEFAULT_CANDIDATE_CAP};
use dbakit::dba::{from_boolean, BooleanTables};
use dbakit::representation::{finite_rep_atoms, rep_map_oo, rep_map_wille};
use dbakit::samples;

fn main() -> dbakit::Result<()> {
    let cap = DEFAULT_CANDIDATE_CAP;
    let ctx = samples::small_context(3, 3, 6);

    for (name, dba) in [
        ("oo-protoconcepts", build_proto_dba(&ctx, cap)?.dba),
        ("oo-semiconcepts", build_semi_dba(&ctx, cap)?.dba),
        ("power set of 3 atoms", from_boolean(&BooleanTables::power_set(3))?),
    ] {
        let rep = rep_map_oo(&dba, cap)?;
        println!(
            "{name}: {:?}\n  spectrum {}x{}, image algebra {} elements",
            rep.classification,
            rep.kpr.cts.context().object_count(),
            rep.kpr.cts.context().attribute_count(),
            rep.proto.dba.len()
        );
        println!(
            "  hom={} quasi-injective={} injective={} onto-protoconcepts={} ladder-consistent={}",
            rep.hom.homomorphism,
            rep.hom.quasi_injective,
            rep.hom.injective,
            rep.hom.surjective,
            rep.ladder_consistent
        );

        let wille = rep_map_wille(&dba)?;
        println!(
            "  classical realization: hom={} quasi-injective={} transport-consistent={}",
            wille.homomorphism, wille.quasi_injective, wille.transport_consistent
        );

        let atoms = finite_rep_atoms(&dba)?;
        println!(
            "  atom/coatom context {}x{}: matches spectrum complement={} matches oo-realization={}",
            atoms.context_ac.object_count(),
            atoms.context_ac.attribute_count(),
            atoms.matches_standard_complement,
            atoms.matches_oo_rep
        );
    }
    Ok(())
}
