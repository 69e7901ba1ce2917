//! The duality round trip: evaluation maps from a Stone context onto the
//! spectrum of its clopen semiconcept algebra, pure-part extension, and the
//! two functors at instance level.

use dbakit::concept::{build_proto_dba, build_semi_dba, DEFAULT_CANDIDATE_CAP};
use dbakit::dba::{check_hom, enumerate_automorphisms, extend_pure_iso, pure_part};
use dbakit::representation::{functor_f, functor_g, k_maps};
use dbakit::samples;
use dbakit::topology::{Cts, CtsHomClass};

fn main() -> dbakit::Result<()> {
    let cap = DEFAULT_CANDIDATE_CAP;

    // round trip: K -> S^T(K) -> spectrum CTS of it, homeomorphic to K
    let stone = Cts::discrete(samples::five_object_context());
    let km = k_maps(&stone, cap)?;
    println!(
        "clopen semiconcept algebra: {} elements; evaluation maps reach {:?}",
        km.semi.dba.len(),
        km.cts_hom.class
    );
    assert_eq!(km.cts_hom.class, CtsHomClass::Homeomorphism);
    println!(
        "induced transport is a dBa isomorphism: {} (semiconcept restriction: {})",
        km.induced.hom.is_isomorphism(),
        km.induced.semi_hom.is_isomorphism()
    );

    // pure-part extension: an isomorphism of the pure parts of two fully
    // contextual algebras extends uniquely
    let ctx = samples::small_context(2, 2, 44);
    let proto = build_proto_dba(&ctx, cap)?;
    let d = &proto.dba;
    let pp = pure_part(d)?;
    let autos = enumerate_automorphisms(&pp.dba, 12)?;
    println!(
        "pure part has {} elements and {} automorphism(s)",
        pp.dba.len(),
        autos.len()
    );
    for auto in &autos {
        let extension = extend_pure_iso(d, d, auto)?;
        let restriction = functor_g(d, d, &extension)?;
        assert_eq!(&restriction.restriction.map, auto);
    }
    println!("every pure-part automorphism extends and restricts back to itself");

    // contravariant spectrum functor on a pure algebra
    let semi = build_semi_dba(&ctx, cap)?;
    let s = &semi.dba;
    let id: Vec<usize> = (0..s.len()).collect();
    let f = functor_f(s, s, &check_hom(s, s, &id)?, cap)?;
    println!(
        "spectrum functor on the identity: homeomorphism={} realization square commutes={}",
        f.cts_hom.class == CtsHomClass::Homeomorphism,
        f.square_commutes
    );
    Ok(())
}
