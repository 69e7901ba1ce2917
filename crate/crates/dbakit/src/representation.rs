//! Realizing a dBa inside the clopen pair algebras of its primary-spectrum
//! CTS, the finite atom/coatom realization, the evaluation maps back from a
//! Stone context, and the instance-level functor checks.

use crate::concept::{classify_pair, wille_bot, wille_top, ConceptAlgebra, ConceptPair};
use crate::context::FormalContext;
use crate::dba::{check_hom, classify_dba, pure_part, DbaClass, DbaHom, FiniteDba, PurePart};
use crate::error::{Error, Result};
use crate::filters::{hom_preimage_maps, primary_spectrum, standard, PrimarySpectrum};
use crate::set::BitSet;
use crate::topology::{
    build_clopen_proto_dba, build_clopen_semi_dba, check_cts_morphism, induced_dba_iso, Cts,
    CtsHom, CtsHomClass, FiniteTopology, InducedIso,
};

/// The primary-spectrum CTS of a dBa: primary filters against primary
/// ideals, related when disjoint, each side topologized by taking the loci
/// as a closed subbase. Finite, so both topologies collapse to discrete.
#[derive(Clone, Debug)]
pub struct KprRealization {
    pub cts: Cts,
    pub spectrum: PrimarySpectrum,
}

/// Builds the spectrum CTS and asserts the theorem-level facts about it:
/// it is a CTSCR, a Stone context, and discrete on both sides.
pub fn build_kpr_cts(dba: &FiniteDba, cap: u64) -> Result<KprRealization> {
    let spectrum = primary_spectrum(dba)?;
    let filters = spectrum.filters.len();
    let ideals = spectrum.ideals.len();
    if filters + ideals >= 64 || 1u64 << (filters + ideals) > cap {
        return Err(Error::CandidateCapExceeded {
            objects: filters,
            attributes: ideals,
            candidates: 1u128 << (filters + ideals).min(127),
            cap,
        });
    }
    let context = standard(dba, &spectrum, true)?;
    let filter_subbase: Vec<BitSet> = (0..dba.len())
        .map(|x| spectrum.filter_locus(x).clone())
        .collect();
    let ideal_subbase: Vec<BitSet> = (0..dba.len())
        .map(|x| spectrum.ideal_locus(x).clone())
        .collect();
    let object_topology = FiniteTopology::from_closed_subbase(filters, &filter_subbase)?;
    let attribute_topology = FiniteTopology::from_closed_subbase(ideals, &ideal_subbase)?;
    if !object_topology.is_discrete() || !attribute_topology.is_discrete() {
        return Err(Error::Internal(
            "spectrum topologies of a finite dBa must be discrete".into(),
        ));
    }
    let cts = Cts::new(object_topology, attribute_topology, context)?;
    if !cts.is_ctscr() {
        return Err(Error::Internal("spectrum CTS must be a CTSCR".into()));
    }
    if let Some(reason) = cts.stone_violation() {
        return Err(Error::Internal(format!(
            "spectrum CTS must be a Stone context: {reason}"
        )));
    }
    Ok(KprRealization { cts, spectrum })
}

/// The realization map `x -> (F_{neg x}, I_x)` into the clopen protoconcept
/// algebra of the spectrum CTS, with every verdict of the representation
/// ladder.
#[derive(Clone, Debug)]
pub struct RepresentationReport {
    pub kpr: KprRealization,
    /// Clopen object-oriented protoconcepts of the spectrum CTS.
    pub proto: ConceptAlgebra,
    /// Clopen object-oriented semiconcepts of the spectrum CTS.
    pub semi: ConceptAlgebra,
    /// `x ->` index of `(F_{neg x}, I_x)` in `proto`.
    pub map: Vec<usize>,
    pub hom: DbaHom,
    pub classification: DbaClass,
    /// The pure elements of `proto` are exactly the images of the pure
    /// elements, meet idempotents arising from meet idempotents and join
    /// from join.
    pub characterization_holds: bool,
    /// The semiconcept carrier is the pure part of the protoconcept
    /// carrier.
    pub semi_is_pure_part: bool,
    /// The full map lands inside the semiconcepts and is an isomorphism
    /// onto them (pure inputs).
    pub semi_iso: Option<DbaHom>,
    /// Computed verdicts match the classification: always quasi-injective,
    /// injective iff contextual, onto the protoconcepts iff fully
    /// contextual, isomorphic onto the semiconcepts iff pure.
    pub ladder_consistent: bool,
}

pub fn rep_map_oo(dba: &FiniteDba, cap: u64) -> Result<RepresentationReport> {
    let kpr = build_kpr_cts(dba, cap)?;
    let proto = build_clopen_proto_dba(&kpr.cts)?;
    let semi = build_clopen_semi_dba(&kpr.cts)?;
    let map: Vec<usize> = (0..dba.len())
        .map(|x| {
            let extent = kpr.spectrum.filter_locus(dba.neg(x));
            let intent = kpr.spectrum.ideal_locus(x);
            proto.index_of(extent, intent).ok_or_else(|| {
                Error::Internal(format!(
                    "image of element {x} is not a clopen protoconcept"
                ))
            })
        })
        .collect::<Result<_>>()?;
    let hom = check_hom(dba, &proto.dba, &map)?;
    let classification = classify_dba(dba);

    let target_pure: Vec<usize> = proto.dba.pure_elements();
    let mut image_pure: Vec<usize> = dba.pure_elements().iter().map(|&x| map[x]).collect();
    image_pure.sort_unstable();
    image_pure.dedup();
    let mut characterization_holds = target_pure == image_pure;
    for &x in &dba.meet_idempotents() {
        characterization_holds &= proto.dba.meet_sq(map[x]) == map[x];
    }
    for &x in &dba.join_idempotents() {
        characterization_holds &= proto.dba.join_sq(map[x]) == map[x];
    }
    let meet_images: std::collections::HashSet<usize> =
        dba.meet_idempotents().iter().map(|&x| map[x]).collect();
    let join_images: std::collections::HashSet<usize> =
        dba.join_idempotents().iter().map(|&x| map[x]).collect();
    for &p in &target_pure {
        if proto.dba.meet_sq(p) == p {
            characterization_holds &= meet_images.contains(&p);
        }
        if proto.dba.join_sq(p) == p {
            characterization_holds &= join_images.contains(&p);
        }
    }

    let semi_pairs: Vec<&(BitSet, BitSet)> = semi.pairs.iter().collect();
    let pure_pairs: Vec<&(BitSet, BitSet)> = target_pure.iter().map(|&i| &proto.pairs[i]).collect();
    let semi_is_pure_part = semi_pairs == pure_pairs;

    let semi_map: Option<Vec<usize>> = map
        .iter()
        .map(|&i| semi.index_of(&proto.pairs[i].0, &proto.pairs[i].1))
        .collect();
    let semi_iso = match semi_map {
        Some(m) => Some(check_hom(dba, &semi.dba, &m)?),
        None => None,
    };

    let iso_onto_semi = semi_iso.as_ref().is_some_and(DbaHom::is_isomorphism);
    let ladder_consistent = hom.homomorphism
        && hom.quasi_injective
        && hom.injective == classification.contextual
        && hom.surjective == classification.fully_contextual
        && characterization_holds
        && semi_is_pure_part
        && (!classification.pure || iso_onto_semi);

    Ok(RepresentationReport {
        kpr,
        proto,
        semi,
        map,
        hom,
        classification,
        characterization_holds,
        semi_is_pure_part,
        semi_iso,
        ladder_consistent,
    })
}

/// Verdict wrapper for the pure-part characterization alone.
#[derive(Clone, Debug)]
pub struct Characterization {
    pub holds: bool,
}

pub fn characterize_pure_part(dba: &FiniteDba, cap: u64) -> Result<Characterization> {
    let report = rep_map_oo(dba, cap)?;
    Ok(Characterization {
        holds: report.characterization_holds && report.semi_is_pure_part,
    })
}

/// The classical realization `x -> (F_x, I_x)` into the protoconcept pairs
/// of the standard context, checked equation-wise directly on pairs.
#[derive(Clone, Debug)]
pub struct WilleRep {
    pub standard: FormalContext,
    pub images: Vec<ConceptPair>,
    pub all_protoconcepts: bool,
    pub homomorphism: bool,
    pub quasi_injective: bool,
    pub injective: bool,
    /// `(F_x^c, I_x)` equals the object-oriented image `(F_{neg x}, I_x)`.
    pub transport_consistent: bool,
}

pub fn rep_map_wille(dba: &FiniteDba) -> Result<WilleRep> {
    let spectrum = primary_spectrum(dba)?;
    let delta = standard(dba, &spectrum, false)?;
    let images: Vec<ConceptPair> = (0..dba.len())
        .map(|x| {
            classify_pair(
                &delta,
                spectrum.filter_locus(x),
                spectrum.ideal_locus(x),
            )
        })
        .collect::<Result<_>>()?;
    let all_protoconcepts = images.iter().all(ConceptPair::is_protoconcept);

    // raw result pairs keep the quadratic sweeps cheap; the classifying
    // operation wrappers are exercised against them in the unit tests
    let meet_pair = |p: &ConceptPair, q: &ConceptPair| -> Result<(BitSet, BitSet)> {
        let a = p.extent.intersection(&q.extent);
        let b = delta.derive_intent(&a)?;
        Ok((a, b))
    };
    let join_pair = |p: &ConceptPair, q: &ConceptPair| -> Result<(BitSet, BitSet)> {
        let b = p.intent.intersection(&q.intent);
        let a = delta.derive_extent(&b)?;
        Ok((a, b))
    };
    let eq = |p: &ConceptPair, (a, b): &(BitSet, BitSet)| p.extent == *a && p.intent == *b;
    let top = wille_top(&delta)?;
    let bot = wille_bot(&delta)?;
    let mut homomorphism = eq(&images[dba.top()], &(top.extent, top.intent))
        && eq(&images[dba.bot()], &(bot.extent, bot.intent));
    'hom: for x in 0..dba.len() {
        let neg = {
            let a = images[x].extent.complement();
            let b = delta.derive_intent(&a)?;
            (a, b)
        };
        let opp = {
            let b = images[x].intent.complement();
            let a = delta.derive_extent(&b)?;
            (a, b)
        };
        if !eq(&images[dba.neg(x)], &neg) || !eq(&images[dba.opp(x)], &opp) {
            homomorphism = false;
            break;
        }
        for y in 0..dba.len() {
            if !eq(&images[dba.meet(x, y)], &meet_pair(&images[x], &images[y])?)
                || !eq(&images[dba.join(x, y)], &join_pair(&images[x], &images[y])?)
            {
                homomorphism = false;
                break 'hom;
            }
        }
    }

    // the table-derived quasi-order on pairs is componentwise containment:
    // (A,B) <= (C,D) iff A <= C and D <= B
    let mut quasi_injective = true;
    'qi: for x in 0..dba.len() {
        for y in 0..dba.len() {
            let pair_leq = images[x].extent.is_subset(&images[y].extent)
                && images[y].intent.is_subset(&images[x].intent);
            if dba.leq_raw(x, y) != pair_leq {
                quasi_injective = false;
                break 'qi;
            }
        }
    }

    let mut seen = std::collections::HashSet::new();
    let injective = images.iter().all(|p| seen.insert((p.extent.clone(), p.intent.clone())));

    let transport_consistent = (0..dba.len()).all(|x| {
        images[x].extent.complement() == *spectrum.filter_locus(dba.neg(x))
            && images[x].intent == *spectrum.ideal_locus(x)
    });

    Ok(WilleRep {
        standard: delta,
        images,
        all_protoconcepts,
        homomorphism,
        quasi_injective,
        injective,
        transport_consistent,
    })
}

/// The finite realization over atoms and coatoms: the context
/// `(atoms of the meet reduct, coatoms of the join reduct, <=)`, the
/// classical map `x -> ({a : a <= x}, {b : x <= b})` and its complement
/// form into the object-oriented pairs of the complement context.
#[derive(Clone, Debug)]
pub struct AtomRep {
    pub context_ac: FormalContext,
    pub images: Vec<ConceptPair>,
    pub homomorphism: bool,
    pub quasi_injective: bool,
    pub complement_images: Vec<ConceptPair>,
    pub complement_homomorphism: bool,
    pub complement_quasi_injective: bool,
    /// The complement context coincides with the complement of the standard
    /// context under the atom/filter and coatom/ideal identification.
    pub matches_standard_complement: bool,
    /// The complement-form images are exactly the spectrum loci
    /// `(F_{neg x}, I_x)`.
    pub matches_oo_rep: bool,
}

pub fn finite_rep_atoms(dba: &FiniteDba) -> Result<AtomRep> {
    let spectrum = primary_spectrum(dba)?;
    let atoms = spectrum.filter_atoms().to_vec();
    let coatoms = spectrum.ideal_coatoms().to_vec();
    let objects: Vec<String> = (0..atoms.len()).map(|i| format!("a{i}")).collect();
    let attributes: Vec<String> = (0..coatoms.len()).map(|j| format!("c{j}")).collect();
    let incidence: Vec<Vec<bool>> = atoms
        .iter()
        .map(|&a| coatoms.iter().map(|&b| dba.leq(a, b)).collect())
        .collect();
    let context_ac = FormalContext::new(objects, attributes, &incidence)?;
    let complement = context_ac.complement();

    let atom_set = |x: usize, flip: bool| {
        BitSet::from_indices(
            atoms.len(),
            atoms
                .iter()
                .enumerate()
                .filter(|&(_, &a)| dba.leq(a, x) != flip)
                .map(|(i, _)| i),
        )
    };
    let coatom_set = |x: usize| {
        BitSet::from_indices(
            coatoms.len(),
            coatoms
                .iter()
                .enumerate()
                .filter(|&(_, &b)| dba.leq(x, b))
                .map(|(j, _)| j),
        )
    };

    let images: Vec<ConceptPair> = (0..dba.len())
        .map(|x| classify_pair(&context_ac, &atom_set(x, false), &coatom_set(x)))
        .collect::<Result<_>>()?;
    let complement_images: Vec<ConceptPair> = (0..dba.len())
        .map(|x| classify_pair(&complement, &atom_set(x, true), &coatom_set(x)))
        .collect::<Result<_>>()?;

    // raw pair computations; the classifying wrappers agree with these by
    // the unit tests on small instances
    let check_hom_pairs = |imgs: &[ConceptPair], ctx: &FormalContext, oo: bool| -> Result<(bool, bool)> {
        let eq = |p: &ConceptPair, a: &BitSet, b: &BitSet| p.extent == *a && p.intent == *b;
        let g = ctx.object_count();
        let m = ctx.attribute_count();
        let mut hom = if oo {
            eq(&imgs[dba.top()], &ctx.diamond(&BitSet::empty(m))?, &BitSet::empty(m))
                && eq(&imgs[dba.bot()], &BitSet::full(g), &ctx.black_square(&BitSet::full(g))?)
        } else {
            eq(&imgs[dba.top()], &ctx.derive_extent(&BitSet::empty(m))?, &BitSet::empty(m))
                && eq(&imgs[dba.bot()], &BitSet::empty(g), &ctx.derive_intent(&BitSet::empty(g))?)
        };
        'outer: for x in 0..dba.len() {
            let (neg_a, opp_b) = (imgs[x].extent.complement(), imgs[x].intent.complement());
            let (neg_b, opp_a) = if oo {
                (ctx.black_square(&neg_a)?, ctx.diamond(&opp_b)?)
            } else {
                (ctx.derive_intent(&neg_a)?, ctx.derive_extent(&opp_b)?)
            };
            if !eq(&imgs[dba.neg(x)], &neg_a, &neg_b) || !eq(&imgs[dba.opp(x)], &opp_a, &opp_b) {
                hom = false;
                break;
            }
            for y in 0..dba.len() {
                let meet_a = if oo {
                    imgs[x].extent.union(&imgs[y].extent)
                } else {
                    imgs[x].extent.intersection(&imgs[y].extent)
                };
                let meet_b = if oo {
                    ctx.black_square(&meet_a)?
                } else {
                    ctx.derive_intent(&meet_a)?
                };
                let join_b = imgs[x].intent.intersection(&imgs[y].intent);
                let join_a = if oo {
                    ctx.diamond(&join_b)?
                } else {
                    ctx.derive_extent(&join_b)?
                };
                if !eq(&imgs[dba.meet(x, y)], &meet_a, &meet_b)
                    || !eq(&imgs[dba.join(x, y)], &join_a, &join_b)
                {
                    hom = false;
                    break 'outer;
                }
            }
        }
        // pair order is componentwise containment in both families
        let mut quasi = true;
        'qi: for x in 0..dba.len() {
            for y in 0..dba.len() {
                let pair_leq = if oo {
                    imgs[y].extent.is_subset(&imgs[x].extent)
                        && imgs[y].intent.is_subset(&imgs[x].intent)
                } else {
                    imgs[x].extent.is_subset(&imgs[y].extent)
                        && imgs[y].intent.is_subset(&imgs[x].intent)
                };
                if dba.leq_raw(x, y) != pair_leq {
                    quasi = false;
                    break 'qi;
                }
            }
        }
        Ok((hom, quasi))
    };

    let (homomorphism, quasi_injective) = check_hom_pairs(&images, &context_ac, false)?;
    let (complement_homomorphism, complement_quasi_injective) =
        check_hom_pairs(&complement_images, &complement, true)?;

    let nabla = standard(dba, &spectrum, true)?;
    let matches_standard_complement = complement.incidence_matrix() == nabla.incidence_matrix();

    let matches_oo_rep = (0..dba.len()).all(|x| {
        complement_images[x].extent == *spectrum.filter_locus(dba.neg(x))
            && complement_images[x].intent == *spectrum.ideal_locus(x)
    });

    Ok(AtomRep {
        context_ac,
        images,
        homomorphism,
        quasi_injective,
        complement_images,
        complement_homomorphism,
        complement_quasi_injective,
        matches_standard_complement,
        matches_oo_rep,
    })
}

/// The evaluation maps from a Stone context back onto the spectrum CTS of
/// its clopen semiconcept algebra: `k1` sends an object to the clopen
/// semiconcepts avoiding it (a primary filter), `k2` sends an attribute to
/// those whose intent contains it (a primary ideal).
#[derive(Clone, Debug)]
pub struct KMaps {
    pub semi: ConceptAlgebra,
    pub kpr: KprRealization,
    pub k1: Vec<usize>,
    pub k2: Vec<usize>,
    pub cts_hom: CtsHom,
    pub induced: InducedIso,
}

pub fn k_maps(stone: &Cts, cap: u64) -> Result<KMaps> {
    if let Some(reason) = stone.stone_violation() {
        return Err(Error::NotStone(reason));
    }
    let semi = build_clopen_semi_dba(stone)?;
    let kpr = build_kpr_cts(&semi.dba, cap)?;
    let ctx = stone.context();
    let n = semi.dba.len();
    let k1: Vec<usize> = (0..ctx.object_count())
        .map(|g| {
            let members = BitSet::from_indices(
                n,
                (0..n).filter(|&i| !semi.pairs[i].0.contains(g)),
            );
            kpr.spectrum
                .filters
                .iter()
                .position(|f| f.members == members)
                .ok_or_else(|| {
                    Error::Internal(format!("k1 image of object {g} is not a primary filter"))
                })
        })
        .collect::<Result<_>>()?;
    let k2: Vec<usize> = (0..ctx.attribute_count())
        .map(|m| {
            let members = BitSet::from_indices(
                n,
                (0..n).filter(|&i| semi.pairs[i].1.contains(m)),
            );
            kpr.spectrum
                .ideals
                .iter()
                .position(|f| f.members == members)
                .ok_or_else(|| {
                    Error::Internal(format!("k2 image of attribute {m} is not a primary ideal"))
                })
        })
        .collect::<Result<_>>()?;
    let cts_hom = check_cts_morphism(stone, &kpr.cts, &k1, &k2)?;
    if cts_hom.class < CtsHomClass::Homeomorphism {
        return Err(Error::Internal(format!(
            "evaluation maps reached only {:?}",
            cts_hom.class
        )));
    }
    let induced = induced_dba_iso(stone, &kpr.cts, &cts_hom)?;
    Ok(KMaps {
        semi,
        kpr,
        k1,
        k2,
        cts_hom,
        induced,
    })
}

/// Pure-part restriction of an isomorphism between fully contextual dBas.
#[derive(Clone, Debug)]
pub struct FunctorG {
    pub pure_src: PurePart,
    pub pure_dst: PurePart,
    pub restriction: DbaHom,
}

pub fn functor_g(src: &FiniteDba, dst: &FiniteDba, iso: &DbaHom) -> Result<FunctorG> {
    if !classify_dba(src).fully_contextual || !classify_dba(dst).fully_contextual {
        return Err(Error::NotFullyContextual);
    }
    if !iso.is_isomorphism() {
        return Err(Error::NotHomomorphism("map is not an isomorphism".into()));
    }
    let pure_src = pure_part(src)?;
    let pure_dst = pure_part(dst)?;
    let mut dst_position = vec![usize::MAX; dst.len()];
    for (k, &x) in pure_dst.carrier.iter().enumerate() {
        dst_position[x] = k;
    }
    let restriction_map: Vec<usize> = pure_src
        .carrier
        .iter()
        .map(|&x| {
            let image = iso.map[x];
            if dst_position[image] == usize::MAX {
                Err(Error::Internal(format!(
                    "isomorphism moves pure element {x} outside the pure part"
                )))
            } else {
                Ok(dst_position[image])
            }
        })
        .collect::<Result<_>>()?;
    let restriction = check_hom(&pure_src.dba, &pure_dst.dba, &restriction_map)?;
    if !restriction.is_isomorphism() {
        return Err(Error::Internal(
            "pure-part restriction failed the isomorphism check".into(),
        ));
    }
    Ok(FunctorG {
        pure_src,
        pure_dst,
        restriction,
    })
}

/// The contravariant spectrum construction on a pure-dBa isomorphism: the
/// preimage maps on primary filters and ideals, verified as a
/// CTSCR-homeomorphism between the spectrum CTS, together with the induced
/// transport and the commuting square against the realization maps.
#[derive(Clone, Debug)]
pub struct FunctorF {
    pub kpr_src: KprRealization,
    pub kpr_dst: KprRealization,
    pub alpha: Vec<usize>,
    pub beta: Vec<usize>,
    pub cts_hom: CtsHom,
    pub induced: InducedIso,
    pub square_commutes: bool,
}

pub fn functor_f(src: &FiniteDba, dst: &FiniteDba, iso: &DbaHom, cap: u64) -> Result<FunctorF> {
    if !classify_dba(src).pure || !classify_dba(dst).pure {
        return Err(Error::NotPure);
    }
    if !iso.is_isomorphism() {
        return Err(Error::NotHomomorphism("map is not an isomorphism".into()));
    }
    let kpr_src = build_kpr_cts(src, cap)?;
    let kpr_dst = build_kpr_cts(dst, cap)?;
    let (alpha, beta) = hom_preimage_maps(src, dst, iso)?;
    let cts_hom = check_cts_morphism(&kpr_dst.cts, &kpr_src.cts, &alpha, &beta)?;
    if cts_hom.class < CtsHomClass::Homeomorphism {
        return Err(Error::Internal(format!(
            "preimage maps reached only {:?}",
            cts_hom.class
        )));
    }
    let induced = induced_dba_iso(&kpr_dst.cts, &kpr_src.cts, &cts_hom)?;

    let rep_src = rep_map_oo(src, cap)?;
    let rep_dst = rep_map_oo(dst, cap)?;
    // induced.source is the protoconcept algebra of kpr_src, built the same
    // deterministic way as rep_src.proto, so indices line up
    let square_commutes = (0..src.len()).all(|x| {
        induced.hom.map[rep_src.map[x]] == rep_dst.map[iso.map[x]]
    });

    Ok(FunctorF {
        kpr_src,
        kpr_dst,
        alpha,
        beta,
        cts_hom,
        induced,
        square_commutes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::concept::{build_proto_dba, build_semi_dba, DEFAULT_CANDIDATE_CAP};
    use crate::dba::{enumerate_automorphisms, extend_pure_iso, from_boolean, BooleanTables};
    use crate::samples;

    const CAP: u64 = DEFAULT_CANDIDATE_CAP;

    #[test]
    fn kpr_of_square_boolean() {
        let d = from_boolean(&BooleanTables::power_set(2)).unwrap();
        let kpr = build_kpr_cts(&d, CAP).unwrap();
        let ctx = kpr.cts.context();
        assert_eq!(ctx.object_count(), 2);
        assert_eq!(ctx.attribute_count(), 2);
        // disjointness relation is the anti-diagonal
        assert_eq!(
            ctx.incidence_matrix(),
            vec![vec![false, true], vec![true, false]]
        );
        assert!(kpr.cts.object_topology().is_discrete());
        // for Boolean input the relation is a bijection between the sides
        for g in 0..2 {
            assert_eq!(ctx.row(g).len(), 1);
            assert_eq!(ctx.col(g).len(), 1);
        }
    }

    #[test]
    fn kpr_of_two_element_boolean() {
        let d = from_boolean(&BooleanTables::power_set(1)).unwrap();
        let kpr = build_kpr_cts(&d, CAP).unwrap();
        let ctx = kpr.cts.context();
        assert_eq!((ctx.object_count(), ctx.attribute_count()), (1, 1));
        assert_eq!(ctx.incidence_matrix(), vec![vec![true]]);
    }

    #[test]
    fn kpr_of_questionnaire_semi_algebra() {
        let ctx = samples::questionnaire_context();
        let semi = build_semi_dba(&ctx, CAP).unwrap();
        let kpr = build_kpr_cts(&semi.dba, CAP).unwrap();
        let k = kpr.cts.context();
        assert_eq!((k.object_count(), k.attribute_count()), (6, 11));
        assert!(kpr.cts.is_stone_context());
        assert!(kpr.cts.object_topology().is_discrete());
        assert!(kpr.cts.attribute_topology().is_discrete());

        // the disjointness context recovers the original incidence up to the
        // canonical filter/ideal ordering: object g corresponds to the filter
        // generated by the meet idempotent with extent G \ {g}, attribute m
        // to the ideal generated by the join idempotent with intent {m}
        let mut alpha = vec![usize::MAX; 6];
        for (j, &atom) in kpr.spectrum.filter_atoms().iter().enumerate() {
            let missing = semi.pairs[atom].0.complement();
            assert_eq!(missing.len(), 1);
            alpha[missing.iter().next().unwrap()] = j;
        }
        let mut beta = vec![usize::MAX; 11];
        for (j, &coatom) in kpr.spectrum.ideal_coatoms().iter().enumerate() {
            let single = &semi.pairs[coatom].1;
            assert_eq!(single.len(), 1);
            beta[single.iter().next().unwrap()] = j;
        }
        assert_eq!(
            crate::context::check_context_morphism(&ctx, k, &alpha, &beta).unwrap(),
            crate::context::MorphismClass::Isomorphism
        );
    }

    #[test]
    fn ladder_on_proto_and_semi_algebras() {
        let ctx = samples::small_context(3, 3, 6);
        let proto = build_proto_dba(&ctx, CAP).unwrap();
        let report = rep_map_oo(&proto.dba, CAP).unwrap();
        assert!(report.ladder_consistent);
        assert!(report.classification.fully_contextual);
        assert!(report.hom.is_isomorphism());

        let semi = build_semi_dba(&ctx, CAP).unwrap();
        let report = rep_map_oo(&semi.dba, CAP).unwrap();
        assert!(report.ladder_consistent);
        assert!(report.classification.pure);
        assert!(!report.classification.fully_contextual || report.hom.surjective);
        let semi_iso = report.semi_iso.as_ref().unwrap();
        assert!(semi_iso.is_isomorphism());
    }

    #[test]
    fn ladder_on_boolean() {
        for atoms in 1..=3 {
            let d = from_boolean(&BooleanTables::power_set(atoms)).unwrap();
            let report = rep_map_oo(&d, CAP).unwrap();
            assert!(report.ladder_consistent);
            assert!(report.hom.is_isomorphism());
            assert!(report.semi_iso.as_ref().unwrap().is_isomorphism());
            // clopen protoconcepts and semiconcepts coincide on Boolean input
            assert_eq!(report.proto.pairs, report.semi.pairs);
            assert!(crate::dba::to_boolean(&report.proto.dba).is_some());
        }
    }

    #[test]
    fn wille_rep_examples() {
        let two = from_boolean(&BooleanTables::power_set(1)).unwrap();
        let rep = rep_map_wille(&two).unwrap();
        assert!(rep.homomorphism && rep.quasi_injective && rep.all_protoconcepts);
        assert!(rep.transport_consistent);
        // h(top) = (all primary filters, no primary ideal)
        let top_image = &rep.images[two.top()];
        assert!(top_image.extent.is_full());
        assert!(top_image.intent.is_empty());

        let d = from_boolean(&BooleanTables::power_set(2)).unwrap();
        let rep = rep_map_wille(&d).unwrap();
        assert!(rep.homomorphism && rep.quasi_injective && rep.injective);

        let ctx = samples::small_context(3, 3, 55);
        let semi = build_semi_dba(&ctx, CAP).unwrap();
        let rep = rep_map_wille(&semi.dba).unwrap();
        assert!(rep.homomorphism && rep.quasi_injective && rep.transport_consistent);
    }

    #[test]
    fn atom_rep_examples() {
        let d = from_boolean(&BooleanTables::power_set(2)).unwrap();
        let rep = finite_rep_atoms(&d).unwrap();
        assert_eq!(rep.context_ac.object_count(), 2);
        assert_eq!(rep.context_ac.attribute_count(), 2);
        assert!(rep.homomorphism && rep.quasi_injective);
        assert!(rep.complement_homomorphism && rep.complement_quasi_injective);
        assert!(rep.matches_standard_complement && rep.matches_oo_rep);

        let two = from_boolean(&BooleanTables::power_set(1)).unwrap();
        let rep = finite_rep_atoms(&two).unwrap();
        assert_eq!(rep.context_ac.object_count(), 1);
        assert_eq!(rep.context_ac.attribute_count(), 1);

        let ctx = samples::small_context(3, 3, 9);
        for alg in [build_semi_dba(&ctx, CAP).unwrap(), build_proto_dba(&ctx, CAP).unwrap()] {
            let rep = finite_rep_atoms(&alg.dba).unwrap();
            assert!(rep.homomorphism && rep.quasi_injective);
            assert!(rep.matches_standard_complement && rep.matches_oo_rep);
        }
    }

    #[test]
    fn characterization_holds_on_generated_instances() {
        let ctx = samples::small_context(3, 3, 33);
        let semi = build_semi_dba(&ctx, CAP).unwrap();
        assert!(characterize_pure_part(&semi.dba, CAP).unwrap().holds);
        let proto = build_proto_dba(&ctx, CAP).unwrap();
        assert!(characterize_pure_part(&proto.dba, CAP).unwrap().holds);
        let b = from_boolean(&BooleanTables::power_set(2)).unwrap();
        assert!(characterize_pure_part(&b, CAP).unwrap().holds);
    }

    #[test]
    fn k_maps_round_trip_tiny() {
        let ctx = FormalContext::new(vec!["g".into()], vec!["m".into()], &[vec![true]]).unwrap();
        let stone = Cts::discrete(ctx);
        let km = k_maps(&stone, CAP).unwrap();
        assert_eq!(km.cts_hom.class, CtsHomClass::Homeomorphism);
        assert!(km.induced.hom.is_isomorphism());
    }

    #[test]
    fn k_maps_round_trip_five_object() {
        let stone = Cts::discrete(samples::five_object_context());
        let km = k_maps(&stone, CAP).unwrap();
        assert_eq!(km.cts_hom.class, CtsHomClass::Homeomorphism);
        assert!(km.induced.hom.is_isomorphism());
        assert!(km.induced.semi_hom.is_isomorphism());
    }

    #[test]
    fn k_maps_rejects_non_stone() {
        let cts = samples::semicontinuity_counterexample();
        assert!(matches!(k_maps(&cts, CAP), Err(Error::NotStone(_))));
    }

    #[test]
    fn k_maps_of_spectrum_cts() {
        // the spectrum CTS of a generated algebra is itself a Stone context
        let ctx = samples::small_context(2, 2, 70);
        let semi = build_semi_dba(&ctx, CAP).unwrap();
        let kpr = build_kpr_cts(&semi.dba, CAP).unwrap();
        let km = k_maps(&kpr.cts, CAP).unwrap();
        assert!(km.induced.hom.is_isomorphism());
    }

    #[test]
    fn functor_g_identity_and_composition() {
        let ctx = samples::small_context(2, 2, 12);
        let proto = build_proto_dba(&ctx, CAP).unwrap();
        let d = &proto.dba;
        let id: Vec<usize> = (0..d.len()).collect();
        let id_hom = check_hom(d, d, &id).unwrap();
        let g = functor_g(d, d, &id_hom).unwrap();
        assert_eq!(g.restriction.map, (0..g.pure_src.dba.len()).collect::<Vec<_>>());

        // composition law on automorphism pairs
        let autos = enumerate_automorphisms(d, 64).unwrap_or_else(|_| vec![id.clone()]);
        for f in &autos {
            for h in &autos {
                let fh: Vec<usize> = (0..d.len()).map(|x| h[f[x]]).collect();
                let g_f = functor_g(d, d, &check_hom(d, d, f).unwrap()).unwrap();
                let g_h = functor_g(d, d, &check_hom(d, d, h).unwrap()).unwrap();
                let g_fh = functor_g(d, d, &check_hom(d, d, &fh).unwrap()).unwrap();
                let composed: Vec<usize> = (0..g_f.pure_src.dba.len())
                    .map(|i| g_h.restriction.map[g_f.restriction.map[i]])
                    .collect();
                assert_eq!(g_fh.restriction.map, composed);
            }
        }
    }

    #[test]
    fn functor_g_extension_round_trip() {
        // extending a pure-part iso and then restricting recovers it
        let ctx = samples::small_context(2, 2, 44);
        let proto = build_proto_dba(&ctx, CAP).unwrap();
        let d = &proto.dba;
        let pp = pure_part(d).unwrap();
        let id: Vec<usize> = (0..pp.dba.len()).collect();
        let f = extend_pure_iso(d, d, &id).unwrap();
        let g = functor_g(d, d, &f).unwrap();
        assert_eq!(g.restriction.map, id);
    }

    #[test]
    fn functor_f_identity_square() {
        let ctx = samples::small_context(2, 2, 3);
        let semi = build_semi_dba(&ctx, CAP).unwrap();
        let d = &semi.dba;
        let id: Vec<usize> = (0..d.len()).collect();
        let f = functor_f(d, d, &check_hom(d, d, &id).unwrap(), CAP).unwrap();
        assert!(f.square_commutes);
        assert_eq!(f.alpha, (0..f.alpha.len()).collect::<Vec<_>>());
        assert_eq!(f.beta, (0..f.beta.len()).collect::<Vec<_>>());
    }

    #[test]
    fn functor_f_requires_pure() {
        let ctx = samples::questionnaire_context();
        let objs = ctx.object_set(&["q1", "q2"]).unwrap();
        let attrs = ctx.attribute_set(&["s3", "s5"]).unwrap();
        let small = ctx.subcontext(&objs, &attrs).unwrap();
        let proto = build_proto_dba(&small, CAP).unwrap();
        let d = &proto.dba;
        if !classify_dba(d).pure {
            let id: Vec<usize> = (0..d.len()).collect();
            assert!(matches!(
                functor_f(d, d, &check_hom(d, d, &id).unwrap(), CAP),
                Err(Error::NotPure)
            ));
        }
    }
}
