//! Filters and ideals of a finite dBa, primary filters and ideals, their
//! loci, and the standard context they span.
//!
//! On a finite carrier the primary filters are exactly the up-sets of the
//! atoms of the meet reduct, and the primary ideals the down-sets of the
//! coatoms of the join reduct. Enumeration goes through that route and every
//! candidate is re-verified against the definitional predicate; an
//! exhaustive subset scan is kept alongside as the reference route for tiny
//! carriers.

use crate::context::FormalContext;
use crate::dba::{boolean_reducts, DbaHom, FiniteDba};
use crate::error::{Error, Result};
use crate::set::BitSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SubsetKind {
    Filter,
    Ideal,
}

/// A subset of one dBa carrier tagged as filter or ideal. Bound to the
/// carrier size through its bit width; using it against another dBa is a
/// width error.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CarrierSubset {
    pub kind: SubsetKind,
    pub members: BitSet,
}

/// Validity flags of a carrier subset.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SubsetFlags {
    pub valid: bool,
    pub proper: bool,
    pub primary: bool,
}

impl CarrierSubset {
    pub fn filter(members: BitSet) -> Self {
        CarrierSubset {
            kind: SubsetKind::Filter,
            members,
        }
    }

    pub fn ideal(members: BitSet) -> Self {
        CarrierSubset {
            kind: SubsetKind::Ideal,
            members,
        }
    }

    pub fn analyze(&self, dba: &FiniteDba) -> Result<SubsetFlags> {
        let valid = match self.kind {
            SubsetKind::Filter => is_filter(dba, &self.members)?,
            SubsetKind::Ideal => is_ideal(dba, &self.members)?,
        };
        let proper = valid && self.members.len() < dba.len();
        let primary = proper
            && (0..dba.len()).all(|x| match self.kind {
                SubsetKind::Filter => self.members.contains(x) || self.members.contains(dba.neg(x)),
                SubsetKind::Ideal => self.members.contains(x) || self.members.contains(dba.opp(x)),
            });
        Ok(SubsetFlags {
            valid,
            proper,
            primary,
        })
    }
}

fn check_width(dba: &FiniteDba, s: &BitSet) -> Result<()> {
    if s.width() != dba.len() {
        return Err(Error::WidthMismatch {
            expected: dba.len(),
            got: s.width(),
        });
    }
    Ok(())
}

/// Literal filter predicate: closed under meet, upward closed under the
/// quasi-order.
pub fn is_filter(dba: &FiniteDba, s: &BitSet) -> Result<bool> {
    check_width(dba, s)?;
    for x in s.iter() {
        if !dba.order().up_set(x).is_subset(s) {
            return Ok(false);
        }
        for y in s.iter() {
            if !s.contains(dba.meet(x, y)) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Literal ideal predicate: closed under join, downward closed.
pub fn is_ideal(dba: &FiniteDba, s: &BitSet) -> Result<bool> {
    check_width(dba, s)?;
    for x in s.iter() {
        if !dba.order().down_set(x).is_subset(s) {
            return Ok(false);
        }
        for y in s.iter() {
            if !s.contains(dba.join(x, y)) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Smallest filter containing a non-empty generator set: the up-set of the
/// meet closure of the generators.
pub fn generate_filter(dba: &FiniteDba, generators: &BitSet) -> Result<CarrierSubset> {
    check_width(dba, generators)?;
    if generators.is_empty() {
        return Err(Error::EmptyGenerator);
    }
    let meets = binary_closure(dba.len(), generators, |x, y| dba.meet(x, y));
    let mut members = BitSet::empty(dba.len());
    for m in meets.iter() {
        members = members.union(dba.order().up_set(m));
    }
    Ok(CarrierSubset::filter(members))
}

/// Smallest ideal containing a non-empty generator set.
pub fn generate_ideal(dba: &FiniteDba, generators: &BitSet) -> Result<CarrierSubset> {
    check_width(dba, generators)?;
    if generators.is_empty() {
        return Err(Error::EmptyGenerator);
    }
    let joins = binary_closure(dba.len(), generators, |x, y| dba.join(x, y));
    let mut members = BitSet::empty(dba.len());
    for m in joins.iter() {
        members = members.union(&dba.order().down_set(m));
    }
    Ok(CarrierSubset::ideal(members))
}

fn binary_closure(n: usize, start: &BitSet, op: impl Fn(usize, usize) -> usize) -> BitSet {
    let mut closed = start.clone();
    loop {
        let mut next = closed.clone();
        for x in closed.iter() {
            for y in closed.iter() {
                next.insert(op(x, y));
            }
        }
        if next == closed {
            return closed;
        }
        closed = next;
        debug_assert!(closed.len() <= n);
    }
}

/// Primary filters in canonical order (by the index of the generating atom
/// of the meet reduct). Each candidate is re-verified definitionally.
pub fn enumerate_primary_filters(dba: &FiniteDba) -> Result<Vec<CarrierSubset>> {
    let (meet_side, _) = boolean_reducts(dba)?;
    meet_side
        .atoms
        .iter()
        .map(|&a| {
            let f = CarrierSubset::filter(dba.order().up_set(a).clone());
            let flags = f.analyze(dba)?;
            if !flags.primary {
                return Err(Error::Internal(format!(
                    "up-set of atom {a} failed the primary-filter predicate"
                )));
            }
            Ok(f)
        })
        .collect()
}

/// Primary ideals in canonical order (by generating coatom index of the
/// join reduct).
pub fn enumerate_primary_ideals(dba: &FiniteDba) -> Result<Vec<CarrierSubset>> {
    let (_, join_side) = boolean_reducts(dba)?;
    join_side
        .coatoms
        .iter()
        .map(|&b| {
            let i = CarrierSubset::ideal(dba.order().down_set(b));
            let flags = i.analyze(dba)?;
            if !flags.primary {
                return Err(Error::Internal(format!(
                    "down-set of coatom {b} failed the primary-ideal predicate"
                )));
            }
            Ok(i)
        })
        .collect()
}

const SCAN_CAP: usize = 16;

/// Reference route: scans all subsets for the primary-filter predicate.
/// Only for carriers of at most 16 elements.
pub fn enumerate_primary_filters_by_scan(dba: &FiniteDba) -> Result<Vec<BitSet>> {
    scan_primary(dba, SubsetKind::Filter)
}

/// Reference route for primary ideals.
pub fn enumerate_primary_ideals_by_scan(dba: &FiniteDba) -> Result<Vec<BitSet>> {
    scan_primary(dba, SubsetKind::Ideal)
}

fn scan_primary(dba: &FiniteDba, kind: SubsetKind) -> Result<Vec<BitSet>> {
    let n = dba.len();
    if n > SCAN_CAP {
        return Err(Error::CarrierCapExceeded {
            carrier: n,
            cap: SCAN_CAP,
        });
    }
    let mut out = Vec::new();
    for mask in 0u64..1 << n {
        let members = BitSet::from_mask(n, mask);
        let subset = CarrierSubset { kind, members };
        if subset.analyze(dba)?.primary {
            out.push(subset.members);
        }
    }
    Ok(out)
}

/// Finds a primary filter containing `f` and a primary ideal containing `i`
/// that stay disjoint. Existence is a theorem for disjoint inputs; absence
/// signals an implementation bug and is reported as an internal error.
pub fn separate_filter_ideal(
    dba: &FiniteDba,
    f: &CarrierSubset,
    i: &CarrierSubset,
) -> Result<(CarrierSubset, CarrierSubset)> {
    if f.kind != SubsetKind::Filter || !f.analyze(dba)?.valid {
        return Err(Error::InvalidSubset("filter"));
    }
    if i.kind != SubsetKind::Ideal || !i.analyze(dba)?.valid {
        return Err(Error::InvalidSubset("ideal"));
    }
    if f.members.intersects(&i.members) {
        return Err(Error::NotDisjoint);
    }
    let filters = enumerate_primary_filters(dba)?;
    let ideals = enumerate_primary_ideals(dba)?;
    for g in &filters {
        if !f.members.is_subset(&g.members) {
            continue;
        }
        for j in &ideals {
            if i.members.is_subset(&j.members) && !g.members.intersects(&j.members) {
                return Ok((g.clone(), j.clone()));
            }
        }
    }
    Err(Error::Internal(
        "no disjoint primary witness pair found for a disjoint filter/ideal pair".into(),
    ))
}

/// Extends a proper filter (ideal) to a primary one of the same kind.
pub fn extend_to_primary(dba: &FiniteDba, s: &CarrierSubset) -> Result<CarrierSubset> {
    let flags = s.analyze(dba)?;
    if !flags.valid {
        return Err(Error::InvalidSubset(match s.kind {
            SubsetKind::Filter => "filter",
            SubsetKind::Ideal => "ideal",
        }));
    }
    if !flags.proper {
        return Err(Error::NotProper);
    }
    let candidates = match s.kind {
        SubsetKind::Filter => enumerate_primary_filters(dba)?,
        SubsetKind::Ideal => enumerate_primary_ideals(dba)?,
    };
    candidates
        .into_iter()
        .find(|c| s.members.is_subset(&c.members))
        .ok_or_else(|| Error::Internal("no primary superset found for a proper subset".into()))
}

/// The primary filters and ideals of a dBa with the locus of every element:
/// `filter_locus(x)` is the set of primary filters containing `x`, as a bit
/// set over the canonical filter indices.
#[derive(Clone, Debug)]
pub struct PrimarySpectrum {
    pub filters: Vec<CarrierSubset>,
    pub ideals: Vec<CarrierSubset>,
    filter_loci: Vec<BitSet>,
    ideal_loci: Vec<BitSet>,
    filter_atoms: Vec<usize>,
    ideal_coatoms: Vec<usize>,
}

impl PrimarySpectrum {
    pub fn filter_locus(&self, x: usize) -> &BitSet {
        &self.filter_loci[x]
    }

    pub fn ideal_locus(&self, x: usize) -> &BitSet {
        &self.ideal_loci[x]
    }

    /// Atom generating each primary filter, in filter order.
    pub fn filter_atoms(&self) -> &[usize] {
        &self.filter_atoms
    }

    /// Coatom generating each primary ideal, in ideal order.
    pub fn ideal_coatoms(&self) -> &[usize] {
        &self.ideal_coatoms
    }
}

pub fn primary_spectrum(dba: &FiniteDba) -> Result<PrimarySpectrum> {
    let (meet_side, join_side) = boolean_reducts(dba)?;
    let filters = enumerate_primary_filters(dba)?;
    let ideals = enumerate_primary_ideals(dba)?;
    let filter_loci = (0..dba.len())
        .map(|x| {
            BitSet::from_indices(
                filters.len(),
                filters
                    .iter()
                    .enumerate()
                    .filter(|(_, f)| f.members.contains(x))
                    .map(|(j, _)| j),
            )
        })
        .collect();
    let ideal_loci = (0..dba.len())
        .map(|x| {
            BitSet::from_indices(
                ideals.len(),
                ideals
                    .iter()
                    .enumerate()
                    .filter(|(_, i)| i.members.contains(x))
                    .map(|(j, _)| j),
            )
        })
        .collect();
    Ok(PrimarySpectrum {
        filters,
        ideals,
        filter_loci,
        ideal_loci,
        filter_atoms: meet_side.atoms,
        ideal_coatoms: join_side.coatoms,
    })
}

/// The standard context: primary filters against primary ideals, related
/// when they intersect.
pub fn standard_context(dba: &FiniteDba) -> Result<FormalContext> {
    standard(dba, &primary_spectrum(dba)?, false)
}

/// The complement of the standard context: related when disjoint.
pub fn standard_complement(dba: &FiniteDba) -> Result<FormalContext> {
    standard(dba, &primary_spectrum(dba)?, true)
}

pub(crate) fn standard(
    dba: &FiniteDba,
    spectrum: &PrimarySpectrum,
    complement: bool,
) -> Result<FormalContext> {
    let objects: Vec<String> = spectrum
        .filter_atoms
        .iter()
        .map(|&a| format!("F@{}", dba.label(a)))
        .collect();
    let attributes: Vec<String> = spectrum
        .ideal_coatoms
        .iter()
        .map(|&b| format!("I@{}", dba.label(b)))
        .collect();
    let incidence: Vec<Vec<bool>> = spectrum
        .filters
        .iter()
        .map(|f| {
            spectrum
                .ideals
                .iter()
                .map(|i| f.members.intersects(&i.members) != complement)
                .collect()
        })
        .collect();
    FormalContext::new(objects, attributes, &incidence)
}

/// Preimage maps on primary filters and ideals along a homomorphism
/// `h : src -> dst`: each primary filter `F` of `dst` pulls back to the
/// primary filter `h^{-1}(F)` of `src` (dually for ideals). Returned as
/// index maps against the canonical enumerations, with the locus identity
/// `preimage(F_x) = F_{h(x)}` verified.
pub fn hom_preimage_maps(
    src: &FiniteDba,
    dst: &FiniteDba,
    hom: &DbaHom,
) -> Result<(Vec<usize>, Vec<usize>)> {
    if !hom.homomorphism {
        return Err(Error::NotHomomorphism(
            hom.failure.clone().unwrap_or_else(|| "flag not set".into()),
        ));
    }
    let src_spectrum = primary_spectrum(src)?;
    let dst_spectrum = primary_spectrum(dst)?;
    let pull = |members: &BitSet| -> BitSet {
        BitSet::from_indices(
            src.len(),
            (0..src.len()).filter(|&x| members.contains(hom.map[x])),
        )
    };
    let mut alpha = Vec::with_capacity(dst_spectrum.filters.len());
    for f in &dst_spectrum.filters {
        let pre = CarrierSubset::filter(pull(&f.members));
        if !pre.analyze(src)?.primary {
            return Err(Error::Internal(
                "preimage of a primary filter is not primary".into(),
            ));
        }
        let idx = src_spectrum
            .filters
            .iter()
            .position(|g| g.members == pre.members)
            .ok_or_else(|| Error::Internal("preimage filter missing from the enumeration".into()))?;
        alpha.push(idx);
    }
    let mut beta = Vec::with_capacity(dst_spectrum.ideals.len());
    for i in &dst_spectrum.ideals {
        let pre = CarrierSubset::ideal(pull(&i.members));
        if !pre.analyze(src)?.primary {
            return Err(Error::Internal(
                "preimage of a primary ideal is not primary".into(),
            ));
        }
        let idx = src_spectrum
            .ideals
            .iter()
            .position(|g| g.members == pre.members)
            .ok_or_else(|| Error::Internal("preimage ideal missing from the enumeration".into()))?;
        beta.push(idx);
    }
    // locus identity: alpha^{-1}(F_x) = F_{h(x)} and dually
    for x in 0..src.len() {
        let lhs = BitSet::from_indices(
            dst_spectrum.filters.len(),
            (0..dst_spectrum.filters.len())
                .filter(|&j| src_spectrum.filter_locus(x).contains(alpha[j])),
        );
        if lhs != *dst_spectrum.filter_locus(hom.map[x]) {
            return Err(Error::Internal(format!(
                "filter locus identity fails at element {x}"
            )));
        }
        let lhs = BitSet::from_indices(
            dst_spectrum.ideals.len(),
            (0..dst_spectrum.ideals.len())
                .filter(|&j| src_spectrum.ideal_locus(x).contains(beta[j])),
        );
        if lhs != *dst_spectrum.ideal_locus(hom.map[x]) {
            return Err(Error::Internal(format!(
                "ideal locus identity fails at element {x}"
            )));
        }
    }
    Ok((alpha, beta))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::concept::{build_proto_dba, build_semi_dba, DEFAULT_CANDIDATE_CAP};
    use crate::dba::{check_hom, from_boolean, BooleanTables};
    use crate::samples;

    fn square() -> FiniteDba {
        from_boolean(&BooleanTables::power_set(2)).unwrap()
    }

    #[test]
    fn filter_predicate_examples() {
        let d = square();
        // the whole carrier is a filter, just not proper
        let all = CarrierSubset::filter(BitSet::full(4));
        let flags = all.analyze(&d).unwrap();
        assert!(flags.valid && !flags.proper);

        // {top} is a filter in a Boolean algebra
        let top_only = CarrierSubset::filter(BitSet::singleton(4, d.top()));
        assert!(top_only.analyze(&d).unwrap().valid);

        // {bot, top} is not upward closed
        let both = BitSet::from_indices(4, [d.bot(), d.top()]);
        assert!(!is_filter(&d, &both).unwrap());

        assert!(is_filter(&d, &BitSet::empty(3)).is_err());
    }

    #[test]
    fn generated_filters() {
        let d = square();
        // atoms of 2^2 sit at indices 1 and 2
        let f = generate_filter(&d, &BitSet::singleton(4, 1)).unwrap();
        assert_eq!(f.members, BitSet::from_indices(4, [1, 3]));
        let f = generate_filter(&d, &BitSet::singleton(4, d.top())).unwrap();
        assert_eq!(f.members, BitSet::singleton(4, d.top()));
        let f = generate_filter(&d, &BitSet::full(4)).unwrap();
        assert!(f.members.is_full());
        assert!(generate_filter(&d, &BitSet::empty(4)).is_err());

        let i = generate_ideal(&d, &BitSet::singleton(4, 1)).unwrap();
        assert_eq!(i.members, BitSet::from_indices(4, [0, 1]));
    }

    #[test]
    fn primary_enumeration_boolean() {
        let d = square();
        let filters = enumerate_primary_filters(&d).unwrap();
        assert_eq!(filters.len(), 2);
        assert_eq!(filters[0].members, BitSet::from_indices(4, [1, 3]));
        assert_eq!(filters[1].members, BitSet::from_indices(4, [2, 3]));
        let ideals = enumerate_primary_ideals(&d).unwrap();
        assert_eq!(ideals.len(), 2);

        let two = from_boolean(&BooleanTables::power_set(1)).unwrap();
        let filters = enumerate_primary_filters(&two).unwrap();
        assert_eq!(filters.len(), 1);
        assert_eq!(filters[0].members, BitSet::singleton(2, two.top()));
        let ideals = enumerate_primary_ideals(&two).unwrap();
        assert_eq!(ideals[0].members, BitSet::singleton(2, two.bot()));
    }

    #[test]
    fn atom_route_agrees_with_scan() {
        for seed in [3u64, 19] {
            let ctx = samples::small_context(2, 2, seed);
            let alg = build_proto_dba(&ctx, DEFAULT_CANDIDATE_CAP).unwrap();
            if alg.dba.len() > 16 {
                continue;
            }
            let by_atoms: Vec<BitSet> = enumerate_primary_filters(&alg.dba)
                .unwrap()
                .into_iter()
                .map(|f| f.members)
                .collect();
            let mut by_scan = enumerate_primary_filters_by_scan(&alg.dba).unwrap();
            by_scan.sort();
            let mut sorted = by_atoms.clone();
            sorted.sort();
            assert_eq!(sorted, by_scan);

            let by_atoms: Vec<BitSet> = enumerate_primary_ideals(&alg.dba)
                .unwrap()
                .into_iter()
                .map(|f| f.members)
                .collect();
            let mut by_scan = enumerate_primary_ideals_by_scan(&alg.dba).unwrap();
            by_scan.sort();
            let mut sorted = by_atoms;
            sorted.sort();
            assert_eq!(sorted, by_scan);
        }
        let d = square();
        assert_eq!(
            enumerate_primary_filters_by_scan(&d).unwrap().len(),
            2
        );
    }

    #[test]
    fn questionnaire_primary_counts() {
        let ctx = samples::questionnaire_context();
        let proto = build_proto_dba(&ctx, DEFAULT_CANDIDATE_CAP).unwrap();
        let filters = enumerate_primary_filters(&proto.dba).unwrap();
        let ideals = enumerate_primary_ideals(&proto.dba).unwrap();
        assert_eq!(filters.len(), 6);
        assert_eq!(ideals.len(), 11);
    }

    #[test]
    fn separation_and_extension() {
        let d = square();
        let f = CarrierSubset::filter(BitSet::singleton(4, d.top()));
        let i = CarrierSubset::ideal(BitSet::singleton(4, d.bot()));
        let (g, j) = separate_filter_ideal(&d, &f, &i).unwrap();
        assert!(f.members.is_subset(&g.members));
        assert!(i.members.is_subset(&j.members));
        assert!(!g.members.intersects(&j.members));
        assert!(g.analyze(&d).unwrap().primary);
        assert!(j.analyze(&d).unwrap().primary);

        // primary inputs witness themselves
        let (g2, j2) = separate_filter_ideal(&d, &g, &j).unwrap();
        assert!(g.members.is_subset(&g2.members) && j.members.is_subset(&j2.members));

        let overlapping = CarrierSubset::ideal(BitSet::full(4));
        assert!(matches!(
            separate_filter_ideal(&d, &f, &overlapping),
            Err(Error::NotDisjoint)
        ));

        let p = extend_to_primary(&d, &f).unwrap();
        assert!(p.analyze(&d).unwrap().primary);
        let already = extend_to_primary(&d, &p).unwrap();
        assert_eq!(already.members, p.members);
        let improper = CarrierSubset::filter(BitSet::full(4));
        assert!(matches!(extend_to_primary(&d, &improper), Err(Error::NotProper)));
    }

    #[test]
    fn separation_in_the_questionnaire_algebra() {
        let ctx = samples::questionnaire_context();
        let d = build_semi_dba(&ctx, DEFAULT_CANDIDATE_CAP).unwrap().dba;
        // principal filter and ideal of two elements picked to be disjoint
        let f = generate_filter(&d, &BitSet::singleton(d.len(), d.neg(d.bot()))).unwrap();
        let i = generate_ideal(&d, &BitSet::singleton(d.len(), d.opp(d.top()))).unwrap();
        assert!(!f.members.intersects(&i.members));
        let (g, j) = separate_filter_ideal(&d, &f, &i).unwrap();
        assert!(f.members.is_subset(&g.members));
        assert!(i.members.is_subset(&j.members));
        assert!(!g.members.intersects(&j.members));
    }

    #[test]
    fn quasi_isomorphisms_push_primaries_forward() {
        // direct images of primary filters and ideals along an isomorphism
        // stay primary
        let ctx = samples::small_context(3, 3, 47);
        let proto = build_proto_dba(&ctx, DEFAULT_CANDIDATE_CAP).unwrap();
        let d = &proto.dba;
        let pp = crate::dba::pure_part(d).unwrap();
        let id: Vec<usize> = (0..pp.dba.len()).collect();
        let iso = crate::dba::extend_pure_iso(d, d, &id).unwrap();
        for f in enumerate_primary_filters(d).unwrap() {
            let image = BitSet::from_indices(d.len(), f.members.iter().map(|x| iso.map[x]));
            assert!(CarrierSubset::filter(image).analyze(d).unwrap().primary);
        }
        for i in enumerate_primary_ideals(d).unwrap() {
            let image = BitSet::from_indices(d.len(), i.members.iter().map(|x| iso.map[x]));
            assert!(CarrierSubset::ideal(image).analyze(d).unwrap().primary);
        }
    }

    #[test]
    fn loci() {
        let d = square();
        let spectrum = primary_spectrum(&d).unwrap();
        // top lies in every primary filter, bottom in none
        assert!(spectrum.filter_locus(d.top()).is_full());
        assert!(spectrum.filter_locus(d.bot()).is_empty());
        // an atom lies exactly in its own up-set filter
        assert_eq!(spectrum.filter_locus(1), &BitSet::singleton(2, 0));
        assert!(spectrum.ideal_locus(d.bot()).is_full());
        assert!(spectrum.ideal_locus(d.top()).is_empty());
    }

    #[test]
    fn standard_contexts() {
        let d = square();
        let delta = standard_context(&d).unwrap();
        assert_eq!(delta.object_count(), 2);
        assert_eq!(delta.attribute_count(), 2);
        // filters and ideals generated by the same atom intersect
        assert_eq!(delta.incidence_matrix(), vec![vec![true, false], vec![false, true]]);
        let nabla = standard_complement(&d).unwrap();
        assert_eq!(nabla.incidence_matrix(), vec![vec![false, true], vec![true, false]]);

        let two = from_boolean(&BooleanTables::power_set(1)).unwrap();
        let delta = standard_context(&two).unwrap();
        assert_eq!(delta.incidence_matrix(), vec![vec![false]]);
        let nabla = standard_complement(&two).unwrap();
        assert_eq!(nabla.incidence_matrix(), vec![vec![true]]);

        let ctx = samples::questionnaire_context();
        let proto = build_proto_dba(&ctx, DEFAULT_CANDIDATE_CAP).unwrap();
        let delta = standard_context(&proto.dba).unwrap();
        assert_eq!(delta.object_count(), 6);
        assert_eq!(delta.attribute_count(), 11);
    }

    #[test]
    fn locus_identities() {
        // locus identities, checked exhaustively on a small algebra
        let ctx = samples::small_context(3, 3, 29);
        let d = build_semi_dba(&ctx, DEFAULT_CANDIDATE_CAP).unwrap().dba;
        let spectrum = primary_spectrum(&d).unwrap();
        for x in 0..d.len() {
            let fx = spectrum.filter_locus(x);
            let ix = spectrum.ideal_locus(x);
            assert_eq!(&fx.complement(), spectrum.filter_locus(d.neg(x)));
            assert_eq!(&ix.complement(), spectrum.ideal_locus(d.opp(x)));
            assert_eq!(fx, spectrum.filter_locus(d.meet_sq(x)));
            assert_eq!(ix, spectrum.ideal_locus(d.join_sq(x)));
            for y in 0..d.len() {
                assert_eq!(
                    &fx.intersection(spectrum.filter_locus(y)),
                    spectrum.filter_locus(d.meet(x, y))
                );
                assert_eq!(
                    &ix.intersection(spectrum.ideal_locus(y)),
                    spectrum.ideal_locus(d.join(x, y))
                );
            }
        }
    }

    #[test]
    fn preimage_maps_along_inclusion() {
        let ctx = samples::small_context(3, 3, 41);
        let semi = build_semi_dba(&ctx, DEFAULT_CANDIDATE_CAP).unwrap();
        let proto = build_proto_dba(&ctx, DEFAULT_CANDIDATE_CAP).unwrap();
        let map: Vec<usize> = semi
            .pairs
            .iter()
            .map(|p| proto.index_of(&p.0, &p.1).unwrap())
            .collect();
        let hom = check_hom(&semi.dba, &proto.dba, &map).unwrap();
        assert!(hom.homomorphism);
        let (alpha, beta) = hom_preimage_maps(&semi.dba, &proto.dba, &hom).unwrap();
        assert_eq!(alpha.len(), primary_spectrum(&proto.dba).unwrap().filters.len());
        assert_eq!(beta.len(), primary_spectrum(&proto.dba).unwrap().ideals.len());

        // identity: preimages along the identity are the identity
        let id: Vec<usize> = (0..semi.dba.len()).collect();
        let hom = check_hom(&semi.dba, &semi.dba, &id).unwrap();
        let (alpha, beta) = hom_preimage_maps(&semi.dba, &semi.dba, &hom).unwrap();
        assert_eq!(alpha, (0..alpha.len()).collect::<Vec<_>>());
        assert_eq!(beta, (0..beta.len()).collect::<Vec<_>>());
    }
}
