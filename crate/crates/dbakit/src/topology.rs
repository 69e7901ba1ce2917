//! Finite topologies as explicit open-set families, contexts on topological
//! spaces, relation continuity, clopen pair algebras and Stone contexts.
//!
//! Continuity of the relation is the open-set condition: lower inverses
//! (`diamond`) and upper inverses (`square`) of opens stay open. A pointwise
//! route implementing the neighbourhood definition directly is kept
//! alongside; the two must agree on every finite instance.

use std::collections::HashSet;
use std::sync::OnceLock;

use crate::concept::{pair_label, ConceptAlgebra, ConceptPair};
use crate::context::{is_injective, FormalContext, MorphismClass};
use crate::dba::{check_hom, DbaHom, FiniteDba};
use crate::error::{Error, Result};
use crate::set::BitSet;

/// An explicit family of open sets over a finite ground set, sorted in
/// canonical order. Membership is a binary search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteTopology {
    width: usize,
    opens: Vec<BitSet>,
}

/// Outcome of validating a candidate family.
#[derive(Clone, Debug)]
pub struct TopologyCheck {
    pub ok: bool,
    pub reasons: Vec<String>,
}

/// Checks the topology invariants on a raw family: empty and full sets
/// present, closed under pairwise union and intersection.
pub fn validate_topology(width: usize, opens: &[BitSet]) -> TopologyCheck {
    let mut reasons = Vec::new();
    if let Some(bad) = opens.iter().find(|o| o.width() != width) {
        reasons.push(format!("set {bad:?} has width {}, expected {width}", bad.width()));
        return TopologyCheck { ok: false, reasons };
    }
    let family: HashSet<&BitSet> = opens.iter().collect();
    if !family.contains(&BitSet::empty(width)) {
        reasons.push("empty set is missing".to_string());
    }
    if !family.contains(&BitSet::full(width)) {
        reasons.push("full set is missing".to_string());
    }
    for a in opens {
        for b in opens {
            let u = a.union(b);
            if !family.contains(&u) {
                reasons.push(format!("union of {a:?} and {b:?} is missing"));
            }
            let i = a.intersection(b);
            if !family.contains(&i) {
                reasons.push(format!("intersection of {a:?} and {b:?} is missing"));
            }
            if reasons.len() > 8 {
                return TopologyCheck { ok: false, reasons };
            }
        }
    }
    TopologyCheck {
        ok: reasons.is_empty(),
        reasons,
    }
}

fn close_family(width: usize, start: Vec<BitSet>) -> Vec<BitSet> {
    let mut family: HashSet<BitSet> = start.into_iter().collect();
    family.insert(BitSet::empty(width));
    family.insert(BitSet::full(width));
    let mut worklist: Vec<BitSet> = family.iter().cloned().collect();
    while let Some(next) = worklist.pop() {
        let mut new = Vec::new();
        for existing in family.iter() {
            let u = next.union(existing);
            if !family.contains(&u) && !new.contains(&u) {
                new.push(u);
            }
            let i = next.intersection(existing);
            if !family.contains(&i) && !new.contains(&i) {
                new.push(i);
            }
        }
        for s in new {
            family.insert(s.clone());
            worklist.push(s);
        }
    }
    let mut opens: Vec<BitSet> = family.into_iter().collect();
    opens.sort();
    opens
}

impl FiniteTopology {
    /// Validates and canonicalizes an explicit family.
    pub fn new(width: usize, mut opens: Vec<BitSet>) -> Result<Self> {
        opens.sort();
        opens.dedup();
        let check = validate_topology(width, &opens);
        if !check.ok {
            return Err(Error::Parse(format!(
                "not a topology: {}",
                check.reasons.join("; ")
            )));
        }
        Ok(FiniteTopology { width, opens })
    }

    pub fn discrete(width: usize) -> Self {
        assert!(width <= 20, "explicit discrete family limited to 2^20 sets");
        let opens = (0u64..1 << width)
            .map(|mask| BitSet::from_mask(width, mask))
            .collect();
        FiniteTopology { width, opens }
    }

    pub fn indiscrete(width: usize) -> Self {
        let mut opens = vec![BitSet::empty(width), BitSet::full(width)];
        opens.dedup();
        FiniteTopology { width, opens }
    }

    /// Smallest topology in which every generator is open.
    pub fn from_open_generators(width: usize, generators: &[BitSet]) -> Result<Self> {
        for g in generators {
            if g.width() != width {
                return Err(Error::WidthMismatch {
                    expected: width,
                    got: g.width(),
                });
            }
        }
        Ok(FiniteTopology {
            width,
            opens: close_family(width, generators.to_vec()),
        })
    }

    /// Topology generated by taking the given sets as a subbase for the
    /// closed sets: closed sets are intersections of finite unions of
    /// subbase members, opens their complements.
    pub fn from_closed_subbase(width: usize, subbase: &[BitSet]) -> Result<Self> {
        for s in subbase {
            if s.width() != width {
                return Err(Error::WidthMismatch {
                    expected: width,
                    got: s.width(),
                });
            }
        }
        let closed = close_family(width, subbase.to_vec());
        let mut opens: Vec<BitSet> = closed.iter().map(BitSet::complement).collect();
        opens.sort();
        Ok(FiniteTopology { width, opens })
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn opens(&self) -> &[BitSet] {
        &self.opens
    }

    pub fn is_open(&self, s: &BitSet) -> bool {
        s.width() == self.width && self.opens.binary_search(s).is_ok()
    }

    pub fn is_closed(&self, s: &BitSet) -> bool {
        s.width() == self.width && self.is_open(&s.complement())
    }

    pub fn is_clopen(&self, s: &BitSet) -> bool {
        self.is_open(s) && self.is_closed(s)
    }

    /// Clopen sets in canonical order.
    pub fn clopens(&self) -> Vec<BitSet> {
        self.opens
            .iter()
            .filter(|o| self.is_closed(o))
            .cloned()
            .collect()
    }

    /// Every singleton open; on a family closed under union that makes
    /// every subset open.
    pub fn is_discrete(&self) -> bool {
        (0..self.width).all(|i| self.is_open(&BitSet::singleton(self.width, i)))
    }

    /// Any two distinct points are separated by a clopen set.
    pub fn is_totally_disconnected(&self) -> bool {
        let clopens = self.clopens();
        for x in 0..self.width {
            for y in 0..self.width {
                if x != y
                    && !clopens
                        .iter()
                        .any(|c| c.contains(x) && !c.contains(y))
                {
                    return false;
                }
            }
        }
        true
    }
}

#[derive(Clone, Copy, Debug, Default)]
struct ContinuityVerdicts {
    lower: bool,
    upper: bool,
    converse_lower: bool,
    converse_upper: bool,
}

/// A context on topological spaces: one topology per side plus the
/// incidence relation. Continuity verdicts are computed once and cached.
#[derive(Clone, Debug)]
pub struct Cts {
    objects: FiniteTopology,
    attributes: FiniteTopology,
    context: FormalContext,
    verdicts: OnceLock<ContinuityVerdicts>,
}

impl Cts {
    pub fn new(
        object_topology: FiniteTopology,
        attribute_topology: FiniteTopology,
        context: FormalContext,
    ) -> Result<Self> {
        if object_topology.width() != context.object_count() {
            return Err(Error::WidthMismatch {
                expected: context.object_count(),
                got: object_topology.width(),
            });
        }
        if attribute_topology.width() != context.attribute_count() {
            return Err(Error::WidthMismatch {
                expected: context.attribute_count(),
                got: attribute_topology.width(),
            });
        }
        Ok(Cts {
            objects: object_topology,
            attributes: attribute_topology,
            context,
            verdicts: OnceLock::new(),
        })
    }

    /// Both sides discrete: every finite context is trivially a CTSCR this
    /// way.
    pub fn discrete(context: FormalContext) -> Self {
        let objects = FiniteTopology::discrete(context.object_count());
        let attributes = FiniteTopology::discrete(context.attribute_count());
        Cts {
            objects,
            attributes,
            context,
            verdicts: OnceLock::new(),
        }
    }

    pub fn context(&self) -> &FormalContext {
        &self.context
    }

    pub fn object_topology(&self) -> &FiniteTopology {
        &self.objects
    }

    pub fn attribute_topology(&self) -> &FiniteTopology {
        &self.attributes
    }

    fn verdicts(&self) -> &ContinuityVerdicts {
        self.verdicts.get_or_init(|| {
            let ctx = &self.context;
            let lower = self
                .attributes
                .opens()
                .iter()
                .all(|o| self.objects.is_open(&ctx.diamond(o).expect("widths agree")));
            let upper = self
                .attributes
                .opens()
                .iter()
                .all(|o| self.objects.is_open(&ctx.square(o).expect("widths agree")));
            let converse_lower = self
                .objects
                .opens()
                .iter()
                .all(|o| self.attributes.is_open(&ctx.black_diamond(o).expect("widths agree")));
            let converse_upper = self
                .objects
                .opens()
                .iter()
                .all(|o| self.attributes.is_open(&ctx.black_square(o).expect("widths agree")));
            ContinuityVerdicts {
                lower,
                upper,
                converse_lower,
                converse_upper,
            }
        })
    }

    /// Lower semicontinuity of the relation: diamonds of opens stay open.
    pub fn is_lower_semicontinuous(&self) -> bool {
        self.verdicts().lower
    }

    /// Upper semicontinuity of the relation: squares of opens stay open.
    pub fn is_upper_semicontinuous(&self) -> bool {
        self.verdicts().upper
    }

    pub fn is_relation_continuous(&self) -> bool {
        self.is_lower_semicontinuous() && self.is_upper_semicontinuous()
    }

    /// Continuity of the converse relation: black diamonds and black
    /// squares of object-side opens stay open.
    pub fn is_converse_continuous(&self) -> bool {
        self.verdicts().converse_lower && self.verdicts().converse_upper
    }

    pub fn is_ctscr(&self) -> bool {
        self.is_relation_continuous() && self.is_converse_continuous()
    }

    /// `None` when the CTS is a Stone context, otherwise the first reason
    /// it is not.
    pub fn stone_violation(&self) -> Option<String> {
        if !self.is_ctscr() {
            return Some("relation or converse not continuous".to_string());
        }
        for (name, side) in [("object", &self.objects), ("attribute", &self.attributes)] {
            if !side.is_totally_disconnected() {
                return Some(format!("{name} space is not totally disconnected"));
            }
            // a finite totally disconnected space is discrete: clopen
            // separation forces singleton opens
            debug_assert!(side.is_discrete());
        }
        let semis = enumerate_clopen_oo_semiconcepts(self);
        let ctx = &self.context;
        for g in 0..ctx.object_count() {
            for m in 0..ctx.attribute_count() {
                if ctx.has(g, m) {
                    continue;
                }
                let witnessed = semis
                    .iter()
                    .any(|p| p.intent.contains(m) && !p.extent.contains(g));
                if !witnessed {
                    return Some(format!(
                        "relation not recovered at ({}, {})",
                        ctx.objects()[g],
                        ctx.attributes()[m]
                    ));
                }
            }
        }
        None
    }

    /// CTSCR over Stone spaces whose relation is recovered from the clopen
    /// object-oriented semiconcepts.
    pub fn is_stone_context(&self) -> bool {
        self.stone_violation().is_none()
    }
}

/// Pointwise lower semicontinuity of the relation, per the neighbourhood
/// definition.
pub fn lower_semicontinuous_pointwise(cts: &Cts) -> bool {
    let ctx = cts.context();
    (0..ctx.object_count()).all(|x0| {
        cts.attribute_topology().opens().iter().all(|o| {
            if !ctx.row(x0).intersects(o) {
                return true;
            }
            cts.object_topology()
                .opens()
                .iter()
                .any(|u| u.contains(x0) && u.iter().all(|x| ctx.row(x).intersects(o)))
        })
    })
}

/// Pointwise upper semicontinuity of the relation.
pub fn upper_semicontinuous_pointwise(cts: &Cts) -> bool {
    let ctx = cts.context();
    (0..ctx.object_count()).all(|x0| {
        cts.attribute_topology().opens().iter().all(|o| {
            if !ctx.row(x0).is_subset(o) {
                return true;
            }
            cts.object_topology()
                .opens()
                .iter()
                .any(|u| u.contains(x0) && u.iter().all(|x| ctx.row(x).is_subset(o)))
        })
    })
}

/// Pointwise lower semicontinuity of the converse relation.
pub fn converse_lower_semicontinuous_pointwise(cts: &Cts) -> bool {
    let ctx = cts.context();
    (0..ctx.attribute_count()).all(|y0| {
        cts.object_topology().opens().iter().all(|o| {
            if !ctx.col(y0).intersects(o) {
                return true;
            }
            cts.attribute_topology()
                .opens()
                .iter()
                .any(|v| v.contains(y0) && v.iter().all(|y| ctx.col(y).intersects(o)))
        })
    })
}

/// Pointwise upper semicontinuity of the converse relation.
pub fn converse_upper_semicontinuous_pointwise(cts: &Cts) -> bool {
    let ctx = cts.context();
    (0..ctx.attribute_count()).all(|y0| {
        cts.object_topology().opens().iter().all(|o| {
            if !ctx.col(y0).is_subset(o) {
                return true;
            }
            cts.attribute_topology()
                .opens()
                .iter()
                .any(|v| v.contains(y0) && v.iter().all(|y| ctx.col(y).is_subset(o)))
        })
    })
}

/// Clopen object-oriented semiconcepts of a CTS: semiconcepts with both
/// components clopen, enumerated over the clopen families directly.
pub fn enumerate_clopen_oo_semiconcepts(cts: &Cts) -> Vec<ConceptPair> {
    let ctx = cts.context();
    let mut masks: Vec<(BitSet, BitSet)> = Vec::new();
    for a in cts.object_topology().clopens() {
        let b = ctx.black_square(&a).expect("widths agree");
        if cts.attribute_topology().is_clopen(&b) {
            masks.push((a, b));
        }
    }
    for b in cts.attribute_topology().clopens() {
        let a = ctx.diamond(&b).expect("widths agree");
        if cts.object_topology().is_clopen(&a) {
            masks.push((a, b));
        }
    }
    masks.sort();
    masks.dedup();
    masks
        .into_iter()
        .map(|(a, b)| crate::concept::classify_pair(ctx, &a, &b).expect("widths agree"))
        .collect()
}

/// Clopen object-oriented protoconcepts of a CTS.
pub fn enumerate_clopen_oo_protoconcepts(cts: &Cts) -> Vec<ConceptPair> {
    let ctx = cts.context();
    let clopen_a = cts.object_topology().clopens();
    let clopen_b = cts.attribute_topology().clopens();
    let interiors: Vec<BitSet> = clopen_a
        .iter()
        .map(|a| {
            ctx.diamond(&ctx.black_square(a).expect("widths agree"))
                .expect("widths agree")
        })
        .collect();
    let diamonds: Vec<BitSet> = clopen_b
        .iter()
        .map(|b| ctx.diamond(b).expect("widths agree"))
        .collect();
    let mut pairs = Vec::new();
    for (a, interior) in clopen_a.iter().zip(&interiors) {
        for (b, dia) in clopen_b.iter().zip(&diamonds) {
            if interior == dia {
                pairs.push((a.clone(), b.clone()));
            }
        }
    }
    pairs.sort();
    pairs
        .into_iter()
        .map(|(a, b)| crate::concept::classify_pair(ctx, &a, &b).expect("widths agree"))
        .collect()
}

fn build_clopen_algebra(cts: &Cts, pairs: Vec<ConceptPair>) -> Result<ConceptAlgebra> {
    if !cts.is_ctscr() {
        return Err(Error::NotCtscr(
            "clopen pairs form an algebra only over a CTSCR".to_string(),
        ));
    }
    let ctx = cts.context();
    let n = pairs.len();
    if n > crate::dba::TABLE_CAP {
        return Err(Error::CarrierCapExceeded {
            carrier: n,
            cap: crate::dba::TABLE_CAP,
        });
    }
    let masks: Vec<(BitSet, BitSet)> = pairs.into_iter().map(|p| (p.extent, p.intent)).collect();
    let mut meet_index: std::collections::HashMap<BitSet, u32> = Default::default();
    let mut join_index: std::collections::HashMap<BitSet, u32> = Default::default();
    for (i, (a, b)) in masks.iter().enumerate() {
        if &ctx.black_square(a)? == b {
            meet_index.insert(a.clone(), i as u32);
        }
        if &ctx.diamond(b)? == a {
            join_index.insert(b.clone(), i as u32);
        }
    }
    let meet_of = |a: &BitSet| -> Result<u32> {
        meet_index
            .get(a)
            .copied()
            .ok_or_else(|| Error::NotClosed(format!("meet-side element for extent {a:?} missing")))
    };
    let join_of = |b: &BitSet| -> Result<u32> {
        join_index
            .get(b)
            .copied()
            .ok_or_else(|| Error::NotClosed(format!("join-side element for intent {b:?} missing")))
    };
    let mut meet = Vec::with_capacity(n * n);
    let mut join = Vec::with_capacity(n * n);
    let mut neg = Vec::with_capacity(n);
    let mut opp = Vec::with_capacity(n);
    for (a1, b1) in &masks {
        for (a2, b2) in &masks {
            meet.push(meet_of(&a1.union(a2))?);
            join.push(join_of(&b1.intersection(b2))?);
        }
        neg.push(meet_of(&a1.complement())?);
        opp.push(join_of(&b1.complement())?);
    }
    let top = join_of(&BitSet::empty(ctx.attribute_count()))? as usize;
    let bot = meet_of(&BitSet::full(ctx.object_count()))? as usize;
    let labels = masks.iter().map(|(a, b)| pair_label(ctx, a, b)).collect();
    Ok(ConceptAlgebra {
        dba: FiniteDba::new(n, meet, join, neg, opp, top, bot, labels)?,
        pairs: masks,
    })
}

/// The algebra of clopen object-oriented protoconcepts of a CTSCR
/// (fully contextual).
pub fn build_clopen_proto_dba(cts: &Cts) -> Result<ConceptAlgebra> {
    build_clopen_algebra(cts, enumerate_clopen_oo_protoconcepts(cts))
}

/// The algebra of clopen object-oriented semiconcepts of a CTSCR (pure).
pub fn build_clopen_semi_dba(cts: &Cts) -> Result<ConceptAlgebra> {
    build_clopen_algebra(cts, enumerate_clopen_oo_semiconcepts(cts))
}

/// Verdict ladder for a pair of maps between two CTS.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum CtsHomClass {
    None,
    Homomorphism,
    Embedding,
    Isomorphism,
    Homeomorphism,
}

/// A pair of ground-set maps with its verdict.
#[derive(Clone, Debug)]
pub struct CtsHom {
    pub object_map: Vec<usize>,
    pub attribute_map: Vec<usize>,
    pub class: CtsHomClass,
}

fn map_continuous(map: &[usize], from: &FiniteTopology, to: &FiniteTopology) -> bool {
    to.opens().iter().all(|o| {
        let pre = BitSet::from_indices(
            map.len(),
            (0..map.len()).filter(|&x| o.contains(map[x])),
        );
        from.is_open(&pre)
    })
}

/// Strongest class of `(alpha, beta) : cts1 -> cts2` among none,
/// homomorphism, embedding, isomorphism and homeomorphism.
///
/// A continuous bijection between finite non-discrete spaces need not have a
/// continuous inverse, so isomorphism and homeomorphism stay distinct
/// classes.
pub fn check_cts_morphism(
    cts1: &Cts,
    cts2: &Cts,
    alpha: &[usize],
    beta: &[usize],
) -> Result<CtsHom> {
    let ctx_class = crate::context::check_context_morphism(cts1.context(), cts2.context(), alpha, beta)?;
    let make = |class| {
        Ok(CtsHom {
            object_map: alpha.to_vec(),
            attribute_map: beta.to_vec(),
            class,
        })
    };
    if ctx_class == MorphismClass::None {
        return make(CtsHomClass::None);
    }
    if !map_continuous(alpha, cts1.object_topology(), cts2.object_topology())
        || !map_continuous(beta, cts1.attribute_topology(), cts2.attribute_topology())
    {
        return make(CtsHomClass::None);
    }
    if !(is_injective(alpha) && is_injective(beta)) {
        return make(CtsHomClass::Homomorphism);
    }
    let bijective = alpha.len() == cts2.context().object_count()
        && beta.len() == cts2.context().attribute_count();
    if !bijective {
        return make(CtsHomClass::Embedding);
    }
    // inverse continuity: images of opens are open
    let image = |map: &[usize], s: &BitSet, width: usize| {
        BitSet::from_indices(width, s.iter().map(|x| map[x]))
    };
    let alpha_open = cts1
        .object_topology()
        .opens()
        .iter()
        .all(|o| cts2.object_topology().is_open(&image(alpha, o, alpha.len())));
    let beta_open = cts1
        .attribute_topology()
        .opens()
        .iter()
        .all(|o| cts2.attribute_topology().is_open(&image(beta, o, beta.len())));
    if alpha_open && beta_open {
        make(CtsHomClass::Homeomorphism)
    } else {
        make(CtsHomClass::Isomorphism)
    }
}

/// The transport induced by a CTSCR-homeomorphism `(alpha, beta)`:
/// `(A, B) -> (alpha^{-1}(A), beta^{-1}(B))` from the clopen protoconcept
/// algebra of the codomain onto that of the domain, with the semiconcept
/// restriction.
#[derive(Clone, Debug)]
pub struct InducedIso {
    /// Clopen protoconcept algebra of the codomain CTS.
    pub source: ConceptAlgebra,
    /// Clopen protoconcept algebra of the domain CTS.
    pub target: ConceptAlgebra,
    pub hom: DbaHom,
    pub semi_source: ConceptAlgebra,
    pub semi_target: ConceptAlgebra,
    pub semi_hom: DbaHom,
}

pub fn induced_dba_iso(cts1: &Cts, cts2: &Cts, hom: &CtsHom) -> Result<InducedIso> {
    if hom.class < CtsHomClass::Homeomorphism {
        return Err(Error::NotHomeomorphism(format!(
            "class is only {:?}",
            hom.class
        )));
    }
    let source = build_clopen_proto_dba(cts2)?;
    let target = build_clopen_proto_dba(cts1)?;
    let preimage = |map: &[usize], s: &BitSet| {
        BitSet::from_indices(map.len(), (0..map.len()).filter(|&x| s.contains(map[x])))
    };
    let transport: Vec<usize> = source
        .pairs
        .iter()
        .map(|(a, b)| {
            let pa = preimage(&hom.object_map, a);
            let pb = preimage(&hom.attribute_map, b);
            target
                .index_of(&pa, &pb)
                .ok_or_else(|| Error::Internal("transported pair missing from the target".into()))
        })
        .collect::<Result<_>>()?;
    let dba_hom = check_hom(&source.dba, &target.dba, &transport)?;
    if !dba_hom.is_isomorphism() {
        return Err(Error::Internal(
            "induced transport failed the isomorphism check".into(),
        ));
    }
    let semi_source = build_clopen_semi_dba(cts2)?;
    let semi_target = build_clopen_semi_dba(cts1)?;
    let semi_transport: Vec<usize> = semi_source
        .pairs
        .iter()
        .map(|(a, b)| {
            let pa = preimage(&hom.object_map, a);
            let pb = preimage(&hom.attribute_map, b);
            semi_target
                .index_of(&pa, &pb)
                .ok_or_else(|| Error::Internal("restriction leaves the semiconcepts".into()))
        })
        .collect::<Result<_>>()?;
    let semi_hom = check_hom(&semi_source.dba, &semi_target.dba, &semi_transport)?;
    if !semi_hom.is_isomorphism() {
        return Err(Error::Internal(
            "semiconcept restriction failed the isomorphism check".into(),
        ));
    }
    Ok(InducedIso {
        source,
        target,
        hom: dba_hom,
        semi_source,
        semi_target,
        semi_hom,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dba::{classify_dba, to_boolean, validate_dba};
    use crate::samples;

    #[test]
    fn validate_families() {
        let w = 3;
        assert!(validate_topology(w, FiniteTopology::indiscrete(w).opens()).ok);
        assert!(validate_topology(w, FiniteTopology::discrete(w).opens()).ok);
        // {0}, {1} without their union
        let bad = vec![
            BitSet::empty(w),
            BitSet::singleton(w, 0),
            BitSet::singleton(w, 1),
            BitSet::full(w),
        ];
        let check = validate_topology(w, &bad);
        assert!(!check.ok);
        assert!(check.reasons.iter().any(|r| r.contains("union")));
        assert!(FiniteTopology::new(w, bad).is_err());
    }

    #[test]
    fn subbase_generation() {
        let singletons: Vec<BitSet> = (0..3).map(|i| BitSet::singleton(3, i)).collect();
        let t = FiniteTopology::from_closed_subbase(3, &singletons).unwrap();
        assert!(t.is_discrete());

        let t = FiniteTopology::from_closed_subbase(3, &[BitSet::empty(3)]).unwrap();
        assert_eq!(t.opens().len(), 2);

        let t = FiniteTopology::from_open_generators(2, &[BitSet::singleton(2, 0)]).unwrap();
        assert_eq!(t.opens().len(), 3);
        assert!(!t.is_discrete());
        assert!(!t.is_totally_disconnected());
    }

    #[test]
    fn discrete_cts_is_ctscr_and_stone() {
        let cts = Cts::discrete(samples::five_object_context());
        assert!(cts.is_ctscr());
        assert!(cts.is_stone_context());
    }

    #[test]
    fn indiscrete_space_is_not_stone() {
        // full relation keeps everything continuous, so the verdict comes
        // down to clopen separation, which an indiscrete pair cannot provide
        let ctx = FormalContext::new(
            vec!["g1".into(), "g2".into()],
            vec!["m".into()],
            &[vec![true], vec![true]],
        )
        .unwrap();
        let cts = Cts::new(
            FiniteTopology::indiscrete(2),
            FiniteTopology::discrete(1),
            ctx,
        )
        .unwrap();
        assert!(cts.is_ctscr());
        assert!(!cts.object_topology().is_totally_disconnected());
        assert!(!cts.is_stone_context());
    }

    #[test]
    fn counterexample_fails_lower_semicontinuity() {
        let cts = samples::semicontinuity_counterexample();
        assert!(!cts.is_lower_semicontinuous());
        assert!(!cts.is_ctscr());
        assert_eq!(lower_semicontinuous_pointwise(&cts), cts.is_lower_semicontinuous());
        // swapping the roles breaks converse continuity instead
        let swapped = Cts::new(
            FiniteTopology::discrete(2),
            FiniteTopology::new(
                2,
                vec![BitSet::empty(2), BitSet::singleton(2, 0), BitSet::full(2)],
            )
            .unwrap(),
            cts.context().clone(),
        )
        .unwrap();
        assert!(!swapped.is_converse_continuous());
    }

    #[test]
    fn fixed_block_is_ctscr() {
        // non-discrete topologies around a clopen block
        let obj = FiniteTopology::from_open_generators(4, &[BitSet::from_indices(4, [0, 1])]).unwrap();
        let block = BitSet::from_indices(3, [0, 2]);
        let attr = FiniteTopology::from_open_generators(3, &[block.clone(), block.complement()]).unwrap();
        let cts = samples::fixed_block_cts(obj, attr, &block);
        assert!(cts.is_ctscr());
        assert!(cts.is_relation_continuous() && cts.is_converse_continuous());

        // over Stone (discrete) spaces the same construction is Stone
        let stone = samples::fixed_block_cts(
            FiniteTopology::discrete(3),
            FiniteTopology::discrete(3),
            &BitSet::from_indices(3, [1]),
        );
        assert!(stone.is_stone_context());
    }

    #[test]
    fn pointwise_and_open_set_routes_agree() {
        for seed in 0..40u64 {
            let cts = crate::random::random_cts(seed, 4, 3);
            assert_eq!(cts.is_lower_semicontinuous(), lower_semicontinuous_pointwise(&cts));
            assert_eq!(cts.is_upper_semicontinuous(), upper_semicontinuous_pointwise(&cts));
            assert_eq!(
                cts.is_converse_continuous(),
                converse_lower_semicontinuous_pointwise(&cts)
                    && converse_upper_semicontinuous_pointwise(&cts)
            );
        }
    }

    #[test]
    fn clopen_semiconcepts_of_the_five_object_cts() {
        let cts = samples::five_object_cts();
        let semis = enumerate_clopen_oo_semiconcepts(&cts);
        let ctx = cts.context();
        let abc = ctx.object_set(&["a", "b", "c"]).unwrap();
        let two = ctx.attribute_set(&["2"]).unwrap();
        assert!(semis.iter().any(|p| p.extent == abc && p.intent == two));
        // (ab, 2) is a semiconcept of the plain context but ab is not clopen
        let ab = ctx.object_set(&["a", "b"]).unwrap();
        let pair = crate::concept::classify_pair(ctx, &ab, &two).unwrap();
        assert!(pair.is_oo_semiconcept());
        assert!(!semis.iter().any(|p| p.extent == ab));
        // every clopen semiconcept is a clopen protoconcept
        let protos = enumerate_clopen_oo_protoconcepts(&cts);
        for s in &semis {
            assert!(protos.iter().any(|p| p.extent == s.extent && p.intent == s.intent));
        }
    }

    #[test]
    fn discrete_clopen_enumerations_match_unrestricted() {
        let ctx = samples::small_context(3, 3, 5);
        let cts = Cts::discrete(ctx.clone());
        let clopen: Vec<_> = enumerate_clopen_oo_protoconcepts(&cts)
            .into_iter()
            .map(|p| (p.extent, p.intent))
            .collect();
        let all: Vec<_> =
            crate::concept::enumerate_oo_protoconcepts(&ctx, crate::concept::DEFAULT_CANDIDATE_CAP)
                .unwrap()
                .into_iter()
                .map(|p| (p.extent, p.intent))
                .collect();
        assert_eq!(clopen, all);
    }

    #[test]
    fn clopen_algebras_classify() {
        let ctx = samples::small_context(3, 3, 21);
        let cts = Cts::discrete(ctx);
        let proto = build_clopen_proto_dba(&cts).unwrap();
        let report = validate_dba(&proto.dba);
        assert!(report.is_valid(), "{:?}", report.first_counterexample());
        assert!(classify_dba(&proto.dba).fully_contextual);
        let semi = build_clopen_semi_dba(&cts).unwrap();
        assert!(classify_dba(&semi.dba).pure);
        // closure under the operations and the bounds
        assert!(proto
            .index_of(
                &BitSet::empty(3),
                &BitSet::empty(3)
            )
            .is_some());
    }

    #[test]
    fn clopen_algebra_requires_ctscr() {
        let cts = samples::semicontinuity_counterexample();
        assert!(matches!(
            build_clopen_proto_dba(&cts),
            Err(Error::NotCtscr(_))
        ));
    }

    #[test]
    fn bijective_homeomorphic_relation_gives_boolean() {
        // relation = identity on 3 points, both sides discrete
        let ctx = FormalContext::new(
            vec!["x1".into(), "x2".into(), "x3".into()],
            vec!["y1".into(), "y2".into(), "y3".into()],
            &[
                vec![true, false, false],
                vec![false, true, false],
                vec![false, false, true],
            ],
        )
        .unwrap();
        let cts = Cts::discrete(ctx);
        assert!(cts.is_ctscr());
        let proto = build_clopen_proto_dba(&cts).unwrap();
        let semi = build_clopen_semi_dba(&cts).unwrap();
        assert_eq!(proto.pairs, semi.pairs);
        assert!(to_boolean(&proto.dba).is_some());
    }

    #[test]
    fn morphism_classes() {
        let cts = samples::five_object_cts();
        let id_obj: Vec<usize> = (0..5).collect();
        let id_attr: Vec<usize> = (0..4).collect();
        let hom = check_cts_morphism(&cts, &cts, &id_obj, &id_attr).unwrap();
        assert_eq!(hom.class, CtsHomClass::Homeomorphism);

        // identity from discrete to indiscrete is continuous and bijective
        // but the inverse is not continuous
        let ctx = samples::five_object_context();
        let fine = Cts::discrete(ctx.clone());
        let coarse = Cts::new(
            FiniteTopology::indiscrete(5),
            FiniteTopology::indiscrete(4),
            ctx,
        )
        .unwrap();
        let hom = check_cts_morphism(&fine, &coarse, &id_obj, &id_attr).unwrap();
        assert_eq!(hom.class, CtsHomClass::Isomorphism);
        // and in the other direction the maps are not even continuous
        let hom = check_cts_morphism(&coarse, &fine, &id_obj, &id_attr).unwrap();
        assert_eq!(hom.class, CtsHomClass::None);
    }

    #[test]
    fn induced_iso_via_permutation() {
        let ctx = samples::small_context(3, 3, 2);
        let alpha = vec![1, 2, 0];
        let beta = vec![2, 0, 1];
        let mut incidence = vec![vec![false; 3]; 3];
        for g in 0..3 {
            for m in 0..3 {
                incidence[alpha[g]][beta[m]] = ctx.has(g, m);
            }
        }
        let permuted = FormalContext::new(
            vec!["u".into(), "v".into(), "w".into()],
            vec!["p".into(), "q".into(), "r".into()],
            &incidence,
        )
        .unwrap();
        let cts1 = Cts::discrete(ctx);
        let cts2 = Cts::discrete(permuted);
        let hom = check_cts_morphism(&cts1, &cts2, &alpha, &beta).unwrap();
        assert_eq!(hom.class, CtsHomClass::Homeomorphism);
        let induced = induced_dba_iso(&cts1, &cts2, &hom).unwrap();
        assert!(induced.hom.is_isomorphism());
        assert!(induced.semi_hom.is_isomorphism());
        // a CTSCR stays a CTSCR across a homeomorphism
        assert_eq!(cts1.is_ctscr(), cts2.is_ctscr());

        let identity_only = check_cts_morphism(&cts1, &cts1, &[0, 1, 2], &[0, 1, 2]).unwrap();
        let id_induced = induced_dba_iso(&cts1, &cts1, &identity_only).unwrap();
        assert_eq!(id_induced.hom.map, (0..id_induced.source.dba.len()).collect::<Vec<_>>());
    }

    #[test]
    fn induced_iso_requires_homeomorphism() {
        let ctx = samples::five_object_context();
        let fine = Cts::discrete(ctx.clone());
        let coarse = Cts::new(
            FiniteTopology::indiscrete(5),
            FiniteTopology::indiscrete(4),
            ctx,
        )
        .unwrap();
        let hom = check_cts_morphism(&fine, &coarse, &(0..5).collect::<Vec<_>>(), &(0..4).collect::<Vec<_>>())
            .unwrap();
        assert!(induced_dba_iso(&fine, &coarse, &hom).is_err());
    }
}
