//! Pair classification, enumeration of the four pair families, the two
//! operation families on pairs, and materialization as finite dBas.
//!
//! The classical family lives on pairs `(A, B)` with the derivation
//! operators; the object-oriented family uses `blacksquare`/`diamond`.
//! Enumeration precomputes one table per side indexed by packed subset
//! masks, so the candidate sweep is pure array traffic.

use std::collections::HashMap;

use crate::context::FormalContext;
use crate::dba::FiniteDba;
use crate::error::{Error, Result};
use crate::set::BitSet;

/// Default bound on `2^|G| * 2^|M|`, the candidate pair space.
pub const DEFAULT_CANDIDATE_CAP: u64 = 1 << 20;

/// A pair of sets over one context together with its membership flags.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConceptPair {
    pub extent: BitSet,
    pub intent: BitSet,
    pub flags: PairFlags,
}

/// Classification of a pair under both operator families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct PairFlags {
    /// `A' = B`
    pub semiconcept_left: bool,
    /// `B' = A`
    pub semiconcept_right: bool,
    /// `A'' = B'`
    pub protoconcept: bool,
    /// `A^blacksquare = B`
    pub oo_semiconcept_left: bool,
    /// `B^diamond = A`
    pub oo_semiconcept_right: bool,
    /// `A^blacksquare-diamond = B^diamond`
    pub oo_protoconcept: bool,
}

impl ConceptPair {
    pub fn is_concept(&self) -> bool {
        self.flags.semiconcept_left && self.flags.semiconcept_right
    }

    pub fn is_semiconcept(&self) -> bool {
        self.flags.semiconcept_left || self.flags.semiconcept_right
    }

    pub fn is_protoconcept(&self) -> bool {
        self.flags.protoconcept
    }

    pub fn is_oo_concept(&self) -> bool {
        self.flags.oo_semiconcept_left && self.flags.oo_semiconcept_right
    }

    pub fn is_oo_semiconcept(&self) -> bool {
        self.flags.oo_semiconcept_left || self.flags.oo_semiconcept_right
    }

    pub fn is_oo_protoconcept(&self) -> bool {
        self.flags.oo_protoconcept
    }
}

/// Computes all six flags of `(A, B)` against the context.
pub fn classify_pair(ctx: &FormalContext, a: &BitSet, b: &BitSet) -> Result<ConceptPair> {
    ctx.check_object_set(a)?;
    ctx.check_attribute_set(b)?;
    let a_prime = ctx.derive_intent(a)?;
    let b_prime = ctx.derive_extent(b)?;
    let a_prime_prime = ctx.derive_extent(&a_prime)?;
    let a_bs = ctx.black_square(a)?;
    let b_dia = ctx.diamond(b)?;
    let a_bs_dia = ctx.diamond(&a_bs)?;
    let flags = PairFlags {
        semiconcept_left: a_prime == *b,
        semiconcept_right: b_prime == *a,
        protoconcept: a_prime_prime == b_prime,
        oo_semiconcept_left: a_bs == *b,
        oo_semiconcept_right: b_dia == *a,
        oo_protoconcept: a_bs_dia == b_dia,
    };
    Ok(ConceptPair {
        extent: a.clone(),
        intent: b.clone(),
        flags,
    })
}

/// Packed per-side operator tables for an enumeration-sized context.
struct SideTables {
    g: usize,
    m: usize,
    gmask: u64,
    mmask: u64,
    /// `A -> A^blacksquare`, indexed by extent mask.
    blacksquare: Vec<u64>,
    /// `B -> B^diamond`, indexed by intent mask.
    diamond: Vec<u64>,
    /// `A -> A'`, indexed by extent mask.
    intent_of: Vec<u64>,
    /// `B -> B'`, indexed by intent mask.
    extent_of: Vec<u64>,
}

fn low_mask(bits: usize) -> u64 {
    if bits == 0 {
        0
    } else {
        u64::MAX >> (64 - bits)
    }
}

fn check_cap(ctx: &FormalContext, cap: u64) -> Result<()> {
    let g = ctx.object_count();
    let m = ctx.attribute_count();
    let exceeded = Err(Error::CandidateCapExceeded {
        objects: g,
        attributes: m,
        candidates: 1u128 << (g + m).min(127),
        cap,
    });
    if g + m >= 64 {
        return exceeded;
    }
    if 1u64 << (g + m) > cap {
        return exceeded;
    }
    Ok(())
}

impl SideTables {
    fn build(ctx: &FormalContext, cap: u64) -> Result<Self> {
        check_cap(ctx, cap)?;
        let g = ctx.object_count();
        let m = ctx.attribute_count();
        let rows: Vec<u64> = (0..g).map(|i| ctx.row(i).mask()).collect();
        let cols: Vec<u64> = (0..m).map(|j| ctx.col(j).mask()).collect();
        let gmask = low_mask(g);
        let mmask = low_mask(m);
        let mut blacksquare = vec![0u64; 1 << g];
        let mut intent_of = vec![0u64; 1 << g];
        for (a, (bs, it)) in blacksquare.iter_mut().zip(intent_of.iter_mut()).enumerate() {
            let a = a as u64;
            for (j, &col) in cols.iter().enumerate() {
                if col & !a == 0 {
                    *bs |= 1 << j;
                }
                if a & !col == 0 {
                    *it |= 1 << j;
                }
            }
        }
        let mut diamond = vec![0u64; 1 << m];
        let mut extent_of = vec![0u64; 1 << m];
        for (b, (dia, ext)) in diamond.iter_mut().zip(extent_of.iter_mut()).enumerate() {
            let b = b as u64;
            for (i, &row) in rows.iter().enumerate() {
                if row & b != 0 {
                    *dia |= 1 << i;
                }
                if b & !row == 0 {
                    *ext |= 1 << i;
                }
            }
        }
        Ok(SideTables {
            g,
            m,
            gmask,
            mmask,
            blacksquare,
            diamond,
            intent_of,
            extent_of,
        })
    }

    fn pair(&self, a: u64, b: u64) -> (BitSet, BitSet) {
        (BitSet::from_mask(self.g, a), BitSet::from_mask(self.m, b))
    }
}

fn materialize(ctx: &FormalContext, tables: &SideTables, masks: &[(u64, u64)]) -> Result<Vec<ConceptPair>> {
    masks
        .iter()
        .map(|&(a, b)| {
            let (extent, intent) = tables.pair(a, b);
            classify_pair(ctx, &extent, &intent)
        })
        .collect()
}

fn oo_semi_masks(t: &SideTables) -> Vec<(u64, u64)> {
    let mut masks: Vec<(u64, u64)> = Vec::with_capacity((1 << t.g) + (1 << t.m));
    for a in 0u64..1 << t.g {
        masks.push((a, t.blacksquare[a as usize]));
    }
    for b in 0u64..1 << t.m {
        masks.push((t.diamond[b as usize], b));
    }
    masks.sort_unstable();
    masks.dedup();
    masks
}

fn oo_proto_masks(t: &SideTables) -> Vec<(u64, u64)> {
    let mut fibre: HashMap<u64, Vec<u64>> = HashMap::new();
    for b in 0u64..1 << t.m {
        fibre.entry(t.diamond[b as usize]).or_default().push(b);
    }
    let mut masks = Vec::new();
    for a in 0u64..1 << t.g {
        let interior = t.diamond[t.blacksquare[a as usize] as usize];
        if let Some(bs) = fibre.get(&interior) {
            masks.extend(bs.iter().map(|&b| (a, b)));
        }
    }
    masks
}

fn wille_semi_masks(t: &SideTables) -> Vec<(u64, u64)> {
    let mut masks: Vec<(u64, u64)> = Vec::with_capacity((1 << t.g) + (1 << t.m));
    for a in 0u64..1 << t.g {
        masks.push((a, t.intent_of[a as usize]));
    }
    for b in 0u64..1 << t.m {
        masks.push((t.extent_of[b as usize], b));
    }
    masks.sort_unstable();
    masks.dedup();
    masks
}

fn wille_proto_masks(t: &SideTables) -> Vec<(u64, u64)> {
    let mut fibre: HashMap<u64, Vec<u64>> = HashMap::new();
    for b in 0u64..1 << t.m {
        fibre.entry(t.extent_of[b as usize]).or_default().push(b);
    }
    let mut masks = Vec::new();
    for a in 0u64..1 << t.g {
        let closure = t.extent_of[t.intent_of[a as usize] as usize];
        if let Some(bs) = fibre.get(&closure) {
            masks.extend(bs.iter().map(|&b| (a, b)));
        }
    }
    masks
}

/// All object-oriented protoconcepts in canonical order (extents ascending,
/// then intents).
pub fn enumerate_oo_protoconcepts(ctx: &FormalContext, cap: u64) -> Result<Vec<ConceptPair>> {
    let t = SideTables::build(ctx, cap)?;
    materialize(ctx, &t, &oo_proto_masks(&t))
}

/// All object-oriented semiconcepts: `{(A, A^bs)}` united with
/// `{(B^dia, B)}`, deduplicated, canonical order.
pub fn enumerate_oo_semiconcepts(ctx: &FormalContext, cap: u64) -> Result<Vec<ConceptPair>> {
    let t = SideTables::build(ctx, cap)?;
    materialize(ctx, &t, &oo_semi_masks(&t))
}

/// All protoconcepts (`A'' = B'`) in canonical order.
pub fn enumerate_protoconcepts(ctx: &FormalContext, cap: u64) -> Result<Vec<ConceptPair>> {
    let t = SideTables::build(ctx, cap)?;
    materialize(ctx, &t, &wille_proto_masks(&t))
}

/// All semiconcepts (`A' = B` or `B' = A`) in canonical order.
pub fn enumerate_semiconcepts(ctx: &FormalContext, cap: u64) -> Result<Vec<ConceptPair>> {
    let t = SideTables::build(ctx, cap)?;
    materialize(ctx, &t, &wille_semi_masks(&t))
}

fn check_same_widths(ctx: &FormalContext, p: &ConceptPair) -> Result<()> {
    ctx.check_object_set(&p.extent)?;
    ctx.check_attribute_set(&p.intent)
}

/// `(A,B) meet (C,D) = (A u C, (A u C)^bs)` in the object-oriented family.
pub fn oo_meet(ctx: &FormalContext, p: &ConceptPair, q: &ConceptPair) -> Result<ConceptPair> {
    check_same_widths(ctx, p)?;
    check_same_widths(ctx, q)?;
    let a = p.extent.union(&q.extent);
    let b = ctx.black_square(&a)?;
    classify_pair(ctx, &a, &b)
}

/// `(A,B) join (C,D) = ((B n D)^dia, B n D)`.
pub fn oo_join(ctx: &FormalContext, p: &ConceptPair, q: &ConceptPair) -> Result<ConceptPair> {
    check_same_widths(ctx, p)?;
    check_same_widths(ctx, q)?;
    let b = p.intent.intersection(&q.intent);
    let a = ctx.diamond(&b)?;
    classify_pair(ctx, &a, &b)
}

/// `neg(A,B) = (A^c, A^c-bs)`.
pub fn oo_neg(ctx: &FormalContext, p: &ConceptPair) -> Result<ConceptPair> {
    check_same_widths(ctx, p)?;
    let a = p.extent.complement();
    let b = ctx.black_square(&a)?;
    classify_pair(ctx, &a, &b)
}

/// `opp(A,B) = (B^c-dia, B^c)`.
pub fn oo_opp(ctx: &FormalContext, p: &ConceptPair) -> Result<ConceptPair> {
    check_same_widths(ctx, p)?;
    let b = p.intent.complement();
    let a = ctx.diamond(&b)?;
    classify_pair(ctx, &a, &b)
}

/// Top of the object-oriented family: `(empty, empty)`.
pub fn oo_top(ctx: &FormalContext) -> Result<ConceptPair> {
    classify_pair(
        ctx,
        &BitSet::empty(ctx.object_count()),
        &BitSet::empty(ctx.attribute_count()),
    )
}

/// Bottom of the object-oriented family: `(G, M)`.
pub fn oo_bot(ctx: &FormalContext) -> Result<ConceptPair> {
    classify_pair(
        ctx,
        &BitSet::full(ctx.object_count()),
        &BitSet::full(ctx.attribute_count()),
    )
}

/// Object-oriented pair order: `(A,B) <= (C,D) iff C <= A and D <= B`.
pub fn oo_pair_leq(p: &ConceptPair, q: &ConceptPair) -> Result<bool> {
    if p.extent.width() != q.extent.width() || p.intent.width() != q.intent.width() {
        return Err(Error::WidthMismatch {
            expected: p.extent.width(),
            got: q.extent.width(),
        });
    }
    Ok(q.extent.is_subset(&p.extent) && q.intent.is_subset(&p.intent))
}

/// `(A1,B1) meet (A2,B2) = (A1 n A2, (A1 n A2)')` in the classical family.
pub fn wille_meet(ctx: &FormalContext, p: &ConceptPair, q: &ConceptPair) -> Result<ConceptPair> {
    check_same_widths(ctx, p)?;
    check_same_widths(ctx, q)?;
    let a = p.extent.intersection(&q.extent);
    let b = ctx.derive_intent(&a)?;
    classify_pair(ctx, &a, &b)
}

/// `(A1,B1) join (A2,B2) = ((B1 n B2)', B1 n B2)`.
pub fn wille_join(ctx: &FormalContext, p: &ConceptPair, q: &ConceptPair) -> Result<ConceptPair> {
    check_same_widths(ctx, p)?;
    check_same_widths(ctx, q)?;
    let b = p.intent.intersection(&q.intent);
    let a = ctx.derive_extent(&b)?;
    classify_pair(ctx, &a, &b)
}

/// `neg(A,B) = (A^c, A^c')`.
pub fn wille_neg(ctx: &FormalContext, p: &ConceptPair) -> Result<ConceptPair> {
    check_same_widths(ctx, p)?;
    let a = p.extent.complement();
    let b = ctx.derive_intent(&a)?;
    classify_pair(ctx, &a, &b)
}

/// `opp(A,B) = (B^c', B^c)`.
pub fn wille_opp(ctx: &FormalContext, p: &ConceptPair) -> Result<ConceptPair> {
    check_same_widths(ctx, p)?;
    let b = p.intent.complement();
    let a = ctx.derive_extent(&b)?;
    classify_pair(ctx, &a, &b)
}

/// Top of the classical family: `(G, empty)`.
pub fn wille_top(ctx: &FormalContext) -> Result<ConceptPair> {
    classify_pair(
        ctx,
        &BitSet::full(ctx.object_count()),
        &BitSet::empty(ctx.attribute_count()),
    )
}

/// Bottom of the classical family: `(empty, M)`.
pub fn wille_bot(ctx: &FormalContext) -> Result<ConceptPair> {
    classify_pair(
        ctx,
        &BitSet::empty(ctx.object_count()),
        &BitSet::full(ctx.attribute_count()),
    )
}

/// Classical pair order via the algebra definition
/// (`p <= q iff p meet q = p meet p and p join q = q join q`).
pub fn wille_pair_leq(ctx: &FormalContext, p: &ConceptPair, q: &ConceptPair) -> Result<bool> {
    let pq = wille_meet(ctx, p, q)?;
    let pp = wille_meet(ctx, p, p)?;
    let jq = wille_join(ctx, p, q)?;
    let qq = wille_join(ctx, q, q)?;
    Ok(pq.extent == pp.extent && pq.intent == pp.intent && jq.extent == qq.extent && jq.intent == qq.intent)
}

/// An enumerated pair family materialized as a dBa with explicit tables.
/// `pairs[i]` is the pair behind carrier element `i`; labels render the same
/// pairs with object and attribute names.
#[derive(Clone, Debug)]
pub struct ConceptAlgebra {
    pub dba: FiniteDba,
    pub pairs: Vec<(BitSet, BitSet)>,
}

impl ConceptAlgebra {
    pub fn index_of(&self, extent: &BitSet, intent: &BitSet) -> Option<usize> {
        self.pairs
            .binary_search_by(|(a, b)| a.cmp(extent).then_with(|| b.cmp(intent)))
            .ok()
    }
}

pub(crate) fn pair_label(ctx: &FormalContext, extent: &BitSet, intent: &BitSet) -> String {
    let objs: Vec<&str> = extent.iter().map(|g| ctx.objects()[g].as_str()).collect();
    let attrs: Vec<&str> = intent.iter().map(|m| ctx.attributes()[m].as_str()).collect();
    format!("({{{}}},{{{}}})", objs.join(" "), attrs.join(" "))
}

enum Family {
    ObjectOriented,
    Classical,
}

/// Builds tables over sorted `masks`. Every meet of two family members is a
/// meet-side element `(A, f(A))` and every join a join-side `(g(B), B)`, so
/// table entries reduce to two dense index lookups.
fn build_tables(
    ctx: &FormalContext,
    t: &SideTables,
    masks: Vec<(u64, u64)>,
    family: Family,
) -> Result<ConceptAlgebra> {
    let n = masks.len();
    if n > crate::dba::TABLE_CAP {
        return Err(Error::CarrierCapExceeded {
            carrier: n,
            cap: crate::dba::TABLE_CAP,
        });
    }
    debug_assert!(masks.windows(2).all(|w| w[0] < w[1]), "masks must be sorted");

    let mut meet_index = vec![u32::MAX; 1 << t.g];
    let mut join_index = vec![u32::MAX; 1 << t.m];
    for (i, &(a, b)) in masks.iter().enumerate() {
        let (meet_side, join_side) = match family {
            Family::ObjectOriented => (t.blacksquare[a as usize] == b, t.diamond[b as usize] == a),
            Family::Classical => (t.intent_of[a as usize] == b, t.extent_of[b as usize] == a),
        };
        if meet_side {
            meet_index[a as usize] = i as u32;
        }
        if join_side {
            join_index[b as usize] = i as u32;
        }
    }
    let meet_of = |a: u64| -> Result<u32> {
        let i = meet_index[a as usize];
        if i == u32::MAX {
            return Err(Error::NotClosed(format!("meet-side element for extent {a:#b} missing")));
        }
        Ok(i)
    };
    let join_of = |b: u64| -> Result<u32> {
        let i = join_index[b as usize];
        if i == u32::MAX {
            return Err(Error::NotClosed(format!("join-side element for intent {b:#b} missing")));
        }
        Ok(i)
    };

    let mut meet = Vec::with_capacity(n * n);
    let mut join = Vec::with_capacity(n * n);
    let mut neg = Vec::with_capacity(n);
    let mut opp = Vec::with_capacity(n);
    for &(a1, b1) in &masks {
        for &(a2, b2) in &masks {
            match family {
                Family::ObjectOriented => {
                    meet.push(meet_of(a1 | a2)?);
                    join.push(join_of(b1 & b2)?);
                }
                Family::Classical => {
                    meet.push(meet_of(a1 & a2)?);
                    join.push(join_of(b1 & b2)?);
                }
            }
        }
        match family {
            Family::ObjectOriented => {
                neg.push(meet_of(!a1 & t.gmask)?);
                opp.push(join_of(!b1 & t.mmask)?);
            }
            Family::Classical => {
                neg.push(meet_of(!a1 & t.gmask)?);
                opp.push(join_of(!b1 & t.mmask)?);
            }
        }
    }
    let (top, bot) = match family {
        Family::ObjectOriented => (join_of(0)? as usize, meet_of(t.gmask)? as usize),
        Family::Classical => (join_of(0)? as usize, meet_of(0)? as usize),
    };
    let pairs: Vec<(BitSet, BitSet)> = masks.iter().map(|&(a, b)| t.pair(a, b)).collect();
    let labels = pairs
        .iter()
        .map(|(a, b)| pair_label(ctx, a, b))
        .collect();
    Ok(ConceptAlgebra {
        dba: FiniteDba::new(n, meet, join, neg, opp, top, bot, labels)?,
        pairs,
    })
}

/// The algebra of object-oriented semiconcepts. Classifies pure.
pub fn build_semi_dba(ctx: &FormalContext, cap: u64) -> Result<ConceptAlgebra> {
    let t = SideTables::build(ctx, cap)?;
    let masks = oo_semi_masks(&t);
    build_tables(ctx, &t, masks, Family::ObjectOriented)
}

/// The algebra of object-oriented protoconcepts. Classifies fully
/// contextual.
pub fn build_proto_dba(ctx: &FormalContext, cap: u64) -> Result<ConceptAlgebra> {
    let t = SideTables::build(ctx, cap)?;
    let masks = oo_proto_masks(&t);
    build_tables(ctx, &t, masks, Family::ObjectOriented)
}

/// The classical protoconcept algebra.
pub fn build_wille_proto_dba(ctx: &FormalContext, cap: u64) -> Result<ConceptAlgebra> {
    let t = SideTables::build(ctx, cap)?;
    let masks = wille_proto_masks(&t);
    build_tables(ctx, &t, masks, Family::Classical)
}

/// The classical semiconcept algebra.
pub fn build_wille_semi_dba(ctx: &FormalContext, cap: u64) -> Result<ConceptAlgebra> {
    let t = SideTables::build(ctx, cap)?;
    let masks = wille_semi_masks(&t);
    build_tables(ctx, &t, masks, Family::Classical)
}

/// `(A, B) -> (A^c, B)` from the classical protoconcept algebra of a
/// context onto the object-oriented protoconcept algebra of its complement,
/// verified table-wise as a dBa isomorphism.
#[derive(Clone, Debug)]
pub struct TransportReport {
    pub classical: ConceptAlgebra,
    pub oo_complement: ConceptAlgebra,
    pub map: Vec<usize>,
    pub hom: crate::dba::DbaHom,
}

pub fn wille_oo_transport(ctx: &FormalContext, cap: u64) -> Result<TransportReport> {
    let classical = build_wille_proto_dba(ctx, cap)?;
    let oo_complement = build_proto_dba(&ctx.complement(), cap)?;
    let map: Vec<usize> = classical
        .pairs
        .iter()
        .map(|(a, b)| {
            oo_complement
                .index_of(&a.complement(), b)
                .ok_or_else(|| Error::Internal("transported pair missing from the target".into()))
        })
        .collect::<Result<_>>()?;
    let hom = crate::dba::check_hom(&classical.dba, &oo_complement.dba, &map)?;
    if !hom.is_isomorphism() {
        return Err(Error::Internal(
            "complement transport failed the isomorphism check".into(),
        ));
    }
    Ok(TransportReport {
        classical,
        oo_complement,
        map,
        hom,
    })
}
