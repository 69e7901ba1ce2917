//! Finite double Boolean algebras given by explicit operation tables.
//!
//! A carrier of `n` elements with `n x n` tables for the two binary
//! operations, index tables for the two negations, and distinguished top and
//! bottom. Axiom checking is an exhaustive sweep: no symbolic shortcuts,
//! carriers stay at desk scale (a few thousand elements).

use std::collections::HashMap;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::set::BitSet;

/// Largest carrier for which `n x n` tables are materialized.
pub const TABLE_CAP: usize = 4096;

/// Witness cap per violated law, so reports stay readable.
const WITNESS_CAP: usize = 10;

/// A finite double Boolean algebra candidate.
///
/// Construction validates only well-formedness (dimensions and index
/// ranges); whether the tables satisfy the axioms is the job of
/// [`validate_dba`].
#[derive(Clone)]
pub struct FiniteDba {
    n: usize,
    meet: Vec<u32>,
    join: Vec<u32>,
    neg: Vec<u32>,
    opp: Vec<u32>,
    top: u32,
    bot: u32,
    labels: Vec<String>,
    order: OnceLock<QuasiOrder>,
}

impl PartialEq for FiniteDba {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n
            && self.meet == other.meet
            && self.join == other.join
            && self.neg == other.neg
            && self.opp == other.opp
            && self.top == other.top
            && self.bot == other.bot
            && self.labels == other.labels
    }
}
impl Eq for FiniteDba {}

impl std::fmt::Debug for FiniteDba {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "FiniteDba(n={})", self.n)
    }
}

impl FiniteDba {
    /// Tables are row-major: entry for `(x, y)` sits at `x * n + y`.
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        n: usize,
        meet: Vec<u32>,
        join: Vec<u32>,
        neg: Vec<u32>,
        opp: Vec<u32>,
        top: usize,
        bot: usize,
        labels: Vec<String>,
    ) -> Result<Self> {
        if n > TABLE_CAP {
            return Err(Error::CarrierCapExceeded {
                carrier: n,
                cap: TABLE_CAP,
            });
        }
        for (table, expected) in [(&meet, n * n), (&join, n * n), (&neg, n), (&opp, n)] {
            if table.len() != expected {
                return Err(Error::TableSizeMismatch {
                    expected,
                    got: table.len(),
                });
            }
            if let Some(&v) = table.iter().find(|&&v| v as usize >= n) {
                return Err(Error::TableEntryOutOfRange {
                    value: v as usize,
                    size: n,
                });
            }
        }
        for idx in [top, bot] {
            if idx >= n {
                return Err(Error::IndexOutOfRange { index: idx, size: n });
            }
        }
        if labels.len() != n {
            return Err(Error::TableSizeMismatch {
                expected: n,
                got: labels.len(),
            });
        }
        Ok(FiniteDba {
            n,
            meet,
            join,
            neg,
            opp,
            top: top as u32,
            bot: bot as u32,
            labels,
            order: OnceLock::new(),
        })
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn top(&self) -> usize {
        self.top as usize
    }

    pub fn bot(&self) -> usize {
        self.bot as usize
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, x: usize) -> &str {
        &self.labels[x]
    }

    #[inline]
    pub fn meet(&self, x: usize, y: usize) -> usize {
        self.meet[x * self.n + y] as usize
    }

    #[inline]
    pub fn join(&self, x: usize, y: usize) -> usize {
        self.join[x * self.n + y] as usize
    }

    #[inline]
    pub fn neg(&self, x: usize) -> usize {
        self.neg[x] as usize
    }

    #[inline]
    pub fn opp(&self, x: usize) -> usize {
        self.opp[x] as usize
    }

    /// `x v y = neg(neg x meet neg y)`.
    #[inline]
    pub fn vee(&self, x: usize, y: usize) -> usize {
        self.neg(self.meet(self.neg(x), self.neg(y)))
    }

    /// `x ^ y = opp(opp x join opp y)`.
    #[inline]
    pub fn wedge(&self, x: usize, y: usize) -> usize {
        self.opp(self.join(self.opp(x), self.opp(y)))
    }

    /// `x meet x`.
    #[inline]
    pub fn meet_sq(&self, x: usize) -> usize {
        self.meet(x, x)
    }

    /// `x join x`.
    #[inline]
    pub fn join_sq(&self, x: usize) -> usize {
        self.join(x, x)
    }

    /// Raw quasi-order test, independent of the cached matrix.
    #[inline]
    pub fn leq_raw(&self, x: usize, y: usize) -> bool {
        self.meet(x, y) == self.meet_sq(x) && self.join(x, y) == self.join_sq(y)
    }

    pub fn order(&self) -> &QuasiOrder {
        self.order.get_or_init(|| QuasiOrder::compute(self))
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.order().leq(x, y)
    }

    /// Meet idempotents, ascending.
    pub fn meet_idempotents(&self) -> Vec<usize> {
        (0..self.n).filter(|&x| self.meet_sq(x) == x).collect()
    }

    /// Join idempotents, ascending.
    pub fn join_idempotents(&self) -> Vec<usize> {
        (0..self.n).filter(|&x| self.join_sq(x) == x).collect()
    }

    /// Union of the two idempotent sets, ascending.
    pub fn pure_elements(&self) -> Vec<usize> {
        (0..self.n)
            .filter(|&x| self.meet_sq(x) == x || self.join_sq(x) == x)
            .collect()
    }

    /// Iterated meet over a non-empty subset of the carrier.
    pub fn meet_all(&self, xs: &BitSet) -> Result<usize> {
        self.fold_nonempty(xs, |a, b| self.meet(a, b))
    }

    /// Iterated join over a non-empty subset.
    pub fn join_all(&self, xs: &BitSet) -> Result<usize> {
        self.fold_nonempty(xs, |a, b| self.join(a, b))
    }

    /// Iterated `v` over a non-empty subset.
    pub fn vee_all(&self, xs: &BitSet) -> Result<usize> {
        self.fold_nonempty(xs, |a, b| self.vee(a, b))
    }

    /// Iterated `^` over a non-empty subset.
    pub fn wedge_all(&self, xs: &BitSet) -> Result<usize> {
        self.fold_nonempty(xs, |a, b| self.wedge(a, b))
    }

    fn fold_nonempty(&self, xs: &BitSet, f: impl Fn(usize, usize) -> usize) -> Result<usize> {
        if xs.width() != self.n {
            return Err(Error::WidthMismatch {
                expected: self.n,
                got: xs.width(),
            });
        }
        let mut iter = xs.iter();
        let first = iter.next().ok_or(Error::EmptySubset)?;
        Ok(iter.fold(first, f))
    }

    pub fn check_element(&self, x: usize) -> Result<()> {
        if x >= self.n {
            return Err(Error::IndexOutOfRange {
                index: x,
                size: self.n,
            });
        }
        Ok(())
    }
}

/// The quasi-order `x <= y iff x meet y = x meet x and x join y = y join y`,
/// as a row-per-element bit matrix.
#[derive(Clone, Debug)]
pub struct QuasiOrder {
    rows: Vec<BitSet>,
}

impl QuasiOrder {
    fn compute(dba: &FiniteDba) -> Self {
        let n = dba.len();
        let rows = (0..n)
            .map(|x| BitSet::from_indices(n, (0..n).filter(|&y| dba.leq_raw(x, y))))
            .collect();
        QuasiOrder { rows }
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.rows[x].contains(y)
    }

    /// `{y : x <= y}`.
    pub fn up_set(&self, x: usize) -> &BitSet {
        &self.rows[x]
    }

    /// `{y : y <= x}`.
    pub fn down_set(&self, x: usize) -> BitSet {
        let n = self.rows.len();
        BitSet::from_indices(n, (0..n).filter(|&y| self.rows[y].contains(x)))
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }
}

/// One violated law with up to ten witness tuples.
#[derive(Clone, Debug)]
pub struct LawViolation {
    pub law: &'static str,
    pub witnesses: Vec<Vec<usize>>,
}

/// Result of sweeping a candidate against the axiom system.
///
/// `axioms` lists violated axioms 1a-11a, 1b-11b and 12; `derived` lists
/// failures of theorem-level identities that any true dBa satisfies, so a
/// non-empty `derived` with empty `axioms` cannot happen on a finite model
/// and would indicate a checker bug.
#[derive(Clone, Debug, Default)]
pub struct ValidationReport {
    pub axioms: Vec<LawViolation>,
    pub derived: Vec<LawViolation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.axioms.is_empty() && self.derived.is_empty()
    }

    pub fn first_counterexample(&self) -> Option<String> {
        let first = self.axioms.iter().chain(self.derived.iter()).next()?;
        let laws: Vec<&str> = self
            .axioms
            .iter()
            .chain(self.derived.iter())
            .map(|v| v.law)
            .collect();
        Some(format!(
            "laws {} violated; {} first fails at {:?}",
            laws.join(", "),
            first.law,
            first.witnesses.first()
        ))
    }
}

struct LawSink {
    law: &'static str,
    witnesses: Vec<Vec<usize>>,
}

impl LawSink {
    fn new(law: &'static str) -> Self {
        LawSink {
            law,
            witnesses: Vec::new(),
        }
    }

    fn hit(&mut self, witness: &[usize]) -> bool {
        if self.witnesses.len() < WITNESS_CAP {
            self.witnesses.push(witness.to_vec());
        }
        self.witnesses.len() >= WITNESS_CAP
    }

    fn into_violation(self) -> Option<LawViolation> {
        if self.witnesses.is_empty() {
            None
        } else {
            Some(LawViolation {
                law: self.law,
                witnesses: self.witnesses,
            })
        }
    }
}

fn sweep1(d: &FiniteDba, law: &'static str, f: impl Fn(usize) -> bool) -> Option<LawViolation> {
    let mut sink = LawSink::new(law);
    for x in 0..d.len() {
        if !f(x) && sink.hit(&[x]) {
            break;
        }
    }
    sink.into_violation()
}

fn sweep2(
    d: &FiniteDba,
    law: &'static str,
    f: impl Fn(usize, usize) -> bool,
) -> Option<LawViolation> {
    let mut sink = LawSink::new(law);
    'outer: for x in 0..d.len() {
        for y in 0..d.len() {
            if !f(x, y) && sink.hit(&[x, y]) {
                break 'outer;
            }
        }
    }
    sink.into_violation()
}

fn sweep3(
    d: &FiniteDba,
    law: &'static str,
    f: impl Fn(usize, usize, usize) -> bool,
) -> Option<LawViolation> {
    let mut sink = LawSink::new(law);
    'outer: for x in 0..d.len() {
        for y in 0..d.len() {
            for z in 0..d.len() {
                if !f(x, y, z) && sink.hit(&[x, y, z]) {
                    break 'outer;
                }
            }
        }
    }
    sink.into_violation()
}

fn sweep0(law: &'static str, ok: bool) -> Option<LawViolation> {
    if ok {
        None
    } else {
        Some(LawViolation {
            law,
            witnesses: vec![vec![]],
        })
    }
}

/// Sweeps every axiom over all element combinations and reports violations
/// with witnesses. Theorem-level identities are evaluated as derived checks.
pub fn validate_dba(d: &FiniteDba) -> ValidationReport {
    let top = d.top();
    let bot = d.bot();
    let axioms = [
        sweep2(d, "1a", |x, y| d.meet(d.meet_sq(x), y) == d.meet(x, y)),
        sweep2(d, "2a", |x, y| d.meet(x, y) == d.meet(y, x)),
        sweep3(d, "3a", |x, y, z| {
            d.meet(x, d.meet(y, z)) == d.meet(d.meet(x, y), z)
        }),
        sweep1(d, "4a", |x| d.neg(d.meet_sq(x)) == d.neg(x)),
        sweep2(d, "5a", |x, y| d.meet(x, d.join(x, y)) == d.meet_sq(x)),
        sweep3(d, "6a", |x, y, z| {
            d.meet(x, d.vee(y, z)) == d.vee(d.meet(x, y), d.meet(x, z))
        }),
        sweep2(d, "7a", |x, y| d.meet(x, d.vee(x, y)) == d.meet_sq(x)),
        sweep2(d, "8a", |x, y| {
            d.neg(d.neg(d.meet(x, y))) == d.meet(x, y)
        }),
        sweep1(d, "9a", |x| d.meet(x, d.neg(x)) == bot),
        sweep0("10a", d.neg(bot) == d.meet_sq(top)),
        sweep0("11a", d.neg(top) == bot),
        sweep2(d, "1b", |x, y| d.join(d.join_sq(x), y) == d.join(x, y)),
        sweep2(d, "2b", |x, y| d.join(x, y) == d.join(y, x)),
        sweep3(d, "3b", |x, y, z| {
            d.join(x, d.join(y, z)) == d.join(d.join(x, y), z)
        }),
        sweep1(d, "4b", |x| d.opp(d.join_sq(x)) == d.opp(x)),
        sweep2(d, "5b", |x, y| d.join(x, d.meet(x, y)) == d.join_sq(x)),
        sweep3(d, "6b", |x, y, z| {
            d.join(x, d.wedge(y, z)) == d.wedge(d.join(x, y), d.join(x, z))
        }),
        sweep2(d, "7b", |x, y| d.join(x, d.wedge(x, y)) == d.join_sq(x)),
        sweep2(d, "8b", |x, y| {
            d.opp(d.opp(d.join(x, y))) == d.join(x, y)
        }),
        sweep1(d, "9b", |x| d.join(x, d.opp(x)) == top),
        sweep0("10b", d.opp(top) == d.join_sq(bot)),
        sweep0("11b", d.opp(bot) == top),
        sweep1(d, "12", |x| {
            d.join(d.meet_sq(x), d.meet_sq(x)) == d.meet(d.join_sq(x), d.join_sq(x))
        }),
    ]
    .into_iter()
    .flatten()
    .collect();

    let derived = [
        sweep2(d, "eq-i", |x, y| d.meet(x, d.neg(d.join(x, y))) == bot),
        sweep2(d, "eq-ii", |x, y| {
            let u = d.neg(d.join(x, y));
            u == d.meet(u, d.neg(x))
        }),
        sweep2(d, "eq-iii", |x, y| {
            d.meet(x, y) == d.meet(x, d.neg(d.meet(x, d.neg(y))))
        }),
        sweep2(d, "eq-iv", |x, y| {
            d.join(x, d.meet(y, d.neg(x))) == d.join(x, d.meet_sq(y))
        }),
        sweep2(d, "eq-v", |x, y| {
            d.join(d.meet(x, y), d.meet(x, d.neg(y))) == d.join(d.meet_sq(x), d.meet_sq(x))
        }),
        sweep2(d, "eq-vi", |x, y| d.join(x, d.opp(d.meet(x, y))) == top),
        sweep2(d, "eq-vii", |x, y| {
            let u = d.opp(d.meet(x, y));
            u == d.join(u, d.opp(x))
        }),
        sweep2(d, "eq-viii", |x, y| {
            d.join(x, y) == d.join(x, d.opp(d.join(x, d.opp(y))))
        }),
        sweep2(d, "eq-ix", |x, y| {
            d.meet(x, d.join(y, d.opp(x))) == d.meet(x, d.join_sq(y))
        }),
        sweep2(d, "eq-x", |x, y| {
            d.meet(d.join(x, y), d.join(x, d.opp(y))) == d.meet(d.join_sq(x), d.join_sq(x))
        }),
        sweep2(d, "cor-i", |x, y| {
            d.leq_raw(d.meet(d.join(x, y), d.join(x, d.opp(y))), d.join_sq(x))
        }),
        sweep2(d, "cor-ii", |x, y| {
            d.leq_raw(d.meet_sq(x), d.join(d.meet(x, y), d.meet(x, d.neg(y))))
        }),
    ]
    .into_iter()
    .flatten()
    .collect();

    ValidationReport { axioms, derived }
}

/// Theorem-level properties every dBa satisfies; swept exhaustively and
/// reported per law. Used by the verification suites.
pub fn check_dba_theorems(d: &FiniteDba) -> Vec<LawViolation> {
    let bot = d.bot();
    let top = d.top();
    let in_meet = |x: usize| d.meet_sq(x) == x;
    let in_join = |x: usize| d.join_sq(x) == x;
    [
        sweep1(d, "bot-below", |x| {
            d.meet(x, bot) == bot && d.join(x, bot) == d.join_sq(x) && d.leq_raw(bot, x)
        }),
        sweep1(d, "top-above", |x| {
            d.join(x, top) == top && d.meet(x, top) == d.meet_sq(x) && d.leq_raw(x, top)
        }),
        sweep1(d, "reflexive", |x| d.leq_raw(x, x)),
        sweep2(d, "mutual-leq", |x, y| {
            (d.leq_raw(x, y) && d.leq_raw(y, x))
                == (d.meet_sq(x) == d.meet_sq(y) && d.join_sq(x) == d.join_sq(y))
        }),
        sweep2(d, "meet-below-join-above", |x, y| {
            let m = d.meet(x, y);
            let j = d.join(x, y);
            d.leq_raw(m, x) && d.leq_raw(m, y) && d.leq_raw(x, j) && d.leq_raw(y, j)
        }),
        sweep3(d, "leq-compatible", |x, y, a| {
            !d.leq_raw(x, y)
                || (d.leq_raw(d.meet(x, a), d.meet(y, a)) && d.leq_raw(d.join(x, a), d.join(y, a)))
        }),
        sweep1(d, "neg-into-idempotents", |x| {
            in_meet(d.neg(x)) && in_join(d.opp(x))
        }),
        sweep2(d, "leq-antitone", |x, y| {
            d.leq_raw(x, y) == (d.leq_raw(d.neg(y), d.neg(x)) && d.leq_raw(d.opp(y), d.opp(x)))
        }),
        sweep1(d, "double-negation", |x| {
            d.neg(d.neg(x)) == d.meet_sq(x) && d.opp(d.opp(x)) == d.join_sq(x)
        }),
        sweep2(d, "squares-into-idempotents", |x, y| {
            in_meet(d.meet_sq(x)) && in_meet(d.vee(x, y)) && in_join(d.join_sq(x)) && in_join(d.wedge(x, y))
        }),
        sweep2(d, "de-morgan-neg", |x, y| {
            d.neg(d.vee(x, y)) == d.meet(d.neg(x), d.neg(y))
                && d.neg(d.meet(x, y)) == d.vee(d.neg(x), d.neg(y))
        }),
        sweep2(d, "de-morgan-opp", |x, y| {
            d.opp(d.wedge(x, y)) == d.join(d.opp(x), d.opp(y))
                && d.opp(d.join(x, y)) == d.wedge(d.opp(x), d.opp(y))
        }),
        sweep2(d, "opp-galois", |x, y| {
            d.leq_raw(x, d.opp(y)) == d.leq_raw(y, d.opp(x))
        }),
        sweep2(d, "neg-galois", |x, y| {
            d.leq_raw(d.neg(x), y) == d.leq_raw(d.neg(y), x)
        }),
        sweep1(d, "triple-negation", |x| d.neg(d.neg(d.neg(x))) == d.neg(x)),
        sweep2(d, "meet-vee-join-chain", |x, y| {
            let m = d.meet(x, y);
            let v = d.vee(x, y);
            let w = d.wedge(x, y);
            let j = d.join(x, y);
            d.leq_raw(m, v) && d.leq_raw(v, j) && d.leq_raw(m, w) && d.leq_raw(w, j)
        }),
        sweep2(d, "leq-componentwise", |x, y| {
            d.leq_raw(x, y)
                == (d.leq_raw(d.meet_sq(x), d.meet_sq(y)) && d.leq_raw(d.join_sq(x), d.join_sq(y)))
        }),
    ]
    .into_iter()
    .flatten()
    .collect()
}

/// Classification verdicts per the contextual / fully contextual / pure
/// definitions.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DbaClass {
    pub contextual: bool,
    pub fully_contextual: bool,
    pub pure: bool,
}

/// Classifies a dBa. `pure` implies `contextual` on valid input; the
/// implication is asserted in debug builds.
pub fn classify_dba(d: &FiniteDba) -> DbaClass {
    let n = d.len();
    let pure = (0..n).all(|x| d.meet_sq(x) == x || d.join_sq(x) == x);

    let mut contextual = true;
    'anti: for x in 0..n {
        for y in 0..n {
            if x != y && d.leq_raw(x, y) && d.leq_raw(y, x) {
                contextual = false;
                break 'anti;
            }
        }
    }

    let fully_contextual = contextual && {
        let mut glue: HashMap<(usize, usize), u32> = HashMap::new();
        for z in 0..n {
            *glue.entry((d.meet_sq(z), d.join_sq(z))).or_insert(0) += 1;
        }
        d.meet_idempotents().iter().all(|&y| {
            d.join_idempotents()
                .iter()
                .filter(|&&x| d.join_sq(y) == d.meet_sq(x))
                .all(|&x| glue.get(&(y, x)) == Some(&1))
        })
    };

    debug_assert!(!pure || contextual, "a pure dBa must be contextual");
    DbaClass {
        contextual,
        fully_contextual,
        pure,
    }
}

/// The largest pure subalgebra: idempotents with restricted tables, plus the
/// positions of its elements within the parent carrier.
#[derive(Clone, Debug)]
pub struct PurePart {
    pub dba: FiniteDba,
    pub carrier: Vec<usize>,
}

pub fn pure_part(d: &FiniteDba) -> Result<PurePart> {
    let carrier = d.pure_elements();
    let mut position = vec![usize::MAX; d.len()];
    for (k, &x) in carrier.iter().enumerate() {
        position[x] = k;
    }
    let lookup = |x: usize, what: &str| -> Result<u32> {
        if position[x] == usize::MAX {
            Err(Error::NotClosed(format!(
                "{what} lands outside the pure elements at index {x}"
            )))
        } else {
            Ok(position[x] as u32)
        }
    };
    let k = carrier.len();
    let mut meet = Vec::with_capacity(k * k);
    let mut join = Vec::with_capacity(k * k);
    let mut neg = Vec::with_capacity(k);
    let mut opp = Vec::with_capacity(k);
    for &x in &carrier {
        for &y in &carrier {
            meet.push(lookup(d.meet(x, y), "meet")?);
            join.push(lookup(d.join(x, y), "join")?);
        }
        neg.push(lookup(d.neg(x), "negation")?);
        opp.push(lookup(d.opp(x), "dual negation")?);
    }
    let top = lookup(d.top(), "top")? as usize;
    let bot = lookup(d.bot(), "bottom")? as usize;
    let labels = carrier.iter().map(|&x| d.label(x).to_string()).collect();
    Ok(PurePart {
        dba: FiniteDba::new(k, meet, join, neg, opp, top, bot, labels)?,
        carrier,
    })
}

/// A Boolean algebra on explicit tables. `power_set` builds the algebra of
/// all subsets of `atom_count` generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BooleanTables {
    pub n: usize,
    pub meet: Vec<u32>,
    pub join: Vec<u32>,
    pub compl: Vec<u32>,
    pub top: usize,
    pub bot: usize,
    pub labels: Vec<String>,
}

impl BooleanTables {
    pub fn power_set(atom_count: usize) -> Self {
        assert!(atom_count < 12, "power-set construction limited to 2^12");
        let n = 1usize << atom_count;
        let full = (n - 1) as u32;
        let mut meet = Vec::with_capacity(n * n);
        let mut join = Vec::with_capacity(n * n);
        for x in 0..n as u32 {
            for y in 0..n as u32 {
                meet.push(x & y);
                join.push(x | y);
            }
        }
        let compl = (0..n as u32).map(|x| !x & full).collect();
        let labels = (0..n)
            .map(|x| {
                let members: Vec<String> =
                    (0..atom_count).filter(|i| x >> i & 1 == 1).map(|i| format!("a{i}")).collect();
                if members.is_empty() {
                    "0".to_string()
                } else {
                    members.join("")
                }
            })
            .collect();
        BooleanTables {
            n,
            meet,
            join,
            compl,
            top: n - 1,
            bot: 0,
            labels,
        }
    }

    #[inline]
    fn m(&self, x: usize, y: usize) -> usize {
        self.meet[x * self.n + y] as usize
    }

    #[inline]
    fn j(&self, x: usize, y: usize) -> usize {
        self.join[x * self.n + y] as usize
    }

    /// Certifies the tables as a Boolean algebra by exhibiting the
    /// isomorphism onto the power set of its atoms.
    pub fn validate(&self) -> Result<()> {
        let le = |a: usize, b: usize| self.m(a, b) == a;
        structural_boolean_check(
            self.n,
            &(0..self.n).collect::<Vec<_>>(),
            &le,
            &|a, b| self.m(a, b),
            &|a, b| self.j(a, b),
            &|a| self.compl[a] as usize,
            self.bot,
            self.top,
        )
        .map(|_| ())
    }
}

/// Atom analysis of one Boolean reduct: its members (as parent indices),
/// atoms, coatoms and bounds.
#[derive(Clone, Debug)]
pub struct BooleanReport {
    pub members: Vec<usize>,
    pub atoms: Vec<usize>,
    pub coatoms: Vec<usize>,
    pub bottom: usize,
    pub top: usize,
}

/// Checks that (`members`, `meet`, `join`, `compl`, `bottom`, `top`) is a
/// Boolean algebra by decomposing every element into the atoms below it and
/// matching the operations against set operations on atom masks. Complete
/// for finite inputs: the decomposition exists exactly when the structure is
/// Boolean.
#[allow(clippy::too_many_arguments)]
fn structural_boolean_check(
    parent_size: usize,
    members: &[usize],
    le: &dyn Fn(usize, usize) -> bool,
    meet: &dyn Fn(usize, usize) -> usize,
    join: &dyn Fn(usize, usize) -> usize,
    compl: &dyn Fn(usize) -> usize,
    bottom: usize,
    top: usize,
) -> Result<BooleanReport> {
    let mut position = vec![usize::MAX; parent_size];
    for (k, &x) in members.iter().enumerate() {
        position[x] = k;
    }
    let inside = |x: usize, what: &str| -> Result<()> {
        if x >= parent_size || position[x] == usize::MAX {
            Err(Error::NotBoolean(format!("{what} leaves the carrier at {x}")))
        } else {
            Ok(())
        }
    };
    inside(bottom, "bottom")?;
    inside(top, "top")?;
    for &x in members {
        inside(compl(x), "complement")?;
        for &y in members {
            inside(meet(x, y), "meet")?;
            inside(join(x, y), "join")?;
        }
    }

    let atoms: Vec<usize> = members
        .iter()
        .copied()
        .filter(|&a| a != bottom && members.iter().all(|&c| c == bottom || c == a || !le(c, a)))
        .collect();
    if atoms.len() > 30 {
        return Err(Error::NotBoolean(format!(
            "{} atoms exceed the decomposition limit",
            atoms.len()
        )));
    }
    let full: u64 = if atoms.is_empty() { 0 } else { (1u64 << atoms.len()) - 1 };
    if members.len() != 1usize << atoms.len() {
        return Err(Error::NotBoolean(format!(
            "{} elements cannot be the power set of {} atoms",
            members.len(),
            atoms.len()
        )));
    }
    let mask = |x: usize| -> u64 {
        atoms
            .iter()
            .enumerate()
            .filter(|&(_, &a)| le(a, x))
            .map(|(i, _)| 1u64 << i)
            .sum()
    };
    let masks: Vec<u64> = members.iter().map(|&x| mask(x)).collect();
    let mut seen = std::collections::HashSet::new();
    if !masks.iter().all(|&m| seen.insert(m)) {
        return Err(Error::NotBoolean(
            "two elements sit above the same atoms".to_string(),
        ));
    }
    let mask_of = |x: usize| masks[position[x]];
    if mask_of(bottom) != 0 || mask_of(top) != full {
        return Err(Error::NotBoolean("bounds decompose incorrectly".to_string()));
    }
    for &x in members {
        if mask_of(compl(x)) != !mask_of(x) & full {
            return Err(Error::NotBoolean(format!(
                "complement of {x} is not the atomwise complement"
            )));
        }
        for &y in members {
            if mask_of(meet(x, y)) != mask_of(x) & mask_of(y) {
                return Err(Error::NotBoolean(format!(
                    "meet of {x},{y} is not the atomwise intersection"
                )));
            }
            if mask_of(join(x, y)) != mask_of(x) | mask_of(y) {
                return Err(Error::NotBoolean(format!(
                    "join of {x},{y} is not the atomwise union"
                )));
            }
        }
    }
    let coatoms = members
        .iter()
        .copied()
        .filter(|&x| {
            !atoms.is_empty() && mask_of(x).count_ones() as usize == atoms.len() - 1
        })
        .collect();
    Ok(BooleanReport {
        members: members.to_vec(),
        atoms,
        coatoms,
        bottom,
        top,
    })
}

/// Validates the meet reduct `(D_meet, meet, v, neg, bot, neg bot)` and the
/// join reduct `(D_join, join, ^, opp, top, opp top)` as Boolean algebras,
/// returning atoms and coatoms of each.
pub fn boolean_reducts(d: &FiniteDba) -> Result<(BooleanReport, BooleanReport)> {
    let meet_members = d.meet_idempotents();
    let meet_report = structural_boolean_check(
        d.len(),
        &meet_members,
        &|a, b| d.leq_raw(a, b),
        &|a, b| d.meet(a, b),
        &|a, b| d.vee(a, b),
        &|a| d.neg(a),
        d.bot(),
        d.neg(d.bot()),
    )?;
    let join_members = d.join_idempotents();
    let join_report = structural_boolean_check(
        d.len(),
        &join_members,
        &|a, b| d.leq_raw(a, b),
        &|a, b| d.wedge(a, b),
        &|a, b| d.join(a, b),
        &|a| d.opp(a),
        d.opp(d.top()),
        d.top(),
    )?;
    Ok((meet_report, join_report))
}

/// Equips a Boolean algebra with a second negation equal to the first. The
/// result is a dBa that classifies fully contextual and pure.
pub fn from_boolean(bt: &BooleanTables) -> Result<FiniteDba> {
    bt.validate()?;
    FiniteDba::new(
        bt.n,
        bt.meet.clone(),
        bt.join.clone(),
        bt.compl.clone(),
        bt.compl.clone(),
        bt.top,
        bt.bot,
        bt.labels.clone(),
    )
}

/// Strips a dBa back to a Boolean algebra when the two negations coincide
/// and double negation is the identity. Absent otherwise.
pub fn to_boolean(d: &FiniteDba) -> Option<BooleanTables> {
    let hypotheses =
        (0..d.len()).all(|x| d.neg(x) == d.opp(x) && d.neg(d.neg(x)) == x);
    if !hypotheses {
        return None;
    }
    let bt = BooleanTables {
        n: d.len(),
        meet: (0..d.len() * d.len()).map(|i| d.meet[i]).collect(),
        join: (0..d.len() * d.len()).map(|i| d.join[i]).collect(),
        compl: (0..d.len()).map(|x| d.neg(x) as u32).collect(),
        top: d.top(),
        bot: d.bot(),
        labels: d.labels.clone(),
    };
    bt.validate().ok()?;
    Some(bt)
}

/// A map between two dBas with its checked properties.
#[derive(Clone, Debug)]
pub struct DbaHom {
    pub map: Vec<usize>,
    pub homomorphism: bool,
    pub quasi_injective: bool,
    pub injective: bool,
    pub surjective: bool,
    pub failure: Option<String>,
}

impl DbaHom {
    pub fn is_isomorphism(&self) -> bool {
        self.homomorphism && self.injective && self.surjective
    }

    pub fn is_quasi_isomorphism(&self) -> bool {
        self.homomorphism && self.quasi_injective && self.surjective
    }
}

/// Verifies the six homomorphism equations plus the quasi-injectivity,
/// injectivity and surjectivity flags of `map : src -> dst`.
pub fn check_hom(src: &FiniteDba, dst: &FiniteDba, map: &[usize]) -> Result<DbaHom> {
    crate::context::check_map(map, src.len(), dst.len())?;
    let mut failure = None;
    let mut fail = |msg: String| {
        if failure.is_none() {
            failure = Some(msg);
        }
    };
    let mut homomorphism = map.get(src.top()).copied() == Some(dst.top())
        && map.get(src.bot()).copied() == Some(dst.bot());
    if !homomorphism {
        fail("top or bottom not preserved".to_string());
    }
    for x in 0..src.len() {
        if map[src.neg(x)] != dst.neg(map[x]) || map[src.opp(x)] != dst.opp(map[x]) {
            homomorphism = false;
            fail(format!("negations not preserved at {x}"));
            break;
        }
        for y in 0..src.len() {
            if map[src.meet(x, y)] != dst.meet(map[x], map[y])
                || map[src.join(x, y)] != dst.join(map[x], map[y])
            {
                homomorphism = false;
                fail(format!("binary operations not preserved at ({x},{y})"));
                break;
            }
        }
        if !homomorphism {
            break;
        }
    }
    let mut quasi_injective = true;
    'qi: for x in 0..src.len() {
        for y in 0..src.len() {
            if src.leq_raw(x, y) != dst.leq_raw(map[x], map[y]) {
                quasi_injective = false;
                break 'qi;
            }
        }
    }
    let injective = crate::context::is_injective(map);
    let mut hit = vec![false; dst.len()];
    for &v in map {
        hit[v] = true;
    }
    let surjective = hit.into_iter().all(|b| b);
    Ok(DbaHom {
        map: map.to_vec(),
        homomorphism,
        quasi_injective,
        injective,
        surjective,
        failure,
    })
}

/// Extends an isomorphism between the pure parts of two fully contextual
/// dBas to a full isomorphism: each `x` maps to the unique element gluing
/// the images of `x meet x` and `x join x`.
///
/// `pure_map[i]` is the image of element `i` of `pure_part(d)` inside
/// `pure_part(m)`.
pub fn extend_pure_iso(d: &FiniteDba, m: &FiniteDba, pure_map: &[usize]) -> Result<DbaHom> {
    if !classify_dba(d).fully_contextual || !classify_dba(m).fully_contextual {
        return Err(Error::NotFullyContextual);
    }
    let pd = pure_part(d)?;
    let pm = pure_part(m)?;
    let hom = check_hom(&pd.dba, &pm.dba, pure_map)?;
    if !hom.is_isomorphism() {
        return Err(Error::NotPureIso(
            hom.failure
                .unwrap_or_else(|| "not bijective on the pure parts".to_string()),
        ));
    }
    // translate to parent carriers
    let mut d_position = vec![usize::MAX; d.len()];
    for (k, &x) in pd.carrier.iter().enumerate() {
        d_position[x] = k;
    }
    let image = |x: usize| -> usize { pm.carrier[pure_map[d_position[x]]] };

    let mut glue: HashMap<(usize, usize), Vec<usize>> = HashMap::new();
    for c in 0..m.len() {
        glue.entry((m.meet_sq(c), m.join_sq(c))).or_default().push(c);
    }
    let mut map = Vec::with_capacity(d.len());
    for x in 0..d.len() {
        let key = (image(d.meet_sq(x)), image(d.join_sq(x)));
        match glue.get(&key).map(Vec::as_slice) {
            Some([c]) => map.push(*c),
            Some(cs) => {
                return Err(Error::Internal(format!(
                    "{} glue candidates for element {x}",
                    cs.len()
                )))
            }
            None => {
                return Err(Error::Internal(format!("no glue candidate for element {x}")))
            }
        }
    }
    let extension = check_hom(d, m, &map)?;
    if !extension.is_isomorphism() {
        return Err(Error::Internal(
            "glued extension failed the isomorphism check".to_string(),
        ));
    }
    for &x in &pd.carrier {
        if map[x] != image(x) {
            return Err(Error::Internal(format!(
                "extension disagrees with the pure map at {x}"
            )));
        }
    }
    Ok(extension)
}

/// All automorphisms of a small dBa, found by backtracking over images with
/// operation-consistency pruning. Carriers above `cap` are rejected.
pub fn enumerate_automorphisms(d: &FiniteDba, cap: usize) -> Result<Vec<Vec<usize>>> {
    if d.len() > cap {
        return Err(Error::CarrierCapExceeded {
            carrier: d.len(),
            cap,
        });
    }
    let n = d.len();
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    let mut out = Vec::new();

    fn consistent(d: &FiniteDba, map: &[usize], k: usize) -> bool {
        let v = map[k];
        if k == d.top() && v != d.top() {
            return false;
        }
        if k == d.bot() && v != d.bot() {
            return false;
        }
        let defined = |i: usize| map[i] != usize::MAX;
        if defined(d.neg(k)) && map[d.neg(k)] != d.neg(v) {
            return false;
        }
        if defined(d.opp(k)) && map[d.opp(k)] != d.opp(v) {
            return false;
        }
        for j in 0..map.len() {
            if !defined(j) {
                continue;
            }
            for (a, b) in [(k, j), (j, k)] {
                if defined(d.meet(a, b)) && map[d.meet(a, b)] != d.meet(map[a], map[b]) {
                    return false;
                }
                if defined(d.join(a, b)) && map[d.join(a, b)] != d.join(map[a], map[b]) {
                    return false;
                }
            }
        }
        true
    }

    fn recurse(
        d: &FiniteDba,
        map: &mut Vec<usize>,
        used: &mut Vec<bool>,
        k: usize,
        out: &mut Vec<Vec<usize>>,
    ) {
        if k == map.len() {
            out.push(map.clone());
            return;
        }
        for v in 0..map.len() {
            if used[v] {
                continue;
            }
            map[k] = v;
            used[v] = true;
            if consistent(d, map, k) {
                recurse(d, map, used, k + 1, out);
            }
            map[k] = usize::MAX;
            used[v] = false;
        }
    }

    recurse(d, &mut map, &mut used, 0, &mut out);
    // the pruning already enforces full consistency once every image is set,
    // but keep the final check cheap and explicit
    out.retain(|map| check_hom(d, d, map).map(|h| h.is_isomorphism()).unwrap_or(false));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::concept::{build_proto_dba, build_semi_dba, DEFAULT_CANDIDATE_CAP};
    use crate::samples;

    #[test]
    fn boolean_power_sets_validate_and_classify() {
        for atoms in 0..=3 {
            let bt = BooleanTables::power_set(atoms);
            let d = from_boolean(&bt).unwrap();
            let report = validate_dba(&d);
            assert!(report.is_valid(), "2^{atoms}: {:?}", report.first_counterexample());
            assert!(check_dba_theorems(&d).is_empty());
            let class = classify_dba(&d);
            assert!(class.contextual && class.fully_contextual && class.pure);
            assert_eq!(d.neg(d.bot()), d.top());
        }
    }

    #[test]
    fn corrupted_negation_violates_11a() {
        let bt = BooleanTables::power_set(1);
        let d = from_boolean(&bt).unwrap();
        let mut neg: Vec<u32> = (0..d.len()).map(|x| d.neg(x) as u32).collect();
        neg[d.top()] = d.top() as u32;
        let corrupt = FiniteDba::new(
            d.len(),
            d.meet.clone(),
            d.join.clone(),
            neg,
            d.opp.clone(),
            d.top(),
            d.bot(),
            d.labels().to_vec(),
        )
        .unwrap();
        let report = validate_dba(&corrupt);
        assert!(report.axioms.iter().any(|v| v.law == "11a"));
    }

    #[test]
    fn questionnaire_algebras_classify() {
        let ctx = samples::questionnaire_context();
        let semi = build_semi_dba(&ctx, DEFAULT_CANDIDATE_CAP).unwrap();
        let class = classify_dba(&semi.dba);
        assert!(class.pure && !class.fully_contextual && class.contextual);

        let proto = build_proto_dba(&ctx, DEFAULT_CANDIDATE_CAP).unwrap();
        let class = classify_dba(&proto.dba);
        assert!(class.fully_contextual && !class.pure && class.contextual);
    }

    #[test]
    fn small_concept_algebras_validate() {
        let ctx = samples::small_context(3, 3, 11);
        for alg in [
            build_semi_dba(&ctx, DEFAULT_CANDIDATE_CAP).unwrap(),
            build_proto_dba(&ctx, DEFAULT_CANDIDATE_CAP).unwrap(),
        ] {
            let report = validate_dba(&alg.dba);
            assert!(report.is_valid(), "{:?}", report.first_counterexample());
            assert!(check_dba_theorems(&alg.dba).is_empty());
        }
    }

    #[test]
    #[ignore = "exhaustive O(n^3) sweep over the 2279- and 2083-element algebras, takes minutes"]
    fn questionnaire_algebras_validate_fully() {
        let ctx = samples::questionnaire_context();
        for alg in [
            build_semi_dba(&ctx, DEFAULT_CANDIDATE_CAP).unwrap(),
            build_proto_dba(&ctx, DEFAULT_CANDIDATE_CAP).unwrap(),
        ] {
            let report = validate_dba(&alg.dba);
            assert!(report.is_valid(), "{:?}", report.first_counterexample());
        }
    }

    #[test]
    fn restricted_questionnaire_automorphism_extends() {
        // three objects and four attributes keep the search space small
        let big = samples::questionnaire_context();
        let objs = big.object_set(&["q1", "q2", "q3"]).unwrap();
        let attrs = big.attribute_set(&["s1", "s2", "s3", "s4"]).unwrap();
        let ctx = big.subcontext(&objs, &attrs).unwrap();
        let proto = build_proto_dba(&ctx, DEFAULT_CANDIDATE_CAP).unwrap();
        let d = &proto.dba;
        assert!(classify_dba(d).fully_contextual);
        let pp = pure_part(d).unwrap();
        let autos = enumerate_automorphisms(&pp.dba, 64).unwrap();
        assert!(!autos.is_empty());
        for auto in &autos {
            let extension = extend_pure_iso(d, d, auto).unwrap();
            assert!(extension.is_isomorphism());
            for (pos, &parent) in pp.carrier.iter().enumerate() {
                assert_eq!(extension.map[parent], pp.carrier[auto[pos]]);
            }
        }
    }

    #[test]
    fn quasi_order_bounds() {
        let ctx = samples::small_context(3, 4, 5);
        let d = build_proto_dba(&ctx, DEFAULT_CANDIDATE_CAP).unwrap().dba;
        let order = d.order();
        for x in 0..d.len() {
            assert!(order.leq(d.bot(), x));
            assert!(order.leq(x, d.top()));
        }
    }

    #[test]
    fn boolean_order_matches_subset_order() {
        let d = from_boolean(&BooleanTables::power_set(2)).unwrap();
        for x in 0..4usize {
            for y in 0..4usize {
                assert_eq!(d.leq(x, y), x & y == x);
            }
        }
    }

    #[test]
    fn pure_part_is_idempotent_and_matches_semiconcepts() {
        let ctx = samples::questionnaire_context();
        let proto = build_proto_dba(&ctx, DEFAULT_CANDIDATE_CAP).unwrap();
        let semi = build_semi_dba(&ctx, DEFAULT_CANDIDATE_CAP).unwrap();
        let pp = pure_part(&proto.dba).unwrap();
        let pairs: Vec<_> = pp.carrier.iter().map(|&i| proto.pairs[i].clone()).collect();
        assert_eq!(pairs, semi.pairs);
        assert!(classify_dba(&pp.dba).pure);
        let pp2 = pure_part(&pp.dba).unwrap();
        assert_eq!(pp2.dba.len(), pp.dba.len());

        let b = from_boolean(&BooleanTables::power_set(2)).unwrap();
        assert_eq!(pure_part(&b).unwrap().dba.len(), b.len());
    }

    #[test]
    fn questionnaire_reducts() {
        let ctx = samples::questionnaire_context();
        let proto = build_proto_dba(&ctx, DEFAULT_CANDIDATE_CAP).unwrap();
        let (meet_side, join_side) = boolean_reducts(&proto.dba).unwrap();
        assert_eq!(meet_side.members.len(), 64);
        assert_eq!(meet_side.atoms.len(), 6);
        assert_eq!(join_side.members.len(), 2048);
        assert_eq!(join_side.coatoms.len(), 11);
    }

    #[test]
    fn boolean_reducts_of_boolean_are_whole() {
        let d = from_boolean(&BooleanTables::power_set(2)).unwrap();
        let (a, b) = boolean_reducts(&d).unwrap();
        assert_eq!(a.members.len(), 4);
        assert_eq!(b.members.len(), 4);
        assert_eq!(a.atoms.len(), 2);
        assert_eq!(b.coatoms.len(), 2);
    }

    #[test]
    fn to_boolean_round_trip_and_absence() {
        let bt = BooleanTables::power_set(3);
        let d = from_boolean(&bt).unwrap();
        assert_eq!(to_boolean(&d).unwrap(), bt);

        let ctx = samples::questionnaire_context();
        let proto = build_proto_dba(&ctx, DEFAULT_CANDIDATE_CAP).unwrap();
        assert!(to_boolean(&proto.dba).is_none());
        let semi = build_semi_dba(&ctx, DEFAULT_CANDIDATE_CAP).unwrap();
        assert!(to_boolean(&semi.dba).is_none());
    }

    #[test]
    fn hom_checks() {
        let d = from_boolean(&BooleanTables::power_set(2)).unwrap();
        let id: Vec<usize> = (0..d.len()).collect();
        let hom = check_hom(&d, &d, &id).unwrap();
        assert!(hom.is_isomorphism() && hom.quasi_injective);

        let constant = vec![d.top(); d.len()];
        let hom = check_hom(&d, &d, &constant).unwrap();
        assert!(!hom.homomorphism);

        assert!(check_hom(&d, &d, &[0, 1]).is_err());
        assert!(check_hom(&d, &d, &[0, 1, 2, 9]).is_err());
    }

    #[test]
    fn semiconcepts_include_into_protoconcepts() {
        let ctx = samples::small_context(3, 3, 2);
        let semi = build_semi_dba(&ctx, DEFAULT_CANDIDATE_CAP).unwrap();
        let proto = build_proto_dba(&ctx, DEFAULT_CANDIDATE_CAP).unwrap();
        let map: Vec<usize> = semi
            .pairs
            .iter()
            .map(|p| proto.index_of(&p.0, &p.1).expect("semiconcepts are protoconcepts"))
            .collect();
        let hom = check_hom(&semi.dba, &proto.dba, &map).unwrap();
        assert!(hom.homomorphism && hom.injective && hom.quasi_injective);
    }

    #[test]
    fn extend_identity_recovers_identity() {
        let ctx = samples::small_context(3, 3, 8);
        let proto = build_proto_dba(&ctx, DEFAULT_CANDIDATE_CAP).unwrap();
        let pp = pure_part(&proto.dba).unwrap();
        let id: Vec<usize> = (0..pp.dba.len()).collect();
        let f = extend_pure_iso(&proto.dba, &proto.dba, &id).unwrap();
        assert!(f.is_isomorphism());
        assert_eq!(f.map, (0..proto.dba.len()).collect::<Vec<_>>());
    }

    #[test]
    fn extend_rejects_non_surjective_pure_maps() {
        let ctx = samples::small_context(2, 2, 3);
        let proto = build_proto_dba(&ctx, DEFAULT_CANDIDATE_CAP).unwrap();
        let pp = pure_part(&proto.dba).unwrap();
        // collapse one element onto another: not a bijection
        let mut map: Vec<usize> = (0..pp.dba.len()).collect();
        if map.len() >= 2 {
            let last = map.len() - 1;
            let target = map
                .iter()
                .position(|&v| v != last)
                .expect("some other image exists");
            map[last] = map[target];
        }
        assert!(extend_pure_iso(&proto.dba, &proto.dba, &map).is_err());
    }

    #[test]
    fn automorphisms_of_square_boolean() {
        // 2^2 has exactly two automorphisms: identity and the atom swap
        let d = from_boolean(&BooleanTables::power_set(2)).unwrap();
        let autos = enumerate_automorphisms(&d, 16).unwrap();
        assert_eq!(autos.len(), 2);
        assert!(autos.contains(&vec![0, 1, 2, 3]));
        assert!(autos.contains(&vec![0, 2, 1, 3]));
    }

    #[test]
    fn iterated_operations() {
        let d = from_boolean(&BooleanTables::power_set(2)).unwrap();
        let all = BitSet::full(d.len());
        assert_eq!(d.meet_all(&all).unwrap(), d.bot());
        assert_eq!(d.join_all(&all).unwrap(), d.top());
        assert!(d.meet_all(&BitSet::empty(d.len())).is_err());

        // from two elements up, iterated vee lands in the meet idempotents
        // and wedge in the join side, and both sit inside the meet/join chain
        let ctx = samples::small_context(3, 3, 4);
        let a = build_proto_dba(&ctx, DEFAULT_CANDIDATE_CAP).unwrap().dba;
        for mask in 1u64..64.min(1 << a.len().min(6)) {
            let xs = BitSet::from_mask(a.len(), mask);
            if xs.len() < 2 {
                continue;
            }
            let v = a.vee_all(&xs).unwrap();
            let w = a.wedge_all(&xs).unwrap();
            assert_eq!(a.meet_sq(v), v);
            assert_eq!(a.join_sq(w), w);
            let m = a.meet_all(&xs).unwrap();
            let j = a.join_all(&xs).unwrap();
            assert!(a.leq_raw(m, v) && a.leq_raw(v, j));
            assert!(a.leq_raw(m, w) && a.leq_raw(w, j));
        }
    }
}
