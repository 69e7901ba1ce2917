//! Finite formal contexts and their derivation operators.
//!
//! A context is a finite set of objects, a finite set of attributes and an
//! incidence relation between them. Five operators act on its subsets: the
//! classical derivations `'` on both sides, the modal pair `square`/`diamond`
//! taking attribute sets to object sets, and their converses
//! `black_square`/`black_diamond` taking object sets to attribute sets.

use crate::error::{Error, Result};
use crate::set::BitSet;

/// Subset of the object side of a context.
pub type ObjectSet = BitSet;
/// Subset of the attribute side of a context.
pub type AttributeSet = BitSet;

/// A finite formal context.
///
/// Object and attribute order is the order of ingestion; it is the canonical
/// order everywhere downstream, so reports and exports are reproducible.
/// Empty sides are accepted and all operators evaluate literally on them.
#[derive(Clone, PartialEq, Eq)]
pub struct FormalContext {
    objects: Vec<String>,
    attributes: Vec<String>,
    rows: Vec<BitSet>,
    cols: Vec<BitSet>,
}

impl FormalContext {
    pub fn new(
        objects: Vec<String>,
        attributes: Vec<String>,
        incidence: &[Vec<bool>],
    ) -> Result<Self> {
        check_distinct(&objects)?;
        check_distinct(&attributes)?;
        if incidence.len() != objects.len()
            || incidence.iter().any(|r| r.len() != attributes.len())
        {
            return Err(Error::DimensionMismatch {
                rows: incidence.len(),
                cols: incidence.first().map_or(0, |r| r.len()),
                expected_rows: objects.len(),
                expected_cols: attributes.len(),
            });
        }
        let m = attributes.len();
        let g = objects.len();
        let rows: Vec<BitSet> = incidence
            .iter()
            .map(|r| BitSet::from_indices(m, r.iter().enumerate().filter(|(_, &b)| b).map(|(j, _)| j)))
            .collect();
        let cols: Vec<BitSet> = (0..m)
            .map(|j| BitSet::from_indices(g, (0..g).filter(|&i| rows[i].contains(j))))
            .collect();
        Ok(FormalContext {
            objects,
            attributes,
            rows,
            cols,
        })
    }

    /// Builds a context from a list of incident (object, attribute) pairs.
    pub fn from_pairs(
        objects: Vec<String>,
        attributes: Vec<String>,
        pairs: &[(usize, usize)],
    ) -> Result<Self> {
        let mut incidence = vec![vec![false; attributes.len()]; objects.len()];
        for &(g, m) in pairs {
            if g >= objects.len() {
                return Err(Error::IndexOutOfRange {
                    index: g,
                    size: objects.len(),
                });
            }
            if m >= attributes.len() {
                return Err(Error::IndexOutOfRange {
                    index: m,
                    size: attributes.len(),
                });
            }
            incidence[g][m] = true;
        }
        Self::new(objects, attributes, &incidence)
    }

    pub fn object_count(&self) -> usize {
        self.objects.len()
    }

    pub fn attribute_count(&self) -> usize {
        self.attributes.len()
    }

    pub fn objects(&self) -> &[String] {
        &self.objects
    }

    pub fn attributes(&self) -> &[String] {
        &self.attributes
    }

    pub fn has(&self, object: usize, attribute: usize) -> bool {
        self.rows[object].contains(attribute)
    }

    /// Attribute row of one object.
    pub fn row(&self, object: usize) -> &BitSet {
        &self.rows[object]
    }

    /// Object column of one attribute.
    pub fn col(&self, attribute: usize) -> &BitSet {
        &self.cols[attribute]
    }

    pub fn incidence_count(&self) -> usize {
        self.rows.iter().map(BitSet::len).sum()
    }

    pub fn incidence_matrix(&self) -> Vec<Vec<bool>> {
        self.rows
            .iter()
            .map(|r| (0..self.attributes.len()).map(|j| r.contains(j)).collect())
            .collect()
    }

    pub fn check_object_set(&self, a: &ObjectSet) -> Result<()> {
        if a.width() != self.objects.len() {
            return Err(Error::WidthMismatch {
                expected: self.objects.len(),
                got: a.width(),
            });
        }
        Ok(())
    }

    pub fn check_attribute_set(&self, b: &AttributeSet) -> Result<()> {
        if b.width() != self.attributes.len() {
            return Err(Error::WidthMismatch {
                expected: self.attributes.len(),
                got: b.width(),
            });
        }
        Ok(())
    }

    /// `A' = {m : every object of A has m}`. The empty set derives to the
    /// full attribute set.
    pub fn derive_intent(&self, a: &ObjectSet) -> Result<AttributeSet> {
        self.check_object_set(a)?;
        let mut out = BitSet::full(self.attributes.len());
        for g in a.iter() {
            out = out.intersection(&self.rows[g]);
        }
        Ok(out)
    }

    /// `B' = {g : g has every attribute of B}`.
    pub fn derive_extent(&self, b: &AttributeSet) -> Result<ObjectSet> {
        self.check_attribute_set(b)?;
        let mut out = BitSet::full(self.objects.len());
        for m in b.iter() {
            out = out.intersection(&self.cols[m]);
        }
        Ok(out)
    }

    /// `B^diamond = {g : R(g) meets B}` (possibility).
    pub fn diamond(&self, b: &AttributeSet) -> Result<ObjectSet> {
        self.check_attribute_set(b)?;
        Ok(BitSet::from_indices(
            self.objects.len(),
            (0..self.objects.len()).filter(|&g| self.rows[g].intersects(b)),
        ))
    }

    /// `B^square = {g : R(g) is contained in B}` (necessity).
    pub fn square(&self, b: &AttributeSet) -> Result<ObjectSet> {
        self.check_attribute_set(b)?;
        Ok(BitSet::from_indices(
            self.objects.len(),
            (0..self.objects.len()).filter(|&g| self.rows[g].is_subset(b)),
        ))
    }

    /// `A^blacksquare = {m : R^{-1}(m) is contained in A}`.
    pub fn black_square(&self, a: &ObjectSet) -> Result<AttributeSet> {
        self.check_object_set(a)?;
        Ok(BitSet::from_indices(
            self.attributes.len(),
            (0..self.attributes.len()).filter(|&m| self.cols[m].is_subset(a)),
        ))
    }

    /// `A^blackdiamond = {m : R^{-1}(m) meets A}`.
    pub fn black_diamond(&self, a: &ObjectSet) -> Result<AttributeSet> {
        self.check_object_set(a)?;
        Ok(BitSet::from_indices(
            self.attributes.len(),
            (0..self.attributes.len()).filter(|&m| self.cols[m].intersects(a)),
        ))
    }

    /// Same sides, incidence negated. An involution.
    pub fn complement(&self) -> FormalContext {
        let rows: Vec<BitSet> = self.rows.iter().map(BitSet::complement).collect();
        let cols: Vec<BitSet> = self.cols.iter().map(BitSet::complement).collect();
        FormalContext {
            objects: self.objects.clone(),
            attributes: self.attributes.clone(),
            rows,
            cols,
        }
    }

    /// Restriction to the given object and attribute subsets, keeping order.
    pub fn subcontext(&self, objs: &ObjectSet, attrs: &AttributeSet) -> Result<FormalContext> {
        self.check_object_set(objs)?;
        self.check_attribute_set(attrs)?;
        let objects: Vec<String> = objs.iter().map(|g| self.objects[g].clone()).collect();
        let attributes: Vec<String> = attrs.iter().map(|m| self.attributes[m].clone()).collect();
        let incidence: Vec<Vec<bool>> = objs
            .iter()
            .map(|g| attrs.iter().map(|m| self.has(g, m)).collect())
            .collect();
        FormalContext::new(objects, attributes, &incidence)
    }

    /// `A' = B` and `B' = A`.
    pub fn is_concept(&self, a: &ObjectSet, b: &AttributeSet) -> Result<bool> {
        Ok(self.derive_intent(a)? == *b && self.derive_extent(b)? == *a)
    }

    /// `A^blacksquare = B` and `B^diamond = A`.
    pub fn is_oo_concept(&self, a: &ObjectSet, b: &AttributeSet) -> Result<bool> {
        Ok(self.black_square(a)? == *b && self.diamond(b)? == *a)
    }

    pub fn object_index(&self, name: &str) -> Option<usize> {
        self.objects.iter().position(|o| o == name)
    }

    pub fn attribute_index(&self, name: &str) -> Option<usize> {
        self.attributes.iter().position(|m| m == name)
    }

    /// Object set by names; unknown names are an error.
    pub fn object_set(&self, names: &[&str]) -> Result<ObjectSet> {
        let mut set = BitSet::empty(self.objects.len());
        for n in names {
            let i = self
                .object_index(n)
                .ok_or_else(|| Error::Parse(format!("unknown object `{n}`")))?;
            set.insert(i);
        }
        Ok(set)
    }

    /// Attribute set by names.
    pub fn attribute_set(&self, names: &[&str]) -> Result<AttributeSet> {
        let mut set = BitSet::empty(self.attributes.len());
        for n in names {
            let i = self
                .attribute_index(n)
                .ok_or_else(|| Error::Parse(format!("unknown attribute `{n}`")))?;
            set.insert(i);
        }
        Ok(set)
    }
}

impl std::fmt::Debug for FormalContext {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "FormalContext({}x{}, {} incidences)",
            self.objects.len(),
            self.attributes.len(),
            self.incidence_count()
        )
    }
}

fn check_distinct(names: &[String]) -> Result<()> {
    let mut seen = std::collections::HashSet::new();
    for n in names {
        if !seen.insert(n) {
            return Err(Error::DuplicateIdentifier(n.clone()));
        }
    }
    Ok(())
}

/// Verdict of a context-morphism check, strongest class last.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum MorphismClass {
    None,
    Homomorphism,
    Embedding,
    Isomorphism,
}

/// Checks `(alpha, beta)` against `g R1 m <=> alpha(g) R2 beta(m)` and
/// reports the strongest class among none / homomorphism / embedding /
/// isomorphism.
pub fn check_context_morphism(
    ctx1: &FormalContext,
    ctx2: &FormalContext,
    object_map: &[usize],
    attribute_map: &[usize],
) -> Result<MorphismClass> {
    check_map(object_map, ctx1.object_count(), ctx2.object_count())?;
    check_map(attribute_map, ctx1.attribute_count(), ctx2.attribute_count())?;
    for (g, &og) in object_map.iter().enumerate() {
        for (m, &am) in attribute_map.iter().enumerate() {
            if ctx1.has(g, m) != ctx2.has(og, am) {
                return Ok(MorphismClass::None);
            }
        }
    }
    let inj = is_injective(object_map) && is_injective(attribute_map);
    if !inj {
        return Ok(MorphismClass::Homomorphism);
    }
    let bij = object_map.len() == ctx2.object_count()
        && attribute_map.len() == ctx2.attribute_count();
    Ok(if bij {
        MorphismClass::Isomorphism
    } else {
        MorphismClass::Embedding
    })
}

pub(crate) fn check_map(map: &[usize], expected_len: usize, range: usize) -> Result<()> {
    if map.len() != expected_len {
        return Err(Error::MapLengthMismatch {
            expected: expected_len,
            got: map.len(),
        });
    }
    for (position, &value) in map.iter().enumerate() {
        if value >= range {
            return Err(Error::MapOutOfRange {
                position,
                value,
                size: range,
            });
        }
    }
    Ok(())
}

pub(crate) fn is_injective(map: &[usize]) -> bool {
    let mut seen = std::collections::HashSet::new();
    map.iter().all(|&v| seen.insert(v))
}
