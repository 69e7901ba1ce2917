//! File formats: Burmeister `.cxt`, the JSON schemas for contexts, dBas,
//! CTS and enumerated algebras, and DOT export of order diagrams.

use serde::{Deserialize, Serialize};

use crate::concept::ConceptAlgebra;
use crate::context::FormalContext;
use crate::dba::FiniteDba;
use crate::error::{Error, Result};
use crate::set::BitSet;
use crate::topology::{Cts, FiniteTopology};

/// Parses the Burmeister format: `B`, a name line (possibly empty), the two
/// cardinalities, object names, attribute names, then one `X`/`.` row per
/// object. Returns the context and the name line.
pub fn read_cxt(text: &str) -> Result<(FormalContext, String)> {
    let mut lines = text.lines();
    let mut next = |what: &str| {
        lines
            .next()
            .ok_or_else(|| Error::Parse(format!("unexpected end of file, expected {what}")))
    };
    let header = next("header `B`")?;
    if header.trim_end() != "B" {
        return Err(Error::Parse(format!("expected `B` header, found `{header}`")));
    }
    let name = next("name line")?.to_string();
    let g: usize = next("object count")?
        .trim()
        .parse()
        .map_err(|e| Error::Parse(format!("bad object count: {e}")))?;
    let m: usize = next("attribute count")?
        .trim()
        .parse()
        .map_err(|e| Error::Parse(format!("bad attribute count: {e}")))?;
    let mut objects = Vec::with_capacity(g);
    for i in 0..g {
        objects.push(next(&format!("object name {i}"))?.to_string());
    }
    let mut attributes = Vec::with_capacity(m);
    for j in 0..m {
        attributes.push(next(&format!("attribute name {j}"))?.to_string());
    }
    let mut incidence = Vec::with_capacity(g);
    for i in 0..g {
        let row = next(&format!("incidence row {i}"))?;
        if row.chars().count() != m {
            return Err(Error::Parse(format!(
                "incidence row {i} has {} cells, expected {m}",
                row.chars().count()
            )));
        }
        let cells: Vec<bool> = row
            .chars()
            .map(|c| match c {
                'X' => Ok(true),
                '.' => Ok(false),
                other => Err(Error::Parse(format!(
                    "unexpected incidence character `{other}` in row {i}"
                ))),
            })
            .collect::<Result<_>>()?;
        incidence.push(cells);
    }
    Ok((FormalContext::new(objects, attributes, &incidence)?, name))
}

/// Writes the Burmeister format, bit-exact: the same bytes parse back to an
/// equal context.
pub fn write_cxt(ctx: &FormalContext, name: &str) -> String {
    let mut out = String::new();
    out.push_str("B\n");
    out.push_str(name);
    out.push('\n');
    out.push_str(&format!("{}\n", ctx.object_count()));
    out.push_str(&format!("{}\n", ctx.attribute_count()));
    for o in ctx.objects() {
        out.push_str(o);
        out.push('\n');
    }
    for a in ctx.attributes() {
        out.push_str(a);
        out.push('\n');
    }
    for i in 0..ctx.object_count() {
        for j in 0..ctx.attribute_count() {
            out.push(if ctx.has(i, j) { 'X' } else { '.' });
        }
        out.push('\n');
    }
    out
}

/// JSON shape of a context: `{"objects": [...], "attributes": [...],
/// "incidence": [[bool, ...], ...]}`.
#[derive(Serialize, Deserialize)]
pub struct ContextJson {
    pub objects: Vec<String>,
    pub attributes: Vec<String>,
    pub incidence: Vec<Vec<bool>>,
}

pub fn context_to_json(ctx: &FormalContext) -> ContextJson {
    ContextJson {
        objects: ctx.objects().to_vec(),
        attributes: ctx.attributes().to_vec(),
        incidence: ctx.incidence_matrix(),
    }
}

pub fn context_from_json(json: &ContextJson) -> Result<FormalContext> {
    FormalContext::new(json.objects.clone(), json.attributes.clone(), &json.incidence)
}

/// JSON shape of a dBa: index tables plus the distinguished elements.
#[derive(Serialize, Deserialize)]
pub struct DbaJson {
    pub n: usize,
    pub meet: Vec<Vec<u32>>,
    pub join: Vec<Vec<u32>>,
    pub neg: Vec<u32>,
    pub opp: Vec<u32>,
    pub top: usize,
    pub bot: usize,
    pub labels: Vec<String>,
}

pub fn dba_to_json(dba: &FiniteDba) -> DbaJson {
    let n = dba.len();
    let table = |f: &dyn Fn(usize, usize) -> usize| -> Vec<Vec<u32>> {
        (0..n)
            .map(|x| (0..n).map(|y| f(x, y) as u32).collect())
            .collect()
    };
    DbaJson {
        n,
        meet: table(&|x, y| dba.meet(x, y)),
        join: table(&|x, y| dba.join(x, y)),
        neg: (0..n).map(|x| dba.neg(x) as u32).collect(),
        opp: (0..n).map(|x| dba.opp(x) as u32).collect(),
        top: dba.top(),
        bot: dba.bot(),
        labels: dba.labels().to_vec(),
    }
}

pub fn dba_from_json(json: &DbaJson) -> Result<FiniteDba> {
    let flatten = |rows: &[Vec<u32>]| -> Result<Vec<u32>> {
        if rows.len() != json.n || rows.iter().any(|r| r.len() != json.n) {
            return Err(Error::TableSizeMismatch {
                expected: json.n * json.n,
                got: rows.iter().map(Vec::len).sum(),
            });
        }
        Ok(rows.iter().flatten().copied().collect())
    };
    FiniteDba::new(
        json.n,
        flatten(&json.meet)?,
        flatten(&json.join)?,
        json.neg.clone(),
        json.opp.clone(),
        json.top,
        json.bot,
        json.labels.clone(),
    )
}

/// Open-set family in JSON: explicit index lists or the string
/// `"discrete"`.
#[derive(Serialize, Deserialize)]
#[serde(untagged)]
pub enum OpensJson {
    Shorthand(String),
    Sets(Vec<Vec<usize>>),
}

/// JSON shape of a CTS: a context plus one open family per side.
#[derive(Serialize, Deserialize)]
pub struct CtsJson {
    pub context: ContextJson,
    pub object_opens: OpensJson,
    pub attribute_opens: OpensJson,
}

fn opens_to_json(t: &FiniteTopology) -> OpensJson {
    if t.is_discrete() {
        OpensJson::Shorthand("discrete".to_string())
    } else {
        OpensJson::Sets(t.opens().iter().map(|o| o.iter().collect()).collect())
    }
}

fn opens_from_json(json: &OpensJson, width: usize) -> Result<FiniteTopology> {
    match json {
        OpensJson::Shorthand(s) if s == "discrete" => {
            if width > 20 {
                return Err(Error::Parse(format!(
                    "discrete shorthand on {width} points would need 2^{width} open sets"
                )));
            }
            Ok(FiniteTopology::discrete(width))
        }
        OpensJson::Shorthand(other) => Err(Error::Parse(format!(
            "unknown open-family shorthand `{other}`"
        ))),
        OpensJson::Sets(sets) => {
            let opens: Vec<BitSet> = sets
                .iter()
                .map(|indices| {
                    for &i in indices {
                        if i >= width {
                            return Err(Error::IndexOutOfRange { index: i, size: width });
                        }
                    }
                    Ok(BitSet::from_indices(width, indices.iter().copied()))
                })
                .collect::<Result<_>>()?;
            FiniteTopology::new(width, opens)
        }
    }
}

pub fn cts_to_json(cts: &Cts) -> CtsJson {
    CtsJson {
        context: context_to_json(cts.context()),
        object_opens: opens_to_json(cts.object_topology()),
        attribute_opens: opens_to_json(cts.attribute_topology()),
    }
}

pub fn cts_from_json(json: &CtsJson) -> Result<Cts> {
    let context = context_from_json(&json.context)?;
    let objects = opens_from_json(&json.object_opens, context.object_count())?;
    let attributes = opens_from_json(&json.attribute_opens, context.attribute_count())?;
    Cts::new(objects, attributes, context)
}

/// One element of an algebra dump: the pair by names.
#[derive(Serialize, Deserialize)]
pub struct ElementJson {
    pub extent: Vec<String>,
    pub intent: Vec<String>,
}

/// JSON dump of an enumerated pair family; operation tables are present
/// when the family forms an algebra.
#[derive(Serialize, Deserialize)]
pub struct AlgebraDumpJson {
    pub elements: Vec<ElementJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub meet: Option<Vec<Vec<u32>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub join: Option<Vec<Vec<u32>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub neg: Option<Vec<u32>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub opp: Option<Vec<u32>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub top: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bot: Option<usize>,
}

fn element_json(ctx: &FormalContext, extent: &BitSet, intent: &BitSet) -> ElementJson {
    ElementJson {
        extent: extent.iter().map(|g| ctx.objects()[g].clone()).collect(),
        intent: intent.iter().map(|m| ctx.attributes()[m].clone()).collect(),
    }
}

/// Dump of a full algebra including tables.
pub fn algebra_dump(ctx: &FormalContext, algebra: &ConceptAlgebra) -> AlgebraDumpJson {
    let tables = dba_to_json(&algebra.dba);
    AlgebraDumpJson {
        elements: algebra
            .pairs
            .iter()
            .map(|(a, b)| element_json(ctx, a, b))
            .collect(),
        meet: Some(tables.meet),
        join: Some(tables.join),
        neg: Some(tables.neg),
        opp: Some(tables.opp),
        top: Some(tables.top),
        bot: Some(tables.bot),
    }
}

/// Dump of a bare pair family without tables.
pub fn pair_dump(ctx: &FormalContext, pairs: &[(BitSet, BitSet)]) -> AlgebraDumpJson {
    AlgebraDumpJson {
        elements: pairs.iter().map(|(a, b)| element_json(ctx, a, b)).collect(),
        meet: None,
        join: None,
        neg: None,
        opp: None,
        top: None,
        bot: None,
    }
}

/// DOT rendering of the Hasse reduction of a partial order given by `leq`
/// over `n` labelled nodes. Edges point from lower to higher elements with
/// transitive edges removed.
pub fn hasse_dot(labels: &[String], leq: impl Fn(usize, usize) -> bool) -> String {
    let n = labels.len();
    let strictly_below = |x: usize, y: usize| x != y && leq(x, y) && !leq(y, x);
    let mut out = String::from("digraph order {\n  rankdir=BT;\n");
    for (i, label) in labels.iter().enumerate() {
        out.push_str(&format!("  n{} [label=\"{}\"];\n", i, label.replace('"', "\\\"")));
    }
    for x in 0..n {
        for y in 0..n {
            if !strictly_below(x, y) {
                continue;
            }
            let covered = (0..n).any(|z| strictly_below(x, z) && strictly_below(z, y));
            if !covered {
                out.push_str(&format!("  n{x} -> n{y};\n"));
            }
        }
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::concept::{build_semi_dba, DEFAULT_CANDIDATE_CAP};
    use crate::samples;

    #[test]
    fn cxt_round_trip() {
        let ctx = samples::questionnaire_context();
        let text = write_cxt(&ctx, "survey");
        let (back, name) = read_cxt(&text).unwrap();
        assert_eq!(back, ctx);
        assert_eq!(name, "survey");
        // writer output is canonical: re-writing reproduces the bytes
        assert_eq!(write_cxt(&back, &name), text);
    }

    #[test]
    fn cxt_empty_name_and_empty_sides() {
        let ctx = FormalContext::new(vec![], vec![], &[]).unwrap();
        let text = write_cxt(&ctx, "");
        assert_eq!(text, "B\n\n0\n0\n");
        let (back, name) = read_cxt(&text).unwrap();
        assert_eq!(back, ctx);
        assert!(name.is_empty());
    }

    #[test]
    fn cxt_parse_errors() {
        assert!(matches!(read_cxt("A\n\n0\n0\n"), Err(Error::Parse(_))));
        assert!(matches!(read_cxt("B\n\n1\n1\ng\nm\nXY\n"), Err(Error::Parse(_))));
        assert!(matches!(read_cxt("B\n\n2\n1\ng\n"), Err(Error::Parse(_))));
        assert!(matches!(read_cxt("B\n\n1\n1\ng\nm\nQ\n"), Err(Error::Parse(_))));
    }

    #[test]
    fn context_json_round_trip() {
        let ctx = samples::five_object_context();
        let json = serde_json::to_string(&context_to_json(&ctx)).unwrap();
        let back = context_from_json(&serde_json::from_str(&json).unwrap()).unwrap();
        assert_eq!(back, ctx);
    }

    #[test]
    fn dba_json_round_trip() {
        let alg = build_semi_dba(&samples::small_context(2, 3, 50), DEFAULT_CANDIDATE_CAP).unwrap();
        let json = serde_json::to_string(&dba_to_json(&alg.dba)).unwrap();
        let back = dba_from_json(&serde_json::from_str(&json).unwrap()).unwrap();
        assert_eq!(back, alg.dba);
    }

    #[test]
    fn cts_json_round_trip_and_shorthand() {
        let cts = samples::five_object_cts();
        let json = serde_json::to_string(&cts_to_json(&cts)).unwrap();
        let back = cts_from_json(&serde_json::from_str(&json).unwrap()).unwrap();
        assert_eq!(back.context(), cts.context());
        assert_eq!(back.object_topology(), cts.object_topology());

        let shorthand = r#"{"context":{"objects":["g"],"attributes":["m"],"incidence":[[true]]},"object_opens":"discrete","attribute_opens":"discrete"}"#;
        let cts = cts_from_json(&serde_json::from_str(shorthand).unwrap()).unwrap();
        assert!(cts.object_topology().is_discrete());
        assert!(cts.is_ctscr());
    }

    #[test]
    fn dot_output_reduces_transitively() {
        // chain of three elements: only two covering edges
        let labels = vec!["a".to_string(), "b".to_string(), "c".to_string()];
        let dot = hasse_dot(&labels, |x, y| x <= y);
        assert!(dot.contains("n0 -> n1"));
        assert!(dot.contains("n1 -> n2"));
        assert!(!dot.contains("n0 -> n2"));
    }
}
