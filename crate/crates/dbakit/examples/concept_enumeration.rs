//! Classifying pairs and enumerating the four pair families of a context.

use dbakit::concept::{
    classify_pair, enumerate_oo_protoconcepts, enumerate_oo_semiconcepts, oo_join, oo_meet,
    DEFAULT_CANDIDATE_CAP,
};
use dbakit::samples;

fn main() -> dbakit::Result<()> {
    let ctx = samples::questionnaire_context();

    // the motivating pair: an object-oriented protoconcept that is not an
    // object-oriented semiconcept
    let a1 = ctx.object_set(&["q1", "q2", "q4", "q6"])?;
    let b1 = ctx.attribute_set(&["s3"])?;
    let pair = classify_pair(&ctx, &a1, &b1)?;
    println!(
        "(A1, B1): oo-protoconcept={} oo-semiconcept={} protoconcept={}",
        pair.is_oo_protoconcept(),
        pair.is_oo_semiconcept(),
        pair.is_protoconcept()
    );

    let protos = enumerate_oo_protoconcepts(&ctx, DEFAULT_CANDIDATE_CAP)?;
    let semis = enumerate_oo_semiconcepts(&ctx, DEFAULT_CANDIDATE_CAP)?;
    println!(
        "{} oo-protoconcepts, {} oo-semiconcepts ({} oo-concepts among them)",
        protos.len(),
        semis.len(),
        semis.iter().filter(|p| p.is_oo_concept()).count()
    );

    // the two semiconcepts attached to (A1, B1) glue to it under join
    let left = classify_pair(&ctx, &a1, &ctx.black_square(&a1)?)?;
    let glued = oo_join(&ctx, &left, &left)?;
    println!(
        "(A1, A1^bs) join itself = ({:?}, {:?})",
        glued.extent.iter().map(|g| &ctx.objects()[g]).collect::<Vec<_>>(),
        glued.intent.iter().map(|m| &ctx.attributes()[m]).collect::<Vec<_>>()
    );

    let top = dbakit::concept::oo_top(&ctx)?;
    let bot = dbakit::concept::oo_bot(&ctx)?;
    let squashed = oo_meet(&ctx, &top, &bot)?;
    println!(
        "top meet bottom lands on the bottom side: extent has {} objects",
        squashed.extent.len()
    );
    Ok(())
}
