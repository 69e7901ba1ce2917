//! The five derivation operators on a formal context: the classical
//! derivations and the modal square/diamond pairs.

use dbakit::samples;

fn main() -> dbakit::Result<()> {
    let ctx = samples::questionnaire_context();
    println!(
        "context: {} objects x {} attributes, {} incidences",
        ctx.object_count(),
        ctx.attribute_count(),
        ctx.incidence_count()
    );

    let a = ctx.object_set(&["q1", "q4"])?;
    let intent = ctx.derive_intent(&a)?;
    println!(
        "{{q1,q4}}' = {:?}",
        intent.iter().map(|m| &ctx.attributes()[m]).collect::<Vec<_>>()
    );
    let extent = ctx.derive_extent(&intent)?;
    println!(
        "closure back on the object side = {:?}",
        extent.iter().map(|g| &ctx.objects()[g]).collect::<Vec<_>>()
    );
    println!("({{q1,q4}}, {{s1,s3,s5}}) is a concept: {}", ctx.is_concept(&a, &intent)?);

    let b = ctx.attribute_set(&["s3"])?;
    println!(
        "{{s3}}^diamond = {:?} (objects with at least one of the attributes)",
        ctx.diamond(&b)?.iter().map(|g| &ctx.objects()[g]).collect::<Vec<_>>()
    );

    let a1 = ctx.object_set(&["q1", "q2", "q4", "q6"])?;
    println!(
        "{{q1,q2,q4,q6}}^blacksquare = {:?} (attributes whose bearers all lie inside)",
        ctx.black_square(&a1)?.iter().map(|m| &ctx.attributes()[m]).collect::<Vec<_>>()
    );
    println!(
        "{{q5,q6}}^blackdiamond = {:?}",
        ctx.black_diamond(&ctx.object_set(&["q5", "q6"])?)?
            .iter()
            .map(|m| &ctx.attributes()[m])
            .collect::<Vec<_>>()
    );

    let complement = ctx.complement();
    println!(
        "complement context has {} incidences; double complement restores the original: {}",
        complement.incidence_count(),
        complement.complement() == ctx
    );
    Ok(())
}
