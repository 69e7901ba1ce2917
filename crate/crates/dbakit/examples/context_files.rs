//! Reading and writing the file formats: Burmeister .cxt, the JSON schemas
//! and DOT order diagrams.

use dbakit::concept::{build_semi_dba, DEFAULT_CANDIDATE_CAP};
use dbakit::io::{
    algebra_dump, context_from_json, context_to_json, cts_to_json, hasse_dot, read_cxt, write_cxt,
};
use dbakit::samples;
use dbakit::topology::Cts;

fn main() -> dbakit::Result<()> {
    let ctx = samples::five_object_context();

    let cxt_text = write_cxt(&ctx, "five objects");
    println!("--- .cxt ---\n{cxt_text}");
    let (reparsed, name) = read_cxt(&cxt_text)?;
    println!("re-parsed `{name}`, equal to the original: {}", reparsed == ctx);

    let json = serde_json::to_string_pretty(&context_to_json(&ctx)).expect("serializable");
    println!("--- context JSON (first lines) ---");
    for line in json.lines().take(6) {
        println!("{line}");
    }
    let back = context_from_json(&serde_json::from_str(&json).expect("parses"))?;
    println!("JSON round trip equal: {}", back == ctx);

    let cts_json = serde_json::to_string(&cts_to_json(&Cts::discrete(ctx.clone()))).expect("serializable");
    println!("discrete CTS serializes with the shorthand: {}", cts_json.contains("\"discrete\""));

    let alg = build_semi_dba(&ctx, DEFAULT_CANDIDATE_CAP)?;
    let dump = algebra_dump(&ctx, &alg);
    println!(
        "algebra dump: {} elements, tables present: {}",
        dump.elements.len(),
        dump.meet.is_some()
    );
    let dot = hasse_dot(alg.dba.labels(), |x, y| alg.dba.leq(x, y));
    println!("DOT diagram: {} lines", dot.lines().count());
    Ok(())
}
