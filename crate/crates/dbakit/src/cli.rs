//! Command-line front end: enumeration, theorem verification and seeded
//! instance generation over the file formats in [`crate::io`].

use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::concept::{
    build_proto_dba, build_semi_dba, build_wille_proto_dba, build_wille_semi_dba,
    enumerate_oo_semiconcepts, enumerate_semiconcepts, ConceptAlgebra, DEFAULT_CANDIDATE_CAP,
};
use crate::context::FormalContext;
use crate::dba::{
    check_dba_theorems, check_hom, classify_dba, enumerate_automorphisms, extend_pure_iso,
    pure_part, to_boolean, validate_dba, FiniteDba,
};
use crate::error::{Error, Result};
use crate::io;
use crate::report::{digest, run_check, TheoremReport};
use crate::representation::{functor_f, functor_g, k_maps, rep_map_oo, rep_map_wille};
use crate::set::BitSet;
use crate::topology::{Cts, CtsHomClass};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFICATION: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_CAP: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "dbakit", version, about = "Formal contexts, double Boolean algebras and their topological representation")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Enumerate a pair family of a context and dump it as JSON.
    Enumerate {
        /// Input context file (.cxt or .json).
        input: PathBuf,
        #[arg(long, value_enum)]
        kind: PairKind,
        /// Output path; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Also write the Hasse diagram of the pair order as DOT.
        #[arg(long)]
        dot: Option<PathBuf>,
        /// Candidate cap override; raising it above the default needs --force.
        #[arg(long)]
        cap: Option<u64>,
        #[arg(long)]
        force: bool,
    },
    /// Run a named verification suite and write a JSON report.
    Verify {
        /// Input file: context (.cxt/.json), dBa (.json) or CTS (.json).
        input: PathBuf,
        #[arg(long, value_enum)]
        suite: Suite,
        /// Which enumerated algebra of a context input to work with.
        #[arg(long, value_enum)]
        algebra: Option<AlgebraKind>,
        /// Treat a plain context input as a CTS with discrete topologies.
        #[arg(long)]
        discrete: bool,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        cap: Option<u64>,
        #[arg(long)]
        force: bool,
    },
    /// Generate a seeded random context (and optionally a derived algebra).
    Random {
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = 4)]
        objects: usize,
        #[arg(long, default_value_t = 4)]
        attributes: usize,
        /// Incidence density in 0.2..=0.8; drawn from the seed when omitted.
        #[arg(long)]
        density: Option<f64>,
        /// Output path; .cxt extension selects the Burmeister format.
        #[arg(long)]
        out: PathBuf,
        /// Also write the derived algebra next to the context.
        #[arg(long, value_enum)]
        derive: Option<AlgebraKind>,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum PairKind {
    Concept,
    OoConcept,
    Semi,
    Proto,
    OoSemi,
    OoProto,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum AlgebraKind {
    Semi,
    Proto,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum Suite {
    Axioms,
    Representation,
    StoneRoundtrip,
    Duality,
    All,
}

enum LoadedInput {
    Context(FormalContext),
    Dba(FiniteDba),
    Cts(Cts),
}

fn load_input(path: &Path) -> Result<(LoadedInput, String)> {
    let text = std::fs::read_to_string(path)?;
    let input_digest = digest(text.as_bytes());
    if path.extension().is_some_and(|e| e == "cxt") {
        let (ctx, _) = io::read_cxt(&text)?;
        return Ok((LoadedInput::Context(ctx), input_digest));
    }
    let value: serde_json::Value = serde_json::from_str(&text)?;
    let loaded = if value.get("incidence").is_some() {
        LoadedInput::Context(io::context_from_json(&serde_json::from_value(value)?)?)
    } else if value.get("meet").is_some() {
        LoadedInput::Dba(io::dba_from_json(&serde_json::from_value(value)?)?)
    } else if value.get("context").is_some() {
        LoadedInput::Cts(io::cts_from_json(&serde_json::from_value(value)?)?)
    } else {
        return Err(Error::Parse(
            "JSON input is none of context, dBa or CTS".to_string(),
        ));
    };
    Ok((loaded, input_digest))
}

fn resolve_cap(cap: Option<u64>, force: bool) -> Result<u64> {
    match cap {
        None => Ok(DEFAULT_CANDIDATE_CAP),
        Some(c) if c > DEFAULT_CANDIDATE_CAP && !force => Err(Error::Parse(format!(
            "cap {c} exceeds the default {DEFAULT_CANDIDATE_CAP}; pass --force to raise it"
        ))),
        Some(c) => Ok(c),
    }
}

fn exit_code_for(err: &Error) -> i32 {
    match err {
        Error::CandidateCapExceeded { .. } | Error::CarrierCapExceeded { .. } => EXIT_CAP,
        _ => EXIT_USAGE,
    }
}

fn emit(path: Option<&Path>, content: &str) -> Result<()> {
    match path {
        Some(p) => std::fs::write(p, content)?,
        None => print!("{content}"),
    }
    Ok(())
}

/// Entry point used by the binary; returns the process exit code.
pub fn run(cli: Cli) -> i32 {
    let outcome = match cli.command {
        Command::Enumerate {
            input,
            kind,
            out,
            dot,
            cap,
            force,
        } => cmd_enumerate(&input, kind, out.as_deref(), dot.as_deref(), cap, force),
        Command::Verify {
            input,
            suite,
            algebra,
            discrete,
            out,
            cap,
            force,
        } => cmd_verify(&input, suite, algebra, discrete, out.as_deref(), cap, force),
        Command::Random {
            seed,
            objects,
            attributes,
            density,
            out,
            derive,
        } => cmd_random(seed, objects, attributes, density, &out, derive),
    };
    match outcome {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            exit_code_for(&err)
        }
    }
}

fn context_of(input: LoadedInput) -> Result<FormalContext> {
    match input {
        LoadedInput::Context(ctx) => Ok(ctx),
        LoadedInput::Cts(cts) => Ok(cts.context().clone()),
        LoadedInput::Dba(_) => Err(Error::Parse(
            "this command needs a context input, found a dBa".to_string(),
        )),
    }
}

fn cmd_enumerate(
    input: &Path,
    kind: PairKind,
    out: Option<&Path>,
    dot: Option<&Path>,
    cap: Option<u64>,
    force: bool,
) -> Result<i32> {
    let cap = resolve_cap(cap, force)?;
    let (loaded, _) = load_input(input)?;
    let ctx = context_of(loaded)?;

    let dump_algebra = |alg: &ConceptAlgebra| -> Result<String> {
        let dump = io::algebra_dump(&ctx, alg);
        Ok(serde_json::to_string_pretty(&dump)? + "\n")
    };
    let (json, dot_text) = match kind {
        PairKind::OoSemi => {
            let alg = build_semi_dba(&ctx, cap)?;
            let dot = io::hasse_dot(alg.dba.labels(), |x, y| alg.dba.leq(x, y));
            (dump_algebra(&alg)?, dot)
        }
        PairKind::OoProto => {
            let alg = build_proto_dba(&ctx, cap)?;
            let dot = io::hasse_dot(alg.dba.labels(), |x, y| alg.dba.leq(x, y));
            (dump_algebra(&alg)?, dot)
        }
        PairKind::Semi => {
            let alg = build_wille_semi_dba(&ctx, cap)?;
            let dot = io::hasse_dot(alg.dba.labels(), |x, y| alg.dba.leq(x, y));
            (dump_algebra(&alg)?, dot)
        }
        PairKind::Proto => {
            let alg = build_wille_proto_dba(&ctx, cap)?;
            let dot = io::hasse_dot(alg.dba.labels(), |x, y| alg.dba.leq(x, y));
            (dump_algebra(&alg)?, dot)
        }
        PairKind::Concept => {
            let pairs: Vec<(BitSet, BitSet)> = enumerate_semiconcepts(&ctx, cap)?
                .into_iter()
                .filter(|p| p.is_concept())
                .map(|p| (p.extent, p.intent))
                .collect();
            let labels: Vec<String> = pairs
                .iter()
                .map(|(a, b)| crate::concept::pair_label(&ctx, a, b))
                .collect();
            let dot = io::hasse_dot(&labels, |x, y| pairs[x].0.is_subset(&pairs[y].0));
            (
                serde_json::to_string_pretty(&io::pair_dump(&ctx, &pairs))? + "\n",
                dot,
            )
        }
        PairKind::OoConcept => {
            let pairs: Vec<(BitSet, BitSet)> = enumerate_oo_semiconcepts(&ctx, cap)?
                .into_iter()
                .filter(|p| p.is_oo_concept())
                .map(|p| (p.extent, p.intent))
                .collect();
            let labels: Vec<String> = pairs
                .iter()
                .map(|(a, b)| crate::concept::pair_label(&ctx, a, b))
                .collect();
            let dot = io::hasse_dot(&labels, |x, y| pairs[x].0.is_subset(&pairs[y].0));
            (
                serde_json::to_string_pretty(&io::pair_dump(&ctx, &pairs))? + "\n",
                dot,
            )
        }
    };
    emit(out, &json)?;
    if let Some(dot_path) = dot {
        std::fs::write(dot_path, dot_text)?;
    }
    Ok(EXIT_OK)
}

fn algebra_of(ctx: &FormalContext, kind: AlgebraKind, cap: u64) -> Result<ConceptAlgebra> {
    match kind {
        AlgebraKind::Semi => build_semi_dba(ctx, cap),
        AlgebraKind::Proto => build_proto_dba(ctx, cap),
    }
}

fn suite_dbas(
    input: LoadedInput,
    algebra: Option<AlgebraKind>,
    cap: u64,
) -> Result<Vec<(String, FiniteDba)>> {
    match input {
        LoadedInput::Dba(d) => Ok(vec![("dba".to_string(), d)]),
        LoadedInput::Context(ctx) => {
            let kinds = match algebra {
                Some(k) => vec![k],
                None => vec![AlgebraKind::Semi, AlgebraKind::Proto],
            };
            kinds
                .into_iter()
                .map(|k| {
                    let name = match k {
                        AlgebraKind::Semi => "oo-semiconcepts",
                        AlgebraKind::Proto => "oo-protoconcepts",
                    };
                    Ok((name.to_string(), algebra_of(&ctx, k, cap)?.dba))
                })
                .collect()
        }
        LoadedInput::Cts(cts) => {
            let kinds = match algebra {
                Some(k) => vec![k],
                None => vec![AlgebraKind::Semi, AlgebraKind::Proto],
            };
            kinds
                .into_iter()
                .map(|k| match k {
                    AlgebraKind::Semi => Ok((
                        "clopen-oo-semiconcepts".to_string(),
                        crate::topology::build_clopen_semi_dba(&cts)?.dba,
                    )),
                    AlgebraKind::Proto => Ok((
                        "clopen-oo-protoconcepts".to_string(),
                        crate::topology::build_clopen_proto_dba(&cts)?.dba,
                    )),
                })
                .collect()
        }
    }
}

fn axioms_suite(dbas: &[(String, FiniteDba)], input_digest: &str) -> Vec<TheoremReport> {
    let mut reports = Vec::new();
    for (name, d) in dbas {
        reports.push(run_check(&format!("axioms:{name}"), input_digest, || {
            let report = validate_dba(d);
            (report.is_valid(), report.first_counterexample())
        }));
        reports.push(run_check(&format!("derived-laws:{name}"), input_digest, || {
            let violations = check_dba_theorems(d);
            let counterexample = violations
                .first()
                .map(|v| format!("law {} fails at {:?}", v.law, v.witnesses.first()));
            (violations.is_empty(), counterexample)
        }));
    }
    reports
}

fn representation_suite(
    dbas: &[(String, FiniteDba)],
    input_digest: &str,
    cap: u64,
) -> Result<Vec<TheoremReport>> {
    let mut reports = Vec::new();
    for (name, d) in dbas {
        let rep = rep_map_oo(d, cap)?;
        reports.push(run_check(
            &format!("representation-ladder:{name}"),
            input_digest,
            || {
                (
                    rep.ladder_consistent,
                    (!rep.ladder_consistent).then(|| {
                        format!(
                            "classification {:?} vs verdicts hom={} qi={} inj={} surj={}",
                            rep.classification,
                            rep.hom.homomorphism,
                            rep.hom.quasi_injective,
                            rep.hom.injective,
                            rep.hom.surjective
                        )
                    }),
                )
            },
        ));
        let wille = rep_map_wille(d)?;
        reports.push(run_check(
            &format!("classical-realization:{name}"),
            input_digest,
            || {
                let ok = wille.homomorphism
                    && wille.quasi_injective
                    && wille.all_protoconcepts
                    && wille.transport_consistent;
                (ok, None)
            },
        ));
        let atoms = crate::representation::finite_rep_atoms(d)?;
        reports.push(run_check(
            &format!("atom-realization:{name}"),
            input_digest,
            || {
                let ok = atoms.homomorphism
                    && atoms.quasi_injective
                    && atoms.complement_homomorphism
                    && atoms.complement_quasi_injective
                    && atoms.matches_standard_complement
                    && atoms.matches_oo_rep;
                (ok, None)
            },
        ));
        reports.push(run_check(
            &format!("pure-part-characterization:{name}"),
            input_digest,
            || (rep.characterization_holds && rep.semi_is_pure_part, None),
        ));
    }
    Ok(reports)
}

fn stone_suite(
    input: LoadedInput,
    discrete: bool,
    input_digest: &str,
    cap: u64,
) -> Result<Vec<TheoremReport>> {
    let cts = match input {
        LoadedInput::Cts(cts) => cts,
        LoadedInput::Context(ctx) if discrete => {
            let side = ctx.object_count().max(ctx.attribute_count());
            if side > 20 {
                return Err(Error::Parse(format!(
                    "discrete topologies on {side} points would need 2^{side} open sets"
                )));
            }
            Cts::discrete(ctx)
        }
        LoadedInput::Context(_) => {
            return Err(Error::Parse(
                "stone-roundtrip on a plain context needs --discrete".to_string(),
            ))
        }
        LoadedInput::Dba(d) => rep_map_oo(&d, cap)?.kpr.cts,
    };
    let mut reports = Vec::new();
    let violation = cts.stone_violation();
    reports.push(run_check("stone-context", input_digest, || {
        (violation.is_none(), violation.clone())
    }));
    if violation.is_some() {
        return Ok(reports);
    }
    let km = k_maps(&cts, cap)?;
    reports.push(run_check("evaluation-homeomorphism", input_digest, || {
        let reached = km.cts_hom.class == CtsHomClass::Homeomorphism;
        (
            reached,
            (!reached).then(|| format!("{:?}", km.cts_hom.class)),
        )
    }));
    reports.push(run_check("induced-isomorphism", input_digest, || {
        (
            km.induced.hom.is_isomorphism() && km.induced.semi_hom.is_isomorphism(),
            None,
        )
    }));
    Ok(reports)
}

fn duality_suite(
    dbas: &[(String, FiniteDba)],
    input_digest: &str,
    cap: u64,
) -> Result<Vec<TheoremReport>> {
    let mut reports = Vec::new();
    for (name, d) in dbas {
        let class = classify_dba(d);
        if class.fully_contextual {
            let pp = pure_part(d)?;
            let id: Vec<usize> = (0..pp.dba.len()).collect();
            let extension = extend_pure_iso(d, d, &id)?;
            reports.push(run_check(
                &format!("pure-extension-identity:{name}"),
                input_digest,
                || {
                    let ok = extension.is_isomorphism()
                        && extension.map == (0..d.len()).collect::<Vec<_>>();
                    (ok, None)
                },
            ));
            if pp.dba.len() <= 10 {
                let autos = enumerate_automorphisms(&pp.dba, 10)?;
                let mut all_extend = true;
                for auto in &autos {
                    let ext = extend_pure_iso(d, d, auto)?;
                    let g = functor_g(d, d, &ext)?;
                    all_extend &= g.restriction.map == *auto;
                }
                reports.push(run_check(
                    &format!("pure-extension-automorphisms:{name}"),
                    input_digest,
                    || (all_extend, None),
                ));
            }
        }
        if class.pure {
            let id: Vec<usize> = (0..d.len()).collect();
            let f = functor_f(d, d, &check_hom(d, d, &id)?, cap)?;
            reports.push(run_check(
                &format!("spectrum-functor-square:{name}"),
                input_digest,
                || (f.square_commutes, None),
            ));
        }
        if class.pure && class.fully_contextual {
            // Boolean-style input: the disjointness relation is a bijection
            // and the clopen protoconcept algebra is Boolean again
            let rep = rep_map_oo(d, cap)?;
            if to_boolean(d).is_some() {
                let ctx = rep.kpr.cts.context().clone();
                reports.push(run_check(
                    &format!("boolean-spectrum-bijection:{name}"),
                    input_digest,
                    || {
                        let ok = (0..ctx.object_count()).all(|g| ctx.row(g).len() == 1)
                            && (0..ctx.attribute_count()).all(|m| ctx.col(m).len() == 1);
                        (ok, None)
                    },
                ));
                reports.push(run_check(
                    &format!("boolean-clopen-algebra:{name}"),
                    input_digest,
                    || {
                        (
                            rep.proto.pairs == rep.semi.pairs && to_boolean(&rep.proto.dba).is_some(),
                            None,
                        )
                    },
                ));
            }
        }
    }
    Ok(reports)
}

#[allow(clippy::too_many_arguments)]
fn cmd_verify(
    input: &Path,
    suite: Suite,
    algebra: Option<AlgebraKind>,
    discrete: bool,
    out: Option<&Path>,
    cap: Option<u64>,
    force: bool,
) -> Result<i32> {
    let cap = resolve_cap(cap, force)?;
    let (_, input_digest) = load_input(input)?;
    let mut reports = Vec::new();
    let needs_dbas = matches!(
        suite,
        Suite::Axioms | Suite::Representation | Suite::Duality | Suite::All
    );
    let dbas = if needs_dbas {
        let (loaded, _) = load_input(input)?;
        suite_dbas(loaded, algebra, cap)?
    } else {
        Vec::new()
    };
    match suite {
        Suite::Axioms => reports.extend(axioms_suite(&dbas, &input_digest)),
        Suite::Representation => {
            reports.extend(representation_suite(&dbas, &input_digest, cap)?)
        }
        Suite::StoneRoundtrip => {
            let (loaded, _) = load_input(input)?;
            reports.extend(stone_suite(loaded, discrete, &input_digest, cap)?)
        }
        Suite::Duality => reports.extend(duality_suite(&dbas, &input_digest, cap)?),
        Suite::All => {
            reports.extend(axioms_suite(&dbas, &input_digest));
            reports.extend(representation_suite(&dbas, &input_digest, cap)?);
            let (loaded, _) = load_input(input)?;
            match loaded {
                LoadedInput::Context(_) if !discrete => {}
                other => reports.extend(stone_suite(other, discrete, &input_digest, cap)?),
            }
            reports.extend(duality_suite(&dbas, &input_digest, cap)?);
        }
    }
    // timings go to stderr; the report file stays byte-stable across reruns
    for r in &mut reports {
        eprintln!("{}: {} ({} ms)", r.theorem, if r.verdict { "ok" } else { "FAIL" }, r.elapsed_ms);
        r.elapsed_ms = 0;
    }
    let json = serde_json::to_string_pretty(&reports)? + "\n";
    emit(out, &json)?;
    let all_true = reports.iter().all(|r| r.verdict);
    Ok(if all_true { EXIT_OK } else { EXIT_VERIFICATION })
}

fn cmd_random(
    seed: u64,
    objects: usize,
    attributes: usize,
    density: Option<f64>,
    out: &Path,
    derive: Option<AlgebraKind>,
) -> Result<i32> {
    if let Some(d) = density {
        if !(0.2..=0.8).contains(&d) {
            return Err(Error::Parse(format!(
                "density {d} outside the supported range 0.2..=0.8"
            )));
        }
    }
    let ctx = match density {
        Some(d) => crate::random::random_context(seed, objects, attributes, d),
        None => crate::random::random_context_default_density(seed, objects, attributes),
    };
    eprintln!("seed {seed}");
    let content = if out.extension().is_some_and(|e| e == "cxt") {
        io::write_cxt(&ctx, &format!("seed-{seed}"))
    } else {
        serde_json::to_string_pretty(&io::context_to_json(&ctx))? + "\n"
    };
    std::fs::write(out, content)?;
    if let Some(kind) = derive {
        let alg = algebra_of(&ctx, kind, DEFAULT_CANDIDATE_CAP)?;
        let suffix = match kind {
            AlgebraKind::Semi => "oo-semi",
            AlgebraKind::Proto => "oo-proto",
        };
        let path = out.with_extension(format!("{suffix}.dba.json"));
        let json = serde_json::to_string_pretty(&io::dba_to_json(&alg.dba))? + "\n";
        std::fs::write(path, json)?;
    }
    Ok(EXIT_OK)
}
