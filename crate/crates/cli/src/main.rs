//! Batch command-line front end: JSON documents in, one JSON document out.
//!
//! Exit codes: 0 for success and PASS verdicts, 1 for FAIL verdicts and
//! negative search outcomes, 2 for input errors.

mod formats;
mod gallery;

use std::process::ExitCode;

use clap::{Parser, Subcommand};
use enriques_core::collections::{check_exceptional_collection_necessary, find_isotropic_sequence};
use enriques_core::divisor::{
    ample_criteria, classify_free_system, rr_line_bundle, FreeSystemClass,
};
use enriques_core::k3::pullback;
use enriques_core::mukai::from_chern;
use enriques_core::polarization::find_coprime_ample;
use enriques_core::reflection::{reflect, reflect_via_sequences};
use enriques_core::{CurveTestSet, Error, GramLattice, MukaiVector};
use serde::Serialize;
use serde_json::json;

use formats::{
    certificate_doc, divisor, k3_doc, load_gram_file, load_json, mukai, mukai_doc, num_class,
    test_set, DivisorDoc, InputError, MukaiDoc, TestSetDoc,
};

#[derive(Parser)]
#[command(
    name = "enriques",
    version,
    about = "Exact Mukai-lattice arithmetic for Enriques surfaces"
)]
struct Cli {
    /// Gram matrix file (one row per line, space-separated integers);
    /// defaults to the built-in rank-10 preset
    #[arg(long, global = true)]
    lattice: Option<String>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Bilinear pairing of two numerical classes (JSON arrays)
    Pair {
        #[arg(long)]
        x: String,
        #[arg(long)]
        y: String,
    },
    /// Euler pairing of two Mukai vectors
    Chi {
        #[arg(long)]
        v: String,
        #[arg(long)]
        w: String,
    },
    /// Mukai vector of a sheaf with the given rank, first Chern class and c2
    FromChern {
        #[arg(long)]
        r: i64,
        #[arg(long)]
        divisor: String,
        #[arg(long)]
        c2: i64,
    },
    /// Vector of the dual sheaf
    Dual {
        #[arg(long)]
        v: String,
    },
    /// Vector of the twist by a line bundle
    Twist {
        #[arg(long)]
        v: String,
        #[arg(long)]
        m: String,
    },
    /// Reflection in closed form
    Reflect {
        #[arg(long)]
        v: String,
    },
    /// Reflection rebuilt through the evaluation/extension sequences
    ReflectSeq {
        #[arg(long)]
        v: String,
    },
    /// Pullback to the K3 double cover (doubled form)
    Pullback {
        #[arg(long)]
        v: String,
    },
    /// Exceptionality test: positive rank and square 1
    IsExceptional {
        #[arg(long)]
        v: String,
    },
    /// Certified search for an ample class pairing coprimely to the rank
    FindPolarization {
        #[arg(long)]
        v: String,
        #[arg(long)]
        hseed: String,
        /// CurveTestSet JSON; defaults to the standard basis set
        #[arg(long)]
        test_set: Option<String>,
        #[arg(long, default_value_t = 64)]
        kmax: i64,
    },
    /// Backtracking search for an isotropic sequence
    IsotropicSeq {
        #[arg(long)]
        length: usize,
        #[arg(long)]
        bound: i64,
    },
    /// Chi-matrix test for an exceptional collection (JSON array of vectors)
    CheckCollection {
        #[arg(long)]
        vectors: String,
    },
    /// Riemann-Roch for a line bundle: chi(O(D)) = 1 + D²/2
    Rr {
        #[arg(long)]
        divisor: String,
    },
    /// Classify a fixed-component-free system (caller asserts freeness)
    Classify {
        #[arg(long)]
        divisor: String,
        /// Assert that |D| has no fixed components (geometric input the
        /// lattice cannot check)
        #[arg(long)]
        fixed_component_free: bool,
    },
    /// Nef test plus the square-at-least-6 ampleness criteria
    AmpleCriteria {
        #[arg(long)]
        divisor: String,
        /// CurveTestSet JSON; defaults to the standard basis set
        #[arg(long)]
        test_set: Option<String>,
    },
    /// Run the worked reflection examples end-to-end
    Gallery,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn emit<T: Serialize>(value: &T) {
    println!("{}", serde_json::to_string(value).expect("serializable output"));
}

fn load_lattice(path: &Option<String>) -> Result<GramLattice, InputError> {
    match path {
        Some(p) => load_gram_file(p),
        None => Ok(GramLattice::e10()),
    }
}

fn load_test_set(arg: &Option<String>, lat: &GramLattice) -> Result<CurveTestSet, InputError> {
    match arg {
        Some(a) => {
            let doc: TestSetDoc = load_json(a, "test set")?;
            test_set(doc, lat)
        }
        None => CurveTestSet::e10_standard(lat).map_err(|e| {
            InputError(format!(
                "no --test-set given and the standard set does not fit this lattice: {e}"
            ))
        }),
    }
}

/// Negative search outcomes exit 1; everything else bad about the input
/// exits 2.
fn search_failure(e: Error) -> Result<ExitCode, InputError> {
    match e {
        Error::KBudgetExceeded { .. } | Error::SequenceNotFound { .. } => {
            emit(&json!({ "error": e.to_string() }));
            Ok(ExitCode::from(1))
        }
        other => Err(InputError(other.to_string())),
    }
}

fn run(cli: Cli) -> Result<ExitCode, InputError> {
    let lat = load_lattice(&cli.lattice)?;
    match cli.command {
        Command::Pair { x, y } => {
            let x = num_class(load_json(&x, "x")?, &lat, "x")?;
            let y = num_class(load_json(&y, "y")?, &lat, "y")?;
            emit(&json!({ "pair": lat.pair(&x, &y) }));
            Ok(ExitCode::SUCCESS)
        }
        Command::Chi { v, w } => {
            let v = mukai(load_json::<MukaiDoc>(&v, "v")?, &lat, "v")?;
            let w = mukai(load_json::<MukaiDoc>(&w, "w")?, &lat, "w")?;
            emit(&json!({ "chi": v.mukai_pair(&lat, &w) }));
            Ok(ExitCode::SUCCESS)
        }
        Command::FromChern { r, divisor: d, c2 } => {
            let d = divisor(load_json::<DivisorDoc>(&d, "divisor")?, &lat, "divisor")?;
            let v = from_chern(&lat, r, d, c2).map_err(|e| InputError(e.to_string()))?;
            emit(&mukai_doc(&v));
            Ok(ExitCode::SUCCESS)
        }
        Command::Dual { v } => {
            let v = mukai(load_json::<MukaiDoc>(&v, "v")?, &lat, "v")?;
            emit(&mukai_doc(&v.dual()));
            Ok(ExitCode::SUCCESS)
        }
        Command::Twist { v, m } => {
            let v = mukai(load_json::<MukaiDoc>(&v, "v")?, &lat, "v")?;
            let m = divisor(load_json::<DivisorDoc>(&m, "m")?, &lat, "m")?;
            emit(&mukai_doc(&v.twist(&lat, &m)));
            Ok(ExitCode::SUCCESS)
        }
        Command::Reflect { v } => {
            let v = mukai(load_json::<MukaiDoc>(&v, "v")?, &lat, "v")?;
            emit(&mukai_doc(&reflect(&v)));
            Ok(ExitCode::SUCCESS)
        }
        Command::ReflectSeq { v } => {
            let v = mukai(load_json::<MukaiDoc>(&v, "v")?, &lat, "v")?;
            let r = reflect_via_sequences(&v).map_err(|e| InputError(e.to_string()))?;
            emit(&mukai_doc(&r));
            Ok(ExitCode::SUCCESS)
        }
        Command::Pullback { v } => {
            let v = mukai(load_json::<MukaiDoc>(&v, "v")?, &lat, "v")?;
            emit(&k3_doc(&pullback(&v)));
            Ok(ExitCode::SUCCESS)
        }
        Command::IsExceptional { v } => {
            let v = mukai(load_json::<MukaiDoc>(&v, "v")?, &lat, "v")?;
            emit(&json!({
                "exceptional": v.is_exceptional(&lat),
                "square": v.square(&lat),
            }));
            Ok(ExitCode::SUCCESS)
        }
        Command::FindPolarization { v, hseed, test_set: ts, kmax } => {
            if kmax < 1 {
                return Err(InputError(format!("kmax must be at least 1, got {kmax}")));
            }
            let v = mukai(load_json::<MukaiDoc>(&v, "v")?, &lat, "v")?;
            let hseed = divisor(load_json::<DivisorDoc>(&hseed, "hseed")?, &lat, "hseed")?;
            let tset = load_test_set(&ts, &lat)?;
            match find_coprime_ample(&lat, &v, &hseed, &tset, kmax) {
                Ok(cert) => {
                    let ok = cert.verify(&lat, &v, &hseed, &tset);
                    let verdict = if ok { "PASS" } else { "FAIL" };
                    emit(&json!({
                        "certificate": certificate_doc(&cert),
                        "verification": verdict,
                    }));
                    eprintln!("verification: {verdict}");
                    Ok(if ok { ExitCode::SUCCESS } else { ExitCode::from(1) })
                }
                Err(e) => search_failure(e),
            }
        }
        Command::IsotropicSeq { length, bound } => {
            if bound < 1 {
                return Err(InputError(format!("bound must be at least 1, got {bound}")));
            }
            match find_isotropic_sequence(&lat, length, bound) {
                Ok(seq) => {
                    let classes: Vec<&[i64]> = seq.classes().iter().map(|c| c.coords()).collect();
                    emit(&json!({ "classes": classes }));
                    Ok(ExitCode::SUCCESS)
                }
                Err(e) => search_failure(e),
            }
        }
        Command::CheckCollection { vectors } => {
            let docs: Vec<MukaiDoc> = load_json(&vectors, "vectors")?;
            let vs = docs
                .into_iter()
                .enumerate()
                .map(|(i, doc)| mukai(doc, &lat, &format!("vectors[{i}]")))
                .collect::<Result<Vec<MukaiVector>, _>>()?;
            let report = check_exceptional_collection_necessary(&lat, &vs);
            let verdict = if report.pass { "PASS" } else { "FAIL" };
            emit(&json!({ "chi_matrix": report.chi_matrix, "verdict": verdict }));
            eprintln!("collection: {verdict}");
            Ok(if report.pass { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        Command::Rr { divisor: d } => {
            let d = divisor(load_json::<DivisorDoc>(&d, "divisor")?, &lat, "divisor")?;
            emit(&json!({ "chi": rr_line_bundle(&lat, &d) }));
            Ok(ExitCode::SUCCESS)
        }
        Command::Classify { divisor: d, fixed_component_free } => {
            if !fixed_component_free {
                return Err(InputError(
                    "classify needs the explicit geometric assertion --fixed-component-free".into(),
                ));
            }
            let d = divisor(load_json::<DivisorDoc>(&d, "divisor")?, &lat, "divisor")?;
            let out = classify_free_system(&lat, &d).map_err(|e| InputError(e.to_string()))?;
            match out {
                FreeSystemClass::Irreducible => emit(&json!({ "kind": "irreducible" })),
                FreeSystemClass::Pencil { k, primitive } => emit(&json!({
                    "kind": "pencil",
                    "k": k,
                    "primitive": primitive.coords(),
                })),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::AmpleCriteria { divisor: d, test_set: ts } => {
            let d = divisor(load_json::<DivisorDoc>(&d, "divisor")?, &lat, "divisor")?;
            let tset = load_test_set(&ts, &lat)?;
            let report = ample_criteria(&lat, &d, &tset);
            if report.criteria_met {
                emit(&json!({
                    "criteria_met": true,
                    "ample": report.ample,
                    "two_d_globally_generated": report.two_d_globally_generated,
                    "three_d_very_ample": report.three_d_very_ample,
                }));
            } else {
                emit(&json!({ "criteria_met": false }));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Gallery => {
            let report = gallery::run(&lat);
            for ex in &report.examples {
                let line = if ex.pass { "PASS" } else { "FAIL" };
                eprintln!("example {}: {line}", ex.name);
            }
            emit(&report);
            let ok = report.verdict == "PASS";
            Ok(if ok { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
    }
}
