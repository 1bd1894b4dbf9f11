//! Command-line front end for the exact commutative-algebra engine.
//!
//! The binary reads small text fixtures (grammar documented in
//! `cmcore::polyring::parse`) and runs Gröbner-basis, membership,
//! Hilbert-series, Fitting-ideal, tangent-space, and deformation-lift
//! computations, plus a named catalog of self-contained verification checks.
//!
//! Exit codes: `0` success, `1` a computation ran but the answer is negative
//! (non-member, failed lift, failed check), `2` usage or input errors.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use cmcore::cmcurves::{
    characteristic_sensitive, run_check, CheckContext, CheckStatus, VerificationReport, CATALOG,
};
use cmcore::deform::{lift_check, tangent_dimension, DeformationSetup};
use cmcore::groebner::Ideal;
use cmcore::idealops::{fitting_ideal, hilbert, ModulePresentation, DEFAULT_TABLE_DEPTH};
use cmcore::polyring::{parse_document, parse_polynomial, CoefficientField, Document, PolyMatrix};
use cmcore::{CaError, Result};

/// Exact commutative algebra for determinantal space curves.
#[derive(Parser)]
#[command(name = "cmcurves", version, about, max_term_width = 100)]
#[command(after_help = "\
FIXTURE GRAMMAR (one statement per line, `#` starts a comment):
  ring F0 vars x,y,u,w;          coefficient field (F0 = rationals, Fp = prime field) and variables
  ideal: x*y - u^2, x^3;         ideal generators
  by: x, y;                      auxiliary ideal (unused by this binary)
  matrix: [x, 0] [0, y];         relation matrix, one bracketed row per entry
  generators: f, g;              module/deformation generators (a single row)
  obstruction: b*c;              obstruction ideal for liftcheck
  defvars a, b;                  deformation variables for liftcheck
  truncate 3;                    lift truncation degree
  degrees: 0, 1;                 generator degrees for graded presentations

EXIT CODES: 0 success / positive answer, 1 negative answer or failed check, 2 usage or input error.")]
struct Cli {
    /// Coefficient field: `q` for the rationals or `fp:<p>` for a prime field.
    /// For file commands this overrides the field declared in the fixture.
    #[arg(long, global = true, value_parser = parse_field)]
    field: Option<CoefficientField>,

    /// Seed for the randomized verification checks.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Emit machine-readable JSON (one object per line) instead of text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the reduced Gröbner basis of the ideal in FILE.
    Gb {
        /// Fixture with a `ring` and an `ideal:` statement.
        file: PathBuf,
    },
    /// Decide whether POLY lies in the ideal in FILE (exit 1 if it does not).
    Member {
        /// Fixture with a `ring` and an `ideal:` statement.
        file: PathBuf,
        /// Polynomial in the fixture's variables.
        poly: String,
    },
    /// Print the Hilbert function, series numerator, and Hilbert polynomial.
    Hilbert {
        /// Fixture with a `ring` and an `ideal:` statement.
        file: PathBuf,
        /// How many degrees of the Hilbert function to tabulate.
        #[arg(long, default_value_t = DEFAULT_TABLE_DEPTH)]
        depth: u32,
    },
    /// Print a Fitting ideal of the module presented by the matrix in FILE.
    Fitting {
        /// Fixture with a `ring`, a `matrix:` statement, and optional `degrees:`.
        file: PathBuf,
        /// Which Fitting ideal to compute (0 = the annihilator-sized one).
        #[arg(long, default_value_t = 0)]
        index: usize,
    },
    /// Print the dimension of the tangent space to the ideal in FILE.
    Tangent {
        /// Fixture with a `ring` and an `ideal:` statement.
        file: PathBuf,
    },
    /// Check that the relations lift modulo the obstruction ideal (exit 1 on failure).
    Liftcheck {
        /// Fixture with `generators:`, `matrix:`, `obstruction:`, `defvars`, and `truncate`.
        file: PathBuf,
    },
    /// Run one named verification check, or `all` for the whole catalog.
    Verify {
        /// A check id from the catalog, or `all`.
        check: String,
    },
}

fn parse_field(s: &str) -> std::result::Result<CoefficientField, String> {
    if s == "q" {
        return Ok(CoefficientField::Rationals);
    }
    if let Some(p) = s.strip_prefix("fp:") {
        let p: u64 = p
            .parse()
            .map_err(|_| format!("`{p}` is not a valid characteristic"))?;
        return CoefficientField::new(p).map_err(|e| e.to_string());
    }
    Err(format!("`{s}` is not a field; use `q` or `fp:<p>`"))
}

fn field_label(field: CoefficientField) -> String {
    match field.characteristic() {
        0 => "q".to_string(),
        p => format!("fp:{p}"),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Result<u8> {
    match &cli.command {
        Command::Gb { file } => cmd_gb(cli, file),
        Command::Member { file, poly } => cmd_member(cli, file, poly),
        Command::Hilbert { file, depth } => cmd_hilbert(cli, file, *depth),
        Command::Fitting { file, index } => cmd_fitting(cli, file, *index),
        Command::Tangent { file } => cmd_tangent(cli, file),
        Command::Liftcheck { file } => cmd_liftcheck(cli, file),
        Command::Verify { check } => cmd_verify(cli, check),
    }
}

fn load_document(path: &Path, field: Option<CoefficientField>) -> Result<Document> {
    let src = fs::read_to_string(path)
        .map_err(|e| CaError::invalid(format!("cannot read {}: {e}", path.display())))?;
    parse_document(&src, field)
}

fn ideal_from(doc: &Document, path: &Path) -> Result<Ideal> {
    let gens = doc.ideal.clone().ok_or_else(|| {
        CaError::invalid(format!(
            "{} must declare an `ideal:` statement",
            path.display()
        ))
    })?;
    Ideal::new(&doc.ring, gens)
}

fn json_str_list(items: &[String]) -> serde_json::Value {
    serde_json::Value::Array(
        items
            .iter()
            .map(|s| serde_json::Value::String(s.clone()))
            .collect(),
    )
}

fn print_basis(label: &str, basis: &[String], json: bool) {
    if json {
        let record = serde_json::json!({ "command": label, "basis": json_str_list(basis) });
        println!("{record}");
    } else {
        println!("{label} basis ({} elements):", basis.len());
        for b in basis {
            println!("  {b}");
        }
    }
}

fn cmd_gb(cli: &Cli, path: &Path) -> Result<u8> {
    let doc = load_document(path, cli.field)?;
    let ideal = ideal_from(&doc, path)?;
    let basis: Vec<String> = ideal
        .groebner_basis()
        .iter()
        .map(|p| p.to_string())
        .collect();
    print_basis("gb", &basis, cli.json);
    Ok(0)
}

fn cmd_member(cli: &Cli, path: &Path, poly: &str) -> Result<u8> {
    let doc = load_document(path, cli.field)?;
    let ideal = ideal_from(&doc, path)?;
    let f = parse_polynomial(&doc.ring, poly)?;
    let nf = ideal.normal_form(&f);
    let member = nf.is_zero();
    if cli.json {
        let record = serde_json::json!({
            "command": "member",
            "polynomial": f.to_string(),
            "member": member,
            "normalForm": nf.to_string(),
        });
        println!("{record}");
    } else {
        println!("member: {member}");
        println!("normal form: {nf}");
    }
    Ok(u8::from(!member))
}

fn cmd_hilbert(cli: &Cli, path: &Path, depth: u32) -> Result<u8> {
    let doc = load_document(path, cli.field)?;
    let ideal = ideal_from(&doc, path)?;
    let data = hilbert(&ideal, depth)?;
    if cli.json {
        let table: Vec<serde_json::Value> = data
            .function_table
            .iter()
            .map(|&(d, v)| serde_json::json!([d, v]))
            .collect();
        let record = serde_json::json!({
            "command": "hilbert",
            "seriesNumerator": data.series_numerator,
            "functionTable": table,
            "hilbertPolynomial": data.render_polynomial(),
            "regularityIndex": data.regularity_index,
        });
        println!("{record}");
    } else {
        let numerator: Vec<String> = data.series_numerator.iter().map(i64::to_string).collect();
        println!("series numerator coefficients: [{}]", numerator.join(", "));
        for &(d, v) in &data.function_table {
            println!("H({d}) = {v}");
        }
        println!("hilbert polynomial: {}", data.render_polynomial());
        println!("agrees with the polynomial from degree {}", data.regularity_index);
    }
    Ok(0)
}

fn presentation_from(doc: &Document, path: &Path) -> Result<ModulePresentation> {
    let matrix = doc.matrix.clone().ok_or_else(|| {
        CaError::invalid(format!(
            "{} must declare a `matrix:` (or `relations:`) statement",
            path.display()
        ))
    })?;
    match &doc.degrees {
        Some(degrees) => {
            let degrees: Vec<i64> = degrees.iter().map(|&d| i64::from(d)).collect();
            ModulePresentation::new(&doc.ring, degrees, matrix)
        }
        None => ModulePresentation::ungraded(&doc.ring, matrix),
    }
}

fn cmd_fitting(cli: &Cli, path: &Path, index: usize) -> Result<u8> {
    let doc = load_document(path, cli.field)?;
    let presentation = presentation_from(&doc, path)?;
    let fitt = fitting_ideal(&presentation, index)?;
    let basis: Vec<String> = fitt
        .groebner_basis()
        .iter()
        .map(|p| p.to_string())
        .collect();
    print_basis("fitting", &basis, cli.json);
    Ok(0)
}

fn cmd_tangent(cli: &Cli, path: &Path) -> Result<u8> {
    let doc = load_document(path, cli.field)?;
    let ideal = ideal_from(&doc, path)?;
    let dim = tangent_dimension(&ideal)?;
    if cli.json {
        let record = serde_json::json!({ "command": "tangent", "dimension": dim });
        println!("{record}");
    } else {
        println!("{dim}");
    }
    Ok(0)
}

fn cmd_liftcheck(cli: &Cli, path: &Path) -> Result<u8> {
    let doc = load_document(path, cli.field)?;
    let generators = doc.generators.clone().ok_or_else(|| {
        CaError::invalid(format!(
            "{} must declare a `generators:` statement",
            path.display()
        ))
    })?;
    let generators = PolyMatrix::from_rows(&doc.ring, vec![generators])?;
    let relations = doc.matrix.clone().ok_or_else(|| {
        CaError::invalid(format!(
            "{} must declare a `matrix:` (or `relations:`) statement",
            path.display()
        ))
    })?;
    let obstruction = match &doc.obstruction {
        Some(gens) => Ideal::new(&doc.ring, gens.clone())?,
        None => Ideal::zero(&doc.ring),
    };
    let defvars = doc.defvars.clone().ok_or_else(|| {
        CaError::invalid(format!("{} must declare a `defvars` statement", path.display()))
    })?;
    let defvars: Vec<usize> = defvars
        .iter()
        .map(|name| {
            doc.ring
                .var_index(name)
                .ok_or_else(|| CaError::UnknownVariable(name.clone()))
        })
        .collect::<Result<_>>()?;
    let truncate = doc.truncate.ok_or_else(|| {
        CaError::invalid(format!("{} must declare a `truncate` statement", path.display()))
    })?;
    let setup = DeformationSetup::new(generators, relations, obstruction, &defvars, truncate)?;
    let report = lift_check(&setup)?;
    if cli.json {
        let residue: Vec<serde_json::Value> = (0..report.residue.nrows())
            .map(|r| {
                serde_json::Value::Array(
                    (0..report.residue.ncols())
                        .map(|c| serde_json::Value::String(report.residue.get(r, c).to_string()))
                        .collect(),
                )
            })
            .collect();
        let record = serde_json::json!({
            "command": "liftcheck",
            "residue": residue,
            "zeroModObstruction": report.is_zero_mod_obstruction,
        });
        println!("{record}");
    } else {
        println!("residue of generators x relations:");
        print!("{}", report.residue);
        println!("zero mod obstruction: {}", report.is_zero_mod_obstruction);
    }
    Ok(u8::from(!report.is_zero_mod_obstruction))
}

fn emit_report(report: &VerificationReport, field: CoefficientField, json: bool) {
    if json {
        let details: Vec<serde_json::Value> = report
            .details
            .iter()
            .map(|(k, v)| serde_json::json!({ "name": k, "value": v }))
            .collect();
        let record = serde_json::json!({
            "command": "verify",
            "check": report.check_id,
            "field": field_label(field),
            "status": report.status.as_str(),
            "details": details,
            "elapsedMs": report.elapsed.as_secs_f64() * 1000.0,
        });
        println!("{record}");
    } else {
        println!(
            "check {} [{}]: {}",
            report.check_id,
            field_label(field),
            report.status.as_str()
        );
        for (k, v) in &report.details {
            println!("  {k}: {v}");
        }
    }
}

fn cmd_verify(cli: &Cli, check: &str) -> Result<u8> {
    let field = cli.field.unwrap_or(CoefficientField::Rationals);
    let runs: Vec<(&str, CoefficientField)> = if check == "all" {
        CATALOG
            .iter()
            .flat_map(|&id| -> Vec<(&str, CoefficientField)> {
                if characteristic_sensitive(id) {
                    vec![
                        (id, CoefficientField::Rationals),
                        (id, CoefficientField::new(2).expect("2 is prime")),
                        (id, CoefficientField::new(3).expect("3 is prime")),
                    ]
                } else {
                    vec![(id, field)]
                }
            })
            .collect()
    } else {
        vec![(check, field)]
    };

    let mut passed = 0usize;
    for &(id, run_field) in &runs {
        let ctx = CheckContext {
            field: run_field,
            seed: cli.seed,
        };
        let report = run_check(id, &ctx)?;
        if report.status == CheckStatus::Pass {
            passed += 1;
        }
        emit_report(&report, run_field, cli.json);
    }
    if !cli.json {
        println!("{passed} of {} check runs passed", runs.len());
    }
    Ok(u8::from(passed != runs.len()))
}
