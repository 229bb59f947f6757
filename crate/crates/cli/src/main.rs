//! Command-line front end: full pipeline reports for a genus or twist
//! word, Alexander invariants of arbitrary presentations, and raw Fox
//! derivatives.
//!
//! Exit codes: 0 success, 2 usage/parse error, 1 internal consistency
//! failure.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use torusinv::laurent::{LaurentPoly, VarSet};
use torusinv::mapping_torus::{
    abelianization, alexander_matrix, first_elementary_ideal, fox_derivative, GroupPresentation,
    TorusError,
};
use torusinv::report::{build_report, consistency_violations, render_text, ReportDocument};
use torusinv::surface::{standard_monodromy, MappingClass};

#[derive(Parser)]
#[command(name = "torusinv", about = "Exact invariants of surface mapping tori and circle bundles over them", version)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Full pipeline for the standard monodromy of a given genus
    Report {
        #[arg(long)]
        genus: usize,
        #[arg(long)]
        json: bool,
    },
    /// Full pipeline for a custom twist word (rightmost twist acts first)
    Twists {
        word: String,
        #[arg(long)]
        genus: usize,
        #[arg(long)]
        json: bool,
    },
    /// Alexander invariants of a presentation file
    Alexander {
        file: PathBuf,
        /// comma-separated variable names for the free part
        #[arg(long)]
        vars: Option<String>,
    },
    /// Fox derivative of a free word with respect to one generator
    Fox { word: String, generator: String },
}

enum CliError {
    Usage(String),
    Internal(String),
}

impl From<TorusError> for CliError {
    fn from(e: TorusError) -> Self {
        match e {
            TorusError::Parse { .. } | TorusError::UnknownGenerator(_) => {
                CliError::Usage(e.to_string())
            }
            other => CliError::Internal(other.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.cmd) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Internal(msg)) => {
            eprintln!("internal error: {msg}");
            ExitCode::from(1)
        }
    }
}

fn run(cmd: Cmd) -> Result<(), CliError> {
    match cmd {
        Cmd::Report { genus, json } => {
            let mc = standard_monodromy(genus)
                .map_err(|e| CliError::Usage(e.to_string()))?;
            let word = mc.to_string();
            emit_report(&mc, &word, json)
        }
        Cmd::Twists { word, genus, json } => {
            let mc = MappingClass::parse(&word, genus)
                .map_err(|e| CliError::Usage(e.to_string()))?;
            emit_report(&mc, &word, json)
        }
        Cmd::Alexander { file, vars } => cmd_alexander(&file, vars.as_deref()),
        Cmd::Fox { word, generator } => cmd_fox(&word, &generator),
    }
}

fn emit_report(mc: &MappingClass, word: &str, json: bool) -> Result<(), CliError> {
    let doc: ReportDocument =
        build_report(mc, word).map_err(|e| CliError::Internal(e.to_string()))?;
    let violations = consistency_violations(&doc);
    if !violations.is_empty() {
        return Err(CliError::Internal(violations.join("; ")));
    }
    if json {
        let out = serde_json::to_string_pretty(&doc)
            .map_err(|e| CliError::Internal(e.to_string()))?;
        println!("{out}");
    } else {
        print!("{}", render_text(&doc));
    }
    Ok(())
}

fn cmd_alexander(file: &PathBuf, vars: Option<&str>) -> Result<(), CliError> {
    let text = std::fs::read_to_string(file)
        .map_err(|e| CliError::Usage(format!("{}: {e}", file.display())))?;
    let p = GroupPresentation::parse(&text)?;
    let (spec, amap) = abelianization(&p);
    let alex = alexander_matrix(&p, &amap);
    let mut e1 =
        first_elementary_ideal(&alex).map_err(|e| CliError::Internal(e.to_string()))?;
    if let Some(names) = vars {
        let names: Vec<String> = names.split(',').map(|s| s.trim().to_string()).collect();
        if names.len() != spec.free_rank {
            return Err(CliError::Usage(format!(
                "--vars lists {} names, free rank is {}",
                names.len(),
                spec.free_rank
            )));
        }
        let vs = VarSet::new(names).map_err(|e| CliError::Usage(e.to_string()))?;
        e1 = e1.rename_vars(&vs);
    }
    let torsion = if spec.torsion.is_empty() {
        String::new()
    } else {
        let parts: Vec<String> = spec.torsion.iter().map(|t| t.to_string()).collect();
        format!(" + torsion [{}]", parts.join(", "))
    };
    println!("H1: Z^{}{}", spec.free_rank, torsion);
    println!("Alexander matrix: {} x {}", alex.rows(), alex.cols());
    println!("E1: {e1}");
    println!("symmetrized: {}", symmetrized_text(&e1));
    Ok(())
}

fn symmetrized_text(e1: &LaurentPoly) -> String {
    if e1.is_zero() || e1.vars().is_empty() {
        return e1.to_string();
    }
    let var = e1.vars().index_of("t").unwrap_or(0);
    match e1.symmetrize(var) {
        Ok((sym, false)) => sym.to_string(),
        Ok((sym, true)) => format!("{sym} (odd span, centered up to one shift)"),
        Err(_) => e1.to_string(),
    }
}

fn cmd_fox(word: &str, generator: &str) -> Result<(), CliError> {
    let mut gens: Vec<String> = Vec::new();
    for tok in word.split_whitespace() {
        let name = tok.split('^').next().unwrap_or(tok);
        if !gens.iter().any(|g| g == name) {
            gens.push(name.to_string());
        }
    }
    let p = GroupPresentation::new(gens, vec![])?;
    let Some(x) = p.gen_index(generator) else {
        return Err(CliError::Usage(format!("unknown generator `{generator}`")));
    };
    let w = p.parse_word(word)?;
    let d = fox_derivative(&w, x);
    println!("{}", d.display(&p));
    let (_, amap) = abelianization(&p);
    println!("abelianized: {}", amap.elem_poly(&d));
    Ok(())
}
