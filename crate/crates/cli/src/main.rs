//! `invar`: exact invariant theory of finite matrix groups from the command line.

mod commands;
mod error;
mod gallery;
mod input;
mod session;

use clap::{Parser, Subcommand, ValueEnum};
use commands::{Limits, Output};
use error::{invalid, CliError};
use invar_core::geometry::fiberflat_diagnostic;
use serde_json::{json, Value};
use session::{BuiltinArgs, Command, FileArgs, Session, ToricArgs};

const SCHEMA_VERSION: u32 = 1;

#[derive(Parser, Debug)]
#[command(name = "invar", version, about = "Invariant rings and algebras of finite group actions, computed exactly")]
struct Cli {
    /// Degree cap (generators, truncations); defaults depend on the command.
    #[arg(long, global = true)]
    cap: Option<u32>,
    /// Degree cap for relations, measured in the original variables.
    #[arg(long, global = true)]
    relation_cap: Option<u32>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Raise the cyclotomic level to a multiple of this.
    #[arg(long, global = true)]
    level: Option<u32>,
    #[command(subcommand)]
    source: Source,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
enum Source {
    /// Diagonal action of a finite abelian group given by weights.
    Toric(ToricArgs),
    /// A named example action.
    Builtin(BuiltinArgs),
    /// An action read from a key = value session file.
    File(FileArgs),
    /// Run the example gallery, or one entry of it.
    Gallery {
        name: Option<String>,
        #[arg(long)]
        list: bool,
    },
    /// Fiberflatness criterion for a module of given rank and generator count.
    DiagnoseFiberflat {
        #[arg(long)]
        rank: u32,
        #[arg(long)]
        mu: u32,
        /// Dimension of the base.
        #[arg(long)]
        dim: u32,
        /// The non-free locus is isolated.
        #[arg(long)]
        isolated: bool,
        /// Sym of the module is irreducible.
        #[arg(long)]
        sym_irreducible: bool,
    },
}

/// One finished command, ready to render.
struct Document {
    label: String,
    command: String,
    source: Value,
    output: Output,
}

impl Document {
    fn json(&self) -> Value {
        json!({
            "schema_version": SCHEMA_VERSION,
            "source": self.source,
            "command": self.command,
            "result": self.output.result,
        })
    }

    fn text(&self) -> String {
        let mut s = format!("== {}: {} ==\n", self.label, self.command);
        for line in &self.output.text {
            s.push_str(line);
            s.push('\n');
        }
        s
    }
}

fn session_for(source: &Source, level: Option<u32>) -> Result<(Session, &Command), CliError> {
    let (session, command) = match source {
        Source::Toric(a) => (Session::toric(a)?, &a.command),
        Source::Builtin(a) => (Session::builtin(a)?, &a.command),
        Source::File(a) => (Session::file(a)?, &a.command),
        _ => unreachable!("handled by the caller"),
    };
    let session = match level {
        Some(l) => session.raise_level(l)?,
        None => session,
    };
    Ok((session, command))
}

fn run_single(cli: &Cli) -> Result<Document, CliError> {
    if let Source::DiagnoseFiberflat { rank, mu, dim, isolated, sym_irreducible } = &cli.source {
        let r = fiberflat_diagnostic(*rank, *mu, *dim, *isolated, *sym_irreducible)?;
        let verdict = serde_json::to_value(r.verdict).expect("serializable");
        let text = vec![
            format!("rank {}, {} generators, base dimension {}", r.rank, r.mu, r.d),
            format!("hypotheses asserted: isolated non-free locus {}, Sym irreducible {}", r.isolated_nonfree_locus, r.sym_irreducible),
            format!("verdict: {}", verdict.as_str().unwrap_or_default()),
        ];
        return Ok(Document {
            label: "module".into(),
            command: "diagnose-fiberflat".into(),
            source: json!({"kind": "module", "rank": r.rank, "mu": r.mu, "dim": r.d}),
            output: Output { text, result: serde_json::to_value(&r).expect("serializable") },
        });
    }
    let (session, command) = session_for(&cli.source, cli.level)?;
    let limits = Limits { cap: cli.cap, relation_cap: cli.relation_cap };
    let output = commands::run(&session, command, &limits)?;
    Ok(Document {
        label: session.label.clone(),
        command: command.name().into(),
        source: session.source.clone(),
        output,
    })
}

fn run_gallery(name: Option<&str>, list: bool, format: Format) -> Result<String, CliError> {
    if list {
        return Ok(gallery::GALLERY.iter().map(|e| format!("{:<24} {}\n", e.name, e.about)).collect());
    }
    let entries: Vec<&gallery::Entry> = match name {
        Some(n) => vec![gallery::find(n).ok_or_else(|| invalid(format!("no gallery entry {:?}", n)))?],
        None => gallery::GALLERY.iter().collect(),
    };
    let mut text = String::new();
    let mut docs = Vec::new();
    for entry in entries {
        text.push_str(&format!("### {}: {}\n", entry.name, entry.about));
        let mut runs = Vec::new();
        for argv in entry.runs {
            let cli = Cli::try_parse_from(std::iter::once("invar").chain(argv.iter().copied()))
                .map_err(|e| invalid(format!("gallery entry {}: {}", entry.name, e)))?;
            let doc = run_single(&cli)?;
            text.push_str(&doc.text());
            runs.push(doc.json());
        }
        text.push('\n');
        docs.push(json!({"name": entry.name, "about": entry.about, "runs": runs}));
    }
    Ok(match format {
        Format::Text => text,
        Format::Json => {
            let doc = json!({"schema_version": SCHEMA_VERSION, "gallery": docs});
            serde_json::to_string_pretty(&doc).expect("serializable") + "\n"
        }
    })
}

fn run(cli: &Cli) -> Result<String, CliError> {
    if let Source::Gallery { name, list } = &cli.source {
        return run_gallery(name.as_deref(), *list, cli.format);
    }
    let doc = run_single(cli)?;
    Ok(match cli.format {
        Format::Text => doc.text(),
        Format::Json => serde_json::to_string_pretty(&doc.json()).expect("serializable") + "\n",
    })
}

fn main() {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => print!("{}", out),
        Err(e) => {
            eprintln!("error: {}", e);
            std::process::exit(e.exit_code());
        }
    }
}
