use crate::error::{invalid, CliError};
use crate::input::{parse_construction, parse_session_file, parse_weights};
use clap::{Args, Subcommand};
use invar_core::builtin::{self, Builtin, SymRho};
use invar_core::group::Representation;
use invar_core::toric::AbelianGrading;
use serde_json::{json, Value};
use std::path::PathBuf;

#[derive(Subcommand, Debug, Clone)]
pub enum Command {
    /// Group order, generator images and kernels.
    Group,
    /// Characters, multiplicities of known irreducibles, regular-representation check.
    Character,
    /// Basis of the invariants of one bidegree.
    Invariants {
        #[arg(long, default_value_t = 2)]
        degree: u32,
        #[arg(long, default_value_t = 0)]
        w_degree: u32,
    },
    /// Minimal generators and relations of the invariant ring or algebra.
    #[command(alias = "min-generators")]
    Algebra,
    /// Hilbert basis of the degree-zero monoid with its binomial relations.
    HilbertBasis,
    /// Binomial relations among the Hilbert basis.
    Relations,
    /// Fiber ring over the vertex point.
    VertexFiber,
    /// Monomial bases of S and K[W] per character.
    CharacterDecomp,
    /// Fiber over the image of a point of the X space.
    Fiber {
        #[arg(long, allow_hyphen_values = true)]
        point: String,
    },
    /// Singular points in the fiber over a point.
    Singularities {
        #[arg(long, allow_hyphen_values = true)]
        point: String,
        /// W coordinates of a single point in that fiber.
        #[arg(long, allow_hyphen_values = true)]
        fiber_point: Option<String>,
    },
    /// Fundamental group of the regular locus.
    Pi1,
    /// Reflections, mirrors and fixed spaces.
    Reflections,
    /// Molien series coefficients.
    Molien,
    /// Compare Sym of the covariant module with the invariant algebra.
    CompareSym,
    /// Tensor product with a second W grading against the invariants of the product.
    CheckNormalization {
        #[arg(long, allow_hyphen_values = true)]
        with_ww: String,
    },
    /// Pullback of the invariant algebra along S over R.
    CheckPullback,
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Group => "group",
            Command::Character => "character",
            Command::Invariants { .. } => "invariants",
            Command::Algebra => "algebra",
            Command::HilbertBasis => "hilbert-basis",
            Command::Relations => "relations",
            Command::VertexFiber => "vertex-fiber",
            Command::CharacterDecomp => "character-decomp",
            Command::Fiber { .. } => "fiber",
            Command::Singularities { .. } => "singularities",
            Command::Pi1 => "pi1",
            Command::Reflections => "reflections",
            Command::Molien => "molien",
            Command::CompareSym => "compare-sym",
            Command::CheckNormalization { .. } => "check-normalization",
            Command::CheckPullback => "check-pullback",
        }
    }
}

#[derive(Args, Debug, Clone)]
pub struct ToricArgs {
    /// Invariant factors of the grading group, e.g. `2,2`.
    #[arg(long, value_delimiter = ',', required = true)]
    pub factors: Vec<u64>,
    /// X weights: variables separated by `,`, components by `:`.
    #[arg(long, allow_hyphen_values = true)]
    pub xw: String,
    /// W weights, same grammar.
    #[arg(long, allow_hyphen_values = true, default_value = "")]
    pub ww: String,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct BuiltinArgs {
    /// cyclicone, asing, cyclic, toric11, klein, cyclic4, sym, sym3, sym3-plane, regular
    pub name: String,
    #[arg(long)]
    pub k: Option<u64>,
    #[arg(long, allow_hyphen_values = true)]
    pub l: Option<i64>,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub variant: Option<u8>,
    /// X weights for `cyclic`.
    #[arg(long, allow_hyphen_values = true)]
    pub weights: Option<String>,
    /// W weights for `cyclic`; a representation such as `sign`, `det` or `trivial(2)` otherwise.
    #[arg(long, allow_hyphen_values = true)]
    pub rho: Option<String>,
    /// Use ρ = det for sym3-plane.
    #[arg(long)]
    pub det: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct FileArgs {
    pub path: PathBuf,
    #[command(subcommand)]
    pub command: Command,
}

/// A resolved group action with its provenance for reports.
pub struct Session {
    pub label: String,
    pub source: Value,
    pub beta: Representation,
    pub rho: Option<Representation>,
    pub grading: Option<AbelianGrading>,
    pub irreducibles: Vec<Representation>,
}

impl Session {
    fn from_builtin(b: Builtin, source: Value) -> Session {
        Session {
            label: b.name,
            source,
            beta: b.beta,
            rho: b.rho,
            grading: b.grading,
            irreducibles: b.irreducibles,
        }
    }

    pub fn order(&self) -> usize {
        self.beta.group().order()
    }

    /// Lifts everything to a level divisible by `level`.
    pub fn raise_level(mut self, level: u32) -> Result<Session, CliError> {
        if level == 0 {
            return Err(invalid("--level must be positive"));
        }
        let target = num_integer::lcm(self.beta.level(), level);
        self.beta = self.beta.lift(target)?;
        if let Some(r) = self.rho.take() {
            self.rho = Some(r.lift(num_integer::lcm(r.level(), level))?);
        }
        self.irreducibles = self
            .irreducibles
            .iter()
            .map(|r| r.lift(num_integer::lcm(r.level(), level)))
            .collect::<Result<_, _>>()?;
        Ok(self)
    }

    pub fn toric(args: &ToricArgs) -> Result<Session, CliError> {
        let r = args.factors.len();
        let grading = AbelianGrading::new(args.factors.clone(), parse_weights(&args.xw, r)?, parse_weights(&args.ww, r)?)?;
        let source = json!({"kind": "toric", "factors": args.factors, "xw": args.xw, "ww": args.ww});
        Ok(Session::from_builtin(builtin::toric("toric", grading), source))
    }

    pub fn file(args: &FileArgs) -> Result<Session, CliError> {
        let text = std::fs::read_to_string(&args.path)
            .map_err(|e| invalid(format!("cannot read {}: {}", args.path.display(), e)))?;
        let f = parse_session_file(&text)?;
        Ok(Session {
            source: json!({"kind": "file", "name": f.name}),
            label: f.name,
            beta: f.beta,
            rho: f.rho,
            grading: None,
            irreducibles: Vec::new(),
        })
    }

    pub fn builtin(a: &BuiltinArgs) -> Result<Session, CliError> {
        let need_k = || a.k.ok_or_else(|| invalid(format!("builtin {} needs --k", a.name)));
        let mut rho_is_weights = false;
        let b = match a.name.as_str() {
            "cyclicone" => builtin::cyclicone(need_k()?, a.l.unwrap_or(1))?,
            "asing" => builtin::a_singularity(need_k()?, a.l.unwrap_or(1))?,
            "cyclic" => {
                rho_is_weights = true;
                let k = need_k()?;
                let xw = parse_weights(a.weights.as_deref().unwrap_or("1"), 1)?;
                let ww = parse_weights(a.rho.as_deref().unwrap_or(""), 1)?;
                let grading = AbelianGrading::new(vec![k], xw, ww)?;
                builtin::toric(&format!("cyclic-{}", k), grading)
            }
            "toric11" => builtin::toric11(),
            "klein" => builtin::klein(a.variant.unwrap_or(1))?,
            "cyclic4" => builtin::cyclic4(),
            "sym" | "sym3" => {
                let n = if a.name == "sym3" { 3 } else { a.n.ok_or_else(|| invalid("builtin sym needs --n"))? };
                let mut b = builtin::sym(n, SymRho::None)?;
                b.name = format!("sym{}", n);
                b
            }
            "sym3-plane" => builtin::sym3_plane(a.det),
            "regular" => {
                let k = need_k()?;
                if k == 0 || k > u32::MAX as u64 {
                    return Err(invalid("--k out of range"));
                }
                builtin::regular_cyclic(k as u32)
            }
            other => return Err(invalid(format!("unknown builtin {:?}", other))),
        };
        let b = match (&a.rho, rho_is_weights) {
            (Some(spec), false) => {
                let rho = parse_construction(spec, &b.beta)?;
                let name = format!("{}-{}", b.name, spec.replace(['(', ')', ',', ' '], ""));
                let mut out = b.with_rho(&name, rho);
                out.grading = None;
                out
            }
            _ => b,
        };
        let source = json!({
            "kind": "builtin",
            "name": a.name,
            "k": a.k,
            "l": a.l,
            "n": a.n,
            "variant": a.variant,
            "weights": a.weights,
            "rho": a.rho,
            "det": a.det,
        });
        Ok(Session::from_builtin(b, source))
    }

    pub fn require_grading(&self) -> Result<&AbelianGrading, CliError> {
        self.grading
            .as_ref()
            .ok_or_else(|| invalid(format!("{} is not a diagonal (toric) action", self.label)))
    }

    pub fn require_rho(&self) -> Result<&Representation, CliError> {
        self.rho
            .as_ref()
            .ok_or_else(|| invalid(format!("{} has no W representation; pass --rho", self.label)))
    }
}
