//! Command-line front end: argument grammar, dispatch and report rendering.
//!
//! Exit codes: 0 when every check is empty or a construction succeeded,
//! 1 when violations were found, 2 on input errors.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use trialab::crossed::{self, CrossedModuleProperties};
use trialab::document::{self, Document, Payload};
use trialab::functors::{self, Variant};
use trialab::operators::{self, OperatorKind};
use trialab::linalg::is_zero_vector;
use trialab::{action, structure};
use trialab::{Action, Algebra, CrossedModule, Error, Kind, Matrix, Scalar, Subspace, ViolationReport};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATIONS: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

/// Environment variable capping the number of worker threads.
pub const THREADS_VAR: &str = "TRIALAB_THREADS";

#[derive(Parser, Debug)]
#[command(name = "trialab", version, about = "Exact checks and constructions for triassociative, Leibniz and ternary Leibniz algebras")]
pub struct Cli {
    /// Print structured JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Verify axioms and identities.
    #[command(subcommand)]
    Check(CheckCmd),
    /// Build new algebras from existing ones.
    #[command(subcommand)]
    Construct(ConstructCmd),
    /// Derived algebra of an operator.
    Derive(DeriveArgs),
    /// Functors into ternary Leibniz algebras and related reorientations.
    #[command(subcommand)]
    Functor(FunctorCmd),
    /// Induced ternary crossed modules.
    #[command(subcommand)]
    Induce(InduceCmd),
    /// Operator twists of crossed modules and actions.
    #[command(subcommand)]
    Twist(TwistCmd),
    /// Structural properties of crossed modules and functors.
    #[command(subcommand)]
    Prop(PropCmd),
    /// Exhaustive searches over small coefficient grids.
    #[command(subcommand)]
    Search(SearchCmd),
}

#[derive(Args, Debug)]
pub struct OperatorArgs {
    /// Operator family.
    #[arg(long = "operator", value_name = "KIND")]
    pub operator: OperatorName,
    /// Rota-Baxter weight, as `p/q`.
    #[arg(long, allow_hyphen_values = true, value_name = "P/Q")]
    pub weight: Option<String>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum OperatorName {
    RotaBaxter,
    Nijenhuis,
    Reynolds,
    Averaging,
    Centroid,
}

impl OperatorName {
    fn name(self) -> &'static str {
        match self {
            OperatorName::RotaBaxter => "rota-baxter",
            OperatorName::Nijenhuis => "nijenhuis",
            OperatorName::Reynolds => "reynolds",
            OperatorName::Averaging => "averaging",
            OperatorName::Centroid => "centroid",
        }
    }
}

#[derive(Args, Debug)]
pub struct Output {
    /// Write the constructed document here instead of stdout.
    #[arg(short = 'o', long = "output", value_name = "PATH")]
    pub output: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum CheckCmd {
    /// Axioms of the algebra's kind.
    Structure {
        algebra: PathBuf,
        /// Check the left-oriented ternary identity instead (ternary algebras only).
        #[arg(long)]
        left: bool,
    },
    /// Operator identities.
    Operator {
        algebra: PathBuf,
        map: PathBuf,
        #[command(flatten)]
        op: OperatorArgs,
    },
    /// Multiplicativity of a linear map.
    Morphism { map: PathBuf, source: PathBuf, target: PathBuf },
    /// Action axioms, via the semidirect product.
    Action { action: PathBuf },
    /// Crossed-module axioms.
    CrossedModule { crossed_module: PathBuf },
    /// Morphism of crossed modules given by a pair of maps.
    CrossedMorphism {
        source: PathBuf,
        target: PathBuf,
        /// Map between the acted algebras.
        #[arg(long)]
        alpha: PathBuf,
        /// Map between the acting algebras.
        #[arg(long)]
        beta: PathBuf,
    },
}

#[derive(Subcommand, Debug)]
pub enum ConstructCmd {
    /// Quotient by a two-sided ideal.
    Quotient {
        algebra: PathBuf,
        ideal: PathBuf,
        #[command(flatten)]
        out: Output,
    },
    /// Direct sum of two algebras of the same kind.
    DirectSum {
        first: PathBuf,
        second: PathBuf,
        #[command(flatten)]
        out: Output,
    },
    /// Semidirect product of an action.
    Semidirect {
        action: PathBuf,
        #[command(flatten)]
        out: Output,
    },
    /// Crossed module of an ideal inclusion.
    FromIdeal {
        algebra: PathBuf,
        ideal: PathBuf,
        #[command(flatten)]
        out: Output,
    },
}

#[derive(Args, Debug)]
pub struct DeriveArgs {
    pub algebra: PathBuf,
    pub map: PathBuf,
    #[command(flatten)]
    pub op: OperatorArgs,
    #[command(flatten)]
    pub out: Output,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum VariantName {
    Main,
    B1,
    B2,
}

#[derive(Subcommand, Debug)]
pub enum FunctorCmd {
    /// Ternary Leibniz algebra of a triassociative algebra.
    TTri {
        algebra: PathBuf,
        #[arg(long, value_enum, default_value = "main")]
        variant: VariantName,
        #[command(flatten)]
        out: Output,
    },
    /// Ternary Leibniz algebra `[x, [y, z]]` of a Leibniz algebra.
    TLeibniz {
        algebra: PathBuf,
        #[command(flatten)]
        out: Output,
    },
    /// Switch between the right and left ternary identities.
    Swap {
        algebra: PathBuf,
        #[command(flatten)]
        out: Output,
    },
    /// Opposite triassociative algebra.
    Opposite {
        algebra: PathBuf,
        #[command(flatten)]
        out: Output,
    },
    /// Ternary Leibniz algebra of an associative algebra with an averaging map.
    AssocAveraging {
        algebra: PathBuf,
        beta: PathBuf,
        /// Use `[a, [b, c]]` for the Leibniz bracket `x β(y) − β(y) x` instead.
        #[arg(long)]
        nested: bool,
        #[command(flatten)]
        out: Output,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum InduceFrom {
    Triassoc,
    Leibniz,
}

#[derive(Subcommand, Debug)]
pub enum InduceCmd {
    /// Ternary crossed module induced by a triassociative or Leibniz one.
    TernaryCm {
        crossed_module: PathBuf,
        #[arg(long, value_enum)]
        from: InduceFrom,
        #[command(flatten)]
        out: Output,
    },
}

#[derive(Subcommand, Debug)]
pub enum TwistCmd {
    /// Rota-Baxter twist of a Leibniz crossed module or a ternary action.
    Rb {
        input: PathBuf,
        /// Operator on the acted algebra.
        #[arg(long)]
        r_acted: PathBuf,
        /// Operator on the acting algebra.
        #[arg(long)]
        r_acting: PathBuf,
        #[arg(long, allow_hyphen_values = true, default_value = "0", value_name = "P/Q")]
        weight: String,
        /// Emit the twisted Leibniz crossed module instead of the induced ternary one.
        #[arg(long)]
        binary: bool,
        #[command(flatten)]
        out: Output,
    },
    /// Averaging twist of a triassociative crossed module.
    Averaging {
        crossed_module: PathBuf,
        #[arg(long)]
        beta_acted: PathBuf,
        #[arg(long)]
        beta_acting: PathBuf,
        #[command(flatten)]
        out: Output,
    },
}

#[derive(Subcommand, Debug)]
pub enum PropCmd {
    /// Whether the shift map is an endomorphism of the semidirect product.
    Shift { crossed_module: PathBuf },
    /// The three maps between induced ternary semidirect products.
    SemidirectMaps { crossed_module: PathBuf },
    /// Kernel, image and annihilator properties.
    CmProperties { crossed_module: PathBuf },
    /// Ternary algebra of the derived Leibniz algebra versus derived ternary algebra.
    RbEquality {
        algebra: PathBuf,
        map: PathBuf,
        #[arg(long, allow_hyphen_values = true, default_value = "0", value_name = "P/Q")]
        weight: String,
    },
    /// Whether the functor commutes with semidirect products for an action.
    TSemidirect { action: PathBuf },
}

#[derive(Subcommand, Debug)]
pub enum SearchCmd {
    /// All operators of a kind with entries from a grid.
    Operators {
        algebra: PathBuf,
        #[arg(long, value_enum)]
        kind: OperatorName,
        #[arg(long, allow_hyphen_values = true, value_name = "P/Q")]
        weight: Option<String>,
        /// Comma-separated coefficient grid.
        #[arg(long, allow_hyphen_values = true, default_value = "-1,0,1")]
        grid: String,
        /// Only search diagonal matrices.
        #[arg(long)]
        diagonal: bool,
        /// Write the JSON result here.
        #[arg(short = 'o', long = "output")]
        output: Option<PathBuf>,
    },
}

/// What a command produced.
enum Outcome {
    Report { title: String, report: ViolationReport },
    Document { doc: Document, out: Option<PathBuf> },
    Verdict { title: String, holds: bool, details: Value, text: String },
    Search { value: Value, text: String, out: Option<PathBuf> },
}

/// Failure modes: violations embedded in a refused construction, or bad input.
enum Failure {
    Violations { message: String, report: ViolationReport },
    Input(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let message = e.to_string();
        match e {
            Error::InvalidAlgebra(report)
            | Error::OperatorCheckFailed(report)
            | Error::InvalidAction(report)
            | Error::InvalidCrossedModule(report)
            | Error::Precondition { report, .. }
            | Error::OutputCheckFailed { report, .. } => Failure::Violations { message, report },
            _ => Failure::Input(message),
        }
    }
}

type CmdResult = std::result::Result<Outcome, Failure>;

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    execute(&cli, out, err)
}

pub fn execute(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match dispatch(&cli.command) {
        Ok(outcome) => render(outcome, cli.json, out, err),
        Err(Failure::Input(message)) => {
            let _ = writeln!(err, "error: {message}");
            EXIT_INPUT
        }
        Err(Failure::Violations { message, report }) => {
            let _ = writeln!(err, "error: {message}");
            write_report(&message, &report, cli.json, out);
            EXIT_VIOLATIONS
        }
    }
}

/// Reads [`THREADS_VAR`] and sizes the global worker pool.
pub fn configure_threads() -> std::result::Result<(), String> {
    let Ok(raw) = std::env::var(THREADS_VAR) else {
        return Ok(());
    };
    let n: usize = raw
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| format!("{THREADS_VAR} must be a positive integer, got `{raw}`"))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| e.to_string())
}

// ---------------------------------------------------------------- inputs

fn load(path: &Path) -> std::result::Result<Document, Failure> {
    document::load(path).map_err(Failure::from)
}

fn algebra(path: &Path) -> std::result::Result<Algebra, Failure> {
    Ok(load(path)?.into_algebra().map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?)
}

fn map(path: &Path) -> std::result::Result<Matrix, Failure> {
    Ok(load(path)?.into_map().map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?)
}

fn subspace(path: &Path) -> std::result::Result<Subspace, Failure> {
    Ok(load(path)?.into_subspace().map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?)
}

fn action_doc(path: &Path) -> std::result::Result<Action, Failure> {
    Ok(load(path)?.into_action().map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?)
}

fn crossed_module(path: &Path) -> std::result::Result<CrossedModule, Failure> {
    Ok(load(path)?
        .into_crossed_module()
        .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?)
}

fn rational(s: &str) -> std::result::Result<Scalar, Failure> {
    document::parse_rational(s).ok_or_else(|| Failure::Input(format!("invalid rational `{s}`")))
}

fn operator_kind(name: OperatorName, weight: Option<&str>) -> std::result::Result<OperatorKind, Failure> {
    let weight = weight.map(rational).transpose()?;
    Ok(OperatorKind::parse(name.name(), weight)?)
}

fn parse_grid(s: &str) -> std::result::Result<Vec<Scalar>, Failure> {
    let mut grid = s.split(',').map(|x| rational(x.trim())).collect::<std::result::Result<Vec<_>, _>>()?;
    grid.sort();
    grid.dedup();
    Ok(grid)
}

// ---------------------------------------------------------------- dispatch

fn report(title: &str, report: ViolationReport) -> CmdResult {
    Ok(Outcome::Report {
        title: title.to_string(),
        report,
    })
}

fn built(doc: impl Into<Document>, out: &Output) -> CmdResult {
    Ok(Outcome::Document {
        doc: doc.into(),
        out: out.output.clone(),
    })
}

fn dispatch(cmd: &Command) -> CmdResult {
    match cmd {
        Command::Check(c) => check(c),
        Command::Construct(c) => construct(c),
        Command::Derive(d) => {
            let a = algebra(&d.algebra)?;
            let kind = operator_kind(d.op.operator, d.op.weight.as_deref())?;
            built(operators::derive_from_operator(&a, &map(&d.map)?, &kind)?, &d.out)
        }
        Command::Functor(c) => functor(c),
        Command::Induce(InduceCmd::TernaryCm { crossed_module: p, from, out }) => {
            let cm = crossed_module(p)?;
            let induced = match from {
                InduceFrom::Triassoc => crossed::induce_ternary_cm_from_triassoc(&cm)?,
                InduceFrom::Leibniz => crossed::induce_ternary_cm_from_leibniz(&cm)?,
            };
            built(induced, out)
        }
        Command::Twist(c) => twist(c),
        Command::Prop(c) => prop(c),
        Command::Search(SearchCmd::Operators {
            algebra: p,
            kind,
            weight,
            grid,
            diagonal,
            output,
        }) => {
            let a = algebra(p)?;
            let kind = operator_kind(*kind, weight.as_deref())?;
            let grid = parse_grid(grid)?;
            let found = operators::search_operators(&a, &kind, &grid, *diagonal)?;
            let mut text = format!("{} {} operator(s) found\n", found.len(), kind.name());
            for (n, m) in found.iter().enumerate() {
                text.push_str(&format!("#{n}: {}\n", matrix_text(m)));
            }
            let value = json!({
                "operator": kind.name(),
                "weight": weight_value(&kind),
                "grid": grid.iter().map(|g| g.to_string()).collect::<Vec<_>>(),
                "diagonal": diagonal,
                "count": found.len(),
                "operators": found.iter().map(document::map_value).collect::<Vec<_>>(),
            });
            Ok(Outcome::Search {
                value,
                text,
                out: output.clone(),
            })
        }
    }
}

fn weight_value(kind: &OperatorKind) -> Value {
    match kind {
        OperatorKind::RotaBaxter(w) => Value::from(w.to_string()),
        _ => Value::Null,
    }
}

fn check(cmd: &CheckCmd) -> CmdResult {
    match cmd {
        CheckCmd::Structure { algebra: p, left: false } => {
            let a = algebra(p)?;
            report(&format!("{} structure", a.kind()), structure::check_structure(&a))
        }
        CheckCmd::Structure { algebra: p, left: true } => {
            report("left ternary-leibniz structure", structure::check_left_ternary(&algebra(p)?)?)
        }
        CheckCmd::Operator { algebra: p, map: m, op } => {
            let a = algebra(p)?;
            let kind = operator_kind(op.operator, op.weight.as_deref())?;
            report(&format!("{} operator", kind.name()), operators::check_operator(&a, &map(m)?, &kind)?)
        }
        CheckCmd::Morphism { map: m, source, target } => {
            let (f, src, dst) = (map(m)?, algebra(source)?, algebra(target)?);
            report("morphism", structure::check_morphism(&f, &src, &dst)?)
        }
        CheckCmd::Action { action: p } => report("action", action::check_action(&action_doc(p)?)),
        CheckCmd::CrossedModule { crossed_module: p } => {
            report("crossed module", crossed::check_crossed_module(&crossed_module(p)?)?)
        }
        CheckCmd::CrossedMorphism {
            source,
            target,
            alpha,
            beta,
        } => {
            let (src, dst) = (crossed_module(source)?, crossed_module(target)?);
            report(
                "crossed-module morphism",
                crossed::check_crossed_morphism(&map(alpha)?, &map(beta)?, &src, &dst)?,
            )
        }
    }
}

fn construct(cmd: &ConstructCmd) -> CmdResult {
    match cmd {
        ConstructCmd::Quotient { algebra: p, ideal, out } => {
            built(structure::quotient(&algebra(p)?, &subspace(ideal)?)?.0, out)
        }
        ConstructCmd::DirectSum { first, second, out } => {
            built(structure::direct_sum(&algebra(first)?, &algebra(second)?)?, out)
        }
        ConstructCmd::Semidirect { action: p, out } => {
            let act = action_doc(p)?;
            let report = action::check_action(&act);
            if !report.is_empty() {
                return Err(Error::InvalidAction(report).into());
            }
            built(action::semidirect(&act), out)
        }
        ConstructCmd::FromIdeal { algebra: p, ideal, out } => {
            built(crossed::crossed_from_ideal(&algebra(p)?, &subspace(ideal)?)?, out)
        }
    }
}

fn functor(cmd: &FunctorCmd) -> CmdResult {
    match cmd {
        FunctorCmd::TTri { algebra: p, variant, out } => {
            let v = match variant {
                VariantName::Main => Variant::Main,
                VariantName::B1 => Variant::B1,
                VariantName::B2 => Variant::B2,
            };
            built(functors::t_from_triassoc(&algebra(p)?, v)?, out)
        }
        FunctorCmd::TLeibniz { algebra: p, out } => built(functors::t_from_leibniz(&algebra(p)?)?, out),
        FunctorCmd::Swap { algebra: p, out } => built(structure::swap_ternary_orientation(&algebra(p)?)?, out),
        FunctorCmd::Opposite { algebra: p, out } => built(structure::opposite_triassociative(&algebra(p)?)?, out),
        FunctorCmd::AssocAveraging {
            algebra: p,
            beta,
            nested,
            out,
        } => {
            let (a, b) = (algebra(p)?, map(beta)?);
            let t = if *nested {
                functors::ternary_from_assoc_averaging_nested(&a, &b)?
            } else {
                functors::ternary_from_assoc_averaging(&a, &b)?
            };
            built(t, out)
        }
    }
}

fn twist(cmd: &TwistCmd) -> CmdResult {
    match cmd {
        TwistCmd::Rb {
            input,
            r_acted,
            r_acting,
            weight,
            binary,
            out,
        } => {
            let (ra, rp) = (map(r_acted)?, map(r_acting)?);
            let w = rational(weight)?;
            match load(input)?.payload {
                Payload::CrossedModule(cm) => {
                    let (bin, ter) = crossed::rb_twist_leibniz_cm(&cm, &ra, &rp, &w)?;
                    built(if *binary { bin } else { ter }, out)
                }
                Payload::Action(act) if act.kind() == Kind::TernaryLeibniz => {
                    if !is_zero_vector(std::slice::from_ref(&w)) {
                        return Err(Failure::Input("ternary Rota-Baxter twists use weight 0".into()));
                    }
                    built(crossed::rb_twist_ternary_action(&act, &ra, &rp)?, out)
                }
                other => Err(Failure::Input(format!(
                    "{}: expected a Leibniz crossed module or a ternary action, found {}",
                    input.display(),
                    other.schema()
                ))),
            }
        }
        TwistCmd::Averaging {
            crossed_module: p,
            beta_acted,
            beta_acting,
            out,
        } => built(
            crossed::averaging_twist_triassoc_cm(&crossed_module(p)?, &map(beta_acted)?, &map(beta_acting)?)?,
            out,
        ),
    }
}

fn verdict(title: &str, holds: bool, details: Value, text: String) -> CmdResult {
    Ok(Outcome::Verdict {
        title: title.to_string(),
        holds,
        details,
        text,
    })
}

fn prop(cmd: &PropCmd) -> CmdResult {
    match cmd {
        PropCmd::Shift { crossed_module: p } => report("shift morphism", crossed::shift_morphism_check(&crossed_module(p)?)?),
        PropCmd::SemidirectMaps { crossed_module: p } => {
            report("semidirect maps", crossed::semidirect_morphism_maps(&crossed_module(p)?)?)
        }
        PropCmd::CmProperties { crossed_module: p } => {
            let CrossedModuleProperties {
                ker_in_ann,
                image_is_ideal,
                image_acts_trivially_on_ann,
            } = crossed::crossed_module_properties(&crossed_module(p)?)?;
            let props = [
                ("ker_in_ann", ker_in_ann),
                ("image_is_ideal", image_is_ideal),
                ("image_acts_trivially_on_ann", image_acts_trivially_on_ann),
            ];
            let text: String = props.iter().map(|(k, v)| format!("{k}: {v}\n")).collect();
            let details = Value::Object(props.iter().map(|(k, v)| (k.to_string(), Value::from(*v))).collect());
            verdict("crossed-module properties", props.iter().all(|p| p.1), details, text)
        }
        PropCmd::RbEquality { algebra: p, map: m, weight } => {
            let holds = operators::rb_iterated_vs_ternary(&algebra(p)?, &map(m)?, &rational(weight)?)?;
            verdict("rota-baxter ternary equality", holds, Value::Null, String::new())
        }
        PropCmd::TSemidirect { action: p } => {
            let holds = crossed::functor_semidirect_compat(&action_doc(p)?)?;
            verdict("functor/semidirect compatibility", holds, Value::Null, String::new())
        }
    }
}

// ---------------------------------------------------------------- output

fn matrix_text(m: &Matrix) -> String {
    let rows: Vec<String> = m
        .row_vectors()
        .map(|r| r.iter().map(ToString::to_string).collect::<Vec<_>>().join(" "))
        .collect();
    format!("[{}]", rows.join("; "))
}

/// JSON form of a report; witnesses are 0-based.
pub fn report_value(title: &str, report: &ViolationReport) -> Value {
    json!({
        "check": title,
        "ok": report.is_empty(),
        "count": report.len(),
        "violations": report.violations().iter().map(|v| json!({
            "axiom": v.axiom,
            "witness": v.witness,
            "discrepancy": v.discrepancy.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
        })).collect::<Vec<_>>(),
    })
}

/// Text form of a report; witnesses are printed 1-based to match `e1, e2, ...`.
pub fn report_text(title: &str, report: &ViolationReport) -> String {
    if report.is_empty() {
        return format!("{title}: ok\n");
    }
    let mut s = format!("{title}: {} violation(s)\n", report.len());
    for v in report.violations() {
        let w: Vec<String> = v.witness.iter().map(|i| (i + 1).to_string()).collect();
        let d: Vec<String> = v.discrepancy.iter().map(ToString::to_string).collect();
        s.push_str(&format!("{}\t({})\t[{}]\n", v.axiom, w.join(","), d.join(", ")));
    }
    s
}

fn pretty(value: &Value) -> String {
    let mut s = String::new();
    document::write_value(value, 0, &mut s);
    s.push('\n');
    s
}

fn write_report(title: &str, report: &ViolationReport, json: bool, out: &mut dyn Write) {
    let text = if json {
        pretty(&report_value(title, report))
    } else {
        report_text(title, report)
    };
    let _ = out.write_all(text.as_bytes());
}

fn describe(doc: &Document) -> String {
    match &doc.payload {
        Payload::Algebra(a) => format!("{} algebra of dimension {}", a.kind(), a.dim()),
        Payload::Map(m) => format!("{}x{} map", m.rows(), m.cols()),
        Payload::Subspace(s) => format!("subspace of dimension {} in {}", s.dim(), s.ambient_dim()),
        Payload::Action(a) => format!("{} action ({} on {})", a.kind(), a.acting().dim(), a.acted().dim()),
        Payload::CrossedModule(c) => format!("{} crossed module ({} -> {})", c.kind(), c.acted().dim(), c.acting().dim()),
    }
}

fn render(outcome: Outcome, json: bool, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match outcome {
        Outcome::Report { title, report } => {
            write_report(&title, &report, json, out);
            if report.is_empty() {
                EXIT_OK
            } else {
                EXIT_VIOLATIONS
            }
        }
        Outcome::Document { doc, out: Some(path) } => {
            if let Err(e) = document::save(&doc, &path) {
                let _ = writeln!(err, "error: {e}");
                return EXIT_INPUT;
            }
            let summary = describe(&doc);
            let text = if json {
                pretty(&json!({"written": path.display().to_string(), "schema": doc.payload.schema(), "summary": summary}))
            } else {
                format!("wrote {} ({summary})\n", path.display())
            };
            let _ = out.write_all(text.as_bytes());
            EXIT_OK
        }
        Outcome::Document { doc, out: None } => {
            let _ = out.write_all(document::to_string(&doc).as_bytes());
            EXIT_OK
        }
        Outcome::Verdict {
            title,
            holds,
            details,
            text,
        } => {
            let s = if json {
                pretty(&json!({"check": title, "holds": holds, "details": details}))
            } else {
                format!("{title}: {}\n{text}", if holds { "holds" } else { "fails" })
            };
            let _ = out.write_all(s.as_bytes());
            if holds {
                EXIT_OK
            } else {
                EXIT_VIOLATIONS
            }
        }
        Outcome::Search { value, text, out: path } => {
            if let Some(path) = path {
                if let Err(e) = std::fs::write(&path, pretty(&value)) {
                    let _ = writeln!(err, "error: {}: {e}", path.display());
                    return EXIT_INPUT;
                }
            }
            let s = if json { pretty(&value) } else { text };
            let _ = out.write_all(s.as_bytes());
            EXIT_OK
        }
    }
}
