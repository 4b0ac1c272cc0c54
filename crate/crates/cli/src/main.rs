//! `specht`: dimensions, filtrations, identity checks and scans from the shell.
//!
//! Exit codes: 0 pass, 1 a checked property failed, 2 usage or parse error.

mod render;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use specht_core::decomp::{self, DecompQuery};
use specht_core::filtration::{self, FiltrationKind, LayerRecord};
use specht_core::garnir::{garnir_nodes, GarnirDatum};
use specht_core::identities::{verify_identity, Identity, IdentityParams};
use specht_core::module::DEFAULT_CAP;
use specht_core::partitions::partitions_of;
use specht_core::{Error, Multicharge, Multipartition, Node, Partition, Quiver};

#[derive(Parser)]
#[command(name = "specht", version, about = "Specht filtrations of KLR permutation modules")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct QuiverArgs {
    /// Affine quiver with `e` vertices.
    #[arg(long, conflicts_with = "linear")]
    e: Option<i64>,
    /// Linear quiver on the integers (the default).
    #[arg(long)]
    linear: bool,
}

impl QuiverArgs {
    fn quiver(&self) -> Result<Quiver, Error> {
        match self.e {
            Some(e) => Quiver::affine(e),
            None => Ok(Quiver::linear()),
        }
    }
}

#[derive(Args, Clone)]
struct Common {
    #[command(flatten)]
    quiver: QuiverArgs,
    /// Multicharge, one entry per component, e.g. `0` or `0,-1`.
    #[arg(long = "charge", visible_alias = "charges", allow_hyphen_values = true)]
    charge: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Refuse engine work on modules of larger dimension.
    #[arg(long, default_value_t = DEFAULT_CAP)]
    cap: u64,
}

impl Common {
    fn charge(&self, level: usize) -> Result<Multicharge, Error> {
        match &self.charge {
            Some(s) => Multicharge::parse(s),
            None => Ok(Multicharge::new((0..level as i64).map(|c| -c).collect())),
        }
    }

    fn single_charge(&self) -> Result<i64, Error> {
        let k = self.charge(1)?;
        match k.entries.as_slice() {
            [x] => Ok(*x),
            _ => Err(Error::LevelMismatch { shape: 1, charge: k.level() }),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Hook,
    TwoRow,
    General,
}

impl From<Kind> for FiltrationKind {
    fn from(k: Kind) -> Self {
        match k {
            Kind::Hook => FiltrationKind::Hook,
            Kind::TwoRow => FiltrationKind::TwoRow,
            Kind::General => FiltrationKind::General,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Property {
    /// `#Std^μ(λ) ≤ 1` for level-two pairs.
    StdMuUnique,
    /// Hook layer dimensions sum to `dim M^λ`.
    HookDims,
    /// The hook-length inequality for partitions with at least two rows.
    HookInequality,
}

#[derive(Subcommand)]
enum Command {
    /// `dim M^λ`, `#Std(λ)` and the hook lengths.
    Dims {
        shape: String,
        #[command(flatten)]
        common: Common,
    },
    /// Predicted filtration layers with residue diagrams.
    Filtration {
        shape: String,
        #[arg(long, value_enum)]
        kind: Option<Kind>,
        /// Also compute the layers in `M^λ` and compare dimensions.
        #[arg(long)]
        check: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Evaluate an identity exactly in `M^λ`.
    Verify {
        /// One of the registered identity names.
        identity: String,
        #[arg(long)]
        shape: String,
        /// Restrict to one value of the running index.
        #[arg(long, visible_alias = "i")]
        s: Option<usize>,
        #[command(flatten)]
        common: Common,
    },
    /// Exhaustive scans up to a size bound.
    Scan {
        #[arg(value_enum)]
        property: Property,
        #[arg(long, default_value_t = 8)]
        max_n: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Garnir belt, tableau and ψ-word.
    Garnir {
        shape: String,
        /// `row,col` or `row,col,component`; all Garnir nodes when absent.
        #[arg(long)]
        node: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Level-two decomposition numbers.
    Decomp {
        lambda: Option<String>,
        mu: Option<String>,
        /// Check the decomposition pattern of the resolution terms of a partition.
        #[arg(long, conflicts_with_all = ["lambda", "mu"])]
        pattern: Option<String>,
        #[arg(long, default_value_t = 10)]
        max_n: usize,
        #[command(flatten)]
        common: Common,
    },
}

enum Outcome {
    Pass,
    Fail,
}

fn usage(msg: impl std::fmt::Display) -> Error {
    Error::Precondition(msg.to_string())
}

fn print_json<T: Serialize>(v: &T) {
    println!("{}", serde_json::to_string_pretty(v).expect("serializable"));
}

fn partition(s: &str) -> Result<Partition, Error> {
    s.parse()
}

fn parse_node(s: &str) -> Result<Node, Error> {
    let err = || Error::Parse { what: "node", input: s.into() };
    let v: Vec<usize> = s
        .trim_matches(|c| c == '(' || c == ')')
        .split(',')
        .map(|x| x.trim().parse().map_err(|_| err()))
        .collect::<Result<_, _>>()?;
    match v.as_slice() {
        [r, c] => Ok(Node::new(1, *r, *c)),
        [r, c, k] => Ok(Node::new(*k, *r, *c)),
        _ => Err(err()),
    }
}

fn dims(shape: &str, common: &Common) -> Result<Outcome, Error> {
    let shape: Multipartition = shape.parse()?;
    let (m, s) = (shape.dim_perm(), shape.count_std());
    if common.format == Format::Json {
        print_json(&json!({ "shape": shape.to_string(), "dim_m": m.to_string(), "dim_s": s.to_string() }));
        return Ok(Outcome::Pass);
    }
    println!("shape {shape}");
    println!("dim M = {m}, dim S = {s}");
    for (c, p) in shape.components().iter().enumerate() {
        if p.is_empty() {
            continue;
        }
        let rows: Vec<Vec<String>> = (1..=p.rows())
            .map(|r| (1..=p.part(r)).map(|col| p.hook_length(r, col).expect("inside").to_string()).collect())
            .collect();
        println!("hook lengths, component {}:\n{}", c + 1, render::grid(&rows));
    }
    Ok(Outcome::Pass)
}

fn print_layers(layers: &[filtration::FiltrationLayer], q: &Quiver) {
    for l in layers {
        let gens: Vec<String> = l.generators.iter().map(|n| n.to_string()).collect();
        println!(
            "M_{}  dim {}  shape {}  charge {}  weight {}",
            l.index,
            l.dim,
            l.shape(),
            l.charge,
            specht_core::cartan::weight_label(q, &l.charge)
        );
        if !gens.is_empty() {
            println!("  generated by Garnir nodes {}", gens.join(" "));
        }
        if l.resolution.len() > 1 {
            let terms: Vec<String> =
                l.resolution.iter().map(|m| format!("{m} [{}]", m.count_std())).collect();
            println!("  resolution {}", terms.join(" <- "));
        }
        if !l.charge.conventional {
            println!("  note: multicharge is not decreasing");
        }
        println!("{}", render::residue_diagram(l.shape(), q, &l.charge));
    }
    println!("total {}", filtration::total_dim(layers));
}

fn filtration_cmd(shape: &str, kind: Option<Kind>, check: bool, common: &Common) -> Result<Outcome, Error> {
    let lambda = partition(shape)?;
    let q = common.quiver.quiver()?;
    let x = common.single_charge()?;
    let kind = match kind {
        Some(k) => k.into(),
        None => filtration::default_kind(&lambda, &q)
            .ok_or_else(|| usage(format!("no filtration constructor for {lambda} over {q}")))?,
    };
    let layers = filtration::build_layers(kind, &lambda, &q, x)?;
    if common.format == Format::Json && !check {
        let recs: Vec<LayerRecord> = layers.iter().map(|l| l.record()).collect();
        print_json(&recs);
        return Ok(Outcome::Pass);
    }
    if common.format == Format::Text {
        print_layers(&layers, &q);
    }
    if !check {
        return Ok(Outcome::Pass);
    }
    match filtration::verify_filtration(kind, &lambda, &q, x, common.cap) {
        Err(Error::CapExceeded { dim, cap }) => {
            println!("SKIPPED(cap): dim M = {dim} exceeds {cap}");
            Ok(Outcome::Pass)
        }
        Err(e) => Err(e),
        Ok(report) => {
            if common.format == Format::Json {
                let recs: Vec<LayerRecord> = layers.iter().map(|l| l.record()).collect();
                print_json(&json!({ "layers": recs, "check": report }));
            } else {
                for c in &report.layers {
                    println!(
                        "check M_{}: dim {}  quotient {}  predicted {}  {}",
                        c.index,
                        c.span_dim,
                        c.quotient_dim,
                        c.predicted,
                        if c.ok { "ok" } else { "MISMATCH" }
                    );
                }
                println!("{}", if report.passed() { "PASS" } else { "FAIL" });
            }
            Ok(if report.passed() { Outcome::Pass } else { Outcome::Fail })
        }
    }
}

fn verify_cmd(identity: &str, shape: &str, s: Option<usize>, common: &Common) -> Result<Outcome, Error> {
    let id: Identity = identity.parse().map_err(|_| {
        let names: Vec<&str> = Identity::ALL.iter().map(|i| i.name()).collect();
        usage(format!("unknown identity {identity:?}; known: {}", names.join(", ")))
    })?;
    let mut params = IdentityParams::new(partition(shape)?, common.quiver.quiver()?).with_index(s);
    params.charge = common.single_charge()?;
    params.cap = common.cap;
    let report = match verify_identity(id, &params) {
        Err(Error::CapExceeded { dim, cap }) => {
            println!("SKIPPED(cap): dim M = {dim} exceeds {cap}");
            return Ok(Outcome::Pass);
        }
        r => r?,
    };
    if common.format == Format::Json {
        print_json(&json!({ "report": report, "passed": report.passed() }));
    } else {
        for inst in &report.instances {
            if inst.holds {
                println!("ok    {}", inst.label);
            } else {
                println!("FAIL  {}\n      lhs = {}\n      rhs = {}", inst.label, inst.lhs, inst.rhs);
            }
        }
        println!("{} on {}: {}", id, report.shape, if report.passed() { "PASS" } else { "FAIL" });
    }
    Ok(if report.passed() { Outcome::Pass } else { Outcome::Fail })
}

fn scan_cmd(property: Property, max_n: usize, format: Format) -> Result<Outcome, Error> {
    match property {
        Property::StdMuUnique => {
            let scan = decomp::scan_std_mu_unique(max_n)?;
            let ok = scan.violations.is_empty() && scan.dominance_violations.is_empty();
            if format == Format::Json {
                print_json(&scan);
            } else {
                println!(
                    "level-two pairs up to n = {max_n}: {} checked, {} with Std^μ(λ) nonempty",
                    scan.pairs, scan.nonempty
                );
                println!("violations: {}", scan.violations.len());
                for (l, m, k, c) in &scan.violations {
                    println!("  λ = {l}, μ = {m}, κ = {k}: {c} tableaux");
                }
                println!("dominance violations: {}", scan.dominance_violations.len());
            }
            Ok(if ok { Outcome::Pass } else { Outcome::Fail })
        }
        Property::HookDims => {
            let mut checked = 0;
            let mut bad = Vec::new();
            for n in 1..=max_n {
                for k in 1..=n {
                    checked += 1;
                    if !filtration::hook_dim_identity(k, n - k) {
                        bad.push(format!("({k},1^{})", n - k));
                    }
                }
            }
            if format == Format::Json {
                print_json(&json!({ "max_n": max_n, "checked": checked, "violations": bad }));
            } else {
                println!("hooks up to n = {max_n}: {checked} checked, {} violations", bad.len());
                for b in &bad {
                    println!("  {b}");
                }
            }
            Ok(if bad.is_empty() { Outcome::Pass } else { Outcome::Fail })
        }
        Property::HookInequality => {
            let mut rows = Vec::new();
            for n in 2..=max_n {
                for lambda in partitions_of(n).into_iter().filter(|l| l.rows() >= 2) {
                    rows.push(filtration::hook_inequality(&lambda)?);
                }
            }
            let failing: Vec<_> = rows.iter().filter(|r| !r.holds).collect();
            let equal: Vec<_> = rows.iter().filter(|r| r.equality).collect();
            let agree = rows.iter().filter(|r| r.equality == r.third_row_at_least_two).count();
            if format == Format::Json {
                print_json(&json!({
                    "max_n": max_n,
                    "checked": rows.len(),
                    "violations": failing,
                    "equality": equal,
                    "equality_matches_third_row": agree,
                }));
            } else {
                println!("partitions with at least two rows up to n = {max_n}: {}", rows.len());
                println!("inequality fails: {}", failing.len());
                for r in &failing {
                    println!("  {}: {} > {}", r.shape, r.lhs, r.rhs);
                }
                println!("equality cases (informational): {}", equal.len());
                println!("  {:<16} {:>12} {:>4} {:>10}", "shape", "value", "k_1", "λ_3 >= 2");
                for r in &equal {
                    println!(
                        "  {:<16} {:>12} {:>4} {:>10}",
                        r.shape, r.lhs, r.resolution_length, r.third_row_at_least_two
                    );
                }
                println!("equality agrees with λ_3 >= 2 on {agree} of {} shapes", rows.len());
            }
            Ok(if failing.is_empty() { Outcome::Pass } else { Outcome::Fail })
        }
    }
}

fn garnir_cmd(shape: &str, node: Option<&str>, format: Format) -> Result<Outcome, Error> {
    let shape: Multipartition = shape.parse()?;
    let nodes = match node {
        Some(s) => vec![parse_node(s)?],
        None => garnir_nodes(&shape),
    };
    if nodes.is_empty() {
        return Err(usage(format!("{shape} has 0 Garnir nodes")));
    }
    let data: Vec<GarnirDatum> = nodes.into_iter().map(|a| GarnirDatum::new(a, &shape)).collect::<Result<_, _>>()?;
    if format == Format::Json {
        let out: Vec<_> = data
            .iter()
            .map(|d| {
                json!({
                    "node": [d.node.comp, d.node.row, d.node.col],
                    "belt": d.belt.iter().map(|n| [n.comp, n.row, n.col]).collect::<Vec<_>>(),
                    "tableau": d.tableau.to_string(),
                    "word": d.word.indices,
                })
            })
            .collect();
        print_json(&out);
        return Ok(Outcome::Pass);
    }
    for d in &data {
        let belt: Vec<String> = d.belt.iter().map(|n| n.to_string()).collect();
        let word: Vec<String> = d.word.indices.iter().map(|i| i.to_string()).collect();
        println!("Garnir node {}", d.node);
        println!("  belt    {}", belt.join(" "));
        println!("  tableau {}", d.tableau);
        println!("  word    {}", word.join(" "));
    }
    Ok(Outcome::Pass)
}

fn decomp_cmd(
    lambda: Option<&str>,
    mu: Option<&str>,
    pattern: Option<&str>,
    max_n: usize,
    common: &Common,
) -> Result<Outcome, Error> {
    if let Some(p) = pattern {
        let report = decomp::verify_resolution_decomposition(&partition(p)?, max_n)?;
        if common.format == Format::Json {
            print_json(&report);
        } else {
            println!("{}: k_1 = {}, terms {}", report.shape, report.resolution_length, report.terms.join(", "));
            println!("all terms Kleshchev: {}", report.all_kleshchev);
            if let Some(why) = &report.skipped {
                println!("SKIPPED: {why}");
                return Ok(Outcome::Pass);
            }
            println!("{} decomposition numbers checked, {} deviations", report.checked, report.deviations.len());
            for d in &report.deviations {
                println!("  j = {}, ν = {}: expected {}, found {}", d.j, d.nu, d.expected, d.found);
            }
        }
        return Ok(if report.skipped.is_some() || report.passed() { Outcome::Pass } else { Outcome::Fail });
    }
    let (Some(l), Some(m)) = (lambda, mu) else {
        return Err(usage("decomp needs LAMBDA and MU, or --pattern"));
    };
    let query = DecompQuery::new(l.parse()?, m.parse()?, common.charge(2)?)?;
    let d = decomp::decomposition_number(&query)?;
    let t = decomp::unique_tableau(&query)?;
    if common.format == Format::Json {
        print_json(&json!({
            "lambda": query.lambda.to_string(),
            "mu": query.mu.to_string(),
            "charge": query.charge.entries,
            "d": d,
            "tableau": t.map(|t| t.to_string()),
        }));
    } else {
        println!("d = {d}");
        if let Some(t) = t {
            println!("tableau {t}");
        }
    }
    Ok(Outcome::Pass)
}

fn run(cli: Cli) -> Result<Outcome, Error> {
    match cli.command {
        Command::Dims { shape, common } => dims(&shape, &common),
        Command::Filtration { shape, kind, check, common } => filtration_cmd(&shape, kind, check, &common),
        Command::Verify { identity, shape, s, common } => verify_cmd(&identity, &shape, s, &common),
        Command::Scan { property, max_n, format } => scan_cmd(property, max_n, format),
        Command::Garnir { shape, node, format } => garnir_cmd(&shape, node.as_deref(), format),
        Command::Decomp { lambda, mu, pattern, max_n, common } => {
            decomp_cmd(lambda.as_deref(), mu.as_deref(), pattern.as_deref(), max_n, &common)
        }
    }
}

fn main() -> ExitCode {
    // die quietly when piped into `head`
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    match run(cli) {
        Ok(Outcome::Pass) => ExitCode::SUCCESS,
        Ok(Outcome::Fail) => ExitCode::from(1),
        Err(e @ Error::Inconsistent(_)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
