//! The `growth` command line tool. All input and output is JSON, apart
//! from `render`, which draws diagrams as text.
//!
//! Exit codes: 0 on success, 1 on malformed input or domain errors, 2 when
//! a verification finds a mismatch.

use std::fs;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::growth::{build_growth, enumerate_growths, rsk, rsk_inverse, Borders, IntMatrix};
use crate::partition::{enumerate_partitions, member, Family, Partition};
use crate::projection::ProjVariant;
use crate::rules::RuleId;
use crate::schur::{verify_identity, IdentityKind, IdentityParams};
use crate::tableau::{StepKind, TableauChain};
use crate::triangular::{
    build_triangular, enumerate_triangular, littlewood_inverse, littlewood_map, LittlewoodVariant, TriangularArray,
};

#[derive(Parser, Debug)]
#[command(name = "growth", version, about = "Growth diagrams, RSK-type bijections and identity checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build the growth diagram of a matrix and print its tableaux P and Q.
    Rsk(RskArgs),
    /// Recover the matrix (and skew borders) from P and Q.
    Unrsk(UnrskArgs),
    /// Littlewood bijections between triangular arrays and tableaux.
    #[command(subcommand)]
    Littlewood(LittlewoodCommand),
    /// Compare both sides of an identity coefficient by coefficient.
    Verify(VerifyArgs),
    /// List growths of a matrix or array, or partitions.
    Enumerate(EnumerateArgs),
    /// Draw a growth diagram or a triangular diagram.
    Render(RenderArgs),
    /// Randomized roundtrip checks of every bijection.
    Selfcheck(SelfcheckArgs),
}

#[derive(Args, Debug)]
struct RskArgs {
    #[arg(long, default_value = "row")]
    rule: RuleId,
    /// Matrix file; standard input when omitted.
    #[arg(long)]
    matrix: Option<PathBuf>,
    /// Skew borders `{"left": rows, "top": rows}`.
    #[arg(long)]
    border: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct UnrskArgs {
    /// Overrides the rule recorded in the input.
    #[arg(long)]
    rule: Option<RuleId>,
    /// Output of `rsk`; standard input when omitted.
    #[arg(long)]
    input: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct RulesArgs {
    #[arg(long)]
    variant: Family,
    /// Base rule; the canonical one for the variant by default.
    #[arg(long)]
    rule: Option<RuleId>,
    /// `row-star` or `col-star` for the asymmetric variants.
    #[arg(long)]
    projection: Option<String>,
}

#[derive(Subcommand, Debug)]
enum LittlewoodCommand {
    /// Map a triangular array (and optional border) to a tableau.
    Encode {
        #[command(flatten)]
        rules: RulesArgs,
        /// Array file; standard input when omitted.
        #[arg(long)]
        matrix: Option<PathBuf>,
        #[arg(long)]
        border: Option<PathBuf>,
    },
    /// Map a tableau back to its array and border.
    Decode {
        #[command(flatten)]
        rules: RulesArgs,
        /// Output of `littlewood encode`; standard input when omitted.
        #[arg(long)]
        input: Option<PathBuf>,
    },
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// Identity name, e.g. `cauchy` or `littlewood-even-rows`.
    #[arg(value_name = "IDENTITY", required_unless_present = "identity_flag")]
    identity: Option<IdentityKind>,
    #[arg(long = "identity", id = "identity_flag", conflicts_with = "identity")]
    identity_flag: Option<IdentityKind>,
    #[arg(long, default_value_t = 2)]
    n: usize,
    #[arg(long, default_value_t = 2)]
    m: usize,
    #[arg(long, default_value_t = 6)]
    degree: usize,
    /// Shape for the skew and Pieri identities, e.g. `2,1`.
    #[arg(long, value_parser = parse_partition)]
    lambda: Option<Partition>,
    #[arg(long, value_parser = parse_partition)]
    rho: Option<Partition>,
    #[arg(long, default_value_t = 0)]
    k: usize,
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false, id = "what")]
struct EnumerateTarget {
    /// Matrix file: all growths and dual growths.
    #[arg(long)]
    growths: Option<PathBuf>,
    /// Triangular array file: all triangular growths and dual growths.
    #[arg(long)]
    triangular: Option<PathBuf>,
    /// All partitions up to this size.
    #[arg(long)]
    partitions: Option<usize>,
}

#[derive(Args, Debug)]
struct EnumerateArgs {
    #[command(flatten)]
    target: EnumerateTarget,
    /// Restrict partitions to a family.
    #[arg(long)]
    family: Option<Family>,
}

#[derive(Args, Debug)]
struct RenderArgs {
    #[arg(long, default_value = "row")]
    rule: RuleId,
    /// Draw a triangular diagram of this variant instead.
    #[arg(long)]
    variant: Option<Family>,
    #[arg(long)]
    projection: Option<String>,
    #[arg(long)]
    matrix: Option<PathBuf>,
    #[arg(long)]
    border: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct SelfcheckArgs {
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 50)]
    trials: usize,
}

fn parse_partition(s: &str) -> Result<Partition, Error> {
    let parts: Vec<usize> = s
        .split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| t.parse().map_err(|_| Error::Validation(format!("`{t}` is not a part"))))
        .collect::<Result<_, _>>()?;
    Partition::new(parts)
}

/// A failed command: the message goes to standard error.
struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure { code: 1, message: e.to_string() }
    }
}

fn fail<T>(message: impl Into<String>) -> Result<T, Failure> {
    Err(Failure { code: 1, message: message.into() })
}

struct Io<'a> {
    stdin: &'a mut dyn Read,
    stdout: &'a mut dyn Write,
}

impl Io<'_> {
    fn read(&mut self, path: Option<&Path>) -> Result<(String, String), Failure> {
        match path {
            Some(p) => match fs::read_to_string(p) {
                Ok(text) => Ok((text, p.display().to_string())),
                Err(e) => fail(format!("cannot read {}: {e}", p.display())),
            },
            None => {
                let mut text = String::new();
                if let Err(e) = self.stdin.read_to_string(&mut text) {
                    return fail(format!("cannot read standard input: {e}"));
                }
                Ok((text, "standard input".to_string()))
            }
        }
    }

    fn emit_json<T: Serialize>(&mut self, value: &T) -> Result<(), Failure> {
        let text = serde_json::to_string(value).expect("output types serialize");
        self.emit_text(&text)
    }

    fn emit_text(&mut self, text: &str) -> Result<(), Failure> {
        writeln!(self.stdout, "{text}").or_else(|e| fail(format!("cannot write output: {e}")))
    }
}

/// Parses JSON, naming the offending field on failure.
fn parse_json<T: DeserializeOwned>(text: &str, source: &str) -> Result<T, Failure> {
    let mut de = serde_json::Deserializer::from_str(text);
    match serde_path_to_error::deserialize(&mut de) {
        Ok(v) => Ok(v),
        Err(e) => {
            let path = e.path().to_string();
            let field = if path == "." { "top level".to_string() } else { format!("field `{path}`") };
            fail(format!("{source}: {field}: {}", e.inner()))
        }
    }
}

/// A tableau written row by row from the bottom; zeros mark inner cells.
type Rows = Vec<Vec<usize>>;

fn to_chain(rows: &Rows, n: usize, steps: StepKind, what: &str) -> Result<TableauChain, Failure> {
    TableauChain::from_rows(rows, n, steps).map_err(|e| Failure {
        code: 1,
        message: format!("{what}: {e}"),
    })
}

#[derive(Serialize, Deserialize)]
struct RskDoc {
    rule: RuleId,
    n: usize,
    m: usize,
    #[serde(rename = "P")]
    p: Rows,
    #[serde(rename = "Q")]
    q: Rows,
}

#[derive(Serialize, Deserialize)]
struct BorderDoc {
    left: Rows,
    top: Rows,
}

/// Output of `unrsk`, also accepted by `rsk`.
#[derive(Serialize, Deserialize)]
struct MatrixDoc {
    matrix: IntMatrix,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    left: Option<Rows>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    top: Option<Rows>,
}

/// Reads a bare matrix `[[...]]` or a [`MatrixDoc`].
fn read_matrix(text: &str, source: &str) -> Result<MatrixDoc, Failure> {
    if text.trim_start().starts_with('[') {
        Ok(MatrixDoc {
            matrix: parse_json(text, source)?,
            left: None,
            top: None,
        })
    } else {
        parse_json(text, source)
    }
}

fn borders_from(left: &Rows, top: &Rows, n: usize, m: usize, dual: bool) -> Result<Borders, Failure> {
    Ok(Borders {
        left: to_chain(left, n, StepKind::Horizontal, "left border")?,
        top: to_chain(top, m, StepKind::from_vertical(dual), "top border")?,
    })
}

fn read_borders(io: &mut Io, path: Option<&Path>, doc: &MatrixDoc, dual: bool) -> Result<Option<Borders>, Failure> {
    let (n, m) = (doc.matrix.rows(), doc.matrix.cols());
    if let Some(path) = path {
        let (text, source) = io.read(Some(path))?;
        let b: BorderDoc = parse_json(&text, &source)?;
        return Ok(Some(borders_from(&b.left, &b.top, n, m, dual)?));
    }
    match (&doc.left, &doc.top) {
        (Some(l), Some(t)) => Ok(Some(borders_from(l, t, n, m, dual)?)),
        (None, None) => Ok(None),
        _ => fail("a skew matrix document needs both `left` and `top`"),
    }
}

fn cmd_rsk(io: &mut Io, args: &RskArgs) -> Result<(), Failure> {
    let (text, source) = io.read(args.matrix.as_deref())?;
    let doc = read_matrix(&text, &source)?;
    let borders = read_borders(io, args.border.as_deref(), &doc, args.rule.is_dual())?;
    let (p, q) = rsk(args.rule, &doc.matrix, borders.as_ref())?;
    io.emit_json(&RskDoc {
        rule: args.rule,
        n: p.n(),
        m: q.n(),
        p: p.rows(),
        q: q.rows(),
    })
}

fn cmd_unrsk(io: &mut Io, args: &UnrskArgs) -> Result<(), Failure> {
    let (text, source) = io.read(args.input.as_deref())?;
    let doc: RskDoc = parse_json(&text, &source)?;
    let rule = args.rule.unwrap_or(doc.rule);
    let p = to_chain(&doc.p, doc.n, StepKind::Horizontal, "P")?;
    let q = to_chain(&doc.q, doc.m, StepKind::from_vertical(rule.is_dual()), "Q")?;
    let (matrix, borders) = rsk_inverse(rule, &p, &q)?;
    let skew = !borders.is_trivial();
    io.emit_json(&MatrixDoc {
        matrix,
        left: skew.then(|| borders.left.rows()),
        top: skew.then(|| borders.top.rows()),
    })
}

fn resolve_variant(family: Family, rule: Option<RuleId>, projection: Option<&str>) -> Result<LittlewoodVariant, Failure> {
    if rule.is_none() && projection.is_none() {
        return Ok(LittlewoodVariant::canonical(family));
    }
    let canonical = LittlewoodVariant::canonical(family);
    let base = rule.unwrap_or(canonical.base_rule);
    let proj = match projection {
        Some("row-star") => ProjVariant::RowStar,
        Some("col-star") => ProjVariant::ColStar,
        Some(other) => return fail(format!("unknown projection `{other}`; expected row-star or col-star")),
        None if family.is_asym() => canonical.proj.variant,
        None => ProjVariant::Inherit(base),
    };
    Ok(LittlewoodVariant::with_rules(family, base, proj)?)
}

/// Output of `littlewood encode`, input of `decode`.
#[derive(Serialize, Deserialize)]
struct EncodedDoc {
    variant: Family,
    rule: RuleId,
    projection: ProjVariant,
    n: usize,
    #[serde(rename = "P")]
    p: Rows,
}

/// Output of `littlewood decode`, also accepted by `encode`.
#[derive(Serialize, Deserialize)]
struct ArrayDoc {
    variant: Family,
    n: usize,
    rows: Rows,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    border: Option<Rows>,
}

fn read_array(text: &str, source: &str, family: Family) -> Result<(TriangularArray, Option<Rows>), Failure> {
    let (rows, border) = if text.trim_start().starts_with('[') {
        (parse_json::<Rows>(text, source)?, None)
    } else {
        let doc: ArrayDoc = parse_json(text, source)?;
        if doc.variant != family {
            return fail(format!("{source}: array is for {} but --variant is {family}", doc.variant));
        }
        if doc.rows.len() != doc.n {
            return fail(format!("{source}: n = {} but the array has {} rows", doc.n, doc.rows.len()));
        }
        (doc.rows, doc.border)
    };
    Ok((TriangularArray::new(rows, family)?, border))
}

fn read_tri_border(
    io: &mut Io,
    path: Option<&Path>,
    inline: Option<Rows>,
    v: &LittlewoodVariant,
    n: usize,
) -> Result<Option<TableauChain>, Failure> {
    let rows = match path {
        Some(p) => {
            let (text, source) = io.read(Some(p))?;
            Some(parse_json::<Rows>(&text, &source)?)
        }
        None => inline,
    };
    rows.map(|r| to_chain(&r, n, v.border_steps(), "border")).transpose()
}

fn cmd_littlewood(io: &mut Io, cmd: &LittlewoodCommand) -> Result<(), Failure> {
    match cmd {
        LittlewoodCommand::Encode { rules, matrix, border } => {
            let v = resolve_variant(rules.variant, rules.rule, rules.projection.as_deref())?;
            let (text, source) = io.read(matrix.as_deref())?;
            let (c, inline) = read_array(&text, &source, v.family)?;
            let border = read_tri_border(io, border.as_deref(), inline, &v, c.n())?;
            let p = littlewood_map(&v, &c, border.as_ref())?;
            io.emit_json(&EncodedDoc {
                variant: v.family,
                rule: v.base_rule,
                projection: v.proj.variant,
                n: p.n(),
                p: p.rows(),
            })
        }
        LittlewoodCommand::Decode { rules, input } => {
            let (text, source) = io.read(input.as_deref())?;
            let doc: EncodedDoc = parse_json(&text, &source)?;
            if doc.variant != rules.variant {
                return fail(format!("{source}: tableau is for {} but --variant is {}", doc.variant, rules.variant));
            }
            let v = if rules.rule.is_some() || rules.projection.is_some() {
                resolve_variant(rules.variant, rules.rule, rules.projection.as_deref())?
            } else {
                LittlewoodVariant::with_rules(doc.variant, doc.rule, doc.projection)?
            };
            let p = to_chain(&doc.p, doc.n, StepKind::Horizontal, "P")?;
            let (c, border) = littlewood_inverse(&v, &p)?;
            io.emit_json(&ArrayDoc {
                variant: c.variant(),
                n: c.n(),
                rows: c.rows().to_vec(),
                border: border.map(|b| b.rows()),
            })
        }
    }
}

fn cmd_verify(io: &mut Io, args: &VerifyArgs) -> Result<(), Failure> {
    let kind = args.identity.or(args.identity_flag).expect("clap requires an identity");
    let mut params = IdentityParams::new(args.n, args.m, args.degree).with_k(args.k);
    if let Some(l) = &args.lambda {
        params = params.with_lambda(l.clone());
    }
    if let Some(r) = &args.rho {
        params = params.with_rho(r.clone());
    }
    let report = verify_identity(kind, &params)?;
    io.emit_json(&report)?;
    if report.equal {
        Ok(())
    } else {
        let first = &report.mismatches[0];
        Err(Failure {
            code: 2,
            message: format!(
                "{kind}: {} mismatching terms, first at {:?}: {} vs {}",
                report.mismatches.len(),
                first.exponents,
                first.lhs,
                first.rhs
            ),
        })
    }
}

#[derive(Serialize)]
struct GrowthList<T> {
    growth_count: usize,
    dual_growth_count: usize,
    growths: Vec<T>,
    dual_growths: Vec<T>,
}

impl<T> GrowthList<T> {
    fn new(growths: Vec<T>, dual_growths: Vec<T>) -> Self {
        GrowthList {
            growth_count: growths.len(),
            dual_growth_count: dual_growths.len(),
            growths,
            dual_growths,
        }
    }
}

fn cmd_enumerate(io: &mut Io, args: &EnumerateArgs) -> Result<(), Failure> {
    let t = &args.target;
    if let Some(path) = &t.growths {
        let (text, source) = io.read(Some(path))?;
        let doc = read_matrix(&text, &source)?;
        let list = |dual| enumerate_growths(&doc.matrix, dual).into_iter().map(|g| g.vertices).collect();
        return io.emit_json(&GrowthList::new(list(false), list(true)));
    }
    if let Some(path) = &t.triangular {
        let (text, source) = io.read(Some(path))?;
        let family = args.family.unwrap_or(Family::All);
        let (c, _) = read_array(&text, &source, family)?;
        let list = |dual| enumerate_triangular(&c, dual).into_iter().map(|g| g.vertices).collect();
        return io.emit_json(&GrowthList::new(list(false), list(true)));
    }
    let max = t.partitions.expect("clap requires one target");
    let parts: Vec<Partition> = enumerate_partitions(max, None)
        .into_iter()
        .filter(|p| args.family.is_none_or(|f| member(p, f)))
        .collect();
    io.emit_json(&parts)
}

fn cmd_render(io: &mut Io, args: &RenderArgs) -> Result<(), Failure> {
    let (text, source) = io.read(args.matrix.as_deref())?;
    match args.variant {
        Some(family) => {
            let v = resolve_variant(family, None, args.projection.as_deref())?;
            let (c, inline) = read_array(&text, &source, family)?;
            let border = read_tri_border(io, args.border.as_deref(), inline, &v, c.n())?;
            let g = build_triangular(&v, &c, border.as_ref())?;
            io.emit_text(&g.to_string())
        }
        None => {
            let doc = read_matrix(&text, &source)?;
            let borders = read_borders(io, args.border.as_deref(), &doc, args.rule.is_dual())?;
            let g = build_growth(args.rule, &doc.matrix, borders.as_ref())?;
            io.emit_text(&g.to_string())
        }
    }
}

#[derive(Serialize)]
struct SelfcheckReport {
    seed: u64,
    checks: usize,
    failures: Vec<String>,
}

fn cmd_selfcheck(io: &mut Io, args: &SelfcheckArgs) -> Result<(), Failure> {
    let mut rng = ChaCha8Rng::seed_from_u64(args.seed);
    let mut checks = 0;
    let mut failures = Vec::new();
    for trial in 0..args.trials {
        let (n, m) = (rng.gen_range(1..=4), rng.gen_range(1..=4));
        for rule in RuleId::ALL {
            let max = if rule.is_dual() { 1 } else { 2 };
            let entries = (0..n).map(|_| (0..m).map(|_| rng.gen_range(0..=max)).collect()).collect();
            let a = IntMatrix::new(entries).expect("rectangular");
            checks += 1;
            let ok = rsk(rule, &a, None)
                .and_then(|(p, q)| rsk_inverse(rule, &p, &q))
                .map(|(back, borders)| back == a && borders.is_trivial());
            if ok != Ok(true) {
                failures.push(format!("trial {trial}: rsk {rule} roundtrip failed on {:?}", a.entries()));
            }
        }
        let size = rng.gen_range(1..=4);
        for family in Family::ALL {
            let v = LittlewoodVariant::canonical(family);
            let rows = (0..size)
                .map(|i| {
                    (i..size)
                        .map(|j| random_entry(&mut rng, family, i == j))
                        .collect()
                })
                .collect();
            let c = TriangularArray::new(rows, family).expect("entries drawn from the domain");
            checks += 1;
            let ok = littlewood_map(&v, &c, None)
                .and_then(|p| littlewood_inverse(&v, &p))
                .map(|(back, border)| back == c && border.is_none());
            if ok != Ok(true) {
                failures.push(format!("trial {trial}: littlewood {family} roundtrip failed on {:?}", c.rows()));
            }
        }
    }
    let report = SelfcheckReport {
        seed: args.seed,
        checks,
        failures,
    };
    io.emit_json(&report)?;
    if report.failures.is_empty() {
        Ok(())
    } else {
        Err(Failure {
            code: 2,
            message: format!("{} of {} checks failed", report.failures.len(), report.checks),
        })
    }
}

fn random_entry(rng: &mut ChaCha8Rng, family: Family, diagonal: bool) -> usize {
    match (family, diagonal) {
        (Family::EvenColumns | Family::AsymPlus, true) => 0,
        (Family::AsymMinus, true) => 2 * rng.gen_range(0..=1),
        (Family::EvenRows, true) => 2 * rng.gen_range(0..=1),
        (f, false) if f.is_asym() => rng.gen_range(0..=1),
        _ => rng.gen_range(0..=2),
    }
}

/// Runs the tool on `args` (including the program name) and returns the
/// exit code.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let out: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = write!(out, "{}", e.render());
            return code;
        }
    };
    let mut io = Io { stdin, stdout };
    let result = match &cli.command {
        Command::Rsk(a) => cmd_rsk(&mut io, a),
        Command::Unrsk(a) => cmd_unrsk(&mut io, a),
        Command::Littlewood(c) => cmd_littlewood(&mut io, c),
        Command::Verify(a) => cmd_verify(&mut io, a),
        Command::Enumerate(a) => cmd_enumerate(&mut io, a),
        Command::Render(a) => cmd_render(&mut io, a),
        Command::Selfcheck(a) => cmd_selfcheck(&mut io, a),
    };
    match result {
        Ok(()) => 0,
        Err(f) => {
            let _ = writeln!(stderr, "error: {}", f.message);
            f.code
        }
    }
}
