//! Command-line front end for `braidforge`.
//!
//! [`run`] parses an argument vector, dispatches to the library and
//! returns an exit code with a [`Report`]. Exit codes: 0 when the
//! computation finished (whatever the mathematical verdict), 1 for usage
//! or input errors, 2 when a search budget ran out.

mod checks;

use std::time::Instant;

use braidforge::cabling::{self, GeneralForm, RegularForm, TubePositionAssignment};
use braidforge::cover::{self, CoverMatrix, TwistWord};
use braidforge::garside::{self, Conjugacy, DEFAULT_BUDGET};
use braidforge::qp::{self, QPCertificate, QPVerdict};
use braidforge::{BraidWord, Error};
use clap::{Args, Parser, Subcommand};
use serde::{Deserialize, Serialize};
use serde_json::{json, Map, Value};

pub use checks::{verify_paper, CheckResult, DEFAULT_SEED};

pub const SCHEMA: &str = "braidforge/1";

#[derive(Parser, Debug)]
#[command(
    name = "braidforge",
    version,
    about = "Exact computations in braid groups and their lifts to cyclic branched covers"
)]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct Global {
    /// Number of strands (inferred from the largest generator index when omitted)
    #[arg(short = 'n', global = true)]
    strands: Option<usize>,
    /// Degree of the cyclic cover
    #[arg(short = 'k', global = true)]
    degree: Option<usize>,
    /// Print the report as JSON
    #[arg(long, global = true)]
    json: bool,
    /// Node budget for conjugacy searches
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET)]
    budget: usize,
    /// Seed for randomized checks
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Left normal form
    Nf {
        #[arg(allow_hyphen_values = true)]
        word: String,
    },
    /// Equality of two braids
    Eq {
        #[arg(allow_hyphen_values = true)]
        left: String,
        #[arg(allow_hyphen_values = true)]
        right: String,
    },
    /// Exponent sum
    Abel {
        #[arg(allow_hyphen_values = true)]
        word: String,
    },
    /// Underlying permutation (1-based images)
    Perm {
        #[arg(allow_hyphen_values = true)]
        word: String,
    },
    /// Membership in the positive monoid
    Positive {
        #[arg(allow_hyphen_values = true)]
        word: String,
    },
    /// Whether some power is central
    Periodic {
        #[arg(allow_hyphen_values = true)]
        word: String,
    },
    /// Periodic d-th root (a power of δ or γ up to conjugacy)
    Root {
        #[arg(allow_hyphen_values = true)]
        word: String,
        #[arg(short = 'd', long = "degree")]
        root_degree: i64,
    },
    /// Conjugacy with a witness w such that w·a·w⁻¹ = b
    Conj {
        #[arg(allow_hyphen_values = true)]
        left: String,
        #[arg(allow_hyphen_values = true)]
        right: String,
    },
    /// Quasipositivity certificates
    #[command(subcommand)]
    Qp(QpCommand),
    /// Cabling and regular forms
    #[command(subcommand)]
    Cable(CableCommand),
    /// Cyclic branched covers and their homology
    #[command(subcommand)]
    Cover(CoverCommand),
    /// Run the built-in suite of checks
    VerifyPaper,
}

#[derive(Subcommand, Debug)]
enum QpCommand {
    /// Product of the bands of a certificate (JSON or @file)
    Expand { cert: String },
    /// Whether a certificate expands to the braid
    Verify {
        cert: String,
        #[arg(allow_hyphen_values = true)]
        word: String,
    },
    /// Obstruction rules: QP with certificate, NOT_QP with reason, or UNKNOWN
    Obstruct {
        #[arg(allow_hyphen_values = true)]
        word: String,
    },
    /// Certificate for the periodic d-th root, when it is a nonnegative power
    Root {
        #[arg(allow_hyphen_values = true)]
        word: String,
        #[arg(short = 'd', long = "degree")]
        root_degree: i64,
    },
}

#[derive(Subcommand, Debug)]
enum CableCommand {
    /// Composite braid of a regular form (JSON or @file)
    Assemble { form: String },
    /// Regular form and conjugator for a tube assignment (JSON or @file)
    Normalize { assignment: String },
    /// Certificate for a composite braid from tubular and interior certificates
    Cert { input: String },
}

#[derive(Subcommand, Debug)]
enum CoverCommand {
    /// Euler characteristic, boundary, genus and H1 rank of the cover
    Data,
    /// Lift of a braid as a twist word
    Lift {
        #[arg(allow_hyphen_values = true)]
        word: String,
    },
    /// H1 action of a twist word
    Homrep {
        #[arg(allow_hyphen_values = true)]
        word: String,
        /// Treat the input as a braid word and lift it first
        #[arg(long)]
        braid: bool,
    },
    /// Deck transformation on H1
    Deck,
    /// Whether the H1 action commutes with the deck transformation
    Symcheck {
        #[arg(allow_hyphen_values = true)]
        word: String,
        #[arg(long)]
        braid: bool,
    },
    /// Equality of H1 actions (necessary, not sufficient, for equal mapping classes)
    Ideq {
        #[arg(allow_hyphen_values = true)]
        left: String,
        #[arg(allow_hyphen_values = true)]
        right: String,
        #[arg(long)]
        braid: bool,
    },
}

/// Outcome of one command.
#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub schema: &'static str,
    pub command: String,
    pub inputs: Map<String, Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verdict: Option<String>,
    pub result: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    pub timing_ms: f64,
    #[serde(skip)]
    pub lines: Vec<String>,
    #[serde(skip)]
    pub json: bool,
}

impl Report {
    fn new(command: &str) -> Self {
        Report {
            schema: SCHEMA,
            command: command.to_string(),
            inputs: Map::new(),
            verdict: None,
            result: Value::Null,
            error: None,
            timing_ms: 0.0,
            lines: Vec::new(),
            json: false,
        }
    }

    fn input(&mut self, key: &str, v: impl Into<Value>) {
        self.inputs.insert(key.to_string(), v.into());
    }

    fn verdict(&mut self, v: &str) {
        self.verdict = Some(v.to_string());
    }

    fn line(&mut self, s: impl Into<String>) {
        self.lines.push(s.into());
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = Vec::new();
        if let Some(e) = &self.error {
            out.push(format!("error: {e}"));
        }
        if let Some(v) = &self.verdict {
            out.push(format!("verdict: {v}"));
        }
        out.extend(self.lines.iter().cloned());
        out.join("\n")
    }

    /// The rendering selected by `--json`.
    pub fn render(&self) -> String {
        if self.json {
            self.to_json()
        } else {
            self.to_text()
        }
    }
}

enum Failure {
    Usage(String),
    Budget(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::BudgetExceeded(_) => Failure::Budget(e.to_string()),
            other => Failure::Usage(other.to_string()),
        }
    }
}

type Outcome = std::result::Result<(), Failure>;

/// Parses `argv` (including the program name) and runs the command.
pub fn run<I, T>(argv: I) -> (i32, Report)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let start = Instant::now();
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let mut r = Report::new("usage");
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    r.line(e.to_string().trim_end());
                    0
                }
                _ => {
                    r.error = Some(e.to_string().trim_end().to_string());
                    1
                }
            };
            return (code, r);
        }
    };
    let mut report = Report::new(command_name(&cli.command));
    report.json = cli.global.json;
    let outcome = dispatch(&cli.command, &cli.global, &mut report);
    report.timing_ms = start.elapsed().as_secs_f64() * 1e3;
    let code = match outcome {
        Ok(()) => 0,
        Err(Failure::Usage(msg)) => {
            report.error = Some(msg);
            1
        }
        Err(Failure::Budget(msg)) => {
            report.error = Some(msg);
            2
        }
    };
    (code, report)
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Nf { .. } => "nf",
        Command::Eq { .. } => "eq",
        Command::Abel { .. } => "abel",
        Command::Perm { .. } => "perm",
        Command::Positive { .. } => "positive",
        Command::Periodic { .. } => "periodic",
        Command::Root { .. } => "root",
        Command::Conj { .. } => "conj",
        Command::Qp(q) => match q {
            QpCommand::Expand { .. } => "qp expand",
            QpCommand::Verify { .. } => "qp verify",
            QpCommand::Obstruct { .. } => "qp obstruct",
            QpCommand::Root { .. } => "qp root",
        },
        Command::Cable(c) => match c {
            CableCommand::Assemble { .. } => "cable assemble",
            CableCommand::Normalize { .. } => "cable normalize",
            CableCommand::Cert { .. } => "cable cert",
        },
        Command::Cover(c) => match c {
            CoverCommand::Data => "cover data",
            CoverCommand::Lift { .. } => "cover lift",
            CoverCommand::Homrep { .. } => "cover homrep",
            CoverCommand::Deck => "cover deck",
            CoverCommand::Symcheck { .. } => "cover symcheck",
            CoverCommand::Ideq { .. } => "cover ideq-h1",
        },
        Command::VerifyPaper => "verify-paper",
    }
}

/// Parses a braid word; without `-n` the strand count is one more than
/// the largest generator index (at least 2).
fn parse_word(text: &str, strands: Option<usize>) -> Result<BraidWord, Failure> {
    if let Some(n) = strands {
        return Ok(BraidWord::parse(text, n)?);
    }
    let wide = BraidWord::parse(text, u32::MAX as usize)?;
    let n = wide
        .letters()
        .iter()
        .map(|l| l.index() + 1)
        .max()
        .unwrap_or(2)
        .max(2);
    Ok(BraidWord::new(n, wide.letters().to_vec())?)
}

fn parse_pair(a: &str, b: &str, strands: Option<usize>) -> Result<(BraidWord, BraidWord), Failure> {
    match strands {
        Some(_) => Ok((parse_word(a, strands)?, parse_word(b, strands)?)),
        None => {
            let (x, y) = (parse_word(a, None)?, parse_word(b, None)?);
            let n = x.strands().max(y.strands());
            Ok((
                BraidWord::new(n, x.letters().to_vec())?,
                BraidWord::new(n, y.letters().to_vec())?,
            ))
        }
    }
}

/// JSON argument given inline or as `@path`.
fn json_arg<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T, Failure> {
    let body = match text.strip_prefix('@') {
        Some(path) => std::fs::read_to_string(path)
            .map_err(|e| Failure::Usage(format!("cannot read {path}: {e}")))?,
        None => text.to_string(),
    };
    serde_json::from_str(&body).map_err(|e| Failure::Usage(format!("invalid JSON input: {e}")))
}

fn degree(g: &Global) -> Result<usize, Failure> {
    g.degree
        .ok_or_else(|| Failure::Usage("this command needs -k".into()))
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("serializable")
}

fn twist_input(text: &str, braid: bool, g: &Global) -> Result<TwistWord, Failure> {
    let k = degree(g)?;
    if braid {
        return Ok(cover::lift_word(&parse_word(text, g.strands)?, k));
    }
    let n = g
        .strands
        .ok_or_else(|| Failure::Usage("twist words need -n".into()))?;
    Ok(TwistWord::parse(text, n, k)?)
}

fn dispatch(cmd: &Command, g: &Global, r: &mut Report) -> Outcome {
    match cmd {
        Command::Nf { word } => {
            let b = parse_word(word, g.strands)?;
            r.input("n", b.strands());
            r.input("word", b.to_string());
            let nf = garside::normal_form(&b);
            r.result = to_value(&nf);
            r.line(format!("normal form: {nf}"));
            r.line(format!("inf = {}, sup = {}", nf.inf(), nf.sup()));
        }
        Command::Eq { left, right } => {
            let (a, b) = parse_pair(left, right, g.strands)?;
            r.input("n", a.strands());
            r.input("left", a.to_string());
            r.input("right", b.to_string());
            let eq = garside::is_equal(&a, &b)?;
            r.verdict(if eq { "EQUAL" } else { "NOT_EQUAL" });
            r.result = json!({ "equal": eq });
        }
        Command::Abel { word } => {
            let b = parse_word(word, g.strands)?;
            r.input("word", b.to_string());
            r.result = json!({ "exponent_sum": b.exponent_sum() });
            r.line(format!("exponent sum: {}", b.exponent_sum()));
        }
        Command::Perm { word } => {
            let b = parse_word(word, g.strands)?;
            r.input("n", b.strands());
            r.input("word", b.to_string());
            let p = b.permutation();
            r.result = json!({ "permutation": p.one_based(), "cycle_type": p.cycle_type() });
            r.line(format!("permutation: {p}"));
        }
        Command::Positive { word } => {
            let b = parse_word(word, g.strands)?;
            r.input("n", b.strands());
            r.input("word", b.to_string());
            let pos = garside::is_positive_braid(&b);
            r.verdict(if pos { "POSITIVE" } else { "NOT_POSITIVE" });
            r.result = json!({ "positive": pos });
        }
        Command::Periodic { word } => {
            let b = parse_word(word, g.strands)?;
            r.input("n", b.strands());
            r.input("word", b.to_string());
            let p = garside::is_periodic(&b);
            r.verdict(if p { "PERIODIC" } else { "NOT_PERIODIC" });
            r.result = json!({ "periodic": p });
        }
        Command::Root {
            word,
            root_degree: degree,
        } => {
            let b = parse_word(word, g.strands)?;
            r.input("n", b.strands());
            r.input("word", b.to_string());
            r.input("d", *degree);
            match garside::periodic_root(&b, *degree, g.budget)? {
                Some(root) => {
                    r.verdict("ROOT");
                    let w = root.word(b.strands());
                    r.result =
                        json!({ "kind": root.kind, "power": root.power, "word": w.to_string() });
                    r.line(format!(
                        "root: {}^{} = {w}",
                        to_value(&root.kind).as_str().unwrap_or_default(),
                        root.power
                    ));
                }
                None => {
                    r.verdict("NO_PERIODIC_ROOT");
                    r.result = Value::Null;
                }
            }
        }
        Command::Conj { left, right } => {
            let (a, b) = parse_pair(left, right, g.strands)?;
            r.input("n", a.strands());
            r.input("left", a.to_string());
            r.input("right", b.to_string());
            r.input("budget", g.budget);
            match garside::conjugacy(&a, &b, g.budget)? {
                Conjugacy::Conjugate { witness } => {
                    r.verdict("CONJUGATE");
                    r.result = json!({ "witness": witness.to_string() });
                    r.line(format!("witness w with w·a·w⁻¹ = b: {witness}"));
                }
                Conjugacy::NotConjugate => {
                    r.verdict("NOT_CONJUGATE");
                }
            }
        }
        Command::Qp(q) => dispatch_qp(q, g, r)?,
        Command::Cable(c) => dispatch_cable(c, g, r)?,
        Command::Cover(c) => dispatch_cover(c, g, r)?,
        Command::VerifyPaper => {
            r.input("seed", g.seed);
            let checks = verify_paper(g.seed);
            let passed = checks.iter().filter(|c| c.passed).count();
            r.verdict(if passed == checks.len() {
                "ALL_PASS"
            } else {
                "FAILURES"
            });
            for c in &checks {
                r.line(format!(
                    "{} {}: {}",
                    if c.passed { "PASS" } else { "FAIL" },
                    c.name,
                    c.detail
                ));
            }
            r.line(format!("{passed}/{} checks passed", checks.len()));
            r.result = json!({ "checks": checks, "passed": passed, "total": checks.len() });
        }
    }
    Ok(())
}

fn dispatch_qp(q: &QpCommand, g: &Global, r: &mut Report) -> Outcome {
    match q {
        QpCommand::Expand { cert } => {
            let c: QPCertificate = json_arg(cert)?;
            r.input("certificate", to_value(&c));
            let w = qp::expand(&c);
            r.result = json!({ "n": c.strands(), "word": w.to_string(), "bands": c.len() });
            r.line(format!("expansion: {w}"));
        }
        QpCommand::Verify { cert, word } => {
            let c: QPCertificate = json_arg(cert)?;
            let b = parse_word(word, Some(g.strands.unwrap_or(c.strands())))?;
            r.input("certificate", to_value(&c));
            r.input("word", b.to_string());
            let ok = qp::verify(&c, &b)?;
            r.verdict(if ok { "VERIFIED" } else { "NOT_VERIFIED" });
            r.result = json!({ "verified": ok });
        }
        QpCommand::Obstruct { word } => {
            let b = parse_word(word, g.strands)?;
            r.input("n", b.strands());
            r.input("word", b.to_string());
            r.input("budget", g.budget);
            let v = qp::obstruct(&b, g.budget);
            match &v {
                QPVerdict::Qp(c) => {
                    r.verdict("QP");
                    r.result = json!({ "certificate": c });
                    r.line(format!(
                        "certificate with {} bands: {}",
                        c.len(),
                        to_value(c)
                    ));
                }
                QPVerdict::NotQp(reason) => {
                    r.verdict(&format!("NOT_QP/{}", reason.code()));
                    r.result = json!({ "reason": reason });
                }
                QPVerdict::Unknown => r.verdict("UNKNOWN"),
            }
        }
        QpCommand::Root {
            word,
            root_degree: degree,
        } => {
            let b = parse_word(word, g.strands)?;
            r.input("n", b.strands());
            r.input("word", b.to_string());
            r.input("d", *degree);
            match qp::qp_root_periodic(&b, *degree, g.budget)? {
                Some(c) => {
                    r.verdict("QP_ROOT");
                    r.line(format!("root {} with {} bands", qp::expand(&c), c.len()));
                    r.result = json!({ "certificate": c });
                }
                None => r.verdict("NO_QP_ROOT"),
            }
        }
    }
    Ok(())
}

#[derive(Deserialize)]
struct CableCertInput {
    tubular: QPCertificate,
    widths: Vec<usize>,
    #[serde(default)]
    interiors: Vec<InteriorCert>,
}

#[derive(Deserialize)]
struct InteriorCert {
    orbit: usize,
    cert: QPCertificate,
}

fn dispatch_cable(c: &CableCommand, _g: &Global, r: &mut Report) -> Outcome {
    match c {
        CableCommand::Assemble { form } => {
            let rf: RegularForm = json_arg(form)?;
            r.input("form", to_value(&rf));
            let b = cabling::assemble(&rf)?;
            r.result = json!({ "n": b.strands(), "word": b.to_string() });
            r.line(format!("composite braid on {} strands: {b}", b.strands()));
        }
        CableCommand::Normalize { assignment } => {
            let a: TubePositionAssignment = json_arg(assignment)?;
            r.input("assignment", to_value(&a));
            let general = GeneralForm::from_assignment(&a)?;
            let (rf, u) = cabling::normalize_interiors(&general)?;
            r.result = json!({ "regular_form": rf, "conjugator": u.to_string() });
            r.line(format!("regular form: {}", to_value(&rf)));
            r.line(format!("conjugator: {u}"));
        }
        CableCommand::Cert { input } => {
            let inp: CableCertInput = json_arg(input)?;
            let tubular = qp::expand(&inp.tubular);
            let orbits = cabling::orbit_structure(&tubular);
            let mut interiors: Vec<Option<QPCertificate>> = vec![None; orbits.len()];
            for it in inp.interiors {
                let slot = interiors
                    .get_mut(it.orbit)
                    .ok_or_else(|| Failure::Usage(format!("no orbit {}", it.orbit)))?;
                *slot = Some(it.cert);
            }
            let cert = cabling::cable_certificate(&inp.tubular, &interiors, &inp.widths)?;
            let rf = RegularForm::new(
                tubular,
                inp.widths.clone(),
                interiors
                    .iter()
                    .zip(&orbits)
                    .map(|(c, o)| {
                        c.as_ref()
                            .map_or(BraidWord::identity(inp.widths[o[0]]), qp::expand)
                    })
                    .collect(),
            )?;
            let target = cabling::assemble(&rf)?;
            let ok = qp::verify(&cert, &target)?;
            r.input("widths", to_value(&inp.widths));
            r.verdict(if ok { "VERIFIED" } else { "NOT_VERIFIED" });
            r.result = json!({ "certificate": cert, "composite": target.to_string() });
            r.line(format!("{} bands for {target}", cert.len()));
        }
    }
    Ok(())
}

fn dispatch_cover(c: &CoverCommand, g: &Global, r: &mut Report) -> Outcome {
    match c {
        CoverCommand::Data => {
            let n = g
                .strands
                .ok_or_else(|| Failure::Usage("cover data needs -n".into()))?;
            let d = cover::cover_data(n, degree(g)?)?;
            r.result = to_value(&d);
            r.line(format!(
                "S_({n},{}): euler characteristic {}, {} boundary components, genus {}, H1 rank {}",
                d.k, d.euler_char, d.boundary_components, d.genus, d.h1_rank
            ));
        }
        CoverCommand::Lift { word } => {
            let b = parse_word(word, g.strands)?;
            let k = degree(g)?;
            r.input("word", b.to_string());
            let t = cover::lift_word(&b, k);
            r.result = json!({ "n": t.n(), "k": k, "twists": t.to_string() });
            r.line(t.to_string());
        }
        CoverCommand::Homrep { word, braid } => {
            let t = twist_input(word, *braid, g)?;
            r.input("twists", t.to_string());
            let m = cover::homology_rep(&t)?;
            r.line(m.to_string());
            r.result = to_value(&CoverMatrix::new(t.n(), t.k(), m));
        }
        CoverCommand::Deck => {
            let n = g
                .strands
                .ok_or_else(|| Failure::Usage("cover deck needs -n".into()))?;
            let k = degree(g)?;
            let m = cover::deck_matrix(n, k)?;
            r.line(m.to_string());
            r.result = to_value(&CoverMatrix::new(n, k, m));
        }
        CoverCommand::Symcheck { word, braid } => {
            let t = twist_input(word, *braid, g)?;
            r.input("twists", t.to_string());
            let ok = cover::symmetry_check(&t)?;
            r.verdict(if ok {
                "COMMUTES_WITH_DECK"
            } else {
                "BREAKS_SYMMETRY"
            });
            r.result = json!({ "commutes": ok });
        }
        CoverCommand::Ideq { left, right, braid } => {
            let (a, b) = if *braid {
                let (x, y) = parse_pair(left, right, g.strands)?;
                let k = degree(g)?;
                (cover::lift_word(&x, k), cover::lift_word(&y, k))
            } else {
                (twist_input(left, false, g)?, twist_input(right, false, g)?)
            };
            r.input("left", a.to_string());
            r.input("right", b.to_string());
            let eq = cover::check_identity(&a, &b)?;
            r.verdict(if eq { "H1_EQUAL" } else { "H1_DIFFERENT" });
            r.result = json!({ "h1_equal": eq });
            r.line("equality on H1 is necessary, not sufficient, for equal mapping classes");
        }
    }
    Ok(())
}
