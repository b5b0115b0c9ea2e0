use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use posbraid::braidword::BraidWord;
use posbraid::diagram::LinkDiagram;
use posbraid::garside3::{classify_family, conjugate_to_lambda, normal_form, summit_infimum, NormalForm3};
use posbraid::khovanov::{
    khovanov_homology_limited, khovanov_homology_scanned, HomologyTable, DEFAULT_MAX_CROSSINGS, SCHEMA_VERSION,
};
use posbraid::rational::{self, Bookkeeping};
use posbraid::tables::{extended_shape, parse_golden, PartialTable};
use serde::Serialize;
use serde_json::{json, Value};

mod bench;

#[derive(Parser)]
#[command(name = "posbraid", version, about = "Khovanov homology of closed positive 3-braids")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Ascii, global = true)]
    format: Format,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Ascii,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    /// Full cube of states; refuses diagrams above `--max-crossings`.
    StateSum,
    /// Crossing-by-crossing scan with simplification; no crossing limit.
    Scan,
}

#[derive(clap::Args, Clone, Copy)]
struct Oracle {
    #[arg(long, value_enum, default_value_t = Method::StateSum)]
    method: Method,
    #[arg(long, default_value_t = DEFAULT_MAX_CROSSINGS)]
    max_crossings: usize,
}

impl Oracle {
    fn homology(&self, d: &LinkDiagram) -> Result<HomologyTable> {
        Ok(match self.method {
            Method::StateSum => khovanov_homology_limited(d, self.max_crossings)?,
            Method::Scan => khovanov_homology_scanned(d)?,
        })
    }
}

#[derive(Subcommand)]
enum Cmd {
    /// Left normal form of a 3-braid word.
    Nf { word: String },
    /// Family tag, summit representative and conjugator.
    Classify { word: String },
    /// Summit infimum and summit representative.
    Summit { word: String },
    /// Closed-form (partial) homology table of the closure.
    Shape { word: String },
    /// Homology of a braid closure or of a rational diagram.
    Homology {
        word: Option<String>,
        /// Rational code such as `2,-1,3` instead of a word.
        #[arg(long, allow_hyphen_values = true, conflicts_with = "word")]
        code: Option<String>,
        #[command(flatten)]
        oracle: Oracle,
    },
    /// Compares closed-form tables with computed homology and, if given, a golden file.
    Verify {
        words: Vec<String>,
        /// Golden tables in the bundled JSON format; with no words every entry is checked.
        #[arg(long)]
        golden: Option<PathBuf>,
        #[command(flatten)]
        oracle: Oracle,
    },
    /// Rewriting of rational codes.
    Rational {
        #[command(subcommand)]
        op: RationalCmd,
    },
    /// Times normal form, summit conjugation and classification on random signed words.
    Bench {
        #[arg(long, value_delimiter = ',', default_values_t = vec![250_000usize, 1_000_000])]
        lengths: Vec<usize>,
        #[arg(long, default_value_t = 5)]
        trials: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
}

#[derive(Subcommand)]
enum RationalCmd {
    U {
        #[arg(allow_hyphen_values = true)]
        code: String,
    },
    T {
        #[arg(allow_hyphen_values = true)]
        code: String,
        /// 1-based position of the -1 entry.
        #[arg(long)]
        index: usize,
    },
    Alt {
        #[arg(allow_hyphen_values = true)]
        code: String,
    },
    /// Checks the alternating rewrite against computed homology and the sign census.
    Check {
        #[arg(allow_hyphen_values = true)]
        code: String,
        #[command(flatten)]
        oracle: Oracle,
    },
}

/// One result: what was asked, what came out, how long it took and whether checks passed.
#[derive(Serialize)]
struct RunReport {
    schema_version: u32,
    command: String,
    input: String,
    output: Value,
    timing_ms: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    verdict: Option<Verdict>,
    #[serde(skip)]
    text: String,
}

#[derive(Serialize, Clone, PartialEq, Eq)]
#[serde(rename_all = "snake_case")]
enum Verdict {
    Pass,
    Fail { witness: String },
}

impl RunReport {
    fn new(command: &str, input: &str, output: Value, text: String) -> Self {
        RunReport {
            schema_version: SCHEMA_VERSION,
            command: command.to_string(),
            input: input.to_string(),
            output,
            timing_ms: 0.0,
            verdict: None,
            text,
        }
    }

    fn with_verdict(mut self, failures: Vec<String>) -> Self {
        self.verdict = Some(if failures.is_empty() { Verdict::Pass } else { Verdict::Fail { witness: failures.join("; ") } });
        self
    }

    fn passed(&self) -> bool {
        !matches!(self.verdict, Some(Verdict::Fail { .. }))
    }
}

fn parse_word(text: &str) -> Result<BraidWord> {
    BraidWord::parse(text, 3).with_context(|| format!("bad braid word {text:?}"))
}

fn nf_of(text: &str) -> Result<NormalForm3> {
    Ok(normal_form(&parse_word(text)?)?)
}

fn table_value(t: &HomologyTable) -> Value {
    serde_json::to_value(t.to_record()).expect("plain data")
}

fn cmd_nf(word: &str) -> Result<RunReport> {
    let nf = nf_of(word)?;
    let (inf, sup) = nf.inf_sup();
    let out = json!({ "normal_form": nf.render(), "inf": inf, "sup": sup, "word": nf.to_word().render() });
    Ok(RunReport::new("nf", word, out, format!("{nf}\n")))
}

fn cmd_classify(word: &str) -> Result<RunReport> {
    let nf = nf_of(word)?;
    let tag = classify_family(&nf)?;
    let lam = conjugate_to_lambda(&nf);
    let out = json!({
        "family": tag.to_string(),
        "representative": lam.rep.render(),
        "summit_infimum": lam.rep.p(),
        "conjugator": lam.conjugator.render(),
    });
    let text = format!(
        "family          {tag}\nrepresentative  {}\nsummit infimum  {}\nconjugator      {}\n",
        lam.rep,
        lam.rep.p(),
        lam.conjugator.render()
    );
    Ok(RunReport::new("classify", word, out, text))
}

fn cmd_summit(word: &str) -> Result<RunReport> {
    let nf = nf_of(word)?;
    let s = summit_infimum(&nf);
    let rep = conjugate_to_lambda(&nf).rep;
    let out = json!({ "summit_infimum": s, "representative": rep.render() });
    Ok(RunReport::new("summit", word, out, format!("{s}  {rep}\n")))
}

fn cmd_shape(word: &str) -> Result<RunReport> {
    let t = extended_shape(&nf_of(word)?)?;
    let out = serde_json::to_value(t.to_record()).expect("plain data");
    Ok(RunReport::new("shape", word, out, t.render_ascii()))
}

fn cmd_homology(word: Option<&str>, code: Option<&str>, oracle: Oracle) -> Result<RunReport> {
    let (input, d) = match (word, code) {
        (_, Some(c)) => (c.to_string(), LinkDiagram::from_rational_code(&rational::parse_code(c)?)?),
        (Some(w), None) => (w.to_string(), LinkDiagram::from_braid(&parse_word(w)?)),
        (None, None) => bail!("give a braid word or --code"),
    };
    let t = oracle.homology(&d)?;
    Ok(RunReport::new("homology", &input, table_value(&t), t.render_ascii()))
}

fn describe(diff: Option<(i64, i64, posbraid::khovanov::AbelianGroup, posbraid::khovanov::AbelianGroup)>, a: &str, b: &str) -> Option<String> {
    diff.map(|(i, j, x, y)| format!("cell ({i},{j}): {a} {x}, {b} {y}"))
}

fn verify_one(word: &str, golden: Option<&HomologyTable>, how: Oracle) -> Result<RunReport> {
    let shape = extended_shape(&nf_of(word)?)?;
    let oracle = how.homology(&LinkDiagram::from_braid(&parse_word(word)?))?;
    let mut failures = Vec::new();
    failures.extend(describe(shape.disagreement(&oracle), "shape", "state sum"));
    if let Some(g) = golden {
        failures.extend(describe(PartialTable::complete(g.clone()).disagreement(&oracle), "golden", "state sum"));
        failures.extend(describe(shape.disagreement(g), "shape", "golden"));
    }
    let status = if failures.is_empty() { "pass".to_string() } else { format!("FAIL {}", failures.join("; ")) };
    let out = json!({ "shape": shape.to_record(), "homology": oracle.to_record(), "golden_checked": golden.is_some() });
    Ok(RunReport::new("verify", word, out, format!("{word:?}: {status}\n")).with_verdict(failures))
}

fn cmd_verify(words: &[String], golden: Option<&PathBuf>, how: Oracle) -> Result<Vec<RunReport>> {
    let entries = match golden {
        Some(path) => {
            let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
            parse_golden(&text)?
        }
        None => Vec::new(),
    };
    let find = |w: &str| -> Result<Option<&HomologyTable>> {
        let letters = parse_word(w)?.letters().to_vec();
        Ok(entries.iter().find(|g| parse_word(&g.word).map(|x| x.letters() == letters).unwrap_or(false)).map(|g| &g.table))
    };
    if words.is_empty() {
        if entries.is_empty() {
            bail!("nothing to verify: give words or --golden");
        }
        return entries.iter().map(|g| verify_one(&g.word, Some(&g.table), how)).collect();
    }
    words.iter().map(|w| verify_one(w, find(w)?, how)).collect()
}

fn code_value(code: &[i64]) -> Value {
    json!({ "code": code, "text": rational::render_code(code) })
}

fn census(d: &LinkDiagram) -> (i64, i64, i64) {
    (d.positive_count() as i64, d.negative_count() as i64, d.writhe())
}

fn cmd_rational(op: &RationalCmd) -> Result<RunReport> {
    let parse = |c: &str| rational::parse_code(c).map_err(anyhow::Error::from);
    Ok(match op {
        RationalCmd::U { code } => {
            let out = rational::u_transform(&parse(code)?)?;
            RunReport::new("rational u", code, code_value(&out), format!("{}\n", rational::render_code(&out)))
        }
        RationalCmd::T { code, index } => {
            let out = rational::t_transform(&parse(code)?, *index)?;
            RunReport::new("rational t", code, code_value(&out), format!("{}\n", rational::render_code(&out)))
        }
        RationalCmd::Alt { code } => {
            let (out, b) = rational::alternating_code(&parse(code)?)?;
            let v = json!({ "code": out, "text": rational::render_code(&out), "bookkeeping": b });
            RunReport::new("rational alt", code, v, format!("{}  {b}\n", rational::render_code(&out)))
        }
        RationalCmd::Check { code, oracle } => rational_check(code, &parse(code)?, *oracle)?,
    })
}

fn rational_check(input: &str, code: &[i64], how: Oracle) -> Result<RunReport> {
    let (alt, b) = rational::alternating_code(code)?;
    let d = LinkDiagram::from_rational_code(code)?;
    let mut d2 = LinkDiagram::from_rational_code(&alt)?;
    // orient the rewritten link like the original: reversing one component negates lk
    if d2.component_count() == 2 && d2.linking_number() != d.linking_number() {
        d2 = d2.with_component_reversed(0);
    }
    let mut failures = Vec::new();
    if !rational::is_alternating(&alt)? {
        failures.push("rewrite is not alternating".to_string());
    }
    if !d2.is_a_adequate() {
        failures.push("rewrite is not A-adequate".to_string());
    }
    let ((p, n, w), (p2, n2, w2)) = (census(&d), census(&d2));
    let seen = Bookkeeping { delta_p: p2 - p, delta_n: n2 - n, delta_w: w2 - w };
    if seen != b {
        failures.push(format!("sign census {seen}, expected {b}"));
    }
    let knot = d.component_count() == 1;
    if knot {
        let (h, h2) = (how.homology(&d)?, how.homology(&d2)?);
        failures.extend(describe(PartialTable::complete(h).disagreement(&h2), "original", "rewrite"));
    }
    let status = if failures.is_empty() { "pass".to_string() } else { format!("FAIL {}", failures.join("; ")) };
    let text = format!(
        "{} -> {}  {b}\nhomology {}\n{status}\n",
        rational::render_code(code),
        rational::render_code(&alt),
        if knot { "compared" } else { "skipped (link)" }
    );
    let out = json!({ "code": code, "alternating": alt, "bookkeeping": b, "homology_compared": knot });
    Ok(RunReport::new("rational check", input, out, text).with_verdict(failures))
}

fn run(cli: &Cli) -> Result<Vec<RunReport>> {
    let one = |r: Result<RunReport>| r.map(|r| vec![r]);
    match &cli.cmd {
        Cmd::Nf { word } => one(cmd_nf(word)),
        Cmd::Classify { word } => one(cmd_classify(word)),
        Cmd::Summit { word } => one(cmd_summit(word)),
        Cmd::Shape { word } => one(cmd_shape(word)),
        Cmd::Homology { word, code, oracle } => one(cmd_homology(word.as_deref(), code.as_deref(), *oracle)),
        Cmd::Verify { words, golden, oracle } => cmd_verify(words, golden.as_ref(), *oracle),
        Cmd::Rational { op } => one(cmd_rational(op)),
        Cmd::Bench { lengths, trials, seed } => one(bench::run(lengths, *trials, *seed)),
    }
}

fn init_threads() -> Result<()> {
    if let Ok(v) = std::env::var("POSBRAID_THREADS") {
        let n: usize = v.trim().parse().with_context(|| format!("POSBRAID_THREADS={v:?}"))?;
        rayon::ThreadPoolBuilder::new().num_threads(n).build_global()?;
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(e) = init_threads() {
        eprintln!("error: {e:#}");
        return ExitCode::from(2);
    }
    let start = Instant::now();
    let reports = match run(&cli) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e:#}");
            return ExitCode::from(2);
        }
    };
    let elapsed = start.elapsed().as_secs_f64() * 1e3 / reports.len().max(1) as f64;
    let mut ok = true;
    for mut r in reports {
        if r.timing_ms == 0.0 {
            r.timing_ms = elapsed;
        }
        ok &= r.passed();
        match cli.format {
            Format::Ascii => print!("{}", r.text),
            Format::Json => println!("{}", serde_json::to_string(&r).expect("plain data")),
        }
    }
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
