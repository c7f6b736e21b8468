//! The `latin-tw` command line.
//!
//! Exit status: 0 on success or a true verdict, 1 on a false verdict, 2 on
//! a usage or input error (with the message on the diagnostic stream).

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};

use crate::corpus;
use crate::error::{Error, Result};
use crate::oracle::verify_wedderburn;
use crate::quasigroup::{loop_properties, LatinSquare, Property};
use crate::report::{
    profile_tsv, AnalysisReport, BasePointRecord, CorpusListing, InputDigest, MoufangCheck,
    ProfileSummary, Verdicts,
};
use crate::scheme::{orthogonal_array, Point};
use crate::subconstituent::search::{search_rip_loops, SearchConfig};
use crate::subconstituent::{
    fixed_point_profile, for_each_base_point, module_table, right_bol_certificate, Certificate,
};
use crate::transforms::{apply_conjugacy, apply_isotopy, Conjugacy, Isotopy};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FALSE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "latin-tw",
    version,
    about = "Base-point permutations and Terwilliger algebras of Latin squares"
)]
struct Cli {
    /// Emit one JSON report instead of human-readable tables.
    #[arg(long, global = true)]
    json: bool,

    /// Seed for randomized commands; recorded in the report.
    #[arg(long, global = true)]
    seed: Option<u64>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Input {
    /// A square in text form: a file path, or `corpus:NAME`.
    input: String,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Parse the input and check that it is a Latin square.
    Validate(Input),
    /// Loop, group, Bol, Moufang and inverse-property flags.
    Properties(Input),
    /// The permutation π at one base point, in cycle notation.
    Pi {
        #[command(flatten)]
        input: Input,
        /// Base point as `row,column`.
        #[arg(long, value_parser = parse_cell)]
        base: (usize, usize),
    },
    /// Cycle structure of π at every base point.
    Profile {
        #[command(flatten)]
        input: Input,
        /// Worker threads; defaults to the number of cores.
        #[arg(long)]
        threads: Option<usize>,
        /// One tab-separated row per base point.
        #[arg(long, conflicts_with = "json")]
        tsv: bool,
    },
    /// Module table and Wedderburn signature at one base point (order ≥ 5).
    Modules {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_parser = parse_cell)]
        base: (usize, usize),
    },
    /// Compare the predicted algebra dimension with an exact computation.
    Verify {
        #[command(flatten)]
        input: Input,
        /// Base point as `row,column`; defaults to `1,1`.
        #[arg(long, value_parser = parse_cell, conflicts_with = "all")]
        base: Option<(usize, usize)>,
        /// Every base point.
        #[arg(long)]
        all: bool,
        /// Also compare the dimension of the centre.
        #[arg(long)]
        center: bool,
        #[arg(long)]
        threads: Option<usize>,
    },
    /// Decide right Bol from π² = id and the Bol formula.
    Certify(Input),
    /// Apply an isotopy or conjugacy and print the resulting square.
    Transform {
        #[command(flatten)]
        input: Input,
        /// File with three image lists (rows, columns, entries).
        #[arg(long, required_unless_present = "conjugacy", conflicts_with = "conjugacy")]
        isotopy: Option<PathBuf>,
        /// A word over r, c, e such as `cre`, or two letters to swap (`rc`).
        #[arg(long)]
        conjugacy: Option<String>,
    },
    /// List the built-in squares, or print one.
    Corpus { name: Option<String> },
    /// Look for RIP loops where π² = id fails at a base point.
    Search {
        /// Number of random loops to draw.
        #[arg(long, default_value_t = SearchConfig::default().loops)]
        budget: usize,
        #[arg(long, default_value_t = SearchConfig::default().min_order)]
        min_order: usize,
        #[arg(long, default_value_t = SearchConfig::default().max_order)]
        max_order: usize,
    },
}

fn parse_cell(s: &str) -> std::result::Result<(usize, usize), String> {
    let (r, c) = s
        .split_once(',')
        .ok_or_else(|| format!("expected row,column, got `{s}`"))?;
    let num = |t: &str| {
        t.trim()
            .parse::<usize>()
            .map_err(|_| format!("expected row,column, got `{s}`"))
    };
    Ok((num(r)?, num(c)?))
}

/// Reads `corpus:NAME` from the built-in corpus, anything else from disk.
pub fn load_input(source: &str) -> Result<LatinSquare> {
    match source.strip_prefix("corpus:") {
        Some(name) => corpus::square(name),
        None => {
            let text = std::fs::read_to_string(Path::new(source))
                .map_err(|e| Error::Io(format!("{source}: {e}")))?;
            LatinSquare::parse(&text)
        }
    }
}

struct Outcome {
    report: AnalysisReport,
    human: String,
    status: i32,
}

impl Outcome {
    fn ok(report: AnalysisReport, human: String) -> Self {
        Outcome {
            report,
            human,
            status: EXIT_OK,
        }
    }
}

fn digest(source: &str, square: &LatinSquare, with_properties: bool) -> InputDigest {
    InputDigest {
        source: source.to_string(),
        order: square.order(),
        properties: with_properties.then(|| loop_properties(square)),
    }
}

fn flag(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn validate(source: &str) -> Result<Outcome> {
    let mut report = AnalysisReport::new("validate");
    match load_input(source) {
        Ok(square) => {
            report.input = Some(digest(source, &square, false));
            report.valid = Some(true);
            let human = format!("valid Latin square of order {}\n", square.order());
            Ok(Outcome::ok(report, human))
        }
        // a well-formed grid that breaks the Latin property is a verdict,
        // not an input error
        Err(e @ (Error::RowRepeat { .. } | Error::ColumnRepeat { .. } | Error::SymbolOutOfRange { .. })) => {
            report.valid = Some(false);
            Ok(Outcome {
                report,
                human: format!("not a Latin square: {e}\n"),
                status: EXIT_FALSE,
            })
        }
        Err(e) => Err(e),
    }
}

fn properties(source: &str) -> Result<Outcome> {
    let square = load_input(source)?;
    let mut report = AnalysisReport::new("properties");
    let record = loop_properties(&square);
    let mut human = format!("order {}\n", square.order());
    let rows = [
        ("quasigroup", record.is_quasigroup, None),
        ("loop", record.is_loop, Some(Property::Loop)),
        ("group", record.is_group, Some(Property::Group)),
        ("right Bol", record.is_right_bol, Some(Property::RightBol)),
        ("left Bol", record.is_left_bol, Some(Property::LeftBol)),
        ("Moufang", record.is_moufang, Some(Property::Moufang)),
        ("RIP", record.has_rip, Some(Property::Rip)),
        ("LIP", record.has_lip, Some(Property::Lip)),
        ("AAIP", record.has_aaip, Some(Property::Aaip)),
        ("commutative", record.is_commutative, Some(Property::Commutative)),
    ];
    for (name, value, property) in rows {
        human.push_str(&format!("{name:<12} {}", flag(value)));
        if let Some(reason) = property.and_then(|p| record.reason(p)) {
            human.push_str(&format!("  ({})", serde_json::to_string(reason).unwrap_or_default()));
        }
        human.push('\n');
    }
    if let Some(e) = square.identity() {
        human.push_str(&format!("identity     {}\n", square.label(e)));
    }
    report.input = Some(InputDigest {
        properties: Some(record),
        ..digest(source, &square, false)
    });
    Ok(Outcome::ok(report, human))
}

fn pi(source: &str, (r, c): (usize, usize)) -> Result<Outcome> {
    let square = load_input(source)?;
    let base = square.point(r, c)?;
    let record = BasePointRecord::compute(&square, &base, true)?;
    let human = format!("{}\n", record.pi);
    let mut report = AnalysisReport::new("pi");
    report.input = Some(digest(source, &square, false));
    report.base_points = vec![record];
    Ok(Outcome::ok(report, human))
}

fn profile(source: &str, threads: Option<usize>, tsv: bool) -> Result<Outcome> {
    let square = load_input(source)?;
    let n = square.order();
    let records = for_each_base_point(&square, threads, |p| BasePointRecord::compute(&square, &p, true))?
        .into_iter()
        .collect::<Result<Vec<_>>>()?;
    let profile = fixed_point_profile(&square, threads)?;
    let summary = ProfileSummary::from(&profile);
    let input = digest(source, &square, true);
    let moufang = MoufangCheck::evaluate(&square, &profile, input.properties.as_ref().expect("requested"));

    let human = if tsv {
        profile_tsv(&records)
    } else {
        let mut h = format!("fixed points of π, order {n} (rows × columns)\n");
        for row in &summary.fixed_counts {
            let cells: Vec<String> = row.iter().map(|x| format!("{x:>3}")).collect();
            h.push_str(&cells.join(""));
            h.push('\n');
        }
        h.push_str("column cycle structures:\n");
        for (c, s) in summary.column_structures.iter().enumerate() {
            let s = s.as_ref().map_or_else(|| "(varies by row)".to_string(), ToString::to_string);
            h.push_str(&format!("  {:>3}: {s}\n", c + 1));
        }
        h.push_str(&format!("row constant: {}\n", flag(summary.row_constant)));
        if let Some(m) = &moufang {
            h.push_str(&format!(
                "Moufang: s = {}, predicted fixed = {}, holds: {}\n",
                m.self_inverse,
                m.predicted_fixed,
                flag(m.holds)
            ));
        }
        h
    };
    let mut report = AnalysisReport::new("profile");
    report.input = Some(input);
    report.base_points = records;
    report.profile = Some(summary);
    report.verdicts = Some(Verdicts {
        certificate: None,
        moufang: moufang.clone(),
    });
    let status = if moufang.is_some_and(|m| !m.holds) {
        EXIT_FALSE
    } else {
        EXIT_OK
    };
    Ok(Outcome { report, human, status })
}

fn modules(source: &str, (r, c): (usize, usize)) -> Result<Outcome> {
    let square = load_input(source)?;
    let base = square.point(r, c)?;
    // surface the order error instead of silently omitting the table
    let record = BasePointRecord::compute(&square, &base, true)?;
    let table = module_table(square.order(), &record.cycle_structure)?;
    let signature = table.signature();
    let mut human = format!(
        "base {}  π = {}  cycles {}  k = {}  |U| = {}\n",
        base,
        record.pi,
        record.cycle_structure,
        table.cycle_count(),
        table.roots.len()
    );
    human.push_str("dim  mult  label\n");
    for e in &table.entries {
        human.push_str(&format!("{:>3}  {:>4}  {}\n", e.dimension, e.multiplicity, e.label));
    }
    human.push_str(&format!(
        "balance {} = n²\nsignature {signature}  N = {}  dim T = {}  centre {}\n",
        table.balance(),
        signature.sixes,
        signature.algebra_dimension(),
        signature.center_dimension()
    ));
    let mut report = AnalysisReport::new("modules");
    report.input = Some(digest(source, &square, false));
    report.base_points = vec![record];
    Ok(Outcome::ok(report, human))
}

fn verify(
    source: &str,
    base: Option<(usize, usize)>,
    all: bool,
    center: bool,
    threads: Option<usize>,
) -> Result<Outcome> {
    let square = load_input(source)?;
    let points: Vec<Point> = if all {
        orthogonal_array(&square)
    } else {
        let (r, c) = base.unwrap_or((1, 1));
        vec![square.point(r, c)?]
    };
    let checks = if all {
        // one closure per base point is the expensive part; spread them out
        for_each_base_point(&square, threads, |p| verify_wedderburn(&square, &p, center))?
            .into_iter()
            .collect::<Result<Vec<_>>>()?
    } else {
        vec![verify_wedderburn(&square, &points[0], center)?]
    };
    let mut human = String::new();
    for check in &checks {
        let predicted = check
            .prediction
            .as_ref()
            .map_or_else(|| "-".to_string(), |p| p.dimension.to_string());
        human.push_str(&format!(
            "base {}  predicted {predicted}  oracle {}",
            check.base, check.oracle_dimension
        ));
        if let Some(cd) = check.center_dimension {
            let predicted = check
                .prediction
                .as_ref()
                .map_or_else(|| "-".to_string(), |p| p.signature.center_dimension().to_string());
            human.push_str(&format!("  centre predicted {predicted} oracle {cd}"));
        }
        let verdict = match (check.dimension_match, check.consistent()) {
            (None, _) => "no prediction",
            (Some(_), true) => "match",
            (Some(_), false) => "MISMATCH",
        };
        human.push_str(&format!("  {verdict}\n"));
    }
    let status = if checks.iter().all(|c| c.consistent()) {
        EXIT_OK
    } else {
        EXIT_FALSE
    };
    let mut report = AnalysisReport::new("verify");
    report.input = Some(digest(source, &square, false));
    report.oracle = checks;
    Ok(Outcome { report, human, status })
}

fn certify(source: &str) -> Result<Outcome> {
    let square = load_input(source)?;
    let certificate = right_bol_certificate(&square);
    let human = match &certificate {
        Certificate::CertifiedRightBol => "certified-right-bol\n".to_string(),
        Certificate::HypothesisFailed { reason } => format!(
            "hypothesis-failed: {}\n",
            serde_json::to_string(reason).unwrap_or_default()
        ),
    };
    let status = if certificate.is_certified() {
        EXIT_OK
    } else {
        EXIT_FALSE
    };
    let mut report = AnalysisReport::new("certify");
    report.input = Some(digest(source, &square, true));
    report.verdicts = Some(Verdicts {
        certificate: Some(certificate),
        moufang: None,
    });
    Ok(Outcome { report, human, status })
}

fn transform(source: &str, isotopy: Option<&Path>, conjugacy: Option<&str>) -> Result<Outcome> {
    let square = load_input(source)?;
    let out = match (isotopy, conjugacy) {
        (Some(path), _) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
            apply_isotopy(&square, &Isotopy::parse(&text)?)?
        }
        (None, Some(word)) => apply_conjugacy(&square, &word.parse::<Conjugacy>()?),
        (None, None) => unreachable!("clap requires one of the two"),
    };
    let text = out.to_text();
    let mut report = AnalysisReport::new("transform");
    report.input = Some(digest(source, &square, false));
    report.square = Some(text.clone());
    Ok(Outcome::ok(report, text))
}

fn corpus_command(name: Option<&str>) -> Result<Outcome> {
    let mut report = AnalysisReport::new("corpus");
    let names: Vec<&str> = match name {
        Some(n) => vec![n],
        None => corpus::names().to_vec(),
    };
    let mut human = String::new();
    for n in names {
        let entry = corpus::get(n)?;
        let order = corpus::square(n)?.order();
        if name.is_some() {
            human.push_str(&entry.text);
            report.square = Some(entry.text.clone());
        } else {
            human.push_str(&format!("{:<6} {order:>2}  {}\n", entry.name, entry.description));
        }
        report.corpus.push(CorpusListing {
            name: entry.name.to_string(),
            order,
            description: entry.description.to_string(),
            boxed: entry.boxed,
        });
    }
    Ok(Outcome::ok(report, human))
}

fn search(budget: usize, min_order: usize, max_order: usize, seed: Option<u64>) -> Result<Outcome> {
    if min_order < 2 || min_order > max_order {
        return Err(Error::Usage(format!(
            "need 2 <= --min-order <= --max-order, got {min_order}..{max_order}"
        )));
    }
    let config = SearchConfig {
        loops: budget,
        min_order,
        max_order,
        seed: seed.unwrap_or(SearchConfig::default().seed),
    };
    let result = search_rip_loops(&config);
    let mut human = format!(
        "seed {}  loops drawn {}  RIP loops found {}  not right Bol {}\n\
         criteria checked {}  disagreements {}\n",
        config.seed,
        config.loops,
        result.loops_found,
        result.non_bol_loops,
        result.criteria_checked,
        result.disagreements
    );
    match &result.violation {
        Some(v) => human.push_str(&format!(
            "π² ≠ id at base {} column {} in:\n{}",
            v.base, v.column, v.square
        )),
        None => human.push_str("no violation of π² = id found\n"),
    }
    let status = if result.disagreements == 0 {
        EXIT_OK
    } else {
        EXIT_FALSE
    };
    let mut report = AnalysisReport::new("search");
    report.seed = Some(config.seed);
    report.search = Some(result);
    Ok(Outcome { report, human, status })
}

fn dispatch(cli: &Cli) -> Result<Outcome> {
    let mut outcome = match &cli.command {
        Command::Validate(i) => validate(&i.input),
        Command::Properties(i) => properties(&i.input),
        Command::Pi { input, base } => pi(&input.input, *base),
        Command::Profile { input, threads, tsv } => profile(&input.input, *threads, *tsv),
        Command::Modules { input, base } => modules(&input.input, *base),
        Command::Verify {
            input,
            base,
            all,
            center,
            threads,
        } => verify(&input.input, *base, *all, *center, *threads),
        Command::Certify(i) => certify(&i.input),
        Command::Transform {
            input,
            isotopy,
            conjugacy,
        } => transform(&input.input, isotopy.as_deref(), conjugacy.as_deref()),
        Command::Corpus { name } => corpus_command(name.as_deref()),
        Command::Search {
            budget,
            min_order,
            max_order,
        } => search(*budget, *min_order, *max_order, cli.seed),
    }?;
    if outcome.report.seed.is_none() {
        outcome.report.seed = cli.seed;
    }
    Ok(outcome)
}

/// Runs one command line (including the program name) and returns the
/// exit status.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = stderr.write_all(text.as_bytes());
                EXIT_INPUT
            } else {
                let _ = stdout.write_all(text.as_bytes());
                EXIT_OK
            };
        }
    };
    match dispatch(&cli) {
        Ok(outcome) => {
            let written = if cli.json {
                writeln!(stdout, "{}", outcome.report.to_json())
            } else {
                stdout.write_all(outcome.human.as_bytes())
            };
            if let Err(e) = written {
                let _ = writeln!(stderr, "error: {e}");
                return EXIT_INPUT;
            }
            outcome.status
        }
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            EXIT_INPUT
        }
    }
}
