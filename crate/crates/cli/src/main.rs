//! `wih`: weak Bruhat interval modules of 0-Hecke algebras on the command
//! line.
//!
//! Groups are named `A<n>` (symmetric group on n+1 letters), `B<n>`,
//! `I2:<m>`, or `matrix:<path>` pointing at a Cartan-matrix file (one row of
//! integers per line). Elements are written in the canonical text form of
//! the group: one-line permutations for type A, space-separated signed
//! integers for type B, reduced words like `s1 s2` otherwise.
//!
//! Exit codes: 0 success, 1 usage or parse error, 2 verification
//! disagreement.

use std::fmt::Write as _;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use wih_core::hecke::{matrix_to_json, rational_string};
use wih_core::{
    action_matrix, canonical_map, colored_digraph, crosscheck_classification, d_classes,
    intertwiner_space, is_descent_preserving_iso, module_iso_oracle, verify_min_max_intervals,
    CoxeterSpec, GroupEngine, OracleConfig, SamplePolicy, WeakInterval,
};

const DEFAULT_CAP: u64 = 1_000_000;
const DEFAULT_SEED: u64 = 42;

#[derive(Parser)]
#[command(name = "wih", version, about = "Weak Bruhat interval modules of 0-Hecke algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Args)]
struct Common {
    /// Group name: `A<n>`, `B<n>`, `I2:<m>`, or `matrix:<path>`.
    #[arg(long)]
    group: String,
    /// Output format.
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Group-order cap for enumeration commands (overrides WIH_CAP).
    #[arg(long)]
    cap: Option<u64>,
    /// Write the report here instead of stdout.
    #[arg(long)]
    out: Option<std::path::PathBuf>,
}

#[derive(Args)]
struct IntervalEndpoints {
    /// Lower endpoint.
    #[arg(long, allow_hyphen_values = true)]
    from: String,
    /// Upper endpoint.
    #[arg(long, allow_hyphen_values = true)]
    to: String,
}

#[derive(Args)]
struct SecondInterval {
    /// Lower endpoint of the second interval.
    #[arg(long, allow_hyphen_values = true)]
    from2: String,
    /// Upper endpoint of the second interval.
    #[arg(long, allow_hyphen_values = true)]
    to2: String,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum IsoMode {
    Criterion,
    Oracle,
    Both,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate a left weak Bruhat interval.
    Interval {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        endpoints: IntervalEndpoints,
    },
    /// Export the colored digraph of an interval.
    Digraph {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        endpoints: IntervalEndpoints,
    },
    /// Decide whether two interval modules are isomorphic.
    TestIso {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        first: IntervalEndpoints,
        #[command(flatten)]
        second: SecondInterval,
        /// Which route to run.
        #[arg(long, value_enum, default_value = "both")]
        mode: IsoMode,
        /// Oracle seed.
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
    /// Partition all intervals into descent-preserving classes.
    Classify {
        #[command(flatten)]
        common: Common,
    },
    /// Cross-check the oracle against the criterion over interval pairs.
    Verify {
        #[command(flatten)]
        common: Common,
        /// Sampled pairs; exhaustive when omitted.
        #[arg(long)]
        sample: Option<u64>,
        /// Seed for sampling and the oracle.
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
    /// Print the generator action matrices on an interval module.
    Action {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        endpoints: IntervalEndpoints,
    },
    /// Solve for the space of module homomorphisms between two intervals.
    Intertwiners {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        first: IntervalEndpoints,
        #[command(flatten)]
        second: SecondInterval,
        /// Oracle seed (recorded in the report).
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
}

enum Failure {
    /// Bad usage or unparseable input: exit 1.
    Usage(String),
    /// A verification found a disagreement: exit 2.
    Disagreement(String),
}

impl From<wih_core::Error> for Failure {
    fn from(err: wih_core::Error) -> Self {
        match err {
            wih_core::Error::VerificationFailure(msg) => Failure::Disagreement(msg),
            other => Failure::Usage(other.to_string()),
        }
    }
}

fn parse_group(name: &str) -> Result<GroupEngine, Failure> {
    let spec = if let Some(n) = name.strip_prefix('A') {
        let n: usize = n
            .parse()
            .map_err(|_| Failure::Usage(format!("bad group name {name:?}")))?;
        CoxeterSpec::SymmetricA(n + 1)
    } else if let Some(n) = name.strip_prefix('B') {
        let n: usize = n
            .parse()
            .map_err(|_| Failure::Usage(format!("bad group name {name:?}")))?;
        CoxeterSpec::HyperoctahedralB(n)
    } else if let Some(m) = name.strip_prefix("I2:") {
        let m: u32 = m
            .parse()
            .map_err(|_| Failure::Usage(format!("bad group name {name:?}")))?;
        CoxeterSpec::DihedralI2(m)
    } else if let Some(path) = name.strip_prefix("matrix:") {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Failure::Usage(format!("cannot read {path:?}: {e}")))?;
        let mut rows = Vec::new();
        for line in text.lines() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let row: Result<Vec<i64>, _> =
                line.split_whitespace().map(|t| t.parse::<i64>()).collect();
            rows.push(row.map_err(|_| {
                Failure::Usage(format!("bad Cartan matrix line {line:?}"))
            })?);
        }
        CoxeterSpec::CrystallographicMatrix(rows)
    } else {
        return Err(Failure::Usage(format!(
            "unknown group {name:?}: expected A<n>, B<n>, I2:<m>, or matrix:<path>"
        )));
    };
    Ok(GroupEngine::build(spec)?)
}

fn effective_cap(flag: Option<u64>) -> u64 {
    flag.or_else(|| {
        std::env::var("WIH_CAP")
            .ok()
            .and_then(|v| v.parse().ok())
    })
    .unwrap_or(DEFAULT_CAP)
}

fn parse_interval(
    engine: &GroupEngine,
    from: &str,
    to: &str,
) -> Result<WeakInterval, Failure> {
    let u = engine.parse_element(from)?;
    let v = engine.parse_element(to)?;
    Ok(WeakInterval::new(engine, &u, &v)?)
}

fn reject_dot(common: &Common, command: &str) -> Result<(), Failure> {
    if common.format == Format::Dot {
        return Err(Failure::Usage(format!(
            "the dot format is only available for interval and digraph, not {command}"
        )));
    }
    Ok(())
}

/// Report envelope: everything except `timing_ms` is a pure function of
/// (config, seed).
struct Report {
    command: &'static str,
    config: Value,
    seed: u64,
    result: Value,
    text: String,
    started: Instant,
}

impl Report {
    fn render(self, format: Format) -> String {
        match format {
            Format::Text => self.text,
            Format::Json | Format::Dot => json!({
                "schema": 1,
                "version": env!("CARGO_PKG_VERSION"),
                "command": self.command,
                "config": self.config,
                "seed": self.seed,
                "result": self.result,
                "timing_ms": self.started.elapsed().as_millis() as u64,
            })
            .to_string(),
        }
    }
}

fn endpoints_json(engine: &GroupEngine, i: &WeakInterval) -> Value {
    json!({
        "from": engine.render_element(i.lower()),
        "to": engine.render_element(i.upper()),
    })
}

fn run(cli: Cli) -> Result<(String, Common), Failure> {
    match cli.command {
        Command::Interval { common, endpoints } => {
            let started = Instant::now();
            let engine = parse_group(&common.group)?;
            let interval = parse_interval(&engine, &endpoints.from, &endpoints.to)?;
            if common.format == Format::Dot {
                let dot = colored_digraph(&engine, &interval).to_dot(&engine);
                return Ok((dot, common));
            }
            let elements: Vec<String> = interval
                .elements()
                .iter()
                .map(|w| engine.render_element(w))
                .collect();
            let mut text = format!(
                "[{}, {}]_L in {}: {} elements\n",
                endpoints.from,
                endpoints.to,
                common.group,
                interval.len()
            );
            for (w, e) in interval.elements().iter().zip(&elements) {
                let _ = writeln!(text, "  {} (length {})", e, engine.length(w));
            }
            let report = Report {
                command: "interval",
                config: json!({
                    "group": common.group,
                    "from": endpoints.from,
                    "to": endpoints.to,
                }),
                seed: DEFAULT_SEED,
                result: json!({
                    "from": endpoints.from,
                    "to": endpoints.to,
                    "size": interval.len(),
                    "elements": elements,
                }),
                text,
                started,
            };
            Ok((report.render(common.format), common))
        }

        Command::Digraph { common, endpoints } => {
            let started = Instant::now();
            let engine = parse_group(&common.group)?;
            let interval = parse_interval(&engine, &endpoints.from, &endpoints.to)?;
            let digraph = colored_digraph(&engine, &interval);
            if common.format != Format::Json {
                // DOT is the natural text form of a digraph.
                return Ok((digraph.to_dot(&engine), common));
            }
            let report = Report {
                command: "digraph",
                config: json!({
                    "group": common.group,
                    "from": endpoints.from,
                    "to": endpoints.to,
                }),
                seed: DEFAULT_SEED,
                result: digraph.to_json(&engine),
                text: String::new(),
                started,
            };
            Ok((report.render(Format::Json), common))
        }

        Command::TestIso {
            common,
            first,
            second,
            mode,
            seed,
        } => {
            reject_dot(&common, "test-iso")?;
            let started = Instant::now();
            let engine = parse_group(&common.group)?;
            let a = parse_interval(&engine, &first.from, &first.to)?;
            let b = parse_interval(&engine, &second.from2, &second.to2)?;
            let oracle_cfg = OracleConfig::with_seed(seed);

            let criterion = match mode {
                IsoMode::Oracle => None,
                _ => Some(is_descent_preserving_iso(&engine, &a, &b)?),
            };
            let oracle = match mode {
                IsoMode::Criterion => None,
                _ => Some(module_iso_oracle(&engine, &a, &b, &oracle_cfg)?),
            };

            let isomorphic = criterion
                .unwrap_or_else(|| oracle.as_ref().map(|o| o.isomorphic).unwrap());
            let map_json = if criterion == Some(true) {
                let pairs: Vec<[String; 2]> = a
                    .elements()
                    .iter()
                    .map(|x| {
                        let y = canonical_map(&engine, &a, &b, x)
                            .expect("isomorphic intervals have a canonical map");
                        [engine.render_element(x), engine.render_element(&y)]
                    })
                    .collect();
                Some(pairs)
            } else {
                None
            };

            let mut text = format!(
                "B({}, {}) vs B({}, {}) in {}\n",
                first.from, first.to, second.from2, second.to2, common.group
            );
            if let Some(c) = criterion {
                let _ = writeln!(text, "  criterion: {}", if c { "isomorphic" } else { "not isomorphic" });
            }
            if let Some(o) = &oracle {
                let _ = writeln!(
                    text,
                    "  oracle:    {} (dimension {}, seed {}, {} repetitions)",
                    if o.isomorphic { "isomorphic" } else { "not isomorphic" },
                    o.dimension,
                    o.seed,
                    o.repetitions
                );
                if let Some(bound) = o.failure_bound {
                    let _ = writeln!(text, "  failure bound: {bound:e}");
                }
            }
            if let Some(pairs) = &map_json {
                let _ = writeln!(text, "  canonical map:");
                for [x, y] in pairs {
                    let _ = writeln!(text, "    {x} -> {y}");
                }
            }

            if let (Some(c), Some(o)) = (criterion, &oracle) {
                if c != o.isomorphic {
                    return Err(Failure::Disagreement(format!(
                        "oracle disagreement on B({},{}) vs B({},{}): criterion={c} oracle={}",
                        first.from, first.to, second.from2, second.to2, o.isomorphic
                    )));
                }
            }

            let report = Report {
                command: "test-iso",
                config: json!({
                    "group": common.group,
                    "first": {"from": first.from, "to": first.to},
                    "second": {"from": second.from2, "to": second.to2},
                    "mode": match mode {
                        IsoMode::Criterion => "criterion",
                        IsoMode::Oracle => "oracle",
                        IsoMode::Both => "both",
                    },
                }),
                seed,
                result: json!({
                    "isomorphic": isomorphic,
                    "criterion": criterion,
                    "oracle": oracle,
                    "canonical_map": map_json,
                }),
                text,
                started,
            };
            Ok((report.render(common.format), common))
        }

        Command::Classify { common } => {
            reject_dot(&common, "classify")?;
            let started = Instant::now();
            let engine = parse_group(&common.group)?;
            let cap = effective_cap(common.cap);
            let classes = d_classes(&engine, cap as u128)?;
            let mut rows = Vec::new();
            for class in &classes {
                let mm = verify_min_max_intervals(&engine, class)?;
                rows.push(json!({
                    "xi": engine.render_element(class.xi()),
                    "size": class.len(),
                    "min_bar": {
                        "lower": engine.render_element(&mm.min_lower),
                        "upper": engine.render_element(&mm.min_upper),
                    },
                    "max_bar": {
                        "lower": engine.render_element(&mm.max_lower),
                        "upper": engine.render_element(&mm.max_upper),
                    },
                    "representative": endpoints_json(&engine, class.representative()),
                    "verified": true,
                }));
            }
            let interval_count: usize = classes.iter().map(|c| c.len()).sum();
            let mut text = format!(
                "{}: {} intervals in {} classes (order {}, cap {})\n",
                common.group,
                interval_count,
                classes.len(),
                engine.order(),
                cap
            );
            let _ = writeln!(
                text,
                "{:<14} {:>5}  {:<23} {:<23} representative",
                "xi", "size", "min-bar [lo,hi]_R", "max-bar [lo,hi]_R"
            );
            for (class, row) in classes.iter().zip(&rows) {
                let rep = class.representative();
                let _ = writeln!(
                    text,
                    "{:<14} {:>5}  {:<23} {:<23} [{}, {}]_L",
                    engine.render_element(class.xi()),
                    class.len(),
                    format!(
                        "[{}, {}]",
                        row["min_bar"]["lower"].as_str().unwrap(),
                        row["min_bar"]["upper"].as_str().unwrap()
                    ),
                    format!(
                        "[{}, {}]",
                        row["max_bar"]["lower"].as_str().unwrap(),
                        row["max_bar"]["upper"].as_str().unwrap()
                    ),
                    engine.render_element(rep.lower()),
                    engine.render_element(rep.upper()),
                );
            }
            let report = Report {
                command: "classify",
                config: json!({"group": common.group, "cap": cap}),
                seed: DEFAULT_SEED,
                result: json!({
                    "group": common.group,
                    "interval_count": interval_count,
                    "class_count": classes.len(),
                    "classes": rows,
                }),
                text,
                started,
            };
            Ok((report.render(common.format), common))
        }

        Command::Verify {
            common,
            sample,
            seed,
        } => {
            reject_dot(&common, "verify")?;
            let started = Instant::now();
            let engine = parse_group(&common.group)?;
            let cap = effective_cap(common.cap);
            let policy = match sample {
                None => SamplePolicy::Exhaustive,
                Some(pairs) => SamplePolicy::Random { pairs, seed },
            };
            let oracle_cfg = OracleConfig::with_seed(seed);
            let report_data =
                crosscheck_classification(&engine, policy, cap as u128, &oracle_cfg)?;
            let mut text = format!(
                "{}: {} intervals, {} classes; {} pairs tested ({}), {} disagreements\n",
                common.group,
                report_data.interval_count,
                report_data.class_count,
                report_data.pairs_tested,
                report_data.policy,
                report_data.disagreements.len()
            );
            for d in &report_data.disagreements {
                let _ = writeln!(
                    text,
                    "  DISAGREE [{},{}] vs [{},{}]: criterion={} digraph={} oracle={}",
                    d.first.0,
                    d.first.1,
                    d.second.0,
                    d.second.1,
                    d.criterion,
                    d.digraph_and_profile,
                    d.oracle
                );
            }
            let disagreements = report_data.disagreements.len();
            let report = Report {
                command: "verify",
                config: json!({
                    "group": common.group,
                    "cap": cap,
                    "sample": sample,
                }),
                seed,
                result: serde_json::to_value(&report_data)
                    .expect("report serialization cannot fail"),
                text,
                started,
            };
            let rendered = report.render(common.format);
            if disagreements > 0 {
                // Still print the report before failing.
                emit(&rendered, &common)?;
                return Err(Failure::Disagreement(format!(
                    "{disagreements} oracle/criterion disagreements"
                )));
            }
            Ok((rendered, common))
        }

        Command::Action { common, endpoints } => {
            reject_dot(&common, "action")?;
            let started = Instant::now();
            let engine = parse_group(&common.group)?;
            let interval = parse_interval(&engine, &endpoints.from, &endpoints.to)?;
            let mut matrices = Vec::new();
            let mut text = format!(
                "action matrices on B({}, {}) in {} ({} basis elements)\n",
                endpoints.from,
                endpoints.to,
                common.group,
                interval.len()
            );
            for s in 0..engine.rank() {
                let m = action_matrix(&engine, &interval, s);
                let dense = m.to_dense::<wih_core::Rat>();
                matrices.push(json!({
                    "generator": format!("s{}", s + 1),
                    "entries": matrix_to_json(&dense),
                }));
                let _ = writeln!(text, "  pi_{}:", s + 1);
                for (j, x) in interval.elements().iter().enumerate() {
                    let action = match m.column(j) {
                        Some(i) if i == j => "fixed".to_string(),
                        Some(i) => {
                            format!("-> {}", engine.render_element(&interval.elements()[i]))
                        }
                        None => "-> 0".to_string(),
                    };
                    let _ = writeln!(text, "    {} {}", engine.render_element(x), action);
                }
            }
            let report = Report {
                command: "action",
                config: json!({
                    "group": common.group,
                    "from": endpoints.from,
                    "to": endpoints.to,
                }),
                seed: DEFAULT_SEED,
                result: json!({
                    "from": endpoints.from,
                    "to": endpoints.to,
                    "size": interval.len(),
                    "matrices": matrices,
                }),
                text,
                started,
            };
            Ok((report.render(common.format), common))
        }

        Command::Intertwiners {
            common,
            first,
            second,
            seed,
        } => {
            reject_dot(&common, "intertwiners")?;
            let started = Instant::now();
            let engine = parse_group(&common.group)?;
            let a = parse_interval(&engine, &first.from, &first.to)?;
            let b = parse_interval(&engine, &second.from2, &second.to2)?;
            let space = intertwiner_space(&engine, &a, &b)?;
            let basis: Vec<Value> = space.basis().iter().map(matrix_to_json).collect();
            let mut text = format!(
                "Hom(B({}, {}), B({}, {})) in {}: dimension {}\n",
                first.from,
                first.to,
                second.from2,
                second.to2,
                common.group,
                space.dimension()
            );
            for (k, f) in space.basis().iter().enumerate() {
                let _ = writeln!(text, "  basis matrix {}:", k + 1);
                for i in 0..f.rows() {
                    let row: Vec<String> =
                        (0..f.cols()).map(|j| rational_string(&f[(i, j)])).collect();
                    let _ = writeln!(text, "    [{}]", row.join(" "));
                }
            }
            let report = Report {
                command: "intertwiners",
                config: json!({
                    "group": common.group,
                    "first": {"from": first.from, "to": first.to},
                    "second": {"from": second.from2, "to": second.to2},
                }),
                seed,
                result: json!({
                    "source": endpoints_json(&engine, &a),
                    "target": endpoints_json(&engine, &b),
                    "dimension": space.dimension(),
                    "basis": basis,
                }),
                text,
                started,
            };
            Ok((report.render(common.format), common))
        }
    }
}

fn emit(rendered: &str, common: &Common) -> Result<(), Failure> {
    match &common.out {
        Some(path) => std::fs::write(path, rendered)
            .map_err(|e| Failure::Usage(format!("cannot write {path:?}: {e}"))),
        None => {
            println!("{}", rendered.trim_end());
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            // Help and version requests are successes; everything else is a
            // usage error with exit code 1.
            use clap::error::ErrorKind;
            let _ = err.print();
            return match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(1),
            };
        }
    };
    match run(cli) {
        Ok((rendered, common)) => match emit(&rendered, &common) {
            Ok(()) => ExitCode::SUCCESS,
            Err(Failure::Usage(msg)) | Err(Failure::Disagreement(msg)) => {
                eprintln!("error: {msg}");
                ExitCode::from(1)
            }
        },
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Disagreement(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
