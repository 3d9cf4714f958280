//! `abelcanon` command-line front end.
//!
//! Exit codes: 0 success, 1 a "no" answer (`equiv` on inequivalent
//! elements, `verify` with a failing check), 2 parse or usage error, 3
//! domain error (infinite class count, oracle caps).

use std::io::Write;

use abelcanon::oracle::{self, Limits};
use abelcanon::{
    are_equivalent, canonicalize, count_by_support_size, count_classes, element_order,
    enumerate_representatives, Element, Error, Group,
};
use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::{BigInt, BigUint};
use serde::Serialize;

mod output;

use output::{CanonicalJson, JsonInt};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(
    name = "abelcanon",
    version,
    about = "Automorphism classes of elements in finitely generated abelian groups"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Canonical representative of an element's automorphism class.
    Canon {
        #[arg(long)]
        group: String,
        #[arg(long, allow_hyphen_values = true)]
        element: String,
        /// Include the reduction trace.
        #[arg(long)]
        trace: bool,
    },
    /// Decide whether two elements are automorphic (exit 1 when not).
    Equiv {
        #[arg(long)]
        group: String,
        /// Pass exactly twice.
        #[arg(long = "element", allow_hyphen_values = true, required = true)]
        elements: Vec<String>,
    },
    /// Number of automorphism classes of a finite group.
    Count {
        #[arg(long)]
        group: String,
        /// Break counts down by number of nonzero terms.
        #[arg(long)]
        detail: bool,
    },
    /// List every representative element of a finite group.
    Enumerate {
        #[arg(long)]
        group: String,
    },
    /// Brute-force automorphism orbits.
    Orbits {
        #[arg(long)]
        group: String,
        #[arg(long, env = "ABELCANON_MAX_ORDER", default_value_t = 4096,
              value_parser = clap::value_parser!(u64).range(1..))]
        max_order: u64,
    },
    /// Cross-check canonical forms and counts against the orbit oracle.
    Verify {
        #[arg(long)]
        group: String,
        #[arg(long, env = "ABELCANON_MAX_ORDER", default_value_t = 4096,
              value_parser = clap::value_parser!(u64).range(1..))]
        max_order: u64,
    },
    /// Primary decomposition, repeat-free/remainder split, gap vectors.
    Info {
        #[arg(long)]
        group: String,
    },
}

/// Options resolved from the command line and environment.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CliConfig {
    pub output_format: Format,
    /// Oracle order cap; `max_order ≥ 1`.
    pub max_order: u64,
    /// Emit the reduction trace.
    pub trace: bool,
}

impl CliConfig {
    fn resolve(cli: &Cli) -> Self {
        let (max_order, trace) = match cli.command {
            Command::Orbits { max_order, .. } | Command::Verify { max_order, .. } => {
                (max_order, false)
            }
            Command::Canon { trace, .. } => (Limits::default().max_order, trace),
            _ => (Limits::default().max_order, false),
        };
        CliConfig {
            output_format: cli.format,
            max_order,
            trace,
        }
    }
}

enum Failure {
    Usage(&'static str, String),
    Domain(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_input_error() {
            Failure::Usage(e.kind(), e.to_string())
        } else {
            Failure::Domain(e)
        }
    }
}

struct Outcome {
    body: String,
    code: i32,
}

/// Run one command; writes results to `out`, diagnostics to `err`, and
/// returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{text}");
                0
            } else {
                let _ = write!(err, "{text}");
                2
            };
        }
    };
    let config = CliConfig::resolve(&cli);
    let format = config.output_format;
    match execute(cli.command, &config) {
        Ok(Outcome { body, code }) => {
            let _ = writeln!(out, "{body}");
            code
        }
        Err(failure) => {
            let (kind, message, code) = match failure {
                Failure::Usage(kind, m) => (kind, m, 2),
                Failure::Domain(e) => (e.kind(), e.to_string(), 3),
            };
            let _ = writeln!(err, "error: {message}");
            if format == Format::Json {
                let body = serde_json::json!({ "error": kind, "message": message });
                let _ = writeln!(out, "{}", pretty(&body));
            }
            code
        }
    }
}

fn pretty<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("serializable")
}

fn parse_group(text: &str) -> Result<Group, Failure> {
    Group::parse(text).map_err(|e| Failure::Usage(e.kind(), format!("group: {e}")))
}

fn parse_element(group: &Group, text: &str) -> Result<Element, Failure> {
    group
        .parse_element(text)
        .map_err(|e| Failure::Usage(e.kind(), format!("element: {e}")))
}

fn user(values: Vec<BigInt>) -> Vec<JsonInt> {
    values.into_iter().map(JsonInt).collect()
}

fn tuple(values: &[BigInt]) -> String {
    let parts: Vec<String> = values.iter().map(ToString::to_string).collect();
    format!("({})", parts.join(","))
}

fn execute(command: Command, config: &CliConfig) -> Result<Outcome, Failure> {
    let format = config.output_format;
    let ok = |body: String| Ok(Outcome { body, code: 0 });
    match command {
        Command::Canon { group, element, .. } => {
            let g = parse_group(&group)?;
            let e = parse_element(&g, &element)?;
            let result = canonicalize(&e, g.schema());
            let order = element_order(&e, g.schema());
            let canonical = CanonicalJson::new(&g, &result.canonical);
            match format {
                Format::Json => {
                    #[derive(Serialize)]
                    struct Canon<'a> {
                        group: String,
                        element: Vec<JsonInt>,
                        order: output::OrderJson,
                        canonical: CanonicalJson,
                        #[serde(skip_serializing_if = "Option::is_none")]
                        trace: Option<&'a abelcanon::ReductionTrace>,
                    }
                    ok(pretty(&Canon {
                        group: g.spec().to_string(),
                        element: user(g.user_coordinates(&e)),
                        order: output::OrderJson(order),
                        canonical,
                        trace: config.trace.then_some(&result.trace),
                    }))
                }
                Format::Text => {
                    let mut lines = vec![
                        format!("group:      {}", g.spec()),
                        format!("element:    {}", tuple(&g.user_coordinates(&e))),
                        format!("order:      {order}"),
                        format!(
                            "canonical:  {}",
                            tuple(&g.user_coordinates(&result.canonical.to_element(g.schema())))
                        ),
                        format!("primary:    {}", result.canonical),
                        format!("conforming: {}", result.canonical.conforming),
                    ];
                    if config.trace {
                        lines.push("trace:".into());
                        for step in &result.trace.steps {
                            lines.push(format!(
                                "  {}",
                                serde_json::to_string(step).expect("serializable")
                            ));
                        }
                    }
                    ok(lines.join("\n"))
                }
            }
        }
        Command::Equiv { group, elements } => {
            let g = parse_group(&group)?;
            if elements.len() != 2 {
                return Err(Failure::Usage(
                    "Usage",
                    format!(
                        "equiv takes exactly two --element values, got {}",
                        elements.len()
                    ),
                ));
            }
            let e1 = parse_element(&g, &elements[0])?;
            let e2 = parse_element(&g, &elements[1])?;
            let answer = are_equivalent(&e1, &e2, g.schema());
            let c1 = canonicalize(&e1, g.schema()).canonical;
            let c2 = canonicalize(&e2, g.schema()).canonical;
            let code = if answer.equivalent { 0 } else { 1 };
            let body = match format {
                Format::Json => {
                    #[derive(Serialize)]
                    struct Equiv {
                        group: String,
                        elements: [Vec<JsonInt>; 2],
                        canonical: [CanonicalJson; 2],
                        equivalent: bool,
                        caveat: bool,
                    }
                    pretty(&Equiv {
                        group: g.spec().to_string(),
                        elements: [user(g.user_coordinates(&e1)), user(g.user_coordinates(&e2))],
                        canonical: [CanonicalJson::new(&g, &c1), CanonicalJson::new(&g, &c2)],
                        equivalent: answer.equivalent,
                        caveat: answer.caveat,
                    })
                }
                Format::Text => {
                    let mut s = format!(
                        "{} ~ {}\n{} ~ {}\nequivalent: {}",
                        tuple(&g.user_coordinates(&e1)),
                        tuple(&g.user_coordinates(&c1.to_element(g.schema()))),
                        tuple(&g.user_coordinates(&e2)),
                        tuple(&g.user_coordinates(&c2.to_element(g.schema()))),
                        answer.equivalent
                    );
                    if answer.caveat {
                        s.push_str("\ncaveat: agreement rests on a non-conforming canonical form");
                    }
                    s
                }
            };
            Ok(Outcome { body, code })
        }
        Command::Count { group, detail } => {
            let g = parse_group(&group)?;
            let counts = count_classes(g.schema())?;
            match format {
                Format::Json => {
                    #[derive(Serialize)]
                    struct PerPrime {
                        p: u64,
                        r1: u32,
                        gaps: Vec<u32>,
                        #[serde(serialize_with = "abelcanon::json::uint")]
                        count: BigUint,
                        #[serde(
                            skip_serializing_if = "Option::is_none",
                            serialize_with = "output::opt_uints"
                        )]
                        by_nonzero_terms: Option<Vec<BigUint>>,
                    }
                    #[derive(Serialize)]
                    struct Count {
                        group: String,
                        per_prime: Vec<PerPrime>,
                        #[serde(serialize_with = "abelcanon::json::uint")]
                        total: BigUint,
                    }
                    ok(pretty(&Count {
                        group: g.spec().to_string(),
                        per_prime: counts
                            .per_prime
                            .iter()
                            .map(|pc| PerPrime {
                                p: pc.p,
                                r1: pc.gaps.r1,
                                gaps: pc.gaps.gaps.clone(),
                                count: pc.count.clone(),
                                by_nonzero_terms: detail.then(|| count_by_support_size(&pc.gaps)),
                            })
                            .collect(),
                        total: counts.total,
                    }))
                }
                Format::Text => {
                    let mut lines = vec![format!("group: {}", g.spec())];
                    for pc in &counts.per_prime {
                        lines.push(format!(
                            "p={}  r1={}  gaps={:?}  classes={}",
                            pc.p, pc.gaps.r1, pc.gaps.gaps, pc.count
                        ));
                        if detail {
                            lines.push(format!("  {:<16} | {}", "non-zero terms", "classes"));
                            lines.push(format!("  {:-<16}-+-{:-<8}", "", ""));
                            for (m, n) in count_by_support_size(&pc.gaps).iter().enumerate() {
                                lines.push(format!("  {m:<16} | {n}"));
                            }
                        }
                    }
                    lines.push(format!("total: {}", counts.total));
                    ok(lines.join("\n"))
                }
            }
        }
        Command::Enumerate { group } => {
            let g = parse_group(&group)?;
            let reps = enumerate_representatives(g.schema())?;
            match format {
                Format::Json => {
                    let all: Vec<CanonicalJson> =
                        reps.iter().map(|c| CanonicalJson::new(&g, c)).collect();
                    ok(pretty(&all))
                }
                Format::Text => ok(reps
                    .iter()
                    .map(|c| tuple(&g.user_coordinates(&c.to_element(g.schema()))))
                    .collect::<Vec<_>>()
                    .join("\n")),
            }
        }
        Command::Orbits { group, .. } => {
            let g = parse_group(&group)?;
            let partition =
                oracle::all_orbits(g.schema(), &Limits::with_max_order(config.max_order))?;
            let orbits = partition.orbits();
            match format {
                Format::Json => {
                    #[derive(Serialize)]
                    struct Orbit {
                        representative: Vec<JsonInt>,
                        #[serde(serialize_with = "abelcanon::json::uint")]
                        size: BigUint,
                    }
                    #[derive(Serialize)]
                    struct Orbits {
                        group: String,
                        #[serde(serialize_with = "abelcanon::json::uint")]
                        orbit_count: BigUint,
                        orbits: Vec<Orbit>,
                    }
                    ok(pretty(&Orbits {
                        group: g.spec().to_string(),
                        orbit_count: partition.orbit_count(),
                        orbits: orbits
                            .into_iter()
                            .map(|(e, size)| Orbit {
                                representative: user(g.user_coordinates(&e)),
                                size,
                            })
                            .collect(),
                    }))
                }
                Format::Text => {
                    let mut lines = vec![format!("orbits: {}", partition.orbit_count())];
                    for (e, size) in orbits {
                        lines.push(format!("{}  size {size}", tuple(&g.user_coordinates(&e))));
                    }
                    ok(lines.join("\n"))
                }
            }
        }
        Command::Verify { group, .. } => {
            let g = parse_group(&group)?;
            let report =
                oracle::verify_schema(g.schema(), &Limits::with_max_order(config.max_order))?;
            let code = if report.passed() { 0 } else { 1 };
            let body = match format {
                Format::Json => pretty(&report),
                Format::Text => {
                    let mut lines = vec![format!("group: {}", g.spec())];
                    for check in &report.checks {
                        let status = if check.pass { "pass" } else { "FAIL" };
                        let mut line = format!("  {status}  {}", check.name);
                        if let Some(w) = &check.witness {
                            line.push_str(&format!("  witness {w:?}"));
                        }
                        lines.push(line);
                    }
                    lines.push(format!(
                        "orbits: {}  classes: {}",
                        report.orbit_count, report.class_count
                    ));
                    lines.join("\n")
                }
            };
            Ok(Outcome { body, code })
        }
        Command::Info { group } => {
            let g = parse_group(&group)?;
            let info = output::InfoJson::new(&g);
            match format {
                Format::Json => ok(pretty(&info)),
                Format::Text => ok(info.render_text()),
            }
        }
    }
}
