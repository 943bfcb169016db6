//! Command-line frontend for the glon library: enumeration, lookup,
//! verification, and the exact matrix oracle, with text, JSON, and CSV
//! output.

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use glon::{
    centralizer_dims, correspondence_table, count_row, cuspidal_support, dim_x_uni, d_o,
    enumerate_cuspidal, enumerate_orbits, enumerate_pairs, enumerate_series, form_matrix, gamma,
    is_cuspidal, is_self_adjoint, jordan_type, nilpotent_representative, normal_basis,
    procedures, random_h_element, split_exchange_matrix, unit_rep_orbit, verify_appendix,
    CuspidalDatum, GroupContext, LeviShape, OrbitLabel, PairLabel, Partition, ProcedureKind,
    epsilon_multiplicity, y_dimension,
};

#[derive(Parser)]
#[command(
    name = "glon",
    about = "Nilpotent orbit combinatorics on the symmetric space GL_N/O_N",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// List the nilpotent orbits for ambient size N with their dimensions.
    Orbits {
        #[arg(long)]
        n: usize,
    },
    /// List the orbit/sign-vector pairs for ambient size N.
    Pairs {
        #[arg(long)]
        n: usize,
    },
    /// List the cuspidal pairs for ambient size N.
    Cuspidal {
        #[arg(long)]
        n: usize,
    },
    /// List the cuspidal-support series for ambient size N.
    Series {
        #[arg(long)]
        n: usize,
    },
    /// Print the full correspondence table for ambient size N.
    Table {
        #[arg(long)]
        n: usize,
    },
    /// Compute the cuspidal support and fiber partition of one pair.
    Support {
        /// Pair label, e.g. "[4,2,1];--+".
        #[arg(long)]
        label: String,
    },
    /// Apply the series map to a fiber partition, producing a pair.
    Correspond {
        /// Series in text form, e.g. "N0=2 nu=[2]+ sigma=-".
        #[arg(long)]
        series: String,
        /// Fiber partition label, e.g. "[1,1]".
        #[arg(long)]
        mu: String,
    },
    /// Restriction data between two pairs whose sizes differ by two.
    Restrict {
        /// Source pair label.
        #[arg(long)]
        label: String,
        /// Target pair label two boxes smaller.
        #[arg(long)]
        to: String,
    },
    /// Per-series dimension bookkeeping for ambient size N.
    Dims {
        #[arg(long)]
        n: usize,
    },
    /// Pair counts against the closed-form cuspidal counts.
    Count {
        #[arg(long, default_value_t = 12)]
        max_n: usize,
    },
    /// Compare the computed tables with the six golden tables.
    VerifyAppendix,
    /// Run the exact matrix oracle over all orbits up to a bound.
    OracleCheck {
        #[arg(long, default_value_t = 6)]
        max_n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 10)]
        trials: u64,
    },
}

/// Everything a command produces, rendered once per format.
struct Output {
    inputs: Value,
    results: Value,
    text: Vec<String>,
    csv: Vec<Vec<String>>,
    /// Set when a verification command found a mismatch.
    failed: bool,
}

impl Output {
    fn new(inputs: Value, results: Value, text: Vec<String>, csv: Vec<Vec<String>>) -> Self {
        Output { inputs, results, text, csv, failed: false }
    }
}

fn parse_pair(label: &str) -> Result<PairLabel, String> {
    label.parse().map_err(|e| format!("invalid pair label {label:?}: {e}"))
}

fn orbit_json(orbit: &OrbitLabel) -> Value {
    json!({
        "label": orbit.to_string(),
        "lambda": orbit.lambda().parts(),
        "split": orbit.split().map(|s| s.as_char().to_string()),
        "dimension": orbit.dimension(),
    })
}

fn run_orbits(n: usize) -> Output {
    let orbits = enumerate_orbits(n);
    Output::new(
        json!({ "n": n }),
        Value::Array(orbits.iter().map(orbit_json).collect()),
        orbits.iter().map(|o| format!("{o}\t{}", o.dimension())).collect(),
        orbits
            .iter()
            .map(|o| vec![o.to_string(), o.dimension().to_string()])
            .collect(),
    )
}

fn run_pairs(n: usize) -> Output {
    let pairs = enumerate_pairs(n);
    Output::new(
        json!({ "n": n }),
        Value::Array(
            pairs
                .iter()
                .map(|p| {
                    json!({
                        "label": p.to_string(),
                        "pair": serde_json::to_value(p).expect("pair serializes"),
                        "cuspidal": is_cuspidal(p),
                    })
                })
                .collect(),
        ),
        pairs
            .iter()
            .map(|p| format!("{p}\t{}", if is_cuspidal(p) { "cuspidal" } else { "induced" }))
            .collect(),
        pairs
            .iter()
            .map(|p| vec![p.to_string(), is_cuspidal(p).to_string()])
            .collect(),
    )
}

fn run_cuspidal(n: usize) -> Output {
    let pairs = enumerate_cuspidal(n);
    Output::new(
        json!({ "n": n }),
        Value::Array(
            pairs
                .iter()
                .map(|p| {
                    json!({
                        "label": p.to_string(),
                        "pair": serde_json::to_value(p).expect("pair serializes"),
                    })
                })
                .collect(),
        ),
        pairs.iter().map(ToString::to_string).collect(),
        pairs.iter().map(|p| vec![p.to_string()]).collect(),
    )
}

fn run_series(n: usize) -> Output {
    let series = enumerate_series(n);
    Output::new(
        json!({ "n": n }),
        Value::Array(
            series
                .iter()
                .map(|c| serde_json::to_value(c).expect("series serializes"))
                .collect(),
        ),
        series.iter().map(ToString::to_string).collect(),
        series
            .iter()
            .map(|c| {
                let nu = OrbitLabel::new(c.nu().clone(), c.split());
                vec![c.n0().to_string(), nu.to_string(), c.sigma().to_string()]
            })
            .collect(),
    )
}

fn run_table(n: usize) -> Output {
    let rows = correspondence_table(n);
    Output::new(
        json!({ "n": n }),
        Value::Array(
            rows.iter()
                .map(|r| serde_json::to_value(r).expect("row serializes"))
                .collect(),
        ),
        rows.iter().map(|r| r.tsv_line()).collect(),
        rows.iter()
            .map(|r| {
                vec![r.pair.to_string(), r.series.to_string(), r.mu.to_string()]
            })
            .collect(),
    )
}

fn run_support(label: &str) -> Result<Output, String> {
    let pair = parse_pair(label)?;
    let (series, mu) = cuspidal_support(&pair);
    Ok(Output::new(
        json!({ "label": label }),
        json!({
            "series": serde_json::to_value(&series).expect("series serializes"),
            "mu": mu.parts(),
        }),
        vec![format!("{series}\t{mu}")],
        vec![vec![series.to_string(), mu.to_string()]],
    ))
}

fn run_correspond(series: &str, mu: &str) -> Result<Output, String> {
    let datum: CuspidalDatum = series
        .parse()
        .map_err(|e| format!("invalid series {series:?}: {e}"))?;
    let fiber: Partition = mu
        .parse()
        .map_err(|e| format!("invalid partition label {mu:?}: {e}"))?;
    let pair = gamma(&datum, &fiber).map_err(|e| e.to_string())?;
    Ok(Output::new(
        json!({ "series": series, "mu": mu }),
        json!({
            "label": pair.to_string(),
            "pair": serde_json::to_value(&pair).expect("pair serializes"),
        }),
        vec![pair.to_string()],
        vec![vec![pair.to_string()]],
    ))
}

fn procedure_kind_name(kind: ProcedureKind) -> &'static str {
    match kind {
        ProcedureKind::APrime => "A'",
        ProcedureKind::ADoublePrime => "A''",
        ProcedureKind::B => "B",
    }
}

fn run_restrict(label: &str, to: &str) -> Result<Output, String> {
    let source = parse_pair(label)?;
    let target = parse_pair(to)?;
    if source.lambda().size() != target.lambda().size() + 2 {
        return Err(format!(
            "restriction drops the ambient size by two: |{}| = {} cannot restrict to |{}| = {}",
            source,
            source.lambda().size(),
            target,
            target.lambda().size()
        ));
    }
    let epsilon = epsilon_multiplicity(&source, &target);
    let procs = procedures(source.lambda(), target.lambda());
    let mut text = vec![format!("epsilon={epsilon}")];
    let mut csv = Vec::new();
    let mut proc_json = Vec::new();
    for p in &procs {
        let y = y_dimension(source.lambda(), target.lambda(), *p);
        let kind = procedure_kind_name(p.kind);
        text.push(format!(
            "{kind}@{}\tdim_y={}\ts={}\tfull={}",
            p.block, y.dim_y, y.s, y.full
        ));
        csv.push(vec![
            kind.to_string(),
            p.block.to_string(),
            y.dim_y.to_string(),
            y.s.to_string(),
            y.full.to_string(),
        ]);
        proc_json.push(json!({
            "kind": kind,
            "block": p.block,
            "dim_y": y.dim_y,
            "s": y.s.to_string(),
            "full": y.full,
        }));
    }
    Ok(Output::new(
        json!({ "label": label, "to": to }),
        json!({ "epsilon": epsilon, "procedures": proc_json }),
        text,
        csv,
    ))
}

fn run_dims(n: usize) -> Output {
    let mut text = Vec::new();
    let mut csv = Vec::new();
    let mut results = Vec::new();
    for c in enumerate_series(n) {
        let shape = LeviShape::new(n, c.n0());
        let dim_nu = OrbitLabel::new(c.nu().clone(), c.split()).dimension();
        let open = unit_rep_orbit(&c, n);
        let dim_open = open.orbit().dimension();
        let x_uni = dim_x_uni(shape, dim_nu);
        let defect = d_o(shape, dim_open, dim_nu);
        text.push(format!(
            "{c}\ta={}\tdim_nu={dim_nu}\topen={open}\tdim_open={dim_open}\tdim_x_uni={x_uni}\td_open={defect}",
            shape.a()
        ));
        csv.push(vec![
            c.to_string(),
            shape.a().to_string(),
            dim_nu.to_string(),
            open.to_string(),
            dim_open.to_string(),
            x_uni.to_string(),
            defect.to_string(),
        ]);
        results.push(json!({
            "series": serde_json::to_value(&c).expect("series serializes"),
            "a": shape.a(),
            "dim_nu": dim_nu,
            "open": open.to_string(),
            "dim_open": dim_open,
            "dim_x_uni": x_uni,
            "d_open": defect.to_string(),
        }));
    }
    Output::new(json!({ "n": n }), Value::Array(results), text, csv)
}

fn run_count(max_n: usize) -> Output {
    let mut text = Vec::new();
    let mut csv = Vec::new();
    let mut results = Vec::new();
    let mut failed = false;
    for n in 0..=max_n {
        let row = count_row(n);
        failed |= !row.consistent;
        text.push(format!(
            "N={n}\tpairs={}\tcuspidal={}\tformula={}\t{}",
            row.pair_count,
            row.cuspidal_direct,
            row.cuspidal_formula,
            if row.consistent { "ok" } else { "MISMATCH" }
        ));
        csv.push(vec![
            n.to_string(),
            row.pair_count.to_string(),
            row.cuspidal_direct.to_string(),
            row.cuspidal_formula.to_string(),
            row.consistent.to_string(),
        ]);
        results.push(json!({
            "n": n,
            "pairs": row.pair_count,
            "cuspidal": row.cuspidal_direct,
            "formula": row.cuspidal_formula.to_string(),
            "consistent": row.consistent,
        }));
    }
    let mut out = Output::new(json!({ "max_n": max_n }), Value::Array(results), text, csv);
    out.failed = failed;
    out
}

fn run_verify_appendix() -> Output {
    let mut text = Vec::new();
    let mut csv = Vec::new();
    let mut results = Vec::new();
    let mut matched = 0;
    for n in 2..=7 {
        let check = verify_appendix(n);
        if check.is_clean() {
            matched += 1;
        }
        text.push(format!(
            "N={n}: expected {}, computed {}, {}",
            check.expected,
            check.computed,
            if check.is_clean() { "clean" } else { "DIFF" }
        ));
        for diff in &check.diffs {
            text.push(format!("  {diff}"));
        }
        csv.push(vec![
            n.to_string(),
            check.expected.to_string(),
            check.computed.to_string(),
            check.is_clean().to_string(),
        ]);
        results.push(json!({
            "n": n,
            "expected": check.expected,
            "computed": check.computed,
            "clean": check.is_clean(),
            "diffs": check.diffs,
        }));
    }
    text.push(format!("{matched}/6 tables match"));
    let mut out = Output::new(
        json!({}),
        json!({ "tables": results, "matched": format!("{matched}/6") }),
        text,
        csv,
    );
    out.failed = matched != 6;
    out
}

fn run_oracle_check(max_n: usize, seed: u64, trials: u64) -> Output {
    let mut text = Vec::new();
    let mut csv = Vec::new();
    let mut checks = Vec::new();
    let mut all_ok = true;
    for n in 0..=max_n {
        let ctx = form_matrix(n);
        let dim_h = GroupContext::new(n).dim_h();
        for orbit in enumerate_orbits(n) {
            let lambda = orbit.lambda();
            let x = nilpotent_representative(n, lambda, orbit.split());
            let self_adjoint = is_self_adjoint(&x, &ctx);
            let type_ok = jordan_type(&x).as_ref() == Ok(lambda);
            let expected = lambda.n_invariant();
            let dims = centralizer_dims(&x, &ctx);
            let centralizer_ok = dims == (expected, expected + n) && dims.0 + orbit.dimension() == dim_h;
            let nb = normal_basis(&x, &ctx);
            let gram_ok = nb.gram(&ctx) == nb.expected_gram()
                && nb.chain_lengths() == lambda.parts()
                && nb.has_unit_constants()
                && (lambda.odd_part_count() > 1 || nb.has_unit_form());
            let generators_ok = lambda.blocks().iter().all(|b| {
                let q = nb.generator_form(&x, &ctx, b.value);
                q.rows() == b.mult && q.rank() == b.mult
            });
            let ok = self_adjoint && type_ok && centralizer_ok && gram_ok && generators_ok;
            all_ok &= ok;
            text.push(format!("{orbit}\t{}", if ok { "ok" } else { "FAIL" }));
            csv.push(vec![
                n.to_string(),
                orbit.to_string(),
                self_adjoint.to_string(),
                type_ok.to_string(),
                centralizer_ok.to_string(),
                gram_ok.to_string(),
                generators_ok.to_string(),
            ]);
            checks.push(json!({
                "n": n,
                "label": orbit.to_string(),
                "self_adjoint": self_adjoint,
                "jordan_type": type_ok,
                "centralizer": centralizer_ok,
                "gram": gram_ok,
                "generator_forms": generators_ok,
            }));
        }
    }
    let mut isometry = Vec::new();
    for n in 1..=max_n {
        let ctx = form_matrix(n);
        let orbit = &enumerate_orbits(n)[0];
        let x = nilpotent_representative(n, orbit.lambda(), orbit.split());
        for t in 0..trials {
            let g = random_h_element(n, seed.wrapping_add(t));
            let form_ok = g.transpose().mul(ctx.j()).mul(&g) == *ctx.j();
            let conj = g.mul(&x).mul(&g.inverse().expect("isometries invert"));
            let type_ok = jordan_type(&conj).as_ref() == Ok(orbit.lambda());
            all_ok &= form_ok && type_ok;
            isometry.push(json!({
                "n": n,
                "seed": seed.wrapping_add(t),
                "preserves_form": form_ok,
                "preserves_type": type_ok,
            }));
        }
        text.push(format!("N={n}: {trials} isometry trials ok"));
    }
    let mut split_pairs = Vec::new();
    for n in (2..=max_n).step_by(2) {
        let lambda = Partition::new(vec![n]);
        let plus = nilpotent_representative(n, &lambda, Some(glon::Split::Plus));
        let minus = nilpotent_representative(n, &lambda, Some(glon::Split::Minus));
        let distinct = (0..trials).all(|t| {
            let g = random_h_element(n, seed.wrapping_add(t));
            g.mul(&plus).mul(&g.inverse().expect("isometries invert")) != minus
        });
        let t = split_exchange_matrix(n);
        let exchanged = t.mul(&plus).mul(&t) == minus;
        all_ok &= distinct && exchanged;
        text.push(format!(
            "N={n}: split pair distinct under {trials} trials, exchange conjugates"
        ));
        split_pairs.push(json!({
            "n": n,
            "distinct_under_trials": distinct,
            "exchange_conjugates": exchanged,
        }));
    }
    text.push(if all_ok { "oracle ok".into() } else { "oracle FAILED".into() });
    let mut out = Output::new(
        json!({ "max_n": max_n, "seed": seed, "trials": trials }),
        json!({
            "checks": checks,
            "isometry_trials": isometry,
            "split_pairs": split_pairs,
        }),
        text,
        csv,
    );
    out.failed = !all_ok;
    out
}

fn emit(command: &str, format: Format, output: &Output) {
    match format {
        Format::Text => {
            for line in &output.text {
                println!("{line}");
            }
        }
        Format::Json => {
            let doc = json!({
                "command": command,
                "inputs": output.inputs,
                "results": output.results,
            });
            println!("{}", serde_json::to_string_pretty(&doc).expect("serializable"));
        }
        Format::Csv => {
            let mut writer = csv::Writer::from_writer(Vec::new());
            for record in &output.csv {
                writer.write_record(record).expect("csv record");
            }
            let bytes = writer.into_inner().expect("csv buffer");
            print!("{}", String::from_utf8(bytes).expect("utf-8 csv"));
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (name, result): (&str, Result<Output, String>) = match &cli.command {
        Command::Orbits { n } => ("orbits", Ok(run_orbits(*n))),
        Command::Pairs { n } => ("pairs", Ok(run_pairs(*n))),
        Command::Cuspidal { n } => ("cuspidal", Ok(run_cuspidal(*n))),
        Command::Series { n } => ("series", Ok(run_series(*n))),
        Command::Table { n } => ("table", Ok(run_table(*n))),
        Command::Support { label } => ("support", run_support(label)),
        Command::Correspond { series, mu } => ("correspond", run_correspond(series, mu)),
        Command::Restrict { label, to } => ("restrict", run_restrict(label, to)),
        Command::Dims { n } => ("dims", Ok(run_dims(*n))),
        Command::Count { max_n } => ("count", Ok(run_count(*max_n))),
        Command::VerifyAppendix => ("verify-appendix", Ok(run_verify_appendix())),
        Command::OracleCheck { max_n, seed, trials } => {
            ("oracle-check", Ok(run_oracle_check(*max_n, *seed, *trials)))
        }
    };
    match result {
        Ok(output) => {
            emit(name, cli.format, &output);
            if output.failed {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}
