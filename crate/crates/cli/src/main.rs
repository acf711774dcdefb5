use std::fmt::Write as _;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use lrc_core::analysis::{
    algorithm2, check_gamma_columns, distance_lb_degree, distance_lb_gcd, distance_report,
    verify_recovering_sets, DistanceReport, RankSet, RecoveringGraph, DEFAULT_CODEWORD_BUDGET,
    DEFAULT_SUBSET_BUDGET, EXTENDED_CODEWORD_BUDGET,
};
use lrc_core::bounds::{bound_eq1, bound_report, bound_thm2, BoundQuery, LocalityProfile, RecoveryProfile};
use lrc_core::codefile;
use lrc_core::constructions::{construction1, construction2, presets, Code, LinearCode};
use lrc_core::{Error, FieldElement, FiniteField};

#[derive(Parser)]
#[command(name = "lrc", version, about = "Build and check locally recoverable codes with availability")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Most messages to enumerate for exact distance and the gcd bound.
    #[arg(long, global = true)]
    budget_codewords: Option<u64>,
    /// Most column subsets to rank-check.
    #[arg(long, default_value_t = DEFAULT_SUBSET_BUDGET, global = true)]
    budget_subsets: u64,
    /// Raise the codeword budget to 10^9.
    #[arg(long, global = true)]
    extended: bool,
    /// Seed for sampled repair checks.
    #[arg(long, default_value_t = 1, global = true)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Build a code and write it as a code file.
    Construct {
        #[command(subcommand)]
        target: Target,
        /// Write the code file here instead of stdout.
        #[arg(long, global = true)]
        out: Option<PathBuf>,
    },
    /// Print every bound that applies to the given parameters.
    Bounds {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, requires = "t")]
        r: Option<usize>,
        #[arg(long)]
        t: Option<usize>,
        /// Recovering-set caps, e.g. `3,2`.
        #[arg(long, value_delimiter = ',')]
        profile: Option<Vec<usize>>,
        /// Information locality counts `j:k_j`, e.g. `1:2,3:4`; needs `--t`.
        #[arg(long, value_delimiter = ',', requires = "t")]
        locality_profile: Option<Vec<String>>,
    },
    /// Load a code file and check distance and recovery.
    Verify {
        file: PathBuf,
        /// Random codewords used for the repair spot check.
        #[arg(long, default_value_t = 8)]
        samples: usize,
    },
    /// Distance bounds of the (16, k) example code for k = 4..9.
    Table1,
    /// The three preset instances.
    Examples,
}

#[derive(Subcommand)]
enum Target {
    /// Intersection of polynomial families over a preset instance.
    TamoBarg {
        #[arg(long)]
        example: u32,
        /// Degree bound of the polynomial space.
        #[arg(long, conflicts_with = "k")]
        m: Option<usize>,
        /// Target dimension; picks the smallest degree bound reaching it.
        #[arg(long)]
        k: Option<usize>,
    },
    /// Evaluation code over GF(p^{lt}) with t coordinate subgroups.
    C1 {
        #[arg(long)]
        p: u32,
        #[arg(long)]
        l: u32,
        #[arg(long)]
        t: u32,
    },
    /// Parity-check code with repair groups of size tr+1.
    C2 {
        #[arg(long)]
        q: u32,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        t: usize,
        #[arg(long)]
        v: usize,
        #[arg(long)]
        k: usize,
        /// Extension degree; defaults to v(t(r-1)+1).
        #[arg(long)]
        m: Option<u32>,
    },
}

/// Text and JSON renderings of one result.
struct Output {
    text: String,
    json: Value,
}

impl Output {
    fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.text.trim_end().to_string(),
            Format::Json => serde_json::to_string_pretty(&self.json).expect("values serialize"),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            println!("{}", out.render(cli.format));
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn codeword_budget(cli: &Cli) -> u64 {
    match (cli.budget_codewords, cli.extended) {
        (Some(b), _) => b,
        (None, true) => EXTENDED_CODEWORD_BUDGET,
        (None, false) => DEFAULT_CODEWORD_BUDGET,
    }
}

fn run(cli: &Cli) -> Result<Output> {
    match &cli.command {
        Command::Construct { target, out } => construct(cli, target, out.as_ref()),
        Command::Bounds {
            n,
            k,
            r,
            t,
            profile,
            locality_profile,
        } => bounds(*n, *k, *r, *t, profile.as_deref(), locality_profile.as_deref()),
        Command::Verify { file, samples } => verify(cli, file, *samples),
        Command::Table1 => table1(codeword_budget(cli)),
        Command::Examples => examples(),
    }
}

fn build(target: &Target) -> Result<Code> {
    Ok(match *target {
        Target::TamoBarg { example, m, k } => {
            let preset = presets::example(example)?;
            let code = match (m, k) {
                (Some(m), _) => preset.code(m)?,
                (None, Some(k)) => preset.code_with_dimension(k)?,
                (None, None) => preset.default_code()?,
            };
            code.into()
        }
        Target::C1 { p, l, t } => construction1(p, l, t)?.into(),
        Target::C2 { q, r, t, v, k, m } => construction2(q, r, t, v, k, m, None)?.into(),
    })
}

fn construct(cli: &Cli, target: &Target, out: Option<&PathBuf>) -> Result<Output> {
    let code = build(target)?;
    let file = codefile::to_json(&code)?;
    let mut summary = summary(&code);
    match out {
        Some(path) => {
            fs::write(path, &file).with_context(|| format!("writing {}", path.display()))?;
            writeln!(summary.text, "wrote {}", path.display())?;
            summary.json["file"] = json!(path.display().to_string());
            Ok(summary)
        }
        None => {
            eprintln!("{}", summary.render(cli.format));
            Ok(Output {
                text: file.clone(),
                json: serde_json::from_str(&file)?,
            })
        }
    }
}

fn summary(code: &Code) -> Output {
    let (n, k) = (code.length(), code.dimension());
    let mut text = format!(
        "{} code over GF({}): n = {n}, k = {k}\n",
        code.provenance().construction,
        code.field().order()
    );
    let json = match code {
        Code::Evaluation(c) => {
            let profile = c.recovery_profile().ok();
            let recovers = c.check_local_recovery();
            let lb = distance_lb_degree(c);
            let thm2 = profile
                .as_ref()
                .filter(|_| recovers)
                .and_then(|p| bound_thm2(n, k, p).ok());
            let caps = profile.as_ref().map(|p| p.original_order().to_vec());
            writeln!(text, "recovery profile {caps:?}, blocks recover locally: {recovers}").unwrap();
            writeln!(text, "basis degrees {:?}", c.basis().degrees()).unwrap();
            writeln!(text, "distance >= {lb}").unwrap();
            if let Some(b) = thm2 {
                writeln!(text, "distance <= {b} (thm2)").unwrap();
            }
            json!({
                "kind": "evaluation", "n": n, "k": k, "profile": caps,
                "local_recovery": recovers, "degrees": c.basis().degrees(),
                "lb_degree": lb, "thm2": thm2,
            })
        }
        Code::ParityCheck(c) => {
            let p = c.params();
            let eq1 = bound_eq1(p.n, p.k, p.r, p.t).ok();
            writeln!(text, "r = {}, t = {}, v = {}, u = {}, field GF({}^{})", p.r, p.t, p.v, p.u, p.q, p.m).unwrap();
            writeln!(text, "gamma = {}", c.gamma()).unwrap();
            if let Some(b) = eq1 {
                writeln!(text, "distance <= {b} (eq1)").unwrap();
            }
            json!({ "kind": "parity-check", "params": p, "gamma": c.gamma(), "eq1": eq1 })
        }
    };
    Output { text, json }
}

fn parse_locality(items: &[String]) -> Result<Vec<(usize, usize)>> {
    items
        .iter()
        .map(|s| {
            let (j, c) = s
                .split_once(':')
                .ok_or_else(|| anyhow!("locality entry {s:?} is not of the form j:count"))?;
            Ok((j.trim().parse()?, c.trim().parse()?))
        })
        .collect()
}

fn bounds(
    n: usize,
    k: usize,
    r: Option<usize>,
    t: Option<usize>,
    profile: Option<&[usize]>,
    locality: Option<&[String]>,
) -> Result<Output> {
    let query = BoundQuery {
        n,
        k,
        r,
        t: if r.is_some() { t } else { None },
        profile: profile.map(|p| RecoveryProfile::new(p.to_vec())).transpose()?,
        locality: match locality {
            Some(items) => Some(LocalityProfile::new(
                parse_locality(items)?,
                t.ok_or_else(|| anyhow!("--locality-profile needs --t"))?,
            )?),
            None => None,
        },
    };
    let entries = bound_report(&query)?;
    let mut text = String::new();
    for e in &entries {
        writeln!(text, "{}: {}", e.name, e.value)?;
    }
    Ok(Output {
        text,
        json: json!({ "n": n, "k": k, "bounds": entries }),
    })
}

/// Recovering relations to spot check: `(coordinate, set)` pairs.
fn relations(code: &Code) -> Vec<(usize, Vec<usize>)> {
    match code {
        Code::Evaluation(c) => match RecoveringGraph::from_evaluation_code(c) {
            Ok(g) => (0..g.n())
                .flat_map(|i| g.sets(i).iter().map(move |s| (i, s.clone())).collect::<Vec<_>>())
                .collect(),
            Err(_) => Vec::new(),
        },
        Code::ParityCheck(c) => c
            .repair_groups()
            .iter()
            .flat_map(|g| g.row_supports())
            .flat_map(|row| {
                row.iter()
                    .map(|&i| (i, row.iter().copied().filter(|&u| u != i).collect()))
                    .collect::<Vec<_>>()
            })
            .collect(),
    }
}

/// Rebuilds coordinate `i` of random codewords from the set, using a dual
/// codeword supported on `set ∪ {i}`.
fn spot_check(code: &Code, rels: &[(usize, Vec<usize>)], samples: usize, seed: u64) -> (usize, bool) {
    let f = code.field();
    let g = code.generator_matrix();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let words: Vec<Vec<FieldElement>> = (0..samples)
        .map(|_| {
            let msg: Vec<_> = (0..code.dimension())
                .map(|_| f.element(rng.gen_range(0..f.order())).expect("in range"))
                .collect();
            code.encode(&msg).expect("message has length k")
        })
        .collect();
    let mut checked = 0;
    let mut ok = true;
    for (i, set) in rels {
        let mut cols = set.clone();
        cols.push(*i);
        let kernel = g.matrix().select_columns(&cols).null_space(f);
        let last = cols.len() - 1;
        let Some(y) = kernel.to_rows().into_iter().find(|y| !y[last].is_zero()) else {
            ok = false;
            continue;
        };
        let scale = f.neg(f.inv(y[last]).expect("nonzero"));
        for w in &words {
            let acc = set
                .iter()
                .zip(&y)
                .fold(FieldElement::ZERO, |acc, (&u, &c)| f.add(acc, f.mul(c, w[u])));
            ok &= f.mul(scale, acc) == w[*i];
            checked += 1;
        }
    }
    (checked, ok)
}

fn verify(cli: &Cli, file: &PathBuf, samples: usize) -> Result<Output> {
    let text = fs::read_to_string(file).with_context(|| format!("reading {}", file.display()))?;
    let code = codefile::from_json(&text)?;
    let n = code.length();
    let report = distance_report(&code, codeword_budget(cli));

    let mut recovery = json!(null);
    let mut rank_set: Option<RankSet> = None;
    let mut gamma_check = json!(null);
    match &code {
        Code::Evaluation(c) => {
            let graph = RecoveringGraph::from_evaluation_code(c)?;
            let verified = verify_recovering_sets(c, &graph);
            if verified && c.dimension() >= 2 {
                rank_set = Some(algorithm2(c, &graph, &graph.localities())?);
            }
            recovery = json!({ "partition_sets_verified": verified });
        }
        Code::ParityCheck(c) => {
            gamma_check = match check_gamma_columns(c, cli.budget_subsets) {
                Ok(b) => json!({ "gamma": c.gamma(), "independent": b }),
                Err(Error::BudgetExceeded { budget, needed }) => {
                    json!({ "gamma": c.gamma(), "independent": null, "budget": budget, "needed": needed })
                }
                Err(e) => return Err(e.into()),
            };
        }
    }
    let rels = relations(&code);
    let (repairs, repairs_ok) = spot_check(&code, &rels, samples, cli.seed);
    let verdict = verdict(&report, rank_set.as_ref().map(|s| s.distance_bound(n)));

    let mut out = String::new();
    writeln!(out, "{} code: n = {n}, k = {}", code.provenance().construction, code.dimension())?;
    write_report(&mut out, &report)?;
    if let Some(s) = &rank_set {
        writeln!(out, "rank-(k-1) set of size {}: distance <= {}", s.set.len(), s.distance_bound(n))?;
    }
    if let Some(v) = recovery.get("partition_sets_verified") {
        writeln!(out, "partition recovering sets verified: {v}")?;
    }
    if !gamma_check.is_null() {
        match gamma_check["independent"].as_bool() {
            Some(b) => writeln!(out, "every {}-column subset of H independent: {b}", gamma_check["gamma"])?,
            None => writeln!(out, "gamma-column check: budget exhausted ({} subsets)", gamma_check["needed"])?,
        }
    }
    writeln!(out, "repair spot check: {repairs} repairs, all correct: {repairs_ok}")?;
    writeln!(out, "verdict: {verdict}")?;
    Ok(Output {
        text: out,
        json: json!({
            "report": report,
            "recovery": recovery,
            "rank_set": rank_set,
            "gamma_check": gamma_check,
            "repairs": { "checked": repairs, "ok": repairs_ok, "seed": cli.seed },
            "verdict": verdict,
        }),
    })
}

fn verdict(report: &DistanceReport, extra_ub: Option<usize>) -> &'static str {
    let lower = [report.exact, report.lb_gcd, report.lb_degree].into_iter().flatten().max();
    let upper = report
        .ub
        .iter()
        .map(|b| b.value)
        .chain(extra_ub.map(|v| v as i64))
        .min();
    match (lower, upper, report.exact) {
        (Some(l), Some(u), _) if l as i64 == u => "optimal",
        (_, _, Some(_)) => "not optimal",
        _ => "undecided",
    }
}

fn dash(v: Option<usize>) -> String {
    v.map_or("−".into(), |v| v.to_string())
}

fn write_report(out: &mut String, r: &DistanceReport) -> std::fmt::Result {
    writeln!(out, "exact distance: {}", dash(r.exact))?;
    writeln!(out, "degree lower bound: {}", dash(r.lb_degree))?;
    writeln!(out, "gcd lower bound: {}", dash(r.lb_gcd))?;
    for b in &r.ub {
        writeln!(out, "upper bound {}: {}", b.name, b.value)?;
    }
    writeln!(
        out,
        "method: {}, {} messages enumerated, budget {}{}",
        r.method,
        r.enumerations,
        r.budget,
        if r.budget_exhausted { " (exhausted)" } else { "" }
    )
}

fn table1(budget: u64) -> Result<Output> {
    let ex1 = presets::example1();
    let mut text = format!("{:>3} {:>5} {:>5} {:>5}\n", "k", "LB1", "LB2", "UB");
    let mut rows = Vec::new();
    for k in 4..=9 {
        let code = ex1.code_with_dimension(k)?;
        let lb1 = distance_lb_degree(&code);
        let lb2 = distance_lb_gcd(&code, budget);
        let ub = bound_thm2(16, k, &code.recovery_profile()?)?.min(16 - k as i64 + 1);
        writeln!(text, "{k:>3} {lb1:>5} {:>5} {ub:>5}", dash(lb2))?;
        rows.push(json!({ "k": k, "lb1": lb1, "lb2": lb2, "ub": ub }));
    }
    writeln!(text, "LB2 enumerates at most {budget} messages per row")?;
    Ok(Output {
        text,
        json: json!({ "budget": budget, "rows": rows }),
    })
}

fn examples() -> Result<Output> {
    let mut text = String::new();
    let mut list = Vec::new();
    for number in 1..=3 {
        let p = presets::example(number)?;
        let code = p.default_code()?;
        let f: &FiniteField = &p.field;
        let groups: Vec<Vec<String>> = p
            .subgroups
            .iter()
            .map(|h| h.elements.iter().map(|&e| f.display(e)).collect())
            .collect();
        let locs: Vec<usize> = p.specs.iter().map(|s| s.r).collect();
        let thm2 = bound_thm2(code.length(), code.dimension(), &code.recovery_profile()?)?;
        writeln!(
            text,
            "example {number}: GF({}), modulus {:?}, m = {}, (n, k) = ({}, {}), degrees {:?}",
            f.order(),
            f.modulus(),
            p.default_m,
            code.length(),
            code.dimension(),
            code.basis().degrees()
        )?;
        for (h, r) in groups.iter().zip(&locs) {
            writeln!(text, "  r = {r}: {{{}}}", h.join(", "))?;
        }
        writeln!(text, "  distance >= {}, thm2 bound {thm2}", distance_lb_degree(&code))?;
        list.push(json!({
            "example": number, "q": f.order(), "modulus": f.modulus(), "m": p.default_m,
            "n": code.length(), "k": code.dimension(), "degrees": code.basis().degrees(),
            "subgroups": groups, "localities": locs,
            "lb_degree": distance_lb_degree(&code), "thm2": thm2,
        }));
    }
    Ok(Output {
        text,
        json: json!(list),
    })
}

