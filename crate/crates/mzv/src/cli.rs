//! Argument definitions and command dispatch.

use std::io::Write;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use mzv_core::algebra::Rational;
use mzv_core::lab::cases::{Bounds, Case, Outcome, Suite};
use mzv_core::lab::explorer::DEFAULT_BUDGET;
use mzv_core::sums::{self, difference, kawashima};
use mzv_core::{Composition, Expander, Index};
use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::{json, latex, parse, sweep};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
    Latex,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum EvalKind {
    /// Truncated multiple harmonic sum
    Zeta,
    /// Modified sum
    Dia,
    /// Star form of the modified sum
    DiaStar,
    /// Discrete iterated-integral form of the truncated sum
    Flat,
    /// Discrete iterated-integral form of the modified sum
    DiaFlat,
    /// Truncated sum in double precision
    Float,
    /// Kawashima-type F at each --t
    KawashimaF,
    /// Kawashima-type G at each --t
    KawashimaG,
    /// Modified sum of a JSON combination
    Combo,
    /// f_N of a composition
    F,
    /// g_N of a composition
    G,
    /// h_N of a composition
    H,
}

#[derive(Parser, Debug)]
#[command(name = "mzv", version, about = "Exact expansions of multiple zeta values over indices with entries >= 2")]
pub struct Cli {
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Worker threads
    #[arg(long, global = true, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
    pub jobs: u64,
    /// Seed for sampled sweeps
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Expand an admissible index over the indices with entries >= 2
    Expand {
        /// Comma-separated index, e.g. 3,1,4
        index: Option<String>,
        /// Even-length composition (run lengths of y^c1 x^c2 ...)
        #[arg(long)]
        composition: Option<String>,
        /// Expand the t-interpolated value, with coefficients in Z[t]
        #[arg(long)]
        interpolated: bool,
    },
    /// Evaluate a finite sum exactly
    Eval {
        #[arg(value_enum)]
        kind: EvalKind,
        /// Index, or a JSON combination for `combo`
        input: Option<String>,
        #[arg(long)]
        composition: Option<String>,
        #[arg(long)]
        n: Option<u64>,
        /// Evaluate at every N in 1..=n-max
        #[arg(long)]
        n_max: Option<u64>,
        /// Non-integer rational sample point (repeatable)
        #[arg(long = "t")]
        t: Vec<String>,
    },
    /// Run a verification suite
    Verify {
        /// Suite name, or `all`
        #[arg(long, default_value = "all")]
        family: String,
        #[arg(long, default_value_t = 5)]
        max_weight: u32,
        #[arg(long, default_value_t = 10)]
        n_max: u64,
        /// Non-integer rational sample point (repeatable); defaults to five fixed points
        #[arg(long = "t")]
        t: Vec<String>,
        /// Largest m for the Kawashima relation and the G series
        #[arg(long, default_value_t = 3)]
        max_m: u32,
        /// Run only this many cases per suite, chosen with --seed
        #[arg(long)]
        sample: Option<usize>,
    },
    /// List the indices of a class at one weight
    Enumerate {
        #[arg(long)]
        weight: u32,
        /// adm, ge2 or hoffman
        #[arg(long, default_value = "adm")]
        class: String,
    },
    /// Compare the span of LinKaw* with Drop1 at given weights
    Conjecture {
        #[arg(long, required = true)]
        weight: Vec<u32>,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: usize,
    },
    /// Print expansions as a LaTeX align block
    Latex {
        #[arg(required = true)]
        indices: Vec<String>,
    },
}

/// Exit status of a command.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Ok = 0,
    Invalid = 1,
    Failed = 2,
}

/// Runs a parsed command, writing results to `out` and diagnostics to `err`.
pub fn run(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> Status {
    match dispatch(cli, out, err) {
        Ok(s) => s,
        Err(e) => {
            let _ = writeln!(err, "error: {e:#}");
            Status::Invalid
        }
    }
}

fn line(out: &mut dyn Write, v: &Value) -> Result<()> {
    writeln!(out, "{}", serde_json::to_string(v)?)?;
    Ok(())
}

fn dispatch(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<Status> {
    match &cli.command {
        Command::Expand { index, composition, interpolated } => {
            let k = index_or_composition(index.as_deref(), composition.as_deref())?;
            expand(cli.format, &k, *interpolated, out)
        }
        Command::Eval { kind, input, composition, n, n_max, t } => {
            eval(cli.format, *kind, input.as_deref(), composition.as_deref(), *n, *n_max, t, out)
        }
        Command::Verify { family, max_weight, n_max, t, max_m, sample } => {
            let mut bounds = Bounds::new(*max_weight, *n_max);
            bounds.max_m = *max_m;
            if !t.is_empty() {
                bounds.t_samples = t.iter().map(|s| parse::t_sample(s)).collect::<Result<_>>()?;
            }
            if *n_max == 0 {
                bail!("--n-max must be at least 1");
            }
            let suites = if family == "all" {
                Suite::all()
            } else {
                vec![Suite::from_name(family).ok_or_else(|| anyhow!("unknown family {family:?}"))?]
            };
            verify(cli, &suites, &bounds, *sample, out, err)
        }
        Command::Enumerate { weight, class } => {
            let list = Index::enumerate(*weight, parse::class(class)?)?;
            for k in &list {
                match cli.format {
                    Format::Json => line(
                        out,
                        &json!({"index": json::index(k), "weight": k.weight(), "depth": k.depth(), "height": k.height()}),
                    )?,
                    Format::Text => writeln!(out, "{k}")?,
                    Format::Latex => writeln!(out, "{}", latex::zeta(k))?,
                }
            }
            Ok(Status::Ok)
        }
        Command::Conjecture { weight, budget } => {
            let pool = sweep::pool(cli.jobs as usize)?;
            let mut status = Status::Ok;
            for &k in weight {
                let r = sweep::explore(&pool, k, *budget)?;
                if !r.met {
                    status = Status::Failed;
                }
                match cli.format {
                    Format::Text => writeln!(
                        out,
                        "weight {}: rank {} of target {} ({}, {} triples tried)",
                        r.weight,
                        r.rank,
                        r.target,
                        if r.met { "met" } else { "not met" },
                        r.tried
                    )?,
                    _ => line(out, &json::explorer(&r))?,
                }
            }
            Ok(status)
        }
        Command::Latex { indices } => {
            let mut ex = Expander::new();
            let mut rows = Vec::new();
            for s in indices {
                let k = parse::index(s)?;
                let e = ex.expand_index(&k)?;
                rows.push((k, e));
            }
            write!(out, "{}", latex::block(&rows))?;
            Ok(Status::Ok)
        }
    }
}

fn index_or_composition(index: Option<&str>, composition: Option<&str>) -> Result<Index> {
    match (index, composition) {
        (Some(s), None) => parse::index(s),
        (None, Some(c)) => Ok(parse::composition(c)?.to_index()),
        (Some(_), Some(_)) => bail!("give either an index or --composition, not both"),
        (None, None) => bail!("an index or --composition is required"),
    }
}

fn expand(format: Format, k: &Index, interpolated: bool, out: &mut dyn Write) -> Result<Status> {
    let mut ex = Expander::new();
    if interpolated {
        let e = ex.expand_interpolated(k)?;
        match format {
            Format::Json => line(out, &json::interpolated_expansion(k, &e))?,
            _ => {
                for (l, c) in &e {
                    writeln!(out, "{l}\t{c}")?;
                }
            }
        }
        return Ok(Status::Ok);
    }
    let e = ex.expand_index(k)?;
    match format {
        Format::Json => line(out, &json::expansion(k, &e))?,
        Format::Text => {
            for (l, c) in e.iter() {
                writeln!(out, "{c}\t{l}")?;
            }
        }
        Format::Latex => writeln!(out, "{}", latex::expansion(k, &e))?,
    }
    Ok(Status::Ok)
}

#[allow(clippy::too_many_arguments)]
fn eval(
    format: Format,
    kind: EvalKind,
    input: Option<&str>,
    composition: Option<&str>,
    n: Option<u64>,
    n_max: Option<u64>,
    t: &[String],
    out: &mut dyn Write,
) -> Result<Status> {
    let ns: Vec<u64> = match (n, n_max) {
        (Some(n), None) => vec![n],
        (None, Some(m)) if m >= 1 => (1..=m).collect(),
        (None, Some(_)) => bail!("--n-max must be at least 1"),
        (Some(_), Some(_)) => bail!("give either --n or --n-max, not both"),
        (None, None) => bail!("--n or --n-max is required"),
    };
    let ts: Vec<Rational> = t.iter().map(|s| parse::t_sample(s)).collect::<Result<_>>()?;
    let uses_t = matches!(kind, EvalKind::KawashimaF | EvalKind::KawashimaG);
    if uses_t && ts.is_empty() {
        bail!("this kind needs at least one --t");
    }
    if !uses_t && !ts.is_empty() {
        bail!("--t only applies to kawashima-f and kawashima-g");
    }
    let comp: Option<Composition> = composition.map(parse::composition).transpose()?;
    let on_composition = matches!(kind, EvalKind::F | EvalKind::G | EvalKind::H);
    if on_composition != comp.is_some() {
        bail!("kinds f, g and h take --composition; the others take an index");
    }
    let value_at = |n: u64, t: Option<&Rational>| -> Result<(Value, String)> {
        if let Some(c) = &comp {
            let v = match kind {
                EvalKind::F => difference::f_n(c, n),
                EvalKind::G => difference::g_n(c, n),
                _ => difference::h_n(c, n),
            };
            return Ok((json!(c.entries()), v.to_string()));
        }
        let input = input.ok_or_else(|| anyhow!("an input is required"))?;
        if kind == EvalKind::Combo {
            let v: Value = serde_json::from_str(input).context("combination must be JSON")?;
            let c = json::combo_from(&v)?;
            return Ok((json::combo(&c), sums::eval_z_dia(&c, n)?.to_string()));
        }
        let k = parse::index(input)?;
        let v = match kind {
            EvalKind::Zeta => sums::zeta_n(&k, n).to_string(),
            EvalKind::Dia => sums::zeta_dia(&k, n)?.to_string(),
            EvalKind::DiaStar => sums::zeta_dia_star(&k, n)?.to_string(),
            EvalKind::Flat => sums::zeta_flat(&k, n).to_string(),
            EvalKind::DiaFlat => sums::zeta_dia_flat(&k, n)?.to_string(),
            EvalKind::Float => sums::zeta_float(&k, n)?.to_string(),
            EvalKind::KawashimaF => kawashima::f_kawashima(&k, n, t.expect("t given"))?.to_string(),
            EvalKind::KawashimaG => kawashima::g_kawashima(&k, n, t.expect("t given"))?.to_string(),
            _ => unreachable!("handled above"),
        };
        Ok((json::index(&k), v))
    };
    let name = kind.to_possible_value().expect("no skipped variants").get_name().to_string();
    let t_list: Vec<Option<&Rational>> = if uses_t { ts.iter().map(Some).collect() } else { vec![None] };
    for &n in &ns {
        for &tv in &t_list {
            let (key, v) = value_at(n, tv)?;
            match format {
                Format::Json => {
                    let mut obj = json!({"kind": name, "input": key, "N": n});
                    if let Some(tv) = tv {
                        obj["t"] = json::rational(tv);
                    }
                    obj["value"] = Value::String(v);
                    line(out, &obj)?;
                }
                _ => writeln!(out, "{v}")?,
            }
        }
    }
    Ok(Status::Ok)
}

fn text_outcome(case: &Case, o: &Outcome) -> String {
    let params: Vec<String> = case
        .params()
        .iter()
        .map(|(k, p)| format!("{k}={}", json::param(p).to_string().trim_matches('"')))
        .collect();
    let mut s = format!("{} {}", case.suite(), params.join(" "));
    if let Some(n) = o.n {
        s.push_str(&format!(" N={n}"));
    }
    if let Some(t) = &o.t {
        s.push_str(&format!(" t={t}"));
    }
    s.push_str(if o.ok { " ok" } else { " FAIL" });
    if let Some(d) = &o.detail {
        s.push_str(&format!(" ({d})"));
    }
    s
}

fn verify(
    cli: &Cli,
    suites: &[Suite],
    bounds: &Bounds,
    sample_size: Option<usize>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<Status> {
    let pool = sweep::pool(cli.jobs as usize)?;
    let mut status = Status::Ok;
    for &suite in suites {
        let mut list = mzv_core::lab::cases(suite, bounds, &mut Expander::new())?;
        if let Some(size) = sample_size {
            if size < list.len() {
                let mut rng = ChaCha8Rng::seed_from_u64(cli.seed);
                let mut picked = sample(&mut rng, list.len(), size).into_vec();
                picked.sort_unstable();
                list = picked.into_iter().map(|i| list[i].clone()).collect();
            }
        }
        let results = sweep::run_cases(&pool, list, bounds);
        let (mut checks, mut failures) = (0usize, 0usize);
        for (case, outcomes) in &results {
            for o in outcomes {
                checks += 1;
                if !o.ok {
                    failures += 1;
                }
                match cli.format {
                    Format::Text => writeln!(out, "{}", text_outcome(case, o))?,
                    _ => line(out, &json::outcome(case, o))?,
                }
            }
        }
        if failures > 0 {
            status = Status::Failed;
        }
        let mut summary = json!({"family": suite.name(), "cases": results.len(), "checks": checks, "failures": failures});
        if sample_size.is_some() {
            summary["seed"] = json!(cli.seed);
        }
        writeln!(err, "{}", serde_json::to_string(&summary)?)?;
    }
    Ok(status)
}
