mod args;
mod output;

use std::io::Write;
use std::process::ExitCode;

use cayley_walks::oracles::{enumerate_dyck, tree_walk_count};
use cayley_walks::series::{gf_d_i, gf_f};
use cayley_walks::verify::{self, VerifyConfig};
use cayley_walks::{build_table, Error, Rat, WeightConfig};
use clap::Parser;
use serde_json::{json, Map, Value};

use args::{Cli, Command, DyckMethod, GlobalOpts, WalkMethod};
use output::Terms;

const EXIT_VERIFY_FAILED: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_INFEASIBLE: u8 = 3;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                Error::Infeasible { .. } => EXIT_INFEASIBLE,
                _ => EXIT_USAGE,
            })
        }
    }
}

fn run(cli: &Cli) -> Result<ExitCode, Error> {
    let opts = &cli.global;
    match &cli.command {
        Command::Walks {
            m,
            i,
            n_max,
            method,
        } => {
            let values = walks(*m, *i, *n_max, *method, opts.max_states)?;
            let mut meta = Map::new();
            meta.insert("m".into(), json!(m.to_string()));
            meta.insert("i".into(), json!(i.to_string()));
            meta.insert("method".into(), json!(format!("{method:?}").to_lowercase()));
            emit(opts, meta, *i, values, false);
        }
        Command::Dyck {
            c1,
            c2,
            c3,
            i,
            n_max,
            method,
        } => {
            let w = WeightConfig::new(c1.clone(), c2.clone(), c3.clone());
            let values = dyck(&w, *i, *n_max, *method, opts.max_states)?;
            let mut meta = Map::new();
            meta.insert(
                "weights".into(),
                serde_json::to_value(&w).expect("serializable"),
            );
            meta.insert("i".into(), json!(i.to_string()));
            meta.insert("method".into(), json!(format!("{method:?}").to_lowercase()));
            emit(opts, meta, *i, values, false);
        }
        Command::Verify {
            scope,
            n_max,
            m_max,
        } => {
            let report = verify::run(&VerifyConfig {
                scope: (*scope).into(),
                n_max: *n_max,
                m_max: *m_max,
                max_states: opts.max_states,
            })?;
            let mut out = String::new();
            for check in &report.checks {
                out.push_str(&format!("{check}\n"));
            }
            let failed = report.checks.iter().filter(|c| !c.passed()).count();
            out.push_str(&format!(
                "{} checks, {failed} failed\n",
                report.checks.len()
            ));
            write_stdout(&out);
            if failed > 0 {
                return Ok(ExitCode::from(EXIT_VERIFY_FAILED));
            }
        }
        Command::Bfile { m, i, count, start } => {
            let parity = opts.parity(true);
            let n_max = match (count, parity) {
                (0, _) => 0,
                (c, true) => i + 2 * (c - 1),
                (c, false) => c - 1,
            };
            require_tree_degree(*m)?;
            let table = build_table(&WeightConfig::tree(*m)?, n_max);
            let values: Vec<Rat> = if parity {
                (0..*count)
                    .map(|k| table.get(*i, i + 2 * k))
                    .collect::<Result<_, _>>()?
            } else {
                (0..*count)
                    .map(|n| table.get(*i, n))
                    .collect::<Result<_, _>>()?
            };
            write_stdout(&output::bfile(values, *start));
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn require_tree_degree(m: u32) -> Result<(), Error> {
    if m < 2 {
        Err(Error::InvalidDegree(
            m,
            "b-file export needs degree at least 2",
        ))
    } else {
        Ok(())
    }
}

fn walks(
    m: u32,
    i: usize,
    n_max: usize,
    method: WalkMethod,
    max_states: u64,
) -> Result<Vec<Rat>, Error> {
    match method {
        WalkMethod::Dp => Ok(build_table(&WeightConfig::tree(m)?, n_max).row(i)),
        WalkMethod::Gf => Ok(gf_f(m, i, n_max)?.into_coeffs()),
        WalkMethod::Tree => (0..=n_max)
            .map(|n| tree_walk_count(m, i, n, max_states).map(Rat::from))
            .collect(),
    }
}

fn dyck(
    w: &WeightConfig,
    i: usize,
    n_max: usize,
    method: DyckMethod,
    max_states: u64,
) -> Result<Vec<Rat>, Error> {
    match method {
        DyckMethod::Dp => Ok(build_table(w, n_max).row(i)),
        DyckMethod::Gf => Ok(gf_d_i(w, i, n_max)?.into_coeffs()),
        DyckMethod::Enum => (0..=n_max)
            .map(|n| enumerate_dyck(w, i, n, max_states))
            .collect(),
    }
}

fn emit(
    opts: &GlobalOpts,
    mut meta: Map<String, Value>,
    i: usize,
    values: Vec<Rat>,
    parity_default: bool,
) {
    let parity = opts.parity(parity_default);
    meta.insert("parity_filter".into(), json!(parity));
    let points = values
        .into_iter()
        .enumerate()
        .filter(|(n, _)| !parity || (*n >= i && (n - i).is_multiple_of(2)))
        .collect();
    write_stdout(&output::render(Terms { meta, points }, opts.format));
}

fn write_stdout(s: &str) {
    let mut out = std::io::stdout().lock();
    // a closed pipe is not an error worth reporting
    let _ = out.write_all(s.as_bytes()).and_then(|()| out.flush());
}
