use std::io::Write;

use rayon::prelude::*;
use serde_json::{json, Value};
use thiserror::Error;

use ptnu_core::oracle::{discretize, halved_grid, richardson};
use ptnu_core::trig_pt::{alpha_zero_limit, spectrum_table};
use ptnu_core::PtPotential;

use crate::config::{ConfigError, OutputFormat, RunConfig};
use crate::format::{fixed, json_number, scientific};

/// Relative band for the NU root against the closed form.
pub const NU_BAND: f64 = 1e-9;
/// Smallest range parameter checked against the finite-difference oracle.
/// Wider wells need far finer uniform grids than the oracle is meant for.
pub const ORACLE_MIN_ALPHA: f64 = 0.4;
/// Smallest grid accepted by `verify`.
pub const VERIFY_MIN_GRID: usize = 1000;

#[derive(Debug, Error)]
pub enum CommandError {
    #[error(transparent)]
    Config(#[from] ConfigError),
    #[error("numerical failure: {0}")]
    Numerical(#[from] ptnu_core::Error),
    #[error("output error: {0}")]
    Io(#[from] std::io::Error),
    #[error("output error: {0}")]
    Json(#[from] serde_json::Error),
}

impl CommandError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CommandError::Config(_) => 2,
            _ => 1,
        }
    }
}

fn invalid(key: &str, reason: String) -> CommandError {
    CommandError::Config(ConfigError::Invalid {
        key: key.to_string(),
        reason,
    })
}

fn write_rows(out: &mut dyn Write, format: OutputFormat, header: &[String], rows: &[Vec<String>]) -> std::io::Result<()> {
    let sep = format.separator();
    writeln!(out, "{}", header.join(sep))?;
    for row in rows {
        writeln!(out, "{}", row.join(sep))?;
    }
    Ok(())
}

fn write_json(out: &mut dyn Write, items: Vec<Value>) -> Result<(), CommandError> {
    serde_json::to_writer(&mut *out, &Value::Array(items))?;
    writeln!(out)?;
    Ok(())
}

/// Closed-form energies, one row per `n` and one column per `α`.
pub fn table2(config: &RunConfig, out: &mut dyn Write) -> Result<(), CommandError> {
    config.validate()?;
    let table = spectrum_table(config.m, config.v1, config.v2, &config.alphas, config.n_max)?;
    let p = config.precision;
    match config.format {
        OutputFormat::Json => {
            let mut items = Vec::new();
            for (n, row) in table.rows.iter().enumerate() {
                for (alpha, energy) in table.alphas.iter().zip(row) {
                    items.push(json!({ "n": n, "alpha": alpha, "energy": json_number(&fixed(*energy, p)) }));
                }
            }
            write_json(out, items)
        }
        format => {
            let header: Vec<String> = std::iter::once("n".to_string())
                .chain(table.alphas.iter().map(|a| format!("alpha={a}")))
                .collect();
            let rows: Vec<Vec<String>> = table
                .rows
                .iter()
                .enumerate()
                .map(|(n, row)| std::iter::once(n.to_string()).chain(row.iter().map(|e| fixed(*e, p))).collect())
                .collect();
            Ok(write_rows(out, format, &header, &rows)?)
        }
    }
}

/// Normalized `R_{n,0}(r)` and `R/r` at `points` interior radii of each well.
pub fn wavefunction(config: &RunConfig, n: usize, points: usize, out: &mut dyn Write) -> Result<(), CommandError> {
    config.validate()?;
    if n > config.n_max {
        return Err(invalid("n", format!("{n} exceeds nmax = {}", config.n_max)));
    }
    if points < 2 {
        return Err(invalid("points", format!("{points} is below 2")));
    }
    let p = config.precision;
    let mut rows = Vec::new();
    let mut items = Vec::new();
    for &alpha in &config.alphas {
        let potential = PtPotential::new(config.m, config.v1, config.v2, alpha)?;
        let state = potential.normalize(n)?;
        let width = potential.well_width();
        for i in 1..=points {
            let r = width * i as f64 / (points + 1) as f64;
            let value = state.wavefunction.value(r)?;
            let cells = [fixed(r, p), format!("{value:.p$e}"), format!("{:.p$e}", value / r)];
            match config.format {
                OutputFormat::Json => items.push(json!({
                    "alpha": alpha,
                    "n": n,
                    "r": json_number(&cells[0]),
                    "R": json_number(&cells[1]),
                    "R_over_r": json_number(&cells[2]),
                })),
                _ => rows.push([vec![alpha.to_string()], cells.to_vec()].concat()),
            }
        }
    }
    match config.format {
        OutputFormat::Json => write_json(out, items),
        format => {
            let header = ["alpha", "r", "R", "R_over_r"].map(String::from);
            Ok(write_rows(out, format, &header, &rows)?)
        }
    }
}

/// One `(n, α)` cell of the verification sweep.
#[derive(Debug, Clone, PartialEq)]
pub struct VerifyCell {
    pub n: usize,
    pub alpha: f64,
    pub closed_form: f64,
    pub nu_root: f64,
    pub nu_deviation: f64,
    /// Oracle energy and its relative deviation; `None` when skipped.
    pub oracle: Option<(f64, f64)>,
    pub pass: bool,
}

fn rel_dev(value: f64, reference: f64) -> f64 {
    (value - reference).abs() / reference.abs()
}

/// Closed form, NU root and (for `α ≥ 0.4`) the extrapolated
/// finite-difference energy for every `(n, α)`. Cells are computed in
/// parallel per `α` and returned in `n`-major order.
pub fn verify_cells(config: &RunConfig) -> Result<Vec<VerifyCell>, CommandError> {
    config.validate()?;
    if config.grid_points < VERIFY_MIN_GRID {
        return Err(invalid(
            "grid-points",
            format!("{} is below {VERIFY_MIN_GRID}", config.grid_points),
        ));
    }
    let count = config.n_max + 1;
    let columns: Vec<Vec<VerifyCell>> = config
        .alphas
        .par_iter()
        .map(|&alpha| -> Result<Vec<VerifyCell>, CommandError> {
            let p = PtPotential::new(config.m, config.v1, config.v2, alpha)?;
            let oracle = if alpha >= ORACLE_MIN_ALPHA {
                let coarse = discretize(&p, config.grid_points)?.lowest_eigenvalues(count)?;
                let fine = discretize(&p, halved_grid(config.grid_points))?.lowest_eigenvalues(count)?;
                Some(
                    coarse
                        .iter()
                        .zip(&fine)
                        .map(|(c, f)| richardson(*c, *f, 2) / (2.0 * p.m()))
                        .collect::<Vec<_>>(),
                )
            } else {
                None
            };
            (0..count)
                .map(|n| {
                    let closed_form = p.energy_closed_form(n);
                    let nu_root = p.energy_via_nu(n)?;
                    let nu_deviation = rel_dev(nu_root, closed_form);
                    let oracle = oracle.as_ref().map(|o| (o[n], rel_dev(o[n], closed_form)));
                    let pass = nu_deviation <= NU_BAND && oracle.is_none_or(|(_, d)| d <= config.tol);
                    Ok(VerifyCell {
                        n,
                        alpha,
                        closed_form,
                        nu_root,
                        nu_deviation,
                        oracle,
                        pass,
                    })
                })
                .collect()
        })
        .collect::<Result<_, _>>()?;
    let mut cells = Vec::with_capacity(count * columns.len());
    for n in 0..count {
        for column in &columns {
            cells.push(column[n].clone());
        }
    }
    Ok(cells)
}

/// Writes the verification report; returns whether every cell is in band.
pub fn verify(config: &RunConfig, out: &mut dyn Write) -> Result<bool, CommandError> {
    let cells = verify_cells(config)?;
    let p = config.precision;
    let status = |pass: bool| if pass { "ok" } else { "FAIL" };
    match config.format {
        OutputFormat::Json => {
            let items = cells
                .iter()
                .map(|c| {
                    let (oracle, oracle_dev) = match c.oracle {
                        Some((e, d)) => (json_number(&fixed(e, p)), json_number(&scientific(d))),
                        None => (json!("skipped"), json!("skipped")),
                    };
                    json!({
                        "n": c.n,
                        "alpha": c.alpha,
                        "closed_form": json_number(&fixed(c.closed_form, p)),
                        "nu_root": json_number(&fixed(c.nu_root, p)),
                        "oracle": oracle,
                        "nu_rel_dev": json_number(&scientific(c.nu_deviation)),
                        "oracle_rel_dev": oracle_dev,
                        "status": status(c.pass),
                    })
                })
                .collect();
            write_json(out, items)?;
        }
        format => {
            let header = [
                "n",
                "alpha",
                "closed_form",
                "nu_root",
                "oracle",
                "nu_rel_dev",
                "oracle_rel_dev",
                "status",
            ]
            .map(String::from);
            let rows: Vec<Vec<String>> = cells
                .iter()
                .map(|c| {
                    let (oracle, oracle_dev) = match c.oracle {
                        Some((e, d)) => (fixed(e, p), scientific(d)),
                        None => ("skipped".to_string(), "skipped".to_string()),
                    };
                    vec![
                        c.n.to_string(),
                        c.alpha.to_string(),
                        fixed(c.closed_form, p),
                        fixed(c.nu_root, p),
                        oracle,
                        scientific(c.nu_deviation),
                        oracle_dev,
                        status(c.pass).to_string(),
                    ]
                })
                .collect();
            write_rows(out, format, &header, &rows)?;
        }
    }
    Ok(cells.iter().all(|c| c.pass))
}

/// Ground-state energy and its distance from the `α → 0` limit for each
/// `α`, followed by an `α = 0` row carrying the limit itself.
pub fn limit(config: &RunConfig, out: &mut dyn Write) -> Result<(), CommandError> {
    config.validate()?;
    let p = config.precision;
    let limit = alpha_zero_limit(config.v1, config.v2);
    let mut entries = Vec::with_capacity(config.alphas.len() + 1);
    for &alpha in &config.alphas {
        let e = PtPotential::new(config.m, config.v1, config.v2, alpha)?.energy_closed_form(0);
        entries.push((alpha, e, (e - limit).abs()));
    }
    entries.push((0.0, limit, 0.0));
    match config.format {
        OutputFormat::Json => write_json(
            out,
            entries
                .iter()
                .map(|(a, e, d)| {
                    json!({
                        "alpha": a,
                        "energy": json_number(&fixed(*e, p)),
                        "deviation": json_number(&fixed(*d, p)),
                    })
                })
                .collect(),
        ),
        format => {
            let header = ["alpha", "energy", "deviation"].map(String::from);
            let rows: Vec<Vec<String>> = entries
                .iter()
                .map(|(a, e, d)| vec![a.to_string(), fixed(*e, p), fixed(*d, p)])
                .collect();
            Ok(write_rows(out, format, &header, &rows)?)
        }
    }
}
