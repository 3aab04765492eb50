//! Surface export: an operator sampled on an `n x n` uniform grid as CSV.

use std::fmt::Write as _;

use anyhow::{anyhow, bail, Result};
use fuzzalg::connectives::{TConorm, TNorm};
use fuzzalg::numerics::{uniform_grid, TolerancePolicy};
use fuzzalg::operator::{BinaryOp, Operator};
use fuzzalg::report::fmt_num;
use fuzzalg::uninorms::{log_uninorm, rational_uninorm, Boundary};
use fuzzalg_dsl::elab::{Checked, Val};

pub const BUILTINS: &[&str] = &["tl", "sl", "tm", "sm", "tp", "sp", "up-ln", "up-rational"];

pub fn builtin(name: &str, pol: &TolerancePolicy) -> Option<Operator> {
    Some(match name {
        "tl" => TNorm::Lukasiewicz.into(),
        "sl" => TConorm::Lukasiewicz.into(),
        "tm" => TNorm::Minimum.into(),
        "sm" => TConorm::Maximum.into(),
        "tp" => TNorm::Product.into(),
        "sp" => TConorm::ProbabilisticSum.into(),
        "up-ln" => log_uninorm(Boundary::Conjunctive, pol).into(),
        "up-rational" => rational_uninorm(Boundary::Conjunctive, pol).into(),
        _ => return None,
    })
}

/// Looks `name` up among the script's definitions first, then the built-ins.
pub fn resolve(name: &str, script: Option<&Checked>, pol: &TolerancePolicy) -> Result<Operator> {
    if let Some(val) = script.and_then(|c| c.get(name)) {
        return match val {
            Val::TNorm(t) => Ok(t.clone().into()),
            Val::TConorm(s) => Ok(s.clone().into()),
            Val::Uninorm(u) => Ok(u.clone().into()),
            Val::Nullnorm(f) => Ok(f.clone().into()),
            other => Err(anyhow!("`{name}` is a {}, not a binary operator", other.type_name())),
        };
    }
    builtin(name, pol).ok_or_else(|| anyhow!("unknown operator `{name}` (built-ins: {})", BUILTINS.join(", ")))
}

pub fn export_csv(op: &dyn BinaryOp, n: usize) -> Result<String> {
    if n < 2 {
        bail!("grid needs n >= 2, got {n}");
    }
    let g = uniform_grid(n)?;
    let mut out = String::with_capacity(n * n * 24);
    out.push_str("x,y,value\n");
    for &x in &g {
        for &y in &g {
            writeln!(out, "{},{},{}", fmt_num(x), fmt_num(y), fmt_num(op.apply(x, y))).unwrap();
        }
    }
    Ok(out)
}

/// Parses CSV written by [`export_csv`] back into `(x, y, value)` rows.
pub fn parse_csv(text: &str) -> Result<Vec<(f64, f64, f64)>> {
    let mut lines = text.lines();
    if lines.next() != Some("x,y,value") {
        bail!("missing header");
    }
    lines
        .map(|l| {
            let f: Vec<f64> = l.split(',').map(str::parse).collect::<Result<_, _>>()?;
            match f[..] {
                [x, y, v] => Ok((x, y, v)),
                _ => Err(anyhow!("bad row `{l}`")),
            }
        })
        .collect()
}
