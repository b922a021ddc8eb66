use std::fmt::Write as _;
use std::time::{SystemTime, UNIX_EPOCH};

use anyhow::{bail, Result};
use msq_core::invariants::{self, compute};
use msq_core::{FieldCtx, InvariantKind, InvariantReport, QuadIdeal, SearchMode, SearchOptions};
use serde::{Deserialize, Serialize};

use crate::input::{Input, InputDescriptor};

pub const TOOL_VERSION: &str = concat!("msq ", env!("CARGO_PKG_VERSION"));

/// One computed invariant with everything needed to replay it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResultRecord {
    pub input: InputDescriptor,
    pub kind: InvariantKind,
    pub report: InvariantReport,
    pub seed: u64,
    pub prime: u32,
    pub trials: usize,
    pub mode: SearchMode,
    /// Seconds since the Unix epoch.
    pub timestamp: u64,
    pub version: String,
}

pub fn now() -> u64 {
    SystemTime::now().duration_since(UNIX_EPOCH).map(|d| d.as_secs()).unwrap_or(0)
}

/// Computes `ms` or `cs` of the input and wraps the report in a record.
pub fn run_invariant(ctx: &FieldCtx, input: &Input, kind: InvariantKind, trials: usize, mode: SearchMode) -> Result<ResultRecord> {
    let opts = SearchOptions { trials, alpha_hint: input.alpha_hint(), mode };
    let report = compute(ctx, kind, &input.ideal(), &opts)?;
    Ok(ResultRecord {
        input: input.descriptor.clone(),
        kind,
        report,
        seed: ctx.seed(),
        prime: ctx.p(),
        trials,
        mode,
        timestamp: now(),
        version: TOOL_VERSION.to_string(),
    })
}

impl ResultRecord {
    /// Checks the stored witness against `ideal` and the report's own
    /// consistency conditions.
    pub fn revalidate(&self, ideal: &QuadIdeal) -> Result<()> {
        let r = &self.report;
        let ctx = FieldCtx::with_options(self.prime as u64, self.seed, true)?;
        if r.kind != self.kind {
            bail!("record kind {:?} disagrees with report kind {:?}", self.kind, r.kind);
        }
        if r.n != ideal.n() {
            bail!("report is for n = {}, ideal has n = {}", r.n, ideal.n());
        }
        if !(r.lo <= r.hi && r.hi <= r.n) {
            bail!("inconsistent interval [{}, {}] for n = {}", r.lo, r.hi, r.n);
        }
        if let Some(v) = r.value {
            if v != r.lo || v != r.hi {
                bail!("exact value {v} outside [{}, {}]", r.lo, r.hi);
            }
        }
        if let Some(w) = &r.witness {
            if w.len() != r.hi {
                bail!("witness has {} forms but hi = {}", w.len(), r.hi);
            }
            if !invariants::check(&ctx, r.kind, ideal, w)? {
                bail!("stored witness does not pass the {} check", r.kind.name());
            }
        }
        Ok(())
    }

    pub fn exit_code(&self) -> i32 {
        if self.report.is_exact() {
            0
        } else {
            2
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("records serialize")
    }
}

/// Human-readable summary rendered from the same record as the JSON.
pub fn render_table(rec: &ResultRecord) -> String {
    let r = &rec.report;
    let c = &r.certification;
    let mut s = String::new();
    let _ = writeln!(s, "input      {}", rec.input.spec);
    for h in &rec.input.sha256 {
        let _ = writeln!(s, "sha256     {h}");
    }
    let value = match r.value {
        Some(v) => format!("{v} (exact)"),
        None => format!("[{}, {}]", r.lo, r.hi),
    };
    let _ = writeln!(s, "{:<10} {value}", r.kind.name());
    let _ = writeln!(s, "n          {}", r.n);
    for b in &r.bounds_used {
        let _ = writeln!(s, "bound      {} = {}", b.name, b.value);
    }
    let mode = match c.mode {
        SearchMode::Randomized => "randomized",
        SearchMode::Exhaustive => "exact-exhaustive",
    };
    let _ = writeln!(s, "mode       {mode} over GF({})", c.p);
    if let Some(b) = c.bound {
        let _ = writeln!(s, "per-trial  {}/{} ({:.3e}), T = {}", b.num, b.den, b.to_f64(), c.trials_per_level);
    }
    for (level, trials) in &c.levels_excluded {
        let _ = writeln!(s, "excluded   level {level} after {trials} tries");
    }
    if let Some(w) = &r.witness {
        let _ = writeln!(s, "witness    {} form(s)", w.len());
        for f in w {
            let _ = writeln!(s, "           {f}");
        }
    }
    let _ = writeln!(s, "seed       {}", rec.seed);
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::input::parse_input;

    #[test]
    fn cycle_record_round_trips() {
        let ctx = FieldCtx::new(32003, 4).unwrap();
        let input = parse_input(&ctx, "cycle:4").unwrap();
        let rec = run_invariant(&ctx, &input, InvariantKind::Ms, 50, SearchMode::Randomized).unwrap();
        assert_eq!(rec.report.value, Some(2));
        assert_eq!(rec.exit_code(), 0);
        let back: ResultRecord = serde_json::from_str(&rec.to_json()).unwrap();
        assert_eq!(back, rec);
        back.revalidate(&input.ideal()).unwrap();
        let table = render_table(&rec);
        assert!(table.contains("2 (exact)"));
    }

    #[test]
    fn tampered_witness_is_rejected() {
        let ctx = FieldCtx::new(32003, 4).unwrap();
        let input = parse_input(&ctx, "star:5").unwrap();
        let mut rec = run_invariant(&ctx, &input, InvariantKind::Cs, 50, SearchMode::Randomized).unwrap();
        rec.report.witness.as_mut().unwrap().pop();
        assert!(rec.revalidate(&input.ideal()).is_err());
    }
}
