//! Large randomized searches at a single level, streamed as JSON lines.
//!
//! Trial `k` at level `r` uses exactly the forms that the invariant search
//! would draw for trial `k` at level `r`, so a campaign can be resumed with
//! `offset` and the worker count never changes the output.

use std::io::Write;

use anyhow::{bail, Result};
use msq_core::invariants::{self, failure_bound, trial_forms};
use msq_core::{FieldCtx, InvariantKind, LinearForm, Ratio};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::input::{Input, InputDescriptor};
use crate::record::TOOL_VERSION;

const CHUNK: u64 = 4096;

#[derive(Debug, Clone, Copy)]
pub struct SearchConfig {
    pub kind: InvariantKind,
    pub level: usize,
    pub budget: u64,
    /// Index of the first trial.
    pub offset: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase")]
pub enum CampaignLine {
    Hit {
        input: InputDescriptor,
        kind: InvariantKind,
        level: usize,
        trial: u64,
        witness: Vec<LinearForm>,
    },
    Summary(CampaignSummary),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CampaignSummary {
    pub input: InputDescriptor,
    pub kind: InvariantKind,
    pub level: usize,
    pub offset: u64,
    pub trials: u64,
    pub hits: u64,
    pub first_hit: Option<u64>,
    /// Per-trial probability of missing an existing witness.
    pub bound: Ratio,
    pub seed: u64,
    pub prime: u32,
    pub version: String,
}

/// Runs `budget` trials and writes one line per hit followed by a summary
/// line. Lines are written in trial order from the calling thread.
pub fn run_search<W: Write>(ctx: &FieldCtx, input: &Input, cfg: &SearchConfig, out: &mut W) -> Result<CampaignSummary> {
    if cfg.budget == 0 {
        bail!("budget must be at least 1");
    }
    let ideal = input.ideal();
    let n = ideal.n();
    let mut hits = 0;
    let mut first_hit = None;
    let end = cfg.offset + cfg.budget;
    let mut start = cfg.offset;
    while start < end {
        let stop = (start + CHUNK * rayon::current_num_threads() as u64).min(end);
        let found: Vec<(u64, Vec<LinearForm>)> = (start..stop)
            .into_par_iter()
            .filter_map(|t| {
                let forms = trial_forms(ctx, n, cfg.level, t as usize);
                match invariants::check(ctx, cfg.kind, &ideal, &forms) {
                    Ok(true) => Some((t, forms)),
                    _ => None,
                }
            })
            .collect();
        for (trial, witness) in found {
            hits += 1;
            first_hit.get_or_insert(trial);
            let line = CampaignLine::Hit {
                input: input.descriptor.clone(),
                kind: cfg.kind,
                level: cfg.level,
                trial,
                witness,
            };
            writeln!(out, "{}", serde_json::to_string(&line)?)?;
        }
        start = stop;
    }
    let summary = CampaignSummary {
        input: input.descriptor.clone(),
        kind: cfg.kind,
        level: cfg.level,
        offset: cfg.offset,
        trials: cfg.budget,
        hits,
        first_hit,
        bound: failure_bound(cfg.kind, n, ctx.p()),
        seed: ctx.seed(),
        prime: ctx.p(),
        version: TOOL_VERSION.to_string(),
    };
    writeln!(out, "{}", serde_json::to_string(&CampaignLine::Summary(summary.clone()))?)?;
    out.flush()?;
    Ok(summary)
}

/// Scans levels `lo..=hi` and reports the first with a hit inside the budget.
pub fn first_hit_level<W: Write>(
    ctx: &FieldCtx,
    input: &Input,
    kind: InvariantKind,
    levels: std::ops::RangeInclusive<usize>,
    budget: u64,
    out: &mut W,
) -> Result<Option<usize>> {
    for level in levels {
        let s = run_search(ctx, input, &SearchConfig { kind, level, budget, offset: 0 }, out)?;
        if s.hits > 0 {
            return Ok(Some(level));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::input::parse_input;

    #[test]
    fn hits_and_summary() {
        let ctx = FieldCtx::new(32003, 2).unwrap();
        let input = parse_input(&ctx, "cycle:4").unwrap();
        let mut buf = Vec::new();
        let cfg = SearchConfig { kind: InvariantKind::Ms, level: 2, budget: 10, offset: 0 };
        let s = run_search(&ctx, &input, &cfg, &mut buf).unwrap();
        assert_eq!(s.hits, 10);
        let lines: Vec<CampaignLine> =
            String::from_utf8(buf).unwrap().lines().map(|l| serde_json::from_str(l).unwrap()).collect();
        assert_eq!(lines.len(), 11);
        assert!(matches!(lines.last(), Some(CampaignLine::Summary(_))));
        let cfg = SearchConfig { level: 1, ..cfg };
        assert_eq!(run_search(&ctx, &input, &cfg, &mut Vec::new()).unwrap().hits, 0);
    }

    #[test]
    fn offsets_partition_a_campaign() {
        let ctx = FieldCtx::new(7, 2).unwrap();
        let input = parse_input(&ctx, "path:4").unwrap();
        let cfg = SearchConfig { kind: InvariantKind::Ms, level: 2, budget: 300, offset: 0 };
        let mut whole = Vec::new();
        run_search(&ctx, &input, &cfg, &mut whole).unwrap();
        let mut parts = Vec::new();
        run_search(&ctx, &input, &SearchConfig { budget: 120, ..cfg }, &mut parts).unwrap();
        run_search(&ctx, &input, &SearchConfig { budget: 180, offset: 120, ..cfg }, &mut parts).unwrap();
        let hits = |b: &[u8]| -> Vec<String> {
            String::from_utf8(b.to_vec()).unwrap().lines().filter(|l| l.contains("\"hit\"")).map(String::from).collect()
        };
        assert_eq!(hits(&whole), hits(&parts));
        assert!(!hits(&whole).is_empty());
    }
}
