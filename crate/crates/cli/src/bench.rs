//! Timing of the normal-form pipeline on random signed words.

use std::fmt::Write as _;
use std::time::Instant;

use anyhow::{bail, Result};
use posbraid::braidword::{BraidWord, Letter};
use posbraid::garside3::{classify_family, conjugate_to_lambda, normal_form};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use crate::RunReport;

/// Slack over exact proportionality allowed before the scaling check fails.
const SLACK: f64 = 1.25;

pub fn random_signed_word(len: usize, rng: &mut impl Rng) -> BraidWord {
    let letters = (0..len)
        .map(|_| {
            let g = rng.gen_range(1..=2);
            if rng.gen_bool(0.5) {
                Letter::pos(g)
            } else {
                Letter::neg(g)
            }
        })
        .collect();
    BraidWord::new(3, letters).expect("3-strand letters")
}

fn time_once(w: &BraidWord) -> f64 {
    let start = Instant::now();
    let nf = normal_form(w).expect("3-strand word");
    let rep = conjugate_to_lambda(&nf);
    // negative summit infimum is the common case for random words
    let _ = classify_family(&rep.rep);
    start.elapsed().as_secs_f64() * 1e3
}

fn median(mut v: Vec<f64>) -> f64 {
    v.sort_by(|a, b| a.total_cmp(b));
    v[v.len() / 2]
}

pub fn run(lengths: &[usize], trials: usize, seed: u64) -> Result<RunReport> {
    if lengths.is_empty() || trials == 0 {
        bail!("need at least one length and one trial");
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut rows = Vec::new();
    let mut text = String::from("length       median ms    min ms\n");
    for &len in lengths {
        let times: Vec<f64> = (0..trials).map(|_| time_once(&random_signed_word(len, &mut rng))).collect();
        let min = times.iter().copied().fold(f64::INFINITY, f64::min);
        let med = median(times);
        let _ = writeln!(text, "{len:<12} {med:<12.3} {min:.3}");
        rows.push(json!({ "length": len, "median_ms": med, "min_ms": min }));
    }
    let mut failures = Vec::new();
    let mut out = json!({ "trials": trials, "seed": seed, "rows": rows });
    // smallest positive length against the largest
    let lo = (0..lengths.len()).filter(|&k| lengths[k] > 0).min_by_key(|&k| lengths[k]);
    let hi = (0..lengths.len()).max_by_key(|&k| lengths[k]).expect("nonempty");
    if let Some(lo) = lo.filter(|&lo| lengths[hi] > lengths[lo]) {
        let (l1, l2) = (lengths[lo], lengths[hi]);
        let m = |k: usize| out["rows"][k]["median_ms"].as_f64().unwrap();
        let ratio = m(hi) / m(lo);
        let limit = SLACK * l2 as f64 / l1 as f64;
        let _ = writeln!(text, "ratio t({l2})/t({l1}) = {ratio:.2} (limit {limit:.2})");
        if ratio > limit {
            failures.push(format!("ratio {ratio:.2} above {limit:.2}"));
        }
        out["ratio"] = json!(ratio);
        out["ratio_limit"] = json!(limit);
    }
    let input = lengths.iter().map(|l| l.to_string()).collect::<Vec<_>>().join(",");
    Ok(RunReport::new("bench", &input, out, text).with_verdict(failures))
}
