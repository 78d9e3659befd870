//! Seeded round-trip fuzzing over random closed short-circuit terms.

use rand::Rng;
use serde::Serialize;

use crate::cp::decide_eq_cp;
use crate::error::Result;
use crate::evaltree::se;
use crate::gen;
use crate::inverse::g;
use crate::normalize::{classify, nf};
use crate::syntax::Term;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FuzzReport {
    pub seed: u64,
    pub count: usize,
    /// Normal forms in one of the three top-level categories.
    pub nf_shape: usize,
    /// `se(nf(P)) == se(P)`.
    pub se_preserved: usize,
    /// `g(se(nf(P))) == nf(P)`.
    pub inverse_round_trip: usize,
    /// Tree, normal-form and basic-form verdicts agree on `(P, Q)`.
    pub engines_agree: usize,
    pub equal_pairs: usize,
    /// Descriptions of up to ten failures.
    pub failures: Vec<String>,
}

impl FuzzReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

fn check_one(p: &Term, q: &Term, report: &mut FuzzReport) -> Result<Vec<String>> {
    let mut bad = vec![];
    let n = nf(p)?;
    let sp = se(p)?;
    if classify(&n).is_snf() {
        report.nf_shape += 1;
    } else {
        bad.push(format!("nf({p}) = {n} is not a normal form"));
    }
    let sn = se(&n)?;
    if sn == sp {
        report.se_preserved += 1;
    } else {
        bad.push(format!("se(nf({p})) differs from se({p})"));
    }
    match g(&sn) {
        Ok(back) if back == n => report.inverse_round_trip += 1,
        Ok(back) => bad.push(format!("g(se(nf({p}))) = {back}, expected {n}")),
        Err(e) => bad.push(format!("g(se(nf({p}))) failed: {e}")),
    }
    let by_tree = sp == se(q)?;
    let by_nf = n == nf(q)?;
    let by_cp = decide_eq_cp(p, q)?;
    if by_tree == by_nf && by_nf == by_cp {
        report.engines_agree += 1;
        report.equal_pairs += by_tree as usize;
    } else {
        bad.push(format!(
            "engines disagree on {p} vs {q}: tree {by_tree}, nf {by_nf}, cp {by_cp}"
        ));
    }
    Ok(bad)
}

/// Runs `count` cases from `seed`. Output depends only on the arguments.
pub fn run(count: usize, seed: u64) -> Result<FuzzReport> {
    let atoms = gen::atom_pool(3);
    let mut rng = gen::rng(seed);
    let mut report = FuzzReport {
        seed,
        count,
        nf_shape: 0,
        se_preserved: 0,
        inverse_round_trip: 0,
        engines_agree: 0,
        equal_pairs: 0,
        failures: vec![],
    };
    for _ in 0..count {
        let p = gen::scl_term(&mut rng, &atoms, 7);
        // About a third of the pairs are equal through double negation.
        let q = if rng.gen_ratio(1, 3) {
            Term::not(Term::not(p.clone()))
        } else {
            gen::scl_term(&mut rng, &atoms, 7)
        };
        let bad = check_one(&p, &q, &mut report)?;
        for b in bad {
            if report.failures.len() < 10 {
                report.failures.push(b);
            }
        }
    }
    Ok(report)
}
