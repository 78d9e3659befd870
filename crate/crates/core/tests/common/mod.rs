#![allow(dead_code)]

use std::collections::BTreeMap;

use scl_core::evaltree::EvalTree;
use scl_core::syntax::Term;

/// Plain owned tree, independent of the library's shared representation.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum OTree {
    T,
    F,
    N(String, Box<OTree>, Box<OTree>),
}

impl OTree {
    pub fn text(&self) -> String {
        match self {
            OTree::T => "T".into(),
            OTree::F => "F".into(),
            OTree::N(a, l, r) => format!("({} <{a}> {})", l.text(), r.text()),
        }
    }

    pub fn of(x: &EvalTree) -> OTree {
        match x.as_node() {
            None if *x == EvalTree::T => OTree::T,
            None => OTree::F,
            Some((a, l, r)) => OTree::N(
                a.name().into(),
                Box::new(OTree::of(l)),
                Box::new(OTree::of(r)),
            ),
        }
    }
}

/// Evaluation by continuation passing: `run(P, k_t, k_f)` is the tree that
/// evaluates `P` and continues with `k_t` on true and `k_f` on false.
pub fn cps(p: &Term, kt: &OTree, kf: &OTree) -> OTree {
    match p {
        Term::True => kt.clone(),
        Term::False => kf.clone(),
        Term::Atom(a) => OTree::N(a.name().into(), Box::new(kt.clone()), Box::new(kf.clone())),
        Term::Not(x) => cps(x, kf, kt),
        Term::And(x, y) => cps(x, &cps(y, kt, kf), kf),
        Term::Or(x, y) => cps(x, kt, &cps(y, kt, kf)),
        Term::Cond(x, y, z) => cps(y, &cps(x, kt, kf), &cps(z, kt, kf)),
        Term::FullAnd(x, y) => {
            // Evaluate x, then y in both cases; false if either was false.
            cps(x, &cps(y, kt, kf), &cps(y, kf, kf))
        }
        Term::FullOr(x, y) => cps(x, &cps(y, kt, kt), &cps(y, kt, kf)),
        Term::Var(_) => panic!("open term"),
    }
}

pub fn se_oracle(p: &Term) -> OTree {
    cps(p, &OTree::T, &OTree::F)
}

/// Direct table evaluation for finite models.
pub struct Tables {
    pub neg: Vec<usize>,
    pub and: Vec<Vec<usize>>,
    pub or: Vec<Vec<usize>>,
    pub atoms: BTreeMap<String, usize>,
}

pub fn eval_tables(m: &Tables, t: &Term, rho: &BTreeMap<String, usize>) -> usize {
    match t {
        Term::True => 1,
        Term::False => 0,
        Term::Atom(a) => m.atoms[a.name()],
        Term::Var(v) => rho[v.name()],
        Term::Not(x) => m.neg[eval_tables(m, x, rho)],
        Term::And(x, y) => m.and[eval_tables(m, x, rho)][eval_tables(m, y, rho)],
        Term::Or(x, y) => m.or[eval_tables(m, x, rho)][eval_tables(m, y, rho)],
        _ => panic!("unsupported node"),
    }
}

/// All assignments of `vars` over `0..n`, in lexicographic order.
pub fn assignments(vars: &[String], n: usize) -> Vec<BTreeMap<String, usize>> {
    let mut out = vec![BTreeMap::new()];
    for v in vars {
        out = out
            .into_iter()
            .flat_map(|rho| {
                (0..n).map(move |d| {
                    let mut r = rho.clone();
                    r.insert(v.clone(), d);
                    r
                })
            })
            .collect();
    }
    out
}
