mod common;

use common::OTree;
use scl_core::decompose::{
    cd, dd, enumerate_candidates, is_nondecomposable, tsd, witness, CandidateKind,
};
use scl_core::evaltree::{se, EvalTree};
use scl_core::gen;
use scl_core::normalize::Star;
use scl_core::syntax::{parse, Mode, Term};
use scl_core::Error;

#[derive(Clone, PartialEq, Debug)]
enum HTree {
    T,
    F,
    Hole,
    N(String, Box<HTree>, Box<HTree>),
}

impl HTree {
    fn text(&self) -> String {
        match self {
            HTree::T => "T".into(),
            HTree::F => "F".into(),
            HTree::Hole => "^".into(),
            HTree::N(a, l, r) => format!("({} <{a}> {})", l.text(), r.text()),
        }
    }

    fn leaves(&self, out: &mut [bool; 3]) {
        match self {
            HTree::T => out[0] = true,
            HTree::F => out[1] = true,
            HTree::Hole => out[2] = true,
            HTree::N(_, l, r) => {
                l.leaves(out);
                r.leaves(out);
            }
        }
    }
}

fn depth(x: &OTree) -> usize {
    match x {
        OTree::N(_, l, r) => 1 + depth(l).max(depth(r)),
        _ => 0,
    }
}

fn has(x: &OTree) -> (bool, bool) {
    match x {
        OTree::T => (true, false),
        OTree::F => (false, true),
        OTree::N(_, l, r) => {
            let (a, b) = has(l);
            let (c, d) = has(r);
            (a || c, b || d)
        }
    }
}

fn positions(x: &OTree, path: &mut Vec<bool>, out: &mut Vec<(Vec<bool>, OTree)>) {
    out.push((path.clone(), x.clone()));
    if let OTree::N(_, l, r) = x {
        path.push(false);
        positions(l, path, out);
        path.pop();
        path.push(true);
        positions(r, path, out);
        path.pop();
    }
}

fn punch(x: &OTree, path: &mut Vec<bool>, holes: &[Vec<bool>]) -> HTree {
    if holes.iter().any(|h| h == path) {
        return HTree::Hole;
    }
    match x {
        OTree::T => HTree::T,
        OTree::F => HTree::F,
        OTree::N(a, l, r) => {
            path.push(false);
            let l = punch(l, path, holes);
            path.pop();
            path.push(true);
            let r = punch(r, path, holes);
            path.pop();
            HTree::N(a.clone(), Box::new(l), Box::new(r))
        }
    }
}

/// Every `(Y, Z)` with `X = Y[^ -> Z]` and `Y` containing a hole, found by
/// trying every subset of the occurrences of every subtree.
fn all_decompositions(x: &OTree) -> Vec<(HTree, OTree)> {
    let mut pos = vec![];
    positions(x, &mut vec![], &mut pos);
    let mut cores: Vec<OTree> = vec![];
    for (_, z) in &pos {
        if !cores.contains(z) {
            cores.push(z.clone());
        }
    }
    let mut out = vec![];
    for z in cores {
        let occ: Vec<Vec<bool>> = pos
            .iter()
            .filter(|(_, s)| *s == z)
            .map(|(p, _)| p.clone())
            .collect();
        let n = occ.len();
        // Past ten occurrences only the full set and the sets missing one.
        let masks: Vec<u64> = if n <= 10 {
            (1..1u64 << n).collect()
        } else {
            let full = (1u64 << n) - 1;
            std::iter::once(full)
                .chain((0..n).map(|i| full & !(1 << i)))
                .collect()
        };
        for mask in masks {
            let chosen: Vec<Vec<bool>> = (0..n)
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| occ[i].clone())
                .collect();
            out.push((punch(x, &mut vec![], &chosen), z.clone()));
        }
    }
    out
}

fn nondecomposable(z: &OTree) -> bool {
    !all_decompositions(z).into_iter().any(|(u, _)| {
        let mut l = [false; 3];
        u.leaves(&mut l);
        u != HTree::Hole && !l[0] && !l[1]
    })
}

fn oracle(x: &OTree, kind: CandidateKind) -> Vec<(HTree, OTree)> {
    let mut found: Vec<(HTree, OTree)> = all_decompositions(x)
        .into_iter()
        .filter(|(y, z)| {
            let mut l = [false; 3];
            y.leaves(&mut l);
            let (zt, zf) = has(z);
            let core_ok = zt && zf;
            core_ok
                && match kind {
                    CandidateKind::Ccd => l[1] && !l[0],
                    CandidateKind::Cdd => l[0] && !l[1],
                    CandidateKind::Ctsd => !l[0] && !l[1] && nondecomposable(z),
                }
        })
        .collect();
    found.sort_by_key(|(_, z)| depth(z));
    found
}

/// The shallowest candidate, or `None`; panics on a tie.
fn oracle_select(x: &OTree, kind: CandidateKind) -> Option<(String, String)> {
    let c = oracle(x, kind);
    let first = c.first()?;
    let d = depth(&first.1);
    assert_eq!(
        c.iter().filter(|(_, z)| depth(z) == d).count(),
        1,
        "tie in {}",
        x.text()
    );
    Some((first.0.text(), first.1.text()))
}

fn lib_select(r: Option<scl_core::decompose::Decomposition>) -> Option<(String, String)> {
    r.map(|d| (d.context.to_string(), d.core.to_string()))
}

fn sample_trees() -> Vec<EvalTree> {
    let atoms = gen::atom_pool(2);
    let mut rng = gen::rng(31);
    let mut out: Vec<EvalTree> = (0..400).map(|_| gen::tree(&mut rng, &atoms, 4)).collect();
    for _ in 0..200 {
        let p = gen::star(&mut rng, &atoms, 2, gen::StarShape::Any);
        let x = se(&p.to_term()).unwrap();
        if x.size() <= 41 {
            out.push(x);
        }
        let t = gen::t_term(&mut rng, &atoms, 1);
        let l = gen::lit(&mut rng, &atoms);
        let x = se(&Term::and(t.to_term(), l.to_term())).unwrap();
        if x.size() <= 41 {
            out.push(x);
        }
    }
    out
}

#[test]
fn selectors_match_brute_force() {
    let mut nonempty = [0usize; 3];
    for x in sample_trees() {
        let o = OTree::of(&x);
        let want = [
            oracle_select(&o, CandidateKind::Ccd),
            oracle_select(&o, CandidateKind::Cdd),
            oracle_select(&o, CandidateKind::Ctsd),
        ];
        let got = [
            lib_select(cd(&x).unwrap()),
            lib_select(dd(&x).unwrap()),
            lib_select(tsd(&x).unwrap()),
        ];
        assert_eq!(got, want, "{x}");
        for (k, w) in want.iter().enumerate() {
            nonempty[k] += w.is_some() as usize;
        }
    }
    assert!(nonempty.iter().all(|&n| n >= 20), "{nonempty:?}");
}

#[test]
fn candidates_match_brute_force() {
    for x in sample_trees().into_iter().take(300) {
        let o = OTree::of(&x);
        for kind in [CandidateKind::Ccd, CandidateKind::Cdd, CandidateKind::Ctsd] {
            let mut want: Vec<(String, String)> = oracle(&o, kind)
                .iter()
                .map(|(y, z)| (y.text(), z.text()))
                .collect();
            let mut got: Vec<(String, String)> = enumerate_candidates(&x, kind)
                .iter()
                .map(|d| (d.context.to_string(), d.core.to_string()))
                .collect();
            want.sort();
            got.sort();
            assert_eq!(got, want, "{} of {x}", kind.name());
        }
        assert_eq!(is_nondecomposable(&x), nondecomposable(&o), "{x}");
    }
}

#[test]
fn decompositions_reconstruct_strictly() {
    let atoms = gen::atom_pool(3);
    let mut rng = gen::rng(32);
    for _ in 0..300 {
        let p = gen::star(&mut rng, &atoms, 3, gen::StarShape::Any);
        let x = se(&p.to_term()).unwrap();
        for kind in [CandidateKind::Ccd, CandidateKind::Cdd, CandidateKind::Ctsd] {
            for d in enumerate_candidates(&x, kind) {
                assert_eq!(d.reconstruct(), x);
                assert!(d.context.has_hole());
                if kind != CandidateKind::Ctsd {
                    assert_ne!(d.core, x);
                }
            }
        }
    }
}

#[test]
fn star_conjunctions_and_disjunctions_split_as_built() {
    let atoms = gen::atom_pool(3);
    let mut rng = gen::rng(33);
    for i in 0..300 {
        let conj = i % 2 == 0;
        let s = gen::compound_star(&mut rng, &atoms, 3, conj);
        let (p, q) = match &s {
            Star::Conj(p, q) | Star::Disj(p, q) => (p.to_term(), q.to_term()),
            Star::Lit(_) => unreachable!(),
        };
        let x = se(&s.to_term()).unwrap();
        let (sp, sq) = (se(&p).unwrap(), se(&q).unwrap());
        if conj {
            let d = cd(&x).unwrap().expect("conjunction decomposition");
            assert_eq!((d.context, d.core), (sp.hole_t(), sq));
            assert!(dd(&x).unwrap().is_none());
        } else {
            let d = dd(&x).unwrap().expect("disjunction decomposition");
            assert_eq!((d.context, d.core), (sp.hole_f(), sq));
            assert!(cd(&x).unwrap().is_none());
        }
        assert!(is_nondecomposable(&x));
    }
}

#[test]
fn t_star_terms_split_as_built() {
    let atoms = gen::atom_pool(3);
    let mut rng = gen::rng(34);
    for _ in 0..300 {
        let p = gen::t_term(&mut rng, &atoms, 3);
        let q = gen::star(&mut rng, &atoms, 3, gen::StarShape::Any);
        let x = se(&Term::and(p.to_term(), q.to_term())).unwrap();
        let d = tsd(&x).unwrap().expect("T-* decomposition");
        let sp = se(&p.to_term()).unwrap();
        assert_eq!(
            (d.context, d.core),
            (sp.hole_t(), se(&q.to_term()).unwrap())
        );
    }
}

#[test]
fn selectors_are_never_ambiguous() {
    let atoms = gen::atom_pool(2);
    let mut rng = gen::rng(35);
    for _ in 0..2000 {
        let x = gen::tree(&mut rng, &atoms, 6);
        for r in [cd(&x), dd(&x), tsd(&x)] {
            assert!(
                !matches!(r, Err(Error::AmbiguousDecomposition { .. })),
                "{x}"
            );
        }
    }
}

#[test]
fn deeper_t_term_example() {
    // Each branch of `a` repeats the same subtree.
    let p = parse(
        "(a && ((b && ((c && T) || T)) || ((d && T) || T))) || ((b && ((c && T) || T)) || ((d && T) || T))",
        Mode::Scl,
    )
    .unwrap();
    let q = parse("(e && T) || F", Mode::Scl).unwrap();
    let x = se(&Term::and(p.clone(), q.clone())).unwrap();
    let d = tsd(&x).unwrap().unwrap();
    assert_eq!(d.context, se(&p).unwrap().hole_t());
    assert_eq!(d.core, se(&q).unwrap());
    let branch = x.as_node().unwrap().1.clone();
    assert!(!is_nondecomposable(&branch));
    assert!(enumerate_candidates(&x, CandidateKind::Ctsd)
        .iter()
        .all(|c| c.core != branch));
}

#[test]
fn witness_is_the_last_literal() {
    let p = parse("((a && T) || F) && ((b && T) || F)", Mode::Scl).unwrap();
    assert_eq!(
        witness(&p).unwrap(),
        EvalTree::from_text("(T <b> F)").unwrap()
    );
    assert!(matches!(
        witness(&Term::atom("a")),
        Err(Error::NotStarTerm(_))
    ));
}
