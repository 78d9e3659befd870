mod common;

use common::{se_oracle, OTree};
use rand::Rng;
use scl_core::evaltree::{
    replace, replace_capped, replaced_size, se, se_with_cap, EvalTree, HoleTree,
};
use scl_core::gen::{self, GenRng, HOLE_VAR};
use scl_core::syntax::{expand_full, substitute, Atom, Substitution, Term};
use scl_core::Error;

fn enriched(rng: &mut GenRng, atoms: &[Atom], depth: usize) -> Term {
    if depth == 0 || rng.gen_bool(0.3) {
        return gen::scl_term(rng, atoms, 1);
    }
    let k = rng.gen_range(0..6);
    let mut sub = || enriched(rng, atoms, depth - 1);
    match k {
        0 => Term::not(sub()),
        1 => Term::and(sub(), sub()),
        2 => Term::or(sub(), sub()),
        3 => Term::full_and(sub(), sub()),
        4 => Term::full_or(sub(), sub()),
        _ => Term::cond(sub(), sub(), sub()),
    }
}

#[test]
fn se_agrees_with_continuation_oracle() {
    let atoms = gen::atom_pool(3);
    let mut rng = gen::rng(11);
    for _ in 0..1000 {
        let p = gen::scl_term(&mut rng, &atoms, 7);
        assert_eq!(OTree::of(&se(&p).unwrap()), se_oracle(&p), "{p}");
        let c = gen::cp_term(&mut rng, &atoms, 5);
        assert_eq!(OTree::of(&se(&c).unwrap()), se_oracle(&c), "{c}");
    }
}

#[test]
fn full_connectives_evaluate_both_sides() {
    let atoms = gen::atom_pool(3);
    let mut rng = gen::rng(12);
    for _ in 0..500 {
        let p = enriched(&mut rng, &atoms, 4);
        let t = se(&expand_full(&p)).unwrap();
        assert_eq!(OTree::of(&t), se_oracle(&p), "{p}");
    }
    let p = Term::full_and(Term::atom("a"), Term::atom("b"));
    assert_eq!(
        se(&expand_full(&p)).unwrap().to_string(),
        "((T <b> F) <a> (F <b> F))"
    );
    assert!(matches!(se(&p), Err(Error::ModeViolation { .. })));
}

#[test]
fn connectives_match_conditional_translations() {
    let atoms = gen::atom_pool(3);
    let mut rng = gen::rng(13);
    for _ in 0..300 {
        let p = gen::scl_term(&mut rng, &atoms, 5);
        let q = gen::scl_term(&mut rng, &atoms, 5);
        let s = |t: &Term| se(t).unwrap();
        assert_eq!(
            s(&Term::not(p.clone())),
            s(&Term::cond(Term::False, p.clone(), Term::True))
        );
        assert_eq!(
            s(&Term::and(p.clone(), q.clone())),
            s(&Term::cond(q.clone(), p.clone(), Term::False))
        );
        assert_eq!(
            s(&Term::or(p.clone(), q.clone())),
            s(&Term::cond(Term::True, p.clone(), q.clone()))
        );
    }
}

#[test]
fn replacement_laws() {
    let atoms = gen::atom_pool(3);
    let mut rng = gen::rng(14);
    for _ in 0..300 {
        let x = gen::tree(&mut rng, &atoms, 5);
        let y = gen::tree(&mut rng, &atoms, 3);
        let z = gen::tree(&mut rng, &atoms, 3);
        let u = gen::tree(&mut rng, &atoms, 2);
        let v = gen::tree(&mut rng, &atoms, 2);
        assert_eq!(replace(&x, &EvalTree::T, &EvalTree::F), x);
        assert_eq!(
            replace(&replace(&x, &y, &z), &u, &v),
            replace(&x, &replace(&y, &u, &v), &replace(&z, &u, &v))
        );
        let r = replace(&x, &y, &z);
        assert_eq!(replaced_size(&x, &y, &z), r.size() as u128);
        assert_eq!(x.hole_t().fill(&EvalTree::T), x);
        assert_eq!(x.hole_f().fill(&EvalTree::F), x);
        assert_eq!(x.hole_t().fill(&y), replace(&x, &y, &EvalTree::F));
        assert_eq!(x.holed().to_eval(), Some(x.clone()));
    }
}

#[test]
fn grafting_is_associative() {
    let atoms = gen::atom_pool(2);
    let mut rng = gen::rng(15);
    for _ in 0..200 {
        let a = gen::tree(&mut rng, &atoms, 3).hole_t();
        let b = gen::tree(&mut rng, &atoms, 3).hole_f();
        let c = gen::tree(&mut rng, &atoms, 3);
        assert_eq!(a.graft(&b).fill(&c), a.fill(&b.fill(&c)));
        assert_eq!(a.graft(&HoleTree::HOLE), a);
        assert_eq!(HoleTree::HOLE.graft(&a), a);
    }
}

#[test]
fn equality_is_a_congruence() {
    let atoms = gen::atom_pool(3);
    let mut rng = gen::rng(16);
    for _ in 0..300 {
        let p = gen::scl_term(&mut rng, &atoms, 4);
        let q = Term::not(Term::not(p.clone()));
        let ctx = gen::context(&mut rng, &atoms, 4);
        let fill = |t: &Term| {
            let sigma = Substitution::new().with(HOLE_VAR, t.clone());
            se(&substitute(&ctx, &sigma).unwrap()).unwrap()
        };
        assert_eq!(fill(&p), fill(&q));
    }
}

#[test]
fn text_and_json_round_trip() {
    let atoms = gen::atom_pool(3);
    let mut rng = gen::rng(17);
    for _ in 0..300 {
        let x = gen::tree(&mut rng, &atoms, 6);
        assert_eq!(EvalTree::from_text(&x.to_string()).unwrap(), x);
        assert_eq!(EvalTree::from_json(&x.to_json()).unwrap(), x);
        assert_eq!(EvalTree::read(&x.to_json().to_string()).unwrap(), x);
        let h = x.hole_f();
        assert_eq!(HoleTree::from_text(&h.to_string()).unwrap(), h);
    }
    assert!(matches!(
        EvalTree::from_text("(T <a> F"),
        Err(Error::Syntax { .. })
    ));
    assert!(matches!(
        EvalTree::from_text("(T <a> ^)"),
        Err(Error::Syntax { .. })
    ));
}

#[test]
fn size_cap_is_enforced() {
    let ab = Term::or(Term::atom("a"), Term::atom("b"));
    let p = (0..25).fold(ab.clone(), |acc, _| Term::and(acc, ab.clone()));
    assert!(matches!(se(&p), Err(Error::TreeTooLarge { .. })));
    let x = se(&Term::atom("a")).unwrap();
    assert!(matches!(
        replace_capped(&x, &x, &x, 6),
        Err(Error::TreeTooLarge { size: 7, cap: 6 })
    ));
    assert!(se_with_cap(&Term::and(Term::atom("a"), Term::atom("b")), 5).is_ok());
}

#[test]
fn open_terms_are_rejected() {
    let p = Term::and(Term::atom("a"), Term::var("x"));
    assert!(matches!(se(&p), Err(Error::NonClosedTerm(_))));
}
