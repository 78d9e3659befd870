mod common;

use common::{se_oracle, OTree};
use scl_core::cp::{basic_form, basic_of, compose, decide_eq_cp, scl_to_cp, tree_of, BasicForm};
use scl_core::evaltree::se;
use scl_core::gen;
use scl_core::models::valid_in_free_model;
use scl_core::normalize::{decide_eq, Engine};
use scl_core::syntax::{cp_axioms, parse, rp_schemes, Mode, Term};

fn p(s: &str) -> Term {
    parse(s, Mode::Enriched).unwrap()
}

#[test]
fn translation_preserves_trees() {
    let atoms = gen::atom_pool(3);
    let mut rng = gen::rng(51);
    for _ in 0..500 {
        let t = gen::scl_term(&mut rng, &atoms, 6);
        let c = scl_to_cp(&t);
        assert!(c.is_cp());
        assert_eq!(se(&c).unwrap(), se(&t).unwrap());
        assert_eq!(OTree::of(&tree_of(&basic_form(&c).unwrap())), se_oracle(&t));
    }
    assert_eq!(scl_to_cp(&p("!a")), p("F <| a |> T"));
    assert_eq!(scl_to_cp(&p("a && b")), p("b <| a |> F"));
    assert_eq!(scl_to_cp(&p("a || b")), p("T <| a |> b"));
}

#[test]
fn basic_forms_agree_with_trees() {
    let atoms = gen::atom_pool(3);
    let mut rng = gen::rng(52);
    for _ in 0..500 {
        let c = gen::cp_term(&mut rng, &atoms, 5);
        let b = basic_form(&c).unwrap();
        let x = se(&c).unwrap();
        assert_eq!(b, basic_of(&x));
        assert_eq!(tree_of(&b), x);
        assert_eq!(BasicForm::from_term(&b.to_term()), Some(b.clone()));
        assert_eq!(basic_form(&b.to_term()).unwrap(), b);
    }
    assert_eq!(
        basic_of(&se(&p("F <| a |> T")).unwrap()),
        basic_form(&p("F <| a |> T")).unwrap()
    );
}

#[test]
fn compose_matches_replacement() {
    let atoms = gen::atom_pool(2);
    let mut rng = gen::rng(53);
    for _ in 0..300 {
        let [x, y, z] = [0, 1, 2].map(|_| basic_of(&gen::tree(&mut rng, &atoms, 3)));
        let want = se(&Term::cond(x.to_term(), y.to_term(), z.to_term())).unwrap();
        assert_eq!(tree_of(&compose(&x, &y, &z)), want);
    }
}

#[test]
fn completeness_and_injectivity() {
    let atoms = gen::atom_pool(2);
    let mut rng = gen::rng(54);
    let mut equal = 0;
    for _ in 0..1000 {
        let a = gen::cp_term(&mut rng, &atoms, 4);
        let b = gen::cp_term(&mut rng, &atoms, 4);
        let same_bf = basic_form(&a).unwrap() == basic_form(&b).unwrap();
        let same_tree = se(&a).unwrap() == se(&b).unwrap();
        assert_eq!(same_bf, same_tree, "{a} vs {b}");
        equal += same_tree as usize;
    }
    assert!(equal > 0);
}

#[test]
fn closed_correspondence() {
    let atoms = gen::atom_pool(2);
    let mut rng = gen::rng(55);
    for _ in 0..500 {
        let a = gen::scl_term(&mut rng, &atoms, 5);
        let b = gen::scl_term(&mut rng, &atoms, 5);
        let cp = decide_eq_cp(&a, &b).unwrap();
        assert_eq!(decide_eq(&a, &b, Engine::Tree).unwrap(), cp);
        assert_eq!(decide_eq(&a, &b, Engine::Nf).unwrap(), cp);
    }
    assert!(decide_eq_cp(&p("!!a"), &p("a")).unwrap());
    assert!(decide_eq_cp(&p("(a && F) || b"), &p("(a || T) && b")).unwrap());
    assert!(!decide_eq_cp(&p("a"), &p("!a")).unwrap());
}

#[test]
fn cp_axioms_hold() {
    for (k, e) in cp_axioms().iter().enumerate() {
        let r = valid_in_free_model(e, 500, 60 + k as u64).unwrap();
        assert!(
            r.holds,
            "{} fails under {:?}",
            e.tag,
            r.witness.map(|w| w.to_string())
        );
        assert_eq!(r.checked, 500);
    }
}

#[test]
fn repetition_proof_schemes_fail() {
    let atoms = gen::atom_pool(2);
    for (k, e) in rp_schemes(&atoms).iter().enumerate() {
        let r = valid_in_free_model(e, 500, 70 + k as u64).unwrap();
        assert!(!r.holds, "{}", e.tag);
        assert!(r.witness.is_some());
    }
    let l = se(&p("a && (a || b)")).unwrap();
    let r = se(&p("a && a")).unwrap();
    assert_ne!(l, r);
    assert_eq!(l.to_string(), "((T <a> (T <b> F)) <a> F)");
    assert_eq!(r.to_string(), "((T <a> F) <a> F)");
}
