//! Seeded random generators. All randomized checks in the crate draw from
//! these.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::evaltree::EvalTree;
use crate::normalize::{FTerm, Lit, Snf, Star, TTerm};
use crate::syntax::{Atom, Substitution, Term, Var};

pub type GenRng = ChaCha8Rng;

pub fn rng(seed: u64) -> GenRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `a`, `b`, ... as atoms.
pub fn atom_pool(n: usize) -> Vec<Atom> {
    (0..n)
        .map(|i| Atom::new(&((b'a' + i as u8) as char).to_string()).expect("valid atom"))
        .collect()
}

fn pick(rng: &mut GenRng, atoms: &[Atom]) -> Atom {
    atoms.choose(rng).expect("nonempty atom pool").clone()
}

/// Leaf probability grows with depth so that evaluation trees stay small.
fn stop(rng: &mut GenRng, depth: usize, max_depth: usize) -> bool {
    depth >= max_depth || rng.gen_bool((0.25 + 0.12 * depth as f64).min(1.0))
}

fn constant_or_atom(rng: &mut GenRng, atoms: &[Atom]) -> Term {
    match rng.gen_range(0..6) {
        0 => Term::True,
        1 => Term::False,
        _ => Term::Atom(pick(rng, atoms)),
    }
}

/// A closed short-circuit term of depth at most `max_depth`.
pub fn scl_term(rng: &mut GenRng, atoms: &[Atom], max_depth: usize) -> Term {
    fn go(rng: &mut GenRng, atoms: &[Atom], depth: usize, max: usize) -> Term {
        if stop(rng, depth, max) {
            return constant_or_atom(rng, atoms);
        }
        match rng.gen_range(0..5) {
            0 => Term::not(go(rng, atoms, depth + 1, max)),
            1 | 2 => Term::and(
                go(rng, atoms, depth + 1, max),
                go(rng, atoms, depth + 1, max),
            ),
            _ => Term::or(
                go(rng, atoms, depth + 1, max),
                go(rng, atoms, depth + 1, max),
            ),
        }
    }
    go(rng, atoms, 0, max_depth)
}

/// A closed conditional term.
pub fn cp_term(rng: &mut GenRng, atoms: &[Atom], max_depth: usize) -> Term {
    fn go(rng: &mut GenRng, atoms: &[Atom], depth: usize, max: usize) -> Term {
        if stop(rng, depth + 1, max) {
            return constant_or_atom(rng, atoms);
        }
        Term::cond(
            go(rng, atoms, depth + 1, max),
            go(rng, atoms, depth + 1, max),
            go(rng, atoms, depth + 1, max),
        )
    }
    go(rng, atoms, 0, max_depth)
}

/// A random evaluation tree of depth at most `max_depth`.
pub fn tree(rng: &mut GenRng, atoms: &[Atom], max_depth: usize) -> EvalTree {
    if max_depth == 0 || rng.gen_bool(0.3) {
        return if rng.gen_bool(0.5) {
            EvalTree::T
        } else {
            EvalTree::F
        };
    }
    EvalTree::node(
        pick(rng, atoms),
        tree(rng, atoms, max_depth - 1),
        tree(rng, atoms, max_depth - 1),
    )
}

pub fn t_term(rng: &mut GenRng, atoms: &[Atom], max_depth: usize) -> TTerm {
    if max_depth == 0 || rng.gen_bool(0.5) {
        return TTerm::T;
    }
    TTerm::node(
        pick(rng, atoms),
        t_term(rng, atoms, max_depth - 1),
        t_term(rng, atoms, max_depth - 1),
    )
}

pub fn f_term(rng: &mut GenRng, atoms: &[Atom], max_depth: usize) -> FTerm {
    if max_depth == 0 || rng.gen_bool(0.5) {
        return FTerm::F;
    }
    FTerm::node(
        pick(rng, atoms),
        f_term(rng, atoms, max_depth - 1),
        f_term(rng, atoms, max_depth - 1),
    )
}

pub fn lit(rng: &mut GenRng, atoms: &[Atom]) -> Lit {
    Lit::new(
        rng.gen_bool(0.5),
        pick(rng, atoms),
        t_term(rng, atoms, 2),
        f_term(rng, atoms, 2),
    )
}

/// Which *-terms [`star`] may produce at the top.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum StarShape {
    Any,
    /// A literal or a conjunction.
    C,
    /// A literal or a disjunction.
    D,
}

pub fn star(rng: &mut GenRng, atoms: &[Atom], max_depth: usize, shape: StarShape) -> Star {
    if max_depth == 0 || rng.gen_bool(0.35) {
        return Star::Lit(lit(rng, atoms));
    }
    let conj = match shape {
        StarShape::Any => rng.gen_bool(0.5),
        StarShape::C => true,
        StarShape::D => false,
    };
    let left = star(rng, atoms, max_depth - 1, StarShape::Any);
    if conj {
        let right = star(rng, atoms, max_depth - 1, StarShape::D);
        Star::conj(left, right).expect("d-shaped right operand")
    } else {
        let right = star(rng, atoms, max_depth - 1, StarShape::C);
        Star::disj(left, right).expect("c-shaped right operand")
    }
}

/// A *-term that is a conjunction (`conj`) or a disjunction of *-terms.
pub fn compound_star(rng: &mut GenRng, atoms: &[Atom], max_depth: usize, conj: bool) -> Star {
    let left = star(rng, atoms, max_depth.saturating_sub(1), StarShape::Any);
    if conj {
        let right = star(rng, atoms, max_depth.saturating_sub(1), StarShape::D);
        Star::conj(left, right).expect("d-shaped right operand")
    } else {
        let right = star(rng, atoms, max_depth.saturating_sub(1), StarShape::C);
        Star::disj(left, right).expect("c-shaped right operand")
    }
}

/// A normal form, evenly split between the three top-level categories.
pub fn snf(rng: &mut GenRng, atoms: &[Atom]) -> Snf {
    match rng.gen_range(0..3) {
        0 => Snf::T(t_term(rng, atoms, 3)),
        1 => Snf::F(f_term(rng, atoms, 3)),
        _ => Snf::TStar(t_term(rng, atoms, 2), star(rng, atoms, 3, StarShape::Any)),
    }
}

/// Maps each variable to a random closed short-circuit term.
pub fn substitution<'a>(
    rng: &mut GenRng,
    vars: impl IntoIterator<Item = &'a Var>,
    atoms: &[Atom],
    max_depth: usize,
) -> Substitution {
    let mut sigma = Substitution::new();
    for v in vars {
        sigma
            .insert(v.clone(), scl_term(rng, atoms, max_depth))
            .expect("generated terms are closed");
    }
    sigma
}

/// Name of the variable marking the hole of [`context`].
pub const HOLE_VAR: &str = "hole";

/// A short-circuit term with exactly one occurrence of `$hole`.
pub fn context(rng: &mut GenRng, atoms: &[Atom], max_depth: usize) -> Term {
    if max_depth == 0 || rng.gen_bool(0.3) {
        return Term::var(HOLE_VAR);
    }
    let inner = context(rng, atoms, max_depth - 1);
    let other = scl_term(rng, atoms, 2);
    match rng.gen_range(0..5) {
        0 => Term::not(inner),
        1 => Term::and(inner, other),
        2 => Term::and(other, inner),
        3 => Term::or(inner, other),
        _ => Term::or(other, inner),
    }
}
