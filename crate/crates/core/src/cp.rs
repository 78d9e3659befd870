//! Conditional terms: basic forms and the translation of the short-circuit
//! connectives into the conditional.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::evaltree::{EvalTree, DEFAULT_CAP};
use crate::syntax::{expand_full, Atom, Term};

/// `T`, `F` or `t <| a |> t'` for basic forms `t`, `t'`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum BasicForm {
    T,
    F,
    Node(Arc<BfNode>),
}

#[derive(PartialEq, Eq, Hash)]
pub struct BfNode {
    pub atom: Atom,
    pub then: BasicForm,
    pub otherwise: BasicForm,
    /// (internal nodes, T leaves, F leaves)
    counts: (u128, u128, u128),
}

impl BasicForm {
    pub fn node(atom: Atom, then: BasicForm, otherwise: BasicForm) -> BasicForm {
        let (a, b) = (then.counts(), otherwise.counts());
        BasicForm::Node(Arc::new(BfNode {
            counts: (1 + a.0 + b.0, a.1 + b.1, a.2 + b.2),
            atom,
            then,
            otherwise,
        }))
    }

    fn counts(&self) -> (u128, u128, u128) {
        match self {
            BasicForm::T => (0, 1, 0),
            BasicForm::F => (0, 0, 1),
            BasicForm::Node(n) => n.counts,
        }
    }

    pub fn size(&self) -> u128 {
        let (i, t, f) = self.counts();
        i + t + f
    }

    pub fn to_term(&self) -> Term {
        match self {
            BasicForm::T => Term::True,
            BasicForm::F => Term::False,
            BasicForm::Node(n) => Term::cond(
                n.then.to_term(),
                Term::Atom(n.atom.clone()),
                n.otherwise.to_term(),
            ),
        }
    }

    /// The basic form if `t` already is one.
    pub fn from_term(t: &Term) -> Option<BasicForm> {
        match t {
            Term::True => Some(BasicForm::T),
            Term::False => Some(BasicForm::F),
            Term::Cond(x, y, z) => match &**y {
                Term::Atom(a) => Some(BasicForm::node(
                    a.clone(),
                    BasicForm::from_term(x)?,
                    BasicForm::from_term(z)?,
                )),
                _ => None,
            },
            _ => None,
        }
    }
}

impl fmt::Display for BasicForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_term())
    }
}

impl fmt::Debug for BasicForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_term())
    }
}

/// The basic form of `p <| q |> r` for basic `p`, `q`, `r`.
pub fn compose(p: &BasicForm, q: &BasicForm, r: &BasicForm) -> BasicForm {
    match q {
        BasicForm::T => p.clone(),
        BasicForm::F => r.clone(),
        BasicForm::Node(n) => BasicForm::node(
            n.atom.clone(),
            compose(p, &n.then, r),
            compose(p, &n.otherwise, r),
        ),
    }
}

fn compose_capped(p: &BasicForm, q: &BasicForm, r: &BasicForm, cap: usize) -> Result<BasicForm> {
    let (i, t, f) = q.counts();
    let size = i + t * p.size() + f * r.size();
    if size > cap as u128 {
        return Err(Error::TreeTooLarge { size, cap });
    }
    Ok(compose(p, q, r))
}

/// The basic form of a closed conditional term.
pub fn basic_form(p: &Term) -> Result<BasicForm> {
    basic_form_with_cap(p, DEFAULT_CAP)
}

pub fn basic_form_with_cap(p: &Term, cap: usize) -> Result<BasicForm> {
    p.require_closed()?;
    p.check_mode(crate::syntax::Mode::Cp)?;
    bf_rec(p, cap)
}

fn bf_rec(p: &Term, cap: usize) -> Result<BasicForm> {
    match p {
        Term::True => Ok(BasicForm::T),
        Term::False => Ok(BasicForm::F),
        Term::Atom(a) => Ok(BasicForm::node(a.clone(), BasicForm::T, BasicForm::F)),
        Term::Cond(x, y, z) => {
            let (x, y, z) = (bf_rec(x, cap)?, bf_rec(y, cap)?, bf_rec(z, cap)?);
            compose_capped(&x, &y, &z, cap)
        }
        _ => Err(Error::mode("short-circuit connective", "basic forms")),
    }
}

pub fn tree_of(b: &BasicForm) -> EvalTree {
    match b {
        BasicForm::T => EvalTree::T,
        BasicForm::F => EvalTree::F,
        BasicForm::Node(n) => {
            EvalTree::node(n.atom.clone(), tree_of(&n.then), tree_of(&n.otherwise))
        }
    }
}

pub fn basic_of(x: &EvalTree) -> BasicForm {
    match x.as_node() {
        None if *x == EvalTree::T => BasicForm::T,
        None => BasicForm::F,
        Some((a, l, r)) => BasicForm::node(a.clone(), basic_of(l), basic_of(r)),
    }
}

/// Rewrites `!x` to `F <| x |> T`, `x && y` to `y <| x |> F` and `x || y` to
/// `T <| x |> y`, after expanding full connectives.
pub fn scl_to_cp(p: &Term) -> Term {
    fn go(p: &Term) -> Term {
        match p {
            Term::Not(x) => Term::cond(Term::False, go(x), Term::True),
            Term::And(x, y) => Term::cond(go(y), go(x), Term::False),
            Term::Or(x, y) => Term::cond(Term::True, go(x), go(y)),
            Term::Cond(x, y, z) => Term::cond(go(x), go(y), go(z)),
            Term::FullAnd(..) | Term::FullOr(..) => unreachable!("expanded"),
            leaf => leaf.clone(),
        }
    }
    go(&expand_full(p))
}

/// Equality of basic forms after translating to the conditional.
pub fn decide_eq_cp(p: &Term, q: &Term) -> Result<bool> {
    Ok(basic_form(&scl_to_cp(p))? == basic_form(&scl_to_cp(q))?)
}
