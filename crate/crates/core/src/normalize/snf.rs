use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::syntax::{Atom, Term};

/// `T` or `(a && P) || Q` with `P`, `Q` T-terms.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum TTerm {
    T,
    Node(Atom, Arc<TTerm>, Arc<TTerm>),
}

/// `F` or `(a || P) && Q` with `P`, `Q` F-terms.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum FTerm {
    F,
    Node(Atom, Arc<FTerm>, Arc<FTerm>),
}

/// `(a && P) || Q`, or `(!a && P) || Q` when `negated`, with `P` a T-term and
/// `Q` an F-term.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Lit {
    pub negated: bool,
    pub atom: Atom,
    pub then: Arc<TTerm>,
    pub otherwise: Arc<FTerm>,
}

/// A *-term. `Conj(p, q)` requires `q` to be a literal or a `Disj`, and
/// `Disj(p, q)` requires `q` to be a literal or a `Conj`; use [`Star::conj`]
/// and [`Star::disj`] to have that checked.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Star {
    Lit(Lit),
    Conj(Arc<Star>, Arc<Star>),
    Disj(Arc<Star>, Arc<Star>),
}

/// A normal form: a T-term, an F-term, or a T-term conjoined with a *-term.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Snf {
    T(TTerm),
    F(FTerm),
    TStar(TTerm, Star),
}

impl TTerm {
    pub fn node(atom: Atom, then: TTerm, otherwise: TTerm) -> TTerm {
        TTerm::Node(atom, Arc::new(then), Arc::new(otherwise))
    }

    pub fn to_term(&self) -> Term {
        match self {
            TTerm::T => Term::True,
            TTerm::Node(a, p, q) => {
                Term::or(Term::and(Term::Atom(a.clone()), p.to_term()), q.to_term())
            }
        }
    }

    pub fn from_term(t: &Term) -> Option<TTerm> {
        match t {
            Term::True => Some(TTerm::T),
            Term::Or(l, q) => match &**l {
                Term::And(a, p) => match &**a {
                    Term::Atom(a) => Some(TTerm::node(
                        a.clone(),
                        TTerm::from_term(p)?,
                        TTerm::from_term(q)?,
                    )),
                    _ => None,
                },
                _ => None,
            },
            _ => None,
        }
    }
}

impl FTerm {
    pub fn node(atom: Atom, then: FTerm, otherwise: FTerm) -> FTerm {
        FTerm::Node(atom, Arc::new(then), Arc::new(otherwise))
    }

    pub fn to_term(&self) -> Term {
        match self {
            FTerm::F => Term::False,
            FTerm::Node(a, p, q) => {
                Term::and(Term::or(Term::Atom(a.clone()), p.to_term()), q.to_term())
            }
        }
    }

    pub fn from_term(t: &Term) -> Option<FTerm> {
        match t {
            Term::False => Some(FTerm::F),
            Term::And(l, q) => match &**l {
                Term::Or(a, p) => match &**a {
                    Term::Atom(a) => Some(FTerm::node(
                        a.clone(),
                        FTerm::from_term(p)?,
                        FTerm::from_term(q)?,
                    )),
                    _ => None,
                },
                _ => None,
            },
            _ => None,
        }
    }
}

impl Lit {
    pub fn new(negated: bool, atom: Atom, then: TTerm, otherwise: FTerm) -> Lit {
        Lit {
            negated,
            atom,
            then: Arc::new(then),
            otherwise: Arc::new(otherwise),
        }
    }

    pub fn to_term(&self) -> Term {
        let a = Term::Atom(self.atom.clone());
        let a = if self.negated { Term::not(a) } else { a };
        Term::or(Term::and(a, self.then.to_term()), self.otherwise.to_term())
    }

    pub fn from_term(t: &Term) -> Option<Lit> {
        let Term::Or(l, q) = t else { return None };
        let Term::And(a, p) = &**l else { return None };
        let (negated, atom) = match &**a {
            Term::Atom(a) => (false, a.clone()),
            Term::Not(x) => match &**x {
                Term::Atom(a) => (true, a.clone()),
                _ => return None,
            },
            _ => return None,
        };
        Some(Lit::new(
            negated,
            atom,
            TTerm::from_term(p)?,
            FTerm::from_term(q)?,
        ))
    }
}

impl Star {
    pub fn is_c(&self) -> bool {
        !matches!(self, Star::Disj(..))
    }

    pub fn is_d(&self) -> bool {
        !matches!(self, Star::Conj(..))
    }

    /// `p && q`, if `q` is a d-term.
    pub fn conj(p: Star, q: Star) -> Option<Star> {
        q.is_d().then(|| Star::Conj(Arc::new(p), Arc::new(q)))
    }

    /// `p || q`, if `q` is a c-term.
    pub fn disj(p: Star, q: Star) -> Option<Star> {
        q.is_c().then(|| Star::Disj(Arc::new(p), Arc::new(q)))
    }

    pub fn to_term(&self) -> Term {
        match self {
            Star::Lit(l) => l.to_term(),
            Star::Conj(p, q) => Term::and(p.to_term(), q.to_term()),
            Star::Disj(p, q) => Term::or(p.to_term(), q.to_term()),
        }
    }

    pub fn from_term(t: &Term) -> Option<Star> {
        if let Some(l) = Lit::from_term(t) {
            return Some(Star::Lit(l));
        }
        match t {
            Term::And(p, q) => Star::conj(Star::from_term(p)?, Star::from_term(q)?),
            Term::Or(p, q) => Star::disj(Star::from_term(p)?, Star::from_term(q)?),
            _ => None,
        }
    }

    /// The rightmost literal.
    pub fn last_lit(&self) -> &Lit {
        match self {
            Star::Lit(l) => l,
            Star::Conj(_, q) | Star::Disj(_, q) => q.last_lit(),
        }
    }

    pub fn class(&self) -> SnfClass {
        match self {
            Star::Lit(_) => SnfClass::LTerm,
            Star::Conj(..) => SnfClass::CTerm,
            Star::Disj(..) => SnfClass::DTerm,
        }
    }
}

impl Snf {
    pub fn to_term(&self) -> Term {
        match self {
            Snf::T(p) => p.to_term(),
            Snf::F(p) => p.to_term(),
            Snf::TStar(p, q) => Term::and(p.to_term(), q.to_term()),
        }
    }

    pub fn from_term(t: &Term) -> Option<Snf> {
        if let Some(p) = TTerm::from_term(t) {
            return Some(Snf::T(p));
        }
        if let Some(p) = FTerm::from_term(t) {
            return Some(Snf::F(p));
        }
        match t {
            Term::And(p, q) => Some(Snf::TStar(TTerm::from_term(p)?, Star::from_term(q)?)),
            _ => None,
        }
    }

    /// Like [`Snf::from_term`], reporting ill-formed input as an error.
    pub fn parse_term(t: &Term) -> Result<Snf> {
        Snf::from_term(t).ok_or_else(|| Error::NotInNormalForm(t.to_string()))
    }

    pub fn class(&self) -> SnfClass {
        match self {
            Snf::T(_) => SnfClass::TTerm,
            Snf::F(_) => SnfClass::FTerm,
            Snf::TStar(..) => SnfClass::TStarTerm,
        }
    }
}

/// Grammatical category of a term.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum SnfClass {
    TTerm,
    FTerm,
    /// Literal-rooted *-term.
    LTerm,
    /// *-term of the form `P && Q`.
    CTerm,
    /// *-term of the form `P || Q`.
    DTerm,
    /// Any *-term; never returned by [`classify`], which refines it.
    StarTerm,
    TStarTerm,
    NotSnf,
}

impl SnfClass {
    pub fn is_star(self) -> bool {
        matches!(
            self,
            SnfClass::LTerm | SnfClass::CTerm | SnfClass::DTerm | SnfClass::StarTerm
        )
    }

    /// True for the three top-level normal-form categories.
    pub fn is_snf(self) -> bool {
        matches!(
            self,
            SnfClass::TTerm | SnfClass::FTerm | SnfClass::TStarTerm
        )
    }

    pub fn name(self) -> &'static str {
        match self {
            SnfClass::TTerm => "T-term",
            SnfClass::FTerm => "F-term",
            SnfClass::LTerm => "l-term",
            SnfClass::CTerm => "c-term",
            SnfClass::DTerm => "d-term",
            SnfClass::StarTerm => "*-term",
            SnfClass::TStarTerm => "T-*-term",
            SnfClass::NotSnf => "not in normal form",
        }
    }
}

impl fmt::Display for SnfClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// The most specific category of `p`.
pub fn classify(p: &Term) -> SnfClass {
    if let Some(s) = Snf::from_term(p) {
        return s.class();
    }
    match Star::from_term(p) {
        Some(s) => s.class(),
        None => SnfClass::NotSnf,
    }
}
