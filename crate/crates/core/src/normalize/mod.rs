//! Normal forms and the normalization function `f` with its auxiliaries.
//!
//! The auxiliaries work on the typed grammar in [`snf`] so that each clause is
//! a single match arm. Term-level wrappers parse their arguments and report
//! ill-formed input as [`Error::NotInNormalForm`].

mod snf;

use std::fmt;
use std::str::FromStr;

pub use snf::{classify, FTerm, Lit, Snf, SnfClass, Star, TTerm};

use crate::error::{Error, Result};
use crate::evaltree::{se_with_cap, DEFAULT_CAP};
use crate::syntax::{expand_full, Term};

/// fⁿ on T-terms.
pub fn neg_t(p: &TTerm) -> FTerm {
    match p {
        TTerm::T => FTerm::F,
        TTerm::Node(a, p, q) => FTerm::node(a.clone(), neg_t(q), neg_t(p)),
    }
}

/// fⁿ on F-terms.
pub fn neg_f(p: &FTerm) -> TTerm {
    match p {
        FTerm::F => TTerm::T,
        FTerm::Node(a, p, q) => TTerm::node(a.clone(), neg_f(q), neg_f(p)),
    }
}

/// fⁿ₁: pushes a negation into a *-term.
pub fn neg_star(p: &Star) -> Star {
    match p {
        Star::Lit(l) => Star::Lit(Lit::new(
            !l.negated,
            l.atom.clone(),
            neg_f(&l.otherwise),
            neg_t(&l.then),
        )),
        Star::Conj(p, q) => {
            Star::disj(neg_star(p), neg_star(q)).expect("negated d-term is a c-term")
        }
        Star::Disj(p, q) => {
            Star::conj(neg_star(p), neg_star(q)).expect("negated c-term is a d-term")
        }
    }
}

/// fⁿ.
pub fn neg_snf(p: &Snf) -> Snf {
    match p {
        Snf::T(p) => Snf::F(neg_t(p)),
        Snf::F(p) => Snf::T(neg_f(p)),
        Snf::TStar(p, q) => Snf::TStar(p.clone(), neg_star(q)),
    }
}

/// fᶜ with a T-term on both sides.
pub fn and_tt(p: &TTerm, r: &TTerm) -> TTerm {
    match p {
        TTerm::T => r.clone(),
        TTerm::Node(a, p, q) => TTerm::node(a.clone(), and_tt(p, r), and_tt(q, r)),
    }
}

/// fᶜ with a T-term first and an F-term second.
pub fn and_tf(p: &TTerm, r: &FTerm) -> FTerm {
    match p {
        TTerm::T => r.clone(),
        TTerm::Node(a, p, q) => FTerm::node(a.clone(), and_tf(q, r), and_tf(p, r)),
    }
}

/// fᶜ₁: a *-term conjoined with a T-term.
pub fn and_star_t(p: &Star, r: &TTerm) -> Star {
    match p {
        Star::Lit(l) => Star::Lit(Lit {
            then: and_tt(&l.then, r).into(),
            ..l.clone()
        }),
        Star::Conj(p, q) => Star::Conj(p.clone(), and_star_t(q, r).into()),
        Star::Disj(p, q) => Star::Disj(and_star_t(p, r).into(), and_star_t(q, r).into()),
    }
}

/// fᶜ₂: a *-term conjoined with an F-term.
pub fn and_star_f(p: &Star, r: &FTerm) -> FTerm {
    match p {
        Star::Lit(l) if !l.negated => {
            FTerm::node(l.atom.clone(), (*l.otherwise).clone(), and_tf(&l.then, r))
        }
        Star::Lit(l) => FTerm::node(l.atom.clone(), and_tf(&l.then, r), (*l.otherwise).clone()),
        Star::Conj(p, q) => and_star_f(p, &and_star_f(q, r)),
        Star::Disj(p, q) => {
            let left = neg_star(&and_star_t(p, &neg_f(r)));
            and_star_f(&left, &and_star_f(q, r))
        }
    }
}

/// fᶜ₃: a *-term conjoined with the T-*-term `q && r`.
pub fn and_star_tstar(p: &Star, q: &TTerm, r: &Star) -> Star {
    match r {
        Star::Lit(_) | Star::Disj(..) => Star::Conj(and_star_t(p, q).into(), r.clone().into()),
        Star::Conj(r1, s) => Star::Conj(and_star_tstar(p, q, r1).into(), s.clone()),
    }
}

/// fᶜ.
pub fn and_snf(p: &Snf, q: &Snf) -> Snf {
    match (p, q) {
        (Snf::T(TTerm::T), q) => q.clone(),
        (Snf::T(p), Snf::T(r)) => Snf::T(and_tt(p, r)),
        (Snf::T(p), Snf::F(r)) => Snf::F(and_tf(p, r)),
        (Snf::T(p), Snf::TStar(r, s)) => Snf::TStar(and_tt(p, r), s.clone()),
        (Snf::F(p), _) => Snf::F(p.clone()),
        (Snf::TStar(p, q), Snf::T(r)) => Snf::TStar(p.clone(), and_star_t(q, r)),
        (Snf::TStar(p, q), Snf::F(r)) => Snf::F(and_tf(p, &and_star_f(q, r))),
        (Snf::TStar(p, q), Snf::TStar(r, s)) => Snf::TStar(p.clone(), and_star_tstar(q, r, s)),
    }
}

/// The normalization function `f` on closed short-circuit terms, without
/// size checks.
pub fn f(p: &Term) -> Result<Snf> {
    Ok(match p {
        Term::True => Snf::T(TTerm::T),
        Term::False => Snf::F(FTerm::F),
        Term::Atom(a) => Snf::TStar(
            TTerm::T,
            Star::Lit(Lit::new(false, a.clone(), TTerm::T, FTerm::F)),
        ),
        Term::Not(x) => neg_snf(&f(x)?),
        Term::And(l, r) => and_snf(&f(l)?, &f(r)?),
        Term::Or(l, r) => neg_snf(&and_snf(&neg_snf(&f(l)?), &neg_snf(&f(r)?))),
        Term::Var(v) => return Err(Error::NonClosedTerm(v.name().to_string())),
        Term::Cond(..) => return Err(Error::mode("conditional", "normalization")),
        Term::FullAnd(..) | Term::FullOr(..) => {
            return Err(Error::mode(
                "full connective",
                "normalization; expand full connectives first",
            ))
        }
    })
}

/// `f(p)`, refusing inputs whose evaluation tree exceeds [`DEFAULT_CAP`].
pub fn nf(p: &Term) -> Result<Term> {
    nf_with_cap(p, DEFAULT_CAP)
}

/// The normal form and every intermediate result are linear in the size of
/// the evaluation tree of `p`, so the cap is enforced by building that tree
/// first.
pub fn nf_with_cap(p: &Term, cap: usize) -> Result<Term> {
    Ok(nf_typed(p, cap)?.to_term())
}

pub fn nf_typed(p: &Term, cap: usize) -> Result<Snf> {
    p.require_closed()?;
    p.check_mode(crate::syntax::Mode::Scl)?;
    if p.has_full() {
        return Err(Error::mode(
            "full connective",
            "normalization; expand full connectives first",
        ));
    }
    se_with_cap(p, cap)?;
    f(p)
}

/// fⁿ on a term in normal form.
pub fn neg_nf(p: &Term) -> Result<Term> {
    Ok(neg_snf(&Snf::parse_term(p)?).to_term())
}

/// fᶜ on terms in normal form.
pub fn and_nf(p: &Term, q: &Term) -> Result<Term> {
    Ok(and_snf(&Snf::parse_term(p)?, &Snf::parse_term(q)?).to_term())
}

fn star_of(p: &Term) -> Result<Star> {
    Star::from_term(p).ok_or_else(|| Error::NotStarTerm(p.to_string()))
}

fn t_of(p: &Term) -> Result<TTerm> {
    TTerm::from_term(p).ok_or_else(|| Error::NotInNormalForm(format!("{p} is not a T-term")))
}

fn f_of(p: &Term) -> Result<FTerm> {
    FTerm::from_term(p).ok_or_else(|| Error::NotInNormalForm(format!("{p} is not an F-term")))
}

/// fⁿ₁ on terms.
pub fn neg_star_nf(p: &Term) -> Result<Term> {
    Ok(neg_star(&star_of(p)?).to_term())
}

/// fᶜ₁ on terms.
pub fn and_star_t_nf(p: &Term, r: &Term) -> Result<Term> {
    Ok(and_star_t(&star_of(p)?, &t_of(r)?).to_term())
}

/// fᶜ₂ on terms.
pub fn and_star_f_nf(p: &Term, r: &Term) -> Result<Term> {
    Ok(and_star_f(&star_of(p)?, &f_of(r)?).to_term())
}

/// fᶜ₃ on terms; `r` must be a T-*-term.
pub fn and_star_tstar_nf(p: &Term, r: &Term) -> Result<Term> {
    match Snf::parse_term(r)? {
        Snf::TStar(q, s) => Ok(and_star_tstar(&star_of(p)?, &q, &s).to_term()),
        _ => Err(Error::NotInNormalForm(format!("{r} is not a T-*-term"))),
    }
}

/// Decision procedure used by [`decide_eq`].
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub enum Engine {
    /// Compare evaluation trees.
    #[default]
    Tree,
    /// Compare normal forms.
    Nf,
    /// Compare conditional basic forms.
    Cp,
}

impl fmt::Display for Engine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Engine::Tree => "tree",
            Engine::Nf => "nf",
            Engine::Cp => "cp",
        })
    }
}

impl FromStr for Engine {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "tree" => Ok(Engine::Tree),
            "nf" => Ok(Engine::Nf),
            "cp" => Ok(Engine::Cp),
            _ => Err(Error::Format(format!("unknown engine {s:?}"))),
        }
    }
}

/// Whether `p` and `q` denote the same evaluation tree. Full connectives are
/// expanded first. The tree and nf engines reject conditionals.
pub fn decide_eq(p: &Term, q: &Term, engine: Engine) -> Result<bool> {
    let (p, q) = (expand_full(p), expand_full(q));
    match engine {
        Engine::Tree => {
            for t in [&p, &q] {
                t.require_closed()?;
                t.check_mode(crate::syntax::Mode::Scl)?;
            }
            Ok(crate::evaltree::se(&p)? == crate::evaltree::se(&q)?)
        }
        Engine::Nf => Ok(nf(&p)? == nf(&q)?),
        Engine::Cp => crate::cp::decide_eq_cp(&p, &q),
    }
}
