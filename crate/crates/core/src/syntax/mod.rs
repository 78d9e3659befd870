//! Terms over the short-circuit signature `{T, F, a, !, &&, ||}`, optionally
//! enriched with Hoare's conditional `x <| y |> z`, the full sequential
//! connectives `&.&` / `|.|`, and variables.
//!
//! Atoms and variables are distinct node kinds. Atoms are interpreted as fixed
//! tree nodes by `se`, variables only ever appear in equations and are
//! eliminated by [`substitute`].

mod axioms;
mod json;
mod parse;
mod print;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use axioms::{
    auxiliary_identities, cp_axioms, eqfscl_axioms, eqfscl_minus, full_identity, rp_schemes,
};
pub use parse::{parse, Mode};
pub use print::Explicit;

pub(crate) fn is_identifier(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

fn is_reserved(name: &str) -> bool {
    name == "T" || name == "F"
}

/// An atomic proposition, compared and ordered by name.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct Atom(Arc<str>);

impl Atom {
    pub fn new(name: &str) -> Result<Self> {
        if !is_identifier(name) || is_reserved(name) {
            return Err(Error::Format(format!("invalid atom name {name:?}")));
        }
        Ok(Atom(name.into()))
    }

    pub fn name(&self) -> &str {
        &self.0
    }
}

impl TryFrom<String> for Atom {
    type Error = Error;

    fn try_from(value: String) -> Result<Self> {
        Atom::new(&value)
    }
}

impl From<Atom> for String {
    fn from(atom: Atom) -> String {
        atom.0.to_string()
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Debug for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// A variable of an equation. Printed with a leading `$`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct Var(Arc<str>);

impl Var {
    pub fn new(name: &str) -> Result<Self> {
        if !is_identifier(name) {
            return Err(Error::Format(format!("invalid variable name {name:?}")));
        }
        Ok(Var(name.into()))
    }

    pub fn name(&self) -> &str {
        &self.0
    }
}

impl TryFrom<String> for Var {
    type Error = Error;

    fn try_from(value: String) -> Result<Self> {
        Var::new(&value)
    }
}

impl From<Var> for String {
    fn from(var: Var) -> String {
        var.0.to_string()
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "${}", self.0)
    }
}

impl fmt::Debug for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "${}", self.0)
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Term {
    True,
    False,
    Atom(Atom),
    Var(Var),
    Not(Box<Term>),
    /// Left-sequential conjunction.
    And(Box<Term>, Box<Term>),
    /// Left-sequential disjunction.
    Or(Box<Term>, Box<Term>),
    /// Full sequential conjunction, evaluates both sides left to right.
    FullAnd(Box<Term>, Box<Term>),
    FullOr(Box<Term>, Box<Term>),
    /// `then <| guard |> otherwise`: evaluate `guard`, then one of the branches.
    Cond(Box<Term>, Box<Term>, Box<Term>),
}

impl Term {
    /// Builds an atom node.
    ///
    /// Panics if `name` is not a valid atom identifier; use [`Atom::new`] for
    /// untrusted input.
    pub fn atom(name: &str) -> Term {
        Term::Atom(Atom::new(name).expect("invalid atom name"))
    }

    /// Builds a variable node. Panics on an invalid identifier.
    pub fn var(name: &str) -> Term {
        Term::Var(Var::new(name).expect("invalid variable name"))
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(t: Term) -> Term {
        Term::Not(Box::new(t))
    }

    pub fn and(l: Term, r: Term) -> Term {
        Term::And(Box::new(l), Box::new(r))
    }

    pub fn or(l: Term, r: Term) -> Term {
        Term::Or(Box::new(l), Box::new(r))
    }

    pub fn full_and(l: Term, r: Term) -> Term {
        Term::FullAnd(Box::new(l), Box::new(r))
    }

    pub fn full_or(l: Term, r: Term) -> Term {
        Term::FullOr(Box::new(l), Box::new(r))
    }

    pub fn cond(then: Term, guard: Term, otherwise: Term) -> Term {
        Term::Cond(Box::new(then), Box::new(guard), Box::new(otherwise))
    }

    /// Number of nodes.
    pub fn size(&self) -> usize {
        match self {
            Term::True | Term::False | Term::Atom(_) | Term::Var(_) => 1,
            Term::Not(x) => 1 + x.size(),
            Term::And(l, r) | Term::Or(l, r) | Term::FullAnd(l, r) | Term::FullOr(l, r) => {
                1 + l.size() + r.size()
            }
            Term::Cond(x, y, z) => 1 + x.size() + y.size() + z.size(),
        }
    }

    pub fn depth(&self) -> usize {
        match self {
            Term::True | Term::False | Term::Atom(_) | Term::Var(_) => 0,
            Term::Not(x) => 1 + x.depth(),
            Term::And(l, r) | Term::Or(l, r) | Term::FullAnd(l, r) | Term::FullOr(l, r) => {
                1 + l.depth().max(r.depth())
            }
            Term::Cond(x, y, z) => 1 + x.depth().max(y.depth()).max(z.depth()),
        }
    }

    fn children(&self) -> Vec<&Term> {
        match self {
            Term::True | Term::False | Term::Atom(_) | Term::Var(_) => vec![],
            Term::Not(x) => vec![x],
            Term::And(l, r) | Term::Or(l, r) | Term::FullAnd(l, r) | Term::FullOr(l, r) => {
                vec![l, r]
            }
            Term::Cond(x, y, z) => vec![x, y, z],
        }
    }

    fn any_node(&self, pred: &impl Fn(&Term) -> bool) -> bool {
        pred(self) || self.children().into_iter().any(|c| c.any_node(pred))
    }

    pub fn is_closed(&self) -> bool {
        !self.any_node(&|t| matches!(t, Term::Var(_)))
    }

    /// True when no conditional occurs.
    pub fn is_scl(&self) -> bool {
        !self.any_node(&|t| matches!(t, Term::Cond(..)))
    }

    /// True when built only from constants, atoms, variables and conditionals.
    pub fn is_cp(&self) -> bool {
        !self.any_node(&|t| {
            matches!(
                t,
                Term::Not(_) | Term::And(..) | Term::Or(..) | Term::FullAnd(..) | Term::FullOr(..)
            )
        })
    }

    pub fn has_full(&self) -> bool {
        self.any_node(&|t| matches!(t, Term::FullAnd(..) | Term::FullOr(..)))
    }

    pub fn vars(&self) -> BTreeSet<Var> {
        let mut out = BTreeSet::new();
        self.collect(&mut |t| {
            if let Term::Var(v) = t {
                out.insert(v.clone());
            }
        });
        out
    }

    pub fn atoms(&self) -> BTreeSet<Atom> {
        let mut out = BTreeSet::new();
        self.collect(&mut |t| {
            if let Term::Atom(a) = t {
                out.insert(a.clone());
            }
        });
        out
    }

    fn collect(&self, visit: &mut impl FnMut(&Term)) {
        visit(self);
        for c in self.children() {
            c.collect(visit);
        }
    }

    /// Errors with the first variable found if the term is open.
    pub fn require_closed(&self) -> Result<()> {
        match self.vars().into_iter().next() {
            Some(v) => Err(Error::NonClosedTerm(v.name().to_string())),
            None => Ok(()),
        }
    }

    /// Checks that only node kinds admitted by `mode` occur.
    pub fn check_mode(&self, mode: Mode) -> Result<()> {
        let mut bad: Option<&'static str> = None;
        self.collect(&mut |t| {
            if bad.is_some() {
                return;
            }
            bad = match (t, mode) {
                (Term::Var(_), Mode::Scl | Mode::Cp | Mode::Enriched) => Some("variable"),
                (Term::Cond(..), Mode::Scl) => Some("conditional"),
                (Term::Not(_), Mode::Cp) => Some("negation"),
                (Term::And(..) | Term::Or(..), Mode::Cp) => Some("sequential connective"),
                (Term::FullAnd(..) | Term::FullOr(..), Mode::Cp) => Some("full connective"),
                _ => None,
            };
        });
        match bad {
            Some(what) => Err(Error::mode(what, format!("{mode} mode"))),
            None => Ok(()),
        }
    }

    /// Rendering with every compound operand parenthesized.
    pub fn explicit(&self) -> Explicit<'_> {
        Explicit(self)
    }
}

impl fmt::Debug for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// The dual: swaps `T`/`F` and `&&`/`||` (and the full connectives), fixing
/// atoms and variables. Not defined on conditionals.
pub fn dual(t: &Term) -> Result<Term> {
    Ok(match t {
        Term::True => Term::False,
        Term::False => Term::True,
        Term::Atom(_) | Term::Var(_) => t.clone(),
        Term::Not(x) => Term::not(dual(x)?),
        Term::And(l, r) => Term::or(dual(l)?, dual(r)?),
        Term::Or(l, r) => Term::and(dual(l)?, dual(r)?),
        Term::FullAnd(l, r) => Term::full_or(dual(l)?, dual(r)?),
        Term::FullOr(l, r) => Term::full_and(dual(l)?, dual(r)?),
        Term::Cond(..) => return Err(Error::mode("conditional", "dual")),
    })
}

/// Rewrites `x &.& y` to `(x || (y && F)) && y` and `x |.| y` to
/// `(x && (y || T)) || y`, bottom-up.
pub fn expand_full(t: &Term) -> Term {
    match t {
        Term::True | Term::False | Term::Atom(_) | Term::Var(_) => t.clone(),
        Term::Not(x) => Term::not(expand_full(x)),
        Term::And(l, r) => Term::and(expand_full(l), expand_full(r)),
        Term::Or(l, r) => Term::or(expand_full(l), expand_full(r)),
        Term::FullAnd(l, r) => {
            let (x, y) = (expand_full(l), expand_full(r));
            Term::and(Term::or(x, Term::and(y.clone(), Term::False)), y)
        }
        Term::FullOr(l, r) => {
            let (x, y) = (expand_full(l), expand_full(r));
            Term::or(Term::and(x, Term::or(y.clone(), Term::True)), y)
        }
        Term::Cond(x, y, z) => Term::cond(expand_full(x), expand_full(y), expand_full(z)),
    }
}

/// A mapping from variables to closed terms.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Substitution(BTreeMap<Var, Term>);

impl Substitution {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, var: Var, value: Term) -> Result<()> {
        value.require_closed()?;
        self.0.insert(var, value);
        Ok(())
    }

    /// Builder-style insertion keyed by variable name. Panics if `value` is
    /// open or the name is invalid.
    pub fn with(mut self, var: &str, value: Term) -> Self {
        self.insert(Var::new(var).expect("invalid variable name"), value)
            .expect("substitution values must be closed");
        self
    }

    pub fn get(&self, var: &Var) -> Option<&Term> {
        self.0.get(var)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Var, &Term)> {
        self.0.iter()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for Substitution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, (v, t)) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{v} := {t}")?;
        }
        f.write_str("}")
    }
}

/// Simultaneously replaces every variable of `t` by its image under `sigma`.
pub fn substitute(t: &Term, sigma: &Substitution) -> Result<Term> {
    Ok(match t {
        Term::Var(v) => sigma
            .get(v)
            .cloned()
            .ok_or_else(|| Error::UnboundVariable(v.name().to_string()))?,
        Term::True | Term::False | Term::Atom(_) => t.clone(),
        Term::Not(x) => Term::not(substitute(x, sigma)?),
        Term::And(l, r) => Term::and(substitute(l, sigma)?, substitute(r, sigma)?),
        Term::Or(l, r) => Term::or(substitute(l, sigma)?, substitute(r, sigma)?),
        Term::FullAnd(l, r) => Term::full_and(substitute(l, sigma)?, substitute(r, sigma)?),
        Term::FullOr(l, r) => Term::full_or(substitute(l, sigma)?, substitute(r, sigma)?),
        Term::Cond(x, y, z) => Term::cond(
            substitute(x, sigma)?,
            substitute(y, sigma)?,
            substitute(z, sigma)?,
        ),
    })
}

/// A tagged equation between (possibly open) terms.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Equation {
    pub tag: String,
    pub lhs: Term,
    pub rhs: Term,
}

impl Equation {
    pub fn new(tag: impl Into<String>, lhs: Term, rhs: Term) -> Self {
        Equation {
            tag: tag.into(),
            lhs,
            rhs,
        }
    }

    /// Variables of both sides.
    pub fn vars(&self) -> BTreeSet<Var> {
        let mut vars = self.lhs.vars();
        vars.extend(self.rhs.vars());
        vars
    }

    /// The dual equation, tagged with a trailing prime.
    pub fn dual(&self) -> Result<Equation> {
        Ok(Equation::new(
            format!("{}'", self.tag),
            dual(&self.lhs)?,
            dual(&self.rhs)?,
        ))
    }

    pub fn instantiate(&self, sigma: &Substitution) -> Result<(Term, Term)> {
        Ok((substitute(&self.lhs, sigma)?, substitute(&self.rhs, sigma)?))
    }
}

impl fmt::Display for Equation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} = {}", self.lhs, self.rhs)
    }
}
