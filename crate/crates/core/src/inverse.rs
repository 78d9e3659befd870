//! The inverse `g` of evaluation on normal forms, driven by the decomposition
//! selectors.

use crate::decompose::{cd, dd, tsd, Decomposition};
use crate::error::{Error, Result};
use crate::evaltree::{EvalTree, Truth};
use crate::normalize::{FTerm, Lit, Snf, Star, TTerm};
use crate::syntax::Term;

fn not_in_image(clause: &'static str, x: &EvalTree) -> Error {
    Error::NotInImage {
        clause,
        subtree: x.clone(),
    }
}

fn only(x: &EvalTree, leaf: Truth) -> bool {
    let p = x.leaf_profile();
    match leaf {
        Truth::T => p.has_t && !p.has_f,
        Truth::F => p.has_f && !p.has_t,
    }
}

/// gᵀ on a tree whose leaves are all `T`.
pub fn g_t_typed(x: &EvalTree) -> Result<TTerm> {
    match x.as_node() {
        None if *x == EvalTree::T => Ok(TTerm::T),
        None => Err(not_in_image("gT", x)),
        Some((a, y, z)) => Ok(TTerm::node(a.clone(), g_t_typed(y)?, g_t_typed(z)?)),
    }
}

/// gᶠ on a tree whose leaves are all `F`. Note the swap of the children.
pub fn g_f_typed(x: &EvalTree) -> Result<FTerm> {
    match x.as_node() {
        None if *x == EvalTree::F => Ok(FTerm::F),
        None => Err(not_in_image("gF", x)),
        Some((a, y, z)) => Ok(FTerm::node(a.clone(), g_f_typed(z)?, g_f_typed(y)?)),
    }
}

/// gˡ: `Y <a> Z` with one side all `T` and the other all `F`.
pub fn g_l_typed(x: &EvalTree) -> Result<Lit> {
    let Some((a, y, z)) = x.as_node() else {
        return Err(not_in_image("gl", x));
    };
    if only(y, Truth::T) && only(z, Truth::F) {
        Ok(Lit::new(false, a.clone(), g_t_typed(y)?, g_f_typed(z)?))
    } else if only(z, Truth::T) && only(y, Truth::F) {
        Ok(Lit::new(true, a.clone(), g_t_typed(z)?, g_f_typed(y)?))
    } else {
        Err(not_in_image("gl", x))
    }
}

fn selected(
    clause: &'static str,
    x: &EvalTree,
    found: Result<Option<Decomposition>>,
) -> Result<Option<Decomposition>> {
    found.map_err(|_| not_in_image(clause, x))
}

/// g*: conjunction decomposition first, then disjunction decomposition,
/// otherwise a literal.
pub fn g_star_typed(x: &EvalTree) -> Result<Star> {
    let p = x.leaf_profile();
    if !(p.has_t && p.has_f) {
        return Err(not_in_image("g*", x));
    }
    if let Some(d) = selected("g*", x, cd(x))? {
        let left = g_star_typed(&d.context.close_with(Truth::T))?;
        let right = g_star_typed(&d.core)?;
        return Star::conj(left, right).ok_or_else(|| not_in_image("g*", x));
    }
    if let Some(d) = selected("g*", x, dd(x))? {
        let left = g_star_typed(&d.context.close_with(Truth::F))?;
        let right = g_star_typed(&d.core)?;
        return Star::disj(left, right).ok_or_else(|| not_in_image("g*", x));
    }
    Ok(Star::Lit(g_l_typed(x)?))
}

/// g, returning the typed normal form.
pub fn g_typed(x: &EvalTree) -> Result<Snf> {
    if only(x, Truth::T) {
        return Ok(Snf::T(g_t_typed(x)?));
    }
    if only(x, Truth::F) {
        return Ok(Snf::F(g_f_typed(x)?));
    }
    let d = selected("g", x, tsd(x))?.ok_or_else(|| not_in_image("g", x))?;
    Ok(Snf::TStar(
        g_t_typed(&d.context.close_with(Truth::T))?,
        g_star_typed(&d.core)?,
    ))
}

pub fn g(x: &EvalTree) -> Result<Term> {
    Ok(g_typed(x)?.to_term())
}

pub fn g_t(x: &EvalTree) -> Result<Term> {
    Ok(g_t_typed(x)?.to_term())
}

pub fn g_f(x: &EvalTree) -> Result<Term> {
    Ok(g_f_typed(x)?.to_term())
}

pub fn g_l(x: &EvalTree) -> Result<Term> {
    Ok(g_l_typed(x)?.to_term())
}

pub fn g_star(x: &EvalTree) -> Result<Term> {
    Ok(g_star_typed(x)?.to_term())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::evaltree::se;
    use crate::normalize::nf;
    use crate::syntax::{parse, Mode};

    fn t(s: &str) -> EvalTree {
        EvalTree::from_text(s).unwrap()
    }

    fn p(s: &str) -> Term {
        parse(s, Mode::Scl).unwrap()
    }

    #[test]
    fn g_examples() {
        assert_eq!(g(&EvalTree::T).unwrap(), Term::True);
        assert_eq!(g(&t("(T <a> F)")).unwrap(), p("T && ((a && T) || F)"));
        let x = t("(F <b> (T <a> F))");
        assert_eq!(g(&x).unwrap(), nf(&p("!b && a")).unwrap());
        assert_eq!(se(&g(&x).unwrap()).unwrap(), x);
    }

    #[test]
    fn clause_examples() {
        assert_eq!(g_t(&t("(T <a> T)")).unwrap(), p("(a && T) || T"));
        assert_eq!(g_f(&t("(F <a> F)")).unwrap(), p("(a || F) && F"));
        assert_eq!(g_l(&t("(F <a> T)")).unwrap(), p("(!a && T) || F"));
        assert_eq!(
            g_f(&t("((F <b> F) <a> F)")).unwrap(),
            p("(a || F) && ((b || F) && F)")
        );
    }

    #[test]
    fn errors_name_the_clause() {
        assert!(matches!(
            g_t(&t("(T <a> F)")),
            Err(Error::NotInImage { clause: "gT", .. })
        ));
        assert!(matches!(
            g_l(&t("(T <a> T)")),
            Err(Error::NotInImage { clause: "gl", .. })
        ));
        assert!(matches!(
            g_star(&EvalTree::T),
            Err(Error::NotInImage { clause: "g*", .. })
        ));
        assert!(matches!(
            g(&t("((T <b> F) <a> (F <c> T))")),
            Err(Error::NotInImage { clause: "gl", .. })
        ));
    }
}
