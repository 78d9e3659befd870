use std::fmt;

use super::Term;

const COND: u8 = 0;
const OR: u8 = 1;
const AND: u8 = 2;
const UNARY: u8 = 3;
const ATOMIC: u8 = 4;

fn level(t: &Term) -> u8 {
    match t {
        Term::Cond(..) => COND,
        Term::Or(..) | Term::FullOr(..) => OR,
        Term::And(..) | Term::FullAnd(..) => AND,
        Term::Not(_) => UNARY,
        _ => ATOMIC,
    }
}

fn leaf(t: &Term, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    match t {
        Term::True => f.write_str("T"),
        Term::False => f.write_str("F"),
        Term::Atom(a) => write!(f, "{a}"),
        Term::Var(v) => write!(f, "{v}"),
        _ => unreachable!("not a leaf"),
    }
}

fn binary(t: &Term) -> Option<(&Term, &'static str, &Term)> {
    match t {
        Term::And(l, r) => Some((l, "&&", r)),
        Term::Or(l, r) => Some((l, "||", r)),
        Term::FullAnd(l, r) => Some((l, "&.&", r)),
        Term::FullOr(l, r) => Some((l, "|.|", r)),
        _ => None,
    }
}

fn minimal(t: &Term, min: u8, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    let lv = level(t);
    if lv < min {
        f.write_str("(")?;
        minimal(t, COND, f)?;
        return f.write_str(")");
    }
    match t {
        Term::Not(x) => {
            f.write_str("!")?;
            minimal(x, UNARY, f)
        }
        Term::Cond(x, y, z) => {
            minimal(x, OR, f)?;
            f.write_str(" <| ")?;
            minimal(y, COND, f)?;
            f.write_str(" |> ")?;
            minimal(z, OR, f)
        }
        _ => match binary(t) {
            Some((l, op, r)) => {
                minimal(l, lv, f)?;
                write!(f, " {op} ")?;
                minimal(r, lv + 1, f)
            }
            None => leaf(t, f),
        },
    }
}

/// Minimal-parentheses rendering; `parse` inverts it.
impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        minimal(self, COND, f)
    }
}

/// Rendering with every compound operand wrapped in parentheses, e.g.
/// `T && ((a && T) || F)`.
pub struct Explicit<'a>(pub(super) &'a Term);

fn operand(t: &Term, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if level(t) < UNARY {
        f.write_str("(")?;
        explicit(t, f)?;
        f.write_str(")")
    } else {
        explicit(t, f)
    }
}

fn explicit(t: &Term, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    match t {
        Term::Not(x) => {
            f.write_str("!")?;
            operand(x, f)
        }
        Term::Cond(x, y, z) => {
            operand(x, f)?;
            f.write_str(" <| ")?;
            operand(y, f)?;
            f.write_str(" |> ")?;
            operand(z, f)
        }
        _ => match binary(t) {
            Some((l, op, r)) => {
                operand(l, f)?;
                write!(f, " {op} ")?;
                operand(r, f)
            }
            None => leaf(t, f),
        },
    }
}

impl fmt::Display for Explicit<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        explicit(self.0, f)
    }
}
