//! Finite interpretations of the short-circuit signature with exhaustive
//! validity checks, plus random testing in the free model.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::evaltree::se;
use crate::gen;
use crate::syntax::{
    eqfscl_axioms, eqfscl_minus, expand_full, parse, Atom, Equation, Mode, Substitution, Term, Var,
};

/// A finite algebra. Tables are indexed `table[left][right]`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct FiniteModel {
    pub name: String,
    pub domain_size: usize,
    pub neg: Vec<usize>,
    pub and: Vec<Vec<usize>>,
    pub or: Vec<Vec<usize>>,
    pub t: usize,
    pub f: usize,
    pub atoms: BTreeMap<Atom, usize>,
    /// Value of atoms missing from `atoms`; `None` rejects them.
    pub default_atom: Option<usize>,
}

pub type Assignment = BTreeMap<Var, usize>;

impl FiniteModel {
    /// Checks table shapes and ranges.
    pub fn check(&self) -> Result<()> {
        let n = self.domain_size;
        let bad = |m: String| Err(Error::InvalidModel(format!("{}: {m}", self.name)));
        if n == 0 {
            return bad("empty domain".into());
        }
        if self.neg.len() != n {
            return bad(format!("negation table has {} entries", self.neg.len()));
        }
        for (name, table) in [("and", &self.and), ("or", &self.or)] {
            if table.len() != n || table.iter().any(|row| row.len() != n) {
                return bad(format!("{name} table is not {n}x{n}"));
            }
        }
        let values = self
            .neg
            .iter()
            .chain(self.and.iter().flatten())
            .chain(self.or.iter().flatten())
            .chain([&self.t, &self.f])
            .chain(self.atoms.values())
            .chain(self.default_atom.iter());
        for &v in values {
            if v >= n {
                return bad(format!("value {v} outside the domain"));
            }
        }
        Ok(())
    }

    pub fn atom_value(&self, a: &Atom) -> Result<usize> {
        self.atoms
            .get(a)
            .copied()
            .or(self.default_atom)
            .ok_or_else(|| Error::UninterpretedAtom(a.name().to_string()))
    }
}

/// Evaluates `t` homomorphically. Full connectives are evaluated through
/// their defining expansion.
pub fn eval_in_model(m: &FiniteModel, t: &Term, rho: &Assignment) -> Result<usize> {
    Ok(match t {
        Term::True => m.t,
        Term::False => m.f,
        Term::Atom(a) => m.atom_value(a)?,
        Term::Var(v) => *rho
            .get(v)
            .ok_or_else(|| Error::UnboundVariable(v.name().to_string()))?,
        Term::Not(x) => m.neg[eval_in_model(m, x, rho)?],
        Term::And(l, r) => m.and[eval_in_model(m, l, rho)?][eval_in_model(m, r, rho)?],
        Term::Or(l, r) => m.or[eval_in_model(m, l, rho)?][eval_in_model(m, r, rho)?],
        Term::FullAnd(..) | Term::FullOr(..) => eval_in_model(m, &expand_full(t), rho)?,
        Term::Cond(..) => return Err(Error::mode("conditional", "finite model evaluation")),
    })
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Validation {
    pub holds: bool,
    /// First failing assignment in lexicographic order, the alphabetically
    /// first variable being most significant.
    pub counterexample: Option<Assignment>,
    /// Number of assignments evaluated.
    pub checked: u64,
}

/// Checks `e` under every assignment of its variables.
pub fn validates(m: &FiniteModel, e: &Equation) -> Result<Validation> {
    m.check()?;
    let vars: Vec<Var> = e.vars().into_iter().collect();
    let n = m.domain_size;
    let mut digits = vec![0usize; vars.len()];
    let mut checked = 0u64;
    loop {
        let rho: Assignment = vars.iter().cloned().zip(digits.iter().copied()).collect();
        checked += 1;
        if eval_in_model(m, &e.lhs, &rho)? != eval_in_model(m, &e.rhs, &rho)? {
            return Ok(Validation {
                holds: false,
                counterexample: Some(rho),
                checked,
            });
        }
        // Odometer increment, last variable fastest.
        let mut i = vars.len();
        loop {
            if i == 0 {
                return Ok(Validation {
                    holds: true,
                    counterexample: None,
                    checked,
                });
            }
            i -= 1;
            digits[i] += 1;
            if digits[i] < n {
                break;
            }
            digits[i] = 0;
        }
    }
}

#[derive(Clone, Debug)]
pub struct IndependenceEntry {
    pub model: FiniteModel,
    /// Tag of the axiom the model refutes.
    pub tag: &'static str,
    /// A closed instance of that axiom false in the model.
    pub refutation: Equation,
}

fn model(
    name: &str,
    neg: &[usize],
    and: &[&[usize]],
    or: &[&[usize]],
    atom_a: Option<usize>,
    default_atom: Option<usize>,
) -> FiniteModel {
    FiniteModel {
        name: name.to_string(),
        domain_size: neg.len(),
        neg: neg.to_vec(),
        and: and.iter().map(|r| r.to_vec()).collect(),
        or: or.iter().map(|r| r.to_vec()).collect(),
        t: 1,
        f: 0,
        atoms: atom_a
            .map(|v| BTreeMap::from([(Atom::new("a").expect("valid atom"), v)]))
            .unwrap_or_default(),
        default_atom,
    }
}

fn closed(tag: &str, lhs: &str, rhs: &str) -> Equation {
    let p = |s: &str| parse(s, Mode::Scl).expect("refutation parses");
    Equation::new(tag, p(lhs), p(rhs))
}

/// One model per axiom of the axiom set without F1 and F3, each validating
/// all of that set except the named axiom.
pub fn independence_suite() -> Vec<IndependenceEntry> {
    vec![
        IndependenceEntry {
            model: model(
                "M_F2",
                &[1, 1],
                &[&[0, 0], &[0, 1]],
                &[&[0, 0], &[1, 0]],
                None,
                None,
            ),
            tag: "F2",
            refutation: closed("F2", "F || F", "!(!T && !T)"),
        },
        IndependenceEntry {
            model: model(
                "M_F4",
                &[0, 1],
                &[&[0, 0], &[1, 1]],
                &[&[0, 0], &[1, 1]],
                None,
                None,
            ),
            tag: "F4",
            refutation: closed("F4", "T && F", "F"),
        },
        IndependenceEntry {
            model: model(
                "M_F5",
                &[0, 0],
                &[&[0, 0], &[0, 1]],
                &[&[0, 0], &[0, 0]],
                None,
                None,
            ),
            tag: "F5",
            refutation: closed("F5", "T || F", "T"),
        },
        IndependenceEntry {
            model: model(
                "M_F6",
                &[1, 0, 2],
                &[&[0, 0, 2], &[0, 1, 2], &[0, 2, 2]],
                &[&[0, 1, 2], &[1, 1, 2], &[2, 1, 2]],
                Some(2),
                None,
            ),
            tag: "F6",
            refutation: closed("F6", "F && a", "F"),
        },
        IndependenceEntry {
            model: model(
                "M_F7",
                &[1, 0, 2, 3],
                &[&[0, 0, 0, 0], &[0, 1, 2, 3], &[3, 2, 0, 3], &[3, 3, 2, 3]],
                &[&[0, 1, 2, 3], &[1, 1, 1, 1], &[2, 3, 1, 3], &[3, 3, 2, 3]],
                Some(2),
                None,
            ),
            tag: "F7",
            refutation: closed("F7", "(a && F) && a", "a && (F && a)"),
        },
        IndependenceEntry {
            model: model(
                "M_F8",
                &[1, 0, 3, 2],
                &[&[0, 0, 0, 0], &[0, 1, 2, 3], &[2, 2, 2, 2], &[3, 3, 3, 3]],
                &[&[0, 1, 2, 3], &[1, 1, 1, 1], &[2, 2, 2, 2], &[3, 3, 3, 3]],
                Some(2),
                None,
            ),
            tag: "F8",
            refutation: closed("F8", "!a && F", "a && F"),
        },
        IndependenceEntry {
            model: model(
                "M_F9",
                &[1, 0, 2, 4, 3],
                &[
                    &[0, 0, 0, 0, 0],
                    &[0, 1, 2, 3, 4],
                    &[3, 2, 2, 3, 2],
                    &[3, 3, 3, 3, 3],
                    &[3, 4, 4, 3, 4],
                ],
                &[
                    &[0, 1, 2, 3, 4],
                    &[1, 1, 1, 1, 1],
                    &[2, 4, 2, 2, 4],
                    &[3, 4, 3, 3, 4],
                    &[4, 4, 4, 4, 4],
                ],
                Some(2),
                None,
            ),
            tag: "F9",
            refutation: closed("F9", "(a && F) || a", "(a || T) && a"),
        },
        IndependenceEntry {
            model: model(
                "M_F10",
                &[1, 0, 2, 3],
                &[&[0, 0, 0, 0], &[0, 1, 2, 3], &[0, 2, 0, 0], &[3, 3, 3, 3]],
                &[&[0, 1, 2, 3], &[1, 1, 1, 1], &[2, 1, 1, 1], &[3, 3, 3, 3]],
                Some(2),
                Some(3),
            ),
            tag: "F10",
            refutation: closed(
                "F10",
                "(a && a) || (b && F)",
                "(a || (b && F)) && (a || (b && F))",
            ),
        },
    ]
}

/// Outcome of checking one independence model.
#[derive(Clone, Debug, Serialize)]
pub struct ModelReport {
    pub model: String,
    pub refutes: String,
    /// Every catalogue axiom with its exhaustive verdict.
    pub axioms: Vec<(String, Validation)>,
    /// True if all axioms of the reduced set other than `refutes` hold.
    pub others_valid: bool,
    pub own_refuted: bool,
    pub refutation: String,
    pub refutation_lhs: usize,
    pub refutation_rhs: usize,
    pub note: Option<String>,
}

impl ModelReport {
    pub fn passed(&self) -> bool {
        self.others_valid && self.own_refuted && self.refutation_lhs != self.refutation_rhs
    }
}

pub fn check_entry(entry: &IndependenceEntry) -> Result<ModelReport> {
    let minus: Vec<String> = eqfscl_minus().into_iter().map(|e| e.tag).collect();
    let mut axioms = vec![];
    for ax in eqfscl_axioms() {
        let v = validates(&entry.model, &ax)?;
        axioms.push((ax.tag, v));
    }
    let others_valid = axioms
        .iter()
        .filter(|(tag, _)| minus.contains(tag) && tag != entry.tag)
        .all(|(_, v)| v.holds);
    let own_refuted = axioms.iter().any(|(tag, v)| tag == entry.tag && !v.holds);
    let empty = Assignment::new();
    let refutation_lhs = eval_in_model(&entry.model, &entry.refutation.lhs, &empty)?;
    let refutation_rhs = eval_in_model(&entry.model, &entry.refutation.rhs, &empty)?;
    let note =
        (entry.tag == "F10").then(|| "the refutation needs a second atom besides a".to_string());
    Ok(ModelReport {
        model: entry.model.name.clone(),
        refutes: entry.tag.to_string(),
        axioms,
        others_valid,
        own_refuted,
        refutation: entry.refutation.to_string(),
        refutation_lhs,
        refutation_rhs,
        note,
    })
}

/// Reports for every model of [`independence_suite`].
pub fn check_suite() -> Result<Vec<ModelReport>> {
    independence_suite().iter().map(check_entry).collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeCheck {
    pub holds: bool,
    pub witness: Option<Substitution>,
    pub checked: usize,
}

/// Random testing of `e` in the free model: both sides must have equal
/// evaluation trees under `samples` random closed substitutions over the
/// atoms `a`, `b`, `c` with terms of depth at most 6.
pub fn valid_in_free_model(e: &Equation, samples: usize, seed: u64) -> Result<FreeCheck> {
    let atoms = gen::atom_pool(3);
    let mut rng = gen::rng(seed);
    let vars = e.vars();
    for i in 0..samples {
        let sigma = gen::substitution(&mut rng, &vars, &atoms, 6);
        let (l, r) = e.instantiate(&sigma)?;
        if se(&expand_full(&l))? != se(&expand_full(&r))? {
            return Ok(FreeCheck {
                holds: false,
                witness: Some(sigma),
                checked: i + 1,
            });
        }
    }
    Ok(FreeCheck {
        holds: true,
        witness: None,
        checked: samples,
    })
}
