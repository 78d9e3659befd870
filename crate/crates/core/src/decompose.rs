//! Decompositions `X = Y[^ -> Z]` of evaluation trees into a holed context
//! `Y` and a core `Z`.
//!
//! Candidates are enumerated per distinct subtree `Z` containing both `T` and
//! `F`, with every occurrence of `Z` replaced by a hole. Leaf counts of the
//! context follow from occurrence counts, so contexts are only built for
//! emitted candidates.

use std::collections::HashMap;
use std::fmt;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::evaltree::{se, EvalTree, HoleTree, Node, Tree, Truth};
use crate::normalize::Star;
use crate::syntax::{Atom, Term};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum CandidateKind {
    /// Context has `F` but no `T`.
    Ccd,
    /// Context has `T` but no `F`.
    Cdd,
    /// Context has neither, and the core is non-decomposable.
    Ctsd,
}

impl CandidateKind {
    pub fn name(self) -> &'static str {
        match self {
            CandidateKind::Ccd => "ccd",
            CandidateKind::Cdd => "cdd",
            CandidateKind::Ctsd => "ctsd",
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Decomposition {
    pub context: HoleTree,
    pub core: EvalTree,
}

impl Decomposition {
    /// `context[^ -> core]`.
    pub fn reconstruct(&self) -> EvalTree {
        self.context.fill(&self.core)
    }

    pub fn to_json(&self) -> Value {
        json!({"context": self.context.to_json(), "core": self.core.to_json()})
    }
}

impl fmt::Display for Decomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} [^ -> {}]", self.context, self.core)
    }
}

struct Entry {
    tree: EvalTree,
    children: Option<(usize, usize)>,
    depth: usize,
    t: u128,
    f: u128,
    size: u128,
}

/// Distinct subtrees of a tree, children before parents; the root is last.
struct Interned {
    root: usize,
    entries: Vec<Entry>,
    occ: Vec<u128>,
    first: Vec<u128>,
}

impl Interned {
    fn new(x: &EvalTree) -> Interned {
        let mut entries = vec![];
        let mut by_shape: HashMap<(Atom, usize, usize), usize> = HashMap::new();
        let mut by_ptr: HashMap<*const Node<Truth>, usize> = HashMap::new();
        for leaf in [EvalTree::T, EvalTree::F] {
            entries.push(Entry {
                t: leaf.count(Truth::T) as u128,
                f: leaf.count(Truth::F) as u128,
                tree: leaf,
                children: None,
                depth: 0,
                size: 1,
            });
        }
        fn go(
            t: &EvalTree,
            entries: &mut Vec<Entry>,
            by_shape: &mut HashMap<(Atom, usize, usize), usize>,
            by_ptr: &mut HashMap<*const Node<Truth>, usize>,
        ) -> usize {
            let Tree::Node(n) = t else {
                return if *t == EvalTree::T { 0 } else { 1 };
            };
            let ptr = std::sync::Arc::as_ptr(n);
            if let Some(&id) = by_ptr.get(&ptr) {
                return id;
            }
            let (atom, l, r) = t.as_node().expect("node");
            let li = go(l, entries, by_shape, by_ptr);
            let ri = go(r, entries, by_shape, by_ptr);
            let id = *by_shape.entry((atom.clone(), li, ri)).or_insert_with(|| {
                let (a, b) = (&entries[li], &entries[ri]);
                entries.push(Entry {
                    tree: t.clone(),
                    children: Some((li, ri)),
                    depth: t.depth(),
                    t: a.t + b.t,
                    f: a.f + b.f,
                    size: 1 + a.size + b.size,
                });
                entries.len() - 1
            });
            by_ptr.insert(ptr, id);
            id
        }
        let root = go(x, &mut entries, &mut by_shape, &mut by_ptr);
        let n = entries.len();
        let mut occ = vec![0u128; n];
        let mut first = vec![u128::MAX; n];
        occ[root] = 1;
        first[root] = 0;
        // Ids are assigned after children, so descending order visits
        // parents first.
        for id in (0..n).rev() {
            if occ[id] == 0 {
                continue;
            }
            if let Some((l, r)) = entries[id].children {
                occ[l] += occ[id];
                occ[r] += occ[id];
                first[l] = first[l].min(first[id] + 1);
                first[r] = first[r].min(first[id] + 1 + entries[l].size);
            }
        }
        Interned {
            root,
            entries,
            occ,
            first,
        }
    }

    fn root(&self) -> usize {
        self.root
    }

    /// The tree with every occurrence of subtree `z` replaced by a hole.
    fn context(&self, z: usize) -> HoleTree {
        fn go(id: usize, z: usize, me: &Interned, memo: &mut HashMap<usize, HoleTree>) -> HoleTree {
            if id == z {
                return HoleTree::HOLE;
            }
            if let Some(t) = memo.get(&id) {
                return t.clone();
            }
            let e = &me.entries[id];
            let out = match e.children {
                None => e.tree.holed(),
                Some((l, r)) => {
                    let (atom, _, _) = e.tree.as_node().expect("node");
                    Tree::node(atom.clone(), go(l, z, me, memo), go(r, z, me, memo))
                }
            };
            memo.insert(id, out.clone());
            out
        }
        go(self.root(), z, self, &mut HashMap::new())
    }

    /// True if some proper subtree's occurrences under `z` cover all of
    /// `z`'s leaves.
    fn decomposable(&self, z: usize) -> bool {
        let ez = &self.entries[z];
        let leaves = ez.t + ez.f;
        let mut occ: HashMap<usize, u128> = HashMap::new();
        occ.insert(z, 1);
        let mut below: Vec<usize> = vec![z];
        let mut seen = std::collections::HashSet::from([z]);
        let mut i = 0;
        while i < below.len() {
            if let Some((l, r)) = self.entries[below[i]].children {
                for c in [l, r] {
                    if seen.insert(c) {
                        below.push(c);
                    }
                }
            }
            i += 1;
        }
        below.sort_unstable_by(|a, b| b.cmp(a));
        for &id in &below {
            let o = occ[&id];
            if let Some((l, r)) = self.entries[id].children {
                *occ.entry(l).or_default() += o;
                *occ.entry(r).or_default() += o;
            }
        }
        below.iter().any(|&v| {
            let e = &self.entries[v];
            v != z && occ[&v] * (e.t + e.f) == leaves
        })
    }

    fn candidates(&self, kind: CandidateKind) -> Vec<usize> {
        let root = &self.entries[self.root()];
        let mut out: Vec<usize> = (0..self.entries.len())
            .filter(|&z| {
                let e = &self.entries[z];
                if self.occ[z] == 0 || e.t == 0 || e.f == 0 {
                    return false;
                }
                let yt = root.t - self.occ[z] * e.t;
                let yf = root.f - self.occ[z] * e.f;
                match kind {
                    CandidateKind::Ccd => yt == 0 && yf > 0,
                    CandidateKind::Cdd => yt > 0 && yf == 0,
                    CandidateKind::Ctsd => yt == 0 && yf == 0 && !self.decomposable(z),
                }
            })
            .collect();
        out.sort_by_key(|&z| (self.entries[z].depth, self.first[z]));
        out
    }

    fn decomposition(&self, z: usize) -> Decomposition {
        Decomposition {
            context: self.context(z),
            core: self.entries[z].tree.clone(),
        }
    }
}

/// All candidates of `kind`, ordered by core depth, then by the preorder
/// index of the core's first occurrence.
pub fn enumerate_candidates(x: &EvalTree, kind: CandidateKind) -> Vec<Decomposition> {
    let it = Interned::new(x);
    it.candidates(kind)
        .into_iter()
        .map(|z| it.decomposition(z))
        .collect()
}

fn select(x: &EvalTree, kind: CandidateKind, name: &'static str) -> Result<Option<Decomposition>> {
    let it = Interned::new(x);
    let cands = it.candidates(kind);
    let Some(&best) = cands.first() else {
        return Ok(None);
    };
    let depth = it.entries[best].depth;
    let count = cands
        .iter()
        .filter(|&&z| it.entries[z].depth == depth)
        .count();
    if count > 1 {
        return Err(Error::AmbiguousDecomposition {
            kind: name,
            count,
            depth,
        });
    }
    Ok(Some(it.decomposition(best)))
}

/// The conjunction decomposition: the candidate conjunction decomposition
/// with the shallowest core.
pub fn cd(x: &EvalTree) -> Result<Option<Decomposition>> {
    select(x, CandidateKind::Ccd, "cd")
}

/// The disjunction decomposition.
pub fn dd(x: &EvalTree) -> Result<Option<Decomposition>> {
    select(x, CandidateKind::Cdd, "dd")
}

/// The T-*-decomposition.
pub fn tsd(x: &EvalTree) -> Result<Option<Decomposition>> {
    select(x, CandidateKind::Ctsd, "tsd")
}

/// True iff there is no `U != ^` made of holes and nodes only with
/// `z = U[^ -> V]`.
pub fn is_nondecomposable(z: &EvalTree) -> bool {
    let it = Interned::new(z);
    !it.decomposable(it.root())
}

/// The evaluation tree of the rightmost literal of a *-term.
pub fn witness(p: &Term) -> Result<EvalTree> {
    let star = Star::from_term(p).ok_or_else(|| Error::NotStarTerm(p.to_string()))?;
    se(&star.last_lit().to_term())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::{parse, Mode};

    fn t(s: &str) -> EvalTree {
        EvalTree::from_text(s).unwrap()
    }

    fn h(s: &str) -> HoleTree {
        HoleTree::from_text(s).unwrap()
    }

    fn se_of(s: &str) -> EvalTree {
        se(&parse(s, Mode::Scl).unwrap()).unwrap()
    }

    fn dec(ctx: &str, core: &str) -> Decomposition {
        Decomposition {
            context: h(ctx),
            core: t(core),
        }
    }

    #[test]
    fn candidate_examples() {
        let x = se_of("((a && T) || F) && ((b && T) || F)");
        assert!(
            enumerate_candidates(&x, CandidateKind::Ccd).contains(&dec("(^ <a> F)", "(T <b> F)"))
        );
        assert!(enumerate_candidates(&se_of("a && b"), CandidateKind::Cdd).is_empty());
        assert!(enumerate_candidates(&EvalTree::T, CandidateKind::Ccd).is_empty());
    }

    #[test]
    fn selector_examples() {
        let x = se_of("((a && T) || F) && ((b && T) || F)");
        assert_eq!(cd(&x).unwrap(), Some(dec("(^ <a> F)", "(T <b> F)")));
        assert_eq!(dd(&x).unwrap(), None);
        assert_eq!(tsd(&t("(T <a> F)")).unwrap(), Some(dec("^", "(T <a> F)")));
    }

    #[test]
    fn nondecomposable_examples() {
        assert!(is_nondecomposable(&se_of("(a && T) || F")));
        assert!(!is_nondecomposable(&t("((T <b> F) <a> (T <b> F))")));
        assert!(is_nondecomposable(&EvalTree::T));
        assert!(!is_nondecomposable(&t("(T <a> T)")));
    }

    #[test]
    fn witness_examples() {
        let p = |s: &str| parse(s, Mode::Scl).unwrap();
        assert_eq!(witness(&p("(a && T) || F")).unwrap(), t("(T <a> F)"));
        assert_eq!(
            witness(&p("((a && T) || F) && ((b && T) || F)")).unwrap(),
            t("(T <b> F)")
        );
        assert_eq!(
            witness(&p(
                "(((a && T) || F) || ((b && T) || F)) && ((c && T) || F)"
            ))
            .unwrap(),
            t("(T <c> F)")
        );
        assert!(matches!(witness(&p("T")), Err(Error::NotStarTerm(_))));
    }

    #[test]
    fn order_is_by_depth_then_position() {
        let x = se_of("((a && T) || F) && ((b && T) || F)");
        let all = enumerate_candidates(&x, CandidateKind::Ccd);
        for w in all.windows(2) {
            assert!(w[0].core.depth() <= w[1].core.depth());
        }
        for d in &all {
            assert_eq!(d.reconstruct(), x);
        }
    }
}
