//! Evaluation trees: binary trees over atoms whose left branch is taken when
//! the atom yields true. [`EvalTree`] has leaves `T`/`F`, [`HoleTree`] may
//! additionally carry the hole leaf `^`.
//!
//! Subtrees are reference counted and may be shared; equality is structural.

mod format;

use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::syntax::{Atom, Term};

/// Node cap used by [`se`].
pub const DEFAULT_CAP: usize = 1_000_000;

/// A leaf alphabet. Indices 0 and 1 are always `T` and `F`.
pub trait LeafKind: Copy + Eq + fmt::Debug + Send + Sync + 'static {
    const T: Self;
    const F: Self;
    fn index(self) -> usize;
    /// Symbol in the text format.
    fn symbol(self) -> &'static str;
    /// Name in the JSON format.
    fn json_name(self) -> &'static str;
    fn from_symbol(s: &str) -> Option<Self>;
    fn from_json_name(s: &str) -> Option<Self>;
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Truth {
    T,
    F,
}

impl LeafKind for Truth {
    const T: Self = Truth::T;
    const F: Self = Truth::F;

    fn index(self) -> usize {
        self as usize
    }

    fn symbol(self) -> &'static str {
        match self {
            Truth::T => "T",
            Truth::F => "F",
        }
    }

    fn json_name(self) -> &'static str {
        self.symbol()
    }

    fn from_symbol(s: &str) -> Option<Self> {
        match s {
            "T" => Some(Truth::T),
            "F" => Some(Truth::F),
            _ => None,
        }
    }

    fn from_json_name(s: &str) -> Option<Self> {
        Self::from_symbol(s)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum HoleLeaf {
    T,
    F,
    Hole,
}

impl LeafKind for HoleLeaf {
    const T: Self = HoleLeaf::T;
    const F: Self = HoleLeaf::F;

    fn index(self) -> usize {
        self as usize
    }

    fn symbol(self) -> &'static str {
        match self {
            HoleLeaf::T => "T",
            HoleLeaf::F => "F",
            HoleLeaf::Hole => "^",
        }
    }

    fn json_name(self) -> &'static str {
        match self {
            HoleLeaf::Hole => "hole",
            other => other.symbol(),
        }
    }

    fn from_symbol(s: &str) -> Option<Self> {
        match s {
            "T" => Some(HoleLeaf::T),
            "F" => Some(HoleLeaf::F),
            "^" => Some(HoleLeaf::Hole),
            _ => None,
        }
    }

    fn from_json_name(s: &str) -> Option<Self> {
        match s {
            "hole" => Some(HoleLeaf::Hole),
            "^" => None,
            other => Self::from_symbol(other),
        }
    }
}

pub struct Node<L> {
    atom: Atom,
    left: Tree<L>,
    right: Tree<L>,
    internal: u64,
    leaves: [u64; 3],
    depth: usize,
}

pub enum Tree<L> {
    Leaf(L),
    Node(Arc<Node<L>>),
}

pub type EvalTree = Tree<Truth>;
pub type HoleTree = Tree<HoleLeaf>;

impl<L> Clone for Tree<L>
where
    L: Copy,
{
    fn clone(&self) -> Self {
        match self {
            Tree::Leaf(l) => Tree::Leaf(*l),
            Tree::Node(n) => Tree::Node(Arc::clone(n)),
        }
    }
}

/// Which of the two truth leaves occur.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct LeafProfile {
    pub has_t: bool,
    pub has_f: bool,
}

impl<L: LeafKind> Tree<L> {
    pub fn leaf(l: L) -> Self {
        Tree::Leaf(l)
    }

    pub fn node(atom: Atom, left: Tree<L>, right: Tree<L>) -> Self {
        let mut leaves = left.leaf_counts();
        for (acc, r) in leaves.iter_mut().zip(right.leaf_counts()) {
            *acc = acc.saturating_add(r);
        }
        Tree::Node(Arc::new(Node {
            internal: left
                .internal_count()
                .saturating_add(right.internal_count())
                .saturating_add(1),
            depth: 1 + left.depth().max(right.depth()),
            leaves,
            atom,
            left,
            right,
        }))
    }

    pub fn is_leaf(&self) -> bool {
        matches!(self, Tree::Leaf(_))
    }

    pub fn as_leaf(&self) -> Option<L> {
        match self {
            Tree::Leaf(l) => Some(*l),
            Tree::Node(_) => None,
        }
    }

    /// `(atom, left, right)` of an internal node.
    pub fn as_node(&self) -> Option<(&Atom, &Tree<L>, &Tree<L>)> {
        match self {
            Tree::Leaf(_) => None,
            Tree::Node(n) => Some((&n.atom, &n.left, &n.right)),
        }
    }

    pub fn depth(&self) -> usize {
        match self {
            Tree::Leaf(_) => 0,
            Tree::Node(n) => n.depth,
        }
    }

    pub fn internal_count(&self) -> u64 {
        match self {
            Tree::Leaf(_) => 0,
            Tree::Node(n) => n.internal,
        }
    }

    /// Occurrences of each leaf kind, indexed by [`LeafKind::index`].
    pub fn leaf_counts(&self) -> [u64; 3] {
        match self {
            Tree::Leaf(l) => {
                let mut c = [0; 3];
                c[l.index()] = 1;
                c
            }
            Tree::Node(n) => n.leaves,
        }
    }

    pub fn count(&self, l: L) -> u64 {
        self.leaf_counts()[l.index()]
    }

    pub fn contains(&self, l: L) -> bool {
        self.count(l) > 0
    }

    /// Total number of nodes, leaves included, counted with multiplicity.
    pub fn size(&self) -> u64 {
        let c = self.leaf_counts();
        self.internal_count()
            .saturating_add(c[0])
            .saturating_add(c[1])
            .saturating_add(c[2])
    }

    pub fn leaf_profile(&self) -> LeafProfile {
        LeafProfile {
            has_t: self.contains(L::T),
            has_f: self.contains(L::F),
        }
    }

    /// Replaces every leaf `l` by `f(l)`. Shared subtrees are visited once.
    pub fn map_leaves<M: LeafKind>(&self, f: &impl Fn(L) -> Tree<M>) -> Tree<M> {
        fn go<L: LeafKind, M: LeafKind>(
            t: &Tree<L>,
            f: &impl Fn(L) -> Tree<M>,
            memo: &mut HashMap<*const Node<L>, Tree<M>>,
        ) -> Tree<M> {
            match t {
                Tree::Leaf(l) => f(*l),
                Tree::Node(n) => {
                    let key = Arc::as_ptr(n);
                    if let Some(done) = memo.get(&key) {
                        return done.clone();
                    }
                    let out =
                        Tree::node(n.atom.clone(), go(&n.left, f, memo), go(&n.right, f, memo));
                    memo.insert(key, out.clone());
                    out
                }
            }
        }
        go(self, f, &mut HashMap::new())
    }

    /// Preorder list of all subtrees, with multiplicity.
    pub fn subtrees(&self) -> Vec<&Tree<L>> {
        let mut out = Vec::new();
        let mut stack = vec![self];
        while let Some(t) = stack.pop() {
            out.push(t);
            if let Tree::Node(n) = t {
                stack.push(&n.right);
                stack.push(&n.left);
            }
        }
        out
    }

    pub fn ptr_eq(&self, other: &Self) -> bool {
        match (self, other) {
            (Tree::Node(a), Tree::Node(b)) => Arc::ptr_eq(a, b),
            (Tree::Leaf(a), Tree::Leaf(b)) => a == b,
            _ => false,
        }
    }
}

impl<L: LeafKind> PartialEq for Tree<L> {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (Tree::Leaf(a), Tree::Leaf(b)) => a == b,
            (Tree::Node(a), Tree::Node(b)) => {
                Arc::ptr_eq(a, b)
                    || (a.internal == b.internal
                        && a.leaves == b.leaves
                        && a.depth == b.depth
                        && a.atom == b.atom
                        && a.left == b.left
                        && a.right == b.right)
            }
            _ => false,
        }
    }
}

impl<L: LeafKind> Eq for Tree<L> {}

/// Hashes only root-level summary data, which equal trees share.
impl<L: LeafKind> Hash for Tree<L> {
    fn hash<H: Hasher>(&self, state: &mut H) {
        match self {
            Tree::Leaf(l) => l.index().hash(state),
            Tree::Node(n) => {
                n.atom.hash(state);
                n.internal.hash(state);
                n.leaves.hash(state);
                n.depth.hash(state);
            }
        }
    }
}

impl EvalTree {
    pub const T: EvalTree = Tree::Leaf(Truth::T);
    pub const F: EvalTree = Tree::Leaf(Truth::F);

    /// `T <a> F`, the tree of a single atom.
    pub fn of_atom(atom: Atom) -> EvalTree {
        Tree::node(atom, EvalTree::T, EvalTree::F)
    }

    /// The same tree viewed as a tree with (no) holes.
    pub fn holed(&self) -> HoleTree {
        self.map_leaves(&|l| match l {
            Truth::T => HoleTree::T,
            Truth::F => HoleTree::F,
        })
    }

    /// Replaces the `T` leaves by holes.
    pub fn hole_t(&self) -> HoleTree {
        self.map_leaves(&|l| match l {
            Truth::T => HoleTree::HOLE,
            Truth::F => HoleTree::F,
        })
    }

    /// Replaces the `F` leaves by holes.
    pub fn hole_f(&self) -> HoleTree {
        self.map_leaves(&|l| match l {
            Truth::T => HoleTree::T,
            Truth::F => HoleTree::HOLE,
        })
    }
}

impl HoleTree {
    pub const T: HoleTree = Tree::Leaf(HoleLeaf::T);
    pub const F: HoleTree = Tree::Leaf(HoleLeaf::F);
    pub const HOLE: HoleTree = Tree::Leaf(HoleLeaf::Hole);

    pub fn has_hole(&self) -> bool {
        self.contains(HoleLeaf::Hole)
    }

    /// The tree without holes, if there are none.
    pub fn to_eval(&self) -> Option<EvalTree> {
        if self.has_hole() {
            return None;
        }
        Some(self.map_leaves(&|l| match l {
            HoleLeaf::T => EvalTree::T,
            _ => EvalTree::F,
        }))
    }

    /// Replaces every hole by `z` and returns an evaluation tree.
    pub fn fill(&self, z: &EvalTree) -> EvalTree {
        self.map_leaves(&|l| match l {
            HoleLeaf::T => EvalTree::T,
            HoleLeaf::F => EvalTree::F,
            HoleLeaf::Hole => z.clone(),
        })
    }

    /// Replaces every hole by the tree `z`, which may itself contain holes.
    pub fn graft(&self, z: &HoleTree) -> HoleTree {
        if !self.has_hole() {
            return self.clone();
        }
        self.map_leaves(&|l| match l {
            HoleLeaf::Hole => z.clone(),
            other => Tree::Leaf(other),
        })
    }

    /// Replaces holes by `T` and `F` leaves respectively.
    pub fn close_with(&self, with: Truth) -> EvalTree {
        self.fill(&Tree::Leaf(with))
    }
}

/// `x[T -> y, F -> z]`.
pub fn replace(x: &EvalTree, y: &EvalTree, z: &EvalTree) -> EvalTree {
    x.map_leaves(&|l| match l {
        Truth::T => y.clone(),
        Truth::F => z.clone(),
    })
}

/// Size of `x[T -> y, F -> z]`, without building it.
pub fn replaced_size(x: &EvalTree, y: &EvalTree, z: &EvalTree) -> u128 {
    x.internal_count() as u128
        + x.count(Truth::T) as u128 * y.size() as u128
        + x.count(Truth::F) as u128 * z.size() as u128
}

/// [`replace`], refusing to build a tree of more than `cap` nodes.
pub fn replace_capped(x: &EvalTree, y: &EvalTree, z: &EvalTree, cap: usize) -> Result<EvalTree> {
    let size = replaced_size(x, y, z);
    if size > cap as u128 {
        return Err(Error::TreeTooLarge { size, cap });
    }
    Ok(replace(x, y, z))
}

/// Short-circuit evaluation of a closed term, capped at [`DEFAULT_CAP`] nodes.
pub fn se(p: &Term) -> Result<EvalTree> {
    se_with_cap(p, DEFAULT_CAP)
}

pub fn se_with_cap(p: &Term, cap: usize) -> Result<EvalTree> {
    p.require_closed()?;
    se_rec(p, cap)
}

fn se_rec(p: &Term, cap: usize) -> Result<EvalTree> {
    match p {
        Term::True => Ok(EvalTree::T),
        Term::False => Ok(EvalTree::F),
        Term::Atom(a) => Ok(EvalTree::of_atom(a.clone())),
        Term::Var(v) => Err(Error::NonClosedTerm(v.name().to_string())),
        Term::FullAnd(..) | Term::FullOr(..) => Err(Error::mode(
            "full connective",
            "evaluation; expand full connectives first",
        )),
        Term::Not(x) => {
            let x = se_rec(x, cap)?;
            replace_capped(&x, &EvalTree::F, &EvalTree::T, cap)
        }
        Term::And(l, r) => {
            let (l, r) = (se_rec(l, cap)?, se_rec(r, cap)?);
            replace_capped(&l, &r, &EvalTree::F, cap)
        }
        Term::Or(l, r) => {
            let (l, r) = (se_rec(l, cap)?, se_rec(r, cap)?);
            replace_capped(&l, &EvalTree::T, &r, cap)
        }
        Term::Cond(x, y, z) => {
            let (x, y, z) = (se_rec(x, cap)?, se_rec(y, cap)?, se_rec(z, cap)?);
            replace_capped(&y, &x, &z, cap)
        }
    }
}
