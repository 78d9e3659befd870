use std::fmt::{self, Write as _};

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use serde_json::{json, Value};

use super::{LeafKind, Tree};
use crate::error::{Error, Result};
use crate::syntax::Atom;

fn write_text<L: LeafKind>(t: &Tree<L>, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    match t {
        Tree::Leaf(l) => f.write_str(l.symbol()),
        Tree::Node(n) => {
            f.write_str("(")?;
            write_text(&n.left, f)?;
            write!(f, " <{}> ", n.atom)?;
            write_text(&n.right, f)?;
            f.write_str(")")
        }
    }
}

/// `(L <a> R)` with leaves `T`, `F` and `^`.
impl<L: LeafKind> fmt::Display for Tree<L> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_text(self, f)
    }
}

impl<L: LeafKind> fmt::Debug for Tree<L> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_text(self, f)
    }
}

struct TextParser<'a> {
    src: &'a str,
    at: usize,
}

impl TextParser<'_> {
    fn skip_ws(&mut self) {
        while self.src[self.at..].starts_with(|c: char| c.is_ascii_whitespace()) {
            self.at += 1;
        }
    }

    fn err(&self, message: impl Into<String>) -> Error {
        Error::Syntax {
            pos: self.at,
            message: message.into(),
        }
    }

    fn eat(&mut self, s: &str) -> Result<()> {
        self.skip_ws();
        if self.src[self.at..].starts_with(s) {
            self.at += s.len();
            Ok(())
        } else {
            Err(self.err(format!("expected '{s}'")))
        }
    }

    fn tree<L: LeafKind>(&mut self) -> Result<Tree<L>> {
        self.skip_ws();
        let rest = &self.src[self.at..];
        if rest.starts_with('(') {
            self.at += 1;
            let left = self.tree()?;
            self.eat("<")?;
            self.skip_ws();
            let start = self.at;
            while self.src[self.at..].starts_with(|c: char| c.is_ascii_alphanumeric() || c == '_') {
                self.at += 1;
            }
            let atom = Atom::new(&self.src[start..self.at]).map_err(|_| Error::Syntax {
                pos: start,
                message: "expected an atom name".into(),
            })?;
            self.eat(">")?;
            let right = self.tree()?;
            self.eat(")")?;
            return Ok(Tree::node(atom, left, right));
        }
        let sym = rest.get(..1).unwrap_or("");
        match L::from_symbol(sym) {
            Some(l) => {
                self.at += 1;
                Ok(Tree::Leaf(l))
            }
            None => Err(self.err("expected a leaf or '('")),
        }
    }
}

impl<L: LeafKind> Tree<L> {
    /// Parses the text format.
    pub fn from_text(text: &str) -> Result<Self> {
        let mut p = TextParser { src: text, at: 0 };
        let t = p.tree()?;
        p.skip_ws();
        if p.at != text.len() {
            return Err(p.err("trailing input after tree"));
        }
        Ok(t)
    }

    /// Parses either the JSON or the text format.
    pub fn read(input: &str) -> Result<Self> {
        if input.trim_start().starts_with('{') {
            let value: Value =
                serde_json::from_str(input).map_err(|e| Error::Format(e.to_string()))?;
            Self::from_json(&value)
        } else {
            Self::from_text(input)
        }
    }

    /// `{"leaf":"T"}` or `{"node":"a","l":..,"r":..}`; holes are `"hole"`.
    pub fn to_json(&self) -> Value {
        match self {
            Tree::Leaf(l) => json!({"leaf": l.json_name()}),
            Tree::Node(n) => json!({
                "node": n.atom.name(),
                "l": n.left.to_json(),
                "r": n.right.to_json(),
            }),
        }
    }

    pub fn from_json(value: &Value) -> Result<Self> {
        let bad = |m: &str| Error::Format(m.to_string());
        let obj = value
            .as_object()
            .ok_or_else(|| bad("tree must be a JSON object"))?;
        if let Some(leaf) = obj.get("leaf") {
            let name = leaf
                .as_str()
                .ok_or_else(|| bad("\"leaf\" must be a string"))?;
            return L::from_json_name(name)
                .map(Tree::Leaf)
                .ok_or_else(|| Error::Format(format!("leaf {name:?} not allowed here")));
        }
        let atom = obj
            .get("node")
            .and_then(Value::as_str)
            .ok_or_else(|| bad("tree needs a \"leaf\" or \"node\" string"))?;
        let child = |k: &str| -> Result<Self> {
            Self::from_json(
                obj.get(k)
                    .ok_or_else(|| Error::Format(format!("missing field {k:?}")))?,
            )
        };
        Ok(Tree::node(Atom::new(atom)?, child("l")?, child("r")?))
    }

    /// Graphviz rendering. Solid edges are true branches, dashed edges false.
    pub fn to_dot(&self) -> String {
        fn go<L: LeafKind>(t: &Tree<L>, next: &mut usize, out: &mut String) -> usize {
            let id = *next;
            *next += 1;
            match t {
                Tree::Leaf(l) => {
                    let _ = writeln!(out, "  n{id} [label=\"{}\", shape=box];", l.symbol());
                }
                Tree::Node(n) => {
                    let _ = writeln!(out, "  n{id} [label=\"{}\"];", n.atom);
                    let l = go(&n.left, next, out);
                    let r = go(&n.right, next, out);
                    let _ = writeln!(out, "  n{id} -> n{l};");
                    let _ = writeln!(out, "  n{id} -> n{r} [style=dashed];");
                }
            }
            id
        }
        let mut out = String::from("digraph tree {\n");
        go(self, &mut 0, &mut out);
        out.push_str("}\n");
        out
    }
}

impl<L: LeafKind> Serialize for Tree<L> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(serializer)
    }
}

impl<'de, L: LeafKind> Deserialize<'de> for Tree<L> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let value = Value::deserialize(deserializer)?;
        Tree::from_json(&value).map_err(D::Error::custom)
    }
}
