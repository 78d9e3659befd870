use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use serde_json::{json, Map, Value};

use super::{Atom, Term, Var};
use crate::error::{Error, Result};

impl Term {
    /// JSON form: `{"kind":"and","l":..,"r":..}`, `{"kind":"atom","name":"a"}`,
    /// `{"kind":"not","arg":..}`, `{"kind":"cond","then":..,"if":..,"else":..}`.
    pub fn to_json(&self) -> Value {
        let bin = |kind: &str, l: &Term, r: &Term| json!({"kind": kind, "l": l.to_json(), "r": r.to_json()});
        match self {
            Term::True => json!({"kind": "true"}),
            Term::False => json!({"kind": "false"}),
            Term::Atom(a) => json!({"kind": "atom", "name": a.name()}),
            Term::Var(v) => json!({"kind": "var", "name": v.name()}),
            Term::Not(x) => json!({"kind": "not", "arg": x.to_json()}),
            Term::And(l, r) => bin("and", l, r),
            Term::Or(l, r) => bin("or", l, r),
            Term::FullAnd(l, r) => bin("full_and", l, r),
            Term::FullOr(l, r) => bin("full_or", l, r),
            Term::Cond(x, y, z) => json!({
                "kind": "cond",
                "then": x.to_json(),
                "if": y.to_json(),
                "else": z.to_json(),
            }),
        }
    }

    pub fn from_json(value: &Value) -> Result<Term> {
        let obj = value
            .as_object()
            .ok_or_else(|| Error::Format("term must be a JSON object".into()))?;
        let kind = field(obj, "kind")?
            .as_str()
            .ok_or_else(|| Error::Format("\"kind\" must be a string".into()))?;
        let sub = |name: &str| -> Result<Term> { Term::from_json(field(obj, name)?) };
        let name = || -> Result<&str> {
            field(obj, "name")?
                .as_str()
                .ok_or_else(|| Error::Format("\"name\" must be a string".into()))
        };
        Ok(match kind {
            "true" => Term::True,
            "false" => Term::False,
            "atom" => Term::Atom(Atom::new(name()?)?),
            "var" => Term::Var(Var::new(name()?)?),
            "not" => Term::not(sub("arg")?),
            "and" => Term::and(sub("l")?, sub("r")?),
            "or" => Term::or(sub("l")?, sub("r")?),
            "full_and" => Term::full_and(sub("l")?, sub("r")?),
            "full_or" => Term::full_or(sub("l")?, sub("r")?),
            "cond" => Term::cond(sub("then")?, sub("if")?, sub("else")?),
            other => return Err(Error::Format(format!("unknown term kind {other:?}"))),
        })
    }
}

fn field<'a>(obj: &'a Map<String, Value>, name: &str) -> Result<&'a Value> {
    obj.get(name)
        .ok_or_else(|| Error::Format(format!("missing field {name:?}")))
}

impl Serialize for Term {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Term {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let value = Value::deserialize(deserializer)?;
        Term::from_json(&value).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::{parse, Mode};

    #[test]
    fn field_names() {
        let t = parse("a && !$x", Mode::Open).unwrap();
        assert_eq!(
            t.to_json(),
            json!({"kind":"and","l":{"kind":"atom","name":"a"},
                   "r":{"kind":"not","arg":{"kind":"var","name":"x"}}})
        );
        let c = parse("T <| a |> F", Mode::Cp).unwrap();
        assert_eq!(
            c.to_json(),
            json!({"kind":"cond","then":{"kind":"true"},"if":{"kind":"atom","name":"a"},
                   "else":{"kind":"false"}})
        );
    }

    #[test]
    fn round_trip_through_serde() {
        let t = parse("(a |.| b) &.& !(c <| T |> $y)", Mode::Open).unwrap();
        let s = serde_json::to_string(&t).unwrap();
        let back: Term = serde_json::from_str(&s).unwrap();
        assert_eq!(back, t);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(Term::from_json(&json!({"kind":"atom","name":"T"})).is_err());
        assert!(Term::from_json(&json!({"kind":"and","l":{"kind":"true"}})).is_err());
        assert!(Term::from_json(&json!({"kind":"xor"})).is_err());
        assert!(Term::from_json(&json!(3)).is_err());
    }
}
