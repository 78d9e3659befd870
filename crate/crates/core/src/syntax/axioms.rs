use super::{parse, Atom, Equation, Mode};

fn eq(tag: &str, lhs: &str, rhs: &str) -> Equation {
    let p = |s: &str| parse(s, Mode::Open).expect("catalogue entry parses");
    Equation::new(tag, p(lhs), p(rhs))
}

/// The ten axioms F1..F10, in order.
pub fn eqfscl_axioms() -> Vec<Equation> {
    vec![
        eq("F1", "F", "!T"),
        eq("F2", "$x || $y", "!(!$x && !$y)"),
        eq("F3", "!!$x", "$x"),
        eq("F4", "T && $x", "$x"),
        eq("F5", "$x || F", "$x"),
        eq("F6", "F && $x", "F"),
        eq("F7", "($x && $y) && $z", "$x && ($y && $z)"),
        eq("F8", "!$x && F", "$x && F"),
        eq("F9", "($x && F) || $y", "($x || T) && $y"),
        eq(
            "F10",
            "($x && $y) || ($z && F)",
            "($x || ($z && F)) && ($y || ($z && F))",
        ),
    ]
}

/// The axioms without F1 and F3.
pub fn eqfscl_minus() -> Vec<Equation> {
    eqfscl_axioms()
        .into_iter()
        .filter(|e| e.tag != "F1" && e.tag != "F3")
        .collect()
}

/// CP1..CP4 for the conditional.
pub fn cp_axioms() -> Vec<Equation> {
    vec![
        eq("CP1", "$x <| T |> $y", "$x"),
        eq("CP2", "$x <| F |> $y", "$y"),
        eq("CP3", "T <| $x |> F", "$x"),
        eq(
            "CP4",
            "$x <| ($y <| $z |> $u) |> $v",
            "($x <| $y |> $v) <| $z |> ($x <| $u |> $v)",
        ),
    ]
}

/// The two repetition-proof schemes instantiated per atom, tagged `RP<a>-1`
/// and `RP<a>-2`.
pub fn rp_schemes(atoms: &[Atom]) -> Vec<Equation> {
    atoms
        .iter()
        .flat_map(|a| {
            [
                eq(
                    &format!("RP{a}-1"),
                    &format!("($x <| {a} |> $y) <| {a} |> $z"),
                    &format!("($x <| {a} |> $x) <| {a} |> $z"),
                ),
                eq(
                    &format!("RP{a}-2"),
                    &format!("$x <| {a} |> ($y <| {a} |> $z)"),
                    &format!("$x <| {a} |> ($z <| {a} |> $z)"),
                ),
            ]
        })
        .collect()
}

/// Derivable identities about `x && F` and `x || T` shapes: AUX0 and the six
/// equations AUX1..AUX6.
pub fn auxiliary_identities() -> Vec<Equation> {
    vec![
        eq(
            "AUX0",
            "($x || $y) && ($z && F)",
            "(!$x || ($z && F)) && ($y && ($z && F))",
        ),
        eq(
            "AUX1",
            "($x || ($y && F)) && ($z && F)",
            "(!$x || ($z && F)) && ($y && F)",
        ),
        eq(
            "AUX2",
            "($x && ($y || T)) || ($z && F)",
            "($x || ($z && F)) && ($y || T)",
        ),
        eq("AUX3", "($x || T) && !$y", "!(($x || T) && $y)"),
        eq(
            "AUX4",
            "($x && ($y && ($z || T))) || ($w && ($z || T))",
            "(($x && $y) || $w) && ($z || T)",
        ),
        eq(
            "AUX5",
            "($x || (($y || T) && ($z && F))) && (($w || T) && ($z && F))",
            "(($x && ($w || T)) || ($y || T)) && ($z && F)",
        ),
        eq(
            "AUX6",
            "($x || (($y || T) && ($z && F))) && ($w && F)",
            "((!$x && ($y || T)) || ($w && F)) && ($z && F)",
        ),
    ]
}

/// `x &.& F = F &.& x`, the identity that separates full from
/// short-circuit conjunction.
pub fn full_identity() -> Equation {
    eq("FULL", "$x &.& F", "F &.& $x")
}
