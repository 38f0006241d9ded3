//! Text forms of elements, index sets and coroot vectors.
//!
//! Elements: a whitespace-separated word `s0 s1 s2`, or `t[a,b,...]` optionally
//! followed by `*` and a word over `s1..sn`. The empty string, `e` and `id`
//! denote the identity.

use crate::coxeter::{AffineElement, CorootVector, CoxeterSystem};
use crate::error::{Error, Result};

const ELEMENT_GRAMMAR: &str =
    "expected a word like \"s0 s1 s2\" or \"t[a,b,...]*s1 s2\" (\"e\" for the identity)";

fn parse_error(what: &'static str, input: &str, reason: impl Into<String>) -> Error {
    Error::Parse {
        what,
        input: input.to_string(),
        reason: reason.into(),
    }
}

fn parse_word(sys: &CoxeterSystem, input: &str, text: &str, allow_zero: bool) -> Result<Vec<u8>> {
    let mut word = Vec::new();
    for tok in text.split_whitespace() {
        let idx = tok
            .strip_prefix('s')
            .and_then(|d| d.parse::<usize>().ok())
            .ok_or_else(|| {
                parse_error(
                    "element",
                    input,
                    format!("bad generator `{tok}`; {ELEMENT_GRAMMAR}"),
                )
            })?;
        if idx > sys.rank() || (idx == 0 && !allow_zero) {
            let range = if allow_zero { "s0..s" } else { "s1..s" };
            return Err(parse_error(
                "element",
                input,
                format!("generator `{tok}` outside {range}{}", sys.rank()),
            ));
        }
        word.push(idx as u8);
    }
    Ok(word)
}

/// Parse an element of the affine Weyl group.
pub fn parse_element(sys: &CoxeterSystem, input: &str) -> Result<AffineElement> {
    let text = input.trim();
    if text.is_empty() || text == "e" || text == "id" {
        return Ok(sys.identity());
    }
    if let Some(rest) = text.strip_prefix("t[") {
        let close = rest.find(']').ok_or_else(|| {
            parse_error("element", input, format!("missing `]`; {ELEMENT_GRAMMAR}"))
        })?;
        let lambda = parse_coroot_body(sys, input, &rest[..close])?;
        let tail = rest[close + 1..].trim_start();
        let tail = tail.strip_prefix('*').unwrap_or(tail);
        let word = parse_word(sys, input, tail, false)?;
        let w = sys.from_word(&word)?;
        return Ok(sys.mul(&sys.translation(lambda), &w));
    }
    let word = parse_word(sys, input, text, true)?;
    sys.from_word(&word)
}

fn parse_coroot_body(sys: &CoxeterSystem, input: &str, body: &str) -> Result<CorootVector> {
    let parts: Vec<&str> = body.split(',').map(str::trim).collect();
    if parts.len() != sys.rank() {
        return Err(parse_error(
            "coroot vector",
            input,
            format!("expected {} integers, found {}", sys.rank(), parts.len()),
        ));
    }
    parts
        .iter()
        .map(|p| {
            p.parse::<i64>()
                .map_err(|e| parse_error("coroot vector", input, format!("`{p}`: {e}")))
        })
        .collect::<Result<Vec<_>>>()
        .map(CorootVector)
}

/// `[a,b,...]` or `a,b,...` in the simple-coroot basis.
pub fn parse_coroot(sys: &CoxeterSystem, input: &str) -> Result<CorootVector> {
    let text = input.trim();
    let body = text
        .strip_prefix('[')
        .and_then(|t| t.strip_suffix(']'))
        .unwrap_or(text);
    parse_coroot_body(sys, input, body)
}

/// Comma-separated subset of `1..=n`; empty for `∅`, `all` for `[n]`.
pub fn parse_index_set(sys: &CoxeterSystem, input: &str) -> Result<Vec<usize>> {
    let text = input.trim();
    if text.eq_ignore_ascii_case("all") {
        return Ok((1..=sys.rank()).collect());
    }
    let mut out = Vec::new();
    for tok in text.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        let i: usize = tok.parse().map_err(|_| {
            parse_error(
                "index set",
                input,
                "expected comma-separated indices, \"\" or \"all\"",
            )
        })?;
        if i == 0 || i > sys.rank() {
            return Err(parse_error(
                "index set",
                input,
                format!("index {i} outside 1..={}", sys.rank()),
            ));
        }
        out.push(i);
    }
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

/// Comma-separated `q_0,…,q_n`, each at least 2.
pub fn parse_q_values(sys: &CoxeterSystem, input: &str) -> Result<Vec<i64>> {
    let vals: Vec<i64> = input
        .split(',')
        .map(|t| t.trim().parse::<i64>())
        .collect::<std::result::Result<_, _>>()
        .map_err(|e| parse_error("q values", input, e.to_string()))?;
    if vals.len() != sys.rank() + 1 {
        return Err(parse_error(
            "q values",
            input,
            format!("expected {} values q0..q{}", sys.rank() + 1, sys.rank()),
        ));
    }
    if let Some(v) = vals.iter().find(|&&v| v < 2) {
        return Err(parse_error("q values", input, format!("{v} < 2")));
    }
    Ok(vals)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a2() -> CoxeterSystem {
        CoxeterSystem::from_label("A2").unwrap()
    }

    #[test]
    fn words_and_identity() {
        let s = a2();
        for id in ["", "  ", "e", "id"] {
            assert_eq!(parse_element(&s, id).unwrap(), s.identity());
        }
        assert_eq!(
            parse_element(&s, "s0 s1 s2").unwrap(),
            s.from_word(&[0, 1, 2]).unwrap()
        );
    }

    #[test]
    fn translations() {
        let s = a2();
        let t = parse_element(&s, "t[1,-2]").unwrap();
        assert_eq!(t, s.translation(CorootVector(vec![1, -2])));
        let tw = parse_element(&s, "t[1,1]*s1 s2").unwrap();
        assert_eq!(tw.translation, CorootVector(vec![1, 1]));
        assert_eq!(tw.linear, s.from_word(&[1, 2]).unwrap().linear);
    }

    #[test]
    fn errors_name_the_grammar() {
        let s = a2();
        for bad in ["s3", "x1", "t[1]", "t[1,2", "t[1,2]*s0"] {
            let err = parse_element(&s, bad).unwrap_err();
            assert!(matches!(err, Error::Parse { .. }), "{bad}");
        }
        assert!(parse_element(&s, "s9")
            .unwrap_err()
            .to_string()
            .contains("s0..s2"));
    }

    #[test]
    fn printed_elements_reparse() {
        let s = a2();
        for x in s.ball(4) {
            assert_eq!(parse_element(&s, &s.format_element(&x)).unwrap(), x);
        }
    }

    #[test]
    fn index_sets() {
        let s = a2();
        assert_eq!(parse_index_set(&s, "").unwrap(), Vec::<usize>::new());
        assert_eq!(parse_index_set(&s, "all").unwrap(), vec![1, 2]);
        assert_eq!(parse_index_set(&s, "2, 1").unwrap(), vec![1, 2]);
        assert!(parse_index_set(&s, "0").is_err());
        assert!(parse_index_set(&s, "a").is_err());
    }

    #[test]
    fn coroots_and_q_values() {
        let s = a2();
        assert_eq!(
            parse_coroot(&s, "[2,-1]").unwrap(),
            CorootVector(vec![2, -1])
        );
        assert_eq!(parse_coroot(&s, "2,-1").unwrap(), CorootVector(vec![2, -1]));
        assert!(parse_coroot(&s, "[2]").is_err());
        assert_eq!(parse_q_values(&s, "2,3,4").unwrap(), vec![2, 3, 4]);
        assert!(parse_q_values(&s, "2,1,4").is_err());
        assert!(parse_q_values(&s, "2,3").is_err());
    }
}
