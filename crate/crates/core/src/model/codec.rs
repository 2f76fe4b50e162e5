//! Text codecs.
//!
//! Gauss codes are whitespace-separated tokens `(O|U)<digits>(+|-)`; the empty string is the
//! trivial diagram. Welded Gauss diagrams are JSON objects
//! `{"order": [labels...], "map": {"label": [head, "+"|"-"]}}`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::Deserialize;
use thiserror::Error;

use super::code::{CrossingId, GaussCode, Passage, Role, Sign, Violation};
use super::wgd::{WeldedGaussDiagram, WgdViolation};

#[derive(Debug, Error)]
pub enum DecodeError {
    #[error("syntax error at byte {offset}: unexpected token {token:?}")]
    Syntax { offset: usize, token: String },
    #[error("invalid Gauss code: {0}")]
    Code(#[from] Violation),
    #[error("malformed welded Gauss diagram at line {line}, column {column}: {message}")]
    Structure { line: usize, column: usize, message: String },
    #[error("invalid welded Gauss diagram: {0}")]
    Wgd(#[from] WgdViolation),
}

fn parse_token(token: &str) -> Option<Passage> {
    if token.len() < 3 {
        return None;
    }
    let mut chars = token.chars();
    let role = match chars.next()? {
        'O' => Role::Over,
        'U' => Role::Under,
        _ => return None,
    };
    let sign = match token.chars().last()? {
        '+' => Sign::Plus,
        '-' => Sign::Minus,
        _ => return None,
    };
    let digits = &token[1..token.len() - 1];
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    let label = digits.parse().ok()?;
    Some(Passage { crossing: CrossingId(label), role, sign })
}

/// Tokenizes a Gauss code without checking the pairing invariants.
pub fn parse_passages(text: &str) -> Result<Vec<Passage>, DecodeError> {
    let mut out = Vec::new();
    let mut rest = text;
    let mut offset = 0;
    loop {
        let trimmed = rest.trim_start();
        offset += rest.len() - trimmed.len();
        if trimmed.is_empty() {
            return Ok(out);
        }
        let end = trimmed.find(char::is_whitespace).unwrap_or(trimmed.len());
        let token = &trimmed[..end];
        match parse_token(token) {
            Some(p) => out.push(p),
            None => return Err(DecodeError::Syntax { offset, token: token.to_string() }),
        }
        offset += end;
        rest = &trimmed[end..];
    }
}

pub fn decode_code(text: &str) -> Result<GaussCode, DecodeError> {
    Ok(GaussCode::new(parse_passages(text)?)?)
}

pub fn encode_code(code: &GaussCode) -> String {
    code.to_string()
}

impl fmt::Display for GaussCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.passages().iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl FromStr for GaussCode {
    type Err = DecodeError;

    fn from_str(s: &str) -> Result<Self, DecodeError> {
        decode_code(s)
    }
}

/// Codes serialize as their text form.
impl serde::Serialize for GaussCode {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for GaussCode {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        decode_code(&text).map_err(serde::de::Error::custom)
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawWgd {
    order: Vec<CrossingId>,
    map: BTreeMap<CrossingId, (CrossingId, Sign)>,
}

pub fn decode_wgd(text: &str) -> Result<WeldedGaussDiagram, DecodeError> {
    let raw: RawWgd = serde_json::from_str(text).map_err(|e| DecodeError::Structure {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    Ok(WeldedGaussDiagram::new(raw.order, raw.map)?)
}

/// Compact single-line JSON; deterministic because the map is ordered by label.
pub fn encode_wgd(w: &WeldedGaussDiagram) -> String {
    serde_json::to_string(w).expect("welded Gauss diagrams always serialize")
}

impl fmt::Display for WeldedGaussDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&encode_wgd(self))
    }
}

impl FromStr for WeldedGaussDiagram {
    type Err = DecodeError;

    fn from_str(s: &str) -> Result<Self, DecodeError> {
        decode_wgd(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use Sign::*;

    #[test]
    fn empty_code_round_trips() {
        assert_eq!(encode_code(&GaussCode::empty()), "");
        assert_eq!(decode_code("").unwrap(), GaussCode::empty());
        assert_eq!(decode_code("  \n ").unwrap(), GaussCode::empty());
    }

    #[test]
    fn trefoil_round_trips() {
        let text = "O1+ U2+ O3+ U1+ O2+ U3+";
        assert_eq!(encode_code(&decode_code(text).unwrap()), text);
    }

    #[test]
    fn syntax_error_reports_offset_and_token() {
        match decode_code("O1+ X2+ U1+") {
            Err(DecodeError::Syntax { offset, token }) => {
                assert_eq!(offset, 4);
                assert_eq!(token, "X2+");
            }
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(decode_code("O+"), Err(DecodeError::Syntax { offset: 0, .. })));
        assert!(matches!(decode_code("O1"), Err(DecodeError::Syntax { .. })));
        assert!(matches!(decode_code("O1+U1+"), Err(DecodeError::Syntax { .. })));
    }

    #[test]
    fn semantic_errors_are_distinct() {
        assert!(matches!(decode_code("O1+ O1+"), Err(DecodeError::Code(Violation::DuplicatePassage { .. }))));
        assert!(matches!(decode_code("O1+"), Err(DecodeError::Code(Violation::MissingPassage { .. }))));
    }

    #[test]
    fn figure_diagram_round_trips() {
        // a..f as 1..6: a->(c,+) b->(c,+) c->(b,-) d->(e,-) e->(b,-) f->(b,+)
        let w = WeldedGaussDiagram::from_entries(&[
            (1, 3, Plus),
            (2, 3, Plus),
            (3, 2, Minus),
            (4, 5, Minus),
            (5, 2, Minus),
            (6, 2, Plus),
        ])
        .unwrap();
        let text = encode_wgd(&w);
        assert_eq!(
            text,
            r#"{"order":[1,2,3,4,5,6],"map":{"1":[3,"+"],"2":[3,"+"],"3":[2,"-"],"4":[5,"-"],"5":[2,"-"],"6":[2,"+"]}}"#
        );
        assert_eq!(decode_wgd(&text).unwrap(), w);
    }

    #[test]
    fn code_serializes_as_text() {
        let code = decode_code("O1+ U1+").unwrap();
        assert_eq!(serde_json::to_string(&code).unwrap(), "\"O1+ U1+\"");
        assert_eq!(serde_json::from_str::<GaussCode>("\"O1+ U1+\"").unwrap(), code);
        assert!(serde_json::from_str::<GaussCode>("\"O1+\"").is_err());
    }

    #[test]
    fn wgd_errors() {
        assert!(matches!(decode_wgd("{\"order\":[1]"), Err(DecodeError::Structure { .. })));
        assert!(matches!(
            decode_wgd(r#"{"order":[1],"map":{"1":[2,"+"]}}"#),
            Err(DecodeError::Wgd(WgdViolation::UnknownHead { .. }))
        ));
        assert!(matches!(
            decode_wgd(r#"{"order":[1],"map":{"1":[1,"*"]}}"#),
            Err(DecodeError::Structure { .. })
        ));
    }
}
