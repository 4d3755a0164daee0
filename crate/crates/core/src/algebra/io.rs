//! JSON form of diagrams and algebra elements.
//!
//! ```json
//! {"r":1,"s":1,"terms":[{"diagram":[2,1],"coeff":"1/d"}]}
//! ```
//! Diagram images are 1-based; terms are listed in lexicographic order of
//! the images.

use serde::{Deserialize, Serialize};

use super::AlgebraElement;
use crate::arith::{parse_scalar, DeltaScalar};
use crate::diagram::{Shape, WalledDiagram};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub diagram: Vec<usize>,
    pub coeff: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElementJson {
    pub r: usize,
    pub s: usize,
    pub terms: Vec<TermJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagramJson {
    pub r: usize,
    pub s: usize,
    pub img: Vec<usize>,
}

impl From<&WalledDiagram> for DiagramJson {
    fn from(d: &WalledDiagram) -> Self {
        DiagramJson {
            r: d.shape().r,
            s: d.shape().s,
            img: d.img_one_based(),
        }
    }
}

impl TryFrom<&DiagramJson> for WalledDiagram {
    type Error = Error;
    fn try_from(j: &DiagramJson) -> Result<Self> {
        WalledDiagram::from_img_one_based(Shape::new(j.r, j.s), &j.img)
    }
}

impl AlgebraElement {
    pub fn to_json(&self) -> ElementJson {
        let shape = self.shape();
        ElementJson {
            r: shape.r,
            s: shape.s,
            terms: self
                .terms()
                .into_iter()
                .map(|(d, c)| TermJson {
                    diagram: d.img_one_based(),
                    coeff: c.to_string(),
                })
                .collect(),
        }
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string(&self.to_json()).expect("element serializes")
    }

    pub fn from_json(j: &ElementJson) -> Result<Self> {
        Self::from_json_with(j, |k, e| match e {
            Error::Parse { pos, msg } => Error::parse(pos, format!("term {k} coefficient: {msg}")),
            other => other,
        })
    }

    fn from_json_with(
        j: &ElementJson,
        on_coeff_err: impl Fn(usize, Error) -> Error,
    ) -> Result<Self> {
        let shape = Shape::new(j.r, j.s);
        shape.check_rankable()?;
        let mut parsed: Vec<(WalledDiagram, DeltaScalar)> = Vec::with_capacity(j.terms.len());
        for (k, t) in j.terms.iter().enumerate() {
            let d = WalledDiagram::from_img_one_based(shape, &t.diagram)?;
            let c = parse_scalar(&t.coeff).map_err(|e| on_coeff_err(k, e))?;
            parsed.push((d, c));
        }
        AlgebraElement::from_terms(shape, parsed.iter().map(|(d, c)| (d, c)))
    }

    /// Parses the JSON text form; parse errors carry byte offsets into `text`.
    pub fn from_json_str(text: &str) -> Result<Self> {
        let j: ElementJson = serde_json::from_str(text)
            .map_err(|e| Error::parse(byte_offset(text, e.line(), e.column()), e.to_string()))?;
        Self::from_json_with(&j, |k, e| match e {
            Error::Parse { pos, msg } => {
                let base = coeff_offset(text, k).unwrap_or(0);
                Error::parse(base + pos, format!("term {k} coefficient: {msg}"))
            }
            other => other,
        })
    }
}

fn byte_offset(text: &str, line: usize, column: usize) -> usize {
    if line == 0 {
        return 0;
    }
    let line_start: usize = text
        .split_inclusive('\n')
        .take(line - 1)
        .map(str::len)
        .sum();
    (line_start + column.saturating_sub(1)).min(text.len())
}

// start of the k-th coefficient string's contents, assuming compact keys
fn coeff_offset(text: &str, k: usize) -> Option<usize> {
    let (at, _) = text.match_indices("\"coeff\"").nth(k)?;
    let rest = &text[at + 7..];
    let colon = rest.find(':')?;
    let quote = rest[colon..].find('"')?;
    Some(at + 7 + colon + quote + 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::Generator;

    #[test]
    fn documented_forms() {
        let s11 = Shape::new(1, 1);
        assert_eq!(
            AlgebraElement::zero(s11).to_json_string(),
            r#"{"r":1,"s":1,"terms":[]}"#
        );
        let d = AlgebraElement::generator(s11, Generator::D).unwrap();
        let x = d.scale(&"1/d".parse().unwrap());
        let text = x.to_json_string();
        assert_eq!(
            text,
            r#"{"r":1,"s":1,"terms":[{"diagram":[2,1],"coeff":"1/d"}]}"#
        );
        assert_eq!(AlgebraElement::from_json_str(&text).unwrap(), x);
    }

    #[test]
    fn malformed_inputs() {
        let e = AlgebraElement::from_json_str(
            r#"{"r":1,"s":1,"terms":[{"diagram":[2,1],"coeff":"1/(d"}]}"#,
        )
        .unwrap_err();
        match e {
            Error::Parse { pos, .. } => assert_eq!(pos, 48 + 4),
            other => panic!("unexpected {other:?}"),
        }
        assert_eq!(
            AlgebraElement::from_json_str(
                r#"{"r":1,"s":1,"terms":[{"diagram":[1,1],"coeff":"1"}]}"#
            )
            .unwrap_err()
            .kind(),
            "IndexOutOfRange"
        );
        assert_eq!(
            AlgebraElement::from_json_str("{").unwrap_err().kind(),
            "ParseError"
        );
    }
}
