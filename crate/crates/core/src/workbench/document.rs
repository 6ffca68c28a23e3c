use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poset::Poset;

/// On-disk poset: `{"elements": [...], "relations": [[a, b], ...]}`, each
/// relation meaning `a ≺ b`. Unknown fields are rejected.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PosetDocument {
    pub elements: Vec<String>,
    pub relations: Vec<(String, String)>,
}

impl PosetDocument {
    /// The cover relations of `poset`, in element order.
    pub fn from_poset(poset: &Poset) -> Self {
        PosetDocument {
            elements: poset.elements().iter().map(|e| e.to_string()).collect(),
            relations: poset
                .covers_labeled()
                .into_iter()
                .map(|(a, b)| (a.to_string(), b.to_string()))
                .collect(),
        }
    }

    /// Builds the poset, attaching the document location of the first
    /// offending entry to any construction error.
    pub fn to_poset(&self) -> Result<Poset> {
        let rel = self.relations.iter().map(|(a, b)| (a.as_str(), b.as_str()));
        Poset::build(self.elements.iter().cloned(), rel).map_err(|err| {
            let location = self.locate(&err);
            Error::InDocument {
                location,
                source: Box::new(err),
            }
        })
    }

    fn locate(&self, err: &Error) -> String {
        match err {
            Error::EmptyLabel => self
                .elements
                .iter()
                .position(|e| e.is_empty())
                .map(|i| format!("elements[{i}]")),
            Error::DuplicateElement(id) => self
                .elements
                .iter()
                .enumerate()
                .filter(|(_, e)| *e == id)
                .nth(1)
                .map(|(i, _)| format!("elements[{i}]")),
            Error::UnknownElement(id) => {
                self.relations.iter().enumerate().find_map(|(i, (a, b))| {
                    if !self.elements.contains(a) && a == id {
                        Some(format!("relations[{i}][0]"))
                    } else if !self.elements.contains(b) && b == id {
                        Some(format!("relations[{i}][1]"))
                    } else {
                        None
                    }
                })
            }
            Error::ReflexivePair(id) => self
                .relations
                .iter()
                .position(|(a, b)| a == id && b == id)
                .map(|i| format!("relations[{i}]")),
            _ => None,
        }
        .unwrap_or_else(|| "relations".to_string())
    }
}

pub fn parse_poset(text: &str) -> Result<Poset> {
    let doc: PosetDocument = serde_json::from_str(text).map_err(|e| Error::Schema {
        location: format!("line {} column {}", e.line(), e.column()),
        message: e.to_string(),
    })?;
    doc.to_poset()
}

/// Pretty-printed document with a trailing newline.
pub fn write_poset(poset: &Poset) -> String {
    let mut text = serde_json::to_string_pretty(&PosetDocument::from_poset(poset))
        .expect("document serializes");
    text.push('\n');
    text
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_a_chain() {
        let p = parse_poset(r#"{"elements":["a","b"],"relations":[["a","b"]]}"#).unwrap();
        assert!(p.less("a", "b").unwrap());
    }

    #[test]
    fn construction_errors_carry_locations() {
        let err = parse_poset(r#"{"elements":["a","a"],"relations":[]}"#).unwrap_err();
        assert_eq!(err.root(), &Error::DuplicateElement("a".into()));
        assert!(matches!(err, Error::InDocument { ref location, .. } if location == "elements[1]"));

        let err = parse_poset(r#"{"elements":["a","b"],"relations":[["a","c"]]}"#).unwrap_err();
        assert_eq!(err.root(), &Error::UnknownElement("c".into()));
        assert!(
            matches!(err, Error::InDocument { ref location, .. } if location == "relations[0][1]")
        );

        let err =
            parse_poset(r#"{"elements":["a","b"],"relations":[["a","b"],["b","a"]]}"#).unwrap_err();
        assert!(matches!(err.root(), Error::CycleDetected(w) if w.len() == 3));
    }

    #[test]
    fn schema_errors() {
        for text in [
            r#"{"elements":["a"]}"#,
            r#"{"elements":["a"],"relations":[],"extra":1}"#,
            r#"{"elements":["a"],"relations":[["a"]]}"#,
            r#"{"elements":[1],"relations":[]}"#,
            "not json",
        ] {
            assert!(
                matches!(parse_poset(text), Err(Error::Schema { .. })),
                "{text}"
            );
        }
    }

    #[test]
    fn writes_covers_only() {
        let p = Poset::build(["a", "b", "c"], [("a", "b"), ("b", "c"), ("a", "c")]).unwrap();
        let doc = PosetDocument::from_poset(&p);
        assert_eq!(doc.relations.len(), 2);
        assert_eq!(parse_poset(&write_poset(&p)).unwrap(), p);
    }
}
