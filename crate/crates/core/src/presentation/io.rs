//! JSON input and output for presentations.

use serde::{Deserialize, Serialize};

use super::{AlgebraPresentation, Arrow, Path, Quiver, Relation};
use crate::error::{Error, Result};
use crate::linalg::FieldSpec;

#[derive(Serialize, Deserialize)]
struct RawPresentation {
    field: FieldSpec,
    quiver: RawQuiver,
    #[serde(default)]
    relations: Vec<Vec<RawTerm>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    max_path_length: Option<usize>,
}

#[derive(Serialize, Deserialize)]
struct RawQuiver {
    vertices: Vec<String>,
    arrows: Vec<RawArrow>,
}

#[derive(Serialize, Deserialize)]
struct RawArrow {
    name: String,
    from: VertexRef,
    to: VertexRef,
}

/// Vertices may be referenced by index or by label.
#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum VertexRef {
    Index(usize),
    Label(String),
}

#[derive(Serialize, Deserialize)]
struct RawTerm {
    coef: Coefficient,
    path: Vec<String>,
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum Coefficient {
    Text(String),
    Integer(i64),
}

impl AlgebraPresentation {
    /// Parses the JSON input format, reporting every problem found.
    pub fn from_json(text: &str) -> Result<Self> {
        let raw: RawPresentation =
            serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        raw.field.validate()?;
        let mut diag = Vec::new();
        let resolve = |r: &VertexRef, diag: &mut Vec<String>, what: &str| -> usize {
            match r {
                VertexRef::Index(i) => *i,
                VertexRef::Label(l) => match raw.quiver.vertices.iter().position(|v| v == l) {
                    Some(i) => i,
                    None => {
                        diag.push(format!("{what}: unknown vertex `{l}`"));
                        usize::MAX
                    }
                },
            }
        };
        let arrows: Vec<Arrow> = raw
            .quiver
            .arrows
            .iter()
            .enumerate()
            .map(|(i, a)| Arrow {
                name: a.name.clone(),
                source: resolve(&a.from, &mut diag, &format!("arrow {i} `{}`", a.name)),
                target: resolve(&a.to, &mut diag, &format!("arrow {i} `{}`", a.name)),
            })
            .collect();
        let quiver = Quiver::new(raw.quiver.vertices.clone(), arrows);
        diag.extend(quiver.diagnostics());
        if !diag.is_empty() {
            return Err(Error::InvalidPresentation(diag));
        }
        let field = raw.field;
        let mut relations = Vec::new();
        for (ri, terms) in raw.relations.iter().enumerate() {
            let mut out = Vec::new();
            for (ti, t) in terms.iter().enumerate() {
                let coef = match &t.coef {
                    Coefficient::Text(s) => field.parse_scalar(s),
                    Coefficient::Integer(i) => Ok(field.from_i64(*i)),
                };
                let coef = match coef {
                    Ok(c) => c,
                    Err(e) => {
                        diag.push(format!("relation {ri}, term {ti}: {e}"));
                        continue;
                    }
                };
                if t.path.len() < 2 {
                    diag.push(format!(
                        "relation {ri}, term {ti}: path {:?} has length {}; non-admissible relation (every term needs length >= 2)",
                        t.path,
                        t.path.len()
                    ));
                    continue;
                }
                let names: Vec<&str> = t.path.iter().map(String::as_str).collect();
                match Path::from_names(&quiver, &names) {
                    Ok(p) => out.push((coef, p)),
                    Err(e) => diag.push(format!("relation {ri}, term {ti}: {e}")),
                }
            }
            relations.push(Relation::new(out));
        }
        if !diag.is_empty() {
            return Err(Error::InvalidPresentation(diag));
        }
        let p = AlgebraPresentation::new(field, quiver, relations)?;
        Ok(match raw.max_path_length {
            Some(b) => p.with_max_path_length(b),
            None => p,
        })
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        let q = self.quiver();
        let raw = RawPresentation {
            field: self.field(),
            quiver: RawQuiver {
                vertices: q.vertices().to_vec(),
                arrows: q
                    .arrows()
                    .iter()
                    .map(|a| RawArrow {
                        name: a.name.clone(),
                        from: VertexRef::Index(a.source),
                        to: VertexRef::Index(a.target),
                    })
                    .collect(),
            },
            relations: self
                .relations()
                .iter()
                .map(|r| {
                    r.terms()
                        .iter()
                        .map(|(c, p)| RawTerm {
                            coef: Coefficient::Text(c.to_string()),
                            path: p.names(q),
                        })
                        .collect()
                })
                .collect(),
            max_path_length: None,
        };
        serde_json::to_value(raw).expect("presentation serializes")
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_json_value()).expect("presentation serializes")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_and_labels() {
        let text = r#"{
            "field": {"type": "prime", "p": 5},
            "quiver": {"vertices": ["x"], "arrows": [{"name": "l", "from": "x", "to": 0}]},
            "relations": [[{"coef": "1/2", "path": ["l", "l"]}]]
        }"#;
        let p = AlgebraPresentation::from_json(text).unwrap();
        assert_eq!(p.relations()[0].terms()[0].0.to_string(), "3");
        let again = AlgebraPresentation::from_json(&p.to_json()).unwrap();
        assert_eq!(again, p);
    }

    #[test]
    fn bad_input_is_diagnosed() {
        let text = r#"{
            "field": {"type": "rational"},
            "quiver": {"vertices": ["1", "2"], "arrows": [{"name": "a", "from": 0, "to": 9}]},
            "relations": []
        }"#;
        let e = AlgebraPresentation::from_json(text).unwrap_err();
        assert!(e.to_string().contains("out of range"));
        let text = r#"{
            "field": {"type": "rational"},
            "quiver": {"vertices": ["1", "2"], "arrows": [{"name": "a", "from": 0, "to": 1}]},
            "relations": [[{"coef": "1", "path": ["a"]}]]
        }"#;
        let e = AlgebraPresentation::from_json(text).unwrap_err();
        assert!(e.to_string().contains("non-admissible"));
        assert!(AlgebraPresentation::from_json("{").is_err());
    }
}
