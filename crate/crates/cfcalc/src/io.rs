//! Canonical JSON documents for complexes, functions, stratifications and
//! simplicial maps. Documents are canonicalized on construction (sorted
//! keys, sorted arrays, zero values omitted) so that equal objects are
//! byte-identical, and emission is newline-terminated UTF-8.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::cf::ConstructibleFunction;
use crate::complex::{same_ambient, Complex, SimplicialComplex, Stratification, Stratum};
use crate::error::{Error, Result};
use crate::maps::SimplicialMap;

/// Serializes any value as canonical JSON: object keys sorted (serde_json
/// maps are ordered), one trailing newline.
pub fn canonical_json<T: Serialize>(value: &T) -> Result<String> {
    let v = serde_json::to_value(value).map_err(|e| Error::ValidationError {
        reason: format!("serialization failed: {e}"),
    })?;
    Ok(format!("{v}\n"))
}

fn parse_json<'a, T: Deserialize<'a>>(text: &'a str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::ParseError {
        reason: e.to_string(),
    })
}

fn sorted_simplex(mut verts: Vec<String>) -> Vec<String> {
    verts.sort();
    verts
}

fn sorted_simplices(mut simplices: Vec<Vec<String>>) -> Vec<Vec<String>> {
    for s in &mut simplices {
        s.sort();
    }
    simplices.sort();
    simplices
}

/// `{"vertices": [...], "maximal_simplices": [[...]...]}`; parsing accepts
/// non-face-closed simplex lists (the closure is implied) and vertices not
/// covered by any listed simplex become isolated points.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexDocument {
    pub vertices: Vec<String>,
    pub maximal_simplices: Vec<Vec<String>>,
}

impl ComplexDocument {
    pub fn parse(text: &str) -> Result<Self> {
        parse_json::<ComplexDocument>(text).map(Self::canonicalize)
    }

    fn canonicalize(mut self) -> Self {
        self.vertices.sort();
        self.vertices.dedup();
        self.maximal_simplices = sorted_simplices(self.maximal_simplices);
        self
    }

    pub fn from_complex(k: &Complex) -> Self {
        let maximal = k
            .maximal_ids()
            .into_iter()
            .map(|id| {
                k.simplex_vertices(id)
                    .into_iter()
                    .map(str::to_string)
                    .collect()
            })
            .collect();
        ComplexDocument {
            vertices: k.vertices().to_vec(),
            maximal_simplices: sorted_simplices(maximal),
        }
        .canonicalize()
    }

    pub fn to_complex(&self) -> Result<Complex> {
        let mut lists = self.maximal_simplices.clone();
        for v in &self.vertices {
            lists.push(vec![v.clone()]);
        }
        let k = SimplicialComplex::build(&lists)?;
        Ok(k)
    }
}

/// A complex given inline or as a path to a complex document.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ComplexRef {
    Path(String),
    Inline(ComplexDocument),
}

impl ComplexRef {
    /// Loads the referenced complex; relative paths resolve against `base`.
    pub fn resolve(&self, base: &Path) -> Result<Complex> {
        match self {
            ComplexRef::Inline(doc) => doc.to_complex(),
            ComplexRef::Path(p) => {
                let full = base.join(p);
                let text = std::fs::read_to_string(&full).map_err(|e| Error::ParseError {
                    reason: format!("cannot read {}: {e}", full.display()),
                })?;
                ComplexDocument::parse(&text)?.to_complex()
            }
        }
    }
}

/// `{"complex": path-or-inline, "values": [[simplex, integer]...]}` with
/// zero values omitted.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FunctionDocument {
    pub complex: ComplexRef,
    pub values: Vec<(Vec<String>, i64)>,
}

impl FunctionDocument {
    pub fn parse(text: &str) -> Result<Self> {
        parse_json::<FunctionDocument>(text).map(Self::canonicalize)
    }

    fn canonicalize(mut self) -> Self {
        if let ComplexRef::Inline(doc) = self.complex {
            self.complex = ComplexRef::Inline(doc.canonicalize());
        }
        self.values = self
            .values
            .into_iter()
            .filter(|(_, v)| *v != 0)
            .map(|(s, v)| (sorted_simplex(s), v))
            .collect();
        self.values.sort();
        self
    }

    pub fn from_function(f: &ConstructibleFunction) -> Self {
        let k = f.ambient();
        let values = k
            .ids()
            .filter(|id| f.get(*id) != 0)
            .map(|id| {
                (
                    k.simplex_vertices(id)
                        .into_iter()
                        .map(str::to_string)
                        .collect(),
                    f.get(id),
                )
            })
            .collect();
        FunctionDocument {
            complex: ComplexRef::Inline(ComplexDocument::from_complex(k)),
            values,
        }
        .canonicalize()
    }

    /// Builds the function on the given ambient complex; every listed
    /// simplex must exist there.
    pub fn to_function(&self, ambient: &Complex) -> Result<ConstructibleFunction> {
        let mut values = vec![0i64; ambient.len()];
        for (verts, v) in &self.values {
            let id = ambient.find(verts).ok_or_else(|| Error::ValidationError {
                reason: format!(
                    "function value on {{{}}} which is not a simplex of the complex",
                    verts.join(",")
                ),
            })?;
            values[id] = values[id]
                .checked_add(*v)
                .ok_or(Error::IntegerOverflow { context: "reading function values" })?;
        }
        Ok(ConstructibleFunction::from_values(ambient, values))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StratumDocument {
    pub label: String,
    pub dimension: usize,
    pub simplices: Vec<Vec<String>>,
}

/// `{"complex": ..., "strata": [{"label", "dimension", "simplices"}...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StratificationDocument {
    pub complex: ComplexRef,
    pub strata: Vec<StratumDocument>,
}

impl StratificationDocument {
    pub fn parse(text: &str) -> Result<Self> {
        parse_json::<StratificationDocument>(text).map(Self::canonicalize)
    }

    fn canonicalize(mut self) -> Self {
        if let ComplexRef::Inline(doc) = self.complex {
            self.complex = ComplexRef::Inline(doc.canonicalize());
        }
        for s in &mut self.strata {
            s.simplices = sorted_simplices(std::mem::take(&mut s.simplices));
        }
        self.strata
            .sort_by(|a, b| a.dimension.cmp(&b.dimension).then_with(|| a.label.cmp(&b.label)));
        self
    }

    pub fn from_stratification(s: &Stratification) -> Self {
        let k = s.ambient();
        let strata = s
            .strata()
            .iter()
            .map(|st| StratumDocument {
                label: st.label.clone(),
                dimension: st.dim,
                simplices: sorted_simplices(
                    st.members
                        .iter()
                        .map(|id| {
                            k.simplex_vertices(*id)
                                .into_iter()
                                .map(str::to_string)
                                .collect()
                        })
                        .collect(),
                ),
            })
            .collect();
        StratificationDocument {
            complex: ComplexRef::Inline(ComplexDocument::from_complex(k)),
            strata,
        }
        .canonicalize()
    }

    pub fn to_stratification(&self, ambient: &Complex) -> Result<Stratification> {
        let strata = self
            .strata
            .iter()
            .map(|s| {
                let members = s
                    .simplices
                    .iter()
                    .map(|verts| {
                        ambient.find(verts).ok_or_else(|| Error::ValidationError {
                            reason: format!(
                                "stratum `{}` lists {{{}}} which is not a simplex of the complex",
                                s.label,
                                verts.join(",")
                            ),
                        })
                    })
                    .collect::<Result<Vec<usize>>>()?;
                Ok(Stratum {
                    label: s.label.clone(),
                    dim: s.dimension,
                    members,
                })
            })
            .collect::<Result<Vec<Stratum>>>()?;
        Stratification::new(ambient, strata)
    }
}

/// `{"domain": ..., "codomain": ..., "vertex_map": [[from, to]...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MapDocument {
    pub domain: ComplexRef,
    pub codomain: ComplexRef,
    pub vertex_map: Vec<(String, String)>,
}

impl MapDocument {
    pub fn parse(text: &str) -> Result<Self> {
        parse_json::<MapDocument>(text).map(|mut doc| {
            if let ComplexRef::Inline(d) = doc.domain {
                doc.domain = ComplexRef::Inline(d.canonicalize());
            }
            if let ComplexRef::Inline(d) = doc.codomain {
                doc.codomain = ComplexRef::Inline(d.canonicalize());
            }
            doc.vertex_map.sort();
            doc
        })
    }

    pub fn from_map(map: &SimplicialMap) -> Self {
        let domain = map.domain();
        let mut vertex_map: Vec<(String, String)> = domain
            .vertices()
            .iter()
            .enumerate()
            .map(|(i, v)| {
                let image = map.image_simplex(
                    domain
                        .find(&[v.as_str()])
                        .expect("vertex simplex exists"),
                );
                let _ = i;
                (
                    v.clone(),
                    map.codomain().simplex_vertices(image)[0].to_string(),
                )
            })
            .collect();
        vertex_map.sort();
        MapDocument {
            domain: ComplexRef::Inline(ComplexDocument::from_complex(domain)),
            codomain: ComplexRef::Inline(ComplexDocument::from_complex(map.codomain())),
            vertex_map,
        }
    }

    pub fn to_map(&self, base: &Path) -> Result<SimplicialMap> {
        let domain = self.domain.resolve(base)?;
        let codomain = self.codomain.resolve(base)?;
        SimplicialMap::new(&domain, &codomain, &self.vertex_map)
    }
}

/// Checks that a document-supplied complex agrees with one given separately.
pub fn require_same_complex(a: &Complex, b: &Complex) -> Result<()> {
    if same_ambient(a, b) {
        Ok(())
    } else {
        Err(Error::ValidationError {
            reason: "the function/stratification document and --complex disagree".to_string(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::fixture;
    use crate::ops;

    #[test]
    fn complex_document_round_trip() {
        let k = fixture("sphere2").unwrap().complex;
        let doc = ComplexDocument::from_complex(&k);
        let text = canonical_json(&doc).unwrap();
        assert!(text.ends_with('\n'));
        let parsed = ComplexDocument::parse(&text).unwrap();
        assert_eq!(parsed, doc);
        assert_eq!(canonical_json(&parsed).unwrap(), text);
        assert!(same_ambient(&parsed.to_complex().unwrap(), &k));
    }

    #[test]
    fn non_closed_input_is_closed_up() {
        let doc = ComplexDocument::parse(
            r#"{"vertices": ["z"], "maximal_simplices": [["b","a"]]}"#,
        )
        .unwrap();
        let k = doc.to_complex().unwrap();
        assert_eq!(k.len(), 4); // a, b, ab, z
        assert!(k.find(&["z"]).is_some());
    }

    #[test]
    fn function_document_round_trip_and_validation() {
        let k = fixture("circle").unwrap().complex;
        let f = ops::link_op(&ops::ones(&k)).unwrap();
        let doc = FunctionDocument::from_function(&f);
        let text = canonical_json(&doc).unwrap();
        let parsed = FunctionDocument::parse(&text).unwrap();
        assert_eq!(parsed, doc);
        let back = parsed.to_function(&k).unwrap();
        assert_eq!(back, f);

        // zero values are dropped by canonicalization
        let with_zero = FunctionDocument::parse(
            r#"{"complex": "c.json", "values": [[["a"], 0], [["b"], 2]]}"#,
        )
        .unwrap();
        assert_eq!(with_zero.values.len(), 1);

        // unknown simplices are rejected
        let bad = FunctionDocument::parse(
            r#"{"complex": "c.json", "values": [[["nope"], 1]]}"#,
        )
        .unwrap();
        assert!(matches!(
            bad.to_function(&k),
            Err(Error::ValidationError { .. })
        ));
    }

    #[test]
    fn oversized_integers_fail_to_parse() {
        let res = FunctionDocument::parse(
            r#"{"complex": "c.json", "values": [[["a"], 100000000000000000000]]}"#,
        );
        assert!(matches!(res, Err(Error::ParseError { .. })));
    }

    #[test]
    fn stratification_document_round_trip() {
        let k = fixture("sphere2").unwrap().complex;
        let s = crate::complex::Stratification::by_dimension(&k);
        let doc = StratificationDocument::from_stratification(&s);
        let text = canonical_json(&doc).unwrap();
        let parsed = StratificationDocument::parse(&text).unwrap();
        assert_eq!(parsed, doc);
        let back = parsed.to_stratification(&k).unwrap();
        assert_eq!(back.strata().len(), 3);
    }

    #[test]
    fn map_document_round_trip() {
        let map = fixture("fold-map").unwrap().map.unwrap();
        let doc = MapDocument::from_map(&map);
        let text = canonical_json(&doc).unwrap();
        let parsed = MapDocument::parse(&text).unwrap();
        assert_eq!(parsed, doc);
        let back = parsed.to_map(Path::new(".")).unwrap();
        let pushed = back.pushforward(&ops::ones(back.domain())).unwrap();
        assert_eq!(pushed.integral().unwrap(), 1);
    }
}
