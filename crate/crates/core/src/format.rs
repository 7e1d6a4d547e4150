//! Instance documents: named sets, cones, points, functionals and fixtures
//! in JSON, with every rational written as a `"p/q"` string.
//!
//! ```json
//! {
//!   "sets": {
//!     "square": {"kind": "hrep", "dim": 2,
//!                "ineqs": [{"normal": ["-1", "0"], "rhs": "0"}, ...],
//!                "eqs": []},
//!     "tri": {"kind": "vrep", "dim": 2,
//!             "vertices": [["0", "0"], ["1", "0"], ["0", "1"]], "rays": []}
//!   },
//!   "cones": {"n": {"kind": "cone", "dim": 2, "generators": [["-1", "0"]], "lineality": []}},
//!   "points": {"origin": ["0", "0"]},
//!   "functionals": {"up": ["0", "1"]},
//!   "fixtures": {"pair": {"set1": "square", "set2": "tri", "point": "origin"}}
//! }
//! ```
//!
//! Maps are ordered by name, so serializing a parsed document is canonical.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::cone::{ConeDoc, PolyhedralCone};
use crate::error::{Error, Result};
use crate::polyhedron::{ConvexSet, HRep, Row, VRep};
use crate::rational::{from_strs, to_strs, Point, RatStr, Vector};

/// Environment variable overriding the fixture directory.
pub const FIXTURES_ENV: &str = "CONVEX_FIXTURES";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RowDoc {
    pub normal: Vec<RatStr>,
    pub rhs: RatStr,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum SetDoc {
    Hrep {
        dim: usize,
        #[serde(default)]
        ineqs: Vec<RowDoc>,
        #[serde(default)]
        eqs: Vec<RowDoc>,
    },
    Vrep {
        dim: usize,
        #[serde(default)]
        vertices: Vec<Vec<RatStr>>,
        #[serde(default)]
        rays: Vec<Vec<RatStr>>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum ConeEntry {
    Cone(ConeDoc),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FixtureDoc {
    pub set1: String,
    pub set2: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub point: Option<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceDocument {
    #[serde(default)]
    pub sets: BTreeMap<String, SetDoc>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub cones: BTreeMap<String, ConeEntry>,
    #[serde(default)]
    pub points: BTreeMap<String, Vec<RatStr>>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub functionals: BTreeMap<String, Vec<RatStr>>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub fixtures: BTreeMap<String, FixtureDoc>,
}

fn rows(docs: &[RowDoc]) -> Vec<Row> {
    docs.iter()
        .map(|r| Row::new(from_strs(&r.normal), r.rhs.0.clone()))
        .collect()
}

fn row_docs(rows: &[Row]) -> Vec<RowDoc> {
    rows.iter()
        .map(|r| RowDoc {
            normal: to_strs(&r.normal),
            rhs: RatStr(r.rhs.clone()),
        })
        .collect()
}

impl SetDoc {
    pub fn to_set(&self) -> Result<ConvexSet> {
        Ok(match self {
            SetDoc::Hrep { dim, ineqs, eqs } => {
                ConvexSet::from_hrep(HRep::new(*dim, rows(ineqs), rows(eqs))?)
            }
            SetDoc::Vrep {
                dim,
                vertices,
                rays,
            } => ConvexSet::from_vrep(VRep::new(
                *dim,
                vertices.iter().map(|v| from_strs(v)).collect(),
                rays.iter().map(|v| from_strs(v)).collect(),
            )?),
        })
    }

    pub fn from_hrep(h: &HRep) -> SetDoc {
        SetDoc::Hrep {
            dim: h.dim,
            ineqs: row_docs(&h.ineqs),
            eqs: row_docs(&h.eqs),
        }
    }

    pub fn from_vrep(v: &VRep) -> SetDoc {
        SetDoc::Vrep {
            dim: v.dim,
            vertices: v.vertices.iter().map(|p| to_strs(p)).collect(),
            rays: v.rays.iter().map(|p| to_strs(p)).collect(),
        }
    }
}

/// A pair of sets with an optional common point, resolved from a document.
#[derive(Clone, Debug)]
pub struct Fixture {
    pub name: String,
    pub set1: ConvexSet,
    pub set2: ConvexSet,
    pub point: Option<Point>,
}

impl InstanceDocument {
    pub fn parse(text: &str) -> Result<InstanceDocument> {
        serde_json::from_str(text).map_err(|e| {
            Error::Parse(format!("line {} column {}: {e}", e.line(), e.column()))
        })
    }

    pub fn load(path: &Path) -> Result<InstanceDocument> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
        InstanceDocument::parse(&text).map_err(|e| match e {
            Error::Parse(m) => Error::Parse(format!("{}: {m}", path.display())),
            other => other,
        })
    }

    /// Pretty JSON with a trailing newline; stable for equal documents.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("documents serialize");
        s.push('\n');
        s
    }

    pub fn set(&self, name: &str) -> Result<ConvexSet> {
        self.sets
            .get(name)
            .ok_or_else(|| Error::UnknownName {
                kind: "set",
                name: name.into(),
            })?
            .to_set()
    }

    pub fn cone(&self, name: &str) -> Result<PolyhedralCone> {
        let ConeEntry::Cone(c) = self.cones.get(name).ok_or_else(|| Error::UnknownName {
            kind: "cone",
            name: name.into(),
        })?;
        c.to_cone()
    }

    pub fn point(&self, name: &str) -> Result<Point> {
        self.points
            .get(name)
            .map(|p| from_strs(p))
            .ok_or_else(|| Error::UnknownName {
                kind: "point",
                name: name.into(),
            })
    }

    pub fn functional(&self, name: &str) -> Result<Vector> {
        self.functionals
            .get(name)
            .map(|p| from_strs(p))
            .ok_or_else(|| Error::UnknownName {
                kind: "functional",
                name: name.into(),
            })
    }

    /// Points are looked up among points first, then functionals, so either
    /// table can hold a vector used in both roles.
    pub fn vector(&self, name: &str) -> Result<Vector> {
        self.point(name).or_else(|_| self.functional(name))
    }

    pub fn fixture(&self, name: &str) -> Result<Fixture> {
        let f = self.fixtures.get(name).ok_or_else(|| Error::UnknownName {
            kind: "fixture",
            name: name.into(),
        })?;
        Ok(Fixture {
            name: name.into(),
            set1: self.set(&f.set1)?,
            set2: self.set(&f.set2)?,
            point: f.point.as_deref().map(|p| self.point(p)).transpose()?,
        })
    }

    pub fn all_fixtures(&self) -> Result<Vec<Fixture>> {
        self.fixtures.keys().map(|k| self.fixture(k)).collect()
    }
}

pub fn fixtures_dir() -> PathBuf {
    match std::env::var_os(FIXTURES_ENV) {
        Some(dir) => PathBuf::from(dir),
        None => PathBuf::from(concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures")),
    }
}

/// Every `*.json` document in the fixture directory, in file-name order.
pub fn load_fixture_documents(dir: &Path) -> Result<Vec<(String, InstanceDocument)>> {
    let entries = std::fs::read_dir(dir).map_err(|e| Error::Io(format!("{}: {e}", dir.display())))?;
    let mut paths: Vec<PathBuf> = entries
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .collect();
    paths.sort();
    paths
        .into_iter()
        .map(|p| {
            let stem = p.file_stem().unwrap_or_default().to_string_lossy().into_owned();
            Ok((stem, InstanceDocument::load(&p)?))
        })
        .collect()
}

/// All fixture pairs from the fixture directory, ordered by file then name.
pub fn load_fixtures(dir: &Path) -> Result<Vec<Fixture>> {
    let mut out = Vec::new();
    for (_, doc) in load_fixture_documents(dir)? {
        out.extend(doc.all_fixtures()?);
    }
    Ok(out)
}

/// Resolves `path` directly, else relative to the fixture directory (with
/// or without the `.json` suffix).
pub fn resolve_instance_path(path: &str) -> PathBuf {
    let direct = PathBuf::from(path);
    if direct.exists() {
        return direct;
    }
    let dir = fixtures_dir();
    let candidate = dir.join(path);
    if candidate.exists() {
        return candidate;
    }
    dir.join(format!("{path}.json"))
}

#[cfg(test)]
mod tests {
    use super::*;

    const DOC: &str = r#"{
      "sets": {
        "sq": {"kind": "hrep", "dim": 2, "ineqs": [
          {"normal": ["1", "0"], "rhs": "1"}, {"normal": ["-1", "0"], "rhs": "0"},
          {"normal": ["0", "1"], "rhs": "2/2"}, {"normal": ["0", "-1"], "rhs": 0}]},
        "tri": {"kind": "vrep", "dim": 2, "vertices": [["0", "0"], ["1", "0"], ["0", "1"]]}
      },
      "points": {"c": ["1/3", "1/3"]},
      "fixtures": {"p": {"set1": "sq", "set2": "tri", "point": "c"}}
    }"#;

    #[test]
    fn parse_and_resolve() {
        let doc = InstanceDocument::parse(DOC).unwrap();
        let f = doc.fixture("p").unwrap();
        let c = f.point.unwrap();
        assert!(f.set1.contains_point(&c).unwrap());
        assert!(f.set2.contains_point(&c).unwrap());
        assert!(matches!(doc.set("nope"), Err(Error::UnknownName { .. })));
    }

    #[test]
    fn canonical_reserialization_is_stable() {
        let doc = InstanceDocument::parse(DOC).unwrap();
        let once = doc.to_json();
        let twice = InstanceDocument::parse(&once).unwrap().to_json();
        assert_eq!(once, twice);
        assert!(once.contains("\"rhs\": \"1\""));
    }

    #[test]
    fn parse_error_has_position() {
        let err = InstanceDocument::parse("{\n  \"sets\": [}").unwrap_err();
        assert!(err.to_string().contains("line 2"), "{err}");
    }
}
