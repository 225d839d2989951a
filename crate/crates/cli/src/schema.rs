//! JSON input files and the artifacts written by `build`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::path::Path;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use cleftlab::algebra::{path_algebra, Algebra, AlgebraParts, Quiver, Relation};
use cleftlab::cleft::{theta_extension, CleftInstance};
use cleftlab::linalg::{Fp, Matrix};
use cleftlab::rep::{Bimodule, Module, ThetaData};

use crate::error::{CliError, Context};

/// Vertex labels may be written as strings or integers.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Label {
    Name(String),
    Number(i64),
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Name(s) => f.write_str(s),
            Label::Number(n) => write!(f, "{n}"),
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ArrowSpec {
    pub name: String,
    pub source: Label,
    pub target: Label,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Term {
    pub coeff: i64,
    pub path: Vec<String>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct QuiverFile {
    pub field: Option<u32>,
    pub vertices: Vec<Label>,
    #[serde(default)]
    pub arrows: Vec<ArrowSpec>,
    #[serde(default)]
    pub relations: Vec<Vec<Term>>,
    pub length_bound: Option<usize>,
}

/// Row-major integer matrix, reduced mod p on load.
pub type IntMatrix = Vec<Vec<i64>>;

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BimoduleFile {
    pub dim: usize,
    #[serde(default)]
    pub basis: Vec<String>,
    pub left_action: BTreeMap<String, IntMatrix>,
    pub right_action: BTreeMap<String, IntMatrix>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ThetaFile {
    pub table: Vec<Vec<Vec<i64>>>,
    pub nilpotency: Option<usize>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ModuleFile {
    Action {
        dim: usize,
        action: BTreeMap<String, IntMatrix>,
    },
    Representation {
        vertex_dims: BTreeMap<String, usize>,
        #[serde(default)]
        arrow_maps: BTreeMap<String, IntMatrix>,
    },
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
#[allow(clippy::large_enum_variant)]
pub enum Artifact {
    Algebra {
        algebra: AlgebraParts,
    },
    Instance {
        name: String,
        base: AlgebraParts,
        bimodule: BimoduleFile,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        theta: Option<ThetaFile>,
        total: AlgebraParts,
    },
}

pub fn read_json<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T, CliError> {
    let loc = path.display().to_string();
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Missing(format!("{loc}: {e}")))?;
    serde_json::from_str(&text).map_err(|e| CliError::schema(loc, e.to_string()))
}

pub fn field(p: u32, location: &str) -> Result<Fp, CliError> {
    Fp::new(p).at(location)
}

pub fn matrix(f: Fp, rows: usize, cols: usize, m: &IntMatrix, location: &str) -> Result<Matrix, CliError> {
    let shape_ok = m.len() == rows && m.iter().all(|r| r.len() == cols);
    if !shape_ok {
        let got_cols = m.first().map_or(0, Vec::len);
        return Err(CliError::schema(
            location,
            format!("expected a {rows}×{cols} matrix, got {}×{got_cols}", m.len()),
        ));
    }
    let p = i64::from(f.p());
    Ok(Matrix::from_fn(f, rows, cols, |i, j| m[i][j].rem_euclid(p) as u32))
}

fn actions(
    a: &Algebra,
    dim: usize,
    given: &BTreeMap<String, IntMatrix>,
    location: &str,
) -> Result<Vec<Matrix>, CliError> {
    if let Some(extra) = given.keys().find(|l| a.label_index(l).is_none()) {
        return Err(CliError::schema(location, format!("unknown basis label {extra:?}")));
    }
    a.labels()
        .iter()
        .map(|l| {
            let m = given
                .get(l)
                .ok_or_else(|| CliError::schema(location, format!("no matrix for basis element {l:?}")))?;
            matrix(a.field(), dim, dim, m, &format!("{location}[{l}]"))
        })
        .collect()
}

impl QuiverFile {
    /// The path algebra; `field` is used when the file names none.
    pub fn build(&self, field_flag: Option<u32>, location: &str) -> Result<Algebra, CliError> {
        let p = match (self.field, field_flag) {
            (Some(a), Some(b)) if a != b => {
                return Err(CliError::schema(location, format!("field {a} in file, --field {b}")));
            }
            (Some(p), _) | (None, Some(p)) => p,
            (None, None) => 2,
        };
        let f = field(p, location)?;
        let vertices = self.vertices.iter().map(Label::to_string).collect();
        let arrows = self
            .arrows
            .iter()
            .map(|a| (a.name.clone(), a.source.to_string(), a.target.to_string()))
            .collect();
        let q = Quiver::new(vertices, arrows).at(location)?;
        let rels: Vec<Relation> = self
            .relations
            .iter()
            .map(|r| Relation {
                terms: r.iter().map(|t| (t.coeff, t.path.clone())).collect(),
            })
            .collect();
        let bound = self.length_bound.unwrap_or(q.vertices().len());
        path_algebra(&q, &rels, bound, f).at(location)
    }
}

impl BimoduleFile {
    pub fn build(&self, r: &Arc<Algebra>, location: &str) -> Result<Bimodule, CliError> {
        if !self.basis.is_empty() && self.basis.len() != self.dim {
            return Err(CliError::schema(
                location,
                format!("{} basis labels for dimension {}", self.basis.len(), self.dim),
            ));
        }
        let left = actions(r, self.dim, &self.left_action, &format!("{location}: left_action"))?;
        let right = actions(r, self.dim, &self.right_action, &format!("{location}: right_action"))?;
        Bimodule::new(r, r, self.dim, left, right).at(location)
    }
}

impl ThetaFile {
    pub fn build(&self, m: Bimodule, location: &str) -> Result<ThetaData, CliError> {
        let p = i64::from(m.field().p());
        let table: Vec<Vec<Vec<u32>>> = self
            .table
            .iter()
            .map(|row| {
                row.iter()
                    .map(|v| v.iter().map(|x| x.rem_euclid(p) as u32).collect())
                    .collect()
            })
            .collect();
        if table.len() != m.dim()
            || table
                .iter()
                .any(|r| r.len() != m.dim() || r.iter().any(|v| v.len() != m.dim()))
        {
            return Err(CliError::schema(
                location,
                format!("table must be {0}×{0} vectors of length {0}", m.dim()),
            ));
        }
        ThetaData::new(m, &table, self.nilpotency).at(location)
    }
}

impl ModuleFile {
    pub fn build(&self, a: &Arc<Algebra>, location: &str) -> Result<Module, CliError> {
        match self {
            ModuleFile::Action { dim, action } => {
                let acts = actions(a, *dim, action, location)?;
                Module::new(a, *dim, acts).at(location)
            }
            ModuleFile::Representation {
                vertex_dims,
                arrow_maps,
            } => {
                let pd = a
                    .paths()
                    .ok_or_else(|| CliError::schema(location, "representation form needs a path algebra"))?;
                let q = &pd.quiver;
                if let Some(v) = vertex_dims.keys().find(|v| q.vertex_index(v).is_none()) {
                    return Err(CliError::schema(location, format!("unknown vertex {v:?}")));
                }
                let dims: Vec<usize> = q
                    .vertices()
                    .iter()
                    .map(|v| vertex_dims.get(v).copied().unwrap_or(0))
                    .collect();
                let mut maps = HashMap::new();
                for (name, m) in arrow_maps {
                    let arrow = q
                        .arrow_index(name)
                        .map(|i| &q.arrows()[i])
                        .ok_or_else(|| CliError::schema(location, format!("unknown arrow {name:?}")))?;
                    let (rows, cols) = (dims[arrow.target], dims[arrow.source]);
                    maps.insert(
                        name.clone(),
                        matrix(a.field(), rows, cols, m, &format!("{location}[{name}]"))?,
                    );
                }
                Module::from_representation(a, &dims, &maps).at(location)
            }
        }
    }
}

/// Load an algebra artifact and check the algebra axioms.
pub fn load_algebra(path: &Path) -> Result<Arc<Algebra>, CliError> {
    let loc = path.display().to_string();
    match read_json::<Artifact>(path)? {
        Artifact::Algebra { algebra } => {
            let a = Algebra::from_parts(algebra).at(&loc)?;
            ensure_valid(&a.validate(), &loc)?;
            Ok(Arc::new(a))
        }
        Artifact::Instance { .. } => Err(CliError::schema(loc, "expected an algebra artifact, found an instance")),
    }
}

/// Load an instance artifact. The stored total algebra replaces the one
/// rebuilt from `(R, M, θ)`, so edits to it are caught by validation.
pub fn load_instance(path: &Path) -> Result<CleftInstance, CliError> {
    let loc = path.display().to_string();
    match read_json::<Artifact>(path)? {
        Artifact::Instance {
            name,
            base,
            bimodule,
            theta,
            total,
        } => {
            let r = Arc::new(Algebra::from_parts(base).at(&format!("{loc}: base"))?);
            ensure_valid(&r.validate(), &format!("{loc}: base"))?;
            let m = bimodule.build(&r, &format!("{loc}: bimodule"))?;
            let th = match theta {
                Some(t) => t.build(m, &format!("{loc}: theta"))?,
                None => ThetaData::zero(m),
            };
            let mut c = theta_extension(&name, &r, th).at(&loc)?;
            c.total = Arc::new(Algebra::from_parts(total).at(&format!("{loc}: total"))?);
            Ok(c)
        }
        Artifact::Algebra { .. } => Err(CliError::schema(loc, "expected an instance artifact, found an algebra")),
    }
}

pub fn ensure_valid(report: &cleftlab::algebra::ValidationReport, location: &str) -> Result<(), CliError> {
    match report.first_failure() {
        None => Ok(()),
        Some(c) => Err(CliError::invalid(
            location,
            format!("{} fails: {}", c.name, c.witness.as_deref().unwrap_or("no witness")),
        )),
    }
}
