//! Finite-dimensional split basic algebras given by structure constants.
//!
//! An [`Algebra`] carries its complete set of primitive orthogonal idempotents
//! and a basis of its Jacobson radical as data supplied by the constructor.
//! Every constructor in this crate (path algebras, ideal quotients, opposites,
//! products and θ-extensions) knows its radical structurally;
//! [`Algebra::validate`] re-checks all of it.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{quotient, Basis, Fp, Matrix, SpanBuilder};

/// A finite quiver. Arrow endpoints are vertex indices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Quiver {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Arrow {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

impl Quiver {
    /// Build a quiver from vertex labels and `(name, source label, target label)` triples.
    pub fn new(vertices: Vec<String>, arrows: Vec<(String, String, String)>) -> Result<Self> {
        let mut index = HashMap::new();
        for (i, v) in vertices.iter().enumerate() {
            if index.insert(v.clone(), i).is_some() {
                return Err(Error::InvalidQuiver(format!("duplicate vertex label {v:?}")));
            }
        }
        let mut names = HashMap::new();
        let mut out = Vec::with_capacity(arrows.len());
        for (name, s, t) in arrows {
            let source = *index
                .get(&s)
                .ok_or_else(|| Error::InvalidQuiver(format!("arrow {name}: unknown source {s:?}")))?;
            let target = *index
                .get(&t)
                .ok_or_else(|| Error::InvalidQuiver(format!("arrow {name}: unknown target {t:?}")))?;
            if names.insert(name.clone(), ()).is_some() {
                return Err(Error::InvalidQuiver(format!("duplicate arrow name {name:?}")));
            }
            out.push(Arrow { name, source, target });
        }
        Ok(Quiver { vertices, arrows: out })
    }

    /// Linearly oriented `A_n`: vertices `1..=n`, arrows `a_i : i → i+1`.
    pub fn linear_a(n: usize) -> Self {
        let vertices = (1..=n).map(|i| i.to_string()).collect();
        let arrows = (1..n)
            .map(|i| (format!("a{i}"), i.to_string(), (i + 1).to_string()))
            .collect();
        Quiver::new(vertices, arrows).expect("well-formed")
    }

    /// `A_n` with arbitrary orientation: `forward[i]` orients the edge between
    /// vertices `i+1` and `i+2` as `i+1 → i+2`.
    pub fn a_with_orientation(forward: &[bool]) -> Self {
        let n = forward.len() + 1;
        let vertices = (1..=n).map(|i| i.to_string()).collect();
        let arrows = forward
            .iter()
            .enumerate()
            .map(|(i, &f)| {
                let (s, t) = if f { (i + 1, i + 2) } else { (i + 2, i + 1) };
                (format!("a{}", i + 1), s.to_string(), t.to_string())
            })
            .collect();
        Quiver::new(vertices, arrows).expect("well-formed")
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn arrow_index(&self, name: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.name == name)
    }

    pub fn vertex_index(&self, label: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == label)
    }

    /// The quiver with every arrow reversed.
    pub fn opposite(&self) -> Quiver {
        Quiver {
            vertices: self.vertices.clone(),
            arrows: self
                .arrows
                .iter()
                .map(|a| Arrow {
                    name: a.name.clone(),
                    source: a.target,
                    target: a.source,
                })
                .collect(),
        }
    }
}

/// A path, written in traversal order: first `arrows[0]`, then `arrows[1]`, ...
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Path {
    pub source: usize,
    pub arrows: Vec<usize>,
}

impl Path {
    pub fn trivial(v: usize) -> Self {
        Path {
            source: v,
            arrows: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arrows.is_empty()
    }

    pub fn is_trivial(&self) -> bool {
        self.arrows.is_empty()
    }

    pub fn target(&self, q: &Quiver) -> usize {
        self.arrows.last().map_or(self.source, |&a| q.arrows[a].target)
    }

    /// `self` followed by `next`, if they meet.
    pub fn then(&self, next: &Path, q: &Quiver) -> Option<Path> {
        if self.target(q) != next.source {
            return None;
        }
        let mut arrows = self.arrows.clone();
        arrows.extend_from_slice(&next.arrows);
        Some(Path {
            source: self.source,
            arrows,
        })
    }

    pub fn label(&self, q: &Quiver) -> String {
        if self.arrows.is_empty() {
            format!("e{}", q.vertices[self.source])
        } else {
            self.arrows
                .iter()
                .map(|&a| q.arrows[a].name.as_str())
                .collect::<Vec<_>>()
                .join(".")
        }
    }
}

/// A linear combination of parallel paths of length ≥ 2, each path given
/// by arrow names in traversal order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Relation {
    pub terms: Vec<(i64, Vec<String>)>,
}

impl Relation {
    pub fn monomial(path: &[&str]) -> Self {
        Relation {
            terms: vec![(1, path.iter().map(|s| s.to_string()).collect())],
        }
    }
}

/// Path data kept by path algebras (and their opposites): the quiver and,
/// for each basis element, the path it is.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathData {
    pub quiver: Quiver,
    pub basis_paths: Vec<Path>,
}

/// Serializable description of an algebra; the artifact format written by
/// `cleftlab build`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraParts {
    pub field: Fp,
    pub labels: Vec<String>,
    /// `mult[i][j]` = coordinates of `b_i · b_j`.
    pub mult: Vec<Vec<Vec<u32>>>,
    pub unit: Vec<u32>,
    pub idempotents: Vec<Vec<u32>>,
    pub vertex_labels: Vec<String>,
    pub radical: Vec<Vec<u32>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub paths: Option<PathData>,
}

/// An element of `e_target · rad · e_source` whose class is part of a basis
/// of `rad/rad²`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generator {
    pub element: Vec<u32>,
    pub source: usize,
    pub target: usize,
}

#[derive(Clone, PartialEq, Eq)]
pub struct Algebra {
    field: Fp,
    labels: Vec<String>,
    mult: Vec<Vec<u32>>,
    unit: Vec<u32>,
    idempotents: Vec<Vec<u32>>,
    vertex_labels: Vec<String>,
    radical: Basis,
    paths: Option<PathData>,
    left: Vec<Matrix>,
    right: Vec<Matrix>,
    generators: Vec<Generator>,
    words: Option<WordBasis>,
}

/// Products of generators forming a basis of the algebra.
///
/// `words[w]` lists indices into [`Algebra::generating_set`]; the word
/// `[g1, g2, …]` stands for `g1·g2·…`. Column `k` of `coefficients`
/// expresses basis element `b_k` in terms of the words.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WordBasis {
    pub words: Vec<Vec<usize>>,
    pub coefficients: Matrix,
}

impl fmt::Debug for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Algebra")
            .field("field", &self.field)
            .field("labels", &self.labels)
            .field("vertices", &self.vertex_labels)
            .finish_non_exhaustive()
    }
}

impl Algebra {
    /// Assemble an algebra from its parts. Only shapes are checked here;
    /// the algebra axioms are checked by [`Algebra::validate`].
    pub fn from_parts(parts: AlgebraParts) -> Result<Self> {
        let dim = parts.labels.len();
        let field = parts.field;
        let shape_err = |what: &str| Error::DimensionMismatch(format!("algebra {what}"));
        if parts.mult.len() != dim || parts.mult.iter().any(|row| row.len() != dim) {
            return Err(shape_err("multiplication table"));
        }
        if parts.mult.iter().flatten().any(|v| v.len() != dim) || parts.unit.len() != dim {
            return Err(shape_err("vector length"));
        }
        if parts.idempotents.iter().any(|v| v.len() != dim) {
            return Err(shape_err("idempotent length"));
        }
        if parts.vertex_labels.len() != parts.idempotents.len() {
            return Err(shape_err("vertex labels"));
        }
        let reduce = |v: &Vec<u32>| v.iter().map(|&x| x % field.p()).collect::<Vec<_>>();
        let mult: Vec<Vec<u32>> = parts.mult.iter().flatten().map(reduce).collect();
        let radical = Basis::new(field, dim, parts.radical.iter().map(reduce).collect())?;
        let left = (0..dim)
            .map(|i| Matrix::from_fn(field, dim, dim, |k, j| mult[i * dim + j][k]))
            .collect();
        let right = (0..dim)
            .map(|i| Matrix::from_fn(field, dim, dim, |k, j| mult[j * dim + i][k]))
            .collect();
        let mut a = Algebra {
            field,
            labels: parts.labels,
            mult,
            unit: reduce(&parts.unit),
            idempotents: parts.idempotents.iter().map(reduce).collect(),
            vertex_labels: parts.vertex_labels,
            radical,
            paths: parts.paths,
            left,
            right,
            generators: Vec::new(),
            words: None,
        };
        a.generators = a.compute_generators();
        a.words = a.compute_words();
        Ok(a)
    }

    pub fn to_parts(&self) -> AlgebraParts {
        let dim = self.dim();
        AlgebraParts {
            field: self.field,
            labels: self.labels.clone(),
            mult: (0..dim)
                .map(|i| (0..dim).map(|j| self.product_of_basis(i, j).to_vec()).collect())
                .collect(),
            unit: self.unit.clone(),
            idempotents: self.idempotents.clone(),
            vertex_labels: self.vertex_labels.clone(),
            radical: self.radical.vectors().to_vec(),
            paths: self.paths.clone(),
        }
    }

    /// The ground field `k` as a one-vertex algebra.
    pub fn ground(field: Fp) -> Self {
        path_algebra(&Quiver::new(vec!["1".into()], vec![]).expect("valid"), &[], 1, field)
            .expect("k is a path algebra")
    }

    /// `k × ⋯ × k` (`n` copies): the path algebra of `n` isolated vertices.
    pub fn semisimple(n: usize, field: Fp) -> Self {
        let q = Quiver::new((1..=n).map(|i| i.to_string()).collect(), vec![]).expect("valid");
        path_algebra(&q, &[], 1, field).expect("semisimple path algebra")
    }

    /// Path algebra of the linearly oriented `A_n` quiver.
    pub fn linear_a(n: usize, field: Fp) -> Self {
        path_algebra(&Quiver::linear_a(n), &[], n.max(1), field).expect("A_n is admissible")
    }

    /// `k[x]/(x²)`.
    pub fn dual_numbers(field: Fp) -> Self {
        let q = Quiver::new(vec!["1".into()], vec![("x".into(), "1".into(), "1".into())]).expect("valid");
        path_algebra(&q, &[Relation::monomial(&["x", "x"])], 2, field).expect("admissible")
    }

    #[inline]
    pub fn field(&self) -> Fp {
        self.field
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label_index(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn unit(&self) -> &[u32] {
        &self.unit
    }

    pub fn idempotents(&self) -> &[Vec<u32>] {
        &self.idempotents
    }

    pub fn num_vertices(&self) -> usize {
        self.idempotents.len()
    }

    pub fn vertex_labels(&self) -> &[String] {
        &self.vertex_labels
    }

    pub fn radical(&self) -> &Basis {
        &self.radical
    }

    pub fn paths(&self) -> Option<&PathData> {
        self.paths.as_ref()
    }

    /// Coordinates of `b_i · b_j`.
    #[inline]
    pub fn product_of_basis(&self, i: usize, j: usize) -> &[u32] {
        &self.mult[i * self.dim() + j]
    }

    /// Matrix of `x ↦ b_i · x`.
    pub fn left_mult(&self, i: usize) -> &Matrix {
        &self.left[i]
    }

    /// Matrix of `x ↦ x · b_i`.
    pub fn right_mult(&self, i: usize) -> &Matrix {
        &self.right[i]
    }

    pub fn left_mult_by(&self, v: &[u32]) -> Matrix {
        Matrix::combination(self.field, self.dim(), self.dim(), v, &self.left)
    }

    pub fn right_mult_by(&self, v: &[u32]) -> Matrix {
        Matrix::combination(self.field, self.dim(), self.dim(), v, &self.right)
    }

    pub fn mul(&self, x: &[u32], y: &[u32]) -> Vec<u32> {
        self.left_mult_by(x).mul_vec(y)
    }

    pub fn basis_vector(&self, i: usize) -> Vec<u32> {
        self.field.unit_vec(self.dim(), i)
    }

    pub fn zero(&self) -> Vec<u32> {
        vec![0; self.dim()]
    }

    /// Homogeneous lifts of a basis of `rad/rad²`.
    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    /// Idempotents followed by radical generators: these generate the algebra.
    pub fn generating_set(&self) -> Vec<Vec<u32>> {
        self.idempotents
            .iter()
            .cloned()
            .chain(self.generators.iter().map(|g| g.element.clone()))
            .collect()
    }

    /// Structure constants agree exactly (labels may differ).
    pub fn same_structure(&self, other: &Algebra) -> bool {
        self.field == other.field && self.mult == other.mult
    }

    /// `None` when the idempotents and radical generators do not generate
    /// the algebra (only possible for data that fails validation).
    pub fn word_basis(&self) -> Option<&WordBasis> {
        self.words.as_ref()
    }

    /// Extend the images of [`Algebra::generating_set`] to one matrix per
    /// basis element. The result is not checked against the module law.
    pub fn expand_action(&self, generator_images: &[Matrix]) -> Result<Vec<Matrix>> {
        let wb = self
            .word_basis()
            .ok_or_else(|| Error::Unsupported("algebra is not generated by its idempotents and radical".into()))?;
        let gens = self.generating_set();
        if generator_images.len() != gens.len() {
            return Err(Error::DimensionMismatch(format!(
                "expected {} generator images, got {}",
                gens.len(),
                generator_images.len()
            )));
        }
        let d = generator_images.first().map_or(0, |m| m.rows());
        let word_mats: Vec<Matrix> = wb
            .words
            .iter()
            .map(|w| {
                w.iter()
                    .fold(Matrix::identity(self.field, d), |acc, &g| acc.mul(&generator_images[g]))
            })
            .collect();
        Ok((0..self.dim())
            .map(|k| Matrix::combination(self.field, d, d, &wb.coefficients.column(k), &word_mats))
            .collect())
    }

    fn compute_words(&self) -> Option<WordBasis> {
        let f = self.field;
        let dim = self.dim();
        let gens = self.generating_set();
        let mut builder = SpanBuilder::new(f, dim);
        let mut words: Vec<Vec<usize>> = Vec::new();
        let mut elements: Vec<Vec<u32>> = Vec::new();
        let mut queue: std::collections::VecDeque<(Vec<usize>, Vec<u32>)> =
            gens.iter().enumerate().map(|(g, x)| (vec![g], x.clone())).collect();
        while let Some((w, x)) = queue.pop_front() {
            if builder.rank() == dim {
                break;
            }
            if !builder.insert(&x) {
                continue;
            }
            for (g, gx) in gens.iter().enumerate() {
                let mut w2 = Vec::with_capacity(w.len() + 1);
                w2.push(g);
                w2.extend_from_slice(&w);
                queue.push_back((w2, self.mul(gx, &x)));
            }
            words.push(w);
            elements.push(x);
        }
        if elements.len() != dim {
            return None;
        }
        let coefficients = Matrix::from_columns(f, dim, &elements).inverse()?;
        Some(WordBasis { words, coefficients })
    }

    fn compute_generators(&self) -> Vec<Generator> {
        let f = self.field;
        let dim = self.dim();
        let n = self.num_vertices();
        let rad = self.radical.vectors();
        let mut out = Vec::new();
        for s in 0..n {
            for t in 0..n {
                let el = self.left_mult_by(&self.idempotents[t]);
                let er = self.right_mult_by(&self.idempotents[s]);
                let sandwich = el.mul(&er);
                let mut builder = SpanBuilder::new(f, dim);
                for r1 in rad {
                    let l1 = self.left_mult_by(r1);
                    for r2 in rad {
                        builder.insert(&sandwich.mul_vec(&l1.mul_vec(r2)));
                    }
                }
                for r in rad {
                    let v = sandwich.mul_vec(r);
                    if builder.insert(&v) {
                        out.push(Generator {
                            element: v,
                            source: s,
                            target: t,
                        });
                    }
                }
            }
        }
        out
    }

    /// Replace one structure constant (used to build deliberately corrupted
    /// instances for guard tests).
    pub fn with_structure_constant(&self, i: usize, j: usize, k: usize, value: u32) -> Algebra {
        let mut parts = self.to_parts();
        parts.mult[i][j][k] = value % self.field.p();
        Algebra::from_parts(parts).expect("shape unchanged")
    }

    /// Replace the radical basis (guard tests).
    pub fn with_radical(&self, radical: Vec<Vec<u32>>) -> Result<Algebra> {
        let mut parts = self.to_parts();
        parts.radical = radical;
        Algebra::from_parts(parts)
    }

    /// Check every algebra axiom; never aborts.
    pub fn validate(&self) -> ValidationReport {
        validate(self)
    }

    /// The opposite algebra: same basis, `b_i ∘ b_j = b_j · b_i`.
    pub fn opposite(&self) -> Algebra {
        opposite(self)
    }
}

/// Outcome of a single validation check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub checks: Vec<Check>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn push(&mut self, name: &str, witness: Option<String>) {
        self.checks.push(Check {
            name: name.to_string(),
            passed: witness.is_none(),
            witness,
        });
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn first_failure(&self) -> Option<&Check> {
        self.failures().next()
    }

    pub fn merge(&mut self, other: ValidationReport) {
        self.checks.extend(other.checks);
    }
}

fn validate(a: &Algebra) -> ValidationReport {
    let f = a.field;
    let dim = a.dim();
    let lab = |i: usize| a.labels[i].clone();
    let mut report = ValidationReport::default();

    let mut witness = None;
    'assoc: for i in 0..dim {
        for j in 0..dim {
            let ij = a.product_of_basis(i, j);
            for k in 0..dim {
                let lhs = a.right[k].mul_vec(ij);
                let rhs = a.left[i].mul_vec(a.product_of_basis(j, k));
                if lhs != rhs {
                    witness = Some(format!("({}, {}, {})", lab(i), lab(j), lab(k)));
                    break 'assoc;
                }
            }
        }
    }
    report.push("associativity", witness);

    let unit_left = a.left_mult_by(&a.unit);
    let unit_right = a.right_mult_by(&a.unit);
    let id = Matrix::identity(f, dim);
    let witness = (0..dim)
        .find(|&i| unit_left.column(i) != a.basis_vector(i) || unit_right.column(i) != a.basis_vector(i))
        .map(lab);
    let witness = if dim == 0 || (unit_left == id && unit_right == id) {
        None
    } else {
        witness.or_else(|| Some("unit".into()))
    };
    report.push("unit law", witness);

    let mut witness = None;
    let n = a.num_vertices();
    'idem: for i in 0..n {
        for j in 0..n {
            let prod = a.mul(&a.idempotents[i], &a.idempotents[j]);
            let expected = if i == j { a.idempotents[i].clone() } else { a.zero() };
            if prod != expected {
                witness = Some(format!("(e{}, e{})", a.vertex_labels[i], a.vertex_labels[j]));
                break 'idem;
            }
        }
    }
    if witness.is_none() {
        let sum = a.idempotents.iter().fold(a.zero(), |acc, e| f.vec_add(&acc, e));
        if sum != a.unit {
            witness = Some("idempotents do not sum to the unit".into());
        }
    }
    report.push("orthogonal idempotents", witness);

    let rad = &a.radical;
    let mut witness = None;
    'ideal: for r in rad.vectors() {
        for i in 0..dim {
            if !rad.contains(&a.left[i].mul_vec(r)) || !rad.contains(&a.right[i].mul_vec(r)) {
                witness = Some(format!("basis element {} times radical vector {:?}", lab(i), r));
                break 'ideal;
            }
        }
    }
    report.push("radical is a two-sided ideal", witness);

    let mut power = rad.clone();
    let mut steps = 0;
    while !power.is_empty() && steps <= dim + 1 {
        let vectors: Vec<Vec<u32>> = power
            .vectors()
            .iter()
            .flat_map(|x| rad.vectors().iter().map(move |r| (x, r)))
            .map(|(x, r)| a.mul(x, r))
            .collect();
        power = Basis::span(f, dim, vectors);
        steps += 1;
    }
    report.push(
        "radical is nilpotent",
        (!power.is_empty()).then(|| format!("rad^{steps} is still nonzero")),
    );

    report.push("split basic", split_basic_witness(a));
    report
}

fn split_basic_witness(a: &Algebra) -> Option<String> {
    let f = a.field;
    let dim = a.dim();
    let q = match quotient(f, dim, &a.radical) {
        Ok(q) => q,
        Err(e) => return Some(e.to_string()),
    };
    let n = a.num_vertices();
    if q.dim > n {
        return Some(format!(
            "radical not maximal-nilpotent among supplied data: dim A/rad = {} but {} idempotents",
            q.dim, n
        ));
    }
    if q.dim < n {
        return Some(format!("dim A/rad = {} is smaller than the {} idempotents", q.dim, n));
    }
    for i in 0..n {
        for j in 0..n {
            let el = a.left_mult_by(&a.idempotents[i]);
            let er = a.right_mult_by(&a.idempotents[j]);
            let images: Vec<Vec<u32>> = (0..dim).map(|k| q.projection.mul_vec(&el.mul(&er).column(k))).collect();
            let d = Basis::span(f, q.dim, images).len();
            let expected = usize::from(i == j);
            if d != expected {
                return Some(format!(
                    "radical not maximal-nilpotent among supplied data: dim e{}(A/rad)e{} = {d}",
                    a.vertex_labels[i], a.vertex_labels[j]
                ));
            }
        }
    }
    None
}

/// Path algebra `kQ/I` truncated at `length_bound`.
///
/// Every path of length `length_bound` must lie in the ideal generated by
/// `rels`; otherwise the bound is inadmissible and the offending path is
/// reported. The basis consists of paths of length `< length_bound` not
/// eliminated by the ideal (longer paths are eliminated first).
pub fn path_algebra(q: &Quiver, rels: &[Relation], length_bound: usize, field: Fp) -> Result<Algebra> {
    if q.vertices.is_empty() {
        return Err(Error::InvalidQuiver("no vertices".into()));
    }
    let bound = length_bound.max(1);
    let rel_paths = parse_relations(q, rels)?;

    // All paths of length ≤ bound, ordered by length then discovery order.
    let mut paths: Vec<Path> = (0..q.vertices.len()).map(Path::trivial).collect();
    let mut frontier = paths.clone();
    for _ in 0..bound {
        let mut next = Vec::new();
        for p in &frontier {
            let t = p.target(q);
            for (ai, a) in q.arrows.iter().enumerate() {
                if a.source == t {
                    let mut arrows = p.arrows.clone();
                    arrows.push(ai);
                    next.push(Path {
                        source: p.source,
                        arrows,
                    });
                }
            }
        }
        paths.extend(next.iter().cloned());
        frontier = next;
    }
    let index: HashMap<Path, usize> = paths.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
    let total = paths.len();
    let short: Vec<usize> = (0..total).filter(|&i| paths[i].len() < bound).collect();
    let short_count = short.len();

    // Every u·r·v. `full` keeps vectors whose terms all fit within the bound;
    // `truncated` drops terms of length ≥ bound.
    let mut full = SpanBuilder::new(field, total);
    let mut truncated_vectors = Vec::new();
    for rel in &rel_paths {
        let src = rel[0].1.source;
        let tgt = rel[0].1.target(q);
        let min_len = rel.iter().map(|(_, p)| p.len()).min().unwrap_or(0);
        let max_len = rel.iter().map(|(_, p)| p.len()).max().unwrap_or(0);
        for before in paths.iter().filter(|p| p.target(q) == src) {
            for after in paths.iter().filter(|p| p.source == tgt) {
                let outer = before.len() + after.len();
                if outer + min_len >= bound && outer + max_len > bound {
                    continue;
                }
                let mut v_full = vec![0u32; total];
                let mut v_trunc = vec![0u32; short_count];
                let mut fits = true;
                for (c, p) in rel {
                    let whole = before
                        .then(p, q)
                        .and_then(|x| x.then(after, q))
                        .expect("endpoints match");
                    let c = field.reduce(*c);
                    match index.get(&whole) {
                        Some(&i) => {
                            v_full[i] = field.add(v_full[i], c);
                            if whole.len() < bound {
                                v_trunc[i] = field.add(v_trunc[i], c);
                            }
                        }
                        None => fits = false,
                    }
                }
                if fits {
                    full.insert(&v_full);
                }
                truncated_vectors.push(v_trunc);
            }
        }
    }
    if let Some(&w) = (0..total)
        .filter(|&i| paths[i].len() == bound)
        .collect::<Vec<_>>()
        .iter()
        .find(|&&i| !full.contains(&field.unit_vec(total, i)))
    {
        return Err(Error::InadmissibleBound {
            bound,
            witness: paths[w].label(q),
        });
    }

    // Reverse column order so echelon pivots land on the longest paths.
    let reversed = |v: &[u32]| -> Vec<u32> { v.iter().rev().copied().collect() };
    let ideal = Basis::span(field, short_count, truncated_vectors.iter().map(|v| reversed(v)));
    let quo = quotient(field, short_count, &ideal)?;
    let dim = quo.dim;
    // Free columns (in reversed order) are the surviving basis paths.
    let mut basis_short: Vec<usize> = (0..dim)
        .map(|c| {
            let col = quo.section.column(c);
            let rev_pos = col.iter().position(|&x| x == 1).expect("section is a unit vector");
            short_count - 1 - rev_pos
        })
        .collect();
    basis_short.sort_unstable();
    // Coordinates: project a short-path vector (natural order) to basis coords.
    let coord_of_free: HashMap<usize, usize> = basis_short.iter().enumerate().map(|(i, &s)| (s, i)).collect();
    let project = |v_short: &[u32]| -> Vec<u32> {
        let img = quo.projection.mul_vec(&reversed(v_short));
        // `img` is indexed by the quotient's own coordinate order (reversed free columns).
        let mut out = vec![0; dim];
        for (c, &x) in img.iter().enumerate() {
            if x != 0 {
                let col = quo.section.column(c);
                let rev_pos = col.iter().position(|&y| y == 1).expect("unit vector");
                out[coord_of_free[&(short_count - 1 - rev_pos)]] = x;
            }
        }
        out
    };
    let short_pos: HashMap<usize, usize> = short.iter().enumerate().map(|(i, &s)| (s, i)).collect();
    let basis_paths: Vec<Path> = basis_short.iter().map(|&s| paths[short[s]].clone()).collect();

    let mut mult = vec![vec![vec![0u32; dim]; dim]; dim];
    for (i, bi) in basis_paths.iter().enumerate() {
        for (j, bj) in basis_paths.iter().enumerate() {
            // b_i · b_j is "b_j then b_i".
            if let Some(prod) = bj.then(bi, q) {
                if prod.len() < bound {
                    let mut v = vec![0; short_count];
                    v[short_pos[&index[&prod]]] = 1;
                    mult[i][j] = project(&v);
                }
            }
        }
    }
    let vertex_count = q.vertices.len();
    let idempotents: Vec<Vec<u32>> = (0..vertex_count)
        .map(|v| {
            let pos = basis_paths
                .iter()
                .position(|p| p.is_trivial() && p.source == v)
                .expect("trivial paths never lie in the ideal");
            field.unit_vec(dim, pos)
        })
        .collect();
    let unit = idempotents.iter().fold(vec![0; dim], |acc, e| field.vec_add(&acc, e));
    let radical = basis_paths
        .iter()
        .enumerate()
        .filter(|(_, p)| !p.is_trivial())
        .map(|(i, _)| field.unit_vec(dim, i))
        .collect();
    let labels = basis_paths.iter().map(|p| p.label(q)).collect();
    Algebra::from_parts(AlgebraParts {
        field,
        labels,
        mult,
        unit,
        idempotents,
        vertex_labels: q.vertices.clone(),
        radical,
        paths: Some(PathData {
            quiver: q.clone(),
            basis_paths,
        }),
    })
}

fn parse_relations(q: &Quiver, rels: &[Relation]) -> Result<Vec<Vec<(i64, Path)>>> {
    let mut out = Vec::new();
    for (ri, rel) in rels.iter().enumerate() {
        let mut terms = Vec::new();
        for (c, names) in &rel.terms {
            let arrows = names
                .iter()
                .map(|n| {
                    q.arrow_index(n).ok_or_else(|| Error::NonParallelRelation {
                        index: ri,
                        detail: format!("unknown arrow {n:?}"),
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            if arrows.len() < 2 {
                return Err(Error::NonParallelRelation {
                    index: ri,
                    detail: format!("path [{}] has length < 2", names.join(", ")),
                });
            }
            for w in arrows.windows(2) {
                if q.arrows[w[0]].target != q.arrows[w[1]].source {
                    return Err(Error::NonParallelRelation {
                        index: ri,
                        detail: format!("path [{}] is not composable", names.join(", ")),
                    });
                }
            }
            let source = q.arrows[arrows[0]].source;
            terms.push((*c, Path { source, arrows }));
        }
        if terms.is_empty() {
            continue;
        }
        let (s0, t0) = (terms[0].1.source, terms[0].1.target(q));
        if let Some((_, p)) = terms.iter().find(|(_, p)| p.source != s0 || p.target(q) != t0) {
            return Err(Error::NonParallelRelation {
                index: ri,
                detail: format!("paths {} and {} are not parallel", terms[0].1.label(q), p.label(q)),
            });
        }
        out.push(terms);
    }
    Ok(out)
}

/// Result of [`quotient_by_ideal`].
#[derive(Clone, Debug)]
pub struct AlgebraQuotient {
    pub algebra: Algebra,
    /// `dim(A/I) × dim(A)`.
    pub projection: Matrix,
    /// A linear section of the projection (not multiplicative).
    pub section: Matrix,
    /// Closure of the generators: a basis of the two-sided ideal.
    pub ideal: Basis,
}

/// Two-sided ideal generated by `gens`.
pub fn ideal_closure(a: &Algebra, gens: &[Vec<u32>]) -> Basis {
    let f = a.field;
    let dim = a.dim();
    let mut builder = SpanBuilder::new(f, dim);
    let mut vectors: Vec<Vec<u32>> = Vec::new();
    let mut queue: Vec<Vec<u32>> = gens.to_vec();
    while let Some(v) = queue.pop() {
        if builder.insert(&v) {
            for i in 0..dim {
                queue.push(a.left[i].mul_vec(&v));
                queue.push(a.right[i].mul_vec(&v));
            }
            vectors.push(v);
        }
    }
    Basis::new(f, dim, vectors).expect("builder keeps independent vectors")
}

/// `A / ⟨gens⟩` with its projection.
pub fn quotient_by_ideal(a: &Algebra, gens: &[Vec<u32>]) -> Result<AlgebraQuotient> {
    let f = a.field;
    let dim = a.dim();
    let ideal = ideal_closure(a, gens);
    if ideal.contains(&a.unit) {
        return Err(Error::UnitInIdeal);
    }
    let q = quotient(f, dim, &ideal)?;
    let free: Vec<usize> = (0..q.dim)
        .map(|c| q.section.column(c).iter().position(|&x| x == 1).expect("unit column"))
        .collect();
    let mult = free
        .iter()
        .map(|&i| {
            free.iter()
                .map(|&j| q.projection.mul_vec(a.product_of_basis(i, j)))
                .collect()
        })
        .collect();
    let mut idempotents = Vec::new();
    let mut vertex_labels = Vec::new();
    for (e, l) in a.idempotents.iter().zip(&a.vertex_labels) {
        let img = q.projection.mul_vec(e);
        if img.iter().any(|&x| x != 0) {
            idempotents.push(img);
            vertex_labels.push(l.clone());
        }
    }
    let radical = Basis::span(f, q.dim, a.radical.vectors().iter().map(|r| q.projection.mul_vec(r))).into_vectors();
    let algebra = Algebra::from_parts(AlgebraParts {
        field: f,
        labels: free.iter().map(|&i| a.labels[i].clone()).collect(),
        mult,
        unit: q.projection.mul_vec(&a.unit),
        idempotents,
        vertex_labels,
        radical,
        paths: None,
    })?;
    Ok(AlgebraQuotient {
        algebra,
        projection: q.projection,
        section: q.section,
        ideal,
    })
}

fn opposite(a: &Algebra) -> Algebra {
    let dim = a.dim();
    let mut parts = a.to_parts();
    parts.mult = (0..dim)
        .map(|i| (0..dim).map(|j| a.product_of_basis(j, i).to_vec()).collect())
        .collect();
    parts.paths = a.paths.as_ref().map(|pd| {
        let quiver = pd.quiver.opposite();
        let basis_paths = pd
            .basis_paths
            .iter()
            .map(|p| Path {
                source: p.target(&pd.quiver),
                arrows: p.arrows.iter().rev().copied().collect(),
            })
            .collect();
        PathData { quiver, basis_paths }
    });
    Algebra::from_parts(parts).expect("same shape")
}

/// Direct product `a × b`, basis of `a` first.
pub fn product(a: &Algebra, b: &Algebra) -> Result<Algebra> {
    if a.field != b.field {
        return Err(Error::FieldMismatch(a.field.p(), b.field.p()));
    }
    let f = a.field;
    let (da, db) = (a.dim(), b.dim());
    let dim = da + db;
    let embed_a = |v: &[u32]| {
        let mut out = vec![0; dim];
        out[..da].copy_from_slice(v);
        out
    };
    let embed_b = |v: &[u32]| {
        let mut out = vec![0; dim];
        out[da..].copy_from_slice(v);
        out
    };
    let mut mult = vec![vec![vec![0u32; dim]; dim]; dim];
    for i in 0..da {
        for j in 0..da {
            mult[i][j] = embed_a(a.product_of_basis(i, j));
        }
    }
    for i in 0..db {
        for j in 0..db {
            mult[da + i][da + j] = embed_b(b.product_of_basis(i, j));
        }
    }
    let mut labels: Vec<String> = a.labels.clone();
    for l in &b.labels {
        let mut l = l.clone();
        while labels.contains(&l) {
            l.push('\'');
        }
        labels.push(l);
    }
    let mut vertex_labels = a.vertex_labels.clone();
    for l in &b.vertex_labels {
        let mut l = l.clone();
        while vertex_labels.contains(&l) {
            l.push('\'');
        }
        vertex_labels.push(l);
    }
    Algebra::from_parts(AlgebraParts {
        field: f,
        labels,
        mult,
        unit: f.vec_add(&embed_a(&a.unit), &embed_b(&b.unit)),
        idempotents: a
            .idempotents
            .iter()
            .map(|e| embed_a(e))
            .chain(b.idempotents.iter().map(|e| embed_b(e)))
            .collect(),
        vertex_labels,
        radical: a
            .radical
            .vectors()
            .iter()
            .map(|r| embed_a(r))
            .chain(b.radical.vectors().iter().map(|r| embed_b(r)))
            .collect(),
        paths: None,
    })
}

/// A permutation `π` of basis indices with `b[π i][π j] = π(a[i][j])`, if any.
pub fn find_basis_permutation(a: &Algebra, b: &Algebra) -> Option<Vec<usize>> {
    if a.field != b.field || a.dim() != b.dim() {
        return None;
    }
    let dim = a.dim();
    let mut perm = vec![usize::MAX; dim];
    let mut used = vec![false; dim];
    fn consistent(a: &Algebra, b: &Algebra, perm: &[usize], upto: usize) -> bool {
        // Triples among assigned indices that involve the newest one.
        let n = upto + 1;
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    if i != upto && j != upto && k != upto {
                        continue;
                    }
                    if a.product_of_basis(i, j)[k] != b.product_of_basis(perm[i], perm[j])[perm[k]] {
                        return false;
                    }
                }
            }
        }
        true
    }
    fn go(a: &Algebra, b: &Algebra, perm: &mut Vec<usize>, used: &mut Vec<bool>, pos: usize) -> bool {
        if pos == perm.len() {
            return true;
        }
        for cand in 0..perm.len() {
            if used[cand] {
                continue;
            }
            perm[pos] = cand;
            used[cand] = true;
            if consistent(a, b, perm, pos) && go(a, b, perm, used, pos + 1) {
                return true;
            }
            used[cand] = false;
        }
        perm[pos] = usize::MAX;
        false
    }
    go(a, b, &mut perm, &mut used, 0).then_some(perm)
}
