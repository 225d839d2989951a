//! Projective covers, presentations, resolutions, Ext, Tor, the Nakayama
//! functor and the Auslander-Reiten translate.
//!
//! Finitely generated projectives are lists of vertices standing for
//! `⊕ A·e_i`. A map `A·e_i → A·e_j` is right multiplication by an element of
//! `e_i·A·e_j`, so maps between projectives are matrices of algebra elements.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::linalg::{Basis, Matrix};
use crate::rep::{direct_sum_over, Bimodule, Module, Morphism};

/// `A·e_i` as columns of algebra coordinates, with a left inverse.
fn left_ideal_basis(a: &Algebra, i: usize) -> (Matrix, Matrix) {
    let b = a.right_mult_by(&a.idempotents()[i]).column_space();
    (b.as_columns(), b.left_inverse())
}

/// `e_i·A` as columns of algebra coordinates, with a left inverse.
fn right_ideal_basis(a: &Algebra, i: usize) -> (Matrix, Matrix) {
    let b = a.left_mult_by(&a.idempotents()[i]).column_space();
    (b.as_columns(), b.left_inverse())
}

/// `⊕_s A·e_{vertices[s]}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Projective {
    algebra: Arc<Algebra>,
    vertices: Vec<usize>,
}

impl Projective {
    pub fn new(algebra: &Arc<Algebra>, vertices: Vec<usize>) -> Result<Self> {
        if let Some(&v) = vertices.iter().find(|&&v| v >= algebra.num_vertices()) {
            return Err(Error::NotProjective(format!("vertex index {v} out of range")));
        }
        Ok(Projective {
            algebra: algebra.clone(),
            vertices,
        })
    }

    pub fn zero(algebra: &Arc<Algebra>) -> Self {
        Projective {
            algebra: algebra.clone(),
            vertices: Vec::new(),
        }
    }

    /// `A` itself, one summand per vertex.
    pub fn regular(algebra: &Arc<Algebra>) -> Self {
        Projective {
            algebra: algebra.clone(),
            vertices: (0..algebra.num_vertices()).collect(),
        }
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.algebra
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn is_zero(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Number of summands with each vertex.
    pub fn multiplicities(&self) -> Vec<usize> {
        let mut m = vec![0; self.algebra.num_vertices()];
        for &v in &self.vertices {
            m[v] += 1;
        }
        m
    }

    pub fn direct_sum(&self, other: &Projective) -> Projective {
        let mut vertices = self.vertices.clone();
        vertices.extend_from_slice(&other.vertices);
        Projective {
            algebra: self.algebra.clone(),
            vertices,
        }
    }

    fn blocks(&self) -> Vec<(Matrix, Matrix)> {
        self.vertices
            .iter()
            .map(|&v| left_ideal_basis(&self.algebra, v))
            .collect()
    }

    /// The module `⊕ P(i)`.
    pub fn module(&self) -> Module {
        let parts: Vec<Module> = self
            .vertices
            .iter()
            .map(|&v| Module::projective(&self.algebra, v))
            .collect();
        direct_sum_over(&self.algebra, &parts).expect("same algebra").module
    }

    pub fn dim(&self) -> usize {
        self.blocks().iter().map(|(b, _)| b.cols()).sum()
    }

    /// Module coordinates of the generator `e_i` of summand `s`.
    fn generator(&self, blocks: &[(Matrix, Matrix)], s: usize) -> Vec<u32> {
        let mut out = Vec::new();
        for (t, (b, l)) in blocks.iter().enumerate() {
            if t == s {
                out.extend(l.mul_vec(&self.algebra.idempotents()[self.vertices[s]]));
            } else {
                out.extend(std::iter::repeat_n(0, b.cols()));
            }
        }
        out
    }

    /// Split a module vector into algebra elements, one per summand.
    fn components(&self, blocks: &[(Matrix, Matrix)], v: &[u32]) -> Vec<Vec<u32>> {
        let mut offset = 0;
        blocks
            .iter()
            .map(|(b, _)| {
                let part = &v[offset..offset + b.cols()];
                offset += b.cols();
                b.mul_vec(part)
            })
            .collect()
    }
}

/// A map between projectives: `entries[t][s] ∈ e_{i_s}·A·e_{j_t}` is the
/// component from source summand `s` to target summand `t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjMap {
    pub source: Projective,
    pub target: Projective,
    pub entries: Vec<Vec<Vec<u32>>>,
}

impl ProjMap {
    pub fn zero(source: &Projective, target: &Projective) -> Self {
        let a = &source.algebra;
        ProjMap {
            source: source.clone(),
            target: target.clone(),
            entries: vec![vec![a.zero(); source.vertices.len()]; target.vertices.len()],
        }
    }

    /// Check that each entry lies in the right corner `e_i·A·e_j`.
    pub fn validate(&self) -> Result<()> {
        let a = &self.source.algebra;
        for (t, row) in self.entries.iter().enumerate() {
            for (s, c) in row.iter().enumerate() {
                let ei = &a.idempotents()[self.source.vertices[s]];
                let ej = &a.idempotents()[self.target.vertices[t]];
                if a.mul(&a.mul(ei, c), ej) != *c {
                    return Err(Error::NotAMorphism(format!("entry ({t}, {s}) is not in e_i·A·e_j")));
                }
            }
        }
        Ok(())
    }

    pub fn morphism(&self) -> Morphism {
        let a = &self.source.algebra;
        let f = a.field();
        let sb = self.source.blocks();
        let tb = self.target.blocks();
        let rows: usize = tb.iter().map(|(b, _)| b.cols()).sum();
        let cols: usize = sb.iter().map(|(b, _)| b.cols()).sum();
        let mut m = Matrix::zeros(f, rows, cols);
        let mut r0 = 0;
        for (t, (_, lt)) in tb.iter().enumerate() {
            let mut c0 = 0;
            for (s, (bs, _)) in sb.iter().enumerate() {
                let block = lt.mul(&a.right_mult_by(&self.entries[t][s]).mul(bs));
                m.set_block(r0, c0, &block);
                c0 += bs.cols();
            }
            r0 += tb[t].0.cols();
        }
        Morphism::new_unchecked(self.source.module(), self.target.module(), m)
    }

    /// Read off the entries of a module map between the modules of two projectives.
    pub fn from_morphism(source: &Projective, target: &Projective, f: &Morphism) -> Result<ProjMap> {
        let sb = source.blocks();
        let tb = target.blocks();
        if f.matrix().cols() != sb.iter().map(|(b, _)| b.cols()).sum::<usize>()
            || f.matrix().rows() != tb.iter().map(|(b, _)| b.cols()).sum::<usize>()
        {
            return Err(Error::DimensionMismatch("map does not fit the projectives".into()));
        }
        let mut entries = vec![vec![Vec::new(); source.vertices.len()]; target.vertices.len()];
        for s in 0..source.vertices.len() {
            let image = f.matrix().mul_vec(&source.generator(&sb, s));
            for (t, c) in target.components(&tb, &image).into_iter().enumerate() {
                entries[t][s] = c;
            }
        }
        Ok(ProjMap {
            source: source.clone(),
            target: target.clone(),
            entries,
        })
    }

    /// `g ∘ self`.
    pub fn then(&self, g: &ProjMap) -> ProjMap {
        let a = &self.source.algebra;
        let f = a.field();
        let entries = (0..g.target.vertices.len())
            .map(|u| {
                (0..self.source.vertices.len())
                    .map(|s| {
                        let mut acc = a.zero();
                        for t in 0..self.target.vertices.len() {
                            let prod = a.mul(&self.entries[t][s], &g.entries[u][t]);
                            acc = f.vec_add(&acc, &prod);
                        }
                        acc
                    })
                    .collect()
            })
            .collect();
        ProjMap {
            source: self.source.clone(),
            target: g.target.clone(),
            entries,
        }
    }

    /// `self ⊕ (extra → 0)`: adds summands to the source that map to zero.
    pub fn with_zero_summands(&self, extra: &[usize]) -> ProjMap {
        let a = &self.source.algebra;
        let source = self.source.direct_sum(&Projective {
            algebra: a.clone(),
            vertices: extra.to_vec(),
        });
        let entries = self
            .entries
            .iter()
            .map(|row| {
                let mut row = row.clone();
                row.extend(std::iter::repeat_n(a.zero(), extra.len()));
                row
            })
            .collect();
        ProjMap {
            source,
            target: self.target.clone(),
            entries,
        }
    }
}

/// All `P(i) = A·e_i`.
pub fn indecomposable_projectives(a: &Arc<Algebra>) -> Vec<Module> {
    (0..a.num_vertices()).map(|i| Module::projective(a, i)).collect()
}

/// A projective cover `P ↠ x`.
#[derive(Clone, Debug)]
pub struct Cover {
    pub projective: Projective,
    pub epi: Morphism,
}

pub fn projective_cover(x: &Module) -> Cover {
    let a = x.algebra();
    let f = a.field();
    let rad = x.radical();
    let q = crate::linalg::quotient(f, x.dim(), &rad).expect("rad x is independent");
    let top_action: Vec<Matrix> = a
        .idempotents()
        .iter()
        .map(|e| q.projection.mul(&x.act(e).mul(&q.section)))
        .collect();
    let mut vertices = Vec::new();
    let mut generators = Vec::new();
    for (i, e) in a.idempotents().iter().enumerate() {
        let ex = x.act(e);
        for t in top_action[i].column_space().vectors() {
            vertices.push(i);
            generators.push(ex.mul_vec(&q.section.mul_vec(t)));
        }
    }
    let projective = Projective {
        algebra: a.clone(),
        vertices,
    };
    let blocks = projective.blocks();
    let matrix = blocks
        .iter()
        .zip(&generators)
        .fold(Matrix::zeros(f, x.dim(), 0), |acc, ((b, _), v)| {
            let cols: Vec<Vec<u32>> = b.columns().iter().map(|c| x.act(c).mul_vec(v)).collect();
            acc.hstack(&Matrix::from_columns(f, x.dim(), &cols))
        });
    let epi = Morphism::new_unchecked(projective.module(), x.clone(), matrix);
    debug_assert!(epi.is_surjective());
    Cover { projective, epi }
}

pub fn is_projective(x: &Module) -> bool {
    projective_cover(x).projective.dim() == x.dim()
}

/// `P1 --σ--> P0 --ε--> x → 0`.
#[derive(Clone, Debug)]
pub struct Presentation {
    pub sigma: ProjMap,
    pub cover: Morphism,
    pub minimal: bool,
}

impl Presentation {
    /// The presentation `σ ⊕ (P' → 0)` with `P' = ⊕_{v ∈ extra} P(v)`.
    pub fn augmented(&self, extra: &[usize]) -> Presentation {
        Presentation {
            sigma: self.sigma.with_zero_summands(extra),
            cover: self.cover.clone(),
            minimal: self.minimal && extra.is_empty(),
        }
    }

    pub fn p1(&self) -> &Projective {
        &self.sigma.source
    }

    pub fn p0(&self) -> &Projective {
        &self.sigma.target
    }
}

/// Cover `P ↠ k` of a submodule `k ↪ ambient`, composed into a map of projectives.
fn cover_of_kernel(kernel_incl: &Morphism, ambient: &Projective) -> Result<(ProjMap, Morphism)> {
    let cover = projective_cover(kernel_incl.source());
    let composite = cover.epi.then(kernel_incl)?;
    let sigma = ProjMap::from_morphism(&cover.projective, ambient, &composite)?;
    Ok((sigma, cover.epi))
}

pub fn minimal_presentation(x: &Module) -> Presentation {
    let c0 = projective_cover(x);
    let (_, incl) = c0.epi.kernel();
    let (sigma, _) = cover_of_kernel(&incl, &c0.projective).expect("kernel lives in the cover");
    let p = Presentation {
        sigma,
        cover: c0.epi,
        minimal: true,
    };
    debug_assert!(
        Basis::span(x.field(), p.cover.source().dim(), p.sigma.morphism().matrix().columns())
            .vectors()
            .iter()
            .all(|v| p.cover.source().radical().contains(v))
    );
    p
}

/// A minimal projective resolution, truncated.
#[derive(Clone, Debug)]
pub struct Resolution {
    /// `P_0, P_1, …`.
    pub terms: Vec<Projective>,
    /// `differentials[k-1] : P_k → P_{k-1}`.
    pub differentials: Vec<ProjMap>,
    pub cover: Morphism,
    /// The next syzygy vanished, so the resolution is complete.
    pub complete: bool,
}

impl Resolution {
    pub fn length(&self) -> usize {
        self.terms.iter().rposition(|p| !p.is_zero()).unwrap_or(0)
    }
}

/// Minimal resolution with terms up to homological degree `n`.
pub fn resolution(x: &Module, n: usize) -> Resolution {
    let c0 = projective_cover(x);
    let mut terms = vec![c0.projective.clone()];
    let mut differentials = Vec::new();
    let (_, mut incl) = c0.epi.kernel();
    let mut complete = incl.source().is_zero();
    while !complete && terms.len() <= n {
        let prev = terms.last().expect("nonempty").clone();
        let (d, epi) = cover_of_kernel(&incl, &prev).expect("kernel lives in the previous term");
        let (_, next) = epi.kernel();
        complete = next.source().is_zero();
        terms.push(d.source.clone());
        differentials.push(d);
        incl = next;
    }
    Resolution {
        terms,
        differentials,
        cover: c0.epi,
        complete,
    }
}

/// `Hom(d, y) : Hom(P_{k-1}, y) → Hom(P_k, y)`, using `Hom(A·e_i, y) = e_i·y`.
pub fn hom_into(d: &ProjMap, y: &Module) -> Matrix {
    let f = y.field();
    let blocks = y.vertex_blocks();
    let rows: usize = d.source.vertices.iter().map(|&v| blocks[v].0.cols()).sum();
    let cols: usize = d.target.vertices.iter().map(|&v| blocks[v].0.cols()).sum();
    let mut m = Matrix::zeros(f, rows, cols);
    let mut r0 = 0;
    for (s, &vs) in d.source.vertices.iter().enumerate() {
        let mut c0 = 0;
        for (t, &vt) in d.target.vertices.iter().enumerate() {
            let block = blocks[vs].1.mul(&y.act(&d.entries[t][s]).mul(&blocks[vt].0));
            m.set_block(r0, c0, &block);
            c0 += blocks[vt].0.cols();
        }
        r0 += blocks[vs].0.cols();
    }
    m
}

fn hom_dim_projective(p: &Projective, y: &Module) -> usize {
    let dv = y.dim_vector();
    p.vertices.iter().map(|&v| dv[v]).sum()
}

/// `dim Ext^j(x, y)`.
pub fn ext_dim(x: &Module, y: &Module, j: usize) -> Result<usize> {
    if !crate::rep::same_algebra(x.algebra(), y.algebra()) {
        return Err(Error::AlgebraMismatch);
    }
    let res = resolution(x, j + 1);
    if j >= res.terms.len() {
        return Ok(0);
    }
    let dim_j = hom_dim_projective(&res.terms[j], y);
    let rank_out = res.differentials.get(j).map_or(0, |d| hom_into(d, y).rank());
    let rank_in = if j == 0 {
        0
    } else {
        hom_into(&res.differentials[j - 1], y).rank()
    };
    Ok(dim_j - rank_out - rank_in)
}

/// `m ⊗ d : m ⊗ P_k → m ⊗ P_{k-1}`, using `m ⊗ A·e_i = m·e_i`.
fn tensor_with(m: &Bimodule, d: &ProjMap) -> Matrix {
    let r = m.right_algebra();
    let f = r.field();
    let blocks: Vec<(Matrix, Matrix)> = r
        .idempotents()
        .iter()
        .map(|e| {
            let b = m.right_act(e).column_space();
            (b.as_columns(), b.left_inverse())
        })
        .collect();
    let rows: usize = d.target.vertices.iter().map(|&v| blocks[v].0.cols()).sum();
    let cols: usize = d.source.vertices.iter().map(|&v| blocks[v].0.cols()).sum();
    let mut out = Matrix::zeros(f, rows, cols);
    let mut r0 = 0;
    for (t, &vt) in d.target.vertices.iter().enumerate() {
        let mut c0 = 0;
        for (s, &vs) in d.source.vertices.iter().enumerate() {
            let block = blocks[vt].1.mul(&m.right_act(&d.entries[t][s]).mul(&blocks[vs].0));
            out.set_block(r0, c0, &block);
            c0 += blocks[vs].0.cols();
        }
        r0 += blocks[vt].0.cols();
    }
    out
}

/// `dim Tor_j(m, y)` for a bimodule `m` over the algebra of `y` (on the right).
pub fn tor_dim(m: &Bimodule, y: &Module, j: usize) -> Result<usize> {
    if !crate::rep::same_algebra(m.right_algebra(), y.algebra()) {
        return Err(Error::AlgebraMismatch);
    }
    let res = resolution(y, j + 1);
    if j >= res.terms.len() {
        return Ok(0);
    }
    let dims: Vec<usize> = m
        .right_algebra()
        .idempotents()
        .iter()
        .map(|e| m.right_act(e).rank())
        .collect();
    let dim_j: usize = res.terms[j].vertices.iter().map(|&v| dims[v]).sum();
    let rank_out = if j == 0 {
        0
    } else {
        tensor_with(m, &res.differentials[j - 1]).rank()
    };
    let rank_in = res.differentials.get(j).map_or(0, |d| tensor_with(m, d).rank());
    Ok(dim_j - rank_out - rank_in)
}

/// Projective dimension if it is at most `bound`.
pub fn pd_upto(x: &Module, bound: usize) -> Option<usize> {
    if x.is_zero() {
        return Some(0);
    }
    let res = resolution(x, bound);
    res.complete.then(|| res.length())
}

/// `ν(⊕ P(i)) = ⊕ D(e_i·A)`.
pub fn nakayama(p: &Projective) -> Module {
    let a = &p.algebra;
    let parts: Vec<Module> = p
        .vertices
        .iter()
        .map(|&v| {
            let (b, l) = right_ideal_basis(a, v);
            let action = (0..a.dim())
                .map(|k| l.mul(&a.right_mult(k).mul(&b)).transpose())
                .collect();
            Module::new_unchecked(a, b.cols(), action).expect("shapes agree")
        })
        .collect();
    direct_sum_over(a, &parts).expect("same algebra").module
}

/// `ν(f)`: the dual of left multiplication `e_j·A → e_i·A` by each entry.
pub fn nakayama_map(f: &ProjMap) -> Morphism {
    let a = &f.source.algebra;
    let fld = a.field();
    let sb: Vec<(Matrix, Matrix)> = f.source.vertices.iter().map(|&v| right_ideal_basis(a, v)).collect();
    let tb: Vec<(Matrix, Matrix)> = f.target.vertices.iter().map(|&v| right_ideal_basis(a, v)).collect();
    let rows: usize = tb.iter().map(|(b, _)| b.cols()).sum();
    let cols: usize = sb.iter().map(|(b, _)| b.cols()).sum();
    let mut m = Matrix::zeros(fld, rows, cols);
    let mut r0 = 0;
    for (t, (bt, _)) in tb.iter().enumerate() {
        let mut c0 = 0;
        for (s, (bs, ls)) in sb.iter().enumerate() {
            let left = ls.mul(&a.left_mult_by(&f.entries[t][s]).mul(bt));
            m.set_block(r0, c0, &left.transpose());
            c0 += bs.cols();
        }
        r0 += bt.cols();
    }
    Morphism::new_unchecked(nakayama(&f.source), nakayama(&f.target), m)
}

/// `τx = ker ν(σ)` for the minimal presentation `σ` of `x`.
pub fn tau(x: &Module) -> Module {
    if x.is_zero() {
        return x.clone();
    }
    let p = minimal_presentation(x);
    nakayama_map(&p.sigma).kernel().0
}

/// Serializable form of a map between projectives.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProjMapData {
    pub source: Vec<usize>,
    pub target: Vec<usize>,
    pub entries: Vec<Vec<Vec<u32>>>,
}

impl ProjMap {
    pub fn to_data(&self) -> ProjMapData {
        ProjMapData {
            source: self.source.vertices.clone(),
            target: self.target.vertices.clone(),
            entries: self.entries.clone(),
        }
    }

    pub fn from_data(algebra: &Arc<Algebra>, data: &ProjMapData) -> Result<ProjMap> {
        let source = Projective::new(algebra, data.source.clone())?;
        let target = Projective::new(algebra, data.target.clone())?;
        if data.entries.len() != target.vertices.len()
            || data
                .entries
                .iter()
                .any(|r| r.len() != source.vertices.len() || r.iter().any(|c| c.len() != algebra.dim()))
        {
            return Err(Error::DimensionMismatch("map entries".into()));
        }
        let map = ProjMap {
            source,
            target,
            entries: data.entries.clone(),
        };
        map.validate()?;
        Ok(map)
    }
}
