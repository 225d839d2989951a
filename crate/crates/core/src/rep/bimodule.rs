use std::sync::Arc;

use crate::algebra::{Algebra, Quiver};
use crate::error::{Error, Result};
use crate::linalg::{quotient, Basis, Fp, Matrix};

use super::{same_algebra, Module, Morphism};

/// An `L`-`R`-bimodule. `right_action[k]` is the matrix of `m ↦ m·b_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bimodule {
    left: Arc<Algebra>,
    right: Arc<Algebra>,
    dim: usize,
    left_action: Vec<Matrix>,
    right_action: Vec<Matrix>,
}

impl Bimodule {
    /// Build a bimodule, checking both module laws and that the actions commute.
    pub fn new(
        left: &Arc<Algebra>,
        right: &Arc<Algebra>,
        dim: usize,
        left_action: Vec<Matrix>,
        right_action: Vec<Matrix>,
    ) -> Result<Self> {
        if left.field() != right.field() {
            return Err(Error::FieldMismatch(left.field().p(), right.field().p()));
        }
        let b = Bimodule {
            left: left.clone(),
            right: right.clone(),
            dim,
            left_action,
            right_action,
        };
        b.check()?;
        Ok(b)
    }

    fn check(&self) -> Result<()> {
        let bad = |e: Error| Error::InvalidBimodule(e.to_string());
        Module::new(&self.left, self.dim, self.left_action.clone()).map_err(bad)?;
        let op = Arc::new(self.right.opposite());
        Module::new(&op, self.dim, self.right_action.clone()).map_err(bad)?;
        for (i, l) in self.left_action.iter().enumerate() {
            for (j, r) in self.right_action.iter().enumerate() {
                if l.mul(r) != r.mul(l) {
                    return Err(Error::InvalidBimodule(format!(
                        "left action of {} does not commute with right action of {}",
                        self.left.labels()[i],
                        self.right.labels()[j]
                    )));
                }
            }
        }
        Ok(())
    }

    /// `R` as an `R`-`R`-bimodule.
    pub fn regular(r: &Arc<Algebra>) -> Self {
        Bimodule {
            left: r.clone(),
            right: r.clone(),
            dim: r.dim(),
            left_action: (0..r.dim()).map(|i| r.left_mult(i).clone()).collect(),
            right_action: (0..r.dim()).map(|i| r.right_mult(i).clone()).collect(),
        }
    }

    /// `D(R) = Hom_k(R, k)` with `(r·φ)(x) = φ(x·r)` and `(φ·r)(x) = φ(r·x)`.
    pub fn dual_regular(r: &Arc<Algebra>) -> Self {
        Bimodule::regular(r).dual()
    }

    /// `D(M)`, an `R`-`L`-bimodule when `M` is `L`-`R`.
    pub fn dual(&self) -> Bimodule {
        Bimodule {
            left: self.right.clone(),
            right: self.left.clone(),
            dim: self.dim,
            left_action: self.right_action.iter().map(Matrix::transpose).collect(),
            right_action: self.left_action.iter().map(Matrix::transpose).collect(),
        }
    }

    /// The arrow bimodule of a quiver over `k × ⋯ × k` (one idempotent per
    /// vertex, basis in vertex order): `e_t·a·e_s = a` for `a : s → t`.
    pub fn arrows(r: &Arc<Algebra>, q: &Quiver) -> Result<Self> {
        let n = q.vertices().len();
        if r.num_vertices() != n || r.dim() != n {
            return Err(Error::InvalidBimodule(format!(
                "arrow bimodule needs a semisimple algebra with {n} vertices"
            )));
        }
        let f = r.field();
        let d = q.arrows().len();
        let diag = |pick: &dyn Fn(usize) -> bool| Matrix::from_fn(f, d, d, |i, j| u32::from(i == j && pick(i)));
        let coord = |e: &[u32]| e.iter().position(|&c| c == 1).expect("vertex idempotent");
        let mut left_action = vec![Matrix::zeros(f, d, d); n];
        let mut right_action = vec![Matrix::zeros(f, d, d); n];
        for (v, e) in r.idempotents().iter().enumerate() {
            let k = coord(e);
            left_action[k] = diag(&|i| q.arrows()[i].target == v);
            right_action[k] = diag(&|i| q.arrows()[i].source == v);
        }
        Bimodule::new(r, r, d, left_action, right_action)
    }

    /// A left `L`-module viewed as an `L`-`k` bimodule.
    pub fn from_left_module(x: &Module, ground: &Arc<Algebra>) -> Result<Self> {
        if ground.dim() != 1 {
            return Err(Error::InvalidBimodule("right algebra must be the ground field".into()));
        }
        Bimodule::new(
            x.algebra(),
            ground,
            x.dim(),
            x.actions().to_vec(),
            vec![Matrix::identity(x.field(), x.dim())],
        )
    }

    /// A left module over `R^op` viewed as a `k`-`R` bimodule.
    pub fn from_right_module(x: &Module, right: &Arc<Algebra>, ground: &Arc<Algebra>) -> Result<Self> {
        if ground.dim() != 1 {
            return Err(Error::InvalidBimodule("left algebra must be the ground field".into()));
        }
        Bimodule::new(
            ground,
            right,
            x.dim(),
            vec![Matrix::identity(x.field(), x.dim())],
            x.actions().to_vec(),
        )
    }

    pub fn left_algebra(&self) -> &Arc<Algebra> {
        &self.left
    }

    pub fn right_algebra(&self) -> &Arc<Algebra> {
        &self.right
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn field(&self) -> Fp {
        self.left.field()
    }

    pub fn left_action(&self, k: usize) -> &Matrix {
        &self.left_action[k]
    }

    pub fn right_action(&self, k: usize) -> &Matrix {
        &self.right_action[k]
    }

    pub fn left_actions(&self) -> &[Matrix] {
        &self.left_action
    }

    pub fn right_actions(&self) -> &[Matrix] {
        &self.right_action
    }

    pub fn left_act(&self, v: &[u32]) -> Matrix {
        Matrix::combination(self.field(), self.dim, self.dim, v, &self.left_action)
    }

    pub fn right_act(&self, v: &[u32]) -> Matrix {
        Matrix::combination(self.field(), self.dim, self.dim, v, &self.right_action)
    }

    pub fn as_left_module(&self) -> Module {
        Module::new_unchecked(&self.left, self.dim, self.left_action.clone()).expect("checked shapes")
    }

    /// The right module structure as a left module over `op`, which must be
    /// the opposite of the right algebra.
    pub fn as_right_module(&self, op: &Arc<Algebra>) -> Module {
        Module::new_unchecked(op, self.dim, self.right_action.clone()).expect("checked shapes")
    }

    /// The same vector space with left and right exchanged, as an
    /// `R^op`-`L^op` bimodule.
    pub fn opposite(&self, left_op: &Arc<Algebra>, right_op: &Arc<Algebra>) -> Bimodule {
        Bimodule {
            left: right_op.clone(),
            right: left_op.clone(),
            dim: self.dim,
            left_action: self.right_action.clone(),
            right_action: self.left_action.clone(),
        }
    }

    pub fn direct_sum(parts: &[Bimodule]) -> Result<Bimodule> {
        let first = parts
            .first()
            .ok_or_else(|| Error::InvalidBimodule("empty direct sum".into()))?;
        if parts
            .iter()
            .any(|b| !same_algebra(&b.left, &first.left) || !same_algebra(&b.right, &first.right))
        {
            return Err(Error::AlgebraMismatch);
        }
        let f = first.field();
        let stack = |sel: &dyn Fn(&Bimodule) -> &Vec<Matrix>, n: usize| -> Vec<Matrix> {
            (0..n)
                .map(|k| {
                    let blocks: Vec<Matrix> = parts.iter().map(|b| sel(b)[k].clone()).collect();
                    Matrix::block_diag(f, &blocks)
                })
                .collect()
        };
        Ok(Bimodule {
            left: first.left.clone(),
            right: first.right.clone(),
            dim: parts.iter().map(|b| b.dim).sum(),
            left_action: stack(&|b| &b.left_action, first.left.dim()),
            right_action: stack(&|b| &b.right_action, first.right.dim()),
        })
    }

    /// The `i`-fold tensor power over the common algebra (`i ≥ 1`).
    pub fn tensor_power(&self, i: usize) -> Result<TensorPower> {
        if i == 0 {
            return Err(Error::Unsupported("zeroth tensor power".into()));
        }
        if !same_algebra(&self.left, &self.right) {
            return Err(Error::AlgebraMismatch);
        }
        let f = self.field();
        let d = self.dim;
        let free = d.pow(i as u32);
        let gens = self.right.generating_set();
        let mut relations = Vec::new();
        for pos in 1..i {
            let before = Matrix::identity(f, d.pow((pos - 1) as u32));
            let after = Matrix::identity(f, d.pow((i - pos - 1) as u32));
            for g in &gens {
                let mid = self
                    .right_act(g)
                    .kron(&Matrix::identity(f, d))
                    .sub(&Matrix::identity(f, d).kron(&self.left_act(g)));
                relations.extend(before.kron(&mid).kron(&after).columns());
            }
        }
        let rel = Basis::span(f, free, relations);
        let q = quotient(f, free, &rel)?;
        let id_rest = Matrix::identity(f, d.pow((i - 1) as u32));
        let left_action = self
            .left_action
            .iter()
            .map(|l| q.projection.mul(&l.kron(&id_rest).mul(&q.section)))
            .collect();
        let right_action = self
            .right_action
            .iter()
            .map(|r| q.projection.mul(&id_rest.kron(r).mul(&q.section)))
            .collect();
        Ok(TensorPower {
            bimodule: Bimodule {
                left: self.left.clone(),
                right: self.right.clone(),
                dim: q.dim,
                left_action,
                right_action,
            },
            projection: q.projection,
            section: q.section,
        })
    }
}

/// `N^{⊗i}` as a quotient of the `i`-fold vector space tensor power.
#[derive(Clone, Debug)]
pub struct TensorPower {
    pub bimodule: Bimodule,
    /// `dim N^{⊗i} × (dim N)^i`.
    pub projection: Matrix,
    pub section: Matrix,
}

/// `M ⊗_R Y` with the projection from the vector space tensor `M ⊗_k Y`.
#[derive(Clone, Debug)]
pub struct Tensor {
    pub module: Module,
    /// `dim(M⊗_R Y) × (dim M · dim Y)`.
    pub projection: Matrix,
    pub section: Matrix,
}

impl Tensor {
    /// `M ⊗ f : self → other` where `other` is the tensor with the target of `f`.
    pub fn map_to(&self, other: &Tensor, bimodule: &Bimodule, f: &Morphism) -> Morphism {
        let fld = bimodule.field();
        let lifted = Matrix::identity(fld, bimodule.dim()).kron(f.matrix());
        let matrix = other.projection.mul(&lifted.mul(&self.section));
        Morphism::new_unchecked(self.module.clone(), other.module.clone(), matrix)
    }
}

/// `M ⊗_R Y` for an `S`-`R`-bimodule `M` and a left `R`-module `Y`;
/// a left `S`-module.
pub fn tensor(m: &Bimodule, y: &Module) -> Result<Tensor> {
    if !same_algebra(m.right_algebra(), y.algebra()) {
        return Err(Error::AlgebraMismatch);
    }
    let f = m.field();
    let free = m.dim() * y.dim();
    let id_m = Matrix::identity(f, m.dim());
    let id_y = Matrix::identity(f, y.dim());
    let mut relations = Vec::new();
    for g in m.right_algebra().generating_set() {
        let rel = m.right_act(&g).kron(&id_y).sub(&id_m.kron(&y.act(&g)));
        relations.extend(rel.columns());
    }
    let q = quotient(f, free, &Basis::span(f, free, relations))?;
    let action = m
        .left_actions()
        .iter()
        .map(|l| q.projection.mul(&l.kron(&id_y).mul(&q.section)))
        .collect();
    let module = Module::new_unchecked(m.left_algebra(), q.dim, action)?;
    Ok(Tensor {
        module,
        projection: q.projection,
        section: q.section,
    })
}

/// `M ⊗ f`.
pub fn tensor_map(m: &Bimodule, f: &Morphism) -> Result<Morphism> {
    let src = tensor(m, f.source())?;
    let tgt = tensor(m, f.target())?;
    Ok(src.map_to(&tgt, m, f))
}

/// An associative `R`-bimodule map `θ : M ⊗_R M → M`, stored as the
/// `dim M × (dim M)²` matrix on the vector space tensor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThetaData {
    pub bimodule: Bimodule,
    pub theta: Matrix,
    pub nilpotency_index: Option<usize>,
}

impl ThetaData {
    /// Build from structure constants `t[i][j] = θ(m_i ⊗ m_j)` and validate.
    pub fn new(bimodule: Bimodule, t: &[Vec<Vec<u32>>], nilpotency_index: Option<usize>) -> Result<Self> {
        let d = bimodule.dim();
        let f = bimodule.field();
        if t.len() != d || t.iter().any(|row| row.len() != d || row.iter().any(|v| v.len() != d)) {
            return Err(Error::InvalidTheta("structure constants have the wrong shape".into()));
        }
        let theta = Matrix::from_fn(f, d, d * d, |k, c| t[c / d][c % d][k] % f.p());
        let data = ThetaData {
            bimodule,
            theta,
            nilpotency_index,
        };
        data.validate()?;
        Ok(data)
    }

    pub fn from_matrix(bimodule: Bimodule, theta: Matrix, nilpotency_index: Option<usize>) -> Result<Self> {
        let d = bimodule.dim();
        if theta.rows() != d || theta.cols() != d * d {
            return Err(Error::InvalidTheta("θ matrix has the wrong shape".into()));
        }
        let data = ThetaData {
            bimodule,
            theta,
            nilpotency_index,
        };
        data.validate()?;
        Ok(data)
    }

    /// `θ = 0`.
    pub fn zero(bimodule: Bimodule) -> Self {
        let d = bimodule.dim();
        let theta = Matrix::zeros(bimodule.field(), d, d * d);
        ThetaData {
            bimodule,
            theta,
            nilpotency_index: Some(2),
        }
    }

    pub fn dim(&self) -> usize {
        self.bimodule.dim()
    }

    pub fn apply(&self, u: &[u32], v: &[u32]) -> Vec<u32> {
        self.theta.mul_vec(&self.bimodule.field().vec_kron(u, v))
    }

    /// `θ(m_i ⊗ m_j)`.
    pub fn product_of_basis(&self, i: usize, j: usize) -> Vec<u32> {
        self.theta.column(i * self.dim() + j)
    }

    pub fn is_zero(&self) -> bool {
        self.theta.is_zero()
    }

    pub fn validate(&self) -> Result<()> {
        let b = &self.bimodule;
        if !same_algebra(b.left_algebra(), b.right_algebra()) {
            return Err(Error::InvalidTheta("M must be an R-R-bimodule".into()));
        }
        let f = b.field();
        let d = b.dim();
        let id = Matrix::identity(f, d);
        let r = b.right_algebra();
        for (gi, g) in r.generating_set().iter().enumerate() {
            let balance = b.right_act(g).kron(&id).sub(&id.kron(&b.left_act(g)));
            if !self.theta.mul(&balance).is_zero() {
                return Err(Error::InvalidTheta(format!("θ is not balanced for generator {gi}")));
            }
        }
        for k in 0..r.dim() {
            if self.theta.mul(&b.left_action(k).kron(&id)) != b.left_action(k).mul(&self.theta) {
                return Err(Error::InvalidTheta(format!(
                    "θ is not left linear for {}",
                    r.labels()[k]
                )));
            }
            if self.theta.mul(&id.kron(b.right_action(k))) != b.right_action(k).mul(&self.theta) {
                return Err(Error::InvalidTheta(format!(
                    "θ is not right linear for {}",
                    r.labels()[k]
                )));
            }
        }
        let lhs = self.theta.mul(&self.theta.kron(&id));
        let rhs = self.theta.mul(&id.kron(&self.theta));
        if let Some(c) = (0..d * d * d).find(|&c| lhs.column(c) != rhs.column(c)) {
            return Err(Error::InvalidTheta(format!(
                "θ is not associative at (m{}, m{}, m{})",
                c / (d * d) + 1,
                c / d % d + 1,
                c % d + 1
            )));
        }
        if let Some(m) = self.nilpotency_index {
            let mut power = Basis::full(f, d);
            for _ in 1..m {
                let vectors: Vec<Vec<u32>> = power
                    .vectors()
                    .iter()
                    .flat_map(|u| (0..d).map(move |j| (u, j)))
                    .map(|(u, j)| self.apply(u, &f.unit_vec(d, j)))
                    .collect();
                power = Basis::span(f, d, vectors);
            }
            if !power.is_empty() {
                return Err(Error::InvalidTheta(format!("M is not {m}-nilpotent")));
            }
        }
        Ok(())
    }
}
