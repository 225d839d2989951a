//! Left modules over an [`Algebra`] as action matrices, and the maps
//! between them.

mod bimodule;
mod decompose;
mod extension;

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::linalg::{Basis, Fp, Matrix};

pub use bimodule::{tensor, tensor_map, Bimodule, Tensor, TensorPower, ThetaData};
pub use decompose::{count_nonisomorphic, decompose, find_isomorphism, in_add, is_isomorphic, IsoBudget};
pub use extension::{build_extension, cocycle_space, dual, dual_over, trace_of_in, Cocycle, Extension};

/// Two algebra handles describe the same algebra.
pub fn same_algebra(a: &Arc<Algebra>, b: &Arc<Algebra>) -> bool {
    Arc::ptr_eq(a, b) || a.same_structure(b)
}

#[derive(PartialEq, Eq)]
struct ModuleData {
    algebra: Arc<Algebra>,
    dim: usize,
    action: Vec<Matrix>,
}

/// A finite-dimensional left module: one `dim × dim` matrix per algebra
/// basis element. Cloning is cheap.
#[derive(Clone, PartialEq, Eq)]
pub struct Module(Arc<ModuleData>);

impl fmt::Debug for Module {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Module(dim {}, dim vector {:?})", self.dim(), self.dim_vector())
    }
}

impl Module {
    /// Build a module, checking the module law.
    pub fn new(algebra: &Arc<Algebra>, dim: usize, action: Vec<Matrix>) -> Result<Self> {
        let m = Self::new_unchecked(algebra, dim, action)?;
        m.check_law()?;
        Ok(m)
    }

    /// Build a module without checking the module law (shapes are still checked).
    pub fn new_unchecked(algebra: &Arc<Algebra>, dim: usize, action: Vec<Matrix>) -> Result<Self> {
        if action.len() != algebra.dim() {
            return Err(Error::DimensionMismatch(format!(
                "{} action matrices for an algebra of dimension {}",
                action.len(),
                algebra.dim()
            )));
        }
        if let Some(m) = action.iter().find(|m| m.rows() != dim || m.cols() != dim) {
            return Err(Error::DimensionMismatch(format!(
                "action matrix is {}×{}, module dimension {dim}",
                m.rows(),
                m.cols()
            )));
        }
        if let Some(m) = action.iter().find(|m| m.field() != algebra.field()) {
            return Err(Error::FieldMismatch(m.field().p(), algebra.field().p()));
        }
        Ok(Module(Arc::new(ModuleData {
            algebra: algebra.clone(),
            dim,
            action,
        })))
    }

    /// Build a module from the images of [`Algebra::generating_set`].
    pub fn from_generator_images(algebra: &Arc<Algebra>, dim: usize, images: &[Matrix]) -> Result<Self> {
        if images.iter().any(|m| m.rows() != dim || m.cols() != dim) {
            return Err(Error::DimensionMismatch("generator image shape".into()));
        }
        let action = if images.is_empty() {
            vec![Matrix::zeros(algebra.field(), dim, dim); algebra.dim()]
        } else {
            algebra.expand_action(images)?
        };
        Module::new(algebra, dim, action)
    }

    /// Build a module over a path algebra from a quiver representation:
    /// a vector space per vertex and a linear map per arrow.
    pub fn from_representation(
        algebra: &Arc<Algebra>,
        vertex_dims: &[usize],
        arrow_maps: &HashMap<String, Matrix>,
    ) -> Result<Self> {
        let pd = algebra
            .paths()
            .ok_or_else(|| Error::Unsupported("algebra has no quiver presentation".into()))?;
        let q = &pd.quiver;
        if vertex_dims.len() != q.vertices().len() {
            return Err(Error::DimensionMismatch(format!(
                "{} vertex dimensions for {} vertices",
                vertex_dims.len(),
                q.vertices().len()
            )));
        }
        let f = algebra.field();
        let mut offsets = Vec::with_capacity(vertex_dims.len());
        let mut dim = 0;
        for &d in vertex_dims {
            offsets.push(dim);
            dim += d;
        }
        let mut maps = Vec::with_capacity(q.arrows().len());
        for a in q.arrows() {
            let (rows, cols) = (vertex_dims[a.target], vertex_dims[a.source]);
            let m = match arrow_maps.get(&a.name) {
                Some(m) => m.clone(),
                None => Matrix::zeros(f, rows, cols),
            };
            if m.rows() != rows || m.cols() != cols {
                return Err(Error::DimensionMismatch(format!(
                    "arrow {} needs a {rows}×{cols} matrix, got {}×{}",
                    a.name,
                    m.rows(),
                    m.cols()
                )));
            }
            maps.push(m);
        }
        if let Some(name) = arrow_maps.keys().find(|n| q.arrow_index(n).is_none()) {
            return Err(Error::InvalidQuiver(format!("unknown arrow {name:?}")));
        }
        let action = pd
            .basis_paths
            .iter()
            .map(|p| {
                let block = p
                    .arrows
                    .iter()
                    .fold(Matrix::identity(f, vertex_dims[p.source]), |acc, &a| maps[a].mul(&acc));
                let mut m = Matrix::zeros(f, dim, dim);
                m.set_block(offsets[p.target(q)], offsets[p.source], &block);
                m
            })
            .collect();
        Module::new(algebra, dim, action)
    }

    /// Vertex dimensions and arrow maps in a basis adapted to the idempotents.
    pub fn to_representation(&self) -> Result<(Vec<usize>, HashMap<String, Matrix>)> {
        let a = self.algebra();
        let pd = a
            .paths()
            .ok_or_else(|| Error::Unsupported("algebra has no quiver presentation".into()))?;
        let blocks = self.vertex_blocks();
        let mut maps = HashMap::new();
        for (ai, arrow) in pd.quiver.arrows().iter().enumerate() {
            let idx = pd
                .basis_paths
                .iter()
                .position(|p| p.arrows == [ai])
                .ok_or_else(|| Error::Inconsistent(format!("arrow {} is not a basis path", arrow.name)))?;
            let (bs, _) = &blocks[arrow.source];
            let (_, lt) = &blocks[arrow.target];
            maps.insert(arrow.name.clone(), lt.mul(&self.action(idx).mul(bs)));
        }
        Ok((blocks.iter().map(|(b, _)| b.cols()).collect(), maps))
    }

    /// For each vertex `i`: a basis of `e_i·x` (as columns) and a left inverse.
    pub fn vertex_blocks(&self) -> Vec<(Matrix, Matrix)> {
        let a = self.algebra();
        a.idempotents()
            .iter()
            .map(|e| {
                let b = self.act(e).column_space();
                let cols = b.as_columns();
                let left = b.left_inverse();
                (cols, left)
            })
            .collect()
    }

    pub fn zero(algebra: &Arc<Algebra>) -> Self {
        Module::new_unchecked(algebra, 0, vec![Matrix::zeros(algebra.field(), 0, 0); algebra.dim()])
            .expect("shapes agree")
    }

    /// The algebra as a left module over itself.
    pub fn regular(algebra: &Arc<Algebra>) -> Self {
        let action = (0..algebra.dim()).map(|i| algebra.left_mult(i).clone()).collect();
        Module::new_unchecked(algebra, algebra.dim(), action).expect("shapes agree")
    }

    /// The indecomposable projective `P(i) = A·e_i`.
    pub fn projective(algebra: &Arc<Algebra>, i: usize) -> Self {
        let basis = algebra.right_mult_by(&algebra.idempotents()[i]).column_space();
        Module::regular(algebra)
            .submodule(&basis)
            .expect("A·e_i is a left ideal")
            .0
    }

    /// The simple top `S(i)` of `P(i)`.
    pub fn simple(algebra: &Arc<Algebra>, i: usize) -> Self {
        Module::projective(algebra, i).top().0
    }

    /// The indecomposable injective `I(i) = D(e_i·A)`.
    pub fn injective(algebra: &Arc<Algebra>, i: usize) -> Self {
        let op = Arc::new(algebra.opposite());
        let p_op = Module::projective(&op, i);
        dual_over(&p_op, algebra)
    }

    pub fn check_law(&self) -> Result<()> {
        let a = self.algebra();
        let f = a.field();
        let d = self.dim();
        if self.act(a.unit()) != Matrix::identity(f, d) {
            return Err(Error::NotAModule("the unit does not act as the identity".into()));
        }
        for i in 0..a.dim() {
            for j in 0..a.dim() {
                let lhs = self.action(i).mul(self.action(j));
                let rhs = self.act(a.product_of_basis(i, j));
                if lhs != rhs {
                    return Err(Error::NotAModule(format!(
                        "action({})·action({}) differs from the action of their product",
                        a.labels()[i],
                        a.labels()[j]
                    )));
                }
            }
        }
        Ok(())
    }

    #[inline]
    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.0.algebra
    }

    #[inline]
    pub fn field(&self) -> Fp {
        self.0.algebra.field()
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.0.dim
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    #[inline]
    pub fn action(&self, i: usize) -> &Matrix {
        &self.0.action[i]
    }

    pub fn actions(&self) -> &[Matrix] {
        &self.0.action
    }

    /// Matrix by which the algebra element `v` acts.
    pub fn act(&self, v: &[u32]) -> Matrix {
        Matrix::combination(self.field(), self.dim(), self.dim(), v, &self.0.action)
    }

    /// `dim e_i·x` for each vertex `i`.
    pub fn dim_vector(&self) -> Vec<usize> {
        self.algebra()
            .idempotents()
            .iter()
            .map(|e| self.act(e).rank())
            .collect()
    }

    /// Restrict a subspace-invariant family of actions to `basis`.
    pub fn submodule(&self, basis: &Basis) -> Result<(Module, Morphism)> {
        self.check_ambient(basis)?;
        let incl = basis.as_columns();
        let left = basis.left_inverse();
        let mut action = Vec::with_capacity(self.actions().len());
        for (k, m) in self.actions().iter().enumerate() {
            let image = m.mul(&incl);
            if image.columns().iter().any(|c| !basis.contains(c)) {
                return Err(Error::NotAModule(format!(
                    "subspace is not stable under {}",
                    self.algebra().labels()[k]
                )));
            }
            action.push(left.mul(&image));
        }
        let sub = Module::new_unchecked(self.algebra(), basis.len(), action)?;
        let morphism = Morphism::new_unchecked(sub.clone(), self.clone(), incl);
        Ok((sub, morphism))
    }

    /// Quotient by a submodule given by `basis`.
    pub fn quotient(&self, basis: &Basis) -> Result<(Module, Morphism)> {
        self.check_ambient(basis)?;
        let q = crate::linalg::quotient(self.field(), self.dim(), basis)?;
        let mut action = Vec::with_capacity(self.actions().len());
        for (k, m) in self.actions().iter().enumerate() {
            if basis.vectors().iter().any(|v| !basis.contains(&m.mul_vec(v))) {
                return Err(Error::NotAModule(format!(
                    "subspace is not stable under {}",
                    self.algebra().labels()[k]
                )));
            }
            action.push(q.projection.mul(&m.mul(&q.section)));
        }
        let quo = Module::new_unchecked(self.algebra(), q.dim, action)?;
        let morphism = Morphism::new_unchecked(self.clone(), quo.clone(), q.projection);
        Ok((quo, morphism))
    }

    fn check_ambient(&self, basis: &Basis) -> Result<()> {
        if basis.ambient_dim() != self.dim() {
            return Err(Error::DimensionMismatch(format!(
                "subspace of a {}-dimensional space inside a {}-dimensional module",
                basis.ambient_dim(),
                self.dim()
            )));
        }
        Ok(())
    }

    /// `rad x`: the span of the images of the radical.
    pub fn radical(&self) -> Basis {
        let a = self.algebra();
        let vectors = a
            .radical()
            .vectors()
            .iter()
            .flat_map(|r| self.act(r).columns())
            .collect::<Vec<_>>();
        Basis::span(self.field(), self.dim(), vectors)
    }

    /// `top x = x / rad x` with its projection.
    pub fn top(&self) -> (Module, Morphism) {
        self.quotient(&self.radical()).expect("rad x is a submodule")
    }

    /// `soc x`: vectors killed by the radical.
    pub fn socle(&self) -> Basis {
        let a = self.algebra();
        let f = self.field();
        let stacked = a
            .radical()
            .vectors()
            .iter()
            .map(|r| self.act(r))
            .fold(Matrix::zeros(f, 0, self.dim()), |acc, m| acc.vstack(&m));
        stacked.kernel()
    }

    /// Restriction along an algebra homomorphism `φ : B → A`, given by the
    /// matrix whose column `k` is `φ(b_k)` in the basis of `A`.
    pub fn restrict(&self, target: &Arc<Algebra>, phi: &Matrix) -> Result<Module> {
        if phi.rows() != self.algebra().dim() || phi.cols() != target.dim() {
            return Err(Error::DimensionMismatch("algebra homomorphism shape".into()));
        }
        let action = (0..target.dim()).map(|k| self.act(&phi.column(k))).collect();
        Module::new_unchecked(target, self.dim(), action)
    }

    /// The same module written in the basis given by the columns of `p`.
    pub fn change_basis(&self, p: &Matrix) -> Result<(Module, Morphism)> {
        let inv = p
            .inverse()
            .ok_or_else(|| Error::DimensionMismatch("base change is not invertible".into()))?;
        let action = self.actions().iter().map(|m| inv.mul(&m.mul(p))).collect();
        let y = Module::new_unchecked(self.algebra(), self.dim(), action)?;
        let iso = Morphism::new_unchecked(y.clone(), self.clone(), p.clone());
        Ok((y, iso))
    }
}

/// A module homomorphism; `matrix` is `target.dim × source.dim`.
#[derive(Clone, PartialEq, Eq)]
pub struct Morphism {
    source: Module,
    target: Module,
    matrix: Matrix,
}

impl fmt::Debug for Morphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Morphism({} → {}, {:?})",
            self.source.dim(),
            self.target.dim(),
            self.matrix
        )
    }
}

impl Morphism {
    /// Build a morphism, checking the intertwining condition.
    pub fn new(source: Module, target: Module, matrix: Matrix) -> Result<Self> {
        if !same_algebra(source.algebra(), target.algebra()) {
            return Err(Error::AlgebraMismatch);
        }
        if matrix.rows() != target.dim() || matrix.cols() != source.dim() {
            return Err(Error::DimensionMismatch(format!(
                "{}×{} matrix for a map from dimension {} to {}",
                matrix.rows(),
                matrix.cols(),
                source.dim(),
                target.dim()
            )));
        }
        for k in 0..source.algebra().dim() {
            if matrix.mul(source.action(k)) != target.action(k).mul(&matrix) {
                return Err(Error::NotAMorphism(format!(
                    "fails to commute with {}",
                    source.algebra().labels()[k]
                )));
            }
        }
        Ok(Morphism { source, target, matrix })
    }

    pub fn new_unchecked(source: Module, target: Module, matrix: Matrix) -> Self {
        debug_assert_eq!(matrix.rows(), target.dim());
        debug_assert_eq!(matrix.cols(), source.dim());
        Morphism { source, target, matrix }
    }

    pub fn identity(x: &Module) -> Self {
        Morphism::new_unchecked(x.clone(), x.clone(), Matrix::identity(x.field(), x.dim()))
    }

    pub fn zero(x: &Module, y: &Module) -> Self {
        Morphism::new_unchecked(x.clone(), y.clone(), Matrix::zeros(x.field(), y.dim(), x.dim()))
    }

    pub fn source(&self) -> &Module {
        &self.source
    }

    pub fn target(&self) -> &Module {
        &self.target
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.is_zero()
    }

    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }

    pub fn is_injective(&self) -> bool {
        self.rank() == self.source.dim()
    }

    pub fn is_surjective(&self) -> bool {
        self.rank() == self.target.dim()
    }

    pub fn is_iso(&self) -> bool {
        self.source.dim() == self.target.dim() && self.is_injective()
    }

    /// `self` followed by `g`, i.e. `g ∘ self`.
    pub fn then(&self, g: &Morphism) -> Result<Morphism> {
        compose(g, self)
    }

    pub fn add(&self, other: &Morphism) -> Result<Morphism> {
        self.check_parallel(other)?;
        Ok(Morphism::new_unchecked(
            self.source.clone(),
            self.target.clone(),
            self.matrix.add(&other.matrix),
        ))
    }

    pub fn scale(&self, c: u32) -> Morphism {
        Morphism::new_unchecked(self.source.clone(), self.target.clone(), self.matrix.scale(c))
    }

    fn check_parallel(&self, other: &Morphism) -> Result<()> {
        if self.source.dim() != other.source.dim() || self.target.dim() != other.target.dim() {
            return Err(Error::DimensionMismatch("morphisms are not parallel".into()));
        }
        Ok(())
    }

    /// `ker f` with its inclusion into the source.
    pub fn kernel(&self) -> (Module, Morphism) {
        self.source
            .submodule(&self.matrix.kernel())
            .expect("kernels are submodules")
    }

    /// `coker f` with the projection from the target.
    pub fn cokernel(&self) -> (Module, Morphism) {
        self.target
            .quotient(&self.matrix.column_space())
            .expect("images are submodules")
    }

    /// `im f` with the factorization `source ↠ im f ↪ target`.
    pub fn image(&self) -> (Module, Morphism, Morphism) {
        let basis = self.matrix.column_space();
        let (im, incl) = self.target.submodule(&basis).expect("images are submodules");
        let corestrict = basis.left_inverse().mul(&self.matrix);
        let onto = Morphism::new_unchecked(self.source.clone(), im.clone(), corestrict);
        (im, onto, incl)
    }
}

/// `g ∘ f`.
pub fn compose(g: &Morphism, f: &Morphism) -> Result<Morphism> {
    if f.target.dim() != g.source.dim() || !same_algebra(f.target.algebra(), g.source.algebra()) {
        return Err(Error::DimensionMismatch("morphisms are not composable".into()));
    }
    Ok(Morphism::new_unchecked(
        f.source.clone(),
        g.target.clone(),
        g.matrix.mul(&f.matrix),
    ))
}

/// Linear parametrization of `Hom(x, y)`: each vector of unknowns gives a
/// matrix `Σ u_k · E_k`.
struct HomSystem {
    units: Vec<Matrix>,
}

impl HomSystem {
    /// Maps that respect the vertex decomposition.
    fn vertex_adapted(x: &Module, y: &Module) -> HomSystem {
        let f = x.field();
        let bx = x.vertex_blocks();
        let by = y.vertex_blocks();
        let mut units = Vec::new();
        for (i, ((_, lx), (cy, _))) in bx.iter().zip(&by).enumerate() {
            let e = &x.algebra().idempotents()[i];
            let px = lx.mul(&x.act(e));
            for r in 0..cy.cols() {
                let col = cy.column(r);
                for c in 0..px.rows() {
                    let row = px.row(c);
                    units.push(Matrix::from_fn(f, y.dim(), x.dim(), |a, b| f.mul(col[a], row[b])));
                }
            }
        }
        HomSystem { units }
    }
}

/// Basis of `Hom(x, y)`.
pub fn hom_basis(x: &Module, y: &Module) -> Result<Vec<Morphism>> {
    Ok(hom_matrices(x, y)?
        .into_iter()
        .map(|m| Morphism::new_unchecked(x.clone(), y.clone(), m))
        .collect())
}

/// `dim Hom(x, y)`.
pub fn hom_dim(x: &Module, y: &Module) -> Result<usize> {
    Ok(hom_matrices(x, y)?.len())
}

/// Matrices of a basis of `Hom(x, y)`.
pub fn hom_matrices(x: &Module, y: &Module) -> Result<Vec<Matrix>> {
    if !same_algebra(x.algebra(), y.algebra()) {
        return Err(Error::AlgebraMismatch);
    }
    let f = x.field();
    if x.dim() == 0 || y.dim() == 0 {
        return Ok(Vec::new());
    }
    let sys = HomSystem::vertex_adapted(x, y);
    let u = sys.units.len();
    if u == 0 {
        return Ok(Vec::new());
    }
    let alg = x.algebra();
    let mut equations = Matrix::zeros(f, 0, u);
    for g in alg.generators() {
        let xg = x.act(&g.element);
        let yg = y.act(&g.element);
        let cols: Vec<Vec<u32>> = sys
            .units
            .iter()
            .map(|e| e.mul(&xg).sub(&yg.mul(e)).data().to_vec())
            .collect();
        let block = Matrix::from_columns(f, y.dim() * x.dim(), &cols);
        equations = equations.vstack(&block);
        let reduced = equations.echelon();
        let rank = reduced.pivots.len();
        equations = reduced.reduced.block(0, 0, rank, u);
    }
    let kernel = equations.kernel();
    Ok(kernel
        .vectors()
        .iter()
        .map(|v| Matrix::combination(f, y.dim(), x.dim(), v, &sys.units))
        .collect())
}

/// A biproduct with its structure maps.
#[derive(Clone, Debug)]
pub struct DirectSum {
    pub module: Module,
    pub injections: Vec<Morphism>,
    pub projections: Vec<Morphism>,
}

pub fn direct_sum(xs: &[Module]) -> Result<DirectSum> {
    let first = xs
        .first()
        .ok_or_else(|| Error::DimensionMismatch("direct sum of no modules needs an algebra".into()))?;
    direct_sum_over(first.algebra(), xs)
}

/// Direct sum over an explicit algebra (allows the empty sum).
pub fn direct_sum_over(algebra: &Arc<Algebra>, xs: &[Module]) -> Result<DirectSum> {
    if xs.iter().any(|x| !same_algebra(x.algebra(), algebra)) {
        return Err(Error::AlgebraMismatch);
    }
    let f = algebra.field();
    let dim: usize = xs.iter().map(Module::dim).sum();
    let action = (0..algebra.dim())
        .map(|k| {
            let blocks: Vec<Matrix> = xs.iter().map(|x| x.action(k).clone()).collect();
            Matrix::block_diag(f, &blocks)
        })
        .collect();
    let module = Module::new_unchecked(algebra, dim, action)?;
    let mut injections = Vec::with_capacity(xs.len());
    let mut projections = Vec::with_capacity(xs.len());
    let mut offset = 0;
    for x in xs {
        let mut inj = Matrix::zeros(f, dim, x.dim());
        inj.set_block(offset, 0, &Matrix::identity(f, x.dim()));
        projections.push(Morphism::new_unchecked(module.clone(), x.clone(), inj.transpose()));
        injections.push(Morphism::new_unchecked(x.clone(), module.clone(), inj));
        offset += x.dim();
    }
    Ok(DirectSum {
        module,
        injections,
        projections,
    })
}

/// `x^n`.
pub fn power(x: &Module, n: usize) -> DirectSum {
    direct_sum_over(x.algebra(), &vec![x.clone(); n]).expect("same algebra")
}

/// The map `⊕ sources → target` with the given components.
pub fn sum_map(algebra: &Arc<Algebra>, maps: &[Morphism], target: &Module) -> Result<Morphism> {
    let sources: Vec<Module> = maps.iter().map(|m| m.source().clone()).collect();
    let ds = direct_sum_over(algebra, &sources)?;
    let f = algebra.field();
    let matrix = maps
        .iter()
        .fold(Matrix::zeros(f, target.dim(), 0), |acc, m| acc.hstack(m.matrix()));
    Ok(Morphism::new_unchecked(ds.module, target.clone(), matrix))
}

/// The map `source → ⊕ targets` with the given components.
pub fn product_map(algebra: &Arc<Algebra>, source: &Module, maps: &[Morphism]) -> Result<Morphism> {
    let targets: Vec<Module> = maps.iter().map(|m| m.target().clone()).collect();
    let ds = direct_sum_over(algebra, &targets)?;
    let f = algebra.field();
    let matrix = maps
        .iter()
        .fold(Matrix::zeros(f, 0, source.dim()), |acc, m| acc.vstack(m.matrix()));
    Ok(Morphism::new_unchecked(source.clone(), ds.module, matrix))
}
