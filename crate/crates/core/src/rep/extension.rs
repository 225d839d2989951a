use std::sync::Arc;

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::linalg::{Basis, Matrix};

use super::{hom_matrices, same_algebra, Module, Morphism};

/// `D(x) = Hom_k(x, k)` as a module over the opposite algebra.
pub fn dual(x: &Module) -> Module {
    let op = Arc::new(x.algebra().opposite());
    dual_over(x, &op)
}

/// `D(x)` over a given handle for the opposite algebra.
pub fn dual_over(x: &Module, op: &Arc<Algebra>) -> Module {
    let action = x.actions().iter().map(Matrix::transpose).collect();
    Module::new_unchecked(op, x.dim(), action).expect("same basis size")
}

/// The trace of `x` in `l`: the sum of all images of maps `x → l`, and
/// whether it is all of `l` (that is, whether `l ∈ Gen(x)`).
pub fn trace_of_in(x: &Module, l: &Module) -> Result<(Basis, bool)> {
    let maps = hom_matrices(x, l)?;
    let f = l.field();
    let trace = Basis::span(f, l.dim(), maps.iter().flat_map(Matrix::columns));
    let all = trace.len() == l.dim();
    Ok((trace, all))
}

/// Corner blocks of an extension, one `dim x × dim z` matrix per radical
/// generator of the algebra (see [`Algebra::generators`]).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cocycle {
    pub corrections: Vec<Matrix>,
}

impl Cocycle {
    pub fn zero(z: &Module, x: &Module) -> Self {
        let n = z.algebra().generators().len();
        Cocycle {
            corrections: vec![Matrix::zeros(z.field(), x.dim(), z.dim()); n],
        }
    }

    pub fn is_zero(&self) -> bool {
        self.corrections.iter().all(Matrix::is_zero)
    }

    fn combination(basis: &[Cocycle], coeffs: &[u32], template: &Cocycle) -> Cocycle {
        let corrections = template
            .corrections
            .iter()
            .enumerate()
            .map(|(g, t)| {
                let mats: Vec<Matrix> = basis.iter().map(|c| c.corrections[g].clone()).collect();
                Matrix::combination(t.field(), t.rows(), t.cols(), coeffs, &mats)
            })
            .collect();
        Cocycle { corrections }
    }
}

/// A short exact sequence `0 → x → e → z → 0`.
#[derive(Clone, Debug)]
pub struct Extension {
    pub module: Module,
    pub inclusion: Morphism,
    pub projection: Morphism,
}

fn extension_images(z: &Module, x: &Module, cocycle: &Cocycle) -> Vec<Matrix> {
    let a = z.algebra();
    let f = a.field();
    let n = x.dim() + z.dim();
    let mut images = Vec::new();
    for e in a.idempotents() {
        images.push(Matrix::block_diag(f, &[x.act(e), z.act(e)]));
    }
    for (g, c) in a.generators().iter().zip(&cocycle.corrections) {
        let mut m = Matrix::block_diag(f, &[x.act(&g.element), z.act(&g.element)]);
        m.set_block(0, x.dim(), c);
        debug_assert_eq!(m.rows(), n);
        images.push(m);
    }
    images
}

/// The extension of `z` by `x` whose action has `cocycle` in its corner.
pub fn build_extension(z: &Module, x: &Module, cocycle: &Cocycle) -> Result<Extension> {
    if !same_algebra(z.algebra(), x.algebra()) {
        return Err(Error::AlgebraMismatch);
    }
    let a = z.algebra();
    if cocycle.corrections.len() != a.generators().len()
        || cocycle
            .corrections
            .iter()
            .any(|c| c.rows() != x.dim() || c.cols() != z.dim())
    {
        return Err(Error::InvalidCocycle("corrections have the wrong shape".into()));
    }
    let n = x.dim() + z.dim();
    let images = extension_images(z, x, cocycle);
    let action = a.expand_action(&images)?;
    let module = Module::new(a, n, action).map_err(|e| match e {
        Error::NotAModule(detail) => Error::InvalidCocycle(detail),
        other => other,
    })?;
    let f = a.field();
    let mut inc = Matrix::zeros(f, n, x.dim());
    inc.set_block(0, 0, &Matrix::identity(f, x.dim()));
    let mut proj = Matrix::zeros(f, z.dim(), n);
    proj.set_block(0, x.dim(), &Matrix::identity(f, z.dim()));
    Ok(Extension {
        inclusion: Morphism::new_unchecked(x.clone(), module.clone(), inc),
        projection: Morphism::new_unchecked(module.clone(), z.clone(), proj),
        module,
    })
}

/// A basis of all cocycles (corner data giving a module), not reduced
/// modulo coboundaries.
pub fn cocycle_space(z: &Module, x: &Module) -> Result<Vec<Cocycle>> {
    if !same_algebra(z.algebra(), x.algebra()) {
        return Err(Error::AlgebraMismatch);
    }
    let a = z.algebra();
    let f = a.field();
    if z.is_zero() || x.is_zero() || a.generators().is_empty() {
        return Ok(Vec::new());
    }
    let bx = x.vertex_blocks();
    let bz = z.vertex_blocks();
    // Unknown corners for g ∈ e_t·rad·e_s live in Hom_k(e_s z, e_t x).
    let mut units: Vec<Cocycle> = Vec::new();
    let zero = Cocycle::zero(z, x);
    for (gi, g) in a.generators().iter().enumerate() {
        let (cx, _) = &bx[g.target];
        let (_, lz) = &bz[g.source];
        let pz = lz.mul(&z.act(&a.idempotents()[g.source]));
        for r in 0..cx.cols() {
            let col = cx.column(r);
            for c in 0..pz.rows() {
                let row = pz.row(c);
                let mut u = zero.clone();
                u.corrections[gi] = Matrix::from_fn(f, x.dim(), z.dim(), |i, j| f.mul(col[i], row[j]));
                units.push(u);
            }
        }
    }
    if units.is_empty() {
        return Ok(Vec::new());
    }
    let n = x.dim() + z.dim();
    let mut residuals = Vec::with_capacity(units.len());
    for u in &units {
        let action = a.expand_action(&extension_images(z, x, u))?;
        let mut res = Vec::new();
        for i in 0..a.dim() {
            for j in 0..a.dim() {
                let lhs = action[i].mul(&action[j]);
                let rhs = Matrix::combination(f, n, n, a.product_of_basis(i, j), &action);
                res.extend_from_slice(lhs.sub(&rhs).block(0, x.dim(), x.dim(), z.dim()).data());
            }
        }
        residuals.push(res);
    }
    let system = Matrix::from_columns(f, residuals[0].len(), &residuals);
    let kernel = system.kernel();
    Ok(kernel
        .vectors()
        .iter()
        .map(|v| Cocycle::combination(&units, v, &zero))
        .collect())
}
