//! θ-extensions `T = R ⋉_θ M` and the functors of the cleft extension
//! `(mod R, mod T, i, e, l)`.
//!
//! The basis of `T` lists the basis of `R` first, then the basis of `M`.
//! A `T`-module is the same thing as a pair `(X, α)` of an `R`-module and an
//! `R`-map `α : M ⊗_R X → X` with `α∘(1⊗α) = α∘(θ⊗1)`.

use std::sync::Arc;

use crate::algebra::{product, Algebra, AlgebraParts, ValidationReport};
use crate::error::{Error, Result};
use crate::homology::{Presentation, ProjMap, Projective};
use crate::linalg::{quotient, Basis, Matrix};
use crate::rep::{find_isomorphism, same_algebra, tensor, Bimodule, IsoBudget, Module, Morphism, Tensor, ThetaData};
use crate::silting::has_minimal_terms;

#[derive(Clone, Debug)]
pub struct CleftInstance {
    pub name: String,
    pub base: Arc<Algebra>,
    pub theta: ThetaData,
    pub total: Arc<Algebra>,
    /// `dim T × dim R`, `r ↦ (r, 0)`.
    pub injection: Matrix,
    /// `dim R × dim T`, `(r, m) ↦ r`.
    pub projection: Matrix,
    /// Set for tensor rings `T_R(N)`.
    pub tensor: Option<TensorRingData>,
}

/// The bimodule `N` of a tensor ring and its nonzero tensor powers.
#[derive(Clone, Debug)]
pub struct TensorRingData {
    pub n: Bimodule,
    pub nilpotency: usize,
    /// `N^{⊗i}` for `1 ≤ i < nilpotency`.
    pub powers: Vec<Bimodule>,
}

fn zero_bimodule(r: &Arc<Algebra>) -> Bimodule {
    let f = r.field();
    let z = vec![Matrix::zeros(f, 0, 0); r.dim()];
    Bimodule::new(r, r, 0, z.clone(), z).expect("zero bimodule")
}

/// The product `(r, m)·(r', m')` of two basis elements by the defining formula.
fn defining_product(r: &Algebra, th: &ThetaData, i: usize, j: usize) -> Vec<u32> {
    let dr = r.dim();
    let dm = th.dim();
    let b = &th.bimodule;
    let mut out = vec![0; dr + dm];
    match (i < dr, j < dr) {
        (true, true) => out[..dr].copy_from_slice(r.product_of_basis(i, j)),
        (true, false) => out[dr..].copy_from_slice(&b.left_action(i).column(j - dr)),
        (false, true) => out[dr..].copy_from_slice(&b.right_action(j).column(i - dr)),
        (false, false) => out[dr..].copy_from_slice(&th.product_of_basis(i - dr, j - dr)),
    }
    out
}

/// `R ⋉_θ M`.
pub fn theta_extension(name: &str, r: &Arc<Algebra>, th: ThetaData) -> Result<CleftInstance> {
    let b = &th.bimodule;
    if !same_algebra(b.left_algebra(), r) || !same_algebra(b.right_algebra(), r) {
        return Err(Error::AlgebraMismatch);
    }
    th.validate()?;
    let f = r.field();
    let dr = r.dim();
    let dm = th.dim();
    let dt = dr + dm;
    let embed = |v: &[u32]| {
        let mut out = vec![0; dt];
        out[..dr].copy_from_slice(v);
        out
    };
    let mult = (0..dt)
        .map(|i| (0..dt).map(|j| defining_product(r, &th, i, j)).collect())
        .collect();
    let mut labels = r.labels().to_vec();
    for k in 0..dm {
        let mut l = format!("m{}", k + 1);
        while labels.contains(&l) {
            l.push('\'');
        }
        labels.push(l);
    }
    let mut radical: Vec<Vec<u32>> = r.radical().vectors().iter().map(|v| embed(v)).collect();
    radical.extend((0..dm).map(|k| f.unit_vec(dt, dr + k)));
    let total = Algebra::from_parts(AlgebraParts {
        field: f,
        labels,
        mult,
        unit: embed(r.unit()),
        idempotents: r.idempotents().iter().map(|e| embed(e)).collect(),
        vertex_labels: r.vertex_labels().to_vec(),
        radical,
        paths: None,
    })?;
    let injection = Matrix::from_fn(f, dt, dr, |i, j| u32::from(i == j));
    Ok(CleftInstance {
        name: name.to_string(),
        base: r.clone(),
        theta: th,
        total: Arc::new(total),
        projection: injection.transpose(),
        injection,
        tensor: None,
    })
}

/// `R ⋉ M`, the θ-extension with `θ = 0`.
pub fn trivial_extension(name: &str, r: &Arc<Algebra>, m: Bimodule) -> Result<CleftInstance> {
    theta_extension(name, r, ThetaData::zero(m))
}

/// `T_R(N) ≅ R ⋉_θ (N ⊕ ⋯ ⊕ N^{⊗(m-1)})` for an `m`-nilpotent `N`.
pub fn tensor_ring(name: &str, r: &Arc<Algebra>, n: &Bimodule, m: usize) -> Result<CleftInstance> {
    if m == 0 {
        return Err(Error::InvalidBimodule("nilpotency index must be positive".into()));
    }
    let f = r.field();
    let power_m = if n.dim() == 0 {
        0
    } else {
        n.tensor_power(m)?.bimodule.dim()
    };
    if power_m != 0 {
        return Err(Error::InvalidBimodule(format!(
            "N^{{⊗{m}}} has dimension {power_m}, not 0"
        )));
    }
    let powers = (1..m).map(|i| n.tensor_power(i)).collect::<Result<Vec<_>>>()?;
    let parts: Vec<Bimodule> = powers.iter().map(|p| p.bimodule.clone()).collect();
    let big = if parts.is_empty() {
        zero_bimodule(r)
    } else {
        Bimodule::direct_sum(&parts)?
    };
    let d = big.dim();
    let mut offsets = Vec::with_capacity(parts.len());
    let mut acc = 0;
    for p in &parts {
        offsets.push(acc);
        acc += p.dim();
    }
    let mut theta = Matrix::zeros(f, d, d * d);
    for (k, pk) in powers.iter().enumerate() {
        for (l, pl) in powers.iter().enumerate() {
            // Block k holds N^{⊗(k+1)}; the product lands in N^{⊗(k+l+2)}.
            let target = k + l + 1;
            if target >= powers.len() {
                continue;
            }
            let pt = &powers[target];
            for u in 0..pk.bimodule.dim() {
                for v in 0..pl.bimodule.dim() {
                    let word = f.vec_kron(&pk.section.column(u), &pl.section.column(v));
                    let image = pt.projection.mul_vec(&word);
                    let col = (offsets[k] + u) * d + offsets[l] + v;
                    for (w, &c) in image.iter().enumerate() {
                        theta.set(offsets[target] + w, col, c);
                    }
                }
            }
        }
    }
    let th = ThetaData::from_matrix(big, theta, Some(m))?;
    let mut c = theta_extension(name, r, th)?;
    c.tensor = Some(TensorRingData {
        n: n.clone(),
        nilpotency: m,
        powers: parts,
    });
    Ok(c)
}

/// `[[A, M], [0, B]]` realized as the trivial extension of `A × B` by `M`.
pub fn triangular_matrix(name: &str, a: &Arc<Algebra>, b: &Arc<Algebra>, m: &Bimodule) -> Result<CleftInstance> {
    if !same_algebra(m.left_algebra(), a) || !same_algebra(m.right_algebra(), b) {
        return Err(Error::AlgebraMismatch);
    }
    let p = Arc::new(product(a, b)?);
    let f = p.field();
    let (da, db) = (a.dim(), b.dim());
    let zero = Matrix::zeros(f, m.dim(), m.dim());
    let left = (0..da)
        .map(|k| m.left_action(k).clone())
        .chain((0..db).map(|_| zero.clone()))
        .collect();
    let right = (0..da)
        .map(|_| zero.clone())
        .chain((0..db).map(|k| m.right_action(k).clone()))
        .collect();
    let bimodule = Bimodule::new(&p, &p, m.dim(), left, right)?;
    trivial_extension(name, &p, bimodule)
}

/// A `T`-module seen as a pair `(X, α)`.
#[derive(Clone, Debug)]
pub struct PairModule {
    pub x: Module,
    /// `M ⊗_R X` with its presentation as a quotient of `M ⊗_k X`.
    pub tensor: Tensor,
    pub alpha: Morphism,
}

impl PairModule {
    /// `α` precomposed with `M ⊗_k X ↠ M ⊗_R X`.
    fn alpha_free(&self) -> Matrix {
        self.alpha.matrix().mul(&self.tensor.projection)
    }

    /// `α∘(1⊗α) = α∘(θ⊗1)` on `M ⊗ M ⊗ X`.
    pub fn check_law(&self, c: &CleftInstance) -> Result<()> {
        let f = self.x.field();
        let a = self.alpha_free();
        let id_m = Matrix::identity(f, c.theta.dim());
        let id_x = Matrix::identity(f, self.x.dim());
        let lhs = a.mul(&id_m.kron(&a));
        let rhs = a.mul(&c.theta.theta.kron(&id_x));
        if lhs != rhs {
            return Err(Error::PairLaw("α∘(1⊗α) differs from α∘(θ⊗1)".into()));
        }
        Ok(())
    }

    /// The `T`-module with `(r, m)·x = r·x + α(m ⊗ x)`.
    pub fn module(&self, c: &CleftInstance) -> Result<Module> {
        let dx = self.x.dim();
        let a = self.alpha_free();
        let mut action: Vec<Matrix> = self.x.actions().to_vec();
        for j in 0..c.theta.dim() {
            action.push(a.block(0, j * dx, dx, dx));
        }
        Module::new(&c.total, dx, action)
    }
}

impl CleftInstance {
    pub fn m(&self) -> &Bimodule {
        &self.theta.bimodule
    }

    /// `R^op ⋉_{θ'} M^op` with `θ'(m ⊗ m') = θ(m' ⊗ m)`; its total algebra is `T^op`.
    pub fn opposite(&self) -> Result<CleftInstance> {
        let r_op = Arc::new(self.base.opposite());
        let m_op = self.m().opposite(&r_op, &r_op);
        let d = self.theta.dim();
        let theta = &self.theta.theta;
        let swapped = Matrix::from_fn(r_op.field(), d, d * d, |k, c| theta.get(k, (c % d) * d + c / d));
        let th = ThetaData::from_matrix(m_op, swapped, self.theta.nilpotency_index)?;
        theta_extension(&format!("{} (opposite)", self.name), &r_op, th)
    }

    /// Every structural invariant of the instance; never aborts.
    pub fn validate(&self) -> ValidationReport {
        let mut report = ValidationReport::default();
        report.push("theta", self.theta.validate().err().map(|e| e.to_string()));
        let r = &self.base;
        let t = &self.total;
        let dr = r.dim();
        let dm = self.theta.dim();
        let shape_ok = t.dim() == dr + dm;
        report.push(
            "dimension",
            (!shape_ok).then(|| format!("dim T = {}, dim R + dim M = {}", t.dim(), dr + dm)),
        );
        if !shape_ok {
            return report;
        }
        let mut witness = None;
        'law: for i in 0..t.dim() {
            for j in 0..t.dim() {
                if t.product_of_basis(i, j) != defining_product(r, &self.theta, i, j).as_slice() {
                    witness = Some(format!("({}, {})", t.labels()[i], t.labels()[j]));
                    break 'law;
                }
            }
        }
        report.push("multiplication law", witness);
        let f = r.field();
        let pi = self.projection.mul(&self.injection);
        report.push(
            "projection after injection",
            (pi != Matrix::identity(f, dr)).then(|| "not the identity on R".to_string()),
        );
        let units: Vec<Vec<u32>> = (dr..dr + dm).map(|k| f.unit_vec(dr + dm, k)).collect();
        let m_basis = Basis::canonical_span(f, dr + dm, &units);
        let mut witness = None;
        'ideal: for v in m_basis.vectors() {
            for k in 0..t.dim() {
                let b = t.basis_vector(k);
                if !m_basis.contains(&t.mul(&b, v)) || !m_basis.contains(&t.mul(v, &b)) {
                    witness = Some(format!("{} times an element of M leaves M", t.labels()[k]));
                    break 'ideal;
                }
            }
        }
        report.push("M is an ideal", witness);
        if let Some(m) = self.theta.nilpotency_index {
            let mut power = m_basis.clone();
            for _ in 1..m {
                let vs: Vec<Vec<u32>> = power
                    .vectors()
                    .iter()
                    .flat_map(|u| m_basis.vectors().iter().map(move |v| (u, v)))
                    .map(|(u, v)| t.mul(u, v))
                    .collect();
                power = Basis::span(f, t.dim(), vs);
            }
            report.push(
                "M is nilpotent",
                (!power.is_empty()).then(|| format!("M^{m} is nonzero")),
            );
        }
        let expected = Basis::span(
            f,
            t.dim(),
            r.radical()
                .vectors()
                .iter()
                .map(|v| self.injection.mul_vec(v))
                .chain(m_basis.vectors().iter().cloned()),
        );
        let same = expected.len() == t.radical().len() && expected.contains_all(t.radical());
        report.push(
            "radical splits",
            (!same).then(|| "rad T differs from rad R ⊕ M".to_string()),
        );
        report.merge(t.validate());
        report
    }

    fn check_base(&self, y: &Module) -> Result<()> {
        if !same_algebra(y.algebra(), &self.base) {
            return Err(Error::AlgebraMismatch);
        }
        Ok(())
    }

    fn check_total(&self, z: &Module) -> Result<()> {
        if !same_algebra(z.algebra(), &self.total) {
            return Err(Error::AlgebraMismatch);
        }
        Ok(())
    }

    /// `F(y) = M ⊗_R y`.
    pub fn functor_f(&self, y: &Module) -> Result<Module> {
        self.check_base(y)?;
        Ok(tensor(self.m(), y)?.module)
    }

    /// `F'(y) = Hom_R(M, y)` with `(r·φ)(m) = φ(m·r)`.
    pub fn functor_f_prime(&self, y: &Module) -> Result<Module> {
        self.check_base(y)?;
        let m = self.m();
        let f = y.field();
        let (dy, dm) = (y.dim(), m.dim());
        let n = dy * dm;
        let units: Vec<Matrix> = (0..n)
            .map(|u| Matrix::from_fn(f, dy, dm, |i, j| u32::from(i * dm + j == u)))
            .collect();
        let mut equations = Matrix::zeros(f, 0, n);
        for g in self.base.generating_set() {
            let (mg, yg) = (m.left_act(&g), y.act(&g));
            let cols: Vec<Vec<u32>> = units
                .iter()
                .map(|phi| phi.mul(&mg).sub(&yg.mul(phi)).data().to_vec())
                .collect();
            equations = equations.vstack(&Matrix::from_columns(f, n, &cols));
        }
        let homs = equations.kernel();
        let left = homs.left_inverse();
        let action = (0..self.base.dim())
            .map(|k| {
                let cols: Vec<Vec<u32>> = homs
                    .vectors()
                    .iter()
                    .map(|v| {
                        let phi = Matrix::from_vec(f, dy, dm, v.clone());
                        left.mul_vec(phi.mul(m.right_action(k)).data())
                    })
                    .collect();
                Matrix::from_columns(f, homs.len(), &cols)
            })
            .collect();
        Module::new(&self.base, homs.len(), action)
    }

    /// `l(y)` on `y ⊕ M⊗_R y` with `(r, m)·(y, w) = (r·y, r·w + m⊗y + θ(m⊗w))`.
    pub fn functor_l(&self, y: &Module) -> Result<Module> {
        self.check_base(y)?;
        let t = tensor(self.m(), y)?;
        let f = y.field();
        let (dy, dw) = (y.dim(), t.module.dim());
        let dm = self.theta.dim();
        let id_y = Matrix::identity(f, dy);
        let mut action = Vec::with_capacity(self.total.dim());
        for k in 0..self.base.dim() {
            action.push(Matrix::block_diag(
                f,
                &[y.action(k).clone(), t.module.action(k).clone()],
            ));
        }
        for j in 0..dm {
            let mut m = Matrix::zeros(f, dy + dw, dy + dw);
            let unit = Matrix::from_columns(f, dm, &[f.unit_vec(dm, j)]);
            let lower_left = t.projection.mul(&unit.kron(&id_y));
            let theta_j = self.theta.theta.block(0, j * dm, dm, dm);
            let lower_right = t.projection.mul(&theta_j.kron(&id_y).mul(&t.section));
            m.set_block(dy, 0, &lower_left);
            m.set_block(dy, dy, &lower_right);
            action.push(m);
        }
        Module::new(&self.total, dy + dw, action)
    }

    /// `l(g) = g ⊕ (M ⊗ g) : l(y) → l(y')`.
    pub fn functor_l_map(&self, g: &Morphism) -> Result<Morphism> {
        self.check_base(g.source())?;
        let src = tensor(self.m(), g.source())?;
        let tgt = tensor(self.m(), g.target())?;
        let mg = src.map_to(&tgt, self.m(), g);
        let matrix = Matrix::block_diag(g.source().field(), &[g.matrix().clone(), mg.matrix().clone()]);
        Morphism::new(self.functor_l(g.source())?, self.functor_l(g.target())?, matrix)
    }

    /// `e(z)` with the `M`-part of the action read off as `α`.
    pub fn functor_e(&self, z: &Module) -> Result<PairModule> {
        self.check_total(z)?;
        let dr = self.base.dim();
        let dz = z.dim();
        let f = z.field();
        let x = Module::new(&self.base, dz, z.actions()[..dr].to_vec())?;
        let t = tensor(self.m(), &x)?;
        let free = z.actions()[dr..]
            .iter()
            .fold(Matrix::zeros(f, dz, 0), |acc, m| acc.hstack(m));
        let alpha = free.mul(&t.section);
        if alpha.mul(&t.projection) != free {
            return Err(Error::PairLaw("the M-action is not balanced over R".into()));
        }
        let pm = PairModule {
            alpha: Morphism::new(t.module.clone(), x.clone(), alpha)?,
            tensor: t,
            x,
        };
        pm.check_law(self)?;
        Ok(pm)
    }

    /// `e(g)`: the same linear map between the underlying `R`-modules.
    pub fn functor_e_map(&self, g: &Morphism) -> Result<Morphism> {
        let src = self.functor_e(g.source())?.x;
        let tgt = self.functor_e(g.target())?.x;
        Morphism::new(src, tgt, g.matrix().clone())
    }

    /// `i(y) = (y, 0)`.
    pub fn functor_i(&self, y: &Module) -> Result<PairModule> {
        self.check_base(y)?;
        let t = tensor(self.m(), y)?;
        Ok(PairModule {
            alpha: Morphism::zero(&t.module, y),
            tensor: t,
            x: y.clone(),
        })
    }

    /// `q(X, α) = Coker α`.
    pub fn functor_q(&self, pm: &PairModule) -> Module {
        pm.alpha.cokernel().0
    }

    /// `q` on a map of `T`-modules.
    pub fn functor_q_map(&self, g: &Morphism) -> Result<Morphism> {
        let src = self.functor_e(g.source())?;
        let tgt = self.functor_e(g.target())?;
        let f = g.source().field();
        let qs = quotient(f, src.x.dim(), &src.alpha.matrix().column_space())?;
        let qt = quotient(f, tgt.x.dim(), &tgt.alpha.matrix().column_space())?;
        let matrix = qt.projection.mul(&g.matrix().mul(&qs.section));
        Morphism::new(self.functor_q(&src), self.functor_q(&tgt), matrix)
    }

    /// The counit `μ : l(e(A)) → A`, `(x, m⊗x') ↦ x + α(m⊗x')`.
    pub fn counit_mu(&self, z: &Module) -> Result<Morphism> {
        let pm = self.functor_e(z)?;
        let lx = self.functor_l(&pm.x)?;
        let f = z.field();
        let matrix = Matrix::identity(f, z.dim()).hstack(pm.alpha.matrix());
        let mu = Morphism::new(lx, z.clone(), matrix)?;
        if !mu.is_surjective() {
            return Err(Error::Inconsistent("counit is not surjective".into()));
        }
        Ok(mu)
    }

    /// The counit `η : q(i(y)) → y` of `(q, i)`, an isomorphism.
    pub fn unit_eta(&self, y: &Module) -> Result<Morphism> {
        let qi = self.functor_q(&self.functor_i(y)?);
        let eta = Morphism::new(qi, y.clone(), Matrix::identity(y.field(), y.dim()))?;
        if !eta.is_iso() {
            return Err(Error::Inconsistent("q(i(y)) → y is not an isomorphism".into()));
        }
        Ok(eta)
    }

    /// `l` on maps of projectives: `l(R·e_i) = T·e_i` and the entries embed.
    pub fn lift_projmap(&self, sigma: &ProjMap) -> Result<ProjMap> {
        if !same_algebra(sigma.source.algebra(), &self.base) {
            return Err(Error::AlgebraMismatch);
        }
        let source = Projective::new(&self.total, sigma.source.vertices().to_vec())?;
        let target = Projective::new(&self.total, sigma.target.vertices().to_vec())?;
        let entries = sigma
            .entries
            .iter()
            .map(|row| row.iter().map(|c| self.injection.mul_vec(c)).collect())
            .collect();
        Ok(ProjMap {
            source,
            target,
            entries,
        })
    }

    /// `q` on maps of projectives: `q(T·e_i) = R·e_i` and the entries project.
    pub fn descend_projmap(&self, delta: &ProjMap) -> Result<ProjMap> {
        if !same_algebra(delta.source.algebra(), &self.total) {
            return Err(Error::AlgebraMismatch);
        }
        let source = Projective::new(&self.base, delta.source.vertices().to_vec())?;
        let target = Projective::new(&self.base, delta.target.vertices().to_vec())?;
        let entries = delta
            .entries
            .iter()
            .map(|row| row.iter().map(|c| self.projection.mul_vec(c)).collect())
            .collect();
        Ok(ProjMap {
            source,
            target,
            entries,
        })
    }

    /// `l(P1) → l(P0) → l(B) → 0`, with the cokernel certified isomorphic to
    /// `l(B)`. The result is flagged minimal only if its terms match the
    /// minimal presentation of `l(B)`.
    pub fn lift_presentation(&self, sigma: &Presentation, seed: u64, budget: &IsoBudget) -> Result<Presentation> {
        let lifted = self.lift_projmap(&sigma.sigma)?;
        let b = sigma.cover.target();
        let lb = self.functor_l(b)?;
        let (coker, proj) = lifted.morphism().cokernel();
        let iso = find_isomorphism(&coker, &lb, seed, budget)?
            .ok_or_else(|| Error::Inconsistent("l(σ) does not present l(B)".into()))?;
        let cover = proj.then(&iso)?;
        let minimal = has_minimal_terms(&lifted, &lb);
        Ok(Presentation {
            sigma: lifted,
            cover,
            minimal,
        })
    }

    /// The pair law and the round trip `T`-module → pair → `T`-module.
    pub fn round_trip(&self, z: &Module) -> Result<bool> {
        let pm = self.functor_e(z)?;
        Ok(pm.module(self)? == *z)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{find_basis_permutation, Quiver};
    use crate::homology::{minimal_presentation, nakayama};
    use crate::linalg::Fp;
    use crate::rep::{direct_sum, is_isomorphic};

    fn f() -> Fp {
        Fp::default()
    }

    fn k() -> Arc<Algebra> {
        Arc::new(Algebra::ground(f()))
    }

    fn a2() -> Arc<Algebra> {
        Arc::new(Algebra::linear_a(2, f()))
    }

    fn iso(x: &Module, y: &Module) -> bool {
        is_isomorphic(x, y, 0, &IsoBudget::default()).unwrap()
    }

    fn dual_numbers_instance() -> CleftInstance {
        let r = k();
        trivial_extension("k[x]/x^2", &r, Bimodule::regular(&r)).unwrap()
    }

    fn a2_trivial() -> CleftInstance {
        let r = a2();
        trivial_extension("kA2 ⋉ D(R)", &r, Bimodule::dual_regular(&r)).unwrap()
    }

    #[test]
    fn theta_extension_examples() {
        let c = dual_numbers_instance();
        assert!(c.validate().passed());
        assert!(find_basis_permutation(&c.total, &Algebra::dual_numbers(f())).is_some());

        let r = a2();
        let c = trivial_extension("R", &r, zero_bimodule(&r)).unwrap();
        assert!(c.total.same_structure(&r));

        let ss = Arc::new(Algebra::semisimple(2, f()));
        let arrow = Bimodule::arrows(&ss, &Quiver::linear_a(2)).unwrap();
        let c = trivial_extension("A2", &ss, arrow).unwrap();
        assert!(c.validate().passed());
        assert!(find_basis_permutation(&c.total, &Algebra::linear_a(2, f())).is_some());
    }

    #[test]
    fn trivial_extension_of_a2_is_symmetric() {
        let c = a2_trivial();
        assert_eq!(c.total.dim(), 6);
        assert!(c.validate().passed());
        for i in 0..2 {
            let p = Projective::new(&c.total, vec![i]).unwrap();
            assert!(iso(&nakayama(&p), &p.module()));
        }
    }

    #[test]
    fn tensor_ring_examples() {
        let ss = Arc::new(Algebra::semisimple(2, f()));
        let arrow = Bimodule::arrows(&ss, &Quiver::linear_a(2)).unwrap();
        let c = tensor_ring("T(N)", &ss, &arrow, 2).unwrap();
        assert!(c.validate().passed());
        assert!(find_basis_permutation(&c.total, &Algebra::linear_a(2, f())).is_some());
        assert!(tensor_ring("bad", &ss, &arrow, 1).is_err());

        let r = a2();
        let c = tensor_ring("R", &r, &zero_bimodule(&r), 1).unwrap();
        assert!(c.total.same_structure(&r));

        let s3 = Arc::new(Algebra::semisimple(3, f()));
        let a3 = Bimodule::arrows(&s3, &Quiver::linear_a(3)).unwrap();
        let c = tensor_ring("T(N)", &s3, &a3, 3).unwrap();
        assert_eq!(c.total.dim(), 6);
        assert!(c.validate().passed());
        assert!(find_basis_permutation(&c.total, &Algebra::linear_a(3, f())).is_some());
    }

    #[test]
    fn triangular_examples() {
        let kk = k();
        let c = triangular_matrix("T", &kk, &kk, &Bimodule::regular(&kk)).unwrap();
        assert!(find_basis_permutation(&c.total, &Algebra::linear_a(2, f())).is_some());

        let z = Bimodule::new(
            &kk,
            &kk,
            0,
            vec![Matrix::zeros(f(), 0, 0)],
            vec![Matrix::zeros(f(), 0, 0)],
        )
        .unwrap();
        let c = triangular_matrix("T", &kk, &kk, &z).unwrap();
        assert_eq!(c.total.dim(), 2);
        assert_eq!(c.total.num_vertices(), 2);

        let r = a2();
        let p1 = Bimodule::from_left_module(&Module::projective(&r, 0), &kk).unwrap();
        let c = triangular_matrix("T", &r, &kk, &p1).unwrap();
        assert_eq!(c.total.dim(), 6);
        assert!(c.validate().passed());
        assert!(find_basis_permutation(&c.total, &Algebra::linear_a(3, f())).is_some());
    }

    #[test]
    fn functor_l_examples() {
        let c = dual_numbers_instance();
        assert!(c.functor_l(&Module::zero(&c.base)).unwrap().is_zero());
        let l = c.functor_l(&Module::regular(&c.base)).unwrap();
        assert!(iso(&l, &Module::regular(&c.total)));

        let c = a2_trivial();
        let l = c.functor_l(&Module::regular(&c.base)).unwrap();
        assert!(iso(&l, &Module::regular(&c.total)));
        for i in 0..2 {
            let l = c.functor_l(&Module::projective(&c.base, i)).unwrap();
            assert!(iso(&l, &Module::projective(&c.total, i)));
            assert!(c.round_trip(&l).unwrap());
        }
    }

    #[test]
    fn functor_identities() {
        let c = a2_trivial();
        let mods = [
            Module::simple(&c.base, 0),
            Module::simple(&c.base, 1),
            Module::projective(&c.base, 0),
        ];
        for y in &mods {
            assert!(iso(&c.functor_q(&c.functor_i(y).unwrap()), y));
            let ly = c.functor_l(y).unwrap();
            let ely = c.functor_e(&ly).unwrap();
            assert!(iso(&c.functor_q(&ely), y));
            let split = direct_sum(&[y.clone(), c.functor_f(y).unwrap()]).unwrap().module;
            assert!(iso(&ely.x, &split));
            let iy = c.functor_i(y).unwrap().module(&c).unwrap();
            assert!(c.round_trip(&iy).unwrap());
        }
    }

    #[test]
    fn counit_and_unit() {
        let c = a2_trivial();
        let y = Module::projective(&c.base, 0);
        let iy = c.functor_i(&y).unwrap().module(&c).unwrap();
        let mu = c.counit_mu(&iy).unwrap();
        let (g, _) = mu.kernel();
        let fy = c.functor_i(&c.functor_f(&y).unwrap()).unwrap().module(&c).unwrap();
        assert!(iso(&g, &fy));
        let ly = c.functor_l(&y).unwrap();
        let mu = c.counit_mu(&ly).unwrap();
        assert_eq!(mu.kernel().0.dim(), mu.source().dim() - ly.dim());
        let eta = c.unit_eta(&y).unwrap();
        assert!(eta.is_iso());
    }

    #[test]
    fn lifted_presentations() {
        let c = a2_trivial();
        let p = Module::projective(&c.base, 0);
        let lp = c
            .lift_presentation(&minimal_presentation(&p), 0, &IsoBudget::default())
            .unwrap();
        assert!(lp.p1().is_zero());
        let s1 = Module::simple(&c.base, 0);
        let ls = c
            .lift_presentation(&minimal_presentation(&s1), 0, &IsoBudget::default())
            .unwrap();
        assert!(iso(ls.cover.target(), &c.functor_l(&s1).unwrap()));
        assert!(ls.cover.is_surjective());
    }

    #[test]
    fn opposite_instance_and_f_prime() {
        let c = a2_trivial();
        let op = c.opposite().unwrap();
        assert!(op.validate().passed());
        assert!(op.total.same_structure(&c.total.opposite()));
        let left = c.m().as_left_module();
        for y in [
            Module::projective(&c.base, 0),
            Module::simple(&c.base, 0),
            Module::simple(&c.base, 1),
        ] {
            let fp = c.functor_f_prime(&y).unwrap();
            assert_eq!(fp.dim(), crate::rep::hom_dim(&left, &y).unwrap());
        }
        let k = dual_numbers_instance();
        let fp = k.functor_f_prime(&Module::regular(&k.base)).unwrap();
        assert!(iso(&fp, &Module::regular(&k.base)));
    }

    #[test]
    fn corrupted_instances_fail_validation() {
        let c = a2_trivial();
        let mut bad = c.clone();
        bad.total = Arc::new(c.total.with_structure_constant(3, 4, 0, 1));
        assert!(!bad.validate().passed());
        let mut theta = c.theta.theta.clone();
        theta.set(0, 0, 1);
        let corrupted = ThetaData {
            theta,
            ..c.theta.clone()
        };
        assert!(theta_extension("bad", &c.base, corrupted).is_err());
    }
}
