//! Silting-theoretic predicates on finite-dimensional modules.
//!
//! Conditions quantified over all modules are decided on a [`Catalog`] of
//! indecomposables. Each class involved (`Gen`, `D_σ`) is closed under
//! finite direct sums and summands, so on finitely generated modules it is
//! determined by the indecomposables it contains.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::algebra::{ideal_closure, quotient_by_ideal, Algebra};
use crate::error::{Error, Result};
use crate::homology::{
    ext_dim, hom_into, indecomposable_projectives, minimal_presentation, pd_upto, tau, Presentation, ProjMap,
};
use crate::linalg::Matrix;
use crate::rep::{
    build_extension, cocycle_space, count_nonisomorphic, decompose, dual_over, hom_basis, hom_dim, hom_matrices,
    in_add, product_map, same_algebra, trace_of_in, IsoBudget, Module, Morphism,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    Analytic,
    BruteForce,
}

/// A finite list of pairwise non-isomorphic indecomposables.
#[derive(Clone, Debug)]
pub struct Catalog {
    pub algebra: Arc<Algebra>,
    pub indecomposables: Vec<Module>,
    /// Every indecomposable of dimension at most this bound is listed.
    pub complete_up_to: usize,
    pub provenance: Provenance,
}

/// What a catalog-decided verdict was decided over.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogScope {
    pub size: usize,
    pub complete_up_to: usize,
    pub provenance: Provenance,
}

impl Catalog {
    pub fn new(
        algebra: &Arc<Algebra>,
        indecomposables: Vec<Module>,
        complete_up_to: usize,
        provenance: Provenance,
    ) -> Result<Self> {
        if indecomposables.iter().any(|m| !same_algebra(m.algebra(), algebra)) {
            return Err(Error::AlgebraMismatch);
        }
        Ok(Catalog {
            algebra: algebra.clone(),
            indecomposables,
            complete_up_to,
            provenance,
        })
    }

    pub fn len(&self) -> usize {
        self.indecomposables.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indecomposables.is_empty()
    }

    pub fn scope(&self) -> CatalogScope {
        CatalogScope {
            size: self.len(),
            complete_up_to: self.complete_up_to,
            provenance: self.provenance,
        }
    }

    /// The duals, over the given opposite algebra.
    pub fn dual_over(&self, op: &Arc<Algebra>) -> Catalog {
        Catalog {
            algebra: op.clone(),
            indecomposables: self.indecomposables.iter().map(|m| dual_over(m, op)).collect(),
            complete_up_to: self.complete_up_to,
            provenance: self.provenance,
        }
    }

    /// Check pairwise non-isomorphism and indecomposability.
    pub fn certify(&self, seed: u64) -> Result<()> {
        for m in &self.indecomposables {
            if m.is_zero() || decompose(m, seed)?.len() != 1 {
                return Err(Error::Inconsistent(format!(
                    "catalog entry of dimension {} is not indecomposable",
                    m.dim()
                )));
            }
        }
        let n = count_nonisomorphic(&self.indecomposables, seed, &IsoBudget::default())?;
        if n != self.len() {
            return Err(Error::Inconsistent("catalog has isomorphic entries".into()));
        }
        Ok(())
    }
}

/// A boolean decided over a catalog, with the first catalog entry on which
/// the two sides disagreed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub holds: bool,
    pub scope: CatalogScope,
    pub witness: Option<String>,
}

/// `l ∈ D_σ`: every map `P1 → l` extends along `σ`.
pub fn in_d_sigma(sigma: &ProjMap, l: &Module) -> Result<bool> {
    if !same_algebra(sigma.source.algebra(), l.algebra()) {
        return Err(Error::AlgebraMismatch);
    }
    let m = hom_into(sigma, l);
    Ok(m.rank() == m.rows())
}

/// `l ∈ Gen(x)`.
pub fn in_gen(x: &Module, l: &Module) -> Result<bool> {
    Ok(trace_of_in(x, l)?.1)
}

/// `l ∈ Cogen(x)`: the maps `l → x` are jointly injective.
pub fn in_cogen(x: &Module, l: &Module) -> Result<bool> {
    let maps = hom_matrices(l, x)?;
    let f = l.field();
    let stacked = maps.iter().fold(Matrix::zeros(f, 0, l.dim()), |acc, m| acc.vstack(m));
    Ok(stacked.rank() == l.dim())
}

pub fn is_tau_rigid(y: &Module) -> Result<bool> {
    Ok(hom_dim(y, &tau(y))? == 0)
}

/// Vertices `i` with `e_i·y ≠ 0`, and the sum of the remaining idempotents.
pub fn support_vertices(y: &Module) -> (Vec<usize>, Vec<u32>) {
    let a = y.algebra();
    let f = a.field();
    let mut support = Vec::new();
    let mut e0 = a.zero();
    for (i, e) in a.idempotents().iter().enumerate() {
        if y.act(e).is_zero() {
            e0 = f.vec_add(&e0, e);
        } else {
            support.push(i);
        }
    }
    (support, e0)
}

/// `y` as a module over `A/⟨e0⟩` for its complementary idempotent `e0`.
pub fn over_support_quotient(y: &Module) -> Result<Module> {
    let (_, e0) = support_vertices(y);
    let q = quotient_by_ideal(y.algebra(), &[e0])?;
    let b = Arc::new(q.algebra);
    let action = (0..b.dim()).map(|k| y.act(&q.section.column(k))).collect();
    Module::new(&b, y.dim(), action)
}

/// Number of isomorphism classes of indecomposable summands.
pub fn summand_count(y: &Module, seed: u64) -> Result<usize> {
    summand_count_within(y, seed, &IsoBudget::default())
}

pub fn summand_count_within(y: &Module, seed: u64, budget: &IsoBudget) -> Result<usize> {
    let parts = decompose(y, seed)?;
    count_nonisomorphic(&parts, seed, budget)
}

/// τ-rigid over `A/⟨e0⟩` with as many summands as that quotient has simples.
pub fn is_support_tau_tilting(y: &Module, seed: u64) -> Result<bool> {
    is_support_tau_tilting_within(y, seed, &IsoBudget::default())
}

/// [`is_support_tau_tilting`] with an explicit budget for the isomorphism
/// tests between summands.
pub fn is_support_tau_tilting_within(y: &Module, seed: u64, budget: &IsoBudget) -> Result<bool> {
    if y.is_zero() {
        return Ok(true);
    }
    let yb = over_support_quotient(y)?;
    if !is_tau_rigid(&yb)? {
        return Ok(false);
    }
    Ok(summand_count_within(y, seed, budget)? == yb.algebra().num_vertices())
}

/// The minimal presentation of `y` with `P(i) → 0` added for every vertex
/// outside the support of `y`.
pub fn support_presentation(y: &Module) -> Presentation {
    let (support, _) = support_vertices(y);
    let outside: Vec<usize> = (0..y.algebra().num_vertices())
        .filter(|i| !support.contains(i))
        .collect();
    minimal_presentation(y).augmented(&outside)
}

fn check_catalog(sigma: &ProjMap, cat: &Catalog) -> Result<()> {
    if !same_algebra(sigma.source.algebra(), &cat.algebra) {
        return Err(Error::AlgebraMismatch);
    }
    Ok(())
}

/// `Gen(y) = D_σ`, decided on the catalog.
pub fn is_silting(y: &Module, sigma: &ProjMap, cat: &Catalog) -> Result<Verdict> {
    check_catalog(sigma, cat)?;
    if !same_algebra(y.algebra(), &cat.algebra) {
        return Err(Error::AlgebraMismatch);
    }
    for (k, l) in cat.indecomposables.iter().enumerate() {
        let g = in_gen(y, l)?;
        let d = in_d_sigma(sigma, l)?;
        if g != d {
            return Ok(Verdict {
                holds: false,
                scope: cat.scope(),
                witness: Some(format!(
                    "catalog entry {k} (dim vector {:?}): in Gen = {g}, in D_sigma = {d}",
                    l.dim_vector()
                )),
            });
        }
    }
    Ok(Verdict {
        holds: true,
        scope: cat.scope(),
        witness: None,
    })
}

/// Failures of `D_σ ∩ cat` to be closed under cokernels of catalog maps and
/// under extensions between its members.
pub fn torsion_closure_witness(sigma: &ProjMap, cat: &Catalog) -> Result<Option<String>> {
    check_catalog(sigma, cat)?;
    let members: Vec<usize> = (0..cat.len())
        .filter_map(|k| match in_d_sigma(sigma, &cat.indecomposables[k]) {
            Ok(true) => Some(Ok(k)),
            Ok(false) => None,
            Err(e) => Some(Err(e)),
        })
        .collect::<Result<_>>()?;
    let mods = &cat.indecomposables;
    for &k in &members {
        for (j, src) in mods.iter().enumerate() {
            for m in hom_matrices(src, &mods[k])? {
                let f = Morphism::new_unchecked(src.clone(), mods[k].clone(), m);
                if !in_d_sigma(sigma, &f.cokernel().0)? {
                    return Ok(Some(format!(
                        "cokernel of a map from entry {j} to entry {k} leaves D_sigma"
                    )));
                }
            }
        }
    }
    for &k in &members {
        for &j in &members {
            for c in cocycle_space(&mods[k], &mods[j])? {
                let e = build_extension(&mods[k], &mods[j], &c)?;
                if !in_d_sigma(sigma, &e.module)? {
                    return Ok(Some(format!("an extension of entry {k} by entry {j} leaves D_sigma")));
                }
            }
        }
    }
    Ok(None)
}

/// `y ∈ D_σ` and `D_σ` closed under quotients and extensions on the
/// catalog. For a minimal presentation the verdict must agree with
/// τ-rigidity; a disagreement is reported as an error.
pub fn is_partial_silting(y: &Module, presentation: &Presentation, cat: &Catalog) -> Result<Verdict> {
    partial_silting(y, &presentation.sigma, presentation.minimal, cat)
}

/// As [`is_partial_silting`] for a bare map of projectives; `minimal`
/// enables the τ-rigidity cross-check.
pub fn partial_silting(y: &Module, sigma: &ProjMap, minimal: bool, cat: &Catalog) -> Result<Verdict> {
    check_catalog(sigma, cat)?;
    let in_d = in_d_sigma(sigma, y)?;
    let witness = if !in_d {
        Some("the module is not in D_sigma".to_string())
    } else {
        torsion_closure_witness(sigma, cat)?
    };
    let holds = witness.is_none();
    if minimal {
        let rigid = is_tau_rigid(y)?;
        if rigid != holds {
            return Err(Error::Inconsistent(format!(
                "partial silting ({holds}) disagrees with tau-rigid ({rigid}) for a minimal presentation"
            )));
        }
    }
    Ok(Verdict {
        holds,
        scope: cat.scope(),
        witness,
    })
}

/// Whether `sigma` has the terms of the minimal presentation of `y`.
pub fn has_minimal_terms(sigma: &ProjMap, y: &Module) -> bool {
    let min = minimal_presentation(y);
    min.p0().multiplicities() == sigma.target.multiplicities()
        && min.p1().multiplicities() == sigma.source.multiplicities()
}

/// (T1) and (T2): `pd x ≤ n` and `Ext^j(x, x) = 0` for `j ≥ 1`.
pub fn is_partial_n_tilting(x: &Module, n: usize) -> Result<bool> {
    if pd_upto(x, n).is_none() {
        return Ok(false);
    }
    for j in 1..=n {
        if ext_dim(x, x, j)? != 0 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The universal left `add(x)`-approximation `c → x^h`, `h = dim Hom(c, x)`.
fn universal_approximation(c: &Module, x: &Module) -> Result<Morphism> {
    let maps: Vec<Morphism> = hom_basis(c, x)?;
    product_map(c.algebra(), c, &maps)
}

/// (T1) `pd x ≤ n`, (T2) `Ext^j(x, x) = 0` for `1 ≤ j ≤ n`, (T3) every
/// indecomposable projective has a coresolution of length `n` in `add(x)`.
pub fn is_n_tilting(x: &Module, n: usize) -> Result<bool> {
    if !is_partial_n_tilting(x, n)? {
        return Ok(false);
    }
    for p in indecomposable_projectives(x.algebra()) {
        if !coresolves(&p, x, n)? {
            return Ok(false);
        }
    }
    Ok(true)
}

fn coresolves(p: &Module, x: &Module, n: usize) -> Result<bool> {
    let mut c = p.clone();
    for _ in 0..n {
        if in_add(&c, x)? {
            return Ok(true);
        }
        let approx = universal_approximation(&c, x)?;
        if !approx.is_injective() {
            return Ok(false);
        }
        c = approx.cokernel().0;
    }
    in_add(&c, x)
}

/// Cosilting, computed as silting of `D(x)` over the opposite algebra with
/// respect to its support presentation, on the dual catalog.
pub fn is_cosilting(x: &Module, cat: &Catalog) -> Result<Verdict> {
    if !same_algebra(x.algebra(), &cat.algebra) {
        return Err(Error::AlgebraMismatch);
    }
    let op = Arc::new(cat.algebra.opposite());
    let dx = dual_over(x, &op);
    let dcat = cat.dual_over(&op);
    is_silting(&dx, &support_presentation(&dx).sigma, &dcat)
}

/// The two-sided ideal generated by the complementary idempotent kills `y`.
pub fn annihilated_by_complement(y: &Module) -> bool {
    let (_, e0) = support_vertices(y);
    ideal_closure(y.algebra(), &[e0])
        .vectors()
        .iter()
        .all(|v| y.act(v).is_zero())
}
