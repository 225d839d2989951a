//! Krull-Schmidt decomposition, isomorphism search and `add` membership.
//!
//! Both searches work in the image of the relevant Hom space inside the
//! maps between tops: a map `x → y` of equal-dimensional modules is an
//! isomorphism iff its top is, and `End(x)` is local iff its image in
//! `End(top x)` is.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::linalg::{Basis, Fp, Matrix, SpanBuilder};

use super::{hom_matrices, same_algebra, Module, Morphism};

/// Limits for the isomorphism search.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IsoBudget {
    /// Largest number of combinations swept exhaustively; `None` means `p^8`.
    pub max_combinations: Option<u128>,
    pub random_trials: usize,
}

impl Default for IsoBudget {
    fn default() -> Self {
        IsoBudget {
            max_combinations: None,
            random_trials: 64,
        }
    }
}

impl IsoBudget {
    pub fn with_limit(limit: u128) -> Self {
        IsoBudget {
            max_combinations: Some(limit),
            ..IsoBudget::default()
        }
    }

    pub fn limit(&self, field: Fp) -> u128 {
        self.max_combinations.unwrap_or_else(|| u128::from(field.p()).pow(8))
    }

    fn trials(&self, field: Fp) -> usize {
        let limit = self.limit(field);
        if limit < self.random_trials as u128 {
            limit as usize
        } else {
            self.random_trials
        }
    }
}

/// Largest number of combinations swept while certifying indecomposability.
const CERTIFY_LIMIT: u128 = 1 << 20;

fn combination_count(p: u32, n: usize) -> Option<u128> {
    u128::from(p).checked_pow(n as u32)
}

/// Visit every coefficient vector in `F_p^n`; stops early when `visit` returns true.
fn sweep(field: Fp, n: usize, mut visit: impl FnMut(&[u32]) -> bool) -> bool {
    let p = field.p();
    let mut c = vec![0u32; n];
    loop {
        if visit(&c) {
            return true;
        }
        let mut i = 0;
        loop {
            if i == n {
                return false;
            }
            c[i] += 1;
            if c[i] < p {
                break;
            }
            c[i] = 0;
            i += 1;
        }
    }
}

fn random_vector(rng: &mut ChaCha8Rng, field: Fp, n: usize) -> Vec<u32> {
    (0..n).map(|_| rng.gen_range(0..field.p())).collect()
}

/// Images of `maps` on tops, reduced to an independent family, with the
/// originating map kept for each.
fn top_images(x: &Module, y: &Module, maps: &[Matrix]) -> (Vec<Matrix>, Vec<Matrix>) {
    let f = x.field();
    let qx = crate::linalg::quotient(f, x.dim(), &x.radical()).expect("rad x is independent");
    let qy = crate::linalg::quotient(f, y.dim(), &y.radical()).expect("rad y is independent");
    let mut builder = SpanBuilder::new(f, qy.dim * qx.dim);
    let mut images = Vec::new();
    let mut lifts = Vec::new();
    for m in maps {
        let img = qy.projection.mul(&m.mul(&qx.section));
        if builder.insert(img.data()) {
            images.push(img);
            lifts.push(m.clone());
        }
    }
    (images, lifts)
}

/// An isomorphism `x → y`, `None` if there is none, or `Inconclusive` when
/// the budget does not cover the search.
pub fn find_isomorphism(x: &Module, y: &Module, seed: u64, budget: &IsoBudget) -> Result<Option<Morphism>> {
    if !same_algebra(x.algebra(), y.algebra()) {
        return Err(Error::AlgebraMismatch);
    }
    let f = x.field();
    if x.dim() != y.dim() || x.dim_vector() != y.dim_vector() {
        return Ok(None);
    }
    if x.dim() == 0 {
        return Ok(Some(Morphism::zero(x, y)));
    }
    let hom = hom_matrices(x, y)?;
    let (images, lifts) = top_images(x, y, &hom);
    let (tx, ty) = (x.top().0, y.top().0);
    if tx.dim_vector() != ty.dim_vector() || images.is_empty() {
        return Ok(None);
    }
    let found = |m: Matrix| Morphism::new_unchecked(x.clone(), y.clone(), m);

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..budget.trials(f) {
        let c = random_vector(&mut rng, f, hom.len());
        let m = Matrix::combination(f, y.dim(), x.dim(), &c, &hom);
        if m.is_invertible() {
            return Ok(Some(found(m)));
        }
    }
    let limit = budget.limit(f);
    match combination_count(f.p(), images.len()) {
        Some(n) if n <= limit => {}
        _ => {
            return Err(Error::Inconclusive(format!(
                "isomorphism sweep over {}^{} combinations exceeds the budget of {limit}",
                f.p(),
                images.len()
            )))
        }
    }
    let (r, c) = (images[0].rows(), images[0].cols());
    let mut hit = None;
    sweep(f, images.len(), |coeffs| {
        if Matrix::combination(f, r, c, coeffs, &images).is_invertible() {
            hit = Some(coeffs.to_vec());
            true
        } else {
            false
        }
    });
    match hit {
        None => Ok(None),
        Some(coeffs) => {
            let m = Matrix::combination(f, y.dim(), x.dim(), &coeffs, &lifts);
            if !m.is_invertible() {
                return Err(Error::Inconsistent("top isomorphism did not lift".into()));
            }
            Ok(Some(found(m)))
        }
    }
}

pub fn is_isomorphic(x: &Module, y: &Module, seed: u64, budget: &IsoBudget) -> Result<bool> {
    Ok(find_isomorphism(x, y, seed, budget)?.is_some())
}

/// Fitting splitting along `g = f^dim`: `(im g, ker g)` when both are proper.
fn fitting_split(x: &Module, f: &Matrix) -> Option<(Basis, Basis)> {
    let g = f.pow(x.dim());
    let r = g.rank();
    if r == 0 || r == x.dim() {
        return None;
    }
    Some((g.column_space(), g.kernel()))
}

/// A nontrivial splitting of `x`, or `None` once indecomposability is certified.
fn find_split(x: &Module, rng: &mut ChaCha8Rng) -> Result<Option<(Basis, Basis)>> {
    let f = x.field();
    let end = hom_matrices(x, x)?;
    if end.len() <= 1 {
        return Ok(None);
    }
    for m in &end {
        if let Some(s) = fitting_split(x, m) {
            return Ok(Some(s));
        }
    }
    for _ in 0..(2 * end.len() + 8) {
        let c = random_vector(rng, f, end.len());
        let m = Matrix::combination(f, x.dim(), x.dim(), &c, &end);
        if let Some(s) = fitting_split(x, &m) {
            return Ok(Some(s));
        }
    }
    let (images, lifts) = top_images(x, x, &end);
    if images.len() <= 1 {
        return Ok(None);
    }
    match combination_count(f.p(), images.len()) {
        Some(n) if n <= CERTIFY_LIMIT => {}
        _ => {
            return Err(Error::CertificationFailed(format!(
                "End(top x) image of dimension {} is too large to sweep",
                images.len()
            )))
        }
    }
    let (r, c) = (images[0].rows(), images[0].cols());
    let mut witness = None;
    sweep(f, images.len(), |coeffs| {
        let m = Matrix::combination(f, r, c, coeffs, &images);
        if m.is_nilpotent() || m.is_invertible() {
            false
        } else {
            witness = Some(coeffs.to_vec());
            true
        }
    });
    match witness {
        None => Ok(None),
        Some(coeffs) => {
            let m = Matrix::combination(f, x.dim(), x.dim(), &coeffs, &lifts);
            fitting_split(x, &m)
                .map(Some)
                .ok_or_else(|| Error::Inconsistent("non-local endomorphism did not split".into()))
        }
    }
}

/// Indecomposable summands with their inclusions into `x`.
pub fn decompose_with_maps(x: &Module, seed: u64) -> Result<Vec<(Module, Morphism)>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    let mut stack = vec![(x.clone(), Morphism::identity(x))];
    while let Some((y, incl)) = stack.pop() {
        if y.is_zero() {
            continue;
        }
        match find_split(&y, &mut rng)? {
            None => out.push((y, incl)),
            Some((a, b)) => {
                for basis in [b, a] {
                    let (sub, inc) = y.submodule(&basis)?;
                    let composed = incl.matrix().mul(inc.matrix());
                    stack.push((sub.clone(), Morphism::new_unchecked(sub, x.clone(), composed)));
                }
            }
        }
    }
    Ok(out)
}

/// Indecomposable summands of `x`, each certified local.
pub fn decompose(x: &Module, seed: u64) -> Result<Vec<Module>> {
    Ok(decompose_with_maps(x, seed)?.into_iter().map(|(m, _)| m).collect())
}

/// Number of isomorphism classes among `modules`.
pub fn count_nonisomorphic(modules: &[Module], seed: u64, budget: &IsoBudget) -> Result<usize> {
    let mut reps: Vec<&Module> = Vec::new();
    for m in modules {
        let mut known = false;
        for r in &reps {
            if is_isomorphic(m, r, seed, budget)? {
                known = true;
                break;
            }
        }
        if !known {
            reps.push(m);
        }
    }
    Ok(reps.len())
}

/// `c ∈ add(x)`: the identity of `c` factors through a power of `x`.
pub fn in_add(c: &Module, x: &Module) -> Result<bool> {
    if !same_algebra(c.algebra(), x.algebra()) {
        return Err(Error::AlgebraMismatch);
    }
    if c.is_zero() {
        return Ok(true);
    }
    let f = c.field();
    let to = hom_matrices(c, x)?;
    let from = hom_matrices(x, c)?;
    let mut builder = SpanBuilder::new(f, c.dim() * c.dim());
    for g in &from {
        for h in &to {
            builder.insert(g.mul(h).data());
        }
    }
    Ok(builder.contains(Matrix::identity(f, c.dim()).data()))
}
