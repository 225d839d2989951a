//! Catalogs of indecomposables, and support τ-tilting modules read off them.

use std::collections::HashMap;
use std::sync::Arc;

use crate::algebra::{path_algebra, Algebra, Quiver};
use crate::error::{Error, Result};
use crate::linalg::{Fp, Matrix};
use crate::rep::{decompose, direct_sum_over, find_isomorphism, IsoBudget, Module};
use crate::silting::{is_silting, is_support_tau_tilting, support_presentation, Catalog, Provenance};

/// Default dimension bound for brute-force catalogs.
pub const DEFAULT_CATALOG_BOUND: usize = 3;

/// Default cap on the number of candidate actions a brute-force catalog
/// may sweep.
pub const DEFAULT_ENUMERATION_BUDGET: u128 = 1 << 20;

/// The path algebra of `A_n` with the given orientation and its catalog of
/// interval modules.
pub fn catalog_type_a(n: usize, forward: &[bool], field: Fp) -> Result<Catalog> {
    if n == 0 || forward.len() + 1 != n {
        return Err(Error::InvalidQuiver(format!(
            "A_{n} needs {} orientation flags, got {}",
            n.saturating_sub(1),
            forward.len()
        )));
    }
    let q = Quiver::a_with_orientation(forward);
    let a = Arc::new(path_algebra(&q, &[], n, field)?);
    interval_catalog(&a)
}

/// Interval modules over a hereditary path algebra of an `A_n` quiver
/// (vertices in a line, one arrow between consecutive vertices).
pub fn interval_catalog(a: &Arc<Algebra>) -> Result<Catalog> {
    let pd = a
        .paths()
        .ok_or_else(|| Error::Unsupported("interval catalogs need a path algebra".into()))?;
    let q = &pd.quiver;
    let n = q.vertices().len();
    let line = q.arrows().len() + 1 == n
        && q.arrows().iter().all(|ar| ar.source.abs_diff(ar.target) == 1)
        && (0..n.saturating_sub(1)).all(|i| q.arrows().iter().filter(|ar| ar.source.min(ar.target) == i).count() == 1);
    if !line {
        return Err(Error::Unsupported("quiver is not of type A".into()));
    }
    let f = a.field();
    let mut mods = Vec::with_capacity(n * (n + 1) / 2);
    for len in 1..=n {
        for i in 0..=n - len {
            let j = i + len - 1;
            let dims: Vec<usize> = (0..n).map(|v| usize::from(v >= i && v <= j)).collect();
            let maps: HashMap<String, Matrix> = q
                .arrows()
                .iter()
                .filter(|ar| dims[ar.source] == 1 && dims[ar.target] == 1)
                .map(|ar| (ar.name.clone(), Matrix::identity(f, 1)))
                .collect();
            mods.push(Module::from_representation(a, &dims, &maps)?);
        }
    }
    Catalog::new(a, mods, n, Provenance::Analytic)
}

fn dim_vectors(nv: usize, bound: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = vec![0; nv];
    fn rec(k: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k == cur.len() {
            if cur.iter().sum::<usize>() > 0 {
                out.push(cur.clone());
            }
            return;
        }
        for d in 0..=left {
            cur[k] = d;
            rec(k + 1, left - d, cur, out);
        }
        cur[k] = 0;
    }
    rec(0, bound, &mut cur, &mut out);
    out.sort_by_key(|d| d.iter().sum::<usize>());
    out
}

/// Every indecomposable of dimension at most `bound`, up to isomorphism,
/// found by sweeping all generator actions compatible with each dimension
/// vector. Fails with [`Error::BudgetExceeded`] before doing any work when
/// the sweep would exceed `budget` candidates.
pub fn catalog_bruteforce(a: &Arc<Algebra>, bound: usize, seed: u64, budget: u128) -> Result<Catalog> {
    let f = a.field();
    let p = u128::from(f.p());
    let nv = a.num_vertices();
    let gens = a.generators();
    let vectors = dim_vectors(nv, bound);
    let mut needed: u128 = 0;
    for d in &vectors {
        let entries: usize = gens.iter().map(|g| d[g.target] * d[g.source]).sum();
        let count = u32::try_from(entries)
            .ok()
            .and_then(|e| p.checked_pow(e))
            .unwrap_or(u128::MAX);
        needed = needed.saturating_add(count);
    }
    if needed > budget {
        return Err(Error::BudgetExceeded { needed, budget });
    }
    let iso_budget = IsoBudget::default();
    let mut found: Vec<Module> = Vec::new();
    for d in &vectors {
        let dim: usize = d.iter().sum();
        let offsets: Vec<usize> = d
            .iter()
            .scan(0, |acc, &x| {
                let o = *acc;
                *acc += x;
                Some(o)
            })
            .collect();
        let idempotent_images: Vec<Matrix> = (0..nv)
            .map(|v| {
                let mut m = Matrix::zeros(f, dim, dim);
                for k in offsets[v]..offsets[v] + d[v] {
                    m.set(k, k, 1);
                }
                m
            })
            .collect();
        let sizes: Vec<usize> = gens.iter().map(|g| d[g.target] * d[g.source]).collect();
        let total: usize = sizes.iter().sum();
        let start = found.len();
        let mut digits = vec![0u32; total];
        loop {
            let mut images = idempotent_images.clone();
            let mut pos = 0;
            for (g, &sz) in gens.iter().zip(&sizes) {
                let block = Matrix::from_vec(f, d[g.target], d[g.source], digits[pos..pos + sz].to_vec());
                let mut m = Matrix::zeros(f, dim, dim);
                m.set_block(offsets[g.target], offsets[g.source], &block);
                images.push(m);
                pos += sz;
            }
            match Module::from_generator_images(a, dim, &images) {
                Ok(m) => {
                    let mut new = true;
                    for old in &found[start..] {
                        if find_isomorphism(old, &m, seed, &iso_budget)?.is_some() {
                            new = false;
                            break;
                        }
                    }
                    if new && decompose(&m, seed)?.len() == 1 {
                        found.push(m);
                    }
                }
                Err(Error::NotAModule(_)) => {}
                Err(e) => return Err(e),
            }
            if !advance(&mut digits, f.p()) {
                break;
            }
        }
    }
    Catalog::new(a, found, bound, Provenance::BruteForce)
}

fn advance(digits: &mut [u32], p: u32) -> bool {
    for d in digits.iter_mut() {
        *d += 1;
        if *d < p {
            return true;
        }
        *d = 0;
    }
    false
}

/// The direct sums of distinct catalog entries with at most `max_summands`
/// summands, the empty sum first. Indices are listed with each sum.
pub fn basic_sums(cat: &Catalog, max_summands: usize) -> Result<Vec<(Vec<usize>, Module)>> {
    let n = cat.len();
    let mut subsets: Vec<Vec<usize>> = vec![Vec::new()];
    for k in 1..=max_summands.min(n) {
        let mut idx: Vec<usize> = (0..k).collect();
        loop {
            subsets.push(idx.clone());
            let mut i = k;
            while i > 0 && idx[i - 1] == n - k + i - 1 {
                i -= 1;
            }
            if i == 0 {
                break;
            }
            idx[i - 1] += 1;
            for j in i..k {
                idx[j] = idx[j - 1] + 1;
            }
        }
    }
    subsets
        .into_iter()
        .map(|s| {
            let parts: Vec<Module> = s.iter().map(|&i| cat.indecomposables[i].clone()).collect();
            let m = direct_sum_over(&cat.algebra, &parts)?.module;
            Ok((s, m))
        })
        .collect()
}

/// The basic support τ-tilting modules assembled from catalog entries.
pub fn enumerate_support_tau_tilting(cat: &Catalog, seed: u64) -> Result<Vec<(Vec<usize>, Module)>> {
    let mut out = Vec::new();
    for (s, m) in basic_sums(cat, cat.algebra.num_vertices())? {
        if is_support_tau_tilting(&m, seed)? {
            out.push((s, m));
        }
    }
    Ok(out)
}

/// Support τ-tilting modules that are not silting with respect to their
/// support-augmented presentation (always empty when the catalog is
/// complete).
pub fn support_tau_tilting_silting_mismatches(cat: &Catalog, seed: u64) -> Result<Vec<Vec<usize>>> {
    let mut out = Vec::new();
    for (s, m) in basic_sums(cat, cat.algebra.num_vertices())? {
        let stt = is_support_tau_tilting(&m, seed)?;
        let sil = is_silting(&m, &support_presentation(&m).sigma, cat)?.holds;
        if stt != sil {
            out.push(s);
        }
    }
    Ok(out)
}
