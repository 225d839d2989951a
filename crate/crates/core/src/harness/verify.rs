//! Case-by-case checks of the lifting and descent statements on one
//! instance. Each side of a biconditional is computed on its own side of the
//! extension: `T`-side predicates see only `T`-modules and `T`-catalogs.

use rayon::prelude::*;

use crate::cleft::CleftInstance;
use crate::error::{Error, Result};
use crate::homology::{
    ext_dim, indecomposable_projectives, is_projective, minimal_presentation, resolution, tau, tor_dim, Presentation,
    ProjMap, Projective,
};
use crate::rep::{
    decompose, direct_sum, dual_over, find_isomorphism, hom_basis, hom_dim, same_algebra, Bimodule, IsoBudget, Module,
    Morphism,
};
use crate::silting::{
    has_minimal_terms, in_cogen, in_d_sigma, in_gen, is_cosilting, is_n_tilting, is_partial_n_tilting, is_silting,
    is_support_tau_tilting, is_tau_rigid, partial_silting, support_presentation, support_vertices, Catalog,
};

use super::catalog::basic_sums;
use super::report::{CaseRecord, Claim, InstanceInfo, VerificationReport};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VerifyOptions {
    pub seed: u64,
    pub iso_budget: IsoBudget,
    /// Largest `n` accepted by the tilting checks.
    pub pd_bound: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            seed: 0,
            iso_budget: IsoBudget::default(),
            pd_bound: 4,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Pres {
    Minimal,
    Support,
}

impl Pres {
    const BOTH: [Pres; 2] = [Pres::Minimal, Pres::Support];

    fn of(self, y: &Module) -> Presentation {
        match self {
            Pres::Minimal => minimal_presentation(y),
            Pres::Support => support_presentation(y),
        }
    }

    fn name(self) -> &'static str {
        match self {
            Pres::Minimal => "minimal",
            Pres::Support => "support",
        }
    }
}

type Job<'a> = (String, Box<dyn Fn() -> Result<CaseRecord> + Send + Sync + 'a>);

/// Run the jobs in parallel and keep their order. An exhausted isomorphism
/// search turns the case into a skipped one.
fn run_jobs(jobs: Vec<Job<'_>>) -> Result<Vec<CaseRecord>> {
    jobs.par_iter()
        .map(|(subject, job)| match job() {
            Ok(mut rec) => {
                rec.subject = subject.clone();
                Ok(rec)
            }
            Err(Error::Inconclusive(why)) => Ok(CaseRecord::skipped(subject.clone(), why, vec![])),
            Err(e) => Err(e),
        })
        .collect()
}

fn label(idx: &[usize]) -> String {
    if idx.is_empty() {
        "0".to_string()
    } else {
        idx.iter().map(|i| format!("#{i}")).collect::<Vec<_>>().join("+")
    }
}

fn ensure_valid(c: &CleftInstance) -> Result<()> {
    let report = c.validate();
    match report.first_failure() {
        None => Ok(()),
        Some(check) => Err(Error::InvalidInstance(format!(
            "{}: {}",
            check.name,
            check.witness.clone().unwrap_or_default()
        ))),
    }
}

fn ensure_catalog(cat: &Catalog, c: &CleftInstance, total: bool) -> Result<()> {
    let alg = if total { &c.total } else { &c.base };
    if same_algebra(&cat.algebra, alg) {
        Ok(())
    } else {
        Err(Error::AlgebraMismatch)
    }
}

fn need_total(cat_t: Option<&Catalog>) -> Result<&Catalog> {
    cat_t.ok_or_else(|| Error::Unsupported("this check needs a catalog over the total algebra".into()))
}

pub fn instance_info(c: &CleftInstance, cat_r: Option<&Catalog>, cat_t: Option<&Catalog>) -> InstanceInfo {
    InstanceInfo {
        name: c.name.clone(),
        field: c.base.field().p(),
        base_dim: c.base.dim(),
        total_dim: c.total.dim(),
        bimodule_dim: c.theta.dim(),
        theta_is_zero: c.theta.is_zero(),
        nilpotency: c.theta.nilpotency_index,
        catalog_base: cat_r.map(Catalog::scope),
        catalog_total: cat_t.map(Catalog::scope),
        notes: Vec::new(),
    }
}

/// The lifted presentation `l(σ)` and its cokernel, a `T`-module isomorphic
/// to `l(Y)`.
fn lift(c: &CleftInstance, sigma: &Presentation, o: &VerifyOptions) -> Result<(ProjMap, bool, Module)> {
    let lp = c.lift_presentation(sigma, o.seed, &o.iso_budget)?;
    let ly = lp.sigma.morphism().cokernel().0;
    Ok((lp.sigma, lp.minimal, ly))
}

fn iso(x: &Module, y: &Module, o: &VerifyOptions) -> Result<bool> {
    Ok(find_isomorphism(x, y, o.seed, &o.iso_budget)?.is_some())
}

const COPRODUCT_NOTE: &str =
    "i and e preserve coproducts in module categories; this hypothesis is not represented in instance data";

/// Lifting of partial silting and silting modules along `l`, for every basic
/// `Y` from the base catalog with its minimal and its support-augmented
/// presentation.
pub fn verify_thm_3_3(
    c: &CleftInstance,
    cat_r: &Catalog,
    cat_t: Option<&Catalog>,
    o: &VerifyOptions,
) -> Result<VerificationReport> {
    ensure_valid(c)?;
    let cat_t = need_total(cat_t)?;
    ensure_catalog(cat_r, c, false)?;
    ensure_catalog(cat_t, c, true)?;
    let ys = basic_sums(cat_r, cat_r.len())?;
    let mut jobs: Vec<Job> = Vec::new();
    for (idx, y) in &ys {
        for kind in Pres::BOTH {
            let subject = format!("Y = {} ({} presentation)", label(idx), kind.name());
            jobs.push((
                subject,
                Box::new(move || {
                    let sigma = kind.of(y);
                    let (lsigma, lmin, ly) = lift(c, &sigma, o)?;
                    let fy = c.functor_f(y)?;
                    let ps_t = partial_silting(&ly, &lsigma, lmin, cat_t)?.holds;
                    let s_t = is_silting(&ly, &lsigma, cat_t)?.holds;
                    let ps_r =
                        partial_silting(y, &sigma.sigma, sigma.minimal, cat_r)?.holds && in_d_sigma(&sigma.sigma, &fy)?;
                    let s_r = is_silting(y, &sigma.sigma, cat_r)?.holds && in_gen(y, &fy)?;
                    Ok(CaseRecord::checked(
                        String::new(),
                        vec![
                            Claim::iff("partial silting lifts", ps_t, ps_r),
                            Claim::iff("silting lifts", s_t, s_r),
                        ],
                    ))
                }),
            ));
        }
    }
    let mut info = instance_info(c, Some(cat_r), Some(cat_t));
    info.notes.push(COPRODUCT_NOTE.into());
    Ok(VerificationReport::new("thm3.3", info, run_jobs(jobs)?))
}

fn tor_obstruction(m: &Bimodule, x: &Module, n: usize) -> Result<Option<String>> {
    for t in 1..=n + 1 {
        let d = tor_dim(m, x, t)?;
        if d != 0 {
            return Ok(Some(format!("Tor_{t}(M, X) has dimension {d}")));
        }
    }
    Ok(None)
}

fn perp(x: &Module, y: &Module, n: usize) -> Result<bool> {
    for j in 1..=n {
        if ext_dim(x, y, j)? != 0 {
            return Ok(false);
        }
    }
    Ok(true)
}

fn check_tilting_degree(n: usize, o: &VerifyOptions) -> Result<()> {
    if n > o.pd_bound {
        return Err(Error::Unsupported(format!(
            "n = {n} exceeds the pd bound {}",
            o.pd_bound
        )));
    }
    Ok(())
}

/// Lifting of partial `n`-tilting and `n`-tilting modules along `l`, gated by
/// the vanishing of `Tor_t(M, X)` for `1 ≤ t ≤ n+1`. Needs `M` nilpotent.
pub fn verify_thm_3_5(c: &CleftInstance, n: usize, cat_r: &Catalog, o: &VerifyOptions) -> Result<VerificationReport> {
    ensure_valid(c)?;
    ensure_catalog(cat_r, c, false)?;
    check_tilting_degree(n, o)?;
    if c.theta.nilpotency_index.is_none() {
        return Err(Error::InvalidInstance(
            "the bimodule must come with a nilpotency index".into(),
        ));
    }
    let xs = basic_sums(cat_r, cat_r.len())?;
    let mut jobs: Vec<Job> = Vec::new();
    for (idx, x) in &xs {
        jobs.push((
            format!("X = {}", label(idx)),
            Box::new(move || {
                if let Some(why) = tor_obstruction(c.m(), x, n)? {
                    return Ok(CaseRecord::skipped(String::new(), why, vec![]));
                }
                let (_, _, lx) = lift(c, &minimal_presentation(x), o)?;
                let fx = c.functor_f(x)?;
                let p = perp(x, &fx, n)?;
                Ok(CaseRecord::checked(
                    String::new(),
                    vec![
                        Claim::iff(
                            "partial n-tilting lifts",
                            is_partial_n_tilting(&lx, n)?,
                            is_partial_n_tilting(x, n)? && p,
                        ),
                        Claim::iff("n-tilting lifts", is_n_tilting(&lx, n)?, is_n_tilting(x, n)? && p),
                    ],
                ))
            }),
        ));
    }
    let mut info = instance_info(c, Some(cat_r), None);
    info.notes.push(format!("n = {n}"));
    Ok(VerificationReport::new("thm3.5", info, run_jobs(jobs)?))
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Descent {
    Silting,
    TauTilting,
}

fn descent(
    c: &CleftInstance,
    cat_r: &Catalog,
    cat_t: &Catalog,
    o: &VerifyOptions,
    which: Descent,
) -> Result<Vec<CaseRecord>> {
    ensure_valid(c)?;
    ensure_catalog(cat_r, c, false)?;
    ensure_catalog(cat_t, c, true)?;
    let xs = basic_sums(cat_t, c.total.num_vertices())?;
    let kinds: &[Pres] = match which {
        Descent::Silting => &Pres::BOTH,
        Descent::TauTilting => &[Pres::Minimal],
    };
    let mut jobs: Vec<Job> = Vec::new();
    for (idx, a) in &xs {
        for &kind in kinds {
            jobs.push((
                format!("A = {} ({} presentation)", label(idx), kind.name()),
                Box::new(move || {
                    let delta = kind.of(a);
                    let pm = c.functor_e(a)?;
                    let qa = c.functor_q(&pm);
                    let qd = c.descend_projmap(&delta.sigma)?;
                    let mut claims = Vec::new();
                    let mut premises = Vec::new();
                    match which {
                        Descent::Silting => {
                            let s_t = is_silting(a, &delta.sigma, cat_t)?.holds;
                            let p_t = partial_silting(a, &delta.sigma, delta.minimal, cat_t)?.holds;
                            premises.extend([s_t, p_t]);
                            if s_t || p_t {
                                let presents = iso(&qd.morphism().cokernel().0, &qa, o)?;
                                claims.push(Claim::implies("q(δ) presents q(A)", true, presents));
                            }
                            let s_r = is_silting(&qa, &qd, cat_r)?.holds;
                            let p_r = partial_silting(&qa, &qd, has_minimal_terms(&qd, &qa), cat_r)?.holds;
                            claims.push(Claim::implies("silting descends", s_t, s_r));
                            claims.push(Claim::implies("partial silting descends", p_t, p_r));
                        }
                        Descent::TauTilting => {
                            let r_t = is_tau_rigid(a)?;
                            let st_t = is_support_tau_tilting(a, o.seed)?;
                            premises.extend([r_t, st_t]);
                            claims.push(Claim::implies("τ-rigid descends", r_t, is_tau_rigid(&qa)?));
                            claims.push(Claim::implies(
                                "support τ-tilting descends",
                                st_t,
                                is_support_tau_tilting(&qa, o.seed)?,
                            ));
                        }
                    }
                    if premises.iter().any(|&p| p) {
                        Ok(CaseRecord::checked(String::new(), claims))
                    } else {
                        Ok(CaseRecord::skipped(String::new(), "no premise holds".into(), claims))
                    }
                }),
            ));
        }
    }
    run_jobs(jobs)
}

/// Descent of (partial) silting modules along `q`, over every basic `A`
/// from the total catalog with at most as many summands as `T` has vertices.
/// Only the forward implications are claims.
pub fn verify_thm_3_8(
    c: &CleftInstance,
    cat_r: &Catalog,
    cat_t: Option<&Catalog>,
    o: &VerifyOptions,
) -> Result<VerificationReport> {
    let cat_t = need_total(cat_t)?;
    let cases = descent(c, cat_r, cat_t, o, Descent::Silting)?;
    let mut info = instance_info(c, Some(cat_r), Some(cat_t));
    info.notes.push(COPRODUCT_NOTE.into());
    Ok(VerificationReport::new("thm3.8", info, cases))
}

/// Descent of τ-rigid and support τ-tilting modules along `q`.
pub fn verify_cor_4_7(
    c: &CleftInstance,
    cat_r: &Catalog,
    cat_t: Option<&Catalog>,
    o: &VerifyOptions,
) -> Result<VerificationReport> {
    let cat_t = need_total(cat_t)?;
    let cases = descent(c, cat_r, cat_t, o, Descent::TauTilting)?;
    Ok(VerificationReport::new(
        "cor4.7",
        instance_info(c, Some(cat_r), Some(cat_t)),
        cases,
    ))
}

/// Lifting over a tensor ring `T_R(N)`, with the conditions on `F(Y)` split
/// into one condition per nonzero tensor power `N^{⊗i} ⊗ Y`.
pub fn verify_cor_4_4(
    c: &CleftInstance,
    n: usize,
    cat_r: &Catalog,
    cat_t: Option<&Catalog>,
    o: &VerifyOptions,
) -> Result<VerificationReport> {
    ensure_valid(c)?;
    let cat_t = need_total(cat_t)?;
    ensure_catalog(cat_r, c, false)?;
    ensure_catalog(cat_t, c, true)?;
    check_tilting_degree(n, o)?;
    let tr = c
        .tensor
        .as_ref()
        .ok_or_else(|| Error::InvalidInstance("instance is not a tensor ring".into()))?;
    let ys = basic_sums(cat_r, cat_r.len())?;
    let mut jobs: Vec<Job> = Vec::new();
    for (idx, y) in &ys {
        for kind in Pres::BOTH {
            jobs.push((
                format!("Y = {} ({} presentation)", label(idx), kind.name()),
                Box::new(move || {
                    let sigma = kind.of(y);
                    let (lsigma, lmin, ly) = lift(c, &sigma, o)?;
                    let powers: Vec<Module> = tr
                        .powers
                        .iter()
                        .map(|p| Ok(crate::rep::tensor(p, y)?.module))
                        .collect::<Result<_>>()?;
                    let mut gen_all = true;
                    let mut d_all = true;
                    for w in &powers {
                        gen_all &= in_gen(y, w)?;
                        d_all &= in_d_sigma(&sigma.sigma, w)?;
                    }
                    let ps_t = partial_silting(&ly, &lsigma, lmin, cat_t)?.holds;
                    let s_t = is_silting(&ly, &lsigma, cat_t)?.holds;
                    let ps_r = partial_silting(y, &sigma.sigma, sigma.minimal, cat_r)?.holds && d_all;
                    let s_r = is_silting(y, &sigma.sigma, cat_r)?.holds && gen_all;
                    let mut claims = vec![
                        Claim::iff("partial silting lifts", ps_t, ps_r),
                        Claim::iff("silting lifts", s_t, s_r),
                    ];
                    if kind == Pres::Minimal {
                        let mut gated = false;
                        for p in &tr.powers {
                            gated |= tor_obstruction(p, y, n)?.is_some();
                        }
                        if !gated {
                            let mut p_all = true;
                            for w in &powers {
                                p_all &= perp(y, w, n)?;
                            }
                            claims.push(Claim::iff(
                                "partial n-tilting lifts",
                                is_partial_n_tilting(&ly, n)?,
                                is_partial_n_tilting(y, n)? && p_all,
                            ));
                            claims.push(Claim::iff(
                                "n-tilting lifts",
                                is_n_tilting(&ly, n)?,
                                is_n_tilting(y, n)? && p_all,
                            ));
                        }
                    }
                    Ok(CaseRecord::checked(String::new(), claims))
                }),
            ));
        }
    }
    let mut info = instance_info(c, Some(cat_r), Some(cat_t));
    info.notes.push(format!("N is {}-nilpotent; n = {n}", tr.nilpotency));
    Ok(VerificationReport::new("cor4.4", info, run_jobs(jobs)?))
}

/// Lifting of support τ-tilting and τ-rigid modules, with the criterion
/// `Hom_R(M ⊗ Y, τY) = 0` cross-checked against `M ⊗ Y ∈ D_σ` for the
/// minimal presentation `σ` of `Y`. The support τ-tilting claim is also
/// checked with the extra condition that `M ⊗ Y` lives on the support of `Y`.
pub fn verify_cor_4_6(c: &CleftInstance, cat_r: &Catalog, o: &VerifyOptions) -> Result<VerificationReport> {
    ensure_valid(c)?;
    ensure_catalog(cat_r, c, false)?;
    let ys = basic_sums(cat_r, cat_r.len())?;
    let mut jobs: Vec<Job> = Vec::new();
    for (idx, y) in &ys {
        jobs.push((
            format!("Y = {}", label(idx)),
            Box::new(move || {
                let sigma = minimal_presentation(y);
                let (_, _, ly) = lift(c, &sigma, o)?;
                let fy = c.functor_f(y)?;
                let hom_ok = hom_dim(&fy, &tau(y))? == 0;
                let (supp_y, _) = support_vertices(y);
                let inside = support_vertices(&fy).0.iter().all(|v| supp_y.contains(v));
                let stt_l = is_support_tau_tilting(&ly, o.seed)?;
                let stt_y = is_support_tau_tilting(y, o.seed)?;
                Ok(CaseRecord::checked(
                    String::new(),
                    vec![
                        Claim::iff("support τ-tilting lifts", stt_l, stt_y && hom_ok),
                        Claim::iff(
                            "support τ-tilting lifts, with supp F(Y) ⊆ supp Y",
                            stt_l,
                            stt_y && hom_ok && inside,
                        ),
                        Claim::iff("τ-rigid lifts", is_tau_rigid(&ly)?, is_tau_rigid(y)? && hom_ok),
                        Claim::iff(
                            "M ⊗ Y ∈ D_σ iff Hom(M ⊗ Y, τY) = 0",
                            in_d_sigma(&sigma.sigma, &fy)?,
                            hom_ok,
                        ),
                    ],
                ))
            }),
        ));
    }
    Ok(VerificationReport::new(
        "cor4.6",
        instance_info(c, Some(cat_r), None),
        run_jobs(jobs)?,
    ))
}

/// Homology of `l` applied to a minimal resolution of `y`, in degree `j`.
fn lifted_homology(c: &CleftInstance, y: &Module, j: usize) -> Result<usize> {
    let res = resolution(y, j + 1);
    let lifted: Vec<ProjMap> = res
        .differentials
        .iter()
        .map(|d| c.lift_projmap(d))
        .collect::<Result<_>>()?;
    if j > lifted.len() {
        return Ok(0);
    }
    let term_dim = lifted[j - 1].source.dim();
    let out_rank = lifted[j - 1].morphism().rank();
    let in_rank = lifted.get(j).map_or(0, |d| d.morphism().rank());
    Ok(term_dim - out_rank - in_rank)
}

fn same_vertex_lift(c: &CleftInstance, p: &Projective, o: &VerifyOptions) -> Result<bool> {
    let base = Projective::new(&c.base, p.vertices().to_vec())?;
    iso(&c.functor_l(&base.module())?, &p.module(), o)
}

/// Structural identities of the cleft extension, exhaustively over both
/// catalogs, plus the dual statement for cosilting modules on the opposite
/// instance.
pub fn verify_lemma_suite(
    c: &CleftInstance,
    cat_r: &Catalog,
    cat_t: Option<&Catalog>,
    o: &VerifyOptions,
) -> Result<VerificationReport> {
    ensure_valid(c)?;
    let cat_t = need_total(cat_t)?;
    ensure_catalog(cat_r, c, false)?;
    ensure_catalog(cat_t, c, true)?;
    let op = c.opposite()?;
    let cat_r_op = cat_r.dual_over(&op.base);
    let cat_t_op = cat_t.dual_over(&op.total);
    let rs = &cat_r.indecomposables;
    let ts = &cat_t.indecomposables;
    let mut jobs: Vec<Job> = Vec::new();

    for (a, y) in rs.iter().enumerate() {
        for (b, x) in ts.iter().enumerate() {
            jobs.push((
                format!("adjunctions, Y = #{a}, X = #{b}"),
                Box::new(move || {
                    let ly = c.functor_l(y)?;
                    let ex = c.functor_e(x)?.x;
                    let qx = c.functor_q(&c.functor_e(x)?);
                    let iy = c.functor_i(y)?.module(c)?;
                    Ok(CaseRecord::checked(
                        String::new(),
                        vec![
                            Claim::equal("Hom(l Y, X) = Hom(Y, e X)", hom_dim(&ly, x)?, hom_dim(y, &ex)?),
                            Claim::equal("Hom(q X, Y) = Hom(X, i Y)", hom_dim(&qx, y)?, hom_dim(x, &iy)?),
                        ],
                    ))
                }),
            ));
        }
    }

    for (b, x) in ts.iter().enumerate() {
        jobs.push((
            format!("counit, round trip and resolution terms, A = #{b}"),
            Box::new(move || {
                let epi = match c.counit_mu(x) {
                    Ok(mu) => mu.rank(),
                    Err(Error::Inconsistent(_)) => 0,
                    Err(e) => return Err(e),
                };
                let mut claims = vec![
                    Claim::equal("μ_A is epic", epi, x.dim()),
                    Claim::iff("A is the pair module of e(A)", true, c.round_trip(x)?),
                ];
                let res = resolution(x, 2);
                let mut l_form = true;
                for p in &res.terms {
                    l_form &= same_vertex_lift(c, p, o)?;
                }
                claims.push(Claim::iff("resolution terms are l(P)", true, l_form));
                Ok(CaseRecord::checked(String::new(), claims))
            }),
        ));
    }

    jobs.push((
        "projectives of T are summands of l(R)".into(),
        Box::new(move || {
            let lr = c.functor_l(&Module::regular(&c.base))?;
            let parts = decompose(&lr, o.seed)?;
            let all_projective = parts.iter().all(is_projective);
            let mut found = 0;
            for p in indecomposable_projectives(&c.total) {
                let mut hit = false;
                for s in &parts {
                    if iso(s, &p, o)? {
                        hit = true;
                        break;
                    }
                }
                found += usize::from(hit);
            }
            Ok(CaseRecord::checked(
                String::new(),
                vec![
                    Claim::iff("summands of l(R) are projective", true, all_projective),
                    Claim::equal("indecomposable projectives found", found, c.total.num_vertices()),
                ],
            ))
        }),
    ));

    for (a, y) in rs.iter().enumerate() {
        jobs.push((
            format!("split sequence, unit and Tor, Y = #{a}"),
            Box::new(move || {
                let ly = c.functor_l(y)?;
                let ely = c.functor_e(&ly)?.x;
                let fy = c.functor_f(y)?;
                let sum = direct_sum(&[y.clone(), fy.clone()])?.module;
                let iy = c.functor_i(y)?.module(c)?;
                let mu = c.counit_mu(&iy)?;
                let g = mu.kernel().0;
                let egi = c.functor_e(&g)?.x;
                let eta_iso = c.unit_eta(y).is_ok();
                let mut claims = vec![
                    Claim::iff("e l(Y) ≅ Y ⊕ F(Y)", true, iso(&ely, &sum, o)?),
                    Claim::iff("e G i(Y) ≅ F(Y)", true, iso(&egi, &fy, o)?),
                    Claim::iff("q i(Y) → Y is an isomorphism", true, eta_iso),
                ];
                for j in 1..=2 {
                    claims.push(Claim::equal(
                        &format!("Tor_{j}(M, Y) = H_{j} l(P•)"),
                        tor_dim(c.m(), y, j)?,
                        lifted_homology(c, y, j)?,
                    ));
                }
                Ok(CaseRecord::checked(String::new(), claims))
            }),
        ));
    }

    for (a, y) in rs.iter().enumerate() {
        for kind in Pres::BOTH {
            jobs.push((
                format!("D membership along l, σ = {} presentation of #{a}", kind.name()),
                Box::new(move || {
                    let sigma = kind.of(y).sigma;
                    let lsigma = c.lift_projmap(&sigma)?;
                    let mut claims = Vec::new();
                    for (b, x) in ts.iter().enumerate() {
                        let ex = c.functor_e(x)?.x;
                        claims.push(Claim::iff(
                            &format!("#{b} ∈ D_l(σ) iff e(#{b}) ∈ D_σ"),
                            in_d_sigma(&lsigma, x)?,
                            in_d_sigma(&sigma, &ex)?,
                        ));
                    }
                    Ok(CaseRecord::checked(String::new(), claims))
                }),
            ));
        }
    }

    for (b, x) in ts.iter().enumerate() {
        for kind in Pres::BOTH {
            jobs.push((
                format!("D membership along q, δ = {} presentation of #{b}", kind.name()),
                Box::new(move || {
                    let delta = kind.of(x).sigma;
                    let qd = c.descend_projmap(&delta)?;
                    let mut claims = Vec::new();
                    for (a, y) in rs.iter().enumerate() {
                        let iy = c.functor_i(y)?.module(c)?;
                        claims.push(Claim::iff(
                            &format!("i(#{a}) ∈ D_δ iff #{a} ∈ D_q(δ)"),
                            in_d_sigma(&delta, &iy)?,
                            in_d_sigma(&qd, y)?,
                        ));
                    }
                    Ok(CaseRecord::checked(String::new(), claims))
                }),
            ));
        }
    }

    for (a, y) in rs.iter().enumerate() {
        for (b, y2) in rs.iter().enumerate() {
            jobs.push((
                format!("l is right exact, maps #{a} → #{b}"),
                Box::new(move || {
                    let mut claims = Vec::new();
                    for g in hom_basis(y, y2)? {
                        let lg = c.functor_l_map(&g)?;
                        let lhs = lg.cokernel().0;
                        let rhs = c.functor_l(&g.cokernel().0)?;
                        claims.push(Claim::iff("Coker l(g) ≅ l(Coker g)", true, iso(&lhs, &rhs, o)?));
                    }
                    Ok(CaseRecord::checked(String::new(), claims))
                }),
            ));
        }
    }

    for (a, x) in ts.iter().enumerate() {
        for (b, x2) in ts.iter().enumerate() {
            jobs.push((
                format!("q is right exact, maps #{a} → #{b}"),
                Box::new(move || {
                    let mut claims = Vec::new();
                    for g in hom_basis(x, x2)? {
                        let qg = c.functor_q_map(&g)?;
                        let lhs = qg.cokernel().0;
                        let rhs = c.functor_q(&c.functor_e(&g.cokernel().0)?);
                        claims.push(Claim::iff("Coker q(g) ≅ q(Coker g)", true, iso(&lhs, &rhs, o)?));
                        let eg: Morphism = c.functor_e_map(&g)?;
                        claims.push(Claim::equal(
                            "e is exact on kernels",
                            eg.kernel().0.dim(),
                            g.kernel().0.dim(),
                        ));
                    }
                    Ok(CaseRecord::checked(String::new(), claims))
                }),
            ));
        }
    }

    let op_ref = &op;
    let cat_r_op_ref = &cat_r_op;
    let cat_t_op_ref = &cat_t_op;
    for (idx, b) in basic_sums(cat_r, cat_r.len())?.into_iter() {
        jobs.push((
            format!("cosilting via duals, B = {}", label(&idx)),
            Box::new(move || {
                let db = dual_over(&b, &op_ref.base);
                let sigma = support_presentation(&db);
                let (lsigma, _, ldb) = lift(op_ref, &sigma, o)?;
                let lhs = is_silting(&ldb, &lsigma, cat_t_op_ref)?.holds;
                let fpb = c.functor_f_prime(&b)?;
                let rhs = is_cosilting(&b, cat_r)?.holds && in_cogen(&b, &fpb)?;
                let d_fpb = dual_over(&fpb, &op_ref.base);
                let fop = op_ref.functor_f(&db)?;
                let db_silting = is_silting(&db, &sigma.sigma, cat_r_op_ref)?.holds;
                Ok(CaseRecord::checked(
                    String::new(),
                    vec![
                        Claim::iff("D F'(B) ≅ F^op(D B)", true, iso(&d_fpb, &fop, o)?),
                        Claim::iff(
                            "B cosilting iff D B silting",
                            is_cosilting(&b, cat_r)?.holds,
                            db_silting,
                        ),
                        Claim::iff("r(B) cosilting lifts", lhs, rhs),
                    ],
                ))
            }),
        ));
    }

    Ok(VerificationReport::new(
        "lemmas",
        instance_info(c, Some(cat_r), Some(cat_t)),
        run_jobs(jobs)?,
    ))
}
