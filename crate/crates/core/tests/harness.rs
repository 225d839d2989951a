use std::sync::Arc;

use cleftlab::cleft::CleftInstance;
use cleftlab::error::Error;
use cleftlab::harness::*;
use cleftlab::linalg::Fp;
use cleftlab::rep::{find_isomorphism, IsoBudget, Module};
use cleftlab::silting::Catalog;

fn f() -> Fp {
    Fp::default()
}

fn setup(name: &str) -> (CleftInstance, Catalog, Catalog) {
    let c = shipped_instance(name, f()).unwrap();
    let (r, t) = instance_catalogs(&c, DEFAULT_CATALOG_BOUND, 0, DEFAULT_ENUMERATION_BUDGET, true).unwrap();
    (c, r, t.unwrap())
}

fn opts() -> VerifyOptions {
    VerifyOptions::default()
}

fn case<'a>(r: &'a VerificationReport, subject: &str) -> &'a CaseRecord {
    r.cases
        .iter()
        .find(|c| c.subject == subject)
        .unwrap_or_else(|| panic!("no case {subject:?}"))
}

fn claim<'a>(c: &'a CaseRecord, name: &str) -> &'a Claim {
    c.claims
        .iter()
        .find(|x| x.name == name)
        .unwrap_or_else(|| panic!("no claim {name:?}"))
}

fn index_of(cat: &Catalog, m: &Module) -> usize {
    cat.indecomposables
        .iter()
        .position(|x| find_isomorphism(x, m, 0, &IsoBudget::default()).unwrap().is_some())
        .expect("module in catalog")
}

#[test]
fn silting_lift_dual_numbers() {
    let (c, r, t) = setup("k-k");
    let rep = verify_thm_3_3(&c, &r, Some(&t), &opts()).unwrap();
    assert_eq!(rep.outcome(), Outcome::Pass);
    assert!(rep.cases.len() >= 2);
    // Y = k lifts to T regular, silting on both sides.
    let c0 = case(&rep, "Y = #0 (minimal presentation)");
    let s = claim(c0, "silting lifts");
    assert_eq!((s.lhs, s.rhs), (Side::Bool(true), Side::Bool(true)));
}

#[test]
fn silting_lift_trivial_extension_of_a2() {
    let (c, r, t) = setup("kA2-DR");
    let rep = verify_thm_3_3(&c, &r, Some(&t), &opts()).unwrap();
    assert_eq!(rep.outcome(), Outcome::Pass, "{}", rep.render_summary());
    assert_eq!(rep.cases.len(), 2 * 8);
    assert!(rep.non_vacuous() >= 7);
    assert!(rep
        .cases
        .iter()
        .all(|c| c.claims.iter().all(|x| x.kind == ClaimKind::Iff)));
    assert!(rep.instance.notes.iter().any(|n| n.contains("coproduct")));
}

#[test]
fn corrupted_instances_fail_before_verification() {
    let (c, r, t) = setup("kA2-DR");
    let mut bad = c.clone();
    let v = bad.theta.theta.get(0, 0);
    bad.theta.theta.set(0, 0, (v + 1) % 2);
    match verify_thm_3_3(&bad, &r, Some(&t), &opts()) {
        Err(Error::InvalidInstance(_)) => {}
        other => panic!("expected InvalidInstance, got {:?}", other.map(|r| r.outcome())),
    }
    let mut bad = c.clone();
    let v = bad.total.product_of_basis(3, 4)[0];
    bad.total = Arc::new(bad.total.with_structure_constant(3, 4, 0, v + 1));
    assert!(matches!(
        verify_cor_4_6(&bad, &r, &opts()),
        Err(Error::InvalidInstance(_))
    ));
}

#[test]
fn tilting_lift_on_tensor_ring_a2() {
    let (c, r, _) = setup("tensor-A2");
    let rep = verify_thm_3_5(&c, 1, &r, &opts()).unwrap();
    assert_eq!(rep.outcome(), Outcome::Pass);
    assert_eq!(rep.summary().skipped, 0);
    // X = R = S_1 ⊕ S_2 lifts to T, 1-tilting on both sides.
    let x = case(&rep, "X = #0+#1");
    let t = claim(x, "n-tilting lifts");
    assert_eq!((t.lhs, t.rhs), (Side::Bool(true), Side::Bool(true)));
}

#[test]
fn zero_tilting_lift_only_progenerators() {
    let (c, r, _) = setup("tensor-A2");
    let rep = verify_thm_3_5(&c, 0, &r, &opts()).unwrap();
    assert_eq!(rep.outcome(), Outcome::Pass);
    let both: Vec<&str> = rep
        .cases
        .iter()
        .filter(|c| claim(c, "n-tilting lifts").lhs == Side::Bool(true))
        .map(|c| c.subject.as_str())
        .collect();
    assert_eq!(both, vec!["X = #0+#1"]);
}

#[test]
fn tor_obstruction_cases_are_skipped() {
    let c = shipped_instance(TOR_OBSTRUCTION, f()).unwrap();
    let r = catalog_bruteforce(&c.base, 3, 0, DEFAULT_ENUMERATION_BUDGET).unwrap();
    let rep = verify_thm_3_5(&c, 1, &r, &opts()).unwrap();
    let k = index_of(&r, &Module::simple(&c.base, 0));
    let skipped: Vec<&CaseRecord> = rep.cases.iter().filter(|c| !c.is_checked()).collect();
    assert_eq!(skipped.len(), 2);
    for s in &skipped {
        assert!(s.subject.contains(&format!("#{k}")));
        match &s.status {
            CaseStatus::Skipped { reason } => assert!(reason.starts_with("Tor_1(M, X)")),
            CaseStatus::Checked => unreachable!(),
        }
    }
    assert_eq!(rep.outcome(), Outcome::Pass);
}

#[test]
fn tilting_lift_needs_nilpotency() {
    let (mut c, r, _) = setup("tensor-A2");
    c.theta.nilpotency_index = None;
    assert!(matches!(
        verify_thm_3_5(&c, 1, &r, &opts()),
        Err(Error::InvalidInstance(_))
    ));
}

#[test]
fn silting_descent_on_shipped_instances() {
    for name in SHIPPED {
        let (c, r, t) = setup(name);
        let rep = verify_thm_3_8(&c, &r, Some(&t), &opts()).unwrap();
        assert_eq!(rep.outcome(), Outcome::Pass, "{}", rep.render_summary());
        assert!(rep
            .cases
            .iter()
            .all(|c| c.claims.iter().all(|x| x.kind == ClaimKind::Implies)));
        let rep = verify_cor_4_7(&c, &r, Some(&t), &opts()).unwrap();
        assert_eq!(rep.outcome(), Outcome::Pass, "{}", rep.render_summary());
    }
}

#[test]
fn regular_module_descends_to_regular() {
    let (c, r, t) = setup("kA2-DR");
    let rep = verify_thm_3_8(&c, &r, Some(&t), &opts()).unwrap();
    let regular = cleftlab::rep::decompose(&Module::regular(&c.total), 0).unwrap();
    let mut idx: Vec<usize> = regular.iter().map(|p| index_of(&t, p)).collect();
    idx.sort_unstable();
    let label = idx.iter().map(|i| format!("#{i}")).collect::<Vec<_>>().join("+");
    let rec = case(&rep, &format!("A = {label} (minimal presentation)"));
    let s = claim(rec, "silting descends");
    assert_eq!((s.lhs, s.rhs), (Side::Bool(true), Side::Bool(true)));
}

#[test]
fn non_silting_modules_are_skipped_in_descent() {
    let (c, r, t) = setup("kA2-DR");
    let rep = verify_thm_3_8(&c, &r, Some(&t), &opts()).unwrap();
    for rec in &rep.cases {
        let premise = rec.claims.iter().any(|x| x.lhs == Side::Bool(true));
        assert_eq!(rec.is_checked(), premise, "{}", rec.subject);
    }
}

#[test]
fn tau_tilting_lift_dual_numbers() {
    let (c, r, _) = setup("k-k");
    let rep = verify_cor_4_6(&c, &r, &opts()).unwrap();
    assert_eq!(rep.outcome(), Outcome::Pass);
    let rec = case(&rep, "Y = #0");
    let s = claim(rec, "support τ-tilting lifts");
    assert_eq!((s.lhs, s.rhs), (Side::Bool(true), Side::Bool(true)));
    let zero = case(&rep, "Y = 0");
    assert!(zero.claims.iter().all(|x| x.holds && x.lhs == Side::Bool(true)));
}

#[test]
fn tau_tilting_lift_on_trivial_extension_of_a2() {
    let (c, r, _) = setup("kA2-DR");
    let rep = verify_cor_4_6(&c, &r, &opts()).unwrap();
    assert_eq!(rep.cases.len(), 8);
    let s1 = index_of(&r, &Module::simple(&c.base, 0));
    let rec = case(&rep, &format!("Y = #{s1}"));
    assert!(rec.claims.iter().all(|x| x.holds));
    assert_eq!(claim(rec, "support τ-tilting lifts").lhs, Side::Bool(true));
    // AIR bridge and the τ-rigid half hold on every case.
    for rec in &rep.cases {
        assert!(claim(rec, "τ-rigid lifts").holds, "{}", rec.subject);
        assert!(
            claim(rec, "M ⊗ Y ∈ D_σ iff Hom(M ⊗ Y, τY) = 0").holds,
            "{}",
            rec.subject
        );
        assert!(claim(rec, "support τ-tilting lifts, with supp F(Y) ⊆ supp Y").holds);
    }
    // Y = P(2) = S_2: support τ-tilting with τY = 0, yet l(Y) = T e_2 is a
    // sincere indecomposable projective over a two-vertex algebra.
    let s2 = index_of(&r, &Module::simple(&c.base, 1));
    let rec = case(&rep, &format!("Y = #{s2}"));
    let s = claim(rec, "support τ-tilting lifts");
    assert_eq!((s.lhs, s.rhs), (Side::Bool(false), Side::Bool(true)));
    assert_eq!(rep.counterexamples(), vec![rec.index]);
    assert_eq!(rep.outcome(), Outcome::Fail);
}

#[test]
fn tensor_ring_lift() {
    for name in ["tensor-A2", "tensor-A3"] {
        let (c, r, t) = setup(name);
        let rep = verify_cor_4_4(&c, 1, &r, Some(&t), &opts()).unwrap();
        assert_eq!(rep.outcome(), Outcome::Pass, "{}", rep.render_summary());
    }
    let (c, r, t) = setup("kA2-DR");
    assert!(matches!(
        verify_cor_4_4(&c, 1, &r, Some(&t), &opts()),
        Err(Error::InvalidInstance(_))
    ));
}

#[test]
fn lemma_suite_on_shipped_instances() {
    for name in SHIPPED {
        let (c, r, t) = setup(name);
        let rep = verify_lemma_suite(&c, &r, Some(&t), &opts()).unwrap();
        assert_eq!(rep.outcome(), Outcome::Pass, "{}", rep.render_summary());
        assert_eq!(rep.summary().skipped, 0);
    }
}

#[test]
fn reports_are_deterministic() {
    let (c, r, t) = setup("triangular-kA2-k-P1");
    for st in Statement::ALL {
        if st == Statement::TensorRingLift {
            continue;
        }
        let a = verify(st, &c, &r, Some(&t), 1, &opts()).unwrap().to_json_lines();
        let b = verify(st, &c, &r, Some(&t), 1, &opts()).unwrap().to_json_lines();
        assert_eq!(a, b, "{st}");
        let n = a.lines().count();
        let last: serde_json::Value = serde_json::from_str(a.lines().last().unwrap()).unwrap();
        assert_eq!(last["kind"], "summary");
        assert_eq!(last["cases"].as_u64().unwrap() as usize, n - 1);
    }
}

#[test]
fn statement_names_round_trip() {
    for st in Statement::ALL {
        assert_eq!(st.name().parse::<Statement>().unwrap(), st);
        assert_eq!(serde_json::to_string(&st).unwrap(), format!("\"{}\"", st.name()));
    }
    assert!("thm9.9".parse::<Statement>().is_err());
}

#[test]
fn catalog_examples() {
    let k = Arc::new(cleftlab::algebra::Algebra::ground(f()));
    let c = catalog_bruteforce(&k, 3, 0, DEFAULT_ENUMERATION_BUDGET).unwrap();
    assert_eq!(c.indecomposables.iter().map(Module::dim).collect::<Vec<_>>(), vec![1]);

    let d = Arc::new(cleftlab::algebra::Algebra::dual_numbers(f()));
    let c = catalog_bruteforce(&d, 2, 0, DEFAULT_ENUMERATION_BUDGET).unwrap();
    assert_eq!(
        c.indecomposables.iter().map(Module::dim).collect::<Vec<_>>(),
        vec![1, 2]
    );

    let a2 = catalog_type_a(2, &[true], f()).unwrap();
    let bf = catalog_bruteforce(&a2.algebra, 2, 0, DEFAULT_ENUMERATION_BUDGET).unwrap();
    assert_eq!(bf.len(), 3);
    for m in &a2.indecomposables {
        index_of(&bf, m);
    }
    assert_eq!(catalog_type_a(1, &[], f()).unwrap().len(), 1);
    assert_eq!(catalog_type_a(3, &[false, true], f()).unwrap().len(), 6);
}

#[test]
fn support_tau_tilting_enumeration_matches_silting_sweep() {
    let cat = catalog_type_a(2, &[true], f()).unwrap();
    let stt = enumerate_support_tau_tilting(&cat, 0).unwrap();
    assert_eq!(stt.len(), 5);
    assert!(support_tau_tilting_silting_mismatches(&cat, 0).unwrap().is_empty());
    let k = Arc::new(cleftlab::algebra::Algebra::ground(f()));
    let ck = catalog_bruteforce(&k, 3, 0, DEFAULT_ENUMERATION_BUDGET).unwrap();
    let dims: Vec<usize> = enumerate_support_tau_tilting(&ck, 0)
        .unwrap()
        .iter()
        .map(|(_, m)| m.dim())
        .collect();
    assert_eq!(dims, vec![0, 1]);
}
