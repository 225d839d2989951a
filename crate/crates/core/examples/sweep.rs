use std::time::Instant;

use cleftlab::harness::*;
use cleftlab::linalg::Fp;

fn main() {
    let f = Fp::default();
    let o = VerifyOptions::default();
    let mut names: Vec<&str> = SHIPPED.to_vec();
    names.push(TOR_OBSTRUCTION);
    for name in names {
        let c = shipped_instance(name, f).unwrap();
        let t0 = Instant::now();
        let (cr, ct) = instance_catalogs(&c, 3, 0, DEFAULT_ENUMERATION_BUDGET, name != TOR_OBSTRUCTION).unwrap();
        println!(
            "{name}: catalogs {} / {:?} in {:?}",
            cr.len(),
            ct.as_ref().map(|c| c.len()),
            t0.elapsed()
        );
        for st in Statement::ALL {
            if st.needs_total_catalog() && ct.is_none() {
                continue;
            }
            if st == Statement::TensorRingLift && c.tensor.is_none() {
                continue;
            }
            let t0 = Instant::now();
            match verify(st, &c, &cr, ct.as_ref(), 1, &o) {
                Ok(r) => print!("  [{:?}] {}", t0.elapsed(), r.render_summary()),
                Err(e) => println!("  {st}: error {e} [{:?}]", t0.elapsed()),
            }
        }
    }
}
