use std::sync::Arc;

use crate::algebra::{Algebra, Quiver};
use crate::cleft::{tensor_ring, triangular_matrix, trivial_extension, CleftInstance};
use crate::error::{Error, Result};
use crate::linalg::Fp;
use crate::rep::{Bimodule, Module};

/// Names accepted by [`shipped_instance`], in the order of [`shipped_instances`].
pub const SHIPPED: [&str; 5] = ["k-k", "kA2-DR", "tensor-A2", "tensor-A3", "triangular-kA2-k-P1"];

/// `R = k[x]/x²`, `M = R/rad R`: `Tor_1(M, X) ≠ 0` for the simple `X`.
pub const TOR_OBSTRUCTION: &str = "tor-obstruction";

pub fn shipped_instance(name: &str, f: Fp) -> Result<CleftInstance> {
    match name {
        "k-k" => {
            let k = Arc::new(Algebra::ground(f));
            trivial_extension(name, &k, Bimodule::regular(&k))
        }
        "kA2-DR" => {
            let r = Arc::new(Algebra::linear_a(2, f));
            trivial_extension(name, &r, Bimodule::dual_regular(&r))
        }
        "tensor-A2" => {
            let r = Arc::new(Algebra::semisimple(2, f));
            let n = Bimodule::arrows(&r, &Quiver::linear_a(2))?;
            tensor_ring(name, &r, &n, 2)
        }
        "tensor-A3" => {
            let r = Arc::new(Algebra::semisimple(3, f));
            let n = Bimodule::arrows(&r, &Quiver::linear_a(3))?;
            tensor_ring(name, &r, &n, 3)
        }
        "triangular-kA2-k-P1" => {
            let a = Arc::new(Algebra::linear_a(2, f));
            let k = Arc::new(Algebra::ground(f));
            let p1 = Bimodule::from_left_module(&Module::projective(&a, 0), &k)?;
            triangular_matrix(name, &a, &k, &p1)
        }
        TOR_OBSTRUCTION => {
            let r = Arc::new(Algebra::dual_numbers(f));
            let s = Module::simple(&r, 0);
            let m = Bimodule::new(&r, &r, 1, s.actions().to_vec(), s.actions().to_vec())?;
            trivial_extension(name, &r, m)
        }
        _ => Err(Error::Unsupported(format!("no shipped instance named {name:?}"))),
    }
}

pub fn shipped_instances(f: Fp) -> Result<Vec<CleftInstance>> {
    SHIPPED.iter().map(|n| shipped_instance(n, f)).collect()
}
