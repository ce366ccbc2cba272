mod common;

use idem_core::arith::gcd;
use idem_core::idempotent::enumerate_idempotents;
use idem_core::quadratic::{
    class_kernel_op, kernel, kernel_op, root_decompose, scaled_idempotents, sqrt_structure, KernelOp,
};
use idem_core::{oracle, Modulus};
use proptest::prelude::*;

fn md(n: u64) -> Modulus {
    Modulus::new(n).unwrap()
}

#[test]
fn kernel_examples() {
    let m = md(12);
    assert_eq!(kernel(&m, 5).solutions, [5, 8, 9, 12]);
    assert_eq!(kernel(&m, 1).solutions, [1, 4, 9, 12]);
    assert_eq!(kernel(&m, 0).solutions, [6, 12]);
    assert_eq!(kernel(&m, -7).solutions, [5, 8, 9, 12]);
}

#[test]
fn operator_examples() {
    let m = md(12);
    assert_eq!(kernel_op(&m, 5, 8, 4, KernelOp::Circ).unwrap(), 5);
    assert_eq!(kernel_op(&m, 5, 8, 4, KernelOp::Otimes).unwrap(), 8);
    assert_eq!(kernel_op(&m, 5, 9, 1, KernelOp::Circ).unwrap(), 9);
    assert!(kernel_op(&m, 5, 7, 4, KernelOp::Circ).is_err());
    assert_eq!(class_kernel_op(&m, 1, 4, 9, KernelOp::Circ).unwrap(), 12);
    assert_eq!(class_kernel_op(&m, 1, 4, 9, KernelOp::Otimes).unwrap(), 1);
    assert_eq!(class_kernel_op(&m, 1, 4, 4, KernelOp::Circ).unwrap(), 1);
    assert!(class_kernel_op(&m, 1, 2, 4, KernelOp::Circ).is_err());
}

#[test]
fn decomposition_examples() {
    let m = md(15);
    assert_eq!(root_decompose(&m, 2, -2, 7).unwrap(), 6);
    assert_eq!(root_decompose(&m, 2, -2, 2).unwrap(), 1);
    assert_eq!(root_decompose(&m, 2, -2, -2).unwrap(), 15);
    assert!(root_decompose(&m, 2, 5, 2).is_err());
    assert!(root_decompose(&m, 2, -2, 3).is_err());
}

#[test]
fn sqrt_examples() {
    let r = sqrt_structure(&md(15), 1).unwrap();
    assert_eq!(r.roots, [1, 4, 11, 14]);
    assert_eq!((r.size, r.expected_size, r.product), (4, 4, 1));
    let r = sqrt_structure(&md(9), 1).unwrap();
    assert_eq!(r.roots, [1, 8]);
    assert_eq!(r.product, 8);
    let r = sqrt_structure(&md(21), 21).unwrap();
    assert_eq!((r.roots.as_slice(), r.size), (&[21][..], 1));
    assert!(sqrt_structure(&md(12), 1).is_err());
    assert!(sqrt_structure(&md(15), 2).is_err());
}

#[test]
fn sqrt_structure_on_odd_moduli() {
    for n in (1..=299).step_by(2) {
        let m = md(n);
        for &e in enumerate_idempotents(&m).elements() {
            let r = sqrt_structure(&m, e as i128).unwrap();
            assert!(r.holds(), "m={n} e={e}: {r:?}");
            for &(root, e0) in &r.decompositions {
                assert_eq!(m.mul(e, m.sub(e0, m.sub(1, e0))), root);
            }
        }
    }
}

#[test]
fn kernels_match_oracle() {
    for n in 1..=300 {
        let m = md(n);
        for k in 1..=n {
            let s = kernel(&m, k as i128);
            assert_eq!(s.solutions, oracle::kernel_raw(n, k), "S_{{{n},{k}}}");
            for &x in &s.solutions {
                assert!(s.contains(s.rbar(&m, x)));
            }
            if gcd(k, n) == 1 {
                assert_eq!(s.solutions, scaled_idempotents(&m, k));
                assert_eq!(s.solutions.len(), 1 << m.omega());
            }
        }
    }
}

#[test]
fn registry_quadratic_theorems() {
    common::assert_clean(
        1,
        300,
        &["sd02", "sd03", "sd04", "sd05", "sd07", "sd08", "sd10", "sd12", "sd13", "sd14", "sd15"],
    );
}

#[test]
fn registry_mixing_identity() {
    // sd11 runs over all a, b ∈ R_m^e and is the slow one.
    common::assert_clean(1, 200, &["sd11"]);
}

proptest! {
    #[test]
    fn decomposition_round_trips(n in 2u64..=600, a in -600i64..600, d in 1u64..600, pick in any::<prop::sample::Index>()) {
        let m = md(n);
        prop_assume!(gcd(d % n, n) == 1);
        let b = a as i128 + d as i128;
        let roots = kernel(&m, d as i128).solutions;
        let r = m.canon(a as i128 + roots[pick.index(roots.len())] as i128);
        let e = root_decompose(&m, a as i128, b, r as i128).unwrap();
        let (ca, cb) = (m.canon(a as i128), m.canon(b));
        prop_assert_eq!(m.add(m.mul(ca, e), m.mul(cb, m.sub(1, e))), r);
    }
}
