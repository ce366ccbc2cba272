//! The kernels `S_{m,k} = {x : x² ≡ kx}` and square roots of idempotents.

use alloc::vec::Vec;

use crate::arith::{gcd, Modulus};
use crate::idempotent::enumerate_idempotents;
use crate::structure::regular_by_divisibility;
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadraticKernel {
    pub m: u64,
    pub k: u64,
    pub solutions: Vec<u64>,
}

impl QuadraticKernel {
    /// `r̄ = k − r`.
    pub fn rbar(&self, m: &Modulus, r: u64) -> u64 {
        m.sub(self.k, r)
    }

    pub fn contains(&self, x: u64) -> bool {
        self.solutions.binary_search(&x).is_ok()
    }
}

/// `S_{m,k}` by a full scan; `k = m` is the kernel of `x² ≡ 0`.
pub fn kernel(m: &Modulus, k: i128) -> QuadraticKernel {
    let k = m.canon(k);
    let solutions = (1..=m.value()).filter(|&x| m.mul(x, x) == m.mul(k, x)).collect();
    QuadraticKernel { m: m.value(), k, solutions }
}

/// `k·E_m mod m`, sorted; equals `S_{m,k}` when `(k, m) = 1`.
pub fn scaled_idempotents(m: &Modulus, k: u64) -> Vec<u64> {
    let mut v: Vec<u64> = enumerate_idempotents(m).elements().iter().map(|&e| m.mul(k, e)).collect();
    v.sort_unstable();
    v.dedup();
    v
}

/// The unique idempotent `e` with `r ≡ ae + bē`, for a root `r` of
/// `(x − a)(x − b) ≡ 0` with `(b − a, m) = 1`.
pub fn root_decompose(m: &Modulus, a: i128, b: i128, r: i128) -> Result<u64> {
    let (ca, cb, cr) = (m.canon(a), m.canon(b), m.canon(r));
    if gcd(m.sub(cb, ca) % m.value(), m.value()) != 1 {
        return Err(Error::Precondition("(b − a, m) must be 1"));
    }
    if m.mul(m.sub(cr, ca), m.sub(cr, cb)) != m.value() {
        return Err(Error::Precondition("r must solve (x − a)(x − b) ≡ 0"));
    }
    let es = enumerate_idempotents(m);
    let hits: Vec<u64> =
        es.elements().iter().copied().filter(|&e| m.add(m.mul(ca, e), m.mul(cb, m.sub(1, e))) == cr).collect();
    match hits.as_slice() {
        [e] => Ok(*e),
        _ => Err(Error::Precondition("no unique decomposition; arithmetic invariant broken")),
    }
}

/// `S_m^R(2, e)` for odd `m`, with the sd15 parametrization and formulas.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SqrtReport {
    pub m: u64,
    pub e: u64,
    pub roots: Vec<u64>,
    /// `(r, e0)` with `r ≡ e(e0 − ē0)`, choosing `e0 ≡ 1` where `e` vanishes.
    pub decompositions: Vec<(u64, u64)>,
    pub size: u64,
    /// `2^{ω(μ_m(e))}`.
    pub expected_size: u64,
    pub product: u64,
    /// `(−1)^{2^{ω(μ_m(e))−1}}·e`.
    pub expected_product: u64,
}

impl SqrtReport {
    pub fn holds(&self) -> bool {
        self.size == self.expected_size
            && self.product == self.expected_product
            && self.decompositions.len() == self.roots.len()
    }
}

/// `(−1)^{2^{w−1}}`: negative exactly when `w = 1`.
pub fn sign_exponent_is_odd(w: u32) -> bool {
    w == 1
}

pub fn sqrt_structure(m: &Modulus, e: i128) -> Result<SqrtReport> {
    let n = m.value();
    if n % 2 == 0 {
        return Err(Error::EvenModulus { m: n });
    }
    let e = m.canon(e);
    if !m.is_idempotent(e) {
        return Err(Error::NotIdempotent { m: n, value: e });
    }
    let roots: Vec<u64> = (1..=n).filter(|&x| m.mul(x, x) == e && regular_by_divisibility(m, x)).collect();
    let es = enumerate_idempotents(m);
    let ebar = m.sub(1, e);
    let decompositions = roots
        .iter()
        .filter_map(|&r| {
            es.elements()
                .iter()
                .copied()
                .find(|&e0| m.mul(ebar, e0) == m.reduce(ebar) && m.mul(e, m.sub(e0, m.sub(1, e0))) == r)
                .map(|e0| (r, e0))
        })
        .collect();
    let w = m.components().iter().filter(|c| e % c.q != 0).count() as u32;
    let product = roots.iter().fold(m.reduce(1), |acc, &r| m.mul(acc, r));
    let expected_product = if sign_exponent_is_odd(w) { m.sub(0, e) } else { e };
    Ok(SqrtReport {
        m: n,
        e,
        size: roots.len() as u64,
        roots,
        decompositions,
        expected_size: 1u64 << w,
        product,
        expected_product,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KernelOp {
    Circ,
    Otimes,
}

/// `r∘e = re + r̄ē` or `r⊗e = k − r̄ē` for `r ∈ S_{m,k}`, `e ∈ E_m`.
pub fn kernel_op(m: &Modulus, k: i128, r: i128, e: i128, which: KernelOp) -> Result<u64> {
    let kern = kernel(m, k);
    let (r, e) = (m.canon(r), m.canon(e));
    if !kern.contains(r) {
        return Err(Error::Precondition("r must lie in S_{m,k}"));
    }
    if !m.is_idempotent(e) {
        return Err(Error::NotIdempotent { m: m.value(), value: e });
    }
    Ok(kernel_op_unchecked(m, kern.k, r, e, which))
}

pub fn kernel_op_unchecked(m: &Modulus, k: u64, r: u64, e: u64, which: KernelOp) -> u64 {
    let rbar = m.sub(k, r);
    let ebar = m.sub(1, e);
    match which {
        KernelOp::Circ => m.add(m.mul(r, e), m.mul(rbar, ebar)),
        KernelOp::Otimes => m.sub(k, m.mul(rbar, ebar)),
    }
}

/// On `S_{m,e}`: `r1∘r2 = r1r2 + r̄1r̄2`, `r1⊗r2 = e − r̄1r̄2`,
/// bars taken as `e − ·`.
pub fn class_kernel_op(m: &Modulus, e: i128, r1: i128, r2: i128, which: KernelOp) -> Result<u64> {
    let e = m.canon(e);
    if !m.is_idempotent(e) {
        return Err(Error::NotIdempotent { m: m.value(), value: e });
    }
    let kern = kernel(m, e as i128);
    let (r1, r2) = (m.canon(r1), m.canon(r2));
    if !kern.contains(r1) || !kern.contains(r2) {
        return Err(Error::Precondition("operands must lie in S_{m,e}"));
    }
    Ok(class_kernel_op_unchecked(m, e, r1, r2, which))
}

pub fn class_kernel_op_unchecked(m: &Modulus, e: u64, r1: u64, r2: u64, which: KernelOp) -> u64 {
    let (b1, b2) = (m.sub(e, r1), m.sub(e, r2));
    match which {
        KernelOp::Circ => m.add(m.mul(r1, r2), m.mul(b1, b2)),
        KernelOp::Otimes => m.sub(e, m.mul(b1, b2)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn md(n: u64) -> Modulus {
        Modulus::new(n).unwrap()
    }

    #[test]
    fn kernel_examples() {
        let m = md(12);
        assert_eq!(kernel(&m, 5).solutions, [5, 8, 9, 12]);
        assert_eq!(scaled_idempotents(&m, 5), [5, 8, 9, 12]);
        assert_eq!(kernel(&m, 1).solutions, [1, 4, 9, 12]);
        assert_eq!(kernel(&m, 0).solutions, [6, 12]);
        assert_eq!(kernel(&m, 0).k, 12);
    }

    #[test]
    fn decompose_examples() {
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
        assert_eq!((r.size, r.expected_size, r.product, r.expected_product), (4, 4, 1, 1));
        let r = sqrt_structure(&md(9), 1).unwrap();
        assert_eq!(r.roots, [1, 8]);
        assert_eq!((r.product, r.expected_product), (8, 8));
        let r = sqrt_structure(&md(45), 45).unwrap();
        assert_eq!((r.roots.as_slice(), r.expected_size), (&[45][..], 1));
        assert!(r.holds());
        assert!(matches!(sqrt_structure(&md(12), 1), Err(Error::EvenModulus { .. })));
    }

    #[test]
    fn kernel_op_examples() {
        let m = md(12);
        assert_eq!(kernel_op(&m, 5, 8, 4, KernelOp::Circ).unwrap(), 5);
        assert_eq!(kernel_op(&m, 5, 8, 4, KernelOp::Otimes).unwrap(), 8);
        assert_eq!(kernel_op(&m, 5, 9, 1, KernelOp::Circ).unwrap(), 9);
        assert!(kernel_op(&m, 5, 7, 4, KernelOp::Circ).is_err());
        assert_eq!(class_kernel_op(&m, 1, 4, 9, KernelOp::Circ).unwrap(), 12);
        assert_eq!(class_kernel_op(&m, 1, 4, 9, KernelOp::Otimes).unwrap(), 1);
        assert_eq!(class_kernel_op(&m, 1, 4, 4, KernelOp::Circ).unwrap(), 1);
    }
}
