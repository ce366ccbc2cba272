//! The Boolean ring on `E_m` and the kernels `S_{m,k}`.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use super::{coprime, wit, Ctx, Sink, Val};
use crate::algebra;
use crate::quadratic::{class_kernel_op_unchecked, kernel_op_unchecked, scaled_idempotents, sqrt_structure, KernelOp};

/// ia02, ia03 and ia05-ia11 all come from one `verify_algebra` pass.
pub(super) fn ia(c: &Ctx<'_>, s: &mut Sink) {
    let id = s.theorem;
    let mut seen = false;
    for law in c.algebra().laws.iter().filter(|l| l.law.starts_with(id)) {
        seen = true;
        let cx = law.counterexample.as_ref().map(|w| w.iter().map(|&(k, v)| (k, Val::from(v))).collect());
        s.absorb(law.checked, law.law, cx);
    }
    debug_assert!(seen, "no algebra law registered for {id}");
}

fn kernel<'c>(c: &'c Ctx<'_>, k: u64) -> &'c [u64] {
    &c.kernels()[(k - 1) as usize]
}

fn contains(set: &[u64], x: u64) -> bool {
    set.binary_search(&x).is_ok()
}

pub(super) fn sd02(c: &Ctx<'_>, s: &mut Sink) {
    let n = c.n();
    for k in 1..=n {
        if s.hyp(coprime(k, n)) {
            s.eq(scaled_idempotents(c.md(), k), kernel(c, k).to_vec(), "S_{m,k} = kE_m", || wit![k]);
        }
    }
}

pub(super) fn sd03(c: &Ctx<'_>, s: &mut Sink) {
    let (m, n) = (c.md(), c.n());
    let es = c.t.idempotents();
    for d in 1..=n {
        if !s.hyp(coprime(d, n)) {
            continue;
        }
        for a in 1..=n {
            let b = m.add(a, d);
            for &x in kernel(c, d) {
                let r = m.add(a, x);
                s.holds(m.mul(m.sub(r, a), m.sub(r, b)) == n, "a + S_{m,b−a} solves (x−a)(x−b) ≡ 0", || {
                    wit![a, b, r]
                });
                let hits = es.iter().filter(|&&e| m.add(m.mul(a, e), m.mul(b, m.sub(1, e))) == r).count() as u64;
                s.eq(1, hits, "unique e with r ≡ ae + bē", || wit![a, b, r]);
            }
        }
    }
}

pub(super) fn sd04(c: &Ctx<'_>, s: &mut Sink) {
    let (m, n) = (c.md(), c.n());
    if !s.hyp(n % 2 == 1) {
        return;
    }
    let es = c.t.idempotents();
    let mut roots: BTreeMap<u64, Vec<u64>> = BTreeMap::new();
    for x in 1..=n {
        roots.entry(m.mul(x, x)).or_default().push(x);
    }
    for (&a, rs) in &roots {
        if !s.hyp(coprime(a, n)) {
            continue;
        }
        for &r1 in rs {
            for &r2 in rs {
                let hits = es.iter().filter(|&&e| m.mul(r2, m.sub(m.add(e, e), 1)) == r1).count() as u64;
                s.eq(1, hits, "unique e with r1 ≡ r2(e − ē)", || wit![a, r1, r2]);
            }
        }
    }
}

pub(super) fn sd05(c: &Ctx<'_>, s: &mut Sink) {
    let (m, n) = (c.md(), c.n());
    if !s.hyp(n % 2 == 1 || (n % 4 == 0 && (n / 4) % 2 == 1)) {
        return;
    }
    let es = c.t.idempotents();
    let roots: Vec<u64> = (1..=n).filter(|&x| m.mul(x, x) == m.reduce(1)).collect();
    let mut image: Vec<u64> = es.iter().map(|&e| m.sub(m.add(e, e), 1)).collect();
    image.sort_unstable();
    image.dedup();
    s.eq(es.len() as u64, image.len() as u64, "e ↦ e − ē injective", || wit![]);
    s.eq(roots, image, "x² ≡ 1 ⟺ x ∈ {e − ē}", || wit![]);
}

const OPS: [KernelOp; 2] = [KernelOp::Circ, KernelOp::Otimes];

pub(super) fn sd07(c: &Ctx<'_>, s: &mut Sink) {
    let m = c.md();
    for k in 1..=c.n() {
        let sk = kernel(c, k);
        for &r in sk {
            s.holds(contains(sk, m.sub(k, r)), "r̄ ∈ S_{m,k}", || wit![k, r]);
            for &e in c.t.idempotents() {
                for op in OPS {
                    let x = kernel_op_unchecked(m, k, r, e, op);
                    s.holds(contains(sk, x), "r∘e, r⊗e ∈ S_{m,k}", || {
                        wit![k, r, e, otimes = op == KernelOp::Otimes]
                    });
                }
            }
        }
    }
}

pub(super) fn sd08(c: &Ctx<'_>, s: &mut Sink) {
    let m = c.md();
    for k in 1..=c.n() {
        let sk = kernel(c, k);
        for &e in c.t.idempotents() {
            let mut img: Vec<u64> = sk.iter().map(|&r| kernel_op_unchecked(m, k, r, e, KernelOp::Circ)).collect();
            img.sort_unstable();
            img.dedup();
            s.eq(sk.to_vec(), img, "S_{m,k} ∘ e = S_{m,k}", || wit![k, e]);
        }
    }
}

pub(super) fn sd10(c: &Ctx<'_>, s: &mut Sink) {
    let m = c.md();
    for &e in c.t.idempotents() {
        let se = kernel(c, e);
        for &r1 in se {
            for &r2 in se {
                for op in OPS {
                    let x = class_kernel_op_unchecked(m, e, r1, r2, op);
                    s.holds(contains(se, x), "r1∘r2, r1⊗r2 ∈ S_{m,e}", || {
                        wit![e, r1, r2, otimes = op == KernelOp::Otimes]
                    });
                }
            }
        }
    }
}

pub(super) fn sd11(c: &Ctx<'_>, s: &mut Sink) {
    let (m, n) = (c.md(), c.n());
    let scalars = [1, 2, n - 1, 7 % n + 1].map(|x| m.reduce(x));
    for &e in c.t.idempotents() {
        let class = c.class_of(e);
        for &r in kernel(c, e) {
            let rb = m.sub(e, r);
            let mix = |a: u64, b: u64| m.add(m.mul(a, r), m.mul(b, rb));
            for &a in class {
                for &b in class {
                    let x = mix(a, b);
                    for &cc in &scalars {
                        for &d in &scalars {
                            let lhs = m.mul(x, mix(cc, d));
                            s.eq(mix(m.mul(a, cc), m.mul(b, d)), lhs, "(ar+br̄)(cr+dr̄) ≡ (ac)r + (bd)r̄", || {
                                wit![e, r, a, b, c = cc, d]
                            });
                        }
                    }
                    for k in 1..=3 {
                        s.eq(mix(m.pow(a, k), m.pow(b, k)), m.pow(x, k), "(ar+br̄)^n ≡ a^n r + b^n r̄", || {
                            wit![e, r, a, b, n = k]
                        });
                    }
                }
            }
        }
    }
}

pub(super) fn sd12(c: &Ctx<'_>, s: &mut Sink) {
    let t = c.t;
    for &e in t.idempotents() {
        for &k in c.class_of(e) {
            let hit: Vec<u64> =
                kernel(c, k).iter().copied().filter(|&x| t.is_regular(x) && t.idem_class(x) == e).collect();
            s.eq(alloc::vec![k], hit, "S_{m,k} ∩ R^e = {k}", || wit![e, k]);
        }
    }
}

pub(super) fn sd13(c: &Ctx<'_>, s: &mut Sink) {
    let m = c.md();
    let es = c.t.idempotents();
    for k in 1..=c.n() {
        for &r in kernel(c, k) {
            let circ = |x: u64, e: u64| kernel_op_unchecked(m, k, x, e, KernelOp::Circ);
            let rb = m.sub(k, r);
            for &e in es {
                let bar = m.sub(k, circ(r, e));
                s.eq(bar, circ(r, algebra::complement(m, e)), "(r∘e)‾ = r∘ē", || wit![k, r, e]);
                s.eq(bar, circ(rb, e), "(r∘e)‾ = r̄∘e", || wit![k, r, e]);
            }
            for &e1 in es {
                for &e2 in es {
                    s.eq(
                        circ(r, algebra::circ(m, e1, e2)),
                        circ(circ(r, e1), e2),
                        "(r∘e1)∘e2 = r∘(e1∘e2)",
                        || wit![k, r, e1, e2],
                    );
                }
            }
        }
    }
}

pub(super) fn sd14(c: &Ctx<'_>, s: &mut Sink) {
    let (m, n) = (c.md(), c.n());
    let es = c.t.idempotents();
    for k in 1..=n {
        if !s.hyp(coprime(k, n)) {
            continue;
        }
        for &r in kernel(c, k) {
            for (i, &e1) in es.iter().enumerate() {
                for &e2 in &es[i + 1..] {
                    let same = kernel_op_unchecked(m, k, r, e1, KernelOp::Circ)
                        == kernel_op_unchecked(m, k, r, e2, KernelOp::Circ);
                    s.holds(!same, "r∘e1 = r∘e2 ⟹ e1 = e2", || wit![k, r, e1, e2]);
                }
            }
        }
    }
}

pub(super) fn sd15(c: &Ctx<'_>, s: &mut Sink) {
    let (m, n) = (c.md(), c.n());
    if !s.hyp(n % 2 == 1) {
        return;
    }
    for &e in c.t.idempotents() {
        let rep = sqrt_structure(m, e as i128).expect("odd modulus, idempotent e");
        s.eq(rep.expected_size, rep.size, "|S^R(2,e)| = 2^{ω(μ(e))}", || wit![e]);
        s.eq(rep.expected_product, rep.product, "∏ S^R(2,e) ≡ (−1)^{2^{ω(μ(e))−1}}·e", || wit![e]);
        s.eq(rep.size, rep.decompositions.len() as u64, "S^R(2,e) ⊆ {e(e0 − ē0)}", || wit![e]);
        if e == n {
            continue;
        }
        for &e0 in c.t.idempotents() {
            let d = m.sub(e0, algebra::complement(m, e0));
            let (x, y) = (m.mul(e, d), m.mul(e, m.sub(0, d)));
            s.holds(x != y, "e ≠ m ⟹ e(e0 − ē0) ≢ e(ē0 − e0)", || wit![e, e0]);
        }
    }
}
