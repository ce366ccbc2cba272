//! Binomial congruences and generalized primitive roots.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use super::{coprime, wit, Ctx, Sink};
use crate::arith::{gcd, inv_mod, lcm};
use crate::functions::ClassOrders;
use crate::structure::StructureTable;

/// Exponent range `1..=K` for the per-`k` statements.
pub const K: u64 = 30;

fn canon(x: u64, d: u64) -> u64 {
    match x % d {
        0 => d,
        r => r,
    }
}

/// `M(k, ·)` images for `k = 1..=K`, indexed `[k − 1][a − 1]`.
fn images(c: &Ctx<'_>) -> Vec<Vec<bool>> {
    (1..=K).map(|k| c.image(k)).collect()
}

pub(super) fn bc01(c: &Ctx<'_>, s: &mut Sink) {
    let om = c.omega();
    for k in 1..=K {
        let img = c.image(k);
        for &a in c.atlas().regular() {
            let verdict = om.solvable_bc01(k, a).expect("regular");
            s.eq(img[(a - 1) as usize], verdict, "M(k,a) ⟺ a^{ω/(k,ω)} ∈ E", || wit![a, k]);
        }
    }
}

pub(super) fn bc02(c: &Ctx<'_>, s: &mut Sink) {
    let (t, om) = (c.t, c.omega());
    let phi = c.md().phi();
    let lhs = c.atlas().regular().iter().any(|&a| om.omega(a).expect("regular") == phi);
    let one = c.md().reduce(1);
    let cyclic = c.class_of(one).iter().any(|&u| t.order(u) == phi);
    s.eq(cyclic, lhs, "∃a: ω(a) = φ(m) ⟺ R_m^1 cyclic", || wit![]);
}

pub(super) fn bc03(c: &Ctx<'_>, s: &mut Sink) {
    let m = c.md();
    let phi = m.phi();
    for (i, img) in images(c).iter().enumerate() {
        let k = i as u64 + 1;
        for a in 1..=c.n() {
            if s.hyp(img[(a - 1) as usize]) {
                s.holds(m.is_idempotent(m.pow(a, phi / gcd(k, phi))), "a^{φ/(k,φ)} ∈ E", || wit![a, k]);
            }
        }
    }
}

pub(super) fn bc04(c: &Ctx<'_>, s: &mut Sink) {
    let (m, t) = (c.md(), c.t);
    for &b in c.atlas().regular() {
        let nb = t.order(b);
        let mut a = b;
        for ind in 1..=nb {
            for k in 1..=K {
                let g = gcd(k, nb);
                if !s.hyp(ind % g == 0) {
                    continue;
                }
                // Solve kJ ≡ ind (mod |b|); then (b^J)^k ≡ b^ind ≡ a.
                let n = nb / g;
                let j = if n == 1 {
                    1
                } else {
                    let inv = inv_mod((k / g) % n, n).expect("k/g is a unit mod |b|/g");
                    canon((ind / g) % n * inv % n, n)
                };
                let x = m.pow(b, j);
                s.holds(m.pow(x, k) == a, "(b^J)^k ≡ a", || wit![a, b, k, x]);
            }
            a = m.mul(a, b);
        }
    }
}

pub(super) fn bc05(c: &Ctx<'_>, s: &mut Sink) {
    let (m, t) = (c.md(), c.t);
    let imgs = images(c);
    let mut order_tables: BTreeMap<u64, StructureTable> = BTreeMap::new();
    for &b in c.atlas().regular() {
        let nb = t.order(b);
        let tb =
            order_tables.entry(nb).or_insert_with(|| StructureTable::build(nb, u64::MAX).expect("orders are positive"));
        let pb: Vec<u64> = {
            let mut v = Vec::with_capacity(nb as usize);
            let mut x = b;
            for _ in 0..nb {
                v.push(x);
                x = m.mul(x, b);
            }
            v
        };
        for k in 1..=K {
            let step = nb / gcd(k, nb);
            for l in 1..=nb {
                let e = canon(k * l % nb, nb);
                if !s.hyp(tb.is_idempotent(e)) {
                    continue;
                }
                for (i, &a) in pb.iter().enumerate() {
                    let ind = i as u64 + 1;
                    let r = canon(ind, nb);
                    let hyp = tb.is_regular(r) && tb.idem_class(r) == e && imgs[(k - 1) as usize][(a - 1) as usize];
                    if !s.hyp(hyp) {
                        continue;
                    }
                    for n in 1..=3u64 {
                        let x = m.pow(b, l * ind + n * step);
                        s.holds(m.pow(x, k) == a, "b^{l·ind + n|b|/(k,|b|)} ∈ S(k,a)", || wit![a, b, k, l, n]);
                    }
                }
            }
        }
    }
}

/// `|S^R(k, y)|` for every `y`, indexed by `y − 1`.
fn regular_root_counts(c: &Ctx<'_>, k: u64) -> Vec<u64> {
    let m = c.md();
    let mut cnt = vec![0u64; c.n() as usize];
    for &x in c.atlas().regular() {
        cnt[(m.pow(x, k) - 1) as usize] += 1;
    }
    cnt
}

pub(super) fn bc06(c: &Ctx<'_>, s: &mut Sink) {
    let t = c.t;
    let orders: Vec<ClassOrders> =
        t.idempotents().iter().map(|&e| ClassOrders::new(t, e).expect("idempotent")).collect();
    let imgs = images(c);
    for k in 1..=K {
        let cnt = regular_root_counts(c, k);
        for &a in c.atlas().regular() {
            if !s.hyp(imgs[(k - 1) as usize][(a - 1) as usize]) {
                continue;
            }
            let e = t.idem_class(a);
            let slot = t.idempotents().binary_search(&e).expect("class");
            s.eq(cnt[(e - 1) as usize], cnt[(a - 1) as usize], "|S^R(k,a)| = |S^R(k,e)|", || wit![a, k]);
            s.eq(orders[slot].rho(k), cnt[(a - 1) as usize], "|S^R(k,a)| = ρ^e(k)", || wit![a, k]);
        }
    }
}

pub(super) fn bc07(c: &Ctx<'_>, s: &mut Sink) {
    let imgs = images(c);
    for k in 1..=K {
        let cnt = regular_root_counts(c, k);
        for &a in c.atlas().regular() {
            if s.hyp(imgs[(k - 1) as usize][(a - 1) as usize]) {
                s.holds(cnt[(a - 1) as usize] > 0, "S^R(k,a) ≠ ∅", || wit![a, k]);
            }
        }
    }
}

/// Exponent range for the two-exponent statement bc08.
const K8: u64 = 12;

pub(super) fn bc08(c: &Ctx<'_>, s: &mut Sink) {
    let mut imgs: BTreeMap<u64, Vec<bool>> = BTreeMap::new();
    for k1 in 1..=K8 {
        for k2 in 1..=K8 {
            for k in [k1, k2, lcm(k1, k2)] {
                imgs.entry(k).or_insert_with(|| c.image(k));
            }
            let l = lcm(k1, k2);
            for &a in c.atlas().regular() {
                let i = (a - 1) as usize;
                s.eq(imgs[&k1][i] && imgs[&k2][i], imgs[&l][i], "M(k1,a) ∧ M(k2,a) ⟺ M([k1,k2],a)", || {
                    wit![a, k1, k2]
                });
            }
        }
    }
}

pub(super) fn bc09(c: &Ctx<'_>, s: &mut Sink) {
    let m = c.md();
    let imgs = images(c);
    let get = |k: u64, a: u64| imgs[(k - 1) as usize][(a - 1) as usize];
    for k in 1..=K {
        let (kp, kq) = (gcd(k, m.phi()), gcd(k, m.psi()));
        for &a in c.atlas().regular() {
            s.eq(get(k, a), get(kp, a), "M(k,a) ⟺ M((k,φ),a)", || wit![a, k]);
            s.eq(get(k, a), get(kq, a), "M(k,a) ⟺ M((k,ψ),a)", || wit![a, k]);
        }
    }
}

pub(super) fn pr02(c: &Ctx<'_>, s: &mut Sink) {
    let g = c.omega().gen_primitive_roots();
    let sets = c.omega_sets();
    for &a in c.atlas().regular() {
        for &x in &sets[(a - 1) as usize] {
            s.holds(g.binary_search(&x).is_ok(), "Ω(a) ⊆ G_m", || wit![a, g = x]);
        }
    }
    for &x in &g {
        s.holds(sets[(x - 1) as usize].binary_search(&x).is_ok(), "g ∈ Ω(g)", || wit![g = x]);
    }
}

pub(super) fn pr03(c: &Ctx<'_>, s: &mut Sink) {
    let (m, t, om) = (c.md(), c.t, c.omega());
    for &b in c.atlas().regular() {
        let nb = t.order(b);
        let wb = om.omega(b).expect("regular");
        let mut a = b;
        for _ in 0..nb {
            if t.order(a) == nb {
                s.eq(wb, om.omega(a).expect("regular"), "a ~ b ⟹ ω(a) = ω(b)", || wit![a, b]);
            }
            a = m.mul(a, b);
        }
    }
}

pub(super) fn pr04(c: &Ctx<'_>, s: &mut Sink) {
    let gm = c.sub_g(c.n());
    for (m1, m2) in c.lcm_pairs() {
        let (g1, g2) = (c.sub_g(m1), c.sub_g(m2));
        for g in 1..=c.n() {
            let hyp = g1.binary_search(&canon(g, m1)).is_ok() && g2.binary_search(&canon(g, m2)).is_ok();
            if s.hyp(hyp) {
                s.holds(gm.binary_search(&g).is_ok(), "g ∈ G_m", || wit![m1, m2, g]);
            }
        }
    }
}

pub(super) fn pr05(c: &Ctx<'_>, s: &mut Sink) {
    let (m, t) = (c.md(), c.t);
    let sets = c.omega_sets();
    for &a in c.atlas().regular() {
        let om = &sets[(a - 1) as usize];
        for &g in om {
            let ng = t.order(g);
            let mut x = g;
            for n in 1..=ng {
                s.eq(coprime(n, ng), om.binary_search(&x).is_ok(), "g^n ∈ Ω(a) ⟺ (n,|g|) = 1", || wit![a, g, n]);
                x = m.mul(x, g);
            }
        }
    }
}

pub(super) fn pr06(c: &Ctx<'_>, s: &mut Sink) {
    let t = c.t;
    let sets = c.omega_sets();
    let reg = c.atlas().regular();
    for &a in reg {
        let om = &sets[(a - 1) as usize];
        for &g in reg {
            let inv = t.signed_power(g, -1);
            s.eq(
                om.binary_search(&g).is_ok(),
                om.binary_search(&inv).is_ok(),
                "g ∈ Ω(a) ⟺ g^{-1} ∈ Ω(a)",
                || wit![a, g],
            );
        }
    }
}
