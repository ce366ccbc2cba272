//! Class counting functions and the M / QM / DI function classes.

use alloc::boxed::Box;
use alloc::vec;
use alloc::vec::Vec;

use super::{coprime, wit, Ctx, Sink};
use crate::arith::{gcd, is_prime, valuation};
use crate::functions::{
    builtin, classify_function, is_di_on_prime_powers, lcm_divides_image, lcm_lift, orbit_union_size, rho_closed_form,
    rho_prime_power, splits_coprime_lcm, ClassOrders, BUILTINS,
};
use crate::structure::StructureTable;

/// `r^e(k)` for `k = 0..=len` (slot 0 unused).
fn r_hist(t: &StructureTable, e: u64, len: u64) -> Vec<u64> {
    let mut h = vec![0u64; len as usize + 1];
    for a in 1..=t.m() {
        if t.is_regular(a) && t.idem_class(a) == e {
            let o = t.order(a);
            if o <= len {
                h[o as usize] += 1;
            }
        }
    }
    h
}

/// `ρ(k) = Σ_{d | k} r(d)` from an `r` histogram.
fn rho_from(r: &[u64]) -> Vec<u64> {
    let mut rho = vec![0u64; r.len()];
    for d in 1..r.len() {
        for k in (d..r.len()).step_by(d) {
            rho[k] += r[d];
        }
    }
    rho
}

/// Coprime `(k1, k2)` with `k1, k2 ≥ 2` and `k1·k2 ≤ n`.
fn coprime_splits(n: u64) -> impl Iterator<Item = (u64, u64)> {
    (2..=n).flat_map(move |k1| (k1..=n / k1.max(1)).filter(move |&k2| coprime(k1, k2)).map(move |k2| (k1, k2)))
}

pub(super) fn fs02(c: &Ctx<'_>, s: &mut Sink) {
    let t = c.t;
    let phi = c.md().phi();
    let weakly_even = c.md().is_weakly_even();
    for &e in t.idempotents() {
        let mu = t.mu(e);
        let sub = c.sub(mu);
        let r = r_hist(t, e, phi);
        let r1 = r_hist(sub, sub.modulus().reduce(1), phi);
        let (rho, rho1) = (rho_from(&r), rho_from(&r1));
        for k in 1..=phi as usize {
            s.eq(r1[k], r[k], "r^e_m(k) = r^1_μ(k)", || wit![e, mu, k = k as u64]);
            s.eq(rho1[k], rho[k], "ρ^e_m(k) = ρ^1_μ(k)", || wit![e, mu, k = k as u64]);
        }
        if !s.hyp(weakly_even) {
            continue;
        }
        for (k1, k2) in coprime_splits(phi) {
            let (i, j, p) = (k1 as usize, k2 as usize, (k1 * k2) as usize);
            s.eq(r[i] * r[j], r[p], "r^e multiplicative", || wit![e, k1, k2]);
            s.eq(rho[i] * rho[j], rho[p], "ρ^e multiplicative", || wit![e, k1, k2]);
        }
    }
}

pub(super) fn fs03(c: &Ctx<'_>, s: &mut Sink) {
    let (m, t) = (c.md(), c.t);
    if !s.hyp(m.is_weakly_even()) {
        return;
    }
    let psi = m.psi();
    let r = r_hist(t, m.reduce(1), psi);
    let rho = rho_from(&r);
    for q in (2..=psi).filter(|&q| psi % q == 0 && is_prime(q)) {
        for beta in 1..=valuation(psi, q) {
            let f = rho_prime_power(m, q, beta).expect("weakly even, q prime, β ≥ 1");
            let qb = q.pow(beta) as usize;
            s.eq(rho[qb], f.rho, "ρ^1(q^β) = q^{Σ min(β,δ_i)}", || wit![q, beta]);
            s.eq(rho[qb / q as usize], f.rho_prev, "ρ^1(q^{β−1})", || wit![q, beta]);
            s.eq(r[qb], f.r, "r^1(q^β) = ρ(q^β) − ρ(q^{β−1})", || wit![q, beta]);
            if beta == 1 {
                s.eq(r[q as usize], f.r_at_q, "r^1(q) = q^Δ − 1", || wit![q]);
            }
        }
    }
}

pub(super) fn fs04(c: &Ctx<'_>, s: &mut Sink) {
    let (m, t) = (c.md(), c.t);
    if !s.hyp(m.is_weakly_even()) {
        return;
    }
    let one = ClassOrders::new(t, m.reduce(1)).expect("1 is idempotent");
    for k in (1..=60).chain([m.phi(), m.psi()]) {
        let formula = rho_closed_form(m, k).expect("weakly even");
        s.eq(formula, one.rho(k), "ρ^1(k) = ∏ (k, φ(p^α))", || wit![k]);
    }
}

pub(super) fn fs05(c: &Ctx<'_>, s: &mut Sink) {
    let t = c.t;
    for &e in t.idempotents() {
        let r = r_hist(t, e, c.md().phi());
        for k in (1..r.len()).filter(|&k| r[k] > 0) {
            let k = k as u64;
            let u = orbit_union_size(t, e, k).expect("idempotent");
            s.check(u.actual == u.formula, "|orb(_kR^e)| = k·r^e(k)/φ(k)", || {
                (wit![e, k], u.formula.into(), u.actual.into())
            });
        }
    }
}

pub(super) fn fs06(c: &Ctx<'_>, s: &mut Sink) {
    let (t, atlas) = (c.t, c.atlas());
    if !s.hyp(c.md().is_weakly_even()) {
        return;
    }
    let phi = c.md().phi() as usize;
    for &e in t.idempotents() {
        // Union bitsets of the orbits of class-e elements, by order.
        let mut by_order: Vec<Option<Vec<u64>>> = vec![None; phi + 1];
        for &a in atlas.regular().iter().filter(|&&a| t.idem_class(a) == e) {
            let bits = atlas.orbit_bits(a);
            let slot = by_order[t.order(a) as usize].get_or_insert_with(|| vec![0; bits.len()]);
            for (w, b) in slot.iter_mut().zip(bits) {
                *w |= b;
            }
        }
        let size: Vec<u64> =
            by_order.iter().map(|u| u.as_ref().map_or(0, |w| w.iter().map(|x| x.count_ones() as u64).sum())).collect();
        // Cross-check against the direct union in `functions`.
        for k in (1..=phi).filter(|&k| size[k] > 0) {
            let direct = orbit_union_size(t, e, k as u64).expect("idempotent").actual;
            s.eq(direct, size[k], "union size", || wit![e, k = k as u64]);
        }
        s.eq(1, size[1], "|orb(_1R^e)| = 1", || wit![e]);
        for (k1, k2) in coprime_splits(phi as u64) {
            let (i, j, p) = (k1 as usize, k2 as usize, (k1 * k2) as usize);
            s.eq(size[i] * size[j], size[p], "k ↦ |orb(_kR^e)| multiplicative", || wit![e, k1, k2]);
        }
    }
}

pub(super) fn fs12(c: &Ctx<'_>, s: &mut Sink) {
    let t = c.t;
    if !s.hyp(c.md().is_weakly_even()) {
        return;
    }
    let phi = c.md().phi();
    for &e in t.idempotents() {
        let rho = rho_from(&r_hist(t, e, phi));
        for a in 1..=phi {
            for b in (a..=phi).step_by(a as usize) {
                s.holds(rho[b as usize] % rho[a as usize] == 0, "a | b ⟹ ρ^e(a) | ρ^e(b)", || wit![e, a, b]);
            }
        }
    }
}

type Arith = Box<dyn Fn(u64) -> u64>;

/// Named test functions; `b` is the parameter for the gcd and constant families.
fn corpus() -> Vec<(&'static str, u64, Arith)> {
    let mut v: Vec<(&'static str, u64, Arith)> =
        BUILTINS.iter().map(|&(name, f)| (name, 0, Box::new(f) as Arith)).collect();
    for b in [1u64, 2, 7] {
        v.push(("const", b, Box::new(move |_| b)));
    }
    for b in 1..=30u64 {
        v.push(("gcd", b, Box::new(move |n| gcd(n, b))));
    }
    v
}

pub(super) fn fs09(n: u64, s: &mut Sink) {
    for (name, b, f) in corpus() {
        let cls = classify_function(&*f, n);
        let rhs = cls.is_di && splits_coprime_lcm(&*f, n);
        s.eq(rhs, cls.is_qm, "QM ⟺ DI ∧ coprime lcm splitting", || wit![f = name, b]);
    }
}

pub(super) fn fs10(n: u64, s: &mut Sink) {
    for (name, b, f) in corpus() {
        let cls = classify_function(&*f, n);
        s.eq(lcm_divides_image(&*f, n), cls.is_di, "DI ⟺ [f(a),f(b)] | f([a,b])", || wit![f = name, b]);
    }
}

pub(super) fn fs11(n: u64, s: &mut Sink) {
    let lift2: Arith = Box::new(|x| lcm_lift(&|p, g| 2u64.pow(g) * p.pow(g), x));
    let mut funcs: Vec<(&'static str, Arith)> = ["id", "square", "cube", "nrad"]
        .iter()
        .map(|&name| (name, Box::new(builtin(name).expect("builtin")) as Arith))
        .collect();
    funcs.push(("lcm 2^γ p^γ", lift2));
    funcs.push(("succ", Box::new(|x| x + 1)));
    for (name, f) in funcs {
        let vals: Vec<u64> = (1..=n).map(&*f).collect();
        let mut sorted = vals.clone();
        sorted.sort_unstable();
        sorted.dedup();
        let injective = sorted.len() == vals.len();
        if !s.hyp(injective && classify_function(&*f, n).is_qm) {
            continue;
        }
        for a in 1..=n {
            for b in 1..=n {
                if a / gcd(a, b) * b > n {
                    continue;
                }
                let (fa, fb) = (vals[(a - 1) as usize], vals[(b - 1) as usize]);
                s.eq(b % a == 0, fb % fa == 0, "a | b ⟺ f(a) | f(b)", || wit![f = name, a, b]);
            }
        }
    }
}

fn factorial(g: u32) -> u64 {
    (1..=g as u64).product()
}

pub(super) fn fs13(n: u64, s: &mut Sink) {
    type Local = Box<dyn Fn(u64, u32) -> u64>;
    let gs: Vec<(&'static str, Local)> = vec![
        ("phi(p^γ)", Box::new(|p, g| p.pow(g - 1) * (p - 1))),
        ("p^γ", Box::new(|p, g| p.pow(g))),
        ("p − 1", Box::new(|p, _| p - 1)),
        ("2^γ", Box::new(|_, g| 2u64.pow(g))),
        ("γ!", Box::new(|_, g| factorial(g))),
    ];
    for (name, g) in gs {
        if !s.hyp(is_di_on_prime_powers(&*g, n)) {
            continue;
        }
        let f = |x: u64| lcm_lift(&*g, x);
        s.holds(classify_function(&f, n).is_qm, "lcm lift of a DI_{p^α} function is QM", || wit![g = name]);
    }
}
