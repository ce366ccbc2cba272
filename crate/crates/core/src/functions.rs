//! Counting functions over the class groups and the M / QM / DI classifiers.
//!
//! `r_m^e(k)` counts elements of `R_m^e` of order exactly `k`, `ρ_m^e(k)`
//! those whose order divides `k`. Classifier flags only claim "no
//! counterexample with arguments up to N".

use alloc::vec;
use alloc::vec::Vec;

use crate::arith::{factorize, gcd, is_prime, totient, valuation, Modulus};
use crate::structure::StructureTable;
use crate::{Error, Result};

/// Orders of the members of one class `R_m^e`.
#[derive(Debug, Clone)]
pub struct ClassOrders {
    pub e: u64,
    orders: Vec<u64>,
}

impl ClassOrders {
    pub fn new(table: &StructureTable, e: u64) -> Result<Self> {
        table.ensure_idempotent(e)?;
        let orders = (1..=table.m())
            .filter(|&a| table.is_regular(a) && table.idem_class(a) == e)
            .map(|a| table.order(a))
            .collect();
        Ok(ClassOrders { e, orders })
    }

    /// `r^e(k)`.
    pub fn r(&self, k: u64) -> u64 {
        self.orders.iter().filter(|&&o| o == k).count() as u64
    }

    /// `ρ^e(k)`.
    pub fn rho(&self, k: u64) -> u64 {
        self.orders.iter().filter(|&&o| k % o == 0).count() as u64
    }

    /// `|R_m^e|`.
    pub fn size(&self) -> u64 {
        self.orders.len() as u64
    }
}

pub fn r_count(table: &StructureTable, e: u64, k: u64) -> Result<u64> {
    Ok(ClassOrders::new(table, e)?.r(k))
}

pub fn rho_count(table: &StructureTable, e: u64, k: u64) -> Result<u64> {
    Ok(ClassOrders::new(table, e)?.rho(k))
}

/// `ρ_m^1(k) = ∏ (k, φ(p^α))` for weakly even `m`.
pub fn rho_closed_form(m: &Modulus, k: u64) -> Result<u64> {
    if !m.is_weakly_even() {
        return Err(Error::NotWeaklyEven { m: m.value() });
    }
    Ok(m.components().iter().map(|c| gcd(k, c.phi)).product())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RhoPrimePower {
    pub q: u64,
    pub beta: u32,
    /// `ρ^1(q^β)`.
    pub rho: u64,
    /// `ρ^1(q^{β-1})`.
    pub rho_prev: u64,
    /// `r^1(q^β) = ρ(q^β) − ρ(q^{β-1})`.
    pub r: u64,
    /// `r^1(q) = q^Δ − 1`, Δ the number of components with `q | φ(p^α)`.
    pub r_at_q: u64,
}

/// `ρ_m^1(q^β) = q^{Σ min(β, δ_i)}` with `δ_i = v_q(φ(p_i^{α_i}))`.
///
/// `q^β | ψ(m)` is not required: beyond the largest `δ_i` the value stays at
/// `q^{Σ δ_i}`, which is still the true count.
pub fn rho_prime_power(m: &Modulus, q: u64, beta: u32) -> Result<RhoPrimePower> {
    if !m.is_weakly_even() {
        return Err(Error::NotWeaklyEven { m: m.value() });
    }
    if !is_prime(q) {
        return Err(Error::Precondition("q must be prime"));
    }
    if beta == 0 {
        return Err(Error::Precondition("β must be at least 1"));
    }
    let deltas: Vec<u32> = m.components().iter().map(|c| valuation(c.phi, q)).collect();
    let at = |b: u32| -> Result<u64> {
        let s: u32 = deltas.iter().map(|&d| d.min(b)).sum();
        q.checked_pow(s).ok_or(Error::Overflow)
    };
    let (rho, rho_prev) = (at(beta)?, at(beta - 1)?);
    let big_delta = deltas.iter().filter(|&&d| d > 0).count() as u32;
    Ok(RhoPrimePower {
        q,
        beta,
        rho,
        rho_prev,
        r: rho - rho_prev,
        r_at_q: q.checked_pow(big_delta).ok_or(Error::Overflow)? - 1,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct UnionSize {
    /// `|⋃ orb(a)|` over `a ∈ R_m^e` of order `k`, measured directly.
    pub actual: u64,
    /// `k·r_m^e(k)/φ(k)`.
    pub formula: u64,
}

/// Measured size of `orb(_kR_m^e)` beside the closed-form value.
///
/// The two disagree whenever distinct cyclic subgroups of order `k`
/// overlap, e.g. `m = 12, e = 1, k = 2` gives 4 against 6.
pub fn orbit_union_size(table: &StructureTable, e: u64, k: u64) -> Result<UnionSize> {
    table.ensure_idempotent(e)?;
    let m = table.modulus();
    let mut seen = vec![false; table.m() as usize];
    let mut r = 0u64;
    for a in 1..=table.m() {
        if !table.is_regular(a) || table.idem_class(a) != e || table.order(a) != k {
            continue;
        }
        r += 1;
        let mut x = a;
        for _ in 0..k {
            seen[(x - 1) as usize] = true;
            x = m.mul(x, a);
        }
    }
    let actual = seen.iter().filter(|&&s| s).count() as u64;
    let formula = if k == 0 { 0 } else { k * r / totient(k) };
    Ok(UnionSize { actual, formula })
}

#[inline]
fn divides(a: u64, b: u64) -> bool {
    if a == 0 {
        b == 0
    } else {
        b % a == 0
    }
}

fn lcm128(a: u64, b: u64) -> u128 {
    if a == 0 || b == 0 {
        return 0;
    }
    a as u128 / gcd(a, b) as u128 * b as u128
}

fn lcm_u64(a: u64, b: u64) -> u64 {
    crate::arith::lcm(a, b)
}

/// Classifier verdicts on `1..=N`, each with its first counterexample.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FunctionClassification {
    pub domain_bound: u64,
    pub is_m: bool,
    pub is_qm: bool,
    pub is_di: bool,
    pub is_di_pa: bool,
    pub m_counterexample: Option<(u64, u64)>,
    pub qm_counterexample: Option<(u64, u64)>,
    pub di_counterexample: Option<(u64, u64)>,
    pub di_pa_counterexample: Option<(u64, u64)>,
}

fn first_pair(n: u64, mut bad: impl FnMut(u64, u64) -> bool, admit: impl Fn(u64, u64) -> bool) -> Option<(u64, u64)> {
    for a in 1..=n {
        for b in 1..=n {
            if admit(a, b) && bad(a, b) {
                return Some((a, b));
            }
        }
    }
    None
}

fn coprime_product_in(n: u64) -> impl Fn(u64, u64) -> bool {
    move |a, b| gcd(a, b) == 1 && a.checked_mul(b).is_some_and(|p| p <= n)
}

fn lcm_in(n: u64) -> impl Fn(u64, u64) -> bool {
    move |a, b| lcm128(a, b) <= n as u128
}

fn prime_power_chain(n: u64) -> impl Fn(u64, u64) -> bool {
    move |a, b| {
        if b % a != 0 || b > n {
            return false;
        }
        match factorize(b) {
            Ok(f) if f.factors().len() == 1 => a == 1 || a % f.factors()[0].0 == 0,
            _ => false,
        }
    }
}

/// Exhaustive pair checks of the M, QM, DI and DI-on-prime-powers properties on `1..=N`.
pub fn classify_function(f: &dyn Fn(u64) -> u64, n: u64) -> FunctionClassification {
    let vals: Vec<u64> = (0..=n).map(|x| if x == 0 { 0 } else { f(x) }).collect();
    let v = |x: u64| vals[x as usize];
    let m_cx = first_pair(n, |a, b| v(a * b) as u128 != v(a) as u128 * v(b) as u128, coprime_product_in(n));
    let qm_cx = first_pair(n, |a, b| v(lcm_u64(a, b)) as u128 != lcm128(v(a), v(b)), lcm_in(n));
    let di_cx = first_pair(n, |a, b| !divides(v(a), v(b)), |a, b| b % a == 0);
    // Prime-power chains p^γ | p^γ' with γ ≥ 1.
    let pa_cx = first_pair(n, |a, b| !divides(v(a), v(b)), |a, b| a > 1 && prime_power_chain(n)(a, b));
    FunctionClassification {
        domain_bound: n,
        is_m: m_cx.is_none(),
        is_qm: qm_cx.is_none(),
        is_di: di_cx.is_none(),
        is_di_pa: pa_cx.is_none(),
        m_counterexample: m_cx,
        qm_counterexample: qm_cx,
        di_counterexample: di_cx,
        di_pa_counterexample: pa_cx,
    }
}

fn psi_of(n: u64) -> u64 {
    Modulus::new(n).map_or(1, |m| m.psi())
}

fn rad(n: u64) -> u64 {
    factorize(n).map_or(1, |f| f.factors().iter().map(|&(p, _)| p).product())
}

/// Named arithmetic functions for the classifiers. `nrad` is `n·rad(n)`.
pub type Builtin = fn(u64) -> u64;

pub const BUILTINS: &[(&str, Builtin)] = &[
    ("phi", totient),
    ("psi", psi_of),
    ("id", |n| n),
    ("square", |n| n * n),
    ("cube", |n| n * n * n),
    ("succ", |n| n + 1),
    ("tau", |n| crate::arith::divisors(n).len() as u64),
    ("sigma", |n| crate::arith::divisors(n).iter().sum()),
    ("rad", rad),
    ("nrad", |n| n * rad(n)),
];

pub fn builtin(name: &str) -> Option<Builtin> {
    BUILTINS.iter().find(|(n, _)| *n == name).map(|&(_, f)| f)
}

/// `f(ab) = [f(a), f(b)]` for coprime `a, b` with `ab ≤ N`.
pub fn splits_coprime_lcm(f: &dyn Fn(u64) -> u64, n: u64) -> bool {
    first_pair(n, |a, b| f(a * b) as u128 != lcm128(f(a), f(b)), coprime_product_in(n)).is_none()
}

/// `[f(a), f(b)] | f([a, b])` whenever `[a, b] ≤ N`.
pub fn lcm_divides_image(f: &dyn Fn(u64) -> u64, n: u64) -> bool {
    first_pair(
        n,
        |a, b| {
            let l = lcm128(f(a), f(b));
            let fv = f(lcm_u64(a, b)) as u128;
            if l == 0 {
                fv != 0
            } else {
                fv % l != 0
            }
        },
        lcm_in(n),
    )
    .is_none()
}

/// `f(n) = lcm(g(p_i, γ_i))` over the prime-power parts `p_i^{γ_i}` of `n`.
pub fn lcm_lift(g: &dyn Fn(u64, u32) -> u64, n: u64) -> u64 {
    factorize(n).map(|fz| fz.factors().iter().fold(1, |acc, &(p, a)| lcm_u64(acc, g(p, a)))).unwrap_or(1)
}

/// `g(p^γ) | g(p^γ')` for `1 ≤ γ ≤ γ'`, `p^γ' ≤ N`.
pub fn is_di_on_prime_powers(g: &dyn Fn(u64, u32) -> u64, n: u64) -> bool {
    for p in 2..=n {
        if !is_prime(p) {
            continue;
        }
        let mut chain = Vec::new();
        let mut q = p;
        let mut gamma = 1u32;
        while q <= n {
            chain.push(g(p, gamma));
            gamma += 1;
            match q.checked_mul(p) {
                Some(next) => q = next,
                None => break,
            }
        }
        for i in 0..chain.len() {
            for j in i..chain.len() {
                if !divides(chain[i], chain[j]) {
                    return false;
                }
            }
        }
    }
    true
}
