//! Idempotents, the generalized order and its power calculus.
//!
//! `|a|_m` is the least `n ≥ 1` with `a^n` idempotent. It exists for every
//! residue, units or not, and `a^{|a|}` is the idempotent class of `a`.

use alloc::vec::Vec;

use crate::arith::{crt_combine, lcm, valuation, Modulus};

/// `E_m`, sorted ascending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdempotentSet {
    m: u64,
    elements: Vec<u64>,
}

impl IdempotentSet {
    pub fn modulus(&self) -> u64 {
        self.m
    }

    pub fn elements(&self) -> &[u64] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, e: u64) -> bool {
        self.elements.binary_search(&e).is_ok()
    }
}

/// The idempotent that vanishes exactly on the components selected by
/// `mask` (bit `i` for the `i`-th prime) and is `1` on the rest.
pub fn idempotent_for_mask(m: &Modulus, mask: u32) -> u64 {
    if m.value() == 1 {
        return 1;
    }
    let pairs: Vec<(u64, u64)> =
        m.components().iter().enumerate().map(|(i, c)| (if mask >> i & 1 == 1 { 0 } else { 1 }, c.q)).collect();
    crt_combine(&pairs).map(|(x, _)| x).unwrap_or(m.value())
}

/// Bitmask of the components on which the idempotent `e` vanishes.
pub fn mask_of(m: &Modulus, e: u64) -> u32 {
    m.components().iter().enumerate().filter(|(_, c)| e % c.q == 0).fold(0, |acc, (i, _)| acc | 1 << i)
}

/// All `2^{ω(m)}` CRT combinations of 0 and 1 over the prime-power parts.
pub fn enumerate_idempotents(m: &Modulus) -> IdempotentSet {
    let w = m.omega();
    let mut elements: Vec<u64> = (0..1u32 << w).map(|mask| idempotent_for_mask(m, mask)).collect();
    elements.sort_unstable();
    IdempotentSet { m: m.value(), elements }
}

/// Closed-form data behind the order of one residue.
///
/// With `L` the lcm of the unit orders on the components coprime to `a`,
/// and `T` the largest `⌈α_p / v_p(a)⌉` over the components `a` shares a
/// prime with (1 if none), the exponents `k` with `a^k` idempotent are
/// exactly the multiples of `L` that are `≥ T`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PowerProfile {
    pub order: u64,
    pub idem_class: u64,
    pub unit_lcm: u64,
    pub threshold: u64,
    /// Components on which `a` is not a unit.
    pub mask: u32,
}

impl PowerProfile {
    /// `T = 1`: `a` already vanishes to full depth wherever it vanishes.
    pub fn is_regular(&self) -> bool {
        self.threshold == 1
    }

    /// `T ≤ L`: the idempotent exponents start at the first multiple of `L`.
    pub fn is_normal(&self) -> bool {
        self.threshold <= self.unit_lcm
    }

    /// Least `n` with `a^n` regular.
    pub fn delta(&self) -> u64 {
        self.threshold
    }
}

pub(crate) fn profile_from_parts(unit_lcm: u64, threshold: u64, mask: u32, class: u64) -> PowerProfile {
    PowerProfile { order: unit_lcm * threshold.div_ceil(unit_lcm), idem_class: class, unit_lcm, threshold, mask }
}

pub fn power_profile(m: &Modulus, a: u64) -> PowerProfile {
    let mut unit_lcm = 1u64;
    let mut threshold = 1u64;
    let mut mask = 0u32;
    for (i, c) in m.components().iter().enumerate() {
        let r = a % c.q;
        if r % c.p != 0 {
            unit_lcm = lcm(unit_lcm, c.unit_order(r));
        } else {
            mask |= 1 << i;
            if r != 0 {
                let v = valuation(r, c.p) as u64;
                threshold = threshold.max((c.alpha as u64).div_ceil(v));
            }
        }
    }
    profile_from_parts(unit_lcm, threshold, mask, idempotent_for_mask(m, mask))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OrderInfo {
    pub a: u64,
    pub order: u64,
    pub idem_class: u64,
}

/// `|a|_m` and `a^{|a|}` via the closed form of [`PowerProfile`].
pub fn order(m: &Modulus, a: u64) -> OrderInfo {
    let a = m.reduce(a);
    let p = power_profile(m, a);
    OrderInfo { a, order: p.order, idem_class: p.idem_class }
}

/// `a^z` with `a^0 = a^{|a|}`, `a^{-1} = a^{|a|-1}` and `a^{-k} = (a^{-1})^k`.
pub fn signed_power(m: &Modulus, a: u64, z: i64) -> u64 {
    let a = m.reduce(a);
    if z > 0 {
        return m.pow(a, z as u64);
    }
    let n = order(m, a).order;
    if z == 0 {
        return m.pow(a, n);
    }
    // |a| = 1 gives a^{-1} = a^0 = a.
    let inv = m.pow(a, if n == 1 { 1 } else { n - 1 });
    m.pow(inv, z.unsigned_abs())
}

/// `ind_b a`: least `k ≥ 1` with `b^k ≡ a`.
pub fn index(m: &Modulus, b: u64, a: u64) -> Option<u64> {
    let (b, a) = (m.reduce(b), m.reduce(a));
    let p = power_profile(m, b);
    // Powers repeat with period |b| from exponent δ on, and δ ≤ |b|.
    let limit = p.order + p.delta() - 1;
    let mut x = b;
    for k in 1..=limit {
        if x == a {
            return Some(k);
        }
        x = m.mul(x, b);
    }
    None
}

/// `min(tower of height h, limit)` computed with saturation.
fn saturated_tower(base: u64, height: u64, limit: u64) -> u64 {
    let mut value = base.min(limit);
    for _ in 1..height {
        if base == 1 || value == limit {
            break;
        }
        let mut acc = 1u64;
        for _ in 0..value {
            acc = acc.saturating_mul(base);
            if acc >= limit {
                acc = limit;
                break;
            }
        }
        if acc == value {
            break;
        }
        value = acc;
    }
    value
}

/// `a_h mod m` for `a_1 = base`, `a_n = base^{a_{n-1}}`, `base ≥ 1`.
///
/// Each level reduces the exponent modulo `L = |base|` of that level and
/// keeps it at least `L` whenever the true exponent is, since
/// `b^{qL+r} ≡ b^{L+r}` for `q ≥ 1`.
pub fn tower_mod(m: &Modulus, base: u64, height: u64) -> u64 {
    assert!(height >= 1 && base >= 1, "tower needs base ≥ 1 and height ≥ 1");
    if height == 1 || m.value() == 1 {
        return m.reduce(base);
    }
    let b = m.reduce(base);
    let l = order(m, b).order;
    let exponent = {
        let exact = saturated_tower(base, height - 1, l);
        if exact < l {
            exact
        } else {
            let lm = Modulus::new(l).expect("orders are positive");
            l + tower_mod(&lm, base, height - 1) % l
        }
    };
    m.pow(b, exponent)
}
