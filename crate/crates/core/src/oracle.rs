//! Brute-force references, written straight from the definitions.
//!
//! Nothing here uses factorization shortcuts or closed forms; every set is a
//! scan of `Z_m` and every order an iteration. All entry points refuse moduli
//! beyond the enumeration cap.

use alloc::vec;
use alloc::vec::Vec;

use crate::arith::{gcd, lcm, Modulus};
use crate::Result;

fn pw(m: u64, a: u64, k: u64) -> u64 {
    let mut r = 1 % m;
    for _ in 0..k {
        r = ((r as u128 * a as u128) % m as u128) as u64;
    }
    if r == 0 {
        m
    } else {
        r
    }
}

fn canon(m: u64, x: u64) -> u64 {
    let r = x % m;
    if r == 0 {
        m
    } else {
        r
    }
}

fn is_idem(m: u64, x: u64) -> bool {
    ((x as u128 * x as u128) % m as u128) as u64 == x % m
}

/// Brute-force idempotent finder for a raw modulus value.
pub fn idempotents_raw(m: u64) -> Vec<u64> {
    (1..=m).filter(|&x| is_idem(m, x)).collect()
}

pub fn idempotents(m: &Modulus, cap: u64) -> Result<Vec<u64>> {
    m.ensure_enumerable(cap)?;
    Ok(idempotents_raw(m.value()))
}

/// Iterates `a, a², …` until an idempotent appears.
pub fn order_raw(m: u64, a: u64) -> u64 {
    let a = canon(m, a);
    let mut x = a;
    let mut n = 1;
    while !is_idem(m, x) {
        x = canon(m, ((x as u128 * a as u128) % m as u128) as u64);
        n += 1;
    }
    n
}

pub fn order(m: &Modulus, a: u64, cap: u64) -> Result<u64> {
    m.ensure_enumerable(cap)?;
    Ok(order_raw(m.value(), a))
}

/// `a^{|a|}` by iteration.
pub fn idem_class_raw(m: u64, a: u64) -> u64 {
    pw(m, canon(m, a), order_raw(m, a))
}

/// `a^{|a|+1} ≡ a`.
pub fn is_regular_raw(m: u64, a: u64) -> bool {
    let a = canon(m, a);
    pw(m, a, order_raw(m, a) + 1) == a
}

/// Normality by its inference: every idempotent power `a^k`, `k ≤ 2φ(m)`,
/// has `|a| | k`. The bound `φ(m)` alone is too small: for `m = 4, a = 2`
/// the first offending exponent is 3 > φ(4).
pub fn is_normal_raw(m: u64, a: u64) -> bool {
    let a = canon(m, a);
    let n = order_raw(m, a);
    let bound = 2 * phi_raw(m);
    let mut x = a;
    for k in 1..=bound {
        if is_idem(m, x) && k % n != 0 {
            return false;
        }
        x = canon(m, ((x as u128 * a as u128) % m as u128) as u64);
    }
    true
}

/// Least `n` with `a^n` regular.
pub fn delta_raw(m: u64, a: u64) -> u64 {
    let a = canon(m, a);
    (1..).find(|&n| is_regular_raw(m, pw(m, a, n))).expect("a^{|a|} is regular")
}

/// `μ_m(a)`: the divisor `m1` with `m = m1·m2`, `(m1, m2) = 1`, class ≡ 1 mod
/// `m1` and ≡ 0 mod `m2`, found by search.
pub fn mu_raw(m: u64, a: u64) -> u64 {
    let e = idem_class_raw(m, a);
    (1..=m)
        .filter(|&m1| m % m1 == 0 && gcd(m1, m / m1) == 1)
        .find(|&m1| (e % m1 == 1 % m1) && e % (m / m1) == 0)
        .expect("idempotent classes split m")
}

/// `φ` by counting units.
pub fn phi_raw(m: u64) -> u64 {
    (1..=m).filter(|&x| gcd(x, m) == 1).count() as u64
}

/// `ψ` as the lcm of the unit counts of the prime-power parts. The group
/// exponent would give Carmichael's λ instead, which is smaller once `8 | m`.
pub fn psi_raw(m: u64) -> u64 {
    let mut rest = m;
    let mut p = 2;
    let mut psi = 1;
    while rest > 1 {
        if rest % p == 0 {
            let mut q = 1;
            while rest % p == 0 {
                rest /= p;
                q *= p;
            }
            psi = lcm(psi, phi_raw(q));
        }
        p += 1;
    }
    psi
}

pub fn orbit_raw(m: u64, a: u64) -> Vec<u64> {
    let a = canon(m, a);
    let mut v: Vec<u64> = (1..=order_raw(m, a)).map(|n| pw(m, a, n)).collect();
    v.sort_unstable();
    v.dedup();
    v
}

/// `{x ∈ 1..m : x^k ≡ a}`.
pub fn solve_raw(m: u64, k: u64, a: u64) -> Vec<u64> {
    let a = canon(m, a);
    (1..=m).filter(|&x| pw(m, x, k) == a).collect()
}

pub fn solve(m: &Modulus, k: u64, a: u64, cap: u64) -> Result<Vec<u64>> {
    m.ensure_enumerable(cap)?;
    Ok(solve_raw(m.value(), k, a))
}

/// `ω_m(a)`: largest `|b|` over regular `b` with some `b^k ≡ a`.
pub fn omega_raw(m: u64, a: u64) -> u64 {
    let a = canon(m, a);
    (1..=m)
        .filter(|&b| is_regular_raw(m, b) && orbit_raw(m, b).contains(&a))
        .map(|b| order_raw(m, b))
        .max()
        .unwrap_or(0)
}

/// `|⋃ orb(a)|` over `a ∈ R_m^e` of order exactly `k`.
pub fn union_size_raw(m: u64, e: u64, k: u64) -> u64 {
    let mut seen = vec![false; m as usize];
    for a in 1..=m {
        if is_regular_raw(m, a) && idem_class_raw(m, a) == e && order_raw(m, a) == k {
            for x in orbit_raw(m, a) {
                seen[(x - 1) as usize] = true;
            }
        }
    }
    seen.iter().filter(|&&s| s).count() as u64
}

/// `S_{m,k}` by scan.
pub fn kernel_raw(m: u64, k: u64) -> Vec<u64> {
    (1..=m)
        .filter(|&x| {
            canon(m, ((x as u128 * x as u128) % m as u128) as u64)
                == canon(m, ((k as u128 * x as u128) % m as u128) as u64)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn oracle_examples() {
        assert_eq!(solve_raw(12, 2, 4), [2, 4, 8, 10]);
        assert!(solve_raw(12, 2, 5).is_empty());
        assert_eq!(solve_raw(12, 1, 7), [7]);
        assert_eq!(order_raw(100, 42), 20);
        assert_eq!(order_raw(100, 1), 1);
        assert_eq!(order_raw(12, 2), 2);
        assert_eq!(idempotents_raw(12), [1, 4, 9, 12]);
        assert_eq!(mu_raw(12, 4), 3);
        assert_eq!(mu_raw(12, 12), 1);
        assert_eq!((phi_raw(100), psi_raw(100)), (40, 20));
        assert!(!is_normal_raw(4, 2) && is_normal_raw(12, 2));
        assert_eq!(union_size_raw(12, 1, 2), 4);
    }

    #[test]
    fn cap_refused() {
        let m = Modulus::new(50).unwrap();
        assert!(order(&m, 3, 10).is_err());
        assert!(solve(&m, 2, 3, 49).is_err());
        assert_eq!(idempotents(&m, 50).unwrap(), [1, 25, 26, 50]);
    }
}
