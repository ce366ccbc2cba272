mod common;

use idem_core::arith::{gcd, pow_mod};
use idem_core::idempotent::{enumerate_idempotents, index, order, signed_power, tower_mod};
use idem_core::{oracle, Modulus};
use proptest::prelude::*;

fn md(n: u64) -> Modulus {
    Modulus::new(n).unwrap()
}

#[test]
fn idempotent_sets() {
    for n in 1..=2000 {
        let m = md(n);
        let es = enumerate_idempotents(&m);
        assert_eq!(es.elements(), oracle::idempotents_raw(n).as_slice(), "E_{n}");
        assert_eq!(es.len(), 1 << m.omega());
        assert!(es.contains(m.reduce(1)) && es.contains(n));
        assert!(es.elements().iter().all(|&e| m.is_idempotent(e)));
    }
}

#[test]
fn phi_and_psi_powers_are_idempotent() {
    // in02, in12
    for n in 1..=1000 {
        let m = md(n);
        for a in 1..=n {
            assert!(m.is_idempotent(m.pow(a, m.phi())), "a^φ, m={n} a={a}");
            assert!(m.is_idempotent(m.pow(a, m.psi())), "a^ψ, m={n} a={a}");
        }
    }
}

#[test]
fn phi_power_depends_on_gcd() {
    // in08
    for n in 1..=500 {
        let m = md(n);
        for a in 1..=n {
            assert_eq!(m.pow(a, m.phi()), m.pow(gcd(a, n), m.phi()), "m={n} a={a}");
        }
    }
}

#[test]
fn fast_order_matches_oracle() {
    for n in 1..=1000 {
        let m = md(n);
        for a in 1..=n {
            let info = order(&m, a);
            assert_eq!(info.order, oracle::order_raw(n, a), "|{a}|_{n}");
            assert_eq!(info.idem_class, m.pow(a, m.phi()), "class of {a} mod {n}");
            assert!(info.order <= m.phi().max(1));
        }
    }
}

#[test]
fn idempotent_power_is_unique() {
    // in03: every idempotent power of a equals a^{|a|}.
    for n in 1..=300 {
        let m = md(n);
        for a in 1..=n {
            let e = order(&m, a).idem_class;
            let mut x = a;
            for k in 1..=2 * m.phi() {
                if m.is_idempotent(x) {
                    assert_eq!(x, e, "m={n} a={a} k={k}");
                }
                x = m.mul(x, a);
            }
        }
    }
}

#[test]
fn scaled_idempotent_count() {
    // in07
    for n in 1..=500 {
        let m = md(n);
        let es = enumerate_idempotents(&m);
        for k in 1..=n {
            let mut v: Vec<u64> = es.elements().iter().map(|&e| m.mul(k, e)).collect();
            v.sort_unstable();
            v.dedup();
            assert_eq!(v.len() as u32, 1 << md(n / gcd(k, n)).omega(), "m={n} k={k}");
        }
    }
}

#[test]
fn registry_idempotent_theorems() {
    common::assert_clean(1, 300, &["in02", "in03", "in05", "in06", "in07", "in08", "in10", "in11", "in12"]);
}

#[test]
fn tower_reproduces_the_chain() {
    let m = md(100);
    assert_eq!(order(&m, 42).order, 20);
    assert_eq!(m.pow(42, 20), 76);
    assert_eq!(order(&md(20), 42).order, 4);
    assert_eq!(md(20).pow(42, 4), 16);
    assert_eq!(order(&md(4), 42).order, 2);
    assert_eq!(tower_mod(&md(4), 42, 98), 4);
    assert_eq!(tower_mod(&m, 42, 100), 56);
}

/// `base↑↑height` exactly, or `None` past 10^18.
fn exact_tower(base: u64, height: u64) -> Option<u64> {
    let mut v = base;
    for _ in 1..height {
        v = base.checked_pow(u32::try_from(v).ok()?)?;
    }
    (v <= 1_000_000_000_000_000_000).then_some(v)
}

#[test]
fn tower_matches_direct_evaluation() {
    for n in 1..=200 {
        let m = md(n);
        for base in 1..=12 {
            for height in 1..=3 {
                if let Some(v) = exact_tower(base, height) {
                    assert_eq!(tower_mod(&m, base, height), m.reduce(v), "m={n} base={base} h={height}");
                } else if height >= 2 {
                    // One level down is exact, so power it with pow_mod.
                    let e = exact_tower(base, height - 1).unwrap();
                    assert_eq!(tower_mod(&m, base, height), m.reduce(pow_mod(base, e, n)), "m={n} {base}↑↑{height}");
                }
            }
        }
    }
}

#[test]
fn signed_power_conventions() {
    let m = md(12);
    assert_eq!(signed_power(&m, 1, -1), 1);
    assert_eq!(signed_power(&m, 2, 0), 4);
    assert_eq!(signed_power(&m, 5, -1), 5);
    assert_eq!(index(&m, 2, 8), Some(3));
    assert_eq!(index(&m, 2, 3), None);
}

proptest! {
    #[test]
    fn in11_on_random_triples(n in 1u64..=1000, a in 1u64..=1000, k in 1u64..=60, d in 0u64..=60) {
        // a^{k+n} ≡ a^k with k ≤ n forces a^n idempotent.
        let m = md(n);
        let a = m.reduce(a);
        let nn = k + d;
        if m.pow(a, k + nn) == m.pow(a, k) {
            prop_assert!(m.is_idempotent(m.pow(a, nn)));
        }
    }

    #[test]
    fn idempotent_exponents_are_tail_multiples(n in 1u64..=2000, a in 1u64..=2000) {
        let m = md(n);
        let a = m.reduce(a);
        let info = order(&m, a);
        prop_assert!(m.is_idempotent(m.pow(a, info.order)));
        for k in 1..info.order {
            prop_assert!(!m.is_idempotent(m.pow(a, k)));
        }
    }

    #[test]
    fn index_inverts_power(n in 2u64..=500, b in 1u64..=500, k in 1u64..=40) {
        let m = md(n);
        let b = m.reduce(b);
        let a = m.pow(b, k);
        let j = index(&m, b, a).unwrap();
        prop_assert!(j <= k);
        prop_assert_eq!(m.pow(b, j), a);
    }
}
