//! Factored moduli and arithmetic in `Z_m = {1..m}`.

use alloc::vec::Vec;

use crate::{Error, Result};

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Least common multiple. Panics on overflow; see [`checked_lcm`].
pub fn lcm(a: u64, b: u64) -> u64 {
    checked_lcm(a, b).expect("lcm overflows u64")
}

pub fn checked_lcm(a: u64, b: u64) -> Option<u64> {
    if a == 0 || b == 0 {
        return Some(0);
    }
    (a / gcd(a, b)).checked_mul(b)
}

/// `a·b mod n` in `0..n`.
#[inline]
pub fn mul_mod(a: u64, b: u64, n: u64) -> u64 {
    ((a as u128 * b as u128) % n as u128) as u64
}

/// Plain `base^exp mod n` in `0..n` (so `exp = 0` gives `1 mod n`).
pub fn pow_mod(base: u64, mut exp: u64, n: u64) -> u64 {
    if n == 1 {
        return 0;
    }
    let mut result = 1u64;
    let mut b = base % n;
    while exp > 0 {
        if exp & 1 == 1 {
            result = mul_mod(result, b, n);
        }
        b = mul_mod(b, b, n);
        exp >>= 1;
    }
    result
}

/// Inverse of `a` modulo `n` when `(a, n) = 1`.
pub fn inv_mod(a: u64, n: u64) -> Option<u64> {
    let (mut r0, mut r1) = (n as i128, (a % n) as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    if r0 != 1 {
        return if n == 1 { Some(0) } else { None };
    }
    Some(t0.rem_euclid(n as i128) as u64)
}

/// Exponent of the prime `p` in `n` (`n > 0`).
pub fn valuation(mut n: u64, p: u64) -> u32 {
    let mut v = 0;
    while n % p == 0 {
        n /= p;
        v += 1;
    }
    v
}

/// All positive divisors of `n`, ascending.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// Euler's totient of an arbitrary positive integer.
pub fn totient(n: u64) -> u64 {
    match factorize(n) {
        Ok(f) => f.factors().iter().map(|&(p, a)| p.pow(a - 1) * (p - 1)).product(),
        Err(_) => 0,
    }
}

/// Deterministic Miller-Rabin for the whole u64 range.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for p in BASES {
        if n % p == 0 {
            return n == p;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for a in BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Brent's variant of Pollard rho; `n` must be composite and odd.
fn pollard_rho(n: u64) -> u64 {
    let mut c = 1u64;
    loop {
        let f = |x: u64| (mul_mod(x, x, n) + c) % n;
        let (mut x, mut y, mut q) = (2u64, 2u64, 1u64);
        let mut g = 1u64;
        let mut r = 1u64;
        let mut ys = 2u64;
        while g == 1 {
            x = y;
            for _ in 0..r {
                y = f(y);
            }
            let mut k = 0;
            while k < r && g == 1 {
                ys = y;
                for _ in 0..core::cmp::min(128, r - k) {
                    y = f(y);
                    q = mul_mod(q, x.abs_diff(y), n);
                }
                g = gcd(q, n);
                k += 128;
            }
            r *= 2;
        }
        if g == n {
            loop {
                ys = f(ys);
                g = gcd(x.abs_diff(ys), n);
                if g > 1 {
                    break;
                }
            }
        }
        if g != n {
            return g;
        }
        c += 1;
    }
}

const TRIAL_LIMIT: u64 = 1_000_000;

fn split_large(n: u64, out: &mut Vec<u64>) {
    if n == 1 {
        return;
    }
    if n <= TRIAL_LIMIT * TRIAL_LIMIT || is_prime(n) {
        // After trial division up to TRIAL_LIMIT any cofactor below its square is prime.
        out.push(n);
        return;
    }
    let d = pollard_rho(n);
    split_large(d, out);
    split_large(n / d, out);
}

/// Prime factorization, primes ascending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    value: u64,
    factors: Vec<(u64, u32)>,
}

impl Factorization {
    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn factors(&self) -> &[(u64, u32)] {
        &self.factors
    }
}

/// Trial division up to 10^6, then Pollard rho on whatever cofactor remains.
pub fn factorize(n: u64) -> Result<Factorization> {
    if n == 0 {
        return Err(Error::NonPositive { what: "n", value: 0 });
    }
    let mut rest = n;
    let mut factors = Vec::new();
    let mut push = |p: u64, rest: &mut u64| {
        let mut a = 0;
        while *rest % p == 0 {
            *rest /= p;
            a += 1;
        }
        if a > 0 {
            factors.push((p, a));
        }
    };
    push(2, &mut rest);
    push(3, &mut rest);
    let mut p = 5u64;
    while p <= TRIAL_LIMIT && p * p <= rest {
        push(p, &mut rest);
        push(p + 2, &mut rest);
        p += 6;
    }
    if rest > 1 {
        let mut big = Vec::new();
        split_large(rest, &mut big);
        big.sort_unstable();
        let mut i = 0;
        while i < big.len() {
            let j = big[i..].iter().take_while(|&&q| q == big[i]).count();
            factors.push((big[i], j as u32));
            i += j;
        }
    }
    Ok(Factorization { value: n, factors })
}

/// One prime-power component `q = p^α ‖ m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimePower {
    pub p: u64,
    pub alpha: u32,
    pub q: u64,
    /// `φ(p^α)`.
    pub phi: u64,
    /// Distinct primes of `φ(p^α)`, for order computations.
    phi_primes: Vec<u64>,
}

impl PrimePower {
    fn new(p: u64, alpha: u32) -> Self {
        let q = p.pow(alpha);
        let phi = q / p * (p - 1);
        let mut phi_primes: Vec<u64> =
            factorize(p - 1).map(|f| f.factors().iter().map(|&(r, _)| r).collect()).unwrap_or_default();
        if alpha > 1 && !phi_primes.contains(&p) {
            phi_primes.push(p);
            phi_primes.sort_unstable();
        }
        PrimePower { p, alpha, q, phi, phi_primes }
    }

    /// Multiplicative order of a unit `u` modulo `q`.
    pub fn unit_order(&self, u: u64) -> u64 {
        let mut n = self.phi;
        for &r in &self.phi_primes {
            while n % r == 0 && pow_mod(u, n / r, self.q) == 1 % self.q {
                n /= r;
            }
        }
        n
    }
}

/// A positive modulus with its factorization and derived invariants.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Modulus {
    m: u64,
    factorization: Factorization,
    components: Vec<PrimePower>,
    phi: u64,
    psi: u64,
}

impl Modulus {
    pub fn new(n: u64) -> Result<Self> {
        let factorization = factorize(n)?;
        let components: Vec<PrimePower> = factorization.factors().iter().map(|&(p, a)| PrimePower::new(p, a)).collect();
        let phi = components.iter().map(|c| c.phi).product();
        let psi = components.iter().fold(1, |acc, c| lcm(acc, c.phi));
        Ok(Modulus { m: n, factorization, components, phi, psi })
    }

    /// Accepts a signed value, rejecting `n < 1`.
    pub fn from_signed(n: i128) -> Result<Self> {
        if n < 1 || n > u64::MAX as i128 {
            return Err(Error::NonPositive { what: "modulus", value: n });
        }
        Self::new(n as u64)
    }

    #[inline]
    pub fn value(&self) -> u64 {
        self.m
    }

    pub fn factorization(&self) -> &Factorization {
        &self.factorization
    }

    /// Prime-power components in ascending prime order.
    pub fn components(&self) -> &[PrimePower] {
        &self.components
    }

    pub fn phi(&self) -> u64 {
        self.phi
    }

    pub fn psi(&self) -> u64 {
        self.psi
    }

    /// Number of distinct prime factors.
    pub fn omega(&self) -> u32 {
        self.components.len() as u32
    }

    pub fn is_square_free(&self) -> bool {
        self.components.iter().all(|c| c.alpha == 1)
    }

    /// `p_1 = 2` with `α_1 ≤ 2`, or `m` odd.
    pub fn is_weakly_even(&self) -> bool {
        self.two_adic() <= 2
    }

    /// `α_1 = 1` for `p_1 = 2`.
    pub fn is_barely_even(&self) -> bool {
        self.two_adic() == 1
    }

    fn two_adic(&self) -> u32 {
        match self.components.first() {
            Some(c) if c.p == 2 => c.alpha,
            _ => 0,
        }
    }

    /// Representative of `a` in `1..=m`.
    #[inline]
    pub fn canon(&self, a: i128) -> u64 {
        let r = a.rem_euclid(self.m as i128) as u64;
        if r == 0 {
            self.m
        } else {
            r
        }
    }

    /// Representative of a non-negative value in `1..=m`.
    #[inline]
    pub fn reduce(&self, a: u64) -> u64 {
        let r = a % self.m;
        if r == 0 {
            self.m
        } else {
            r
        }
    }

    pub fn residue(&self, a: i128) -> Residue<'_> {
        Residue { value: self.canon(a), modulus: self }
    }

    #[inline]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        self.reduce(mul_mod(a % self.m, b % self.m, self.m))
    }

    #[inline]
    pub fn add(&self, a: u64, b: u64) -> u64 {
        self.reduce(((a % self.m) as u128 + (b % self.m) as u128) as u64 % self.m)
    }

    #[inline]
    pub fn sub(&self, a: u64, b: u64) -> u64 {
        self.canon(a as i128 - b as i128)
    }

    /// Plain integer power, canonical. `k = 0` is the literal empty product
    /// `1`, not the class `a^0`; see [`crate::idempotent::signed_power`].
    #[inline]
    pub fn pow(&self, a: u64, k: u64) -> u64 {
        self.reduce(pow_mod(a, k, self.m))
    }

    #[inline]
    pub fn is_idempotent(&self, e: u64) -> bool {
        self.mul(e, e) == self.reduce(e)
    }

    /// Checks `m` against a full-enumeration cap.
    pub fn ensure_enumerable(&self, cap: u64) -> Result<()> {
        if self.m > cap {
            Err(Error::EnumerationCap { m: self.m, cap })
        } else {
            Ok(())
        }
    }
}

/// An element of `Z_m`; `value == m` is the zero class.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Residue<'a> {
    value: u64,
    modulus: &'a Modulus,
}

impl<'a> Residue<'a> {
    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn modulus(&self) -> &'a Modulus {
        self.modulus
    }

    /// `a^k` for `k ≥ 1`. Zero is rejected because `a^0` means the
    /// idempotent class, not `1`.
    pub fn pow(&self, k: u64) -> Result<Residue<'a>> {
        if k == 0 {
            return Err(Error::ZeroExponent);
        }
        Ok(Residue { value: self.modulus.pow(self.value, k), modulus: self.modulus })
    }

    pub fn mul(&self, other: &Residue<'_>) -> Residue<'a> {
        Residue { value: self.modulus.mul(self.value, other.value), modulus: self.modulus }
    }
}

/// Solves `x ≡ r_i (mod m_i)` for pairwise coprime `m_i`; returns the
/// canonical solution and the product modulus.
pub fn crt_combine(pairs: &[(u64, u64)]) -> Result<(u64, u64)> {
    if pairs.is_empty() {
        return Err(Error::EmptyInput);
    }
    let mut x = 0u64;
    let mut n = 1u64;
    for &(r, mi) in pairs {
        if mi == 0 {
            return Err(Error::NonPositive { what: "modulus", value: 0 });
        }
        if gcd(n, mi) != 1 {
            let other = pairs.iter().map(|p| p.1).find(|&o| gcd(o, mi) != 1).unwrap_or(n);
            return Err(Error::NotCoprime { m1: other, m2: mi });
        }
        let next = n.checked_mul(mi).ok_or(Error::Overflow)?;
        // x + n·t ≡ r (mod mi)
        let diff = ((r % mi) as i128 - (x % mi) as i128).rem_euclid(mi as i128) as u64;
        let t = mul_mod(diff, inv_mod(n % mi, mi).unwrap_or(0), mi);
        x = ((x as u128 + n as u128 * t as u128) % next as u128) as u64;
        n = next;
    }
    Ok((if x == 0 { n } else { x }, n))
}
