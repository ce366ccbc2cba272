//! Normal and regular residues, the class groups `R_m^e` and orbits.
//!
//! A residue is regular when `a^{|a|+1} ≡ a` and normal when its idempotent
//! powers occur exactly at the multiples of `|a|`. Each `R_m^e` is an
//! Abelian group with identity `e`; `R_m` is their disjoint union.

use alloc::vec::Vec;

use crate::arith::{gcd, lcm, valuation, Modulus};
use crate::idempotent::{self, power_profile, profile_from_parts, PowerProfile};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ResidueClassification {
    pub a: u64,
    pub is_normal: bool,
    pub is_regular: bool,
    pub order: u64,
    pub idem_class: u64,
    pub mu: u64,
    pub delta: u64,
}

/// `μ_m` of a residue whose non-unit components are `mask`: the product of
/// the prime powers on which its idempotent class is 1.
fn mu_of_mask(m: &Modulus, mask: u32) -> u64 {
    m.components().iter().enumerate().filter(|(i, _)| mask >> i & 1 == 0).map(|(_, c)| c.q).product()
}

fn classification(m: &Modulus, a: u64, p: &PowerProfile) -> ResidueClassification {
    ResidueClassification {
        a,
        is_normal: p.is_normal(),
        is_regular: p.is_regular(),
        order: p.order,
        idem_class: p.idem_class,
        mu: mu_of_mask(m, p.mask),
        delta: p.delta(),
    }
}

pub fn classify(m: &Modulus, a: u64) -> ResidueClassification {
    let a = m.reduce(a);
    classification(m, a, &power_profile(m, a))
}

/// `μ_m(a)`; `μ_m(m) = 1`.
pub fn mu(m: &Modulus, a: u64) -> u64 {
    mu_of_mask(m, power_profile(m, a).mask)
}

/// Regularity from the definition `a^{|a|+1} ≡ a`.
pub fn regular_by_definition(m: &Modulus, a: u64) -> bool {
    let a = m.reduce(a);
    m.pow(a, idempotent::order(m, a).order + 1) == a
}

/// Regularity as `p | a ⟹ p^α | a` for every `p^α ‖ m`.
pub fn regular_by_divisibility(m: &Modulus, a: u64) -> bool {
    let a = m.reduce(a);
    m.components().iter().all(|c| a % c.p != 0 || a % c.q == 0)
}

/// Regularity as `(a, m/(a,m)) = 1`.
pub fn regular_by_gcd(m: &Modulus, a: u64) -> bool {
    let a = m.reduce(a);
    let g = gcd(a, m.value());
    gcd(a, m.value() / g) == 1
}

/// `orb(a) = {a^1, ..., a^{|a|}}`, stored sorted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitSet {
    pub generator: u64,
    pub elements: Vec<u64>,
}

impl OrbitSet {
    pub fn contains(&self, x: u64) -> bool {
        self.elements.binary_search(&x).is_ok()
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }
}

pub fn orbit(m: &Modulus, a: u64) -> OrbitSet {
    let a = m.reduce(a);
    let n = idempotent::order(m, a).order;
    let mut elements = Vec::with_capacity(n as usize);
    let mut x = a;
    for _ in 0..n {
        elements.push(x);
        x = m.mul(x, a);
    }
    elements.sort_unstable();
    elements.dedup();
    OrbitSet { generator: a, elements }
}

/// Per-modulus table of orders, classes and flags for every residue.
///
/// Building it costs `O(m·ω(m))` after one pass over each prime-power
/// component, and it refuses moduli beyond the enumeration cap.
#[derive(Debug, Clone)]
pub struct StructureTable {
    modulus: Modulus,
    idempotents: Vec<u64>,
    class_by_mask: Vec<u64>,
    profiles: Vec<PowerProfile>,
}

/// Per-component lookup: unit order, or the threshold `⌈α/v_p(r)⌉`.
enum Local {
    Unit(u64),
    NonUnit(u64),
}

impl StructureTable {
    pub fn new(modulus: Modulus, cap: u64) -> Result<Self> {
        modulus.ensure_enumerable(cap)?;
        let n = modulus.value();
        let w = modulus.omega();
        let class_by_mask: Vec<u64> =
            (0..1u32 << w).map(|mask| idempotent::idempotent_for_mask(&modulus, mask)).collect();
        let mut idempotents = class_by_mask.clone();
        idempotents.sort_unstable();

        let locals: Vec<Vec<Local>> = modulus
            .components()
            .iter()
            .map(|c| {
                (0..c.q)
                    .map(|r| {
                        if r % c.p != 0 {
                            Local::Unit(c.unit_order(r))
                        } else if r == 0 {
                            Local::NonUnit(1)
                        } else {
                            Local::NonUnit((c.alpha as u64).div_ceil(valuation(r, c.p) as u64))
                        }
                    })
                    .collect()
            })
            .collect();

        let profiles = (1..=n)
            .map(|a| {
                let (mut l, mut t, mut mask) = (1u64, 1u64, 0u32);
                for (i, c) in modulus.components().iter().enumerate() {
                    match locals[i][(a % c.q) as usize] {
                        Local::Unit(o) => l = lcm(l, o),
                        Local::NonUnit(th) => {
                            mask |= 1 << i;
                            t = t.max(th);
                        }
                    }
                }
                profile_from_parts(l, t, mask, class_by_mask[mask as usize])
            })
            .collect();
        Ok(StructureTable { modulus, idempotents, class_by_mask, profiles })
    }

    pub fn build(n: u64, cap: u64) -> Result<Self> {
        Self::new(Modulus::new(n)?, cap)
    }

    pub fn modulus(&self) -> &Modulus {
        &self.modulus
    }

    pub fn m(&self) -> u64 {
        self.modulus.value()
    }

    pub fn idempotents(&self) -> &[u64] {
        &self.idempotents
    }

    pub fn is_idempotent(&self, e: u64) -> bool {
        self.idempotents.binary_search(&e).is_ok()
    }

    pub fn ensure_idempotent(&self, e: u64) -> Result<()> {
        if self.is_idempotent(e) {
            Ok(())
        } else {
            Err(Error::NotIdempotent { m: self.m(), value: e })
        }
    }

    /// Profile of a canonical residue `a ∈ 1..=m`.
    #[inline]
    pub fn profile(&self, a: u64) -> &PowerProfile {
        &self.profiles[(a - 1) as usize]
    }

    #[inline]
    pub fn order(&self, a: u64) -> u64 {
        self.profile(a).order
    }

    #[inline]
    pub fn idem_class(&self, a: u64) -> u64 {
        self.profile(a).idem_class
    }

    #[inline]
    pub fn is_regular(&self, a: u64) -> bool {
        self.profile(a).is_regular()
    }

    #[inline]
    pub fn is_normal(&self, a: u64) -> bool {
        self.profile(a).is_normal()
    }

    pub fn delta(&self, a: u64) -> u64 {
        self.profile(a).delta()
    }

    pub fn mu(&self, a: u64) -> u64 {
        mu_of_mask(&self.modulus, self.profile(a).mask)
    }

    pub fn classify(&self, a: u64) -> ResidueClassification {
        classification(&self.modulus, a, self.profile(a))
    }

    /// The idempotent with non-unit components `mask`.
    pub fn class_for_mask(&self, mask: u32) -> u64 {
        self.class_by_mask[mask as usize]
    }

    fn filtered(&self, e: Option<u64>, keep: impl Fn(&PowerProfile) -> bool) -> Result<Vec<u64>> {
        if let Some(e) = e {
            self.ensure_idempotent(e)?;
        }
        Ok((1..=self.m())
            .filter(|&a| {
                let p = self.profile(a);
                keep(p) && e.map_or(true, |e| p.idem_class == e)
            })
            .collect())
    }

    /// `R_m`, or `R_m^e` when a class is given.
    pub fn regular_set(&self, e: Option<u64>) -> Result<Vec<u64>> {
        self.filtered(e, PowerProfile::is_regular)
    }

    /// `N_m`, or `N_m^e` when a class is given.
    pub fn normal_set(&self, e: Option<u64>) -> Result<Vec<u64>> {
        self.filtered(e, PowerProfile::is_normal)
    }

    pub fn orbit(&self, a: u64) -> OrbitSet {
        orbit(&self.modulus, a)
    }

    /// `a^z` with the signed-power conventions, using the cached order.
    pub fn signed_power(&self, a: u64, z: i64) -> u64 {
        let m = &self.modulus;
        if z > 0 {
            return m.pow(a, z as u64);
        }
        let n = self.order(a);
        if z == 0 {
            return m.pow(a, n);
        }
        let inv = m.pow(a, if n == 1 { 1 } else { n - 1 });
        m.pow(inv, z.unsigned_abs())
    }

    /// `ind_b a` using the cached order and δ.
    pub fn index(&self, b: u64, a: u64) -> Option<u64> {
        let p = self.profile(b);
        let mut x = b;
        for k in 1..p.order + p.delta() {
            if x == a {
                return Some(k);
            }
            x = self.modulus.mul(x, b);
        }
        None
    }

    fn ensure_regular(&self, a: u64) -> Result<()> {
        if self.is_regular(a) {
            Ok(())
        } else {
            Err(Error::NotRegular { m: self.m(), value: a })
        }
    }

    fn ensure_same_class(&self, a: u64, b: u64) -> Result<()> {
        self.ensure_regular(a)?;
        self.ensure_regular(b)?;
        if self.idem_class(a) != self.idem_class(b) {
            return Err(Error::ClassMismatch { m: self.m(), a, b });
        }
        Ok(())
    }

    /// `D_m(b, c) = gcd{n ≤ |b| : b^n ∈ orb(c)}` for `b, c` in one `R_m^e`.
    pub fn orbit_gcd(&self, b: u64, c: u64) -> Result<u64> {
        let (b, c) = (self.modulus.reduce(b), self.modulus.reduce(c));
        self.ensure_same_class(b, c)?;
        let orb_c = self.orbit(c);
        Ok(orbit_gcd_with(&self.modulus, b, self.order(b), &orb_c))
    }

    /// `|a, b|_m = |orb(a) ∩ orb(b)| = |a| / D_m(a, b)`.
    pub fn relative_order(&self, a: u64, b: u64) -> Result<u64> {
        let d = self.orbit_gcd(a, b)?;
        Ok(self.order(self.modulus.reduce(a)) / d)
    }

    /// `a ~ b`: same class, same order and `ind_b a` exists.
    pub fn equivalent(&self, a: u64, b: u64) -> Result<bool> {
        let (a, b) = (self.modulus.reduce(a), self.modulus.reduce(b));
        self.ensure_regular(a)?;
        self.ensure_regular(b)?;
        Ok(self.idem_class(a) == self.idem_class(b) && self.order(a) == self.order(b) && self.index(b, a).is_some())
    }

    /// Some `d ∈ R_m^e` with `a ∈ orb(d)` and `|d| = [|b|, |c|]`, for
    /// `a ∈ orb(b) ∩ orb(c)`.
    ///
    /// Each prime of `[|b|, |c|]` is taken from whichever of `b`, `c` carries
    /// it to the higher power: `d = b^{|b|/x}·c^{|c|/y}` with `x, y` coprime,
    /// `xy = [|b|, |c|]`.
    pub fn join_witness(&self, b: u64, c: u64, a: u64) -> Result<u64> {
        let m = &self.modulus;
        let (b, c, a) = (m.reduce(b), m.reduce(c), m.reduce(a));
        self.ensure_same_class(b, c)?;
        self.ensure_same_class(b, a)?;
        if !self.orbit(b).contains(a) || !self.orbit(c).contains(a) {
            return Err(Error::Precondition("a must lie in orb(b) ∩ orb(c)"));
        }
        Ok(self.join_unchecked(b, c))
    }

    /// The [`Self::join_witness`] construction without operand checks.
    pub fn join_unchecked(&self, b: u64, c: u64) -> u64 {
        let m = &self.modulus;
        let (nb, nc) = (self.order(b), self.order(c));
        let (mut x, mut y) = (1u64, 1u64);
        let f = crate::arith::factorize(lcm(nb, nc)).expect("orders are positive");
        for &(p, _) in f.factors() {
            let (vb, vc) = (valuation(nb, p), valuation(nc, p));
            if vb >= vc {
                x *= p.pow(vb);
            } else {
                y *= p.pow(vc);
            }
        }
        m.mul(m.pow(b, nb / x), m.pow(c, nc / y))
    }

    /// `∏ R_m^e mod m`.
    pub fn class_product(&self, e: u64) -> Result<u64> {
        self.ensure_idempotent(e)?;
        let m = &self.modulus;
        Ok((1..=self.m())
            .filter(|&a| self.is_regular(a) && self.idem_class(a) == e)
            .fold(m.reduce(1), |acc, a| m.mul(acc, a)))
    }

    /// `R_m^e` for every `e`, keyed by the class, classes ascending.
    pub fn class_partition(&self) -> Vec<(u64, Vec<u64>)> {
        let mut parts: Vec<(u64, Vec<u64>)> = self.idempotents.iter().map(|&e| (e, Vec::new())).collect();
        for a in 1..=self.m() {
            let p = self.profile(a);
            if p.is_regular() {
                let slot = self.idempotents.binary_search(&p.idem_class).expect("class is idempotent");
                parts[slot].1.push(a);
            }
        }
        parts
    }
}

/// `D(b, c)` given `|b|` and a precomputed `orb(c)`.
pub fn orbit_gcd_with(m: &Modulus, b: u64, order_b: u64, orb_c: &OrbitSet) -> u64 {
    let mut d = 0u64;
    let mut x = b;
    for n in 1..=order_b {
        if orb_c.contains(x) {
            d = gcd(d, n);
        }
        x = m.mul(x, b);
    }
    d
}

/// Orbit membership bitsets for every regular residue of one modulus.
///
/// Memory is `|R_m|·m/64` words, so this is meant for sweep-sized moduli.
#[derive(Debug, Clone)]
pub struct OrbitAtlas<'t> {
    table: &'t StructureTable,
    regular: Vec<u64>,
    slot: Vec<u32>,
    words: usize,
    bits: Vec<u64>,
}

const NO_SLOT: u32 = u32::MAX;

impl<'t> OrbitAtlas<'t> {
    pub fn new(table: &'t StructureTable) -> Self {
        let n = table.m();
        let m = table.modulus();
        let regular: Vec<u64> = (1..=n).filter(|&a| table.is_regular(a)).collect();
        let mut slot = alloc::vec![NO_SLOT; n as usize];
        for (i, &a) in regular.iter().enumerate() {
            slot[(a - 1) as usize] = i as u32;
        }
        let words = (n as usize).div_ceil(64);
        let mut bits = alloc::vec![0u64; regular.len() * words];
        for (i, &a) in regular.iter().enumerate() {
            let row = &mut bits[i * words..(i + 1) * words];
            let mut x = a;
            for _ in 0..table.order(a) {
                let j = (x - 1) as usize;
                row[j / 64] |= 1 << (j % 64);
                x = m.mul(x, a);
            }
        }
        OrbitAtlas { table, regular, slot, words, bits }
    }

    pub fn table(&self) -> &'t StructureTable {
        self.table
    }

    /// `R_m`, ascending.
    pub fn regular(&self) -> &[u64] {
        &self.regular
    }

    /// Position of `a` in [`Self::regular`].
    pub fn slot(&self, a: u64) -> Option<usize> {
        match self.slot[(a - 1) as usize] {
            NO_SLOT => None,
            s => Some(s as usize),
        }
    }

    /// Membership row of `orb(c)`; `c` must be regular.
    pub fn orbit_bits(&self, c: u64) -> &[u64] {
        let i = self.slot(c).expect("orbit rows exist for regular residues only");
        &self.bits[i * self.words..(i + 1) * self.words]
    }

    #[inline]
    pub fn in_orbit(&self, c: u64, x: u64) -> bool {
        let j = (x - 1) as usize;
        self.orbit_bits(c)[j / 64] >> (j % 64) & 1 == 1
    }

    pub fn orbit_len(&self, c: u64) -> u64 {
        self.orbit_bits(c).iter().map(|w| w.count_ones() as u64).sum()
    }

    pub fn intersection_size(&self, b: u64, c: u64) -> u64 {
        self.orbit_bits(b).iter().zip(self.orbit_bits(c)).map(|(x, y)| (x & y).count_ones() as u64).sum()
    }

    /// `orb(b) ⊆ orb(c)`.
    pub fn orbit_subset(&self, b: u64, c: u64) -> bool {
        self.orbit_bits(b).iter().zip(self.orbit_bits(c)).all(|(x, y)| x & !y == 0)
    }

    /// `D_m(b, c)` by scanning `b^1..b^{|b|}`; 0 when no power of `b` lies in `orb(c)`.
    pub fn d(&self, b: u64, c: u64) -> u64 {
        let m = self.table.modulus();
        let mut g = 0;
        let mut x = b;
        for n in 1..=self.table.order(b) {
            if self.in_orbit(c, x) {
                g = gcd(g, n);
            }
            x = m.mul(x, b);
        }
        g
    }
}
