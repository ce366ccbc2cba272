//! The Boolean ring on `E_m`.
//!
//! With `ē = 1 − e`: `e1∘e2 = e1e2 + ē1ē2`, `e1⊗e2 = 1 − ē1ē2` and
//! `e1 simdiff e2 = 1 − ē1e2`. Under `e ↦ B_m(e) = {p^α ‖ m : p^α | e}`
//! these become symmetric difference, intersection and set difference.

use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::arith::Modulus;
use crate::idempotent::enumerate_idempotents;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IdemOp {
    Complement,
    Circ,
    Otimes,
    Simdiff,
}

impl IdemOp {
    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "complement" => Some(IdemOp::Complement),
            "circ" => Some(IdemOp::Circ),
            "otimes" => Some(IdemOp::Otimes),
            "simdiff" => Some(IdemOp::Simdiff),
            _ => None,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            IdemOp::Complement => "complement",
            IdemOp::Circ => "circ",
            IdemOp::Otimes => "otimes",
            IdemOp::Simdiff => "simdiff",
        }
    }
}

#[inline]
pub fn complement(m: &Modulus, e: u64) -> u64 {
    m.sub(1, e)
}

#[inline]
pub fn circ(m: &Modulus, e1: u64, e2: u64) -> u64 {
    m.add(m.mul(e1, e2), m.mul(complement(m, e1), complement(m, e2)))
}

#[inline]
pub fn otimes(m: &Modulus, e1: u64, e2: u64) -> u64 {
    complement(m, m.mul(complement(m, e1), complement(m, e2)))
}

#[inline]
pub fn simdiff(m: &Modulus, e1: u64, e2: u64) -> u64 {
    complement(m, m.mul(complement(m, e1), e2))
}

/// One operator application with operand validation.
pub fn idem_op(m: &Modulus, op: IdemOp, e1: i128, e2: Option<i128>) -> Result<u64> {
    let check = |e: i128| {
        let e = m.canon(e);
        if m.is_idempotent(e) {
            Ok(e)
        } else {
            Err(Error::NotIdempotent { m: m.value(), value: e })
        }
    };
    let a = check(e1)?;
    if op == IdemOp::Complement {
        return Ok(complement(m, a));
    }
    let b = check(e2.ok_or(Error::Precondition("binary operator needs a second operand"))?)?;
    Ok(match op {
        IdemOp::Circ => circ(m, a, b),
        IdemOp::Otimes => otimes(m, a, b),
        IdemOp::Simdiff => simdiff(m, a, b),
        IdemOp::Complement => unreachable!(),
    })
}

/// Operator tables over `E_m`; rows and columns follow [`Self::elements`].
#[derive(Debug, Clone)]
pub struct IdemOpsTable {
    pub m: u64,
    pub elements: Vec<u64>,
    pub complement: Vec<u64>,
    pub circ: Vec<Vec<u64>>,
    pub otimes: Vec<Vec<u64>>,
    pub simdiff: Vec<Vec<u64>>,
}

impl IdemOpsTable {
    pub fn new(m: &Modulus) -> Self {
        let elements = enumerate_idempotents(m).elements().to_vec();
        let table = |f: fn(&Modulus, u64, u64) -> u64| -> Vec<Vec<u64>> {
            elements.iter().map(|&a| elements.iter().map(|&b| f(m, a, b)).collect()).collect()
        };
        IdemOpsTable {
            m: m.value(),
            complement: elements.iter().map(|&e| complement(m, e)).collect(),
            circ: table(circ),
            otimes: table(otimes),
            simdiff: table(simdiff),
            elements,
        }
    }
}

/// `B_m` and `e ↦ B_m(e)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasisMap {
    pub basis: Vec<u64>,
    pub member_sets: Vec<(u64, Vec<u64>)>,
}

impl BasisMap {
    pub fn members(&self, e: u64) -> Option<&[u64]> {
        self.member_sets.iter().find(|(x, _)| *x == e).map(|(_, s)| s.as_slice())
    }
}

/// `B_m(e)` as a bitmask over the components.
pub fn basis_mask(m: &Modulus, e: u64) -> u32 {
    crate::idempotent::mask_of(m, e)
}

pub fn basis_map(m: &Modulus) -> BasisMap {
    let basis: Vec<u64> = m.components().iter().map(|c| c.q).collect();
    let member_sets = enumerate_idempotents(m)
        .elements()
        .iter()
        .map(|&e| (e, basis.iter().copied().filter(|&q| e % q == 0).collect()))
        .collect();
    BasisMap { basis, member_sets }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LawCheck {
    pub law: &'static str,
    pub passed: bool,
    pub checked: u64,
    pub counterexample: Option<Vec<(&'static str, u64)>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraReport {
    pub m: u64,
    pub laws: Vec<LawCheck>,
}

impl AlgebraReport {
    pub fn all_passed(&self) -> bool {
        self.laws.iter().all(|l| l.passed)
    }
}

struct Law {
    name: &'static str,
    checked: u64,
    counterexample: Option<Vec<(&'static str, u64)>>,
}

impl Law {
    fn new(name: &'static str) -> Self {
        Law { name, checked: 0, counterexample: None }
    }

    fn check(&mut self, ok: bool, witness: impl FnOnce() -> Vec<(&'static str, u64)>) {
        self.checked += 1;
        if !ok && self.counterexample.is_none() {
            self.counterexample = Some(witness());
        }
    }

    fn finish(self) -> LawCheck {
        LawCheck {
            law: self.name,
            passed: self.counterexample.is_none(),
            checked: self.checked,
            counterexample: self.counterexample,
        }
    }
}

/// Checks ia02, ia03, ia05-ia11 on `E_m`. The mixing identity of ia02 runs
/// over all `(a, b) ∈ Z_m²` against a few fixed `(c, d)` for `m ≤ 100`, and
/// over seeded random quadruples beyond.
pub fn verify_algebra(m: &Modulus) -> AlgebraReport {
    let es = enumerate_idempotents(m).elements().to_vec();
    let n = m.value();
    let bar = |e: u64| complement(m, e);
    let mut laws = Vec::new();

    let mut mix = Law::new("ia02 (ae+bē)(ce+dē) ≡ (ac)e+(bd)ē");
    let mut mix_pow = Law::new("ia02 (ae+bē)^n ≡ a^n e + b^n ē");
    let mix_one = |law: &mut Law, law_pow: &mut Law, e: u64, a: u64, b: u64, c: u64, d: u64, k: u64| {
        let x = m.add(m.mul(a, e), m.mul(b, bar(e)));
        let y = m.add(m.mul(c, e), m.mul(d, bar(e)));
        let rhs = m.add(m.mul(m.mul(a, c), e), m.mul(m.mul(b, d), bar(e)));
        law.check(m.mul(x, y) == rhs, || alloc::vec![("e", e), ("a", a), ("b", b), ("c", c), ("d", d)]);
        let pw = m.add(m.mul(m.pow(a, k), e), m.mul(m.pow(b, k), bar(e)));
        law_pow.check(m.pow(x, k) == pw, || alloc::vec![("e", e), ("a", a), ("b", b), ("n", k)]);
    };
    if n <= 100 {
        let cds = [(1, 1), (2, 3), (n, 1), (n - 1 + (n == 1) as u64, 5 % n + 1)];
        for &e in &es {
            for a in 1..=n {
                for b in 1..=n {
                    for &(c, d) in &cds {
                        mix_one(&mut mix, &mut mix_pow, e, a, b, c, d, 1 + (a + b) % 5);
                    }
                }
            }
        }
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(n);
        for &e in &es {
            for _ in 0..256 {
                let [a, b, c, d] = [(); 4].map(|_| rng.gen_range(1..=n));
                let k = rng.gen_range(1..=12);
                mix_one(&mut mix, &mut mix_pow, e, a, b, c, d, k);
            }
        }
    }
    laws.push(mix.finish());
    laws.push(mix_pow.finish());

    let pairs = || es.iter().flat_map(|&x| es.iter().map(move |&y| (x, y)));
    let triples = || pairs().flat_map(|(x, y)| es.iter().map(move |&z| (x, y, z)));

    let mut closure = Law::new("ia03 operators stay in E_m");
    for &e in &es {
        closure.check(m.is_idempotent(bar(e)), || alloc::vec![("e", e)]);
    }
    for (x, y) in pairs() {
        let ok = [m.mul(x, y), circ(m, x, y), otimes(m, x, y), simdiff(m, x, y)].iter().all(|&v| m.is_idempotent(v));
        closure.check(ok, || alloc::vec![("e1", x), ("e2", y)]);
    }
    laws.push(closure.finish());

    let full = (1u32 << m.omega()) - 1;
    let bm = |e: u64| basis_mask(m, e);
    let mut iso = Law::new("ia05 B_m(e) is an isomorphism onto subsets of B_m");
    let mut seen = Vec::new();
    for &e in &es {
        iso.check(bm(bar(e)) == full & !bm(e), || alloc::vec![("e", e)]);
        seen.push(bm(e));
    }
    seen.sort_unstable();
    seen.dedup();
    iso.check(seen.len() == es.len() && es.len() == 1 << m.omega(), || alloc::vec![("m", n)]);
    iso.check(bm(1) == 0 && bm(n) == full, || alloc::vec![("m", n)]);
    for (x, y) in pairs() {
        let ok = bm(m.mul(x, y)) == bm(x) | bm(y)
            && bm(otimes(m, x, y)) == bm(x) & bm(y)
            && bm(simdiff(m, x, y)) == bm(x) & !bm(y)
            && bm(circ(m, x, y)) == bm(x) ^ bm(y);
        iso.check(ok, || alloc::vec![("e1", x), ("e2", y)]);
    }
    laws.push(iso.finish());

    let mut group = Law::new("ia06 (E_m, ∘) is an Abelian group of exponent 2");
    for &e in &es {
        group.check(circ(m, e, 1) == e && circ(m, e, e) == 1, || alloc::vec![("e", e)]);
        let mut translate: Vec<u64> = es.iter().map(|&x| circ(m, e, x)).collect();
        translate.sort_unstable();
        group.check(translate == es, || alloc::vec![("e2", e)]);
    }
    for (x, y) in pairs() {
        group.check(circ(m, x, y) == circ(m, y, x), || alloc::vec![("e1", x), ("e2", y)]);
    }
    for (x, y, z) in triples() {
        group.check(circ(m, circ(m, x, y), z) == circ(m, x, circ(m, y, z)), || {
            alloc::vec![("e1", x), ("e2", y), ("e3", z)]
        });
    }
    laws.push(group.finish());

    let mut ot = Law::new("ia07 ⊗ commutative, associative, distributive");
    for (x, y) in pairs() {
        ot.check(otimes(m, x, y) == otimes(m, y, x), || alloc::vec![("e1", x), ("e2", y)]);
    }
    for (x, y, z) in triples() {
        let w = || alloc::vec![("e1", x), ("e2", y), ("e3", z)];
        ot.check(otimes(m, otimes(m, x, y), z) == otimes(m, x, otimes(m, y, z)), w);
        ot.check(m.mul(x, otimes(m, y, z)) == otimes(m, m.mul(x, y), m.mul(x, z)), w);
        ot.check(otimes(m, x, circ(m, y, z)) == circ(m, otimes(m, x, y), otimes(m, x, z)), w);
    }
    laws.push(ot.finish());

    let mut ring = Law::new("ia08 (E_m, ∘, ⊗) is a commutative ring");
    for &e in &es {
        // ∘-identity 1, ⊗-identity m, ∘-inverse e itself.
        ring.check(circ(m, e, 1) == e && otimes(m, e, n) == e && circ(m, e, e) == 1, || alloc::vec![("e", e)]);
    }
    for (x, y, z) in triples() {
        let ok = otimes(m, circ(m, x, y), z) == circ(m, otimes(m, x, z), otimes(m, y, z));
        ring.check(ok, || alloc::vec![("e1", x), ("e2", y), ("e3", z)]);
    }
    laws.push(ring.finish());

    let mut i9 = Law::new("ia09 complement and ∘ identities");
    for &e in &es {
        let ok = m.mul(e, bar(e)) == n
            && m.add(e, bar(e)) == m.reduce(1)
            && circ(m, e, 1) == e
            && circ(m, e, bar(e)) == n
            && circ(m, e, n) == bar(e);
        i9.check(ok, || alloc::vec![("e", e)]);
    }
    for (x, y) in pairs() {
        let c = circ(m, x, y);
        let ok = bar(c) == circ(m, bar(x), y)
            && bar(c) == circ(m, x, bar(y))
            && c == m.mul(m.add(x, bar(y)), m.add(bar(x), y))
            && c == m.pow(m.sub(x, bar(y)), 2)
            && c == m.pow(m.sub(bar(x), y), 2);
        i9.check(ok, || alloc::vec![("e1", x), ("e2", y)]);
    }
    laws.push(i9.finish());

    let mut i10 = Law::new("ia10 ⊗ identities");
    for &e in &es {
        let ok = otimes(m, e, e) == e
            && otimes(m, e, 1) == m.reduce(1)
            && otimes(m, e, bar(e)) == m.reduce(1)
            && otimes(m, e, n) == e;
        i10.check(ok, || alloc::vec![("e", e)]);
    }
    for (x, y) in pairs() {
        let diff = m.sub(otimes(m, x, y), otimes(m, bar(x), bar(y)));
        let rhs = m.sub(m.mul(x, y), m.mul(bar(x), bar(y)));
        let ok = diff == rhs
            && m.pow(diff, 2) == circ(m, x, y)
            && bar(otimes(m, bar(x), bar(y))) == m.mul(x, y)
            && otimes(m, m.mul(x, y), m.mul(bar(x), bar(y))) == circ(m, x, y);
        i10.check(ok, || alloc::vec![("e1", x), ("e2", y)]);
    }
    for (x, y, z) in triples() {
        let nary = bar(m.mul(m.mul(bar(x), bar(y)), bar(z)));
        i10.check(otimes(m, otimes(m, x, y), z) == nary, || alloc::vec![("e1", x), ("e2", y), ("e3", z)]);
    }
    laws.push(i10.finish());

    let mut i11 = Law::new("ia11 ⊗ decomposition over ∘");
    for (x, y, e) in triples() {
        let lhs = otimes(m, circ(m, x, e), circ(m, y, e));
        let rhs = m.add(m.mul(otimes(m, x, y), e), m.mul(otimes(m, bar(x), bar(y)), bar(e)));
        i11.check(lhs == rhs, || alloc::vec![("e1", x), ("e2", y), ("e", e)]);
    }
    for (x, y) in pairs() {
        let ok = otimes(m, x, y) == m.sub(m.add(x, y), m.mul(x, y));
        i11.check(ok, || alloc::vec![("e1", x), ("e2", y)]);
    }
    laws.push(i11.finish());

    AlgebraReport { m: n, laws }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn md(n: u64) -> Modulus {
        Modulus::new(n).unwrap()
    }

    #[test]
    fn operator_examples() {
        let m = md(12);
        assert_eq!(idem_op(&m, IdemOp::Complement, 4, None).unwrap(), 9);
        assert_eq!(idem_op(&m, IdemOp::Circ, 4, Some(9)).unwrap(), 12);
        assert_eq!(idem_op(&m, IdemOp::Circ, 4, Some(12)).unwrap(), 9);
        assert_eq!(idem_op(&m, IdemOp::Otimes, 4, Some(4)).unwrap(), 4);
        assert_eq!(idem_op(&m, IdemOp::Otimes, 4, Some(9)).unwrap(), 1);
        assert_eq!(idem_op(&m, IdemOp::Circ, 4, Some(0)).unwrap(), 9);
        assert!(matches!(idem_op(&m, IdemOp::Circ, 2, Some(4)), Err(Error::NotIdempotent { .. })));
        assert!(idem_op(&m, IdemOp::Otimes, 4, None).is_err());
    }

    #[test]
    fn basis_examples() {
        let b = basis_map(&md(12));
        assert_eq!(b.basis, [4, 3]);
        assert_eq!(b.members(4).unwrap(), [4]);
        assert_eq!(b.members(9).unwrap(), [3]);
        assert!(b.members(1).unwrap().is_empty());
        assert_eq!(b.members(12).unwrap(), [4, 3]);
        assert_eq!(basis_map(&md(49)).basis, [49]);
    }

    #[test]
    fn laws_pass_on_examples() {
        for n in [12, 30, 49, 1, 2, 210] {
            let r = verify_algebra(&md(n));
            assert!(r.all_passed(), "m={n}: {:?}", r.laws.iter().find(|l| !l.passed));
        }
    }

    #[test]
    fn table_entries_are_idempotent() {
        let m = md(60);
        let t = IdemOpsTable::new(&m);
        assert_eq!(t.elements.len(), 8);
        for row in t.circ.iter().chain(&t.otimes).chain(&t.simdiff) {
            assert!(row.iter().all(|&v| m.is_idempotent(v)));
        }
    }
}
