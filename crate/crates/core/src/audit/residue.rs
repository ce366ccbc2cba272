//! Idempotent, normal and regular statements.

use alloc::vec;
use alloc::vec::Vec;

use super::{coprime, wit, Ctx, Sink};
use crate::arith::{divisors, gcd, lcm, totient, Modulus};
use crate::oracle;
use crate::structure::regular_by_divisibility;
use crate::structure::regular_by_gcd;

fn canon(x: u64, d: u64) -> u64 {
    match x % d {
        0 => d,
        r => r,
    }
}

fn power_is_idempotent(c: &Ctx<'_>, s: &mut Sink, k: u64) {
    let m = c.md();
    for a in 1..=c.n() {
        let x = m.pow(a, k);
        s.holds(m.is_idempotent(x), "a^k ∈ E_m", || wit![a, k, x]);
    }
}

pub(super) fn in02(c: &Ctx<'_>, s: &mut Sink) {
    power_is_idempotent(c, s, c.md().phi());
}

pub(super) fn in12(c: &Ctx<'_>, s: &mut Sink) {
    power_is_idempotent(c, s, c.md().psi());
}

pub(super) fn in03(c: &Ctx<'_>, s: &mut Sink) {
    let m = c.md();
    let bound = 2 * m.phi();
    for a in 1..=c.n() {
        let mut first: Option<(u64, u64)> = None;
        let mut x = a;
        for k in 1..=bound {
            if m.is_idempotent(x) {
                match first {
                    None => first = Some((k, x)),
                    Some((k0, x0)) => s.eq(x0, x, "a^k ≡ a^l", || wit![a, k = k0, l = k]),
                }
            }
            x = m.mul(x, a);
        }
    }
}

pub(super) fn in05(c: &Ctx<'_>, s: &mut Sink) {
    let m = c.md();
    for (m1, m2) in c.lcm_pairs() {
        for e in 1..=c.n() {
            let local = |d: u64| (e as u128 * e as u128 % d as u128) as u64 == e % d;
            s.eq(m.is_idempotent(e), local(m1) && local(m2), "e ∈ E_m ⟺ e ∈ E_m1 ∧ e ∈ E_m2", || {
                wit![m1, m2, e]
            });
        }
    }
}

pub(super) fn in06(c: &Ctx<'_>, s: &mut Sink) {
    let brute = oracle::idempotents_raw(c.n());
    s.eq(brute.clone(), c.t.idempotents().to_vec(), "CRT set equals scan", || wit![]);
    s.eq(1u64 << c.md().omega(), brute.len() as u64, "|E_m| = 2^ω(m)", || wit![]);
}

pub(super) fn in07(c: &Ctx<'_>, s: &mut Sink) {
    let m = c.md();
    let n = c.n();
    for k in 1..=n {
        let mut v: Vec<u64> = c.t.idempotents().iter().map(|&e| m.mul(k, e)).collect();
        v.sort_unstable();
        v.dedup();
        let w = Modulus::new(n / gcd(k, n)).expect("positive").omega();
        s.eq(1u64 << w, v.len() as u64, "|kE_m| = 2^ω(m/(k,m))", || wit![k]);
    }
}

pub(super) fn in08(c: &Ctx<'_>, s: &mut Sink) {
    let m = c.md();
    let phi = m.phi();
    for a in 1..=c.n() {
        s.eq(m.pow(gcd(a, c.n()), phi), m.pow(a, phi), "a^φ ≡ (a,m)^φ", || wit![a]);
    }
}

pub(super) fn in10(c: &Ctx<'_>, s: &mut Sink) {
    let m = c.md();
    // (base, height, exact tower value)
    let direct: [(u64, u64, u64); 10] = [
        (1, 3, 1),
        (2, 1, 2),
        (2, 2, 4),
        (2, 3, 16),
        (2, 4, 1 << 16),
        (3, 2, 27),
        (3, 3, 3u64.pow(27)),
        (4, 2, 256),
        (5, 2, 3125),
        (6, 2, 46656),
    ];
    for &(base, height, value) in &direct {
        let want = m.reduce(value);
        let got = crate::idempotent::tower_mod(m, base, height);
        s.eq(want, got, "tower_mod matches direct powering", || wit![base, height]);
    }
}

pub(super) fn in11(c: &Ctx<'_>, s: &mut Sink) {
    let m = c.md();
    let b = (2 * m.phi()).min(40);
    for a in 1..=c.n() {
        let mut p = vec![0u64; 2 * b as usize + 1];
        let mut x = a;
        for slot in p.iter_mut().skip(1) {
            *slot = x;
            x = m.mul(x, a);
        }
        for k in 1..=b {
            for n in k..=b {
                if s.hyp(p[(k + n) as usize] == p[k as usize]) {
                    let an = p[n as usize];
                    s.holds(m.is_idempotent(an), "a^n ∈ E_m", || wit![a, k, n]);
                }
            }
        }
    }
}

/// `a, a², …, a^len`.
fn powers(m: &Modulus, a: u64, len: u64) -> Vec<u64> {
    let mut v = Vec::with_capacity(len as usize);
    let mut x = a;
    for _ in 0..len {
        v.push(x);
        x = m.mul(x, a);
    }
    v
}

pub(super) fn nn02(c: &Ctx<'_>, s: &mut Sink) {
    let m = c.md();
    let d = c.defs();
    let bound = 2 * m.phi();
    let mut first = vec![0u64; c.n() as usize];
    for a in 1..=c.n() {
        let ord = d.order[(a - 1) as usize];
        let p = powers(m, a, bound);
        let mut infers = true;
        for (i, &x) in p.iter().enumerate() {
            let k = i as u64 + 1;
            let f = &mut first[(x - 1) as usize];
            if *f == 0 {
                *f = k;
            } else if (k - *f) % ord != 0 {
                infers = false;
            }
        }
        for &x in &p {
            first[(x - 1) as usize] = 0;
        }
        s.eq(d.normal[(a - 1) as usize], infers, "normal ⟺ power congruence inference", || wit![a]);
    }
}

pub(super) fn nn03(c: &Ctx<'_>, s: &mut Sink) {
    let m = c.md();
    let d = c.defs();
    for a in 1..=c.n() {
        if !s.hyp(d.normal[(a - 1) as usize]) {
            continue;
        }
        let ord = d.order[(a - 1) as usize];
        for (i, &x) in powers(m, a, 2 * ord).iter().enumerate() {
            let k = i as u64 + 1;
            s.eq(ord / gcd(k, ord), d.order[(x - 1) as usize], "|a^k| = |a|/(k,|a|)", || wit![a, k]);
        }
    }
}

pub(super) fn nn04(c: &Ctx<'_>, s: &mut Sink) {
    let d = c.defs();
    for (m1, m2) in c.lcm_pairs() {
        let (t1, t2) = (c.sub(m1), c.sub(m2));
        for a in 1..=c.n() {
            let (r1, r2) = (canon(a, m1), canon(a, m2));
            if !s.hyp(t1.is_normal(r1) && t2.is_normal(r2)) {
                continue;
            }
            s.holds(d.normal[(a - 1) as usize], "a ∈ N_m", || wit![m1, m2, a]);
            s.eq(lcm(t1.order(r1), t2.order(r2)), d.order[(a - 1) as usize], "|a|_m = [|a|_m1, |a|_m2]", || {
                wit![m1, m2, a]
            });
        }
    }
}

pub(super) fn nn05(c: &Ctx<'_>, s: &mut Sink) {
    let m = c.md();
    let d = c.defs();
    for a in 1..=c.n() {
        if !s.hyp(d.normal[(a - 1) as usize]) {
            continue;
        }
        let len = c.t.order(a) + c.t.delta(a);
        for (i, &x) in powers(m, a, len).iter().enumerate() {
            s.holds(d.normal[(x - 1) as usize], "a^n ∈ N_m", || wit![a, n = i as u64 + 1]);
        }
    }
}

pub(super) fn nn06(c: &Ctx<'_>, s: &mut Sink) {
    let d = c.defs();
    for m1 in divisors(c.n()) {
        let t1 = c.sub(m1);
        for a in 1..=c.n() {
            let r = canon(a, m1);
            if !s.hyp(t1.is_normal(r)) {
                continue;
            }
            s.holds(d.order[(a - 1) as usize] % t1.order(r) == 0, "|a|_m1 divides |a|_m", || wit![m1, a]);
        }
    }
}

/// First-index table of `b`'s powers: `ind[x − 1] = ind_b x`, 0 if absent.
struct Indexer {
    ind: Vec<u64>,
    touched: Vec<u64>,
}

impl Indexer {
    fn new(n: u64) -> Self {
        Indexer { ind: vec![0; n as usize], touched: Vec::new() }
    }

    fn load(&mut self, m: &Modulus, b: u64, len: u64) {
        for &x in &self.touched {
            self.ind[(x - 1) as usize] = 0;
        }
        self.touched.clear();
        let mut x = b;
        for k in 1..=len {
            let slot = &mut self.ind[(x - 1) as usize];
            if *slot == 0 {
                *slot = k;
                self.touched.push(x);
            }
            x = m.mul(x, b);
        }
    }

    fn get(&self, x: u64) -> Option<u64> {
        match self.ind[(x - 1) as usize] {
            0 => None,
            k => Some(k),
        }
    }
}

pub(super) fn nn07(c: &Ctx<'_>, s: &mut Sink) {
    let (m, t) = (c.md(), c.t);
    let normal: Vec<u64> = (1..=c.n()).filter(|&a| t.is_normal(a)).collect();
    let mut idx = Indexer::new(c.n());
    for &b in &normal {
        let nb = t.order(b);
        idx.load(m, b, nb + t.delta(b) - 1);
        let ds = divisors(nb);
        for &a in &normal {
            if t.idem_class(a) != t.idem_class(b) {
                continue;
            }
            let Some(ind) = idx.get(a) else {
                s.skip();
                continue;
            };
            for &g in &ds {
                if s.hyp(m.is_idempotent(m.pow(a, nb / g))) {
                    s.holds(ind % g == 0, "(k,|b|) | ind_b a", || wit![a, b, g]);
                }
            }
        }
    }
}

pub(super) fn nn08(c: &Ctx<'_>, s: &mut Sink) {
    let (m, t, d) = (c.md(), c.t, c.defs());
    for a in 1..=c.n() {
        if !s.hyp(d.normal[(a - 1) as usize]) {
            continue;
        }
        let inv = t.signed_power(a, -1);
        s.holds(d.normal[(inv - 1) as usize], "a^{-1} ∈ N_m", || wit![a]);
        s.eq(d.order[(a - 1) as usize], d.order[(inv - 1) as usize], "|a^{-1}| = |a|", || wit![a]);
        let lhs = t.signed_power(inv, -1);
        let rhs = m.pow(a, t.order(a) + 1);
        s.check(lhs == rhs, "(a^{-1})^{-1} ≡ a^{|a|+1}", || (wit![a], rhs.into(), lhs.into()));
    }
}

pub(super) fn rn02(c: &Ctx<'_>, s: &mut Sink) {
    let d = c.defs();
    for a in 1..=c.n() {
        if s.hyp(d.regular[(a - 1) as usize]) {
            s.holds(d.normal[(a - 1) as usize], "a ∈ N_m", || wit![a]);
        }
    }
}

pub(super) fn rn03(c: &Ctx<'_>, s: &mut Sink) {
    let m = c.md();
    let d = c.defs();
    let bound = 2 * m.phi();
    let mut seen = vec![false; c.n() as usize];
    for a in 1..=c.n() {
        let ord = d.order[(a - 1) as usize] as usize;
        let p = powers(m, a, bound);
        // On k, l ≤ B the two-way inference says: constant on residue
        // classes mod |a| and injective on 1..=|a|.
        let periodic = (0..p.len() - ord.min(p.len())).all(|i| p[i] == p[i + ord]);
        let mut distinct = true;
        for &x in &p[..ord] {
            let slot = &mut seen[(x - 1) as usize];
            distinct &= !*slot;
            *slot = true;
        }
        for &x in &p[..ord] {
            seen[(x - 1) as usize] = false;
        }
        s.eq(d.regular[(a - 1) as usize], periodic && distinct, "regular ⟺ a^k ≡ a^l ⟺ k ≡ l (|a|)", || {
            wit![a]
        });
    }
}

pub(super) fn rn06(c: &Ctx<'_>, s: &mut Sink) {
    let (m, t) = (c.md(), c.t);
    for (e, class) in c.classes() {
        let e = *e;
        let inside = |x: u64| t.is_regular(x) && t.idem_class(x) == e;
        for &a in class {
            s.eq(a, m.mul(a, e), "a·e ≡ a", || wit![e, a]);
            let inv = t.signed_power(a, -1);
            s.holds(inside(inv) && m.mul(a, inv) == e, "a·a^{-1} ≡ e", || wit![e, a]);
            let mut inverses = 0u64;
            for &b in class {
                let ab = m.mul(a, b);
                s.holds(inside(ab), "closure", || wit![e, a, b]);
                s.eq(ab, m.mul(b, a), "commutativity", || wit![e, a, b]);
                inverses += (ab == e) as u64;
                for &cc in class.iter().take(4) {
                    s.eq(m.mul(ab, cc), m.mul(a, m.mul(b, cc)), "associativity", || wit![e, a, b, c = cc]);
                }
            }
            s.eq(1, inverses, "unique inverse", || wit![e, a]);
        }
    }
}

fn sampled_exponents(phi: u64) -> Vec<i64> {
    let n = 2 * phi as i64;
    let step = (n / 8).max(1);
    let mut v: Vec<i64> = (-n..=n).step_by(step as usize).collect();
    v.extend([-1, 0, 1, n]);
    v.sort_unstable();
    v.dedup();
    v
}

pub(super) fn rn07(c: &Ctx<'_>, s: &mut Sink) {
    let (m, t) = (c.md(), c.t);
    let zs = sampled_exponents(m.phi());
    let nmax = 2 * m.phi() as i64;
    for a in (1..=c.n()).filter(|&a| t.is_regular(a)) {
        for n in 1..=nmax {
            let lhs = t.signed_power(t.signed_power(a, n), -1);
            s.eq(t.signed_power(a, -n), lhs, "(a^n)^{-1} ≡ a^{-n}", || wit![a, n]);
        }
        for &i in &zs {
            for &j in &zs {
                let lhs = t.signed_power(a, i + j);
                let rhs = m.mul(t.signed_power(a, i), t.signed_power(a, j));
                s.eq(rhs, lhs, "a^{i+j} ≡ a^i a^j", || wit![a, i, j]);
            }
        }
    }
}

pub(super) fn rn09(c: &Ctx<'_>, s: &mut Sink) {
    let (m, t, at) = (c.md(), c.t, c.atlas());
    for &b in at.regular() {
        let bound = 2 * t.order(b);
        let p = powers(m, b, bound);
        for &cc in at.regular() {
            // For n, k ≤ B the equivalence holds exactly when the exponent set
            // S = {n : b^n ∈ orb(c)} is empty or the multiples of min S.
            let member: Vec<bool> = p.iter().map(|&x| at.in_orbit(cc, x)).collect();
            let ok = match member.iter().position(|&x| x) {
                None => true,
                Some(i) => {
                    let g = i + 1;
                    member.iter().enumerate().all(|(j, &x)| x == ((j + 1) % g == 0))
                }
            };
            s.holds(ok, "b^n, b^k ∈ orb(c) ⟺ b^{(n,k)} ∈ orb(c)", || wit![b, c = cc]);
        }
    }
}

pub(super) fn rn11(c: &Ctx<'_>, s: &mut Sink) {
    let (m, t, at) = (c.md(), c.t, c.atlas());
    for (_, class) in c.classes() {
        for &b in class {
            let nb = t.order(b);
            let p = powers(m, b, 2 * nb);
            for &cc in class {
                let d = at.d(b, cc);
                s.holds(d >= 1 && nb % d == 0, "D(b,c) | |b|", || wit![b, c = cc]);
                if d == 0 {
                    continue;
                }
                for (i, &x) in p.iter().enumerate() {
                    let k = i as u64 + 1;
                    s.eq(k % d == 0, at.in_orbit(cc, x), "b^k ∈ orb(c) ⟺ D | k", || wit![b, c = cc, k]);
                }
                let bd = m.pow(b, d);
                let same = at
                    .orbit_bits(bd)
                    .iter()
                    .zip(at.orbit_bits(b).iter().zip(at.orbit_bits(cc)))
                    .all(|(x, (y, z))| *x == y & z);
                s.holds(same, "orb(b) ∩ orb(c) = orb(b^D)", || wit![b, c = cc]);
                s.eq(nb / d, at.intersection_size(b, cc), "|orb(b) ∩ orb(c)| = |b|/D", || wit![b, c = cc]);
            }
        }
    }
}

pub(super) fn rn13(c: &Ctx<'_>, s: &mut Sink) {
    let (m, t) = (c.md(), c.t);
    for (_, class) in c.classes() {
        for &b in class {
            let nb = t.order(b);
            let ds = divisors(nb);
            for (i, &a) in powers(m, b, nb).iter().enumerate() {
                let ind = i as u64 + 1;
                for &g in &ds {
                    let lhs = ind % g == 0;
                    s.eq(lhs, m.is_idempotent(m.pow(a, nb / g)), "(k,|b|) | ind ⟺ a^{|b|/(k,|b|)} ∈ E", || {
                        wit![a, b, g]
                    });
                }
            }
        }
    }
}

pub(super) fn rn14(c: &Ctx<'_>, s: &mut Sink) {
    let (m, t) = (c.md(), c.t);
    for (_, class) in c.classes() {
        for &a in class {
            for &b in class {
                let (oa, ob) = (t.order(a), t.order(b));
                let o = t.order(m.mul(a, b));
                let (g, l) = (gcd(oa, ob), lcm(oa, ob));
                s.eq(g == 1, o == oa * ob, "(|a|,|b|) = 1 ⟺ |ab| = |a||b|", || wit![a, b]);
                s.holds(o % (l / g) == 0 && l % o == 0, "[|a|,|b|]/(|a|,|b|) | |ab| | [|a|,|b|]", || wit![a, b]);
                if s.hyp(m.pow(a, ob) == m.pow(b, oa)) {
                    s.eq(oa, ob, "a^{|b|} ≡ b^{|a|} ⟹ |a| = |b|", || wit![a, b]);
                }
            }
        }
    }
}

pub(super) fn rn15(c: &Ctx<'_>, s: &mut Sink) {
    let (t, at) = (c.t, c.atlas());
    for (e, class) in c.classes() {
        let e = *e;
        for &b in class {
            for &cc in class {
                let want = lcm(t.order(b), t.order(cc));
                let fits = |d: u64| {
                    t.is_regular(d)
                        && t.idem_class(d) == e
                        && t.order(d) == want
                        && at
                            .orbit_bits(b)
                            .iter()
                            .zip(at.orbit_bits(cc))
                            .zip(at.orbit_bits(d))
                            .all(|((x, y), z)| x & y & !z == 0)
                };
                let ok = fits(t.join_unchecked(b, cc)) || class.iter().any(|&d| fits(d));
                s.holds(ok, "∃d: orb(b) ∩ orb(c) ⊆ orb(d), |d| = [|b|,|c|]", || wit![b, c = cc]);
            }
        }
    }
}

pub(super) fn rn16(c: &Ctx<'_>, s: &mut Sink) {
    let d = c.defs();
    for a in 1..=c.n() {
        let r = d.regular[(a - 1) as usize];
        let g = gcd(a, c.n());
        s.eq(r, d.regular[(g - 1) as usize], "a regular ⟺ (a,m) regular", || wit![a]);
        s.eq(r, regular_by_gcd(c.md(), a), "a regular ⟺ (a, m/(a,m)) = 1", || wit![a]);
    }
}

pub(super) fn rn17(c: &Ctx<'_>, s: &mut Sink) {
    let (t, d) = (c.t, c.defs());
    for a in 1..=c.n() {
        if !s.hyp(d.normal[(a - 1) as usize]) {
            continue;
        }
        let back = t.signed_power(t.signed_power(a, -1), -1);
        s.eq(d.regular[(a - 1) as usize], back == a, "regular ⟺ (a^{-1})^{-1} ≡ a", || {
            wit![a, inverse_twice = back]
        });
    }
}

pub(super) fn rn18(c: &Ctx<'_>, s: &mut Sink) {
    let (m, t, d) = (c.md(), c.t, c.defs());
    let (n, phi) = (c.n(), m.phi());
    if !s.hyp(n > phi) {
        return;
    }
    for a in 1..=n {
        let x = m.pow(a, n);
        s.eq(x, m.pow(a, n - phi), "a^m ≡ a^{m−φ}", || wit![a]);
        s.eq(x, m.pow(a, n + phi), "a^m ≡ a^{m+φ}", || wit![a]);
        s.holds(d.regular[(m.pow(a, n - phi) - 1) as usize], "a^{m−φ} ∈ R_m", || wit![a]);
        let i = (a - 1) as usize;
        if d.normal[i] && d.order[i] < phi {
            s.holds(d.regular[(m.pow(a, phi - 1) - 1) as usize], "a^{φ−1} ∈ R_m for normal a, |a| < φ", || {
                wit![a]
            });
        }
        let delta = (1..).find(|&k| d.regular[(m.pow(a, k) - 1) as usize]).expect("a^{|a|} is regular");
        s.eq(delta, t.delta(a), "δ_m(a) closed form", || wit![a]);
    }
}

pub(super) fn rn19(c: &Ctx<'_>, s: &mut Sink) {
    let all = c.defs().regular.iter().all(|&r| r);
    s.eq(c.md().is_square_free(), all, "R_m = Z_m ⟺ m square-free", || wit![]);
}

pub(super) fn rn20(c: &Ctx<'_>, s: &mut Sink) {
    let d = c.defs();
    for a in 1..=c.n() {
        s.eq(d.regular[(a - 1) as usize], regular_by_divisibility(c.md(), a), "regular ⟺ p | a ⟹ p^α | a", || {
            wit![a]
        });
    }
}

pub(super) fn rn21(c: &Ctx<'_>, s: &mut Sink) {
    let (m, d) = (c.md(), c.defs());
    let bound = 2 * m.phi() + 1;
    for a in 1..=c.n() {
        let mut x = m.mul(a, a);
        let mut found = false;
        for _ in 2..=bound {
            if x == a {
                found = true;
                break;
            }
            x = m.mul(x, a);
        }
        s.eq(d.regular[(a - 1) as usize], found, "regular ⟺ ∃n > 1: a^n ≡ a", || wit![a]);
    }
}

pub(super) fn rn22(c: &Ctx<'_>, s: &mut Sink) {
    let d = c.defs();
    for (m1, m2) in c.lcm_pairs() {
        let (t1, t2) = (c.sub(m1), c.sub(m2));
        for a in 1..=c.n() {
            let (r1, r2) = (canon(a, m1), canon(a, m2));
            let reg = d.regular[(a - 1) as usize];
            s.eq(reg, t1.is_regular(r1) && t2.is_regular(r2), "a ∈ R_m ⟺ a ∈ R_m1 ∧ a ∈ R_m2", || {
                wit![m1, m2, a]
            });
            if reg {
                s.eq(lcm(t1.order(r1), t2.order(r2)), d.order[(a - 1) as usize], "|a|_m = [|a|_m1, |a|_m2]", || {
                    wit![m1, m2, a]
                });
            }
        }
    }
}

pub(super) fn rn23(c: &Ctx<'_>, s: &mut Sink) {
    let (m, d) = (c.md(), c.defs());
    let parts: Vec<u64> = m.components().iter().map(|p| p.q).collect();
    for a in 1..=c.n() {
        let reg = parts.iter().all(|&q| c.sub(q).is_regular(canon(a, q)));
        let i = (a - 1) as usize;
        s.eq(d.regular[i], reg, "regular ⟺ regular mod every p^α", || wit![a]);
        if d.regular[i] {
            let o = parts.iter().fold(1, |acc, &q| lcm(acc, c.sub(q).order(canon(a, q))));
            s.eq(o, d.order[i], "|a|_m = lcm |a|_{p^α}", || wit![a]);
        }
    }
    let want: u64 = m.components().iter().map(|p| 1 + p.phi).product();
    let got = d.regular.iter().filter(|&&r| r).count() as u64;
    s.eq(want, got, "|R_m| = ∏(1+φ(p^α))", || wit![]);
}

/// Membership rows for `{b^k : k ≥ 1}` of a normal `b`.
fn reach(m: &Modulus, b: u64, len: u64, n: u64) -> Vec<bool> {
    let mut r = vec![false; n as usize];
    for x in powers(m, b, len) {
        r[(x - 1) as usize] = true;
    }
    r
}

pub(super) fn rn24(c: &Ctx<'_>, s: &mut Sink) {
    let (m, t, at) = (c.md(), c.t, c.atlas());
    for b in (1..=c.n()).filter(|&b| t.is_normal(b)) {
        let nb = t.order(b);
        let len = nb + t.delta(b) - 1;
        let pb = powers(m, b, len);
        let rb = reach(m, b, len, c.n());
        for &a in at.regular() {
            if !s.hyp(nb % t.order(a) == 0) {
                continue;
            }
            let pa = powers(m, a, len);
            for (i, &bn) in pb.iter().enumerate() {
                if s.hyp(at.in_orbit(a, bn)) {
                    s.holds(rb[(pa[i] - 1) as usize], "∃ind_b a^n", || wit![a, b, n = i as u64 + 1]);
                }
            }
        }
    }
}

pub(super) fn rn25(c: &Ctx<'_>, s: &mut Sink) {
    let (m, t, at) = (c.md(), c.t, c.atlas());
    let reg = at.regular();
    for &a in reg {
        let pa = powers(m, a, t.order(a));
        for &b in reg {
            if !s.hyp(t.order(a) == t.order(b)) {
                continue;
            }
            let pb = powers(m, b, t.order(b));
            for i in 0..pa.len() {
                s.eq(at.in_orbit(a, pb[i]), at.in_orbit(b, pa[i]), "b^n ∈ orb(a) ⟺ a^n ∈ orb(b)", || {
                    wit![a, b, n = i as u64 + 1]
                });
            }
        }
    }
}

pub(super) fn rn26(c: &Ctx<'_>, s: &mut Sink) {
    let (m, t, at) = (c.md(), c.t, c.atlas());
    let reg = at.regular();
    for &b in reg {
        let nb = t.order(b);
        let pb = powers(m, b, nb);
        for &a in reg {
            let sub = at.orbit_subset(b, a);
            for (i, &x) in pb.iter().enumerate() {
                let n = i as u64 + 1;
                if s.hyp(coprime(n, nb) && at.in_orbit(a, x)) {
                    s.holds(sub, "orb(b) ⊆ orb(a)", || wit![a, b, n]);
                }
            }
        }
    }
}

pub(super) fn rn27(c: &Ctx<'_>, s: &mut Sink) {
    let (m, t, at) = (c.md(), c.t, c.atlas());
    let reg = at.regular();
    for &a in reg {
        let na = t.order(a);
        let pa = powers(m, a, na);
        for &b in reg {
            let nb = t.order(b);
            if !s.hyp(na % nb == 0) {
                continue;
            }
            let sub = at.orbit_subset(b, a);
            for (i, &x) in pa.iter().enumerate() {
                let n = i as u64 + 1;
                if s.hyp(coprime(n, nb) && at.in_orbit(b, x)) {
                    s.holds(sub, "orb(b) ⊆ orb(a)", || wit![a, b, n]);
                }
            }
        }
    }
}

pub(super) fn rn28(c: &Ctx<'_>, s: &mut Sink) {
    let (m, t, at) = (c.md(), c.t, c.atlas());
    let reg = at.regular();
    for &a in reg {
        let na = t.order(a);
        let pa = powers(m, a, na);
        for &b in reg {
            let lhs = at.orbit_subset(a, b) && at.orbit_subset(b, a);
            let rhs =
                na == t.order(b) && pa.iter().enumerate().any(|(i, &x)| coprime(i as u64 + 1, na) && at.in_orbit(b, x));
            s.eq(lhs, rhs, "orb(a) = orb(b) ⟺ |a| = |b| ∧ ∃n coprime: a^n ∈ orb(b)", || wit![a, b]);
        }
    }
}

pub(super) fn rn29(c: &Ctx<'_>, s: &mut Sink) {
    let (t, at) = (c.t, c.atlas());
    let reg = at.regular();
    let words = reg.len().div_ceil(64);
    // containers[x] = {c ∈ R_m : x ∈ orb(c)} as a bitset over slots.
    let mut containers = vec![0u64; c.n() as usize * words];
    for (slot, &cc) in reg.iter().enumerate() {
        for (w, &bits) in at.orbit_bits(cc).iter().enumerate() {
            let mut bits = bits;
            while bits != 0 {
                let x = w * 64 + bits.trailing_zeros() as usize;
                containers[x * words + slot / 64] |= 1 << (slot % 64);
                bits &= bits - 1;
            }
        }
    }
    let row = |x: u64| &containers[(x - 1) as usize * words..x as usize * words];
    for &a in reg {
        for &b in reg {
            if !s.hyp(t.order(b) % t.order(a) == 0) {
                continue;
            }
            let lhs = row(a).iter().zip(row(b)).any(|(x, y)| x & y != 0);
            s.eq(at.in_orbit(b, a), lhs, "(∃c: a,b ∈ orb(c)) ⟺ a ∈ orb(b)", || wit![a, b]);
        }
    }
}

pub(super) fn rn30(c: &Ctx<'_>, s: &mut Sink) {
    let (m, t, at) = (c.md(), c.t, c.atlas());
    for &b in at.regular() {
        let nb = t.order(b);
        let ds = divisors(nb);
        for (i, &a) in powers(m, b, nb).iter().enumerate() {
            let ind = i as u64 + 1;
            for &d in &ds {
                let step = nb / d;
                let rhs = ind % step == 0 && coprime(ind / step, d);
                s.eq(t.order(a) == d, rhs, "|a| = d ⟺ ind_b a = r|b|/d, (r,d) = 1", || wit![a, b, d]);
            }
        }
    }
}

pub(super) fn rn31(c: &Ctx<'_>, s: &mut Sink) {
    let (m, t) = (c.md(), c.t);
    for (e, class) in c.classes() {
        let e = *e;
        let mut v: Vec<u64> = (1..=c.n()).filter(|&a| t.idem_class(a) == e).map(|a| m.mul(e, a)).collect();
        v.sort_unstable();
        v.dedup();
        s.eq(class.clone(), v, "R_m^e = {ea : a^{|a|} ≡ e}", || wit![e]);
    }
}

pub(super) fn rn32(c: &Ctx<'_>, s: &mut Sink) {
    let (t, at) = (c.t, c.atlas());
    for (e, class) in c.classes() {
        let e = *e;
        for &a in class {
            for &b in class {
                if s.hyp(coprime(t.order(a), t.order(b))) {
                    let ok = at.intersection_size(a, b) == 1 && at.in_orbit(a, e) && at.in_orbit(b, e);
                    s.holds(ok, "orb(a) ∩ orb(b) = {e}", || wit![a, b]);
                }
            }
        }
    }
}

/// `D_m` on one class, with slot lookup by binary search.
struct DTable<'a> {
    class: &'a [u64],
    d: Vec<u64>,
}

impl<'a> DTable<'a> {
    fn new(c: &Ctx<'_>, class: &'a [u64]) -> Self {
        let at = c.atlas();
        let mut d = Vec::with_capacity(class.len() * class.len());
        for &x in class {
            for &y in class {
                d.push(at.d(x, y));
            }
        }
        DTable { class, d }
    }

    fn slot(&self, x: u64) -> usize {
        self.class.binary_search(&x).expect("member of the class")
    }

    fn get(&self, x: u64, y: u64) -> u64 {
        self.d[self.slot(x) * self.class.len() + self.slot(y)]
    }
}

pub(super) fn rn33(c: &Ctx<'_>, s: &mut Sink) {
    let (m, t) = (c.md(), c.t);
    for (_, class) in c.classes() {
        let dt = DTable::new(c, class);
        for &a in class {
            let oa = t.order(a);
            let pa = powers(m, a, oa);
            for &b in class {
                let ob = t.order(b);
                let (dab, dba) = (dt.get(a, b), dt.get(b, a));
                s.eq(oa == ob, dab == dba, "D(a,b) = D(b,a) ⟺ |a| = |b|", || wit![a, b]);
                s.eq(oa * dba, ob * dab, "D(a,b)/D(b,a) = |a|/|b|", || wit![a, b]);
                let x = m.pow(a, dab);
                s.eq(dab, t.order(m.pow(a, t.order(x))), "D(a,b) = |a^{|a^D|}|", || wit![a, b]);
                for (i, &an) in pa.iter().enumerate() {
                    let n = i as u64 + 1;
                    s.eq(dab / gcd(n, dab), dt.get(an, b), "D(a^n,b) = D/(n,D)", || wit![a, b, n]);
                }
                if s.hyp(coprime(oa / dab, dba)) {
                    for (i, &bn) in powers(m, b, ob).iter().enumerate() {
                        let n = i as u64 + 1;
                        s.eq(dab * gcd(n, oa / dab), dt.get(a, bn), "D(a,b^n) = D·(n, |a|/D)", || wit![a, b, n]);
                    }
                }
            }
        }
    }
}

/// Exponent cap for the two-parameter relation of rn35.
const RN35_NK: u64 = 24;

pub(super) fn rn35(c: &Ctx<'_>, s: &mut Sink) {
    let (m, t, at) = (c.md(), c.t, c.atlas());
    for (_, class) in c.classes() {
        let dt = DTable::new(c, class);
        let rel = |x: u64, y: u64| t.order(x) / dt.get(x, y);
        for &a in class {
            let oa = t.order(a);
            let pa = powers(m, a, oa);
            s.eq(oa, rel(a, a), "|a,a| = |a|", || wit![a]);
            for &b in class {
                let ob = t.order(b);
                let r = rel(a, b);
                s.eq(r, rel(b, a), "|a,b| = |b,a|", || wit![a, b]);
                if coprime(oa, ob) {
                    s.eq(1, r, "coprime orders ⟹ |a,b| = 1", || wit![a, b]);
                }
                if at.in_orbit(a, b) {
                    s.eq(ob, r, "b ∈ orb(a) ⟹ |a,b| = |b|", || wit![a, b]);
                }
                if s.hyp(coprime(r, dt.get(a, b))) {
                    for (i, &an) in pa.iter().enumerate() {
                        let n = i as u64 + 1;
                        s.eq(r / gcd(n, r), rel(an, b), "|a^n,b| = |a,b|/(n,|a,b|)", || wit![a, b, n]);
                    }
                }
                let pb = powers(m, b, ob.min(RN35_NK));
                for (j, &bk) in pb.iter().enumerate() {
                    let k = j as u64 + 1;
                    if !s.hyp(coprime(r, dt.get(a, bk) * dt.get(b, a))) {
                        continue;
                    }
                    for (i, &an) in pa.iter().take(RN35_NK as usize).enumerate() {
                        let n = i as u64 + 1;
                        let want = r / gcd(n * gcd(k, r), r);
                        s.eq(want, rel(an, bk), "|a^n,b^k| = |a,b|/(n(k,|a,b|),|a,b|)", || wit![a, b, n, k]);
                    }
                }
            }
        }
    }
}

pub(super) fn rn36(c: &Ctx<'_>, s: &mut Sink) {
    let (t, d) = (c.t, c.defs());
    let n = c.n();
    let classes: Vec<u64> = (1..=n).map(|a| oracle::idem_class_raw(n, a)).collect();
    for &e in t.idempotents() {
        let splits: Vec<u64> = divisors(n).into_iter().filter(|&m1| e % m1 == 1 % m1 && e % (n / m1) == 0).collect();
        s.eq(1u64, splits.len() as u64, "unique m1, m2", || wit![e]);
        let Some(&m1) = splits.first() else { continue };
        let m2 = n / m1;
        let t1 = c.sub(m1);
        for a in 1..=n {
            let i = (a - 1) as usize;
            let inside = d.regular[i] && classes[i] == e;
            s.eq(inside, coprime(a, m1) && a % m2 == 0, "a ∈ R^e ⟺ (a,m1) = 1 ∧ m2 | a", || wit![e, a]);
            if inside {
                s.eq(t1.order(canon(a, m1)), d.order[i], "|a|_m = |a|_m1", || wit![e, a]);
            }
        }
    }
}

pub(super) fn rn38(c: &Ctx<'_>, s: &mut Sink) {
    let (m, t, at) = (c.md(), c.t, c.atlas());
    for &a in at.regular() {
        let oa = t.order(a);
        let mut hist = vec![0u64; oa as usize + 1];
        for x in powers(m, a, oa) {
            hist[t.order(x) as usize] += 1;
        }
        for d in divisors(oa) {
            s.eq(totient(d), hist[d as usize], "|{b ∈ orb(a): |b| = d}| = φ(d)", || wit![a, d]);
        }
        let e = t.idem_class(a);
        let equiv = c.class_of(e).iter().filter(|&&b| t.order(b) == oa && at.in_orbit(b, a)).count() as u64;
        s.eq(totient(oa), equiv, "|{b ~ a}| = φ(|a|)", || wit![a]);
    }
}

pub(super) fn rn40(c: &Ctx<'_>, s: &mut Sink) {
    let (t, at) = (c.t, c.atlas());
    for (_, class) in c.classes() {
        let k = class.len();
        let words = k.div_ceil(64);
        let mut rows = vec![0u64; k * words];
        for (i, &a) in class.iter().enumerate() {
            for (j, &b) in class.iter().enumerate() {
                if t.order(a) == t.order(b) && at.in_orbit(b, a) {
                    rows[i * words + j / 64] |= 1 << (j % 64);
                }
            }
        }
        let row = |i: usize| &rows[i * words..(i + 1) * words];
        let bit = |i: usize, j: usize| row(i)[j / 64] >> (j % 64) & 1 == 1;
        for (i, &a) in class.iter().enumerate() {
            s.holds(bit(i, i), "reflexive", || wit![a]);
            for (j, &b) in class.iter().enumerate() {
                if bit(i, j) {
                    s.holds(bit(j, i), "symmetric", || wit![a, b]);
                    // Transitivity: related elements share their whole row.
                    s.holds(row(i) == row(j), "transitive", || wit![a, b]);
                }
            }
        }
    }
}

pub(super) fn rn41(c: &Ctx<'_>, s: &mut Sink) {
    let (m, t, at) = (c.md(), c.t, c.atlas());
    for b in (1..=c.n()).filter(|&b| t.is_normal(b)) {
        let nb = t.order(b);
        for (i, &a) in powers(m, b, nb + t.delta(b) - 1).iter().enumerate() {
            if !s.hyp(t.is_regular(a)) {
                continue;
            }
            let e = t.idem_class(a);
            let fits = |cc: u64| t.is_regular(cc) && t.idem_class(cc) == e && t.order(cc) == nb && at.in_orbit(cc, a);
            let ok = fits(m.mul(b, e)) || c.class_of(e).iter().any(|&cc| fits(cc));
            s.holds(ok, "∃c ∈ R^e: a ∈ orb(c), |c| = |b|", || wit![a, b, n = i as u64 + 1]);
        }
    }
}

pub(super) fn rn42(c: &Ctx<'_>, s: &mut Sink) {
    let (m, t) = (c.md(), c.t);
    if !s.hyp(c.n() % 2 == 1) {
        return;
    }
    for &e in t.idempotents() {
        let w = m.components().iter().filter(|p| e % p.q != 0).count();
        let want = if w == 1 { m.sub(0, e) } else { e };
        let got = t.class_product(e).expect("e is idempotent");
        s.eq(want, got, "∏R_m^e ≡ ±e", || wit![e]);
    }
}
