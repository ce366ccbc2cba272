//! Theorem registry and counterexample search.
//!
//! Every registered statement is evaluated on each modulus of a range:
//! hypotheses first (failing instances are counted as skipped), then the
//! conclusion. Violations become [`Finding`]s. The registry holds true and
//! suspected-false statements alike; the sweep decides.
//!
//! Results are deterministic: per-modulus outcomes are independent and
//! [`summarize`] sorts findings by `(m, theorem, witness)`.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::cell::OnceCell;
use core::fmt;

use crate::algebra::{verify_algebra, AlgebraReport};
use crate::arith::{divisors, gcd, lcm, Modulus};
use crate::binomial::OmegaTable;
use crate::structure::{OrbitAtlas, StructureTable};
use crate::Result;

mod bino;
mod counting;
mod quad;
mod residue;

/// A witness or outcome value.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum Val {
    Int(i64),
    Bool(bool),
    Set(Vec<u64>),
    Text(&'static str),
}

impl From<&'static str> for Val {
    fn from(v: &'static str) -> Self {
        Val::Text(v)
    }
}

impl From<u64> for Val {
    fn from(v: u64) -> Self {
        Val::Int(v as i64)
    }
}

impl From<i64> for Val {
    fn from(v: i64) -> Self {
        Val::Int(v)
    }
}

impl From<u32> for Val {
    fn from(v: u32) -> Self {
        Val::Int(v as i64)
    }
}

impl From<bool> for Val {
    fn from(v: bool) -> Self {
        Val::Bool(v)
    }
}

impl From<Vec<u64>> for Val {
    fn from(v: Vec<u64>) -> Self {
        Val::Set(v)
    }
}

impl fmt::Display for Val {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Val::Int(v) => write!(f, "{v}"),
            Val::Bool(v) => write!(f, "{v}"),
            Val::Text(v) => f.write_str(v),
            Val::Set(v) => {
                f.write_str("{")?;
                for (i, x) in v.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{x}")?;
                }
                f.write_str("}")
            }
        }
    }
}

/// `wit![a, k = n]` builds a named witness list.
macro_rules! wit {
    (@v $k:ident) => { $k };
    (@v $k:ident $v:expr) => { $v };
    ($($k:ident $(= $v:expr)?),* $(,)?) => {
        alloc::vec![$((stringify!($k), $crate::audit::Val::from(wit!(@v $k $($v)?)))),*]
    };
}
pub(crate) use wit;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Finding {
    pub theorem: &'static str,
    pub m: u64,
    /// Which part of a multi-part statement failed.
    pub claim: &'static str,
    pub witness: Vec<(&'static str, Val)>,
    pub expected: Val,
    pub actual: Val,
}

/// Result of one theorem on one modulus.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub theorem: &'static str,
    pub m: u64,
    pub instances: u64,
    pub skipped: u64,
    pub violations: u64,
    /// At most [`FINDINGS_PER_MODULUS`] of the violations, in discovery order.
    pub findings: Vec<Finding>,
}

pub const FINDINGS_PER_MODULUS: usize = 8;

/// Collects instance counts and findings for one theorem on one modulus.
pub struct Sink {
    theorem: &'static str,
    m: u64,
    instances: u64,
    skipped: u64,
    violations: u64,
    findings: Vec<Finding>,
}

type Report = (Vec<(&'static str, Val)>, Val, Val);

impl Sink {
    fn new(theorem: &'static str, m: u64) -> Self {
        Sink { theorem, m, instances: 0, skipped: 0, violations: 0, findings: Vec::new() }
    }

    /// Counts an instance whose hypothesis failed.
    pub fn skip(&mut self) {
        self.skipped += 1;
    }

    /// Returns `holds`, counting a skip when it is false.
    pub fn hyp(&mut self, holds: bool) -> bool {
        if !holds {
            self.skipped += 1;
        }
        holds
    }

    /// Records one evaluated instance; `report` yields `(witness, expected, actual)`.
    pub fn check(&mut self, ok: bool, claim: &'static str, report: impl FnOnce() -> Report) {
        self.instances += 1;
        if ok {
            return;
        }
        self.violations += 1;
        if self.findings.len() < FINDINGS_PER_MODULUS {
            let (witness, expected, actual) = report();
            self.findings.push(Finding { theorem: self.theorem, m: self.m, claim, witness, expected, actual });
        }
    }

    /// Shorthand for boolean claims: expected `true`.
    pub fn holds(&mut self, ok: bool, claim: &'static str, witness: impl FnOnce() -> Vec<(&'static str, Val)>) {
        self.check(ok, claim, || (witness(), Val::Bool(true), Val::Bool(false)));
    }

    /// Shorthand for equalities.
    pub fn eq<T: PartialEq + Into<Val>>(
        &mut self,
        expected: T,
        actual: T,
        claim: &'static str,
        witness: impl FnOnce() -> Vec<(&'static str, Val)>,
    ) {
        let ok = expected == actual;
        self.check(ok, claim, || (witness(), expected.into(), actual.into()));
    }

    /// Folds in a law already checked elsewhere, which keeps only its first
    /// counterexample.
    pub fn absorb(&mut self, checked: u64, claim: &'static str, counterexample: Option<Vec<(&'static str, Val)>>) {
        self.instances += checked.saturating_sub(1);
        let ok = counterexample.is_none();
        self.check(ok, claim, || (counterexample.unwrap_or_default(), Val::Bool(true), Val::Bool(false)));
    }

    fn finish(self) -> Outcome {
        Outcome {
            theorem: self.theorem,
            m: self.m,
            instances: self.instances,
            skipped: self.skipped,
            violations: self.violations,
            findings: self.findings,
        }
    }
}

/// How a statement is quantified.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Scope {
    /// Evaluated on every modulus of the range.
    Modulus,
    /// A statement about arithmetic functions, evaluated once on the domain
    /// `1..=N` with `N` the top of the range.
    Domain,
}

#[derive(Clone, Copy)]
enum Check {
    Modulus(fn(&Ctx<'_>, &mut Sink)),
    Domain(fn(u64, &mut Sink)),
}

#[derive(Clone, Copy)]
pub struct Theorem {
    pub id: &'static str,
    pub statement: &'static str,
    check: Check,
}

impl Theorem {
    pub fn scope(&self) -> Scope {
        match self.check {
            Check::Modulus(_) => Scope::Modulus,
            Check::Domain(_) => Scope::Domain,
        }
    }
}

impl fmt::Debug for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Theorem").field("id", &self.id).field("scope", &self.scope()).finish()
    }
}

const fn per_modulus(id: &'static str, statement: &'static str, f: fn(&Ctx<'_>, &mut Sink)) -> Theorem {
    Theorem { id, statement, check: Check::Modulus(f) }
}

const fn on_domain(id: &'static str, statement: &'static str, f: fn(u64, &mut Sink)) -> Theorem {
    Theorem { id, statement, check: Check::Domain(f) }
}

/// All registered statements, in registry order.
pub fn registry() -> &'static [Theorem] {
    REGISTRY
}

pub fn find(id: &str) -> Option<&'static Theorem> {
    REGISTRY.iter().find(|t| t.id == id)
}

static REGISTRY: &[Theorem] = &[
    per_modulus("in02", "a^φ(m) is idempotent", residue::in02),
    per_modulus("in03", "all idempotent powers of a coincide", residue::in03),
    per_modulus("in05", "m = [m1,m2]: e ∈ E_m ⟺ e ∈ E_m1 and e ∈ E_m2", residue::in05),
    per_modulus("in06", "E_m is the CRT set of 0/1 vectors, |E_m| = 2^ω(m)", residue::in06),
    per_modulus("in07", "|kE_m mod m| = 2^ω(m/(k,m))", residue::in07),
    per_modulus("in08", "a^φ ≡ (a,m)^φ", residue::in08),
    per_modulus("in10", "tower_mod agrees with direct evaluation", residue::in10),
    per_modulus("in11", "a^{k+n} ≡ a^k, k ≤ n ⟹ a^n idempotent", residue::in11),
    per_modulus("in12", "a^ψ(m) is idempotent", residue::in12),
    per_modulus("nn02", "a normal ⟺ (a^k ≡ a^l ⟹ k ≡ l mod |a|)", residue::nn02),
    per_modulus("nn03", "a normal ⟹ |a^k| = |a|/(k,|a|)", residue::nn03),
    per_modulus("nn04", "m = [m1,m2], a normal mod both ⟹ normal mod m, |a| = lcm", residue::nn04),
    per_modulus("nn05", "powers of normal numbers are normal", residue::nn05),
    per_modulus("nn06", "m1 | m, a normal mod m1 ⟹ |a|_m1 divides |a|_m", residue::nn06),
    per_modulus("nn07", "a,b ∈ N^e, a^{|b|/(k,|b|)} ∈ E ⟹ (k,|b|) | ind_b a", residue::nn07),
    per_modulus("nn08", "a normal ⟹ a^{-1} normal, |a^{-1}| = |a|, (a^{-1})^{-1} ≡ a^{|a|+1}", residue::nn08),
    per_modulus("rn02", "regular ⟹ normal", residue::rn02),
    per_modulus("rn03", "a regular ⟺ (a^k ≡ a^l ⟺ k ≡ l mod |a|)", residue::rn03),
    per_modulus("rn06", "R_m^e is an Abelian group with identity e", residue::rn06),
    per_modulus("rn07", "(a^n)^{-1} ≡ a^{-n}, a^{i+j} ≡ a^i a^j", residue::rn07),
    per_modulus("rn09", "b^n, b^k ∈ orb(c) ⟺ b^{(n,k)} ∈ orb(c)", residue::rn09),
    per_modulus("rn11", "b^k ∈ orb(c) ⟺ D(b,c) | k; orb(b) ∩ orb(c) = orb(b^D)", residue::rn11),
    per_modulus("rn13", "(k,|b|) | ind_b a ⟺ a^{|b|/(k,|b|)} ∈ E", residue::rn13),
    per_modulus("rn14", "order relations for products in R_m^e", residue::rn14),
    per_modulus("rn15", "a ∈ orb(b) ∩ orb(c) ⟹ a ∈ orb(d), |d| = [|b|,|c|]", residue::rn15),
    per_modulus("rn16", "regular ⟺ (a,m) regular ⟺ (a, m/(a,m)) = 1", residue::rn16),
    per_modulus("rn17", "a normal: regular ⟺ (a^{-1})^{-1} ≡ a", residue::rn17),
    per_modulus("rn18", "a^m ≡ a^{m-φ} ≡ a^{m+φ}, a^{m-φ} regular, δ_m", residue::rn18),
    per_modulus("rn19", "R_m = Z_m ⟺ m square-free", residue::rn19),
    per_modulus("rn20", "regular ⟺ (p | a ⟹ p^α | a)", residue::rn20),
    per_modulus("rn21", "regular ⟺ a^n ≡ a for some n > 1", residue::rn21),
    per_modulus("rn22", "m = [m1,m2]: regular ⟺ regular mod both, |a| = lcm", residue::rn22),
    per_modulus("rn23", "regularity and order split over prime powers, |R_m| = ∏(1+φ(p^α))", residue::rn23),
    per_modulus("rn24", "|a| | |b|: ∃ind_a b^n ⟹ ∃ind_b a^n", residue::rn24),
    per_modulus("rn25", "|a| = |b|: b^n ∈ orb(a) ⟺ a^n ∈ orb(b)", residue::rn25),
    per_modulus("rn26", "b^n ∈ orb(a), (n,|b|) = 1 ⟹ orb(b) ⊆ orb(a)", residue::rn26),
    per_modulus("rn27", "a^n ∈ orb(b), |b| | |a|, (n,|b|) = 1 ⟹ orb(b) ⊆ orb(a)", residue::rn27),
    per_modulus("rn28", "orb(a) = orb(b) ⟺ |a| = |b| and a^n ∈ orb(b), (n,|a|) = 1", residue::rn28),
    per_modulus("rn29", "|a| | |b|: (∃c: a,b ∈ orb(c)) ⟺ a ∈ orb(b)", residue::rn29),
    per_modulus("rn30", "a ∈ orb(b): |a| = d ⟺ ind_b a = r|b|/d, (r,d) = 1", residue::rn30),
    per_modulus("rn31", "R_m^e = {ea : a^{|a|} ≡ e}", residue::rn31),
    per_modulus("rn32", "coprime orders ⟹ orb(a) ∩ orb(b) = {e}", residue::rn32),
    per_modulus("rn33", "the five D_m identities", residue::rn33),
    per_modulus("rn35", "the six relative-order identities", residue::rn35),
    per_modulus("rn36", "unique split m = m1m2 for e; R_m^e = {(a,m1) = 1, m2 | a}; |a|_m = |a|_m1", residue::rn36),
    per_modulus("rn38", "φ(d) elements of order d in orb(a); |{b ~ a}| = φ(|a|)", residue::rn38),
    per_modulus("rn40", "~_m is an equivalence relation", residue::rn40),
    per_modulus("rn41", "a ∈ R^e ∩ orb(b), b normal ⟹ c = be has a ∈ orb(c), |c| = |b|", residue::rn41),
    per_modulus("rn42", "odd m: ∏R_m^e ≡ (−1)^{2^{ω(μ(e))−1}}·e", residue::rn42),
    per_modulus("bc01", "a regular: M(k,a) ⟺ a^{ω/(k,ω)} ∈ E", bino::bc01),
    per_modulus("bc02", "ω_m(a) = φ(m) for some a ⟺ R_m^1 is cyclic", bino::bc02),
    per_modulus("bc03", "M(k,a) ⟹ a^{φ/(k,φ)} ∈ E, all a", bino::bc03),
    per_modulus("bc04", "(k,|b|) | ind_b a ⟹ M(k,a)", bino::bc04),
    per_modulus("bc05", "b^{l·ind + n|b|/(k,|b|)} ∈ S(k,a) under the kl ≡ e hypotheses", bino::bc05),
    per_modulus("bc06", "a ∈ R^e, M(k,a) ⟹ |S^R(k,a)| = |S^R(k,e)| = ρ^e(k)", bino::bc06),
    per_modulus("bc07", "a regular, M(k,a) ⟹ S^R(k,a) ≠ ∅", bino::bc07),
    per_modulus("bc08", "M(k1,a) ∧ M(k2,a) ⟺ M([k1,k2],a)", bino::bc08),
    per_modulus("bc09", "M(k,a) ⟺ M((k,φ),a) ⟺ M((k,ψ),a)", bino::bc09),
    per_modulus("pr02", "Ω(a) ⊆ G_m; g ∈ Ω(g) for g ∈ G_m", bino::pr02),
    per_modulus("pr03", "a ~ b ⟹ ω(a) = ω(b)", bino::pr03),
    per_modulus("pr04", "m = [m1,m2], g ∈ G_m1 and G_m2 ⟹ g ∈ G_m", bino::pr04),
    per_modulus("pr05", "g ∈ Ω(a): g^n ∈ Ω(a) ⟺ (n,|g|) = 1", bino::pr05),
    per_modulus("pr06", "g ∈ Ω(a) ⟺ g^{-1} ∈ Ω(a)", bino::pr06),
    per_modulus("fs02", "r_m^e = r^1_μ(e), ρ_m^e = ρ^1_μ(e); multiplicative for weakly even m", counting::fs02),
    per_modulus("fs03", "ρ^1(q^β) = q^{Σmin(β,δ_i)}, r^1(q) = q^Δ − 1", counting::fs03),
    per_modulus("fs04", "weakly even: ρ^1(k) = ∏(k, φ(p^α))", counting::fs04),
    per_modulus("fs05", "|orb(_kR_m^e)| = k·r^e(k)/φ(k)", counting::fs05),
    per_modulus("fs06", "weakly even: k ↦ |orb(_kR_m^e)| is multiplicative", counting::fs06),
    on_domain("fs09", "QM ⟺ DI and f(ab) = [f(a),f(b)] for coprime a,b", counting::fs09),
    on_domain("fs10", "DI ⟺ [f(a),f(b)] | f([a,b])", counting::fs10),
    on_domain("fs11", "f injective QM ⟹ (a | b ⟺ f(a) | f(b))", counting::fs11),
    per_modulus("fs12", "weakly even: ρ_m^e is DI", counting::fs12),
    on_domain("fs13", "g ∈ DI on prime powers ⟹ its lcm lift is QM", counting::fs13),
    per_modulus("ia02", "(ae+bē)(ce+dē) ≡ (ac)e+(bd)ē and the power form", quad::ia),
    per_modulus("ia03", "complement, ·, ∘, ⊗, simdiff stay in E_m", quad::ia),
    per_modulus("ia05", "the basis map is an isomorphism onto subsets of B_m", quad::ia),
    per_modulus("ia06", "(E_m, ∘) is an Abelian group of exponent 2", quad::ia),
    per_modulus("ia07", "⊗ is commutative, associative, distributive", quad::ia),
    per_modulus("ia08", "(E_m, ∘, ⊗) is a commutative ring", quad::ia),
    per_modulus("ia09", "complement and ∘ identities", quad::ia),
    per_modulus("ia10", "⊗ identities", quad::ia),
    per_modulus("ia11", "simdiff identities", quad::ia),
    per_modulus("sd02", "(k,m) = 1 ⟹ S_{m,k} = kE_m", quad::sd02),
    per_modulus("sd03", "(b−a,m) = 1: each root of (x−a)(x−b) is ae+bē for a unique e", quad::sd03),
    per_modulus("sd04", "(2a,m) = 1: roots of x² ≡ a differ by e−ē for a unique e", quad::sd04),
    per_modulus("sd05", "m odd or 4·odd: roots of x² ≡ 1 are e−ē, bijectively", quad::sd05),
    per_modulus("sd07", "r̄, r∘e, r⊗e ∈ S_{m,k}", quad::sd07),
    per_modulus("sd08", "r ↦ r∘e permutes S_{m,k}", quad::sd08),
    per_modulus("sd10", "r1∘r2, r1⊗r2 ∈ S_{m,e}", quad::sd10),
    per_modulus("sd11", "(ar+br̄)(cr+dr̄) ≡ (ac)r+(bd)r̄ and the power form", quad::sd11),
    per_modulus("sd12", "k ∈ R^e ⟹ S_{m,k} ∩ R^e = {k}", quad::sd12),
    per_modulus("sd13", "complement(r∘e) = r∘ē = r̄∘e, (r∘e1)∘e2 = r∘(e1∘e2)", quad::sd13),
    per_modulus("sd14", "(k,m) = 1: r∘e1 = r∘e2 ⟹ e1 = e2", quad::sd14),
    per_modulus("sd15", "odd m: S^R(2,e) ⊆ {e(e0−ē0)}, size 2^ω(μ(e)), product sign", quad::sd15),
];

/// Brute-force data from the definitions, independent of the closed forms.
pub(crate) struct Defs {
    pub order: Vec<u64>,
    pub regular: Vec<bool>,
    pub normal: Vec<bool>,
}

/// Lazily built per-modulus data shared by all theorems of one sweep step.
pub struct Ctx<'t> {
    pub(crate) t: &'t StructureTable,
    atlas: OnceCell<OrbitAtlas<'t>>,
    omega: OnceCell<OmegaTable<'t>>,
    omega_sets: OnceCell<Vec<Vec<u64>>>,
    defs: OnceCell<Defs>,
    subs: OnceCell<BTreeMap<u64, StructureTable>>,
    sub_g: OnceCell<BTreeMap<u64, Vec<u64>>>,
    kernels: OnceCell<Vec<Vec<u64>>>,
    algebra: OnceCell<AlgebraReport>,
    classes: OnceCell<Vec<(u64, Vec<u64>)>>,
}

impl<'t> Ctx<'t> {
    pub fn new(t: &'t StructureTable) -> Self {
        Ctx {
            t,
            atlas: OnceCell::new(),
            omega: OnceCell::new(),
            omega_sets: OnceCell::new(),
            defs: OnceCell::new(),
            subs: OnceCell::new(),
            sub_g: OnceCell::new(),
            kernels: OnceCell::new(),
            algebra: OnceCell::new(),
            classes: OnceCell::new(),
        }
    }

    pub(crate) fn n(&self) -> u64 {
        self.t.m()
    }

    pub(crate) fn md(&self) -> &'t Modulus {
        self.t.modulus()
    }

    pub(crate) fn atlas(&self) -> &OrbitAtlas<'t> {
        self.atlas.get_or_init(|| OrbitAtlas::new(self.t))
    }

    pub(crate) fn omega(&self) -> &OmegaTable<'t> {
        self.omega.get_or_init(|| OmegaTable::new(self.t))
    }

    /// `Ω_m(a)` indexed by `a − 1`.
    pub(crate) fn omega_sets(&self) -> &[Vec<u64>] {
        self.omega_sets.get_or_init(|| self.omega().omega_sets())
    }

    pub(crate) fn classes(&self) -> &[(u64, Vec<u64>)] {
        self.classes.get_or_init(|| self.t.class_partition())
    }

    pub(crate) fn class_of(&self, e: u64) -> &[u64] {
        let i = self.t.idempotents().binary_search(&e).expect("class is idempotent");
        &self.classes()[i].1
    }

    pub(crate) fn defs(&self) -> &Defs {
        self.defs.get_or_init(|| {
            let n = self.n();
            let (mut order, mut regular, mut normal) = (Vec::new(), Vec::new(), Vec::new());
            for a in 1..=n {
                order.push(crate::oracle::order_raw(n, a));
                regular.push(crate::oracle::is_regular_raw(n, a));
                normal.push(crate::oracle::is_normal_raw(n, a));
            }
            Defs { order, regular, normal }
        })
    }

    /// Tables of every divisor of `m`.
    pub(crate) fn sub(&self, d: u64) -> &StructureTable {
        let subs = self.subs.get_or_init(|| {
            divisors(self.n())
                .into_iter()
                .map(|d| (d, StructureTable::build(d, u64::MAX).expect("divisors are positive")))
                .collect()
        });
        &subs[&d]
    }

    /// `G_d` for every divisor `d` of `m`.
    pub(crate) fn sub_g(&self, d: u64) -> &[u64] {
        let gs = self.sub_g.get_or_init(|| {
            divisors(self.n()).into_iter().map(|d| (d, OmegaTable::new(self.sub(d)).gen_primitive_roots())).collect()
        });
        &gs[&d]
    }

    /// Unordered divisor pairs `m1 ≤ m2` with `[m1, m2] = m`.
    pub(crate) fn lcm_pairs(&self) -> Vec<(u64, u64)> {
        let ds = divisors(self.n());
        let mut out = Vec::new();
        for (i, &x) in ds.iter().enumerate() {
            for &y in &ds[i..] {
                if lcm(x, y) == self.n() {
                    out.push((x, y));
                }
            }
        }
        out
    }

    /// `S_{m,k}` for `k = 1..=m`, indexed by `k − 1`.
    pub(crate) fn kernels(&self) -> &[Vec<u64>] {
        self.kernels.get_or_init(|| {
            let m = self.md();
            let n = self.n();
            let sq: Vec<u64> = (1..=n).map(|x| m.mul(x, x)).collect();
            (1..=n).map(|k| (1..=n).filter(|&x| sq[(x - 1) as usize] == m.mul(k, x)).collect()).collect()
        })
    }

    pub(crate) fn algebra(&self) -> &AlgebraReport {
        self.algebra.get_or_init(|| verify_algebra(self.md()))
    }

    /// `x^k ≡ a` solvable, by scanning the image of `x ↦ x^k`.
    pub(crate) fn image(&self, k: u64) -> Vec<bool> {
        let m = self.md();
        let mut hit = alloc::vec![false; self.n() as usize];
        for x in 1..=self.n() {
            hit[(m.pow(x, k) - 1) as usize] = true;
        }
        hit
    }
}

/// Runs the per-modulus theorems among `theorems` on `m`.
pub fn audit_modulus(m: u64, theorems: &[&'static Theorem], cap: u64) -> Result<Vec<Outcome>> {
    let t = StructureTable::build(m, cap)?;
    let ctx = Ctx::new(&t);
    Ok(theorems
        .iter()
        .filter_map(|th| match th.check {
            Check::Modulus(f) => {
                let mut sink = Sink::new(th.id, m);
                f(&ctx, &mut sink);
                Some(sink.finish())
            }
            Check::Domain(_) => None,
        })
        .collect())
}

/// Runs a domain-scoped theorem on `1..=n`; `None` for per-modulus ones.
pub fn audit_domain(n: u64, theorem: &'static Theorem) -> Option<Outcome> {
    match theorem.check {
        Check::Domain(f) => {
            let mut sink = Sink::new(theorem.id, n);
            f(n, &mut sink);
            Some(sink.finish())
        }
        Check::Modulus(_) => None,
    }
}

/// Domain bound used for function theorems on a sweep ending at `hi`.
pub fn domain_bound(hi: u64) -> u64 {
    hi.clamp(1, 200)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Verified,
    CounterexamplesFound,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Verified => "verified-on-range",
            Status::CounterexamplesFound => "counterexamples found",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TheoremSummary {
    pub id: &'static str,
    pub statement: &'static str,
    pub status: Status,
    pub instances: u64,
    pub skipped: u64,
    pub violations: u64,
    pub findings: Vec<Finding>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AuditReport {
    pub lo: u64,
    pub hi: u64,
    pub theorems: Vec<TheoremSummary>,
}

impl AuditReport {
    pub fn findings(&self) -> impl Iterator<Item = &Finding> {
        self.theorems.iter().flat_map(|t| t.findings.iter())
    }

    pub fn failing(&self) -> impl Iterator<Item = &TheoremSummary> {
        self.theorems.iter().filter(|t| t.status == Status::CounterexamplesFound)
    }
}

fn finding_key(f: &Finding) -> (u64, &'static str, &Vec<(&'static str, Val)>, &'static str) {
    (f.m, f.theorem, &f.witness, f.claim)
}

/// Folds outcomes (in any order) into a report in registry order.
pub fn summarize(lo: u64, hi: u64, theorems: &[&'static Theorem], outcomes: Vec<Outcome>) -> AuditReport {
    let mut by_id: BTreeMap<&'static str, TheoremSummary> = theorems
        .iter()
        .map(|t| {
            (
                t.id,
                TheoremSummary {
                    id: t.id,
                    statement: t.statement,
                    status: Status::Verified,
                    instances: 0,
                    skipped: 0,
                    violations: 0,
                    findings: Vec::new(),
                },
            )
        })
        .collect();
    for o in outcomes {
        if let Some(s) = by_id.get_mut(o.theorem) {
            s.instances += o.instances;
            s.skipped += o.skipped;
            s.violations += o.violations;
            s.findings.extend(o.findings);
        }
    }
    let theorems = theorems
        .iter()
        .map(|t| {
            let mut s = by_id.remove(t.id).expect("summary per theorem");
            s.findings.sort_by(|a, b| finding_key(a).cmp(&finding_key(b)));
            if s.violations > 0 {
                s.status = Status::CounterexamplesFound;
            }
            s
        })
        .collect();
    AuditReport { lo, hi, theorems }
}

/// Resolves ids to registry entries, all of them when `ids` is empty.
pub fn select(ids: &[&str]) -> core::result::Result<Vec<&'static Theorem>, String> {
    if ids.is_empty() {
        return Ok(REGISTRY.iter().collect());
    }
    ids.iter().map(|id| find(id).ok_or_else(|| alloc::format!("unknown theorem id `{id}`"))).collect()
}

/// Sequential sweep over `lo..=hi`.
pub fn run(lo: u64, hi: u64, theorems: &[&'static Theorem], cap: u64) -> Result<AuditReport> {
    let mut outcomes = Vec::new();
    for m in lo.max(1)..=hi {
        outcomes.extend(audit_modulus(m, theorems, cap)?);
    }
    if lo <= hi {
        let n = domain_bound(hi);
        outcomes.extend(theorems.iter().filter_map(|t| audit_domain(n, t)));
    }
    Ok(summarize(lo, hi, theorems, outcomes))
}

#[inline]
pub(crate) fn coprime(a: u64, b: u64) -> bool {
    gcd(a, b) == 1
}

#[cfg(test)]
mod tests {
    use super::*;

    fn findings(id: &str, m: u64) -> Vec<Finding> {
        run(m, m, &select(&[id]).unwrap(), crate::DEFAULT_MAX_ENUM).unwrap().theorems.remove(0).findings
    }

    #[test]
    fn pinned_counterexamples_at_12() {
        let fs05 = findings("fs05", 12);
        assert!(fs05
            .iter()
            .any(|f| f.witness == wit![e = 1u64, k = 2u64] && f.expected == Val::Int(6) && f.actual == Val::Int(4)));
        let nn08 = findings("nn08", 12);
        assert!(nn08.iter().any(|f| f.witness == wit![a = 2u64]));
        assert!(findings("in02", 12).is_empty());
    }
}
