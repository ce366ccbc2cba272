//! Solvability of `x^k ≡ a (mod m)`, `ω_m(a)` and generalized primitive roots.
//!
//! `ω_m(a)` is the largest order of a regular residue with `a` in its orbit.
//! For regular `a`, `x^k ≡ a` is solvable iff `a^{ω/(k,ω)}` is idempotent.
//! No shortcut for `ω_m` is known, so it is computed by walking every orbit.

use alloc::vec;
use alloc::vec::Vec;

use crate::arith::gcd;
use crate::structure::StructureTable;
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CongruenceSolution {
    pub m: u64,
    pub k: u64,
    pub a: u64,
    pub solutions: Vec<u64>,
    pub regular_solutions: Vec<u64>,
    pub solvable: bool,
    /// The bc01 verdict, present only for regular `a`.
    pub bc01_verdict: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OmegaInfo {
    pub a: u64,
    pub omega_a: u64,
    pub omega_set: Vec<u64>,
    pub ind_sup: u64,
}

/// `ω_m(a)` for every regular residue of one modulus.
#[derive(Debug, Clone)]
pub struct OmegaTable<'t> {
    table: &'t StructureTable,
    /// Indexed by `a - 1`; 0 for non-regular `a`.
    omega: Vec<u64>,
}

impl<'t> OmegaTable<'t> {
    pub fn new(table: &'t StructureTable) -> Self {
        let m = table.modulus();
        let mut omega = vec![0u64; table.m() as usize];
        for b in 1..=table.m() {
            if !table.is_regular(b) {
                continue;
            }
            let n = table.order(b);
            let mut x = b;
            for _ in 0..n {
                let slot = &mut omega[(x - 1) as usize];
                *slot = (*slot).max(n);
                x = m.mul(x, b);
            }
        }
        OmegaTable { table, omega }
    }

    pub fn table(&self) -> &'t StructureTable {
        self.table
    }

    fn ensure_regular(&self, a: u64) -> Result<()> {
        if self.table.is_regular(a) {
            Ok(())
        } else {
            Err(Error::NotRegular { m: self.table.m(), value: a })
        }
    }

    /// `ω_m(a)` for regular `a`.
    pub fn omega(&self, a: u64) -> Result<u64> {
        let a = self.table.modulus().reduce(a);
        self.ensure_regular(a)?;
        Ok(self.omega[(a - 1) as usize])
    }

    /// `Ω_m(a)` for every regular `a` at once, indexed by `a - 1`.
    pub fn omega_sets(&self) -> Vec<Vec<u64>> {
        let t = self.table;
        let m = t.modulus();
        let mut sets = vec![Vec::new(); t.m() as usize];
        for b in 1..=t.m() {
            if !t.is_regular(b) {
                continue;
            }
            let n = t.order(b);
            let mut x = b;
            for _ in 0..n {
                if self.omega[(x - 1) as usize] == n {
                    sets[(x - 1) as usize].push(b);
                }
                x = m.mul(x, b);
            }
        }
        sets
    }

    pub fn omega_info(&self, a: u64) -> Result<OmegaInfo> {
        let t = self.table;
        let m = t.modulus();
        let a = m.reduce(a);
        let omega_a = self.omega(a)?;
        let omega_set =
            (1..=t.m()).filter(|&b| t.is_regular(b) && t.order(b) == omega_a && t.orbit(b).contains(a)).collect();
        Ok(OmegaInfo { a, omega_a, omega_set, ind_sup: omega_a / t.order(a) })
    }

    /// `G_m = {g ∈ R_m : ω_m(g) = |g|_m}`.
    pub fn gen_primitive_roots(&self) -> Vec<u64> {
        let t = self.table;
        (1..=t.m()).filter(|&g| t.is_regular(g) && self.omega[(g - 1) as usize] == t.order(g)).collect()
    }

    /// Criterion bc01: `a^{ω/(k,ω)} ∈ E_m`. Defined for regular `a` only.
    pub fn solvable_bc01(&self, k: u64, a: u64) -> Result<bool> {
        if k == 0 {
            return Err(Error::ZeroExponent);
        }
        let m = self.table.modulus();
        let a = m.reduce(a);
        let w = self.omega(a)?;
        Ok(m.is_idempotent(m.pow(a, w / gcd(k, w))))
    }

    /// Exhaustive solution of `x^k ≡ a`, with the bc01 verdict when `a` is regular.
    pub fn solve(&self, k: u64, a: u64) -> Result<CongruenceSolution> {
        let t = self.table;
        let mut sol = solve_exhaustive(t, k, a)?;
        if t.is_regular(sol.a) {
            sol.bc01_verdict = Some(self.solvable_bc01(k, sol.a)?);
        }
        Ok(sol)
    }
}

/// `S_m(k, a)` and `S_m^R(k, a)` by a full scan, without the bc01 verdict.
pub fn solve_exhaustive(table: &StructureTable, k: u64, a: u64) -> Result<CongruenceSolution> {
    if k == 0 {
        return Err(Error::ZeroExponent);
    }
    let m = table.modulus();
    let a = m.reduce(a);
    let solutions: Vec<u64> = (1..=table.m()).filter(|&x| m.pow(x, k) == a).collect();
    let regular_solutions = solutions.iter().copied().filter(|&x| table.is_regular(x)).collect();
    Ok(CongruenceSolution {
        m: table.m(),
        k,
        a,
        solvable: !solutions.is_empty(),
        solutions,
        regular_solutions,
        bc01_verdict: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn table(n: u64) -> StructureTable {
        StructureTable::build(n, crate::DEFAULT_MAX_ENUM).unwrap()
    }

    #[test]
    fn solve_examples() {
        let t = table(12);
        let om = OmegaTable::new(&t);
        let s = om.solve(2, 4).unwrap();
        assert_eq!(s.solutions, [2, 4, 8, 10]);
        assert_eq!(s.regular_solutions, [4, 8]);
        assert!(s.solvable && s.bc01_verdict == Some(true));
        let s = om.solve(2, 5).unwrap();
        assert!(s.solutions.is_empty() && !s.solvable);
        assert_eq!(s.bc01_verdict, Some(false));
        for a in 1..=12 {
            assert_eq!(om.solve(1, a).unwrap().solutions, [a]);
        }
        assert_eq!(om.solve(2, 2).unwrap().bc01_verdict, None);
        assert!(om.solvable_bc01(2, 2).is_err());
    }

    #[test]
    fn omega_examples() {
        let t = table(12);
        let om = OmegaTable::new(&t);
        let i = om.omega_info(5).unwrap();
        assert_eq!((i.omega_a, i.omega_set.as_slice(), i.ind_sup), (2, &[5][..], 1));
        let i = om.omega_info(4).unwrap();
        assert_eq!((i.omega_a, i.omega_set.as_slice(), i.ind_sup), (2, &[8][..], 2));
        assert_eq!(om.omega(1).unwrap(), 2);
        let sets = om.omega_sets();
        assert_eq!(sets[3], [8]);
        assert_eq!(sets[4], [5]);
    }

    #[test]
    fn primitive_root_examples() {
        let t = table(12);
        assert_eq!(OmegaTable::new(&t).gen_primitive_roots(), [3, 5, 7, 8, 11, 12]);
        let t1 = table(1);
        assert_eq!(OmegaTable::new(&t1).gen_primitive_roots(), [1]);
    }
}
