mod common;

use idem_core::binomial::{solve_exhaustive, OmegaTable};
use idem_core::{oracle, StructureTable, DEFAULT_MAX_ENUM};

fn table(n: u64) -> StructureTable {
    StructureTable::build(n, DEFAULT_MAX_ENUM).unwrap()
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
    assert_eq!(om.solve(2, 2).unwrap().bc01_verdict, None);
    assert!(om.solvable_bc01(2, 2).is_err());
    for a in 1..=12 {
        assert_eq!(om.solve(1, a).unwrap().solutions, [a]);
    }
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
    assert_eq!(om.gen_primitive_roots(), [3, 5, 7, 8, 11, 12]);
    let one = table(1);
    assert_eq!(OmegaTable::new(&one).gen_primitive_roots(), [1]);
}

#[test]
fn classical_primitive_roots_are_generalized() {
    for p in (2..=50u64).filter(|&p| idem_core::arith::is_prime(p)) {
        let t = table(p);
        let g = OmegaTable::new(&t).gen_primitive_roots();
        for x in (1..p).filter(|&x| oracle::order_raw(p, x) == p - 1) {
            assert!(g.contains(&x), "classical root {x} mod {p}");
        }
    }
}

#[test]
fn solution_sets_match_oracle() {
    for n in 1..=150 {
        let t = table(n);
        let om = OmegaTable::new(&t);
        for k in 1..=30 {
            for a in 1..=n {
                let s = om.solve(k, a).unwrap();
                assert_eq!(s.solutions, oracle::solve_raw(n, k, a), "m={n} k={k} a={a}");
                let reg: Vec<u64> = s.solutions.iter().copied().filter(|&x| t.is_regular(x)).collect();
                assert_eq!(s.regular_solutions, reg);
                assert_eq!(s.solvable, !s.solutions.is_empty());
                if let Some(v) = s.bc01_verdict {
                    assert_eq!(v, s.solvable, "bc01 m={n} k={k} a={a}");
                }
            }
        }
        if n <= 60 {
            assert_eq!(solve_exhaustive(&t, 3, 1).unwrap().solutions, oracle::solve_raw(n, 3, 1));
        }
    }
}

#[test]
fn omega_matches_oracle() {
    for n in 1..=150 {
        let t = table(n);
        let om = OmegaTable::new(&t);
        for a in (1..=n).filter(|&a| t.is_regular(a)) {
            let i = om.omega_info(a).unwrap();
            assert_eq!(i.omega_a, oracle::omega_raw(n, a), "ω m={n} a={a}");
            assert_eq!(i.omega_a % t.order(a), 0);
            assert_eq!(i.ind_sup * t.order(a), i.omega_a);
            assert!(i.omega_set.iter().all(|&b| t.order(b) == i.omega_a));
        }
    }
}

#[test]
fn registry_binomial_theorems() {
    common::assert_clean(
        1,
        150,
        &[
            "bc01", "bc02", "bc03", "bc04", "bc05", "bc06", "bc07", "bc08", "bc09", "pr02", "pr03", "pr04", "pr05",
            "pr06",
        ],
    );
}
