use idem_core::binomial::OmegaTable;
use idem_core::{audit, oracle, StructureTable, DEFAULT_MAX_ENUM};

#[test]
fn fast_paths_agree_with_brute_force() {
    for n in 1..=500 {
        let t = StructureTable::build(n, DEFAULT_MAX_ENUM).unwrap();
        assert_eq!(t.idempotents(), oracle::idempotents_raw(n).as_slice(), "E_{n}");
        for a in 1..=n {
            let c = t.classify(a);
            assert_eq!(c.order, oracle::order_raw(n, a), "|a| m={n} a={a}");
            assert_eq!(c.idem_class, oracle::idem_class_raw(n, a));
            assert_eq!(c.is_regular, oracle::is_regular_raw(n, a));
            assert_eq!(c.is_normal, oracle::is_normal_raw(n, a), "normal m={n} a={a}");
            assert_eq!(c.delta, oracle::delta_raw(n, a));
            assert_eq!(c.mu, oracle::mu_raw(n, a));
        }
    }
}

#[test]
fn solvability_agrees_with_brute_force() {
    for n in 1..=500 {
        let t = StructureTable::build(n, DEFAULT_MAX_ENUM).unwrap();
        let om = OmegaTable::new(&t);
        for k in [2, 3, 4, 6] {
            for a in 1..=n {
                let s = om.solve(k, a).unwrap();
                assert_eq!(s.solvable, !oracle::solve_raw(n, k, a).is_empty(), "m={n} k={k} a={a}");
            }
        }
    }
}

#[test]
fn audit_is_deterministic() {
    let all = audit::select(&[]).unwrap();
    let a = audit::run(2, 40, &all, DEFAULT_MAX_ENUM).unwrap();
    let b = audit::run(2, 40, &all, DEFAULT_MAX_ENUM).unwrap();
    assert_eq!(a, b);
    let failing: Vec<&str> = a.failing().map(|t| t.id).collect();
    assert_eq!(failing, ["nn08", "rn17", "fs05"]);
}
