use std::collections::BTreeSet;

use idem_core::algebra::{basis_map, circ, idem_op, verify_algebra, IdemOp, IdemOpsTable};
use idem_core::Modulus;

#[test]
fn every_law_holds_up_to_1000() {
    for n in 1..=1000 {
        let report = verify_algebra(&Modulus::new(n).unwrap());
        for law in &report.laws {
            assert!(law.passed, "m={n} {}: {:?}", law.law, law.counterexample);
            assert!(law.checked > 0, "m={n} {} vacuous", law.law);
        }
    }
}

#[test]
fn tables_basis_and_translations() {
    for n in 1..=1000 {
        let m = Modulus::new(n).unwrap();
        let t = IdemOpsTable::new(&m);
        let es = &t.elements;
        let all = t.circ.iter().chain(&t.otimes).chain(&t.simdiff).flatten().chain(&t.complement);
        for &x in all {
            assert!(m.is_idempotent(x), "m={n} entry {x}");
        }
        let b = basis_map(&m);
        assert_eq!(es.len(), 1 << b.basis.len());
        assert_eq!(b.members(m.reduce(1)).unwrap(), &[] as &[u64]);
        assert_eq!(b.members(n).unwrap(), b.basis.as_slice());
        let images: BTreeSet<&[u64]> = es.iter().map(|&e| b.members(e).unwrap()).collect();
        assert_eq!(images.len(), es.len(), "B_m not injective at {n}");
        for &e2 in es {
            let shifted: BTreeSet<u64> = es.iter().map(|&e| circ(&m, e2, e)).collect();
            assert_eq!(shifted.len(), es.len(), "e2∘E_m at m={n} e2={e2}");
        }
    }
}

#[test]
fn operator_examples() {
    let m = Modulus::new(12).unwrap();
    assert_eq!(idem_op(&m, IdemOp::Complement, 4, None).unwrap(), 9);
    assert_eq!(idem_op(&m, IdemOp::Circ, 4, Some(9)).unwrap(), 12);
    assert_eq!(idem_op(&m, IdemOp::Otimes, 4, Some(9)).unwrap(), 1);
    assert_eq!(idem_op(&m, IdemOp::Circ, 1, Some(4)).unwrap(), 4);
    assert!(idem_op(&m, IdemOp::Circ, 2, Some(4)).is_err());
    assert!(idem_op(&m, IdemOp::Otimes, 4, None).is_err());
    assert_eq!(idem_op(&m, IdemOp::Complement, -8, None).unwrap(), 9);
}
