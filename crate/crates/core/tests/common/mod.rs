#![allow(dead_code)]

use idem_core::audit::{run, select, AuditReport};

/// Audits `ids` on `lo..=hi`.
pub fn sweep(lo: u64, hi: u64, ids: &[&str]) -> AuditReport {
    let theorems = select(ids).expect("registered ids");
    run(lo, hi, &theorems, u64::MAX).expect("table build")
}

/// Every listed theorem must be exercised and violation-free.
pub fn assert_clean(lo: u64, hi: u64, ids: &[&str]) {
    let report = sweep(lo, hi, ids);
    for t in &report.theorems {
        assert!(t.instances > 0, "{} never reached its conclusion on {lo}..={hi}", t.id);
        assert_eq!(t.violations, 0, "{} on {lo}..={hi}: first finding {:?}", t.id, t.findings.first());
    }
}
