use minabc_verifier::{builtin_tables, crossover, scan_table, scan_transform, Form, TransformId, TransformParams};

#[test]
fn large_z_row_53() {
    let mut t = builtin_tables().large_z;
    t.rows.retain(|r| r.z == 53);
    let rep = scan_table(&t);
    assert!(rep.pass(), "{}", rep.to_text(true));
    assert!(rep.min_margin() > 0.0);
    let base = TransformParams::new().z(53).x(261).k(52).n_k(164).n_km1(104);
    assert_eq!(crossover(TransformId::T4, Form::SurrogateB, &base, 261), Some(259_226));
}

#[test]
fn small_z_row_50() {
    let mut t = builtin_tables().small_z;
    t.rows.retain(|r| r.z == 50);
    let rep = scan_table(&t);
    assert!(rep.pass(), "{}", rep.to_text(true));
}

#[test]
fn corrupted_count_fails_consistency() {
    let mut t = builtin_tables().large_z;
    t.rows.retain(|r| r.z == 53);
    t.rows[0].n_k += 1;
    let rep = scan_table(&t);
    assert!(!rep.pass());
    assert!(rep.violation_count() >= 1);
}

#[test]
fn every_transform_scans_clean() {
    for id in TransformId::ALL {
        let rep = scan_transform(id);
        assert!(rep.pass(), "{}", rep.to_text(true));
        assert_eq!(rep.violation_count(), 0);
        assert!(rep.points() > 0, "{id}");
        assert!(rep.min_margin() > 0.0, "{id}: {}", rep.min_margin());
        let back: serde_json::Value = serde_json::from_str(&rep.to_json()).unwrap();
        assert_eq!(back["id"], id.to_string());
    }
}
