use cyclotomy49_core::artiad::{classify, Kind};
use cyclotomy49_core::congruence::{verify_prime, CoeffSet};
use cyclotomy49_core::cyclotomy::{all_jacobi_direct, cyc_from_jacobi, cyclotomic_numbers};
use cyclotomy49_core::lw::{lw_from_tables, tu_decompose};
use cyclotomy49_core::prime_field::is_primitive_root;
use cyclotomy49_core::{FieldCtx, Order, Residue8};

#[test]
fn every_n_matches_for_197() {
    let ns: Vec<u32> = (1..=48).collect();
    let v = verify_prime(197, None, &ns).unwrap();
    assert!(v.passed(), "{:?}", v.discrepancies);
    for cert in &v.certificates {
        assert_eq!(cert.predicted, cert.actual, "n = {}", cert.n);
        if cert.n % 7 == 0 {
            assert_eq!(cert.actual, Residue8::MINUS_ONE);
            assert!(matches!(cert.coeffs.definition, CoeffSet::Degenerate { .. }));
        }
    }
    assert_eq!(v.tu.to_array(), [-13, 2]);
    assert_eq!(v.lw.x, [-13, -6, 1, -8, -5, 1]);
}

#[test]
fn second_generator_agrees() {
    for p in [197u64, 491] {
        let g2 = (2..p).filter(|&g| is_primitive_root(g, p)).nth(1).unwrap();
        let a = verify_prime(p, None, &[1, 2, 8]).unwrap();
        let b = verify_prime(p, Some(g2), &[1, 2, 8]).unwrap();
        assert!(a.passed() && b.passed());
        assert_eq!(a.classification.kind, b.classification.kind);
        assert_eq!(a.tu, b.tu);
        assert_eq!(a.lw.x[0], b.lw.x[0]);
        assert!(cyclotomy49_core::lw::orbit(&a.lw).unwrap().contains(&b.lw), "p = {p}");
    }
}

#[test]
fn fourier_inversion_samples_for_order_49() {
    let ctx = FieldCtx::new(197).unwrap();
    let cyc = cyclotomic_numbers(&ctx, Order::FortyNine).unwrap();
    let all = all_jacobi_direct(&ctx, Order::FortyNine).unwrap();
    for (a, b) in [(0, 0), (0, 1), (1, 0), (3, 11), (48, 48), (7, 14), (20, 5), (33, 2), (1, 48), (16, 40)] {
        assert_eq!(cyc_from_jacobi(&all, a, b).unwrap(), cyc.get(a, b));
    }
}

#[test]
fn classification_is_stable_under_orbit_and_generator() {
    for p in [29u64, 43, 113, 127, 197, 211] {
        let ctx = FieldCtx::new(p).unwrap();
        let dh =
            cyclotomy49_core::cyclotomy::dickson_hurwitz(&cyclotomic_numbers(&ctx, Order::Seven).unwrap());
        let sol = lw_from_tables(&dh).unwrap();
        let verdict = cyclotomy49_core::artiad::classify_via_x(&sol);
        for m in cyclotomy49_core::lw::orbit(&sol).unwrap() {
            assert_eq!(cyclotomy49_core::artiad::classify_via_x(&m), verdict);
        }
        assert!(tu_decompose(p).is_ok());
        let c = classify(p, None).unwrap();
        assert_eq!(c.kind == Kind::Ordinary, !verdict);
    }
}
