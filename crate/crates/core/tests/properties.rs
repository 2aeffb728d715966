use cyclotomy49_core::prime_field::{is_primitive_root, pow_mod};
use cyclotomy49_core::{CycInt, FieldCtx, Order};
use proptest::prelude::*;

fn cyc49() -> impl Strategy<Value = CycInt> {
    prop::collection::vec(-1000i64..1000, 49)
        .prop_map(|v| CycInt::from_redundant(Order::FortyNine, v).unwrap())
}

fn cyc7() -> impl Strategy<Value = CycInt> {
    prop::collection::vec(-1000i64..1000, 7).prop_map(|v| CycInt::from_redundant(Order::Seven, v).unwrap())
}

proptest! {
    #[test]
    fn residue_map_is_a_homomorphism(a in cyc49(), b in cyc49()) {
        let (ra, rb) = (a.residue_mod_t8().unwrap(), b.residue_mod_t8().unwrap());
        prop_assert_eq!(a.checked_add(&b).unwrap().residue_mod_t8().unwrap(), ra + rb);
        prop_assert_eq!(a.checked_mul(&b).unwrap().residue_mod_t8().unwrap(), ra * rb);
    }

    #[test]
    fn ring_laws(a in cyc7(), b in cyc7(), c in cyc7()) {
        prop_assert_eq!(a.checked_mul(&b).unwrap(), b.checked_mul(&a).unwrap());
        let ab_c = a.checked_mul(&b).unwrap().checked_mul(&c).unwrap();
        let a_bc = a.checked_mul(&b.checked_mul(&c).unwrap()).unwrap();
        prop_assert_eq!(ab_c, a_bc);
        let dist = a.checked_mul(&b.checked_add(&c).unwrap()).unwrap();
        prop_assert_eq!(dist, a.checked_mul(&b).unwrap().checked_add(&a.checked_mul(&c).unwrap()).unwrap());
    }

    #[test]
    fn automorphisms_respect_products(a in cyc49(), b in cyc49(), s in 1i64..49) {
        prop_assume!(s % 7 != 0);
        let lhs = a.checked_mul(&b).unwrap().apply_automorphism(s).unwrap();
        let rhs = a.apply_automorphism(s).unwrap().checked_mul(&b.apply_automorphism(s).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn valuation_of_products_adds(a in cyc49(), b in cyc49()) {
        prop_assume!(!a.is_zero() && !b.is_zero());
        let va = a.valuation().unwrap().unwrap();
        let vb = b.valuation().unwrap().unwrap();
        prop_assert_eq!(a.checked_mul(&b).unwrap().valuation().unwrap(), Some(va + vb));
    }

    #[test]
    fn index_is_a_homomorphism(a in 1i64..1373, b in 1i64..1373) {
        let ctx = FieldCtx::new(1373).unwrap();
        let ia = ctx.index_of(a).unwrap();
        let ib = ctx.index_of(b).unwrap();
        prop_assert_eq!(ctx.index_of(a * b).unwrap(), (ia + ib) % 1372);
        prop_assert_eq!(pow_mod(ctx.gamma(), ia, 1373), a as u64);
    }

    #[test]
    fn seventh_power_residuosity_is_generator_free(a in 1i64..491, g in 2u64..491) {
        prop_assume!(is_primitive_root(g, 491));
        let base = FieldCtx::new(491).unwrap();
        let other = FieldCtx::with_generator(491, g).unwrap();
        prop_assert_eq!(base.is_seventh_power_residue(a).unwrap(), other.is_seventh_power_residue(a).unwrap());
        prop_assert_eq!(base.is_seventh_power_residue(a).unwrap(), pow_mod(a as u64, 70, 491) == 1);
    }
}
