use num_bigint::{BigInt, BigUint};

use quatcusp::numtheory::is_prime;
use quatcusp::{
    algebra_for_prime, boundary_descriptor, boundary_report, class_number, cusp_count, cusp_count_level_one,
    global_index, CongruenceLevel, QuaternionOrder,
};

#[test]
fn class_number_one_algebras_have_one_cusp() {
    for p in [2u64, 3, 5, 7, 13] {
        let alg = algebra_for_prime(p).unwrap();
        assert_eq!(cusp_count_level_one(&alg, None).unwrap(), BigUint::from(1u32), "p = {p}");
    }
}

#[test]
fn maximal_orders_for_prime_discriminants() {
    for p in (2..60u64).filter(|&p| is_prime(p)) {
        let alg = algebra_for_prime(p).unwrap();
        let seed = QuaternionOrder::standard(&alg);
        let max = seed.maximalize().unwrap();
        assert_eq!(max.reduced_discriminant(), &BigInt::from(p), "p = {p}");
        assert!(seed.basis().iter().all(|e| max.contains(e).unwrap()));
        let back = QuaternionOrder::from_json(&alg, &max.to_json()).unwrap();
        assert!(back.is_maximal());
    }
}

#[test]
fn report_matches_theorem_values() {
    // dim R^1 + dim R^3 = 4 h^2 N^-4 [Gamma : Gamma(p^e)], dim R^2 = 3 h^2 N^-4 [..].
    for p in [2u64, 11, 17, 23] {
        let alg = algebra_for_prime(p).unwrap();
        let h = BigUint::from(class_number(p).unwrap());
        for (lp, e) in [(3u64, 1u32), (5, 1), (7, 2)] {
            if lp == p {
                continue;
            }
            let level = CongruenceLevel::prime_power(lp, e).unwrap();
            let index = global_index(&alg, &level).unwrap().value;
            let scaled = &h * &h * index / level.norm().pow(4);
            let c = cusp_count(&alg, None, lp, e, None).unwrap();
            assert_eq!(c, scaled);
            let r = boundary_report(&c).unwrap();
            assert_eq!(r.r13_sum, &scaled * 4u32);
            assert_eq!(r.r2, &scaled * 3u32);
            assert_eq!(boundary_descriptor(&alg).unwrap().total_manifold_dim, 5);
        }
    }
}
