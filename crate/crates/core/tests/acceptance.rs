//! Acceptance suite. Runs every criterion, prints one PASS/FAIL line per
//! criterion and exits nonzero if any failed.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use quatcusp::numtheory::{is_prime, relevant_places};
use quatcusp::{
    algebra_for_prime, boundary_report, class_number, cusp_count, global_index, hilbert_symbol,
    hilbert_symbol_oracle, local_group_order, local_index, sl4_order_oracle, CongruenceLevel,
    Place, QuaternionAlgebra, QuaternionElement, QuaternionOrder, RamificationSet,
};

const PROPERTY_CASES: usize = 10_000;

type Check = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(elapsed: Duration, limit: Duration, what: &str) -> Result<(), String> {
    ensure(elapsed < limit, || format!("{what} took {elapsed:?}, limit {limit:?}"))
}

fn split_algebra() -> QuaternionAlgebra {
    QuaternionAlgebra::new(1, 1).unwrap()
}

fn hamilton() -> QuaternionAlgebra {
    QuaternionAlgebra::new(-1, -1).unwrap()
}

fn square_free(n: i64) -> bool {
    quatcusp::factorize(n).unwrap().is_square_free()
}

fn ac1_split_order_oracle() -> Check {
    let t = Instant::now();
    let two = sl4_order_oracle(2).map_err(|e| e.to_string())?;
    within(t.elapsed(), Duration::from_secs(1), "q = 2 enumeration")?;
    let t = Instant::now();
    let three = sl4_order_oracle(3).map_err(|e| e.to_string())?;
    let elapsed3 = t.elapsed();
    within(elapsed3, Duration::from_secs(120), "q = 3 enumeration")?;
    let f2 = local_group_order(&split_algebra(), 2).unwrap();
    let f3 = local_group_order(&split_algebra(), 3).unwrap();
    ensure(two == 20160 && f2 == BigUint::from(20160u32), || format!("q=2: oracle {two}, formula {f2}"))?;
    ensure(three == 12_130_560 && f3 == BigUint::from(12_130_560u32), || {
        format!("q=3: oracle {three}, formula {f3}")
    })?;
    Ok(format!("|SL4(F2)| = {two}, |SL4(F3)| = {three} (q=3 in {elapsed3:.2?})"))
}

fn ac2_hilbert_oracle() -> Check {
    let t = Instant::now();
    let vals: Vec<i64> = (-20i64..=20).filter(|&n| n != 0 && square_free(n)).collect();
    let places = [2u64, 3, 5, 7, 11, 13]
        .into_iter()
        .map(Place::Finite)
        .chain([Place::Infinity]);
    let places: Vec<Place> = places.collect();
    let mut checked = 0;
    for &a in &vals {
        for &b in &vals {
            for &v in &places {
                let fast = hilbert_symbol(a, b, v).unwrap();
                let slow = hilbert_symbol_oracle(a, b, v).unwrap();
                ensure(fast == slow, || format!("({a}, {b})_{v}: fast {fast}, oracle {slow}"))?;
                checked += 1;
            }
        }
    }
    within(t.elapsed(), Duration::from_secs(60), "oracle sweep")?;
    Ok(format!("{checked} symbols agree, 0 mismatches"))
}

fn ac3_reciprocity_parity() -> Check {
    let mut checked = 0;
    for a in -50i64..=50 {
        for b in -50i64..=50 {
            if a == 0 || b == 0 {
                continue;
            }
            let product: i8 = relevant_places(a, b)
                .unwrap()
                .into_iter()
                .map(|v| hilbert_symbol(a, b, v).unwrap())
                .product();
            ensure(product == 1, || format!("product over places for ({a}, {b}) is {product}"))?;
            let r = QuaternionAlgebra::new(a, b).unwrap();
            let n = r.ramification_set().len();
            ensure(n % 2 == 0, || format!("|Ram Q({a}, {b})| = {n}"))?;
            checked += 1;
        }
    }
    Ok(format!("{checked} pairs, 0 violations"))
}

fn ac4_classification() -> Check {
    let mut count = 0;
    for p in (2..=200u64).filter(|&p| is_prime(p)) {
        let alg = algebra_for_prime(p).map_err(|e| e.to_string())?;
        let expected = RamificationSet::from_places([Place::Infinity, Place::Finite(p)]);
        ensure(alg.ramification_set() == &expected, || {
            format!("p = {p}: {alg} ramifies at {}", alg.ramification_set())
        })?;
        count += 1;
    }
    Ok(format!("{count} primes <= 200 ramify exactly at {{inf, p}}"))
}

fn ac5_class_numbers() -> Check {
    let ones: Vec<u64> = (2..=100u64)
        .filter(|&p| is_prime(p))
        .filter(|&p| class_number(p).unwrap() == 1)
        .collect();
    ensure(ones == [2, 3, 5, 7, 13], || format!("class number one for {ones:?}"))?;
    let h11 = class_number(11).unwrap();
    ensure(h11 == 2, || format!("h(11) = {h11}"))?;
    Ok("h = 1 exactly for {2, 3, 5, 7, 13}; h(11) = 2".into())
}

fn ac6_cusp_pipeline() -> Check {
    let h = hamilton();
    let index = global_index(&h, &CongruenceLevel::prime_power(3, 1).unwrap()).unwrap();
    ensure(index.value == BigUint::from(12_130_560u32), || format!("index {}", index.value))?;
    let cusps = cusp_count(&h, Some(1), 3, 1, None).map_err(|e| e.to_string())?;
    ensure(cusps == BigUint::from(149_760u32), || format!("cusps {cusps}"))?;
    for p in [3u64, 5] {
        for e in 1..=3u32 {
            let i0 = local_index(&h, p, e).unwrap();
            let i1 = local_index(&h, p, e + 1).unwrap();
            ensure(i1 == &i0 * BigUint::from(p).pow(15), || format!("index ratio at p={p}, e={e}"))?;
            let c0 = cusp_count(&h, Some(1), p, e, None).map_err(|e| e.to_string())?;
            let c1 = cusp_count(&h, Some(1), p, e + 1, None).map_err(|e| e.to_string())?;
            ensure(c1 == &c0 * BigUint::from(p).pow(11), || format!("cusp ratio at p={p}, e={e}"))?;
        }
    }
    Ok("index 12130560, cusps 149760; tower ratios p^15 and p^11 for p in {3, 5}, e = 1..3".into())
}

fn ac7_cohomology() -> Check {
    for c in [1u64, 4, 149_760] {
        let r = boundary_report(&BigUint::from(c)).map_err(|e| e.to_string())?;
        let big = BigUint::from;
        ensure(r.r0 == big(1u64), || format!("c={c}: r0 = {}", r.r0))?;
        ensure(r.r2 == big(3 * c), || format!("c={c}: r2 = {}", r.r2))?;
        ensure(r.r13_sum == big(4 * c), || format!("c={c}: r13 = {}", r.r13_sum))?;
        ensure(r.r4 == big(c - 1), || format!("c={c}: r4 = {}", r.r4))?;
        ensure(r.total_image() * 2u32 == r.total_boundary(), || format!("c={c}: half-dimension"))?;
    }
    Ok("r0 = 1, r2 = 3c, r1+r3 = 4c, r4 = c-1, total R = half of boundary for c in {1, 4, 149760}".into())
}

fn ac8_orders() -> Check {
    let t = Instant::now();
    let hur = QuaternionOrder::hurwitz();
    ensure(hur.reduced_discriminant() == &BigInt::from(2) && hur.is_maximal(), || {
        format!("Hurwitz d = {}", hur.reduced_discriminant())
    })?;
    let lip = QuaternionOrder::lipschitz();
    ensure(lip.reduced_discriminant() == &BigInt::from(4) && !lip.is_maximal(), || {
        format!("Lipschitz d = {}", lip.reduced_discriminant())
    })?;
    let max = lip.maximalize().map_err(|e| e.to_string())?;
    ensure(max.reduced_discriminant() == &BigInt::from(2), || {
        format!("maximalized Lipschitz d = {}", max.reduced_discriminant())
    })?;
    ensure(lip.basis().iter().all(|e| max.contains(e).unwrap()), || {
        "maximalized order misses a Lipschitz generator".into()
    })?;
    let alg = QuaternionAlgebra::new(-1, -7).unwrap();
    let seven = QuaternionOrder::standard(&alg).maximalize().map_err(|e| e.to_string())?;
    ensure(seven.reduced_discriminant() == &BigInt::from(7), || {
        format!("Q(-1,-7) maximal d = {}", seven.reduced_discriminant())
    })?;
    within(t.elapsed(), Duration::from_secs(5), "order suite")?;
    Ok(format!("Hurwitz d=2 maximal, Lipschitz d=4 -> 2, Q(-1,-7) d=28 -> 7 in {:.2?}", t.elapsed()))
}

fn random_nonzero(rng: &mut ChaCha8Rng, bound: i64) -> i64 {
    loop {
        let n = rng.gen_range(-bound..=bound);
        if n != 0 {
            return n;
        }
    }
}

fn random_element(rng: &mut ChaCha8Rng, alg: &QuaternionAlgebra) -> QuaternionElement {
    alg.element(std::array::from_fn(|_| {
        BigRational::new(rng.gen_range(-30i64..=30).into(), rng.gen_range(1i64..=8).into())
    }))
}

fn random_algebra(rng: &mut ChaCha8Rng) -> QuaternionAlgebra {
    QuaternionAlgebra::new(random_nonzero(rng, 40), random_nonzero(rng, 40)).unwrap()
}

fn random_place(rng: &mut ChaCha8Rng) -> Place {
    const PLACES: [Place; 7] = [
        Place::Infinity,
        Place::Finite(2),
        Place::Finite(3),
        Place::Finite(5),
        Place::Finite(7),
        Place::Finite(11),
        Place::Finite(13),
    ];
    PLACES[rng.gen_range(0..PLACES.len())]
}

fn ac9_properties() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_2026);
    for n in 0..PROPERTY_CASES {
        let alg = random_algebra(&mut rng);
        let x = random_element(&mut rng, &alg);
        let y = random_element(&mut rng, &alg);

        let (t, nrd) = x.reduced_char_poly();
        let ch = x
            .multiply(&x)
            .and_then(|x2| x2.sub(&x.scale(&t)))
            .and_then(|z| z.add(&alg.one().scale(&nrd)))
            .unwrap();
        ensure(ch.is_zero(), || format!("case {n}: Cayley-Hamilton fails for {x} in {alg}"))?;

        let xy = x.multiply(&y).unwrap();
        ensure(xy.reduced_norm() == x.reduced_norm() * y.reduced_norm(), || {
            format!("case {n}: norm not multiplicative for {x}, {y} in {alg}")
        })?;

        let xc = x.multiply(&x.conjugate()).unwrap();
        ensure(xc == alg.one().scale(&x.reduced_norm()), || {
            format!("case {n}: x * conj(x) != nrd(x) for {x} in {alg}")
        })?;

        let (a1, a2, b) = (
            random_nonzero(&mut rng, 60),
            random_nonzero(&mut rng, 60),
            random_nonzero(&mut rng, 60),
        );
        let v = random_place(&mut rng);
        let hs = |a, b| hilbert_symbol(a, b, v).unwrap();
        ensure(hs(a1 * a2, b) == hs(a1, b) * hs(a2, b), || {
            format!("case {n}: bimultiplicativity ({a1}*{a2}, {b})_{v}")
        })?;
        ensure(hs(a1, b) == hs(b, a1), || format!("case {n}: symmetry ({a1}, {b})_{v}"))?;
        ensure(hs(a1, -a1) == 1, || format!("case {n}: ({a1}, -{a1})_{v}"))?;
        if a1 != 1 {
            ensure(hs(a1, 1 - a1) == 1, || format!("case {n}: ({a1}, 1-{a1})_{v}"))?;
        }

        let s = rng.gen_range(1i64..=12);
        let scaled = QuaternionAlgebra::new(alg.a() * s * s, alg.b()).unwrap();
        ensure(scaled.ramification_set() == alg.ramification_set(), || {
            format!("case {n}: Ram changes under a -> a*{s}^2 for {alg}")
        })?;
    }
    Ok(format!(
        "{PROPERTY_CASES} cases each: Cayley-Hamilton, norm multiplicativity, x*conj(x), \
         bimultiplicativity, symmetry, Steinberg, square-class invariance"
    ))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Check); 9] = [
        ("AC1 split-order enumeration oracle", ac1_split_order_oracle),
        ("AC2 Hilbert symbol oracle equivalence", ac2_hilbert_oracle),
        ("AC3 reciprocity and parity", ac3_reciprocity_parity),
        ("AC4 prime-discriminant classification", ac4_classification),
        ("AC5 class numbers", ac5_class_numbers),
        ("AC6 cusp pipeline and towers", ac6_cusp_pipeline),
        ("AC7 cohomology identities", ac7_cohomology),
        ("AC8 order suite", ac8_orders),
        ("AC9 property suites", ac9_properties),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        let t = Instant::now();
        match check() {
            Ok(detail) => println!("PASS  {name}: {detail} [{:.2?}]", t.elapsed()),
            Err(why) => {
                failed += 1;
                println!("FAIL  {name}: {why} [{:.2?}]", t.elapsed());
            }
        }
    }
    println!("{} of {} acceptance criteria passed", 9 - failed, 9);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
