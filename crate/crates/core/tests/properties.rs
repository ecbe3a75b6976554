//! Randomized algebraic laws for the field, the ring and the CRT split.

use cubicode::code::{brute_weight_distribution, CodeSpec, EnumOptions};
use cubicode::gf2m::FieldContext;
use cubicode::ring::{RingContext, RingElement};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};

fn field_and_triple() -> impl Strategy<Value = (FieldContext, u32, u32, u32)> {
    (1u32..=8).prop_flat_map(|m| {
        let f = FieldContext::new(m, None).unwrap();
        let n = f.size();
        (Just(f), 0..n, 0..n, 0..n)
    })
}

fn ring_element(r: &RingContext) -> impl Strategy<Value = RingElement> {
    let n = r.field().size();
    (0..n, 0..n, 0..n).prop_map(|(a, b, c)| RingElement::new(a, b, c))
}

fn ring_and_triple(
    max_m: u32,
) -> impl Strategy<Value = (RingContext, RingElement, RingElement, RingElement)> {
    (1..=max_m).prop_flat_map(|m| {
        let r = RingContext::from_degree(m, None).unwrap();
        (
            Just(r),
            ring_element(&r),
            ring_element(&r),
            ring_element(&r),
        )
    })
}

proptest! {
    #[test]
    fn field_axioms((f, a, b, c) in field_and_triple()) {
        prop_assert_eq!(f.mul(a, b), f.mul(b, a));
        prop_assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
        prop_assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
        prop_assert_eq!(f.add(f.add(a, b), b), a);
    }

    #[test]
    fn frobenius_is_field_automorphism((f, a, b, _c) in field_and_triple()) {
        prop_assert_eq!(f.square(f.add(a, b)), f.add(f.square(a), f.square(b)));
        prop_assert_eq!(f.square(f.mul(a, b)), f.mul(f.square(a), f.square(b)));
        prop_assert_eq!(f.trace(a ^ b), f.trace(a) ^ f.trace(b));
    }

    #[test]
    fn ring_laws((r, a, b, c) in ring_and_triple(4)) {
        prop_assert_eq!(r.mul(a, b), r.mul(b, a));
        prop_assert_eq!(r.mul(r.mul(a, b), c), r.mul(a, r.mul(b, c)));
        prop_assert_eq!(r.mul(a, b + c), r.mul(a, b) + r.mul(a, c));
    }

    #[test]
    fn crt_is_ring_isomorphism((r, a, b, _c) in ring_and_triple(5)) {
        prop_assert_eq!(r.crt_compose(r.crt_decompose(a)), a);
        prop_assert_eq!(
            r.crt_decompose(r.mul(a, b)),
            r.crt_mul(r.crt_decompose(a), r.crt_decompose(b))
        );
    }

    #[test]
    fn ring_frobenius_and_trace((r, a, b, _c) in ring_and_triple(5)) {
        prop_assert_eq!(r.frobenius(r.mul(a, b)), r.mul(r.frobenius(a), r.frobenius(b)));
        prop_assert_eq!(r.trace(a), r.trace_by_frobenius(a));
        prop_assert!(r.trace(a).in_base_ring());
        let mut it = a;
        for _ in 0..r.degree() {
            it = r.frobenius(it);
        }
        prop_assert_eq!(it, a);
    }
}

#[test]
fn character_sums_vanish_exhaustively() {
    for m in 1..=8 {
        let f = FieldContext::new(m, None).unwrap();
        assert_eq!(f.char_sum(0), 1 << m);
        for z in 1..f.size() {
            assert_eq!(f.char_sum(z), 0, "m={m} z={z}");
        }
    }
}

#[test]
fn hamming_weight_from_character_sum() {
    let mut rng = rand::rngs::StdRng::seed_from_u64(7);
    for _ in 0..500 {
        let n = rng.gen_range(1..=64);
        let y: Vec<bool> = (0..n).map(|_| rng.gen()).collect();
        let wh = y.iter().filter(|&&b| b).count() as i64;
        let sum: i64 = y.iter().map(|&b| if b { -1 } else { 1 }).sum();
        assert_eq!(2 * wh, n as i64 - sum);
    }
}

#[test]
fn crt_round_trip_randomized_to_m5() {
    let mut rng = rand::rngs::StdRng::seed_from_u64(11);
    for m in 1..=5 {
        let r = RingContext::from_degree(m, None).unwrap();
        for _ in 0..1000 {
            let a = r.element_at(rng.gen_range(0..r.size()));
            assert_eq!(r.crt_compose(r.crt_decompose(a)), a);
        }
    }
}

#[test]
fn distribution_independent_of_worker_count() {
    let spec = CodeSpec::from_degree(4, None).unwrap();
    let run = |threads| {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .unwrap()
            .install(|| brute_weight_distribution(&spec, EnumOptions::default()).unwrap())
    };
    assert_eq!(run(1), run(4));
}
