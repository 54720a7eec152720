mod common;

use chw_core::io::{decode_binary, encode_binary, encode_text, parse_text};
use chw_core::transforms::{chw_forward, haar_forward, haar_inverse};
use chw_core::{dyadic_to_sequency, natural_to_dyadic, NoTally, OpTally, Permutation, ScalingMode};
use proptest::prelude::*;
use std::path::Path;

const U: ScalingMode = ScalingMode::Unnormalized;
const O: ScalingMode = ScalingMode::Orthonormal;

fn int_signal(max_m: u32) -> impl Strategy<Value = Vec<i64>> {
    (0..=max_m).prop_flat_map(|m| prop::collection::vec(-1_000_000i64..1_000_000, 1usize << m))
}

fn real_signal(max_m: u32) -> impl Strategy<Value = Vec<f64>> {
    (0..=max_m).prop_flat_map(|m| prop::collection::vec(-1e3f64..1e3, 1usize << m))
}

fn permutation() -> impl Strategy<Value = Permutation> {
    (0usize..64)
        .prop_flat_map(|n| Just((0..n).collect::<Vec<_>>()).prop_shuffle())
        .prop_map(|map| Permutation::new(map).unwrap())
}

proptest! {
    #[test]
    fn chw_is_linear(x in int_signal(10), a in -50i64..50, b in -50i64..50, seed in any::<u64>()) {
        let mut rng = common::rng(seed);
        let m = x.len().trailing_zeros();
        let y = common::random_ints(&mut rng, m, 1_000_000);
        let combo: Vec<i64> = x.iter().zip(&y).map(|(p, q)| a * p + b * q).collect();
        let tx = chw_forward(&x, U, &mut NoTally).unwrap();
        let ty = chw_forward(&y, U, &mut NoTally).unwrap();
        let expected: Vec<i64> = tx.iter().zip(&ty).map(|(p, q)| a * p + b * q).collect();
        prop_assert_eq!(chw_forward(&combo, U, &mut NoTally).unwrap(), expected);
    }

    #[test]
    fn chw_counts_are_exact(x in int_signal(12)) {
        let m = x.len().trailing_zeros() as u64;
        let mut t = OpTally::new();
        chw_forward(&x, U, &mut t).unwrap();
        prop_assert_eq!(t.read(), (m << m, 0));
    }

    #[test]
    fn haar_integer_round_trip(x in int_signal(12)) {
        let y = haar_forward(&x, U, &mut NoTally).unwrap();
        prop_assert_eq!(haar_inverse(&y, U).unwrap(), x);
    }

    #[test]
    fn haar_orthonormal_round_trip(x in real_signal(12)) {
        let y = haar_forward(&x, O, &mut NoTally).unwrap();
        let back = haar_inverse(&y, O).unwrap();
        prop_assert!(common::max_abs_diff(&x, &back) <= 1e-12 * 1e3);
    }

    #[test]
    fn parseval(x in real_signal(12)) {
        let y = chw_forward(&x, O, &mut NoTally).unwrap();
        let (nx, ny) = (common::norm(&x), common::norm(&y));
        prop_assert!((nx - ny).abs() <= 1e-10 * nx.max(f64::MIN_POSITIVE));
    }

    #[test]
    fn permutation_group_laws(p in permutation(), seed in any::<u64>()) {
        let x: Vec<u64> = {
            let mut rng = common::rng(seed);
            (0..p.len()).map(|_| rand::Rng::gen(&mut rng)).collect()
        };
        prop_assert_eq!(&p.inverse().inverse(), &p);
        prop_assert_eq!(p.inverse().apply(&p.apply(&x).unwrap()).unwrap(), x);
        prop_assert!(p.then(&p.inverse()).unwrap().is_identity());
    }

    #[test]
    fn text_round_trip(x in prop::collection::vec(any::<f64>().prop_filter("finite", |v| v.is_finite()), 0..256)) {
        let back = parse_text(Path::new("mem"), &encode_text(&x)).unwrap();
        prop_assert_eq!(back.iter().map(|v| v.to_bits()).collect::<Vec<_>>(),
                        x.iter().map(|v| v.to_bits()).collect::<Vec<_>>());
    }

    #[test]
    fn binary_round_trip(x in prop::collection::vec(any::<f64>(), 0..256)) {
        let back = decode_binary(Path::new("mem"), &encode_binary(&x)).unwrap();
        prop_assert_eq!(back.iter().map(|v| v.to_bits()).collect::<Vec<_>>(),
                        x.iter().map(|v| v.to_bits()).collect::<Vec<_>>());
    }
}

#[test]
fn ordering_permutations_are_involutive_where_expected() {
    for m in 0..=12 {
        let p = natural_to_dyadic(m);
        assert!(p.then(&p).unwrap().is_identity());
        let s = dyadic_to_sequency(m);
        assert!(s.then(&s.inverse()).unwrap().is_identity());
    }
}

#[test]
fn io_round_trip_large_signals() {
    let dir = tempfile::tempdir().unwrap();
    let mut rng = common::rng(9);
    for m in [0, 5, 16] {
        let ints: Vec<f64> = common::random_ints(&mut rng, m, 1 << 40)
            .into_iter()
            .map(|v| v as f64)
            .collect();
        let reals = chw_forward(&common::random_reals(&mut rng, m), O, &mut NoTally).unwrap();
        for x in [&ints, &reals] {
            for fmt in [chw_core::SignalFormat::Text, chw_core::SignalFormat::Binary] {
                let p = dir.path().join(format!("sig-{m}"));
                chw_core::write_signal(x, &p, fmt).unwrap();
                let back = chw_core::read_signal(&p, fmt).unwrap();
                assert_eq!(back.as_slice(), x.as_slice());
            }
        }
    }
}
