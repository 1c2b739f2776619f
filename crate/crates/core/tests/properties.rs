use num_rational::BigRational;
use proptest::prelude::*;
use subsums_core::asymptotics::{gamma_mh_roots, BernoulliCache, DoubleDouble, Real};
use subsums_core::bijection::{forward, inverse};
use subsums_core::exact::{DivisorSumTables, PartitionCountTable};
use subsums_core::oracle::{even_index_sum, x_statistic};
use subsums_core::{canonical_residue, Partition};

fn partition() -> impl Strategy<Value = Partition> {
    prop::collection::vec(1usize..40, 0..30).prop_map(|mut parts| {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(parts).unwrap()
    })
}

proptest! {
    #[test]
    fn statistic_sums_to_weight(lambda in partition(), m in 1usize..10) {
        let total: usize = (1..=m).map(|i| x_statistic(&lambda, m, i).unwrap()).sum();
        prop_assert_eq!(total, lambda.weight());
    }

    #[test]
    fn statistic_from_conjugate_columns(lambda in partition(), m in 1usize..8, i_seed in 0usize..8) {
        let i = i_seed % m + 1;
        let via_columns: usize = lambda
            .conjugate()
            .parts()
            .iter()
            .map(|&s| (s + m - i) / m)
            .sum();
        prop_assert_eq!(via_columns, x_statistic(&lambda, m, i).unwrap());
    }

    #[test]
    fn bijection_roundtrip(lambda in partition()) {
        let img = forward(&lambda);
        prop_assert_eq!(img.j, even_index_sum(&lambda));
        prop_assert!(2 * img.j + img.beta.len() <= lambda.weight());
        prop_assert_eq!(inverse(&img.alpha, &img.beta, lambda.weight()).unwrap(), lambda);
    }

    #[test]
    fn conjugation_is_an_involution(lambda in partition()) {
        prop_assert_eq!(lambda.conjugate().conjugate(), lambda.clone());
        prop_assert_eq!(lambda.conjugate().weight(), lambda.weight());
    }

    #[test]
    fn residues_are_canonical(x in -1000i64..1000, m in 1usize..30) {
        let r = canonical_residue(x, m);
        prop_assert!((1..=m).contains(&r));
        prop_assert_eq!((x - r as i64).rem_euclid(m as i64), 0);
    }

    #[test]
    fn tau_mod_partitions_tau(k in 1usize..2000, m in 1usize..10) {
        let div = DivisorSumTables::build(2000, m, 1).unwrap();
        let sum: u32 = (1..=m).map(|h| div.tau_mod(h, k)).sum();
        prop_assert_eq!(sum, div.tau(k));
    }

    #[test]
    fn gamma_sum_rule(m in 1usize..40) {
        let mut sum = DoubleDouble::zero();
        for h in 1..=m {
            sum += gamma_mh_roots::<DoubleDouble>(m, h).unwrap();
        }
        prop_assert!(sum.abs().to_f64() < 1e-25);
    }

    #[test]
    fn bernoulli_translation(n in 1usize..25, num in 0i64..50, den in 1i64..50) {
        let cache = BernoulliCache::new(25);
        let x = BigRational::new(num.into(), den.into());
        let one = BigRational::from_integer(1.into());
        let diff = cache.poly_rational(n, &(&x + &one)).unwrap() - cache.poly_rational(n, &x).unwrap();
        let want = BigRational::from_integer(n.into()) * num_traits::pow(x, n - 1);
        prop_assert_eq!(diff, want);
    }

    #[test]
    fn cache_roundtrip(max_n in 0usize..300) {
        let table = PartitionCountTable::build(max_n);
        let mut buf = Vec::new();
        table.write_cache(&mut buf).unwrap();
        let back = PartitionCountTable::read_cache(buf.as_slice()).unwrap();
        prop_assert_eq!(back.values(), table.values());
    }
}
