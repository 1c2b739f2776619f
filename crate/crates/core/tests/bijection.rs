use std::collections::HashMap;

use num_bigint::BigUint;
use subsums_core::bijection::{forward, inverse};
use subsums_core::exact::f_row;
use subsums_core::oracle::{enumerate, even_index_sum};
use subsums_core::Partition;

#[test]
fn inverse_undoes_forward() {
    for n in 0..=20 {
        for lambda in enumerate(n) {
            let img = forward(&lambda);
            assert_eq!(img.j, even_index_sum(&lambda));
            assert_eq!(inverse(&img.alpha, &img.beta, n).unwrap(), lambda);
        }
    }
}

fn pairs(n: usize, j: usize) -> Vec<(Partition, Partition)> {
    let mut out = Vec::new();
    for t in 0..=j {
        for alpha in enumerate(t) {
            for beta in enumerate(j - t) {
                if beta.len() + 2 * j <= n {
                    out.push((alpha.clone(), beta));
                }
            }
        }
    }
    out
}

#[test]
fn forward_undoes_inverse_and_counts_match() {
    for n in 0..=18 {
        let row = f_row(n);
        for (j, expected) in row.iter().enumerate().take(n / 2 + 1) {
            let all = pairs(n, j);
            assert_eq!(BigUint::from(all.len()), *expected, "n={n} j={j}");
            for (alpha, beta) in all {
                let lambda = inverse(&alpha, &beta, n).unwrap();
                assert_eq!(lambda.weight(), n);
                assert_eq!(even_index_sum(&lambda), j);
                let img = forward(&lambda);
                assert_eq!((img.alpha, img.beta), (alpha, beta));
            }
        }
    }
}

#[test]
fn images_are_distinct() {
    let n = 16;
    let mut seen = HashMap::new();
    for lambda in enumerate(n) {
        let img = forward(&lambda);
        assert!(seen.insert((img.alpha, img.beta), lambda).is_none());
    }
}
