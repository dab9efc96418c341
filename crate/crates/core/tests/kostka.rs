use birkhoff_core::exactq::binomial;
use birkhoff_core::partitions::{
    enumerate_partitions, kostka_belly, kostka_hook, realize_belly, standard_count, BellyShape,
    Partition,
};
use birkhoff_oracles as oracle;
use num_bigint::{BigInt, BigUint};

/// `(belly, n)` with `|belly| <= 4`, `k <= 5`, `n <= 16`.
fn grid() -> Vec<(BellyShape, usize)> {
    let mut out = Vec::new();
    for size in 0..=4 {
        for beta in enumerate_partitions(size) {
            for k in beta.height().max(1)..=5 {
                let b = BellyShape::new(k, beta.clone()).unwrap();
                for n in b.min_n()..=16 {
                    out.push((b.clone(), n));
                }
            }
        }
    }
    out
}

fn hook(n: usize, m: usize) -> Vec<usize> {
    Partition::hook(n, m).parts().to_vec()
}

#[test]
fn closed_form_matches_semistandard_counts() {
    let mut checked = 0;
    for (b, n) in grid() {
        let shape = realize_belly(&b, n).unwrap();
        for m in (2..=8).step_by(2) {
            if m + b.belly().first() + 1 > n {
                assert!(kostka_belly(&b, m, n).is_err());
                continue;
            }
            let closed = kostka_belly(&b, m, n).unwrap();
            assert_eq!(closed, kostka_hook(&shape, m), "{b:?} n={n} m={m}");
            let brute = oracle::kostka(shape.parts(), &hook(n, m));
            assert_eq!(closed, BigUint::from(brute), "{b:?} n={n} m={m}");
            if n <= 10 {
                assert_eq!(oracle::kostka_enumerate(shape.parts(), &hook(n, m)), brute);
            }
            checked += 1;
        }
    }
    assert!(checked > 1000);
}

#[test]
fn all_but_one_label_bounds_below() {
    for (b, n) in grid() {
        let s = b.belly().size();
        let shape = realize_belly(&b, n).unwrap();
        let value = kostka_hook(&shape, n - 1);
        // m = n - 1 is the standard-tableau count
        assert_eq!(value, standard_count(&shape));
        let bound = binomial((n - s - 1) as u64, (b.k() + s) as u64)
            * BigInt::from(standard_count(b.belly()));
        assert!(BigInt::from(value) >= bound, "{b:?} n={n}");
    }
}
