use birkhoff_core::characters::{centralizer_size, character_table, limit_coeff, mn_character};
use birkhoff_core::partitions::{
    enumerate_partitions, realize_belly, standard_count, BellyShape, Partition,
};
use num_bigint::BigInt;

/// Every `(belly, k, n, l)` with `|belly| <= 5`, `l <= 4`, `n <= 16` and a realizable shape.
fn grid() -> Vec<(BellyShape, usize, usize)> {
    let mut out = Vec::new();
    for size in 0..=5 {
        for beta in enumerate_partitions(size) {
            for k in beta.height().max(1)..=16 {
                let b = BellyShape::new(k, beta.clone()).unwrap();
                for n in b.min_n()..=16 {
                    for l in 0..=4.min(n - 1) {
                        out.push((b.clone(), n, l));
                    }
                }
            }
        }
    }
    out
}

fn value(b: &BellyShape, n: usize, l: usize) -> i128 {
    let shape = realize_belly(b, n).unwrap();
    mn_character(&shape, &Partition::cycle_with_fixed_points(n, l)).unwrap()
}

#[test]
fn column_orthogonality_up_to_eight() {
    for n in 1..=8 {
        let t = character_table(n).unwrap();
        for (i, mu) in t.shapes.iter().enumerate() {
            for j in 0..t.shapes.len() {
                let s: i128 = t.values.iter().map(|row| row[i] * row[j]).sum();
                let expect = if i == j {
                    centralizer_size(mu)
                } else {
                    BigInt::from(0)
                };
                assert_eq!(BigInt::from(s), expect);
            }
        }
    }
}

#[test]
fn identity_column_is_dimension() {
    for n in 1..=10 {
        for l in enumerate_partitions(n) {
            let v = mn_character(&l, &Partition::column(n)).unwrap();
            assert_eq!(BigInt::from(v), BigInt::from(standard_count(&l)));
        }
    }
}

#[test]
fn transpose_twists_by_sign() {
    for n in 1..=8 {
        let t = character_table(n).unwrap();
        for (i, l) in t.shapes.iter().enumerate() {
            let lt = t.index_of(&l.transpose()).unwrap();
            for (j, mu) in t.shapes.iter().enumerate() {
                assert_eq!(t.values[lt][j], mu.cycle_sign() as i128 * t.values[i][j]);
            }
        }
    }
}

#[test]
fn large_belly_vanishes() {
    for (b, n, l) in grid() {
        if b.belly().size() > l {
            assert_eq!(value(&b, n, l), 0, "{b:?} n={n} l={l}");
        }
    }
}

#[test]
fn thin_balanced_vanishes() {
    for (b, n, l) in grid() {
        let s = b.belly().size();
        if s < l && 2 * l + 2 <= n && l <= b.k() && b.k() + s + l < n {
            assert_eq!(value(&b, n, l), 0, "{b:?} n={n} l={l}");
        }
    }
}

#[test]
fn exact_belly_gives_signed_dimension() {
    for (b, n, l) in grid() {
        if b.belly().size() == l {
            let sign = if b.k() % 2 == 0 { 1 } else { -1 };
            let expect = BigInt::from(sign) * BigInt::from(standard_count(b.belly()));
            assert_eq!(BigInt::from(value(&b, n, l)), expect, "{b:?} n={n} l={l}");
        }
    }
}

#[test]
fn finite_values_equal_the_limit() {
    for (b, n, l) in grid() {
        if n > b.belly().size() + b.k() + l {
            assert_eq!(
                BigInt::from(value(&b, n, l)),
                limit_coeff(&b, l),
                "{b:?} n={n} l={l}"
            );
        }
    }
}
