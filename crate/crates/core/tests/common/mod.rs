#![allow(dead_code)]

use isodisc::BinaryMatrix;
use rand::seq::SliceRandom;
use rand::Rng;

pub fn example1_a() -> BinaryMatrix {
    BinaryMatrix::from_rows(&[
        [1, 0, 1, 1],
        [1, 0, 1, 1],
        [1, 1, 0, 1],
        [1, 1, 0, 0],
        [1, 1, 0, 0],
        [1, 0, 1, 0],
    ])
    .unwrap()
}

pub fn example1_b() -> BinaryMatrix {
    BinaryMatrix::from_rows(&[
        [1, 0, 1, 1],
        [1, 0, 1, 1],
        [1, 1, 1, 0],
        [1, 1, 0, 0],
        [1, 1, 0, 0],
        [1, 0, 0, 1],
    ])
    .unwrap()
}

pub fn example2_m() -> BinaryMatrix {
    BinaryMatrix::from_rows(&[
        [1, 0, 1, 1],
        [1, 1, 1, 0],
        [1, 1, 0, 1],
        [1, 1, 0, 0],
        [1, 0, 0, 1],
        [1, 0, 1, 0],
    ])
    .unwrap()
}

pub fn example3() -> BinaryMatrix {
    BinaryMatrix::from_rows(&[[1, 1, 0, 1, 0], [0, 1, 1, 0, 0], [1, 0, 0, 0, 1]]).unwrap()
}

/// Random matrix with a density drawn per instance, so sparse, dense and
/// the all-0 / all-1 extremes all show up.
pub fn random_matrix<R: Rng>(rng: &mut R, m: usize, n: usize) -> BinaryMatrix {
    let density = match rng.gen_range(0..10) {
        0 => 0.0,
        1 => 1.0,
        _ => rng.gen_range(0.05..0.95),
    };
    let data = (0..m * n).map(|_| rng.gen_bool(density) as u8).collect();
    BinaryMatrix::new(m, n, data).unwrap()
}

pub fn random_permutation<R: Rng>(rng: &mut R, n: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(rng);
    p
}

/// Random permutation that only mixes positions sharing the same key.
pub fn random_within_groups<R: Rng>(rng: &mut R, keys: &[usize]) -> Vec<usize> {
    let mut p: Vec<usize> = (0..keys.len()).collect();
    let mut values: Vec<usize> = keys.to_vec();
    values.sort_unstable();
    values.dedup();
    for v in values {
        let idx: Vec<usize> = (0..keys.len()).filter(|&i| keys[i] == v).collect();
        let mut shuffled = idx.clone();
        shuffled.shuffle(rng);
        for (&dst, &src) in idx.iter().zip(&shuffled) {
            p[dst] = src;
        }
    }
    p
}
