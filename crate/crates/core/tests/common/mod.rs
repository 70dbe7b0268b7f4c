#![allow(dead_code)]

use complex_moments::{Complex64, ComplexSequence};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// Uniform in the closed disk of the given radius.
pub fn disk(rng: &mut ChaCha8Rng, radius: f64) -> Complex64 {
    let r = radius * rng.gen::<f64>().sqrt();
    Complex64::from_polar(r, rng.gen_range(-std::f64::consts::PI..std::f64::consts::PI))
}

/// `m_0 = 1` followed by `n_max` entries drawn from the disk.
pub fn random_moments(rng: &mut ChaCha8Rng, n_max: usize, radius: f64) -> ComplexSequence {
    let mut v = vec![c(1.0, 0.0)];
    v.extend((0..n_max).map(|_| disk(rng, radius)));
    ComplexSequence::moments(v)
}

pub fn random_values(rng: &mut ChaCha8Rng, len: usize, radius: f64) -> Vec<Complex64> {
    (0..len).map(|_| disk(rng, radius)).collect()
}

/// `max_n |x_n - y_n| / ρ^n`, `ρ = max(1, max_k |y_k|^(1/k))`, with `n`
/// counted from `first`.
pub fn scaled_error(x: &[Complex64], y: &[Complex64], first: usize) -> f64 {
    let rho = y
        .iter()
        .enumerate()
        .map(|(i, v)| (i + first, v))
        .filter(|&(n, _)| n > 0)
        .map(|(n, v)| v.norm().powf(1.0 / n as f64))
        .fold(1.0, f64::max);
    x.iter()
        .zip(y)
        .enumerate()
        .map(|(i, (a, b))| (a - b).norm() / rho.powi((i + first) as i32))
        .fold(0.0, f64::max)
}

pub fn max_diff(x: &[Complex64], y: &[Complex64]) -> f64 {
    assert_eq!(x.len(), y.len());
    x.iter().zip(y).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max)
}

/// Set partitions of `{1..n}` by inserting `n` into each block of a
/// partition of `{1..n-1}` or into a new block.
pub fn brute_partitions(n: usize) -> Vec<Vec<Vec<usize>>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in brute_partitions(n - 1) {
        for i in 0..p.len() {
            let mut q = p.clone();
            q[i].push(n);
            out.push(q);
        }
        let mut q = p.clone();
        q.push(vec![n]);
        out.push(q);
    }
    out
}

pub fn crosses(p: &[Vec<usize>]) -> bool {
    for (i, v) in p.iter().enumerate() {
        for (j, w) in p.iter().enumerate() {
            if i == j {
                continue;
            }
            for &a in v {
                for &b in w {
                    for &cc in v {
                        for &d in w {
                            if a < b && b < cc && cc < d {
                                return true;
                            }
                        }
                    }
                }
            }
        }
    }
    false
}

/// `inner` sits strictly between two elements of `outer`.
pub fn nested(inner: &[usize], outer: &[usize]) -> bool {
    inner.iter().all(|&x| outer.iter().any(|&a| a < x) && outer.iter().any(|&b| b > x))
}

pub fn permutations(k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(k - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, k);
            out.push(q);
        }
    }
    out
}

/// Monotone partitions as (blocks, labels) pairs, by filtering every
/// labelling of every non-crossing partition.
pub fn brute_monotone(n: usize) -> Vec<(Vec<Vec<usize>>, Vec<usize>)> {
    let mut out = Vec::new();
    for p in brute_partitions(n).into_iter().filter(|p| !crosses(p)) {
        for labels in permutations(p.len()) {
            let ok = (0..p.len())
                .all(|v| (0..p.len()).all(|w| v == w || !nested(&p[v], &p[w]) || labels[v] > labels[w]));
            if ok {
                out.push((p.clone(), labels));
            }
        }
    }
    out
}

pub fn factorial(n: usize) -> f64 {
    (1..=n).map(|k| k as f64).product()
}
