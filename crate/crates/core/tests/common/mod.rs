#![allow(dead_code)]

use num_bigint::BigInt;
use origami_monodromy::algebra::{IntMatrix, IntPoly};
use origami_monodromy::origami::Origami;
use origami_monodromy::perm::Permutation;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn random_perm(n: usize, r: &mut ChaCha8Rng) -> Permutation {
    let mut img: Vec<usize> = (1..=n).collect();
    img.shuffle(r);
    Permutation::new(img).unwrap()
}

/// A connected origami with between 1 and `max_n` squares.
pub fn random_origami(max_n: usize, r: &mut ChaCha8Rng) -> Origami {
    loop {
        let n = r.gen_range(1..=max_n);
        let o = Origami::new(random_perm(n, r), random_perm(n, r)).unwrap();
        if o.is_connected() {
            return o;
        }
    }
}

/// Entry c0 + cN·N + cM·M of a matrix printed with symbolic N and M.
pub type Lin = (i64, i64, i64);

pub fn eval_lin(rows: &[Vec<Lin>], n: i64, m: i64) -> IntMatrix {
    IntMatrix::from_i64_rows(
        &rows.iter().map(|r| r.iter().map(|&(c, a, b)| c + a * n + b * m).collect()).collect::<Vec<_>>(),
    )
}

/// Shorthand for building tables of `Lin` from constants.
pub fn k(c: i64) -> Lin {
    (c, 0, 0)
}

pub fn ints(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

/// n-th cyclotomic polynomial by exact division.
pub fn cyclotomic(n: usize) -> IntPoly {
    let mut f = &IntPoly::monomial(BigInt::from(1), n) - &IntPoly::one();
    for d in 1..n {
        if n % d == 0 {
            f = f.div_exact(&cyclotomic(d)).unwrap();
        }
    }
    f
}

/// Multiplicative order of p modulo n.
pub fn order_mod(p: u64, n: u64) -> usize {
    let mut x = p % n;
    let mut k = 1;
    while x != 1 {
        x = x * p % n;
        k += 1;
    }
    k
}

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}
