//! Sign exponents of the comultiplications, indexed by `I = ((p_1,q_1),…,(p_j,q_j))`.
//!
//! All exponents are only meaningful mod 2.

use crate::exact::{Bidegree, Sign};

/// Bidegree of the suspension symbol used by the cooperadic suspension.
pub const SUSPENSION: Bidegree = Bidegree::new(0, -1);

fn pairs(j: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..j).flat_map(move |k| (k + 1..j).map(move |l| (k, l)))
}

/// `Σ_{k<l} p_k + q_k(p_l + q_l + 1)`.
pub fn x_sign(p: &[usize], q: &[usize]) -> i64 {
    pairs(p.len())
        .map(|(k, l)| p[k] + q[k] * (p[l] + q[l] + 1))
        .sum::<usize>() as i64
}

/// `Σ_{k=1}^{j−1} (p_k + q_k + 1)(k + j) + Σ_{k<l} q_k p_l`, with 1-based `k`.
pub fn x_prime(p: &[usize], q: &[usize]) -> i64 {
    let j = p.len();
    let first: usize = (0..j.saturating_sub(1))
        .map(|k| (p[k] + q[k] + 1) * (k + 1 + j))
        .sum();
    let second: usize = pairs(j).map(|(k, l)| q[k] * p[l]).sum();
    (first + second) as i64
}

/// `Σ_{k=1}^{j−1} k + Σ_{k<l} q_k q_l`: the sign relating the two `μ` conventions termwise.
pub fn phi(q: &[usize]) -> i64 {
    let j = q.len();
    let first = j * j.saturating_sub(1) / 2;
    let second: usize = pairs(j).map(|(k, l)| q[k] * q[l]).sum();
    (first + second) as i64
}

/// `i(v + j) + Σ_{k<l} (p_k q_l + q_k p_l)`.
pub fn alpha_exponent(i: usize, v: usize, p: &[usize], q: &[usize]) -> i64 {
    let j = p.len();
    let cross: usize = pairs(j).map(|(k, l)| p[k] * q[l] + q[k] * p[l]).sum();
    (i * (v + j) + cross) as i64
}

/// Sign of `s^{1−n}c ↦ s^{1−j}c′; s^{1−l_1}c″_1, …, s^{1−l_j}c″_j` for a decomposition `c′; c″_1..c″_j`.
///
/// `inners` holds `(l_k, |c″_k|)`. The exponent is
/// `Σ_k |s^{l_k+1}|·|s^{1−j}c′| + Σ_{l<k} |s^{l_k+1}|·|s c″_l|`.
pub fn lambda_suspension_sign(outer: Bidegree, inners: &[(usize, Bidegree)]) -> Sign {
    let j = inners.len() as i64;
    let shifted_outer = outer + SUSPENSION.scale(1 - j);
    let mut e = 0;
    let mut passed = Bidegree::ZERO;
    for &(l, c) in inners {
        let moving = SUSPENSION.scale(l as i64 + 1);
        e += moving.pairing(shifted_outer) + moving.pairing(passed);
        passed += c + SUSPENSION;
    }
    Sign::from_parity(e)
}
