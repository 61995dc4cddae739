//! Finite number theory used as ground truth: primality for machine words,
//! a twin-prime sieve, and the finite stand-in `lcm(1..B)²` for a number
//! divisible by every finite integer.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::OracleError;

const MR_BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic primality for the whole `u64` range: strong probable-prime
/// tests to the first twelve prime bases, which have no common pseudoprime
/// below 3.3·10^24.
pub fn is_prime_small(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &MR_BASES {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'bases: for &a in &MR_BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'bases;
            }
        }
        return false;
    }
    true
}

/// Smallest prime factor of `n >= 2` by trial division.
pub fn smallest_factor(n: u64) -> u64 {
    if n.is_multiple_of(2) {
        return 2;
    }
    let mut d = 3;
    while d <= n / d {
        if n.is_multiple_of(d) {
            return d;
        }
        d += 2;
    }
    n
}

/// Sieve of Eratosthenes; `flags[i]` is true iff `i` is prime.
pub fn sieve(limit: usize) -> Vec<bool> {
    let mut flags = vec![true; limit + 1];
    for f in flags.iter_mut().take(2.min(limit + 1)) {
        *f = false;
    }
    let mut i = 2;
    while i * i <= limit {
        if flags[i] {
            for j in (i * i..=limit).step_by(i) {
                flags[j] = false;
            }
        }
        i += 1;
    }
    flags
}

pub fn primes_up_to(limit: u64) -> Vec<u64> {
    sieve(limit as usize)
        .iter()
        .enumerate()
        .filter(|(_, &p)| p)
        .map(|(i, _)| i as u64)
        .collect()
}

/// All `(p, p + 2)` with both prime and `p + 2 <= limit`, ascending.
pub fn twin_sieve(limit: u64) -> Vec<(u64, u64)> {
    let flags = sieve(limit as usize);
    (2..flags.len().saturating_sub(2))
        .filter(|&i| flags[i] && flags[i + 2])
        .map(|i| (i as u64, i as u64 + 2))
        .collect()
}

/// Least common multiple of `1..=bound`.
pub fn lcm_up_to(bound: u64) -> BigUint {
    (1..=bound).fold(BigUint::one(), |acc, k| acc.lcm(&BigUint::from(k)))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnalogueCase {
    pub m: u64,
    /// Whether `p^(2m+1)` divides the stand-in.
    pub divisible: bool,
    pub passed: bool,
    /// A prime `<= B` dividing one of the tested neighbours.
    pub offending_prime: Option<u64>,
    /// `-1` or `+1`: which neighbour the offending prime divides.
    pub offending_offset: Option<i8>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnalogueReport {
    pub bound: u64,
    pub stand_in: BigUint,
    pub p: u64,
    pub m_max: u64,
    pub cases: Vec<AnalogueCase>,
}

impl AnalogueReport {
    pub fn all_passed(&self) -> bool {
        self.cases.iter().all(|c| c.passed)
    }

    /// `N / p^(2m+1) + offset`, when the division is exact.
    pub fn tested_value(&self, m: u64, offset: i8) -> Option<BigUint> {
        let divisor = BigUint::from(self.p).pow(2 * m as u32 + 1);
        let (x, r) = self.stand_in.div_rem(&divisor);
        if !r.is_zero() {
            return None;
        }
        Some(if offset < 0 { x - 1u32 } else { x + 1u32 })
    }
}

/// Finite mirror of "λ/p^(2m+1) ± 1 has no nontrivial finite divisor": with
/// `N = lcm(1..B)²`, checks for each `m` in `0..=m_max` that `p^(2m+1) | N`
/// and that `N/p^(2m+1) ± 1` has no prime factor `<= B`.
pub fn finite_analogue_check(
    bound: u64,
    p: u64,
    m_max: u64,
) -> Result<AnalogueReport, OracleError> {
    if bound == 0 {
        return Err(OracleError::ZeroBound);
    }
    if !is_prime_small(p) {
        return Err(OracleError::NotPrimeParameter(p));
    }
    if p > bound {
        return Err(OracleError::PrimeExceedsBound { p, bound });
    }
    let l = lcm_up_to(bound);
    let stand_in = &l * &l;
    let small_primes = primes_up_to(bound);
    let cases = (0..=m_max)
        .map(|m| {
            let divisor = BigUint::from(p).pow(2 * m as u32 + 1);
            let (x, r) = stand_in.div_rem(&divisor);
            if !r.is_zero() {
                return AnalogueCase {
                    m,
                    divisible: false,
                    passed: false,
                    offending_prime: None,
                    offending_offset: None,
                };
            }
            let below = &x - 1u32;
            let above = &x + 1u32;
            let hit = small_primes.iter().find_map(|&q| {
                let q_big = BigUint::from(q);
                if (&below % &q_big).is_zero() {
                    Some((q, -1))
                } else if (&above % &q_big).is_zero() {
                    Some((q, 1))
                } else {
                    None
                }
            });
            AnalogueCase {
                m,
                divisible: true,
                passed: hit.is_none(),
                offending_prime: hit.map(|h| h.0),
                offending_offset: hit.map(|h| h.1),
            }
        })
        .collect();
    Ok(AnalogueReport {
        bound,
        stand_in,
        p,
        m_max,
        cases,
    })
}
