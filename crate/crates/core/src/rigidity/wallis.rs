//! Exact finite Wallis products `W_m = ∏_{k=1}^{m} (2k)² / ((2k−1)(2k+1))`.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::{BigRational, Ratio};
use num_traits::{One, ToPrimitive};

use super::exact::ratio_to_f64;
use crate::error::{Error, Result};
use crate::spherical::QuantumIndex;

/// Largest `m` accepted by the exact routes unless a caller raises it.
pub const DEFAULT_EXACT_M_CAP: u64 = 100_000;

/// The `k`-th Wallis factor `4k² / (4k² − 1)`, already in lowest terms.
pub fn wallis_factor(k: u64) -> Ratio<u64> {
    let even = 2 * k;
    Ratio::new_raw(even * even, (even - 1) * (even + 1))
}

/// Exact `W_m` in lowest terms together with its factor list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WallisPartial {
    pub m: QuantumIndex,
    pub numerator: BigUint,
    pub denominator: BigUint,
    pub factors: Vec<Ratio<u64>>,
}

impl WallisPartial {
    pub fn value(&self) -> BigRational {
        BigRational::new_raw(
            BigInt::from(self.numerator.clone()),
            BigInt::from(self.denominator.clone()),
        )
    }

    /// Nearest double to `W_m`.
    pub fn to_f64(&self) -> f64 {
        ratio_to_f64(&self.numerator, &self.denominator)
    }
}

pub fn wallis_partial(m: QuantumIndex) -> Result<WallisPartial> {
    wallis_partial_capped(m, DEFAULT_EXACT_M_CAP)
}

/// `W_m = 2^{4m} (m!)⁴ / ((2m)!² (2m+1))`, assembled prime by prime from
/// Legendre's formula so the result comes out already reduced.
pub fn wallis_partial_capped(m: QuantumIndex, cap: u64) -> Result<WallisPartial> {
    check_cap(m, cap)?;
    let m_val = m.get();
    let top = 2 * m_val + 1;

    let mut up = Vec::new();
    let mut down = Vec::new();
    for p in primes_up_to(top) {
        let mut exponent = 4 * factorial_valuation(m_val, p) as i64
            - 2 * factorial_valuation(2 * m_val, p) as i64
            - valuation(top, p) as i64;
        if p == 2 {
            exponent += 4 * m_val as i64;
        }
        let power = BigUint::from(p).pow(exponent.unsigned_abs() as u32);
        match exponent.signum() {
            1 => up.push(power),
            -1 => down.push(power),
            _ => {}
        }
    }

    Ok(WallisPartial {
        m,
        numerator: product_tree(up),
        denominator: product_tree(down),
        factors: (1..=m_val).map(wallis_factor).collect(),
    })
}

pub(crate) fn check_cap(m: QuantumIndex, cap: u64) -> Result<()> {
    if m.get() > cap {
        Err(Error::Resource(format!(
            "exact Wallis product requested for m = {m}, above the cap of {cap}"
        )))
    } else {
        Ok(())
    }
}

/// Successive reduced `W_0, W_1, W_2, …`, each obtained from the previous one
/// by a single factor with gcd reduction against word-sized integers only.
#[derive(Debug, Clone)]
pub struct WallisSequence {
    next_k: u64,
    numerator: BigUint,
    denominator: BigUint,
}

impl Default for WallisSequence {
    fn default() -> Self {
        Self::new()
    }
}

impl WallisSequence {
    pub fn new() -> Self {
        Self {
            next_k: 0,
            numerator: BigUint::one(),
            denominator: BigUint::one(),
        }
    }
}

impl Iterator for WallisSequence {
    /// `(m, numerator, denominator)` of `W_m`.
    type Item = (u64, BigUint, BigUint);

    fn next(&mut self) -> Option<Self::Item> {
        let k = self.next_k;
        if k > 0 {
            let f = wallis_factor(k);
            let (p, q) = (*f.numer(), *f.denom());
            let g_num = (&self.numerator % q).to_u64().expect("residue below q").gcd(&q);
            let g_den = (&self.denominator % p).to_u64().expect("residue below p").gcd(&p);
            self.numerator = &self.numerator / g_num * (p / g_den);
            self.denominator = &self.denominator / g_den * (q / g_num);
        }
        self.next_k += 1;
        Some((k, self.numerator.clone(), self.denominator.clone()))
    }
}

fn primes_up_to(n: u64) -> Vec<u64> {
    let n = n as usize;
    if n < 2 {
        return Vec::new();
    }
    let mut composite = vec![false; n + 1];
    let mut primes = Vec::new();
    for i in 2..=n {
        if !composite[i] {
            primes.push(i as u64);
            let mut j = i * i;
            while j <= n {
                composite[j] = true;
                j += i;
            }
        }
    }
    primes
}

/// Exponent of prime `p` in `n!`.
fn factorial_valuation(n: u64, p: u64) -> u64 {
    let mut total = 0;
    let mut q = n / p;
    while q > 0 {
        total += q;
        q /= p;
    }
    total
}

/// Exponent of prime `p` in `n > 0`.
fn valuation(mut n: u64, p: u64) -> u64 {
    let mut e = 0;
    while n % p == 0 {
        n /= p;
        e += 1;
    }
    e
}

fn product_tree(mut items: Vec<BigUint>) -> BigUint {
    if items.is_empty() {
        return BigUint::one();
    }
    while items.len() > 1 {
        items = items
            .chunks(2)
            .map(|pair| match pair {
                [a, b] => a * b,
                [a] => a.clone(),
                _ => unreachable!(),
            })
            .collect();
    }
    items.pop().expect("non-empty")
}
