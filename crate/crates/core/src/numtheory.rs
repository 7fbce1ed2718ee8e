//! Arithmetic substrate: deterministic 64-bit primality, a byte-table sieve
//! with prefix prime counts, Legendre factorial exponents, factored integers,
//! and integer partitions.
//!
//! Group and factorial orders are never expanded to plain integers; every
//! order comparison in the crate goes through [`FactoredInteger`], which keeps
//! numbers like 625! (thousands of digits) as exact prime-exponent maps.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};

/// Largest `m` accepted by [`partitions`].
pub const PARTITION_BOUND: u64 = 64;

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc: u64 = 1;
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

/// Strong-pseudoprime check for one witness. `n` odd, `n - 1 = d * 2^s`.
fn witness_passes(a: u64, n: u64, d: u64, s: u32) -> bool {
    let a = a % n;
    if a == 0 {
        return true;
    }
    let mut x = pow_mod(a, d, n);
    if x == 1 || x == n - 1 {
        return true;
    }
    for _ in 1..s {
        x = mul_mod(x, x, n);
        if x == n - 1 {
            return true;
        }
    }
    false
}

/// Deterministic primality for every 64-bit input.
///
/// Miller-Rabin with the fixed witness set {2, 325, 9375, 28178, 450775,
/// 9780504, 1795265022}, which has no composite strong pseudoprime below
/// 2^64.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n.is_multiple_of(p) {
            return false;
        }
    }
    let d = (n - 1) >> (n - 1).trailing_zeros();
    let s = (n - 1).trailing_zeros();
    [2u64, 325, 9375, 28178, 450775, 9780504, 1795265022]
        .into_iter()
        .all(|a| witness_passes(a, n, d, s))
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        return 0;
    }
    a / gcd(a, b) * b
}

/// Primality table up to a fixed limit plus prefix prime counts.
///
/// `prime_count(x)` answers pi(x) in O(1); the table is shared read-only by
/// every graph construction. Immutable after [`sieve`].
#[derive(Debug, Clone)]
pub struct SievedRange {
    limit: u64,
    table: Vec<bool>,
    prefix: Vec<u32>,
}

/// Byte-table sieve of Eratosthenes on `0..=limit` with prefix counts.
pub fn sieve(limit: u64) -> Result<SievedRange> {
    if limit < 2 {
        return Err(Error::InvalidSieveLimit(limit));
    }
    let n = limit as usize;
    let mut table = vec![true; n + 1];
    table[0] = false;
    table[1] = false;
    let mut p = 2usize;
    while p * p <= n {
        if table[p] {
            let mut mult = p * p;
            while mult <= n {
                table[mult] = false;
                mult += p;
            }
        }
        p += 1;
    }
    let mut prefix = Vec::with_capacity(n + 1);
    let mut count: u32 = 0;
    for &b in &table {
        count += b as u32;
        prefix.push(count);
    }
    Ok(SievedRange {
        limit,
        table,
        prefix,
    })
}

impl SievedRange {
    pub fn limit(&self) -> u64 {
        self.limit
    }

    /// Table lookup; `x` must be within the sieved range.
    pub fn is_prime(&self, x: u64) -> bool {
        self.table[x as usize]
    }

    /// pi(x), the number of primes <= x. `x` must be within the sieved range.
    pub fn prime_count(&self, x: u64) -> u64 {
        self.prefix[x as usize] as u64
    }

    /// All primes <= `bound` in ascending order.
    pub fn primes_up_to(&self, bound: u64) -> impl Iterator<Item = u64> + '_ {
        let bound = bound.min(self.limit) as usize;
        self.table[..=bound]
            .iter()
            .enumerate()
            .filter(|(_, &b)| b)
            .map(|(i, _)| i as u64)
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.primes_up_to(self.limit)
    }

    pub(crate) fn require(&self, needed: u64) -> Result<()> {
        if self.limit < needed {
            return Err(Error::SieveTooSmall {
                needed,
                limit: self.limit,
            });
        }
        Ok(())
    }
}

/// Exponent of the prime `q` in `n!` (sum of floor(n / q^i) over i >= 1).
pub fn legendre_exponent(q: u64, n: u64) -> Result<u64> {
    if !is_prime(q) {
        return Err(Error::NotPrime {
            value: q,
            context: "legendre_exponent base",
        });
    }
    let mut total = 0u64;
    let mut m = n;
    while m > 0 {
        m /= q;
        total += m;
    }
    Ok(total)
}

/// A positive integer as its prime factorization. Absent prime = exponent 0;
/// the empty map is 1. Keys are always prime, exponents always >= 1.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct FactoredInteger {
    factors: BTreeMap<u64, u64>,
}

impl FactoredInteger {
    /// The empty factorization, i.e. the integer 1.
    pub fn one() -> Self {
        Self::default()
    }

    /// Build from (prime, exponent) pairs. Rejects composite keys, zero
    /// exponents, and repeated primes.
    pub fn from_pairs<I: IntoIterator<Item = (u64, u64)>>(pairs: I) -> Result<Self> {
        let mut factors = BTreeMap::new();
        for (p, e) in pairs {
            if !is_prime(p) {
                return Err(Error::NotPrime {
                    value: p,
                    context: "factored integer key",
                });
            }
            if e == 0 {
                return Err(Error::InvalidPartition(format!(
                    "exponent of {p} must be positive"
                )));
            }
            if factors.insert(p, e).is_some() {
                return Err(Error::InvalidPartition(format!("prime {p} repeated")));
            }
        }
        Ok(Self { factors })
    }

    /// p^e; the empty factorization when e = 0.
    pub fn prime_power(p: u64, e: u64) -> Result<Self> {
        if e == 0 {
            return Ok(Self::one());
        }
        Self::from_pairs([(p, e)])
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn exponent_of(&self, p: u64) -> u64 {
        self.factors.get(&p).copied().unwrap_or(0)
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.factors.keys().copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (u64, u64)> + '_ {
        self.factors.iter().map(|(&p, &e)| (p, e))
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    /// Pointwise exponent sum: the factorization of the product.
    pub fn multiply(&self, other: &Self) -> Self {
        let (big, small) = if self.factors.len() >= other.factors.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut factors = big.factors.clone();
        for (&p, &e) in &small.factors {
            *factors.entry(p).or_insert(0) += e;
        }
        Self { factors }
    }

    /// First prime whose exponent differs, with both exponents (`None` =
    /// prime absent on that side). `None` when the factorizations are equal.
    pub fn first_difference(&self, other: &Self) -> Option<(u64, Option<u64>, Option<u64>)> {
        let mut left = self.factors.iter().peekable();
        let mut right = other.factors.iter().peekable();
        loop {
            match (left.peek(), right.peek()) {
                (None, None) => return None,
                (Some((&p, &e)), None) => return Some((p, Some(e), None)),
                (None, Some((&p, &e))) => return Some((p, None, Some(e))),
                (Some((&lp, &le)), Some((&rp, &re))) => {
                    if lp < rp {
                        return Some((lp, Some(le), None));
                    } else if rp < lp {
                        return Some((rp, None, Some(re)));
                    } else if le != re {
                        return Some((lp, Some(le), Some(re)));
                    }
                    left.next();
                    right.next();
                }
            }
        }
    }
}

impl fmt::Display for FactoredInteger {
    /// "2^3 * 3 * 5"; the empty factorization prints as "1".
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        let mut first = true;
        for (&p, &e) in &self.factors {
            if !first {
                write!(f, " * ")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{p}")?;
            } else {
                write!(f, "{p}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Factorization of n! via Legendre's formula; sieves internally.
pub fn factor_factorial(n: u64) -> FactoredInteger {
    if n < 2 {
        return FactoredInteger::one();
    }
    let sieved = sieve(n).expect("n >= 2");
    factor_factorial_in(n, &sieved).expect("sieve covers n")
}

/// Factorization of n! using an existing sieve (which must cover n).
pub fn factor_factorial_in(n: u64, sieved: &SievedRange) -> Result<FactoredInteger> {
    if n < 2 {
        return Ok(FactoredInteger::one());
    }
    sieved.require(n)?;
    let mut factors = BTreeMap::new();
    for q in sieved.primes_up_to(n) {
        let mut total = 0u64;
        let mut m = n;
        while m > 0 {
            m /= q;
            total += m;
        }
        factors.insert(q, total);
    }
    Ok(FactoredInteger { factors })
}

/// A partition: nonincreasing positive parts.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<u64>,
}

impl Partition {
    /// Normalizing constructor: sorts parts nonincreasing, rejects zeros.
    pub fn new(mut parts: Vec<u64>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition("parts must be positive".into()));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Self { parts })
    }

    pub fn empty() -> Self {
        Self { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    pub fn sum(&self) -> u64 {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }
}

impl fmt::Display for Partition {
    /// "[2,1,1]"; the empty partition prints as "[]".
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

/// All partitions of `m` in lexicographically decreasing order:
/// [m], ..., [1,1,...,1]. `m = 0` yields the single empty partition.
pub fn partitions(m: u64) -> Result<Vec<Partition>> {
    if m > PARTITION_BOUND {
        return Err(Error::PartitionTooLarge {
            m,
            bound: PARTITION_BOUND,
        });
    }
    let mut out = Vec::new();
    let mut current: Vec<u64> = Vec::new();
    descend(m, m, &mut current, &mut out);
    Ok(out)
}

fn descend(remaining: u64, max_part: u64, current: &mut Vec<u64>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition {
            parts: current.clone(),
        });
        return;
    }
    let mut part = remaining.min(max_part);
    while part >= 1 {
        current.push(part);
        descend(remaining - part, part, current, out);
        current.pop();
        part -= 1;
    }
}
