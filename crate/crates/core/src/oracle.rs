//! Brute-force ground truth for small n: element-order spectra of A_n and
//! S_n computed from cycle types, and prime graphs built from those spectra
//! with no reliance on the arithmetic adjacency criterion.
//!
//! Every permutation's order is the lcm of its cycle lengths, so the
//! spectrum of S_n is the set of lcms over partitions of n; a permutation is
//! even iff its cycle type has an even number of even parts. Enumerating
//! partitions reaches n = 40 easily where enumerating n! permutations dies
//! around n = 10.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::numtheory::{factor_factorial, lcm, partitions, Partition};
use crate::primegraph::{Family, PrimeGraph};

/// Largest n the oracle accepts (partition counts stay in the tens of
/// thousands).
pub const ORACLE_MAX_N: u64 = 40;

/// A cycle type of S_n: a partition of n together with the sign of the
/// permutations carrying it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleType {
    partition: Partition,
    sign: i8,
}

impl CycleType {
    /// Sign is (-1)^(n - number_of_parts), with n the partition's sum.
    pub fn from_partition(partition: Partition) -> Self {
        let moved = partition.sum() - partition.len() as u64;
        let sign = if moved.is_multiple_of(2) { 1 } else { -1 };
        CycleType { partition, sign }
    }

    pub fn partition(&self) -> &Partition {
        &self.partition
    }

    pub fn sign(&self) -> i8 {
        self.sign
    }

    pub fn is_even(&self) -> bool {
        self.sign == 1
    }

    /// Order of any permutation with this cycle type.
    pub fn order(&self) -> u64 {
        self.partition.parts().iter().fold(1, |acc, &p| lcm(acc, p))
    }
}

fn check_range(n: u64) -> Result<()> {
    if n > ORACLE_MAX_N {
        return Err(Error::OracleRangeExceeded {
            n,
            max: ORACLE_MAX_N,
        });
    }
    Ok(())
}

fn cycle_types(n: u64) -> Result<Vec<CycleType>> {
    check_range(n)?;
    Ok(partitions(n)?
        .into_iter()
        .map(CycleType::from_partition)
        .collect())
}

/// The exact set of element orders of S_n.
pub fn element_orders_sym(n: u64) -> Result<BTreeSet<u64>> {
    Ok(cycle_types(n)?.iter().map(CycleType::order).collect())
}

/// The exact set of element orders of A_n (even cycle types only).
pub fn element_orders_alt(n: u64) -> Result<BTreeSet<u64>> {
    Ok(cycle_types(n)?
        .iter()
        .filter(|t| t.is_even())
        .map(CycleType::order)
        .collect())
}

/// Prime graph from the spectrum alone: vertices are the primes dividing the
/// group order, an edge {p, q} exists iff pq divides some element order.
pub fn gk_oracle(family: Family, n: u64) -> Result<PrimeGraph> {
    check_range(n)?;
    let spectrum = match family {
        Family::Alt => element_orders_alt(n)?,
        Family::Sym => element_orders_sym(n)?,
    };
    let order = match family {
        Family::Sym => factor_factorial(n),
        Family::Alt => {
            // |A_n| = n!/2 for n >= 2; dividing out one factor of 2 may
            // drop the prime 2 entirely (A_2 trivial, A_3 of order 3)
            let full = factor_factorial(n);
            let pairs: Vec<(u64, u64)> = full
                .iter()
                .filter_map(|(p, e)| {
                    let e = if p == 2 { e - 1 } else { e };
                    (e > 0).then_some((p, e))
                })
                .collect();
            crate::numtheory::FactoredInteger::from_pairs(pairs).expect("valid factorization")
        }
    };
    let vertices: Vec<u64> = order.primes().collect();
    let mut edges = Vec::new();
    for (i, &p) in vertices.iter().enumerate() {
        for &q in &vertices[i + 1..] {
            let pq = p * q;
            if spectrum.iter().any(|&o| o % pq == 0) {
                edges.push((p, q));
            }
        }
    }
    PrimeGraph::new(vertices, edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numtheory::sieve;
    use crate::primegraph::{gk_alt, gk_sym};

    #[test]
    fn spectrum_sym_examples() {
        let s5 = element_orders_sym(5).unwrap();
        assert_eq!(s5, BTreeSet::from([1, 2, 3, 4, 5, 6]));

        assert_eq!(element_orders_sym(1).unwrap(), BTreeSet::from([1]));

        let s7 = element_orders_sym(7).unwrap();
        assert!(s7.contains(&10)); // (5, 2)
        assert!(!s7.contains(&15)); // 3 + 5 > 7
    }

    #[test]
    fn spectrum_alt_examples() {
        let a5 = element_orders_alt(5).unwrap();
        assert_eq!(a5, BTreeSet::from([1, 2, 3, 5])); // (3,2) is odd

        let a7 = element_orders_alt(7).unwrap();
        assert!(!a7.contains(&10)); // only (5,2) has lcm 10 and it is odd

        assert_eq!(element_orders_alt(2).unwrap(), BTreeSet::from([1]));
    }

    #[test]
    fn oracle_rejects_large_n() {
        assert!(matches!(
            element_orders_sym(41),
            Err(Error::OracleRangeExceeded { n: 41, .. })
        ));
        assert!(element_orders_alt(40).is_ok());
        assert!(gk_oracle(Family::Sym, 41).is_err());
    }

    #[test]
    fn gk_oracle_examples() {
        let a5 = gk_oracle(Family::Alt, 5).unwrap();
        assert!(a5.edges().is_empty());

        let s5 = gk_oracle(Family::Sym, 5).unwrap();
        assert_eq!(s5.edges(), &[(2, 3)]);

        let a10 = gk_oracle(Family::Alt, 10).unwrap();
        assert_eq!(a10.edges(), &[(2, 3), (2, 5), (3, 5), (3, 7)]);
    }

    #[test]
    fn criterion_matches_oracle_up_to_12() {
        let s = sieve(12).unwrap();
        for n in 1..=12u64 {
            assert_eq!(
                gk_oracle(Family::Alt, n).unwrap(),
                gk_alt(n, &s).unwrap(),
                "Alt, n = {n}"
            );
            assert_eq!(
                gk_oracle(Family::Sym, n).unwrap(),
                gk_sym(n, &s).unwrap(),
                "Sym, n = {n}"
            );
        }
    }

    #[test]
    fn spectra_monotone_and_nested() {
        for n in 1..=20u64 {
            let sn = element_orders_sym(n).unwrap();
            let sn1 = element_orders_sym(n + 1).unwrap();
            assert!(sn.is_subset(&sn1), "S_{n} spectrum not within S_{}", n + 1);
            let an = element_orders_alt(n).unwrap();
            assert!(an.is_subset(&sn), "A_{n} spectrum not within S_{n}");
        }
    }

    #[test]
    fn cycle_type_sign() {
        // (3,2) in S_5: one even part -> odd
        let t = CycleType::from_partition(Partition::new(vec![3, 2]).unwrap());
        assert_eq!(t.sign(), -1);
        assert_eq!(t.order(), 6);
        // (2,2,1) in S_5: two even parts -> even
        let t = CycleType::from_partition(Partition::new(vec![2, 2, 1]).unwrap());
        assert!(t.is_even());
        assert_eq!(t.order(), 2);
        // sign = (-1)^(n - parts) in general
        for n in 1..=10u64 {
            for p in partitions(n).unwrap() {
                let even_parts = p.parts().iter().filter(|&&x| x % 2 == 0).count();
                let t = CycleType::from_partition(p);
                assert_eq!(t.is_even(), even_parts % 2 == 0);
            }
        }
    }
}
