//! Symbolic group expressions: the objects the order/degree-pattern checks
//! quantify over. An expression is one of Alt(n), Sym(n), an abelian p-group
//! given by a partition (Z_{p^a1} x Z_{p^a2} x ...), an abstract group known
//! only by its order and internal prime-graph edges, or a direct product.
//!
//! Only |G| and GK(G) feed into OD data, so an abstract group is fully
//! described by (order, edges); for a p-group the graph is always the single
//! vertex {p}, whatever its isomorphism type.

mod parse;

pub use parse::{parse_group_expr, ParseError};

use std::fmt;

use crate::error::{Error, Result};
use crate::numtheory::{factor_factorial_in, is_prime, FactoredInteger, Partition, SievedRange};
use crate::primegraph::{
    fast_degree_pattern, fast_product_degree_pattern, gk_alt, gk_product, gk_sym, DegreePattern,
    Family, PrimeGraph, MATERIALIZE_LIMIT,
};

/// A symbolic group descriptor tree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupExpr {
    Alt(u64),
    Sym(u64),
    AbelianPGroup {
        prime: u64,
        shape: Partition,
    },
    /// A group known only through its order and the edges among its primes.
    /// Its prime set is the key set of the order.
    AbstractGroup {
        order: FactoredInteger,
        edges: Vec<(u64, u64)>,
    },
    Product(Box<GroupExpr>, Box<GroupExpr>),
}

impl GroupExpr {
    pub fn alt(n: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidGraph("Alt degree must be >= 1".into()));
        }
        Ok(GroupExpr::Alt(n))
    }

    pub fn sym(n: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidGraph("Sym degree must be >= 1".into()));
        }
        Ok(GroupExpr::Sym(n))
    }

    /// Direct sum of cyclic groups Z_{p^part} for each part of `shape`.
    pub fn abelian_p_group(prime: u64, shape: Partition) -> Result<Self> {
        if !is_prime(prime) {
            return Err(Error::NotPrime {
                value: prime,
                context: "abelian p-group base",
            });
        }
        Ok(GroupExpr::AbelianPGroup { prime, shape })
    }

    /// Abstract group with the given order; `edges` are the adjacencies of
    /// its prime graph and must join distinct primes of the order.
    pub fn abstract_group(order: FactoredInteger, edges: Vec<(u64, u64)>) -> Result<Self> {
        let mut normalized = Vec::with_capacity(edges.len());
        for (a, b) in edges {
            if a == b {
                return Err(Error::InvalidGraph(format!("self-loop at {a}")));
            }
            if order.exponent_of(a) == 0 || order.exponent_of(b) == 0 {
                return Err(Error::InvalidGraph(format!(
                    "edge {a}-{b} joins primes outside the group order"
                )));
            }
            normalized.push((a.min(b), a.max(b)));
        }
        normalized.sort_unstable();
        normalized.dedup();
        Ok(GroupExpr::AbstractGroup {
            order,
            edges: normalized,
        })
    }

    pub fn product(left: GroupExpr, right: GroupExpr) -> Self {
        GroupExpr::Product(Box::new(left), Box::new(right))
    }

    fn leaves<'a>(&'a self, out: &mut Vec<&'a GroupExpr>) {
        match self {
            GroupExpr::Product(l, r) => {
                l.leaves(out);
                r.leaves(out);
            }
            leaf => out.push(leaf),
        }
    }

    /// Largest Alt/Sym degree in the tree; the sieve must cover it.
    pub fn required_sieve_limit(&self) -> u64 {
        match self {
            GroupExpr::Alt(n) | GroupExpr::Sym(n) => *n,
            GroupExpr::Product(l, r) => l.required_sieve_limit().max(r.required_sieve_limit()),
            _ => 0,
        }
    }
}

/// The pair (|G|, D(G)) that OD comparisons are made on.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ODPair {
    pub order: FactoredInteger,
    pub pattern: DegreePattern,
}

/// |e| as a factored integer. Alt(n) is n!/2 for n >= 2 (trivial below).
pub fn order_of(e: &GroupExpr, sieved: &SievedRange) -> Result<FactoredInteger> {
    match e {
        GroupExpr::Alt(n) => {
            if *n < 2 {
                return Ok(FactoredInteger::one());
            }
            let full = factor_factorial_in(*n, sieved)?;
            let halved: Vec<(u64, u64)> = full
                .iter()
                .filter_map(|(p, e)| {
                    let e = if p == 2 { e - 1 } else { e };
                    (e > 0).then_some((p, e))
                })
                .collect();
            Ok(FactoredInteger::from_pairs(halved).expect("valid factorization"))
        }
        GroupExpr::Sym(n) => factor_factorial_in(*n, sieved),
        GroupExpr::AbelianPGroup { prime, shape } => {
            FactoredInteger::prime_power(*prime, shape.sum())
        }
        GroupExpr::AbstractGroup { order, .. } => Ok(order.clone()),
        GroupExpr::Product(l, r) => Ok(order_of(l, sieved)?.multiply(&order_of(r, sieved)?)),
    }
}

fn gk_leaf(e: &GroupExpr, sieved: &SievedRange) -> Result<PrimeGraph> {
    match e {
        GroupExpr::Alt(n) => gk_alt(*n, sieved),
        GroupExpr::Sym(n) => gk_sym(*n, sieved),
        GroupExpr::AbelianPGroup { prime, shape } => {
            if shape.sum() == 0 {
                Ok(PrimeGraph::empty())
            } else {
                PrimeGraph::new(vec![*prime], vec![])
            }
        }
        GroupExpr::AbstractGroup { order, edges } => {
            PrimeGraph::new(order.primes().collect(), edges.clone())
        }
        GroupExpr::Product(_, _) => unreachable!("leaves only"),
    }
}

/// GK(e) with edges materialized. Errors with a resource error when any
/// Alt/Sym factor exceeds [`MATERIALIZE_LIMIT`].
pub fn gk_of(e: &GroupExpr, sieved: &SievedRange) -> Result<PrimeGraph> {
    let mut leaves = Vec::new();
    e.leaves(&mut leaves);
    let mut acc: Option<PrimeGraph> = None;
    for leaf in leaves {
        let g = gk_leaf(leaf, sieved)?;
        acc = Some(match acc {
            None => g,
            Some(prev) => gk_product(&prev, &g),
        });
    }
    Ok(acc.unwrap_or_else(PrimeGraph::empty))
}

/// D(e). Alt/Sym factors above the materialization threshold go through the
/// prefix-count degree path; at most one such factor is supported per
/// product.
pub fn pattern_of(e: &GroupExpr, sieved: &SievedRange) -> Result<DegreePattern> {
    let mut leaves = Vec::new();
    e.leaves(&mut leaves);
    let mut huge: Option<(Family, u64)> = None;
    let mut small: Option<PrimeGraph> = None;
    for leaf in leaves {
        let big = match leaf {
            GroupExpr::Alt(n) if *n > MATERIALIZE_LIMIT => Some((Family::Alt, *n)),
            GroupExpr::Sym(n) if *n > MATERIALIZE_LIMIT => Some((Family::Sym, *n)),
            _ => None,
        };
        if let Some(pair) = big {
            if huge.is_some() {
                return Err(Error::ProductTooLarge {
                    threshold: MATERIALIZE_LIMIT,
                });
            }
            sieved.require(pair.1)?;
            huge = Some(pair);
        } else {
            let g = gk_leaf(leaf, sieved)?;
            small = Some(match small {
                None => g,
                Some(prev) => gk_product(&prev, &g),
            });
        }
    }
    match (huge, small) {
        (None, None) => Ok(DegreePattern::empty()),
        (None, Some(g)) => Ok(g.degree_pattern()),
        (Some((f, n)), None) => fast_degree_pattern(f, n, sieved),
        (Some((f, n)), Some(g)) => fast_product_degree_pattern(f, n, &g, sieved),
    }
}

/// (|e|, D(e)).
pub fn od_pair(e: &GroupExpr, sieved: &SievedRange) -> Result<ODPair> {
    Ok(ODPair {
        order: order_of(e, sieved)?,
        pattern: pattern_of(e, sieved)?,
    })
}

/// True iff the two expressions have equal orders and equal degree patterns
/// (including vertex alignment).
pub fn same_od(a: &GroupExpr, b: &GroupExpr, sieved: &SievedRange) -> Result<bool> {
    Ok(od_pair(a, sieved)? == od_pair(b, sieved)?)
}

impl fmt::Display for GroupExpr {
    /// Prints in the CLI grammar: `Alt(624) x Ab(5,[2,1,1])`,
    /// `Grp(2*5^4; pi=2,5; edges=2-5)`. Product chains print flattened, so
    /// only left-associated trees (what the parser builds) round-trip
    /// structurally.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupExpr::Alt(n) => write!(f, "Alt({n})"),
            GroupExpr::Sym(n) => write!(f, "Sym({n})"),
            GroupExpr::AbelianPGroup { prime, shape } => write!(f, "Ab({prime},{shape})"),
            GroupExpr::AbstractGroup { order, edges } => {
                write!(f, "Grp(")?;
                for (i, (p, e)) in order.iter().enumerate() {
                    if i > 0 {
                        write!(f, "*")?;
                    }
                    if e == 1 {
                        write!(f, "{p}")?;
                    } else {
                        write!(f, "{p}^{e}")?;
                    }
                }
                write!(f, "; pi=")?;
                for (i, p) in order.primes().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{p}")?;
                }
                write!(f, "; edges=")?;
                for (i, (a, b)) in edges.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{a}-{b}")?;
                }
                write!(f, ")")
            }
            GroupExpr::Product(l, r) => write!(f, "{l} x {r}"),
        }
    }
}
