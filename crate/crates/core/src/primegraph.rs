//! Prime graphs of Alt(n) and Sym(n) built from the arithmetic adjacency
//! criterion, direct-product composition, degree patterns, and the
//! O(pi(n)) degree-pattern paths that never materialize an edge set.
//!
//! Adjacency rules: in GK(S_n) two distinct primes r, s are adjacent iff
//! r + s <= n (an r-cycle next to a disjoint s-cycle). In GK(A_n) odd r, s
//! are adjacent iff r + s <= n, and 2 ~ r iff r + 4 <= n (an r-cycle needs
//! two disjoint transpositions to stay even).

use serde::{Deserialize, Serialize};
use std::fmt;

use crate::error::{Error, Result};
use crate::numtheory::{is_prime, SievedRange};

/// Largest n for which GK(A_n)/GK(S_n) edge sets may be materialized.
/// Above this only the degree-pattern paths are available (the edge set of
/// GK(A_5^10) would hold ~10^11 entries).
pub const MATERIALIZE_LIMIT: u64 = 100_000;

/// The two symmetric-family kinds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Alt,
    Sym,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Alt => write!(f, "Alt"),
            Family::Sym => write!(f, "Sym"),
        }
    }
}

/// A labeled graph on prime vertices. Vertices ascend; edges are stored as
/// (smaller, larger) pairs in lexicographic order with no duplicates and no
/// self-loops. Equality is exact labeled equality, not isomorphism.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimeGraph {
    vertices: Vec<u64>,
    edges: Vec<(u64, u64)>,
}

impl PrimeGraph {
    /// Validating constructor. Vertices must be prime; edges must join two
    /// distinct vertices. Input order is irrelevant.
    pub fn new(mut vertices: Vec<u64>, edges: Vec<(u64, u64)>) -> Result<Self> {
        vertices.sort_unstable();
        vertices.dedup();
        for &v in &vertices {
            if !is_prime(v) {
                return Err(Error::InvalidGraph(format!("vertex {v} is not prime")));
            }
        }
        let mut normalized = Vec::with_capacity(edges.len());
        for (a, b) in edges {
            if a == b {
                return Err(Error::InvalidGraph(format!("self-loop at {a}")));
            }
            let (lo, hi) = (a.min(b), a.max(b));
            if vertices.binary_search(&lo).is_err() || vertices.binary_search(&hi).is_err() {
                return Err(Error::InvalidGraph(format!(
                    "edge {lo}-{hi} has an endpoint outside the vertex set"
                )));
            }
            normalized.push((lo, hi));
        }
        normalized.sort_unstable();
        normalized.dedup();
        Ok(Self {
            vertices,
            edges: normalized,
        })
    }

    /// Internal constructor for data already in canonical form.
    fn from_sorted_unchecked(vertices: Vec<u64>, edges: Vec<(u64, u64)>) -> Self {
        debug_assert!(vertices.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(edges.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(edges.iter().all(|&(a, b)| a < b));
        Self { vertices, edges }
    }

    pub fn empty() -> Self {
        Self {
            vertices: Vec::new(),
            edges: Vec::new(),
        }
    }

    pub fn vertices(&self) -> &[u64] {
        &self.vertices
    }

    pub fn edges(&self) -> &[(u64, u64)] {
        &self.edges
    }

    pub fn vertex_count(&self) -> u64 {
        self.vertices.len() as u64
    }

    pub fn edge_count(&self) -> u64 {
        self.edges.len() as u64
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn contains_vertex(&self, v: u64) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }

    pub fn contains_edge(&self, a: u64, b: u64) -> bool {
        if a == b {
            return false;
        }
        self.edges.binary_search(&(a.min(b), a.max(b))).is_ok()
    }

    pub fn degree_of(&self, v: u64) -> u64 {
        self.edges
            .iter()
            .filter(|&&(a, b)| a == v || b == v)
            .count() as u64
    }

    /// Vertex degrees aligned to the ascending vertex list.
    pub fn degree_pattern(&self) -> DegreePattern {
        let mut degrees = vec![0u64; self.vertices.len()];
        for &(a, b) in &self.edges {
            let i = self.vertices.partition_point(|&v| v < a);
            let j = self.vertices.partition_point(|&v| v < b);
            degrees[i] += 1;
            degrees[j] += 1;
        }
        DegreePattern::from_sorted_unchecked(self.vertices.clone(), degrees)
    }

    pub fn summary(&self) -> GraphSummary {
        GraphSummary::from_pattern(&self.degree_pattern())
    }
}

/// Degree tuple aligned to the ascending prime vertices of a graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawDegreePattern")]
pub struct DegreePattern {
    primes: Vec<u64>,
    degrees: Vec<u64>,
}

#[derive(Deserialize)]
struct RawDegreePattern {
    primes: Vec<u64>,
    degrees: Vec<u64>,
}

impl TryFrom<RawDegreePattern> for DegreePattern {
    type Error = Error;

    fn try_from(raw: RawDegreePattern) -> Result<Self> {
        DegreePattern::new(raw.primes, raw.degrees)
    }
}

impl DegreePattern {
    /// Validating constructor: primes ascending and prime, one degree per
    /// prime, each degree < vertex count, even degree sum.
    pub fn new(primes: Vec<u64>, degrees: Vec<u64>) -> Result<Self> {
        if primes.len() != degrees.len() {
            return Err(Error::InvalidGraph(
                "degree pattern arrays differ in length".into(),
            ));
        }
        if !primes.windows(2).all(|w| w[0] < w[1]) {
            return Err(Error::InvalidGraph(
                "degree pattern primes must be strictly ascending".into(),
            ));
        }
        for &p in &primes {
            if !is_prime(p) {
                return Err(Error::InvalidGraph(format!(
                    "pattern vertex {p} is not prime"
                )));
            }
        }
        let n = primes.len() as u64;
        if let Some(&d) = degrees.iter().find(|&&d| d >= n) {
            return Err(Error::InvalidGraph(format!(
                "degree {d} impossible with {n} vertices"
            )));
        }
        if degrees.iter().sum::<u64>() % 2 != 0 {
            return Err(Error::InvalidGraph("degree sum must be even".into()));
        }
        Ok(Self { primes, degrees })
    }

    fn from_sorted_unchecked(primes: Vec<u64>, degrees: Vec<u64>) -> Self {
        debug_assert_eq!(primes.len(), degrees.len());
        debug_assert!(primes.windows(2).all(|w| w[0] < w[1]));
        Self { primes, degrees }
    }

    pub fn empty() -> Self {
        Self {
            primes: Vec::new(),
            degrees: Vec::new(),
        }
    }

    pub fn primes(&self) -> &[u64] {
        &self.primes
    }

    pub fn degrees(&self) -> &[u64] {
        &self.degrees
    }

    pub fn len(&self) -> usize {
        self.primes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.primes.is_empty()
    }

    pub fn degree_of(&self, p: u64) -> Option<u64> {
        self.primes.binary_search(&p).ok().map(|i| self.degrees[i])
    }

    pub fn degree_sum(&self) -> u64 {
        self.degrees.iter().sum()
    }

    /// First vertex where the two patterns disagree: either a prime present
    /// on one side only (`None` degree on the other) or a degree mismatch.
    pub fn first_difference(&self, other: &Self) -> Option<(u64, Option<u64>, Option<u64>)> {
        let mut i = 0;
        let mut j = 0;
        loop {
            match (self.primes.get(i), other.primes.get(j)) {
                (None, None) => return None,
                (Some(&p), None) => return Some((p, Some(self.degrees[i]), None)),
                (None, Some(&q)) => return Some((q, None, Some(other.degrees[j]))),
                (Some(&p), Some(&q)) => {
                    if p < q {
                        return Some((p, Some(self.degrees[i]), None));
                    } else if q < p {
                        return Some((q, None, Some(other.degrees[j])));
                    } else if self.degrees[i] != other.degrees[j] {
                        return Some((p, Some(self.degrees[i]), Some(other.degrees[j])));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
    }
}

impl fmt::Display for DegreePattern {
    /// "2:2 3:3 5:2 7:1" — prime:degree pairs keep the vertex alignment.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (&p, &d)) in self.primes.iter().zip(&self.degrees).enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{p}:{d}")?;
        }
        Ok(())
    }
}

/// Report payload describing a graph without its edge list.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphSummary {
    pub vertex_count: u64,
    pub edge_count: u64,
    pub min_degree: u64,
    pub max_degree: u64,
}

impl GraphSummary {
    pub fn from_pattern(pattern: &DegreePattern) -> Self {
        GraphSummary {
            vertex_count: pattern.len() as u64,
            edge_count: pattern.degree_sum() / 2,
            min_degree: pattern.degrees().iter().copied().min().unwrap_or(0),
            max_degree: pattern.degrees().iter().copied().max().unwrap_or(0),
        }
    }
}

// --- criterion arithmetic -------------------------------------------------

/// Number of odd primes <= x.
fn odd_prime_count(sieved: &SievedRange, x: u64) -> u64 {
    if x < 3 {
        0
    } else {
        sieved.prime_count(x) - 1
    }
}

fn prime_count_le(sieved: &SievedRange, x: u64) -> u64 {
    if x < 2 {
        0
    } else {
        sieved.prime_count(x)
    }
}

/// Adjacency of two distinct vertices r, s of GK(A_n) (n >= 4) or GK(S_n)
/// (n >= 2) by the arithmetic criterion.
fn criterion_adjacent(family: Family, n: u64, r: u64, s: u64) -> bool {
    debug_assert_ne!(r, s);
    match family {
        Family::Sym => r + s <= n,
        Family::Alt => {
            if r == 2 {
                s + 4 <= n
            } else if s == 2 {
                r + 4 <= n
            } else {
                r + s <= n
            }
        }
    }
}

/// Degree of vertex r in GK(A_n) / GK(S_n) from prefix prime counts alone.
fn criterion_degree(family: Family, n: u64, r: u64, sieved: &SievedRange) -> u64 {
    match family {
        Family::Sym => {
            let mut d = prime_count_le(sieved, n - r);
            if 2 * r <= n {
                d -= 1; // r itself was counted
            }
            d
        }
        Family::Alt => {
            if n < 4 {
                return 0;
            }
            if r == 2 {
                return odd_prime_count(sieved, n.saturating_sub(4));
            }
            let mut d = odd_prime_count(sieved, n - r);
            if 2 * r <= n {
                d -= 1;
            }
            if r + 4 <= n {
                d += 1; // the edge to 2
            }
            d
        }
    }
}

/// Vertex set of GK(A_n) or GK(S_n): the primes dividing the group order.
/// A_1, A_2, S_1 are trivial; A_3 has odd order 3.
fn family_vertices(family: Family, n: u64, sieved: &SievedRange) -> Vec<u64> {
    match family {
        Family::Alt if n <= 2 => Vec::new(),
        Family::Alt if n == 3 => vec![3],
        Family::Sym if n < 2 => Vec::new(),
        _ => sieved.primes_up_to(n).collect(),
    }
}

fn family_vertex_count(family: Family, n: u64, sieved: &SievedRange) -> u64 {
    match family {
        Family::Alt if n <= 2 => 0,
        Family::Alt if n == 3 => 1,
        Family::Sym if n < 2 => 0,
        _ => sieved.prime_count(n),
    }
}

fn family_contains_vertex(family: Family, n: u64, v: u64, sieved: &SievedRange) -> bool {
    match family {
        Family::Alt if n <= 2 => false,
        Family::Alt if n == 3 => v == 3,
        Family::Sym if n < 2 => false,
        _ => v <= n && sieved.is_prime(v),
    }
}

// --- graph construction ---------------------------------------------------

/// GK(A_n) with the edge set materialized. Refuses n above
/// [`MATERIALIZE_LIMIT`]; use [`fast_degree_pattern`] beyond it.
pub fn gk_alt(n: u64, sieved: &SievedRange) -> Result<PrimeGraph> {
    sieved.require(n)?;
    if n > MATERIALIZE_LIMIT {
        return Err(Error::GraphTooLarge {
            n,
            threshold: MATERIALIZE_LIMIT,
        });
    }
    let vertices = family_vertices(Family::Alt, n, sieved);
    if n < 4 {
        return Ok(PrimeGraph::from_sorted_unchecked(vertices, Vec::new()));
    }
    let odd: Vec<u64> = vertices[1..].to_vec(); // vertices[0] == 2 for n >= 4

    // exact edge count first, so the buffer never reallocates
    let mut count = odd_prime_count(sieved, n.saturating_sub(4));
    for &r in &odd {
        if 2 * r <= n {
            count += sieved.prime_count(n - r) - sieved.prime_count(r);
        }
    }

    let mut edges = Vec::with_capacity(count as usize);
    for &r in &odd {
        if r + 4 <= n {
            edges.push((2, r));
        } else {
            break;
        }
    }
    for (i, &r) in odd.iter().enumerate() {
        if 2 * r > n {
            break;
        }
        for &s in &odd[i + 1..] {
            if r + s > n {
                break;
            }
            edges.push((r, s));
        }
    }
    edges.sort_unstable();
    Ok(PrimeGraph::from_sorted_unchecked(vertices, edges))
}

/// GK(S_n) with the edge set materialized: distinct primes r, s adjacent iff
/// r + s <= n (the rule covers r = 2: a transposition beside an s-cycle).
pub fn gk_sym(n: u64, sieved: &SievedRange) -> Result<PrimeGraph> {
    sieved.require(n)?;
    if n > MATERIALIZE_LIMIT {
        return Err(Error::GraphTooLarge {
            n,
            threshold: MATERIALIZE_LIMIT,
        });
    }
    let vertices = family_vertices(Family::Sym, n, sieved);

    let mut count = 0u64;
    for &r in &vertices {
        if 2 * r <= n {
            count += sieved.prime_count(n - r) - sieved.prime_count(r);
        }
    }

    let mut edges = Vec::with_capacity(count as usize);
    for (i, &r) in vertices.iter().enumerate() {
        if 2 * r > n {
            break;
        }
        for &s in &vertices[i + 1..] {
            if r + s > n {
                break;
            }
            edges.push((r, s));
        }
    }
    Ok(PrimeGraph::from_sorted_unchecked(vertices, edges))
}

/// GK of a criterion family, dispatching on [`Family`].
pub fn gk_family(family: Family, n: u64, sieved: &SievedRange) -> Result<PrimeGraph> {
    match family {
        Family::Alt => gk_alt(n, sieved),
        Family::Sym => gk_sym(n, sieved),
    }
}

/// Prime graph of a direct product: vertex union, both edge sets, plus every
/// cross pair (an element of order pq exists whenever p divides one factor's
/// order and q the other's). Commutative and associative up to equality.
pub fn gk_product(g1: &PrimeGraph, g2: &PrimeGraph) -> PrimeGraph {
    let mut vertices = Vec::with_capacity(g1.vertices.len() + g2.vertices.len());
    vertices.extend_from_slice(&g1.vertices);
    vertices.extend_from_slice(&g2.vertices);
    vertices.sort_unstable();
    vertices.dedup();

    let mut edges =
        Vec::with_capacity(g1.edges.len() + g2.edges.len() + g1.vertices.len() * g2.vertices.len());
    edges.extend_from_slice(&g1.edges);
    edges.extend_from_slice(&g2.edges);
    for &p in &g1.vertices {
        for &q in &g2.vertices {
            if p != q {
                edges.push((p.min(q), p.max(q)));
            }
        }
    }
    edges.sort_unstable();
    edges.dedup();
    PrimeGraph::from_sorted_unchecked(vertices, edges)
}

// --- fast degree-pattern paths ---------------------------------------------

/// Degree pattern of GK(A_n)/GK(S_n) in O(pi(n)) time via prefix prime
/// counts; no edge set is materialized. Identical to
/// `gk_family(..).degree_pattern()` for every n.
pub fn fast_degree_pattern(family: Family, n: u64, sieved: &SievedRange) -> Result<DegreePattern> {
    sieved.require(n)?;
    let vertices = family_vertices(family, n, sieved);
    let degrees = vertices
        .iter()
        .map(|&r| criterion_degree(family, n, r, sieved))
        .collect();
    Ok(DegreePattern::from_sorted_unchecked(vertices, degrees))
}

/// Degree pattern of GK(family(n) x G) where G is a small explicit graph,
/// again without materializing the family edge set. Equals
/// `gk_product(&gk_family(family, n, ..), small).degree_pattern()`.
pub fn fast_product_degree_pattern(
    family: Family,
    n: u64,
    small: &PrimeGraph,
    sieved: &SievedRange,
) -> Result<DegreePattern> {
    sieved.require(n)?;
    let v2 = small.vertices();
    let v1_count = family_vertex_count(family, n, sieved);
    let in_v1 = |u: u64| family_contains_vertex(family, n, u, sieved);
    let extras: Vec<u64> = v2.iter().copied().filter(|&u| !in_v1(u)).collect();
    let total = v1_count + extras.len() as u64;
    let shared: Vec<u64> = v2.iter().copied().filter(|&u| in_v1(u)).collect();

    let mut primes = Vec::with_capacity(total as usize);
    let mut degrees = Vec::with_capacity(total as usize);
    let mut push = |v: u64, d: u64| {
        primes.push(v);
        degrees.push(d);
    };

    let mut extras_it = extras.iter().copied().peekable();
    for v in family_vertices(family, n, sieved) {
        // flush any small-only vertices that sort before v
        while let Some(&u) = extras_it.peek() {
            if u < v {
                push(u, extra_degree(u, small, v1_count, &in_v1));
                extras_it.next();
            } else {
                break;
            }
        }
        if small.contains_vertex(v) {
            // in both factors: the cross edges reach every other vertex
            push(v, total - 1);
        } else {
            let base = criterion_degree(family, n, v, sieved);
            let overlap = shared
                .iter()
                .filter(|&&u| u != v && criterion_adjacent(family, n, v, u))
                .count() as u64;
            push(v, base - overlap + v2.len() as u64);
        }
    }
    for u in extras_it {
        push(u, extra_degree(u, small, v1_count, &in_v1));
    }
    Ok(DegreePattern::from_sorted_unchecked(primes, degrees))
}

/// Degree of a vertex that lives only in the small factor: every family
/// vertex plus its small-graph neighbors outside the family vertex set.
fn extra_degree(u: u64, small: &PrimeGraph, v1_count: u64, in_v1: &dyn Fn(u64) -> bool) -> u64 {
    let outside_neighbors = small
        .edges()
        .iter()
        .filter_map(|&(a, b)| {
            if a == u {
                Some(b)
            } else if b == u {
                Some(a)
            } else {
                None
            }
        })
        .filter(|&w| !in_v1(w))
        .count() as u64;
    v1_count + outside_neighbors
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numtheory::sieve;

    fn edges_of(g: &PrimeGraph) -> Vec<(u64, u64)> {
        g.edges().to_vec()
    }

    #[test]
    fn gk_alt_examples() {
        let s = sieve(100).unwrap();
        let g5 = gk_alt(5, &s).unwrap();
        assert_eq!(g5.vertices(), &[2, 3, 5]);
        assert!(g5.edges().is_empty());

        let g10 = gk_alt(10, &s).unwrap();
        assert_eq!(edges_of(&g10), vec![(2, 3), (2, 5), (3, 5), (3, 7)]);

        let g3 = gk_alt(3, &s).unwrap();
        assert_eq!(g3.vertices(), &[3]);
        assert!(g3.edges().is_empty());
    }

    #[test]
    fn gk_alt_small_n() {
        let s = sieve(10).unwrap();
        assert!(gk_alt(1, &s).unwrap().is_empty());
        assert!(gk_alt(2, &s).unwrap().is_empty());
        let g4 = gk_alt(4, &s).unwrap();
        assert_eq!(g4.vertices(), &[2, 3]);
        assert!(g4.edges().is_empty());
    }

    #[test]
    fn gk_sym_examples() {
        let s = sieve(100).unwrap();
        let g5 = gk_sym(5, &s).unwrap();
        assert_eq!(edges_of(&g5), vec![(2, 3)]);

        let g2 = gk_sym(2, &s).unwrap();
        assert_eq!(g2.vertices(), &[2]);
        assert!(g2.edges().is_empty());

        let g7 = gk_sym(7, &s).unwrap();
        assert_eq!(edges_of(&g7), vec![(2, 3), (2, 5)]);

        assert!(gk_sym(1, &s).unwrap().is_empty());
    }

    #[test]
    fn gk_rejects_undersized_sieve() {
        let s = sieve(10).unwrap();
        assert!(matches!(
            gk_alt(11, &s),
            Err(Error::SieveTooSmall {
                needed: 11,
                limit: 10
            })
        ));
        assert!(matches!(gk_sym(11, &s), Err(Error::SieveTooSmall { .. })));
    }

    #[test]
    fn gk_refuses_to_materialize_above_threshold() {
        let s = sieve(MATERIALIZE_LIMIT + 10).unwrap();
        assert!(matches!(
            gk_alt(MATERIALIZE_LIMIT + 1, &s),
            Err(Error::GraphTooLarge { .. })
        ));
        assert!(gk_alt(MATERIALIZE_LIMIT, &s).is_ok());
    }

    #[test]
    fn gk_product_examples() {
        let s = sieve(700).unwrap();
        let a5 = gk_alt(5, &s).unwrap();
        let h = PrimeGraph::new(vec![5], vec![]).unwrap();
        let prod = gk_product(&a5, &h);
        assert_eq!(edges_of(&prod), vec![(2, 5), (3, 5)]);

        let g = gk_alt(10, &s).unwrap();
        assert_eq!(gk_product(&g, &PrimeGraph::empty()), g);

        // 5-absorption: GK(A_624 x Z_5^4) = GK(A_625)
        let a624 = gk_alt(624, &s).unwrap();
        let a625 = gk_alt(625, &s).unwrap();
        assert_eq!(gk_product(&a624, &h), a625);
    }

    #[test]
    fn gk_product_commutes() {
        let s = sieve(50).unwrap();
        let a = gk_alt(12, &s).unwrap();
        let b = gk_sym(9, &s).unwrap();
        assert_eq!(gk_product(&a, &b), gk_product(&b, &a));
        let c = PrimeGraph::new(vec![31, 37], vec![(31, 37)]).unwrap();
        assert_eq!(
            gk_product(&gk_product(&a, &b), &c),
            gk_product(&a, &gk_product(&b, &c))
        );
    }

    #[test]
    fn degree_pattern_examples() {
        let s = sieve(700).unwrap();
        let pat = gk_alt(10, &s).unwrap().degree_pattern();
        assert_eq!(pat.primes(), &[2, 3, 5, 7]);
        assert_eq!(pat.degrees(), &[2, 3, 2, 1]);

        assert!(PrimeGraph::empty().degree_pattern().is_empty());

        let pat625 = gk_alt(625, &s).unwrap().degree_pattern();
        assert_eq!(pat625.degree_of(619), Some(3));
        assert_eq!(pat625.degree_of(2), Some(113));
    }

    #[test]
    fn degree_pattern_display() {
        let s = sieve(10).unwrap();
        let pat = gk_alt(10, &s).unwrap().degree_pattern();
        assert_eq!(pat.to_string(), "2:2 3:3 5:2 7:1");
        let pat3 = gk_alt(3, &s).unwrap().degree_pattern();
        assert_eq!(pat3.to_string(), "3:0");
    }

    #[test]
    fn fast_pattern_matches_slow() {
        let s = sieve(3000).unwrap();
        for n in [1u64, 2, 3, 4, 5, 8, 9, 10, 11, 25, 24, 100, 625, 2999] {
            for family in [Family::Alt, Family::Sym] {
                let slow = gk_family(family, n, &s).unwrap().degree_pattern();
                let fast = fast_degree_pattern(family, n, &s).unwrap();
                assert_eq!(slow, fast, "family {family:?}, n = {n}");
            }
        }
    }

    #[test]
    fn fast_pattern_spot_values() {
        let s = sieve(625).unwrap();
        let p10 = fast_degree_pattern(Family::Alt, 10, &s).unwrap();
        assert_eq!(p10.degrees(), &[2, 3, 2, 1]);
        let p5 = fast_degree_pattern(Family::Alt, 5, &s).unwrap();
        assert_eq!(p5.degrees(), &[0, 0, 0]);
        let p625 = fast_degree_pattern(Family::Alt, 625, &s).unwrap();
        assert_eq!(p625.degree_of(2), Some(113));
        assert_eq!(p625.degree_of(619), Some(3));
    }

    #[test]
    fn fast_product_matches_materialized() {
        let s = sieve(1000).unwrap();
        let smalls = vec![
            PrimeGraph::empty(),
            PrimeGraph::new(vec![5], vec![]).unwrap(),
            PrimeGraph::new(vec![2, 5], vec![]).unwrap(),
            PrimeGraph::new(vec![2, 5], vec![(2, 5)]).unwrap(),
            // vertices partly or fully outside the family vertex set
            PrimeGraph::new(vec![3, 1009], vec![(3, 1009)]).unwrap(),
            PrimeGraph::new(vec![1013, 1019], vec![]).unwrap(),
            PrimeGraph::new(vec![7, 11, 13], vec![(7, 11), (11, 13)]).unwrap(),
        ];
        for family in [Family::Alt, Family::Sym] {
            for n in [1u64, 2, 3, 4, 5, 9, 30, 101, 624, 625] {
                for small in &smalls {
                    let slow =
                        gk_product(&gk_family(family, n, &s).unwrap(), small).degree_pattern();
                    let fast = fast_product_degree_pattern(family, n, small, &s).unwrap();
                    assert_eq!(slow, fast, "family {family:?}, n = {n}, small {small:?}");
                }
            }
        }
    }

    #[test]
    fn degree_sum_is_even() {
        let s = sieve(2000).unwrap();
        for n in 1..=200u64 {
            assert_eq!(gk_alt(n, &s).unwrap().degree_pattern().degree_sum() % 2, 0);
            assert_eq!(gk_sym(n, &s).unwrap().degree_pattern().degree_sum() % 2, 0);
        }
    }

    #[test]
    fn graph_equality_examples() {
        let s = sieve(700).unwrap();
        assert_eq!(gk_alt(625, &s).unwrap(), gk_alt(624, &s).unwrap());
        assert_ne!(gk_alt(5, &s).unwrap(), gk_sym(5, &s).unwrap());
        let g = gk_alt(10, &s).unwrap();
        assert_eq!(g, g.clone());
    }

    #[test]
    fn graph_constructor_validates() {
        assert!(PrimeGraph::new(vec![4], vec![]).is_err());
        assert!(PrimeGraph::new(vec![2, 3], vec![(2, 2)]).is_err());
        assert!(PrimeGraph::new(vec![2, 3], vec![(2, 5)]).is_err());
        let g = PrimeGraph::new(vec![5, 3, 2], vec![(5, 3)]).unwrap();
        assert_eq!(g.vertices(), &[2, 3, 5]);
        assert_eq!(g.edges(), &[(3, 5)]);
        assert!(g.contains_edge(5, 3));
        assert!(!g.contains_edge(2, 3));
    }

    #[test]
    fn pattern_constructor_validates() {
        assert!(DegreePattern::new(vec![2, 3], vec![1]).is_err());
        assert!(DegreePattern::new(vec![3, 2], vec![1, 1]).is_err());
        assert!(DegreePattern::new(vec![2, 4], vec![1, 1]).is_err());
        assert!(DegreePattern::new(vec![2, 3], vec![1, 2]).is_err()); // degree >= count
        assert!(DegreePattern::new(vec![2, 3], vec![1, 0]).is_err()); // odd sum
        assert!(DegreePattern::new(vec![2, 3], vec![1, 1]).is_ok());
    }

    #[test]
    fn summary_from_pattern() {
        let s = sieve(10).unwrap();
        let g = gk_alt(10, &s).unwrap();
        let sum = g.summary();
        assert_eq!(
            sum,
            GraphSummary {
                vertex_count: 4,
                edge_count: 4,
                min_degree: 1,
                max_degree: 3
            }
        );
        assert_eq!(
            PrimeGraph::empty().summary(),
            GraphSummary {
                vertex_count: 0,
                edge_count: 0,
                min_degree: 0,
                max_degree: 0
            }
        );
    }
}
