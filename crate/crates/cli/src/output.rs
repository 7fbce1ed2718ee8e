//! Wire formats: the JSON document schemas for every subcommand, plus DOT
//! and plain-text rendering. All JSON is emitted with `to_string_pretty` and
//! deterministic field order, so identical inputs give identical bytes.

use serde::{Deserialize, Serialize};

use gkod::numtheory::FactoredInteger;
use gkod::primegraph::{DegreePattern, Family, PrimeGraph};
use gkod::theorem::{CandidateWitness, Certificate, VerificationReport};

#[derive(Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphDoc {
    pub vertices: Vec<u64>,
    pub edges: Vec<(u64, u64)>,
}

impl GraphDoc {
    pub fn from_graph(g: &PrimeGraph) -> Self {
        GraphDoc {
            vertices: g.vertices().to_vec(),
            edges: g.edges().to_vec(),
        }
    }
}

#[derive(Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderDoc {
    pub factors: Vec<(u64, u64)>,
}

impl OrderDoc {
    pub fn from_order(order: &FactoredInteger) -> Self {
        OrderDoc {
            factors: order.iter().collect(),
        }
    }
}

#[derive(Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchDoc {
    pub max_alpha: u32,
    pub candidates: Vec<CandidateWitness>,
}

#[derive(Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OdClassDoc {
    pub alpha: u32,
    pub family: Family,
    pub count: u64,
    pub members: Vec<String>,
}

pub fn json<T: Serialize>(doc: &T) -> String {
    serde_json::to_string_pretty(doc).expect("serializable document")
}

/// Vertices in ascending prime order, edges lexicographic.
pub fn dot(g: &PrimeGraph) -> String {
    let mut out = String::from("graph GK {\n");
    for v in g.vertices() {
        out.push_str(&format!("  {v};\n"));
    }
    for (a, b) in g.edges() {
        out.push_str(&format!("  {a} -- {b};\n"));
    }
    out.push_str("}\n");
    out
}

pub fn graph_text(g: &PrimeGraph) -> String {
    let verts = g
        .vertices()
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(" ");
    let edges = g
        .edges()
        .iter()
        .map(|(a, b)| format!("{a}-{b}"))
        .collect::<Vec<_>>()
        .join(" ");
    format!("vertices: {verts}\nedges: {edges}\n")
}

pub fn pattern_text(p: &DegreePattern) -> String {
    format!("{p}\n")
}

pub fn search_text(max_alpha: u32, rows: &[CandidateWitness]) -> String {
    let mut out = format!("candidates for alpha = 1..={max_alpha} (p = 5^alpha - 6)\n");
    out.push_str(&format!(
        "{:>5}  {:>20}  {:^9}  reason\n",
        "alpha", "p", "qualifies"
    ));
    for w in rows {
        out.push_str(&format!(
            "{:>5}  {:>20}  {:^9}  {}\n",
            w.alpha,
            w.p,
            if w.qualifies { "yes" } else { "no" },
            w.reason.as_deref().unwrap_or("-"),
        ));
    }
    out
}

pub fn verify_text(r: &VerificationReport) -> String {
    let part = |name: &str, p: &gkod::theorem::PartReport| {
        let mut line = format!(
            "{name}: order equal: {}, pattern equal: {}",
            yes_no(p.order_equal),
            yes_no(p.pattern_equal)
        );
        if let Some(d) = &p.evidence.first_order_diff {
            line.push_str(&format!(
                " [first order diff at {}: {:?} vs {:?}]",
                d.prime, d.left_exponent, d.right_exponent
            ));
        }
        if let Some(d) = &p.evidence.first_pattern_diff {
            line.push_str(&format!(
                " [first pattern diff at {}: {:?} vs {:?}]",
                d.prime, d.left_degree, d.right_degree
            ));
        }
        line.push('\n');
        line
    };
    let n = r.p + 6;
    let mut out = format!(
        "alpha = {}, p = {}, p + 6 = {} = 5^{}\n",
        r.alpha, r.p, n, r.alpha
    );
    out.push_str(&part(
        &format!("part 1 (Alt({n}) vs Alt({}) x H)", r.p + 5),
        &r.part1,
    ));
    out.push_str(&part(
        &format!("part 2 (Sym({n}) vs Sym({}) x H)", r.p + 5),
        &r.part2,
    ));
    out.push_str(&part(
        &format!("part 3 (Sym({n}) vs Alt({}) x T, both T variants)", r.p + 5),
        &r.part3,
    ));
    out.push_str(&format!(
        "graph identity GK(Alt({n})) = GK(Alt({})): {} (certificate: {})\n",
        r.p + 5,
        yes_no(r.graph_identity),
        match r.graph_identity_certificate {
            Certificate::EdgeSets => "edge sets",
            Certificate::DegreePatterns => "degree patterns",
        }
    ));
    out.push_str(&format!(
        "od-class lower bound (abelian): {}\n",
        r.od_class_size_lower_bound
    ));
    out.push_str(if r.pass { "PASS\n" } else { "FAIL\n" });
    out
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}
