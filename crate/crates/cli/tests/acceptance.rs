//! Acceptance suite. Each test prints one PASS line (visible with
//! `cargo test --test acceptance -- --nocapture`); timed criteria assert
//! their budget. Criteria mix library-level checks with runs of the real
//! binary.

use std::process::Command;
use std::time::Instant;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use gkod::descriptors::{od_pair, parse_group_expr, same_od, GroupExpr};
use gkod::numtheory::{legendre_exponent, sieve, FactoredInteger, Partition};
use gkod::oracle::gk_oracle;
use gkod::primegraph::{fast_degree_pattern, gk_alt, gk_family, gk_sym, Family};

fn gkod(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_gkod"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().expect("exit code"),
        String::from_utf8(out.stdout).expect("utf-8 stdout"),
        String::from_utf8(out.stderr).expect("utf-8 stderr"),
    )
}

fn trial_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

#[test]
fn a01_oracle_equivalence_small_n() {
    let start = Instant::now();
    let s = sieve(12).unwrap();
    for n in 1..=12u64 {
        assert_eq!(
            gk_alt(n, &s).unwrap(),
            gk_oracle(Family::Alt, n).unwrap(),
            "Alt mismatch at n = {n}"
        );
        assert_eq!(
            gk_sym(n, &s).unwrap(),
            gk_oracle(Family::Sym, n).unwrap(),
            "Sym mismatch at n = {n}"
        );
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 1.0, "took {elapsed:?}");
    println!(
        "PASS criterion 1: criterion graphs equal cycle-type oracle for n <= 12 ({elapsed:?})"
    );
}

#[test]
fn a02_verify_alpha_4() {
    let start = Instant::now();
    let (code, stdout, stderr) = gkod(&["verify", "--alpha", "4", "--format", "json"]);
    let elapsed = start.elapsed();
    assert_eq!(code, 0, "{stderr}");
    let report: gkod::theorem::VerificationReport = serde_json::from_str(&stdout).unwrap();
    assert!(report.pass);
    assert!(report.part1.holds() && report.part2.holds() && report.part3.holds());
    assert!(report.graph_identity);
    assert_eq!(report.od_class_size_lower_bound, 6);
    assert!(elapsed.as_secs_f64() < 1.0, "took {elapsed:?}");
    println!("PASS criterion 2: verify --alpha 4 passes with od-class lower bound 6 ({elapsed:?})");
}

#[test]
fn a03_verify_alpha_6_and_10() {
    let (code, stdout, stderr) = gkod(&["verify", "--alpha", "6", "--format", "json"]);
    assert_eq!(code, 0, "{stderr}");
    let report: gkod::theorem::VerificationReport = serde_json::from_str(&stdout).unwrap();
    assert!(report.pass);

    let start = Instant::now();
    let (code, stdout, stderr) = gkod(&["verify", "--alpha", "10", "--format", "json"]);
    let elapsed = start.elapsed();
    assert_eq!(code, 0, "{stderr}");
    let report: gkod::theorem::VerificationReport = serde_json::from_str(&stdout).unwrap();
    assert!(report.pass);
    assert_eq!(
        report.graph_identity_certificate,
        gkod::theorem::Certificate::DegreePatterns,
        "alpha = 10 must take the non-materializing path"
    );
    assert!(elapsed.as_secs_f64() < 60.0, "took {elapsed:?}");
    println!("PASS criterion 3: verify passes at alpha 6 and alpha 10 (alpha 10 in {elapsed:?})");
}

#[test]
fn a04_search_reproduces_the_three_witnesses() {
    let (code, stdout, stderr) = gkod(&["search", "--max-alpha", "10", "--format", "json"]);
    assert_eq!(code, 0, "{stderr}");
    let doc: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    let candidates = doc["candidates"].as_array().unwrap();
    assert_eq!(candidates.len(), 10);

    let qualifiers: Vec<(u64, i64)> = candidates
        .iter()
        .filter(|c| c["qualifies"].as_bool().unwrap())
        .map(|c| (c["alpha"].as_u64().unwrap(), c["p"].as_i64().unwrap()))
        .collect();
    assert_eq!(qualifiers, vec![(4, 619), (6, 15619), (10, 9765619)]);

    for c in candidates {
        if !c["qualifies"].as_bool().unwrap() {
            let reason = c["reason"].as_str().unwrap();
            assert!(!reason.is_empty());
        }
    }
    let alpha2 = &candidates[1];
    assert!(alpha2["reason"].as_str().unwrap().contains("23"));
    println!(
        "PASS criterion 4: search flags exactly alpha in {{4, 6, 10}} with machine-checked reasons"
    );
}

#[test]
fn a05_od_class_of_625() {
    let (code, stdout, stderr) = gkod(&["odclass", "--alpha", "4", "--family", "alt"]);
    assert_eq!(code, 0, "{stderr}");
    let lines: Vec<&str> = stdout.lines().collect();
    assert_eq!(lines.len(), 6);
    assert_eq!(
        lines,
        vec![
            "Alt(625)",
            "Alt(624) x Ab(5,[4])",
            "Alt(624) x Ab(5,[3,1])",
            "Alt(624) x Ab(5,[2,2])",
            "Alt(624) x Ab(5,[2,1,1])",
            "Alt(624) x Ab(5,[1,1,1,1])",
        ]
    );

    // re-parse every emitted line and check the class is pairwise OD-equal
    let s = sieve(625).unwrap();
    let members: Vec<GroupExpr> = lines.iter().map(|l| parse_group_expr(l).unwrap()).collect();
    for a in &members {
        for b in &members {
            assert!(same_od(a, b, &s).unwrap(), "{a} vs {b}");
        }
    }
    println!(
        "PASS criterion 5: odclass --alpha 4 --family alt emits the 6 pairwise OD-equal groups"
    );
}

#[test]
fn a06_hypothesis_necessity_at_alpha_2() {
    // the verifier refuses the case
    let (code, _, stderr) = gkod(&["verify", "--alpha", "2"]);
    assert_eq!(code, 3, "{stderr}");
    assert!(stderr.contains("23"), "{stderr}");

    let s = sieve(25).unwrap();
    // Sym: GK(S_25) gains the edge {2,23} over GK(S_24) (23 + 2 = 25), so
    // the degree patterns differ at vertex 23
    let s25 = gk_sym(25, &s).unwrap().degree_pattern();
    let s24 = gk_sym(24, &s).unwrap().degree_pattern();
    assert_eq!(s25.degree_of(23), Some(1));
    assert_eq!(s24.degree_of(23), Some(0));

    // Alt: the bare graphs coincide, and the conclusion fails against the
    // product instead: the 5-cross edge reaches 23 in A_24 x H only
    assert_eq!(gk_alt(25, &s).unwrap(), gk_alt(24, &s).unwrap());
    let h = GroupExpr::abelian_p_group(5, Partition::new(vec![2]).unwrap()).unwrap();
    let prod = GroupExpr::product(GroupExpr::Alt(24), h);
    let a25 = od_pair(&GroupExpr::Alt(25), &s).unwrap();
    let a24h = od_pair(&prod, &s).unwrap();
    assert_eq!(a25.order, a24h.order, "orders still agree");
    assert_eq!(a25.pattern.degree_of(23), Some(0));
    assert_eq!(a24h.pattern.degree_of(23), Some(1));
    assert_ne!(a25.pattern, a24h.pattern);
    println!("PASS criterion 6: alpha 2 refused; degree patterns exhibit the vertex-23 difference");
}

#[test]
fn a07_fast_path_equals_slow_path() {
    let s = sieve(100_000).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(0x6b67_6f64);
    let mut ns: Vec<u64> = vec![4, 5, 8, 9];
    ns.extend((0..50).map(|_| rng.gen_range(1..=100_000u64)));
    for &n in &ns {
        for family in [Family::Alt, Family::Sym] {
            let slow = gk_family(family, n, &s).unwrap().degree_pattern();
            let fast = fast_degree_pattern(family, n, &s).unwrap();
            assert_eq!(slow, fast, "family {family:?}, n = {n}");
        }
    }
    println!(
        "PASS criterion 7: fast degree patterns equal edge-set patterns on {} sampled n",
        ns.len()
    );
}

#[test]
fn a08_numeric_spot_values() {
    // Legendre exponent vs directly counting factors of 5 in 1..=625
    let mut direct = 0u64;
    for k in 1..=625u64 {
        let mut m = k;
        while m % 5 == 0 {
            direct += 1;
            m /= 5;
        }
    }
    assert_eq!(direct, 156);
    assert_eq!(legendre_exponent(5, 625).unwrap(), direct);

    // pi(625) by trial division
    let pi: u64 = (2..=625u64).filter(|&n| trial_prime(n)).count() as u64;
    assert_eq!(pi, 114);
    let s = sieve(625).unwrap();
    assert_eq!(s.prime_count(625), pi);

    // deg(2) in GK(A_625): odd primes r with r + 4 <= 625, by trial division
    let deg2: u64 = (3..=621u64).filter(|&r| trial_prime(r)).count() as u64;
    assert_eq!(deg2, 113);

    // deg(619): brute-force over all candidate neighbors
    let mut deg619 = 0u64;
    if 619 + 4 <= 625 {
        deg619 += 1; // vertex 2
    }
    for r in (3..=625u64).filter(|&r| trial_prime(r)) {
        if r != 619 && r + 619 <= 625 {
            deg619 += 1;
        }
    }
    assert_eq!(deg619, 3);

    let pattern = fast_degree_pattern(Family::Alt, 625, &s).unwrap();
    assert_eq!(pattern.degree_of(2), Some(deg2));
    assert_eq!(pattern.degree_of(619), Some(deg619));
    println!(
        "PASS criterion 8: spot values 156 / 114 / 113 / 3 confirmed against counting oracles"
    );
}

#[test]
fn a09_t_invariance() {
    for (alpha, p) in [(4u32, 619u64), (6, 15619)] {
        let s = sieve(p + 6).unwrap();
        let order = FactoredInteger::from_pairs([(2, 1), (5, alpha as u64)]).unwrap();
        let t_plain = GroupExpr::abstract_group(order.clone(), vec![]).unwrap();
        let t_edge = GroupExpr::abstract_group(order, vec![(2, 5)]).unwrap();
        let left = od_pair(&GroupExpr::product(GroupExpr::Alt(p + 5), t_plain), &s).unwrap();
        let right = od_pair(&GroupExpr::product(GroupExpr::Alt(p + 5), t_edge), &s).unwrap();
        assert_eq!(left, right, "alpha = {alpha}");
    }
    println!("PASS criterion 9: OD data of Alt(p+5) x T is identical for both GK(T) variants");
}
