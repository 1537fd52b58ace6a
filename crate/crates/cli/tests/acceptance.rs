//! End-to-end acceptance checks. Prints one PASS/FAIL line per criterion
//! and exits non-zero when any criterion fails.

use std::cmp::Ordering;
use std::process::Command;
use std::sync::Mutex;
use std::time::{Duration, Instant};

use hcstd::coeff::DomainSpec;
use hcstd::corner::{HighestCorner, Staircase};
use hcstd::corpus::{example, random_ideal};
use hcstd::ring::{jacobian_ideal, parse_polynomial, IdealPresentation, Monomial, OrderSpec, PolyRing};
use hcstd::semistd::{hc_std, AlgorithmReport, HcStdConfig, PointOverride, SemiStdError};
use hcstd_cli::parse_session;

struct Verdict {
    pass: bool,
    detail: String,
}

fn verdict(pass: bool, detail: impl Into<String>) -> Verdict {
    Verdict {
        pass,
        detail: detail.into(),
    }
}

fn secs(d: Duration) -> String {
    format!("{:.1} s", d.as_secs_f64())
}

fn session_ideal(text: &str) -> IdealPresentation {
    parse_session(text).expect("session parses").target_ideal(None).expect("ideal").clone()
}

/// Reports gathered by criteria 1-4 for the cross-cutting checks 5-7.
#[derive(Default)]
struct Collected {
    /// Criteria 3-4: every run over `Q`.
    char0: Vec<AlgorithmReport>,
    /// Criteria 1-4: every zero-dimensional reduced basis.
    reduced: Vec<AlgorithmReport>,
    /// Criterion 3: staircases with their corners.
    random_staircases: Vec<(Staircase, HighestCorner)>,
}

fn published_corner(text: &str, expected: &str, limit: Duration, sink: &Mutex<Collected>) -> Verdict {
    let ideal = session_ideal(text);
    let start = Instant::now();
    let cfg = HcStdConfig {
        timeout: Some(limit),
        ..HcStdConfig::default()
    };
    match hc_std(&ideal, &cfg) {
        Ok(r) => {
            let hc = r.hc0.display(r.ring.vars());
            let took = start.elapsed();
            let pass = hc == expected && took < limit;
            sink.lock().unwrap().reduced.push(r);
            verdict(pass, format!("highest corner {hc}, expected {expected}, {}", secs(took)))
        }
        Err(e) => verdict(false, format!("failed: {e}")),
    }
}

fn criterion_1(sink: &Mutex<Collected>) -> Verdict {
    let text = "ring R = 320039,(x,y,z),ds;\n\
                poly F = x3y3+x5y2+2x2y5+x2y2z3+xy7+z9+y13+x25;\n\
                ideal I = jacob(F),F;\n";
    published_corner(text, "x^24*z^7", Duration::from_secs(600), sink)
}

fn criterion_2(sink: &Mutex<Collected>) -> Verdict {
    // Example 5 with t = 1.
    let text = "ring R = 32003,(x,y,z),ds;\n\
                poly F = y10+x7y7+x15+x9y6+2x6y9+x6y6z3+x5y11+z21;\n\
                ideal I = jacob(F);\n";
    published_corner(text, "x^7*y^2*z^37", Duration::from_secs(900), sink)
}

fn basis_strings(r: &AlgorithmReport) -> Vec<String> {
    r.basis.elements.iter().map(|g| g.to_string()).collect()
}

fn criterion_3(sink: &Mutex<Collected>) -> Verdict {
    let start = Instant::now();
    let mut mismatches = Vec::new();
    let mut count = 0;
    for index in 0..60 {
        let gen = random_ideal(2024, index);
        let truncated = hc_std(&gen.ideal, &HcStdConfig::default());
        let untruncated = hc_std(
            &gen.ideal,
            &HcStdConfig {
                no_truncate: true,
                ..HcStdConfig::default()
            },
        );
        match (truncated, untruncated) {
            // Only ideals within the stated size range count.
            (Ok(t), _) if t.d0 > 60 => {}
            (Ok(t), Ok(u)) => {
                count += 1;
                if basis_strings(&t) != basis_strings(&u) {
                    mismatches.push(index);
                }
                let mut c = sink.lock().unwrap();
                c.random_staircases.push((t.staircase.clone(), t.hc0));
                c.char0.push(t.clone());
                c.reduced.push(t);
            }
            _ => mismatches.push(index),
        }
    }
    let took = start.elapsed();
    let pass = mismatches.is_empty() && count >= 50 && took < Duration::from_secs(600);
    verdict(
        pass,
        format!("{count} random ideals, {} mismatches {mismatches:?}, {}", mismatches.len(), secs(took)),
    )
}

fn criterion_4(sink: &Mutex<Collected>) -> Verdict {
    let start = Instant::now();
    let domain = DomainSpec::rationals();
    let ring = PolyRing::new(vec!["x".into(), "y".into(), "z".into()], OrderSpec::NegDegRevLex).unwrap();
    let mut wrong = Vec::new();
    for a in 2..=6u64 {
        for b in 2..=6u64 {
            for c in 2..=6u64 {
                let f = parse_polynomial(&format!("x^{a}+y^{b}+z^{c}"), &ring, &domain).unwrap();
                let ideal = jacobian_ideal(&f, &domain, false);
                match hc_std(&ideal, &HcStdConfig::default()) {
                    Ok(r) => {
                        if r.d0 != (a - 1) * (b - 1) * (c - 1) {
                            wrong.push((a, b, c));
                        }
                        let mut s = sink.lock().unwrap();
                        s.char0.push(r.clone());
                        s.reduced.push(r);
                    }
                    Err(_) => wrong.push((a, b, c)),
                }
            }
        }
    }
    let took = start.elapsed();
    let pass = wrong.is_empty() && took < Duration::from_secs(120);
    verdict(pass, format!("125 Brieskorn polynomials, wrong {wrong:?}, {}", secs(took)))
}

fn criterion_5(sink: &Mutex<Collected>) -> Verdict {
    let c = sink.lock().unwrap();
    let mut checked = 0;
    let mut violations = 0;
    for r in &c.char0 {
        for rec in &r.points_tried {
            if let Some(dp) = rec.dp {
                checked += 1;
                if r.d0 > dp {
                    violations += 1;
                }
            }
        }
    }
    drop(c);
    let ring = PolyRing::new(vec!["x".into(), "y".into()], OrderSpec::NegDegRevLex).unwrap();
    let q = DomainSpec::rationals();
    let gens = vec![
        parse_polynomial("5x-x2", &ring, &q).unwrap(),
        parse_polynomial("y", &ring, &q).unwrap(),
    ];
    let ideal = IdealPresentation::new(q, ring, gens);
    let mut strict = Vec::new();
    for p in (2u32..=97).filter(|&p| hcstd::coeff::is_prime(p as u64)) {
        let cfg = HcStdConfig {
            max_retries: 0,
            overrides: PointOverride {
                primes: vec![p],
                point: None,
            },
            ..HcStdConfig::default()
        };
        let Ok(r) = hc_std(&ideal, &cfg) else {
            violations += 1;
            continue;
        };
        let dp = r.points_tried[0].dp.expect("probe is zero-dimensional");
        checked += 1;
        match r.d0.cmp(&dp) {
            Ordering::Greater => violations += 1,
            Ordering::Less => strict.push(p),
            Ordering::Equal => {}
        }
    }
    let pass = violations == 0 && strict == [5];
    verdict(
        pass,
        format!("{checked} comparisons, {violations} with d0 > dp, strict at {strict:?}"),
    )
}

fn criterion_6(sink: &Mutex<Collected>) -> Verdict {
    let c = sink.lock().unwrap();
    let mut bad = 0;
    let mut elements = 0;
    for r in &c.reduced {
        let Some(hc) = r.hc0.monomial() else { continue };
        let order = r.ring.order();
        for g in &r.basis.elements {
            elements += 1;
            if order.degree(g.lm()) > order.degree(hc) + 1 {
                bad += 1;
            }
        }
    }
    verdict(
        bad == 0 && elements > 0,
        format!("{elements} elements in {} bases, {bad} above deg HC + 1", c.reduced.len()),
    )
}

/// All monomials in `n` variables of degree at most `d`.
fn monomials_up_to(n: usize, d: u32) -> Vec<Monomial> {
    (0..=d).flat_map(|k| hcstd::corpus::monomials_of_degree(n, k)).collect()
}

fn criterion_7(sink: &Mutex<Collected>) -> Verdict {
    let c = sink.lock().unwrap();
    let mut bad = 0;
    for (st, hc) in &c.random_staircases {
        let HighestCorner::Monomial(hc) = hc else {
            bad += 1;
            continue;
        };
        let n = st.nvars();
        let below_inside = monomials_up_to(n, hc.degree() + n as u32)
            .iter()
            .filter(|m| st.order().compare(m, hc) == Ordering::Less)
            .all(|m| st.contains(m));
        if !below_inside || st.contains(hc) {
            bad += 1;
        }
    }
    verdict(
        bad == 0 && !c.random_staircases.is_empty(),
        format!("{} staircases, {bad} corners not minimal", c.random_staircases.len()),
    )
}

fn criterion_8() -> Verdict {
    let ideal = example(1, 100).unwrap().ideal;
    let start = Instant::now();
    if let Err(e) = hc_std(&ideal, &HcStdConfig::default()) {
        return verdict(false, format!("truncated run failed: {e}"));
    }
    let truncated = start.elapsed();
    // Running past six times the truncated time already settles the ratio.
    let cap = (truncated * 6).max(Duration::from_secs(1)).min(Duration::from_secs(1800));
    let cfg = HcStdConfig {
        no_truncate: true,
        timeout: Some(cap),
        ..HcStdConfig::default()
    };
    let start = Instant::now();
    match hc_std(&ideal, &cfg) {
        Ok(_) => {
            let untruncated = start.elapsed();
            let ratio = untruncated.as_secs_f64() / truncated.as_secs_f64();
            verdict(
                ratio >= 5.0,
                format!("truncated {}, untruncated {}, speedup {ratio:.1}", secs(truncated), secs(untruncated)),
            )
        }
        Err(SemiStdError::Timeout) => verdict(
            truncated < Duration::from_secs(300),
            format!(
                "truncated {}, untruncated stopped after {}, speedup > {:.1}",
                secs(truncated),
                secs(cap),
                cap.as_secs_f64() / truncated.as_secs_f64()
            ),
        ),
        Err(e) => verdict(false, format!("untruncated run failed: {e}")),
    }
}

fn criterion_9() -> Verdict {
    let ideal = example(6, 100).unwrap().ideal;
    let limit = Duration::from_secs(1800);
    let cfg = HcStdConfig {
        timeout: Some(limit),
        ..HcStdConfig::default()
    };
    let start = Instant::now();
    match hc_std(&ideal, &cfg) {
        Ok(r) => verdict(
            Some(r.d0) == r.dp && !r.fallback,
            format!("d0 {} dp {:?}, {}", r.d0, r.dp, secs(start.elapsed())),
        ),
        Err(e) => verdict(false, format!("failed after {}: {e}", secs(start.elapsed()))),
    }
}

fn criterion_10() -> Verdict {
    let bin = env!("CARGO_BIN_EXE_hcstd");
    let dir = tempfile::tempdir().expect("temporary directory");
    // Both the prime and the parameter value come from the seed here.
    let session = dir.path().join("param.sing");
    std::fs::write(&session, "ring r = (0,t),(x,y),ds;\nideal i = t*x2+y3, x*y+x3/t;\n").expect("session written");
    let session = session.to_str().expect("utf-8 path");
    let runs = [
        vec!["run", "--example", "1", "--json"],
        vec!["run", "--example", "1", "--json", "--seed", "7"],
        vec!["run", session, "--json", "--seed", "7"],
    ];
    for args in &runs {
        let outputs: Vec<Vec<u8>> = (0..2)
            .map(|_| Command::new(bin).args(args).output().expect("binary runs").stdout)
            .collect();
        if outputs[0].is_empty() || outputs[0] != outputs[1] {
            return verdict(false, format!("`{}` differs between runs", args.join(" ")));
        }
    }
    verdict(true, format!("{} configurations byte-identical across two runs", runs.len()))
}

fn main() {
    let sink = Mutex::new(Collected::default());
    let checks: [(u32, &dyn Fn() -> Verdict); 10] = [
        (1, &|| criterion_1(&sink)),
        (2, &|| criterion_2(&sink)),
        (3, &|| criterion_3(&sink)),
        (4, &|| criterion_4(&sink)),
        (5, &|| criterion_5(&sink)),
        (6, &|| criterion_6(&sink)),
        (7, &|| criterion_7(&sink)),
        (8, &criterion_8),
        (9, &criterion_9),
        (10, &criterion_10),
    ];
    // One at a time, so that each timing is measured on an idle machine.
    let mut failed = 0;
    for (id, check) in checks {
        let v = check();
        println!("criterion {id:>2}: {} - {}", if v.pass { "PASS" } else { "FAIL" }, v.detail);
        if !v.pass {
            failed += 1;
        }
    }
    println!("{} of {} criteria passed", checks.len() - failed, checks.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
