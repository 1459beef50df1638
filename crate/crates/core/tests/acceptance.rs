//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
//! failure.

use std::time::{Duration, Instant};

use seaweed::search::{self, BoundKind, VerificationReport};
use seaweed::{comp, reduction, Composition, Meander};

type Outcome = Result<String, String>;

fn reports_outcome(reports: &[VerificationReport]) -> Outcome {
    let instances: u64 = reports.iter().map(|r| r.instances).sum();
    let failed: Vec<String> = reports
        .iter()
        .filter(|r| !r.passed())
        .map(|r| {
            let f = &r.failures[0];
            format!(
                "{} ({} failures, first {}: expected {}, got {})",
                r.name,
                r.failures.len(),
                f.input,
                f.expected,
                f.got
            )
        })
        .collect();
    if failed.is_empty() {
        Ok(format!("{} checks, {instances} instances", reports.len()))
    } else {
        Err(failed.join("; "))
    }
}

fn run_checks(names: &[&str], bound: impl Fn(&search::Check) -> u64) -> Outcome {
    let reports: Vec<VerificationReport> = names
        .iter()
        .map(|name| {
            let check = search::find_check(name).expect("registered");
            check.run(bound(check))
        })
        .collect();
    reports_outcome(&reports)
}

fn worked_example() -> Outcome {
    let (a, b) = (comp![111, 13, 79], comp![165, 18, 20]);
    let meander = Meander::new(&a, &b).map_err(|e| e.to_string())?.index();
    let embedded = reduction::seaweed_to_parabolic(&a, &b).map_err(|e| e.to_string())?;
    let trace = reduction::index_via_reduction(&embedded);
    if meander != 4 || trace.index != 4 {
        return Err(format!("meander {meander}, reduction {}", trace.index));
    }
    let chain = [
        comp![111, 13, 20, 18, 165],
        comp![111, 13, 20, 18, 3],
        comp![3, 13, 20, 18, 3],
    ];
    let visited = trace.visited();
    let found = visited.windows(chain.len()).any(|w| w == chain);
    if !found {
        return Err(format!("chain not visited in order: {visited:?}"));
    }
    Ok(format!(
        "index 4 by both engines, {} compositions visited",
        visited.len()
    ))
}

fn example_five_four() -> Outcome {
    let cs: [Composition; 3] = [comp![5, 1, 2, 4], comp![5, 1, 4], comp![5, 4]];
    for c in &cs {
        let m = Meander::parabolic(c).map_err(|e| e.to_string())?;
        let r = reduction::parabolic_index(c);
        let sig = m.equivalence_signature();
        if m.index() != 1 || r != 1 || sig != vec![1] {
            return Err(format!(
                "p({c}): meander {}, reduction {r}, signature {sig:?}",
                m.index()
            ));
        }
    }
    Ok("index 1 and signature {1} for all three".into())
}

fn triple_engine() -> Outcome {
    let report = search::check_oracle(7, 5, 0);
    reports_outcome(std::slice::from_ref(&report))
        .map(|s| format!("{s} (every pair with n ≤ 7, 5 trials, seed 0)"))
}

fn defaults(check: &search::Check) -> u64 {
    check.default_bound
}

struct Criterion {
    id: u32,
    title: &'static str,
    limit: Option<Duration>,
    run: fn() -> Outcome,
}

fn main() {
    let criteria = [
        Criterion {
            id: 1,
            title: "worked example q(111,13,79|165,18,20) has index 4 and the expected chain",
            limit: Some(Duration::from_millis(100)),
            run: worked_example,
        },
        Criterion {
            id: 2,
            title: "p(5,1,2,4), p(5,1,4), p(5,4) have index 1 and signature {1}",
            limit: Some(Duration::from_millis(100)),
            run: example_five_four,
        },
        Criterion {
            id: 3,
            title: "meander, reduction and Kirillov form agree for all pairs n ≤ 7",
            limit: Some(Duration::from_secs(60)),
            run: triple_engine,
        },
        Criterion {
            id: 4,
            title: "two- and three-block gcd formulas (sums ≤ 40 and ≤ 30)",
            limit: Some(Duration::from_secs(10)),
            run: || run_checks(&["two-blocks", "three-blocks"], defaults),
        },
        Criterion {
            id: 5,
            title: "(a,a,a,b) formula, parity form and index-1 criterion (a, b ≤ 20)",
            limit: Some(Duration::from_secs(10)),
            run: || run_checks(&["aaab"], |_| 20),
        },
        Criterion {
            id: 6,
            title: "(a^m, b) formula and Frobenius criterion (a, b ≤ 10, m ≤ 8)",
            limit: Some(Duration::from_secs(20)),
            run: || run_checks(&["run", "run-frobenius"], |_| 10),
        },
        Criterion {
            id: 7,
            title: "four-block case formulas (sum ≤ 28)",
            limit: Some(Duration::from_secs(30)),
            run: || run_checks(&["four-blocks"], |_| 28),
        },
        Criterion {
            id: 8,
            title: "geometric, scaling and Frobenius family constructions",
            limit: None,
            run: || {
                run_checks(
                    &["geometric", "scaling", "frobenius-family", "three-families"],
                    defaults,
                )
            },
        },
        Criterion {
            id: 9,
            title: "maximal-cycle structure suite, n ≤ 12",
            limit: None,
            run: || {
                run_checks(
                    &[
                        "dimension-sum",
                        "cycle-bound",
                        "single-cycle-gcd",
                        "two-bouts",
                        "segment-endpoints",
                    ],
                    |_| 12,
                )
            },
        },
        Criterion {
            id: 10,
            title: "identity registry, n ≤ 12",
            limit: None,
            run: || {
                let names: Vec<&str> = search::checks()
                    .iter()
                    .filter(|c| c.kind == BoundKind::Size)
                    .map(|c| c.name)
                    .collect();
                run_checks(&names, |c| c.default_bound.max(12))
            },
        },
    ];

    let mut failed = 0;
    for c in &criteria {
        let start = Instant::now();
        let outcome = (c.run)();
        let elapsed = start.elapsed();
        let outcome = match (outcome, c.limit) {
            (Ok(_), Some(limit)) if elapsed > limit => {
                Err(format!("took {elapsed:.2?}, limit {limit:?}"))
            }
            (o, _) => o,
        };
        match outcome {
            Ok(detail) => println!("PASS {:>2} {} [{elapsed:.2?}] {detail}", c.id, c.title),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {} [{elapsed:.2?}] {why}", c.id, c.title);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
