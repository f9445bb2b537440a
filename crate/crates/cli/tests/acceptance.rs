//! One line per acceptance criterion. Run with
//! `cargo test -p rankrev-cli --test acceptance -- --nocapture`.

use std::collections::BTreeMap;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::PathBuf;
use std::time::Instant;

use rankrev::verify::{
    check_agm, check_degree_conditions, check_iteration_axiom, check_ocf_reversibility,
    check_order_preservation, counterexample_verify, enumerate_normalized_ocfs,
    enumerate_ranked_models, find_irreversibility, replay, representation_check,
    representing_models, Axiom, CounterexampleFixture, Limits, RevisionTable,
};
use rankrev::{
    ocf_from_rpm, rpm_from_ocf, spohn_conditionalize, Attitude, EpistemicInput, FlipRule,
    Lexicographic, Natural, Proposition, RankedModel, RevisionRule, TotalContent,
};
use rankrev_cli::{
    execute, parse_expression, parse_model, Scope, EXIT_INPUT, EXIT_OK, EXIT_VIOLATION,
};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn four_world_models() -> Vec<RankedModel> {
    enumerate_ranked_models(4, 6).unwrap()
}

fn contingent(width: usize) -> impl Iterator<Item = Proposition> {
    Proposition::all(width).filter(Proposition::is_contingent)
}

fn tests_dir(rel: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests")
        .join(rel)
}

fn agm_soundness() -> Outcome {
    let models = four_world_models();
    ensure!(
        models.len() == 75,
        "expected 75 models, found {}",
        models.len()
    );
    let limits = Limits::default();
    let mut cases = 0;
    for m in &models {
        let report = check_agm(m, &limits).map_err(|e| e.to_string())?;
        ensure!(report.passed(), "{:?}", report.witness);
        ensure!(
            report.cases == 16 + 256,
            "{} cases for {:?}",
            report.cases,
            m
        );
        cases += report.cases;
    }
    Ok(format!(
        "B1-B8 hold on all 75 four-world models ({cases} cases)"
    ))
}

fn counterexample() -> Outcome {
    for fixture in [
        CounterexampleFixture::standard(),
        CounterexampleFixture::generalized([2, 1, 1, 1]).map_err(|e| e.to_string())?,
    ] {
        let CounterexampleFixture { r1, r2, r3, .. } = &fixture;
        let report = counterexample_verify(&fixture, 3).map_err(|e| e.to_string())?;
        ensure!(report.report.passed(), "{:?}", report.report.witness);
        let only_r3 = vec![r3.clone()];
        ensure!(
            report.believe_from_r1 == only_r3,
            "believe from r1: {:?}",
            report.believe_from_r1
        );
        ensure!(
            report.believe_from_r2 == only_r3,
            "believe from r2: {:?}",
            report.believe_from_r2
        );
        let back = |m: &RankedModel| m == r1 || m == r2;
        ensure!(
            !report
                .believe_from_r3
                .iter()
                .chain(&report.suspend_from_r3)
                .any(back),
            "r3 returns to a history under believe or suspend"
        );
        ensure!(
            report.disbelieve_from_r3.contains(r1) && report.disbelieve_from_r3.contains(r2),
            "disbelieve successors of r3 miss r1 or r2"
        );
    }
    Ok("r1 and r2 both go to r3; only disbelief returns, to either (4 and 5 worlds)".into())
}

fn rule_space() -> Outcome {
    let models = four_world_models();
    let limits = Limits::default();
    let rules: [&dyn RevisionRule; 2] = [&Lexicographic, &Natural];
    let mut cases = 0;
    for rule in rules {
        for m in &models {
            for axiom in [Axiom::B9, Axiom::B10] {
                let r =
                    check_iteration_axiom(rule, axiom, m, &limits).map_err(|e| e.to_string())?;
                ensure!(r.passed(), "{} fails {axiom}: {:?}", rule.name(), r.witness);
                cases += r.cases;
            }
            for prop in contingent(4) {
                for attitude in Attitude::ALL {
                    let input = EpistemicInput::new(prop, attitude);
                    let r = check_order_preservation(rule, m, &input).map_err(|e| e.to_string())?;
                    ensure!(r.passed(), "{} breaks order: {:?}", rule.name(), r.witness);
                    cases += r.cases;
                }
            }
        }
        let witness = find_irreversibility(rule, 4, &limits)
            .map_err(|e| e.to_string())?
            .ok_or_else(|| format!("{} looks reversible", rule.name()))?;
        ensure!(
            replay(&witness, Some(rule)).map_err(|e| e.to_string())?,
            "{} witness does not replay",
            rule.name()
        );
    }
    let flip = models
        .iter()
        .map(|m| check_iteration_axiom(&FlipRule, Axiom::B10, m, &limits))
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| e.to_string())?;
    let witness = flip.iter().find_map(|r| r.witness.clone());
    ensure!(witness.is_some(), "flip passes B10");
    ensure!(
        replay(witness.as_ref().unwrap(), Some(&FlipRule)).map_err(|e| e.to_string())?,
        "flip witness does not replay"
    );
    Ok(format!(
        "lex and natural obey B9, B10 and order ({cases} cases) yet are irreversible; flip fails B10"
    ))
}

fn degrees() -> Outcome {
    let limits = Limits::default();
    for m in four_world_models() {
        let r = check_degree_conditions(&m, &limits).map_err(|e| e.to_string())?;
        ensure!(r.passed(), "{:?}", r.witness);
    }
    let f = CounterexampleFixture::standard();
    for (name, m) in [("r1", &f.r1), ("r2", &f.r2)] {
        let d = m.disbelief_degree(&f.a).map_err(|e| e.to_string())?;
        let dn = m.disbelief_degree(&!f.a).map_err(|e| e.to_string())?;
        ensure!((d, dn) == (1, 0), "{name}: d(A) = {d}, d(~A) = {dn}");
    }
    let start = ocf_from_rpm(&f.r3);
    let mut reached = Vec::new();
    for beta in -3i64..=3 {
        let m = rpm_from_ocf(&spohn_conditionalize(&start, &f.a, beta).map_err(|e| e.to_string())?);
        if m == f.r1 || m == f.r2 {
            reached.push(m);
        }
    }
    reached.dedup();
    ensure!(
        reached.len() <= 1,
        "conditionalizing r3 reaches both r1 and r2"
    );
    Ok("degree conditions hold on 75 models; d(A) = 1 and d(~A) = 0 in r1 and r2; r3 reaches at most one".into())
}

fn spohn_reversibility() -> Outcome {
    let ocfs = enumerate_normalized_ocfs(4, 3, 6).map_err(|e| e.to_string())?;
    let naive = (0u64..256)
        .map(|code| (0..4).map(|i| (code >> (2 * i)) & 3).collect::<Vec<_>>())
        .filter(|k| k.contains(&0))
        .count();
    ensure!(
        ocfs.len() == naive,
        "{} OCFs enumerated, {naive} by filtering",
        ocfs.len()
    );
    let mut cases = 0;
    for ocf in &ocfs {
        for prop in contingent(4) {
            for alpha in -3i64..=3 {
                let r =
                    check_ocf_reversibility(ocf, &prop, alpha, None).map_err(|e| e.to_string())?;
                ensure!(r.report.passed(), "{:?}", r.report.witness);
                cases += 1;
            }
        }
    }
    ensure!(cases == 175 * 14 * 7, "{cases} cases");
    Ok(format!(
        "reverse strength restores every OCF exactly ({cases} cases)"
    ))
}

fn enumeration() -> Outcome {
    let binom = |n: u64, k: u64| (1..=k).fold(1u64, |acc, i| acc * (n + 1 - i) / i);
    let mut a = vec![1u64];
    for n in 1..=5u64 {
        a.push((1..=n).map(|k| binom(n, k) * a[(n - k) as usize]).sum());
    }
    for (n, expected) in a.iter().enumerate().skip(1) {
        let count = enumerate_ranked_models(n, 6)
            .map_err(|e| e.to_string())?
            .len() as u64;
        ensure!(
            count == *expected,
            "n = {n}: {count} models, recursion gives {expected}"
        );
    }
    ensure!(
        a[1..] == [1, 3, 13, 75, 541],
        "recursion gives {:?}",
        &a[1..]
    );
    Ok("1, 3, 13, 75, 541 models for 1..5 worlds, as the recursion predicts".into())
}

fn representation() -> Outcome {
    let limits = Limits::default();
    let models = four_world_models();
    for m in &models {
        let table = RevisionTable::from_model(m, &limits).map_err(|e| e.to_string())?;
        let back = representation_check(&table).map_err(|e| e.to_string())?;
        ensure!(back.as_ref() == Some(m), "{:?} recovered as {:?}", m, back);
    }
    let m = &models[40];
    let mut table = RevisionTable::from_model(m, &limits).map_err(|e| e.to_string())?;
    let a = Proposition::from_indices(4, [0, 1]).unwrap();
    // The revised content leaves the input, which B2 forbids.
    table
        .insert(
            a,
            TotalContent::new(Proposition::from_indices(4, [2]).unwrap()),
        )
        .map_err(|e| e.to_string())?;
    ensure!(
        representation_check(&table)
            .map_err(|e| e.to_string())?
            .is_none(),
        "corrupted table represented"
    );
    ensure!(
        representing_models(&table, 6)
            .map_err(|e| e.to_string())?
            .is_empty(),
        "full scan finds a model for the corrupted table"
    );
    Ok("all 75 tables recover their model; a table violating B2 has none".into())
}

fn parser_and_cli() -> Outcome {
    let fixture = tests_dir("fixtures/standard.bel");
    let model =
        parse_model(&std::fs::read_to_string(&fixture).unwrap()).map_err(|e| e.to_string())?;
    let props: BTreeMap<_, _> = model.prop_map();
    let scope = Scope {
        universe: &model.universe,
        props: &props,
    };
    let denotations = std::fs::read_to_string(tests_dir("golden/denotations.txt")).unwrap();
    let mut checked = 0;
    for line in denotations.lines().filter(|l| !l.starts_with('#')) {
        let (expr, want) = line
            .split_once("  =>  ")
            .ok_or(format!("bad golden line `{line}`"))?;
        let got = parse_expression(expr)
            .and_then(|e| e.denote(&scope))
            .map(|p| model.universe.format_prop(&p))
            .map_err(|d| d.to_string())?;
        ensure!(got == want, "`{expr}` denotes {got}, golden says {want}");
        checked += 1;
    }

    let errors = std::fs::read_to_string(tests_dir("golden/load_errors.txt")).unwrap();
    let bad_dir = tests_dir("fixtures/bad");
    let prefix = format!("error: {}/", bad_dir.display());
    for line in errors.lines() {
        let (file, _) = line.split_once(':').unwrap();
        let path = bad_dir.join(file).to_string_lossy().into_owned();
        let out = execute(["rankrev", "degrees", "--model", &path, "--state", "r"]);
        ensure!(out.code == EXIT_INPUT, "{file}: exit {}", out.code);
        let got = out
            .stderr
            .trim_end()
            .strip_prefix(&prefix)
            .unwrap_or(&out.stderr);
        ensure!(got == line, "{file}: `{got}` vs golden `{line}`");
        checked += 1;
    }

    let golden = std::fs::read_to_string(tests_dir("golden/counterexample.txt")).unwrap();
    let out = execute(["rankrev", "counterexample"]);
    ensure!(
        out.code == EXIT_OK && out.stdout == golden,
        "counterexample report differs from golden"
    );

    let fixture = fixture.to_string_lossy().into_owned();
    let exits = [
        (
            vec![
                "rankrev",
                "check",
                "--model",
                &fixture,
                "--axioms",
                "agm,b9,b10,order",
            ],
            EXIT_OK,
        ),
        (
            vec!["rankrev", "check", "--model", &fixture, "--state", "r1"],
            EXIT_VIOLATION,
        ),
        (
            vec![
                "rankrev", "check", "--model", &fixture, "--rule", "nonsense",
            ],
            EXIT_INPUT,
        ),
        (vec!["rankrev", "enumerate", "--worlds", "4"], EXIT_OK),
    ];
    for (args, code) in exits {
        let out = execute(&args);
        ensure!(
            out.code == code,
            "{args:?} exited {}, expected {code}",
            out.code
        );
    }
    Ok(format!(
        "{checked} golden lines, byte-exact counterexample report, exit codes 0/1/2"
    ))
}

#[test]
fn acceptance() {
    let criteria: [Criterion; 8] = [
        ("AGM soundness", agm_soundness),
        ("counterexample", counterexample),
        ("rule space", rule_space),
        ("degrees", degrees),
        ("Spohn reversibility", spohn_reversibility),
        ("enumeration", enumeration),
        ("representation", representation),
        ("parser and CLI", parser_and_cli),
    ];
    let mut failures = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome =
            catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {}: PASS  {name}: {detail} [{secs:.2}s]", i + 1),
            Err(why) => {
                failures += 1;
                println!("criterion {}: FAIL  {name}: {why} [{secs:.2}s]", i + 1);
            }
        }
    }
    assert_eq!(failures, 0, "{failures} acceptance criteria failed");
}
