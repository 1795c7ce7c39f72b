//! Exit criteria for the toolkit. Every criterion runs, prints one
//! PASS/FAIL line, and the test fails if any criterion fails.
//!
//! Run with `cargo test --test acceptance -- --nocapture` to see the table.

mod common;

use std::io::Write;
use std::panic::{self, AssertUnwindSafe};
use std::process::{Command, Stdio};
use std::time::{Duration, Instant};

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use textalgebra::cli;
use textalgebra::fib::{
    build_explicit, count_occurrences, scan_count, stream_count, summary_concat, summary_of_string,
    FibQuery,
};
use textalgebra::poly::{multiply, simplify_sorted, simplify_unsorted, Polynomial, Term};
use textalgebra::tree::{compute_layout, parse_tree_sexpr, subtree_width, LayoutKind};

const SAMPLE_POLY_IN: &str = "-yx8+9x3-1+y\nx5y+1+x3\n";
const CLI_BUDGET: Duration = Duration::from_millis(10);
const SWEEP_BUDGET: Duration = Duration::from_secs(60);

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

/// Runs the CLI entry point in-process, returning (exit, stdout, elapsed).
fn timed_cli(args: &[&str], stdin: &str) -> (i32, String, Duration) {
    let mut full = vec!["textalgebra"];
    full.extend_from_slice(args);
    let mut input = stdin.as_bytes();
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let start = Instant::now();
    let code = cli::run(full, &mut input, &mut out, &mut err);
    let elapsed = start.elapsed();
    (code, String::from_utf8(out).unwrap(), elapsed)
}

fn binary(args: &[&str], stdin: &str) -> (i32, String) {
    let mut child = Command::new(env!("CARGO_BIN_EXE_textalgebra"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    let out = child.wait_with_output().unwrap();
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
    )
}

fn trimmed_lines(s: &str) -> Vec<String> {
    s.lines().map(|l| l.trim_end().to_owned()).collect()
}

fn golden_polynomial() -> Outcome {
    let expected = trimmed_lines(&common::data("sample_poly.out"));
    let (code, out) = binary(&["polymul"], SAMPLE_POLY_IN);
    ensure(code == 0, format!("binary exit {code}"))?;
    ensure(
        trimmed_lines(&out) == expected,
        format!("binary output {out:?}"),
    )?;
    // Warm once, then time the in-process path.
    timed_cli(&["polymul"], SAMPLE_POLY_IN);
    let (code, out, elapsed) = timed_cli(&["polymul"], SAMPLE_POLY_IN);
    ensure(
        code == 0 && trimmed_lines(&out) == expected,
        "in-process output differs",
    )?;
    ensure(elapsed < CLI_BUDGET, format!("took {elapsed:?}"))?;
    Ok(format!("two lines match, {elapsed:?}"))
}

fn simplification_example() -> Outcome {
    let raw = Polynomial::new(vec![Term::new(40, 2, 3), Term::new(-38, 2, 3)]);
    let expected = Polynomial::new(vec![Term::new(2, 2, 3)]);
    ensure(
        simplify_sorted(&raw).unwrap() == expected,
        "sorted strategy",
    )?;
    ensure(
        simplify_unsorted(&raw).unwrap() == expected,
        "unsorted strategy",
    )?;
    Ok("40x2y3 - 38x2y3 -> 2x2y3".into())
}

fn fibonacci_headline() -> Outcome {
    let (code, out) = binary(&["fibcount", "AB", "37", "--mode", "algebraic"], "");
    ensure(
        code == 0 && out == "14930352\n",
        format!("binary printed {out:?}"),
    )?;
    timed_cli(&["fibcount", "AB", "37", "--mode", "algebraic"], "");
    let (code, out, elapsed) = timed_cli(&["fibcount", "AB", "37", "--mode", "algebraic"], "");
    ensure(
        code == 0 && out == "14930352\n",
        format!("in-process printed {out:?}"),
    )?;
    ensure(elapsed < CLI_BUDGET, format!("took {elapsed:?}"))?;
    Ok(format!("14930352 in {elapsed:?}"))
}

fn exhaustive_agreement() -> Outcome {
    let start = Instant::now();
    let patterns = common::ab_patterns(6);
    ensure(
        patterns.len() == 126,
        format!("{} patterns", patterns.len()),
    )?;
    let mut checked = 0;
    for pattern in &patterns {
        for n in 0..=22 {
            let q = FibQuery::new(pattern.clone(), n).unwrap();
            let naive = scan_count(&build_explicit(n).unwrap(), pattern).unwrap();
            let stream = stream_count(&q).unwrap();
            let algebraic = count_occurrences(&q).unwrap();
            ensure(
                naive == stream && stream == algebraic,
                format!("{pattern} F{n}: naive {naive}, stream {stream}, algebraic {algebraic}"),
            )?;
            checked += 1;
        }
    }
    let elapsed = start.elapsed();
    ensure(elapsed < SWEEP_BUDGET, format!("sweep took {elapsed:?}"))?;
    Ok(format!("{checked} queries agree in {elapsed:?}"))
}

fn homomorphism_fuzz() -> Outcome {
    let mut rng = StdRng::seed_from_u64(0x5eed_f1b0);
    for case in 0..10_000 {
        let plen = rng.gen_range(1..=20);
        let pattern = common::random_ab(&mut rng, plen);
        let ulen = rng.gen_range(2 * plen..=2 * plen + 40);
        let vlen = rng.gen_range(2 * plen..=2 * plen + 40);
        let (u, v) = (
            common::random_ab(&mut rng, ulen),
            common::random_ab(&mut rng, vlen),
        );
        let direct = summary_of_string(&format!("{u}{v}"), &pattern).unwrap();
        let composed = summary_concat(
            &summary_of_string(&u, &pattern).unwrap(),
            &summary_of_string(&v, &pattern).unwrap(),
            &pattern,
        )
        .unwrap();
        ensure(
            direct == composed,
            format!("case {case}: S={pattern} u={u} v={v}"),
        )?;
    }
    Ok("10000 cases, 0 failures".into())
}

fn golden_trees() -> Outcome {
    let input = common::data("sample_tree.sexp");
    let bars = common::strip_common_indent(&common::data("sample_tree_bars.txt"));
    let no_bars = common::strip_common_indent(&common::data("sample_tree_no_bars.txt"));
    let (code, out) = binary(&["treedraw"], &input);
    ensure(
        code == 0 && out == bars,
        format!("bars drawing differs:\n{out}"),
    )?;
    let (code, out) = binary(&["treedraw", "--no-bars"], &input);
    ensure(
        code == 0 && out == no_bars,
        format!("no-bars drawing differs:\n{out}"),
    )?;
    Ok("both drawings byte-identical".into())
}

fn random_trees() -> Vec<textalgebra::tree::TreeNode> {
    let mut rng = StdRng::seed_from_u64(0x7ee5);
    (0..1000)
        .map(|_| common::random_tree(&mut rng, 8))
        .collect()
}

fn width_equivalence() -> Outcome {
    let mut nodes = 0;
    for tree in random_trees() {
        let layout = compute_layout(&tree, LayoutKind::Baseline);
        for (node, place) in tree.preorder().iter().zip(layout.nodes()) {
            ensure(
                subtree_width(node) == place.triple.total(),
                format!("width mismatch at {node}"),
            )?;
            nodes += 1;
        }
    }
    Ok(format!("{nodes} nodes over 1000 trees"))
}

fn compact_dominance() -> Outcome {
    for tree in random_trees() {
        let b = compute_layout(&tree, LayoutKind::Baseline).width();
        let c = compute_layout(&tree, LayoutKind::Compact).width();
        ensure(c <= b, format!("compact {c} > baseline {b} for {tree}"))?;
    }
    let atan = parse_tree_sexpr(common::SAMPLE_ATAN).unwrap();
    let b = compute_layout(&atan, LayoutKind::Baseline).width();
    let c = compute_layout(&atan, LayoutKind::Compact).width();
    ensure(
        (c, b) == (11, 14),
        format!("atan subtree compact {c}, baseline {b}"),
    )?;
    Ok(format!("1000 trees; atan subtree {c} vs {b}"))
}

fn numeric_oracle() -> Outcome {
    let mut rng = StdRng::seed_from_u64(0x9017);
    for case in 0..1000 {
        let p1 = simplify_sorted(&common::random_raw_poly(&mut rng, 8, 9, 99)).unwrap();
        let p2 = simplify_sorted(&common::random_raw_poly(&mut rng, 8, 9, 99)).unwrap();
        let product = simplify_sorted(&multiply(&p1, &p2).unwrap()).unwrap();
        for _ in 0..20 {
            let (x, y) = (rng.gen_range(-5..=5), rng.gen_range(-5..=5));
            let lhs = common::evaluate(&product, x, y);
            let rhs = common::evaluate(&p1, x, y) * common::evaluate(&p2, x, y);
            ensure(
                lhs == rhs,
                format!("case {case} at ({x}, {y}): {lhs} != {rhs}"),
            )?;
        }
    }
    Ok("1000 pairs x 20 points exact".into())
}

fn cleanup_equivalence() -> Outcome {
    let mut rng = StdRng::seed_from_u64(0xc1ea);
    for case in 0..10_000 {
        let raw = common::random_raw_poly(&mut rng, 30, 5, 20);
        let u = simplify_unsorted(&raw).unwrap();
        let s = simplify_sorted(&raw).unwrap();
        ensure(u == s, format!("case {case}: {raw:?}"))?;
    }
    Ok("10000 raw polynomials".into())
}

#[test]
fn acceptance() {
    let criteria: [Criterion; 10] = [
        ("golden polynomial case", golden_polynomial),
        ("simplification example", simplification_example),
        ("fibonacci headline number", fibonacci_headline),
        ("exhaustive oracle agreement", exhaustive_agreement),
        ("homomorphism fuzz", homomorphism_fuzz),
        ("golden tree renders", golden_trees),
        ("subtree width equivalence", width_equivalence),
        ("compact dominance", compact_dominance),
        ("numeric-evaluation oracle", numeric_oracle),
        ("cleanup-strategy equivalence", cleanup_equivalence),
    ];
    let mut failures = 0;
    for (name, check) in criteria {
        let outcome =
            panic::catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|_| Err("panicked".into()));
        match outcome {
            Ok(detail) => println!("PASS  {name}: {detail}"),
            Err(why) => {
                failures += 1;
                println!("FAIL  {name}: {why}");
            }
        }
    }
    assert_eq!(failures, 0, "{failures} acceptance criteria failed");
}
