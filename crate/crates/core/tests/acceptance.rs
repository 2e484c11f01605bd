//! Acceptance criteria: one PASS/FAIL line per criterion.
//!
//! Criteria 1-3 ask for an exact match with the published tables. Those
//! tables print 1 at every length prime to p that has an inverse pair of
//! cyclotomic cosets, where the true count is 3^(pairs); the brute-force
//! oracle confirms 3 at n = 7 over Z4 and at n = 3 over GR(4,2). Such rows
//! are reported as FAIL, and the test asserts every other row matches.

use std::io::Write;
use std::time::Duration;

use grcodes::cli;
use grcodes::verify::{self, TABLE_GR4_2, TABLE_Z4, TABLE_Z9};

const BUDGETS: [u64; 10] = [5, 5, 5, 60, 60, 600, 60, 60, 60, 30];

// Table rows as printed by `table --format tsv`.
fn cli_table(p: u64, s: usize) -> Vec<String> {
    let (p, s) = (p.to_string(), s.to_string());
    let args = ["grcodes", "table", "--p", &p, "--s", &s, "--max", "40", "--format", "tsv"];
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = cli::run_with(args, None, &mut out, &mut err);
    assert_eq!(code, 0, "{}", String::from_utf8_lossy(&err));
    String::from_utf8(out)
        .unwrap()
        .lines()
        .enumerate()
        .map(|(i, line)| {
            let (n, c) = line.split_once('\t').expect("tab-separated row");
            assert_eq!(n.parse::<usize>().unwrap(), i + 1);
            c.to_string()
        })
        .collect()
}

// Strict comparison of the CLI table against the published one.
fn strict_table(p: u64, s: usize, published: &[u64; 40]) -> Result<(), String> {
    let rows = cli_table(p, s);
    let bad: Vec<String> = rows
        .iter()
        .zip(published)
        .enumerate()
        .filter(|(_, (got, want))| **got != want.to_string())
        .map(|(i, (got, want))| {
            let n = i as u64 + 1;
            let tag = if verify::is_known_erratum(p, s, n, *want) { " erratum" } else { "" };
            format!("n={n}: {got} vs {want}{tag}")
        })
        .collect();
    if bad.is_empty() {
        Ok(())
    } else {
        Err(format!("{} of 40 rows differ from the published table [{}]", bad.len(), bad.join("; ")))
    }
}

#[test]
fn acceptance() {
    let tables = [(2, 1, TABLE_Z4), (3, 1, TABLE_Z9), (2, 2, TABLE_GR4_2)];
    let mut failures = Vec::new();
    writeln!(std::io::stdout().lock()).unwrap();
    for (i, check) in verify::criteria().iter().enumerate() {
        let mut outcome = verify::execute(check);
        let budget = Duration::from_secs(BUDGETS[i]);
        if outcome.passed() && outcome.elapsed > budget {
            outcome.result = Err(format!("took {:?}, budget {:?}", outcome.elapsed, budget));
        }
        // erratum-aware check must pass; the strict one is reported as is
        if !outcome.passed() {
            failures.push(outcome.name);
        } else if i < 3 {
            let (p, s, published) = tables[i];
            outcome.result = strict_table(p, s, &published);
        }
        // written to the handle directly so the lines survive output capture
        let line = match &outcome.result {
            Ok(()) => format!("PASS {:>2} {} ({:.2?})", i + 1, outcome.name, outcome.elapsed),
            Err(msg) => format!("FAIL {:>2} {} ({:.2?}): {msg}", i + 1, outcome.name, outcome.elapsed),
        };
        writeln!(std::io::stdout().lock(), "{line}").unwrap();
    }
    assert!(failures.is_empty(), "failed: {failures:?}");
}

#[test]
fn erratum_rows_agree_with_brute_force() {
    use grcodes::duality::DualKind;
    use grcodes::oracle::Oracle;
    for (p, s, n) in [(2u64, 1usize, 7usize), (2, 2, 3)] {
        let o = Oracle::new(p, s, n).unwrap();
        let self_dual = o
            .brute_ideals()
            .iter()
            .filter(|c| o.brute_dual(c, DualKind::Euclidean).unwrap() == **c)
            .count();
        let formula = grcodes::counting::count_e_composite(p, s, n as u64).unwrap();
        assert_eq!(num_bigint::BigUint::from(self_dual), formula, "({p},{s},{n})");
        assert_eq!(self_dual, 3);
    }
}
