//! Runs every acceptance criterion and prints one pass/fail line each.
//! Exits non-zero if any criterion fails.

use semigroup_rank::selftest;

fn main() {
    let checks: [fn() -> selftest::CriterionResult; 11] = [
        selftest::criterion_1,
        selftest::criterion_2,
        selftest::criterion_3,
        selftest::criterion_4,
        selftest::criterion_5,
        selftest::criterion_6,
        selftest::criterion_7,
        selftest::criterion_8,
        selftest::criterion_9,
        selftest::criterion_10,
        selftest::criterion_11,
    ];
    let mut failed = 0;
    for check in checks {
        let result = check();
        println!("{result}");
        if !result.passed {
            failed += 1;
        }
    }
    println!("acceptance: {} passed, {failed} failed", checks.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
