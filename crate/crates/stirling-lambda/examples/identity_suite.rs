//! Run the full registry of identity checks and print one report line per
//! check, exactly as `stirling-lambda verify --theorem all` does.
//!
//! Run with: `cargo run --example identity_suite`

use stirling_lambda::identities::check_all;

fn main() {
    let k_max = 8;
    println!("running every registered check at k_max = {k_max}:\n");
    let reports = check_all(k_max);
    for report in &reports {
        println!("{report}");
    }
    let passed = reports.iter().filter(|r| r.passed()).count();
    println!("\n{passed}/{} checks passed", reports.len());
    assert_eq!(passed, reports.len());
}
