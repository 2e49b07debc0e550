//! The degenerate exponential and the generating-function description of
//! the second-kind columns, plus the equivalent alternating binomial sums.
//!
//! Run with: `cargo run --example generating_functions`

use num_traits::One;

use stirling_lambda::exactnum::LambdaPoly;
use stirling_lambda::series::{alternating_sum_check, degenerate_exp, gf_check};

fn main() {
    let order = 6;
    let e = degenerate_exp(&LambdaPoly::one(), order);
    println!("degenerate exponential e_l(t), coefficients of t^n:");
    for n in 0..=order {
        println!("  t^{n}: {}", e.coeff(n));
    }

    println!("\n(e_l(t) - 1)^k / k! against the S2 columns:");
    for k in 0..=order {
        let report = gf_check(k, order).unwrap();
        println!("  {report}");
        assert!(report.passed());
    }

    println!("\nalternating binomial sums against k! * S2(n, k):");
    for n in 0..=4 {
        for k in 0..=4 {
            let report = alternating_sum_check(n, k);
            assert!(report.passed(), "{report}");
        }
    }
    println!("  all pairs n, k <= 4 agree exactly.");
}
