//! Evaluate both tables at λ = 0 and recover the classical Stirling
//! triangles, including the alternating sign structure of the first kind.
//!
//! Run with: `cargo run --example classical_limit`

use num_bigint::BigInt;
use num_traits::Zero;

use stirling_lambda::stirling::{
    build_s1_table, build_s2_table, classical_limit, classical_s1, classical_s2,
};

fn main() {
    let n_max = 7;
    let s2_at_zero = classical_limit(&build_s2_table(n_max));
    let s1_at_zero = classical_limit(&build_s1_table(n_max));

    println!("S2(n, k) at l = 0 (set partition counts):");
    for (n, row) in s2_at_zero.iter().enumerate() {
        let cells: Vec<String> = row.iter().map(BigInt::to_string).collect();
        println!("  n = {n}:  {}", cells.join(" "));
    }

    println!("\nS1(n, k) at l = 0 (signed cycle counts):");
    for (n, row) in s1_at_zero.iter().enumerate() {
        let cells: Vec<String> = row.iter().map(BigInt::to_string).collect();
        println!("  n = {n}:  {}", cells.join(" "));
    }

    // the limits coincide with tables built by the classical recurrences
    assert_eq!(s2_at_zero, classical_s2(n_max));
    assert_eq!(s1_at_zero, classical_s1(n_max));
    println!("\nboth limits match the classical recurrences.");

    for (n, row) in s1_at_zero.iter().enumerate() {
        for (k, value) in row.iter().enumerate() {
            let signed = if (n - k) % 2 == 0 { value.clone() } else { -value };
            assert!(signed >= BigInt::zero());
        }
    }
    println!("(-1)^(n-k) S1(n, k) is nonnegative throughout.");
}
