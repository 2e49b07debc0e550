//! Build the two degenerate Stirling triangles, print them symbolically,
//! evaluate entries at a rational λ, and cross-check a row against the
//! independent basis-change oracle.
//!
//! Run with: `cargo run --example stirling_tables`

use stirling_lambda::exactnum::rat;
use stirling_lambda::stirling::{build_s1_table, build_s2_table, s2_oracle};

fn main() {
    let n_max = 5;
    let s2 = build_s2_table(n_max);
    let s1 = build_s1_table(n_max);

    println!("second kind, S2(n, k) as polynomials in l:");
    for n in 0..=n_max {
        let row: Vec<String> = s2.row(n).iter().map(|p| p.to_string()).collect();
        println!("  n = {n}:  {}", row.join("  |  "));
    }

    println!("\nfirst kind, S1(n, k):");
    for n in 0..=n_max {
        let row: Vec<String> = s1.row(n).iter().map(|p| p.to_string()).collect();
        println!("  n = {n}:  {}", row.join("  |  "));
    }

    let lam = rat(1, 2);
    println!("\nsecond kind evaluated at l = 1/2:");
    for n in 0..=n_max {
        let row: Vec<String> = s2.row(n).iter().map(|p| p.eval(&lam).to_string()).collect();
        println!("  n = {n}:  {}", row.join(", "));
    }

    // the oracle expands x(x-l)...(x-(n-1)l) over the classical falling
    // factorials by triangular elimination, sharing no code with the
    // recurrence that built the table
    let n = 4;
    let oracle_row = s2_oracle(n);
    println!("\nbasis-change oracle for S2 row {n}:");
    for (k, poly) in oracle_row.iter().enumerate() {
        println!("  k = {k}: {poly}");
    }
    assert_eq!(s2.row(n), oracle_row.as_slice());
    println!("oracle agrees with the recurrence table.");
}
