//! Normal-order boson words and degenerate powers of the number operator.
//!
//! The canonical form puts every creation operator to the left of every
//! annihilation operator; the coefficients that appear when normal
//! ordering the degenerate powers of `n = a+ a` are exactly the rows of
//! the second-kind table, and the first-kind rows invert the expansion.
//!
//! Run with: `cargo run --example normal_ordering`

use stirling_lambda::boson::{
    deg_power_number_op, inverse_normal_expansion, parse_word, word_to_normal,
};
use stirling_lambda::stirling::build_s2_table;

fn main() {
    for word in ["a a+", "a+ a a+ a", "a a a+ a+"] {
        let letters = parse_word(word).unwrap();
        println!("{word:12} normal-orders to  {}", word_to_normal(&letters));
    }

    println!("\ndegenerate powers of the number operator:");
    let s2 = build_s2_table(4);
    for k in 0..=4 {
        let nf = deg_power_number_op(k);
        println!("  (n)_{{{k},l}} = {nf}");
        for l in 0..=k {
            assert_eq!(nf.coeff(l, l), *s2.entry(k, l));
        }
    }
    println!("  coefficients match the S2 table rows.");

    println!("\nfirst-kind inversion collapses to a single term:");
    for k in 0..=4 {
        println!("  sum_m S1({k}, m) (n)_{{m,l}} = {}", inverse_normal_expansion(k));
    }
}
