//! Operator identities checked as exact normal-form equalities: the two
//! sandwich identities for `a+ ... a` and the commutators with the number
//! operator.
//!
//! Run with: `cargo run --example operator_identities`

use num_traits::One;

use stirling_lambda::boson::{deg_power_number_op, npoly_to_nf, sandwich, NormalForm};
use stirling_lambda::exactnum::{LambdaPoly, XPoly};
use stirling_lambda::factorials::deg_falling_poly;

fn main() {
    // a+ (n + 1 - l)_{k,l} a = (n)_{k+1,l}
    println!("sandwich advance identity:");
    let shifted = XPoly::new(vec![LambdaPoly::from_ints(&[1, -1]), LambdaPoly::one()]);
    for k in 0..=4 {
        let lhs = sandwich(&deg_falling_poly(&shifted, k));
        let rhs = deg_power_number_op(k + 1);
        assert_eq!(lhs, rhs);
        println!("  k = {k}:  a+ (n+1-l)_{{{k},l}} a = {rhs}");
    }

    // a+ (n)_{k,l} a = n (n - 1)_{k,l}
    println!("\nsandwich shift identity:");
    let n_minus_1 = XPoly::new(vec![-LambdaPoly::one(), LambdaPoly::one()]);
    for k in 0..=4 {
        let lhs = sandwich(&stirling_lambda::factorials::deg_falling_xpoly(k));
        let rhs = npoly_to_nf(&(&XPoly::var() * &deg_falling_poly(&n_minus_1, k)));
        assert_eq!(lhs, rhs);
        println!("  k = {k}:  a+ (n)_{{{k},l}} a = {rhs}");
    }

    println!("\ncommutators with the number operator:");
    let a = NormalForm::a();
    let adag = NormalForm::a_dag();
    let n_op = NormalForm::number_op();
    println!("  [a, n]  = {}", a.commutator(&n_op));
    println!("  [n, a+] = {}", n_op.commutator(&adag));
    assert_eq!(a.commutator(&n_op), a);
    assert_eq!(n_op.commutator(&adag), adag);
}
