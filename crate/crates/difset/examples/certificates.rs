//! Non-extension certificates: machine-checkable proofs that a Sidon set
//! extends to no perfect difference set modulo any v > 0, validated by an
//! independent checker — and rejected once tampered with.
//!
//! ```sh
//! cargo run --example certificates
//! ```

use difset::search::{
    certify_non_extension, check_certificate, CertifyOutcome, EvenCaseWitness, DEFAULT_NODE_BUDGET,
};
use difset::sidon::IntegerSet;

fn describe(xs: &[i64]) -> Option<difset::search::NonExtensionCertificate> {
    let a = IntegerSet::new(xs.iter().copied());
    println!("{xs:?}:");
    match certify_non_extension(&a, DEFAULT_NODE_BUDGET).unwrap() {
        CertifyOutcome::Inconclusive { reason } => {
            println!("  inconclusive: {reason}\n");
            None
        }
        CertifyOutcome::Certificate(cert) => {
            println!(
                "  frame shift {}, forced absolute points {:?}",
                cert.shift, cert.forced_absolute
            );
            println!(
                "  collinear triple {:?} on the line with offset {}",
                cert.collinear_witness.triple, cert.collinear_witness.t
            );
            match &cert.even_case {
                EvenCaseWitness::OffLineWitness { h4, w, collision } => println!(
                    "  even orders: h₄ = {h4} forces {w} into the set, but {w} − {} = {} − {}",
                    collision[0], collision[1], collision[2]
                ),
                EvenCaseWitness::SaturationWitness { a, u, collision } => println!(
                    "  even orders: {a} on the absolute line forces {u} into the set, but {u} − {} = {} − {}",
                    collision[0], collision[1], collision[2]
                ),
            }
            println!(
                "  aliasing bound {}; moduli searched below it: {:?}",
                cert.aliasing_bound,
                cert.small_moduli_exhausted
                    .iter()
                    .map(|s| s.v)
                    .collect::<Vec<_>>()
            );
            let check = check_certificate(&cert, &a);
            println!("  independent checker: valid = {}\n", check.valid);
            assert!(check.valid);
            Some(cert)
        }
    }
}

fn main() {
    // the first five greedy Sidon terms never extend
    let cert = describe(&[1, 2, 4, 8, 13]).expect("certificate");

    // Hall's 1947 example, and its all-positive translate
    describe(&[-8, -6, 0, 1, 4]).expect("certificate");
    describe(&[1, 3, 9, 10, 13]).expect("certificate");

    // an extendable set is (correctly) inconclusive
    describe(&[1, 2]);

    // the checker is not a rubber stamp
    let a = IntegerSet::new(vec![1, 2, 4, 8, 13]);
    let mut tampered = cert;
    tampered.even_case = EvenCaseWitness::SaturationWitness {
        a: 8,
        u: 16,
        collision: [13, 4, 2],
    };
    let check = check_certificate(&tampered, &a);
    println!("tampered collision accepted? {}", check.valid);
    for r in &check.reasons {
        println!("  rejected: {r}");
    }
    assert!(!check.valid);
}
