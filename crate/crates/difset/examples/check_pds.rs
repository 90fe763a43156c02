//! Verifying perfect difference sets, with full failure reports.
//!
//! ```sh
//! cargo run --example check_pds
//! ```

use difset::modular::Modulus;
use difset::pds::{check_pds_ints, CheckMode};
use difset::sidon::IntegerSet;

fn main() {
    // three classics: the Fano set, an order-4 set, and the reduction of
    // the first nine powers of two modulo 73
    let cases: [(&[i64], u64); 4] = [
        (&[1, 2, 4], 7),
        (&[1, 2, 5, 15, 17], 21),
        (&[1, 2, 4, 8, 16, 32, 64, 128, 256], 73),
        (&[1, 2, 3], 7),
    ];
    for (xs, v) in cases {
        let report = check_pds_ints(
            &IntegerSet::new(xs.iter().copied()),
            Modulus::new(v),
            CheckMode::Strict,
        )
        .unwrap();
        println!("{xs:?} mod {v}");
        println!("  perfect: {} (order {:?})", report.is_pds, report.q);
        if !report.is_pds {
            println!("  missing differences:  {:?}", report.missing);
            println!("  repeated differences: {:?}", report.repeated);
        }
    }
}
