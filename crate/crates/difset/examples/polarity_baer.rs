//! The canonical polarity x ⇌ B − x, its absolute points, and Baer's
//! polarity propositions verified exhaustively on odd- and even-order
//! planes.
//!
//! ```sh
//! cargo run --example polarity_baer
//! ```

use difset::pds::singer_pds;
use difset::plane::{baer_report, CyclicPlane};

fn main() {
    for q in [2u64, 3, 4, 5, 7, 8, 9] {
        let plane = CyclicPlane::from_pds(&singer_pds(q).unwrap());
        let absolute = plane.absolute_points();
        let report = baer_report(&plane).unwrap();
        println!(
            "order {q} ({}): {} absolute points {:?}",
            if report.odd_order { "odd" } else { "even" },
            report.absolute_point_count,
            absolute.elements()
        );
        for check in &report.checks {
            let mark = match (check.applicable, check.passed) {
                (false, _) => "n/a ",
                (true, true) => "pass",
                (true, false) => "FAIL",
            };
            println!("    [{mark}] {}", check.name);
        }
        assert!(report.all_applicable_passed());
    }
    println!("\nevery applicable proposition holds on every plane, as it must");
}
