//! The cyclic plane of a perfect difference set, verified against the
//! projective-plane axioms — and a broken candidate for contrast.
//!
//! ```sh
//! cargo run --example plane_axioms
//! ```

use difset::modular::{Modulus, ResidueSet};
use difset::pds::{singer_pds, PerfectDifferenceSet};
use difset::plane::{verify_projective_axioms, CyclicPlane};

fn main() {
    let pds =
        PerfectDifferenceSet::new(ResidueSet::new(Modulus::new(21), [1u64, 2, 5, 15, 17])).unwrap();
    let plane = CyclicPlane::from_pds(&pds);
    println!(
        "plane of order {} over {:?}: {} points, {} lines",
        plane.order(),
        plane.base_set().elements(),
        plane.v(),
        plane.v()
    );
    println!("  line 0 carries {:?}", plane.line_points(0));
    println!(
        "  unique line through 0 and 1: offset {}",
        plane.line_through(0, 1).unwrap()
    );

    let report = verify_projective_axioms(&plane).unwrap();
    println!("  unique joins:  {}", report.point_pairs_on_unique_line);
    println!(
        "  unique meets:  {}",
        report.line_pairs_meet_in_unique_point
    );
    println!("  quadrangle:    {:?}", report.quadrangle.unwrap());
    println!("  all axioms ok: {}", report.all_ok());

    for q in [2u64, 3, 5, 8] {
        let plane = CyclicPlane::from_pds(&singer_pds(q).unwrap());
        let report = verify_projective_axioms(&plane).unwrap();
        println!("order {q}: axioms ok = {}", report.all_ok());
    }

    // a repeated difference breaks the unique-join axiom
    let broken =
        CyclicPlane::from_residues(ResidueSet::new(Modulus::new(7), [1u64, 2, 3])).unwrap();
    let report = verify_projective_axioms(&broken).unwrap();
    println!(
        "\ncorrupted base {{1,2,3}} mod 7: all axioms ok = {}",
        report.all_ok()
    );
    for f in report.failures.iter().take(4) {
        println!("  {f}");
    }
}
