//! Perfect difference sets from a third-order linear recurrence over GF(q).
//!
//! With initial conditions 0, 0, 1 and x_k = a₁x_{k−1} + a₂x_{k−2} + a₃x_{k−3},
//! the indices where the sequence vanishes are periodic modulo q² + q + 1
//! and form a perfect difference set — exactly when the characteristic
//! polynomial x³ − a₁x² − a₂x − a₃ is primitive over GF(q). The
//! deterministic path takes the minimal polynomial of a generator of
//! GF(q³)*; the randomized path just guesses coefficients and retries.
//!
//! ```sh
//! cargo run --example singer_construction
//! ```

use difset::field::FieldSpec;
use difset::pds::{random_recurrence_pds, recurrence_zero_positions, singer_pds};

fn main() {
    // the recurrence itself, spelled out for GF(2)
    let f2 = FieldSpec::new(2, 1).unwrap();
    let (zero, one) = (f2.zero(), f2.one());
    let zeros = recurrence_zero_positions(&f2, &zero, &one, &one, 14).unwrap();
    println!("GF(2), x_k = x_{{k-2}} + x_{{k-3}}: zeros below 14 at {zeros:?}");
    println!("  period 7, one period reduces to {{0, 1, 3}} — the Fano plane set\n");

    println!("deterministic construction:");
    for q in [2u64, 3, 4, 5, 7, 8, 9, 11, 13, 16] {
        let pds = singer_pds(q).unwrap();
        println!(
            "  q = {q:>2}, v = {:>3}: {:?}",
            pds.modulus(),
            pds.residues().elements()
        );
    }

    println!("\nrandomized construction (seeded, reproducible):");
    for q in [4u64, 9] {
        let r = random_recurrence_pds(q, 2024, 500).unwrap();
        println!(
            "  q = {q}: coefficients {:?} after {} tries -> {:?}",
            r.coefficients,
            r.tries,
            r.pds.residues().elements()
        );
    }
}
