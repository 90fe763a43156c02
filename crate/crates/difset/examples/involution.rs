//! The pairing f_a on a perfect difference set: for a ∉ B, send b to the c
//! of the unique representation a − b = c − d. It is an involution, so its
//! fixed-point count has the parity of |B| — the engine behind the direct
//! non-extension argument for small sets.
//!
//! ```sh
//! cargo run --example involution
//! ```

use difset::modular::{Modulus, ResidueSet};
use difset::pds::{singer_pds, PerfectDifferenceSet};
use difset::plane::involution_fa;

fn main() {
    let pds = PerfectDifferenceSet::new(ResidueSet::new(Modulus::new(7), [1u64, 2, 4])).unwrap();
    let report = involution_fa(&pds, 3).unwrap();
    println!("B = {{1, 2, 4}} mod 7, a = 3:");
    for (b, c) in &report.mapping {
        println!("  f(b = {b}) = {c}");
    }
    for fp in &report.fixed_points {
        println!(
            "  fixed point {}: 2·{} ≡ 3 + {} (mod 7) -> {}",
            fp.b, fp.b, fp.partner, fp.doubling_identity_holds
        );
    }

    println!("\nfixed-point parity across whole planes:");
    for q in [2u64, 3, 4, 5, 7] {
        let pds = singer_pds(q).unwrap();
        let v = pds.modulus().get();
        let mut counts = Vec::new();
        for a in (0..v).filter(|&a| !pds.contains(a)) {
            let r = involution_fa(&pds, a).unwrap();
            assert!(r.is_involution);
            counts.push(r.fixed_points.len());
        }
        let parity = if (q + 1) % 2 == 0 { "even" } else { "odd" };
        assert!(counts.iter().all(|c| c % 2 == (q as usize + 1) % 2));
        println!(
            "  q = {q}: |B| = {} -> every f_a has an {parity} number of fixed points \
             (counts seen: {:?})",
            q + 1,
            {
                let mut distinct = counts.clone();
                distinct.sort_unstable();
                distinct.dedup();
                distinct
            }
        );
    }
}
