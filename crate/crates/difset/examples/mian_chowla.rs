//! The greedy Sidon sequence and its density statistic.
//!
//! ```sh
//! cargo run --example mian_chowla
//! ```

use difset::sidon::{density_profile, mian_chowla};

fn main() {
    let a = mian_chowla(20);
    println!("first 20 greedy Sidon terms:\n  {:?}", a.elements());

    println!("\n      n   |A ∩ [1,n]|/√n");
    for &n in a.elements() {
        let n = n as u64;
        println!("  {n:>5}   {:.6}", density_profile(&a, n));
    }
    println!("\nthe conjectured extremal density is 1; the greedy sequence drifts lower");
}
