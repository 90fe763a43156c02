//! Exhaustive enumeration of all perfect difference sets for small moduli.
//!
//! ```sh
//! cargo run --example census
//! ```

use difset::modular::Modulus;
use difset::pds::enumerate_pds;

fn main() {
    for v in [7u64, 13, 21] {
        let sets = enumerate_pds(Modulus::new(v)).unwrap();
        println!("v = {v}: {} perfect difference sets", sets.len());
        for s in sets.iter().take(6) {
            println!("    {:?}", s.elements());
        }
        if sets.len() > 6 {
            println!("    … and {} more", sets.len() - 6);
        }
        // the count is divisible by v: translates of a set are again sets
        assert_eq!(sets.len() % v as usize, 0);
    }
    println!("\ncounts are multiples of v (translation closure)");
}
