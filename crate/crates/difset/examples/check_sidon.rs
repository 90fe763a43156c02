//! Sidon predicates in both formulations, plain and modular.
//!
//! ```sh
//! cargo run --example check_sidon
//! ```

use difset::modular::Modulus;
use difset::sidon::{
    find_difference_violation, find_mod_violation, find_sum_violation, is_sidon_differences,
    is_sidon_sums, IntegerSet,
};

fn main() {
    let not_sidon = IntegerSet::new(vec![1, 2, 3]);
    println!("{:?}", not_sidon.elements());
    println!(
        "  differences distinct? {}",
        is_sidon_differences(&not_sidon)
    );
    println!("  witness: {:?}", find_difference_violation(&not_sidon));
    println!("  sums distinct?        {}", is_sidon_sums(&not_sidon));
    println!("  witness: {:?}", find_sum_violation(&not_sidon));

    let sidon = IntegerSet::new(vec![1, 2, 4, 8, 13]);
    println!("\n{:?}", sidon.elements());
    println!("  differences distinct? {}", is_sidon_differences(&sidon));
    println!("  sums distinct?        {}", is_sidon_sums(&sidon));

    // the two formulations agree on every set
    for mask in 0u32..(1 << 10) {
        let xs: Vec<i64> = (0..10)
            .filter(|i| mask >> i & 1 == 1)
            .map(i64::from)
            .collect();
        let a = IntegerSet::new(xs);
        assert_eq!(is_sidon_differences(&a), is_sidon_sums(&a));
    }
    println!("\ndifference and sum formulations agree on all 1024 subsets of 0..10");

    // modulo 7 the set {1,2,4,8} collapses: 1 ≡ 8
    let a = IntegerSet::new(vec![1, 2, 4, 8]);
    println!(
        "\n{:?} mod 7 -> {:?}",
        a.elements(),
        find_mod_violation(&a, Modulus::new(7))
    );
}
