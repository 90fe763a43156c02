//! Greedy extension of a Sidon set until every difference up to a bound is
//! realized exactly once (the finite slice of "every finite Sidon set
//! extends to an infinite perfect difference set").
//!
//! ```sh
//! cargo run --example perfect_ruler
//! ```

use difset::sidon::{extend_to_perfect_ruler, IntegerSet};

fn main() {
    for (base, d_max) in [
        (IntegerSet::empty(), 10u64),
        (IntegerSet::new(vec![1, 2, 4, 8, 13]), 30),
    ] {
        let ruler = extend_to_perfect_ruler(&base, d_max).expect("base sets are Sidon");
        println!("base {:?}, differences 1..={d_max}:", base.elements());
        println!("  extended to {:?}", ruler.extended.elements());

        let xs = ruler.extended.elements();
        let count = |d: i64| {
            xs.iter()
                .flat_map(|&x| xs.iter().map(move |&y| x - y))
                .filter(|&diff| diff == d)
                .count()
        };
        assert!((1..=d_max as i64).all(|d| count(d) == 1));
        println!("  every difference 1..={d_max} has exactly one representation\n");
    }
}
