//! Does a Sidon set extend to a perfect difference set? Complete
//! backtracking per modulus, swept across plane orders.
//!
//! The first four powers of two extend at order 8 (inside the powers of
//! two modulo 73) but at no prime order; adding the fifth greedy term, 13,
//! closes every order.
//!
//! ```sh
//! cargo run --release --example extension_search
//! ```

use difset::modular::Modulus;
use difset::search::{
    admissible_orders, extend_to_pds, sweep, ModulusFilter, SearchStatus, DEFAULT_NODE_BUDGET,
};
use difset::sidon::IntegerSet;

fn show(outcomes: &std::collections::BTreeMap<u64, difset::search::SearchOutcome>) {
    for (q, o) in outcomes {
        let v = q * q + q + 1;
        match o.status {
            SearchStatus::Found => println!(
                "  q = {q} (v = {v:>3}): FOUND {:?} after {} nodes",
                o.witness.as_ref().unwrap().elements(),
                o.nodes_explored
            ),
            SearchStatus::Exhausted => println!(
                "  q = {q} (v = {v:>3}): exhausted after {} nodes",
                o.nodes_explored
            ),
            SearchStatus::PrecheckFailed => println!(
                "  q = {q} (v = {v:>3}): precheck failed ({:?})",
                o.precheck_reason.as_ref().unwrap()
            ),
            SearchStatus::BudgetExceeded => println!("  q = {q} (v = {v:>3}): budget exceeded"),
        }
    }
}

fn main() {
    let a = IntegerSet::new(vec![1, 2]);
    let out = extend_to_pds(&a, Modulus::new(7), DEFAULT_NODE_BUDGET).unwrap();
    println!(
        "{{1, 2}} mod 7: {:?} -> {:?}",
        out.status,
        out.witness.unwrap().elements()
    );

    let four = IntegerSet::new(vec![1, 2, 4, 8]);
    println!(
        "\n{{1, 2, 4, 8}}: admissible orders up to 8: {:?}",
        admissible_orders(&four, 8).unwrap()
    );
    println!("{{1, 2, 4, 8}} across all orders:");
    show(&sweep(&four, 8, ModulusFilter::All, DEFAULT_NODE_BUDGET).unwrap());
    println!("{{1, 2, 4, 8}} across prime orders only:");
    show(&sweep(&four, 8, ModulusFilter::Primes, DEFAULT_NODE_BUDGET).unwrap());

    let five = IntegerSet::new(vec![1, 2, 4, 8, 13]);
    println!("\n{{1, 2, 4, 8, 13}} across all orders (none may succeed):");
    show(&sweep(&five, 9, ModulusFilter::All, DEFAULT_NODE_BUDGET).unwrap());
}
