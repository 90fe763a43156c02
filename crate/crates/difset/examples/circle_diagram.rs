//! Circle diagrams of a difference set: v ticks on a dial, members bold.
//! Emits the JSON tick list and DOT text to stdout and writes an SVG next
//! to the current directory.
//!
//! ```sh
//! cargo run --example circle_diagram
//! ```

use difset::diagram::CircleDiagram;
use difset::modular::{Modulus, ResidueSet};

fn main() {
    let set = ResidueSet::new(Modulus::new(21), [1u64, 2, 5, 15, 17]);
    let diagram = CircleDiagram::new(&set);

    println!("{}", diagram.to_json());
    println!();
    print!("{}", diagram.to_dot());

    let path = "difference_set_21.svg";
    std::fs::write(path, diagram.to_svg()).expect("writable working directory");
    println!("\nwrote {path}");
}
