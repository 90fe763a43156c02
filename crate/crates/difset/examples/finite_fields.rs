//! The GF(p^k) layer: deterministic modulus polynomials, element
//! arithmetic, orders, and the cubic extension used by the recurrence
//! construction.
//!
//! ```sh
//! cargo run --example finite_fields
//! ```

use difset::field::{
    is_prime_power, multiplicative_order, primitive_element, CubicExtension, FieldSpec,
};

fn poly_string(coeffs: &[u64]) -> String {
    let terms: Vec<String> = coeffs
        .iter()
        .enumerate()
        .rev()
        .filter(|&(_, &c)| c != 0)
        .map(|(i, &c)| match (i, c) {
            (0, c) => format!("{c}"),
            (1, 1) => "x".into(),
            (1, c) => format!("{c}x"),
            (i, 1) => format!("x^{i}"),
            (i, c) => format!("{c}x^{i}"),
        })
        .collect();
    terms.join(" + ")
}

fn main() {
    for (p, k) in [(2u64, 3u32), (3, 2), (2, 4), (5, 1)] {
        let f = FieldSpec::new(p, k).unwrap();
        let g = primitive_element(&f);
        println!(
            "GF({}) = GF({p})[x] / ({}), generator index {} of order {}",
            f.size(),
            poly_string(f.modulus_poly()),
            g.index(),
            multiplicative_order(&g).unwrap()
        );
    }

    println!();
    for q in [8u64, 9, 12, 16, 1024] {
        println!("is_prime_power({q}) = {:?}", is_prime_power(q));
    }

    // the cubic tower behind the difference-set construction
    let base = FieldSpec::new(2, 2).unwrap();
    let ext = CubicExtension::new(&base).unwrap();
    let gamma = ext.primitive_element();
    let (a1, a2, a3) = ext.min_poly_of(&gamma);
    println!(
        "\nGF(4³ = {}): generator with minimal polynomial x³ − a₁x² − a₂x − a₃, \
         coefficient indices ({}, {}, {})",
        ext.size(),
        a1.index(),
        a2.index(),
        a3.index()
    );
}
