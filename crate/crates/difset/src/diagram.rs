//! Circle-diagram emission for difference sets: `v` ticks on a circle,
//! set members bold.
//!
//! Output is byte-stable by construction (fixed radius, fixed ordering,
//! fixed float formatting, no external layout engine), so diagrams can be
//! golden-tested and diffed. Tick 0 sits at the top; ticks advance
//! clockwise.

use crate::modular::ResidueSet;

/// Tick layout shared by the emitters.
#[derive(Debug, Clone)]
pub struct CircleDiagram {
    modulus: u64,
    bold: Vec<u64>,
}

impl CircleDiagram {
    pub fn new(set: &ResidueSet) -> CircleDiagram {
        CircleDiagram {
            modulus: set.modulus().get(),
            bold: set.elements().to_vec(),
        }
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn bold_ticks(&self) -> &[u64] {
        &self.bold
    }

    fn is_bold(&self, k: u64) -> bool {
        self.bold.binary_search(&k).is_ok()
    }

    /// Angle of tick `k` in radians (top of the dial, clockwise).
    fn angle(&self, k: u64) -> f64 {
        std::f64::consts::FRAC_PI_2 - 2.0 * std::f64::consts::PI * k as f64 / self.modulus as f64
    }

    /// Tick list as a single JSON line: `{"modulus":v,"bold":[…]}`.
    pub fn to_json(&self) -> String {
        let bold: Vec<String> = self.bold.iter().map(u64::to_string).collect();
        format!(
            "{{\"modulus\":{},\"bold\":[{}]}}",
            self.modulus,
            bold.join(",")
        )
    }

    /// DOT-compatible graph with pinned node positions on a circle of
    /// radius 2.5; members are drawn bold.
    pub fn to_dot(&self) -> String {
        let mut out = String::new();
        out.push_str("graph difference_set {\n");
        out.push_str("  layout=neato;\n");
        out.push_str("  node [shape=plaintext, fontsize=10];\n");
        for k in 0..self.modulus {
            let a = self.angle(k);
            let (x, y) = (2.5 * a.cos(), 2.5 * a.sin());
            let style = if self.is_bold(k) {
                ", fontsize=14, style=bold"
            } else {
                ""
            };
            out.push_str(&format!(
                "  t{k} [label=\"{k}\", pos=\"{x:.4},{y:.4}!\"{style}];\n"
            ));
        }
        out.push_str("}\n");
        out
    }

    /// Self-contained SVG: a 600×600 canvas, the circle, one tick per
    /// residue, member ticks heavier with bold labels.
    pub fn to_svg(&self) -> String {
        const CENTER: f64 = 300.0;
        const RADIUS: f64 = 230.0;
        let mut out = String::new();
        out.push_str("<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"600\" height=\"600\" viewBox=\"0 0 600 600\">\n");
        out.push_str(&format!(
            "  <circle cx=\"{CENTER}\" cy=\"{CENTER}\" r=\"{RADIUS}\" fill=\"none\" stroke=\"black\" stroke-width=\"1.5\"/>\n"
        ));
        for k in 0..self.modulus {
            let a = self.angle(k);
            let (dx, dy) = (a.cos(), -a.sin()); // SVG y grows downward
            let bold = self.is_bold(k);
            let (r_in, r_out, width) = if bold {
                (RADIUS * 0.9, RADIUS * 1.1, "3")
            } else {
                (RADIUS * 0.9, RADIUS, "1")
            };
            out.push_str(&format!(
                "  <line x1=\"{:.2}\" y1=\"{:.2}\" x2=\"{:.2}\" y2=\"{:.2}\" stroke=\"black\" stroke-width=\"{width}\"/>\n",
                CENTER + r_in * dx,
                CENTER + r_in * dy,
                CENTER + r_out * dx,
                CENTER + r_out * dy,
            ));
            let weight = if bold {
                " font-weight=\"bold\" font-size=\"16\""
            } else {
                " font-size=\"12\""
            };
            out.push_str(&format!(
                "  <text x=\"{:.2}\" y=\"{:.2}\" text-anchor=\"middle\" dominant-baseline=\"middle\"{weight}>{k}</text>\n",
                CENTER + RADIUS * 1.22 * dx,
                CENTER + RADIUS * 1.22 * dy,
            ));
        }
        out.push_str("</svg>\n");
        out
    }
}
