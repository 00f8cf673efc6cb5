//! Scalar invariants of Fano complete intersections X ⊂ P^{r+L}.
//!
//! Walks the small grid of spaces with 3 ≤ r ≤ 6 and degrees 2..=4 and
//! prints the Euler characteristic, primitive rank and Fano index of each.

use qfano::space::validate_space;
use qfano::verify::degree_grid;

fn main() {
    println!(
        "{:>4} {:>10} {:>6} {:>8} {:>10} {:>10}  case",
        "r", "degrees", "d", "deg X", "chi", "prim"
    );
    for r in 3..=6 {
        for degrees in degree_grid(2, 4) {
            let Ok(s) = validate_space(r, degrees) else {
                continue; // |m| > r+L: not Fano in our range
            };
            println!(
                "{:>4} {:>10} {:>6} {:>8} {:>10} {:>10}  {}",
                s.r,
                format!("{:?}", s.degrees.as_slice()),
                s.fano_index,
                s.degree,
                s.euler_char,
                s.prim_rank,
                if s.borderline { "borderline" } else { "strict" },
            );
        }
    }
}
