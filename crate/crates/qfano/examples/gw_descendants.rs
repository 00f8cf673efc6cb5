//! Two-point genus-zero descendant invariants ⟨τ_a(H^i), H^j⟩_{0,k}.
//!
//! The hypergeometric base case handles j = 0; everything else comes out
//! of the recursion. The α table printed at the end is the complete input
//! the quantum ring needs.

use qfano::gw::{base_descendant, DescendantKey, GWTable};
use qfano::space::validate_space;

fn main() {
    // quartic threefold: the borderline case, where the base case carries
    // the e^{-m!q} mirror prefactors
    let space = validate_space(3, vec![4]).unwrap();
    let r = space.r;
    let mut table = GWTable::new(space.clone(), 4);

    for k in 1..=3 {
        let row: Vec<String> = (0..=r)
            .map(|i| base_descendant(&space, k, i).to_string())
            .collect();
        println!("base row k={k}: [{}]", row.join(", "));
    }

    println!();
    for k in 1..=3 {
        for i in 0..=r {
            let key = DescendantKey { k, a: 0, i };
            let j = key.second_exponent(&space);
            if !(0..=r as i64).contains(&j) {
                continue;
            }
            let v = table.descendant(key).unwrap();
            println!("<H^{i}, H^{j}>_(0,{k}) = {v}");
        }
    }

    println!();
    for k in 1..=3 {
        let alphas: Vec<String> = (0..=r as i64)
            .map(|s| table.alpha(k, s).to_string())
            .collect();
        println!("alpha^{k}_s, s=0..{r}: [{}]", alphas.join(", "));
    }
}
