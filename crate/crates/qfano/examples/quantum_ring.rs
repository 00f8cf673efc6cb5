//! The restricted small quantum ring of a Fano complete intersection.
//!
//! Shows the reduction rule for H^{⋆(r+1)}, the expansion of classical
//! powers H^t in the quantum basis, and (borderline only) the change to
//! the shifted basis (H+m!q)^{⋆i} that turns the rule into one monomial.

use qfano::gw::GWTable;
use qfano::qring::{classical_to_star, hstar_top_coefficients, RingContext, RingElement};
use qfano::space::validate_space;

fn show(label: &str, el: &RingElement) {
    let terms: Vec<String> = el
        .terms()
        .iter()
        .map(|(i, q, c)| match q {
            0 => format!("{c}*e{i}"),
            1 => format!("{c}*q*e{i}"),
            _ => format!("{c}*q^{q}*e{i}"),
        })
        .collect();
    println!("{label} = {}", if terms.is_empty() { "0".into() } else { terms.join(" + ") });
}

fn main() {
    let space = validate_space(3, vec![4]).unwrap();
    let ctx = RingContext::hstar(space.clone());
    let mut table = GWTable::new(space.clone(), 4);

    // The H^{⋆(r+1)} coefficients, computed purely from GW data; they
    // reproduce the magic relation, which the ring then uses as its
    // reduction rule.
    let tops = hstar_top_coefficients(&ctx, &mut table).unwrap();
    let magic = ctx.magic_coefficients();
    let render = |v: &[qfano::rational::Rat]| {
        v.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(", ")
    };
    println!("H^(*4) coefficients from GW data: [{}]", render(&tops));
    println!("magic relation coefficients:      [{}]", render(&magic));
    assert_eq!(tops, magic);

    println!();
    for t in 0..=space.r {
        let el = classical_to_star(&ctx, &mut table, t).unwrap();
        show(&format!("H^{t}"), &el);
    }

    // star products reduce automatically
    let h = RingElement::basis_element(ctx.clone(), 1);
    let top = RingElement::basis_element(ctx.clone(), space.r);
    show("\nH * e3", &h.star_mul(&top).unwrap());

    // borderline: one monomial in the shifted basis
    let shifted = RingContext::shifted(space.clone()).unwrap();
    let t = RingElement::basis_element(shifted.clone(), 1);
    let t_top = RingElement::basis_element(shifted, space.r);
    show("T * T^(*3) (shifted basis)", &t.star_mul(&t_top).unwrap());

    // round trip between the bases
    let there = classical_to_star(&ctx, &mut table, 3).unwrap().shift_basis().unwrap();
    let back = there.shift_basis().unwrap();
    assert_eq!(back, classical_to_star(&ctx, &mut table, 3).unwrap());
    println!("\nbasis round trip: ok");
}
