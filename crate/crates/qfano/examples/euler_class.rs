//! Quantum Euler class: closed formula vs the constructive route E = Γ + E′.

use qfano::euler::{
    euler_closed, euler_constructive, euler_diagonal_restricted, euler_shifted, gamma_element,
    gamma_h_product,
};
use qfano::gw::GWTable;
use qfano::qring::{RingContext, RingElement};
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
    println!(
        "  {label} = {}",
        if terms.is_empty() { "0".into() } else { terms.join(" + ") }
    );
}

fn main() {
    // threefolds: quadric, cubic, quartic, (2,2) and (2,3) intersections
    for degrees in [vec![2], vec![3], vec![4], vec![2, 2], vec![2, 3]] {
        let space = validate_space(3, degrees).unwrap();
        let ctx = RingContext::hstar(space.clone());
        let mut table = GWTable::new(space.clone(), space.r + 2);

        println!(
            "X({}) ⊂ P^{}  (r = {}, {})",
            space
                .degrees
                .iter()
                .map(|d| d.to_string())
                .collect::<Vec<_>>()
                .join(","),
            space.r + space.degrees.len() as u32,
            space.r,
            if space.borderline { "borderline" } else { "strict" }
        );

        let closed = euler_closed(&ctx).unwrap();
        let constructive = euler_constructive(&ctx, &mut table).unwrap();
        assert_eq!(closed, constructive);
        show("E (closed = Γ + E′)", &closed);
        show("Γ ", &gamma_element(&ctx, &mut table).unwrap());
        show("E′", &euler_diagonal_restricted(&ctx, &mut table).unwrap());
        show("H⋆Γ", &gamma_h_product(&ctx, &mut table).unwrap());

        if space.borderline {
            show("E (shifted basis)", &euler_shifted(&ctx).unwrap());
        }
        println!();
    }
}
