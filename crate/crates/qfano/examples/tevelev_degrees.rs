//! Virtual Tevelev degrees: ring arithmetic vs the closed formula.

use qfano::gw::GWTable;
use qfano::space::validate_space;
use qfano::tevelev::{k_of, tevelev_direct};

fn main() {
    let queries: &[(u32, Vec<u32>, u32, u32)] = &[
        (3, vec![2], 0, 3), // quadric threefold, rational curves through 3 points
        (3, vec![2], 1, 1),
        (3, vec![3], 0, 3),
        (3, vec![3], 2, 1),
        (3, vec![4], 1, 1),
        (4, vec![2, 3], 1, 2),
    ];

    for (r, degrees, g, n) in queries {
        let space = validate_space(*r, degrees.clone()).unwrap();
        let k = match k_of(&space, *g, *n) {
            Ok(k) => k,
            Err(e) => {
                println!("X({degrees:?}) dim {r}, g={g}, n={n}: rejected ({e})");
                continue;
            }
        };
        let mut table = GWTable::new(space.clone(), k + 1);
        let b = tevelev_direct(&space, &mut table, *g, *n).unwrap();
        assert_eq!(b.value_direct, b.value_closed);
        println!(
            "X({}) dim {r}: g={g}, n={n} -> k={k}, vTev = {}, discrepancy = {}",
            degrees
                .iter()
                .map(|d| d.to_string())
                .collect::<Vec<_>>()
                .join(","),
            b.value_direct,
            b.discrepancy,
        );
        if !b.extra_terms.is_empty() {
            println!("  extra point-class terms: {:?}", b.extra_terms);
        }
    }

    // an inadmissible query: curve degree not integral
    let cubic = validate_space(3, vec![3]).unwrap();
    match k_of(&cubic, 0, 4) {
        Ok(_) => unreachable!(),
        Err(e) => println!("\ncubic threefold, g=0, n=4: rejected ({e})"),
    }
}
