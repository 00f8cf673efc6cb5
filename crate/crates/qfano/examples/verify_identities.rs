//! Runs the full internal consistency suite over a grid of spaces.

use qfano::space::validate_space;
use qfano::verify::{degree_grid, run_all};

fn main() {
    let mut failures = 0;
    for r in 3..=5 {
        for degrees in degree_grid(2, 4) {
            let Ok(space) = validate_space(r, degrees.clone()) else {
                continue;
            };
            println!(
                "X({}) ⊂ P^{}",
                degrees
                    .iter()
                    .map(|d| d.to_string())
                    .collect::<Vec<_>>()
                    .join(","),
                r + degrees.len() as u32
            );
            for check in run_all(&space).unwrap() {
                let status = if check.pass { "ok" } else { "FAIL" };
                println!("  {:28} {status}  {}", check.name, check.detail);
                if !check.pass {
                    failures += 1;
                }
            }
        }
    }
    assert_eq!(failures, 0, "{failures} checks failed");
    println!("\nall checks passed");
}
