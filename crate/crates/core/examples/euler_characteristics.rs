//! Euler characteristics by the closed cubic formula and by
//! Hirzebruch–Riemann–Roch, side by side.

use quadric_bundles::chow::{self, ChernData};
use quadric_bundles::hrr;

fn main() {
    println!("c(TQ) = {}", hrr::tangent_chern());
    println!("td(Q) = {}", hrr::todd_class());

    println!("{:>4} {:>8}", "t", "χ(O(t))");
    for t in -4..=4 {
        println!("{t:>4} {:>8}", hrr::chi_hrr(&ChernData::line(t)));
    }

    let spinor = ChernData::new(2, 1, 1, 0);
    println!(
        "χ(Σ) = {} (formula) = {} (hrr)",
        hrr::chi_formula(&spinor),
        hrr::chi_hrr(&spinor)
    );
    let ch = hrr::chern_character(&spinor);
    println!("ch(Σ) = {}", ch.to_chow());

    println!("rank 2, c1 = −1:");
    for c2 in 0..=4 {
        let e = ChernData::new(2, -1, c2, 0);
        let end = chow::tensor(&e, &chow::dual(&e)).expect("integral");
        println!(
            "  c2 = {c2}: χ(E) = {}, χ(E(1)) = {}, χ(E(−1)) = {}, χ(End E) = {}",
            hrr::chi_hrr(&e),
            hrr::chi_hrr(&chow::twist(&e, 1)),
            hrr::chi_hrr(&chow::twist(&e, -1)),
            hrr::chi_hrr(&end)
        );
    }
}
