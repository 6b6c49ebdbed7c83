//! Chern classes of the standard bundles from their defining sequences,
//! then twists, duals and tensor products in the Chow ring of `Q`.

use quadric_bundles::chow::{self, ChernData, ChowElement};

fn main() -> quadric_bundles::Result<()> {
    let o = ChernData::trivial;
    let line = ChernData::line;

    let a = chow::whitney_third(&line(-1), &o(4))?;
    let phi = chow::whitney_third(&line(-1), &o(5))?;
    let spinor = ChernData::new(2, 1, 1, 0);
    println!("A   = {a}   c = {}", a.total_chern());
    println!("Φ   = {phi}   c = {}", phi.total_chern());
    println!("Σ   = {spinor}   c = {}", spinor.total_chern());
    println!(
        "Σ^∨ = {} = Σ(−1) = {}",
        chow::dual(&spinor),
        chow::twist(&spinor, -1)
    );

    let e_p = chow::whitney_total(&line(1), &a);
    println!("O(1) extended by G_P: {e_p}");

    for k in -2..=2 {
        println!("A({k:>2}) = {}", chow::twist(&a, k));
    }

    let c = ChernData::new(3, 2, 0, 0);
    println!(
        "twist of {c} by 1: {} (printed formula gives c3 = {})",
        chow::twist(&c, 1),
        chow::twist_printed_formula(&c, 1).c3
    );

    println!("End Σ = {}", chow::tensor(&spinor, &chow::dual(&spinor))?);
    let x = ChowElement::from_ints(1, 1, 0, 0);
    println!("(1 + h)^-1 = {}", x.inverse().expect("unit"));
    Ok(())
}
