//! Cohomology tables on `Q`: line bundles, `Σ`, `A`, `Φ`, `G_P`, `E_P`,
//! the tensor-pair catalogue, and a Serre duality check.

use quadric_bundles::qcoh::{self, StandardBundle};

fn main() -> quadric_bundles::Result<()> {
    use StandardBundle::*;
    let bundles = [
        Line(0),
        Spinor,
        StandardBundle::a(),
        StandardBundle::a().dual(),
        Phi,
        Phi.dual(),
        GP,
        EP,
    ];
    for b in &bundles {
        println!("{b}");
        for t in -4..=2 {
            println!("  t = {t:>2}: {}", qcoh::coh(b, t)?);
        }
    }

    println!("tensor pairs:");
    for e in qcoh::pair_catalogue() {
        let table = qcoh::coh_pair(&e.left, &e.right, e.twist)?;
        println!(
            "  {:<18} {} ⊗ {} ({}): {table}",
            e.name, e.left, e.right, e.twist
        );
    }

    match qcoh::coh_pair(&Spinor, &Phi, 0) {
        Ok(t) => println!("Σ ⊗ Φ: {t}"),
        Err(e) => println!("Σ ⊗ Φ at twist 0: {e}"),
    }

    let all_dual = qcoh::serre_catalogue()
        .iter()
        .all(|b| (-6..=6).all(|t| qcoh::serre_dual_check(b, t) == Ok(true)));
    println!("Serre duality holds on the catalogue: {all_dual}");
    Ok(())
}
