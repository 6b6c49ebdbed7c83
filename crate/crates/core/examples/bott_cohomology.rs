//! Bott's formula on projective space: the table of `h^q(Ω^p_{P³}(t))`
//! and the tangent bundle through `TP^n = Ω^{n−1}(n+1)`.

use quadric_bundles::bott::{bott, tangent_coh, BottQuery};

fn main() -> quadric_bundles::Result<()> {
    let n = 3;
    for p in 0..=n {
        println!("Ω^{p} on P³, rows t = −4..4, columns q = 0..3");
        for t in -4..=4 {
            let row: Vec<u64> = (0..=n)
                .map(|q| bott(&BottQuery::new(n, p, t, q)))
                .collect::<Result<_, _>>()?;
            println!("  t = {t:>2}: {row:?}");
        }
    }
    for t in -3..=1 {
        let row: Vec<u64> = (0..=3)
            .map(|q| tangent_coh(3, t, q))
            .collect::<Result<_, _>>()?;
        println!("TP³({t:>2}): {row:?}");
    }
    println!("h⁰(TP⁴) = {}", tangent_coh(4, 0, 0)?);
    Ok(())
}
