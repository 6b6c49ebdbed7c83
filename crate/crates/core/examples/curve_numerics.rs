//! Curves of sections: `c3` from degree and genus, trisecant counts and
//! the `α` invariant with its bounds.

use quadric_bundles::curves::{self, CurveData};

fn main() {
    println!("c3 for c1 = 2:");
    for curve in [
        CurveData::connected(3, 0),
        CurveData::two_conics(),
        CurveData::connected(4, 0),
        CurveData::connected(4, 1),
        CurveData::connected(5, 1),
        CurveData::connected(6, 2),
        CurveData::connected(8, 5),
    ] {
        let c3 = curves::c3_from_curve(&curve, 2).c3;
        let a = curves::alpha(&curve, 2);
        let value = a.value.map_or("?".to_string(), |v| v.to_string());
        println!(
            "  {:<14} (c2, c3) = ({}, {c3:>2})  α = {value:>2} in [{}, {}]",
            curve.to_string(),
            curve.degree(),
            a.lower,
            a.upper
        );
    }

    println!("trisecant counts t(d, g):");
    for d in 4..=8 {
        let row: Vec<String> = (0..=5)
            .map(|g| match curves::trisecant_count(d, g) {
                curves::TrisecantCount::Finite(n) => format!("{n:>3}"),
                curves::TrisecantCount::Infinite => "  ∞".to_string(),
            })
            .collect();
        println!("  d = {d}: {}", row.join(" "));
    }
}
