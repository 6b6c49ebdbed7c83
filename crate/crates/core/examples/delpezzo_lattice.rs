//! Classes `a·ℓ − Σbᵢeᵢ` of degree `d`, genus `g` curves on a quartic
//! del Pezzo surface.

use quadric_bundles::curves;

fn main() {
    for (d, g) in [(4, 0), (4, 1), (5, 1), (6, 2), (8, 5)] {
        let all = curves::delpezzo_classes(d, g);
        let kept = curves::delpezzo_classes_filtered(d, g);
        let names = |v: &[curves::DelPezzoClass]| {
            v.iter()
                .map(|c| c.to_string())
                .collect::<Vec<_>>()
                .join(" ")
        };
        println!("(d, g) = ({d}, {g}): {}", names(&all));
        if kept != all {
            println!("  smooth connected candidates: {}", names(&kept));
        }
    }
}
