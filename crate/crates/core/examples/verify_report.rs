//! The full identity report, grouped by section.

use quadric_bundles::verify::{self, Section, Status};

fn main() {
    let section = std::env::args()
        .nth(1)
        .map(|s| s.parse::<Section>())
        .transpose();
    let section = match section {
        Ok(s) => s,
        Err(e) => {
            eprintln!("{e}");
            std::process::exit(2);
        }
    };
    let report = verify::run(section);
    for c in &report.checks {
        if c.status != Status::Pass {
            println!("{c}");
        }
    }
    for s in Section::ALL {
        let n = report.checks.iter().filter(|c| c.section == s).count();
        if n > 0 {
            println!("{s:<8} {n} checks");
        }
    }
    println!("{}", report.summary());
}
