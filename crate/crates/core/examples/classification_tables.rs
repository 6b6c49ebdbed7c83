//! Rank-3 tables, their higher-rank extensions, and the comparison with
//! the published higher-rank list.

use quadric_bundles::classify;

fn main() -> quadric_bundles::Result<()> {
    for c1 in 1..=2 {
        println!("rank 3, c1 = {c1}:");
        for e in classify::rank3_table(c1)? {
            println!("  {e}");
        }
        println!("all ranks, c1 = {c1}:");
        for e in classify::higher_rank_table(c1)? {
            match &e.note {
                Some(note) => println!("  {e}  ({note})"),
                None => println!("  {e}"),
            }
        }
    }
    for c2 in [7, 9] {
        let (entries, reason) = classify::lookup(2, c2)?;
        println!(
            "c1 = 2, c2 = {c2}: {} entries; {}",
            entries.len(),
            reason.unwrap_or("")
        );
    }

    let report = classify::higher_rank_check();
    println!("matched {} tuples", report.matched.len());
    println!("missing {:?}", report.missing);
    println!("unexpected {:?}", report.unexpected);
    println!(
        "rank-3 tuples absent from the list {:?}",
        report.flagged_rank3
    );
    Ok(())
}
