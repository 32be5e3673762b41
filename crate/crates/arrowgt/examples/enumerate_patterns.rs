//! Enumerate plain and arrowed Gelfand-Tsetlin patterns.
//!
//! A GT pattern is a triangle of integers in which every entry
//! interlaces the pair below it; an arrowed pattern additionally carries
//! one of four decorations (none, ne, nw, both) on every entry, subject
//! to admissibility rules along each row pair.
//!
//! Run with:
//!
//! ```not_rust
//! cargo run --example enumerate_patterns
//! ```

use arrowgt::patterns::{enumerate_arrowed, enumerate_gt, is_valid_arrowed, is_valid_gt};

fn main() -> Result<(), arrowgt::Error> {
    // Every plain GT pattern with bottom row (0, 1, 2).
    let bottom = [0i64, 1, 2];
    let plain: Vec<_> = enumerate_gt(&bottom)?.collect();
    println!("GT patterns over bottom row {bottom:?}: {}", plain.len());
    for p in plain.iter().take(3) {
        assert!(is_valid_gt(p), "enumerator must only yield valid patterns");
        for (indent, row) in p.rows().iter().enumerate() {
            let pad = " ".repeat(2 * (p.n() - indent - 1));
            let cells: Vec<String> = row.iter().map(i64::to_string).collect();
            println!("  {pad}{}", cells.join("   "));
        }
        println!();
    }
    println!("  ... and {} more\n", plain.len().saturating_sub(3));

    // Decorating each entry multiplies the count by far more than 4^#entries
    // would suggest is countable by hand; the enumerator streams them.
    let decorated: Vec<_> = enumerate_arrowed(&bottom)?.collect();
    println!(
        "arrowed patterns over bottom row {bottom:?}: {}",
        decorated.len()
    );
    let sample = &decorated[decorated.len() / 2];
    assert!(
        is_valid_arrowed(sample),
        "enumerator respects admissibility"
    );
    println!("one of them, as (entry, decoration) rows:");
    for (row, decor) in sample.base().rows().iter().zip(sample.decor()) {
        let cells: Vec<String> = row
            .iter()
            .zip(decor)
            .map(|(e, d)| format!("{e}:{d}"))
            .collect();
        println!("  {}", cells.join("  "));
    }

    // The smallest cases are checkable by hand: a single entry carries
    // one of 4 decorations but only 2 distinct weights survive the rules
    // at w = -1 (see the weights_and_signs example); all 4 decorations
    // are admissible as patterns.
    let tiny: Vec<_> = enumerate_arrowed(&[5])?.collect();
    assert_eq!(tiny.len(), 4, "a single entry takes all four decorations");

    // Bottom rows may repeat entries; the enumerator handles weak
    // increase (equal neighbors pinch the rows above).
    let pinched: Vec<_> = enumerate_gt(&[2, 2])?.collect();
    assert_eq!(pinched.len(), 1, "equal neighbors force the row above");

    Ok(())
}
