//! Build a sweep table in-process instead of through the binary.

use stiefel::Family;
use stiefel_cli::sweep;
use stiefel_cli::Format;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let (ids, skipped) = sweep::ids(Family::Y, 9..=16, 1..=4);
    let rows = sweep::rows(&ids)?;
    print!(
        "{}",
        sweep::render(Family::Y, &rows, skipped, Format::Markdown)?
    );

    let determined = rows
        .iter()
        .filter(|r| r.ucharrank.as_ref().is_some_and(|v| v.is_determined()))
        .count();
    println!(
        "\n{determined} of {} rows have a determined ucharrank",
        rows.len()
    );
    Ok(())
}
