//! Where the two printed readings of the Y cutoff window disagree, and what
//! each does to the dimension check.

use stiefel::cohomology::{
    cutoff_j, cutoff_j_published, cutoff_j_window, cutoff_j_window_published,
};
use stiefel::{manifold_dim, Family, ManifoldId};

fn top_degree(n: u32, k: u32, j: u32) -> u64 {
    let ext: u64 = ((n - 2 * k)..n)
        .filter(|&d| d != 2 * j - 1)
        .map(u64::from)
        .sum();
    ext + 2 * u64::from(j - 1)
}

fn main() -> stiefel::Result<()> {
    println!(
        "{:<9} {:>9} {:>9} {:>3} {:>3} {:>6} {:>6} {:>4}",
        "manifold", "window", "printed", "J", "J'", "top", "top'", "dim"
    );
    for id in ManifoldId::enumerate(Family::Y, 12) {
        let (n, k) = (id.n(), id.k());
        let (j, jp) = (cutoff_j(n, k)?, cutoff_j_published(n, k));
        let Ok(jp) = jp else {
            println!("{id:<9} printed window has no admissible r");
            continue;
        };
        if j == jp {
            continue;
        }
        let (w, wp) = (cutoff_j_window(n, k), cutoff_j_window_published(n, k));
        println!(
            "{:<9} {:>9} {:>9} {j:>3} {jp:>3} {:>6} {:>6} {:>4}",
            id.to_string(),
            format!("{}..={}", w.start(), w.end()),
            format!("{}..={}", wp.start(), wp.end()),
            top_degree(n, k, j),
            top_degree(n, k, jp),
            manifold_dim(id),
        );
    }
    Ok(())
}
