//! Embedding, immersion and span bounds for Y_{n,k}, n <= 14.

use stiefel::invariants::full_report;
use stiefel::{Family, ManifoldId};

fn show(v: Option<u64>) -> String {
    v.map_or_else(|| "-".into(), |x| x.to_string())
}

fn main() -> stiefel::Result<()> {
    println!(
        "{:<10} {:>4} {:>6} {:>6} {:>6}",
        "manifold", "dim", "skew", "immer", "span"
    );
    for id in ManifoldId::enumerate(Family::Y, 14) {
        let r = full_report(id)?;
        println!(
            "{:<10} {:>4} {:>6} {:>6} {:>6}",
            id.to_string(),
            r.dim,
            show(r.skew_embed_lower_bound),
            show(r.non_immersion_dim),
            show(r.stable_span_upper_bound),
        );
    }
    Ok(())
}
