//! Tangent Stiefel-Whitney classes, their duals and p1 for a few PV and Y.

use stiefel::classes::char_class_report;
use stiefel::{Family, ManifoldId};

fn main() -> stiefel::Result<()> {
    let ids = [
        (Family::PV, 5, 2),
        (Family::PV, 10, 3),
        (Family::Y, 7, 1),
        (Family::Y, 9, 2),
        (Family::Y, 12, 3),
    ];
    for (f, n, k) in ids {
        let r = char_class_report(ManifoldId::new(f, n, k)?)?;
        println!("{}", r.manifold);
        println!("  w      = {}", r.total_sw);
        println!("  w-bar  = {}", r.inverse_sw);
        println!(
            "  top dual class in degree {}",
            r.dual_top_cohomological_degree
        );
        if let Some(p1) = r.p1_coefficient {
            let flag = if r.p1_generator_nonzero == Some(true) {
                "nonzero"
            } else {
                "not known nonzero"
            };
            println!("  p1     = {p1} x0^2 (x0^2 {flag})");
        }
    }
    Ok(())
}
