//! Additive presentation of H*(M; Z2).
//!
//!     cargo run -p stiefel --example cohomology_presentation -- Y 9 2

use stiefel::cohomology::{charrank_of_canonical_bundle, presentation};
use stiefel::{Family, ManifoldId};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let id = match args.as_slice() {
        [f, n, k] => ManifoldId::new(f.parse::<Family>()?, n.parse()?, k.parse()?)?,
        _ => ManifoldId::new(Family::PV, 5, 2)?,
    };
    let p = presentation(id)?;

    println!("{id}, dim {}", p.manifold_dim);
    let ext: Vec<String> = p
        .exterior
        .iter()
        .map(|g| format!("y_{} ({})", g.index, g.degree))
        .collect();
    println!(
        "exterior: {}",
        if ext.is_empty() {
            "none".into()
        } else {
            ext.join(", ")
        }
    );
    if let Some(x) = p.polynomial {
        println!(
            "polynomial: Z2[x]/(x^{}) with |x| = {}, y_{} removed",
            x.truncation, x.degree, x.excluded.index
        );
    }
    println!("total rank: {}", p.total_rank()?);
    println!("betti: {:?}", p.betti_numbers()?);
    if let Ok(c) = charrank_of_canonical_bundle(&p) {
        println!("charrank of the canonical bundle: {c}");
    }
    Ok(())
}
