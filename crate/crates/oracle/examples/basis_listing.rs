//! List every basis monomial of a small cohomology ring, then show the
//! duality check rejecting a presentation with the wrong generator removed.

use stiefel::cohomology::{presentation, Generator};
use stiefel::{Family, ManifoldId};
use stiefel_oracle::{check_duality, enumerate_basis};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let p = presentation(ManifoldId::new(Family::Y, 9, 2)?)?;
    for m in enumerate_basis(&p, 1 << 10)? {
        let ys: Vec<String> = m.y_indices.iter().map(|i| format!("y_{i}")).collect();
        println!("{:>3}  x^{} {}", m.degree, m.x_power, ys.join(" "));
    }
    println!("{:?}", check_duality(&p));

    // PW_{8,3} with y_{N-1} removed instead of y_N.
    let mut wrong = presentation(ManifoldId::new(Family::PW, 8, 3)?)?;
    let poly = wrong.polynomial.as_mut().expect("PW has a polynomial part");
    let n_minus_one = poly.excluded.index - 1;
    let kept = Generator {
        index: poly.excluded.index,
        degree: poly.excluded.degree,
    };
    poly.excluded = Generator {
        index: n_minus_one,
        degree: 2 * u64::from(n_minus_one) - 1,
    };
    wrong.exterior.retain(|g| g.index != n_minus_one);
    wrong.exterior.push(kept);
    println!(
        "PW_{{8,3}} without y_{n_minus_one}: {:?}",
        check_duality(&wrong)
    );
    Ok(())
}
