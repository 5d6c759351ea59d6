//! Arithmetic in Z2[x]/(x^T): products, inverses, negative powers and the
//! binomial parities behind them.

use stiefel::{binom_parity, geometric_inverse_coefficient, TruncatedGF2Poly};

fn main() -> stiefel::Result<()> {
    let t = 12;
    let w = TruncatedGF2Poly::one_plus_x(t).pow(10)?;
    println!("(1+x)^10       = {w}");
    println!("(1+x)^-10      = {}", w.inverse()?);
    println!("check          = {}", w.try_mul(&w.inverse()?)?);

    // Coefficients of (1+x)^-q without any polynomial arithmetic.
    let closed: Vec<usize> = (0..t as u64)
        .filter(|&j| geometric_inverse_coefficient(10, j).is_odd())
        .map(|j| j as usize)
        .collect();
    println!(
        "closed form    = {}",
        TruncatedGF2Poly::from_exponents(closed, t)
    );

    let a = TruncatedGF2Poly::from_exponents([0, 3, 7], 200);
    println!("a^2            = {}", a.square());
    println!("deg a^-1 < 200 : {:?}", a.inverse()?.degree());

    print!("odd binom(12, r):");
    for r in 0..=12 {
        if binom_parity(12, r).is_odd() {
            print!(" {r}");
        }
    }
    println!();
    Ok(())
}
