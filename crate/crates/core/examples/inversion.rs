//! Recovers a function from its Fourier coefficients, from either family.

use rookfft::algebra::to_groupoid;
use rookfft::rook::enumerate;
use rookfft::{AlgebraElement, Basis, Complex64, RookFourier};

fn main() -> rookfft::Result<()> {
    let n = 3;
    let f = AlgebraElement::from_terms(
        n,
        Basis::Semigroup,
        enumerate(n)
            .into_iter()
            .enumerate()
            .map(|(i, s)| (s, Complex64::new(i as f64, -(i as f64) / 2.0))),
    )?;
    let plan = RookFourier::new(n);
    let expected = to_groupoid(&f)?;

    let from_stein = plan.invert(&plan.stein_fft_semigroup(&f)?)?;
    let from_halverson = plan.invert(&plan.recursive_fft(&f)?)?;
    println!("tensor-up coefficients: error {:.2e}", from_stein.max_abs_diff(&expected)?);
    println!("seminormal coefficients: error {:.2e}", from_halverson.max_abs_diff(&expected)?);
    Ok(())
}
