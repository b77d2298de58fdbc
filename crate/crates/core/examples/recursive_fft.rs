//! Fast Fourier transform in the semigroup basis through the subgroup chain,
//! with both fast routes timed against each other.

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rookfft::fft::{recursive_bound, stein_semigroup_bound};
use rookfft::rook::enumerate;
use rookfft::{AlgebraElement, Basis, Complex64, Family, RookFourier};

fn main() -> rookfft::Result<()> {
    for n in 1..=5 {
        let mut rng = ChaCha8Rng::seed_from_u64(n as u64);
        let f = AlgebraElement::from_terms(
            n,
            Basis::Semigroup,
            enumerate(n)
                .into_iter()
                .map(|s| (s, Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))),
        )?;
        let plan = RookFourier::new(n);

        let start = Instant::now();
        let rec = plan.recursive_fft(&f)?;
        let t_rec = start.elapsed();
        let start = Instant::now();
        let stein = plan.stein_fft_semigroup(&f)?;
        let t_stein = start.elapsed();

        let check = if n <= 4 {
            format!("{:.1e}", rec.max_abs_diff(&plan.naive(&f, Family::Halverson)?)?)
        } else {
            "skipped".into()
        };
        println!(
            "n={n}: recursive {:>7} ops (bound {:>7}, {t_rec:?}), tensor-up {:>7} ops (bound {:>7}, {t_stein:?}), oracle diff {check}",
            rec.ops.multiply_adds,
            recursive_bound(n),
            stein.ops.multiply_adds,
            stein_semigroup_bound(n),
        );
    }
    Ok(())
}
