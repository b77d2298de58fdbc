//! Fast Fourier transform in the groupoid basis, compared with the naive sum.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rookfft::fft::{naive_bound, stein_bound};
use rookfft::rook::enumerate;
use rookfft::{AlgebraElement, Basis, Complex64, Family, RookFourier};

fn main() -> rookfft::Result<()> {
    let n = 4;
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let f = AlgebraElement::from_terms(
        n,
        Basis::Groupoid,
        enumerate(n).into_iter().map(|s| (s, Complex64::new(rng.gen_range(-1.0..1.0), 0.0))),
    )?;
    let plan = RookFourier::new(n);
    let fast = plan.stein_fft(&f)?;
    let slow = plan.naive(&f, Family::Stein)?;
    println!("max difference {:.2e}", fast.max_abs_diff(&slow)?);
    println!(
        "ops: fast {} (bound {}), naive {} (bound {})",
        fast.ops.multiply_adds,
        stein_bound(n),
        slow.ops.multiply_adds,
        naive_bound(n)
    );
    for (label, block) in fast.blocks() {
        println!("{label}: {}x{}, norm {:.4}", block.nrows(), block.ncols(), block.norm());
    }
    Ok(())
}
