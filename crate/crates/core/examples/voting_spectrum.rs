//! Spectral analysis of partial rankings: 4 candidates, voters rank a prefix.
//! A ballot maps rank positions to candidates.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rookfft::rook::PartialPermutation;
use rookfft::spectral::{spectrum, Dataset};
use rookfft::Basis;

fn main() -> rookfft::Result<()> {
    let n = 4;
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut data = Dataset::new(n);
    for _ in 0..500 {
        // candidate 1 is popular, candidate 4 is rarely ranked
        let mut pool = vec![1, 1, 1, 2, 2, 3, 3, 4];
        let depth = rng.gen_range(1..=n);
        let mut picked = Vec::new();
        while picked.len() < depth {
            let c = pool[rng.gen_range(0..pool.len())];
            pool.retain(|&x| x != c);
            picked.push(c);
            if pool.is_empty() {
                break;
            }
        }
        let pairs: Vec<(usize, usize)> = picked.iter().enumerate().map(|(i, &c)| (i + 1, c)).collect();
        data.add(PartialPermutation::from_pairs(n, &pairs)?, 1.0)?;
    }
    println!("{} distinct ballots", data.len());

    for association in [Basis::Groupoid, Basis::Semigroup] {
        let report = spectrum(&data, association)?;
        println!("\n{association} association, total energy {:.1}", report.total);
        for l in &report.labels {
            println!("  k={} {:?}: {:>6.2}%", l.k, l.lambda, 100.0 * l.fraction);
        }
    }
    Ok(())
}
