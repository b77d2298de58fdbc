//! Builds both families of irreducible representations of R_3 and prints a few
//! matrices, the branching rule and the sum-of-squares check.

use rookfft::reps::{branch_rn, labels};
use rookfft::rook::{parse_cycle_link, size};
use rookfft::{HalversonRep, SteinRep};

fn main() -> rookfft::Result<()> {
    let n = 3;
    let s = parse_cycle_link("(1,2)[3]", n)?;
    let mut total = 0;
    for label in labels(n) {
        let halverson = HalversonRep::new(&label);
        let stein = SteinRep::new(&label);
        total += halverson.dim().pow(2);
        let branch: Vec<String> = branch_rn(&label)?.iter().map(|l| l.to_string()).collect();
        println!(
            "{label} on {n} points: dim {}, restricts to [{}]",
            halverson.dim(),
            branch.join(", ")
        );
        println!("  seminormal image of {s}:{}", halverson.eval(&s)?);
        println!("  tensor-up image of the same element:{}", stein.eval_semigroup(&s)?);
    }
    println!("sum of squared dimensions {total} = |R_{n}| = {}", size(n));
    Ok(())
}
