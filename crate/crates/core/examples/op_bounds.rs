//! Tabulates measured operation counts next to their worst-case bounds.

use rookfft::cli::bench_row;

fn main() -> rookfft::Result<()> {
    println!("n  |R_n|  naive      tensor-up  semigroup  recursive  within bounds");
    for n in 1..=5 {
        let row = bench_row(n, 0)?;
        println!(
            "{n}  {:<5}  {:<9}  {:<9}  {:<9}  {:<9}  {}",
            row.size, row.ops_naive, row.ops_stein, row.ops_stein_semigroup, row.ops_recursive, row.within_bounds
        );
    }
    Ok(())
}
