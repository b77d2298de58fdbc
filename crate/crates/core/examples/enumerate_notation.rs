//! Lists R_3, parses both text forms and checks the counting formulas.

use rookfft::rook::{enumerate, parse_cycle_link, print_cycle_link, print_flat, size, size_recursive};

fn main() -> rookfft::Result<()> {
    for s in enumerate(3).iter().take(8) {
        println!("{:<14} {:<16} rank {}", print_cycle_link(s), print_flat(s), s.rank());
    }
    println!("...");

    let s = parse_cycle_link("(4)[1,3,2]", 4)?;
    let t = parse_cycle_link("(1,2)[3][4]", 4)?;
    println!("s = {}, t = {}", print_cycle_link(&s), print_cycle_link(&t));
    println!("s t = {}", print_cycle_link(&(s * t)));
    println!("s^-1 = {}", print_cycle_link(&s.inverse()));
    println!("rook matrix of s: {:?}", s.rook_matrix());

    for n in 0..=8 {
        println!("|R_{n}| = {} (recursion {})", size(n), size_recursive(n));
    }
    Ok(())
}
