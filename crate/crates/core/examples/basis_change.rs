//! Moves an element between the semigroup and groupoid bases and shows that
//! the change of basis turns the semigroup product into the groupoid product.

use rookfft::algebra::{convolve, inner1, inner2, to_groupoid, to_semigroup};
use rookfft::rook::parse_flat;
use rookfft::{AlgebraElement, Basis, Complex64, PartialPermutation};

fn main() -> rookfft::Result<()> {
    let n = 2;
    let id = AlgebraElement::point(PartialPermutation::identity(n), Basis::Semigroup);
    println!("identity, groupoid coordinates:\n{}", to_groupoid(&id)?.to_json());

    let f = AlgebraElement::from_terms(
        n,
        Basis::Semigroup,
        [
            (parse_flat("1->2;2->1", n)?, Complex64::new(2.0, 0.0)),
            (parse_flat("1->1", n)?, Complex64::new(-1.0, 0.5)),
        ],
    )?;
    let g = AlgebraElement::from_terms(n, Basis::Semigroup, [(parse_flat("2->1", n)?, Complex64::new(3.0, 0.0))])?;

    let product = to_groupoid(&convolve(&f, &g)?)?;
    let via_groupoid = convolve(&to_groupoid(&f)?, &to_groupoid(&g)?)?;
    println!("product agrees in both bases: {}", product.approx_eq(&via_groupoid, 1e-12));
    println!("round trip exact: {}", to_semigroup(&to_groupoid(&f)?)?.approx_eq(&f, 1e-12));

    // the two inner products disagree on orthogonality
    let a = AlgebraElement::point(PartialPermutation::identity(1), Basis::Groupoid);
    let b = AlgebraElement::point(PartialPermutation::zero(1), Basis::Groupoid);
    println!("coefficient inner product of the groupoid basis vectors: {}", inner2(&a, &b)?);
    println!("same pair, semigroup coefficients: {}", inner1(&to_semigroup(&a)?, &to_semigroup(&b)?)?);
    Ok(())
}
