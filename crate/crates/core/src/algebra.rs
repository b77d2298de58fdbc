//! The semigroup algebra `CR_n` in its two natural bases.
//!
//! The semigroup basis `{s}` multiplies by composition. The groupoid basis
//! `{⌊s⌋}`, with `⌊s⌋ = Σ_{t ≤ s} μ(t,s) t`, multiplies as `⌊r⌋⌊t⌋ = ⌊rt⌋` when
//! `dom r = ran t` and `0` otherwise. The two are related by the zeta transform
//! of the natural order: `s = Σ_{t ≤ s} ⌊t⌋`.
//!
//! Coefficients live in a sorted sparse map, so every sum below runs in the
//! canonical element order and is deterministic.

use std::collections::BTreeMap;
use std::fmt;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Result, RookError};
use crate::fft::OpCounter;
use crate::rook::{parse_flat, print_flat, PartialPermutation};

/// Entries with magnitude below this are dropped by [`AlgebraElement::normalize`].
pub const ZERO_THRESHOLD: f64 = 1e-14;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Basis {
    Semigroup,
    Groupoid,
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Basis::Semigroup => "semigroup",
            Basis::Groupoid => "groupoid",
        })
    }
}

impl std::str::FromStr for Basis {
    type Err = RookError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "semigroup" => Ok(Basis::Semigroup),
            "groupoid" => Ok(Basis::Groupoid),
            other => Err(RookError::Parse(format!("unknown basis `{other}`"))),
        }
    }
}

/// An element of `CR_n` expressed in one named basis.
#[derive(Clone, PartialEq)]
pub struct AlgebraElement {
    n: usize,
    basis: Basis,
    coeffs: BTreeMap<PartialPermutation, Complex64>,
}

impl AlgebraElement {
    pub fn zero(n: usize, basis: Basis) -> Self {
        Self {
            n,
            basis,
            coeffs: BTreeMap::new(),
        }
    }

    /// The single basis vector for `s`.
    pub fn point(s: PartialPermutation, basis: Basis) -> Self {
        let mut f = Self::zero(s.n(), basis);
        f.coeffs.insert(s, Complex64::new(1.0, 0.0));
        f
    }

    pub fn from_terms<I>(n: usize, basis: Basis, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (PartialPermutation, Complex64)>,
    {
        let mut f = Self::zero(n, basis);
        for (s, c) in terms {
            f.add_term(s, c)?;
        }
        Ok(f)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    /// Coefficient of the basis vector for `s` (zero when absent).
    pub fn get(&self, s: &PartialPermutation) -> Complex64 {
        self.coeffs.get(s).copied().unwrap_or_default()
    }

    pub fn add_term(&mut self, s: PartialPermutation, c: Complex64) -> Result<()> {
        if s.n() != self.n {
            return Err(RookError::Dimension(format!(
                "term {s:?} does not belong to R_{}",
                self.n
            )));
        }
        *self.coeffs.entry(s).or_default() += c;
        Ok(())
    }

    pub(crate) fn add_term_unchecked(&mut self, s: PartialPermutation, c: Complex64) {
        *self.coeffs.entry(s).or_default() += c;
    }

    /// Nonzero terms in canonical order.
    pub fn terms(&self) -> impl Iterator<Item = (&PartialPermutation, &Complex64)> {
        self.coeffs.iter()
    }

    pub fn support_len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.values().all(|c| c.norm() < ZERO_THRESHOLD)
    }

    /// Drops entries with magnitude below [`ZERO_THRESHOLD`].
    pub fn normalize(mut self) -> Self {
        self.coeffs.retain(|_, c| c.norm() >= ZERO_THRESHOLD);
        self
    }

    /// Reinterprets the same coefficients in another basis.
    pub fn with_basis(mut self, basis: Basis) -> Self {
        self.basis = basis;
        self
    }

    pub fn scale(&self, c: Complex64) -> Self {
        let mut out = self.clone();
        for v in out.coeffs.values_mut() {
            *v *= c;
        }
        out
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (s, c) in &other.coeffs {
            out.add_term_unchecked(*s, *c);
        }
        Ok(out.normalize())
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(Complex64::new(-1.0, 0.0)))
    }

    /// Largest coefficient difference, after checking both share `n` and basis.
    pub fn max_abs_diff(&self, other: &Self) -> Result<f64> {
        self.check_same(other)?;
        let mut m: f64 = 0.0;
        for (s, c) in &self.coeffs {
            m = m.max((c - other.get(s)).norm());
        }
        for (s, c) in &other.coeffs {
            if !self.coeffs.contains_key(s) {
                m = m.max(c.norm());
            }
        }
        Ok(m)
    }

    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        matches!(self.max_abs_diff(other), Ok(d) if d <= tol)
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return Err(RookError::Dimension(format!(
                "R_{} vs R_{}",
                self.n, other.n
            )));
        }
        if self.basis != other.basis {
            return Err(RookError::Basis(format!(
                "{} basis vs {} basis",
                self.basis, other.basis
            )));
        }
        Ok(())
    }

    pub(crate) fn require(&self, basis: Basis, op: &str) -> Result<()> {
        if self.basis != basis {
            return Err(RookError::Basis(format!(
                "{op} expects the {basis} basis, got {}",
                self.basis
            )));
        }
        Ok(())
    }
}

impl fmt::Debug for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AlgebraElement(R_{}, {}) {{", self.n, self.basis)?;
        for (s, c) in &self.coeffs {
            write!(f, " [{s}]: {c},")?;
        }
        f.write_str(" }")
    }
}

/// `(f∗g)(s) = Σ_{rt = s} f(r) g(t)`.
pub fn convolve_semigroup(f: &AlgebraElement, g: &AlgebraElement) -> Result<AlgebraElement> {
    f.require(Basis::Semigroup, "semigroup convolution")?;
    g.require(Basis::Semigroup, "semigroup convolution")?;
    f.check_same(g)?;
    let mut out = AlgebraElement::zero(f.n, Basis::Semigroup);
    for (r, a) in &f.coeffs {
        for (t, b) in &g.coeffs {
            out.add_term_unchecked(r.compose_unchecked(t), a * b);
        }
    }
    Ok(out.normalize())
}

/// Linear extension of `⌊r⌋⌊t⌋ = ⌊rt⌋` if `dom r = ran t`, else `0`.
pub fn convolve_groupoid(f: &AlgebraElement, g: &AlgebraElement) -> Result<AlgebraElement> {
    f.require(Basis::Groupoid, "groupoid convolution")?;
    g.require(Basis::Groupoid, "groupoid convolution")?;
    f.check_same(g)?;
    let mut by_range: BTreeMap<u32, Vec<(&PartialPermutation, &Complex64)>> = BTreeMap::new();
    for (t, b) in &g.coeffs {
        by_range.entry(t.range_mask()).or_default().push((t, b));
    }
    let mut out = AlgebraElement::zero(f.n, Basis::Groupoid);
    for (r, a) in &f.coeffs {
        if let Some(ts) = by_range.get(&r.domain_mask()) {
            for (t, b) in ts {
                out.add_term_unchecked(r.compose_unchecked(t), a * *b);
            }
        }
    }
    Ok(out.normalize())
}

/// Multiplication in whichever basis both operands share.
pub fn convolve(f: &AlgebraElement, g: &AlgebraElement) -> Result<AlgebraElement> {
    match f.basis {
        Basis::Semigroup => convolve_semigroup(f, g),
        Basis::Groupoid => convolve_groupoid(f, g),
    }
}

/// Semigroup → groupoid coordinates: the coefficient of `⌊s⌋` is `Σ_{x ≥ s} f(x)`.
pub fn to_groupoid(f: &AlgebraElement) -> Result<AlgebraElement> {
    to_groupoid_counted(f, &mut OpCounter::default())
}

/// [`to_groupoid`], counting one operation per comparable pair `s ≤ x` visited.
pub fn to_groupoid_counted(f: &AlgebraElement, ops: &mut OpCounter) -> Result<AlgebraElement> {
    f.require(Basis::Semigroup, "to_groupoid")?;
    let mut out = AlgebraElement::zero(f.n, Basis::Groupoid);
    for (x, c) in &f.coeffs {
        for s in x.restrictions() {
            out.add_term_unchecked(s, *c);
            ops.add(1);
        }
    }
    Ok(out.normalize())
}

/// Groupoid → semigroup coordinates by Möbius inversion: the coefficient of
/// `t` is `Σ_{s ≥ t} μ(t,s) g(s)`.
pub fn to_semigroup(g: &AlgebraElement) -> Result<AlgebraElement> {
    g.require(Basis::Groupoid, "to_semigroup")?;
    let mut out = AlgebraElement::zero(g.n, Basis::Semigroup);
    for (s, c) in &g.coeffs {
        let rs = s.rank();
        for t in s.restrictions() {
            let sign = if (rs - t.rank()) % 2 == 0 { 1.0 } else { -1.0 };
            out.add_term_unchecked(t, c * sign);
        }
    }
    Ok(out.normalize())
}

/// Converts to `basis`, a no-op when already there.
pub fn to_basis(f: &AlgebraElement, basis: Basis) -> Result<AlgebraElement> {
    match (f.basis, basis) {
        (a, b) if a == b => Ok(f.clone()),
        (Basis::Semigroup, Basis::Groupoid) => to_groupoid(f),
        _ => to_semigroup(f),
    }
}

fn coefficient_inner(f: &AlgebraElement, g: &AlgebraElement) -> Complex64 {
    let mut acc = Complex64::default();
    for (s, a) in &f.coeffs {
        if let Some(b) = g.coeffs.get(s) {
            acc += a * b.conj();
        }
    }
    acc
}

/// `⟨f, g⟩₁`: the semigroup basis is orthonormal.
pub fn inner1(f: &AlgebraElement, g: &AlgebraElement) -> Result<Complex64> {
    f.require(Basis::Semigroup, "inner1")?;
    f.check_same(g)?;
    Ok(coefficient_inner(f, g))
}

/// `⟨f, g⟩₂`: the groupoid basis is orthonormal.
pub fn inner2(f: &AlgebraElement, g: &AlgebraElement) -> Result<Complex64> {
    f.require(Basis::Groupoid, "inner2")?;
    f.check_same(g)?;
    Ok(coefficient_inner(f, g))
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    elem: String,
    re: f64,
    im: f64,
}

#[derive(Serialize, Deserialize)]
struct AlgebraElementJson {
    n: usize,
    basis: Basis,
    terms: Vec<TermJson>,
}

impl AlgebraElement {
    /// `{n, basis, terms: [{elem: "2->1;4->4", re, im}]}` with terms in canonical order.
    pub fn to_json(&self) -> String {
        let doc = AlgebraElementJson {
            n: self.n,
            basis: self.basis,
            terms: self
                .coeffs
                .iter()
                .map(|(s, c)| TermJson {
                    elem: print_flat(s),
                    re: c.re,
                    im: c.im,
                })
                .collect(),
        };
        serde_json::to_string_pretty(&doc).expect("plain data serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let doc: AlgebraElementJson = serde_json::from_str(text)?;
        let mut f = AlgebraElement::zero(doc.n, doc.basis);
        for t in doc.terms {
            let s = parse_flat(&t.elem, doc.n)?;
            f.add_term_unchecked(s, Complex64::new(t.re, t.im));
        }
        Ok(f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rook::{enumerate, OrderedKSubset};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    fn pp(n: usize, pairs: &[(usize, usize)]) -> PartialPermutation {
        PartialPermutation::from_pairs(n, pairs).unwrap()
    }

    fn random(n: usize, basis: Basis, rng: &mut ChaCha8Rng) -> AlgebraElement {
        AlgebraElement::from_terms(
            n,
            basis,
            enumerate(n)
                .into_iter()
                .map(|s| (s, Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))),
        )
        .unwrap()
    }

    #[test]
    fn point_masses_multiply_like_the_monoid() {
        let all = enumerate(2);
        for r in &all {
            for t in &all {
                let p = convolve_semigroup(
                    &AlgebraElement::point(*r, Basis::Semigroup),
                    &AlgebraElement::point(*t, Basis::Semigroup),
                )
                .unwrap();
                assert_eq!(p, AlgebraElement::point(*r * *t, Basis::Semigroup));
            }
        }
    }

    #[test]
    fn identity_is_unit() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let f = random(3, Basis::Semigroup, &mut rng);
        let e = AlgebraElement::point(PartialPermutation::identity(3), Basis::Semigroup);
        assert!(convolve_semigroup(&e, &f).unwrap().approx_eq(&f, 1e-12));
    }

    #[test]
    fn semigroup_convolution_matches_triple_loop() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let f = random(3, Basis::Semigroup, &mut rng);
        let g = random(3, Basis::Semigroup, &mut rng);
        let fg = convolve_semigroup(&f, &g).unwrap();
        let all = enumerate(3);
        for s in &all {
            let mut brute = Complex64::default();
            for r in &all {
                for t in &all {
                    if *r * *t == *s {
                        brute += f.get(r) * g.get(t);
                    }
                }
            }
            assert!((brute - fg.get(s)).norm() < 1e-12);
        }
    }

    #[test]
    fn groupoid_products_of_the_example_pair() {
        let sigma = pp(4, &[(1, 2), (3, 1)]);
        let pi = pp(4, &[(1, 4), (2, 3)]);
        let bs = AlgebraElement::point(sigma, Basis::Groupoid);
        let bp = AlgebraElement::point(pi, Basis::Groupoid);
        assert!(convolve_groupoid(&bs, &bp).unwrap().is_zero());
        assert_eq!(
            convolve_groupoid(&bp, &bs).unwrap(),
            AlgebraElement::point(pp(4, &[(1, 3), (3, 4)]), Basis::Groupoid)
        );
        let e = PartialPermutation::idempotent_on(&OrderedKSubset::new(4, &[1, 3]).unwrap());
        let be = AlgebraElement::point(e, Basis::Groupoid);
        assert_eq!(convolve_groupoid(&be, &be).unwrap(), be);
    }

    #[test]
    fn groupoid_convolution_matches_function_formula() {
        // (f∗g)(s) = Σ_{r : ran r = ran s} f(r) g(r⁻¹ s)
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let f = random(3, Basis::Groupoid, &mut rng);
        let g = random(3, Basis::Groupoid, &mut rng);
        let fg = convolve_groupoid(&f, &g).unwrap();
        let all = enumerate(3);
        for s in &all {
            let mut brute = Complex64::default();
            for r in all.iter().filter(|r| r.range() == s.range()) {
                brute += f.get(r) * g.get(&(r.inverse() * *s));
            }
            assert!((brute - fg.get(s)).norm() < 1e-12);
        }
    }

    #[test]
    fn mismatched_bases_are_errors() {
        let a = AlgebraElement::zero(2, Basis::Semigroup);
        let b = AlgebraElement::zero(2, Basis::Groupoid);
        assert!(matches!(convolve_semigroup(&a, &b), Err(RookError::Basis(_))));
        assert!(matches!(convolve_groupoid(&b, &a), Err(RookError::Basis(_))));
        assert!(matches!(inner1(&b, &b), Err(RookError::Basis(_))));
        assert!(matches!(inner2(&a, &a), Err(RookError::Basis(_))));
        assert!(matches!(to_semigroup(&a), Err(RookError::Basis(_))));
    }

    #[test]
    fn change_of_basis_on_r1() {
        let id = PartialPermutation::identity(1);
        let z = PartialPermutation::zero(1);
        let (a, b) = (c(2.0), c(5.0));
        let f = AlgebraElement::from_terms(1, Basis::Semigroup, [(id, a), (z, b)]).unwrap();
        let g = to_groupoid(&f).unwrap();
        assert_eq!(g.get(&id), a);
        assert_eq!(g.get(&z), a + b);

        let top = to_semigroup(&AlgebraElement::point(id, Basis::Groupoid)).unwrap();
        assert_eq!(top.get(&id), c(1.0));
        assert_eq!(top.get(&z), c(-1.0));
        assert_eq!(
            to_semigroup(&AlgebraElement::point(z, Basis::Groupoid)).unwrap(),
            AlgebraElement::point(z, Basis::Semigroup)
        );
    }

    #[test]
    fn identity_expands_over_partial_identities() {
        for n in 0..=3 {
            let g = to_groupoid(&AlgebraElement::point(
                PartialPermutation::identity(n),
                Basis::Semigroup,
            ))
            .unwrap();
            for s in enumerate(n) {
                let expected = if s.is_idempotent() { 1.0 } else { 0.0 };
                assert_eq!(g.get(&s), c(expected));
            }
        }
    }

    #[test]
    fn basis_changes_are_inverse_on_basis_vectors() {
        for n in 0..=4 {
            for s in enumerate(n) {
                let p = AlgebraElement::point(s, Basis::Semigroup);
                assert_eq!(to_semigroup(&to_groupoid(&p).unwrap()).unwrap(), p);
                let q = AlgebraElement::point(s, Basis::Groupoid);
                assert_eq!(to_groupoid(&to_semigroup(&q).unwrap()).unwrap(), q);
            }
        }
    }

    #[test]
    fn groupoid_expansion_matches_definition() {
        // ⌊s⌋ = Σ_{t ≤ s} μ(t, s) t
        let all = enumerate(3);
        for s in &all {
            let expanded = to_semigroup(&AlgebraElement::point(*s, Basis::Groupoid)).unwrap();
            for t in &all {
                assert_eq!(expanded.get(t), c(crate::rook::mobius(t, s) as f64));
            }
        }
    }

    #[test]
    fn basis_change_respects_multiplication() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        for n in 1..=3 {
            let f = random(n, Basis::Semigroup, &mut rng);
            let g = random(n, Basis::Semigroup, &mut rng);
            let lhs = to_groupoid(&convolve_semigroup(&f, &g).unwrap()).unwrap();
            let rhs =
                convolve_groupoid(&to_groupoid(&f).unwrap(), &to_groupoid(&g).unwrap()).unwrap();
            assert!(lhs.approx_eq(&rhs, 1e-10));
        }
    }

    #[test]
    fn associativity_in_both_bases() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for basis in [Basis::Semigroup, Basis::Groupoid] {
            for n in 1..=3 {
                let (f, g, h) = (
                    random(n, basis, &mut rng),
                    random(n, basis, &mut rng),
                    random(n, basis, &mut rng),
                );
                let left = convolve(&convolve(&f, &g).unwrap(), &h).unwrap();
                let right = convolve(&f, &convolve(&g, &h).unwrap()).unwrap();
                assert!(left.approx_eq(&right, 1e-10));
            }
        }
    }

    #[test]
    fn the_r1_inner_product_counterexample() {
        let id = PartialPermutation::identity(1);
        let z = PartialPermutation::zero(1);
        let top = to_semigroup(&AlgebraElement::point(id, Basis::Groupoid)).unwrap();
        let bottom = to_semigroup(&AlgebraElement::point(z, Basis::Groupoid)).unwrap();
        assert_eq!(inner1(&top, &bottom).unwrap(), c(-1.0));
        assert_eq!(
            inner2(
                &AlgebraElement::point(id, Basis::Groupoid),
                &AlgebraElement::point(z, Basis::Groupoid)
            )
            .unwrap(),
            c(0.0)
        );
    }

    #[test]
    fn zeta_op_count_within_bound() {
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        for n in 0..=5 {
            let f = random(n, Basis::Semigroup, &mut rng);
            let mut ops = OpCounter::default();
            to_groupoid_counted(&f, &mut ops).unwrap();
            assert_eq!(ops.multiply_adds, crate::rook::zeta_ones_by_columns(n));
            assert!(ops.multiply_adds <= (1 << n) * crate::rook::size(n));
        }
    }

    #[test]
    fn json_round_trip() {
        let f = AlgebraElement::from_terms(
            4,
            Basis::Groupoid,
            [(pp(4, &[(2, 1), (4, 4)]), Complex64::new(1.5, -2.0))],
        )
        .unwrap();
        let text = f.to_json();
        assert!(text.contains("\"2->1;4->4\""));
        assert_eq!(AlgebraElement::from_json(&text).unwrap(), f);
        assert!(AlgebraElement::from_json("{\"n\":2,\"basis\":\"groupoid\",\"terms\":[{\"elem\":\"1->3\",\"re\":1,\"im\":0}]}").is_err());
    }
}
