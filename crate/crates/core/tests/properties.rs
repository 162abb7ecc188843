//! Randomised invariants of the polynomial layer and the Cartan algebra.

use gsym_core::cgda::{build_cartan_algebra_flipped, homotopy_ranks, sullivan_reduce};
use gsym_core::embedding::full_restriction;
use gsym_core::homotopy::{ranks_via_cartan, symmetric_instances};
use gsym_core::liedata::{invariant_generators, SimpleType, Variant};
use gsym_core::poly::{
    express_in_generators, weighted_monomials, Generator, GeneratorExpression, LinearSubstitution, Monomial, Namespace,
    Polynomial, Rational,
};
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=4).prop_map(|(n, d)| Rational::new(n, d))
}

fn terms(vars: usize) -> impl Strategy<Value = Terms> {
    prop::collection::vec((prop::collection::vec(0u32..=2, vars), rational()), 0..5)
}

fn poly(ns: &Namespace, t: &Terms) -> Polynomial {
    Polynomial::from_terms(
        ns,
        t.iter().map(|(e, c)| (Monomial::from_exponents(e.clone()), c.clone())),
    )
}

type Terms = Vec<(Vec<u32>, Rational)>;

fn substitution_case() -> impl Strategy<Value = (usize, usize, Vec<Rational>, Terms, Terms)> {
    (1usize..=4, 1usize..=4).prop_flat_map(|(n, m)| {
        (
            Just(n),
            Just(m),
            prop::collection::vec(rational(), n * m),
            terms(n),
            terms(n),
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn substitution_is_a_ring_map((n, m, entries, tf, tg) in substitution_case()) {
        let src = Namespace::indexed("x", n);
        let dst = Namespace::indexed("y", m);
        let mat: Vec<Vec<Rational>> = entries.chunks(m).map(|r| r.to_vec()).collect();
        let sigma = LinearSubstitution::from_matrix(&src, &dst, &mat).unwrap();
        let (f, g) = (poly(&src, &tf), poly(&src, &tg));
        let s = |p: &Polynomial| p.substitute_linear(&sigma).unwrap();
        prop_assert_eq!(s(&(&f * &g)), &s(&f) * &s(&g));
        prop_assert_eq!(s(&(&f + &g)), &s(&f) + &s(&g));
    }

    #[test]
    fn expressions_round_trip(which in 0usize..6, w in 2u32..=8, mask in any::<u64>(), coeffs in prop::collection::vec(rational(), 64)) {
        let t = [SimpleType::a(2), SimpleType::a(3), SimpleType::b(3), SimpleType::c(3), SimpleType::d(4), SimpleType::G2][which];
        let set = invariant_generators(t, Variant::Standard).unwrap();
        let gens: Vec<Generator> = set
            .gens
            .iter()
            .map(|g| Generator::new(g.symbol.clone(), g.weight, g.polynomial(&set.variables)))
            .collect();
        let symbols = Namespace::new(gens.iter().map(|g| g.symbol.clone()));
        let weights: Vec<u32> = gens.iter().map(|g| g.weight).collect();
        let chosen = weighted_monomials(&weights, w)
            .into_iter()
            .enumerate()
            .filter(|(i, _)| mask >> (i % 64) & 1 == 1)
            .map(|(i, e)| (Monomial::from_exponents(e), coeffs[i % 64].clone()));
        let e = Polynomial::from_terms(&symbols, chosen);
        let expr = GeneratorExpression::new(weights, e.clone(), w).unwrap();
        let back = express_in_generators(&expr.expand(&gens).unwrap(), w, &gens).unwrap();
        prop_assert_eq!(back.polynomial(), &e);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn sign_flips_preserve_ranks(row in 0usize..64, mask in any::<u32>()) {
        let rows: Vec<_> = symmetric_instances(5).into_iter().filter(|r| !r.theorem_only).collect();
        let sp = &rows[row % rows.len()].space;
        let dim = full_restriction(sp).unwrap().target.len();
        let negate: Vec<usize> = (0..dim).filter(|i| mask >> i & 1 == 1).collect();
        let cgda = build_cartan_algebra_flipped(sp, &negate).unwrap();
        let flipped = homotopy_ranks(&sullivan_reduce(&cgda));
        prop_assert_eq!(flipped, ranks_via_cartan(sp).unwrap(), "{}", sp.label());
    }
}
