use blobtl::braids::{evaluate_word, parse_word, BraidFamily, BraidWord, Letter};
use blobtl::coefficients::{expand_to_series, LaurentPoly, RationalFunction};
use blobtl::coideal_rep::{element_to_operator_in, Fp};
use blobtl::diagrams::{enumerate_basis, Diagram, Family};
use blobtl::tl_algebra::TlElement;
use blobtl::weyl_group::{conjugacy_bipartition, DottedPermutation};
use proptest::prelude::*;

fn laurent() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((-3i64..=3, -3i64..=3), 0..4).prop_map(LaurentPoly::from_terms)
}

fn element(n: usize, family: Family) -> BoxedStrategy<TlElement<LaurentPoly>> {
    let basis = enumerate_basis(n, family).unwrap();
    let len = basis.len();
    prop::collection::vec((0..len, laurent()), 0..5)
        .prop_map(move |ts| TlElement::from_terms(n, n, ts.into_iter().map(|(i, c)| (basis[i].clone(), c))).unwrap())
        .boxed()
}

fn triple() -> impl Strategy<Value = [TlElement<LaurentPoly>; 3]> {
    (1usize..=4).prop_flat_map(|n| {
        let e = element(n, Family::B);
        (e.clone(), e.clone(), e).prop_map(|(a, b, c)| [a, b, c])
    })
}

fn basis_diagram() -> impl Strategy<Value = Diagram> {
    (1usize..=5).prop_flat_map(|n| {
        let basis = enumerate_basis(n, Family::B).unwrap();
        (0..basis.len()).prop_map(move |i| basis[i].clone())
    })
}

fn dotted_perm(n: usize) -> impl Strategy<Value = DottedPermutation> {
    let sigma = Just((1..=n).collect::<Vec<_>>()).prop_shuffle();
    (sigma, prop::collection::vec(0u8..=1, n)).prop_map(|(s, d)| DottedPermutation::new(&s, &d).unwrap())
}

fn perm_pair() -> impl Strategy<Value = (DottedPermutation, DottedPermutation, DottedPermutation)> {
    (1usize..=6).prop_flat_map(|n| (dotted_perm(n), dotted_perm(n), dotted_perm(n)))
}

fn braid(family: BraidFamily) -> impl Strategy<Value = BraidWord> {
    (2usize..=4).prop_flat_map(move |n| {
        let letter = (0..n + 1, any::<bool>()).prop_map(move |(k, inv)| match k {
            0 if family == BraidFamily::D => Letter::s0_prime(inv),
            0 => Letter::s0(),
            k if k == n => Letter::sigma(1),
            k if inv => Letter::sigma_inv(k),
            k => Letter::sigma(k),
        });
        prop::collection::vec(letter, 0..7).prop_map(move |ls| BraidWord::new(n, family, ls).unwrap())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn multiplication_is_associative([a, b, c] in triple()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
    }

    #[test]
    fn multiplication_distributes([a, b, c] in triple()) {
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
    }

    #[test]
    fn flip_reverses_products([a, b, _c] in triple()) {
        prop_assert_eq!((&a * &b).flip(), &b.flip() * &a.flip());
        prop_assert_eq!(a.flip().flip(), a);
    }

    #[test]
    fn phi_is_an_involutive_automorphism([a, b, _c] in triple()) {
        prop_assert_eq!((&a * &b).phi(), &a.phi() * &b.phi());
        prop_assert_eq!(a.phi().phi(), a);
    }

    #[test]
    fn diagram_round_trips(d in basis_diagram()) {
        prop_assert_eq!(&Diagram::from_json(&d.to_json()).unwrap(), &d);
        prop_assert_eq!(&Diagram::parse(&d.to_string(), d.bottom()).unwrap(), &d);
        prop_assert!(d.is_valid());
        prop_assert_eq!(&d.flip().flip(), &d);
    }

    #[test]
    fn braid_word_times_inverse_is_one(w in braid(BraidFamily::D)) {
        let n = w.n;
        let ww = w.concat(&w.inverse()).unwrap();
        prop_assert_eq!(evaluate_word::<LaurentPoly>(&ww).unwrap(), TlElement::one(n));
    }

    #[test]
    fn braid_text_round_trips(w in braid(BraidFamily::D)) {
        prop_assert_eq!(parse_word(&w.to_string(), w.n, BraidFamily::D).unwrap(), w);
    }

    #[test]
    fn braid_images_agree_across_rings(w in braid(BraidFamily::B1)) {
        let a: TlElement<LaurentPoly> = evaluate_word(&w).unwrap();
        let b: TlElement<RationalFunction> = evaluate_word(&w).unwrap();
        prop_assert_eq!(a.to_ratfunc(), b);
    }

    #[test]
    fn dotted_permutations_form_a_group((x, y, z) in perm_pair()) {
        prop_assert_eq!(x.mul(&y).mul(&z), x.mul(&y.mul(&z)));
        prop_assert!(x.mul(&x.inverse()).is_identity());
        prop_assert_eq!(x.mul(&y).sign(), x.sign() * y.sign());
    }

    #[test]
    fn product_is_signed_composition((x, y, _z) in perm_pair()) {
        let (sx, sy) = (x.to_signed_permutation(), y.to_signed_permutation());
        let apply = |w: &[i64], i: i64| if i > 0 { w[(i - 1) as usize] } else { -w[(-i - 1) as usize] };
        let want: Vec<i64> = sy.iter().map(|&j| apply(&sx, j)).collect();
        prop_assert_eq!(x.mul(&y).to_signed_permutation(), want.clone());
        prop_assert_eq!(DottedPermutation::from_signed_permutation(&want).unwrap(), x.mul(&y));
    }

    #[test]
    fn conjugation_preserves_class((x, y, _z) in perm_pair()) {
        let c = y.mul(&x).mul(&y.inverse());
        prop_assert_eq!(conjugacy_bipartition(&c), conjugacy_bipartition(&x));
    }

    #[test]
    fn representation_is_multiplicative(a in element(3, Family::B), b in element(3, Family::B)) {
        let (ra, rb) = (a.to_ratfunc(), b.to_ratfunc());
        let ab = &ra * &rb;
        let lhs = element_to_operator_in::<Fp>(&ab).unwrap();
        let rhs = element_to_operator_in::<Fp>(&ra).unwrap().compose(&element_to_operator_in::<Fp>(&rb).unwrap());
        prop_assert!(lhs == rhs);
    }

    #[test]
    fn laurent_ring_axioms(a in laurent(), b in laurent(), c in laurent()) {
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a - &b) + &b, a);
    }

    #[test]
    fn ratfunc_division_inverts_multiplication(a in laurent(), b in laurent()) {
        prop_assume!(!b.is_zero());
        let ra = RationalFunction::from_laurent(a);
        let rb = RationalFunction::from_laurent(b);
        prop_assert_eq!(&ra.checked_div(&rb).unwrap() * &rb, ra);
    }

    #[test]
    fn series_expansion_is_a_ring_map(a in laurent(), b in laurent(), c in laurent()) {
        prop_assume!(!c.is_zero());
        let x = RationalFunction::new(a, c.clone()).unwrap();
        let y = RationalFunction::new(b, c).unwrap();
        let p = 12;
        let prod = expand_to_series(&(&x * &y), p).unwrap();
        let sx = expand_to_series(&x, p).unwrap();
        let sy = expand_to_series(&y, p).unwrap();
        let lhs = (&sx * &sy).truncate(p);
        let sum = expand_to_series(&(&x + &y), p).unwrap();
        for e in -30..p {
            if let (Some(u), Some(v)) = (lhs.coeff(e), prod.coeff(e)) {
                prop_assert_eq!(u, v, "product at q^{}", e);
            }
            if let (Some(u), Some(v)) = ((&sx + &sy).coeff(e), sum.coeff(e)) {
                prop_assert_eq!(u, v, "sum at q^{}", e);
            }
        }
    }
}
