use num_bigint::BigUint;
use num_traits::{One, Zero};
use proptest::prelude::*;
use unimod::exactmath::{factorize, format_rational, parse_rational, rat, rational_roots};
use unimod::{PolyMatrix, PolyT, QSeries, Rational};

fn rational() -> impl Strategy<Value = Rational> {
    (-20i64..=20, 1i64..=6).prop_map(|(n, d)| rat(n, d))
}

fn poly(max_degree: usize) -> impl Strategy<Value = PolyT> {
    prop::collection::vec(rational(), 0..=max_degree + 1).prop_map(PolyT::from_coeffs)
}

fn series(order: usize) -> impl Strategy<Value = QSeries> {
    prop::collection::vec(rational(), order).prop_map(QSeries::new)
}

fn matrix(n: usize, max_degree: usize) -> impl Strategy<Value = PolyMatrix> {
    prop::collection::vec(poly(max_degree), n * n)
        .prop_map(move |e| PolyMatrix::new(n, n, e).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn determinant_algorithms_agree(m in matrix(5, 3)) {
        let interp = m.det_interp(m.degree_bound()).unwrap();
        prop_assert_eq!(interp, m.det_bareiss().unwrap());
    }

    #[test]
    fn row_swap_negates_determinant(m in matrix(4, 2), i in 0..4usize, j in 0..4usize) {
        prop_assume!(i != j);
        let mut perm: Vec<usize> = (0..4).collect();
        perm.swap(i, j);
        let swapped = m.permute_rows(&perm).unwrap();
        prop_assert_eq!(swapped.det_bareiss().unwrap(), -m.det_bareiss().unwrap());
    }

    #[test]
    fn determinant_evaluates_pointwise(m in matrix(3, 2), x in rational()) {
        let det = m.det_bareiss().unwrap();
        let scalar = unimod::exactmath::linalg::determinant(&m.evaluate(&x)).unwrap();
        prop_assert_eq!(det.eval(&x), scalar);
    }

    #[test]
    fn poly_ring_laws(a in poly(4), b in poly(4), c in poly(3)) {
        prop_assert_eq!(&(&a + &b) - &b, a.clone());
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
    }

    #[test]
    fn division_with_remainder(a in poly(6), b in poly(3)) {
        prop_assume!(!b.is_zero());
        let (q, r) = a.div_rem(&b).unwrap();
        prop_assert_eq!(&(&q * &b) + &r, a);
        prop_assert!(r.is_zero() || r.degree() < b.degree());
        prop_assert_eq!((&q * &b).exact_divide(&b).unwrap(), q);
    }

    #[test]
    fn interpolation_recovers_polynomial(p in poly(6)) {
        let pts: Vec<_> = (0..8).map(|i| (rat(i, 1), p.eval(&rat(i, 1)))).collect();
        prop_assert_eq!(PolyT::interpolate(&pts).unwrap(), p);
    }

    #[test]
    fn display_and_primitive_are_consistent(p in poly(5)) {
        prop_assume!(!p.is_zero());
        let (content, ints) = p.primitive_part();
        let back = PolyT::from_coeffs(ints.into_iter().map(Rational::from_integer).collect());
        prop_assert_eq!(back.scale(&content), p.clone());
        prop_assert!(back.leading_coeff().unwrap() > &Rational::zero());
        prop_assert!(!p.to_string().is_empty());
    }

    #[test]
    fn series_ring_laws(a in series(6), b in series(6), c in series(6)) {
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&(&a + &b) - &b, a.clone());
        prop_assert_eq!(&a * &QSeries::one(6), a.clone());
    }

    #[test]
    fn series_pow_matches_products(a in series(5), e in 0u32..5) {
        let mut acc = QSeries::one(5);
        for _ in 0..e {
            acc = &acc * &a;
        }
        prop_assert_eq!(a.pow(e), acc);
    }

    #[test]
    fn roots_of_products_are_found(
        roots in prop::collection::vec((-12i64..=12, 1i64..=5), 1..5),
        lead in 1i64..=9,
    ) {
        let rs: Vec<Rational> = roots.iter().map(|&(n, d)| rat(n, d)).collect();
        let p = PolyT::from_roots(&rs).scale(&rat(lead, 1));
        let mut expected = rs.clone();
        expected.sort();
        expected.dedup();
        prop_assert_eq!(rational_roots(&p).unwrap(), expected);
    }

    #[test]
    fn every_reported_root_is_a_root(p in poly(5)) {
        prop_assume!(!p.is_zero());
        for x in rational_roots(&p).unwrap() {
            prop_assert!(p.eval(&x).is_zero());
        }
    }

    #[test]
    fn rational_round_trip(x in rational()) {
        prop_assert_eq!(parse_rational(&format_rational(&x)).unwrap(), x);
    }

    #[test]
    fn factorization_multiplies_back(n in 2u64..2_000_000_000_000) {
        let n = BigUint::from(n);
        let f = factorize(&n);
        let back = f.iter().fold(BigUint::one(), |acc, (p, e)| acc * p.pow(*e));
        prop_assert_eq!(back, n);
        for w in f.windows(2) {
            prop_assert!(w[0].0 < w[1].0);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn non_roots_are_rejected(u in -300i64..=300, v in 1i64..=40) {
        // 10t² − 55t + 77 is irreducible over Q and (6t − 13) has the single root 13/6.
        let q = PolyT::from_ints(&[77, -55, 10]);
        let l = PolyT::from_ints(&[-13, 6]);
        let x = rat(u, v);
        prop_assert!(!q.eval(&x).is_zero());
        prop_assert_eq!(l.eval(&x).is_zero(), x == rat(13, 6));
        let product = &q * &l;
        prop_assert_eq!(rational_roots(&product).unwrap(), vec![rat(13, 6)]);
    }
}

#[test]
fn large_leading_coefficient_factors() {
    let n: BigUint = "19989882674056909935".parse().unwrap();
    let f = factorize(&n);
    let back = f.iter().fold(BigUint::one(), |acc, (p, e)| acc * p.pow(*e));
    assert_eq!(back, n);
    assert!(f.iter().any(|(p, _)| p > &BigUint::from(1u64 << 40)));
}
