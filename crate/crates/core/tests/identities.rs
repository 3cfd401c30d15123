use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;

use disq::exact_poly::{delta_squared, discriminant, lead_power, power_sums, resultant};
use disq::rational::pow;
use disq::roots::{count_real_roots, isolate, real_roots};
use disq::Polynomial;

fn rational() -> impl Strategy<Value = BigRational> {
    (-30i64..=30, 1i64..=12).prop_map(|(p, q)| BigRational::new(BigInt::from(p), BigInt::from(q)))
}

fn nonzero_rational() -> impl Strategy<Value = BigRational> {
    rational().prop_filter("nonzero", |r| !r.is_zero())
}

fn poly_of_degree(lo: usize, hi: usize) -> impl Strategy<Value = Polynomial> {
    (lo..=hi).prop_flat_map(|n| {
        (nonzero_rational(), prop::collection::vec(rational(), n)).prop_map(|(lead, rest)| {
            let mut c = vec![lead];
            c.extend(rest);
            Polynomial::new(c).unwrap()
        })
    })
}

fn sign_factor(n: usize) -> BigRational {
    if (n * (n - 1) / 2) % 2 == 1 {
        -BigRational::one()
    } else {
        BigRational::one()
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn discriminant_is_leading_power_times_root_product(f in poly_of_degree(2, 6)) {
        prop_assert_eq!(discriminant(&f).unwrap(), lead_power(&f) * delta_squared(&f).unwrap());
    }

    #[test]
    fn discriminant_is_normalized_resultant(f in poly_of_degree(2, 6)) {
        let n = f.degree();
        let r = resultant(&f, &f.derivative()).unwrap();
        prop_assert_eq!(f.leading() * discriminant(&f).unwrap(), sign_factor(n) * r);
    }

    #[test]
    fn translation_preserves_discriminant(f in poly_of_degree(2, 6), t in rational()) {
        prop_assert_eq!(discriminant(&f.translate(&t)).unwrap(), discriminant(&f).unwrap());
    }

    #[test]
    fn scaling_laws(f in poly_of_degree(2, 6), s in nonzero_rational(), l in nonzero_rational()) {
        let n = f.degree();
        let d = discriminant(&f).unwrap();
        prop_assert_eq!(discriminant(&f.scale_x(&s)).unwrap(), &d * pow(&s, n * (n - 1)));
        prop_assert_eq!(discriminant(&f.scale(&l)).unwrap(), &d * pow(&l, 2 * n - 2));
    }

    #[test]
    fn reversal_preserves_discriminant(f in poly_of_degree(2, 6)) {
        prop_assume!(!f.trailing().is_zero());
        prop_assert_eq!(discriminant(&f.reverse()).unwrap(), discriminant(&f).unwrap());
    }

    #[test]
    fn power_sums_of_known_roots(roots in prop::collection::vec(rational(), 1..6)) {
        let f = Polynomial::from_roots(BigRational::one(), &roots).unwrap();
        let p = power_sums(&f, 6).unwrap();
        for (k, pk) in p.iter().enumerate() {
            let direct = roots.iter().fold(BigRational::zero(), |acc, r| acc + pow(r, k));
            prop_assert_eq!(pk, &direct);
        }
    }

    #[test]
    fn repeated_roots_have_zero_discriminant(roots in prop::collection::vec(rational(), 1..5)) {
        let mut rs = roots.clone();
        rs.push(roots[0].clone());
        let f = Polynomial::from_roots(BigRational::from_integer(3.into()), &rs).unwrap();
        prop_assert!(discriminant(&f).unwrap().is_zero());
        prop_assert!(isolate(&f).unwrap().multiplicity_flag);
    }

    #[test]
    fn square_free_factors_rebuild_the_polynomial(roots in prop::collection::vec(-4i64..=4, 1..7)) {
        let rs: Vec<BigRational> = roots.iter().map(|&r| BigRational::from_integer(r.into())).collect();
        let f = Polynomial::from_roots(BigRational::from_integer(2.into()), &rs).unwrap();
        let (lead, factors) = f.square_free_decomposition().unwrap();
        let mut rebuilt = Polynomial::constant(lead);
        for (i, q) in factors.iter().enumerate() {
            for _ in 0..=i {
                rebuilt = &rebuilt * q;
            }
        }
        prop_assert_eq!(rebuilt, f);
    }

    #[test]
    fn isolated_roots_cover_the_distinct_roots(roots in prop::collection::vec(-6i64..=6, 1..7)) {
        let rs: Vec<BigRational> = roots.iter().map(|&r| BigRational::from_integer(r.into())).collect();
        let f = Polynomial::from_roots(BigRational::one(), &rs).unwrap();
        let mut distinct = roots.clone();
        distinct.sort_unstable();
        distinct.dedup();
        prop_assert_eq!(count_real_roots(&f).unwrap(), distinct.len());
        let found = real_roots(&f, 1e-12).unwrap();
        prop_assert_eq!(found.len(), distinct.len());
        for ((x, m), r) in found.iter().zip(&distinct) {
            prop_assert!((x - *r as f64).abs() <= 1e-9);
            prop_assert_eq!(*m, roots.iter().filter(|&&v| v == *r).count());
        }
    }
}
