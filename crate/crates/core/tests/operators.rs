use dcliff::fischer;
use dcliff::io::{parse_polynomial, polynomial_from_json, polynomial_to_json, print_polynomial};
use dcliff::operators as op;
use dcliff::random::{self, PolySpec};
use dcliff::rational::rat;
use dcliff::stencil;
use dcliff::{FamilySign, LatticePolynomial, Rational, Sign, Strategy as Split};
use proptest::prelude::*;

#[derive(Debug, Clone)]
struct Setup {
    seed: u64,
    n: usize,
    h: Rational,
    family: FamilySign,
    sign: Sign,
    degree: usize,
}

impl Setup {
    fn spec(&self) -> PolySpec {
        PolySpec::new(self.n, self.h.clone(), self.family)
    }

    fn polynomial(&self) -> LatticePolynomial {
        random::polynomial(&mut random::rng(self.seed), &self.spec(), self.degree)
    }

    fn homogeneous(&self) -> LatticePolynomial {
        random::homogeneous(&mut random::rng(self.seed), &self.spec(), self.degree)
    }

    fn points(&self) -> Vec<Vec<Rational>> {
        let mut rng = random::rng(self.seed ^ 0x5eed);
        (0..4)
            .map(|_| random::lattice_point(&mut rng, self.n, 3).into_iter().map(|m| rat(m, 1) * &self.h).collect())
            .collect()
    }
}

fn setup(max_n: usize, max_degree: usize) -> impl Strategy<Value = Setup> {
    (
        any::<u64>(),
        1..=max_n,
        prop_oneof![Just(rat(1, 1)), Just(rat(1, 2)), Just(rat(1, 3)), Just(rat(2, 1))],
        any::<bool>(),
        any::<bool>(),
        0..=max_degree,
    )
        .prop_map(|(seed, n, h, minus, plus, degree)| Setup {
            seed,
            n,
            h,
            family: if minus { FamilySign::Minus } else { FamilySign::Plus },
            sign: if plus { Sign::Plus } else { Sign::Minus },
            degree,
        })
}

fn agrees(p: &LatticePolynomial, oracle: &stencil::Field, points: &[Vec<Rational>]) -> bool {
    points.iter().all(|x| p.evaluate(x).unwrap() == oracle(x))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn dirac_matches_stencil(s in setup(3, 4)) {
        let p = s.polynomial();
        let f = stencil::from_polynomial(&p);
        prop_assert!(agrees(&op::dirac(&p, s.sign), &stencil::dirac(&f, s.n, s.sign, &s.h), &s.points()));
    }

    #[test]
    fn laplacian_and_euler_match_stencil(s in setup(3, 4)) {
        let p = s.polynomial();
        let f = stencil::from_polynomial(&p);
        prop_assert!(agrees(&op::laplacian(&p), &stencil::laplacian(&f, s.n, &s.h), &s.points()));
        prop_assert!(agrees(&op::euler(&p, s.sign), &stencil::euler(&f, s.n, s.sign, &s.h), &s.points()));
    }

    #[test]
    fn gamma_and_vector_variable_match_stencil(s in setup(3, 3)) {
        let p = s.polynomial();
        let f = stencil::from_polynomial(&p);
        prop_assert!(agrees(&op::gamma(&p, s.sign), &stencil::gamma(&f, s.n, s.sign, &s.h), &s.points()));
        prop_assert!(agrees(&op::vector_variable(&p), &stencil::vector_variable(&f), &s.points()));
    }

    #[test]
    fn monomial_conversion_round_trips(s in setup(3, 5)) {
        let p = s.polynomial();
        let back = p.to_monomial().unwrap().to_lattice(&s.h, s.family).unwrap();
        prop_assert_eq!(back, p);
    }

    #[test]
    fn text_and_json_round_trip(s in setup(4, 5)) {
        let p = s.polynomial();
        let text = print_polynomial(&p);
        prop_assert_eq!(&parse_polynomial(&text, s.n, &s.h, s.family).unwrap(), &p);
        let json = polynomial_to_json(&p).to_string();
        prop_assert_eq!(polynomial_from_json(&json).unwrap(), p);
    }

    #[test]
    fn fischer_product_is_symmetric(s in setup(3, 3)) {
        let p = s.homogeneous();
        let q = random::homogeneous(&mut random::rng(s.seed.wrapping_add(1)), &s.spec(), s.degree);
        prop_assert_eq!(fischer::inner_product(&p, &q).unwrap(), fischer::inner_product(&q, &p).unwrap());
        prop_assert!(fischer::inner_product(&p, &p).unwrap() > rat(0, 1));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn graded_decomposition_reconstructs(s in setup(2, 3)) {
        let p = s.homogeneous();
        let d = fischer::fischer_decompose(&p, Split::Graded).unwrap();
        prop_assert!(d.feasible);
        prop_assert!(d.annihilated);
        prop_assert!(d.residual.is_zero());
    }
}

#[test]
fn dirac_of_first_coordinate_is_e1() {
    let h = rat(1, 2);
    for family in [FamilySign::Minus, FamilySign::Plus] {
        let p = parse_polynomial("X1^(1) e0", 2, &h, family).unwrap();
        let d = op::dirac(&p, family.matched_sign());
        assert_eq!(print_polynomial(&d), "e1");
    }
}
