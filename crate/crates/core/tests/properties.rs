use proptest::prelude::*;

use qcurv_core::jet::{divergence, normal_form, Background, JetExpr, VecBase, VectorExpr};
use qcurv_core::ring::{solve_exact, ExactMatrix, RationalFunction, UPoly};
use qcurv_core::sphere::{exact_generators, integrate_exact, Datum, Geometry, NodeJet, Quadrature};

fn upoly(max_deg: usize) -> impl Strategy<Value = UPoly> {
    prop::collection::vec(-5i64..=5, 1..=max_deg + 1).prop_map(|c| UPoly::from_ints(&c))
}

fn ratfunc() -> impl Strategy<Value = RationalFunction> {
    (upoly(2), upoly(2).prop_filter("nonzero denominator", |d| !d.is_zero()))
        .prop_map(|(a, b)| RationalFunction::new(a, b).unwrap())
}

fn jet_expr() -> impl Strategy<Value = JetExpr> {
    let gens = prop::sample::select(vec![1u8, 2, 3, 4, 5, 6, 9, 13, 14, 15]);
    prop::collection::vec((gens, -4i64..=4, 0u32..2), 1..5).prop_map(|terms| {
        terms.iter().fold(JetExpr::zero(), |acc, (g, c, r)| {
            &acc + &(&JetExpr::g(*g) * &JetExpr::r().pow(*r)).scale_int(*c)
        })
    })
}

fn closed_scalar() -> impl Strategy<Value = JetExpr> {
    let gens = prop::sample::select(vec![1u8, 2, 5, 9]);
    (gens, -3i64..=3, -2i64..=2).prop_map(|(g, c, k)| (&JetExpr::exp_u(k) * &JetExpr::g(g)).scale_int(c))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn field_axioms(a in ratfunc(), b in ratfunc(), c in ratfunc()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        if !a.is_zero() {
            prop_assert!((&a * &a.inv().unwrap()).is_one());
        }
    }

    #[test]
    fn specialization_is_a_homomorphism(a in ratfunc(), b in ratfunc(), k in -6i64..=12) {
        let n = RationalFunction::int(k);
        if let (Ok(sa), Ok(sb)) = (a.subs(&n), b.subs(&n)) {
            prop_assert_eq!((&a * &b).subs(&n).unwrap(), &sa * &sb);
            prop_assert_eq!((&a + &b).subs(&n).unwrap(), &sa + &sb);
        }
    }

    #[test]
    fn solver_output_satisfies_the_system(
        entries in prop::collection::vec(ratfunc(), 12),
        x0 in prop::collection::vec(ratfunc(), 3),
    ) {
        let rows: Vec<Vec<RationalFunction>> = entries.chunks(3).map(<[_]>::to_vec).collect();
        let a = ExactMatrix::from_rows(rows).unwrap();
        let b = a.mul_vec(&x0).unwrap();
        let x = solve_exact(&a, &b).unwrap().expect("consistent by construction");
        prop_assert!(a.verify_solution(&x, &b));
    }

    #[test]
    fn normal_form_is_idempotent_and_linear(e in jet_expr(), f in jet_expr(), k in 3i64..=9) {
        for bg in [Background::symbolic(), Background::fixed(k)] {
            let ne = normal_form(&e, &bg);
            prop_assert_eq!(normal_form(&ne, &bg), ne.clone());
            prop_assert_eq!(normal_form(&(&e + &f), &bg), &ne + &normal_form(&f, &bg));
        }
    }

    #[test]
    fn divergence_is_linear(a in closed_scalar(), b in closed_scalar(), c in -3i64..=3) {
        let bg = Background::symbolic();
        let wa = VectorExpr::basis(VecBase::V3).mul_scalar(&a);
        let wb = VectorExpr::basis(VecBase::V1).mul_scalar(&b);
        if a.weight() == b.weight() {
            let lhs = divergence(&(&wa + &wb.mul_scalar(&JetExpr::int(c))), &bg).unwrap();
            let rhs = &divergence(&wa, &bg).unwrap() + &divergence(&wb, &bg).unwrap().scale_int(c);
            prop_assert_eq!(normal_form(&lhs, &bg), normal_form(&rhs, &bg));
        }
    }

    #[test]
    fn normal_form_preserves_numeric_values(
        e in jet_expr(),
        coeffs in prop::collection::vec(-0.5f64..0.5, 4),
        x in -0.95f64..0.95,
    ) {
        for (geom, n) in [(Geometry::RoundSphere(4), 4), (Geometry::ProductS2xS2, 4), (Geometry::RoundSphere(6), 6)] {
            let bg = Background::fixed(n);
            let jet = NodeJet::new(geom, &Datum::FloatPoly(coeffs.clone()), x);
            let a = jet.eval(&e).unwrap();
            let b = jet.eval(&normal_form(&e, &bg)).unwrap();
            prop_assert!((a - b).abs() < 1e-9 * (1.0 + a.abs()), "{} vs {}", a, b);
        }
    }

    #[test]
    fn cauchy_schwarz_on_node_jets(coeffs in prop::collection::vec(-2.0f64..2.0, 5), x in -1.0f64..1.0) {
        for geom in [Geometry::RoundSphere(5), Geometry::ProductS2xS2] {
            let g = NodeJet::new(geom, &Datum::FloatPoly(coeffs.clone()), x).g;
            prop_assert!(g[4] * g[4] <= g[2] * g[8] * (1.0 + 1e-12) + 1e-12);
            prop_assert!(g[5] * g[5] <= g[2] * g[7] * (1.0 + 1e-12) + 1e-12);
        }
    }

    #[test]
    fn exact_and_quadrature_integrals_agree(p in upoly(3), which in 1usize..13) {
        for geom in [Geometry::RoundSphere(4), Geometry::RoundSphere(6), Geometry::ProductS2xS2] {
            let f = &exact_generators(geom, &p)[which];
            let exact = integrate_exact(geom, f).unwrap().to_f64();
            let q = Quadrature::new(geom, 400).unwrap();
            let quad = q.integrate(|x| f.eval_f64(x));
            let scale = 1.0 + q.integrate(|x| f.eval_f64(x).abs());
            prop_assert!((exact - quad).abs() < 1e-12 * scale, "{} vs {}", exact, quad);
        }
    }
}
