mod common;
use common::*;
use grassq_core::pieri::bc_comparison_exponent;
use grassq_core::*;
use proptest::prelude::*;

fn any_spec(max_n: usize) -> impl Strategy<Value = Spec> {
    (1..=max_n, 0usize..4, 0usize..64).prop_map(|(n, t, m)| {
        let t = [LieType::C, LieType::B, LieType::D, LieType::Dmax][t];
        let m = if t == LieType::Dmax { n } else { 1 + m % n };
        spec(t, m, n)
    })
}

fn quantum_spec(max_n: usize) -> impl Strategy<Value = Spec> {
    any_spec(max_n).prop_filter("quantum ring available", |s| s.check_quantum().is_ok())
}

fn pick<T: Clone>(v: &[T], i: usize) -> T {
    v[i % v.len()].clone()
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, ..ProptestConfig::default() })]

    #[test]
    fn index_bijection(s in any_spec(6), i in any::<usize>()) {
        let lam = pick(&enumerate_basis(&s), i);
        let p = label_to_index_set(&s, &lam).unwrap();
        prop_assert_eq!(p.entries().len(), s.m);
        prop_assert_eq!(index_set_to_label(&s, &p).unwrap(), lam);
    }

    #[test]
    fn duality_is_an_involution(s in any_spec(6), i in any::<usize>()) {
        let lam = pick(&enumerate_basis(&s), i);
        let d = dual(&s, &lam).unwrap();
        prop_assert_eq!(lam.weight() + d.weight(), s.dim());
        prop_assert_eq!(dual(&s, &d).unwrap(), lam);
    }

    #[test]
    fn classical_pieri_is_graded_and_positive(s in any_spec(5), i in any::<usize>(), j in any::<usize>()) {
        let lam = pick(&enumerate_basis(&s), i);
        let g = pick(&Session::classical(s).generators(), j);
        let e = classical_pieri(&s, g, &lam).unwrap();
        prop_assert!(!e.has_negative());
        for (mu, q, _) in e.iter() {
            prop_assert!(q.is_zero());
            prop_assert_eq!(mu.weight(), lam.weight() + g.p);
            prop_assert!(mu.is_valid(&s));
        }
    }

    #[test]
    fn b_and_c_structure_constants(n in 1usize..=5, m in any::<usize>(), i in any::<usize>(), p in any::<usize>()) {
        let m = 1 + m % n;
        let (c, b) = (spec(LieType::C, m, n), spec(LieType::B, m, n));
        let lam = pick(&enumerate_basis(&c), i);
        let p = 1 + p % c.width();
        let e = classical_pieri(&c, SpecialClass::new(p), &lam).unwrap();
        let f = classical_pieri(&b, SpecialClass::new(p), &lam).unwrap();
        prop_assert_eq!(e.len(), f.len());
        for (nu, _, ec) in e.iter() {
            let x = bc_comparison_exponent(c.k, &lam, &Label::plain(&[p]), nu);
            let fc = f.coeff(nu, QExp::ZERO);
            if x >= 0 {
                prop_assert_eq!(fc, ec << x as usize);
            } else {
                prop_assert_eq!(fc << (-x) as usize, ec.clone());
            }
        }
    }

    #[test]
    fn products_are_homogeneous_and_commute(s in quantum_spec(3), i in any::<usize>(), j in any::<usize>()) {
        let basis = enumerate_basis(&s);
        let (a, b) = (pick(&basis, i), pick(&basis, j));
        let mut ses = Session::quantum(s).unwrap();
        let ab = ses.product(&a, &b).unwrap();
        prop_assert_eq!(&ab, &ses.product(&b, &a).unwrap());
        if !ab.is_zero() {
            prop_assert_eq!(ab.homogeneous_degree(&s), Some(Some(a.weight() + b.weight())));
        }
    }

    #[test]
    fn invariants_are_symmetric(s in quantum_spec(3), i in any::<usize>(), j in any::<usize>()) {
        let basis = enumerate_basis(&s);
        let (a, b) = (pick(&basis, i), pick(&basis, j));
        let mut ses = Session::quantum(s).unwrap();
        let ab = ses.product(&a, &b).unwrap();
        for (nu, q, c) in ab.iter() {
            let cdual = dual(&s, nu).unwrap();
            for (x, y, z) in [(&a, &cdual, &b), (&b, &a, &cdual), (&cdual, &b, &a), (&b, &cdual, &a)] {
                prop_assert_eq!(&ses.gromov_witten(x, y, z, q).unwrap(), c);
            }
        }
    }

    #[test]
    fn expressions_evaluate_to_their_class(s in quantum_spec(4), i in any::<usize>()) {
        let lam = pick(&enumerate_basis(&s), i);
        let mut ses = Session::quantum(s).unwrap();
        let f = ses.express(&lam).unwrap();
        prop_assert_eq!(f.homogeneous_degree(&s), Some(lam.weight()));
        prop_assert_eq!(ses.evaluate(&f).unwrap(), RingElement::basis(lam));
    }
}
