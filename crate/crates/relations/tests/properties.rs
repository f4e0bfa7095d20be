use a3z_relations::{lhs_terms, merge_terms, rhs_part, theorem_rhs, Exponent, JPart, RelationParams, Term, TheoremId};
use proptest::prelude::*;

fn params() -> impl Strategy<Value = RelationParams> {
    (1u32..5, 1u32..5, 1u32..5, 1u32..5, 1u32..5).prop_map(|(p, q, a, b, c)| RelationParams { p, q, a, b, c })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn merge_conserves_multiplicity_when_nothing_cancels(p in params(), s in 5u32..9) {
        let rows: Vec<Term> = lhs_terms(&p).iter().map(|r| (r.sign.abs(), r.instantiate(&p, Exponent::Int(s)))).collect();
        for th in TheoremId::ALL {
            let m = merge_terms(&rows, th);
            prop_assert_eq!(m.iter().map(|(c, _)| *c).sum::<i64>(), 12);
        }
    }

    #[test]
    fn j1_and_j3_are_conjugate(p in params()) {
        prop_assert_eq!(rhs_part(JPart::J1, &p).unwrap().conj(), rhs_part(JPart::J3, &p).unwrap());
    }

    #[test]
    fn untwisted_lattice_rhs_are_real(p in params()) {
        for th in [TheoremId::SO6, TheoremId::PU4] {
            let r = theorem_rhs(th, &p).unwrap();
            prop_assert!(r.terms.values().all(|c| c.terms.values().all(|g| g.is_real())));
        }
    }
}
