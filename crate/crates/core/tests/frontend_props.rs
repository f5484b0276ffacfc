use linloop::arith::{rat, Rationals};
use linloop::frontend::{
    homogenize, lift_state, parse, propagate_sequential, AffineExpr, Assignment, Comparator,
    GuardAtom, SourceLoop, Term,
};
use linloop::matrix::{dot, mul_vec};
use linloop::Rational;
use num_traits::Signed;
use proptest::prelude::*;

const NAMES: [&str; 4] = ["a", "b", "x", "y"];

fn rational() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=4).prop_map(|(n, d)| Rational::new(n.into(), d.into()))
}

fn expr(n: usize) -> impl Strategy<Value = AffineExpr> {
    prop::collection::vec((rational(), prop::option::weighted(0.8, 0..n)), 1..=4).prop_map(
        |terms| AffineExpr {
            terms: terms
                .into_iter()
                .map(|(coeff, v)| Term {
                    coeff,
                    var: v.map(|i| NAMES[i].to_string()),
                })
                .collect(),
        },
    )
}

fn comparator() -> impl Strategy<Value = Comparator> {
    prop_oneof![
        Just(Comparator::Gt),
        Just(Comparator::Ge),
        Just(Comparator::Lt),
        Just(Comparator::Le)
    ]
}

fn source_loop(strict_single_guard: bool) -> impl Strategy<Value = SourceLoop> {
    (1usize..=4).prop_flat_map(move |n| {
        let guards = if strict_single_guard { 1..=1 } else { 1..=2 };
        (
            prop::collection::vec((expr(n), comparator(), expr(n)), guards),
            prop::sample::subsequence((0..n).collect::<Vec<_>>(), 1..=n).prop_shuffle(),
            prop::collection::vec(expr(n), n),
        )
            .prop_map(move |(guard, targets, exprs)| SourceLoop {
                variables: NAMES[..n].iter().map(|s| s.to_string()).collect(),
                guard: guard
                    .into_iter()
                    .map(|(lhs, cmp, rhs)| GuardAtom {
                        lhs,
                        cmp: if strict_single_guard {
                            if matches!(cmp, Comparator::Lt | Comparator::Le) {
                                Comparator::Lt
                            } else {
                                Comparator::Gt
                            }
                        } else {
                            cmp
                        },
                        rhs,
                    })
                    .collect(),
                body: targets
                    .into_iter()
                    .zip(exprs)
                    .map(|(t, expr)| Assignment {
                        target: NAMES[t].to_string(),
                        expr,
                    })
                    .collect(),
            })
    })
}

fn state(n: usize) -> impl Strategy<Value = Vec<Rational>> {
    prop::collection::vec(rational(), n)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn pretty_print_round_trips(l in source_loop(false)) {
        let text = l.to_string();
        prop_assert_eq!(parse(&text).unwrap(), l, "{}", text);
    }

    #[test]
    fn propagation_preserves_semantics(l in source_loop(false), x in state(4)) {
        let sys = propagate_sequential(&l);
        let mut seq = x[..l.variables.len()].to_vec();
        let mut sim = seq.clone();
        for _ in 0..10 {
            prop_assert_eq!(sys.guard_holds(&sim), l.guard_holds(&seq));
            seq = l.execute_body(&seq);
            sim = sys.step(&sim).unwrap();
            prop_assert_eq!(&sim, &seq);
        }
    }

    #[test]
    fn homogenization_preserves_guard_signs(l in source_loop(true), x in state(4)) {
        let sys = propagate_sequential(&l);
        let Ok(p) = homogenize(&sys) else {
            // a guard with no variables left after cancellation
            prop_assume!(false);
            unreachable!()
        };
        let mut affine = x[..sys.dimension()].to_vec();
        let mut hom = lift_state(&sys, &affine);
        for _ in 0..10 {
            let g = dot(&Rationals, p.guard(), &hom);
            prop_assert_eq!(g.is_positive(), sys.guard_holds(&affine));
            affine = sys.step(&affine).unwrap();
            hom = mul_vec(&Rationals, p.update(), &hom).unwrap();
            prop_assert_eq!(&hom[..affine.len()], &affine[..]);
        }
    }
}

#[test]
fn homogenize_example_matches_hand_built_program() {
    let sys = propagate_sequential(&parse("while (x > 5) { x := x + 1; }").unwrap());
    let p = homogenize(&sys).unwrap();
    let mut x = vec![rat(2), rat(1)];
    let mut raw = rat(2);
    for _ in 0..10 {
        assert_eq!(dot(&Rationals, p.guard(), &x).is_positive(), raw > rat(5));
        x = mul_vec(&Rationals, p.update(), &x).unwrap();
        raw += rat(1);
    }
}
