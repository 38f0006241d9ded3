use std::sync::OnceLock;

use chimney::chimney::Chimney;
use chimney::cosets::{count_histogram, count_intersection, count_parahoric, ParahoricFace};
use chimney::coxeter::{AffineElement, CorootVector, CoxeterSystem};
use chimney::gallery::shadow_alcove;
use chimney::geometry::{act_on_halfspace, act_on_hyperplane, HalfSpace, Side};
use chimney::parse::parse_element;
use chimney::polynomial::CountPolynomial;
use proptest::prelude::*;

const LABELS: [&str; 6] = ["A1", "A2", "C2", "G2", "A3", "B3"];

fn systems() -> &'static [CoxeterSystem] {
    static SYSTEMS: OnceLock<Vec<CoxeterSystem>> = OnceLock::new();
    SYSTEMS.get_or_init(|| {
        LABELS
            .iter()
            .map(|l| CoxeterSystem::from_label(l).unwrap())
            .collect()
    })
}

fn word(sys: &CoxeterSystem, max_len: usize) -> impl Strategy<Value = Vec<u8>> {
    prop::collection::vec(0..=sys.rank() as u8, 0..=max_len)
}

fn element(sys: &CoxeterSystem, max_len: usize) -> impl Strategy<Value = AffineElement> + '_ {
    word(sys, max_len).prop_map(move |w| sys.from_word(&w).unwrap())
}

fn system() -> impl Strategy<Value = &'static CoxeterSystem> {
    prop::sample::select(systems().iter().collect::<Vec<_>>())
}

fn small_system() -> impl Strategy<Value = &'static CoxeterSystem> {
    prop::sample::select(systems()[..4].iter().collect::<Vec<_>>())
}

fn halfspace(sys: &CoxeterSystem) -> impl Strategy<Value = HalfSpace> + '_ {
    (0..sys.num_positive_roots(), -4i64..=4, any::<bool>()).prop_map(move |(r, k, geq)| {
        HalfSpace::new(sys, r, k, if geq { Side::Geq } else { Side::Leq })
    })
}

fn chimney(sys: &CoxeterSystem) -> impl Strategy<Value = Chimney> + '_ {
    (
        prop::collection::vec(any::<bool>(), sys.rank()),
        element(sys, 3),
    )
        .prop_map(move |(mask, y)| {
            let j: Vec<usize> = (1..=sys.rank()).filter(|&i| mask[i - 1]).collect();
            Chimney::new(sys, &j, y).unwrap()
        })
}

fn polynomial(nvars: usize) -> impl Strategy<Value = CountPolynomial> {
    prop::collection::vec((-5i64..=5, prop::collection::vec(0..nvars, 0..3)), 0..4).prop_map(
        move |terms| {
            let mut p = CountPolynomial::zero(nvars);
            for (c, qs) in terms {
                let mut t = CountPolynomial::constant(nvars, c);
                for i in qs {
                    t = &t * &CountPolynomial::q(nvars, i);
                }
                p += &t;
            }
            p
        },
    )
}

proptest! {
    #[test]
    fn halfspace_action_is_a_group_action(
        (sys, x, y, h) in system().prop_flat_map(|s| (Just(s), element(s, 6), element(s, 6), halfspace(s)))
    ) {
        let xy = sys.mul(&x, &y);
        prop_assert_eq!(act_on_halfspace(sys, &x, act_on_halfspace(sys, &y, h)), act_on_halfspace(sys, &xy, h));
        prop_assert_eq!(act_on_halfspace(sys, &sys.identity(), h), h);
        prop_assert_eq!(act_on_halfspace(sys, &x, h).boundary(), act_on_hyperplane(sys, &x, h.boundary()));
        prop_assert_eq!(act_on_halfspace(sys, &x, h.opposite()), act_on_halfspace(sys, &x, h).opposite());
    }

    #[test]
    fn length_is_subadditive_and_inverse_invariant(
        (sys, x, y) in system().prop_flat_map(|s| (Just(s), element(s, 8), element(s, 8)))
    ) {
        let (lx, ly) = (sys.length(&x), sys.length(&y));
        prop_assert!(sys.length(&sys.mul(&x, &y)) <= lx + ly);
        prop_assert_eq!(sys.length(&sys.inverse(&x)), lx);
        prop_assert_eq!(sys.reduced_word(&x).len(), lx);
    }

    #[test]
    fn multiplication_is_associative(
        (sys, x, y, z) in system().prop_flat_map(|s| (Just(s), element(s, 6), element(s, 6), element(s, 6)))
    ) {
        prop_assert_eq!(sys.mul(&sys.mul(&x, &y), &z), sys.mul(&x, &sys.mul(&y, &z)));
        prop_assert_eq!(sys.mul(&x, &sys.inverse(&x)), sys.identity());
    }

    #[test]
    fn conjugating_a_translation_moves_its_coroot(
        (sys, x, lambda) in system().prop_flat_map(|s| {
            (Just(s), element(s, 8), prop::collection::vec(-3i64..=3, s.rank()))
        })
    ) {
        let w = x.linear.clone();
        let lambda = CorootVector(lambda);
        let conj = sys.mul(
            &sys.mul(&sys.spherical(w.clone()), &sys.translation(lambda.clone())),
            &sys.inverse(&sys.spherical(w.clone())),
        );
        prop_assert_eq!(conj, sys.translation(sys.act_on_coroot(&w, &lambda)));
    }

    #[test]
    fn chimney_contains_exactly_one_side(
        (sys, ch, h) in system().prop_flat_map(|s| (Just(s), chimney(s), halfspace(s)))
    ) {
        prop_assert_ne!(ch.contains(sys, h), ch.contains(sys, h.opposite()));
        let pulled = act_on_halfspace(sys, &sys.inverse(ch.y()), h);
        let untwisted = Chimney::new(sys, ch.j(), sys.identity()).unwrap();
        prop_assert_eq!(ch.contains(sys, h), untwisted.contains(sys, pulled));
    }

    #[test]
    fn printed_elements_reparse((sys, x) in system().prop_flat_map(|s| (Just(s), element(s, 10)))) {
        prop_assert_eq!(parse_element(sys, &sys.format_element(&x)).unwrap(), x);
    }

    #[test]
    fn evaluation_is_a_ring_homomorphism(
        (p, r, q) in (polynomial(3), polynomial(3), prop::collection::vec(2i64..=9, 3))
    ) {
        prop_assert_eq!((p.clone() + r.clone()).evaluate(&q), p.evaluate(&q) + r.evaluate(&q));
        prop_assert_eq!((&p * &r).evaluate(&q), p.evaluate(&q) * r.evaluate(&q));
        prop_assert_eq!(p.in_shifted_basis().evaluate(&q.iter().map(|v| v - 1).collect::<Vec<_>>()), p.evaluate(&q));
    }

    #[test]
    fn counts_have_nonnegative_shifted_coefficients(
        (sys, ch, x, q) in small_system().prop_flat_map(|s| {
            (Just(s), chimney(s), element(s, 7), prop::collection::vec(2i64..=5, s.rank() + 1))
        })
    ) {
        let hist = count_histogram(sys, &ch, &x);
        prop_assert!(!hist.is_empty());
        prop_assert!(shadow_alcove(sys, &ch, &x).len() == hist.len());
        for p in hist.values() {
            prop_assert!(p.in_shifted_basis().terms().all(|(_, c)| c >= 0), "{}", p);
            prop_assert!(p.evaluate(&q) > 0);
        }
    }

    #[test]
    fn iwahori_parahoric_count_is_the_plain_count(
        (sys, ch, x, z) in small_system().prop_flat_map(|s| (Just(s), chimney(s), element(s, 5), element(s, 5)))
    ) {
        let empty = ParahoricFace::alcove();
        prop_assert_eq!(
            count_parahoric(sys, &ch, &empty, &empty, &x, &z).unwrap(),
            count_intersection(sys, &ch, &x, &z)
        );
    }
}
