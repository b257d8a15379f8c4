use proptest::prelude::*;
use riordan_core::cfrac::{thron_level0, thron_to_jacobi_level0};
use riordan_core::lattice::count_weighted_paths;
use riordan_core::rational::{frac, int};
use riordan_core::riordan::from_bivariate;
use riordan_core::{CFrac, CoeffSeq, Fps, PathKind, Rational, RiordanPair, Triangle, WeightScheme, YPoly};

const N: usize = 8;

fn rational() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=3).prop_map(|(p, q)| frac(p, q))
}

fn nonzero() -> impl Strategy<Value = Rational> {
    rational().prop_filter("nonzero", |r| *r != int(0))
}

fn series() -> impl Strategy<Value = Fps> {
    prop::collection::vec(rational(), N).prop_map(Fps::from_coeffs)
}

fn unit() -> impl Strategy<Value = Fps> {
    (nonzero(), prop::collection::vec(rational(), N - 1)).prop_map(|(c, rest)| {
        let mut v = vec![c];
        v.extend(rest);
        Fps::from_coeffs(v)
    })
}

/// `f` with `f(0) = 0` and `f'(0) != 0`.
fn delta() -> impl Strategy<Value = Fps> {
    unit().prop_map(|u| u.shift_up(1).truncate(N))
}

fn pair() -> impl Strategy<Value = RiordanPair> {
    (unit(), delta()).prop_map(|(g, f)| RiordanPair::new(g, f).unwrap())
}

fn ypoly() -> impl Strategy<Value = YPoly> {
    prop::collection::vec(-3i64..=3, 1..=2).prop_map(|c| YPoly::from_ints(&c))
}

fn coeff_seq() -> impl Strategy<Value = CoeffSeq> {
    (prop::collection::vec(ypoly(), 0..3), prop::collection::vec(ypoly(), 1..3))
        .prop_map(|(prefix, cycle)| CoeffSeq::periodic(prefix, cycle))
}

fn cfrac() -> impl Strategy<Value = CFrac> {
    (0..3usize, coeff_seq(), coeff_seq()).prop_map(|(kind, a, b)| match kind {
        0 => CFrac::stieltjes(a),
        1 => CFrac::jacobi(a, b),
        _ => CFrac::thron(a, b),
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_laws(a in series(), b in series(), c in series()) {
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert_eq!(a.sub(&a), Fps::zero(N));
    }

    #[test]
    fn inverse_is_reciprocal(u in unit()) {
        prop_assert_eq!(u.mul(&u.inverse().unwrap()), Fps::one(N));
    }

    #[test]
    fn reversion_inverts_composition(f in delta()) {
        let fbar = f.reversion().unwrap();
        prop_assert_eq!(f.compose(&fbar).unwrap(), Fps::x(N));
        prop_assert_eq!(fbar.compose(&f).unwrap(), Fps::x(N));
    }

    #[test]
    fn composition_is_associative(a in series(), f in delta(), h in delta()) {
        let left = a.compose(&f).unwrap().compose(&h).unwrap();
        let right = a.compose(&f.compose(&h).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn sqrt_squares_back(rest in prop::collection::vec(rational(), N - 1)) {
        let mut v = vec![int(1)];
        v.extend(rest);
        let a = Fps::from_coeffs(v);
        let r = a.sqrt().unwrap();
        prop_assert_eq!(r.coeff(0), &int(1));
        prop_assert_eq!(r.mul(&r), a);
    }

    #[test]
    fn product_rule(a in series(), b in series()) {
        let lhs = a.mul(&b).derivative();
        let rhs = a.derivative().mul(&b.truncate(N - 1)).add(&a.truncate(N - 1).mul(&b.derivative()));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn matrix_is_a_homomorphism(p in pair(), q in pair()) {
        let pq = p.mul(&q).unwrap();
        prop_assert_eq!(pq.matrix(N).unwrap(), p.matrix(N).unwrap().mul(&q.matrix(N).unwrap()));
    }

    #[test]
    fn inverse_pair_inverts_matrix(p in pair()) {
        let m = p.matrix(N).unwrap();
        let inv = p.inverse().unwrap().matrix(N).unwrap();
        prop_assert!(m.mul(&inv).is_identity());
        prop_assert_eq!(inv, m.inverse().unwrap());
    }

    #[test]
    fn action_matches_matrix(p in pair(), h in series()) {
        let by_series = p.apply(&h).unwrap();
        let by_matrix = p.matrix(N).unwrap().apply(h.coeffs());
        prop_assert_eq!(by_series.coeffs(), &by_matrix[..]);
    }

    #[test]
    fn bivariate_round_trip(p in pair()) {
        let m = p.matrix(N).unwrap();
        let g = p.bivariate_gf(N).unwrap();
        prop_assert_eq!(&Triangle::from_bivariate(&g).unwrap(), &m);
        prop_assert_eq!(&m.to_bivariate(), &g);
        let back = from_bivariate(&g).unwrap().into_pair().unwrap();
        prop_assert_eq!(back.matrix(N).unwrap(), m);
    }

    #[test]
    fn deeper_fractions_agree(cf in cfrac(), extra in 1..4usize) {
        prop_assert_eq!(cf.expand_with_depth(N, N + extra), cf.expand(N));
        prop_assert_eq!(cf.expand(N).truncate(N - 2), cf.expand(N - 2));
    }

    #[test]
    fn substitution_commutes_with_expansion(cf in cfrac(), v in rational()) {
        prop_assert_eq!(cf.expand(N).substitute_y(&v), cf.expand_at(N, &v));
    }

    #[test]
    fn stieltjes_contraction(a in coeff_seq()) {
        let s = CFrac::stieltjes(a);
        let j = s.stieltjes_to_jacobi().unwrap();
        prop_assert_eq!(j.expand(N), s.expand(N));
    }

    #[test]
    fn thron_level0_contracts(
        a in rational(), b in rational(), c in rational(),
        d in rational(), u in rational(), v in rational(),
    ) {
        let t = thron_level0(&a, &b, &c, &d, &u, &v);
        let j = thron_to_jacobi_level0(&a, &b, &c, &d, &u, &v);
        prop_assert_eq!(t.expand(N), j.expand(N));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn expansion_counts_weighted_paths(cf in cfrac()) {
        let n = 6;
        let expansion = cf.expand(n + 1);
        let w = WeightScheme::from_cfrac(&cf, n + 1);
        let kind = PathKind::for_cfrac(cf.kind());
        for m in 0..=n {
            prop_assert_eq!(&count_weighted_paths(kind, m, &w).unwrap(), expansion.coeff(m));
        }
    }
}
