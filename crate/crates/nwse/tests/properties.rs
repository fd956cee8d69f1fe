//! Property-based tests for the exact algebra tower and the transform
//! pipeline: canonicalization, derivation rules, ring laws, numeric
//! evaluation consistency and the Laplace roundtrip.

use num::rational::BigRational;
use num::BigInt;
use proptest::prelude::*;

use nwse::algebra::{DerivationMode, ExactScalar, RingElement, SymbolPoly, TimeSeries};
use nwse::laplace::{div_by_s, inverse_laplace, laplace, lt_integral};

fn rational(p: i64, q: i64) -> BigRational {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

/// Small rationals, denominators kept tiny so gcd chains stay fast.
fn arb_rational() -> impl Strategy<Value = BigRational> {
    (-9i64..=9, 1i64..=4).prop_map(|(p, q)| rational(p, q))
}

fn arb_disc() -> impl Strategy<Value = u64> {
    prop_oneof![Just(1u64), Just(2), Just(6)]
}

fn arb_scalar(disc: u64) -> impl Strategy<Value = ExactScalar> {
    (arb_rational(), arb_rational()).prop_map(move |(r, s)| {
        ExactScalar::new(r, s, disc).expect("disc is square-free")
    })
}

fn arb_poly(disc: u64, max_deg: usize) -> impl Strategy<Value = SymbolPoly> {
    prop::collection::vec(arb_scalar(disc), 0..=max_deg + 1).prop_map(SymbolPoly::from_coeffs)
}

fn arb_nonzero_poly(disc: u64, max_deg: usize) -> impl Strategy<Value = SymbolPoly> {
    arb_poly(disc, max_deg).prop_filter("nonzero", |p| p.degree().is_some())
}

fn arb_mode() -> impl Strategy<Value = DerivationMode> {
    prop_oneof![
        Just(DerivationMode::Constant),
        (-3i64..=3)
            .prop_filter("nonzero rate", |k| *k != 0)
            .prop_map(DerivationMode::exponential),
    ]
}

fn arb_ring(disc: u64, mode: DerivationMode) -> impl Strategy<Value = RingElement> {
    (arb_poly(disc, 3), arb_nonzero_poly(disc, 2)).prop_map(move |(num, den)| {
        RingElement::new(num, den, mode.clone()).expect("den is nonzero")
    })
}

fn arb_series(
    disc: u64,
    mode: DerivationMode,
    trunc: usize,
) -> impl Strategy<Value = TimeSeries> {
    let m = mode.clone();
    prop::collection::vec(arb_ring(disc, mode), 1..=trunc + 1)
        .prop_map(move |coeffs| TimeSeries::from_coeffs(coeffs, m.clone(), trunc).unwrap())
}

/// A (disc, mode, element) package so both operands share a context.
fn ring_pair() -> impl Strategy<Value = (RingElement, RingElement)> {
    (arb_disc(), arb_mode()).prop_flat_map(|(d, mode)| {
        (arb_ring(d, mode.clone()), arb_ring(d, mode))
    })
}

fn series_pair() -> impl Strategy<Value = (TimeSeries, TimeSeries)> {
    (arb_disc(), arb_mode()).prop_flat_map(|(d, mode)| {
        (arb_series(d, mode.clone(), 5), arb_series(d, mode, 5))
    })
}

/// A ring element plus a nonzero polynomial in the same context.
fn ring_and_poly() -> impl Strategy<Value = (RingElement, RingElement)> {
    (arb_disc(), arb_mode()).prop_flat_map(|(d, mode)| {
        let m = mode.clone();
        (
            arb_ring(d, mode),
            arb_nonzero_poly(d, 3).prop_map(move |q| {
                RingElement::new(q, SymbolPoly::one(), m.clone()).unwrap()
            }),
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    /// Multiplying and dividing by the same nonzero polynomial is the
    /// identity after canonicalization.
    #[test]
    fn cancellation_is_canonical((p, q) in ring_and_poly()) {
        let blown = p.checked_mul(&q).unwrap();
        let back = blown.checked_div(&q).unwrap();
        prop_assert_eq!(back, p);
    }

    /// `d/dx` is a derivation: Leibniz rule on products.
    #[test]
    fn ddx_satisfies_leibniz((f, g) in ring_pair()) {
        let lhs = f.checked_mul(&g).unwrap().ddx();
        let rhs = f
            .ddx()
            .checked_mul(&g)
            .unwrap()
            .checked_add(&f.checked_mul(&g.ddx()).unwrap())
            .unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    /// In exponential mode, `v^n` is an eigenfunction of d/dx with
    /// eigenvalue `k n`.
    #[test]
    fn ddx_eigenvalue_on_monomials(k in -3i64..=3, n in 1u32..=6) {
        prop_assume!(k != 0);
        let mode = DerivationMode::exponential(k);
        let vn = RingElement::symbol(mode.clone()).pow(n);
        let scale = ExactScalar::from_int(k * i64::from(n));
        prop_assert_eq!(vn.ddx(), vn.scale(&scale));
    }

    /// Constant mode annihilates everything.
    #[test]
    fn constant_mode_has_zero_ddx(
        (d, f) in arb_disc().prop_flat_map(|d| (Just(d), arb_ring(d, DerivationMode::Constant))),
    ) {
        let _ = d;
        prop_assert!(f.ddx().is_zero());
    }

    /// `d/dt` after integration recovers every coefficient that survives
    /// the truncation window: integrate raises degrees by one (dropping the
    /// image of `t^N`), `d/dt` lowers the truncation order by one, so the
    /// composite equals re-truncation at `N - 1`.
    #[test]
    fn ddt_after_integrate_is_retruncation((u, _v) in series_pair()) {
        prop_assert_eq!(u.integrate_t().ddt(), u.truncate_to(u.trunc() - 1));
    }

    /// Series multiplication commutes and distributes over addition.
    #[test]
    fn series_ring_laws((u, v) in series_pair()) {
        let uv = u.mul(&v).unwrap();
        prop_assert_eq!(&uv, &v.mul(&u).unwrap());
        let w = u.add(&v).unwrap();
        let lhs = u.mul(&w).unwrap();
        let rhs = u.mul(&u).unwrap().add(&uv).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    /// Numeric evaluation is additive to floating-point accuracy.
    #[test]
    fn eval_numeric_is_additive((u, v) in series_pair(), t in 0.0f64..0.5, vv in 0.05f64..2.0) {
        let sum = u.add(&v).unwrap();
        let (a, b, s) = (
            u.eval_numeric(0.3, t, vv),
            v.eval_numeric(0.3, t, vv),
            sum.eval_numeric(0.3, t, vv),
        );
        if let (Ok(a), Ok(b), Ok(s)) = (a, b, s) {
            let scale = 1.0f64.max(a.abs()).max(b.abs());
            prop_assert!((s - (a + b)).abs() <= 1e-9 * scale, "{s} vs {}", a + b);
        }
    }

    /// The transform roundtrip is lossless.
    #[test]
    fn laplace_roundtrip_is_identity((u, _v) in series_pair()) {
        prop_assert_eq!(inverse_laplace(&laplace(&u)), u);
    }

    /// m-fold division by s is m-fold integration.
    #[test]
    fn repeated_div_by_s_is_repeated_integration((u, _v) in series_pair(), m in 1usize..=3) {
        let mut f = laplace(&u);
        let mut g = u;
        for _ in 0..m {
            f = div_by_s(&f);
            g = g.integrate_t();
        }
        prop_assert_eq!(inverse_laplace(&f), g);
    }

    /// lt_integral agrees with direct term-wise integration (the identity
    /// the iteration engine relies on).
    #[test]
    fn lt_integral_matches_integration((u, _v) in series_pair()) {
        prop_assert_eq!(lt_integral(&u), u.integrate_t());
    }
}
