use proptest::prelude::*;
use scalar_algebra::{factorial, int, rat, Rat, UniPoly};
use special_functions::*;

fn ep(a: i64, b: i64) -> ExponentPair {
    ExponentPair::new(a, b)
}

#[test]
fn full_exact_sweep() {
    let mut total = 0;
    for a in -8..=8 {
        for b in -8..=8 {
            for rep in [reflection_check(a, b), derivative_identity_check(a, b), value_at_zero_check(a, b)] {
                assert!(rep.passed(), "{:?}", rep.failures);
                total += rep.cases;
            }
            for c in 0..=8 {
                let rep = shift_identity_check(a, b, c);
                assert!(rep.passed(), "{:?}", rep.failures);
                total += rep.cases;
            }
        }
    }
    assert!(total > 1000);
}

#[test]
fn degree_law() {
    for a in -10..=10 {
        for b in 1..=10 {
            let p = poly_p2(ep(a, b));
            assert_eq!(p.degree(), Some((b - 1) as usize));
            let lead = int(2).pow(-a as i32) / Rat::from_integer(factorial((b - 1) as u64));
            assert_eq!(p.leading_coeff(), lead);
        }
    }
}

#[test]
fn delta_part_law() {
    for a in -6..=6 {
        for b in -6..=6 {
            let d = fourier_pair(ep(a, b));
            if a + b >= 1 {
                assert!(d.delta_part.is_zero());
            } else {
                assert_eq!(d.delta_part.degree(), Some((-a - b) as usize), "(a,b)=({a},{b})");
            }
        }
    }
}

#[test]
fn q_is_reflection_symmetric() {
    // (1+iy)^{-a}(1-iy)^{-b} at y -> -y swaps a and b, so Q_{b,a}(t) = Q_{a,b}(-t).
    for a in -6..=6 {
        for b in -6..=6 {
            assert_eq!(poly_q(ep(b, a)).poly, poly_q(ep(a, b)).poly.reflect());
        }
    }
}

#[test]
fn q_matches_partial_fractions_when_both_nonpositive() {
    // a, b <= 0: the transform is a polynomial in y, so Q is that polynomial in t = iy.
    let q = poly_q(ep(-1, -1)).poly;
    assert_eq!(q, UniPoly::from_ints(&[1, 0, -1]));
}

/// Records where the printed forms differ from the defining sums.
#[test]
fn printed_forms_disagree_with_defining_sums() {
    // Printed shift constant (b+c-1)!/((b-1)! 2^c) at (a,b,c) = (-1,1,1) is 1/2.
    let lhs = &poly_p2(ep(-1, 1)) * &UniPoly::x();
    let printed = poly_p2(ep(0, 2)).scale(&rat(1, 2));
    assert_ne!(lhs, printed);
    assert_eq!(lhs, poly_p2(ep(0, 2)).scale(&int(2)));

    // Printed -2 derivative rule has no minus sign.
    let d = poly_pm2(ep(2, 1)).derivative();
    assert_eq!(d, UniPoly::constant(rat(-1, 2)));
    assert_eq!(poly_pm2(ep(1, 1)), UniPoly::constant(rat(1, 2)));

    // Printed binomial value at zero for the -2 branch, (-1)^a 2^{1-a-b} C(-b, -a-b+1), at (2,-2) is +4.
    assert_eq!(value_at_zero(ep(2, -2), Branch::Minus).unwrap(), int(-4));
}

proptest! {
    #[test]
    fn reflection_pointwise(a in -10i64..=10, b in -10i64..=10, n in -50i64..50, d in 1i64..7) {
        let x = rat(n, d);
        prop_assert_eq!(poly_pm2(ep(a, b)).eval(&x), poly_p2(ep(b, a)).eval(&-x));
    }

    #[test]
    fn second_derivatives_chain(a in -8i64..=8, b in -8i64..=8) {
        prop_assert_eq!(poly_p2(ep(a, b)).nth_derivative(2), poly_p2(ep(a, b - 2)));
        prop_assert_eq!(poly_pm2(ep(a, b)).nth_derivative(2), poly_pm2(ep(a - 2, b)));
    }
}
