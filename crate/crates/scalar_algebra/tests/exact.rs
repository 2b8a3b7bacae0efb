use itertools::Itertools;
use proptest::prelude::*;
use scalar_algebra::*;

/// Laplace expansion along the first row; independent of the Bareiss code.
fn cofactor_det(m: &[Vec<Rat>]) -> Rat {
    let n = m.len();
    if n == 0 {
        return int(1);
    }
    let mut acc = int(0);
    for c in 0..n {
        let minor: Vec<Vec<Rat>> = m[1..]
            .iter()
            .map(|r| r.iter().enumerate().filter(|&(j, _)| j != c).map(|(_, x)| x.clone()).collect())
            .collect();
        let term = &m[0][c] * cofactor_det(&minor);
        if c % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}

fn perm_parity(p: &[usize]) -> i64 {
    let mut inv = 0;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                inv += 1;
            }
        }
    }
    if inv % 2 == 0 { 1 } else { -1 }
}

/// The defining permutation sum, spelled out term by term.
fn falling_brute(z: &[Rat]) -> Rat {
    let m = z.len();
    let mut acc = int(0);
    for s in (0..m).permutations(m) {
        let mut t = int(perm_parity(&s));
        for j in 0..m {
            for k in 1..=s[j] {
                t *= &z[j] - int(k as i64);
            }
        }
        acc += t;
    }
    acc
}

#[test]
fn factorial_matrix_matches_cofactor_expansion() {
    let m: Vec<Vec<Rat>> = (1..=3)
        .map(|j| (1..=3).map(|k| Rat::from_integer(factorial(j + k))).collect())
        .collect();
    assert_eq!(exact_det(&m).unwrap(), cofactor_det(&m));
}

#[test]
fn identity_det_is_one() {
    for n in 0..6 {
        let m: Vec<Vec<Rat>> = (0..n).map(|i| (0..n).map(|j| int((i == j) as i64)).collect()).collect();
        assert_eq!(exact_det(&m).unwrap(), int(1));
    }
}

#[test]
fn falling_sum_examples() {
    assert_eq!(falling_brute(&[int(3), int(1)]), int(-2));
    assert_eq!(falling_brute(&[int(5), int(2), int(0)]), int(-30));
    assert_eq!(falling_product_sum(&[int(7), int(7)]), int(0));
    assert_eq!(vandermonde_det(&[int(4), int(4)]), int(0));
}

#[test]
fn skew_symmetrization_divides() {
    // sum over S_2 of sgn(s) y^(2,0) at s.y is y1^2 - y2^2
    let g = symmetric_group(2);
    let mono = MultiPoly::term(2, vec![2, 0], PiScalar::one());
    let skew = g
        .iter()
        .fold(MultiPoly::zero(2), |acc, s| &acc + &mono.act(s).scale(&PiScalar::rational(int(s.perm_sign() as i64))));
    let q = divide_by_vandermonde(&skew, &g).unwrap();
    assert_eq!(q, &MultiPoly::var(2, 0) + &MultiPoly::var(2, 1));
}

fn small_rat() -> impl Strategy<Value = Rat> {
    (-20i64..20, 1i64..6).prop_map(|(n, d)| rat(n, d))
}

fn pi_scalar() -> impl Strategy<Value = PiScalar> {
    (small_rat(), -3i32..4, 0i64..4).prop_map(|(c, p, i)| PiScalar::new(c, p, i))
}

proptest! {
    #[test]
    fn falling_sum_equals_vandermonde(z in prop::collection::vec(-12i64..12, 1..=6)) {
        let z: Vec<Rat> = z.into_iter().map(int).collect();
        let brute = falling_brute(&z);
        prop_assert_eq!(&brute, &falling_product_sum(&z));
        prop_assert_eq!(&brute, &vandermonde_det(&z));
    }

    #[test]
    fn bareiss_matches_cofactor(entries in prop::collection::vec(small_rat(), 16)) {
        let m: Vec<Vec<Rat>> = entries.chunks(4).map(|r| r.to_vec()).collect();
        prop_assert_eq!(exact_det(&m).unwrap(), cofactor_det(&m));
    }

    #[test]
    fn pi_scalar_mul_assoc_comm(a in pi_scalar(), b in pi_scalar(), c in pi_scalar()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        let z = (&a * &b).to_complex() - a.to_complex() * b.to_complex();
        prop_assert!(z.norm() <= 1e-9 * (1.0 + (a.to_complex() * b.to_complex()).norm()));
    }

    #[test]
    fn i_power_is_mod_four(k in -20i64..20, m in -20i64..20) {
        let a = PiScalar::new(int(1), 0, k);
        let b = PiScalar::new(int(1), 0, m);
        prop_assert_eq!(&a * &b, PiScalar::new(int(1), 0, (k + m).rem_euclid(4)));
    }

    #[test]
    fn vandermonde_division_recovers_invariant(
        coeffs in prop::collection::vec(-5i64..6, 4),
        l in 2usize..4,
    ) {
        // symmetric polynomial built from power sums p1, p2
        let p1 = (0..l).fold(MultiPoly::zero(l), |acc, j| &acc + &MultiPoly::var(l, j));
        let p2 = (0..l).fold(MultiPoly::zero(l), |acc, j| &acc + &MultiPoly::var(l, j).pow(2));
        let c = |k: usize| MultiPoly::constant(l, PiScalar::rational(int(coeffs[k])));
        let inv = &(&(&c(0) + &(&c(1) * &p1)) + &(&c(2) * &p2)) + &(&c(3) * &(&p1 * &p2));
        let g = symmetric_group(l);
        let skew = &MultiPoly::vandermonde(l) * &inv;
        prop_assert_eq!(divide_by_vandermonde(&skew, &g).unwrap(), inv.clone());

        let gb = hyperoctahedral_group(l);
        let even = p2.clone();
        let inv_b = &c(0) + &(&c(1) * &even);
        let skew_b = &vandermonde_for_group(VandermondeKind::TypeB, l) * &inv_b;
        prop_assert_eq!(divide_by_vandermonde(&skew_b, &gb).unwrap(), inv_b);
    }
}

#[test]
fn parse_and_display_round_trip() {
    for s in ["3/2", "-7", "0", "10/4"] {
        let r = parse_rat(s).unwrap();
        assert_eq!(parse_rat(&r.to_string()).unwrap(), r);
    }
    assert_eq!(parse_rat("10/4").unwrap().to_string(), "5/2");
    assert_eq!(parse_rat("-7").unwrap().to_string(), "-7");
    assert!(parse_rat("1/0").is_err());
    assert!(parse_rat("x").is_err());
}
