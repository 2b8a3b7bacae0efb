use cocycle_lab::*;
use nalgebra::DMatrix;
use proptest::prelude::*;
use root_data::DualPair;

fn rel(a: C64, b: C64) -> f64 {
    (a - b).norm() / b.norm()
}

fn unitary_element(u: &DMatrix<C64>) -> SymplecticElement {
    SymplecticElement::from_unitary(u).unwrap()
}

/// `w diag(e^{i θ_k}) w^*`.
fn with_spectrum(w: &DMatrix<C64>, thetas: &[f64]) -> DMatrix<C64> {
    let d = DMatrix::from_diagonal(&nalgebra::DVector::from_iterator(
        thetas.len(),
        thetas.iter().map(|&t| C64::from_polar(1.0, t)),
    ));
    w * d * w.adjoint()
}

#[test]
fn sweeps_pass_in_small_dimensions() {
    for dim in 1..=5 {
        let s = cocycle_sweep(dim, 200, 42 + dim as u64).unwrap();
        for r in s.reports() {
            assert!(r.passed(), "dim {dim} {}: {:?}", r.suite, r.failures.first());
            assert_eq!(r.cases, 200);
        }
    }
}

#[test]
fn sweep_is_deterministic() {
    let a = cocycle_sweep(3, 20, 9).unwrap();
    let b = cocycle_sweep(3, 20, 9).unwrap();
    assert_eq!(a.factorization, b.factorization);
    assert_eq!(a.det_identity, b.det_identity);
    assert_eq!(a.redrawn, b.redrawn);
}

#[test]
fn minus_one_modulus_up_to_four() {
    let r = minus_one_modulus(4);
    assert!(r.passed() && r.cases == 4);
}

#[test]
fn restricted_determinants_match_eigenvalue_products() {
    // On a unitary the restricted determinant of u - 1 is the product of
    // λ - 1 over eigenvalues λ != 1.
    let mut rng = sample_rng(5, 0);
    let w = random_unitary(&mut rng, 4);
    let thetas = [0.0, 0.0, 1.3, -2.2];
    let g = unitary_element(&with_spectrum(&w, &thetas));
    let prod: C64 = thetas[2..].iter().map(|&t| C64::from_polar(1.0, t) - 1.0).product();
    let det_u: C64 = thetas.iter().map(|&t| C64::from_polar(1.0, t)).product();
    let expected = det_u / (prod * prod);
    assert!(rel(theta_squared_unitary(&g).unwrap(), expected) < 1e-10);
    assert!(rel(theta_squared(&g).unwrap(), expected) < 1e-10);
}

#[test]
fn cocycle_identity_on_general_symplectic_triples() {
    // C(g1, g2) C(g1 g2, g3) = C(g1, g2 g3) C(g2, g3)
    for s in 0..50 {
        let mut rng = sample_rng(17, s);
        let g: Vec<_> = (0..3).map(|_| random_symplectic(&mut rng, 2, 0.6)).collect();
        let lhs = cocycle(&g[0], &g[1]).unwrap() * cocycle(&g[0].mul(&g[1]), &g[2]).unwrap();
        let rhs = cocycle(&g[0], &g[1].mul(&g[2])).unwrap() * cocycle(&g[1], &g[2]).unwrap();
        assert!(rel(lhs, rhs) < 1e-8, "sample {s}: {lhs} vs {rhs}");
    }
}

#[test]
fn unitary_cocycle_with_eigenvalue_one() {
    // Kernels on both sides: the restricted determinants must still agree
    // with modulus times phase.
    for s in 0..30 {
        let mut rng = sample_rng(23, s);
        let w1 = random_unitary(&mut rng, 3);
        let w2 = random_unitary(&mut rng, 3);
        let g1 = unitary_element(&with_spectrum(&w1, &[0.0, 0.9, -2.5]));
        let g2 = unitary_element(&with_spectrum(&w2, &[0.0, 0.0, 1.7]));
        let expected = unitary_cocycle(&g1, &g2).unwrap();
        let got = cocycle(&g1, &g2).unwrap();
        assert!(rel(got, expected) < 1e-8, "sample {s}: {got} vs {expected}");
        let sig = signature_halving_check(&g1, &g2).unwrap();
        assert!(sig.halves(), "{sig:?}");
    }
}

#[test]
fn det_identity_with_nontrivial_radical() {
    // g2 = g1^{-1} v with v having a fixed space of dimension a: then
    // K12 = Ker(v - 1) and the radical V = (g2 - 1)K12 has dimension a.
    for a in 1..=3 {
        for s in 0..20 {
            let mut rng = sample_rng(31 + a, s);
            let u1 = random_unitary(&mut rng, 4);
            let w = random_unitary(&mut rng, 4);
            let mut thetas = vec![0.0; a as usize];
            thetas.extend([0.8, -1.9, 2.6][..(4 - a as usize)].iter());
            let v = with_spectrum(&w, &thetas);
            let u2 = u1.adjoint() * v;
            let r = det_identity_check(&unitary_element(&u1), &unitary_element(&u2)).unwrap();
            assert_eq!(r.radical_dim, a as usize);
            assert!(r.residual < 1e-8, "a = {a}, sample {s}: {r:?}");
        }
    }
}

#[test]
fn det_identity_for_minus_one() {
    // g2 = -1: U is everything, V = -2 K12 with K12 the (-1)-eigenspace of g1.
    let mut rng = sample_rng(3, 1);
    let w = random_unitary(&mut rng, 3);
    let thetas = [std::f64::consts::PI, 0.4, -1.2];
    let g1 = unitary_element(&with_spectrum(&w, &thetas));
    let g2 = SymplecticElement::minus_identity(3);
    let r = det_identity_check(&g1, &g2).unwrap();
    assert_eq!(r.radical_dim, 1);
    // direct block computation: lhs = det(-g1 - 1)_{U12} / (det(g1 - 1) (-2)^3)
    let z = |t: f64| C64::from_polar(1.0, t);
    let d12: C64 = thetas[1..].iter().map(|&t| -z(t) - 1.0).product();
    let d1: C64 = thetas.iter().map(|&t| z(t) - 1.0).product();
    let expected = d12 / (d1 * -8.0);
    assert!(rel(r.lhs, expected) < 1e-10 && r.residual < 1e-10);
}

#[test]
fn inverse_pairs() {
    // C(g, g^{-1}): g g^{-1} = 1, so the modulus is |det J_g|.
    for s in 0..20 {
        let mut rng = sample_rng(41, s);
        let g = random_symplectic(&mut rng, 2, 0.5);
        let c = cocycle_modulus(&g, &g.inverse()).unwrap();
        assert!((c - det_j_g(&g).unwrap().abs()).abs() < 1e-9 * c);
        let u = unitary_element(&random_unitary(&mut rng, 2));
        let got = cocycle(&u, &u.inverse()).unwrap();
        let expected = unitary_cocycle(&u, &u.inverse()).unwrap();
        assert!(rel(got, expected) < 1e-8);
    }
}

#[test]
fn splitting_determinant_powers() {
    let mut rng = sample_rng(8, 0);
    // (O_d, Sp_{2m}(R)): W = R^d ⊗ R^{2m}, J = 1 ⊗ J', det(g ⊗ 1) = det(g)^m on W_C^+.
    for (d, m) in [(2, 1), (3, 1), (3, 2), (2, 3)] {
        let pair = DualPair::orthosymplectic(d, m);
        let u = random_unitary(&mut rng, d);
        // a real orthogonal matrix with determinant -1
        let mut o = u.map(|z| z.re).qr().q();
        if o.determinant() > 0.0 {
            o.column_mut(0).neg_mut();
        }
        let g = o.kronecker(&DMatrix::identity(2 * m, 2 * m));
        let j = DMatrix::<f64>::identity(d, d).kronecker(&j_form(m));
        let got = det_on_plus_space(&g, &j).unwrap();
        let expected = o.determinant().powi(det_exponent(&pair) as i32);
        assert!((got - expected).norm() < 1e-10, "{pair}");
        assert_eq!(cover_splits(&pair), m % 2 == 0);
    }
    // (U_d, U_{p,q}): J' = diag(i I_p, -i I_q); realify complex matrices.
    let realify = |a: &DMatrix<C64>| {
        let (r, i) = (a.map(|z| z.re), a.map(|z| z.im));
        let n = a.nrows();
        let mut out = DMatrix::zeros(2 * n, 2 * n);
        out.view_mut((0, 0), (n, n)).copy_from(&r);
        out.view_mut((0, n), (n, n)).copy_from(&-&i);
        out.view_mut((n, 0), (n, n)).copy_from(&i);
        out.view_mut((n, n), (n, n)).copy_from(&r);
        out
    };
    for (d, p, q) in [(2, 1, 1), (2, 0, 3), (3, 2, 1), (1, 1, 2)] {
        // the pair stores the signature as (min, max)
        let pair = DualPair::unitary(d, p, q);
        let (p, q) = pair.signature();
        let u = random_unitary(&mut rng, d);
        let g = realify(&u.kronecker(&DMatrix::identity(p + q, p + q)));
        let jp = DMatrix::from_fn(p + q, p + q, |a, b| {
            if a != b {
                C64::new(0.0, 0.0)
            } else if a < p {
                C64::i()
            } else {
                -C64::i()
            }
        });
        let j = realify(&DMatrix::identity(d, d).kronecker(&jp));
        let got = det_on_plus_space(&g, &j).unwrap();
        let expected = u.determinant().powi(det_exponent(&pair) as i32);
        assert!((got - expected).norm() < 1e-10, "{pair}");
        assert_eq!(cover_splits(&pair), (p + q) % 2 == 0);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn modulus_is_symmetric(seed in any::<u64>(), n in 1usize..4) {
        let mut rng = sample_rng(seed, 0);
        let g1 = random_symplectic(&mut rng, n, 0.5);
        let g2 = random_symplectic(&mut rng, n, 0.5);
        let (a, b) = (cocycle_modulus(&g1, &g2).unwrap(), cocycle_modulus(&g2, &g1).unwrap());
        prop_assert!((a - b).abs() < 1e-9 * a);
    }

    #[test]
    fn identity_factor_is_exactly_one(seed in any::<u64>(), n in 1usize..4) {
        let mut rng = sample_rng(seed, 1);
        let g = random_symplectic(&mut rng, n, 0.5);
        let one = SymplecticElement::identity(n);
        prop_assert_eq!(cocycle_modulus(&one, &g).unwrap(), 1.0);
        prop_assert_eq!(cocycle_modulus(&g, &one).unwrap(), 1.0);
    }

    #[test]
    fn q_signature_is_even_on_unitary_pairs(seed in any::<u64>(), n in 1usize..5) {
        let mut rng = sample_rng(seed, 2);
        let g1 = SymplecticElement::from_unitary(&random_unitary(&mut rng, n)).unwrap();
        let g2 = SymplecticElement::from_unitary(&random_unitary(&mut rng, n)).unwrap();
        if let Ok(q) = q_form(&g1, &g2) {
            prop_assert_eq!(q.signature % 2, 0);
        }
    }
}
