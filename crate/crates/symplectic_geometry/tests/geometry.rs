use nalgebra::DMatrix;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use root_data::{Algebra, DualPair};
use scalar_algebra::{int, rat, Rat};
use symplectic_geometry::*;

fn families() -> Vec<Vec<DualPair>> {
    vec![
        vec![DualPair::orthosymplectic(1, 2), DualPair::orthosymplectic(3, 2), DualPair::orthosymplectic(4, 1), DualPair::orthosymplectic(5, 3)],
        vec![DualPair::unitary(1, 1, 1), DualPair::unitary(2, 0, 3), DualPair::unitary(3, 1, 2), DualPair::unitary(2, 2, 2)],
        vec![DualPair::quaternionic(1, 2), DualPair::quaternionic(2, 3), DualPair::quaternionic(3, 2)],
    ]
}

/// Real matrix of a real-linear map between matrix spaces, in real coordinates.
fn real_matrix(alg: Algebra, rows: usize, cols: usize, f: impl Fn(&MatrixOverD) -> MatrixOverD) -> DMatrix<f64> {
    let n = MatrixOverD::real_dim(alg, rows, cols);
    let cols_out: Vec<Vec<f64>> = (0..n)
        .map(|i| {
            let mut v = vec![0.0; n];
            v[i] = 1.0;
            f(&MatrixOverD::from_real_vec(alg, rows, cols, &v)).to_real_vec()
        })
        .collect();
    DMatrix::from_fn(cols_out[0].len(), n, |r, c| cols_out[c][r])
}

fn numeric_rank(m: &DMatrix<f64>) -> usize {
    let s = m.clone().svd(false, false).singular_values;
    let top = s.iter().cloned().fold(0.0, f64::max);
    s.iter().filter(|&&x| x > 1e-9 * top.max(1.0)).count()
}

fn nullspace(m: &DMatrix<f64>) -> Vec<Vec<f64>> {
    let n = m.ncols();
    let svd = (m.transpose() * m).svd_unordered(false, true);
    let vt = svd.v_t.unwrap();
    (0..n)
        .filter(|&i| svd.singular_values[i] < 1e-10)
        .map(|i| vt.row(i).iter().copied().collect())
        .collect()
}

#[test]
fn moment_maps_are_equivariant() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for fam in families() {
        let mut worst: f64 = 0.0;
        for i in 0..200 {
            let pair = fam[i % fam.len()];
            let model = if i % 2 == 0 { FormModel::nilpotent(&pair, pair.m()).unwrap() } else { FormModel::nilpotent(&pair, 0).unwrap() };
            let w = model.random_w(&mut rng);
            let g = model.random_g(&mut rng);
            let gp = model.random_g_prime(&mut rng, 0.3).unwrap();
            assert!(g.adjoint().mul(&g).sub(&MatrixOverD::identity(pair.algebra(), pair.d())).norm() < 1e-12);
            assert!(model.g_prime_defect(&gp) < 1e-12 * gp.norm() * gp.norm());
            let gi = g.adjoint();
            let gpi = model.g_prime_inverse(&gp).unwrap();
            let moved = gp.mul(&w).mul(&gi);
            let t = tau(&w, &model).unwrap();
            let lhs = tau(&moved, &model).unwrap();
            let rhs = g.mul(&t).mul(&gi);
            worst = worst.max(lhs.sub(&rhs).norm() / (1.0 + t.norm()));
            let tp = tau_prime(&w, &model).unwrap();
            let lhs = tau_prime(&moved, &model).unwrap();
            let rhs = gp.mul(&tp).mul(&gpi);
            worst = worst.max(lhs.sub(&rhs).norm() / (1.0 + tp.norm() * gp.norm() * gpi.norm()));
        }
        assert!(worst <= 1e-12, "{worst}");
    }
}

fn valid_ms(pair: &DualPair) -> Vec<usize> {
    let ll = CartanSpec::rank(pair);
    (0..=ll).filter(|&m| FormModel::cartan(pair, m).is_ok()).collect()
}

#[test]
fn cartan_normal_form_on_random_rational_points() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for fam in families() {
        for i in 0..200 {
            let pair = fam[i % fam.len()];
            let ms = valid_ms(&pair);
            let m = ms[rng.random_range(0..ms.len())];
            let coords: Vec<Rat> = (0..CartanSpec::rank(&pair))
                .map(|_| rat(rng.random_range(-40..=40), rng.random_range(1..=9)))
                .collect();
            let scale: f64 = coords.iter().map(|c| scalar_algebra::rat_to_f64(c).powi(2)).sum::<f64>() + 1.0;
            let (a, b) = normal_form_residual(&CartanSpec { pair, m, coords }).unwrap();
            assert!(a <= 1e-12 * scale && b <= 1e-12 * scale, "{pair} m={m}: {a} {b}");
        }
    }
}

#[test]
fn cartan_elements_are_regular_on_nonzero_coordinates() {
    // distinct nonzero squares give w in W_g when l <= l'
    let pair = DualPair::unitary(2, 1, 3);
    let spec = CartanSpec { pair, m: 1, coords: vec![int(1), int(2)] };
    let (_, w) = cartan_element(&spec).unwrap();
    assert!(is_in_wg(&w, &pair));
}

#[test]
fn orbit_dimension_tables_agree() {
    for alg in [Algebra::Real, Algebra::Complex, Algebra::Quaternion] {
        for n in 1..=12usize {
            if alg == Algebra::Real && n % 2 == 1 {
                continue;
            }
            let witt = n / 2;
            let pair = match alg {
                Algebra::Real => DualPair::orthosymplectic(6, n / 2),
                Algebra::Complex => DualPair::unitary(6, n / 2, n - n / 2),
                Algebra::Quaternion => DualPair::quaternionic(6, n),
            };
            let mut prev = -1;
            for k in 0..=6.min(witt) {
                let dim = orbit_dim(&pair, k).unwrap();
                assert_eq!(dim, orbit_dim_general(alg, n, k));
                assert_eq!(dim % 2, 0);
                assert!(dim > prev);
                prev = dim;
            }
        }
    }
}

#[test]
fn degrees_are_nonpositive() {
    for d in 1..=8 {
        for n in 1..=8 {
            let mut pairs = vec![DualPair::quaternionic(d, n)];
            if n % 2 == 0 {
                pairs.push(DualPair::orthosymplectic(d, n / 2));
            }
            for p in 0..=n {
                pairs.push(DualPair::unitary(d, p, n - p));
            }
            for pair in pairs {
                for o in orbit_table(&pair) {
                    assert!(o.degree <= 0);
                    assert_eq!(o.degree == 0, o.dim == pair.dim_w());
                }
            }
        }
    }
}

/// Real basis of g' = {X : conj(X)^t F + F X = 0}.
fn lie_g_prime_basis(model: &FormModel) -> Vec<MatrixOverD> {
    let p = model.pair();
    let (alg, n) = (p.algebra(), p.d_prime());
    let f = model.form().clone();
    let m = real_matrix(alg, n, n, |x| x.adjoint().mul(&f).add(&f.mul(x)));
    nullspace(&m).into_iter().map(|v| MatrixOverD::from_real_vec(alg, n, n, &v)).collect()
}

#[test]
fn orbit_dimension_matches_adjoint_rank() {
    let pairs = [
        DualPair::orthosymplectic(1, 1),
        DualPair::orthosymplectic(2, 2),
        DualPair::orthosymplectic(3, 3),
        DualPair::unitary(2, 2, 2),
        DualPair::unitary(1, 1, 3),
        DualPair::unitary(3, 2, 3),
        DualPair::quaternionic(1, 3),
        DualPair::quaternionic(2, 4),
    ];
    for pair in pairs {
        for k in 0..=pair.m() {
            let model = FormModel::nilpotent(&pair, k).unwrap();
            let basis = lie_g_prime_basis(&model);
            assert_eq!(basis.len() as i64, pair.dim_g_prime(), "{pair}");
            for x in &basis {
                assert!(model.lie_g_prime_defect(x) < 1e-10);
            }
            let nk = nilpotent_element(&model, k).unwrap();
            let e = tau_prime(&nk, &model).unwrap();
            let images: Vec<Vec<f64>> = basis.iter().map(|x| x.mul(&e).sub(&e.mul(x)).to_real_vec()).collect();
            let m = DMatrix::from_fn(images[0].len(), images.len(), |r, c| images[c][r]);
            assert_eq!(numeric_rank(&m) as i64, orbit_dim(&pair, k).unwrap(), "{pair} k={k}");
        }
    }
}

#[test]
fn dilation_determinants() {
    let pairs = [
        DualPair::orthosymplectic(1, 1),
        DualPair::orthosymplectic(3, 2),
        DualPair::unitary(1, 1, 1),
        DualPair::unitary(3, 2, 3),
        DualPair::quaternionic(2, 3),
    ];
    for pair in pairs {
        for k in 0..=pair.m() {
            for (t, tr) in [(0.5, rat(1, 2)), (1.7, rat(17, 10)), (3.0, int(3))] {
                let (e, v) = gt_dilation_det(&pair, k, &tr).unwrap();
                let (det, leak) = gt_slice_det_numeric(&pair, k, t).unwrap();
                let expect = scalar_algebra::rat_to_f64(&v);
                assert!(leak < 1e-12);
                assert!((det - expect).abs() <= 1e-10 * expect, "{pair} k={k} e={e}: {det} vs {expect}");
                let full = gt_full_det_numeric(&pair, k, t).unwrap();
                let expect_full = t.powi(pair.dim_w() as i32);
                assert!((full - expect_full).abs() <= 1e-10 * expect_full);
            }
        }
    }
}

#[test]
fn tau_scales_on_the_slice() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for pair in [DualPair::orthosymplectic(4, 3), DualPair::unitary(3, 2, 3), DualPair::quaternionic(2, 4)] {
        for k in 0..=pair.m() {
            let model = FormModel::nilpotent(&pair, k).unwrap();
            for _ in 0..20 {
                let w = random_slice_point(&model, k, &mut rng).unwrap();
                let t: f64 = rng.random_range(0.2..3.0);
                let gw = g_t(&model, k, t, &w).unwrap();
                let lhs = tau(&gw, &model).unwrap();
                let rhs = tau(&w, &model).unwrap().scale(t * t);
                assert!(lhs.sub(&rhs).norm() <= 1e-12 * (1.0 + rhs.norm()));
                // g_t maps the slice to itself: the N_k rows are fixed.
                let top = gw.block(0, k, 0, k);
                assert!(top.sub(&MatrixOverD::identity(pair.algebra(), k)).norm() < 1e-12);
            }
        }
    }
}

/// Nullspace oracle: some nonzero x in g with w x = 0.
fn killed_by_g(w: &MatrixOverD, pair: &DualPair) -> bool {
    let (alg, d) = (pair.algebra(), pair.d());
    let skew = real_matrix(alg, d, d, |x| x.sub(&x.adjoint()));
    let basis: Vec<MatrixOverD> = {
        let s = skew.clone().svd_unordered(true, false);
        let u = s.u.unwrap();
        (0..s.singular_values.len())
            .filter(|&i| s.singular_values[i] > 1e-10)
            .map(|i| MatrixOverD::from_real_vec(alg, d, d, &u.column(i).iter().copied().collect::<Vec<_>>()))
            .collect()
    };
    assert_eq!(basis.len() as i64, pair.g().dim());
    if basis.is_empty() {
        return false;
    }
    let images: Vec<Vec<f64>> = basis.iter().map(|x| w.mul(x).to_real_vec()).collect();
    let m = DMatrix::from_fn(images[0].len(), images.len(), |r, c| images[c][r]);
    numeric_rank(&m) < basis.len()
}

#[test]
fn wg_rank_criterion_matches_nullspace() {
    let mut rng = ChaCha8Rng::seed_from_u64(14);
    let pairs = [
        DualPair::orthosymplectic(3, 2),
        DualPair::orthosymplectic(4, 1),
        DualPair::orthosymplectic(1, 1),
        DualPair::unitary(3, 1, 2),
        DualPair::unitary(2, 2, 2),
        DualPair::quaternionic(3, 2),
        DualPair::quaternionic(1, 1),
    ];
    for pair in pairs {
        let model = FormModel::nilpotent(&pair, 0).unwrap();
        let alg = pair.algebra();
        for r in 0..=pair.d().min(pair.d_prime()) {
            for _ in 0..5 {
                let a = model.random_w(&mut rng);
                let mut b = MatrixOverD::zeros(alg, pair.d(), pair.d());
                for j in 0..r {
                    b.set(j, j, num_complex::Complex64::new(1.0, 0.0));
                }
                let g = model.random_g(&mut rng);
                let w = a.mul(&g.mul(&b).mul(&g.adjoint()));
                assert_eq!(w.rank(1e-10), r);
                assert_eq!(is_in_wg(&w, &pair), !killed_by_g(&w, &pair), "{pair} rank {r}");
            }
        }
    }
}

#[test]
fn wg_examples() {
    let pair = DualPair::orthosymplectic(3, 2);
    assert!(!is_in_wg(&MatrixOverD::zeros(Algebra::Real, 4, 3), &pair));
    let mut w = MatrixOverD::zeros(Algebra::Real, 4, 3);
    w.set(0, 0, num_complex::Complex64::new(1.0, 0.0));
    w.set(1, 1, num_complex::Complex64::new(1.0, 0.0));
    assert!(is_in_wg(&w, &pair));
    w.set(2, 2, num_complex::Complex64::new(1.0, 0.0));
    assert!(is_in_wg(&w, &pair));
}

proptest! {
    #[test]
    fn stable_rule_is_the_dimension_equality(d in 1usize..=10, n in 1usize..=10, p in 0usize..=10) {
        let mut pairs = vec![DualPair::quaternionic(d, n)];
        if n % 2 == 0 {
            pairs.push(DualPair::orthosymplectic(d, n / 2));
        }
        if p <= n {
            pairs.push(DualPair::unitary(d, p, n - p));
        }
        for pair in pairs {
            prop_assert_eq!(stable_range_equality(&pair), stable_range_rule(&pair));
        }
    }

    #[test]
    fn gap_is_nonnegative_where_proved(d in 1usize..=10, n in 1usize..=10, p in 0usize..=10) {
        prop_assume!(p <= n);
        let u = DualPair::unitary(d, p, n - p);
        if d <= n {
            prop_assert!(homogeneity_gap(&u) >= 0);
        }
        let h = DualPair::quaternionic(d, n);
        if d <= n {
            prop_assert!(homogeneity_gap(&h) >= 0);
        }
        if n % 2 == 0 {
            let o = DualPair::orthosymplectic(d, n / 2);
            let bound = if d % 2 == 1 { n + 1 } else { n };
            if d <= bound {
                prop_assert!(homogeneity_gap(&o) >= 0);
            }
        }
    }
}
