use std::sync::Arc;

use super::scalar::{int, real, scalar};
use super::*;
use crate::random::FormSampler;

fn r2() -> Arc<Chart> {
    Chart::cartesian("R2", &["x", "y"]).unwrap()
}

fn sign_power(p: usize) -> Scalar {
    if p % 2 == 0 {
        scalar(1, 1)
    } else {
        scalar(-1, 1)
    }
}

/// Oracle: evaluate a constant-coefficient p-form on p coordinate vectors
/// through the determinant definition of `dx_I(v_1..v_p)`.
fn evaluate_constant_form(a: &DifferentialForm, vectors: &[Vec<i64>]) -> Scalar {
    let p = vectors.len();
    assert_eq!(a.degree(), p);
    let mut total = scalar(0, 1);
    for (b, c) in a.components() {
        let c = c.as_constant().expect("constant form");
        // det[v_k(b_j)] by permutation expansion
        let mut det = 0i64;
        let perms = permutations(p);
        for (perm, sign) in perms {
            let mut prod = sign;
            for (k, &j) in perm.iter().enumerate() {
                prod *= vectors[k][b[j]];
            }
            det += prod;
        }
        total = total + c * real(int(det));
    }
    total
}

fn permutations(n: usize) -> Vec<(Vec<usize>, i64)> {
    if n == 0 {
        return vec![(vec![], 1)];
    }
    let mut out = vec![];
    for (perm, sign) in permutations(n - 1) {
        for pos in 0..=perm.len() {
            let mut q = perm.clone();
            q.insert(pos, n - 1);
            let moved = (perm.len() - pos) as i64;
            out.push((q, if moved % 2 == 0 { sign } else { -sign }));
        }
    }
    out
}

#[test]
fn wedge_examples() {
    let c = r2();
    let (dx, dy) = (DifferentialForm::dx(&c, 0), DifferentialForm::dx(&c, 1));
    let area = dx.wedge(&dy).unwrap();
    assert_eq!(area.degree(), 2);
    assert_eq!(area.component(&[0, 1]), Coefficient::one(&c));

    let a = dx.add(&dy).unwrap();
    assert!(a.wedge(&a).unwrap().is_zero());

    // (x dy) ∧ (y dx) = xy dy∧dx = -xy dx∧dy
    let x = Coefficient::var(&c, 0);
    let y = Coefficient::var(&c, 1);
    let lhs = dy.mul_function(&x).unwrap().wedge(&dx.mul_function(&y).unwrap()).unwrap();
    let expected = DifferentialForm::term(-(&x * &y), &[0, 1]).unwrap();
    assert_eq!(lhs, expected);
}

#[test]
fn wedge_rejects_chart_mismatch() {
    let a = DifferentialForm::dx(&r2(), 0);
    let b = DifferentialForm::dx(&Chart::euclidean(2), 0);
    assert!(matches!(a.wedge(&b), Err(crate::Error::ChartMismatch { .. })));
}

#[test]
fn exterior_derivative_examples() {
    let c = r2();
    let x = Coefficient::var(&c, 0);
    let y = Coefficient::var(&c, 1);
    let d = DifferentialForm::function(&x * &y).d();
    let expected = DifferentialForm::term(y.clone(), &[0])
        .unwrap()
        .add(&DifferentialForm::term(x.clone(), &[1]).unwrap())
        .unwrap();
    assert_eq!(d, expected);

    let xdy = DifferentialForm::term(x, &[1]).unwrap();
    assert_eq!(xdy.d(), DifferentialForm::basis(&c, &[0, 1]));

    // d(t² dφ) = 2t dt∧dφ
    let p = Chart::polar();
    let t = Coefficient::var(&p, 0);
    let f = DifferentialForm::term(t.pow(2), &[1]).unwrap();
    assert_eq!(f.d(), DifferentialForm::term(t.scale(&scalar(2, 1)), &[0, 1]).unwrap());
}

#[test]
fn interior_vector_examples() {
    let c = r2();
    let area = DifferentialForm::basis(&c, &[0, 1]);
    assert_eq!(area.interior(&VectorField::coordinate(&c, 0)).unwrap(), DifferentialForm::dx(&c, 1));
    assert_eq!(
        area.interior(&VectorField::coordinate(&c, 1)).unwrap(),
        DifferentialForm::dx(&c, 0).neg()
    );
    // degree-0 input contracts to zero
    let f = DifferentialForm::function(Coefficient::var(&c, 0));
    assert!(f.interior(&VectorField::coordinate(&c, 0)).unwrap().is_zero());

    // (t∂_t) ⌟ (t dt∧dφ) = t² dφ
    let p = Chart::polar();
    let t = Coefficient::var(&p, 0);
    let omega = DifferentialForm::term(t.clone(), &[0, 1]).unwrap();
    let v = VectorField::radial_euler(&p).unwrap();
    assert_eq!(omega.interior(&v).unwrap(), DifferentialForm::term(t.pow(2), &[1]).unwrap());
}

#[test]
fn interior_bivector_examples() {
    let c = r2();
    let area = DifferentialForm::basis(&c, &[0, 1]);
    let mut g = BivectorField::zero(&c);
    g.add_term(1, 0, Coefficient::one(&c)).unwrap(); // ∂y∧∂x

    // Convention i(U∧W)a = i_U(i_W a): i(∂y∧∂x)(dx∧dy) = (dx∧dy)(∂x, ∂y) = 1.
    let got = area.interior_bivector(&g).unwrap();
    assert_eq!(got, DifferentialForm::function(Coefficient::one(&c)));
    assert_eq!(evaluate_constant_form(&area, &[vec![1, 0], vec![0, 1]]), scalar(1, 1));
    // The opposite ordering a(U, W) = (dx∧dy)(∂y, ∂x) is -1.
    assert_eq!(evaluate_constant_form(&area, &[vec![0, 1], vec![1, 0]]), scalar(-1, 1));

    // i(G)(df) = 0
    let df = DifferentialForm::function(Coefficient::var(&c, 0).pow(3)).d();
    assert!(df.interior_bivector(&g).unwrap().is_zero());
}

#[test]
fn bivector_contraction_of_standard_symplectic_form_is_n() {
    for n in 1..=3usize {
        let chart = Chart::euclidean(2 * n);
        let mut g = BivectorField::zero(&chart);
        let mut omega = DifferentialForm::zero(&chart, 2);
        for i in 0..n {
            g.add_term(2 * i + 1, 2 * i, Coefficient::one(&chart)).unwrap();
            omega = omega.add(&DifferentialForm::basis(&chart, &[2 * i, 2 * i + 1])).unwrap();
        }
        let got = omega.interior_bivector(&g).unwrap();
        // oracle: Σ_i ω(∂x_i, ∂y_i) by the determinant definition
        let mut oracle = scalar(0, 1);
        for i in 0..n {
            let mut u = vec![0i64; 2 * n];
            let mut w = vec![0i64; 2 * n];
            u[2 * i] = 1;
            w[2 * i + 1] = 1;
            oracle = oracle + evaluate_constant_form(&omega, &[u, w]);
        }
        assert_eq!(oracle, scalar(n as i64, 1));
        assert_eq!(got.as_function().unwrap().as_constant(), Some(oracle));
    }
}

#[test]
fn pullback_examples() {
    let c = r2();
    let polar = ChartMap::polar(&c).unwrap();
    let area = DifferentialForm::basis(&c, &[0, 1]);
    let p = polar.source().clone();
    let t = Coefficient::var(&p, 0);
    assert_eq!(polar.pullback(&area).unwrap(), DifferentialForm::term(t, &[0, 1]).unwrap());

    let k = DifferentialForm::function(Coefficient::from_int(&c, 7));
    assert_eq!(polar.pullback(&k).unwrap(), DifferentialForm::function(Coefficient::from_int(&p, 7)));

    let mut s = FormSampler::new(3, 4);
    let id = ChartMap::identity(&c);
    for _ in 0..20 {
        let a = s.any_form(&c);
        assert_eq!(id.pullback(&a).unwrap(), a);
    }
}

#[test]
fn lie_derivative_examples() {
    let p = Chart::polar();
    let t = Coefficient::var(&p, 0);
    let omega = DifferentialForm::term(t.clone(), &[0, 1]).unwrap();
    let v = VectorField::radial_euler(&p).unwrap();
    assert_eq!(omega.lie_derivative(&v).unwrap(), omega.scale(&scalar(2, 1)));

    let c = r2();
    let mut s = FormSampler::new(11, 4);
    for _ in 0..10 {
        let f = s.polynomial(&c);
        let v = VectorField::new(&c, vec![s.polynomial(&c), s.polynomial(&c)]).unwrap();
        let lie = DifferentialForm::function(f.clone()).lie_derivative(&v).unwrap();
        assert_eq!(lie.as_function().unwrap(), v.apply(&f));
    }

    let x = Coefficient::var(&c, 0);
    let a = DifferentialForm::term(x, &[0, 1]).unwrap();
    let lie = a.lie_derivative(&VectorField::coordinate(&c, 0)).unwrap();
    assert_eq!(lie, DifferentialForm::basis(&c, &[0, 1]));
}

#[test]
fn golden_serialization() {
    let c = r2();
    let x = Coefficient::var(&c, 0);
    let y = Coefficient::var(&c, 1);
    let a = DifferentialForm::term(&x * &y, &[0])
        .unwrap()
        .add(&DifferentialForm::term(x.scale(&scalar(-3, 2)), &[1]).unwrap())
        .unwrap();
    assert_eq!(a.to_string(), "(1*x*y) dx + (-3/2*x) dy");
    assert_eq!(a.wedge(&DifferentialForm::dx(&c, 1)).unwrap().to_string(), "(1*x*y) dx^dy");
    assert_eq!(DifferentialForm::zero(&c, 1).to_string(), "0");

    let p = Chart::polar();
    let f = DifferentialForm::term(Coefficient::cos(&p, 1, 1), &[1]).unwrap();
    assert_eq!(f.to_string(), "(1/2*exp(-1i*phi) + 1/2*exp(i*phi)) dphi");
}

fn property_charts() -> Vec<Arc<Chart>> {
    vec![r2(), Chart::euclidean(3), Chart::euclidean(4)]
}

#[test]
fn d_squared_vanishes_on_random_forms() {
    for chart in property_charts() {
        let mut s = FormSampler::new(20, 6);
        for _ in 0..200 {
            let a = s.any_form(&chart);
            assert!(a.d().d().is_zero(), "d² ≠ 0 on {a}");
        }
    }
    // angle-dependent coefficients on the cone chart
    let p = Chart::polar();
    let mut s = FormSampler::new(21, 4);
    for _ in 0..200 {
        let a = DifferentialForm::function(s.trig_polynomial(&p, 3));
        assert!(a.d().d().is_zero());
    }
}

#[test]
fn graded_commutativity_and_leibniz() {
    for chart in property_charts() {
        let mut s = FormSampler::new(30, 4);
        for _ in 0..200 {
            let a = s.any_form(&chart);
            let b = s.any_form(&chart);
            let (p, q) = (a.degree(), b.degree());
            let ab = a.wedge(&b).unwrap();
            let ba = b.wedge(&a).unwrap();
            assert_eq!(ab, ba.scale(&sign_power(p * q)));

            let lhs = ab.d();
            let rhs = a
                .d()
                .wedge(&b)
                .unwrap()
                .add(&a.wedge(&b.d()).unwrap().scale(&sign_power(p)))
                .unwrap();
            assert!(lhs.sub(&rhs).unwrap().is_zero());
        }
    }
}

#[test]
fn interior_is_an_antiderivation() {
    for chart in property_charts() {
        let mut s = FormSampler::new(40, 3);
        for _ in 0..200 {
            let a = s.any_form(&chart);
            let b = s.any_form(&chart);
            let comps = (0..chart.dim()).map(|_| s.polynomial(&chart)).collect();
            let v = VectorField::new(&chart, comps).unwrap();
            let lhs = a.wedge(&b).unwrap().interior(&v).unwrap();
            let rhs = a
                .interior(&v)
                .unwrap()
                .wedge(&b)
                .unwrap()
                .add(&a.wedge(&b.interior(&v).unwrap()).unwrap().scale(&sign_power(a.degree())))
                .unwrap();
            assert!(lhs.sub(&rhs).unwrap().is_zero());
        }
    }
}

#[test]
fn pullback_commutes_with_d_and_wedge() {
    let target = Chart::euclidean(3);
    let source = r2();
    let mut s = FormSampler::new(50, 2);
    for _ in 0..60 {
        let map = ChartMap::from_functions(
            &source,
            &target,
            (0..3).map(|_| s.polynomial_of_degree(&source, 2)).collect(),
        )
        .unwrap();
        let a = s.any_form(&target);
        let b = s.any_form(&target);
        let fa = map.pullback(&a).unwrap();
        let fb = map.pullback(&b).unwrap();
        assert_eq!(map.pullback(&a.d()).unwrap().normalized(), fa.d());
        assert_eq!(map.pullback(&a.wedge(&b).unwrap()).unwrap(), fa.wedge(&fb).unwrap());
    }
}

#[test]
fn polar_pullback_commutes_with_d() {
    let c = r2();
    let polar = ChartMap::polar(&c).unwrap();
    let mut s = FormSampler::new(51, 3);
    for _ in 0..50 {
        let a = s.any_form(&c);
        let lhs = polar.pullback(&a.d()).unwrap();
        let rhs = polar.pullback(&a).unwrap().d();
        assert!(lhs.sub(&rhs).unwrap().is_zero());
        for (_, coeff) in rhs.components() {
            assert!(coeff.is_real());
        }
    }
}

#[test]
fn canonicalization_is_idempotent() {
    let chart = Chart::euclidean(4);
    let mut s = FormSampler::new(60, 5);
    for _ in 0..100 {
        let a = s.any_form(&chart);
        assert_eq!(a.normalized(), a);
        assert_eq!(a.normalized().normalized(), a.normalized());
    }
}

#[test]
fn zero_form_is_absorbing() {
    let c = r2();
    let z = DifferentialForm::zero(&c, 1);
    let a = DifferentialForm::dx(&c, 0);
    assert!(z.wedge(&a).unwrap().is_zero());
    assert!(z.d().is_zero());
    assert!(z.interior(&VectorField::coordinate(&c, 0)).unwrap().is_zero());
}
