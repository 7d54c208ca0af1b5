use std::collections::BTreeSet;

use super::*;
use crate::exterior::scalar::{rat, real, scalar, Rational};
use crate::exterior::{Coefficient, DifferentialForm};
use crate::random::FormSampler;

fn var(s: &SymplecticChart, i: usize) -> Coefficient {
    Coefficient::var(s.chart(), i)
}

fn one(s: &SymplecticChart) -> Coefficient {
    Coefficient::one(s.chart())
}

#[test]
fn standard_chart_invariants() {
    for n in 1..=3 {
        let s = SymplecticChart::standard(n);
        assert!(s.omega().d().is_zero());
        let top = s.omega().power(n).unwrap();
        let fact: i64 = (1..=n as i64).product();
        assert_eq!(top, s.volume().scale(&scalar(fact, 1)));
        let all: Vec<usize> = (0..2 * n).collect();
        assert_eq!(s.volume().component(&all), one(&s));
        assert_eq!(s.omega().interior_bivector(s.bivector()).unwrap().as_function(), Some(Coefficient::from_int(s.chart(), n as i64)));
    }
}

#[test]
fn bracket_examples() {
    let s = SymplecticChart::standard(1);
    let (x, y) = (var(&s, 0), var(&s, 1));
    assert_eq!(s.bracket(&x, &y).unwrap(), one(&s));
    assert!(s.bracket(&x, &x).unwrap().is_zero());
    assert_eq!(s.bracket(&(&x * &y), &y).unwrap(), y);
}

#[test]
fn bracket_is_a_poisson_structure() {
    let s = SymplecticChart::standard(2);
    let mut r = FormSampler::new(2, 3);
    for _ in 0..40 {
        let (f, g, h) = (r.polynomial(s.chart()), r.polynomial(s.chart()), r.polynomial(s.chart()));
        let fg = s.bracket(&f, &g).unwrap();
        assert_eq!(fg, -s.bracket(&g, &f).unwrap());
        let leibniz = &(&s.bracket(&f, &h).unwrap() * &g) + &(&f * &s.bracket(&g, &h).unwrap());
        assert_eq!(s.bracket(&(&f * &g), &h).unwrap(), leibniz);
        let jacobi = &(&s.bracket(&f, &s.bracket(&g, &h).unwrap()).unwrap()
            + &s.bracket(&g, &s.bracket(&h, &f).unwrap()).unwrap())
            + &s.bracket(&h, &fg).unwrap();
        assert!(jacobi.is_zero());
    }
}

#[test]
fn delta_examples() {
    let s = SymplecticChart::standard(1);
    let x = var(&s, 0);
    assert!(s.delta(&DifferentialForm::function(x.clone())).unwrap().is_zero());
    let a = DifferentialForm::term(x, &[0, 1]).unwrap();
    // i(G)d(x dx∧dy) = 0, i(G)(x dx∧dy) = x, so δ = −dx
    assert_eq!(s.delta(&a).unwrap(), DifferentialForm::dx(s.chart(), 0).neg());
    for n in 1..=2 {
        let s = SymplecticChart::standard(n);
        assert!(s.delta(s.omega()).unwrap().is_zero());
    }
}

#[test]
fn delta_squares_to_zero() {
    for n in 1..=2 {
        let s = SymplecticChart::standard(n);
        let mut r = FormSampler::new(9, 6);
        for _ in 0..60 {
            let a = r.any_form(s.chart());
            let da = s.delta(&a).unwrap();
            assert_eq!(da.degree(), a.degree().saturating_sub(1));
            assert!(s.delta(&da).unwrap().is_zero());
        }
    }
}

#[test]
fn koszul_expansion_matches_commutator() {
    let s = SymplecticChart::standard(2);
    let mut r = FormSampler::new(4, 3);
    r.max_terms = 2;
    for _ in 0..40 {
        let p = r.degree(s.chart()).min(3);
        let f0 = r.polynomial(s.chart());
        let fs: Vec<Coefficient> = (0..p).map(|_| r.polynomial_of_degree(s.chart(), 2)).collect();
        let mut a = DifferentialForm::function(f0.clone());
        for f in &fs {
            a = a.wedge(&DifferentialForm::function(f.clone()).d()).unwrap();
        }
        let lhs = s.delta_decomposable(&f0, &fs).unwrap();
        let rhs = s.delta(&a).unwrap();
        assert!(lhs.sub(&rhs).unwrap().is_zero(), "f0 = {f0}, fs = {fs:?}");
    }
}

#[test]
fn star_examples() {
    let s = SymplecticChart::standard(1);
    let c = s.chart();
    let unit = DifferentialForm::function(one(&s));
    assert_eq!(s.star(&unit).unwrap(), *s.volume());
    assert_eq!(s.star(s.volume()).unwrap(), unit);

    // solve β ∧ *dx = G(β, dx) vol for *dx = a dx + b dy:
    // β = dx gives b = G(dx, dx) = 0, β = dy gives −a = G(dy, dx) = −1
    let (dx, dy) = (DifferentialForm::dx(c, 0), DifferentialForm::dx(c, 1));
    let g = |b: &DifferentialForm, a: &DifferentialForm| s.bivector().pair(b, a).unwrap().as_constant().unwrap();
    let b = g(&dx, &dx);
    let a = -g(&dy, &dx);
    let expected = dx.scale(&a).add(&dy.scale(&b)).unwrap();
    assert_eq!(s.star(&dx).unwrap(), expected);
    assert_eq!(expected, dx);
    assert_eq!(s.star(&dy).unwrap(), dy);
}

#[test]
fn star_satisfies_its_defining_identity() {
    for n in 1..=2 {
        let s = SymplecticChart::standard(n);
        let m = 2 * n;
        for p in 0..=m {
            for i in super::symplectic::subsets(m, p) {
                let alpha = DifferentialForm::basis(s.chart(), &i);
                let star = s.star(&alpha).unwrap();
                for k in super::symplectic::subsets(m, p) {
                    let beta = DifferentialForm::basis(s.chart(), &k);
                    let lhs = beta.wedge(&star).unwrap();
                    let rhs = s.volume().mul_function(&s.pairing(&beta, &alpha).unwrap()).unwrap();
                    assert!(lhs.sub(&rhs).unwrap().is_zero(), "K = {k:?}, I = {i:?}");
                }
            }
        }
    }
}

#[test]
fn star_is_an_involution() {
    for n in 1..=2 {
        let s = SymplecticChart::standard(n);
        let m = 2 * n;
        for p in 0..=m {
            for i in super::symplectic::subsets(m, p) {
                for k in 0..=3 {
                    for e in [vec![k as i32; m], {
                        let mut e = vec![0; m];
                        e[0] = k as i32;
                        e
                    }] {
                        let c = Coefficient::monomial(s.chart(), e, real(rat(1, 1)));
                        let a = DifferentialForm::term(c, &i).unwrap();
                        assert_eq!(s.star(&s.star(&a).unwrap()).unwrap(), a);
                    }
                }
            }
        }
    }
}

#[test]
fn delta_is_conjugate_to_d() {
    for n in 1..=2 {
        let s = SymplecticChart::standard(n);
        let mut r = FormSampler::new(12, 6);
        for _ in 0..60 {
            let a = r.any_form(s.chart());
            assert!(s.star_delta_identity_check(&a).unwrap(), "{a}");
        }
    }
    let s = SymplecticChart::standard(1);
    let a = DifferentialForm::term(var(&s, 0), &[0, 1]).unwrap();
    assert!(s.star_delta_identity_check(&a).unwrap());
    assert!(s.star_delta_identity_check(&DifferentialForm::function(var(&s, 1))).unwrap());
}

#[test]
fn group_actions() {
    let s = SymplecticChart::standard(1);
    for k in [1, 2, 3, 4, 6] {
        let g = GroupAction::cyclic(&s, k).unwrap();
        assert_eq!(g.order(), k);
        assert!(g.is_invariant(s.omega()).unwrap());
    }
    assert!(matches!(GroupAction::cyclic(&s, 5), Err(crate::Error::Unsupported(_))));
    let reflection = vec![vec![rat(-1, 1), rat(0, 1)], vec![rat(0, 1), rat(1, 1)]];
    assert!(matches!(GroupAction::new(&s, 2, reflection), Err(crate::Error::NotSymplectic)));
    let wrong_order = vec![vec![rat(0, 1), rat(-1, 1)], vec![rat(1, 1), rat(0, 1)]];
    assert!(GroupAction::new(&s, 2, wrong_order).is_err());
}

#[test]
fn averaging_projector() {
    let s = SymplecticChart::standard(2);
    let mut r = FormSampler::new(13, 3);
    for k in [2, 3, 4] {
        let g = GroupAction::cyclic(&s, k).unwrap();
        for _ in 0..15 {
            let a = r.any_form(s.chart());
            let pa = g.average(&a).unwrap();
            assert_eq!(g.average(&pa).unwrap(), pa);
            assert!(g.is_invariant(&pa).unwrap());
            assert_eq!(g.average(&pa.d()).unwrap(), pa.d());
            assert_eq!(g.average(&a.d()).unwrap(), pa.d());
            let dpa = s.delta(&pa).unwrap();
            assert!(g.is_invariant(&dpa).unwrap());
            assert!(g.is_invariant(&s.star(&pa).unwrap()).unwrap());
        }
    }
}

#[test]
fn de_rham_sizes_for_constants() {
    let s = SymplecticChart::standard(1);
    let strata = build_stratified_complex(&s, 0, Operator::DeRham, None).unwrap();
    assert_eq!(basis_sizes(&strata), vec![1, 2, 1]);
    let zero_forms = strata.iter().find(|t| t.degree == 0).unwrap();
    assert!(zero_forms.boundary.is_zero());
}

#[test]
fn delta_matrix_matches_hand_computation() {
    let s = SymplecticChart::standard(1);
    let strata = build_stratified_complex(&s, 2, Operator::Delta, None).unwrap();
    for t in strata.iter().filter(|t| t.degree == 2) {
        let Some(target) = strata.iter().find(|u| u.weight == t.weight && u.degree == 1) else {
            assert_eq!(t.coefficient_degree, 0);
            assert!(s.delta(&t.basis[0]).unwrap().is_zero());
            continue;
        };
        for (j, f) in t.basis.iter().enumerate() {
            let e = f.component(&[0, 1]);
            let (exp, _) = e.terms().iter().next().unwrap();
            let (a, b) = (exp[0] as i64, exp[1] as i64);
            // δ(x^a y^b dx∧dy) = −a x^{a−1} y^b dx − b x^a y^{b−1} dy
            let mut hand = DifferentialForm::zero(s.chart(), 1);
            if a > 0 {
                let c = Coefficient::monomial(s.chart(), vec![exp[0] - 1, exp[1]], real(rat(-a, 1)));
                hand = hand.add(&DifferentialForm::term(c, &[0]).unwrap()).unwrap();
            }
            if b > 0 {
                let c = Coefficient::monomial(s.chart(), vec![exp[0], exp[1] - 1], real(rat(-b, 1)));
                hand = hand.add(&DifferentialForm::term(c, &[1]).unwrap()).unwrap();
            }
            let mut from_matrix = DifferentialForm::zero(s.chart(), 1);
            for (i, g) in target.basis.iter().enumerate() {
                from_matrix = from_matrix.add(&g.scale(&real(t.boundary.get(i, j)))).unwrap();
            }
            assert_eq!(from_matrix, hand);
        }
    }
}

#[test]
fn z2_invariant_functions() {
    let s = SymplecticChart::standard(1);
    let g = GroupAction::cyclic(&s, 2).unwrap();
    let strata = build_stratified_complex(&s, 2, Operator::DeRham, Some(&g)).unwrap();
    let got: BTreeSet<String> =
        strata.iter().filter(|t| t.degree == 0).flat_map(|t| t.basis.iter().map(|f| f.to_string())).collect();
    let want: BTreeSet<String> = ["1", "1*x1^2", "1*x1*y1", "1*y1^2"].iter().map(|s| s.to_string()).collect();
    assert_eq!(got, want);
}

#[test]
fn homology_of_the_plane() {
    let s = SymplecticChart::standard(1);
    for d in 0..=4 {
        let dr = build_stratified_complex(&s, d, Operator::DeRham, None).unwrap();
        assert_eq!(homology_ranks(&dr).unwrap(), vec![1, 0, 0]);
        let de = build_stratified_complex(&s, d, Operator::Delta, None).unwrap();
        assert_eq!(homology_ranks(&de).unwrap(), vec![0, 0, 1]);
        // the naive cut at k ≤ D leaves the degree-D top forms unbounded
        let naive = naive_homology_ranks(&dr).unwrap();
        assert_eq!(naive[0], 1);
        assert_eq!(naive[2], d + 1);
    }
}

#[test]
fn delta_blocks_equal_conjugated_d() {
    for n in 1..=2 {
        let s = SymplecticChart::standard(n);
        let strata = build_stratified_complex(&s, 2, Operator::Delta, None).unwrap();
        for t in &strata {
            let Some(target) = strata.iter().find(|u| u.weight == t.weight && u.degree + 1 == t.degree) else {
                continue;
            };
            for (j, f) in t.basis.iter().enumerate() {
                let mut col = DifferentialForm::zero(s.chart(), t.degree - 1);
                for (i, g) in target.basis.iter().enumerate() {
                    col = col.add(&g.scale(&real(t.boundary.get(i, j)))).unwrap();
                }
                assert!(col.sub(&s.star_d_star(f).unwrap()).unwrap().is_zero());
            }
        }
    }
}

#[test]
fn corrupted_complex_is_rejected() {
    let s = SymplecticChart::standard(1);
    let mut strata = build_stratified_complex(&s, 2, Operator::DeRham, None).unwrap();
    let t = strata.iter_mut().find(|t| t.degree == 1 && t.weight == 2 && t.dim() > 0).unwrap();
    t.boundary.set(0, 0, Rational::from_integer(7.into()));
    assert!(matches!(homology_ranks(&strata), Err(crate::Error::NotAComplex { .. })));
}
