use std::collections::BTreeMap;

use super::*;
use crate::exterior::scalar::{rat, real, scalar};
use crate::exterior::{Chart, ChartMap, Coefficient, DifferentialForm};
use crate::random::FormSampler;
use crate::trig_roots::TrigPoly;

fn dphi() -> DifferentialForm {
    DifferentialForm::dx(&circle_chart(), 0)
}

fn trig(modes: &[(i32, i64, i64)]) -> TrigPoly {
    // (mode, num, den) real cosine amplitudes: c·cos(bφ)
    let mut m = BTreeMap::new();
    for &(b, n, d) in modes {
        if b == 0 {
            m.insert(0, scalar(n, d));
        } else {
            m.insert(b, scalar(n, 2 * d));
            m.insert(-b, scalar(n, 2 * d));
        }
    }
    TrigPoly::new(m).unwrap()
}

pub(crate) fn sample_perturbed_links() -> Vec<Link> {
    let c = circle_chart();
    let q = |n, d| real(rat(n, d));
    vec![
        perturbed_circle("cos2", Coefficient::cos(&c, 0, 2).scale(&q(1, 4))).unwrap(),
        perturbed_circle("sin1", Coefficient::sin(&c, 0, 1).scale(&q(1, 3))).unwrap(),
        perturbed_circle(
            "mixed",
            &Coefficient::cos(&c, 0, 1).scale(&q(1, 4)) + &Coefficient::sin(&c, 0, 3).scale(&q(1, 8)),
        )
        .unwrap(),
        perturbed_circle("offset", &Coefficient::from_rational(&c, rat(1, 5)) + &Coefficient::cos(&c, 0, 4).scale(&q(1, 10)))
            .unwrap(),
    ]
}

#[test]
fn sphere_contact_restrictions() {
    let s1 = standard_sphere_contact(1);
    let circle = s1.great_circle(&[rat(1, 1)]).unwrap();
    assert_eq!(circle.contact_form().unwrap(), &dphi());
    let s3 = standard_sphere_contact(2);
    let hopf = s3.great_circle(&[rat(1, 1), rat(0, 1)]).unwrap();
    assert_eq!(hopf.contact_form().unwrap(), &dphi());
    let tilted = s3.great_circle(&[rat(3, 5), rat(4, 5)]).unwrap();
    assert_eq!(tilted.contact_form().unwrap(), &dphi());
    for l in [&circle, &hopf, &tilted] {
        assert_eq!(l.norm_squared(), Coefficient::one(l.chart()));
        assert!(l.profile().iter().all(|p| p.is_real()));
    }
    assert!(s3.great_circle(&[rat(1, 1), rat(1, 1)]).is_err());
}

#[test]
fn latitude_and_perturbed_links() {
    let half = latitude(rat(1, 2)).unwrap();
    assert_eq!(half.contact_form().unwrap(), &dphi().scale(&scalar(3, 4)));
    assert!(latitude(rat(1, 1)).is_err());
    let c = circle_chart();
    assert!(perturbed_circle("pole", Coefficient::cos(&c, 0, 1)).is_err());
    for l in sample_perturbed_links() {
        let h = l.profile()[2].clone();
        let w = &Coefficient::one(&c) - &(&h * &h);
        assert_eq!(l.contact_form().unwrap(), &DifferentialForm::term(w, &[0]).unwrap());
        let p = l.point(&[0.3]);
        assert!((p.iter().map(|x| x * x).sum::<f64>() - 1.0).abs() < 1e-14);
    }
    let off = Link::new("off", &c, vec![Coefficient::one(&c); 2], vec![Coefficient::cos(&c, 0, 1), Coefficient::one(&c)]);
    assert!(off.is_err());
}

#[test]
fn flat_cone_is_the_plane() {
    let cone = ConeSpace::new(standard_circle()).unwrap();
    let csf = make_cone_symplectic(&cone, &dphi()).unwrap();
    let t = cone.radial();
    assert_eq!(csf.total(), &DifferentialForm::term(t, &[0, 1]).unwrap());
    let polar = ChartMap::polar(&Chart::cartesian("R2", &["x", "y"]).unwrap()).unwrap();
    let area = DifferentialForm::basis(polar.target(), &[0, 1]);
    assert_eq!(&polar.pullback(&area).unwrap(), csf.total());
    assert_eq!(&ambient_omega_pullback(&cone).unwrap(), csf.total());
    assert!(liouville_identities(&csf).unwrap().all());

    let doubled = make_cone_symplectic(&cone, &dphi().scale(&scalar(2, 1))).unwrap();
    assert_eq!(doubled.total(), &csf.total().scale(&scalar(2, 1)));
}

#[test]
fn hopf_cone_matches_ambient_form() {
    let s3 = standard_sphere_contact(2);
    for a in [[rat(1, 1), rat(0, 1)], [rat(3, 5), rat(4, 5)]] {
        let link = s3.great_circle(&a).unwrap();
        let alpha = link.contact_form().unwrap().clone();
        let cone = ConeSpace::new(link).unwrap();
        let csf = make_cone_symplectic(&cone, &alpha).unwrap();
        assert_eq!(&ambient_omega_pullback(&cone).unwrap(), csf.total());
    }
}

#[test]
fn quadric_component() {
    let q = quadric_link(1).unwrap();
    assert_eq!(quadric_constraints(&q), (true, true));
    let alpha = q.contact_form().unwrap().clone();
    assert_eq!(alpha, dphi());
    assert!(check_nondegenerate(&alpha).is_ok());
    let cone = ConeSpace::new(q).unwrap();
    let csf = make_cone_symplectic(&cone, &alpha).unwrap();
    assert!(liouville_identities(&csf).unwrap().all());
    // ω₀ restricted to the cone, decomposed as t dt∧α
    assert_eq!(&ambient_omega_pullback(&cone).unwrap(), csf.total());
    assert!(matches!(quadric_link(2), Err(crate::Error::Unsupported(_))));
}

#[test]
fn perturbed_cones_satisfy_identities() {
    for l in sample_perturbed_links() {
        let alpha = l.contact_form().unwrap().clone();
        let cone = ConeSpace::new(l).unwrap();
        let csf = make_cone_symplectic(&cone, &alpha).unwrap();
        let r = liouville_identities(&csf).unwrap();
        assert!(r.all(), "{r:?}");
        assert_eq!(csf.witness().unwrap().zeros, 0);
    }
}

#[test]
fn corrupted_form_breaks_lie_identity() {
    let cone = ConeSpace::new(standard_circle()).unwrap();
    let csf = make_cone_symplectic(&cone, &dphi()).unwrap();
    let t3 = DifferentialForm::term(cone.radial().pow(3), &[0, 1]).unwrap();
    let bad = ConicalSymplecticForm::from_parts(&cone, dphi(), csf.total().add(&t3).unwrap());
    let r = liouville_identities(&bad).unwrap();
    assert!(!r.lie_derivative_is_twice);
    assert!(r.closed);
    assert!(!r.all());
    // L_{t∂t}(t³ dt∧dφ) = 4 t³ dt∧dφ
    assert_eq!(t3.lie_derivative(&cone.liouville()).unwrap(), t3.scale(&scalar(4, 1)));
}

#[test]
fn degenerate_forms_are_rejected() {
    let cone = ConeSpace::new(standard_circle()).unwrap();
    let zero = DifferentialForm::zero(&circle_chart(), 1);
    assert!(matches!(make_cone_symplectic(&cone, &zero), Err(crate::Error::Degenerate(_))));
    let c = circle_chart();
    let vanishing = DifferentialForm::term(Coefficient::cos(&c, 0, 1), &[0]).unwrap();
    let Err(crate::Error::Degenerate(msg)) = make_cone_symplectic(&cone, &vanishing) else { panic!() };
    assert!(msg.contains("1.5707963"), "{msg}");
}

#[test]
fn quotient_cones() {
    let q2 = group_quotient_cone(2).unwrap();
    let g = q2.ambient.as_ref().unwrap();
    assert_eq!(g.generator()[0][0], rat(-1, 1));
    let s = crate::poisson::SymplecticChart::standard(1);
    assert!(g.is_invariant(s.omega()).unwrap());
    for k in [2, 3, 4, 6] {
        assert!(group_quotient_cone(k).unwrap().contact_invariant().unwrap());
    }
    let q5 = group_quotient_cone(5).unwrap();
    assert!(q5.ambient.is_none());
    assert!(q5.rotation.is_invariant(q5.cone.link().contact_form().unwrap()));
    assert!(group_quotient_cone(1).is_err());

    // a mode-1 form is moved by the quarter turn
    let c = circle_chart();
    let f = DifferentialForm::term(Coefficient::cos(&c, 0, 1), &[0]).unwrap();
    let r4 = group_quotient_cone(4).unwrap().rotation;
    let moved = r4.pullback(&f).unwrap();
    assert_eq!(moved, DifferentialForm::term(-Coefficient::sin(&c, 0, 1), &[0]).unwrap());
}

#[test]
fn angular_projector_commutes_with_d() {
    let cone = ConeSpace::new(standard_circle()).unwrap();
    let mut r = FormSampler::new(8, 3);
    for k in [2, 3, 4] {
        let rot = AngularRotation::new(k).unwrap();
        for _ in 0..30 {
            let p = r.degree(cone.chart());
            let mut a = DifferentialForm::zero(cone.chart(), p);
            let bases: &[&[usize]] = match p {
                0 => &[&[]],
                1 => &[&[0], &[1]],
                _ => &[&[0, 1]],
            };
            for b in bases {
                a = a.add(&DifferentialForm::term(r.trig_polynomial(cone.chart(), 5), b).unwrap()).unwrap();
            }
            let pa = rot.average(&a);
            assert_eq!(rot.average(&pa), pa);
            assert!(rot.is_invariant(&pa));
            assert_eq!(rot.average(&a.d()), pa.d());
        }
    }
}

#[test]
fn metric_checks() {
    let zero = metric_c1_check(&MetricPerturbation::zero(), 100, 1e-6).unwrap();
    assert_eq!(zero.max_deviation, 0.0);
    assert!(zero.pass);

    let m = MetricPerturbation::quadratic(trig(&[(0, 1, 10), (2, 1, 20)]), trig(&[(1, 1, 30)]), trig(&[(3, -1, 10)]));
    let r = metric_c1_check(&m, 10_000, 1e-6).unwrap();
    assert!(r.pass, "{r:?}");
    assert!(r.max_deviation > 0.0);
    assert!(!metric_c1_check(&m, 1000, 0.0).unwrap().pass);

    let control = metric_c1_check(&m.clone().with_radial_power(1), 1000, 1e-6).unwrap();
    assert!(!control.pass);
    assert!(control.max_deviation > 1e-3);

    assert!(metric_c1_check(&m, 0, 1e-6).is_err());
    assert!(metric_c1_check(&m, 10, -1.0).is_err());
}
