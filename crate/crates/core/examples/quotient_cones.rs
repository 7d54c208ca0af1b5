// `ℂ/Z_k` as the cone over a circle: the rotation preserves `α = dφ`, and
// averaging over the group commutes with `d`.

use conex::cone::{group_quotient_cone, AngularRotation};
use conex::exterior::{Coefficient, DifferentialForm};

pub fn run_example() -> conex::Result<()> {
    for k in [2, 3, 4, 6] {
        let q = group_quotient_cone(k)?;
        println!("Z{k}: contact form invariant = {}", q.contact_invariant()?);
        assert!(q.contact_invariant()?);
    }
    let cone = group_quotient_cone(3)?.cone;
    let c = cone.chart();
    let t = Coefficient::var(c, 0);
    let f = &(&t * &Coefficient::cos(c, 1, 3)) + &(&t.pow(2) * &Coefficient::sin(c, 1, 2));
    let a = DifferentialForm::term(f, &[1])?;
    let rot = AngularRotation::new(3)?;
    let avg = rot.average(&a);
    println!("a = {a}\naverage = {avg}");
    assert!(rot.is_invariant(&avg));
    assert_eq!(rot.average(&a.d()), avg.d());
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("{e}");
        std::process::exit(1);
    }
}
