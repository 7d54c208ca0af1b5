// Forms on the plane: wedge, `d`, contraction, Lie derivative and the
// polar pullback `(t, φ) ↦ (t cos φ, t sin φ)`.

use conex::exterior::scalar::scalar;
use conex::exterior::{Chart, ChartMap, Coefficient, DifferentialForm, VectorField};

pub fn run_example() -> conex::Result<()> {
    let c = Chart::cartesian("R2", &["x", "y"])?;
    let (x, y) = (Coefficient::var(&c, 0), Coefficient::var(&c, 1));
    let a = DifferentialForm::term(&x * &y, &[0])?.add(&DifferentialForm::term(x.scale(&scalar(-3, 2)), &[1])?)?;
    println!("a = {a}");
    println!("da = {}", a.d());
    assert!(a.d().d().is_zero());

    let area = DifferentialForm::basis(&c, &[0, 1]);
    let euler = VectorField::new(&c, vec![x.clone(), y.clone()])?;
    println!("i_E(dx^dy) = {}", area.interior(&euler)?);
    let lie = area.lie_derivative(&euler)?;
    println!("L_E(dx^dy) = {lie}");
    assert_eq!(lie, area.scale(&scalar(2, 1)));

    let polar = ChartMap::polar(&c)?;
    let pulled = polar.pullback(&area)?;
    println!("polar pullback of dx^dy = {pulled}");
    assert_eq!(pulled, DifferentialForm::term(Coefficient::var(polar.source(), 0), &[0, 1])?);
    assert_eq!(polar.pullback(&a)?.d(), polar.pullback(&a.d())?);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("{e}");
        std::process::exit(1);
    }
}
