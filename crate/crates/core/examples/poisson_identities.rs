// Poisson bracket, the boundary `δ = i(G)d − d i(G)` and the symplectic
// star on `ℝ⁴`, followed by the seeded exact identity suite.

use conex::exterior::{Coefficient, DifferentialForm};
use conex::poisson::SymplecticChart;
use conex::report::{identity_suite, Status};

pub fn run_example() -> conex::Result<()> {
    let s = SymplecticChart::standard(2);
    let c = s.chart();
    let (x1, y1) = (Coefficient::var(c, 0), Coefficient::var(c, 1));
    println!("{{x1, y1}} = {}", s.bracket(&x1, &y1)?);
    println!("omega = {}", s.omega());

    let a = DifferentialForm::term(&x1 * &x1, &[0, 1])?;
    let d = s.delta(&a)?;
    println!("delta({a}) = {d}");
    assert!(s.delta(&d)?.is_zero());
    println!("*({a}) = {}", s.star(&a)?);
    assert!(s.star(&s.star(&a)?)?.sub(&a)?.is_zero());
    assert!(s.star_delta_identity_check(&a)?);

    for ch in [1, 2] {
        let checks = identity_suite(&SymplecticChart::standard(ch), 6, 200, 0)?;
        for k in &checks {
            println!("R{}: {} {:?}", 2 * ch, k.name, k.status);
            assert_eq!(k.status, Status::Pass);
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("{e}");
        std::process::exit(1);
    }
}
