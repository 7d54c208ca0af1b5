// Conical symplectic forms `ω̄ = t²ω̂ + t dt∧α` over the flat circle, the
// Hopf circle, the quadric link and perturbed latitude circles.

use conex::cone::{
    ambient_omega_pullback, liouville_identities, make_cone_symplectic, perturbed_circle, quadric_link,
    standard_circle, standard_sphere_contact, circle_chart, ConeSpace, Link,
};
use conex::exterior::scalar::{rat, real};
use conex::exterior::Coefficient;

fn show(link: Link) -> conex::Result<()> {
    let alpha = link.contact_form().expect("contact form").clone();
    let name = link.descriptor();
    let cone = ConeSpace::new(link)?;
    let csf = make_cone_symplectic(&cone, &alpha)?;
    let r = liouville_identities(&csf)?;
    println!("{name}: alpha = {alpha}, omega = {}", csf.total());
    println!("  {r:?}");
    assert!(r.all());
    if let Ok(w) = ambient_omega_pullback(&cone) {
        assert_eq!(&w, csf.total());
        println!("  equals the restriction of the ambient symplectic form");
    }
    Ok(())
}

pub fn run_example() -> conex::Result<()> {
    show(standard_circle())?;
    show(standard_sphere_contact(2).great_circle(&[rat(3, 5), rat(4, 5)])?)?;
    show(quadric_link(1)?)?;
    let c = circle_chart();
    show(perturbed_circle("cos 2phi / 4", Coefficient::cos(&c, 0, 2).scale(&real(rat(1, 4))))?)?;
    show(perturbed_circle("sin phi / 3", Coefficient::sin(&c, 0, 1).scale(&real(rat(1, 3))))?)?;
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("{e}");
        std::process::exit(1);
    }
}
