// Limits of tangent planes at the apex of the cone over the latitude `½`.

use conex::cone::{latitude, ConeSpace};
use conex::exterior::scalar::rat;
use conex::smooth::{nash_cone_membership, NASH_TOLERANCE};

pub fn run_example() -> conex::Result<()> {
    let cone = ConeSpace::new(latitude(rat(1, 2))?)?;
    let r = 0.75f64.sqrt();
    for (name, v) in [
        ("cone ray", [r, 0.0, 0.5]),
        ("circle tangent", [0.0, 1.0, 0.0]),
        ("steep", [0.3, 0.0, 1.0]),
        ("shallow", [1.0, 0.2, 0.4]),
        ("axis", [0.0, 0.0, 1.0]),
    ] {
        let n = nash_cone_membership(&cone, v, NASH_TOLERANCE)?;
        println!("{name} {v:?}: member = {}, distance = {:.3e}", n.member, n.distance);
    }
    assert!(!nash_cone_membership(&cone, [0.0, 0.0, 1.0], NASH_TOLERANCE)?.member);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("{e}");
        std::process::exit(1);
    }
}
