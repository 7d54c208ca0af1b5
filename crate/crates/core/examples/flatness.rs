// Tangent cones, flat directions and links with a prescribed number of
// flat rays.

use conex::cone::{circle_chart, latitude, perturbed_circle, ConeSpace, Link};
use conex::exterior::scalar::{rat, real};
use conex::exterior::Coefficient;
use conex::smooth::{construct_flatness_link, degree_of_flatness, tangent_cone};

fn degree(link: Link) -> conex::Result<usize> {
    let tc = tangent_cone(&ConeSpace::new(link)?)?;
    println!("  flat locus {:?}", tc.flat);
    Ok(degree_of_flatness(&tc))
}

pub fn run_example() -> conex::Result<()> {
    let c = circle_chart();
    let wave = perturbed_circle("z = cos(2phi)/4", Coefficient::cos(&c, 0, 2).scale(&real(rat(1, 4))))?;
    for (name, link, expected) in [
        ("latitude 1/2", latitude(rat(1, 2))?, 0),
        ("equator", latitude(rat(0, 1))?, 1),
        ("z = cos(2phi)/4", wave, 4),
    ] {
        let d = degree(link)?;
        println!("{name}: degree of flatness {d}");
        assert_eq!(d, expected);
    }
    for k in 0..=3 {
        let link = construct_flatness_link(k)?;
        let d = degree(link.clone())?;
        println!("{}: height {}, degree {d}", link.name(), link.profile()[2]);
        assert_eq!(d, 2 * k as usize);
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
