// First derivatives of `g = δ + |x|² Q(θ)` at the apex of the flat cone,
// and the `|x|¹` negative control.

use std::collections::BTreeMap;

use conex::cone::{metric_c1_check, MetricPerturbation};
use conex::exterior::scalar::scalar;
use conex::trig_roots::TrigPoly;

fn cos_mode(b: i32, n: i64, d: i64) -> TrigPoly {
    let m: BTreeMap<i32, _> = if b == 0 {
        [(0, scalar(n, d))].into()
    } else {
        [(b, scalar(n, 2 * d)), (-b, scalar(n, 2 * d))].into()
    };
    TrigPoly::new(m).expect("real")
}

pub fn run_example() -> conex::Result<()> {
    let m = MetricPerturbation::quadratic(cos_mode(2, 1, 10), cos_mode(1, 1, 20), cos_mode(3, -1, 10));
    let ok = metric_c1_check(&m, 10_000, 1e-6)?;
    println!("quadratic: {ok:?}");
    assert!(ok.pass);
    let bad = metric_c1_check(&m.with_radial_power(1), 10_000, 1e-6)?;
    println!("linear: {bad:?}");
    assert!(!bad.pass);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("{e}");
        std::process::exit(1);
    }
}
