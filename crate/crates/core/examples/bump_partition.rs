// A bump at the apex and a partition of unity for a radial cover.

use conex::smooth::{bump_on_cone, partition_of_unity, Patch};
use conex::Error;

pub fn run_example() -> conex::Result<()> {
    let f = bump_on_cone(0.5)?;
    for t in [0.0, 0.1, 0.15, 0.19, 0.25, 0.5] {
        println!("f({t}) = {:.6}", f.profile(t));
    }
    let cover = [
        Patch::Apex { radius: 0.4 },
        Patch::Annulus { inner: 0.3, outer: 0.7 },
        Patch::Annulus { inner: 0.6, outer: 1.0 },
    ];
    let p = partition_of_unity(&cover, 1.0)?;
    for t in [0.0, 0.35, 0.65, 0.9] {
        let v = p.values(t);
        println!("t = {t}: {v:.4?}, sum = {}", v.iter().sum::<f64>());
    }
    let gap = [Patch::Apex { radius: 0.3 }, Patch::Annulus { inner: 0.4, outer: 1.0 }];
    match partition_of_unity(&gap, 1.0) {
        Err(Error::Uncovered { radius }) => println!("gap detected at t = {radius}"),
        other => panic!("expected a gap, got {other:?}"),
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
