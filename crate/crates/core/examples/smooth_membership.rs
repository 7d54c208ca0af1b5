// Which functions are smooth on the cone over a latitude circle: the
// closed-form criterion against the exact span of generator monomials.

use conex::exterior::scalar::{fmt_rational, rat};
use conex::smooth::{membership, ConeFunction, EuclideanStructure, GeneratorSpan};

pub fn run_example() -> conex::Result<()> {
    for (n, d) in [(1, 2), (0, 1)] {
        let e = EuclideanStructure::latitude(rat(n, d))?;
        let span = GeneratorSpan::new(&e, 8);
        let ranks: Vec<usize> = (0..=8).map(|a| span.rank(a)).collect();
        println!("theta = {}: span dimensions per radial degree {ranks:?}", fmt_rational(&rat(n, d)));
        for text in ["1:0:1", "2:0:1", "3:2:1", "2:2:1/3, 1:1:-1"] {
            let f = ConeFunction::parse(text)?;
            let smooth = membership(&f, &e)?;
            assert_eq!(smooth, span.contains(&f)?);
            println!("  {f}: {}", if smooth { "smooth" } else { "not smooth" });
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
