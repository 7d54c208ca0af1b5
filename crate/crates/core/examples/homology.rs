// Truncated de Rham and Brylinski homology on `ℝ²` and `ℝ⁴`, with and
// without a cyclic symmetry.

use conex::poisson::{build_stratified_complex, homology_ranks, GroupAction, Operator, SymplecticChart};

pub fn run_example() -> conex::Result<()> {
    for n in [1, 2] {
        let s = SymplecticChart::standard(n);
        for d in [4, 8] {
            let dr = homology_ranks(&build_stratified_complex(&s, d, Operator::DeRham, None)?)?;
            let de = homology_ranks(&build_stratified_complex(&s, d, Operator::Delta, None)?)?;
            println!("R{} D={d}: de Rham {dr:?}, delta {de:?}", 2 * n);
            let mut reversed = dr.clone();
            reversed.reverse();
            assert_eq!(de, reversed);
        }
    }
    let s = SymplecticChart::standard(1);
    for k in [2, 3, 4] {
        let g = GroupAction::cyclic(&s, k)?;
        let dr = homology_ranks(&build_stratified_complex(&s, 8, Operator::DeRham, Some(&g))?)?;
        let de = homology_ranks(&build_stratified_complex(&s, 8, Operator::Delta, Some(&g))?)?;
        println!("R2/Z{k} D=8: de Rham {dr:?}, delta {de:?}");
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
