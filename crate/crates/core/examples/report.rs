// Building a run configuration in code and printing its JSON report.

use conex::poisson::Operator;
use conex::report::{run, ChartSel, Command, LinkSel, RunConfig};

pub fn run_example() -> conex::Result<()> {
    let homology = RunConfig::new(Command::Homology { chart: ChartSel(2), trunc: 8, operator: Operator::Delta, group: 1 });
    let report = run(&homology)?;
    print!("{}", report.summary());
    assert_eq!(report.exit_code(), 0);

    let mut cone = RunConfig::new(Command::ConeReport { link: LinkSel::FlatPairs(2), nash_samples: 2 });
    cone.seed = 1;
    let report = run(&cone)?;
    print!("{}", report.to_json());
    assert_eq!(report.result["flatness"]["degree"], 4);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("{e}");
        std::process::exit(1);
    }
}
