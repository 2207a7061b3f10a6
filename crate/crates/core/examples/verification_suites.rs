//! Running the named verification sweeps from code, the same ones the
//! `verify` subcommand runs.

use weylfusion::filtration::{run_suite, Suite, SuiteConfig};
use weylfusion::Rank;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let config = SuiteConfig { max_mk: Some(2), rank: Some(Rank::new(2)?) };
    for suite in Suite::ALL {
        let reports = run_suite(suite, config)?;
        let failed = reports.iter().filter(|r| r.failed()).count();
        println!("{:<16}{} checks, {failed} failed", suite.name(), reports.len());
        assert_eq!(failed, 0);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("suite example");
}
