//! Brute-force lattice cohomology on a weighted rectangle, compared with
//! the closed formulas.

use cuspidal::cubical::{self, DEFAULT_POINT_CAP};
use cuspidal::CuspCollection;

fn main() -> cuspidal::Result<()> {
    let c = CuspCollection::parse("[3] [2_2]")?;
    for r in cubical::verify_sweep(&c, &[0, 1], DEFAULT_POINT_CAP)? {
        println!(
            "j={:<2} eu0 {:>3}/{:<3} eu* {:>3}/{:<3} b1 {:<2} {}",
            r.j,
            r.oracle_eu_h0,
            r.expected_eu_h0,
            r.oracle_eu_hstar,
            r.expected_eu_hstar,
            r.h1_total,
            if r.pass { "ok" } else { "MISMATCH" },
        );
    }
    let o = cubical::oracle_eu(&c, 2, 0, DEFAULT_POINT_CAP)?;
    print!("{}", o.table.to_tsv());
    Ok(())
}
