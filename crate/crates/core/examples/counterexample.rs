//! The degree 8 candidate with cusps [6], [2_4], [2_2]: it passes the
//! semigroup-distribution test and fails the original inequality on `F`.

use cuspidal::criteria::{
    check_bezout, check_bl, check_conj_index, check_conj_original, Candidate,
};
use cuspidal::CuspCollection;

fn main() -> cuspidal::Result<()> {
    let cand = Candidate::new(CuspCollection::parse("[6] [2_4] [2_2]")?, 8);
    for report in [
        check_bezout(&cand)?,
        check_bl(&cand)?,
        check_conj_original(&cand)?,
        check_conj_index(&cand)?,
    ] {
        let verdict = if report.pass { "PASS" } else { "FAIL" };
        println!("{:?}: {verdict}", report.criterion);
        for row in report.rows.iter().filter(|r| !r.pass) {
            println!("  j = {:?}: {} > {}", row.j, row.lhs, row.rhs);
        }
        if let Some(diff) = report.difference {
            println!("  eu difference {diff}");
        }
    }
    Ok(())
}
