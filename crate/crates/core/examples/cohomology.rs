//! Normalized Euler characteristics of the lattice cohomology of the
//! surgery manifold, one row per Spin^c structure.

use cuspidal::CuspCollection;

fn main() -> cuspidal::Result<()> {
    let c = CuspCollection::parse("[6] [2_4] [2_2]")?;
    let d = 8;
    println!("{:>3} {:>6} {:>6}", "a", "eu H0", "eu H*");
    for r in c.eu_all_spinc(d)? {
        println!("{:>3} {:>6} {:>6}", r.a, r.eu_h0, r.eu_hstar);
    }
    let (h0, hs) = c.eu_canonical(d)?;
    println!(
        "canonical: {h0} vs {hs}, tetrahedral {}",
        cuspidal::invariants::tetrahedral(d)
    );
    Ok(())
}
