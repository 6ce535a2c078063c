//! Regrouping one multiset of multiplicities into different cusp
//! collections leaves `H` unchanged but can move `F`.

use cuspidal::criteria::stability;
use cuspidal::CuspCollection;

fn main() -> cuspidal::Result<()> {
    let c = CuspCollection::parse("[2_3] [2] [2] [2]")?;
    let rep = stability(&c, None, None)?;
    println!("multiset {:?}, d = {:?}", rep.multiset, rep.d);
    for row in &rep.regroupings {
        println!("  {:<28} bl={:?}", row.cusps.join(" "), row.bl_pass);
        println!("    eu0 {:?}\n    eu* {:?}", row.eu_h0, row.eu_hstar);
    }
    println!(
        "H equal {}, eu0 constant {:?}, eu* constant {:?}",
        rep.h_equal, rep.eu_h0_constant, rep.eu_hstar_constant
    );
    Ok(())
}
