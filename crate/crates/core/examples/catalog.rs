//! The known series of rational cuspidal curves with three cusps, plus the
//! two sporadic quintics, and the eu difference on each member.

use cuspidal::criteria::{catalog_up_to, check_bl, expected_eu_difference, Candidate};

fn main() -> cuspidal::Result<()> {
    for e in catalog_up_to(10) {
        let c = e.collection();
        let (h0, hs) = c.eu_canonical(e.d)?;
        let bl = check_bl(&Candidate::new(c.clone(), e.d))?.pass;
        let cusps: Vec<String> = c.multseqs().iter().map(|m| m.to_string()).collect();
        println!(
            "{:<12} d={:<3} {:<28} bl={:<5} diff={:<4} expected={:?}",
            e.family.to_string(),
            e.d,
            cusps.join(" "),
            bl,
            h0 - hs,
            expected_eu_difference(&e),
        );
    }
    Ok(())
}
