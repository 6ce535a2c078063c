//! The functions `H` and `F` of a cusp collection, side by side.

use cuspidal::CuspCollection;

fn main() -> cuspidal::Result<()> {
    let cusps = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "[3] [2_2] [2]".into());
    let c = CuspCollection::parse(&cusps)?;
    let top = c.top_index();
    let h = c.h_fn();
    let f = c.f_values(top);

    println!("{c}: nu = {}, delta = {}", c.nu(), c.delta());
    println!("{:>4} {:>8} {:>6} {:>6}", "k", "H(k+1)", "F(k)", "diff");
    for k in 0..=top as i64 {
        let (hk, fk) = (h.value(k + 1), f.get(k));
        println!("{k:>4} {hk:>8} {fk:>6} {:>6}", hk - fk);
    }
    println!(
        "Alexander product {:?}",
        c.alexander_product().coeffs().values()
    );
    Ok(())
}
