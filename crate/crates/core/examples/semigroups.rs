//! Semigroups of plane branches: generators, gaps, Apéry sets and the
//! three equivalent descriptions of a cusp type.

use cuspidal::{MultSeq, NewtonPairs, Semigroup};

fn main() -> cuspidal::Result<()> {
    let s = Semigroup::from_generators(&[4, 6, 13])?;
    println!("semigroup   {s}");
    println!("gaps        {:?}", s.gaps());
    println!("conductor   {}  delta {}", s.conductor(), s.delta());
    println!("symmetric   {}", s.is_symmetric());

    let apery = s.apery_set(s.multiplicity())?;
    println!("Apery(m={})  {:?}", apery.modulus(), apery.by_residue());

    let ms = s.multseq()?;
    println!("multseq     {ms}");
    let np = NewtonPairs::new(vec![(2, 3), (2, 1)])?;
    println!(
        "newton      {np} -> generators {:?}",
        np.semigroup_generators()
    );
    assert_eq!(Semigroup::from_newton_pairs(&np)?, s);

    // blowing up strips one multiplicity off the front
    let mut t = Semigroup::from_multseq(&MultSeq::new(vec![6, 2, 2, 2])?)?;
    while !t.is_naturals() {
        println!("  {t:<24} m = {}", t.multiplicity());
        t = t.blowup()?;
    }
    Ok(())
}
