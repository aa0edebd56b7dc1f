//! The family catalogue: weights, section templates and a random instance.

use qfano::data::{family, family_ids};
use qfano::poly::Field;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for id in family_ids() {
        let f = family(id)?;
        println!("family {} ({:?}, d = {}), z = {}, {} coordinates", f.id, f.kind, f.d, f.z(), f.coordinates().len());
    }
    let f = family(550)?;
    let ring = f.coefficient_ring(Field::Rationals)?;
    for (target, t) in f.templates(&ring)? {
        println!("{} = {}", target, t.render());
    }
    let inst = f.sections(7);
    for (target, p) in inst.substitution(&f, &f.ring(Field::Rationals))? {
        println!("seed 7: {} = {}", target, p.render());
    }
    Ok(())
}
