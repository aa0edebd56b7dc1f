//! Gröbner bases: the twisted cubic by elimination, ideal membership and dimension.

use qfano::groebner::{dim, eliminate, GbConfig, GroebnerBasis, MonomialOrder};
use qfano::poly::{parse_poly, Ring};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let r = Ring::plain(&["t", "x", "y", "z"]);
    let p = |s: &str| parse_poly(&r, s);
    let cfg = GbConfig::default();
    let gens = vec![p("x - t")?, p("y - t^2")?, p("z - t^3")?];
    let cubic = eliminate(&r, &gens, &[0], &cfg)?;
    println!("twisted cubic:");
    for g in &cubic {
        println!("  {}", g.render());
    }

    let gb = GroebnerBasis::compute(&r, &cubic, &MonomialOrder::Grevlex, &cfg)?;
    println!("reduced basis has {} elements, certificate {}", gb.len(), gb.certificate());
    let q = p("x^2*z - y^2*x")?;
    println!("{} in ideal: {}", q.render(), gb.reduces_to_zero(&q)?);
    println!("normal form of x*y*z: {}", gb.normal_form(&p("x*y*z")?)?.render());
    println!("affine dimension of the cone: {}", dim(&r, &cubic, &cfg)?);
    Ok(())
}
