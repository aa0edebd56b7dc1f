//! Parsing, arithmetic and substitution in a multigraded ring.

use qfano::poly::{parse_poly, Field, Ring};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let r = Ring::new(&["x", "y", "z"], vec![vec![1, 2, 3]], Field::Rationals)?;
    let f = parse_poly(&r, "x^3*z - y^3 + 3*x^2*y^2")?;
    let g = parse_poly(&r, "x*y - z")?;
    println!("f = {}", f.render());
    println!("f*g = {}", (&f * &g).render());
    println!("weighted parts of f: {:?}", f.weighted_parts_by(r.grading(0)?).iter().map(|(d, p)| (*d, p.render())).collect::<Vec<_>>());

    let h = f.subs_named(&[("z", parse_poly(&r, "x*y")?)])?;
    println!("f(z = xy) = {}", h.render());

    let fp = Ring::plain(&["x", "y"]).with_field(Field::prime(101)?)?;
    let p = parse_poly(&fp, "(x + y)^101")?;
    println!("(x + y)^101 mod 101 = {}", p.render());
    Ok(())
}
