//! Reid-Tai screening of cyclic quotients and recognition of ordinary cA points.

use qfano::poly::{parse_poly, Field};
use qfano::singularity::{classify_ca, germ_ring, quadratic_rank, reid_tai};
use qfano::vgit::CyclicQuotientType;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for (r, w) in [(5, vec![1, 1, 4]), (5, vec![1, 2, 3]), (7, vec![1, 2, 4]), (8, vec![1, 1, 7]), (3, vec![1, 1, 1])] {
        let t = CyclicQuotientType::new(r, &w);
        println!("{}: {:?}", t, reid_tai(&t)?);
    }

    let r = germ_ring(["x", "y", "z", "w"], Field::Rationals)?;
    let f = parse_poly(&r, "x*y + z^4 + w^4 + z^2*w^2 + x^3")?;
    println!("rank of the quadratic part: {}", quadratic_rank(&f, &["x", "y", "z", "w"])?);
    let c = classify_ca(&f, ("x", "y"), ("z", "w"), (2, 2))?;
    println!("{}: {:?}, leading form {}", f.render(), c.verdict, c.leading_form.render());
    let g = parse_poly(&r, "x*y + (z + w)^2*(z - w)^2")?;
    println!("{}: {:?}", g.render(), classify_ca(&g, ("x", "y"), ("z", "w"), (2, 2))?.verdict);
    Ok(())
}
