//! The key variety: maximal minors of the matrix M and the eight that generate their ideal.

use qfano::data::{f_bar_pi, hyp_ring, m_ring, matrix_m, minor_name, minor_triples, minors_d};
use qfano::groebner::{ideal_equal, GbConfig};
use qfano::poly::Field;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let r = m_ring(Field::Rationals);
    let m = matrix_m(&r)?;
    for i in 0..m.rows() {
        let row: Vec<String> = (0..m.cols()).map(|j| m.get(i, j).render()).collect();
        println!("[ {} ]", row.join(", "));
    }
    let all: Vec<_> = m.minors(3).into_iter().map(|(_, _, p)| p).collect();
    let listed = minors_d(&r)?;
    for (n, d) in &listed {
        println!("{} = {}", n, d.render());
    }
    let listed: Vec<_> = listed.into_iter().map(|(_, p)| p).collect();
    let same = ideal_equal(&r, &all, &listed, &GbConfig::default())?;
    println!("{} maximal minors ({}, ...); same ideal as the listed eight: {}", all.len(), minor_name(minor_triples()[0]), same);

    let f = f_bar_pi(&hyp_ring(Field::Rationals))?;
    println!("F has {} terms", f.terms().len());
    Ok(())
}
