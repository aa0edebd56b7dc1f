//! Both torus actions of a family: chambers, wall crossings and quotient weights.

use qfano::data::{family, weight_matrix, Stage};
use qfano::vgit::{chamber_scan, crossing_type, quotient_weights};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let id: u32 = std::env::args().nth(1).map(|s| s.parse()).transpose()?.unwrap_or(501);
    let fam = family(id)?;
    for stage in [Stage::One, Stage::Two] {
        let w = weight_matrix(stage, &fam)?;
        let scan = chamber_scan(&w)?;
        println!("{:?}\n{}\n{}", stage, w.render(), scan.render());
        for k in scan.walls() {
            let c = crossing_type(&w, &scan, k, &[])?;
            println!("wall {}: {:?} {}", k, c.kind, c.type_string());
        }
    }
    let w = weight_matrix(Stage::Two, &fam)?;
    println!("weights at the s123 point: {:?}", quotient_weights(&w, "s123", &["w2", "s135"])?);
    Ok(())
}
