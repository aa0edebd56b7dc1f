pub mod data;
pub mod groebner;
pub mod poly;
pub mod singularity;
pub mod vgit;
pub mod harness;
