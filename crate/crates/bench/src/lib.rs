//! Shared inputs for the criterion benches.

use qcenter::{ChevalleyBasis, RootSystem};

pub fn setup(letter: &str, rank: usize) -> (RootSystem, ChevalleyBasis) {
    let rs = RootSystem::parse(letter, rank).expect("supported type");
    let b = ChevalleyBasis::new(&rs).expect("Chevalley basis");
    (rs, b)
}
