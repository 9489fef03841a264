//! Prints the B2 regular-block diamond and the entries that are not
//! multiples of the trivial representation.

use qcenter::{hodge_diamond, ChevalleyBasis, RootSystem};

fn main() -> qcenter::Result<()> {
    let rs = RootSystem::parse("B", 2)?;
    let basis = ChevalleyBasis::new(&rs)?;
    let d = hodge_diamond(&rs, &basis, &[])?;
    for (k, row) in d.grid().iter().enumerate() {
        println!("j+i={:<2} {row:?}", 2 * k);
    }
    for e in d.entries.iter().filter(|e| !e.only_trivial()) {
        println!("h^{{{},{}}} = {}", e.i, e.j, e.format_isotypes());
    }
    println!("total {}", d.total);
    Ok(())
}
