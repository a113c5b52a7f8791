//! Tries every labeling of the net complement and checks whether `X_G`
//! supports a resolution.

use cellres::casestudy::{counterexample_search, net_complement};
use cellres::homology::FieldSpec;
use cellres::resolution::{betti_hochster, is_d_linear};

fn main() -> cellres::Result<()> {
    let g = net_complement();
    print!("{}", g.to_text());
    let linear = is_d_linear(&betti_hochster(&g, FieldSpec::GF2)?, 2);
    println!("2-linear resolution: {}", if linear { "yes" } else { "no" });
    print!("{}", counterexample_search(&g)?);
    Ok(())
}
