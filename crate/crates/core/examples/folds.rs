//! Folds a cointerval graph down to a single edge and replays the
//! certificate.

use cellres::complex::{contractibility_certificate, replay_certificate};
use cellres::hypergraph::Hypergraph;

fn main() -> cellres::Result<()> {
    let h = Hypergraph::on_range(2, 5, [[1, 2], [1, 3], [1, 4], [1, 5], [2, 4], [2, 5], [3, 5]])?;
    let steps = contractibility_certificate(&h)?;
    for s in &steps {
        println!("fold {} onto {} along {:?}", s.j, s.i, s.path);
    }
    print!("{}", replay_certificate(&h, &steps)?.to_text());
    Ok(())
}
