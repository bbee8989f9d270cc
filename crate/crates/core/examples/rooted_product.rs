//! Build G o P_m two ways and check the characteristic polynomial factorization.

use walkmat::harness::lem28_substituted;
use walkmat::rational::ratio;
use walkmat::{charpoly_exact, kron_assemble_a_tau_product, Graph};

fn main() {
    let g = Graph::paw();
    let tau = ratio(1, 2);
    for m in 1..=4 {
        let direct = g.rooted_product_path(m).unwrap();
        let a = direct.a_tau(&tau);
        let kron = kron_assemble_a_tau_product(&g, m, &tau).unwrap();
        let phi = charpoly_exact(&a).unwrap();
        let factored = lem28_substituted(&g, m, &tau).unwrap();
        println!(
            "m={m}: {} vertices, {} edges, Kronecker form {}, factorization {}",
            direct.order(),
            direct.edge_count(),
            if kron == a { "matches" } else { "DIFFERS" },
            if factored == phi { "matches" } else { "DIFFERS" },
        );
    }
    println!("\ncharpoly of A_(1/2)(paw o P_2):\n  {}", charpoly_exact(&kron_assemble_a_tau_product(&g, 2, &tau).unwrap()).unwrap());
}
