//! Explicit eigenpairs of A_tau(G o P_m) from those of A_tau(G).

use walkmat::harness::{eigenvector_residual, named_graph, spectrum_deviation};
use walkmat::rational::{int, to_f64};
use walkmat::spectral::{mao_walk_det, MuTable, SpectralData};
use walkmat::{det_exact, walk_matrix};

fn main() {
    let g = named_graph("asym6").unwrap();
    let tau = int(1);
    let spec = SpectralData::of_graph(&g, &tau).unwrap();
    println!("Q(G) eigenvalues: {:.6?}", spec.lambda);

    let m = 3;
    let table = MuTable::new(&spec, m);
    for (lam, mus) in spec.lambda.iter().zip(&table.mu) {
        println!("  lambda={lam:>9.5} -> mu = {mus:.5?}");
    }
    println!("max ||A eta - mu eta|| = {:.2e}", eigenvector_residual(&g, m, &tau).unwrap());
    println!("max |mu - eig(A_tau(G o P_m))| = {:.2e}", spectrum_deviation(&g, m, &tau).unwrap());

    let exact = det_exact(&walk_matrix(&g.a_tau(&tau)).unwrap()).unwrap();
    println!("\ndet W_Q(G): exact {}, from eigen data {:.6}", exact, mao_walk_det(&spec));
    println!("relative gap {:.2e}", (mao_walk_det(&spec).abs() - to_f64(&exact).abs()).abs() / to_f64(&exact).abs());
}
