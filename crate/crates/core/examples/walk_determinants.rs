//! Walk determinants of an asymmetric graph and of its rooted path products.

use walkmat::harness::{named_graph, walk_determinants};
use walkmat::rational::{format_pretty, int, ratio};

fn main() {
    let g = named_graph("asym6").unwrap();
    println!("G = {:?}", g);
    for (label, tau) in [("A", int(0)), ("Q", int(1)), ("A_(3/7)", ratio(3, 7))] {
        println!("\n{label}:");
        for m in 2..=4 {
            let d = walk_determinants(&g, m, &tau).unwrap();
            let sign = if d.det_walk_product == d.rhs {
                "+"
            } else if d.det_walk_product == -d.rhs.clone() {
                "-"
            } else {
                "?"
            };
            println!(
                "  m={m}: det W(G o P_m) = {}  =  {sign} det(A_tau)^{} det(mid)^{} det(W_tau)^{m}",
                format_pretty(&d.det_walk_product),
                m / 2,
                (m - 1) / 2,
            );
        }
        let d = walk_determinants(&g, 2, &tau).unwrap();
        println!(
            "  det {label} = {}, det mid = {}, det W = {}",
            format_pretty(&d.det_a_tau),
            format_pretty(&d.det_middle),
            format_pretty(&d.det_walk)
        );
    }
}
