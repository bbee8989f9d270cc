//! Fraction-free determinants and characteristic polynomials.

use walkmat::rational::{format_short, ratio};
use walkmat::{charpoly_exact, det_exact, walk_matrix, ExactMatrix, Graph};

fn main() {
    let m = ExactMatrix::from_fn(3, 3, |i, j| ratio((i * 3 + j) as i64 - 4, (i + 1) as i64));
    print!("M =\n{}", m.to_dump());
    println!("det M = {}", format_short(&det_exact(&m).unwrap()));
    println!("charpoly M = {}", charpoly_exact(&m).unwrap());

    let q = Graph::path(3).signless_laplacian();
    let w = walk_matrix(&q).unwrap();
    print!("\nW_Q(P_3) =\n{}", w.to_dump());
    println!("det W_Q(P_3) = {}", format_short(&det_exact(&w).unwrap()));
}
