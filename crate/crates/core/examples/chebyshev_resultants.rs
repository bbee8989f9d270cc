//! Resultants of Chebyshev-type families, including the pencil identity in t.

use walkmat::poly::{chebyshev_w4, conres_rhs, parse_poly_spec, resultant_in_t, sylvester_resultant, w4_sum, z_poly};
use walkmat::rational::{format_short, int, ratio};

fn main() {
    println!("Z_5 at tau=1/2: {}", z_poly(5, &ratio(1, 2)));
    println!("W_4:            {}", chebyshev_w4(4));

    println!("\nRes(W_m + t W_(m-1), W_0 + ... + W_(m-1)) at t = 3:");
    for m in 2..=7 {
        let f = &chebyshev_w4(m) + &chebyshev_w4(m - 1).scale(&int(3));
        println!("  m={m}: {}", format_short(&sylvester_resultant(&f, &w4_sum(m)).unwrap()));
    }

    println!("\nRes(Z_m + t Z_(m-1), sum Z_k) as a polynomial in t:");
    for tau in [int(0), int(1), ratio(1, 2)] {
        for m in 2..=5 {
            let lhs = resultant_in_t(m, &tau).unwrap();
            let mark = if lhs == conres_rhs(m, &tau) { "closed form" } else { "differs from closed form" };
            println!("  tau={} m={m}: {}   ({mark})", format_short(&tau), lhs.to_string().replace('x', "t"));
        }
    }

    let f = parse_poly_spec("Z:m=4,tau=2 + t*Z:m=3,tau=2", Some(&ratio(-1, 2))).unwrap();
    let g = parse_poly_spec("Zsum:m=4,tau=2", None).unwrap();
    println!("\nspec strings: Res({f}, {g}) = {}", format_short(&sylvester_resultant(&f, &g).unwrap()));
}
