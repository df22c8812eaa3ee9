//! Worst observed paths-per-vertex ratio of `path_decompose` on random graphs.
//!
//! Run with `cargo run --release --example decomposition_ratio`.

use seppath::decompose::path_decompose;
use seppath::generators::gnp;

fn main() {
    println!("p,worst_ratio,at_n");
    for p in [0.02, 0.05, 0.1, 0.3, 0.5, 0.7, 0.9, 1.0] {
        let mut worst = (0.0f64, 0usize);
        for seed in 0..40u64 {
            let n = 5 + (seed as usize * 37) % 196;
            let g = gnp(n, p, seed).unwrap();
            let ratio = path_decompose(&g).unwrap().len() as f64 / n as f64;
            if ratio > worst.0 {
                worst = (ratio, n);
            }
        }
        println!("{p},{:.3},{}", worst.0, worst.1);
    }
}
