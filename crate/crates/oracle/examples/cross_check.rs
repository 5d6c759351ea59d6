//! Run the brute-force verification suites.
//!
//!     cargo run --release -p stiefel-oracle --example cross_check -- 24

use stiefel_oracle::verify::{self, Suite};
use stiefel_oracle::BruteForce;

fn main() {
    let max_n = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(16);
    let report = verify::run(&BruteForce::default(), max_n, &Suite::ALL);
    print!("{report}");
    if !report.passed() {
        std::process::exit(2);
    }
}
