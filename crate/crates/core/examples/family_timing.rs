use std::time::Instant;

use longface::battery::{run_battery, Family, Level, VerifyConfig};

fn main() {
    let m: usize = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(4);
    for family in Family::ALL {
        let start = Instant::now();
        let s = run_battery(&VerifyConfig::new(m, Level::Exhaustive).families(&[family])).unwrap();
        println!(
            "{family:<24} {:>8.2?} failures {}",
            start.elapsed(),
            s.failures()
        );
    }
}
