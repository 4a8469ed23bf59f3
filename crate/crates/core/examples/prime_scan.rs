use std::time::Instant;

use kfermat::certify::scan_primes;

fn main() -> kfermat::Result<()> {
    let bound = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(10_000);
    let jobs = std::thread::available_parallelism().map_or(1, |n| n.get());

    let start = Instant::now();
    let r = scan_primes(bound, jobs)?;
    println!(
        "odd primes below {bound}, {jobs} workers, {:.2?}",
        start.elapsed()
    );
    println!("  K_6 has no root mod p: {}", r.skipped.len());
    println!("  certified:             {}", r.certified.len());
    println!("  exceptions:            {:?}", r.exceptions);
    println!(
        "first certified: {:?}",
        &r.certified[..r.certified.len().min(12)]
    );
    Ok(())
}
