use kfermat::kfamily::k_tilde;
use kfermat::modp::{reduce, roots_modp, symmetric_reduction_trichotomy};
use kfermat::polycore::primes_in;

fn main() -> kfermat::Result<()> {
    let poly = k_tilde(12)?.poly;
    println!("K~_12 = {poly}");
    for p in primes_in(2, 40) {
        let f = reduce(&poly, p)?;
        let roots = if f.is_zero() {
            Vec::new()
        } else {
            roots_modp(&f)?
        };
        println!(
            "p = {p:>2}: {:<28} roots {roots:?}",
            format!("{:?}", symmetric_reduction_trichotomy(&poly, p)?)
        );
    }
    Ok(())
}
