use kfermat::kfamily::{galois_bound, k_tilde};

fn main() -> kfermat::Result<()> {
    let upto = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(15);

    println!(
        "{:>3}  {:>3}  {:>9}  {:>7}  K~_n",
        "n", "d_n", "x,x-1,cyc", "content"
    );
    for n in 2..=upto {
        let r = k_tilde(n)?;
        let l = &r.ledger;
        println!(
            "{n:>3}  {:>3}  {:>9}  {:>7}  {}",
            r.d_n,
            format!("{},{},{}", l.mult_x, l.mult_xm1, l.mult_cyc),
            l.content,
            r.poly
        );
    }

    let n = upto.max(6);
    match galois_bound(n) {
        Ok(b) => println!("\nGalois group bound for K~_{n}: {b}"),
        Err(_) => println!("\nK~_{n} is constant"),
    }
    Ok(())
}
