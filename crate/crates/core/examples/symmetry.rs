use kfermat::symmetry::{
    cyclotomic_coprime, eq_symkn_check, gcd_kprime_analysis, verify_sym_identity, HGroup, H_NAMES,
};

fn main() -> kfermat::Result<()> {
    let h = HGroup::build()?;
    println!("Cayley table of H (row then column):");
    for row in &h.cayley {
        let names: Vec<String> = row.iter().map(|&k| format!("{:>9}", H_NAMES[k])).collect();
        println!("  {}", names.join(""));
    }
    let orders: Vec<usize> = (0..6).map(|i| h.order_of(i)).collect();
    println!("orders {orders:?}, abelian {}", h.is_abelian());

    for n in [12u32, 13, 20, 25] {
        let g = gcd_kprime_analysis(n)?;
        println!(
            "n = {n:>2}: K_n(x) = K_n(1-x) {}, K~_n invariant {}, coprime to Phi_d (d <= 105) {}, gcd(K_n, K_n') = {}",
            eq_symkn_check(n)?,
            verify_sym_identity(n)?,
            cyclotomic_coprime(n, 105)?,
            g.g
        );
    }
    Ok(())
}
