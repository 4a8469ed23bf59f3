use kfermat::disc::{critical_points_check, disc_report, odd_permutation_check};

fn main() -> kfermat::Result<()> {
    println!(
        "{:>2}  {:>12}  {:>36}  {:>9}  odd perm  crit",
        "m", "disc sign", "|S|", "gap"
    );
    for m in 1..=4 {
        let r = disc_report(m)?;
        println!(
            "{m:>2}  {:>12}  {:>36}  {:>9.1e}  {:<8}  {}",
            if r.disc < 0.into() {
                "negative"
            } else {
                "positive"
            },
            r.s_abs,
            r.relative_gap,
            odd_permutation_check(m)?,
            critical_points_check(m)?
        );
    }
    println!("disc(K_6) = {}", disc_report(1)?.disc);
    Ok(())
}
