use kfermat::certify::{certify_eisenstein3, certify_half, certify_p_power, certify_two_power};
use kfermat::RatScalar;

fn main() -> kfermat::Result<()> {
    let certs = [
        certify_half(&RatScalar::new(1, 2)?, 11)?,
        certify_eisenstein3(5)?,
        certify_two_power(4)?,
        certify_two_power(3)?,
        certify_p_power(11, 2)?,
        certify_p_power(19, 1)?,
    ];
    for c in &certs {
        let params: Vec<String> = c.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
        println!(
            "{:<18} {:<12} verdict {:<5} recheck {}",
            format!("{:?}", c.kind),
            params.join(","),
            c.verdict,
            c.recheck()?
        );
    }

    println!("\nevidence for p = 11:");
    println!("{}", kfermat::report::to_json(&certs[4].evidence));
    Ok(())
}
