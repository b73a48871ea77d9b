use splitheight::{ck_interval, ck_lower_certify, int_poly_from_desc, parse_field, DEFAULT_PRECISION};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let k = parse_field("Q(sqrt(-2))")?;
    let base = int_poly_from_desc(&[1, 0, 1, 0, -2]);
    let certs = ck_lower_certify(&base, k, 64, DEFAULT_PRECISION)?;
    for c in certs.iter().filter(|c| c.j.is_power_of_two()) {
        println!("j = {:2}  C_K >= {:.6}  trend {:.6}", c.j, c.cert_value, c.height_trend);
    }
    let iv = ck_interval(k, Some(2.0))?;
    println!("known: {:.6} <= C_K <= {:.6}", iv.lower, iv.upper);
    Ok(())
}
