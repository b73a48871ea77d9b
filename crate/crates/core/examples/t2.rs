use splitheight::{t2_constant, DEFAULT_PRECISION};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for (k, cap) in [(1, 2.0), (2, 1.3), (3, 1.3), (4, 1.2)] {
        let t = t2_constant(k, cap, DEFAULT_PRECISION)?;
        println!(
            "k = {k}  w = {:4}  M >= {:.4}  C = {:.4}  scanned {}  {}",
            t.w,
            t.m_floor,
            t.c,
            t.polynomials_scanned,
            t.witness.as_deref().unwrap_or("")
        );
    }
    Ok(())
}
