use splitheight::{height, parse_field, parse_poly, recognize_split, DEFAULT_PRECISION};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let k = parse_field("Q(sqrt(-2))")?;
    let f = parse_poly("x^8+2x^6-3x^4-4x^2+4", k)?;
    let s = recognize_split(&f, DEFAULT_PRECISION)?.ok_or("not split")?;
    println!("f = {s}");
    let h = height(&f, DEFAULT_PRECISION)?;
    println!("H(f) = {}", h.height.display(20));
    println!("deg f / log H(f) = {:.6}", 8.0 / h.log_height.mid_f64());
    println!("2 / log 2        = {:.6}", 2.0 / std::f64::consts::LN_2);
    Ok(())
}
