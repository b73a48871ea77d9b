use splitheight::{parse_element, parse_field};
use splitheight::valuations::local_factorization;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let k = parse_field("Q(sqrt(-5))")?;
    let a = parse_element("1 + sqrt(-5)", k)?;
    let b = parse_element("3/2 - 2sqrt(-5)", k)?;
    println!("a = {a}, b = {b}");
    println!("a*b = {}", &a * &b);
    println!("a/b = {}", a.checked_div(&b)?);
    println!("N(a) = {}, Tr(a) = {}", a.norm(), a.trace());

    // 6 = 2·3 = (1 + √−5)(1 − √−5) as ideals
    for (p, e) in local_factorization(&parse_element("6", k)?)? {
        println!("  {p}^{e}");
    }
    Ok(())
}
