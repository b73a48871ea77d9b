use splitheight::sample::{random_nonzero_element, rng};
use splitheight::{parse_field, product_formula_check, DEFAULT_PRECISION};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut r = rng(7);
    for name in ["Q", "Q(sqrt(-1))", "Q(sqrt(-3))", "Q(sqrt(5))", "Q(sqrt(-2))"] {
        let k = parse_field(name)?;
        let x = random_nonzero_element(&mut r, k, 30, 20);
        let c = product_formula_check(&x, DEFAULT_PRECISION)?;
        println!(
            "{name:12} x = {x:24} finite {:>12}  product {}",
            c.nonarch.to_string(),
            c.product.display(20)
        );
    }
    Ok(())
}
