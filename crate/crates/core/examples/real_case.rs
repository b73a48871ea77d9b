use splitheight::{parse_field, real_case_samples};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for name in ["Q", "Q(sqrt(2))", "Q(sqrt(5))"] {
        let samples = real_case_samples(parse_field(name)?, 2000, 11)?;
        let least = samples
            .iter()
            .map(|s| s.product.to_f64())
            .fold(f64::INFINITY, f64::min);
        println!("{name:10} {} samples, least product {least:.4}", samples.len());
    }
    Ok(())
}
