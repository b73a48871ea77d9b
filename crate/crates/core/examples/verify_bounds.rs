use splitheight::bounds::check_all;
use splitheight::sample::{random_split_poly, rng};
use splitheight::{expand, mk_search, parse_field, DEFAULT_PRECISION};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let k = parse_field("Q(sqrt(-3))")?;
    let mk = mk_search(k, 3.0, DEFAULT_PRECISION)?.value.enclosure.lo_f64();
    let mut r = rng(2024);
    for _ in 0..3 {
        let s = random_split_poly(&mut r, k, 8, 3);
        println!("{}", expand(&s));
        for c in check_all(&s, mk, DEFAULT_PRECISION)? {
            println!("  {:14} {:8} margin {:.4}", c.name.to_string(), c.verdict.to_string(), c.margin);
        }
    }
    Ok(())
}
