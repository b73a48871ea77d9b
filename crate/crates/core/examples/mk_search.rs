use splitheight::{mk_search, parse_field, DEFAULT_PRECISION};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for name in ["Q", "Q(sqrt(-1))", "Q(sqrt(-3))", "Q(sqrt(5))", "Q(sqrt(2))", "Q(sqrt(-7))"] {
        let r = mk_search(parse_field(name)?, 3.0, DEFAULT_PRECISION)?;
        let w: Vec<String> = r.witnesses.iter().map(|w| w.to_string()).collect();
        println!("{name:12} M_K = {}  from {}", r.value.enclosure.display(12), w.join(", "));
    }
    Ok(())
}
