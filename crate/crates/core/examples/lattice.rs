use splitheight::{lattice_case_check, parse_field};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for name in ["Q(sqrt(-1))", "Q(sqrt(-3))"] {
        let r = lattice_case_check(parse_field(name)?, 10)?;
        println!(
            "{name}: {} pairs, least |N(b^w + c^w)| = {}, exceptional {}",
            r.pairs_scanned,
            r.min_norm,
            r.exceptional_pairs.len()
        );
        for (b, c) in r.attaining_pairs.iter().take(4) {
            println!("  ({b}, {c})");
        }
    }
    Ok(())
}
