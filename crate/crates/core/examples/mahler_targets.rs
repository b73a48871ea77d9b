use splitheight::{int_poly_from_desc, mahler_measure, DEFAULT_PRECISION};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let polys = [
        ("Lehmer", vec![1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1]),
        ("Smyth", vec![1, 0, -1, -1]),
        ("x^5 - 1", vec![1, 0, 0, 0, 0, -1]),
    ];
    for (name, desc) in polys {
        let f = int_poly_from_desc(&desc);
        let m = mahler_measure(&f, DEFAULT_PRECISION)?;
        println!("{name:8} {f:40} M = {}", m.enclosure.display(25));
    }
    Ok(())
}
