use splitheight::pell_counterexample;
use splitheight::search::pell::pell_fundamental;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for d in [2, 3, 5, 6, 7, 10, 13] {
        let (x, y) = pell_fundamental(d)?;
        let w = pell_counterexample(d)?;
        println!("d = {d:2}  x = {x}, y = {y}  alpha = {}  product = {}", w.alpha, w.product);
    }
    Ok(())
}
