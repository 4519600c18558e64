//! Prints the half-space tables and closed-form vertices at one parameter.

use halfpipe::catalog::{table, TableData, TableId};
use halfpipe::numfield::TimeParam;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let t: TimeParam = std::env::args().nth(1).unwrap_or_else(|| "-1/3".into()).parse()?;
    for id in [TableId::Table3, TableId::Table4, TableId::AuxLMN] {
        println!("{id:?} at t = {t}");
        match table(id, &t, id == TableId::AuxLMN)? {
            TableData::Covectors(rows) => {
                for (label, c) in rows {
                    let xs: Vec<String> = c.coeffs().iter().map(|x| x.to_decimal(6)).collect();
                    println!("  {label:<3} [{}]", xs.join(", "));
                }
            }
            TableData::Points(rows) => {
                for (label, _, p) in rows {
                    let xs: Vec<String> = p.coords().iter().map(|x| x.to_decimal(6)).collect();
                    println!("  {label:<14} [{}]", xs.join(", "));
                }
            }
        }
    }
    Ok(())
}
