//! Upper characteristic rank verdicts across the three quotient families,
//! grouped by outcome.

use std::collections::BTreeMap;

use stiefel::invariants::ucharrank;
use stiefel::{Family, ManifoldId};

fn main() -> stiefel::Result<()> {
    for family in [Family::PV, Family::PW, Family::Y] {
        let mut by_rule: BTreeMap<String, Vec<String>> = BTreeMap::new();
        for id in ManifoldId::enumerate(family, 16) {
            let v = ucharrank(id)?;
            let entry = match v.value() {
                Some(value) => format!("{id}={value}"),
                None => id.to_string(),
            };
            by_rule.entry(v.rule().to_string()).or_default().push(entry);
        }
        println!("== {family}");
        for (rule, ids) in by_rule {
            println!("{rule}");
            println!(
                "    {} ids: {}",
                ids.len(),
                ids.iter().take(8).cloned().collect::<Vec<_>>().join(" ")
            );
        }
    }

    let special = ManifoldId::new(Family::PV, 8, 7)?;
    println!("\n{special}: {:?}", ucharrank(special)?);
    Ok(())
}
