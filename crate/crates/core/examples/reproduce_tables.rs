//! Rebuilds a published case-study table and shows where it differs from
//! the printed values. Pass 1, 2 or 3; defaults to 3.

use influence_games::io::reproduce::{reproduce, TableId};
use influence_games::io::table::OutputFormat;
use influence_games::EnumerationOptions;

fn main() {
    let id: TableId = std::env::args().nth(1).as_deref().unwrap_or("3").parse().unwrap();
    let rep = reproduce(id, &EnumerationOptions::default()).unwrap();
    print!("{}", rep.render(OutputFormat::Markdown));
}
