//! Bordered ASCII grids.

use specht_core::{Multicharge, Multipartition, Partition, Quiver};

fn border(widths: usize, cell: usize) -> String {
    let mut s = String::from("+");
    for _ in 0..widths {
        s.push_str(&"-".repeat(cell + 2));
        s.push('+');
    }
    s
}

/// One cell per node, row by row; rows of different lengths share a border
/// as long as the longer of the two.
pub fn grid(rows: &[Vec<String>]) -> String {
    if rows.is_empty() {
        return "∅".into();
    }
    let cell = rows.iter().flatten().map(|c| c.chars().count()).max().unwrap_or(1);
    let mut out = vec![border(rows[0].len(), cell)];
    for (i, row) in rows.iter().enumerate() {
        let mut line = String::from("|");
        for c in row {
            line.push_str(&format!(" {c:>cell$} |"));
        }
        out.push(line);
        let below = rows.get(i + 1).map(|r| r.len()).unwrap_or(0);
        out.push(border(row.len().max(below), cell));
    }
    out.join("\n")
}

pub fn residue_grid(p: &Partition, q: &Quiver, charge: i64) -> String {
    let rows: Vec<Vec<String>> = (1..=p.rows())
        .map(|r| (1..=p.part(r)).map(|c| q.residue_of_node(charge, r, c).to_string()).collect())
        .collect();
    grid(&rows)
}

/// Components side by side would need terminal width; stack them instead.
pub fn residue_diagram(shape: &Multipartition, q: &Quiver, kappa: &Multicharge) -> String {
    shape
        .components()
        .iter()
        .zip(&kappa.entries)
        .enumerate()
        .map(|(c, (p, &k))| format!("component {} (charge {k}):\n{}", c + 1, residue_grid(p, q, k)))
        .collect::<Vec<_>>()
        .join("\n")
}
