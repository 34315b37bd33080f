//! Correspondence tables: every graph on n+1 vertices with its Betti
//! sequence and composition, in enumeration order, plus the CSV rendering.

use num_bigint::BigInt;

use crate::correspondence::{alhc_of, betti_of};
use crate::graph::enumerate;

/// One graph with both associated sequences.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorrespondenceRow {
    pub sigma: Vec<usize>,
    pub betti: Vec<BigInt>,
    pub alhc: Vec<u64>,
}

/// All 2^n rows in subset-index order (see [`enumerate`]).
pub fn correspondence_table(n: usize) -> Vec<CorrespondenceRow> {
    enumerate(n)
        .map(|t| CorrespondenceRow {
            sigma: t.sigma().iter().copied().collect(),
            betti: betti_of(&t).entries().to_vec(),
            alhc: alhc_of(&t).entries().to_vec(),
        })
        .collect()
}

fn join<T: ToString>(items: &[T]) -> String {
    items.iter().map(T::to_string).collect::<Vec<_>>().join(";")
}

/// CSV with header `n,sigma,betti,alhc`; list cells are semicolon-separated,
/// the empty sigma is an empty cell, rows end with `\n`.
pub fn table_csv(rows: &[CorrespondenceRow]) -> String {
    let mut out = String::from("n,sigma,betti,alhc\n");
    for row in rows {
        let n = row.betti.len();
        out.push_str(&format!(
            "{},{},{},{}\n",
            n,
            join(&row.sigma),
            join(&row.betti),
            join(&row.alhc)
        ));
    }
    out
}
