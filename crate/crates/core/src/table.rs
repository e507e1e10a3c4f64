//! Count tables with CSV and JSON output.
//!
//! Zero entries are blank in CSV unless zeros are requested. JSON carries
//! every value as a decimal string together with the blank mask.

use std::ops::RangeInclusive;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::counting::{count_ann, count_maximal, count_total};
use crate::numtheory::ExactInt;

pub const TABLE_FORMAT_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TableKind {
    Maximal,
    Ann,
    Total,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountTable {
    pub format_version: u32,
    pub kind: TableKind,
    pub row_label: String,
    pub rows: Vec<u64>,
    pub columns: Vec<String>,
    #[serde(with = "decimal_grid")]
    pub cells: Vec<Vec<ExactInt>>,
    pub blank: Vec<Vec<bool>>,
}

mod decimal_grid {
    use std::str::FromStr;

    use serde::de::Error as _;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    use crate::numtheory::ExactInt;

    pub fn serialize<S: Serializer>(grid: &[Vec<ExactInt>], s: S) -> Result<S::Ok, S::Error> {
        let text: Vec<Vec<String>> = grid.iter().map(|row| row.iter().map(ToString::to_string).collect()).collect();
        text.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Vec<ExactInt>>, D::Error> {
        let text = Vec::<Vec<String>>::deserialize(d)?;
        text.into_iter()
            .map(|row| {
                row.iter()
                    .map(|v| ExactInt::from_str(v).map_err(|_| D::Error::custom(format!("bad integer {v:?}"))))
                    .collect()
            })
            .collect()
    }
}

impl CountTable {
    fn build(
        kind: TableKind,
        row_label: &str,
        rows: Vec<u64>,
        columns: Vec<String>,
        cell: impl Fn(u64, usize) -> ExactInt + Sync,
    ) -> Self {
        let width = columns.len();
        let cells: Vec<Vec<ExactInt>> = rows
            .par_iter()
            .map(|&r| (0..width).map(|c| cell(r, c)).collect())
            .collect();
        let blank = cells.iter().map(|row| row.iter().map(|v| *v == ExactInt::ZERO).collect()).collect();
        Self {
            format_version: TABLE_FORMAT_VERSION,
            kind,
            row_label: row_label.to_string(),
            rows,
            columns,
            cells,
            blank,
        }
    }

    /// Maximal cross-cut counts, rows `n`, columns `k`.
    pub fn maximal(n: RangeInclusive<u64>, k: RangeInclusive<u64>) -> Self {
        let ks: Vec<u64> = k.collect();
        let columns = ks.iter().map(|k| format!("k={k}")).collect();
        Self::build(TableKind::Maximal, "n", n.collect(), columns, |n, c| count_maximal(n, ks[c]))
    }

    /// All matchings with `n` outer and `m` inner endpoints, `0 <= n, m <= max`.
    pub fn ann(max: u64) -> Self {
        let columns = (0..=max).map(|m| format!("m={m}")).collect();
        Self::build(TableKind::Ann, "n", (0..=max).collect(), columns, |n, m| count_ann(n, m as u64))
    }

    /// All matchings with `2n` endpoints, one row per `n <= max`.
    pub fn total(max: u64) -> Self {
        Self::build(TableKind::Total, "n", (0..=max).collect(), vec!["Ann(2n)".into()], |n, _| {
            count_total(2 * n)
        })
    }

    pub fn get(&self, row: u64, column: usize) -> Option<&ExactInt> {
        let r = self.rows.iter().position(|&x| x == row)?;
        self.cells[r].get(column)
    }

    pub fn to_csv(&self, zeros: bool) -> String {
        let mut out = self.row_label.clone();
        for c in &self.columns {
            out.push(',');
            out += c;
        }
        out.push('\n');
        for ((r, row), blank) in self.rows.iter().zip(&self.cells).zip(&self.blank) {
            out += &r.to_string();
            for (v, &b) in row.iter().zip(blank) {
                out.push(',');
                if zeros || !b {
                    out += &v.to_string();
                }
            }
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("table serializes") + "\n"
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_layout() {
        let t = CountTable::ann(3);
        assert_eq!(t.to_csv(false), "n,m=0,m=1,m=2,m=3\n0,1,,1,\n1,,1,,1\n2,1,,2,\n3,,1,,2\n");
        assert!(t.to_csv(true).starts_with("n,m=0,m=1,m=2,m=3\n0,1,0,1,0\n"));
        let total = CountTable::total(4);
        assert_eq!(total.to_csv(false), "n,Ann(2n)\n0,1\n1,3\n2,8\n3,20\n4,57\n");
    }

    #[test]
    fn maximal_corner() {
        let t = CountTable::maximal(0..=10, 0..=10);
        assert_eq!(t.cells.len(), 11);
        assert_eq!(t.get(10, 10), Some(&ExactInt::from(1001603u32)));
        assert_eq!(t.get(4, 3), Some(&ExactInt::from(30u32)));
        let t = CountTable::maximal(3..=4, 2..=3);
        assert_eq!(t.to_csv(false), "n,k=2,k=3\n3,7,10\n4,22,30\n");
    }

    #[test]
    fn json_round_trip() {
        let t = CountTable::ann(6);
        let back: CountTable = serde_json::from_str(&t.to_json()).unwrap();
        assert_eq!(back, t);
        assert!(t.to_json().contains("\"34\""));
        assert_eq!(t.to_csv(false), CountTable::ann(6).to_csv(false));
    }
}
