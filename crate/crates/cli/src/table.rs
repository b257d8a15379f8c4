//! Bundled integer sequences for offline identification.

use serde::Serialize;

/// Where the bundled terms come from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Provenance {
    /// Every term is printed in the source text.
    Printed,
    /// Standard initial values of a classical sequence.
    Standard,
    /// A printed prefix, extended by computation and checked independently.
    Extended,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Entry {
    pub name: &'static str,
    pub description: &'static str,
    pub provenance: Provenance,
    pub terms: &'static [i64],
}

/// Shortest query `identify` accepts.
pub const MIN_QUERY: usize = 5;

pub struct SequenceTable {
    entries: Vec<Entry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Match {
    pub name: &'static str,
    /// Index of the table term matching the first query term (0 or 1).
    pub offset: usize,
}

const fn entry(name: &'static str, description: &'static str, provenance: Provenance, terms: &'static [i64]) -> Entry {
    Entry {
        name,
        description,
        provenance,
        terms,
    }
}

impl SequenceTable {
    pub fn bundled() -> Self {
        use Provenance::*;
        let entries = vec![
            entry("A000045", "Fibonacci numbers", Standard, &[0, 1, 1, 2, 3, 5, 8, 13, 21, 34, 55, 89, 144]),
            entry(
                "A000108",
                "Catalan numbers",
                Standard,
                &[1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796, 58786],
            ),
            entry(
                "A000629",
                "necklaces of partitions of n+1 labeled beads",
                Extended,
                &[1, 2, 6, 26, 150, 1082, 9366, 94586, 1091670, 14174522, 204495126, 3245265146],
            ),
            entry(
                "A000670",
                "Fubini numbers",
                Standard,
                &[1, 1, 3, 13, 75, 541, 4683, 47293, 545835, 7087261, 102247563, 1622632573],
            ),
            entry(
                "A001263",
                "Narayana triangle read by rows",
                Standard,
                &[1, 1, 1, 1, 3, 1, 1, 6, 6, 1, 1, 10, 20, 10, 1, 1, 15, 50, 50, 15, 1],
            ),
            entry(
                "A006318",
                "large Schroeder numbers",
                Standard,
                &[1, 2, 6, 22, 90, 394, 1806, 8558, 41586, 206098, 1037718],
            ),
            entry(
                "A007047",
                "chains in the power set of an n-set",
                Extended,
                &[1, 3, 11, 51, 299, 2163, 18731, 189171, 2183339, 28349043, 408990251, 6490530291],
            ),
            entry(
                "A071356",
                "Motzkin paths with 2-colored rises and horizontals",
                Printed,
                &[1, 2, 6, 20, 72, 272, 1064, 4272, 17504, 72896],
            ),
            entry(
                "A078481",
                "diagonal sums of the binomial conjugate of the Narayana triangle",
                Printed,
                &[1, 1, 3, 7, 19, 53, 153, 453, 1367, 4191, 13015],
            ),
            entry(
                "A126216",
                "Schroeder paths by peaks, none at level one, read by rows",
                Printed,
                &[1, 2, 1, 5, 5, 1, 14, 21, 9, 1, 42, 84, 56, 14, 1, 132, 330, 300, 120, 20, 1],
            ),
            entry(
                "A151090",
                "Motzkin paths with colored level-0 steps",
                Extended,
                &[1, 3, 11, 43, 175, 731, 3111, 13427, 58591, 257947, 1143943, 5104419],
            ),
            entry(
                "A155862",
                "Schroeder paths whose level-0 rises have 3 colors",
                Extended,
                &[1, 4, 22, 130, 790, 4870, 30274, 189202, 1186702, 7461982, 47007034, 296527162],
            ),
            entry(
                "A177896",
                "binomial conjugate of the Narayana triangle read by rows",
                Printed,
                &[1, 1, 1, 2, 3, 1, 4, 9, 6, 1, 9, 26, 26, 10, 1, 21, 75, 100, 60, 15, 1],
            ),
            entry(
                "A230008",
                "row sums of the triangular-multiplier exponential array",
                Extended,
                &[1, 3, 11, 51, 295, 2055, 16715, 155355, 1624255, 18868575, 241112675, 3361168275],
            ),
        ];
        SequenceTable { entries }
    }

    pub fn entries(&self) -> &[Entry] {
        &self.entries
    }

    pub fn get(&self, name: &str) -> Option<&Entry> {
        self.entries.iter().find(|e| e.name == name)
    }

    /// Entries that `terms` is an exact prefix of, read from index 0 or 1.
    /// Queries shorter than [`MIN_QUERY`] match nothing.
    pub fn identify(&self, terms: &[i64]) -> Vec<Match> {
        if terms.len() < MIN_QUERY {
            return Vec::new();
        }
        let mut out = Vec::new();
        for e in &self.entries {
            for offset in 0..=1 {
                if e.terms.get(offset..offset + terms.len()) == Some(terms) {
                    out.push(Match { name: e.name, offset });
                    break;
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_entry_has_ten_terms() {
        let t = SequenceTable::bundled();
        assert_eq!(t.entries().len(), 14);
        assert!(t.entries().iter().all(|e| e.terms.len() >= 10));
    }

    #[test]
    fn large_schroeder() {
        let t = SequenceTable::bundled();
        assert_eq!(t.identify(&[1, 2, 6, 22, 90]), [Match { name: "A006318", offset: 0 }]);
    }

    #[test]
    fn offsets_and_rejections() {
        let t = SequenceTable::bundled();
        assert_eq!(t.identify(&[1, 1, 2, 3, 5, 8]), [Match { name: "A000045", offset: 1 }]);
        assert!(t.identify(&[1, 2, 6]).is_empty());
        assert!(t.identify(&[1, 2, 6, 22, 91]).is_empty());
        let cat = t.identify(&[1, 1, 2, 5, 14, 42]);
        assert_eq!(cat, [Match { name: "A000108", offset: 0 }]);
    }
}
