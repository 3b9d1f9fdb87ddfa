//! Finite groups given by multiplication tables.
//!
//! Text format: an `order: k` line followed by `k` rows of `k` element
//! indices (0-based); row `a`, column `b` holds `a * b`. Lines starting with
//! `#` are comments. An optional `name:` line may precede `order:`.

use super::InvariantError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    name: String,
    table: Vec<Vec<u16>>,
    identity: u16,
    inverse: Vec<u16>,
}

impl FiniteGroup {
    /// Builds a group from its table, checking the group axioms.
    pub fn from_table(name: &str, table: Vec<Vec<u16>>) -> Result<Self, InvariantError> {
        let n = table.len();
        let bad = |m: &str| InvariantError::BadGroup(format!("{}: {}", name, m));
        if n == 0 || n > u16::MAX as usize {
            return Err(bad("order out of range"));
        }
        if table.iter().any(|r| r.len() != n || r.iter().any(|&v| v as usize >= n)) {
            return Err(bad("table is not square or has entries out of range"));
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|a| table[e][a] as usize == a && table[a][e] as usize == a))
            .ok_or_else(|| bad("no identity element"))? as u16;
        let mut inverse = vec![0u16; n];
        for a in 0..n {
            inverse[a] = (0..n)
                .find(|&b| table[a][b] == identity && table[b][a] == identity)
                .ok_or_else(|| bad("element without inverse"))? as u16;
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let ab = table[a][b] as usize;
                    let bc = table[b][c] as usize;
                    if table[ab][c] != table[a][bc] {
                        return Err(bad("multiplication is not associative"));
                    }
                }
            }
        }
        Ok(FiniteGroup { name: name.to_string(), table, identity, inverse })
    }

    /// The symmetric group on `n` points, elements in lexicographic order of
    /// their image lists; composition is `(a * b)(i) = a(b(i))`.
    pub fn symmetric(n: usize) -> Self {
        let perms = permutations(n);
        let index = |p: &Vec<usize>| perms.binary_search(p).unwrap() as u16;
        let table = perms
            .iter()
            .map(|a| perms.iter().map(|b| index(&(0..n).map(|i| a[b[i]]).collect())).collect())
            .collect();
        FiniteGroup::from_table(&format!("S{}", n), table).expect("symmetric groups are groups")
    }

    pub fn parse(s: &str) -> Result<Self, InvariantError> {
        let mut name = "G".to_string();
        let mut order: Option<usize> = None;
        let mut rows = Vec::new();
        for line in s.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#')) {
            if let Some(v) = line.strip_prefix("name:") {
                name = v.trim().to_string();
            } else if let Some(v) = line.strip_prefix("order:") {
                order = Some(v.trim().parse().map_err(|_| InvariantError::BadGroup(format!("bad order {:?}", v)))?);
            } else {
                let row: Result<Vec<u16>, _> = line.split_whitespace().map(str::parse).collect();
                rows.push(row.map_err(|_| InvariantError::BadGroup(format!("bad table row {:?}", line)))?);
            }
        }
        let order = order.ok_or_else(|| InvariantError::BadGroup("missing 'order:' line".into()))?;
        if rows.len() != order {
            return Err(InvariantError::BadGroup(format!("expected {} rows, got {}", order, rows.len())));
        }
        FiniteGroup::from_table(&name, rows)
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("name: {}\norder: {}\n", self.name, self.order());
        for r in &self.table {
            let row: Vec<String> = r.iter().map(|v| v.to_string()).collect();
            s.push_str(&row.join(" "));
            s.push('\n');
        }
        s
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn identity(&self) -> u16 {
        self.identity
    }

    #[inline]
    pub fn mul(&self, a: u16, b: u16) -> u16 {
        self.table[a as usize][b as usize]
    }

    #[inline]
    pub fn inv(&self, a: u16) -> u16 {
        self.inverse[a as usize]
    }
}

/// All permutations of `0..n` in lexicographic order.
pub(crate) fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut perms: Vec<Vec<usize>> = vec![Vec::new()];
    for _ in 0..n {
        perms = perms
            .into_iter()
            .flat_map(|p| {
                (0..n).filter(|v| !p.contains(v)).map(|v| [p.as_slice(), &[v]].concat()).collect::<Vec<_>>()
            })
            .collect();
    }
    perms
}
