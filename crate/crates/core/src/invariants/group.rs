use thiserror::Error;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("multiplication table is empty")]
    Empty,
    #[error("row {0} does not have one entry per element")]
    NotSquare(usize),
    #[error("entry {value} at ({row}, {col}) is not an element")]
    OutOfRange { row: usize, col: usize, value: usize },
    #[error("no identity element")]
    NoIdentity,
    #[error("element {0} has no inverse")]
    NoInverse(usize),
    #[error("not associative at ({0}, {1}, {2})")]
    NotAssociative(usize, usize, usize),
}

/// A finite group given by its multiplication table on elements `0..order`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    name: String,
    table: Vec<Vec<usize>>,
    identity: usize,
    inverses: Vec<usize>,
}

impl FiniteGroup {
    /// Checks the table is a group: closed, with identity, inverses and associativity.
    pub fn from_table(name: impl Into<String>, table: Vec<Vec<usize>>) -> Result<Self, GroupError> {
        let n = table.len();
        if n == 0 {
            return Err(GroupError::Empty);
        }
        for (row, entries) in table.iter().enumerate() {
            if entries.len() != n {
                return Err(GroupError::NotSquare(row));
            }
            if let Some((col, &value)) = entries.iter().enumerate().find(|(_, &v)| v >= n) {
                return Err(GroupError::OutOfRange { row, col, value });
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|x| table[e][x] == x && table[x][e] == x))
            .ok_or(GroupError::NoIdentity)?;
        let inverses = (0..n)
            .map(|x| {
                (0..n)
                    .find(|&y| table[x][y] == identity && table[y][x] == identity)
                    .ok_or(GroupError::NoInverse(x))
            })
            .collect::<Result<Vec<_>, _>>()?;
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(GroupError::NotAssociative(a, b, c));
                    }
                }
            }
        }
        Ok(FiniteGroup { name: name.into(), table, identity, inverses })
    }

    /// Symmetric group on three symbols.
    pub fn symmetric3() -> Self {
        let perms: Vec<[usize; 3]> = vec![[0, 1, 2], [1, 0, 2], [0, 2, 1], [2, 1, 0], [1, 2, 0], [2, 0, 1]];
        let index = |p: [usize; 3]| perms.iter().position(|&q| q == p).unwrap();
        let table = perms
            .iter()
            .map(|a| perms.iter().map(|b| index([a[b[0]], a[b[1]], a[b[2]]])).collect())
            .collect();
        Self::from_table("S3", table).expect("S3 is a group")
    }

    /// Dihedral group with `order` elements (`order` even, at least 4), named `D<order>`.
    pub fn dihedral(order: usize) -> Option<Self> {
        if order < 4 || !order.is_multiple_of(2) {
            return None;
        }
        let m = order / 2;
        // r^i s^j is element i + m j
        let table = (0..order)
            .map(|a| {
                (0..order)
                    .map(|b| {
                        let (i1, j1, i2, j2) = (a % m, a / m, b % m, b / m);
                        let i = if j1 == 0 { (i1 + i2) % m } else { (i1 + m - i2) % m };
                        i + m * (j1 ^ j2)
                    })
                    .collect()
            })
            .collect();
        Some(Self::from_table(format!("D{order}"), table).expect("dihedral groups are groups"))
    }

    /// Built-in groups: `S3` and `D4` through `D12`.
    pub fn builtin(name: &str) -> Option<Self> {
        if name == "S3" {
            return Some(Self::symmetric3());
        }
        let order: usize = name.strip_prefix('D')?.parse().ok()?;
        (order <= 12).then(|| Self::dihedral(order)).flatten()
    }

    pub fn builtin_names() -> Vec<String> {
        let mut names = vec!["S3".to_string()];
        names.extend((4..=12).step_by(2).map(|k| format!("D{k}")));
        names
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a]
    }

    /// `g x g^-1`
    pub fn conj(&self, g: usize, x: usize) -> usize {
        self.mul(self.mul(g, x), self.inv(g))
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order()).all(|a| (0..self.order()).all(|b| self.mul(a, b) == self.mul(b, a)))
    }
}
