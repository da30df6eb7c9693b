//! Finite commutative semigroups given by multiplication tables.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum SemigroupError {
    #[error("table has {rows} rows but {labels} labels")]
    ShapeMismatch { labels: usize, rows: usize },
    #[error("table entry ({x}, {y}) = {value} is out of range")]
    OutOfRange { x: usize, y: usize, value: usize },
    #[error("not commutative: {x}*{y} != {y}*{x}")]
    NotCommutative { x: usize, y: usize },
    #[error("not associative: ({x}*{y})*{z} != {x}*({y}*{z})")]
    NotAssociative { x: usize, y: usize, z: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteSemigroup {
    labels: Vec<String>,
    table: Vec<Vec<usize>>,
}

/// Outcome of a semigroup-wide property check; failures name an element.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Holds,
    Fails { witness: usize },
}

impl Verdict {
    pub fn holds(self) -> bool {
        matches!(self, Verdict::Holds)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliffordDecomposition {
    pub idempotents: Vec<usize>,
    /// Idempotent `e` ↦ elements of the maximal subgroup `G_e`, ascending.
    pub groups: BTreeMap<usize, Vec<usize>>,
    pub unassigned: Vec<usize>,
}

impl FiniteSemigroup {
    pub fn new(labels: Vec<String>, table: Vec<Vec<usize>>) -> Result<Self, SemigroupError> {
        let n = labels.len();
        if table.len() != n {
            return Err(SemigroupError::ShapeMismatch { labels: n, rows: table.len() });
        }
        for (x, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(SemigroupError::ShapeMismatch { labels: n, rows: row.len() });
            }
            if let Some((y, &value)) = row.iter().enumerate().find(|(_, &v)| v >= n) {
                return Err(SemigroupError::OutOfRange { x, y, value });
            }
        }
        if let Some((x, y)) =
            (0..n).flat_map(|x| (x + 1..n).map(move |y| (x, y))).find(|&(x, y)| table[x][y] != table[y][x])
        {
            return Err(SemigroupError::NotCommutative { x, y });
        }
        if let Some((x, y, z)) = first_non_associative(&table) {
            return Err(SemigroupError::NotAssociative { x, y, z });
        }
        Ok(FiniteSemigroup { labels, table })
    }

    /// Labels `0, 1, …, n-1`.
    pub fn unlabeled(table: Vec<Vec<usize>>) -> Result<Self, SemigroupError> {
        let labels = (0..table.len()).map(|i| alloc::format!("{i}")).collect();
        Self::new(labels, table)
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.table[x][y]
    }

    pub fn is_idempotent(&self, x: usize) -> bool {
        self.mul(x, x) == x
    }

    pub fn idempotents(&self) -> Vec<usize> {
        (0..self.len()).filter(|&x| self.is_idempotent(x)).collect()
    }

    /// Some `a` with `x²a = x`, if `x` is regular.
    pub fn regular_witness(&self, x: usize) -> Option<usize> {
        let sq = self.mul(x, x);
        (0..self.len()).find(|&a| self.mul(sq, a) == x)
    }

    /// Regular elements paired with the least witness `a`.
    pub fn regular_elements(&self) -> Vec<(usize, usize)> {
        (0..self.len()).filter_map(|x| self.regular_witness(x).map(|a| (x, a))).collect()
    }

    pub fn is_clifford(&self) -> Verdict {
        match (0..self.len()).find(|&x| self.regular_witness(x).is_none()) {
            Some(witness) => Verdict::Fails { witness },
            None => Verdict::Holds,
        }
    }

    pub fn is_boolean(&self) -> Verdict {
        match (0..self.len()).find(|&x| !self.is_idempotent(x)) {
            Some(witness) => Verdict::Fails { witness },
            None => Verdict::Holds,
        }
    }

    /// Elements of the largest subgroup with identity `e`:
    /// `{x : xe = x, ∃y with xy = e and ye = y}`.
    pub fn maximal_subgroup(&self, e: usize) -> Vec<usize> {
        (0..self.len())
            .filter(|&x| self.mul(x, e) == x && (0..self.len()).any(|y| self.mul(x, y) == e && self.mul(y, e) == y))
            .collect()
    }

    pub fn clifford_decomposition(&self) -> CliffordDecomposition {
        let idempotents = self.idempotents();
        let groups: BTreeMap<usize, Vec<usize>> = idempotents.iter().map(|&e| (e, self.maximal_subgroup(e))).collect();
        let mut covered = vec![false; self.len()];
        for g in groups.values() {
            for &x in g {
                covered[x] = true;
            }
        }
        let unassigned = (0..self.len()).filter(|&x| !covered[x]).collect();
        CliffordDecomposition { idempotents, groups, unassigned }
    }

    /// Whether `elements` is a group with identity `e` under this table.
    pub fn is_group_with_identity(&self, elements: &[usize], e: usize) -> bool {
        elements.contains(&e)
            && elements.iter().all(|&x| {
                self.mul(x, e) == x
                    && elements.iter().all(|&y| elements.contains(&self.mul(x, y)))
                    && elements.iter().any(|&y| self.mul(x, y) == e)
            })
    }
}

fn first_non_associative(table: &[Vec<usize>]) -> Option<(usize, usize, usize)> {
    let n = table.len();
    for x in 0..n {
        for y in 0..n {
            let xy = table[x][y];
            for z in 0..n {
                if table[xy][z] != table[x][table[y][z]] {
                    return Some((x, y, z));
                }
            }
        }
    }
    None
}

/// Backtracking search over commutative tables, pruned by associativity on
/// the cells filled so far. Cells are visited row by row over `x <= y`.
struct TableSearch {
    n: usize,
    cells: Vec<(usize, usize)>,
    table: Vec<Vec<Option<usize>>>,
}

impl TableSearch {
    fn new(n: usize) -> Self {
        let cells = (0..n).flat_map(|x| (x..n).map(move |y| (x, y))).collect();
        TableSearch { n, cells, table: vec![vec![None; n]; n] }
    }

    fn consistent(&self) -> bool {
        let t = &self.table;
        for x in 0..self.n {
            for y in 0..self.n {
                let Some(xy) = t[x][y] else { continue };
                for z in 0..self.n {
                    if let (Some(l), Some(yz)) = (t[xy][z], t[y][z]) {
                        if let Some(r) = t[x][yz] {
                            if l != r {
                                return false;
                            }
                        }
                    }
                }
            }
        }
        true
    }

    fn set(&mut self, cell: usize, v: Option<usize>) {
        let (x, y) = self.cells[cell];
        self.table[x][y] = v;
        self.table[y][x] = v;
    }

    fn snapshot(&self) -> Vec<Vec<usize>> {
        self.table.iter().map(|r| r.iter().map(|v| v.expect("complete")).collect()).collect()
    }

    fn all(&mut self, cell: usize, out: &mut Vec<Vec<Vec<usize>>>) {
        if cell == self.cells.len() {
            out.push(self.snapshot());
            return;
        }
        for v in 0..self.n {
            self.set(cell, Some(v));
            if self.consistent() {
                self.all(cell + 1, out);
            }
        }
        self.set(cell, None);
    }

    fn random(&mut self, cell: usize, choose: &mut dyn FnMut(usize) -> usize, budget: &mut usize) -> bool {
        if cell == self.cells.len() {
            return true;
        }
        let mut order: Vec<usize> = (0..self.n).collect();
        for i in (1..order.len()).rev() {
            order.swap(i, choose(i + 1));
        }
        for v in order {
            if *budget == 0 {
                break;
            }
            *budget -= 1;
            self.set(cell, Some(v));
            if self.consistent() && self.random(cell + 1, choose, budget) {
                return true;
            }
        }
        self.set(cell, None);
        false
    }
}

/// Every commutative associative table on `{0, …, n-1}` (labelled, so
/// isomorphic copies are all included).
pub fn all_commutative_tables(n: usize) -> Vec<Vec<Vec<usize>>> {
    let mut out = Vec::new();
    if n == 0 {
        return out;
    }
    TableSearch::new(n).all(0, &mut out);
    out
}

/// A commutative associative table drawn by randomised backtracking;
/// `choose(k)` must return a value in `0..k`.
pub fn random_commutative_table(n: usize, choose: &mut dyn FnMut(usize) -> usize) -> Vec<Vec<usize>> {
    loop {
        let mut search = TableSearch::new(n);
        let mut budget = 10_000;
        if search.random(0, choose, &mut budget) {
            return search.snapshot();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn semilattice() -> FiniteSemigroup {
        FiniteSemigroup::new(vec!["1".into(), "e".into()], vec![vec![0, 1], vec![1, 1]]).unwrap()
    }

    fn cyclic(n: usize) -> FiniteSemigroup {
        FiniteSemigroup::unlabeled((0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect()).unwrap()
    }

    fn null_ish() -> FiniteSemigroup {
        // {1, x, 0}: x^2 = 0
        FiniteSemigroup::new(
            vec!["1".into(), "x".into(), "0".into()],
            vec![vec![0, 1, 2], vec![1, 2, 2], vec![2, 2, 2]],
        )
        .unwrap()
    }

    #[test]
    fn verdicts_on_small_examples() {
        assert!(semilattice().is_clifford().holds());
        assert!(semilattice().is_boolean().holds());
        assert!(cyclic(3).is_clifford().holds());
        assert_eq!(cyclic(3).is_boolean(), Verdict::Fails { witness: 1 });
        let s = null_ish();
        // exhaust a ∈ {1, x, 0}: x^2 a = 0 for all a
        assert_eq!(s.is_clifford(), Verdict::Fails { witness: 1 });
        assert_eq!(s.regular_elements(), vec![(0, 0), (2, 0)]);
    }

    #[test]
    fn witnesses_verify() {
        for s in [semilattice(), cyclic(4), null_ish()] {
            for (x, a) in s.regular_elements() {
                assert_eq!(s.mul(s.mul(x, x), a), x);
            }
        }
    }

    #[test]
    fn decompositions() {
        let d = semilattice().clifford_decomposition();
        assert_eq!(d.groups.len(), 2);
        assert!(d.groups.values().all(|g| g.len() == 1));
        let d = cyclic(3).clifford_decomposition();
        assert_eq!(d.groups[&0], vec![0, 1, 2]);
        let d = null_ish().clifford_decomposition();
        assert_eq!(d.unassigned, vec![1]);
    }

    #[test]
    fn rejects_bad_tables() {
        // left-zero band is associative but not commutative
        let t = vec![vec![0, 0], vec![1, 1]];
        assert_eq!(FiniteSemigroup::unlabeled(t), Err(SemigroupError::NotCommutative { x: 0, y: 1 }));
        // commutative, non-associative: 0*0 = 1, everything else 0
        let t = vec![vec![1, 0], vec![0, 0]];
        assert!(matches!(FiniteSemigroup::unlabeled(t), Err(SemigroupError::NotAssociative { .. })));
        let t = vec![vec![0, 2], vec![2, 0]];
        assert!(matches!(FiniteSemigroup::unlabeled(t), Err(SemigroupError::OutOfRange { .. })));
    }

    #[test]
    fn backtracking_matches_brute_force() {
        for n in 1..=3usize {
            let cells: Vec<(usize, usize)> = (0..n).flat_map(|x| (x..n).map(move |y| (x, y))).collect();
            let total = n.pow(cells.len() as u32);
            let mut brute = Vec::new();
            for code in 0..total {
                let mut t = vec![vec![0; n]; n];
                let mut c = code;
                for &(x, y) in &cells {
                    t[x][y] = c % n;
                    t[y][x] = c % n;
                    c /= n;
                }
                if FiniteSemigroup::unlabeled(t.clone()).is_ok() {
                    brute.push(t);
                }
            }
            let mut found = all_commutative_tables(n);
            brute.sort();
            found.sort();
            assert_eq!(found, brute, "n = {n}");
        }
    }

    #[test]
    fn random_tables_are_valid() {
        let mut state = 12345u64;
        let mut choose = |k: usize| {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            ((state >> 33) as usize) % k
        };
        for _ in 0..20 {
            let t = random_commutative_table(5, &mut choose);
            assert!(FiniteSemigroup::unlabeled(t).is_ok());
        }
    }
}
