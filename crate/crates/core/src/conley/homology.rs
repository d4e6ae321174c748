//! Integer chain complexes and their homology via Smith normal form.

use super::ConleyError;

/// Dense integer matrix, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    pub rows: usize,
    pub cols: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let mut m = Self::zeros(r, c);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), c, "ragged matrix");
            for (j, &x) in row.iter().enumerate() {
                m.set(i, j, x);
            }
        }
        m
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: i64) {
        self.data[i * self.cols + j] = x;
    }

    pub fn add_to(&mut self, i: usize, j: usize, x: i64) {
        self.data[i * self.cols + j] += x;
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    out.add_to(i, j, a * other.get(k, j));
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    /// Nonzero diagonal of the Smith normal form, each dividing the next.
    pub fn invariant_factors(&self) -> Vec<i64> {
        smith_diagonal(self)
    }

    pub fn rank(&self) -> usize {
        self.invariant_factors().len()
    }

    /// Injective with free cokernel: a summand inclusion.
    pub fn is_split_injection(&self) -> bool {
        let f = self.invariant_factors();
        f.len() == self.cols && f.iter().all(|&x| x == 1)
    }

    /// Surjective (every invariant factor 1 and full row rank).
    pub fn is_split_surjection(&self) -> bool {
        let f = self.invariant_factors();
        f.len() == self.rows && f.iter().all(|&x| x == 1)
    }
}

fn smith_diagonal(m: &IntMatrix) -> Vec<i64> {
    let (rows, cols) = (m.rows, m.cols);
    let mut a: Vec<Vec<i128>> = (0..rows)
        .map(|i| (0..cols).map(|j| m.get(i, j) as i128).collect())
        .collect();
    let mut diag = Vec::new();
    let mut t = 0;
    while t < rows.min(cols) {
        // smallest nonzero entry of the trailing block becomes the pivot
        let mut best: Option<(usize, usize)> = None;
        'search: for i in t..rows {
            for j in t..cols {
                if a[i][j] != 0 && best.map_or(true, |(bi, bj)| a[i][j].abs() < a[bi][bj].abs()) {
                    best = Some((i, j));
                    if a[i][j].abs() == 1 {
                        break 'search;
                    }
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        a.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            let p = a[t][t];
            let mut dirty = false;
            for i in t + 1..rows {
                let q = a[i][t] / p;
                if q != 0 {
                    for j in t..cols {
                        a[i][j] -= q * a[t][j];
                    }
                }
                if a[i][t] != 0 {
                    dirty = true;
                }
            }
            for j in t + 1..cols {
                let q = a[t][j] / p;
                if q != 0 {
                    for i in t..rows {
                        a[i][j] -= q * a[i][t];
                    }
                }
                if a[t][j] != 0 {
                    dirty = true;
                }
            }
            if !dirty && p.abs() == 1 {
                break;
            }
            if !dirty {
                // divisibility of the rest of the block
                let bad = (t + 1..rows)
                    .flat_map(|i| (t + 1..cols).map(move |j| (i, j)))
                    .find(|&(i, j)| a[i][j] % p != 0);
                match bad {
                    None => break,
                    Some((i, _)) => {
                        for j in t..cols {
                            a[t][j] += a[i][j];
                        }
                    }
                }
            }
            // move the smallest entry of row t / column t into the pivot
            let mut bi = t;
            let mut bj = t;
            for i in t..rows {
                if a[i][t] != 0 && a[i][t].abs() < a[bi][bj].abs() {
                    bi = i;
                    bj = t;
                }
            }
            for j in t..cols {
                if a[t][j] != 0 && a[t][j].abs() < a[bi][bj].abs() {
                    bi = t;
                    bj = j;
                }
            }
            a.swap(t, bi);
            for row in a.iter_mut() {
                row.swap(t, bj);
            }
        }
        diag.push(i64::try_from(a[t][t].abs()).expect("invariant factor overflow"));
        t += 1;
    }
    diag
}

/// A free chain complex concentrated in degrees `0..ranks.len()`.
/// `boundaries[i]` is the matrix of ∂ from degree i+1 to degree i
/// (rows indexed by degree-i cells).
#[derive(Clone, Debug)]
pub struct ChainComplex {
    ranks: Vec<usize>,
    boundaries: Vec<IntMatrix>,
}

impl ChainComplex {
    pub fn new(ranks: Vec<usize>, boundaries: Vec<IntMatrix>) -> Result<Self, ConleyError> {
        if boundaries.len() + 1 != ranks.len().max(1) {
            return Err(ConleyError::Structure(format!(
                "{} ranks need {} boundary matrices, got {}",
                ranks.len(),
                ranks.len().saturating_sub(1),
                boundaries.len()
            )));
        }
        for (i, b) in boundaries.iter().enumerate() {
            if b.rows != ranks[i] || b.cols != ranks[i + 1] {
                return Err(ConleyError::Structure(format!(
                    "boundary from degree {} has shape {}x{}, expected {}x{}",
                    i + 1,
                    b.rows,
                    b.cols,
                    ranks[i],
                    ranks[i + 1]
                )));
            }
        }
        for i in 1..boundaries.len() {
            if !boundaries[i - 1].mul(&boundaries[i]).is_zero() {
                return Err(ConleyError::Structure(format!(
                    "boundary squared is nonzero from degree {}",
                    i + 1
                )));
            }
        }
        Ok(ChainComplex { ranks, boundaries })
    }

    pub fn ranks(&self) -> &[usize] {
        &self.ranks
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.ranks
            .iter()
            .enumerate()
            .map(|(i, &r)| if i % 2 == 0 { r as i64 } else { -(r as i64) })
            .sum()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct HomGroup {
    pub betti: usize,
    pub torsion: Vec<i64>,
}

impl HomGroup {
    pub fn free(betti: usize) -> Self {
        HomGroup { betti, torsion: Vec::new() }
    }

    pub fn is_trivial(&self) -> bool {
        self.betti == 0 && self.torsion.is_empty()
    }
}

/// Homology groups indexed by degree. Trailing trivial degrees are trimmed so
/// equality compares the groups only.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct GradedHom {
    groups: Vec<HomGroup>,
}

impl GradedHom {
    pub fn new(mut groups: Vec<HomGroup>) -> Self {
        while groups.last().is_some_and(HomGroup::is_trivial) {
            groups.pop();
        }
        GradedHom { groups }
    }

    /// Free groups given as (degree, rank) pairs.
    pub fn from_free(entries: &[(usize, usize)]) -> Self {
        let top = entries.iter().map(|&(d, _)| d + 1).max().unwrap_or(0);
        let mut groups = vec![HomGroup::default(); top];
        for &(d, r) in entries {
            groups[d].betti += r;
        }
        Self::new(groups)
    }

    pub fn degree(&self, i: usize) -> HomGroup {
        self.groups.get(i).cloned().unwrap_or_default()
    }

    pub fn betti(&self, i: usize) -> usize {
        self.groups.get(i).map_or(0, |g| g.betti)
    }

    pub fn groups(&self) -> &[HomGroup] {
        &self.groups
    }

    pub fn top_degree(&self) -> usize {
        self.groups.len()
    }

    pub fn shift(&self, by: usize) -> Self {
        let mut groups = vec![HomGroup::default(); by];
        groups.extend(self.groups.iter().cloned());
        Self::new(groups)
    }

    /// Reduced homology of a nonempty connected-or-not space from unreduced.
    pub fn reduced(&self) -> Self {
        let mut groups = self.groups.clone();
        if let Some(g0) = groups.first_mut() {
            g0.betti = g0.betti.saturating_sub(1);
        }
        Self::new(groups)
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.groups
            .iter()
            .enumerate()
            .map(|(i, g)| if i % 2 == 0 { g.betti as i64 } else { -(g.betti as i64) })
            .sum()
    }
}

pub fn homology(cx: &ChainComplex) -> GradedHom {
    let n = cx.ranks.len();
    let factors: Vec<Vec<i64>> = cx.boundaries.iter().map(IntMatrix::invariant_factors).collect();
    let groups = (0..n)
        .map(|i| {
            let out_rank = if i == 0 { 0 } else { factors[i - 1].len() };
            let (in_rank, torsion) = match factors.get(i) {
                Some(f) => (f.len(), f.iter().copied().filter(|&x| x > 1).collect()),
                None => (0, Vec::new()),
            };
            HomGroup { betti: cx.ranks[i] - out_rank - in_rank, torsion }
        })
        .collect();
    GradedHom::new(groups)
}
