//! Compositions, multiset words, permutations, partitions, standard Young
//! tableaux, lattice paths, and their descent / major index statistics.
//!
//! Positions are 1-indexed throughout: position i is a descent of the word
//! w when w[i] > w[i+1] (reading letters at positions i and i+1).

use serde::Serialize;

use crate::error::{Error, Result};

/// A composition of n: an ordered sequence of positive parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Composition {
    parts: Vec<usize>,
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::BadInput("composition needs at least one part".into()));
        }
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::BadInput("composition parts must be positive".into()));
        }
        Ok(Composition { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn k(&self) -> usize {
        self.parts.len()
    }

    /// The consecutive index blocks {a_1+...+a_{i-1}+1, ..., a_1+...+a_i},
    /// returned 0-indexed as ranges over 0..n.
    pub fn blocks(&self) -> Vec<std::ops::Range<usize>> {
        let mut start = 0;
        self.parts
            .iter()
            .map(|&p| {
                let r = start..start + p;
                start += p;
                r
            })
            .collect()
    }

    /// True if all parts are equal (the rectangular case (m^k)).
    pub fn is_rectangular(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] == w[1])
    }

    pub fn ones(n: usize) -> Self {
        Composition { parts: vec![1; n] }
    }

    pub fn rectangular(m: usize, k: usize) -> Self {
        Composition { parts: vec![m; k] }
    }

    /// n! / (a_1! ... a_k!) as an exact integer.
    pub fn multinomial(&self) -> u128 {
        let mut value: u128 = 1;
        let mut seen = 0usize;
        for &p in &self.parts {
            for j in 1..=p {
                seen += 1;
                value = value * seen as u128 / j as u128;
            }
        }
        value
    }

    pub fn display(&self) -> String {
        self.parts
            .iter()
            .map(usize::to_string)
            .collect::<Vec<_>>()
            .join(",")
    }
}

/// All compositions of n in lexicographic order (2^{n-1} of them).
pub fn enumerate_compositions(n: usize) -> Vec<Composition> {
    assert!(n >= 1);
    let mut out = Vec::new();
    let mut prefix = Vec::new();
    fn rec(rem: usize, prefix: &mut Vec<usize>, out: &mut Vec<Composition>) {
        if rem == 0 {
            out.push(Composition {
                parts: prefix.clone(),
            });
            return;
        }
        for p in 1..=rem {
            prefix.push(p);
            rec(rem - p, prefix, out);
            prefix.pop();
        }
    }
    rec(n, &mut prefix, &mut out);
    out
}

/// All partitions of n, largest-part-first order: (n), ..., (1^n).
pub fn enumerate_partitions(n: usize) -> Vec<Vec<usize>> {
    assert!(n >= 1);
    let mut out = Vec::new();
    let mut prefix = Vec::new();
    fn rec(rem: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rem == 0 {
            out.push(prefix.clone());
            return;
        }
        for p in (1..=rem.min(max)).rev() {
            prefix.push(p);
            rec(rem - p, p, prefix, out);
            prefix.pop();
        }
    }
    rec(n, n, &mut prefix, &mut out);
    out
}

/// A full-length word in the multiset {1^{a_1}, ..., k^{a_k}}.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    letters: Vec<usize>,
}

impl Word {
    pub fn new(letters: Vec<usize>, alpha: &Composition) -> Result<Self> {
        let mut counts = vec![0usize; alpha.k()];
        for &l in &letters {
            if l == 0 || l > alpha.k() {
                return Err(Error::BadInput(format!("letter {l} out of range")));
            }
            counts[l - 1] += 1;
        }
        if counts != alpha.parts() {
            return Err(Error::BadInput(
                "letter multiplicities do not match the composition".into(),
            ));
        }
        Ok(Word { letters })
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Descent positions (1-indexed): i with w[i] > w[i+1].
    pub fn descent_set(&self) -> Vec<usize> {
        (1..self.letters.len())
            .filter(|&i| self.letters[i - 1] > self.letters[i])
            .collect()
    }

    pub fn des(&self) -> usize {
        self.descent_set().len()
    }

    pub fn maj(&self) -> usize {
        self.descent_set().iter().sum()
    }

    /// Digit-string form, e.g. "211".
    pub fn display(&self) -> String {
        self.letters.iter().map(usize::to_string).collect()
    }
}

/// All words of W_alpha in lexicographic order.
pub fn enumerate_words(alpha: &Composition) -> Vec<Word> {
    let mut out = Vec::new();
    let mut counts: Vec<usize> = alpha.parts().to_vec();
    let mut prefix = Vec::with_capacity(alpha.n());
    fn rec(
        counts: &mut Vec<usize>,
        prefix: &mut Vec<usize>,
        n: usize,
        out: &mut Vec<Word>,
    ) {
        if prefix.len() == n {
            out.push(Word {
                letters: prefix.clone(),
            });
            return;
        }
        for letter in 0..counts.len() {
            if counts[letter] > 0 {
                counts[letter] -= 1;
                prefix.push(letter + 1);
                rec(counts, prefix, n, out);
                prefix.pop();
                counts[letter] += 1;
            }
        }
    }
    rec(&mut counts, &mut prefix, alpha.n(), &mut out);
    out
}

/// An increasing lattice path from the origin to (a_1, ..., a_k).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticePath {
    points: Vec<Vec<usize>>,
}

impl LatticePath {
    pub fn points(&self) -> &[Vec<usize>] {
        &self.points
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!(self.points)
    }
}

/// The bijection from words to increasing lattice paths: step i moves one
/// unit in the direction of the i-th letter.
pub fn word_to_path(w: &Word, k: usize) -> LatticePath {
    let mut points = Vec::with_capacity(w.len() + 1);
    let mut cur = vec![0usize; k];
    points.push(cur.clone());
    for &letter in w.letters() {
        cur[letter - 1] += 1;
        points.push(cur.clone());
    }
    LatticePath { points }
}

/// Inverse of `word_to_path`.
pub fn path_to_word(p: &LatticePath, alpha: &Composition) -> Result<Word> {
    let mut letters = Vec::with_capacity(p.points.len().saturating_sub(1));
    for step in p.points.windows(2) {
        let diffs: Vec<usize> = (0..step[0].len())
            .filter(|&j| step[1][j] != step[0][j])
            .collect();
        if diffs.len() != 1 || step[1][diffs[0]] != step[0][diffs[0]] + 1 {
            return Err(Error::BadInput("path step is not a unit step".into()));
        }
        letters.push(diffs[0] + 1);
    }
    Word::new(letters, alpha)
}

/// The lattice points l(i) for descent positions i of the word.
pub fn path_descent_points(w: &Word, k: usize) -> Vec<Vec<usize>> {
    let path = word_to_path(w, k);
    w.descent_set()
        .iter()
        .map(|&i| path.points()[i].clone())
        .collect()
}

/// A standard Young tableau: rows strictly increase left-to-right and
/// top-to-bottom, entries are exactly 1..n.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tableau {
    rows: Vec<Vec<usize>>,
}

impl Tableau {
    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn shape(&self) -> Vec<usize> {
        self.rows.iter().map(Vec::len).collect()
    }

    /// Row (0-indexed) containing the entry v.
    fn row_of(&self, v: usize) -> usize {
        self.rows
            .iter()
            .position(|r| r.contains(&v))
            .expect("entry present in tableau")
    }

    /// Descents: i such that i+1 appears in a strictly lower row than i.
    pub fn descent_set(&self) -> Vec<usize> {
        let n: usize = self.rows.iter().map(Vec::len).sum();
        (1..n)
            .filter(|&i| self.row_of(i + 1) > self.row_of(i))
            .collect()
    }

    pub fn des(&self) -> usize {
        self.descent_set().len()
    }

    pub fn maj(&self) -> usize {
        self.descent_set().iter().sum()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!(self.rows)
    }
}

/// All standard Young tableaux of the given shape, with their (des, maj).
pub fn enumerate_syt(lambda: &[usize]) -> Vec<(Tableau, usize, usize)> {
    assert!(!lambda.is_empty());
    assert!(
        lambda.windows(2).all(|w| w[0] >= w[1]) && *lambda.last().unwrap() >= 1,
        "shape must be a partition"
    );
    let n: usize = lambda.iter().sum();
    let mut rows: Vec<Vec<usize>> = vec![Vec::new(); lambda.len()];
    let mut out = Vec::new();
    fn rec(
        entry: usize,
        n: usize,
        lambda: &[usize],
        rows: &mut Vec<Vec<usize>>,
        out: &mut Vec<(Tableau, usize, usize)>,
    ) {
        if entry > n {
            let t = Tableau { rows: rows.clone() };
            let des = t.des();
            let maj = t.maj();
            out.push((t, des, maj));
            return;
        }
        for r in 0..lambda.len() {
            let filled = rows[r].len();
            if filled < lambda[r] && (r == 0 || rows[r - 1].len() > filled) {
                rows[r].push(entry);
                rec(entry + 1, n, lambda, rows, out);
                rows[r].pop();
            }
        }
    }
    rec(1, n, lambda, &mut rows, &mut out);
    out
}

/// A permutation of {0, ..., n-1}, stored as its image vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Perm {
    images: Vec<usize>,
}

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm {
            images: (0..n).collect(),
        }
    }

    pub fn from_images(images: Vec<usize>) -> Self {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            assert!(i < images.len() && !seen[i], "not a permutation");
            seen[i] = true;
        }
        Perm { images }
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn inverse(&self) -> Perm {
        let mut images = vec![0; self.images.len()];
        for (i, &j) in self.images.iter().enumerate() {
            images[j] = i;
        }
        Perm { images }
    }

    /// Cycle type as a partition (descending).
    pub fn cycle_type(&self) -> Vec<usize> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut cycles = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut cur = start;
            while !seen[cur] {
                seen[cur] = true;
                cur = self.images[cur];
                len += 1;
            }
            cycles.push(len);
        }
        cycles.sort_unstable_by(|a, b| b.cmp(a));
        cycles
    }

    /// The canonical permutation with the given cycle type, built from
    /// consecutive cycles.
    pub fn from_cycle_type(mu: &[usize]) -> Perm {
        let n: usize = mu.iter().sum();
        let mut images = vec![0; n];
        let mut start = 0;
        for &len in mu {
            for off in 0..len {
                images[start + off] = start + (off + 1) % len;
            }
            start += len;
        }
        Perm { images }
    }
}

/// All permutations of {0, ..., n-1} in lexicographic order of image vectors.
pub fn enumerate_perms(n: usize) -> Vec<Perm> {
    let mut out = Vec::new();
    let mut images = Vec::with_capacity(n);
    let mut used = vec![false; n];
    fn rec(n: usize, images: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Perm>) {
        if images.len() == n {
            out.push(Perm {
                images: images.clone(),
            });
            return;
        }
        for i in 0..n {
            if !used[i] {
                used[i] = true;
                images.push(i);
                rec(n, images, used, out);
                images.pop();
                used[i] = false;
            }
        }
    }
    rec(n, &mut images, &mut used, &mut out);
    out
}

/// All elements of the Young subgroup S_alpha inside S_n, permuting each
/// consecutive block independently.
pub fn young_subgroup_elements(alpha: &Composition) -> Vec<Perm> {
    let n = alpha.n();
    let blocks = alpha.blocks();
    let mut elements = vec![Perm::identity(n)];
    for block in blocks {
        let block_indices: Vec<usize> = block.collect();
        let block_perms = enumerate_perms(block_indices.len());
        let mut next = Vec::with_capacity(elements.len() * block_perms.len());
        for base in &elements {
            for bp in &block_perms {
                let mut images = base.images.clone();
                for (off, &i) in block_indices.iter().enumerate() {
                    images[i] = block_indices[bp.apply(off)];
                }
                next.push(Perm { images });
            }
        }
        elements = next;
    }
    elements
}
