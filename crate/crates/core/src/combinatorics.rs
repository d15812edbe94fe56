//! Bisequences, bipermutations and bisubsets of `[n]`, their descent
//! statistics, the signed-word bijection, the multigraph encoding of faces,
//! and the reading map from planar point configurations.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Sub};

use crate::error::BisequenceError;
use crate::sets::{ElementSet, MAX_ELEMENTS};

/// `(2n)! / 2^n`, the number of bipermutations of `[n]`.
pub fn bipermutation_count(n: usize) -> u128 {
    (1..=2 * n as u128).product::<u128>() >> n
}

/// An ordered sequence of nonempty subsets of `[n]` in which every element
/// occurs in one or two parts and at least one element occurs exactly once.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Bisequence {
    n: usize,
    parts: Vec<ElementSet>,
}

impl Bisequence {
    /// Validates `parts` against the bisequence axioms. Never normalizes.
    pub fn new(parts: Vec<ElementSet>, n: usize) -> Result<Self, BisequenceError> {
        if parts.is_empty() {
            return Err(BisequenceError::NoParts);
        }
        if n > MAX_ELEMENTS {
            return Err(BisequenceError::ElementOutOfRange { element: n, n: MAX_ELEMENTS });
        }
        let ground = ElementSet::full(n);
        let mut counts = vec![0usize; n + 1];
        for (index, part) in parts.iter().enumerate() {
            if part.is_empty() {
                return Err(BisequenceError::EmptyPart { index });
            }
            if !part.is_subset(ground) {
                let element = part.difference(ground).iter().next().unwrap_or(0);
                return Err(BisequenceError::ElementOutOfRange { element, n });
            }
            for e in part.iter() {
                counts[e] += 1;
            }
        }
        if let Some(element) = (1..=n).find(|&e| counts[e] > 2) {
            return Err(BisequenceError::ElementTriple { element });
        }
        if let Some(element) = (1..=n).find(|&e| counts[e] == 0) {
            return Err(BisequenceError::ElementMissing { element });
        }
        if !(1..=n).any(|e| counts[e] == 1) {
            return Err(BisequenceError::NoSingleOccurrence);
        }
        Ok(Bisequence { n, parts })
    }

    /// Parses the `"23|124"` text form: parts separated by `|`, each part its
    /// elements written as increasing decimal digits.
    pub fn parse(text: &str, n: usize) -> Result<Self, BisequenceError> {
        let bad = |reason: &str| BisequenceError::Parse { input: text.to_string(), reason: reason.to_string() };
        if text.is_empty() {
            return Err(bad("empty input"));
        }
        let mut parts = Vec::new();
        for chunk in text.split('|') {
            if chunk.is_empty() {
                return Err(bad("empty part"));
            }
            let mut set = ElementSet::EMPTY;
            let mut last = 0;
            for c in chunk.chars() {
                let d = c.to_digit(10).ok_or_else(|| bad("parts must consist of digits 1-9"))? as usize;
                if d == 0 {
                    return Err(bad("element 0 is not in the ground set"));
                }
                if d <= last {
                    return Err(bad("elements within a part must be strictly increasing"));
                }
                last = d;
                set.insert(d);
            }
            parts.push(set);
        }
        Bisequence::new(parts, n)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn parts(&self) -> &[ElementSet] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Number of parts containing `element`.
    pub fn occurrences(&self, element: usize) -> usize {
        self.parts.iter().filter(|p| p.contains(element)).count()
    }

    /// Elements that appear in exactly one part.
    pub fn once_elements(&self) -> ElementSet {
        (1..=self.n).filter(|&e| self.occurrences(e) == 1).collect()
    }

    /// Total number of letters, counted with multiplicity.
    pub fn letter_count(&self) -> usize {
        self.parts.iter().map(|p| p.len()).sum()
    }

    /// The two-part coarsenings `B_1…B_j | B_{j+1}…B_m`, in split order.
    pub fn splits(&self) -> Vec<Bisubset> {
        (1..self.parts.len())
            .map(|j| {
                let left = self.parts[..j].iter().fold(ElementSet::EMPTY, |a, &p| a.union(p));
                let right = self.parts[j..].iter().fold(ElementSet::EMPTY, |a, &p| a.union(p));
                Bisubset { left, right }
            })
            .collect()
    }

    /// Whether `self` is obtained from `finer` by merging runs of adjacent parts.
    pub fn is_coarsening_of(&self, finer: &Bisequence) -> bool {
        fn fits(coarse: &[ElementSet], fine: &[ElementSet]) -> bool {
            match coarse.split_first() {
                None => fine.is_empty(),
                Some((&target, rest)) => {
                    let mut acc = ElementSet::EMPTY;
                    for (used, &p) in fine.iter().enumerate() {
                        acc = acc.union(p);
                        if !acc.is_subset(target) {
                            return false;
                        }
                        if acc == target && fits(rest, &fine[used + 1..]) {
                            return true;
                        }
                    }
                    false
                }
            }
        }
        self.n == finer.n && self.len() <= finer.len() && fits(&self.parts, &finer.parts)
    }

    /// The bipermutation with the same letters, when every part is a singleton
    /// and there are `2n - 1` of them.
    pub fn as_bipermutation(&self) -> Option<Bipermutation> {
        if self.parts.len() != 2 * self.n - 1 || self.parts.iter().any(|p| p.len() != 1) {
            return None;
        }
        let letters = self.parts.iter().map(|p| p.max_element().unwrap_or(0) as u8).collect();
        Bipermutation::from_letters(letters).ok()
    }

    /// The multigraph on `len() + 1` vertices whose edge `e` joins the two
    /// parts of `o(B)` containing `e`, where `o(B)` appends a final part made
    /// of the once-appearing elements.
    pub fn to_multigraph(&self) -> Multigraph {
        let d = self.parts.len() + 1;
        let mut extended = self.parts.clone();
        extended.push(self.once_elements());
        let edges = (1..=self.n)
            .map(|e| {
                let mut ends = extended.iter().enumerate().filter(|(_, p)| p.contains(e)).map(|(i, _)| i + 1);
                let a = ends.next().expect("every element occurs");
                let b = ends.next().expect("o(B) holds every element twice");
                (a, b)
            })
            .collect();
        Multigraph { d, edges }
    }
}

impl fmt::Display for Bisequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str("|")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Bisequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Bisequence({self})")
    }
}

/// All bisequences of `[n]`, optionally restricted to a given number of
/// parts, in lexicographic order of their part bitmasks.
pub fn enumerate_bisequences(n: usize, parts: Option<usize>) -> Vec<Bisequence> {
    let mut out = Vec::new();
    if n == 0 {
        return out;
    }
    let max_len = 2 * n - 1;
    let (min_len, max_len) = match parts {
        Some(m) if m == 0 || m > max_len => return out,
        Some(m) => (m, m),
        None => (1, max_len),
    };
    let mut counts = vec![0u8; n + 1];
    let mut stack = Vec::new();
    grow(n, min_len, max_len, &mut counts, &mut stack, &mut out);
    out
}

fn grow(
    n: usize,
    min_len: usize,
    max_len: usize,
    counts: &mut [u8],
    stack: &mut Vec<ElementSet>,
    out: &mut Vec<Bisequence>,
) {
    let len = stack.len();
    if len >= min_len && (1..=n).all(|e| counts[e] >= 1) && (1..=n).any(|e| counts[e] == 1) {
        out.push(Bisequence { n, parts: stack.clone() });
    }
    if len == max_len {
        return;
    }
    // Every further part consumes at least one letter, and at least one
    // element must keep a count of one at the end.
    let spare: usize = (1..=n).map(|e| 2 - counts[e] as usize).sum();
    let remaining_parts_needed = min_len.saturating_sub(len + 1);
    for bits in 1u32..(1u32 << n) {
        let part = ElementSet::from_bits(bits);
        if part.iter().any(|e| counts[e] == 2) {
            continue;
        }
        if spare < part.len() + remaining_parts_needed + 1 {
            continue;
        }
        for e in part.iter() {
            counts[e] += 1;
        }
        stack.push(part);
        grow(n, min_len, max_len, counts, stack, out);
        stack.pop();
        for e in part.iter() {
            counts[e] -= 1;
        }
    }
}

/// A two-part bisequence `S|T`: `S ∪ T = [n]`, both nonempty, `S ≠ T`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Bisubset {
    left: ElementSet,
    right: ElementSet,
}

impl Bisubset {
    pub fn new(left: ElementSet, right: ElementSet, n: usize) -> Result<Self, BisequenceError> {
        Bisequence::new(vec![left, right], n)?;
        Ok(Bisubset { left, right })
    }

    pub fn parse(text: &str, n: usize) -> Result<Self, BisequenceError> {
        let b = Bisequence::parse(text, n)?;
        if b.len() != 2 {
            return Err(BisequenceError::Parse {
                input: text.to_string(),
                reason: "a bisubset has exactly two parts".into(),
            });
        }
        Ok(Bisubset { left: b.parts[0], right: b.parts[1] })
    }

    pub fn left(&self) -> ElementSet {
        self.left
    }

    pub fn right(&self) -> ElementSet {
        self.right
    }

    /// `T|S`.
    #[must_use]
    pub fn swapped(&self) -> Bisubset {
        Bisubset { left: self.right, right: self.left }
    }

    /// Simultaneous relabelling `i ↦ perm[i - 1]` of both sides.
    #[must_use]
    pub fn relabel(&self, perm: &[usize]) -> Bisubset {
        Bisubset { left: self.left.relabel(perm), right: self.right.relabel(perm) }
    }
}

impl fmt::Display for Bisubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}|{}", self.left, self.right)
    }
}

impl fmt::Debug for Bisubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Bisubset({self})")
    }
}

/// All `3^n - 3` bisubsets of `[n]`, sorted by `(S, T)` bitmasks.
pub fn all_bisubsets(n: usize) -> Vec<Bisubset> {
    let full = ElementSet::full(n);
    let mut out = Vec::new();
    for s in 1..=full.bits() {
        let left = ElementSet::from_bits(s);
        if !left.is_subset(full) {
            continue;
        }
        // T must contain E - S; any subset of S may be added.
        let forced = full.difference(left);
        let mut extra = left.bits();
        loop {
            let right = forced.union(ElementSet::from_bits(extra));
            if !right.is_empty() && right != left {
                out.push(Bisubset { left, right });
            }
            if extra == 0 {
                break;
            }
            extra = (extra - 1) & left.bits();
        }
    }
    out.sort();
    out
}

/// Which occurrence of its element a letter of a bipermutation is.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Occurrence {
    First,
    Second,
    /// The non-repeated element `k(B)`.
    Single,
}

/// A sequence of `2n - 1` elements of `[n]` in which one element appears
/// once and every other element twice. Stored as its raw letters.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Bipermutation {
    letters: Vec<u8>,
}

impl Bipermutation {
    pub fn from_letters(letters: Vec<u8>) -> Result<Self, BisequenceError> {
        if letters.is_empty() || letters.len().is_multiple_of(2) {
            let n = letters.len().div_ceil(2).max(1);
            return Err(BisequenceError::WrongLength { n, expected: 2 * n - 1, got: letters.len() });
        }
        let n = letters.len().div_ceil(2);
        if n > MAX_ELEMENTS {
            return Err(BisequenceError::ElementOutOfRange { element: n, n: MAX_ELEMENTS });
        }
        let mut counts = vec![0usize; n + 1];
        for &l in &letters {
            let e = l as usize;
            if e == 0 || e > n {
                return Err(BisequenceError::ElementOutOfRange { element: e, n });
            }
            counts[e] += 1;
        }
        if let Some(element) = (1..=n).find(|&e| counts[e] > 2) {
            return Err(BisequenceError::ElementTriple { element });
        }
        if let Some(element) = (1..=n).find(|&e| counts[e] == 0) {
            return Err(BisequenceError::ElementMissing { element });
        }
        Ok(Bipermutation { letters })
    }

    /// Parses `"2|3|4|2|4|1|1"`. Multi-digit elements are allowed here since
    /// every part is a single letter.
    pub fn parse(text: &str) -> Result<Self, BisequenceError> {
        let letters = text
            .split('|')
            .map(|t| {
                t.trim().parse::<u8>().map_err(|_| BisequenceError::Parse {
                    input: text.to_string(),
                    reason: format!("{t:?} is not an element"),
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        Bipermutation::from_letters(letters)
    }

    pub fn n(&self) -> usize {
        self.letters.len().div_ceil(2)
    }

    pub fn letters(&self) -> &[u8] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// The element `k(B)` that appears exactly once.
    pub fn k(&self) -> usize {
        let n = self.n();
        let mut counts = vec![0u8; n + 1];
        for &l in &self.letters {
            counts[l as usize] += 1;
        }
        (1..=n).find(|&e| counts[e] == 1).expect("validated bipermutation")
    }

    /// Occurrence marks for each letter (first `i`, second `ī`, or `k`).
    pub fn occurrences(&self) -> Vec<Occurrence> {
        let k = self.k();
        let mut seen = vec![false; self.n() + 1];
        self.letters
            .iter()
            .map(|&l| {
                let e = l as usize;
                if e == k {
                    Occurrence::Single
                } else if seen[e] {
                    Occurrence::Second
                } else {
                    seen[e] = true;
                    Occurrence::First
                }
            })
            .collect()
    }

    #[must_use]
    pub fn reverse(&self) -> Bipermutation {
        Bipermutation { letters: self.letters.iter().rev().copied().collect() }
    }

    /// Relabels letters by `i ↦ perm[i - 1]`.
    #[must_use]
    pub fn relabel(&self, perm: &[usize]) -> Bipermutation {
        Bipermutation { letters: self.letters.iter().map(|&l| perm[l as usize - 1] as u8).collect() }
    }

    pub fn to_bisequence(&self) -> Bisequence {
        Bisequence { n: self.n(), parts: self.letters.iter().map(|&l| ElementSet::singleton(l as usize)).collect() }
    }

    /// The `2n - 2` prefix/suffix splits `b_1…b_j | b_{j+1}…b_{2n-1}`.
    pub fn bisubsets(&self) -> Vec<Bisubset> {
        let m = self.letters.len();
        let mut prefix = Vec::with_capacity(m);
        let mut acc = ElementSet::EMPTY;
        for &l in &self.letters {
            acc.insert(l as usize);
            prefix.push(acc);
        }
        let mut suffix = vec![ElementSet::EMPTY; m];
        let mut acc = ElementSet::EMPTY;
        for j in (0..m).rev() {
            acc.insert(self.letters[j] as usize);
            suffix[j] = acc;
        }
        (1..m).map(|j| Bisubset { left: prefix[j - 1], right: suffix[j] }).collect()
    }

    /// Per-position descent flags for the `2n - 2` adjacent pairs.
    pub fn descent_flags(&self) -> Vec<bool> {
        let k = self.k();
        let occ = self.occurrences();
        (0..self.letters.len().saturating_sub(1))
            .map(|h| {
                let (i, j) = (self.letters[h] as usize, self.letters[h + 1] as usize);
                // k is read as unbarred next to an unbarred letter and as
                // barred next to a barred one.
                let barred = |o: Occurrence, other: Occurrence| match o {
                    Occurrence::First => false,
                    Occurrence::Second => true,
                    Occurrence::Single => other == Occurrence::Second,
                };
                let bi = barred(occ[h], occ[h + 1]);
                let bj = barred(occ[h + 1], occ[h]);
                match (bi, bj) {
                    (false, false) => i > j,
                    (true, true) => i < j,
                    (false, true) => i > k,
                    (true, false) => j < k,
                }
            })
            .collect()
    }

    pub fn descents(&self) -> usize {
        self.descent_flags().into_iter().filter(|&d| d).count()
    }

    pub fn ascents(&self) -> usize {
        self.descent_flags().into_iter().filter(|&d| !d).count()
    }

    /// The bijection `π(B)` from `E ∪ Ē` to the odd integers in
    /// `[-(2n-1), 2n-1]`, reading `k` as `k k̄`.
    pub fn signed_word(&self) -> SignedWord {
        let n = self.n();
        let mut unbarred = vec![0i64; n];
        let mut barred = vec![0i64; n];
        let mut next = -(2 * n as i64 - 1);
        for (&l, o) in self.letters.iter().zip(self.occurrences()) {
            let e = l as usize - 1;
            match o {
                Occurrence::First => {
                    unbarred[e] = next;
                    next += 2;
                }
                Occurrence::Second => {
                    barred[e] = next;
                    next += 2;
                }
                Occurrence::Single => {
                    unbarred[e] = next;
                    barred[e] = next + 2;
                    next += 4;
                }
            }
        }
        SignedWord { unbarred, barred }
    }

    /// The `2n - 2` neighbouring bipermutations across the edges at `v_B`:
    /// adjacent distinct letters are swapped, and a doubled pair `i|i` is
    /// collapsed while `k` is doubled in place.
    pub fn neighbors(&self) -> Vec<Bipermutation> {
        let k = self.k() as u8;
        (0..self.letters.len() - 1)
            .map(|h| {
                let (i, j) = (self.letters[h], self.letters[h + 1]);
                if i != j {
                    let mut letters = self.letters.clone();
                    letters.swap(h, h + 1);
                    Bipermutation { letters }
                } else {
                    let mut letters = Vec::with_capacity(self.letters.len());
                    for (p, &l) in self.letters.iter().enumerate() {
                        if p == h + 1 {
                            continue;
                        }
                        letters.push(l);
                        if l == k {
                            letters.push(k);
                        }
                    }
                    Bipermutation { letters }
                }
            })
            .collect()
    }
}

impl fmt::Display for Bipermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                f.write_str("|")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Bipermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Bipermutation({self})")
    }
}

/// The signed word `π(B)`: values of the letters `i` and `ī`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignedWord {
    unbarred: Vec<i64>,
    barred: Vec<i64>,
}

impl SignedWord {
    pub fn n(&self) -> usize {
        self.unbarred.len()
    }

    /// `π(i)`.
    pub fn unbarred(&self, i: usize) -> i64 {
        self.unbarred[i - 1]
    }

    /// `π(ī)`.
    pub fn barred(&self, i: usize) -> i64 {
        self.barred[i - 1]
    }

    /// `x_i = π(i)`.
    pub fn x(&self) -> &[i64] {
        &self.unbarred
    }

    /// `y_i = -π(ī)`.
    pub fn y(&self) -> Vec<i64> {
        self.barred.iter().map(|v| -v).collect()
    }

    /// `s_π = Σ x_i = Σ y_i`.
    pub fn s(&self) -> i64 {
        self.unbarred.iter().sum()
    }
}

/// Lexicographic stream of the bipermutations of `[n]`.
///
/// A word of length `2n - 1` over `[n]` in which no letter occurs three
/// times is automatically a bipermutation, so the stream is the
/// lexicographic walk over such words.
pub struct BipermutationIter {
    n: usize,
    word: Vec<u8>,
    counts: Vec<u8>,
    fixed: usize,
    state: IterState,
}

#[derive(PartialEq, Eq)]
enum IterState {
    Fresh,
    Running,
    Done,
}

impl BipermutationIter {
    /// Bipermutations starting with `prefix`; the full stream when empty.
    pub fn with_prefix(n: usize, prefix: &[u8]) -> Self {
        let mut it = BipermutationIter {
            n,
            word: prefix.to_vec(),
            counts: vec![0; n + 1],
            fixed: prefix.len(),
            state: IterState::Fresh,
        };
        let len = (2 * n).saturating_sub(1);
        let prefix_ok = n > 0
            && prefix.len() <= len
            && prefix.iter().all(|&l| {
                let e = l as usize;
                if e == 0 || e > n {
                    return false;
                }
                it.counts[e] += 1;
                it.counts[e] <= 2
            });
        if !prefix_ok {
            it.state = IterState::Done;
            return it;
        }
        it.fill();
        it
    }

    fn fill(&mut self) {
        let len = 2 * self.n - 1;
        while self.word.len() < len {
            let e = (1..=self.n).find(|&e| self.counts[e] < 2).expect("capacity 2n exceeds 2n-1");
            self.counts[e] += 1;
            self.word.push(e as u8);
        }
    }

    fn advance(&mut self) -> bool {
        while self.word.len() > self.fixed {
            let last = self.word.pop().expect("nonempty") as usize;
            self.counts[last] -= 1;
            if let Some(e) = (last + 1..=self.n).find(|&e| self.counts[e] < 2) {
                self.counts[e] += 1;
                self.word.push(e as u8);
                self.fill();
                return true;
            }
        }
        false
    }
}

impl Iterator for BipermutationIter {
    type Item = Bipermutation;

    fn next(&mut self) -> Option<Bipermutation> {
        match self.state {
            IterState::Done => return None,
            IterState::Fresh => self.state = IterState::Running,
            IterState::Running => {
                if !self.advance() {
                    self.state = IterState::Done;
                    return None;
                }
            }
        }
        Some(Bipermutation { letters: self.word.clone() })
    }
}

/// Every bipermutation of `[n]` exactly once, in lexicographic order.
/// Empty for `n = 0`.
pub fn enumerate_bipermutations(n: usize) -> BipermutationIter {
    BipermutationIter::with_prefix(n, &[])
}

/// A loopless multigraph on vertices `1..=d` whose edge `e` (for `e` in
/// `1..=n`) joins `edges[e - 1]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Multigraph {
    pub d: usize,
    pub edges: Vec<(usize, usize)>,
}

/// Why a multigraph does not encode a bisequence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MultigraphError {
    Loop { edge: usize },
    VertexOutOfRange { edge: usize },
    IsolatedVertex { vertex: usize },
    TooFewVertices,
}

impl Multigraph {
    pub fn has_isolated_vertex(&self) -> bool {
        (1..=self.d).any(|v| !self.edges.iter().any(|&(a, b)| a == v || b == v))
    }

    /// Inverse of [`Bisequence::to_multigraph`].
    pub fn to_bisequence(&self) -> Result<Bisequence, MultigraphError> {
        if self.d < 2 {
            return Err(MultigraphError::TooFewVertices);
        }
        for (idx, &(a, b)) in self.edges.iter().enumerate() {
            if a == b {
                return Err(MultigraphError::Loop { edge: idx + 1 });
            }
            if a == 0 || b == 0 || a > self.d || b > self.d {
                return Err(MultigraphError::VertexOutOfRange { edge: idx + 1 });
            }
        }
        if let Some(vertex) = (1..=self.d).find(|&v| !self.edges.iter().any(|&(a, b)| a == v || b == v)) {
            return Err(MultigraphError::IsolatedVertex { vertex });
        }
        let parts = (1..self.d)
            .map(|v| {
                self.edges
                    .iter()
                    .enumerate()
                    .filter(|(_, &(a, b))| a == v || b == v)
                    .map(|(e, _)| e + 1)
                    .collect::<ElementSet>()
            })
            .collect();
        Ok(Bisequence::new(parts, self.edges.len()).expect("multigraph without isolated vertices encodes a bisequence"))
    }
}

/// Reads the bisequence of the point configuration `p_i = (z_i, w_i)`.
///
/// With `c = min_i (z_i + w_i)`, each point contributes the labels
/// `(z_i, i)` and `(c - w_i, i)` (a single label when they coincide);
/// labels with equal keys form a part and parts are listed by decreasing key.
pub fn bisequence_of_configuration<T>(z: &[T], w: &[T]) -> Bisequence
where
    T: Clone + Ord + Add<Output = T> + Sub<Output = T>,
{
    assert_eq!(z.len(), w.len(), "configuration coordinates must have equal length");
    let n = z.len();
    assert!(n >= 1, "configuration needs at least one point");
    let c = (0..n).map(|i| z[i].clone() + w[i].clone()).min().expect("nonempty");
    let mut groups: BTreeMap<T, ElementSet> = BTreeMap::new();
    for i in 0..n {
        groups.entry(z[i].clone()).or_default().insert(i + 1);
        groups.entry(c.clone() - w[i].clone()).or_default().insert(i + 1);
    }
    let parts = groups.into_values().rev().collect();
    Bisequence::new(parts, n).expect("configuration readings satisfy the bisequence axioms")
}
