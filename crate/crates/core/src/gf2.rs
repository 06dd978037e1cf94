//! Linear algebra over the two-element field.
//!
//! [`BitVector`] is a packed 0/1 vector; [`BinarySpace`] is a subspace of
//! `{0,1}^n` kept as a fully reduced row-echelon basis, so two spaces are
//! equal exactly when their bases are equal.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

const WORD: usize = 64;

/// A 0/1 vector of fixed width, coordinates indexed from zero.
///
/// Ordering is lexicographic on the 0/1 string with coordinate 0 leftmost,
/// so `000 < 011 < 101 < 110`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitVector {
    width: usize,
    words: Vec<u64>,
}

impl BitVector {
    pub fn zeros(width: usize) -> Self {
        Self {
            width,
            words: vec![0; width.div_ceil(WORD)],
        }
    }

    pub fn ones(width: usize) -> Self {
        let mut v = Self::zeros(width);
        for w in v.words.iter_mut() {
            *w = u64::MAX;
        }
        v.mask_tail();
        v
    }

    pub fn unit(width: usize, index: usize) -> Self {
        let mut v = Self::zeros(width);
        v.set(index, true);
        v
    }

    /// Builds a vector from the indices of its 1-coordinates.
    pub fn from_indices(width: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        let mut v = Self::zeros(width);
        for i in indices {
            v.set(i, true);
        }
        v
    }

    pub fn from_bools(bits: &[bool]) -> Self {
        Self::from_indices(bits.len(), bits.iter().enumerate().filter(|(_, b)| **b).map(|(i, _)| i))
    }

    /// Parses a string of `0`/`1` characters.
    pub fn parse(s: &str) -> Option<Self> {
        let mut bits = Vec::with_capacity(s.len());
        for c in s.chars() {
            match c {
                '0' => bits.push(false),
                '1' => bits.push(true),
                _ => return None,
            }
        }
        Some(Self::from_bools(&bits))
    }

    /// Low `width` bits of `bits`, coordinate `i` taken from bit `i`.
    pub fn from_u64(width: usize, bits: u64) -> Self {
        assert!(width <= WORD);
        let mut v = Self::zeros(width);
        if width > 0 {
            v.words[0] = bits;
            v.mask_tail();
        }
        v
    }

    fn mask_tail(&mut self) {
        let rem = self.width % WORD;
        if rem != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }

    #[inline]
    pub fn width(&self) -> usize {
        self.width
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        debug_assert!(i < self.width, "index {i} out of width {}", self.width);
        (self.words[i / WORD] >> (i % WORD)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, value: bool) {
        assert!(i < self.width, "index {i} out of width {}", self.width);
        let mask = 1u64 << (i % WORD);
        if value {
            self.words[i / WORD] |= mask;
        } else {
            self.words[i / WORD] &= !mask;
        }
    }

    #[inline]
    pub fn flip(&mut self, i: usize) {
        assert!(i < self.width);
        self.words[i / WORD] ^= 1u64 << (i % WORD);
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Smallest coordinate holding a 1.
    pub fn first_one(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(k, w)| k * WORD + w.trailing_zeros() as usize)
    }

    pub fn ones_iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(k, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let t = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(k * WORD + t)
                }
            })
        })
    }

    fn check_width(&self, other: &Self) {
        assert_eq!(self.width, other.width, "bit vector width mismatch");
    }

    pub fn xor_assign(&mut self, other: &Self) {
        self.check_width(other);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub fn and_assign(&mut self, other: &Self) {
        self.check_width(other);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub fn or_assign(&mut self, other: &Self) {
        self.check_width(other);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn xor(&self, other: &Self) -> Self {
        let mut v = self.clone();
        v.xor_assign(other);
        v
    }

    pub fn and(&self, other: &Self) -> Self {
        let mut v = self.clone();
        v.and_assign(other);
        v
    }

    pub fn or(&self, other: &Self) -> Self {
        let mut v = self.clone();
        v.or_assign(other);
        v
    }

    /// Coordinatewise complement.
    pub fn not(&self) -> Self {
        let mut v = self.clone();
        for w in v.words.iter_mut() {
            *w = !*w;
        }
        v.mask_tail();
        v
    }

    /// `self \ other`.
    pub fn and_not(&self, other: &Self) -> Self {
        self.check_width(other);
        let mut v = self.clone();
        for (a, b) in v.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
        v
    }

    pub fn is_subset_of(&self, other: &Self) -> bool {
        self.check_width(other);
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn intersects(&self, other: &Self) -> bool {
        self.check_width(other);
        self.words.iter().zip(&other.words).any(|(a, b)| a & b != 0)
    }

    pub fn intersection_size(&self, other: &Self) -> usize {
        self.check_width(other);
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    /// Inner product mod 2.
    pub fn dot(&self, other: &Self) -> bool {
        self.intersection_size(other) % 2 == 1
    }

    /// Restriction to the listed coordinates, in the listed order.
    pub fn project(&self, coords: &[usize]) -> Self {
        Self::from_indices(
            coords.len(),
            coords.iter().enumerate().filter(|(_, &c)| self.get(c)).map(|(i, _)| i),
        )
    }

    /// Places `self` into a vector of width `width`, coordinate `i` going to `coords[i]`.
    pub fn embed(&self, width: usize, coords: &[usize]) -> Self {
        assert_eq!(coords.len(), self.width);
        Self::from_indices(width, self.ones_iter().map(|i| coords[i]))
    }
}

impl Ord for BitVector {
    fn cmp(&self, other: &Self) -> Ordering {
        for (a, b) in self.words.iter().zip(&other.words) {
            let d = a ^ b;
            if d != 0 {
                let bit = d.trailing_zeros();
                return if (a >> bit) & 1 == 0 {
                    Ordering::Less
                } else {
                    Ordering::Greater
                };
            }
        }
        self.width.cmp(&other.width)
    }
}

impl PartialOrd for BitVector {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.width {
            f.write_str(if self.get(i) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitVector({self})")
    }
}

/// Default rank above which [`BinarySpace::points`] refuses to enumerate.
pub const DEFAULT_POINT_RANK_CAP: usize = 22;

/// A subspace of `{0,1}^width`.
///
/// The basis is in reduced row-echelon form: each row's pivot is its first
/// 1-coordinate, pivots strictly increase down the rows, and every pivot
/// column is zero outside its own row.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct BinarySpace {
    width: usize,
    basis: Vec<BitVector>,
}

impl BinarySpace {
    pub fn zero(width: usize) -> Self {
        Self { width, basis: Vec::new() }
    }

    pub fn full(width: usize) -> Self {
        Self {
            width,
            basis: (0..width).map(|i| BitVector::unit(width, i)).collect(),
        }
    }

    /// The GF(2) span of `generators`, all of which must have width `width`.
    pub fn span<'a>(width: usize, generators: impl IntoIterator<Item = &'a BitVector>) -> Result<Self> {
        let mut s = Self::zero(width);
        for g in generators {
            if g.width() != width {
                return Err(Error::WidthMismatch { expected: width, found: g.width() });
            }
            s.insert(g.clone());
        }
        Ok(s)
    }

    /// The space `{x : rows · x = 0}`.
    pub fn null_space<'a>(width: usize, rows: impl IntoIterator<Item = &'a BitVector>) -> Result<Self> {
        Ok(Self::span(width, rows)?.orthogonal_complement())
    }

    #[inline]
    pub fn width(&self) -> usize {
        self.width
    }

    #[inline]
    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[BitVector] {
        &self.basis
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.basis.iter().map(|r| r.first_one().expect("basis rows are nonzero")).collect()
    }

    /// Canonical coset representative of `v` modulo the space.
    pub fn reduce(&self, v: &BitVector) -> BitVector {
        let mut r = v.clone();
        for row in &self.basis {
            let p = row.first_one().expect("basis rows are nonzero");
            if r.get(p) {
                r.xor_assign(row);
            }
        }
        r
    }

    /// Adds `v` to the space; returns `false` when it was already a member.
    pub fn insert(&mut self, v: BitVector) -> bool {
        assert_eq!(v.width(), self.width, "bit vector width mismatch");
        let r = self.reduce(&v);
        let Some(p) = r.first_one() else {
            return false;
        };
        for row in self.basis.iter_mut() {
            if row.get(p) {
                row.xor_assign(&r);
            }
        }
        let at = self
            .basis
            .iter()
            .position(|row| row.first_one().unwrap() > p)
            .unwrap_or(self.basis.len());
        self.basis.insert(at, r);
        true
    }

    pub fn contains(&self, v: &BitVector) -> Result<bool> {
        if v.width() != self.width {
            return Err(Error::WidthMismatch { expected: self.width, found: v.width() });
        }
        Ok(self.reduce(v).is_zero())
    }

    /// `{y : y · x = 0 for all x in self}`.
    pub fn orthogonal_complement(&self) -> Self {
        let pivots = self.pivots();
        let mut is_pivot = vec![false; self.width];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut out = Self::zero(self.width);
        for f in (0..self.width).filter(|&c| !is_pivot[c]) {
            let mut y = BitVector::unit(self.width, f);
            for (row, &p) in self.basis.iter().zip(&pivots) {
                if row.get(f) {
                    y.set(p, true);
                }
            }
            out.insert(y);
        }
        out
    }

    pub fn is_subspace_of(&self, other: &Self) -> bool {
        self.width == other.width && self.basis.iter().all(|b| other.reduce(b).is_zero())
    }

    pub fn points(&self) -> Result<Vec<BitVector>> {
        self.points_capped(DEFAULT_POINT_RANK_CAP)
    }

    /// All `2^rank` points in increasing order.
    pub fn points_capped(&self, cap: usize) -> Result<Vec<BitVector>> {
        if self.rank() > cap {
            return Err(Error::CapExceeded { what: "point enumeration rank", size: self.rank(), cap });
        }
        let mut out = Vec::with_capacity(1 << self.rank());
        let mut cur = BitVector::zeros(self.width);
        out.push(cur.clone());
        // Gray code walk.
        for k in 1u64..(1u64 << self.rank()) {
            let flip = k.trailing_zeros() as usize;
            cur.xor_assign(&self.basis[flip]);
            out.push(cur.clone());
        }
        out.sort();
        Ok(out)
    }

    /// Restriction of the space to the listed coordinates.
    pub fn project(&self, coords: &[usize]) -> Self {
        let mut s = Self::zero(coords.len());
        for b in &self.basis {
            s.insert(b.project(coords));
        }
        s
    }

    /// The subspace of vectors vanishing on `coords`.
    pub fn vanishing_on(&self, coords: &[usize]) -> Self {
        let units: Vec<BitVector> = coords.iter().map(|&c| BitVector::unit(self.width, c)).collect();
        let mut dual = self.orthogonal_complement();
        for u in units {
            dual.insert(u);
        }
        dual.orthogonal_complement()
    }
}

impl fmt::Display for BinarySpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<")?;
        for (i, b) in self.basis.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{b}")?;
        }
        write!(f, "> in GF(2)^{}", self.width)
    }
}
