//! Dense permutations of `{0, …, n-1}`.
//!
//! The whole crate works with permutations stored as image arrays: `p[x]` is
//! the image of `x`.  Composition is written right-to-left, so
//! `p.compose(&q)` maps `x` to `p(q(x))`; with that convention the face
//! permutation of a map is `sigma.compose(&alpha)`.
//!
//! The one non-standard operation is [`Perm::restricted_to`]: erase all
//! elements outside a subset `S` from the cycle decomposition.  The result is
//! materialised on the full ground set (identity off `S`), which keeps every
//! permutation in a computation composable with every other.

use crate::{MapError, Result};
use std::fmt;

/// A permutation of `{0, …, n-1}` stored as its image array.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Perm {
    images: Vec<usize>,
}

impl Perm {
    /// The identity permutation on `n` elements.
    pub fn identity(n: usize) -> Perm {
        Perm {
            images: (0..n).collect(),
        }
    }

    /// Builds a permutation from its image array, checking bijectivity.
    pub fn from_images(images: Vec<usize>) -> Result<Perm> {
        let n = images.len();
        let mut seen = vec![false; n];
        for (at, &y) in images.iter().enumerate() {
            if y >= n || seen[y] {
                return Err(MapError::NotBijective { len: n, at });
            }
            seen[y] = true;
        }
        Ok(Perm { images })
    }

    /// Builds a permutation on `{0, …, n-1}` from a list of cycles.
    ///
    /// Elements not mentioned in any cycle are fixed.  Rejects out-of-range
    /// and repeated entries.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Perm> {
        let mut images: Vec<usize> = (0..n).collect();
        let mut seen = vec![false; n];
        for cycle in cycles {
            for &x in cycle {
                if x >= n {
                    return Err(MapError::CycleEntryOutOfRange { entry: x, n });
                }
                if seen[x] {
                    return Err(MapError::DuplicateCycleEntry(x));
                }
                seen[x] = true;
            }
            for (i, &x) in cycle.iter().enumerate() {
                images[x] = cycle[(i + 1) % cycle.len()];
            }
        }
        Ok(Perm { images })
    }

    /// The transposition swapping `a` and `b` on `n` elements.
    pub fn transposition(n: usize, a: usize, b: usize) -> Perm {
        assert!(a < n && b < n && a != b, "transposition needs two distinct in-range points");
        let mut images: Vec<usize> = (0..n).collect();
        images[a] = b;
        images[b] = a;
        Perm { images }
    }

    /// Size of the ground set.
    pub fn size(&self) -> usize {
        self.images.len()
    }

    /// True when the ground set is empty.
    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    /// Image of `x`.  Panics if `x` is out of range.
    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    /// The underlying image array.
    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// The inverse permutation.
    pub fn inverse(&self) -> Perm {
        let mut images = vec![0; self.size()];
        for (x, &y) in self.images.iter().enumerate() {
            images[y] = x;
        }
        Perm { images }
    }

    /// Right-to-left composition: `self.compose(&q)` maps `x` to `self(q(x))`.
    ///
    /// Panics if the ground sets differ in size.
    pub fn compose(&self, q: &Perm) -> Perm {
        assert_eq!(
            self.size(),
            q.size(),
            "cannot compose permutations on ground sets of different sizes"
        );
        let images = q.images.iter().map(|&y| self.images[y]).collect();
        Perm { images }
    }

    /// The `k`-th power (`k = 0` gives the identity).
    pub fn power(&self, k: usize) -> Perm {
        let mut result = Perm::identity(self.size());
        for _ in 0..k {
            result = self.compose(&result);
        }
        result
    }

    /// Restriction to a subset: erase all elements outside `keep` from the
    /// cycle decomposition, keeping the induced successor order.
    ///
    /// The result lives on the same ground set and fixes every element
    /// outside `keep`: for `s` with `keep[s]`, the image is `p^k(s)` for the
    /// least `k ≥ 1` with `p^k(s)` in `keep`.
    ///
    /// Panics if `keep.len()` differs from the ground-set size.
    pub fn restricted_to(&self, keep: &[bool]) -> Perm {
        assert_eq!(
            keep.len(),
            self.size(),
            "restriction mask must cover the whole ground set"
        );
        let mut images: Vec<usize> = (0..self.size()).collect();
        for s in 0..self.size() {
            if !keep[s] {
                continue;
            }
            let mut t = self.apply(s);
            while !keep[t] {
                t = self.apply(t);
            }
            images[s] = t;
        }
        debug_assert!(Perm::from_images(images.clone()).is_ok());
        Perm { images }
    }

    /// Cycle decomposition.  Each cycle starts at its minimum element and the
    /// cycles are sorted by those minima, so the output is canonical.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.size()];
        let mut cycles = Vec::new();
        for start in 0..self.size() {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.apply(start);
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.apply(x);
            }
            cycles.push(cycle);
        }
        cycles
    }

    /// Cycles that lie inside `keep`.
    ///
    /// Requires `keep` to be a union of cycles (checked in debug builds);
    /// elements outside `keep` are ignored entirely, so a fixed point outside
    /// `keep` does not show up while a fixed point inside `keep` does.
    pub fn cycles_within(&self, keep: &[bool]) -> Vec<Vec<usize>> {
        assert_eq!(keep.len(), self.size());
        let mut seen = vec![false; self.size()];
        let mut cycles = Vec::new();
        for start in 0..self.size() {
            if !keep[start] || seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.apply(start);
            while x != start {
                debug_assert!(keep[x], "subset is not a union of cycles");
                seen[x] = true;
                cycle.push(x);
                x = self.apply(x);
            }
            cycles.push(cycle);
        }
        cycles
    }

    /// Number of cycles (fixed points count).
    pub fn cycle_count(&self) -> usize {
        let mut seen = vec![false; self.size()];
        let mut count = 0;
        for start in 0..self.size() {
            if seen[start] {
                continue;
            }
            count += 1;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.apply(x);
            }
        }
        count
    }

    /// The cycle containing `start`, starting at `start`.
    pub fn orbit(&self, start: usize) -> Vec<usize> {
        let mut cycle = vec![start];
        let mut x = self.apply(start);
        while x != start {
            cycle.push(x);
            x = self.apply(x);
        }
        cycle
    }

    /// True when `self` is an involution (fixed points allowed).
    pub fn is_involution(&self) -> bool {
        (0..self.size()).all(|x| self.apply(self.apply(x)) == x)
    }

    /// True when `self` consists of a single cycle covering the whole ground
    /// set.  The empty permutation counts as cyclic.
    pub fn is_cyclic(&self) -> bool {
        if self.is_empty() {
            return true;
        }
        self.orbit(0).len() == self.size()
    }

    /// True when `self` is the identity.
    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(x, &y)| x == y)
    }

    /// Parses cycle notation such as `(0 3 5)(1 2 4)` on a ground set of
    /// size `n`.  Elements may be separated by spaces or commas; fixed points
    /// may be omitted.  The empty notation `()` is accepted.
    pub fn parse_cycles(n: usize, text: &str) -> Result<Perm> {
        let mut cycles: Vec<Vec<usize>> = Vec::new();
        let mut chars = text.chars().peekable();
        loop {
            while let Some(c) = chars.peek() {
                if c.is_whitespace() {
                    chars.next();
                } else {
                    break;
                }
            }
            let Some(&c) = chars.peek() else { break };
            if c != '(' {
                return Err(MapError::CycleParse(format!(
                    "expected '(' but found {c:?}"
                )));
            }
            chars.next();
            let mut body = String::new();
            let mut closed = false;
            for c in chars.by_ref() {
                if c == ')' {
                    closed = true;
                    break;
                }
                if c == '(' {
                    return Err(MapError::CycleParse("nested '(' inside a cycle".into()));
                }
                body.push(c);
            }
            if !closed {
                return Err(MapError::CycleParse("unclosed cycle".into()));
            }
            let mut cycle = Vec::new();
            for token in body.split(|c: char| c.is_whitespace() || c == ',') {
                if token.is_empty() {
                    continue;
                }
                let entry: usize = token
                    .parse()
                    .map_err(|_| MapError::CycleParse(format!("bad element {token:?}")))?;
                cycle.push(entry);
            }
            if !cycle.is_empty() {
                cycles.push(cycle);
            }
        }
        Perm::from_cycles(n, &cycles)
    }
}

impl fmt::Display for Perm {
    /// Canonical cycle notation, fixed points included: `(0 3 5)(1)(2 4)`.
    /// The empty permutation prints as `()`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "()");
        }
        for cycle in self.cycles() {
            write!(f, "(")?;
            for (i, x) in cycle.iter().enumerate() {
                if i > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm[{self}]")
    }
}
