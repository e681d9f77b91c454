//! Letter codes for one-faced maps and shuffle codes for covered maps.
//!
//! Reading the face contour of a one-faced map with `n` edges from the root
//! spells a word of `2n` letters: the `i`-th edge to appear contributes the
//! letter `a_i` at its first visit and the barred letter `ā_i` at its second.
//! Words arising this way are exactly those in which unbarred letters appear
//! in increasing order of index and every bar follows its unbarred partner;
//! decoding such a word rebuilds the map, so one-faced maps with `n` edges
//! correspond to the `(2n-1)!!` fixed-point-free involutions of the letter
//! positions.  The map is a plane tree exactly when the word is
//! *non-crossing* (no pattern `a_i … a_j … ā_i … ā_j`).
//!
//! A covered map is encoded the same way along its motion walk, with letters
//! `a/ā` for half-edges of the distinguished subset `S` and `b/b̄` for the
//! rest.  Both one-family subwords are valid codes — the `a`-word spells the
//! submap, the `b`-word spells the complementary submap of the dual — and
//! conversely every shuffle of two valid codes decodes to a covered map.
//!
//! Text form: whitespace-separated tokens, lower-case for unbarred letters
//! and upper-case for barred ones, e.g. `a1 b1 A1 B1`.

use crate::cmap::{CoveredMap, RootedMap, SpannedMap};
use crate::perm::Perm;
use crate::{MapError, Result};
use std::fmt;

/// One letter of a one-faced-map code: an edge index (1-based) and a bar
/// flag distinguishing the second visit from the first.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Letter {
    /// 1-based edge index, in order of first appearance.
    pub index: usize,
    /// True on the second visit to the edge.
    pub bar: bool,
}

/// One letter of a covered-map code: as [`Letter`], plus the family flag
/// telling whether the edge lies outside the distinguished subset.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct ShuffleLetter {
    /// False for the `a`-family (edges of the subset `S`), true for the
    /// `b`-family (edges of the complement).
    pub dual_side: bool,
    /// 1-based edge index within its family, in order of first appearance.
    pub index: usize,
    /// True on the second visit to the edge.
    pub bar: bool,
}

/// Checks the defining conditions of a code word over one letter family:
/// unbarred letters appear as `1, 2, 3, …` in order, each barred letter
/// follows its unbarred partner, and every edge is visited exactly twice.
fn validate_letters(letters: &[Letter], family: &str) -> Result<()> {
    if letters.len() % 2 != 0 {
        return Err(MapError::BadCode(format!(
            "{family}-word has odd length {}",
            letters.len()
        )));
    }
    let n = letters.len() / 2;
    let mut next_fresh = 1;
    let mut barred = vec![false; n + 1];
    for letter in letters {
        if letter.index == 0 || letter.index > n {
            return Err(MapError::BadCode(format!(
                "{family}-letter index {} out of range 1..={n}",
                letter.index
            )));
        }
        if !letter.bar {
            if letter.index != next_fresh {
                return Err(MapError::BadCode(format!(
                    "unbarred {family}-letters must appear in index order: saw index {} but expected {next_fresh}",
                    letter.index
                )));
            }
            next_fresh += 1;
        } else {
            if letter.index >= next_fresh {
                return Err(MapError::BadCode(format!(
                    "barred {family}-letter {} appears before its unbarred partner",
                    letter.index
                )));
            }
            if barred[letter.index] {
                return Err(MapError::BadCode(format!(
                    "barred {family}-letter {} appears twice",
                    letter.index
                )));
            }
            barred[letter.index] = true;
        }
    }
    debug_assert_eq!(next_fresh, n + 1);
    debug_assert!(barred[1..].iter().all(|&b| b));
    Ok(())
}

/// The code word of a one-faced map: the face contour read from the root,
/// letters numbered in order of first appearance.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct UnicellularCode {
    letters: Vec<Letter>,
}

impl UnicellularCode {
    /// Validates and wraps a letter word.
    pub fn new(letters: Vec<Letter>) -> Result<UnicellularCode> {
        validate_letters(&letters, "a")?;
        Ok(UnicellularCode { letters })
    }

    /// The letters of the word.
    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    /// Number of edges of the encoded map.
    pub fn n_edges(&self) -> usize {
        self.letters.len() / 2
    }

    /// True when the word is non-crossing, i.e. encodes a plane tree.
    pub fn is_tree_code(&self) -> bool {
        let mut stack = Vec::new();
        for letter in &self.letters {
            if !letter.bar {
                stack.push(letter.index);
            } else if stack.pop() != Some(letter.index) {
                return false;
            }
        }
        debug_assert!(stack.is_empty());
        true
    }

    /// Reads the face contour of a one-faced map from its root.
    pub fn from_map(map: &RootedMap) -> Result<UnicellularCode> {
        let faces = map.face_count();
        if map.n_half() > 0 && faces != 1 {
            return Err(MapError::NotUnicellular(faces));
        }
        let mut letters = Vec::with_capacity(map.n_half());
        let mut index_of = vec![0usize; map.n_half()];
        let mut next_fresh = 1;
        if let Some(r) = map.root() {
            let phi = map.face_perm();
            let mut h = r;
            loop {
                let partner = map.alpha().apply(h);
                if index_of[partner] != 0 {
                    letters.push(Letter {
                        index: index_of[partner],
                        bar: true,
                    });
                    index_of[h] = index_of[partner];
                } else {
                    index_of[h] = next_fresh;
                    letters.push(Letter {
                        index: next_fresh,
                        bar: false,
                    });
                    next_fresh += 1;
                }
                h = phi.apply(h);
                if h == r {
                    break;
                }
            }
        }
        let code = UnicellularCode { letters };
        debug_assert!(validate_letters(&code.letters, "a").is_ok());
        Ok(code)
    }

    /// Rebuilds the one-faced map: letter `a_i` becomes half-edge `2(i-1)`,
    /// its bar `2(i-1)+1`, the word spells the face contour from the root,
    /// and the vertex rotation is recovered as contour ∘ involution.
    pub fn to_map(&self) -> RootedMap {
        let n_half = self.letters.len();
        let positions: Vec<usize> = self
            .letters
            .iter()
            .map(|l| 2 * (l.index - 1) + usize::from(l.bar))
            .collect();
        let phi = cycle_perm(n_half, &positions);
        let alpha = twin_involution(n_half);
        let sigma = phi.compose(&alpha);
        let root = positions.first().copied();
        let map = RootedMap::new(sigma, alpha, root).expect("a valid code decodes to a map");
        debug_assert!(map.is_unicellular());
        map
    }

    /// Parses the text form (`a`-family only).
    pub fn parse(text: &str) -> Result<UnicellularCode> {
        let mut letters = Vec::new();
        for token in text.split_whitespace() {
            let letter = parse_token(token)?;
            if letter.dual_side {
                return Err(MapError::BadCode(format!(
                    "one-faced-map codes use only the a-family, found {token:?}"
                )));
            }
            letters.push(Letter {
                index: letter.index,
                bar: letter.bar,
            });
        }
        UnicellularCode::new(letters)
    }
}

impl fmt::Display for UnicellularCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, letter) in self.letters.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            let family = if letter.bar { 'A' } else { 'a' };
            write!(f, "{family}{}", letter.index)?;
        }
        Ok(())
    }
}

/// The shuffle code of a covered map: the motion walk read from the root,
/// `a`-letters for subset half-edges, `b`-letters for the rest.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CodeShuffle {
    letters: Vec<ShuffleLetter>,
}

impl CodeShuffle {
    /// Validates and wraps a letter word: both one-family subwords must be
    /// valid codes.
    pub fn new(letters: Vec<ShuffleLetter>) -> Result<CodeShuffle> {
        let shuffle = CodeShuffle { letters };
        validate_letters(&shuffle.family_letters(false), "a")?;
        validate_letters(&shuffle.family_letters(true), "b")?;
        Ok(shuffle)
    }

    fn family_letters(&self, dual_side: bool) -> Vec<Letter> {
        self.letters
            .iter()
            .filter(|l| l.dual_side == dual_side)
            .map(|l| Letter {
                index: l.index,
                bar: l.bar,
            })
            .collect()
    }

    /// The letters of the word.
    pub fn letters(&self) -> &[ShuffleLetter] {
        &self.letters
    }

    /// Total number of edges (`a`-edges plus `b`-edges).
    pub fn n_edges(&self) -> usize {
        self.letters.len() / 2
    }

    /// Number of `a`-family edges (edges of the subset).
    pub fn subset_edges(&self) -> usize {
        self.letters.iter().filter(|l| !l.dual_side && !l.bar).count()
    }

    /// The `a`-family subword: the code of the submap.
    pub fn first_projection(&self) -> UnicellularCode {
        UnicellularCode::new(self.family_letters(false)).expect("validated on construction")
    }

    /// The `b`-family subword: the code of the complementary submap of the
    /// dual map.
    pub fn second_projection(&self) -> UnicellularCode {
        UnicellularCode::new(self.family_letters(true)).expect("validated on construction")
    }

    /// Reads the motion walk of a covered map from its root.
    pub fn from_covered(cm: &CoveredMap) -> CodeShuffle {
        let map = cm.map();
        let mut letters = Vec::with_capacity(map.n_half());
        let mut index_of = vec![0usize; map.n_half()];
        let mut next_fresh = [1usize; 2];
        if let Some(r) = map.root() {
            let theta = cm.motion();
            let mut h = r;
            loop {
                let dual_side = !cm.spanned().contains(h);
                let partner = map.alpha().apply(h);
                if index_of[partner] != 0 {
                    letters.push(ShuffleLetter {
                        dual_side,
                        index: index_of[partner],
                        bar: true,
                    });
                    index_of[h] = index_of[partner];
                } else {
                    let fresh = &mut next_fresh[usize::from(dual_side)];
                    index_of[h] = *fresh;
                    letters.push(ShuffleLetter {
                        dual_side,
                        index: *fresh,
                        bar: false,
                    });
                    *fresh += 1;
                }
                h = theta.apply(h);
                if h == r {
                    break;
                }
            }
        }
        let shuffle = CodeShuffle { letters };
        debug_assert!(CodeShuffle::new(shuffle.letters.clone()).is_ok());
        shuffle
    }

    /// Rebuilds the covered map: `a_i` becomes half-edge `2(i-1)` (bar: `+1`),
    /// `b_j` becomes `2k + 2(j-1)` (bar: `+1`) where `k` is the number of
    /// `a`-edges; the word spells the motion walk from the root, from which
    /// the vertex rotation is recovered on each side of the subset.
    pub fn to_covered(&self) -> CoveredMap {
        let n_half = self.letters.len();
        let k = self.subset_edges();
        let positions: Vec<usize> = self
            .letters
            .iter()
            .map(|l| {
                let base = if l.dual_side { 2 * k } else { 0 };
                base + 2 * (l.index - 1) + usize::from(l.bar)
            })
            .collect();
        let theta = cycle_perm(n_half, &positions);
        let alpha = twin_involution(n_half);
        let in_s: Vec<bool> = (0..n_half).map(|h| h < 2 * k).collect();
        let sigma_images: Vec<usize> = (0..n_half)
            .map(|h| {
                if in_s[h] {
                    theta.apply(alpha.apply(h))
                } else {
                    theta.apply(h)
                }
            })
            .collect();
        let sigma = Perm::from_images(sigma_images).expect("motion walk determines the rotation");
        let root = positions.first().copied();
        let map = RootedMap::new(sigma, alpha, root).expect("a valid shuffle decodes to a map");
        let spanned = SpannedMap::from_mask(map, in_s).expect("subset is twin-closed");
        debug_assert_eq!(spanned.motion(), theta);
        CoveredMap::new(spanned).expect("a cyclic motion walk is covered")
    }

    /// Parses the text form.
    pub fn parse(text: &str) -> Result<CodeShuffle> {
        let mut letters = Vec::new();
        for token in text.split_whitespace() {
            letters.push(parse_token(token)?);
        }
        CodeShuffle::new(letters)
    }
}

impl fmt::Display for CodeShuffle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, letter) in self.letters.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            let family = match (letter.dual_side, letter.bar) {
                (false, false) => 'a',
                (false, true) => 'A',
                (true, false) => 'b',
                (true, true) => 'B',
            };
            write!(f, "{family}{}", letter.index)?;
        }
        Ok(())
    }
}

/// The permutation sending each listed element to the next, cyclically.
fn cycle_perm(n: usize, order: &[usize]) -> Perm {
    let mut images: Vec<usize> = (0..n).collect();
    for (i, &x) in order.iter().enumerate() {
        images[x] = order[(i + 1) % order.len()];
    }
    Perm::from_images(images).expect("cycle over distinct elements")
}

/// The involution pairing `2i` with `2i+1`.
pub(crate) fn twin_involution(n: usize) -> Perm {
    let images = (0..n).map(|h| h ^ 1).collect();
    Perm::from_images(images).expect("twin pairing is a bijection")
}

fn parse_token(token: &str) -> Result<ShuffleLetter> {
    let mut chars = token.chars();
    let family = chars
        .next()
        .ok_or_else(|| MapError::BadCode("empty letter token".into()))?;
    let (dual_side, bar) = match family {
        'a' => (false, false),
        'A' => (false, true),
        'b' => (true, false),
        'B' => (true, true),
        other => {
            return Err(MapError::BadCode(format!(
                "letter family must be one of a, A, b, B, found {other:?}"
            )))
        }
    };
    let rest = chars.as_str();
    let index: usize = rest
        .parse()
        .map_err(|_| MapError::BadCode(format!("bad letter index in token {token:?}")))?;
    if index == 0 {
        return Err(MapError::BadCode("letter indices start at 1".into()));
    }
    Ok(ShuffleLetter {
        dual_side,
        index,
        bar,
    })
}
