//! Exhaustive generators, exact count tables, and exact-uniform samplers.
//!
//! Everything here is duplicate-free and deterministic:
//!
//! * rooted maps are enumerated by running over all rotations against the
//!   fixed twin pairing, deduplicating by canonical key, and emitting in key
//!   order — the output is independent of how the search space is split
//!   across worker threads;
//! * unicellular maps stream one per matching of contour positions, plane
//!   trees one per height code, covered maps one per two-family shuffle —
//!   these encodings are bijective, so no deduplication is needed;
//! * the samplers draw covered maps exactly uniformly using integer weights
//!   only, and are reproducible from the caller's generator state.
//!
//! All generators take an [`EnumLimits`] guarding against accidentally
//! exponential requests; the environment variable `MAPFORGE_MAX_EDGES`
//! raises (or lowers) both bounds.

use crate::cmap::{decode_key, CoveredMap, RootedMap, SpannedMap};
use crate::codes::{twin_involution, CodeShuffle, Letter, ShuffleLetter, UnicellularCode};
use crate::error::MapError;
use crate::fold::{psi, TreeMobilePair};
use crate::mobile::{tree_from_height, HeightCode};
use crate::perm::Perm;
use crate::Result;
use num::BigUint;
use rand::Rng;
use rayon::prelude::*;
use std::collections::BTreeMap;

/// Upper bounds (in edges) for the exhaustive generators.
///
/// The general bound guards the factorial-sized searches (all rooted maps,
/// all covered maps); the unicellular bound guards the milder matching- and
/// tree-shaped searches.  Setting `MAPFORGE_MAX_EDGES` overrides both.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnumLimits {
    /// Bound for rooted-map and covered-map enumeration.
    pub general: usize,
    /// Bound for unicellular-map and plane-tree enumeration.
    pub unicellular: usize,
}

impl Default for EnumLimits {
    fn default() -> EnumLimits {
        EnumLimits {
            general: 5,
            unicellular: 7,
        }
    }
}

impl EnumLimits {
    /// The default bounds, or the value of `MAPFORGE_MAX_EDGES` for both
    /// when that variable is set to a number.
    pub fn from_env() -> EnumLimits {
        match std::env::var("MAPFORGE_MAX_EDGES")
            .ok()
            .and_then(|v| v.trim().parse::<usize>().ok())
        {
            Some(n) => EnumLimits {
                general: n,
                unicellular: n,
            },
            None => EnumLimits::default(),
        }
    }

    fn check(requested: usize, bound: usize) -> Result<()> {
        if requested > bound {
            Err(MapError::BoundExceeded { requested, bound })
        } else {
            Ok(())
        }
    }

    /// Errors when `n` exceeds the general bound.
    pub fn check_general(&self, n: usize) -> Result<()> {
        EnumLimits::check(n, self.general)
    }

    /// Errors when `n` exceeds the unicellular bound.
    pub fn check_unicellular(&self, n: usize) -> Result<()> {
        EnumLimits::check(n, self.unicellular)
    }
}

/// Every rooted map with `n` edges, exactly once, sorted by canonical key.
///
/// The search fixes the twin pairing `(0 1)(2 3)…` and the root half-edge 0,
/// runs over all rotations, keeps the connected ones, and deduplicates by
/// canonical key.  The rotation space is partitioned over the image of the
/// root across worker threads; the final sort makes the output order
/// independent of the partitioning.
pub fn gen_rooted_maps(n: usize, limits: &EnumLimits) -> Result<Vec<RootedMap>> {
    limits.check_general(n)?;
    if n == 0 {
        return Ok(vec![RootedMap::empty()]);
    }
    let m = 2 * n;
    let alpha = twin_involution(m);
    let mut keys: Vec<Vec<u8>> = (0..m)
        .into_par_iter()
        .flat_map(|first| {
            let mut out = Vec::new();
            let mut images = vec![usize::MAX; m];
            let mut used = vec![false; m];
            images[0] = first;
            used[first] = true;
            complete_rotation(1, &mut images, &mut used, &alpha, &mut out);
            out
        })
        .collect();
    keys.par_sort_unstable();
    keys.dedup();
    Ok(keys.iter().map(|key| decode_key(key).0).collect())
}

fn complete_rotation(
    pos: usize,
    images: &mut Vec<usize>,
    used: &mut Vec<bool>,
    alpha: &Perm,
    out: &mut Vec<Vec<u8>>,
) {
    let m = images.len();
    if pos == m {
        let sigma = Perm::from_images(images.clone()).expect("built as a bijection");
        if let Ok(map) = RootedMap::new(sigma, alpha.clone(), Some(0)) {
            out.push(map.canonical_key());
        }
        return;
    }
    for v in 0..m {
        if !used[v] {
            used[v] = true;
            images[pos] = v;
            complete_rotation(pos + 1, images, used, alpha, out);
            used[v] = false;
        }
    }
}

/// All perfect matchings of the values `0, …, m-1`, each as a list of pairs
/// `(smaller, larger)`, in lexicographic order of generation.
fn all_matchings(m: usize) -> Vec<Vec<(usize, usize)>> {
    let items: Vec<usize> = (0..m).collect();
    all_matchings_of(&items)
}

/// All perfect matchings of an arbitrary (even-sized) list of values.
fn all_matchings_of(items: &[usize]) -> Vec<Vec<(usize, usize)>> {
    fn extend(
        free: &mut Vec<usize>,
        current: &mut Vec<(usize, usize)>,
        out: &mut Vec<Vec<(usize, usize)>>,
    ) {
        if free.is_empty() {
            out.push(current.clone());
            return;
        }
        let first = free.remove(0);
        for idx in 0..free.len() {
            let partner = free.remove(idx);
            current.push((first, partner));
            extend(free, current, out);
            current.pop();
            free.insert(idx, partner);
        }
        free.insert(0, first);
    }
    assert!(items.len() % 2 == 0, "matchings need an even ground set");
    let mut out = Vec::new();
    extend(&mut items.to_vec(), &mut Vec::new(), &mut out);
    out
}

/// Turns a perfect matching of contour positions into the one-faced map it
/// encodes: the matching is the twin pairing along the single face contour.
fn unicellular_from_matching(pairs: &[(usize, usize)]) -> RootedMap {
    let len = 2 * pairs.len();
    let mut partner = vec![usize::MAX; len];
    for &(a, b) in pairs {
        partner[a] = b;
        partner[b] = a;
    }
    let mut letters = Vec::with_capacity(len);
    let mut index_of_pos = vec![usize::MAX; len];
    let mut next_index = 1;
    for pos in 0..len {
        let bar = partner[pos] < pos;
        let index = if bar {
            index_of_pos[partner[pos]]
        } else {
            index_of_pos[pos] = next_index;
            next_index += 1;
            index_of_pos[pos]
        };
        letters.push(Letter { index, bar });
    }
    UnicellularCode::new(letters)
        .expect("matchings encode valid one-faced maps")
        .to_map()
}

/// Every one-faced map with `n` edges, exactly once (one per matching of
/// the `2n` contour positions).
pub fn gen_unicellular(n: usize, limits: &EnumLimits) -> Result<Vec<RootedMap>> {
    limits.check_unicellular(n)?;
    Ok(all_matchings(2 * n)
        .iter()
        .map(|pairs| unicellular_from_matching(pairs))
        .collect())
}

/// Every bipartite one-faced map with `n` edges, exactly once.
pub fn gen_bipartite_unicellular(n: usize, limits: &EnumLimits) -> Result<Vec<RootedMap>> {
    Ok(gen_unicellular(n, limits)?
        .into_iter()
        .filter(|map| map.bipartition().is_ok())
        .collect())
}

/// Every plane tree with `n` edges, exactly once (one per height code).
pub fn gen_plane_trees(n: usize, limits: &EnumLimits) -> Result<Vec<RootedMap>> {
    limits.check_unicellular(n)?;
    let mut out = Vec::new();
    let mut prefix = vec![0];
    fn extend(prefix: &mut Vec<usize>, n: usize, out: &mut Vec<RootedMap>) {
        if prefix.len() == n + 1 {
            let code = HeightCode::new(prefix.clone()).expect("built valid");
            out.push(tree_from_height(&code));
            return;
        }
        let top = *prefix.last().expect("prefix starts non-empty");
        for c in 1..=top + 1 {
            prefix.push(c);
            extend(prefix, n, out);
            prefix.pop();
        }
    }
    extend(&mut prefix, n, &mut out);
    Ok(out)
}

/// Assembles the covered map determined by a choice of subset positions and
/// matchings of the two families along the contour of the root face.
fn covered_from_shuffle(
    len: usize,
    in_subset: &[bool],
    subset_pairs: &[(usize, usize)],
    complement_pairs: &[(usize, usize)],
) -> CoveredMap {
    let mut partner = vec![usize::MAX; len];
    for &(a, b) in subset_pairs.iter().chain(complement_pairs) {
        partner[a] = b;
        partner[b] = a;
    }
    let mut letters = Vec::with_capacity(len);
    let mut index_of_pos = vec![usize::MAX; len];
    let mut next_index = [1usize; 2];
    for pos in 0..len {
        let family = usize::from(!in_subset[pos]);
        let bar = partner[pos] < pos;
        let index = if bar {
            index_of_pos[partner[pos]]
        } else {
            index_of_pos[pos] = next_index[family];
            next_index[family] += 1;
            index_of_pos[pos]
        };
        letters.push(ShuffleLetter {
            dual_side: !in_subset[pos],
            index,
            bar,
        });
    }
    CodeShuffle::new(letters)
        .expect("shuffled matchings encode valid covered maps")
        .to_covered()
}

/// All sorted `k`-element subsets of `0, …, m-1`, lexicographically.
fn all_subsets(m: usize, k: usize) -> Vec<Vec<usize>> {
    fn extend(start: usize, m: usize, k: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == k {
            out.push(current.clone());
            return;
        }
        let needed = k - current.len();
        for v in start..=m.saturating_sub(needed) {
            current.push(v);
            extend(v + 1, m, k, current, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    if k <= m {
        extend(0, m, k, &mut Vec::new(), &mut out);
    }
    out
}

/// Every covered map with `n` edges, exactly once (one per shuffle of two
/// one-faced-map encodings into the `2n` contour positions).
pub fn gen_covered(n: usize, limits: &EnumLimits) -> Result<Vec<CoveredMap>> {
    limits.check_general(n)?;
    let len = 2 * n;
    let mut out = Vec::new();
    for k in 0..=n {
        for subset in all_subsets(len, 2 * k) {
            let mut in_subset = vec![false; len];
            for &pos in &subset {
                in_subset[pos] = true;
            }
            let complement: Vec<usize> =
                (0..len).filter(|&pos| !in_subset[pos]).collect();
            for subset_pairs in all_matchings_of(&subset) {
                for complement_pairs in all_matchings_of(&complement) {
                    out.push(covered_from_shuffle(
                        len,
                        &in_subset,
                        &subset_pairs,
                        &complement_pairs,
                    ));
                }
            }
        }
    }
    Ok(out)
}

/// Helper: adds one to a table cell.
fn bump<K: Ord>(table: &mut BTreeMap<K, BigUint>, key: K) {
    *table.entry(key).or_insert_with(BigUint::default) += 1u32;
}

/// One-faced maps with `n` edges counted by genus.
pub fn count_unicellular_by_genus(
    n: usize,
    limits: &EnumLimits,
) -> Result<BTreeMap<usize, BigUint>> {
    let mut table = BTreeMap::new();
    for map in gen_unicellular(n, limits)? {
        bump(&mut table, map.genus());
    }
    Ok(table)
}

/// One-faced maps with `n` edges counted by vertex count.
pub fn count_unicellular_by_vertices(
    n: usize,
    limits: &EnumLimits,
) -> Result<BTreeMap<usize, BigUint>> {
    let mut table = BTreeMap::new();
    for map in gen_unicellular(n, limits)? {
        bump(&mut table, map.vertex_count());
    }
    Ok(table)
}

/// Bipartite one-faced maps with `m` edges counted by genus.
pub fn count_bipartite_unicellular_by_genus(
    m: usize,
    limits: &EnumLimits,
) -> Result<BTreeMap<usize, BigUint>> {
    let mut table = BTreeMap::new();
    for map in gen_bipartite_unicellular(m, limits)? {
        bump(&mut table, map.genus());
    }
    Ok(table)
}

/// Bipartite one-faced maps with `m` edges counted by (white, black) vertex
/// counts, the root vertex being white.
pub fn count_bipartite_unicellular_by_colours(
    m: usize,
    limits: &EnumLimits,
) -> Result<BTreeMap<(usize, usize), BigUint>> {
    let mut table = BTreeMap::new();
    for map in gen_bipartite_unicellular(m, limits)? {
        let colours = map.bipartition().expect("filtered bipartite");
        let black = colours.iter().filter(|&&c| c).count();
        bump(&mut table, (colours.len() - black, black));
    }
    Ok(table)
}

/// Covered maps with `n` edges counted by genus of the underlying map.
pub fn count_covered_by_genus(
    n: usize,
    limits: &EnumLimits,
) -> Result<BTreeMap<usize, BigUint>> {
    let mut table = BTreeMap::new();
    for cm in gen_covered(n, limits)? {
        bump(&mut table, cm.map().genus());
    }
    Ok(table)
}

/// Covered maps with `n` edges counted by (vertices, faces) of the
/// underlying map.
pub fn count_covered_by_vf(
    n: usize,
    limits: &EnumLimits,
) -> Result<BTreeMap<(usize, usize), BigUint>> {
    let mut table = BTreeMap::new();
    for cm in gen_covered(n, limits)? {
        bump(&mut table, (cm.map().vertex_count(), cm.map().face_count()));
    }
    Ok(table)
}

/// Covered maps with `n` edges counted by (subset edge count, submap genus,
/// complement genus), where the complement genus is read off the dual.
pub fn count_covered_by_split(
    n: usize,
    limits: &EnumLimits,
) -> Result<BTreeMap<(usize, usize, usize), BigUint>> {
    let mut table = BTreeMap::new();
    for cm in gen_covered(n, limits)? {
        let key = split_statistics(&cm);
        bump(&mut table, key);
    }
    Ok(table)
}

/// The (subset edges, submap genus, dual-complement genus) triple of a
/// covered map.
pub fn split_statistics(cm: &CoveredMap) -> (usize, usize, usize) {
    let spanned = cm.spanned();
    let sub_genus = spanned
        .submap()
        .genus()
        .expect("covered submaps are connected");
    let co_genus = spanned
        .dual_spanned()
        .submap()
        .genus()
        .expect("dual covered submaps are connected");
    (spanned.s_edges(), sub_genus, co_genus)
}

/// Whether the distinguished subset of a covered map is a spanning tree of
/// the underlying map.
pub fn is_tree_rooted(cm: &CoveredMap) -> bool {
    cm.spanned().s_edges() + 1 == cm.map().vertex_count()
}

/// Maps with a marked spanning tree, counted by genus: covered maps whose
/// subset is a spanning tree.
pub fn count_tree_rooted_by_genus(
    n: usize,
    limits: &EnumLimits,
) -> Result<BTreeMap<usize, BigUint>> {
    let mut table = BTreeMap::new();
    for cm in gen_covered(n, limits)? {
        if is_tree_rooted(&cm) {
            bump(&mut table, cm.map().genus());
        }
    }
    Ok(table)
}

/// The deterministic generator behind seeded sampling: a fixed stream
/// cipher, so equal seeds give equal draw sequences on every platform.
pub fn seeded_rng(seed: u64) -> rand_chacha::ChaCha12Rng {
    use rand::SeedableRng;
    rand_chacha::ChaCha12Rng::seed_from_u64(seed)
}

/// A uniformly random integer below `bound`, by rejection on the top bits.
fn rand_below<R: Rng + ?Sized>(rng: &mut R, bound: &BigUint) -> BigUint {
    use num::Zero;
    assert!(!bound.is_zero(), "cannot sample below zero");
    let bits = bound.bits();
    let bytes = ((bits + 7) / 8) as usize;
    let excess = (bytes as u64 * 8 - bits) as u32;
    loop {
        let mut buf = vec![0u8; bytes];
        rng.fill_bytes(&mut buf);
        buf[bytes - 1] &= 0xffu8 >> excess;
        let candidate = BigUint::from_bytes_le(&buf);
        if &candidate < bound {
            return candidate;
        }
    }
}

/// A uniformly random perfect matching of the given values: the first value
/// pairs with a uniform partner, and so on.
fn random_matching<R: Rng + ?Sized>(items: &[usize], rng: &mut R) -> Vec<(usize, usize)> {
    let mut free = items.to_vec();
    let mut pairs = Vec::with_capacity(items.len() / 2);
    while !free.is_empty() {
        let first = free.remove(0);
        let partner = free.remove(rng.gen_range(0..free.len()));
        pairs.push((first, partner));
    }
    pairs
}

/// An exactly uniform covered map with `n` edges.
///
/// The subset size `2k` is drawn with probability proportional to the exact
/// number of covered maps carrying it, the subset positions uniformly, and
/// the two contour matchings uniformly; assembling the shuffle then hits
/// every covered map with equal probability.  The draw is a deterministic
/// function of the generator's state.
pub fn sample_covered<R: Rng + ?Sized>(n: usize, rng: &mut R) -> CoveredMap {
    use crate::formulas::{binomial, unicellular_total};
    if n == 0 {
        return CoveredMap::new(
            SpannedMap::new(RootedMap::empty(), &[]).expect("empty subset"),
        )
        .expect("the empty map is covered");
    }
    let len = 2 * n;
    let weights: Vec<BigUint> = (0..=n)
        .map(|k| binomial(len, 2 * k) * unicellular_total(k) * unicellular_total(n - k))
        .collect();
    let total: BigUint = weights.iter().sum();
    let draw = rand_below(rng, &total);
    let mut k = 0;
    let mut acc = BigUint::default();
    for (idx, w) in weights.iter().enumerate() {
        acc += w;
        if draw < acc {
            k = idx;
            break;
        }
    }

    // uniform sorted subset of 2k positions via a partial shuffle
    let mut positions: Vec<usize> = (0..len).collect();
    for i in 0..2 * k {
        let j = rng.gen_range(i..len);
        positions.swap(i, j);
    }
    let mut subset = positions[..2 * k].to_vec();
    subset.sort_unstable();
    let mut in_subset = vec![false; len];
    for &pos in &subset {
        in_subset[pos] = true;
    }
    let complement: Vec<usize> = (0..len).filter(|&pos| !in_subset[pos]).collect();

    let subset_pairs = random_matching(&subset, rng);
    let complement_pairs = random_matching(&complement, rng);
    covered_from_shuffle(len, &in_subset, &subset_pairs, &complement_pairs)
}

/// An exactly uniform tree/mobile pair with tree size `n`: the unfolding of
/// a uniform covered map.
pub fn sample_pair<R: Rng + ?Sized>(n: usize, rng: &mut R) -> TreeMobilePair {
    psi(&sample_covered(n, rng))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha12Rng;
    use std::collections::{BTreeSet, HashSet};

    fn limits() -> EnumLimits {
        EnumLimits::default()
    }

    fn big(v: u64) -> BigUint {
        BigUint::from(v)
    }

    #[test]
    fn rooted_map_counts_and_uniqueness() {
        let maps0 = gen_rooted_maps(0, &limits()).unwrap();
        assert_eq!(maps0.len(), 1);
        assert!(maps0[0].n_edges() == 0);

        let maps1 = gen_rooted_maps(1, &limits()).unwrap();
        assert_eq!(maps1.len(), 2, "one loop and one link");

        let maps2 = gen_rooted_maps(2, &limits()).unwrap();
        assert_eq!(maps2.len(), 10, "nine planar maps and one toroidal");
        let keys: HashSet<Vec<u8>> =
            maps2.iter().map(|m| m.canonical_key()).collect();
        assert_eq!(keys.len(), 10);
        // duality permutes the set
        for map in &maps2 {
            let dual_key = map.dual().canonical_key();
            assert!(keys.contains(&dual_key));
        }
    }

    #[test]
    fn unicellular_counts_match_double_factorials() {
        let expected = [1usize, 1, 3, 15, 105];
        for (n, &count) in expected.iter().enumerate() {
            let maps = gen_unicellular(n, &limits()).unwrap();
            assert_eq!(maps.len(), count);
            for map in &maps {
                assert_eq!(map.n_edges(), n);
                assert!(map.is_unicellular());
            }
            let keys: HashSet<Vec<u8>> =
                maps.iter().map(|m| m.canonical_key()).collect();
            assert_eq!(keys.len(), count, "stream is duplicate-free");
        }
    }

    #[test]
    fn bipartite_unicellular_counts_are_factorials() {
        let expected = [1usize, 1, 2, 6, 24];
        for (m, &count) in expected.iter().enumerate() {
            assert_eq!(gen_bipartite_unicellular(m, &limits()).unwrap().len(), count);
        }
    }

    #[test]
    fn plane_tree_counts_are_catalan() {
        let catalan = [1usize, 1, 2, 5, 14, 42];
        for (n, &count) in catalan.iter().enumerate() {
            let trees = gen_plane_trees(n, &limits()).unwrap();
            assert_eq!(trees.len(), count);
            assert!(trees.iter().all(|t| t.is_plane_tree()));
        }
        // plane trees are exactly the genus-zero one-faced maps
        for n in 0..=4 {
            let tree_keys: BTreeSet<Vec<u8>> = gen_plane_trees(n, &limits())
                .unwrap()
                .iter()
                .map(|t| t.canonical_key())
                .collect();
            let unicellular_tree_keys: BTreeSet<Vec<u8>> =
                gen_unicellular(n, &limits())
                    .unwrap()
                    .iter()
                    .filter(|m| m.genus() == 0)
                    .map(|m| m.canonical_key())
                    .collect();
            assert_eq!(tree_keys, unicellular_tree_keys);
        }
    }

    #[test]
    fn covered_counts_match_the_quotient_of_factorials() {
        let expected = [1usize, 2, 12, 120];
        for (n, &count) in expected.iter().enumerate() {
            let covered = gen_covered(n, &limits()).unwrap();
            assert_eq!(covered.len(), count);
            let keys: HashSet<Vec<u8>> =
                covered.iter().map(|cm| cm.canonical_key()).collect();
            assert_eq!(keys.len(), count, "stream is duplicate-free");
        }
    }

    #[test]
    fn small_count_tables_match_hand_enumeration() {
        let by_genus = count_unicellular_by_genus(2, &limits()).unwrap();
        assert_eq!(by_genus, BTreeMap::from([(0, big(2)), (1, big(1))]));
        let by_vertices = count_unicellular_by_vertices(2, &limits()).unwrap();
        assert_eq!(by_vertices, BTreeMap::from([(1, big(1)), (3, big(2))]));
        let by_colours =
            count_bipartite_unicellular_by_colours(2, &limits()).unwrap();
        assert_eq!(
            by_colours,
            BTreeMap::from([((1, 2), big(1)), ((2, 1), big(1))])
        );
        // covered maps with two edges: ten on the sphere, two on the torus
        let covered = count_covered_by_genus(2, &limits()).unwrap();
        assert_eq!(covered, BTreeMap::from([(0, big(10)), (1, big(2))]));
        // spanning-tree-marked maps with two edges
        let tree_rooted = count_tree_rooted_by_genus(2, &limits()).unwrap();
        assert_eq!(tree_rooted, BTreeMap::from([(0, big(10)), (1, big(1))]));
    }

    #[test]
    fn split_table_refines_the_total() {
        let split = count_covered_by_split(3, &limits()).unwrap();
        let total: BigUint = split.values().sum();
        assert_eq!(total, big(120));
        // genus additivity: the by-genus table is the split table summed
        let by_genus = count_covered_by_genus(3, &limits()).unwrap();
        let mut regrouped: BTreeMap<usize, BigUint> = BTreeMap::new();
        for ((_, g1, g2), count) in &split {
            *regrouped.entry(g1 + g2).or_default() += count;
        }
        assert_eq!(regrouped, by_genus);
    }

    #[test]
    fn bounds_are_enforced_and_overridable() {
        let tight = EnumLimits {
            general: 2,
            unicellular: 3,
        };
        assert!(matches!(
            gen_rooted_maps(3, &tight),
            Err(MapError::BoundExceeded {
                requested: 3,
                bound: 2
            })
        ));
        assert!(matches!(
            gen_unicellular(4, &tight),
            Err(MapError::BoundExceeded {
                requested: 4,
                bound: 3
            })
        ));
        assert!(gen_unicellular(3, &tight).is_ok());
    }

    #[test]
    fn sampler_is_deterministic_and_supported_on_the_full_set() {
        let mut rng = ChaCha12Rng::seed_from_u64(42);
        let mut seen = BTreeSet::new();
        for _ in 0..200 {
            let cm = sample_covered(1, &mut rng);
            seen.insert(cm.canonical_key());
        }
        assert_eq!(seen.len(), 2, "both one-edge covered maps appear");

        let replay_a: Vec<Vec<u8>> = {
            let mut rng = ChaCha12Rng::seed_from_u64(7);
            (0..50).map(|_| sample_covered(2, &mut rng).canonical_key()).collect()
        };
        let replay_b: Vec<Vec<u8>> = {
            let mut rng = ChaCha12Rng::seed_from_u64(7);
            (0..50).map(|_| sample_covered(2, &mut rng).canonical_key()).collect()
        };
        assert_eq!(replay_a, replay_b);

        let mut rng = ChaCha12Rng::seed_from_u64(3);
        let pair = sample_pair(2, &mut rng);
        assert_eq!(pair.tree().n_edges(), 2);

        let empty = sample_covered(0, &mut rng);
        assert_eq!(empty.map().n_edges(), 0);
    }

    #[test]
    fn sampled_maps_lie_in_the_enumerated_support() {
        let support: HashSet<Vec<u8>> = gen_covered(2, &limits())
            .unwrap()
            .iter()
            .map(|cm| cm.canonical_key())
            .collect();
        let mut rng = ChaCha12Rng::seed_from_u64(11);
        for _ in 0..500 {
            let cm = sample_covered(2, &mut rng);
            assert!(support.contains(&cm.canonical_key()));
        }
    }
}
