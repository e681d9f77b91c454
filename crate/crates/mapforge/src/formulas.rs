//! Exact closed-form counts and cross-checks against exhaustive enumeration.
//!
//! All arithmetic is done in exact big integers (or big rationals for the
//! intermediate polynomial expansions, with integrality asserted at the
//! end), so every comparison below is an exact equality, never a float
//! approximation.
//!
//! The `verify_*` functions each return a list of [`VerifyRow`]s pairing an
//! enumerated count (`lhs`) with a closed form or convolution (`rhs`);
//! [`CSV_HEADER`] plus [`VerifyRow::csv_line`] render them as CSV.

use crate::enumerate::{
    count_bipartite_unicellular_by_colours, count_bipartite_unicellular_by_genus,
    count_covered_by_genus, count_covered_by_split, count_covered_by_vf,
    count_tree_rooted_by_genus, count_unicellular_by_genus, count_unicellular_by_vertices,
    EnumLimits,
};
use crate::Result;
use num::{BigInt, BigRational, BigUint, One, Zero};
use std::collections::{BTreeMap, BTreeSet};

fn big(v: usize) -> BigUint {
    BigUint::from(v)
}

/// `n!` as an exact integer.
pub fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * big(k))
}

/// The binomial coefficient `n` choose `k` (zero when `k > n`).
pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * big(n - i) / big(i + 1);
    }
    acc
}

/// The Catalan number `binom(2n, n) / (n + 1)`: the number of plane trees
/// with `n` edges.
pub fn catalan(n: usize) -> BigUint {
    binomial(2 * n, n) / big(n + 1)
}

/// The odd double factorial `1 · 3 · 5 ⋯ (2n − 1)`: the number of one-faced
/// maps with `n` edges (matchings of the `2n` contour positions).
pub fn unicellular_total(n: usize) -> BigUint {
    (0..n).fold(BigUint::one(), |acc, k| acc * big(2 * k + 1))
}

/// `(2n)! / n!`: the number of covered maps with `n` edges.
pub fn covered_total(n: usize) -> BigUint {
    factorial(2 * n) / factorial(n)
}

/// `m!`: the number of bipartite one-faced maps with `m` edges.
pub fn bipartite_unicellular_total(m: usize) -> BigUint {
    factorial(m)
}

/// `Cat(n) · Cat(n+1)`: the number of planar maps with `n` edges and a
/// marked spanning tree.
pub fn planar_tree_rooted_total(n: usize) -> BigUint {
    catalan(n) * catalan(n + 1)
}

/// The number of toroidal maps with `n` edges and a marked spanning tree:
/// `(2n)! (2n−1)! / (12 (n+1)! n! (n−1)! (n−2)!)`, and zero for `n < 2`.
pub fn toroidal_tree_rooted_total(n: usize) -> BigUint {
    if n < 2 {
        return BigUint::zero();
    }
    let numerator = factorial(2 * n) * factorial(2 * n - 1);
    let denominator =
        big(12) * factorial(n + 1) * factorial(n) * factorial(n - 1) * factorial(n - 2);
    let ratio = BigRational::new(BigInt::from(numerator), BigInt::from(denominator));
    rational_to_uint(&ratio)
}

fn rational_to_uint(r: &BigRational) -> BigUint {
    assert!(r.is_integer(), "expected an integer, got {r}");
    r.to_integer()
        .to_biguint()
        .expect("expected a non-negative integer")
}

/// Dense univariate polynomial with rational coefficients, constant first.
type Poly = Vec<BigRational>;

fn poly_mul(a: &Poly, b: &Poly) -> Poly {
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, ca) in a.iter().enumerate() {
        if ca.is_zero() {
            continue;
        }
        for (j, cb) in b.iter().enumerate() {
            out[i + j] += ca * cb;
        }
    }
    out
}

/// The polynomial `binom(y, i) = y (y−1) ⋯ (y−i+1) / i!` in `y`.
fn binom_poly(i: usize) -> Poly {
    let mut poly = vec![BigRational::one()];
    for t in 0..i {
        let factor = vec![
            BigRational::from_integer(-BigInt::from(t)),
            BigRational::one(),
        ];
        poly = poly_mul(&poly, &factor);
    }
    let scale = BigRational::from_integer(BigInt::from(factorial(i)));
    poly.into_iter().map(|c| c / &scale).collect()
}

/// One-faced maps with `n` edges counted by vertex count, from the closed
/// polynomial form: the returned vector is indexed by the vertex count `p`
/// (so entry 0 is always zero) and satisfies
/// `Σ_p table[p] y^p = (2n−1)!! Σ_{i≥1} 2^{i−1} binom(n, i−1) binom(y, i)`.
pub fn harer_zagier_table(n: usize) -> Vec<BigUint> {
    let mut acc = vec![BigRational::zero(); n + 2];
    for i in 1..=n + 1 {
        let weight = BigRational::from_integer(BigInt::from(
            (BigUint::one() << (i - 1)) * binomial(n, i - 1),
        ));
        for (p, c) in binom_poly(i).iter().enumerate() {
            acc[p] += &weight * c;
        }
    }
    let prefactor = BigRational::from_integer(BigInt::from(unicellular_total(n)));
    acc.iter()
        .map(|c| rational_to_uint(&(c * &prefactor)))
        .collect()
}

/// Bipartite one-faced maps with `m` edges counted by (white, black) vertex
/// counts, from the closed polynomial form
/// `Σ_{p,q} table[(p,q)] y^p z^q = m! Σ_{i,j≥1} (m−1)! / ((i−1)!(j−1)!(m+1−i−j)!) binom(y,i) binom(z,j)`.
///
/// Only non-zero entries are present in the returned table.
pub fn jackson_table(m: usize) -> BTreeMap<(usize, usize), BigUint> {
    let mut acc = vec![vec![BigRational::zero(); m + 2]; m + 2];
    for i in 1..=m {
        for j in 1..=m + 1 - i {
            let coeff = BigRational::new(
                BigInt::from(factorial(m.saturating_sub(1))),
                BigInt::from(factorial(i - 1) * factorial(j - 1) * factorial(m + 1 - i - j)),
            );
            let poly_y = binom_poly(i);
            let poly_z = binom_poly(j);
            for (p, cy) in poly_y.iter().enumerate() {
                if cy.is_zero() {
                    continue;
                }
                for (q, cz) in poly_z.iter().enumerate() {
                    acc[p][q] += &coeff * cy * cz;
                }
            }
        }
    }
    let prefactor = BigRational::from_integer(BigInt::from(factorial(m)));
    let mut table = BTreeMap::new();
    for (p, row) in acc.iter().enumerate() {
        for (q, c) in row.iter().enumerate() {
            let value = rational_to_uint(&(c * &prefactor));
            if !value.is_zero() {
                table.insert((p, q), value);
            }
        }
    }
    table
}

/// One enumerated-count-versus-closed-form comparison.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyRow {
    /// Name of the identity the row checks.
    pub formula: &'static str,
    /// Size parameter of the counted objects (edges of the left-hand side).
    pub n: usize,
    /// First refinement parameter, when the identity is refined.
    pub param1: Option<usize>,
    /// Second refinement parameter, when the identity is doubly refined.
    pub param2: Option<usize>,
    /// Exhaustively enumerated count.
    pub lhs: BigUint,
    /// Closed form or convolution of closed forms.
    pub rhs: BigUint,
}

/// CSV header matching [`VerifyRow::csv_line`].
pub const CSV_HEADER: &str = "formula,n,param1,param2,lhs,rhs,pass";

impl VerifyRow {
    /// Whether the enumerated count equals the closed form.
    pub fn pass(&self) -> bool {
        self.lhs == self.rhs
    }

    /// The row as one CSV line (empty fields for absent parameters).
    pub fn csv_line(&self) -> String {
        let opt = |v: Option<usize>| v.map(|x| x.to_string()).unwrap_or_default();
        format!(
            "{},{},{},{},{},{},{}",
            self.formula,
            self.n,
            opt(self.param1),
            opt(self.param2),
            self.lhs,
            self.rhs,
            self.pass()
        )
    }
}

fn get1(table: &BTreeMap<usize, BigUint>, key: usize) -> BigUint {
    table.get(&key).cloned().unwrap_or_default()
}

fn get2(table: &BTreeMap<(usize, usize), BigUint>, key: (usize, usize)) -> BigUint {
    table.get(&key).cloned().unwrap_or_default()
}

/// Verifies the covered-map product identities for all `n ≤ n_max`: the
/// total count `(2n)!/n!`, and the genus- and (vertices, faces)-refined
/// products `C_g(n) = Cat(n) · B_g(n+1)` and
/// `C^{v,f}(n) = Cat(n) · B^{v,f}(n+1)`.
pub fn verify_covered_product(n_max: usize, limits: &EnumLimits) -> Result<Vec<VerifyRow>> {
    let mut rows = Vec::new();
    for n in 0..=n_max {
        let by_genus = count_covered_by_genus(n, limits)?;
        let total: BigUint = by_genus.values().sum();
        rows.push(VerifyRow {
            formula: "covered-total",
            n,
            param1: None,
            param2: None,
            lhs: total,
            rhs: covered_total(n),
        });

        let cat = catalan(n);
        let b_genus = count_bipartite_unicellular_by_genus(n + 1, limits)?;
        let genus_keys: BTreeSet<usize> =
            by_genus.keys().chain(b_genus.keys()).copied().collect();
        for g in genus_keys {
            rows.push(VerifyRow {
                formula: "covered-by-genus-product",
                n,
                param1: Some(g),
                param2: None,
                lhs: get1(&by_genus, g),
                rhs: &cat * get1(&b_genus, g),
            });
        }

        let by_vf = count_covered_by_vf(n, limits)?;
        let b_colours = count_bipartite_unicellular_by_colours(n + 1, limits)?;
        let vf_keys: BTreeSet<(usize, usize)> =
            by_vf.keys().chain(b_colours.keys()).copied().collect();
        for (v, f) in vf_keys {
            rows.push(VerifyRow {
                formula: "covered-by-vf-product",
                n,
                param1: Some(v),
                param2: Some(f),
                lhs: get2(&by_vf, (v, f)),
                rhs: &cat * get2(&b_colours, (v, f)),
            });
        }
    }
    Ok(rows)
}

/// Verifies, for all `n ≤ n_max`, that the vertex-count distribution of
/// one-faced maps matches the closed polynomial form, and that the
/// one-vertex counts obey `(k+1) A¹(k) = (2k−1)!!` for even `k` with
/// `A¹(k) = 0` for odd `k`.
pub fn verify_harer_zagier(n_max: usize, limits: &EnumLimits) -> Result<Vec<VerifyRow>> {
    let mut rows = Vec::new();
    for n in 0..=n_max {
        let enumerated = count_unicellular_by_vertices(n, limits)?;
        let table = harer_zagier_table(n);
        for p in 1..=n + 1 {
            rows.push(VerifyRow {
                formula: "harer-zagier",
                n,
                param1: Some(p),
                param2: None,
                lhs: get1(&enumerated, p),
                rhs: table[p].clone(),
            });
        }
    }
    for k in 0..=n_max {
        let one_vertex = get1(&count_unicellular_by_vertices(k, limits)?, 1);
        let (lhs, rhs) = if k % 2 == 0 {
            (one_vertex * big(k + 1), unicellular_total(k))
        } else {
            (one_vertex, BigUint::zero())
        };
        rows.push(VerifyRow {
            formula: "one-vertex-ratio",
            n: k,
            param1: None,
            param2: None,
            lhs,
            rhs,
        });
    }
    Ok(rows)
}

/// Verifies, for all `n ≤ n_max` (with `m = n + 1`), that the
/// (white, black) distribution of bipartite one-faced maps with `m` edges
/// matches the closed polynomial form, and that it equals the parity
/// convolution `Σ_k n!(n+1)!/((2k)!(2n−2k)!) · A^p(k) A^q(n−k)` of the
/// vertex-count distributions of general one-faced maps.
pub fn verify_jackson(n_max: usize, limits: &EnumLimits) -> Result<Vec<VerifyRow>> {
    let mut rows = Vec::new();
    for n in 0..=n_max {
        let m = n + 1;
        let enumerated = count_bipartite_unicellular_by_colours(m, limits)?;
        let table = jackson_table(m);
        for p in 1..=m {
            for q in 1..=m {
                rows.push(VerifyRow {
                    formula: "jackson",
                    n: m,
                    param1: Some(p),
                    param2: Some(q),
                    lhs: get2(&enumerated, (p, q)),
                    rhs: get2(&table, (p, q)),
                });
            }
        }

        let vertex_tables: Vec<BTreeMap<usize, BigUint>> = (0..=n)
            .map(|k| count_unicellular_by_vertices(k, limits))
            .collect::<Result<_>>()?;
        for p in 1..=m {
            for q in 1..=m {
                // the individual coefficients are half-integers; only the
                // full sum is guaranteed to be integral
                let mut conv = BigRational::zero();
                for k in 0..=n {
                    let coeff = BigRational::new(
                        BigInt::from(factorial(n) * factorial(n + 1)),
                        BigInt::from(factorial(2 * k) * factorial(2 * (n - k))),
                    );
                    let a_p = get1(&vertex_tables[k], p);
                    let a_q = get1(&vertex_tables[n - k], q);
                    conv += coeff * BigRational::from_integer(BigInt::from(a_p * a_q));
                }
                rows.push(VerifyRow {
                    formula: "bipartite-from-general-convolution",
                    n: m,
                    param1: Some(p),
                    param2: Some(q),
                    lhs: get2(&enumerated, (p, q)),
                    rhs: rational_to_uint(&conv),
                });
            }
        }
    }
    Ok(rows)
}

/// Verifies `T₀(n) = Cat(n) · Cat(n+1)` for all `n ≤ n_max` by exhaustive
/// enumeration of planar maps with a marked spanning tree.
pub fn verify_mullin(n_max: usize, limits: &EnumLimits) -> Result<Vec<VerifyRow>> {
    let mut rows = Vec::new();
    for n in 0..=n_max {
        let enumerated = count_tree_rooted_by_genus(n, limits)?;
        rows.push(VerifyRow {
            formula: "mullin-planar-tree-rooted",
            n,
            param1: None,
            param2: None,
            lhs: get1(&enumerated, 0),
            rhs: planar_tree_rooted_total(n),
        });
    }
    Ok(rows)
}

/// Verifies the toroidal closed form `T₁(n)` for all `n ≤ n_max` by
/// exhaustive enumeration of toroidal maps with a marked spanning tree.
pub fn verify_lehman_walsh(n_max: usize, limits: &EnumLimits) -> Result<Vec<VerifyRow>> {
    let mut rows = Vec::new();
    for n in 0..=n_max {
        let enumerated = count_tree_rooted_by_genus(n, limits)?;
        rows.push(VerifyRow {
            formula: "lehman-walsh-toroidal",
            n,
            param1: None,
            param2: None,
            lhs: get1(&enumerated, 1),
            rhs: toroidal_tree_rooted_total(n),
        });
    }
    Ok(rows)
}

/// Verifies the shuffle convolutions for all `n ≤ n_max`: covered maps
/// refined by subset size against `binom(2n,2k) A(k) A(n−k)`, by genus
/// pair, by (vertices, faces), and the spanning-tree case against
/// `Σ_m binom(2n,2m) Cat(m) A_g(n−m)`.
pub fn verify_shuffle(n_max: usize, limits: &EnumLimits) -> Result<Vec<VerifyRow>> {
    let mut rows = Vec::new();
    for n in 0..=n_max {
        let split = count_covered_by_split(n, limits)?;
        let genus_tables: Vec<BTreeMap<usize, BigUint>> = (0..=n)
            .map(|k| count_unicellular_by_genus(k, limits))
            .collect::<Result<_>>()?;
        let vertex_tables: Vec<BTreeMap<usize, BigUint>> = (0..=n)
            .map(|k| count_unicellular_by_vertices(k, limits))
            .collect::<Result<_>>()?;

        // refined by subset edge count
        for n1 in 0..=n {
            let lhs: BigUint = split
                .iter()
                .filter(|((k, _, _), _)| *k == n1)
                .map(|(_, count)| count)
                .sum();
            let rhs =
                binomial(2 * n, 2 * n1) * unicellular_total(n1) * unicellular_total(n - n1);
            rows.push(VerifyRow {
                formula: "shuffle-refined",
                n,
                param1: Some(n1),
                param2: None,
                lhs,
                rhs,
            });
        }

        // refined by the genus pair (submap, dual complement)
        let max_genus = n / 2;
        for g1 in 0..=max_genus {
            for g2 in 0..=max_genus {
                let lhs: BigUint = split
                    .iter()
                    .filter(|((_, a, b), _)| (*a, *b) == (g1, g2))
                    .map(|(_, count)| count)
                    .sum();
                let mut rhs = BigUint::zero();
                for m in 0..=n {
                    rhs += binomial(2 * n, 2 * m)
                        * get1(&genus_tables[m], g1)
                        * get1(&genus_tables[n - m], g2);
                }
                if !lhs.is_zero() || !rhs.is_zero() {
                    rows.push(VerifyRow {
                        formula: "shuffle-by-genus",
                        n,
                        param1: Some(g1),
                        param2: Some(g2),
                        lhs,
                        rhs,
                    });
                }
            }
        }

        // refined by vertices and faces of the covered map
        let by_vf = count_covered_by_vf(n, limits)?;
        for v in 1..=n + 1 {
            for f in 1..=n + 1 {
                let mut rhs = BigUint::zero();
                for k in 0..=n {
                    rhs += binomial(2 * n, 2 * k)
                        * get1(&vertex_tables[k], v)
                        * get1(&vertex_tables[n - k], f);
                }
                let lhs = get2(&by_vf, (v, f));
                if !lhs.is_zero() || !rhs.is_zero() {
                    rows.push(VerifyRow {
                        formula: "shuffle-by-vf",
                        n,
                        param1: Some(v),
                        param2: Some(f),
                        lhs,
                        rhs,
                    });
                }
            }
        }

        // spanning-tree-marked maps by genus
        let tree_rooted = count_tree_rooted_by_genus(n, limits)?;
        for g in 0..=max_genus {
            let mut rhs = BigUint::zero();
            for m in 0..=n {
                rhs += binomial(2 * n, 2 * m) * catalan(m) * get1(&genus_tables[n - m], g);
            }
            let lhs = get1(&tree_rooted, g);
            if !lhs.is_zero() || !rhs.is_zero() {
                rows.push(VerifyRow {
                    formula: "tree-rooted-convolution",
                    n,
                    param1: Some(g),
                    param2: None,
                    lhs,
                    rhs,
                });
            }
        }
    }
    Ok(rows)
}

/// Verifies, for all `1 ≤ n ≤ n_max`, the one-black-vertex recursion:
/// `Σ_q B^{p,q}(n+1) = n(n+1)/2 · B^{p,1}(n)` when `p ≡ n (mod 2)`, and
/// `B^{p,1}(n) = 0` otherwise.
pub fn verify_zagier(n_max: usize, limits: &EnumLimits) -> Result<Vec<VerifyRow>> {
    let mut rows = Vec::new();
    for n in 1..=n_max {
        let colours_large = count_bipartite_unicellular_by_colours(n + 1, limits)?;
        let colours_small = count_bipartite_unicellular_by_colours(n, limits)?;
        for p in 1..=n + 1 {
            if p % 2 == n % 2 {
                let lhs: BigUint = colours_large
                    .iter()
                    .filter(|((white, _), _)| *white == p)
                    .map(|(_, count)| count)
                    .sum();
                let rhs = big(n * (n + 1) / 2) * get2(&colours_small, (p, 1));
                rows.push(VerifyRow {
                    formula: "zagier-one-black",
                    n: n + 1,
                    param1: Some(p),
                    param2: None,
                    lhs,
                    rhs,
                });
            } else if p <= n {
                rows.push(VerifyRow {
                    formula: "zagier-one-black",
                    n,
                    param1: Some(p),
                    param2: None,
                    lhs: get2(&colours_small, (p, 1)),
                    rhs: BigUint::zero(),
                });
            }
        }
    }
    Ok(rows)
}

/// Runs every verifier at the same depth and concatenates the rows.
pub fn verify_all(n_max: usize, limits: &EnumLimits) -> Result<Vec<VerifyRow>> {
    let mut rows = Vec::new();
    rows.extend(verify_covered_product(n_max, limits)?);
    rows.extend(verify_harer_zagier(n_max, limits)?);
    rows.extend(verify_jackson(n_max, limits)?);
    rows.extend(verify_mullin(n_max, limits)?);
    rows.extend(verify_lehman_walsh(n_max, limits)?);
    rows.extend(verify_shuffle(n_max, limits)?);
    rows.extend(verify_zagier(n_max, limits)?);
    Ok(rows)
}
