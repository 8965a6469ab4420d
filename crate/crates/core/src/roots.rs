//! Exact realizations of crystallographic root systems.
//!
//! Every irreducible type is realized in the standard Bourbaki coordinates:
//!
//! | type | ambient | simple roots |
//! |------|---------|--------------|
//! | `An` | `n+1`   | `e_i - e_{i+1}` |
//! | `Bn` | `n`     | `e_i - e_{i+1}`, `e_n` |
//! | `Cn` | `n`     | `e_i - e_{i+1}`, `2e_n` |
//! | `Dn` | `n`     | `e_i - e_{i+1}`, `e_{n-1} + e_n` |
//! | `G2` | `3`     | `e_1 - e_2`, `-2e_1 + e_2 + e_3` |
//! | `F4` | `4`     | `e_2 - e_3`, `e_3 - e_4`, `e_4`, `(e_1 - e_2 - e_3 - e_4)/2` |
//! | `En` | `8`     | first `n` of the `E8` simple roots `(e_1 + e_8 - e_2 - ... - e_7)/2`, `e_1 + e_2`, `e_2 - e_1`, ..., `e_7 - e_6` |
//!
//! Reducible types are orthogonal direct sums, components laid out in the
//! order they are written. Positive roots are indexed `0..N` sorted by height
//! and then by simple-root coefficients in decreasing lexicographic order (so
//! the simple roots come first, in Bourbaki order); the negative of positive
//! root `k` has index `N + k`.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use num_rational::Rational64;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = Rational64;

/// A vector of the ambient inner-product space, with exact coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootVector(Vec<Rational>);

impl RootVector {
    pub fn new(coords: Vec<Rational>) -> Self {
        RootVector(coords)
    }

    pub fn zero(dim: usize) -> Self {
        RootVector(vec![Rational::zero(); dim])
    }

    pub fn from_integers(coords: &[i64]) -> Self {
        RootVector(coords.iter().map(|&c| Rational::from_integer(c)).collect())
    }

    pub fn coords(&self) -> &[Rational] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    fn dot(&self, other: &RootVector) -> Rational {
        self.0
            .iter()
            .zip(&other.0)
            .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
    }

    fn axpy(&self, scale: Rational, other: &RootVector) -> RootVector {
        RootVector(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a + scale * b)
                .collect(),
        )
    }

    pub fn neg(&self) -> RootVector {
        RootVector(self.0.iter().map(|c| -c).collect())
    }
}

impl fmt::Display for RootVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, c) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }

    fn from_letter(c: char) -> Option<Family> {
        Some(match c {
            'A' => Family::A,
            'B' => Family::B,
            'C' => Family::C,
            'D' => Family::D,
            'E' => Family::E,
            'F' => Family::F,
            'G' => Family::G,
            _ => return None,
        })
    }
}

/// One irreducible component of a Cartan type, e.g. `B3`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SimpleType {
    pub family: Family,
    pub rank: usize,
}

impl SimpleType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A | Family::B | Family::C => rank >= 1,
            Family::D => rank >= 3,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if ok {
            Ok(SimpleType { family, rank })
        } else {
            Err(Error::UnsupportedRank {
                family: family.letter(),
                rank,
            })
        }
    }

    /// Closed-form number of roots.
    pub fn root_count(&self) -> usize {
        let n = self.rank;
        match self.family {
            Family::A => n * (n + 1),
            Family::B | Family::C => 2 * n * n,
            Family::D => 2 * n * (n - 1),
            Family::E => match n {
                6 => 72,
                7 => 126,
                _ => 240,
            },
            Family::F => 48,
            Family::G => 12,
        }
    }

    fn ambient_dim(&self) -> usize {
        match self.family {
            Family::A if self.rank == 1 => 1,
            Family::A => self.rank + 1,
            Family::B | Family::C | Family::D => self.rank,
            Family::E => 8,
            Family::F => 4,
            Family::G => 3,
        }
    }

    fn simple_roots(&self) -> Vec<RootVector> {
        let n = self.rank;
        let d = self.ambient_dim();
        let int = Rational::from_integer;
        let half = Rational::new(1, 2);
        let unit_diff = |i: usize, j: usize, si: i64, sj: i64| {
            let mut v = vec![Rational::zero(); d];
            v[i] += int(si);
            v[j] += int(sj);
            RootVector(v)
        };
        let unit = |i: usize, s: i64| {
            let mut v = vec![Rational::zero(); d];
            v[i] = int(s);
            RootVector(v)
        };
        match self.family {
            // A1 sits on a line so that products of A1 factors stay small
            Family::A if n == 1 => vec![unit(0, 1)],
            Family::A => (0..n).map(|i| unit_diff(i, i + 1, 1, -1)).collect(),
            Family::B | Family::C | Family::D => {
                let mut out: Vec<RootVector> =
                    (0..n - 1).map(|i| unit_diff(i, i + 1, 1, -1)).collect();
                out.push(match self.family {
                    Family::B => unit(n - 1, 1),
                    Family::C => unit(n - 1, 2),
                    _ => unit_diff(n - 2, n - 1, 1, 1),
                });
                out
            }
            Family::G => vec![
                RootVector::from_integers(&[1, -1, 0]),
                RootVector::from_integers(&[-2, 1, 1]),
            ],
            Family::F => vec![
                RootVector::from_integers(&[0, 1, -1, 0]),
                RootVector::from_integers(&[0, 0, 1, -1]),
                RootVector::from_integers(&[0, 0, 0, 1]),
                RootVector(vec![half, -half, -half, -half]),
            ],
            Family::E => {
                let mut e8 = vec![
                    RootVector(vec![half, -half, -half, -half, -half, -half, -half, half]),
                    unit_diff(0, 1, 1, 1),
                ];
                for i in 0..6 {
                    e8.push(unit_diff(i + 1, i, 1, -1));
                }
                e8.truncate(n);
                e8
            }
        }
    }
}

impl fmt::Display for SimpleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

/// A (possibly reducible) Cartan type such as `A3` or `A1xB2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CartanType(Vec<SimpleType>);

impl CartanType {
    pub fn components(&self) -> &[SimpleType] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.iter().map(|c| c.rank).sum()
    }

    pub fn root_count(&self) -> usize {
        self.0.iter().map(SimpleType::root_count).sum()
    }

    /// Rank `n` when the type is a single `An`.
    pub fn type_a_rank(&self) -> Option<usize> {
        match self.0.as_slice() {
            [SimpleType {
                family: Family::A,
                rank,
            }] => Some(*rank),
            _ => None,
        }
    }
}

impl FromStr for CartanType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::MalformedType(s.to_string()));
        }
        let mut comps = Vec::new();
        for part in s.split('x') {
            let mut chars = part.chars();
            let family = chars
                .next()
                .and_then(Family::from_letter)
                .ok_or_else(|| Error::MalformedType(s.to_string()))?;
            let digits = chars.as_str();
            if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                return Err(Error::MalformedType(s.to_string()));
            }
            let rank: usize = digits
                .parse()
                .map_err(|_| Error::MalformedType(s.to_string()))?;
            comps.push(SimpleType::new(family, rank)?);
        }
        Ok(CartanType(comps))
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, c) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, "x")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

/// A finite crystallographic root system with a fixed positive system.
///
/// Immutable once built. Roots are addressed by index everywhere else in the
/// crate; see the module docs for the index layout.
#[derive(Debug)]
pub struct RootSystem {
    cartan_type: CartanType,
    ambient_dim: usize,
    roots: Vec<RootVector>,
    coefficients: Vec<Vec<i32>>,
    coefficient_index: HashMap<Vec<i32>, usize>,
    num_positive: usize,
    simple: Vec<usize>,
    reflection_table: Vec<Vec<u32>>,
    cartan_matrix: Vec<Vec<i32>>,
    positive_sums: Vec<Option<u32>>,
}

impl PartialEq for RootSystem {
    fn eq(&self, other: &Self) -> bool {
        // construction is deterministic in the type
        self.cartan_type == other.cartan_type
    }
}

impl Eq for RootSystem {}

impl RootSystem {
    pub fn build(cartan_type: &CartanType) -> Result<RootSystem> {
        let comps = cartan_type.components();
        let ambient_dim: usize = comps.iter().map(SimpleType::ambient_dim).sum();
        let rank = cartan_type.rank();

        let mut simple_vectors = Vec::with_capacity(rank);
        let mut offset = 0;
        for comp in comps {
            for v in comp.simple_roots() {
                let mut full = vec![Rational::zero(); ambient_dim];
                full[offset..offset + v.dim()].clone_from_slice(&v.0);
                simple_vectors.push(RootVector(full));
            }
            offset += comp.ambient_dim();
        }

        let mut cartan_matrix = vec![vec![0i32; rank]; rank];
        for i in 0..rank {
            let norm = simple_vectors[i].dot(&simple_vectors[i]);
            for j in 0..rank {
                let c =
                    Rational::from_integer(2) * simple_vectors[i].dot(&simple_vectors[j]) / norm;
                if !c.is_integer() {
                    return Err(Error::InvariantViolation(format!(
                        "non-integral Cartan entry for {cartan_type}"
                    )));
                }
                cartan_matrix[i][j] = *c.numer() as i32;
            }
        }

        // Orbit of the simple roots under simple reflections, in simple-root
        // coordinates: s_i(b) = b - <b, a_i^vee> a_i.
        let mut seen: HashMap<Vec<i32>, ()> = HashMap::new();
        let mut queue = VecDeque::new();
        for i in 0..rank {
            let mut e = vec![0i32; rank];
            e[i] = 1;
            seen.insert(e.clone(), ());
            queue.push_back(e);
        }
        while let Some(beta) = queue.pop_front() {
            for i in 0..rank {
                let pairing: i32 = (0..rank).map(|j| beta[j] * cartan_matrix[i][j]).sum();
                if pairing == 0 {
                    continue;
                }
                let mut image = beta.clone();
                image[i] -= pairing;
                if !seen.contains_key(&image) {
                    seen.insert(image.clone(), ());
                    queue.push_back(image);
                }
            }
        }

        let mut positive: Vec<Vec<i32>> = seen
            .into_keys()
            .filter(|c| c.iter().all(|&x| x >= 0))
            .collect();
        positive.sort_by(|a, b| {
            let ha: i32 = a.iter().sum();
            let hb: i32 = b.iter().sum();
            ha.cmp(&hb).then_with(|| b.cmp(a))
        });
        let num_positive = positive.len();
        let mut coefficients = positive.clone();
        coefficients.extend(
            positive
                .iter()
                .map(|c| c.iter().map(|x| -x).collect::<Vec<_>>()),
        );

        let roots: Vec<RootVector> = coefficients
            .iter()
            .map(|c| {
                let mut v = RootVector::zero(ambient_dim);
                for (j, &cj) in c.iter().enumerate() {
                    if cj != 0 {
                        v = v.axpy(Rational::from_integer(cj as i64), &simple_vectors[j]);
                    }
                }
                v
            })
            .collect();

        let coefficient_index: HashMap<Vec<i32>, usize> = coefficients
            .iter()
            .enumerate()
            .map(|(k, c)| (c.clone(), k))
            .collect();

        let total = roots.len();
        let mut reflection_table = vec![vec![0u32; total]; total];
        for a in 0..total {
            let norm = roots[a].dot(&roots[a]);
            for b in 0..total {
                let pairing = Rational::from_integer(2) * roots[b].dot(&roots[a]) / norm;
                let p = *pairing.numer() as i32;
                let image: Vec<i32> = coefficients[b]
                    .iter()
                    .zip(&coefficients[a])
                    .map(|(x, y)| x - p * y)
                    .collect();
                let idx = *coefficient_index.get(&image).ok_or_else(|| {
                    Error::InvariantViolation(format!("{cartan_type} not closed under reflection"))
                })?;
                reflection_table[a][b] = idx as u32;
            }
        }

        let mut positive_sums = vec![None; num_positive * num_positive];
        for a in 0..num_positive {
            for b in 0..num_positive {
                let sum: Vec<i32> = coefficients[a]
                    .iter()
                    .zip(&coefficients[b])
                    .map(|(x, y)| x + y)
                    .collect();
                positive_sums[a * num_positive + b] =
                    coefficient_index.get(&sum).map(|&k| k as u32);
            }
        }

        Ok(RootSystem {
            cartan_type: cartan_type.clone(),
            ambient_dim,
            roots,
            coefficients,
            coefficient_index,
            num_positive,
            simple: (0..rank).collect(),
            reflection_table,
            cartan_matrix,
            positive_sums,
        })
    }

    pub fn cartan_type(&self) -> &CartanType {
        &self.cartan_type
    }

    pub fn rank(&self) -> usize {
        self.simple.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn roots(&self) -> &[RootVector] {
        &self.roots
    }

    pub fn root(&self, index: usize) -> &RootVector {
        &self.roots[index]
    }

    pub fn num_roots(&self) -> usize {
        self.roots.len()
    }

    pub fn num_positive(&self) -> usize {
        self.num_positive
    }

    pub fn is_positive(&self, index: usize) -> bool {
        index < self.num_positive
    }

    /// Root indices of the simple roots, in Bourbaki order.
    pub fn simple_roots(&self) -> &[usize] {
        &self.simple
    }

    pub fn negate(&self, index: usize) -> usize {
        if index < self.num_positive {
            index + self.num_positive
        } else {
            index - self.num_positive
        }
    }

    /// Index of the positive root among `±root(index)`.
    pub fn positive_of(&self, index: usize) -> usize {
        index % self.num_positive
    }

    /// Coordinates of a root in the basis of simple roots.
    pub fn coefficients(&self, index: usize) -> &[i32] {
        &self.coefficients[index]
    }

    pub fn index_of_coefficients(&self, coeffs: &[i32]) -> Option<usize> {
        self.coefficient_index.get(coeffs).copied()
    }

    pub fn height(&self, index: usize) -> i32 {
        self.coefficients[index].iter().sum()
    }

    /// `reflection_table()[a][b]` is the index of `s_a(b)`.
    pub fn reflection_table(&self) -> &[Vec<u32>] {
        &self.reflection_table
    }

    pub fn reflect_index(&self, alpha: usize, beta: usize) -> usize {
        self.reflection_table[alpha][beta] as usize
    }

    /// Cartan integers `<a_i^vee, a_j> = 2 (a_i, a_j) / (a_i, a_i)`.
    pub fn cartan_matrix(&self) -> &[Vec<i32>] {
        &self.cartan_matrix
    }

    /// Index of `a + b` when both are positive and the sum is a root.
    pub fn positive_sum(&self, a: usize, b: usize) -> Option<usize> {
        self.positive_sums[a * self.num_positive + b].map(|k| k as usize)
    }

    pub fn root_inner_product(&self, a: usize, b: usize) -> Rational {
        self.roots[a].dot(&self.roots[b])
    }

    /// Cartan integer `2 (a, b) / (a, a)` for two roots.
    pub fn cartan_integer(&self, a: usize, b: usize) -> i32 {
        let c = Rational::from_integer(2) * self.root_inner_product(a, b)
            / self.root_inner_product(a, a);
        *c.numer() as i32
    }

    pub fn index_of_vector(&self, v: &RootVector) -> Option<usize> {
        self.roots.iter().position(|r| r == v)
    }

    /// Component index and position within it for each simple root.
    pub fn component_of_simple(&self, simple: usize) -> (usize, usize) {
        let mut start = 0;
        for (k, comp) in self.cartan_type.components().iter().enumerate() {
            if simple < start + comp.rank {
                return (k, simple - start);
            }
            start += comp.rank;
        }
        panic!("simple root {simple} out of range")
    }
}

/// Build the root system for a type string such as `"B3"` or `"A1xA2"`.
pub fn build_root_system(cartan_type: &str) -> Result<RootSystem> {
    RootSystem::build(&cartan_type.parse()?)
}

/// `s_alpha(v) = v - 2 (v, alpha) / (alpha, alpha) alpha`.
pub fn reflect(rs: &RootSystem, alpha: usize, v: &RootVector) -> Result<RootVector> {
    if alpha >= rs.num_roots() {
        return Err(Error::IndexOutOfRange {
            index: alpha,
            limit: rs.num_roots(),
        });
    }
    let a = rs.root(alpha);
    if v.dim() != a.dim() {
        return Err(Error::DimensionMismatch {
            left: v.dim(),
            right: a.dim(),
        });
    }
    let scale = Rational::from_integer(2) * v.dot(a) / a.dot(a);
    Ok(v.axpy(-scale, a))
}

pub fn inner_product(rs: &RootSystem, v1: &RootVector, v2: &RootVector) -> Result<Rational> {
    for v in [v1, v2] {
        if v.dim() != rs.ambient_dim() {
            return Err(Error::DimensionMismatch {
                left: v.dim(),
                right: rs.ambient_dim(),
            });
        }
    }
    Ok(v1.dot(v2))
}

/// Gaussian elimination over the rationals on a small set of integer vectors.
///
/// Holds a basis and answers membership/coordinate queries for its span.
pub(crate) struct SpanSolver {
    dim: usize,
    basis_len: usize,
    // reduced rows: (pivot column, row over dim coords, combination over basis)
    rows: Vec<(usize, Vec<Rational>, Vec<Rational>)>,
}

impl SpanSolver {
    /// Returns `None` when the vectors are linearly dependent.
    pub(crate) fn new(basis: &[&[i32]]) -> Option<SpanSolver> {
        let dim = basis.first().map_or(0, |b| b.len());
        let mut solver = SpanSolver {
            dim,
            basis_len: basis.len(),
            rows: Vec::new(),
        };
        for (k, b) in basis.iter().enumerate() {
            let mut combo = vec![Rational::zero(); basis.len()];
            combo[k] = Rational::one();
            let (rest, combo) = solver.reduce(to_rational(b), combo);
            let pivot = rest.iter().position(|x| !x.is_zero())?;
            solver.rows.push((pivot, rest, combo));
        }
        Some(solver)
    }

    fn reduce(
        &self,
        mut v: Vec<Rational>,
        mut combo: Vec<Rational>,
    ) -> (Vec<Rational>, Vec<Rational>) {
        for (pivot, row, row_combo) in &self.rows {
            if v[*pivot].is_zero() {
                continue;
            }
            let f = v[*pivot] / row[*pivot];
            for j in 0..self.dim {
                v[j] -= f * row[j];
            }
            for j in 0..self.basis_len {
                combo[j] -= f * row_combo[j];
            }
        }
        (v, combo)
    }

    /// Coordinates of `v` in the basis, if `v` lies in the span.
    pub(crate) fn coordinates(&self, v: &[i32]) -> Option<Vec<Rational>> {
        let (rest, combo) = self.reduce(to_rational(v), vec![Rational::zero(); self.basis_len]);
        if rest.iter().all(Zero::is_zero) {
            // rest = v - sum(combo_j * b_j), so v = -combo
            Some(combo.into_iter().map(|c| -c).collect())
        } else {
            None
        }
    }
}

fn to_rational(v: &[i32]) -> Vec<Rational> {
    v.iter()
        .map(|&x| Rational::from_integer(x as i64))
        .collect()
}

pub(crate) fn is_nonnegative(coords: &[Rational]) -> bool {
    coords.iter().all(|c| !c.is_negative())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(t: &str) -> RootSystem {
        build_root_system(t).unwrap()
    }

    #[test]
    fn small_counts() {
        let a1 = rs("A1");
        assert_eq!((a1.num_roots(), a1.num_positive(), a1.rank()), (2, 1, 1));
        let a2 = rs("A2");
        assert_eq!((a2.num_roots(), a2.num_positive()), (6, 3));
        let g2 = rs("G2");
        assert_eq!((g2.num_roots(), g2.num_positive()), (12, 6));
        let lengths: std::collections::BTreeSet<_> =
            (0..12).map(|k| g2.root_inner_product(k, k)).collect();
        assert_eq!(lengths.len(), 2);
    }

    #[test]
    fn product_is_orthogonal() {
        let p = rs("A1xA1");
        assert_eq!(p.num_roots(), 4);
        assert_eq!(p.ambient_dim(), 2);
        assert_eq!(p.root_inner_product(0, 1), Rational::zero());
        assert_eq!(p.cartan_matrix(), &[vec![2, 0], vec![0, 2]]);
    }

    #[test]
    fn parse_errors() {
        for bad in [
            "", "A", "A0", "H3", "D2", "D1", "E5", "E9", "F3", "G3", "A2xx", "a2", "A2 x B2", "A-1",
        ] {
            assert!(build_root_system(bad).is_err(), "{bad} should be rejected");
        }
        assert!(matches!(
            build_root_system("D2"),
            Err(Error::UnsupportedRank {
                family: 'D',
                rank: 2
            })
        ));
        assert!(matches!(
            build_root_system("Q2"),
            Err(Error::MalformedType(_))
        ));
    }

    #[test]
    fn aliases_are_accepted() {
        for t in ["B1", "C1"] {
            let r = rs(t);
            assert_eq!(r.num_roots(), 2);
            assert_eq!(r.cartan_matrix(), &[vec![2]]);
        }
        let c2 = rs("C2");
        let b2 = rs("B2");
        assert_eq!(c2.num_roots(), 8);
        // C2 is B2 with the simple roots swapped
        assert_eq!(c2.cartan_matrix()[0][1], b2.cartan_matrix()[1][0]);
        assert_eq!(c2.cartan_matrix()[1][0], b2.cartan_matrix()[0][1]);
    }

    #[test]
    fn reflect_examples_a2() {
        let a2 = rs("A2");
        let a1 = a2.root(0).clone();
        let a2v = a2.root(1).clone();
        assert_eq!(reflect(&a2, 0, &a1).unwrap(), a1.neg());
        let fixed = RootVector::from_integers(&[1, 1, 1]);
        assert_eq!(reflect(&a2, 0, &fixed).unwrap(), fixed);
        let sum = reflect(&a2, 0, &a2v).unwrap();
        assert_eq!(sum, RootVector::from_integers(&[1, 0, -1]));
        assert_eq!(a2.coefficients(a2.index_of_vector(&sum).unwrap()), &[1, 1]);
    }

    #[test]
    fn inner_product_examples() {
        let a2 = rs("A2");
        let r = |k| a2.root(k).clone();
        assert_eq!(
            inner_product(&a2, &r(0), &r(0)).unwrap(),
            Rational::from_integer(2)
        );
        assert_eq!(
            inner_product(&a2, &r(0), &r(1)).unwrap(),
            Rational::from_integer(-1)
        );
        assert_eq!(
            inner_product(&a2, &r(2), &RootVector::zero(3)).unwrap(),
            Rational::zero()
        );
        assert!(matches!(
            inner_product(&a2, &r(0), &RootVector::zero(2)),
            Err(Error::DimensionMismatch { .. })
        ));
        assert!(reflect(&a2, 6, &r(0)).is_err());
    }

    #[test]
    fn span_solver_coordinates() {
        let s = SpanSolver::new(&[&[1, 0, 0], &[0, 1, 1]]).unwrap();
        let c = s.coordinates(&[2, 3, 3]).unwrap();
        assert_eq!(
            c,
            vec![Rational::from_integer(2), Rational::from_integer(3)]
        );
        assert!(s.coordinates(&[0, 1, 0]).is_none());
        assert!(SpanSolver::new(&[&[1, 1], &[2, 2]]).is_none());
    }
}
