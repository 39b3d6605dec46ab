//! Finite matrix groups, representations, characters and subgroups.

use crate::arith::smith::cokernel_factors;
use crate::arith::{ArithError, CycMatrix, CycNum, Rational};
use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use std::collections::{BTreeSet, HashMap, VecDeque};
use std::sync::Arc;

pub const DEFAULT_GROUP_CAP: usize = 10_000;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GroupError {
    #[error(transparent)]
    Arith(#[from] ArithError),
    #[error("group closure exceeded cap of {0} elements")]
    CapExceeded(usize),
    #[error("generator {0} is not invertible")]
    NotInvertible(usize),
    #[error("no generators given")]
    NoGenerators,
    #[error("generators have inconsistent shape or level")]
    InconsistentGenerators,
    #[error("images do not define a homomorphism")]
    NotHomomorphism,
    #[error("representations live on different groups")]
    GroupMismatch,
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("representation is not faithful")]
    NotFaithful,
    #[error("multiplicity is not a nonnegative integer: {0}")]
    NonIntegerMultiplicity(String),
    #[error("{0} is not a permutation matrix")]
    NotPermutation(usize),
    #[error("no point with stabilizer equal to the kernel found after {0} samples")]
    NoGenericPoint(usize),
}

/// A finite group of invertible matrices, elements in BFS order from the identity.
#[derive(Debug, Clone)]
pub struct MatrixGroup {
    degree: usize,
    level: u32,
    elements: Vec<CycMatrix>,
    cayley: Vec<Vec<usize>>,
    inverses: Vec<usize>,
    generator_indices: Vec<usize>,
    // how each element was first reached: (earlier element, generator position)
    words: Vec<Option<(usize, usize)>>,
}

/// Closes the generators under multiplication.
pub fn close_group(generators: &[CycMatrix], cap: usize) -> Result<MatrixGroup, GroupError> {
    let first = generators.first().ok_or(GroupError::NoGenerators)?;
    let degree = first.rows();
    let level = first.level();
    for (i, g) in generators.iter().enumerate() {
        if !g.is_square() || g.rows() != degree || g.level() != level {
            return Err(GroupError::InconsistentGenerators);
        }
        if g.det()?.is_zero() {
            return Err(GroupError::NotInvertible(i));
        }
    }
    let mut elements = vec![CycMatrix::identity(degree, level)];
    let mut index: HashMap<CycMatrix, usize> = HashMap::new();
    index.insert(elements[0].clone(), 0);
    let mut words = vec![None];
    let mut right: Vec<Vec<usize>> = Vec::new();
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        let mut row = Vec::with_capacity(generators.len());
        for (gi, g) in generators.iter().enumerate() {
            let prod = elements[i].mul(g)?;
            let j = match index.get(&prod) {
                Some(&j) => j,
                None => {
                    let j = elements.len();
                    if j >= cap {
                        return Err(GroupError::CapExceeded(cap));
                    }
                    index.insert(prod.clone(), j);
                    elements.push(prod);
                    words.push(Some((i, gi)));
                    queue.push_back(j);
                    j
                }
            };
            row.push(j);
        }
        right.push(row);
    }
    let n = elements.len();
    let mut cayley = vec![vec![0usize; n]; n];
    for (i, row) in cayley.iter_mut().enumerate() {
        row[0] = i;
        for j in 1..n {
            let (p, gi) = words[j].expect("non-identity element has a word");
            row[j] = right[row[p]][gi];
        }
    }
    let inverses = (0..n)
        .map(|i| (0..n).find(|&j| cayley[i][j] == 0).expect("finite group"))
        .collect();
    let generator_indices = generators.iter().map(|g| index[g]).collect();
    Ok(MatrixGroup {
        degree,
        level,
        elements,
        cayley,
        inverses,
        generator_indices,
        words,
    })
}

impl MatrixGroup {
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[CycMatrix] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &CycMatrix {
        &self.elements[i]
    }

    pub fn cayley(&self) -> &[Vec<usize>] {
        &self.cayley
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.cayley[a][b]
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.inverses[a]
    }

    pub fn generator_indices(&self) -> &[usize] {
        &self.generator_indices
    }

    pub fn index_of(&self, m: &CycMatrix) -> Option<usize> {
        self.elements.iter().position(|e| e == m)
    }

    /// Order of the element with index `a`.
    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut t = 1;
        while x != 0 {
            x = self.cayley[x][a];
            t += 1;
        }
        t
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|i| (0..i).all(|j| self.cayley[i][j] == self.cayley[j][i]))
    }

    pub fn whole(&self) -> Subgroup {
        Subgroup {
            members: (0..self.order()).collect(),
        }
    }

    pub fn trivial_subgroup(&self) -> Subgroup {
        Subgroup { members: vec![0] }
    }

    /// Smallest subgroup containing the given elements.
    pub fn generated_subgroup(&self, gens: &[usize]) -> Subgroup {
        let mut seen = BTreeSet::from([0usize]);
        let mut queue = VecDeque::from([0usize]);
        while let Some(x) = queue.pop_front() {
            for &g in gens {
                let y = self.cayley[x][g];
                if seen.insert(y) {
                    queue.push_back(y);
                }
            }
        }
        Subgroup {
            members: seen.into_iter().collect(),
        }
    }

    /// Smallest normal subgroup containing the given elements.
    pub fn normal_closure(&self, gens: &[usize]) -> Subgroup {
        let conjugates: BTreeSet<usize> = gens
            .iter()
            .flat_map(|&g| (0..self.order()).map(move |h| (g, h)))
            .map(|(g, h)| self.conjugate(g, h))
            .collect();
        let conjugates: Vec<usize> = conjugates.into_iter().collect();
        self.generated_subgroup(&conjugates)
    }

    /// h·g·h⁻¹
    pub fn conjugate(&self, g: usize, h: usize) -> usize {
        self.cayley[self.cayley[h][g]][self.inverses[h]]
    }

    pub fn is_normal(&self, sub: &Subgroup) -> bool {
        sub.members
            .iter()
            .all(|&g| (0..self.order()).all(|h| sub.contains(self.conjugate(g, h))))
    }

    pub fn intersect(&self, a: &Subgroup, b: &Subgroup) -> Subgroup {
        Subgroup {
            members: a.members.iter().copied().filter(|&x| b.contains(x)).collect(),
        }
    }

    /// The quotient by a normal subgroup, as an abstract group.
    pub fn quotient(&self, normal: &Subgroup) -> Result<AbstractQuotient, GroupError> {
        if !self.is_normal(normal) {
            return Err(GroupError::NotNormal);
        }
        let n = self.order();
        let mut coset_of = vec![usize::MAX; n];
        let mut representatives = Vec::new();
        for g in 0..n {
            if coset_of[g] != usize::MAX {
                continue;
            }
            let c = representatives.len();
            representatives.push(g);
            for &h in &normal.members {
                coset_of[self.cayley[g][h]] = c;
            }
        }
        let q = representatives.len();
        let table: Vec<Vec<usize>> = representatives
            .iter()
            .map(|&a| {
                representatives
                    .iter()
                    .map(|&b| coset_of[self.cayley[a][b]])
                    .collect()
            })
            .collect();
        let is_abelian = (0..q).all(|i| (0..i).all(|j| table[i][j] == table[j][i]));
        let gens: Vec<usize> = self.generator_indices.iter().map(|&g| coset_of[g]).collect();
        let invariant_factors = if is_abelian {
            abelian_invariant_factors(&table, &gens)
        } else {
            Vec::new()
        };
        Ok(AbstractQuotient {
            order: q,
            table,
            invariant_factors,
            is_abelian,
            coset_of,
            representatives,
        })
    }

    /// The subgroup as a matrix group of its own with induced Cayley data.
    pub fn induced(&self, sub: &Subgroup) -> MatrixGroup {
        let pos: HashMap<usize, usize> = sub.members.iter().enumerate().map(|(i, &g)| (g, i)).collect();
        let cayley: Vec<Vec<usize>> = sub
            .members
            .iter()
            .map(|&a| sub.members.iter().map(|&b| pos[&self.cayley[a][b]]).collect())
            .collect();
        let inverses = sub.members.iter().map(|&a| pos[&self.inverses[a]]).collect();
        MatrixGroup {
            degree: self.degree,
            level: self.level,
            elements: sub.members.iter().map(|&g| self.elements[g].clone()).collect(),
            cayley,
            inverses,
            generator_indices: (1..sub.members.len()).collect(),
            words: vec![None; sub.members.len()],
        }
    }
}

/// Invariant factors of a finite abelian group from its table and a generating set.
fn abelian_invariant_factors(table: &[Vec<usize>], gens: &[usize]) -> Vec<u64> {
    let q = table.len();
    let s = gens.len();
    if q == 1 || s == 0 {
        return Vec::new();
    }
    // Spanning tree words, then one relation per (element, generator) edge.
    let mut word: Vec<Option<Vec<i64>>> = vec![None; q];
    word[0] = Some(vec![0; s]);
    let mut queue = VecDeque::from([0usize]);
    while let Some(c) = queue.pop_front() {
        for (i, &g) in gens.iter().enumerate() {
            let d = table[c][g];
            if word[d].is_none() {
                let mut w = word[c].clone().unwrap();
                w[i] += 1;
                word[d] = Some(w);
                queue.push_back(d);
            }
        }
    }
    let mut relations: Vec<Vec<BigInt>> = Vec::new();
    for c in 0..q {
        let wc = word[c].as_ref().expect("generators generate the quotient");
        for (i, &g) in gens.iter().enumerate() {
            let wd = word[table[c][g]].as_ref().unwrap();
            let row: Vec<BigInt> = (0..s)
                .map(|j| BigInt::from(wc[j] + i64::from(i == j) - wd[j]))
                .collect();
            if row.iter().any(|x| !x.is_zero()) {
                relations.push(row);
            }
        }
    }
    let factors: Vec<u64> = cokernel_factors(&relations, s)
        .into_iter()
        .map(|x| x.to_u64().expect("finite abelian group"))
        .filter(|&x| x != 1)
        .collect();
    debug_assert_eq!(factors.iter().product::<u64>(), q as u64);
    factors
}

/// A subgroup given by sorted element indices of its parent group.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Subgroup {
    members: Vec<usize>,
}

impl Subgroup {
    pub fn from_members(mut members: Vec<usize>) -> Subgroup {
        members.sort_unstable();
        members.dedup();
        Subgroup { members }
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn contains(&self, g: usize) -> bool {
        self.members.binary_search(&g).is_ok()
    }

    pub fn is_trivial(&self) -> bool {
        self.members.len() == 1
    }

    pub fn is_subset_of(&self, other: &Subgroup) -> bool {
        self.members.iter().all(|&g| other.contains(g))
    }
}

/// A quotient group given by its coset multiplication table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AbstractQuotient {
    pub order: usize,
    pub table: Vec<Vec<usize>>,
    /// Nonempty only for nontrivial abelian quotients.
    pub invariant_factors: Vec<u64>,
    pub is_abelian: bool,
    /// Coset index of every element of the parent group.
    pub coset_of: Vec<usize>,
    pub representatives: Vec<usize>,
}

/// A homomorphism from a matrix group to invertible matrices.
#[derive(Debug, Clone)]
pub struct Representation {
    group: Arc<MatrixGroup>,
    dim: usize,
    images: Vec<CycMatrix>,
}

impl Representation {
    /// Checks the homomorphism property against the Cayley table.
    pub fn new(group: Arc<MatrixGroup>, images: Vec<CycMatrix>) -> Result<Representation, GroupError> {
        if images.len() != group.order() {
            return Err(GroupError::DimensionMismatch {
                expected: group.order(),
                got: images.len(),
            });
        }
        let dim = images[0].rows();
        let level = images[0].level();
        if images.iter().any(|m| !m.is_square() || m.rows() != dim || m.level() != level) {
            return Err(GroupError::InconsistentGenerators);
        }
        if !images[0].is_identity() {
            return Err(GroupError::NotHomomorphism);
        }
        // Right multiplication by generators determines the rest by induction on word length.
        for x in 0..group.order() {
            for &g in group.generator_indices() {
                if images[group.mul(x, g)] != images[x].mul(&images[g])? {
                    return Err(GroupError::NotHomomorphism);
                }
            }
        }
        Ok(Representation { group, dim, images })
    }

    /// Extends images of the generators along the BFS words of the group.
    pub fn from_generator_images(
        group: Arc<MatrixGroup>,
        gen_images: &[CycMatrix],
    ) -> Result<Representation, GroupError> {
        if gen_images.len() != group.generator_indices().len() {
            return Err(GroupError::DimensionMismatch {
                expected: group.generator_indices().len(),
                got: gen_images.len(),
            });
        }
        let dim = gen_images[0].rows();
        let level = gen_images[0].level();
        let mut images: Vec<CycMatrix> = Vec::with_capacity(group.order());
        images.push(CycMatrix::identity(dim, level));
        for j in 1..group.order() {
            let (p, gi) = group.words[j].ok_or(GroupError::NotHomomorphism)?;
            let m = images[p].mul(&gen_images[gi])?;
            images.push(m);
        }
        Representation::new(group, images)
    }

    /// The defining matrices of the group.
    pub fn natural(group: Arc<MatrixGroup>) -> Representation {
        let images = group.elements().to_vec();
        Representation {
            dim: group.degree(),
            group,
            images,
        }
    }

    pub fn trivial(group: Arc<MatrixGroup>, m: usize) -> Representation {
        let images = vec![CycMatrix::identity(m, group.level()); group.order()];
        Representation {
            group,
            dim: m,
            images,
        }
    }

    /// One-dimensional representation g ↦ det r(g).
    pub fn det(r: &Representation) -> Result<Representation, GroupError> {
        let images = r
            .images
            .iter()
            .map(|m| Ok(CycMatrix::diag(vec![m.det()?])))
            .collect::<Result<Vec<_>, ArithError>>()?;
        Ok(Representation {
            group: r.group.clone(),
            dim: 1,
            images,
        })
    }

    /// Sign of the permutation matrices defining the group.
    pub fn sign(group: Arc<MatrixGroup>) -> Result<Representation, GroupError> {
        let mut images = Vec::with_capacity(group.order());
        for (i, m) in group.elements().iter().enumerate() {
            let is_perm = m.is_monomial() && m.entries().iter().all(|e| e.is_zero() || e.is_one());
            if !is_perm {
                return Err(GroupError::NotPermutation(i));
            }
            images.push(CycMatrix::diag(vec![m.det()?]));
        }
        Ok(Representation {
            group,
            dim: 1,
            images,
        })
    }

    /// Left regular representation, `e_h ↦ e_{gh}`.
    pub fn regular(group: Arc<MatrixGroup>) -> Representation {
        let n = group.order();
        let level = group.level();
        let images = (0..n)
            .map(|g| {
                let mut m = CycMatrix::zeros(n, n, level);
                for h in 0..n {
                    m.set(group.mul(g, h), h, CycNum::one(level));
                }
                m
            })
            .collect();
        Representation {
            group,
            dim: n,
            images,
        }
    }

    /// Block diagonal sum `r1(g) ⊕ r2(g)`.
    pub fn product(r1: &Representation, r2: &Representation) -> Result<Representation, GroupError> {
        if !Arc::ptr_eq(&r1.group, &r2.group) {
            return Err(GroupError::GroupMismatch);
        }
        let level = crate::arith::lcm_u64(r1.level() as u64, r2.level() as u64) as u32;
        let (r1, r2) = (r1.lift(level)?, r2.lift(level)?);
        let images = r1
            .images
            .iter()
            .zip(&r2.images)
            .map(|(a, b)| CycMatrix::block_diag(&[a, b]))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Representation {
            group: r1.group.clone(),
            dim: r1.dim + r2.dim,
            images,
        })
    }

    pub fn group(&self) -> &Arc<MatrixGroup> {
        &self.group
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn level(&self) -> u32 {
        self.images[0].level()
    }

    pub fn images(&self) -> &[CycMatrix] {
        &self.images
    }

    pub fn image(&self, g: usize) -> &CycMatrix {
        &self.images[g]
    }

    pub fn character(&self) -> Character {
        Character {
            values: self.images.iter().map(|m| m.trace()).collect(),
        }
    }

    pub fn kernel(&self) -> Subgroup {
        Subgroup {
            members: (0..self.images.len()).filter(|&g| self.images[g].is_identity()).collect(),
        }
    }

    pub fn is_faithful(&self) -> bool {
        self.kernel().is_trivial()
    }

    pub fn is_trivial(&self) -> bool {
        self.images.iter().all(|m| m.is_identity())
    }

    pub fn is_trivial_on(&self, sub: &Subgroup) -> bool {
        sub.members().iter().all(|&g| self.images[g].is_identity())
    }

    /// `{g : r(g)·point = point}`.
    pub fn stabilizer(&self, point: &[CycNum]) -> Result<Subgroup, GroupError> {
        if point.len() != self.dim {
            return Err(GroupError::DimensionMismatch {
                expected: self.dim,
                got: point.len(),
            });
        }
        let mut members = Vec::new();
        for (g, m) in self.images.iter().enumerate() {
            if m.apply(point)? == point {
                members.push(g);
            }
        }
        Ok(Subgroup { members })
    }

    /// Re-expresses all images at a multiple of the current level.
    pub fn lift(&self, level: u32) -> Result<Representation, GroupError> {
        Ok(Representation {
            group: self.group.clone(),
            dim: self.dim,
            images: self.images.iter().map(|m| m.lift(level)).collect::<Result<_, _>>()?,
        })
    }

    /// A point whose stabilizer is the kernel of the action, drawn from small
    /// integer coordinates with a seeded generator and verified; up to 8 draws.
    pub fn generic_point(&self, seed: u64) -> Result<Vec<CycNum>, GroupError> {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let kernel = self.kernel();
        let level = self.level();
        for _ in 0..8 {
            let point: Vec<CycNum> = (0..self.dim)
                .map(|_| CycNum::from_int(level, rng.gen_range(-1000..=1000)))
                .collect();
            if self.stabilizer(&point)? == kernel {
                return Ok(point);
            }
        }
        Err(GroupError::NoGenericPoint(8))
    }
}

/// Trace function of a representation, one value per group element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Character {
    pub values: Vec<CycNum>,
}

impl Character {
    /// ⟨χ1, χ2⟩ = (1/|G|) Σ χ1(g)·conj(χ2(g)).
    pub fn inner_product(&self, other: &Character) -> Result<Rational, GroupError> {
        if self.values.len() != other.values.len() {
            return Err(GroupError::GroupMismatch);
        }
        let level = self.values[0].level();
        let mut acc = CycNum::zero(level);
        for (a, b) in self.values.iter().zip(&other.values) {
            acc = &acc + &a.checked_mul(&b.conj())?;
        }
        let n = Rational::from_integer(BigInt::from(self.values.len()));
        let value = acc.scale(&n.recip());
        value
            .as_rational()
            .ok_or_else(|| GroupError::NonIntegerMultiplicity(value.to_string()))
    }

    pub fn is_irreducible(&self) -> Result<bool, GroupError> {
        Ok(self.inner_product(self)?.is_one())
    }

    /// Multiplicity of the irreducible `irr` in `self`.
    pub fn multiplicity(&self, irr: &Character) -> Result<u64, GroupError> {
        let q = self.inner_product(irr)?;
        if !q.is_integer() || q < Rational::zero() {
            return Err(GroupError::NonIntegerMultiplicity(q.to_string()));
        }
        Ok(q.to_integer().to_u64().expect("small multiplicity"))
    }
}
