//! Finite groups as validated Cayley tables over element indices.
//!
//! The identity is always index 0; constructors relabel input tables to
//! enforce this. All index sets handed out are sorted so set values compare
//! canonically.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};

/// Default bound on closure enumeration in [`FiniteGroup::from_permutation_generators`].
pub const DEFAULT_MAX_ORDER: usize = 100_000;

/// Largest order for which associativity is verified by the full triple loop.
/// Above this, Light's test against a generating set is used instead.
const FULL_ASSOC_LIMIT: usize = 512;

/// A permutation action: one image table per group element.
#[derive(Debug)]
pub struct PermRep {
    degree: usize,
    images: Vec<u32>, // order × degree, row-major
}

impl PermRep {
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn perm(&self, element: usize) -> &[u32] {
        &self.images[element * self.degree..(element + 1) * self.degree]
    }

    pub fn apply(&self, element: usize, point: usize) -> usize {
        self.images[element * self.degree + point] as usize
    }
}

#[derive(Debug)]
struct GroupInner {
    order: usize,
    mul: Vec<u32>, // order × order, row-major
    inv: Vec<u32>,
    labels: Option<Vec<String>>,
    perm_rep: Option<PermRep>,
    generators: OnceLock<Vec<usize>>,
}

/// An immutable finite group. Cheap to clone (shared table).
#[derive(Clone, Debug)]
pub struct FiniteGroup(Arc<GroupInner>);

impl PartialEq for FiniteGroup {
    fn eq(&self, other: &Self) -> bool {
        self.0.order == other.0.order && self.0.mul == other.0.mul
    }
}
impl Eq for FiniteGroup {}

impl FiniteGroup {
    /// Validate a square multiplication table and wrap it as a group.
    ///
    /// The identity found in the table is relabeled to index 0.
    pub fn from_cayley_table(table: &[Vec<usize>]) -> Result<Self> {
        Self::from_cayley_table_labeled(table, None)
    }

    pub fn from_cayley_table_labeled(
        table: &[Vec<usize>],
        labels: Option<Vec<String>>,
    ) -> Result<Self> {
        let n = table.len();
        if n == 0 {
            return Err(Error::NotGroup {
                reason: "empty table".into(),
            });
        }
        for (i, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(Error::NotGroup {
                    reason: format!("row {i} has length {} in a {n}x{n} table", row.len()),
                });
            }
            if let Some(&bad) = row.iter().find(|&&v| v >= n) {
                return Err(Error::NotGroup {
                    reason: format!("entry {bad} in row {i} is out of range 0..{n}"),
                });
            }
        }
        if let Some(ref ls) = labels {
            if ls.len() != n {
                return Err(Error::NotGroup {
                    reason: format!("{} labels for {n} elements", ls.len()),
                });
            }
        }

        let identity = (0..n)
            .find(|&e| (0..n).all(|x| table[e][x] == x && table[x][e] == x))
            .ok_or_else(|| Error::NotGroup {
                reason: "no two-sided identity element".into(),
            })?;

        // Latin-square check, with an inverse-flavoured message when the
        // identity is missing from a row or column.
        for x in 0..n {
            let mut seen_row = vec![false; n];
            let mut seen_col = vec![false; n];
            for y in 0..n {
                seen_row[table[x][y]] = true;
                seen_col[table[y][x]] = true;
            }
            if !seen_row[identity] || !seen_col[identity] {
                return Err(Error::NotGroup {
                    reason: format!("element {x} has no inverse"),
                });
            }
            if seen_row.iter().any(|&s| !s) {
                return Err(Error::NotGroup {
                    reason: format!("row {x} is not a permutation"),
                });
            }
            if seen_col.iter().any(|&s| !s) {
                return Err(Error::NotGroup {
                    reason: format!("column {x} is not a permutation"),
                });
            }
        }

        // Relabel so the identity sits at index 0 (swap 0 <-> identity).
        let relabel = |v: usize| -> usize {
            if v == identity {
                0
            } else if v == 0 {
                identity
            } else {
                v
            }
        };
        let mut mul = vec![0u32; n * n];
        for a in 0..n {
            for b in 0..n {
                mul[relabel(a) * n + relabel(b)] = relabel(table[a][b]) as u32;
            }
        }
        let labels = labels.map(|ls| {
            let mut out = vec![String::new(); n];
            for (i, l) in ls.into_iter().enumerate() {
                out[relabel(i)] = l;
            }
            out
        });

        Self::finish_table(n, mul, labels, None)
    }

    fn finish_table(
        n: usize,
        mul: Vec<u32>,
        labels: Option<Vec<String>>,
        perm_rep: Option<PermRep>,
    ) -> Result<Self> {
        // Two-sided inverses.
        let mut inv = vec![0u32; n];
        for x in 0..n {
            let y = (0..n).find(|&y| mul[x * n + y] == 0).ok_or_else(|| {
                Error::NotGroup {
                    reason: format!("element {x} has no inverse"),
                }
            })?;
            if mul[y * n + x] != 0 {
                return Err(Error::NotGroup {
                    reason: format!("inverse of {x} is one-sided"),
                });
            }
            inv[x] = y as u32;
        }

        let at = |a: usize, b: usize| mul[a * n + b] as usize;
        if n <= FULL_ASSOC_LIMIT {
            for a in 0..n {
                for b in 0..n {
                    let ab = at(a, b);
                    for c in 0..n {
                        if at(ab, c) != at(a, at(b, c)) {
                            return Err(Error::NotGroup {
                                reason: format!("associativity fails at ({a}, {b}, {c})"),
                            });
                        }
                    }
                }
            }
        } else {
            // Light's test: generators inside the middle nucleus force
            // associativity everywhere.
            for &g in &generating_set_of_table(&mul, n) {
                for a in 0..n {
                    let ag = at(a, g);
                    for b in 0..n {
                        if at(ag, b) != at(a, at(g, b)) {
                            return Err(Error::NotGroup {
                                reason: format!("associativity fails at ({a}, {g}, {b})"),
                            });
                        }
                    }
                }
            }
        }

        Ok(FiniteGroup(Arc::new(GroupInner {
            order: n,
            mul,
            inv,
            labels,
            perm_rep,
            generators: OnceLock::new(),
        })))
    }

    /// Close a set of permutations under composition and build the group,
    /// keeping the permutation representation.
    pub fn from_permutation_generators(degree: usize, gens: &[Vec<usize>]) -> Result<Self> {
        Self::from_permutation_generators_bounded(degree, gens, DEFAULT_MAX_ORDER)
    }

    pub fn from_permutation_generators_bounded(
        degree: usize,
        gens: &[Vec<usize>],
        bound: usize,
    ) -> Result<Self> {
        if degree == 0 {
            return Err(Error::NotPermutation { index: 0, degree });
        }
        let mut gperms: Vec<Vec<u32>> = Vec::with_capacity(gens.len());
        for (index, g) in gens.iter().enumerate() {
            let mut seen = vec![false; degree];
            if g.len() != degree {
                return Err(Error::NotPermutation { index, degree });
            }
            for &v in g {
                if v >= degree || seen[v] {
                    return Err(Error::NotPermutation { index, degree });
                }
                seen[v] = true;
            }
            gperms.push(g.iter().map(|&v| v as u32).collect());
        }

        // Breadth-first closure. Each new element is recorded as
        // generator-index * previous-element so multiplication rows can be
        // assembled without composing every pair of permutations.
        let identity: Vec<u32> = (0..degree as u32).collect();
        let mut elems: Vec<Vec<u32>> = vec![identity.clone()];
        let mut index_of: HashMap<Vec<u32>, usize> = HashMap::new();
        index_of.insert(identity, 0);
        let mut parent: Vec<(usize, usize)> = vec![(usize::MAX, usize::MAX)];
        let mut head = 0;
        while head < elems.len() {
            for (gi, g) in gperms.iter().enumerate() {
                let composed: Vec<u32> = elems[head].iter().map(|&x| g[x as usize]).collect();
                if !index_of.contains_key(&composed) {
                    if elems.len() >= bound {
                        return Err(Error::TooLarge { bound });
                    }
                    index_of.insert(composed.clone(), elems.len());
                    parent.push((gi, head));
                    elems.push(composed);
                }
            }
            head += 1;
        }

        let n = elems.len();
        let mut mul = vec![0u32; n * n];
        // Identity row.
        for j in 0..n {
            mul[j] = j as u32;
        }
        // Generator rows by direct composition lookup.
        let mut gen_row: Vec<Vec<u32>> = Vec::with_capacity(gperms.len());
        for g in &gperms {
            let mut row = vec![0u32; n];
            for (j, p) in elems.iter().enumerate() {
                let composed: Vec<u32> = p.iter().map(|&x| g[x as usize]).collect();
                row[j] = index_of[&composed] as u32;
            }
            gen_row.push(row);
        }
        // Remaining rows in discovery order: x = g * y with y discovered first.
        for x in 1..n {
            let (gi, y) = parent[x];
            for j in 0..n {
                mul[x * n + j] = gen_row[gi][mul[y * n + j] as usize];
            }
        }

        let mut images = vec![0u32; n * degree];
        for (i, p) in elems.iter().enumerate() {
            images[i * degree..(i + 1) * degree].copy_from_slice(p);
        }
        let rep = PermRep { degree, images };
        Self::finish_table(n, mul, None, Some(rep))
    }

    /// The one-element group.
    pub fn trivial() -> Self {
        Self::from_cayley_table(&[vec![0]]).expect("trivial table is a group")
    }

    pub fn order(&self) -> usize {
        self.0.order
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.0.order
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.0.mul[a * self.0.order + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.0.inv[a] as usize
    }

    /// `x` conjugated by `g`: `g^{-1} x g`.
    #[inline]
    pub fn conj(&self, x: usize, g: usize) -> usize {
        self.mul(self.mul(self.inv(g), x), g)
    }

    pub fn commutator(&self, x: usize, y: usize) -> usize {
        self.mul(self.mul(self.inv(x), self.inv(y)), self.mul(x, y))
    }

    pub fn power(&self, x: usize, k: usize) -> usize {
        let mut acc = 0;
        for _ in 0..k {
            acc = self.mul(acc, x);
        }
        acc
    }

    pub fn element_order(&self, x: usize) -> usize {
        let mut acc = x;
        let mut k = 1;
        while acc != 0 {
            acc = self.mul(acc, x);
            k += 1;
        }
        k
    }

    pub fn label(&self, i: usize) -> String {
        match &self.0.labels {
            Some(ls) => ls[i].clone(),
            None => i.to_string(),
        }
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.0.labels.as_deref()
    }

    pub fn perm_rep(&self) -> Option<&PermRep> {
        self.0.perm_rep.as_ref()
    }

    pub fn mul_table(&self) -> Vec<Vec<usize>> {
        let n = self.0.order;
        (0..n)
            .map(|a| (0..n).map(|b| self.mul(a, b)).collect())
            .collect()
    }

    /// A small generating set, found greedily and cached.
    pub fn generating_set(&self) -> &[usize] {
        self.0
            .generators
            .get_or_init(|| generating_set_of_table(&self.0.mul, self.0.order))
    }

    /// All conjugates of `x`, sorted.
    pub fn conjugacy_class(&self, x: usize) -> Vec<usize> {
        let mut seen = vec![false; self.0.order];
        for g in self.elements() {
            seen[self.conj(x, g)] = true;
        }
        bitset_to_sorted(&seen)
    }

    /// All elements of order exactly 2, sorted.
    pub fn involutions(&self) -> Vec<usize> {
        self.elements()
            .filter(|&x| x != 0 && self.mul(x, x) == 0)
            .collect()
    }

    /// Elements commuting with everything in `s`.
    pub fn centralizer(&self, s: &[usize]) -> Subgroup {
        let members = self
            .elements()
            .filter(|&g| s.iter().all(|&x| self.mul(g, x) == self.mul(x, g)))
            .collect();
        Subgroup::trusted(self.clone(), members)
    }

    pub fn center(&self) -> Subgroup {
        let all: Vec<usize> = self.elements().collect();
        self.centralizer(&all)
    }

    /// Elements whose conjugation fixes `s` as a set.
    pub fn normalizer_of_set(&self, s: &[usize]) -> Subgroup {
        let mut in_s = vec![false; self.0.order];
        for &x in s {
            in_s[x] = true;
        }
        let members = self
            .elements()
            .filter(|&g| s.iter().all(|&x| in_s[self.conj(x, g)]))
            .collect();
        Subgroup::trusted(self.clone(), members)
    }

    /// Smallest subgroup containing `gens`.
    pub fn subgroup_closure(&self, gens: &[usize]) -> Subgroup {
        let mut in_set = vec![false; self.0.order];
        in_set[0] = true;
        let mut members = vec![0usize];
        let mut queue: Vec<usize> = Vec::new();
        for &g in gens {
            if !in_set[g] {
                in_set[g] = true;
                members.push(g);
                queue.push(g);
            }
        }
        while let Some(x) = queue.pop() {
            // Products with every current member, both sides.
            let snapshot = members.clone();
            for m in snapshot {
                for p in [self.mul(x, m), self.mul(m, x)] {
                    if !in_set[p] {
                        in_set[p] = true;
                        members.push(p);
                        queue.push(p);
                    }
                }
            }
        }
        members.sort_unstable();
        Subgroup::trusted(self.clone(), members)
    }

    /// Does the set contain 1 and close under products? (Finite, so this
    /// makes it a subgroup.)
    pub fn is_subgroup_set(&self, s: &[usize]) -> bool {
        let mut in_s = vec![false; self.0.order];
        for &x in s {
            in_s[x] = true;
        }
        in_s[0] && s.iter().all(|&a| s.iter().all(|&b| in_s[self.mul(a, b)]))
    }

    pub fn is_abelian_set(&self, s: &[usize]) -> bool {
        s.iter()
            .all(|&a| s.iter().all(|&b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn conjugate_set(&self, s: &[usize], g: usize) -> Vec<usize> {
        let mut out: Vec<usize> = s.iter().map(|&x| self.conj(x, g)).collect();
        out.sort_unstable();
        out
    }

    /// Is squaring a bijection of `s`?
    pub fn is_uniquely_2_divisible(&self, s: &[usize]) -> bool {
        let mut hit = vec![false; self.0.order];
        for &x in s {
            let sq = self.mul(x, x);
            if hit[sq] {
                return false; // two square roots
            }
            hit[sq] = true;
        }
        s.iter().all(|&x| hit[x]) // image is exactly s
    }

    /// The unique square root of `x` within `s`, by inverting the square map.
    pub fn sqrt_in(&self, s: &[usize], x: usize) -> Result<usize> {
        let roots: Vec<usize> = s.iter().copied().filter(|&y| self.mul(y, y) == x).collect();
        match roots.len() {
            1 => Ok(roots[0]),
            0 => Err(Error::NotUniquely2Divisible {
                reason: format!("element {x} has no square root in the set"),
            }),
            _ => Err(Error::NotUniquely2Divisible {
                reason: format!("element {x} has square roots {roots:?}"),
            }),
        }
    }

    /// Factor `x = a b` with `a` inverted and `b` fixed by the involutory
    /// automorphism, via `a = (x (x^alpha)^{-1})^{1/2}`.
    pub fn neumann_decompose(
        &self,
        alpha: &InvolutoryAutomorphism,
        x: usize,
    ) -> Result<(usize, usize)> {
        let all: Vec<usize> = self.elements().collect();
        if !self.is_uniquely_2_divisible(&all) {
            return Err(Error::NotUniquely2Divisible {
                reason: "the group carries involutions, squaring is not bijective".into(),
            });
        }
        let w = self.mul(x, self.inv(alpha.apply(x)));
        let a = self.sqrt_in(&all, w)?;
        let b = self.mul(self.inv(a), x);
        debug_assert_eq!(alpha.apply(a), self.inv(a));
        debug_assert_eq!(alpha.apply(b), b);
        Ok((a, b))
    }
}

/// A verified subgroup: sorted member indices closed under the parent's
/// multiplication and inversion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subgroup {
    group: FiniteGroup,
    members: Vec<usize>,
}

impl Subgroup {
    pub fn new(group: FiniteGroup, mut members: Vec<usize>) -> Result<Self> {
        members.sort_unstable();
        members.dedup();
        if members.first() != Some(&0) {
            return Err(Error::NotSubgroup {
                reason: "missing identity".into(),
            });
        }
        if !group.is_subgroup_set(&members) {
            return Err(Error::NotSubgroup {
                reason: "not closed under multiplication".into(),
            });
        }
        Ok(Subgroup { group, members })
    }

    /// For internal construction sites that produce closed sets by scan.
    fn trusted(group: FiniteGroup, mut members: Vec<usize>) -> Self {
        members.sort_unstable();
        debug_assert!(group.is_subgroup_set(&members));
        Subgroup { group, members }
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.binary_search(&x).is_ok()
    }

    pub fn is_trivial(&self) -> bool {
        self.members.len() == 1
    }

    pub fn is_abelian(&self) -> bool {
        self.group.is_abelian_set(&self.members)
    }

    pub fn is_normal(&self) -> bool {
        self.group
            .elements()
            .all(|g| self.members.iter().all(|&x| self.contains(self.group.conj(x, g))))
    }

    /// Derived series down to the trivial group.
    pub fn is_solvable(&self) -> bool {
        let mut current = self.members.clone();
        loop {
            if current.len() == 1 {
                return true;
            }
            let mut comms: Vec<usize> = Vec::new();
            for &x in &current {
                for &y in &current {
                    comms.push(self.group.commutator(x, y));
                }
            }
            comms.sort_unstable();
            comms.dedup();
            let derived = self.group.subgroup_closure(&comms);
            if derived.members == current {
                return false; // perfect and nontrivial
            }
            current = derived.members;
        }
    }
}

/// A group automorphism that is its own inverse.
#[derive(Clone, Debug)]
pub struct InvolutoryAutomorphism {
    group: FiniteGroup,
    images: Vec<u32>,
}

impl InvolutoryAutomorphism {
    pub fn new(group: FiniteGroup, images: Vec<usize>) -> Result<Self> {
        let n = group.order();
        if images.len() != n {
            return Err(Error::NotAutomorphism {
                reason: format!("{} images for {n} elements", images.len()),
            });
        }
        let mut seen = vec![false; n];
        for &v in &images {
            if v >= n || seen[v] {
                return Err(Error::NotAutomorphism {
                    reason: "images are not a permutation".into(),
                });
            }
            seen[v] = true;
        }
        for x in 0..n {
            for y in 0..n {
                if images[group.mul(x, y)] != group.mul(images[x], images[y]) {
                    return Err(Error::NotAutomorphism {
                        reason: format!("multiplicativity fails at ({x}, {y})"),
                    });
                }
            }
        }
        for x in 0..n {
            if images[images[x]] != x {
                return Err(Error::NotAutomorphism {
                    reason: format!("not an involution: moves {x} twice"),
                });
            }
        }
        let images = images.into_iter().map(|v| v as u32).collect();
        Ok(InvolutoryAutomorphism { group, images })
    }

    /// `x -> x^{-1}`, an automorphism exactly when the group is abelian.
    pub fn inversion(group: FiniteGroup) -> Result<Self> {
        let images = group.elements().map(|x| group.inv(x)).collect();
        Self::new(group, images)
    }

    pub fn apply(&self, x: usize) -> usize {
        self.images[x] as usize
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    /// Fixed points: Cen(alpha).
    pub fn fixed_set(&self) -> Vec<usize> {
        self.group.elements().filter(|&x| self.apply(x) == x).collect()
    }

    /// Inverted points: Inv(alpha).
    pub fn inverted_set(&self) -> Vec<usize> {
        self.group
            .elements()
            .filter(|&x| self.apply(x) == self.group.inv(x))
            .collect()
    }
}

fn bitset_to_sorted(seen: &[bool]) -> Vec<usize> {
    seen.iter()
        .enumerate()
        .filter_map(|(i, &s)| s.then_some(i))
        .collect()
}

/// Greedy generating set using only the raw table (valid for quasigroups,
/// which is all Light's test needs).
fn generating_set_of_table(mul: &[u32], n: usize) -> Vec<usize> {
    let at = |a: usize, b: usize| mul[a * n + b] as usize;
    let mut gens = Vec::new();
    let mut in_closure = vec![false; n];
    in_closure[0] = true;
    let mut members = vec![0usize];
    for x in 1..n {
        if in_closure[x] {
            continue;
        }
        gens.push(x);
        let mut queue = vec![x];
        in_closure[x] = true;
        members.push(x);
        while let Some(u) = queue.pop() {
            let mut fresh = Vec::new();
            for &m in &members {
                for p in [at(u, m), at(m, u)] {
                    if !in_closure[p] {
                        in_closure[p] = true;
                        fresh.push(p);
                    }
                }
            }
            for f in fresh {
                members.push(f);
                queue.push(f);
            }
        }
    }
    gens
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Hand-built S3 table: index a + 3b encodes r^a s^b.
    pub(crate) fn s3_table() -> Vec<Vec<usize>> {
        vec![
            vec![0, 1, 2, 3, 4, 5],
            vec![1, 2, 0, 4, 5, 3],
            vec![2, 0, 1, 5, 3, 4],
            vec![3, 5, 4, 0, 2, 1],
            vec![4, 3, 5, 1, 0, 2],
            vec![5, 4, 3, 2, 1, 0],
        ]
    }

    pub(crate) fn cyclic_table(n: usize) -> Vec<Vec<usize>> {
        (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect()
    }

    #[test]
    fn trivial_group_from_table() {
        let g = FiniteGroup::from_cayley_table(&[vec![0]]).unwrap();
        assert_eq!(g.order(), 1);
        assert_eq!(g.identity(), 0);
    }

    #[test]
    fn s3_from_table_has_three_involutions() {
        let g = FiniteGroup::from_cayley_table(&s3_table()).unwrap();
        assert_eq!(g.order(), 6);
        assert_eq!(g.involutions(), vec![3, 4, 5]);
    }

    #[test]
    fn missing_inverse_is_rejected() {
        let err = FiniteGroup::from_cayley_table(&[vec![0, 1], vec![1, 1]]).unwrap_err();
        assert_eq!(err.code(), "E_NOT_GROUP");
        assert!(err.to_string().contains("no inverse"), "{err}");
    }

    #[test]
    fn nonassociative_latin_square_is_rejected() {
        // Smallest nonassociative loop (order 5).
        let table = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        let err = FiniteGroup::from_cayley_table(&table).unwrap_err();
        assert!(err.to_string().contains("associativity"), "{err}");
    }

    #[test]
    fn identity_is_relabeled_to_zero() {
        // C2 with identity at index 1.
        let g = FiniteGroup::from_cayley_table(&[vec![1, 0], vec![0, 1]]).unwrap();
        assert_eq!(g.mul(0, 0), 0);
        assert_eq!(g.mul(1, 1), 0);
    }

    /// Independent closure oracle: multiply whole sets of permutations until
    /// nothing new appears. Slower than the builder, shares no code with it.
    fn closure_order_oracle(degree: usize, gens: &[Vec<usize>]) -> usize {
        use std::collections::HashSet;
        let mut set: HashSet<Vec<usize>> = HashSet::new();
        set.insert((0..degree).collect());
        for g in gens {
            set.insert(g.clone());
        }
        loop {
            let mut next = set.clone();
            for a in &set {
                for b in &set {
                    next.insert(b.iter().map(|&x| a[x]).collect());
                }
            }
            if next.len() == set.len() {
                return set.len();
            }
            set = next;
        }
    }

    #[test]
    fn permutation_closure_s3() {
        let gens = vec![vec![1, 2, 0], vec![1, 0, 2]];
        let g = FiniteGroup::from_permutation_generators(3, &gens).unwrap();
        assert_eq!(g.order(), 6);
        assert_eq!(g.order(), closure_order_oracle(3, &gens));
        assert!(g.perm_rep().is_some());
    }

    #[test]
    fn permutation_closure_trivial() {
        let g = FiniteGroup::from_permutation_generators(1, &[]).unwrap();
        assert_eq!(g.order(), 1);
    }

    #[test]
    fn permutation_closure_agl1_f5() {
        let gens = vec![vec![1, 2, 3, 4, 0], vec![0, 2, 4, 1, 3]];
        let g = FiniteGroup::from_permutation_generators(5, &gens).unwrap();
        assert_eq!(g.order(), 20);
        assert_eq!(g.order(), closure_order_oracle(5, &gens));
        assert_eq!(g.involutions().len(), 5);
    }

    #[test]
    fn permutation_closure_respects_bound() {
        let gens = vec![vec![1, 2, 3, 4, 0], vec![0, 2, 4, 1, 3]];
        let err = FiniteGroup::from_permutation_generators_bounded(5, &gens, 10).unwrap_err();
        assert_eq!(err.code(), "E_TOO_LARGE");
    }

    #[test]
    fn bad_permutation_is_rejected() {
        let err = FiniteGroup::from_permutation_generators(3, &[vec![0, 0, 1]]).unwrap_err();
        assert_eq!(err.code(), "E_NOT_PERMUTATION");
    }

    #[test]
    fn permutation_table_matches_composition() {
        let gens = vec![vec![1, 2, 3, 4, 0], vec![0, 2, 4, 1, 3]];
        let g = FiniteGroup::from_permutation_generators(5, &gens).unwrap();
        let rep = g.perm_rep().unwrap();
        for a in g.elements() {
            for b in g.elements() {
                let ab = g.mul(a, b);
                for pt in 0..5 {
                    assert_eq!(rep.apply(ab, pt), rep.apply(a, rep.apply(b, pt)));
                }
            }
        }
    }

    fn f7_c3() -> FiniteGroup {
        FiniteGroup::from_permutation_generators(
            7,
            &[vec![1, 2, 3, 4, 5, 6, 0], vec![0, 2, 4, 6, 1, 3, 5]],
        )
        .unwrap()
    }

    #[test]
    fn conjugacy_classes() {
        let s3 = FiniteGroup::from_cayley_table(&s3_table()).unwrap();
        assert_eq!(s3.conjugacy_class(3).len(), 3);
        assert_eq!(s3.conjugacy_class(0), vec![0]);

        let g = f7_c3();
        assert_eq!(g.order(), 21);
        let h = g.elements().find(|&x| g.element_order(x) == 3).unwrap();
        assert_eq!(g.conjugacy_class(h).len(), 7);
    }

    #[test]
    fn involution_scan() {
        let c7 = FiniteGroup::from_cayley_table(&cyclic_table(7)).unwrap();
        assert!(c7.involutions().is_empty());
    }

    #[test]
    fn centralizers_and_center() {
        let s3 = FiniteGroup::from_cayley_table(&s3_table()).unwrap();
        let c = s3.centralizer(&[3]);
        assert_eq!(c.members(), &[0, 3]);
        let whole = s3.centralizer(&[0]);
        assert_eq!(whole.order(), 6);
        assert!(s3.center().is_trivial());
    }

    #[test]
    fn normalizer_of_set_works() {
        let s3 = FiniteGroup::from_cayley_table(&s3_table()).unwrap();
        // The rotation subgroup is normal.
        let n = s3.normalizer_of_set(&[0, 1, 2]);
        assert_eq!(n.order(), 6);
        // A single transposition is normalized by its centralizer only.
        let n = s3.normalizer_of_set(&[3]);
        assert_eq!(n.members(), &[0, 3]);
    }

    #[test]
    fn solvability_by_derived_series() {
        let g = f7_c3();
        let whole = Subgroup::new(g.clone(), g.elements().collect()).unwrap();
        assert!(whole.is_solvable());

        // A5 is not solvable.
        let a5 = FiniteGroup::from_permutation_generators(
            5,
            &[vec![1, 2, 0, 3, 4], vec![0, 1, 3, 4, 2]],
        )
        .unwrap();
        assert_eq!(a5.order(), 60);
        let whole = Subgroup::new(a5.clone(), a5.elements().collect()).unwrap();
        assert!(!whole.is_solvable());
    }

    #[test]
    fn unique_2_divisibility() {
        let c7 = FiniteGroup::from_cayley_table(&cyclic_table(7)).unwrap();
        let all: Vec<usize> = c7.elements().collect();
        assert!(c7.is_uniquely_2_divisible(&all));

        let s3 = FiniteGroup::from_cayley_table(&s3_table()).unwrap();
        let all: Vec<usize> = s3.elements().collect();
        assert!(!s3.is_uniquely_2_divisible(&all));
        // iQ in the S3 geometry: s * {s, sr, sr^2} = rotations.
        assert!(s3.is_uniquely_2_divisible(&[0, 1, 2]));
    }

    #[test]
    fn square_roots() {
        let c7 = FiniteGroup::from_cayley_table(&cyclic_table(7)).unwrap();
        let all: Vec<usize> = c7.elements().collect();
        assert_eq!(c7.sqrt_in(&all, 1).unwrap(), 4); // (t^4)^2 = t
        assert_eq!(c7.sqrt_in(&all, 0).unwrap(), 0);

        let g = f7_c3();
        let all: Vec<usize> = g.elements().collect();
        let h = g.elements().find(|&x| g.element_order(x) == 3).unwrap();
        let r = g.sqrt_in(&all, h).unwrap();
        assert_eq!(r, g.mul(h, h));

        let s3 = FiniteGroup::from_cayley_table(&s3_table()).unwrap();
        let all: Vec<usize> = s3.elements().collect();
        assert_eq!(s3.sqrt_in(&all, 0).unwrap_err().code(), "E_NOT_UNIQUELY_2DIV");
    }

    #[test]
    fn sqrt_round_trip_on_u2d_carrier() {
        let g = f7_c3();
        let all: Vec<usize> = g.elements().collect();
        assert!(g.is_uniquely_2_divisible(&all));
        for x in g.elements() {
            let r = g.sqrt_in(&all, x).unwrap();
            assert_eq!(g.mul(r, r), x);
            assert_eq!(g.sqrt_in(&all, g.mul(x, x)).unwrap(), x);
        }
    }

    /// Brute-force factorization oracle for the involutory decomposition.
    fn factorizations(
        g: &FiniteGroup,
        alpha: &InvolutoryAutomorphism,
        x: usize,
    ) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for a in alpha.inverted_set() {
            for &b in &alpha.fixed_set() {
                if g.mul(a, b) == x {
                    out.push((a, b));
                }
            }
        }
        out
    }

    #[test]
    fn neumann_decomposition_on_c7() {
        let c7 = FiniteGroup::from_cayley_table(&cyclic_table(7)).unwrap();
        let alpha = InvolutoryAutomorphism::inversion(c7.clone()).unwrap();
        assert_eq!(c7.neumann_decompose(&alpha, 3).unwrap(), (3, 0));
        assert_eq!(c7.neumann_decompose(&alpha, 0).unwrap(), (0, 0));
    }

    #[test]
    fn neumann_decomposition_on_f7_c3() {
        let g = f7_c3();
        // alpha inverts the kernel and fixes the complement: conjugation by
        // the outer point map x -> -x.
        let rep = g.perm_rep().unwrap();
        let negate: Vec<usize> = (0..7).map(|x| (7 - x) % 7).collect();
        let mut images = Vec::with_capacity(g.order());
        'outer: for e in g.elements() {
            let p = rep.perm(e);
            let conj: Vec<u32> = (0..7)
                .map(|x| negate[p[negate[x]] as usize] as u32)
                .collect();
            for f in g.elements() {
                if rep.perm(f) == conj.as_slice() {
                    images.push(f);
                    continue 'outer;
                }
            }
            panic!("conjugated permutation left the group");
        }
        let alpha = InvolutoryAutomorphism::new(g.clone(), images).unwrap();

        let t = 1; // discovery order: first generator image x+1
        let h = g
            .elements()
            .find(|&x| g.element_order(x) == 3 && alpha.apply(x) == x)
            .unwrap();
        let x = g.mul(t, h);
        let (a, b) = g.neumann_decompose(&alpha, x).unwrap();
        assert_eq!((a, b), (t, h));

        // Every element factors uniquely (oracle cross-check).
        for x in g.elements() {
            let facts = factorizations(&g, &alpha, x);
            assert_eq!(facts.len(), 1, "element {x}");
            assert_eq!(facts[0], g.neumann_decompose(&alpha, x).unwrap());
        }
    }

    #[test]
    fn neumann_decompose_rejects_even_order() {
        let s3 = FiniteGroup::from_cayley_table(&s3_table()).unwrap();
        // Identity map is involutory; the group itself fails the precondition.
        let ident = InvolutoryAutomorphism::new(s3.clone(), s3.elements().collect()).unwrap();
        assert_eq!(
            s3.neumann_decompose(&ident, 1).unwrap_err().code(),
            "E_NOT_UNIQUELY_2DIV"
        );
    }

    #[test]
    fn no_involutions_iff_odd_order_iff_u2d() {
        for g in [
            FiniteGroup::from_cayley_table(&cyclic_table(7)).unwrap(),
            FiniteGroup::from_cayley_table(&s3_table()).unwrap(),
            f7_c3(),
            FiniteGroup::from_permutation_generators(
                5,
                &[vec![1, 2, 3, 4, 0], vec![0, 2, 4, 1, 3]],
            )
            .unwrap(),
        ] {
            let all: Vec<usize> = g.elements().collect();
            let no_inv = g.involutions().is_empty();
            assert_eq!(no_inv, g.order() % 2 == 1);
            assert_eq!(no_inv, g.is_uniquely_2_divisible(&all));
        }
    }

    #[test]
    fn generating_sets_generate() {
        for g in [
            FiniteGroup::from_cayley_table(&s3_table()).unwrap(),
            f7_c3(),
        ] {
            let gens = g.generating_set().to_vec();
            assert_eq!(g.subgroup_closure(&gens).order(), g.order());
        }
    }
}
