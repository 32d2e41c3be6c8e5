//! Frobenius pairs: malnormality, kernels, the odd/degenerate/even
//! trichotomy, and the extension pipeline that equips a uniquely 2-divisible
//! pair with an involution geometry.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::geometry::{Geometry, Line};
use crate::group::{FiniteGroup, Subgroup};
use crate::kloop::KLoop;
use crate::quasidirect::{AutomorphismGroup, QuasidirectGroup};
use crate::report::AxiomReport;

/// Is `h` a proper nontrivial malnormal subgroup of `g`?
pub fn is_frobenius(g: &FiniteGroup, h: &Subgroup) -> bool {
    if h.order() <= 1 || h.order() >= g.order() {
        return false;
    }
    g.elements().filter(|&x| !h.contains(x)).all(|x| {
        h.members()
            .iter()
            .all(|&m| m == 0 || !h.contains(g.conj(m, x)))
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FrobeniusType {
    Odd,
    Degenerate,
    Even,
}

impl FrobeniusType {
    pub fn as_str(&self) -> &'static str {
        match self {
            FrobeniusType::Odd => "odd",
            FrobeniusType::Degenerate => "degenerate",
            FrobeniusType::Even => "even",
        }
    }
}

/// A verified Frobenius group with its complement.
#[derive(Debug, Clone)]
pub struct FrobeniusPair {
    group: FiniteGroup,
    complement: Subgroup,
    kind: FrobeniusType,
}

impl FrobeniusPair {
    pub fn new(group: FiniteGroup, complement: Subgroup) -> Result<Self> {
        if !is_frobenius(&group, &complement) {
            return Err(Error::NotFrobenius {
                reason: "the subgroup is not proper, nontrivial, and malnormal".into(),
            });
        }
        let kind = classify(&group, &complement);
        Ok(FrobeniusPair {
            group,
            complement,
            kind,
        })
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn complement(&self) -> &Subgroup {
        &self.complement
    }

    pub fn kind(&self) -> FrobeniusType {
        self.kind
    }

    fn conjugate_union(&self) -> Vec<bool> {
        let g = &self.group;
        let mut covered = vec![false; g.order()];
        for x in g.elements() {
            for &m in self.complement.members() {
                covered[g.conj(m, x)] = true;
            }
        }
        covered
    }

    /// Do the conjugates of the complement cover the group?
    pub fn is_full(&self) -> bool {
        self.conjugate_union().iter().all(|&c| c)
    }

    /// The complement of the conjugate union, plus 1 — verified to be a
    /// normal subgroup splitting the group.
    pub fn kernel(&self) -> Result<Subgroup> {
        let g = &self.group;
        let covered = self.conjugate_union();
        let mut members: Vec<usize> = g.elements().filter(|&x| !covered[x]).collect();
        members.push(0);
        members.sort_unstable();
        if !g.is_subgroup_set(&members) {
            return Err(Error::KernelNotSubgroup {
                reason: "the uncovered set does not close under products".into(),
            });
        }
        let kernel = Subgroup::new(g.clone(), members)?;
        if !kernel.is_normal() {
            return Err(Error::KernelNotSubgroup {
                reason: "the kernel candidate is not normal".into(),
            });
        }
        let meets_trivially = self
            .complement
            .members()
            .iter()
            .filter(|&&x| kernel.contains(x))
            .count()
            == 1;
        if !meets_trivially || kernel.order() * self.complement.order() != g.order() {
            return Err(Error::KernelNotSubgroup {
                reason: "the kernel does not complement the subgroup".into(),
            });
        }
        Ok(kernel)
    }

    /// Build the involution extension: the loop on the whole group, the
    /// standard automorphism group, the quasidirect product, and the line
    /// family as the orbit of the complement slice.
    pub fn extend_degenerate(&self) -> Result<FrobeniusExtension> {
        let g = &self.group;
        let all: Vec<usize> = g.elements().collect();
        if !g.is_uniquely_2_divisible(&all) {
            return Err(Error::NotUniquely2Divisible {
                reason: "the group has even order".into(),
            });
        }
        let h = self.complement.members();
        for (ai, &a) in h.iter().enumerate() {
            for &b in &h[ai + 1..] {
                if g.mul(a, b) != g.mul(b, a) {
                    return Err(Error::ComplementNotAbelian { a, b });
                }
            }
        }
        let loop_ = KLoop::from_twisted(g, &all)?;
        let auts = AutomorphismGroup::standard(g, &loop_)?;
        let qd = QuasidirectGroup::new(&loop_, auts)?;
        build_extension(qd, h.to_vec())
    }
}

fn classify(g: &FiniteGroup, h: &Subgroup) -> FrobeniusType {
    let involutions = g.involutions();
    let odd = involutions.iter().any(|&x| h.contains(x));
    let degenerate = involutions.is_empty();
    let even = {
        let mut covered = vec![false; g.order()];
        for x in g.elements() {
            for &m in h.members() {
                covered[g.conj(m, x)] = true;
            }
        }
        involutions.iter().any(|&x| !covered[x])
    };
    let tags = [odd, degenerate, even];
    assert_eq!(
        tags.iter().filter(|&&t| t).count(),
        1,
        "the type trichotomy must be exclusive for finite pairs"
    );
    if odd {
        FrobeniusType::Odd
    } else if degenerate {
        FrobeniusType::Degenerate
    } else {
        FrobeniusType::Even
    }
}

/// The abelian route: extend a uniquely 2-divisible abelian group by
/// inversion through the same pipeline, with the whole group as base line.
pub fn extend_abelian(a: &FiniteGroup) -> Result<FrobeniusExtension> {
    let all: Vec<usize> = a.elements().collect();
    if !a.is_abelian_set(&all) {
        return Err(Error::BadParams {
            reason: "the inversion extension needs an abelian group".into(),
        });
    }
    if !a.is_uniquely_2_divisible(&all) {
        return Err(Error::NotUniquely2Divisible {
            reason: "the group has even order".into(),
        });
    }
    if a.order() < 2 {
        return Err(Error::BadParams {
            reason: "a one-point line family needs at least two elements".into(),
        });
    }
    let loop_ = KLoop::from_twisted(a, &all)?;
    let eps = crate::quasidirect::inversion_automorphism(&loop_)?;
    let auts = AutomorphismGroup::from_generators(&loop_, &[eps]);
    let qd = QuasidirectGroup::new(&loop_, auts)?;
    build_extension(qd, all)
}

fn build_extension(qd: QuasidirectGroup, base: Vec<usize>) -> Result<FrobeniusExtension> {
    let eps = qd
        .auts()
        .epsilon_index()
        .expect("the standard automorphism group contains inversion");
    let mat = qd.group().clone();

    let lambda0 = Line::new(
        base.iter()
            .map(|&h| {
                qd.encode(
                    qd.kloop().position_of(h).expect("base sits in the carrier"),
                    eps,
                )
            })
            .collect(),
    );
    let j: Vec<usize> = (0..qd.kloop().size()).map(|p| qd.encode(p, eps)).collect();

    let orbit = conjugation_orbit(&mat, &lambda0, mat.generating_set());
    let loop_slice: Vec<usize> = (0..qd.kloop().size()).map(|p| qd.encode(p, 0)).collect();
    let g_orbit_size = conjugation_orbit(&mat, &lambda0, &loop_slice).len();

    let geometry = Geometry::new(mat, j, orbit.into_iter().collect())?;
    Ok(FrobeniusExtension {
        quasidirect: qd,
        geometry,
        lambda0,
        base,
        g_orbit_size,
    })
}

fn conjugation_orbit(g: &FiniteGroup, seed: &Line, movers: &[usize]) -> HashSet<Line> {
    let mut orbit: HashSet<Line> = HashSet::new();
    orbit.insert(seed.clone());
    let mut queue = vec![seed.clone()];
    while let Some(line) = queue.pop() {
        for &m in movers {
            let image = Line::new(g.conjugate_set(line.members(), m));
            if !orbit.contains(&image) {
                orbit.insert(image.clone());
                queue.push(image);
            }
        }
    }
    orbit
}

/// The output of the extension pipeline: the quasidirect group, its
/// involution geometry, and the base line it was grown from.
#[derive(Debug)]
pub struct FrobeniusExtension {
    quasidirect: QuasidirectGroup,
    geometry: Geometry,
    lambda0: Line,
    base: Vec<usize>,
    g_orbit_size: usize,
}

impl FrobeniusExtension {
    pub fn quasidirect(&self) -> &QuasidirectGroup {
        &self.quasidirect
    }

    pub fn geometry(&self) -> &Geometry {
        &self.geometry
    }

    pub fn lambda0(&self) -> &Line {
        &self.lambda0
    }

    /// Base-group elements (in the original group) spanning the seed line.
    pub fn base_members(&self) -> &[usize] {
        &self.base
    }

    /// Orbit size when conjugating only by the loop slice.
    pub fn g_orbit_size(&self) -> usize {
        self.g_orbit_size
    }

    /// Full verification: the partial reflection-space axioms plus the
    /// extension-specific normalizer, line, and faithfulness facts.
    pub fn verify(&self) -> AxiomReport {
        let mut report = self.geometry.verify_partial_mhrs();
        let g = self.geometry.group();
        let j = self.geometry.points();

        // Both closed forms of every existing line.
        let mut correct = true;
        let mut witness = Vec::new();
        'lines: for line in self.geometry.lines() {
            for (ai, &i) in line.members().iter().enumerate() {
                for &jj in &line.members()[ai + 1..] {
                    let ij = g.mul(i, jj);
                    // ij in kJ <=> k * ij in J, since k is an involution.
                    let by_products: Vec<usize> = j
                        .iter()
                        .copied()
                        .filter(|&k| self.geometry.contains_point(g.mul(k, ij)))
                        .collect();
                    let by_inversion: Vec<usize> = j
                        .iter()
                        .copied()
                        .filter(|&k| g.conj(ij, k) == g.inv(ij))
                        .collect();
                    if by_products != line.members() || by_inversion != line.members() {
                        correct = false;
                        witness = vec![i, jj];
                        break 'lines;
                    }
                }
            }
        }
        report.record(
            "frob_correct_lines",
            correct,
            witness,
            "product form and inversion form both recover every line",
        );

        // Normalizer of the base line: loop part in the base, automorphism
        // part stabilizing the base.
        let normalizer = g.normalizer_of_set(self.lambda0.members());
        let base_positions: HashSet<usize> = self
            .base
            .iter()
            .map(|&h| self.quasidirect.kloop().position_of(h).unwrap())
            .collect();
        let membership = normalizer.members().iter().all(|&x| {
            let (a, alpha) = self.quasidirect.decode(x);
            let map = self.quasidirect.auts().get(alpha);
            base_positions.contains(&a)
                && base_positions
                    .iter()
                    .all(|&p| base_positions.contains(&map.apply(p)))
        });
        report.record(
            "frob_normalizer_membership",
            membership,
            vec![],
            format!(
                "all {} normalizer elements sit over the base and stabilize it",
                normalizer.order()
            ),
        );

        // N(lambda0) cap J^2 = lambda0^2.
        let j2 = crate::geometry::set_products(g, j, j);
        let lambda0_sq = self.geometry.line_square(&self.lambda0);
        let meet: Vec<usize> = j2
            .iter()
            .copied()
            .filter(|&x| normalizer.contains(x))
            .collect();
        report.record(
            "frob_normalizer_square",
            meet == lambda0_sq,
            vec![],
            "the base-line normalizer meets J^2 exactly in the line square",
        );

        // Index oracle for the orbit size.
        let expected_lines = g.order() / normalizer.order();
        report.record(
            "frob_orbit_index",
            self.geometry.lines().len() == expected_lines,
            vec![self.geometry.lines().len(), expected_lines],
            format!(
                "orbit size {} equals the normalizer index {}",
                self.geometry.lines().len(),
                expected_lines
            ),
        );

        report.pass(
            "frob_orbit_loop_slice",
            format!(
                "conjugating by the loop slice alone reaches {} of {} lines",
                self.g_orbit_size,
                self.geometry.lines().len()
            ),
        );

        // Triple faithfulness over non-collinear triples with two lines at i.
        let mut faithful = true;
        let mut triple_witness = Vec::new();
        let mut triples = 0usize;
        let cen_of: Vec<Vec<usize>> = j
            .iter()
            .map(|&i| g.centralizer(&[i]).members().to_vec())
            .collect();
        let pos_in_j: std::collections::HashMap<usize, usize> =
            j.iter().enumerate().map(|(n, &x)| (x, n)).collect();
        'triples: for (ni, &i) in j.iter().enumerate() {
            for &jj in j.iter() {
                if jj == i {
                    continue;
                }
                let lij = self.geometry.line_through(i, jj).expect("points of J");
                if !self.geometry.has_line(&lij) {
                    continue;
                }
                let cen_ij: Vec<usize> = cen_of[ni]
                    .iter()
                    .copied()
                    .filter(|&x| cen_of[pos_in_j[&jj]].binary_search(&x).is_ok())
                    .collect();
                for &k in j.iter() {
                    if k == i || k == jj || lij.contains(k) {
                        continue;
                    }
                    let lik = self.geometry.line_through(i, k).expect("points of J");
                    if !self.geometry.has_line(&lik) {
                        continue;
                    }
                    triples += 1;
                    let fixed = cen_ij
                        .iter()
                        .filter(|&&x| cen_of[pos_in_j[&k]].binary_search(&x).is_ok())
                        .count();
                    if fixed != 1 {
                        faithful = false;
                        triple_witness = vec![i, jj, k];
                        break 'triples;
                    }
                }
            }
        }
        report.record(
            "frob_faithful_triples",
            faithful,
            triple_witness,
            format!("Cen(i, j, k) = 1 over {triples} qualifying triples"),
        );

        report.finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s3() -> FiniteGroup {
        FiniteGroup::from_permutation_generators(3, &[vec![1, 2, 0], vec![1, 0, 2]]).unwrap()
    }

    fn f7_c3() -> FiniteGroup {
        FiniteGroup::from_permutation_generators(
            7,
            &[vec![1, 2, 3, 4, 5, 6, 0], vec![0, 2, 4, 6, 1, 3, 5]],
        )
        .unwrap()
    }

    fn agl1_f5() -> FiniteGroup {
        FiniteGroup::from_permutation_generators(5, &[vec![1, 2, 3, 4, 0], vec![0, 2, 4, 1, 3]])
            .unwrap()
    }

    fn stabilizer_of_zero(g: &FiniteGroup) -> Subgroup {
        let rep = g.perm_rep().unwrap();
        let members = g.elements().filter(|&e| rep.apply(e, 0) == 0).collect();
        Subgroup::new(g.clone(), members).unwrap()
    }

    fn f7_c3_pair() -> FrobeniusPair {
        let g = f7_c3();
        let h = stabilizer_of_zero(&g);
        FrobeniusPair::new(g, h).unwrap()
    }

    #[test]
    fn classic_pairs_are_frobenius() {
        let g = f7_c3();
        let h = stabilizer_of_zero(&g);
        assert_eq!(h.order(), 3);
        assert!(is_frobenius(&g, &h));

        let s3 = s3();
        let h = stabilizer_of_zero(&s3);
        assert_eq!(h.order(), 2);
        assert!(is_frobenius(&s3, &h));

        let whole = Subgroup::new(s3.clone(), s3.elements().collect()).unwrap();
        assert!(!is_frobenius(&s3, &whole));
    }

    #[test]
    fn fullness_counts() {
        let pair = f7_c3_pair();
        assert!(!pair.is_full());
        let covered = pair.conjugate_union().iter().filter(|&&c| c).count();
        assert_eq!(covered, 15); // 7 * (3 - 1) + 1

        let s3 = s3();
        let pair = FrobeniusPair::new(s3.clone(), stabilizer_of_zero(&s3)).unwrap();
        assert!(!pair.is_full());
        assert_eq!(pair.conjugate_union().iter().filter(|&&c| c).count(), 4);
    }

    #[test]
    fn kernels_split_the_group() {
        for (g, expected_kernel) in [
            (f7_c3(), 7usize),
            (s3(), 3),
            (agl1_f5(), 5),
        ] {
            let h = stabilizer_of_zero(&g);
            let pair = FrobeniusPair::new(g, h).unwrap();
            let k = pair.kernel().unwrap();
            assert_eq!(k.order(), expected_kernel);
            assert!(k.is_normal());
        }
    }

    #[test]
    fn trichotomy_tags() {
        let pair = f7_c3_pair();
        assert_eq!(pair.kind(), FrobeniusType::Degenerate);

        let s3 = s3();
        let pair = FrobeniusPair::new(s3.clone(), stabilizer_of_zero(&s3)).unwrap();
        assert_eq!(pair.kind(), FrobeniusType::Odd);

        let g = agl1_f5();
        let pair = FrobeniusPair::new(g.clone(), stabilizer_of_zero(&g)).unwrap();
        assert_eq!(pair.kind(), FrobeniusType::Odd);
    }

    #[test]
    fn improper_complement_is_rejected() {
        let c3 = FiniteGroup::from_cayley_table(&[
            vec![0, 1, 2],
            vec![1, 2, 0],
            vec![2, 0, 1],
        ])
        .unwrap();
        let whole = Subgroup::new(c3.clone(), c3.elements().collect()).unwrap();
        assert_eq!(
            FrobeniusPair::new(c3, whole).unwrap_err().code(),
            "E_NOT_FROBENIUS"
        );
    }

    #[test]
    fn extension_of_f7_c3() {
        let ext = f7_c3_pair().extend_degenerate().unwrap();
        assert_eq!(ext.quasidirect().order(), 882);
        assert_eq!(ext.geometry().points().len(), 21);
        assert_eq!(ext.geometry().lines().len(), 49);
        assert!(ext.geometry().lines().iter().all(|l| l.len() == 3));
        assert!(!ext.geometry().is_complete());

        let report = ext.verify();
        assert!(report.all_pass(), "{report:?}");
    }

    #[test]
    fn extension_rejects_even_or_nonabelian_input() {
        let g = agl1_f5();
        let pair = FrobeniusPair::new(g.clone(), stabilizer_of_zero(&g)).unwrap();
        assert_eq!(
            pair.extend_degenerate().unwrap_err().code(),
            "E_NOT_UNIQUELY_2DIV"
        );
    }

    #[test]
    fn abelian_route_gives_single_line() {
        let c3 = FiniteGroup::from_cayley_table(&[
            vec![0, 1, 2],
            vec![1, 2, 0],
            vec![2, 0, 1],
        ])
        .unwrap();
        let ext = extend_abelian(&c3).unwrap();
        assert_eq!(ext.quasidirect().order(), 6);
        assert_eq!(ext.geometry().lines().len(), 1);
        assert!(ext.geometry().is_complete());
        let report = ext.verify();
        assert!(report.all_pass(), "{report:?}");

        let trivial = FiniteGroup::trivial();
        assert!(extend_abelian(&trivial).is_err());
    }

    #[test]
    fn extension_geometry_contains_disjoint_lines() {
        // The 49-line family on 21 points has disjoint pairs, so the whole
        // class is not a projective plane.
        let ext = f7_c3_pair().extend_degenerate().unwrap();
        let geo = ext.geometry();
        assert!(!geo.is_projective_plane(geo.points()).unwrap());
    }
}
