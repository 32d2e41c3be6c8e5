//! Quasidirect products `L x|_Q A`: pairs of a loop element and an
//! automorphism under `(a, alpha)(b, beta) = (a.alpha(b), delta_{a,alpha(b)}
//! alpha beta)`, materialized as validated finite groups.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::kloop::{KLoop, LoopAutomorphism};
use crate::report::AxiomReport;

/// `x -> x^{-1}` as a loop automorphism; valid exactly when the loop has the
/// automorphic inverse property.
pub fn inversion_automorphism(l: &KLoop) -> Result<LoopAutomorphism> {
    let images: Vec<usize> = (0..l.size()).map(|p| l.inv(p)).collect();
    LoopAutomorphism::new(l, images)
}

/// One automorphism per ambient group element, acting by conjugation on a
/// loop carried by the whole group.
///
/// Faithfulness of the identification demands a trivial center; the trivial
/// group is refused as well since inversion collapses onto the identity there.
pub fn conjugation_automorphisms(
    g: &FiniteGroup,
    l: &KLoop,
) -> Result<Vec<LoopAutomorphism>> {
    if l.size() != g.order() || l.ambient() != g {
        return Err(Error::BadParams {
            reason: "the loop must be carried by the whole group".into(),
        });
    }
    if g.order() == 1 {
        return Err(Error::NontrivialCenter {
            reason: "the trivial group centralizes everything".into(),
        });
    }
    let center = g.center();
    if !center.is_trivial() {
        return Err(Error::NontrivialCenter {
            reason: format!(
                "conjugation is not faithful: the center has order {}",
                center.order()
            ),
        });
    }
    let mut auts = Vec::with_capacity(g.order());
    for h in g.elements() {
        let images: Vec<usize> = (0..l.size())
            .map(|p| {
                l.position_of(g.conj(l.ambient_of(p), h))
                    .expect("conjugation permutes the whole carrier")
            })
            .collect();
        let aut = LoopAutomorphism::new(l, images)?;
        // Inversion is conjugation-equivariant, so the two always commute.
        debug_assert_eq!(
            aut.compose(&inversion_automorphism(l).expect("loop has AIP")),
            inversion_automorphism(l).expect("loop has AIP").compose(&aut)
        );
        auts.push(aut);
    }
    Ok(auts)
}

/// A group of loop automorphisms closed under composition, with index
/// tables. Index 0 is the identity map.
#[derive(Debug)]
pub struct AutomorphismGroup {
    kloop: KLoop,
    auts: Vec<LoopAutomorphism>,
    comp: Vec<u32>, // comp[i * n + j] = index of auts[i] after auts[j]
    inv: Vec<u32>,
    index: HashMap<Vec<u32>, u32>,
}

impl AutomorphismGroup {
    pub fn from_generators(kloop: &KLoop, gens: &[LoopAutomorphism]) -> Self {
        let identity = LoopAutomorphism::identity(kloop);
        let mut auts = vec![identity];
        let mut index: HashMap<Vec<u32>, u32> = HashMap::new();
        index.insert(auts[0].images().to_vec(), 0);
        let mut head = 0;
        while head < auts.len() {
            for gen in gens {
                let composed = gen.compose(&auts[head]);
                if !index.contains_key(composed.images()) {
                    index.insert(composed.images().to_vec(), auts.len() as u32);
                    auts.push(composed);
                }
            }
            head += 1;
        }
        let n = auts.len();
        let mut comp = vec![0u32; n * n];
        let mut inv = vec![0u32; n];
        for i in 0..n {
            for j in 0..n {
                let composed = auts[i].compose(&auts[j]);
                let k = index[composed.images()];
                comp[i * n + j] = k;
                if k == 0 {
                    inv[i] = j as u32;
                }
            }
        }
        AutomorphismGroup {
            kloop: kloop.clone(),
            auts,
            comp,
            inv,
            index,
        }
    }

    /// The standard extension group: all conjugations together with
    /// inversion, of size `2 |G|`.
    pub fn standard(g: &FiniteGroup, l: &KLoop) -> Result<Self> {
        let mut gens = conjugation_automorphisms(g, l)?;
        gens.push(inversion_automorphism(l)?);
        let auts = Self::from_generators(l, &gens);
        assert_eq!(
            auts.len(),
            2 * g.order(),
            "conjugations and inversion must close at twice the group order"
        );
        Ok(auts)
    }

    pub fn kloop(&self) -> &KLoop {
        &self.kloop
    }

    pub fn len(&self) -> usize {
        self.auts.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn get(&self, i: usize) -> &LoopAutomorphism {
        &self.auts[i]
    }

    #[inline]
    pub fn compose_ids(&self, i: usize, j: usize) -> usize {
        self.comp[i * self.auts.len() + j] as usize
    }

    #[inline]
    pub fn inverse_id(&self, i: usize) -> usize {
        self.inv[i] as usize
    }

    pub fn index_of(&self, images: &[u32]) -> Option<usize> {
        self.index.get(images).map(|&i| i as usize)
    }

    /// The index of the inversion map, if present.
    pub fn epsilon_index(&self) -> Option<usize> {
        let images: Vec<u32> = (0..self.kloop.size())
            .map(|p| self.kloop.inv(p) as u32)
            .collect();
        self.index_of(&images)
    }
}

/// The quasidirect product, materialized as a finite group whose validator
/// proves associativity exhaustively.
#[derive(Debug)]
pub struct QuasidirectGroup {
    kloop: KLoop,
    auts: AutomorphismGroup,
    delta_id: Vec<u32>, // |L| x |L| -> automorphism index
    group: FiniteGroup,
}

impl QuasidirectGroup {
    pub fn new(kloop: &KLoop, auts: AutomorphismGroup) -> Result<Self> {
        let n = kloop.size();
        let m = auts.len();

        let mut delta_id = vec![0u32; n * n];
        for a in 0..n {
            for b in 0..n {
                let images = kloop.delta_images(a, b);
                match auts.index_of(&images) {
                    Some(idx) => delta_id[a * n + b] = idx as u32,
                    None => return Err(Error::PrecessionNotInA { a, b }),
                }
            }
        }

        let order = n * m;
        let encode = |pos: usize, aut: usize| pos * m + aut;
        let mut table: Vec<Vec<usize>> = Vec::with_capacity(order);
        for a in 0..n {
            for alpha in 0..m {
                let alpha_map = auts.get(alpha);
                let mut row = Vec::with_capacity(order);
                for b in 0..n {
                    let ab = alpha_map.apply(b);
                    let prod = kloop.otimes(a, ab);
                    let delta = delta_id[a * n + ab] as usize;
                    let da = auts.compose_ids(delta, alpha);
                    for beta in 0..m {
                        row.push(encode(prod, auts.compose_ids(da, beta)));
                    }
                }
                table.push(row);
            }
        }

        let labels: Vec<String> = (0..n)
            .flat_map(|a| {
                let amb = kloop.ambient().label(kloop.ambient_of(a));
                (0..m).map(move |alpha| format!("({amb},a{alpha})"))
            })
            .collect();

        let group = FiniteGroup::from_cayley_table_labeled(&table, Some(labels))?;
        Ok(QuasidirectGroup {
            kloop: kloop.clone(),
            auts,
            delta_id,
            group,
        })
    }

    pub fn kloop(&self) -> &KLoop {
        &self.kloop
    }

    pub fn auts(&self) -> &AutomorphismGroup {
        &self.auts
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn order(&self) -> usize {
        self.group.order()
    }

    #[inline]
    pub fn encode(&self, pos: usize, aut: usize) -> usize {
        pos * self.auts.len() + aut
    }

    #[inline]
    pub fn decode(&self, element: usize) -> (usize, usize) {
        (element / self.auts.len(), element % self.auts.len())
    }

    pub fn delta_index(&self, a: usize, b: usize) -> usize {
        self.delta_id[a * self.kloop.size() + b] as usize
    }

    /// `iota = (1, epsilon)`, the base involution. Requires inversion in `A`.
    pub fn iota(&self) -> Result<usize> {
        let eps = self.auts.epsilon_index().ok_or_else(|| Error::BadParams {
            reason: "the automorphism group does not contain inversion".into(),
        })?;
        Ok(self.encode(0, eps))
    }

    /// Does the materialized inverse table match
    /// `(a, alpha)^{-1} = (alpha^{-1}(a^{-1}), alpha^{-1})` everywhere?
    pub fn inverse_formula_holds(&self) -> bool {
        (0..self.order()).all(|x| {
            let (a, alpha) = self.decode(x);
            let ai = self.auts.inverse_id(alpha);
            let expected = self.encode(self.auts.get(ai).apply(self.kloop.inv(a)), ai);
            self.group.inv(x) == expected
        })
    }

    /// Involution structure: `J = L x {eps}`, `Cen(iota) = 1 x A`, the class
    /// acting regularly on itself, and the closed conjugation formula.
    pub fn verify_involutions(&self) -> Result<AxiomReport> {
        let eps = self.auts.epsilon_index().ok_or_else(|| Error::BadParams {
            reason: "the automorphism group does not contain inversion".into(),
        })?;
        let mut report = AxiomReport::new();
        let g = &self.group;
        let n = self.kloop.size();

        let expected_j: Vec<usize> = (0..n).map(|a| self.encode(a, eps)).collect();
        let mut sorted_j = expected_j.clone();
        sorted_j.sort_unstable();
        let involutions = g.involutions();
        report.record(
            "qd_involutions_are_loop_slice",
            involutions == sorted_j,
            vec![],
            format!("{} involutions, all of the form (a, eps)", involutions.len()),
        );

        let iota = self.encode(0, eps);
        let cen = g.centralizer(&[iota]);
        let mut expected_cen: Vec<usize> = (0..self.auts.len()).map(|al| self.encode(0, al)).collect();
        expected_cen.sort_unstable();
        report.record(
            "qd_centralizer_of_iota",
            cen.members() == expected_cen,
            vec![],
            format!("Cen(iota) has order {}", cen.order()),
        );

        // Regularity with the explicit solution b (x) a^{-1/2} = c^{1/2},
        // cross-checked against the table scan.
        let mut regular = true;
        let mut witness = Vec::new();
        'regular: for a in 0..n {
            let i = self.encode(a, eps);
            let m = self.kloop.inv(self.kloop.sqrt(a));
            for c in 0..n {
                let j = self.encode(c, eps);
                let hits: Vec<usize> = expected_j
                    .iter()
                    .copied()
                    .filter(|&k| g.conj(i, k) == j)
                    .collect();
                let b = self.kloop.right_div(self.kloop.sqrt(c), m);
                if hits != vec![self.encode(b, eps)] {
                    regular = false;
                    witness = vec![i, j];
                    break 'regular;
                }
            }
        }
        report.record(
            "qd_class_regular",
            regular,
            witness,
            format!("unique conjugator over {} ordered pairs, matching the loop solution", n * n),
        );

        // (b,eps)(a,eps)(b,eps) = ((b (x) a^{-1/2})^2, eps).
        let mut formula = true;
        let mut formula_witness = Vec::new();
        'formula: for a in 0..n {
            let i = self.encode(a, eps);
            let m = self.kloop.inv(self.kloop.sqrt(a));
            for b in 0..n {
                let k = self.encode(b, eps);
                let t = self.kloop.otimes(b, m);
                let expected = self.encode(self.kloop.otimes(t, t), eps);
                if g.mul(g.mul(k, i), k) != expected {
                    formula = false;
                    formula_witness = vec![a, b];
                    break 'formula;
                }
            }
        }
        report.record(
            "qd_conjugation_formula",
            formula,
            formula_witness,
            "closed conjugation formula matches the table",
        );

        report.record(
            "qd_inverse_formula",
            self.inverse_formula_holds(),
            vec![],
            "(a, alpha)^{-1} = (alpha^{-1}(a^{-1}), alpha^{-1}) elementwise",
        );

        Ok(report.finish())
    }

    /// The action `(a, alpha)(x) = a (x) alpha(x)` on the loop, with its
    /// verification: homomorphism (against a generating set), faithfulness,
    /// transitivity.
    pub fn natural_action(&self) -> (Vec<Vec<u32>>, AxiomReport) {
        let mut report = AxiomReport::new();
        let n = self.kloop.size();
        let images: Vec<Vec<u32>> = (0..self.order())
            .map(|e| {
                let (a, alpha) = self.decode(e);
                let map = self.auts.get(alpha);
                (0..n)
                    .map(|x| self.kloop.otimes(a, map.apply(x)) as u32)
                    .collect()
            })
            .collect();

        let gens = self.group.generating_set();
        let hom = gens.iter().all(|&g| {
            (0..self.order()).all(|h| {
                let gh = self.group.mul(g, h);
                (0..n).all(|x| images[gh][x] == images[g][images[h][x] as usize])
            })
        });
        report.record(
            "action_homomorphism",
            hom,
            vec![],
            format!("action respects products against {} generators", gens.len()),
        );

        let faithful = (0..self.order())
            .all(|e| e == 0 || images[e].iter().enumerate().any(|(x, &y)| y as usize != x));
        report.record(
            "action_faithful",
            faithful,
            vec![],
            "only the identity acts trivially",
        );

        let mut orbit = vec![false; n];
        for im in &images {
            orbit[im[0] as usize] = true;
        }
        let transitive = orbit.iter().all(|&b| b);
        report.record(
            "action_transitive",
            transitive,
            vec![],
            format!("orbit of the neutral element covers all {n} points"),
        );

        (images, report.finish())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyclic(n: usize) -> FiniteGroup {
        let table: Vec<Vec<usize>> = (0..n)
            .map(|a| (0..n).map(|b| (a + b) % n).collect())
            .collect();
        FiniteGroup::from_cayley_table(&table).unwrap()
    }

    fn f7_c3() -> FiniteGroup {
        FiniteGroup::from_permutation_generators(
            7,
            &[vec![1, 2, 3, 4, 5, 6, 0], vec![0, 2, 4, 6, 1, 3, 5]],
        )
        .unwrap()
    }

    fn whole_loop(g: &FiniteGroup) -> KLoop {
        let all: Vec<usize> = g.elements().collect();
        KLoop::from_twisted(g, &all).unwrap()
    }

    #[test]
    fn inversion_is_an_automorphism_by_aip() {
        let l = whole_loop(&cyclic(7));
        let eps = inversion_automorphism(&l).unwrap();
        assert_eq!(eps.apply(1), l.inv(1));

        let l = whole_loop(&f7_c3());
        assert!(inversion_automorphism(&l).is_ok());

        let bad = l.corrupted_for_tests(1, 2, 3);
        assert_eq!(
            inversion_automorphism(&bad).unwrap_err().code(),
            "E_NOT_AUTOMORPHISM"
        );
    }

    #[test]
    fn conjugations_need_a_trivial_center() {
        let c7 = cyclic(7);
        let l = whole_loop(&c7);
        assert_eq!(
            conjugation_automorphisms(&c7, &l).unwrap_err().code(),
            "E_NONTRIVIAL_CENTER"
        );

        let trivial = FiniteGroup::trivial();
        let lt = whole_loop(&trivial);
        assert_eq!(
            conjugation_automorphisms(&trivial, &lt).unwrap_err().code(),
            "E_NONTRIVIAL_CENTER"
        );

        let g = f7_c3();
        let l = whole_loop(&g);
        let auts = conjugation_automorphisms(&g, &l).unwrap();
        assert_eq!(auts.len(), 21);
        let big = AutomorphismGroup::standard(&g, &l).unwrap();
        assert_eq!(big.len(), 42);
        assert!(big.epsilon_index().is_some());
    }

    #[test]
    fn c3_with_inversion_materializes_s3() {
        let c3 = cyclic(3);
        let l = whole_loop(&c3);
        let eps = inversion_automorphism(&l).unwrap();
        let auts = AutomorphismGroup::from_generators(&l, &[eps]);
        assert_eq!(auts.len(), 2);
        let qd = QuasidirectGroup::new(&l, auts).unwrap();
        assert_eq!(qd.order(), 6);
        assert_eq!(qd.group().involutions().len(), 3);
        assert!(qd.inverse_formula_holds());
    }

    #[test]
    fn trivial_loop_gives_the_automorphism_group() {
        let t = FiniteGroup::trivial();
        let l = whole_loop(&t);
        let auts = AutomorphismGroup::from_generators(&l, &[]);
        assert_eq!(auts.len(), 1);
        let qd = QuasidirectGroup::new(&l, auts).unwrap();
        assert_eq!(qd.order(), 1);
        let (_, action) = qd.natural_action();
        assert!(action.all_pass(), "{action:?}");
    }

    #[test]
    fn missing_precession_is_reported() {
        let g = f7_c3();
        let l = whole_loop(&g);
        let eps = inversion_automorphism(&l).unwrap();
        // <eps> alone misses the nontrivial precessions of this loop.
        let auts = AutomorphismGroup::from_generators(&l, &[eps]);
        let err = QuasidirectGroup::new(&l, auts).unwrap_err();
        assert_eq!(err.code(), "E_PRECESSION_NOT_IN_A");
    }

    #[test]
    fn f7_c3_extension_has_order_882() {
        let g = f7_c3();
        let l = whole_loop(&g);
        let auts = AutomorphismGroup::standard(&g, &l).unwrap();
        let qd = QuasidirectGroup::new(&l, auts).unwrap();
        assert_eq!(qd.order(), 882);

        let report = qd.verify_involutions().unwrap();
        assert!(report.all_pass(), "{report:?}");
        assert_eq!(qd.group().involutions().len(), 21);

        let (_, action) = qd.natural_action();
        assert!(action.all_pass(), "{action:?}");
    }

    #[test]
    fn s3_as_quasidirect_acts_standardly() {
        let c3 = cyclic(3);
        let l = whole_loop(&c3);
        let eps = inversion_automorphism(&l).unwrap();
        let auts = AutomorphismGroup::from_generators(&l, &[eps]);
        let qd = QuasidirectGroup::new(&l, auts).unwrap();
        let (images, action) = qd.natural_action();
        assert!(action.all_pass());
        // The six images are exactly the six permutations of three points.
        let mut perms: Vec<Vec<u32>> = images;
        perms.sort();
        perms.dedup();
        assert_eq!(perms.len(), 6);

        let report = qd.verify_involutions().unwrap();
        assert!(report.all_pass(), "{report:?}");
    }
}
