//! K-loops built on uniquely 2-divisible twisted subgroups via
//! `a (x) b = a^{1/2} b a^{1/2}`, their precession maps, and the loop
//! identity suites.

use std::collections::HashSet;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::group::{FiniteGroup, DEFAULT_MAX_ORDER};
use crate::report::AxiomReport;

/// Does `s` contain 1, its inverses, and `a s a` for every `a` in `s`?
pub fn is_twisted_subgroup(g: &FiniteGroup, s: &[usize]) -> bool {
    let mut in_s = vec![false; g.order()];
    for &x in s {
        in_s[x] = true;
    }
    in_s[0]
        && s.iter().all(|&a| in_s[g.inv(a)])
        && s.iter()
            .all(|&a| s.iter().all(|&l| in_s[g.mul(g.mul(a, l), a)]))
}

#[derive(Debug)]
struct KLoopInner {
    ambient: FiniteGroup,
    carrier: Vec<usize>,
    position: Vec<u32>, // ambient index -> carrier position, u32::MAX outside
    otimes: Vec<u32>,   // positions, |L| x |L|
    left_div: Vec<u32>, // left_div[a * n + y] = x with a (x) x = y
    right_div: Vec<u32>, // right_div[y * n + b] = x with x (x) b = y
    sqrt: Vec<u32>,
    inv: Vec<u32>,
}

/// A K-loop carried by a subset of an ambient group. Cheap to clone.
#[derive(Debug, Clone)]
pub struct KLoop(Arc<KLoopInner>);

impl KLoop {
    /// Build the loop on a uniquely 2-divisible twisted subgroup.
    pub fn from_twisted(g: &FiniteGroup, s: &[usize]) -> Result<Self> {
        let mut carrier = s.to_vec();
        carrier.sort_unstable();
        carrier.dedup();
        if !is_twisted_subgroup(g, &carrier) {
            return Err(Error::NotTwisted {
                reason: "the set is not a twisted subgroup".into(),
            });
        }
        if !g.is_uniquely_2_divisible(&carrier) {
            return Err(Error::NotUniquely2Divisible {
                reason: "squaring is not a bijection of the carrier".into(),
            });
        }
        let n = carrier.len();
        let mut position = vec![u32::MAX; g.order()];
        for (p, &x) in carrier.iter().enumerate() {
            position[x] = p as u32;
        }

        // Invert the square map inside the carrier.
        let mut sqrt = vec![u32::MAX; n];
        for (p, &x) in carrier.iter().enumerate() {
            sqrt[position[g.mul(x, x)] as usize] = p as u32;
        }

        let mut otimes = vec![0u32; n * n];
        for pa in 0..n {
            let ra = carrier[sqrt[pa] as usize];
            for (pb, &b) in carrier.iter().enumerate() {
                let prod = g.mul(g.mul(ra, b), ra);
                let pos = position[prod];
                if pos == u32::MAX {
                    return Err(Error::NotTwisted {
                        reason: format!("product {prod} escapes the carrier"),
                    });
                }
                otimes[pa * n + pb] = pos;
            }
        }

        let mut left_div = vec![0u32; n * n];
        let mut right_div = vec![0u32; n * n];
        for a in 0..n {
            for x in 0..n {
                let y = otimes[a * n + x] as usize;
                left_div[a * n + y] = x as u32;
                right_div[y * n + x] = a as u32;
            }
        }

        let inv = carrier
            .iter()
            .map(|&x| position[g.inv(x)])
            .collect();

        Ok(KLoop(Arc::new(KLoopInner {
            ambient: g.clone(),
            carrier,
            position,
            otimes,
            left_div,
            right_div,
            sqrt,
            inv,
        })))
    }

    pub fn ambient(&self) -> &FiniteGroup {
        &self.0.ambient
    }

    pub fn size(&self) -> usize {
        self.0.carrier.len()
    }

    /// Ambient indices of the carrier, sorted. Position 0 is the neutral 1.
    pub fn carrier(&self) -> &[usize] {
        &self.0.carrier
    }

    pub fn neutral(&self) -> usize {
        0
    }

    pub fn ambient_of(&self, pos: usize) -> usize {
        self.0.carrier[pos]
    }

    pub fn position_of(&self, ambient: usize) -> Option<usize> {
        match self.0.position.get(ambient) {
            Some(&p) if p != u32::MAX => Some(p as usize),
            _ => None,
        }
    }

    /// The loop product, in carrier positions.
    #[inline]
    pub fn otimes(&self, a: usize, b: usize) -> usize {
        self.0.otimes[a * self.size() + b] as usize
    }

    /// Unique `x` with `a (x) x = y`.
    #[inline]
    pub fn left_div(&self, a: usize, y: usize) -> usize {
        self.0.left_div[a * self.size() + y] as usize
    }

    /// Unique `x` with `x (x) b = y`.
    #[inline]
    pub fn right_div(&self, y: usize, b: usize) -> usize {
        self.0.right_div[y * self.size() + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.0.inv[a] as usize
    }

    #[inline]
    pub fn sqrt(&self, a: usize) -> usize {
        self.0.sqrt[a] as usize
    }

    pub fn otimes_power(&self, a: usize, k: usize) -> usize {
        let mut acc = 0;
        for _ in 0..k {
            acc = self.otimes(acc, a);
        }
        acc
    }

    fn is_latin(&self) -> Option<(usize, usize)> {
        let n = self.size();
        for a in 0..n {
            let mut row = vec![false; n];
            let mut col = vec![false; n];
            for b in 0..n {
                row[self.otimes(a, b)] = true;
                col[self.otimes(b, a)] = true;
            }
            if let Some(m) = row.iter().position(|&s| !s) {
                return Some((a, m));
            }
            if let Some(m) = col.iter().position(|&s| !s) {
                return Some((a, m));
            }
        }
        None
    }

    /// Unique solvability, the Bol condition, and the automorphic inverse
    /// property, all by full table scans.
    pub fn verify_axioms(&self) -> AxiomReport {
        let mut report = AxiomReport::new();
        let n = self.size();

        match self.is_latin() {
            None => report.pass(
                "loop_latin",
                format!("rows and columns of the {n}x{n} table are permutations"),
            ),
            Some((a, m)) => report.fail(
                "loop_latin",
                vec![a, m],
                format!("row or column {a} misses value {m}"),
            ),
        }

        let mut bol = true;
        let mut bol_witness = Vec::new();
        'bol: for a in 0..n {
            for b in 0..n {
                let aba = self.otimes(a, self.otimes(b, a));
                for c in 0..n {
                    if self.otimes(a, self.otimes(b, self.otimes(a, c))) != self.otimes(aba, c) {
                        bol = false;
                        bol_witness = vec![a, b, c];
                        break 'bol;
                    }
                }
            }
        }
        report.record(
            "loop_bol",
            bol,
            bol_witness,
            format!("a(b.ac) = (a.ba)c over {} triples", n * n * n),
        );

        // Two-sided inverses from the table, then (ab)^{-1} = a^{-1} b^{-1}.
        let mut table_inv = vec![usize::MAX; n];
        let mut aip = true;
        let mut aip_witness = Vec::new();
        for a in 0..n {
            let right = (0..n).filter(|&x| self.otimes(a, x) == 0).collect::<Vec<_>>();
            let left = (0..n).filter(|&x| self.otimes(x, a) == 0).collect::<Vec<_>>();
            if right.len() == 1 && left == right {
                table_inv[a] = right[0];
            } else {
                aip = false;
                aip_witness = vec![a];
                break;
            }
        }
        if aip {
            'aip: for a in 0..n {
                for b in 0..n {
                    if table_inv[self.otimes(a, b)] != self.otimes(table_inv[a], table_inv[b]) {
                        aip = false;
                        aip_witness = vec![a, b];
                        break 'aip;
                    }
                }
            }
        }
        report.record(
            "loop_aip",
            aip,
            aip_witness,
            format!("(ab)^-1 = a^-1 b^-1 over {} pairs", n * n),
        );

        report.finish()
    }

    /// The precession map as left-translation composition, with the
    /// twisted-subgroup conjugation route asserted against it.
    pub fn precession(&self, a: usize, b: usize) -> LoopAutomorphism {
        let images = self.delta_images(a, b);
        debug_assert_eq!(
            images,
            self.delta_twisted_images(a, b),
            "conjugation route disagrees with translation route at ({a}, {b})"
        );
        LoopAutomorphism {
            kloop: self.clone(),
            images,
        }
    }

    /// `delta_{a,b}(x)` via `lambda_{ab}^{-1} lambda_a lambda_b`.
    pub fn delta_images(&self, a: usize, b: usize) -> Vec<u32> {
        let ab = self.otimes(a, b);
        (0..self.size())
            .map(|x| self.left_div(ab, self.otimes(a, self.otimes(b, x))) as u32)
            .collect()
    }

    /// `delta_{a,b}` as ambient conjugation by
    /// `d_{a,b} = b^{1/2} a^{1/2} (a^{1/2} b a^{1/2})^{-1/2}`.
    pub fn delta_twisted_images(&self, a: usize, b: usize) -> Vec<u32> {
        let g = &self.0.ambient;
        let ra = self.ambient_of(self.sqrt(a));
        let rb = self.ambient_of(self.sqrt(b));
        let c = self.otimes(a, b);
        let rc = self.ambient_of(self.sqrt(c));
        let d = g.mul(g.mul(rb, ra), g.inv(rc));
        (0..self.size())
            .map(|x| {
                let image = g.conj(self.ambient_of(x), d);
                self.position_of(image).expect("conjugation leaves the carrier") as u32
            })
            .collect()
    }

    /// Exhaustively check the five precession identities over all pairs and
    /// the supplied automorphisms, plus agreement of the two precession
    /// routes.
    pub fn verify_precession_identities(&self, auts: &[LoopAutomorphism]) -> AxiomReport {
        let mut report = AxiomReport::new();
        let n = self.size();
        if let Some((a, m)) = self.is_latin() {
            report.fail(
                "prec_table_latin",
                vec![a, m],
                "precession maps are undefined: the table is not a quasigroup",
            );
            return report.finish();
        }
        report.pass("prec_table_latin", "table is a quasigroup");

        let delta: Vec<Vec<u32>> = (0..n * n)
            .map(|i| self.delta_images(i / n, i % n))
            .collect();
        let at = |a: usize, b: usize| &delta[a * n + b];

        let dual = (0..n).all(|a| (0..n).all(|b| *at(a, b) == self.delta_twisted_images(a, b)));
        report.record(
            "prec_dual_route",
            dual,
            vec![],
            "translation-composition and conjugation routes agree elementwise",
        );

        let mut conj_ok = true;
        let mut conj_witness = Vec::new();
        'conj: for (ai, alpha) in auts.iter().enumerate() {
            for a in 0..n {
                for b in 0..n {
                    // alpha^{-1} delta_{a,b} alpha = delta_{alpha^{-1}a, alpha^{-1}b}
                    let inv_alpha = alpha.inverse();
                    let lhs: Vec<u32> = (0..n)
                        .map(|x| inv_alpha.apply(at(a, b)[alpha.apply(x)] as usize) as u32)
                        .collect();
                    let rhs = at(inv_alpha.apply(a), inv_alpha.apply(b));
                    if lhs != *rhs {
                        conj_ok = false;
                        conj_witness = vec![ai, a, b];
                        break 'conj;
                    }
                }
            }
        }
        report.record(
            "prec_conjugation_family",
            conj_ok,
            conj_witness,
            format!("automorphism conjugation identity over {} maps", auts.len()),
        );

        let inv_pair = (0..n).all(|a| is_identity(at(a, self.inv(a))));
        report.record(
            "prec_inverse_pair",
            inv_pair,
            vec![],
            "delta_{a, a^-1} = id",
        );

        let absorb = (0..n).all(|a| (0..n).all(|b| at(a, self.otimes(b, a)) == at(a, b)));
        report.record("prec_absorb_product", absorb, vec![], "delta_{a, ba} = delta_{a, b}");

        let antisym = (0..n).all(|a| {
            (0..n).all(|b| {
                let ba = at(b, a);
                (0..n).all(|x| ba[at(a, b)[x] as usize] as usize == x)
            })
        });
        report.record(
            "prec_antisymmetry",
            antisym,
            vec![],
            "delta_{a,b} inverts delta_{b,a}",
        );

        let inverted_args =
            (0..n).all(|a| (0..n).all(|b| at(a, b) == at(self.inv(a), self.inv(b))));
        report.record(
            "prec_inverted_arguments",
            inverted_args,
            vec![],
            "delta_{a,b} = delta_{a^-1, b^-1}",
        );

        report.finish()
    }

    /// Closure of the precession maps under composition.
    pub fn precession_group(&self) -> Result<Vec<LoopAutomorphism>> {
        self.precession_group_bounded(DEFAULT_MAX_ORDER)
    }

    pub fn precession_group_bounded(&self, bound: usize) -> Result<Vec<LoopAutomorphism>> {
        let n = self.size();
        let mut seen: HashSet<Vec<u32>> = HashSet::new();
        let mut out: Vec<Vec<u32>> = Vec::new();
        let identity: Vec<u32> = (0..n as u32).collect();
        seen.insert(identity.clone());
        out.push(identity);
        let mut gens: Vec<Vec<u32>> = Vec::new();
        for a in 0..n {
            for b in 0..n {
                let d = self.delta_images(a, b);
                if seen.insert(d.clone()) {
                    if out.len() >= bound {
                        return Err(Error::TooLarge { bound });
                    }
                    out.push(d.clone());
                    gens.push(d);
                }
            }
        }
        let mut head = 0;
        while head < out.len() {
            let current = out[head].clone();
            for gen in &gens {
                let composed: Vec<u32> = (0..n).map(|x| gen[current[x] as usize]).collect();
                if seen.insert(composed.clone()) {
                    if out.len() >= bound {
                        return Err(Error::TooLarge { bound });
                    }
                    out.push(composed);
                }
            }
            head += 1;
        }
        Ok(out
            .into_iter()
            .map(|images| LoopAutomorphism {
                kloop: self.clone(),
                images,
            })
            .collect())
    }

    #[cfg(test)]
    pub(crate) fn corrupted_for_tests(&self, row: usize, col_a: usize, col_b: usize) -> KLoop {
        let mut inner = KLoopInner {
            ambient: self.0.ambient.clone(),
            carrier: self.0.carrier.clone(),
            position: self.0.position.clone(),
            otimes: self.0.otimes.clone(),
            left_div: self.0.left_div.clone(),
            right_div: self.0.right_div.clone(),
            sqrt: self.0.sqrt.clone(),
            inv: self.0.inv.clone(),
        };
        let n = self.size();
        inner.otimes.swap(row * n + col_a, row * n + col_b);
        KLoop(Arc::new(inner))
    }
}

fn is_identity(images: &[u32]) -> bool {
    images.iter().enumerate().all(|(i, &v)| v as usize == i)
}

/// An automorphism of a K-loop, stored as a permutation of carrier positions
/// and validated eagerly.
#[derive(Debug, Clone)]
pub struct LoopAutomorphism {
    kloop: KLoop,
    images: Vec<u32>,
}

impl PartialEq for LoopAutomorphism {
    fn eq(&self, other: &Self) -> bool {
        self.images == other.images
    }
}
impl Eq for LoopAutomorphism {}

impl LoopAutomorphism {
    pub fn new(kloop: &KLoop, images: Vec<usize>) -> Result<Self> {
        let n = kloop.size();
        if images.len() != n {
            return Err(Error::NotAutomorphism {
                reason: format!("{} images for {n} positions", images.len()),
            });
        }
        let mut seen = vec![false; n];
        for &v in &images {
            if v >= n || seen[v] {
                return Err(Error::NotAutomorphism {
                    reason: "images are not a permutation of the carrier".into(),
                });
            }
            seen[v] = true;
        }
        for a in 0..n {
            for b in 0..n {
                if images[kloop.otimes(a, b)]
                    != kloop.otimes(images[a], images[b])
                {
                    return Err(Error::NotAutomorphism {
                        reason: format!("multiplicativity fails at ({a}, {b})"),
                    });
                }
            }
        }
        Ok(LoopAutomorphism {
            kloop: kloop.clone(),
            images: images.into_iter().map(|v| v as u32).collect(),
        })
    }

    pub fn identity(kloop: &KLoop) -> Self {
        LoopAutomorphism {
            kloop: kloop.clone(),
            images: (0..kloop.size() as u32).collect(),
        }
    }

    pub fn kloop(&self) -> &KLoop {
        &self.kloop
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    #[inline]
    pub fn apply(&self, pos: usize) -> usize {
        self.images[pos] as usize
    }

    pub fn is_identity(&self) -> bool {
        is_identity(&self.images)
    }

    /// `self` after `other`: `(self . other)(x) = self(other(x))`.
    pub fn compose(&self, other: &LoopAutomorphism) -> LoopAutomorphism {
        LoopAutomorphism {
            kloop: self.kloop.clone(),
            images: other.images.iter().map(|&x| self.images[x as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> LoopAutomorphism {
        let mut images = vec![0u32; self.images.len()];
        for (i, &v) in self.images.iter().enumerate() {
            images[v as usize] = i as u32;
        }
        LoopAutomorphism {
            kloop: self.kloop.clone(),
            images,
        }
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

    fn whole(g: &FiniteGroup) -> Vec<usize> {
        g.elements().collect()
    }

    #[test]
    fn twisted_subgroup_checks() {
        let c7 = cyclic(7);
        assert!(is_twisted_subgroup(&c7, &whole(&c7)));
        assert!(!is_twisted_subgroup(&c7, &[0, 1])); // t * t * t = t^3 escapes

        // iQ inside S3 is a twisted subgroup.
        let s3 = FiniteGroup::from_permutation_generators(3, &[vec![1, 2, 0], vec![1, 0, 2]])
            .unwrap();
        let q = s3.involutions();
        let i = q[0];
        let mut iq: Vec<usize> = q.iter().map(|&x| s3.mul(i, x)).collect();
        iq.sort_unstable();
        assert!(is_twisted_subgroup(&s3, &iq));
    }

    #[test]
    fn abelian_loops_recover_group_multiplication() {
        for g in [cyclic(7), cyclic(3)] {
            let l = KLoop::from_twisted(&g, &whole(&g)).unwrap();
            for a in 0..l.size() {
                for b in 0..l.size() {
                    let amb = g.mul(l.ambient_of(a), l.ambient_of(b));
                    assert_eq!(l.ambient_of(l.otimes(a, b)), amb);
                }
            }
        }
    }

    #[test]
    fn f7_c3_loop_is_not_associative() {
        let g = f7_c3();
        let l = KLoop::from_twisted(&g, &whole(&g)).unwrap();
        let witness = (0..l.size()).any(|a| {
            (0..l.size()).any(|b| {
                (0..l.size())
                    .any(|c| l.otimes(l.otimes(a, b), c) != l.otimes(a, l.otimes(b, c)))
            })
        });
        assert!(witness, "a 21-element loop from a nonabelian group must fail associativity");
    }

    #[test]
    fn loop_axioms_pass_on_catalog_loops() {
        for g in [cyclic(7), f7_c3()] {
            let l = KLoop::from_twisted(&g, &whole(&g)).unwrap();
            let report = l.verify_axioms();
            assert!(report.all_pass(), "{report:?}");
        }
    }

    #[test]
    fn corrupted_table_fails_some_axiom() {
        let g = f7_c3();
        let l = KLoop::from_twisted(&g, &whole(&g)).unwrap();
        let bad = l.corrupted_for_tests(2, 3, 4);
        let report = bad.verify_axioms();
        assert!(!report.all_pass());
        let prec = bad.verify_precession_identities(&[]);
        assert!(!prec.all_pass());
        assert!(!prec.check("prec_table_latin").unwrap().pass);
    }

    #[test]
    fn rejects_non_twisted_and_even_carriers() {
        let c7 = cyclic(7);
        assert_eq!(
            KLoop::from_twisted(&c7, &[0, 1]).unwrap_err().code(),
            "E_NOT_TWISTED"
        );
        let s3 = FiniteGroup::from_permutation_generators(3, &[vec![1, 2, 0], vec![1, 0, 2]])
            .unwrap();
        assert_eq!(
            KLoop::from_twisted(&s3, &whole(&s3)).unwrap_err().code(),
            "E_NOT_UNIQUELY_2DIV"
        );
    }

    #[test]
    fn powers_agree_with_ambient() {
        let g = f7_c3();
        let l = KLoop::from_twisted(&g, &whole(&g)).unwrap();
        for a in 0..l.size() {
            let amb = l.ambient_of(a);
            for k in 0..=l.size() {
                assert_eq!(l.ambient_of(l.otimes_power(a, k)), g.power(amb, k));
            }
        }
    }

    #[test]
    fn precessions_trivial_on_abelian_carriers() {
        let g = cyclic(7);
        let l = KLoop::from_twisted(&g, &whole(&g)).unwrap();
        for a in 0..l.size() {
            for b in 0..l.size() {
                assert!(l.precession(a, b).is_identity());
            }
        }
    }

    #[test]
    fn precession_identities_hold_with_conjugation_automorphisms() {
        let g = f7_c3();
        let l = KLoop::from_twisted(&g, &whole(&g)).unwrap();
        // Conjugation by any fixed group element is a loop automorphism.
        let auts: Vec<LoopAutomorphism> = g
            .elements()
            .map(|h| {
                let images: Vec<usize> = (0..l.size())
                    .map(|p| l.position_of(g.conj(l.ambient_of(p), h)).unwrap())
                    .collect();
                LoopAutomorphism::new(&l, images).unwrap()
            })
            .collect();
        let report = l.verify_precession_identities(&auts);
        assert!(report.all_pass(), "{report:?}");

        // A nontrivial precession exists.
        let nontrivial = (0..l.size())
            .any(|a| (0..l.size()).any(|b| !l.precession(a, b).is_identity()));
        assert!(nontrivial);
    }

    #[test]
    fn precession_group_sizes() {
        let abelian = KLoop::from_twisted(&cyclic(7), &whole(&cyclic(7))).unwrap();
        assert_eq!(abelian.precession_group().unwrap().len(), 1);

        let g = f7_c3();
        let l = KLoop::from_twisted(&g, &whole(&g)).unwrap();
        let d = l.precession_group().unwrap();
        assert!(d.len() > 1);
        // Every precession is conjugation by a kernel element, so the closure
        // stays within the 7 kernel conjugations.
        assert_eq!(d.len(), 7);

        assert_eq!(
            l.precession_group_bounded(3).unwrap_err().code(),
            "E_TOO_LARGE"
        );
    }

    #[test]
    fn loop_from_s3_translates_is_trivially_precessive() {
        let s3 = FiniteGroup::from_permutation_generators(3, &[vec![1, 2, 0], vec![1, 0, 2]])
            .unwrap();
        let q = s3.involutions();
        let i = q[0];
        let mut iq: Vec<usize> = q.iter().map(|&x| s3.mul(i, x)).collect();
        iq.sort_unstable();
        let l = KLoop::from_twisted(&s3, &iq).unwrap();
        assert_eq!(l.precession_group().unwrap().len(), 1);
    }
}
