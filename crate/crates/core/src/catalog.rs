//! Built-in group families: abelian-by-inversion extensions, one-dimensional
//! affine groups over small fields, odd Frobenius semidirect products, and
//! the order-9 Dickson near-field group, plus the sharply 2-transitive
//! predicates that feed the geometry suites.

mod tables;

use crate::error::{Error, Result};
use crate::frobenius::FrobeniusPair;
use crate::geometry::Geometry;
use crate::group::{FiniteGroup, Subgroup};
use crate::report::AxiomReport;

use tables::{fnv1a, F27_ADD, F27_ADD_FNV, F27_MUL, F27_MUL_FNV, F9_ADD, F9_ADD_FNV, F9_MUL,
             F9_MUL_FNV, J9_MUL, J9_MUL_FNV};

const SUPPORTED_PRIMES: [u64; 24] = [
    3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97,
];

fn verify_embedded_tables() {
    assert_eq!(fnv1a(&F9_ADD), F9_ADD_FNV, "order-9 addition table corrupted");
    assert_eq!(fnv1a(&F9_MUL), F9_MUL_FNV, "order-9 multiplication table corrupted");
    assert_eq!(fnv1a(&F27_ADD), F27_ADD_FNV, "order-27 addition table corrupted");
    assert_eq!(fnv1a(&F27_MUL), F27_MUL_FNV, "order-27 multiplication table corrupted");
    assert_eq!(fnv1a(&J9_MUL), J9_MUL_FNV, "near-field table corrupted");
}

/// The cyclic group of order `n`.
pub fn cyclic(n: usize) -> FiniteGroup {
    let table: Vec<Vec<usize>> = (0..n)
        .map(|a| (0..n).map(|b| (a + b) % n).collect())
        .collect();
    FiniteGroup::from_cayley_table(&table).expect("modular addition is a group")
}

/// Direct product of cyclic groups, mixed-radix encoded.
pub fn abelian(orders: &[usize]) -> FiniteGroup {
    let total: usize = orders.iter().product::<usize>().max(1);
    let decode = |mut x: usize| -> Vec<usize> {
        orders
            .iter()
            .map(|&m| {
                let c = x % m;
                x /= m;
                c
            })
            .collect()
    };
    let encode = |cs: &[usize]| -> usize {
        let mut x = 0;
        for (&c, &m) in cs.iter().zip(orders).rev() {
            x = x * m + c;
        }
        x
    };
    let table: Vec<Vec<usize>> = (0..total)
        .map(|a| {
            let ca = decode(a);
            (0..total)
                .map(|b| {
                    let cb = decode(b);
                    let sum: Vec<usize> = ca
                        .iter()
                        .zip(&cb)
                        .zip(orders)
                        .map(|((&x, &y), &m)| (x + y) % m)
                        .collect();
                    encode(&sum)
                })
                .collect()
        })
        .collect();
    FiniteGroup::from_cayley_table(&table).expect("componentwise addition is a group")
}

/// `A x| <eps>` for an odd abelian `A`, with `eps` acting by inversion.
/// Elements are encoded as `2 a + s` so the identity is index 0.
pub fn abelian_inversion_extension(orders: &[usize]) -> Result<FiniteGroup> {
    if let Some(&even) = orders.iter().find(|&&m| m % 2 == 0 || m == 0) {
        return Err(Error::EvenOrder {
            reason: format!("cycle order {even} is not odd"),
        });
    }
    let a = abelian(orders);
    let n = a.order();
    let table: Vec<Vec<usize>> = (0..2 * n)
        .map(|x| {
            let (ax, sx) = (x / 2, x % 2);
            (0..2 * n)
                .map(|y| {
                    let (ay, sy) = (y / 2, y % 2);
                    let moved = if sx == 0 { ay } else { a.inv(ay) };
                    2 * a.mul(ax, moved) + (sx + sy) % 2
                })
                .collect()
        })
        .collect();
    FiniteGroup::from_cayley_table(&table)
}

/// A finite group together with a faithful permutation action.
#[derive(Debug, Clone)]
pub struct ActionGroup {
    group: FiniteGroup,
}

impl ActionGroup {
    pub fn new(group: FiniteGroup) -> Result<Self> {
        let rep = group.perm_rep().ok_or_else(|| Error::BadParams {
            reason: "the group carries no permutation representation".into(),
        })?;
        // Faithful: distinct elements act distinctly.
        let mut seen = std::collections::HashSet::new();
        for e in group.elements() {
            if !seen.insert(rep.perm(e)) {
                return Err(Error::BadParams {
                    reason: "the action is not faithful".into(),
                });
            }
        }
        // Homomorphism against a generating set extends to all products.
        let gens = group.generating_set().to_vec();
        for &g in &gens {
            for h in group.elements() {
                let gh = group.mul(g, h);
                for pt in 0..rep.degree() {
                    if rep.apply(gh, pt) != rep.apply(g, rep.apply(h, pt)) {
                        return Err(Error::BadParams {
                            reason: format!("the action is not a homomorphism at ({g}, {h})"),
                        });
                    }
                }
            }
        }
        Ok(ActionGroup { group })
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn degree(&self) -> usize {
        self.group.perm_rep().expect("validated at construction").degree()
    }

    pub fn apply(&self, element: usize, point: usize) -> usize {
        self.group.perm_rep().expect("validated").apply(element, point)
    }

    pub fn stabilizer(&self, point: usize) -> Subgroup {
        let members = self
            .group
            .elements()
            .filter(|&e| self.apply(e, point) == point)
            .collect();
        Subgroup::new(self.group.clone(), members).expect("stabilizers are subgroups")
    }

    /// Regular on ordered pairs of distinct points.
    pub fn is_sharply_2_transitive(&self) -> bool {
        let n = self.degree();
        if n < 2 || self.group.order() != n * (n - 1) {
            return false;
        }
        let mut seen = vec![false; n * n];
        for e in self.group.elements() {
            seen[self.apply(e, 0) * n + self.apply(e, 1)] = true;
        }
        (0..n).all(|x| (0..n).all(|y| x == y || seen[x * n + y]))
    }

    /// 2 when involutions are fixed-point-free, otherwise the common order
    /// of the nontrivial translations.
    pub fn permutation_characteristic(&self) -> Result<usize> {
        if !self.is_sharply_2_transitive() {
            return Err(Error::BadParams {
                reason: "characteristic is defined for sharply 2-transitive actions".into(),
            });
        }
        let n = self.degree();
        let involutions = self.group.involutions();
        let fixed_point_free = involutions
            .iter()
            .all(|&i| (0..n).all(|pt| self.apply(i, pt) != pt));
        if fixed_point_free {
            return Ok(2);
        }
        let mut orders: Vec<usize> = Vec::new();
        for &i in &involutions {
            for &j in &involutions {
                if i != j {
                    orders.push(self.group.element_order(self.group.mul(i, j)));
                }
            }
        }
        orders.sort_unstable();
        orders.dedup();
        match orders.as_slice() {
            [p] => Ok(*p),
            _ => Err(Error::InconsistentChar { orders }),
        }
    }

    /// The four equivalent commutation conditions, their agreement, the
    /// closed line formula, the full axiom suite on the induced geometry,
    /// and the splitting biconditional.
    pub fn verify_geometry_conditions(&self) -> Result<AxiomReport> {
        if !self.is_sharply_2_transitive() {
            return Err(Error::BadParams {
                reason: "the geometry conditions need a sharply 2-transitive action".into(),
            });
        }
        let ch = self.permutation_characteristic()?;
        if ch == 2 {
            return Err(Error::BadParams {
                reason: "the geometry conditions need characteristic different from 2".into(),
            });
        }
        let g = &self.group;
        let j = g.involutions();
        let j2 = crate::geometry::set_products(g, &j, &j);
        let j2_star: Vec<usize> = j2.iter().copied().filter(|&x| x != 0).collect();
        let mut report = AxiomReport::new();

        // a) commuting is transitive on the nontrivial products.
        let commute = |x: usize, y: usize| g.mul(x, y) == g.mul(y, x);
        let mut cond_a = true;
        'a: for &s in &j2_star {
            for &t in &j2_star {
                if !commute(s, t) {
                    continue;
                }
                for &r in &j2_star {
                    if commute(t, r) && !commute(s, r) {
                        cond_a = false;
                        break 'a;
                    }
                }
            }
        }
        report.record(
            "s2t_a_commuting_transitive",
            cond_a,
            vec![],
            "commuting is transitive on nontrivial translations",
        );

        // b) iJ cap kJ is uniquely 2-divisible for distinct involutions.
        let i_j = |i: usize| -> Vec<usize> {
            let mut out: Vec<usize> = j.iter().map(|&x| g.mul(i, x)).collect();
            out.sort_unstable();
            out
        };
        let mut cond_b = true;
        'b: for (ai, &i) in j.iter().enumerate() {
            let iset = i_j(i);
            for &k in &j[ai + 1..] {
                let kset = i_j(k);
                let meet: Vec<usize> = iset
                    .iter()
                    .copied()
                    .filter(|x| kset.binary_search(x).is_ok())
                    .collect();
                if !g.is_uniquely_2_divisible(&meet) {
                    cond_b = false;
                    break 'b;
                }
            }
        }
        report.record(
            "s2t_b_intersections_u2d",
            cond_b,
            vec![],
            "iJ cap kJ is uniquely 2-divisible for all distinct pairs",
        );

        // c) Cen(ik) = iJ cap kJ, abelian, inverted by k.
        let mut cond_c = true;
        'c: for (ai, &i) in j.iter().enumerate() {
            let iset = i_j(i);
            for &k in &j[ai + 1..] {
                let kset = i_j(k);
                let meet: Vec<usize> = iset
                    .iter()
                    .copied()
                    .filter(|x| kset.binary_search(x).is_ok())
                    .collect();
                let cen = g.centralizer(&[g.mul(i, k)]);
                let inverted = cen.members().iter().all(|&x| g.conj(x, k) == g.inv(x));
                if cen.members() != meet || !cen.is_abelian() || !inverted {
                    cond_c = false;
                    break 'c;
                }
            }
        }
        report.record(
            "s2t_c_centralizer_form",
            cond_c,
            vec![],
            "Cen(ik) equals iJ cap kJ, is abelian, and is inverted by k",
        );

        // d) punctured centralizers partition the nontrivial translations.
        let mut families: Vec<Vec<usize>> = j2_star
            .iter()
            .map(|&s| {
                g.centralizer(&[s])
                    .members()
                    .iter()
                    .copied()
                    .filter(|&x| x != 0 && j2.binary_search(&x).is_ok())
                    .collect()
            })
            .collect();
        families.sort();
        families.dedup();
        let covered: usize = families.iter().map(|f| f.len()).sum();
        let mut union: Vec<usize> = families.concat();
        union.sort_unstable();
        union.dedup();
        let cond_d = covered == union.len() && union == j2_star;
        report.record(
            "s2t_d_partition",
            cond_d,
            vec![],
            format!("{} centralizer families partition the translations", families.len()),
        );

        let conditions = [cond_a, cond_b, cond_c, cond_d];
        let agree = conditions.iter().all(|&c| c == conditions[0]);
        report.record(
            "s2t_agreement",
            agree,
            conditions.iter().map(|&c| c as usize).collect(),
            if agree {
                format!("all four conditions evaluate to {}", conditions[0])
            } else {
                format!("conditions disagree: {conditions:?} (implementation fault)")
            },
        );

        // Closed line formula and the induced reflection space.
        if conditions.iter().all(|&c| c) {
            let geo = Geometry::complete_on_class(g.clone(), j.clone())?;
            let mut formula_ok = true;
            'formula: for (ai, &i) in j.iter().enumerate() {
                for &k in &j[ai + 1..] {
                    let line = geo.line_through(i, k)?.members().to_vec();
                    let ik = g.mul(i, k);
                    let mut translate: Vec<usize> = g
                        .centralizer(&[ik])
                        .members()
                        .iter()
                        .map(|&c| g.mul(i, c))
                        .collect();
                    translate.sort_unstable();
                    let by_inversion: Vec<usize> = j
                        .iter()
                        .copied()
                        .filter(|&m| g.conj(ik, m) == g.mul(k, i))
                        .collect();
                    if line != translate || line != by_inversion {
                        formula_ok = false;
                        break 'formula;
                    }
                }
            }
            report.record(
                "s2t_line_formula",
                formula_ok,
                vec![],
                "lines equal i Cen(ij) and the inversion form",
            );

            let (_, mhrs) = geo.verify_mhrs();
            report.merge(mhrs);
        }

        // Splitting biconditional: the translations form a subgroup exactly
        // when a regular normal subgroup (the fixed-point-free elements with
        // 1) exists.
        let translations_subgroup = g.is_subgroup_set(&j2);
        let n = self.degree();
        let mut fpf: Vec<usize> = g
            .elements()
            .filter(|&e| e == 0 || (0..n).all(|pt| self.apply(e, pt) != pt))
            .collect();
        fpf.sort_unstable();
        let split = g.is_subgroup_set(&fpf);
        report.record(
            "neumann_translations_subgroup",
            translations_subgroup,
            vec![],
            "the translation set closes under products",
        );
        report.record(
            "neumann_split",
            split,
            vec![],
            format!("fixed-point-free elements with 1 form a subgroup of order {}", fpf.len()),
        );
        report.record(
            "neumann_biconditional",
            translations_subgroup == split,
            vec![translations_subgroup as usize, split as usize],
            "splitting holds exactly when the translations form a subgroup",
        );

        Ok(report.finish())
    }
}

fn find_unit_of_order(p: u64, d: u64) -> Option<u64> {
    // Any element of multiplicative order exactly d mod p.
    (2..p).find(|&u| {
        let mut acc = 1u64;
        let mut ord = 0u64;
        loop {
            acc = acc * u % p;
            ord += 1;
            if acc == 1 {
                break;
            }
        }
        ord == d
    })
}

/// The affine group `x -> a x + b` over the field of order `q`, acting on
/// `q` points. Built-in orders: odd primes up to 97, plus 9 and 27.
pub fn agl1(q: u64) -> Result<ActionGroup> {
    verify_embedded_tables();
    if SUPPORTED_PRIMES.contains(&q) {
        let p = q as usize;
        let translation: Vec<usize> = (0..p).map(|x| (x + 1) % p).collect();
        let gen = find_unit_of_order(q, q - 1).expect("prime fields have primitive roots");
        let scaling: Vec<usize> = (0..p).map(|x| (x * gen as usize) % p).collect();
        let group = FiniteGroup::from_permutation_generators(p, &[translation, scaling])?;
        assert_eq!(group.order(), p * (p - 1));
        return ActionGroup::new(group);
    }
    let (add, mul): (Vec<Vec<usize>>, Vec<Vec<usize>>) = match q {
        9 => (
            F9_ADD.iter().map(|r| r.iter().map(|&v| v as usize).collect()).collect(),
            F9_MUL.iter().map(|r| r.iter().map(|&v| v as usize).collect()).collect(),
        ),
        27 => (
            F27_ADD.iter().map(|r| r.iter().map(|&v| v as usize).collect()).collect(),
            F27_MUL.iter().map(|r| r.iter().map(|&v| v as usize).collect()).collect(),
        ),
        _ => return Err(Error::UnsupportedQ { q }),
    };
    let n = add.len();
    let translation: Vec<usize> = (0..n).map(|x| add[x][1]).collect();
    let gen = (1..n)
        .find(|&u| {
            let mut acc = 1usize;
            let mut ord = 0usize;
            loop {
                acc = mul[acc][u];
                ord += 1;
                if acc == 1 {
                    break;
                }
            }
            ord == n - 1
        })
        .expect("field unit groups are cyclic");
    let scaling: Vec<usize> = (0..n).map(|x| mul[gen][x]).collect();
    let group = FiniteGroup::from_permutation_generators(n, &[translation, scaling])?;
    assert_eq!(group.order(), n * (n - 1));
    ActionGroup::new(group)
}

/// `F_p x| C_d` for an odd prime `p` and an odd divisor `d > 1` of `p - 1`:
/// a uniquely 2-divisible Frobenius pair with abelian complement.
pub fn frobenius_semidirect(p: u64, d: u64) -> Result<FrobeniusPair> {
    let prime = p >= 3 && (2..p).all(|k| k * k > p || p % k != 0);
    if !prime || d < 2 || d % 2 == 0 || (p - 1) % d != 0 {
        return Err(Error::BadParams {
            reason: format!("need an odd prime p and an odd divisor d > 1 of p - 1, got ({p}, {d})"),
        });
    }
    let n = p as usize;
    let u = find_unit_of_order(p, d).expect("the unit group mod p is cyclic") as usize;
    let translation: Vec<usize> = (0..n).map(|x| (x + 1) % n).collect();
    let scaling: Vec<usize> = (0..n).map(|x| x * u % n).collect();
    let group = FiniteGroup::from_permutation_generators(n, &[translation, scaling])?;
    assert_eq!(group.order(), n * d as usize);
    let action = ActionGroup::new(group.clone())?;
    FrobeniusPair::new(group, action.stabilizer(0))
}

/// The sharply 2-transitive group of the order-9 Dickson near-field,
/// acting on 9 points: all maps `x -> x * a + b` with the twisted product.
pub fn nearfield_j9_group() -> ActionGroup {
    verify_embedded_tables();
    let add = &F9_ADD;
    let nf = &J9_MUL;
    let mut gens: Vec<Vec<usize>> = vec![(0..9).map(|x| add[x][1] as usize).collect()];
    for a in 1..9 {
        gens.push((0..9).map(|x| nf[x][a] as usize).collect());
    }
    let group = FiniteGroup::from_permutation_generators(9, &gens)
        .expect("near-field affine maps close under composition");
    assert_eq!(group.order(), 72);
    ActionGroup::new(group).expect("the action is faithful by construction")
}

/// A catalog entry: a bare group, a permutation group, or a Frobenius pair.
#[derive(Debug)]
pub enum CatalogEntry {
    Group(FiniteGroup),
    Action(ActionGroup),
    Pair(FrobeniusPair),
}

impl CatalogEntry {
    pub fn group(&self) -> &FiniteGroup {
        match self {
            CatalogEntry::Group(g) => g,
            CatalogEntry::Action(a) => a.group(),
            CatalogEntry::Pair(p) => p.group(),
        }
    }
}

/// Parse a catalog name: `cyclic_ext(n)`, `elemab_ext(p,k)`, `agl1(q)`,
/// `frob(p,d)`, or `j9`.
pub fn build_entry(name: &str) -> Result<CatalogEntry> {
    let name = name.trim();
    if name == "j9" {
        return Ok(CatalogEntry::Action(nearfield_j9_group()));
    }
    let (head, args) = match name.strip_suffix(')').and_then(|s| s.split_once('(')) {
        Some((head, args)) => (head, args),
        None => {
            return Err(Error::BadParams {
                reason: format!("unknown catalog name: {name}"),
            })
        }
    };
    let nums: Vec<u64> = args
        .split(',')
        .map(|s| s.trim().parse::<u64>())
        .collect::<std::result::Result<_, _>>()
        .map_err(|_| Error::BadParams {
            reason: format!("catalog arguments must be integers: {name}"),
        })?;
    match (head, nums.as_slice()) {
        ("cyclic_ext", [n]) => Ok(CatalogEntry::Group(abelian_inversion_extension(&[
            *n as usize
        ])?)),
        ("elemab_ext", [p, k]) => {
            let orders = vec![*p as usize; *k as usize];
            Ok(CatalogEntry::Group(abelian_inversion_extension(&orders)?))
        }
        ("agl1", [q]) => Ok(CatalogEntry::Action(agl1(*q)?)),
        ("frob", [p, d]) => Ok(CatalogEntry::Pair(frobenius_semidirect(*p, *d)?)),
        _ => Err(Error::BadParams {
            reason: format!("unknown catalog name: {name}"),
        }),
    }
}

/// The default verification corpus, in sweep order.
pub fn default_corpus() -> Vec<&'static str> {
    vec![
        "cyclic_ext(3)",
        "elemab_ext(3,2)",
        "agl1(5)",
        "agl1(7)",
        "agl1(9)",
        "j9",
        "frob(7,3)",
        "frob(13,3)",
    ]
}

#[cfg(test)]
mod catalog_tests {
    use super::*;

    #[test]
    fn inversion_extensions() {
        let s3 = abelian_inversion_extension(&[3]).unwrap();
        assert_eq!(s3.order(), 6);
        assert_eq!(s3.involutions().len(), 3);
        // The unique nonabelian group of order 6.
        let all: Vec<usize> = s3.elements().collect();
        assert!(!s3.is_abelian_set(&all));

        let c2 = abelian_inversion_extension(&[1]).unwrap();
        assert_eq!(c2.order(), 2);

        let g18 = abelian_inversion_extension(&[3, 3]).unwrap();
        assert_eq!(g18.order(), 18);
        assert_eq!(g18.involutions().len(), 9);

        assert_eq!(
            abelian_inversion_extension(&[4]).unwrap_err().code(),
            "E_EVEN_ORDER"
        );
    }

    #[test]
    fn agl1_small_orders() {
        let a5 = agl1(5).unwrap();
        assert_eq!(a5.group().order(), 20);
        assert_eq!(a5.group().involutions().len(), 5);

        let a3 = agl1(3).unwrap();
        assert_eq!(a3.group().order(), 6);

        let a7 = agl1(7).unwrap();
        assert_eq!(a7.group().order(), 42);

        let a9 = agl1(9).unwrap();
        assert_eq!(a9.group().order(), 72);
        assert_eq!(a9.group().involutions().len(), 9);

        assert_eq!(agl1(8).unwrap_err().code(), "E_UNSUPPORTED_Q");
        assert_eq!(agl1(2).unwrap_err().code(), "E_UNSUPPORTED_Q");
    }

    #[test]
    fn frobenius_constructors() {
        let pair = frobenius_semidirect(7, 3).unwrap();
        assert_eq!(pair.group().order(), 21);
        let pair = frobenius_semidirect(13, 3).unwrap();
        assert_eq!(pair.group().order(), 39);
        let pair = frobenius_semidirect(31, 5).unwrap();
        assert_eq!(pair.group().order(), 155);
        assert_eq!(
            frobenius_semidirect(7, 2).unwrap_err().code(),
            "E_BAD_PARAMS"
        );
        assert_eq!(
            frobenius_semidirect(9, 3).unwrap_err().code(),
            "E_BAD_PARAMS"
        );
    }

    #[test]
    fn j9_structure() {
        let j9 = nearfield_j9_group();
        assert_eq!(j9.group().order(), 72);
        assert_eq!(j9.group().involutions().len(), 9);
        assert!(j9.is_sharply_2_transitive());

        // The point stabilizer is quaternion: nonabelian, no element of
        // order 8, a unique involution. That separates it from agl1(9).
        let stab = j9.stabilizer(0);
        assert_eq!(stab.order(), 8);
        assert!(!stab.is_abelian());
        let orders: Vec<usize> = stab
            .members()
            .iter()
            .map(|&x| j9.group().element_order(x))
            .collect();
        assert!(!orders.contains(&8));
        assert_eq!(orders.iter().filter(|&&o| o == 2).count(), 1);

        let agl9 = agl1(9).unwrap();
        assert!(agl9.stabilizer(0).is_abelian());
    }

    #[test]
    fn sharp_2_transitivity() {
        assert!(agl1(5).unwrap().is_sharply_2_transitive());
        // S3 acting on 3 points is AGL over the 3-element field.
        assert!(agl1(3).unwrap().is_sharply_2_transitive());
        // A regular action of C4 is transitive but not 2-transitive.
        let c4 = FiniteGroup::from_permutation_generators(4, &[vec![1, 2, 3, 0]]).unwrap();
        let action = ActionGroup::new(c4).unwrap();
        assert!(!action.is_sharply_2_transitive());
    }

    #[test]
    fn characteristics() {
        assert_eq!(agl1(5).unwrap().permutation_characteristic().unwrap(), 5);
        assert_eq!(agl1(7).unwrap().permutation_characteristic().unwrap(), 7);
        assert_eq!(agl1(9).unwrap().permutation_characteristic().unwrap(), 3);
        assert_eq!(nearfield_j9_group().permutation_characteristic().unwrap(), 3);
    }

    #[test]
    fn geometry_conditions_on_small_fields() {
        for action in [agl1(5).unwrap(), agl1(7).unwrap(), nearfield_j9_group()] {
            let report = action.verify_geometry_conditions().unwrap();
            assert!(report.all_pass(), "{report:?}");
            assert_eq!(report.stats.as_ref().unwrap().lines, 1);
        }
    }

    #[test]
    fn catalog_names_parse() {
        assert_eq!(build_entry("cyclic_ext(3)").unwrap().group().order(), 6);
        assert_eq!(build_entry("elemab_ext(3,2)").unwrap().group().order(), 18);
        assert_eq!(build_entry("agl1(5)").unwrap().group().order(), 20);
        assert_eq!(build_entry("frob(7,3)").unwrap().group().order(), 21);
        assert_eq!(build_entry("j9").unwrap().group().order(), 72);
        assert!(build_entry("nope(1)").is_err());
        assert!(build_entry("agl1(five)").is_err());
    }
}
