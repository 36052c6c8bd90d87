//! The group catalog: presentations of K0(BG) = R(G) with augmentation,
//! augmentation-ideal generators, restriction maps, Adams operations and the
//! regular representation.

use crate::error::{AstkError, Result};
use crate::finite_group::FiniteGroupData;
use crate::groebner::IdealGens;
use crate::monomial::Monomial;
use crate::poly::{CoeffDomain, LaurentPoly, PolyRing, RingMode};
use crate::ratio::{binomial, rat_int, Rat};
use num::traits::{One, Zero};
use std::fmt;
use std::sync::Arc;

#[derive(Clone, Debug)]
pub enum GroupSpec {
    SplitTorus(usize),
    GL(usize),
    SL2,
    Mu(u64),
    Finite(Arc<FiniteGroupData>),
    Product(Vec<GroupSpec>),
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::SplitTorus(1) => write!(f, "Gm"),
            GroupSpec::SplitTorus(r) => write!(f, "T{r}"),
            GroupSpec::GL(n) => write!(f, "GL{n}"),
            GroupSpec::SL2 => write!(f, "SL2"),
            GroupSpec::Mu(n) => write!(f, "mu{n}"),
            GroupSpec::Finite(g) => write!(f, "{}", g.name),
            GroupSpec::Product(gs) => {
                let names: Vec<String> = gs.iter().map(|g| g.to_string()).collect();
                write!(f, "{}", names.join("x"))
            }
        }
    }
}

impl GroupSpec {
    /// Catalog names accepted on the command line; group files are handled
    /// by the caller.
    pub fn parse(s: &str) -> Result<GroupSpec> {
        let s = s.trim();
        let lower = s.to_ascii_lowercase();
        if lower == "gm" {
            return Ok(GroupSpec::SplitTorus(1));
        }
        if lower == "sl2" {
            return Ok(GroupSpec::SL2);
        }
        if lower == "trivial" {
            return Ok(GroupSpec::Mu(1));
        }
        if lower == "s3" {
            return Ok(GroupSpec::Finite(Arc::new(FiniteGroupData::load_str(
                crate::fixtures::S3_JSON,
            )?)));
        }
        if lower == "c2" {
            return Ok(GroupSpec::Finite(Arc::new(FiniteGroupData::load_str(
                crate::fixtures::C2_JSON,
            )?)));
        }
        if let Some(rest) = lower.strip_prefix("mu") {
            if let Ok(n) = rest.parse::<u64>() {
                if n >= 1 {
                    return Ok(GroupSpec::Mu(n));
                }
            }
        }
        if let Some(rest) = lower.strip_prefix("gl") {
            if let Ok(n) = rest.parse::<usize>() {
                if n >= 1 {
                    return Ok(GroupSpec::GL(n));
                }
            }
        }
        if let Some(rest) = lower.strip_prefix("t") {
            if let Ok(r) = rest.parse::<usize>() {
                if r >= 1 {
                    return Ok(GroupSpec::SplitTorus(r));
                }
            }
        }
        Err(AstkError::Unsupported(format!(
            "unknown group spec {s:?} (expected gm, t<r>, gl<n>, sl2, mu<n>, s3, c2, trivial, or a group file)"
        )))
    }

    /// Nice groups: extensions of a finite group by a torus. In the catalog
    /// these are tori, mu_n, finite groups and their products.
    pub fn is_nice(&self) -> bool {
        match self {
            GroupSpec::SplitTorus(_) | GroupSpec::Mu(_) | GroupSpec::Finite(_) => true,
            GroupSpec::Product(gs) => gs.iter().all(|g| g.is_nice()),
            GroupSpec::GL(_) | GroupSpec::SL2 => false,
        }
    }
}

/// The carrier of a representation-ring presentation.
#[derive(Clone, Debug)]
pub enum RepModel {
    /// Group ring of a diagonalizable group: Laurent variables for free
    /// characters, torsion variables with t^n = 1 (exponents kept in [0, n)).
    Diagonalizable { ring: Arc<PolyRing>, torsion: Vec<Option<u64>> },
    /// GL(n): symmetric Laurent polynomials in the eigenvalue variables,
    /// Weyl group S_n permuting them; distinguished generators e_1..e_n.
    SymmetricLaurent { ring: Arc<PolyRing>, n: usize },
    /// SL2: Z[c], c the class of the standard 2-dimensional representation.
    PolyClass { ring: Arc<PolyRing> },
    /// Finite group: free module on the irreducible characters.
    FiniteFree { group: Arc<FiniteGroupData> },
}

#[derive(Clone, Debug)]
pub struct RepRingPresentation {
    pub group: GroupSpec,
    pub model: RepModel,
}

#[derive(Clone, Debug, PartialEq)]
pub enum RepValue {
    Poly(LaurentPoly),
    CharVec(Vec<Rat>),
}

#[derive(Clone, Debug)]
pub struct RepElement {
    pub presentation: Arc<RepRingPresentation>,
    pub value: RepValue,
}

impl RepModel {
    pub fn ring(&self) -> Option<&Arc<PolyRing>> {
        match self {
            RepModel::Diagonalizable { ring, .. }
            | RepModel::SymmetricLaurent { ring, .. }
            | RepModel::PolyClass { ring } => Some(ring),
            RepModel::FiniteFree { .. } => None,
        }
    }

    pub fn weyl_description(&self) -> &'static str {
        match self {
            RepModel::Diagonalizable { .. } => "trivial",
            RepModel::SymmetricLaurent { .. } => "symmetric group permuting the eigenvalue variables",
            RepModel::PolyClass { .. } => "order-2 group inverting the torus coordinate",
            RepModel::FiniteFree { .. } => "none (character basis)",
        }
    }

    /// Normal form: reduce torsion exponents into [0, n).
    pub fn reduce(&self, p: &LaurentPoly) -> LaurentPoly {
        match self {
            RepModel::Diagonalizable { ring, torsion } => {
                let terms = p.terms().map(|(m, c)| {
                    let e: Vec<i64> = m
                        .0
                        .iter()
                        .zip(torsion)
                        .map(|(&e, t)| match t {
                            Some(n) => e.rem_euclid(*n as i64),
                            None => e,
                        })
                        .collect();
                    (Monomial(e), c.clone())
                });
                LaurentPoly::from_terms(ring, terms).expect("torsion reduction")
            }
            _ => p.clone(),
        }
    }

    /// Torsion relations t_i^{n_i} - 1 in the carrier, when present.
    pub fn modulus_gens(&self) -> Vec<LaurentPoly> {
        match self {
            RepModel::Diagonalizable { ring, torsion } => torsion
                .iter()
                .enumerate()
                .filter_map(|(i, t)| {
                    t.map(|n| {
                        LaurentPoly::monomial(ring, Monomial::var(ring.nvars(), i).pow(n as i64), Rat::one())
                            .sub(&LaurentPoly::one(ring))
                    })
                })
                .collect(),
            _ => Vec::new(),
        }
    }
}

/// Elementary symmetric polynomial e_i(t_1..t_n) in the given ring.
pub fn elementary_symmetric(ring: &Arc<PolyRing>, n: usize, i: usize) -> LaurentPoly {
    assert!(i >= 1 && i <= n && ring.nvars() >= n);
    let mut acc = LaurentPoly::zero(ring);
    // Iterate over i-subsets of {0..n}.
    let mut idx: Vec<usize> = (0..i).collect();
    loop {
        let mut e = vec![0i64; ring.nvars()];
        for &j in &idx {
            e[j] = 1;
        }
        acc = acc.add(&LaurentPoly::monomial(ring, Monomial(e), Rat::one()));
        // Next subset.
        let mut k = i;
        loop {
            if k == 0 {
                return acc;
            }
            k -= 1;
            if idx[k] != k + n - i {
                idx[k] += 1;
                for j in (k + 1)..i {
                    idx[j] = idx[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// Invariance under all adjacent transpositions of the first n variables
/// (they generate the symmetric group).
pub fn is_symmetric(p: &LaurentPoly, n: usize) -> bool {
    let nv = p.ring().nvars();
    for i in 0..n.saturating_sub(1) {
        let mut perm: Vec<usize> = (0..nv).collect();
        perm.swap(i, i + 1);
        if p.permute_vars(&perm) != *p {
            return false;
        }
    }
    true
}

/// Dickson-style polynomial expressing x^l + x^{-l} in c = x + x^{-1}:
/// p_0 = 2, p_1 = c, p_l = c p_{l-1} - p_{l-2}.
pub fn power_sum_in_c(ring: &Arc<PolyRing>, l: u64) -> LaurentPoly {
    let c = LaurentPoly::var(ring, 0);
    let mut p0 = LaurentPoly::constant(ring, rat_int(2));
    let mut p1 = c.clone();
    if l == 0 {
        return p0;
    }
    for _ in 1..l {
        let next = c.mul(&p1).sub(&p0);
        p0 = p1;
        p1 = next;
    }
    p1
}

pub fn rep_ring(g: &GroupSpec) -> Result<Arc<RepRingPresentation>> {
    let model = build_model(g)?;
    Ok(Arc::new(RepRingPresentation { group: g.clone(), model }))
}

fn build_model(g: &GroupSpec) -> Result<RepModel> {
    match g {
        GroupSpec::SplitTorus(r) => {
            let names: Vec<String> = (1..=*r).map(|i| format!("x{i}")).collect();
            let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
            Ok(RepModel::Diagonalizable {
                ring: PolyRing::laurent_z(&refs),
                torsion: vec![None; *r],
            })
        }
        GroupSpec::Mu(n) => Ok(RepModel::Diagonalizable {
            ring: Arc::new(PolyRing {
                variables: vec!["t".into()],
                coeffs: CoeffDomain::Z,
                mode: RingMode::Poly,
            }),
            torsion: vec![Some(*n)],
        }),
        GroupSpec::GL(n) => {
            let names: Vec<String> = (1..=*n).map(|i| format!("t{i}")).collect();
            let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
            Ok(RepModel::SymmetricLaurent { ring: PolyRing::laurent_z(&refs), n: *n })
        }
        GroupSpec::SL2 => Ok(RepModel::PolyClass {
            ring: Arc::new(PolyRing {
                variables: vec!["c".into()],
                coeffs: CoeffDomain::Z,
                mode: RingMode::Poly,
            }),
        }),
        GroupSpec::Finite(data) => {
            if data.characters.iter().any(|r| r.values.iter().any(|v| !v.denom().is_one())) {
                // Rational character tables only; values are rational by
                // schema, so only integrality of denominators is in question.
            }
            Ok(RepModel::FiniteFree { group: data.clone() })
        }
        GroupSpec::Product(gs) => {
            if gs.is_empty() {
                return Err(AstkError::Unsupported("empty product".into()));
            }
            if gs.iter().all(|g| matches!(g, GroupSpec::SplitTorus(_) | GroupSpec::Mu(_))) {
                // Merge diagonalizable factors into one group ring.
                let mut names = Vec::new();
                let mut torsion = Vec::new();
                let mut ti = 0usize;
                let mut xi = 0usize;
                for g in gs {
                    match g {
                        GroupSpec::SplitTorus(r) => {
                            for _ in 0..*r {
                                xi += 1;
                                names.push(format!("x{xi}"));
                                torsion.push(None);
                            }
                        }
                        GroupSpec::Mu(n) => {
                            ti += 1;
                            names.push(format!("t{ti}"));
                            torsion.push(Some(*n));
                        }
                        _ => unreachable!(),
                    }
                }
                let mode = if torsion.iter().any(|t| t.is_none()) {
                    RingMode::Laurent
                } else {
                    RingMode::Poly
                };
                Ok(RepModel::Diagonalizable {
                    ring: Arc::new(PolyRing { variables: names, coeffs: CoeffDomain::Z, mode }),
                    torsion,
                })
            } else if gs.iter().all(|g| matches!(g, GroupSpec::Finite(_))) {
                let mut iter = gs.iter();
                let first = match iter.next().unwrap() {
                    GroupSpec::Finite(d) => (**d).clone(),
                    _ => unreachable!(),
                };
                let mut acc = first;
                for g in iter {
                    let GroupSpec::Finite(d) = g else { unreachable!() };
                    acc = FiniteGroupData::product(&acc, d)?;
                }
                Ok(RepModel::FiniteFree { group: Arc::new(acc) })
            } else {
                Err(AstkError::Unsupported(
                    "products are supported for diagonalizable factors or finite factors, not mixed"
                        .into(),
                ))
            }
        }
    }
}

impl RepRingPresentation {
    pub fn one(self: &Arc<Self>) -> RepElement {
        match &self.model {
            RepModel::FiniteFree { group } => {
                let mut v = vec![Rat::zero(); group.num_classes()];
                v[group.trivial_char] = Rat::one();
                RepElement { presentation: self.clone(), value: RepValue::CharVec(v) }
            }
            m => {
                let ring = m.ring().unwrap();
                RepElement {
                    presentation: self.clone(),
                    value: RepValue::Poly(LaurentPoly::one(ring)),
                }
            }
        }
    }

    /// Wrap a polynomial as an element, validating the model invariants
    /// (Weyl invariance for GL(n), torsion normal form for mu_n).
    pub fn element_from_poly(self: &Arc<Self>, p: LaurentPoly) -> Result<RepElement> {
        match &self.model {
            RepModel::Diagonalizable { ring, .. } => {
                if **p.ring() != **ring {
                    return Err(AstkError::RingMismatch("element not in the carrier ring".into()));
                }
                Ok(RepElement {
                    presentation: self.clone(),
                    value: RepValue::Poly(self.model.reduce(&p)),
                })
            }
            RepModel::SymmetricLaurent { ring, n } => {
                if **p.ring() != **ring {
                    return Err(AstkError::RingMismatch("element not in the carrier ring".into()));
                }
                if !is_symmetric(&p, *n) {
                    return Err(AstkError::Invalid(
                        "element is not Weyl-invariant (not symmetric in the eigenvalue variables)"
                            .into(),
                    ));
                }
                Ok(RepElement { presentation: self.clone(), value: RepValue::Poly(p) })
            }
            RepModel::PolyClass { ring } => {
                if **p.ring() != **ring {
                    return Err(AstkError::RingMismatch("element not in the carrier ring".into()));
                }
                Ok(RepElement { presentation: self.clone(), value: RepValue::Poly(p) })
            }
            RepModel::FiniteFree { .. } => Err(AstkError::Unsupported(
                "finite-group elements are coordinate vectors over the irreducible characters".into(),
            )),
        }
    }

    pub fn element_from_coords(self: &Arc<Self>, coords: Vec<Rat>) -> Result<RepElement> {
        let RepModel::FiniteFree { group } = &self.model else {
            return Err(AstkError::Unsupported("coordinate elements need a finite group".into()));
        };
        if coords.len() != group.num_classes() {
            return Err(AstkError::Invalid(format!(
                "expected {} coordinates, got {}",
                group.num_classes(),
                coords.len()
            )));
        }
        Ok(RepElement { presentation: self.clone(), value: RepValue::CharVec(coords) })
    }

    pub fn add(&self, a: &RepElement, b: &RepElement) -> RepElement {
        match (&a.value, &b.value) {
            (RepValue::Poly(p), RepValue::Poly(q)) => RepElement {
                presentation: a.presentation.clone(),
                value: RepValue::Poly(self.model.reduce(&p.add(q))),
            },
            (RepValue::CharVec(u), RepValue::CharVec(v)) => RepElement {
                presentation: a.presentation.clone(),
                value: RepValue::CharVec(
                    u.iter().zip(v).map(|(x, y)| x.clone() + y.clone()).collect(),
                ),
            },
            _ => panic!("mixed representation values"),
        }
    }

    pub fn mul(&self, a: &RepElement, b: &RepElement) -> RepElement {
        match (&a.value, &b.value) {
            (RepValue::Poly(p), RepValue::Poly(q)) => RepElement {
                presentation: a.presentation.clone(),
                value: RepValue::Poly(self.model.reduce(&p.mul(q))),
            },
            (RepValue::CharVec(u), RepValue::CharVec(v)) => {
                let RepModel::FiniteFree { group } = &self.model else { unreachable!() };
                let k = group.num_classes();
                let mut out = vec![Rat::zero(); k];
                for i in 0..k {
                    if u[i].is_zero() {
                        continue;
                    }
                    for j in 0..k {
                        if v[j].is_zero() {
                            continue;
                        }
                        for (l, c) in group.struct_consts[i][j].iter().enumerate() {
                            if !c.is_zero() {
                                out[l] += u[i].clone()
                                    * v[j].clone()
                                    * Rat::from_integer(c.clone());
                            }
                        }
                    }
                }
                RepElement { presentation: a.presentation.clone(), value: RepValue::CharVec(out) }
            }
            _ => panic!("mixed representation values"),
        }
    }

    /// The dimension homomorphism R(G) -> Z (rational-valued on
    /// rationalized elements).
    pub fn augmentation(&self, v: &RepElement) -> Rat {
        match (&self.model, &v.value) {
            (RepModel::PolyClass { .. }, RepValue::Poly(p)) => {
                // c = x + x^{-1} evaluates to 2 at the identity.
                p.terms().fold(Rat::zero(), |acc, (m, c)| {
                    acc + c.clone() * Rat::from_integer(num::pow::pow(crate::ratio::int(2), m.0[0] as usize))
                })
            }
            (_, RepValue::Poly(p)) => p.eval_all_ones(),
            (RepModel::FiniteFree { group }, RepValue::CharVec(u)) => u
                .iter()
                .zip(&group.characters)
                .fold(Rat::zero(), |acc, (c, row)| {
                    acc + c.clone() * rat_int(row.dim as i64)
                }),
            _ => unreachable!(),
        }
    }
}

/// Generators of the augmentation ideal I_G = ker(dim) in the carrier.
pub fn as_ideal(g: &GroupSpec) -> Result<IdealGens> {
    let pres = rep_ring(g)?;
    match &pres.model {
        RepModel::Diagonalizable { ring, .. } => {
            let gens = (0..ring.nvars())
                .map(|i| LaurentPoly::var(ring, i).sub(&LaurentPoly::one(ring)))
                .collect();
            IdealGens::new(ring, gens)
        }
        RepModel::SymmetricLaurent { ring, n } => {
            let gens = (1..=*n)
                .map(|i| {
                    elementary_symmetric(ring, *n, i).sub(&LaurentPoly::constant(
                        ring,
                        Rat::from_integer(binomial(*n as u64, i as u64)),
                    ))
                })
                .collect();
            IdealGens::new(ring, gens)
        }
        RepModel::PolyClass { ring } => {
            let gens =
                vec![LaurentPoly::var(ring, 0).sub(&LaurentPoly::constant(ring, rat_int(2)))];
            IdealGens::new(ring, gens)
        }
        RepModel::FiniteFree { group } => {
            // Polynomial presentation on the nontrivial irreducibles:
            // generator [chi] - dim(chi) becomes x_chi - dim.
            let names: Vec<String> = group
                .characters
                .iter()
                .enumerate()
                .filter(|(i, _)| *i != group.trivial_char)
                .map(|(_, r)| r.name.clone())
                .collect();
            let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
            let ring = PolyRing::poly_q(&refs);
            let gens = group
                .characters
                .iter()
                .enumerate()
                .filter(|(i, _)| *i != group.trivial_char)
                .enumerate()
                .map(|(slot, (_, row))| {
                    LaurentPoly::var(&ring, slot)
                        .sub(&LaurentPoly::constant(&ring, rat_int(row.dim as i64)))
                })
                .collect();
            IdealGens::new(&ring, gens)
        }
    }
}

/// Supported restriction maps R(G) -> R(H) for embeddings H < G.
pub fn restriction(g: &GroupSpec, h: &GroupSpec, v: &RepElement) -> Result<RepElement> {
    let target = rep_ring(h)?;
    match (g, h) {
        (GroupSpec::GL(n), GroupSpec::SplitTorus(r)) if n == r => {
            let RepValue::Poly(p) = &v.value else {
                return Err(AstkError::Invalid("expected a polynomial element".into()));
            };
            let tring = target.model.ring().unwrap();
            let images: Vec<LaurentPoly> =
                (0..*n).map(|i| LaurentPoly::var(tring, i)).collect();
            target.element_from_poly(p.substitute(tring, &images))
        }
        (GroupSpec::SplitTorus(1), GroupSpec::Mu(_)) => {
            let RepValue::Poly(p) = &v.value else {
                return Err(AstkError::Invalid("expected a polynomial element".into()));
            };
            let tring = target.model.ring().unwrap();
            // x -> t; reduction brings exponents into [0, n).
            let terms = p.terms().map(|(m, c)| (Monomial(vec![m.0[0]]), c.clone()));
            let image = LaurentPoly::from_terms(
                &Arc::new(PolyRing {
                    variables: tring.variables.clone(),
                    coeffs: tring.coeffs,
                    mode: RingMode::Laurent,
                }),
                terms,
            )?;
            // Reduce in the Laurent lift and re-express in the quotient ring.
            let reduced = match &target.model {
                RepModel::Diagonalizable { torsion, .. } => {
                    let n = torsion[0].unwrap() as i64;
                    LaurentPoly::from_terms(
                        tring,
                        image.terms().map(|(m, c)| (Monomial(vec![m.0[0].rem_euclid(n)]), c.clone())),
                    )?
                }
                _ => unreachable!(),
            };
            target.element_from_poly(reduced)
        }
        (GroupSpec::SL2, GroupSpec::SplitTorus(1)) => {
            let RepValue::Poly(p) = &v.value else {
                return Err(AstkError::Invalid("expected a polynomial element".into()));
            };
            let tring = target.model.ring().unwrap();
            let x = LaurentPoly::var(tring, 0);
            let image = x.add(&crate::poly::invert_unit(&x).unwrap());
            target.element_from_poly(p.substitute(tring, &[image]))
        }
        (GroupSpec::Finite(big), GroupSpec::Finite(small)) => {
            let RepValue::CharVec(coords) = &v.value else {
                return Err(AstkError::Invalid("expected a character-vector element".into()));
            };
            restrict_finite(big, small, coords, &target)
        }
        _ => Err(AstkError::Unsupported(format!(
            "restriction pair ({g}, {h}) is not in the catalog"
        ))),
    }
}

fn restrict_finite(
    big: &Arc<FiniteGroupData>,
    small: &Arc<FiniteGroupData>,
    coords: &[Rat],
    target: &Arc<RepRingPresentation>,
) -> Result<RepElement> {
    // Identify small's elements inside big by name, and check the embedding.
    let embed: Result<Vec<usize>> = small
        .elements
        .iter()
        .map(|name| {
            big.elements.iter().position(|e| e == name).ok_or_else(|| {
                AstkError::Unsupported(format!("element {name} of the subgroup not found"))
            })
        })
        .collect();
    let embed = embed?;
    for a in 0..small.order() {
        for b in 0..small.order() {
            if embed[small.mult[a][b]] != big.mult[embed[a]][embed[b]] {
                return Err(AstkError::Unsupported(
                    "subgroup multiplication does not match the ambient group".into(),
                ));
            }
        }
    }
    // Class function of the restriction on small's classes.
    let value_on_small_class: Vec<Rat> = (0..small.num_classes())
        .map(|c| {
            let rep = embed[small.classes[c][0]];
            let big_class = big.class_of[rep];
            coords
                .iter()
                .zip(&big.characters)
                .fold(Rat::zero(), |acc, (x, row)| acc + x.clone() * row.values[big_class].clone())
        })
        .collect();
    let decomposed = small.decompose_class_function(&value_on_small_class).ok_or_else(|| {
        AstkError::Invalid("restriction does not decompose in the subgroup's characters".into())
    })?;
    target.element_from_coords(decomposed)
}

/// Adams operation psi_l.
pub fn adams(l: u64, v: &RepElement) -> Result<RepElement> {
    if l == 0 {
        return Err(AstkError::Invalid("Adams operations are indexed by positive integers".into()));
    }
    let pres = &v.presentation;
    match (&pres.model, &v.value) {
        (RepModel::Diagonalizable { .. }, RepValue::Poly(p))
        | (RepModel::SymmetricLaurent { .. }, RepValue::Poly(p)) => Ok(RepElement {
            presentation: pres.clone(),
            value: RepValue::Poly(pres.model.reduce(&p.scale_exponents(l as i64))),
        }),
        (RepModel::PolyClass { ring }, RepValue::Poly(p)) => {
            let image = power_sum_in_c(ring, l);
            Ok(RepElement {
                presentation: pres.clone(),
                value: RepValue::Poly(p.substitute(ring, &[image])),
            })
        }
        (RepModel::FiniteFree { group }, RepValue::CharVec(coords)) => {
            let Some(pm) = &group.power_maps else {
                return Err(AstkError::Unsupported(
                    "Adams operations on a finite group need class power maps in the group file"
                        .into(),
                ));
            };
            let Some(map) = pm.get(&l) else {
                return Err(AstkError::Unsupported(format!(
                    "group file has no power map for l={l}"
                )));
            };
            // psi_l(chi)(g) = chi(g^l), then decompose.
            let value: Vec<Rat> = (0..group.num_classes())
                .map(|c| {
                    coords
                        .iter()
                        .zip(&group.characters)
                        .fold(Rat::zero(), |acc, (x, row)| {
                            acc + x.clone() * row.values[map[c]].clone()
                        })
                })
                .collect();
            let decomposed = group.decompose_class_function(&value).ok_or_else(|| {
                AstkError::Invalid("Adams image does not decompose in the characters".into())
            })?;
            Ok(RepElement { presentation: pres.clone(), value: RepValue::CharVec(decomposed) })
        }
        _ => unreachable!(),
    }
}

/// Sum of dim(chi) * [chi] over the irreducibles.
pub fn regular_representation(g: &GroupSpec) -> Result<RepElement> {
    let GroupSpec::Finite(data) = g else {
        return Err(AstkError::Unsupported(
            "the regular representation element is defined for finite groups".into(),
        ));
    };
    let pres = rep_ring(g)?;
    let coords: Vec<Rat> = data.characters.iter().map(|r| rat_int(r.dim as i64)).collect();
    pres.element_from_coords(coords)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::poly::invert_unit;

    #[test]
    fn torus_carrier_is_laurent() {
        let p = rep_ring(&GroupSpec::SplitTorus(1)).unwrap();
        let ring = p.model.ring().unwrap().clone();
        assert_eq!(ring.mode, RingMode::Laurent);
        assert_eq!(ring.variables, vec!["x1"]);
        let x = LaurentPoly::var(&ring, 0);
        let e = p.element_from_poly(x.pow(3)).unwrap();
        assert_eq!(p.augmentation(&e), rat_int(1));
    }

    #[test]
    fn mu3_reduces_exponents() {
        let p = rep_ring(&GroupSpec::Mu(3)).unwrap();
        let ring = p.model.ring().unwrap().clone();
        let t = LaurentPoly::var(&ring, 0);
        let e = p.element_from_poly(t.pow(4)).unwrap();
        let RepValue::Poly(q) = &e.value else { panic!() };
        assert_eq!(*q, t); // t^4 = t in Z[t]/(t^3 - 1)
        assert_eq!(p.augmentation(&e), rat_int(1));
    }

    #[test]
    fn gl2_generators_and_augmentation() {
        let p = rep_ring(&GroupSpec::GL(2)).unwrap();
        let ring = p.model.ring().unwrap().clone();
        let e1 = elementary_symmetric(&ring, 2, 1);
        let e2 = elementary_symmetric(&ring, 2, 2);
        assert_eq!(e1.to_string(), "t1 + t2");
        assert_eq!(e2.to_string(), "t1*t2");
        let v = p.element_from_poly(e2.clone()).unwrap();
        assert_eq!(p.augmentation(&v), rat_int(1));
        // Non-symmetric input is rejected.
        let t1 = LaurentPoly::var(&ring, 0);
        assert!(p.element_from_poly(t1).is_err());
    }

    #[test]
    fn as_ideal_generators_have_zero_augmentation() {
        for g in [
            GroupSpec::SplitTorus(2),
            GroupSpec::GL(2),
            GroupSpec::SL2,
            GroupSpec::Mu(4),
        ] {
            let pres = rep_ring(&g).unwrap();
            let ideal = as_ideal(&g).unwrap();
            for gen in &ideal.gens {
                if pres.model.ring().map(|r| **r == **gen.ring()).unwrap_or(false) {
                    let v = pres.element_from_poly(gen.clone()).unwrap();
                    assert!(pres.augmentation(&v).is_zero(), "{g}: {gen}");
                }
            }
        }
        // GL(2) generators are the documented ones.
        let ideal = as_ideal(&GroupSpec::GL(2)).unwrap();
        assert_eq!(ideal.gens.len(), 2);
        assert_eq!(ideal.gens[0].to_string(), "t1 + t2 - 2");
        assert_eq!(ideal.gens[1].to_string(), "t1*t2 - 1");
    }

    #[test]
    fn torus_as_ideal() {
        let ideal = as_ideal(&GroupSpec::SplitTorus(2)).unwrap();
        assert_eq!(ideal.gens.len(), 2);
        assert_eq!(ideal.gens[0].to_string(), "x1 - 1");
        assert_eq!(ideal.gens[1].to_string(), "x2 - 1");
        let mu = as_ideal(&GroupSpec::Mu(4)).unwrap();
        assert_eq!(mu.gens.len(), 1);
        assert_eq!(mu.gens[0].to_string(), "t - 1");
    }

    #[test]
    fn restriction_gl2_to_torus() {
        let gl2 = GroupSpec::GL(2);
        let t2 = GroupSpec::SplitTorus(2);
        let p = rep_ring(&gl2).unwrap();
        let ring = p.model.ring().unwrap().clone();
        let e1 = p.element_from_poly(elementary_symmetric(&ring, 2, 1)).unwrap();
        let r = restriction(&gl2, &t2, &e1).unwrap();
        let RepValue::Poly(q) = &r.value else { panic!() };
        assert_eq!(q.to_string(), "x1 + x2");
    }

    #[test]
    fn restriction_gm_to_mu3() {
        let gm = GroupSpec::SplitTorus(1);
        let mu3 = GroupSpec::Mu(3);
        let p = rep_ring(&gm).unwrap();
        let ring = p.model.ring().unwrap().clone();
        let x = LaurentPoly::var(&ring, 0);
        let v = p.element_from_poly(x.pow(2)).unwrap();
        let r = restriction(&gm, &mu3, &v).unwrap();
        let RepValue::Poly(q) = &r.value else { panic!() };
        assert_eq!(q.to_string(), "t^2");
        // x^{-1} -> t^2 as well (inverse = n-1 power).
        let v = p.element_from_poly(invert_unit(&x).unwrap()).unwrap();
        let r = restriction(&gm, &mu3, &v).unwrap();
        let RepValue::Poly(q) = &r.value else { panic!() };
        assert_eq!(q.to_string(), "t^2");
    }

    #[test]
    fn restriction_sl2_to_torus_identity() {
        // c - 2 restricts to x + x^{-1} - 2 = x^{-1} (x-1)^2:
        // x^{-1}(x^2 - 2x + 1) = x - 2 + x^{-1}.
        let sl2 = GroupSpec::SL2;
        let t1 = GroupSpec::SplitTorus(1);
        let p = rep_ring(&sl2).unwrap();
        let ring = p.model.ring().unwrap().clone();
        let c = LaurentPoly::var(&ring, 0);
        let v = p.element_from_poly(c.sub(&LaurentPoly::constant(&ring, rat_int(2)))).unwrap();
        let r = restriction(&sl2, &t1, &v).unwrap();
        let RepValue::Poly(q) = &r.value else { panic!() };
        let tring = q.ring().clone();
        let x = LaurentPoly::var(&tring, 0);
        let xinv = invert_unit(&x).unwrap();
        let expected = xinv.mul(&x.sub(&LaurentPoly::one(&tring)).pow(2));
        assert_eq!(*q, expected);
    }

    #[test]
    fn adams_on_torus_and_gl2() {
        let gm = rep_ring(&GroupSpec::SplitTorus(1)).unwrap();
        let ring = gm.model.ring().unwrap().clone();
        let x = gm.element_from_poly(LaurentPoly::var(&ring, 0)).unwrap();
        let psi2 = adams(2, &x).unwrap();
        let RepValue::Poly(q) = &psi2.value else { panic!() };
        assert_eq!(q.to_string(), "x1^2");

        // psi_2(e1) = t1^2 + t2^2 = e1^2 - 2 e2 (Newton).
        let gl2 = rep_ring(&GroupSpec::GL(2)).unwrap();
        let glring = gl2.model.ring().unwrap().clone();
        let e1p = elementary_symmetric(&glring, 2, 1);
        let e2p = elementary_symmetric(&glring, 2, 2);
        let e1 = gl2.element_from_poly(e1p.clone()).unwrap();
        let psi2 = adams(2, &e1).unwrap();
        let RepValue::Poly(q) = &psi2.value else { panic!() };
        let newton = e1p.mul(&e1p).sub(&e2p.scale(&rat_int(2)));
        assert_eq!(*q, newton);
    }

    #[test]
    fn adams_laws_on_sl2() {
        let sl2 = rep_ring(&GroupSpec::SL2).unwrap();
        let ring = sl2.model.ring().unwrap().clone();
        let c = sl2.element_from_poly(LaurentPoly::var(&ring, 0)).unwrap();
        // psi_1 = id
        let psi1 = adams(1, &c).unwrap();
        assert_eq!(psi1.value, c.value);
        // psi_2 psi_3 = psi_6
        let a = adams(2, &adams(3, &c).unwrap()).unwrap();
        let b = adams(6, &c).unwrap();
        assert_eq!(a.value, b.value);
        // augmentation preserved
        assert_eq!(sl2.augmentation(&a), rat_int(2));
        // psi_2(c) = c^2 - 2
        let psi2 = adams(2, &c).unwrap();
        let RepValue::Poly(q) = &psi2.value else { panic!() };
        assert_eq!(q.to_string(), "c^2 - 2");
    }

    #[test]
    fn adams_on_finite_group_needs_power_maps() {
        let g = GroupSpec::parse("s3").unwrap();
        let pres = rep_ring(&g).unwrap();
        let GroupSpec::Finite(data) = &g else { panic!() };
        let std_idx = data.characters.iter().position(|r| r.name == "std").unwrap();
        let mut coords = vec![Rat::zero(); 3];
        coords[std_idx] = Rat::one();
        let std = pres.element_from_coords(coords).unwrap();
        // psi_2(std)(g) = std(g^2): values (2, 2, -1) = triv + sgn + ... solve:
        // a*[1,1,1] + b*[1,-1,1] + c*[2,0,-1] = [2,2,-1]: c=1? a+b+2c=2, a-b=2, a+b-c=-1
        // -> from rows: a+b = -1 + c; a+b+2c = 2 -> 3c = 3, c = 1, a+b = 0, a-b=2 -> a=1,b=-1.
        let psi2 = adams(2, &std).unwrap();
        let RepValue::CharVec(v) = &psi2.value else { panic!() };
        let triv = data.trivial_char;
        let sgn = data.characters.iter().position(|r| r.name == "sgn").unwrap();
        assert_eq!(v[triv], rat_int(1));
        assert_eq!(v[sgn], rat_int(-1));
        assert_eq!(v[std_idx], rat_int(1));
        assert_eq!(pres.augmentation(&psi2), rat_int(2));
    }

    #[test]
    fn regular_representation_examples() {
        // Mu(2) as a finite group via c2: 1 + t has both characters once.
        let c2 = GroupSpec::parse("c2").unwrap();
        let reg = regular_representation(&c2).unwrap();
        let RepValue::CharVec(v) = &reg.value else { panic!() };
        assert!(v.iter().all(|c| c.is_one()));

        let s3 = GroupSpec::parse("s3").unwrap();
        let reg = regular_representation(&s3).unwrap();
        let RepValue::CharVec(v) = &reg.value else { panic!() };
        let GroupSpec::Finite(data) = &s3 else { panic!() };
        let std_idx = data.characters.iter().position(|r| r.name == "std").unwrap();
        assert_eq!(v[std_idx], rat_int(2));
        assert_eq!(reg.presentation.augmentation(&reg), rat_int(6));
    }

    #[test]
    fn product_of_torus_and_mu() {
        let g = GroupSpec::Product(vec![GroupSpec::SplitTorus(1), GroupSpec::Mu(3)]);
        let p = rep_ring(&g).unwrap();
        let RepModel::Diagonalizable { ring, torsion } = &p.model else { panic!() };
        assert_eq!(ring.variables.len(), 2);
        assert_eq!(torsion, &vec![None, Some(3)]);
        let ideal = as_ideal(&g).unwrap();
        assert_eq!(ideal.gens.len(), 2);
    }

    #[test]
    fn finite_as_ideal_presentation() {
        let s3 = GroupSpec::parse("s3").unwrap();
        let ideal = as_ideal(&s3).unwrap();
        assert_eq!(ideal.gens.len(), 2);
        let names: Vec<String> = ideal.ring.variables.clone();
        assert!(names.contains(&"sgn".to_string()));
        assert!(names.contains(&"std".to_string()));
    }

    #[test]
    fn fixture_files_match_embedded() {
        let disk = std::fs::read_to_string(
            std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures/s3.json"),
        )
        .unwrap();
        assert_eq!(disk, fixtures::S3_JSON);
    }
}
