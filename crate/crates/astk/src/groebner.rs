//! Buchberger Groebner engine over Q with membership certificates.
//!
//! Every new basis element carries its expression in terms of the source
//! generators, so ideal membership always returns an auditable coefficient
//! combination. Laurent-ring membership goes through the saturation variable
//! s with relation s*(x_1...x_n) - 1 and an elimination order.

use crate::error::{AstkError, Result};
use crate::monomial::{Monomial, TermOrder};
use crate::poly::{CoeffDomain, LaurentPoly, PolyRing, RingMode};
use crate::ratio::Rat;
use num::traits::{One, Zero};
use serde::{Deserialize, Serialize};
use std::sync::Arc;

#[derive(Clone, Debug)]
pub struct IdealGens {
    pub ring: Arc<PolyRing>,
    pub gens: Vec<LaurentPoly>,
}

impl IdealGens {
    pub fn new(ring: &Arc<PolyRing>, gens: Vec<LaurentPoly>) -> Result<Self> {
        for g in &gens {
            if **g.ring() != **ring {
                return Err(AstkError::RingMismatch(
                    "ideal generators must share the ambient ring".into(),
                ));
            }
        }
        Ok(IdealGens { ring: ring.clone(), gens })
    }
}

/// An explicit coefficient combination witnessing target = sum c_i * g_i.
#[derive(Clone, Debug)]
pub struct MembershipCertificate {
    pub gens: Vec<LaurentPoly>,
    pub coefficients: Vec<LaurentPoly>,
    pub target: LaurentPoly,
}

impl MembershipCertificate {
    /// Re-evaluate the combination exactly; independent of how it was found.
    pub fn validate(&self) -> bool {
        if self.coefficients.len() != self.gens.len() {
            return false;
        }
        let mut acc = LaurentPoly::zero(self.target.ring());
        for (c, g) in self.coefficients.iter().zip(&self.gens) {
            acc = acc.add(&c.mul(g));
        }
        acc == self.target
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "target": crate::poly::poly_to_json_terms(&self.target),
            "generators": self.gens.iter().map(crate::poly::poly_to_json_terms).collect::<Vec<_>>(),
            "coefficients": self.coefficients.iter().map(crate::poly::poly_to_json_terms).collect::<Vec<_>>(),
            "display": self.gens.iter().zip(&self.coefficients)
                .map(|(g, c)| format!("({}) * ({})", c, g)).collect::<Vec<_>>(),
        })
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GroebnerStats {
    pub pairs_considered: usize,
    pub pairs_skipped_coprime: usize,
    pub reductions_to_zero: usize,
}

#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    pub order: TermOrder,
    pub basis: Vec<LaurentPoly>,
    /// cofactors[i] expresses basis[i] as a combination of source generators.
    pub cofactors: Vec<Vec<LaurentPoly>>,
    pub source: IdealGens,
    pub stats: GroebnerStats,
}

/// Multivariate division with quotient tracking:
/// f = sum quotients[i] * basis[i] + remainder, no remainder term divisible
/// by any leading monomial of the basis.
fn divide_tracked(
    f: &LaurentPoly,
    basis: &[LaurentPoly],
    order: &TermOrder,
) -> (Vec<LaurentPoly>, LaurentPoly) {
    let ring = f.ring();
    let mut quotients = vec![LaurentPoly::zero(ring); basis.len()];
    let mut remainder = LaurentPoly::zero(ring);
    let mut p = f.clone();
    let leads: Vec<Option<(Monomial, Rat)>> = basis
        .iter()
        .map(|b| b.leading_term(order).map(|(m, c)| (m.clone(), c.clone())))
        .collect();
    while !p.is_zero() {
        let (lm, lc) = {
            let (m, c) = p.leading_term(order).unwrap();
            (m.clone(), c.clone())
        };
        let mut reduced = false;
        for (i, lead) in leads.iter().enumerate() {
            let Some((bm, bc)) = lead else { continue };
            if let Some(q) = lm.try_div(bm) {
                let coeff = lc.clone() / bc.clone();
                quotients[i] = quotients[i].add(&LaurentPoly::monomial(ring, q.clone(), coeff.clone()));
                p = p.sub(&basis[i].mul_term(&q, &coeff));
                reduced = true;
                break;
            }
        }
        if !reduced {
            let t = LaurentPoly::monomial(ring, lm.clone(), lc.clone());
            remainder = remainder.add(&t);
            p = p.sub(&t);
        }
    }
    (quotients, remainder)
}

pub fn normal_form(f: &LaurentPoly, basis: &[LaurentPoly], order: &TermOrder) -> LaurentPoly {
    divide_tracked(f, basis, order).1
}

/// Buchberger's algorithm with the normal selection strategy
/// (lcm total degree, then lex on pair indices) and cofactor tracking.
pub fn groebner_basis(gens: &IdealGens, order: &TermOrder) -> Result<GroebnerBasis> {
    if gens.ring.mode != RingMode::Poly {
        return Err(AstkError::Unsupported(
            "Groebner engine runs in polynomial mode; Laurent ideals go through laurent_member".into(),
        ));
    }
    if gens.ring.coeffs != CoeffDomain::Q {
        return Err(AstkError::Unsupported(
            "Groebner engine works over rationals; clear denominators and lift integer input first".into(),
        ));
    }
    if order.nvars() != gens.ring.nvars() {
        return Err(AstkError::RingMismatch("term order width != ring width".into()));
    }

    let ring = &gens.ring;
    let nsrc = gens.gens.len();
    let unit_vec = |i: usize| -> Vec<LaurentPoly> {
        (0..nsrc)
            .map(|j| if i == j { LaurentPoly::one(ring) } else { LaurentPoly::zero(ring) })
            .collect()
    };

    let mut basis: Vec<LaurentPoly> = Vec::new();
    let mut cof: Vec<Vec<LaurentPoly>> = Vec::new();
    for (i, g) in gens.gens.iter().enumerate() {
        if !g.is_zero() {
            basis.push(g.clone());
            cof.push(unit_vec(i));
        }
    }

    let mut stats =
        GroebnerStats { pairs_considered: 0, pairs_skipped_coprime: 0, reductions_to_zero: 0 };

    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for j in 1..basis.len() {
        for i in 0..j {
            pairs.push((i, j));
        }
    }

    while !pairs.is_empty() {
        // Normal strategy: minimal lcm degree, ties by (i, j).
        let key = |&(i, j): &(usize, usize)| {
            let (mi, _) = basis[i].leading_term(&order.clone()).unwrap();
            let (mj, _) = basis[j].leading_term(&order.clone()).unwrap();
            (mi.lcm(mj).total_degree(), i, j)
        };
        let best = pairs
            .iter()
            .enumerate()
            .min_by_key(|(_, p)| key(p))
            .map(|(idx, _)| idx)
            .unwrap();
        let (i, j) = pairs.swap_remove(best);
        stats.pairs_considered += 1;

        let (mi, ci) = {
            let (m, c) = basis[i].leading_term(order).unwrap();
            (m.clone(), c.clone())
        };
        let (mj, cj) = {
            let (m, c) = basis[j].leading_term(order).unwrap();
            (m.clone(), c.clone())
        };
        if mi.coprime(&mj) {
            stats.pairs_skipped_coprime += 1;
            continue;
        }
        let lcm = mi.lcm(&mj);
        let ui = lcm.try_div(&mi).unwrap();
        let uj = lcm.try_div(&mj).unwrap();
        let spoly = basis[i]
            .mul_term(&ui, &(Rat::one() / ci.clone()))
            .sub(&basis[j].mul_term(&uj, &(Rat::one() / cj.clone())));
        let (quotients, rem) = divide_tracked(&spoly, &basis, order);
        if rem.is_zero() {
            stats.reductions_to_zero += 1;
            continue;
        }
        // Cofactor of the S-polynomial, minus the division quotients.
        let mut new_cof: Vec<LaurentPoly> = (0..nsrc)
            .map(|k| {
                cof[i][k]
                    .mul_term(&ui, &(Rat::one() / ci.clone()))
                    .sub(&cof[j][k].mul_term(&uj, &(Rat::one() / cj.clone())))
            })
            .collect();
        for (b, q) in quotients.iter().enumerate() {
            if q.is_zero() {
                continue;
            }
            for k in 0..nsrc {
                new_cof[k] = new_cof[k].sub(&q.mul(&cof[b][k]));
            }
        }
        // Monic normalization.
        let lc = rem.leading_term(order).unwrap().1.clone();
        let inv = Rat::one() / lc;
        let rem = rem.scale(&inv);
        for c in &mut new_cof {
            *c = c.scale(&inv);
        }
        let new_idx = basis.len();
        basis.push(rem);
        cof.push(new_cof);
        for k in 0..new_idx {
            pairs.push((k, new_idx));
        }
    }

    let (basis, cof) = interreduce(basis, cof, order);
    Ok(GroebnerBasis { order: order.clone(), basis, cofactors: cof, source: gens.clone(), stats })
}

/// Minimalize and fully reduce; output sorted by leading monomial, monic.
/// This makes the basis the reduced Groebner basis, canonical for the ideal.
fn interreduce(
    mut basis: Vec<LaurentPoly>,
    mut cof: Vec<Vec<LaurentPoly>>,
    order: &TermOrder,
) -> (Vec<LaurentPoly>, Vec<Vec<LaurentPoly>>) {
    // Drop elements whose leading monomial is divisible by another's.
    let mut keep = vec![true; basis.len()];
    for a in 0..basis.len() {
        if !keep[a] {
            continue;
        }
        let lma = basis[a].leading_term(order).unwrap().0.clone();
        for b in 0..basis.len() {
            if a == b || !keep[b] {
                continue;
            }
            let lmb = basis[b].leading_term(order).unwrap().0.clone();
            if lmb.divides(&lma) && (lma != lmb || b < a) {
                keep[a] = false;
                break;
            }
        }
    }
    let mut kept: Vec<(LaurentPoly, Vec<LaurentPoly>)> = basis
        .drain(..)
        .zip(cof.drain(..))
        .zip(keep)
        .filter_map(|(x, k)| if k { Some(x) } else { None })
        .collect();

    // Tail-reduce each element against the others.
    for i in 0..kept.len() {
        let others: Vec<LaurentPoly> =
            kept.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, (b, _))| b.clone()).collect();
        let (quotients, rem) = divide_tracked(&kept[i].0, &others, order);
        if rem == kept[i].0 {
            continue;
        }
        let mut new_cof = kept[i].1.clone();
        let mut oi = 0;
        for j in 0..kept.len() {
            if j == i {
                continue;
            }
            let q = &quotients[oi];
            oi += 1;
            if q.is_zero() {
                continue;
            }
            let other_cof = kept[j].1.clone();
            for (k, oc) in other_cof.iter().enumerate() {
                new_cof[k] = new_cof[k].sub(&q.mul(oc));
            }
        }
        kept[i] = (rem, new_cof);
    }

    // Monic + deterministic order (ascending leading monomial).
    for (b, cs) in &mut kept {
        let lc = b.leading_term(order).unwrap().1.clone();
        if !lc.is_one() {
            let inv = Rat::one() / lc;
            *b = b.scale(&inv);
            for c in cs.iter_mut() {
                *c = c.scale(&inv);
            }
        }
    }
    kept.sort_by(|(a, _), (b, _)| {
        order.cmp(a.leading_term(order).unwrap().0, b.leading_term(order).unwrap().0)
    });
    kept.into_iter().unzip()
}

impl GroebnerBasis {
    pub fn normal_form(&self, f: &LaurentPoly) -> LaurentPoly {
        normal_form(f, &self.basis, &self.order)
    }

    /// Membership with certificate over the *source* generators.
    pub fn member(&self, f: &LaurentPoly) -> Option<MembershipCertificate> {
        let (quotients, rem) = divide_tracked(f, &self.basis, &self.order);
        if !rem.is_zero() {
            return None;
        }
        let ring = &self.source.ring;
        let nsrc = self.source.gens.len();
        let mut coefficients = vec![LaurentPoly::zero(ring); nsrc];
        for (b, q) in quotients.iter().enumerate() {
            if q.is_zero() {
                continue;
            }
            for k in 0..nsrc {
                if !self.cofactors[b][k].is_zero() {
                    coefficients[k] = coefficients[k].add(&q.mul(&self.cofactors[b][k]));
                }
            }
        }
        let cert = MembershipCertificate {
            gens: self.source.gens.clone(),
            coefficients,
            target: f.clone(),
        };
        debug_assert!(cert.validate());
        Some(cert)
    }

    /// Buchberger criterion: every S-polynomial of basis pairs reduces to 0,
    /// and every source generator reduces to 0.
    pub fn verify(&self) -> bool {
        for j in 1..self.basis.len() {
            for i in 0..j {
                let (mi, ci) = {
                    let (m, c) = self.basis[i].leading_term(&self.order).unwrap();
                    (m.clone(), c.clone())
                };
                let (mj, cj) = {
                    let (m, c) = self.basis[j].leading_term(&self.order).unwrap();
                    (m.clone(), c.clone())
                };
                let lcm = mi.lcm(&mj);
                let spoly = self.basis[i]
                    .mul_term(&lcm.try_div(&mi).unwrap(), &(Rat::one() / ci))
                    .sub(&self.basis[j].mul_term(&lcm.try_div(&mj).unwrap(), &(Rat::one() / cj)));
                if !self.normal_form(&spoly).is_zero() {
                    return false;
                }
            }
        }
        self.source.gens.iter().all(|g| self.normal_form(g).is_zero())
    }
}

/// Membership of f in <gens> in polynomial mode, with certificate.
pub fn ideal_member(
    f: &LaurentPoly,
    gens: &IdealGens,
    order: &TermOrder,
) -> Result<Option<MembershipCertificate>> {
    if **f.ring() != *gens.ring {
        return Err(AstkError::RingMismatch("element and ideal live in different rings".into()));
    }
    if f.is_zero() {
        return Ok(Some(MembershipCertificate {
            gens: gens.gens.clone(),
            coefficients: vec![LaurentPoly::zero(&gens.ring); gens.gens.len()],
            target: f.clone(),
        }));
    }
    let gb = groebner_basis(gens, order)?;
    Ok(gb.member(f))
}

/// Membership in a Laurent ring: clear negative exponents, adjoin s with
/// relation s*(x_1...x_n) - 1, decide with an elimination order putting s
/// first, and translate the certificate back to the Laurent ring.
pub fn laurent_member(
    f: &LaurentPoly,
    gens: &IdealGens,
) -> Result<Option<MembershipCertificate>> {
    if **f.ring() != *gens.ring {
        return Err(AstkError::RingMismatch("element and ideal live in different rings".into()));
    }
    if gens.ring.mode != RingMode::Laurent {
        return Err(AstkError::Unsupported("laurent_member expects a Laurent ring".into()));
    }
    let lring = &gens.ring;
    let n = lring.nvars();
    if f.is_zero() {
        return Ok(Some(MembershipCertificate {
            gens: gens.gens.clone(),
            coefficients: vec![LaurentPoly::zero(lring); gens.gens.len()],
            target: f.clone(),
        }));
    }

    // Polynomial ring with the saturation variable appended.
    let mut vars: Vec<String> = lring.variables.clone();
    vars.push(fresh_var_name(&vars));
    let pring = Arc::new(PolyRing {
        variables: vars,
        coeffs: CoeffDomain::Q,
        mode: RingMode::Poly,
    });

    let widen = |p: &LaurentPoly| -> LaurentPoly {
        LaurentPoly::from_terms(
            &pring,
            p.terms().map(|(m, c)| {
                let mut e = m.0.clone();
                e.push(0);
                (Monomial(e), c.clone())
            }),
        )
        .expect("widened polynomial")
    };

    let sat_poly_ring = Arc::new(PolyRing {
        variables: lring.variables.clone(),
        coeffs: CoeffDomain::Q,
        mode: RingMode::Poly,
    });
    let mut pgens = Vec::new();
    for g in &gens.gens {
        let (_, cleared) = g.clear_negative_exponents(&sat_poly_ring);
        pgens.push(widen(&cleared));
    }
    // s * (x_1 ... x_n) - 1
    let mut all = vec![1i64; n];
    all.push(1);
    let relation = LaurentPoly::monomial(&pring, Monomial(all), Rat::one())
        .sub(&LaurentPoly::one(&pring));
    pgens.push(relation);

    let (fshift, fcleared) = f.clear_negative_exponents(&sat_poly_ring);
    let ftarget = widen(&fcleared);

    // Elimination order with s in the leading block.
    let mut perm: Vec<usize> = vec![n];
    perm.extend(0..n);
    let order = TermOrder {
        kind: crate::monomial::OrderKind::Elimination { block_sizes: vec![1, n] },
        permutation: perm,
    };

    let pideal = IdealGens::new(&pring, pgens)?;
    let Some(cert) = ideal_member(&ftarget, &pideal, &order)? else {
        return Ok(None);
    };

    // Back to the Laurent ring: s |-> (x_1...x_n)^{-1}, then shift by the
    // monomials used to clear f and the generators.
    let subst_back = |p: &LaurentPoly| -> LaurentPoly {
        LaurentPoly::from_terms(
            lring,
            p.terms().map(|(m, c)| {
                let s_exp = m.0[n];
                let e: Vec<i64> = (0..n).map(|i| m.0[i] - s_exp).collect();
                (Monomial(e), c.clone())
            }),
        )
        .expect("laurent image")
    };

    let f_unshift = LaurentPoly::monomial(lring, fshift.pow(-1), Rat::one());
    let mut coefficients = Vec::with_capacity(gens.gens.len());
    for (i, g) in gens.gens.iter().enumerate() {
        let (gshift, _) = g.clear_negative_exponents(&sat_poly_ring);
        let gshift_mono = LaurentPoly::monomial(lring, gshift, Rat::one());
        let c = subst_back(&cert.coefficients[i]).mul(&gshift_mono).mul(&f_unshift);
        coefficients.push(c);
    }
    let out = MembershipCertificate { gens: gens.gens.clone(), coefficients, target: f.clone() };
    if !out.validate() {
        return Err(AstkError::Integrity(
            "laurent membership certificate failed to re-validate".into(),
        ));
    }
    Ok(Some(out))
}

fn fresh_var_name(existing: &[String]) -> String {
    let mut name = "s".to_string();
    while existing.iter().any(|v| *v == name) {
        name.push('_');
    }
    name
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::invert_unit;
    use crate::ratio::rat_int;

    fn qring(vars: &[&str]) -> Arc<PolyRing> {
        PolyRing::poly_q(vars)
    }

    #[test]
    fn already_a_basis() {
        let r = qring(&["x"]);
        let x = LaurentPoly::var(&r, 0);
        let gens = IdealGens::new(&r, vec![x.clone()]).unwrap();
        let gb = groebner_basis(&gens, &TermOrder::grevlex(1)).unwrap();
        assert_eq!(gb.basis, vec![x]);
        assert!(gb.verify());
    }

    #[test]
    fn buchberger_finds_y_cubed() {
        // gens {x^2 + y^2, x y}: y^3 = y*(x^2+y^2) - x*(x y) lies in the ideal
        // and appears in the reduced grevlex basis.
        let r = qring(&["x", "y"]);
        let x = LaurentPoly::var(&r, 0);
        let y = LaurentPoly::var(&r, 1);
        let g1 = x.mul(&x).add(&y.mul(&y));
        let g2 = x.mul(&y);
        let gens = IdealGens::new(&r, vec![g1.clone(), g2.clone()]).unwrap();
        let order = TermOrder::grevlex(2);
        let gb = groebner_basis(&gens, &order).unwrap();
        assert!(gb.verify());
        let y3 = y.pow(3);
        assert!(gb.basis.contains(&y3), "basis {:?}", gb.basis.iter().map(|b| b.to_string()).collect::<Vec<_>>());
        // The hand identity gives the certificate for y^3.
        let cert = gb.member(&y3).unwrap();
        assert!(cert.validate());
        let manual = y.mul(&g1).sub(&x.mul(&g2));
        assert_eq!(manual, y3);
    }

    #[test]
    fn linear_coprime_leads_are_a_basis() {
        // The GL_2 augmentation-ideal presentation {e1 - 2, e2 - 1}.
        let r = qring(&["e1", "e2"]);
        let e1 = LaurentPoly::var(&r, 0);
        let e2 = LaurentPoly::var(&r, 1);
        let g1 = e1.sub(&LaurentPoly::constant(&r, rat_int(2)));
        let g2 = e2.sub(&LaurentPoly::one(&r));
        let gens = IdealGens::new(&r, vec![g1.clone(), g2.clone()]).unwrap();
        let gb = groebner_basis(&gens, &TermOrder::grevlex(2)).unwrap();
        assert_eq!(gb.basis.len(), 2);
        assert!(gb.basis.contains(&g1));
        assert!(gb.basis.contains(&g2));
    }

    #[test]
    fn member_zero_and_factorization() {
        let r = qring(&["x"]);
        let x = LaurentPoly::var(&r, 0);
        let gens = IdealGens::new(&r, vec![x.sub(&LaurentPoly::one(&r))]).unwrap();
        let order = TermOrder::grevlex(1);

        let zero = LaurentPoly::zero(&r);
        let cert = ideal_member(&zero, &gens, &order).unwrap().unwrap();
        assert!(cert.coefficients.iter().all(|c| c.is_zero()));
        assert!(cert.validate());

        // x^2 - 1 = (x+1)(x-1)
        let f = x.mul(&x).sub(&LaurentPoly::one(&r));
        let cert = ideal_member(&f, &gens, &order).unwrap().unwrap();
        assert!(cert.validate());
        assert_eq!(cert.coefficients[0], x.add(&LaurentPoly::one(&r)));

        let g = x.add(&LaurentPoly::one(&r));
        assert!(ideal_member(&g, &gens, &order).unwrap().is_none());
    }

    #[test]
    fn ring_mismatch_rejected() {
        let r = qring(&["x"]);
        let s = qring(&["y"]);
        let f = LaurentPoly::var(&s, 0);
        let gens = IdealGens::new(&r, vec![LaurentPoly::var(&r, 0)]).unwrap();
        assert!(ideal_member(&f, &gens, &TermOrder::grevlex(1)).is_err());
    }

    #[test]
    fn groebner_rejects_laurent_and_integers() {
        let lr = PolyRing::laurent_q(&["x"]);
        let gens = IdealGens::new(&lr, vec![LaurentPoly::var(&lr, 0)]).unwrap();
        assert!(groebner_basis(&gens, &TermOrder::grevlex(1)).is_err());

        let zr = Arc::new(PolyRing {
            variables: vec!["x".into()],
            coeffs: CoeffDomain::Z,
            mode: RingMode::Poly,
        });
        let gens = IdealGens::new(&zr, vec![LaurentPoly::var(&zr, 0)]).unwrap();
        assert!(groebner_basis(&gens, &TermOrder::grevlex(1)).is_err());
    }

    #[test]
    fn laurent_membership_translates_certificates() {
        let lr = PolyRing::laurent_q(&["x"]);
        let x = LaurentPoly::var(&lr, 0);
        let one = LaurentPoly::one(&lr);
        let gens = IdealGens::new(&lr, vec![x.sub(&one)]).unwrap();

        // x - 1 in (x - 1): coefficient 1.
        let cert = laurent_member(&x.sub(&one), &gens).unwrap().unwrap();
        assert!(cert.validate());
        assert!(cert.coefficients[0].is_one());

        // x^{-1} - 1 = -x^{-1} (x - 1).
        let xinv = invert_unit(&x).unwrap();
        let f = xinv.sub(&one);
        let cert = laurent_member(&f, &gens).unwrap().unwrap();
        assert!(cert.validate());
        assert_eq!(cert.coefficients[0], xinv.neg());

        // x + 1 is not in (x - 1) over Q[x^{+-}].
        assert!(laurent_member(&x.add(&one), &gens).unwrap().is_none());
    }

    #[test]
    fn deterministic_for_fixed_input() {
        let r = qring(&["x", "y", "z"]);
        let x = LaurentPoly::var(&r, 0);
        let y = LaurentPoly::var(&r, 1);
        let z = LaurentPoly::var(&r, 2);
        let gens = IdealGens::new(
            &r,
            vec![x.mul(&y).sub(&z), y.mul(&z).sub(&x), z.mul(&x).sub(&y)],
        )
        .unwrap();
        let order = TermOrder::grevlex(3);
        let a = groebner_basis(&gens, &order).unwrap();
        let b = groebner_basis(&gens, &order).unwrap();
        assert_eq!(a.basis, b.basis);
        assert!(a.verify());
    }
}
