//! `SL(2,R)^d`: product intertwining polynomials and the multivariate
//! Level-3 check. Variable `i` carries the spectral parameter of factor `i`.

use serde::{Deserialize, Serialize};

use crate::algebra::{json::rat_str, BigRat, ExactMultiPoly, ExactPoly};
use crate::sl2r::{q_poly_r, q_roots_r};
use crate::{Error, Result};

/// A K-type of `SO(2)^d`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct KTypeVec {
    pub ktypes: Vec<i64>,
}

impl KTypeVec {
    pub fn new(ktypes: Vec<i64>) -> Self {
        assert!(!ktypes.is_empty(), "KTypeVec needs at least one component");
        Self { ktypes }
    }

    pub fn arity(&self) -> usize {
        self.ktypes.len()
    }
}

fn check_pair(l: &KTypeVec, n: &KTypeVec) -> Result<()> {
    if l.arity() != n.arity() {
        return Err(Error::ArityMismatch { expected: l.arity(), got: n.arity() });
    }
    for (i, (a, b)) in l.ktypes.iter().zip(&n.ktypes).enumerate() {
        if (a - b).rem_euclid(2) != 0 {
            return Err(Error::ParityMismatch(format!("coordinate {i}: K-types {a} and {b} differ in parity")));
        }
    }
    Ok(())
}

/// `q_{l,n}(λ₁,…,λ_d) = ∏ q_{l_i,n_i}(λ_i)`.
pub fn q_product(l: &KTypeVec, n: &KTypeVec) -> Result<ExactMultiPoly> {
    check_pair(l, n)?;
    let d = l.arity();
    let mut out = ExactMultiPoly::one(d);
    for (i, (&a, &b)) in l.ktypes.iter().zip(&n.ktypes).enumerate() {
        out = out.mul(&ExactMultiPoly::from_univariate(d, i, &q_poly_r(a, b)?));
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ProductWitness {
    /// `φ` restricted to `λ_var = root` is the nonzero polynomial `residual`.
    UnvanishedRoot {
        var: usize,
        #[serde(with = "rat_str")]
        root: BigRat,
        residual: ExactMultiPoly,
    },
    /// The cofactor has a term `coefficient·λ^exps` odd in `var`.
    OddExponent {
        var: usize,
        exps: Vec<u32>,
        #[serde(with = "rat_str")]
        coefficient: BigRat,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "result", rename_all = "lowercase")]
pub enum ProductOutcome {
    Accept { h: ExactMultiPoly },
    Reject { witness: ProductWitness },
}

impl ProductOutcome {
    pub fn is_accept(&self) -> bool {
        matches!(self, ProductOutcome::Accept { .. })
    }
}

/// Decides whether `φ = h·q_{l,n}` with `h` even in every variable,
/// dividing variable by variable from `0` upward.
pub fn level3_check_product(phi: &ExactMultiPoly, l: &KTypeVec, n: &KTypeVec) -> Result<ProductOutcome> {
    let order: Vec<usize> = (0..l.arity()).collect();
    level3_check_product_with_order(phi, l, n, &order)
}

/// As [`level3_check_product`], with an explicit variable order.
pub fn level3_check_product_with_order(
    phi: &ExactMultiPoly,
    l: &KTypeVec,
    n: &KTypeVec,
    order: &[usize],
) -> Result<ProductOutcome> {
    check_pair(l, n)?;
    if phi.arity() != l.arity() {
        return Err(Error::ArityMismatch { expected: l.arity(), got: phi.arity() });
    }
    let mut sorted = order.to_vec();
    sorted.sort_unstable();
    if sorted != (0..l.arity()).collect::<Vec<_>>() {
        return Err(Error::Precondition("division order must be a permutation of the variables".into()));
    }

    let mut h = phi.clone();
    for &var in order {
        for root in q_roots_r(l.ktypes[var], n.ktypes[var])? {
            let residual = h.specialize(var, &root);
            if !residual.is_zero() {
                return Ok(ProductOutcome::Reject { witness: ProductWitness::UnvanishedRoot { var, root, residual } });
            }
            let (q, rem) = h.div_in_var(&ExactPoly::linear(&root), var)?;
            debug_assert!(rem.is_zero());
            h = q;
        }
    }
    for &var in order {
        if let Some((exps, coefficient)) = h.lowest_odd_term_in(var) {
            return Ok(ProductOutcome::Reject { witness: ProductWitness::OddExponent { var, exps, coefficient } });
        }
    }
    Ok(ProductOutcome::Accept { h })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::int;

    fn kv(v: &[i64]) -> KTypeVec {
        KTypeVec::new(v.to_vec())
    }

    fn var(d: usize, i: usize) -> ExactMultiPoly {
        ExactMultiPoly::from_univariate(d, i, &ExactPoly::x())
    }

    fn plus1(d: usize, i: usize) -> ExactMultiPoly {
        ExactMultiPoly::from_univariate(d, i, &ExactPoly::from_ints(&[1, 1]))
    }

    #[test]
    fn q_product_examples() {
        assert_eq!(q_product(&kv(&[3, 1]), &kv(&[1, 1])).unwrap(), plus1(2, 0));
        assert_eq!(q_product(&kv(&[2, -4]), &kv(&[2, -4])).unwrap(), ExactMultiPoly::one(2));
        assert_eq!(q_product(&kv(&[3, 3]), &kv(&[1, 1])).unwrap(), plus1(2, 0).mul(&plus1(2, 1)));
    }

    #[test]
    fn q_product_errors() {
        assert!(matches!(q_product(&kv(&[3, 2]), &kv(&[1, 1])), Err(Error::ParityMismatch(s)) if s.contains("coordinate 1")));
        assert!(matches!(q_product(&kv(&[3]), &kv(&[1, 1])), Err(Error::ArityMismatch { .. })));
    }

    #[test]
    fn level3_product_examples() {
        let (l, n) = (kv(&[3, 3]), kv(&[1, 1]));
        let h = var(2, 0).mul(&var(2, 0)).add(&var(2, 1).mul(&var(2, 1)));
        let phi = h.mul(&plus1(2, 0)).mul(&plus1(2, 1));
        assert_eq!(level3_check_product(&phi, &l, &n).unwrap(), ProductOutcome::Accept { h });

        let phi = var(2, 0).mul(&plus1(2, 0)).mul(&plus1(2, 1));
        assert_eq!(
            level3_check_product(&phi, &l, &n).unwrap(),
            ProductOutcome::Reject { witness: ProductWitness::OddExponent { var: 0, exps: vec![1, 0], coefficient: int(1) } }
        );

        let zero = ExactMultiPoly::zero(2);
        assert_eq!(level3_check_product(&zero, &l, &n).unwrap(), ProductOutcome::Accept { h: zero });
    }

    #[test]
    fn unvanished_root_names_variable() {
        let phi = plus1(2, 0);
        let out = level3_check_product(&phi, &kv(&[3, 3]), &kv(&[1, 1])).unwrap();
        assert!(matches!(out, ProductOutcome::Reject { witness: ProductWitness::UnvanishedRoot { var: 1, .. } }));
    }

    #[test]
    fn order_does_not_change_result() {
        let (l, n) = (kv(&[5, -3]), kv(&[1, 1]));
        let q = q_product(&l, &n).unwrap();
        let h = var(2, 0).mul(&var(2, 0)).add(&ExactMultiPoly::constant(2, int(7)));
        let phi = h.mul(&q);
        let a = level3_check_product_with_order(&phi, &l, &n, &[0, 1]).unwrap();
        let b = level3_check_product_with_order(&phi, &l, &n, &[1, 0]).unwrap();
        assert_eq!(a, b);
        assert_eq!(a, ProductOutcome::Accept { h });
    }
}
