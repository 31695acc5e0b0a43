use crate::gf2::{BitVec, F2Matrix};
use crate::simplicial::OrderedComplex;

use super::CohomologyError;

/// An F2-valued function on the k-simplices of a fixed complex, indexed in the
/// complex's simplex order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Cochain {
    pub degree: usize,
    pub values: BitVec,
}

impl Cochain {
    pub fn zero(k: &OrderedComplex, degree: usize) -> Self {
        Self { degree, values: BitVec::zeros(k.count(degree)) }
    }

    pub fn is_zero(&self) -> bool {
        self.values.is_zero()
    }

    pub fn add(&self, other: &Cochain) -> Cochain {
        assert_eq!(self.degree, other.degree, "degree mismatch");
        let mut values = self.values.clone();
        values.xor_assign(&other.values);
        Cochain { degree: self.degree, values }
    }

    pub fn value_on(&self, k: &OrderedComplex, simplex: &[u32]) -> bool {
        let i = k.index_of(simplex).expect("simplex in complex");
        self.values.get(i)
    }
}

/// Matrix of `delta: C^k -> C^{k+1}`; rows are (k+1)-simplices, columns k-simplices.
/// In the top degree the matrix has no rows.
pub fn coboundary_matrix(k: &OrderedComplex, degree: usize) -> Result<F2Matrix, CohomologyError> {
    let dim = k.dim().unwrap_or(0);
    if k.dim().is_none() || degree > dim {
        return Err(CohomologyError::DegreeOutOfRange { degree, dim });
    }
    let cols = k.count(degree);
    let rows = k
        .simplices(degree + 1)
        .iter()
        .map(|s| {
            let mut row = BitVec::zeros(cols);
            for skip in 0..s.len() {
                let face: Vec<u32> = s.iter().enumerate().filter(|&(i, _)| i != skip).map(|(_, &v)| v).collect();
                row.set(k.index_of(&face).expect("face closure"), true);
            }
            row
        })
        .collect();
    Ok(F2Matrix::from_rows(cols, rows))
}

pub fn coboundary(k: &OrderedComplex, c: &Cochain) -> Cochain {
    let m = coboundary_matrix(k, c.degree).expect("cochain degree within complex dimension");
    Cochain { degree: c.degree + 1, values: m.mul_vec(&c.values) }
}

pub fn is_cocycle(k: &OrderedComplex, c: &Cochain) -> bool {
    coboundary(k, c).is_zero()
}

/// Alexander-Whitney cup product: front p-face times back q-face in the global vertex order.
pub fn cup(k: &OrderedComplex, a: &Cochain, b: &Cochain) -> Result<Cochain, CohomologyError> {
    let (p, q) = (a.degree, b.degree);
    let dim = k.dim().unwrap_or(0);
    if p + q > dim {
        return Err(CohomologyError::DegreeOutOfRange { degree: p + q, dim });
    }
    let simplices = k.simplices(p + q);
    let mut values = BitVec::zeros(simplices.len());
    for (i, s) in simplices.iter().enumerate() {
        if a.value_on(k, &s[..=p]) && b.value_on(k, &s[p..]) {
            values.set(i, true);
        }
    }
    Ok(Cochain { degree: p + q, values })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simplicial::{build_primitive, Primitive};

    #[test]
    fn circle_coboundary() {
        let c3 = build_primitive(Primitive::Cycle(3)).unwrap().complex;
        let d0 = coboundary_matrix(&c3, 0).unwrap();
        assert_eq!((d0.nrows(), d0.ncols()), (3, 3));
        assert_eq!(d0.rank(), 2);
        assert_eq!(coboundary_matrix(&c3, 1).unwrap().nrows(), 0);
        assert!(coboundary_matrix(&c3, 2).is_err());
    }

    #[test]
    fn delta_squared_vanishes() {
        let s2 = build_primitive(Primitive::SimplexBoundary(3)).unwrap().complex;
        let d0 = coboundary_matrix(&s2, 0).unwrap();
        let d1 = coboundary_matrix(&s2, 1).unwrap();
        assert!(d1.mul(&d0).is_zero());
    }

    #[test]
    fn point_has_empty_coboundary() {
        let pt = OrderedComplex::from_facets(1, vec![]).unwrap();
        let m = coboundary_matrix(&pt, 0).unwrap();
        assert_eq!((m.nrows(), m.ncols()), (0, 1));
        assert!(coboundary(&pt, &Cochain::zero(&pt, 0)).is_zero());
        assert!(matches!(coboundary_matrix(&pt, 1), Err(CohomologyError::DegreeOutOfRange { .. })));
    }

    #[test]
    fn cup_with_zero_is_zero() {
        let c = build_primitive(Primitive::Cycle(3)).unwrap();
        let t = crate::simplicial::ordered_product(&c, &c).unwrap().complex;
        let mut a = Cochain::zero(&t, 1);
        a.values.set(0, true);
        assert!(cup(&t, &a, &Cochain::zero(&t, 1)).unwrap().is_zero());
        assert!(cup(&t, &Cochain::zero(&t, 1), &a).unwrap().is_zero());
        assert!(cup(&t, &cup(&t, &a, &a).unwrap(), &a).is_err());
    }
}
