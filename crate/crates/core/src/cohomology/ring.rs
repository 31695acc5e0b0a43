use crate::gf2::{BitVec, Echelon, F2Matrix};
use crate::simplicial::OrderedComplex;

use super::cochain::{coboundary_matrix, cup, Cochain};
use super::CohomologyError;

/// Representative cocycles of a basis of `H^k(K; F2)`.
#[derive(Clone, Debug)]
pub struct CohomologyBasis {
    pub degree: usize,
    pub representatives: Vec<Cochain>,
}

impl CohomologyBasis {
    pub fn dim(&self) -> usize {
        self.representatives.len()
    }
}

/// A cohomology class in coordinates of the fixed basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Class {
    pub degree: usize,
    pub coords: BitVec,
}

impl Class {
    pub fn is_zero(&self) -> bool {
        self.coords.is_zero()
    }
}

/// Result of cubing a degree-one class.
#[derive(Clone, Debug)]
pub struct CubeResult {
    pub cube: Cochain,
    pub class: Class,
    pub is_nonzero: bool,
}

/// Coboundary matrices and cohomology bases of one complex, computed once.
#[derive(Clone, Debug)]
pub struct CohomologyRing {
    complex: OrderedComplex,
    coboundaries: Vec<F2Matrix>,
    bases: Vec<CohomologyBasis>,
    // coboundaries (tag zero) followed by basis representatives (unit tags)
    reducers: Vec<Echelon>,
}

fn coboundary_images(m: &F2Matrix) -> Vec<BitVec> {
    m.transpose().rows().to_vec()
}

/// Basis of `H^degree`, built from the nullspace of `delta^degree` modulo the
/// image of `delta^(degree-1)`, lowest pivot first.
pub fn cohomology_basis(k: &OrderedComplex, degree: usize) -> Result<CohomologyBasis, CohomologyError> {
    let delta = coboundary_matrix(k, degree)?;
    let below = if degree == 0 { None } else { Some(coboundary_matrix(k, degree - 1)?) };
    Ok(basis_from(degree, k.count(degree), &delta, below.as_ref()).0)
}

fn basis_from(degree: usize, n: usize, delta: &F2Matrix, below: Option<&F2Matrix>) -> (CohomologyBasis, Echelon) {
    let boundaries = below.map(coboundary_images).unwrap_or_default();
    let cocycles = delta.nullspace();

    let mut probe = Echelon::new(n, 0);
    for b in &boundaries {
        probe.insert(b, BitVec::zeros(0));
    }
    let reps: Vec<Cochain> = cocycles
        .into_iter()
        .filter(|z| probe.insert(z, BitVec::zeros(0)))
        .map(|values| Cochain { degree, values })
        .collect();

    let h = reps.len();
    let mut reducer = Echelon::new(n, h);
    for b in &boundaries {
        reducer.insert(b, BitVec::zeros(h));
    }
    for (i, r) in reps.iter().enumerate() {
        let inserted = reducer.insert(&r.values, BitVec::unit(h, i));
        debug_assert!(inserted);
    }
    (CohomologyBasis { degree, representatives: reps }, reducer)
}

impl CohomologyRing {
    pub fn new(k: &OrderedComplex) -> Result<Self, CohomologyError> {
        let dim = k.dim().ok_or(CohomologyError::EmptyComplex)?;
        let coboundaries: Vec<F2Matrix> = (0..=dim).map(|d| coboundary_matrix(k, d)).collect::<Result<_, _>>()?;
        let mut bases = Vec::new();
        let mut reducers = Vec::new();
        for d in 0..=dim {
            let below = if d == 0 { None } else { Some(&coboundaries[d - 1]) };
            let (b, r) = basis_from(d, k.count(d), &coboundaries[d], below);
            bases.push(b);
            reducers.push(r);
        }
        Ok(Self { complex: k.clone(), coboundaries, bases, reducers })
    }

    pub fn complex(&self) -> &OrderedComplex {
        &self.complex
    }

    pub fn dim(&self) -> usize {
        self.bases.len() - 1
    }

    pub fn coboundary_matrix(&self, degree: usize) -> &F2Matrix {
        &self.coboundaries[degree]
    }

    pub fn basis(&self, degree: usize) -> &CohomologyBasis {
        &self.bases[degree]
    }

    /// Mod-2 Betti numbers `dim H^0 .. dim H^dim`.
    pub fn betti_numbers(&self) -> Vec<usize> {
        self.bases.iter().map(CohomologyBasis::dim).collect()
    }

    pub fn is_cocycle(&self, c: &Cochain) -> bool {
        self.coboundaries[c.degree].mul_vec(&c.values).is_zero()
    }

    /// Coordinates of `[c]`; fails if `c` is not a cocycle.
    pub fn class_of(&self, c: &Cochain) -> Result<Class, CohomologyError> {
        if c.degree > self.dim() {
            return Err(CohomologyError::DegreeOutOfRange { degree: c.degree, dim: self.dim() });
        }
        if !self.is_cocycle(c) {
            return Err(CohomologyError::NotACocycle(c.degree));
        }
        let (rem, coords) = self.reducers[c.degree].reduce(&c.values);
        debug_assert!(rem.is_zero(), "cocycle outside the span of basis and coboundaries");
        Ok(Class { degree: c.degree, coords })
    }

    pub fn is_coboundary(&self, c: &Cochain) -> Result<bool, CohomologyError> {
        Ok(self.class_of(c)?.is_zero())
    }

    /// The basis combination representing `class`.
    pub fn representative(&self, class: &Class) -> Cochain {
        let mut out = Cochain::zero(&self.complex, class.degree);
        for i in class.coords.ones() {
            out = out.add(&self.bases[class.degree].representatives[i]);
        }
        out
    }

    pub fn class(&self, degree: usize, coords: BitVec) -> Class {
        assert_eq!(coords.len(), self.bases[degree].dim(), "coordinate length mismatch");
        Class { degree, coords }
    }

    /// All classes of `H^degree`, in increasing order of their coordinate bit patterns.
    pub fn all_classes(&self, degree: usize) -> Vec<Class> {
        let h = self.bases[degree].dim();
        assert!(h < 16, "too many classes to enumerate");
        (0u32..(1 << h)).map(|m| Class { degree, coords: BitVec::from_bits((0..h).map(|i| m >> i & 1 == 1)) }).collect()
    }

    pub fn cup_classes(&self, a: &Class, b: &Class) -> Result<Class, CohomologyError> {
        let c = cup(&self.complex, &self.representative(a), &self.representative(b))?;
        self.class_of(&c)
    }

    /// `[c]^3`, computed on the basis representative.
    pub fn cup_cube_class(&self, c: &Class) -> Result<CubeResult, CohomologyError> {
        if c.degree != 1 {
            return Err(CohomologyError::DegreeOutOfRange { degree: c.degree, dim: 1 });
        }
        let r = self.representative(c);
        let square = cup(&self.complex, &r, &r)?;
        let cube = cup(&self.complex, &square, &r)?;
        let class = self.class_of(&cube)?;
        let is_nonzero = !class.is_zero();
        Ok(CubeResult { cube, class, is_nonzero })
    }
}

pub fn betti_numbers(k: &OrderedComplex) -> Result<Vec<usize>, CohomologyError> {
    Ok(CohomologyRing::new(k)?.betti_numbers())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simplicial::{barycentric_subdivision, build_primitive, free_quotient, ordered_product, Primitive};

    fn rp2() -> OrderedComplex {
        let sd = barycentric_subdivision(&build_primitive(Primitive::CrossPolytopeBoundary(3)).unwrap()).unwrap();
        let tau = sd.involution.clone().unwrap();
        free_quotient(&sd, &tau).unwrap().complex
    }

    /// Brute force: is `c` equal to `delta b` for some (k-1)-cochain `b`? Solved as a linear system.
    fn is_coboundary_oracle(k: &OrderedComplex, c: &Cochain) -> bool {
        if c.degree == 0 {
            return c.is_zero();
        }
        coboundary_matrix(k, c.degree - 1).unwrap().solve(&c.values).is_some()
    }

    #[test]
    fn betti_of_primitives() {
        let c3 = build_primitive(Primitive::Cycle(3)).unwrap().complex;
        assert_eq!(betti_numbers(&c3).unwrap(), vec![1, 1]);
        let s2 = build_primitive(Primitive::SimplexBoundary(3)).unwrap().complex;
        assert_eq!(betti_numbers(&s2).unwrap(), vec![1, 0, 1]);
        assert_eq!(betti_numbers(&rp2()).unwrap(), vec![1, 1, 1]);
    }

    #[test]
    fn cycle_has_no_h2() {
        let c3 = build_primitive(Primitive::Cycle(3)).unwrap().complex;
        let ring = CohomologyRing::new(&c3).unwrap();
        assert_eq!(ring.dim(), 1);
        assert!(cohomology_basis(&c3, 2).is_err());
    }

    #[test]
    fn projective_plane_square() {
        let k = rp2();
        let ring = CohomologyRing::new(&k).unwrap();
        let x = &ring.basis(1).representatives[0];
        let sq = cup(&k, x, x).unwrap();
        assert!(!is_coboundary_oracle(&k, &sq));
        assert!(!ring.is_coboundary(&sq).unwrap());
    }

    #[test]
    fn torus_products() {
        let c = build_primitive(Primitive::Cycle(3)).unwrap();
        let t = ordered_product(&c, &c).unwrap().complex;
        let ring = CohomologyRing::new(&t).unwrap();
        assert_eq!(ring.betti_numbers(), vec![1, 2, 1]);
        let a = &ring.basis(1).representatives[0];
        let b = &ring.basis(1).representatives[1];
        assert!(!is_coboundary_oracle(&t, &cup(&t, a, b).unwrap()));
        assert!(is_coboundary_oracle(&t, &cup(&t, a, a).unwrap()));
        assert!(is_coboundary_oracle(&t, &cup(&t, b, b).unwrap()));
        assert!(!ring.is_coboundary(&cup(&t, a, b).unwrap()).unwrap());
        assert!(ring.is_coboundary(&cup(&t, a, a).unwrap()).unwrap());
    }

    #[test]
    fn basis_classes_are_independent() {
        let k = rp2();
        let ring = CohomologyRing::new(&k).unwrap();
        for d in 0..=2 {
            for class in ring.all_classes(d).into_iter().skip(1) {
                let r = ring.representative(&class);
                assert!(ring.is_cocycle(&r));
                assert!(!is_coboundary_oracle(&k, &r));
            }
        }
    }

    #[test]
    fn class_of_rejects_non_cocycles() {
        let k = rp2();
        let ring = CohomologyRing::new(&k).unwrap();
        let mut c = Cochain::zero(&k, 1);
        c.values.set(0, true);
        assert!(matches!(ring.class_of(&c), Err(CohomologyError::NotACocycle(1))));
    }
}
