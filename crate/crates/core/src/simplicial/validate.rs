use std::collections::HashMap;

use super::complex::{OrderedComplex, Simplex};
use crate::cohomology::betti_numbers;

/// Outcome of the closed 3-complex checks. Failures are collected, not thrown.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub betti: Vec<usize>,
    pub failures: Vec<String>,
}

impl ValidationReport {
    pub fn is_ok(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks that every triangle lies in exactly two tetrahedra, the complex is
/// connected, `dim H^3 = 1` and the mod-2 Betti numbers are symmetric.
pub fn validate_closed_3complex(k: &OrderedComplex) -> ValidationReport {
    let mut report = ValidationReport::default();
    if k.dim() != Some(3) {
        report.failures.push(format!("dimension is {:?}, expected 3", k.dim()));
        return report;
    }
    let mut degree: HashMap<Simplex, usize> = k.simplices(2).iter().map(|t| (t.clone(), 0)).collect();
    for tet in k.simplices(3) {
        for skip in 0..4 {
            let mut face = tet.clone();
            face.remove(skip);
            *degree.get_mut(&face).expect("face closure") += 1;
        }
    }
    for tri in k.simplices(2) {
        let d = degree[tri];
        if d != 2 {
            let noun = if d == 1 { "tetrahedron" } else { "tetrahedra" };
            report.failures.push(format!("triangle {tri:?} in {d} {noun}"));
        }
    }
    if !k.is_connected() {
        report.failures.push("complex is not connected".into());
    }
    match betti_numbers(k) {
        Ok(b) => {
            if b[3] != 1 {
                report.failures.push(format!("dim H^3 = {}, expected 1", b[3]));
            }
            if (0..=3).any(|i| b[i] != b[3 - i]) {
                report.failures.push(format!("Betti numbers {b:?} are not symmetric"));
            }
            report.betti = b;
        }
        Err(e) => report.failures.push(format!("cohomology failed: {e}")),
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simplicial::{build_primitive, Primitive};

    #[test]
    fn three_sphere_passes() {
        let s3 = build_primitive(Primitive::SimplexBoundary(4)).unwrap().complex;
        let r = validate_closed_3complex(&s3);
        assert!(r.is_ok(), "{:?}", r.failures);
        assert_eq!(r.betti, vec![1, 0, 0, 1]);
    }

    #[test]
    fn dangling_triangle_is_reported() {
        let mut facets = build_primitive(Primitive::SimplexBoundary(4)).unwrap().complex.facets();
        facets.push(vec![0, 1, 5]);
        let k = OrderedComplex::from_facets(6, facets).unwrap();
        let r = validate_closed_3complex(&k);
        assert!(r.failures.iter().any(|f| f == "triangle [0, 1, 5] in 0 tetrahedra"));

        let mut facets = build_primitive(Primitive::SimplexBoundary(4)).unwrap().complex.facets();
        facets.pop();
        let k = OrderedComplex::from_facets(5, facets).unwrap();
        let r = validate_closed_3complex(&k);
        assert!(r.failures.iter().any(|f| f.ends_with("in 1 tetrahedron")));
        assert!(r.failures.iter().any(|f| f.starts_with("dim H^3")));
    }

    #[test]
    fn surfaces_are_rejected() {
        let s2 = build_primitive(Primitive::SimplexBoundary(3)).unwrap().complex;
        assert!(!validate_closed_3complex(&s2).is_ok());
    }
}
