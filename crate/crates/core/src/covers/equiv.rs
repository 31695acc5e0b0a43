use crate::fpgroup::GroupHom2;

use super::model::ManifoldModel;
use super::CoverError;

/// Orbits of `epis` under `phi -> phi . alpha`, for the automorphism
/// generators `alpha` that preserve `w1`.
///
/// Orbits are sorted internally and listed in order of their smallest member.
pub fn equivalence_orbits(model: &ManifoldModel, epis: &[GroupHom2]) -> Result<Vec<Vec<GroupHom2>>, CoverError> {
    model.validate()?;
    let mut maps: Vec<&[crate::fpgroup::Word]> = Vec::new();
    for a in &model.aut_generators {
        if model.w1.precompose(&a.images)? == model.w1 {
            maps.push(&a.images);
            maps.push(&a.inverse);
        }
    }
    let mut sorted: Vec<GroupHom2> = epis.to_vec();
    sorted.sort();
    sorted.dedup();
    let mut orbit_of: Vec<Option<usize>> = vec![None; sorted.len()];
    let mut orbits: Vec<Vec<GroupHom2>> = Vec::new();
    for start in 0..sorted.len() {
        if orbit_of[start].is_some() {
            continue;
        }
        let id = orbits.len();
        orbit_of[start] = Some(id);
        let mut members = vec![sorted[start].clone()];
        let mut i = 0;
        while i < members.len() {
            for m in &maps {
                let image = members[i].precompose(m)?;
                match sorted.binary_search(&image) {
                    Ok(j) if orbit_of[j].is_none() => {
                        orbit_of[j] = Some(id);
                        members.push(image);
                    }
                    Ok(_) => {}
                    Err(_) => {
                        return Err(CoverError::InvalidAut(format!(
                            "image {image} of an epimorphism is not in the set"
                        )))
                    }
                }
            }
            i += 1;
        }
        members.sort();
        orbits.push(members);
    }
    Ok(orbits)
}
