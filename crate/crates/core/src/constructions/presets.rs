//! The three worked availability-code instances.

use std::sync::Arc;

use super::{tamo_barg_code, EvaluationCode, Provenance};
use crate::error::{Error, Result};
use crate::finite_field::{
    additive_subgroup, coset_partition, multiplicative_subgroup, FiniteField, Subgroup,
};
use crate::poly_spaces::{intersect_families, FamilySpec};

/// Field, subgroups and families of a worked instance.
#[derive(Clone, Debug)]
pub struct Preset {
    pub number: u32,
    pub field: Arc<FiniteField>,
    pub subgroups: Vec<Subgroup>,
    pub specs: Vec<FamilySpec>,
    pub default_m: usize,
}

impl Preset {
    pub fn n(&self) -> usize {
        self.specs[0].partition.ground().len()
    }

    pub fn code(&self, m: usize) -> Result<EvaluationCode> {
        let provenance = Provenance::new("tamo-barg")
            .with("example", self.number)
            .with("m", m);
        tamo_barg_code(Arc::clone(&self.field), self.specs.clone(), m, provenance)
    }

    pub fn default_code(&self) -> Result<EvaluationCode> {
        self.code(self.default_m)
    }

    /// Smallest `m` whose truncated space has dimension `k`.
    pub fn m_for_dimension(&self, k: usize) -> Result<usize> {
        let full = intersect_families(&self.field, &self.specs, self.n())?;
        let degrees = full.degrees();
        if k == 0 || k > degrees.len() {
            return Err(Error::InvalidParameters(format!(
                "dimension {k} not available (maximum {})",
                degrees.len()
            )));
        }
        Ok(degrees[k - 1])
    }

    pub fn code_with_dimension(&self, k: usize) -> Result<EvaluationCode> {
        self.code(self.m_for_dimension(k)?)
    }
}

fn additive_preset(
    number: u32,
    field: FiniteField,
    bases: &[&[i64]],
    localities: &[usize],
    default_m: usize,
) -> Result<Preset> {
    let field = Arc::new(field);
    let ground: Vec<_> = field.elements().collect();
    let mut subgroups = Vec::new();
    let mut specs = Vec::new();
    for (basis, &r) in bases.iter().zip(localities) {
        let span: Vec<_> = basis.iter().map(|&e| field.alpha_pow(e)).collect();
        let h = additive_subgroup(&field, &span)?;
        specs.push(FamilySpec::new(coset_partition(&field, &h, &ground)?, r)?);
        subgroups.push(h);
    }
    Ok(Preset {
        number,
        field,
        subgroups,
        specs,
        default_m,
    })
}

/// `(16, k, r = 3, t = 2)` over `GF(16)` with `α^4 = α + 1`; subgroups
/// spanned by `{1, α}` and `{α^2, α^3}`.
pub fn example1() -> Preset {
    let field = FiniteField::new(2, 4, Some(&[1, 1, 0, 0, 1])).expect("x^4 + x + 1 is irreducible");
    additive_preset(1, field, &[&[0, 1], &[2, 3]], &[3, 3], 12).expect("valid instance")
}

/// `(12, 4, r = (3, 2), t = 2)` over `GF(13)` from the multiplicative
/// subgroups generated by 5 and 3.
pub fn example2() -> Preset {
    let field = Arc::new(FiniteField::prime(13).expect("13 is prime"));
    let ground: Vec<_> = field.nonzero_elements().collect();
    let mut subgroups = Vec::new();
    let mut specs = Vec::new();
    for (g, r) in [(5, 3), (3, 2)] {
        let h = multiplicative_subgroup(&field, field.from_u64(g)).expect("nonzero generator");
        let part = coset_partition(&field, &h, &ground).expect("subgroup divides 12");
        specs.push(FamilySpec::new(part, r).expect("locality fits"));
        subgroups.push(h);
    }
    Preset {
        number: 2,
        field,
        subgroups,
        specs,
        default_m: 6,
    }
}

/// `(32, 8, r = (7, 3), t = 2)` over `GF(32)` with `α^5 = α^2 + 1`; subgroups
/// spanned by `{1, α, α^2}` and `{α^3, α^4}`.
pub fn example3() -> Preset {
    let field =
        FiniteField::new(2, 5, Some(&[1, 0, 1, 0, 0, 1])).expect("x^5 + x^2 + 1 is irreducible");
    additive_preset(3, field, &[&[0, 1, 2], &[3, 4]], &[7, 3], 9).expect("valid instance")
}

pub fn example(number: u32) -> Result<Preset> {
    match number {
        1 => Ok(example1()),
        2 => Ok(example2()),
        3 => Ok(example3()),
        _ => Err(Error::InvalidParameters(format!("no example {number}"))),
    }
}

#[cfg(test)]
mod tests {
    use std::collections::HashSet;

    use super::*;
    use crate::constructions::LinearCode;

    fn powers(f: &FiniteField, exps: &[i64]) -> HashSet<crate::FieldElement> {
        let mut s: HashSet<_> = exps.iter().map(|&e| f.alpha_pow(e)).collect();
        s.insert(crate::FieldElement::ZERO);
        s
    }

    #[test]
    fn example1_subgroups_match_listing() {
        let p = example1();
        let h1: HashSet<_> = p.subgroups[0].elements.iter().copied().collect();
        let h2: HashSet<_> = p.subgroups[1].elements.iter().copied().collect();
        assert_eq!(h1, powers(&p.field, &[0, 1, 4]));
        assert_eq!(h2, powers(&p.field, &[2, 3, 6]));
    }

    #[test]
    fn example3_subgroups_match_listing() {
        let p = example3();
        let h: HashSet<_> = p.subgroups[0].elements.iter().copied().collect();
        let h2: HashSet<_> = p.subgroups[1].elements.iter().copied().collect();
        assert_eq!(h, powers(&p.field, &[0, 1, 2, 5, 11, 18, 19]));
        assert_eq!(h2, powers(&p.field, &[3, 4, 21]));
    }

    #[test]
    fn default_dimensions() {
        assert_eq!(example1().default_code().unwrap().dimension(), 9);
        let c2 = example2().default_code().unwrap();
        assert_eq!((c2.length(), c2.dimension(), c2.designed_distance()), (12, 4, 6));
        let c3 = example3().default_code().unwrap();
        assert_eq!((c3.length(), c3.dimension(), c3.designed_distance()), (32, 8, 23));
    }

    #[test]
    fn example1_dimension_to_degree() {
        let p = example1();
        let ms: Vec<_> = (4..=9).map(|k| p.m_for_dimension(k).unwrap()).collect();
        assert_eq!(ms, vec![4, 6, 8, 9, 10, 12]);
    }
}
