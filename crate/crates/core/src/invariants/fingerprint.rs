use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::arcs::arcs_of_valid;
use super::coloring::{coloring_dimension, is_odd_prime, InvariantError};
use super::group::FiniteGroup;
use super::hom::hom_count_of;
use crate::convert::wgd_to_gauss;
use crate::model::{GaussCode, WeldedGaussDiagram};

/// Which invariants go into a fingerprint.
#[derive(Clone, Debug)]
pub struct FingerprintConfig {
    pub primes: Vec<u64>,
    pub groups: Vec<FiniteGroup>,
}

impl Default for FingerprintConfig {
    fn default() -> Self {
        FingerprintConfig { primes: vec![3, 5, 7], groups: vec![FiniteGroup::symmetric3()] }
    }
}

impl FingerprintConfig {
    /// Looks groups up among the built-ins.
    pub fn new(primes: Vec<u64>, group_names: &[impl AsRef<str>]) -> Result<Self, InvariantError> {
        if let Some(&p) = primes.iter().find(|&&p| !is_odd_prime(p)) {
            return Err(InvariantError::NotOddPrime(p));
        }
        let groups = group_names
            .iter()
            .map(|name| {
                FiniteGroup::builtin(name.as_ref()).ok_or_else(|| InvariantError::UnknownGroup(name.as_ref().to_string()))
            })
            .collect::<Result<_, _>>()?;
        Ok(FingerprintConfig { primes, groups })
    }
}

/// Coloring counts by prime and homomorphism counts by group name.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct InvariantFingerprint {
    pub coloring_counts: BTreeMap<u64, u64>,
    pub hom_counts: BTreeMap<String, u64>,
}

impl fmt::Display for InvariantFingerprint {
    /// `{3: 9, 5: 5, S3: 12}`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let entries: Vec<String> = self
            .coloring_counts
            .iter()
            .map(|(p, c)| format!("{p}: {c}"))
            .chain(self.hom_counts.iter().map(|(g, c)| format!("{g}: {c}")))
            .collect();
        write!(f, "{{{}}}", entries.join(", "))
    }
}

pub fn fingerprint(code: &GaussCode, config: &FingerprintConfig) -> Result<InvariantFingerprint, InvariantError> {
    code.validate()?;
    let structure = arcs_of_valid(code);
    let mut out = InvariantFingerprint::default();
    for &p in &config.primes {
        if !is_odd_prime(p) {
            return Err(InvariantError::NotOddPrime(p));
        }
        let exp = coloring_dimension(&structure, p) as u32;
        let count = p.checked_pow(exp).ok_or(InvariantError::Overflow { base: p, exp })?;
        out.coloring_counts.insert(p, count);
    }
    for g in &config.groups {
        out.hom_counts.insert(g.name().to_string(), hom_count_of(&structure, g));
    }
    Ok(out)
}

pub fn wgd_fingerprint(w: &WeldedGaussDiagram, config: &FingerprintConfig) -> Result<InvariantFingerprint, InvariantError> {
    fingerprint(&wgd_to_gauss(w), config)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn primes_only(primes: &[u64]) -> FingerprintConfig {
        FingerprintConfig::new(primes.to_vec(), &[] as &[&str]).unwrap()
    }

    #[test]
    fn empty_fingerprint() {
        let f = fingerprint(&GaussCode::empty(), &primes_only(&[3, 5])).unwrap();
        assert_eq!(f.to_string(), "{3: 3, 5: 5}");
    }

    #[test]
    fn trefoil_fingerprint() {
        let code: GaussCode = "O1+ U2+ O3+ U1+ O2+ U3+".parse().unwrap();
        assert_eq!(fingerprint(&code, &primes_only(&[3, 5])).unwrap().to_string(), "{3: 9, 5: 5}");
        let full = fingerprint(&code, &FingerprintConfig::default()).unwrap();
        assert_eq!(full.to_string(), "{3: 9, 5: 5, 7: 7, S3: 12}");
    }

    #[test]
    fn diagram_and_code_agree() {
        let code: GaussCode = "O1+ U2- O3+ O2- U1+ U3+".parse().unwrap();
        let w = crate::convert::gauss_to_wgd(&code).unwrap();
        let config = FingerprintConfig::default();
        assert_eq!(fingerprint(&code, &config).unwrap(), wgd_fingerprint(&w, &config).unwrap());
    }

    #[test]
    fn config_errors() {
        assert_eq!(FingerprintConfig::new(vec![4], &["S3"]).unwrap_err(), InvariantError::NotOddPrime(4));
        assert_eq!(
            FingerprintConfig::new(vec![3], &["Q8"]).unwrap_err(),
            InvariantError::UnknownGroup("Q8".into())
        );
    }
}
