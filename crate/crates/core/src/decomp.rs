//! Level-two decomposition data over the linear quiver: the Kleshchev test,
//! the sets `Std^μ(λ)` and the ungraded decomposition numbers they give.

use serde::{Deserialize, Serialize};

use crate::cartan::{Multicharge, Quiver};
use crate::error::{Error, Result};
use crate::filtration::{resolution_length, resolution_term};
use crate::partitions::{multipartitions_of, Multipartition, Partition};
use crate::tableaux::{std_mu, Tableau};

fn check_charge(kappa: &Multicharge) -> Result<()> {
    if !kappa.weakly_decreasing() {
        return Err(Error::Precondition(format!("multicharge {kappa} is not weakly decreasing")));
    }
    Ok(())
}

/// `μ^{(l)}_{r + κ_l - κ_{l+1}} ≤ μ^{(l+1)}_r` for all `l` and `r ≥ 1`.
pub fn is_kleshchev(mu: &Multipartition, kappa: &Multicharge) -> Result<bool> {
    check_charge(kappa)?;
    mu.check_level(kappa)?;
    let k = &kappa.entries;
    for l in 1..mu.level() {
        let (upper, lower) = (mu.component(l), mu.component(l + 1));
        let shift = (k[l - 1] - k[l]) as usize;
        for r in 1..=upper.rows() {
            if upper.part(r + shift) > lower.part(r) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Inputs shared by the decomposition-number queries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecompQuery {
    pub lambda: Multipartition,
    pub mu: Multipartition,
    pub charge: Multicharge,
}

impl DecompQuery {
    pub fn new(lambda: Multipartition, mu: Multipartition, charge: Multicharge) -> Result<Self> {
        if lambda.level() != 2 || mu.level() != 2 || charge.level() != 2 {
            return Err(Error::Precondition("decomposition numbers are only available at level two".into()));
        }
        if lambda.size() != mu.size() {
            return Err(Error::SizeMismatch(lambda.size(), mu.size()));
        }
        check_charge(&charge)?;
        Ok(DecompQuery { lambda, mu, charge })
    }

    fn tableaux(&self) -> Result<Vec<Tableau>> {
        std_mu(&self.lambda, &self.mu, &Quiver::linear(), &self.charge)
    }
}

/// `#Std^μ(λ)`, which is the ungraded `[S^λ : D^μ]`; at most one.
pub fn decomposition_number(query: &DecompQuery) -> Result<u8> {
    if !is_kleshchev(&query.mu, &query.charge)? {
        return Err(Error::Precondition(format!("{} is not Kleshchev for {}", query.mu, query.charge)));
    }
    match query.tableaux()?.len() {
        0 => Ok(0),
        1 => Ok(1),
        m => Err(Error::Inconsistent(format!(
            "{m} tableaux in Std^μ(λ) for λ = {}, μ = {}",
            query.lambda, query.mu
        ))),
    }
}

/// The single element of `Std^μ(λ)`, if there is one.
pub fn unique_tableau(query: &DecompQuery) -> Result<Option<Tableau>> {
    let mut found = query.tableaux()?;
    match found.len() {
        0 | 1 => Ok(found.pop()),
        m => Err(Error::Inconsistent(format!("{m} tableaux in Std^μ(λ)"))),
    }
}

/// Outcome of scanning all level-two pairs of size `n` for `#Std^μ(λ) ≥ 2`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct UniquenessScan {
    pub max_n: usize,
    pub pairs: usize,
    pub nonempty: usize,
    pub violations: Vec<(String, String, String, usize)>,
    /// Pairs with `Std^μ(λ)` nonempty but `λ` not dominating `μ`.
    pub dominance_violations: Vec<(String, String, String)>,
}

/// Every `(λ, μ)` of size `≤ max_n` and every charge `(0, -d)` with `0 ≤ d ≤ n`.
pub fn scan_std_mu_unique(max_n: usize) -> Result<UniquenessScan> {
    let q = Quiver::linear();
    let mut scan = UniquenessScan { max_n, ..Default::default() };
    for n in 1..=max_n {
        let shapes = multipartitions_of(n, 2);
        for d in 0..=n as i64 {
            let kappa = Multicharge::new(vec![0, -d]);
            let contents: Vec<_> = shapes.iter().map(|m| m.residue_content(&q, &kappa)).collect::<Result<_>>()?;
            for (a, lambda) in shapes.iter().enumerate() {
                for (b, mu) in shapes.iter().enumerate() {
                    scan.pairs += 1;
                    if contents[a] != contents[b] {
                        continue;
                    }
                    let found = std_mu(lambda, mu, &q, &kappa)?.len();
                    if found >= 1 {
                        scan.nonempty += 1;
                        if !lambda.dominates(mu)? {
                            scan.dominance_violations.push((lambda.to_string(), mu.to_string(), kappa.to_string()));
                        }
                    }
                    if found >= 2 {
                        scan.violations.push((lambda.to_string(), mu.to_string(), kappa.to_string(), found));
                    }
                }
            }
        }
    }
    Ok(scan)
}

/// One unexpected decomposition number in the resolution pattern.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PatternDeviation {
    pub j: usize,
    pub nu: String,
    pub expected: u8,
    pub found: u8,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResolutionDecomposition {
    pub shape: String,
    pub resolution_length: usize,
    pub terms: Vec<String>,
    /// Every `μ_{1,j}` is Kleshchev.
    pub all_kleshchev: bool,
    pub checked: usize,
    pub deviations: Vec<PatternDeviation>,
    /// Set when `|λ|` is over the scan bound; nothing else was checked.
    pub skipped: Option<String>,
}

impl ResolutionDecomposition {
    pub fn passed(&self) -> bool {
        self.skipped.is_none() && self.all_kleshchev && self.deviations.is_empty()
    }
}

/// For the resolution terms `μ_j = μ_{1,j}` of `λ`: `[S^{μ_j} : D^ν] = 1`
/// exactly for `ν ∈ {μ_j, μ_{j+1}}` and `0` for every other Kleshchev `ν` in
/// the block.
pub fn verify_resolution_decomposition(lambda: &Partition, max_n: usize) -> Result<ResolutionDecomposition> {
    let k = resolution_length(lambda, 1)?;
    let mut terms = Vec::with_capacity(k);
    let mut kappa = Multicharge::new(vec![0, -1]);
    for j in 1..=k {
        let (m, c) = resolution_term(lambda, 1, j, 0)?;
        kappa = c;
        terms.push(m);
    }
    let mut all_kleshchev = true;
    for m in &terms {
        all_kleshchev &= is_kleshchev(m, &kappa)?;
    }
    let mut report = ResolutionDecomposition {
        shape: lambda.to_string(),
        resolution_length: k,
        terms: terms.iter().map(|m| m.to_string()).collect(),
        all_kleshchev,
        checked: 0,
        deviations: Vec::new(),
        skipped: None,
    };
    let n = lambda.size();
    if n > max_n {
        report.skipped = Some(format!("n = {n} exceeds the scan bound {max_n}"));
        return Ok(report);
    }
    let q = Quiver::linear();
    let alpha = terms[0].residue_content(&q, &kappa)?;
    let block: Vec<Multipartition> = multipartitions_of(n, 2)
        .into_iter()
        .filter(|nu| nu.residue_content(&q, &kappa).map(|a| a == alpha).unwrap_or(false))
        .filter(|nu| is_kleshchev(nu, &kappa).unwrap_or(false))
        .collect();
    for (j, mj) in terms.iter().enumerate() {
        for nu in &block {
            let expected = u8::from(nu == mj || terms.get(j + 1) == Some(nu));
            let found = decomposition_number(&DecompQuery::new(mj.clone(), nu.clone(), kappa.clone())?)?;
            report.checked += 1;
            if found != expected {
                report.deviations.push(PatternDeviation { j: j + 1, nu: nu.to_string(), expected, found });
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::filtration::simple_dim;
    use crate::partitions::partitions_of;
    use crate::tableaux::enumerate_standard;
    use num_bigint::BigInt;

    fn mp(s: &str) -> Multipartition {
        s.parse().unwrap()
    }

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn kleshchev_examples() {
        let k00 = Multicharge::new(vec![0, 0]);
        assert!(!is_kleshchev(&mp("2|1"), &k00).unwrap());
        assert!(is_kleshchev(&mp("1|2"), &k00).unwrap());
        assert!(is_kleshchev(&mp("∅|3,1"), &k00).unwrap());
        assert!(is_kleshchev(&mp("2|1"), &Multicharge::new(vec![0, -1])).unwrap());
        assert!(is_kleshchev(&mp("1|1"), &Multicharge::new(vec![0, 1])).is_err());
    }

    #[test]
    fn resolution_terms_are_kleshchev() {
        for n in 2..=12 {
            for lambda in partitions_of(n).into_iter().filter(|l| l.rows() >= 2) {
                for i in 1..lambda.rows() {
                    for j in 1..=resolution_length(&lambda, i).unwrap() {
                        let (m, c) = resolution_term(&lambda, i, j, 0).unwrap();
                        if i == 1 {
                            assert!(is_kleshchev(&m, &c).unwrap(), "{lambda} {j}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn decomposition_numbers_small() {
        let kappa = Multicharge::new(vec![0, -1]);
        let lambda = part("2,2,2");
        let terms: Vec<_> = (1..=resolution_length(&lambda, 1).unwrap())
            .map(|j| resolution_term(&lambda, 1, j, 0).unwrap().0)
            .collect();
        let q = |a: &Multipartition, b: &Multipartition| DecompQuery::new(a.clone(), b.clone(), kappa.clone()).unwrap();
        assert_eq!(decomposition_number(&q(&terms[0], &terms[0])).unwrap(), 1);
        assert_eq!(decomposition_number(&q(&terms[0], &terms[1])).unwrap(), 1);
        // the unique tableau agrees with a brute-force filter of all standard tableaux
        let t = unique_tableau(&q(&terms[0], &terms[1])).unwrap().unwrap();
        let target = crate::tableaux::initial_residues(&terms[1], &Quiver::linear(), &kappa);
        let brute: Vec<Tableau> = enumerate_standard(&terms[0])
            .into_iter()
            .filter(|s| s.residue_sequence(&Quiver::linear(), &kappa).unwrap() == target)
            .collect();
        assert_eq!(brute, vec![t]);
        let t = unique_tableau(&q(&terms[0], &terms[0])).unwrap().unwrap();
        assert_eq!(t, Tableau::initial(&terms[0]));

        assert!(DecompQuery::new(mp("1|1"), mp("2|1"), Multicharge::new(vec![0, 0])).is_err());
        let flat = DecompQuery::new(mp("2|1"), mp("2|1"), Multicharge::new(vec![0, 0])).unwrap();
        assert!(matches!(decomposition_number(&flat), Err(Error::Precondition(_))));
        assert_eq!(unique_tableau(&q(&mp("2|∅"), &mp("∅|2"))).unwrap(), None);
    }

    #[test]
    fn std_mu_is_at_most_one() {
        let scan = scan_std_mu_unique(6).unwrap();
        assert!(scan.violations.is_empty(), "{:?}", scan.violations);
        assert!(scan.dominance_violations.is_empty(), "{:?}", scan.dominance_violations);
        assert!(scan.nonempty > 0);
    }

    #[test]
    fn resolution_pattern() {
        for s in ["2,2,2", "3,2", "2,2,1", "3,3,2,2", "2,1,1", "3,3,3"] {
            let r = verify_resolution_decomposition(&part(s), 10).unwrap();
            assert!(r.passed(), "{r:?}");
            assert!(r.checked > 0);
        }
        assert_eq!(verify_resolution_decomposition(&part("3,2"), 10).unwrap().resolution_length, 1);
        let r = verify_resolution_decomposition(&part("5,5,4,2,2"), 10).unwrap();
        assert!(r.skipped.is_some());
        assert!(!r.passed());
    }

    #[test]
    fn specht_dims_split_into_simple_dims() {
        for n in 3..=10 {
            for lambda in partitions_of(n).into_iter().filter(|l| l.rows() >= 2) {
                let k = resolution_length(&lambda, 1).unwrap();
                for j in 1..=k {
                    let s = BigInt::from(resolution_term(&lambda, 1, j, 0).unwrap().0.count_std());
                    let next = if j < k { simple_dim(&lambda, j + 1).unwrap() } else { BigInt::from(0) };
                    assert_eq!(s, simple_dim(&lambda, j).unwrap() + next, "{lambda} {j}");
                }
            }
        }
    }
}
