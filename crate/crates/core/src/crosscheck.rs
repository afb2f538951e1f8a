//! Fast formulas checked against brute force and against each other.

use crate::budget::Budget;
use crate::classify::{wei_dual_weights, ClassificationReport};
use crate::duality::{dual_normalized_moments, dual_rank_distribution, dual_zeta, moment_table, moments_of_dual_to_primal, primal_to_dual_moments};
use crate::error::{Error, Result};
use crate::gflinalg::{col_space, enumerate_subspaces, row_space, Subspace};
use crate::invariants::{
    bernstein_expansion, binomial_moments, distribution_to_moments, moments_to_distribution, normalized_moment_with,
    normalized_moments, rank_distribution, rank_distribution_oracle_with, weight_enumerator, Analysis,
    InvariantProfile,
};
use crate::par::ExecMode;
use crate::qcombinat::rational::{int, to_string};
use crate::qcombinat::{qbin, HomogeneousPoly};
use crate::rmcode::{optimal_anticodes, RankMetricCode, SupportKind};
use crate::zeta::{beta_coefficients, default_order, enumerator_from_zeta, zeta_polynomial, zeta_series};
use num_traits::Zero;
use std::fmt;

/// Outcome of one check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail(String),
    Skip(String),
}

impl Status {
    pub fn label(&self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail(_) => "FAIL",
            Status::Skip(_) => "SKIP",
        }
    }
}

/// A named check and its outcome.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub status: Status,
}

/// Results of every check run on one code.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CrossCheckReport {
    pub checks: Vec<Check>,
}

impl CrossCheckReport {
    pub fn failures(&self) -> Vec<&Check> {
        self.checks.iter().filter(|c| matches!(c.status, Status::Fail(_))).collect()
    }

    pub fn passed(&self) -> bool {
        self.failures().is_empty()
    }

    pub fn count(&self, label: &str) -> usize {
        self.checks.iter().filter(|c| c.status.label() == label).count()
    }

    fn push(&mut self, name: &'static str, outcome: Result<Option<String>>) {
        let status = match outcome {
            Ok(None) => Status::Pass,
            Ok(Some(msg)) => Status::Fail(msg),
            Err(e @ Error::BudgetExceeded { .. }) => Status::Skip(e.to_string()),
            Err(e) => Status::Fail(e.to_string()),
        };
        self.checks.push(Check { name, status });
    }
}

impl fmt::Display for CrossCheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self.checks.iter().map(|c| c.name.len()).max().unwrap_or(0);
        for c in &self.checks {
            write!(f, "{:<width$}  {}", c.name, c.status.label())?;
            match &c.status {
                Status::Pass => writeln!(f)?,
                Status::Fail(m) | Status::Skip(m) => writeln!(f, "  {m}")?,
            }
        }
        write!(
            f,
            "{} pass, {} fail, {} skip",
            self.count("PASS"),
            self.count("FAIL"),
            self.count("SKIP")
        )
    }
}

fn rat_mismatch(what: &str, i: usize, fast: &[num_rational::BigRational], slow: &[num_rational::BigRational]) -> Option<String> {
    if fast.len() != slow.len() {
        return Some(format!("{what}, i = {i}: lengths {} vs {}", fast.len(), slow.len()));
    }
    fast.iter()
        .zip(slow)
        .position(|(x, y)| x != y)
        .map(|u| format!("{what}, i = {i}, entry {u}: {} vs {}", to_string(&fast[u]), to_string(&slow[u])))
}

fn over_indices(k: usize, mut f: impl FnMut(usize) -> Result<Option<String>>) -> Result<Option<String>> {
    for i in 0..=k {
        if let Some(msg) = f(i)? {
            return Ok(Some(msg));
        }
    }
    Ok(None)
}

fn poly_mismatch(what: &str, i: usize, fast: &HomogeneousPoly, slow: &HomogeneousPoly) -> Option<String> {
    (fast != slow).then(|| format!("{what}, i = {i}: {fast} vs {slow}"))
}

/// Every codeword of `code`, enumerated.
fn codewords(code: &RankMetricCode, budget: &Budget) -> Result<Vec<crate::gflinalg::FqMatrix>> {
    let total = code.codeword_count(budget.codewords)?;
    Ok((0..total).map(|idx| code.codeword(idx)).collect())
}

fn supported_by_filter(code: &RankMetricCode, words: &[crate::gflinalg::FqMatrix], kind: SupportKind, u: &Subspace) -> u64 {
    let f = code.field();
    words
        .iter()
        .filter(|w| match kind {
            SupportKind::Column => col_space(f, w).is_subspace_of(f, u),
            SupportKind::Row => row_space(f, w).is_subspace_of(f, u),
        })
        .count() as u64
}

/// Run every check in scope for `code`.
pub fn run(code: &RankMetricCode, budget: &Budget, mode: ExecMode) -> Result<CrossCheckReport> {
    let a = Analysis::with_mode(code, budget, mode)?;
    let d = a.swapped();
    let (n, m, k, q) = (a.n(), a.m(), a.k(), a.q());
    let mut r = CrossCheckReport::default();

    r.push("weights-vs-min-distance", (|| {
        let direct = code.min_distance(budget)?;
        Ok((direct != a.d()).then(|| format!("d_1 = {} but the least codeword rank is {direct}", a.d())))
    })());

    r.push("wei-duality", (|| {
        let via = wei_dual_weights(&a.weights, n, m)?;
        Ok((via != a.dual_weights).then(|| format!("{:?} vs {:?}", via.as_slice(), a.dual_weights.as_slice())))
    })());

    r.push("distribution-vs-oracle", over_indices(k, |i| {
        let fast = rank_distribution(&a, i)?;
        let slow = rank_distribution_oracle_with(code, i, budget, mode)?;
        Ok(rat_mismatch("A", i, &fast, &slow))
    }));

    r.push("weights-vs-distribution", over_indices(k, |i| {
        let dist = rank_distribution(&a, i)?;
        let first = dist.iter().position(|x| !x.is_zero()).unwrap_or(n + 1);
        Ok((first != a.d_i(i)).then(|| format!("i = {i}: d_i = {} but A is first nonzero at {first}", a.d_i(i))))
    }));

    r.push("moments-round-trip", over_indices(k, |i| {
        let b = binomial_moments(&a, i)?;
        Ok(rat_mismatch("B", i, &distribution_to_moments(&moments_to_distribution(&b, q), q), &b))
    }));

    r.push("moment-closed-forms", over_indices(k, |i| {
        let b = binomial_moments(&a, i)?;
        let (di, dp) = (a.d_i(i), a.d_perp());
        for (u, x) in b.iter().enumerate() {
            let expect = if u < di {
                Some(int(0))
            } else if u + dp > n {
                Some(qbin(n as i64, u as i64, q) * qbin(k as i64 - (m * (n - u)) as i64, i as i64, q))
            } else {
                None
            };
            if let Some(e) = expect {
                if *x != e {
                    return Ok(Some(format!("i = {i}, u = {u}: {} vs {}", to_string(x), to_string(&e))));
                }
            }
        }
        let total: num_rational::BigRational = rank_distribution(&a, i)?.into_iter().sum();
        let want = qbin(k as i64, i as i64, q);
        Ok((total != want).then(|| format!("i = {i}: sum of A is {} not {}", to_string(&total), to_string(&want))))
    }));

    let kmax = k.max(d.k());
    r.push("macwilliams", over_indices(k, |i| {
        let via = moments_of_dual_to_primal(&moment_table(&d, i), i, n, m, k, q)?;
        Ok(rat_mismatch("B", i, &via, &binomial_moments(&a, i)?))
    }));

    r.push("macwilliams-inverse", (|| {
        let via = primal_to_dual_moments(&moment_table(&a, kmax), kmax, n, m, k, q)?;
        let direct = moment_table(&d, kmax);
        for i in 0..=kmax {
            if let Some(msg) = rat_mismatch("dual B", i, &via[i], &direct[i]) {
                return Ok(Some(msg));
            }
        }
        Ok(None)
    })());

    r.push("dual-rank-distribution", over_indices(k, |i| {
        let dists: Vec<_> = (0..=i)
            .map(|j| if j <= d.k() { rank_distribution(&d, j) } else { Ok(vec![int(0); n + 1]) })
            .collect::<Result<_>>()?;
        let via = dual_rank_distribution(&dists, i, n, m, k, q)?;
        Ok(rat_mismatch("A", i, &via, &rank_distribution(&a, i)?))
    }));

    r.push("dual-normalized-moments", over_indices(k, |i| {
        let via = dual_normalized_moments(&d, i)?;
        Ok(rat_mismatch("b", i, &via, &normalized_moments(&a, i)?))
    }));

    r.push("dual-zeta", over_indices(k, |i| {
        let order = default_order(&a, i);
        let via = dual_zeta(&d, i, order)?;
        Ok(rat_mismatch("Z", i, via.coeffs(), zeta_series(&a, i, order)?.coeffs()))
    }));

    r.push("zeta-polynomial", over_indices(k, |i| zeta_polynomial(&a, i, default_order(&a, i)).map(|_| None)));

    r.push("enumerator-from-zeta", over_indices(k, |i| {
        Ok(poly_mismatch("W", i, &enumerator_from_zeta(&a, i)?, &weight_enumerator(&a, i)?))
    }));

    r.push("bernstein", over_indices(k, |i| {
        Ok(poly_mismatch("W", i, &bernstein_expansion(&a, i)?.reconstruct(q)?, &weight_enumerator(&a, i)?))
    }));

    r.push("beta-routes", over_indices(k, |i| {
        let w = weight_enumerator(&a, i)?;
        for tau in 0..m {
            match beta_coefficients(&a, i, tau, None) {
                Ok(e) => {
                    if let Some(msg) = poly_mismatch(&format!("W via beta (tau = {tau})"), i, &e.enumerator(), &w) {
                        return Ok(Some(msg));
                    }
                }
                Err(Error::DegenerateReference { .. }) => {}
                Err(e) => return Err(e),
            }
        }
        Ok(None)
    }));

    let words = codewords(code, budget);
    r.push("supported-subcode-vs-filter", (|| {
        let words = words.clone()?;
        for (kind, ambient) in [(SupportKind::Column, n), (SupportKind::Row, m)] {
            for u in 0..=ambient {
                for space in enumerate_subspaces(q, ambient, u, budget.subspaces)?.iter() {
                    let fast = code.supported_dim(kind, &space)?;
                    let sub = code.supported_subcode(kind, &space)?;
                    let count = supported_by_filter(code, &words, kind, &space);
                    if sub.k() != fast || num_traits::pow(q as u128, fast) != count as u128 {
                        return Ok(Some(format!("{kind:?} support of dimension {u}: dim {fast}, {count} codewords")));
                    }
                }
            }
        }
        Ok(None)
    })());

    r.push("code-support-vs-filter", (|| {
        let words = words.clone()?;
        let f = code.field();
        let (col, row) = code.code_supports();
        let (mut c, mut w) = (Subspace::zero(n), Subspace::zero(m));
        for x in &words {
            c = c.sum(f, &col_space(f, x))?;
            w = w.sum(f, &row_space(f, x))?;
        }
        Ok((c != col || w != row).then(|| format!("supports have dimensions ({}, {}) vs ({}, {})", col.dim(), row.dim(), c.dim(), w.dim())))
    })());

    r.push("anticode-meet-counting", (|| {
        let words = words.clone()?;
        let dual_words = codewords(&d.code, budget)?;
        for u in 0..=n {
            for anticode in optimal_anticodes(n, m, q, u, budget)? {
                let perp = anticode.dual(code);
                let here = words.iter().filter(|x| anticode.contains(code, x)).count() as u128;
                let there = dual_words.iter().filter(|x| perp.contains(code, x)).count() as u128;
                let e = k as i64 - (m * (n - u)) as i64;
                let (lhs, rhs) = if e >= 0 {
                    (here, there * num_traits::pow(q as u128, e as usize))
                } else {
                    (here * num_traits::pow(q as u128, (-e) as usize), there)
                };
                let meet = num_traits::pow(q as u128, anticode.meet_dim(code)?);
                if lhs != rhs || meet != here {
                    return Ok(Some(format!("{:?} anticode with u = {u}: {here} vs {there} codewords", anticode.kind)));
                }
            }
        }
        Ok(None)
    })());

    r.push("classification-consistency", (|| {
        let v = ClassificationReport::compute(&a).violations();
        Ok((!v.is_empty()).then(|| v.join("; ")))
    })());

    Ok(r)
}

/// Check a stored profile against the identities it must satisfy, in order,
/// and finally against a recomputation from `code`. Returns the name of the
/// first violated identity.
pub fn check_profile(code: &RankMetricCode, p: &InvariantProfile, budget: &Budget) -> Result<Option<String>> {
    let a = Analysis::new(code, budget)?;
    let (n, k, q) = (a.n(), a.k(), a.q());
    let i = p.i;
    if i > k {
        return Ok(Some(format!("index i = {i} exceeds the dimension {k}")));
    }
    let shape = |v: &[num_rational::BigRational]| v.len() == n + 1;
    if !shape(&p.moments) || !shape(&p.distribution) || p.enumerator.degree() != n {
        return Ok(Some(format!("B, A and W must have {} entries", n + 1)));
    }
    if moments_to_distribution(&p.moments, q) != p.distribution {
        return Ok(Some("A is the inversion of B".into()));
    }
    if p.enumerator.coeffs() != p.distribution.as_slice() {
        return Ok(Some("W has coefficients A".into()));
    }
    let total: num_rational::BigRational = p.distribution.iter().sum();
    if total != qbin(k as i64, i as i64, q) {
        return Ok(Some("A sums to the number of i-dimensional subcodes".into()));
    }
    if p.d_i != a.d_i(i) {
        return Ok(Some("d_i is the i-th generalized weight".into()));
    }
    if p.distribution[..p.d_i.min(n + 1)].iter().any(|x| !x.is_zero()) {
        return Ok(Some("A vanishes below d_i".into()));
    }
    let normalized: Vec<_> = (0..=(n as i64 - p.d_i as i64))
        .map(|u| normalized_moment_with(&a, &p.moments, i, u))
        .collect();
    if normalized != p.normalized {
        return Ok(Some("b_u is B_(u+d_i) normalized".into()));
    }
    if p.moments != binomial_moments(&a, i)? {
        return Ok(Some("B matches the binomial moments of the code".into()));
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::example;
    use crate::random::RandomSpec;

    #[test]
    fn c1_passes_everything() {
        let r = run(&example(1), &Budget::default(), ExecMode::default()).unwrap();
        assert!(r.passed(), "{r}");
        assert_eq!(r.count("SKIP"), 0, "{r}");
    }

    #[test]
    fn random_code_passes() {
        let c = "n=3 m=3 k=4 q=2 seed=7".parse::<RandomSpec>().unwrap().build().unwrap();
        let r = run(&c, &Budget::default(), ExecMode::default()).unwrap();
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn tight_budget_skips() {
        let r = run(&example(1), &Budget { subcodes: 10, codewords: 10, ..Budget::default() }, ExecMode::default()).unwrap();
        assert!(r.passed());
        assert!(r.count("SKIP") > 0);
    }

    #[test]
    fn corrupted_profile_names_identity() {
        let b = Budget::default();
        let c = example(1);
        let a = Analysis::new(&c, &b).unwrap();
        let mut p = InvariantProfile::compute(&a, 2).unwrap();
        assert_eq!(check_profile(&c, &p, &b).unwrap(), None);
        p.distribution[2] = int(14);
        assert_eq!(check_profile(&c, &p, &b).unwrap().unwrap(), "A is the inversion of B");
    }
}
