//! Closed forms for the extremal families and the gap bound.

use super::{build_d_alpha, spectral_radius, transmissions, Alpha, SpectraError};
use crate::graph::{apsp, Graph};
use serde::Serialize;

/// Parameters of the lower bound on `Tr_max - μ_α` at order `n`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BoundParams {
    pub n: usize,
    /// 1 for odd `n`, 2 for even `n`.
    pub rho_n: u32,
    /// Smaller root of `(1-α)τ² - [(1-α)n + ρ]τ + ρ = 0`.
    pub tau_n: f64,
    /// `(1-α)·τ_n`.
    pub bound: f64,
    /// Value of the quadratic at `tau_n`.
    pub residual: f64,
}

fn require_order(n: usize, odd: bool) -> Result<(), SpectraError> {
    let (min, reason) = if odd {
        (3, "expected an odd order n >= 3")
    } else {
        (4, "expected an even order n >= 4")
    };
    if n < min || (n % 2 == 1) != odd {
        return Err(SpectraError::InvalidOrder { n, reason });
    }
    Ok(())
}

/// `μ_α(K_{1,2,...,2})` for odd `n`, the larger eigenvalue of the 2x2 quotient
/// `[[α(n-1), (1-α)(n-1)], [1-α, αn + (1-α)(n-1)]]`.
pub fn quotient_mu_odd(n: usize, alpha: Alpha) -> Result<f64, SpectraError> {
    require_order(n, true)?;
    alpha.require_below_one()?;
    let (a, nf) = (alpha.get(), n as f64);
    let e = 1.0 - a;
    let disc = (e * nf + 1.0).powi(2) - 4.0 * e;
    Ok(((1.0 + a) * nf - 1.0 + disc.sqrt()) / 2.0)
}

/// `μ_α` of any `(n-4)`-DVDR graph of even order `n`, from the quotient
/// `[[α(n-1), (1-α)(n-1)], [1-α, α(n+1) + (1-α)n]]`.
pub fn quotient_mu_even_dvdr(n: usize, alpha: Alpha) -> Result<f64, SpectraError> {
    require_order(n, false)?;
    alpha.require_below_one()?;
    let (a, nf) = (alpha.get(), n as f64);
    let e = 1.0 - a;
    let disc = (e * nf + 2.0).powi(2) - 8.0 * e;
    Ok(((1.0 + a) * nf + disc.sqrt()) / 2.0)
}

/// Lower bound `(1-α)τ_n` on the transmission gap of non-transmission-regular
/// graphs of order `n`.
///
/// The smaller root is evaluated in the rationalized form
/// `τ = 2ρ / (A + sqrt(A² - 4ρ(1-α)))`, `A = (1-α)n + ρ`, which avoids the
/// cancellation in `A - sqrt(...)` at large `n`.
pub fn bound_tau(n: usize, alpha: Alpha) -> Result<BoundParams, SpectraError> {
    require_order(n, n % 2 == 1)?;
    alpha.require_below_one()?;
    let rho_n: u32 = if n % 2 == 1 { 1 } else { 2 };
    let rho = rho_n as f64;
    let e = 1.0 - alpha.get();
    let big = e * n as f64 + rho;
    let root = (big * big - 4.0 * rho * e).sqrt();
    let tau_n = 2.0 * rho / (big + root);
    let bound = e * tau_n;
    let residual = e * tau_n * tau_n - big * tau_n + rho;
    Ok(BoundParams {
        n,
        rho_n,
        tau_n,
        bound,
        residual,
    })
}

/// `Tr_max - μ_α` of a connected graph with at least two vertices.
pub fn gap(g: &Graph, alpha: Alpha) -> Result<f64, SpectraError> {
    if g.order() < 2 {
        return Err(SpectraError::InvalidOrder {
            n: g.order(),
            reason: "the gap needs at least two vertices",
        });
    }
    let d = apsp(g)?;
    let t = transmissions(&d);
    let m = build_d_alpha(&d, &t, alpha)?;
    let mu = spectral_radius(&m)?.mu;
    Ok(t.tr_max as f64 - mu)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{make_complete_multipartite, make_cycle, make_path};

    fn a(x: f64) -> Alpha {
        Alpha::new(x).unwrap()
    }

    /// The bound written exactly as the textbook difference of terms.
    fn literal_bound(n: usize, alpha: f64) -> f64 {
        let rho = if n % 2 == 1 { 1.0 } else { 2.0 };
        let e = 1.0 - alpha;
        let big = e * n as f64 + rho;
        (big - (big * big - 4.0 * rho * e).sqrt()) / 2.0
    }

    #[test]
    fn odd_closed_form() {
        assert!((quotient_mu_odd(5, a(0.0)).unwrap() - (2.0 + 2.0 * 2f64.sqrt())).abs() < 1e-14);
        let expected = (6.5 + 10.25f64.sqrt()) / 2.0;
        assert!((quotient_mu_odd(5, a(0.5)).unwrap() - expected).abs() < 1e-14);
        assert!((quotient_mu_odd(3, a(0.0)).unwrap() - (1.0 + 3f64.sqrt())).abs() < 1e-14);
        assert!(quotient_mu_odd(4, a(0.0)).is_err());
        assert!(quotient_mu_odd(1, a(0.0)).is_err());
        assert_eq!(
            quotient_mu_odd(5, Alpha::ONE),
            Err(SpectraError::AlphaNotBelowOne(1.0))
        );
    }

    #[test]
    fn even_closed_form() {
        assert!((quotient_mu_even_dvdr(6, a(0.0)).unwrap() - (3.0 + 14f64.sqrt())).abs() < 1e-14);
        assert!((quotient_mu_even_dvdr(4, a(0.0)).unwrap() - (2.0 + 7f64.sqrt())).abs() < 1e-14);
        let expected = (9.0 + 21f64.sqrt()) / 2.0;
        assert!((quotient_mu_even_dvdr(6, a(0.5)).unwrap() - expected).abs() < 1e-14);
        assert!(quotient_mu_even_dvdr(7, a(0.0)).is_err());
        assert!(quotient_mu_even_dvdr(2, a(0.0)).is_err());
        assert!(quotient_mu_even_dvdr(6, Alpha::ONE).is_err());
    }

    #[test]
    fn bound_examples() {
        let b = bound_tau(5, a(0.0)).unwrap();
        assert_eq!(b.rho_n, 1);
        assert!((b.bound - (3.0 - 2.0 * 2f64.sqrt())).abs() < 1e-15);
        let b = bound_tau(6, a(0.5)).unwrap();
        assert_eq!(b.rho_n, 2);
        assert!((b.bound - (5.0 - 21f64.sqrt()) / 2.0).abs() < 1e-15);
        let b = bound_tau(4, a(0.0)).unwrap();
        assert!((b.bound - (3.0 - 7f64.sqrt())).abs() < 1e-15);
        assert!(bound_tau(2, a(0.0)).is_err());
        assert!(bound_tau(1, a(0.0)).is_err());
        assert!(bound_tau(5, Alpha::ONE).is_err());
    }

    #[test]
    fn stable_form_matches_literal_formula() {
        for n in 3..=62 {
            for k in 0..20 {
                let alpha = k as f64 / 20.0;
                let b = bound_tau(n, a(alpha)).unwrap();
                let lit = literal_bound(n, alpha);
                assert!(
                    (b.bound - lit).abs() <= 1e-12 * lit.max(1.0),
                    "n={n} alpha={alpha}"
                );
            }
        }
    }

    #[test]
    fn gap_examples() {
        let k122 = make_complete_multipartite(&[1, 2, 2]).unwrap();
        assert!((gap(&k122, a(0.0)).unwrap() - (3.0 - 2.0 * 2f64.sqrt())).abs() < 1e-12);
        for alpha in [0.0, 0.3, 0.9, 1.0] {
            assert!(gap(&make_cycle(5).unwrap(), a(alpha)).unwrap().abs() < 1e-12);
        }
        let p4 = gap(&make_path(4).unwrap(), a(0.0)).unwrap();
        assert!((p4 - 0.837722).abs() < 1e-6);
        let split = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert!(matches!(gap(&split, a(0.0)), Err(SpectraError::Graph(_))));
    }
}
