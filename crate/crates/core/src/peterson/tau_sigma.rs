use serde::Serialize;

use crate::algebra::partition::Partition;
use crate::algebra::symfunc::SymFunc;
use crate::grothendieck::dual_groth;
use crate::par;

/// `τ_i = g_{R_i}` and `σ_i = Σ_{μ ⊆ R_i} g_μ` for `0 ≤ i ≤ n`, where `R_i` is the
/// `i × (n-i)` rectangle.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TauSigmaTable {
    pub n: usize,
    pub tau: Vec<SymFunc>,
    pub sigma: Vec<SymFunc>,
}

impl TauSigmaTable {
    pub fn tau(&self, i: usize) -> &SymFunc {
        &self.tau[i]
    }

    pub fn sigma(&self, i: usize) -> &SymFunc {
        &self.sigma[i]
    }
}

pub fn tau_sigma(n: usize) -> TauSigmaTable {
    assert!(n >= 1, "n must be positive");
    let inner: Vec<usize> = (1..n).collect();
    let pairs = par::map(&inner, |&i| {
        let tau = dual_groth(&Partition::rectangle(i, n - i));
        let sigma = Partition::in_rectangle(i, n - i)
            .iter()
            .fold(SymFunc::zero(), |acc, mu| acc.add(&dual_groth(mu)));
        (tau, sigma)
    });
    let mut tau = vec![SymFunc::one()];
    let mut sigma = vec![SymFunc::one()];
    for (t, s) in pairs {
        tau.push(t);
        sigma.push(s);
    }
    tau.push(SymFunc::one());
    sigma.push(SymFunc::one());
    TauSigmaTable { n, tau, sigma }
}
