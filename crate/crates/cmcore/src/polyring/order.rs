//! Monomial orders.
//!
//! All orders are total, multiplicative, and (because weights are positive)
//! well-orders, so multivariate division terminates. `DegRevLex` with the
//! declaration-order precedence is the default everywhere; `Elimination` is
//! the block refinement used internally by elimination, colon and
//! intersection computations.

use super::monomial::Monomial;
use std::cmp::Ordering;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    /// Pure lexicographic; `prec[0]` is the most significant variable.
    Lex { prec: Vec<usize> },
    /// Total degree, ties broken by reverse lexicographic comparison
    /// (smaller exponent on the least significant variable wins).
    DegRevLex { prec: Vec<usize> },
    /// Weighted total degree (positive weights indexed by variable), ties
    /// broken exactly as in `DegRevLex`.
    WeightedDegRevLex { weights: Vec<u64>, prec: Vec<usize> },
    /// Block order: degrevlex on the `block` variables first (so any monomial
    /// involving a block variable dominates every monomial free of them),
    /// then degrevlex on the remaining variables.
    Elimination { block: Vec<usize>, prec: Vec<usize> },
}

impl MonomialOrder {
    pub fn lex(nvars: usize) -> Self {
        MonomialOrder::Lex { prec: (0..nvars).collect() }
    }

    pub fn degrevlex(nvars: usize) -> Self {
        MonomialOrder::DegRevLex { prec: (0..nvars).collect() }
    }

    pub fn weighted_degrevlex(weights: Vec<u64>) -> Self {
        assert!(weights.iter().all(|&w| w > 0), "weights must be positive");
        let prec = (0..weights.len()).collect();
        MonomialOrder::WeightedDegRevLex { weights, prec }
    }

    /// Block order eliminating the variables in `block`.
    pub fn elimination(block: Vec<usize>, nvars: usize) -> Self {
        debug_assert!(block.iter().all(|&i| i < nvars));
        MonomialOrder::Elimination { block, prec: (0..nvars).collect() }
    }

    pub fn nvars(&self) -> usize {
        match self {
            MonomialOrder::Lex { prec }
            | MonomialOrder::DegRevLex { prec }
            | MonomialOrder::WeightedDegRevLex { prec, .. }
            | MonomialOrder::Elimination { prec, .. } => prec.len(),
        }
    }

    /// Replaces the variable precedence; `prec` must be a permutation of the
    /// variable indices with `prec[0]` most significant.
    pub fn with_precedence(self, prec: Vec<usize>) -> Self {
        let n = self.nvars();
        assert_eq!(prec.len(), n, "precedence must list every variable once");
        let mut seen = vec![false; n];
        for &i in &prec {
            assert!(i < n && !seen[i], "precedence must be a permutation");
            seen[i] = true;
        }
        match self {
            MonomialOrder::Lex { .. } => MonomialOrder::Lex { prec },
            MonomialOrder::DegRevLex { .. } => MonomialOrder::DegRevLex { prec },
            MonomialOrder::WeightedDegRevLex { weights, .. } => {
                MonomialOrder::WeightedDegRevLex { weights, prec }
            }
            MonomialOrder::Elimination { block, .. } => {
                MonomialOrder::Elimination { block, prec }
            }
        }
    }

    /// Total-order comparison: `Greater` means `a` is the larger monomial.
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::Lex { prec } => {
                for &i in prec {
                    match a.exp(i).cmp(&b.exp(i)) {
                        Ordering::Equal => {}
                        o => return o,
                    }
                }
                Ordering::Equal
            }
            MonomialOrder::DegRevLex { prec } => {
                match a.degree().cmp(&b.degree()) {
                    Ordering::Equal => {}
                    o => return o,
                }
                revlex_tiebreak(a, b, prec)
            }
            MonomialOrder::WeightedDegRevLex { weights, prec } => {
                match a.weighted_degree(weights).cmp(&b.weighted_degree(weights)) {
                    Ordering::Equal => {}
                    o => return o,
                }
                revlex_tiebreak(a, b, prec)
            }
            MonomialOrder::Elimination { block, prec } => {
                match a.degree_in(block).cmp(&b.degree_in(block)) {
                    Ordering::Equal => {}
                    o => return o,
                }
                // Degrevlex restricted to the block variables.
                let block_prec: Vec<usize> =
                    prec.iter().copied().filter(|i| block.contains(i)).collect();
                match revlex_tiebreak(a, b, &block_prec) {
                    Ordering::Equal => {}
                    o => return o,
                }
                let rest: Vec<usize> =
                    prec.iter().copied().filter(|i| !block.contains(i)).collect();
                let da: u32 = rest.iter().map(|&i| a.exp(i)).sum();
                let db: u32 = rest.iter().map(|&i| b.exp(i)).sum();
                match da.cmp(&db) {
                    Ordering::Equal => {}
                    o => return o,
                }
                revlex_tiebreak(a, b, &rest)
            }
        }
    }

    pub fn max<'m>(&self, a: &'m Monomial, b: &'m Monomial) -> &'m Monomial {
        if self.cmp(a, b) == Ordering::Less {
            b
        } else {
            a
        }
    }

    /// Short human-readable name for reports.
    pub fn describe(&self) -> String {
        match self {
            MonomialOrder::Lex { .. } => "lex".into(),
            MonomialOrder::DegRevLex { .. } => "degrevlex".into(),
            MonomialOrder::WeightedDegRevLex { weights, .. } => {
                format!("weighted-degrevlex{:?}", weights)
            }
            MonomialOrder::Elimination { block, .. } => format!("elimination{:?}", block),
        }
    }
}

/// Reverse-lexicographic tiebreak over the listed variables: scanning from
/// the least significant variable, the first exponent difference decides,
/// and the monomial with the smaller exponent there is the larger one.
fn revlex_tiebreak(a: &Monomial, b: &Monomial, prec: &[usize]) -> Ordering {
    for &i in prec.iter().rev() {
        match a.exp(i).cmp(&b.exp(i)) {
            Ordering::Equal => {}
            Ordering::Less => return Ordering::Greater,
            Ordering::Greater => return Ordering::Less,
        }
    }
    Ordering::Equal
}
