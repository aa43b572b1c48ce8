use super::VerifyError;
use crate::graph::{apsp, Graph};
use crate::spectra::{transmissions, TransmissionVector};
use serde::Serialize;
use std::fmt;

/// Structural class of a connected graph, in priority order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(tag = "tag", rename_all = "snake_case")]
pub enum GraphClass {
    TransmissionRegular,
    /// `K_{1,2,...,2}`: odd order, one hub, complement a perfect matching
    /// on the other vertices.
    ExtremalOdd,
    /// `(n-4)`-DVDR graph of even order; `cycles` are the cycle lengths of
    /// the complement of the hub-deleted graph.
    ExtremalEvenDvdr {
        cycles: Vec<usize>,
    },
    Dvdr {
        r: usize,
    },
    Other,
}

impl GraphClass {
    pub fn is_extremal(&self) -> bool {
        matches!(
            self,
            GraphClass::ExtremalOdd | GraphClass::ExtremalEvenDvdr { .. }
        )
    }
}

impl fmt::Display for GraphClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphClass::TransmissionRegular => f.write_str("TransmissionRegular"),
            GraphClass::ExtremalOdd => f.write_str("ExtremalOdd"),
            GraphClass::ExtremalEvenDvdr { cycles } => {
                let parts: Vec<String> = cycles.iter().map(usize::to_string).collect();
                write!(f, "ExtremalEvenDVDR{{{}}}", parts.join(","))
            }
            GraphClass::Dvdr { r } => write!(f, "Dvdr({r})"),
            GraphClass::Other => f.write_str("Other"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub class: GraphClass,
    pub details: String,
}

/// `Some(r)` if some vertex is adjacent to all others and deleting it leaves
/// an `r`-regular graph. Hubs are tried in label order.
pub fn is_dvdr(g: &Graph) -> Option<usize> {
    let n = g.order();
    if n < 2 {
        return None;
    }
    (0..n)
        .filter(|&v| g.degree(v) == n - 1)
        .find_map(|v| g.delete_vertex(v).ok()?.regular_degree())
}

pub fn classify(g: &Graph) -> Result<Classification, VerifyError> {
    let d = apsp(g)?;
    Ok(classify_with(g, &transmissions(&d)))
}

/// Classification given precomputed transmissions of `g`.
pub(crate) fn classify_with(g: &Graph, t: &TransmissionVector) -> Classification {
    let n = g.order();
    if t.is_regular() {
        return Classification {
            class: GraphClass::TransmissionRegular,
            details: format!("every vertex has transmission {}", t.tr_max),
        };
    }
    let hubs: Vec<usize> = (0..n).filter(|&v| g.degree(v) == n - 1).collect();

    if n % 2 == 1 && hubs.len() == 1 {
        let hub = hubs[0];
        let c = g.complement();
        let matching = (0..n).all(|v| c.degree(v) == usize::from(v != hub));
        if matching {
            return Classification {
                class: GraphClass::ExtremalOdd,
                details: format!(
                    "hub {hub}; complement is a perfect matching on the other {} vertices",
                    n - 1
                ),
            };
        }
    }

    if n.is_multiple_of(2) && n >= 4 {
        for &hub in &hubs {
            let Ok(rest) = g.delete_vertex(hub) else {
                continue;
            };
            if let Some(cycles) = rest.complement().cycle_lengths() {
                return Classification {
                    details: format!(
                        "hub {hub}; remainder is {}-regular, its complement has cycles {:?}",
                        n - 4,
                        cycles
                    ),
                    class: GraphClass::ExtremalEvenDvdr { cycles },
                };
            }
        }
    }

    if let Some(r) = is_dvdr(g) {
        return Classification {
            class: GraphClass::Dvdr { r },
            details: format!("hub adjacent to all vertices, remainder {r}-regular"),
        };
    }
    Classification {
        class: GraphClass::Other,
        details: format!(
            "transmissions range over {}..={}, {} vertices of full degree",
            t.tr_min,
            t.tr_max,
            hubs.len()
        ),
    }
}
