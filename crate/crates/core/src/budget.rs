use crate::error::{Error, Result};

/// Environment variable that overrides every enumeration limit at once.
pub const BUDGET_ENV: &str = "CHROMABIJ_BUDGET";

/// Upper limits on the brute-force enumerations.
///
/// Every exponential routine checks its work estimate against one of these
/// before it starts and returns [`Error::BudgetExceeded`] instead of running
/// away.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    /// Colorings enumerated by a single call (`t^n`, or `μ^n`).
    pub colorings: u64,
    /// Edge subsets, orientations, search nodes or recursion calls.
    pub subsets: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            colorings: 10_000_000,
            subsets: 1 << 24,
        }
    }
}

impl Budget {
    pub const fn unlimited() -> Self {
        Budget {
            colorings: u64::MAX,
            subsets: u64::MAX,
        }
    }

    /// The default budget, with both limits replaced by `CHROMABIJ_BUDGET`
    /// when that variable holds a positive integer.
    pub fn from_env() -> Result<Self> {
        match std::env::var(BUDGET_ENV) {
            Ok(raw) => {
                let limit: u64 = raw.trim().parse().map_err(|_| {
                    Error::InvalidInput(format!("{BUDGET_ENV}={raw:?} is not a nonnegative integer"))
                })?;
                Ok(Budget {
                    colorings: limit,
                    subsets: limit,
                })
            }
            Err(_) => Ok(Budget::default()),
        }
    }

    pub(crate) fn check_colorings(&self, what: &'static str, base: u64, exp: usize) -> Result<u64> {
        check_power(what, base, exp, self.colorings)
    }

    pub(crate) fn check_subsets(&self, what: &'static str, exp: usize) -> Result<u64> {
        check_power(what, 2, exp, self.subsets)
    }
}

fn check_power(what: &'static str, base: u64, exp: usize, limit: u64) -> Result<u64> {
    let total = u32::try_from(exp).ok().and_then(|e| base.checked_pow(e));
    match total {
        Some(total) if total <= limit => Ok(total),
        _ => Err(Error::BudgetExceeded {
            what,
            needed: format!("{base}^{exp}"),
            limit,
        }),
    }
}
