//! Every route to v_n side by side.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::faa::v_faa_di_bruno;
use super::hoppe::v_hoppe;
use super::methods::{v_cheb_umbral, v_parity, v_series, v_umbral, v_zagier_eval};
use super::recurrence::z_recurrence;
use crate::error::{precondition, Error, Result};
use crate::exactnum::{int, Rational};
use crate::report::{ReportBuilder, VerifyReport};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum VMethod {
    Umbral,
    Parity,
    ZagierEval,
    Series,
    ChebUmbral,
    Recurrence,
    FaaDiBruno,
    Hoppe,
}

impl VMethod {
    pub const ALL: [VMethod; 8] = [
        VMethod::Umbral,
        VMethod::Parity,
        VMethod::ZagierEval,
        VMethod::Series,
        VMethod::ChebUmbral,
        VMethod::Recurrence,
        VMethod::FaaDiBruno,
        VMethod::Hoppe,
    ];

    /// Whether the method produces v_n at this index at all.
    pub fn applies(self, n: u64) -> bool {
        match self {
            VMethod::ChebUmbral | VMethod::Recurrence | VMethod::FaaDiBruno | VMethod::Hoppe => {
                n >= 2 && n % 2 == 0
            }
            _ => n >= 1,
        }
    }

    pub fn is_heavy(self) -> bool {
        matches!(self, VMethod::FaaDiBruno | VMethod::Hoppe)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VMethodResult {
    pub n: u64,
    pub method: VMethod,
    #[serde(with = "crate::exactnum::rational_string")]
    pub value: Rational,
}

/// v_n by one method. The recurrence route computes z_1..z_{n/2} afresh.
pub fn v_by(method: VMethod, n: u64) -> Result<Rational> {
    if !method.applies(n) {
        return Err(if n == 0 {
            Error::ZeroIndex
        } else {
            Error::OddIndex(n)
        });
    }
    match method {
        VMethod::Umbral => Ok(v_umbral(n)),
        VMethod::Parity => v_parity(n),
        VMethod::ZagierEval => v_zagier_eval(n),
        VMethod::Series => v_series(n),
        VMethod::ChebUmbral => v_cheb_umbral(n),
        VMethod::Recurrence => {
            let z = z_recurrence(n / 2);
            Ok(&z[z.len() - 1] / int(2 * n as i64))
        }
        VMethod::FaaDiBruno => v_faa_di_bruno(n),
        VMethod::Hoppe => v_hoppe(n),
    }
}

fn results_at(n: u64, heavy_max: u64, z: &[Rational]) -> Result<Vec<VMethodResult>> {
    VMethod::ALL
        .par_iter()
        .filter(|m| m.applies(n) && (!m.is_heavy() || n <= heavy_max))
        .map(|&method| {
            let value = match method {
                VMethod::Recurrence => &z[n as usize / 2 - 1] / int(2 * n as i64),
                _ => v_by(method, n)?,
            };
            Ok(VMethodResult { n, method, value })
        })
        .collect()
}

/// All methods at every n ≤ `n_max`; the two Laurent pipelines only at even
/// n ≤ `heavy_max`. A disagreement records every result at that n.
pub fn cross_check_all(n_max: u64, heavy_max: u64) -> Result<VerifyReport> {
    if heavy_max > n_max {
        return Err(precondition(
            "cross_check_all",
            format!("heavy_max = {heavy_max} exceeds n_max = {n_max}"),
        ));
    }
    let mut report = ReportBuilder::new("vcross", 1, n_max as i64);
    let z = z_recurrence(n_max / 2);
    let rows: Vec<Result<Vec<VMethodResult>>> = (1..=n_max)
        .into_par_iter()
        .map(|n| results_at(n, heavy_max, &z))
        .collect();
    for (i, row) in rows.into_iter().enumerate() {
        let n = i as u64 + 1;
        let row = row?;
        let first = &row[0].value;
        let light_ok = row
            .iter()
            .filter(|r| !r.method.is_heavy())
            .all(|r| &r.value == first);
        let witness = || {
            row.iter()
                .map(|r| format!("{:?}={}", r.method, r.value))
                .collect::<Vec<_>>()
                .join(", ")
        };
        report.record("light methods agree", light_ok, || {
            format!("n={n}: {}", witness())
        });
        if row.iter().any(|r| r.method.is_heavy()) {
            let heavy_ok = row.iter().all(|r| &r.value == first);
            report.record("Laurent pipelines agree", heavy_ok, || {
                format!("n={n}: {}", witness())
            });
        }
    }
    Ok(report.finish())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;

    #[test]
    fn method_names() {
        let s = serde_json::to_string(&VMethod::FaaDiBruno).unwrap();
        assert_eq!(s, "\"FAA_DI_BRUNO\"");
        let m: VMethod = serde_json::from_str("\"CHEB_UMBRAL\"").unwrap();
        assert_eq!(m, VMethod::ChebUmbral);
    }

    #[test]
    fn n3_all_half() {
        for m in VMethod::ALL.iter().filter(|m| m.applies(3)) {
            assert_eq!(v_by(*m, 3).unwrap(), rat(1, 2));
        }
        assert_eq!(v_by(VMethod::Hoppe, 3), Err(Error::OddIndex(3)));
    }

    #[test]
    fn small_sweep() {
        let r = cross_check_all(14, 6).unwrap();
        assert!(r.passed(), "{:?}", r.failure_summary());
        assert!(cross_check_all(4, 6).is_err());
    }
}
