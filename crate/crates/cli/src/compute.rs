use std::error::Error;
use std::io;

use clap::ValueEnum;
use zagier_core::exactnum::int;
use zagier_core::vcoeff::{v_umbral, z_recurrence};
use zagier_core::zagier::{alpha, bstar, bstar_poly};

use crate::format::write_rows;
use crate::{Bounds, Format};

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sequence {
    Bstar,
    BstarPoly,
    Alpha,
    V,
    Z,
}

const DEFAULT_MAX_N: u64 = 20;

/// The requested terms as exact strings.
pub fn terms(
    seq: Sequence,
    bounds: Bounds,
    j: Option<i64>,
) -> Result<Vec<(u64, String)>, Box<dyn Error>> {
    if j.is_some() && seq != Sequence::BstarPoly {
        return Err("--j only applies to bstar-poly".into());
    }
    let (lo, hi) = match (bounds.n, bounds.max_n) {
        (Some(n), _) => (n, n),
        (None, max_n) => {
            let lo = if seq == Sequence::V { 0 } else { 1 };
            (lo, max_n.unwrap_or(DEFAULT_MAX_N))
        }
    };
    let mut rows = Vec::new();
    if seq == Sequence::Z {
        let z = z_recurrence(hi);
        for n in lo..=hi {
            rows.push((n, z[n as usize - 1].to_string()));
        }
        return Ok(rows);
    }
    for n in lo..=hi {
        let value = match seq {
            Sequence::Bstar => bstar(n)?.to_string(),
            Sequence::BstarPoly => match j {
                Some(j) => bstar_poly(n)?.eval(&int(j)).to_string(),
                None => bstar_poly(n)?.to_string(),
            },
            Sequence::Alpha => alpha(n)?.to_string(),
            Sequence::V => v_umbral(n).to_string(),
            Sequence::Z => unreachable!(),
        };
        rows.push((n, value));
    }
    Ok(rows)
}

pub fn run(
    seq: Sequence,
    bounds: Bounds,
    j: Option<i64>,
    format: Format,
) -> Result<u8, Box<dyn Error>> {
    let rows = terms(seq, bounds, j)?;
    write_rows(&mut io::stdout().lock(), &rows, format)?;
    Ok(0)
}
