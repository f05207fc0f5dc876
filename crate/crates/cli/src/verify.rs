use std::error::Error;
use std::io::{self, Write};

use clap::ValueEnum;
use zagier_core::classical::{
    chebt_doubling_check, chebu_halfinteger_check, classical_congruence_sweep, proof_scan_mod64,
};
use zagier_core::exactnum::{int, rat};
use zagier_core::report::ReportBuilder;
use zagier_core::series::{
    even_genfun_check, mod8_genfun_check, prop22_check, zagier_genfun_check,
};
use zagier_core::vcoeff::{
    a_poly_check, bell_der_sweep, bell_identity_checks, cross_check_all, f_sum_check,
    hoppe_fk_coeff_check, legendre_inversion_check, nested_identity_check, polynomial_v_check,
    psi_expansion_check, z_mod2_period_check, z_recurrence_check,
};
use zagier_core::zagier::{
    bstar59_check, conjecture_scan, denominator_independence_check, nu2_8n_period_check,
    nu2_theorem_check, odd_index_suite, reflection_check, translation_check, umbral_check,
    value_at_one_check, zagier_congruence_sweep, J_WINDOW,
};
use zagier_core::{Result, VerifyReport};

use crate::{Bounds, EXIT_FAIL};

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Theorem12,
    Period6,
    Period24,
    Identities,
    Vcross,
    Bell,
    Apoly,
    Congruences,
    Conjecture,
    All,
}

/// Fixed seed for the randomized suites, so reports are reproducible.
pub const SEED: u64 = 0x5eed;

#[derive(Debug, Clone, Copy)]
pub struct Limits {
    pub max_n: Option<u64>,
    pub order: Option<u64>,
    pub heavy_max: Option<u64>,
}

impl Limits {
    fn n(&self, default: u64) -> u64 {
        self.max_n.unwrap_or(default)
    }

    fn order(&self, default: u64) -> usize {
        self.order.unwrap_or(default) as usize
    }
}

fn theorem12(l: Limits) -> Result<VerifyReport> {
    nu2_theorem_check(l.n(300))
}

fn period6(l: Limits) -> Result<VerifyReport> {
    let n = l.n(120);
    Ok(VerifyReport::merge(
        "period6",
        vec![nu2_8n_period_check(n)?, odd_index_suite(n | 1)?],
    ))
}

fn period24(l: Limits) -> Result<VerifyReport> {
    mod8_genfun_check(l.order(96))
}

fn identities(l: Limits) -> Result<VerifyReport> {
    let n = l.n(30);
    let order = l.order(40);
    let xs = [int(0), int(1), int(-1), int(-2), int(5), rat(-7, 3)];
    Ok(VerifyReport::merge(
        "identities",
        vec![
            translation_check(n)?,
            value_at_one_check(n)?,
            reflection_check(n)?,
            bstar59_check(n)?,
            umbral_check(n)?,
            odd_index_suite(n)?,
            denominator_independence_check(2 * n, J_WINDOW)?,
            chebu_halfinteger_check(n as usize, -10..=10),
            chebt_doubling_check(n as usize),
            zagier_genfun_check(&xs, order)?,
            even_genfun_check(order)?,
            prop22_check(order.max(64))?,
        ],
    ))
}

fn vcross(l: Limits) -> Result<VerifyReport> {
    let n = l.n(40);
    let heavy = l.heavy_max.unwrap_or(16.min(n));
    Ok(VerifyReport::merge(
        "vcross",
        vec![
            cross_check_all(n, heavy)?,
            z_recurrence_check(n)?,
            z_mod2_period_check((n * 15 / 2).max(6))?,
            legendre_inversion_check(15, 20, SEED)?,
            f_sum_check(n)?,
        ],
    ))
}

fn bell(l: Limits) -> Result<VerifyReport> {
    let n = l.n(10);
    Ok(VerifyReport::merge(
        "bell",
        vec![
            bell_identity_checks(n, 20, SEED)?,
            bell_der_sweep(n, 20, SEED)?,
        ],
    ))
}

fn apoly(l: Limits) -> Result<VerifyReport> {
    let n = l.n(20);
    let order = l.order(14);
    let mut poly_v = ReportBuilder::new("polynomial_v", 1, 5);
    for k in 1..=5u64.min((order as u64).saturating_sub(2)) {
        let ok = polynomial_v_check(k, order)?;
        poly_v.record("d^n V = A_{j,n} form", ok, || format!("n={k} N={order}"));
    }
    Ok(VerifyReport::merge(
        "apoly",
        vec![
            a_poly_check(n)?,
            poly_v.finish(),
            nested_identity_check(6)?,
            hoppe_fk_coeff_check(12)?,
            psi_expansion_check(4, 12),
        ],
    ))
}

fn congruences(l: Limits) -> Result<VerifyReport> {
    let n = l.n(200);
    Ok(VerifyReport::merge(
        "congruences",
        vec![
            classical_congruence_sweep(n, 60)?,
            proof_scan_mod64(n)?,
            zagier_congruence_sweep(n)?,
        ],
    ))
}

fn conjecture(l: Limits) -> Result<VerifyReport> {
    conjecture_scan(l.n(200))
}

/// Runs `suite`; the report carries the suite's command-line name.
pub fn report(suite: Suite, l: Limits) -> Result<VerifyReport> {
    let mut r = suite_report(suite, l)?;
    r.suite = suite
        .to_possible_value()
        .expect("no skipped variants")
        .get_name()
        .to_string();
    Ok(r)
}

fn suite_report(suite: Suite, l: Limits) -> Result<VerifyReport> {
    match suite {
        Suite::Theorem12 => theorem12(l),
        Suite::Period6 => period6(l),
        Suite::Period24 => period24(l),
        Suite::Identities => identities(l),
        Suite::Vcross => vcross(l),
        Suite::Bell => bell(l),
        Suite::Apoly => apoly(l),
        Suite::Congruences => congruences(l),
        Suite::Conjecture => conjecture(l),
        Suite::All => {
            let parts = [
                Suite::Theorem12,
                Suite::Period6,
                Suite::Period24,
                Suite::Identities,
                Suite::Vcross,
                Suite::Bell,
                Suite::Apoly,
                Suite::Congruences,
                Suite::Conjecture,
            ]
            .into_iter()
            .map(|s| report(s, l))
            .collect::<Result<Vec<_>>>()?;
            Ok(VerifyReport::merge("all", parts))
        }
    }
}

pub fn run(
    suite: Suite,
    bounds: Bounds,
    order: Option<u64>,
    heavy_max: Option<u64>,
) -> std::result::Result<u8, Box<dyn Error>> {
    if bounds.n.is_some() {
        return Err("verify takes --max-n, not --n".into());
    }
    let limits = Limits {
        max_n: bounds.max_n,
        order,
        heavy_max,
    };
    let r = report(suite, limits)?;
    let mut out = io::stdout().lock();
    serde_json::to_writer_pretty(&mut out, &r)?;
    writeln!(out)?;
    Ok(if r.passed() { 0 } else { EXIT_FAIL })
}
