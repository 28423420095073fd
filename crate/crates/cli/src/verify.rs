//! Brute-force sweeps behind `pieri verify`.
//!
//! Every sweep compares a fast path in `pieri-core` against an independent
//! route in `pieri_core::oracle` and stops at the first disagreement.

use std::io::Write;

use num_bigint::{BigInt, BigUint};
use num_traits::One;
use serde_json::{json, Value};

use pieri_core::oracle::{
    character_inner_product_young, count_ssyt, count_syt, gl_double_cosets_tiny, induced_character_decomposition,
    schur_weyl_total, CharacterTable, Content, MAX_INDUCTION_N,
};
use pieri_core::partitions::{dominance_by_box_moves, enumerate_partitions};
use pieri_core::pieri::pieri_expand_sn;
use pieri_core::qside::{flag_variety_size, parabolic_codimension, sps_dimensions};
use pieri_core::tabloid::{count_01_tables, count_contingency_tables};
use pieri_core::{KostkaTable, Partition, QPoly};

use crate::{Failure, Format, Suite};

const DOMINANCE_MAX_N: usize = 10;
const INTERTWINE_MAX_N: usize = 7;
const KOSTKA_MAX_N: usize = 8;
const SCHUR_WEYL_MAX_N: usize = 5;
const SCHUR_WEYL_MAX_L: usize = 8;
const QDIM_MAX_N: usize = 8;
const TINY_FIELDS: [(usize, u32); 3] = [(2, 2), (2, 3), (3, 2)];

#[derive(Clone, Debug)]
pub struct SuiteResult {
    pub suite: &'static str,
    /// Largest n the sweep actually reached.
    pub max_n: usize,
    pub cases: u64,
    /// First counterexample, if any.
    pub failure: Option<String>,
}

type Sweep = fn(usize, &mut u64) -> Result<(), String>;

const SWEEPS: [(Suite, &str, usize, Sweep); 7] = [
    (Suite::Dominance, "dominance", DOMINANCE_MAX_N, dominance),
    (Suite::Intertwine, "intertwine", INTERTWINE_MAX_N, intertwine),
    (Suite::Pieri, "pieri", MAX_INDUCTION_N, pieri),
    (Suite::Kostka, "kostka", KOSTKA_MAX_N, kostka),
    (Suite::Bruhat, "bruhat", 3, bruhat),
    (Suite::SchurWeyl, "schur-weyl", SCHUR_WEYL_MAX_N, schur_weyl),
    (Suite::Qdim, "qdim", QDIM_MAX_N, qdim),
];

/// Runs the selected sweeps up to `min(max_n, per-suite bound)`.
pub fn run_suite(suite: Suite, max_n: usize) -> Vec<SuiteResult> {
    SWEEPS
        .iter()
        .filter(|(s, ..)| suite == Suite::All || suite == *s)
        .map(|&(_, name, bound, sweep)| {
            let limit = max_n.min(bound);
            let mut cases = 0;
            let failure = sweep(limit, &mut cases).err();
            SuiteResult { suite: name, max_n: limit, cases, failure }
        })
        .collect()
}

pub fn render(out: &mut dyn Write, format: Format, results: &[SuiteResult]) -> Result<(), Failure> {
    if format == Format::Json {
        let rows: Vec<Value> = results
            .iter()
            .map(|r| {
                let mut row = json!({"suite": r.suite, "max_n": r.max_n, "cases": r.cases, "passed": r.failure.is_none()});
                if let Some(f) = &r.failure {
                    row["counterexample"] = json!(f);
                }
                row
            })
            .collect();
        let passed = results.iter().all(|r| r.failure.is_none());
        return crate::render::emit_json(out, &json!({"passed": passed, "suites": rows}));
    }
    let rows: Vec<String> = results.iter().map(|r| r.suite.to_string()).collect();
    let cols = ["n ≤".to_string(), "cases".to_string(), "result".to_string()];
    let cells: Vec<Vec<String>> = results
        .iter()
        .map(|r| {
            let verdict = if r.failure.is_none() { "pass" } else { "FAIL" };
            vec![r.max_n.to_string(), r.cases.to_string(), verdict.to_string()]
        })
        .collect();
    write!(out, "{}", crate::render::text_matrix("suite", &rows, &cols, &cells))?;
    for r in results {
        if let Some(f) = &r.failure {
            writeln!(out, "{}: {f}", r.suite)?;
        }
    }
    Ok(())
}

fn partitions(n: usize) -> Result<Vec<Partition>, String> {
    enumerate_partitions(n).map_err(|e| e.to_string())
}

fn check(ok: bool, cases: &mut u64, detail: impl FnOnce() -> String) -> Result<(), String> {
    *cases += 1;
    if ok {
        Ok(())
    } else {
        Err(detail())
    }
}

fn dominance(max_n: usize, cases: &mut u64) -> Result<(), String> {
    for n in 0..=max_n {
        let all = partitions(n)?;
        for d in &all {
            for e in &all {
                let sums = e.dominates(d).map_err(|x| x.to_string())?;
                let moves = dominance_by_box_moves(e, d).map_err(|x| x.to_string())?;
                check(sums == moves, cases, || {
                    format!("({e}) ⪰ ({d}): partial sums say {sums}, box moves say {moves}")
                })?;
                let flipped = d.transpose().dominates(&e.transpose()).map_err(|x| x.to_string())?;
                check(sums == flipped, cases, || format!("transpose does not reverse ({e}) ⪰ ({d})"))?;
            }
        }
    }
    Ok(())
}

fn intertwine(max_n: usize, cases: &mut u64) -> Result<(), String> {
    for n in 0..=max_n {
        let all = partitions(n)?;
        for d in &all {
            for e in &all {
                let tables = count_contingency_tables(d, e).map_err(|x| x.to_string())?;
                let chars = character_inner_product_young(d, e, false).map_err(|x| x.to_string())?;
                check(tables == chars, cases, || {
                    format!("⟨Y_({d}), Y_({e})⟩: {tables} tables, {chars} by characters")
                })?;
                let tables = count_01_tables(d, e).map_err(|x| x.to_string())?;
                let chars = character_inner_product_young(d, e, true).map_err(|x| x.to_string())?;
                check(tables == chars, cases, || {
                    format!("⟨Y_({e})(sgn), Y_({d})⟩: {tables} 0-1 tables, {chars} by characters")
                })?;
            }
        }
    }
    Ok(())
}

fn pieri(max_n: usize, cases: &mut u64) -> Result<(), String> {
    for n in 1..=max_n {
        for k in 0..n {
            for d in partitions(k)? {
                let strips = pieri_expand_sn(&d, n).map_err(|x| x.to_string())?;
                let induced = induced_character_decomposition(&d, n).map_err(|x| x.to_string())?;
                let support: Vec<Partition> =
                    induced.iter().filter(|(_, m)| **m != BigUint::default()).map(|(e, _)| e.clone()).collect();
                let free = induced.values().all(|m| *m <= BigUint::one());
                let mut sorted = strips.clone();
                sorted.sort();
                let mut found = support.clone();
                found.sort();
                check(free && sorted == found, cases, || {
                    format!("Ind(σ_({d}) ⊗ 1) to S_{n}: strips {strips:?}, characters {induced:?}")
                })?;
            }
        }
    }
    Ok(())
}

fn kostka(max_n: usize, cases: &mut u64) -> Result<(), String> {
    for n in 0..=max_n {
        let table = KostkaTable::build(n).map_err(|x| x.to_string())?;
        let characters = if n <= MAX_INDUCTION_N {
            Some(CharacterTable::compute(n).map_err(|x| x.to_string())?)
        } else {
            None
        };
        for e in table.partitions() {
            for d in table.partitions() {
                let chains = table.get(e, d);
                let ssyt = count_ssyt(e, &Content::Exact(d.clone())).map_err(|x| x.to_string())?;
                check(chains == ssyt, cases, || format!("K(({e}),({d})): {chains} chains, {ssyt} tableaux"))?;
                if let Some(ct) = &characters {
                    let route = ct.kostka(e, d);
                    check(chains == route, cases, || {
                        format!("K(({e}),({d})): {chains} chains, {route} by characters")
                    })?;
                }
            }
        }
    }
    Ok(())
}

fn bruhat(max_n: usize, cases: &mut u64) -> Result<(), String> {
    for (n, p) in TINY_FIELDS.into_iter().filter(|&(n, _)| n <= max_n) {
        let all = partitions(n)?;
        for d in &all {
            for e in &all {
                let tables = count_contingency_tables(d, e).map_err(|x| x.to_string())?;
                let cosets = gl_double_cosets_tiny(n, p, d, e).map_err(|x| x.to_string())?;
                check(tables == BigUint::from(cosets), cases, || {
                    format!("P_({d})\\GL_{n}(F_{p})/P_({e}): {cosets} double cosets, {tables} tables")
                })?;
            }
        }
    }
    Ok(())
}

fn schur_weyl(max_n: usize, cases: &mut u64) -> Result<(), String> {
    for n in 1..=max_n {
        for l in 0..=SCHUR_WEYL_MAX_L {
            let total = schur_weyl_total(n, l).map_err(|x| x.to_string())?;
            let expected = BigUint::from(n).pow(l as u32);
            check(total == expected, cases, || format!("n = {n}, l = {l}: Σ f^D s_D(1^n) = {total}, n^l = {expected}"))?;
        }
    }
    Ok(())
}

fn qdim(max_n: usize, cases: &mut u64) -> Result<(), String> {
    for n in 0..=max_n {
        let table = KostkaTable::build(n).map_err(|x| x.to_string())?;
        let dims = sps_dimensions(&table).map_err(|x| x.to_string())?;
        let mut regular = QPoly::zero();
        for (d, dim) in table.partitions().iter().zip(&dims) {
            let degree = parabolic_codimension(d);
            let monic = dim.degree() == Some(degree) && dim.leading_coefficient().is_some_and(|c| c.is_one());
            check(monic, cases, || format!("dim ρ_({d}) = {dim} is not monic of degree {degree}"))?;
            let syt = BigInt::from(count_syt(d).map_err(|x| x.to_string())?);
            let at_one = dim.evaluate(&BigInt::one());
            check(at_one == syt, cases, || format!("dim ρ_({d})(1) = {at_one}, f^D = {syt}"))?;
            regular += &dim.scaled(&syt);
        }
        let flags = flag_variety_size(&Partition::column(n)).map_err(|x| x.to_string())?;
        check(regular == flags, cases, || format!("n = {n}: Σ f^D dim ρ_D = {regular}, |GL_n/B| = {flags}"))?;
    }
    Ok(())
}
