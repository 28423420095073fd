use std::io::Write;

use num_bigint::BigInt;
use serde_json::{json, Value};

use pieri_core::oracle::gl_double_cosets_tiny;
use pieri_core::pieri::{pieri_expand_gl, pieri_expand_sn};
use pieri_core::qside::{flag_variety_size, parabolic_codimension, sps_dimensions};
use pieri_core::rep_ring::decompose_induced_sps;
use pieri_core::tabloid::{count_01_tables, count_contingency_tables, count_double_cosets, enumerate_tables, TableBound};
use pieri_core::{Partition, QPoly, VirtualRep};

use crate::render::{emit_json, int, label, latex_matrix, text_matrix};
use crate::{cache, verify, Cli, Command, Failure, Format, GroupArg, EXIT_DOMAIN, EXIT_OK, EXIT_VERIFY};

pub fn dispatch(cli: &Cli, out: &mut dyn Write) -> Result<i32, Failure> {
    let parse = |flag: &str, text: &str| -> Result<Partition, Failure> {
        Partition::parse(text, cli.lenient).map_err(|e| Failure {
            status: EXIT_DOMAIN,
            message: format!("--{flag}: {e}"),
        })
    };
    match &cli.command {
        Command::Pieri(args) => {
            no_latex(args.format, "pieri")?;
            let d = parse("diagram", &args.diagram)?;
            let (group, components) = if args.gl {
                let max_rows = args.max_rows.unwrap_or(d.len());
                let strip = args.target_size.checked_sub(d.size()).ok_or(pieri_core::Error::SizeMismatch {
                    left: d.size(),
                    right: args.target_size,
                })?;
                ("GL_n(C)", pieri_expand_gl(&d, strip, max_rows)?)
            } else {
                ("S_n", pieri_expand_sn(&d, args.target_size)?)
            };
            match args.format {
                Format::Json => {
                    let mut doc = json!({
                        "diagram": d.to_string(),
                        "target_size": args.target_size,
                        "group": group,
                    });
                    if let Some(m) = args.max_rows {
                        doc["max_rows"] = json!(m);
                    }
                    doc["components"] = components.iter().map(|e| Value::String(e.to_string())).collect();
                    emit_json(out, &doc)?;
                }
                _ => {
                    for e in &components {
                        writeln!(out, "{e}")?;
                    }
                }
            }
        }
        Command::Kostka(args) => {
            let table = cache::kostka_table(args.n, args.table_bound)?;
            let parts = table.partitions();
            match args.format {
                Format::Json => {
                    let entries: Vec<Value> = table
                        .nonzero_entries()
                        .map(|(e, d, k)| json!({"e": e.to_string(), "d": d.to_string(), "mult": int(k)}))
                        .collect();
                    emit_json(out, &json!({"n": args.n, "entries": entries}))?;
                }
                Format::Text | Format::Latex => {
                    let cells: Vec<Vec<String>> = (0..parts.len())
                        .map(|i| (0..parts.len()).map(|j| table.entry(i, j).to_string()).collect())
                        .collect();
                    if args.format == Format::Latex {
                        write!(out, "{}", latex_matrix("$E \\backslash D$", parts, parts, &cells))?;
                    } else {
                        let names: Vec<String> = parts.iter().map(label).collect();
                        write!(out, "{}", text_matrix("E\\D", &names, &names, &cells))?;
                    }
                }
            }
        }
        Command::Decompose(args) => {
            let (module, diagram, v) = if let Some(text) = &args.young {
                let d = parse("young", text)?;
                let ring = cache::rep_ring(d.size(), args.table_bound)?;
                match args.group {
                    GroupArg::Sn => ("Y", d.clone(), ring.decompose_young_module(&d)?),
                    GroupArg::Gl => ("I", d.clone(), ring.decompose_flag_module(&d)?),
                }
            } else {
                let text = args.sps.as_deref().unwrap_or_default();
                let d = parse("sps", text)?;
                let n = args.target.unwrap_or(d.size());
                ("Ind", d.clone(), decompose_induced_sps(&d, n)?)
            };
            if !v.is_genuine() {
                return Err(pieri_core::Error::Internal("decomposition has a negative multiplicity").into());
            }
            render_decomposition(out, args.format, module, &diagram, &v)?;
        }
        Command::Intertwine(args) => {
            no_latex(args.format, "intertwine")?;
            let d = parse("left", &args.left)?;
            let e = parse("right", &args.right)?;
            let count = if args.signed { count_01_tables(&d, &e)? } else { count_contingency_tables(&d, &e)? };
            let tables = if args.tables {
                let bound = TableBound { max_cells: args.table_bound, ..TableBound::default() };
                let found = enumerate_tables(&d, &e, args.signed, bound)?;
                Some(
                    found
                        .iter()
                        .map(|t| Value::Array(t.entries().iter().map(|row| json!(row)).collect()))
                        .collect::<Vec<Value>>(),
                )
            } else {
                None
            };
            match args.format {
                Format::Json => {
                    let mut doc = json!({
                        "left": d.to_string(),
                        "right": e.to_string(),
                        "signed": args.signed,
                        "count": int(&count),
                    });
                    if let Some(tables) = tables {
                        doc["tables"] = Value::Array(tables);
                    }
                    emit_json(out, &doc)?;
                }
                _ => {
                    writeln!(out, "{count}")?;
                    for t in tables.unwrap_or_default() {
                        writeln!(out, "{t}")?;
                    }
                }
            }
        }
        Command::Qdim(args) | Command::FlagSize(args) => {
            no_latex(args.format, "polynomial output")?;
            let d = parse("diagram", &args.diagram)?;
            let poly = if matches!(cli.command, Command::Qdim(_)) {
                let table = cache::kostka_table(d.size(), args.table_bound)?;
                let index = table.index_of(&d).ok_or(pieri_core::Error::Internal("diagram missing from table"))?;
                sps_dimensions(&table)?.swap_remove(index)
            } else {
                flag_variety_size(&d)?
            };
            render_poly(out, args.format, &d, &poly, args.q)?;
        }
        Command::DoubleCosets(args) => {
            no_latex(args.format, "double-cosets")?;
            let d = parse("left", &args.left)?;
            let e = parse("right", &args.right)?;
            let count = count_double_cosets(&d, &e)?;
            let tiny = match args.p {
                Some(p) => Some(gl_double_cosets_tiny(d.size(), p, &d, &e)?),
                None => None,
            };
            let agrees = tiny.is_none_or(|t| num_bigint::BigUint::from(t) == count);
            match args.format {
                Format::Json => {
                    let mut doc = json!({"left": d.to_string(), "right": e.to_string(), "count": int(&count)});
                    if let (Some(p), Some(t)) = (args.p, tiny) {
                        doc["p"] = json!(p);
                        doc["enumerated"] = json!(t);
                        doc["agrees"] = json!(agrees);
                    }
                    emit_json(out, &doc)?;
                }
                _ => {
                    writeln!(out, "{count}")?;
                    if let (Some(p), Some(t)) = (args.p, tiny) {
                        let verdict = if agrees { "agrees" } else { "DISAGREES" };
                        writeln!(out, "GL_{}(F_{p}) enumeration: {t} ({verdict})", d.size())?;
                    }
                }
            }
            if !agrees {
                return Ok(EXIT_VERIFY);
            }
        }
        Command::Verify(args) => {
            no_latex(args.format, "verify")?;
            let results = verify::run_suite(args.suite, args.max_n);
            verify::render(out, args.format, &results)?;
            if results.iter().any(|r| r.failure.is_some()) {
                return Ok(EXIT_VERIFY);
            }
        }
    }
    Ok(EXIT_OK)
}

fn no_latex(format: Format, what: &str) -> Result<(), Failure> {
    if format == Format::Latex {
        return Err(Failure {
            status: EXIT_DOMAIN,
            message: format!("latex output is only available for multiplicity tables, not {what}"),
        });
    }
    Ok(())
}

fn render_decomposition(
    out: &mut dyn Write,
    format: Format,
    module: &str,
    diagram: &Partition,
    v: &VirtualRep,
) -> Result<(), Failure> {
    let group = v.group().label();
    match format {
        Format::Json => {
            let components: Vec<Value> = v
                .terms()
                .map(|(e, c)| json!({"partition": e.to_string(), "mult": int(c)}))
                .collect();
            let mut doc = json!({"group": group, "module": module, "diagram": diagram.to_string()});
            if module == "Ind" {
                doc["n"] = json!(v.n());
            }
            doc["components"] = Value::Array(components);
            emit_json(out, &doc)?;
        }
        Format::Text => {
            let name = match module {
                "Ind" => format!("Ind(ρ_{} ⊗ 1) in GL_{}", label(diagram), v.n()),
                _ => format!("{module}_{}", label(diagram)),
            };
            writeln!(out, "{name} = {v}")?;
            for (e, c) in v.terms() {
                writeln!(out, "{e}\t{c}")?;
            }
        }
        Format::Latex => {
            let rows: Vec<Partition> = v.terms().map(|(e, _)| e.clone()).collect();
            let cells: Vec<Vec<String>> = v.terms().map(|(_, c)| vec![c.to_string()]).collect();
            write!(out, "{}", latex_matrix("$E$", &rows, std::slice::from_ref(diagram), &cells))?;
        }
    }
    Ok(())
}

fn render_poly(
    out: &mut dyn Write,
    format: Format,
    d: &Partition,
    poly: &QPoly,
    q: Option<u64>,
) -> Result<(), Failure> {
    let value = q.map(|q| poly.evaluate(&BigInt::from(q)));
    match format {
        Format::Json => {
            let coefficients: Vec<Value> = poly.terms().rev().map(|(e, c)| json!([e, int(c)])).collect();
            let mut doc = json!({
                "diagram": d.to_string(),
                "polynomial": poly.to_string(),
                "degree": poly.degree(),
                "codimension": parabolic_codimension(d),
                "coefficients": coefficients,
            });
            if let (Some(q), Some(value)) = (q, &value) {
                doc["q"] = json!(q);
                doc["value"] = int(value);
            }
            emit_json(out, &doc)?;
        }
        _ => {
            writeln!(out, "{poly}")?;
            if let (Some(q), Some(value)) = (q, value) {
                writeln!(out, "at q = {q}: {value}")?;
            }
        }
    }
    Ok(())
}
