use std::fs;
use std::path::{Path, PathBuf};

use bichroma_core::chromatic::audit_coefficients;
use bichroma_core::enumeration::{
    cloud_csv, exhaustive_audit, is_known_third_discrepancy, root_cloud, third_disagreement_csv,
};
use bichroma_core::families::FamilySpec;
use bichroma_core::invariance::{admits_invariant_colouring, construct_join_colouring};
use bichroma_core::poly::parse_slash_coeffs;
use bichroma_core::roots::exact::integer_roots;
use bichroma_core::verify::{summary, Verifier};
use bichroma_core::{
    find_roots, is_invariant_structural, parse_graph6, parse_meg, poly_interpolated,
    poly_partition, poly_recursive, write_meg, MixedGraph,
};

use crate::error::CliError;
use crate::svg;
use crate::{Command, Engine, RootsArgs};

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(CliError::io(path))
}

fn write(path: &Path, contents: &str) -> Result<(), CliError> {
    fs::write(path, contents).map_err(CliError::io(path))
}

fn load_meg(path: &Path) -> Result<MixedGraph, CliError> {
    parse_meg(&read(path)?).map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))
}

pub fn run(command: Command) -> Result<(), CliError> {
    match command {
        Command::Poly { file, engine } => {
            let m = load_meg(&file)?;
            let p = match engine {
                Engine::Recursive => poly_recursive(&m),
                Engine::Partition => poly_partition(&m),
                Engine::Interpolate => poly_interpolated(&m)?,
            };
            println!("{p}");
            Ok(())
        }
        Command::Coeffs { file } => coeffs(&load_meg(&file)?),
        Command::Audit { n, report } => audit(n, report.as_deref()),
        Command::Invariant { file } => {
            let report = is_invariant_structural(&load_meg(&file)?)?;
            println!("{report}");
            Ok(())
        }
        Command::Synth { file, out } => synth(&file, out),
        Command::Family { kind, params, out } => family(&kind, &params, out),
        Command::Roots(args) => roots(args),
        Command::Cloud {
            n,
            universe,
            dedup,
            csv,
            svg: svg_path,
        } => {
            let records = root_cloud(n, universe, dedup)?;
            let text = cloud_csv(&records);
            match csv {
                Some(path) => {
                    write(&path, &text)?;
                    let rows = text.lines().count() - 1;
                    println!(
                        "{} records, {rows} roots written to {}",
                        records.len(),
                        path.display()
                    );
                }
                None => print!("{text}"),
            }
            if let Some(path) = svg_path {
                svg::emit_svg(&records, &path).map_err(CliError::io(&path))?;
            }
            Ok(())
        }
        Command::Verify { seed, out } => verify(seed, out.as_deref()),
    }
}

fn coeffs(m: &MixedGraph) -> Result<(), CliError> {
    let a = audit_coefficients(m)?;
    let verdict = |ok: bool| if ok { "agree" } else { "disagree" };
    println!("census: {}", m.census());
    println!(
        "second coefficient: formula {}, true {} ({})",
        a.formula_second,
        a.true_second,
        verdict(a.agrees_second)
    );
    println!(
        "third coefficient: formula {}, true {} ({})",
        a.formula_third,
        a.true_third,
        verdict(a.agrees_third)
    );
    if !a.agrees_second {
        return Err(CliError::Disagreement(
            "second-coefficient formula disagrees".into(),
        ));
    }
    if !a.agrees_third {
        if !is_known_third_discrepancy(m) {
            return Err(CliError::Disagreement(
                "third-coefficient formula disagrees on a complete shadow".into(),
            ));
        }
        println!("(known discrepancy: the third-coefficient formula fails on some graphs whose shadow is not complete)");
    }
    Ok(())
}

fn audit(n: usize, report: Option<&Path>) -> Result<(), CliError> {
    let s = exhaustive_audit(n)?;
    print!("{s}");
    if let Some(dir) = report {
        fs::create_dir_all(dir).map_err(CliError::io(dir))?;
        write(
            &dir.join(format!("third_disagreements_n{n}.csv")),
            &third_disagreement_csv(&s),
        )?;
    }
    let unexpected = s.unexpected();
    if unexpected.is_empty() {
        if !s.third_disagreements.is_empty() {
            println!(
                "{} third-coefficient disagreements, all on graphs with incomplete shadow (known)",
                s.third_disagreements.len()
            );
        }
        Ok(())
    } else {
        Err(CliError::Disagreement(unexpected.join("; ")))
    }
}

fn synth(file: &Path, out: Option<PathBuf>) -> Result<(), CliError> {
    let text = read(file)?;
    let line = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty())
        .unwrap_or("");
    let g = parse_graph6(line).map_err(|e| CliError::Parse(format!("{}: {e}", file.display())))?;
    let Some((x, y)) = admits_invariant_colouring(&g) else {
        println!("no chromatically invariant colouring with both colours at every vertex");
        return Ok(());
    };
    let m = construct_join_colouring(&g, &x, &y)?;
    let out = out.unwrap_or_else(|| file.with_extension("meg"));
    write(&out, &write_meg(&m))?;
    println!(
        "sides {x:?} and {y:?}; joining edges blue; wrote {}",
        out.display()
    );
    Ok(())
}

fn family(kind: &str, params: &[usize], out: Option<PathBuf>) -> Result<(), CliError> {
    let spec = FamilySpec::parse(kind, params)?;
    let g = spec.graph()?;
    let p = spec.closed_form()?;
    let out = out.unwrap_or_else(|| PathBuf::from(format!("{}.meg", spec.slug())));
    write(&out, &write_meg(&g))?;
    println!("{spec}: wrote {}", out.display());
    println!("{p}");
    let ints: Vec<String> = integer_roots(&p).0.iter().map(i64::to_string).collect();
    println!("integer roots: {}", ints.join(", "));
    Ok(())
}

fn roots(args: RootsArgs) -> Result<(), CliError> {
    let p = match (&args.file, &args.poly) {
        (Some(file), _) => poly_recursive(&load_meg(file)?),
        (None, Some(text)) => parse_slash_coeffs(text).ok_or_else(|| {
            CliError::Parse(format!(
                "--poly: cannot read `{text}` as `/`-separated integers"
            ))
        })?,
        (None, None) => unreachable!("clap requires one input"),
    };
    let set = find_roots(&p, args.tol)?;
    println!("polynomial: {p}");
    println!("{set}");
    Ok(())
}

fn verify(seed: u64, out: Option<&Path>) -> Result<(), CliError> {
    let verifier = Verifier::new(seed);
    println!("seed {seed}");
    let mut outcomes = Vec::new();
    for id in bichroma_core::verify::CRITERIA {
        let o = verifier.run(id);
        println!("{o}");
        outcomes.push(o);
    }
    let text = summary(&outcomes);
    println!("{}", text.lines().last().unwrap_or(""));
    if let Some(dir) = out {
        fs::create_dir_all(dir).map_err(CliError::io(dir))?;
        write(&dir.join("summary.txt"), &format!("seed {seed}\n{text}"))?;
        for a in outcomes.iter().flat_map(|o| &o.artifacts) {
            write(&dir.join(&a.name), &a.contents)?;
            if let Some(stem) = a
                .name
                .strip_suffix(".csv")
                .filter(|s| s.starts_with("cloud_"))
            {
                if let Some(svg) = svg::render(&svg::csv_points(&a.contents)) {
                    write(&dir.join(format!("{stem}.svg")), &svg)?;
                }
            }
        }
    }
    let failed: Vec<String> = outcomes
        .iter()
        .filter(|o| !o.passed)
        .map(|o| o.id.to_string())
        .collect();
    if failed.is_empty() {
        Ok(())
    } else {
        Err(CliError::Disagreement(format!(
            "criteria failed: {}",
            failed.join(", ")
        )))
    }
}
