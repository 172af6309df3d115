//! The `hk` command line: one subcommand per library capability, plain
//! `KEY: VALUE` output, and exit codes 0 (holds / no violations), 1 (fails /
//! violations found) and 2 (usage, parse or precondition error).

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};

use crate::classify;
use crate::construct;
use crate::elem::Elem;
use crate::error::Error;
use crate::fixtures;
use crate::format::{format_set, format_tuple, parse_endo_lines, parse_set, parse_structure, serialize, StructureFile};
use crate::ideal::{self, enumerate_hyperideals, Hyperideal};
use crate::morphism::{enumerate_endomorphisms, verify_morphism, Morphism, DEFAULT_ENDO_CAP};
use crate::table::HyperringTable;
use crate::theorems::{self, CorpusEntry, SearchProperty, SuiteOptions};
use crate::verdict::{Kind, Verdict, Witness};

#[derive(Parser, Debug)]
#[command(name = "hk", version, about = "Finite Krasner (m,n)-hyperrings from .hkr tables")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check the hyperring axioms.
    Verify { file: PathBuf },
    /// List the hyperideals, primes and maximal hyperideals.
    Ideals { file: PathBuf },
    /// Enumerate the endomorphisms as `endo` lines.
    Endos {
        file: PathBuf,
        #[arg(long, default_value_t = DEFAULT_ENDO_CAP)]
        cap: u64,
    },
    /// Decide one property of a hyperideal.
    Classify {
        file: PathBuf,
        #[arg(long)]
        ideal: String,
        #[arg(long)]
        kind: String,
        /// A declared endomorphism, `identity`, or an enumerated `endoK`.
        #[arg(long)]
        endo: Option<String>,
    },
    /// Radical, prime radical and (with --endo) θ-radical of a hyperideal.
    Radical {
        file: PathBuf,
        #[arg(long)]
        ideal: String,
        #[arg(long)]
        endo: Option<String>,
    },
    /// The colon (I:A).
    Colon {
        file: PathBuf,
        #[arg(long)]
        ideal: String,
        #[arg(long)]
        by: String,
    },
    /// The quotient H/E.
    Quotient {
        file: PathBuf,
        #[arg(long)]
        ideal: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// The product A × B.
    Product {
        first: PathBuf,
        second: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Check the theorem suite over the given structures.
    Theorems {
        #[arg(required = true)]
        files: Vec<PathBuf>,
        /// `all` (enumerate), `declared`, or a file of `endo` lines.
        #[arg(long, default_value = "all")]
        endos: String,
        /// Comma-separated theorem ids.
        #[arg(long, value_delimiter = ',')]
        only: Option<Vec<String>>,
        /// Use a declared one even when it is not a scalar identity.
        #[arg(long)]
        literal_one: bool,
        /// Violations listed per theorem.
        #[arg(long, default_value_t = 20)]
        limit: usize,
    },
    /// Find instances of a non-converse.
    Search {
        #[arg(required = true)]
        files: Vec<PathBuf>,
        #[arg(long)]
        property: String,
        #[arg(long, default_value = "all")]
        endos: String,
    },
    /// Check the bundled worked examples.
    #[command(name = "paper-examples")]
    WorkedExamples,
}

enum Failure {
    Usage(String),
    Lib(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = std::result::Result<i32, Failure>;

/// Runs `hk` with `args` (including the program name).
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            if code == 0 {
                let _ = write!(out, "{text}");
            } else {
                let _ = write!(err, "{text}");
            }
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
        Err(Failure::Lib(e)) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

fn load(path: &Path) -> std::result::Result<StructureFile, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    let mut f = parse_structure(&text).map_err(|e| Failure::Usage(format!("{}:{e}", path.display())))?;
    f.path = Some(path.display().to_string());
    Ok(f)
}

fn declared(file: &StructureFile) -> Vec<(String, Vec<Elem>)> {
    file.endos.iter().map(|d| (d.name.clone(), d.map.clone())).collect()
}

fn map_text(h: &HyperringTable, map: &[Elem]) -> String {
    map.iter()
        .enumerate()
        .map(|(a, &b)| format!("{}->{}", h.label(a), h.label(b)))
        .collect::<Vec<_>>()
        .join(" ")
}

/// Looks `name` up among the declared endomorphisms, then `identity`, then
/// the enumerated `endoK` names.
fn find_endo<'a>(file: &'a StructureFile, name: &str) -> std::result::Result<Morphism<'a>, Failure> {
    let h = &file.table;
    if let Some(d) = file.endos.iter().find(|d| d.name == name) {
        let v = verify_morphism(&d.map, h, h)?;
        if !v.holds {
            return Err(Failure::Usage(format!("`{name}` is not an endomorphism: {}", witness_text(h, &v))));
        }
        return Ok(Morphism::endo(name, h, d.map.clone())?);
    }
    if name == "identity" {
        return Ok(Morphism::identity(h));
    }
    let found = enumerate_endomorphisms(h, DEFAULT_ENDO_CAP)?;
    found
        .into_iter()
        .find(|f| f.name() == name)
        .ok_or_else(|| Failure::Usage(format!("no endomorphism named `{name}`")))
}

fn endo_source(file: &StructureFile, source: &str) -> std::result::Result<Vec<(String, Vec<Elem>)>, Failure> {
    let h = &file.table;
    match source {
        "all" => Ok(CorpusEntry::enumerated(h.clone(), &declared(file))?.endos),
        "declared" => {
            let mut v = declared(file);
            let id: Vec<Elem> = (0..h.size()).collect();
            if !v.iter().any(|(_, m)| *m == id) {
                v.insert(0, ("identity".into(), id));
            }
            Ok(v)
        }
        path => {
            let text = fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{path}: {e}")))?;
            let decls = parse_endo_lines(h, &text).map_err(|e| Failure::Usage(format!("{path}:{e}")))?;
            Ok(decls.into_iter().map(|d| (d.name, d.map)).collect())
        }
    }
}

fn witness_text(h: &HyperringTable, v: &Verdict) -> String {
    match &v.witness {
        None => String::new(),
        Some(Witness::Tuple { tuple, .. }) => format_tuple(h, tuple),
        Some(Witness::Ideals { ideals, .. }) => {
            ideals.iter().map(|&s| format_set(h, s)).collect::<Vec<_>>().join(" ")
        }
    }
}

fn write_verdict(out: &mut dyn Write, h: &HyperringTable, v: &Verdict) -> std::io::Result<()> {
    writeln!(out, "result: {}", v.holds)?;
    if let Some(w) = &v.witness {
        writeln!(out, "witness: {}", witness_text(h, v))?;
        if let Witness::Tuple { position: Some(p), .. } = w {
            writeln!(out, "position: {p}")?;
        }
        writeln!(out, "note: {}", w.note())?;
    }
    for w in &v.warnings {
        writeln!(out, "warning: {w}")?;
    }
    Ok(())
}

fn header(out: &mut dyn Write, h: &HyperringTable) -> std::io::Result<()> {
    writeln!(out, "structure: {}", h.name())?;
    writeln!(out, "elements: {}", h.size())?;
    writeln!(out, "arity: ({},{})", h.m(), h.n())
}

fn dispatch(cmd: Command, out: &mut dyn Write) -> Outcome {
    match cmd {
        Command::Verify { file } => {
            let f = load(&file)?;
            let h = &f.table;
            header(out, h)?;
            let r = h.verify_axioms();
            for a in crate::table::AxiomId::ALL {
                match r.violations.iter().find(|v| v.axiom == a) {
                    None => writeln!(out, "axiom {a}: pass")?,
                    Some(v) => {
                        let pos = v.position.map(|p| format!(", position {p}")).unwrap_or_default();
                        writeln!(
                            out,
                            "axiom {a}: fail ({} failing instances, first {}{pos})",
                            v.count,
                            format_tuple(h, &v.witness)
                        )?;
                    }
                }
            }
            for w in &r.warnings {
                writeln!(out, "warning {}: {}", w.id, format_tuple(h, &w.witness))?;
            }
            for w in classify::one_warnings(h) {
                writeln!(out, "note: {w}")?;
            }
            writeln!(out, "axioms: {}", if r.passed { "pass" } else { "fail" })?;
            Ok(if r.passed { 0 } else { 1 })
        }
        Command::Ideals { file } => {
            let f = load(&file)?;
            let h = &f.table;
            header(out, h)?;
            let all = enumerate_hyperideals(h);
            writeln!(out, "hyperideals: {}", all.len())?;
            for e in &all {
                writeln!(out, "ideal: {e}")?;
            }
            for q in ideal::primes(h) {
                writeln!(out, "prime: {q}")?;
            }
            for m in ideal::max_spectrum(h) {
                writeln!(out, "maximal: {m}")?;
            }
            Ok(0)
        }
        Command::Endos { file, cap } => {
            let f = load(&file)?;
            let h = &f.table;
            let found = enumerate_endomorphisms(h, cap)?;
            writeln!(out, "endomorphisms: {}", found.len())?;
            for e in &found {
                let name = f
                    .endos
                    .iter()
                    .find(|d| d.map == e.map())
                    .map_or(e.name(), |d| d.name.as_str());
                writeln!(out, "endo {}: {}", name, map_text(h, e.map()))?;
            }
            Ok(0)
        }
        Command::Classify { file, ideal, kind, endo } => {
            let f = load(&file)?;
            let h = &f.table;
            let kind = Kind::parse(&kind).ok_or_else(|| {
                let names: Vec<&str> = Kind::ALL.iter().map(|k| k.as_str()).collect();
                Failure::Usage(format!("unknown kind `{kind}` (one of {})", names.join(", ")))
            })?;
            let theta = endo.as_deref().map(|n| find_endo(&f, n)).transpose()?;
            let v = if kind == Kind::Hyperideal {
                ideal::is_hyperideal(h, parse_set(h, &ideal)?)
            } else {
                let e = ideal::parse_ideal(h, &ideal)?;
                classify::classify(h, &e, kind, theta.as_ref())?
            };
            writeln!(out, "kind: {kind}")?;
            if let Some(t) = &theta {
                writeln!(out, "endo: {}", t.name())?;
            }
            write_verdict(out, h, &v)?;
            Ok(if v.holds { 0 } else { 1 })
        }
        Command::Radical { file, ideal: text, endo } => {
            let f = load(&file)?;
            let h = &f.table;
            let e = ideal::parse_ideal(h, &text)?;
            writeln!(out, "ideal: {e}")?;
            writeln!(out, "radical: {}", format_set(h, ideal::radical(h, e.members())))?;
            writeln!(out, "prime-radical: {}", format_set(h, ideal::prime_radical(h, e.members())))?;
            if let Some(n) = endo {
                let t = find_endo(&f, &n)?;
                writeln!(out, "theta-radical: {}", format_set(h, ideal::theta_radical(h, e.members(), &t)))?;
            }
            if let Some(note) = ideal::radical_note(h) {
                writeln!(out, "note: {note}")?;
            }
            Ok(0)
        }
        Command::Colon { file, ideal: text, by } => {
            let f = load(&file)?;
            let h = &f.table;
            let e = ideal::parse_ideal(h, &text)?;
            let a = parse_set(h, &by)?;
            writeln!(out, "colon: {}", format_set(h, ideal::colon(h, &e, a)?))?;
            Ok(0)
        }
        Command::Quotient { file, ideal: text, output } => {
            let f = load(&file)?;
            let h = &f.table;
            let e = ideal::parse_ideal(h, &text)?;
            let q = construct::quotient(h, &e)?;
            emit(out, q.table(), output.as_deref(), |out| {
                for (i, &c) in q.classes().iter().enumerate() {
                    writeln!(out, "class {}: {}", q.table().label(i), format_set(h, c))?;
                }
                Ok(())
            })
        }
        Command::Product { first, second, output } => {
            let (a, b) = (load(&first)?, load(&second)?);
            let p = construct::product(&a.table, &b.table)?;
            emit(out, &p, output.as_deref(), |_| Ok(()))
        }
        Command::Theorems {
            files,
            endos,
            only,
            literal_one,
            limit,
        } => {
            let corpus = corpus(&files, &endos)?;
            let reports = theorems::run_suite(&corpus, &SuiteOptions { only, literal_one })?;
            write!(out, "{}", theorems::render_reports(&reports, limit))?;
            Ok(if reports.iter().any(|r| r.violated > 0) { 1 } else { 0 })
        }
        Command::Search { files, property, endos } => {
            let property = SearchProperty::parse(&property)?;
            let corpus = corpus(&files, &endos)?;
            let found = theorems::search(&corpus, property)?;
            writeln!(out, "property: {}", property.as_str())?;
            for x in &found {
                writeln!(out, "found: {} {} {}", x.structure, x.ideal, x.endo)?;
            }
            writeln!(out, "count: {}", found.len())?;
            Ok(if found.is_empty() { 1 } else { 0 })
        }
        Command::WorkedExamples => {
            let claims = worked_examples()?;
            let failed = claims.iter().filter(|(_, ok)| !ok).count();
            for (text, ok) in &claims {
                writeln!(out, "{}: {text}", if *ok { "pass" } else { "fail" })?;
            }
            writeln!(out, "claims: {} passed, {failed} failed", claims.len() - failed)?;
            Ok(if failed == 0 { 0 } else { 1 })
        }
    }
}

fn corpus(files: &[PathBuf], endos: &str) -> std::result::Result<Vec<CorpusEntry>, Failure> {
    files
        .iter()
        .map(|p| {
            let f = load(p)?;
            let list = endo_source(&f, endos)?;
            Ok(CorpusEntry::new(f.table, list))
        })
        .collect()
}

/// Writes `table` to `output`, or to stdout when no path is given.
fn emit(
    out: &mut dyn Write,
    table: &HyperringTable,
    output: Option<&Path>,
    extra: impl FnOnce(&mut dyn Write) -> std::io::Result<()>,
) -> Outcome {
    let report = table.verify_axioms();
    header(out, table)?;
    extra(out)?;
    writeln!(out, "axioms: {}", if report.passed { "pass" } else { "fail" })?;
    let text = serialize(table, &[]);
    match output {
        Some(path) => {
            fs::write(path, text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
            writeln!(out, "written: {}", path.display())?;
        }
        None => write!(out, "{text}")?,
    }
    Ok(0)
}

/// The worked examples on the bundled structures, as (claim, holds) pairs.
pub fn worked_examples() -> crate::Result<Vec<(String, bool)>> {
    let mut out: Vec<(String, bool)> = Vec::new();
    let mut claim = |text: &str, ok: bool| out.push((text.to_string(), ok));
    let (p, g, s4) = (fixtures::p(), fixtures::g(), fixtures::s4());
    let pp = fixtures::p_squared();
    let swap = fixtures::swap(&pp);
    let el = |h: &HyperringTable, l: &str| h.elem(l);

    claim("S4: 1 ⊕ 1 = {0,1}", s4.iterated_add(1, &[1, 1])? == parse_set(&s4, "0,1")?);
    claim("S4: k(2,3,3,2) = 2", s4.iterated_mul(1, &[2, 3, 3, 2])? == 2);
    claim("S4: k(1,2,3,3) = 0", s4.iterated_mul(1, &[1, 2, 3, 3])? == 0);
    claim("S4: the fourth power of 2 is 2", s4.power(2, 4)? == 2);
    let rs4 = s4.verify_axioms();
    claim(
        "S4 passes every axiom and only warns that its one is not neutral",
        rs4.passed && rs4.warnings.len() == 1,
    );
    let rp = p.verify_axioms();
    claim("P passes every axiom without warnings", rp.passed && rp.warnings.is_empty());
    let rg = g.verify_axioms();
    claim("G passes every axiom without warnings", rg.passed && rg.warnings.is_empty());
    claim("swap is an endomorphism of P×P", verify_morphism(swap.map(), &pp, &pp)?.holds);

    let id = Morphism::identity(&p);
    let zero = Hyperideal::zero(&p);
    let tmax = classify::is_theta_maximal(&p, &zero, &id)?.holds;
    let max: Vec<_> = ideal::max_spectrum(&p).iter().map(|m| m.members()).collect();
    claim(
        "P: {0} is θ-maximal and Max(P) = {Ker θ} = {{0}} for θ = identity",
        tmax && max == [crate::morphism::kernel(&id)] && max == [zero.members()],
    );
    claim("P: u is invertible (u·w = 1)", ideal::is_invertible(&p, el(&p, "u")?)?);
    claim("G: v is invertible (v·u = 1)", ideal::is_invertible(&g, el(&g, "v")?)?);

    let s4zero = Hyperideal::zero(&s4);
    let v = classify::is_prime(&s4, &s4zero)?;
    claim("S4: {0} is not prime, witness (1,2,3,3)", !v.holds && v.witness_tuple() == Some(&[1, 2, 3, 3][..]));
    let e = Hyperideal::zero(&pp);
    let v = classify::is_endo_prime(&pp, &e, &swap)?;
    let want = [el(&pp, "(1,0)")?, el(&pp, "(0,1)")?];
    claim(
        "P×P: {(0,0)} is not Endo-prime for swap, witness ((1,0),(0,1)), yet swap({(0,0)}) ⊆ {(0,0)}",
        !v.holds && v.witness_tuple() == Some(&want[..]) && swap.image_of(e.members()).is_subset(e.members()),
    );
    let s4_endos = enumerate_endomorphisms(&s4, DEFAULT_ENDO_CAP)?;
    let mut all = !s4_endos.is_empty();
    for t in &s4_endos {
        all &= classify::is_endo_prime(&s4, &s4zero, t)?.holds;
    }
    claim("S4: {0} is Endo-prime for every endomorphism", all);

    let tables = [&g, &s4, &p, &pp];
    let mut prime_ep = true;
    let mut ep_epr = true;
    let mut strong_ep = true;
    for h in tables {
        let endos = enumerate_endomorphisms(h, DEFAULT_ENDO_CAP)?;
        for e in enumerate_hyperideals(h).into_iter().filter(|e| e.is_proper()) {
            let is_prime = classify::is_prime(h, &e)?.holds;
            for t in &endos {
                let ep = classify::is_endo_prime(h, &e, t)?.holds;
                prime_ep &= !is_prime || ep;
                ep_epr &= !ep || classify::is_endo_primary(h, &e, t)?.holds;
                strong_ep &= !classify::is_strongly_endo_prime(h, &e, t)?.holds || ep;
            }
        }
    }
    claim("every prime hyperideal is Endo-prime for every endomorphism (G, S4, P, P×P)", prime_ep);
    claim("every Endo-prime hyperideal is Endo-primary (G, S4, P, P×P)", ep_epr);
    claim("every strongly Endo-prime hyperideal is Endo-prime (G, S4, P, P×P)", strong_ep);

    claim("G is a hyperintegral domain", classify::is_hyperintegral_domain(&g)?.holds);
    let v = classify::is_hyperintegral_domain(&s4)?;
    claim(
        "S4 is not a hyperintegral domain, witness (1,2,3,3)",
        !v.holds && v.witness_tuple() == Some(&[1, 2, 3, 3][..]),
    );

    let s4_entry = CorpusEntry::enumerated(s4.clone(), &[])?;
    let names: Vec<String> = s4_entry.endos.iter().map(|(n, _)| n.clone()).collect();
    let found = theorems::search(&[s4_entry], SearchProperty::EndoPrimeNotPrime)?;
    claim(
        "search finds {0} in S4 Endo-prime but not prime, for every endomorphism",
        names.iter().all(|n| found.iter().any(|f| f.ideal == "{0}" && &f.endo == n)),
    );
    let pp_entry = CorpusEntry::new(pp.clone(), vec![("swap".into(), swap.map().to_vec())]);
    let found = theorems::search(&[pp_entry], SearchProperty::ThetaStableNotEndoPrime)?;
    claim(
        "search finds {(0,0)} in P×P swap-stable but not Endo-prime for swap",
        found.first().is_some_and(|f| f.ideal == "{(0,0)}" && f.endo == "swap"),
    );
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hk(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("hk").chain(args.iter().copied());
        let code = run(argv, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn worked_examples_pass() {
        let (code, out, _) = hk(&["paper-examples"]);
        assert_eq!(code, 0, "{out}");
        assert!(!out.contains("fail:"));
    }

    #[test]
    fn usage_errors_exit_two() {
        assert_eq!(hk(&["frobnicate"]).0, 2);
        assert_eq!(hk(&["verify", "/nonexistent.hkr"]).0, 2);
        assert_eq!(hk(&["--help"]).0, 0);
    }
}
