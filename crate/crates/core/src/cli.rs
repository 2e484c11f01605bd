//! Command-line front end. `run` is the whole program minus process exit.

use std::ffi::OsString;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};

use crate::counting;
use crate::cyclic::{CodeParams, CyclicRing};
use crate::dft::Dft;
use crate::duality::{self, DualKind};
use crate::galois_ring::GaloisRing;
use crate::literal;
use crate::verify;
use crate::{Error, Result};

/// Environment variable holding a modulus polynomial in `x` that pins the
/// construction of `GR(p^2, s)` for `s` equal to its degree.
pub const MODULUS_OVERRIDE_VAR: &str = "GR2_MODULUS_OVERRIDE";

pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_VERIFY: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "grcodes", version, about = "Cyclic and self-dual codes over GR(p^2, s)")]
struct Cli {
    /// Output mode.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Tsv,
    Kv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum CodeKind {
    Cyclic,
    Euclidean,
    Hermitian,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum DualArg {
    Euclidean,
    Hermitian,
}

impl From<DualArg> for DualKind {
    fn from(k: DualArg) -> Self {
        match k {
            DualArg::Euclidean => DualKind::Euclidean,
            DualArg::Hermitian => DualKind::Hermitian,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum LevelArg {
    Quick,
    Full,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Number of Euclidean self-dual codes of length n; with --kind, counts for n = p^a.
    Count {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        s: usize,
        #[arg(long)]
        n: u64,
        #[arg(long, value_enum)]
        kind: Option<CodeKind>,
    },
    /// Rows (n, N_E(n)) for n = 1..=max.
    Table {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        s: usize,
        #[arg(long)]
        max: u64,
    },
    /// All codes of the given kind and length p^a, one literal per line.
    Enumerate {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        s: usize,
        #[arg(long)]
        a: u32,
        #[arg(long, value_enum)]
        kind: CodeKind,
    },
    /// Canonical dual of a code literal.
    Dual {
        #[arg(long, value_enum)]
        kind: DualArg,
        #[arg(long)]
        code: String,
    },
    /// Canonical form of the ideal generated by polynomials in u.
    Normalize {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        s: usize,
        #[arg(long)]
        a: u32,
        /// Polynomials in u separated by ';' (coefficients may use x, T(e)).
        #[arg(long, allow_hyphen_values = true)]
        gens: String,
    },
    /// Component codes of the ideal generated by polynomials in X.
    Decompose {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        s: usize,
        #[arg(long)]
        n: u64,
        /// Polynomials in X separated by ';'.
        #[arg(long, allow_hyphen_values = true)]
        gens: String,
    },
    /// Every Euclidean self-dual code of length n, as component literals.
    SelfdualComposite {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        s: usize,
        #[arg(long)]
        n: u64,
    },
    /// Run the self-check suite.
    Verify {
        #[arg(long, value_enum, default_value_t = LevelArg::Quick)]
        level: LevelArg,
    },
}

/// Builds rings, honouring a pinned modulus.
#[derive(Clone, Debug, Default)]
pub struct RingFactory {
    pinned: Option<Vec<i64>>,
}

impl RingFactory {
    pub fn new(modulus: Option<&str>) -> Result<Self> {
        let pinned = match modulus {
            Some(text) if !text.trim().is_empty() => Some(literal::parse_int_poly(text)?),
            _ => None,
        };
        Ok(Self { pinned })
    }

    pub fn ring(&self, p: u64, s: usize) -> Result<GaloisRing> {
        match &self.pinned {
            Some(c) if c.len() == s + 1 => {
                let p2 = (p * p) as i64;
                let lift: Vec<u64> = c.iter().map(|x| x.rem_euclid(p2) as u64).collect();
                GaloisRing::from_lift(p, &lift)
            }
            _ => GaloisRing::new(p, s),
        }
    }

    pub fn cyclic(&self, p: u64, s: usize, a: u32) -> Result<CyclicRing> {
        CodeParams::new(p, s, a)?;
        CyclicRing::with_ring(self.ring(p, s)?, a)
    }

    pub fn dft(&self, p: u64, s: usize, n: u64) -> Result<Dft> {
        Dft::with_base(self.ring(p, s)?, n)
    }
}

/// Run with arguments (including the program name) and the process environment.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let pinned = std::env::var(MODULUS_OVERRIDE_VAR).ok();
    run_with(args, pinned.as_deref(), out, err)
}

/// Run with an explicit modulus override instead of the environment.
pub fn run_with<I, T>(args: I, modulus: Option<&str>, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{text}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{text}");
                    EXIT_PARSE
                }
            };
        }
    };
    let result = RingFactory::new(modulus)
        .map_err(|e| match e {
            Error::Parse { offset, message } => {
                Error::InvalidModulus(format!("{MODULUS_OVERRIDE_VAR}: offset {offset}: {message}"))
            }
            other => other,
        })
        .and_then(|f| dispatch(&cli, &f, out));
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            match e {
                Error::Parse { .. } => EXIT_PARSE,
                _ => EXIT_DOMAIN,
            }
        }
    }
}

fn io(e: std::io::Error) -> Error {
    Error::Internal(format!("write failed: {e}"))
}

fn dispatch(cli: &Cli, rings: &RingFactory, out: &mut dyn Write) -> Result<i32> {
    let fmt = cli.format;
    match &cli.command {
        Command::Count { p, s, n, kind } => {
            let (p, s, n) = (*p, *s, *n);
            let count = match kind {
                None => counting::count_e_composite(p, s, n)?,
                Some(kind) => {
                    let (m, a) = counting::split_length(p, n);
                    if m != 1 {
                        return Err(Error::OutOfRange {
                            what: "n",
                            detail: format!("--kind needs n a power of {p}, got {n}"),
                        });
                    }
                    let params = CodeParams::new(p, s, a)?;
                    match kind {
                        CodeKind::Cyclic => counting::count_all(&params),
                        CodeKind::Euclidean => counting::count_e_prime_power(&params),
                        CodeKind::Hermitian => counting::count_h_prime_power(&params)?,
                    }
                }
            };
            match fmt {
                Format::Kv => {
                    let kind = match kind {
                        None | Some(CodeKind::Euclidean) => "euclidean",
                        Some(CodeKind::Cyclic) => "cyclic",
                        Some(CodeKind::Hermitian) => "hermitian",
                    };
                    writeln!(out, "p={p} s={s} n={n} kind={kind} count={count}")
                }
                Format::Tsv => writeln!(out, "{n}\t{count}"),
                Format::Text => writeln!(out, "{count}"),
            }
            .map_err(io)?;
        }
        Command::Table { p, s, max } => {
            let rows = counting::emit_table(*p, *s, *max)?;
            let wn = max.to_string().len().max(1);
            let wc = rows.iter().map(|(_, c)| c.to_string().len()).max().unwrap_or(1).max(3);
            if fmt == Format::Text {
                writeln!(out, "{:>wn$}  {:>wc$}", "n", "N_E").map_err(io)?;
            }
            for (n, c) in rows {
                match fmt {
                    Format::Text => writeln!(out, "{n:>wn$}  {c:>wc$}"),
                    Format::Tsv => writeln!(out, "{n}\t{c}"),
                    Format::Kv => writeln!(out, "n={n} count={c}"),
                }
                .map_err(io)?;
            }
        }
        Command::Enumerate { p, s, a, kind } => {
            let cr = rings.cyclic(*p, *s, *a)?;
            let params = cr.params();
            let mut emit = |i: usize, code: &crate::cyclic::CanonicalCode| {
                let text = literal::format_code(&params, cr.ring(), code);
                match fmt {
                    Format::Kv => writeln!(out, "index={i} code={text}"),
                    _ => writeln!(out, "{text}"),
                }
                .map_err(io)
            };
            match kind {
                CodeKind::Cyclic => {
                    for (i, code) in cr.enumerate_ideals()?.enumerate() {
                        emit(i, &code)?;
                    }
                }
                CodeKind::Euclidean | CodeKind::Hermitian => {
                    let dk = if *kind == CodeKind::Euclidean {
                        DualKind::Euclidean
                    } else {
                        DualKind::Hermitian
                    };
                    for (i, code) in duality::enumerate_self_dual(&cr, dk)?.iter().enumerate() {
                        emit(i, code)?;
                    }
                }
            }
        }
        Command::Dual { kind, code } => {
            let lit = literal::parse_code_literal(code)?;
            let CodeParams { p, s, a } = lit.params;
            let cr = rings.cyclic(p, s, a)?;
            let c = lit.resolve(&cr)?;
            let d = duality::dual(&cr, &c, (*kind).into())?;
            let text = literal::format_code(&cr.params(), cr.ring(), &d);
            match fmt {
                Format::Kv => writeln!(out, "kind={} code={text}", DualKind::from(*kind)),
                _ => writeln!(out, "{text}"),
            }
            .map_err(io)?;
        }
        Command::Normalize { p, s, a, gens } => {
            let cr = rings.cyclic(*p, *s, *a)?;
            let polys = literal::parse_poly_list(cr.ring(), gens, cr.length(), &["u"])?;
            let polys = polys
                .into_iter()
                .map(|v| cr.from_u_coeffs(v))
                .collect::<Result<Vec<_>>>()?;
            let c = cr.normalize(&polys);
            let text = literal::format_code(&cr.params(), cr.ring(), &c);
            match fmt {
                Format::Kv => writeln!(out, "code={text}"),
                _ => writeln!(out, "{text}"),
            }
            .map_err(io)?;
        }
        Command::Decompose { p, s, n, gens } => {
            let dft = rings.dft(*p, *s, *n)?;
            let polys = literal::parse_poly_list(dft.base().ring(), gens, *n as usize, &["X"])?;
            let code = dft.decompose(&polys)?;
            let text = literal::format_decomposed(&dft, &code)?;
            match fmt {
                Format::Kv => writeln!(out, "code={text}"),
                _ => writeln!(out, "{text}"),
            }
            .map_err(io)?;
        }
        Command::SelfdualComposite { p, s, n } => {
            let dft = rings.dft(*p, *s, *n)?;
            for (i, code) in dft.enumerate_self_dual_composite()?.enumerate() {
                let text = literal::format_decomposed(&dft, &code?)?;
                match fmt {
                    Format::Kv => writeln!(out, "index={i} code={text}"),
                    _ => writeln!(out, "{text}"),
                }
                .map_err(io)?;
            }
        }
        Command::Verify { level } => {
            let level = match level {
                LevelArg::Quick => verify::Level::Quick,
                LevelArg::Full => verify::Level::Full,
            };
            let mut all_ok = true;
            for check in verify::checks(level) {
                let outcome = verify::execute(&check);
                all_ok &= outcome.passed();
                match (fmt, &outcome.result) {
                    (Format::Kv, Ok(())) => writeln!(out, "check={} status=pass", outcome.name),
                    (Format::Kv, Err(m)) => {
                        writeln!(out, "check={} status=fail detail={m:?}", outcome.name)
                    }
                    (_, Ok(())) => writeln!(out, "PASS {}", outcome.name),
                    (_, Err(m)) => writeln!(out, "FAIL {}: {m}", outcome.name),
                }
                .map_err(io)?;
                let _ = out.flush();
            }
            return Ok(if all_ok { EXIT_OK } else { EXIT_VERIFY });
        }
    }
    Ok(EXIT_OK)
}
