//! Command-line front end.
//!
//! Exit codes: 0 for a constructed certificate (or a passing `verify`),
//! 1 for violation results and failed verification, 2 for input errors.

use std::ffi::OsString;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};

use crate::erdos_szekeres;
use crate::hall;
use crate::io::{self, Certificate, Instance};
use crate::{dilworth, mirsky, Caps};

#[derive(Debug, Parser)]
#[command(
    name = "poset-cert",
    version,
    about = "Certified decompositions of finite posets"
)]
pub struct Cli {
    /// Largest carrier for the exhaustive antichain/chain searches.
    #[arg(long, global = true, default_value_t = Caps::default().oracle)]
    pub oracle_cap: usize,
    /// Largest left side for exhaustive Hall-condition checks.
    #[arg(long, global = true, default_value_t = Caps::default().subset)]
    pub subset_cap: usize,
    /// Largest carrier for the minimum-cover partition search.
    #[arg(long, global = true, default_value_t = Caps::default().cover)]
    pub cover_cap: usize,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Largest antichain of a poset.
    Width { instance: PathBuf },
    /// Largest chain of a poset.
    Height { instance: PathBuf },
    /// Chain cover of size equal to the width.
    ChainCover { instance: PathBuf },
    /// Antichain cover of size equal to the height.
    AntichainCover { instance: PathBuf },
    /// Compare width with the constructed chain cover size.
    CheckDilworth { instance: PathBuf },
    /// Compare height with the constructed antichain cover size.
    CheckMirsky { instance: PathBuf },
    /// L-perfect matching of a bipartite graph, or a Hall violation.
    Matching { instance: PathBuf },
    /// System of distinct representatives of a set family.
    Sdr { instance: PathBuf },
    /// Monotone subsequence of length m+1 (increasing) or n+1 (decreasing).
    Es {
        instance: PathBuf,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
    },
    /// Re-check a certificate against an instance.
    Verify {
        instance: PathBuf,
        certificate: PathBuf,
    },
}

/// What a command printed and how it exited.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn input_error(msg: impl std::fmt::Display) -> Self {
        Outcome {
            code: 2,
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
        }
    }

    fn certificate(cert: &Certificate) -> Self {
        Outcome {
            code: if cert.is_violation() { 1 } else { 0 },
            stdout: format!("{}\n", cert.to_json()),
            stderr: String::new(),
        }
    }
}

/// Parses `argv` (program name first) and runs the command.
pub fn run<I, A>(argv: I) -> Outcome
where
    I: IntoIterator<Item = A>,
    A: Into<OsString> + Clone,
{
    match Cli::try_parse_from(argv) {
        Ok(cli) => execute(&cli),
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            if code == 0 {
                Outcome {
                    code,
                    stdout: text,
                    stderr: String::new(),
                }
            } else {
                Outcome {
                    code,
                    stdout: String::new(),
                    stderr: text,
                }
            }
        }
    }
}

fn load(path: &Path, caps: &Caps) -> Result<Instance, String> {
    let bytes = std::fs::read(path).map_err(|e| format!("{}: {e}", path.display()))?;
    io::parse_instance(&bytes, caps).map_err(|e| format!("{}: {e}", path.display()))
}

fn wrong_kind(inst: &Instance, want: &str) -> String {
    format!("expected a {want} instance, got {}", inst.kind())
}

pub fn execute(cli: &Cli) -> Outcome {
    let caps = Caps {
        oracle: cli.oracle_cap,
        subset: cli.subset_cap,
        cover: cli.cover_cap,
        ..Caps::default()
    };
    match solve(&cli.command, &caps) {
        Ok(out) => out,
        Err(msg) => Outcome::input_error(msg),
    }
}

fn poset(cmd_path: &Path, caps: &Caps) -> Result<crate::FinitePoset<String>, String> {
    match load(cmd_path, caps)? {
        Instance::Poset(p) => Ok(p),
        other => Err(wrong_kind(&other, "poset")),
    }
}

fn solve(cmd: &Command, caps: &Caps) -> Result<Outcome, String> {
    let err = |e: crate::Error| e.to_string();
    let cert = match cmd {
        Command::Width { instance } => {
            let w = dilworth::width(&poset(instance, caps)?, caps).map_err(err)?;
            Certificate::Width {
                width: w.size,
                antichain: w.witness,
            }
        }
        Command::Height { instance } => {
            let h = mirsky::height(&poset(instance, caps)?, caps).map_err(err)?;
            Certificate::Height {
                height: h.size,
                chain: h.witness,
            }
        }
        Command::ChainCover { instance } => {
            let cert = dilworth::perles_chain_cover(&poset(instance, caps)?, caps).map_err(err)?;
            io::chain_cover_certificate(&cert)
        }
        Command::AntichainCover { instance } => {
            let cert = mirsky::mirsky_antichain_cover(&poset(instance, caps)?, caps);
            io::antichain_cover_certificate(&cert)
        }
        Command::CheckDilworth { instance } => {
            let r = dilworth::check_dilworth(&poset(instance, caps)?, caps).map_err(err)?;
            Certificate::CheckDilworth {
                width: r.width,
                cover_size: r.cover_size,
                equal: r.equal,
            }
        }
        Command::CheckMirsky { instance } => {
            let r = mirsky::check_mirsky(&poset(instance, caps)?, caps).map_err(err)?;
            Certificate::CheckMirsky {
                height: r.height,
                cover_size: r.cover_size,
                equal: r.equal,
            }
        }
        Command::Matching { instance } => match load(instance, caps)? {
            Instance::Bigraph(g) => {
                io::matching_certificate(hall::find_l_perfect_matching(&g, caps).map_err(err)?)
            }
            other => return Err(wrong_kind(&other, "bigraph")),
        },
        Command::Sdr { instance } => match load(instance, caps)? {
            Instance::Family(f) => io::sdr_certificate(hall::find_sdr(&f, caps).map_err(err)?),
            other => return Err(wrong_kind(&other, "family")),
        },
        Command::Es { instance, m, n } => match load(instance, caps)? {
            Instance::Sequence(s) => {
                let w = erdos_szekeres::es_subsequence(&s, *m, *n, caps).map_err(err)?;
                io::es_certificate(*m, *n, &w)
            }
            other => return Err(wrong_kind(&other, "sequence")),
        },
        Command::Verify {
            instance,
            certificate,
        } => {
            let inst = load(instance, caps)?;
            let bytes = std::fs::read(certificate)
                .map_err(|e| format!("{}: {e}", certificate.display()))?;
            let cert = Certificate::from_json(&bytes)
                .map_err(|e| format!("{}: {e}", certificate.display()))?;
            let verdict = io::verify_certificate(&inst, &cert, caps);
            return Ok(Outcome {
                code: if verdict.valid { 0 } else { 1 },
                stdout: format!(
                    "{}\n",
                    serde_json::to_string(&verdict).expect("verdicts serialize")
                ),
                stderr: String::new(),
            });
        }
    };
    Ok(Outcome::certificate(&cert))
}
