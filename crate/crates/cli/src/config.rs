//! Command-line flags and the optional `key=value` config file.

use std::collections::BTreeMap;
use std::fs;
use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::{ArgAction, CommandFactory, Parser, ValueEnum};
use ffhyper::verifier::DEFAULT_BUDGET;
use ffhyper::{prime_power, registry_ids, Mode};
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Backend {
    Exact,
    Float,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Exhaustive,
    Sample,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Mode {
        match m {
            ModeArg::Exhaustive => Mode::Exhaustive,
            ModeArg::Sample => Mode::Sample,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Identities {
    #[serde(serialize_with = "all")]
    All,
    List(Vec<String>),
}

fn all<S: serde::Serializer>(s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str("all")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Output {
    Text,
    Json,
}

/// Everything a run depends on.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    /// `(p, r)` pairs, sorted by `q` and deduplicated.
    pub fields: Vec<(u32, u32)>,
    pub identities: Identities,
    pub mode: Mode,
    pub samples: u64,
    pub seed: u64,
    pub backend: Backend,
    pub max_arity: u32,
    pub budget: u128,
    pub output: Output,
    pub out_path: Option<PathBuf>,
    pub timings: bool,
    pub corrupt: Option<String>,
}

/// What the command line asks for.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Command {
    Run(RunConfig),
    List,
}

#[derive(Parser, Debug, Default)]
#[command(
    name = "ffhyper",
    version,
    about = "Check hypergeometric identities over small finite fields",
    after_help = "Exit status: 0 when every identity holds, 1 on a failure, 2 on a usage error."
)]
struct Cli {
    /// Field characteristic; pairs with the matching --r
    #[arg(long = "p", action = ArgAction::Append, value_name = "P")]
    p: Vec<u32>,
    /// Extension degree; defaults to 1 when no --r is given at all
    #[arg(long = "r", action = ArgAction::Append, value_name = "R")]
    r: Vec<u32>,
    /// Comma-separated prime powers, e.g. 3,4,5
    #[arg(long = "q-list", value_name = "Q,...")]
    q_list: Option<String>,
    /// Identity id (repeatable)
    #[arg(long = "identity", action = ArgAction::Append, value_name = "ID")]
    identity: Vec<String>,
    /// Every registered identity
    #[arg(long)]
    all: bool,
    #[arg(long, value_enum)]
    mode: Option<ModeArg>,
    /// Draws per identity and field in sample mode [default: 200]
    #[arg(long)]
    samples: Option<u64>,
    /// Sampling seed [default: 0]
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long, value_enum)]
    backend: Option<Backend>,
    /// Largest Lauricella arity swept [default: 3]
    #[arg(long = "max-arity")]
    max_arity: Option<u32>,
    /// Largest exhaustive sweep, in tuples [default: 10000000]
    #[arg(long)]
    budget: Option<u128>,
    /// Emit JSON instead of text
    #[arg(long)]
    json: bool,
    /// Write the report here instead of stdout
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
    /// Read defaults from a key=value file; flags win
    #[arg(long, value_name = "FILE")]
    config: Option<PathBuf>,
    /// Record wall-clock time per report (makes output nondeterministic)
    #[arg(long)]
    timings: bool,
    /// List identity ids and exit
    #[arg(long)]
    list: bool,
    #[arg(long = "corrupt-rhs", hide = true, value_name = "ID")]
    corrupt: Option<String>,
}

fn usage(kind: ErrorKind, msg: impl std::fmt::Display) -> clap::Error {
    Cli::command().error(kind, msg)
}

/// Flattened `key=value` lines; repeated keys accumulate.
fn read_config_file(path: &PathBuf) -> Result<BTreeMap<String, Vec<String>>, clap::Error> {
    let text = fs::read_to_string(path)
        .map_err(|e| usage(ErrorKind::Io, format!("cannot read {}: {e}", path.display())))?;
    let mut map: BTreeMap<String, Vec<String>> = BTreeMap::new();
    for (no, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (k, v) = line.split_once('=').ok_or_else(|| {
            usage(
                ErrorKind::InvalidValue,
                format!("{}:{}: expected key=value", path.display(), no + 1),
            )
        })?;
        map.entry(k.trim().to_string())
            .or_default()
            .push(v.trim().to_string());
    }
    Ok(map)
}

/// Folds config-file entries into `cli` wherever the command line left a
/// gap.
fn merge_file(cli: &mut Cli, file: BTreeMap<String, Vec<String>>) -> Result<(), clap::Error> {
    fn one<T: std::str::FromStr>(key: &str, vals: &[String]) -> Result<T, clap::Error> {
        let v = vals.last().unwrap();
        v.parse()
            .map_err(|_| usage(ErrorKind::InvalidValue, format!("config key `{key}`: bad value `{v}`")))
    }
    fn flag(key: &str, vals: &[String]) -> Result<bool, clap::Error> {
        match vals.last().unwrap().as_str() {
            "" | "true" | "1" | "yes" => Ok(true),
            "false" | "0" | "no" => Ok(false),
            v => Err(usage(ErrorKind::InvalidValue, format!("config key `{key}`: bad value `{v}`"))),
        }
    }
    fn list<T: std::str::FromStr>(key: &str, vals: &[String]) -> Result<Vec<T>, clap::Error> {
        vals.iter()
            .flat_map(|v| v.split(','))
            .map(|s| s.trim())
            .filter(|s| !s.is_empty())
            .map(|s| {
                s.parse()
                    .map_err(|_| usage(ErrorKind::InvalidValue, format!("config key `{key}`: bad value `{s}`")))
            })
            .collect()
    }
    let cli_has_fields = !cli.p.is_empty() || cli.q_list.is_some();
    for (key, vals) in &file {
        match key.as_str() {
            "p" if !cli_has_fields => cli.p = list(key, vals)?,
            "r" if !cli_has_fields => cli.r = list(key, vals)?,
            "q-list" if !cli_has_fields => cli.q_list = Some(vals.join(",")),
            "p" | "r" | "q-list" => {}
            "identity" if cli.identity.is_empty() && !cli.all => cli.identity = list(key, vals)?,
            "identity" => {}
            "all" => cli.all |= cli.identity.is_empty() && flag(key, vals)?,
            "mode" => {
                if cli.mode.is_none() {
                    cli.mode = Some(
                        ModeArg::from_str(vals.last().unwrap(), true)
                            .map_err(|e| usage(ErrorKind::InvalidValue, format!("config key `mode`: {e}")))?,
                    );
                }
            }
            "backend" => {
                if cli.backend.is_none() {
                    cli.backend = Some(
                        Backend::from_str(vals.last().unwrap(), true)
                            .map_err(|e| usage(ErrorKind::InvalidValue, format!("config key `backend`: {e}")))?,
                    );
                }
            }
            "samples" => cli.samples = cli.samples.or(Some(one(key, vals)?)),
            "seed" => cli.seed = cli.seed.or(Some(one(key, vals)?)),
            "max-arity" => cli.max_arity = cli.max_arity.or(Some(one(key, vals)?)),
            "budget" => cli.budget = cli.budget.or(Some(one(key, vals)?)),
            "json" => cli.json |= flag(key, vals)?,
            "timings" => cli.timings |= flag(key, vals)?,
            "out" => {
                if cli.out.is_none() {
                    cli.out = Some(PathBuf::from(vals.last().unwrap()));
                }
            }
            _ => return Err(usage(ErrorKind::UnknownArgument, format!("unknown config key `{key}`"))),
        }
    }
    Ok(())
}

fn parse_q_list(s: &str) -> Result<Vec<(u32, u32)>, clap::Error> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| {
            let q: u64 = t
                .parse()
                .map_err(|_| usage(ErrorKind::InvalidValue, format!("`{t}` in --q-list is not a number")))?;
            prime_power(q)
                .ok_or_else(|| usage(ErrorKind::InvalidValue, format!("{q} in --q-list is not a prime power")))
        })
        .collect()
}

/// Parses a full argument vector, program name first.
pub fn parse_args<I, T>(argv: I) -> Result<Command, clap::Error>
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let mut cli = Cli::try_parse_from(argv)?;
    if cli.list {
        return Ok(Command::List);
    }
    if let Some(path) = cli.config.clone() {
        let file = read_config_file(&path)?;
        merge_file(&mut cli, file)?;
    }

    let mut fields = Vec::new();
    if !cli.r.is_empty() && cli.r.len() != cli.p.len() {
        return Err(usage(
            ErrorKind::WrongNumberOfValues,
            format!("{} --p values but {} --r values", cli.p.len(), cli.r.len()),
        ));
    }
    for (i, &p) in cli.p.iter().enumerate() {
        let r = cli.r.get(i).copied().unwrap_or(1);
        if r == 0 || prime_power((p as u64).saturating_pow(r)) != Some((p, r)) {
            return Err(usage(ErrorKind::InvalidValue, format!("--p {p} --r {r} is not a prime power field")));
        }
        fields.push((p, r));
    }
    if let Some(list) = &cli.q_list {
        fields.extend(parse_q_list(list)?);
    }
    if fields.is_empty() {
        return Err(usage(ErrorKind::MissingRequiredArgument, "no field selected; use --q-list or --p/--r"));
    }
    fields.sort_by_key(|&(p, r)| (p as u64).pow(r));
    fields.dedup();

    let identities = match (cli.all, cli.identity.is_empty()) {
        (true, true) => Identities::All,
        (false, false) => {
            let known = registry_ids();
            let mut ids = Vec::new();
            for id in cli.identity.iter().flat_map(|s| s.split(',')).map(str::trim) {
                if !known.contains(&id) {
                    return Err(usage(ErrorKind::InvalidValue, format!("unknown identity `{id}`; see --list")));
                }
                if !ids.iter().any(|x| x == id) {
                    ids.push(id.to_string());
                }
            }
            Identities::List(ids)
        }
        (true, false) => {
            return Err(usage(ErrorKind::ArgumentConflict, "--all and --identity are exclusive"));
        }
        (false, true) => {
            return Err(usage(ErrorKind::MissingRequiredArgument, "no identity selected; use --identity or --all"));
        }
    };

    let samples = cli.samples.unwrap_or(200);
    if samples == 0 {
        return Err(usage(ErrorKind::InvalidValue, "--samples must be positive"));
    }
    if let Some(id) = &cli.corrupt {
        if !registry_ids().contains(&id.as_str()) {
            return Err(usage(ErrorKind::InvalidValue, format!("unknown identity `{id}`")));
        }
    }
    Ok(Command::Run(RunConfig {
        fields,
        identities,
        mode: cli.mode.map(Mode::from).unwrap_or(Mode::Exhaustive),
        samples,
        seed: cli.seed.unwrap_or(0),
        backend: cli.backend.unwrap_or(Backend::Exact),
        max_arity: cli.max_arity.unwrap_or(3),
        budget: cli.budget.unwrap_or(DEFAULT_BUDGET),
        output: if cli.json { Output::Json } else { Output::Text },
        out_path: cli.out,
        timings: cli.timings,
        corrupt: cli.corrupt,
    }))
}

impl RunConfig {
    /// Flags that parse back to this exact configuration.
    pub fn to_flags(&self) -> Vec<String> {
        let mut out = Vec::new();
        for &(p, r) in &self.fields {
            out.extend(["--p".into(), p.to_string(), "--r".into(), r.to_string()]);
        }
        match &self.identities {
            Identities::All => out.push("--all".into()),
            Identities::List(ids) => {
                for id in ids {
                    out.extend(["--identity".into(), id.clone()]);
                }
            }
        }
        out.extend(["--mode".into(), self.mode.as_str().into()]);
        out.extend(["--samples".into(), self.samples.to_string()]);
        out.extend(["--seed".into(), self.seed.to_string()]);
        let backend = match self.backend {
            Backend::Exact => "exact",
            Backend::Float => "float",
        };
        out.extend(["--backend".into(), backend.into()]);
        out.extend(["--max-arity".into(), self.max_arity.to_string()]);
        out.extend(["--budget".into(), self.budget.to_string()]);
        if self.output == Output::Json {
            out.push("--json".into());
        }
        if let Some(path) = &self.out_path {
            out.extend(["--out".into(), path.display().to_string()]);
        }
        if self.timings {
            out.push("--timings".into());
        }
        if let Some(id) = &self.corrupt {
            out.extend(["--corrupt-rhs".into(), id.clone()]);
        }
        out
    }

    pub fn identity_ids(&self) -> Vec<String> {
        match &self.identities {
            Identities::All => registry_ids().into_iter().map(String::from).collect(),
            Identities::List(ids) => ids.clone(),
        }
    }
}
