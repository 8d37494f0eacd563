//! Run configuration: flags over config file over `QBANK_SEED` over
//! built-in defaults.
//!
//! The config file holds `key = value` lines whose keys are the long flag
//! names (`family`, `count`, `seed`, `start-index`, `out`, `format`,
//! `clock`) or generator bound names (`lin-coef`, `z-sd-max`, ...). Blank
//! lines and lines starting with `#` are ignored.

use std::collections::BTreeMap;
use std::path::PathBuf;

use clap::ValueEnum;
use qbank_core::templates::{family, Bounds};

use crate::output::OutputFormat;
use crate::CliError;

pub const SEED_ENV: &str = "QBANK_SEED";
pub const DEFAULT_COUNT: u32 = 10;

const RUN_KEYS: [&str; 7] = ["family", "count", "seed", "start-index", "out", "format", "clock"];

pub const BOUND_KEYS: [&str; 11] = [
    "lin-coef",
    "lin-const",
    "lin-solution",
    "rat-numer",
    "rat-denom",
    "quad-root",
    "quad-lead",
    "z-mean-min",
    "z-mean-max",
    "z-sd-min",
    "z-sd-max",
];

fn bound_slot<'a>(bounds: &'a mut Bounds, key: &str) -> Option<&'a mut i64> {
    Some(match key {
        "lin-coef" => &mut bounds.lin_coef,
        "lin-const" => &mut bounds.lin_const,
        "lin-solution" => &mut bounds.lin_solution,
        "rat-numer" => &mut bounds.rat_numer,
        "rat-denom" => &mut bounds.rat_denom,
        "quad-root" => &mut bounds.quad_root,
        "quad-lead" => &mut bounds.quad_lead,
        "z-mean-min" => &mut bounds.z_mean_min,
        "z-mean-max" => &mut bounds.z_mean_max,
        "z-sd-min" => &mut bounds.z_sd_min,
        "z-sd-max" => &mut bounds.z_sd_max,
        _ => return None,
    })
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

/// Parsed config file: key to `(line number, value)`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ConfigFile {
    entries: BTreeMap<String, (usize, String)>,
}

impl ConfigFile {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        let mut entries = BTreeMap::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let n = i + 1;
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| usage(format!("config line {n}: expected `key = value`")))?;
            let key = key.trim();
            if !RUN_KEYS.contains(&key) && !BOUND_KEYS.contains(&key) {
                return Err(usage(format!("config line {n}: unknown key `{key}`")));
            }
            if entries.insert(key.to_string(), (n, value.trim().to_string())).is_some() {
                return Err(usage(format!("config line {n}: `{key}` given twice")));
            }
        }
        Ok(ConfigFile { entries })
    }

    fn get(&self, key: &str) -> Option<(String, &str)> {
        self.entries
            .get(key)
            .map(|(n, v)| (format!("config line {n}"), v.as_str()))
    }
}

/// Values given on the command line; `None` means not given.
#[derive(Debug, Clone, Default)]
pub struct Overrides {
    pub family: Option<String>,
    pub count: Option<u32>,
    pub seed: Option<u64>,
    pub start_index: Option<u32>,
    pub out: Option<PathBuf>,
    pub format: Option<OutputFormat>,
    pub clock: Option<String>,
    /// `(key, value)` pairs for generator bounds.
    pub bounds: Vec<(String, i64)>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub master_seed: u64,
    pub family: String,
    pub count: u32,
    pub start_index: u32,
    pub out_dir: PathBuf,
    /// `None` picks the format from the question kinds.
    pub format: Option<OutputFormat>,
    /// `None` stamps the current local time.
    pub clock: Option<String>,
    pub bounds: Bounds,
}

fn parse_value<T: std::str::FromStr>(origin: &str, key: &str, v: &str) -> Result<T, CliError> {
    v.parse()
        .map_err(|_| usage(format!("{origin}: invalid value `{v}` for `{key}`")))
}

impl RunConfig {
    pub fn resolve(
        flags: &Overrides,
        file: Option<&ConfigFile>,
        env_seed: Option<&str>,
    ) -> Result<Self, CliError> {
        let empty = ConfigFile::default();
        let file = file.unwrap_or(&empty);

        let family_name = match (&flags.family, file.get("family")) {
            (Some(f), _) => f.clone(),
            (None, Some((_, v))) => v.to_string(),
            (None, None) => return Err(usage("no question family given (use --family)")),
        };
        family(&family_name).map_err(|e| usage(e.to_string()))?;

        let count = match (flags.count, file.get("count")) {
            (Some(c), _) => c,
            (None, Some((o, v))) => parse_value(&o, "count", v)?,
            (None, None) => DEFAULT_COUNT,
        };
        if count == 0 {
            return Err(usage("count must be at least 1"));
        }
        let start_index = match (flags.start_index, file.get("start-index")) {
            (Some(s), _) => s,
            (None, Some((o, v))) => parse_value(&o, "start-index", v)?,
            (None, None) => 1,
        };
        if start_index == 0 {
            return Err(usage("start index must be at least 1"));
        }
        let master_seed = match (flags.seed, file.get("seed"), env_seed) {
            (Some(s), _, _) => s,
            (None, Some((o, v)), _) => parse_value(&o, "seed", v)?,
            (None, None, Some(v)) => parse_value(SEED_ENV, "seed", v)?,
            (None, None, None) => 0,
        };
        let out_dir = match (&flags.out, file.get("out")) {
            (Some(p), _) => p.clone(),
            (None, Some((_, v))) => PathBuf::from(v),
            (None, None) => PathBuf::from("."),
        };
        let format = match (flags.format, file.get("format")) {
            (Some(f), _) => Some(f),
            (None, Some((o, v))) => Some(
                OutputFormat::from_str(v, true)
                    .map_err(|_| usage(format!("{o}: format must be txt, html or both")))?,
            ),
            (None, None) => None,
        };
        let clock = flags
            .clock
            .clone()
            .or_else(|| file.get("clock").map(|(_, v)| v.to_string()));

        let mut bounds = Bounds::default();
        for key in BOUND_KEYS {
            if let Some((o, v)) = file.get(key) {
                *bound_slot(&mut bounds, key).expect("known key") = parse_value(&o, key, v)?;
            }
        }
        for (key, v) in &flags.bounds {
            *bound_slot(&mut bounds, key)
                .ok_or_else(|| usage(format!("unknown bound `{key}`")))? = *v;
        }
        bounds.validate().map_err(|e| usage(e.to_string()))?;

        Ok(RunConfig {
            master_seed,
            family: family_name,
            count,
            start_index,
            out_dir,
            format,
            clock,
            bounds,
        })
    }
}

/// Parses a `--bound key=value` argument.
pub fn parse_bound(arg: &str) -> Result<(String, i64), String> {
    let (k, v) = arg
        .split_once('=')
        .ok_or_else(|| format!("expected key=value, got `{arg}`"))?;
    let k = k.trim();
    if !BOUND_KEYS.contains(&k) {
        return Err(format!("unknown bound `{k}`; known: {}", BOUND_KEYS.join(", ")));
    }
    let v = v.trim().parse().map_err(|_| format!("`{v}` is not an integer"))?;
    Ok((k.to_string(), v))
}
