use std::ffi::OsString;
use std::path::Path;

use clap::{ArgAction, Command};

use crate::CliError;

/// One `key = value` line.
#[derive(Debug, Clone, PartialEq)]
pub struct Entry {
    pub key: String,
    pub value: String,
    pub line: usize,
}

/// Parses a line-oriented `key = value` file. `#` starts a comment;
/// keys may use `_` or `-`.
pub fn parse_config(text: &str) -> Result<Vec<Entry>, CliError> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (k, v) = line
            .split_once('=')
            .ok_or_else(|| CliError::Usage(format!("config line {}: expected key = value", i + 1)))?;
        let key = k.trim().replace('_', "-");
        if key.is_empty() {
            return Err(CliError::Usage(format!("config line {}: empty key", i + 1)));
        }
        out.push(Entry { key, value: v.trim().to_string(), line: i + 1 });
    }
    Ok(out)
}

fn given_on_cli(args: &[OsString], long: &str) -> bool {
    let flag = format!("--{long}");
    let prefix = format!("--{long}=");
    args.iter().filter_map(|a| a.to_str()).any(|a| a == flag || a.starts_with(&prefix))
}

fn config_path(args: &[OsString]) -> Result<Option<OsString>, CliError> {
    let mut it = args.iter();
    while let Some(a) = it.next() {
        if a == "--config" {
            return it
                .next()
                .cloned()
                .map(Some)
                .ok_or_else(|| CliError::Usage("--config needs a path".into()));
        }
        if let Some(p) = a.to_str().and_then(|s| s.strip_prefix("--config=")) {
            return Ok(Some(p.into()));
        }
    }
    Ok(None)
}

/// Splices the entries of the `--config` file into `args` as flags,
/// skipping any flag already given on the command line.
pub fn expand_config(cmd: &Command, args: Vec<OsString>) -> Result<Vec<OsString>, CliError> {
    let Some(path) = config_path(&args)? else {
        return Ok(args);
    };
    let Some(name) = args.get(1).and_then(|s| s.to_str()) else {
        return Ok(args);
    };
    let Some(sub) = cmd.find_subcommand(name) else {
        return Ok(args);
    };
    let path = Path::new(&path);
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Io(format!("cannot read config {}: {e}", path.display())))?;
    let mut injected = Vec::new();
    for e in parse_config(&text)? {
        if e.key == "config" {
            return Err(CliError::Usage(format!("config line {}: nested config is not supported", e.line)));
        }
        let arg = sub
            .get_arguments()
            .find(|a| a.get_long() == Some(e.key.as_str()))
            .ok_or_else(|| CliError::Usage(format!("config line {}: unknown key {:?} for {name}", e.line, e.key)))?;
        if given_on_cli(&args, &e.key) {
            continue;
        }
        match arg.get_action() {
            ArgAction::SetTrue => match e.value.as_str() {
                "true" | "yes" | "1" => injected.push(format!("--{}", e.key).into()),
                "false" | "no" | "0" => {}
                v => return Err(CliError::Usage(format!("config line {}: expected a boolean, got {v:?}", e.line))),
            },
            _ => injected.push(format!("--{}={}", e.key, e.value).into()),
        }
    }
    let mut out = args;
    out.splice(2..2, injected);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_comments_and_blank_lines() {
        let es = parse_config("# header\n\ntheta_over_2pi = 1e-4  # trailing\n eta=0.9\n").unwrap();
        assert_eq!(es.len(), 2);
        assert_eq!(es[0], Entry { key: "theta-over-2pi".into(), value: "1e-4".into(), line: 3 });
        assert_eq!(es[1].value, "0.9");
    }

    #[test]
    fn rejects_lines_without_equals() {
        assert!(matches!(parse_config("eta 0.9"), Err(CliError::Usage(_))));
    }

    #[test]
    fn cli_flag_detection() {
        let args: Vec<OsString> = ["gravent", "point", "--eta=0.5", "--zeta", "1"].iter().map(OsString::from).collect();
        assert!(given_on_cli(&args, "eta"));
        assert!(given_on_cli(&args, "zeta"));
        assert!(!given_on_cli(&args, "ratio"));
    }
}
