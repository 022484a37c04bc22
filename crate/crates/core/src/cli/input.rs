//! Input files: measured data (JSON or CSV) and process descriptions
//! (JSON). Numbers are integers, decimal strings or `"p/q"` strings;
//! binary floating point is refused.

use serde_json::Value;

use super::CliError;
use crate::cone::PolyCone;
use crate::exactnum::{parse_rational, Rational};
use crate::linalg::Mat;
use crate::process::{ConvexProcess, DataSet};

/// What an input file describes.
pub enum Input {
    Data(DataSet),
    Process(ConvexProcess),
}

fn bad(path: &str, msg: impl std::fmt::Display) -> CliError {
    CliError::Input(format!("{path}: {msg}"))
}

fn number(v: &Value, path: &str) -> Result<Rational, CliError> {
    match v {
        Value::Number(num) => {
            if let Some(i) = num.as_i64() {
                Ok(Rational::from_integer(i.into()))
            } else if let Some(u) = num.as_u64() {
                Ok(Rational::from_integer(u.into()))
            } else {
                Err(bad(
                    path,
                    format!("binary floating-point number {num} is not exact; write it as a string such as \"{num}\""),
                ))
            }
        }
        Value::String(s) => parse_rational(s).map_err(|e| bad(path, e)),
        other => Err(bad(path, format!("expected a number, found {}", kind(other)))),
    }
}

fn kind(v: &Value) -> &'static str {
    match v {
        Value::Null => "null",
        Value::Bool(_) => "a boolean",
        Value::Number(_) => "a number",
        Value::String(_) => "a string",
        Value::Array(_) => "an array",
        Value::Object(_) => "an object",
    }
}

fn array<'a>(v: &'a Value, path: &str) -> Result<&'a Vec<Value>, CliError> {
    v.as_array()
        .ok_or_else(|| bad(path, format!("expected an array, found {}", kind(v))))
}

fn vector(v: &Value, path: &str, len: usize) -> Result<Vec<Rational>, CliError> {
    let items = array(v, path)?;
    if items.len() != len {
        return Err(bad(path, format!("expected {len} entries, found {}", items.len())));
    }
    items
        .iter()
        .enumerate()
        .map(|(i, x)| number(x, &format!("{path}[{i}]")))
        .collect()
}

fn vectors(v: &Value, path: &str, len: usize) -> Result<Vec<Vec<Rational>>, CliError> {
    array(v, path)?
        .iter()
        .enumerate()
        .map(|(i, x)| vector(x, &format!("{path}[{i}]"), len))
        .collect()
}

fn matrix(v: &Value, path: &str, rows: usize, cols: Option<usize>) -> Result<Mat, CliError> {
    let items = array(v, path)?;
    if items.len() != rows {
        return Err(bad(path, format!("expected {rows} rows, found {}", items.len())));
    }
    let cols = match cols {
        Some(c) => c,
        None => items.first().and_then(Value::as_array).map_or(0, Vec::len),
    };
    let data = vectors(v, path, cols)?;
    Mat::from_rows(cols, data).map_err(|e| bad(path, e))
}

fn dimension(obj: &serde_json::Map<String, Value>) -> Result<usize, CliError> {
    let n = obj.get("n").ok_or_else(|| bad("$", "missing field \"n\""))?;
    let n = n
        .as_u64()
        .ok_or_else(|| bad("$.n", "expected a positive integer"))?;
    if n == 0 {
        return Err(bad("$.n", "state dimension must be positive"));
    }
    usize::try_from(n).map_err(|_| bad("$.n", "too large"))
}

fn data_from_json(obj: &serde_json::Map<String, Value>, n: usize) -> Result<DataSet, CliError> {
    let mut d = DataSet::new(n);
    if let Some(ts) = obj.get("trajectories") {
        for (k, t) in array(ts, "$.trajectories")?.iter().enumerate() {
            let states = vectors(t, &format!("$.trajectories[{k}]"), n)?;
            d.push_trajectory(&states).map_err(|e| bad("$.trajectories", e))?;
        }
    }
    if let Some(ps) = obj.get("pairs") {
        for (k, p) in array(ps, "$.pairs")?.iter().enumerate() {
            let path = format!("$.pairs[{k}]");
            let (x, y) = match p {
                Value::Object(o) => {
                    let get = |key: &str| {
                        o.get(key)
                            .ok_or_else(|| bad(&path, format!("missing field \"{key}\"")))
                    };
                    (
                        vector(get("x")?, &format!("{path}.x"), n)?,
                        vector(get("y")?, &format!("{path}.y"), n)?,
                    )
                }
                _ => {
                    let xy = array(p, &path)?;
                    if xy.len() != 2 {
                        return Err(bad(&path, "expected a pair [x, y]"));
                    }
                    (
                        vector(&xy[0], &format!("{path}[0]"), n)?,
                        vector(&xy[1], &format!("{path}[1]"), n)?,
                    )
                }
            };
            d.push(x, y).map_err(|e| bad(&path, e))?;
        }
    }
    if d.is_empty() {
        return Err(CliError::Usage(
            "input contains no nonzero measurements".to_string(),
        ));
    }
    Ok(d)
}

fn cone_from_json(v: &Value, path: &str, ambient: usize) -> Result<PolyCone, CliError> {
    let obj = v
        .as_object()
        .ok_or_else(|| bad(path, "expected an object with \"generators\" or \"inequalities\""))?;
    match (obj.get("generators"), obj.get("inequalities")) {
        (Some(g), None) => {
            let gens = vectors(g, &format!("{path}.generators"), ambient)?;
            PolyCone::from_generators(ambient, &gens).map_err(|e| bad(path, e))
        }
        (None, Some(h)) => {
            let rows = vectors(h, &format!("{path}.inequalities"), ambient)?;
            PolyCone::from_inequalities(ambient, &rows).map_err(|e| bad(path, e))
        }
        _ => Err(bad(path, "give exactly one of \"generators\" or \"inequalities\"")),
    }
}

fn process_from_json(obj: &serde_json::Map<String, Value>, n: usize) -> Result<ConvexProcess, CliError> {
    if obj.contains_key("A") {
        let a = matrix(&obj["A"], "$.A", n, Some(n))?;
        let b = obj.get("B").ok_or_else(|| bad("$", "missing field \"B\""))?;
        let b = matrix(b, "$.B", n, None)?;
        let m = b.cols();
        let c = match obj.get("C") {
            Some(c) => cone_from_json(c, "$.C", n + m)?,
            None => PolyCone::full(n + m),
        };
        return ConvexProcess::from_constrained_linear(&a, &b, &c).map_err(|e| bad("$", e));
    }
    let graph = Value::Object(obj.clone());
    let cone = cone_from_json(&graph, "$", 2 * n)?;
    ConvexProcess::new(n, cone).map_err(|e| bad("$", e))
}

/// Parses JSON (data or process) or the CSV trajectory format.
pub fn parse_input(text: &str) -> Result<Input, CliError> {
    if text.trim_start().starts_with("n=") {
        return parse_csv(text).map(Input::Data);
    }
    let v: Value = serde_json::from_str(text).map_err(|e| {
        CliError::Input(format!("line {}, column {}: {e}", e.line(), e.column()))
    })?;
    let obj = v
        .as_object()
        .ok_or_else(|| bad("$", format!("expected an object, found {}", kind(&v))))?;
    let n = dimension(obj)?;
    let is_data = obj.contains_key("trajectories") || obj.contains_key("pairs");
    let is_process = ["generators", "inequalities", "A"].iter().any(|k| obj.contains_key(*k));
    match (is_data, is_process) {
        (true, false) => data_from_json(obj, n).map(Input::Data),
        (false, true) => process_from_json(obj, n).map(Input::Process),
        (true, true) => Err(bad("$", "mixes measured data with a process description")),
        (false, false) => Err(bad(
            "$",
            "expected \"trajectories\"/\"pairs\" or \"generators\"/\"inequalities\"/\"A\"",
        )),
    }
}

/// First line `n=<dim>`, then one state per line; a blank line ends a
/// trajectory.
pub fn parse_csv(text: &str) -> Result<DataSet, CliError> {
    let mut lines = text.lines().enumerate().skip_while(|(_, l)| l.trim().is_empty());
    let (_, header) = lines.next().ok_or_else(|| CliError::Input("empty file".to_string()))?;
    let n: usize = header
        .trim()
        .strip_prefix("n=")
        .and_then(|s| s.trim().parse().ok())
        .filter(|&n| n > 0)
        .ok_or_else(|| CliError::Input(format!("line 1: expected \"n=<dim>\", found {header:?}")))?;
    let mut d = DataSet::new(n);
    let mut current: Vec<Vec<Rational>> = Vec::new();
    for (i, line) in lines {
        let line = line.trim();
        if line.is_empty() {
            d.push_trajectory(&current).map_err(|e| CliError::Input(e.to_string()))?;
            current.clear();
            continue;
        }
        let fields: Vec<&str> = line.split(',').map(str::trim).collect();
        if fields.len() != n {
            return Err(CliError::Input(format!(
                "line {}: expected {n} fields, found {}",
                i + 1,
                fields.len()
            )));
        }
        let state = fields
            .iter()
            .enumerate()
            .map(|(j, f)| {
                parse_rational(f).map_err(|e| CliError::Input(format!("line {}, field {}: {e}", i + 1, j + 1)))
            })
            .collect::<Result<Vec<_>, _>>()?;
        current.push(state);
    }
    d.push_trajectory(&current).map_err(|e| CliError::Input(e.to_string()))?;
    if d.is_empty() {
        return Err(CliError::Usage(
            "input contains no nonzero measurements".to_string(),
        ));
    }
    Ok(d)
}
