//! JSON interchange and Graphviz DOT export.
//!
//! JSON shape:
//!
//! ```json
//! {"alphabet":["t","T"],"states":["s0","s1"],"initial":"s0",
//!  "terminal":["s0","s1"],"edges":[["s0","t","s1"]]}
//! ```

use std::collections::HashMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use super::{Automaton, AutomatonError, Result};

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct Doc {
    alphabet: Vec<String>,
    states: Vec<String>,
    initial: String,
    terminal: Vec<String>,
    edges: Vec<(String, String, String)>,
}

/// Parse the JSON form. Errors name the offending field (and, for syntax
/// errors, the line and column).
pub fn from_json(src: &str) -> Result<Automaton> {
    let doc: Doc = serde_json::from_str(src).map_err(|e| AutomatonError::Schema(e.to_string()))?;
    let mut ids: HashMap<&str, usize> = HashMap::new();
    for (i, s) in doc.states.iter().enumerate() {
        if ids.insert(s.as_str(), i).is_some() {
            return Err(AutomatonError::Schema(format!(
                "states: duplicate state `{s}`"
            )));
        }
    }
    if doc.states.is_empty() {
        return Err(AutomatonError::Schema(
            "states: at least one state is required".into(),
        ));
    }
    let state = |field: &str, s: &str| {
        ids.get(s)
            .copied()
            .ok_or_else(|| AutomatonError::Schema(format!("{field}: unknown state `{s}`")))
    };
    let initial = state("initial", &doc.initial)?;
    let terminals = doc
        .terminal
        .iter()
        .map(|s| state("terminal", s))
        .collect::<Result<Vec<_>>>()?;
    let mut edges = Vec::with_capacity(doc.edges.len());
    for (k, (f, l, t)) in doc.edges.iter().enumerate() {
        let li = doc.alphabet.iter().position(|a| a == l).ok_or_else(|| {
            AutomatonError::Schema(format!("edges[{k}]: letter `{l}` not in alphabet"))
        })?;
        edges.push((
            state(&format!("edges[{k}]"), f)?,
            li,
            state(&format!("edges[{k}]"), t)?,
        ));
    }
    let m =
        Automaton::new(doc.alphabet, doc.states.len(), initial, terminals, edges).map_err(|e| {
            match e {
                AutomatonError::DuplicateLetter(l) => {
                    AutomatonError::Schema(format!("alphabet: duplicate letter `{l}`"))
                }
                other => other,
            }
        })?;
    Ok(m.with_state_names(doc.states))
}

/// Serialize to pretty JSON with a stable layout.
pub fn to_json(m: &Automaton) -> String {
    let doc = Doc {
        alphabet: m.alphabet().to_vec(),
        states: m.state_names().to_vec(),
        initial: m.state_name(m.initial()).to_string(),
        terminal: m.terminals().map(|s| m.state_name(s).to_string()).collect(),
        edges: m
            .edges()
            .iter()
            .map(|e| {
                (
                    m.state_name(e.from).to_string(),
                    m.alphabet()[e.letter].clone(),
                    m.state_name(e.to).to_string(),
                )
            })
            .collect(),
    };
    serde_json::to_string_pretty(&doc).expect("plain data serializes")
}

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Graphviz rendering: terminal states filled green, the initial state with
/// a double border. Output is byte-stable for a given automaton.
pub fn to_dot(m: &Automaton) -> String {
    let mut out = String::new();
    out.push_str("digraph automaton {\n  rankdir=LR;\n  node [shape=circle];\n");
    for s in 0..m.num_states() {
        let mut attrs = Vec::new();
        if s == m.initial() {
            attrs.push("peripheries=2".to_string());
        }
        if m.is_terminal(s) {
            attrs.push("style=filled".to_string());
            attrs.push("fillcolor=green".to_string());
        }
        let _ = write!(out, "  {}", quote(m.state_name(s)));
        if !attrs.is_empty() {
            let _ = write!(out, " [{}]", attrs.join(", "));
        }
        out.push_str(";\n");
    }
    for e in m.edges() {
        let _ = writeln!(
            out,
            "  {} -> {} [label={}];",
            quote(m.state_name(e.from)),
            quote(m.state_name(e.to)),
            quote(&m.alphabet()[e.letter])
        );
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const Z: &str = r#"{"alphabet":["t","T"],"states":["init","vp","vm"],"initial":"init",
        "terminal":["init","vp","vm"],
        "edges":[["init","t","vp"],["init","T","vm"],["vp","t","vp"],["vm","T","vm"]]}"#;

    #[test]
    fn json_round_trip() {
        let m = from_json(Z).unwrap();
        assert_eq!(m.num_states(), 3);
        let back = from_json(&to_json(&m)).unwrap();
        assert_eq!(back, m);
        assert_eq!(back.state_names(), m.state_names());
    }

    #[test]
    fn missing_field_is_named() {
        let err = from_json(r#"{"alphabet":[],"states":["a"],"terminal":[],"edges":[]}"#)
            .unwrap_err()
            .to_string();
        assert!(err.contains("initial"), "{err}");
    }

    #[test]
    fn unknown_state_is_named() {
        let err = from_json(
            r#"{"alphabet":["a"],"states":["p"],"initial":"p","terminal":["q"],"edges":[]}"#,
        )
        .unwrap_err()
        .to_string();
        assert!(err.contains("terminal") && err.contains("`q`"), "{err}");
    }

    #[test]
    fn syntax_error_has_line() {
        let err = from_json("{\n  \"alphabet\": [,\n}")
            .unwrap_err()
            .to_string();
        assert!(err.contains("line 2"), "{err}");
    }

    #[test]
    fn dot_marks_initial_and_terminal() {
        let m = from_json(Z).unwrap();
        let dot = to_dot(&m);
        assert!(dot.contains("\"init\" [peripheries=2, style=filled, fillcolor=green];"));
        assert!(dot.contains("\"vp\" -> \"vp\" [label=\"t\"];"));
        assert_eq!(dot, to_dot(&m));
    }
}
