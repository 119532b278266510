//! The algebra-definition text format.
//!
//! ```text
//! algebra <name>
//! generators: <g1> <g2> ... <gn>
//! bracket <ga> <gb> = <scalar>*<gc> [ + <scalar>*<gd> ... ]
//! bracket <ga> <gb> = 0
//! ```
//!
//! Scalars use the exact token syntax of [`crate::scalar`]. Pairs must appear
//! with `ga` strictly before `gb` in generator order, each pair at most once;
//! unlisted pairs are zero. `#` starts a comment. Emitting then re-parsing any
//! algebra reproduces it bit-exactly.

use std::fmt::Write as _;

use crate::algebra::{LieAlgebra, StructureTensor};
use crate::scalar::GaussianRational;

type G = GaussianRational;

/// A parse failure with a 1-based line number.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

impl std::fmt::Display for ParseError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "line {}: {}", self.line, self.message)
    }
}

impl std::error::Error for ParseError {}

fn err(line: usize, message: impl Into<String>) -> ParseError {
    ParseError { line, message: message.into() }
}

/// Parses an algebra definition. Returns the header name and the algebra;
/// the algebra's Jacobi flag reflects an actual check, so deliberately
/// non-Lie tables parse fine and simply carry `jacobi_verified = false`.
pub fn parse_algebra(text: &str) -> Result<(String, LieAlgebra), ParseError> {
    let mut name: Option<String> = None;
    let mut generators: Option<Vec<String>> = None;
    let mut tensor: Option<StructureTensor> = None;
    let mut seen_pairs: Vec<(usize, usize)> = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let mut tokens = line.split_whitespace();
        let keyword = tokens.next().expect("non-empty line has a token");
        match keyword {
            "algebra" => {
                if name.is_some() {
                    return Err(err(lineno, "duplicate `algebra` line"));
                }
                let value = tokens.next().ok_or_else(|| err(lineno, "missing algebra name"))?;
                if tokens.next().is_some() {
                    return Err(err(lineno, "trailing tokens after algebra name"));
                }
                name = Some(value.to_string());
            }
            "generators:" => {
                if generators.is_some() {
                    return Err(err(lineno, "duplicate `generators:` line"));
                }
                let gens: Vec<String> = tokens.map(str::to_string).collect();
                if gens.is_empty() {
                    return Err(err(lineno, "empty generator list"));
                }
                for (i, g) in gens.iter().enumerate() {
                    if gens[..i].contains(g) {
                        return Err(err(lineno, format!("duplicate generator `{g}`")));
                    }
                }
                tensor = Some(StructureTensor::new(gens.len()));
                generators = Some(gens);
            }
            "bracket" => {
                let gens = generators
                    .as_ref()
                    .ok_or_else(|| err(lineno, "`bracket` before `generators:` line"))?;
                let tensor = tensor.as_mut().expect("tensor exists whenever generators do");
                let ga = tokens.next().ok_or_else(|| err(lineno, "missing first generator"))?;
                let gb = tokens.next().ok_or_else(|| err(lineno, "missing second generator"))?;
                let lookup = |g: &str| {
                    gens.iter()
                        .position(|n| n == g)
                        .ok_or_else(|| err(lineno, format!("unknown generator `{g}`")))
                };
                let ia = lookup(ga)?;
                let ib = lookup(gb)?;
                if ia == ib {
                    return Err(err(lineno, format!("diagonal bracket [{ga}, {ga}] is forbidden")));
                }
                if ia > ib {
                    return Err(err(
                        lineno,
                        format!("`{ga}` must precede `{gb}` in generator order"),
                    ));
                }
                if seen_pairs.contains(&(ia, ib)) {
                    return Err(err(lineno, format!("duplicate bracket line for [{ga}, {gb}]")));
                }
                seen_pairs.push((ia, ib));
                if tokens.next() != Some("=") {
                    return Err(err(lineno, "expected `=` after the generator pair"));
                }
                let rest: Vec<&str> = tokens.collect();
                let coeffs = parse_bracket_terms(&rest, gens, lineno)?;
                tensor
                    .set(ia, ib, coeffs)
                    .map_err(|e| err(lineno, e.to_string()))?;
            }
            other => return Err(err(lineno, format!("unknown keyword `{other}`"))),
        }
    }

    let name = name.ok_or_else(|| err(1, "missing `algebra` line"))?;
    let generators = generators.ok_or_else(|| err(1, "missing `generators:` line"))?;
    let tensor = tensor.expect("tensor exists whenever generators do");
    let algebra =
        LieAlgebra::new(generators, tensor).map_err(|e| err(1, e.to_string()))?;
    Ok((name, algebra))
}

/// Parses the right-hand side of a bracket line: `0`, or `+`/`-` separated
/// `<scalar>*<generator>` terms.
fn parse_bracket_terms(
    tokens: &[&str],
    gens: &[String],
    lineno: usize,
) -> Result<Vec<G>, ParseError> {
    let mut coeffs = vec![G::zero(); gens.len()];
    if tokens.is_empty() {
        return Err(err(lineno, "empty right-hand side"));
    }
    if tokens == ["0"] {
        return Ok(coeffs);
    }
    let mut expect_term = true;
    let mut negate = false;
    for &tok in tokens {
        if expect_term {
            // The generator name follows the last `*`.
            let (scalar_text, gen) = tok
                .rsplit_once('*')
                .ok_or_else(|| err(lineno, format!("term `{tok}` is not <scalar>*<generator>")))?;
            let scalar: G = scalar_text
                .parse()
                .map_err(|_| err(lineno, format!("malformed scalar token `{scalar_text}`")))?;
            let k = gens
                .iter()
                .position(|n| n == gen)
                .ok_or_else(|| err(lineno, format!("unknown generator `{gen}`")))?;
            let signed = if negate { -scalar } else { scalar };
            coeffs[k] = &coeffs[k] + &signed;
            expect_term = false;
        } else {
            negate = match tok {
                "+" => false,
                "-" => true,
                _ => return Err(err(lineno, format!("expected `+` or `-`, found `{tok}`"))),
            };
            expect_term = true;
        }
    }
    if expect_term {
        return Err(err(lineno, "right-hand side ends with a dangling operator"));
    }
    Ok(coeffs)
}

/// Emits the definition in canonical form: generators in order, one line per
/// nonzero bracket pair in lexicographic order, terms joined with ` + ` and
/// signs carried by the scalar tokens.
pub fn emit_algebra(name: &str, algebra: &LieAlgebra) -> String {
    let mut out = String::new();
    writeln!(out, "algebra {name}").unwrap();
    writeln!(out, "generators: {}", algebra.names().join(" ")).unwrap();
    for ((i, j), coeffs) in algebra.tensor().pairs() {
        let terms: Vec<String> = coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| format!("{c}*{}", algebra.name(k)))
            .collect();
        writeln!(out, "bracket {} {} = {}", algebra.name(i), algebra.name(j), terms.join(" + "))
            .unwrap();
    }
    out
}
