//! Text encodings of exact values: plain, RFC 4180 csv, json and LaTeX.
//!
//! Fractions render as `num/den` with `/1` dropped and the sign on the
//! numerator. In json, integers whose magnitude exceeds 2^53 are emitted as
//! decimal strings; no floats are ever written.

use std::fmt;

use clap::ValueEnum;
use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use umbral_bernoulli::{DenomFactorization, Poly, PsiValue, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum OutputFormat {
    #[default]
    Plain,
    Csv,
    Json,
    Latex,
}

/// Largest magnitude emitted as a bare json number.
const JSON_SAFE: u64 = 1 << 53;

/// Integer that serializes as a json number when exactly representable in a
/// double, and as a decimal string otherwise.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JsonInt(pub BigInt);

impl Serialize for JsonInt {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self.0.to_i64() {
            Some(v) if v.unsigned_abs() <= JSON_SAFE => serializer.serialize_i64(v),
            _ => serializer.serialize_str(&self.0.to_string()),
        }
    }
}

impl<'de> Deserialize<'de> for JsonInt {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct IntVisitor;

        impl Visitor<'_> for IntVisitor {
            type Value = JsonInt;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("an integer or a decimal string")
            }

            fn visit_i64<E: de::Error>(self, v: i64) -> Result<JsonInt, E> {
                Ok(JsonInt(v.into()))
            }

            fn visit_u64<E: de::Error>(self, v: u64) -> Result<JsonInt, E> {
                Ok(JsonInt(v.into()))
            }

            fn visit_str<E: de::Error>(self, v: &str) -> Result<JsonInt, E> {
                v.parse().map(JsonInt).map_err(E::custom)
            }
        }

        deserializer.deserialize_any(IntVisitor)
    }
}

/// `{"num": .., "den": ..}` in that order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FracRecord {
    pub num: JsonInt,
    pub den: JsonInt,
}

impl From<&Rational> for FracRecord {
    fn from(q: &Rational) -> Self {
        Self {
            num: JsonInt(q.numer().clone()),
            den: JsonInt(q.denom().clone()),
        }
    }
}

impl FracRecord {
    pub fn to_rational(&self) -> Option<Rational> {
        (!self.den.0.is_zero()).then(|| Rational::new(self.num.0.clone(), self.den.0.clone()))
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("in-memory json serialization")
}

/// `-\frac{a}{b}`, or the bare integer.
pub fn latex_fraction(q: &Rational) -> String {
    if q.denom().is_one() {
        return q.numer().to_string();
    }
    let sign = if q.is_negative() { "-" } else { "" };
    format!("{sign}\\frac{{{}}}{{{}}}", q.numer().abs(), q.denom())
}

pub fn render_value(q: &Rational, format: OutputFormat) -> String {
    match format {
        OutputFormat::Plain | OutputFormat::Csv => q.to_string(),
        OutputFormat::Json => to_json(&FracRecord::from(q)),
        OutputFormat::Latex => latex_fraction(q),
    }
}

/// Coefficients lowest power first.
pub fn render_poly(p: &Poly, format: OutputFormat) -> String {
    let coeffs = p.coeffs();
    match format {
        OutputFormat::Plain => {
            let parts: Vec<String> = coeffs.iter().map(ToString::to_string).collect();
            format!("[{}]", parts.join(", "))
        }
        OutputFormat::Csv => coeffs.iter().map(ToString::to_string).collect::<Vec<_>>().join(","),
        OutputFormat::Json => to_json(&coeffs.iter().map(FracRecord::from).collect::<Vec<_>>()),
        OutputFormat::Latex => latex_poly(p),
    }
}

/// Highest power first, e.g. `x^{2} - x + \frac{1}{6}`.
fn latex_poly(p: &Poly) -> String {
    let mut out = String::new();
    for (i, c) in p.coeffs().iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let neg = c.is_negative();
        let mag = c.abs();
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let monomial = match i {
            0 => String::new(),
            1 => "x".to_string(),
            _ => format!("x^{{{i}}}"),
        };
        if mag.is_one() && i > 0 {
            out.push_str(&monomial);
        } else {
            out.push_str(&latex_fraction(&mag));
            out.push_str(&monomial);
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Grid of fractions, one table row per line.
pub fn render_table<'a, R>(rows: R, format: OutputFormat) -> String
where
    R: IntoIterator<Item = &'a [Rational]>,
{
    let rows: Vec<&[Rational]> = rows.into_iter().collect();
    match format {
        OutputFormat::Plain => join_rows(&rows, ", ", ToString::to_string),
        OutputFormat::Csv => join_rows(&rows, ",", ToString::to_string),
        OutputFormat::Json => {
            let grid: Vec<Vec<FracRecord>> =
                rows.iter().map(|row| row.iter().map(FracRecord::from).collect()).collect();
            to_json(&grid) + "\n"
        }
        OutputFormat::Latex => latex_grid(&rows, latex_fraction),
    }
}

/// Grid of integers (denominators).
pub fn render_int_table(rows: &[Vec<BigInt>], format: OutputFormat) -> String {
    let rows: Vec<&[BigInt]> = rows.iter().map(Vec::as_slice).collect();
    match format {
        OutputFormat::Plain => join_rows(&rows, ", ", ToString::to_string),
        OutputFormat::Csv => join_rows(&rows, ",", ToString::to_string),
        OutputFormat::Json => {
            let grid: Vec<Vec<JsonInt>> =
                rows.iter().map(|row| row.iter().cloned().map(JsonInt).collect()).collect();
            to_json(&grid) + "\n"
        }
        OutputFormat::Latex => latex_grid(&rows, ToString::to_string),
    }
}

fn join_rows<T>(rows: &[&[T]], sep: &str, cell: impl Fn(&T) -> String) -> String {
    let mut out = String::new();
    for row in rows {
        let cells: Vec<String> = row.iter().map(&cell).collect();
        out.push_str(&cells.join(sep));
        out.push('\n');
    }
    out
}

/// Tabular body: a header row of shifts, `\hline`, then `$r$ & cells \\`.
fn latex_grid<T>(rows: &[&[T]], cell: impl Fn(&T) -> String) -> String {
    let width = rows.first().map_or(0, |r| r.len());
    let mut out = String::from(" ");
    for s in 0..width {
        out.push_str(&format!(" & ${s}$"));
    }
    out.push_str(" \\\\\n\\hline\n");
    for (r, row) in rows.iter().enumerate() {
        out.push_str(&format!("${r}$"));
        for c in row.iter() {
            out.push_str(&format!(" & ${}$", cell(c)));
        }
        out.push_str(" \\\\\n");
    }
    out
}

/// Parses json emitted by [`render_table`] back into rationals.
pub fn parse_json_table(text: &str) -> Result<Vec<Vec<Rational>>, String> {
    let grid: Vec<Vec<FracRecord>> = serde_json::from_str(text).map_err(|e| e.to_string())?;
    grid.into_iter()
        .map(|row| {
            row.iter()
                .map(|c| c.to_rational().ok_or_else(|| "zero denominator".to_string()))
                .collect()
        })
        .collect()
}

#[derive(Serialize)]
struct PsiRecord<'a> {
    r: u64,
    s: u64,
    p: u64,
    value: JsonInt,
    indices: &'a [u64],
}

pub fn render_psi(v: &PsiValue, show_indices: bool, format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => to_json(&PsiRecord {
            r: v.r,
            s: v.s,
            p: v.p,
            value: JsonInt(v.value.clone()),
            indices: &v.index_set,
        }),
        OutputFormat::Csv if show_indices => {
            let idx: Vec<String> = v.index_set.iter().map(u64::to_string).collect();
            format!("{},\"{}\"", v.value, idx.join(","))
        }
        _ if show_indices => {
            let idx: Vec<String> = v.index_set.iter().map(u64::to_string).collect();
            if idx.is_empty() {
                format!("{}  {{}}", v.value)
            } else {
                format!("{}  {{ν={}}}", v.value, idx.join(","))
            }
        }
        _ => v.value.to_string(),
    }
}

#[derive(Serialize)]
struct DenomRecord<'a> {
    r: u64,
    s: u64,
    denom: JsonInt,
    eps2: u8,
    primes: &'a [u64],
}

pub fn render_denom(r: u64, s: u64, f: &DenomFactorization, factors: bool, format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => to_json(&DenomRecord {
            r,
            s,
            denom: JsonInt(f.value.clone()),
            eps2: f.eps2,
            primes: &f.primes,
        }),
        OutputFormat::Csv if factors => {
            let ps: Vec<String> = f.all_primes().iter().map(u64::to_string).collect();
            format!("{},\"{}\"", f.value, ps.join(","))
        }
        OutputFormat::Latex if factors => {
            let ps: Vec<String> = f.all_primes().iter().map(u64::to_string).collect();
            if ps.is_empty() {
                "1".into()
            } else {
                format!("{} = {}", f.value, ps.join(" \\cdot "))
            }
        }
        _ if factors => format!("{} = {f}", f.value),
        _ => f.value.to_string(),
    }
}

/// RFC 4180 field quoting.
pub fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n', '\r']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> Rational {
        s.parse().unwrap()
    }

    #[test]
    fn fractions() {
        assert_eq!(render_value(&q("2/15"), OutputFormat::Plain), "2/15");
        assert_eq!(render_value(&q("4/2"), OutputFormat::Plain), "2");
        assert_eq!(render_value(&q("-1/2"), OutputFormat::Csv), "-1/2");
        assert_eq!(render_value(&q("-1/2"), OutputFormat::Latex), "-\\frac{1}{2}");
        assert_eq!(render_value(&q("0"), OutputFormat::Latex), "0");
        assert_eq!(render_value(&q("-3/7"), OutputFormat::Json), r#"{"num":-3,"den":7}"#);
    }

    #[test]
    fn large_json_integers_become_strings() {
        let big: BigInt = BigInt::from(1u64 << 53) + 1;
        let edge = BigInt::from(1u64 << 53);
        assert_eq!(to_json(&JsonInt(edge.clone())), "9007199254740992");
        assert_eq!(to_json(&JsonInt(-edge)), "-9007199254740992");
        assert_eq!(to_json(&JsonInt(big.clone())), "\"9007199254740993\"");
        let back: JsonInt = serde_json::from_str("\"9007199254740993\"").unwrap();
        assert_eq!(back.0, big);
    }

    #[test]
    fn polynomials() {
        let p = Poly::from_coeffs(vec![q("1/6"), q("-1"), q("1")]);
        assert_eq!(render_poly(&p, OutputFormat::Plain), "[1/6, -1, 1]");
        assert_eq!(render_poly(&p, OutputFormat::Csv), "1/6,-1,1");
        assert_eq!(render_poly(&p, OutputFormat::Latex), "x^{2} - x + \\frac{1}{6}");
        assert_eq!(render_poly(&Poly::zero(), OutputFormat::Latex), "0");
        assert_eq!(render_poly(&Poly::zero(), OutputFormat::Plain), "[]");
        let neg = Poly::from_coeffs(vec![q("0"), q("-2/3")]);
        assert_eq!(render_poly(&neg, OutputFormat::Latex), "-\\frac{2}{3}x");
    }

    #[test]
    fn csv_quoting() {
        assert_eq!(csv_field("abc"), "abc");
        assert_eq!(csv_field("a,b"), "\"a,b\"");
        assert_eq!(csv_field("say \"x\""), "\"say \"\"x\"\"\"");
    }

    #[test]
    fn psi_rendering() {
        let v = umbral_bernoulli::denom::psi(3, 3, 5).unwrap();
        assert_eq!(render_psi(&v, false, OutputFormat::Plain), "3");
        assert_eq!(render_psi(&v, true, OutputFormat::Plain), "3  {ν=1}");
        assert_eq!(render_psi(&v, true, OutputFormat::Json), r#"{"r":3,"s":3,"p":5,"value":3,"indices":[1]}"#);
        let e = umbral_bernoulli::denom::psi(2, 2, 11).unwrap();
        assert_eq!(render_psi(&e, true, OutputFormat::Plain), "0  {}");
    }

    #[test]
    fn denom_rendering() {
        let f = umbral_bernoulli::denom::denom_formula(8, 8);
        assert_eq!(render_denom(8, 8, &f, false, OutputFormat::Plain), "36465");
        assert_eq!(render_denom(8, 8, &f, true, OutputFormat::Plain), "36465 = 3 * 5 * 11 * 13 * 17");
        assert_eq!(
            render_denom(8, 8, &f, false, OutputFormat::Json),
            r#"{"r":8,"s":8,"denom":36465,"eps2":0,"primes":[3,5,11,13,17]}"#
        );
        let g = umbral_bernoulli::denom::denom_formula(1, 2);
        assert_eq!(render_denom(1, 2, &g, true, OutputFormat::Csv), "6,\"2,3\"");
    }
}
