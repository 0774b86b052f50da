//! JSON input schemas for scripted use. Complex numbers are `[re, im]`
//! arrays; polynomials are `{"coeffs": [[re, im], ...]}` in ascending
//! degree; a basis is either explicit
//! `{"alpha1": .., "beta1": .., "beta2": .., "sign": "+"|"-"}`, a preset
//! shorthand `{"preset": "new_basis"}`, or a raw pair
//! `{"raw": {"e1": {"e": .., "rho": ..}, "e2": ..}}` for negative identity
//! checks.

use serde::Deserialize;
use thiserror::Error;

use crate::algebra::{AlgebraElement, Complex};
use crate::basis::{BasisError, BiharmonicBasis, Sign};
use crate::goursat::{GoursatPair, Phi0Params};
use crate::monogenic::MonogenicFn;
use crate::poly::HoloPoly;

/// Largest polynomial degree accepted at the JSON boundary; keeps every
/// downstream expansion well under the kernel degree cap.
pub const MAX_INPUT_DEGREE: usize = 16;

/// Largest magnitude accepted for any input number; keeps all downstream
/// arithmetic finite at the accepted degrees.
pub const MAX_INPUT_MAGNITUDE: f64 = 1e6;

#[derive(Debug, Error)]
pub enum SchemaError {
    #[error("json: {0}")]
    Parse(String),
    #[error("schema: {0}")]
    Invalid(String),
}

fn real_from(v: f64, what: &str) -> Result<f64, SchemaError> {
    if !v.is_finite() || v.abs() > MAX_INPUT_MAGNITUDE {
        return Err(SchemaError::Invalid(format!(
            "{what} must be finite with magnitude at most {MAX_INPUT_MAGNITUDE:e}"
        )));
    }
    Ok(v)
}

fn complex_from(parts: [f64; 2], what: &str) -> Result<Complex, SchemaError> {
    Ok(Complex::new(real_from(parts[0], what)?, real_from(parts[1], what)?))
}

fn sign_from(s: &str) -> Result<Sign, SchemaError> {
    match s {
        "+" => Ok(Sign::Plus),
        "-" => Ok(Sign::Minus),
        other => Err(SchemaError::Invalid(format!("sign must be \"+\" or \"-\", got {other:?}"))),
    }
}

fn basis_error(e: BasisError) -> SchemaError {
    SchemaError::Invalid(e.to_string())
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct ElementDoc {
    e: [f64; 2],
    rho: [f64; 2],
}

impl ElementDoc {
    fn build(&self) -> Result<AlgebraElement, SchemaError> {
        Ok(AlgebraElement::new(
            complex_from(self.e, "element e-coefficient")?,
            complex_from(self.rho, "element rho-coefficient")?,
        ))
    }
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct PolyDoc {
    coeffs: Vec<[f64; 2]>,
}

impl PolyDoc {
    fn build(&self, what: &str) -> Result<HoloPoly, SchemaError> {
        if self.coeffs.len() > MAX_INPUT_DEGREE + 1 {
            return Err(SchemaError::Invalid(format!(
                "{what}: degree above input limit {MAX_INPUT_DEGREE}"
            )));
        }
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for (k, parts) in self.coeffs.iter().enumerate() {
            coeffs.push(complex_from(*parts, &format!("{what}: coefficient {k}"))?);
        }
        Ok(HoloPoly::new(coeffs))
    }
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct PresetDoc {
    preset: String,
    #[serde(default)]
    beta2: Option<[f64; 2]>,
    #[serde(default)]
    sign: Option<String>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct ExplicitBasisDoc {
    alpha1: [f64; 2],
    beta1: [f64; 2],
    beta2: [f64; 2],
    sign: String,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawPairDoc {
    raw: RawPairInner,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawPairInner {
    e1: ElementDoc,
    e2: ElementDoc,
}

#[derive(Debug, Deserialize)]
#[serde(untagged)]
enum BasisDoc {
    Preset(PresetDoc),
    Explicit(ExplicitBasisDoc),
    Raw(RawPairDoc),
}

/// A parsed basis job: either a parametric basis or a raw vector pair that
/// only supports the identity check.
#[derive(Debug, Clone)]
pub enum BasisInput {
    Basis(BiharmonicBasis),
    RawPair(AlgebraElement, AlgebraElement),
}

impl BasisDoc {
    fn build(&self) -> Result<BasisInput, SchemaError> {
        match self {
            BasisDoc::Preset(p) => {
                let basis = match p.preset.as_str() {
                    "gp_basis" => BiharmonicBasis::gp_basis(),
                    "new_basis" => BiharmonicBasis::new_basis(),
                    "e_identity" => {
                        let beta2 = p.beta2.ok_or_else(|| {
                            SchemaError::Invalid("preset e_identity requires beta2".into())
                        })?;
                        let sign = sign_from(p.sign.as_deref().unwrap_or("+"))?;
                        BiharmonicBasis::e_identity(complex_from(beta2, "beta2")?, sign)
                            .map_err(basis_error)?
                    }
                    other => {
                        return Err(SchemaError::Invalid(format!("unknown preset {other:?}")));
                    }
                };
                Ok(BasisInput::Basis(basis))
            }
            BasisDoc::Explicit(e) => {
                let basis = BiharmonicBasis::new(
                    complex_from(e.alpha1, "alpha1")?,
                    complex_from(e.beta1, "beta1")?,
                    complex_from(e.beta2, "beta2")?,
                    sign_from(&e.sign)?,
                )
                .map_err(basis_error)?;
                Ok(BasisInput::Basis(basis))
            }
            BasisDoc::Raw(r) => Ok(BasisInput::RawPair(r.raw.e1.build()?, r.raw.e2.build()?)),
        }
    }
}

fn from_str<'a, T: Deserialize<'a>>(input: &'a str, what: &str) -> Result<T, SchemaError> {
    serde_json::from_str(input).map_err(|e| SchemaError::Parse(format!("{what}: {e}")))
}

/// Parses a basis job document.
pub fn parse_basis_job(input: &str) -> Result<BasisInput, SchemaError> {
    let doc: BasisDoc = from_str(input, "basis document")?;
    doc.build()
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct MonogenicDoc {
    basis: BasisDoc,
    #[serde(rename = "F")]
    f: PolyDoc,
    #[serde(rename = "F0")]
    f0: PolyDoc,
}

impl MonogenicDoc {
    fn build(&self) -> Result<MonogenicFn, SchemaError> {
        let basis = match self.basis.build()? {
            BasisInput::Basis(b) => b,
            BasisInput::RawPair(..) => {
                return Err(SchemaError::Invalid(
                    "monogenic descriptor requires a parametric basis, not a raw pair".into(),
                ));
            }
        };
        Ok(MonogenicFn::new(basis, self.f.build("F")?, self.f0.build("F0")?))
    }
}

/// Parses a monogenic descriptor `{"basis": .., "F": .., "F0": ..}`.
pub fn parse_monogenic_job(input: &str) -> Result<MonogenicFn, SchemaError> {
    let doc: MonogenicDoc = from_str(input, "monogenic document")?;
    doc.build()
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct EvalDoc {
    #[serde(flatten)]
    monogenic: MonogenicDoc,
    points: Vec<[f64; 2]>,
}

/// Parses an eval job: a monogenic descriptor plus a nonempty `points` list.
pub fn parse_eval_job(input: &str) -> Result<(MonogenicFn, Vec<(f64, f64)>), SchemaError> {
    let doc: EvalDoc = from_str(input, "eval document")?;
    if doc.points.is_empty() {
        return Err(SchemaError::Invalid("points must be nonempty".into()));
    }
    let mut points = Vec::with_capacity(doc.points.len());
    for (k, p) in doc.points.iter().enumerate() {
        let what = format!("point {k}");
        points.push((real_from(p[0], &what)?, real_from(p[1], &what)?));
    }
    Ok((doc.monogenic.build()?, points))
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct Phi0Doc {
    a: f64,
    b: f64,
    c: f64,
    d: f64,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct ReconstructDoc {
    psi: PolyDoc,
    phi: PolyDoc,
    #[serde(default)]
    phi0: Option<Phi0Doc>,
}

/// Parses a reconstruction job `{"psi": .., "phi": .., "phi0": {..}}`; the
/// family parameters default to zero when omitted.
pub fn parse_reconstruct_job(input: &str) -> Result<(GoursatPair, Phi0Params), SchemaError> {
    let doc: ReconstructDoc = from_str(input, "reconstruct document")?;
    let params = match &doc.phi0 {
        None => Phi0Params::zero(),
        Some(p) => {
            for (name, v) in [("a", p.a), ("b", p.b), ("c", p.c), ("d", p.d)] {
                real_from(v, &format!("phi0.{name}"))?;
            }
            Phi0Params::new(p.a, p.b, p.c, p.d)
        }
    };
    Ok((
        GoursatPair::new(doc.psi.build("psi")?, doc.phi.build("phi")?),
        params,
    ))
}

#[derive(Debug, Deserialize, Default)]
#[serde(deny_unknown_fields)]
struct VerifyDoc {
    #[serde(default)]
    seed: Option<u64>,
}

/// Parses a verify job; `{}` runs with the default seed.
pub fn parse_verify_job(input: &str) -> Result<u64, SchemaError> {
    let doc: VerifyDoc = from_str(input, "verify document")?;
    Ok(doc.seed.unwrap_or(0x5eed))
}
