//! JSON encoding of core values. Numbers are exact: integers are JSON
//! integers of any size and rationals are `{"num": n, "den": d}` objects.

use lspace_core::families::{FamilySpec, Generator, Guarantee};
use lspace_core::lspace::ThirdSlotThreshold;
use lspace_core::twist::{FamilyReport, PointRecord, Regime, SeiferterData, Side, TailCertificate, TailStatus};
use lspace_core::{
    normalize, Base, Classification, ExtRational, H1Order, LSpaceSet, LSpaceVerdict, Rational, SeifertForm,
};
use num_bigint::{BigInt, BigUint};
use serde_json::{json, Map, Number, Value};

use crate::CliError;

/// Decimal places used by `--float` approximations.
const FLOAT_DIGITS: usize = 12;

/// Encoder settings shared by all commands.
#[derive(Clone, Copy, Debug, Default)]
pub struct Encoder {
    /// Adds a decimal `approx` string next to each rational.
    pub float: bool,
}

pub fn int(n: &BigInt) -> Value {
    Value::Number(n.to_string().parse::<Number>().expect("integer literal"))
}

pub fn uint(n: &BigUint) -> Value {
    Value::Number(n.to_string().parse::<Number>().expect("integer literal"))
}

impl Encoder {
    pub fn rational(&self, r: &Rational) -> Value {
        let mut m = Map::new();
        m.insert("num".into(), int(r.numer()));
        m.insert("den".into(), int(r.denom()));
        if self.float {
            m.insert("approx".into(), Value::String(r.to_decimal(FLOAT_DIGITS)));
        }
        Value::Object(m)
    }

    pub fn ext(&self, r: &ExtRational) -> Value {
        match r {
            ExtRational::Finite(q) => self.rational(q),
            ExtRational::Infinity => Value::String("inf".into()),
        }
    }

    pub fn form(&self, f: &SeifertForm) -> Value {
        match f.base() {
            Base::RP2 => json!({ "base": "RP2", "text": f.to_string() }),
            Base::S2 => json!({
                "base": "S2",
                "b": int(f.b()),
                "slopes": f.slopes().iter().map(|r| self.rational(r)).collect::<Vec<_>>(),
                "degenerate_count": f.degenerate_count(),
                "text": f.to_string(),
            }),
        }
    }

    pub fn classification(&self, c: &Classification) -> Value {
        json!({
            "tag": c.tag.as_str(),
            "h1": c.h1.as_ref().map_or(Value::Null, h1),
            "summand_orders": c.summand_orders.iter().map(uint).collect::<Vec<_>>(),
        })
    }

    pub fn verdict(&self, v: &LSpaceVerdict) -> Value {
        let witness = v.reason.witness().map_or(Value::Null, |w| json!({ "k": int(w.k()), "a": int(w.a()) }));
        json!({
            "is_lspace": v.is_lspace,
            "reason": v.reason.name(),
            "witness": witness,
            "rational_homology_sphere": v.rational_homology_sphere,
            "search_bound": v.search_bound.as_ref().map_or(Value::Null, int),
        })
    }

    pub fn lspace_set(&self, s: &LSpaceSet) -> Value {
        match s {
            LSpaceSet::Empty => json!({ "kind": "Empty" }),
            LSpaceSet::All => json!({ "kind": "All" }),
            LSpaceSet::UpClosed { t, attained } => {
                json!({ "kind": "UpClosed", "t": self.rational(t), "attained": attained })
            }
            LSpaceSet::DownClosed { t, attained } => {
                json!({ "kind": "DownClosed", "t": self.rational(t), "attained": attained })
            }
        }
    }

    pub fn threshold(&self, t: &ThirdSlotThreshold) -> Value {
        json!({
            "b": int(&t.b),
            "r1": self.rational(&t.r1),
            "r2": self.rational(&t.r2),
            "lspace_set": self.lspace_set(&t.lspace_set),
        })
    }

    pub fn seiferter(&self, d: &SeiferterData) -> Value {
        let mx = d.matrix();
        json!({
            "b": int(d.b()),
            "r1": self.rational(d.r1()),
            "r2": self.rational(d.r2()),
            "matrix": {
                "alpha": int(&mx.alpha),
                "beta": int(&mx.beta),
                "alpha3": int(&mx.alpha3),
                "beta3": int(&mx.beta3),
            },
            "m": int(d.m()),
            "l": int(d.l()),
            "realizable": d.is_realizable(),
        })
    }

    pub fn point(&self, p: &PointRecord) -> Value {
        json!({
            "n": int(&p.n),
            "m_n": int(&p.slope),
            "seifert_form": self.form(&p.form),
            "tag": p.tag.as_str(),
            "verdict": self.verdict(&p.verdict),
        })
    }

    pub fn tail(&self, t: &TailCertificate) -> Value {
        let (status, is_lspace) = match t.status {
            TailStatus::Certified { is_lspace } => ("Certified", Value::Bool(is_lspace)),
            TailStatus::DecidedPointwiseOnly => ("DecidedPointwiseOnly", Value::Null),
        };
        let (side, relation, direction) = match t.side {
            Side::Positive => ("positive", ">=", "from_above"),
            Side::Negative => ("negative", "<=", "from_below"),
        };
        let block = t.block.as_ref().map_or(Value::Null, |b| {
            json!({
                "b": int(&b.b),
                "approach": self.rational(&b.approach),
                "direction": direction,
                "lspace_set": self.lspace_set(&b.lspace_set),
            })
        });
        json!({
            "side": side,
            "status": status,
            "is_lspace": is_lspace,
            "relation": relation,
            "from": t.from.as_ref().map_or(Value::Null, int),
            "limit_slope": self.ext(&t.limit_slope),
            "block": block,
        })
    }

    pub fn family_report(&self, r: &FamilyReport) -> Value {
        let regime = match &r.regime {
            Regime::LensLine { exceptional } => json!({
                "kind": "LensLine",
                "exceptional": exceptional.as_ref().map_or(Value::Null, int),
            }),
            Regime::Twisting { pole } => json!({ "kind": "Twisting", "pole": self.rational(pole) }),
        };
        json!({
            "data": self.seiferter(&r.data),
            "window": [r.window.0, r.window.1],
            "points": r.points.iter().map(|p| self.point(p)).collect::<Vec<_>>(),
            "tail_pos": self.tail(&r.tail_pos),
            "tail_neg": self.tail(&r.tail_neg),
            "limit": self.form(&r.limit),
            "limit_verdict": self.verdict(&r.limit_verdict),
            "exceptional_n": r.exceptional_n,
            "regime": regime,
        })
    }

    pub fn spec(&self, s: &FamilySpec) -> Value {
        let params: Map<String, Value> = s.params.iter().map(|(k, v)| (k.clone(), json!(v))).collect();
        let generators: Vec<Value> = s
            .generators
            .iter()
            .map(|g| match g {
                Generator::Seiferter(d) => json!({ "kind": "Seiferter", "data": self.seiferter(d) }),
                Generator::ProjectiveBase { slope, indices } => json!({
                    "kind": "ProjectiveBase",
                    "slope": int(slope),
                    "indices": [int(&indices.0), int(&indices.1)],
                }),
            })
            .collect();
        json!({
            "name": s.name,
            "params": params,
            "claimed": guarantee(&s.claimed),
            "generators": generators,
            "notes": s.notes,
        })
    }
}

pub fn h1(h: &H1Order) -> Value {
    match h {
        H1Order::Finite(n) => uint(n),
        H1Order::Infinite => Value::String("inf".into()),
    }
}

pub fn guarantee(g: &Guarantee) -> Value {
    match g {
        Guarantee::AllN => json!({ "kind": "AllN" }),
        Guarantee::NGe(k) => json!({ "kind": "NGe", "k": k }),
        Guarantee::NLe(k) => json!({ "kind": "NLe", "k": k }),
        Guarantee::AllNExcept(list) => json!({ "kind": "AllNExcept", "except": list }),
    }
}

fn bad(what: &str, v: &Value) -> CliError {
    CliError::Json(format!("expected {what}, found {v}"))
}

pub fn int_from_value(v: &Value) -> Result<BigInt, CliError> {
    match v {
        Value::Number(n) if !n.to_string().contains(['.', 'e', 'E']) => {
            n.to_string().parse().map_err(|_| bad("an integer", v))
        }
        _ => Err(bad("an integer", v)),
    }
}

pub fn rational_from_value(v: &Value) -> Result<Rational, CliError> {
    let num = v.get("num").ok_or_else(|| bad("a rational object", v))?;
    let den = v.get("den").ok_or_else(|| bad("a rational object", v))?;
    Rational::new(int_from_value(num)?, int_from_value(den)?).map_err(|e| CliError::Json(e.to_string()))
}

pub fn ext_from_value(v: &Value) -> Result<ExtRational, CliError> {
    if v.as_str() == Some("inf") {
        return Ok(ExtRational::Infinity);
    }
    rational_from_value(v).map(ExtRational::Finite)
}

pub fn form_from_value(v: &Value) -> Result<SeifertForm, CliError> {
    match v.get("base").and_then(Value::as_str) {
        Some("RP2") => Ok(SeifertForm::rp2()),
        Some("S2") => {
            let b = int_from_value(v.get("b").ok_or_else(|| bad("field b", v))?)?;
            let mut slopes: Vec<ExtRational> = v
                .get("slopes")
                .and_then(Value::as_array)
                .ok_or_else(|| bad("a slopes array", v))?
                .iter()
                .map(ext_from_value)
                .collect::<Result<_, _>>()?;
            let deg = v.get("degenerate_count").and_then(Value::as_u64).unwrap_or(0);
            slopes.extend((0..deg).map(|_| ExtRational::Infinity));
            Ok(normalize(b, &slopes))
        }
        _ => Err(bad("a Seifert form", v)),
    }
}
