//! JSON schemas for every file format the command-line front end
//! accepts, with validation that reports a JSON pointer to the first
//! offending field. All rationals travel as `"num/den"` strings so
//! round trips are bit-exact; cyclotomic scalars travel as polynomial
//! strings in `t`.

use std::collections::BTreeMap;

use num_traits::Zero;
use serde_json::{json, Map, Value};

use crate::ainfinity::{
    AInfMorphism, AInfStructure, BimoduleData, BimoduleEntry, ChainData, GRep, GradedSpace,
    OpEntry,
};
use crate::field::{rat_from_str, rat_to_string, Cyc3, Cyclotomic, Rat, Scalar};
use crate::gcomplex::{EnergyGraph, GradedGComplex, Generator};
use crate::groupcoh::{FiniteGroup, OneCochain, TwoCochain};
use crate::linalg::Matrix;
use crate::mirror::{LaurentPoly, MonomialMap};
use crate::novikov::{GroupRingElement, NovikovSeries, WeightedGroupElement};

/// A validation failure: a JSON pointer to the offending field plus a
/// human-readable message.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationError {
    pub pointer: String,
    pub message: String,
}

impl ValidationError {
    fn new(pointer: &str, message: impl Into<String>) -> Self {
        ValidationError {
            pointer: pointer.to_string(),
            message: message.into(),
        }
    }
}

impl std::fmt::Display for ValidationError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}: {}", self.pointer, self.message)
    }
}

impl std::error::Error for ValidationError {}

type VResult<T> = Result<T, ValidationError>;

fn want_object<'v>(v: &'v Value, path: &str) -> VResult<&'v Map<String, Value>> {
    v.as_object()
        .ok_or_else(|| ValidationError::new(path, "expected an object"))
}

fn want_array<'v>(v: &'v Value, path: &str) -> VResult<&'v Vec<Value>> {
    v.as_array()
        .ok_or_else(|| ValidationError::new(path, "expected an array"))
}

fn want_str<'v>(v: &'v Value, path: &str) -> VResult<&'v str> {
    v.as_str()
        .ok_or_else(|| ValidationError::new(path, "expected a string"))
}

fn want_usize(v: &Value, path: &str) -> VResult<usize> {
    v.as_u64()
        .map(|n| n as usize)
        .ok_or_else(|| ValidationError::new(path, "expected a non-negative integer"))
}

fn want_i64(v: &Value, path: &str) -> VResult<i64> {
    v.as_i64()
        .ok_or_else(|| ValidationError::new(path, "expected an integer"))
}

fn field<'v>(obj: &'v Map<String, Value>, path: &str, key: &str) -> VResult<&'v Value> {
    obj.get(key)
        .ok_or_else(|| ValidationError::new(&format!("{path}/{key}"), "missing field"))
}

fn parse_rat(v: &Value, path: &str) -> VResult<Rat> {
    let s = want_str(v, path)?;
    rat_from_str(s).map_err(|e| ValidationError::new(path, e))
}

/// Parse a polynomial in `t` with rational coefficients, e.g.
/// `"1+t"`, `"-2/3*t^2"`, `"t"`.
pub fn parse_cyclotomic_str<const N: u64>(s: &str) -> Result<Cyclotomic<N>, String> {
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err("empty scalar".into());
    }
    // split into signed summands
    let mut parts: Vec<String> = Vec::new();
    let mut cur = String::new();
    for (i, ch) in compact.chars().enumerate() {
        if (ch == '+' || ch == '-') && i > 0 {
            parts.push(cur.clone());
            cur.clear();
        }
        if ch == '+' && i == 0 {
            continue;
        }
        if !(ch == '+' && cur.is_empty() && i > 0) {
            cur.push(ch);
        }
    }
    parts.push(cur);
    let mut acc = Cyclotomic::<N>::zero();
    for part in parts {
        if part.is_empty() {
            return Err("dangling sign".into());
        }
        let (sign, body) = match part.strip_prefix('-') {
            Some(rest) => (-1i64, rest),
            None => (1i64, part.as_str()),
        };
        let (coeff_str, power) = match body.find('t') {
            None => (body, None),
            Some(pos) => {
                let coeff = body[..pos].trim_end_matches('*');
                let rest = &body[pos + 1..];
                let power = if rest.is_empty() {
                    1i64
                } else {
                    let digits = rest
                        .strip_prefix('^')
                        .ok_or_else(|| format!("malformed power in {part:?}"))?;
                    digits
                        .parse()
                        .map_err(|_| format!("malformed power in {part:?}"))?
                };
                (coeff, Some(power))
            }
        };
        let coeff = if coeff_str.is_empty() {
            Rat::from_integer(1.into())
        } else {
            rat_from_str(coeff_str)?
        };
        let coeff = coeff * Rat::from_integer(sign.into());
        let term = match power {
            None => Cyclotomic::<N>::from_rational(coeff),
            Some(p) => {
                if p < 0 {
                    return Err("negative powers of t are not allowed".into());
                }
                let mut mono = vec![Rat::zero(); (p as usize) + 1];
                mono[p as usize] = coeff;
                Cyclotomic::<N>::from_coeffs(mono)
            }
        };
        acc = acc + term;
    }
    Ok(acc)
}

pub fn cyclotomic_to_string<const N: u64>(c: &Cyclotomic<N>) -> String {
    format!("{c}")
}

/// Scalar ingestion for the formats that are generic over the
/// coefficient field.
pub trait ScalarFormat: Scalar {
    fn parse(s: &str) -> Result<Self, String>;
    fn render(&self) -> String;
}

impl ScalarFormat for Rat {
    fn parse(s: &str) -> Result<Self, String> {
        rat_from_str(s)
    }
    fn render(&self) -> String {
        rat_to_string(self)
    }
}

impl<const N: u64> ScalarFormat for Cyclotomic<N> {
    fn parse(s: &str) -> Result<Self, String> {
        parse_cyclotomic_str::<N>(s)
    }
    fn render(&self) -> String {
        cyclotomic_to_string(self)
    }
}

fn parse_scalar<F: ScalarFormat>(v: &Value, path: &str) -> VResult<F> {
    let s = want_str(v, path)?;
    F::parse(s).map_err(|e| ValidationError::new(path, e))
}

/// `{"order": n, "table": [[...]]}` → validated group.
pub fn group_from_value(v: &Value, path: &str) -> VResult<FiniteGroup> {
    let obj = want_object(v, path)?;
    let order = want_usize(field(obj, path, "order")?, &format!("{path}/order"))?;
    let table_v = want_array(field(obj, path, "table")?, &format!("{path}/table"))?;
    if table_v.len() != order {
        return Err(ValidationError::new(
            &format!("{path}/table"),
            format!("expected {order} rows"),
        ));
    }
    let mut table = Vec::with_capacity(order);
    for (r, row_v) in table_v.iter().enumerate() {
        let row_path = format!("{path}/table/{r}");
        let row = want_array(row_v, &row_path)?;
        if row.len() != order {
            return Err(ValidationError::new(
                &row_path,
                format!("expected {order} entries"),
            ));
        }
        let mut out = Vec::with_capacity(order);
        for (c, cell) in row.iter().enumerate() {
            let cell_path = format!("{row_path}/{c}");
            let e = want_usize(cell, &cell_path)?;
            if e >= order {
                return Err(ValidationError::new(&cell_path, "entry out of range"));
            }
            out.push(e);
        }
        table.push(out);
    }
    FiniteGroup::verify(table).map_err(|e| {
        let pointer = match &e {
            crate::groupcoh::GroupError::NoInverse(g) => format!("{path}/table/{g}"),
            _ => format!("{path}/table"),
        };
        ValidationError::new(&pointer, e.to_string())
    })
}

pub fn group_to_value(g: &FiniteGroup) -> Value {
    json!({ "order": g.order(), "table": g.table() })
}

/// `{"values": [[0|1, ...]]}` (with an optional ignored `group` echo).
pub fn two_cochain_from_value(
    v: &Value,
    group: &FiniteGroup,
    path: &str,
) -> VResult<TwoCochain> {
    let obj = want_object(v, path)?;
    let values_v = want_array(field(obj, path, "values")?, &format!("{path}/values"))?;
    let n = group.order();
    if values_v.len() != n {
        return Err(ValidationError::new(
            &format!("{path}/values"),
            format!("expected {n} rows matching the group order"),
        ));
    }
    let mut values = Vec::with_capacity(n);
    for (r, row_v) in values_v.iter().enumerate() {
        let row_path = format!("{path}/values/{r}");
        let row = want_array(row_v, &row_path)?;
        if row.len() != n {
            return Err(ValidationError::new(
                &row_path,
                format!("expected {n} entries"),
            ));
        }
        let mut out = Vec::with_capacity(n);
        for (c, cell) in row.iter().enumerate() {
            let cell_path = format!("{row_path}/{c}");
            let bit = want_usize(cell, &cell_path)?;
            if bit > 1 {
                return Err(ValidationError::new(&cell_path, "entries must be 0 or 1"));
            }
            out.push(bit as u8);
        }
        values.push(out);
    }
    TwoCochain::new(group, values)
        .map_err(|e| ValidationError::new(&format!("{path}/values"), e.to_string()))
}

/// `{"values": [0|1, ...]}`.
pub fn one_cochain_from_value(
    v: &Value,
    group: &FiniteGroup,
    path: &str,
) -> VResult<OneCochain> {
    let obj = want_object(v, path)?;
    let values_v = want_array(field(obj, path, "values")?, &format!("{path}/values"))?;
    if values_v.len() != group.order() {
        return Err(ValidationError::new(
            &format!("{path}/values"),
            format!("expected {} entries", group.order()),
        ));
    }
    let mut values = Vec::new();
    for (i, cell) in values_v.iter().enumerate() {
        let cell_path = format!("{path}/values/{i}");
        let bit = want_usize(cell, &cell_path)?;
        if bit > 1 {
            return Err(ValidationError::new(&cell_path, "entries must be 0 or 1"));
        }
        values.push(bit as u8);
    }
    OneCochain::new(values)
        .map_err(|e| ValidationError::new(&format!("{path}/values"), e.to_string()))
}

/// `{"cutoff": "3/1", "terms": [["1/3", "2/1"], ...]}`.
pub fn series_from_value(v: &Value, path: &str) -> VResult<NovikovSeries<Rat>> {
    let obj = want_object(v, path)?;
    let cutoff = parse_rat(field(obj, path, "cutoff")?, &format!("{path}/cutoff"))?;
    let terms_v = want_array(field(obj, path, "terms")?, &format!("{path}/terms"))?;
    let mut terms = Vec::new();
    for (i, term_v) in terms_v.iter().enumerate() {
        let term_path = format!("{path}/terms/{i}");
        let pair = want_array(term_v, &term_path)?;
        if pair.len() != 2 {
            return Err(ValidationError::new(
                &term_path,
                "expected [exponent, coefficient]",
            ));
        }
        let e = parse_rat(&pair[0], &format!("{term_path}/0"))?;
        let c = parse_rat(&pair[1], &format!("{term_path}/1"))?;
        terms.push((e, c));
    }
    Ok(NovikovSeries::from_terms(terms, cutoff))
}

pub fn series_to_value(s: &NovikovSeries<Rat>) -> Value {
    json!({
        "cutoff": rat_to_string(s.cutoff()),
        "terms": s.terms()
            .map(|(e, c)| json!([rat_to_string(e), rat_to_string(c)]))
            .collect::<Vec<_>>(),
    })
}

/// `{"cutoff": "...", "terms": [{"energy", "maslov", "sp", "label"?,
/// "coeff"}]}`.
pub fn group_ring_from_value(v: &Value, path: &str) -> VResult<GroupRingElement> {
    let obj = want_object(v, path)?;
    let cutoff = parse_rat(field(obj, path, "cutoff")?, &format!("{path}/cutoff"))?;
    let terms_v = want_array(field(obj, path, "terms")?, &format!("{path}/terms"))?;
    let mut terms = Vec::new();
    for (i, term_v) in terms_v.iter().enumerate() {
        let term_path = format!("{path}/terms/{i}");
        let term = want_object(term_v, &term_path)?;
        let energy = parse_rat(field(term, &term_path, "energy")?, &format!("{term_path}/energy"))?;
        let maslov = want_i64(field(term, &term_path, "maslov")?, &format!("{term_path}/maslov"))?;
        let sp = want_usize(field(term, &term_path, "sp")?, &format!("{term_path}/sp"))?;
        if sp > 1 {
            return Err(ValidationError::new(
                &format!("{term_path}/sp"),
                "sp must be 0 or 1",
            ));
        }
        let label = match term.get("label") {
            None | Some(Value::Null) => None,
            Some(l) => Some(want_usize(l, &format!("{term_path}/label"))?),
        };
        let coeff = parse_rat(field(term, &term_path, "coeff")?, &format!("{term_path}/coeff"))?;
        terms.push((
            WeightedGroupElement::new(energy, maslov, sp as u8, label),
            coeff,
        ));
    }
    Ok(GroupRingElement::from_terms(terms, cutoff))
}

/// `{"generators": [...], "flows": [...], "group": {...},
/// "gaction": [[g, p, q, sign], ...]}`.
pub fn complex_from_value(v: &Value, path: &str) -> VResult<GradedGComplex> {
    let obj = want_object(v, path)?;
    let group = group_from_value(field(obj, path, "group")?, &format!("{path}/group"))?;
    let gens_v = want_array(field(obj, path, "generators")?, &format!("{path}/generators"))?;
    let mut generators = Vec::new();
    for (i, gen_v) in gens_v.iter().enumerate() {
        let gen_path = format!("{path}/generators/{i}");
        let gen = want_object(gen_v, &gen_path)?;
        let id = want_str(field(gen, &gen_path, "id")?, &format!("{gen_path}/id"))?.to_string();
        let degree = want_i64(field(gen, &gen_path, "degree")?, &format!("{gen_path}/degree"))?;
        let action_value = match gen.get("action") {
            None | Some(Value::Null) => Rat::zero(),
            Some(a) => parse_rat(a, &format!("{gen_path}/action"))?,
        };
        generators.push(Generator {
            id,
            degree,
            action_value,
        });
    }
    let flows_v = want_array(field(obj, path, "flows")?, &format!("{path}/flows"))?;
    let mut flows = Vec::new();
    for (i, flow_v) in flows_v.iter().enumerate() {
        let flow_path = format!("{path}/flows/{i}");
        let flow = want_object(flow_v, &flow_path)?;
        let from = want_str(field(flow, &flow_path, "from")?, &format!("{flow_path}/from"))?;
        let to = want_str(field(flow, &flow_path, "to")?, &format!("{flow_path}/to"))?;
        let sign = want_i64(field(flow, &flow_path, "sign")?, &format!("{flow_path}/sign"))?;
        if sign != 1 && sign != -1 {
            return Err(ValidationError::new(
                &format!("{flow_path}/sign"),
                "sign must be +1 or -1",
            ));
        }
        let gap = match flow.get("gap") {
            None | Some(Value::Null) => Rat::zero(),
            Some(g) => parse_rat(g, &format!("{flow_path}/gap"))?,
        };
        flows.push((from.to_string(), to.to_string(), sign as i8, gap));
    }
    let action_v = want_array(field(obj, path, "gaction")?, &format!("{path}/gaction"))?;
    let mut action = Vec::new();
    for (i, entry_v) in action_v.iter().enumerate() {
        let entry_path = format!("{path}/gaction/{i}");
        let entry = want_array(entry_v, &entry_path)?;
        if entry.len() != 4 {
            return Err(ValidationError::new(
                &entry_path,
                "expected [g, source, target, sign]",
            ));
        }
        let g = want_usize(&entry[0], &format!("{entry_path}/0"))?;
        let p = want_str(&entry[1], &format!("{entry_path}/1"))?.to_string();
        let q = want_str(&entry[2], &format!("{entry_path}/2"))?.to_string();
        let sign = want_i64(&entry[3], &format!("{entry_path}/3"))?;
        if sign != 1 && sign != -1 {
            return Err(ValidationError::new(
                &format!("{entry_path}/3"),
                "sign must be +1 or -1",
            ));
        }
        action.push((g, p, q, sign as i8));
    }
    GradedGComplex::new(generators, flows, group, action)
        .map_err(|e| ValidationError::new(path, e.to_string()))
}

/// `{"vertices": [...], "edges": [...], "group": {...},
/// "vertex_action": [[g, v, w], ...], "edge_action"?: [[...]],
/// "basepoint": "v"}`.
pub fn graph_from_value(v: &Value, path: &str) -> VResult<EnergyGraph> {
    let obj = want_object(v, path)?;
    let group = group_from_value(field(obj, path, "group")?, &format!("{path}/group"))?;
    let verts_v = want_array(field(obj, path, "vertices")?, &format!("{path}/vertices"))?;
    let mut vertices = Vec::new();
    for (i, vert) in verts_v.iter().enumerate() {
        vertices.push(want_str(vert, &format!("{path}/vertices/{i}"))?.to_string());
    }
    let edges_v = want_array(field(obj, path, "edges")?, &format!("{path}/edges"))?;
    let mut edges = Vec::new();
    for (i, edge_v) in edges_v.iter().enumerate() {
        let edge_path = format!("{path}/edges/{i}");
        let edge = want_object(edge_v, &edge_path)?;
        let from = want_str(field(edge, &edge_path, "from")?, &format!("{edge_path}/from"))?;
        let to = want_str(field(edge, &edge_path, "to")?, &format!("{edge_path}/to"))?;
        let energy = parse_rat(field(edge, &edge_path, "energy")?, &format!("{edge_path}/energy"))?;
        let maslov = match edge.get("maslov") {
            None | Some(Value::Null) => 0,
            Some(m) => want_i64(m, &format!("{edge_path}/maslov"))?,
        };
        let sp = match edge.get("sp") {
            None | Some(Value::Null) => 0,
            Some(s) => {
                let b = want_usize(s, &format!("{edge_path}/sp"))?;
                if b > 1 {
                    return Err(ValidationError::new(
                        &format!("{edge_path}/sp"),
                        "sp must be 0 or 1",
                    ));
                }
                b as u8
            }
        };
        edges.push((from.to_string(), to.to_string(), energy, maslov, sp));
    }
    let vaction_v = want_array(
        field(obj, path, "vertex_action")?,
        &format!("{path}/vertex_action"),
    )?;
    let mut vaction = Vec::new();
    for (i, entry_v) in vaction_v.iter().enumerate() {
        let entry_path = format!("{path}/vertex_action/{i}");
        let entry = want_array(entry_v, &entry_path)?;
        if entry.len() != 3 {
            return Err(ValidationError::new(&entry_path, "expected [g, v, w]"));
        }
        let g = want_usize(&entry[0], &format!("{entry_path}/0"))?;
        let vsrc = want_str(&entry[1], &format!("{entry_path}/1"))?.to_string();
        let vdst = want_str(&entry[2], &format!("{entry_path}/2"))?.to_string();
        vaction.push((g, vsrc, vdst));
    }
    let edge_action = match obj.get("edge_action") {
        None | Some(Value::Null) => None,
        Some(ea_v) => {
            let rows = want_array(ea_v, &format!("{path}/edge_action"))?;
            let mut out = Vec::new();
            for (g, row_v) in rows.iter().enumerate() {
                let row_path = format!("{path}/edge_action/{g}");
                let row = want_array(row_v, &row_path)?;
                let mut perm = Vec::new();
                for (i, cell) in row.iter().enumerate() {
                    perm.push(want_usize(cell, &format!("{row_path}/{i}"))?);
                }
                out.push(perm);
            }
            Some(out)
        }
    };
    let basepoint = want_str(field(obj, path, "basepoint")?, &format!("{path}/basepoint"))?;
    EnergyGraph::new(
        vertices,
        edges,
        group,
        vaction,
        edge_action,
        basepoint.to_string(),
    )
    .map_err(|e| ValidationError::new(path, e.to_string()))
}

/// `{"basis": [{"id", "degree"}], "max_arity": K, "cutoff"?: "...",
/// "ops": [{"arity", "inputs": [ids], "output": id, "coeff",
/// "energy"?}]}`.
pub fn ainf_from_value<F: ScalarFormat>(v: &Value, path: &str) -> VResult<AInfStructure<F>> {
    let obj = want_object(v, path)?;
    let space = graded_space_from_value(field(obj, path, "basis")?, &format!("{path}/basis"))?;
    let max_arity = want_usize(field(obj, path, "max_arity")?, &format!("{path}/max_arity"))?;
    let cutoff = match obj.get("cutoff") {
        None | Some(Value::Null) => None,
        Some(c) => Some(parse_rat(c, &format!("{path}/cutoff"))?),
    };
    let ops_v = want_array(field(obj, path, "ops")?, &format!("{path}/ops"))?;
    let mut entries = Vec::new();
    for (i, op_v) in ops_v.iter().enumerate() {
        let op_path = format!("{path}/ops/{i}");
        let op = want_object(op_v, &op_path)?;
        let arity = want_usize(field(op, &op_path, "arity")?, &format!("{op_path}/arity"))?;
        let inputs_v = want_array(field(op, &op_path, "inputs")?, &format!("{op_path}/inputs"))?;
        let mut inputs = Vec::new();
        for (j, id_v) in inputs_v.iter().enumerate() {
            let id_path = format!("{op_path}/inputs/{j}");
            let id = want_str(id_v, &id_path)?;
            let idx = space
                .index_of(id)
                .ok_or_else(|| ValidationError::new(&id_path, "unknown basis id"))?;
            inputs.push(idx);
        }
        let out_path = format!("{op_path}/output");
        let out_id = want_str(field(op, &op_path, "output")?, &out_path)?;
        let output = space
            .index_of(out_id)
            .ok_or_else(|| ValidationError::new(&out_path, "unknown basis id"))?;
        let coeff: F = parse_scalar(field(op, &op_path, "coeff")?, &format!("{op_path}/coeff"))?;
        let energy = match op.get("energy") {
            None | Some(Value::Null) => None,
            Some(e) => Some(parse_rat(e, &format!("{op_path}/energy"))?),
        };
        entries.push((
            arity,
            OpEntry {
                inputs,
                output,
                coeff,
                energy,
            },
        ));
    }
    AInfStructure::new(space, max_arity, entries, cutoff)
        .map_err(|e| ValidationError::new(path, e.to_string()))
}

pub fn graded_space_from_value(v: &Value, path: &str) -> VResult<GradedSpace> {
    let arr = want_array(v, path)?;
    let mut basis = Vec::new();
    for (i, item) in arr.iter().enumerate() {
        let item_path = format!("{path}/{i}");
        let obj = want_object(item, &item_path)?;
        let id = want_str(field(obj, &item_path, "id")?, &format!("{item_path}/id"))?;
        let degree = want_i64(field(obj, &item_path, "degree")?, &format!("{item_path}/degree"))?;
        basis.push((id.to_string(), degree));
    }
    GradedSpace::new(basis).map_err(|e| ValidationError::new(path, e.to_string()))
}

/// Dense matrix of scalars rendered as strings.
pub fn matrix_from_value<F: ScalarFormat>(v: &Value, path: &str) -> VResult<Matrix<F>> {
    let rows_v = want_array(v, path)?;
    let mut rows: Vec<Vec<F>> = Vec::new();
    for (r, row_v) in rows_v.iter().enumerate() {
        let row_path = format!("{path}/{r}");
        let row = want_array(row_v, &row_path)?;
        let mut out = Vec::new();
        for (c, cell) in row.iter().enumerate() {
            out.push(parse_scalar(cell, &format!("{row_path}/{c}"))?);
        }
        if let Some(first) = rows.first() {
            if first.len() != out.len() {
                return Err(ValidationError::new(&row_path, "ragged matrix rows"));
            }
        }
        rows.push(out);
    }
    if rows.is_empty() {
        return Ok(Matrix::zero(0, 0));
    }
    Ok(Matrix::from_rows(rows))
}

/// `{"group": {...}, "matrices": [[[...]]]}` against a given space.
pub fn grep_from_value<F: ScalarFormat>(
    v: &Value,
    space: &GradedSpace,
    path: &str,
) -> VResult<GRep<F>> {
    let obj = want_object(v, path)?;
    let group = group_from_value(field(obj, path, "group")?, &format!("{path}/group"))?;
    let mats_v = want_array(field(obj, path, "matrices")?, &format!("{path}/matrices"))?;
    let mut matrices = Vec::new();
    for (g, mat_v) in mats_v.iter().enumerate() {
        matrices.push(matrix_from_value::<F>(
            mat_v,
            &format!("{path}/matrices/{g}"),
        )?);
    }
    GRep::new(group, space, matrices).map_err(|e| ValidationError::new(path, e.to_string()))
}

/// `{"max_arity": K, "components": [{"arity", "inputs", "output",
/// "coeff"}]}` against given source and target spaces.
pub fn morphism_from_value<F: ScalarFormat>(
    v: &Value,
    source: &GradedSpace,
    target: &GradedSpace,
    path: &str,
) -> VResult<AInfMorphism<F>> {
    let obj = want_object(v, path)?;
    let max_arity = want_usize(field(obj, path, "max_arity")?, &format!("{path}/max_arity"))?;
    let comps_v = want_array(field(obj, path, "components")?, &format!("{path}/components"))?;
    let mut entries = Vec::new();
    for (i, comp_v) in comps_v.iter().enumerate() {
        let comp_path = format!("{path}/components/{i}");
        let comp = want_object(comp_v, &comp_path)?;
        let arity = want_usize(field(comp, &comp_path, "arity")?, &format!("{comp_path}/arity"))?;
        let inputs_v = want_array(
            field(comp, &comp_path, "inputs")?,
            &format!("{comp_path}/inputs"),
        )?;
        let mut inputs = Vec::new();
        for (j, id_v) in inputs_v.iter().enumerate() {
            let id_path = format!("{comp_path}/inputs/{j}");
            let id = want_str(id_v, &id_path)?;
            inputs.push(
                source
                    .index_of(id)
                    .ok_or_else(|| ValidationError::new(&id_path, "unknown source id"))?,
            );
        }
        let out_path = format!("{comp_path}/output");
        let out_id = want_str(field(comp, &comp_path, "output")?, &out_path)?;
        let output = target
            .index_of(out_id)
            .ok_or_else(|| ValidationError::new(&out_path, "unknown target id"))?;
        let coeff: F = parse_scalar(
            field(comp, &comp_path, "coeff")?,
            &format!("{comp_path}/coeff"),
        )?;
        entries.push((
            arity,
            OpEntry {
                inputs,
                output,
                coeff,
                energy: None,
            },
        ));
    }
    AInfMorphism::new(source, target, max_arity, entries)
        .map_err(|e| ValidationError::new(path, e.to_string()))
}

/// Weak-action input: `{"basis": [...], "m1": [[...]], "group": {...},
/// "psi": [[[...]]], "sigma": [{"g", "h", "matrix"}]}`.
pub struct WeakActionInput {
    pub complex: ChainData<Rat>,
    pub group: FiniteGroup,
    pub psi: Vec<Matrix<Rat>>,
    pub sigma: BTreeMap<(usize, usize), Matrix<Rat>>,
}

pub fn weak_action_from_value(v: &Value, path: &str) -> VResult<WeakActionInput> {
    let obj = want_object(v, path)?;
    let space = graded_space_from_value(field(obj, path, "basis")?, &format!("{path}/basis"))?;
    let m1 = matrix_from_value::<Rat>(field(obj, path, "m1")?, &format!("{path}/m1"))?;
    let complex = ChainData::new(space, m1).map_err(|e| ValidationError::new(path, e.to_string()))?;
    let group = group_from_value(field(obj, path, "group")?, &format!("{path}/group"))?;
    let psi_v = want_array(field(obj, path, "psi")?, &format!("{path}/psi"))?;
    let mut psi = Vec::new();
    for (g, mat_v) in psi_v.iter().enumerate() {
        psi.push(matrix_from_value::<Rat>(mat_v, &format!("{path}/psi/{g}"))?);
    }
    let mut sigma = BTreeMap::new();
    if let Some(sigma_v) = obj.get("sigma") {
        let arr = want_array(sigma_v, &format!("{path}/sigma"))?;
        for (i, entry_v) in arr.iter().enumerate() {
            let entry_path = format!("{path}/sigma/{i}");
            let entry = want_object(entry_v, &entry_path)?;
            let g = want_usize(field(entry, &entry_path, "g")?, &format!("{entry_path}/g"))?;
            let h = want_usize(field(entry, &entry_path, "h")?, &format!("{entry_path}/h"))?;
            let m = matrix_from_value::<Rat>(
                field(entry, &entry_path, "matrix")?,
                &format!("{entry_path}/matrix"),
            )?;
            sigma.insert((g, h), m);
        }
    }
    Ok(WeakActionInput {
        complex,
        group,
        psi,
        sigma,
    })
}

/// Bimodule input: three bases, an arity bound, entries, and three
/// representations over one group.
pub struct BimoduleInput {
    pub bimodule: BimoduleData<Rat>,
    pub rep_c1: GRep<Rat>,
    pub rep_m: GRep<Rat>,
    pub rep_c2: GRep<Rat>,
}

pub fn bimodule_from_value(v: &Value, path: &str) -> VResult<BimoduleInput> {
    let obj = want_object(v, path)?;
    let c1 = graded_space_from_value(field(obj, path, "c1_basis")?, &format!("{path}/c1_basis"))?;
    let module =
        graded_space_from_value(field(obj, path, "m_basis")?, &format!("{path}/m_basis"))?;
    let c2 = graded_space_from_value(field(obj, path, "c2_basis")?, &format!("{path}/c2_basis"))?;
    let arity_bound = want_usize(
        field(obj, path, "arity_bound")?,
        &format!("{path}/arity_bound"),
    )?;
    let entries_v = want_array(field(obj, path, "entries")?, &format!("{path}/entries"))?;
    let mut entries = Vec::new();
    for (i, entry_v) in entries_v.iter().enumerate() {
        let entry_path = format!("{path}/entries/{i}");
        let entry = want_object(entry_v, &entry_path)?;
        let parse_ids = |key: &str, space: &GradedSpace| -> VResult<Vec<usize>> {
            let arr = want_array(field(entry, &entry_path, key)?, &format!("{entry_path}/{key}"))?;
            arr.iter()
                .enumerate()
                .map(|(j, id_v)| {
                    let id_path = format!("{entry_path}/{key}/{j}");
                    let id = want_str(id_v, &id_path)?;
                    space
                        .index_of(id)
                        .ok_or_else(|| ValidationError::new(&id_path, "unknown basis id"))
                })
                .collect()
        };
        let a_inputs = parse_ids("a_inputs", &c1)?;
        let b_inputs = parse_ids("b_inputs", &c2)?;
        let m_path = format!("{entry_path}/m_input");
        let m_id = want_str(field(entry, &entry_path, "m_input")?, &m_path)?;
        let m_input = module
            .index_of(m_id)
            .ok_or_else(|| ValidationError::new(&m_path, "unknown basis id"))?;
        let out_path = format!("{entry_path}/output");
        let out_id = want_str(field(entry, &entry_path, "output")?, &out_path)?;
        let output = module
            .index_of(out_id)
            .ok_or_else(|| ValidationError::new(&out_path, "unknown basis id"))?;
        let coeff = parse_scalar::<Rat>(
            field(entry, &entry_path, "coeff")?,
            &format!("{entry_path}/coeff"),
        )?;
        entries.push(BimoduleEntry {
            a_inputs,
            m_input,
            b_inputs,
            output,
            coeff,
        });
    }
    let bimodule = BimoduleData::new(c1.clone(), module.clone(), c2.clone(), arity_bound, entries)
        .map_err(|e| ValidationError::new(path, e.to_string()))?;
    let rep_c1 = grep_from_value::<Rat>(field(obj, path, "rep_c1")?, &c1, &format!("{path}/rep_c1"))?;
    let rep_m = grep_from_value::<Rat>(field(obj, path, "rep_m")?, &module, &format!("{path}/rep_m"))?;
    let rep_c2 = grep_from_value::<Rat>(field(obj, path, "rep_c2")?, &c2, &format!("{path}/rep_c2"))?;
    Ok(BimoduleInput {
        bimodule,
        rep_c1,
        rep_m,
        rep_c2,
    })
}

/// `{"vars": ["w"], "terms": [{"exp": [3], "coeff": "1"}, ...]}` with
/// cyclotomic coefficients as polynomial strings in `t`.
pub fn laurent_from_value(v: &Value, path: &str) -> VResult<LaurentPoly<Cyc3>> {
    let obj = want_object(v, path)?;
    let vars_v = want_array(field(obj, path, "vars")?, &format!("{path}/vars"))?;
    let mut vars = Vec::new();
    for (i, var) in vars_v.iter().enumerate() {
        vars.push(want_str(var, &format!("{path}/vars/{i}"))?.to_string());
    }
    let terms_v = want_array(field(obj, path, "terms")?, &format!("{path}/terms"))?;
    let mut terms = Vec::new();
    for (i, term_v) in terms_v.iter().enumerate() {
        let term_path = format!("{path}/terms/{i}");
        let term = want_object(term_v, &term_path)?;
        let exp_v = want_array(field(term, &term_path, "exp")?, &format!("{term_path}/exp"))?;
        if exp_v.len() != vars.len() {
            return Err(ValidationError::new(
                &format!("{term_path}/exp"),
                "exponent vector length must match the variable list",
            ));
        }
        let mut exp = Vec::new();
        for (j, e) in exp_v.iter().enumerate() {
            exp.push(want_i64(e, &format!("{term_path}/exp/{j}"))?);
        }
        let coeff = parse_scalar::<Cyc3>(
            field(term, &term_path, "coeff")?,
            &format!("{term_path}/coeff"),
        )?;
        terms.push((exp, coeff));
    }
    Ok(LaurentPoly::new(vars, terms))
}

pub fn laurent_to_value(p: &LaurentPoly<Cyc3>) -> Value {
    json!({
        "vars": p.vars(),
        "terms": p.terms()
            .map(|(e, c)| json!({"exp": e, "coeff": cyclotomic_to_string(c)}))
            .collect::<Vec<_>>(),
    })
}

/// Monomial substitution: `{"images": [{"coeff": "t", "exps": [1, 0]},
/// ...]}`, one image per variable.
pub fn monomial_map_from_value(v: &Value, nvars: usize, path: &str) -> VResult<MonomialMap<Cyc3>> {
    let obj = want_object(v, path)?;
    let images_v = want_array(field(obj, path, "images")?, &format!("{path}/images"))?;
    if images_v.len() != nvars {
        return Err(ValidationError::new(
            &format!("{path}/images"),
            "one image per variable required",
        ));
    }
    let mut images = Vec::new();
    for (i, img_v) in images_v.iter().enumerate() {
        let img_path = format!("{path}/images/{i}");
        let img = want_object(img_v, &img_path)?;
        let coeff = parse_scalar::<Cyc3>(
            field(img, &img_path, "coeff")?,
            &format!("{img_path}/coeff"),
        )?;
        let exps_v = want_array(field(img, &img_path, "exps")?, &format!("{img_path}/exps"))?;
        if exps_v.len() != nvars {
            return Err(ValidationError::new(
                &format!("{img_path}/exps"),
                "exponent row length must match the variable list",
            ));
        }
        let mut exps = Vec::new();
        for (j, e) in exps_v.iter().enumerate() {
            exps.push(want_i64(e, &format!("{img_path}/exps/{j}"))?);
        }
        images.push((coeff, exps));
    }
    Ok(MonomialMap { images })
}
