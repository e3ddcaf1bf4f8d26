//! Dispatch layer of the `gstruct` batch CLI: one JSON payload in, one JSON
//! result out, per command. Kept as a library so the dispatcher is testable
//! without spawning the binary.
//!
//! Exit-code contract: 0 for success, 2 for schema violations (malformed
//! JSON, unknown fields or commands, inconsistent dimensions, invalid
//! parameters), 3 for mathematical precondition failures (degenerate
//! metric, nonpositive volume, singular matrix).

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Map, Value};

use gstruct_core::connection::{
    connection_transform, equiaffine_representative, levi_civita_at, poly_connection_eval,
    projective_difference, projective_shift, volume_parallel_residual, weyl_compatibility_check,
    weyl_connection_at, weyl_intersection_at, PolyConnectionField, PolyMetricField,
    PolyVolumeField,
};
use gstruct_core::jet::{factor_sl_co, subgroup_member, SubgroupTag};
use gstruct_core::json as gj;
use gstruct_core::matrix::Matrix;
use gstruct_core::prolong::{
    builtin_algebra, co1_formula_basis, finite_type_order, kth_prolongation, projective_subspace,
    semidirect_closure_check, ProlongSpace, SymMultiMap,
};
use gstruct_core::scalar::{rat_to_f64, rat_to_string, Rat};
use gstruct_core::structures::{
    conformal_equivalent, decompose_metric_full, metric_signature, recompose_metric,
    volume_equivariant_value, MetricValue, Signature, VolumeDensity,
};
use gstruct_core::{Error as CoreError, FloatMatrix, RatMatrix, RootScalar};

/// Options shared by every command.
#[derive(Clone, Copy, Debug)]
pub struct RunOptions {
    pub tolerance: f64,
    pub k_max: usize,
    pub seed: u64,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions {
            tolerance: 1e-12,
            k_max: 4,
            seed: 0,
        }
    }
}

#[derive(Clone, Debug)]
pub struct CommandRequest {
    pub command: String,
    pub payload: Value,
    pub options: RunOptions,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Status {
    Ok,
    Error,
}

#[derive(Clone, Debug)]
pub struct CommandResult {
    pub status: Status,
    pub data: Value,
    pub diagnostics: Vec<String>,
    pub exit_code: i32,
}

#[derive(Clone, Debug)]
pub struct CmdError {
    pub exit_code: i32,
    pub code: String,
    pub message: String,
}

impl CmdError {
    fn schema(message: impl Into<String>) -> Self {
        CmdError {
            exit_code: 2,
            code: "schema".into(),
            message: message.into(),
        }
    }
}

impl From<CoreError> for CmdError {
    fn from(e: CoreError) -> Self {
        let (exit_code, code) = match &e {
            CoreError::Schema(_) => (2, "schema"),
            CoreError::DimensionMismatch(_) => (2, "dimension-mismatch"),
            CoreError::InvalidSignature { .. } => (2, "invalid-signature"),
            CoreError::InvalidAlgebra(_) => (2, "invalid-algebra"),
            CoreError::NotSymmetric => (3, "not-symmetric"),
            CoreError::Singular => (3, "singular"),
            CoreError::DegenerateMetric => (3, "degenerate-metric"),
            CoreError::NonpositiveVolume => (3, "nonpositive-volume"),
            CoreError::DependentBasis => (3, "dependent-basis"),
            CoreError::InexactRoot(_) => (3, "inexact-root"),
        };
        CmdError {
            exit_code,
            code: code.into(),
            message: e.to_string(),
        }
    }
}

/// All registered command names, as spelled on the command line.
pub const COMMANDS: &[&str] = &[
    "prolong",
    "type-order",
    "co1-basis",
    "projective-basis",
    "jet-mul",
    "jet-inv",
    "member",
    "factor",
    "decompose",
    "recompose",
    "equivariant-value",
    "levi-civita",
    "transform-connection",
    "projective-diff",
    "projective-shift",
    "equiaffine",
    "weyl-build",
    "weyl-check",
    "weyl-intersect",
    "closure-check",
];

pub fn run(req: &CommandRequest) -> CommandResult {
    match dispatch(&req.command, &req.payload, req.options) {
        Ok(data) => CommandResult {
            status: Status::Ok,
            data,
            diagnostics: Vec::new(),
            exit_code: 0,
        },
        Err(e) => CommandResult {
            status: Status::Error,
            data: json!({
                "status": "error",
                "code": e.code,
                "diagnostics": [e.message],
            }),
            diagnostics: vec![e.message],
            exit_code: e.exit_code,
        },
    }
}

fn dispatch(command: &str, payload: &Value, opts: RunOptions) -> Result<Value, CmdError> {
    match command {
        "prolong" => cmd_prolong(payload),
        "type-order" => cmd_type_order(payload, opts),
        "co1-basis" => cmd_co1_basis(payload),
        "projective-basis" => cmd_projective_basis(payload),
        "jet-mul" => cmd_jet_mul(payload),
        "jet-inv" => cmd_jet_inv(payload),
        "member" => cmd_member(payload),
        "factor" => cmd_factor(payload, opts),
        "decompose" => cmd_decompose(payload),
        "recompose" => cmd_recompose(payload),
        "equivariant-value" => cmd_equivariant_value(payload),
        "levi-civita" => cmd_levi_civita(payload),
        "transform-connection" => cmd_transform_connection(payload),
        "projective-diff" => cmd_projective_diff(payload),
        "projective-shift" => cmd_projective_shift(payload),
        "equiaffine" => cmd_equiaffine(payload),
        "weyl-build" => cmd_weyl_build(payload),
        "weyl-check" => cmd_weyl_check(payload),
        "weyl-intersect" => cmd_weyl_intersect(payload),
        "closure-check" => cmd_closure_check(payload, opts),
        other => Err(CmdError::schema(format!("unknown command `{other}`"))),
    }
}

fn basis_value(space: &ProlongSpace) -> Value {
    if space.degree() == 1 {
        let basis = space.sym2_basis().expect("degree-1 space");
        Value::Array(basis.iter().map(gj::sym2_to_value).collect())
    } else {
        Value::Array(
            space
                .basis()
                .iter()
                .map(|b: &SymMultiMap| gj::rat_vec_to_value(&b.flatten()))
                .collect(),
        )
    }
}

fn cmd_prolong(payload: &Value) -> Result<Value, CmdError> {
    let spec = gj::algebra_from_value(payload)?;
    let k = match payload.get("k") {
        Some(v) => gj::usize_from_value(v, "k")?,
        None => 1,
    };
    let alg = builtin_algebra(&spec)?;
    let space = kth_prolongation(&alg, k)?;
    Ok(json!({
        "algebra": alg.name(),
        "degree": k,
        "dim": space.dim(),
        "basis": basis_value(&space),
    }))
}

fn cmd_type_order(payload: &Value, opts: RunOptions) -> Result<Value, CmdError> {
    let spec = gj::algebra_from_value(payload)?;
    let alg = builtin_algebra(&spec)?;
    let report = finite_type_order(&alg, opts.k_max)?;
    Ok(json!({
        "algebra": alg.name(),
        "dims": report.dims,
        "verdict": report.verdict.to_string(),
    }))
}

fn cmd_co1_basis(payload: &Value) -> Result<Value, CmdError> {
    let q = gj::usize_from_value(gj::object_field(payload, "q")?, "q")?;
    let n = gj::usize_from_value(gj::object_field(payload, "n")?, "n")?;
    let space = co1_formula_basis(q, n)?;
    Ok(json!({
        "dim": space.dim(),
        "basis": basis_value(&space),
    }))
}

fn cmd_projective_basis(payload: &Value) -> Result<Value, CmdError> {
    let n = gj::usize_from_value(gj::object_field(payload, "n")?, "n")?;
    let space = projective_subspace(n)?;
    Ok(json!({
        "dim": space.dim(),
        "basis": basis_value(&space),
    }))
}

fn cmd_jet_mul(payload: &Value) -> Result<Value, CmdError> {
    let x = gj::jet_from_value(gj::object_field(payload, "x")?)?;
    let y = gj::jet_from_value(gj::object_field(payload, "y")?)?;
    if x.n() != y.n() {
        return Err(CmdError::from(CoreError::DimensionMismatch(
            "jet dimensions disagree".into(),
        )));
    }
    Ok(gj::jet_to_value(&(&x * &y)))
}

fn cmd_jet_inv(payload: &Value) -> Result<Value, CmdError> {
    let x = gj::jet_from_value(gj::object_field(payload, "x")?)?;
    Ok(gj::jet_to_value(&x.inverse()))
}

fn cmd_member(payload: &Value) -> Result<Value, CmdError> {
    let a = gj::matrix_from_value(gj::object_field(payload, "a")?)?;
    let tag = gj::tag_from_value(gj::object_field(payload, "tag")?)?;
    let verdict = subgroup_member(&a, &tag)?;
    Ok(gj::membership_to_value(&verdict))
}

fn cmd_factor(payload: &Value, opts: RunOptions) -> Result<Value, CmdError> {
    let a = gj::matrix_from_value(gj::object_field(payload, "a")?)?;
    let f = factor_sl_co(&a)?;
    let n = a.rows();
    let det_s: f64 = f.s.det();
    debug_assert!((det_s.abs() - 1.0).abs() < opts.tolerance * 1e3);
    let mut obj = Map::new();
    obj.insert("scale".into(), json!(f.scale));
    obj.insert(
        "c".into(),
        gj::float_matrix_to_value(&Matrix::scalar(n, f.scale)),
    );
    obj.insert("s".into(), gj::float_matrix_to_value(&f.s));
    obj.insert("det_s".into(), json!(det_s));
    if let Some(scale) = &f.scale_exact {
        obj.insert("scale_exact".into(), gj::rat_to_value(scale));
        obj.insert(
            "c_exact".into(),
            gj::matrix_to_value(&Matrix::scalar(n, scale.clone())),
        );
    }
    if let Some(s) = &f.s_exact {
        obj.insert("s_exact".into(), gj::matrix_to_value(s));
    }
    Ok(Value::Object(obj))
}

fn declared_signature(payload: &Value, n: usize) -> Result<Option<Signature>, CmdError> {
    match payload.get("q") {
        Some(v) => {
            let q = gj::usize_from_value(v, "q")?;
            if q > n {
                return Err(CmdError::from(CoreError::InvalidSignature { q, n }));
            }
            Ok(Some(Signature { neg: q, pos: n - q }))
        }
        None => Ok(None),
    }
}

fn cmd_decompose(payload: &Value) -> Result<Value, CmdError> {
    let g = gj::matrix_from_value(gj::object_field(payload, "g")?)?;
    let n = g.rows();
    let metric = match declared_signature(payload, n)? {
        Some(sig) => MetricValue::with_declared_signature(g, sig)?,
        None => MetricValue::new(g)?,
    };
    let d = decompose_metric_full(&metric);
    let mut obj = Map::new();
    obj.insert("n".into(), json!(n));
    obj.insert("q".into(), json!(d.signature.neg));
    obj.insert("v".into(), json!(rat_to_f64(&d.v_squared).sqrt()));
    obj.insert("v2".into(), gj::rat_to_value(&d.v_squared));
    obj.insert("rep".into(), gj::float_matrix_to_value(&d.rep));
    if let Some(rep) = &d.rep_exact {
        obj.insert("rep_exact".into(), gj::matrix_to_value(rep));
    }
    Ok(Value::Object(obj))
}

/// Matrix entries that may be floats (e.g. a `rep` produced by `decompose`).
fn float_matrix_from_value(v: &Value) -> Result<FloatMatrix, CmdError> {
    let rows = v
        .as_array()
        .ok_or_else(|| CmdError::schema("expected a matrix as an array of row arrays"))?;
    let parsed: Vec<Vec<f64>> = rows
        .iter()
        .map(|row| {
            row.as_array()
                .ok_or_else(|| CmdError::schema("matrix row must be an array"))?
                .iter()
                .map(|cell| match cell {
                    Value::Number(x) => x
                        .as_f64()
                        .ok_or_else(|| CmdError::schema("bad numeric entry")),
                    other => Ok(rat_to_f64(&gj::rat_from_value(other)?)),
                })
                .collect()
        })
        .collect::<Result<_, CmdError>>()?;
    Matrix::from_rows(parsed).map_err(|e| CmdError::from(e))
}

/// The squared density from a payload carrying `v2` (preferred) or `v`.
/// Returns the exact value when the field parses as a rational.
fn volume_squared_from_payload(payload: &Value) -> Result<(f64, Option<Rat>), CmdError> {
    if let Some(v2) = payload.get("v2") {
        if let Ok(exact) = gj::rat_from_value(v2) {
            return Ok((rat_to_f64(&exact), Some(exact)));
        }
        let x = v2
            .as_f64()
            .ok_or_else(|| CmdError::schema("`v2` must be a rational or a number"))?;
        return Ok((x, None));
    }
    let v = gj::object_field(payload, "v").map_err(|_| {
        CmdError::schema("payload needs a volume density: field `v2` (squared) or `v`")
    })?;
    if let Ok(exact) = gj::rat_from_value(v) {
        return Ok((rat_to_f64(&(exact.clone() * exact.clone())), Some(exact.clone() * exact)));
    }
    let x = v
        .as_f64()
        .ok_or_else(|| CmdError::schema("`v` must be a rational or a number"))?;
    Ok((x * x, None))
}

fn cmd_recompose(payload: &Value) -> Result<Value, CmdError> {
    let rep_value = match payload.get("rep_exact") {
        Some(v) => v,
        None => gj::object_field(payload, "rep")?,
    };
    let (v2_float, v2_exact) = volume_squared_from_payload(payload)?;
    if v2_float <= 0.0 {
        return Err(CmdError::from(CoreError::NonpositiveVolume));
    }

    let mut obj = Map::new();
    let exact_rep = gj::matrix_from_value(rep_value).ok();
    let float_rep: FloatMatrix = match &exact_rep {
        Some(m) => m.map(|x| rat_to_f64(x)),
        None => float_matrix_from_value(rep_value)?,
    };
    if let (Some(rep), Some(v2)) = (&exact_rep, &v2_exact) {
        let vol = VolumeDensity::from_squared(v2.clone())?;
        match recompose_metric(rep, &vol) {
            Ok(g) => {
                obj.insert("g_exact".into(), gj::matrix_to_value(&g));
            }
            Err(CoreError::InexactRoot(_)) => {}
            Err(e) => return Err(e.into()),
        }
    }
    let vol = VolumeDensity::from_squared(v2_float)?;
    let g = recompose_metric(&float_rep, &vol)?;
    obj.insert("g".into(), gj::float_matrix_to_value(&g));
    Ok(Value::Object(obj))
}

fn cmd_equivariant_value(payload: &Value) -> Result<Value, CmdError> {
    let l = gj::matrix_from_value(gj::object_field(payload, "l")?)?;
    let (v2_float, v2_exact) = volume_squared_from_payload(payload)?;
    if v2_float <= 0.0 {
        return Err(CmdError::from(CoreError::NonpositiveVolume));
    }
    let mut obj = Map::new();
    if let Some(v2) = &v2_exact {
        let vol = VolumeDensity::from_squared(v2.clone())?;
        match volume_equivariant_value(&vol, &l) {
            Ok(value) => {
                obj.insert("value_exact".into(), gj::rat_to_value(&value));
            }
            Err(CoreError::InexactRoot(_)) => {}
            Err(e) => return Err(e.into()),
        }
    }
    let vol = VolumeDensity::from_squared(v2_float)?;
    let value = volume_equivariant_value(&vol, &l.map(|x| rat_to_f64(x)))?;
    obj.insert("value".into(), json!(value));
    Ok(Value::Object(obj))
}

fn metric_field_from_payload(payload: &Value) -> Result<(PolyMetricField, Vec<Rat>), CmdError> {
    let x = gj::rat_vec_from_value(gj::object_field(payload, "x")?)?;
    let entries = gj::poly_matrix_from_value(gj::object_field(payload, "g")?)?;
    if entries.len() != x.len() {
        return Err(CmdError::schema(format!(
            "metric is {}×{} but the point has {} coordinates",
            entries.len(),
            entries.len(),
            x.len()
        )));
    }
    let field = PolyMetricField::new(entries)?;
    Ok((field, x))
}

fn cmd_levi_civita(payload: &Value) -> Result<Value, CmdError> {
    let (field, x) = metric_field_from_payload(payload)?;
    let gx = field.eval(&x)?;
    let gamma = levi_civita_at(&field, &x)?;
    Ok(json!({
        "gamma": gj::sym2_to_value(&gamma),
        "q": metric_signature(&gx)?.neg,
    }))
}

fn cmd_transform_connection(payload: &Value) -> Result<Value, CmdError> {
    let gamma = gj::sym2_from_value(gj::object_field(payload, "gamma")?)?;
    let jet = gj::jet_from_value(gj::object_field(payload, "jet")?)?;
    let out = connection_transform(&gamma, &jet)?;
    Ok(json!({"gamma": gj::sym2_to_value(&out)}))
}

fn cmd_projective_diff(payload: &Value) -> Result<Value, CmdError> {
    let g1 = gj::sym2_from_value(gj::object_field(payload, "gamma1")?)?;
    let g2 = gj::sym2_from_value(gj::object_field(payload, "gamma2")?)?;
    match projective_difference(&g1, &g2)? {
        Some(mu) => Ok(json!({"ok": true, "mu": gj::rat_vec_to_value(&mu)})),
        None => Ok(json!({"ok": false})),
    }
}

fn cmd_projective_shift(payload: &Value) -> Result<Value, CmdError> {
    let gamma = gj::sym2_from_value(gj::object_field(payload, "gamma")?)?;
    let mu = gj::rat_vec_from_value(gj::object_field(payload, "mu")?)?;
    let out = projective_shift(&gamma, &mu)?;
    Ok(json!({"gamma": gj::sym2_to_value(&out)}))
}

fn volume_field_from_payload(payload: &Value, n: usize) -> Result<PolyVolumeField, CmdError> {
    let poly = gj::poly_from_value(gj::object_field(payload, "v")?, n)?;
    Ok(PolyVolumeField::new(n, poly)?)
}

fn cmd_equiaffine(payload: &Value) -> Result<Value, CmdError> {
    let gamma = gj::sym2_from_value(gj::object_field(payload, "gamma")?)?;
    let x = gj::rat_vec_from_value(gj::object_field(payload, "x")?)?;
    if x.len() != gamma.n() {
        return Err(CmdError::schema("point and connection dimensions disagree"));
    }
    let vol = volume_field_from_payload(payload, gamma.n())?;
    let (shifted, mu) = equiaffine_representative(&gamma, &vol, &x)?;
    let residual = volume_parallel_residual(&shifted, &vol, &x)?;
    Ok(json!({
        "gamma": gj::sym2_to_value(&shifted),
        "mu": gj::rat_vec_to_value(&mu),
        "residual": gj::rat_vec_to_value(&residual),
    }))
}

fn cmd_weyl_build(payload: &Value) -> Result<Value, CmdError> {
    let (field, x) = metric_field_from_payload(payload)?;
    let theta = gj::rat_vec_from_value(gj::object_field(payload, "theta")?)?;
    let gamma = weyl_connection_at(&field, &theta, &x)?;
    Ok(json!({"gamma": gj::sym2_to_value(&gamma)}))
}

fn cmd_weyl_check(payload: &Value) -> Result<Value, CmdError> {
    let (field, x) = metric_field_from_payload(payload)?;
    let gamma = gj::sym2_from_value(gj::object_field(payload, "gamma")?)?;
    match weyl_compatibility_check(&gamma, &field, &x)? {
        Some(theta) => Ok(json!({"ok": true, "theta": gj::rat_vec_to_value(&theta)})),
        None => Ok(json!({"ok": false})),
    }
}

fn cmd_weyl_intersect(payload: &Value) -> Result<Value, CmdError> {
    let (field, x) = metric_field_from_payload(payload)?;
    let gamma = gj::sym2_from_value(gj::object_field(payload, "gamma")?)?;
    match weyl_intersection_at(&gamma, &field, &x)? {
        Some((mu, theta)) => Ok(json!({
            "ok": true,
            "mu": gj::rat_vec_to_value(&mu),
            "theta": gj::rat_vec_to_value(&theta),
        })),
        None => Ok(json!({"ok": false})),
    }
}

fn cmd_closure_check(payload: &Value, opts: RunOptions) -> Result<Value, CmdError> {
    let tag = gj::tag_from_value(gj::object_field(payload, "tag")?)?;
    let basis = gj::object_field(payload, "basis")?
        .as_array()
        .ok_or_else(|| CmdError::schema("`basis` must be an array of sym2 tensors"))?
        .iter()
        .map(gj::sym2_from_value)
        .collect::<Result<Vec<_>, _>>()?;
    let samples = match payload.get("samples") {
        Some(v) => gj::usize_from_value(v, "samples")?,
        None => 25,
    };
    let space = ProlongSpace::from_sym2_basis(tag.n(), basis);
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let report = semidirect_closure_check(&tag, &space, samples, &mut rng)?;
    Ok(json!({
        "ok": report.ok,
        "samples": report.samples,
        "failures": report.failures,
    }))
}

/// Convenience used by tests: exact conformal comparison of two rational
/// matrices from JSON.
pub fn conformal_scale_of(a: &Value, b: &Value) -> Result<Option<String>, CmdError> {
    let ga = gj::matrix_from_value(a)?;
    let gb = gj::matrix_from_value(b)?;
    Ok(conformal_equivalent(&ga, &gb).map(|l| rat_to_string(&l)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_ok(command: &str, payload: Value) -> Value {
        let req = CommandRequest {
            command: command.into(),
            payload,
            options: RunOptions::default(),
        };
        let result = run(&req);
        assert_eq!(result.exit_code, 0, "diagnostics: {:?}", result.diagnostics);
        result.data
    }

    fn run_err(command: &str, payload: Value) -> CommandResult {
        let req = CommandRequest {
            command: command.into(),
            payload,
            options: RunOptions::default(),
        };
        let result = run(&req);
        assert_ne!(result.exit_code, 0);
        result
    }

    #[test]
    fn type_order_conformal_is_finite_type_two() {
        let data = run_ok("type-order", json!({"name": "co", "n": 4, "q": 1}));
        assert_eq!(data["dims"], json!([4, 0]));
        assert_eq!(data["verdict"], json!("finite-type-2"));
    }

    #[test]
    fn prolong_orthogonal_vanishes() {
        let data = run_ok("prolong", json!({"name": "o", "n": 4, "q": 1}));
        assert_eq!(data["dim"], json!(0));
    }

    #[test]
    fn decompose_example() {
        let data = run_ok("decompose", json!({"g": [["-4", "0"], ["0", "1"]], "q": 1}));
        assert_eq!(data["v"], json!(2.0));
        assert_eq!(data["v2"], json!("4"));
        assert_eq!(data["rep"], json!([[-2.0, 0.0], [0.0, 0.5]]));
        assert_eq!(data["rep_exact"], json!([["-2", "0"], ["0", "1/2"]]));
    }

    #[test]
    fn decompose_then_recompose_roundtrip() {
        let decomposed = run_ok("decompose", json!({"g": [["-4", "0"], ["0", "1"]]}));
        let data = run_ok("recompose", decomposed);
        assert_eq!(data["g_exact"], json!([["-4", "0"], ["0", "1"]]));
    }

    #[test]
    fn degenerate_metric_is_exit_three() {
        let r = run_err("decompose", json!({"g": [["1", "0"], ["0", "0"]]}));
        assert_eq!(r.exit_code, 3);
        assert_eq!(r.data["code"], json!("degenerate-metric"));
    }

    #[test]
    fn bad_schema_is_exit_two() {
        let r = run_err("decompose", json!({"metric": []}));
        assert_eq!(r.exit_code, 2);
        let r = run_err("type-order", json!({"name": "nope", "n": 3}));
        assert_eq!(r.exit_code, 2);
        let r = run_err("no-such-command", json!({}));
        assert_eq!(r.exit_code, 2);
    }

    #[test]
    fn member_with_certificate() {
        let data = run_ok(
            "member",
            json!({
                "a": [["5/2", "3/2"], ["3/2", "5/2"]],
                "tag": {"tag": "CO", "q": 1, "n": 2},
            }),
        );
        assert_eq!(data["member"], json!(true));
        assert_eq!(data["certificate"], json!("4"));
    }

    #[test]
    fn equiaffine_zeroes_residual() {
        let data = run_ok(
            "equiaffine",
            json!({
                "gamma": {"n": 2, "packing": "upper-jk",
                          "entries": [["0","0","0"], ["0","0","0"]]},
                "v": [{"coeff": "1", "exp": [0, 0]}, {"coeff": "1", "exp": [1, 0]}],
                "x": ["0", "0"],
            }),
        );
        assert_eq!(data["mu"], json!(["1/3", "0"]));
        assert_eq!(data["residual"], json!(["0", "0"]));
    }
}
