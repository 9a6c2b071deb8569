use std::collections::BTreeSet;

use hodgev_core::hodge::{counterexample_remark_ii, ComparisonReport, HodgeIdeals, RemarkIiReport};
use hodgev_core::milnor::{
    build_milnor, lct, milnor_orlik_count, mlct, mlct_from_spectrum, mlct_from_weights, reduced_bs_roots, spectrum,
    MilnorData,
};
use hodgev_core::oracles::{bp_spectrum, bp_v_member, check_oracle_agreement, diagonal_spec_of, DiagonalSpec};
use hodgev_core::polyring::{fmt_rational, parse_expression, parse_rational, scan_variables, Monomial};
use hodgev_core::vfilt::{VFiltration, VOrder};
use hodgev_core::{Polynomial, Rational, Ring, WeightSystem};
use num_traits::{One, ToPrimitive};
use serde_json::{json, Value};

use crate::args::{Command, HodgeCommand, OracleCommand, PolyArgs, RangeArgs, VerifyCommand, VfiltCommand};
use crate::report::{Invariants, Report, SpectralEntry, Verification};

type CmdResult = Result<Report, String>;

fn q(r: &Rational) -> String {
    fmt_rational(r)
}

fn qs<'a>(rs: impl IntoIterator<Item = &'a Rational>) -> Vec<String> {
    rs.into_iter().map(q).collect()
}

fn int(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

fn parse_q(text: &str, what: &str) -> Result<Rational, String> {
    parse_rational(text).ok_or_else(|| format!("{what} must be an integer or a fraction p/q (got {text:?})"))
}

/// Integer `N`: grid level `N`; `p/q`: weighted degree.
fn parse_degree(text: &str, w: &WeightSystem) -> Result<Rational, String> {
    if text.contains('/') {
        return parse_q(text, "degree");
    }
    let level: u64 = text.trim().parse().map_err(|_| format!("degree must be a non-negative integer or p/q (got {text:?})"))?;
    let (l, _) = w.grid();
    Ok(Rational::new(level.into(), l.into()))
}

struct Loaded {
    args: PolyArgs,
    milnor: MilnorData,
}

impl Loaded {
    fn ring(&self) -> &std::sync::Arc<Ring> {
        self.milnor.f().ring()
    }

    fn parse(&self, text: &str, what: &str) -> Result<Polynomial, String> {
        parse_expression(text, self.ring()).map_err(|e| format!("cannot parse {what} {text:?}: {e}"))
    }

    fn input(&self) -> Value {
        json!({
            "polynomial": self.args.f,
            "canonical": self.milnor.f().to_string(),
            "variables": self.ring().names(),
            "weights": qs(self.milnor.weights().weights()),
            "weights_inferred": self.args.weights.is_none(),
        })
    }

    fn report(&self) -> Report {
        let mut r = Report::new(self.input());
        r.invariants = Some(invariants(&self.milnor));
        r
    }
}

fn load(args: &PolyArgs) -> Result<Loaded, String> {
    let names = match &args.vars {
        Some(v) => {
            let set: BTreeSet<&String> = v.iter().collect();
            if set.len() != v.len() {
                return Err("--vars contains a repeated name".into());
            }
            v.clone()
        }
        None => scan_variables(&args.f).map_err(|e| format!("cannot parse polynomial: {e}"))?,
    };
    if names.is_empty() {
        return Err("precondition violated: f is constant (no variables)".into());
    }
    let ring = Ring::new(names);
    let f = parse_expression(&args.f, &ring).map_err(|e| format!("cannot parse polynomial {:?}: {e}", args.f))?;
    let weights = match &args.weights {
        Some(ws) => {
            let values = ws.iter().map(|w| parse_q(w, "weight")).collect::<Result<Vec<_>, _>>()?;
            Some(WeightSystem::new(values).map_err(|e| format!("precondition violated: {e}"))?)
        }
        None => None,
    };
    let milnor = build_milnor(&f, weights).map_err(|e| format!("precondition violated: {e}"))?;
    Ok(Loaded { args: args.clone(), milnor })
}

fn invariants(m: &MilnorData) -> Invariants {
    let sp = spectrum(m);
    Invariants {
        mu: m.mu(),
        weights: qs(m.weights().weights()),
        mlct: q(&mlct(m)),
        lct: q(&lct(m)),
        spectrum: sp.entries().map(|(a, k)| SpectralEntry { alpha: q(a), multiplicity: k }).collect(),
        reduced_bs_roots: qs(&reduced_bs_roots(m)),
        hodge_floor: VFiltration::new(m).hodge_floor().ok(),
        warnings: m.warnings().to_vec(),
    }
}

fn comparison_json(r: &ComparisonReport) -> Value {
    json!({
        "p": r.p,
        "e_max": q(&r.e_max),
        "modulo_f": r.modulo_f,
        "degrees_checked": r.degrees.len(),
        "failing_degrees": qs(&r.failing_degrees()),
        "degrees": r.degrees.iter().map(|d| json!({
            "degree": q(&d.degree),
            "ambient": d.ambient,
            "hodge_dim": d.hodge_dim,
            "v_dim": d.v_dim,
            "equal": d.equal,
        })).collect::<Vec<_>>(),
    })
}

fn remark_ii_json(r: &RemarkIiReport) -> Value {
    json!({
        "second_derivative": r.second_derivative.to_string(),
        "x4_in_v3": r.x4_in_v3,
        "mixed_in_v3": r.mixed_in_v3,
        "witness_in_hodge_degree_4": r.witness_in_hodge,
        "hodge_differs_from_v3": r.hodge_differs,
        "mixed_in_v3_plus_f": r.mixed_in_v3_mod_f,
        "strict_failing_degrees": qs(&r.strict.failing_degrees()),
        "modulo_f": comparison_json(&r.modulo_f),
    })
}

fn e_max_for(range: &Option<String>, p: u32, w: &WeightSystem) -> Result<Rational, String> {
    match range {
        Some(text) => parse_degree(text, w),
        None => Ok(int(i64::from(p) + 2)),
    }
}

fn polys(ps: &[Polynomial]) -> Vec<String> {
    ps.iter().map(|p| p.to_string()).collect()
}

pub fn execute(command: &Command) -> CmdResult {
    match command {
        Command::Invariants(args) => Ok(load(args)?.report()),
        Command::Spectrum(args) => {
            let l = load(args)?;
            let sp = spectrum(&l.milnor);
            let mut r = l.report();
            r.result = Some(json!({
                "spectrum": sp.entries().map(|(a, k)| json!({"alpha": q(a), "multiplicity": k})).collect::<Vec<_>>(),
                "total": sp.total(),
                "symmetric": sp.is_symmetric(l.milnor.nvars()),
            }));
            Ok(r)
        }
        Command::Vfilt { command } => vfilt(command),
        Command::Multiplier { poly, alpha } => {
            let l = load(poly)?;
            let alpha = parse_q(alpha, "--alpha")?;
            let v = VFiltration::new(&l.milnor);
            let ideal = v.multiplier_ideal(&alpha).map_err(|e| format!("precondition violated: {e}"))?;
            let mut r = l.report();
            r.result = Some(json!({
                "alpha": q(&alpha),
                "jump": v.gr_dim_direct(&alpha).map_err(|e| e.to_string())? > 0,
                "groebner_basis": polys(&ideal.basis()),
                "codimension": ideal.quotient_dim().map_err(|e| e.to_string())?,
            }));
            Ok(r)
        }
        Command::Hodge { command: HodgeCommand::Slice { poly, p, degree } } => {
            let l = load(poly)?;
            let e = parse_degree(degree, l.milnor.weights())?;
            let h = HodgeIdeals::new(&l.milnor);
            let s = h.slice(*p, &e).map_err(|e| e.to_string())?;
            let mut r = l.report();
            r.result = Some(json!({
                "p": p,
                "degree": q(&e),
                "dim": s.slice.dim(),
                "ambient_dim": s.slice.ambient_dim(),
                "basis": polys(&s.slice.rows(l.ring())),
            }));
            Ok(r)
        }
        Command::Verify { command } => verify(command),
        Command::Oracle { command } => oracle(command),
    }
}

fn vfilt(command: &VfiltCommand) -> CmdResult {
    match command {
        VfiltCommand::Member { poly, g, alpha } => {
            let l = load(poly)?;
            let g = l.parse(g, "g")?;
            let alpha = parse_q(alpha, "--alpha")?;
            let member = VFiltration::new(&l.milnor).v_member(&g, &alpha);
            let mut r = l.report();
            r.result = Some(json!({"g": g.to_string(), "alpha": q(&alpha), "member": member}));
            Ok(r)
        }
        VfiltCommand::Order { poly, g, ceiling } => {
            let l = load(poly)?;
            let g = l.parse(g, "g")?;
            let ceiling = match ceiling {
                Some(c) => parse_q(c, "--ceiling")?,
                None => int(l.milnor.nvars() as i64 + 1),
            };
            let order = VFiltration::new(&l.milnor).v_order(&g, &ceiling).map_err(|e| format!("precondition violated: {e}"))?;
            let (value, above) = match order {
                VOrder::Exact(c) => (Value::String(q(&c)), false),
                VOrder::AboveCeiling(_) => (Value::Null, true),
            };
            let mut r = l.report();
            r.result = Some(json!({"g": g.to_string(), "ceiling": q(&ceiling), "order": value, "above_ceiling": above}));
            Ok(r)
        }
        VfiltCommand::Level { poly, alpha } => {
            let l = load(poly)?;
            let alpha = parse_q(alpha, "--alpha")?;
            let v = VFiltration::new(&l.milnor);
            let level = v.v_level(&alpha);
            let n = l.milnor.nvars();
            let names = l.ring().names();
            let generators: Vec<Value> = level
                .generators()
                .iter()
                .map(|g| {
                    json!({
                        "basis_monomial": Polynomial::monomial(l.ring(), g.basis_monomial.clone()).to_string(),
                        "nu": g.nu,
                        "generator": g.poly.to_string(),
                    })
                })
                .collect();
            debug_assert_eq!(names.len(), n);
            let mut r = l.report();
            r.result = Some(json!({
                "alpha": q(&alpha),
                "candidate": q(level.alpha()),
                "truncation": level.truncation(),
                "generators": generators,
                "groebner_basis": polys(&level.ideal().basis()),
                "codimension": level.ideal().quotient_dim().map_err(|e| e.to_string())?,
            }));
            Ok(r)
        }
        VfiltCommand::Jumping { poly, ceiling } => {
            let l = load(poly)?;
            let ceiling = match ceiling {
                Some(c) => parse_q(c, "--ceiling")?,
                None => int(l.milnor.nvars() as i64),
            };
            if ceiling <= int(0) {
                return Err("precondition violated: --ceiling must be positive".into());
            }
            let jumps = VFiltration::new(&l.milnor).jumping_numbers(&ceiling).map_err(|e| e.to_string())?;
            let mut r = l.report();
            r.result = Some(json!({
                "ceiling": q(&ceiling),
                "jumps": jumps.jumps.iter().map(|(a, d)| json!({"alpha": q(a), "gr_dim": d})).collect::<Vec<_>>(),
            }));
            Ok(r)
        }
    }
}

fn comparison(
    l: &Loaded,
    range: &RangeArgs,
    name: &str,
    run: impl Fn(&HodgeIdeals, u32, &Rational) -> Result<ComparisonReport, String>,
) -> CmdResult {
    let h = HodgeIdeals::new(&l.milnor);
    let e_max = e_max_for(&range.max_degree, range.p, l.milnor.weights())?;
    let cmp = run(&h, range.p, &e_max)?;
    let mut r = l.report();
    r.verifications.push(Verification::new(format!("{name} p={}", range.p), cmp.passed(), comparison_json(&cmp)));
    Ok(r)
}

fn dims_check(v: &VFiltration, ceiling: &Rational) -> Result<Verification, String> {
    let mut rows = Vec::new();
    let mut ok = true;
    for c in v.candidates_upto(ceiling) {
        let formula = v.gr_dim_formula(&c);
        let direct = v.gr_dim_direct(&c).map_err(|e| e.to_string())?;
        ok &= formula == direct;
        rows.push(json!({"alpha": q(&c), "formula": formula, "direct": direct}));
    }
    Ok(Verification::new("dims", ok, json!({"ceiling": q(ceiling), "candidates": rows})))
}

fn oracle_check(f: &Polynomial, max_degree: u32, ceiling: &Rational) -> Result<Verification, String> {
    let spec = diagonal_spec_of(f).ok_or("precondition violated: f is not of the form Σ c_i x_i^a_i")?;
    let a = check_oracle_agreement(&spec, max_degree, ceiling).map_err(|e| e.to_string())?;
    let mismatches: Vec<Value> = a
        .mismatches
        .iter()
        .map(|(m, alpha)| json!({"monomial": m.exponents(), "alpha": q(alpha)}))
        .collect();
    Ok(Verification::new(
        "oracle",
        a.passed(),
        json!({
            "exponents": spec.exponents(),
            "spectrum_equal": a.spectrum_equal,
            "alphas_checked": a.alphas_checked,
            "monomials_checked": a.monomials_checked,
            "max_degree": max_degree,
            "ceiling": q(ceiling),
            "mismatches": mismatches,
        }),
    ))
}

fn is_fermat_cubic(f: &Polynomial) -> bool {
    diagonal_spec_of(f).is_some_and(|s| s.exponents() == [3, 3, 3]) && f.terms().all(|(_, c)| c.is_one())
}

fn verify(command: &VerifyCommand) -> CmdResult {
    match command {
        VerifyCommand::Theorem1 { poly, range, strict } => {
            let l = load(poly)?;
            let name = if *strict { "theorem1 strict" } else { "theorem1" };
            comparison(&l, range, name, |h, p, e| h.verify_theorem1(p, e, !strict).map_err(|e| e.to_string()))
        }
        VerifyCommand::Eq242 { poly, range } => {
            let l = load(poly)?;
            comparison(&l, range, "eq242", |h, p, e| h.verify_242(p, e).map_err(|e| e.to_string()))
        }
        VerifyCommand::RemarkI { poly, range } => {
            let l = load(poly)?;
            comparison(&l, range, "remark_i", |h, p, e| h.verify_remark_i(p, e).map_err(|e| e.to_string()))
        }
        VerifyCommand::RemarkIi => {
            let args = PolyArgs { f: "x^3+y^3+z^3".into(), vars: None, weights: None };
            let l = load(&args)?;
            let rep = counterexample_remark_ii().map_err(|e| e.to_string())?;
            let mut r = l.report();
            r.verifications.push(Verification::new("remark_ii", rep.passed(), remark_ii_json(&rep)));
            Ok(r)
        }
        VerifyCommand::Dims { poly, ceiling } => {
            let l = load(poly)?;
            let ceiling = ceiling.as_deref().map(|c| parse_q(c, "--ceiling")).transpose()?.unwrap_or_else(|| int(3));
            let v = VFiltration::new(&l.milnor);
            let check = dims_check(&v, &ceiling)?;
            let mut r = l.report();
            r.verifications.push(check);
            Ok(r)
        }
        VerifyCommand::Oracle { poly, max_degree, ceiling } => {
            let l = load(poly)?;
            let ceiling = ceiling.as_deref().map(|c| parse_q(c, "--ceiling")).transpose()?.unwrap_or_else(|| int(4));
            let check = oracle_check(l.milnor.f(), *max_degree, &ceiling)?;
            let mut r = l.report();
            r.verifications.push(check);
            Ok(r)
        }
        VerifyCommand::All { poly, max_degree, max_p, ceiling } => {
            let l = load(poly)?;
            let ceiling = ceiling.as_deref().map(|c| parse_q(c, "--ceiling")).transpose()?.unwrap_or_else(|| int(3));
            verify_all(&l, max_degree, *max_p, &ceiling)
        }
    }
}

fn verify_all(l: &Loaded, max_degree: &Option<String>, max_p: u32, ceiling: &Rational) -> CmdResult {
    let m = &l.milnor;
    let n = m.nvars();
    let w = m.weights();
    let mut r = l.report();
    let checks = &mut r.verifications;

    let (by_weights, by_spectrum) = (mlct_from_weights(m), mlct_from_spectrum(m));
    let lct_ok = lct(m) == by_weights.clone().min(Rational::one());
    checks.push(Verification::new(
        "mlct_routes",
        by_weights == by_spectrum && lct_ok,
        json!({"from_weights": q(&by_weights), "from_spectrum": q(&by_spectrum), "lct": q(&lct(m))}),
    ));

    let sp = spectrum(m);
    let mo = milnor_orlik_count(w);
    checks.push(Verification::new(
        "spectrum_total",
        sp.total() == m.mu() && mo.map_or(true, |c| c == m.mu() as u64),
        json!({"total": sp.total(), "mu": m.mu(), "milnor_orlik": mo}),
    ));
    checks.push(Verification::new("spectrum_symmetry", sp.is_symmetric(n), json!({"n": n})));

    let low = by_weights.clone();
    let high = int(n as i64) - &low;
    let roots = sp.distinct();
    checks.push(Verification::new(
        "bs_roots_interval",
        roots.iter().all(|a| *a >= low && *a <= high),
        json!({"roots": qs(&roots), "interval": [q(&low), q(&high)]}),
    ));

    let h = HodgeIdeals::new(m);
    let v = h.vfilt();
    let floor = v.hodge_floor();
    let direct = h.floor_direct();
    checks.push(Verification::new(
        "hodge_floor",
        floor.as_ref().is_ok_and(|&f| f == direct),
        json!({
            "from_v_filtration": floor.as_ref().ok(),
            "from_hodge_ideals": direct,
            "floor_mlct": by_weights.floor().to_integer().to_u32(),
        }),
    ));

    let one = Polynomial::one(m.f().ring());
    let next = v.next_candidate(&low);
    checks.push(Verification::new(
        "unit_ideal_law",
        v.v_member(&one, &low) && !v.v_member(&one, &next),
        json!({"mlct": q(&low), "next_candidate": q(&next)}),
    ));

    checks.push(dims_check(v, ceiling)?);
    checks.push(Verification::new("monotonicity", v.check_monotonicity(ceiling), json!({"ceiling": q(ceiling)})));
    checks.push(Verification::new("shift", v.check_shift(ceiling), json!({"ceiling": q(ceiling)})));

    for p in 0..=max_p {
        let e_max = e_max_for(max_degree, p, w)?;
        let cmp = h.verify_theorem1(p, &e_max, true).map_err(|e| e.to_string())?;
        checks.push(Verification::new(format!("theorem1 p={p}"), cmp.passed(), comparison_json(&cmp)));
    }

    for p in 0..=1 {
        let e_max = e_max_for(max_degree, p, w)?;
        match h.verify_242(p, &e_max) {
            Ok(cmp) => checks.push(Verification::new(format!("eq242 p={p}"), cmp.passed(), comparison_json(&cmp))),
            Err(e) => checks.push(Verification::skipped(format!("eq242 p={p}"), e.to_string())),
        }
    }

    if w.common_degree() == Some(2) {
        for p in 0..=3 {
            let e_max = e_max_for(max_degree, p, w)?;
            let cmp = h.verify_remark_i(p, &e_max).map_err(|e| e.to_string())?;
            checks.push(Verification::new(format!("remark_i p={p}"), cmp.passed(), comparison_json(&cmp)));
        }
    } else {
        checks.push(Verification::skipped("remark_i", "f is not homogeneous of degree 2"));
    }

    if is_fermat_cubic(m.f()) {
        let rep = counterexample_remark_ii().map_err(|e| e.to_string())?;
        checks.push(Verification::new("remark_ii", rep.passed(), remark_ii_json(&rep)));
    } else {
        checks.push(Verification::skipped("remark_ii", "applies to x^3+y^3+z^3 only"));
    }

    if diagonal_spec_of(m.f()).is_some() {
        checks.push(oracle_check(m.f(), 10, &int(4))?);
    } else {
        checks.push(Verification::skipped("oracle", "f is not diagonal"));
    }
    Ok(r)
}

fn oracle(command: &OracleCommand) -> CmdResult {
    match command {
        OracleCommand::Spectrum { exponents } => {
            let spec = DiagonalSpec::new(exponents.clone()).map_err(|e| format!("precondition violated: {e}"))?;
            let sp = bp_spectrum(&spec);
            let mut r = Report::new(json!({"exponents": exponents}));
            r.result = Some(json!({
                "spectrum": sp.entries().map(|(a, k)| json!({"alpha": q(a), "multiplicity": k})).collect::<Vec<_>>(),
                "total": sp.total(),
                "weight_sum": q(&spec.weight_sum()),
            }));
            Ok(r)
        }
        OracleCommand::Member { exponents, monomial, alpha } => {
            let spec = DiagonalSpec::new(exponents.clone()).map_err(|e| format!("precondition violated: {e}"))?;
            if monomial.len() != spec.nvars() {
                return Err(format!(
                    "precondition violated: --monomial has {} exponents, expected {}",
                    monomial.len(),
                    spec.nvars()
                ));
            }
            let alpha = parse_q(alpha, "--alpha")?;
            let member = bp_v_member(&spec, &Monomial::new(monomial.clone()), &alpha);
            let mut r = Report::new(json!({"exponents": exponents}));
            r.result = Some(json!({"monomial": monomial, "alpha": q(&alpha), "member": member}));
            Ok(r)
        }
    }
}
