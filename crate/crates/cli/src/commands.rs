//! One function per command, each producing a text and a JSON rendering.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;
use tangle_core::lp::{self, fmt_rational, FractionalPacking};
use tangle_core::matroid::{self, projective_geometry, three_cycle_cover, ThreeCycleCover};
use tangle_core::pg::{embeds_pg_with, quarter_packing_with};
use tangle_core::{t30, BinaryMatroid, Caps, Clutter, Error, Graph};

use crate::formats::{self, join};
use crate::{Command, DemoExample, FixtureName, Output, Status};

fn render<T: Serialize>(text: String, report: &T, status: Status) -> Output {
    let json = serde_json::to_string(report).expect("reports serialize");
    Output { text, json, status }
}

fn fail(e: Error) -> Output {
    Output::error(e.to_string())
}

/// Runs a file-based command on the file contents.
pub fn on_text(command: &Command, text: &str, caps: &Caps) -> Output {
    let clutter = || formats::parse_clutter(text).map(|f| f.clutter);
    let result = match command {
        Command::Analyze { .. } => clutter().map(|c| analyze(&c, caps)),
        Command::Blocker { .. } => clutter().map(|c| blocker(&c)),
        Command::Cover { k, .. } => formats::parse_graph(text).map(|g| cover(&g, usize::from(*k), caps)),
        Command::MatroidCover { .. } => formats::parse_matroid(text).map(|m| matroid_cover(&m, caps)),
        Command::SevenFour { .. } => formats::parse_graph(text).map(|g| seven_four(&g, caps)),
        Command::Pack { assume_ideal, fractional, .. } => clutter().map(|c| pack(&c, *assume_ideal, *fractional, caps)),
        Command::Embed { max_level, .. } => clutter().map(|c| embed(&c, usize::from(*max_level), caps)),
        Command::EmitLp { .. } => clutter().map(|c| emit_lp(&c)),
        Command::Demo { .. } | Command::Fixture { .. } => Err(Error::Invariant("command takes no input file".into())),
    };
    result.unwrap_or_else(fail)
}

// ----------------------------------------------------------------------
// analyze
// ----------------------------------------------------------------------

#[derive(Serialize)]
struct AnalyzeReport {
    n: usize,
    members: usize,
    tau: String,
    nu: String,
    tangled: bool,
    binary: bool,
    intersecting: BTreeMap<usize, bool>,
    chi: String,
    ideal: String,
    vertices: Option<usize>,
    witness: Option<Vec<String>>,
}

pub fn analyze(c: &Clutter, caps: &Caps) -> Output {
    let nu = match c.packing_number() {
        Ok(v) => v.to_string(),
        Err(e) => format!("undefined: {e}"),
    };
    let chi = match c.chromatic_number() {
        Ok(col) => col.k.to_string(),
        Err(e) => format!("undefined: {e}"),
    };
    let (ideal, vertices, witness) = match lp::is_ideal_with(c, caps) {
        Ok(r) => (
            r.is_ideal().to_string(),
            Some(r.vertices),
            r.witness.map(|w| w.iter().map(fmt_rational).collect::<Vec<_>>()),
        ),
        Err(Error::CapExceeded { .. }) => ("skipped: cap".to_string(), None, None),
        Err(e) => (format!("undefined: {e}"), None, None),
    };
    let report = AnalyzeReport {
        n: c.ground_size(),
        members: c.len(),
        tau: c.covering_number().to_string(),
        nu,
        tangled: c.is_tangled(),
        binary: c.is_binary(),
        intersecting: (2..=5).map(|k| (k, c.is_k_wise_intersecting(k))).collect(),
        chi,
        ideal,
        vertices,
        witness,
    };
    let mut t = String::new();
    let _ = writeln!(t, "n {}", report.n);
    let _ = writeln!(t, "members {}", report.members);
    let _ = writeln!(t, "tau {}", report.tau);
    let _ = writeln!(t, "nu {}", report.nu);
    let _ = writeln!(t, "tangled {}", report.tangled);
    let _ = writeln!(t, "binary {}", report.binary);
    let profile: Vec<String> = report.intersecting.iter().map(|(k, v)| format!("{k}:{v}")).collect();
    let _ = writeln!(t, "intersecting {}", profile.join(" "));
    let _ = writeln!(t, "chi {}", report.chi);
    let _ = writeln!(t, "ideal {}", report.ideal);
    if let Some(v) = report.vertices {
        let _ = writeln!(t, "vertices {v}");
    }
    if let Some(w) = &report.witness {
        let _ = writeln!(t, "witness {}", w.join(" "));
    }
    render(t, &report, Status::Ok)
}

// ----------------------------------------------------------------------
// blocker, emit-lp
// ----------------------------------------------------------------------

#[derive(Serialize)]
struct ClutterReport {
    n: usize,
    members: Vec<Vec<usize>>,
}

pub fn blocker(c: &Clutter) -> Output {
    let b = c.blocker();
    let report = ClutterReport { n: b.ground_size(), members: b.to_lists() };
    render(formats::format_clutter(&b), &report, Status::Ok)
}

pub fn emit_lp(c: &Clutter) -> Output {
    match lp::cover_polyhedron(c) {
        Ok(q) => {
            let text = q.lp(&vec![lp::int(1); c.ground_size()]).to_string();
            render(text.clone(), &serde_json::json!({ "lp": text }), Status::Ok)
        }
        Err(e) => fail(e),
    }
}

// ----------------------------------------------------------------------
// cover, seven-four
// ----------------------------------------------------------------------

#[derive(Serialize)]
struct CoverReport {
    k: usize,
    cycles: Option<Vec<Vec<usize>>>,
    bridges: Vec<usize>,
}

fn cycle_line(c: &[usize]) -> String {
    if c.is_empty() {
        "cycle -".into()
    } else {
        format!("cycle {}", join(c))
    }
}

pub fn cover(g: &Graph, k: usize, caps: &Caps) -> Output {
    let found = match g.k_cycle_cover_with(k, caps) {
        Ok(f) => f,
        Err(e) => return fail(e),
    };
    let report = CoverReport { k, cycles: found, bridges: g.bridges() };
    let mut t = String::new();
    match &report.cycles {
        Some(cs) => cs.iter().for_each(|c| {
            let _ = writeln!(t, "{}", cycle_line(c));
        }),
        None => t.push_str("none\n"),
    }
    if !report.bridges.is_empty() {
        let _ = writeln!(t, "bridges {}", join(&report.bridges));
    }
    let status = if report.cycles.is_some() { Status::Ok } else { Status::Negative };
    render(t, &report, status)
}

#[derive(Serialize)]
struct SevenFourReport {
    cycles: Vec<Vec<usize>>,
    multiplicity: Vec<usize>,
    verified: bool,
}

pub fn seven_four(g: &Graph, caps: &Caps) -> Output {
    let cover = match g.seven_cycle_four_cover_with(caps) {
        Ok(c) => c,
        Err(e) => return fail(e),
    };
    let verified = cover.verify(g, 4).is_ok();
    let mut t = String::new();
    for c in &cover.cycles {
        let _ = writeln!(t, "{}", cycle_line(c));
    }
    let _ = writeln!(t, "verified {verified}");
    let report = SevenFourReport { cycles: cover.cycles, multiplicity: cover.multiplicity, verified };
    render(t, &report, if verified { Status::Ok } else { Status::Error })
}

// ----------------------------------------------------------------------
// pack, embed
// ----------------------------------------------------------------------

#[derive(Serialize)]
struct WeightedMember {
    weight: String,
    member: Vec<usize>,
}

#[derive(Serialize)]
struct PackReport {
    value: String,
    denominator: String,
    weights: Vec<WeightedMember>,
    level: Option<usize>,
    idealness: Option<lp::Idealness>,
    deleted: Option<Vec<usize>>,
}

fn packing_report(pk: &FractionalPacking) -> PackReport {
    PackReport {
        value: fmt_rational(pk.value()),
        denominator: pk.denominator().to_string(),
        weights: pk
            .support()
            .into_iter()
            .map(|i| WeightedMember { weight: fmt_rational(&pk.weights()[i]), member: pk.clutter().member_labels(i) })
            .collect(),
        level: None,
        idealness: None,
        deleted: None,
    }
}

pub fn pack(c: &Clutter, assume_ideal: bool, fractional: bool, caps: &Caps) -> Output {
    if fractional {
        return match lp::max_fractional_packing(c) {
            Ok(pk) => render(pk.to_string(), &packing_report(&pk), Status::Ok),
            Err(e) => fail(e),
        };
    }
    let qp = match quarter_packing_with(c, assume_ideal, caps) {
        Ok(q) => q,
        Err(e) => return fail(e),
    };
    let mut report = packing_report(&qp.packing);
    report.level = Some(qp.level);
    report.idealness = Some(qp.idealness);
    report.deleted = Some(qp.deleted.clone());
    let mut t = qp.packing.to_string();
    let _ = writeln!(t, "level {}", qp.level);
    let idealness = serde_json::to_value(qp.idealness).expect("enum serializes");
    let _ = writeln!(t, "idealness {}", idealness.as_str().unwrap_or_default());
    if !qp.deleted.is_empty() {
        let _ = writeln!(t, "deleted {}", join(&qp.deleted));
    }
    render(t, &report, Status::Ok)
}

#[derive(Serialize)]
struct EmbedReport {
    level: Option<usize>,
    geometry: Option<String>,
    members: Vec<Vec<usize>>,
    witness: Vec<Vec<usize>>,
}

pub fn embed(c: &Clutter, max_level: usize, caps: &Caps) -> Output {
    let found = match embeds_pg_with(c, max_level, caps) {
        Ok(f) => f,
        Err(e) => return fail(e),
    };
    let Some(e) = found else {
        let report = EmbedReport { level: None, geometry: None, members: Vec::new(), witness: Vec::new() };
        return render("none\n".into(), &report, Status::Negative);
    };
    if let Err(err) = e.verify(c) {
        return fail(err);
    }
    let report = EmbedReport {
        level: Some(e.level),
        geometry: Some(format!("PG({},2)", e.level - 1)),
        members: e.members.iter().map(|&i| c.member_labels(i)).collect(),
        witness: e.empty_intersection_witness().iter().map(|&i| c.member_labels(i)).collect(),
    };
    let mut t = format!("level {}\ngeometry {}\n", e.level, report.geometry.as_deref().unwrap_or_default());
    for m in &report.members {
        let _ = writeln!(t, "member {}", join(m));
    }
    for m in &report.witness {
        let _ = writeln!(t, "witness {}", join(m));
    }
    render(t, &report, Status::Ok)
}

// ----------------------------------------------------------------------
// demo, fixture
// ----------------------------------------------------------------------

fn cover_text(c: &ThreeCycleCover) -> String {
    c.cycles.iter().map(|cy| if cy.is_empty() { "-".to_string() } else { join(cy) }).collect::<Vec<_>>().join(" | ")
}

pub fn demo(example: DemoExample, level: Option<usize>, caps: &Caps) -> Output {
    if example == DemoExample::Pg && level.is_none() {
        return Output::error("`demo pg` needs a geometry level in 1..=5");
    }
    let mut lines: Vec<(String, String)> = Vec::new();
    let mut push = |k: &str, v: String| lines.push((k.to_string(), v));
    let outcome: Result<(), Error> = (|| {
        match example {
            DemoExample::Q6 => {
                let q6 = Clutter::q6();
                push("clutter", q6.to_string());
                for line in analyze(&q6, caps).text.lines() {
                    let (k, v) = line.split_once(' ').unwrap_or((line, ""));
                    push(k, v.to_string());
                }
                push("blocker", q6.blocker().to_string());
                push("blocker-chi", q6.blocker().chromatic_number()?.k.to_string());
            }
            DemoExample::Petersen => {
                let g = Graph::petersen();
                push("vertices", g.num_vertices().to_string());
                push("edges", g.num_edges().to_string());
                push("cycle-space-rank", g.cycle_space().rank().to_string());
                let two = g.k_cycle_cover_with(2, caps)?;
                push("2-cycle-cover", two.map_or("none".into(), |cs| format!("{cs:?}")));
                let three = g.k_cycle_cover_with(3, caps)?.ok_or(Error::NoThreeCycleCover)?;
                let three: Vec<String> = three.iter().map(|c| join(c)).collect();
                push("3-cycle-cover", three.join(" | "));
                let seven = g.seven_cycle_four_cover_with(caps)?;
                for c in &seven.cycles {
                    push("4-cover-cycle", join(c));
                }
                push("4-cover-verified", seven.verify(&g, 4).is_ok().to_string());
                let t = t30();
                push("t30-elements", t.ground_size().to_string());
                push("t30-members", t.len().to_string());
                push("t30-binary", t.is_binary().to_string());
                push("t30-3-wise", t.is_k_wise_intersecting(3).to_string());
                push("t30-4-wise", t.is_k_wise_intersecting(4).to_string());
            }
            DemoExample::Fano => {
                let f = BinaryMatroid::fano();
                for row in f.representation() {
                    push("row", row.to_string());
                }
                push("rank", f.rank().to_string());
                let lines: Vec<String> = f.circuits()?.iter().filter(|c| c.len() == 3).map(|c| join(c)).collect();
                push("lines", lines.join(" | "));
                let given = ThreeCycleCover::new(vec![], vec![1, 2, 3, 7], vec![4, 5, 6]);
                given.verify(&f)?;
                push("3-cycle-cover", cover_text(&given));
                let found = three_cycle_cover(&f)?.ok_or(Error::NoThreeCycleCover)?;
                push("first-3-cycle-cover", cover_text(&found));
            }
            DemoExample::Wagner => {
                let g = Graph::wagner();
                let w = BinaryMatroid::wagner_dual();
                push("elements", w.len().to_string());
                push("rank", w.rank().to_string());
                let cuts: Vec<Vec<usize>> =
                    [vec![1, 6, 7, 8], vec![1, 7], vec![2, 4]].iter().map(|x| g.cut(x)).collect::<Result<_, _>>()?;
                let cover = ThreeCycleCover::new(cuts[0].clone(), cuts[1].clone(), cuts[2].clone());
                cover.verify(&w)?;
                push("3-cycle-cover", cover_text(&cover));
                push("coloops", w.coloops().len().to_string());
            }
            DemoExample::Pg => {
                let l = level.unwrap_or_default();
                if !(1..=5).contains(&l) {
                    return Err(Error::OutOfRange { what: "geometry level", value: l, min: 1, max: 5 });
                }
                let pg = projective_geometry(l)?;
                push("geometry", format!("PG({},2)", l - 1));
                push("rank", pg.rank().to_string());
                push("elements", pg.len().to_string());
                let cocycles = pg.cocycles().points()?;
                push("cocycles", cocycles.len().to_string());
                push("nonempty-cocycle-size", (1usize << (l - 1)).to_string());
                for c in &cocycles {
                    push("cocycle", c.to_string());
                }
                let set = tangle_core::ZeroOneSet::from_space(&pg.cocycles())?;
                let cub = tangle_core::cuboid::cuboid(&set)?;
                push("cuboid-elements", cub.ground_size().to_string());
                push("cuboid-members", cub.len().to_string());
                push(&format!("cuboid-{l}-wise"), cub.is_k_wise_intersecting(l).to_string());
                let witness = cub.disjoint_subfamily(l + 1).unwrap_or_default();
                for i in witness {
                    push("witness", join(&cub.member_labels(i)));
                }
                if let Ok(pk) = tangle_core::pg::pg_packing(l - 1) {
                    push("packing-value", fmt_rational(pk.value()));
                    push("packing-denominator", pk.denominator().to_string());
                }
            }
        }
        Ok(())
    })();
    if let Err(e) = outcome {
        return fail(e);
    }
    let mut text = String::new();
    for (k, v) in &lines {
        let _ = writeln!(text, "{k} {v}");
    }
    let entries: Vec<[&str; 2]> = lines.iter().map(|(k, v)| [k.as_str(), v.as_str()]).collect();
    render(text, &entries, Status::Ok)
}

pub fn fixture(name: FixtureName) -> Output {
    let text = match name {
        FixtureName::Q6 => formats::format_clutter(&Clutter::q6()),
        FixtureName::T30 => formats::format_clutter(&t30()),
        FixtureName::Petersen => Graph::petersen().to_string(),
        FixtureName::Wagner => Graph::wagner().to_string(),
        FixtureName::K4 => Graph::complete(4).to_string(),
        FixtureName::Fano => formats::format_matroid(&BinaryMatroid::fano()),
    };
    render(text.clone(), &serde_json::json!({ "text": text }), Status::Ok)
}

/// Verifies a 3-cycle cover read from the matroid file format.
pub fn matroid_cover(m: &BinaryMatroid, caps: &Caps) -> Output {
    match matroid::three_cycle_cover_with(m, caps) {
        Ok(Some(c)) => render(format!("{}\n", cover_text(&c)), &c, Status::Ok),
        Ok(None) => render("none\n".into(), &serde_json::Value::Null, Status::Negative),
        Err(e) => fail(e),
    }
}
