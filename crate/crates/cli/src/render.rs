//! Plain-text renderings. JSON output goes through serde directly.

use std::fmt::Write;

use sspec_core::goingdown::GoingDownReport;
use sspec_core::verifier::{CorpusReport, Status, TheoremCheck};
use sspec_core::{Elem, FiniteTopology, RingDesc, SpectrumSpace};

pub fn set(elems: &[Elem]) -> String {
    let inner: Vec<String> = elems.iter().map(ToString::to_string).collect();
    format!("{{{}}}", inner.join(","))
}

pub fn point_members(space: &SpectrumSpace<'_>) -> Vec<Vec<Elem>> {
    space.points().iter().map(|p| p.ideal.to_vec()).collect()
}

pub fn points(space: &SpectrumSpace<'_>) -> String {
    let mut out = String::new();
    for (k, p) in space.points().iter().enumerate() {
        writeln!(out, "P{k} = {}", set(&p.ideal.to_vec())).unwrap();
    }
    out
}

pub fn spectrum(desc: &RingDesc, space: &SpectrumSpace<'_>) -> String {
    let mut out = format!(
        "{desc}  S = {}  ({} points)\n",
        set(&space.mults().to_vec()),
        space.len()
    );
    for (k, p) in space.points().iter().enumerate() {
        writeln!(
            out,
            "P{k} = {}  witnesses {}  {}  colon prime {}",
            set(&p.ideal.to_vec()),
            set(&p.witnesses),
            if p.is_prime { "prime" } else { "not prime" },
            set(&p.colon_prime.to_vec()),
        )
        .unwrap();
    }
    out
}

pub fn topology(space: &SpectrumSpace<'_>, top: &FiniteTopology) -> String {
    let mut out = points(space);
    writeln!(out, "{} open sets:", top.opens().len()).unwrap();
    for u in top.opens() {
        writeln!(out, "  {}", set(&u.to_vec())).unwrap();
    }
    out
}

fn status(s: Status) -> &'static str {
    match s {
        Status::Pass => "pass",
        Status::Fail => "FAIL",
        Status::Skipped => "skipped",
    }
}

pub fn checks(checks: &[TheoremCheck]) -> String {
    let mut out = String::new();
    for c in checks {
        let mut line = format!("  {:<15} {:<8}", c.id, status(c.status));
        if let Some(note) = &c.note {
            write!(line, " {note}").unwrap();
        }
        if let Some(w) = &c.witness {
            write!(line, " {}", w.detail).unwrap();
            if !w.ideals.is_empty() {
                let ideals: Vec<String> = w.ideals.iter().map(|i| set(i)).collect();
                write!(line, " ideals {}", ideals.join(" ")).unwrap();
            }
            if !w.points.is_empty() {
                write!(line, " points {}", set(&w.points)).unwrap();
            }
            if !w.elements.is_empty() {
                write!(line, " elements {}", set(&w.elements)).unwrap();
            }
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

pub fn corpus(report: &CorpusReport) -> String {
    let mut out = String::new();
    for e in &report.entries {
        writeln!(
            out,
            "{}  S = <{}>  {} points",
            e.name,
            set(&e.generators),
            e.points
        )
        .unwrap();
        out.push_str(&checks(&e.checks));
    }
    for m in &report.morphisms {
        writeln!(out, "{}  S = <{}>", m.name, set(&m.generators)).unwrap();
        out.push_str(&checks(&m.checks));
    }
    let t = report.totals;
    writeln!(
        out,
        "{} pass, {} fail, {} skipped",
        t.pass, t.fail, t.skipped
    )
    .unwrap();
    out
}

pub fn goingdown(report: &GoingDownReport) -> String {
    let mut out = format!(
        "{} morphisms, {} instances checked\n",
        report.morphisms_checked, report.instances_checked
    );
    for s in &report.skipped {
        writeln!(out, "skipped: {s}").unwrap();
    }
    if report.counterexamples.is_empty() {
        out.push_str("no counterexample found\n");
    }
    for c in &report.counterexamples {
        writeln!(
            out,
            "counterexample: {} -> {}  S = <{}>  phi = {:?}  p_low {}  p_high {}  q_high {}",
            c.source,
            c.target,
            set(&c.mults),
            c.morphism,
            set(&c.p_low),
            set(&c.p_high),
            set(&c.q_high)
        )
        .unwrap();
    }
    out
}
