//! Report types emitted by the commands. Every type round-trips through
//! JSON unchanged.

use std::fmt::Write as _;

use abvar_aut::amitsur::{EmbeddingRoute, PrimeData, TraceEntry};
use abvar_aut::arith::IntPoly;
use abvar_aut::classify::{ClassificationRow, Verdict, WitnessCertificate};
use abvar_aut::fields::FieldDescriptor;
use abvar_aut::weil::{AlbertType, EndoShape, PlaceInvariant};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeilReport {
    pub weil_number: String,
    pub q: String,
    pub p: u64,
    pub a: u32,
    pub minimal_polynomial: IntPoly,
    pub center: FieldDescriptor,
    pub invariants: Vec<PlaceInvariant>,
    pub e: u64,
    pub d: u64,
    pub g: u64,
    pub albert_type: AlbertType,
    /// Only set when `g` is an odd prime and the center is totally imaginary.
    pub shape: Option<EndoShape>,
    pub note: Option<String>,
}

impl WeilReport {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "weil number   {}", self.weil_number);
        let _ = writeln!(out, "q             {} = {}^{}", self.q, self.p, self.a);
        let _ = writeln!(out, "polynomial    {}", self.minimal_polynomial);
        let _ = writeln!(out, "center        {} (e = {})", self.center, self.e);
        let _ = writeln!(out, "invariants");
        for inv in &self.invariants {
            let _ = writeln!(out, "  {inv}");
        }
        let _ = writeln!(out, "index d       {}", self.d);
        let _ = writeln!(out, "dimension g   {}", self.g);
        let _ = writeln!(out, "albert type   {}", self.albert_type);
        match &self.shape {
            Some(shape) => {
                let _ = writeln!(out, "shape         {shape}");
            }
            None => {
                let _ = writeln!(out, "shape         -");
            }
        }
        if let Some(note) = &self.note {
            let _ = writeln!(out, "note          {note}");
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AmitsurReport {
    pub m: u64,
    pub r: u64,
    pub s: u64,
    pub t: u64,
    pub n: u64,
    pub order: u64,
    pub dicyclic: Option<String>,
    pub c1: bool,
    pub c2: bool,
    pub prime_data: Vec<PrimeData>,
    pub embeddable: bool,
    pub route: Option<EmbeddingRoute>,
    pub verdict: String,
    pub trace: Vec<TraceEntry>,
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

impl AmitsurReport {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = write!(
            out,
            "G_{{{},{}}}: s = {}, t = {}, n = {}, order {}",
            self.m, self.r, self.s, self.t, self.n, self.order
        );
        if let Some(label) = &self.dicyclic {
            let _ = write!(out, " ({label})");
        }
        out.push('\n');
        let _ = writeln!(out, "C1 {}, C2 {}", yes_no(self.c1), yes_no(self.c2));
        if !self.prime_data.is_empty() {
            let _ = writeln!(out, "prime data");
            for d in &self.prime_data {
                let _ = writeln!(
                    out,
                    "  p = {}: alpha = {}, n_p = {}, delta_p = {}",
                    d.p, d.alpha, d.n_p, d.delta_p
                );
            }
        }
        let _ = writeln!(out, "verdict: {}", self.verdict);
        let _ = writeln!(out, "trace");
        for entry in &self.trace {
            let _ = writeln!(out, "  {entry}");
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassifyReport {
    /// `None` for the algebraically closed case, which fixes `g = 3`.
    pub g: Option<u64>,
    pub closed: bool,
    pub rows: Vec<ClassificationRow>,
}

impl ClassifyReport {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        match self.g {
            Some(g) => {
                let _ = writeln!(out, "g = {g}, finite fields");
            }
            None => {
                let _ = writeln!(out, "g = 3, algebraically closed fields of positive characteristic");
            }
        }
        for (i, row) in self.rows.iter().enumerate() {
            let _ = writeln!(out, "#{}  {:<6} {}", i + 1, row.group.to_string(), row.g_condition);
        }
        out
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("group_order,g_condition\n");
        for row in &self.rows {
            let _ = writeln!(out, "{},{}", row.order(), row.g_condition);
        }
        out
    }
}

pub fn certificate_text(cert: &WitnessCertificate) -> String {
    let mut out = String::new();
    let verdict = if cert.overall { "PASS" } else { "FAIL" };
    let _ = writeln!(out, "witness {}: {verdict}", cert.witness_id);
    for step in &cert.steps {
        let tag = match step.verdict {
            Verdict::Pass => "PASS ",
            Verdict::Fail => "FAIL ",
            Verdict::Axiom => "AXIOM",
        };
        let _ = writeln!(out, "  [{tag}] {}: {}", step.name, step.claim);
        let _ = writeln!(out, "          {}", step.evidence);
    }
    out
}
