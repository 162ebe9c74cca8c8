//! Output records, number formatting and tree export used by the `minabc`
//! binary.

use std::fmt::Write as _;

use minabc_core::Tree;
use minabc_family::{closed_form_abc, closed_form_abc_hp, order_of, root_degree, FamilyParams, ParamError};
use minabc_solver::SolveResult;
use serde::{Deserialize, Serialize};

pub mod exit {
    pub const OK: i32 = 0;
    pub const VIOLATIONS: i32 = 1;
    pub const USAGE: i32 = 2;
    pub const INFEASIBLE: i32 = 3;
}

/// Significant digits for binary64 values.
pub const SIG_F64: usize = 17;
/// Significant digits for fixed-point values.
pub const SIG_HP: usize = 32;

/// Renders `v` in positional notation with `sig` significant digits.
pub fn fmt_sig(v: f64, sig: usize) -> String {
    assert!(sig > 0);
    if v == 0.0 || !v.is_finite() {
        return format!("{v}");
    }
    let sci = format!("{:.*e}", sig - 1, v);
    let (mant, exp) = sci.split_once('e').expect("scientific form");
    let exp: i64 = exp.parse().expect("exponent");
    let (sign, mant) = mant.strip_prefix('-').map_or(("", mant), |m| ("-", m));
    let digits: String = mant.chars().filter(char::is_ascii_digit).collect();
    let body = if exp < 0 {
        format!("0.{}{}", "0".repeat((-exp - 1) as usize), digits)
    } else {
        let point = exp as usize + 1;
        if point >= digits.len() {
            format!("{}{}", digits, "0".repeat(point - digits.len()))
        } else {
            format!("{}.{}", &digits[..point], &digits[point..])
        }
    };
    format!("{sign}{body}")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Validity {
    Characterized,
    Advisory,
}

/// One solved order as printed by `solve --json`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub n: u64,
    pub z: u32,
    pub n_z: u64,
    pub n_zp1: u64,
    pub n3: u32,
    pub n4: u32,
    pub b_star: bool,
    pub b1: bool,
    pub b2: bool,
    pub b3: bool,
    pub b4: bool,
    pub k1: u32,
    pub k2: u32,
    pub root_degree: u64,
    pub abc: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub abc_hp: Option<String>,
    pub validity: Validity,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RecordError {
    Params(ParamError),
    OrderMismatch { n: u64, order: u64 },
}

impl OutputRecord {
    /// Builds the record from `params`, recomputing every derived value.
    pub fn from_params(n: u64, params: &FamilyParams, hp: bool, validity: Validity) -> Self {
        OutputRecord {
            n,
            z: params.z,
            n_z: params.n_z,
            n_zp1: params.n_zp1,
            n3: params.n3,
            n4: params.n4,
            b_star: params.b_star,
            b1: params.b1,
            b2: params.b2,
            b3: params.b3,
            b4: params.b4,
            k1: params.k1,
            k2: params.k2,
            root_degree: root_degree(params),
            abc: fmt_sig(closed_form_abc(params), SIG_F64),
            abc_hp: hp.then(|| closed_form_abc_hp(params).to_decimal(SIG_HP)),
            validity,
        }
    }

    pub fn from_result(r: &SolveResult, hp: bool) -> Self {
        let validity = if r.characterized { Validity::Characterized } else { Validity::Advisory };
        Self::from_params(r.n, &r.best, hp, validity)
    }

    pub fn params(&self) -> FamilyParams {
        FamilyParams {
            z: self.z,
            n_z: self.n_z,
            n_zp1: self.n_zp1,
            n3: self.n3,
            n4: self.n4,
            b_star: self.b_star,
            b1: self.b1,
            b2: self.b2,
            b3: self.b3,
            b4: self.b4,
            k1: self.k1,
            k2: self.k2,
        }
    }

    /// Re-validates the parameters and checks that they have order `n`.
    pub fn check(&self) -> Result<FamilyParams, RecordError> {
        let p = self.params();
        p.validate().map_err(RecordError::Params)?;
        let order = order_of(&p);
        if order != self.n {
            return Err(RecordError::OrderMismatch { n: self.n, order });
        }
        Ok(p)
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "n           {}", self.n);
        let _ = writeln!(s, "z           {}", self.z);
        let _ = writeln!(s, "n_z         {}  (D_{} branches)", self.n_z, self.z);
        let _ = writeln!(s, "n_z+1       {}  (D_{} branches)", self.n_zp1, self.z + 1);
        let _ = writeln!(s, "n3          {}  (B3 branches at the root)", self.n3);
        let _ = writeln!(s, "n4          {}  (B4 branches at the root)", self.n4);
        let mut extras = Vec::new();
        if self.b_star {
            extras.push("D_z** branch".to_string());
        }
        if self.b1 {
            extras.push(format!("D_(z,1)^2 branch with k1={}", self.k1));
        }
        if self.b2 {
            extras.push(format!("D_(z,2)^2 branch with k2={}", self.k2));
        }
        let _ = writeln!(s, "extras      {}", if extras.is_empty() { "none".into() } else { extras.join(", ") });
        let _ = writeln!(s, "root degree {}", self.root_degree);
        let _ = writeln!(s, "ABC         {}", self.abc);
        if let Some(h) = &self.abc_hp {
            let _ = writeln!(s, "ABC (hp)    {h}");
        }
        let _ = writeln!(
            s,
            "validity    {}",
            match self.validity {
                Validity::Characterized => "characterized",
                Validity::Advisory => "advisory (order below the proven range)",
            }
        );
        s
    }
}

/// Edge list: `n <order>` then one `u v` line per edge with `u < v`,
/// ascending.
pub fn edges_text(t: &Tree) -> String {
    let mut s = String::with_capacity(t.order() * 12);
    let _ = writeln!(s, "n {}", t.order());
    for (u, v) in t.edges() {
        let _ = writeln!(s, "{u} {v}");
    }
    s
}

/// Parses the format written by [`edges_text`].
pub fn parse_edges(text: &str) -> Result<Tree, String> {
    let mut lines = text.lines();
    let head = lines.next().ok_or("empty input")?;
    let n: usize = head
        .strip_prefix("n ")
        .and_then(|s| s.trim().parse().ok())
        .ok_or_else(|| format!("bad header `{head}`"))?;
    let mut edges = Vec::with_capacity(n.saturating_sub(1));
    for l in lines {
        let mut it = l.split_ascii_whitespace().map(str::parse::<usize>);
        match (it.next(), it.next(), it.next()) {
            (Some(Ok(u)), Some(Ok(v)), None) => edges.push((u, v)),
            _ => return Err(format!("bad edge line `{l}`")),
        }
    }
    Tree::from_edges(n, &edges).map_err(|e| e.to_string())
}

/// Directed rendering away from the root; vertices are labelled with their
/// degree and the root with `root`.
pub fn dot_text(t: &Tree) -> String {
    let n = t.order();
    let root = t.root();
    let mut s = String::with_capacity(n * 24);
    s.push_str("digraph minabc {\n");
    for v in 0..n {
        if v == root {
            let _ = writeln!(s, "  {v} [label=\"root\"];");
        } else {
            let _ = writeln!(s, "  {v} [label=\"{}\"];", t.degree(v));
        }
    }
    let mut seen = vec![false; n];
    let mut queue = std::collections::VecDeque::from([root]);
    seen[root] = true;
    while let Some(u) = queue.pop_front() {
        let mut kids: Vec<usize> = t.neighbors(u).iter().copied().filter(|&w| !seen[w]).collect();
        kids.sort_unstable();
        for w in kids {
            seen[w] = true;
            let _ = writeln!(s, "  {u} -> {w};");
            queue.push_back(w);
        }
    }
    s.push_str("}\n");
    s
}
