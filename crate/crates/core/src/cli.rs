//! Input format and subcommands of the `sgrank` tool.
//!
//! Input files are line oriented; `#` starts a comment. The first directive
//! names the job:
//!
//! ```text
//! rms                      sab                    group             trans
//! group sym 3              n 7                    group cyc 6       n 4
//! matrix 2 3               images                                   gens
//! e 0 (1 2)                1,2,3                                    [2 3 1 1]
//! 0 (1 2 3) e              ...                                      [1 1 2 2]
//!                          kernels
//!                          1,4,7|2,5|3,6
//! ```
//!
//! Groups are `sym <r>`, `cyc <m>` or `table <k>` followed by `k` rows of
//! indices. Matrix entries are `0` or element literals (`e`, `g<k>`, cycle
//! notation, one-line `[..]`). Rows are indexed by `Λ`, columns by `I`, both
//! 1-based in all text.
//!
//! Exit codes: 0 success, 1 input or usage error, 2 budget exceeded,
//! 3 failed check or internal inconsistency.

use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;
use std::sync::Arc;

use clap::{Parser, Subcommand};

use crate::error::{Error, Result};
use crate::graham::{graham_normal_form, GhGraph};
use crate::group::{FiniteGroup, GroupElement};
use crate::oracle::{
    self, exact_rank, maximal_jclass_lower_bound, AbstractSemigroup, Magma, DEFAULT_PRODUCT_CAP, DEFAULT_SEARCH_BUDGET,
};
use crate::rank::{minimal_generating_set_with, rank_rms_with, RankOptions, RankReport};
use crate::rees::{ReesMatrixSemigroup, RmsElement, StructureMatrix};
use crate::transform::{
    format_subset, parse_subset, sab_generators, sab_minimal_generators, sab_rank, transversal_graph,
    FullTransformations, KernelPartition, SabInstance, Transformation,
};

/// How the group of a job was written.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupSpec {
    Sym(usize),
    Cyc(usize),
    Table(Vec<Vec<usize>>),
}

impl GroupSpec {
    pub fn build(&self) -> Result<FiniteGroup> {
        match self {
            GroupSpec::Sym(r) => FiniteGroup::symmetric(*r),
            GroupSpec::Cyc(m) => FiniteGroup::cyclic(*m),
            GroupSpec::Table(rows) => FiniteGroup::from_table(rows, format!("T{}", rows.len())),
        }
    }

    fn write(&self, out: &mut String) {
        match self {
            GroupSpec::Sym(r) => {
                let _ = writeln!(out, "group sym {r}");
            }
            GroupSpec::Cyc(m) => {
                let _ = writeln!(out, "group cyc {m}");
            }
            GroupSpec::Table(rows) => {
                let _ = writeln!(out, "group table {}", rows.len());
                for row in rows {
                    let cells: Vec<String> = row.iter().map(usize::to_string).collect();
                    let _ = writeln!(out, "{}", cells.join(" "));
                }
            }
        }
    }
}

#[derive(Clone, Debug)]
pub enum JobKind {
    Rms {
        group: GroupSpec,
        semigroup: ReesMatrixSemigroup,
    },
    Sab(SabInstance),
    Group {
        group: GroupSpec,
        built: Arc<FiniteGroup>,
    },
    Trans {
        n: usize,
        gens: Vec<Transformation>,
    },
}

/// Budgets taken from command-line flags.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct JobOptions {
    pub max_closure: u64,
    pub max_search: u64,
}

impl Default for JobOptions {
    fn default() -> Self {
        JobOptions {
            max_closure: DEFAULT_PRODUCT_CAP,
            max_search: DEFAULT_SEARCH_BUDGET,
        }
    }
}

impl JobOptions {
    fn rank_options(&self) -> RankOptions {
        RankOptions {
            tuple_cap: self.max_search,
            closure_cap: self.max_closure,
            search_budget: self.max_search,
            ..RankOptions::default()
        }
    }
}

#[derive(Clone, Debug)]
pub struct JobSpec {
    pub kind: JobKind,
    pub options: JobOptions,
}

impl JobSpec {
    /// Canonical text; parsing it gives back an equal job.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        match &self.kind {
            JobKind::Rms { group, semigroup } => {
                out.push_str("rms\n");
                group.write(&mut out);
                out.push_str(&semigroup.format_matrix());
            }
            JobKind::Sab(inst) => {
                let _ = writeln!(out, "sab\nn {}\nimages", inst.n());
                for a in inst.images() {
                    let _ = writeln!(out, "{}", format_subset(a));
                }
                out.push_str("kernels\n");
                for b in inst.kernels() {
                    let _ = writeln!(out, "{b}");
                }
            }
            JobKind::Group { group, .. } => {
                out.push_str("group\n");
                group.write(&mut out);
            }
            JobKind::Trans { n, gens } => {
                let _ = writeln!(out, "trans\nn {n}\ngens");
                for g in gens {
                    let _ = writeln!(out, "{g}");
                }
            }
        }
        out
    }
}

/// A source line split into tokens with 1-based columns. Parenthesised
/// runs such as `(1 2)(3 4)` and bracketed runs `[2 3 1]` are one token.
#[derive(Clone, Debug)]
struct Line {
    number: usize,
    tokens: Vec<(usize, String)>,
}

fn tokenize(number: usize, text: &str) -> Result<Line> {
    let chars: Vec<char> = text.chars().collect();
    let mut tokens = Vec::new();
    let mut k = 0;
    while k < chars.len() {
        let c = chars[k];
        if c == '#' {
            break;
        }
        if c.is_whitespace() {
            k += 1;
            continue;
        }
        let start = k;
        if c == '(' || c == '[' {
            loop {
                let close = if chars[k] == '(' { ')' } else { ']' };
                match chars[k..].iter().position(|&x| x == close) {
                    Some(off) => k += off + 1,
                    None => {
                        return Err(Error::Syntax {
                            line: number,
                            column: start + 1,
                            message: format!("missing `{close}`"),
                        })
                    }
                }
                if k < chars.len() && chars[k] == '(' && close == ')' {
                    continue;
                }
                break;
            }
        } else {
            while k < chars.len() && !chars[k].is_whitespace() && chars[k] != '#' {
                k += 1;
            }
        }
        tokens.push((start + 1, chars[start..k].iter().collect()));
    }
    Ok(Line { number, tokens })
}

struct Cursor {
    lines: Vec<Line>,
    pos: usize,
    last_line: usize,
}

impl Cursor {
    fn new(text: &str) -> Result<Self> {
        let mut lines = Vec::new();
        let mut last_line = 1;
        for (k, raw) in text.lines().enumerate() {
            last_line = k + 1;
            let line = tokenize(k + 1, raw)?;
            if !line.tokens.is_empty() {
                lines.push(line);
            }
        }
        Ok(Cursor {
            lines,
            pos: 0,
            last_line: last_line.max(1),
        })
    }

    fn peek(&self) -> Option<&Line> {
        self.lines.get(self.pos)
    }

    fn next(&mut self, expecting: &str) -> Result<Line> {
        match self.lines.get(self.pos) {
            Some(l) => {
                self.pos += 1;
                Ok(l.clone())
            }
            None => Err(Error::Syntax {
                line: self.last_line + usize::from(!self.lines.is_empty()),
                column: 1,
                message: format!("unexpected end of input, expected {expecting}"),
            }),
        }
    }
}

fn syntax(line: &Line, index: usize, message: impl Into<String>) -> Error {
    let column = line.tokens.get(index).map_or_else(
        || line.tokens.last().map_or(1, |(c, t)| c + t.chars().count()),
        |(c, _)| *c,
    );
    Error::Syntax {
        line: line.number,
        column,
        message: message.into(),
    }
}

fn semantic(line: &Line, err: Error) -> Error {
    let message = match err {
        Error::Usage(m) | Error::Size(m) | Error::Unsupported(m) => m,
        other => other.to_string(),
    };
    Error::Semantic {
        line: line.number,
        message,
    }
}

fn keyword(line: &Line, word: &str, arity: usize) -> Result<()> {
    if line.tokens[0].1 != word {
        return Err(syntax(
            line,
            0,
            format!("expected `{word}`, found `{}`", line.tokens[0].1),
        ));
    }
    if line.tokens.len() != arity + 1 {
        return Err(syntax(
            line,
            line.tokens.len().min(arity + 1),
            format!("`{word}` takes {arity} argument(s)"),
        ));
    }
    Ok(())
}

fn number(line: &Line, index: usize) -> Result<usize> {
    let text = &line.tokens[index].1;
    text.parse()
        .map_err(|_| syntax(line, index, format!("expected a non-negative integer, found `{text}`")))
}

fn parse_group(cur: &mut Cursor) -> Result<(GroupSpec, FiniteGroup)> {
    let line = cur.next("`group`")?;
    if line.tokens[0].1 != "group" || line.tokens.len() < 2 {
        return Err(syntax(&line, 0, "expected `group sym|cyc|table <k>`"));
    }
    keyword(&line, "group", 2)?;
    let k = number(&line, 2)?;
    let spec = match line.tokens[1].1.as_str() {
        "sym" => GroupSpec::Sym(k),
        "cyc" => GroupSpec::Cyc(k),
        "table" => {
            let mut rows = Vec::with_capacity(k);
            for _ in 0..k {
                let row = cur.next("a group table row")?;
                if row.tokens.len() != k {
                    return Err(syntax(
                        &row,
                        row.tokens.len().min(k),
                        format!("table row needs {k} entries"),
                    ));
                }
                rows.push((0..k).map(|c| number(&row, c)).collect::<Result<Vec<_>>>()?);
            }
            GroupSpec::Table(rows)
        }
        other => return Err(syntax(&line, 1, format!("unknown group kind `{other}`"))),
    };
    let group = spec.build().map_err(|e| semantic(&line, e))?;
    Ok((spec, group))
}

fn parse_matrix(cur: &mut Cursor, group: &FiniteGroup) -> Result<StructureMatrix> {
    let line = cur.next("`matrix`")?;
    keyword(&line, "matrix", 2)?;
    let (lambdas, is) = (number(&line, 1)?, number(&line, 2)?);
    if lambdas == 0 || is == 0 {
        return Err(semantic(
            &line,
            Error::Usage("matrix dimensions must be positive".into()),
        ));
    }
    let mut rows = Vec::with_capacity(lambdas);
    for _ in 0..lambdas {
        let row = cur.next("a matrix row")?;
        if row.tokens.len() != is {
            return Err(syntax(
                &row,
                row.tokens.len().min(is),
                format!("matrix row needs {is} entries"),
            ));
        }
        let entries = row
            .tokens
            .iter()
            .map(|(_, t)| {
                if t == "0" {
                    Ok(None)
                } else {
                    group.parse_literal(t).map(Some).map_err(|e| semantic(&row, e))
                }
            })
            .collect::<Result<Vec<Option<GroupElement>>>>()?;
        rows.push(entries);
    }
    StructureMatrix::from_rows(rows).map_err(|e| semantic(&line, e))
}

fn parse_degree(cur: &mut Cursor) -> Result<(Line, usize)> {
    let line = cur.next("`n <n>`")?;
    keyword(&line, "n", 1)?;
    let n = number(&line, 1)?;
    if n == 0 || n > 255 {
        return Err(semantic(
            &line,
            Error::Usage(format!("degree {n} out of range 1..=255")),
        ));
    }
    Ok((line, n))
}

fn block_lines(cur: &mut Cursor, stop: Option<&str>) -> Vec<Line> {
    let mut out = Vec::new();
    while let Some(l) = cur.peek() {
        if Some(l.tokens[0].1.as_str()) == stop {
            break;
        }
        out.push(l.clone());
        cur.pos += 1;
    }
    out
}

fn strip_wrapping(text: &str, open: char, close: char) -> &str {
    text.strip_prefix(open)
        .and_then(|t| t.strip_suffix(close))
        .unwrap_or(text)
}

/// Parses an input file into a job.
pub fn parse_input(text: &str) -> Result<JobSpec> {
    let mut cur = Cursor::new(text)?;
    let header = cur.next("a job header (`rms`, `sab`, `group` or `trans`)")?;
    if header.tokens.len() != 1 {
        return Err(syntax(&header, 1, "the job header stands alone on its line"));
    }
    let kind = match header.tokens[0].1.as_str() {
        "rms" => {
            let (spec, group) = parse_group(&mut cur)?;
            let matrix = parse_matrix(&mut cur, &group)?;
            let semigroup = ReesMatrixSemigroup::new(Arc::new(group), matrix).map_err(|e| semantic(&header, e))?;
            JobKind::Rms { group: spec, semigroup }
        }
        "group" => {
            let (spec, group) = parse_group(&mut cur)?;
            JobKind::Group {
                group: spec,
                built: Arc::new(group),
            }
        }
        "sab" => {
            let (n_line, n) = parse_degree(&mut cur)?;
            let images_line = cur.next("`images`")?;
            keyword(&images_line, "images", 0)?;
            let mut images = Vec::new();
            for l in block_lines(&mut cur, Some("kernels")) {
                let joined: String = l.tokens.iter().map(|(_, t)| t.as_str()).collect::<Vec<_>>().join("");
                images.push(parse_subset(strip_wrapping(&joined, '{', '}'), n).map_err(|e| semantic(&l, e))?);
            }
            let kernels_line = cur.next("`kernels`")?;
            keyword(&kernels_line, "kernels", 0)?;
            let mut kernels = Vec::new();
            for l in block_lines(&mut cur, None) {
                let joined: String = l.tokens.iter().map(|(_, t)| t.as_str()).collect::<Vec<_>>().join("");
                kernels
                    .push(KernelPartition::parse(strip_wrapping(&joined, '(', ')'), n).map_err(|e| semantic(&l, e))?);
            }
            JobKind::Sab(SabInstance::new(n, images, kernels).map_err(|e| semantic(&n_line, e))?)
        }
        "trans" => {
            let (n_line, n) = parse_degree(&mut cur)?;
            let gens_line = cur.next("`gens`")?;
            keyword(&gens_line, "gens", 0)?;
            let mut gens = Vec::new();
            for l in block_lines(&mut cur, None) {
                for (k, (_, t)) in l.tokens.iter().enumerate() {
                    let g = Transformation::parse(t).map_err(|_| syntax(&l, k, format!("bad transformation `{t}`")))?;
                    if g.degree() != n {
                        return Err(semantic(&l, Error::Usage(format!("`{t}` does not have degree {n}"))));
                    }
                    gens.push(g);
                }
            }
            if gens.is_empty() {
                return Err(semantic(&n_line, Error::Usage("no generators given".into())));
            }
            JobKind::Trans { n, gens }
        }
        other => return Err(syntax(&header, 0, format!("unknown job `{other}`"))),
    };
    if let Some(extra) = cur.peek() {
        return Err(syntax(extra, 0, "unexpected text after the job"));
    }
    Ok(JobSpec {
        kind,
        options: JobOptions::default(),
    })
}

#[derive(Parser, Debug)]
#[command(
    name = "sgrank",
    version,
    about = "Ranks and minimal generating sets of Rees matrix and transformation semigroups"
)]
pub struct Cli {
    /// Limit on products formed while closing generating sets.
    #[arg(long, global = true, default_value_t = DEFAULT_PRODUCT_CAP)]
    pub max_closure: u64,
    /// Limit on nodes and tuples visited by exhaustive searches.
    #[arg(long, global = true, default_value_t = DEFAULT_SEARCH_BUDGET)]
    pub max_search: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Rank report with the formula ingredients and a witness.
    Rank { file: PathBuf },
    /// A minimum-size generating set, one element per line.
    Gens { file: PathBuf },
    /// The Graham–Houghton graph (or transversal graph) in DOT.
    Graph { file: PathBuf },
    /// The Graham normal form with its block layout.
    Normalize { file: PathBuf },
    /// S(A,B) jobs.
    Sab {
        #[command(subcommand)]
        action: SabCommand,
    },
    /// Brute-force checks.
    Oracle {
        #[command(subcommand)]
        action: OracleCommand,
    },
    /// Runs the acceptance checks.
    Selftest,
}

#[derive(Subcommand, Debug)]
pub enum SabCommand {
    Rank { file: PathBuf },
    Gens { file: PathBuf },
    Graph { file: PathBuf },
}

#[derive(Subcommand, Debug)]
pub enum OracleCommand {
    /// Exact rank by pruned exhaustive search.
    Rank { file: PathBuf },
    /// Whether the listed elements generate the job's semigroup.
    Check { file: PathBuf, witness: PathBuf },
}

/// Report text and exit code of one command.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub text: String,
    pub code: i32,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Outcome { text, code: 0 }
    }
}

pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::Budget { .. } => 2,
        Error::Internal(_) => 3,
        _ => 1,
    }
}

fn read_job(file: &PathBuf, options: JobOptions) -> Result<JobSpec> {
    let text =
        std::fs::read_to_string(file).map_err(|e| Error::Usage(format!("cannot read {}: {e}", file.display())))?;
    let mut job = parse_input(&text)?;
    job.options = options;
    Ok(job)
}

fn rank_text(s: &ReesMatrixSemigroup, report: &RankReport) -> String {
    let g = &report.ingredients;
    let mut out = String::new();
    let _ = writeln!(out, "group: {}", s.group());
    let _ = writeln!(out, "|I| = {}, |L| = {}", s.i_count(), s.lambda_count());
    let _ = writeln!(out, "case: {}", report.case);
    let _ = writeln!(
        out,
        "connected I = {}, connected L = {}, blocks = {}, sigma_min = {}, isolated I = {}, isolated L = {}",
        g.i_connected, g.lambda_connected, g.n, g.sigma_min, g.isolated_i, g.isolated_lambda
    );
    if let Some(sigma) = &report.sigma {
        let conj: Vec<String> = sigma.conjugators.iter().map(|&x| s.group().literal(x)).collect();
        let comp: Vec<String> = sigma.complement.iter().map(|x| s.group().literal(x)).collect();
        let _ = writeln!(out, "conjugators: {}", conj.join(" "));
        let _ = writeln!(
            out,
            "complement: {}",
            if comp.is_empty() { "-".into() } else { comp.join(" ") }
        );
    }
    let _ = writeln!(out, "witness ({} elements):", report.witness.len());
    for x in &report.witness {
        let _ = writeln!(out, "  {}", s.format_element(x));
    }
    let _ = writeln!(out, "{}", report.machine_line());
    out
}

fn lines<T: std::fmt::Display>(items: &[T]) -> String {
    items.iter().map(|x| format!("{x}\n")).collect()
}

/// Runs one subcommand on a parsed job.
pub fn run(job: &JobSpec, command: &str) -> Result<Outcome> {
    let opts = job.options;
    let rank_opts = opts.rank_options();
    match (&job.kind, command) {
        (JobKind::Rms { semigroup: s, .. }, "rank") => {
            let mut report = rank_rms_with(s, &rank_opts)?;
            report.witness = minimal_generating_set_with(s, &rank_opts)?;
            Ok(Outcome::ok(rank_text(s, &report)))
        }
        (JobKind::Rms { semigroup: s, .. }, "gens") => {
            let gens = minimal_generating_set_with(s, &rank_opts)?;
            Ok(Outcome::ok(
                gens.iter().map(|x| format!("{}\n", s.format_element(x))).collect(),
            ))
        }
        (JobKind::Rms { semigroup: s, .. }, "graph") => Ok(Outcome::ok(GhGraph::build(s).to_dot(s.group()))),
        (JobKind::Rms { semigroup: s, .. }, "normalize") => Ok(Outcome::ok(graham_normal_form(s)?.describe())),
        (JobKind::Sab(inst), "rank" | "sab-rank") => Ok(Outcome::ok(format!("{}\n", sab_rank(inst)?.machine_line()))),
        (JobKind::Sab(inst), "gens" | "sab-gens") => {
            Ok(Outcome::ok(lines(&sab_minimal_generators(inst, opts.max_closure)?)))
        }
        (JobKind::Sab(inst), "graph" | "sab-graph") => Ok(Outcome::ok(transversal_graph(inst).to_dot())),
        (JobKind::Group { built, .. }, "rank" | "gens") => {
            let rr = built.rank();
            let gens: Vec<String> = rr.witness.iter().map(|x| built.literal(x)).collect();
            let text = if command == "rank" {
                format!(
                    "group: {built}\ngenerators: {}\ngroup_rank={}\n",
                    gens.join(" "),
                    rr.value
                )
            } else {
                lines(&gens)
            };
            Ok(Outcome::ok(text))
        }
        (_, "oracle-rank") => oracle_rank(job),
        (kind, cmd) => Err(Error::Usage(format!(
            "`{}` does not apply to {} jobs",
            cmd.replace('-', " "),
            match kind {
                JobKind::Rms { .. } => "rms",
                JobKind::Sab(_) => "sab",
                JobKind::Group { .. } => "group",
                JobKind::Trans { .. } => "trans",
            }
        ))),
    }
}

fn exact_report<M: Magma>(
    m: &M,
    s: &AbstractSemigroup<M::Elem>,
    budget: u64,
    show: impl Fn(&M::Elem) -> String,
) -> Result<Outcome> {
    let exact = exact_rank(s, None, budget)?;
    let bound = maximal_jclass_lower_bound(s)?;
    let _ = m;
    let mut out = String::new();
    for &id in &exact.witness {
        let _ = writeln!(out, "{}", show(s.element(id)));
    }
    let _ = writeln!(
        out,
        "oracle_rank={} size={} coverage_bound={} jclass_bound={}",
        exact.value,
        s.len(),
        exact.lower_bound,
        bound
    );
    Ok(Outcome::ok(out))
}

fn oracle_rank(job: &JobSpec) -> Result<Outcome> {
    let opts = job.options;
    match &job.kind {
        JobKind::Rms { semigroup: s, .. } => {
            let elements: Vec<RmsElement> = s.enumerate_elements(oracle::DEFAULT_TABLE_CAP)?.collect();
            let a = AbstractSemigroup::from_elements(s, elements)?;
            exact_report(s, &a, opts.max_search, |x| s.format_element(x))
        }
        JobKind::Group { built, .. } => {
            let a = AbstractSemigroup::from_elements(built.as_ref(), built.elements().collect())?;
            exact_report(built.as_ref(), &a, opts.max_search, |x| built.literal(*x))
        }
        JobKind::Sab(inst) => {
            let a = AbstractSemigroup::generated_by(&FullTransformations, &sab_generators(inst), opts.max_closure)?;
            exact_report(&FullTransformations, &a, opts.max_search, |x| x.to_string())
        }
        JobKind::Trans { gens, .. } => {
            let a = AbstractSemigroup::generated_by(&FullTransformations, gens, opts.max_closure)?;
            exact_report(&FullTransformations, &a, opts.max_search, |x| x.to_string())
        }
    }
}

fn check_report<M: Magma>(m: &M, target: &[M::Elem], witness: &[M::Elem], cap: u64) -> Result<Outcome> {
    let ok = oracle::verify_generates(m, target, witness, cap)?;
    Ok(Outcome {
        text: format!("generates={ok} witness_size={} size={}\n", witness.len(), target.len()),
        code: if ok { 0 } else { 3 },
    })
}

/// Checks a witness file (one element per line, `#` comments) against a job.
pub fn oracle_check(job: &JobSpec, witness_text: &str) -> Result<Outcome> {
    let cap = job.options.max_closure;
    let entries: Vec<(usize, &str)> = witness_text
        .lines()
        .enumerate()
        .map(|(k, l)| (k + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty())
        .collect();
    let at = |line: usize| {
        move |e: Error| Error::Semantic {
            line,
            message: e.to_string(),
        }
    };
    match &job.kind {
        JobKind::Rms { semigroup: s, .. } => {
            let w = entries
                .iter()
                .map(|&(k, l)| s.parse_element(l).map_err(at(k)))
                .collect::<Result<Vec<_>>>()?;
            let target: Vec<RmsElement> = s.enumerate_elements(crate::rees::DEFAULT_ELEMENT_CAP)?.collect();
            check_report(s, &target, &w, cap)
        }
        JobKind::Group { built, .. } => {
            let w = entries
                .iter()
                .map(|&(k, l)| built.parse_literal(l).map_err(at(k)))
                .collect::<Result<Vec<_>>>()?;
            let target: Vec<GroupElement> = built.elements().collect();
            check_report(built.as_ref(), &target, &w, cap)
        }
        JobKind::Sab(inst) => {
            let w = parse_transformations(&entries, inst.n())?;
            let target = oracle::closure(&FullTransformations, &sab_generators(inst), cap)?;
            check_report(&FullTransformations, &target, &w, cap)
        }
        JobKind::Trans { n, gens } => {
            let w = parse_transformations(&entries, *n)?;
            let target = oracle::closure(&FullTransformations, gens, cap)?;
            check_report(&FullTransformations, &target, &w, cap)
        }
    }
}

fn parse_transformations(entries: &[(usize, &str)], n: usize) -> Result<Vec<Transformation>> {
    entries
        .iter()
        .map(|&(k, l)| {
            let t = Transformation::parse(l).map_err(|e| Error::Semantic {
                line: k,
                message: e.to_string(),
            })?;
            if t.degree() != n {
                return Err(Error::Semantic {
                    line: k,
                    message: format!("`{l}` does not have degree {n}"),
                });
            }
            Ok(t)
        })
        .collect()
}

fn dispatch(cli: &Cli) -> Result<Outcome> {
    let options = JobOptions {
        max_closure: cli.max_closure,
        max_search: cli.max_search,
    };
    let (file, command) = match &cli.command {
        Command::Rank { file } => (file, "rank"),
        Command::Gens { file } => (file, "gens"),
        Command::Graph { file } => (file, "graph"),
        Command::Normalize { file } => (file, "normalize"),
        Command::Sab { action } => match action {
            SabCommand::Rank { file } => (file, "sab-rank"),
            SabCommand::Gens { file } => (file, "sab-gens"),
            SabCommand::Graph { file } => (file, "sab-graph"),
        },
        Command::Oracle { action } => match action {
            OracleCommand::Rank { file } => (file, "oracle-rank"),
            OracleCommand::Check { file, witness } => {
                let job = read_job(file, options)?;
                let text = std::fs::read_to_string(witness)
                    .map_err(|e| Error::Usage(format!("cannot read {}: {e}", witness.display())))?;
                return oracle_check(&job, &text);
            }
        },
        Command::Selftest => {
            let results = crate::selftest::run_all();
            let text: String = results.iter().map(|r| format!("{r}\n")).collect();
            let failed = results.iter().filter(|r| !r.passed).count();
            return Ok(Outcome {
                text: format!(
                    "{text}{} of {} criteria passed\n",
                    results.len() - failed,
                    results.len()
                ),
                code: if failed == 0 { 0 } else { 3 },
            });
        }
    };
    let job = read_job(file, options)?;
    if command.starts_with("sab-") && !matches!(job.kind, JobKind::Sab(_)) {
        return Err(Error::Usage("`sab` subcommands need an `sab` input file".into()));
    }
    run(&job, command)
}

/// Entry point shared by the binary and the tests.
pub fn main_with_args<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let target: &mut dyn Write = if code == 0 { stdout } else { stderr };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    match dispatch(&cli) {
        Ok(outcome) => {
            let _ = stdout.write_all(outcome.text.as_bytes());
            outcome.code
        }
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            exit_code(&e)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const RMS: &str = "# Brandt over S_3\nrms\ngroup sym 3\nmatrix 2 2\ne 0\n0 ()\n";

    #[test]
    fn tokenizer_keeps_cycle_runs_together() {
        let line = tokenize(1, "(1 2)(3 4) 0 [2 1 3 4]  e # note").unwrap();
        let toks: Vec<&str> = line.tokens.iter().map(|(_, t)| t.as_str()).collect();
        assert_eq!(toks, ["(1 2)(3 4)", "0", "[2 1 3 4]", "e"]);
        assert_eq!(line.tokens[1].0, 12);
        assert!(matches!(
            tokenize(3, "(1 2"),
            Err(Error::Syntax { line: 3, column: 1, .. })
        ));
    }

    #[test]
    fn parses_rms_and_round_trips() {
        let job = parse_input(RMS).unwrap();
        let JobKind::Rms { semigroup, .. } = &job.kind else {
            panic!()
        };
        assert_eq!(semigroup.i_count(), 2);
        let text = job.to_text();
        assert_eq!(text, "rms\ngroup sym 3\nmatrix 2 2\n() 0\n0 ()\n");
        assert_eq!(parse_input(&text).unwrap().to_text(), text);
    }

    #[test]
    fn product_of_disjoint_cycles_as_entry() {
        let job = parse_input("rms\ngroup sym 4\nmatrix 1 1\n(1 2)(3 4)\n").unwrap();
        let JobKind::Rms { semigroup, .. } = &job.kind else {
            panic!()
        };
        let g = semigroup.group();
        assert_eq!(g.literal(semigroup.matrix().entry(0, 0).unwrap()), "(1 2)(3 4)");
    }

    #[test]
    fn error_locations() {
        assert!(matches!(parse_input(""), Err(Error::Syntax { line: 1, .. })));
        assert!(matches!(
            parse_input("# only a comment\n"),
            Err(Error::Syntax { line: 1, .. })
        ));
        assert!(matches!(
            parse_input("rms\ngroup sym x\n"),
            Err(Error::Syntax {
                line: 2,
                column: 11,
                ..
            })
        ));
        assert!(matches!(
            parse_input("rms\ngroup sym 3\nmatrix 1 2\n(1 4) 0\n"),
            Err(Error::Semantic { line: 4, .. })
        ));
        assert!(matches!(
            parse_input("rms\ngroup sym 3\nmatrix 1 2\ne\n"),
            Err(Error::Syntax { line: 4, .. })
        ));
        assert!(matches!(
            parse_input("sab\nn 4\nimages\n1,2,3\nkernels\n1|2|5,3\n"),
            Err(Error::Semantic { line: 6, .. })
        ));
        assert!(matches!(
            parse_input("bogus\n"),
            Err(Error::Syntax { line: 1, column: 1, .. })
        ));
        assert!(matches!(
            parse_input("group\ngroup sym 9\n"),
            Err(Error::Semantic { line: 2, .. })
        ));
    }

    #[test]
    fn sab_and_trans_jobs_round_trip() {
        let text = "sab\nn 4\nimages\n{1,2,3}\nkernels\n(1|2|3,4)\n";
        let job = parse_input(text).unwrap();
        assert_eq!(job.to_text(), "sab\nn 4\nimages\n1,2,3\nkernels\n1|2|3,4\n");
        let trans = "trans\nn 3\ngens\n[2 3 1] [1 1 2]\n";
        let job = parse_input(trans).unwrap();
        assert_eq!(job.to_text(), "trans\nn 3\ngens\n[2 3 1]\n[1 1 2]\n");
        let table = "group\ngroup table 2\n0 1\n1 0\n";
        assert_eq!(parse_input(table).unwrap().to_text(), table);
    }

    #[test]
    fn run_reports() {
        let job = parse_input(RMS).unwrap();
        let out = run(&job, "rank").unwrap();
        assert!(
            out.text.ends_with("rank=3 n=2 sigma_min=2 isolated_I=0 isolated_L=0\n"),
            "{}",
            out.text
        );
        let gens = run(&job, "gens").unwrap().text;
        assert_eq!(gens.lines().count(), 3);
        assert_eq!(oracle_check(&job, &gens).unwrap().code, 0);
        assert_eq!(oracle_check(&job, "1 e 1\n").unwrap().code, 3);
        assert!(run(&job, "sab-rank").is_err());
    }

    #[test]
    fn exit_codes() {
        assert_eq!(exit_code(&Error::budget("x", 1)), 2);
        assert_eq!(exit_code(&Error::Internal("x".into())), 3);
        assert_eq!(exit_code(&Error::Usage("x".into())), 1);
        let mut out = Vec::new();
        let mut err = Vec::new();
        assert_eq!(
            main_with_args(["sgrank", "rank", "/nonexistent"], &mut out, &mut err),
            1
        );
        assert_eq!(main_with_args(["sgrank", "frobnicate"], &mut out, &mut err), 1);
    }
}
