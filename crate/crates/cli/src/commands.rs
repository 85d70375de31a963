//! Subcommand arguments and their implementations.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, ValueEnum};
use rcm_core::circulant::{check_budget, order_rc_field, order_rc_zmod, scan_regular, sl_count};
use rcm_core::{
    BigUint, Circulant, Embedding, FiniteField, GroupOrder, Ring, StructureContext, Zmod,
};
use serde_json::{json, Value};

use crate::args::{parse_list, parse_prime_list, parse_prime_power};
use crate::error::CliError;
use crate::parallel::count_regular;
use crate::report::{field_json, matrix_json, order_json, CommandResult};
use crate::verify::{run_suite, Suite};

pub const DEFAULT_BUDGET: u64 = 1 << 24;

#[derive(Debug, Clone, Args)]
#[group(required = true, multiple = false)]
pub struct RingArgs {
    /// Finite field F_{p^t}, written p^t
    #[arg(long, value_name = "p^t", value_parser = parse_prime_power)]
    pub field: Option<(u64, u32)>,
    /// Residue ring Z/aZ
    #[arg(long = "mod", value_name = "a", value_parser = clap::value_parser!(u64).range(2..))]
    pub modulus: Option<u64>,
}

impl RingArgs {
    fn to_json(&self) -> Value {
        match (self.field, self.modulus) {
            (Some((p, t)), _) => json!({ "field": { "p": p, "t": t } }),
            (None, Some(a)) => json!({ "mod": a }),
            (None, None) => Value::Null,
        }
    }
}

#[derive(Debug, Clone, Args)]
pub struct OrderArgs {
    #[command(flatten)]
    pub ring: RingArgs,
    /// Matrix size
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    pub n: u64,
}

pub fn order(args: &OrderArgs) -> Result<CommandResult, CliError> {
    let started = Instant::now();
    let order = ring_order(&args.ring, args.n)?;
    let mut params = args.ring.to_json();
    params["n"] = json!(args.n);
    Ok(CommandResult::new("order", params, order_json(&order), started))
}

fn ring_order(ring: &RingArgs, n: u64) -> Result<GroupOrder, CliError> {
    Ok(match (ring.field, ring.modulus) {
        (Some((p, t)), _) => order_rc_field(p, t, n)?,
        (None, Some(a)) => order_rc_zmod(a, n)?,
        (None, None) => return Err(CliError::Usage(String::from("give --field or --mod"))),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, Args)]
pub struct TableArgs {
    /// Comma separated primes
    #[arg(long, value_name = "LIST")]
    pub p_list: String,
    #[arg(long)]
    pub t_max: u32,
    #[arg(long)]
    pub n_max: u64,
    #[arg(long, value_enum, default_value = "csv")]
    pub format: Format,
    /// Write the table here instead of standard output
    #[arg(long)]
    pub output: Option<PathBuf>,
}

/// Orders for every `(p, t, n)` in the ranges, sorted by `p`, then `t`, then `n`.
pub fn table_rows(primes: &[u64], t_max: u32, n_max: u64) -> Result<Vec<GroupOrder>, CliError> {
    let mut primes = primes.to_vec();
    primes.sort_unstable();
    primes.dedup();
    let mut rows = Vec::new();
    for &p in &primes {
        for t in 1..=t_max {
            for n in 1..=n_max {
                rows.push(order_rc_field(p, t, n)?);
            }
        }
    }
    Ok(rows)
}

fn write_table(rows: &[GroupOrder], format: Format, out: impl Write) -> io::Result<()> {
    match format {
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(["p", "t", "n", "order"])?;
            for row in rows {
                let rcm_core::OrderParams::Field { p, t, n } = row.params else {
                    unreachable!("table rows are field orders")
                };
                w.write_record([p.to_string(), t.to_string(), n.to_string(), row.value.to_string()])?;
            }
            w.flush()
        }
        Format::Json => {
            let mut out = out;
            let rows: Vec<Value> = rows.iter().map(order_json).collect();
            serde_json::to_writer(&mut out, &rows)?;
            writeln!(out)?;
            out.flush()
        }
    }
}

/// Writes the table to `stdout` when no output path is given; otherwise
/// writes the file and returns a summary.
pub fn table(args: &TableArgs, stdout: &mut dyn Write) -> Result<Option<CommandResult>, CliError> {
    let started = Instant::now();
    let primes = parse_prime_list(&args.p_list).map_err(CliError::Usage)?;
    let rows = table_rows(&primes, args.t_max, args.n_max)?;
    let Some(path) = &args.output else {
        write_table(&rows, args.format, stdout).map_err(CliError::stdout)?;
        return Ok(None);
    };
    let io_err = |source| CliError::Io {
        path: path.display().to_string(),
        source,
    };
    let file = File::create(path).map_err(io_err)?;
    write_table(&rows, args.format, BufWriter::new(file)).map_err(io_err)?;
    let format = match args.format {
        Format::Csv => "csv",
        Format::Json => "json",
    };
    let params = json!({
        "p_list": primes,
        "t_max": args.t_max,
        "n_max": args.n_max,
        "format": format,
        "output": path.display().to_string(),
    });
    let payload = json!({ "rows": rows.len(), "path": path.display().to_string() });
    Ok(Some(CommandResult::new("table", params, payload, started)))
}

#[derive(Debug, Clone, Args)]
pub struct EnumerateArgs {
    #[command(flatten)]
    pub ring: RingArgs,
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    pub n: u64,
    /// Refuse scans with more candidate vectors than this
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    pub budget: u64,
    /// Count only determinant one
    #[arg(long)]
    pub det_one: bool,
    /// Print every counted defining vector, one per line
    #[arg(long)]
    pub emit: bool,
}

pub fn enumerate(args: &EnumerateArgs, stdout: &mut dyn Write) -> Result<CommandResult, CliError> {
    let started = Instant::now();
    let n = usize::try_from(args.n).map_err(|_| CliError::Usage(String::from("n too large")))?;
    let (count, candidates) = match (args.ring.field, args.ring.modulus) {
        (Some((p, t)), _) => scan(&FiniteField::new(p, t)?, n, args, stdout)?,
        (None, Some(a)) => scan(&Zmod::new(a)?, n, args, stdout)?,
        (None, None) => return Err(CliError::Usage(String::from("give --field or --mod"))),
    };
    let formula = match (args.ring.field, args.det_one) {
        (Some((p, t)), true) => Some(sl_count(p, t, args.n)?),
        _ if args.det_one => None,
        _ => Some(ring_order(&args.ring, args.n)?.value),
    };
    let mut params = args.ring.to_json();
    params["n"] = json!(args.n);
    params["budget"] = json!(args.budget);
    params["det_one"] = json!(args.det_one);
    params["emit"] = json!(args.emit);
    let payload = json!({
        "count": count.to_string(),
        "candidates": candidates.to_string(),
        "formula": formula.as_ref().map(BigUint::to_string),
        "agrees": formula.map(|f| f == BigUint::from(count)),
    });
    Ok(CommandResult::new("enumerate", params, payload, started))
}

fn scan<R>(ring: &R, n: usize, args: &EnumerateArgs, stdout: &mut dyn Write) -> Result<(u64, u64), CliError>
where
    R: Ring<Elem = u64> + Sync,
{
    let one = ring.one();
    let total = check_budget(ring, n, args.budget)?;
    if !args.emit {
        let count = count_regular(ring, n, args.budget, |_, d| !args.det_one || d == one)?;
        return Ok((count, total));
    }
    let mut count = 0;
    let mut failure = None;
    let mut line = String::new();
    scan_regular(ring, n, 0..total, |v, d| {
        if failure.is_some() || (args.det_one && d != one) {
            return;
        }
        count += 1;
        line.clear();
        for (i, x) in v.iter().enumerate() {
            if i > 0 {
                line.push(',');
            }
            line.push_str(&x.to_string());
        }
        line.push('\n');
        if let Err(e) = stdout.write_all(line.as_bytes()) {
            failure = Some(e);
        }
    });
    match failure {
        Some(e) => Err(CliError::stdout(e)),
        None => Ok((count, total)),
    }
}

#[derive(Debug, Clone, Args)]
pub struct CanonicalArgs {
    /// Field F_{p^t} holding the circulant entries
    #[arg(long, value_name = "p^t", value_parser = parse_prime_power)]
    pub field: (u64, u32),
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    pub n: u64,
    /// Defining vector (last column) as comma separated F_{p^t} encodings
    #[arg(long, value_name = "LIST", allow_hyphen_values = true)]
    pub column: String,
    /// Include the whole canonical matrix
    #[arg(long)]
    pub matrix: bool,
}

pub fn canonical(args: &CanonicalArgs) -> Result<CommandResult, CliError> {
    let started = Instant::now();
    let (p, t) = args.field;
    let column = parse_list(&args.column).map_err(CliError::Usage)?;
    if column.len() as u64 != args.n {
        return Err(CliError::Usage(format!(
            "--column has {} entries, expected {}",
            column.len(),
            args.n
        )));
    }
    let ctx = StructureContext::new(p, t, args.n)?;
    let field = ctx.field().clone();
    let embedding = Embedding::new(&FiniteField::new(p, t)?, &field)?;
    let embedded = column
        .iter()
        .map(|&x| embedding.apply(x))
        .collect::<rcm_core::Result<Vec<u64>>>()?;
    let circulant = Circulant::new(field.clone(), embedded.clone())?;
    let form = ctx.canonical_form(&circulant)?;
    if !ctx.check_admissible(&form.blocks.concat())? {
        return Err(CliError::Failed(String::from("canonical blocks are not admissible")));
    }
    let sigma = ctx.sigma();
    let lengths: Vec<Value> = sigma
        .lengths()
        .iter()
        .map(|(len, count)| json!({ "length": len, "count": count }))
        .collect();
    let mut payload = json!({
        "field": field_json(&field),
        "s": field.degree(),
        "modulus": field.modulus_coeffs(),
        "m": ctx.m(),
        "block_size": ctx.block_size(),
        "mu": ctx.mu(),
        "embedding": { "alpha": embedding.alpha() },
        "column": embedded,
        "sigma": {
            "map": format!("x -> {}^-{} x mod {}", p, t, ctx.m()),
            "cycles": sigma.cycles(),
            "lengths": lengths,
        },
        "blocks": form.blocks,
        "leaders": ctx.leaders(&form.blocks),
        "admissible": true,
    });
    if args.matrix {
        payload["matrix"] = matrix_json(&form.matrix, &format!("F_{}^{}", p, field.degree()));
    }
    let params = json!({
        "field": { "p": p, "t": t },
        "n": args.n,
        "column": column,
        "matrix": args.matrix,
    });
    Ok(CommandResult::new("canonical", params, payload, started))
}

#[derive(Debug, Clone, Args)]
pub struct VerifyArgs {
    #[arg(long, value_enum, default_value = "all")]
    pub suite: Suite,
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    pub budget: u64,
}

/// Runs a suite, printing one line per check as it completes.
pub fn verify(args: &VerifyArgs, stdout: &mut dyn Write) -> Result<CommandResult, CliError> {
    let started = Instant::now();
    let mut io_failure = None;
    let checks = run_suite(args.suite, args.budget, &mut |check| {
        if io_failure.is_none() {
            io_failure = writeln!(stdout, "{check}").and_then(|_| stdout.flush()).err();
        }
    });
    if let Some(e) = io_failure {
        return Err(CliError::stdout(e));
    }
    let failed = checks.iter().filter(|c| c.failed()).count();
    let skipped = checks
        .iter()
        .filter(|c| matches!(c.status, crate::verify::Status::Skipped(_)))
        .count();
    let suite = args.suite.to_possible_value().map(|v| v.get_name().to_owned());
    let params = json!({ "suite": suite, "budget": args.budget });
    let payload = json!({
        "passed": failed == 0,
        "failed": failed,
        "skipped": skipped,
        "checks": checks.iter().map(|c| c.to_json()).collect::<Vec<_>>(),
    });
    let mut result = CommandResult::new("verify", params, payload, started);
    result.failed = failed > 0;
    Ok(result)
}
