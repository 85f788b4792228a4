//! Where `check` reads its sequences from.

use chromatic_core::stirling::bell_sequence;
use chromatic_core::{BigInt, Family};
use clap::Args;

use crate::{family, usage, Ctx, Failure, FamilyName, FamilyParams};

#[derive(Args, Debug, Clone, Default)]
pub struct SourceArgs {
    /// Comma-separated integers. For `qlc`, polynomials separated by `;`,
    /// coefficients lowest degree first.
    #[arg(long, conflicts_with_all = ["family", "bell"], allow_hyphen_values = true)]
    pub inline: Option<String>,

    /// Read rows of a triangle family.
    #[arg(long, value_enum, conflicts_with = "bell")]
    pub family: Option<FamilyName>,

    #[command(flatten)]
    pub params: FamilyParams,

    /// A single row of the family.
    #[arg(long, value_name = "N", conflicts_with = "nmax")]
    pub row: Option<usize>,

    /// Every row up to N.
    #[arg(long, value_name = "N")]
    pub nmax: Option<usize>,

    /// Use the shifted rows (n + |r|, k + |r|), so row n has n + 1 entries.
    #[arg(long)]
    pub shifted: bool,

    /// Read the polynomials B(l; K_{n,r}) for n = 0..=nmax.
    #[arg(long)]
    pub bell: bool,
}

/// Coefficient vectors, each labeled by its row index when it has one.
pub struct Items {
    pub items: Vec<(Option<usize>, Vec<BigInt>)>,
}

fn parse_list(s: &str) -> Result<Vec<BigInt>, Failure> {
    s.split(',')
        .map(|t| {
            let t = t.trim();
            t.parse::<BigInt>()
                .map_err(|_| usage(format!("`{t}` is not an integer")))
        })
        .collect()
}

/// `qlc` needs a sequence of polynomials; the other checks accept either a
/// single sequence or several.
pub fn resolve(ctx: &Ctx, args: &SourceArgs, polynomials: bool) -> Result<Items, Failure> {
    if let Some(inline) = &args.inline {
        let items = if polynomials {
            inline
                .split(';')
                .map(|p| parse_list(p).map(|seq| (None, seq)))
                .collect::<Result<_, _>>()?
        } else {
            vec![(None, parse_list(inline)?)]
        };
        return Ok(Items { items });
    }
    if args.bell {
        if args.row.is_some() {
            return Err(usage("--bell takes --nmax, not --row"));
        }
        let r = args.params.r.clone().unwrap_or_default();
        let n_max = args.nmax.ok_or_else(|| usage("--bell needs --nmax"))?;
        let seq = bell_sequence(&r, n_max);
        let items = seq
            .polys
            .into_iter()
            .enumerate()
            .map(|(n, p)| (Some(n), p.coeffs().to_vec()))
            .collect();
        return Ok(Items { items });
    }
    let Some(name) = args.family else {
        return Err(usage("give one of --inline, --family or --bell"));
    };
    let family = family(name, &args.params)?;
    // The polynomial sequences of the corollaries are always the shifted rows.
    let shifted = args.shifted || polynomials;
    let offset = if shifted { shift_of(&family) } else { 0 };
    let rows: Vec<usize> = match (args.row, args.nmax) {
        (Some(n), None) => vec![n],
        (None, Some(n)) => {
            // Unshifted rows below |r| are identically zero.
            let first = if shifted { 0 } else { shift_of(&family) };
            (first..=n).collect()
        }
        _ => return Err(usage("give --row N or --nmax N")),
    };
    let last = rows.iter().max().copied().unwrap_or(0) + offset;
    let table = ctx.table(&family, last)?;
    let items = rows
        .into_iter()
        .map(|n| (Some(n), table.shifted_row(n + offset, offset)))
        .collect();
    Ok(Items { items })
}

/// Shift that turns row `n + |r|` into a row with `n + 1` entries.
fn shift_of(family: &Family) -> usize {
    match family {
        Family::Custom(_) => 0,
        f => f.r_vec().iter().sum(),
    }
}
