use serde_json::{json, Value};

use super::idempotent::central_idempotents;
use super::layout::{spinspace_layout, LayoutKind};
use crate::algebra::json::to_json;
use crate::error::{Error, Result};

pub const MAX_REPORT_N: usize = 9;

/// Idempotents of `C_n`, their law checks, conjugation behaviour and,
/// where it is tabulated, the spinspace layout of the quotient pair.
pub fn decompose_report(n: usize) -> Result<Value> {
    if n % 2 == 1 && n > MAX_REPORT_N {
        return Err(Error::Parse(format!(
            "n must be at most {MAX_REPORT_N}, got {n}"
        )));
    }
    let pair = central_idempotents(n)?;
    let swap = pair.conjugation_swaps();
    let kind = if swap {
        LayoutKind::Union
    } else {
        LayoutKind::DirectSum
    };
    let rank = 1usize << ((n - 1) / 2);
    let layout = spinspace_layout(rank, kind).ok().map(|l| {
        json!({ "kind": l.kind, "rank": l.rank, "cells": l.cells, "conjugated": l.conjugated().cells })
    });
    let laws = pair.verify();
    Ok(json!({
        "n": n,
        "epsilon": pair.epsilon,
        "lambda_plus": to_json(&pair.lambda_plus),
        "lambda_minus": to_json(&pair.lambda_minus),
        "laws": laws,
        "all_laws": laws.all(),
        "swap": swap,
        "fix": pair.conjugation_fixes(),
        "layout": layout,
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn three_swaps_five_fixes() {
        let r = decompose_report(3).unwrap();
        assert_eq!(r["epsilon"], "i");
        assert_eq!(r["swap"], true);
        assert_eq!(r["layout"]["kind"], "union");
        let r = decompose_report(5).unwrap();
        assert_eq!(r["epsilon"], "1");
        assert_eq!(r["swap"], false);
        assert_eq!(r["fix"], true);
        assert_eq!(r["layout"]["rank"], 4);
        assert!(decompose_report(9).unwrap()["layout"].is_null());
    }

    #[test]
    fn even_and_large_n_rejected() {
        assert_eq!(
            decompose_report(4).unwrap_err().to_string(),
            "n must be odd, got 4"
        );
        assert!(decompose_report(11).is_err());
    }
}
