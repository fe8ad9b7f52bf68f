//! Exhaustive sweep of the ceiling-elimination equivalences over a dense
//! rational grid: for integer g and rational x, `ceil(x) <= g` iff `x <= g`
//! and `g <= ceil(x) - 1` iff `g < x`.

use nkgenus::formulas::{ceiling_bound_equiv, BoundDirection, FormulaError};

#[test]
fn equivalences_hold_on_dense_grid() {
    for x_num in -1000..=1000i64 {
        for x_den in 1..=60i64 {
            for g in -100..=100i64 {
                assert!(
                    ceiling_bound_equiv(x_num, x_den, g, BoundDirection::Le).unwrap(),
                    "Le direction fails at x={x_num}/{x_den}, g={g}"
                );
                assert!(
                    ceiling_bound_equiv(x_num, x_den, g, BoundDirection::Gt).unwrap(),
                    "Gt direction fails at x={x_num}/{x_den}, g={g}"
                );
            }
        }
    }
}

#[test]
fn bad_denominators_rejected() {
    for den in [0, -1, -60] {
        assert_eq!(
            ceiling_bound_equiv(3, den, 1, BoundDirection::Le),
            Err(FormulaError::NonPositiveDenominator)
        );
    }
}
