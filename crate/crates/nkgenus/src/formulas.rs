//! Closed-form evaluators for extendability/factor-criticality thresholds
//! on surfaces, and the genus formulas for (n,k)-graphs and complete graphs.
//!
//! Everything here is exact integer arithmetic. Floor/ceiling expressions
//! involving square roots of integers are evaluated with integer square
//! roots; see the comment on [`floor_linear_sqrt`] for why that is sound.

use serde::Serialize;
use std::fmt;
use std::ops::RangeInclusive;
use thiserror::Error;

/// A compact connected 2-manifold, identified by orientability and genus.
///
/// The sphere is `(orientable, 0)`; non-orientable surfaces have genus >= 1
/// (there is no non-orientable surface of genus 0).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Surface {
    orientable: bool,
    genus: u64,
}

impl Surface {
    pub const SPHERE: Surface = Surface { orientable: true, genus: 0 };
    pub const TORUS: Surface = Surface { orientable: true, genus: 1 };
    pub const PROJECTIVE_PLANE: Surface = Surface { orientable: false, genus: 1 };
    pub const KLEIN_BOTTLE: Surface = Surface { orientable: false, genus: 2 };

    /// The orientable surface of the given genus (`S_g`).
    pub fn orientable(genus: u64) -> Surface {
        Surface { orientable: true, genus }
    }

    /// The non-orientable surface of the given genus (`N_g`); genus 0 is rejected.
    pub fn non_orientable(genus: u64) -> Result<Surface, FormulaError> {
        if genus == 0 {
            return Err(FormulaError::NonOrientableGenusZero);
        }
        Ok(Surface { orientable: false, genus })
    }

    pub fn is_orientable(&self) -> bool {
        self.orientable
    }

    pub fn genus(&self) -> u64 {
        self.genus
    }

    /// Euler characteristic: 2 - 2g for orientable surfaces, 2 - g for
    /// non-orientable ones.
    pub fn euler_characteristic(&self) -> i64 {
        if self.orientable {
            2 - 2 * self.genus as i64
        } else {
            2 - self.genus as i64
        }
    }

    pub fn is_sphere(&self) -> bool {
        self.orientable && self.genus == 0
    }

    /// Parse a surface name: `S<g>` (orientable) or `N<g>` (non-orientable,
    /// g >= 1). Case-insensitive prefix; `N0` is rejected.
    pub fn parse(name: &str) -> Result<Surface, FormulaError> {
        let name = name.trim();
        let bad = || FormulaError::SurfaceParse(name.to_string());
        let mut chars = name.chars();
        let head = chars.next().ok_or_else(bad)?;
        let genus: u64 = chars.as_str().parse().map_err(|_| bad())?;
        match head {
            'S' | 's' => Ok(Surface::orientable(genus)),
            'N' | 'n' => Surface::non_orientable(genus),
            _ => Err(bad()),
        }
    }
}

impl fmt::Display for Surface {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", if self.orientable { 'S' } else { 'N' }, self.genus)
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FormulaError {
    #[error("there is no non-orientable surface of genus 0")]
    NonOrientableGenusZero,
    #[error("cannot parse surface name {0:?} (expected S<g> or N<g>, g >= 1 for N)")]
    SurfaceParse(String),
    #[error("complete-graph genus requires n >= 3, got n = {0}")]
    CompleteGraphTooSmall(u64),
    #[error("{op} requires n >= {min}, got n = {n}")]
    NTooSmall { op: &'static str, min: u64, n: u64 },
    #[error("table ranges must be nonempty and start within bounds: {0}")]
    BadTableRange(String),
    #[error("denominator must be positive")]
    NonPositiveDenominator,
}

/// Euler characteristic of a surface (free-function form of
/// [`Surface::euler_characteristic`]).
pub fn euler_characteristic(s: Surface) -> i64 {
    s.euler_characteristic()
}

/// Floor of `(a + sqrt(m)) / 4` for integer `a` and nonnegative integer `m`,
/// computed exactly.
///
/// Substituting the integer square root for the real one is sound here:
/// floor((a + sqrt(m))/4) = floor((a + floor(sqrt(m)))/4), because an
/// integer strictly between floor(sqrt(m)) and sqrt(m) plus the same `a`
/// would have to be a multiple of 1 inside an interval of length < 1 whose
/// endpoints differ by the fractional part of sqrt(m); concretely, if the
/// two floors differed there would be an integer q with
/// a + floor(sqrt(m)) < 4q <= a + sqrt(m), forcing the integer 4q - a into
/// (floor(sqrt(m)), sqrt(m)], which is impossible unless sqrt(m) is itself
/// an integer — and then the interval is empty.
fn floor_linear_sqrt(a: i64, m: u64) -> i64 {
    (a + m.isqrt() as i64).div_euclid(4)
}

/// Minimum k such that no graph embeddable in `s` is k-extendable:
/// 3 for the sphere, otherwise 2 + floor(sqrt(4 - 2*chi)).
pub fn mu_extendability(s: Surface) -> u64 {
    if s.is_sphere() {
        3
    } else {
        let chi = s.euler_characteristic();
        // chi <= 2 always, and chi <= 1 off the sphere, so 4 - 2*chi >= 2.
        2 + ((4 - 2 * chi) as u64).isqrt()
    }
}

/// Minimum n such that no graph embeddable in `s` is n-factor-critical:
/// 5 for the sphere, otherwise floor((5 + sqrt(49 - 24*chi)) / 2).
pub fn rho(s: Surface) -> u64 {
    if s.is_sphere() {
        5
    } else {
        let m = (49 - 24 * s.euler_characteristic()) as u64;
        // Same integer-square-root substitution argument as floor_linear_sqrt,
        // with divisor 2.
        (5 + m.isqrt()) / 2
    }
}

/// Minimum k such that no graph embeddable in `s` is an (n,k)-graph
/// (n >= 1): max(0, 3 - ceil(n/2)) on the sphere, otherwise
/// max(0, floor((7 - 2n + sqrt(49 - 24*chi)) / 4)).
pub fn mu_nk(n: u64, s: Surface) -> Result<u64, FormulaError> {
    if n == 0 {
        return Err(FormulaError::NTooSmall { op: "mu_nk", min: 1, n });
    }
    if s.is_sphere() {
        Ok(3u64.saturating_sub(n.div_ceil(2)))
    } else {
        let m = (49 - 24 * s.euler_characteristic()) as u64;
        let val = floor_linear_sqrt(7 - 2 * n as i64, m);
        Ok(val.max(0) as u64)
    }
}

/// Minimum genus of a surface of the given orientability carrying some
/// (n,k)-graph (n >= 1): for n + 2k <= 4 the answer is 0 (orientable) or 1
/// (non-orientable); otherwise ceil((n+2k-1)(n+2k-2) / 12) orientable and
/// ceil((n+2k-1)(n+2k-2) / 6) non-orientable.
pub fn genus_nk(n: u64, k: u64, orientable: bool) -> Result<u64, FormulaError> {
    if n == 0 {
        return Err(FormulaError::NTooSmall { op: "genus_nk", min: 1, n });
    }
    let t = n + 2 * k;
    if t <= 4 {
        return Ok(if orientable { 0 } else { 1 });
    }
    let prod = (t - 1) * (t - 2);
    let den = if orientable { 12 } else { 6 };
    Ok(prod.div_ceil(den))
}

/// Minimum genus of a surface of the given orientability in which the
/// complete graph on n vertices embeds (n >= 3): ceil((n-3)(n-4)/12)
/// orientable; non-orientable ceil((n-3)(n-4)/6) except that K_7 needs
/// genus 3, not 2. For n in {3, 4} the graph is planar, so the orientable
/// genus is 0 and the non-orientable genus is 1 (every planar graph embeds
/// in the projective plane); the quadratic formula is only used from n = 5 up.
pub fn complete_graph_genus(n: u64, orientable: bool) -> Result<u64, FormulaError> {
    if n < 3 {
        return Err(FormulaError::CompleteGraphTooSmall(n));
    }
    if orientable {
        Ok(((n - 3) * (n - 4)).div_ceil(12))
    } else if n <= 4 {
        Ok(1)
    } else if n == 7 {
        Ok(3)
    } else {
        Ok(((n - 3) * (n - 4)).div_ceil(6))
    }
}

/// Minimum k with `genus_nk(n, k, orientable) > g`, found by scanning k
/// upward. This is the brute-force inversion of the genus table, used as an
/// oracle against the closed form [`mu_nk`]. Requires g >= 1 when
/// non-orientable (there is no genus-0 non-orientable surface).
pub fn invert_genus_table(n: u64, g: u64, orientable: bool) -> Result<u64, FormulaError> {
    if n == 0 {
        return Err(FormulaError::NTooSmall { op: "invert_genus_table", min: 1, n });
    }
    if !orientable && g == 0 {
        return Err(FormulaError::NonOrientableGenusZero);
    }
    let mut k = 0;
    // genus_nk grows quadratically in k, so the scan terminates.
    while genus_nk(n, k, orientable)? <= g {
        k += 1;
    }
    Ok(k)
}

/// Check the two-step recurrence mu(n, s) = max(0, mu(n-2, s) - 1) for n >= 3.
pub fn check_mu_recurrence(n: u64, s: Surface) -> Result<bool, FormulaError> {
    if n < 3 {
        return Err(FormulaError::NTooSmall { op: "check_mu_recurrence", min: 3, n });
    }
    let lhs = mu_nk(n, s)?;
    let rhs = mu_nk(n - 2, s)?.saturating_sub(1);
    Ok(lhs == rhs)
}

/// Direction selector for [`ceiling_bound_equiv`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundDirection {
    /// Compare `ceil(x) <= g` against `x <= g`.
    Le,
    /// Compare `g <= ceil(x) - 1` against `g < x`.
    Gt,
}

/// Exactness of the ceiling-elimination rules used when solving integer
/// inequalities: for integer g and rational x, `ceil(x) <= g` iff `x <= g`,
/// and `g <= ceil(x) - 1` iff `g < x`. Returns whether the two sides of the
/// selected equivalence agree for the given rational `x_num / x_den`.
pub fn ceiling_bound_equiv(
    x_num: i64,
    x_den: i64,
    g: i64,
    direction: BoundDirection,
) -> Result<bool, FormulaError> {
    if x_den <= 0 {
        return Err(FormulaError::NonPositiveDenominator);
    }
    // ceil(a/b) for b > 0, exact in integers.
    let ceil_x = -((-x_num).div_euclid(x_den));
    Ok(match direction {
        BoundDirection::Le => (ceil_x <= g) == (x_num <= g * x_den),
        BoundDirection::Gt => (g < ceil_x) == (g * x_den < x_num),
    })
}

/// Which of the four standard tables a [`TableSpec`] describes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum TableKind {
    /// Minimum orientable genus g(n,k), rows n, columns k.
    GenusOrientable,
    /// Minimum non-orientable genus g~(n,k), rows n, columns k.
    GenusNonorientable,
    /// Extendability threshold mu(n, S_g), rows n, columns g.
    MuOrientable,
    /// Extendability threshold mu(n, N_g), rows n, columns g.
    MuNonorientable,
}

impl TableKind {
    pub fn is_genus_table(self) -> bool {
        matches!(self, TableKind::GenusOrientable | TableKind::GenusNonorientable)
    }

    pub fn is_orientable(self) -> bool {
        matches!(self, TableKind::GenusOrientable | TableKind::MuOrientable)
    }
}

/// A rectangular slice of one of the four standard tables: a row range of
/// deletion counts n, and a column range of either extendability counts k
/// (genus tables) or genera (mu tables).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableSpec {
    pub kind: TableKind,
    pub n_range: RangeInclusive<u64>,
    pub col_range: RangeInclusive<u64>,
}

impl TableSpec {
    pub fn new(
        kind: TableKind,
        n_range: RangeInclusive<u64>,
        col_range: RangeInclusive<u64>,
    ) -> Result<TableSpec, FormulaError> {
        if n_range.is_empty() {
            return Err(FormulaError::BadTableRange(format!(
                "empty n range {}..={}",
                n_range.start(),
                n_range.end()
            )));
        }
        if col_range.is_empty() {
            return Err(FormulaError::BadTableRange(format!(
                "empty column range {}..={}",
                col_range.start(),
                col_range.end()
            )));
        }
        if *n_range.start() < 1 {
            return Err(FormulaError::BadTableRange("n must start at 1 or above".into()));
        }
        if kind == TableKind::MuNonorientable && *col_range.start() < 1 {
            return Err(FormulaError::BadTableRange(
                "non-orientable genus columns must start at 1 or above".into(),
            ));
        }
        Ok(TableSpec { kind, n_range, col_range })
    }

    /// The default range for each kind: n in 1..=8 for all four tables;
    /// k in 0..=8 for genus tables, g in 0..=16 (orientable) or 1..=16
    /// (non-orientable) for mu tables.
    pub fn default_for(kind: TableKind) -> TableSpec {
        let col_range = match kind {
            TableKind::GenusOrientable | TableKind::GenusNonorientable => 0..=8,
            TableKind::MuOrientable => 0..=16,
            TableKind::MuNonorientable => 1..=16,
        };
        TableSpec { kind, n_range: 1..=8, col_range }
    }
}

/// A fully evaluated table slice: row-major cells indexed by (n, column).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FormulaTable {
    pub spec: TableSpec,
    pub cells: Vec<Vec<u64>>,
}

impl FormulaTable {
    pub fn cell(&self, n: u64, col: u64) -> Option<u64> {
        let r = n.checked_sub(*self.spec.n_range.start())? as usize;
        let c = col.checked_sub(*self.spec.col_range.start())? as usize;
        self.cells.get(r)?.get(c).copied()
    }
}

/// Evaluate every cell of the requested table slice.
///
/// Genus tables are nondecreasing along rows and columns, and mu tables are
/// nonincreasing down columns; both facts are asserted on the emitted grid.
pub fn emit_table(spec: &TableSpec) -> Result<FormulaTable, FormulaError> {
    let orientable = spec.kind.is_orientable();
    let mut cells = Vec::new();
    for n in spec.n_range.clone() {
        let mut row = Vec::new();
        for col in spec.col_range.clone() {
            let value = if spec.kind.is_genus_table() {
                genus_nk(n, col, orientable)?
            } else {
                let s = if orientable {
                    Surface::orientable(col)
                } else {
                    Surface::non_orientable(col)?
                };
                mu_nk(n, s)?
            };
            row.push(value);
        }
        cells.push(row);
    }
    if spec.kind.is_genus_table() {
        for (r, row) in cells.iter().enumerate() {
            assert!(row.windows(2).all(|w| w[0] <= w[1]), "genus row {r} not nondecreasing");
        }
        for pair in cells.windows(2) {
            assert!(
                pair[0].iter().zip(&pair[1]).all(|(a, b)| a <= b),
                "genus columns not nondecreasing"
            );
        }
    } else {
        for pair in cells.windows(2) {
            assert!(
                pair[0].iter().zip(&pair[1]).all(|(a, b)| a >= b),
                "mu columns not nonincreasing"
            );
        }
    }
    Ok(FormulaTable { spec: spec.clone(), cells })
}
