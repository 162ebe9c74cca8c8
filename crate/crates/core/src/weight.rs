use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Error)]
#[error("edge weight undefined at ({x}, {y}): both arguments must be finite and at least 1")]
pub struct DomainError {
    pub x: f64,
    pub y: f64,
}

/// Checked edge weight `sqrt((x + y - 2) / (x y))`.
pub fn f(x: f64, y: f64) -> Result<f64, DomainError> {
    if !(x.is_finite() && y.is_finite()) || x < 1.0 || y < 1.0 {
        return Err(DomainError { x, y });
    }
    Ok(weight(x, y))
}

/// Unchecked edge weight for hot loops whose arguments are degrees.
#[inline]
pub fn weight(x: f64, y: f64) -> f64 {
    ((x + y - 2.0) / (x * y)).sqrt()
}
