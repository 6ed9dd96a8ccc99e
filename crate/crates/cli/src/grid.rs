use crate::error::CliError;

/// Parses `start:stop:step` into grid points, rounded to 12 decimals so that
/// `0:1:0.1` yields exactly 0.3 rather than 0.30000000000000004.
pub fn parse_alpha_grid(spec: &str) -> Result<Vec<f64>, CliError> {
    let bad = || CliError::Input(format!("alpha grid must be start:stop:step, got {spec:?}"));
    let fields: Vec<f64> = spec
        .split(':')
        .map(|f| f.trim().parse::<f64>().map_err(|_| bad()))
        .collect::<Result<_, _>>()?;
    let [start, stop, step] = fields[..] else {
        return Err(bad());
    };
    if !(0.0..=1.0).contains(&start) || !(0.0..=1.0).contains(&stop) || start > stop {
        return Err(CliError::Input(format!(
            "alpha grid bounds must satisfy 0 <= start <= stop <= 1, got {spec:?}"
        )));
    }
    if step.is_nan() || step <= 0.0 {
        return Err(CliError::Input(format!(
            "alpha grid step must be positive, got {step}"
        )));
    }
    let count = ((stop - start) / step + 1e-9).floor() as usize + 1;
    Ok((0..count)
        .map(|k| {
            let a = start + k as f64 * step;
            ((a * 1e12).round() / 1e12).clamp(0.0, 1.0)
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tenths() {
        let g = parse_alpha_grid("0:1:0.1").unwrap();
        assert_eq!(g.len(), 11);
        assert_eq!(g[3], 0.3);
        assert_eq!(g[10], 1.0);
    }

    #[test]
    fn single_point_and_uneven_step() {
        assert_eq!(parse_alpha_grid("0.5:0.5:0.1").unwrap(), vec![0.5]);
        assert_eq!(parse_alpha_grid("0:1:0.4").unwrap(), vec![0.0, 0.4, 0.8]);
    }

    #[test]
    fn rejects_bad_grids() {
        for spec in ["0:1", "0:1:0", "0:2:0.5", "1:0:0.1", "a:1:0.1", "0:1:-0.1"] {
            assert!(parse_alpha_grid(spec).is_err(), "{spec}");
        }
    }
}
