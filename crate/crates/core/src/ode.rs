//! Adaptive Dormand–Prince 5(4) integration with exact landing on requested
//! output points. Small fixed-dimension state vectors only.

use crate::error::{Error, Result};

pub(crate) trait OdeSystem<const D: usize> {
    fn derivative(&self, x: f64, y: &[f64; D]) -> [f64; D];

    /// Abort the integration with an error (blow-up detection etc).
    fn check_state(&self, _x: f64, _y: &[f64; D]) -> Result<()> {
        Ok(())
    }
}

/// Integrate from `x0` to each point of `outputs` in turn (monotone sequence,
/// increasing or decreasing away from `x0`), recording the state at each.
pub(crate) fn integrate_to_points<const D: usize, S: OdeSystem<D>>(
    system: &S,
    x0: f64,
    y0: [f64; D],
    outputs: &[f64],
    rtol: f64,
    atol: f64,
) -> Result<Vec<[f64; D]>> {
    let mut x = x0;
    let mut y = y0;
    let mut results = Vec::with_capacity(outputs.len());
    let mut h_guess: Option<f64> = None;
    for &target in outputs {
        if target == x {
            results.push(y);
            continue;
        }
        let h = advance(system, &mut x, &mut y, target, rtol, atol, h_guess)?;
        h_guess = Some(h);
        results.push(y);
    }
    Ok(results)
}

/// Step from the current (x, y) to exactly `target`. Returns the last
/// accepted step size as a warm start for the next segment.
#[allow(clippy::too_many_arguments)]
fn advance<const D: usize, S: OdeSystem<D>>(
    system: &S,
    x: &mut f64,
    y: &mut [f64; D],
    target: f64,
    rtol: f64,
    atol: f64,
    h_guess: Option<f64>,
) -> Result<f64> {
    let dir = (target - *x).signum();
    let mut h = h_guess
        .map(|g| g.abs())
        .unwrap_or(1e-4)
        .min((target - *x).abs())
        * dir;
    let mut last_accepted = h;
    let mut steps = 0usize;
    while (target - *x) * dir > 0.0 {
        steps += 1;
        if steps > 4_000_000 {
            return Err(Error::Solver(format!(
                "step limit exceeded near x = {x} (requested tolerance too tight?)"
            )));
        }
        if (h.abs()) > (target - *x).abs() {
            h = target - *x;
        }
        let (y_new, err) = dormand_prince_step(system, *x, y, h);
        // Error norm scaled per component.
        let mut norm: f64 = 0.0;
        for i in 0..D {
            let scale = atol + rtol * y[i].abs().max(y_new[i].abs());
            norm = norm.max((err[i] / scale).abs());
        }
        if norm <= 1.0 {
            *x += h;
            *y = y_new;
            system.check_state(*x, y)?;
            last_accepted = h;
        }
        let factor = if norm == 0.0 {
            5.0
        } else {
            (0.9 * norm.powf(-0.2)).clamp(0.2, 5.0)
        };
        h *= factor;
        if h.abs() < 1e-14 * (1.0 + x.abs()) {
            return Err(Error::Solver(format!(
                "step size underflow at x = {x} (stiffness or blow-up)"
            )));
        }
    }
    Ok(last_accepted)
}

fn dormand_prince_step<const D: usize, S: OdeSystem<D>>(
    system: &S,
    x: f64,
    y: &[f64; D],
    h: f64,
) -> ([f64; D], [f64; D]) {
    const C: [f64; 6] = [0.2, 0.3, 0.8, 8.0 / 9.0, 1.0, 1.0];
    const A: [[f64; 6]; 6] = [
        [0.2, 0.0, 0.0, 0.0, 0.0, 0.0],
        [3.0 / 40.0, 9.0 / 40.0, 0.0, 0.0, 0.0, 0.0],
        [44.0 / 45.0, -56.0 / 15.0, 32.0 / 9.0, 0.0, 0.0, 0.0],
        [
            19372.0 / 6561.0,
            -25360.0 / 2187.0,
            64448.0 / 6561.0,
            -212.0 / 729.0,
            0.0,
            0.0,
        ],
        [
            9017.0 / 3168.0,
            -355.0 / 33.0,
            46732.0 / 5247.0,
            49.0 / 176.0,
            -5103.0 / 18656.0,
            0.0,
        ],
        [
            35.0 / 384.0,
            0.0,
            500.0 / 1113.0,
            125.0 / 192.0,
            -2187.0 / 6784.0,
            11.0 / 84.0,
        ],
    ];
    // 5th-order weights equal the last A row (FSAL pair); 4th-order weights:
    const B4: [f64; 7] = [
        5179.0 / 57600.0,
        0.0,
        7571.0 / 16695.0,
        393.0 / 640.0,
        -92097.0 / 339200.0,
        187.0 / 2100.0,
        1.0 / 40.0,
    ];

    let mut k = [[0.0; D]; 7];
    k[0] = system.derivative(x, y);
    for stage in 0..6 {
        let mut ys = *y;
        for i in 0..D {
            let mut acc = 0.0;
            for (j, kj) in k.iter().enumerate().take(stage + 1) {
                acc += A[stage][j] * kj[i];
            }
            ys[i] += h * acc;
        }
        k[stage + 1] = system.derivative(x + C[stage] * h, &ys);
    }
    // k[6] is the derivative at the 5th-order solution (A row 6 == b5).
    let mut y5 = *y;
    for i in 0..D {
        let mut acc = 0.0;
        for (j, kj) in k.iter().enumerate().take(6) {
            acc += A[5][j] * kj[i];
        }
        y5[i] += h * acc;
    }
    let mut err = [0.0; D];
    for i in 0..D {
        let mut acc4 = 0.0;
        for (j, kj) in k.iter().enumerate() {
            acc4 += B4[j] * kj[i];
        }
        let y4 = y[i] + h * acc4;
        err[i] = y5[i] - y4;
    }
    (y5, err)
}
