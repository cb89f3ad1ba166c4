use super::{Bidegree, BigradedBasis, LinComb, Sign, TensorWord};

/// Which suspension: `s` lowers the vertical degree, `S` lowers the horizontal degree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Direction {
    Vertical,
    Horizontal,
}

impl Direction {
    /// Bidegree of one suspension step.
    pub fn step(self) -> Bidegree {
        match self {
            Direction::Vertical => Bidegree::new(0, -1),
            Direction::Horizontal => Bidegree::new(-1, 0),
        }
    }
}

/// Koszul sign of `σ^{⊗n}` on factors of the given bidegrees, for one step of bidegree `sigma`.
///
/// The `k`-th copy of `σ` passes the first `k − 1` factors.
fn step_sign(sigma: Bidegree, degrees: &[Bidegree]) -> Sign {
    let mut passed = Bidegree::ZERO;
    let mut sign = Sign::Plus;
    for &d in degrees {
        sign = sign * sigma.koszul(passed);
        passed += d;
    }
    sign
}

/// Sign of `(s^{power})^{⊗n}` applied factorwise, as a sequence of single steps.
pub fn suspension_sign(direction: Direction, power: i64, degrees: &[Bidegree]) -> Sign {
    let step = if power >= 0 {
        direction.step()
    } else {
        -direction.step()
    };
    let mut current = degrees.to_vec();
    let mut sign = Sign::Plus;
    for _ in 0..power.unsigned_abs() {
        sign = sign * step_sign(step, &current);
        current.iter_mut().for_each(|d| *d += step);
    }
    sign
}

/// Sign of `(s^{-1})^{⊗n}` on already suspended factors of the given bidegrees.
pub fn desuspension_sign(suspended: impl IntoIterator<Item = Bidegree>) -> Sign {
    let degrees: Vec<_> = suspended.into_iter().collect();
    step_sign(-Direction::Vertical.step(), &degrees)
}

/// Applies `s^{power}` (or `S^{power}`) to every factor of every word.
///
/// Returns the shifted basis (names and order unchanged) and the image, with the Koszul
/// signs of the suspension symbols passing earlier factors.
pub fn suspend(
    x: &LinComb<TensorWord>,
    basis: &BigradedBasis,
    direction: Direction,
    power: i64,
) -> (BigradedBasis, LinComb<TensorWord>) {
    let shifted = basis.shifted(direction.step().scale(power));
    let image = x
        .iter()
        .map(|(w, c)| {
            let sign = suspension_sign(direction, power, &basis.factor_bidegrees(w));
            (w.clone(), c * sign.to_i64())
        })
        .collect();
    (shifted, image)
}
