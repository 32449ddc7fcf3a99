use crate::error::{GzkError, Result};
use crate::scalar::Scalar;

/// Periodic box [0,Lx) × [0,2πλ) standing in for ℝ×𝕋_λ.
///
/// Index layout is FFT order: index `i` carries the signed mode `i` for `i < N/2` and `i − N`
/// otherwise, so the signed range is [−N/2, N/2). Samples/coefficients are stored row-major with
/// x as the slow index: `i*ny + j`.
#[derive(Clone, Debug, PartialEq)]
pub struct GridSpec<S> {
    lx: S,
    lambda: S,
    nx: usize,
    ny: usize,
    pad_factor: S,
    mx: usize,
    my: usize,
    xi: Vec<S>,
    q: Vec<S>,
}

fn padded_len<S: Scalar>(n: usize, pad: S) -> usize {
    let m = (pad * S::of(n) - S::lit(1e-9)).ceil().to_usize().unwrap_or(n).max(n);
    m + (m & 1)
}

fn signed(i: usize, n: usize) -> i64 {
    if i < n / 2 {
        i as i64
    } else {
        i as i64 - n as i64
    }
}

impl<S: Scalar> GridSpec<S> {
    pub fn new(lx: S, lambda: S, nx: usize, ny: usize, pad_factor: S) -> Result<Self> {
        let mut bad = Vec::new();
        if nx == 0 || !nx.is_multiple_of(2) {
            bad.push(format!("Nx must be even and positive (got {nx})"));
        }
        if ny == 0 || !ny.is_multiple_of(2) {
            bad.push(format!("Ny must be even and positive (got {ny})"));
        }
        if !(lambda >= S::one()) || !lambda.is_finite() {
            bad.push(format!("lambda must be >= 1 (got {lambda})"));
        }
        if !(lx > S::zero()) || !lx.is_finite() {
            bad.push(format!("Lx must be positive (got {lx})"));
        }
        if !(pad_factor >= S::one()) || !pad_factor.is_finite() {
            bad.push(format!("pad_factor must be >= 1 (got {pad_factor})"));
        }
        if !bad.is_empty() {
            return Err(GzkError::InvalidGrid(bad.join("; ")));
        }
        let tau = S::TAU();
        let xi = (0..nx).map(|i| tau * S::of_i64(signed(i, nx)) / lx).collect();
        let q = (0..ny).map(|j| S::of_i64(signed(j, ny)) / lambda).collect();
        Ok(Self {
            lx,
            lambda,
            nx,
            ny,
            pad_factor,
            mx: padded_len(nx, pad_factor),
            my: padded_len(ny, pad_factor),
            xi,
            q,
        })
    }

    /// Same box and modes, different padding.
    pub fn with_pad(&self, pad_factor: S) -> Result<Self> {
        Self::new(self.lx, self.lambda, self.nx, self.ny, pad_factor)
    }

    /// Same box, different resolution.
    pub fn with_modes(&self, nx: usize, ny: usize) -> Result<Self> {
        Self::new(self.lx, self.lambda, nx, ny, self.pad_factor)
    }

    pub fn lx(&self) -> S {
        self.lx
    }
    pub fn lambda(&self) -> S {
        self.lambda
    }
    /// period in y, 2πλ
    pub fn ly(&self) -> S {
        S::TAU() * self.lambda
    }
    pub fn nx(&self) -> usize {
        self.nx
    }
    pub fn ny(&self) -> usize {
        self.ny
    }
    pub fn len(&self) -> usize {
        self.nx * self.ny
    }
    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
    pub fn pad_factor(&self) -> S {
        self.pad_factor
    }
    pub fn dx(&self) -> S {
        self.lx / S::of(self.nx)
    }
    pub fn dy(&self) -> S {
        self.ly() / S::of(self.ny)
    }
    /// Lx·2πλ — the normalization in Parseval and in the inverse transform.
    pub fn area(&self) -> S {
        self.lx * self.ly()
    }
    /// padded transform size used by dealiased products
    pub fn padded_dims(&self) -> (usize, usize) {
        (self.mx, self.my)
    }
    pub fn xis(&self) -> &[S] {
        &self.xi
    }
    pub fn qs(&self) -> &[S] {
        &self.q
    }
    pub fn xi(&self, i: usize) -> S {
        self.xi[i]
    }
    pub fn q(&self, j: usize) -> S {
        self.q[j]
    }
    /// signed x-mode number of index i
    pub fn kx(&self, i: usize) -> i64 {
        signed(i, self.nx)
    }
    pub fn ky(&self, j: usize) -> i64 {
        signed(j, self.ny)
    }
    /// index of a signed x-mode, if it is on the grid
    pub fn ix(&self, k: i64) -> Option<usize> {
        let h = (self.nx / 2) as i64;
        (-h..h).contains(&k).then(|| k.rem_euclid(self.nx as i64) as usize)
    }
    pub fn iy(&self, m: i64) -> Option<usize> {
        let h = (self.ny / 2) as i64;
        (-h..h).contains(&m).then(|| m.rem_euclid(self.ny as i64) as usize)
    }
    pub fn is_nyquist(&self, i: usize, j: usize) -> bool {
        i == self.nx / 2 || j == self.ny / 2
    }
    /// largest |ξ| among non-Nyquist modes
    pub fn max_abs_xi(&self) -> S {
        S::TAU() * S::of(self.nx / 2 - 1) / self.lx
    }
    /// largest Euclidean frequency radius on the band (Nyquist excluded)
    pub fn max_radius(&self) -> S {
        let a = self.max_abs_xi();
        let b = S::of(self.ny / 2 - 1) / self.lambda;
        (a * a + b * b).sqrt()
    }
    /// x_i = i·dx
    pub fn x(&self, i: usize) -> S {
        S::of(i) * self.dx()
    }
    pub fn y(&self, j: usize) -> S {
        S::of(j) * self.dy()
    }
    /// coordinate wrapped into [−Lx/2, Lx/2)
    pub fn x_centered(&self, i: usize) -> S {
        S::of_i64(signed(i, self.nx)) * self.dx()
    }
    pub fn y_centered(&self, j: usize) -> S {
        S::of_i64(signed(j, self.ny)) * self.dy()
    }
    /// Minimum padding for an alias-free product of `degree` band-limited factors.
    pub fn require_pad(&self, degree: usize) -> Result<()> {
        let ok = |m: usize, n: usize| 2 * m >= (degree + 1) * n;
        if degree <= 1 || (ok(self.mx, self.nx) && ok(self.my, self.ny)) {
            Ok(())
        } else {
            Err(GzkError::InsufficientPadding {
                degree,
                required: (degree as f64 + 1.0) / 2.0,
                actual: self.pad_factor.as_f64(),
            })
        }
    }
    /// True when the two grids describe the same box and modes (padding may differ).
    pub fn same_modes(&self, other: &Self) -> bool {
        self.nx == other.nx && self.ny == other.ny && self.lx == other.lx && self.lambda == other.lambda
    }
    pub(crate) fn check_same(&self, other: &Self) -> Result<()> {
        if self.same_modes(other) {
            Ok(())
        } else {
            Err(GzkError::GridMismatch(format!(
                "{}x{} (Lx={}, λ={}) vs {}x{} (Lx={}, λ={})",
                self.nx, self.ny, self.lx, self.lambda, other.nx, other.ny, other.lx, other.lambda
            )))
        }
    }
}

/// `make_grid` with the argument order used throughout the docs.
pub fn make_grid<S: Scalar>(lx: S, lambda: S, nx: usize, ny: usize, pad_factor: S) -> Result<GridSpec<S>> {
    GridSpec::new(lx, lambda, nx, ny, pad_factor)
}
