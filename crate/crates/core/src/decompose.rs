//! Fischer-type decompositions `P = Σ_s L^s K_{k−s·step}` shared by the Dirac,
//! quaternionic and harmonic cases.
//!
//! A problem supplies a kernel basis per degree, a lift `L` (multiplication by the
//! vector variable or by `|mh|²`) and the annihilating operator. Two strategies:
//!
//! * **exact** asks for the literal polynomial identity with true lifts, all grades at once;
//! * **graded** replaces `L` by its top-degree part `T` and peels one degree at a time,
//!   `P_d = K_d + T(Q_{d−step})`, recursing on `Q`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::clifford::Blade;
use crate::error::{Error, Result};
use crate::factorial::FamilySign;
use crate::linalg::Matrix;
use crate::polynomial::{GradedComponentBasis, LatticePolynomial};
use crate::rational::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Strategy {
    Exact,
    Graded,
    Auto,
}

impl std::str::FromStr for Strategy {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "exact" => Ok(Strategy::Exact),
            "graded" => Ok(Strategy::Graded),
            "auto" => Ok(Strategy::Auto),
            other => Err(Error::InvalidArgument(format!("strategy must be exact, graded or auto, got `{other}`"))),
        }
    }
}

type KernelFn<'a> = Box<dyn Fn(usize) -> Result<Vec<LatticePolynomial>> + Sync + 'a>;
type MapFn<'a> = Box<dyn Fn(&LatticePolynomial) -> Result<LatticePolynomial> + Sync + 'a>;

pub struct Problem<'a> {
    pub n: usize,
    pub h: Rational,
    pub family: FamilySign,
    /// Coefficient blades spanned by the space (all blades, or the quaternion slots).
    pub blades: Vec<Blade>,
    /// Degree drop per lift: 1 for `(mh)`, 2 for `|mh|²`.
    pub step: usize,
    pub kernel: KernelFn<'a>,
    pub lift: MapFn<'a>,
    pub annihilator: MapFn<'a>,
    /// Largest lift power used by the exact strategy; `None` uses every `s` with `s·step ≤ k`.
    pub max_power: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Component {
    /// Number of lifts applied to this kernel element.
    pub power: usize,
    pub degree: usize,
    pub polynomial: LatticePolynomial,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Decomposition {
    pub strategy: Strategy,
    pub feasible: bool,
    pub components: Vec<Component>,
    /// `P − Σ T^s K` for the graded strategy, `P − Σ L^s K` for the exact one.
    pub residual: LatticePolynomial,
    /// `P − Σ L^s K` with true lifts, whatever the strategy.
    pub literal_residual: LatticePolynomial,
    /// Every component is annihilated exactly.
    pub annihilated: bool,
    pub kernel_dimensions: BTreeMap<usize, usize>,
    /// Outcome of the exact strategy when it was attempted.
    pub exact_feasible: Option<bool>,
    /// Whether the graded split at every degree was unique.
    pub unique: Option<bool>,
    pub diagnostics: Vec<String>,
}

impl Decomposition {
    pub fn component(&self, power: usize) -> Option<&LatticePolynomial> {
        self.components.iter().find(|c| c.power == power).map(|c| &c.polynomial)
    }
}

struct Context<'p, 'a> {
    problem: &'p Problem<'a>,
    kernels: BTreeMap<usize, Vec<LatticePolynomial>>,
}

impl<'p, 'a> Context<'p, 'a> {
    fn kernel(&mut self, d: usize) -> Result<&[LatticePolynomial]> {
        if !self.kernels.contains_key(&d) {
            let k = (self.problem.kernel)(d)?;
            self.kernels.insert(d, k);
        }
        Ok(&self.kernels[&d])
    }

    fn basis(&self, degrees: Vec<usize>) -> GradedComponentBasis {
        let p = self.problem;
        GradedComponentBasis::with_blades(p.n, &p.h, p.family, degrees, p.blades.clone())
    }

    fn lift_power(&self, q: &LatticePolynomial, s: usize) -> Result<LatticePolynomial> {
        let mut out = q.clone();
        for _ in 0..s {
            out = (self.problem.lift)(&out)?;
        }
        Ok(out)
    }

    fn top_lift(&self, q: &LatticePolynomial, d: usize) -> Result<LatticePolynomial> {
        Ok((self.problem.lift)(q)?.graded_component(d))
    }
}

pub fn decompose(problem: &Problem<'_>, p: &LatticePolynomial, strategy: Strategy) -> Result<Decomposition> {
    let k = match p.homogeneous_degree() {
        Some(k) => k,
        None if p.is_zero() => 0,
        None => return Err(Error::NotHomogeneous(p.degree().unwrap_or(0))),
    };
    if p.n() != problem.n || p.h() != &problem.h || p.family() != problem.family {
        return Err(Error::ContextMismatch("polynomial does not live in the decomposition space".into()));
    }
    let mut ctx = Context { problem, kernels: BTreeMap::new() };
    match strategy {
        Strategy::Exact => exact(&mut ctx, p, k),
        Strategy::Graded => graded(&mut ctx, p, k),
        Strategy::Auto => {
            let e = exact(&mut ctx, p, k)?;
            if e.feasible {
                Ok(e)
            } else {
                let mut g = graded(&mut ctx, p, k)?;
                g.exact_feasible = Some(false);
                g.diagnostics.splice(0..0, e.diagnostics);
                Ok(g)
            }
        }
    }
}

fn finish(
    ctx: &mut Context<'_, '_>,
    p: &LatticePolynomial,
    strategy: Strategy,
    feasible: bool,
    components: Vec<Component>,
    residual: LatticePolynomial,
    diagnostics: Vec<String>,
) -> Result<Decomposition> {
    let mut literal = p.clone();
    let mut annihilated = true;
    for c in &components {
        literal = &literal - &ctx.lift_power(&c.polynomial, c.power)?;
        annihilated &= (ctx.problem.annihilator)(&c.polynomial)?.is_zero();
    }
    let kernel_dimensions = ctx.kernels.iter().map(|(d, b)| (*d, b.len())).collect();
    Ok(Decomposition {
        strategy,
        feasible,
        components,
        residual,
        literal_residual: literal,
        annihilated,
        kernel_dimensions,
        exact_feasible: None,
        unique: None,
        diagnostics,
    })
}

fn exact(ctx: &mut Context<'_, '_>, p: &LatticePolynomial, k: usize) -> Result<Decomposition> {
    let step = ctx.problem.step;
    let smax = ctx.problem.max_power.unwrap_or(k / step).min(k / step);
    let mut columns: Vec<LatticePolynomial> = Vec::new();
    let mut owners: Vec<(usize, usize)> = Vec::new();
    let mut top = k;
    for s in 0..=smax {
        let d = k - s * step;
        let basis = ctx.kernel(d)?.to_vec();
        for (i, b) in basis.iter().enumerate() {
            let lifted = ctx.lift_power(b, s)?;
            top = top.max(lifted.degree().unwrap_or(0));
            columns.push(lifted);
            owners.push((s, i));
        }
    }
    let target = ctx.basis((0..=top).collect());
    let mut diagnostics = Vec::new();
    let coords: Vec<Vec<Rational>> = match columns.iter().map(|c| target.coordinates(c)).collect() {
        Ok(c) => c,
        Err(e) => {
            diagnostics.push(format!("exact: lifted kernel leaves the coefficient space: {e}"));
            return finish(ctx, p, Strategy::Exact, false, Vec::new(), p.clone(), diagnostics);
        }
    };
    let rhs = target.coordinates(p)?;
    let a = Matrix::from_columns(target.len(), &coords);
    let Some(x) = a.solve(&rhs) else {
        diagnostics.push(format!(
            "exact: P ∉ span of L^s K_(k−s·step) for s ≤ {smax} (rank {} of {} columns)",
            a.rank(),
            a.cols()
        ));
        return finish(ctx, p, Strategy::Exact, false, Vec::new(), p.clone(), diagnostics);
    };
    let mut components = Vec::new();
    for s in 0..=smax {
        let d = k - s * step;
        let mut m = p.zero_like();
        for (j, (owner, i)) in owners.iter().enumerate() {
            if *owner == s {
                m = &m + &ctx.kernels[&d][*i].scale(&x[j]);
            }
        }
        components.push(Component { power: s, degree: d, polynomial: m });
    }
    let mut residual = p.clone();
    for c in &components {
        residual = &residual - &ctx.lift_power(&c.polynomial, c.power)?;
    }
    let mut out = finish(ctx, p, Strategy::Exact, true, components, residual, diagnostics)?;
    out.exact_feasible = Some(true);
    Ok(out)
}

fn graded(ctx: &mut Context<'_, '_>, p: &LatticePolynomial, k: usize) -> Result<Decomposition> {
    let step = ctx.problem.step;
    let mut components = Vec::new();
    let mut diagnostics = Vec::new();
    let mut feasible = true;
    let mut unique = true;
    let mut current = p.clone();
    let mut d = k;
    let mut power = 0;
    loop {
        let kernel = ctx.kernel(d)?.to_vec();
        let here = ctx.basis(vec![d]);
        let lower = (d >= step).then(|| ctx.basis(vec![d - step]));
        let mut columns = Vec::new();
        for b in &kernel {
            columns.push(here.coordinates(b)?);
        }
        if let Some(lower) = &lower {
            for i in 0..lower.len() {
                let t = ctx.top_lift(&lower.element(i), d)?;
                match here.coordinates(&t) {
                    Ok(c) => columns.push(c),
                    Err(e) => {
                        diagnostics.push(format!("graded: top lift leaves the coefficient space: {e}"));
                        feasible = false;
                        break;
                    }
                }
            }
        }
        if !feasible {
            break;
        }
        let a = Matrix::from_columns(here.len(), &columns);
        unique &= a.rank() == a.cols();
        let Some(x) = a.solve(&here.coordinates(&current)?) else {
            diagnostics.push(format!(
                "graded: degree {d} is not spanned by the kernel plus the top lift (rank {} < {})",
                a.rank(),
                here.len()
            ));
            feasible = false;
            break;
        };
        let mut m = current.zero_like();
        for (j, b) in kernel.iter().enumerate() {
            m = &m + &b.scale(&x[j]);
        }
        components.push(Component { power, degree: d, polynomial: m });
        match &lower {
            Some(lower) => {
                current = lower.reconstruct(&x[kernel.len()..]);
                d -= step;
                power += 1;
            }
            None => break,
        }
    }
    let mut residual = p.clone();
    if feasible {
        for c in &components {
            let mut t = c.polynomial.clone();
            for s in 0..c.power {
                t = ctx.top_lift(&t, c.degree + (s + 1) * step)?;
            }
            residual = &residual - &t;
        }
    }
    let mut out = finish(ctx, p, Strategy::Graded, feasible, components, residual, diagnostics)?;
    out.unique = Some(unique);
    Ok(out)
}
