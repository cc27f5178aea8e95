//! One function per subcommand. Text goes to `out`; files are written directly.

use std::fs;
use std::io::Write;
use std::path::Path;

use hrnr_core::engine::grid_angle;
use hrnr_core::geometry::support;
use hrnr_core::random::{
    random_composition, random_nilpotent_contraction, seeded, shift_block_contraction,
};
use hrnr_core::shift::{closed_form_shift_range, shift_matrix};
use hrnr_core::verifier::{
    dilation_inclusion_check, haagerup_bound_check, run_property_suite, INCLUSION_TOL,
};
use hrnr_core::{numerical_radius, rank_k_range, ClosedFormRange, Matrix};
use rand::Rng;

use crate::io::{read_matrix, to_json, write_json, write_matrix, RegionFile};
use crate::{svg, CliError, Verdict};

/// Radius agreement required by `verify-shift`.
pub const SHIFT_RADIUS_TOL: f64 = 5e-6;

type Outcome = Result<Verdict, CliError>;

pub struct RangeArgs<'a> {
    pub input: &'a Path,
    pub k: usize,
    pub angles: usize,
    pub out: Option<&'a Path>,
    pub svg: Option<&'a Path>,
    pub ref_radius: Option<f64>,
}

/// Region JSON to `--out`, or to `out` when no path is given.
pub fn range(args: &RangeArgs<'_>, out: &mut dyn Write) -> Outcome {
    let t = read_matrix(args.input)?;
    let rep = rank_k_range(&t, args.k, args.angles)?;
    let file = RegionFile::from_report(&rep);
    match args.out {
        Some(path) => {
            write_json(path, &file)?;
            writeln!(
                out,
                "{} with {} vertices, max modulus {}, outer error bound {:e}",
                file.tag,
                file.vertices.len(),
                file.max_modulus()
                    .map_or("-".to_string(), |r| format!("{r:.6}")),
                file.outer_error_bound
            )?;
        }
        None => out.write_all(to_json(&file)?.as_bytes())?,
    }
    if let Some(path) = args.svg {
        fs::write(path, svg::render(&file, args.ref_radius))?;
    }
    Ok(Verdict::Pass)
}

pub fn radius(input: &Path, angles: usize, out: &mut dyn Write) -> Outcome {
    let t = read_matrix(input)?;
    writeln!(out, "{}", numerical_radius(&t, angles)?)?;
    Ok(Verdict::Pass)
}

fn describe(form: ClosedFormRange) -> String {
    match form {
        ClosedFormRange::Disc(r) => format!("disc radius {r:.9}"),
        ClosedFormRange::Point => "point 0".to_string(),
        ClosedFormRange::Empty => "empty".to_string(),
    }
}

/// Closed forms for `S_n`; `--out` also writes the matrix file.
pub fn shift(n: usize, k: Option<usize>, save: Option<&Path>, out: &mut dyn Write) -> Outcome {
    if n == 0 {
        return Err(CliError::Usage("--n must be at least 1".into()));
    }
    let ks = match k {
        Some(k) => k..=k,
        None => 1..=n,
    };
    for k in ks {
        writeln!(
            out,
            "n={n} k={k} {}",
            describe(closed_form_shift_range(n, k)?)
        )?;
    }
    if let Some(path) = save {
        write_matrix(path, &shift_matrix(n))?;
    }
    Ok(Verdict::Pass)
}

/// Engine against the closed form for every `2 <= n <= max_n`, `1 <= k <= n`.
pub fn verify_shift(max_n: usize, angles: usize, out: &mut dyn Write) -> Outcome {
    if max_n < 2 {
        return Err(CliError::Usage(format!(
            "--max-n must be at least 2, got {max_n}"
        )));
    }
    let mut failures = Vec::new();
    let mut cases = 0;
    let mut worst: f64 = 0.0;
    for n in 2..=max_n {
        let s = shift_matrix(n);
        for k in 1..=n {
            cases += 1;
            let want = closed_form_shift_range(n, k)?;
            let region = rank_k_range(&s, k, angles)?.region;
            let expected_tag = match want {
                ClosedFormRange::Disc(_) => "polygon",
                ClosedFormRange::Point => "point",
                ClosedFormRange::Empty => "empty",
            };
            let mut error = 0.0;
            if let (Some(r), Some(max_mod)) = (want.radius(), region.max_modulus()) {
                let min_support = (0..angles)
                    .map(|j| support(&region, grid_angle(j, angles)))
                    .collect::<hrnr_core::Result<Vec<_>>>()?
                    .into_iter()
                    .fold(f64::INFINITY, f64::min);
                error = (max_mod - r).abs().max((min_support - r).abs());
                worst = worst.max(error);
            }
            if region.tag() != expected_tag || error > SHIFT_RADIUS_TOL {
                failures.push((n, k, describe(want), region.tag(), error));
            }
        }
    }
    if !failures.is_empty() {
        writeln!(
            out,
            "{:>4} {:>4}  {:<24} {:<8} radius error",
            "n", "k", "expected", "got"
        )?;
        for (n, k, want, got, err) in &failures {
            writeln!(out, "{n:>4} {k:>4}  {want:<24} {got:<8} {err:.3e}")?;
        }
    }
    writeln!(
        out,
        "{cases} cases, {} mismatches, max radius error {worst:.3e} (tol {SHIFT_RADIUS_TOL:e})",
        failures.len()
    )?;
    Ok(Verdict::from_pass(failures.is_empty()))
}

pub struct NilpotentArgs {
    pub n: usize,
    /// Defect rank to force; the generator then conjugates `r_hint` shift blocks.
    pub r_hint: Option<usize>,
    pub trials: usize,
    pub seed: u64,
    pub angles: usize,
}

/// Trial `i` uses seed `seed + i`.
///
/// Without `r_hint`, even seeds give a scaled rotated strictly-lower matrix and
/// odd seeds a conjugated sum of shift blocks with a random defect rank.
pub fn nilpotent_trial(args: &NilpotentArgs, trial_seed: u64) -> Matrix {
    let mut rng = seeded(trial_seed);
    let n = args.n;
    match args.r_hint {
        Some(r) => {
            let sizes = random_composition(&mut rng, n, r);
            shift_block_contraction(&mut rng, &sizes)
        }
        None if trial_seed.is_multiple_of(2) => {
            let norm = rng.random_range(0.3..=1.0);
            random_nilpotent_contraction(&mut rng, n, norm)
        }
        None => {
            let parts = rng.random_range(1..=n);
            let sizes = random_composition(&mut rng, n, parts);
            shift_block_contraction(&mut rng, &sizes)
        }
    }
}

pub fn verify_nilpotent(args: &NilpotentArgs, out: &mut dyn Write) -> Outcome {
    if args.trials == 0 {
        return Err(CliError::Usage("--trials must be at least 1".into()));
    }
    if args.n == 0 {
        return Err(CliError::Usage("--n must be at least 1".into()));
    }
    if let Some(r) = args.r_hint {
        if r == 0 || r > args.n {
            return Err(CliError::Usage(format!(
                "--r-hint must be in 1..={}",
                args.n
            )));
        }
    }
    let mut failed = 0;
    let mut haagerup_equal = 0;
    let mut inclusion_equal = 0;
    for i in 0..args.trials {
        let trial_seed = args.seed.wrapping_add(i as u64);
        let t = nilpotent_trial(args, trial_seed);
        let dil = dilation_inclusion_check(&t, args.angles)?;
        let haag = haagerup_bound_check(&t, args.angles)?;
        if haag.equality {
            haagerup_equal += 1;
        }
        inclusion_equal += dil
            .samples
            .iter()
            .filter(|s| {
                s.bound > 0.0
                    && s.max_modulus
                        .is_some_and(|m| (m - s.bound).abs() <= INCLUSION_TOL)
            })
            .count();
        for rep in [&dil.report, &haag.report] {
            if !rep.pass {
                failed += 1;
                writeln!(out, "seed={trial_seed} {rep}")?;
            }
        }
    }
    writeln!(
        out,
        "{} trials, {failed} violations; Haagerup equality in {haagerup_equal} trials, \
         {inclusion_equal} ranks on the inclusion bound",
        args.trials
    )?;
    Ok(Verdict::from_pass(failed == 0))
}

pub fn verify_properties(
    input: &Path,
    k: usize,
    seed: u64,
    angles: usize,
    out: &mut dyn Write,
) -> Outcome {
    let t = read_matrix(input)?;
    let reports = run_property_suite(&t, k, seed, angles)?;
    for rep in &reports {
        writeln!(out, "{rep}")?;
    }
    Ok(Verdict::from_pass(reports.iter().all(|r| r.pass)))
}
