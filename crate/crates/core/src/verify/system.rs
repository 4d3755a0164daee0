use std::collections::{BTreeMap, HashSet};
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::Instant;

use serde::Serialize;

use super::interp::interp_idempotent;
use crate::algebra::{jm_elements, AlgebraElement, ElementJson};
use crate::arith::DeltaScalar;
use crate::diagram::Shape;
use crate::error::Result;
use crate::fusion::{
    default_h, fusion_idempotent, literal_first_idempotent, second_fusion_idempotent, FusionConfig,
    Variant,
};
use crate::tableaux::{enumerate_tableaux, WalledTableau};

#[derive(Clone, Debug)]
pub struct SystemOptions {
    /// Compare with the forward second procedure at every listed `h`.
    pub second_h: Vec<DeltaScalar>,
    /// Compare with the mirror variant at every listed `h`.
    pub mirror: bool,
    /// Compare with the literal first-procedure product in all variables.
    pub literal: bool,
    pub threads: usize,
}

impl SystemOptions {
    /// Forward second procedure at the default `h` always; the expensive
    /// multivariate cross-checks only for `r + s ≤ 4`.
    pub fn standard(shape: Shape) -> Self {
        let small = shape.n() <= 4;
        SystemOptions {
            second_h: vec![default_h()],
            mirror: small,
            literal: small,
            threads: default_threads(),
        }
    }

    /// Fusion, interpolation and the algebraic checks only.
    pub fn minimal() -> Self {
        SystemOptions {
            second_h: Vec::new(),
            mirror: false,
            literal: false,
            threads: default_threads(),
        }
    }
}

pub(crate) fn default_threads() -> usize {
    std::thread::available_parallelism().map_or(1, usize::from)
}

#[derive(Clone, Debug, Serialize)]
pub struct TableauCert {
    pub tableau: String,
    pub contents: Vec<String>,
    pub idempotent: bool,
    /// `x_t E = E x_t = c_t E` for every `t`.
    pub jm_spectrum: bool,
    /// `E x_t E = c_t E` for every `t`.
    pub sandwich: bool,
    pub iota_fixed: bool,
    pub matches_interp: bool,
    pub matches_second: Option<bool>,
    pub matches_mirror: Option<bool>,
    pub matches_literal: Option<bool>,
    pub error: Option<String>,
}

impl TableauCert {
    pub fn passed(&self) -> bool {
        self.error.is_none()
            && self.idempotent
            && self.jm_spectrum
            && self.sandwich
            && self.iota_fixed
            && self.matches_interp
            && self.matches_second != Some(false)
            && self.matches_mirror != Some(false)
            && self.matches_literal != Some(false)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CertReport {
    pub shape: String,
    pub tableau_count: usize,
    pub tableaux: Vec<TableauCert>,
    pub orthogonal_pairs: usize,
    pub orthogonality_failures: Vec<(String, String)>,
    /// `Σ E_T − 1`; empty when complete.
    pub completeness_residual: ElementJson,
    pub complete: bool,
    pub distinct_spectra: bool,
    pub timings_ms: BTreeMap<String, u128>,
    pub passed: bool,
}

/// Applies `f` to every item on up to `threads` workers, keeping order.
pub(crate) fn par_map<T: Sync, R: Send>(
    items: &[T],
    threads: usize,
    f: impl Fn(&T) -> R + Sync,
) -> Vec<R> {
    let threads = threads.clamp(1, items.len().max(1));
    if threads == 1 {
        return items.iter().map(f).collect();
    }
    let next = AtomicUsize::new(0);
    let out: Mutex<Vec<Option<R>>> = Mutex::new((0..items.len()).map(|_| None).collect());
    std::thread::scope(|scope| {
        for _ in 0..threads {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                if i >= items.len() {
                    break;
                }
                let r = f(&items[i]);
                out.lock().expect("worker panicked")[i] = Some(r);
            });
        }
    });
    out.into_inner()
        .expect("worker panicked")
        .into_iter()
        .map(|r| r.expect("every item processed"))
        .collect()
}

fn blank_cert(t: &WalledTableau) -> TableauCert {
    TableauCert {
        tableau: t.spec(),
        contents: t.contents().iter().map(ToString::to_string).collect(),
        idempotent: false,
        jm_spectrum: false,
        sandwich: false,
        iota_fixed: false,
        matches_interp: false,
        matches_second: None,
        matches_mirror: None,
        matches_literal: None,
        error: None,
    }
}

fn algebraic_checks(
    t: &WalledTableau,
    e: &AlgebraElement,
    jm: &[AlgebraElement],
    cert: &mut TableauCert,
) -> Result<()> {
    let contents = t.contents();
    cert.idempotent = &(e * e) == e;
    cert.jm_spectrum = jm.iter().zip(&contents).all(|(x, c)| {
        let ce = e.scale(c);
        (x * e) == ce && (e * x) == ce
    });
    cert.sandwich = jm
        .iter()
        .zip(&contents)
        .all(|(x, c)| (&(e * x) * e) == e.scale(c));
    cert.iota_fixed = &e.iota() == e;
    cert.matches_interp = &interp_idempotent(t)? == e;
    Ok(())
}

/// Idempotency, Jucys–Murphy spectrum, `ι`-symmetry and agreement with the
/// interpolation formula for a single element claimed to be `E_T`.
pub fn certify_element(t: &WalledTableau, e: &AlgebraElement) -> TableauCert {
    let mut cert = blank_cert(t);
    let run = |cert: &mut TableauCert| -> Result<()> {
        let jm = jm_elements(t.shape())?;
        algebraic_checks(t, e, &jm, cert)
    };
    if let Err(err) = run(&mut cert) {
        cert.error = Some(err.to_string());
    }
    cert
}

fn certify_one(
    t: &WalledTableau,
    jm: &[AlgebraElement],
    opts: &SystemOptions,
) -> (TableauCert, Option<AlgebraElement>) {
    let mut cert = blank_cert(t);
    let run = |cert: &mut TableauCert| -> Result<AlgebraElement> {
        let e = fusion_idempotent(t, &FusionConfig::first())?;
        algebraic_checks(t, &e, jm, cert)?;
        if !opts.second_h.is_empty() {
            let mut ok = true;
            for h in &opts.second_h {
                ok &= second_fusion_idempotent(t, Variant::Forward, h)? == e;
            }
            cert.matches_second = Some(ok);
        }
        if opts.mirror {
            let mut ok = true;
            for h in &opts.second_h {
                ok &= second_fusion_idempotent(t, Variant::Mirror, h)? == e;
            }
            cert.matches_mirror = Some(ok);
        }
        if opts.literal {
            cert.matches_literal = Some(literal_first_idempotent(t)? == e);
        }
        Ok(e)
    };
    match run(&mut cert) {
        Ok(e) => (cert, Some(e)),
        Err(err) => {
            cert.error = Some(err.to_string());
            (cert, None)
        }
    }
}

/// Builds and certifies the complete system of idempotents of `shape`.
pub fn check_system(shape: Shape, opts: &SystemOptions) -> Result<CertReport> {
    shape.require_fusion_shape()?;
    let mut timings = BTreeMap::new();
    let tableaux = enumerate_tableaux(shape, None);
    let jm = jm_elements(shape)?;

    let start = Instant::now();
    let certified = par_map(&tableaux, opts.threads, |t| certify_one(t, &jm, opts));
    timings.insert("idempotents".to_string(), start.elapsed().as_millis());
    let (certs, elements): (Vec<_>, Vec<_>) = certified.into_iter().unzip();

    let start = Instant::now();
    let mut orthogonal_pairs = 0;
    let mut orthogonality_failures = Vec::new();
    let all: Option<Vec<AlgebraElement>> = elements.into_iter().collect();
    let (complete, residual) = match &all {
        Some(es) => {
            let idx: Vec<usize> = (0..es.len()).collect();
            let rows = par_map(&idx, opts.threads, |&a| {
                (a + 1..es.len())
                    .filter(|&b| !(&es[a] * &es[b]).is_zero())
                    .collect::<Vec<_>>()
            });
            orthogonal_pairs = es.len() * es.len().saturating_sub(1) / 2;
            for (a, bad) in rows.into_iter().enumerate() {
                for b in bad {
                    orthogonality_failures.push((tableaux[a].spec(), tableaux[b].spec()));
                }
            }
            let sum = es
                .iter()
                .fold(AlgebraElement::zero(shape), |acc, e| &acc + e);
            let residual = &sum - &AlgebraElement::one(shape);
            (residual.is_zero(), residual)
        }
        None => (false, AlgebraElement::one(shape)),
    };
    timings.insert("orthogonality".to_string(), start.elapsed().as_millis());

    let spectra: HashSet<Vec<String>> = certs.iter().map(|c| c.contents.clone()).collect();
    let distinct_spectra = spectra.len() == certs.len();
    let passed = certs.iter().all(TableauCert::passed)
        && orthogonality_failures.is_empty()
        && complete
        && distinct_spectra;
    Ok(CertReport {
        shape: shape.to_string(),
        tableau_count: tableaux.len(),
        tableaux: certs,
        orthogonal_pairs,
        orthogonality_failures,
        completeness_residual: residual.to_json(),
        complete,
        distinct_spectra,
        timings_ms: timings,
        passed,
    })
}
