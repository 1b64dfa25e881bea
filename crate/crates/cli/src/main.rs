//! gdscert: inspect the built-in corpus, subdivide complexes, build GDS
//! disentangler polynomials, and run verification certificates.
//!
//! Inputs are either file paths (facet format) or `corpus:<name>`. Output is
//! byte-identical across runs for fixed inputs and flags; `--format json`
//! switches every command to a machine-readable report. Exit status is 0
//! only when the command (and any certificate it builds) succeeds.

use std::collections::BTreeSet;
use std::fs;
use std::path::PathBuf;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use gds_core::certify::{
    certify_cochain_equals_gds, certify_ocdual, certify_omega, certify_rg_pass, certify_wotr,
    certify_wtr, Certificate,
};
use gds_core::corpus;
use gds_core::fileio::{
    parse_chain, parse_complex, parse_poly, write_chain, write_complex, write_descriptor,
    write_poly,
};
use gds_core::gauge::{gauge_map, gauged_state_amplitude};
use gds_core::homology::{betti_z2, homology_solve, HomologyWitness};
use gds_core::phase::{decompose, gds_disentangler};
use gds_core::subdivide::{barycentric, sw_class};
use gds_core::{Simplex, SimplicialComplex, Vertex};

#[derive(Parser)]
#[command(name = "gdscert", version, about = "GDS disentangler toolkit and certificate runner")]
struct Cli {
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Also write the report into this directory (one file per command)
    #[arg(long, global = true, value_name = "DIR")]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// List the built-in corpus with its frozen metadata
    CorpusList,
    /// f-vector, Euler characteristic, components, manifold verdict
    ComplexInfo { input: String },
    /// Mod-2 Betti numbers; with --cycle, decide whether the cycle bounds
    Homology {
        input: String,
        /// Chain file holding a mod-2 cycle
        #[arg(long, value_name = "FILE")]
        cycle: Option<PathBuf>,
        /// Coefficient modulus for the cycle file
        #[arg(long, default_value_t = 2)]
        modulus: u32,
    },
    /// Print the barycentric subdivision (facet format)
    Subdivide { input: String },
    /// Stiefel-Whitney flag chains of the subdivision, with class verdicts
    SwChains { input: String },
    /// Print the GDS dual disentangler as a phase polynomial
    Disentangler {
        input: String,
        /// Coefficient precision: phases live in ℤ_{2^m}
        #[arg(long, default_value_t = 1)]
        precision: u32,
    },
    /// Peel the disentangler into ω-gate layers (a circuit descriptor)
    Decompose { input: String },
    /// Flip commutator of a disentangler (--gds) or a polynomial file (--poly)
    Commutator {
        /// Complex whose disentangler to conjugate
        #[arg(long, value_name = "INPUT")]
        gds: Option<String>,
        /// Phase-polynomial file to conjugate instead
        #[arg(long, value_name = "FILE", conflicts_with = "gds")]
        poly: Option<PathBuf>,
        #[arg(long, default_value_t = 1)]
        precision: u32,
    },
    /// Gauged state amplitudes over the trivial-holonomy sector, brute force
    GaugeAmplitudes { input: String },
    /// Build a verification certificate (exit 0 iff it passes)
    Certify {
        #[command(subcommand)]
        claim: CertifyClaim,
    },
}

#[derive(Subcommand)]
enum CertifyClaim {
    /// ω-circuits on the flag chains reproduce the GDS disentangler
    CochainEq { input: String },
    /// Reduction to the layer product on the Stiefel-Whitney classes
    Wtr { input: String },
    /// Quarter-turn factorization of the odd layers
    Wotr { input: String },
    /// Full stellar pass to the barycentric subdivision
    Rg { input: String },
    /// Local Euler deletion identity, exhaustively
    Ocdual { input: String },
    /// Gate-family identities: cocycle, homogeneity, halving, primitivity
    Omega {
        #[arg(default_value_t = 6)]
        max_degree: usize,
    },
}

fn main() {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => std::process::exit(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            std::process::exit(1);
        }
    }
}

fn load_complex(input: &str) -> anyhow::Result<SimplicialComplex> {
    if let Some(name) = input.strip_prefix("corpus:") {
        Ok(corpus::load(name)?)
    } else {
        let text = fs::read_to_string(input).with_context(|| format!("reading {input}"))?;
        Ok(parse_complex(&text)?)
    }
}

/// One report per command: stable text, a JSON counterpart, and whether the
/// command's claim holds (drives the exit status).
struct Report {
    slug: &'static str,
    text: String,
    json: Value,
    pass: bool,
}

fn run(cli: Cli) -> anyhow::Result<i32> {
    let report = build_report(&cli.command)?;
    let body = match cli.format {
        Format::Text => report.text.clone(),
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&report.json)?;
            s.push('\n');
            s
        }
    };
    print!("{body}");
    if let Some(dir) = &cli.out {
        fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
        let ext = match cli.format {
            Format::Text => "txt",
            Format::Json => "json",
        };
        let path = dir.join(format!("{}.{ext}", report.slug));
        fs::write(&path, &body).with_context(|| format!("writing {}", path.display()))?;
    }
    Ok(if report.pass { 0 } else { 1 })
}

fn certificate_report(slug: &'static str, cert: Certificate) -> anyhow::Result<Report> {
    Ok(Report {
        slug,
        text: cert.to_string(),
        json: serde_json::to_value(&cert)?,
        pass: cert.verdict,
    })
}

fn build_report(command: &Command) -> anyhow::Result<Report> {
    match command {
        Command::CorpusList => {
            let mut text = String::new();
            let mut entries = Vec::new();
            for e in corpus::ENTRIES {
                let betti: Vec<String> = e.betti.iter().map(|b| b.to_string()).collect();
                text.push_str(&format!(
                    "{:<7} dim {}  chi {:>2}  betti [{}]  manifold {:<3}  {}\n",
                    e.name,
                    e.dim,
                    e.euler,
                    betti.join(" "),
                    if e.is_manifold { "yes" } else { "no" },
                    e.title
                ));
                entries.push(json!({
                    "name": e.name,
                    "title": e.title,
                    "dim": e.dim,
                    "euler": e.euler,
                    "betti": e.betti,
                    "manifold": e.is_manifold,
                    "sw_nontrivial": e.sw_nontrivial,
                }));
            }
            Ok(Report { slug: "corpus-list", text, json: Value::Array(entries), pass: true })
        }

        Command::ComplexInfo { input } => {
            let c = load_complex(input)?;
            let f = c.f_vector();
            let report = c.manifold_check();
            let manifold_line = if report.passes {
                "manifold: yes".to_string()
            } else {
                let bad = report.verdicts.iter().find(|v| !v.passes).unwrap();
                format!("manifold: no (link of {} fails)", bad.simplex)
            };
            let f_str: Vec<String> = f.iter().map(|n| n.to_string()).collect();
            let text = format!(
                "f-vector: {}\ndimension: {}\neuler characteristic: {}\nconnected components: {}\n{}\n",
                f_str.join(" "),
                c.dim(),
                c.euler_characteristic(),
                c.connected_components().len(),
                manifold_line
            );
            let json = json!({
                "f_vector": f,
                "dimension": c.dim(),
                "euler": c.euler_characteristic(),
                "components": c.connected_components().len(),
                "manifold": report.passes,
            });
            Ok(Report { slug: "complex-info", text, json, pass: true })
        }

        Command::Homology { input, cycle, modulus } => {
            let c = load_complex(input)?;
            let betti = betti_z2(&c);
            let betti_str: Vec<String> = betti.iter().map(|b| b.to_string()).collect();
            let mut text = format!("betti (mod 2): {}\n", betti_str.join(" "));
            let mut json = json!({ "betti_z2": betti });
            if let Some(path) = cycle {
                let chain_text = fs::read_to_string(path)
                    .with_context(|| format!("reading {}", path.display()))?;
                let chain = parse_chain(&chain_text, *modulus)?;
                let witness = homology_solve(&c, &chain)?;
                match &witness {
                    HomologyWitness::Trivial { witness } => {
                        text.push_str(&format!(
                            "cycle: {} terms in dimension {}\nclass: trivial (bounds)\nwitness:\n{}",
                            chain.term_count(),
                            chain.dim(),
                            if witness.is_zero() { "(zero chain)\n".into() } else { write_chain(witness) }
                        ));
                    }
                    HomologyWitness::Nontrivial { cocycle_support } => {
                        text.push_str(&format!(
                            "cycle: {} terms in dimension {}\nclass: essential (certifying cocycle on {} simplices)\n",
                            chain.term_count(),
                            chain.dim(),
                            cocycle_support.len()
                        ));
                    }
                }
                json = json!({ "betti_z2": betti, "witness": witness });
            }
            Ok(Report { slug: "homology", text, json, pass: true })
        }

        Command::Subdivide { input } => {
            let c = load_complex(input)?;
            let b = barycentric(&c)?;
            let text = write_complex(&b.derived);
            let facets: Vec<String> = b.derived.facets().iter().map(|s| s.to_string()).collect();
            Ok(Report { slug: "subdivide", text, json: json!({ "facets": facets }), pass: true })
        }

        Command::SwChains { input } => {
            let c = load_complex(input)?;
            let b = barycentric(&c)?;
            let d = c.dim();
            let mut text = String::new();
            let mut rows = Vec::new();
            for k in 0..=d {
                let (chain, witness) = sw_class(&b, k)?;
                let nontrivial = !witness.is_trivial();
                let label = match (nontrivial, k == d) {
                    (true, true) => "fundamental (nontrivial)",
                    (true, false) => "nontrivial",
                    (false, _) => "trivial",
                };
                text.push_str(&format!(
                    "C_{k}: {} simplices, class: {label}\n",
                    chain.term_count()
                ));
                rows.push(json!({ "k": k, "terms": chain.term_count(), "nontrivial": nontrivial }));
            }
            Ok(Report { slug: "sw-chains", text, json: Value::Array(rows), pass: true })
        }

        Command::Disentangler { input, precision } => {
            let c = load_complex(input)?;
            let p = gds_disentangler(&c, *precision)?;
            Ok(Report {
                slug: "disentangler",
                text: write_poly(&p),
                json: serde_json::to_value(&p)?,
                pass: true,
            })
        }

        Command::Decompose { input } => {
            let c = load_complex(input)?;
            let p = gds_disentangler(&c, 1)?;
            let desc = decompose(&p)?;
            let closed = desc.closedness();
            let mut text = write_descriptor(&desc);
            for (k, ok) in closed.closed_unreduced.iter().enumerate() {
                text.push_str(&format!("# layer {k} closed mod 2: {ok}\n"));
            }
            let json = json!({ "descriptor": desc, "closedness": closed });
            Ok(Report { slug: "decompose", text, json, pass: true })
        }

        Command::Commutator { gds, poly, precision } => {
            let (p, chi) = match (gds, poly) {
                (Some(input), None) => {
                    let c = load_complex(input)?;
                    (gds_disentangler(&c, *precision)?, Some(c.euler_characteristic()))
                }
                (None, Some(path)) => {
                    let text = fs::read_to_string(path)
                        .with_context(|| format!("reading {}", path.display()))?;
                    (parse_poly(&text, *precision)?, None)
                }
                _ => bail!("pass exactly one of --gds <input> or --poly <file>"),
            };
            let comm = p.flip_commutator();
            let mut text = match comm.constant_value() {
                Some(0) => "flip commutator: zero (flip-symmetric)\n".to_string(),
                Some(c) if c == comm.pi() => "flip commutator: constant phase π\n".to_string(),
                Some(c) => format!("flip commutator: constant {c} (π = {})\n", comm.pi()),
                None => format!("flip commutator:\n{}", write_poly(&comm)),
            };
            if let Some(chi) = chi {
                text.push_str(&format!("χ(L) = {chi}\n"));
            }
            let json = json!({
                "constant": comm.constant_value(),
                "chi": chi,
                "commutator": comm,
            });
            Ok(Report { slug: "commutator", text, json, pass: true })
        }

        Command::GaugeAmplitudes { input } => {
            let c = load_complex(input)?;
            let verts: Vec<Vertex> =
                c.k_simplices(0).into_iter().map(|s| s.vertices()[0].clone()).collect();
            if verts.len() > 16 {
                bail!("gauge-amplitudes enumerates 2^n spin configurations; {} vertices is too many (max 16)", verts.len());
            }
            let mut sector: BTreeSet<BTreeSet<Simplex>> = BTreeSet::new();
            for mask in 0u32..(1 << verts.len()) {
                let down: BTreeSet<Vertex> = verts
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, v)| v.clone())
                    .collect();
                sector.insert(gauge_map(&c, &down));
            }
            let mut text = format!("trivial-sector edge configurations: {}\n", sector.len());
            let mut rows = Vec::new();
            for z in &sector {
                let amp = gauged_state_amplitude(&c, z);
                let edges: Vec<String> = z.iter().map(|e| e.to_string()).collect();
                let shown = if edges.is_empty() { ".".to_string() } else { edges.join("; ") };
                text.push_str(&format!("{amp:+}  {shown}\n"));
                rows.push(json!({ "edges": edges, "amplitude": amp }));
            }
            Ok(Report {
                slug: "gauge-amplitudes",
                text,
                json: json!({ "configurations": sector.len(), "amplitudes": rows }),
                pass: true,
            })
        }

        Command::Certify { claim } => match claim {
            CertifyClaim::CochainEq { input } => {
                let b = barycentric(&load_complex(input)?)?;
                certificate_report("certify-cochain-eq", certify_cochain_equals_gds(&b)?)
            }
            CertifyClaim::Wtr { input } => {
                let b = barycentric(&load_complex(input)?)?;
                certificate_report("certify-wtr", certify_wtr(&b)?)
            }
            CertifyClaim::Wotr { input } => {
                let b = barycentric(&load_complex(input)?)?;
                certificate_report("certify-wotr", certify_wotr(&b)?)
            }
            CertifyClaim::Rg { input } => {
                certificate_report("certify-rg", certify_rg_pass(&load_complex(input)?)?)
            }
            CertifyClaim::Ocdual { input } => {
                certificate_report("certify-ocdual", certify_ocdual(&load_complex(input)?)?)
            }
            CertifyClaim::Omega { max_degree } => {
                certificate_report("certify-omega", certify_omega(*max_degree)?)
            }
        },
    }
}
