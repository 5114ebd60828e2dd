mod render;

use std::process::ExitCode;

use assocform::apolarity::{catalecticant, verify_inverse_system};
use assocform::num::int;
use assocform::poly::binary::{discriminant_nonzero, sylvester_resultant};
use assocform::poly::{parse_form, parse_form_of_degree, Form, FormTuple};
use assocform::stability::PairPoint;
use assocform::verify::run_named;
use assocform::{
    associated_form, associated_form_tuple, b_map, form_stability, hm_index, nabla, one_ps_limit,
    subspace_stability, wprime_membership, DualForm, Error, Frame, GradedQuotient, Rational, Subspace,
};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use render::{dual, form, frame, rational, subspace, Report};

#[derive(Parser, Debug)]
#[command(name = "assocform", version, about = "Associated forms of binary and ternary forms")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Degree d of the source form; tuples and pencils have degree d - 1.
    #[arg(long, global = true)]
    d: Option<u32>,

    /// Number of variables.
    #[arg(long, global = true, default_value_t = 2)]
    n: usize,

    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Trials per degree for `verify`.
    #[arg(long, global = true)]
    trials: Option<usize>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    /// Suite name for `verify`, or `all`.
    #[arg(long, global = true, default_value = "all")]
    suite: String,

    /// Frame matrix `a,b,c,d` (rows `[a b]`, `[c d]`) for `hm-index` and `limit`.
    #[arg(long, global = true, allow_hyphen_values = true)]
    frame: Option<String>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Associated form of a form of degree d.
    Assoc {
        #[arg(allow_hyphen_values = true)]
        form: String,
    },
    /// Associated form of n forms of degree d - 1.
    AssocTuple {
        #[arg(allow_hyphen_values = true)]
        forms: Vec<String>,
    },
    /// Catalecticant of a binary dual form of even degree.
    Cat {
        #[arg(allow_hyphen_values = true)]
        form: String,
    },
    /// Sylvester resultant of two binary forms.
    Res {
        #[arg(allow_hyphen_values = true)]
        f: String,
        #[arg(allow_hyphen_values = true)]
        g: String,
    },
    /// Whether the partials of a binary form have nonzero resultant.
    Disc {
        #[arg(allow_hyphen_values = true)]
        form: String,
    },
    /// Hilbert function of the quotient by n forms of degree d - 1.
    Hilbert {
        #[arg(allow_hyphen_values = true)]
        forms: Vec<String>,
    },
    /// Compare the ideal of n forms with the apolar ideal of its associated form.
    InverseSystem {
        #[arg(allow_hyphen_values = true)]
        forms: Vec<String>,
    },
    /// Degree d - 1 part of the apolar ideal of a dual form.
    BMap {
        #[arg(allow_hyphen_values = true)]
        form: String,
    },
    /// Pencil spanned by the partials of a binary form.
    Nabla {
        #[arg(allow_hyphen_values = true)]
        form: String,
    },
    /// Stability of a binary form.
    Stability {
        #[arg(allow_hyphen_values = true)]
        form: String,
    },
    /// Stability of a pencil of binary forms.
    SubspaceStability {
        #[arg(allow_hyphen_values = true)]
        f: String,
        #[arg(allow_hyphen_values = true)]
        g: String,
    },
    /// Hilbert-Mumford index of a pencil in a frame.
    HmIndex {
        #[arg(allow_hyphen_values = true)]
        f: String,
        #[arg(allow_hyphen_values = true)]
        g: String,
    },
    /// Limit of a pencil under the frame's one-parameter subgroup.
    Limit {
        #[arg(allow_hyphen_values = true)]
        f: String,
        #[arg(allow_hyphen_values = true)]
        g: String,
    },
    /// Whether the four partials of a pair are dependent.
    Wprime {
        #[arg(allow_hyphen_values = true)]
        f: String,
        #[arg(allow_hyphen_values = true)]
        g: String,
    },
    /// Run the randomized verification suites.
    Verify,
}

enum Failure {
    Usage(String),
    Lib(Error),
    Verify(Report),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

type Outcome = Result<Report, Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    let op = operation_name(&cli.command);
    match dispatch(&cli) {
        Ok(report) => {
            println!("{}", report.emit(cli.format));
            ExitCode::SUCCESS
        }
        Err(Failure::Verify(report)) => {
            println!("{}", report.emit(cli.format));
            ExitCode::from(3)
        }
        Err(Failure::Usage(message)) => {
            emit_error(cli.format, op, "usage", &message);
            ExitCode::from(1)
        }
        Err(Failure::Lib(e)) => {
            emit_error(cli.format, op, e.code(), &e.to_string());
            ExitCode::from(if e.is_domain() { 2 } else { 1 })
        }
    }
}

fn emit_error(format: Format, op: &str, code: &str, message: &str) {
    match format {
        Format::Json => {
            let v = json!({
                "version": render::VERSION,
                "operation": op,
                "error": { "code": code, "message": message },
            });
            println!("{}", serde_json::to_string_pretty(&v).expect("json"));
        }
        Format::Text => eprintln!("error[{code}]: {message}"),
    }
}

fn operation_name(c: &Command) -> &'static str {
    match c {
        Command::Assoc { .. } => "assoc",
        Command::AssocTuple { .. } => "assoc-tuple",
        Command::Cat { .. } => "cat",
        Command::Res { .. } => "res",
        Command::Disc { .. } => "disc",
        Command::Hilbert { .. } => "hilbert",
        Command::InverseSystem { .. } => "inverse-system",
        Command::BMap { .. } => "b-map",
        Command::Nabla { .. } => "nabla",
        Command::Stability { .. } => "stability",
        Command::SubspaceStability { .. } => "subspace-stability",
        Command::HmIndex { .. } => "hm-index",
        Command::Limit { .. } => "limit",
        Command::Wprime { .. } => "wprime",
        Command::Verify => "verify",
    }
}

impl Cli {
    fn require_d(&self) -> Result<u32, Failure> {
        self.d.ok_or_else(|| Failure::Usage("--d is required for this operation".into()))
    }

    fn require_binary(&self) -> Result<(), Failure> {
        if self.n == 2 {
            Ok(())
        } else {
            Err(Failure::Usage("this operation is for binary forms (--n 2)".into()))
        }
    }

    /// Parses a form, checking its degree against `degree` when one is known.
    fn parse(&self, text: &str, degree: Option<u32>) -> Result<Form, Failure> {
        Ok(match degree {
            Some(k) => parse_form_of_degree(text, self.n, k)?,
            None => parse_form(text, self.n)?,
        })
    }

    /// `n` generators of degree `d - 1`.
    fn tuple(&self, texts: &[String]) -> Result<FormTuple, Failure> {
        let d = self.require_d()?;
        if texts.len() != self.n {
            return Err(Failure::Usage(format!(
                "expected {} forms, found {}",
                self.n,
                texts.len()
            )));
        }
        let k = d.checked_sub(1).ok_or_else(|| Failure::Usage("--d must be positive".into()))?;
        let forms = texts
            .iter()
            .map(|t| self.parse(t, Some(k)))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(FormTuple::new(forms)?)
    }

    /// Two binary forms of a common degree, `d - 1` when `--d` is given.
    fn pencil_forms(&self, f: &str, g: &str) -> Result<(Form, Form), Failure> {
        self.require_binary()?;
        let k = self.d.map(|d| d.saturating_sub(1));
        let a = self.parse(f, k)?;
        let b = self.parse(g, Some(k.unwrap_or(a.degree())))?;
        Ok((a, b))
    }

    fn pencil(&self, f: &str, g: &str) -> Result<Subspace, Failure> {
        let (a, b) = self.pencil_forms(f, g)?;
        let w = Subspace::span(2, a.degree(), &[a, b])?;
        if w.dim() != 2 {
            return Err(Error::Dimension {
                expected: 2,
                found: w.dim(),
            }
            .into());
        }
        Ok(w)
    }

    fn frame(&self) -> Result<Frame, Failure> {
        let text = self
            .frame
            .as_deref()
            .ok_or_else(|| Failure::Usage("--frame a,b,c,d is required".into()))?;
        let entries: Vec<i64> = text
            .split(',')
            .map(|s| s.trim().parse::<i64>())
            .collect::<Result<_, _>>()
            .map_err(|e| Failure::Usage(format!("--frame: {e}")))?;
        let [a, b, c, d] = entries[..] else {
            return Err(Failure::Usage("--frame needs four integers".into()));
        };
        Ok(Frame::from_ints(a, b, c, d)?)
    }
}

fn dispatch(cli: &Cli) -> Outcome {
    let op = operation_name(&cli.command);
    let mut r = Report::new(op);
    match &cli.command {
        Command::Assoc { form: text } => {
            let d = cli.require_d()?;
            let f = cli.parse(text, Some(d))?;
            r.input = json!({ "form": form(&f), "d": d, "n": cli.n });
            let q = GradedQuotient::build(&f.gradient());
            r.flags.hsop = Some(q.is_ok());
            let a = associated_form(&f)?;
            if cli.n == 2 {
                r.flags.cat_nonzero = Some(nonzero(&catalecticant(&a)?));
            }
            r.output = json!({ "associated_form": dual(&a) });
            if let Ok(q) = q {
                r.witnesses = json!({
                    "hilbert_function": q.hilbert_function().dims,
                    "jac_socle": rational(q.jac_socle()),
                });
            }
        }
        Command::AssocTuple { forms } => {
            let t = cli.tuple(forms)?;
            r.input = json!({ "forms": t.entries().iter().map(form).collect::<Vec<_>>(), "d": cli.d, "n": cli.n });
            let a = associated_form_tuple(&t)?;
            r.flags.hsop = Some(true);
            if cli.n == 2 {
                r.flags.cat_nonzero = Some(nonzero(&catalecticant(&a)?));
            }
            r.output = json!({ "associated_form": dual(&a) });
        }
        Command::Cat { form: text } => {
            cli.require_binary()?;
            let f = DualForm::new(cli.parse(text, None)?);
            r.input = json!({ "form": dual(&f) });
            let c = catalecticant(&f)?;
            r.flags.cat_nonzero = Some(nonzero(&c));
            r.output = json!({ "catalecticant": rational(&c) });
        }
        Command::Res { f, g } => {
            cli.require_binary()?;
            let (a, b) = (cli.parse(f, None)?, cli.parse(g, None)?);
            r.input = json!({ "f": form(&a), "g": form(&b) });
            let res = sylvester_resultant(&a, &b)?;
            r.output = json!({ "resultant": rational(&res), "common_root": !nonzero(&res) });
        }
        Command::Disc { form: text } => {
            cli.require_binary()?;
            let f = cli.parse(text, cli.d)?;
            r.input = json!({ "form": form(&f) });
            let t = discriminant_nonzero(&f)?;
            r.flags.hsop = Some(t.nonzero);
            r.output = json!({ "nonzero": t.nonzero });
            r.witnesses = json!({ "resultant": rational(&t.resultant) });
        }
        Command::Hilbert { forms } => {
            let t = cli.tuple(forms)?;
            r.input = tuple_input(cli, &t);
            let q = GradedQuotient::build(&t)?;
            r.flags.hsop = Some(true);
            let h = q.hilbert_function();
            r.output = json!({ "dims": h.dims, "symmetric": h.is_symmetric(), "total": h.total() });
        }
        Command::InverseSystem { forms } => {
            let t = cli.tuple(forms)?;
            r.input = tuple_input(cli, &t);
            let rep = verify_inverse_system(&t)?;
            r.flags.hsop = Some(true);
            r.output = json!({
                "holds": rep.holds(),
                "associated_form": dual(&rep.associated_form),
            });
            r.witnesses = json!({
                "generators_annihilate": rep.generators_annihilate,
                "ideal_dims": rep.ideal_dims,
                "apolar_dims": rep.apolar_dims,
            });
        }
        Command::BMap { form: text } => {
            let d = cli.require_d()?;
            let f = DualForm::new(cli.parse(text, None)?);
            r.input = json!({ "form": dual(&f), "d": d, "n": cli.n });
            let b = b_map(&f, d)?;
            r.flags.hsop = Some(b.hsop);
            r.flags.u_res_member = Some(b.u_res_member);
            if cli.n == 2 {
                r.flags.cat_nonzero = Some(nonzero(&catalecticant(&f)?));
            }
            r.output = json!({ "subspace": subspace(&b.subspace), "dim": b.subspace.dim() });
        }
        Command::Nabla { form: text } => {
            cli.require_binary()?;
            let f = cli.parse(text, cli.d)?;
            r.input = json!({ "form": form(&f) });
            let w = nabla(&f)?;
            r.output = json!({ "subspace": subspace(&w) });
        }
        Command::Stability { form: text } => {
            cli.require_binary()?;
            let f = cli.parse(text, cli.d)?;
            r.input = json!({ "form": form(&f) });
            let c = form_stability(&f)?;
            r.output = json!({
                "verdict": c.verdict.as_str(),
                "polystable": c.polystable,
                "degree": c.degree,
            });
            r.witnesses = json!({
                "max_multiplicity": c.max_multiplicity,
                "strata": c.strata.iter().map(|(s, e)| json!({ "factor": form(s), "multiplicity": e })).collect::<Vec<_>>(),
                "locus": form(&c.witness),
                "frame": c.frame.as_ref().map(frame),
                "mu": c.mu,
            });
        }
        Command::SubspaceStability { f, g } => {
            let w = cli.pencil(f, g)?;
            r.input = json!({ "subspace": subspace(&w) });
            let c = subspace_stability(&w)?;
            r.output = json!({
                "verdict": c.verdict.as_str(),
                "polystable": c.polystable,
                "degree": c.degree,
            });
            r.witnesses = json!({
                "gcd": form(&c.gcd),
                "i": c.witness.i,
                "j": c.witness.j,
                "locus": form(&c.witness.locus),
                "frame": c.frame.as_ref().map(frame),
                "mu": c.mu,
                "closed_orbit": c.closed_orbit.as_ref().map(subspace),
                "polystable_frame": c.polystable_frame.as_ref().map(frame),
            });
        }
        Command::HmIndex { f, g } => {
            let w = cli.pencil(f, g)?;
            let fr = cli.frame()?;
            r.input = json!({ "subspace": subspace(&w), "frame": frame(&fr) });
            let h = hm_index(&w, &fr)?;
            r.output = json!({ "mu": h.mu, "semistable": h.semistable(), "stable": h.stable() });
            r.witnesses = json!({ "k": h.k, "l": h.l, "moved": subspace(&fr.apply_subspace(&w)) });
        }
        Command::Limit { f, g } => {
            let w = cli.pencil(f, g)?;
            let fr = cli.frame()?;
            r.input = json!({ "subspace": subspace(&w), "frame": frame(&fr) });
            let lim = one_ps_limit(&w, &fr)?;
            let h = hm_index(&w, &fr)?;
            r.output = json!({ "limit": subspace(&lim) });
            r.witnesses = json!({ "mu": h.mu, "k": h.k, "l": h.l });
        }
        Command::Wprime { f, g } => {
            let (a, b) = cli.pencil_forms(f, g)?;
            r.input = json!({ "f1": form(&a), "f2": form(&b) });
            let res = wprime_membership(&PairPoint::new(a, b)?)?;
            r.output = json!({ "member": res.member });
            r.witnesses = json!({
                "rank": res.rank,
                "trivial": res.trivial,
                "determinant": res.determinant.as_ref().map(rational),
            });
        }
        Command::Verify => {
            let degrees = cli.d.map(|d| vec![d]);
            let reports = run_named(&cli.suite, cli.seed, cli.trials, degrees, cli.n)
                .ok_or_else(|| Failure::Usage(format!("unknown suite {:?}", cli.suite)))?;
            let passed = reports.iter().all(|s| s.all_passed());
            r.input = json!({
                "suite": cli.suite,
                "seed": cli.seed,
                "trials": cli.trials,
                "d": cli.d,
                "n": cli.n,
            });
            r.output = json!({
                "passed": passed,
                "suites": reports.iter().map(|s| json!({
                    "suite": s.suite.name(),
                    "degrees": s.degrees,
                    "checks": s.checks,
                    "passed": s.passed,
                    "failed": s.failed(),
                    "rejections": s.rejections,
                    "first_counterexample": s.first_counterexample,
                })).collect::<Vec<Value>>(),
            });
            if !passed {
                return Err(Failure::Verify(r));
            }
        }
    }
    Ok(r)
}

fn tuple_input(cli: &Cli, t: &FormTuple) -> Value {
    json!({
        "forms": t.entries().iter().map(form).collect::<Vec<_>>(),
        "d": cli.d,
        "n": cli.n,
    })
}

fn nonzero(q: &Rational) -> bool {
    *q != int(0)
}
