//! Command-line front end: coproducts, antipodes, actions, dual products,
//! tree conversions and law checks.
//!
//! [`run`] returns the process exit code: 0 on success, 1 when a law check
//! finds a counterexample, 2 on any usage or input error.

use std::fmt::Display;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use wordhopf::cuts::{
    antipode_l, antipode_l_phrase, delta_l, delta_l_phrase, delta_s, delta_s_word, rho_l, rho_l_word, theta_l,
};
use wordhopf::dual::{dual_product_l, dual_product_mu};
use wordhopf::indicators::{act_l, act_mu, exp_action, Indicator};
use wordhopf::inscriptions::{
    antipode_mu, antipode_mu_phrase, delta_mu, delta_mu_phrase, rho_mu, rho_mu_word, theta_mu, Pairing,
    DEFAULT_INSCRIPTION_CAP,
};
use wordhopf::json::{element_to_json, indicator_from_json, pairing_from_json, tensor_to_json};
use wordhopf::laws::*;
use wordhopf::samples::{nonempty_words, phrases, random_pairing, rng};
use wordhopf::stable::DEFAULT_CUT_CAP;
use wordhopf::trees::{ck_coproduct, decorated_trees, encode, is_unlaced, tree_to_word, word_to_tree, Forest, PlanarTree};
use wordhopf::{
    verify_stability, verify_strong_stability, Alphabet, Basis, Error, Letter, ModuleElement, Phrase, RingMode,
    StableSet, StronglyStableSet, Tensor, Word,
};

#[derive(Parser, Debug)]
#[command(name = "wordhopf", version, about = "Exact coproducts of words and phrases")]
struct Cli {
    #[command(flatten)]
    common: Common,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Common {
    /// Alphabet: "AB" for single-character letters, "Ab,Cd" for tokens.
    #[arg(long, visible_alias = "alphabet", global = true)]
    letters: Option<String>,
    /// Coefficient ring: int, rat or mod:N.
    #[arg(long, default_value = "int", global = true)]
    ring: String,
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Longest word whose cuts are enumerated.
    #[arg(long, default_value_t = DEFAULT_CUT_CAP, global = true)]
    cut_cap: usize,
    /// Longest word whose inscriptions are enumerated.
    #[arg(long, default_value_t = DEFAULT_INSCRIPTION_CAP, global = true)]
    inscription_cap: usize,
    /// Seed for randomized pairings.
    #[arg(long, default_value_t = 0, global = true)]
    seed: u64,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Δ_L of a phrase.
    #[command(name = "coprod-L")]
    CoprodL {
        #[arg(long, default_value = "all")]
        stable: String,
        phrase: String,
    },
    /// The antipode of Δ_L on a phrase.
    #[command(name = "antipode-L")]
    AntipodeL {
        #[arg(long, default_value = "all")]
        stable: String,
        phrase: String,
    },
    /// ρ_L of a non-empty word.
    #[command(name = "rho-L")]
    RhoL {
        #[arg(long, default_value = "all")]
        stable: String,
        word: String,
    },
    /// Δ_S of a word.
    #[command(name = "shuffle-S")]
    ShuffleS {
        #[arg(long, default_value = "all")]
        strong: String,
        word: String,
    },
    /// ρ_μ of a word.
    #[command(name = "rho-mu")]
    RhoMu {
        #[arg(long, default_value = "delta")]
        pairing: String,
        word: String,
    },
    /// Δ_μ of a phrase.
    #[command(name = "coprod-mu")]
    CoprodMu {
        #[arg(long, default_value = "delta")]
        pairing: String,
        phrase: String,
    },
    /// The antipode of Δ_μ on a phrase.
    #[command(name = "antipode-mu")]
    AntipodeMu {
        #[arg(long, default_value = "delta")]
        pairing: String,
        phrase: String,
    },
    /// The action of a word indicator on a word.
    Act {
        /// fX, count:X, len, delta:<word> or table:<file.json>.
        #[arg(long)]
        indicator: String,
        /// Act through ρ_L with this stable set.
        #[arg(long, conflicts_with = "pairing")]
        stable: Option<String>,
        /// Act through ρ_μ with this pairing.
        #[arg(long)]
        pairing: Option<String>,
        /// Apply the exponential of the action (ρ_L only, rational ring).
        #[arg(long)]
        exp: bool,
        word: String,
    },
    /// The boundary word of a decorated planar tree.
    #[command(name = "tree2word")]
    TreeToWord { tree: String },
    /// The tree of an unlaced word.
    #[command(name = "word2tree")]
    WordToTree { word: String },
    /// Compares the admissible-cut coproduct with Δ_μ on single trees.
    #[command(name = "ck-check")]
    CkCheck {
        #[arg(long, default_value_t = 4)]
        max_edges: usize,
    },
    /// Runs one law checker.
    Check {
        #[arg(long)]
        law: Law,
        #[arg(long, value_enum, default_value = "L")]
        coprod: Coprod,
        #[arg(long, default_value = "all")]
        stable: String,
        #[arg(long, default_value = "all")]
        strong: String,
        #[arg(long, default_value = "delta")]
        pairing: String,
        #[arg(long, default_value_t = 5)]
        max_len: usize,
        #[arg(long, default_value_t = 3)]
        max_words: usize,
    },
    /// The dual product p ∘_L q.
    #[command(name = "dual-L")]
    DualL {
        #[arg(long, default_value = "all")]
        stable: String,
        left: String,
        right: String,
    },
    /// The dual product p ∘_μ q; needs a finitely supported pairing.
    #[command(name = "dual-mu")]
    DualMu {
        #[arg(long, default_value = "delta")]
        pairing: String,
        left: String,
        right: String,
    },
    /// Exhaustively checks a stable or strongly stable set.
    #[command(name = "verify-stable")]
    VerifyStable {
        #[arg(long, conflicts_with = "strong")]
        stable: Option<String>,
        #[arg(long)]
        strong: Option<String>,
        #[arg(long, default_value_t = 6)]
        max_len: usize,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Law {
    PreLie,
    Coassoc,
    Bialgebra,
    Counit,
    Antipode,
    Comodule,
    Cojacobi,
    LeadingTerm,
    LeftHanded,
    Closure,
    Duality,
    Associativity,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Coprod {
    #[value(name = "L")]
    L,
    #[value(name = "mu")]
    Mu,
    #[value(name = "S")]
    S,
}

enum Outcome {
    Done(String),
    LawFailed(String),
}

type CliResult<T> = std::result::Result<T, String>;

fn fail(e: Error) -> String {
    format!("error: {e}")
}

struct Ctx {
    alphabet: Option<Alphabet>,
    ring: RingMode,
    json: bool,
    cut_cap: usize,
    inscription_cap: usize,
    seed: u64,
}

impl Ctx {
    fn word(&self, text: &str) -> CliResult<Word> {
        match &self.alphabet {
            Some(a) => a.parse_word(text),
            None => text.parse(),
        }
        .map_err(|e| format!("error in word {text:?}: {e}"))
    }

    fn phrase(&self, text: &str) -> CliResult<Phrase> {
        match &self.alphabet {
            Some(a) => a.parse_phrase(text),
            None => text.parse(),
        }
        .map_err(|e| format!("error in phrase {text:?}: {e}"))
    }

    fn alphabet(&self) -> CliResult<&Alphabet> {
        self.alphabet.as_ref().ok_or_else(|| "error: this command needs --letters".to_string())
    }

    fn stable(&self, desc: &str) -> CliResult<StableSet> {
        let l: StableSet = desc.parse().map_err(|e| format!("error in stable set {desc:?}: {e}"))?;
        Ok(l.with_length_cap(self.cut_cap))
    }

    fn strong(&self, desc: &str) -> CliResult<StronglyStableSet> {
        desc.parse().map_err(|e| format!("error in strongly stable set {desc:?}: {e}"))
    }

    /// `delta`, `delta:<letters>`, `random:<lo>:<hi>` or a JSON file.
    fn pairing(&self, desc: &str) -> CliResult<Pairing> {
        let mu = if desc == "delta" {
            Pairing::delta(self.ring)
        } else if let Some(rest) = desc.strip_prefix("delta:") {
            let a = Alphabet::parse(rest).map_err(|e| format!("error in pairing {desc:?}: {e}"))?;
            Pairing::delta_on(a, self.ring)
        } else if let Some(rest) = desc.strip_prefix("random:") {
            let (lo, hi) = rest
                .split_once(':')
                .and_then(|(a, b)| Some((a.parse::<i64>().ok()?, b.parse::<i64>().ok()?)))
                .filter(|(a, b)| a <= b)
                .ok_or_else(|| format!("error in pairing {desc:?}: expected random:<lo>:<hi>"))?;
            random_pairing(self.alphabet()?, lo, hi, self.ring, &mut rng(self.seed)).map_err(fail)?
        } else {
            let text = std::fs::read_to_string(desc).map_err(|e| format!("error reading pairing file {desc:?}: {e}"))?;
            pairing_from_json(&text, self.ring).map_err(|e| format!("error in pairing file {desc:?}: {e}"))?
        };
        Ok(mu.with_length_cap(self.inscription_cap))
    }

    fn indicator(&self, desc: &str) -> CliResult<Indicator<Word>> {
        let bad = |e: Error| format!("error in indicator {desc:?}: {e}");
        if desc == "len" {
            return Ok(Indicator::<Word>::length(self.ring));
        }
        if let Some(rest) = desc.strip_prefix("count:") {
            return Ok(Indicator::<Word>::letter_count(Letter::new(rest).map_err(bad)?, self.ring));
        }
        if let Some(rest) = desc.strip_prefix("delta:") {
            return Ok(Indicator::delta(self.word(rest)?, self.ring));
        }
        if let Some(path) = desc.strip_prefix("table:") {
            let text = std::fs::read_to_string(path).map_err(|e| format!("error reading indicator file {path:?}: {e}"))?;
            return indicator_from_json(&text, self.ring).map_err(bad);
        }
        if let Some(rest) = desc.strip_prefix('f') {
            if rest.chars().count() == 1 {
                return Ok(Indicator::<Word>::letter_count(Letter::new(rest).map_err(bad)?, self.ring));
            }
        }
        Err(format!("error: unknown indicator {desc:?}; use fX, count:X, len, delta:<word> or table:<file>"))
    }

    fn render<B: Basis>(&self, x: &ModuleElement<B>) -> String {
        if self.json {
            element_to_json(x)
        } else {
            x.to_string()
        }
    }

    fn render_tensor<A: Basis, B: Basis>(&self, x: &ModuleElement<Tensor<A, B>>) -> String {
        if self.json {
            tensor_to_json(x)
        } else {
            x.to_string()
        }
    }

    fn render_value(&self, key: &str, value: impl Display) -> String {
        if self.json {
            serde_json::to_string_pretty(&json!({ key: value.to_string() })).expect("string map")
        } else {
            value.to_string()
        }
    }

    fn report(&self, report: &LawReport) -> Outcome {
        let text = if self.json {
            let mut v = serde_json::to_value(report).expect("plain record");
            v["passed"] = json!(report.passed());
            serde_json::to_string_pretty(&v).expect("plain record")
        } else {
            report.to_string()
        };
        if report.passed() {
            Outcome::Done(text)
        } else {
            Outcome::LawFailed(text)
        }
    }
}

/// Parses `args` (program name first), runs the command and writes its
/// output to `out` and diagnostics to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{e}");
            return code;
        }
    };
    match execute(cli) {
        Ok(Outcome::Done(text)) => {
            let _ = writeln!(out, "{text}");
            0
        }
        Ok(Outcome::LawFailed(text)) => {
            let _ = writeln!(out, "{text}");
            1
        }
        Err(message) => {
            let _ = writeln!(err, "{message}");
            2
        }
    }
}

fn execute(cli: Cli) -> CliResult<Outcome> {
    let c = cli.common;
    let ctx = Ctx {
        alphabet: c
            .letters
            .as_deref()
            .map(Alphabet::parse)
            .transpose()
            .map_err(|e| format!("error in --letters: {e}"))?,
        ring: c.ring.parse().map_err(|e| format!("error in --ring: {e}"))?,
        json: c.json,
        cut_cap: c.cut_cap,
        inscription_cap: c.inscription_cap,
        seed: c.seed,
    };
    let ring = ctx.ring;
    let done = |s: String| Ok(Outcome::Done(s));
    match cli.command {
        Command::CoprodL { stable, phrase } => {
            let l = ctx.stable(&stable)?;
            done(ctx.render_tensor(&delta_l_phrase(&ctx.phrase(&phrase)?, &l, ring).map_err(fail)?))
        }
        Command::AntipodeL { stable, phrase } => {
            let l = ctx.stable(&stable)?;
            done(ctx.render(&antipode_l_phrase(&ctx.phrase(&phrase)?, &l, ring).map_err(fail)?))
        }
        Command::RhoL { stable, word } => {
            let l = ctx.stable(&stable)?;
            done(ctx.render_tensor(&rho_l_word(&ctx.word(&word)?, &l, ring).map_err(fail)?))
        }
        Command::ShuffleS { strong, word } => {
            let s = ctx.strong(&strong)?;
            done(ctx.render_tensor(&delta_s_word(&ctx.word(&word)?, &s, ring).map_err(fail)?))
        }
        Command::RhoMu { pairing, word } => {
            let mu = ctx.pairing(&pairing)?;
            let w = ctx.word(&word)?;
            if w.len() > mu.length_cap() {
                return Err(fail(Error::LengthCapExceeded {
                    len: w.len(),
                    cap: mu.length_cap(),
                }));
            }
            done(ctx.render_tensor(&rho_mu_word(&w, &mu)))
        }
        Command::CoprodMu { pairing, phrase } => {
            let mu = ctx.pairing(&pairing)?;
            done(ctx.render_tensor(&delta_mu_phrase(&ctx.phrase(&phrase)?, &mu).map_err(fail)?))
        }
        Command::AntipodeMu { pairing, phrase } => {
            let mu = ctx.pairing(&pairing)?;
            done(ctx.render(&antipode_mu_phrase(&ctx.phrase(&phrase)?, &mu).map_err(fail)?))
        }
        Command::Act {
            indicator,
            stable,
            pairing,
            exp,
            word,
        } => {
            let f = ctx.indicator(&indicator)?;
            let v = ModuleElement::basis(ctx.word(&word)?, ring);
            let result = match (pairing, exp) {
                (Some(_), true) => return Err("error: --exp acts through ρ_L; use --stable".into()),
                (Some(p), false) => act_mu(&f, &v, &ctx.pairing(&p)?),
                (None, true) => exp_action(&f, &v, &ctx.stable(stable.as_deref().unwrap_or("all"))?),
                (None, false) => act_l(&f, &v, &ctx.stable(stable.as_deref().unwrap_or("all"))?),
            };
            done(ctx.render(&result.map_err(fail)?))
        }
        Command::TreeToWord { tree } => {
            let t: PlanarTree = tree.parse().map_err(|e| format!("error in tree {tree:?}: {e}"))?;
            done(ctx.render_value("word", tree_to_word(&t)))
        }
        Command::WordToTree { word } => {
            let t = word_to_tree(&ctx.word(&word)?).map_err(fail)?;
            done(ctx.render_value("tree", t))
        }
        Command::CkCheck { max_edges } => {
            let letters: Vec<Letter> = match &ctx.alphabet {
                Some(a) => a.letters().to_vec(),
                None => Alphabet::parse("ABCDEF").expect("fixed alphabet").letters().to_vec(),
            };
            if letters.len() < max_edges {
                return Err(format!("error: ck-check needs at least {max_edges} letters"));
            }
            let mu = Pairing::delta(ring);
            let forests: Vec<Forest> = (0..=max_edges)
                .flat_map(|n| decorated_trees(&letters, n))
                .map(Forest::single)
                .collect();
            let report = run_law("CK comparison", &format!("trees ≤ {max_edges} edges"), &forests, |f| {
                let ck = encode(&ck_coproduct(f, ring));
                let dm = delta_mu_phrase(&f.to_phrase(), &mu)?;
                Ok((ck != dm).then(|| (ck.to_string(), dm.to_string())))
            });
            Ok(ctx.report(&report))
        }
        Command::Check {
            law,
            coprod,
            stable,
            strong,
            pairing,
            max_len,
            max_words,
        } => {
            let alphabet = ctx.alphabet()?.clone();
            let sizes = Sizes { max_len, max_words };
            let report = match coprod {
                Coprod::L => check_l(law, &ctx.stable(&stable)?, &alphabet, sizes, ring)?,
                Coprod::Mu => check_mu(law, &ctx.pairing(&pairing)?, &alphabet, sizes, ring)?,
                Coprod::S => {
                    let s = ctx.strong(&strong)?;
                    match law {
                        Law::Coassoc => check_coassoc(
                            |x| delta_s(x, &s),
                            &alphabet.words_up_to(max_len),
                            ring,
                            &format!("words ≤ {max_len}, S = {s}"),
                        ),
                        other => return Err(format!("error: law {other:?} is not available for Δ_S")),
                    }
                }
            };
            let report = if pairing.starts_with("random:") && matches!(coprod, Coprod::Mu) {
                report.with_seed(ctx.seed)
            } else {
                report
            };
            Ok(ctx.report(&report))
        }
        Command::DualL { stable, left, right } => {
            let l = ctx.stable(&stable)?;
            let p = ctx.phrase(&left)?;
            let q = ctx.phrase(&right)?;
            done(ctx.render(&dual_product_l(&p, &q, &l, ring).map_err(fail)?))
        }
        Command::DualMu { pairing, left, right } => {
            let mu = ctx.pairing(&pairing)?;
            let p = ctx.phrase(&left)?;
            let q = ctx.phrase(&right)?;
            done(ctx.render(&dual_product_mu(&p, &q, &mu).map_err(fail)?))
        }
        Command::VerifyStable { stable, strong, max_len } => {
            let alphabet = ctx.alphabet()?;
            let (passed, checked, detail) = match (stable, strong) {
                (_, Some(s)) => {
                    let s = ctx.strong(&s)?;
                    let r = verify_strong_stability(&s, alphabet, max_len);
                    (r.passed(), r.words_checked, r.counterexample.map(|c| format!("{c:?}")))
                }
                (s, None) => {
                    let l = ctx.stable(s.as_deref().unwrap_or("all"))?;
                    let r = verify_stability(&l, alphabet, max_len);
                    (r.passed(), r.words_checked, r.counterexample.map(|c| format!("{c:?}")))
                }
            };
            let text = if ctx.json {
                serde_json::to_string_pretty(&json!({
                    "passed": passed,
                    "max_len": max_len,
                    "words_checked": checked,
                    "counterexample": detail,
                }))
                .expect("plain record")
            } else {
                let status = if passed { "PASS" } else { "FAIL" };
                let mut s = format!("{status} stability on words ≤ {max_len} ({checked} words)");
                if let Some(d) = &detail {
                    s.push_str(&format!("\n  counterexample: {d}"));
                }
                s
            };
            Ok(if passed { Outcome::Done(text) } else { Outcome::LawFailed(text) })
        }
    }
}

#[derive(Clone, Copy)]
struct Sizes {
    max_len: usize,
    max_words: usize,
}

fn pairs_within(items: &[Phrase], fits: impl Fn(&Phrase, &Phrase) -> bool) -> Vec<Pair<Phrase>> {
    items
        .iter()
        .flat_map(|a| items.iter().filter(|b| fits(a, b)).map(move |b| Pair(a.clone(), b.clone())))
        .collect()
}

fn triples_within(items: &[Phrase], fits: impl Fn(&[&Phrase]) -> bool) -> Vec<Triple<Phrase>> {
    let mut out = Vec::new();
    for a in items {
        for b in items {
            for c in items {
                if fits(&[a, b, c]) {
                    out.push(Triple(a.clone(), b.clone(), c.clone()));
                }
            }
        }
    }
    out
}

fn check_l(law: Law, l: &StableSet, alphabet: &Alphabet, sizes: Sizes, ring: RingMode) -> CliResult<LawReport> {
    let Sizes { max_len, max_words } = sizes;
    let words = nonempty_words(alphabet, max_len);
    let strict = phrases(alphabet, max_len, max_words, true);
    let d = |x: &ModuleElement<Phrase>| delta_l(x, l);
    let r = |x: &ModuleElement<Word>| rho_l(x, l);
    let on_words = format!("words ≤ {max_len}, L = {l}");
    let on_phrases = format!("strict phrases ≤ {max_len} letters, ≤ {max_words} words, L = {l}");
    let letters = |ps: &[&Phrase]| ps.iter().map(|p| p.letter_count()).sum::<usize>();
    Ok(match law {
        Law::PreLie => check_pre_lie(r, &words, ring, &on_words),
        Law::Cojacobi => check_cojacobi(r, &words, ring, &on_words),
        Law::Coassoc => check_coassoc(d, &strict, ring, &on_phrases),
        Law::Counit => check_counit(d, &strict, ring, &on_phrases),
        Law::Antipode => check_antipode(d, |x| antipode_l(x, l), &strict, ring, &on_phrases),
        Law::Bialgebra => {
            let pairs = pairs_within(&strict, |a, b| letters(&[a, b]) <= max_len);
            check_bialgebra(d, &pairs, ring, &on_phrases)
        }
        Law::Comodule => check_comodule(|x: &ModuleElement<Word>| x.try_apply(|u| theta_l(u, l, ring)), d, &words, ring, &on_words),
        Law::LeadingTerm => check_leading_term(d, r, &words, ring, &on_words),
        Law::LeftHanded => check_left_handed(d, &words, ring, &on_words),
        Law::Closure => {
            let inside = |p: &Phrase| p.words().iter().all(|w| l.contains(w));
            let sub: Vec<Phrase> = strict.iter().filter(|p| inside(p)).cloned().collect();
            check_hopf_closure(d, inside, &sub, ring, &format!("phrases of L-words ≤ {max_len} letters, L = {l}"))
        }
        Law::Duality => {
            let pairs = pairs_within(&strict, |a, b| letters(&[a, b]) <= max_len && a.len() + b.len() <= max_words);
            check_duality(d, |p, q| dual_product_l(p, q, l, ring), &strict, &pairs, ring, &on_phrases)
        }
        Law::Associativity => {
            let triples = triples_within(&strict, |ps| letters(ps) <= max_len && ps.iter().map(|p| p.len()).sum::<usize>() <= max_words);
            check_associative(|p, q| dual_product_l(p, q, l, ring), &triples, ring, &on_phrases)
        }
    })
}

fn check_mu(law: Law, mu: &Pairing, alphabet: &Alphabet, sizes: Sizes, ring: RingMode) -> CliResult<LawReport> {
    let Sizes { max_len, max_words } = sizes;
    let words = alphabet.words_up_to(max_len);
    let loose = phrases(alphabet, max_len, max_words, false);
    let d = |x: &ModuleElement<Phrase>| delta_mu(x, mu);
    let r = |x: &ModuleElement<Word>| rho_mu(x, mu);
    let on_words = format!("words ≤ {max_len}, μ = {mu}");
    let on_phrases = format!("phrases ≤ {max_len} letters, ≤ {max_words} words, μ = {mu}");
    let letters = |ps: &[&Phrase]| ps.iter().map(|p| p.letter_count()).sum::<usize>();
    let count = |ps: &[&Phrase]| ps.iter().map(|p| p.len()).sum::<usize>();
    Ok(match law {
        Law::PreLie => check_pre_lie(r, &words, ring, &on_words),
        Law::Cojacobi => check_cojacobi(r, &words, ring, &on_words),
        Law::Coassoc => check_coassoc(d, &loose, ring, &on_phrases),
        Law::Counit => check_counit(d, &loose, ring, &on_phrases),
        Law::Antipode => check_antipode(d, |x| antipode_mu(x, mu), &loose, ring, &on_phrases),
        Law::Bialgebra => {
            let pairs = pairs_within(&loose, |a, b| letters(&[a, b]) <= max_len && count(&[a, b]) <= max_words);
            check_bialgebra(d, &pairs, ring, &on_phrases)
        }
        Law::Comodule => check_comodule(|x: &ModuleElement<Word>| x.try_apply(|u| theta_mu(u, mu)), d, &words, ring, &on_words),
        Law::LeadingTerm => check_leading_term(d, r, &words, ring, &on_words),
        Law::LeftHanded => check_left_handed(d, &words, ring, &on_words),
        Law::Closure => {
            let inside = |p: &Phrase| p.words().iter().all(is_unlaced);
            let sub: Vec<Phrase> = loose.iter().filter(|p| inside(p)).cloned().collect();
            check_hopf_closure(d, inside, &sub, ring, &format!("phrases of unlaced words ≤ {max_len} letters, μ = {mu}"))
        }
        Law::Duality => {
            // Δ_μ preserves letters + 2·words, so this range holds every
            // product of the sampled pairs.
            let bound = max_len + 2 * max_words;
            let range: Vec<Phrase> = phrases(alphabet, bound.saturating_sub(2), bound / 2, false)
                .into_iter()
                .filter(|p| p.letter_count() + 2 * p.len() <= bound)
                .collect();
            let pairs = pairs_within(&loose, |a, b| letters(&[a, b]) <= max_len && count(&[a, b]) <= max_words);
            check_duality(d, |p, q| dual_product_mu(p, q, mu), &range, &pairs, ring, &on_phrases)
        }
        Law::Associativity => {
            let triples = triples_within(&loose, |ps| letters(ps) <= max_len && count(ps) <= max_words);
            check_associative(|p, q| dual_product_mu(p, q, mu), &triples, ring, &on_phrases)
        }
    })
}
