use clap::{Args, Parser, Subcommand, ValueEnum};

/// Exact arithmetic in free groups, Aut(F2) and the holomorph Hol(F2).
///
/// Words are whitespace-separated generator names with optional integer
/// exponents (`a b^2 a^-1`, `1` for the identity). Endomorphisms are written
/// `a -> a b^2; b -> b`, optionally followed by `| <inverse images>`.
#[derive(Debug, Parser)]
#[command(name = "holkit", version)]
pub struct Cli {
    /// Output style: plain text, or one JSON certificate per line.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Records,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Group {
    /// Words over --alphabet.
    Free,
    /// Automorphisms of the free group over --alphabet.
    Aut,
    /// Hol(F2) elements `(g ; automorphism)`.
    Hol,
    /// F elements `(w ; X)`.
    F,
    /// pi elements `(u ; v ; X)`.
    Pi,
    /// 2x2 integer matrices `[[p,q],[r,s]]`.
    Mat,
}

#[derive(Debug, Clone, Args)]
pub struct AlphabetArg {
    /// Comma-separated generator names.
    #[arg(long, default_value = "a,b")]
    pub alphabet: String,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Freely reduce a word.
    Reduce {
        #[command(flatten)]
        alphabet: AlphabetArg,
        word: String,
    },
    /// Multiply elements left to right.
    Mul {
        #[arg(long, value_enum, default_value_t = Group::Free)]
        group: Group,
        #[command(flatten)]
        alphabet: AlphabetArg,
        #[arg(required = true, num_args = 1..)]
        elements: Vec<String>,
    },
    /// Invert an element.
    Inv {
        #[arg(long, value_enum, default_value_t = Group::Free)]
        group: Group,
        #[command(flatten)]
        alphabet: AlphabetArg,
        element: String,
    },
    /// Apply an endomorphism to a word.
    Apply {
        #[command(flatten)]
        alphabet: AlphabetArg,
        endo: String,
        word: String,
    },
    /// Compose endomorphisms; the rightmost is applied first.
    Compose {
        #[command(flatten)]
        alphabet: AlphabetArg,
        #[arg(required = true, num_args = 1..)]
        endos: Vec<String>,
    },
    /// Abelianization matrix (column j is the exponent vector of image j).
    Ab {
        #[command(flatten)]
        alphabet: AlphabetArg,
        endo: String,
    },
    /// Write a matrix as +-(word in A1, A2).
    SanovRewrite { matrix: String },
    /// Recover w with phi = tau_w.
    IsInner { endo: String },
    /// Decompose an automorphism of F2 as tau_w . eval_x(X).
    DecomposeF { endo: String },
    /// Normal form (u ; v ; X) of a Hol(F2) element of pi.
    NfPi { element: String },
    /// f1: kill the t-letters of a pi element.
    F1 { element: String },
    /// f2: kill the a, b letters of a pi element.
    F2 { element: String },
    /// The embedding pi -> F x F.
    EmbedFf { element: String },
    /// The embedding Hol(F2) -> Aut(F_{2+m}).
    EmbedAut3 {
        #[arg(long, default_value_t = 1)]
        m: u32,
        element: String,
    },
    /// Multiply elements `(g ; h)` of F2 x| F_k for an action table.
    Semidirect {
        /// Automorphism of F2 for each base generator h1, h2, ... in order.
        #[arg(long = "action", required = true)]
        actions: Vec<String>,
        /// Print the image in Hol(F2) x F_k instead of the product.
        #[arg(long)]
        inject: bool,
        #[arg(required = true, num_args = 1..)]
        elements: Vec<String>,
    },
    /// Check the defining relations of pi.
    VerifyRelations {
        /// Additional relations `lhs = rhs` over a, b, taua, taub, ta, tb, x1, x2.
        #[arg(long)]
        extra: Vec<String>,
    },
    /// Run a randomized property suite.
    RandomCheck(RandomCheckArgs),
    /// Re-run the certificates in a records file (or `-` for stdin).
    Replay { path: String },
}

#[derive(Debug, Clone, Args)]
pub struct RandomCheckArgs {
    /// Suite name, or `all`.
    #[arg(long)]
    pub suite: String,
    #[arg(long, default_value_t = 1000, value_parser = clap::value_parser!(u64).range(1..))]
    pub count: u64,
    #[arg(long, env = "HOLKIT_SEED", default_value_t = 20261016)]
    pub seed: u64,
    /// Index of the first sample.
    #[arg(long, default_value_t = 0)]
    pub start: u64,
    /// Bound on sampled word lengths (suite default if omitted).
    #[arg(long)]
    pub max_len: Option<usize>,
    /// Bound on sampled x-words and base words.
    #[arg(long)]
    pub max_x: Option<usize>,
    /// Bound on generator steps for sampled automorphisms.
    #[arg(long)]
    pub max_steps: Option<usize>,
    /// Skip samples needing more letter operations than this.
    #[arg(long)]
    pub max_work: Option<u64>,
}
