use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "tessarine", version, about = "Hypercomplex algebra toolkit", propagate_version = true)]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

const BC_SYNTAX: &str = "Elements are written `w + x*i + y*h + z*k` with exact literals \
(`3`, `-2/7`, `0.125`, `1e-3`); i² = h² = -1, k = ih, k² = +1.";

const MC_SYNTAX: &str = "Elements are 2^n comma-separated literals in basis order \
1, i1, i2, i1i2, i3, i1i3, i2i3, i1i2i3, …  (bit m-1 of the index marks unit i_m).";

const BIQ_SYNTAX: &str = "Elements are written `(re,im) + (re,im)*i + (re,im)*j + (re,im)*k`; \
the imaginary part of each pair is the coefficient of the central scalar imaginary ω. \
A plain literal `c` stands for `(c,0)`.";

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Bicomplex arithmetic (exact).
    #[command(after_help = BC_SYNTAX)]
    Bc {
        #[command(subcommand)]
        op: BcOp,
    },
    /// Multicomplex arithmetic of order n (exact).
    #[command(after_help = MC_SYNTAX)]
    Mc {
        /// Number of imaginary units (1..=16).
        #[arg(long, global = true, default_value_t = 2)]
        order: usize,
        #[command(subcommand)]
        op: McOp,
    },
    /// Four-unit algebras on (1, a, b, c) with ab = c.
    Algebra {
        #[command(subcommand)]
        op: AlgebraOp,
    },
    /// Polynomial equations with bicomplex or multicomplex coefficients.
    Poly {
        #[command(subcommand)]
        op: PolyOp,
    },
    /// Biquaternions.
    #[command(after_help = BIQ_SYNTAX)]
    Biq {
        #[command(subcommand)]
        op: BiqOp,
    },
    /// Radical equations and their congeners.
    Surd {
        #[command(subcommand)]
        op: SurdOp,
    },
    /// Run every case file in a directory and compare with its expectation.
    Corpus {
        /// Directory of `*.json` case files.
        path: PathBuf,
    },
}

#[derive(Debug, Subcommand)]
pub enum BcOp {
    Add {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    Sub {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    Mul {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    Pow {
        #[arg(allow_hyphen_values = true)]
        a: String,
        n: u32,
    },
    Inverse {
        #[arg(allow_hyphen_values = true)]
        a: String,
    },
    /// Idempotent split into the pair of complex components.
    Decompose {
        #[arg(allow_hyphen_values = true)]
        a: String,
    },
    /// Which zero-divisor ideal the element lies in.
    Ideal {
        #[arg(allow_hyphen_values = true)]
        a: String,
    },
    /// Product of the element with its three conjugates, |Z|²·|Z'|².
    Norm {
        #[arg(allow_hyphen_values = true)]
        a: String,
    },
    /// The three conjugates (i, h and ih).
    Conj {
        #[arg(allow_hyphen_values = true)]
        a: String,
    },
}

#[derive(Debug, Subcommand)]
pub enum McOp {
    Add {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    Mul {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    Inverse {
        #[arg(allow_hyphen_values = true)]
        a: String,
    },
    /// Split into 2^(n-1) complex components.
    Split {
        #[arg(allow_hyphen_values = true)]
        a: String,
    },
    ZeroDivisor {
        #[arg(allow_hyphen_values = true)]
        a: String,
    },
    /// The 2^(n-1) primitive idempotents.
    Idempotents,
}

#[derive(Debug, Subcommand)]
pub enum AlgebraOp {
    /// Multiplication table of a named system.
    Table { system: String },
    /// Every associative table with identity for a signature a², b² ∈ {-1, +1}.
    Derive {
        #[arg(long, allow_hyphen_values = true)]
        sq_a: i8,
        #[arg(long, allow_hyphen_values = true)]
        sq_b: i8,
    },
    /// Product of two elements `w,x,y,z` in a named system.
    Mul {
        system: String,
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    /// det of left multiplication by `w,x,y,z`.
    Norm {
        system: String,
        #[arg(allow_hyphen_values = true)]
        a: String,
    },
}

#[derive(Debug, Subcommand)]
pub enum PolyOp {
    /// Solve Σ aₗ zˡ = 0.
    #[command(after_help = "The coefficient file holds one element per line, lowest degree first, \
in the element syntax of the chosen algebra. Blank lines and lines starting with '#' are skipped. \
Use `-` to read from standard input.")]
    Solve {
        /// `bicomplex` or `mc:<n>`.
        #[arg(long)]
        algebra: String,
        #[arg(long)]
        coeffs: PathBuf,
    },
}

#[derive(Debug, Subcommand)]
pub enum BiqOp {
    Mul {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    Nullifier {
        #[arg(allow_hyphen_values = true)]
        a: String,
    },
    /// Image under the fixed 2×2 complex representation.
    Matrix {
        #[arg(allow_hyphen_values = true)]
        a: String,
    },
    /// Bicomplex image of an element c0 + c1·i (ω ↦ h).
    Complanar {
        #[arg(allow_hyphen_values = true)]
        a: String,
    },
    /// All isolated solutions of q² = q·b + c.
    SolveQuadratic {
        #[arg(long, allow_hyphen_values = true)]
        b: String,
        #[arg(long, allow_hyphen_values = true)]
        c: String,
    },
}

#[derive(Debug, Subcommand)]
pub enum SurdOp {
    /// Congeners, stock equation, root assignment and fractional order.
    #[command(after_help = "Equations use x, + - * / ^, parentheses, rational literals and sqrt(...), \
e.g. \"2*x + sqrt(x^2 - 7) = 5\".")]
    Analyze {
        #[arg(allow_hyphen_values = true)]
        equation: String,
        /// Same as `--format json`.
        #[arg(long)]
        json: bool,
    },
}
