use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "equitable", version, about = "Exact matrices, bases and checks for equitable U_q(sl2) modules")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub global: GlobalOpts,
}

#[derive(Args, Debug, Clone)]
pub struct GlobalOpts {
    /// Dimension parameter: a single value `N` or an inclusive range `A..B`.
    #[arg(long, global = true)]
    pub d: Option<String>,
    /// Arithmetic backend.
    #[arg(long, global = true, value_enum, default_value_t = Backend::Symbolic)]
    pub backend: Backend,
    /// Rational value of q for the rational backend; a hint for `recognize`.
    #[arg(long, global = true)]
    pub q: Option<String>,
    /// Free pairings as `key=value` pairs with keys xy*, yz*, zx*, yx*, zy*.
    #[arg(long, global = true, value_delimiter = ',')]
    pub scalars: Vec<String>,
    /// Output format: the matrix file format or an aligned table.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Write output to a file instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Maximum number of terms in any intermediate polynomial.
    #[arg(long, global = true)]
    pub term_bound: Option<usize>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Backend {
    Symbolic,
    Rational,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Table,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Suite {
    All,
    Algebra,
    Rotator,
    Transition,
    Pairing,
    Flags,
    ClosedForm,
    Shapes,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print one matrix, basis or triple.
    Emit(EmitArgs),
    /// Run verification suites over a range of d.
    Verify(VerifyArgs),
    /// Print the transition matrix between two bases of one space.
    Transition(TransitionArgs),
    /// Print the Gram matrix of a basis of V against a basis of V*.
    Gram(GramArgs),
    /// Recognize a module structure from a diagonal/bidiagonal triple.
    Recognize(RecognizeArgs),
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
pub struct EmitArgs {
    /// A canonical family such as `E`, `ZN^t_{q^-1}Z` or `P`.
    #[arg(long)]
    pub family: Option<String>,
    /// A representing matrix `SPACE:BASIS:GENERATOR`, for example `V:[y]row:x`.
    #[arg(long)]
    pub rep: Option<String>,
    /// A normalized basis `SPACE:BASIS`, emitted with the vectors as columns.
    #[arg(long)]
    pub basis: Option<String>,
    /// The basis-1 triple `x, y, z` on V in `[x]row`, ready for `recognize`.
    #[arg(long)]
    pub triple: bool,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(long, value_enum, default_values_t = [Suite::All], value_delimiter = ',')]
    pub suite: Vec<Suite>,
}

#[derive(Args, Debug)]
pub struct TransitionArgs {
    #[arg(long, default_value = "V")]
    pub space: String,
    #[arg(long)]
    pub from: String,
    #[arg(long)]
    pub to: String,
}

#[derive(Args, Debug)]
pub struct GramArgs {
    /// Basis of V.
    #[arg(long)]
    pub v: String,
    /// Basis of V*.
    #[arg(long)]
    pub vdual: String,
}

#[derive(Args, Debug)]
pub struct RecognizeArgs {
    /// A triple file with keys x, y, z holding matrices.
    pub input: PathBuf,
    /// The recurrence parameter, when the diagonals are too short to determine it.
    #[arg(long)]
    pub b: Option<String>,
}
