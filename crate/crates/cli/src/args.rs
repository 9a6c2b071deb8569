use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "hodgev", version, about = "Hodge ideals and microlocal V-filtrations of weighted homogeneous isolated singularities")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Output format.
    #[arg(long, value_enum, global = true, default_value = "text")]
    pub format: Format,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Args, Debug, Clone)]
pub struct PolyArgs {
    /// Polynomial, e.g. "x^3+y^3+z^3".
    #[arg(short = 'f', long = "poly")]
    pub f: String,
    /// Variable order; defaults to first appearance in the polynomial.
    #[arg(long, value_delimiter = ',')]
    pub vars: Option<Vec<String>>,
    /// Weights w_i; inferred when omitted.
    #[arg(long, value_delimiter = ',')]
    pub weights: Option<Vec<String>>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Milnor number, thresholds, spectrum and Bernstein–Sato roots.
    Invariants(PolyArgs),
    /// Spectrum with multiplicities.
    Spectrum(PolyArgs),
    /// Queries on the microlocal V-filtration.
    Vfilt {
        #[command(subcommand)]
        command: VfiltCommand,
    },
    /// Multiplier ideal J(alpha D) for 0 < alpha < 1.
    Multiplier {
        #[command(flatten)]
        poly: PolyArgs,
        #[arg(long)]
        alpha: String,
    },
    /// Hodge ideal queries.
    Hodge {
        #[command(subcommand)]
        command: HodgeCommand,
    },
    /// Verifiers.
    Verify {
        #[command(subcommand)]
        command: VerifyCommand,
    },
    /// Brieskorn–Pham oracles.
    Oracle {
        #[command(subcommand)]
        command: OracleCommand,
    },
}

#[derive(Subcommand, Debug)]
pub enum VfiltCommand {
    /// Is g in V^alpha?
    Member {
        #[command(flatten)]
        poly: PolyArgs,
        #[arg(short = 'g')]
        g: String,
        #[arg(long)]
        alpha: String,
    },
    /// Largest candidate c <= ceiling with g in V^c.
    Order {
        #[command(flatten)]
        poly: PolyArgs,
        #[arg(short = 'g')]
        g: String,
        /// Defaults to the number of variables plus one.
        #[arg(long)]
        ceiling: Option<String>,
    },
    /// Generators and Gröbner basis of V^alpha.
    Level {
        #[command(flatten)]
        poly: PolyArgs,
        #[arg(long)]
        alpha: String,
    },
    /// Jumping numbers up to the ceiling.
    Jumping {
        #[command(flatten)]
        poly: PolyArgs,
        /// Defaults to the number of variables.
        #[arg(long)]
        ceiling: Option<String>,
    },
}

#[derive(Subcommand, Debug)]
pub enum HodgeCommand {
    /// Canonical basis of the degree piece of I^(D,p).
    Slice {
        #[command(flatten)]
        poly: PolyArgs,
        #[arg(long)]
        p: u32,
        /// Integer N: grid level N (the plain degree for homogeneous f); p/q: weighted degree.
        #[arg(long)]
        degree: String,
    },
}

#[derive(Args, Debug, Clone)]
pub struct RangeArgs {
    #[arg(long)]
    pub p: u32,
    /// Integer N: grid level N (the plain degree for homogeneous f); p/q: weighted degree.
    /// Defaults to weighted degree p+2.
    #[arg(long = "max-degree")]
    pub max_degree: Option<String>,
}

#[derive(Subcommand, Debug)]
pub enum VerifyCommand {
    /// I^(D,p) + (f) against V^(p+1) + (f) degree by degree.
    Theorem1 {
        #[command(flatten)]
        poly: PolyArgs,
        #[command(flatten)]
        range: RangeArgs,
        /// Compare without adding (f).
        #[arg(long)]
        strict: bool,
    },
    /// I^(D,p) = V^(p+1) for p = 0, 1 and homogeneous f.
    Eq242 {
        #[command(flatten)]
        poly: PolyArgs,
        #[command(flatten)]
        range: RangeArgs,
    },
    /// I^(D,p) = V^(p+1) for quadratic f.
    RemarkI {
        #[command(flatten)]
        poly: PolyArgs,
        #[command(flatten)]
        range: RangeArgs,
    },
    /// The Fermat cubic at p = 2.
    RemarkIi,
    /// gr_dim by the spectral formula against Gröbner codimensions.
    Dims {
        #[command(flatten)]
        poly: PolyArgs,
        /// Defaults to 3.
        #[arg(long)]
        ceiling: Option<String>,
    },
    /// Pipeline against the Brieskorn–Pham oracle for a diagonal polynomial.
    Oracle {
        #[command(flatten)]
        poly: PolyArgs,
        /// Largest plain degree of monomials checked.
        #[arg(long = "max-degree", default_value = "10")]
        max_degree: u32,
        /// Defaults to 4.
        #[arg(long)]
        ceiling: Option<String>,
    },
    /// Every applicable verifier.
    All {
        #[command(flatten)]
        poly: PolyArgs,
        /// Overrides the per-p default of weighted degree p+2.
        #[arg(long = "max-degree")]
        max_degree: Option<String>,
        /// Largest p for the Hodge ideal comparisons.
        #[arg(long = "max-p", default_value = "2")]
        max_p: u32,
        /// Ceiling for filtration properties; defaults to 3.
        #[arg(long)]
        ceiling: Option<String>,
    },
}

#[derive(Subcommand, Debug)]
pub enum OracleCommand {
    Spectrum {
        #[arg(long, value_delimiter = ',')]
        exponents: Vec<u32>,
    },
    Member {
        #[arg(long, value_delimiter = ',')]
        exponents: Vec<u32>,
        /// Monomial as an exponent vector, e.g. 4,0,0.
        #[arg(long, value_delimiter = ',')]
        monomial: Vec<u32>,
        #[arg(long)]
        alpha: String,
    },
}
