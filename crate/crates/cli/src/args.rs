use clap::{Args, Parser, Subcommand};

#[derive(Debug, Parser)]
#[command(name = "barycev", version, about = "Exact pedal-cevian concurrence in barycentric coordinates")]
pub(crate) struct Cli {
    #[command(subcommand)]
    pub command: Sub,
}

#[derive(Debug, Args)]
pub(crate) struct Common {
    /// Side lengths a,b,c as integers or num/den.
    #[arg(long, required = true)]
    pub triangle: Option<String>,
    /// Output format: text, json, csv or svg.
    #[arg(long, default_value = "text")]
    pub format: String,
}

#[derive(Debug, Subcommand)]
pub(crate) enum Sub {
    /// Run the exact concurrence suites on one triangle.
    Verify {
        #[command(flatten)]
        common: Common,
        /// Comma-separated nonzero scale factors.
        #[arg(long = "k-set", allow_hyphen_values = true)]
        k_set: Option<String>,
    },
    /// Construct a concurrence point.
    Point {
        #[command(flatten)]
        common: Common,
        /// kariya, franke, excenter_a, excenter_b or excenter_c.
        #[arg(long, required = true)]
        construction: Option<String>,
        #[arg(long, required = true, allow_hyphen_values = true)]
        k: Option<String>,
    },
    /// Evaluate both concurrence conditions at a point.
    Conditions {
        #[command(flatten)]
        common: Common,
        /// Barycentric coordinates alpha,beta,gamma (homogeneous allowed).
        #[arg(long, required = true, allow_hyphen_values = true)]
        point: Option<String>,
    },
    /// Pedal and scaled pedal triangle of a point.
    Pedal {
        #[command(flatten)]
        common: Common,
        #[arg(long, required = true, allow_hyphen_values = true)]
        point: Option<String>,
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        k: String,
    },
    /// Scan the (alpha, beta) plane for common zeros of both conditions.
    Locus {
        #[command(flatten)]
        common: Common,
        /// alpha_min,alpha_max,beta_min,beta_max
        #[arg(long, allow_hyphen_values = true, conflicts_with = "extended")]
        region: Option<String>,
        /// Use the wide region [-2.5, 3.5]^2 that contains the excenters.
        #[arg(long)]
        extended: bool,
        #[arg(long, default_value_t = 512)]
        resolution: usize,
        /// Write the report here instead of standard output.
        #[arg(long)]
        output: Option<std::path::PathBuf>,
    },
}
