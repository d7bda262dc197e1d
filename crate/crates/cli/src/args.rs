use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "nsg",
    version,
    about = "Enumerate numerical semigroups by Frobenius number"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Every semigroup with Frobenius number F, class by class.
    Enumerate {
        #[command(flatten)]
        frobenius: FrobeniusArg,
        #[command(flatten)]
        output: OutputArgs,
        /// Worker threads for class enumeration.
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
        jobs: u64,
        /// Stop after this many records.
        #[arg(long)]
        limit: Option<usize>,
        /// Sort records by Kunz bitstring. Buffers the whole output.
        #[arg(long)]
        sorted: bool,
    },
    /// Total count, irreducible count and class-size histogram.
    Count {
        #[command(flatten)]
        frobenius: FrobeniusArg,
    },
    /// Irreducible semigroups with Frobenius number F.
    Irreducible {
        #[command(flatten)]
        frobenius: FrobeniusArg,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Homogeneous semigroups with Frobenius number F.
    Homogeneous {
        #[command(flatten)]
        frobenius: FrobeniusArg,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Members of the class of an irreducible semigroup.
    Class {
        #[command(flatten)]
        input: SemigroupInput,
        #[command(flatten)]
        output: OutputArgs,
        /// Use the slower set-based reference enumeration.
        #[arg(long)]
        setform: bool,
    },
    /// Homogeneous partner of an irreducible semigroup.
    Delta {
        #[command(flatten)]
        input: SemigroupInput,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Irreducible partner of a homogeneous semigroup.
    DeltaInverse {
        #[command(flatten)]
        input: SemigroupInput,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Cross-check the enumeration against brute force. Report goes to stderr.
    Verify {
        #[command(flatten)]
        frobenius: FrobeniusArg,
    },
}

#[derive(Debug, Args)]
pub struct FrobeniusArg {
    #[arg(short = 'F', long = "frobenius", value_parser = clap::value_parser!(u64).range(1..))]
    pub value: u64,
}

impl FrobeniusArg {
    pub fn get(&self) -> usize {
        self.value as usize
    }
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct SemigroupInput {
    /// Comma-separated generators, e.g. 3,5
    #[arg(long, value_delimiter = ',')]
    pub gens: Option<Vec<usize>>,
    /// Kunz bitstring, e.g. 1101001
    #[arg(long)]
    pub kunz: Option<String>,
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Jsonl)]
    pub format: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Jsonl,
    Bits,
    Gens,
}
