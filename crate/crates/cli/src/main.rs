mod args;
mod output;

use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use clap::Parser;
use nsg_core::partition::class_max_kunz;
use nsg_core::{
    count_all, delta, delta_inverse, enumerate_all, enumerate_class, enumerate_class_setform,
    enumerate_homogeneous_kunz, enumerate_irreducible_kunz, par_enumerate_classes,
    verify_partition, ClassDescriptor, KunzVector, NumericalSemigroup, DEFAULT_ORACLE_CEILING,
};

use args::{Cli, Command, SemigroupInput};
use output::{write_all, write_one};

const CEILING_VAR: &str = "NSG_ORACLE_CEILING";

enum Failure {
    Usage(String),
    Domain(String),
    Io(io::Error),
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

impl From<nsg_core::Error> for Failure {
    fn from(e: nsg_core::Error) -> Self {
        Failure::Domain(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let result = run(cli.command, &mut out).and_then(|()| out.flush().map_err(Failure::from));
    match result {
        Ok(()) => ExitCode::SUCCESS,
        // Downstream closed the pipe (e.g. `| head`); not our error.
        Err(Failure::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn read_input(input: &SemigroupInput) -> Result<NumericalSemigroup, Failure> {
    match (&input.gens, &input.kunz) {
        (Some(gens), _) => Ok(NumericalSemigroup::from_generators(gens)?),
        (None, Some(bits)) => Ok(NumericalSemigroup::from_kunz(bits.parse::<KunzVector>()?)),
        (None, None) => Err(Failure::Usage("one of --gens or --kunz is required".into())),
    }
}

fn oracle_ceiling() -> Result<usize, Failure> {
    match std::env::var(CEILING_VAR) {
        Ok(v) => v.trim().parse().map_err(|_| {
            Failure::Usage(format!(
                "{CEILING_VAR} must be a non-negative integer, got {v:?}"
            ))
        }),
        Err(_) => Ok(DEFAULT_ORACLE_CEILING),
    }
}

fn run(command: Command, out: &mut impl Write) -> Result<(), Failure> {
    match command {
        Command::Enumerate {
            frobenius,
            output,
            jobs,
            limit,
            sorted,
        } => {
            let f = frobenius.get();
            let limit = limit.unwrap_or(usize::MAX);
            if sorted {
                let mut all: Vec<KunzVector> = par_enumerate_classes(f, jobs as usize)
                    .into_iter()
                    .flat_map(|c| c.members)
                    .collect();
                all.sort_unstable();
                write_all(out, all.iter().take(limit), output.format)?;
            } else if jobs > 1 {
                let classes = par_enumerate_classes(f, jobs as usize);
                let members = classes.iter().flat_map(|c| &c.members);
                write_all(out, members.take(limit), output.format)?;
            } else {
                for x in enumerate_all(f).take(limit) {
                    write_one(out, &x, output.format)?;
                }
            }
        }
        Command::Count { frobenius } => {
            let report = count_all(frobenius.get());
            writeln!(out, "total {}", report.total)?;
            writeln!(out, "irreducible {}", report.irreducible_count)?;
            for (size, classes) in &report.class_size_histogram {
                writeln!(out, "class_size {size} {classes}")?;
            }
        }
        Command::Irreducible { frobenius, output } => {
            for x in enumerate_irreducible_kunz(frobenius.get()) {
                write_one(out, &x, output.format)?;
            }
        }
        Command::Homogeneous { frobenius, output } => {
            for x in enumerate_homogeneous_kunz(frobenius.get()) {
                write_one(out, &x, output.format)?;
            }
        }
        Command::Class {
            input,
            output,
            setform,
        } => {
            let s = read_input(&input)?;
            let x = s.kunz();
            if !x.is_irreducible() {
                let hi = class_max_kunz(x);
                return Err(Failure::Domain(format!(
                    "{s} is not irreducible; its class maximum is {} (--kunz {hi})",
                    hi.to_semigroup()
                )));
            }
            let desc = ClassDescriptor::new(x)?;
            eprintln!(
                "theta {:?} delta {} D {:?}",
                desc.theta().members(),
                desc.min_homogeneous().to_semigroup(),
                desc.d_set()
            );
            for &d in desc.d_set() {
                eprintln!("T({d}) {:?}", desc.t_closure(d)?);
            }
            if setform {
                for m in enumerate_class_setform(&s)? {
                    write_one(out, m.kunz(), output.format)?;
                }
            } else {
                for m in enumerate_class(x)? {
                    write_one(out, &m, output.format)?;
                }
            }
        }
        Command::Delta { input, output } => {
            let s = delta(&read_input(&input)?)?;
            write_one(out, s.kunz(), output.format)?;
        }
        Command::DeltaInverse { input, output } => {
            let s = delta_inverse(&read_input(&input)?)?;
            write_one(out, s.kunz(), output.format)?;
        }
        Command::Verify { frobenius } => {
            let report = verify_partition(frobenius.get(), oracle_ceiling()?)?;
            eprint!("{report}");
            if !report.all_passed() {
                return Err(Failure::Domain("verification failed".into()));
            }
        }
    }
    Ok(())
}
