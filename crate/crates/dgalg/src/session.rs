//! A config resolved against the library: group, window, grading and the
//! named derivations and maps.

use std::collections::{BTreeMap, BTreeSet};

use dgalg_core::algebra::validate_grading;
use dgalg_core::tau::validate_tau;
use dgalg_core::{
    AlgebraAutomorphism, Budget, CheckReport, Derivation, Error, GradedGroup, GradedGroupCharacter, Grading, Group,
    GroupElement, GroupMap, MapKind, Mode, Status, Window, WindowSpec,
};

use crate::config::RunConfig;
use crate::error::CliError;
use crate::syntax::{self, DerivationSpec, TauSpec};

pub struct Session {
    pub config: RunConfig,
    pub group: Group,
    /// Validated when the grading report passed.
    pub graded: GradedGroup,
    pub grading_report: CheckReport,
    pub window: Window,
    /// Larger window used to find preimages when inverting maps.
    pub search: Window,
    pub budget: Budget,
    pub mode: Mode,
    pub derivations: BTreeMap<String, Derivation>,
    pub maps: BTreeMap<String, AlgebraAutomorphism>,
}

fn parse_err(context: impl Into<String>) -> impl FnOnce(syntax::ParseError) -> CliError {
    let context = context.into();
    move |error| CliError::Parse { context, error }
}

fn window_spec(config: &RunConfig, group: &Group, length: u32) -> Result<WindowSpec, CliError> {
    let mut spec = WindowSpec::ball(length).with_cap(config.window.cap);
    for (name, bound) in &config.window.bounds {
        let i = group
            .generator_index(name)
            .ok_or_else(|| Error::InvalidDescriptor(format!("window bound for unknown generator {name:?}")))?;
        spec = spec.with_bound(i, *bound);
    }
    Ok(spec)
}

impl Session {
    pub fn new(config: RunConfig) -> Result<Self, CliError> {
        let group = config.group.build()?;
        let grading = Grading::from_named(&group, config.grading.iter().map(|(k, v)| (k.as_str(), *v)))?;
        let window = Window::enumerate(&group, &window_spec(&config, &group, config.window.length)?)?;
        let search_length = config.window.search_length.unwrap_or(config.window.length + 2);
        let search = Window::enumerate(&group, &window_spec(&config, &group, search_length)?)?;
        let budget = Budget { cap: config.sample_cap, seed: config.seed };
        let grading_report = validate_grading(&group, &grading, &window, &budget);
        let graded = if grading_report.passed() {
            GradedGroup::new(group.clone(), grading, &window)?
        } else {
            GradedGroup::unvalidated(group.clone(), grading)
        };

        let mut specs = BTreeMap::new();
        for (name, src) in &config.derivations {
            let spec = syntax::parse_derivation(&group, src).map_err(parse_err(format!("derivations.{name}")))?;
            specs.insert(name.clone(), spec);
        }
        let mut derivations = BTreeMap::new();
        for name in specs.keys() {
            let d = resolve(name, &specs, &group, &mut BTreeSet::new())?;
            derivations.insert(name.clone(), d);
        }

        let mut maps = BTreeMap::new();
        for (name, m) in &config.maps {
            maps.insert(name.clone(), build_map(name, m, &group)?);
        }

        let mode = config.mode.into();
        Ok(Self { config, group, graded, grading_report, window, search, budget, mode, derivations, maps })
    }

    pub fn derivation(&self, name: &str) -> Result<&Derivation, CliError> {
        self.derivations.get(name).ok_or_else(|| CliError::Usage(format!("no derivation named {name:?} in the config")))
    }

    pub fn map(&self, name: &str) -> Result<&AlgebraAutomorphism, CliError> {
        self.maps.get(name).ok_or_else(|| CliError::Usage(format!("no map named {name:?} in the config")))
    }

    /// Audits of the central derivations occurring in `d`: exact centrality
    /// of `z` and the graded-character identity for `tau`.
    pub fn central_audits(&self, d: &Derivation) -> Vec<CheckReport> {
        let mut out = Vec::new();
        collect_centrals(d, &mut |z, tau| {
            let mut centrality = CheckReport::new("centrality");
            centrality.population = 1;
            centrality.examined = 1;
            if !self.group.is_central(z).central {
                centrality.status = Status::Fail;
                centrality.violations = 1;
            }
            centrality.note(format!("z = {}", self.group.format_element(z)));
            out.push(centrality);
            out.push(validate_tau(tau, &self.graded, &self.window, &self.budget));
        });
        out
    }

    /// Fails unless the grading and the central derivations in `d` are
    /// valid, naming the first violated invariant.
    pub fn require_ready(&self, derivations: &[&Derivation]) -> Result<(), CliError> {
        if !self.grading_report.passed() {
            return Err(Error::Precondition("the grading is not a homomorphism to Z on the window".into()).into());
        }
        for d in derivations {
            for r in self.central_audits(d) {
                if !r.passed() {
                    let what = match r.check.as_str() {
                        "centrality" => format!("central derivation with non-central {}", r.notes.join("; ")),
                        _ => "tau is not a graded group character on the window".to_string(),
                    };
                    return Err(Error::Precondition(what).into());
                }
            }
        }
        Ok(())
    }
}

fn collect_centrals(d: &Derivation, f: &mut impl FnMut(&GroupElement, &GradedGroupCharacter)) {
    match d {
        Derivation::Central { z, tau } => f(z, tau),
        Derivation::LinComb(terms) => terms.iter().for_each(|(_, d)| collect_centrals(d, f)),
        Derivation::Commutator(a, b) => {
            collect_centrals(a, f);
            collect_centrals(b, f);
        }
        _ => {}
    }
}

fn resolve(
    name: &str,
    specs: &BTreeMap<String, DerivationSpec>,
    group: &Group,
    visiting: &mut BTreeSet<String>,
) -> Result<Derivation, CliError> {
    let Some(spec) = specs.get(name) else {
        return Err(CliError::Usage(format!("reference to undefined derivation @{name}")));
    };
    if !visiting.insert(name.to_string()) {
        return Err(CliError::Usage(format!("derivation @{name} refers to itself")));
    }
    let d = build(spec, specs, group, visiting)?;
    visiting.remove(name);
    Ok(d)
}

fn build(
    spec: &DerivationSpec,
    specs: &BTreeMap<String, DerivationSpec>,
    group: &Group,
    visiting: &mut BTreeSet<String>,
) -> Result<Derivation, CliError> {
    Ok(match spec {
        DerivationSpec::Zero => Derivation::Zero,
        DerivationSpec::Inner(a) => Derivation::Inner(a.clone()),
        DerivationSpec::Central { z, tau } => {
            let tau = match tau {
                TauSpec::Parity(c) => GradedGroupCharacter::Parity(*c),
                TauSpec::Additive(entries) => {
                    let mut values = vec![dgalg_core::GaussianRational::zero(); group.num_generators()];
                    for (i, c) in entries {
                        values[*i] = *c;
                    }
                    GradedGroupCharacter::Additive(values)
                }
                TauSpec::Table(entries) => GradedGroupCharacter::Table(entries.iter().cloned().collect()),
            };
            Derivation::Central { z: z.clone(), tau }
        }
        DerivationSpec::Table(entries) => Derivation::Table(entries.iter().cloned().collect()),
        DerivationSpec::Translate { z, coefficient } => {
            Derivation::Translation { z: z.clone(), coefficient: *coefficient }
        }
        DerivationSpec::LinComb(terms) => Derivation::LinComb(
            terms.iter().map(|(c, s)| Ok((*c, build(s, specs, group, visiting)?))).collect::<Result<_, CliError>>()?,
        ),
        DerivationSpec::Ref(name) => resolve(name, specs, group, visiting)?,
    })
}

fn build_map(name: &str, m: &crate::config::MapConfig, group: &Group) -> Result<AlgebraAutomorphism, CliError> {
    use crate::config::MapConfig;
    Ok(match m {
        MapConfig::Identity {} => AlgebraAutomorphism::Transport(GroupMap::identity(group)),
        MapConfig::Scaling { lambda } => {
            let c = syntax::parse_coefficient(lambda).map_err(parse_err(format!("maps.{name}.lambda")))?;
            AlgebraAutomorphism::Scaling(c)
        }
        MapConfig::Automorphism { images } => {
            for key in images.keys() {
                if group.generator_index(key).is_none() {
                    return Err(Error::InvalidMap(format!("maps.{name}: unknown generator {key:?}")).into());
                }
            }
            let mut elements = Vec::new();
            for g in group.generator_names() {
                let src = images
                    .get(g)
                    .ok_or_else(|| Error::InvalidMap(format!("maps.{name}: no image for generator {g}")))?;
                let image = syntax::parse_element(group, src).map_err(parse_err(format!("maps.{name}.images.{g}")))?;
                elements.push(image);
            }
            AlgebraAutomorphism::Transport(GroupMap::new(
                group.clone(),
                group.clone(),
                elements,
                MapKind::Automorphism,
            )?)
        }
    })
}
