use grg_core::format::parse_labels;
use grg_core::maxreach::ValueWitness;
use grg_core::{Certificate, GameSpec, Lasso, ProductStrategy};
use serde::Serialize;

/// Witness entries printed unless `--full-witness` is given.
pub const WITNESS_LIMIT: usize = 50;

/// Vertex names from `# label:` comments, falling back to ids.
pub struct Names {
    labels: Vec<String>,
    limit: Option<usize>,
}

impl Names {
    pub fn new(text: &str, game: &GameSpec, full: bool) -> Self {
        let parsed = parse_labels(text);
        let labels = game
            .arena
            .vertices()
            .map(|v| {
                parsed
                    .get(v)
                    .cloned()
                    .flatten()
                    .unwrap_or_else(|| v.to_string())
            })
            .collect();
        Names {
            labels,
            limit: (!full).then_some(WITNESS_LIMIT),
        }
    }

    pub fn vertex(&self, v: usize) -> &str {
        &self.labels[v]
    }

    fn vertices(&self, vs: &[usize]) -> String {
        self.capped(
            vs.iter().map(|&v| self.vertex(v).to_string()).collect(),
            " ",
        )
    }

    /// A target set by canonical index: `u1` for a singleton, `[a,b]` otherwise.
    pub fn target(&self, game: &GameSpec, index: usize) -> String {
        let set = game.target_set(index);
        if set.len() == 1 {
            self.vertex(set[0]).to_string()
        } else {
            let inner: Vec<&str> = set.iter().map(|&v| self.vertex(v)).collect();
            format!("[{}]", inner.join(","))
        }
    }

    fn targets(&self, game: &GameSpec, indices: &[usize]) -> String {
        let names: Vec<String> = indices.iter().map(|&i| self.target(game, i)).collect();
        format!("{{{}}}", self.capped(names, ", "))
    }

    fn capped(&self, items: Vec<String>, sep: &str) -> String {
        match self.limit {
            Some(limit) if items.len() > limit => {
                format!(
                    "{}{sep}... ({} more)",
                    items[..limit].join(sep),
                    items.len() - limit
                )
            }
            _ => items.join(sep),
        }
    }

    fn lasso(&self, lasso: &Lasso) -> String {
        let prefix = self.vertices(&lasso.prefix);
        let cycle = self.vertices(&lasso.cycle);
        if prefix.is_empty() {
            format!("({cycle})^w")
        } else {
            format!("{prefix} ({cycle})^w")
        }
    }

    fn strategy(&self, strategy: &ProductStrategy) -> String {
        let entries: Vec<String> = strategy
            .iter()
            .map(|(p, q)| {
                format!(
                    "({},{:#b})->{}",
                    self.vertex(p.vertex),
                    p.mask,
                    self.vertex(q.vertex)
                )
            })
            .collect();
        format!(
            "strategy {} entries: {}",
            entries.len(),
            self.capped(entries, "; ")
        )
    }

    pub fn certificate(&self, game: &GameSpec, cert: &Certificate) -> String {
        match cert {
            Certificate::VacuousWin => "no targets".into(),
            Certificate::ChainOrder { chain, insertion } => {
                let mut visit = chain.clone();
                visit.reverse();
                let order: Vec<String> = visit.iter().map(|&i| self.target(game, i)).collect();
                match insertion {
                    Some(i) => format!(
                        "visit order {} with the large set at position {i}",
                        order.join(",")
                    ),
                    None => format!("visit order {}", order.join(",")),
                }
            }
            Certificate::IncomparabilityWitness {
                first,
                second,
                only_first,
                only_second,
            } => format!(
                "incomparable attractors of {} and {}: {} only in the first, {} only in the second",
                self.target(game, *first),
                self.target(game, *second),
                self.vertex(*only_first),
                self.vertex(*only_second)
            ),
            Certificate::StartOutsideChain { target } => {
                format!(
                    "start outside the attractor of {}",
                    self.target(game, *target)
                )
            }
            Certificate::NoLargeSetInsertion { .. } => {
                "no segment of the chain collects the large set".into()
            }
            Certificate::FptLayers {
                visit_order,
                product_states,
            } => {
                let order: Vec<String> =
                    visit_order.iter().map(|&i| self.target(game, i)).collect();
                if order.is_empty() {
                    format!("layered product over {product_states} states")
                } else {
                    format!(
                        "layered product over {product_states} states, visit order {}",
                        order.join(",")
                    )
                }
            }
            Certificate::ForcedVisits => "every target attractor contains the start".into(),
            Certificate::Lasso { avoided, lasso } => {
                format!(
                    "lasso avoiding {}: {}",
                    self.target(game, *avoided),
                    self.lasso(lasso)
                )
            }
            Certificate::ProductStrategy(strategy) => self.strategy(strategy),
        }
    }

    pub fn witness(&self, game: &GameSpec, witness: &ValueWitness) -> String {
        match witness {
            ValueWitness::None => "none".into(),
            ValueWitness::PromisedSubset(subset) => self.targets(game, subset),
            ValueWitness::SccPath(steps) => {
                let parts: Vec<String> = steps
                    .iter()
                    .map(|s| format!("{{{}}}:{}", self.vertices(&s.vertices), s.weight))
                    .collect();
                format!("scc path {}", self.capped(parts, " -> "))
            }
            ValueWitness::LassoWitness { lasso, distinct } => {
                format!("lasso {} hitting {distinct}", self.lasso(lasso))
            }
            ValueWitness::ProductValue { strategy, .. } => self.strategy(strategy),
        }
    }
}

/// Outcome of one run, printed as text lines or one JSON object.
#[derive(Debug, Clone, Serialize)]
pub struct RunReport {
    pub command: &'static str,
    pub file: String,
    pub digest: String,
    pub algo: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub winner: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub value: Option<usize>,
    pub witness: String,
    pub micros: u128,
    pub states: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle: Option<String>,
}

impl RunReport {
    pub fn text(&self) -> String {
        let mut out = String::new();
        if let Some(w) = &self.winner {
            out.push_str(&format!("winner {w}\n"));
        }
        if let Some(v) = self.value {
            out.push_str(&format!("value {v}\n"));
        }
        out.push_str(&format!("algo {}\n", self.algo));
        let label = if self.winner.is_some() {
            "certificate"
        } else {
            "witness"
        };
        out.push_str(&format!("{label} {}\n", self.witness));
        if let Some(o) = &self.oracle {
            out.push_str(&format!("oracle {o}\n"));
        }
        out
    }

    pub fn json(&self) -> String {
        serde_json::to_string(self).expect("reports serialise")
    }
}
