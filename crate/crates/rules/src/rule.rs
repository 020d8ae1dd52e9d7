use std::fmt;

use grid_core::{NumberLine, Piece, Topology};

/// Which neighbors the non-consecutiveness rules look at.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Adjacency {
    /// The four rook-step neighbors.
    OrthogonalStep,
    /// All eight king-step neighbors; subsumes [`Adjacency::OrthogonalStep`],
    /// so a non-consecutive-by-king square is also plainly non-consecutive.
    King,
}

impl Adjacency {
    /// The move set realizing this adjacency.
    pub(crate) fn piece(self) -> Piece {
        match self {
            Adjacency::OrthogonalStep => Piece::OrthogonalStep,
            Adjacency::King => Piece::King,
        }
    }
}

/// A single declarative constraint on a square.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Rule {
    /// Every row and every column is a permutation of `1..=n`.
    Latin,
    /// No two adjacent cells hold consecutive symbols.
    NonConsecutive {
        /// Which neighbors count as adjacent.
        adjacency: Adjacency,
        /// Whether adjacency wraps around the border.
        topology: Topology,
        /// Which symbol pairs count as consecutive.
        line: NumberLine,
    },
    /// Every two orthogonally adjacent cells hold consecutive symbols.
    Consecutive {
        /// Whether adjacency wraps around the border.
        topology: Topology,
        /// Which symbol pairs count as consecutive.
        line: NumberLine,
    },
    /// No two cells one piece-move apart hold equal symbols.
    AntiPiece {
        /// The move set.
        piece: Piece,
        /// Whether moves wrap around the border.
        topology: Topology,
    },
    /// Every cell has an equal symbol somewhere in its piece target set.
    RequirePiece {
        /// The move set.
        piece: Piece,
        /// Whether moves wrap around the border.
        topology: Topology,
    },
    /// For each symbol, all of its occurrences form one connected component
    /// under piece moves (a move of any distance along a line piece's sight
    /// line is a single edge).
    StrictPiece {
        /// The move set.
        piece: Piece,
        /// Whether moves wrap around the border.
        topology: Topology,
    },
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn topo(t: Topology) -> &'static str {
            match t {
                Topology::Flat => "flat",
                Topology::Toroidal => "toroidal",
            }
        }
        fn line(l: NumberLine) -> &'static str {
            match l {
                NumberLine::Linear => "linear",
                NumberLine::Modular => "modular",
            }
        }
        fn piece(p: Piece) -> &'static str {
            match p {
                Piece::Knight => "knight",
                Piece::King => "king",
                Piece::Bishop => "bishop",
                Piece::Queen => "queen",
                Piece::OrthogonalStep => "orthogonal-step",
            }
        }
        match self {
            Rule::Latin => write!(f, "latin"),
            Rule::NonConsecutive {
                adjacency,
                topology,
                line: l,
            } => {
                let adj = match adjacency {
                    Adjacency::OrthogonalStep => "orthogonal",
                    Adjacency::King => "king",
                };
                write!(f, "non-consecutive[{adj}, {}, {}]", topo(*topology), line(*l))
            }
            Rule::Consecutive { topology, line: l } => {
                write!(f, "consecutive[{}, {}]", topo(*topology), line(*l))
            }
            Rule::AntiPiece { piece: p, topology } => {
                write!(f, "anti-{}[{}]", piece(*p), topo(*topology))
            }
            Rule::RequirePiece { piece: p, topology } => {
                write!(f, "require-{}[{}]", piece(*p), topo(*topology))
            }
            Rule::StrictPiece { piece: p, topology } => {
                write!(f, "strict-{}[{}]", piece(*p), topo(*topology))
            }
        }
    }
}

/// Why a [`RuleSet`] could not be assembled.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RuleSetError {
    /// The same rule (variant and parameters) was given twice.
    DuplicateRule(Rule),
}

impl fmt::Display for RuleSetError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RuleSetError::DuplicateRule(rule) => write!(f, "duplicate rule: {rule}"),
        }
    }
}

impl std::error::Error for RuleSetError {}

/// An ordered, duplicate-free collection of rules.
///
/// The order is the order violations are reported in. `Latin` is a rule
/// like any other — nothing is implied.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RuleSet {
    rules: Vec<Rule>,
}

impl RuleSet {
    /// Assembles a rule set, rejecting duplicates.
    ///
    /// # Errors
    ///
    /// [`RuleSetError::DuplicateRule`] if any rule appears twice (same
    /// variant with the same parameters).
    pub fn new(rules: Vec<Rule>) -> Result<RuleSet, RuleSetError> {
        for (i, rule) in rules.iter().enumerate() {
            if rules[..i].contains(rule) {
                return Err(RuleSetError::DuplicateRule(rule.clone()));
            }
        }
        Ok(RuleSet { rules })
    }

    /// The one-rule set `{Latin}`.
    pub fn latin() -> RuleSet {
        RuleSet {
            rules: vec![Rule::Latin],
        }
    }

    /// This set plus one more rule.
    ///
    /// # Errors
    ///
    /// [`RuleSetError::DuplicateRule`] if `rule` is already present.
    pub fn with(mut self, rule: Rule) -> Result<RuleSet, RuleSetError> {
        if self.rules.contains(&rule) {
            return Err(RuleSetError::DuplicateRule(rule));
        }
        self.rules.push(rule);
        Ok(self)
    }

    /// The rules, in report order.
    pub fn rules(&self) -> &[Rule] {
        &self.rules
    }

    /// Whether the set contains `rule` exactly.
    pub fn contains(&self, rule: &Rule) -> bool {
        self.rules.contains(rule)
    }

    /// Whether `Latin` is among the rules.
    pub fn has_latin(&self) -> bool {
        self.contains(&Rule::Latin)
    }
}

impl fmt::Display for RuleSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, rule) in self.rules.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{rule}")?;
        }
        write!(f, "}}")
    }
}
