from dataclasses import dataclass, field

from utils.errors import ConfigError

HARMONIC_Y = 'harmonic_y'
EXTENDED_OSCILLATOR_X = 'extended_oscillator_x'
POTENTIAL_KINDS = (HARMONIC_Y, EXTENDED_OSCILLATOR_X)


@dataclass(frozen=True)
class PotentialSpec:
    """One separated coordinate of the example Hamiltonian on a finite domain."""
    kind: str
    l: float = 0.0
    domain: tuple = None

    def __post_init__(self):
        if self.kind not in POTENTIAL_KINDS:
            raise ConfigError(f"Unknown potential kind: {self.kind}")
        if self.l < 0:
            raise ConfigError(f"l must be non-negative, got {self.l}")
        if self.domain is not None:
            low, high = self.domain
            if not low < high:
                raise ConfigError(f"Empty domain {self.domain}")
            if self.kind == EXTENDED_OSCILLATOR_X and low <= 0:
                raise ConfigError("The radial coordinate domain must start above 0")

    @property
    def singular_left(self):
        """The left end is the regular singular point x = 0."""
        return self.kind == EXTENDED_OSCILLATOR_X

    def to_dict(self):
        return {'kind': self.kind, 'l': self.l, 'domain': list(self.domain) if self.domain else None}


@dataclass(frozen=True)
class SpectrumLevel:
    energy: float
    multiplicity: int
    error_estimate: float
    components: tuple = ()

    def csv_row(self):
        return {
            'energy': f'{self.energy:.12g}',
            'multiplicity': self.multiplicity,
            'error_estimate': f'{self.error_estimate:.3g}'
        }


@dataclass(frozen=True)
class SpectrumTable:
    """Clustered two-dimensional levels up to an energy cutoff."""
    levels: tuple
    e_max: float
    cluster_tol: float

    @property
    def energies(self):
        return [level.energy for level in self.levels]

    def to_dict(self):
        return {
            'e_max': self.e_max,
            'cluster_tol': self.cluster_tol,
            'levels': [
                {'energy': lv.energy, 'multiplicity': lv.multiplicity,
                 'error_estimate': lv.error_estimate, 'components': [list(c) for c in lv.components]}
                for lv in self.levels
            ]
        }

    def __repr__(self):
        return f'<SpectrumTable {len(self.levels)} levels up to {self.e_max}>'


@dataclass(frozen=True)
class SpectrumComparison:
    """Numeric levels matched against algebraic energies after a constant shift."""
    shift: float
    shift_estimated: bool
    matches: list = field(default_factory=list)
    unmatched_algebraic: list = field(default_factory=list)
    multiplicity_short: list = field(default_factory=list)

    @property
    def all_matched(self):
        return not self.unmatched_algebraic and not self.multiplicity_short

    def to_dict(self):
        return {
            'shift': self.shift,
            'shift_estimated': self.shift_estimated,
            'matches': self.matches,
            'unmatched_algebraic': self.unmatched_algebraic,
            'multiplicity_short': self.multiplicity_short,
            'all_matched': self.all_matched
        }
