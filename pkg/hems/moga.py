"""Multi-objective genetic algorithm over appliance starts and AC setpoints.

Genome: one start hour per shiftable appliance (a contiguous block of
``cycle_len`` ones is decoded from it, so cycle, contiguity and window rules
hold by construction) and one setpoint per hour, kept inside
``[desired, desired + dev_cap]``. The total-deviation cap is enforced by
repair when decoding.

Search: binary tournament on (rank, crowding), uniform crossover on start
genes, blend crossover on setpoints, window-bounded reassignment and bounded
Gaussian mutation, elitist survival of parents plus offspring truncated by
(rank, crowding). Survival prefers distinct genomes.

All random draws of a generation are made sequentially from one seeded
generator before the offspring are evaluated, so results do not depend on
how evaluations are dispatched.

Date:
    10.19.2026

"""


__all__ = [
    "Chromosome",
    "Individual",
    "Population",
    "GaParams",
    "HistoryRow",
    "EvolutionResult",
    "decode",
    "repair_setpoints",
    "evolve",
    "select_solution",
]


import logging
from dataclasses import dataclass, field
from typing import Callable, List, NamedTuple, Optional, Sequence, Tuple

import numpy as np
from joblib import Parallel, delayed

from .case import CaseConfig, ObjectiveVector, Schedule
from .errors import DomainError, ValidationError
from .objectives import objectives_case_c, objectives_case_d
from .pareto import crowding_distance, hypervolume, non_dominated_sort, pareto_mask
from .series import HorizonSeries, Unit


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Chromosome:
    """Start hour per appliance (1-based) and setpoint per hour (°C)."""

    shift_genes: Tuple[int, ...]
    setpoint_genes: Tuple[float, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "shift_genes", tuple(int(g) for g in self.shift_genes))
        object.__setattr__(self, "setpoint_genes", tuple(float(g) for g in self.setpoint_genes))

    def key(self) -> Tuple:
        return self.shift_genes + self.setpoint_genes


@dataclass
class Individual:
    chromosome: Chromosome
    objectives: ObjectiveVector
    rank: int = 0
    crowding: float = 0.0


@dataclass
class Population:
    members: List[Individual]
    generation: int
    rng_state: dict


@dataclass(frozen=True)
class GaParams:
    """Genetic-algorithm settings.

    ``mutation_rate`` defaults to one over the genome length.
    ``setpoint_levels``, when given, restricts setpoint deviations above the
    desired temperature to these values.
    """

    pop_size: int = 100
    generations: int = 300
    crossover_rate: float = 0.9
    mutation_rate: Optional[float] = None
    setpoint_sigma: float = 0.5
    setpoint_levels: Optional[Tuple[float, ...]] = None
    tournament_size: int = 2
    reference_point: Optional[Tuple[float, float, float]] = None
    n_jobs: int = 1
    seed: int = 0

    def __post_init__(self) -> None:
        if self.pop_size < 4 or self.pop_size % 2:
            raise ValidationError(f"pop_size must be an even number >= 4, got {self.pop_size}")
        if self.generations < 1:
            raise ValidationError(f"generations must be >= 1, got {self.generations}")
        if not 0.0 <= self.crossover_rate <= 1.0:
            raise ValidationError(f"crossover_rate must lie in [0, 1], got {self.crossover_rate}")
        if self.mutation_rate is not None and not 0.0 <= self.mutation_rate <= 1.0:
            raise ValidationError(f"mutation_rate must lie in [0, 1], got {self.mutation_rate}")
        if self.setpoint_sigma <= 0.0:
            raise ValidationError("setpoint_sigma must be positive")
        if self.tournament_size < 1:
            raise ValidationError("tournament_size must be >= 1")
        if self.setpoint_levels is not None:
            levels = tuple(sorted(float(v) for v in self.setpoint_levels))
            if not levels or levels[0] < 0.0:
                raise ValidationError("setpoint_levels must be non-empty and non-negative")
            object.__setattr__(self, "setpoint_levels", levels)
        if self.reference_point is not None:
            object.__setattr__(self, "reference_point",
                               tuple(float(v) for v in self.reference_point))

    def mutation_for(self, genome_length: int) -> float:
        if self.mutation_rate is not None:
            return self.mutation_rate
        return 1.0 / max(genome_length, 1)


class HistoryRow(NamedTuple):
    generation: int
    best_o1: float
    best_o2: float
    best_o3: float
    hypervolume: float


@dataclass
class EvolutionResult:
    front: List[Individual]
    history: List[HistoryRow]
    population: Population
    reference_point: Tuple[float, ...] = field(default=())


def repair_setpoints(setpoints: Sequence[float], cfg: CaseConfig) -> np.ndarray:
    """Clip deviations to ``[0, dev_cap]`` and scale them uniformly down to
    the total cap when their sum exceeds it."""
    dev = np.clip(np.asarray(setpoints, dtype=float) - cfg.desired_temp, 0.0, cfg.dev_cap)
    total = dev.sum()
    if total > cfg.total_dev_cap:
        dev = dev * (cfg.total_dev_cap / total)
    return cfg.desired_temp + dev


def decode(chrom: Chromosome, cfg: CaseConfig) -> Schedule:
    if len(chrom.shift_genes) != cfg.n_appliances:
        raise DomainError(f"{len(chrom.shift_genes)} start genes for {cfg.n_appliances} appliances")
    if len(chrom.setpoint_genes) != cfg.horizon:
        raise DomainError(f"{len(chrom.setpoint_genes)} setpoint genes for horizon {cfg.horizon}")
    u = np.zeros((cfg.n_appliances, cfg.horizon), dtype=np.int8)
    for s, (spec, start) in enumerate(zip(cfg.appliances, chrom.shift_genes)):
        if not spec.window_start <= start <= spec.latest_start:
            raise DomainError(
                f"{spec.name}: start {start} outside [{spec.window_start}, {spec.latest_start}]"
            )
        u[s, start - 1:start - 1 + spec.cycle_len] = 1
    setpoints = HorizonSeries(repair_setpoints(chrom.setpoint_genes, cfg), Unit.CELSIUS)
    return Schedule(u, setpoints)


def _objective_function(cfg: CaseConfig, case: str,
                        budgets: Tuple[float, float]) -> Callable[[Chromosome], ObjectiveVector]:
    if case == "c":
        return lambda chrom: objectives_case_c(decode(chrom, cfg), cfg)
    if case == "d":
        gamma_d, gamma_occ = budgets
        return lambda chrom: objectives_case_d(decode(chrom, cfg), cfg, gamma_d, gamma_occ)
    raise ValidationError(f"the genetic algorithm solves cases 'c' and 'd', got {case!r}")


def _evaluate(func, chromosomes: Sequence[Chromosome], n_jobs: int) -> List[ObjectiveVector]:
    if n_jobs == 1:
        return [func(chrom) for chrom in chromosomes]
    return Parallel(n_jobs=n_jobs)(delayed(func)(chrom) for chrom in chromosomes)


class _Operators:
    """Random draws and variation operators bound to one case."""

    def __init__(self, cfg: CaseConfig, params: GaParams, rng: np.random.Generator) -> None:
        self.cfg = cfg
        self.params = params
        self.rng = rng
        self.low = np.array([spec.window_start for spec in cfg.appliances], dtype=int)
        self.high = np.array([spec.latest_start for spec in cfg.appliances], dtype=int)
        self.levels = (None if params.setpoint_levels is None
                       else cfg.desired_temp + np.array(params.setpoint_levels))
        self.pm = params.mutation_for(cfg.n_appliances + cfg.horizon)

    def snap(self, setpoints: np.ndarray) -> np.ndarray:
        lo = self.cfg.desired_temp
        setpoints = np.clip(setpoints, lo, lo + self.cfg.dev_cap)
        if self.levels is None:
            return setpoints
        idx = np.abs(setpoints[:, None] - self.levels[None, :]).argmin(axis=1)
        return self.levels[idx]

    def random_chromosome(self) -> Chromosome:
        starts = self.rng.integers(self.low, self.high + 1)
        H = self.cfg.horizon
        if self.levels is None:
            dev = self.rng.random(H) * self.cfg.dev_cap * self.rng.random()
            setpoints = self.cfg.desired_temp + dev
        else:
            setpoints = self.levels[self.rng.integers(0, self.levels.shape[0], size=H)]
        return Chromosome(starts, self.snap(setpoints))

    def crossover(self, a: Chromosome, b: Chromosome) -> Tuple[Chromosome, Chromosome]:
        sa, sb = np.array(a.shift_genes), np.array(b.shift_genes)
        ta, tb = np.array(a.setpoint_genes), np.array(b.setpoint_genes)
        swap = self.rng.random(sa.shape[0]) < 0.5
        lam = self.rng.random(ta.shape[0])
        if self.rng.random() >= self.params.crossover_rate:
            return a, b
        s1, s2 = np.where(swap, sb, sa), np.where(swap, sa, sb)
        t1 = lam * ta + (1.0 - lam) * tb
        t2 = (1.0 - lam) * ta + lam * tb
        return Chromosome(s1, self.snap(t1)), Chromosome(s2, self.snap(t2))

    def mutate(self, chrom: Chromosome) -> Chromosome:
        starts = np.array(chrom.shift_genes)
        setpoints = np.array(chrom.setpoint_genes)
        hit_s = self.rng.random(starts.shape[0]) < self.pm
        new_s = self.rng.integers(self.low, self.high + 1)
        hit_t = self.rng.random(setpoints.shape[0]) < self.pm
        if self.levels is None:
            new_t = setpoints + self.rng.normal(0.0, self.params.setpoint_sigma, setpoints.shape[0])
        else:
            new_t = self.levels[self.rng.integers(0, self.levels.shape[0], size=setpoints.shape[0])]
        if not hit_s.any() and not hit_t.any():
            return chrom
        starts = np.where(hit_s, new_s, starts)
        setpoints = self.snap(np.where(hit_t, new_t, setpoints))
        return Chromosome(starts, setpoints)

    def tournament(self, ranks: np.ndarray, crowd: np.ndarray) -> int:
        picks = self.rng.integers(0, ranks.shape[0], size=self.params.tournament_size)
        return int(min(picks, key=lambda i: (ranks[i], -crowd[i], i)))


def _rank_and_crowd(F: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    ranks = non_dominated_sort(F)
    crowd = np.zeros(F.shape[0])
    for r in np.unique(ranks):
        members = np.flatnonzero(ranks == r)
        crowd[members] = crowding_distance(F[members])
    return ranks, crowd


def _survivors(keys: Sequence[Tuple], F: np.ndarray, size: int) -> np.ndarray:
    seen, unique, duplicate = set(), [], []
    for i, key in enumerate(keys):
        (duplicate if key in seen else unique).append(i)
        seen.add(key)
    unique = np.array(unique, dtype=int)
    ranks = non_dominated_sort(F[unique])
    chosen: List[int] = []
    for r in np.unique(ranks):
        members = unique[ranks == r]
        room = size - len(chosen)
        if members.shape[0] <= room:
            chosen.extend(members.tolist())
            continue
        crowd = crowding_distance(F[members])
        order = np.argsort(-crowd, kind="stable")
        chosen.extend(members[order[:room]].tolist())
        break
    if len(chosen) < size:
        all_ranks = non_dominated_sort(F)
        duplicate.sort(key=lambda i: (all_ranks[i], i))
        chosen.extend(duplicate[:size - len(chosen)])
    return np.array(chosen, dtype=int)


def _initial_chromosomes(ops: _Operators, size: int) -> List[Chromosome]:
    chromosomes, seen = [], set()
    attempts = 0
    while len(chromosomes) < size:
        chrom = ops.random_chromosome()
        attempts += 1
        if chrom.key() in seen and attempts < 100 * size:
            continue
        seen.add(chrom.key())
        chromosomes.append(chrom)
    return chromosomes


class _Archive:
    """Distinct non-dominated genomes over every evaluation of a run."""

    def __init__(self, n_obj: int) -> None:
        self.chromosomes: List[Chromosome] = []
        self.F = np.zeros((0, n_obj))
        self._keys = set()

    def update(self, chromosomes: Sequence[Chromosome], F: np.ndarray) -> bool:
        """Merge in a batch; True when the archive changed."""
        fresh, seen = [], set(self._keys)
        for i, c in enumerate(chromosomes):
            if c.key() not in seen:
                seen.add(c.key())
                fresh.append(i)
        if not fresh:
            return False
        merged = self.chromosomes + [chromosomes[i] for i in fresh]
        F_all = np.vstack([self.F, F[fresh]])
        keep = np.flatnonzero(pareto_mask(F_all))
        changed = keep.shape[0] != len(self.chromosomes) or keep[-1] >= len(self.chromosomes)
        self.chromosomes = [merged[i] for i in keep]
        self.F = F_all[keep]
        self._keys = {c.key() for c in self.chromosomes}
        return bool(changed)

    def members(self) -> List[Individual]:
        crowd = crowding_distance(self.F)
        return [Individual(c, ObjectiveVector(*map(float, f)), 1, float(d))
                for c, f, d in zip(self.chromosomes, self.F, crowd)]


def _history_row(generation: int, archive: _Archive, ref, hv: Optional[float] = None) -> HistoryRow:
    best = archive.F.min(axis=0)
    if hv is None:
        hv = hypervolume(archive.F, ref)
    return HistoryRow(generation, float(best[0]), float(best[1]), float(best[2]), hv)


def evolve(cfg: CaseConfig,
           case: str = "c",
           budgets: Tuple[float, float] = (0.0, 0.0),
           params: GaParams = None) -> EvolutionResult:
    """Evolve a population and return the Pareto front of everything it
    evaluated and the per-generation convergence history.

    The front is an archive of distinct non-dominated genomes, so neither
    the best objective values nor the hypervolume in the history ever get
    worse from one generation to the next.
    """
    params = params or GaParams()
    func = _objective_function(cfg, case, budgets)
    rng = np.random.default_rng(params.seed)
    ops = _Operators(cfg, params, rng)
    N = params.pop_size

    chromosomes = _initial_chromosomes(ops, N)
    F = np.array(_evaluate(func, chromosomes, params.n_jobs), dtype=float)
    ranks, crowd = _rank_and_crowd(F)
    if params.reference_point is not None:
        ref = np.array(params.reference_point)
    else:
        span = F.max(axis=0) - F.min(axis=0)
        ref = F.max(axis=0) + 0.1 * span + 1.0
    archive = _Archive(F.shape[1])
    archive.update(chromosomes, F)
    history = [_history_row(0, archive, ref)]

    for generation in range(1, params.generations + 1):
        offspring: List[Chromosome] = []
        while len(offspring) < N:
            a = chromosomes[ops.tournament(ranks, crowd)]
            b = chromosomes[ops.tournament(ranks, crowd)]
            c1, c2 = ops.crossover(a, b)
            offspring.extend([ops.mutate(c1), ops.mutate(c2)])
        F_off = np.array(_evaluate(func, offspring, params.n_jobs), dtype=float)

        merged = chromosomes + offspring
        F_all = np.vstack([F, F_off])
        keep = _survivors([c.key() for c in merged], F_all, N)
        chromosomes = [merged[i] for i in keep]
        F = F_all[keep]
        ranks, crowd = _rank_and_crowd(F)
        changed = archive.update(offspring, F_off)
        row = _history_row(generation, archive, ref,
                           None if changed else history[-1].hypervolume)
        history.append(row)
        logger.debug("generation=%d best=(%.4g, %.4g, %.4g) hv=%.6g archive=%d",
                     generation, row.best_o1, row.best_o2, row.best_o3, row.hypervolume,
                     len(archive.chromosomes))

    members = [Individual(c, ObjectiveVector(*map(float, f)), int(r), float(d))
               for c, f, r, d in zip(chromosomes, F, ranks, crowd)]
    front = archive.members()
    logger.info("evolve case=%s budgets=%s generations=%d front=%d hv=%.6g",
                case, tuple(budgets), params.generations, len(front), history[-1].hypervolume)
    population = Population(members, params.generations, rng.bit_generator.state)
    return EvolutionResult(front, history, population, tuple(float(v) for v in ref))


def select_solution(front: Sequence[Individual]) -> Individual:
    """Front member with the smallest sum of objectives normalized to [0, 1]
    over the front. Ties go to the lowest cost (last objective), then to
    the lexicographically smallest genome."""
    if not front:
        raise ValidationError("cannot select a solution from an empty front")
    F = np.array([m.objectives.as_array() for m in front])
    lo, hi = F.min(axis=0), F.max(axis=0)
    span = np.where(hi > lo, hi - lo, 1.0)
    score = ((F - lo) / span).sum(axis=1)
    best = score.min()
    tied = [i for i in range(len(front)) if score[i] <= best + 1e-12]
    i = min(tied, key=lambda i: (F[i, -1], front[i].chromosome.key()))
    return front[i]
