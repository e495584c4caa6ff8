# qfsplit/catalog/enumeration.py
"""
Enumeration of lift perturbations G.

The G-space is all coefficient vectors over the field for the monomials of
weighted degree deg f. Candidates are evaluated in fixed-stride chunks, each
chunk as one batched computation; chunks are pure, so they can run on a
process pool and the merged, sorted counterexample list does not depend on
the worker count.
"""
from dataclasses import dataclass, replace
from functools import lru_cache
from itertools import chain
from typing import List, Optional, Tuple
import logging
import multiprocessing
import time

import numpy as np

from ..config.settings import settings
from ..core.batch import BatchField, broadcast
from ..core.delta_fedder import HypersurfacePresentation, batch_certificate_mask, batch_level_survivors
from ..core.exceptions import ConstraintError
from ..core.polynomial import Monomial, Polynomial
from ..models.models import EnumerationJob, EnumerationMode, EnumerationResult
from .instances import CatalogInstance, check_constraint, get_instance, parse_assignment
from .runner import field_label, instance_assignments

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Chunk:
    instance: str
    field_degree: int
    assignment: Tuple[Tuple[str, int], ...]
    bound: Optional[int]
    start: int = 0
    stop: int = 0
    codes: Optional[np.ndarray] = None


@lru_cache(maxsize=8)
def _base(instance_id: str, field_degree: int, assignment: Tuple[Tuple[str, int], ...]):
    instance = get_instance(instance_id)
    field = instance.field(field_degree)
    h = instance.presentation("0", field, dict(assignment))
    return h, h.ring.monomials_of_degree(h.d_f)


def decode_indices(start: int, stop: int, q: int, n: int) -> np.ndarray:
    """Rows of base-q digits of start..stop-1, least significant digit first"""
    idx = np.arange(start, stop, dtype=np.int64)
    digits = np.empty((len(idx), n), dtype=np.int64)
    for j in range(n):
        digits[:, j] = idx % q
        idx = idx // q
    return digits


def chunk_counterexamples(
    h: HypersurfacePresentation, monomials: List[Monomial], codes: np.ndarray, bound: Optional[int]
) -> List[Tuple[int, ...]]:
    """
    Rows of ``codes`` (G-coefficients in monomial order) that refute the
    claim: height above ``bound``, or no infinity certificate when
    ``bound`` is None.
    """
    batch = BatchField(h.ring.domain, len(codes))
    ring = h.ring.with_domain(batch)
    G = Polynomial(ring, {m: np.ascontiguousarray(codes[:, j]) for j, m in enumerate(monomials)})
    hb = HypersurfacePresentation(broadcast(h.f, batch), G, check_homogeneity=False)
    if bound is None:
        bad = np.nonzero(~batch_certificate_mask(hb))[0]
    else:
        bad = batch_level_survivors(hb, bound)
    return [tuple(int(v) for v in codes[i]) for i in bad]


def run_chunk(chunk: Chunk) -> List[Tuple[int, ...]]:
    h, monomials = _base(chunk.instance, chunk.field_degree, chunk.assignment)
    if chunk.codes is None:
        codes = decode_indices(chunk.start, chunk.stop, h.ring.domain.order, len(monomials))
    else:
        codes = chunk.codes
    found = chunk_counterexamples(h, monomials, codes, chunk.bound)
    logger.info("Chunk of %d candidates: %d counterexamples", len(codes), len(found))
    return found


def job_for(instance: CatalogInstance, **overrides) -> EnumerationJob:
    """The enumeration job stating an instance's universal claim"""
    spec = instance.universal
    if spec is None:
        raise ConstraintError(f"{instance.id} states no claim about every G")
    fields = dict(
        instance=instance.id,
        mode=spec.mode,
        bound=None if spec.infinite else spec.bound,
        samples=spec.samples,
        seed=0,
        workers=settings.ENUM_WORKERS,
        batch_size=settings.BATCH_SIZE,
        field_degree=spec.field_degree,
        parameter_samples=spec.parameter_samples,
    )
    fields.update({k: v for k, v in overrides.items() if v is not None})
    return EnumerationJob(**fields)


def enumerate_G(job: EnumerationJob) -> EnumerationResult:
    start_time = time.perf_counter()
    instance = get_instance(job.instance)
    field = instance.field(job.field_degree)
    if instance.is_parameterized and job.assignment:
        values = parse_assignment(instance, job.assignment, field)
        check_constraint(instance, field, values)
    else:
        [(_, values)] = instance_assignments(instance, field_degree=job.field_degree, samples=1, seed=job.seed or 0)
    key = tuple(sorted((s, int(v)) for s, v in values.items()))
    h, monomials = _base(instance.id, job.field_degree, key)
    q, n = field.order, len(monomials)
    space = q ** n
    size = max(1, job.batch_size)

    if job.mode == EnumerationMode.EXHAUSTIVE:
        if space > settings.EXHAUSTIVE_LIMIT:
            raise ConstraintError(
                f"{instance.id}: {q}^{n} candidates exceed the exhaustive limit {settings.EXHAUSTIVE_LIMIT}"
            )
        chunks = [
            Chunk(instance.id, job.field_degree, key, job.bound, start=s, stop=min(s + size, space))
            for s in range(0, space, size)
        ]
        checked = space
    else:
        samples = job.samples or 1000
        rng = np.random.default_rng(job.seed)
        codes = rng.integers(0, q, size=(samples, n), dtype=np.int64)
        chunks = [
            Chunk(instance.id, job.field_degree, key, job.bound, codes=codes[s:s + size])
            for s in range(0, samples, size)
        ]
        checked = samples

    logger.info("%s: %d candidates in %d chunks on %d worker(s)", instance.id, checked, len(chunks), job.workers)
    if job.workers > 1:
        with multiprocessing.Pool(processes=job.workers) as pool:
            results = pool.map(run_chunk, chunks)
    else:
        results = [run_chunk(c) for c in chunks]
    counterexamples = sorted(set(chain.from_iterable(results)))
    if counterexamples:
        logger.error("%s: %d counterexample(s) to the claimed bound", instance.id, len(counterexamples))
    return EnumerationResult(
        job=job,
        space_size=space,
        checked=checked,
        counterexamples=counterexamples,
        monomials=list(monomials),
        field_label=field_label(field),
        assignment={s: field.to_text(v) for s, v in values.items()},
        elapsed=time.perf_counter() - start_time,
    )


def claim_jobs(job: EnumerationJob) -> List[EnumerationJob]:
    """One job per distinct sampled parameter assignment; a fixed assignment runs as given"""
    instance = get_instance(job.instance)
    if not instance.is_parameterized or job.assignment:
        return [job]
    field = instance.field(job.field_degree)
    pairs = instance_assignments(
        instance, field_degree=job.field_degree, samples=job.parameter_samples, seed=job.seed or 0
    )
    jobs, seen = [], set()
    for _, values in pairs:
        assignment = {s: field.to_text(v) for s, v in values.items()}
        key = tuple(sorted(assignment.items()))
        if key not in seen:
            seen.add(key)
            jobs.append(replace(job, assignment=assignment))
    return jobs


def enumerate_claim(job: EnumerationJob) -> List[EnumerationResult]:
    """enumerate_G at every sampled parameter assignment of the instance"""
    return [enumerate_G(j) for j in claim_jobs(job)]


def counterexample_text(result: EnumerationResult, codes: Tuple[int, ...]) -> str:
    """G of a counterexample as an expression"""
    instance = get_instance(result.job.instance)
    ring = instance.ring(instance.field(result.job.field_degree), parameters=[])
    return Polynomial(ring, dict(zip(result.monomials, codes))).to_text()
