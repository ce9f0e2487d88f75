# src/mereo_geometry/checker/functor_library.py
"""Extensionality of name-forming functors over a fixed library.

    A eps F(B) /\ seq(B, C) -> A eps F(C)

for every unary functor F in the library, every singular A and all names
B, C. Functor variables are not part of the formula language, so F ranges
over a concrete list instead.
"""
import time

from ..errors import ArityMismatch, NonemptyLibraryRequired
from ..mereology.functors import DEFAULT_LIBRARY, DenotationCache
from .reports import CheckReport, Verdict

FORMULA_ID = "MereoT16"


def check_mereot16(model, functor_library=DEFAULT_LIBRARY):
    library = tuple(functor_library)
    if not library:
        raise NonemptyLibraryRequired()
    for functor in library:
        if functor.arity != 1:
            raise ArityMismatch(functor.value, 1, functor.arity)

    cache = DenotationCache(model)
    names = list(model.name_dens())
    started = time.perf_counter()
    assignments = 0
    for functor in library:
        for a in model.singulars():
            for b in names:
                for c in names:
                    assignments += 1
                    same_object = b.is_singular and b.bits == c.bits
                    if not same_object:
                        continue
                    if a.bits & cache.den(functor, (b,)).bits and \
                            not a.bits & cache.den(functor, (c,)).bits:
                        witness = (
                            ("F", functor.value), ("A", model.describe(a)),
                            ("B", model.describe(b)), ("C", model.describe(c)),
                        )
                        return CheckReport(
                            FORMULA_ID, model.model_id, Verdict.REFUTED,
                            counterexample={"F": functor, "A": a, "B": b, "C": c},
                            witness=witness, assignments=assignments,
                            elapsed_ms=(time.perf_counter() - started) * 1000.0,
                        )
    return CheckReport(
        FORMULA_ID, model.model_id, Verdict.VALID,
        assignments=assignments,
        elapsed_ms=(time.perf_counter() - started) * 1000.0,
        notes=(f"library: {', '.join(f.value for f in library)}",),
    )
