"""The concurrency contract: pure functions, safe under concurrent callers
mixing working precisions."""

import threading
from fractions import Fraction

from fracpoly.families import FamilyParams, family_numbers
from fracpoly.gammafns import gamma
from fracpoly.mittag import MLParams, ml_eval


def test_concurrent_mixed_precision_gamma():
    serial = {
        (num, prec): gamma(Fraction(num, 3), prec).value
        for num in (1, 2, 4, 5, 7, 8)
        for prec in (64, 128, 192)
    }
    results = {}
    errors = []

    def worker(num, prec):
        try:
            for _ in range(5):
                results[(num, prec, threading.get_ident())] = gamma(Fraction(num, 3), prec).value
        except Exception as exc:  # pragma: no cover
            errors.append(exc)

    threads = [
        threading.Thread(target=worker, args=(num, prec))
        for num in (1, 2, 4, 5, 7, 8)
        for prec in (64, 128, 192)
    ]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    assert not errors
    for (num, prec, _), val in results.items():
        assert val == serial[(num, prec)]


def test_concurrent_family_numbers_and_ml():
    want_nums = family_numbers(FamilyParams("bernoulli", 1, 2), 12)
    want_ml = ml_eval(MLParams(Fraction(1, 2), 1), 1, precision=128).value
    failures = []

    def nums_worker():
        got = family_numbers(FamilyParams("bernoulli", 1, 2), 12)
        if got != want_nums:
            failures.append("numbers")

    def ml_worker():
        got = ml_eval(MLParams(Fraction(1, 2), 1), 1, precision=128).value
        if got != want_ml:
            failures.append("ml")

    threads = [threading.Thread(target=nums_worker) for _ in range(6)]
    threads += [threading.Thread(target=ml_worker) for _ in range(6)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    assert not failures
