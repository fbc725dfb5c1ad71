"""Suite-wide audit: every framed polynomial the engine produces is checked.

A hook on the skein evaluator asserts, at the moment of computation, that the
result respects the Seifert-circle degree bounds, the v/z parity pattern, and
the forced extreme-coefficient zeros of single-crossing circle pairs. Small
diagrams are also collected (deduplicated) so the acceptance suite can replay
them through the independent naive evaluator.
"""

from __future__ import annotations

from knitweave.diagram import PlanarDiagram, canonical_key, component_count, seifert_circles
from knitweave.laurent import LaurentVZ
from knitweave.skein import add_audit_hook, mfw_check, mp_vanishing, remove_audit_hook

audited_count = 0
small_diagrams: dict[tuple, PlanarDiagram] = {}
_SMALL_LIMIT = 8
_SMALL_CAP = 4000


def _audit(d: PlanarDiagram, h: LaurentVZ) -> None:
    global audited_count
    audited_count += 1
    s, _ = seifert_circles(d)
    c = component_count(d)
    assert mfw_check(h, s), f"MFW bounds violated: s={s}, H={h}"
    assert all((v - (s - 1)) % 2 == 0 for v in h.v_exponents()), (
        f"v-parity violated: s={s}, H={h}"
    )
    assert all((z - (c - 1)) % 2 == 0 for z in h.z_exponents()), (
        f"z-parity violated: c={c}, H={h}"
    )
    plus_zero, minus_zero = mp_vanishing(d)
    if plus_zero:
        assert not h.coeff_of_v(s - 1), f"forced H+ = 0 violated: H={h}"
    if minus_zero:
        assert not h.coeff_of_v(-s + 1), f"forced H- = 0 violated: H={h}"
    if len(d.crossings) <= _SMALL_LIMIT and len(small_diagrams) < _SMALL_CAP:
        small_diagrams.setdefault(canonical_key(d), d)


def pytest_configure(config):
    add_audit_hook(_audit)


def pytest_unconfigure(config):
    try:
        remove_audit_hook(_audit)
    except ValueError:
        pass
