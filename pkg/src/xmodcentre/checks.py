"""Verdict objects and set-level exactness helpers."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from .errors import ExactnessFailure


@dataclass(frozen=True)
class Verdict:
    ok: bool
    message: str = ""
    witness: Any = None

    def __bool__(self):
        return self.ok


PASS = Verdict(True)


def fail(message, witness=None):
    return Verdict(False, message, witness)


@dataclass
class Report:
    """Named verdicts collected while running a multi-stage check."""

    title: str
    verdicts: dict = field(default_factory=dict)
    data: dict = field(default_factory=dict)

    def add(self, name, verdict):
        self.verdicts[name] = verdict
        return verdict

    @property
    def ok(self):
        return all(self.verdicts.values())

    def __bool__(self):
        return self.ok

    def failures(self):
        return {k: v for k, v in self.verdicts.items() if not v}

    def lines(self):
        for name, v in self.verdicts.items():
            status = "PASS" if v else "FAIL"
            extra = f" ({v.message})" if v.message and not v else ""
            yield f"{status} {name}{extra}"


def image_of(mapping, domain):
    return {mapping(a) for a in domain}


def kernel_of(mapping, domain, identity=0):
    return {a for a in domain if mapping(a) == identity}


def exact_at(position, incoming_image, outgoing_kernel) -> Verdict:
    """Image of the incoming map equals the kernel of the outgoing one."""
    im, ker = set(incoming_image), set(outgoing_kernel)
    if im == ker:
        return Verdict(True)
    extra = sorted(im ^ ker)
    return Verdict(False, f"exactness fails at {position}: |im|={len(im)}, |ker|={len(ker)}", extra[:5])


def require(verdict: Verdict, position, cls=ExactnessFailure):
    if not verdict:
        raise cls(position, verdict.message, verdict.witness)
    return verdict
