"""Service layer: turns validated requests into response models.

Both the HTTP app and the CLI call these functions; neither touches the
algebra directly.
"""
from __future__ import annotations

import json
from functools import lru_cache

from .checks import SUITES, expected_coproduct, run_suite
from .classifier import describe, enumerate_subalgebras, lattice, lattice_json, parallel_map, validate_theta
from .coefficients import Bicharacter, bicharacter_from_json, default_bicharacter
from .linalg import scalar_field
from .models import (
    CheckModel,
    CoproductResponse,
    CoproductTerm,
    DecomposeRequest,
    DecomposeResponse,
    EnumerateResponse,
    IntervalRequest,
    LatticeResponse,
    PBWTerm,
    PhiRequest,
    PhiResponse,
    RunConfig,
    SchemeModel,
    SubalgebraResponse,
    ThetaRequest,
    VerifyRequest,
    VerifyResponse,
)
from .pbw import leading_term, monomial_json, pbw_decompose, u_bracket
from .phi import ColoredScheme, clip, is_black_regular, is_white_regular, phi
from .shuffle import ShuffleElement, hopf_coproduct


@lru_cache(maxsize=64)
def _bicharacter_cached(n: int, modulus: int | None, doc: str | None) -> Bicharacter:
    if doc is None:
        return default_bicharacter(n, modulus)
    bc = bicharacter_from_json(json.loads(doc), modulus)
    bc.validate()
    return bc


def bicharacter(config: RunConfig) -> Bicharacter:
    modulus = config.t if config.mode == "cyclotomic" else None
    doc = json.dumps(config.bicharacter, sort_keys=True) if config.bicharacter else None
    return _bicharacter_cached(config.n, modulus, doc)


def _check_interval(n: int, k: int, m: int) -> None:
    if not 1 <= k <= m <= 2 * n:
        raise ValueError(f"need 1 <= k <= m <= {2 * n}, got k={k}, m={m}")


def _pbw_terms(bc: Bicharacter, parts) -> list[PBWTerm]:
    field = scalar_field(bc)
    return [PBWTerm(monomial=monomial_json(mono), coeff=field.render(c)) for mono, c in parts]


def _decompose(a: ShuffleElement) -> tuple[list[PBWTerm], PBWTerm | None]:
    parts = pbw_decompose(a)
    terms = _pbw_terms(a.bc, parts)
    lead = _pbw_terms(a.bc, [leading_term(a)])[0] if parts else None
    return terms, lead


def regularity_flags(n: int, S, k: int, m: int) -> list[str]:
    flags = []
    if is_white_regular(n, S, k, m):
        flags.append(f"white ({k},{m})-regular")
    if is_black_regular(n, S, k, m):
        flags.append(f"black ({k},{m})-regular")
    return flags or [f"not ({k},{m})-regular"]


def compute_phi(req: PhiRequest) -> PhiResponse:
    n = req.config.n
    _check_interval(n, req.k, req.m)
    bc = bicharacter(req.config)
    S = clip(req.S, req.k, req.m)
    value = phi(bc, S, req.k, req.m)
    terms, lead = _decompose(value)
    sc = ColoredScheme.of(n, S, req.k, req.m)
    return PhiResponse(
        S=list(S), k=req.k, m=req.m,
        value=value.to_json(), text=value.render(),
        decomposition=terms, leading_term=lead,
        white_regular=is_white_regular(n, S, req.k, req.m),
        black_regular=is_black_regular(n, S, req.k, req.m),
        flags=regularity_flags(n, S, req.k, req.m),
        scheme=SchemeModel(**sc.to_json(), plain=sc.render_plain(), shifted=sc.render_shifted()),
    )


def decompose(req: DecomposeRequest) -> DecomposeResponse:
    bc = bicharacter(req.config)
    if req.element is not None:
        a = ShuffleElement.from_json(bc, req.element)
    else:
        _check_interval(bc.n, req.k, req.m)
        a = phi(bc, req.S, req.k, req.m)
    terms, lead = _decompose(a)
    deg = a.degree
    return DecomposeResponse(degree=list(deg) if deg is not None else None,
                             decomposition=terms, leading_term=lead)


def _tensor_terms(bc: Bicharacter, tensor: dict) -> list[CoproductTerm]:
    return [CoproductTerm(group=list(g), left=list(l), right=list(r), coeff=c.render(bc.params))
            for (g, l, r), c in sorted(tensor.items())]


def coproduct(req: IntervalRequest) -> CoproductResponse:
    bc = bicharacter(req.config)
    _check_interval(bc.n, req.k, req.m)
    got = hopf_coproduct(u_bracket(bc, req.k, req.m))
    want = expected_coproduct(bc, req.k, req.m)
    diff = {}
    for key in set(got) | set(want):
        d = got.get(key, bc.const(0)) - want.get(key, bc.const(0))
        if d:
            diff[key] = d
    return CoproductResponse(k=req.k, m=req.m, matches=not diff,
                             computed=_tensor_terms(bc, got), expected=_tensor_terms(bc, want),
                             mismatched=_tensor_terms(bc, diff))


def _subalgebra(desc) -> SubalgebraResponse:
    return SubalgebraResponse(**desc.to_json())


def classify(req: ThetaRequest) -> SubalgebraResponse:
    theta = validate_theta(req.config.n, req.theta)
    return _subalgebra(describe(req.config.n, theta))


def enumerate_all(config: RunConfig) -> EnumerateResponse:
    rows = [_subalgebra(d) for d in enumerate_subalgebras(config.n)]
    return EnumerateResponse(n=config.n, count=len(rows), subalgebras=rows)


def hasse_diagram(config: RunConfig) -> LatticeResponse:
    edges = lattice_json(lattice(bicharacter(config), config.degree_bound))
    return LatticeResponse(n=config.n, nodes=sorted(edges), edges=edges)


def verify(req: VerifyRequest) -> VerifyResponse:
    results = run_suite(req.suite, bicharacter(req.config), req.config.degree_bound)
    models = [CheckModel(**r.to_json()) for r in results]
    return VerifyResponse(suite=req.suite, ok=all(m.ok for m in models), results=models)


def verify_many(config: RunConfig, suites: list[str]) -> list[VerifyResponse]:
    """Run suites concurrently; results come back in the requested order."""
    reqs = [VerifyRequest(config=config, suite=s) for s in suites]
    return parallel_map(verify, reqs)


__all__ = [
    "SUITES",
    "bicharacter",
    "classify",
    "compute_phi",
    "coproduct",
    "decompose",
    "enumerate_all",
    "hasse_diagram",
    "regularity_flags",
    "verify",
    "verify_many",
]
