"""Full structural analysis of a loop, rendered as text or JSON."""
import json
import time
from contextlib import contextmanager
from dataclasses import dataclass, field

from . import permgrp as pg
from . import structure as st
from .errors import InternalInconsistency, OrderCapExceeded
from .isotopy import ISOTOPY_CAP, is_isomorphic, isotopy_classes
from .tableloop import is_associative, is_commutative, property_flags

GROUP_NAMES = ("mlt", "lmlt", "rmlt", "inn", "linn", "rinn")


@dataclass
class AnalysisOptions:
    isotopes: bool = False
    timings: bool = True
    enumeration_cap: int = pg.DEFAULT_ENUMERATION_CAP
    normal_cap: int = st.NORMAL_LATTICE_CAP
    isotopy_cap: int = ISOTOPY_CAP


@dataclass
class AnalysisReport:
    order: int
    identity: int
    properties: dict = field(default_factory=dict)
    groups: dict = field(default_factory=dict)
    group_relations: dict = field(default_factory=dict)
    substructures: dict = field(default_factory=dict)
    normal_subloops: list = None
    series: dict = field(default_factory=dict)
    isotopy: dict = None
    errors: list = field(default_factory=list)
    timings_ms: dict = field(default_factory=dict)

    @property
    def exit_code(self):
        return 2 if self.errors else 0

    def as_dict(self):
        out = {
            "order": self.order,
            "identity": self.identity,
            "properties": self.properties,
            "groups": self.groups,
            "group_relations": self.group_relations,
            "substructures": self.substructures,
            "normal_subloops": self.normal_subloops,
            "series": self.series,
        }
        if self.isotopy is not None:
            out["isotopy"] = self.isotopy
        out["errors"] = self.errors
        out["timings_ms"] = self.timings_ms
        return out


def _labels(S):
    return [m + 1 for m in sorted(S)]


def _group_summary(G, cap):
    info = {"order": G.order()}
    series = pg.derived_series(G)
    info["derived_series_orders"] = [H.order() for H in series]
    if series[-1].is_trivial():
        info["derived_length"] = len(series) - 1
    lcs = pg.lower_central_series(G)
    if lcs[-1].is_trivial():
        info["nilpotency_class"] = len(lcs) - 1
    if G.order() <= cap:
        info["center_order"] = pg.center(G, cap).order()
    p = pg.elementary_abelian_prime(G)
    if p is not None:
        info["elementary_abelian_p"] = p
    return info


def analyze(L, options=None):
    options = options or AnalysisOptions()
    rep = AnalysisReport(order=L.n, identity=L.identity + 1)

    @contextmanager
    def phase(name):
        t0 = time.perf_counter()
        try:
            yield
        except OrderCapExceeded as exc:
            rep.errors.append({"phase": name, "error": str(exc)})
        finally:
            if options.timings:
                rep.timings_ms[name] = round((time.perf_counter() - t0) * 1000, 3)

    with phase("properties"):
        rep.properties = property_flags(L).as_dict()

    with phase("groups"):
        groups = {name: getattr(st, name)(L) for name in GROUP_NAMES}
        for name in GROUP_NAMES:
            rep.groups[name] = _group_summary(groups[name], options.enumeration_cap)
        K = groups["rmlt"]
        rel = {
            "mlt_equals_lmlt": pg.equal_groups(groups["mlt"], groups["lmlt"]),
            "inn_equals_linn": pg.equal_groups(groups["inn"], groups["linn"]),
        }
        for name in ("mlt", "inn"):
            series = pg.derived_series(groups[name])
            rel[f"{name}_derived_series_elementary_abelian_p"] = [
                pg.elementary_abelian_prime(H) for H in series
            ]
        if K.order() <= options.enumeration_cap:
            ZK = pg.center(K, options.enumeration_cap)
            rel["rmlt_derived_equals_center"] = pg.equal_groups(pg.derived_subgroup(K), ZK)
            p = pg.elementary_abelian_prime(ZK)
            rel["rmlt_center_elementary_abelian_p"] = p
            rel["rmlt_quotient_by_center_elementary_abelian"] = (
                p is not None and pg.quotient_is_elementary_abelian(K, ZK, p)
            )
        rep.group_relations = rel

    with phase("substructures"):
        nuc = st.nucleus(L)
        comm = st.commutant(L)
        center = st.center_loop(L)
        if not set(center.members) <= set(nuc.members) & set(comm):
            raise InternalInconsistency("centre is not inside nucleus and commutant")
        nl = st.nucleus_left(L)
        rep.substructures = {
            "nucleus_left": _labels(nl),
            "nucleus_middle": _labels(st.nucleus_middle(L)),
            "nucleus_right": _labels(st.nucleus_right(L)),
            "nucleus": _labels(nuc),
            "commutant": _labels(comm),
            "center": _labels(center),
        }
        certify = L.n <= options.normal_cap
        rep.substructures["associator_subloop"] = _labels(st.associator_subloop(L, certify=certify))
        rep.substructures["derived_subloop"] = _labels(st.derived_subloop(L, certify=certify))
        nl_loop = nl.as_loop()
        if is_associative(nl_loop) and is_commutative(nl_loop):
            rep.substructures["nucleus_left_exponent"] = nl_loop.exponent()

    with phase("normal_subloops"):
        lattice = st.all_normal_subloops(L, options.normal_cap)
        for N in lattice:
            if not st.is_normal(L, N):
                raise InternalInconsistency(f"{N} failed the normality re-check")
        rep.normal_subloops = [_labels(N) for N in lattice]

    with phase("series"):
        rep.series = {
            "solvable": st.is_solvable(L),
            "derived_series": [_labels(S) for S in st.derived_series_loop(L)],
            "upper_central_series": [_labels(S) for S in st.upper_central_series(L)],
        }
        rep.series["centrally_nilpotent"] = len(rep.series["upper_central_series"][-1]) == L.n

    if options.isotopes:
        with phase("isotopy"):
            part = isotopy_classes(L, options.isotopy_cap)
            rep.isotopy = {
                "class_count": len(part),
                "classes": [
                    {"representative": a + 1, "members": _labels(m)} for a, m in part.classes
                ],
                "mlt_orders": sorted({st.mlt(I).order() for I in part.isotopes}),
            }

    return rep


def isotopy_summary(L, cap=ISOTOPY_CAP, compare=None):
    """Isotopy classes of L, optionally locating another loop among them."""
    part = isotopy_classes(L, cap)
    out = {
        "order": L.n,
        "class_count": len(part),
        "classes": [{"representative": a + 1, "members": _labels(m)} for a, m in part.classes],
    }
    if compare is not None:
        out["match"] = None
        for i, (a, _) in enumerate(part.classes):
            if is_isomorphic(part.isotopes[a], compare) is not None:
                out["match"] = i
                break
    return out


def to_json(obj):
    return json.dumps(obj, indent=2) + "\n"


def emit(report, fmt="text"):
    """Serialise a report; JSON output is deterministic apart from timings."""
    data = report.as_dict() if isinstance(report, AnalysisReport) else report
    if fmt == "json":
        return to_json(data).encode("utf-8")
    if fmt != "text":
        raise ValueError(f"unknown format {fmt!r}")
    return _text(data).encode("utf-8")


def _fmt_set(v):
    if v is None:
        return "-"
    if len(v) > 12 and v == list(range(1, len(v) + 1)):
        return f"{{1..{len(v)}}}"
    return "{" + ",".join(map(str, v)) + "}"


def _text(d):
    lines = [f"loop of order {d['order']}, identity {d['identity']}"]
    lines.append("properties:")
    for k, v in d["properties"].items():
        lines.append(f"  {k}: {v}")
    lines.append("groups:")
    for name, g in d["groups"].items():
        bits = [f"order {g['order']}"]
        if "derived_length" in g:
            bits.append(f"derived length {g['derived_length']}")
        bits.append("derived series " + " > ".join(map(str, g["derived_series_orders"])))
        if "nilpotency_class" in g:
            bits.append(f"nilpotency class {g['nilpotency_class']}")
        if "center_order" in g:
            bits.append(f"centre order {g['center_order']}")
        if "elementary_abelian_p" in g:
            bits.append(f"elementary abelian ({g['elementary_abelian_p']})")
        lines.append(f"  {name}: " + ", ".join(bits))
    for k, v in d["group_relations"].items():
        lines.append(f"  {k}: {v}")
    lines.append("substructures:")
    for k, v in d["substructures"].items():
        lines.append(f"  {k}: {v if isinstance(v, int) else _fmt_set(v)}")
    if d["normal_subloops"] is not None:
        lines.append("normal subloops: " + " < ".join(_fmt_set(s) for s in d["normal_subloops"]))
    if d["series"]:
        s = d["series"]
        lines.append(f"solvable: {s['solvable']}; centrally nilpotent: {s['centrally_nilpotent']}")
        lines.append("derived series: " + " > ".join(_fmt_set(x) for x in s["derived_series"]))
        lines.append("upper central series: " + " < ".join(_fmt_set(x) for x in s["upper_central_series"]))
    if d.get("isotopy"):
        iso = d["isotopy"]
        lines.append(f"isotopy classes: {iso['class_count']}")
        for c in iso["classes"]:
            lines.append(f"  representative {c['representative']}: {_fmt_set(c['members'])}")
    for e in d["errors"]:
        lines.append(f"error in {e['phase']}: {e['error']}")
    if d["timings_ms"]:
        lines.append("timings (ms): " + ", ".join(f"{k} {v}" for k, v in d["timings_ms"].items()))
    return "\n".join(lines) + "\n"
