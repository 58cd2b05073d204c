"""Check records and the invariant report assembled by the command line."""

import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .chow import H, Hp, format_class, gamma_class, integrate_blowup, ruled_degree, s, x_class
from .domains import PrimeField
from .families import EXPECTED, construct, dimension_formula, extract_line
from .ideal import Ideal, graded_piece, saturation
from .ratmap import (analyze, base_ideal, compose_check, exact_divide, image_of_hypersurface,
                     jacobian, secant_length)

FAMILIES = ("R", "C", "D", "J")
DIMENSIONS = {"R": 37, "C": 37, "D": 46, "J": 54}
GENERA = {"R": 0, "C": 1, "D": 2, "J": 3}
ROW_KEYS = ("bidegree", "alpha", "beta", "eta", "genus")


@dataclass
class Check:
    name: str
    anchor: str
    expected: object
    got: object
    seconds: float = 0.0

    @property
    def ok(self):
        return self.expected == self.got

    def as_dict(self):
        return {"name": self.name, "anchor": self.anchor, "expected": self.expected,
                "got": self.got, "status": "pass" if self.ok else "fail"}


@dataclass
class Report:
    provenance: dict
    sections: dict = field(default_factory=dict)     # section -> {key -> [Check]}
    rows: dict = field(default_factory=dict)         # family -> {seed -> row}

    def add(self, section, key, checks):
        self.sections.setdefault(section, {}).setdefault(key, []).extend(checks)

    def checks(self):
        for section in sorted(self.sections):
            for key in sorted(self.sections[section]):
                for c in self.sections[section][key]:
                    yield section, key, c

    def failures(self):
        return [f"{section}/{key}/{c.name}" for section, key, c in self.checks() if not c.ok]

    @property
    def ok(self):
        return not self.failures()

    def as_dict(self):
        out = {"provenance": self.provenance, "rows": self.rows, "sections": {}}
        for section in sorted(self.sections):
            out["sections"][section] = {
                key: [c.as_dict() for c in self.sections[section][key]]
                for key in sorted(self.sections[section])}
        out["failures"] = self.failures()
        out["status"] = "pass" if self.ok else "fail"
        return out

    def to_json(self):
        return json.dumps(self.as_dict(), indent=2, sort_keys=True) + "\n"

    def timings(self):
        return {f"{section}/{key}/{c.name}": round(c.seconds, 3)
                for section, key, c in self.checks()}


def report_from_json(text):
    data = json.loads(text)
    rep = Report(data["provenance"], rows=data["rows"])
    for section, groups in data["sections"].items():
        for key, checks in groups.items():
            rep.add(section, key, [Check(c["name"], c["anchor"], c["expected"], c["got"])
                                   for c in checks])
    return rep


def _timed(name, anchor, expected, thunk):
    t = time.perf_counter()
    got = thunk()
    return Check(name, anchor, expected, got, time.perf_counter() - t)


# -- per-family analysis --------------------------------------------------------
def family_task(family, seed, prime):
    """Construct and analyze one member; returns plain data so it can cross process boundaries."""
    t = time.perf_counter()
    c = construct(family, seed, field=PrimeField(prime))
    a = analyze(c.map, seed)
    row = a.row()
    extra = {"degC1": a.degC1, "degC2": a.degC2, "birational": a.birational,
             "base_hilbert": a.base_poly, "jacobian_degree": a.jacobian_degree}
    return family, seed, row, extra, dict(a.flags), time.perf_counter() - t


def row_checks(family, row, extra, flags, seconds):
    exp = EXPECTED[family]
    anchors = {"bidegree": "bidegree of the map and its inverse",
               "alpha": "degree of the one-dimensional base scheme",
               "beta": "dimension of the singular scheme",
               "eta": "degree of the singular scheme",
               "genus": "geometric genus of a general member's plane section"}
    checks = []
    for key in ROW_KEYS:
        if key == "eta" and exp["beta"] != 1:
            continue
        checks.append(Check(key, anchors[key], exp[key], row[key]))
    checks.append(Check("liaison_sum", "degC1 + degC2 equals d^2", 16,
                        extra["degC1"] + extra["degC2"]))
    checks.append(Check("birational", "fibre of a general point is a single reduced point",
                        True, extra["birational"]))
    checks.append(Check("jacobian_degree", "Jacobian determinant has degree 4(d-1)", 12,
                        extra["jacobian_degree"]))
    if checks:
        checks[0].seconds = seconds
    return checks


def dimension_checks():
    checks = []
    for fam in FAMILIES:
        checks.append(Check(f"dim_{fam}", "dimension of the family", DIMENSIONS[fam],
                            dimension_formula(fam)[0]))
    for fam in ("J", "R"):
        checks.append(Check(f"identity_{fam}", "parameter count identity for 2 <= d <= 8", True,
                            all(dimension_formula(fam, d)[1] for d in range(2, 9))))
    for fam in ("D", "C"):
        checks.append(Check(f"identity_{fam}", "parameter count identity", True,
                            dimension_formula(fam)[1]))
    return checks


def chow_checks():
    X = x_class()
    gam = gamma_class()
    checks = [
        Check("X_H3", "X . H^3", 1, (X * H ** 3).coefficient(1, 3, 3)),
        Check("X_Hp3", "X . H'^3", 1, (X * Hp ** 3).coefficient(1, 3, 3)),
        Check("gamma_class", "class of the curve Gamma on the blow-up", "3*H^2+5*s*H",
              format_class(gam)),
        Check("gamma_H", "Gamma . H", 8, integrate_blowup(gam * H)),
        Check("gamma_s", "Gamma . s", 3, integrate_blowup(gam * s)),
    ]
    for d in range(2, 9):
        checks.append(Check(f"ruled_degree_{d}", "degree of the ruled threefold image", d,
                            ruled_degree(d)))
    return checks


# -- determinantal deep and contraction suites ----------------------------------
def deep_checks(c):
    tau, taup = c.map, c.inverse
    Gamma, Delta = c.witnesses["Gamma"], c.witnesses["Delta"]
    G = c.witnesses["G"]
    base = base_ideal(tau)
    checks = [
        _timed("gamma_hilbert", "Hilbert polynomial of the base curve", "8t-4",
               lambda: Gamma.hilbert().poly_string()),
        _timed("secant", "length of Gamma meet Delta", 5, lambda: secant_length(Gamma, Delta)),
        _timed("base_piece_4", "quartics through the base scheme", 4,
               lambda: len(graded_piece(base, 4))),
        _timed("gamma_piece_3", "cubics through Gamma", 1, lambda: len(graded_piece(Gamma, 3))),
        _timed("compose_degree", "inverse composed with the map is c times identity", 15,
               lambda: _degree_or_none(compose_check(tau, taup))),
        _timed("syzygies", "columns of G annihilate the minors", True,
               lambda: _columns_annihilate(G, tau.components)),
    ]
    S3 = graded_piece(Gamma, 3)[0]

    def cofactor():
        q = exact_divide(jacobian(tau), S3)
        return None if q is None else q.degree()

    checks.append(_timed("jacobian_cofactor", "Jacobian divided by the cubic through Gamma", 9,
                         cofactor))
    return checks


def contraction_checks(c, seed=1):
    tau, taup = c.map, c.inverse
    Gamma = c.witnesses["Gamma"]
    S3 = graded_piece(Gamma, 3)[0]
    checks = []
    t = time.perf_counter()
    img = image_of_hypersurface(tau, S3, seed)
    dt = time.perf_counter() - t
    checks.append(Check("image_S3_dim", "image of the cubic surface", 1, img.dim, dt))
    checks.append(Check("image_S3_degree", "image of the cubic surface is a line", 1, img.degree))
    Dp = extract_line(taup)
    bp = base_ideal(taup)
    Gp = saturation(bp, Dp) if Dp is not None else None
    line = Ideal(img.linear_forms, img.ideal.ring) if img.linear_forms else None
    checks.append(Check("image_S3_is_secant_line", "image line is the 5-secant of Gamma'",
                        True, line is not None and Dp is not None and line == Dp))
    checks.append(Check("gamma_prime_secant", "Gamma' meets its line in length 5", 5,
                        secant_length(Gp, Dp) if Gp is not None else None))
    q = exact_divide(jacobian(tau), S3)
    t = time.perf_counter()
    img9 = image_of_hypersurface(tau, q, seed)
    dt = time.perf_counter() - t
    checks.append(Check("image_S9_dim", "image of the degree-9 cofactor", 1, img9.dim, dt))
    checks.append(Check("image_S9_degree", "image of the degree-9 cofactor is a degree-8 curve",
                        8, img9.degree))
    return checks


def _degree_or_none(f):
    return None if f is None else f.degree()


def _columns_annihilate(G, minors):
    return all(f.is_zero() for f in G.transpose().apply(list(minors)))


# -- assembly -------------------------------------------------------------------
def invariant_report(prime=32003, seeds=(1,), tier="fast", jobs=1):
    rep = Report({"prime": prime, "seeds": list(seeds), "tier": tier})
    tasks = [(fam, seed) for fam in FAMILIES for seed in seeds]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            futures = [pool.submit(family_task, fam, seed, prime) for fam, seed in tasks]
            results = [f.result() for f in futures]
    else:
        results = [family_task(fam, seed, prime) for fam, seed in tasks]
    # assembly order is fixed by the task list, not by completion order
    for fam, seed, row, extra, flags, secs in results:
        rep.rows.setdefault(fam, {})[str(seed)] = dict(row, **{k: extra[k] for k in
                                                               ("degC1", "degC2")})
        rep.add("table", f"{fam}/{seed}", row_checks(fam, row, extra, flags, secs))
    rep.add("dimension", "row", dimension_checks())
    rep.add("genus", "row", [Check(f"genus_{fam}", "genus row", GENERA[fam],
                                   _common(rep.rows[fam], "genus")) for fam in FAMILIES])
    rep.add("chow", "classes", chow_checks())
    if tier == "full":
        for seed in seeds:
            c = construct("D", seed, field=PrimeField(prime))
            rep.add("deep", f"D/{seed}", deep_checks(c))
            rep.add("contraction", f"D/{seed}", contraction_checks(c, seed))
    return rep


def _common(rows, key):
    values = {repr(r[key]) for r in rows.values()}
    if len(values) != 1:
        return None
    return next(iter(rows.values()))[key]


def render_table(rep):
    head = ("family", "seed", "bidegree", "alpha", "beta", "eta", "genus", "C1", "C2")
    lines = ["  ".join(f"{h:>8}" for h in head)]
    for fam in FAMILIES:
        for seed, row in rep.rows.get(fam, {}).items():
            cells = (fam, seed, "({},{})".format(*row["bidegree"]), row["alpha"], row["beta"],
                     "-" if row["eta"] is None else row["eta"], row["genus"],
                     row["degC1"], row["degC2"])
            lines.append("  ".join(f"{str(x):>8}" for x in cells))
    lines.append("")
    lines.append("dimension  " + "  ".join(f"{f}:{DIMENSIONS[f]}" for f in FAMILIES))
    lines.append("genus      " + "  ".join(f"{f}:{GENERA[f]}" for f in FAMILIES))
    return "\n".join(lines)


def render_text(rep, timings=False):
    out = []
    if rep.rows:
        out.append(render_table(rep))
        out.append("")
    times = rep.timings() if timings else {}
    for section, key, c in rep.checks():
        tag = "ok  " if c.ok else "FAIL"
        line = f"{tag} {section}/{key}/{c.name}: expected {c.expected} got {c.got}"
        if timings:
            line += f" ({times[f'{section}/{key}/{c.name}']}s)"
        out.append(line)
    out.append("")
    out.append("status: " + ("pass" if rep.ok else "fail"))
    return "\n".join(out) + "\n"
