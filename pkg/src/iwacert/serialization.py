"""JSON / JSONL certificate format.

Integers are written as decimal strings so that consumers with 64-bit
number types cannot truncate them. Only the JSON forms are a stable
contract; :func:`to_text` is for people.
"""

import json

from .certifier import Certificate, Claim, External, RuleUse
from .tower import FieldDescriptor, FieldKind


class CertificateFormatError(ValueError):
    """Malformed certificate input; ``location`` says where."""

    def __init__(self, message, location=""):
        self.location = location
        super().__init__(f"{location}: {message}" if location else message)


def _s(n):
    return None if n is None else str(n)


def certificate_to_dict(c):
    return {
        "version": c.version,
        "p": _s(c.p),
        "field": {
            "kind": c.field.kind.value,
            "disc_f": _s(c.field.disc_f),
            "ell": _s(c.field.ell),
            "degree": _s(c.field.degree),
        },
        "claims": [
            {
                "subject": cl.subject,
                "rules": [{"rule": u.rule, "premises": list(u.premises)} for u in cl.rules],
                "witnesses": {k: _s(v) for k, v in cl.witnesses.items()},
                "external": [
                    {"source": e.source, "citation": e.citation, **({"witness": e.witness} if e.witness else {})}
                    for e in cl.external
                ],
            }
            for cl in c.claims
        ],
        "search": {k: _s(v) for k, v in c.search.items()},
    }


def _int(value, where):
    if isinstance(value, bool) or not isinstance(value, (str, int)):
        raise CertificateFormatError(f"expected a decimal integer string, got {value!r}", where)
    try:
        return int(value)
    except ValueError:
        raise CertificateFormatError(f"not a decimal integer: {value!r}", where) from None


def _opt_int(value, where):
    return None if value is None else _int(value, where)


def certificate_from_dict(d, where="certificate"):
    try:
        fd = d["field"]
        try:
            kind = FieldKind(fd["kind"])
        except ValueError:
            raise CertificateFormatError(f"unknown field kind {fd['kind']!r}", f"{where}.field.kind") from None
        field = FieldDescriptor(
            kind,
            _int(fd["disc_f"], f"{where}.field.disc_f"),
            _opt_int(fd.get("ell"), f"{where}.field.ell"),
            _int(fd["degree"], f"{where}.field.degree"),
        )
        claims = []
        for i, cd in enumerate(d["claims"]):
            cw = f"{where}.claims[{i}]"
            claims.append(Claim(
                str(cd["subject"]),
                tuple(RuleUse(str(r["rule"]), tuple(str(x) for x in r["premises"])) for r in cd["rules"]),
                {str(k): _int(v, f"{cw}.witnesses.{k}") for k, v in cd["witnesses"].items()},
                tuple(External(str(e["source"]), str(e["citation"]), e.get("witness")) for e in cd["external"]),
            ))
        return Certificate(
            _int(d["p"], f"{where}.p"),
            field,
            claims,
            {str(k): _int(v, f"{where}.search.{k}") for k, v in d.get("search", {}).items()},
            d["version"],
        )
    except KeyError as exc:
        raise CertificateFormatError(f"missing key {exc.args[0]!r}", where) from None
    except (TypeError, AttributeError) as exc:
        raise CertificateFormatError(f"bad structure ({exc})", where) from None


def to_json_line(c):
    return json.dumps(certificate_to_dict(c), ensure_ascii=False, separators=(",", ":"))


def dumps_json(certs):
    return json.dumps([certificate_to_dict(c) for c in certs], ensure_ascii=False, indent=2) + "\n"


def loads(text):
    """Parse a JSON array, a single JSON object, or JSONL. Empty input gives []."""
    stripped = text.strip()
    if not stripped:
        return []
    if stripped.startswith("["):
        try:
            data = json.loads(stripped)
        except json.JSONDecodeError as exc:
            raise CertificateFormatError(exc.msg, f"line {exc.lineno} column {exc.colno}") from None
        return [certificate_from_dict(d, f"certificate {i}") for i, d in enumerate(data)]
    try:
        return [certificate_from_dict(json.loads(stripped), "certificate 0")]
    except json.JSONDecodeError:
        pass
    out = []
    for lineno, line in enumerate(text.splitlines(), 1):
        if not line.strip():
            continue
        try:
            d = json.loads(line)
        except json.JSONDecodeError as exc:
            raise CertificateFormatError(exc.msg, f"line {lineno} column {exc.colno}") from None
        out.append(certificate_from_dict(d, f"line {lineno}"))
    return out


def to_text(c):
    lines = [f"p = {c.p}   k = {c.field}   [k:Q] = {c.field.degree}"]
    for cl in c.claims:
        lines.append(f"  {cl.subject}")
        lines.append("    via " + " -> ".join(u.rule for u in cl.rules))
        if cl.witnesses:
            lines.append("    witnesses: " + ", ".join(f"{k}={v}" for k, v in cl.witnesses.items()))
        for e in cl.external:
            lines.append(f"    cited: {e.source} ({e.citation})")
    return "\n".join(lines)
