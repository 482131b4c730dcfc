"""Exact-rational charge accounting driven by declarative transfer rules.

Vertices start with charge degree minus a rational target; rules then move
fixed rational amounts from sender classes to neighboring receiver classes.
The engine logs every transfer, preserves the total exactly (Fraction
arithmetic throughout, never floats), and can audit the vertices left
negative by pointing at the catalog structures found in their closed
neighborhoods.

A rule's receiver selector has one of two arities.  ALL_MATCHING sends the
amount to every neighbor in the receiver classes.  ONE_DESIGNATED sends it
to exactly one of them: the unique eligible neighbor outside the rule's
avoid classes when there is exactly one such, otherwise the smallest-id
eligible neighbor.  That tie-break is a fixed, deterministic choice.
"""

from __future__ import annotations

import enum
import json
from fractions import Fraction
from pathlib import Path
from typing import NamedTuple

from .classes import ClassLabel, Scheme, scheme_labels
from .patterns import find_configurations


class Arity(enum.Enum):
    ALL_MATCHING = "ALL_MATCHING"
    ONE_DESIGNATED = "ONE_DESIGNATED"


class DischargeRule(NamedTuple):
    id: str
    sender: frozenset  # labels that send
    receiver: frozenset  # neighbor labels eligible to receive
    amount: Fraction
    arity: Arity = Arity.ALL_MATCHING
    avoid: frozenset = frozenset()  # ONE_DESIGNATED: dispreferred labels


class ChargeLedger(NamedTuple):
    initial: dict  # vertex -> Fraction
    final: dict  # vertex -> Fraction
    transfers: tuple  # (rule id, sender, receiver, Fraction), canonical order


class AuditRecord(NamedTuple):
    vertex: int
    final: Fraction
    patterns: tuple  # catalog pattern ids found in the closed neighborhood


def initial_charges(g, target):
    """Charge degree(v) minus target for every vertex, as Fractions."""
    target = Fraction(target)
    return {v: Fraction(g.degree(v)) - target for v in range(g.n)}


_L = ClassLabel

_T7_3CLASSES = frozenset(
    {
        _L.DEG3A,
        _L.DEG3B,
        _L.DEG3C_WEAK,
        _L.DEG3C_MODERATE,
        _L.DEG3C_STRONG,
        _L.DEG3D,
    }
)
_T8_3CLASSES = frozenset(
    {_L.DEG3A, _L.DEG3B_STRONG, _L.DEG3B_WEAK, _L.DEG3C, _L.DEG3D}
)
_T8_4CLASSES = frozenset(
    {_L.DEG4A, _L.DEG4B, _L.DEG4C_STRONG, _L.DEG4C_WEAK, _L.DEG4D}
)

_THETA7_RULES = (
    DischargeRule(
        "T7.R1a", frozenset({_L.DEG4}), frozenset({_L.DEG2}),
        Fraction(6, 11),
    ),
    DischargeRule(
        "T7.R1b", frozenset({_L.DEG4}), _T7_3CLASSES, Fraction(4, 33)
    ),
    DischargeRule(
        "T7.R2", frozenset({_L.DEG3B}), _T7_3CLASSES, Fraction(1, 22)
    ),
    DischargeRule(
        "T7.R3",
        frozenset({_L.DEG3C_STRONG}),
        _T7_3CLASSES,
        Fraction(5, 132),
        Arity.ONE_DESIGNATED,
        frozenset({_L.DEG3B}),
    ),
    DischargeRule(
        "T7.R4",
        frozenset({_L.DEG3C_MODERATE}),
        _T7_3CLASSES,
        Fraction(1, 33),
        Arity.ONE_DESIGNATED,
        frozenset({_L.DEG3C_WEAK, _L.DEG3C_MODERATE, _L.DEG3C_STRONG}),
    ),
    DischargeRule(
        "T7.R5", frozenset({_L.DEG3C_WEAK}), frozenset({_L.DEG3D}),
        Fraction(1, 66),
    ),
)

_THETA8_RULES = (
    DischargeRule(
        "T8.R1a", frozenset({_L.DEG5}), frozenset({_L.DEG3B_WEAK}),
        Fraction(10, 31),
    ),
    DischargeRule(
        "T8.R1b",
        frozenset({_L.DEG5}),
        frozenset({_L.DEG3A, _L.DEG3B_STRONG, _L.DEG3C, _L.DEG3D}),
        Fraction(8, 31),
    ),
    DischargeRule(
        "T8.R2", frozenset({_L.DEG4A}), _T8_4CLASSES, Fraction(11, 124)
    ),
    DischargeRule(
        "T8.R3a", frozenset({_L.DEG4B}), _T8_3CLASSES, Fraction(8, 31)
    ),
    DischargeRule(
        "T8.R3b", frozenset({_L.DEG4B}), _T8_4CLASSES, Fraction(1, 31)
    ),
    DischargeRule(
        "T8.R4a", frozenset({_L.DEG4C_STRONG}), frozenset({_L.DEG3C}),
        Fraction(7, 31),
    ),
    DischargeRule(
        "T8.R4b",
        frozenset({_L.DEG4C_STRONG}),
        frozenset({_L.DEG3B_STRONG}),
        Fraction(4, 31),
    ),
    DischargeRule(
        "T8.R5", frozenset({_L.DEG4C_WEAK}), frozenset({_L.DEG3C}),
        Fraction(6, 31),
    ),
    DischargeRule(
        "T8.R6", frozenset({_L.DEG4D}), frozenset({_L.DEG3B_STRONG}),
        Fraction(4, 31),
    ),
)


def builtin_ruleset(scheme):
    """The fixed transfer rules for a scheme."""
    if scheme == Scheme.THETA7:
        return list(_THETA7_RULES)
    if scheme == Scheme.THETA8:
        return list(_THETA8_RULES)
    raise ValueError(f"unknown scheme {scheme!r}")


def _validate_rules(rules, scheme):
    allowed = scheme_labels(scheme)
    for rule in rules:
        stray = (rule.sender | rule.receiver | rule.avoid) - allowed
        if stray:
            names = ", ".join(sorted(lab.value for lab in stray))
            raise ValueError(
                f"rule {rule.id!r} references classes outside "
                f"{scheme.value}: {names}"
            )


def apply_rules(g, labels, rules, charges=None, scheme=None):
    """Run the rules once; returns the full ledger.

    `charges` is the initial charge map (zero everywhere when omitted,
    which reduces the ledger to a pure flow record).  When `scheme` is
    given, every rule is first checked to reference only that scheme's
    classes.  Unlabeled (UNCLASSIFIED) vertices never send and never
    receive: no rule class matches them.

    The transfer log is sorted by (rule id, sender, receiver), so equal
    inputs always produce byte-equal ledgers.
    """
    if scheme is not None:
        _validate_rules(rules, scheme)
    if charges is None:
        initial = {v: Fraction(0) for v in range(g.n)}
    else:
        initial = {v: Fraction(charges[v]) for v in range(g.n)}
    delta = {v: Fraction(0) for v in range(g.n)}
    transfers = []
    for rule in rules:
        for v in range(g.n):
            if labels.get(v) not in rule.sender:
                continue
            eligible = [
                u for u in g.neighbors(v) if labels.get(u) in rule.receiver
            ]
            if not eligible:
                continue
            if rule.arity is Arity.ALL_MATCHING:
                receivers = eligible
            else:
                non_avoid = [
                    u for u in eligible if labels.get(u) not in rule.avoid
                ]
                receivers = (
                    [non_avoid[0]] if len(non_avoid) == 1 else [eligible[0]]
                )
            for u in receivers:
                delta[v] -= rule.amount
                delta[u] += rule.amount
                transfers.append((rule.id, v, u, rule.amount))
    transfers.sort(key=lambda t: (t[0], t[1], t[2]))
    final = {v: initial[v] + delta[v] for v in range(g.n)}
    assert sum(final.values(), Fraction(0)) == sum(
        initial.values(), Fraction(0)
    ), "transfers must conserve total charge"
    return ChargeLedger(initial, final, tuple(transfers))


def audit_negative(ledger, g, labels, scheme, matches=None):
    """Vertices with negative final charge, each tied to nearby catalog hits.

    For every vertex whose final charge is below zero, report the ids of
    catalog patterns matched somewhere inside its closed neighborhood.
    A nonempty pattern list names the local structures responsible; an
    empty list means the negativity has no cataloged explanation.  Pass
    `matches` to reuse an existing find_configurations result.
    """
    negatives = sorted(
        v for v, charge in ledger.final.items() if charge < 0
    )
    if not negatives:
        return []
    if matches is None:
        matches = find_configurations(g, scheme, labels)
    records = []
    for v in negatives:
        closed = set(g.neighbors(v)) | {v}
        hits = sorted(
            {
                m.pattern_id
                for m in matches
                if any(h in closed for _, h in m.assignment)
            }
        )
        records.append(AuditRecord(v, ledger.final[v], tuple(hits)))
    return records


def load_ruleset(source, scheme):
    """Parse a JSON rule file and validate it against a scheme.

    The file holds an array of objects with fields:

    * ``id``: unique rule name,
    * ``sender`` and ``receiver``: arrays of class label strings
      (the same spellings the classifier reports, e.g. ``"3C_weak"``),
    * ``amount``: a positive rational as a ``"p/q"`` string,
    * ``arity`` (optional): ``"ALL_MATCHING"`` (default) or
      ``"ONE_DESIGNATED"``,
    * ``avoid`` (optional): class array, only meaningful with
      ``ONE_DESIGNATED``.

    Any unknown class, class outside the scheme, malformed amount, or
    duplicate id raises ValueError.
    """
    if hasattr(source, "read"):
        data = json.load(source)
    else:
        data = json.loads(Path(source).read_text(encoding="utf-8"))
    if not isinstance(data, list):
        raise ValueError("ruleset file must hold a JSON array of rules")
    rules = []
    seen_ids = set()
    for i, item in enumerate(data):
        if not isinstance(item, dict):
            raise ValueError(f"rule {i}: expected an object")
        try:
            rid = item["id"]
            sender = item["sender"]
            receiver = item["receiver"]
            amount = item["amount"]
        except KeyError as exc:
            raise ValueError(f"rule {i}: missing field {exc}") from None
        if not isinstance(rid, str) or not rid:
            raise ValueError(f"rule {i}: id must be a nonempty string")
        if rid in seen_ids:
            raise ValueError(f"rule {rid!r}: duplicate id")
        seen_ids.add(rid)

        def classes(field, value, rid=rid):
            if not isinstance(value, list) or not value:
                raise ValueError(
                    f"rule {rid!r}: {field} must be a nonempty array"
                )
            out = set()
            for name in value:
                try:
                    out.add(ClassLabel(name))
                except ValueError:
                    raise ValueError(
                        f"rule {rid!r}: unknown class {name!r}"
                    ) from None
            return frozenset(out)

        sender = classes("sender", sender)
        receiver = classes("receiver", receiver)
        try:
            amount = Fraction(amount)
        except (ValueError, ZeroDivisionError, TypeError):
            raise ValueError(
                f"rule {rid!r}: amount must be a rational like \"5/132\""
            ) from None
        if amount <= 0:
            raise ValueError(f"rule {rid!r}: amount must be positive")
        arity_name = item.get("arity", Arity.ALL_MATCHING.value)
        try:
            arity = Arity(arity_name)
        except ValueError:
            raise ValueError(
                f"rule {rid!r}: unknown arity {arity_name!r}"
            ) from None
        avoid = (
            classes("avoid", item["avoid"])
            if "avoid" in item
            else frozenset()
        )
        rules.append(DischargeRule(rid, sender, receiver, amount, arity, avoid))
    _validate_rules(rules, scheme)
    return rules
