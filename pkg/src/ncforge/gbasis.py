"""Degree-bounded completion of two-sided ideals in the free algebra.

Implements the diamond-lemma toolchain: Buchberger-style completion by
overlap ambiguities, normal forms, normal-word bases, the Ufnarovski-graph
finiteness certificate, Hilbert series, and ideal membership.

A rewrite rule is a pair ``lead -> tail`` with ``lead`` a word strictly
greater (deglex) than every word of ``tail``; the rule stands for the
ideal element ``lead - tail``.  A system is *certified* once every overlap
ambiguity of the final inter-reduced rule set reduces to zero; the
certificate is recomputed from scratch at the end of ``complete``, so it
never depends on bookkeeping during the incremental phase.
"""

from __future__ import annotations

import heapq
from collections import deque
from typing import Sequence

from .freealg import Alphabet, NcPoly, Word, deglex_key


class CompletionOverflow(RuntimeError):
    """Completion exceeded its degree bound or rule budget.

    Carries the uncertified partial system in ``partial``.
    """

    def __init__(self, reason: str, partial: "RewriteSystem"):
        super().__init__(reason)
        self.partial = partial


class Presentation:
    """An alphabet together with a finite list of defining relations."""

    def __init__(self, alphabet: Alphabet, relations: Sequence[NcPoly], label: str = ""):
        for r in relations:
            if r.is_zero():
                raise ValueError("zero relation in presentation")
            if not r.lead_word():
                raise ValueError("a relation must not be a scalar")
            if r.alphabet != alphabet:
                raise ValueError("relation over a different alphabet")
        self.alphabet = alphabet
        self.relations = list(relations)
        self.label = label
        self.field = relations[0].field if relations else None

    def __repr__(self):
        return f"Presentation({self.label or self.alphabet}, {len(self.relations)} relations)"


class RewriteSystem:
    """A completed, inter-reduced set of monic rules with certificate flag."""

    def __init__(self, alphabet: Alphabet, field, rules, degree_bound: int, certified: bool):
        self.alphabet = alphabet
        self.field = field
        # rules: list of (lead word, tail dict word->coeff), deglex-sorted by lead
        self._rules = sorted(rules, key=lambda r: deglex_key(r[0]))
        self.degree_bound = degree_bound
        self.certified = certified
        self._index = None
        self._levels: list[list[Word]] | None = None

    @property
    def rules(self) -> list[tuple[Word, NcPoly]]:
        return [(lead, NcPoly(self.alphabet, self.field, dict(tail)))
                for lead, tail in self._rules]

    @property
    def lead_words(self) -> list[Word]:
        return [lead for lead, _ in self._rules]

    def __len__(self):
        return len(self._rules)

    def __repr__(self):
        leads = ", ".join(self.alphabet.word_str(l) for l in self.lead_words)
        return f"RewriteSystem([{leads}], certified={self.certified})"

    def rule_polys(self) -> list[NcPoly]:
        """Each rule as the ideal element lead - tail."""
        out = []
        for lead, tail in self._rules:
            p = NcPoly.monomial(self.alphabet, self.field, lead) \
                - NcPoly(self.alphabet, self.field, dict(tail))
            out.append(p)
        return out

    def index(self):
        if self._index is None:
            self._index = _build_index(self._rules, len(self.alphabet))
        return self._index

    @property
    def collapsed(self) -> bool:
        """True when the ideal contains a unit (zero quotient)."""
        return any(lead == () for lead, _ in self._rules)


# ---------------------------------------------------------------------------
# reduction engine (internal dict representation)
# ---------------------------------------------------------------------------

def _build_index(rules, n_letters):
    """Group rules by first letter for factor search; deterministic order."""
    by_first = [[] for _ in range(n_letters)]
    empty_lead = None
    for lead, tail in sorted(rules, key=lambda r: deglex_key(r[0])):
        if lead == ():
            empty_lead = (lead, 0, tail)
            continue
        by_first[lead[0]].append((lead, len(lead), tail))
    return by_first, empty_lead


def _find_reduction(word, by_first):
    n = len(word)
    for i in range(n):
        for lead, L, tail in by_first[word[i]]:
            if i + L <= n and word[i:i + L] == lead:
                return i, L, tail
    return None


def _negkey(w):
    return (-len(w), tuple(-x for x in w))


def _nf(terms: dict, index, field) -> dict:
    """Normal form of a dict-polynomial; processes greatest words first."""
    by_first, empty_lead = index
    if empty_lead is not None:
        return {}
    mod = field.modulus
    pending = dict(terms)
    heap = [(_negkey(w), w) for w in pending]
    heapq.heapify(heap)
    out: dict = {}
    while heap:
        _, w = heapq.heappop(heap)
        if w not in pending:
            continue
        c = pending.pop(w)
        hit = _find_reduction(w, by_first)
        if hit is None:
            out[w] = c
            continue
        i, L, tail = hit
        prefix, suffix = w[:i], w[i + L:]
        if mod is not None:
            for tw, tc in tail.items():
                nw = prefix + tw + suffix
                s = (pending.get(nw, 0) + c * tc) % mod
                if s:
                    if nw not in pending:
                        heapq.heappush(heap, (_negkey(nw), nw))
                    pending[nw] = s
                else:
                    pending.pop(nw, None)
        else:
            for tw, tc in tail.items():
                nw = prefix + tw + suffix
                s = field.add(pending.get(nw, field.zero), field.mul(c, tc))
                if field.is_zero(s):
                    pending.pop(nw, None)
                else:
                    if nw not in pending:
                        heapq.heappush(heap, (_negkey(nw), nw))
                    pending[nw] = s
    return out


def _sub_into(acc: dict, words_coeffs, field):
    for w, c in words_coeffs:
        s = field.add(acc.get(w, field.zero), c)
        if field.is_zero(s):
            acc.pop(w, None)
        else:
            acc[w] = s


def _spoly(lead1, tail1, lead2, tail2, overlap, field):
    """S-polynomial of the ambiguity lead1[-o:] == lead2[:o]."""
    z = lead2[overlap:]
    x = lead1[:len(lead1) - overlap]
    acc: dict = {}
    _sub_into(acc, ((tw + z, tc) for tw, tc in tail1.items()), field)
    _sub_into(acc, ((x + tw, field.neg(tc)) for tw, tc in tail2.items()), field)
    return acc


def _overlaps(lead1, lead2):
    """Proper overlap lengths o: a suffix of lead1 equals a prefix of lead2."""
    top = min(len(lead1), len(lead2))
    return [o for o in range(1, top) if lead1[len(lead1) - o:] == lead2[:o]]


# ---------------------------------------------------------------------------
# completion
# ---------------------------------------------------------------------------

class _Completer:
    def __init__(self, pres: Presentation, degree_bound: int, max_rules: int):
        self.alphabet = pres.alphabet
        self.field = pres.field
        self.degree_bound = degree_bound
        self.max_rules = max_rules
        self.rules: list = []          # [lead, tail, alive]
        self.queue: deque = deque(dict(r.terms) for r in pres.relations)
        self.pairs: list = []          # heap of (deglex key of ambiguity, seq, i, j, o)
        self._seq = 0
        self.collapsed = False

    def _alive(self):
        return [(lead, tail) for lead, tail, alive in self.rules if alive]

    def _index(self):
        return _build_index(self._alive(), len(self.alphabet))

    def _partial(self) -> "RewriteSystem":
        return RewriteSystem(self.alphabet, self.field, self._alive(),
                             self.degree_bound, certified=False)

    def _push_pairs(self, i):
        lead_i = self.rules[i][0]
        for j, (lead_j, _tail_j, alive) in enumerate(self.rules):
            if not alive:
                continue
            for o in _overlaps(lead_i, lead_j):
                w = lead_i + lead_j[o:]
                self._seq += 1
                heapq.heappush(self.pairs, (deglex_key(w), self._seq, i, j, o))
            if j != i:
                for o in _overlaps(lead_j, lead_i):
                    w = lead_j + lead_i[o:]
                    self._seq += 1
                    heapq.heappush(self.pairs, (deglex_key(w), self._seq, j, i, o))

    def _add_rule(self, nf_dict):
        F = self.field
        lead = max(nf_dict, key=deglex_key)
        if lead == ():
            # the ideal contains a unit: everything collapses
            self.rules = [[(), {}, True]]
            self.pairs = []
            self.queue.clear()
            self.collapsed = True
            return
        if len(lead) > self.degree_bound:
            raise CompletionOverflow(
                f"rule lead degree {len(lead)} exceeds degree bound {self.degree_bound}",
                self._partial())
        inv = F.inv(nf_dict[lead])
        tail = {w: F.neg(F.mul(c, inv)) for w, c in nf_dict.items() if w != lead}
        self.rules.append([lead, tail, True])
        new_i = len(self.rules) - 1
        if sum(1 for r in self.rules if r[2]) > self.max_rules:
            raise CompletionOverflow(
                f"rule count exceeds max_rules {self.max_rules}", self._partial())
        # inter-reduce: kill rules whose lead contains the new lead; refresh tails
        for i, rule in enumerate(self.rules):
            if i == new_i or not rule[2]:
                continue
            r_lead, r_tail = rule[0], rule[1]
            if _contains_factor(r_lead, lead):
                rule[2] = False
                poly = {r_lead: F.one}
                _sub_into(poly, ((w, F.neg(c)) for w, c in r_tail.items()), F)
                self.queue.append(poly)
            elif any(_contains_factor(w, lead) for w in r_tail):
                rule[1] = _nf(r_tail, self._index(), F)
        self._push_pairs(new_i)

    def run(self) -> "RewriteSystem":
        F = self.field
        while True:
            while (self.queue or self.pairs) and not self.collapsed:
                if self.queue:
                    poly = self.queue.popleft()
                    nf = _nf(poly, self._index(), F)
                    if nf:
                        self._add_rule(nf)
                    continue
                _key, _seq, i, j, o = heapq.heappop(self.pairs)
                if not (self.rules[i][2] and self.rules[j][2]):
                    continue
                s = _spoly(self.rules[i][0], self.rules[i][1],
                           self.rules[j][0], self.rules[j][1], o, F)
                nf = _nf(s, self._index(), F)
                if nf:
                    self.queue.append(nf)
            # quiescent: recompute the certificate from the final rule set
            failures = _certification_failures(self._alive(), self.field, len(self.alphabet))
            if not failures:
                break
            self.queue.extend(failures)
        return RewriteSystem(self.alphabet, self.field, self._alive(),
                             self.degree_bound, certified=True)


def _contains_factor(word, factor) -> bool:
    L = len(factor)
    if L == 0:
        return True
    return any(word[i:i + L] == factor for i in range(len(word) - L + 1))


def _certification_failures(rules, field, n_letters: int) -> list[dict]:
    index = _build_index(rules, n_letters)
    failures = []
    for i, (l1, t1) in enumerate(rules):
        for j, (l2, t2) in enumerate(rules):
            for o in _overlaps(l1, l2):
                s = _spoly(l1, t1, l2, t2, o, field)
                nf = _nf(s, index, field)
                if nf:
                    failures.append(nf)
    return failures


def complete(pres: Presentation, degree_bound: int = 12, max_rules: int = 200) -> RewriteSystem:
    """Complete a presentation to a certified rewrite system.

    Deterministic for fixed inputs.  Raises :class:`CompletionOverflow`
    (carrying the partial system) if a rule would exceed ``degree_bound``
    or the rule count would exceed ``max_rules``.
    """
    if pres.field is None:
        raise ValueError("empty presentation needs at least one relation")
    max_rel_deg = max(r.degree() for r in pres.relations)
    if degree_bound < max_rel_deg:
        raise ValueError(f"degree_bound {degree_bound} below max relation degree {max_rel_deg}")
    return _Completer(pres, degree_bound, max_rules).run()


def free_system(alphabet: Alphabet, field, degree_bound: int = 12) -> RewriteSystem:
    """The empty rewrite system (no relations): the free algebra itself."""
    return RewriteSystem(alphabet, field, [], degree_bound, certified=True)


# ---------------------------------------------------------------------------
# queries on a completed system
# ---------------------------------------------------------------------------

def normal_form(rs: RewriteSystem, p: NcPoly) -> NcPoly:
    """Reduce p to its normal form modulo the system's ideal."""
    if p.alphabet != rs.alphabet:
        raise ValueError("alphabet mismatch")
    return NcPoly(rs.alphabet, rs.field, _nf(p.terms, rs.index(), rs.field))


def contains(rs: RewriteSystem, p: NcPoly) -> bool:
    """Ideal membership: true iff the normal form of p vanishes."""
    _require_certified(rs)
    return not _nf(p.terms, rs.index(), rs.field)


def _require_certified(rs: RewriteSystem):
    if not rs.certified:
        raise ValueError("operation requires a certified rewrite system")


def _levels(rs: RewriteSystem, max_degree: int | None) -> list[list[Word]]:
    """Normal words grouped by degree, each level lex-sorted."""
    if rs.collapsed:
        return [[]]
    by_first, _ = rs.index()
    leads = rs.lead_words
    cached = rs._levels
    levels = [l[:] for l in cached] if cached else [[()]]
    n = len(rs.alphabet)
    while (max_degree is None or len(levels) - 1 < max_degree) and levels[-1]:
        nxt = []
        for w in levels[-1]:
            for g in range(n):
                cand = w + (g,)
                # the prefix is normal, so a lead can only occur as a suffix
                if not any(cand[len(cand) - len(l):] == l for l in leads if len(l) <= len(cand)):
                    nxt.append(cand)
        levels.append(nxt)
        if max_degree is None and len(levels) > 4 * (rs.degree_bound + len(leads) + 4):
            # runaway growth guard; callers must check finiteness first
            raise ValueError("normal words do not terminate; check is_finite_dimensional")
    if cached is None or len(levels) > len(cached):
        rs._levels = [l[:] for l in levels]
    if levels and not levels[-1]:
        levels.pop()
    return levels


def normal_words(rs: RewriteSystem, max_degree: int | None = None) -> list[Word]:
    """All normal words up to max_degree (deglex order); all of them if None."""
    _require_certified(rs)
    if max_degree is None and not is_finite_dimensional(rs):
        raise ValueError("cannot enumerate all normal words of an infinite-dimensional algebra")
    out = []
    for level in _levels(rs, max_degree):
        out.extend(level)
    return out


def dimension(rs: RewriteSystem) -> int:
    """Dimension of the quotient algebra (requires finiteness)."""
    return len(normal_words(rs))


def hilbert_series(rs: RewriteSystem, max_degree: int) -> list[int]:
    """Coefficient k = number of normal words of degree k, up to max_degree."""
    _require_certified(rs)
    levels = _levels(rs, max_degree)
    counts = [len(l) for l in levels]
    counts += [0] * (max_degree + 1 - len(counts))
    return counts[:max_degree + 1]


def is_finite_dimensional(rs: RewriteSystem) -> bool:
    """Ufnarovski-graph acyclicity test on normal words of length l-1."""
    _require_certified(rs)
    if rs.collapsed:
        return True
    leads = rs.lead_words
    if not leads:
        return len(rs.alphabet) == 0
    m = max(len(l) for l in leads) - 1
    levels = _levels(rs, m + 1)
    if len(levels) <= m:
        return True                      # normal words already died out
    verts = levels[m]
    vert_set = set(verts)
    succ = {u: [] for u in verts}
    for u in verts:
        for g in range(len(rs.alphabet)):
            cand = u + (g,)
            if any(cand[len(cand) - len(l):] == l for l in leads if len(l) <= len(cand)):
                continue
            v = cand[1:]
            if v in vert_set:
                succ[u].append(v)
    # Kahn's algorithm: a leftover node means a directed cycle
    indeg = {u: 0 for u in verts}
    for u in verts:
        for v in succ[u]:
            indeg[v] += 1
    stack = [u for u in verts if indeg[u] == 0]
    seen = 0
    while stack:
        u = stack.pop()
        seen += 1
        for v in succ[u]:
            indeg[v] -= 1
            if indeg[v] == 0:
                stack.append(v)
    return seen == len(verts)


def certification_report(rs: RewriteSystem) -> dict:
    """Recheck every overlap of the (final) rule set; evidence for tests."""
    rules = [(lead, tail) for lead, tail in rs._rules]
    n_pairs = 0
    for i, (l1, _) in enumerate(rules):
        for j, (l2, _) in enumerate(rules):
            n_pairs += len(_overlaps(l1, l2))
    failures = _certification_failures(rules, rs.field, len(rs.alphabet)) if rules else []
    return {"overlaps": n_pairs, "failures": len(failures)}
