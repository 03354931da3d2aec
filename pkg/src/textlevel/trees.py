"""Bracketed parse trees: reading, validation, and structural measures."""

from dataclasses import dataclass, field

CLAUSE_S = "S"
PHRASE_LABELS = frozenset(
    """
    NP VP PP ADJP ADVP WHNP WHADJP WHADVP WHPP QP PRT NX NAC CONJP UCP
    INTJ LST X
    """.split()
)

S_LIKE = frozenset(("S", "SINV", "SQ", "SBARQ", "SBAR"))


class TreeError(Exception):
    """Malformed bracketed tree text."""


@dataclass
class ParseTree:
    label: str
    children: list = field(default_factory=list)
    word: str = None  # leaf token for preterminals

    @property
    def is_leaf(self):
        return self.word is not None

    def leaves(self):
        if self.is_leaf:
            return [self.word]
        out = []
        for child in self.children:
            out.extend(child.leaves())
        return out

    def height(self):
        """Edges on the longest root-to-token path."""
        if self.is_leaf:
            return 1  # preterminal -> token
        return 1 + max(child.height() for child in self.children)

    def span_length(self):
        if self.is_leaf:
            return 1
        return sum(child.span_length() for child in self.children)

    def iter_nodes(self):
        yield self
        if not self.is_leaf:
            for child in self.children:
                yield from child.iter_nodes()


def _tokenize_sexpr(text):
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch in "()":
            yield ch, i
            i += 1
        else:
            j = i
            while j < n and not text[j].isspace() and text[j] not in "()":
                j += 1
            yield text[i:j], i
            i = j


def parse_trees(text):
    """Parse every bracketed tree in a string.

    Raises TreeError with the character offset of the problem.
    """
    trees = []
    stack = []  # open nodes; None marks '(' awaiting its label
    last_open = 0
    for tok, pos in _tokenize_sexpr(text):
        if tok == "(":
            stack.append(None)
            last_open = pos
        elif tok == ")":
            if not stack:
                raise TreeError("offset %d: unbalanced ')'" % pos)
            node = stack.pop()
            if node is None:
                raise TreeError("offset %d: empty '()' group" % pos)
            if not node.is_leaf and not node.children:
                raise TreeError(
                    "offset %d: node %r has no children" % (pos, node.label)
                )
            if not stack:
                trees.append(node)
        else:
            if stack and stack[-1] is None:
                stack.pop()
                node = ParseTree(tok)
                if stack:
                    if stack[-1] is None:
                        raise TreeError(
                            "offset %d: parent of %r has no label" % (pos, tok)
                        )
                    stack[-1].children.append(node)
                stack.append(node)
            elif stack:
                parent = stack[-1]
                if parent.children or parent.word is not None:
                    raise TreeError(
                        "offset %d: unexpected token %r under %r"
                        % (pos, tok, parent.label)
                    )
                parent.word = tok
            else:
                raise TreeError("offset %d: token outside any tree" % pos)
    if stack:
        raise TreeError("offset %d: unbalanced '('" % last_open)
    return trees


def read_bracketed_trees(path):
    with open(path, "r", encoding="utf-8") as fh:
        text = fh.read()
    try:
        return parse_trees(text)
    except TreeError as exc:
        raise TreeError("%s: %s" % (path, exc)) from None


def _is_coordinating_s(node):
    if node.is_leaf or node.label != CLAUSE_S:
        return False
    s_children = sum(1 for c in node.children if not c.is_leaf and c.label == CLAUSE_S)
    cc_children = sum(1 for c in node.children if c.label == "CC")
    return s_children >= 2 and cc_children >= 1


def collect_tunits(tree):
    """Topmost S nodes, descending only through coordinating S nodes."""
    units = []

    def walk(node):
        if node.is_leaf:
            return
        if node.label == CLAUSE_S:
            if _is_coordinating_s(node):
                for child in node.children:
                    if not child.is_leaf and child.label == CLAUSE_S:
                        walk(child)
                return
            units.append(node)
            return
        for child in node.children:
            walk(child)

    walk(tree)
    return units


def _count_label(node, label):
    return sum(
        1
        for sub in node.iter_nodes()
        if not sub.is_leaf and sub.label == label
    )


def _has_label(node, label):
    return any(
        not sub.is_leaf and sub.label == label for sub in node.iter_nodes()
    )


def _coordinated_nodes(tree, labels):
    """Nodes with >=2 same-label children from `labels` joined by a CC."""
    found = []
    for node in tree.iter_nodes():
        if node.is_leaf:
            continue
        if not any(c.label == "CC" for c in node.children):
            continue
        per_label = {}
        for child in node.children:
            if not child.is_leaf and child.label in labels:
                per_label[child.label] = per_label.get(child.label, 0) + 1
        if any(v >= 2 for v in per_label.values()):
            found.append(node)
    return found


def tree_stats(tree):
    """Structural measures for one sentence tree."""
    phrase_counts = {}
    for node in tree.iter_nodes():
        if node.is_leaf:
            continue
        if node.label in PHRASE_LABELS:
            phrase_counts[node.label] = phrase_counts.get(node.label, 0) + 1

    tunits = collect_tunits(tree)
    complex_tunits = [u for u in tunits if _has_label(u, "SBAR")]

    def spans(label):
        return [
            n.span_length()
            for n in tree.iter_nodes()
            if not n.is_leaf and n.label == label
        ]

    sbar_spans = spans("SBAR")
    sinv_spans = spans("SINV")
    sq_spans = spans("SQ")
    sbarq_spans = spans("SBARQ")

    coord_s = _coordinated_nodes(tree, (CLAUSE_S,))
    coord_xp = _coordinated_nodes(tree, PHRASE_LABELS)

    return {
        "height": tree.height(),
        "length": tree.span_length(),
        "phrase_counts": phrase_counts,
        "phrase_spans": {
            lab: spans(lab) for lab in ("NP", "VP", "PP", "ADVP", "ADJP")
        },
        "tunit_count": len(tunits),
        "complex_tunit_count": len(complex_tunits),
        "tunit_lengths": [u.span_length() for u in tunits],
        "tunit_np": [_count_label(u, "NP") for u in tunits],
        "tunit_vp": [_count_label(u, "VP") for u in tunits],
        "tunit_pp": [_count_label(u, "PP") for u in tunits],
        "sbar_spans": sbar_spans,
        "sinv_spans": sinv_spans,
        "sq_spans": sq_spans,
        "sbarq_spans": sbarq_spans,
        "coord_s_count": len(coord_s),
        "coord_s_lengths": [n.span_length() for n in coord_s],
        "coord_xp_count": len(coord_xp),
        "coord_xp_lengths": [n.span_length() for n in coord_xp],
    }
