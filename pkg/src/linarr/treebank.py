"""Reading dependency treebanks in CoNLL-U-lite form.

Only three columns matter here: ID (1), UPOS (4) and HEAD (7). Multiword
ranges ("3-4") and empty nodes ("5.1") are skipped. Head 0 marks the root
and contributes no edge; every other head becomes an undirected edge. The
token order is the observed arrangement, so each sentence carries its
observed D.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import InputError
from .graphs import Graph, LinearArrangement, build_graph, sum_edge_lengths


@dataclass(frozen=True)
class TreebankSentence:
    label: str
    graph: Graph
    observed: int  # D under the reading order


def _is_regular_id(tok: str) -> bool:
    return tok.isdigit()


def _parse_token_line(line: str, lineno: int):
    cols = line.split("\t")
    if len(cols) < 7:
        cols = line.split()
    if len(cols) < 7:
        raise InputError(f"line {lineno}: expected >= 7 columns, got {len(cols)}")
    tid, upos, head = cols[0], cols[3], cols[6]
    if not _is_regular_id(tid):
        return None
    if not head.isdigit():
        raise InputError(f"line {lineno}: head {head!r} is not a number")
    return int(tid), upos, int(head)


def _sentence_graph(tokens, label: str, exclude_punct: bool):
    for i, (tid, _, _) in enumerate(tokens, start=1):
        if tid != i:
            raise InputError(
                f"{label}: token ids must be 1..n in order, found {tid} at position {i}"
            )
    n = len(tokens)
    for tid, _, head in tokens:
        if head > n:
            raise InputError(f"{label}: head {head} beyond last token {n}")
        if head == tid:
            raise InputError(f"{label}: token {tid} is its own head")
    keep = [
        tid for tid, upos, _ in tokens
        if not (exclude_punct and upos == "PUNCT")
    ]
    renum = {tid: i for i, tid in enumerate(keep, start=1)}
    edges = []
    for tid, upos, head in tokens:
        if head == 0 or tid not in renum or head not in renum:
            continue
        edges.append((renum[tid], renum[head]))
    g = build_graph(len(keep), edges)
    arr = LinearArrangement.identity(g.n)
    return TreebankSentence(
        label=label, graph=g, observed=sum_edge_lengths(g, arr)
    )


def parse_conllu_lite(text: str, exclude_punct: bool = False) -> list[TreebankSentence]:
    """Parse sentences from CoNLL-U-lite text.

    Sentences are separated by blank lines; '#' lines are comments, except
    that '# sent_id = X' names the sentence.
    """
    sentences = []
    tokens: list = []
    label = None
    count = 0

    def flush():
        nonlocal tokens, label, count
        if tokens:
            count += 1
            name = label if label is not None else f"sentence_{count}"
            sentences.append(_sentence_graph(tokens, name, exclude_punct))
        tokens = []
        label = None

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip("\n")
        if not line.strip():
            flush()
            continue
        if line.lstrip().startswith("#"):
            body = line.lstrip()[1:].strip()
            if body.startswith("sent_id") and "=" in body:
                label = body.split("=", 1)[1].strip()
            continue
        parsed = _parse_token_line(line, lineno)
        if parsed is not None:
            tokens.append(parsed)
    flush()
    return sentences
