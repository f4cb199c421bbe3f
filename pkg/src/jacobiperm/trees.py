"""Binary and ternary tree models for pattern-restricted Jacobi permutations.

Representations (immutable nested tuples, structural equality):

- unlabeled binary tree: ``()`` empty, ``(left, right)`` node;
- labeled binary tree:   ``()`` empty, ``(label, left, right)`` node;
- ternary tree:          ``()`` empty, ``(left, middle, right)`` node.

A *Jacobi tree* is an unlabeled binary tree in which every right subtree
has even size; these are the shapes of the increasing trees of 213- and
312-avoiding Jacobi permutations. A *dual Jacobi tree* is the shape of the
decreasing tree of a 231-avoiding Jacobi permutation.

Text form for shapes: balanced parentheses over pre-order, empty = "";
a node encodes as "(" + left + ")" + right.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence

from jacobiperm import perms
from jacobiperm.errors import GuardError
from jacobiperm.perms import Perm

TREE_GUARD = 16

BTree = tuple  # () or (left, right)
LTree = tuple  # () or (label, left, right)
TTree = tuple  # () or (left, middle, right)


def _children(t: tuple) -> tuple:
    """Left and right subtrees of a node, labeled or not."""
    return (t[1], t[2]) if len(t) == 3 else (t[0], t[1])


@functools.lru_cache(maxsize=None)
def size(t: tuple) -> int:
    """Number of nodes."""
    if not t:
        return 0
    left, right = _children(t)
    return 1 + size(left) + size(right)


@functools.lru_cache(maxsize=None)
def ternary_size(t: TTree) -> int:
    """Number of nodes of a ternary tree."""
    if not t:
        return 0
    return 1 + sum(ternary_size(child) for child in t)


def encode(t: BTree) -> str:
    """Balanced-parentheses text form of an unlabeled shape.

    >>> encode(((), ()))
    '()'
    >>> encode((((), ()), ()))
    '(())'
    """
    if not t:
        return ""
    return "(" + encode(t[0]) + ")" + encode(t[1])


def decode(text: str) -> BTree:
    """Inverse of :func:`encode`; rejects malformed input."""

    def parse(i: int) -> tuple[BTree, int]:
        if i >= len(text) or text[i] != "(":
            return (), i
        depth, j = 1, i + 1
        while depth:
            if j >= len(text):
                raise ValueError(f"unbalanced parentheses: {text!r}")
            depth += 1 if text[j] == "(" else -1
            j += 1
        left, stop = parse(i + 1)
        if stop != j - 1:
            raise ValueError(f"malformed shape encoding: {text!r}")
        right, stop = parse(j)
        return (left, right), stop

    t, stop = parse(0)
    if stop != len(text):
        raise ValueError(f"malformed shape encoding: {text!r}")
    return t


def to_dot(t: tuple, name: str = "tree") -> str:
    """Graphviz DOT text for a (possibly labeled) binary tree.

    Children are emitted left before right; unlabeled nodes are shown as
    points.
    """
    lines = [f"digraph {name} {{", "  ordering=out;"]
    counter = itertools.count()

    def walk(node: tuple) -> int:
        ident = next(counter)
        if len(node) == 3:
            lines.append(f'  n{ident} [label="{node[0]}"];')
        else:
            lines.append(f"  n{ident} [shape=point];")
        for child in _children(node):
            if child:
                lines.append(f"  n{ident} -> n{walk(child)};")
            else:
                ghost = next(counter)
                lines.append(f"  n{ghost} [style=invis];")
                lines.append(f"  n{ident} -> n{ghost} [style=invis];")
        return ident

    if t:
        walk(t)
    lines.append("}")
    return "\n".join(lines)


# ---------------------------------------------------------------------------
# traversals and the increasing/decreasing tree correspondences


def theta(p: Sequence[int]) -> LTree:
    """Increasing binary tree of p: minimum at the root, split recursively.

    An in-order traversal of the result reads back p.
    """
    p = tuple(p)
    if not p:
        return ()
    i = p.index(min(p))
    return (p[i], theta(p[:i]), theta(p[i + 1 :]))


def theta_tilde(p: Sequence[int]) -> LTree:
    """Decreasing binary tree of p: maximum at the root."""
    p = tuple(p)
    if not p:
        return ()
    i = p.index(max(p))
    return (p[i], theta_tilde(p[:i]), theta_tilde(p[i + 1 :]))


def traverse(t: LTree, order: str) -> Perm:
    """Label sequence of a labeled tree in pre-, in-, or post-order.

    >>> traverse(theta((4, 9, 7, 1, 6, 3, 5, 2, 8)), "pre")
    (1, 4, 7, 9, 2, 3, 6, 5, 8)
    """
    if order not in ("pre", "in", "post"):
        raise ValueError(f"unknown traversal order {order!r}")
    out: list[int] = []

    def walk(node: LTree) -> None:
        if not node:
            return
        lab, left, right = node
        if order == "pre":
            out.append(lab)
        walk(left)
        if order == "in":
            out.append(lab)
        walk(right)
        if order == "post":
            out.append(lab)

    walk(t)
    return tuple(out)


def strip(t: LTree) -> BTree:
    """Forget the labels of a labeled binary tree."""
    if not t:
        return ()
    return (strip(t[1]), strip(t[2]))


def _relabel(u: BTree, order: str, labels: Iterator[int]) -> LTree:
    if not u:
        return ()
    if order == "pre":
        lab = next(labels)
        return (lab, _relabel(u[0], order, labels), _relabel(u[1], order, labels))
    left = _relabel(u[0], order, labels)
    right = _relabel(u[1], order, labels)
    return (next(labels), left, right)


def relabel_213(u: BTree) -> LTree:
    """Labels making the post-order read n..1; in-order is then the
    213-avoiding permutation with this shape (an increasing tree)."""
    return _relabel(u, "post", itertools.count(size(u), -1))


def relabel_312(u: BTree) -> LTree:
    """Labels making the pre-order read 1..n; in-order is then the
    312-avoiding permutation with this shape (an increasing tree)."""
    return _relabel(u, "pre", itertools.count(1))


def relabel_231(u: BTree) -> LTree:
    """Labels making the post-order read 1..n; in-order is then the
    231-avoiding permutation with this shape (a decreasing tree)."""
    return _relabel(u, "post", itertools.count(1))


# ---------------------------------------------------------------------------
# tree statistics


def left_spine(t: tuple) -> list[tuple]:
    """Subtrees along the left branch, root first."""
    spine = []
    while t:
        spine.append(t)
        t = _children(t)[0]
    return spine


def right_spine(t: tuple) -> list[tuple]:
    spine = []
    while t:
        spine.append(t)
        t = _children(t)[1]
    return spine


def lbrch(t: tuple) -> int:
    """Number of nodes on the left branch."""
    return len(left_spine(t))


def rbrch(t: tuple) -> int:
    """Number of nodes on the right branch."""
    return len(right_spine(t))


def lchd(t: tuple) -> int:
    """Number of nodes having a left child."""
    if not t:
        return 0
    left, right = _children(t)
    return (1 if left else 0) + lchd(left) + lchd(right)


def undergrowth(t: tuple) -> tuple:
    """Left subtree of the terminus (the bottom of the right branch)."""
    if not t:
        raise ValueError("the empty tree has no terminus")
    return _children(right_spine(t)[-1])[0]


@dataclass(frozen=True)
class TreeStats:
    lbrch: int
    rbrch: int
    lchd: int
    undergrowth_size: int


def tree_stats(t: tuple) -> TreeStats:
    """Branch, left-child, and undergrowth statistics in one record.

    >>> tree_stats(theta((4, 9, 7, 1, 6, 3, 5, 2, 8)))
    TreeStats(lbrch=2, rbrch=3, lchd=4, undergrowth_size=0)
    """
    if not t:
        return TreeStats(0, 0, 0, 0)
    return TreeStats(lbrch(t), rbrch(t), lchd(t), size(undergrowth(t)))


# ---------------------------------------------------------------------------
# Jacobi and dual Jacobi shapes


def is_jacobi_tree(u: BTree) -> bool:
    """Whether every right subtree has even size.

    >>> is_jacobi_tree((((), ()), ()))
    True
    >>> is_jacobi_tree(((), ((), ())))
    False
    """
    if not u:
        return True
    left, right = u
    return size(right) % 2 == 0 and is_jacobi_tree(left) and is_jacobi_tree(right)


def is_dual_jacobi_tree(u: BTree) -> bool:
    """Whether u is the shape of the decreasing tree of some 231-avoiding
    Jacobi permutation (checked by relabeling and testing that word)."""
    return perms.is_jacobi(traverse(relabel_231(u), "in"))


def is_dual_jacobi_tree_decomp(u: BTree) -> bool:
    """Dual-Jacobi recognizer through the structural decomposition.

    A nonempty dual Jacobi tree is a single node, or decomposes at the
    terminus: the parent of the terminus carries a dual Jacobi left
    subtree T2, the terminus has no left subtree, and detaching T2
    together with one node (T2 odd) or two nodes (T2 even) leaves a dual
    Jacobi tree. Agrees with :func:`is_dual_jacobi_tree` on every shape.
    """
    if not u:
        return True
    if u == ((), ()):
        return True
    spine = right_spine(u)
    if len(spine) < 2:
        return False  # >1 node and the root has no right child
    term, parent = spine[-1], spine[-2]
    if term[0]:
        return False  # nonempty undergrowth
    t2 = parent[0]
    if size(t2) % 2 == 0:
        rest = _rebuild_right(spine[:-2], ())
    else:
        rest = _rebuild_right(spine[:-2], ((), ()))
    return is_dual_jacobi_tree_decomp(t2) and is_dual_jacobi_tree_decomp(rest)


def _rebuild_left(spine: list[BTree], bottom: BTree) -> BTree:
    """Reassemble a tree whose retained left spine is ``spine`` and whose
    bottommost retained node gets ``bottom`` as its left child."""
    t = bottom
    for node in reversed(spine):
        t = (t, node[1])
    return t


def _rebuild_right(spine: list[BTree], bottom: BTree) -> BTree:
    t = bottom
    for node in reversed(spine):
        t = (node[0], t)
    return t


def gen_trees(n: int, kind: str = "all", *, max_n: int | None = None) -> Iterator[BTree]:
    """All shapes of the given kind on n nodes, each exactly once.

    Kinds: ``all`` (Catalan many), ``jacobi`` (even right subtrees, built
    directly from the defining recursion), ``dual_jacobi`` (built from the
    terminus decomposition).
    """
    guard = TREE_GUARD if max_n is None else max_n
    if n > guard:
        raise GuardError(f"tree generation at size {n} exceeds guard {guard}")
    if kind == "all":
        return _gen_all(n)
    if kind == "jacobi":
        return iter(_gen_jacobi(n))
    if kind == "dual_jacobi":
        return iter(_gen_dual(n))
    raise ValueError(f"unknown tree kind {kind!r}")


def _gen_all(n: int) -> Iterator[BTree]:
    if n == 0:
        yield ()
        return
    for i in range(n):
        for left in _gen_all(i):
            for right in _gen_all(n - 1 - i):
                yield (left, right)


@functools.lru_cache(maxsize=None)
def _gen_jacobi(n: int) -> tuple[BTree, ...]:
    if n == 0:
        return ((),)
    out = []
    for rsize in range(0, n, 2):
        for right in _gen_jacobi(rsize):
            for left in _gen_jacobi(n - 1 - rsize):
                out.append((left, right))
    return tuple(out)


@functools.lru_cache(maxsize=None)
def _gen_dual(n: int) -> tuple[BTree, ...]:
    if n == 0:
        return ((),)
    if n == 1:
        return (((), ()),)
    out = []
    # root with even dual left subtree, right child is the terminus
    if n % 2 == 0:
        for t2 in _gen_dual(n - 2):
            out.append((t2, ((), ())))
    # odd dual T2 hung below the terminus of a nonempty dual tree
    for s in range(1, n - 1, 2):
        for t1 in _gen_dual(n - 1 - s):
            for t2 in _gen_dual(s):
                out.append(_replace_terminus(t1, (t2, ((), ()))))
    # even dual T2 two levels below the terminus of a nonempty dual tree
    for s in range(0, n - 3 + 1, 2):
        for t1 in _gen_dual(n - 2 - s):
            for t2 in _gen_dual(s):
                out.append(_replace_terminus(t1, ((), (t2, ((), ())))))
    return tuple(out)


def _replace_terminus(t: BTree, replacement: BTree) -> BTree:
    """Substitute the terminus node (which has no left subtree) of a
    nonempty tree by an arbitrary subtree."""
    spine = right_spine(t)
    assert spine[-1] == ((), ()), "terminus carries an undergrowth"
    return _rebuild_right(spine[:-1], replacement)


def gen_ternary(n: int, *, max_n: int | None = None) -> Iterator[TTree]:
    """All ternary tree shapes on n nodes."""
    guard = TREE_GUARD if max_n is None else max_n
    if n > guard:
        raise GuardError(f"ternary generation at size {n} exceeds guard {guard}")
    if n == 0:
        yield ()
        return
    for i in range(n):
        for left in gen_ternary(i, max_n=guard):
            for j in range(n - i):
                for middle in gen_ternary(j, max_n=guard):
                    for right in gen_ternary(n - 1 - i - j, max_n=guard):
                        yield (left, middle, right)


# ---------------------------------------------------------------------------
# bijections on Jacobi trees


def _require_jacobi(u: BTree) -> None:
    if not is_jacobi_tree(u):
        raise ValueError(f"not a Jacobi tree: {encode(u)!r}")


def lambda_ternary(u: BTree) -> TTree:
    """Halving bijection from even-size Jacobi trees to ternary trees.

    The root's left child w must exist; with L, R the subtrees of w and V
    the root's right subtree (all of even size), the image is the ternary
    node on the images of L, R, V.
    """
    _require_jacobi(u)
    if size(u) % 2:
        raise ValueError("the tree must have even size")
    return _lambda(u)


def _lambda(u: BTree) -> TTree:
    if not u:
        return ()
    w, v_right = u
    left, right = w
    return (_lambda(left), _lambda(right), _lambda(v_right))


def lambda_inv(t: TTree) -> BTree:
    """Inverse of :func:`lambda_ternary`."""
    if not t:
        return ()
    left, middle, right = t
    return ((lambda_inv(left), lambda_inv(middle)), lambda_inv(right))


def psi(u: BTree) -> tuple[str, BTree]:
    """Left-branch recurrence bijection on nonempty Jacobi trees.

    Maps a Jacobi tree with n nodes and left branch of size k to either
    ("shrink", tree with n-1 nodes, left branch k-1) when the bottommost
    left-branch node has no right subtree, or ("grow", tree with n nodes,
    left branch k+2) otherwise. The tag records the case split.
    """
    _require_jacobi(u)
    if not u:
        raise ValueError("psi is undefined on the empty tree")
    spine = left_spine(u)
    bottom = spine[-1]
    if not bottom[1]:
        return "shrink", _rebuild_left(spine[:-1], ())
    v = bottom[1]
    w = v[0]  # exists: the right subtree of the bottom node has even size
    left, right = w
    new_bottom = ((((), left), right), v[1])
    return "grow", _rebuild_left(spine[:-1], new_bottom)


def psi_inv(tag: str, u: BTree) -> BTree:
    """Inverse of :func:`psi` on its tagged codomain."""
    _require_jacobi(u)
    if tag == "shrink":
        return _rebuild_left(left_spine(u), ((), ()))
    if tag != "grow":
        raise ValueError(f"unknown tag {tag!r}")
    spine = left_spine(u)
    if len(spine) < 3:
        raise ValueError("'grow' images have a left branch of size >= 3")
    w2, v2, top = spine[-1], spine[-2], spine[-3]
    new_bottom = ((), ((w2[1], v2[1]), top[1]))
    return _rebuild_left(spine[:-3], new_bottom)


def phi_branch(u: BTree) -> BTree:
    """Left-to-right branch bijection on Jacobi trees of a fixed size.

    For even size, lbrch(u) = 2 * rbrch(image); for odd size,
    lbrch(u) = 2 * rbrch(image) - 1.
    """
    _require_jacobi(u)
    return _phi_branch(u)


def _phi_branch(u: BTree) -> BTree:
    if not u:
        return ()
    spine = left_spine(u)
    if size(u) % 2 and len(spine) == 1:
        # root has no left child: its right subtree swings to the left
        return (u[1], ())
    bottom, parent = spine[-1], spine[-2]
    rest = _rebuild_left(spine[:-2], ())
    image = _phi_branch(rest)
    # fresh terminus whose left child carries the two detached right subtrees
    new_terminus = ((bottom[1], parent[1]), ())
    return _append_below_terminus(image, new_terminus)


def phi_branch_inv(u: BTree) -> BTree:
    """Inverse of :func:`phi_branch`."""
    _require_jacobi(u)
    return _phi_branch_inv(u)


def _phi_branch_inv(u: BTree) -> BTree:
    if not u:
        return ()
    spine = right_spine(u)
    if size(u) % 2 and len(spine) == 1:
        return ((), u[0])
    terminus = spine[-1]
    under = terminus[0]  # the undergrowth; nonempty on valid input
    u_sub, v_sub = under  # the two detached right subtrees, bottommost first
    rest = _rebuild_right(spine[:-1], ())
    image = _phi_branch_inv(rest)
    return _append_below_left_branch(image, (((), u_sub), v_sub))


def _append_below_terminus(t: BTree, node: BTree) -> BTree:
    if not t:
        return node
    spine = right_spine(t)
    return _rebuild_right(spine, node)


def _append_below_left_branch(t: BTree, node: BTree) -> BTree:
    if not t:
        return node
    spine = left_spine(t)
    return _rebuild_left(spine, node)
