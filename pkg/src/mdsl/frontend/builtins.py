"""The DSL's built-in functions, named after the library's Haskell-style API."""

import operator

from .. import combinatorics as cb
from .. import graph as gr
from .. import linalg as la
from .. import logic as lg
from .. import numtheory as nt
from .. import relation as rl
from .. import sets as st
from .. import tree as tr
from ..graph import Edges, Graph, GraphMatrix, Vertices
from ..linalg import Matrix, Vector
from ..relation import Relation
from ..sets import Set
from .values import Function

BUILTINS = {}


def _typename(t):
    if isinstance(t, tuple):
        return " or ".join(_typename(x) for x in t)
    return {int: "Integer", float: "Float", bool: "Bool", str: "String", list: "List", tuple: "Tuple"}.get(
        t, getattr(t, "__name__", str(t))
    )


def _check(name, i, value, t):
    if t is None:
        return
    if t is int and (isinstance(value, bool) or not isinstance(value, int)):
        raise TypeError(f"{name}: argument {i} must be an Integer")
    if t is NUM and (isinstance(value, bool) or not isinstance(value, (int, float))):
        raise TypeError(f"{name}: argument {i} must be a number")
    if t is FUNC and not callable(value):
        raise TypeError(f"{name}: argument {i} must be a function")
    if t not in (int, NUM, FUNC) and not isinstance(value, t):
        raise TypeError(f"{name}: argument {i} must be a {_typename(t)}, got {type(value).__name__}")


class _Marker:
    def __init__(self, name):
        self.__name__ = name


NUM = _Marker("Number")
FUNC = _Marker("Function")


def define(name, fn, *types):
    arity = len(types)

    def checked(*args):
        for i, (v, t) in enumerate(zip(args, types), start=1):
            _check(name, i, v, t)
        return fn(*args)

    BUILTINS[name] = Function(name, checked, arity)


# -- logic -------------------------------------------------------------------

for _name, _fn in [
    ("and'", lg.and_), ("or'", lg.or_), ("xor", lg.xor), ("xnor", lg.xnor),
    ("nand", lg.nand), ("nor", lg.nor), ("equals", lg.equals), ("implies", lg.implies),
]:
    define(_name, _fn, bool, bool)

define("not", operator.not_, bool)
define("notL", lg.negate_list, list)
for _name, _kind in [
    ("andL", lg.Connective.AND), ("orL", lg.Connective.OR), ("xorL", lg.Connective.XOR),
    ("xnorL", lg.Connective.XNOR), ("nandL", lg.Connective.NAND), ("norL", lg.Connective.NOR),
]:
    define(_name, lambda xs, _k=_kind: lg.fold_connective(_k, xs), list)

# -- sets --------------------------------------------------------------------

define("set2list", st.to_list, Set)
define("union", st.union, Set, Set)
define("unionL", st.union_many, list)
define("intersection", st.intersection, Set, Set)
define("intersectionL", st.intersection_many, list)
define("difference", st.difference, Set, Set)
define("isMemberOf", st.is_member, None, Set)
define("cardinality", st.cardinality, Set)
define("isNullSet", st.is_null, Set)
define("isSubset", st.is_subset, Set, Set)
define("isSuperset", st.is_superset, Set, Set)
define("powerSet", st.power_set, Set)
# shown as a list of pairs in an interactive session
define("cartProduct", lambda a, b: st.to_list(st.cart_product(a, b)), Set, Set)
define("disjoint", st.disjoint, Set, Set)
define("disjointL", st.disjoint_many, list)
define("sMap", st.set_map, FUNC, Set)

# -- relations ---------------------------------------------------------------

define("relation2list", rl.to_list, Relation)
define("getFirst", rl.first, tuple)
define("getSecond", rl.second, tuple)
define("elemSet", rl.element_set, Relation)
define("returnFirstElems", rl.firsts, Relation)
define("returnSecondElems", rl.seconds, Relation)
for _name, _fn in [
    ("isReflexive", rl.is_reflexive), ("isIrreflexive", rl.is_irreflexive),
    ("isSymmetric", rl.is_symmetric), ("isAsymmetric", rl.is_asymmetric),
    ("isAntiSymmetric", rl.is_antisymmetric), ("isTransitive", rl.is_transitive),
    ("isEquivalent", rl.is_equivalence), ("isWeakPartialOrder", rl.is_weak_partial_order),
    ("isWeakTotalOrder", rl.is_weak_total_order), ("isStrictPartialOrder", rl.is_strict_partial_order),
    ("isStrictTotalOrder", rl.is_strict_total_order),
    ("reflClosure", rl.reflexive_closure), ("symmClosure", rl.symmetric_closure),
    ("tranClosure", rl.transitive_closure),
]:
    define(_name, _fn, Relation)
define("rUnion", rl.r_union, Relation, Relation)
define("rUnionL", rl.r_union_many, list)
define("rIntersection", rl.r_intersection, Relation, Relation)
define("rIntersectionL", rl.r_intersection_many, list)
define("rDifference", rl.r_difference, Relation, Relation)
define("rComposite", rl.r_compose, Relation, Relation)
define("rPower", rl.r_power, Relation, int)

# -- graphs ------------------------------------------------------------------


def _vertex(v):
    # single vertices may arrive wrapped as (Vertices [v])
    if isinstance(v, Vertices):
        if len(v) != 1:
            raise ValueError("expected a single vertex")
        return v.labels.elements[0]
    return v


def _vertex_fn(fn):
    return lambda g, v: fn(g, _vertex(v))


define("vertices2list", lambda v: list(v.labels), Vertices)
define("edges2list", lambda e: list(e.triples), Edges)
define("graph2matrix", gr.convert, Graph)
define("convertG2GM", gr.convert, Graph)
define("convertGM2G", gr.convert_back, GraphMatrix)
define("verticesInEdges", lambda e: gr.vertices_in_edges(e.triples if isinstance(e, Edges) else e), (Edges, list))
define("areConnectedGM", gr.are_connected, GraphMatrix, int, int)
define("numPathsBetweenGM", gr.num_paths_between, GraphMatrix, int, int, int)
define("countOddDegreeV", gr.count_odd_degree, (Graph, GraphMatrix))
define("countEvenDegreeV", gr.count_even_degree, (Graph, GraphMatrix))

for _suffix, _t in [("G", Graph), ("GM", GraphMatrix)]:
    for _base, _fn in [
        ("getVertices", gr.vertices_of), ("numVertices", gr.num_vertices),
        ("getEdges", gr.edges_of), ("numEdges", gr.num_edges), ("gTranspose", gr.transpose),
        ("isUndirected", gr.is_undirected), ("isDirected", gr.is_directed),
        ("hasEulerCircuit", gr.has_euler_circuit), ("hasEulerPath", gr.has_euler_path),
        ("hasEulerPathNotCircuit", gr.has_euler_path_not_circuit),
        ("hasHamiltonianCircuit", gr.has_hamiltonian_circuit),
        ("hasHamiltonianPath", gr.has_hamiltonian_path),
    ]:
        define(_base + _suffix, _fn, _t)
    for _base, _fn in [
        ("adjacentNodes", gr.adjacent_nodes), ("inDegree", gr.in_degree),
        ("outDegree", gr.out_degree), ("degree", gr.degree),
    ]:
        define(_base + _suffix, _vertex_fn(_fn), _t, None)
    define("union" + _suffix, gr.union, _t, _t)
    define("isSubgraph" + _suffix, gr.is_subgraph, _t, _t)
    define("addVertices" + _suffix, gr.add_vertices, _t, (Vertices, list))
    define("addEdges" + _suffix, gr.add_edges, _t, (Edges, list))

_GRAPHS = (Graph, GraphMatrix)
define("dijkstra", lambda g, s: sorted(gr.dijkstra(g, _vertex(s)).items()), _GRAPHS, None)
define("prim", gr.prim, _GRAPHS)
define("kruskal", gr.kruskal, _GRAPHS)
define("bfs", lambda g, s: gr.bfs(g, _vertex(s)), _GRAPHS, None)
define("dfs", lambda g, s: gr.dfs(g, _vertex(s)), _GRAPHS, None)

# -- trees -------------------------------------------------------------------

_TREE = (tr.Node, tr.Leaf)
define("inorder", tr.inorder, _TREE)
define("preorder", tr.preorder, _TREE)
define("postorder", tr.postorder, _TREE)
define("singleton", tr.singleton, None)
define("treeInsert", lambda x, t: tr.insert(t, x), None, _TREE)
define("treeSearch", lambda x, t: tr.search(t, x), None, _TREE)
define("treeElem", lambda x, t: tr.search(t, x), None, _TREE)
define("reflect", tr.reflect, _TREE)
define("height", tr.height, _TREE)
define("depth", lambda x, t: tr.depth(t, x), None, _TREE)
define("size", tr.size, _TREE)
define("isBalanced", tr.is_balanced, _TREE)

# -- number theory -----------------------------------------------------------

define("toBase", nt.to_base, int, int)
define("fromBase", nt.from_base, int, list)
define("toAlphaDigits", nt.to_alpha, list)
define("fromAlphaDigits", nt.from_alpha, str)
for _name, _op in [
    ("baseAdd", nt.BaseOp.ADD), ("baseSub", nt.BaseOp.SUB), ("baseMult", nt.BaseOp.MUL),
    ("baseDiv", nt.BaseOp.DIV), ("baseExp", nt.BaseOp.EXP),
]:
    define(_name, lambda b, x, y, _op=_op: nt.base_arith(_op, b, x, y), int, list, list)
define("fib", nt.fib, int)
define("fibSeries", nt.fib_series, int)
define("modAdd", nt.mod_add, int, int, int)
define("modSub", nt.mod_sub, int, int, int)
define("modMult", nt.mod_mult, int, int, int)
define("modExp", nt.mod_exp, int, int, int)
define("isCongruent", nt.is_congruent, int, int, int)
define("findCongruentPair", nt.solve_congruence, int, int, int)
define("findCongruentPair1", nt.solve_congruence_pos, int, int, int)
define("primesTo", nt.primes_to, int)
define("primesBetween", nt.primes_between, int, int)
define("firstNPrimes", nt.first_n_primes, int)
define("isPrime", nt.is_prime, int)
define("nextPrime", nt.next_prime, int)
define("primeFactors", nt.prime_factors, int)

# -- linear algebra ----------------------------------------------------------

define("vDim", la.v_dim, Vector)
define("vMag", la.v_mag, Vector)
define("vec2list", la.to_list, Vector)
define("vAdd", la.v_add, Vector, Vector)
define("vAddL", la.v_add_many, list)
define("vSub", la.v_sub, Vector, Vector)
define("vSubL", la.v_sub_many, list)
define("innerProd", la.inner_prod, Vector, Vector)
define("vAngle", la.v_angle, Vector, Vector)
define("scalarMult", la.scalar_mult, NUM, Vector)
define("isNullVector", la.is_null_vector, Vector)
define("isUnitVector", la.is_unit_vector, Vector)
define("crossProd", la.cross_prod, Vector, Vector)
define("scalarTripleProd", la.scalar_triple, Vector, Vector, Vector)
define("vectorTripleProd", la.vector_triple, Vector, Vector, Vector)
define("extract", la.extract, int, Vector)
define("extractRange", la.extract_range, int, int, Vector)
define("areOrthogonal", la.are_orthogonal, Vector, Vector)
define("vMap", la.v_map, FUNC, Vector)
define("vNorm", la.v_norm, Vector)

define("mAdd", la.m_add, Matrix, Matrix)
define("mAddL", la.m_add_many, list)
define("mSub", la.m_sub, Matrix, Matrix)
define("mSubL", la.m_sub_many, list)
define("mTranspose", la.m_transpose, Matrix)
define("mScalarMult", la.m_scalar_mult, NUM, Matrix)
define("mMult", la.m_mult, Matrix, Matrix)
define("mMultL", la.m_mult_many, list)
define("numRows", la.num_rows, Matrix)
define("numCols", la.num_cols, Matrix)
define("mat2list", la.to_lists, Matrix)
define("determinant", la.determinant, Matrix)
define("inverse", la.inverse, Matrix)
define("mDiv", la.m_div, Matrix, Matrix)
define("extractRow", la.extract_row, int, Matrix)
define("extractCol", la.extract_col, int, Matrix)
define("extractRowRange", la.extract_row_range, int, int, Matrix)
define("extractColRange", la.extract_col_range, int, int, Matrix)
define("mPower", la.m_power, Matrix, int)
define("trace", la.trace, Matrix)
for _name, _fn in [
    ("isInvertible", la.is_invertible), ("isSymmetric", la.is_symmetric),
    ("isSkewSymmetric", la.is_skew_symmetric), ("isRow", la.is_row), ("isColumn", la.is_column),
    ("isSquare", la.is_square), ("isOrthogonal", la.is_orthogonal),
    ("isInvolutory", la.is_involutory), ("isZeroOne", la.is_zero_one), ("isZero", la.is_zero),
    ("isOne", la.is_one), ("isUnit", la.is_unit),
]:
    define(_name, _fn, Matrix)
define("zero", la.zero, int, int)
define("zero'", la.zero, int)
define("one", la.one, int, int)
define("one'", la.one, int)
define("unit", la.unit, int)
define("mMap", la.m_map, FUNC, Matrix)

# -- combinatorics -----------------------------------------------------------

define("factorial", cb.factorial, int)
define("p", cb.p, int, int)
define("c", cb.c, int, int)
define("permutation", cb.permutation, list)
define("combination", cb.combination, int, list)

# -- general -----------------------------------------------------------------


def _divide(a, b):
    if b == 0:
        raise ZeroDivisionError("division by zero")
    return a / b


def _int_div(a, b):
    if b == 0:
        raise ZeroDivisionError("division by zero")
    return a // b


def _pow(a, b):
    if isinstance(a, int) and b < 0:
        raise ValueError("negative integer exponent")
    return a**b


define("compose", lambda f, g, x: f(g(x)), FUNC, FUNC, None)
define("add", operator.add, NUM, NUM)
define("sub", operator.sub, NUM, NUM)
define("mul", operator.mul, NUM, NUM)
define("divide", _divide, NUM, NUM)
define("div", _int_div, int, int)
define("mod", lambda a, b: nt.mod_add(a, 0, b), int, int)
define("pow", _pow, NUM, int)
define("neg", operator.neg, NUM)
define("fst", lambda t: t[0], tuple)
define("snd", lambda t: t[1], tuple)
define("length", len, (list, tuple, str, Set, Relation, Vector))
define("sum", lambda xs: sum(xs), list)

# shuffle and randomInts depend on the session seed, see evaluator.Environment
SEEDED = {
    "shuffle": (lambda seed: lambda xs: cb.shuffle(xs, seed), (list,)),
    "randomInts": (lambda seed: lambda n, lo, hi: nt.random_ints(n, lo, hi, seed), (int, int, int)),
}

ARITIES = {name: f.arity for name, f in BUILTINS.items()}
ARITIES.update({name: len(types) for name, (_, types) in SEEDED.items()})


def seeded_builtins(seed: int) -> dict:
    out = {}
    for name, (make, types) in SEEDED.items():
        fn = make(seed)

        def checked(*args, _fn=fn, _name=name, _types=types):
            for i, (v, t) in enumerate(zip(args, _types), start=1):
                _check(_name, i, v, t)
            return _fn(*args)

        out[name] = Function(name, checked, len(types))
    return out
