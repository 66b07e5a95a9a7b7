"""
⚠️ CFC LAB ERRORS
Exception hierarchy shared by every module. The CLI maps these onto exit codes.
"""

from typing import Any, Optional, Tuple


class CfcLabError(Exception):
    """Base class for every error raised by cfc_lab."""


# Graph errors

class GraphError(CfcLabError):
    """Structural problem with a graph or a graph query."""


class LoopEdge(GraphError):
    def __init__(self, vertex: int):
        super().__init__(f"loop at vertex {vertex}")
        self.vertex = vertex


class DuplicateEdge(GraphError):
    def __init__(self, u: int, v: int):
        super().__init__(f"duplicate edge {u}-{v}")
        self.edge = (u, v)


class VertexOutOfRange(GraphError):
    def __init__(self, vertex: int, n: int):
        super().__init__(f"vertex {vertex} out of range for n={n}")
        self.vertex = vertex
        self.n = n


class EmptyGraph(GraphError):
    def __init__(self, message: str = "graph has no vertices"):
        super().__init__(message)


class Disconnected(GraphError):
    def __init__(self, message: str = "graph is not connected"):
        super().__init__(message)


class TooLarge(GraphError):
    def __init__(self, what: str, size: int, limit: int):
        super().__init__(f"{what} {size} exceeds limit {limit}")
        self.size = size
        self.limit = limit


class NotATree(GraphError):
    def __init__(self, message: str = "graph is not a tree"):
        super().__init__(message)


# Coloring errors

class ColoringError(CfcLabError):
    """Problem with an edge coloring or a path inside a colored graph."""


class InvalidColoring(ColoringError):
    pass


class NotAPath(ColoringError):
    def __init__(self, path: Tuple[int, ...]):
        super().__init__(f"consecutive vertices not adjacent in {list(path)}")
        self.path = path


class NotSimple(ColoringError):
    def __init__(self, path: Tuple[int, ...]):
        super().__init__(f"path repeats a vertex: {list(path)}")
        self.path = path


class SameVertex(ColoringError):
    def __init__(self, vertex: int):
        super().__init__(f"endpoints coincide at vertex {vertex}")
        self.vertex = vertex


class PathExplosion(ColoringError):
    def __init__(self, cap: int):
        super().__init__(f"simple path enumeration exceeded {cap} paths")
        self.cap = cap


# Solver errors

class SolverError(CfcLabError):
    """Exact search could not produce an answer under the given constraints."""


class BudgetExceeded(SolverError):
    def __init__(self, cap: int):
        super().__init__(f"no conflict-free connection coloring with at most {cap} colors")
        self.cap = cap


class NoCutEdges(SolverError):
    def __init__(self, message: str = "graph has no cut-edges"):
        super().__init__(message)


class HTooSmall(SolverError):
    def __init__(self, h: int):
        super().__init__(f"h(G)={h}, need h(G) >= 2")
        self.h = h


# Construction errors

class ConstructionError(CfcLabError):
    """A constructive colorer could not run or broke one of its own invariants."""


class KTooSmall(ConstructionError):
    def __init__(self, k: int, minimum: int = 3):
        super().__init__(f"k={k}, need k >= {minimum}")
        self.k = k


class HypothesisViolated(ConstructionError):
    def __init__(self, delta: int, alpha: int):
        super().__init__(f"max degree {delta} < (alpha + 2) / 2 with alpha={alpha}")
        self.delta = delta
        self.alpha = alpha


class InvariantViolation(ConstructionError):
    def __init__(self, message: str, context: Optional[Any] = None):
        super().__init__(message)
        self.context = context


# Family errors

class FamilyError(CfcLabError):
    pass


class BadParameters(FamilyError):
    pass


# Harness errors

class HarnessError(CfcLabError):
    pass


class CorpusTooLarge(HarnessError):
    pass


class MemoInconsistency(HarnessError):
    pass


# Format errors

class FormatError(CfcLabError):
    def __init__(self, message: str, line: Optional[int] = None):
        where = f" (line {line})" if line is not None else ""
        super().__init__(f"{message}{where}")
        self.line = line
