"""Exception types raised across the package."""


class UGBError(Exception):
    """Base class for every error raised by toric_ugb."""


# graph construction

class GraphError(UGBError):
    pass


class SelfLoop(GraphError):
    def __init__(self, edge: int, vertex: int):
        self.edge = edge
        self.vertex = vertex
        super().__init__(f"edge {edge + 1} is a self-loop at vertex {vertex + 1}")


class DuplicateEdge(GraphError):
    def __init__(self, edge: int, first: int):
        self.edge = edge
        self.first = first
        super().__init__(f"edge {edge + 1} duplicates edge {first + 1}")


class VertexOutOfRange(GraphError):
    def __init__(self, vertex: int, n: int, edge: int | None = None):
        self.vertex = vertex
        self.n = n
        self.edge = edge
        where = f" (edge {edge + 1})" if edge is not None else ""
        super().__init__(f"vertex {vertex + 1} not in 1..{n}{where}")


# walks and binomials

class WalkError(UGBError):
    pass


class NotAWalk(WalkError):
    def __init__(self, position: int):
        self.position = position
        super().__init__(f"edges at positions {position} and {position + 1} share no vertex")


class NotClosed(WalkError):
    def __init__(self):
        super().__init__("walk does not return to its starting vertex")


class OddLength(WalkError):
    def __init__(self, length: int):
        self.length = length
        super().__init__(f"walk has odd length {length}")


class ReducibleBinomial(WalkError):
    def __init__(self, edge: int):
        self.edge = edge
        super().__init__(f"edge e{edge + 1} occurs in both monomials")


class InvalidBinomial(UGBError):
    def __init__(self, invariant: str, row: int | None = None):
        self.invariant = invariant
        self.row = row
        where = f"row {row}: " if row is not None else ""
        super().__init__(f"{where}{invariant}")


class ExponentTooLarge(InvalidBinomial):
    def __init__(self, edge: int, exponent: int):
        self.edge = edge
        self.exponent = exponent
        super().__init__(f"exponent {exponent} on e{edge + 1} exceeds 2")


class SupportTooLarge(UGBError):
    def __init__(self, size: int, limit: int):
        self.size = size
        self.limit = limit
        super().__init__(f"support of {size} edges exceeds brute-force cap {limit}")


# enumeration and filtering

class LimitExceeded(UGBError):
    def __init__(self, limit: int):
        self.limit = limit
        super().__init__(
            f"walk search exceeded {limit} states; import a Graver basis with --basis instead"
        )


class MalformedInput(UGBError):
    pass


class OracleMismatch(UGBError):
    def __init__(self, binomial, detail: str):
        self.binomial = binomial
        self.detail = detail
        super().__init__(f"oracle mismatch on {binomial}: {detail}")


# file formats

class ParseError(UGBError):
    def __init__(self, line: int, reason: str):
        self.line = line
        self.reason = reason
        super().__init__(f"line {line}: {reason}")


class DimensionMismatch(UGBError):
    def __init__(self, expected: int, got: int):
        self.expected = expected
        self.got = got
        super().__init__(f"basis has {got} columns but the graph has {expected} edges")
