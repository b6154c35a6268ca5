# models.py
# Chứa các kiểu giá trị bất biến của gói quasi_schur

import re
from dataclasses import dataclass, field
from typing import Any, Dict, Iterator, List, Optional, Sequence, Tuple, Union

import numpy as np

from .exceptions import BasisMismatchError, ValidationError

BASES = ("F", "M", "s")
OUTPUT_FORMATS = ("json", "csv", "text")

_INT_LIST = re.compile(r"^\s*\[\s*(-?\d+(\s*,\s*-?\d+)*)?\s*\]\s*$")


def _parse_int_list(text: str) -> Tuple[int, ...]:
    if not _INT_LIST.match(text):
        raise ValidationError(f"Expected a bracketed comma-separated list, got {text!r}")
    body = text.strip()[1:-1].strip()
    return tuple(int(piece) for piece in body.split(",")) if body else ()


def _format_int_list(values: Sequence[int]) -> str:
    return "[" + ",".join(str(v) for v in values) + "]"


@dataclass(frozen=True)
class Partition:
    """Dãy số nguyên dương không tăng; các số 0 ở cuối bị loại bỏ."""
    parts: Tuple[int, ...] = ()

    def __post_init__(self):
        parts = [int(p) for p in self.parts]
        while parts and parts[-1] == 0:
            parts.pop()
        if any(p < 1 for p in parts):
            raise ValidationError(f"Partition parts must be positive: {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValidationError(f"Partition parts must be weakly decreasing: {parts}")
        object.__setattr__(self, "parts", tuple(parts))

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    @property
    def multiplicities(self) -> Dict[int, int]:
        """The frequency view m: part value -> count."""
        counts: Dict[int, int] = {}
        for p in self.parts:
            counts[p] = counts.get(p, 0) + 1
        return counts

    def multiplicity(self, value: int) -> int:
        return self.parts.count(value)

    def conjugate(self) -> "Partition":
        if not self.parts:
            return self
        return Partition(tuple(sum(1 for p in self.parts if p > j) for j in range(self.parts[0])))

    def padded(self, length: int) -> Tuple[int, ...]:
        return self.parts + (0,) * max(0, length - len(self.parts))

    def as_composition(self) -> "Composition":
        return Composition(self.parts)

    @classmethod
    def from_multiplicities(cls, multiplicities: Dict[int, int]) -> "Partition":
        parts: List[int] = []
        for value in sorted(multiplicities, reverse=True):
            count = multiplicities[value]
            if count < 0:
                raise ValidationError(f"Negative multiplicity {count} for part {value}")
            parts.extend([value] * count)
        return cls(tuple(parts))

    @classmethod
    def from_string(cls, text: str) -> "Partition":
        return cls(_parse_int_list(text))

    def __add__(self, other: "Partition") -> "Partition":
        # componentwise, shorter side padded with zeros
        length = max(self.length, other.length)
        return Partition(tuple(a + b for a, b in zip(self.padded(length), other.padded(length))))

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def __str__(self) -> str:
        return _format_int_list(self.parts)


@dataclass(frozen=True)
class Composition:
    """Dãy số nguyên dương; làm chỉ số cho các cơ sở F và M."""
    parts: Tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        if any(p < 1 for p in parts):
            raise ValidationError(f"Composition parts must be positive: {list(parts)}")
        object.__setattr__(self, "parts", parts)

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    def is_partition(self) -> bool:
        return all(self.parts[i] >= self.parts[i + 1] for i in range(len(self.parts) - 1))

    def as_partition(self) -> Partition:
        if not self.is_partition():
            raise ValidationError(f"Composition {self} is not weakly decreasing")
        return Partition(self.parts)

    def descent_set(self) -> Tuple[int, ...]:
        """Partial sums d_1 < d_2 < ... strictly below the size."""
        sums, total = [], 0
        for p in self.parts[:-1]:
            total += p
            sums.append(total)
        return tuple(sums)

    @classmethod
    def from_descent_set(cls, descents: Sequence[int], n: int) -> "Composition":
        if n == 0:
            return cls(())
        points = [0] + sorted(set(descents)) + [n]
        if points[1] <= 0 or points[-2] >= n:
            raise ValidationError(f"Descent set {sorted(descents)} is not inside [1, {n - 1}]")
        return cls(tuple(points[i + 1] - points[i] for i in range(len(points) - 1)))

    @classmethod
    def from_string(cls, text: str) -> "Composition":
        return cls(_parse_int_list(text))

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def __str__(self) -> str:
        return _format_int_list(self.parts)


Index = Union[Partition, Composition]


@dataclass(frozen=True)
class BoxLattice:
    """Partitions with at most h parts, each at most w, ordered by containment."""
    w: int
    h: int

    def __post_init__(self):
        if self.w < 0 or self.h < 0:
            raise ValidationError(f"Box dimensions must be nonnegative, got w={self.w}, h={self.h}")

    @property
    def max_rank(self) -> int:
        return self.w * self.h

    def __contains__(self, mu: Partition) -> bool:
        return mu.length <= self.h and (not mu.parts or mu.parts[0] <= self.w)

    def complement_rank(self, mu: Partition) -> int:
        return self.max_rank - mu.size

    def __str__(self) -> str:
        return f"L({self.w},{self.h})"


@dataclass(frozen=True)
class Tableau:
    """Bảng nửa chuẩn theo ký pháp Pháp: rows[0] là hàng dưới cùng."""
    rows: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(v) for v in row) for row in self.rows)
        if any(len(row) == 0 for row in rows):
            raise ValidationError(f"Tableau rows must be nonempty: {rows}")
        for i, row in enumerate(rows):
            if any(v < 1 for v in row):
                raise ValidationError(f"Tableau entries must be positive: {rows}")
            if any(row[j] > row[j + 1] for j in range(len(row) - 1)):
                raise ValidationError(f"Row {i + 1} is not weakly increasing: {row}")
            if i > 0:
                below = rows[i - 1]
                if len(row) > len(below):
                    raise ValidationError(f"Row lengths must weakly decrease upwards: {rows}")
                if any(row[j] <= below[j] for j in range(len(row))):
                    raise ValidationError(f"Columns must strictly increase upwards: {rows}")
        object.__setattr__(self, "rows", rows)

    @property
    def shape(self) -> Partition:
        return Partition(tuple(len(row) for row in self.rows))

    @property
    def size(self) -> int:
        return sum(len(row) for row in self.rows)

    @property
    def max_entry(self) -> int:
        return max((row[-1] for row in self.rows), default=0)

    @property
    def weight(self) -> Tuple[int, ...]:
        """wt(T): entry i-1 counts the cells holding i, up to the largest entry."""
        counts = [0] * self.max_entry
        for row in self.rows:
            for v in row:
                counts[v - 1] += 1
        return tuple(counts)

    def is_standard(self) -> bool:
        return all(c == 1 for c in self.weight)

    def cells(self) -> Iterator[Tuple[int, int, int]]:
        """Yield (row, column, entry), 1-based, bottom row first."""
        for r, row in enumerate(self.rows, start=1):
            for c, v in enumerate(row, start=1):
                yield r, c, v

    def reading_word(self) -> Tuple[int, ...]:
        """Rows bottom to top, left to right; the enumeration order key."""
        return tuple(v for row in self.rows for v in row)

    def row_reading_word(self) -> Tuple[int, ...]:
        """Rows top to bottom, left to right."""
        return tuple(v for row in reversed(self.rows) for v in row)

    def to_english(self) -> List[List[int]]:
        return [list(row) for row in reversed(self.rows)]

    @classmethod
    def from_string(cls, text: str) -> "Tableau":
        body = text.strip()
        if not (body.startswith("[") and body.endswith("]")):
            raise ValidationError(f"Expected a tableau like [1,1,2;2,3], got {text!r}")
        if not body[1:-1].strip():
            return cls(())
        rows = []
        for chunk in body[1:-1].split(";"):
            rows.append(_parse_int_list("[" + chunk + "]"))
        return cls(tuple(rows))

    def __str__(self) -> str:
        return "[" + ";".join(",".join(str(v) for v in row) for row in self.rows) + "]"


@dataclass(frozen=True)
class SymFunc:
    """Phần tử thuần nhất theo cơ sở F, M hoặc s với hệ số nguyên chính xác."""
    degree: int
    basis: str
    terms: Dict[Index, int] = field(default_factory=dict)

    def __post_init__(self):
        if self.basis not in BASES:
            raise ValidationError(f"Unknown basis {self.basis!r}; expected one of {BASES}")
        expected = Partition if self.basis == "s" else Composition
        cleaned: Dict[Index, int] = {}
        for index, coeff in self.terms.items():
            if not isinstance(index, expected):
                raise ValidationError(f"Basis {self.basis} is indexed by {expected.__name__}, got {index!r}")
            if index.size != self.degree:
                raise ValidationError(f"Index {index} has size {index.size}, expected degree {self.degree}")
            if coeff:
                cleaned[index] = int(coeff)
        object.__setattr__(self, "terms", cleaned)

    @classmethod
    def zero(cls, degree: int, basis: str) -> "SymFunc":
        return cls(degree, basis, {})

    @classmethod
    def basis_element(cls, index: Index, basis: str, coeff: int = 1) -> "SymFunc":
        return cls(index.size, basis, {index: coeff})

    def coefficient(self, index: Index) -> int:
        return self.terms.get(index, 0)

    def support(self) -> List[Index]:
        return [index for index, _ in self.sorted_terms()]

    def sorted_terms(self) -> List[Tuple[Index, int]]:
        """Terms in reverse-lexicographic order of their index."""
        return sorted(self.terms.items(), key=lambda item: item[0].parts, reverse=True)

    def is_zero(self) -> bool:
        return not self.terms

    def _check_compatible(self, other: "SymFunc") -> None:
        if not isinstance(other, SymFunc):
            raise BasisMismatchError(f"Cannot combine SymFunc with {type(other).__name__}")
        if other.basis != self.basis or other.degree != self.degree:
            raise BasisMismatchError(
                f"Cannot combine basis {self.basis} degree {self.degree} with basis {other.basis} degree {other.degree}")

    def __add__(self, other: "SymFunc") -> "SymFunc":
        self._check_compatible(other)
        terms = dict(self.terms)
        for index, coeff in other.terms.items():
            terms[index] = terms.get(index, 0) + coeff
        return SymFunc(self.degree, self.basis, terms)

    def __neg__(self) -> "SymFunc":
        return SymFunc(self.degree, self.basis, {index: -coeff for index, coeff in self.terms.items()})

    def __sub__(self, other: "SymFunc") -> "SymFunc":
        return self + (-other)

    def __mul__(self, scalar: int) -> "SymFunc":
        if not isinstance(scalar, (int, np.integer)) or isinstance(scalar, bool):
            return NotImplemented
        return SymFunc(self.degree, self.basis, {index: int(scalar) * coeff for index, coeff in self.terms.items()})

    __rmul__ = __mul__

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for index, coeff in self.sorted_terms():
            name = f"{self.basis}{index}"
            if coeff == 1:
                pieces.append(f"+ {name}")
            elif coeff == -1:
                pieces.append(f"- {name}")
            else:
                pieces.append(f"{'+' if coeff > 0 else '-'} {abs(coeff)}*{name}")
        text = " ".join(pieces)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]


@dataclass(frozen=True, eq=False)
class QuasiKostkaMatrix:
    """A square integer matrix indexed by partitions of n in reverse-lexicographic order.

    Holds Q (``inverted=False``) or its inverse (``inverted=True``); entries are Python ints
    stored in a numpy object array.
    """
    degree: int
    index: Tuple[Partition, ...]
    entries: np.ndarray
    max_len: Optional[int] = None
    inverted: bool = False

    def __post_init__(self):
        p = len(self.index)
        if self.entries.shape != (p, p):
            raise ValidationError(f"Matrix shape {self.entries.shape} does not match {p} index partitions")

    @property
    def size(self) -> int:
        return len(self.index)

    def position(self, lam: Partition) -> int:
        try:
            return self.index.index(lam)
        except ValueError:
            raise ValidationError(f"{lam} is not an index of this matrix") from None

    def entry(self, row: Partition, column: Partition) -> int:
        return int(self.entries[self.position(row), self.position(column)])

    def rows(self) -> List[List[int]]:
        return [[int(v) for v in row] for row in self.entries]

    def is_unit_upper_triangular(self) -> bool:
        p = self.size
        return all(self.entries[i, i] == 1 for i in range(p)) and \
            all(self.entries[i, j] == 0 for i in range(p) for j in range(i))

    def max_abs_entry(self) -> int:
        return max((abs(int(v)) for v in self.entries.flat), default=0)

    def submatrix(self, max_len: int) -> "QuasiKostkaMatrix":
        keep = [i for i, lam in enumerate(self.index) if lam.length <= max_len]
        return QuasiKostkaMatrix(self.degree, tuple(self.index[i] for i in keep),
                                 self.entries[np.ix_(keep, keep)].copy(), max_len, self.inverted)

    def same_entries(self, other: "QuasiKostkaMatrix") -> bool:
        return self.index == other.index and bool(np.array_equal(self.entries, other.entries))


@dataclass(frozen=True)
class SignedChain:
    """Dãy bảng tựa Yamanouchi; mỗi hình dạng là trọng số của bảng đứng trước."""
    tableaux: Tuple[Tableau, ...]

    def __post_init__(self):
        # Nhập bên trong phương thức để tránh nhập vòng với tableaux.py
        from .tableaux import is_quasi_yamanouchi

        if not self.tableaux:
            raise ValidationError("A chain holds at least one tableau")
        for i, t in enumerate(self.tableaux):
            if not is_quasi_yamanouchi(t):
                raise ValidationError(f"Chain tableau {i + 1} is not quasi-Yamanouchi: {t}")
            if i > 0 and t.shape.parts != self.tableaux[i - 1].weight:
                raise ValidationError(f"Chain tableau {i + 1} has shape {t.shape}, "
                                      f"expected the previous weight {list(self.tableaux[i - 1].weight)}")
        last = self.tableaux[-1]
        if last.weight != last.shape.parts:
            raise ValidationError(f"The last chain tableau must have weight equal to its shape: {last}")

    @property
    def length(self) -> int:
        return len(self.tableaux)

    @property
    def sign(self) -> int:
        return -1 if self.length % 2 == 0 else 1

    @property
    def initial_shape(self) -> Partition:
        return self.tableaux[0].shape

    @property
    def weight(self) -> Partition:
        return self.tableaux[-1].shape


@dataclass(frozen=True)
class TableauOfTableaux:
    """A standard tableau of tableaux: outer shape lam, each cell filled by a tableau of shape mu.

    ``filling`` follows the outer shape in French notation (filling[0] is the bottom row).
    """
    outer: Partition
    inner: Partition
    filling: Tuple[Tuple[Tableau, ...], ...]

    def __post_init__(self):
        if tuple(len(row) for row in self.filling) != self.outer.parts:
            raise ValidationError(f"Filling does not have outer shape {self.outer}")
        seen: List[int] = []
        for row in self.filling:
            for t in row:
                if t.shape != self.inner:
                    raise ValidationError(f"Inner tableau {t} does not have shape {self.inner}")
                seen.extend(t.reading_word())
        if sorted(seen) != list(range(1, len(seen) + 1)):
            raise ValidationError("Entries of a tableau of tableaux must be exactly 1..|lam||mu|")
        words = [[t.row_reading_word() for t in row] for row in self.filling]
        for r, row in enumerate(words):
            if any(row[c] > row[c + 1] for c in range(len(row) - 1)):
                raise ValidationError(f"Outer row {r + 1} is not increasing in row reading order")
            if r > 0 and any(row[c] <= words[r - 1][c] for c in range(len(row))):
                raise ValidationError(f"Outer column condition fails above row {r}")

    @property
    def size(self) -> int:
        return self.outer.size * self.inner.size

    @property
    def matrix(self) -> Tuple[Tuple[int, ...], ...]:
        """Rows follow the outer cells top to bottom, left to right; each is a row reading word."""
        return tuple(t.row_reading_word() for row in reversed(self.filling) for t in row)

    @classmethod
    def from_matrix(cls, outer: Partition, inner: Partition, matrix: Sequence[Sequence[int]]) -> "TableauOfTableaux":
        if len(matrix) != outer.size:
            raise ValidationError(f"Matrix has {len(matrix)} rows, expected {outer.size}")
        inner_tableaux = []
        for word in matrix:
            rows, start = [], 0
            # the word lists inner rows from the top one down
            for length in reversed(inner.parts):
                rows.append(tuple(word[start:start + length]))
                start += length
            if start != len(word):
                raise ValidationError(f"Matrix row {list(word)} does not fit shape {inner}")
            inner_tableaux.append(Tableau(tuple(reversed(rows))))
        filling, k = [], 0
        for length in reversed(outer.parts):
            filling.append(tuple(inner_tableaux[k:k + length]))
            k += length
        return cls(outer, inner, tuple(reversed(filling)))


@dataclass(frozen=True)
class TwoRowPoly:
    """Coefficients a_(a,b) of s_w[s_h](x, y) on the two-row Schur polynomials s_(a,b)(x, y)."""
    w: int
    h: int
    coefficients: Dict[Tuple[int, int], int] = field(default_factory=dict)

    def __post_init__(self):
        cleaned = {}
        for (a, b), coeff in self.coefficients.items():
            if not (a >= b >= 0 and a + b == self.degree):
                raise ValidationError(f"({a},{b}) is not a two-row partition of {self.degree}")
            if coeff:
                cleaned[(int(a), int(b))] = int(coeff)
        object.__setattr__(self, "coefficients", cleaned)

    @property
    def degree(self) -> int:
        return self.w * self.h

    def coefficient(self, a: int, b: int) -> int:
        return self.coefficients.get((a, b), 0)

    def sorted_terms(self) -> List[Tuple[Tuple[int, int], int]]:
        return sorted(self.coefficients.items(), key=lambda item: item[0][0], reverse=True)

    def to_symfunc(self) -> SymFunc:
        return SymFunc(self.degree, "s", {Partition((a, b)): c for (a, b), c in self.coefficients.items()})


@dataclass(frozen=True)
class OperatorStep:
    """One application of an f or e operator: phase, case, and the column moved (None at a boundary)."""
    phase: int
    case: str
    direction: str
    column: Optional[int]
    result: Optional[Partition]


@dataclass(frozen=True)
class ChainDecomposition:
    """Saturated chains of a box lattice; edge labels are recomputed from the elements."""
    lattice: BoxLattice
    chains: Tuple[Tuple[Partition, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "chains", tuple(tuple(chain) for chain in self.chains))
        if any(len(chain) == 0 for chain in self.chains):
            raise ValidationError("Chains must be nonempty")

    @property
    def edge_labels(self) -> Tuple[Tuple[Optional[int], ...], ...]:
        # Import inside the method to avoid a circular import with combinat.py
        from .combinat import added_column

        return tuple(tuple(added_column(chain[i], chain[i + 1]) for i in range(len(chain) - 1))
                     for chain in self.chains)

    def minima(self) -> List[Partition]:
        return [chain[0] for chain in self.chains]

    def maxima(self) -> List[Partition]:
        return [chain[-1] for chain in self.chains]

    def sorted_chains(self) -> List[Tuple[Partition, ...]]:
        """Chains by rank of the minimum, then reverse-lexicographic order of the minimum."""
        by_lex = sorted(self.chains, key=lambda chain: chain[0].parts, reverse=True)
        return sorted(by_lex, key=lambda chain: chain[0].size)


@dataclass
class CheckResult:
    """Kết quả của một phép kiểm tra chứng nhận."""
    name: str
    passed: bool = True
    violations: List[str] = field(default_factory=list)

    def fail(self, message: str) -> None:
        self.passed = False
        self.violations.append(message)


@dataclass
class CertificationReport:
    """The six-check report produced for a chain decomposition."""
    lattice: BoxLattice
    chain_count: int
    checks: Dict[str, CheckResult] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks.values())

    def to_dict(self) -> Dict[str, Any]:
        return {
            "w": self.lattice.w,
            "h": self.lattice.h,
            "chains": self.chain_count,
            "passed": self.passed,
            "checks": {name: {"passed": check.passed, "violations": list(check.violations)}
                       for name, check in self.checks.items()},
        }


@dataclass(frozen=True)
class RunConfig:
    """Các tùy chọn của một lần gọi dòng lệnh."""
    subcommand: str
    parameters: Dict[str, Any] = field(default_factory=dict)
    input_path: Optional[str] = None
    output_path: Optional[str] = None
    skip_symmetry_check: bool = False
    size_guard: int = 16
    output_format: str = "json"
    verbosity: int = 0

    def __post_init__(self):
        if self.output_format not in OUTPUT_FORMATS:
            raise ValidationError(f"Unknown output format {self.output_format!r}")
        if self.size_guard < 0:
            raise ValidationError(f"The size guard must be nonnegative, got {self.size_guard}")
        for name, value in self.parameters.items():
            if isinstance(value, int) and not isinstance(value, bool) and value < 0:
                raise ValidationError(f"Parameter {name} must be nonnegative, got {value}")
