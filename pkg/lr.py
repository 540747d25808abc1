"""
lr.py
Littlewood–Richardson 도구: skew tableau 검증, LR 계수, 반복(iterated) LR 계수, valid tuple 열거
"""

from dataclasses import dataclass, field
from functools import cache

from errors import DomainError, StructureError
from partitions import EMPTY, Partition, enumerate_partitions, is_subpartition


@dataclass(frozen=True)
class SkewShape:
    """λ/μ skew diagram (inner ⊆ outer)"""
    outer: Partition
    inner: Partition = EMPTY

    def __post_init__(self):
        if not is_subpartition(self.inner, self.outer):
            raise StructureError(f"{self.inner} is not contained in {self.outer}")

    @property
    def box_count(self):
        return self.outer.size - self.inner.size

    def rows(self):
        """행별 (행 번호, 시작 열, 끝 열), 1-indexed, 빈 행 포함"""
        return [(row, self.inner.part(row) + 1, self.outer.part(row))
                for row in range(1, self.outer.height + 1)]

    def cells(self):
        return [(row, col) for row, start, end in self.rows() for col in range(start, end + 1)]

    def nonempty_rows(self):
        return sum(1 for _, start, end in self.rows() if end >= start)

    def __str__(self):
        return f"{self.outer}/{self.inner}"


@dataclass(frozen=True)
class LRTableau:
    """skew shape 의 정수 채움: 행마다 라벨 시퀀스 (skew 칸 하나당 라벨 하나)"""
    shape: SkewShape
    filling: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "filling", tuple(tuple(int(x) for x in row) for row in self.filling))

    def labels(self):
        """(행, 열) → 라벨 사전. 모양이 맞지 않으면 StructureError"""
        rows = self.shape.rows()
        filling = list(self.filling)
        if len(filling) > len(rows):
            raise StructureError(f"filling has {len(filling)} rows, shape {self.shape} has {len(rows)}")
        # 뒤쪽 빈 행은 생략 가능
        filling.extend(() for _ in range(len(rows) - len(filling)))
        labels = {}
        for (row, start, end), values in zip(rows, filling):
            width = max(0, end - start + 1)
            if len(values) != width:
                raise StructureError(
                    f"row {row} of {self.shape} has {width} boxes, filling gives {len(values)}"
                )
            for col, value in zip(range(start, end + 1), values):
                labels[(row, col)] = value
        return labels

    def reading_word(self):
        """역순 행을 위에서 아래로 이어붙인 단어"""
        labels = self.labels()
        return [labels[(row, col)] for row, start, end in self.shape.rows()
                for col in range(end, start - 1, -1)]


@dataclass(frozen=True, order=True)
class ValidTuple:
    """(λ, 인수 분할들) 과 0 이 아닌 반복 LR 계수"""
    lam: Partition
    factors: tuple = field(default=())
    coefficient: int = field(default=0, compare=False)

    @property
    def mu(self):
        return self.factors[0]

    @property
    def nu(self):
        return self.factors[1]

    @property
    def zeta(self):
        return self.factors[2]

    def sort_key(self):
        return (self.lam.parts,) + tuple(f.parts for f in self.factors)


def is_lattice_word(word):
    """모든 prefix 에서 i 의 개수 ≥ (i+1) 의 개수"""
    counts = {}
    for label in word:
        counts[label] = counts.get(label, 0) + 1
        if label > 1 and counts[label] > counts.get(label - 1, 0):
            return False
    return True


def is_lr_filling(t):
    """
    semistandard (행 약증가, 열 강증가) + reading word 가 lattice word 인지

    열 비교는 같은 절대 열의 skew 칸끼리만 (inner 칸은 건너뜀)

    Raises:
        StructureError: filling 이 shape 과 맞지 않을 때
    """
    labels = t.labels()
    for (row, col), label in labels.items():
        if label < 1:
            return False
        right = labels.get((row, col + 1))
        if right is not None and right < label:
            return False
        above = labels.get((row - 1, col))
        if above is not None and above >= label:
            return False
    return is_lattice_word(t.reading_word())


def enumeration_of(t):
    """라벨 i 의 개수를 i 번째 파트로 갖는 분할"""
    labels = t.labels()
    if not labels:
        return EMPTY
    counts = [0] * max(labels.values())
    for label in labels.values():
        counts[label - 1] += 1
    return Partition.from_parts(counts)


@cache
def _lr_count(outer, inner, content):
    shape = SkewShape(Partition(outer), Partition(inner))
    if sum(content) != shape.box_count:
        return 0
    # reading word 순서: 위 행부터, 각 행은 오른쪽 → 왼쪽
    order = [(row, col) for row, start, end in shape.rows() for col in range(end, start - 1, -1)]
    height = len(content)
    labels = {}
    counts = [0] * (height + 1)

    def place(k):
        if k == len(order):
            return 1
        row, col = order[k]
        upper = labels.get((row, col + 1), height)
        above = labels.get((row - 1, col))
        lower = 1 if above is None else above + 1
        total = 0
        for label in range(lower, min(upper, height) + 1):
            if counts[label] >= content[label - 1]:
                continue
            if label > 1 and counts[label - 1] <= counts[label]:
                continue
            labels[(row, col)] = label
            counts[label] += 1
            total += place(k + 1)
            counts[label] -= 1
        labels.pop((row, col), None)
        return total

    return place(0)


def lr_coefficient(lam, mu, nu):
    """
    c^λ_{μν}: 내용(enumeration)이 ν 인 λ/μ 의 LR 채움 개수

    Returns:
        int: 크기 불일치 또는 μ ⊄ λ 이면 0
    """
    if lam.size != mu.size + nu.size or not is_subpartition(mu, lam):
        return 0
    if not is_subpartition(nu, lam):
        return 0
    return _lr_count(lam.parts, mu.parts, nu.parts)


@cache
def _lr_product(mu, nu, max_height):
    mu_p, nu_p = Partition(mu), Partition(nu)
    size = mu_p.size + nu_p.size
    height = mu_p.height + nu_p.height
    if max_height is not None:
        height = min(height, max_height)
    product = {}
    for kappa in enumerate_partitions(size, height):
        coefficient = lr_coefficient(kappa, mu_p, nu_p)
        if coefficient:
            product[kappa] = coefficient
    return product


def lr_product(mu, nu, max_height=None):
    """
    s_μ · s_ν 전개: κ → c^κ_{μν} (0 이 아닌 항만)

    Args:
        max_height: 주어지면 높이 초과 κ 는 제외
    """
    return dict(_lr_product(mu.parts, nu.parts, max_height))


def iterated_lr(lam, factors):
    """
    반복 LR 계수: 인수를 왼쪽부터 차례로 곱해 λ 의 계수를 구함
    세 인수이면 c^λ_{μνζ} = Σ_κ c^κ_{μν} c^λ_{κζ}
    """
    factors = list(factors)
    if sum(f.size for f in factors) != lam.size:
        return 0
    if not factors:
        return 1 if lam.size == 0 else 0
    if any(not is_subpartition(f, lam) for f in factors):
        return 0
    if len(factors) == 1:
        return 1 if factors[0] == lam else 0

    current = {factors[0]: 1}
    for factor in factors[1:-1]:
        expanded = {}
        for kappa, weight in current.items():
            for nxt, coefficient in _lr_product(kappa.parts, factor.parts, lam.height).items():
                if is_subpartition(nxt, lam):
                    expanded[nxt] = expanded.get(nxt, 0) + weight * coefficient
        current = expanded
    last = factors[-1]
    return sum(weight * lr_coefficient(lam, kappa, last) for kappa, weight in current.items())


def _intermediate_shapes(lam, mu, size):
    """μ ⊆ κ ⊆ λ, |κ| = size 인 분할 κ (행별 선택)"""
    def extend(row, prefix, remaining):
        if row > lam.height:
            if remaining == 0:
                yield Partition.from_parts(prefix)
            return
        upper = lam.part(row)
        if prefix:
            upper = min(upper, prefix[-1])
        for length in range(mu.part(row), upper + 1):
            if length - mu.part(row) > remaining:
                break
            yield from extend(row + 1, prefix + [length], remaining - (length - mu.part(row)))

    if not is_subpartition(mu, lam):
        return
    yield from extend(1, [], size - mu.size)


def iter_lr_fillings(shape, content=None):
    """
    shape 의 모든 LR 채움 생성 (왼쪽→오른쪽, 위→아래 순서로 semistandard 후보 생성 후 검사)

    Args:
        shape: SkewShape
        content: 주어지면 enumeration 이 content 인 채움만

    Yields:
        LRTableau
    """
    if content is not None and content.size != shape.box_count:
        return
    rows = shape.rows()
    max_label = shape.nonempty_rows() if content is None else content.height
    cells = shape.cells()
    labels = {}

    def build():
        return LRTableau(shape, tuple(tuple(labels[(row, col)] for col in range(start, end + 1))
                                      for row, start, end in rows))

    def fill(k):
        if k == len(cells):
            tableau = build()
            if is_lr_filling(tableau) and (content is None or enumeration_of(tableau) == content):
                yield tableau
            return
        row, col = cells[k]
        left = labels.get((row, col - 1), 1)
        above = labels.get((row - 1, col))
        lower = left if above is None else max(left, above + 1)
        for label in range(lower, max_label + 1):
            labels[(row, col)] = label
            yield from fill(k + 1)
        labels.pop((row, col), None)

    yield from fill(0)


def _count_fillings(shape, content):
    return sum(1 for _ in iter_lr_fillings(shape, content))


def iterated_lr_direct(lam, mu, nu, zeta):
    """
    λ/μ 를 두 skew 영역 λ[ν], λ[ζ] 로 나누는 방법을 직접 셈
    (λ[ν] ∪ μ 가 분할 κ 이고 두 영역 모두 LR tableau)
    """
    if lam.size != mu.size + nu.size + zeta.size:
        return 0
    if not is_subpartition(mu, lam):
        return 0
    total = 0
    for kappa in _intermediate_shapes(lam, mu, mu.size + nu.size):
        grey = _count_fillings(SkewShape(kappa, mu), nu)
        if grey:
            total += grey * _count_fillings(SkewShape(lam, kappa), zeta)
    return total


def check_part_sizes(parts, allow_zero=False):
    """파트 크기가 내림차순이고 (allow_zero 가 아니면) 모두 ≥ 1 인지 확인"""
    parts = list(parts)
    floor = 0 if allow_zero else 1
    if any(p < floor for p in parts):
        raise DomainError(f"part sizes must be >= {floor}: {parts}")
    if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
        raise DomainError(f"part sizes must be sorted nonincreasing: {parts}")
    return parts


def tuples_for_lambda(lam, part_sizes):
    """
    주어진 λ 에 대해 0 이 아닌 반복 LR 계수를 갖는 모든 인수 조합

    Returns:
        list[ValidTuple]: 정렬됨
    """
    candidates = [[f for f in enumerate_partitions(size, lam.height) if is_subpartition(f, lam)]
                  for size in part_sizes]
    found = []

    def choose(index, chosen):
        if index == len(candidates):
            coefficient = iterated_lr(lam, chosen)
            if coefficient:
                found.append(ValidTuple(lam, tuple(chosen), coefficient))
            return
        for factor in candidates[index]:
            choose(index + 1, chosen + [factor])

    choose(0, [])
    return sorted(found, key=ValidTuple.sort_key)


def valid_tuples(p, q, r, d):
    """
    λ ⊢ p+q+r (높이 ≤ d), μ ⊢ p, ν ⊢ q, ζ ⊢ r 중 c^λ_{μνζ} ≠ 0 인 모든 tuple

    Raises:
        DomainError: p ≥ q ≥ r ≥ 1 이 아닐 때
    """
    check_part_sizes([p, q, r])
    found = []
    for lam in enumerate_partitions(p + q + r, d):
        found.extend(tuples_for_lambda(lam, (p, q, r)))
    return sorted(found, key=ValidTuple.sort_key)


def minimal_lr_filling(shape):
    """
    왼쪽→오른쪽, 위→아래로 LR 조건을 유지하는 가장 작은 라벨을 채움

    Returns:
        LRTableau | None: LR 채움이 없으면 None
    """
    rows = shape.rows()
    cells = shape.cells()
    max_label = max(1, shape.nonempty_rows())
    labels = {}
    row_ends = {}
    for index, (row, col) in enumerate(cells):
        row_ends[row] = index

    def prefix_word(last_row):
        return [labels[(row, col)] for row, start, end in rows if row <= last_row
                for col in range(end, start - 1, -1)]

    def fill(k):
        if k == len(cells):
            return True
        row, col = cells[k]
        left = labels.get((row, col - 1), 1)
        above = labels.get((row - 1, col))
        lower = left if above is None else max(left, above + 1)
        for label in range(lower, max_label + 1):
            labels[(row, col)] = label
            # 행이 끝나면 지금까지의 reading word 가 lattice 인지 확인
            if row_ends[row] == k and not is_lattice_word(prefix_word(row)):
                continue
            if fill(k + 1):
                return True
        labels.pop((row, col), None)
        return False

    if not fill(0):
        return None
    return LRTableau(shape, tuple(tuple(labels[(row, col)] for col in range(start, end + 1))
                                  for row, start, end in rows))
