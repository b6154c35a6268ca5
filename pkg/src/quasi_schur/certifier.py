# certifier.py
# Contains the checks that a chain decomposition of L(w,h) is a symmetric chain decomposition
# with the restriction, extension and pattern properties

import logging
from typing import Dict, List, Optional, Sequence, Tuple

from .combinat import added_column, box_complement, box_elements
from .models import BoxLattice, CertificationReport, ChainDecomposition, CheckResult, Partition

CHECKS = ("cover", "saturation", "rank_symmetry", "restriction", "extension", "pattern")


def _describe(index: int, chain: Sequence[Partition]) -> str:
    return f"chain {index + 1} (minimum {chain[0]})"


def restrict(decomposition: ChainDecomposition) -> ChainDecomposition:
    """Drop the elements outside L(w,h-1) from every chain; chains left empty disappear."""
    lattice = decomposition.lattice
    smaller = BoxLattice(lattice.w, lattice.h - 1)
    chains = []
    for chain in decomposition.chains:
        kept = tuple(lam for lam in chain if lam in smaller)
        if kept:
            chains.append(kept)
    return ChainDecomposition(smaller, tuple(chains))


def pattern_split(labels: Sequence[int], w: int) -> Optional[Tuple[int, Tuple[int, ...]]]:
    """A split s and permutation sigma such that labels[:s] avoids 1 and labels[s:] is a prefix of sigma repeated.

    Returns None when no split exists. A suffix shorter than w fixes only part of sigma.
    """
    for s in range(len(labels) + 1):
        if 1 in labels[:s]:
            break
        suffix = tuple(labels[s:])
        head = suffix[:w]
        if len(set(head)) != len(head) or any(not 1 <= c <= w for c in head):
            continue
        if all(suffix[i] == head[i % w] for i in range(len(suffix))):
            return s, head
    return None


class ChainCertifier:
    """Runs every certification check on one decomposition and collects the violations."""

    def __init__(self, decomposition: ChainDecomposition):
        self.decomposition = decomposition
        self.lattice = decomposition.lattice

    def certify(self) -> CertificationReport:
        report = CertificationReport(self.lattice, len(self.decomposition.chains))
        report.checks["cover"] = self.check_cover(self.decomposition)
        report.checks["saturation"] = self.check_saturation(self.decomposition)
        report.checks["rank_symmetry"] = self.check_rank_symmetry(self.decomposition)
        report.checks["restriction"] = self.check_restriction()
        report.checks["extension"] = self.check_extension()
        report.checks["pattern"] = self.check_pattern()
        if report.passed:
            logging.info(f"{self.lattice}: all {len(CHECKS)} checks passed")
        else:
            failed = [name for name, check in report.checks.items() if not check.passed]
            logging.warning(f"{self.lattice}: failed checks {failed}")
        return report

    @staticmethod
    def check_cover(decomposition: ChainDecomposition) -> CheckResult:
        """Chains are disjoint and cover the box exactly."""
        result = CheckResult("cover")
        lattice = decomposition.lattice
        seen: Dict[Partition, int] = {}
        for i, chain in enumerate(decomposition.chains):
            for lam in chain:
                if lam not in lattice:
                    result.fail(f"{_describe(i, chain)}: {lam} is outside {lattice}")
                elif lam in seen:
                    result.fail(f"{_describe(i, chain)}: {lam} also lies in chain {seen[lam] + 1}")
                else:
                    seen[lam] = i
        for group in box_elements(lattice):
            for lam in group:
                if lam not in seen:
                    result.fail(f"{lam} lies in no chain")
        return result

    @staticmethod
    def check_saturation(decomposition: ChainDecomposition) -> CheckResult:
        """Consecutive chain elements differ by a single cell."""
        result = CheckResult("saturation")
        for i, chain in enumerate(decomposition.chains):
            for lower, upper in zip(chain, chain[1:]):
                if added_column(lower, upper) is None:
                    result.fail(f"{_describe(i, chain)}: {upper} does not cover {lower}")
        return result

    @staticmethod
    def check_rank_symmetry(decomposition: ChainDecomposition) -> CheckResult:
        result = CheckResult("rank_symmetry")
        top = decomposition.lattice.max_rank
        for i, chain in enumerate(decomposition.chains):
            if chain[0].size + chain[-1].size != top:
                result.fail(f"{_describe(i, chain)}: ranks {chain[0].size} + {chain[-1].size} != {top}")
        return result

    def check_restriction(self) -> CheckResult:
        """Restricting to L(w,h-1) leaves a symmetric chain decomposition."""
        result = CheckResult("restriction")
        if self.lattice.h == 0:
            return result
        restricted = restrict(self.decomposition)
        for check in (self.check_cover, self.check_saturation, self.check_rank_symmetry):
            for violation in check(restricted).violations:
                result.fail(f"in {restricted.lattice}: {violation}")
        return result

    def check_extension(self) -> CheckResult:
        """A chain and its restriction have maxima with the same complement."""
        result = CheckResult("extension")
        if self.lattice.h == 0:
            return result
        smaller = BoxLattice(self.lattice.w, self.lattice.h - 1)
        for i, chain in enumerate(self.decomposition.chains):
            kept = [lam for lam in chain if lam in smaller]
            if not kept or chain[-1] not in self.lattice:
                continue
            full = box_complement(chain[-1], self.lattice)
            partial = box_complement(kept[-1], smaller)
            if full != partial:
                result.fail(f"{_describe(i, chain)}: complement {full} of {chain[-1]} differs from "
                            f"complement {partial} of {kept[-1]}")
        return result

    def check_pattern(self) -> CheckResult:
        """Edge labels are a 1-free prefix followed by repeats of one permutation of 1..w."""
        result = CheckResult("pattern")
        w = self.lattice.w
        for i, labels in enumerate(self.decomposition.edge_labels):
            chain = self.decomposition.chains[i]
            if None in labels:
                result.fail(f"{_describe(i, chain)}: unlabelled edge")
                continue
            if w == 2:
                # a single repeating pattern 1, 2 with no prefix
                if any(c != (1 if j % 2 == 0 else 2) for j, c in enumerate(labels)):
                    result.fail(f"{_describe(i, chain)}: labels {list(labels)} do not alternate 1, 2")
            elif pattern_split(labels, w) is None:
                result.fail(f"{_describe(i, chain)}: labels {list(labels)} follow no pattern")
        return result

    @staticmethod
    def _format_report_as_string(report: CertificationReport) -> str:
        # Import inside the function to avoid circular imports
        from .utils import render

        return render("certificate.txt.j2", report=report)


def certify(decomposition: ChainDecomposition) -> CertificationReport:
    return ChainCertifier(decomposition).certify()


def compare_with_golden(decomposition: ChainDecomposition, golden: ChainDecomposition) -> List[str]:
    """Order-insensitive comparison of two sets of chains; an empty list means they match."""
    differences = []
    if decomposition.lattice != golden.lattice:
        differences.append(f"lattice {decomposition.lattice} differs from {golden.lattice}")
    ours = set(decomposition.chains)
    theirs = set(golden.chains)
    for chain in sorted(theirs - ours, key=lambda c: (c[0].size, [-p for p in c[0].parts])):
        differences.append(f"missing chain from {chain[0]} to {chain[-1]} ({len(chain)} elements)")
    for chain in sorted(ours - theirs, key=lambda c: (c[0].size, [-p for p in c[0].parts])):
        differences.append(f"unexpected chain from {chain[0]} to {chain[-1]} ({len(chain)} elements)")
    return differences
