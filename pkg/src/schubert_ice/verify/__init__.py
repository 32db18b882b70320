from .checks import (
    CHECKS,
    check_banner,
    check_block,
    check_bpd_formula,
    check_cdg,
    check_conjecture1,
    check_pattern,
    check_recurrence,
    check_transition,
    glued_diagram,
    quotient_identity,
    random_partial,
    resolve_order,
)
from .report import FAIL, PASS, SKIPPED, ScanSummary, VerificationReport
from .scan import check_pattern_conjecture, sample_permutations, scan
