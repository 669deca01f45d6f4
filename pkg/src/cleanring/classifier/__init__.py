from .first_principles import (
    PreconditionError,
    check_preconditions,
    classify_first_principles,
    divisor_witnesses,
    verdict_from_witnesses,
)
from .props import RATIO_OTHER, prop26_cases, prop26_direct, prop32_direct, prop32_item
from .report import FIRST_PRINCIPLES, THEOREM, ClassificationReport, CleannessClass, DivisorWitness
from .ledger import AGREE, LEDGERED, UNEXPECTED, Agreement, DiscrepancyLedger, cross_validate
from .theorems import classify_theorem
