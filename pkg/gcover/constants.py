TABLE_CAP = 4096                   # largest group order any constructor will build
EXHAUSTIVE_ASSOCIATIVITY_LIMIT = 256
ASSOCIATIVITY_SAMPLES = 10 ** 6    # triples checked above the exhaustive limit
ASSOCIATIVITY_SEED = 20120907
ISOMORPHISM_CAP = 24
SUBSET_ORACLE_LIMIT = 16
DEFAULT_SIGMA_CAP = 12
DEFAULT_MAX_ORDER = 64
DEFAULT_WORKERS = 4

TABLE_CAP_ENV = "GCOVER_MAX_ORDER"


class ExitCode:
    SUCCESS = 0
    ASSERTION_FAILURE = 1
    PARSE_ERROR = 2
    CAP_EXCEEDED = 3


class SigmaOutcome:
    NO_COVER = "no-cover"        # cyclic groups
    EXCEEDS_CAP = "exceeds-cap"  # minimum larger than the search cap

    valid_outcomes = frozenset([
        NO_COVER,
        EXCEEDS_CAP,
    ])


class C3Method:
    ENUMERATION = "enumeration"
    QUOTIENT_COUNT = "quotient-count"

    valid_methods = frozenset([
        ENUMERATION,
        QUOTIENT_COUNT,
    ])


class OutputFormat:
    HUMAN = "human"
    JSON = "json"
    CSV = "csv"
