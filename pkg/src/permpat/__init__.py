"""permpat: a pattern engine for permutations.

Eight pattern formalisms (classical, vincular, bivincular, barred,
Bruhat-restricted, mesh, marked mesh, interval) with one matching API,
faithful translations into mesh form, Schubert-variety classifiers,
Grassmannian corner machinery, combinatorial families, and exhaustive
small-rank verification suites.
"""

from .families import (
    SpecialStatistics,
    is_baxter,
    is_dumont_first,
    is_dumont_second,
    is_freely_braided,
    is_simsun,
    is_two_cycle,
    special_statistics,
)
from .grassmann import (
    CornerReport,
    associated_grassmannian,
    corner_report,
    gamma_word,
    grassmannian_from_partition,
    grassmannian_perms,
    is_balanced,
    is_grassmannian,
)
from .matching import (
    Occurrence,
    avoids,
    avoids_all,
    contains,
    count_occurrences,
    occurrences,
)
from .patterns import (
    BarredPattern,
    BivincularPattern,
    BruhatRestrictedPattern,
    ClassicalPattern,
    IntervalPattern,
    MarkedMeshPattern,
    MarkedRegion,
    MeshPattern,
    Pattern,
    PatternSyntaxError,
    format_pattern,
    format_perm,
    parse_pattern,
)
from .perms import (
    Perm,
    all_perms,
    apply_symmetry,
    bruhat_leq,
    complement,
    covers,
    cycle_type,
    descents,
    insert,
    inverse,
    inversions,
    non_inversions,
    perm,
    reverse,
)
from .schubert import (
    is_123_hexagon_avoiding,
    is_boolean,
    is_dbi,
    is_factorial,
    is_gorenstein,
    is_smooth,
)
from .translate import (
    barred_to_meshes,
    bivincular_to_mesh,
    bruhat_to_mesh,
    interval_to_mesh,
    to_mesh,
)
from .verify import SUITES, SuiteResult, run_suite

__version__ = "0.1.0"

__all__ = [
    "BarredPattern",
    "BivincularPattern",
    "BruhatRestrictedPattern",
    "ClassicalPattern",
    "CornerReport",
    "IntervalPattern",
    "MarkedMeshPattern",
    "MarkedRegion",
    "MeshPattern",
    "Occurrence",
    "Pattern",
    "PatternSyntaxError",
    "Perm",
    "SUITES",
    "SpecialStatistics",
    "SuiteResult",
    "all_perms",
    "apply_symmetry",
    "associated_grassmannian",
    "avoids",
    "avoids_all",
    "barred_to_meshes",
    "bivincular_to_mesh",
    "bruhat_leq",
    "bruhat_to_mesh",
    "complement",
    "contains",
    "corner_report",
    "count_occurrences",
    "covers",
    "cycle_type",
    "descents",
    "format_pattern",
    "format_perm",
    "gamma_word",
    "grassmannian_from_partition",
    "grassmannian_perms",
    "insert",
    "interval_to_mesh",
    "inverse",
    "inversions",
    "is_123_hexagon_avoiding",
    "is_balanced",
    "is_baxter",
    "is_boolean",
    "is_dbi",
    "is_dumont_first",
    "is_dumont_second",
    "is_factorial",
    "is_freely_braided",
    "is_gorenstein",
    "is_grassmannian",
    "is_simsun",
    "is_smooth",
    "is_two_cycle",
    "non_inversions",
    "occurrences",
    "parse_pattern",
    "perm",
    "reverse",
    "run_suite",
    "special_statistics",
    "to_mesh",
]
