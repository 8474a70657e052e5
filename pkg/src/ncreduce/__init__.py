"""Reduction of m-regular set partitions and its bijections."""

from .arcs import ArcDiagram, from_partition, has_crossing, is_independent, render_ascii, to_partition
from .enumeration import (
    FamilyFilter,
    binomial,
    catalan,
    count_family,
    generate,
    narayana,
    poor_noncrossing_closed,
    stirling2,
)
from .errors import (
    InvalidDiagram,
    InvalidGrowth,
    InvalidPath,
    NotNoncrossing,
    NotReducible,
    NotTwoRegular,
    ParseError,
    PartitionError,
)
from .identities import VerificationReport, rna_table, verify_eq2, verify_eq3, verify_eq5, verify_motzkin, verify_narayana
from .motzkin import TwoMotzkinPath, diagram_to_path, partition_to_path, path_to_diagram, path_to_partition, validate_path
from .partitions import (
    INFINITY,
    CanonicalSequence,
    SetPartition,
    format_partition,
    from_canonical,
    is_abab_free,
    is_m_regular,
    is_noncrossing,
    is_poor,
    parse_partition,
    regularity,
    to_canonical,
)
from .reduction import (
    expand_arcs,
    expand_independent,
    expand_partition,
    reduce_arcs,
    reduce_noncrossing,
    reduce_partition,
)

__version__ = "0.1.0"
