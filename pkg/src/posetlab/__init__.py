"""posetlab: a laboratory for poset dimension.

Finite posets, exact Dushnik-Miller dimension, standard-example and
wheel/Kelly containment parameters, combinatorial plane embeddings of
cover graphs with left/right path machinery, treewidth and grid
certificates, and bound-verification suites over a fixed corpus.
"""

from .containment import (
    NotFound,
    contains_subposet,
    kelly_number,
    se,
    verify_embedding,
    wheel_number,
)
from .dimension import (
    Budget,
    DimResult,
    Refuted,
    dim_at_most,
    dim_exact,
    extension_reversing,
    is_reversible,
)
from .errors import BudgetExceeded, PosetlabError
from .families import (
    canonical_interval_order,
    interval_order,
    kelly,
    random_cover_planar_with_unique_min,
    standard_example,
    wheel,
    wheel_standard_example_labels,
)
from .graph_metrics import (
    TreeDecomposition,
    grid_graph,
    grid_minor,
    grid_subgraph,
    treewidth_exact,
    validate_decomposition,
    verify_grid_minor,
    verify_grid_subgraph,
    wheel_grid_certificate,
)
from .harness import (
    Instance,
    SuiteReport,
    build_corpus,
    default_manifest,
    verify_height_bound,
    verify_grid_bound,
    verify_minimal_tw_bound,
    verify_wheel_bound,
)
from .planar import (
    NonPlanarWitness,
    PlaneEmbedding,
    canonical_wheel_embedding,
    cover_graph,
    embed_anchored,
    embedding_from_dict,
    embedding_to_dict,
    is_planar,
    side_partition,
    u_e_ordering,
)
from .poset import (
    LinearExtension,
    Poset,
    Realizer,
    is_linear_extension,
    lift_extension,
    linear_extension_of,
    verify_realizer,
)
from .witness import (
    CertificateReport,
    Interval,
    IntervalCertificate,
    classify_pair,
    compare_paths,
    hat_partition,
    interval_witnessing_path,
    leftmost_witnessing_path,
    make_interval,
    pair_separation_check,
    rightmost_witnessing_path,
    separating_path,
    shadowing_check,
    side_of_path,
    verify_interval_certificate,
    witnessing_path,
)

__version__ = "0.1.0"
