"""Exact enumeration, bijection verification and polynomial certification for
type B set partitions and the signed permutations obtained by flattening them.

The heavy lifting lives in the compiled extension ``typeb._typeb``; this
package re-exports its surface.
"""

from ._typeb import (
    TypeBPartition,
    apply_map,
    certify_interleaves,
    certify_real_rooted,
    classify_word,
    des_gamma,
    enumerate_class,
    flatten,
    format,
    gamma_vector,
    homomesy,
    normalize,
    oeis_check,
    orbits_summary,
    parse,
    partition_to_word,
    perm_stats,
    poly,
    sequence,
    stats,
    table,
    verify_bijection,
    word_to_partition,
)

__all__ = [
    "TypeBPartition",
    "apply_map",
    "certify_interleaves",
    "certify_real_rooted",
    "classify_word",
    "des_gamma",
    "enumerate_class",
    "flatten",
    "format",
    "gamma_vector",
    "homomesy",
    "normalize",
    "oeis_check",
    "orbits_summary",
    "parse",
    "partition_to_word",
    "perm_stats",
    "poly",
    "sequence",
    "stats",
    "table",
    "verify_bijection",
    "word_to_partition",
]
