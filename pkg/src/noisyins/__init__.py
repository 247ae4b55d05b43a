"""Codes for a DNA-storage insertion channel.

The channel inserts, any number of times, a copy or a complement of an
existing symbol right after it, plus at most one arbitrary symbol anywhere.
"""

from ._version import __version__
from .alphabet import Alphabet, Word, complement_symbol, complement_word, format_word, parse_word
from .analysis import (
    RateReport,
    bound_burst,
    bound_compsub,
    bound_final,
    bound_sirr,
    capacity_noisy,
    rate,
    rates_table,
)
from .channel import (
    ChannelTrace,
    Event,
    apply_trace,
    complement_insertion,
    cones_intersect,
    enumerate_ct_descendants,
    enumerate_noisy_descendants,
    is_ct_descendant_of_irreducible,
    random_insertion,
    sample_noisy_trace,
    tandem_duplication,
)
from .codebook import (
    Codebook,
    build_codebook,
    encode_index,
    residue_counts,
    scan_best,
    scan_best_params,
    word_to_index,
)
from .codes import (
    AscentProfile,
    BurstParams,
    CompSubParams,
    QvtParams,
    SvtParams,
    ascent_profile,
    burst_decode_insertion,
    burst_member,
    compsub_decode,
    compsub_member,
    deinterleave,
    interleave_rows,
    max_run_length,
    qvt_decode_insertion,
    qvt_member,
    rll_threshold,
    svt_decode_deletion,
    svt_decode_insertion,
    svt_member,
)
from .errors import DecodeError, DomainError, EnumerationLimitError
from .final import (
    DisjointnessReport,
    FinalParams,
    decode,
    decode_by_search,
    final_member,
    signature_edit,
    verify_disjoint_cones,
)
from .signature import Signature, compute_signature, count_irr, enumerate_irr, is_irreducible
