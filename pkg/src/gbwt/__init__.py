"""Context-adaptive Burrows-Wheeler transforms.

Forward transform, pattern counting and inversion for every member of the
family (a per-context alphabet ordering), with linear-time fast paths for
orderings that depend only on the last context symbol, and a dynamic program
finding the member that minimises the number of runs.
"""

from .errors import (
    AlphabetTooLarge, ByteOutsideAlphabet, EmptyPattern, EmptyString, GBWTError,
    InstanceTooLarge, MalformedInput, NotEnoughOccurrences, NotPrimitive, RowOutOfRange,
    SchemeFormatError, SentinelByteClash, WrongSchemeKind,
)
from .formats import TransformFile, format_scheme, parse_scheme, read_scheme, write_scheme
from .inversion import invert, invert_generic, invert_local, next_char, shift_row
from .oracles import NaiveMatrix, naive_circular_count, naive_matrix, naive_range
from .orderings import (
    Alphabet, ContextAutomaton, Kind, OrderingScheme, Permutation, compare_rotations,
    ordering_for_context, reverse,
)
from .query import (
    EMPTY, QueryIndex, Range, RangeX, child_ranges, count, count_generic, count_local,
    extend, local_backward_extend, rangex_of_symbol,
)
from .rankselect import SequenceIndex
from .runmin import OptimalResult, count_runs, entropy0, exhaustive_min_runs, min_runs
from .transform import (
    RotationTrie, TransformOutput, build_rotation_trie, is_primitive, transform,
    transform_fast, transform_naive,
)

__version__ = "0.1.0"
