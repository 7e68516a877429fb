"""Decide whether the bicircular matroid of a multigraph is the frame
matroid of some signed graph, constructively and with machine-checked
certificates for both verdicts."""

from .multigraph import (Multigraph, Pattern, Embedding, ReductionLog,
                         canonical_form, components, blocks, classify_block,
                         contains_subdivision, enumerate_connected,
                         is_isomorphic, is_series_parallel, parse_graph,
                         reduce, replay, write_graph)
from .matroid import (OracleMatroid, MinorWitness, GroundTooLarge, circuits,
                      contract, delete, direct_sum, has_uniform_minor,
                      is_isomorphic_matroid, rank, uniform)
from .bicircular import NotACircuit, bicircular, bicircular_rank, classify_circuit
from .signed import (GF3Matrix, NotACircle, SignedGraph, all_positive,
                     circle_sign, frame, frame_rank, gf3_incidence,
                     gf3_independent, parse_signed, write_signed)
from .decider import (Condition4Report, ConditionFailed, DecideResult,
                      InternalInconsistency, Obstruction, SignedWitness,
                      check_condition4, check_condition5, decide,
                      matthews_condition4, parse_certificate,
                      synthesize_sigma, verify_certificate, write_certificate)
from .miner import ObstructionSet, group_dotted, mine, parse_patterns, sanity

__version__ = "0.1.0"
