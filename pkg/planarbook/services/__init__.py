"""Service layer: the open book, surgery and lattice algorithms."""

from .documents import (
    parse_form,
    parse_openbook,
    parse_surgery,
    print_form,
    print_openbook,
    print_surgery,
)
from .invariants import (
    d2_difference,
    d3_invariant,
    first_homology,
    homotopy_data,
    presents_homology_sphere,
    same_homotopy_class,
    search_records,
)
from .lattice import (
    direct_sum,
    inertia,
    is_diagonalizable,
    legendrian_filling_form,
    make_form,
    negative_e8,
    planar_support_verdict,
    short_vectors,
)
from .openbooks import (
    append_twist,
    identity_open_book,
    murasugi_sum,
    negative_stabilization,
    positive_stabilization,
    relabel_holes,
    stabilize_for_legendrian,
    stabilize_once_for_legendrian,
    start_tracking,
)
from .pages import curve_class, is_laminar_family, laminar_pair, make_curve, make_page, relabel_curve
from .presentation import contact_surgery_on_page_curve, lutz_twist, to_linking_presentation
from .realization import block_half, block_neg_three_half, plan_d3_steps, realize_overtwisted
from .records import split_union, stabilize_legendrian_record, topological_linking_matrix

__all__ = [
    "append_twist",
    "block_half",
    "block_neg_three_half",
    "contact_surgery_on_page_curve",
    "curve_class",
    "d2_difference",
    "d3_invariant",
    "direct_sum",
    "first_homology",
    "homotopy_data",
    "identity_open_book",
    "inertia",
    "is_diagonalizable",
    "is_laminar_family",
    "laminar_pair",
    "legendrian_filling_form",
    "lutz_twist",
    "make_curve",
    "make_form",
    "make_page",
    "murasugi_sum",
    "negative_e8",
    "negative_stabilization",
    "parse_form",
    "parse_openbook",
    "parse_surgery",
    "plan_d3_steps",
    "planar_support_verdict",
    "positive_stabilization",
    "presents_homology_sphere",
    "print_form",
    "print_openbook",
    "print_surgery",
    "realize_overtwisted",
    "relabel_curve",
    "relabel_holes",
    "same_homotopy_class",
    "search_records",
    "short_vectors",
    "split_union",
    "stabilize_for_legendrian",
    "stabilize_legendrian_record",
    "stabilize_once_for_legendrian",
    "start_tracking",
    "to_linking_presentation",
    "topological_linking_matrix",
]
