"""quadff: class numbers of quadratic extensions of rational function fields.

Computes zeta L-polynomials, class numbers, and place counts for quadratic
extensions of F_q(x) in which the infinite place ramifies (q = 2..9 a prime
power), tests whether the ideal class group has exponent two, and searches
those fields exhaustively for every attainable class number h in
{2, 4, 8, 16, 32}.

Quick tour::

    >>> import quadff as qf
    >>> F = qf.field_of_order(3)
    >>> m = qf.parse_curve(F, "y^2 = 2*(x+2)*(x^2+1)*(x^2+x+2)")
    >>> qf.class_number(m)
    4
    >>> qf.classification_record(m).exponent_two
    True
    >>> cell = qf.search_cell(3, 2, 4)
    >>> len(cell.classes)
    2
"""
from .classify import (ClassificationRecord, canonical_key, canonical_model,
                       classification_record, even_normal_form,
                       exponent_two_class_number, is_exponent_two,
                       is_same_field, odd_normal_form, two_rank)
from .curve import (DEGENERATE, OUT_OF_SCOPE, EvenModel, Model, ModelError,
                    OddModel, from_char2_equation, from_odd_equation,
                    least_nonsquare, make_even_model, normalize_u,
                    parse_curve)
from .fqpoly import (Poly, count_irreducible, factor, irreducible_polys,
                     is_irreducible, parse_poly)
from .gf import FiniteField, field, field_of_order
from .reference import (CORRECTED, MISCOMPUTED, REFERENCE_CELL_COUNTS,
                        REFERENCE_CLASSES, REFERENCE_TOTALS, ReferenceEntry,
                        reference_cell_count)
from .search import (EXCLUDED_BY_BOUND, FEASIBLE, CellResult, ClassRecord,
                     classification_table, expected_cell_target,
                     feasible_cases, full_classification, s_bound,
                     s_bound_sign, search_cell)
from .zeta import (ZetaData, class_number, closed_form_class_number,
                   hasse_weil_ok, l_from_point_counts, l_polynomial,
                   place_counts, point_count, point_counts,
                   predicted_point_count, rh_deviation, satisfies_rh,
                   weil_lower_bound_ok, zeta_property_violations,
                   zeta_report)

__version__ = "0.1.0"

__all__ = [
    "FiniteField", "field", "field_of_order",
    "Poly", "parse_poly", "factor", "is_irreducible", "irreducible_polys",
    "count_irreducible",
    "Model", "OddModel", "EvenModel", "ModelError", "DEGENERATE",
    "OUT_OF_SCOPE", "from_odd_equation", "from_char2_equation",
    "make_even_model", "normalize_u", "parse_curve", "least_nonsquare",
    "point_count", "point_counts", "place_counts", "l_from_point_counts",
    "l_polynomial", "class_number", "predicted_point_count",
    "closed_form_class_number", "rh_deviation", "satisfies_rh",
    "hasse_weil_ok", "weil_lower_bound_ok", "zeta_property_violations",
    "ZetaData", "zeta_report",
    "two_rank", "exponent_two_class_number", "is_exponent_two",
    "ClassificationRecord", "classification_record", "odd_normal_form",
    "even_normal_form", "canonical_key", "canonical_model", "is_same_field",
    "FEASIBLE", "EXCLUDED_BY_BOUND", "feasible_cases", "s_bound",
    "s_bound_sign", "search_cell", "full_classification",
    "classification_table", "ClassRecord", "CellResult",
    "expected_cell_target",
    "ReferenceEntry", "REFERENCE_CLASSES", "REFERENCE_CELL_COUNTS",
    "REFERENCE_TOTALS", "MISCOMPUTED", "CORRECTED", "reference_cell_count",
]
