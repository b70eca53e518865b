"""Grothendieck groups of finitely presented n-exangulated categories.

Compute ``K0`` from objects and conflations, and, for odd n with an
n-(co)generator, list the dense complete subcategories through the
subgroups of ``K0`` that contain the image of the generator.
"""

from importlib import resources

from .abgroup import (FinGenAbGroup, IntMatrix, SmithDecomposition, Subgroup, cokernel,
                      enumerate_subgroups_containing, hnf_columns, smith_normal_form,
                      subgroup_contains, subgroup_from_generators)
from .catmodel import (CategoryPresentation, Conflation, Diagnostic, ObjectExpr, direct_sum,
                       sum_conflations, trivial_conflation, validate, witness_for_object)
from .classify import (ExtensionalSubcategory, GSWitness, SubcategoryHandle, classify_all,
                       f_member, g_subgroup, gs_witness, roundtrip_fg, roundtrip_gf,
                       verify_complete, verify_dense)
from .dsl import SourceDocument, format_presentation, load, parse, parse_object
from .errors import (EvenN, ExK0Error, InfiniteQuotient, InvalidPresentation, MissingWitness,
                     QuotientTooLarge)
from .grothendieck import (GrothendieckGroup, K0Element, class_of, compute_k0, euler_vector,
                           express_as_difference, h_g)

FIXTURES = ("a2", "a2co", "even", "free3", "n3gen", "pentagon", "v4")


def fixture_text(name):
    return resources.files(__package__).joinpath("fixtures", f"{name}.cat").read_text("utf-8")


def load_fixture(name):
    """Presentation shipped with the package, e.g. ``load_fixture("a2")``."""
    doc = parse(fixture_text(name))
    if not doc.ok:
        raise InvalidPresentation(doc.diagnostics)
    return doc.presentation
