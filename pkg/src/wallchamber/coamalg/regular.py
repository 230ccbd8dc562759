"""The regular structure of a tame hereditary algebra as a product of Nakayama structures."""
from fractions import Fraction
from typing import List

from .product import CoamalgProduct, Factor, Functional, coamalg
from ..exactgeom.arrangement import covers, verify_wall_chamber
from ..exactgeom.cone import LabeledCone
from ..exactgeom.linalg import inverse, mat_vec, rref
from ..exceptions import InvariantViolation
from ..nakayama.domains import domain
from ..nakayama.modules import NakModule, bricks, dim_vector
from ..quivercore.model import HereditaryModel
from ..tame.domains import d_reg_eta, regular_domain, regular_space, regular_walls
from ..tame.tubes import TubeData, TubeModule
from ..utils.report import make_report, merge_reports, record_violation
from ..utils.types import RatMatrix


def nakayama_factor(r: int) -> Factor:
    """The walls of Lambda_r glued along the functional (-).(1, ..., 1)."""
    return Factor(cones=tuple(domain(r, brick) for brick in bricks(r)), functional=Functional((1,) * r))


def regular_product(td: TubeData, display_progress: bool = False) -> CoamalgProduct:
    return coamalg([nakayama_factor(tube.rank) for tube in td.tubes], display_progress=display_progress)


def regular_coordinates(td: TubeData) -> RatMatrix:
    """Rows are the quasi-simple dimension vectors, tube by tube: w -> (w.dim X^i_{j,1})_{i,j}."""
    return tuple(d for tube in td.tubes for d in tube.quasi_simple_dims)


def psi_iso(model: HereditaryModel, td: TubeData) -> RatMatrix:
    """
    Matrix (n x sum r_i) of the isomorphism from Delta onto g(eta)^perp.

    A point x of Delta is sent to the unique w in g(eta)^perp with w.dim X^i_{j,1} = x^i_j, so that
    w.dim X^i_{j,l} is the sum of the coordinates x^i_j, ..., x^i_{j+l-1} that define D(Y^i_{j,l}).
    Coordinates whose quasi-simple is dependent on the earlier ones get a zero column.
    """
    if td.eta != model.eta or td.g_eta != model.g_eta:
        raise ValueError(f"The tube data does not belong to '{model.quiver}'!")
    coordinates = regular_coordinates(td)
    _, pivots = rref([model.g_eta] + list(coordinates), model.n)
    if len(pivots) != model.n:
        raise InvariantViolation("The quasi-simples and g(eta) do not span R^n.")

    # Choose n - 1 independent quasi-simple rows; with g(eta) they form an invertible system.
    chosen: List[int] = []
    for index in range(len(coordinates)):
        candidate = [model.g_eta] + [coordinates[k] for k in chosen + [index]]
        if len(rref(candidate, model.n)[1]) == len(candidate):
            chosen.append(index)
        if len(chosen) == model.n - 1:
            break
    system_inverse = inverse([model.g_eta] + [coordinates[k] for k in chosen])
    columns = []
    for index in range(len(coordinates)):
        if index in chosen:
            columns.append(tuple(row[1 + chosen.index(index)] for row in system_inverse))
        else:
            columns.append((Fraction(0),) * model.n)
    return tuple(tuple(column[row] for column in columns) for row in range(model.n))


def _product_walls(product: CoamalgProduct, td: TubeData) -> List[LabeledCone]:
    walls = []
    for index, tube in enumerate(td.tubes):
        offset = product.offsets[index]
        for brick in bricks(tube.rank):
            label = [Fraction(0)] * product.ambient_dim
            label[offset : offset + tube.rank] = dim_vector(tube.rank, brick)
            walls.append(
                LabeledCone(
                    cone=product.lift(index, domain(tube.rank, brick)),
                    label=tuple(label),
                    module_id=f"{index + 1}:{brick.label()}",
                )
            )
    return walls


def verify_thm_b(model: HereditaryModel, td: TubeData, display_progress: bool = False):
    """
    Check that Psi carries the product of the Nakayama structures onto the regular structure.

    The report has three parts: wall_images (each lifted Nakayama domain maps onto the regular domain of
    the matching tube brick), chambers (chamber counts and chamber images agree) and null_decomposition
    (the null wall is the union of the domains of the quasi-length r_i bricks, in both pictures).
    """
    product = regular_product(td, display_progress=display_progress)
    psi = psi_iso(model, td)
    coordinates = regular_coordinates(td)

    wall_images = make_report()
    for basis_vector in product.delta_basis:
        if mat_vec(coordinates, mat_vec(psi, basis_vector)) != basis_vector:
            record_violation(wall_images, "psi_inverse", vector=list(basis_vector))
    for index, tube in enumerate(td.tubes):
        for brick in bricks(tube.rank):
            image = product.lift(index, domain(tube.rank, brick)).linear_image(psi)
            expected = regular_domain(td, TubeModule(tube=index + 1, socle=brick.socle, qlen=brick.length))
            if image != expected:
                record_violation(wall_images, "wall_image", tube=index + 1, module=brick.label())

    product_structure = verify_wall_chamber(
        _product_walls(product, td), space=product.delta(), check_closure=False, display_progress=display_progress
    )
    regular_structure = verify_wall_chamber(
        regular_walls(model, td), space=regular_space(td), check_closure=False, display_progress=display_progress
    )
    chambers = make_report(
        product_chamber_count=len(product_structure.chambers),
        regular_chamber_count=len(regular_structure.chambers),
    )
    if len(product_structure.chambers) != len(regular_structure.chambers):
        record_violation(chambers, "chamber_count")
    if {chamber.linear_image(psi) for chamber in product_structure.chambers} != set(regular_structure.chambers):
        record_violation(chambers, "chamber_image")

    null_decomposition = make_report()
    null_wall = d_reg_eta(model, td)
    null_preimage = null_wall.pullback(psi).intersection(product.delta())
    for index, tube in enumerate(td.tubes):
        top_bricks = [NakModule(socle=j, length=tube.rank) for j in range(1, tube.rank + 1)]
        pieces = [regular_domain(td, TubeModule(index + 1, brick.socle, brick.length)) for brick in top_bricks]
        if not all(null_wall.contains_cone(piece) for piece in pieces) or not covers(null_wall, pieces):
            record_violation(null_decomposition, "regular_union", tube=index + 1)
        lifted = [product.lift(index, domain(tube.rank, brick)) for brick in top_bricks]
        if not covers(null_preimage, lifted):
            record_violation(null_decomposition, "product_union", tube=index + 1)

    return merge_reports(
        [
            ("wall_images", wall_images),
            ("product_structure", product_structure.report),
            ("regular_structure", regular_structure.report),
            ("chambers", chambers),
            ("null_decomposition", null_decomposition),
        ],
        quiver=model.quiver.to_text(),
        ranks=list(td.ranks),
    )
