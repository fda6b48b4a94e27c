import logging
from fractions import Fraction
from typing import Optional

from fastapi import APIRouter, HTTPException, status

from app.exceptions import EnumerationBoundError, MulticubeError
from app.models.lattice import Prebasis
from app.models.tessellation import Tessellation
from app.schemas.tessellation import (
    IntegralResponse,
    IntegrateRequest,
    LabelRequest,
    LabelResponse,
    PatchRequest,
    PatchSchema,
    RealPartsRequest,
    RealPartsResponse,
    TessellationSource,
    ValidityResponse,
    ViolationSchema,
)
from app.services.tessellation_service import (
    extract_patch,
    from_rational,
    is_valid_patch,
    label,
    path_integral,
    real_parts,
    tessellation,
)

logger = logging.getLogger(__name__)

router = APIRouter()


def build_tessellation(source: TessellationSource, prebasis: Optional[Prebasis] = None) -> Tessellation:
    """Tessellation named by a request; `prebasis` overrides the request's own."""
    n = prebasis or Prebasis(tuple(source.prebasis))
    if source.rational is not None:
        return from_rational(n, Fraction(source.rational))
    return tessellation(n, source.diagonal.to_model())


def service_error(e: MulticubeError) -> HTTPException:
    if isinstance(e, EnumerationBoundError):
        return HTTPException(status_code=status.HTTP_413_REQUEST_ENTITY_TOO_LARGE, detail=str(e))
    logger.error(f"Request rejected: {e}")
    return HTTPException(status_code=status.HTTP_422_UNPROCESSABLE_ENTITY, detail=str(e))


@router.post("/tessellations/patch", response_model=PatchSchema)
async def create_patch(request: PatchRequest):
    """
    Cubes of a tessellation over a box.

    - **prebasis**: e.g. [2, 5]
    - **rational** or **diagonal**: the value or diagonal backing the tiling
    - **lo**, **hi**: inclusive box corners
    """
    try:
        f = build_tessellation(request)
        return PatchSchema.from_model(extract_patch(f, tuple(request.lo), tuple(request.hi)))
    except MulticubeError as e:
        raise service_error(e)


@router.post("/tessellations/label", response_model=LabelResponse)
async def get_label(request: LabelRequest):
    try:
        f = build_tessellation(request)
        return LabelResponse(label=str(label(f, tuple(request.start), tuple(request.end))))
    except MulticubeError as e:
        raise service_error(e)


@router.post("/tessellations/real-parts", response_model=RealPartsResponse)
async def get_real_parts(request: RealPartsRequest):
    try:
        f = build_tessellation(request)
        parts = real_parts(f, tuple(request.point), tuple(request.direction))
    except MulticubeError as e:
        raise service_error(e)
    return RealPartsResponse(
        fractional=str(parts.fractional),
        integral=str(parts.integral),
        real=str(parts.real),
    )


@router.post("/patches/verify", response_model=ValidityResponse)
async def verify_patch(patch: PatchSchema):
    report = is_valid_patch(patch.to_model())
    return ValidityResponse(
        valid=report.valid,
        violations=[ViolationSchema(pos=list(z), axis=axis) for z, axis in report.violations],
    )


@router.post("/patches/integrate", response_model=IntegralResponse)
async def integrate_patch(request: IntegrateRequest):
    """Path integral over a (possibly partial) patch."""
    try:
        path = request.path.to_model()
        value = path_integral(request.patch.to_model(), path)
    except MulticubeError as e:
        raise service_error(e)
    return IntegralResponse(value=str(value), closed=path.is_closed)
