from fastapi import APIRouter

from app.api.v1.tessellations import build_tessellation, service_error
from app.exceptions import MulticubeError
from app.models.lattice import Prebasis
from app.schemas.tessellation import MacroRequest, PatchSchema
from app.services.macro_service import derived_prebasis, macrotile, microtile
from app.services.tessellation_service import extract_patch

router = APIRouter()


@router.post("/macro", response_model=PatchSchema)
async def macro_patch(request: MacroRequest):
    """
    Macrotile a tessellation over `prebasis` and cut out a box of the result.
    The box lives in the column space of the matrix.
    """
    try:
        f = build_tessellation(request)
        g = macrotile(f, request.matrix.to_model())
        return PatchSchema.from_model(extract_patch(g, tuple(request.lo), tuple(request.hi)))
    except MulticubeError as e:
        raise service_error(e)


@router.post("/micro", response_model=PatchSchema)
async def micro_patch(request: MacroRequest):
    """
    Microtile a tessellation over n^A back onto `prebasis` = n.
    The rational or diagonal describes the coarse tessellation.
    """
    try:
        n = Prebasis(tuple(request.prebasis))
        A = request.matrix.to_model()
        g = build_tessellation(request, derived_prebasis(n, A))
        f = microtile(g, n, A)
        return PatchSchema.from_model(extract_patch(f, tuple(request.lo), tuple(request.hi)))
    except MulticubeError as e:
        raise service_error(e)
