from fastapi import APIRouter, HTTPException, Query, Response, status

from app.exceptions import MulticubeError
from app.schemas.cube import TileSetResponse
from app.services.render_service import render_service, tileset_payload
from app.utils.parsing import parse_prebasis

router = APIRouter()


@router.get("/tiles", response_model=TileSetResponse)
async def get_tiles(prebasis: str = Query(..., description="Comma-separated prebasis, e.g. 2,5")):
    """All multiplication cubes of T_n with every face label."""
    try:
        return tileset_payload(parse_prebasis(prebasis))
    except MulticubeError as e:
        raise HTTPException(status_code=status.HTTP_422_UNPROCESSABLE_ENTITY, detail=str(e))


@router.get("/tiles/svg")
async def get_tiles_svg(prebasis: str = Query(..., description="Comma-separated prebasis of dimension 1 or 2")):
    try:
        svg = render_service.tiles_svg(parse_prebasis(prebasis))
    except MulticubeError as e:
        raise HTTPException(status_code=status.HTTP_422_UNPROCESSABLE_ENTITY, detail=str(e))
    return Response(content=svg, media_type="image/svg+xml")
