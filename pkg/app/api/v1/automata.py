from fastapi import APIRouter

from app.api.v1.tessellations import service_error
from app.exceptions import MulticubeError
from app.models.automata import TraceQuery
from app.schemas.automata import (
    ConvertRequest,
    RunRequest,
    RunResponse,
    TraceRequest,
    TraceResponse,
)
from app.schemas.digits import DigitConfigSchema
from app.services.automata_service import run, trace_words
from app.services.conjugacy_service import conj, fact
from app.services.exact_arith import real_of_config
from app.utils.parsing import parse_multiplier

router = APIRouter()


@router.post("/automata/run", response_model=RunResponse)
async def run_automaton(request: RunRequest):
    """
    Space-time rows of Mul_{alpha,N}.

    - **rule**: "p/q@N"
    - **config**: starting digit configuration in base N
    - **steps**: number of applications
    """
    try:
        rows = run(parse_multiplier(request.rule), request.config.to_model(), request.steps)
    except MulticubeError as e:
        raise service_error(e)
    return RunResponse(
        rule=request.rule,
        rows=[DigitConfigSchema.from_model(x) for x in rows],
        values=[str(real_of_config(x)) for x in rows],
    )


@router.post("/automata/convert", response_model=DigitConfigSchema)
async def convert_config(request: ConvertRequest):
    try:
        x = request.config.to_model()
        converted = conj(x, request.target) if request.mode == "conj" else fact(x, request.target)
    except MulticubeError as e:
        raise service_error(e)
    return DigitConfigSchema.from_model(converted)


@router.post("/automata/trace", response_model=TraceResponse)
async def enumerate_traces(request: TraceRequest):
    try:
        query = TraceQuery(
            multiplier=parse_multiplier(request.rule),
            width=request.width,
            horizon=request.horizon,
        )
        words = trace_words(query)
    except MulticubeError as e:
        raise service_error(e)
    return TraceResponse(
        rule=request.rule,
        width=request.width,
        horizon=request.horizon,
        count=len(words),
        words=[[list(frame) for frame in word] for word in words],
    )
