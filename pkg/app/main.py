import logging
from contextlib import asynccontextmanager

from fastapi import FastAPI

from app.config import configure_logging, settings
from app.api.v1.tiles import router as tiles_router
from app.api.v1.tessellations import router as tessellations_router
from app.api.v1.macro import router as macro_router
from app.api.v1.automata import router as automata_router

logger = logging.getLogger(__name__)


@asynccontextmanager
async def lifespan(app: FastAPI):
    configure_logging()
    logger.info(f"Starting {settings.PROJECT_NAME} ({settings.ENVIRONMENT})")

    yield

    logger.info(f"Shutting down {settings.PROJECT_NAME}")


app = FastAPI(
    title=settings.PROJECT_NAME,
    lifespan=lifespan,
)

app.include_router(tiles_router, prefix="/api/v1", tags=["tiles"])
app.include_router(tessellations_router, prefix="/api/v1", tags=["tessellations"])
app.include_router(macro_router, prefix="/api/v1", tags=["macro-micro"])
app.include_router(automata_router, prefix="/api/v1", tags=["automata"])


@app.get("/health")
async def health_check():
    return {
        "status": "healthy",
        "message": f"{settings.PROJECT_NAME} is running",
    }
