# main.py
import logging
import time

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

import config
from errors import LieTheoryError
from lie_routes import router as lie_router
from middlewares import combined_logger_and_limiter

config.configure_logging()
logger = logging.getLogger(__name__)

app = FastAPI(
    title="Abelian Subalgebra Atlas Service",
    version="1.0.0",
    description="Root systems, abelian B_0-stable subalgebras of symmetric pairs and their sphericity",
)

# Request logging and sweep rate limiting
app.middleware("http")(combined_logger_and_limiter)

app.include_router(lie_router)

start_time = time.time()


# ============== SYSTEM ROUTES ==============

@app.get("/health")
def health_check():
    """Health check endpoint"""
    return {"status": "ok", "timestamp": time.time()}


@app.get("/info")
def system_info():
    """Service information"""
    return {
        "service": "abelian_subalgebra_atlas",
        "version": "1.0.0",
        "uptime_seconds": round(time.time() - start_time, 2),
        "limits": {
            "level_bound": config.LEVEL_BOUND,
            "max_rank": config.MAX_RANK,
            "rate_limit": config.RATE_LIMIT,
            "window": config.WINDOW,
        },
    }


# Error handlers
@app.exception_handler(LieTheoryError)
async def lie_theory_exception_handler(request: Request, exc: LieTheoryError):
    """Library errors carry their own status code"""
    if exc.status_code >= 500:
        logger.error(f"{request.url.path}: {type(exc).__name__}: {exc.detail}")
    return JSONResponse(status_code=exc.status_code, content=exc.to_dict())
