# middlewares.py
import logging
from typing import Optional

import redis
from fastapi import Request
from fastapi.responses import JSONResponse

import config

logger = logging.getLogger(__name__)

# Sweeps are the expensive routes
RATE_LIMITED_PREFIX = "/sweeps"


def connect_redis() -> Optional[redis.Redis]:
    """Shared counter store for the rate limiter; None when Redis is unreachable"""
    try:
        client = redis.Redis(
            host=config.REDIS_HOST,
            port=config.REDIS_PORT,
            decode_responses=True,
            socket_connect_timeout=5,
            socket_timeout=5,
            retry_on_timeout=True,
            health_check_interval=30,
        )
        client.ping()
        logger.info(f"Redis connection established at {config.REDIS_HOST}:{config.REDIS_PORT}")
        return client
    except redis.RedisError as e:
        logger.error(f"Redis connection failed: {e}")
        return None


r = connect_redis()


def get_client_ip(request: Request) -> str:
    """Extract client IP with proper forwarded header handling"""
    forwarded_for = request.headers.get("X-Forwarded-For")
    if forwarded_for:
        return forwarded_for.split(",")[0].strip()

    real_ip = request.headers.get("X-Real-IP")
    if real_ip:
        return real_ip

    return request.client.host if request.client else "unknown"


def hit(client: redis.Redis, key: str) -> bool:
    """Count one request against key; False once RATE_LIMIT is reached inside WINDOW"""
    current = client.get(key)
    if current:
        try:
            if int(current) >= config.RATE_LIMIT:
                return False
        except ValueError:
            logger.error(f"Redis has invalid value for key {key}, resetting...")
            client.delete(key)

    pipe = client.pipeline()
    pipe.incr(key, 1)
    pipe.expire(key, config.WINDOW)
    pipe.execute()
    return True


async def combined_logger_and_limiter(request: Request, call_next):
    method = request.method
    path = request.url.path
    ip = get_client_ip(request)

    logger.info(f"{method} {path} from {ip}")

    if path.startswith(RATE_LIMITED_PREFIX):
        if r is None:
            logger.warning("Redis unavailable, skipping rate limiting")
        else:
            key = f"rate:{ip}:{path}"
            try:
                if not hit(r, key):
                    logger.warning(f"Rate limit exceeded for {ip} on {path}")
                    return JSONResponse(
                        status_code=429,
                        content={
                            "detail": f"Too Many Requests. Try again in {config.WINDOW} seconds.",
                            "retry_after": config.WINDOW,
                        },
                    )
            except redis.RedisError as e:
                logger.error(f"Redis error during rate limiting: {e}")

    try:
        response = await call_next(request)
        logger.info(f"{method} {path} - Status: {response.status_code}")
        return response
    except Exception as e:
        logger.error(f"Error processing request {method} {path}: {e}")
        raise
