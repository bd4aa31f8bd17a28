from fastapi import APIRouter

from . import numeric, polynomials, relations, verification

router = APIRouter(prefix='/api')

router.include_router(polynomials.router)
router.include_router(relations.router)
router.include_router(verification.router)
router.include_router(numeric.router)
